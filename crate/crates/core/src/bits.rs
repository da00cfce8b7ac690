//! Helpers for vertex sets packed into a single `u64`.

/// A set of vertex ids `0..64`, one bit per vertex.
pub type VertexSet = u64;

#[inline]
pub const fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// The set `{0, .., n-1}`.
#[inline]
pub const fn full(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub const fn contains(set: VertexSet, v: usize) -> bool {
    set >> v & 1 == 1
}

#[inline]
pub fn len(set: VertexSet) -> usize {
    set.count_ones() as usize
}

/// Iterates the members of a set in increasing order.
#[derive(Clone, Copy, Debug)]
pub struct Members(VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub fn members(set: VertexSet) -> Members {
    Members(set)
}

pub fn from_iter<I: IntoIterator<Item = usize>>(vertices: I) -> VertexSet {
    vertices.into_iter().fold(0, |acc, v| acc | bit(v))
}
