//! Brute-force reference implementations. Deliberately naive: adjacency
//! matrices, explicit vertex lists and full subset or sequence enumeration,
//! sharing no code with the library beyond `Graph::order`/`has_edge`.
#![allow(dead_code)]

pub mod checks;

use cyclelab::Graph;

pub struct Oracle {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Oracle {
        let n = g.order();
        let adj = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        Oracle { n, adj }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    /// Every simple path inside `allowed`, as a vertex sequence, both directions.
    pub fn paths_within(&self, allowed: &[bool]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for s in 0..self.n {
            if allowed[s] {
                let mut seq = vec![s];
                self.extend_paths(allowed, &mut seq, &mut out);
            }
        }
        out
    }

    fn extend_paths(&self, allowed: &[bool], seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(seq.clone());
        let last = *seq.last().unwrap();
        for v in 0..self.n {
            if allowed[v] && self.adj[last][v] && !seq.contains(&v) {
                seq.push(v);
                self.extend_paths(allowed, seq, out);
                seq.pop();
            }
        }
    }

    /// Every cycle inside `allowed` under the extended convention (single
    /// vertices and edges included), each as a sorted vertex list plus its
    /// order; duplicates by vertex sequence are harmless here.
    pub fn cycles_within(&self, allowed: &[bool]) -> Vec<Vec<usize>> {
        self.paths_within(allowed)
            .into_iter()
            .filter(|p| match p.len() {
                1 | 2 => true,
                _ => self.adj[p[0]][*p.last().unwrap()],
            })
            .collect()
    }

    pub fn longest_path_within(&self, allowed: &[bool]) -> usize {
        self.paths_within(allowed).iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn circumference_within(&self, allowed: &[bool]) -> usize {
        self.cycles_within(allowed).iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn all(&self) -> Vec<bool> {
        vec![true; self.n]
    }

    pub fn longest_path(&self) -> usize {
        self.longest_path_within(&self.all())
    }

    pub fn circumference(&self) -> usize {
        self.circumference_within(&self.all())
    }

    /// Vertex sets of all longest cycles, sorted and deduplicated.
    pub fn longest_cycle_sets(&self) -> Vec<Vec<usize>> {
        let c = self.circumference();
        let mut sets: Vec<Vec<usize>> = self
            .cycles_within(&self.all())
            .into_iter()
            .filter(|p| p.len() == c)
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        sets.sort();
        sets.dedup();
        sets
    }

    /// Number of distinct longest cycles up to rotation and reflection.
    pub fn longest_cycle_count(&self) -> usize {
        let c = self.circumference();
        let sequences = self
            .cycles_within(&self.all())
            .into_iter()
            .filter(|p| p.len() == c)
            .count();
        // A cycle of order k ≥ 3 appears as 2k directed rotations; an edge as 2; a vertex once.
        match c {
            0 => 0,
            1 => sequences,
            2 => sequences / 2,
            k => sequences / (2 * k),
        }
    }

    pub fn complement_of(&self, set: &[usize]) -> Vec<bool> {
        (0..self.n).map(|v| !set.contains(&v)).collect()
    }

    /// (p̄, c̄, largest component of G − set).
    pub fn residual(&self, set: &[usize]) -> (usize, usize, usize) {
        let rest = self.complement_of(set);
        (
            self.longest_path_within(&rest),
            self.circumference_within(&rest),
            self.largest_component_within(&rest),
        )
    }

    pub fn largest_component_within(&self, allowed: &[bool]) -> usize {
        let mut seen = vec![false; self.n];
        let mut best = 0;
        for s in 0..self.n {
            if !allowed[s] || seen[s] {
                continue;
            }
            let mut stack = vec![s];
            seen[s] = true;
            let mut size = 0;
            while let Some(u) = stack.pop() {
                size += 1;
                for v in 0..self.n {
                    if allowed[v] && !seen[v] && self.adj[u][v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            best = best.max(size);
        }
        best
    }

    fn subset(&self, mask: u32) -> Vec<usize> {
        (0..self.n).filter(|&v| mask >> v & 1 == 1).collect()
    }

    fn independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.adj[u][v]))
    }

    pub fn independence_number(&self) -> usize {
        (0u32..1 << self.n)
            .map(|m| self.subset(m))
            .filter(|s| self.independent(s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    /// σ_k, `None` when there is no independent k-set. σ_0 = 0.
    pub fn sigma(&self, k: usize) -> Option<u64> {
        (0u32..1 << self.n)
            .map(|m| self.subset(m))
            .filter(|s| s.len() == k && self.independent(s))
            .map(|s| s.iter().map(|&v| self.degree(v) as u64).sum())
            .min()
    }

    pub fn connected_within(&self, allowed: &[bool]) -> bool {
        let count = allowed.iter().filter(|&&b| b).count();
        count == 0 || self.largest_component_within(allowed) == count
    }

    /// Smallest vertex set whose removal disconnects the graph or leaves one vertex.
    pub fn connectivity(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        (0u32..1 << self.n)
            .map(|m| self.subset(m))
            .filter(|cut| {
                let rest = self.complement_of(cut);
                self.n - cut.len() <= 1 || !self.connected_within(&rest)
            })
            .map(|cut| cut.len())
            .min()
            .unwrap()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// D_λ by the alternative definition: every connected vertex set of
    /// order λ meets `set`.
    pub fn dominates_connected_sets(&self, set: &[usize], lambda: usize) -> bool {
        (0u32..1 << self.n).map(|m| self.subset(m)).all(|s| {
            if s.len() != lambda || s.iter().any(|v| set.contains(v)) {
                return true;
            }
            let allowed: Vec<bool> = (0..self.n).map(|v| s.contains(&v)).collect();
            !self.connected_within(&allowed)
        })
    }

    /// Every path of order ≥ λ meets `set`.
    pub fn dominates_paths(&self, set: &[usize], lambda: usize) -> bool {
        self.longest_path_within(&self.complement_of(set)) < lambda
    }

    /// Every cycle of order ≥ λ meets `set`.
    pub fn dominates_cycles(&self, set: &[usize], lambda: usize) -> bool {
        self.circumference_within(&self.complement_of(set)) < lambda
    }
}

/// graph6 encoder written from the format description: a bit string of the
/// upper triangle in column order, padded to a multiple of six.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while bits.len() % 6 != 0 {
        bits.push('0');
    }
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((v + 63) as char);
    }
    out
}

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        Graph::from_edges(n, (0..m).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b])).unwrap()
    })
}

/// Number of automorphisms, by trying every permutation.
pub fn automorphisms(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permute(&mut perm, 0, &mut |p| {
        if g.edges().all(|(u, v)| g.has_edge(p[u], p[v])) {
            count += 1;
        }
    });
    count
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
