//! Connected components, cycle rank and two-colorings.

use std::collections::VecDeque;

use crate::orbital::OrbitalGraph;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n], components: n }
    }

    /// Back to `n` singletons, reusing the allocation.
    pub fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n as u32);
        self.size.clear();
        self.size.resize(n, 1);
        self.components = n;
    }

    /// Copy another forest's state without reallocating.
    pub fn clone_from_forest(&mut self, other: &UnionFind) {
        self.parent.clone_from(&other.parent);
        self.size.clone_from(&other.size);
        self.components = other.components;
    }

    #[inline]
    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let gp = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
        x
    }

    /// Merge the sets of `a` and `b`; true if they were distinct.
    #[inline]
    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.components -= 1;
        true
    }

    #[inline]
    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }
}

/// Component label per vertex (labels numbered by smallest member) and the count.
pub fn component_labels(g: &OrbitalGraph) -> (usize, Vec<u32>) {
    let n = g.vertex_count();
    let mut label = vec![u32::MAX; n];
    let mut count = 0u32;
    let mut queue = VecDeque::new();
    for s in 0..n as u32 {
        if label[s as usize] != u32::MAX {
            continue;
        }
        label[s as usize] = count;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if label[w as usize] == u32::MAX {
                    label[w as usize] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (count as usize, label)
}

pub fn component_count(g: &OrbitalGraph) -> usize {
    let mut uf = UnionFind::new(g.vertex_count());
    for (u, v) in g.edges() {
        uf.union(u, v);
    }
    uf.component_count()
}

/// `(b0, b1)`: component count and cycle rank `|E| - |V| + b0` of the 1-skeleton.
pub fn betti(g: &OrbitalGraph) -> (usize, usize) {
    let b0 = component_count(g);
    (b0, g.edge_count() + b0 - g.vertex_count())
}

/// Proper two-coloring by BFS, or `None` when an odd cycle exists.
pub fn two_coloring(g: &OrbitalGraph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n as u32 {
        if color[s as usize] != u8::MAX {
            continue;
        }
        color[s as usize] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let c = color[v as usize];
            for &w in g.neighbors(v) {
                match color[w as usize] {
                    u8::MAX => {
                        color[w as usize] = 1 - c;
                        queue.push_back(w);
                    }
                    cw if cw == c => return None,
                    _ => {}
                }
            }
        }
    }
    Some(color)
}
