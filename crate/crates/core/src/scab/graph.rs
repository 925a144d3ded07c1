use std::collections::VecDeque;

use crate::incidence::ProjectivePlane;

/// Simple bipartite graph. Left vertices are `0..left`, right vertices are
/// numbered `left..left+right` in the combined adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            left,
            right,
            adj: vec![Vec::new(); left + right],
        }
    }

    /// Points on the left, lines on the right.
    pub fn incidence(plane: &ProjectivePlane) -> Self {
        let n = plane.n();
        let mut g = BipartiteGraph::new(n, n);
        for l in 0..n {
            for p in plane.line(l).iter() {
                g.add_edge(p, l);
            }
        }
        g
    }

    /// Add `l - r` (part-local indices); repeated edges are ignored.
    pub fn add_edge(&mut self, l: usize, r: usize) {
        let rv = self.left + r;
        if !self.adj[l].contains(&rv) {
            self.adj[l].push(rv);
            self.adj[rv].push(l);
        }
    }

    pub fn left_len(&self) -> usize {
        self.left
    }

    pub fn right_len(&self) -> usize {
        self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.left + self.right
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.left].iter().map(Vec::len).sum()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.adj[l].contains(&(self.left + r))
    }

    /// Left neighbours of right vertex `r`.
    pub fn right_neighbors(&self, r: usize) -> &[usize] {
        &self.adj[self.left + r]
    }

    /// Combined adjacency lists.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }
}

/// Is `g` the incidence graph of a projective plane of order `q`?
pub fn verify_generalized_triangle(g: &BipartiteGraph, q: usize) -> bool {
    generalized_triangle_defect(g.adjacency(), q).is_none()
}

/// The first failed condition, or `None` if the graph is connected,
/// bipartite, of girth 6 and diameter 3, with parts of size `q²+q+1` and
/// every degree `q+1`.
pub fn generalized_triangle_defect(adj: &[Vec<usize>], q: usize) -> Option<String> {
    let v = adj.len();
    if v == 0 {
        return Some("empty graph".into());
    }
    let mut color = vec![u8::MAX; v];
    color[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if color[w] == u8::MAX {
                color[w] = 1 - color[u];
                queue.push_back(w);
            } else if color[w] == color[u] {
                return Some(format!("odd cycle through edge ({u}, {w})"));
            }
        }
    }
    if color.contains(&u8::MAX) {
        return Some("not connected".into());
    }
    let mut girth = usize::MAX;
    let mut diameter = 0;
    let mut dist = vec![usize::MAX; v];
    let mut parent = vec![usize::MAX; v];
    for s in 0..v {
        dist.fill(usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    girth = girth.min(dist[u] + dist[w] + 1);
                }
            }
        }
        diameter = diameter.max(*dist.iter().max().unwrap());
    }
    if girth != 6 {
        return Some(format!("girth {girth}, expected 6"));
    }
    if diameter != 3 {
        return Some(format!("diameter {diameter}, expected 3"));
    }
    let n = q * q + q + 1;
    let zeros = color.iter().filter(|&&c| c == 0).count();
    if zeros != n || v - zeros != n {
        return Some(format!(
            "parts of size {zeros} and {}, expected {n}",
            v - zeros
        ));
    }
    if let Some(u) = (0..v).find(|&u| adj[u].len() != q + 1) {
        return Some(format!(
            "vertex {u} has degree {}, expected {}",
            adj[u].len(),
            q + 1
        ));
    }
    None
}
