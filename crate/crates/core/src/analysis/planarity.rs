//! Left-right planarity test with a rotation-system certificate, and
//! extraction of a Kuratowski subdivision for nonplanar graphs.

use std::collections::HashMap;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` inside the graph.
///
/// For `K33` the first three branch vertices form one side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiSubdivision {
    pub kind: KuratowskiKind,
    pub branch: Vec<usize>,
    /// One path per edge of the underlying `K5`/`K3,3`, endpoints included.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PlanarityCertificate {
    /// Clockwise neighbour order around every vertex.
    Embedding { rotation: Vec<Vec<usize>> },
    Kuratowski(KuratowskiSubdivision),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Planarity {
    pub planar: bool,
    pub certificate: PlanarityCertificate,
}

impl Planarity {
    /// Checks the certificate against `graph` without trusting the test.
    pub fn validate(&self, graph: &Graph) -> bool {
        match (&self.certificate, self.planar) {
            (PlanarityCertificate::Embedding { rotation }, true) => validate_embedding(graph, rotation),
            (PlanarityCertificate::Kuratowski(k), false) => validate_kuratowski(graph, k),
            _ => false,
        }
    }
}

/// Decision only.
pub fn is_planar(graph: &Graph) -> bool {
    let (n, e) = (graph.vertex_count(), graph.edge_count());
    if n > 2 && e > 3 * n - 6 {
        return false;
    }
    LrState::new(graph).run(false).is_some()
}

/// Decision with certificate.
pub fn planarity(graph: &Graph) -> Planarity {
    let (n, e) = (graph.vertex_count(), graph.edge_count());
    let embedding = if n > 2 && e > 3 * n - 6 { None } else { LrState::new(graph).run(true) };
    match embedding {
        Some(rotation) => Planarity {
            planar: true,
            certificate: PlanarityCertificate::Embedding { rotation },
        },
        None => Planarity {
            planar: false,
            certificate: PlanarityCertificate::Kuratowski(kuratowski_subdivision(graph)),
        },
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'a> {
    graph: &'a Graph,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    roots: Vec<usize>,
    // oriented edges
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: HashMap<(usize, usize), usize>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    refs: Vec<Option<usize>>,
    side: Vec<i64>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<Option<usize>>,
    stack: Vec<ConflictPair>,
}

impl<'a> LrState<'a> {
    fn new(graph: &'a Graph) -> Self {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        LrState {
            graph,
            height: vec![None; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            src: Vec::with_capacity(m),
            dst: Vec::with_capacity(m),
            oriented: HashMap::with_capacity(m),
            out: vec![Vec::new(); n],
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting: Vec::with_capacity(m),
            refs: vec![None; m],
            side: vec![1; m],
            stack_bottom: vec![0; m],
            lowpt_edge: vec![None; m],
            stack: Vec::new(),
        }
    }

    fn run(mut self, embed: bool) -> Option<Vec<Vec<usize>>> {
        let n = self.graph.vertex_count();
        for v in 0..n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..n {
            let mut o = std::mem::take(&mut self.out[v]);
            o.sort_by_key(|&e| self.nesting[e]);
            self.out[v] = o;
        }
        for r in self.roots.clone() {
            if !self.test(r) {
                return None;
            }
        }
        if !embed {
            return Some(Vec::new());
        }
        for e in 0..self.src.len() {
            self.nesting[e] *= self.sign(e);
        }
        for v in 0..n {
            let mut o = std::mem::take(&mut self.out[v]);
            o.sort_by_key(|&e| self.nesting[e]);
            self.out[v] = o;
        }
        let mut emb = Embedding::new(n);
        for v in 0..n {
            let mut prev = None;
            for &e in &self.out[v] {
                emb.add_cw(v, self.dst[e], prev);
                prev = Some(self.dst[e]);
            }
        }
        let mut left_ref = vec![0; n];
        let mut right_ref = vec![0; n];
        for r in self.roots.clone() {
            self.embed(r, &mut emb, &mut left_ref, &mut right_ref);
        }
        Some(emb.rotation())
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("visited vertex")
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for i in 0..self.graph.degree(v) {
            let w = self.graph.neighbors(v)[i];
            let key = (v.min(w), v.max(w));
            if self.oriented.contains_key(&key) {
                continue;
            }
            let vw = self.src.len();
            self.oriented.insert(key, vw);
            self.src.push(v);
            self.dst.push(w);
            self.out[v].push(vw);
            let hv = self.h(v);
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting.push(0);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }
            self.nesting[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < hv {
                self.nesting[vw] += 1;
            }
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let first = self.out[v].first().copied();
        for i in 0..self.out[v].len() {
            let ei = self.out[v][i];
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < self.h(v) {
                let e = e.expect("return edge below a root");
                if Some(ei) == first {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        i.high.is_some_and(|h| self.lowpt[h] > self.lowpt[b])
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => usize::MAX,
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let Some(mut q) = self.stack.pop() else { break };
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qrl = q.right.low.expect("nonempty interval");
            if self.lowpt[qrl] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(prl) = p.right.low {
                    self.refs[prl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[qrl] = self.lowpt_edge[e];
            }
            if self.stack.len() <= self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("nonempty stack");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(prl) = p.right.low {
                self.refs[prl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pll) = p.left.low {
                self.refs[pll] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().expect("nonempty stack");
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(hi) = p.left.high.filter(|&h| self.dst[h] == u) {
                p.left.high = self.refs[hi];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(hi) = p.right.high.filter(|&h| self.dst[h] == u) {
                p.right.high = self.refs[hi];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    (Some(l), None) => Some(l),
                    _ => hr,
                };
            }
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        while let Some(r) = self.refs[*chain.last().expect("nonempty chain")] {
            chain.push(r);
        }
        for i in (0..chain.len() - 1).rev() {
            self.side[chain[i]] *= self.side[chain[i + 1]];
            self.refs[chain[i]] = None;
        }
        self.side[e]
    }

    fn embed(&self, v: usize, emb: &mut Embedding, left_ref: &mut [usize], right_ref: &mut [usize]) {
        for &ei in &self.out[v] {
            let w = self.dst[ei];
            if self.parent_edge[w] == Some(ei) {
                emb.add_first(w, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.embed(w, emb, left_ref, right_ref);
            } else if self.side[ei] == 1 {
                emb.add_cw(w, v, Some(right_ref[w]));
            } else {
                emb.add_ccw(w, v, Some(left_ref[w]));
                left_ref[w] = v;
            }
        }
    }
}

/// Half-edge rotation system under construction.
struct Embedding {
    // (cw, ccw) neighbour of each half-edge around its source
    links: Vec<HashMap<usize, (usize, usize)>>,
    first: Vec<Option<usize>>,
}

impl Embedding {
    fn new(n: usize) -> Self {
        Embedding {
            links: vec![HashMap::new(); n],
            first: vec![None; n],
        }
    }

    fn add_cw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        let Some(r) = reference else {
            self.links[start].insert(end, (end, end));
            self.first[start] = Some(end);
            return;
        };
        let l = &mut self.links[start];
        let cw_r = l[&r].0;
        l.get_mut(&r).expect("reference half-edge").0 = end;
        l.insert(end, (cw_r, r));
        l.get_mut(&cw_r).expect("neighbour half-edge").1 = end;
    }

    fn add_ccw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        let Some(r) = reference else {
            self.add_cw(start, end, None);
            return;
        };
        let ccw_r = self.links[start][&r].1;
        self.add_cw(start, end, Some(ccw_r));
        if self.first[start] == Some(r) {
            self.first[start] = Some(end);
        }
    }

    fn add_first(&mut self, start: usize, end: usize) {
        let r = self.first[start];
        self.add_ccw(start, end, r);
    }

    fn rotation(&self) -> Vec<Vec<usize>> {
        (0..self.links.len())
            .map(|v| {
                let mut order = Vec::with_capacity(self.links[v].len());
                if let Some(f) = self.first[v] {
                    let mut w = f;
                    loop {
                        order.push(w);
                        w = self.links[v][&w].0;
                        if w == f || order.len() > self.links[v].len() {
                            break;
                        }
                    }
                }
                order
            })
            .collect()
    }
}

/// A rotation system is a planar embedding iff every component satisfies
/// Euler's formula `v - e + f = 2`.
pub fn validate_embedding(graph: &Graph, rotation: &[Vec<usize>]) -> bool {
    let n = graph.vertex_count();
    if rotation.len() != n {
        return false;
    }
    let mut pos: Vec<HashMap<usize, usize>> = Vec::with_capacity(n);
    for (v, rot) in rotation.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if sorted != graph.neighbors(v) {
            return false;
        }
        pos.push(rot.iter().enumerate().map(|(i, &w)| (w, i)).collect());
    }
    // face traversal: after arriving at w along (v, w), leave along the
    // counter-clockwise neighbour of v around w
    let mut used: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = 0usize;
    for v in 0..n {
        for i in 0..rotation[v].len() {
            if used[v][i] {
                continue;
            }
            faces += 1;
            let (mut a, mut ai) = (v, i);
            while !used[a][ai] {
                used[a][ai] = true;
                let b = rotation[a][ai];
                let k = rotation[b].len();
                let back = pos[b][&a];
                ai = (back + k - 1) % k;
                a = b;
            }
        }
    }
    let comps = super::components::components(graph);
    let isolated = comps.iter().filter(|c| c.len() == 1).count();
    n as i64 - graph.edge_count() as i64 + faces as i64 + isolated as i64 == 2 * comps.len() as i64
}

pub fn validate_kuratowski(graph: &Graph, k: &KuratowskiSubdivision) -> bool {
    let mut branch = k.branch.clone();
    branch.sort_unstable();
    branch.dedup();
    let required: Vec<(usize, usize)> = match k.kind {
        KuratowskiKind::K5 if branch.len() == 5 && k.branch.len() == 5 => {
            (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect()
        }
        KuratowskiKind::K33 if branch.len() == 6 && k.branch.len() == 6 => {
            (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect()
        }
        _ => return false,
    };
    if k.paths.len() != required.len() {
        return false;
    }
    let n = graph.vertex_count();
    if k.branch.iter().any(|&b| b >= n) {
        return false;
    }
    let idx = |v: usize| k.branch.iter().position(|&b| b == v);
    let mut covered = vec![false; required.len()];
    let mut interior_used = vec![false; n];
    for p in &k.paths {
        if p.len() < 2 || p.iter().any(|&v| v >= n) {
            return false;
        }
        let (Some(a), Some(b)) = (idx(p[0]), idx(p[p.len() - 1])) else {
            return false;
        };
        let pair = (a.min(b), a.max(b));
        let Some(slot) = required.iter().position(|&r| r == pair) else {
            return false;
        };
        if covered[slot] {
            return false;
        }
        covered[slot] = true;
        if p.windows(2).any(|w| !graph.has_edge(w[0], w[1])) {
            return false;
        }
        for &v in &p[1..p.len() - 1] {
            if idx(v).is_some() || interior_used[v] {
                return false;
            }
            interior_used[v] = true;
        }
    }
    covered.iter().all(|&c| c)
}

/// Shrinks a nonplanar graph to an edge-minimal nonplanar subgraph and reads
/// off the subdivision.
pub fn kuratowski_subdivision(graph: &Graph) -> KuratowskiSubdivision {
    let n = graph.vertex_count();
    let nonplanar = |edges: &[(usize, usize)]| !is_planar(&Graph::from_edges(n, edges.iter().copied()));
    let mut keep: Vec<(usize, usize)> = graph.edges().collect();
    assert!(nonplanar(&keep), "graph is planar");
    let mut chunk = (keep.len() / 2).max(1);
    loop {
        let mut i = 0;
        while i < keep.len() {
            let end = (i + chunk).min(keep.len());
            let trial: Vec<_> = keep[..i].iter().chain(&keep[end..]).copied().collect();
            if nonplanar(&trial) {
                keep = trial;
            } else {
                i = end;
            }
        }
        if chunk == 1 {
            break;
        }
        chunk /= 2;
    }
    let h = Graph::from_edges(n, keep);
    let branch: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 3).collect();
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while h.degree(cur) == 2 {
                let next = if h.neighbors(cur)[0] == prev { h.neighbors(cur)[1] } else { h.neighbors(cur)[0] };
                path.push(next);
                prev = cur;
                cur = next;
            }
            // each path is met from both ends; keep the canonical direction
            let last = *path.last().expect("nonempty path");
            if (b, path[1]) < (last, path[path.len() - 2]) {
                paths.push(path);
            }
        }
    }
    let kind = if branch.len() == 5 { KuratowskiKind::K5 } else { KuratowskiKind::K33 };
    let branch = match kind {
        KuratowskiKind::K5 => branch,
        KuratowskiKind::K33 => {
            // side of branch[0]: branch vertices not joined to it by a path
            let joined: Vec<usize> = paths
                .iter()
                .filter_map(|p| {
                    let (a, z) = (p[0], p[p.len() - 1]);
                    if a == branch[0] {
                        Some(z)
                    } else if z == branch[0] {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect();
            let (mut side_a, side_b): (Vec<usize>, Vec<usize>) = branch.iter().partition(|v| !joined.contains(v));
            side_a.extend(side_b);
            side_a
        }
    };
    KuratowskiSubdivision { kind, branch, paths }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    fn check(g: &Graph, expect: bool) {
        let p = planarity(g);
        assert_eq!(p.planar, expect);
        assert!(p.validate(g), "certificate failed: {p:?}");
        assert_eq!(is_planar(g), expect);
    }

    #[test]
    fn small_cases() {
        check(&Graph::new(0), true);
        check(&Graph::new(3), true);
        check(&complete(4), true);
        check(&complete(5), false);
        check(&complete(7), false);
        check(&complete_bipartite(3, 3), false);
        check(&complete_bipartite(2, 8), true);
        check(&complete_bipartite(4, 6), false);
    }

    #[test]
    fn petersen_is_nonplanar_k33() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner));
        let p = planarity(&g);
        assert!(!p.planar);
        assert!(p.validate(&g));
        match p.certificate {
            PlanarityCertificate::Kuratowski(k) => assert_eq!(k.kind, KuratowskiKind::K33),
            _ => panic!("expected subdivision"),
        }
    }

    #[test]
    fn grid_and_wheel_are_planar() {
        let mut edges = Vec::new();
        for r in 0..5 {
            for c in 0..5 {
                let v = r * 5 + c;
                if c + 1 < 5 {
                    edges.push((v, v + 1));
                }
                if r + 1 < 5 {
                    edges.push((v, v + 5));
                }
            }
        }
        check(&Graph::from_edges(25, edges), true);
        let wheel = Graph::from_edges(9, (1..9).flat_map(|i| [(0, i), (i, i % 8 + 1)]));
        check(&wheel, true);
    }

    #[test]
    fn bad_rotation_rejected() {
        let g = complete(4);
        // a rotation of K4 on the torus (one face short of planar)
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(!validate_embedding(&g, &rot));
    }
}
