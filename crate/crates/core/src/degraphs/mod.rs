//! Signed colored graphs: Assaf graphs, standard dual equivalence graphs,
//! restriction, isomorphism and the dual-equivalence checks.

mod assaf;
mod deg;
mod involutions;

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

pub use assaf::{assaf_graph, standard_graph, VertexFilter};
pub use deg::{
    commuting_violations, component_reports, component_schur_report, deg_type, is_deg_by_definition, is_locally_standard,
    pattern_criterion, yam_decomposition_check, ComponentReport, YamDecompositionReport,
};
pub use involutions::{big_d, d, d_tilde};

use crate::error::{Error, Result};
use crate::words::Signature;

/// Vertices with signatures and one partial matching per color `2..=n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedColoredGraph {
    degree: usize,
    keys: Vec<Vec<u32>>,
    sigma: Vec<Signature>,
    /// `partners[i - 2][v]` is the `i`-neighbour of `v`.
    partners: Vec<Vec<Option<usize>>>,
}

impl SignedColoredGraph {
    pub(crate) fn from_parts(
        degree: usize,
        keys: Vec<Vec<u32>>,
        sigma: Vec<Signature>,
        partners: Vec<Vec<Option<usize>>>,
    ) -> Self {
        debug_assert_eq!(partners.len(), degree.saturating_sub(2));
        debug_assert!(sigma.iter().all(|s| s.len() == degree.saturating_sub(1)));
        SignedColoredGraph { degree, keys, sigma, partners }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Vertex labels: permutations or tableau reading words.
    pub fn keys(&self) -> &[Vec<u32>] {
        &self.keys
    }

    pub fn key(&self, v: usize) -> &[u32] {
        &self.keys[v]
    }

    pub fn signature(&self, v: usize) -> Signature {
        self.sigma[v]
    }

    pub fn signatures(&self) -> &[Signature] {
        &self.sigma
    }

    pub fn colors(&self) -> RangeInclusive<usize> {
        2..=self.degree.saturating_sub(1)
    }

    pub fn partner(&self, color: usize, v: usize) -> Option<usize> {
        self.partners.get(color.wrapping_sub(2)).and_then(|m| m[v])
    }

    pub fn find(&self, key: &[u32]) -> Option<usize> {
        self.keys.iter().position(|k| k == key)
    }

    /// Edges `(color, u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (c, m) in self.partners.iter().enumerate() {
            for (u, p) in m.iter().enumerate() {
                if let Some(v) = *p {
                    if u < v {
                        out.push((c + 2, u, v));
                    }
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.partners.iter().map(|m| m.iter().flatten().count()).sum::<usize>() / 2
    }

    /// Each color class pairs vertices symmetrically with no loops.
    pub fn is_matching(&self) -> bool {
        self.partners.iter().all(|m| {
            m.iter().enumerate().all(|(u, p)| match *p {
                Some(v) => v != u && v < m.len() && m[v] == Some(u),
                None => true,
            })
        })
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for m in &self.partners {
                    if let Some(v) = m[u] {
                        if !seen[v] {
                            seen[v] = true;
                            comp.push(v);
                            queue.push_back(v);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph on `vertices`, in the given order. Edges leaving the set are dropped.
    pub fn induced(&self, vertices: &[usize]) -> SignedColoredGraph {
        let mut index = vec![usize::MAX; self.len()];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let partners = self
            .partners
            .iter()
            .map(|m| {
                vertices
                    .iter()
                    .map(|&v| m[v].map(|u| index[u]).filter(|&u| u != usize::MAX))
                    .collect()
            })
            .collect();
        SignedColoredGraph {
            degree: self.degree,
            keys: vertices.iter().map(|&v| self.keys[v].clone()).collect(),
            sigma: vertices.iter().map(|&v| self.sigma[v]).collect(),
            partners,
        }
    }

    pub fn component_graphs(&self) -> Vec<SignedColoredGraph> {
        self.components().iter().map(|c| self.induced(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Signatures sorted, for cheap isomorphism rejection.
    pub(crate) fn signature_multiset(&self) -> Vec<Signature> {
        let mut s = self.sigma.clone();
        s.sort_unstable();
        s
    }

    /// Restriction to `[lo, hi]` after clipping to `[1, n]`.
    pub(crate) fn restrict_clipped(&self, lo: usize, hi: usize) -> SignedColoredGraph {
        let m = hi + 1 - lo;
        let sigma = self.sigma.iter().map(|s| s.window(lo, m - 1)).collect();
        let partners = (2..m).map(|c| self.partners[lo + c - 3].clone()).collect();
        SignedColoredGraph { degree: m, keys: self.keys.clone(), sigma, partners }
    }
}

/// `G|_I`: signatures and colors shifted down by `min I - 1`, with `I` clipped to `[1, n]`.
pub fn restrict_graph(g: &SignedColoredGraph, interval: RangeInclusive<i64>) -> Result<SignedColoredGraph> {
    let lo = (*interval.start()).max(1);
    let hi = (*interval.end()).min(g.degree as i64);
    if lo > hi {
        return Err(Error::EmptyInterval);
    }
    Ok(g.restrict_clipped(lo as usize, hi as usize))
}

/// A signature- and color-preserving bijection `φ` with `φ[v]` the image of `v`.
pub fn isomorphism(g: &SignedColoredGraph, h: &SignedColoredGraph) -> Option<Vec<usize>> {
    if g.degree != h.degree || g.len() != h.len() || g.signature_multiset() != h.signature_multiset() {
        return None;
    }
    let gc = g.components();
    let hc = h.components();
    if gc.len() != hc.len() {
        return None;
    }
    let mut phi = vec![usize::MAX; g.len()];
    let mut used = vec![false; hc.len()];
    for comp in &gc {
        let hit = hc.iter().enumerate().find_map(|(k, target)| {
            if used[k] || target.len() != comp.len() {
                return None;
            }
            target.iter().find_map(|&root| match_from(g, h, comp[0], root, comp.len())).map(|m| (k, m))
        })?;
        used[hit.0] = true;
        for (v, w) in hit.1 {
            phi[v] = w;
        }
    }
    Some(phi)
}

/// Extend `root ↦ image` along edges; connected components force the rest.
fn match_from(
    g: &SignedColoredGraph,
    h: &SignedColoredGraph,
    root: usize,
    image: usize,
    size: usize,
) -> Option<Vec<(usize, usize)>> {
    let mut fwd = std::collections::HashMap::with_capacity(size);
    let mut back = std::collections::HashMap::with_capacity(size);
    let mut queue = VecDeque::from([(root, image)]);
    fwd.insert(root, image);
    back.insert(image, root);
    while let Some((u, x)) = queue.pop_front() {
        if g.sigma[u] != h.sigma[x] {
            return None;
        }
        for (mg, mh) in g.partners.iter().zip(&h.partners) {
            match (mg[u], mh[x]) {
                (None, None) => {}
                (Some(v), Some(y)) => match (fwd.get(&v), back.get(&y)) {
                    (None, None) => {
                        fwd.insert(v, y);
                        back.insert(y, v);
                        queue.push_back((v, y));
                    }
                    (Some(&y2), Some(&v2)) if y2 == y && v2 == v => {}
                    _ => return None,
                },
                _ => return None,
            }
        }
    }
    (fwd.len() == size).then(|| {
        let mut pairs: Vec<(usize, usize)> = fwd.into_iter().collect();
        pairs.sort_unstable();
        pairs
    })
}

/// Undirected DOT rendering; node labels are `key signature`, edge labels are colors.
pub fn to_dot(g: &SignedColoredGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.len() {
        let key = crate::words::Word::new(g.keys[v].clone()).map(|w| w.to_string()).unwrap_or_default();
        let _ = writeln!(out, "  v{v} [label=\"{key} {}\"];", g.sigma[v]);
    }
    for (c, u, v) in g.edges() {
        let _ = writeln!(out, "  v{u} -- v{v} [label=\"{c}\"];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Diagram, Partition};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn key(g: &SignedColoredGraph, v: usize) -> String {
        crate::words::Word::new(g.key(v).to_vec()).unwrap().to_string()
    }

    #[test]
    fn standard_graph_3_2_is_a_path_with_double_ends() {
        let g = standard_graph(&part(&[3, 2])).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g.edge_count(), 6);
        let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); 5];
        for (_, u, v) in g.edges() {
            neighbours[u].push(v);
            neighbours[v].push(u);
        }
        for n in &mut neighbours {
            n.sort_unstable();
            n.dedup();
        }
        let ends: Vec<usize> = (0..5).filter(|&v| neighbours[v].len() == 1).collect();
        assert_eq!(ends.len(), 2);
        assert!((0..5).all(|v| neighbours[v].len() <= 2));
        let mut doubles: Vec<Vec<usize>> = Vec::new();
        for u in 0..5 {
            for &v in &neighbours[u] {
                if u < v {
                    let colors: Vec<usize> = g.colors().filter(|&c| g.partner(c, u) == Some(v)).collect();
                    if colors.len() == 2 {
                        doubles.push(colors);
                    }
                }
            }
        }
        doubles.sort();
        assert_eq!(doubles, vec![vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn standard_graph_small_cases() {
        let g = standard_graph(&part(&[4])).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.signature(0).to_string(), "+++");
        let g = standard_graph(&part(&[2, 2])).unwrap();
        let keys: Vec<String> = (0..2).map(|v| key(&g, v)).collect();
        assert_eq!(keys, ["2413", "3412"]);
        assert_eq!(g.partner(2, 0), Some(1));
        assert_eq!(g.partner(3, 0), Some(1));
    }

    #[test]
    fn restriction_of_3_2_to_middle() {
        let g = standard_graph(&part(&[3, 2])).unwrap();
        let r = restrict_graph(&g, 2..=5).unwrap();
        assert_eq!(r.degree(), 4);
        assert_eq!(r.len(), 5);
        assert!(r.signatures().iter().all(|s| s.len() == 3));
        let mut sizes: Vec<usize> = r.components().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
        // Each piece is a standard graph on four letters.
        for c in r.component_graphs() {
            assert!(deg_type(&c).is_some());
        }
        assert_eq!(restrict_graph(&g, 1..=5).unwrap(), g);
        assert_eq!(restrict_graph(&g, -3..=9).unwrap(), g);
        assert_eq!(restrict_graph(&g, 3..=4).unwrap().edge_count(), 0);
        assert_eq!(restrict_graph(&g, 7..=9), Err(Error::EmptyInterval));
    }

    #[test]
    fn isomorphism_examples() {
        let g = standard_graph(&part(&[3, 2])).unwrap();
        assert_eq!(isomorphism(&g, &g), Some((0..5).collect()));
        let h = standard_graph(&part(&[2, 2, 1])).unwrap();
        assert_eq!(isomorphism(&g, &h), None);
    }

    #[test]
    fn dot_output() {
        let g = standard_graph(&part(&[1])).unwrap();
        assert_eq!(to_dot(&g), "graph G {\n  v0 [label=\"1 \"];\n}\n");
        let g = standard_graph(&part(&[3, 2])).unwrap();
        let dot = to_dot(&g);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert_eq!(dot.matches("[label=\"").count(), 11);
        assert_eq!(dot, to_dot(&standard_graph(&part(&[3, 2])).unwrap()));
    }

    #[test]
    fn assaf_graph_basics() {
        let d = Diagram::from_partition(&part(&[2, 2]));
        let h = assaf_graph(&d, &VertexFilter::All).unwrap();
        assert_eq!(h.len(), 24);
        assert!(h.is_matching());
        let p = assaf_graph(&Diagram::from_partition(&part(&[1])), &VertexFilter::InvZero).unwrap();
        assert_eq!((p.len(), p.edge_count()), (1, 0));
        let d = Diagram::from_partition(&part(&[3, 3]));
        let p = assaf_graph(&d, &VertexFilter::InvZero).unwrap();
        let inv0 = crate::fillings::enumerate_standard_fillings(&d, &VertexFilter::InvZero).unwrap();
        assert_eq!(p.len(), inv0.len());
    }
}
