use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::involutions::{big_d_slice, d_slice};
use super::SignedColoredGraph;
use crate::error::Result;
use crate::fillings::{enumerate_standard_fillings, FillingFilter};
use crate::limits;
use crate::rsk_yam::standard_tableaux;
use crate::shapes::{Diagram, Partition};
use crate::words::signature_of;

/// Vertex selection for Assaf graphs: all of `S_n`, `inv = 0`, or `inv = 0` with a fixed descent set.
pub type VertexFilter = FillingFilter;

fn build(degree: usize, keys: Vec<Vec<u32>>, step: impl Fn(&mut [u32], usize) + Sync) -> SignedColoredGraph {
    let index: HashMap<&[u32], usize> = keys.iter().enumerate().map(|(k, w)| (w.as_slice(), k)).collect();
    let colors: Vec<usize> = (2..degree).collect();
    let images: Vec<Vec<Option<usize>>> = keys
        .par_iter()
        .enumerate()
        .map(|(v, w)| {
            let mut buf = w.clone();
            colors
                .iter()
                .map(|&i| {
                    buf.copy_from_slice(w);
                    step(&mut buf, i);
                    let u = *index
                        .get(buf.as_slice())
                        .expect("vertex sets are unions of components");
                    (u != v).then_some(u)
                })
                .collect()
        })
        .collect();
    let partners = (0..colors.len())
        .map(|c| images.iter().map(|row| row[c]).collect())
        .collect();
    let sigma = keys.iter().map(|w| signature_of(w)).collect();
    SignedColoredGraph::from_parts(degree, keys, sigma, partners)
}

/// `ℋ_δ` and its inversion-free subgraphs `𝒫_δ`, `ℛ_{γ,δ}`: vertices are the
/// selected permutations in lexicographic order, edges the orbits of `D_i^δ`.
pub fn assaf_graph(delta: &Diagram, filter: &VertexFilter) -> Result<SignedColoredGraph> {
    limits::check_graph(delta.len())?;
    let keys: Vec<Vec<u32>> = enumerate_standard_fillings(delta, filter)?
        .into_iter()
        .map(|p| p.into_inner())
        .collect();
    Ok(build(delta.len(), keys, |w, i| big_d_slice(w, i, delta)))
}

/// `𝒢_λ`: SYT of shape `λ` keyed by reading word, edges from `d_i`. Cached.
pub fn standard_graph(lambda: &Partition) -> Result<SignedColoredGraph> {
    limits::check_graph(lambda.size())?;
    Ok(cached_standard_graph(lambda).as_ref().clone())
}

pub(crate) fn cached_standard_graph(lambda: &Partition) -> Arc<SignedColoredGraph> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<SignedColoredGraph>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(lambda) {
        return g.clone();
    }
    let keys = standard_tableaux(lambda).iter().map(|t| t.reading_word()).collect();
    let g = Arc::new(build(lambda.size(), keys, d_slice));
    cache.lock().unwrap().insert(lambda.clone(), g.clone());
    g
}
