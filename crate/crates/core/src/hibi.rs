//! Poset-level nearly-Gorenstein criterion for Hibi rings, plus the poset
//! reduction for complete bipartite edge rings.
//!
//! A Hibi ring is nearly Gorenstein exactly when its poset is a disjoint
//! union of pure connected posets whose ranks pairwise differ by at most
//! one, and Gorenstein exactly when the poset is pure. Only the poset-level
//! criterion lives here; the ring itself is never constructed.

use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("posets are limited to 64 elements, got {0}")]
    TooLarge(usize),
    #[error("element {element} out of range 1..={size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("relations contain a cycle through elements {a} and {b}")]
    Cycle { a: usize, b: usize },
    #[error("operation requires a connected poset")]
    Disconnected,
    #[error("part sizes must satisfy 1 <= r1 <= r2, got ({r1}, {r2})")]
    BadChainSizes { r1: usize, r2: usize },
    #[error("invalid poset JSON: {0}")]
    Json(String),
}

/// Finite poset on `{1, ..., size}`, stored as the reflexive-transitive
/// closure of the relation list it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    /// leq[a] bit b set iff a <= b (0-based internally).
    leq: Vec<u64>,
}

#[derive(Deserialize)]
struct PosetJson {
    size: usize,
    #[serde(default)]
    relations: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds a poset from 1-based relations `(a, b)` meaning `a <= b`,
    /// taking the reflexive-transitive closure. A cycle between distinct
    /// elements is an input error.
    pub fn new(size: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        if size > 64 {
            return Err(PosetError::TooLarge(size));
        }
        let mut leq = vec![0u64; size];
        for (i, bits) in leq.iter_mut().enumerate() {
            *bits = 1 << i;
        }
        for &(a, b) in relations {
            for e in [a, b] {
                if e == 0 || e > size {
                    return Err(PosetError::ElementOutOfRange { element: e, size });
                }
            }
            leq[a - 1] |= 1 << (b - 1);
        }
        // Transitive closure by iterated propagation.
        loop {
            let mut changed = false;
            for a in 0..size {
                let mut reach = leq[a];
                let mut m = leq[a];
                while m != 0 {
                    let b = m.trailing_zeros() as usize;
                    m &= m - 1;
                    reach |= leq[b];
                }
                if reach != leq[a] {
                    leq[a] = reach;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for a in 0..size {
            for b in (a + 1)..size {
                if leq[a] >> b & 1 == 1 && leq[b] >> a & 1 == 1 {
                    return Err(PosetError::Cycle { a: a + 1, b: b + 1 });
                }
            }
        }
        Ok(Self { size, leq })
    }

    /// Parses `{"size": int, "relations": [[a, b], ...]}`.
    pub fn from_json(input: &str) -> Result<Self, PosetError> {
        let parsed: PosetJson =
            serde_json::from_str(input).map_err(|e| PosetError::Json(e.to_string()))?;
        Self::new(parsed.size, &parsed.relations)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a - 1] >> (b - 1) & 1 == 1
    }

    fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Covers of `a`: minimal elements strictly above it.
    fn covers(&self, a: usize) -> Vec<usize> {
        (1..=self.size)
            .filter(|&b| b != a && self.leq(a, b))
            .filter(|&b| {
                !(1..=self.size).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
            })
            .collect()
    }

    fn is_minimal(&self, a: usize) -> bool {
        !(1..=self.size).any(|b| b != a && self.leq(b, a))
    }
}

/// Connected components of the comparability graph, each relabeled to a
/// standalone poset, ordered by smallest original element.
pub fn components(p: &Poset) -> Vec<Poset> {
    let mut seen = vec![false; p.size];
    let mut out = Vec::new();
    for start in 1..=p.size {
        if seen[start - 1] {
            continue;
        }
        let mut comp = vec![start];
        seen[start - 1] = true;
        let mut queue = vec![start];
        while let Some(a) = queue.pop() {
            for b in 1..=p.size {
                if !seen[b - 1] && p.comparable(a, b) {
                    seen[b - 1] = true;
                    comp.push(b);
                    queue.push(b);
                }
            }
        }
        comp.sort();
        let index_of = |v: usize| comp.iter().position(|&c| c == v).unwrap() + 1;
        let mut relations = Vec::new();
        for &a in &comp {
            for &b in &comp {
                if a != b && p.leq(a, b) {
                    relations.push((index_of(a), index_of(b)));
                }
            }
        }
        out.push(Poset::new(comp.len(), &relations).expect("component of a valid poset"));
    }
    out
}

/// Purity and rank of a connected poset: rank is the number of cover steps
/// in the longest maximal chain, and the poset is pure when all maximal
/// chains have that length.
pub fn is_pure_component(p: &Poset) -> Result<(bool, usize), PosetError> {
    if components(p).len() != 1 {
        return Err(PosetError::Disconnected);
    }
    let mut lengths = Vec::new();
    let mut chain = Vec::new();
    for a in 1..=p.size {
        if p.is_minimal(a) {
            chain.push(a);
            collect_chain_lengths(p, &mut chain, &mut lengths);
            chain.pop();
        }
    }
    let rank = *lengths
        .iter()
        .max()
        .expect("connected poset has a maximal chain");
    let pure = lengths.iter().all(|&l| l == rank);
    Ok((pure, rank))
}

fn collect_chain_lengths(p: &Poset, chain: &mut Vec<usize>, lengths: &mut Vec<usize>) {
    let top = *chain.last().unwrap();
    let covers = p.covers(top);
    if covers.is_empty() {
        lengths.push(chain.len() - 1);
        return;
    }
    for c in covers {
        chain.push(c);
        collect_chain_lengths(p, chain, lengths);
        chain.pop();
    }
}

/// Nearly-Gorenstein test for the Hibi ring of a poset: every component is
/// pure and component ranks pairwise differ by at most one. The empty poset
/// passes (its ring is a polynomial ring).
pub fn hibi_nearly_gorenstein(p: &Poset) -> bool {
    let mut ranks = Vec::new();
    for c in components(p) {
        match is_pure_component(&c) {
            Ok((true, rank)) => ranks.push(rank),
            _ => return false,
        }
    }
    match (ranks.iter().min(), ranks.iter().max()) {
        (Some(&lo), Some(&hi)) => hi - lo <= 1,
        _ => true,
    }
}

/// Gorenstein test: the whole poset is pure (all maximal chains across all
/// components have equal length). The empty poset passes.
pub fn hibi_gorenstein(p: &Poset) -> bool {
    let mut ranks = Vec::new();
    for c in components(p) {
        match is_pure_component(&c) {
            Ok((true, rank)) => ranks.push(rank),
            _ => return false,
        }
    }
    ranks.windows(2).all(|w| w[0] == w[1])
}

/// The poset whose Hibi ring matches the edge ring of the complete
/// bipartite graph with part sizes `r1 <= r2`: two disjoint chains with
/// `r1 - 1` and `r2 - 1` elements (empty chains allowed).
pub fn bipartite_poset(r1: usize, r2: usize) -> Result<Poset, PosetError> {
    if r1 < 1 || r1 > r2 {
        return Err(PosetError::BadChainSizes { r1, r2 });
    }
    let (a, b) = (r1 - 1, r2 - 1);
    let mut relations = Vec::new();
    for i in 1..a {
        relations.push((i, i + 1));
    }
    for i in 1..b {
        relations.push((a + i, a + i + 1));
    }
    Poset::new(a + b, &relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> Poset {
        let relations: Vec<(usize, usize)> = (1..k).map(|i| (i, i + 1)).collect();
        Poset::new(k, &relations).unwrap()
    }

    #[test]
    fn closure_and_cycle_detection() {
        let p = Poset::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(p.leq(1, 3));
        assert!(!p.leq(3, 1));
        assert!(matches!(
            Poset::new(2, &[(1, 2), (2, 1)]),
            Err(PosetError::Cycle { a: 1, b: 2 })
        ));
    }

    #[test]
    fn json_parsing() {
        let p = Poset::from_json(r#"{"size": 3, "relations": [[1, 2], [2, 3]]}"#).unwrap();
        assert!(p.leq(1, 3));
        assert!(matches!(Poset::from_json("{"), Err(PosetError::Json(_))));
        assert!(matches!(
            Poset::from_json(r#"{"size": 2, "relations": [[1, 5]]}"#),
            Err(PosetError::ElementOutOfRange {
                element: 5,
                size: 2
            })
        ));
    }

    #[test]
    fn component_counts() {
        let two_chains = Poset::new(3, &[(1, 2)]).unwrap();
        assert_eq!(components(&two_chains).len(), 2);
        assert_eq!(components(&chain(4)).len(), 1);
        let antichain = Poset::new(3, &[]).unwrap();
        assert_eq!(components(&antichain).len(), 3);
    }

    #[test]
    fn purity_of_chains_and_v_shape() {
        let (pure, rank) = is_pure_component(&chain(4)).unwrap();
        assert!(pure);
        assert_eq!(rank, 3);

        let v = Poset::new(3, &[(1, 3), (2, 3)]).unwrap();
        let (pure, rank) = is_pure_component(&v).unwrap();
        assert!(pure);
        assert_eq!(rank, 1);
    }

    #[test]
    fn impure_component() {
        // 1 < 2 < 3 (with 1 < 3 redundant) plus the short branch 1 < 4.
        let p = Poset::new(4, &[(1, 2), (2, 3), (1, 3), (1, 4)]).unwrap();
        let (pure, rank) = is_pure_component(&p).unwrap();
        assert!(!pure);
        assert_eq!(rank, 2);
    }

    #[test]
    fn disconnected_purity_is_an_error() {
        let p = Poset::new(2, &[]).unwrap();
        assert!(matches!(
            is_pure_component(&p),
            Err(PosetError::Disconnected)
        ));
    }

    #[test]
    fn nearly_gorenstein_examples() {
        // Chains of 1 and 2 elements: ranks 0 and 1.
        let p = Poset::new(3, &[(2, 3)]).unwrap();
        assert!(hibi_nearly_gorenstein(&p));
        // Chains of 1 and 3 elements: ranks 0 and 2.
        let q = Poset::new(4, &[(2, 3), (3, 4)]).unwrap();
        assert!(!hibi_nearly_gorenstein(&q));
        // A single pure poset is both nearly Gorenstein and Gorenstein.
        assert!(hibi_nearly_gorenstein(&chain(5)));
        assert!(hibi_gorenstein(&chain(5)));
    }

    #[test]
    fn bipartite_poset_shapes() {
        let p = bipartite_poset(2, 3).unwrap();
        assert_eq!(p.size(), 3);
        assert_eq!(components(&p).len(), 2);

        let p = bipartite_poset(1, 5).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(components(&p).len(), 1);

        let p = bipartite_poset(1, 1).unwrap();
        assert_eq!(p.size(), 0);
        assert!(hibi_nearly_gorenstein(&p));
        assert!(hibi_gorenstein(&p));

        assert!(matches!(
            bipartite_poset(3, 2),
            Err(PosetError::BadChainSizes { r1: 3, r2: 2 })
        ));
    }

    #[test]
    fn bipartite_cross_checks_up_to_eight() {
        for r1 in 1..=8usize {
            for r2 in r1..=8usize {
                let p = bipartite_poset(r1, r2).unwrap();
                let ng = hibi_nearly_gorenstein(&p);
                assert_eq!(
                    ng,
                    r1 == 1 || r2 == r1 || r2 == r1 + 1,
                    "nearly Gorenstein mismatch at ({r1}, {r2})"
                );
                let gor = hibi_gorenstein(&p);
                assert_eq!(
                    gor,
                    r1 == 1 || r1 == r2,
                    "Gorenstein mismatch at ({r1}, {r2})"
                );
            }
        }
    }

    #[test]
    fn ranks_invariant_under_relabeling() {
        let p = Poset::new(4, &[(1, 2), (3, 4)]).unwrap();
        let q = Poset::new(4, &[(4, 3), (2, 1)]).unwrap();
        let mut ranks_p: Vec<usize> = components(&p)
            .iter()
            .map(|c| is_pure_component(c).unwrap().1)
            .collect();
        let mut ranks_q: Vec<usize> = components(&q)
            .iter()
            .map(|c| is_pure_component(c).unwrap().1)
            .collect();
        ranks_p.sort();
        ranks_q.sort();
        assert_eq!(ranks_p, ranks_q);
    }
}
