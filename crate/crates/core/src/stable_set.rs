//! Stable set rings of perfect graphs: monomial membership, the canonical
//! module and its minimal monomial, the a-invariant, the Gorenstein /
//! nearly Gorenstein classification with non-purity witnesses, and a trace
//! oracle for small graphs.
//!
//! Monomials are pairs `(a, q)`: x-exponents `a_1..a_n` plus the t-exponent
//! `q`, which is also the grading degree. A monomial lies in the ring when
//! `a >= 0` and every maximal clique sum is at most `q`; it lies in the
//! canonical module when `a >= 1` and every maximal clique sum is strictly
//! below `q`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{self, CliqueReport, Graph, GraphError};
use crate::lattice::{self, ConstraintSystem, ExponentVector, LatticeError, PointSet};

/// Vertex cap for the trace oracle.
pub const STAB_ORACLE_CAP: usize = 6;

/// Vertex cap for canonical-module enumeration.
pub const STAB_ENUMERATION_CAP: usize = 10;

/// Window used by the minimal-generator frontier heuristic (in t-degree).
pub const FRONTIER_WINDOW: i64 = 2;

#[derive(Debug, Error)]
pub enum StabError {
    #[error("graph is not perfect; stable set ring formulas require perfectness")]
    NotPerfect,
    #[error("graph has {n} vertices, above the oracle cap {cap}")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("graph has {n} vertices, above the enumeration cap {cap}")]
    EnumerationCapExceeded { n: usize, cap: usize },
    #[error("no canonical-module monomials up to t-degree {q_bound}; raise the bound")]
    EmptyOmega { q_bound: i64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A monomial `x^a t^q` of the ambient Laurent ring. The grading degree is
/// `q`; negative entries appear only in anti-canonical contexts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabMonomial {
    pub a: Vec<i64>,
    pub q: i64,
}

impl StabMonomial {
    pub fn new(a: Vec<i64>, q: i64) -> Self {
        Self { a, q }
    }

    pub fn to_vector(&self) -> ExponentVector {
        let mut entries = self.a.clone();
        entries.push(self.q);
        ExponentVector::new(entries)
    }

    pub fn from_vector(v: &ExponentVector) -> Self {
        let entries = v.entries();
        let (a, q) = entries.split_at(entries.len() - 1);
        Self {
            a: a.to_vec(),
            q: q[0],
        }
    }

    /// Componentwise divisibility including the t-exponent.
    pub fn divides(&self, other: &StabMonomial) -> bool {
        self.q <= other.q
            && self.a.len() == other.a.len()
            && self.a.iter().zip(&other.a).all(|(x, y)| x <= y)
    }
}

/// Ring membership system in dimension `n + 1` (coordinates `a_1..a_n, q`):
/// nonnegative entries and `q` at least each maximal clique sum.
pub fn stab_system(g: &Graph) -> ConstraintSystem {
    clique_system(g, 0)
}

/// Canonical-module membership system: positive x-entries and `q` strictly
/// above each maximal clique sum.
pub fn omega_stab_system(g: &Graph) -> ConstraintSystem {
    clique_system(g, 1)
}

fn clique_system(g: &Graph, margin: i64) -> ConstraintSystem {
    let n = g.n();
    let report = graph::maximal_cliques(g);
    let mut sys = ConstraintSystem::new(n + 1).each_coord_ge(margin);
    for clique in &report.maximal_cliques {
        let mut coeffs = vec![0i64; n + 1];
        for &v in clique {
            coeffs[v - 1] = -1;
        }
        coeffs[n] = 1;
        sys = sys.ge(coeffs, margin);
    }
    sys
}

/// True iff `x^a t^q` lies in the stable set ring: `a >= 0`, `q >= 0`, and
/// every maximal clique sum at most `q`. A negative `q` simply fails.
pub fn stab_member(g: &Graph, m: &StabMonomial) -> bool {
    assert_eq!(m.a.len(), g.n(), "monomial has wrong number of x-exponents");
    stab_system(g)
        .satisfies(&m.to_vector())
        .expect("dimensions agree")
}

/// True iff `x^a t^q` lies in the canonical module: `a >= 1` and every
/// maximal clique sum strictly below `q`.
pub fn omega_stab_member(g: &Graph, m: &StabMonomial) -> bool {
    assert_eq!(m.a.len(), g.n(), "monomial has wrong number of x-exponents");
    omega_stab_system(g)
        .satisfies(&m.to_vector())
        .expect("dimensions agree")
}

/// The monomial `x_1 ... x_n t^(delta + 1)`: it lies in the canonical
/// module and divides every canonical-module monomial.
pub fn omega_min_monomial(g: &Graph) -> StabMonomial {
    let delta = graph::maximal_cliques(g).delta as i64;
    StabMonomial::new(vec![1; g.n()], delta + 1)
}

/// The a-invariant `-(delta + 1)`, the negative of the least t-degree of a
/// canonical-module monomial.
pub fn a_invariant(g: &Graph) -> i64 {
    let delta = graph::maximal_cliques(g).delta as i64;
    -(delta + 1)
}

/// Default oracle bound in t-degree: `2 * delta + 4`.
pub fn default_q_bound(g: &Graph) -> i64 {
    2 * graph::maximal_cliques(g).delta as i64 + 4
}

/// All canonical-module monomials with t-degree at most `q_bound`,
/// as `(a_1..a_n, q)` vectors.
pub fn enumerate_omega_stab(g: &Graph, q_bound: i64) -> Result<PointSet, StabError> {
    let n = g.n();
    if n > STAB_ENUMERATION_CAP {
        return Err(StabError::EnumerationCapExceeded {
            n,
            cap: STAB_ENUMERATION_CAP,
        });
    }
    let sys = omega_stab_system(g);
    // The box caps q at q_bound; x-entries stay below q. Total degree can
    // reach (n + 1) * q_bound, so the degree bound is inactive.
    let lower = vec![1i64; n + 1];
    let upper = vec![q_bound; n + 1];
    Ok(lattice::enumerate(
        &sys,
        (n as i64 + 1) * q_bound,
        &lower,
        &upper,
    )?)
}

/// Degree-one ring generators `x^W t` over stable sets `W`, the empty set
/// (the element `t`) included.
pub fn degree_one_generators(g: &Graph) -> Result<Vec<ExponentVector>, StabError> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in graph::stable_set_masks(g)? {
        let mut entries = vec![0i64; n + 1];
        for v in 0..n {
            if mask >> v & 1 == 1 {
                entries[v] = 1;
            }
        }
        entries[n] = 1;
        out.push(ExponentVector::new(entries));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct StabGenerators {
    pub minimal: PointSet,
    pub frontier_stable: bool,
    pub q_bound: i64,
    pub omega_points: usize,
}

/// Module-minimal canonical-module monomials relative to the degree-one
/// ring generators, complete up to `q_bound` in t-degree. Frontier
/// stability is measured in t-degree with window [`FRONTIER_WINDOW`].
pub fn omega_stab_generators(g: &Graph, q_bound: i64) -> Result<StabGenerators, StabError> {
    let points = enumerate_omega_stab(g, q_bound)?;
    let gens = degree_one_generators(g)?;
    let minimal = lattice::minimal_points(&points, &gens)?;
    let n = g.n();
    let max_q = minimal.iter().map(|p| p.get(n)).max();
    let frontier_stable = match max_q {
        Some(q) => q <= q_bound - FRONTIER_WINDOW,
        None => true,
    };
    Ok(StabGenerators {
        frontier_stable,
        q_bound,
        omega_points: points.len(),
        minimal,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PerfectStatus {
    Verified,
    Assumed,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub delta: usize,
    pub pure: bool,
}

/// Evidence against the nearly Gorenstein property.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StabWitness {
    /// Edge inside a non-pure component whose first endpoint lies in a
    /// maximum clique of that component and whose second lies in none.
    NonPureEdge {
        i0: usize,
        j0: usize,
        component: usize,
    },
    /// Two components whose clique numbers differ by more than one.
    DeltaGap {
        low_component: usize,
        low_delta: usize,
        high_component: usize,
        high_delta: usize,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct StabVerdict {
    pub perfect: PerfectStatus,
    pub components: Vec<ComponentReport>,
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub witness: Option<StabWitness>,
}

/// Classifies the stable set ring: Gorenstein iff the whole graph is pure,
/// nearly Gorenstein iff every component is pure and component clique
/// numbers pairwise differ by at most one.
///
/// Perfectness is verified unless `assume_perfect` is set; a non-perfect
/// graph is refused.
pub fn classify_stab(g: &Graph, assume_perfect: bool) -> Result<StabVerdict, StabError> {
    let perfect = if assume_perfect {
        PerfectStatus::Assumed
    } else {
        if !graph::is_perfect(g)? {
            return Err(StabError::NotPerfect);
        }
        PerfectStatus::Verified
    };
    let comps = graph::connected_components(g);
    let reports: Vec<(ComponentReport, CliqueReport)> = comps
        .iter()
        .map(|c| {
            let cliques = graph::maximal_cliques(&c.graph);
            (
                ComponentReport {
                    vertices: c.vertices.clone(),
                    delta: cliques.delta,
                    pure: cliques.pure,
                },
                cliques,
            )
        })
        .collect();

    let gorenstein = graph::maximal_cliques(g).pure;
    let all_pure = reports.iter().all(|(r, _)| r.pure);
    let deltas: Vec<usize> = reports.iter().map(|(r, _)| r.delta).collect();
    let (dmin, dmax) = match (deltas.iter().min(), deltas.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => (0, 0),
    };
    let nearly_gorenstein = all_pure && dmax - dmin <= 1;

    let witness = if !all_pure {
        let (ci, (report, cliques)) = reports
            .iter()
            .enumerate()
            .find(|(_, (r, _))| !r.pure)
            .expect("a non-pure component exists");
        non_pure_edge(&comps[ci], report, cliques).map(|(i0, j0)| StabWitness::NonPureEdge {
            i0,
            j0,
            component: ci + 1,
        })
    } else if dmax - dmin > 1 {
        let low = deltas.iter().position(|&d| d == dmin).unwrap();
        let high = deltas.iter().position(|&d| d == dmax).unwrap();
        Some(StabWitness::DeltaGap {
            low_component: low + 1,
            low_delta: dmin,
            high_component: high + 1,
            high_delta: dmax,
        })
    } else {
        None
    };

    Ok(StabVerdict {
        perfect,
        components: reports.into_iter().map(|(r, _)| r).collect(),
        gorenstein,
        nearly_gorenstein,
        witness,
    })
}

/// Looks for an edge of the component from a vertex in a maximum clique to
/// a vertex lying in no maximum clique, in original labels. Such an edge
/// exists in every small non-pure connected graph, but not in all (two
/// maximum cliques bridged by an edge cover every vertex), hence `Option`.
fn non_pure_edge(
    comp: &graph::Component,
    report: &ComponentReport,
    cliques: &CliqueReport,
) -> Option<(usize, usize)> {
    let delta = report.delta;
    let mut in_max = vec![false; comp.graph.n() + 1];
    for clique in &cliques.maximal_cliques {
        if clique.len() == delta {
            for &v in clique {
                in_max[v] = true;
            }
        }
    }
    for (u, v) in comp.graph.edges() {
        let (i0, j0) = if in_max[u] && !in_max[v] {
            (u, v)
        } else if in_max[v] && !in_max[u] {
            (v, u)
        } else {
            continue;
        };
        return Some((comp.vertices[i0 - 1], comp.vertices[j0 - 1]));
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct CoveredGenerator {
    pub generator: StabMonomial,
    pub omega_generator: StabMonomial,
    pub cofactor: StabMonomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct UncoveredGenerator {
    pub generator: StabMonomial,
    pub failures: Vec<StabCofactorFailure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabCofactorFailure {
    pub omega_generator: StabMonomial,
    pub failing_generator: StabMonomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabTraceCertificate {
    pub q_bound: i64,
    pub frontier_stable: bool,
    pub minimal_generators: usize,
    pub covered: Vec<CoveredGenerator>,
    pub uncovered: Vec<UncoveredGenerator>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabTraceResult {
    /// Every degree-one generator of the maximal graded ideal lies in the
    /// product of the canonical module with its inverse.
    pub contains_m: bool,
    pub certificate: StabTraceCertificate,
}

/// Decides whether the trace of the canonical module contains the maximal
/// graded ideal, by testing each degree-one generator `x^W t` against
/// Laurent cofactors `generator - w` over the minimal canonical-module
/// monomials. Exact as long as the generator frontier is stable.
pub fn trace_oracle_stab(g: &Graph, q_bound: i64) -> Result<StabTraceResult, StabError> {
    if g.n() > STAB_ORACLE_CAP {
        return Err(StabError::OracleCapExceeded {
            n: g.n(),
            cap: STAB_ORACLE_CAP,
        });
    }
    if !graph::is_perfect(g)? {
        return Err(StabError::NotPerfect);
    }
    trace_oracle_stab_unchecked(g, q_bound)
}

/// [`trace_oracle_stab`] without the perfectness and size checks; the
/// membership systems are only the actual ring when the graph is perfect.
pub fn trace_oracle_stab_unchecked(g: &Graph, q_bound: i64) -> Result<StabTraceResult, StabError> {
    let gens = omega_stab_generators(g, q_bound)?;
    if gens.minimal.is_empty() {
        return Err(StabError::EmptyOmega { q_bound });
    }
    let ring = stab_system(g);
    let degree_one = degree_one_generators(g)?;
    let mut covered = Vec::new();
    let mut uncovered = Vec::new();
    for e in &degree_one {
        let mut cover: Option<CoveredGenerator> = None;
        let mut failures = Vec::new();
        for w in gens.minimal.iter() {
            let cofactor = e.sub(w);
            let mut failing = None;
            for w2 in gens.minimal.iter() {
                let product = cofactor.add(w2);
                if !ring.satisfies(&product)? {
                    failing = Some(w2);
                    break;
                }
            }
            match failing {
                None => {
                    cover = Some(CoveredGenerator {
                        generator: StabMonomial::from_vector(e),
                        omega_generator: StabMonomial::from_vector(w),
                        cofactor: StabMonomial::from_vector(&cofactor),
                    });
                    break;
                }
                Some(w2) => failures.push(StabCofactorFailure {
                    omega_generator: StabMonomial::from_vector(w),
                    failing_generator: StabMonomial::from_vector(w2),
                }),
            }
        }
        match cover {
            Some(c) => covered.push(c),
            None => uncovered.push(UncoveredGenerator {
                generator: StabMonomial::from_vector(e),
                failures,
            }),
        }
    }
    Ok(StabTraceResult {
        contains_m: uncovered.is_empty(),
        certificate: StabTraceCertificate {
            q_bound,
            frontier_stable: gens.frontier_stable,
            minimal_generators: gens.minimal.len(),
            covered,
            uncovered,
        },
    })
}
