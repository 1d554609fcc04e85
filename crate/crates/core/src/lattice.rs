//! Exact lattice-point enumeration under linear and parity constraints.
//!
//! Monoids and modules of monomials are represented by their exponent
//! vectors, and membership is decided by a [`ConstraintSystem`]: a list of
//! homogeneous-style linear inequalities/equalities together with mod-2
//! parity conditions. [`enumerate`] lists every solution inside a box up to
//! a total-degree bound, and [`minimal_points`] extracts the module-minimal
//! elements of an enumerated set relative to a monoid generating set.
//!
//! All arithmetic is exact `i64`; overflow checks stay on in every profile.

use serde::Serialize;
use thiserror::Error;

/// Search-space cap for [`enumerate`] (number of visited search nodes).
pub const DEFAULT_NODE_CAP: u64 = 1 << 28;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: system has dimension {expected}, vector has length {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("enumeration search space exceeds the configured cap of {cap} nodes")]
    SearchSpaceExceeded { cap: u64 },
    #[error("degree bound must be nonnegative, got {0}")]
    NegativeDegreeBound(i64),
    #[error("box is invalid: lower bound exceeds upper bound in coordinate {coord}")]
    InvalidBox { coord: usize },
    #[error("monoid generator list is empty")]
    EmptyGenerators,
    #[error("monoid generator {index} must be nonnegative and nonzero")]
    InvalidGenerator { index: usize },
    #[error("point {index} has a negative entry; module-minimality requires nonnegative points")]
    NegativePoint { index: usize },
    #[error("frontier window {window} must satisfy 1 <= window < enumeration bound {bound}")]
    BadWindow { window: i64, bound: i64 },
}

/// Integer exponent vector of a (Laurent) monomial.
///
/// Entries may be negative; operations that require nonnegativity state so.
/// Ordering is lexicographic on the entries, which is the canonical order
/// for every enumerated set in this crate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ExponentVector {
    entries: Vec<i64>,
}

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: vec![0; dim],
        }
    }

    pub fn ones(dim: usize) -> Self {
        Self {
            entries: vec![1; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Total degree: the sum of all entries.
    pub fn degree(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries[i]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Componentwise sum. Panics on dimension mismatch.
    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), other.dim(), "exponent vector dimensions differ");
        ExponentVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise difference. Panics on dimension mismatch.
    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), other.dim(), "exponent vector dimensions differ");
        ExponentVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(entries: Vec<i64>) -> Self {
        Self::new(entries)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearConstraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

/// `coeffs · u ≡ residue (mod 2)` with `residue ∈ {0, 1}`.
#[derive(Clone, Debug, Serialize)]
pub struct ParityConstraint {
    pub coeffs: Vec<i64>,
    pub residue: u8,
}

/// Linear inequalities/equalities plus parity conditions in a fixed dimension.
#[derive(Clone, Debug, Serialize)]
pub struct ConstraintSystem {
    dimension: usize,
    linear: Vec<LinearConstraint>,
    parity: Vec<ParityConstraint>,
}

impl ConstraintSystem {
    pub fn new(dimension: usize) -> Self {
        Self {
            dimension,
            linear: Vec::new(),
            parity: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn linear_constraints(&self) -> &[LinearConstraint] {
        &self.linear
    }

    pub fn parity_constraints(&self) -> &[ParityConstraint] {
        &self.parity
    }

    /// Adds `coeffs · u >= rhs`. Panics if `coeffs` has the wrong length.
    pub fn ge(mut self, coeffs: Vec<i64>, rhs: i64) -> Self {
        assert_eq!(
            coeffs.len(),
            self.dimension,
            "coefficient vector has wrong length"
        );
        self.linear.push(LinearConstraint {
            coeffs,
            relation: Relation::Ge,
            rhs,
        });
        self
    }

    /// Adds `coeffs · u = rhs`. Panics if `coeffs` has the wrong length.
    pub fn eq(mut self, coeffs: Vec<i64>, rhs: i64) -> Self {
        assert_eq!(
            coeffs.len(),
            self.dimension,
            "coefficient vector has wrong length"
        );
        self.linear.push(LinearConstraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        });
        self
    }

    /// Adds `coeffs · u ≡ residue (mod 2)`. Panics on a wrong length or residue.
    pub fn parity(mut self, coeffs: Vec<i64>, residue: u8) -> Self {
        assert_eq!(
            coeffs.len(),
            self.dimension,
            "coefficient vector has wrong length"
        );
        assert!(residue <= 1, "parity residue must be 0 or 1");
        self.parity.push(ParityConstraint { coeffs, residue });
        self
    }

    /// Convenience: one `u_i >= rhs` constraint per coordinate.
    pub fn each_coord_ge(mut self, rhs: i64) -> Self {
        for i in 0..self.dimension {
            let mut coeffs = vec![0; self.dimension];
            coeffs[i] = 1;
            self.linear.push(LinearConstraint {
                coeffs,
                relation: Relation::Ge,
                rhs,
            });
        }
        self
    }

    /// Decides whether `u` satisfies every constraint.
    pub fn satisfies(&self, u: &ExponentVector) -> Result<bool, LatticeError> {
        if u.dim() != self.dimension {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dimension,
                found: u.dim(),
            });
        }
        Ok(self.satisfies_slice(u.entries()))
    }

    pub(crate) fn satisfies_slice(&self, u: &[i64]) -> bool {
        debug_assert_eq!(u.len(), self.dimension);
        for c in &self.linear {
            let dot: i64 = c.coeffs.iter().zip(u).map(|(a, b)| a * b).sum();
            let ok = match c.relation {
                Relation::Ge => dot >= c.rhs,
                Relation::Eq => dot == c.rhs,
            };
            if !ok {
                return false;
            }
        }
        for p in &self.parity {
            let dot: i64 = p.coeffs.iter().zip(u).map(|(a, b)| a * b).sum();
            if dot.rem_euclid(2) != i64::from(p.residue) {
                return false;
            }
        }
        true
    }
}

/// A lexicographically sorted, duplicate-free set of lattice points, complete
/// under `enumeration_bound` (the degree or box bound it was produced with).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointSet {
    points: Vec<ExponentVector>,
    enumeration_bound: i64,
}

impl PointSet {
    pub fn new(mut points: Vec<ExponentVector>, enumeration_bound: i64) -> Self {
        points.sort();
        points.dedup();
        Self {
            points,
            enumeration_bound,
        }
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn enumeration_bound(&self) -> i64 {
        self.enumeration_bound
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ExponentVector> {
        self.points.iter()
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        self.points.binary_search(v).is_ok()
    }

    pub(crate) fn contains_slice(&self, v: &[i64]) -> bool {
        self.points.binary_search_by(|p| p.entries().cmp(v)).is_ok()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.points.iter().map(|p| p.degree()).max()
    }

    /// Componentwise minimum over all points; `None` when empty.
    pub fn componentwise_min(&self) -> Option<ExponentVector> {
        let first = self.points.first()?;
        let mut min = first.entries().to_vec();
        for p in &self.points[1..] {
            for (m, &e) in min.iter_mut().zip(p.entries()) {
                if e < *m {
                    *m = e;
                }
            }
        }
        Some(ExponentVector::new(min))
    }
}

/// Enumerates every point of the box `[lower, upper]` with total degree at
/// most `degree_bound` that satisfies `system`, with the default node cap.
///
/// The result is complete within the box and bound, and lexicographically
/// sorted.
pub fn enumerate(
    system: &ConstraintSystem,
    degree_bound: i64,
    lower: &[i64],
    upper: &[i64],
) -> Result<PointSet, LatticeError> {
    enumerate_with_cap(system, degree_bound, lower, upper, DEFAULT_NODE_CAP)
}

/// [`enumerate`] with an explicit search-node cap.
pub fn enumerate_with_cap(
    system: &ConstraintSystem,
    degree_bound: i64,
    lower: &[i64],
    upper: &[i64],
    cap: u64,
) -> Result<PointSet, LatticeError> {
    let d = system.dimension();
    if lower.len() != d {
        return Err(LatticeError::DimensionMismatch {
            expected: d,
            found: lower.len(),
        });
    }
    if upper.len() != d {
        return Err(LatticeError::DimensionMismatch {
            expected: d,
            found: upper.len(),
        });
    }
    if degree_bound < 0 {
        return Err(LatticeError::NegativeDegreeBound(degree_bound));
    }
    for i in 0..d {
        if lower[i] > upper[i] {
            return Err(LatticeError::InvalidBox { coord: i });
        }
    }

    // Suffix extrema per linear constraint: with coordinates k.. still free,
    // the reachable contribution of the tail lies in [tail_min, tail_max].
    let lin = system.linear_constraints();
    let mut tail_min = vec![vec![0i64; d + 1]; lin.len()];
    let mut tail_max = vec![vec![0i64; d + 1]; lin.len()];
    for (ci, c) in lin.iter().enumerate() {
        for k in (0..d).rev() {
            let lo = c.coeffs[k] * lower[k];
            let hi = c.coeffs[k] * upper[k];
            tail_min[ci][k] = tail_min[ci][k + 1] + lo.min(hi);
            tail_max[ci][k] = tail_max[ci][k + 1] + lo.max(hi);
        }
    }
    // Minimal reachable tail degree (degree coefficients are all one).
    let mut deg_tail_min = vec![0i64; d + 1];
    for k in (0..d).rev() {
        deg_tail_min[k] = deg_tail_min[k + 1] + lower[k];
    }

    struct Dfs<'a> {
        system: &'a ConstraintSystem,
        lower: &'a [i64],
        upper: &'a [i64],
        degree_bound: i64,
        tail_min: Vec<Vec<i64>>,
        tail_max: Vec<Vec<i64>>,
        deg_tail_min: Vec<i64>,
        cap: u64,
        visited: u64,
        current: Vec<i64>,
        acc: Vec<i64>,
        out: Vec<ExponentVector>,
    }

    impl Dfs<'_> {
        fn run(&mut self, k: usize, partial_deg: i64) -> Result<(), LatticeError> {
            let d = self.system.dimension();
            if k == d {
                // Linear constraints hold exactly here because the tail
                // windows are empty; only parity remains to check.
                let parity_ok = self.system.parity_constraints().iter().all(|p| {
                    let dot: i64 = p.coeffs.iter().zip(&self.current).map(|(a, b)| a * b).sum();
                    dot.rem_euclid(2) == i64::from(p.residue)
                });
                if parity_ok {
                    self.out.push(ExponentVector::new(self.current.clone()));
                }
                return Ok(());
            }
            for v in self.lower[k]..=self.upper[k] {
                self.visited += 1;
                if self.visited > self.cap {
                    return Err(LatticeError::SearchSpaceExceeded { cap: self.cap });
                }
                let deg = partial_deg + v;
                // Degree only grows with v; once infeasible, larger v are too.
                if deg + self.deg_tail_min[k + 1] > self.degree_bound {
                    break;
                }
                for (ci, c) in self.system.linear_constraints().iter().enumerate() {
                    self.acc[ci] += c.coeffs[k] * v;
                }
                let feasible =
                    self.system
                        .linear_constraints()
                        .iter()
                        .enumerate()
                        .all(|(ci, c)| {
                            let lo = self.acc[ci] + self.tail_min[ci][k + 1];
                            let hi = self.acc[ci] + self.tail_max[ci][k + 1];
                            match c.relation {
                                Relation::Ge => hi >= c.rhs,
                                Relation::Eq => lo <= c.rhs && hi >= c.rhs,
                            }
                        });
                if feasible {
                    self.current.push(v);
                    let r = self.run(k + 1, deg);
                    self.current.pop();
                    r?;
                }
                for (ci, c) in self.system.linear_constraints().iter().enumerate() {
                    self.acc[ci] -= c.coeffs[k] * v;
                }
            }
            Ok(())
        }
    }

    let mut dfs = Dfs {
        system,
        lower,
        upper,
        degree_bound,
        tail_min,
        tail_max,
        deg_tail_min,
        cap,
        visited: 0,
        current: Vec::with_capacity(d),
        acc: vec![0; lin.len()],
        out: Vec::new(),
    };
    dfs.run(0, 0)?;
    // Ascending coordinate loops produce lexicographic order already.
    debug_assert!(dfs.out.windows(2).all(|w| w[0] < w[1]));
    Ok(PointSet {
        points: dfs.out,
        enumeration_bound: degree_bound,
    })
}

/// Module-minimal elements of `points` relative to `generators`: a point is
/// kept iff subtracting any single generator leaves the set.
///
/// `points` must be complete under its enumeration bound for the result to
/// be the true minimal generating set up to that bound.
pub fn minimal_points(
    points: &PointSet,
    generators: &[ExponentVector],
) -> Result<PointSet, LatticeError> {
    if generators.is_empty() {
        return Err(LatticeError::EmptyGenerators);
    }
    for (index, g) in generators.iter().enumerate() {
        if !g.is_nonnegative() || g.is_zero() {
            return Err(LatticeError::InvalidGenerator { index });
        }
    }
    for (index, p) in points.iter().enumerate() {
        if !p.is_nonnegative() {
            return Err(LatticeError::NegativePoint { index });
        }
    }
    let mut scratch: Vec<i64> = Vec::new();
    let minimal: Vec<ExponentVector> = points
        .iter()
        .filter(|p| {
            !generators.iter().any(|g| {
                scratch.clear();
                scratch.extend(p.entries().iter().zip(g.entries()).map(|(a, b)| a - b));
                points.contains_slice(&scratch)
            })
        })
        .cloned()
        .collect();
    Ok(PointSet {
        points: minimal,
        enumeration_bound: points.enumeration_bound(),
    })
}

/// Heuristic completeness evidence for a minimal generating set: true iff no
/// point has degree in the top `window` degrees below the enumeration bound.
pub fn frontier_stable(points: &PointSet, window: i64) -> Result<bool, LatticeError> {
    let bound = points.enumeration_bound();
    if window < 1 || window >= bound {
        return Err(LatticeError::BadWindow { window, bound });
    }
    Ok(points.iter().all(|p| p.degree() <= bound - window))
}
