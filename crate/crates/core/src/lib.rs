//! Gorenstein and nearly Gorenstein classification for two families of
//! toric rings built from graphs — edge rings of complete multipartite
//! graphs and stable set rings of perfect graphs — each decided twice:
//! by closed-form rules and by a brute-force trace-ideal oracle over exact
//! lattice-point enumeration.
//!
//! - [`lattice`]: constraint systems, exact enumeration, module-minimal
//!   generators.
//! - [`graph`]: simple graphs, components, maximal cliques, stable sets,
//!   perfectness by odd hole / antihole search.
//! - [`edge_ring`]: everything for `K_{r_1,...,r_n}` — membership systems,
//!   the interior system, surpluses, the trace oracle and the
//!   classifications.
//! - [`stable_set`]: the analogous pipeline for stable set rings.
//! - [`hibi`]: the poset-level criterion used for bipartite types.

pub mod edge_ring;
pub mod graph;
pub mod hibi;
pub mod lattice;
pub mod stable_set;
