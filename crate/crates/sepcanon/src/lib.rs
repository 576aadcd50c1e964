//! Separation calculus on dual graphs of nodal curves.
//!
//! A nodal curve is modeled by its dual multigraph: vertices are irreducible
//! components carrying a geometric genus, edges are nodes, self-loops are
//! nodes on a single component. On top of that graph this crate computes the
//! cut structure that drives canonical-system combinatorics:
//!
//! * seps (separating nodes / bridges) and biseps (properly separating
//!   binodes / 2-edge-cuts of nonseparating edges),
//! * maximal polyseparators and their cyclic (n-gon) arrangements,
//! * the 2-separation into marked 2-components and the separation tree,
//! * exact projective azimuth arithmetic at biseps,
//! * sepcanonical twist divisors, bundle degrees and system dimensions per
//!   2-component, and
//! * the top-level dichotomy: the sepcanonical system is essentially very
//!   ample on every 2-component, or the curve is hyperelliptic.
//!
//! Facts that depend on continuous moduli rather than on the dual graph
//! (hyperellipticity of a component, Weierstrass points, hyperelliptic
//! divisors and azimuths, interlace isomorphy) enter through a
//! [`hyperelliptic::ModuliOracle`]; everything else is computed.

pub mod azimuth;
pub mod dot;
pub mod error;
pub mod format;
pub mod graph;
pub mod hyperelliptic;
pub mod separators;
pub mod sepcanonical;

pub use error::Error;
