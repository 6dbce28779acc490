//! Exact polyhedral calculus for set-valued maps.
//!
//! This crate computes the objects of variational analysis — tangent and
//! normal cones, coderivatives, subdifferentials — for maps whose graphs are
//! finite unions of convex polyhedra, entirely in rational arithmetic. On top
//! of that kernel it builds the analysis of discrete-time differential
//! inclusions: reachable sets and maps, chain-rule upper estimates, backward
//! adjoint (costate) recursions, optimality certificates for endpoint costs,
//! marginal-function subdifferential estimates, and convergence diagnostics
//! under time-step refinement.
//!
//! Everything semantic is exact: emptiness, membership, cone inclusion,
//! projections and compositions are decided in `Rat` (arbitrary-precision
//! rational) arithmetic with no LP solver and no floating-point tolerance.
//! Floats appear only in explicitly sampled, seeded evidence generators (the
//! [`oracle`] module) and in decimal renderings of exact values.
//!
//! # Layout
//!
//! * [`rat`] — rational scalars, parsing/formatting, exact decimal rendering.
//! * [`geom`] — the one geometry kernel everything reduces to: polyhedra,
//!   unions, polyhedral cones with dual (generator / halfspace)
//!   representations, Fourier–Motzkin projection, double description,
//!   Hausdorff distances.
//! * [`vifile`] — the line-oriented `.vi` text format shared by every
//!   command and fixture (pieces, maps, objectives, scenarios, paths).
//! * [`setmap`] — set-valued maps as graphs: evaluation, composition, inverse,
//!   step maps, outer norms, value convexification, difference-quotient
//!   approximation checks.
//! * [`varcone`] — tangent/regular/limiting normal cones, coderivatives and
//!   their pointwise application, subdifferential triples of piecewise affine
//!   min-of-max objectives.
//! * [`chain`] — chain-rule upper estimates with constraint-qualification
//!   checks, exact convex-case composition, marginal subdifferentials, and the
//!   support-filtered composition that demonstrably fails to be an upper bound.
//! * [`inclusion`] — discrete-time inclusions: reachability, feasible-path
//!   enumeration, per-path coderivative composition, adjoint tubes,
//!   certificates and refutations, subdifferential upper estimates, initial
//!   costate sets.
//! * [`limits`] — piecewise-linear interpolation of paths, Hausdorff
//!   convergence tables, stability reports for costate sets, and the
//!   hull-of-intersection identity check for nested families.
//! * [`oracle`] — seeded sampling oracles that cross-check the exact kernel:
//!   sampled normal cones, grid reachability clouds, sampled subdifferentials.
//! * [`cli`] — the `varinc` command-line front end (`reach`, `coderiv`,
//!   `chain`, `certify`, `subdiff`, `converge`, `pi`, `oracle-check`).
//!
//! # Examples
//!
//! Each capability has a runnable example; `fixtures/` holds the `.vi` inputs
//! they share with the CLI:
//!
//! ```text
//! cargo run --example cones_basics            # kernel: projection, duality, hulls
//! cargo run --example normal_cones            # tangent / regular / limiting cones
//! cargo run --example coderivatives           # graph coderivatives, outer norms
//! cargo run --example chain_rules             # upper estimates and strictness
//! cargo run --example composition_gap         # filtered composition losing soundness
//! cargo run --example reachability            # reachable sets and maps
//! cargo run --example optimality_certificates # adjoint tubes, accept + refute
//! cargo run --example marginal_subdifferentials
//! cargo run --example convergence_tables      # Hausdorff distance under refinement
//! cargo run --example costate_stability       # initial costate sets on a grid
//! cargo run --example oracle_checks           # sampled vs exact agreement
//! ```
//!
//! The binary exposes the same functionality over `.vi` files:
//!
//! ```text
//! varinc reach --scenario fixtures/growth.vi --x0 1 --N 100
//! varinc chain --g fixtures/g2.vi --f fixtures/f_sign.vi --point 0 0 --kind convexified
//! ```

pub mod rat;
mod linalg;
pub mod geom;
pub mod vifile;
pub mod setmap;
pub mod varcone;
pub mod chain;
pub mod inclusion;
pub mod limits;
pub mod oracle;
pub mod cli;

mod error;
pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
