//! Exact computational homological algebra for finite `k`-linear categories.
//!
//! The crate builds finite linear categories from quiver presentations,
//! computes Hochschild-Mitchell homology and cohomology with bimodule
//! coefficients over `Q` or `GF(p)`, constructs Galois coverings (free group
//! actions, quotient categories, lifted bimodules) and evaluates the
//! Cartan-Leray double complex together with its spectral-sequence pages.
//!
//! Entry points:
//! * [`linalg`] -- exact scalars, dense matrices, subspaces, Smith normal form.
//! * [`category`] -- quiver presentations, linear categories, functors,
//!   flattening to algebras, contraction/expansion.
//! * [`bimodule`] -- bimodules, duals, lifts, twists, tensor products.
//! * [`complex`] / [`hochschild`] -- based complexes, Hochschild-Mitchell
//!   (co)chain complexes, homology, the naive algebra-level oracle.
//! * [`covering`] -- finite groups, free actions, quotient categories,
//!   equivariant chain complexes, (co)invariants.
//! * [`spectral`] -- bar resolutions, group (co)homology, the Cartan-Leray
//!   bicomplex and its pages, degree-one embedding and rank-bound checks.
//! * [`job`] / [`report`] -- the text job format and machine-readable reports
//!   behind the `hmcl` command-line tool.

pub mod bimodule;
pub mod category;
pub mod complex;
pub mod covering;
pub mod hochschild;
pub mod job;
pub mod linalg;
pub mod report;
pub mod samples;
pub mod spectral;
