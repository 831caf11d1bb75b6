//! Exact-arithmetic core for hypergraph independence polynomials and
//! machine-checkable root certificates.
//!
//! The crate is built around a handful of pieces:
//!
//! * [`hypergraph`] — the immutable [`Hypergraph`](hypergraph::Hypergraph)
//!   representation with uniformity/linearity predicates, degree scans and
//!   covered-edge counts.
//! * [`construct`] — the edge-extension transform `S_G` (one fresh vertex per
//!   edge, enlarging each edge by its own fresh vertex) and the modular-lines
//!   family `H_{k,Δ}` on `[k] × Z_p`, chained into a counterexample pipeline.
//! * [`polynomial`] — dense big-integer independence polynomials: a
//!   backtracking brute-force counter, a subset-sum closed form for `Z_{S_G}`
//!   driven by a Gray-code scan, and exact rational evaluation.
//! * [`rigor`] — directed-rounding rational bounds for `ln`, r-th roots and
//!   large powers; everything a certificate needs to compare a rational
//!   against a transcendental without trusting floating point.
//! * [`certify`] — issues and checks [`RootCertificate`](certify::RootCertificate)s
//!   asserting that `Z_{S_H}` has a real root in `[λ₀, 0]`, plus the
//!   counterexample pipeline against conjectured zero-free disk radii.
//! * [`roots`] — exact bisection root isolation, a fixed-seed Aberth–Ehrlich
//!   complex solver, and zero-free-disk conformance checks.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON wire formats and the CLI
//! live in the companion `zfr-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod certify;
pub mod construct;
pub mod hypergraph;
pub mod polynomial;
pub mod rigor;
pub mod roots;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use certify::{
    alpha_from_degrees, certify_counterexample, certify_root_interval, compare_bounds,
    verify_inequality_chain, CertifyOptions, Mode, RootCertificate, SweepRow,
};
pub use construct::{
    counterexample, find_prime_in, h_construction, s_transform, CounterexampleMeta,
};
pub use hypergraph::{Hypergraph, VertexSet};
pub use polynomial::{independence_poly_bruteforce, z_sg_closed_form, IntPolynomial};
pub use roots::{complex_roots, isolate_real_root, sign_at, RootBracket};
