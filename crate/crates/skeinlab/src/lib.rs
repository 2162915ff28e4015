//! Exact diagrammatic algebra for dotted-matching skein modules.
//!
//! The crate is organized as a stack of small algebra engines, all running on
//! arbitrary-precision exact arithmetic (no floats anywhere):
//!
//! * [`exactmath`] — coefficient rings (integers, rationals, Laurent
//!   polynomials in `v` with `v^2 = q`, polynomials in `h, t`, rational
//!   functions) and exact linear algebra (Gaussian elimination, Smith normal
//!   form, fraction-free determinants).
//! * [`diagrams`] — crossingless matchings, dotted matchings, flat tangles,
//!   the block-tuple notation and its `r` statistic, and lattice-path
//!   bijections.
//! * [`skein`] — skein elements over the classical, `q = 1`, and equivariant
//!   `(h, t)` relation systems, with rewrite engines, presentation ranks, and
//!   confluence checks.
//! * [`tlcalc`] — the Temperley–Lieb / Kauffman–Lins engine: slice words,
//!   crossing expansion, Jones–Wenzl projectors, projector-box spaces, the
//!   embedding `psi` with its inverse and the generic-`q` reduction, braid
//!   and symmetric-group actions, and a matrix model of the quantum-group
//!   intertwiners.
//! * [`pairing`] — the bilinear form on dotted matchings, Gram matrices,
//!   X-cap duals via Gram inversion, and the projector-based dual-basis
//!   constructions.
//! * [`arcring`] — the arc rings `H^n` (and their `(h, t)` deformation):
//!   multiplication, centers, zeroth Hochschild homology, kernel ideals,
//!   bending isomorphisms, and quotient skein modules.
//! * [`cli`] — command implementations and the `verify` suite runner used by
//!   the `skeinlab` binary.

pub mod arcring;
pub mod cli;
pub mod diagrams;
pub mod exactmath;
pub mod pairing;
pub mod skein;
pub mod tlcalc;
