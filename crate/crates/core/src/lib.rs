//! Exact lattice arithmetic, monodromy derivation and period-map checks for the
//! family of cyclic triple covers of projective space branched along six
//! hyperplanes (equivalently, triple covers of the line branched at six points).
//!
//! The crate is organised around the objects that make the period geometry of
//! this family computable at desk scale:
//!
//! * [`eisenstein`] — exact arithmetic over Z\[ω\] (ω a primitive cube root of
//!   unity), rank-4 Hermitian lattices, isometries and complex reflections.
//! * [`residue`] — the finite quotient V = Λ/θΛ over F₃, its quadratic form,
//!   the orthogonal group of order 1440, spinor norms and the S₆ check.
//! * [`periods`] — numerical slit periods of the eigendifferential, analytic
//!   continuation along braids, derivation of the integral monodromy matrices
//!   and of the invariant Hermitian form, complex-ball geometry.
//! * [`moduli`] — six ordered points on the line and the associated six
//!   hyperplanes in 3-space: normalisation, equivalence, stability, covering
//!   equations and Hodge-number bookkeeping.
//! * [`torelli`] — the equivalence verdict: period points of stable
//!   configurations compared modulo the monodromy group, mirror geometry and
//!   degeneration tracking.
//! * [`birational`] — randomized verification of the explicit birational maps
//!   relating the family to the product construction (curve × Fermat curve).

pub mod birational;
pub mod certificate;
pub mod eisenstein;
pub mod moduli;
pub mod periods;
pub mod residue;
pub mod torelli;
