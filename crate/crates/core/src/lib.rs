//! Exact-arithmetic toolkit for dimensions of local Galois representations.
//!
//! The crate answers three families of questions about a local field with
//! residue cardinality `q = p^f`:
//!
//! * which dimensions `d` carry an absolutely irreducible tame representation
//!   with rational traces on inertia, and for which conductors `m` the
//!   explicit two-generator model realizes them ([`tamerep`], [`classify`]);
//! * what the wild-ramification divisibility constraint `(p-1) | d` rules out,
//!   and the resulting reducibility verdict for Tate modules of abelian
//!   varieties ([`classify`]);
//! * how Sophie Germain primes are distributed, counted exactly by sieve and
//!   compared against the Hardy-Littlewood/Bateman-Horn prediction
//!   ([`germain`]).
//!
//! Everything outside [`germain`]'s floating-point predictions is exact: the
//! scalar type is an arbitrary-precision rational, and elements of the
//! cyclotomic field `Q(zeta_m)` are coefficient vectors reduced modulo the
//! m-th cyclotomic polynomial ([`cyclo`]).

pub mod classify;
pub mod cyclo;
pub mod germain;
pub mod ntheory;
pub mod tamerep;

pub use cyclo::{CycloElt, CycloField, CycloMatrix, Rational};
pub use ntheory::Factorization;
pub use tamerep::TameRepModel;
