//! Decision procedures for admissible dimensions over a local field and the
//! abelian-variety reducibility verdict.
//!
//! The tame criterion is exact in both directions: dimension `d` is tamely
//! admissible iff some `m` with `gcd(m, p) = 1` and `phi(m) = d` has `q`
//! generating `(Z/mZ)^x`, and every such `m` indexes an explicit model in
//! [`crate::tamerep`]. The wild criterion `(p-1) | d` is necessary only;
//! nothing here claims wild realizability. Verdicts never overclaim: when a
//! hypothesis of the reducibility theorem fails, the outcome is
//! [`AvConclusion::NotDecidedByPaper`] with the failing hypothesis named.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::ntheory::{gcd, inverse_totient, is_generator, is_prime};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("residue characteristic must be prime, got {p}")]
    ResidueCharNotPrime { p: u64 },
    #[error("residue degree must be at least 1")]
    ResidueDegreeZero,
    #[error("residue field size {p}^{f} exceeds 64 bits")]
    ResidueFieldTooLarge { p: u64, f: u32 },
    #[error("{role} must be prime, got {n}")]
    NotPrime { n: u64, role: &'static str },
}

/// A local field described by its residue field: characteristic `p`, degree
/// `f`, cardinality `q = p^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalFieldParams {
    p: u64,
    f: u32,
    q: u64,
}

impl LocalFieldParams {
    pub fn new(p: u64, f: u32) -> Result<LocalFieldParams, ClassifyError> {
        if !is_prime(p) {
            return Err(ClassifyError::ResidueCharNotPrime { p });
        }
        if f == 0 {
            return Err(ClassifyError::ResidueDegreeZero);
        }
        let mut q: u64 = 1;
        for _ in 0..f {
            q = q
                .checked_mul(p)
                .ok_or(ClassifyError::ResidueFieldTooLarge { p, f })?;
        }
        Ok(LocalFieldParams { p, f, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    /// Residue field cardinality `p^f`.
    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for LocalFieldParams {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "p = {}, f = {}, q = {}", self.p, self.f, self.q)
    }
}

/// The conductors witnessing that dimension `d` is tamely admissible over
/// `K`: all `m` with `gcd(m, p) = 1`, `phi(m) = d`, and `q` generating
/// `(Z/mZ)^x`. Complete because the totient preimage search is.
pub fn tame_witnesses(field: &LocalFieldParams, d: u64) -> Vec<u64> {
    inverse_totient(d)
        .into_iter()
        .filter(|&m| gcd(m, field.p) == 1)
        .filter(|&m| is_generator(field.q, m).expect("gcd(q, m) = 1 since gcd(m, p) = 1"))
        .collect()
}

/// All admissible tame dimensions `d <= max_dim` with their witnesses.
pub fn tame_admissible_dims(
    field: &LocalFieldParams,
    max_dim: u64,
) -> Vec<(u64, Vec<u64>)> {
    (1..=max_dim)
        .filter_map(|d| {
            let ws = tame_witnesses(field, d);
            if ws.is_empty() {
                None
            } else {
                Some((d, ws))
            }
        })
        .collect()
}

/// Shape data for a candidate tame dimension: the ways to write
/// `d = (v-1) v^a` with `v` an odd prime different from `p`, plus the flag
/// for the special small dimensions 1 and 2 that fall outside that shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TameShape {
    pub d: u64,
    /// `(v, a)` pairs, sorted by `a` then `v`.
    pub decompositions: Vec<(u64, u32)>,
    /// True for `d = 1, 2`, admissible through `m = 1, 2, 3, 4, 6`.
    pub small_dim_exception: bool,
}

/// Decompose `d = (v-1) v^a` over odd primes `v != p`.
pub fn tame_shape_decompositions(d: u64, p: u64) -> TameShape {
    assert!(d >= 1, "dimension must be >= 1");
    let mut decompositions = Vec::new();
    // a = 0: v = d + 1
    let v = d + 1;
    if v % 2 == 1 && v != p && is_prime(v) {
        decompositions.push((v, 0u32));
    }
    // a >= 1: v is an odd prime divisor of d
    if d > 1 {
        let mut rest = d >> d.trailing_zeros();
        let mut v = 3u64;
        while v * v <= rest {
            if rest % v == 0 {
                try_shape(d, v, p, &mut decompositions);
                while rest % v == 0 {
                    rest /= v;
                }
            }
            v += 2;
        }
        if rest > 1 {
            try_shape(d, rest, p, &mut decompositions);
        }
    }
    decompositions.sort_by_key(|&(v, a)| (a, v));
    TameShape {
        d,
        decompositions,
        small_dim_exception: d <= 2,
    }
}

fn try_shape(d: u64, v: u64, p: u64, out: &mut Vec<(u64, u32)>) {
    if v == p || !is_prime(v) {
        return;
    }
    let mut pow = v;
    let mut a = 1u32;
    loop {
        match pow.checked_mul(v - 1) {
            Some(prod) if prod == d => {
                out.push((v, a));
            }
            _ => {}
        }
        match pow.checked_mul(v) {
            Some(next) if next <= d => {
                pow = next;
                a += 1;
            }
            _ => break,
        }
    }
}

/// The wild-ramification necessary condition: `(p - 1) | d`. Trivially true
/// for `p = 2`; never sufficient on its own.
pub fn wild_divisibility(field: &LocalFieldParams, d: u64) -> bool {
    assert!(d >= 1, "dimension must be >= 1");
    d % (field.p - 1).max(1) == 0
}

/// Full classification record for one candidate dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimVerdict {
    pub d: u64,
    pub tame_witnesses: Vec<u64>,
    pub tame_possible: bool,
    pub wild_necessary_ok: bool,
    pub shape_decompositions: Vec<(u64, u32)>,
}

pub fn dim_verdict(field: &LocalFieldParams, d: u64) -> DimVerdict {
    let witnesses = tame_witnesses(field, d);
    let tame_possible = !witnesses.is_empty();
    DimVerdict {
        d,
        tame_possible,
        tame_witnesses: witnesses,
        wild_necessary_ok: wild_divisibility(field, d),
        shape_decompositions: tame_shape_decompositions(d, field.p).decompositions,
    }
}

/// Outcome of the abelian-variety dimension test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AvConclusion {
    /// Every Galois representation of an abelian variety of this dimension
    /// over this field is forced to be (absolutely) reducible.
    ReducibleForced,
    /// Some hypothesis of the reducibility theorem fails; no conclusion.
    NotDecidedByPaper,
}

/// Structured grounds for the verdict, one entry per branch or per failed
/// hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum AvReason {
    /// No tame irreducible of dimension `2d` exists: every totient preimage
    /// of `2d` was checked against the generator criterion, and no
    /// `(v-1)v^a = 2d` shape with `v != p` survives.
    TameExcluded {
        rep_dim: u64,
        totient_preimages_checked: usize,
    },
    /// A wild irreducible of dimension `2d` would force
    /// `p` into `{2, 3, d+1, 2d+1}`, all ruled out by the hypotheses.
    WildExcluded {
        rep_dim: u64,
        forced_residue_chars: Vec<u64>,
    },
    DimensionNotPrime { d: u64 },
    TwoDPlusOnePrime { value: u64 },
    SmallResidueCharacteristic { p: u64 },
}

impl fmt::Display for AvReason {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AvReason::TameExcluded {
                rep_dim,
                totient_preimages_checked: 0,
            } => write!(
                out,
                "tame branch: {rep_dim} is not a totient value, so no conductor \
                 realizes it"
            ),
            AvReason::TameExcluded {
                rep_dim,
                totient_preimages_checked,
            } => write!(
                out,
                "tame branch: no admissible conductor realizes dimension {rep_dim} \
                 ({totient_preimages_checked} totient preimages checked, and no \
                 (v-1)v^a shape survives)"
            ),
            AvReason::WildExcluded {
                rep_dim,
                forced_residue_chars,
            } => write!(
                out,
                "wild branch: (p-1) | {rep_dim} would force p into {forced_residue_chars:?}, \
                 all excluded"
            ),
            AvReason::DimensionNotPrime { d } => {
                write!(out, "hypothesis fails: dimension {d} is not prime")
            }
            AvReason::TwoDPlusOnePrime { value } => {
                write!(out, "hypothesis fails: 2d + 1 = {value} is prime")
            }
            AvReason::SmallResidueCharacteristic { p } => {
                write!(out, "hypothesis fails: residue characteristic {p} is 2 or 3")
            }
        }
    }
}

/// Branch summaries serialized alongside the conclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TameBranch {
    pub possible: bool,
    pub witnesses: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WildBranch {
    pub divides: bool,
}

/// Verdict for abelian varieties of dimension `d` over `K`: representation
/// dimension `2d`, both exclusion branches, and the grounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AvVerdict {
    pub d: u64,
    pub rep_dim: u64,
    pub conclusion: AvConclusion,
    pub tame: TameBranch,
    pub wild: WildBranch,
    pub reasons: Vec<AvReason>,
}

/// Decide whether dimension-`d` abelian varieties over `K` are forced to
/// have reducible associated representations.
///
/// `ReducibleForced` requires `d` prime, `2d + 1` composite, and `p > 3`,
/// and is only emitted after both exclusion branches are re-verified
/// computationally: the tame witness search at dimension `2d` must come back
/// empty and `(p-1)` must not divide `2d`. Those two checks are theorems
/// under the hypotheses, so their failure would mean a bug, not a new
/// mathematical outcome.
pub fn av_verdict(field: &LocalFieldParams, d: u64) -> AvVerdict {
    assert!(d >= 1, "dimension must be >= 1");
    let rep_dim = 2 * d;
    let witnesses = tame_witnesses(field, rep_dim);
    let preimages_checked = inverse_totient(rep_dim).len();
    let wild_divides = wild_divisibility(field, rep_dim);
    let tame = TameBranch {
        possible: !witnesses.is_empty(),
        witnesses,
    };
    let wild = WildBranch {
        divides: wild_divides,
    };

    let mut failed = Vec::new();
    if !is_prime(d) {
        failed.push(AvReason::DimensionNotPrime { d });
    }
    if is_prime(rep_dim + 1) {
        failed.push(AvReason::TwoDPlusOnePrime { value: rep_dim + 1 });
    }
    if field.p <= 3 {
        failed.push(AvReason::SmallResidueCharacteristic { p: field.p });
    }
    if !failed.is_empty() {
        return AvVerdict {
            d,
            rep_dim,
            conclusion: AvConclusion::NotDecidedByPaper,
            tame,
            wild,
            reasons: failed,
        };
    }

    let shapes = tame_shape_decompositions(rep_dim, field.p);
    assert!(
        !tame.possible && shapes.decompositions.is_empty() && !wild.divides,
        "exclusion branches must hold whenever the hypotheses do; \
         a failure here is an implementation bug (d = {d}, {field})"
    );
    AvVerdict {
        d,
        rep_dim,
        conclusion: AvConclusion::ReducibleForced,
        tame,
        wild,
        reasons: vec![
            AvReason::TameExcluded {
                rep_dim,
                totient_preimages_checked: preimages_checked,
            },
            AvReason::WildExcluded {
                rep_dim,
                forced_residue_chars: vec![2, 3, d + 1, rep_dim + 1],
            },
        ],
    }
}

/// True iff `d` and `2d + 1` are both prime.
pub fn is_sophie_germain(d: u64) -> bool {
    match d.checked_mul(2).and_then(|t| t.checked_add(1)) {
        Some(t) => is_prime(d) && is_prime(t),
        None => false,
    }
}

/// For a prime `d`: true iff `d = 1 mod 3`, in which case `3 | 2d + 1` is
/// re-verified, so `d` is certainly not Sophie Germain.
pub fn mod3_family_check(d: u64) -> Result<bool, ClassifyError> {
    if !is_prime(d) {
        return Err(ClassifyError::NotPrime {
            n: d,
            role: "mod-3 family member",
        });
    }
    if d % 3 != 1 {
        return Ok(false);
    }
    let t = 2 * d + 1;
    assert!(t % 3 == 0, "2d + 1 = {t} must be divisible by 3 when d = 1 mod 3");
    assert!(
        !is_sophie_germain(d),
        "a prime d = 1 mod 3 cannot be Sophie Germain"
    );
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ntheory::{euler_phi, multiplicative_order};
    use crate::tamerep::build_tame_rep;

    fn k(p: u64, f: u32) -> LocalFieldParams {
        LocalFieldParams::new(p, f).unwrap()
    }

    #[test]
    fn field_params_validate() {
        assert_eq!(k(5, 2).q(), 25);
        assert_eq!(
            LocalFieldParams::new(4, 1),
            Err(ClassifyError::ResidueCharNotPrime { p: 4 })
        );
        assert_eq!(
            LocalFieldParams::new(5, 0),
            Err(ClassifyError::ResidueDegreeZero)
        );
        assert!(matches!(
            LocalFieldParams::new(2, 64),
            Err(ClassifyError::ResidueFieldTooLarge { .. })
        ));
    }

    #[test]
    fn admissible_dims_for_q5() {
        let field = k(5, 1);
        let dims = tame_admissible_dims(&field, 2);
        // d = 1 via m = 1, 2; d = 2 via m = 3 (5 = 2 generates) and m = 6;
        // m = 4 fails since 5 = 1 mod 4
        assert_eq!(dims, vec![(1, vec![1, 2]), (2, vec![3, 6])]);
    }

    #[test]
    fn admissible_dims_trivial_for_q7_depth_one() {
        let field = k(7, 1);
        assert_eq!(tame_admissible_dims(&field, 1), vec![(1, vec![1, 2])]);
    }

    #[test]
    fn dimension_two_absent_for_q25() {
        // 25 = 1 mod 3, mod 4, mod 6: no witness among inverse_totient(2)
        let field = k(5, 2);
        assert_eq!(inverse_totient(2), vec![3, 4, 6]);
        assert!(tame_witnesses(&field, 2).is_empty());
    }

    #[test]
    fn witnesses_agree_with_matrix_level_irreducibility() {
        let field = k(5, 1);
        for (_, ws) in tame_admissible_dims(&field, 12) {
            for m in ws {
                let rep = build_tame_rep(m, field.q()).unwrap();
                assert!(rep.commutant_report().unwrap().is_abs_irreducible, "m = {m}");
            }
        }
    }

    #[test]
    fn witness_soundness_re_verified() {
        let field = k(7, 2);
        for (d, ws) in tame_admissible_dims(&field, 40) {
            for m in ws {
                assert_eq!(gcd(m, field.p()), 1);
                assert_eq!(euler_phi(m), d);
                assert_eq!(
                    multiplicative_order(field.q(), m).unwrap(),
                    euler_phi(m)
                );
            }
        }
    }

    #[test]
    fn shape_examples() {
        let s = tame_shape_decompositions(6, 5);
        assert_eq!(s.decompositions, vec![(7, 0), (3, 1)]);
        assert!(!s.small_dim_exception);

        let s = tame_shape_decompositions(14, 5);
        assert!(s.decompositions.is_empty(), "15 is not prime, 7*2 has no solution");

        let s = tame_shape_decompositions(1, 5);
        assert!(s.small_dim_exception);
        assert!(s.decompositions.is_empty());

        // v = p is excluded
        assert_eq!(tame_shape_decompositions(6, 7).decompositions, vec![(3, 1)]);
        assert_eq!(tame_shape_decompositions(6, 3).decompositions, vec![(7, 0)]);
    }

    #[test]
    fn shape_matches_exhaustive_scan() {
        for d in 1..=500u64 {
            let got = tame_shape_decompositions(d, 5).decompositions;
            let mut want = Vec::new();
            for v in (3..=d + 1).step_by(2) {
                if v == 5 || !is_prime(v) {
                    continue;
                }
                let mut pow = 1u64;
                for a in 0..40u32 {
                    if (v - 1) * pow == d {
                        want.push((v, a));
                    }
                    match pow.checked_mul(v) {
                        Some(nx) if nx <= d => pow = nx,
                        _ => break,
                    }
                }
            }
            want.sort_by_key(|&(v, a)| (a, v));
            assert_eq!(got, want, "d = {d}");
        }
    }

    #[test]
    fn wild_divisibility_examples() {
        assert!(wild_divisibility(&k(5, 1), 8));
        assert!(!wild_divisibility(&k(7, 1), 8));
        for d in [1u64, 2, 3, 17] {
            assert!(wild_divisibility(&k(2, 1), d), "trivial for p = 2");
        }
    }

    #[test]
    fn av_verdict_genus_seven_jacobian_example() {
        // genus-7 Jacobian over the 5-adics: 15 = 2*7 + 1 is composite
        let v = av_verdict(&k(5, 1), 7);
        assert_eq!(v.conclusion, AvConclusion::ReducibleForced);
        assert_eq!(v.rep_dim, 14);
        assert!(!v.tame.possible);
        assert!(!v.wild.divides);
        assert_eq!(v.reasons.len(), 2);
    }

    #[test]
    fn av_verdict_hypothesis_failures() {
        let v = av_verdict(&k(5, 1), 2);
        assert_eq!(v.conclusion, AvConclusion::NotDecidedByPaper);
        assert_eq!(v.reasons, vec![AvReason::TwoDPlusOnePrime { value: 5 }]);

        let v = av_verdict(&k(3, 1), 7);
        assert_eq!(v.conclusion, AvConclusion::NotDecidedByPaper);
        assert_eq!(
            v.reasons,
            vec![AvReason::SmallResidueCharacteristic { p: 3 }]
        );

        let v = av_verdict(&k(5, 1), 11);
        assert_eq!(v.conclusion, AvConclusion::NotDecidedByPaper);
        assert_eq!(v.reasons, vec![AvReason::TwoDPlusOnePrime { value: 23 }]);

        let v = av_verdict(&k(5, 1), 4);
        assert_eq!(v.conclusion, AvConclusion::NotDecidedByPaper);
        assert_eq!(v.reasons, vec![AvReason::DimensionNotPrime { d: 4 }]);
    }

    #[test]
    fn av_verdict_non_sophie_germain_row() {
        // 27 composite
        let v = av_verdict(&k(5, 1), 13);
        assert_eq!(v.conclusion, AvConclusion::ReducibleForced);
    }

    #[test]
    fn no_false_positives_on_a_grid() {
        for p in [5u64, 7, 11, 13] {
            for f in 1..=3u32 {
                let field = k(p, f);
                for d in 1..=200u64 {
                    let v = av_verdict(&field, d);
                    if v.conclusion == AvConclusion::ReducibleForced {
                        assert!(is_prime(d));
                        assert!(!is_prime(2 * d + 1));
                        assert!(field.p() > 3);
                    }
                }
            }
        }
    }

    #[test]
    fn shapeless_dims_have_no_witnesses_on_grid() {
        // consistency of the two tame routes for d > 2
        for p in [5u64, 7, 11, 13] {
            let field = k(p, 1);
            for d in 3..=1000u64 {
                if tame_shape_decompositions(d, p).decompositions.is_empty() {
                    assert!(
                        tame_witnesses(&field, d).is_empty(),
                        "d = {d}, p = {p}: witness without shape"
                    );
                }
            }
        }
    }

    #[test]
    fn sophie_germain_examples() {
        assert!(is_sophie_germain(11)); // 23 prime
        assert!(!is_sophie_germain(7)); // 15 composite
        assert!(!is_sophie_germain(4)); // not prime
        assert!(is_sophie_germain(2)); // 5 prime
    }

    #[test]
    fn mod3_family_examples() {
        assert!(mod3_family_check(7).unwrap());
        assert!(mod3_family_check(13).unwrap());
        assert!(!mod3_family_check(11).unwrap()); // 11 = 2 mod 3
        assert!(matches!(
            mod3_family_check(9),
            Err(ClassifyError::NotPrime { n: 9, .. })
        ));
    }

    #[test]
    fn mod3_family_is_never_sophie_germain() {
        let mut seen = 0;
        for d in 2..=10_000u64 {
            if is_prime(d) && d % 3 == 1 {
                assert!(mod3_family_check(d).unwrap());
                assert!(!is_sophie_germain(d), "d = {d}");
                seen += 1;
            }
        }
        assert!(seen > 100);
    }
}
