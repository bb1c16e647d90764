//! Reversal and reverse-complement over `R`, reversibility checks, and DNA
//! codes built by adding the all-ones word.
//!
//! DNA semantics use the `(a, a+b)` Gray map only. Under it, reversing the
//! `Z4` image of `v` is the image of `(theta(v_{n-1}), ..., theta(v_0))`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::code::ConstaCodeSpec;
use crate::error::Error;
use crate::linalg::Z4Code;
use crate::poly::SkewPoly;
use crate::ring::{GrayVariant, RElement, Z4};

/// `(theta(v_{n-1}), ..., theta(v_0))`.
pub fn reverse_r(v: &[RElement]) -> Vec<RElement> {
    v.iter().rev().map(|x| x.theta()).collect()
}

/// `1 + 3 reverse_r(v)` componentwise.
pub fn reverse_complement_r(v: &[RElement]) -> Vec<RElement> {
    v.iter().rev().map(|x| x.theta().complement()).collect()
}

/// Coordinate reversal over `Z4`.
pub fn reverse_z4(v: &[Z4]) -> Vec<Z4> {
    v.iter().rev().copied().collect()
}

/// Reversed Watson-Crick complement of a `Z4` word.
pub fn reverse_complement_z4(v: &[Z4]) -> Vec<Z4> {
    v.iter().rev().map(|x| x.complement()).collect()
}

/// `0 -> A, 1 -> T, 2 -> C, 3 -> G`.
pub fn dna_string(v: &[Z4]) -> String {
    v.iter().map(|x| x.base()).collect()
}

pub fn parse_dna(s: &str) -> Result<Vec<Z4>, Error> {
    s.chars()
        .map(|c| {
            Z4::from_base(c).ok_or_else(|| Error::Parse(alloc::format!("bad DNA letter `{c}`")))
        })
        .collect()
}

/// DNA string of an `R` vector via the pair table.
pub fn dna_of_r(v: &[RElement]) -> String {
    v.iter().flat_map(|x| x.dna_pair()).collect()
}

/// Closed under coordinate reversal. Reversal is linear, so checking the
/// basis rows suffices.
pub fn is_r_code(code: &Z4Code) -> bool {
    code.basis()
        .iter()
        .all(|r| code.contains(&reverse_z4(r)).expect("same length"))
}

/// Closed under reversed complement: an R-code containing the all-ones word.
pub fn is_rc_code(code: &Z4Code) -> bool {
    is_r_code(code)
        && code
            .contains(&vec![Z4::ONE; code.length()])
            .expect("same length")
}

/// Outcome of one sufficient condition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Condition {
    Pass,
    Fail,
    /// Holds trivially because `g2 = 0`.
    Vacuous,
    /// `deg g2 = deg g1`, where the condition is not stated.
    NotApplicable,
}

impl Condition {
    pub fn holds(self) -> bool {
        matches!(self, Condition::Pass | Condition::Vacuous)
    }

    fn from_bool(b: bool) -> Condition {
        if b {
            Condition::Pass
        } else {
            Condition::Fail
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Condition::Pass => "pass",
            Condition::Fail => "fail",
            Condition::Vacuous => "vacuous",
            Condition::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The polynomial whose membership the third condition tests.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MembershipPoly {
    /// `d(w) g2`.
    DOmegaG2,
    /// `(1 + 2w) g2`.
    OnePlusTwoOmegaG2,
}

impl MembershipPoly {
    pub fn name(self) -> &'static str {
        match self {
            MembershipPoly::DOmegaG2 => "d(w)*g2",
            MembershipPoly::OnePlusTwoOmegaG2 => "(1+2w)*g2",
        }
    }
}

impl fmt::Display for MembershipPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sufficient reversibility conditions on `g = g1 + w g2` next to the exact
/// answers computed on the Gray image.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReversibilityReport {
    pub m: usize,
    /// `deg g2`, absent when `g2 = 0`.
    pub m_prime: Option<usize>,
    /// `g1 = g1*`.
    pub g1_self_reciprocal: Condition,
    /// `g2* x^(m - m') = g2`.
    pub g2_shifted_reciprocal: Condition,
    pub membership_poly: MembershipPoly,
    pub membership: Condition,
    pub sufficient_pass: bool,
    pub exact_r_code: bool,
    pub exact_rc_code: bool,
}

/// Evaluates the sufficient conditions for `C = <g>` to be an R-code and the
/// exact R and RC properties of its `(a, a+b)` Gray image.
pub fn check_sufficient(spec: &ConstaCodeSpec) -> ReversibilityReport {
    let parts = spec.g().omega_decompose();
    let (g1, g2) = (parts.g1, parts.g2);
    let m = g1.degree().expect("monic");
    let m_prime = g2.degree();
    let der = spec.derivation();

    let g1_self_reciprocal = Condition::from_bool(g1.reciprocal().expect("Z4") == g1);

    let g2_shifted_reciprocal = match m_prime {
        None => Condition::Vacuous,
        Some(mp) if mp >= m => Condition::NotApplicable,
        Some(mp) => Condition::from_bool(g2.reciprocal().expect("Z4").shift(m - mp) == g2),
    };

    // n even: d(w) g2 for even m, (1+2w) g2 for odd m; n odd: the reverse
    let use_d = spec.n().is_multiple_of(2) == (m % 2 == 0);
    let membership_poly = if use_d {
        MembershipPoly::DOmegaG2
    } else {
        MembershipPoly::OnePlusTwoOmegaG2
    };
    let membership = if m_prime.is_none() {
        Condition::Vacuous
    } else {
        let c = match membership_poly {
            MembershipPoly::DOmegaG2 => der.apply(RElement::OMEGA),
            MembershipPoly::OnePlusTwoOmegaG2 => RElement::ONE_PLUS_TWO_OMEGA,
        };
        let p: SkewPoly = g2.scale_left(c);
        Condition::from_bool(p.is_right_divisible_by(spec.g()).expect("monic"))
    };

    let sufficient_pass =
        g1_self_reciprocal.holds() && g2_shifted_reciprocal.holds() && membership.holds();
    let phi = spec.gray_image(GrayVariant::AAb);
    ReversibilityReport {
        m,
        m_prime,
        g1_self_reciprocal,
        g2_shifted_reciprocal,
        membership_poly,
        membership,
        sufficient_pass,
        exact_r_code: is_r_code(&phi),
        exact_rc_code: is_rc_code(&phi),
    }
}

/// The `Z4` span of the all-ones word of the given length.
pub fn all_ones_code(length: usize) -> Z4Code {
    Z4Code::from_rows(length, &[vec![Z4::ONE; length]]).expect("uniform length")
}

/// `Phi(C) + <1...1>` for a Gray image that is an R-code.
pub fn construction2_from_image(phi: &Z4Code) -> Result<Z4Code, Error> {
    if !is_r_code(phi) {
        return Err(Error::NotReversible);
    }
    phi.sum(&all_ones_code(phi.length()))
}

/// DNA code `D = Phi(C) + <1...1>` of length `2n`; the Gray image must be an
/// R-code.
pub fn construction2(spec: &ConstaCodeSpec, variant: GrayVariant) -> Result<Z4Code, Error> {
    if variant != GrayVariant::AAb {
        return Err(Error::DnaNeedsStandardGray);
    }
    construction2_from_image(&spec.gray_image(variant))
}

/// Every codeword as a DNA string, in the counting order of
/// [`Z4Code::codewords`].
pub fn dna_export(code: &Z4Code, budget: u64) -> Result<Vec<String>, Error> {
    Ok(code.codewords(budget)?.map(|w| dna_string(&w)).collect())
}
