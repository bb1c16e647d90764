//! Arithmetic in the 16-element ring `R = Z4 + wZ4` with `w^2 = w`.
//!
//! Elements are stored as the coefficient pair `(a, b)` of `a + wb`. The Gray
//! images and DNA letters are derived views, never the storage format.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use crate::error::Error;

/// A residue modulo 4.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);
    pub const ALL: [Z4; 4] = [Z4(0), Z4(1), Z4(2), Z4(3)];

    /// Reduces `v` modulo 4.
    #[inline]
    pub const fn new(v: u8) -> Z4 {
        Z4(v & 3)
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    /// Lee weight: 0 for 0, 1 for 1 and 3, 2 for 2.
    #[inline]
    pub const fn lee_weight(self) -> u32 {
        match self.0 {
            0 => 0,
            2 => 2,
            _ => 1,
        }
    }

    /// Watson-Crick complement on the letter encoding 0A 1T 2C 3G, i.e. `1 - v`.
    #[inline]
    pub const fn complement(self) -> Z4 {
        Z4((1 + 3 * self.0) & 3)
    }

    /// DNA base for this digit.
    #[inline]
    pub const fn base(self) -> char {
        match self.0 {
            0 => 'A',
            1 => 'T',
            2 => 'C',
            _ => 'G',
        }
    }

    pub fn from_base(c: char) -> Option<Z4> {
        match c.to_ascii_uppercase() {
            'A' => Some(Z4(0)),
            'T' => Some(Z4(1)),
            'C' => Some(Z4(2)),
            'G' => Some(Z4(3)),
            _ => None,
        }
    }
}

impl Add for Z4 {
    type Output = Z4;
    #[inline]
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    #[inline]
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0 + 4 - rhs.0) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    #[inline]
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    #[inline]
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl AddAssign for Z4 {
    #[inline]
    fn add_assign(&mut self, rhs: Z4) {
        *self = *self + rhs;
    }
}

impl SubAssign for Z4 {
    #[inline]
    fn sub_assign(&mut self, rhs: Z4) {
        *self = *self - rhs;
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The two Gray maps `R -> Z4^2` used for Lee-weight computations.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub enum GrayVariant {
    /// `a + wb -> (a, a + b)`. The only variant with DNA semantics.
    #[default]
    AAb,
    /// `a + wb -> (a + b, b)`.
    AbB,
}

impl GrayVariant {
    pub const ALL: [GrayVariant; 2] = [GrayVariant::AAb, GrayVariant::AbB];

    pub const fn name(self) -> &'static str {
        match self {
            GrayVariant::AAb => "a-ab",
            GrayVariant::AbB => "ab-b",
        }
    }
}

impl fmt::Display for GrayVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GrayVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "a-ab" => Ok(GrayVariant::AAb),
            "ab-b" => Ok(GrayVariant::AbB),
            _ => Err(Error::Parse(alloc::format!("unknown Gray variant `{s}`"))),
        }
    }
}

/// An element `a + wb` of `R`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RElement {
    a: Z4,
    b: Z4,
}

impl RElement {
    pub const ZERO: RElement = RElement::new(0, 0);
    pub const ONE: RElement = RElement::new(1, 0);
    pub const OMEGA: RElement = RElement::new(0, 1);
    /// `1 + 2w`, its own inverse and the value of `d(w)` for `alpha = 1 + 2w`.
    pub const ONE_PLUS_TWO_OMEGA: RElement = RElement::new(1, 2);

    /// All 16 elements in index order (`a + 4b`).
    pub const ALL: [RElement; 16] = {
        let mut out = [RElement::ZERO; 16];
        let mut i = 0;
        while i < 16 {
            out[i] = RElement::from_index(i as u8);
            i += 1;
        }
        out
    };

    #[inline]
    pub const fn new(a: u8, b: u8) -> RElement {
        RElement {
            a: Z4::new(a),
            b: Z4::new(b),
        }
    }

    #[inline]
    pub const fn from_z4(a: Z4) -> RElement {
        RElement { a, b: Z4::ZERO }
    }

    /// Inverse of [`RElement::index`]; only the low four bits are used.
    #[inline]
    pub const fn from_index(i: u8) -> RElement {
        RElement::new(i & 3, (i >> 2) & 3)
    }

    #[inline]
    pub const fn index(self) -> usize {
        (self.a.0 + 4 * self.b.0) as usize
    }

    #[inline]
    pub const fn a(self) -> Z4 {
        self.a
    }

    #[inline]
    pub const fn b(self) -> Z4 {
        self.b
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.a.0 == 0 && self.b.0 == 0
    }

    /// True when the element lies in the subring `Z4`.
    #[inline]
    pub const fn is_z4(self) -> bool {
        self.b.0 == 0
    }

    /// Units are exactly the elements with `a` and `a + b` odd.
    #[inline]
    pub const fn is_unit(self) -> bool {
        self.a.0 & 1 == 1 && (self.a.0 + self.b.0) & 1 == 1
    }

    pub fn inverse(self) -> Option<RElement> {
        if !self.is_unit() {
            return None;
        }
        RElement::ALL
            .iter()
            .copied()
            .find(|&v| self * v == RElement::ONE)
    }

    /// The order-2 automorphism `a + wb -> a + (1 + 3w)b`.
    #[inline]
    pub const fn theta(self) -> RElement {
        RElement::new(self.a.0 + self.b.0, 3 * self.b.0)
    }

    pub const fn gray(self, variant: GrayVariant) -> (Z4, Z4) {
        let s = Z4::new(self.a.0 + self.b.0);
        match variant {
            GrayVariant::AAb => (self.a, s),
            GrayVariant::AbB => (s, self.b),
        }
    }

    /// Inverse of the Gray map.
    pub const fn from_gray(pair: (Z4, Z4), variant: GrayVariant) -> RElement {
        match variant {
            GrayVariant::AAb => RElement::new(pair.0 .0, pair.1 .0 + 4 - pair.0 .0),
            GrayVariant::AbB => RElement::new(pair.0 .0 + 4 - pair.1 .0, pair.1 .0),
        }
    }

    /// Lee weight of the `(a, a + b)` Gray pair, in `0..=4`.
    #[inline]
    pub const fn lee_weight(self) -> u32 {
        let (x, y) = self.gray(GrayVariant::AAb);
        x.lee_weight() + y.lee_weight()
    }

    /// `1 + 3r`, so that `r + r^c = 1`.
    #[inline]
    pub const fn complement(self) -> RElement {
        RElement::new(1 + 3 * self.a.0, 3 * self.b.0)
    }

    /// The two DNA letters of the `(a, a + b)` Gray pair.
    pub const fn dna_pair(self) -> [char; 2] {
        let (x, y) = self.gray(GrayVariant::AAb);
        [x.base(), y.base()]
    }

    pub fn from_dna_pair(pair: [char; 2]) -> Option<RElement> {
        let x = Z4::from_base(pair[0])?;
        let y = Z4::from_base(pair[1])?;
        Some(RElement::from_gray((x, y), GrayVariant::AAb))
    }
}

impl From<Z4> for RElement {
    fn from(a: Z4) -> RElement {
        RElement::from_z4(a)
    }
}

impl Add for RElement {
    type Output = RElement;
    #[inline]
    fn add(self, rhs: RElement) -> RElement {
        RElement {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for RElement {
    type Output = RElement;
    #[inline]
    fn sub(self, rhs: RElement) -> RElement {
        RElement {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for RElement {
    type Output = RElement;
    #[inline]
    fn neg(self) -> RElement {
        RElement {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for RElement {
    type Output = RElement;
    // (a1 + wb1)(a2 + wb2) = a1a2 + w(a1b2 + b1a2 + b1b2)
    #[inline]
    fn mul(self, rhs: RElement) -> RElement {
        RElement {
            a: self.a * rhs.a,
            b: self.a * rhs.b + self.b * rhs.a + self.b * rhs.b,
        }
    }
}

impl AddAssign for RElement {
    #[inline]
    fn add_assign(&mut self, rhs: RElement) {
        *self = *self + rhs;
    }
}

impl SubAssign for RElement {
    #[inline]
    fn sub_assign(&mut self, rhs: RElement) {
        *self = *self - rhs;
    }
}

impl fmt::Display for RElement {
    /// Prints `a`, `bw` or `a+bw`, omitting a unit coefficient on `w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a.0, self.b.0);
        match (a, b) {
            (_, 0) => write!(f, "{a}"),
            (0, 1) => f.write_str("w"),
            (0, _) => write!(f, "{b}w"),
            (_, 1) => write!(f, "{a}+w"),
            _ => write!(f, "{a}+{b}w"),
        }
    }
}

impl RElement {
    /// True when the printed form has two terms and needs parentheses as a
    /// polynomial coefficient.
    pub(crate) fn is_compound(self) -> bool {
        self.a.0 != 0 && self.b.0 != 0
    }
}

/// Parses one additive term: `3`, `w`, `2w`, `2*w`.
fn parse_term(t: &str) -> Option<RElement> {
    let t = t.strip_suffix('*').unwrap_or(t);
    if let Some(c) = t.strip_suffix('w').or_else(|| t.strip_suffix('ω')) {
        let c = c.strip_suffix('*').unwrap_or(c);
        let k = if c.is_empty() {
            1
        } else {
            c.parse::<u32>().ok()?
        };
        Some(RElement::new(0, (k % 4) as u8))
    } else {
        let k = t.parse::<u32>().ok()?;
        Some(RElement::new((k % 4) as u8, 0))
    }
}

impl FromStr for RElement {
    type Err = Error;

    /// Accepts `a`, `w`, `bw`, `a+bw`, `bw+a` with arbitrary whitespace and
    /// optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut body = compact.as_str();
        if body.starts_with('(') && body.ends_with(')') {
            body = &body[1..body.len() - 1];
        }
        if body.is_empty() {
            return Err(Error::Parse(alloc::format!("empty ring element `{s}`")));
        }
        let mut acc = RElement::ZERO;
        for term in body.split('+') {
            acc += parse_term(term)
                .ok_or_else(|| Error::Parse(alloc::format!("bad ring element `{s}`")))?;
        }
        Ok(acc)
    }
}

/// A theta-derivation `d(r) = alpha (theta(r) - r)`, which requires
/// `theta(alpha) + alpha = 0`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub struct Derivation {
    alpha: RElement,
}

impl Derivation {
    /// The degenerate derivation, for plain theta-skew rings.
    pub const ZERO: Derivation = Derivation {
        alpha: RElement::ZERO,
    };

    /// The admissible values of `alpha`: `0, 2, 1 + 2w, 3 + 2w`.
    pub const ADMISSIBLE: [RElement; 4] = [
        RElement::new(0, 0),
        RElement::new(2, 0),
        RElement::new(1, 2),
        RElement::new(3, 2),
    ];

    pub fn new(alpha: RElement) -> Result<Derivation, Error> {
        if (alpha.theta() + alpha).is_zero() {
            Ok(Derivation { alpha })
        } else {
            Err(Error::InvalidDerivation(alpha))
        }
    }

    #[inline]
    pub const fn alpha(self) -> RElement {
        self.alpha
    }

    /// `d(a + wb) = alpha (1 + 2w) b`.
    #[inline]
    pub fn apply(self, r: RElement) -> RElement {
        self.alpha * RElement::ONE_PLUS_TWO_OMEGA * RElement::from_z4(r.b())
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alpha)
    }
}

impl FromStr for Derivation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Derivation::new(s.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn el(s: &str) -> RElement {
        s.parse().unwrap()
    }

    // Hand expansion of a + (1 + 3w)b through the raw multiplication rule,
    // kept apart from `theta` itself.
    fn theta_by_expansion(r: RElement) -> RElement {
        RElement::from_z4(r.a()) + RElement::new(1, 3) * RElement::from_z4(r.b())
    }

    #[test]
    fn theta_examples() {
        assert_eq!(el("w").theta(), el("1+3w"));
        assert_eq!(el("2").theta(), el("2"));
        assert_eq!(el("3+2w").theta().theta(), el("3+2w"));
        for r in RElement::ALL {
            assert_eq!(r.theta(), theta_by_expansion(r));
        }
    }

    #[test]
    fn derivation_examples() {
        let d = Derivation::new(el("1+2w")).unwrap();
        assert_eq!(d.apply(el("w")), RElement::ONE);
        let d2 = Derivation::new(el("2")).unwrap();
        assert_eq!(d2.apply(el("w")), el("2"));
        for alpha in Derivation::ADMISSIBLE {
            let d = Derivation::new(alpha).unwrap();
            for c in Z4::ALL {
                assert!(d.apply(c.into()).is_zero());
            }
        }
    }

    #[test]
    fn admissible_alphas_are_exactly_the_solutions() {
        let solutions: alloc::vec::Vec<_> = RElement::ALL
            .iter()
            .copied()
            .filter(|&a| Derivation::new(a).is_ok())
            .collect();
        let mut expected = Derivation::ADMISSIBLE.to_vec();
        expected.sort();
        let mut got = solutions;
        got.sort();
        assert_eq!(got, expected);
        assert!(Derivation::new(el("1")).is_err());
    }

    #[test]
    fn units() {
        assert!(el("1+2w").is_unit());
        assert!(!el("2").is_unit());
        assert!(el("3").is_unit());
        assert!(!el("w").is_unit());
        let count = RElement::ALL.iter().filter(|r| r.is_unit()).count();
        assert_eq!(count, 4);
        for r in RElement::ALL {
            assert_eq!(r.is_unit(), r.inverse().is_some());
        }
    }

    #[test]
    fn gray_and_lee() {
        assert_eq!(el("2+w").gray(GrayVariant::AAb), (Z4::TWO, Z4::THREE));
        assert_eq!(RElement::ZERO.gray(GrayVariant::AAb), (Z4::ZERO, Z4::ZERO));
        assert_eq!(el("3+2w").gray(GrayVariant::AbB), (Z4::ONE, Z4::TWO));
        assert_eq!(el("3+2w").lee_weight(), 2);
        assert_eq!(RElement::ZERO.lee_weight(), 0);
        assert_eq!(el("2+2w").lee_weight(), 2);
        for v in GrayVariant::ALL {
            for r in RElement::ALL {
                assert_eq!(RElement::from_gray(r.gray(v), v), r);
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(RElement::ZERO.complement(), RElement::ONE);
        assert_eq!(el("2").complement(), el("3"));
        assert_eq!(el("w").complement(), el("1+3w"));
    }

    #[test]
    fn dna_pairs() {
        let s = |r: RElement| r.dna_pair().iter().collect::<alloc::string::String>();
        assert_eq!(s(el("w")), "AT");
        assert_eq!(s(RElement::ZERO), "AA");
        assert_eq!(s(el("3+3w")), "GC");
        for r in RElement::ALL {
            assert_eq!(RElement::from_dna_pair(r.dna_pair()), Some(r));
        }
    }

    #[test]
    fn text_round_trip() {
        for r in RElement::ALL {
            assert_eq!(el(&r.to_string()), r);
        }
        assert_eq!(el(" 2 + 3w "), RElement::new(2, 3));
        assert_eq!(el("3w+3"), RElement::new(3, 3));
        assert_eq!(el("(w+1)"), RElement::new(1, 1));
        assert_eq!(el("3ω"), RElement::new(0, 3));
        assert!("x".parse::<RElement>().is_err());
        assert!("".parse::<RElement>().is_err());
        assert!("2++w".parse::<RElement>().is_err());
    }
}
