//! The skew polynomial ring `R[x; theta, d]` with multiplication twisted by
//! `x r = theta(r) x + d(r)`.
//!
//! Because `d(theta(r)) + theta(d(r)) = 0` and `d^2 = 0`, `x^2` is central and
//! `x^i r` has at most two terms. Multiplication uses that closed form
//! directly instead of pushing `x` past coefficients one step at a time.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::ring::{Derivation, RElement};

/// A skew polynomial, lowest degree first, with trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewPoly {
    coeffs: Vec<RElement>,
    der: Derivation,
}

/// `g = g1 + w g2` with `g1, g2` over `Z4`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OmegaParts {
    pub g1: SkewPoly,
    pub g2: SkewPoly,
}

impl SkewPoly {
    pub fn new(mut coeffs: Vec<RElement>, der: Derivation) -> SkewPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs, der }
    }

    pub fn zero(der: Derivation) -> SkewPoly {
        SkewPoly {
            coeffs: Vec::new(),
            der,
        }
    }

    pub fn constant(c: RElement, der: Derivation) -> SkewPoly {
        SkewPoly::new(vec![c], der)
    }

    pub fn one(der: Derivation) -> SkewPoly {
        SkewPoly::constant(RElement::ONE, der)
    }

    /// `c x^k`.
    pub fn monomial(c: RElement, k: usize, der: Derivation) -> SkewPoly {
        let mut coeffs = vec![RElement::ZERO; k + 1];
        coeffs[k] = c;
        SkewPoly::new(coeffs, der)
    }

    /// `x^n - gamma`.
    pub fn x_pow_minus(n: usize, gamma: RElement, der: Derivation) -> SkewPoly {
        let mut coeffs = vec![RElement::ZERO; n + 1];
        coeffs[n] = RElement::ONE;
        coeffs[0] -= gamma;
        SkewPoly::new(coeffs, der)
    }

    /// `1 + x + ... + x^(n-1)`.
    pub fn all_ones(n: usize, der: Derivation) -> SkewPoly {
        SkewPoly::new(vec![RElement::ONE; n], der)
    }

    #[inline]
    pub fn coeffs(&self) -> &[RElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    #[inline]
    pub fn coeff(&self, i: usize) -> RElement {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    #[inline]
    pub fn derivation(&self) -> Derivation {
        self.der
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<RElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(RElement::ONE)
    }

    pub fn is_z4(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_z4())
    }

    /// Coefficient vector padded with zeros to `len` entries.
    pub fn to_vec(&self, len: usize) -> Vec<RElement> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), RElement::ZERO);
        v
    }

    /// Same coefficients under another derivation.
    pub fn with_derivation(&self, der: Derivation) -> SkewPoly {
        SkewPoly {
            coeffs: self.coeffs.clone(),
            der,
        }
    }

    fn check(&self, other: &SkewPoly) -> Result<(), Error> {
        if self.der == other.der {
            Ok(())
        } else {
            Err(Error::DerivationMismatch)
        }
    }

    pub fn try_add(&self, other: &SkewPoly) -> Result<SkewPoly, Error> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(SkewPoly::new(coeffs, self.der))
    }

    pub fn try_sub(&self, other: &SkewPoly) -> Result<SkewPoly, Error> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(SkewPoly::new(coeffs, self.der))
    }

    /// The noncommutative product `self * other`.
    pub fn try_mul(&self, other: &SkewPoly) -> Result<SkewPoly, Error> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SkewPoly::zero(self.der));
        }
        let mut out = vec![RElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            if i % 2 == 0 {
                for (j, &g) in other.coeffs.iter().enumerate() {
                    out[i + j] += f * g;
                }
            } else {
                // x^i g = theta(g) x^i + d(g) x^(i-1) for odd i
                for (j, &g) in other.coeffs.iter().enumerate() {
                    out[i + j] += f * g.theta();
                    out[i + j - 1] += f * self.der.apply(g);
                }
            }
        }
        Ok(SkewPoly::new(out, self.der))
    }

    /// `c * self` for a constant `c` (coefficient-wise, no twisting).
    pub fn scale_left(&self, c: RElement) -> SkewPoly {
        SkewPoly::new(self.coeffs.iter().map(|&x| c * x).collect(), self.der)
    }

    /// `self * x^k`, a plain coefficient shift.
    pub fn shift(&self, k: usize) -> SkewPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![RElement::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        SkewPoly::new(coeffs, self.der)
    }

    /// `x^n r` as a polynomial: `r x^n` for even `n`, otherwise
    /// `theta(r) x^n + d(r) x^(n-1)`.
    pub fn monomial_shift(n: usize, r: RElement, der: Derivation) -> SkewPoly {
        if n.is_multiple_of(2) {
            SkewPoly::monomial(r, n, der)
        } else {
            let mut coeffs = vec![RElement::ZERO; n + 1];
            coeffs[n] = r.theta();
            coeffs[n - 1] = der.apply(r);
            SkewPoly::new(coeffs, der)
        }
    }

    /// Right division: returns `(q, r)` with `self = q * h + r` and `r = 0` or
    /// `deg r < deg h`. `h` must have a unit leading coefficient.
    pub fn right_divmod(&self, h: &SkewPoly) -> Result<(SkewPoly, SkewPoly), Error> {
        self.check(h)?;
        let m = h.degree().ok_or(Error::ZeroDivisor)?;
        let lead = h.coeffs[m];
        if !lead.is_unit() {
            return Err(Error::NonUnitLeading);
        }
        // theta has order 2, so only two inverses are ever needed.
        let inv_even = lead.inverse().ok_or(Error::NonUnitLeading)?;
        let inv_odd = lead.theta().inverse().ok_or(Error::NonUnitLeading)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RElement::ZERO; rem.len().saturating_sub(m)];
        while let Some(k) = top_degree(&rem) {
            if k < m {
                break;
            }
            let s = k - m;
            let t = rem[k] * if s % 2 == 0 { inv_even } else { inv_odd };
            quot[s] += t;
            // subtract t x^s h
            for (j, &hj) in h.coeffs.iter().enumerate() {
                if s % 2 == 0 {
                    rem[s + j] -= t * hj;
                } else {
                    rem[s + j] -= t * hj.theta();
                    rem[s + j - 1] -= t * self.der.apply(hj);
                }
            }
            debug_assert!(rem[k].is_zero());
            rem.truncate(k);
        }
        Ok((SkewPoly::new(quot, self.der), SkewPoly::new(rem, self.der)))
    }

    /// True iff `h` right-divides `self`.
    pub fn is_right_divisible_by(&self, h: &SkewPoly) -> Result<bool, Error> {
        Ok(self.right_divmod(h)?.1.is_zero())
    }

    /// `f*(x) = sum f_i x^(deg f - i)`; only defined over `Z4`.
    pub fn reciprocal(&self) -> Result<SkewPoly, Error> {
        if !self.is_z4() {
            return Err(Error::NotZ4);
        }
        let coeffs = self.coeffs.iter().rev().copied().collect();
        Ok(SkewPoly::new(coeffs, self.der))
    }

    pub fn omega_decompose(&self) -> OmegaParts {
        let g1 = self
            .coeffs
            .iter()
            .map(|c| RElement::from_z4(c.a()))
            .collect();
        let g2 = self
            .coeffs
            .iter()
            .map(|c| RElement::from_z4(c.b()))
            .collect();
        OmegaParts {
            g1: SkewPoly::new(g1, self.der),
            g2: SkewPoly::new(g2, self.der),
        }
    }

    /// Parses the textual grammar, e.g. `x^3 + (3w+3)*x^2 + (w+3)*x + 2w+1`.
    /// Terms may appear in any order; like terms are summed.
    pub fn parse(s: &str, der: Derivation) -> Result<SkewPoly, Error> {
        let text: String = s
            .replace("\\omega", "w")
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .collect();
        if text.is_empty() {
            return Err(Error::Parse(String::from("empty polynomial")));
        }
        let mut coeffs: Vec<RElement> = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        let bytes = text.as_bytes();
        let mut terms = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' if depth == 0 => {
                    terms.push(&text[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
            if depth < 0 {
                return Err(bad_poly(s));
            }
        }
        if depth != 0 {
            return Err(bad_poly(s));
        }
        terms.push(&text[start..]);
        for term in terms {
            let (c, k) = parse_poly_term(term).ok_or_else(|| bad_poly(s))?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, RElement::ZERO);
            }
            coeffs[k] += c;
        }
        Ok(SkewPoly::new(coeffs, der))
    }
}

fn bad_poly(s: &str) -> Error {
    Error::Parse(alloc::format!("bad polynomial `{s}`"))
}

fn top_degree(v: &[RElement]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

fn parse_poly_term(term: &str) -> Option<(RElement, usize)> {
    if term.is_empty() {
        return None;
    }
    // the variable is the first `x` outside parentheses
    let mut depth = 0;
    let mut xpos = None;
    for (i, ch) in term.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' if depth == 0 => {
                xpos = Some(i);
                break;
            }
            _ => {}
        }
    }
    match xpos {
        None => Some((term.parse().ok()?, 0)),
        Some(p) => {
            let coef = term[..p].strip_suffix('*').unwrap_or(&term[..p]);
            let c = if coef.is_empty() {
                RElement::ONE
            } else {
                coef.parse().ok()?
            };
            let rest = &term[p + 1..];
            let k = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')?.parse::<usize>().ok()?
            };
            Some((c, k))
        }
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let var = match k {
                0 => None,
                1 => Some(String::from("x")),
                _ => Some(alloc::format!("x^{k}")),
            };
            match var {
                None => write!(f, "{c}")?,
                Some(v) if c == RElement::ONE => f.write_str(&v)?,
                Some(v) if c.is_compound() => write!(f, "({c})*{v}")?,
                Some(v) => write!(f, "{c}*{v}")?,
            }
        }
        Ok(())
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    /// Panics on a derivation mismatch; use [`SkewPoly::try_add`] otherwise.
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        self.try_add(rhs).expect("derivation mismatch")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self.try_sub(rhs).expect("derivation mismatch")
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        self.try_mul(rhs).expect("derivation mismatch")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        SkewPoly::new(self.coeffs.iter().map(|&c| -c).collect(), self.der)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn der(s: &str) -> Derivation {
        s.parse().unwrap()
    }

    fn p(s: &str, d: Derivation) -> SkewPoly {
        SkewPoly::parse(s, d).unwrap()
    }

    /// Product computed only from `x r = theta(r) x + d(r)`: every monomial
    /// of the left factor pushes `x` past the right factor one step at a time.
    fn mul_by_single_steps(f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        let d = f.derivation();
        let mut acc = vec![RElement::ZERO; f.coeffs().len() + g.coeffs().len() + 1];
        for (i, &fi) in f.coeffs().iter().enumerate() {
            let mut cur: Vec<RElement> = g.coeffs().to_vec();
            for _ in 0..i {
                let mut next = vec![RElement::ZERO; cur.len() + 1];
                for (k, &c) in cur.iter().enumerate() {
                    next[k + 1] += c.theta();
                    next[k] += d.apply(c);
                }
                cur = next;
            }
            for (k, &c) in cur.iter().enumerate() {
                acc[k] += fi * c;
            }
        }
        SkewPoly::new(acc, d)
    }

    fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, d: Derivation) -> SkewPoly {
        let len = rng.random_range(0..=max_deg + 1);
        SkewPoly::new(
            (0..len)
                .map(|_| RElement::from_index(rng.random_range(0..16)))
                .collect(),
            d,
        )
    }

    const G51: &str =
        "x^11 + w*x^10 + 2x^9 + (2w+1)x^8 + x^6 + x^5 + (w+3)x^4 + 3x^3 + (3w+2)x^2 + x + w + 1";
    const Q51: &str = "x^3 + (w+3)x^2 + x + w + 2";

    #[test]
    fn add_examples() {
        let d = der("1+2w");
        assert_eq!(&p("x+1", d) + &p("3x", d), SkewPoly::one(d));
        let f = p("x^2+w", d);
        assert_eq!(&f + &SkewPoly::zero(d), f);
        assert!((&p("2x^2", d) + &p("2x^2", d)).is_zero());
        assert_eq!(
            p("x", d).try_add(&p("x", der("2"))),
            Err(Error::DerivationMismatch)
        );
    }

    #[test]
    fn x_times_omega() {
        let d = der("1+2w");
        assert_eq!(&p("x", d) * &p("w", d), p("(1+3w)x + 1", d));
        assert_eq!(
            SkewPoly::monomial_shift(1, RElement::OMEGA, d),
            p("(1+3w)x + 1", d)
        );
        assert_eq!(
            SkewPoly::monomial_shift(4, "3+w".parse().unwrap(), d),
            p("(3+w)x^4", d)
        );
        let r: RElement = "2+3w".parse().unwrap();
        assert_eq!(SkewPoly::monomial_shift(0, r, d), SkewPoly::constant(r, d));
        assert_eq!(&p("x^2", d) * &SkewPoly::constant(r, d), p("(2+3w)x^2", d));
    }

    #[test]
    fn factorization_of_x14_minus_1() {
        let d = der("1+2w");
        let g = p(G51, d);
        let q = p(Q51, d);
        assert_eq!(&q * &g, p("x^14 + 3", d));
        let (qq, r) = p("x^14+3", d).right_divmod(&g).unwrap();
        assert_eq!(qq, q);
        assert!(r.is_zero());
    }

    #[test]
    fn divmod_edge_cases() {
        let d = der("2");
        let f = p("x^3 + w x + 1", d);
        let (q, r) = f.right_divmod(&f).unwrap();
        assert_eq!(q, SkewPoly::one(d));
        assert!(r.is_zero());
        let small = p("x + 3", d);
        let (q, r) = small.right_divmod(&f).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, small);
        assert_eq!(f.right_divmod(&p("2x+1", d)), Err(Error::NonUnitLeading));
        assert_eq!(f.right_divmod(&SkewPoly::zero(d)), Err(Error::ZeroDivisor));
    }

    /// Brute-force oracle: h right-divides x^2 - 1 iff some monic q of degree
    /// 1 has q * h = x^2 - 1, with the product expanded by single steps.
    fn divides_x2_minus_1_by_search(h: &SkewPoly) -> bool {
        let d = h.derivation();
        let target = SkewPoly::x_pow_minus(2, RElement::ONE, d);
        RElement::ALL.iter().any(|&c| {
            let q = SkewPoly::new(vec![c, RElement::ONE], d);
            mul_by_single_steps(&q, h) == target
        })
    }

    #[test]
    fn linear_divisors_of_x2_minus_1() {
        let d = der("1+2w");
        let target = p("x^2 + 3", d);
        assert!(divides_x2_minus_1_by_search(&p("x+1", d)));
        assert!(target.is_right_divisible_by(&p("x+1", d)).unwrap());
        let x2 = p("x+2", d);
        assert_eq!(
            target.is_right_divisible_by(&x2).unwrap(),
            divides_x2_minus_1_by_search(&x2)
        );
        for c in RElement::ALL {
            let h = SkewPoly::new(vec![c, RElement::ONE], d);
            assert_eq!(
                target.is_right_divisible_by(&h).unwrap(),
                divides_x2_minus_1_by_search(&h),
                "x + {c}"
            );
        }
    }

    #[test]
    fn reciprocal_examples() {
        let d = der("2");
        assert_eq!(p("2 + x", d).reciprocal().unwrap(), p("2x + 1", d));
        let g1 = p("x^8+3x^7+2x^5+2x^4+2x^3+3x+1", d);
        assert_eq!(g1.reciprocal().unwrap(), g1);
        let reversed: Vec<_> = g1.coeffs().iter().rev().copied().collect();
        assert_eq!(reversed, g1.coeffs());
        assert_eq!(p("3", d).reciprocal().unwrap(), p("3", d));
        assert_eq!(p("w x + 1", d).reciprocal(), Err(Error::NotZ4));
    }

    #[test]
    fn omega_decompose_examples() {
        let d = der("2");
        let g = p("x^8+(2w+3)x^7+2x^5+2x^4+2x^3+(2w+3)x+1", d);
        let parts = g.omega_decompose();
        assert_eq!(parts.g1, p("x^8+3x^7+2x^5+2x^4+2x^3+3x+1", d));
        assert_eq!(parts.g2, p("2x^7+2x", d));
        assert_eq!(&parts.g1 + &parts.g2.scale_left(RElement::OMEGA), g);
        let z = p("x^2 + 3x + 2", d);
        assert_eq!(z.omega_decompose().g1, z);
        assert!(z.omega_decompose().g2.is_zero());
        let w = p("w", d).omega_decompose();
        assert!(w.g1.is_zero());
        assert_eq!(w.g2, SkewPoly::one(d));
    }

    #[test]
    fn text_round_trip_and_errors() {
        let d = der("1+2w");
        let f = p("x^3 + (3w+3)*x^2 + (w+3)*x + 2w+1", d);
        assert_eq!(f.coeff(2), RElement::new(3, 3));
        assert_eq!(f.coeff(0), RElement::new(1, 2));
        assert_eq!(p(&f.to_string(), d), f);
        assert_eq!(p("1 + x^3", d), p("x^3+1", d));
        assert_eq!(p("2*x", d), p("2x", d));
        assert_eq!(p("x^{11} + \\omega x^{10}", d), p("x^11 + w*x^10", d));
        assert_eq!(SkewPoly::zero(d).to_string(), "0");
        for bad in ["", "x^", "(x+1", "x^a", "y", "2++x"] {
            assert!(SkewPoly::parse(bad, d).is_err(), "{bad}");
        }
    }

    #[test]
    fn closed_form_product_matches_single_steps() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for alpha in Derivation::ADMISSIBLE {
            let d = Derivation::new(alpha).unwrap();
            for _ in 0..300 {
                let f = random_poly(&mut rng, 6, d);
                let g = random_poly(&mut rng, 6, d);
                assert_eq!(&f * &g, mul_by_single_steps(&f, &g));
            }
        }
    }

    #[test]
    fn ring_axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for alpha in Derivation::ADMISSIBLE {
            let d = Derivation::new(alpha).unwrap();
            for _ in 0..10_000 {
                let f = random_poly(&mut rng, 6, d);
                let g = random_poly(&mut rng, 6, d);
                let h = random_poly(&mut rng, 6, d);
                assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
                assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            }
        }
    }

    #[test]
    fn division_identity_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for alpha in Derivation::ADMISSIBLE {
            let d = Derivation::new(alpha).unwrap();
            for _ in 0..2_000 {
                let f = random_poly(&mut rng, 12, d);
                let mut h = random_poly(&mut rng, 5, d);
                // force a unit leading coefficient
                let units: Vec<_> = RElement::ALL
                    .iter()
                    .copied()
                    .filter(|u| u.is_unit())
                    .collect();
                let lead = units[rng.random_range(0..units.len())];
                h = &h + &SkewPoly::monomial(lead, h.coeffs().len(), d);
                let (q, r) = f.right_divmod(&h).unwrap();
                assert_eq!(&(&q * &h) + &r, f);
                assert!(r.degree().is_none_or(|dr| dr < h.degree().unwrap()));
            }
        }
    }

    #[test]
    fn x_squared_is_central_and_z4_commutes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for alpha in Derivation::ADMISSIBLE {
            let d = Derivation::new(alpha).unwrap();
            let x2 = SkewPoly::monomial(RElement::ONE, 2, d);
            for _ in 0..500 {
                let f = random_poly(&mut rng, 8, d);
                assert_eq!(&x2 * &f, &f * &x2);
                let a = random_poly(&mut rng, 6, d).omega_decompose().g1;
                let b = random_poly(&mut rng, 6, d).omega_decompose().g2;
                assert_eq!(&a * &b, &b * &a);
            }
        }
    }
}
