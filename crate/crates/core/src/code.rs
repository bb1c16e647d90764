//! `(theta, d, gamma)`-constacyclic codes over `R` generated by a monic right
//! divisor `g` of `x^n - gamma`, their Gray images over `Z4`, and the
//! block-matrix lifting of a generator matrix `G = M1 + w M2`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::distance::{min_lee_distance, CodeParams};
use crate::error::Error;
use crate::linalg::{Z4Code, Z4Matrix};
use crate::poly::SkewPoly;
use crate::ring::{Derivation, GrayVariant, RElement, Z4};

/// Which rows of `x^i g` form the generator matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum RowMode {
    /// `i < n - deg g`: a free basis of the code.
    #[default]
    Rank,
    /// `i < n`, each reduced modulo `x^n - gamma`.
    Full,
}

impl RowMode {
    pub const ALL: [RowMode; 2] = [RowMode::Rank, RowMode::Full];

    pub fn name(self) -> &'static str {
        match self {
            RowMode::Rank => "rank",
            RowMode::Full => "full",
        }
    }
}

impl fmt::Display for RowMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RowMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "rank" => Ok(RowMode::Rank),
            "full" => Ok(RowMode::Full),
            other => Err(Error::Parse(format!("unknown row mode `{other}`"))),
        }
    }
}

/// The 2x2 matrix `[[a, b], [c, d]]` lifting `G = M1 + w M2` to
/// `[[a M1, b M1], [c M2, d M2]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct NMatrix {
    pub a: Z4,
    pub b: Z4,
    pub c: Z4,
    pub d: Z4,
}

impl NMatrix {
    pub const N1: NMatrix = NMatrix::new(1, 0, 1, 1);
    pub const N2: NMatrix = NMatrix::new(1, 1, 0, 1);
    pub const N3: NMatrix = NMatrix::new(2, 1, 3, 2);
    pub const PRESETS: [NMatrix; 3] = [NMatrix::N1, NMatrix::N2, NMatrix::N3];

    pub const fn new(a: u8, b: u8, c: u8, d: u8) -> NMatrix {
        NMatrix {
            a: Z4::new(a),
            b: Z4::new(b),
            c: Z4::new(c),
            d: Z4::new(d),
        }
    }

    /// `N1`, `N2` or `N3` for the presets.
    pub fn preset_name(&self) -> Option<&'static str> {
        match *self {
            NMatrix::N1 => Some("N1"),
            NMatrix::N2 => Some("N2"),
            NMatrix::N3 => Some("N3"),
            _ => None,
        }
    }
}

impl fmt::Display for NMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.preset_name() {
            Some(name) => f.write_str(name),
            None => write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d),
        }
    }
}

impl FromStr for NMatrix {
    type Err = Error;

    /// `N1`, `N2`, `N3`, or four digits `a,b,c,d`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match s.to_ascii_uppercase().as_str() {
            "N1" => return Ok(NMatrix::N1),
            "N2" => return Ok(NMatrix::N2),
            "N3" => return Ok(NMatrix::N3),
            _ => {}
        }
        let digits: Vec<u8> = s
            .split(',')
            .map(|t| match t.trim() {
                "0" => Ok(0),
                "1" => Ok(1),
                "2" => Ok(2),
                "3" => Ok(3),
                _ => Err(Error::Parse(format!("bad N matrix `{s}`"))),
            })
            .collect::<Result<_, _>>()?;
        match digits[..] {
            [a, b, c, d] => Ok(NMatrix::new(a, b, c, d)),
            _ => Err(Error::Parse(format!("bad N matrix `{s}`"))),
        }
    }
}

/// Rows of a generator matrix over `R`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RGeneratorMatrix {
    length: usize,
    rows: Vec<Vec<RElement>>,
}

impl RGeneratorMatrix {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rows(&self) -> &[Vec<RElement>] {
        &self.rows
    }

    /// Rows `x^i g mod (x^n - gamma)` for `i < count`. Divisibility is not
    /// required, so non-divisors can still be inspected.
    pub fn shifts(n: usize, gamma: RElement, g: &SkewPoly, count: usize) -> RGeneratorMatrix {
        let der = g.derivation();
        let modulus = SkewPoly::x_pow_minus(n, gamma, der);
        let x = SkewPoly::monomial(RElement::ONE, 1, der);
        let mut rows = Vec::with_capacity(count);
        let mut cur = g.clone();
        for i in 0..count {
            if i > 0 {
                cur = &x * &cur;
            }
            if cur.degree().is_some_and(|deg| deg >= n) {
                cur = cur.right_divmod(&modulus).expect("monic modulus").1;
            }
            rows.push(cur.to_vec(n));
        }
        RGeneratorMatrix { length: n, rows }
    }

    /// The `Z4` span of the Gray images of every row and of `w` times it.
    pub fn gray_span(&self, variant: GrayVariant) -> Z4Code {
        let rows: Vec<Vec<Z4>> = self
            .rows
            .iter()
            .flat_map(|r| {
                let w: Vec<RElement> = r.iter().map(|&x| RElement::OMEGA * x).collect();
                [gray_vector(r, variant), gray_vector(&w, variant)]
            })
            .collect();
        Z4Code::from_rows(2 * self.length, &rows).expect("uniform length")
    }

    /// `G = M1 + w M2` entry-wise.
    pub fn decompose(&self) -> (Z4Matrix, Z4Matrix) {
        let part = |f: fn(RElement) -> Z4| {
            let rows: Vec<Vec<Z4>> = self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| f(x)).collect())
                .collect();
            Z4Matrix::from_rows(self.length, &rows).expect("rectangular")
        };
        (part(RElement::a), part(RElement::b))
    }

    /// `[[a M1, b M1], [c M2, d M2]]`.
    pub fn lift(&self, nm: NMatrix) -> Z4Matrix {
        let (m1, m2) = self.decompose();
        let top = m1.scaled(nm.a).hstack(&m1.scaled(nm.b)).expect("same rows");
        let bottom = m2.scaled(nm.c).hstack(&m2.scaled(nm.d)).expect("same rows");
        top.vstack(&bottom).expect("same cols")
    }
}

/// Gray image of an `R` vector, pairs laid out in coordinate order.
pub fn gray_vector(v: &[RElement], variant: GrayVariant) -> Vec<Z4> {
    v.iter()
        .flat_map(|x| {
            let (p, q) = x.gray(variant);
            [p, q]
        })
        .collect()
}

/// A validated `(theta, d, gamma)`-constacyclic code `C = <g>` of length `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstaCodeSpec {
    n: usize,
    gamma: RElement,
    g: SkewPoly,
}

impl ConstaCodeSpec {
    /// Checks that `gamma` is a unit, `g` is monic of degree `0 < m < n`, and
    /// that `g` right-divides `x^n - gamma`.
    pub fn new(n: usize, gamma: RElement, g: SkewPoly) -> Result<ConstaCodeSpec, Error> {
        if !gamma.is_unit() {
            return Err(Error::GammaNotUnit(gamma));
        }
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let m = g.degree().unwrap_or(0);
        if m == 0 || m >= n {
            return Err(Error::DegreeOutOfRange { degree: m, n });
        }
        let (_, rem) = SkewPoly::x_pow_minus(n, gamma, g.derivation()).right_divmod(&g)?;
        if !rem.is_zero() {
            return Err(Error::NotRightDivisor {
                remainder: format!("{rem}"),
            });
        }
        Ok(ConstaCodeSpec { n, gamma, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gamma(&self) -> RElement {
        self.gamma
    }

    pub fn derivation(&self) -> Derivation {
        self.g.derivation()
    }

    pub fn g(&self) -> &SkewPoly {
        &self.g
    }

    /// `deg g`.
    pub fn m(&self) -> usize {
        self.g.degree().expect("validated")
    }

    /// Free rank `n - deg g`.
    pub fn k(&self) -> usize {
        self.n - self.m()
    }

    pub fn modulus(&self) -> SkewPoly {
        SkewPoly::x_pow_minus(self.n, self.gamma, self.derivation())
    }

    /// Right remainder of `f` modulo `x^n - gamma`.
    pub fn reduce(&self, f: &SkewPoly) -> Result<SkewPoly, Error> {
        Ok(f.right_divmod(&self.modulus())?.1)
    }

    fn poly(&self, v: &[RElement]) -> Result<SkewPoly, Error> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        Ok(SkewPoly::new(v.to_vec(), self.derivation()))
    }

    /// The constacyclic shift
    /// `(gamma theta(c_{n-1}) + d(c_0), theta(c_0) + d(c_1), ..., theta(c_{n-2}) + d(c_{n-1}))`.
    pub fn tau_shift(&self, v: &[RElement]) -> Result<Vec<RElement>, Error> {
        self.poly(v)?;
        let d = self.derivation();
        let n = self.n;
        Ok((0..n)
            .map(|j| {
                let prev = if j == 0 {
                    self.gamma * v[n - 1].theta()
                } else {
                    v[j - 1].theta()
                };
                prev + d.apply(v[j])
            })
            .collect())
    }

    pub fn generator_matrix(&self, mode: RowMode) -> RGeneratorMatrix {
        let count = match mode {
            RowMode::Rank => self.k(),
            RowMode::Full => self.n,
        };
        RGeneratorMatrix::shifts(self.n, self.gamma, &self.g, count)
    }

    /// True iff `g` right-divides `c(x)`.
    pub fn contains(&self, v: &[RElement]) -> Result<bool, Error> {
        self.poly(v)?.is_right_divisible_by(&self.g)
    }

    /// Every codeword `a(x) g(x)` with `deg a < k`, counting through the
    /// coefficient tuples of `a` with `a_0` most significant.
    pub fn codewords(&self, budget: u64) -> Result<RCodewords, Error> {
        let k = self.k();
        let log2 = 4 * k as u32;
        if log2 >= 64 || (1u64 << log2) > budget {
            return Err(Error::BudgetExceeded {
                log2_size: log2,
                budget,
                upper_bound: None,
            });
        }
        Ok(RCodewords {
            rows: self.generator_matrix(RowMode::Rank).rows,
            digits: vec![0; k],
            done: false,
        })
    }

    /// `Phi(C)`: the `Z4` span of the Gray images of `x^i g` and `w x^i g`.
    pub fn gray_image(&self, variant: GrayVariant) -> Z4Code {
        self.generator_matrix(RowMode::Rank).gray_span(variant)
    }

    /// The `Z4` code generated by the lifted matrix `[[a M1, b M1], [c M2, d M2]]`.
    pub fn construction1(&self, nm: NMatrix, mode: RowMode) -> Z4Code {
        Z4Code::howell_form(&self.generator_matrix(mode).lift(nm))
    }

    /// Parameters of `Phi(C)` with the exact distance.
    pub fn analyze(&self, variant: GrayVariant, budget: u64) -> Result<CodeParams, Error> {
        min_lee_distance(&self.gray_image(variant), budget)
    }
}

/// Iterator returned by [`ConstaCodeSpec::codewords`].
pub struct RCodewords {
    rows: Vec<Vec<RElement>>,
    digits: Vec<u8>,
    done: bool,
}

impl Iterator for RCodewords {
    type Item = Vec<RElement>;

    fn next(&mut self) -> Option<Vec<RElement>> {
        if self.done {
            return None;
        }
        let n = self.rows.first().map_or(0, |r| r.len());
        let mut out = vec![RElement::ZERO; n];
        for (row, &t) in self.rows.iter().zip(&self.digits) {
            let c = RElement::from_index(t);
            if c.is_zero() {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o += c * r;
            }
        }
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < 16 {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}
