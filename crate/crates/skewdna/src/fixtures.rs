//! Code tables and worked examples from the source article, transcribed
//! verbatim (LaTeX polynomial text included). Claimed parameters are data
//! under test, not oracles.

use std::fmt;
use std::str::FromStr;

use skewdna_core::{Derivation, Error, NMatrix, RElement, SkewPoly};

/// Claimed `(length, 4^k1 2^k2, d)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Claim {
    pub length: usize,
    pub k1: usize,
    pub k2: usize,
    pub d: u32,
}

impl Claim {
    pub fn log2_size(&self) -> u32 {
        (2 * self.k1 + self.k2) as u32
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, 4^{}", self.length, self.k1)?;
        if self.k2 > 0 {
            write!(f, " 2^{}", self.k2)?;
        }
        write!(f, ", {})", self.d)
    }
}

impl FromStr for Claim {
    type Err = Error;

    /// Accepts `(16, 4^{12}, 4)` and `(24, 4^{17} 2^1, 4)`.
    fn from_str(s: &str) -> Result<Claim, Error> {
        let bad = || Error::Parse(format!("bad parameter triple `{s}`"));
        let t: String = s.chars().filter(|c| !"{}() ".contains(*c)).collect();
        let parts: Vec<&str> = t.split(',').collect();
        let [len, size, d] = parts[..] else {
            return Err(bad());
        };
        let (mut k1, mut k2) = (0, 0);
        let size = size.replace("2^", ",2^");
        for factor in size.split(',').filter(|f| !f.is_empty()) {
            if let Some(e) = factor.strip_prefix("4^") {
                k1 = e.parse().map_err(|_| bad())?;
            } else if let Some(e) = factor.strip_prefix("2^") {
                k2 = e.parse().map_err(|_| bad())?;
            } else {
                return Err(bad());
            }
        }
        Ok(Claim {
            length: len.parse().map_err(|_| bad())?,
            k1,
            k2,
            d: d.parse().map_err(|_| bad())?,
        })
    }
}

/// An N-matrix lift row: `(alpha, gamma, N, g) -> C_M`.
#[derive(Clone, Debug)]
pub struct LiftRow {
    pub id: &'static str,
    pub alpha: &'static str,
    pub gamma: &'static str,
    pub nmatrix: &'static str,
    pub g: &'static str,
    pub claim: &'static str,
    /// The comparison column of the table.
    pub remark: &'static str,
}

/// A row giving `Phi(C)` and optionally its DNA code.
#[derive(Clone, Debug)]
pub struct CodeRow {
    pub id: &'static str,
    pub n: usize,
    pub gamma: &'static str,
    pub alpha: &'static str,
    pub g: &'static str,
    pub phi_claim: &'static str,
    pub dna_claim: Option<&'static str>,
}

/// A worked example.
#[derive(Clone, Debug)]
pub struct ExampleRow {
    pub id: &'static str,
    pub n: usize,
    pub gamma: &'static str,
    pub alpha: &'static str,
    pub g: &'static str,
    pub variant: &'static str,
    pub phi_claim: &'static str,
    pub dna_claim: Option<&'static str>,
    /// Claimed reversibility: `Some("R")` or `Some("DNA")`.
    pub property: Option<&'static str>,
    pub note: &'static str,
}

pub fn derivation(alpha: &str) -> Derivation {
    alpha.parse().expect("fixture alpha")
}

pub fn element(s: &str) -> RElement {
    s.parse().expect("fixture element")
}

pub fn poly(g: &str, alpha: &str) -> SkewPoly {
    SkewPoly::parse(g, derivation(alpha)).expect("fixture polynomial")
}

impl LiftRow {
    /// Table 2 has no length column: `n` is half the length of the claimed
    /// Gray image.
    pub fn inferred_n(&self) -> usize {
        self.claim().length / 2
    }

    pub fn claim(&self) -> Claim {
        self.claim.parse().expect("fixture claim")
    }

    pub fn nmatrix(&self) -> NMatrix {
        self.nmatrix.parse().expect("fixture N")
    }
}

impl CodeRow {
    pub fn phi_claim(&self) -> Claim {
        self.phi_claim.parse().expect("fixture claim")
    }

    pub fn dna_claim(&self) -> Option<Claim> {
        self.dna_claim.map(|c| c.parse().expect("fixture claim"))
    }
}

impl ExampleRow {
    pub fn phi_claim(&self) -> Claim {
        self.phi_claim.parse().expect("fixture claim")
    }

    pub fn dna_claim(&self) -> Option<Claim> {
        self.dna_claim.map(|c| c.parse().expect("fixture claim"))
    }
}

const G51: &str = r"x^{11} + \omega x^{10} + 2x^9 + (2\omega  + 1)x^8 + x^6 + x^5 + (\omega  + 3)x^4+ 3x^3 + (3\omega  +2)x^2 + x + \omega  + 1";
const Q51: &str = r"x^3 + (\omega + 3)x^2 + x + \omega + 2";
const G52: &str = r"x^8 + (2\omega + 3)x^7 + 2x^5 + 2x^4 + 2x^3 + (2\omega + 3)x + 1";
const G53: &str = r"x^{10} + 3x^9 + 2x^7 + 2x^5 + 2x^4 + 2x^3 + 3x + 1";
const G54: &str = r"x^{20} + 3x^{19} + x^{18} + 3x^{17} + x^{16} + 3x^{15} + x^{14} + 3x^{13} + x^{12} + 3x^{11} +  x^{10} + 3x^9 + x^8 + 3x^7 + x^6 + 3x^5 + x^4 + 3x^3 + x^2 + 3x + 1";

/// Quotient of `x^14 + 3` by the degree-11 generator of the first example.
pub const EXAMPLE_5_1_QUOTIENT: &str = Q51;

/// N-matrix lift codes: the cyclic table (`gamma = 1`) followed by the
/// constacyclic one with its `gamma` column.
pub const TABLE2: &[LiftRow] = &[
    LiftRow {
        id: "T2a.1",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^3 + (3\omega + 3)x^2 + (\omega + 3)x + 2\omega + 1",
        claim: "(16, 4^{12}, 4)",
        remark: "Optimal",
    },
    LiftRow {
        id: "T2a.2",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^6 + 2x^5 + 2x^4 + 2x^3 + 2x^2 + (3\omega + 2)x + \omega + 3",
        claim: "(24, 4^{17} 2^1, 4)",
        remark: "(24, 4^{17}, 4)",
    },
    LiftRow {
        id: "T2a.3",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: G51,
        claim: "(28, 4^9 , 12)",
        remark: "(28, 4^9 , 9)",
    },
    LiftRow {
        id: "T2a.4",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N2",
        g: r"x^6 + 3\omega x^5 + (3\omega + 3)x^4 + (3\omega + 2)x^3 + (\omega + 1)x^2 + 1",
        claim: "(32, 4^{20}, 4)",
        remark: "Optimal",
    },
    LiftRow {
        id: "T2a.5",
        alpha: "2",
        gamma: "1",
        nmatrix: "N2",
        g: r"x^{10} + (3\omega + 2)x^8 + (3\omega + 3)x^7 + 2x^6 + (2\omega + 3)x^5 + (2\omega + 2)x^4  + (3\omega + 2)x^3 + (3\omega + 2)x^2 + 3",
        claim: "(36, 4^{16}, 8)",
        remark: "Optimal",
    },
    LiftRow {
        id: "T2a.6",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^6 + x^5 + 2x^4 + (2\omega  + 3)x^3 + 2x^2 + (3\omega  + 1)x + \omega",
        claim: "(40, 4^{33}, 4)",
        remark: "(40, 4^{33}, 3)",
    },
    LiftRow {
        id: "T2a.7",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^6 + (2\omega  + 2)x^5 + 2x^4 + 2x^2 + (\omega  + 1)x + \omega  + 2",
        claim: "(48, 4^{41} 2^1, 4)",
        remark: "(48, 4^{41}, 3)",
    },
    LiftRow {
        id: "T2a.8",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^6 + (3\omega  + 1)x^5 + 2x^4 + (3\omega  + 2)x^3 + 2x^2 + x + 1",
        claim: "(56, 4^{48}, 4)",
        remark: "(56, 4^{48}, 2)",
    },
    LiftRow {
        id: "T2a.9",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^6 + (2\omega  + 3)x^5 + 2x^4 + (2\omega  + 3)x^3 + 2x^2 + (3\omega  + 3)x + 3\omega  + 2",
        claim: "(80, 4^{73} 2^1, 4)",
        remark: "(80, 4^{73},1)",
    },
    LiftRow {
        id: "T2a.10",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^6 + (\omega  + 1)x^5 + 2x^4 + x^3 + 2x^2 + (2\omega  + 1)x + \omega  + 2",
        claim: "(120, 4^{113} 2^1, 4)",
        remark: "(120, 4^{113} , 1)",
    },
    LiftRow {
        id: "T2b.1",
        alpha: "1+2w",
        gamma: "3",
        nmatrix: "N1",
        g: r"x^3 + \omega x^2 + (3\omega  + 2)x + \omega  + 1",
        claim: "(12, 4^7 2^2, 4)",
        remark: "(12, 4^7 , 4)",
    },
    LiftRow {
        id: "T2b.2",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N3",
        g: r"x^4 + (2\omega  + 3)x^3 + (3\omega  + 3)x^2 + (2\omega  + 3)x + \omega  + 2",
        claim: "(16, 4^{10} 2^1, 4)",
        remark: "(16, 4^{10} , 4)",
    },
    LiftRow {
        id: "T2b.3",
        alpha: "1+2w",
        gamma: "3",
        nmatrix: "N1",
        g: r"x^6 + (2\omega  + 3)x^5 + (2\omega  + 2)x^4 + 2\omega x^3 + (2\omega  + 2)x^2 + x + 1",
        claim: "(20, 4^8 2^4, 8)",
        remark: "(20, 4^8, 8)",
    },
    LiftRow {
        id: "T2b.4",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^5 + (3\omega  + 2)x^4 + x^3 + (3\omega  + 2)x^2 + 3x + 3",
        claim: "(24, 4^{18} 2^1, 4)",
        remark: "(24,4^{18},4)",
    },
    LiftRow {
        id: "T2b.5",
        alpha: "1+2w",
        gamma: "3",
        nmatrix: "N2",
        g: G52,
        claim: "(28, 4^{12} , 8)",
        remark: "Optimal",
    },
    LiftRow {
        id: "T2b.6",
        alpha: "1+2w",
        gamma: "3",
        nmatrix: "N1",
        g: r"x^3 + 2\omega x^2 + (2\omega  + 1)x + 2\omega  + 1",
        claim: "(28, 4^{22} 2^3, 3)",
        remark: "New Code",
    },
    LiftRow {
        id: "T2b.7",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^5 + (3\omega  + 2)x^4 + 2x^3 + 3\omega x^2 + (\omega  + 2)x + \omega  + 3",
        claim: "(32, 4^{26} 2^1, 4)",
        remark: "(32, 4^{26}, 3)",
    },
    LiftRow {
        id: "T2b.8",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^5 + (3\omega  + 2)x^4 + 3\omega x^3 + 3\omega x^2 + (3\omega  + 2)x + \omega  + 1",
        claim: "(40, 4^{31} 2^4, 4)",
        remark: "(40, 4^{31} , 3)",
    },
    LiftRow {
        id: "T2b.9",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^5 + (3\omega  + 2)x^4 + x^3 + (\omega  + 2)x^2 + (2\omega  + 3)x + 3",
        claim: "(48, 4^{42} 2^1, 4)",
        remark: "(48, 4^{42} , 3)",
    },
    LiftRow {
        id: "T2b.10",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^3 + (2\omega  + 1)x^2 + 1",
        claim: "(56, 4^{50} 2^3, 3)",
        remark: "(56, 4^{50} , 1)",
    },
    LiftRow {
        id: "T2b.11",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^5 + (3\omega  + 2)x^4 + (\omega  + 1)x^3 + 3\omega x^2 + (2\omega  + 1)x + \omega  + 3",
        claim: "(56, 4^{50} 2^1, 4)",
        remark: "(56, 4^{50}, 1)",
    },
    LiftRow {
        id: "T2b.12",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^5 + (3\omega  + 2)x^4 + (\omega  + 2)x^3 + 2x^2 + (3\omega  + 2)x + 3\omega  + 3",
        claim: "(60, 4^{54} 2^1, 4)",
        remark: "(60, 4^{54} , 2)",
    },
    LiftRow {
        id: "T2b.13",
        alpha: "1+2w",
        gamma: "1",
        nmatrix: "N1",
        g: r"x^5 + (3\omega  + 2)x^4 + 2x^3 + 3\omega x^2 + \omega x + \omega  + 1",
        claim: "(64, 4^{58} 2^1, 4)",
        remark: "(64, 4^{58} , 1)",
    },
    LiftRow {
        id: "T2b.14",
        alpha: "1+2w",
        gamma: "3",
        nmatrix: "N1",
        g: r"x^6 + (3\omega + 3)x^5 + 2x^4 + 2x^2 + (3\omega + 3)x + \omega",
        claim: "(84, 4^{76} 2^2, 4)",
        remark: "(84, 4^{76}, 1)",
    },
];

/// Gray images of cyclic codes (`gamma = 1`).
pub const TABLE3: &[CodeRow] = &[
    CodeRow {
        id: "T3.1",
        n: 8,
        gamma: "1",
        alpha: "1+2w",
        g: r"x^3 + 3x^2 + 3x + 1",
        phi_claim: "(16, 4^{10}, 4)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.2",
        n: 10,
        gamma: "1",
        alpha: "3+2w",
        g: r"x^8 + x^6 + x^4 + x^2 + 1",
        phi_claim: "(20, 4^4, 5)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.3",
        n: 12,
        gamma: "1",
        alpha: "2",
        g: r"x^4 + 3x^3 + 2x^2 + 3x + 1",
        phi_claim: "(24, 4^{16}, 4)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.4",
        n: 14,
        gamma: "1",
        alpha: "1+2w",
        g: r"x^8 + 3x^7 + 2x^6 + 2x^4 + 2x^3 + 2x^2 + 3x + 1",
        phi_claim: "(28, 4^{12}, 8)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.5",
        n: 15,
        gamma: "1",
        alpha: "2",
        g: r"x^6 + 2x^5 + 3x^4 + 3x^3 + 3x^2 + 2x + 1",
        phi_claim: "(30, 4^{18}, 4)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.6",
        n: 16,
        gamma: "1",
        alpha: "1+2w",
        g: r"x^{11} + x^{10} + 3x^9 + 3x^8 + 2x^7 + 2x^6 + 2x^5 + 2x^4 + 3x^3 + 3x^2 + x + 1",
        phi_claim: "(32, 4^{10}, 8)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.7",
        n: 16,
        gamma: "1",
        alpha: "1+2w",
        g: r"x^6 + 2x^5 + 3x^4 + 2x^3 + 3x^2 + 2x + 1",
        phi_claim: "(32, 4^{20}, 4)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.8",
        n: 18,
        gamma: "1",
        alpha: "2",
        g: r"x^6 + 2x^5 + 2x^4 + 3x^3 + 2x^2 + 2x + 1",
        phi_claim: "(36, 4^{24}, 3)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.9",
        n: 18,
        gamma: "1",
        alpha: "2",
        g: G53,
        phi_claim: "(36, 4^{16}, 8)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.10",
        n: 20,
        gamma: "1",
        alpha: "2",
        g: r"x^4 + (2\omega + 1)x^3 + (2\omega + 3)x^2 + (2\omega + 1)x + 1",
        phi_claim: "(40, 4^{32}, 4)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.11",
        n: 30,
        gamma: "1",
        alpha: "2",
        g: r"x^6 + 2x^5 + x^4 + 3x^3 + x^2 + 2x + 1",
        phi_claim: "(60, 4^{48}, 4)",
        dna_claim: None,
    },
    CodeRow {
        id: "T3.12",
        n: 30,
        gamma: "1",
        alpha: "1+2w",
        g: r"x^{28} + x^{26} + x^{24} + x^{22} + x^{20} + x^{18} + x^{16} + x^{14} + x^{12} + x^{10} + x^8 + x^6 + x^4 + x^2 + 1",
        phi_claim: "(60, 4^4, 15)",
        dna_claim: None,
    },
];

/// Reversible Gray images and the DNA codes obtained from them.
pub const TABLE5: &[CodeRow] = &[
    CodeRow {
        id: "T5.1",
        n: 6,
        gamma: "1",
        alpha: "2",
        g: r"x^3 + 3x^2 + 3x + 1",
        phi_claim: "(12, 4^6, 4)",
        dna_claim: Some("(12, 4^7, 4)"),
    },
    CodeRow {
        id: "T5.2",
        n: 8,
        gamma: "1",
        alpha: "2",
        g: r"x^4 + 2 \omega x^3 + (2 \omega + 2)x^2 + 2 \omega x + 1",
        phi_claim: "(16, 4^8, 4)",
        dna_claim: Some("(16, 4^8 2^1, 4)"),
    },
    CodeRow {
        id: "T5.3",
        n: 8,
        gamma: "1",
        alpha: "1+2w",
        g: r"x^6 + 2x^5 + x^4 + x^2 + 2x + 1",
        phi_claim: "(16, 4^4 , 8)",
        dna_claim: Some("(16, 4^4 2^1, 8)"),
    },
    CodeRow {
        id: "T5.4",
        n: 10,
        gamma: "3",
        alpha: "2",
        g: r"x^4 + (2\omega  + 1)x^3 + 3x^2 + (2\omega  + 1)x + 1",
        phi_claim: "(20, 4^{12} , 4)",
        dna_claim: Some("(20, 4^{12} 2^1, 4)"),
    },
    CodeRow {
        id: "T5.5",
        n: 12,
        gamma: "1",
        alpha: "2",
        g: r"x^{10} + 2x^9 + x^8 + x^6 + 2x^5 + x^4 + x^2 + 2x + 1",
        phi_claim: "(24, 4^4 , 12)",
        dna_claim: Some("(24, 4^4 2^1, 12)"),
    },
    CodeRow {
        id: "T5.6",
        n: 12,
        gamma: "1",
        alpha: "2",
        g: r"x^4 + (2\omega + 3)x^3 + (2\omega + 2)x^2 + (2\omega + 3)x + 1",
        phi_claim: "(24, 4^{16}, 4)",
        dna_claim: Some("(24, 4^{16} 2^1, 4)"),
    },
    CodeRow {
        id: "T5.7",
        n: 14,
        gamma: "3",
        alpha: "2",
        g: G52,
        phi_claim: "(28, 4^{12} , 8)",
        dna_claim: Some("(28, 4^{13}, 8)"),
    },
    CodeRow {
        id: "T5.8",
        n: 14,
        gamma: "3",
        alpha: "2",
        g: r"x^6 + (2\omega + 1)x^5 + 3x^4 + (2\omega + 1)x^3 + 3x^2 + (2\omega + 1)x + 1",
        phi_claim: "(28, 4^{16} , 4)",
        dna_claim: Some("(28, 4^{16} 2^1, 4)"),
    },
    CodeRow {
        id: "T5.9",
        n: 15,
        gamma: "3",
        alpha: "2",
        g: r"x^9 + 2x^8 + x^7 + 3x^6 + 2x^5 + 2x^4 + 3x^3 + x^2 + 2x + 1",
        phi_claim: "(30, 4^{12} , 6)",
        dna_claim: Some("(30, 4^{13} , 6)"),
    },
    CodeRow {
        id: "T5.10",
        n: 16,
        gamma: "1",
        alpha: "2",
        g: r"x^{10} + 2x^9 + 3x^8 + 2x^7 + 2x^6 + 2x^4 + 2x^3 + 3x^2 + 2x + 1",
        phi_claim: "(32, 4^{12} , 8)",
        dna_claim: Some("(32, 4^{12} 2^1, 8)"),
    },
    CodeRow {
        id: "T5.11",
        n: 20,
        gamma: "1",
        alpha: "1+2w",
        g: r"x^{16} + 3x^{15} + 2x^{13} + 2x^{12} + 3x^{11} + x^{10} + x^6 + 3x^5 + 2x^3 + 2x^2 + 3x + 1",
        phi_claim: "(40, 4^8 , 12)",
        dna_claim: Some("(40, 4^9 , 12)"),
    },
    CodeRow {
        id: "T5.12",
        n: 20,
        gamma: "1",
        alpha: "2",
        g: r"x^{12} + 2x^{11} + 3x^{10} + 2x^9 + 2x^6 + 2x^4 + 2x^3 + 3x^2 + 2x + 1",
        phi_claim: "(40, 4^{16} , 8)",
        dna_claim: Some("(40, 4^{17} , 8)"),
    },
    CodeRow {
        id: "T5.13",
        n: 21,
        gamma: "3",
        alpha: "1+2w",
        g: G54,
        phi_claim: "(42, 4^2, 21)",
        dna_claim: Some("(42, 4^2 2^1, 21)"),
    },
    CodeRow {
        id: "T5.14",
        n: 23,
        gamma: "3",
        alpha: "3+2w",
        g: r"x^{22} + 3x^{21} + x^{20} + 3x^{19} + x^{18} + 3x^{17} + x^{16} + 3x^{15} + x^{14} + 3x^{13} + x^{12} + 3x^{11} +  x^{10} + 3x^9 + x^8 + 3x^7 + x^6 + 3x^5 + x^4 + 3x^3 + x^2 + 3x + 1",
        phi_claim: "(46, 4^2, 23)",
        dna_claim: Some("(46, 4^2 2^1, 23)"),
    },
    CodeRow {
        id: "T5.15",
        n: 24,
        gamma: "1",
        alpha: "1+2w",
        g: r"x^{22} + 2x^{21} + x^{20}  + x^{18} + 2x^{17}+  x^{16} + x^{14} + 2x^{13} + x^{12} + x^{10} + 2x^9 + x^8 + x^6 + 2x^5+ x^4 + x^2 + 2x + 1",
        phi_claim: "(48, 4^4, 24)",
        dna_claim: Some("(48, 4^4 2^1, 24)"),
    },
    CodeRow {
        id: "T5.16",
        n: 28,
        gamma: "1",
        alpha: "1+2w",
        g: r"x^{26} + 2x^{25} + x^{24} + x^{22} + 2x^{21} + x^{20} + x^{18} + 2x^{17} + x^{16} + x^{14} + 2x^{13} + x^{12} + x^{10} + 2x^9 + x^8 + x^6 + 2x^5 + x^4 + x^2 + 2x + 1",
        phi_claim: "(56, 4^4, 28)",
        dna_claim: Some("(56, 4^4 2^1, 28)"),
    },
    CodeRow {
        id: "T5.17",
        n: 30,
        gamma: "3",
        alpha: "2",
        g: r"x^6 + 2x^5 + 3x^4 + (2\omega + 3)x^3 + 3x^2 + 2x + 1",
        phi_claim: "(60, 4^{48}, 4)",
        dna_claim: Some("(60, 4^{48} 2^1, 4)"),
    },
];

pub const EXAMPLES: &[ExampleRow] = &[
    ExampleRow {
        id: "Ex5.1",
        n: 14,
        gamma: "1",
        alpha: "1+2w",
        g: G51,
        variant: "ab-b",
        phi_claim: "(28, 4^9 , 12)",
        dna_claim: None,
        property: None,
        note: "stated as a right divisor of x^14+3, i.e. gamma = 1",
    },
    ExampleRow {
        id: "Ex5.2",
        n: 14,
        gamma: "3",
        alpha: "2",
        g: G52,
        variant: "a-ab",
        phi_claim: "(28, 4^{12} , 8)",
        dna_claim: None,
        property: Some("R"),
        note: "",
    },
    ExampleRow {
        id: "Ex5.3",
        n: 18,
        gamma: "1",
        alpha: "2",
        g: G53,
        variant: "a-ab",
        phi_claim: "(36, 4^{16}, 8)",
        dna_claim: None,
        property: Some("DNA"),
        note: "",
    },
    ExampleRow {
        id: "Ex5.4",
        n: 21,
        gamma: "3",
        alpha: "1+2w",
        g: G54,
        variant: "a-ab",
        phi_claim: "(42, 4^2, 21)",
        dna_claim: Some("(42, 4^2 2^1, 21)"),
        property: Some("R"),
        note: "DNA codewords listed in Table 4",
    },
];

/// The 32 DNA codewords of length 42 listed for the last example.
pub fn table4() -> Vec<&'static str> {
    include_str!("../data/table4.txt")
        .lines()
        .filter(|l| !l.is_empty())
        .collect()
}
