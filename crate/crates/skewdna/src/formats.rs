//! Exchange formats: spec and parameter JSON, generator matrices as CSV or
//! JSON, DNA text and FASTA, and the reversibility report.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use skewdna_core::{
    CodeParams, ConstaCodeSpec, Derivation, Distance, Error, GrayVariant, RElement,
    ReversibilityReport, RowMode, SkewPoly, Z4Code, Z4Matrix, Z4,
};

/// `{n, gamma, alpha, g, variant, row_mode}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub n: usize,
    pub gamma: String,
    pub alpha: String,
    pub g: String,
    #[serde(default = "default_variant")]
    pub variant: String,
    #[serde(default = "default_row_mode")]
    pub row_mode: String,
}

fn default_variant() -> String {
    GrayVariant::AAb.name().to_string()
}

fn default_row_mode() -> String {
    RowMode::Rank.name().to_string()
}

/// A spec with its conventions, parsed and validated.
#[derive(Clone, Debug)]
pub struct ParsedSpec {
    pub spec: ConstaCodeSpec,
    pub variant: GrayVariant,
    pub row_mode: RowMode,
}

impl SpecJson {
    pub fn parse(&self) -> Result<ParsedSpec, Error> {
        let der: Derivation = self.alpha.parse()?;
        let gamma: RElement = self.gamma.parse()?;
        let g = SkewPoly::parse(&self.g, der)?;
        Ok(ParsedSpec {
            spec: ConstaCodeSpec::new(self.n, gamma, g)?,
            variant: self.variant.parse()?,
            row_mode: self.row_mode.parse()?,
        })
    }

    /// Same fields with every value in printed normal form.
    pub fn canonical(&self) -> Result<SpecJson, Error> {
        let der: Derivation = self.alpha.parse()?;
        Ok(SpecJson {
            n: self.n,
            gamma: self.gamma.parse::<RElement>()?.to_string(),
            alpha: der.to_string(),
            g: SkewPoly::parse(&self.g, der)?.to_string(),
            variant: self.variant.parse::<GrayVariant>()?.to_string(),
            row_mode: self.row_mode.parse::<RowMode>()?.to_string(),
        })
    }

    /// SHA-256 of the canonical JSON, hex encoded.
    pub fn hash(&self) -> Result<String, Error> {
        let text = serde_json::to_string(&self.canonical()?).expect("serializable");
        Ok(hex::encode(Sha256::digest(text.as_bytes())))
    }
}

impl From<&ParsedSpec> for SpecJson {
    fn from(p: &ParsedSpec) -> SpecJson {
        SpecJson {
            n: p.spec.n(),
            gamma: p.spec.gamma().to_string(),
            alpha: p.spec.derivation().to_string(),
            g: p.spec.g().to_string(),
            variant: p.variant.to_string(),
            row_mode: p.row_mode.to_string(),
        }
    }
}

/// `{length, k1, k2, d_lee, d_lee_exact}`; `d_lee` is null for the zero code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub length: usize,
    pub k1: usize,
    pub k2: usize,
    pub d_lee: Option<u32>,
    pub d_lee_exact: bool,
}

impl From<&CodeParams> for ParamsJson {
    fn from(p: &CodeParams) -> ParamsJson {
        ParamsJson {
            length: p.length,
            k1: p.k1,
            k2: p.k2,
            d_lee: p.d_lee.value(),
            d_lee_exact: p.d_lee.is_exact(),
        }
    }
}

impl ParamsJson {
    pub fn to_params(self) -> CodeParams {
        let d_lee = match (self.d_lee, self.d_lee_exact) {
            (None, _) => Distance::Infinite,
            (Some(d), true) => Distance::Exact(d),
            (Some(d), false) => Distance::UpperBound(d),
        };
        CodeParams {
            length: self.length,
            k1: self.k1,
            k2: self.k2,
            d_lee,
        }
    }
}

/// `{length, k1, k2, rows}` with rows as digit arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub length: usize,
    pub k1: usize,
    pub k2: usize,
    pub rows: Vec<Vec<u8>>,
}

fn digits(row: &[Z4]) -> Vec<u8> {
    row.iter().map(|x| x.value()).collect()
}

impl From<&Z4Code> for MatrixJson {
    fn from(c: &Z4Code) -> MatrixJson {
        MatrixJson {
            length: c.length(),
            k1: c.k1(),
            k2: c.k2(),
            rows: c.basis().iter().map(|r| digits(r)).collect(),
        }
    }
}

impl MatrixJson {
    /// Rebuilds the code; `k1` and `k2` are checked against the rows.
    pub fn to_code(&self) -> Result<Z4Code, Error> {
        let rows: Vec<&[u8]> = self.rows.iter().map(|r| r.as_slice()).collect();
        let code = Z4Code::howell_form(&Z4Matrix::from_u8_rows(self.length, &rows)?);
        if (code.k1(), code.k2()) != (self.k1, self.k2) {
            return Err(Error::Parse(format!(
                "rows span 4^{} 2^{}, header says 4^{} 2^{}",
                code.k1(),
                code.k2(),
                self.k1,
                self.k2
            )));
        }
        Ok(code)
    }
}

/// One row per line, digits separated by commas.
pub fn matrix_to_csv(m: &Z4Matrix) -> String {
    let mut out = String::new();
    for r in m.row_iter() {
        let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_from_csv(text: &str) -> Result<Z4Matrix, Error> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|t| match t.trim() {
                "0" => Ok(Z4::ZERO),
                "1" => Ok(Z4::ONE),
                "2" => Ok(Z4::TWO),
                "3" => Ok(Z4::THREE),
                other => Err(Error::Parse(format!("line {}: bad digit `{other}`", i + 1))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let cols = rows.first().map_or(0, |r| r.len());
    Z4Matrix::from_rows(cols, &rows)
}

/// One sequence per line, or FASTA with `>cw<index>` headers.
pub fn dna_text(seqs: &[String], fasta: bool) -> String {
    let mut out = String::new();
    for (i, s) in seqs.iter().enumerate() {
        if fasta {
            out.push_str(&format!(">cw{i}\n"));
        }
        out.push_str(s);
        out.push('\n');
    }
    out
}

/// Reads plain or FASTA DNA text; headers and blank lines are ignored.
pub fn parse_dna_text(text: &str) -> Result<Vec<String>, Error> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('>') {
            continue;
        }
        if let Some(c) = line.chars().find(|c| !"ACGT".contains(*c)) {
            return Err(Error::Parse(format!("bad DNA letter `{c}`")));
        }
        out.push(line.to_string());
    }
    Ok(out)
}

/// JSON mirror of [`ReversibilityReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub m: usize,
    pub m_prime: Option<usize>,
    pub g1_self_reciprocal: String,
    pub g2_shifted_reciprocal: String,
    pub membership_poly: String,
    pub membership: String,
    pub sufficient_pass: bool,
    pub exact_r_code: bool,
    pub exact_rc_code: bool,
}

impl From<&ReversibilityReport> for ReportJson {
    fn from(r: &ReversibilityReport) -> ReportJson {
        ReportJson {
            m: r.m,
            m_prime: r.m_prime,
            g1_self_reciprocal: r.g1_self_reciprocal.to_string(),
            g2_shifted_reciprocal: r.g2_shifted_reciprocal.to_string(),
            membership_poly: r.membership_poly.to_string(),
            membership: r.membership.to_string(),
            sufficient_pass: r.sufficient_pass,
            exact_r_code: r.exact_r_code,
            exact_rc_code: r.exact_rc_code,
        }
    }
}
