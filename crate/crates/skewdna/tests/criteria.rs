//! Acceptance criteria. Each prints one PASS/FAIL line; the test fails if any
//! criterion does.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewdna::fixtures::{self, CodeRow};
use skewdna::parallel;
use skewdna::verify::{self, Status, Table};
use skewdna_core::code::gray_vector;
use skewdna_core::dna::{
    check_sufficient, construction2, dna_export, is_r_code, reverse_r, reverse_z4,
};
use skewdna_core::{
    ConstaCodeSpec, Derivation, Distance, DistanceScan, GrayVariant, RElement, RowMode, SkewPoly,
    Z4Code, Z4Matrix, Z4,
};

const SEED: u64 = 0;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn run(id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took > limit {
        o.ok = false;
        o.detail = format!("{}; took {took:?}, limit {limit:?}", o.detail);
    }
    let tag = if o.ok { "PASS" } else { "FAIL" };
    println!("criterion {id} {tag} {name} [{:.2?}] {}", took, o.detail);
    o.ok
}

fn derivations() -> Vec<Derivation> {
    Derivation::ADMISSIBLE
        .iter()
        .map(|&a| Derivation::new(a).unwrap())
        .collect()
}

fn z4_lee(x: Z4) -> u32 {
    [0, 1, 2, 1][x.value() as usize]
}

fn ring_laws() -> Outcome {
    let all = RElement::ALL;
    let one = RElement::ONE;
    let mut checks = 0u64;
    let mut bad = Vec::new();
    let mut check = |ok: bool, what: &str| {
        checks += 1;
        if !ok && bad.len() < 5 {
            bad.push(what.to_string());
        }
    };
    let mut grays = [BTreeSet::new(), BTreeSet::new()];
    for r in all {
        check(r.theta().theta() == r, "theta involution");
        check(r + r.complement() == one, "r + r^c = 1");
        check(r.complement().complement() == r, "complement involution");
        check(
            r.complement() == one + RElement::new(3, 0) * r,
            "r^c = 1 + 3r",
        );
        let (p, q) = r.gray(GrayVariant::AAb);
        check((p, q) == (r.a(), r.a() + r.b()), "gray a-ab");
        check(
            r.gray(GrayVariant::AbB) == (r.a() + r.b(), r.b()),
            "gray ab-b",
        );
        check(r.lee_weight() == z4_lee(p) + z4_lee(q), "lee weight");
        for (i, v) in GrayVariant::ALL.into_iter().enumerate() {
            check(RElement::from_gray(r.gray(v), v) == r, "gray inverse");
            grays[i].insert(r.gray(v));
        }
        check(r.is_unit() == r.inverse().is_some(), "units");
        for d in derivations() {
            check(d.apply(d.apply(r)).is_zero(), "d^2 = 0");
            check(
                (d.apply(r.theta()) + d.apply(r).theta()).is_zero(),
                "d theta + theta d = 0",
            );
        }
    }
    check(grays.iter().all(|s| s.len() == 16), "gray bijective");
    for r in all {
        for s in all {
            check((r + s).theta() == r.theta() + s.theta(), "theta additive");
            check(
                (r * s).theta() == r.theta() * s.theta(),
                "theta multiplicative",
            );
            check(
                r.complement() + s.complement() == (r + s).complement() + one,
                "r^c + s^c = (r+s)^c + 1",
            );
            for v in GrayVariant::ALL {
                let (a, b) = (r.gray(v), s.gray(v));
                check((r + s).gray(v) == (a.0 + b.0, a.1 + b.1), "gray additive");
            }
            for d in derivations() {
                check(d.apply(r + s) == d.apply(r) + d.apply(s), "d additive");
                check(
                    d.apply(r * s) == d.apply(r) * s + r.theta() * d.apply(s),
                    "d Leibniz",
                );
            }
        }
    }
    if bad.is_empty() {
        pass(format!("{checks} identities"))
    } else {
        fail(format!("violations: {}", bad.join(", ")))
    }
}

fn factorization() -> Outcome {
    let e = &fixtures::EXAMPLES[0];
    let q = fixtures::poly(fixtures::EXAMPLE_5_1_QUOTIENT, e.alpha);
    let g = fixtures::poly(e.g, e.alpha);
    let target = SkewPoly::x_pow_minus(14, fixtures::element("1"), g.derivation());
    let (qq, r) = target.right_divmod(&g).unwrap();
    let prod = &q * &g;
    if prod == target && r.is_zero() && qq == q {
        pass(format!("q*g = {prod}, remainder 0"))
    } else {
        fail(format!("q*g = {prod}, remainder {r}"))
    }
}

fn example_5_4() -> Outcome {
    let e = &fixtures::EXAMPLES[3];
    let spec = ConstaCodeSpec::new(
        e.n,
        fixtures::element(e.gamma),
        fixtures::poly(e.g, e.alpha),
    )
    .unwrap();
    let phi = spec.gray_image(GrayVariant::AAb);
    let p = parallel::min_lee_distance(&phi, 1 << 10).unwrap();
    let words = phi.size();
    let d = construction2(&spec, GrayVariant::AAb).unwrap();
    let dp = parallel::min_lee_distance(&d, 1 << 10).unwrap();
    let seqs: BTreeSet<String> = dna_export(&d, 1 << 10).unwrap().into_iter().collect();
    let table: BTreeSet<String> = fixtures::table4().into_iter().map(String::from).collect();
    let ok = words == Some(16)
        && p.matches(42, 2, 0, 21)
        && d.size() == Some(32)
        && dp.matches(42, 2, 1, 21)
        && seqs == table;
    let detail = format!(
        "phi {p} ({words:?} words), dna {dp}, table 4 shared {}/{}",
        seqs.intersection(&table).count(),
        table.len()
    );
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn example_5_2() -> Outcome {
    let e = &fixtures::EXAMPLES[1];
    let spec = ConstaCodeSpec::new(
        e.n,
        fixtures::element(e.gamma),
        fixtures::poly(e.g, e.alpha),
    )
    .unwrap();
    let phi = spec.gray_image(GrayVariant::AAb);
    let p = parallel::min_lee_distance(&phi, 1 << 24).unwrap();
    // count the enumeration independently of the early-exit path
    let scan = DistanceScan::new(&phi);
    let visited: u64 = (0..scan.task_count())
        .map(|t| scan.scan_task_partial(t, u64::MAX).1)
        .sum();
    let nonzero = visited - 1;
    let rep = check_sufficient(&spec);
    let conds = rep.g1_self_reciprocal.holds()
        && rep.g2_shifted_reciprocal.holds()
        && rep.membership.holds();
    let ok = p.matches(28, 12, 0, 8)
        && nonzero == 16_777_215
        && rep.sufficient_pass
        && conds
        && rep.exact_r_code;
    let detail = format!(
        "{p}, {nonzero} nonzero codewords, conditions [{}, {}, {}], r-code {}",
        rep.g1_self_reciprocal, rep.g2_shifted_reciprocal, rep.membership, rep.exact_r_code
    );
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

const DESK: u32 = 24;

fn spec_of(r: &CodeRow) -> Result<ConstaCodeSpec, String> {
    ConstaCodeSpec::new(
        r.n,
        fixtures::element(r.gamma),
        fixtures::poly(r.g, r.alpha),
    )
    .map_err(|e| format!("{}: {e}", r.id))
}

fn table3() -> Outcome {
    let mut notes = Vec::new();
    let mut checked = 0;
    for r in fixtures::TABLE3
        .iter()
        .filter(|r| r.phi_claim().log2_size() <= DESK)
    {
        checked += 1;
        let spec = match spec_of(r) {
            Ok(s) => s,
            Err(e) => {
                notes.push(e);
                continue;
            }
        };
        let c = r.phi_claim();
        let p = parallel::min_lee_distance(&spec.gray_image(GrayVariant::AAb), 1 << DESK).unwrap();
        if !p.matches(c.length, c.k1, c.k2, c.d) {
            notes.push(format!("{} phi {p} vs {c}", r.id));
        }
        let rep = check_sufficient(&spec);
        if !rep.sufficient_pass {
            notes.push(format!(
                "{} sufficient check fails [{}, {}, {}]",
                r.id, rep.g1_self_reciprocal, rep.g2_shifted_reciprocal, rep.membership
            ));
        }
        if !rep.exact_rc_code {
            notes.push(format!("{} not reverse-complement closed", r.id));
        }
    }
    let detail = format!("{checked} rows");
    if notes.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; {}", notes.join("; ")))
    }
}

fn table5() -> Outcome {
    let mut notes = Vec::new();
    let mut checked = 0;
    for r in fixtures::TABLE5
        .iter()
        .filter(|r| r.phi_claim().log2_size() <= DESK)
    {
        checked += 1;
        let spec = match spec_of(r) {
            Ok(s) => s,
            Err(e) => {
                notes.push(e);
                continue;
            }
        };
        let c = r.phi_claim();
        let p = parallel::min_lee_distance(&spec.gray_image(GrayVariant::AAb), 1 << DESK).unwrap();
        if !p.matches(c.length, c.k1, c.k2, c.d) {
            notes.push(format!("{} phi {p} vs {c}", r.id));
        }
        let dc = r.dna_claim().expect("table 5 has a DNA column");
        match construction2(&spec, GrayVariant::AAb) {
            Ok(d) => {
                let dp = parallel::min_lee_distance(&d, 1 << (DESK + 2)).unwrap();
                if !dp.matches(dc.length, dc.k1, dc.k2, dc.d) {
                    notes.push(format!("{} dna {dp} vs {dc}", r.id));
                }
            }
            Err(e) => notes.push(format!("{} dna: {e}", r.id)),
        }
    }
    // every mismatch must also be visible in the verification report
    let report = verify::verify(
        Table::T5,
        verify::Options {
            budget: verify::DEFAULT_BUDGET,
        },
    );
    for n in &notes {
        let id = n.split([' ', ':']).next().unwrap();
        if !report
            .iter()
            .any(|l| l.row == id && !matches!(l.status, Status::Match(_) | Status::Info(_)))
        {
            notes.push(format!("{id} missing from the report"));
            break;
        }
    }
    let detail = format!("{checked} rows");
    if notes.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; {}", notes.join("; ")))
    }
}

fn rand_elem(rng: &mut ChaCha8Rng) -> RElement {
    RElement::from_index((rng.next_u32() & 15) as u8)
}

fn rand_poly(rng: &mut ChaCha8Rng, max_deg: u32, der: Derivation) -> SkewPoly {
    let len = (rng.next_u32() % (max_deg + 1)) as usize + 1;
    SkewPoly::new((0..len).map(|_| rand_elem(rng)).collect(), der)
}

fn all_fixture_specs() -> Vec<(String, ConstaCodeSpec)> {
    let mut out = Vec::new();
    let mut add = |id: &str, n: usize, gamma: &str, alpha: &str, g: &str| {
        if let Ok(s) = ConstaCodeSpec::new(n, fixtures::element(gamma), fixtures::poly(g, alpha)) {
            out.push((id.to_string(), s));
        }
    };
    for r in fixtures::TABLE2 {
        add(r.id, r.inferred_n(), r.gamma, r.alpha, r.g);
    }
    for r in fixtures::TABLE3.iter().chain(fixtures::TABLE5) {
        add(r.id, r.n, r.gamma, r.alpha, r.g);
    }
    for e in fixtures::EXAMPLES {
        add(e.id, e.n, e.gamma, e.alpha, e.g);
    }
    out
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let ders = derivations();
    let mut bad: Vec<String> = Vec::new();

    for i in 0..10_000 {
        let d = ders[i % ders.len()];
        let (a, b, c) = (
            rand_poly(&mut rng, 6, d),
            rand_poly(&mut rng, 6, d),
            rand_poly(&mut rng, 6, d),
        );
        if &(&a * &b) * &c != &a * &(&b * &c) {
            bad.push(format!("associativity {a} | {b} | {c}"));
            break;
        }
        if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) || &(&a + &b) * &c != &(&a * &c) + &(&b * &c)
        {
            bad.push(format!("distributivity {a} | {b} | {c}"));
            break;
        }
        let mut h = rand_poly(&mut rng, 5, d);
        let lead = h.degree().unwrap_or(0);
        let mut coeffs = h.to_vec(lead + 1);
        while !coeffs[lead].is_unit() {
            coeffs[lead] = rand_elem(&mut rng);
        }
        h = SkewPoly::new(coeffs, d);
        let (q, r) = a.right_divmod(&h).unwrap();
        if &(&q * &h) + &r != a || r.degree().is_some_and(|dr| dr >= lead) {
            bad.push(format!("division {a} / {h}"));
            break;
        }
    }

    let specs = all_fixture_specs();
    for (id, s) in &specs {
        let x = SkewPoly::monomial(RElement::ONE, 1, s.derivation());
        for _ in 0..(10_000 / specs.len() + 1) {
            let v: Vec<RElement> = (0..s.n()).map(|_| rand_elem(&mut rng)).collect();
            let xc = s
                .reduce(&(&x * &SkewPoly::new(v.clone(), s.derivation())))
                .unwrap();
            if s.tau_shift(&v).unwrap() != xc.to_vec(s.n()) {
                bad.push(format!("{id}: tau vs x*c"));
                break;
            }
        }
    }

    let mut small = 0;
    for (id, s) in specs.iter().filter(|(_, s)| s.k() <= 4) {
        small += 1;
        let words: BTreeSet<Vec<RElement>> = s.codewords(1 << 16).unwrap().collect();
        let members = words.iter().all(|w| s.contains(w).unwrap());
        let expect = 1usize << (4 * s.k());
        if words.len() != expect
            || !members
            || s.gray_image(GrayVariant::AAb).log2_size() != 4 * s.k() as u32
        {
            bad.push(format!("{id}: |C| = {} vs 16^{}", words.len(), s.k()));
        }
    }

    for _ in 0..200 {
        let rows = 1 + (rng.next_u32() % 8) as usize;
        let cols = 1 + (rng.next_u32() % 10) as usize;
        let m: Vec<Vec<Z4>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| Z4::new((rng.next_u32() & 3) as u8))
                    .collect()
            })
            .collect();
        let code = Z4Code::howell_form(&Z4Matrix::from_rows(cols, &m).unwrap());
        let mut span = BTreeSet::new();
        for t in 0..(1u32 << (2 * rows)) {
            let mut w = vec![Z4::ZERO; cols];
            for (i, r) in m.iter().enumerate() {
                let c = Z4::new(((t >> (2 * i)) & 3) as u8);
                for (x, &y) in w.iter_mut().zip(r) {
                    *x += c * y;
                }
            }
            span.insert(w);
        }
        let ours: BTreeSet<Vec<Z4>> = code.codewords(1 << 16).unwrap().collect();
        if ours != span {
            bad.push(format!("howell span {rows}x{cols}"));
            break;
        }
    }

    for _ in 0..10_000 {
        let n = 1 + (rng.next_u32() % 12) as usize;
        let u: Vec<RElement> = (0..n).map(|_| rand_elem(&mut rng)).collect();
        let v: Vec<RElement> = (0..n).map(|_| rand_elem(&mut rng)).collect();
        let sum: Vec<RElement> = u.iter().zip(&v).map(|(&a, &b)| a + b).collect();
        let gu = gray_vector(&u, GrayVariant::AAb);
        let gv = gray_vector(&v, GrayVariant::AAb);
        let gsum: Vec<Z4> = gu.iter().zip(&gv).map(|(&a, &b)| a + b).collect();
        let rsum: Vec<RElement> = reverse_r(&u)
            .iter()
            .zip(reverse_r(&v))
            .map(|(&a, b)| a + b)
            .collect();
        if gray_vector(&sum, GrayVariant::AAb) != gsum
            || reverse_r(&sum) != rsum
            || gray_vector(&reverse_r(&u), GrayVariant::AAb) != reverse_z4(&gu)
        {
            bad.push("reversal/Gray additivity".into());
            break;
        }
    }
    let r_codes: Vec<&(String, ConstaCodeSpec)> = specs
        .iter()
        .filter(|(_, s)| is_r_code(&s.gray_image(GrayVariant::AAb)))
        .collect();
    for pair in r_codes.windows(2) {
        let (a, b) = (&pair[0].1, &pair[1].1);
        if a.n() == b.n() {
            let sum = a
                .gray_image(GrayVariant::AAb)
                .sum(&b.gray_image(GrayVariant::AAb))
                .unwrap();
            if !is_r_code(&sum) {
                bad.push(format!("sum of R-codes {} + {}", pair[0].0, pair[1].0));
            }
        }
    }

    let mut sufficient = 0;
    for (id, s) in &specs {
        let rep = check_sufficient(s);
        if rep.sufficient_pass {
            sufficient += 1;
            if !rep.exact_r_code {
                bad.push(format!("{id}: sufficient but not reversible"));
            }
        }
        for mode in RowMode::ALL {
            if s.generator_matrix(mode).length() != s.n() {
                bad.push(format!("{id}: generator length"));
            }
        }
    }

    let detail = format!(
        "{} fixture specs, {small} with k <= 4, {sufficient} pass the sufficient check",
        specs.len()
    );
    if bad.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; {}", bad.join("; ")))
    }
}

fn discrepancy_report() -> Outcome {
    let opts = verify::Options {
        budget: verify::DEFAULT_BUDGET,
    };
    let lines = verify::verify(Table::All, opts);
    let again = verify::verify(Table::Examples, opts);
    let mut notes = Vec::new();
    let ex51 = lines
        .iter()
        .find(|l| l.row == "Ex5.1" && l.check == "size")
        .map(|l| l.status.to_string());
    match &ex51 {
        Some(s) if s.contains("4^6") && s.contains("2^18") => {}
        other => notes.push(format!("Ex5.1 size line: {other:?}")),
    }
    let mut flagged = 0;
    for r in fixtures::TABLE2 {
        let n = r.inferred_n();
        let k = n - fixtures::poly(r.g, r.alpha).degree().unwrap_or(0);
        let over = r.claim().log2_size() > 4 * k as u32;
        let has_flag = lines
            .iter()
            .any(|l| l.row == r.id && matches!(l.status, Status::Flag(_)));
        if over != has_flag {
            notes.push(format!("{} flag {has_flag}, expected {over}", r.id));
        }
        flagged += has_flag as usize;
        let checks: Vec<&str> = lines
            .iter()
            .filter(|l| l.row == r.id)
            .map(|l| l.check.as_str())
            .collect();
        let modes = RowMode::ALL
            .iter()
            .all(|m| checks.iter().any(|c| c.contains(&format!("[{m}]"))));
        let divides = !lines
            .iter()
            .any(|l| l.row == r.id && matches!(l.status, Status::NotADivisor { .. }));
        let variants = !divides
            || GrayVariant::ALL
                .iter()
                .all(|v| checks.iter().any(|c| *c == format!("phi[{v}]")));
        if !modes || !variants {
            notes.push(format!("{} lacks a row mode or Gray variant", r.id));
        }
    }
    let skipped = lines
        .iter()
        .filter(|l| matches!(l.status, Status::Skipped { .. }))
        .count();
    let bounded = lines.iter().all(|l| match &l.status {
        Status::Skipped { ours, .. } => ours.contains("<="),
        _ => true,
    });
    if !bounded {
        notes.push("a SKIPPED line has no upper bound".into());
    }
    let first: Vec<_> = lines
        .iter()
        .filter(|l| l.row.starts_with("Ex"))
        .cloned()
        .collect();
    if first != again {
        notes.push("report not deterministic".into());
    }
    let detail = format!(
        "{} lines, {flagged} Table 2 rows flagged, {skipped} skipped with bounds",
        lines.len()
    );
    if notes.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; {}", notes.join("; ")))
    }
}

#[test]
fn acceptance() {
    let s = Duration::from_secs(1);
    let results = [
        run(1, "ring laws", s, ring_laws),
        run(2, "factorization of x^14 + 3", s, factorization),
        run(3, "length-21 DNA code end to end", s, example_5_4),
        run(
            4,
            "length-14 code, exact enumeration",
            Duration::from_secs(60),
            example_5_2,
        ),
        run(
            5,
            "Table 3 desk-scale rows",
            Duration::from_secs(300),
            table3,
        ),
        run(
            6,
            "Table 5 desk-scale rows",
            Duration::from_secs(600),
            table5,
        ),
        run(7, "property suite", Duration::from_secs(600), properties),
        run(
            8,
            "known-discrepancy report",
            Duration::from_secs(600),
            discrepancy_report,
        ),
    ];
    let failed: Vec<usize> = (1..=8).filter(|&i| !results[i - 1]).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn distance_is_exact_for_small_fixture_codes() {
    for r in fixtures::TABLE5
        .iter()
        .filter(|r| r.phi_claim().log2_size() <= 16)
    {
        if let Ok(s) = spec_of(r) {
            let p = parallel::min_lee_distance(&s.gray_image(GrayVariant::AAb), 1 << 16).unwrap();
            assert!(matches!(p.d_lee, Distance::Exact(_)), "{}", r.id);
        }
    }
}
