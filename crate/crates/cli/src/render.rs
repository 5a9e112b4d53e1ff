//! Text and JSON renderings of reports. Both carry the same numbers.

use std::fmt::Write;

use relcm::complex::Slice;
use relcm::parse::{format_ideal, format_monomial, ideal_strings};
use relcm::verifier::fixtures::ExampleReport;
use relcm::verifier::CorpusRun;
use relcm::{Monomial, MonomialIdeal, PropertyReport, RingSpec, SopStatus, SopWitness};
use serde_json::{json, Value};

fn monomials(ring: &RingSpec, seq: &[Monomial]) -> Vec<String> {
    seq.iter().map(|m| format_monomial(ring, m)).collect()
}

fn sop_json(ring: &RingSpec, w: &SopWitness) -> Value {
    json!({
        "status": w.status,
        "degree_bound": w.degree_bound,
        "sequence": monomials(ring, &w.sequence),
    })
}

pub fn analysis_json(
    ring: &RingSpec,
    a: &MonomialIdeal,
    i: &MonomialIdeal,
    report: &PropertyReport,
    slices: Option<&[Slice]>,
) -> Value {
    let mut report_json = serde_json::to_value(report).expect("reports serialize");
    report_json["witnesses"] = json!({
        "sop": report.witnesses.sop.as_ref().map(|w| sop_json(ring, w)),
        "regular_sequence": report.witnesses.regular_sequence.as_ref().map(|s| monomials(ring, s)),
    });
    let mut out = json!({
        "ring": { "names": ring.names(), "char": ring.characteristic() },
        "a": ideal_strings(ring, a),
        "i": ideal_strings(ring, i),
        "invariants": report.invariants,
        "report": report_json,
    });
    if let Some(slices) = slices {
        out["slices"] = serde_json::to_value(slices).expect("slices serialize");
    }
    out
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn profile(v: &Option<Vec<usize>>) -> String {
    match v {
        Some(p) => format!("{{{}}}", p.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")),
        None => "none".into(),
    }
}

fn sop_text(ring: &RingSpec, w: &SopWitness) -> String {
    match w.status {
        SopStatus::Found => monomials(ring, &w.sequence).join(", "),
        SopStatus::DegenerateZeroLength => "empty sequence (cd = 0)".into(),
        SopStatus::NoneAmongMonomials => {
            format!("none among monomials of degree <= {}", w.degree_bound)
        }
    }
}

pub fn analysis_text(
    ring: &RingSpec,
    a: &MonomialIdeal,
    i: &MonomialIdeal,
    report: &PropertyReport,
    slices: Option<&[Slice]>,
) -> String {
    let rec = &report.invariants;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "ring   k[{}], char {}",
        ring.names().join(", "),
        report.characteristic
    );
    let _ = writeln!(s, "a      {}", format_ideal(ring, a));
    let _ = writeln!(s, "I      {}", format_ideal(ring, i));
    let _ = writeln!(s, "box    rho = {:?}", report.scan.rho());
    let _ = writeln!(s, "\ninvariants");
    let rows: [(&str, String); 14] = [
        ("grade(a, M)", opt(rec.grade)),
        ("cd(a, M)", opt(rec.cd)),
        ("a-id(M)", opt(rec.a_id)),
        ("mu(a)", rec.mu.to_string()),
        ("pd(M)", opt(rec.pd)),
        ("depth(M)", opt(rec.depth)),
        ("dim(M)", opt(rec.dim)),
        ("ara(a, M) lower", opt(rec.ara_lower)),
        ("ara(a, M) upper", opt(rec.ara_upper)),
        ("grade(a, S)", rec.grade_ring.to_string()),
        ("cd(a, S)", rec.cd_ring.to_string()),
        ("pd(S/a)", rec.pd_a.to_string()),
        ("Ext profile", profile(&rec.ext_profile)),
        ("H_a profile", profile(&rec.lc_profile)),
    ];
    for (name, value) in rows {
        let _ = writeln!(s, "  {name:<18} {value}");
    }
    let _ = writeln!(s, "\nproperties");
    let verdicts = [
        ("relative CM", report.rel_cm),
        ("relative max CM", report.rel_max_cm),
        ("relative Gorenstein", report.rel_gorenstein),
        ("relative regular S", report.rel_regular_ring),
        ("relative regular M", report.rel_regular_module),
    ];
    for (name, v) in verdicts {
        let _ = writeln!(s, "  {name:<22} {v}");
    }
    let _ = writeln!(s, "  {:<22} {}", "chain consistent", report.chain_consistent);
    let _ = writeln!(s, "\nwitnesses");
    let sop = report
        .witnesses
        .sop
        .as_ref()
        .map_or("none (M = 0)".into(), |w| sop_text(ring, w));
    let _ = writeln!(s, "  s.o.p.             {sop}");
    let regular = report
        .witnesses
        .regular_sequence
        .as_ref()
        .map_or("none".into(), |seq| monomials(ring, seq).join(", "));
    let _ = writeln!(s, "  regular sequence   {regular}");
    if !report.notes.is_empty() {
        let _ = writeln!(s, "\nnotes");
        for note in &report.notes {
            let _ = writeln!(s, "  {note}");
        }
    }
    if let Some(slices) = slices {
        let _ = writeln!(s, "\nslices (index, multidegree, dimension)");
        for sl in slices {
            let _ = writeln!(s, "  {}  {:?}  {}", sl.i, sl.b, sl.dim);
        }
    }
    s
}

pub fn examples_text(reports: &[ExampleReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{status} {}: {}", r.id, r.description);
        let _ = writeln!(s, "     ring k[{}], a = ({}), I = ({})", r.ring.join(", "), r.a, r.i);
        for c in &r.checks {
            let mark = if c.ok { "ok " } else { "BAD" };
            if c.ok {
                let _ = writeln!(s, "     {mark} {} = {}", c.quantity, c.actual);
            } else {
                let _ = writeln!(s, "     {mark} {} = {} (expected {})", c.quantity, c.actual, c.expected);
            }
        }
        for note in &r.notes {
            let _ = writeln!(s, "     note: {note}");
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(s, "{passed} of {} examples reproduced", reports.len());
    s
}

pub fn corpus_text(run: &CorpusRun) -> String {
    let p = &run.params;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "corpus seed {} count {} vars {} max exponent {} generators {}..={}{}",
        p.seed,
        p.count,
        p.n,
        p.max_exponent,
        p.gen_count_range.start(),
        p.gen_count_range.end(),
        if p.squarefree { " squarefree" } else { "" }
    );
    let _ = writeln!(s, "digest {}", run.digest);
    let _ = writeln!(
        s,
        "{:<32} {:>5} {:>11} {:>10} {:>9}  hypothesis",
        "suite", "run", "informative", "violations", "time"
    );
    for r in &run.suites {
        let _ = writeln!(
            s,
            "{:<32} {:>5} {:>11} {:>10} {:>8.2}s  {}",
            r.suite,
            r.instances_run,
            r.non_vacuous,
            r.violations.len(),
            r.wall_time.as_secs_f64(),
            r.hypothesis_mode
        );
        for v in r.violations.iter().take(3) {
            let _ = writeln!(
                s,
                "    instance {}: a = ({}), I = ({}): expected {}, got {}",
                v.index, v.a, v.i, v.expected, v.actual
            );
        }
    }
    let _ = writeln!(
        s,
        "{}: {} violations",
        if run.passed() { "PASS" } else { "FAIL" },
        run.total_violations()
    );
    s
}
