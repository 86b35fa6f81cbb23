//! Acceptance checks, one line per criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use sfa::audit::audit_listing;
use sfa::{enumerate_parallel, write_catalog, Format};
use sfa_core::enumerate::{pairings, EnumerationQuery};
use sfa_core::surface::{chord_cycles, to_ribbon};
use sfa_core::{
    emit_code, is_isomorphic, reverse_code, reverse_t, CDiagram, ChordColor, ChordDiagram, CodeKind, Diagram,
    DiagramCode, Direction, EdgeColors, Polarity, Site, SurfaceClass, TDiagram,
};

struct Outcome {
    pass: bool,
    detail: String,
    audit: String,
}

fn counts(kind: CodeKind, expected: &[(bool, u32, usize)]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut audit = String::new();
    for &(o, g, want) in expected {
        let q = EnumerationQuery::new(kind, o, g).unwrap();
        let c = enumerate_parallel(&q, 0).unwrap();
        let got = c.len();
        let surface = SurfaceClass::new(o, g).unwrap();
        if got == want {
            parts.push(format!("{surface}={got}"));
        } else {
            pass = false;
            parts.push(format!("{surface}={got} (expected {want})"));
            audit.push_str(&audit_listing(&c));
        }
        if kind == CodeKind::Sc && !o && g == 1 {
            let flows = c.flow_count();
            if flows != 4 {
                pass = false;
            }
            parts.push(format!("flows={flows}"));
        }
    }
    Outcome {
        pass,
        detail: parts.join(", "),
        audit,
    }
}

fn criterion_1() -> Outcome {
    counts(
        CodeKind::Sn,
        &[
            (true, 0, 1),
            (true, 1, 5),
            (true, 2, 81),
            (false, 1, 3),
            (false, 2, 13),
            (false, 3, 123),
        ],
    )
}

fn criterion_2() -> Outcome {
    counts(
        CodeKind::Base,
        &[(true, 1, 1), (true, 2, 4), (false, 1, 1), (false, 2, 2), (false, 3, 8)],
    )
}

fn criterion_3() -> Outcome {
    counts(
        CodeKind::Sc,
        &[
            (true, 1, 1),
            (true, 2, 12),
            (false, 2, 2),
            (false, 1, 2),
            (false, 3, 20),
        ],
    )
}

fn criterion_4() -> Outcome {
    let q = EnumerationQuery::new(CodeKind::Sc, false, 3).unwrap();
    let c = enumerate_parallel(&q, 0).unwrap();
    let fixed = c.entries.iter().filter(|e| e.self_reverse).count();
    let moved = c
        .entries
        .iter()
        .filter(|e| !e.self_reverse && e.reverse_partner.is_some())
        .count();
    Outcome {
        pass: fixed == 6 && moved == 14 && c.len() == 20,
        detail: format!("self-reverse={fixed}, pairs={}", moved / 2),
        audit: String::new(),
    }
}

fn criterion_5() -> Outcome {
    let mut fails = Vec::new();
    let sn = DiagramCode::parse_auto("1'210323").unwrap();
    let d = sn.to_diagram();
    if to_ribbon(&d).surface_class() != SurfaceClass::nonorientable(3) {
        fails.push("1'210323 surface");
    }
    let ccw = emit_code(&d, Direction::Counterclockwise).to_string();
    let cw = emit_code(&d, Direction::Clockwise).to_string();
    let canon = d.canonical_code().to_string();
    if !(ccw == "1' 2 1 0 3 2 3" && cw == ccw && canon == ccw) {
        fails.push("1'210323 symmetry");
    }
    let a = DiagramCode::parse_auto("01'212").unwrap().to_diagram();
    let b = DiagramCode::parse_auto("02121'").unwrap().to_diagram();
    if !is_isomorphic(&a, &b).unwrap() || a.canonical_code().to_string() != "0 1' 2 1 2" {
        fails.push("01'212 ~ 02121'");
    }
    let rev = reverse_code(&DiagramCode::parse(CodeKind::Sc, "0 1' 2 1 2").unwrap()).unwrap();
    if rev.to_string() != "0 1' 2 1 2" {
        fails.push("reverse 0 1' 2 1 2");
    }
    Outcome {
        pass: fails.is_empty(),
        detail: if fails.is_empty() {
            format!("canonical {canon}, reverse {rev}")
        } else {
            fails.join("; ")
        },
        audit: String::new(),
    }
}

fn colors(n: usize, mask: u32) -> Vec<(u32, ChordColor)> {
    (0..n as u32)
        .map(|c| (c, ChordColor::from_cross(mask >> c & 1 == 1)))
        .collect()
}

fn insert(chords: &[u32], extra: &[(usize, Site)]) -> Vec<Site> {
    let mut rest = chords.iter().map(|&c| Site::Chord(c));
    (0..chords.len() + extra.len())
        .map(|i| match extra.iter().find(|(p, _)| *p == i) {
            Some(&(_, s)) => s,
            None => rest.next().unwrap(),
        })
        .collect()
}

fn edges(mask: u32) -> EdgeColors {
    EdgeColors::new(
        ChordColor::from_cross(mask & 1 != 0),
        ChordColor::from_cross(mask & 2 != 0),
        ChordColor::from_cross(mask & 4 != 0),
    )
}

/// Builds a diagram of the given kind from a pairing, chord colour mask,
/// marked-site positions and T edge mask.
fn build(kind: u8, seq: &[u32], mask: u32, pos: &[usize], edge_mask: u32) -> Diagram {
    let n = seq.len() / 2;
    match kind {
        0 => Diagram::Base(ChordDiagram::new(&insert(seq, &[]), colors(n, mask)).unwrap()),
        1 => {
            let sites = insert(seq, &[(pos[0], Site::ArcStart), (pos[1], Site::ArcEnd)]);
            Diagram::Sn(CDiagram::new(&sites, colors(n, mask), Polarity::Source).unwrap())
        }
        _ => {
            let sites = insert(
                seq,
                &[(pos[0], Site::TLower), (pos[1], Site::TSideA), (pos[2], Site::TSideB)],
            );
            Diagram::Sc(TDiagram::new(&sites, colors(n, mask), edges(edge_mask)).unwrap())
        }
    }
}

fn diagram_strategy(max_n: usize) -> impl Strategy<Value = Diagram> {
    (0u8..3, 0..=max_n)
        .prop_flat_map(|(kind, n)| {
            let ids: Vec<u32> = (0..n as u32).flat_map(|c| [c, c]).collect();
            let extra = [0usize, 2, 3][kind as usize];
            let m = 2 * n + extra;
            (
                Just(kind),
                Just(ids).prop_shuffle(),
                any::<u32>(),
                proptest::sample::subsequence((0..m).collect::<Vec<_>>(), extra).prop_shuffle(),
                0u32..8,
            )
        })
        .prop_map(|(kind, seq, mask, pos, e)| build(kind, &seq, mask, &pos, e))
}

type Check = fn(&Diagram) -> Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn parse_emit(d: &Diagram) -> Result<(), String> {
    for dir in [Direction::Counterclockwise, Direction::Clockwise] {
        let code = emit_code(d, dir);
        let parsed = DiagramCode::parse(code.kind(), &code.to_string()).map_err(|e| e.to_string())?;
        if parsed != code || emit_code(&parsed.to_diagram(), Direction::Counterclockwise) != code {
            return Err(format!("round trip {code}"));
        }
    }
    Ok(())
}

fn reflection(d: &Diagram) -> Result<(), String> {
    (d.canonical_code() == d.reflect().canonical_code())
        .then_some(())
        .ok_or_else(|| format!("reflection {}", d.canonical_code()))
}

fn cycles_oracle(d: &Diagram) -> Result<(), String> {
    let bare = match d {
        Diagram::Base(b) => b.clone(),
        Diagram::Sn(c) => c.chord_diagram(),
        Diagram::Sc(_) => return Ok(()),
    };
    let walk = to_ribbon(&Diagram::Base(bare.clone())).cycle_count();
    (chord_cycles(&bare) == walk)
        .then_some(())
        .ok_or_else(|| format!("cycles {}", d.canonical_code()))
}

fn euler(d: &Diagram) -> Result<(), String> {
    let Diagram::Base(b) = d else { return Ok(()) };
    let rc = to_ribbon(d);
    if rc.cycle_count() == 1 && rc.surface_class().euler_characteristic() != 2 - b.chord_count() as i64 {
        return Err(format!("euler {}", d.canonical_code()));
    }
    Ok(())
}

fn t_orientability(d: &Diagram) -> Result<(), String> {
    let Diagram::Sc(t) = d else { return Ok(()) };
    let criterion = t.chord_colors().iter().all(|c| !c.is_cross()) && t.edges().all_same();
    (to_ribbon(d).is_orientable() == criterion)
        .then_some(())
        .ok_or_else(|| format!("orientability {}", d.canonical_code()))
}

fn reversal(d: &Diagram) -> Result<(), String> {
    let Diagram::Sc(t) = d else { return Ok(()) };
    let Ok(r) = reverse_t(t) else {
        return (to_ribbon(d).cycle_count() != 1)
            .then_some(())
            .ok_or_else(|| "reverse failed".to_string());
    };
    let rd = Diagram::Sc(r.clone());
    let rr = Diagram::Sc(reverse_t(&r).map_err(|e| e.to_string())?);
    if to_ribbon(&rd).surface_class() != to_ribbon(d).surface_class() || rr.canonical_code() != d.canonical_code() {
        return Err(format!("reversal {}", d.canonical_code()));
    }
    Ok(())
}

const CHECKS: &[(&str, Check)] = &[
    ("parse-emit", parse_emit),
    ("reflection", reflection),
    ("cycle oracle", cycles_oracle),
    ("euler", euler),
    ("T orientability", t_orientability),
    ("reversal", reversal),
];

fn exhaustive(max_n: usize) -> Vec<Diagram> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for seq in pairings(n) {
            for mask in 0..1u32 << n {
                out.push(build(0, &seq, mask, &[], 0));
                let m = 2 * n + 2;
                for s in 0..m {
                    for e in (0..m).filter(|&e| e != s) {
                        out.push(build(1, &seq, mask, &[s, e], 0));
                    }
                }
                let m = 2 * n + 3;
                for a in 1..m {
                    for b in (1..m).filter(|&b| b != a) {
                        for e in 0..8 {
                            out.push(build(2, &seq, mask, &[0, a, b], e));
                        }
                    }
                }
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let all = exhaustive(3);
    for (name, check) in CHECKS {
        let mut runner = TestRunner::new(Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        });
        if let Err(e) = runner.run(&diagram_strategy(6), |d| check(&d).map_err(TestCaseError::fail)) {
            failures.push(format!("{name} (random): {e}"));
        }
        if let Some(err) = all.iter().find_map(|d| check(d).err()) {
            failures.push(format!("{name} (exhaustive): {err}"));
        }
    }
    for (o, g) in [(true, 1), (true, 2), (false, 2), (false, 3)] {
        let q = EnumerationQuery::new(CodeKind::Sc, o, g).unwrap();
        for code in enumerate_parallel(&q, 0).unwrap().codes() {
            let d = code.to_diagram();
            for check in [t_orientability as Check, reversal] {
                if let Err(e) = check(&d) {
                    failures.push(format!("catalog: {e}"));
                }
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!(
                "{} checks x 1000 random cases, {} exhaustive diagrams, SC catalogs",
                CHECKS.len(),
                all.len()
            )
        } else {
            failures.join("; ")
        },
        audit: String::new(),
    }
}

fn criterion_7() -> Outcome {
    let mut runs = 0;
    let mut diffs = Vec::new();
    let queries = [
        (CodeKind::Base, true, 1),
        (CodeKind::Base, true, 2),
        (CodeKind::Base, false, 1),
        (CodeKind::Base, false, 2),
        (CodeKind::Base, false, 3),
        (CodeKind::Sn, true, 0),
        (CodeKind::Sn, true, 1),
        (CodeKind::Sn, true, 2),
        (CodeKind::Sn, false, 1),
        (CodeKind::Sn, false, 2),
        (CodeKind::Sn, false, 3),
        (CodeKind::Sc, true, 1),
        (CodeKind::Sc, true, 2),
        (CodeKind::Sc, false, 1),
        (CodeKind::Sc, false, 2),
        (CodeKind::Sc, false, 3),
    ];
    for (kind, o, g) in queries {
        let q = EnumerationQuery::new(kind, o, g).unwrap();
        for format in [Format::Json, Format::Table] {
            let a = write_catalog(&enumerate_parallel(&q, 1).unwrap(), format);
            let b = write_catalog(&enumerate_parallel(&q, 5).unwrap(), format);
            runs += 1;
            if a != b {
                diffs.push(format!("{} {}", kind.as_str(), q.surface));
            }
        }
    }
    Outcome {
        pass: diffs.is_empty(),
        detail: if diffs.is_empty() {
            format!("{runs} catalog files identical with 1 and 5 workers")
        } else {
            diffs.join("; ")
        },
        audit: String::new(),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("SN enumeration counts", criterion_1),
        ("base chord-diagram counts", criterion_2),
        ("SC enumeration counts", criterion_3),
        ("reversal structure, nonorientable genus 3", criterion_4),
        ("code conformance", criterion_5),
        ("property suites", criterion_6),
        ("determinism across worker counts", criterion_7),
    ];
    let mut failed = 0;
    let mut audits = String::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        println!(
            "[{}] {}. {}: {} ({:.2}s)",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            name,
            o.detail,
            secs
        );
        if !o.pass {
            failed += 1;
            audits.push_str(&o.audit);
        }
    }
    if !audits.is_empty() {
        println!("\n{audits}");
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
