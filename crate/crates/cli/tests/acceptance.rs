//! Acceptance run: one line per criterion, exit status 0 when every
//! criterion has its expected outcome.

use std::collections::BTreeMap;
use std::process::{Command, Output};
use std::time::Instant;

use serde_json::Value;
use towerforge::modular::KNOWN_SOURCE_DISCREPANCIES;

const BIN: &str = env!("CARGO_BIN_EXE_towerforge");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (out.status.code().unwrap_or(-1), v)
}

/// Name to (status, detail) for one `verify` run.
struct Suite {
    exit: i32,
    checks: BTreeMap<String, (String, String)>,
}

impl Suite {
    fn load(scope: &str, q: u64) -> Suite {
        let (exit, v) = json(&["verify", scope, "--q", &q.to_string(), "--json"]);
        let checks = v["checks"]
            .as_array()
            .expect("checks array")
            .iter()
            .map(|c| {
                let s = |k: &str| c[k].as_str().unwrap_or_default().to_string();
                (s("name"), (s("status"), s("detail")))
            })
            .collect();
        Suite { exit, checks }
    }

    fn matching(&self, prefix: &str) -> Vec<(&String, &(String, String))> {
        self.checks
            .iter()
            .filter(|(n, _)| n.starts_with(prefix))
            .collect()
    }

    /// All checks under `prefix` pass, and there are `count` of them.
    fn expect(&self, prefix: &str, count: usize, errs: &mut Vec<String>) {
        let found = self.matching(prefix);
        if found.len() != count {
            errs.push(format!(
                "{prefix}: {} checks, expected {count}",
                found.len()
            ));
        }
        for (name, (status, detail)) in found {
            if status != "pass" {
                errs.push(format!("{name}: {status} ({detail})"));
            }
        }
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(errs: Vec<String>, ok_detail: impl Into<String>) -> Outcome {
    if errs.is_empty() {
        Outcome {
            pass: true,
            detail: ok_detail.into(),
        }
    } else {
        Outcome {
            pass: false,
            detail: errs.join("; "),
        }
    }
}

fn c1(deuring: &[Suite; 3], secs: f64) -> Outcome {
    let mut errs = Vec::new();
    for (s, q) in deuring.iter().zip([2, 3, 4]) {
        s.expect(&format!("deuring/consistency/q={q}/"), 6, &mut errs);
    }
    if secs >= 60.0 {
        errs.push(format!("took {secs:.1} s"));
    }
    outcome(
        errs,
        format!("q in {{2,3,4}}, i <= 5, two recursions agree ({secs:.1} s)"),
    )
}

fn c2(deuring: &[Suite; 3]) -> Outcome {
    let mut errs = Vec::new();
    for (s, q) in deuring.iter().zip([2, 3, 4]) {
        if q <= 3 {
            for i in 0..=3 {
                s.expect(&format!("deuring/substitution/q={q}/i={i}"), 1, &mut errs);
            }
        }
        s.expect(
            &format!("deuring/substitution-random/q={q}/i=4"),
            1,
            &mut errs,
        );
    }
    outcome(
        errs,
        "exact for q in {2,3}, i <= 3; 20 random points at i = 4 for q in {2,3,4}",
    )
}

fn c3(deuring: &[Suite; 3]) -> Outcome {
    let mut errs = Vec::new();
    deuring[0].expect("deuring/reduced-roots/q=2/", 4, &mut errs);
    deuring[1].expect("deuring/reduced-roots/q=3/", 5, &mut errs);
    for (suite, name, m) in [
        (&deuring[0], "deuring/reduced-roots/q=2/L=T^2+T+1", 3),
        (&deuring[0], "deuring/reduced-roots/q=2/L=T^3+T+1", 7),
        (&deuring[1], "deuring/reduced-roots/q=3/L=T^2+1", 4),
    ] {
        match suite.checks.get(name) {
            Some((_, d)) if d.contains(&format!("m_d = {m},")) => {}
            other => errs.push(format!("{name}: {other:?}")),
        }
    }
    outcome(errs, "m_d simple nonzero roots for 9 primes; m_d = 3, 7, 4")
}

fn c4(drinfeld: &[Suite; 2]) -> Outcome {
    let mut errs = Vec::new();
    drinfeld[0].expect("drinfeld/supersingular/q=2/", 5, &mut errs);
    drinfeld[1].expect("drinfeld/supersingular/q=3/", 5, &mut errs);
    let (code, v) = json(&["supersingular", "--q", "2", "--L", "T+1", "--json"]);
    if code != 0 || v["u_values"] != serde_json::json!(["1"]) || v["agree"] != Value::Bool(true) {
        errs.push(format!("T+1: exit {code}, {v}"));
    }
    outcome(
        errs,
        "height oracle and p_d agree on every prime; u = 1 at T+1",
    )
}

fn c5(towers: &[Suite]) -> Outcome {
    let mut errs = Vec::new();
    for l in ["T+1", "T^2+T+1"] {
        for kind in ["E", "F"] {
            let p = format!("towers/{kind}^({l})/q=2/");
            towers[0].expect(&format!("{p}split-size"), 1, &mut errs);
            towers[0].expect(&format!("{p}certify/n=6"), 1, &mut errs);
        }
    }
    for kind in ["E", "F"] {
        let p = format!("towers/{kind}^(T-1)/q=3/");
        towers[1].expect(&format!("{p}split-size"), 1, &mut errs);
        towers[1].expect(&format!("{p}certify/n=4"), 1, &mut errs);
    }
    let (code, v) = json(&[
        "tower", "--kind", "E", "--q", "2", "--L", "T^2+T+1", "--levels", "5", "--json",
    ]);
    let sizes: Vec<&Value> = v
        .as_array()
        .map(|a| a.iter().map(|r| &r["split_size"]).collect())
        .unwrap_or_default();
    if code != 0 || sizes.len() != 5 || sizes.iter().any(|s| **s != 6) {
        errs.push(format!("E^(T^2+T+1) split sizes {sizes:?}"));
    }
    outcome(
        errs,
        "|S| = q m_d, q^n simple chains, closure: q=2 n<=6, q=3 n<=4",
    )
}

fn c6(towers: &[Suite], secs: f64) -> Outcome {
    let mut errs = Vec::new();
    let mut ratios = Vec::new();
    for (suite, name) in [
        (&towers[0], "towers/dv-band/E^(T+1)/q=2/n=10"),
        (&towers[0], "towers/dv-band/E^(T^2+T+1)/q=2/n=10"),
        (&towers[0], "towers/dv-band/F^(T+1)/q=2/n=10"),
        (&towers[1], "towers/dv-band/F^(T-1)/q=3/n=10"),
    ] {
        match suite.checks.get(name) {
            Some((s, d)) if s == "pass" => ratios.push(
                d.split(", ")
                    .find(|p| p.starts_with("ratio"))
                    .unwrap_or("?")
                    .to_string(),
            ),
            other => errs.push(format!("{name}: {other:?}")),
        }
    }
    let (_, v) = json(&[
        "tower", "--kind", "E", "--q", "2", "--L", "T+1", "--levels", "3", "--json",
    ]);
    let flags: Vec<bool> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| !r["genus_anomaly"].is_null())
        .collect();
    if flags != [true, true, false] {
        errs.push(format!("genus_E anomaly flags {flags:?}"));
    }
    if secs >= 300.0 {
        errs.push(format!("took {secs:.1} s"));
    }
    outcome(
        errs,
        format!(
            "n = 10 {} within [0.8, 1.25] x bound; genus_E flagged at n < 3",
            ratios.join(" ")
        ),
    )
}

fn c7() -> Outcome {
    let suite = Suite::load("modular", 2);
    let mut failed: Vec<&str> = suite
        .checks
        .iter()
        .filter(|(_, (s, _))| s == "fail")
        .map(|(n, _)| n.as_str())
        .collect();
    failed.sort();
    let passed = suite.checks.values().filter(|(s, _)| s == "pass").count();
    Outcome {
        pass: failed.is_empty() && suite.exit == 0,
        detail: format!("{passed} sub-checks pass; failing: {}", failed.join(", ")),
    }
}

fn c7_expected(o: &Outcome) -> bool {
    let mut known = KNOWN_SOURCE_DISCREPANCIES.to_vec();
    known.sort();
    !o.pass
        && o.detail
            .ends_with(&format!("failing: {}", known.join(", ")))
}

fn c8(towers: &[Suite; 4]) -> Outcome {
    let mut errs = Vec::new();
    for q in [2, 3, 4] {
        towers[0].expect(&format!("towers/gs=F(T-1)/q={q}"), 1, &mut errs);
    }
    towers[0].expect("towers/elkies=E(T-1)/q=2", 1, &mut errs);
    for l in ["T+1", "T^2+T+1"] {
        towers[0].expect(&format!("towers/gamma(1/alpha)=F({l})/q=2"), 1, &mut errs);
        towers[0].expect(&format!("towers/E=F({l})/q=2"), 1, &mut errs);
    }
    for (i, q) in [2, 3, 4].into_iter().enumerate() {
        towers[i].expect(&format!("towers/identity-d/q={q}"), 1, &mut errs);
        if q <= 3 {
            towers[i].expect(&format!("towers/identity-e/q={q}"), 1, &mut errs);
        }
    }
    outcome(
        errs,
        "gs, elkies, gamma(1/alpha) and E=F specializations; identities (d) q<=4, (e) q<=3",
    )
}

fn c9(towers: &[Suite; 4]) -> Outcome {
    let mut errs = Vec::new();
    for (s, q) in towers.iter().zip([2, 3, 4, 5]) {
        s.expect(&format!("towers/genus-bound/q={q}"), 1, &mut errs);
    }
    outcome(errs, "(g - 1)/q^n <= q exactly for n <= 20, q in {2,3,4,5}")
}

fn c10() -> Outcome {
    let mut errs = Vec::new();
    let configs: [&[&str]; 4] = [
        &[
            "tower", "--kind", "F", "--q", "2", "--L", "T-1", "--levels", "8", "--json",
        ],
        &[
            "tower", "--kind", "gamma", "--q", "2", "--gamma", "1", "--levels", "3", "--json",
        ],
        &["verify", "all", "--q", "2", "--json"],
        &[
            "tower", "--kind", "F", "--q", "3", "--L", "T-1", "--levels", "4", "--csv",
        ],
    ];
    for args in configs {
        let (a, b) = (run(args), run(args));
        if a.stdout.is_empty() || a.stdout != b.stdout {
            errs.push(format!("{args:?} differs between runs"));
        }
    }
    let (_, v) = json(configs[0]);
    let complete = v
        .as_array()
        .map(|a| a.len() == 8 && a.iter().all(|r| r["complete"] == Value::Bool(true)));
    if complete != Some(true) {
        errs.push("F^(T-1) --levels 8 is not complete at every level".into());
    }
    let (_, g) = json(configs[1]);
    let (_, f) = json(&[
        "tower", "--kind", "F", "--q", "2", "--L", "T-1", "--levels", "3", "--json",
    ]);
    let col = |v: &Value| {
        v.as_array()
            .unwrap()
            .iter()
            .map(|r| r["N_lb"].clone())
            .collect::<Vec<_>>()
    };
    if col(&g) != col(&f) {
        errs.push("gamma = 1 and F^(T-1) N_lb columns differ".into());
    }
    for (args, want) in [
        (&["verify", "modular", "--q", "3"][..], 2),
        (&["supersingular", "--q", "2", "--L", "T"][..], 2),
        (&["verify", "deuring", "--q", "3"][..], 0),
    ] {
        let code = run(args).status.code();
        if code != Some(want) {
            errs.push(format!("{args:?} exited {code:?}, expected {want}"));
        }
    }
    outcome(
        errs,
        "byte-identical JSON and CSV across repeated runs; exit codes as documented",
    )
}

fn main() {
    let t = Instant::now();
    let deuring = [
        Suite::load("deuring", 2),
        Suite::load("deuring", 3),
        Suite::load("deuring", 4),
    ];
    let deuring_secs = t.elapsed().as_secs_f64();
    let drinfeld = [Suite::load("drinfeld", 2), Suite::load("drinfeld", 3)];
    let t = Instant::now();
    let towers = [
        Suite::load("towers", 2),
        Suite::load("towers", 3),
        Suite::load("towers", 4),
        Suite::load("towers", 5),
    ];
    let tower_secs = t.elapsed().as_secs_f64();

    let results = [
        c1(&deuring, deuring_secs),
        c2(&deuring),
        c3(&deuring),
        c4(&drinfeld),
        c5(&towers[..2]),
        c6(&towers[..2], tower_secs),
        c7(),
        c8(&towers),
        c9(&towers),
        c10(),
    ];

    let mut unexpected = Vec::new();
    for (i, r) in results.iter().enumerate() {
        let n = i + 1;
        println!(
            "criterion {n:>2}: {}  {}",
            if r.pass { "PASS" } else { "FAIL" },
            r.detail
        );
        let expected = if n == 7 { c7_expected(r) } else { r.pass };
        if !expected {
            unexpected.push(n);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: outcomes as expected (criterion 7 fails on the known source discrepancies)");
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
