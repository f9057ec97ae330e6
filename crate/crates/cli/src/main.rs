use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use towerforge::check::{all_passed, Check, Status};
use towerforge::deuring::DeuringFamily;
use towerforge::drinfeld::supersingular_u_set;
use towerforge::fields::base_field;
use towerforge::modular::ModularData;
use towerforge::polys::{distinct_roots, format_elem, MPoly};
use towerforge::primes::Prime;
use towerforge::suite::{self, Scope, DEFAULT_SEED};
use towerforge::towers::{dv_reports, make_tower, reports_to_csv, TowerKind};

#[derive(Parser)]
#[command(
    name = "towerforge",
    version,
    about = "Exact checks for Drinfeld modular towers over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Supersingular parameters u at a prime L, computed two ways.
    Supersingular(SupersingularArgs),
    /// Print p_i, and its reduction and roots at L.
    Deuring(DeuringArgs),
    /// Splitting reports for a tower, one per level.
    Tower(TowerArgs),
    /// Print an embedded modular example, optionally reduced mod L.
    Modular(ModularArgs),
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

impl Output {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => {
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }

    fn emit_json<T: Serialize>(&self, value: &T) -> Result<()> {
        let mut s = serde_json::to_string_pretty(value)?;
        s.push('\n');
        self.emit(&s)
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// all, deuring, drinfeld, modular or towers
    #[arg(default_value = "all")]
    scope: String,
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Include per-check wall-clock times (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SupersingularArgs {
    #[arg(long)]
    q: u64,
    #[arg(long = "L")]
    l: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct DeuringArgs {
    #[arg(long)]
    q: u64,
    /// Index of p_i; defaults to deg L when L is given, else 2.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long = "L")]
    l: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct TowerArgs {
    /// E, F, gamma, gamma-y, gs, elkies or example
    #[arg(long)]
    kind: String,
    #[arg(long)]
    q: u64,
    #[arg(long = "L")]
    l: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    /// Read gamma in F_{q^k} instead of F_q.
    #[arg(long = "gamma-ext")]
    gamma_ext: Option<usize>,
    /// Level of the embedded example (T, T^2 + T + 1 or T^2 + T).
    #[arg(long)]
    level: Option<String>,
    #[arg(long, default_value_t = 3)]
    levels: usize,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long = "max-work")]
    max_work: Option<u128>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ModularArgs {
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long, default_value = "T")]
    level: String,
    #[arg(long = "L")]
    l: Option<String>,
    #[command(flatten)]
    output: Output,
}

/// A run that completed; `false` means some check failed.
type Outcome = Result<bool>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Supersingular(a) => supersingular(a),
        Command::Deuring(a) => deuring(a),
        Command::Tower(a) => tower(a),
        Command::Modular(a) => modular(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    scope: String,
    q: u64,
    seed: u64,
    passed: bool,
    checks: &'a [Check],
}

fn verify(a: VerifyArgs) -> Outcome {
    let scope = Scope::from_name(&a.scope).ok_or_else(|| anyhow!("unknown scope {:?}", a.scope))?;
    let mut checks = suite::run(scope, a.q, a.seed)?;
    if !a.timings {
        checks = checks.into_iter().map(Check::without_timing).collect();
    }
    let passed = all_passed(&checks);
    if a.output.json {
        a.output.emit_json(&VerifyJson {
            scope: scope.to_string(),
            q: a.q,
            seed: a.seed,
            passed,
            checks: &checks,
        })?;
    } else {
        let mut text = format!("verify {scope} q={} seed={}\n", a.q, a.seed);
        for c in &checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            text.push_str(&format!("{status} {}  {}", c.name, c.detail));
            if let Some(ms) = c.elapsed_ms {
                text.push_str(&format!("  [{ms:.1} ms]"));
            }
            text.push('\n');
        }
        let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
        text.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
        a.output.emit(&text)?;
    }
    Ok(passed)
}

fn supersingular(a: SupersingularArgs) -> Outcome {
    let base = base_field(a.q)?;
    let prime = Prime::parse(&base, &a.l)?;
    let family = DeuringFamily::new(&base);
    let report = supersingular_u_set(&family, &prime)?;
    let json = report.to_json();
    if a.output.json {
        a.output.emit_json(&json)?;
    } else {
        a.output.emit(&format!(
            "L = {}\nfield F_{}\nheight oracle: {{{}}}\nvia p_d:       {{{}}}\nm_d = {}\nagree: {}\n",
            json.l,
            report.field.size(),
            json.u_values.join(", "),
            json.via_p_d.join(", "),
            json.m_d,
            json.agree
        ))?;
    }
    Ok(report.passes())
}

#[derive(Serialize)]
struct DeuringJson {
    q: u64,
    i: usize,
    p_i: String,
    degree_s: usize,
    #[serde(rename = "L")]
    l: Option<String>,
    reduced: Option<String>,
    roots: Option<Vec<String>>,
}

fn deuring(a: DeuringArgs) -> Outcome {
    let base = base_field(a.q)?;
    let prime = a.l.as_deref().map(|s| Prime::parse(&base, s)).transpose()?;
    let i = a.i.or(prime.as_ref().map(Prime::degree)).unwrap_or(2);
    let family = DeuringFamily::new(&base);
    let p = family.p_exact(i as i64)?;
    let mut out = DeuringJson {
        q: a.q,
        i,
        p_i: p.to_string(),
        degree_s: p.degree_s(),
        l: None,
        reduced: None,
        roots: None,
    };
    if let Some(prime) = &prime {
        let reduced = family.p_mod(prime, i)?;
        let k = prime.quadratic();
        let roots = distinct_roots(&reduced, k)?;
        out.l = Some(prime.to_string());
        out.reduced = Some(reduced.to_string());
        out.roots = Some(
            roots
                .iter()
                .map(|r| {
                    let v = format_elem(k, r.value);
                    if r.simple {
                        v
                    } else {
                        format!("{v} (multiple)")
                    }
                })
                .collect(),
        );
    }
    if a.output.json {
        a.output.emit_json(&out)?;
    } else {
        let mut text = format!("p_{i} = {}\ndeg_s = {}\n", out.p_i, out.degree_s);
        if let (Some(l), Some(r), Some(roots)) = (&out.l, &out.reduced, &out.roots) {
            text.push_str(&format!(
                "p_{i} mod {l} = {r}\nroots in F_{}: {{{}}}\n",
                prime.as_ref().unwrap().quadratic().size(),
                roots.join(", ")
            ));
        }
        a.output.emit(&text)?;
    }
    Ok(true)
}

fn tower(a: TowerArgs) -> Outcome {
    let kind =
        TowerKind::from_name(&a.kind).ok_or_else(|| anyhow!("unknown tower kind {:?}", a.kind))?;
    if a.levels == 0 {
        bail!("--levels must be at least 1");
    }
    let mut t = make_tower(
        kind,
        a.q,
        a.l.as_deref(),
        a.gamma.as_deref(),
        a.gamma_ext,
        a.level.as_deref(),
    )?;
    if let Some(limit) = a.max_work {
        t = t.with_max_work(limit);
    }
    let levels: Vec<usize> = (1..=a.levels).collect();
    let reports = dv_reports(&t, &levels)?;
    if a.output.json {
        a.output.emit_json(&reports)?;
    } else if a.csv {
        a.output.emit(&reports_to_csv(&reports)?)?;
    } else {
        let mut text = format!(
            "tower {} over F_{}: {}\n",
            t.kind(),
            t.field().size(),
            t.relation()
        );
        if let Some(r) = reports.first() {
            text.push_str(&format!(
                "splitting set ({}): {} points\n",
                r.split_rule, r.split_size
            ));
        }
        text.push_str("level  N_lb  genus  ratio  dv_bound  complete\n");
        for r in &reports {
            let ratio = r.ratio.map_or("-".to_string(), |x| format!("{x:.4}"));
            let genus = match (&r.genus, &r.genus_anomaly) {
                (Some(g), Some(note)) => format!("{g} ({note})"),
                (Some(g), None) => g.clone(),
                (None, _) => "-".into(),
            };
            text.push_str(&format!(
                "{}  {}  {}  {}  {}  {}\n",
                r.level, r.n_lb, genus, ratio, r.dv_bound, r.complete
            ));
        }
        a.output.emit(&text)?;
    }
    Ok(true)
}

#[derive(Serialize)]
struct ModularJson {
    level: String,
    phi: String,
    j0: String,
    j1: String,
    f_p: String,
    #[serde(rename = "L")]
    l: Option<String>,
    reduced: Option<String>,
}

fn modular(a: ModularArgs) -> Outcome {
    if a.q != 2 {
        bail!("modular data is embedded only for q = 2");
    }
    let data = ModularData::load(&a.level)?;
    let reduced = match &a.l {
        Some(src) => {
            let l = MPoly::parse(data.ctx(), src)?;
            Some((l.to_string(), data.reduce_example(&l)?.to_string()))
        }
        None => None,
    };
    let out = ModularJson {
        level: data.level().to_string(),
        phi: data.phi().to_string(),
        j0: data.j0().to_string(),
        j1: data.j1().to_string(),
        f_p: data.f_p()?.to_string(),
        l: reduced.as_ref().map(|r| r.0.clone()),
        reduced: reduced.map(|r| r.1),
    };
    if a.output.json {
        a.output.emit_json(&out)?;
    } else {
        let mut text = format!(
            "level {}\nPhi = {}\nj0 = {}\nj1 = {}\nf_P = {}\n",
            out.level, out.phi, out.j0, out.j1, out.f_p
        );
        if let (Some(l), Some(r)) = (&out.l, &out.reduced) {
            text.push_str(&format!("f_P mod {l} = {r}\n"));
        }
        a.output.emit(&text)?;
    }
    Ok(true)
}
