use std::f64::consts::PI;
use std::fs;
use std::io;
use std::path::PathBuf;

use epr_frames::clifford::Vector3;
use epr_frames::frames::{render_csv, render_jsonl, truth_table, Realization};
use epr_frames::lab::{chsh, estimate, estimate_onepage, Estimator, TrialPlan};
use serde_json::Value;

use crate::args::{Cli, Command, Format};
use crate::render;

pub const TRUTH_TABLE_FILE: &str = "truth_table.jsonl";

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum Failure {
    GoldenMismatch(String),
    Usage(String),
    NoBaseline(PathBuf),
    Model(epr_frames::Error),
    Io(String, io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::GoldenMismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::NoBaseline(_) => 3,
            Failure::Model(_) => 4,
            Failure::Io(..) => 5,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::GoldenMismatch(m) => format!("truth table differs from golden file: {m}"),
            Failure::Usage(m) => format!("usage: {m}"),
            Failure::NoBaseline(p) => format!("no baseline: golden file {} not found", p.display()),
            Failure::Model(e) => format!("computation failed: {e}"),
            Failure::Io(what, e) => format!("{what}: {e}"),
        }
    }
}

impl From<epr_frames::Error> for Failure {
    fn from(e: epr_frames::Error) -> Self {
        Failure::Model(e)
    }
}

/// A detector: the direction and, when given as one, its plane angle.
#[derive(Debug, Clone, Copy)]
struct Detector {
    theta: Option<f64>,
    dir: Vector3,
}

/// Command output, plus a failure to report after the output is written.
pub struct Outcome {
    pub text: String,
    pub deferred: Option<Failure>,
}

impl Cli {
    fn format(&self) -> Format {
        self.format.unwrap_or(match self.command {
            Command::Scan { .. } => Format::Csv,
            _ => Format::Json,
        })
    }

    fn plan(&self) -> TrialPlan {
        TrialPlan::new(self.seed, self.n)
    }

    fn detectors(&self, counts: &[usize]) -> Result<Vec<Detector>, Failure> {
        let given = if self.vectors.is_empty() { self.angles.len() } else { self.vectors.len() };
        if !counts.contains(&given) {
            let expected: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
            return Err(Failure::Usage(format!(
                "{} takes {} detector angles or vectors, got {given}",
                self.command.name(),
                expected.join(" or ")
            )));
        }
        if self.vectors.is_empty() {
            self.angles.iter().map(|&t| Ok(Detector { theta: Some(t), dir: Vector3::in_plane(t)? })).collect()
        } else {
            self.vectors
                .iter()
                .map(|v| {
                    let dir = Vector3::new(v[0], v[1], v[2]).map_err(|e| Failure::Usage(e.to_string()))?;
                    Ok(Detector { theta: None, dir })
                })
                .collect()
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Check => check(cli),
        Command::Simulate => simulate(cli).map(done),
        Command::Scan { steps } => scan(cli, steps).map(done),
        Command::Chsh => run_chsh(cli).map(done),
    }
}

fn done(text: String) -> Outcome {
    Outcome { text, deferred: None }
}

fn check(cli: &Cli) -> Result<Outcome, Failure> {
    let table = truth_table();
    let jsonl = render_jsonl(&table);
    let text = match cli.format() {
        Format::Json => jsonl.clone(),
        Format::Csv => render_csv(&table),
    };
    let path = cli.golden.join(TRUTH_TABLE_FILE);
    let deferred = match fs::read_to_string(&path) {
        Err(e) if e.kind() == io::ErrorKind::NotFound => Some(Failure::NoBaseline(path)),
        Err(e) => Some(Failure::Io(format!("reading {}", path.display()), e)),
        Ok(golden) if golden == jsonl => None,
        Ok(golden) => Some(Failure::GoldenMismatch(first_difference(&golden, &jsonl))),
    };
    Ok(Outcome { text, deferred })
}

fn first_difference(golden: &str, ours: &str) -> String {
    let mut g = golden.lines();
    let mut o = ours.lines();
    for line in 1.. {
        match (g.next(), o.next()) {
            (None, None) => break,
            (a, b) if a == b => continue,
            (a, b) => {
                return format!("line {line}: golden {:?}, computed {:?}", a.unwrap_or("<eof>"), b.unwrap_or("<eof>"));
            }
        }
    }
    "trailing bytes differ".into()
}

fn simulate(cli: &Cli) -> Result<String, Failure> {
    let d = cli.detectors(&[2])?;
    let (a, b) = (&d[0], &d[1]);
    let estimator = Estimator::from(cli.estimator);
    let realization = Realization::from(cli.realization);
    let plan = cli.plan();
    let (report, onepage) = if estimator == Estimator::OnePage {
        let o = estimate_onepage(&a.dir, &b.dir, &plan, realization)?;
        (o.report, Some(o))
    } else {
        (estimate(estimator, &a.dir, &b.dir, &plan, realization)?, None)
    };
    Ok(match cli.format() {
        Format::Json => render::pretty(&render::report_json(&report, onepage.as_ref())),
        Format::Csv => format!("{}\n{}\n", render::CURVE_HEADER, render::curve_row(a.theta, b.theta, &report)),
    })
}

fn scan(cli: &Cli, steps: u32) -> Result<String, Failure> {
    let theta_a = match cli.detectors(&[0, 1])?.first() {
        Some(d) => *d,
        None => Detector { theta: Some(0.0), dir: Vector3::X },
    };
    if theta_a.theta.is_none() {
        return Err(Failure::Usage("scan sweeps plane angles; give θ_a with --angles".into()));
    }
    let estimator = Estimator::from(cli.estimator);
    let realization = Realization::from(cli.realization);
    let plan = cli.plan();
    let mut rows = Vec::with_capacity(steps as usize + 1);
    for k in 0..=steps {
        let theta_b = if k == steps { PI } else { f64::from(k) * PI / f64::from(steps) };
        let b = Vector3::in_plane(theta_b)?;
        rows.push((theta_b, estimate(estimator, &theta_a.dir, &b, &plan, realization)?));
    }
    Ok(match cli.format() {
        Format::Csv => {
            let mut out = format!("{}\n", render::CURVE_HEADER);
            for (tb, r) in &rows {
                out.push_str(&render::curve_row(theta_a.theta, Some(*tb), r));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let points: Vec<Value> = rows
                .iter()
                .map(|(tb, r)| {
                    let mut v = render::report_json(r, None);
                    v["theta_a"] = theta_a.theta.into();
                    v["theta_b"] = (*tb).into();
                    v
                })
                .collect();
            render::pretty(&Value::Array(points))
        }
    })
}

fn run_chsh(cli: &Cli) -> Result<String, Failure> {
    let d = cli.detectors(&[4])?;
    let report =
        chsh(&d[0].dir, &d[1].dir, &d[2].dir, &d[3].dir, &cli.plan(), cli.estimator.into(), cli.realization.into())?;
    Ok(match cli.format() {
        Format::Json => render::pretty(&serde_json::to_value(report).expect("report serializes")),
        Format::Csv => render::chsh_csv([d[0].theta, d[1].theta, d[2].theta, d[3].theta], &report),
    })
}
