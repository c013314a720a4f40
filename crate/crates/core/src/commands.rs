//! The four CLI commands as library functions returning run reports.

use crate::check::{run_suite, CheckOptions, Suite};
use crate::dimension::{hdim_leq, heitmann_lattice, jdim_leq, kdim_leq, DimOptions, DimensionVerdict, Outcome, Strategy};
use crate::error::{Error, Result};
use crate::fault::{with_fault, Fault};
use crate::lattice::{Element, Lattice};
use crate::report::{RunReport, SpectrumEntry, Status, VerdictEntry};
use crate::ring::{hdim_ring_leq, kdim_ring_leq, zar_lattice_adapter, AnyRing, RingBudget, RingOracle, RingStrategy, MAX_POOL};
use crate::spectra::{jspec_points, maximal_ideals, minimal_primes, prime_ideals, spectrum_dot, spectrum_json, PrimePoint};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimKind {
    Kdim,
    Jdim,
    Hdim,
}

impl std::str::FromStr for DimKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kdim" => Ok(DimKind::Kdim),
            "jdim" => Ok(DimKind::Jdim),
            "hdim" => Ok(DimKind::Hdim),
            _ => Err(Error::Invalid(format!("unknown dimension kind `{s}`"))),
        }
    }
}

impl DimKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DimKind::Kdim => "kdim",
            DimKind::Jdim => "jdim",
            DimKind::Hdim => "hdim",
        }
    }
}

fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Global2c => "global",
        Strategy::Upper2a => "upper",
        Strategy::Lower2b => "lower",
    }
}

fn ring_strategy_name(s: RingStrategy) -> &'static str {
    match s {
        RingStrategy::Witness => "witness",
        RingStrategy::Upper => "upper",
        RingStrategy::Lower => "lower",
    }
}

fn finish(mut report: RunReport, start: Instant, body: Result<()>) -> RunReport {
    if let Err(e) = body {
        report.status = Status::Error;
        report.error = Some(e.to_string());
        report.verdicts.clear();
        report.spectrum = None;
    }
    report.timings_ms.insert("total".into(), start.elapsed().as_millis() as u64);
    report
}

fn load_lattice(file: &PathBuf, max_elements: usize) -> Result<Lattice> {
    Ok(Lattice::from_file(file)?.with_ceiling(max_elements))
}

#[derive(Clone, Debug)]
pub struct LatDimArgs {
    pub file: PathBuf,
    pub kind: DimKind,
    pub leq: i64,
    pub witness: bool,
    pub strategy: Strategy,
    pub max_elements: usize,
}

pub fn cmd_lat_dim(command: Vec<String>, a: &LatDimArgs) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(command);
    let body = (|| {
        let t = load_lattice(&a.file, a.max_elements)?;
        let opts = DimOptions { strategy: a.strategy, witnesses: a.witness, system: None };
        let (v, shown_on) = match a.kind {
            DimKind::Kdim => (kdim_leq(&t, a.leq, &opts)?, t.clone()),
            DimKind::Jdim => (jdim_leq(&t, a.leq, &opts)?, heitmann_lattice(&t)?.0),
            DimKind::Hdim => (hdim_leq(&t, a.leq, &opts)?, t.clone()),
        };
        let strategy = if a.kind == DimKind::Hdim { "heitmann-boundary" } else { strategy_name(a.strategy) };
        let target = a.file.display().to_string();
        report.verdicts.push(VerdictEntry::from_verdict(&target, a.kind.as_str(), strategy, &v, |e: &Element| shown_on.display(e)));
        report.status = v.outcome.into();
        Ok(())
    })();
    finish(report, start, body)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecWhat {
    /// All prime ideals.
    Spec,
    Max,
    Min,
    /// Primes that are intersections of maximal ideals.
    JPoints,
    /// The spectrum of the Heitmann lattice.
    Heitmann,
}

impl std::str::FromStr for SpecWhat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spec" => Ok(SpecWhat::Spec),
            "max" => Ok(SpecWhat::Max),
            "min" => Ok(SpecWhat::Min),
            "jspec" => Ok(SpecWhat::JPoints),
            "Jspec" => Ok(SpecWhat::Heitmann),
            _ => Err(Error::Invalid(format!("unknown spectrum `{s}` (spec, max, min, jspec, Jspec)"))),
        }
    }
}

impl SpecWhat {
    pub fn as_str(self) -> &'static str {
        match self {
            SpecWhat::Spec => "spec",
            SpecWhat::Max => "max",
            SpecWhat::Min => "min",
            SpecWhat::JPoints => "jspec",
            SpecWhat::Heitmann => "Jspec",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpecArgs {
    pub file: PathBuf,
    pub what: SpecWhat,
    pub max_elements: usize,
}

/// The requested points, on the lattice they are prime ideals of.
pub fn spectrum_points(t: &Lattice, what: SpecWhat) -> Result<(Lattice, Vec<PrimePoint>)> {
    Ok(match what {
        SpecWhat::Spec => (t.clone(), prime_ideals(t)?.points),
        SpecWhat::Max => (t.clone(), maximal_ideals(t)?),
        SpecWhat::Min => (t.clone(), minimal_primes(t)?),
        SpecWhat::JPoints => (t.clone(), jspec_points(t)?),
        SpecWhat::Heitmann => {
            let he = heitmann_lattice(t)?.0;
            let pts = prime_ideals(&he)?.points;
            (he, pts)
        }
    })
}

/// The report, plus the spectrum in DOT.
pub fn cmd_spec(command: Vec<String>, a: &SpecArgs) -> (RunReport, Option<String>) {
    let start = Instant::now();
    let mut report = RunReport::new(command);
    let mut dot = None;
    let body = (|| {
        let t = load_lattice(&a.file, a.max_elements)?;
        let (host, pts) = spectrum_points(&t, a.what)?;
        report.spectrum = Some(SpectrumEntry { target: a.file.display().to_string(), what: a.what.as_str().into(), spectrum: spectrum_json(&host, &pts)? });
        dot = Some(spectrum_dot(&host, &pts)?);
        Ok(())
    })();
    let report = finish(report, start, body);
    let dot = if report.status == Status::Error { None } else { dot };
    (report, dot)
}

#[derive(Clone, Debug)]
pub struct RingDimArgs {
    pub ring: String,
    pub kind: DimKind,
    pub leq: i64,
    pub strategy: RingStrategy,
    pub budget: RingBudget,
}

pub fn cmd_ring_dim(command: Vec<String>, a: &RingDimArgs) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(command);
    let body = (|| {
        let entry = match AnyRing::parse(&a.ring)? {
            AnyRing::Int(r) => ring_verdict(&r, a)?,
            AnyRing::Poly(r) => ring_verdict(&r, a)?,
            AnyRing::Table(r) => ring_verdict(&r, a)?,
        };
        report.status = match entry.outcome.as_str() {
            "holds" => Status::Holds,
            "fails" => Status::Fails,
            _ => Status::Unknown,
        };
        report.verdicts.push(entry);
        Ok(())
    })();
    finish(report, start, body)
}

/// Verdict for one ring, as reported by `ring-dim`.
pub fn ring_verdict<R: RingOracle>(r: &R, a: &RingDimArgs) -> Result<VerdictEntry> {
    let target = a.ring.as_str();
    let show = |x: &R::El| r.show(x);
    Ok(match a.kind {
        DimKind::Kdim => {
            let v = kdim_ring_leq(r, a.leq, a.strategy, &a.budget)?;
            VerdictEntry::from_verdict(target, "kdim", ring_strategy_name(a.strategy), &v, show)
        }
        DimKind::Hdim => {
            let v = hdim_ring_leq(r, a.leq, &a.budget)?;
            VerdictEntry::from_verdict(target, "hdim", "heitmann-boundary", &v, show)
        }
        DimKind::Jdim => match radical_representatives(r)? {
            Some(pool) => {
                let ad = zar_lattice_adapter(r, &pool)?;
                let opts = DimOptions { witnesses: a.budget.witnesses, ..DimOptions::default() };
                let he = heitmann_lattice(ad.lattice())?.0;
                let v = jdim_leq(ad.lattice(), a.leq, &opts)?;
                VerdictEntry::from_verdict(target, "jdim", "zariski-lattice", &v, |e: &Element| he.display(e))
            }
            None => {
                let mut v: DimensionVerdict<R::El> = DimensionVerdict::new(a.leq, Outcome::Unknown).with_note("jdim of a ring needs a finite carrier");
                v.exhaustive = false;
                VerdictEntry::from_verdict(target, "jdim", "zariski-lattice", &v, show)
            }
        },
    })
}

/// One element per radical class `D(x)`, or `None` for infinite carriers.
pub fn radical_representatives<R: RingOracle>(r: &R) -> Result<Option<Vec<R::El>>> {
    let Some(all) = r.enumerate() else {
        return Ok(None);
    };
    let mut reps: Vec<R::El> = Vec::new();
    for x in all {
        let same = |y: &R::El| r.radical_member(&x, std::slice::from_ref(y)) && r.radical_member(y, std::slice::from_ref(&x));
        if !reps.iter().any(same) {
            reps.push(x);
        }
    }
    if reps.len() > MAX_POOL {
        return Err(Error::Ring(format!("{} has {} radical classes, more than {MAX_POOL}", r.describe(), reps.len())));
    }
    Ok(Some(reps))
}

#[derive(Clone, Debug)]
pub struct CheckArgs {
    pub suites: Vec<Suite>,
    pub options: CheckOptions,
    pub fault: Option<Fault>,
}

pub fn cmd_check(command: Vec<String>, a: &CheckArgs) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(command);
    let suites = if a.suites.is_empty() { Suite::ALL.to_vec() } else { a.suites.clone() };
    for s in suites {
        let t = Instant::now();
        let outcome = match a.fault {
            Some(f) => with_fault(f, || run_suite(s, &a.options)),
            None => run_suite(s, &a.options),
        };
        report.timings_ms.insert(s.to_string(), t.elapsed().as_millis() as u64);
        report.suites.push(outcome);
    }
    report.status = if report.suites.iter().all(|o| o.ok()) { Status::Pass } else { Status::Fail };
    finish(report, start, Ok(()))
}
