use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nilring::corpus::{CorpusFile, RingSpec};
use nilring::ideal::{Ideal, Sidedness};
use nilring::limits::{Limits, MAX_ORDER_ENV};
use nilring::localization::{localize_ideal, localize_ring, multiplicative_closure};
use nilring::predicates::{
    classify, is_nil_essential, is_reduced, nilradical, socle, ClassificationFlags,
};
use nilring::registry::{
    hunt_counterexample, render_hunt_text, render_report_text, render_suite_text, run_check,
    run_suite, CheckId, CheckKind, CheckOptions, HuntClaim, RingContext, SkipReason, Status,
    SuiteOptions,
};
use nilring::{enumerate_ideals, Error, FiniteRing};

const RING_HELP: &str =
    "Ring specs: cyclic:N, ut3:M, product:A+B+..., quotient:SPEC/g1,g2,..., tables:PATH";

/// Finite rings, ideal lattices and nil-essential ideals.
///
/// Exit codes: 0 success, 1 a theorem check was refuted, 2 usage or parse
/// error, 3 an enumeration cap was exceeded.
#[derive(Parser)]
#[command(name = "nilring", version, after_help = RING_HELP)]
struct Cli {
    /// Largest ring order accepted by constructors and enumerations.
    #[arg(long, global = true, env = MAX_ORDER_ENV)]
    max_order: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Order, units, idempotents, radicals, socle and semisimplicity.
    Describe {
        #[arg(help = RING_HELP)]
        ring: RingSpec,
    },
    /// Every ideal of the ring with its classification.
    Ideals {
        ring: RingSpec,
        #[arg(long)]
        sidedness: Option<Sidedness>,
    },
    /// Run one registered check on one ring.
    Check {
        check: CheckId,
        ring: RingSpec,
        #[arg(long)]
        sidedness: Option<Sidedness>,
        #[arg(long)]
        timings: bool,
        /// Include non-unital ring endomorphisms in endomorphism checks.
        #[arg(long)]
        non_unital: bool,
    },
    /// Run the registry over a corpus (the bundled corpus by default).
    Suite {
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Parallel width; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Comma-separated check ids; overrides the corpus selection.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckId>,
        /// Include wall-clock times, which makes reports nondeterministic.
        #[arg(long)]
        timings: bool,
        /// Include non-unital ring endomorphisms in endomorphism checks.
        #[arg(long)]
        non_unital: bool,
    },
    /// Search a corpus for a counterexample to a claim (a check id or P206-converse).
    ///
    /// Exits 0 when the search completes, 1 when it refutes a theorem check.
    Hunt {
        claim: HuntClaim,
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Maximum number of instances evaluated.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Localize a commutative ring at the multiplicative set generated by `--invert`.
    Localize {
        ring: RingSpec,
        #[arg(long, value_delimiter = ',')]
        invert: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut limits = Limits::from_env();
    if let Some(n) = cli.max_order {
        limits = limits.with_max_order(n);
    }
    match run(&cli, &limits) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap() { 3 } else { 2 })
        }
    }
}

fn emit<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
) -> Result<(), Error> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Text => print!("{}", text()),
    }
    Ok(())
}

fn build(spec: &RingSpec, limits: &Limits) -> Result<Arc<FiniteRing>, Error> {
    spec.build(limits, None)
}

fn load_corpus(path: Option<&Path>) -> Result<(CorpusFile, Option<PathBuf>), Error> {
    match path {
        Some(p) => Ok((CorpusFile::load(p)?, p.parent().map(|d| d.to_path_buf()))),
        None => Ok((CorpusFile::default_corpus(), None)),
    }
}

fn run(cli: &Cli, limits: &Limits) -> Result<u8, Error> {
    match &cli.command {
        Command::Describe { ring } => describe(cli.format, ring, limits),
        Command::Ideals { ring, sidedness } => ideals(cli.format, ring, *sidedness, limits),
        Command::Check {
            check,
            ring,
            sidedness,
            timings,
            non_unital,
        } => {
            let ctx = RingContext::new(ring.to_string(), build(ring, limits)?, *limits);
            let options = CheckOptions {
                sidedness: *sidedness,
                timings: *timings,
                non_unital: *non_unital,
            };
            let report = run_check(&ctx, *check, &options);
            emit(cli.format, &report, || render_report_text(&report))?;
            Ok(match report.status {
                Status::Refuted => 1,
                Status::Skipped if report.skip_reason == Some(SkipReason::Cap) => 3,
                _ => 0,
            })
        }
        Command::Suite {
            corpus,
            jobs,
            checks,
            timings,
            non_unital,
        } => {
            let (corpus, base_dir) = load_corpus(corpus.as_deref())?;
            let selection = if checks.is_empty() {
                corpus.checks.clone().unwrap_or_default()
            } else {
                checks.clone()
            };
            let limits = corpus.limits(limits);
            let options = SuiteOptions {
                jobs: *jobs,
                check: CheckOptions {
                    sidedness: None,
                    timings: *timings,
                    non_unital: *non_unital,
                },
                base_dir,
            };
            let suite = run_suite(&corpus.rings, &selection, &limits, &options)?;
            emit(cli.format, &suite, || render_suite_text(&suite))?;
            Ok(if suite.summary.success() { 0 } else { 1 })
        }
        Command::Hunt {
            claim,
            corpus,
            budget,
        } => {
            let (corpus, base_dir) = load_corpus(corpus.as_deref())?;
            let limits = corpus.limits(limits);
            let result =
                hunt_counterexample(*claim, &corpus.rings, *budget, &limits, base_dir.as_deref())?;
            emit(cli.format, &result, || render_hunt_text(&result))?;
            let refutes_theorem = result.witness.is_some()
                && matches!(claim, HuntClaim::Check(c) if c.kind() == CheckKind::Theorem);
            Ok(if refutes_theorem { 1 } else { 0 })
        }
        Command::Localize { ring, invert } => localize(cli.format, ring, invert, limits),
    }
}

#[derive(Serialize)]
struct IdealView {
    label: String,
    generators: Vec<String>,
    members: Vec<String>,
}

impl From<&Ideal> for IdealView {
    fn from(i: &Ideal) -> Self {
        IdealView {
            label: i.label(),
            generators: i.generator_names(),
            members: i.member_names(),
        }
    }
}

impl IdealView {
    fn text(&self) -> String {
        format!("{} = {{{}}}", self.label, self.members.join(", "))
    }
}

#[derive(Serialize)]
struct Description {
    ring: String,
    order: usize,
    zero_ring: bool,
    commutative: bool,
    units: Vec<String>,
    idempotents: Vec<String>,
    reduced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    nilradical: Option<IdealView>,
    jacobson_radical: IdealView,
    socle_sidedness: Sidedness,
    socle: IdealView,
    semisimple: bool,
}

fn describe(format: Format, spec: &RingSpec, limits: &Limits) -> Result<u8, Error> {
    let ring = build(spec, limits)?;
    let ctx = RingContext::new(spec.to_string(), ring.clone(), *limits);
    let names = |xs: Vec<usize>| xs.into_iter().map(|x| ring.name(x).to_string()).collect();
    let j = ctx.jacobson()?;
    let side = ctx.default_sidedness();
    let d = Description {
        ring: spec.to_string(),
        order: ring.order(),
        zero_ring: ring.is_zero_ring(),
        commutative: ring.is_commutative(),
        units: names(ring.units()),
        idempotents: names(ring.idempotents()),
        reduced: is_reduced(&ring),
        nilradical: if ring.is_commutative() {
            Some((&nilradical(&ring)?).into())
        } else {
            None
        },
        semisimple: j.is_zero(),
        jacobson_radical: (&j).into(),
        socle_sidedness: side,
        socle: (&socle(&*ctx.lattice(side)?)?).into(),
    };
    emit(format, &d, || {
        let mut out = format!("ring         {}\n", d.ring);
        out += &format!("order        {}\n", d.order);
        out += &format!("zero ring    {}\n", d.zero_ring);
        out += &format!("commutative  {}\n", d.commutative);
        out += &format!("units        {{{}}}\n", d.units.join(", "));
        out += &format!("idempotents  {{{}}}\n", d.idempotents.join(", "));
        out += &format!("reduced      {}\n", d.reduced);
        if let Some(n) = &d.nilradical {
            out += &format!("nilradical   {}\n", n.text());
        }
        out += &format!("jacobson     {}\n", d.jacobson_radical.text());
        out += &format!("socle        {} ({})\n", d.socle.text(), d.socle_sidedness);
        out += &format!("semisimple   {}\n", d.semisimple);
        out
    })?;
    Ok(0)
}

#[derive(Serialize)]
struct IdealRow {
    index: usize,
    #[serde(flatten)]
    ideal: IdealView,
    #[serde(flatten)]
    flags: ClassificationFlags,
}

#[derive(Serialize)]
struct IdealsReport {
    ring: String,
    sidedness: Sidedness,
    count: usize,
    ideals: Vec<IdealRow>,
}

fn ideals(
    format: Format,
    spec: &RingSpec,
    side: Option<Sidedness>,
    limits: &Limits,
) -> Result<u8, Error> {
    let ring = build(spec, limits)?;
    let side = side.unwrap_or(if ring.is_commutative() {
        Sidedness::TwoSided
    } else {
        Sidedness::Left
    });
    let lattice = enumerate_ideals(&ring, side, limits)?;
    let flags = classify(&lattice);
    let report = IdealsReport {
        ring: spec.to_string(),
        sidedness: side,
        count: lattice.len(),
        ideals: lattice
            .iter()
            .zip(flags)
            .enumerate()
            .map(|(index, (i, flags))| IdealRow {
                index,
                ideal: i.into(),
                flags,
            })
            .collect(),
    };
    emit(format, &report, || {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = format!(
            "{} {} ideals of {}\n",
            report.count, report.sidedness, report.ring
        );
        out += "  #  size  nilpotent  essential  nil-essential  minimal  maximal  ideal\n";
        for row in &report.ideals {
            out += &format!(
                "{:>3}  {:>4}  {:<9}  {:<9}  {:<13}  {:<7}  {:<7}  {}\n",
                row.index,
                row.ideal.members.len(),
                yn(row.flags.nilpotent),
                yn(row.flags.essential),
                yn(row.flags.nil_essential),
                yn(row.flags.minimal),
                yn(row.flags.maximal),
                row.ideal.text()
            );
        }
        out
    })?;
    Ok(0)
}

#[derive(Serialize)]
struct LocalizedRow {
    ideal: IdealView,
    localized: IdealView,
    nil_essential: bool,
    localized_nil_essential: bool,
}

#[derive(Serialize)]
struct LocalizationReport {
    ring: String,
    multiplicative_set: Vec<String>,
    kernel: Vec<String>,
    kernel_generators: Vec<String>,
    order: usize,
    canonical: Vec<(String, String)>,
    ideals: Vec<LocalizedRow>,
}

fn localize(
    format: Format,
    spec: &RingSpec,
    invert: &[String],
    limits: &Limits,
) -> Result<u8, Error> {
    let ring = build(spec, limits)?;
    let seed = invert
        .iter()
        .map(|x| ring.parse_element(x))
        .collect::<Result<Vec<_>, _>>()?;
    let s = multiplicative_closure(&ring, &seed)?;
    let l = localize_ring(&s)?;
    let base_lattice = enumerate_ideals(&ring, Sidedness::TwoSided, limits)?;
    let local_lattice = enumerate_ideals(l.result(), Sidedness::TwoSided, limits)?;
    let mut rows = Vec::new();
    for i in base_lattice.iter() {
        let li = localize_ideal(&l, i)?;
        rows.push(LocalizedRow {
            ideal: i.into(),
            nil_essential: is_nil_essential(&base_lattice, i, None)?.holds,
            localized_nil_essential: is_nil_essential(&local_lattice, &li, None)?.holds,
            localized: (&li).into(),
        });
    }
    let name = |x: usize| ring.name(x).to_string();
    let report = LocalizationReport {
        ring: spec.to_string(),
        multiplicative_set: s.member_names(),
        kernel: l.kernel_set().ones().map(name).collect(),
        kernel_generators: l.kernel_generators().into_iter().map(name).collect(),
        order: l.result().order(),
        canonical: ring
            .elements()
            .map(|x| (name(x), l.result().name(l.canonical().apply(x)).to_string()))
            .collect(),
        ideals: rows,
    };
    emit(format, &report, || {
        let mut out = format!("ring       {}\n", report.ring);
        out += &format!("S          {{{}}}\n", report.multiplicative_set.join(", "));
        out += &format!("kernel     {{{}}}\n", report.kernel.join(", "));
        out += &format!("order      {}\n", report.order);
        let map: Vec<String> = report
            .canonical
            .iter()
            .map(|(x, y)| format!("{x}↦{y}"))
            .collect();
        out += &format!("canonical  {}\n", map.join(" "));
        out += "ideal  nil-essential  S⁻¹I nil-essential  S⁻¹I\n";
        for row in &report.ideals {
            out += &format!(
                "{:<6} {:<14} {:<19} {}\n",
                row.ideal.label,
                row.nil_essential,
                row.localized_nil_essential,
                row.localized.text()
            );
        }
        out
    })?;
    Ok(0)
}
