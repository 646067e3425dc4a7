//! `monofact`: command-line front end for the factorization workbench.

mod render;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use monofact::corpus::{
    corpus_scan, enumerate_monoids, full_corpus, up_to_isomorphism, CorpusMember,
};
use monofact::factorization::{
    classify_arithmetic, enumerate_factorizations, factorial_battery, factorization_class,
    is_powerful, is_prime, minimal_catalog, FactorizationClass, LayerSequence, LengthSet,
    PrimeCheck,
};
use monofact::integers::fta_report;
use monofact::monoid::{
    instance, property_battery, read_cayley_json, to_cayley_json, ElementId, FiniteMonoid,
    InstanceKind,
};
use monofact::power::{
    atomicity_criterion, base_criterion, build_reduced_power_monoid, kappa_report,
};
use monofact::presentation::{
    adian_check, bounded_length_set, congruent_bounded, conserved_functionals, example_4_10,
    example_4_8, example_5_4, normal_form_4_10, normal_form_4_10_closed, parse_presentation, psi,
    Congruence, Family, Presentation,
};
use monofact::words::AtomWord;

#[derive(Parser, Debug)]
#[command(
    name = "monofact",
    version,
    about = "Factorization theory of monoids: atoms, lengths, minimal factorizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Word length cap for enumerations and searches.
    #[arg(long, global = true, default_value_t = 12)]
    max_len: usize,
    /// Node or word budget for searches.
    #[arg(long, global = true, default_value_t = 200_000)]
    budget: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Where a finite monoid comes from. Exactly one must be given.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Cayley table JSON file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Cyclic group of order N.
    #[arg(long)]
    cyclic: Option<usize>,
    /// Identity plus K nilpotent generators with absorbing products.
    #[arg(long)]
    null: Option<usize>,
    /// Multiplicative monoid of N x N matrices over Z/M.
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    gl: Option<Vec<usize>>,
    /// Any built-in instance, e.g. `full_transformation(3)`.
    #[arg(long)]
    instance: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Property battery, classifiers, minimal catalog and kappa.
    Analyze {
        #[command(flatten)]
        source: Source,
    },
    /// Factorizations, lengths and prime tests of one element.
    Factorize {
        /// Element name as it appears in the table.
        element: String,
        #[command(flatten)]
        source: Source,
    },
    /// Reduced power monoid of a base monoid.
    Powerset {
        #[command(flatten)]
        source: Source,
    },
    /// Finitely presented monoids.
    Present(PresentArgs),
    /// Unique factorization in the positive integers up to a bound.
    Ints {
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
        #[arg(long, default_value_t = 100)]
        prime_bound: usize,
    },
    /// Structural and arithmetic scan of the built-in corpus.
    Corpus {
        /// Also include every monoid of order up to this (at most 5).
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=5))]
        max_order: u8,
    },
}

#[derive(Args, Debug)]
struct PresentArgs {
    /// Built-in family.
    #[arg(
        long,
        value_enum,
        conflicts_with = "input",
        required_unless_present = "input"
    )]
    example: Option<Example>,
    /// Presentation text file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Exponent for the `x^n = y x^n y` family.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Number of relations in the four-letter family.
    #[arg(long, default_value_t = 12)]
    kmax: usize,
    #[command(subcommand)]
    action: PresentAction,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Example {
    #[value(name = "4.8")]
    E48,
    #[value(name = "5.4")]
    E54,
    #[value(name = "4.10")]
    E410,
}

#[derive(Subcommand, Debug)]
enum PresentAction {
    /// Left and right graphs, plus conserved letter weightings.
    Adian,
    /// Normal form (four-letter family only).
    Nf { word: String },
    /// Canonical block decomposition (four-letter family only).
    Psi { word: String },
    /// Bounded congruence search.
    Congruent { u: String, v: String },
    /// Lengths of words congruent to the target.
    Lengths { target: String },
    /// Seeded random property checks (four-letter family only).
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Serialize)]
struct Envelope {
    tool: &'static str,
    version: &'static str,
    command: String,
    input: InputInfo,
    config: ConfigInfo,
    result: Value,
}

#[derive(Serialize)]
struct InputInfo {
    source: String,
    sha256: String,
}

#[derive(Serialize)]
struct ConfigInfo {
    max_len: usize,
    budget: usize,
    seed: u64,
}

struct Outcome {
    command: &'static str,
    input: InputInfo,
    result: Value,
    violations: bool,
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn load_monoid(src: &Source) -> Result<(FiniteMonoid, InputInfo)> {
    if let Some(path) = &src.input {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let text = String::from_utf8(bytes.clone()).context("Cayley file is not UTF-8")?;
        let m = read_cayley_json(&text).with_context(|| format!("parsing {}", path.display()))?;
        return Ok((
            m,
            InputInfo {
                source: path.display().to_string(),
                sha256: digest(&bytes),
            },
        ));
    }
    let kind = if let Some(m) = src.cyclic {
        InstanceKind::Cyclic(m)
    } else if let Some(k) = src.null {
        InstanceKind::NullMonoid(k)
    } else if let Some(nm) = &src.gl {
        InstanceKind::Gl { n: nm[0], m: nm[1] }
    } else if let Some(spec) = &src.instance {
        spec.parse()?
    } else {
        bail!("no monoid source given");
    };
    let m = instance(&kind)?;
    let sha256 = digest(to_cayley_json(&m).as_bytes());
    Ok((
        m,
        InputInfo {
            source: kind.to_string(),
            sha256,
        },
    ))
}

fn names_of(h: &FiniteMonoid, xs: impl IntoIterator<Item = ElementId>) -> Vec<String> {
    xs.into_iter().map(|x| h.name(x).to_string()).collect()
}

fn render_atoms(h: &FiniteMonoid, w: &AtomWord) -> String {
    w.render(|a| h.name(a).to_string())
}

#[derive(Serialize)]
struct ClassOut {
    counts: Vec<u32>,
    representative: String,
}

#[derive(Serialize)]
struct ElementBlock {
    element: String,
    lengths: LengthSet,
    class_count: Option<usize>,
    minimal_classes: Vec<ClassOut>,
}

#[derive(Serialize)]
struct PrimeOut {
    element: String,
    prime: bool,
    counterexample: Option<[String; 2]>,
}

fn prime_out(h: &FiniteMonoid, x: ElementId) -> PrimeOut {
    let (prime, counterexample) = match is_prime(h, x) {
        PrimeCheck::Prime => (true, None),
        PrimeCheck::Unit => (false, None),
        PrimeCheck::Counterexample { x: a, y: b } => {
            (false, Some([h.name(a).to_string(), h.name(b).to_string()]))
        }
    };
    PrimeOut {
        element: h.name(x).to_string(),
        prime,
        counterexample,
    }
}

#[derive(Serialize)]
struct PowerfulOut {
    atom: String,
    powerful: bool,
    /// Element reached with two different potentials, when not powerful.
    conflict_at: Option<String>,
}

fn analyze(h: &FiniteMonoid) -> Result<Value> {
    let props = property_battery(h);
    let mut props_out = serde_json::to_value(&props)?;
    props_out["witnesses"] = json!(props
        .witnesses
        .iter()
        .map(|(k, w)| (*k, names_of(h, w.iter().copied())))
        .collect::<BTreeMap<_, _>>());
    let flags = classify_arithmetic(h)?;
    let factorial = factorial_battery(h)?;
    let catalog = minimal_catalog(h)?;
    let layers = LayerSequence::compute(h)?;

    let mut minimal_lengths: Vec<usize> = h
        .elements()
        .flat_map(|x| catalog.minimal_lengths(x))
        .collect();
    minimal_lengths.sort_unstable();
    minimal_lengths.dedup();

    let mut powerful = Vec::new();
    for &a in h.atoms() {
        let check = is_powerful(h, a)?;
        powerful.push(PowerfulOut {
            atom: h.name(a).to_string(),
            powerful: check.powerful,
            conflict_at: check.conflict.map(|c| h.name(c.element).to_string()),
        });
    }
    let witnesses: BTreeMap<&str, String> = flags
        .witnesses
        .iter()
        .map(|(k, &x)| (*k, h.name(x).to_string()))
        .collect();
    let blocks: Vec<ElementBlock> = h
        .elements()
        .map(|x| ElementBlock {
            element: h.name(x).to_string(),
            lengths: layers.length_set(x),
            class_count: flags.class_counts.as_ref().map(|c| c[x.0]),
            minimal_classes: catalog
                .entry(x)
                .classes
                .iter()
                .map(|c| ClassOut {
                    counts: c.counts.clone(),
                    representative: render_atoms(h, &c.representative),
                })
                .collect(),
        })
        .collect();

    Ok(json!({
        "size": h.size(),
        "names": h.names(),
        "units": names_of(h, h.unit_ids()),
        "atoms": names_of(h, h.atoms().iter().copied()),
        "atom_classes": h.atom_classes().iter().map(|c| names_of(h, c.iter().copied())).collect::<Vec<_>>(),
        "properties": props_out,
        "atomic": flags.atomic,
        "bf": flags.bf,
        "ff": flags.ff,
        "hf": flags.hf,
        "arithmetic_witnesses": witnesses,
        "factorial": factorial,
        "kappa": catalog.kappa,
        "minimal_lengths": minimal_lengths,
        "primes": h.non_units().into_iter().map(|x| prime_out(h, x)).collect::<Vec<_>>(),
        "powerful": powerful,
        "elements": blocks,
    }))
}

fn factorize(h: &FiniteMonoid, name: &str, max_len: usize, budget: usize) -> Result<Value> {
    let x = h.element_by_name(name)?;
    let words = enumerate_factorizations(h, x, max_len, budget)?;
    let mut classes: BTreeMap<FactorizationClass, (usize, String)> = BTreeMap::new();
    for w in &words {
        let key = factorization_class(h, w).expect("finite monoid words evaluate");
        classes
            .entry(key)
            .or_insert_with(|| (0, render_atoms(h, w)))
            .0 += 1;
    }
    let catalog = minimal_catalog(h)?;
    let powerful = if h.is_atom(x) {
        Some(is_powerful(h, x)?.powerful)
    } else {
        None
    };
    Ok(json!({
        "element": name,
        "unit": h.is_unit(x),
        "atom": h.is_atom(x),
        "lengths": LayerSequence::compute(h)?.length_set(x),
        "factorizations_up_to_max_len": words.iter().map(|w| render_atoms(h, w)).collect::<Vec<_>>(),
        "classes_up_to_max_len": classes.iter().map(|(k, (n, rep))| json!({
            "counts": k.class_counts,
            "words": n,
            "representative": rep,
        })).collect::<Vec<_>>(),
        "minimal_classes": catalog.entry(x).classes.iter().map(|c| ClassOut {
            counts: c.counts.clone(),
            representative: render_atoms(h, &c.representative),
        }).collect::<Vec<_>>(),
        "prime": prime_out(h, x),
        "powerful": powerful,
    }))
}

fn powerset(base: &FiniteMonoid) -> Result<Value> {
    let built = build_reduced_power_monoid(base)?;
    let criterion = base_criterion(base);
    // errors out when the criterion and direct atomicity disagree
    atomicity_criterion(base)?;
    let flags = classify_arithmetic(&built.monoid)?;
    let kappa = kappa_report(base)?;
    let p = &built.monoid;
    Ok(json!({
        "base_size": base.size(),
        "size": p.size(),
        "criterion": criterion,
        "atomic": flags.atomic,
        "atoms": names_of(p, p.atoms().iter().copied()),
        "kappa": kappa.kappa,
        "bound": kappa.bound,
        "equal": kappa.equal,
    }))
}

fn load_presentation(args: &PresentArgs) -> Result<(Presentation, InputInfo)> {
    let (p, source) = match (args.example, &args.input) {
        (Some(Example::E48), _) => (example_4_8(args.n), format!("example 4.8 n={}", args.n)),
        (Some(Example::E54), _) => (example_5_4(), "example 5.4".to_string()),
        (Some(Example::E410), _) => (
            example_4_10(args.kmax),
            format!("example 4.10 kmax={}", args.kmax),
        ),
        (None, Some(path)) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let p =
                parse_presentation(&text).with_context(|| format!("parsing {}", path.display()))?;
            return Ok((
                p,
                InputInfo {
                    source: path.display().to_string(),
                    sha256: digest(text.as_bytes()),
                },
            ));
        }
        (None, None) => bail!("give --example or --in"),
    };
    let sha256 = digest(p.to_string().as_bytes());
    Ok((p, InputInfo { source, sha256 }))
}

fn require_410(p: &Presentation) -> Result<()> {
    match p.family {
        Family::Example410 { .. } => Ok(()),
        _ => bail!("this action needs the four-letter family (--example 4.10)"),
    }
}

fn present(args: &PresentArgs, cli: &Cli) -> Result<(Value, InputInfo)> {
    let (p, info) = load_presentation(args)?;
    let value = match &args.action {
        PresentAction::Adian => json!({
            "presentation": p.to_string(),
            "adian": adian_check(&p)?,
            "conserved_functionals": conserved_functionals(&p),
        }),
        PresentAction::Nf { word } => {
            require_410(&p)?;
            let w = p.parse_word(word)?;
            let nf = normal_form_4_10(&w)?;
            json!({
                "word": p.render(&w),
                "normal_form": p.render(&nf),
                "closed_form_agrees": normal_form_4_10_closed(&w)? == nf,
            })
        }
        PresentAction::Psi { word } => {
            require_410(&p)?;
            let w = p.parse_word(word)?;
            json!({ "word": p.render(&w), "psi": psi(&w)? })
        }
        PresentAction::Congruent { u, v } => {
            let (wu, wv) = (p.parse_word(u)?, p.parse_word(v)?);
            let outcome = match congruent_bounded(&p, &wu, &wv, cli.budget) {
                Congruence::Equivalent { chain } => json!({
                    "verdict": "equivalent",
                    "chain_length": chain.len() - 1,
                    "chain": chain.iter().map(|w| p.render(w)).collect::<Vec<_>>(),
                }),
                Congruence::Refuted(r) => json!({ "verdict": "refuted", "refutation": r }),
                Congruence::Unknown { expanded } => {
                    json!({ "verdict": "unknown", "expanded": expanded })
                }
            };
            json!({ "u": p.render(&wu), "v": p.render(&wv), "outcome": outcome })
        }
        PresentAction::Lengths { target } => {
            let t = p.parse_word(target)?;
            json!({
                "target": p.render(&t),
                "max_len": cli.max_len,
                "probe": bounded_length_set(&p, &t, cli.max_len, cli.budget)?,
            })
        }
        PresentAction::Verify { samples } => {
            require_410(&p)?;
            let report =
                monofact::presentation::verify_4_10_properties(*samples, cli.max_len, cli.seed);
            json!({ "samples": samples, "failures": report.failures(), "report": report })
        }
    };
    Ok((value, info))
}

fn corpus(max_order: usize) -> Vec<CorpusMember> {
    let mut members = full_corpus();
    for n in 4..=max_order {
        for (i, m) in up_to_isomorphism(&enumerate_monoids(n))
            .into_iter()
            .enumerate()
        {
            members.push(CorpusMember {
                name: format!("order{n}#{i}"),
                monoid: m,
            });
        }
    }
    members
}

fn run(cli: &Cli) -> Result<Outcome> {
    let (command, input, result, violations) = match &cli.command {
        Command::Analyze { source } => {
            let (h, info) = load_monoid(source)?;
            ("analyze", info, analyze(&h)?, false)
        }
        Command::Factorize { element, source } => {
            let (h, info) = load_monoid(source)?;
            (
                "factorize",
                info,
                factorize(&h, element, cli.max_len, cli.budget)?,
                false,
            )
        }
        Command::Powerset { source } => {
            let (h, info) = load_monoid(source)?;
            ("powerset", info, powerset(&h)?, false)
        }
        Command::Present(args) => {
            let (value, info) = present(args, cli)?;
            ("present", info, value, false)
        }
        Command::Ints { bound, prime_bound } => {
            let source = format!("ints bound={bound} prime_bound={prime_bound}");
            let report = fta_report(*bound, *prime_bound)?;
            let info = InputInfo {
                sha256: digest(source.as_bytes()),
                source,
            };
            ("ints", info, serde_json::to_value(report)?, false)
        }
        Command::Corpus { max_order } => {
            let members = corpus(*max_order as usize);
            let listing: String = members.iter().map(|m| to_cayley_json(&m.monoid)).collect();
            let info = InputInfo {
                source: format!("corpus max_order={max_order}"),
                sha256: digest(listing.as_bytes()),
            };
            let report = corpus_scan(&members);
            let bad = !report.violations.is_empty();
            ("corpus", info, serde_json::to_value(report)?, bad)
        }
    };
    Ok(Outcome {
        command,
        input,
        result,
        violations,
    })
}

fn emit(cli: &Cli, outcome: Outcome) -> Result<()> {
    let envelope = Envelope {
        tool: "monofact",
        version: env!("CARGO_PKG_VERSION"),
        command: outcome.command.to_string(),
        input: outcome.input,
        config: ConfigInfo {
            max_len: cli.max_len,
            budget: cli.budget,
            seed: cli.seed,
        },
        result: outcome.result,
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&envelope)? + "\n",
        Format::Text => render::to_text(&serde_json::to_value(&envelope)?),
    };
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| anyhow!("writing report: {e}")),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(&cli).and_then(|o| {
        let bad = o.violations;
        emit(&cli, o).map(|()| bad)
    }) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
