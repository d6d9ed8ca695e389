use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monideal::cones::{
    dual_description, hilbert_basis_with, integral_closure_with, is_normal_with, rees_cone,
    simis_cone, symbolic_rees_generators_with, RationalCone,
};
use monideal::decomposition::{
    alexander_dual, associated_primes, irreducible_decomposition, is_unmixed, minimal_primes,
    primary_decomposition, star_dual,
};
use monideal::digraphs::{
    cm_classify, depth_reduction_step, edge_ideal, polarize, prt_decomposition_with,
    strong_covers_with, structure, weight_reduce, CmCertificate, CmVerdict, MatchingFamily,
    WeightedDigraph,
};
use monideal::format::{
    cone_json, digraph_json, ideal_json, irreducible_json, parse_cone, parse_digraph, parse_ideal,
    primary_json, prime_json, render_cone, render_digraph_file, render_hilbert_basis,
    render_ideal_file,
};
use monideal::symbolic::{ntf_probe, symbolic_power, Route, Variant};
use monideal::{Error, Limits, MonomialIdeal, PolyContext};

#[derive(Parser)]
#[command(
    name = "monideal",
    version,
    about = "Monomial ideals, symbolic powers and weighted oriented graphs"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        value_enum,
        global = true,
        env = "MONIDEAL_FORMAT",
        default_value = "text"
    )]
    format: Format,

    /// Cap on vertices for strong-cover enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().max_vertices)]
    max_vertices: usize,

    /// Cap on enumerated lattice points in Hilbert basis computations.
    #[arg(long, global = true, default_value_t = Limits::default().max_lattice_points)]
    max_lattice_points: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Min,
    Ass,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ideal,
    Digraph,
    Cone,
}

#[derive(Args)]
struct Input {
    /// Input file, or `-` for standard input.
    path: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible decomposition.
    Decompose(Input),
    /// Primary decomposition, components grouped by radical.
    Primary(Input),
    /// Associated primes, each marked minimal or embedded.
    Assprimes(Input),
    /// Symbolic power I^(k), or I^<k> with `--variant ass`.
    Symbolic {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_enum, default_value = "min")]
        variant: VariantArg,
        #[command(flatten)]
        input: Input,
    },
    /// Compare I^k with I^(k) for k = 1..kmax.
    Ntf {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        #[command(flatten)]
        input: Input,
    },
    /// Alexander dual: products of the irreducible components' generators.
    Dual(Input),
    /// Intersection of the ideals generated by each generator's pure powers.
    Stardual(Input),
    /// Rees cone of the ideal.
    Rees(Input),
    /// Simis cone: intersection of the Rees cones of the primary components.
    Simis(Input),
    /// Hilbert basis of the Rees cone, the Simis cone, or a cone file.
    Hilbert {
        /// Use the Simis cone of the ideal.
        #[arg(long, conflicts_with = "cone")]
        simis: bool,
        /// Read the input as a cone matrix file.
        #[arg(long)]
        cone: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Whether the Rees algebra R[It] is normal.
    Normal(Input),
    /// Integral closure.
    Closure(Input),
    /// Generators of the symbolic Rees algebra, as `x^a t^k`.
    Sreesgens(Input),
    /// Edge ideal of a weighted oriented graph.
    DigraphIdeal(Input),
    /// Strong vertex covers with their L1/L2/L3 partition.
    Covers(Input),
    /// Irreducible decomposition of the edge ideal from strong covers.
    Prt(Input),
    /// Structure flags and Cohen–Macaulay classification.
    Classify(Input),
    /// Cap every weight at 2; with `--var`, one depth-reduction step on an ideal.
    Reduce {
        /// Variable for a depth-reduction step; the input is then an ideal file.
        #[arg(long)]
        var: Option<String>,
        #[command(flatten)]
        input: Input,
    },
    /// Full polarization.
    Polarize(Input),
    /// Parse and re-emit a file in canonical form.
    Canon {
        /// File kind; guessed from the extension when absent.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[command(flatten)]
        input: Input,
    },
}

enum Failure {
    Domain(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<Output, Failure>;

/// Text and structured renderings of a result.
struct Output {
    text: String,
    json: Value,
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Domain(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

/// Digraph files stand for their edge ideals.
fn load_ideal(input: &Input) -> Result<MonomialIdeal, Failure> {
    let text = read(&input.path)?;
    match guess_kind(&input.path) {
        Kind::Digraph => Ok(edge_ideal(&parse_digraph(&text)?)),
        _ => Ok(parse_ideal(&text)?),
    }
}

fn load_digraph(input: &Input) -> Result<WeightedDigraph, Failure> {
    Ok(parse_digraph(&read(&input.path)?)?)
}

fn ideal_output(ideal: &MonomialIdeal) -> Output {
    Output {
        text: render_ideal_file(ideal),
        json: ideal_json(ideal),
    }
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn complete(cone: &RationalCone) -> Result<RationalCone, Failure> {
    let dual = dual_description(cone)?;
    Ok(RationalCone::from_both(
        cone.dim(),
        dual.rays().unwrap_or_default().to_vec(),
        dual.inequalities().unwrap_or_default().to_vec(),
    )?)
}

fn cone_output(cone: &RationalCone) -> Result<Output, Failure> {
    let full = complete(cone)?;
    Ok(Output {
        text: render_cone(&full),
        json: cone_json(&full),
    })
}

fn names(ctx: &PolyContext, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| ctx.name(v).to_string()).collect()
}

fn braces(ctx: &PolyContext, vs: &[usize]) -> String {
    format!("{{{}}}", names(ctx, vs).join(", "))
}

fn run(cli: &Cli) -> Outcome {
    let limits = Limits {
        max_vertices: cli.max_vertices,
        max_lattice_points: cli.max_lattice_points,
    };
    match &cli.command {
        Command::Decompose(input) => {
            let i = load_ideal(input)?;
            let d = irreducible_decomposition(&i)?;
            Ok(Output {
                text: lines(d.iter().map(|c| c.render())),
                json: irreducible_json(&d, i.context()),
            })
        }
        Command::Primary(input) => {
            let i = load_ideal(input)?;
            let ctx = i.context();
            let d = primary_decomposition(&i)?;
            Ok(Output {
                text: lines(
                    d.iter().map(|c| {
                        format!("{}  radical {}", c.ideal.render(), c.radical.render(ctx))
                    }),
                ),
                json: primary_json(&d, ctx),
            })
        }
        Command::Assprimes(input) => {
            let i = load_ideal(input)?;
            let ctx = i.context();
            let mins = minimal_primes(&i)?;
            let ass = associated_primes(&i)?;
            let kind = |p| {
                if mins.contains(p) {
                    "minimal"
                } else {
                    "embedded"
                }
            };
            let unmixed = is_unmixed(&i)?;
            let mut text = lines(
                ass.iter()
                    .map(|p| format!("{}  {}", p.render(ctx), kind(p))),
            );
            text.push_str(&format!("unmixed: {unmixed}\n"));
            Ok(Output {
                text,
                json: json!({
                    "primes": ass
                        .iter()
                        .map(|p| json!({"prime": prime_json(ctx, p), "kind": kind(p)}))
                        .collect::<Vec<_>>(),
                    "unmixed": unmixed,
                }),
            })
        }
        Command::Symbolic { k, variant, input } => {
            let i = load_ideal(input)?;
            let v = match variant {
                VariantArg::Min => Variant::MinPrimes,
                VariantArg::Ass => Variant::AllAssPrimes,
            };
            let r = symbolic_power(&i, *k, v)?;
            let mut json = ideal_json(&r.ideal);
            json["k"] = json!(r.k);
            json["variant"] = json!(if v == Variant::MinPrimes {
                "min"
            } else {
                "ass"
            });
            json["route"] = json!(match r.route {
                Route::Localization => "localization",
                Route::PrimaryPowers => "primary-powers",
            });
            Ok(Output {
                text: render_ideal_file(&r.ideal),
                json,
            })
        }
        Command::Ntf { kmax, input } => {
            let i = load_ideal(input)?;
            let ctx = i.context();
            let report = ntf_probe(&i, *kmax)?;
            let mut text = String::new();
            let mut steps = Vec::new();
            for s in &report.steps {
                let extra: Vec<_> = s
                    .symbolic
                    .generators()
                    .iter()
                    .filter(|g| !s.ordinary.contains(g).unwrap_or(false))
                    .collect();
                text.push_str(&format!(
                    "k = {}: {}\n  ordinary: {}\n  symbolic: {}\n  difference: {}\n",
                    s.k,
                    if s.equal { "equal" } else { "differ" },
                    s.ordinary,
                    s.symbolic,
                    if extra.is_empty() {
                        "none".to_string()
                    } else {
                        extra
                            .iter()
                            .map(|g| g.render(ctx))
                            .collect::<Vec<_>>()
                            .join(", ")
                    }
                ));
                steps.push(json!({
                    "k": s.k,
                    "equal": s.equal,
                    "ordinary": ideal_json(&s.ordinary)["generators"],
                    "symbolic": ideal_json(&s.symbolic)["generators"],
                    "difference": extra.iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
                }));
            }
            match report.first_failure() {
                Some(k) => text.push_str(&format!("first failure: k = {k}\n")),
                None => text.push_str("first failure: none\n"),
            }
            Ok(Output {
                text,
                json: json!({
                    "variables": ctx.names(),
                    "steps": steps,
                    "first_failure": report.first_failure(),
                }),
            })
        }
        Command::Dual(input) => Ok(ideal_output(&alexander_dual(&load_ideal(input)?)?)),
        Command::Stardual(input) => Ok(ideal_output(&star_dual(&load_ideal(input)?)?)),
        Command::Rees(input) => cone_output(&rees_cone(&load_ideal(input)?)?),
        Command::Simis(input) => cone_output(&simis_cone(&load_ideal(input)?)?),
        Command::Hilbert { simis, cone, input } => {
            let c = if *cone {
                parse_cone(&read(&input.path)?)?
            } else if *simis {
                simis_cone(&load_ideal(input)?)?
            } else {
                rees_cone(&load_ideal(input)?)?
            };
            let hb = hilbert_basis_with(&c, &limits)?;
            Ok(Output {
                text: render_hilbert_basis(&hb),
                json: json!(hb.elements()),
            })
        }
        Command::Normal(input) => {
            let normal = is_normal_with(&load_ideal(input)?, &limits)?;
            Ok(Output {
                text: format!("{normal}\n"),
                json: json!({ "normal": normal }),
            })
        }
        Command::Closure(input) => Ok(ideal_output(&integral_closure_with(
            &load_ideal(input)?,
            &limits,
        )?)),
        Command::Sreesgens(input) => {
            let i = load_ideal(input)?;
            let ctx = i.context();
            let gens = symbolic_rees_generators_with(&i, &limits)?;
            Ok(Output {
                text: lines(gens.iter().map(|g| match g.degree {
                    0 => g.monomial.render(ctx),
                    1 => format!("{} t", g.monomial.render(ctx)),
                    k => format!("{} t^{k}", g.monomial.render(ctx)),
                })),
                json: json!(gens
                    .iter()
                    .map(|g| json!({"exponents": g.monomial.exponents(), "degree": g.degree}))
                    .collect::<Vec<_>>()),
            })
        }
        Command::DigraphIdeal(input) => Ok(ideal_output(&edge_ideal(&load_digraph(input)?))),
        Command::Covers(input) => {
            let d = load_digraph(input)?;
            let ctx = d.context();
            let covers = strong_covers_with(&d, &limits)?;
            Ok(Output {
                text: lines(covers.iter().map(|c| {
                    format!(
                        "{}  L1={} L2={} L3={}",
                        braces(ctx, &c.cover),
                        braces(ctx, &c.l1),
                        braces(ctx, &c.l2),
                        braces(ctx, &c.l3)
                    )
                })),
                json: json!(covers
                    .iter()
                    .map(|c| json!({
                        "cover": names(ctx, &c.cover),
                        "l1": names(ctx, &c.l1),
                        "l2": names(ctx, &c.l2),
                        "l3": names(ctx, &c.l3),
                    }))
                    .collect::<Vec<_>>()),
            })
        }
        Command::Prt(input) => {
            let d = load_digraph(input)?;
            let dec = prt_decomposition_with(&d, &limits)?;
            Ok(Output {
                text: lines(dec.iter().map(|c| c.render())),
                json: irreducible_json(&dec, d.context()),
            })
        }
        Command::Classify(input) => classify(&load_digraph(input)?),
        Command::Reduce { var, input } => match var {
            Some(name) => {
                let i = load_ideal(input)?;
                let idx = i
                    .context()
                    .index_of(name)
                    .ok_or_else(|| Failure::Domain(format!("unknown variable `{name}`")))?;
                Ok(ideal_output(&depth_reduction_step(&i, idx)?))
            }
            None => {
                let d = weight_reduce(&load_digraph(input)?);
                Ok(Output {
                    text: render_digraph_file(&d),
                    json: digraph_json(&d),
                })
            }
        },
        Command::Polarize(input) => {
            let p = polarize(&load_ideal(input)?)?;
            let mut json = ideal_json(&p.ideal);
            json["variable_map"] = json!(p.variable_map);
            Ok(Output {
                text: render_ideal_file(&p.ideal),
                json,
            })
        }
        Command::Canon { kind, input } => {
            let text = read(&input.path)?;
            let kind = kind.unwrap_or_else(|| guess_kind(&input.path));
            match kind {
                Kind::Ideal => Ok(ideal_output(&parse_ideal(&text)?)),
                Kind::Digraph => {
                    let d = parse_digraph(&text)?;
                    Ok(Output {
                        text: render_digraph_file(&d),
                        json: digraph_json(&d),
                    })
                }
                Kind::Cone => {
                    let c = parse_cone(&text)?;
                    Ok(Output {
                        text: render_cone(&c),
                        json: cone_json(&c),
                    })
                }
            }
        }
    }
}

fn guess_kind(path: &Path) -> Kind {
    match path.extension().and_then(|e| e.to_str()) {
        Some("digraph" | "json" | "edges") => Kind::Digraph,
        Some("cone") => Kind::Cone,
        _ => Kind::Ideal,
    }
}

fn classify(d: &WeightedDigraph) -> Outcome {
    let ctx = d.context();
    let flags = structure(d);
    let c = cm_classify(d);
    let verdict = match c.verdict {
        CmVerdict::CohenMacaulay => "cohen-macaulay",
        CmVerdict::NotCohenMacaulay => "not-cohen-macaulay",
        CmVerdict::CriterionInapplicable => "criterion-inapplicable",
    };
    let pair_names = |ps: &[(usize, usize)]| -> Vec<[String; 2]> {
        ps.iter()
            .map(|&(x, y)| [ctx.name(x).to_string(), ctx.name(y).to_string()])
            .collect()
    };
    let (cert_text, cert_json) = match &c.certificate {
        CmCertificate::WhiskerMatching {
            family,
            pairs,
            violations,
        } => {
            let family = match family {
                MatchingFamily::Forest => "forest",
                MatchingFamily::Whiskered => "whiskered",
            };
            let show = |ps: &[(usize, usize)]| {
                pair_names(ps)
                    .iter()
                    .map(|[x, y]| format!("{x}-{y}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let mut t = format!("whisker matching ({family}): {}\n", show(pairs));
            if !violations.is_empty() {
                t.push_str(&format!("violations: {}\n", show(violations)));
            }
            (
                t,
                json!({
                    "kind": "whisker-matching",
                    "family": family,
                    "pairs": pair_names(pairs),
                    "violations": pair_names(violations),
                }),
            )
        }
        CmCertificate::NoWhiskerMatching => (
            "forest without a perfect matching into leaves\n".to_string(),
            json!({"kind": "no-whisker-matching"}),
        ),
        CmCertificate::AcyclicTournament { order } => (
            format!(
                "acyclic tournament, order {}\n",
                names(ctx, order).join(" < ")
            ),
            json!({"kind": "acyclic-tournament", "order": names(ctx, order)}),
        ),
        CmCertificate::None { reason } => (
            format!("{reason}\n"),
            json!({"kind": "none", "reason": reason}),
        ),
    };
    let order = flags.topological_order.as_ref().map(|o| names(ctx, o));
    Ok(Output {
        text: format!(
            "acyclic: {}\ntransitive: {}\ntournament: {}\nverdict: {verdict}\ncertificate: {cert_text}",
            flags.acyclic, flags.transitive, flags.tournament
        ),
        json: json!({
            "acyclic": flags.acyclic,
            "transitive": flags.transitive,
            "tournament": flags.tournament,
            "topological_order": order,
            "verdict": verdict,
            "certificate": cert_json,
        }),
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Structured => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("values serialize")
                ),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
