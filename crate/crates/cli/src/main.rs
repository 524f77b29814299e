use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use ncdual::bigraded::{main_rees_check, psi, rees_ideal, BiPolynomial};
use ncdual::groebner::{
    groebner_basis, ideal_quotient, saturate, Deadline, GbOptions, Ideal, TermOrder,
};
use ncdual::io::{parse_poly, render, FormSetDoc, IdealDoc, JonquieresDoc};
use ncdual::jonquieres::{commute_criterion, dual_jonquieres, JonquieresMap};
use ncdual::maps::{
    compose, image_kernel, inversion_factor, magnus_commute, monomial_cremona_inverse,
    reduce_representative, same_map, RationalMap, DEFAULT_INVERSE_CAP,
};
use ncdual::newton::dual_set;
use ncdual::suites::{default_count, run_suite, SUITES};
use ncdual::{Error, FormSet};

#[derive(Parser)]
#[command(
    name = "ncdual",
    version,
    about = "Newton complementary duals of sets of forms"
)]
struct Cli {
    /// Read the JSON input from FILE instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Abort Groebner computations after this many seconds.
    #[arg(long, global = true, value_name = "SECONDS")]
    gb_deadline: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Newton dual of a form set.
    Dual,
    /// The Magnus involution of P^n.
    Magnus {
        #[arg(long)]
        n: usize,
    },
    /// Run a seeded property suite.
    Verify {
        #[arg(long, value_parser = PossibleValuesParser::new(SUITES.iter().map(|(n, _)| *n)))]
        law: String,
        /// Number of cases; defaults to the suite's own count.
        #[arg(long)]
        count: Option<usize>,
    },
    /// `outer o inner` from `{"outer": .., "inner": ..}`.
    Compose,
    /// Divide out the common factor of a representative.
    Reduce,
    /// Whether `{"first": .., "second": ..}` define the same map.
    Samemap,
    /// The factor `C` with `inverse_i(map) = x_i C`.
    Invfactor,
    /// Inverse of a monomial Cremona map.
    MonoInverse {
        #[arg(long, default_value_t = DEFAULT_INVERSE_CAP)]
        cap: u32,
    },
    /// Whether a map commutes with the Magnus involution.
    MagnusCommute,
    /// Kernel of `y_j -> g_j`.
    Kernel,
    /// Rees ideal of a form set.
    Rees,
    /// Apply psi to every generator of an ideal document.
    Psi,
    /// Compare the Rees ideals of a form set and of its dual.
    Mainrees,
    /// Ideal quotient by `"by"`.
    Quotient,
    /// Saturation by `"by"`.
    Saturate,
    /// Reduced Groebner basis.
    Gb {
        #[arg(long, value_enum, default_value_t = Order::Degrevlex)]
        order: Order,
    },
    /// Normal form of `"poly"` modulo the ideal.
    Nf {
        #[arg(long, value_enum, default_value_t = Order::Degrevlex)]
        order: Order,
    },
    /// de Jonquieres maps.
    Jonq {
        #[command(subcommand)]
        action: JonqAction,
    },
}

#[derive(Subcommand)]
enum JonqAction {
    /// Validate and assemble the map.
    Make,
    /// Dual map as a de Jonquieres map.
    Dual,
    /// Commutation with the Magnus involution.
    Commute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Degrevlex,
    Deglex,
}

#[derive(Deserialize)]
struct Pair {
    #[serde(alias = "outer", alias = "map")]
    first: FormSetDoc,
    #[serde(alias = "inner", alias = "inverse")]
    second: FormSetDoc,
}

#[derive(Deserialize)]
struct MainReesInput {
    nvars: usize,
    forms: Vec<String>,
    #[serde(default)]
    generators: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct IdealWith {
    #[serde(flatten)]
    ideal: IdealDoc,
    #[serde(alias = "poly")]
    by: String,
}

/// Command result: the value to print and whether the checked property holds.
struct Outcome {
    value: Value,
    text: String,
    holds: bool,
}

impl Outcome {
    fn ok(value: Value, text: String) -> Self {
        Outcome {
            value,
            text,
            holds: true,
        }
    }

    fn verdict(value: Value, text: String, holds: bool) -> Self {
        Outcome { value, text, holds }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.value).expect("serializable")
                );
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(if out.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::NotInverse
            | Error::NotBirational { .. }
            | Error::DeadlineExceeded
            | Error::IdentityViolation(_),
        ) => 1,
        _ => 2,
    }
}

fn read_input<T: for<'de> Deserialize<'de>>(cli: &Cli) -> anyhow::Result<T> {
    let mut text = String::new();
    match &cli.input {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .context("reading stdin")?;
        }
    }
    serde_json::from_str(&text).context("malformed input document")
}

fn options(cli: &Cli) -> GbOptions {
    GbOptions {
        deadline: cli.gb_deadline.map_or(Deadline::none(), |s| {
            Deadline::after(Duration::from_secs_f64(s))
        }),
        ..GbOptions::default()
    }
}

fn form_set_out(g: &FormSet) -> Outcome {
    let doc = FormSetDoc::from_form_set(g);
    let text = doc.forms.join("\n");
    Outcome::ok(json!(doc), text)
}

fn ideal_out(i: &Ideal) -> Outcome {
    let doc = IdealDoc::from_ideal(i);
    let text = doc.gens.join("\n");
    Outcome::ok(json!(doc), text)
}

fn jonq_out(j: &JonquieresMap) -> Outcome {
    let doc = j.to_doc();
    let text = format!(
        "support: {}\nq: {}\nf: {}",
        doc.support.join(", "),
        doc.q,
        doc.f
    );
    Outcome::ok(json!(doc), text)
}

fn flag(name: &str, holds: bool) -> Outcome {
    Outcome::verdict(json!({ name: holds }), holds.to_string(), holds)
}

fn map_of(doc: &FormSetDoc) -> anyhow::Result<RationalMap> {
    Ok(RationalMap::new(doc.to_form_set()?)?)
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let opts = options(cli);
    Ok(match &cli.command {
        Command::Dual => form_set_out(&dual_set(&read_input::<FormSetDoc>(cli)?.to_form_set()?)),
        Command::Magnus { n } => form_set_out(RationalMap::magnus(*n)?.rep()),
        Command::Verify { law, count } => {
            let count = count
                .or_else(|| default_count(law))
                .expect("law validated by clap");
            let r = run_suite(law, cli.seed, count).expect("law validated by clap");
            let mut text = format!(
                "{}: {} cases, {} failures",
                r.name,
                r.cases,
                r.failures.len()
            );
            for f in &r.failures {
                text.push_str("\n  ");
                text.push_str(f);
            }
            let value = json!({ "law": r.name, "seed": cli.seed, "cases": r.cases, "failures": r.failures });
            Outcome::verdict(value, text, r.passed())
        }
        Command::Compose => {
            let p: Pair = read_input(cli)?;
            form_set_out(compose(&map_of(&p.first)?, &map_of(&p.second)?)?.rep())
        }
        Command::Reduce => form_set_out(
            reduce_representative(read_input::<FormSetDoc>(cli)?.to_form_set()?)?.rep(),
        ),
        Command::Samemap => {
            let p: Pair = read_input(cli)?;
            flag("same", same_map(&map_of(&p.first)?, &map_of(&p.second)?)?)
        }
        Command::Invfactor => {
            let p: Pair = read_input(cli)?;
            let c = inversion_factor(&map_of(&p.first)?, &map_of(&p.second)?)?;
            let s = render(&c, c.nvars());
            Outcome::ok(json!({ "factor": s }), s)
        }
        Command::MonoInverse { cap } => {
            form_set_out(monomial_cremona_inverse(&map_of(&read_input(cli)?)?, *cap)?.rep())
        }
        Command::MagnusCommute => flag("commutes", magnus_commute(&map_of(&read_input(cli)?)?)?),
        Command::Kernel => ideal_out(&image_kernel(
            &read_input::<FormSetDoc>(cli)?.to_form_set()?,
            opts,
        )?),
        Command::Rees => ideal_out(&rees_ideal(
            &read_input::<FormSetDoc>(cli)?.to_form_set()?,
            opts,
        )?),
        Command::Psi => {
            let doc: IdealDoc = read_input(cli)?;
            let ideal = doc.to_ideal()?;
            let images = ideal
                .gens()
                .iter()
                .map(|g| Ok(psi(&BiPolynomial::new(g.clone(), doc.xvars)?).into_poly()))
                .collect::<ncdual::Result<Vec<_>>>()?;
            ideal_out(&Ideal::new(ideal.ring(), images)?)
        }
        Command::Mainrees => mainrees(cli, opts)?,
        Command::Quotient | Command::Saturate => {
            let input: IdealWith = read_input(cli)?;
            let ideal = input.ideal.to_ideal()?;
            let f = parse_poly(&input.by, input.ideal.xvars, input.ideal.yvars)?;
            match cli.command {
                Command::Quotient => ideal_out(&ideal_quotient(&ideal, &f, opts)?),
                _ => ideal_out(&saturate(&ideal, &f, opts)?),
            }
        }
        Command::Gb { order } => {
            let doc: IdealDoc = read_input(cli)?;
            let ideal = doc.to_ideal()?;
            let gb = groebner_basis(&ideal, &term_order(*order), opts)?;
            ideal_out(&Ideal::new(ideal.ring(), gb.basis().to_vec())?)
        }
        Command::Nf { order } => {
            let input: IdealWith = read_input(cli)?;
            let ideal = input.ideal.to_ideal()?;
            let p = parse_poly(&input.by, input.ideal.xvars, input.ideal.yvars)?;
            let r = groebner_basis(&ideal, &term_order(*order), opts)?.normal_form(&p)?;
            let s = render(&r, input.ideal.xvars);
            Outcome::ok(json!({ "normal_form": s }), s)
        }
        Command::Jonq { action } => {
            let j = JonquieresMap::from_doc(&read_input::<JonquieresDoc>(cli)?)?;
            match action {
                JonqAction::Make => form_set_out(j.assembled()),
                JonqAction::Dual => jonq_out(&dual_jonquieres(&j)?),
                JonqAction::Commute => {
                    let r = commute_criterion(&j)?;
                    let text = format!("criterion: {}\ncommutes: {}", r.criterion, r.commutes);
                    Outcome::verdict(
                        json!({ "criterion": r.criterion, "commutes": r.commutes }),
                        text,
                        r.criterion == r.commutes,
                    )
                }
            }
        }
    })
}

fn term_order(o: Order) -> TermOrder {
    match o {
        Order::Degrevlex => TermOrder::DegRevLex,
        Order::Deglex => TermOrder::DegLex,
    }
}

fn mainrees(cli: &Cli, opts: GbOptions) -> anyhow::Result<Outcome> {
    let input: MainReesInput = read_input(cli)?;
    let doc = FormSetDoc {
        nvars: input.nvars,
        forms: input.forms,
    };
    let g = doc.to_form_set()?;
    let gens = input
        .generators
        .map(|v| {
            v.iter()
                .map(|s| parse_poly(s, g.nvars(), g.len()))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    let r = main_rees_check(&g, gens.as_deref(), opts)?;
    let nx = g.nvars();
    let show = |v: &[ncdual::Polynomial]| v.iter().map(|p| render(p, nx)).collect::<Vec<_>>();
    let witness = r.witness.as_ref().map(|m| m.to_string());
    let value = json!({
        "generators": show(&r.generators),
        "psi_images": show(&r.psi_images),
        "images_in_hat": r.images_in_hat,
        "saturation_equal": r.saturation_equal,
        "witness": witness,
        "quotient_equal": r.quotient_equal,
        "holds": r.holds(),
    });
    let text = format!(
        "images in dual ideal: {}\nsaturation equal: {}\nwitness: {}\nquotient equal: {}",
        r.images_in_hat,
        r.saturation_equal,
        witness.as_deref().unwrap_or("none"),
        r.quotient_equal
    );
    Ok(Outcome::verdict(value, text, r.holds()))
}
