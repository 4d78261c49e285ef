//! The `macvogan` command line.
//!
//! ```text
//! census  --group gl|sl --n INT --q INT [--format json|tsv]
//! fibers  --n INT --q INT [--class FILE.json] [--format json|tsv]
//! packet  --param FILE.json [--format json|tsv]
//! example --which surjectivity|injectivity --n INT --q INT [--e INT]
//! verify  --suite counting|twist|torsor|examples|all --n INT --q INT [--seed INT]
//! ```
//!
//! Exit status is 0 on success, 1 when a verification suite fails and 2 on
//! bad usage or input that cannot be processed.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cuspidal::FieldParams;
use crate::error::{Error, Result};
use crate::exact_groups::FinAbGroup;
use crate::oracle::budget_from_env;
use crate::partition::{enumerate_degree, orbits_and_stabilizers, PartitionFn, PartitionFnJson};
use crate::sl::{
    census_json, hp_sl_member, hp_sl_packet, l_packet, mv_class_of, mv_fiber, sl_canonicalize,
    MVClass,
};
use crate::tame::{make_example1, make_example2, TameParameter, TameParameterJson};
use crate::verify::{run_suite, Suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "macvogan",
    version,
    about = "Depth-zero Macdonald–Vogan and Langlands label calculator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Group {
    Gl,
    Sl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    /// Cyclic Frobenius with trivial inertia: ι̂ is not onto.
    Surjectivity,
    /// Regular Frobenius with inertia of order e: ι̂ is not injective.
    Injectivity,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Counting,
    Twist,
    Torsor,
    Examples,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count irreducibles of GL_N(F_q) or SL_N(F_q) by their labels.
    Census {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Macdonald–Vogan classes of degree N and their fibers.
    Fibers {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        /// Restrict to the class of this partition-valued function.
        #[arg(long)]
        class: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// L-packet, MV class and member heads of a tame parameter.
    Packet {
        #[arg(long)]
        param: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Reproduce one of the two worked examples.
    Example {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        /// Order of the inertia image; defaults to the largest valid one.
        #[arg(long)]
        e: Option<u32>,
    },
    /// Run property suites.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Outcome {
    Ok,
    VerificationFailed,
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::VerificationFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Census {
            group,
            n,
            q,
            format,
        } => census(out, group, n, q, format),
        Command::Fibers {
            n,
            q,
            class,
            format,
        } => fibers(out, n, q, class.as_deref(), format),
        Command::Packet { param, format } => packet(out, &param, format),
        Command::Example { which, n, q, e } => example(out, which, n, q, e),
        Command::Verify { suite, n, q, seed } => verify(out, suite, n, q, seed),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    let s = serde_json::to_string_pretty(v).expect("values serialize");
    writeln!(out, "{s}").map_err(io)
}

fn field_and_degree(n: u32, q: u64) -> Result<FieldParams> {
    if n == 0 {
        return Err(Error::Domain("--n must be at least 1".into()));
    }
    FieldParams::new(q)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn census(out: &mut dyn Write, group: Group, n: u32, q: u64, format: Format) -> Result<Outcome> {
    let field = field_and_degree(n, q)?;
    match (group, format) {
        (Group::Gl, Format::Json) => {
            let fns = enumerate_degree(field, n)?;
            let classes: Vec<PartitionFnJson> = fns.iter().map(PartitionFn::to_json).collect();
            emit_json(
                out,
                &json!({"N": n, "classes": classes, "group": "gl", "q": q, "total": fns.len()}),
            )?;
        }
        (Group::Gl, Format::Tsv) => {
            writeln!(out, "representative").map_err(io)?;
            for m in enumerate_degree(field, n)? {
                writeln!(out, "{m}").map_err(io)?;
            }
        }
        (Group::Sl, Format::Json) => {
            let mut v = census_json(field, n)?;
            let total: u64 = v["classes"]
                .as_array()
                .expect("classes array")
                .iter()
                .map(|c| c["stab_order"].as_u64().expect("integer"))
                .sum();
            v["group"] = json!("sl");
            v["total"] = json!(total);
            emit_json(out, &v)?;
        }
        (Group::Sl, Format::Tsv) => sl_tsv(out, field, n)?,
    }
    Ok(Outcome::Ok)
}

fn sl_tsv(out: &mut dyn Write, field: FieldParams, n: u32) -> Result<()> {
    writeln!(out, "representative\tstab_order\torbit_len").map_err(io)?;
    for o in orbits_and_stabilizers(field, n)? {
        writeln!(
            out,
            "{}\t{}\t{}",
            o.representative,
            o.stabilizer.order(),
            o.orbit_len
        )
        .map_err(io)?;
    }
    Ok(())
}

fn class_json(c: &MVClass) -> Value {
    let fiber: Vec<Vec<u64>> = mv_fiber(c).into_iter().map(|l| l.torsor_index).collect();
    json!({
        "fiber": fiber,
        "representative": c.representative.to_json(),
        "stab_order": c.stab.order(),
    })
}

fn fibers(
    out: &mut dyn Write,
    n: u32,
    q: u64,
    class: Option<&Path>,
    format: Format,
) -> Result<Outcome> {
    let field = field_and_degree(n, q)?;
    let Some(path) = class else {
        match format {
            Format::Json => emit_json(out, &census_json(field, n)?)?,
            Format::Tsv => sl_tsv(out, field, n)?,
        }
        return Ok(Outcome::Ok);
    };
    let doc: PartitionFnJson = read_json(path)?;
    let m = PartitionFn::from_json(&doc)?;
    if doc.q != q || m.degree() != n as u64 {
        return Err(Error::Domain(format!(
            "class has q = {} and degree {}, command asks for q = {q}, N = {n}",
            doc.q,
            m.degree()
        )));
    }
    let c = mv_class_of(&m);
    match format {
        Format::Json => emit_json(out, &json!({"N": n, "classes": [class_json(&c)], "q": q}))?,
        Format::Tsv => {
            writeln!(out, "torsor_index").map_err(io)?;
            for l in mv_fiber(&c) {
                writeln!(out, "{}", coords(&l.torsor_index)).map_err(io)?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn coords(x: &[u64]) -> String {
    let parts: Vec<String> = x.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

fn shape(g: &FinAbGroup) -> Vec<u64> {
    g.invariant_factors().to_vec()
}

fn packet(out: &mut dyn Write, path: &Path, format: Format) -> Result<Outcome> {
    let doc: TameParameterJson = read_json(path)?;
    let p = TameParameter::from_json(&doc)?;
    let c = sl_canonicalize(&p);
    let class = hp_sl_packet(&c);
    let iota_hat = c.canonical.iota_hat();
    let members: Vec<(Vec<u64>, Vec<Vec<u64>>)> = l_packet(&c)
        .into_iter()
        .map(|label| {
            let heads = hp_sl_member(&c, &label.packet_index)
                .expect("packet labels are characters of A")
                .into_iter()
                .map(|l| l.torsor_index)
                .collect();
            (label.packet_index, heads)
        })
        .collect();
    match format {
        Format::Json => {
            let member_json: Vec<Value> = members
                .iter()
                .map(|(psi, heads)| json!({"heads": heads, "psi": psi}))
                .collect();
            emit_json(
                out,
                &json!({
                    "canonical": c.canonical.to_json(),
                    "component_group_inertial": shape(&class.stab),
                    "component_group_l": shape(&c.canonical.stab_full()),
                    "iota_hat": {
                        "injective": iota_hat.is_injective(),
                        "kernel_order": iota_hat.kernel().order(),
                        "surjective": iota_hat.is_surjective(),
                    },
                    "members": member_json,
                    "mv_class": class_json(&class),
                    "packet_size": members.len(),
                }),
            )?;
        }
        Format::Tsv => {
            writeln!(out, "psi\theads").map_err(io)?;
            for (psi, heads) in &members {
                let hs: Vec<String> = heads.iter().map(|h| coords(h)).collect();
                writeln!(out, "{}\t{}", coords(psi), hs.join(" ")).map_err(io)?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn example(out: &mut dyn Write, which: Which, n: u32, q: u64, e: Option<u32>) -> Result<Outcome> {
    let field = field_and_degree(n, q)?;
    let p = match which {
        Which::Surjectivity => {
            if e.is_some() {
                return Err(Error::Domain(
                    "--e only applies to --which injectivity".into(),
                ));
            }
            make_example1(field, n)?
        }
        Which::Injectivity => {
            let e = match e {
                Some(e) => e,
                None => (2..=n)
                    .rev()
                    .find(|e| n.is_multiple_of(*e) && field.units() % *e as u64 == 0)
                    .ok_or_else(|| {
                        Error::Domain(format!(
                            "no e > 1 divides both q - 1 = {} and N = {n}",
                            field.units()
                        ))
                    })?,
            };
            make_example2(field, n, e)?
        }
    };
    let c = sl_canonicalize(&p);
    let class = hp_sl_packet(&c);
    let h = p.iota_hat();
    let lines = [
        format!("parameter: {p}"),
        format!("L-packet size {}", l_packet(&c).len()),
        format!("inertial component group order {}", class.stab.order()),
        format!("MV fiber size {}", mv_fiber(&class).len()),
        format!(
            "iota_hat injective={} surjective={} kernel={}",
            h.is_injective(),
            h.is_surjective(),
            h.kernel().order()
        ),
    ];
    for l in lines {
        writeln!(out, "{l}").map_err(io)?;
    }
    Ok(Outcome::Ok)
}

fn verify(out: &mut dyn Write, suite: SuiteArg, n: u32, q: u64, seed: u64) -> Result<Outcome> {
    let field = field_and_degree(n, q)?;
    let suite = match suite {
        SuiteArg::Counting => Suite::Counting,
        SuiteArg::Twist => Suite::Twist,
        SuiteArg::Torsor => Suite::Torsor,
        SuiteArg::Examples => Suite::Examples,
        SuiteArg::All => Suite::All,
    };
    let mut cfg = VerifyConfig::new(field, n);
    cfg.seed = seed;
    cfg.budget = budget_from_env()?;
    let reports = run_suite(suite, &cfg)?;
    let mut ok = true;
    for r in &reports {
        writeln!(out, "{r}").map_err(io)?;
        for s in &r.skipped {
            writeln!(out, "  skipped: {s}").map_err(io)?;
        }
        for f in &r.failures {
            writeln!(out, "  failure: {f}").map_err(io)?;
        }
        ok &= r.passed();
    }
    Ok(if ok {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    })
}
