//! `mobius-tsg`: reports on automorphisms, decorations and realizable groups.
//!
//! Exit status: 0 success, 1 verification mismatch, 2 input error.

use std::fs;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use mobius_tsg_core::decoration::{
    catalog, catalog_entry, decoration_from_json, decoration_to_json, refined_upper_bound,
    stabilizer, CatalogEntry, Evaluation,
};
use mobius_tsg_core::graph::{automorphisms, Graph};
use mobius_tsg_core::perm::{all_subgroups, recognize, PermGroup};
use mobius_tsg_core::realizability::{
    admissible_representatives, admissible_subgroup, classify, corollary_scan_s6, iso_classes,
    lemma_z2cubed, ScanProgress,
};
use mobius_tsg_core::verify::run_checks;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "mobius-tsg",
    version,
    about = "Symmetry groups of embedded Möbius ladders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Automorphism group of a graph
    Aut {
        /// `k33`, `mobius:<n>`, or a graph file (`vertices N` / `edge u v` lines)
        #[arg(long)]
        graph: String,
    },
    /// Stabilizer of a decoration file
    Stabilizer {
        #[arg(long)]
        decoration: String,
        /// Intersect with the admissible subgroup (K3,3 only)
        #[arg(long)]
        refined: bool,
    },
    /// Groups positively realizable for M_n
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The admissible subgroup of Aut(K3,3)
    Admissible,
    /// Checks on Z2 x Z2 x Z2 subgroups of Aut(K3,3)
    Lemma {
        #[arg(value_parser = ["z2cubed"])]
        which: String,
    },
    /// Scan of all subgroups of S6 (slow)
    Corollary {
        #[arg(value_parser = ["s6"])]
        which: String,
        #[arg(long)]
        progress: bool,
    },
    /// Decorated K3,3 embeddings realizing each group for M_3
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
    /// Runs the golden checks
    Verify {
        /// Also run the S6 scan
        #[arg(long)]
        deep: bool,
    },
}

/// An error that maps to an exit status.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

/// Runs one invocation; `args[0]` is the program name.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Aut { graph } => aut(&graph, out),
        Command::Stabilizer {
            decoration,
            refined,
        } => stabilizer_report(&decoration, refined, out),
        Command::Classify { n, format } => classify_report(n, format, out),
        Command::Admissible => admissible(out),
        Command::Lemma { .. } => lemma(out),
        Command::Corollary { progress, .. } => corollary(progress, out, err),
        Command::Catalog { name } => catalog_report(name.as_deref(), out),
        Command::Verify { deep } => verify(deep, out, err),
    }
}

fn io_err(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("write failed: {e}"),
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))
}

fn load_graph(spec: &str) -> Result<Graph, Failure> {
    if let Some(g) = Graph::builtin(spec) {
        return g.map_err(|e| input_error(e.to_string()));
    }
    if !Path::new(spec).exists() {
        return Err(input_error(format!(
            "{spec}: not a built-in graph (k33, mobius:<n>) or an existing file"
        )));
    }
    Graph::parse_text(&read_file(spec)?).map_err(|e| input_error(format!("{spec}: {e}")))
}

fn write_group(out: &mut dyn Write, g: &PermGroup) -> Result<(), Failure> {
    writeln!(out, "order {}, {}", g.order(), recognize(g)).map_err(io_err)?;
    let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
    let gens = if gens.is_empty() {
        "none".to_string()
    } else {
        gens.join(" ")
    };
    writeln!(out, "generators: {gens}").map_err(io_err)
}

fn aut(spec: &str, out: &mut dyn Write) -> Outcome {
    let g = load_graph(spec)?;
    let group = automorphisms(&g).map_err(|e| input_error(e.to_string()))?;
    write_group(out, &group)?;
    Ok(EXIT_OK)
}

fn stabilizer_report(path: &str, refined: bool, out: &mut dyn Write) -> Outcome {
    let d =
        decoration_from_json(&read_file(path)?).map_err(|e| input_error(format!("{path}: {e}")))?;
    let group = if refined {
        refined_upper_bound(&d)
    } else {
        stabilizer(&d)
    }
    .map_err(|e| input_error(e.to_string()))?;
    write_group(out, &group)?;
    let known = catalog().into_iter().find(|e| e.decoration == d);
    match known {
        Some(e) => {
            let evaluation = match e.evaluation {
                Evaluation::Stabilizer => "stabilizer",
                Evaluation::RefinedBound => "refined bound",
            };
            writeln!(
                out,
                "catalog entry {} ({} family); expected {} via the {evaluation}",
                e.name, e.family, e.expected
            )
            .map_err(io_err)?;
        }
        None => writeln!(
            out,
            "note: this is an upper bound on the symmetries induced by orientation-preserving homeomorphisms"
        )
        .map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

fn classify_report(n: usize, format: Format, out: &mut dyn Write) -> Outcome {
    let report = classify(n).map_err(|e| input_error(e.to_string()))?;
    match format {
        Format::Json => writeln!(out, "{}", report.to_json()),
        Format::Text => write!(out, "{report}"),
    }
    .map_err(io_err)?;
    Ok(EXIT_OK)
}

fn internal(e: mobius_tsg_core::Error) -> Failure {
    Failure {
        code: EXIT_MISMATCH,
        message: e.to_string(),
    }
}

fn admissible(out: &mut dyn Write) -> Outcome {
    let g = admissible_subgroup().map_err(internal)?;
    write_group(out, &g)?;
    writeln!(out, "representatives:").map_err(io_err)?;
    for c in admissible_representatives() {
        let ty: Vec<String> = c.cycle_type.iter().map(|x| x.to_string()).collect();
        writeln!(
            out,
            "  {:<16} cycle type {}",
            c.representative.to_string(),
            ty.join(",")
        )
        .map_err(io_err)?;
    }
    let subs = all_subgroups(&g).map_err(internal)?;
    let classes = iso_classes(&subs).map_err(internal)?;
    writeln!(
        out,
        "{} subgroups in {} isomorphism classes:",
        subs.len(),
        classes.len()
    )
    .map_err(io_err)?;
    for (name, _) in &classes {
        let count = subs.iter().filter(|h| recognize(h) == *name).count();
        let noun = if count == 1 { "subgroup" } else { "subgroups" };
        writeln!(
            out,
            "  {:<20} order {:>2}  {count} {noun}",
            name.to_string(),
            name.order()
        )
        .map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn lemma(out: &mut dyn Write) -> Outcome {
    let r = lemma_z2cubed().map_err(internal)?;
    writeln!(
        out,
        "Z2 x Z2 x Z2 subgroups of Aut(K3,3): {}",
        r.subgroups_found
    )
    .map_err(io_err)?;
    writeln!(
        out,
        "all contain a transposition: {}{}",
        r.all_contain_transposition,
        if r.vacuous {
            " (vacuously: there are none)"
        } else {
            ""
        }
    )
    .map_err(io_err)?;
    Ok(if r.all_contain_transposition {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn progress_line(p: ScanProgress) -> String {
    match p {
        ScanProgress::Enumerating => "enumerating subgroups of S6".into(),
        ScanProgress::Enumerated { total } => format!("{total} subgroups found"),
        ScanProgress::Filtered { survivors } => format!("{survivors} pass the filter, identifying"),
        ScanProgress::Done => "done".into(),
    }
}

fn corollary(progress: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let r = corollary_scan_s6(|p| {
        if progress {
            let _ = writeln!(err, "{}", progress_line(p));
        }
    })
    .map_err(internal)?;
    writeln!(out, "subgroups of S6: {}", r.total_subgroups).map_err(io_err)?;
    writeln!(
        out,
        "without transpositions or elements of order 4 or 5: {}",
        r.survivors
    )
    .map_err(io_err)?;
    for (code, count) in &r.by_class {
        writeln!(out, "  {code:<12} {count}").map_err(io_err)?;
    }
    if r.holds() {
        writeln!(out, "every survivor is realized for M_3").map_err(io_err)?;
        Ok(EXIT_OK)
    } else {
        writeln!(
            out,
            "not realized for M_3: {} subgroups",
            r.exceptions.len()
        )
        .map_err(io_err)?;
        for e in &r.exceptions {
            writeln!(out, "  {} <{}>", e.name, e.generators.join(", ")).map_err(io_err)?;
        }
        Ok(EXIT_MISMATCH)
    }
}

fn describe_entry(out: &mut dyn Write, e: &CatalogEntry) -> Result<(), Failure> {
    let evaluation = match e.evaluation {
        Evaluation::Stabilizer => "stabilizer",
        Evaluation::RefinedBound => "refined bound",
    };
    writeln!(
        out,
        "{:<24} {:<18} order {:>2}  {:<13} {:<14} {}",
        e.name,
        e.expected.to_string(),
        e.expected.order(),
        evaluation,
        e.family,
        e.description
    )
    .map_err(io_err)
}

fn catalog_report(name: Option<&str>, out: &mut dyn Write) -> Outcome {
    match name {
        None => {
            for e in catalog() {
                describe_entry(out, &e)?;
            }
        }
        Some(name) => {
            let e = catalog_entry(name)
                .ok_or_else(|| input_error(format!("no catalog entry named {name:?}")))?;
            describe_entry(out, &e)?;
            let group = e.evaluate().map_err(internal)?;
            write_group(out, &group)?;
            let json = decoration_to_json(&e.decoration).map_err(internal)?;
            writeln!(out, "{json}").map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(deep: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let checks = run_checks(deep, |p| {
        let _ = writeln!(err, "{}", progress_line(p));
    });
    let mut failed = 0;
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status}  {:<20} {}", c.name, c.detail).map_err(io_err)?;
        failed += usize::from(!c.passed);
    }
    writeln!(
        out,
        "{} of {} checks passed",
        checks.len() - failed,
        checks.len()
    )
    .map_err(io_err)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}
