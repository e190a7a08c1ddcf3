//! The `gsb` command line: presentation files in, deterministic text reports out.
//!
//! Exit codes: 0 success or property holds, 1 property false or completion
//! capped, 2 invalid input, 3 resource limit exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use gsb_core::anticomm::{ac_gsb_check_bounded, ac_irr_by_degree, ac_reduce, AcReport};
use gsb_core::catalog::{chinese_gsb, tensor_relations};
use gsb_core::dialgebra::{di_gsb_check_bounded, di_irr_by_length, di_reduce};
use gsb_core::format::{self, display_element, Element, Kind, PresentationFile, Relations};
use gsb_core::freemodule::{
    module_cd_check, module_irr_by_length, module_is_gsb, module_normal_form,
};
use gsb_core::gsb::{
    cd_lemma_check, is_gsb, shirshov_complete_with, CompletionLimits, CompletionStatus,
    CompositionKind,
};
use gsb_core::rewrite::{irr_by_length, normal_form};
use gsb_core::{poly, Error, Polynomial, RewriteSystem, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

const DEFAULT_BOUND: usize = 5;

#[derive(Parser, Debug)]
#[command(
    name = "gsb",
    version,
    about = "Groebner-Shirshov bases: checks, completion, normal forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the relations form a Groebner-Shirshov basis.
    Check {
        file: PathBuf,
        /// Bound for kinds without an exact check (dialgebra, ac).
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Run the Shirshov completion (assoc kind).
    Complete {
        file: PathBuf,
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        max_elems: usize,
        /// Write the resulting basis as a presentation file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        timeout: Option<f64>,
    },
    /// Print the normal form of an element.
    Nf {
        file: PathBuf,
        #[arg(long)]
        elem: String,
    },
    /// List irreducible words by length.
    Irr {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Bounded check of the three Composition-Diamond conditions.
    Cdcheck {
        file: PathBuf,
        #[arg(long)]
        max_deg: usize,
    },
    /// Built-in presentations.
    #[command(subcommand)]
    Catalog(Preset),
}

#[derive(Subcommand, Debug)]
enum Preset {
    /// The Chinese monoid algebra of rank K.
    Chinese {
        #[arg(long)]
        rank: usize,
        #[command(flatten)]
        action: PresetAction,
    },
    /// The tensor product of two free algebras.
    Tensor {
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        #[command(flatten)]
        action: PresetAction,
    },
}

#[derive(Args, Debug)]
struct PresetAction {
    /// Verify the basis exactly.
    #[arg(long)]
    check: bool,
    /// List irreducible words up to this length.
    #[arg(long)]
    irr: Option<usize>,
    #[arg(long, requires = "irr")]
    count_only: bool,
    /// Print the normal form of an element.
    #[arg(long)]
    nf: Option<String>,
}

enum Failure {
    Input(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(String, i32), Failure>;

/// Runs one command line; the report goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((report, code)) => {
            let _ = out.write_all(report.as_bytes());
            code
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Resource(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_RESOURCE
        }
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Check { file, max_deg } => check(&load(&file)?, max_deg),
        Command::Complete {
            file,
            max_deg,
            max_elems,
            out,
            timeout,
        } => complete(&load(&file)?, max_deg, max_elems, out, timeout),
        Command::Nf { file, elem } => nf(&load(&file)?, &elem),
        Command::Irr {
            file,
            max_len,
            count_only,
        } => irr(&load(&file)?, max_len, count_only),
        Command::Cdcheck { file, max_deg } => cdcheck(&load(&file)?, max_deg),
        Command::Catalog(preset) => catalog(preset),
    }
}

fn load(path: &PathBuf) -> Result<PresentationFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| Failure::Input(format!("{}:{e}", path.display())))
}

fn header(command: &str, kind: Kind) -> String {
    format!("format: 1\ncommand: {command}\nkind: {}\n", kind.as_str())
}

fn word(w: &Word, s: &RewriteSystem) -> String {
    poly::display(&Polynomial::monomial(w.clone()), s.alphabet()).to_string()
}

fn exit_for(holds: bool) -> i32 {
    if holds {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn counts_line(counts: &[usize]) -> String {
    counts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn check(p: &PresentationFile, bound: Option<usize>) -> Outcome {
    let mut r = header("check", p.kind);
    let holds = match p.kind {
        Kind::Assoc => {
            let s = p.rewrite_system()?;
            gsb_report(&mut r, &s)
        }
        Kind::Module => {
            let s = p.module_system()?;
            let rep = module_is_gsb(&s);
            writeln!(
                r,
                "holds: {}\ncompositions: {}\nfailing: {}",
                rep.holds,
                rep.checked,
                rep.failing.len()
            )
            .unwrap();
            for c in &rep.failing {
                writeln!(
                    r,
                    "  w={} left={} right={} result={}",
                    c.w.display(s.x(), s.y()),
                    c.left,
                    c.right,
                    gsb_core::freemodule::module_display(
                        &module_normal_form(&c.result, &s),
                        s.x(),
                        s.y()
                    )
                )
                .unwrap();
            }
            rep.holds
        }
        Kind::Dialgebra => {
            let s = p.di_system()?;
            let bound = bound.unwrap_or(DEFAULT_BOUND).max(s.max_len());
            let rep = di_gsb_check_bounded(&s, bound)?;
            writeln!(r, "bound: {bound}\nholds: {}", rep.holds()).unwrap();
            rep.holds()
        }
        Kind::Ac => {
            let s = p.ac_system()?;
            let bound = bound.unwrap_or(DEFAULT_BOUND);
            let rep = ac_gsb_check_bounded(&s, bound);
            writeln!(r, "bound: {bound}\nholds: {}", rep.compositions_trivial).unwrap();
            ac_failing(&mut r, &rep, &s);
            rep.compositions_trivial
        }
    };
    Ok((r, exit_for(holds)))
}

fn gsb_report(r: &mut String, s: &RewriteSystem) -> bool {
    let rep = is_gsb(s);
    writeln!(
        r,
        "holds: {}\ncompositions: {}\nfailing: {}",
        rep.holds,
        rep.checked,
        rep.failing.len()
    )
    .unwrap();
    for c in &rep.failing {
        let kind = match c.kind {
            CompositionKind::Intersection => "intersection",
            CompositionKind::Inclusion => "inclusion",
        };
        writeln!(
            r,
            "  {kind} w={} left={} right={} result={}",
            word(&c.w, s),
            c.left,
            c.right,
            poly::display(&normal_form(&c.result, s), s.alphabet())
        )
        .unwrap();
    }
    rep.holds
}

fn ac_failing(r: &mut String, rep: &AcReport, s: &gsb_core::anticomm::AcSystem) {
    writeln!(
        r,
        "compositions: {}\nfailing: {}",
        rep.checked,
        rep.failing.len()
    )
    .unwrap();
    for c in &rep.failing {
        writeln!(
            r,
            "  w={} left={} right={} result={}",
            c.w.display(s.alphabet()),
            c.left,
            c.right,
            gsb_core::anticomm::ac_display(&ac_reduce(&c.result, s), s.alphabet())
        )
        .unwrap();
    }
}

fn complete(
    p: &PresentationFile,
    max_deg: usize,
    max_elems: usize,
    out: Option<PathBuf>,
    timeout: Option<f64>,
) -> Outcome {
    if max_deg == 0 || max_elems == 0 {
        return Err(Failure::Input(
            "--max-deg and --max-elems must be positive".into(),
        ));
    }
    let s = p.rewrite_system()?;
    let deadline = match timeout {
        Some(t) if t.is_finite() && t >= 0.0 => Some(Instant::now() + Duration::from_secs_f64(t)),
        Some(_) => {
            return Err(Failure::Input(
                "--timeout must be a nonnegative number of seconds".into(),
            ))
        }
        None => None,
    };
    let rep = shirshov_complete_with(
        &s,
        CompletionLimits {
            max_deg,
            max_elems,
            deadline,
        },
    )?;
    let mut r = header("complete", p.kind);
    writeln!(
        r,
        "status: {}\nadded: {}\niterations: {}\nbasis: {}",
        rep.status.as_str(),
        rep.added,
        rep.iterations,
        rep.basis.len()
    )
    .unwrap();
    for e in rep.basis.elements() {
        writeln!(r, "  {}", poly::display(e, rep.basis.alphabet())).unwrap();
    }
    if let Some(path) = out {
        let file = PresentationFile {
            kind: Kind::Assoc,
            gens: rep.basis.alphabet().clone(),
            mgens: None,
            brackets: Vec::new(),
            relations: Relations::Assoc(rep.basis.elements().to_vec()),
        };
        std::fs::write(&path, format::print(&file))
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok((r, exit_for(rep.status == CompletionStatus::Completed)))
}

fn nf(p: &PresentationFile, elem: &str) -> Outcome {
    let e = p.parse_element(elem)?;
    let reduced = match e {
        Element::Assoc(q) => Element::Assoc(normal_form(&q, &p.rewrite_system()?)),
        Element::Dialgebra(q) => Element::Dialgebra(di_reduce(&q, &p.di_system()?)),
        Element::Module(q) => Element::Module(module_normal_form(&q, &p.module_system()?)),
        Element::Ac(q) => Element::Ac(ac_reduce(&q, &p.ac_system()?)),
    };
    Ok((
        format!("{}\n", display_element(&reduced, &p.gens, p.mgens.as_ref())),
        EXIT_OK,
    ))
}

fn irr(p: &PresentationFile, max_len: usize, count_only: bool) -> Outcome {
    // Lengths start at 1 for kinds without an empty word.
    let levels: Vec<Vec<String>> = match p.kind {
        Kind::Assoc => {
            let s = p.rewrite_system()?;
            irr_by_length(&s, max_len)
                .iter()
                .map(|l| l.iter().map(|w| word(w, &s)).collect())
                .collect()
        }
        Kind::Module => {
            let s = p.module_system()?;
            module_irr_by_length(&s, max_len)
                .iter()
                .map(|l| l.iter().map(|w| w.display(s.x(), s.y())).collect())
                .collect()
        }
        Kind::Dialgebra => {
            let s = p.di_system()?;
            di_irr_by_length(&s, max_len)
                .iter()
                .skip(1)
                .map(|l| l.iter().map(|w| w.display(s.alphabet())).collect())
                .collect()
        }
        Kind::Ac => {
            let s = p.ac_system()?;
            ac_irr_by_degree(&s, max_len)
                .iter()
                .skip(1)
                .map(|l| l.iter().map(|w| w.display(s.alphabet())).collect())
                .collect()
        }
    };
    Ok((
        irr_listing(
            &levels,
            count_only,
            matches!(p.kind, Kind::Assoc | Kind::Module),
        ),
        EXIT_OK,
    ))
}

fn irr_listing(levels: &[Vec<String>], count_only: bool, from_zero: bool) -> String {
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    if count_only {
        return format!("{}\n", counts_line(&counts));
    }
    let offset = usize::from(!from_zero);
    let mut r = String::from("format: 1\ncommand: irr\n");
    for (i, level) in levels.iter().enumerate() {
        writeln!(r, "length {}: {}", i + offset, level.len()).unwrap();
        for w in level {
            let shown = if w.is_empty() { "1" } else { w };
            writeln!(r, "  {shown}").unwrap();
        }
    }
    r
}

fn cdcheck(p: &PresentationFile, max_deg: usize) -> Outcome {
    let mut r = header("cdcheck", p.kind);
    writeln!(r, "bound: {max_deg}").unwrap();
    let cond = |r: &mut String, name: &str, v: Option<bool>| {
        let shown = v.map_or("not-checked".to_string(), |b| {
            if b { "holds" } else { "fails" }.to_string()
        });
        writeln!(r, "{name}: {shown}").unwrap();
    };
    let (i, ii, iii, counts, dims) = match p.kind {
        Kind::Assoc => {
            let rep = cd_lemma_check(&p.rewrite_system()?, max_deg);
            (
                Some(rep.compositions_trivial),
                rep.leads_reducible,
                rep.irr_matches,
                rep.irr_counts,
                rep.quotient_dims,
            )
        }
        Kind::Module => {
            let rep = module_cd_check(&p.module_system()?, max_deg)?;
            (
                Some(rep.compositions_trivial),
                rep.leads_reducible,
                rep.irr_matches,
                rep.irr_counts,
                rep.quotient_dims,
            )
        }
        Kind::Dialgebra => {
            let rep = di_gsb_check_bounded(&p.di_system()?, max_deg)?;
            (
                None,
                rep.leads_reducible,
                rep.irr_matches,
                rep.irr_counts,
                rep.quotient_dims,
            )
        }
        Kind::Ac => {
            let rep = ac_gsb_check_bounded(&p.ac_system()?, max_deg);
            (
                Some(rep.compositions_trivial),
                rep.leads_reducible,
                rep.irr_matches,
                rep.irr_counts,
                rep.quotient_dims,
            )
        }
    };
    cond(&mut r, "compositions-trivial", i);
    cond(&mut r, "leads-reducible", Some(ii));
    cond(&mut r, "irr-matches-quotient", Some(iii));
    let agree = i.is_none_or(|i| i == ii) && ii == iii;
    writeln!(
        r,
        "agree: {agree}\nirr-counts: {}\nquotient-dims: {}",
        counts_line(&counts),
        counts_line(&dims)
    )
    .unwrap();
    let holds = i.unwrap_or(true) && ii && iii;
    Ok((r, exit_for(holds)))
}

fn catalog(preset: Preset) -> Outcome {
    let (name, s, action) = match preset {
        Preset::Chinese { rank, action } => {
            if rank == 0 {
                return Err(Failure::Input("--rank must be positive".into()));
            }
            (format!("chinese rank {rank}"), chinese_gsb(rank), action)
        }
        Preset::Tensor { nx, ny, action } => {
            if nx == 0 || ny == 0 {
                return Err(Failure::Input("--nx and --ny must be positive".into()));
            }
            (
                format!("tensor nx {nx} ny {ny}"),
                tensor_relations(nx, ny),
                action,
            )
        }
    };
    let file = PresentationFile {
        kind: Kind::Assoc,
        gens: s.alphabet().clone(),
        mgens: None,
        brackets: Vec::new(),
        relations: Relations::Assoc(s.elements().to_vec()),
    };
    if let Some(elem) = &action.nf {
        return nf(&file, elem);
    }
    if let Some(max_len) = action.irr {
        let levels: Vec<Vec<String>> = irr_by_length(&s, max_len)
            .iter()
            .map(|l| l.iter().map(|w| word(w, &s)).collect())
            .collect();
        return Ok((irr_listing(&levels, action.count_only, true), EXIT_OK));
    }
    if action.check {
        let mut r = format!("format: 1\ncommand: catalog\npreset: {name}\n");
        let holds = gsb_report(&mut r, &s);
        return Ok((r, exit_for(holds)));
    }
    Ok((format::print(&file), EXIT_OK))
}
