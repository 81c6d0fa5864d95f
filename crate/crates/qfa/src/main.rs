//! Command-line front end: exact computations in the quantized coordinate
//! and enveloping algebras of SL(2) at an odd root of unity, plus the
//! generic quantum-matrix rewriting engine.
//!
//! Exit codes: 0 on success, 1 when a verification or computation fails,
//! 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use qfa::bimodule::birep::{is_indecomposable_bi, loewy_bi, BiRep};
use qfa::bimodule::filtration::build_filtration;
use qfa::coeff::{gauss_binom, gauss_binom_at, gauss_int, gauss_int_at};
use qfa::oq::algebra::{Letter, OqElem};
use qfa::oq::window::Window;
use qfa::qmatrix;
use qfa::uq::engine::Engine;
use qfa::uq::subspace::Subspace;
use qfa::verify;

#[derive(Parser)]
#[command(
    name = "qfa",
    version,
    about = "Exact computations for quantized SL(2) at an odd root of unity"
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Balanced quantum integers and binomial coefficients
    Gauss {
        #[command(subcommand)]
        what: GaussCmd,
    },
    /// Dimension, weights and character of a finite-dimensional module
    Module {
        /// Module family: weyl, dual-weyl, simple or tilting
        kind: String,
        /// Highest weight
        n: u32,
        /// Odd order of the root of unity
        #[arg(long, default_value_t = 3)]
        ell: u32,
    },
    /// Filtration report for one linkage block of coefficient bimodules
    Filtration {
        /// Odd order of the root of unity
        #[arg(long, default_value_t = 3)]
        ell: u32,
        /// Smallest weight of the linkage block (0 <= block <= ell-2)
        #[arg(long, default_value_t = 0)]
        block: u32,
        /// Number of filtration steps beyond the first member
        #[arg(long, default_value_t = 1)]
        depth: usize,
        /// Seed for the randomized isomorphism certificates
        #[arg(long, default_value_t = 11)]
        seed: u64,
    },
    /// Basis of the cocommutative elements of bounded degree
    Cocommutative {
        /// Odd order of the root of unity
        #[arg(long, default_value_t = 3)]
        ell: u32,
        /// Degree bound
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Straighten a quantum-matrix expression onto the normal-form basis
    QmatrixReduce {
        /// Matrix size
        #[arg(long, default_value_t = 2)]
        n: u8,
        /// Expression in the generators X[i,j], the parameter v and rationals
        #[arg(long)]
        expr: String,
    },
    /// Run the verification suite and report one line per check
    Verify {
        /// Run the complete battery (several minutes) instead of the quick subset
        #[arg(long, alias = "paper-suite")]
        full_suite: bool,
        /// Seed for the randomized isomorphism certificates
        #[arg(long, default_value_t = 11)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GaussCmd {
    /// Balanced quantum integer [n]
    Int {
        n: i64,
        /// Evaluate at a primitive root of unity of this odd order
        #[arg(long)]
        ell: Option<u32>,
    },
    /// Balanced binomial coefficient [n choose m]
    Binom {
        n: i64,
        m: u32,
        /// Evaluate at a primitive root of unity of this odd order
        #[arg(long)]
        ell: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type CmdResult = Result<(), (u8, String)>;

fn run(cli: &Cli) -> CmdResult {
    match &cli.cmd {
        Cmd::Gauss { what } => gauss(cli.json, what),
        Cmd::Module { kind, n, ell } => module(cli.json, kind, *n, *ell),
        Cmd::Filtration { ell, block, depth, seed } => {
            filtration(cli.json, *ell, *block, *depth, *seed)
        }
        Cmd::Cocommutative { ell, degree } => cocommutative(cli.json, *ell, *degree),
        Cmd::QmatrixReduce { n, expr } => qmatrix_reduce(cli.json, *n, expr),
        Cmd::Verify { full_suite, seed } => run_verify(cli.json, *full_suite, *seed),
    }
}

fn check_ell(ell: u32) -> Result<(), (u8, String)> {
    if ell < 3 || ell % 2 == 0 {
        Err((2, format!("--ell must be odd and at least 3, got {ell}")))
    } else {
        Ok(())
    }
}

fn gauss(json: bool, what: &GaussCmd) -> CmdResult {
    let (label, generic, special) = match what {
        GaussCmd::Int { n, ell } => (format!("[{n}]"), gauss_int(*n), ell.map(|l| (l, gauss_int_at(*n, l)))),
        GaussCmd::Binom { n, m, ell } => (
            format!("[{n} choose {m}]"),
            gauss_binom(*n, *m),
            ell.map(|l| (l, gauss_binom_at(*n, *m, l))),
        ),
    };
    if let Some((l, _)) = special {
        check_ell(l)?;
    }
    let value = match &special {
        Some((_, c)) => format!("{c}"),
        None => format!("{generic}"),
    };
    if json {
        println!(
            "{}",
            json!({
                "expression": label,
                "value": value,
                "ell": special.as_ref().map(|(l, _)| l),
            })
        );
    } else {
        println!("{value}");
    }
    Ok(())
}

fn module(json: bool, kind: &str, n: u32, ell: u32) -> CmdResult {
    check_ell(ell)?;
    let eng = Engine::new(ell);
    let rep = match kind {
        "weyl" => eng.weyl(n),
        "dual-weyl" => eng.dual_weyl(n),
        "simple" => eng.simple(n),
        "tilting" => eng.tilting(n),
        other => {
            return Err((
                2,
                format!("unknown module kind '{other}': use weyl, dual-weyl, simple or tilting"),
            ))
        }
    };
    let ch = rep.character();
    if json {
        println!(
            "{}",
            json!({
                "kind": kind,
                "n": n,
                "ell": ell,
                "dim": rep.dim(),
                "weights": rep.weights(),
                "character": format!("{ch}"),
            })
        );
    } else {
        println!("dim {}", rep.dim());
        println!("character {ch}");
    }
    Ok(())
}

fn filtration(json: bool, ell: u32, block: u32, depth: usize, seed: u64) -> CmdResult {
    check_ell(ell)?;
    let eng = Engine::new(ell);
    let f = build_filtration(&eng, block, depth).map_err(|e| (2, e))?;
    let dims: Vec<usize> = (0..f.ns.len()).map(|i| f.member(i).dim()).collect();
    let mut isos = Vec::new();
    let mut all_certified = true;
    for i in 0..f.ns.len() {
        let certified = f.layer_iso(i, seed).is_some();
        all_certified &= certified;
        isos.push((i, f.ns[i], certified));
    }
    let top = f.member(f.ns.len() - 1);
    let mut simple_pair = |a: u32, b: u32| BiRep::external(&eng.simple(a), &eng.simple(b));
    let ls = loewy_bi(&top, &mut simple_pair);
    let indecomposable = is_indecomposable_bi(&top);
    if json {
        println!(
            "{}",
            json!({
                "ell": ell,
                "block": block,
                "sequence": f.ns,
                "P_dims": dims,
                "quotient_isos": isos
                    .iter()
                    .map(|(i, n, certified)| json!({
                        "i": i,
                        "target": format!("dual_weyl({n}) (x) dual_weyl({n})"),
                        "certified": certified,
                    }))
                    .collect::<Vec<_>>(),
                "loewy": {
                    "layers": ls.radical_layers,
                    "rigid": ls.rigid,
                    "indecomposable": indecomposable,
                },
            })
        );
    } else {
        println!("sequence {:?}", f.ns);
        println!("member dims {dims:?}");
        for (i, n, certified) in &isos {
            println!(
                "layer {i}: dual_weyl({n}) (x) dual_weyl({n}) {}",
                if *certified { "certified" } else { "NOT certified" }
            );
        }
        println!(
            "top member: layers {:?}, rigid {}, indecomposable {}",
            ls.radical_layers, ls.rigid, indecomposable
        );
    }
    if all_certified {
        Ok(())
    } else {
        Err((1, "a filtration layer could not be certified".into()))
    }
}

fn cocommutative(json: bool, ell: u32, degree: u32) -> CmdResult {
    check_ell(ell)?;
    let w = Window::new(ell, degree, None);
    let basis = w.cocommutative_basis();
    // independent cross-check: the powers of a + d span the same space
    let mut span = Subspace::empty(ell, w.dim());
    for b in &basis {
        span.insert(w.to_vec(b).expect("basis vectors live in the window"));
    }
    let tr = OqElem::gen_letter(ell, Letter::A).add(&OqElem::gen_letter(ell, Letter::D));
    let mut powers = Subspace::empty(ell, w.dim());
    let mut pw = OqElem::one(ell);
    for _ in 0..=degree {
        powers.insert(w.to_vec(&pw).expect("trace powers live in the window"));
        pw = pw.mul(&tr);
    }
    let spans_traces = span.equals(&powers);
    if json {
        println!(
            "{}",
            json!({
                "ell": ell,
                "degree": degree,
                "dim": basis.len(),
                "basis": basis.iter().map(|b| format!("{b}")).collect::<Vec<_>>(),
                "spans_trace_powers": spans_traces,
            })
        );
    } else {
        println!("dim {}", basis.len());
        for b in &basis {
            println!("{b}");
        }
        println!(
            "spans the powers of a + d: {}",
            if spans_traces { "yes" } else { "NO" }
        );
    }
    if spans_traces {
        Ok(())
    } else {
        Err((1, "cocommutative basis does not span the trace powers".into()))
    }
}

fn qmatrix_reduce(json: bool, n: u8, expr: &str) -> CmdResult {
    if n < 2 {
        return Err((2, "--n must be at least 2".into()));
    }
    let reduced = qmatrix::parse(n, expr).map_err(|e| (2, e))?;
    let text = qmatrix::display(&reduced);
    if json {
        println!("{}", json!({ "n": n, "input": expr, "reduced": text }));
    } else {
        println!("{text}");
    }
    Ok(())
}

fn run_verify(json: bool, full: bool, seed: u64) -> CmdResult {
    let checks = verify::run_suite(full, seed);
    let failures = checks.iter().filter(|c| !c.pass).count();
    if json {
        println!(
            "{}",
            json!({
                "full": full,
                "seed": seed,
                "checks": checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                    .collect::<Vec<_>>(),
                "failures": failures,
            })
        );
    } else {
        for c in &checks {
            println!("{} {} — {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
    }
    if failures == 0 {
        Ok(())
    } else {
        Err((1, format!("{failures} verification check(s) failed")))
    }
}
