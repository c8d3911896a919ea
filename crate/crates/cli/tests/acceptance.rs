//! End-to-end acceptance run: one line per criterion, nonzero exit on any
//! failure.

use std::process::Command;
use std::time::Instant;

use carlitz_core::basealg::{parse_a_poly, Ring};
use carlitz_core::checks::{find, Scale};
use carlitz_core::coateswiles::cw_verify;
use carlitz_core::{APoly, GaloisField};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn full(names: &[&str]) -> Outcome {
    for name in names {
        let check = find(name).ok_or_else(|| format!("no check named {name}"))?;
        (check.run)(Scale::Full).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

fn pairs(q: u64, d: usize) -> Vec<(APoly, APoly)> {
    let f = GaloisField::get(q).expect("prime power");
    let polys: Vec<APoly> = APoly::below_degree(f, d + 1).filter(|a| !a.is_zero()).collect();
    let mut v = Vec::new();
    for a in &polys {
        for b in polys.iter().filter(|b| *b != a) {
            v.push((a.clone(), b.clone()));
        }
    }
    v
}

fn coates_wiles_identity() -> Outcome {
    for (q, d, kmax) in [(2, 2, 8), (3, 1, 12)] {
        for (a, b) in pairs(q, d) {
            let r = cw_verify(&a, &b, kmax).map_err(|e| e.to_string())?;
            if r.rows.len() != kmax as usize {
                return Err(format!("q={q} a={a} b={b}: {} rows", r.rows.len()));
            }
            if let Some(row) = r.rows.iter().find(|r| !r.equal) {
                return Err(format!("q={q} a={a} b={b}: {row}"));
            }
        }
    }
    let f = GaloisField::get(2).expect("field");
    let t = parse_a_poly("T", f).expect("literal");
    let one = parse_a_poly("1", f).expect("literal");
    let row = cw_verify(&t, &one, 1).map_err(|e| e.to_string())?.rows.remove(0);
    let want = carlitz_core::basealg::parse_ratfun("1/T", f).expect("literal");
    if row.lhs != want || row.rhs != want {
        return Err(format!("q=2 (T, 1), k=1: {row}"));
    }
    Ok(())
}

fn coates_wiles_vanishing() -> Outcome {
    for (a, b) in pairs(3, 1) {
        let r = cw_verify(&a, &b, 11).map_err(|e| e.to_string())?;
        for row in r.rows.iter().filter(|r| r.k % 2 == 1) {
            if !row.lhs.is_zero() || !row.rhs.is_zero() {
                return Err(format!("a={a} b={b}: {row}"));
            }
        }
    }
    Ok(())
}

const STICKELBERGER: &[&str] =
    &["--q", "2", "--pi", "T^2+T+1", "--level", "2", "--S", "inf", "--T", "T", "--udeg", "12"];

fn invocations() -> Vec<Vec<&'static str>> {
    let mut v: Vec<Vec<&str>> = vec![
        vec!["phi", "--q", "3", "--a", "T^2+1"],
        vec!["torsion", "--q", "2", "--pi", "T^2+T+1", "--n", "2"],
        vec!["minpoly", "--q", "3", "--pi", "T", "--n", "2"],
        vec!["exp", "--q", "3", "--precision", "12"],
        vec!["log", "--q", "2", "--precision", "10"],
        vec!["factorial", "--q", "3", "--n", "17"],
        vec!["bc", "--q", "3", "--n", "12"],
        vec!["bc", "--q", "2", "--n", "8", "--format", "csv"],
        vec!["zetaneg", "--q", "3", "--kmax", "10"],
        vec!["zetaneg", "--q", "4", "--k", "5", "--format", "csv"],
        vec!["zetapos", "--q", "2", "--k", "2", "--D", "3"],
        vec!["zetavadic", "--q", "3", "--pi", "T^2+1", "--k", "4"],
        vec!["colemancheck"],
        vec!["cwverify", "--q", "3", "--a", "T", "--b", "T+2", "--kmax", "8"],
        vec!["okada", "--q", "3", "--pi", "T^2+1"],
        vec!["okada", "--q", "2", "--pi", "T^2+T+1", "--format", "csv"],
        vec!["selftest"],
    ];
    for cmd in ["stickelberger", "charval"] {
        let mut c = vec![cmd];
        c.extend_from_slice(STICKELBERGER);
        v.push(c);
    }
    let mut c = vec!["project"];
    c.extend_from_slice(STICKELBERGER);
    c.extend_from_slice(&["--target", "1"]);
    v.push(c);
    v
}

fn run_cli(args: &[&str], threads: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_carlitz"))
        .args(args)
        .args(["--threads", threads])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    for args in invocations() {
        let first = run_cli(&args, "1")?;
        let again = run_cli(&args, "1")?;
        let wide = run_cli(&args, "4")?;
        if first != again {
            return Err(format!("{args:?}: two runs differ"));
        }
        if first != wide {
            return Err(format!("{args:?}: --threads 1 and --threads 4 differ"));
        }
    }
    Ok(())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("coates-wiles identity, q=2 deg<=2 k<=8, q=3 deg<=1 k<=12", Box::new(coates_wiles_identity)),
        ("coates-wiles vanishing for odd k <= 11 at q=3", Box::new(coates_wiles_vanishing)),
        (
            "coleman fixed points and multiplicativity",
            Box::new(|| full(&["coleman_fixed_points", "coleman_multiplicative"])),
        ),
        ("norm compatibility of evaluation at omega", Box::new(|| full(&["ev_norm_compatible"]))),
        (
            "eisenstein towers and N(omega_2) = omega_1",
            Box::new(|| full(&["omega_eisenstein", "tower_norm_compatible"])),
        ),
        ("unit criterion over the order-3 group", Box::new(|| full(&["unit_criterion"]))),
        (
            "stickelberger worked example, characters, tail",
            Box::new(|| full(&["theta_worked_example", "theta_tail_vanishing", "character_factorization"])),
        ),
        ("projection level 2 -> 1 matches native level 1", Box::new(|| full(&["projection_compatible"]))),
        (
            "zeta trivial zeros and euler-factor identity",
            Box::new(|| full(&["trivial_zeros", "euler_factor_identity"])),
        ),
        ("1/e_C coefficients against BC_k / Pi(k)", Box::new(|| full(&["inverse_exp_coefficients"]))),
        (
            "hasse reconstruction and delta_k equivariance",
            Box::new(|| full(&["hasse_reconstruction", "cw_equivariance"])),
        ),
        ("byte-identical CLI output across runs and thread counts", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {label} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {label} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
