//! One function per subcommand; each returns the rendered payload.

use carlitz_core::basealg::{parse_a_poly, Render};
use carlitz_core::carlitz::{
    bernoulli_carlitz_table, carlitz_exp, carlitz_factorial, carlitz_log, carlitz_phi, is_eisenstein, omega_minpoly,
    torsion_poly,
};
use carlitz_core::checks::{self, Outcome, Scale};
use carlitz_core::coateswiles::{cw_verify, CWReport};
use carlitz_core::lfun::{
    all_characters, character_product, okada_report, stickelberger_project, stickelberger_series, theta_eval_char,
    zeta_neg, zeta_pos_trunc, zeta_v_adic_neg, CycloCtx, GroupRingElem, Place, ThetaPoly,
};
use carlitz_core::{APoly, Error, GaloisField, Result, TruncSeries};
use serde::Serialize;

use crate::args::{Command, FieldArg, Format, PrimeArgs, ThetaArgs};

/// Rendered command output and whether every verification in it held.
pub struct Payload {
    pub text: String,
    pub verified: bool,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| if f.contains([',', '"', '\n']) { format!("\"{}\"", f.replace('"', "\"\"")) } else { f.clone() })
        .collect::<Vec<_>>()
        .join(",")
}

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = csv_line(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for r in rows {
        out.push('\n');
        out.push_str(&csv_line(&r));
    }
    out
}

fn field(arg: &FieldArg) -> Result<&'static GaloisField> {
    GaloisField::get(arg.q)
}

fn poly(text: &str, f: &'static GaloisField) -> Result<APoly> {
    parse_a_poly(text, f)
}

fn prime(arg: &PrimeArgs) -> Result<APoly> {
    let f = field(&arg.field)?;
    let pi = poly(&arg.pi, f)?;
    if !pi.is_monic() {
        return Err(Error::NotMonic(pi.render()));
    }
    if !pi.is_irreducible()? {
        return Err(Error::Reducible(pi.render()));
    }
    Ok(pi)
}

fn only_json(format: Format, cmd: &str) -> Result<()> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(Error::InvalidArgument(format!("{cmd} has no CSV form"))),
    }
}

pub fn run(cmd: &Command, format: Format) -> Result<Payload> {
    let name = cmd_name(cmd);
    if !matches!(cmd, Command::Bc { .. } | Command::Zetaneg { .. } | Command::Okada { .. }) {
        only_json(format, name)?;
    }
    let done = |text: String| Ok(Payload { text, verified: true });
    match cmd {
        Command::Phi { field: fa, a } => {
            let f = field(fa)?;
            let a = poly(a, f)?;
            let phi = carlitz_phi(&a);
            done(json(&PhiOut {
                q: f.q(),
                a: a.render(),
                tau: phi.coeffs().iter().map(|c| c.render()).collect(),
                poly: phi.to_x_poly().render(),
            }))
        }
        Command::Torsion { prime: p, n } => {
            let pi = prime(p)?;
            let t = torsion_poly(&pi, *n)?;
            done(json(&TorsionOut { q: pi.field().q(), pi: pi.render(), n: *n, poly: t.render() }))
        }
        Command::Minpoly { prime: p, n } => {
            let pi = prime(p)?;
            let m = omega_minpoly(&pi, *n)?;
            done(json(&MinpolyOut {
                q: pi.field().q(),
                pi: pi.render(),
                n: *n,
                eisenstein: is_eisenstein(&m, &pi),
                minpoly: m.render(),
            }))
        }
        Command::Exp { field: fa, precision } => {
            let f = field(fa)?;
            done(json(&SeriesOut::new(f.q(), &carlitz_exp(f, *precision)?)))
        }
        Command::Log { field: fa, precision } => {
            let f = field(fa)?;
            done(json(&SeriesOut::new(f.q(), &carlitz_log(f, *precision)?)))
        }
        Command::Factorial { field: fa, n } => {
            let f = field(fa)?;
            done(json(&FactorialOut { q: f.q(), n: *n, value: carlitz_factorial(f, *n).render() }))
        }
        Command::Bc { field: fa, n } => {
            let f = field(fa)?;
            if *n == 0 {
                return Err(Error::InvalidArgument("bc needs n >= 1".into()));
            }
            let rows: Vec<BcRow> = bernoulli_carlitz_table(f, *n)?
                .into_iter()
                .skip(1)
                .map(|r| BcRow { n: r.n, value: r.value.render(), factorial: r.factorial.render() })
                .collect();
            done(match format {
                Format::Json => json(&BcOut { q: f.q(), rows }),
                Format::Csv => csv_table(
                    &["n", "value", "factorial"],
                    rows.into_iter().map(|r| vec![r.n.to_string(), r.value, r.factorial]).collect(),
                ),
            })
        }
        Command::Zetaneg { field: fa, k, kmax } => {
            let f = field(fa)?;
            let ks: Vec<u64> = match (k, kmax) {
                (Some(k), _) => vec![*k],
                (None, Some(m)) => (1..=*m).collect(),
                (None, None) => return Err(Error::InvalidArgument("zetaneg needs --k or --kmax".into())),
            };
            let rows =
                ks.iter().map(|&k| Ok(ZetaRow { k, value: zeta_neg(f, k)?.render() })).collect::<Result<Vec<_>>>()?;
            done(match format {
                Format::Json => json(&ZetaNegOut { q: f.q(), rows }),
                Format::Csv => {
                    csv_table(&["k", "value"], rows.into_iter().map(|r| vec![r.k.to_string(), r.value]).collect())
                }
            })
        }
        Command::Zetapos { field: fa, k, d, tail } => {
            let f = field(fa)?;
            let s = zeta_pos_trunc(f, *k, *d, *tail)?;
            done(json(&ZetaPosOut {
                q: f.q(),
                k: *k,
                cutoff: *d,
                certified: s.prec(),
                series: s.to_string(),
                coeffs: terms(&s),
            }))
        }
        Command::Zetavadic { prime: p, k } => {
            let pi = prime(p)?;
            let v = zeta_v_adic_neg(&pi, *k)?;
            done(json(&ZetaVadicOut { q: pi.field().q(), pi: pi.render(), k: *k, value: v.render() }))
        }
        Command::Stickelberger { theta } => done(json(&ThetaOut::new(&theta_from(theta)?))),
        Command::Project { theta, target } => {
            let th = theta_from(theta)?;
            done(json(&ThetaOut::new(&stickelberger_project(&th, *target)?)))
        }
        Command::Charval { theta } => {
            let th = theta_from(theta)?;
            done(json(&charval(&th)?))
        }
        Command::Colemancheck => Ok(suite_payload(checks::colemancheck(Scale::Quick))),
        Command::Selftest => Ok(suite_payload(checks::selftest(Scale::Quick))),
        Command::Cwverify { field: fa, a, b, kmax } => {
            let f = field(fa)?;
            let report = cw_verify(&poly(a, f)?, &poly(b, f)?, *kmax)?;
            Ok(Payload { verified: report.passed(), text: json(&CwOut::new(&report)) })
        }
        Command::Okada { prime: p } => {
            let pi = prime(p)?;
            let r = okada_report(&pi)?;
            let rows: Vec<OkadaRowOut> = r
                .rows
                .iter()
                .map(|row| OkadaRowOut { k: row.k, bc: row.bc.render(), num_val: row.num_val, den_val: row.den_val })
                .collect();
            done(match format {
                Format::Json => json(&OkadaOut {
                    q: r.q,
                    pi: r.pi.render(),
                    rows,
                    divisible: r.divisible,
                    den_flagged: r.den_flagged,
                }),
                Format::Csv => csv_table(
                    &["k", "bc", "num_val", "den_val", "divisible"],
                    rows.into_iter()
                        .map(|row| {
                            vec![
                                row.k.to_string(),
                                row.bc,
                                row.num_val.map(|v| v.to_string()).unwrap_or_else(|| "inf".into()),
                                row.den_val.to_string(),
                                row.num_val.is_some_and(|v| v > 0).to_string(),
                            ]
                        })
                        .collect(),
                ),
            })
        }
    }
}

pub fn cmd_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Phi { .. } => "phi",
        Command::Torsion { .. } => "torsion",
        Command::Minpoly { .. } => "minpoly",
        Command::Exp { .. } => "exp",
        Command::Log { .. } => "log",
        Command::Factorial { .. } => "factorial",
        Command::Bc { .. } => "bc",
        Command::Zetaneg { .. } => "zetaneg",
        Command::Zetapos { .. } => "zetapos",
        Command::Zetavadic { .. } => "zetavadic",
        Command::Stickelberger { .. } => "stickelberger",
        Command::Project { .. } => "project",
        Command::Charval { .. } => "charval",
        Command::Colemancheck => "colemancheck",
        Command::Cwverify { .. } => "cwverify",
        Command::Okada { .. } => "okada",
        Command::Selftest => "selftest",
    }
}

fn theta_from(args: &ThetaArgs) -> Result<ThetaPoly> {
    let pi = prime(&args.prime)?;
    let f = pi.field();
    let s = args
        .s
        .iter()
        .map(|p| if p == "inf" { Ok(Place::Infinity) } else { poly(p, f).map(Place::Finite) })
        .collect::<Result<Vec<_>>>()?;
    let t = args.t.iter().map(|p| poly(p, f)).collect::<Result<Vec<_>>>()?;
    stickelberger_series(&pi, args.level, &s, &t, args.udeg)
}

fn terms<C: carlitz_core::basealg::Ring + Render>(s: &TruncSeries<C>) -> Vec<TermOut> {
    s.terms().map(|(e, c)| TermOut { e, c: c.render() }).collect()
}

fn suite_payload(outcomes: Vec<Outcome>) -> Payload {
    let verified = outcomes.iter().all(|o| o.passed);
    let checks = outcomes
        .into_iter()
        .map(|o| CheckOut { suite: o.suite, name: o.name, passed: o.passed, detail: o.detail })
        .collect();
    Payload { text: json(&SuiteOut { passed: verified, checks }), verified }
}

fn group_terms(e: &GroupRingElem) -> Vec<GroupTermOut> {
    e.terms().iter().map(|(g, &c)| GroupTermOut { rep: g.render(), c }).collect()
}

fn charval(th: &ThetaPoly) -> Result<CharvalOut> {
    let ring = th.ring()?;
    let mut characters = Vec::new();
    for chi in all_characters(&ring)? {
        let v = theta_eval_char(th, &chi)?;
        characters.push(CharOut {
            order: chi.order,
            modulus: CycloCtx::new(chi.order).modulus_text(),
            generators: chi.generators.iter().map(|g| g.render()).collect(),
            exponents: chi.exponents.clone(),
            coeffs: v.coeffs().iter().enumerate().map(|(u, c)| CharCoeffOut { u, value: c.render() }).collect(),
            value: v.render(),
        });
    }
    let product = character_product(th)?;
    Ok(CharvalOut {
        q: th.q,
        pi: th.pi.render(),
        level: th.level,
        group_order: ring.unit_count(),
        characters,
        product: product.render(),
    })
}

// --- payload shapes -----------------------------------------------------------

#[derive(Serialize)]
struct PhiOut {
    q: u32,
    a: String,
    tau: Vec<String>,
    poly: String,
}

#[derive(Serialize)]
struct TorsionOut {
    q: u32,
    pi: String,
    n: u32,
    poly: String,
}

#[derive(Serialize)]
struct MinpolyOut {
    q: u32,
    pi: String,
    n: u32,
    minpoly: String,
    eisenstein: bool,
}

#[derive(Serialize)]
struct TermOut {
    e: i64,
    c: String,
}

#[derive(Serialize)]
struct SeriesOut {
    q: u32,
    precision: i64,
    series: String,
    coeffs: Vec<TermOut>,
}

impl SeriesOut {
    fn new(q: u32, s: &TruncSeries<carlitz_core::RatFun>) -> Self {
        SeriesOut { q, precision: s.prec(), series: s.to_string(), coeffs: terms(s) }
    }
}

#[derive(Serialize)]
struct FactorialOut {
    q: u32,
    n: u64,
    value: String,
}

#[derive(Serialize)]
struct BcRow {
    n: u64,
    value: String,
    factorial: String,
}

#[derive(Serialize)]
struct BcOut {
    q: u32,
    rows: Vec<BcRow>,
}

#[derive(Serialize)]
struct ZetaRow {
    k: u64,
    value: String,
}

#[derive(Serialize)]
struct ZetaNegOut {
    q: u32,
    rows: Vec<ZetaRow>,
}

#[derive(Serialize)]
struct ZetaPosOut {
    q: u32,
    k: u64,
    #[serde(rename = "D")]
    cutoff: usize,
    certified: i64,
    series: String,
    coeffs: Vec<TermOut>,
}

#[derive(Serialize)]
struct ZetaVadicOut {
    q: u32,
    pi: String,
    k: u64,
    value: String,
}

#[derive(Serialize)]
struct GroupTermOut {
    rep: String,
    c: i128,
}

#[derive(Serialize)]
struct ThetaCoeffOut {
    u: usize,
    terms: Vec<GroupTermOut>,
}

#[derive(Serialize)]
struct ThetaOut {
    q: u32,
    pi: String,
    level: u32,
    #[serde(rename = "S")]
    s: Vec<String>,
    #[serde(rename = "T")]
    t: Vec<String>,
    coeffs: Vec<ThetaCoeffOut>,
}

impl ThetaOut {
    fn new(th: &ThetaPoly) -> Self {
        ThetaOut {
            q: th.q,
            pi: th.pi.render(),
            level: th.level,
            s: th.s.iter().map(|p| p.to_string()).collect(),
            t: th.t.iter().map(|v| v.render()).collect(),
            coeffs: th.coeffs.iter().enumerate().map(|(u, c)| ThetaCoeffOut { u, terms: group_terms(c) }).collect(),
        }
    }
}

#[derive(Serialize)]
struct CharCoeffOut {
    u: usize,
    value: String,
}

#[derive(Serialize)]
struct CharOut {
    order: u64,
    modulus: String,
    generators: Vec<String>,
    exponents: Vec<u64>,
    coeffs: Vec<CharCoeffOut>,
    value: String,
}

#[derive(Serialize)]
struct CharvalOut {
    q: u32,
    pi: String,
    level: u32,
    group_order: u64,
    characters: Vec<CharOut>,
    product: String,
}

#[derive(Serialize)]
struct CwRowOut {
    k: u32,
    lhs: String,
    rhs: String,
    equal: bool,
}

#[derive(Serialize)]
struct CwOut {
    q: u32,
    a: String,
    b: String,
    rows: Vec<CwRowOut>,
}

impl CwOut {
    fn new(r: &CWReport) -> Self {
        CwOut {
            q: r.q,
            a: r.a.render(),
            b: r.b.render(),
            rows: r
                .rows
                .iter()
                .map(|row| CwRowOut { k: row.k, lhs: row.lhs.render(), rhs: row.rhs.render(), equal: row.equal })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct OkadaRowOut {
    k: u64,
    bc: String,
    num_val: Option<u32>,
    den_val: u32,
}

#[derive(Serialize)]
struct OkadaOut {
    q: u32,
    pi: String,
    rows: Vec<OkadaRowOut>,
    divisible: Vec<u64>,
    den_flagged: Vec<u64>,
}

#[derive(Serialize)]
struct CheckOut {
    suite: &'static str,
    name: &'static str,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct SuiteOut {
    passed: bool,
    checks: Vec<CheckOut>,
}
