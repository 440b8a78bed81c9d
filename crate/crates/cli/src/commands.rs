use std::path::PathBuf;

use clap::{Parser, Subcommand};
use fibform_core::gamma::sqrt_p_star;
use fibform_core::modarith::is_prime;
use fibform_core::oracle::{brute_force_case1, brute_force_case2, SearchBudget};
use fibform_core::{
    compute_gamma, extract_k_coordinates, fib_pair, fundamental_unit4, gauss_period_check,
    generate_solutions, integral_basis_coords, norm_plus4_unit, verify_norm_product,
    verify_representation, verify_sigma5_relation, FormCase, PellUnit, PrimeContext,
    Representation, ZAlpha,
};
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{CliError, EXIT_OK, EXIT_VERIFICATION};
use crate::output::{render, Format, Tabular};
use crate::record::ResultRecord;
use crate::scan::{scan, ScanOptions};

#[derive(Debug, Parser)]
#[command(name = "fibform", version)]
#[command(
    about = "Construct and verify 4F_p = u^2 - p v^2 (p = 1 mod 4) and 4F_p = 5u^2 + p v^2 (p = 3 mod 4)"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct and verify the representation of 4F_p
    Represent { p: u64 },

    /// Represent every prime in [p_min, p_max], resuming from the cache
    Scan {
        p_min: u64,
        p_max: u64,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Line-delimited JSON results cache
        #[arg(long, env = "FIBFORM_CACHE", default_value = "fibform-cache.jsonl")]
        cache: PathBuf,
    },

    /// Units of Q(sqrt p) and the first k solutions of its orbit (p = 1 mod 4)
    Pell { p: u64, k: usize },

    /// Check a candidate (u, v); the form is chosen by p mod 4
    Verify {
        p: u64,
        #[arg(allow_hyphen_values = true)]
        u: BigInt,
        #[arg(allow_hyphen_values = true)]
        v: BigInt,
    },

    /// Coordinates of Gamma and the identities it satisfies (p >= 7)
    GammaDump { p: u64 },

    /// Brute-force search for a representation (small p only)
    Oracle {
        p: u64,
        /// Largest v tried for p = 1 mod 4
        #[arg(long, default_value_t = SearchBudget::default().max_v)]
        max_v: u64,
        /// Refuse primes above this
        #[arg(long, default_value_t = SearchBudget::default().enabled_max_p)]
        max_p: u64,
    },

    /// The n-th Fibonacci number
    Fib { n: u64 },
}

/// Rendered standard output plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn checked(stdout: String, ok: bool) -> Self {
        Outcome {
            stdout,
            exit_code: if ok { EXIT_OK } else { EXIT_VERIFICATION },
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Represent { p } => {
            let record = ResultRecord::build(*p)?;
            let ok = record.identity_ok;
            Ok(Outcome::checked(render(&[record], format)?, ok))
        }
        Command::Scan {
            p_min,
            p_max,
            jobs,
            cache,
        } => {
            let summary = scan(&ScanOptions {
                p_min: *p_min,
                p_max: *p_max,
                jobs: *jobs,
                cache: cache.clone(),
            })?;
            let ok = summary.failures == 0;
            Ok(Outcome::checked(render(&[summary], format)?, ok))
        }
        Command::Pell { p, k } => {
            let rows = pell_rows(*p, *k)?;
            let ok = rows.iter().all(|r| r.ok);
            Ok(Outcome::checked(render(&rows, format)?, ok))
        }
        Command::Verify { p, u, v } => {
            let row = verify_row(*p, u, v)?;
            let ok = row.identity_ok;
            Ok(Outcome::checked(render(&[row], format)?, ok))
        }
        Command::GammaDump { p } => {
            let dump = gamma_dump(*p)?;
            let ok = dump.norm_product_ok
                && dump.sigma5_ok
                && dump.gauss_period_ok
                && dump.sqrt_p_star_ok;
            Ok(Outcome::checked(render(&[dump], format)?, ok))
        }
        Command::Oracle { p, max_v, max_p } => {
            let row = oracle_row(
                *p,
                &SearchBudget {
                    max_v: *max_v,
                    enabled_max_p: *max_p,
                },
            )?;
            let ok = row.identity_ok;
            Ok(Outcome::checked(render(&[row], format)?, ok))
        }
        Command::Fib { n } => {
            let pair = fib_pair(*n);
            let row = FibRow {
                n: *n,
                fib: pair.fn0.to_string(),
                next: pair.fn1.to_string(),
            };
            Ok(Outcome::checked(render(&[row], format)?, true))
        }
    }
}

fn prime_argument(p: u64) -> Result<(), CliError> {
    if p == 2 {
        return Err(CliError::Unsupported(
            "p = 2 is not covered by either form".into(),
        ));
    }
    if !is_prime(p) {
        return Err(CliError::Usage(format!("{p} is not prime")));
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct PellRow {
    pub kind: &'static str,
    pub p: u64,
    pub x: String,
    pub y: String,
    /// `X^2 - pY^2` for units, `u^2 - pv^2` for solutions.
    pub value: String,
    pub ok: bool,
}

impl Tabular for PellRow {
    fn headers() -> Vec<&'static str> {
        vec!["kind", "p", "x", "y", "value", "ok"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.kind.to_string(),
            self.p.to_string(),
            self.x.clone(),
            self.y.clone(),
            self.value.clone(),
            self.ok.to_string(),
        ]
    }
}

fn unit_row(kind: &'static str, p: u64, unit: &PellUnit) -> PellRow {
    PellRow {
        kind,
        p,
        x: unit.x.to_string(),
        y: unit.y.to_string(),
        value: unit.norm4.to_string(),
        ok: unit.satisfies(p),
    }
}

pub fn pell_rows(p: u64, k: usize) -> Result<Vec<PellRow>, CliError> {
    prime_argument(p)?;
    if p % 4 != 1 {
        return Err(CliError::Usage(format!(
            "pell needs p = 1 mod 4, got p = {p}"
        )));
    }
    let mut rows = vec![
        unit_row("fundamental", p, &fundamental_unit4(p)?),
        unit_row("plus4", p, &norm_plus4_unit(p)?),
    ];
    rows.extend(generate_solutions(p, k)?.iter().map(|rep| PellRow {
        kind: "solution",
        p,
        x: rep.u.to_string(),
        y: rep.v.to_string(),
        value: rep.form_value().to_string(),
        ok: verify_representation(rep),
    }));
    Ok(rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub p: u64,
    pub case_tag: String,
    pub u: String,
    pub v: String,
    pub form_value: String,
    pub target: String,
    pub identity_ok: bool,
}

impl Tabular for VerifyRow {
    fn headers() -> Vec<&'static str> {
        vec!["p", "case", "u", "v", "form_value", "target", "identity_ok"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.case_tag.clone(),
            self.u.clone(),
            self.v.clone(),
            self.form_value.clone(),
            self.target.clone(),
            self.identity_ok.to_string(),
        ]
    }
}

pub fn verify_row(p: u64, u: &BigInt, v: &BigInt) -> Result<VerifyRow, CliError> {
    prime_argument(p)?;
    let rep = Representation::new(p, FormCase::for_prime(p), u.clone(), v.clone());
    Ok(VerifyRow {
        p,
        case_tag: rep.case.to_string(),
        u: rep.u.to_string(),
        v: rep.v.to_string(),
        form_value: rep.form_value().to_string(),
        target: rep.target.to_string(),
        identity_ok: verify_representation(&rep),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GammaDump {
    pub p: u64,
    pub p_star: i64,
    pub g: u64,
    pub w: String,
    pub x: String,
    pub y: String,
    pub z: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
    pub norm_product_ok: bool,
    pub sigma5_ok: bool,
    pub gauss_period_ok: bool,
    pub sqrt_p_star_ok: bool,
}

impl Tabular for GammaDump {
    fn headers() -> Vec<&'static str> {
        vec![
            "p",
            "p*",
            "g",
            "(w, x, y, z)",
            "(a, b, c, d)",
            "norm",
            "sigma5",
            "gauss",
            "sqrt_p*",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.p_star.to_string(),
            self.g.to_string(),
            format!("({}, {}, {}, {})", self.w, self.x, self.y, self.z),
            format!("({}, {}, {}, {})", self.a, self.b, self.c, self.d),
            self.norm_product_ok.to_string(),
            self.sigma5_ok.to_string(),
            self.gauss_period_ok.to_string(),
            self.sqrt_p_star_ok.to_string(),
        ]
    }
}

pub fn gamma_dump(p: u64) -> Result<GammaDump, CliError> {
    prime_argument(p)?;
    let ctx = PrimeContext::new(p)?;
    let gamma = compute_gamma(&ctx);
    let k = extract_k_coordinates(&ctx, &gamma)?;
    let ib = integral_basis_coords(&k)?;
    let root = sqrt_p_star(&ctx);
    let sqrt_p_star_ok = root.mul(&root)?.as_constant() == Some(&ZAlpha::from_int(ctx.p_star));
    Ok(GammaDump {
        p,
        p_star: ctx.p_star,
        g: ctx.g,
        w: k.w.to_string(),
        x: k.x.to_string(),
        y: k.y.to_string(),
        z: k.z.to_string(),
        a: ib.a.to_string(),
        b: ib.b.to_string(),
        c: ib.c.to_string(),
        d: ib.d.to_string(),
        norm_product_ok: verify_norm_product(&ctx, &gamma)?,
        sigma5_ok: verify_sigma5_relation(&ctx, &gamma)?,
        gauss_period_ok: gauss_period_check(&ctx),
        sqrt_p_star_ok,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleRow {
    pub p: u64,
    pub case_tag: String,
    pub u: String,
    pub v: String,
    pub identity_ok: bool,
}

impl Tabular for OracleRow {
    fn headers() -> Vec<&'static str> {
        vec!["p", "case", "u", "v", "identity_ok"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.case_tag.clone(),
            self.u.clone(),
            self.v.clone(),
            self.identity_ok.to_string(),
        ]
    }
}

pub fn oracle_row(p: u64, budget: &SearchBudget) -> Result<OracleRow, CliError> {
    prime_argument(p)?;
    let case = FormCase::for_prime(p);
    let (u, v) = match case {
        FormCase::CaseI => brute_force_case1(p, budget)?,
        FormCase::CaseII => brute_force_case2(p, budget)?,
    };
    let rep = Representation::new(p, case, u, v);
    Ok(OracleRow {
        p,
        case_tag: case.to_string(),
        u: rep.u.to_string(),
        v: rep.v.to_string(),
        identity_ok: verify_representation(&rep),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FibRow {
    pub n: u64,
    pub fib: String,
    pub next: String,
}

impl Tabular for FibRow {
    fn headers() -> Vec<&'static str> {
        vec!["n", "F_n", "F_n+1"]
    }

    fn row(&self) -> Vec<String> {
        vec![self.n.to_string(), self.fib.clone(), self.next.clone()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pell(p: u64, k: usize) -> Vec<(String, String, String)> {
        pell_rows(p, k)
            .unwrap()
            .into_iter()
            .map(|r| (r.x, r.y, r.value))
            .collect()
    }

    fn s(x: &str, y: &str, v: &str) -> (String, String, String) {
        (x.into(), y.into(), v.into())
    }

    #[test]
    fn pell_report() {
        assert_eq!(
            pell(13, 2),
            vec![
                s("3", "1", "-4"),
                s("11", "3", "4"),
                s("42", "8", "932"),
                s("387", "107", "932")
            ]
        );
        assert_eq!(pell(5, 1)[2], s("5", "1", "20"));
        assert!(matches!(pell_rows(7, 1), Err(CliError::Usage(_))));
        assert!(matches!(pell_rows(2, 1), Err(CliError::Unsupported(_))));
    }

    #[test]
    fn verify_rows() {
        assert!(verify_row(13, &42.into(), &8.into()).unwrap().identity_ok);
        assert!(!verify_row(13, &42.into(), &9.into()).unwrap().identity_ok);
        assert!(verify_row(19, &34.into(), &24.into()).unwrap().identity_ok);
        assert!(verify_row(3, &1.into(), &1.into()).unwrap().identity_ok);
        assert!(verify_row(5, &(-5).into(), &1.into()).unwrap().identity_ok);
        assert!(matches!(
            verify_row(15, &1.into(), &1.into()),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn gamma_dump_for_seven_and_thirteen() {
        let d = gamma_dump(7).unwrap();
        assert_eq!(
            [d.w, d.x, d.y, d.z],
            ["0", "3/2", "1/2", "0"].map(String::from)
        );
        assert_eq!(
            [d.a, d.b, d.c, d.d],
            ["-2", "3", "1", "0"].map(String::from)
        );
        assert!(d.norm_product_ok && d.sigma5_ok && d.gauss_period_ok && d.sqrt_p_star_ok);
        let d = gamma_dump(13).unwrap();
        assert_eq!((d.x.as_str(), d.z.as_str()), ("0", "0"));
        assert_eq!((d.w.as_str(), d.y.as_str()), ("21", "4"));
        assert!(matches!(gamma_dump(5), Err(CliError::Unsupported(_))));
        assert!(matches!(gamma_dump(3), Err(CliError::Unsupported(_))));
        assert!(matches!(gamma_dump(2), Err(CliError::Unsupported(_))));
        assert!(matches!(gamma_dump(9), Err(CliError::Usage(_))));
    }

    #[test]
    fn oracle_rows() {
        let b = SearchBudget::default();
        let r = oracle_row(17, &b).unwrap();
        assert_eq!((r.u.as_str(), r.v.as_str()), ("94", "12"));
        assert!(matches!(oracle_row(61, &b), Err(CliError::Unsupported(_))));
    }
}
