use std::io::Write;

use clap::ValueEnum;
use koornwinder::bressoud::{b_matrix, sans_m, sans_n};
use koornwinder::koornwinder::from_m_coeffs;
use koornwinder::kostka::{hall_littlewood_b_e_coeffs, kostka_closed, schur_b_m_coeffs, KostkaPolynomial};
use koornwinder::qtoda::{conjecture_residual, todaa_f, todab_f, TruncatedSeries};
use koornwinder::symlaurent::{e_in_m, monomial_m};
use koornwinder::transition::{build_c, build_cn_from_b};
use koornwinder::verify::{random_spectral, run_all, run_suite, Suite, SuiteReport};
use koornwinder::{ExactScalar, RatFunc, Rational};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{
    column_symbol, latex_sum, matrix_latex, params_json, poly_csv, poly_latex, LatexCoeff, Rendered,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComputeKind {
    Koornwinder,
    Monomial,
    Elementary,
    Kostka,
    Schur,
    HallLittlewood,
    #[value(name = "matrix-C", alias = "matrix-c")]
    MatrixC,
    Bressoud,
    Toda,
}

/// Which product of the Bressoud chain to print.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BressoudMatrix {
    /// The product of the two lower substitutions.
    M,
    /// The product of the two upper substitutions.
    N,
    /// The full block `N M` of `E`-coefficients.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TodaType {
    A,
    B,
}

fn check_column(cfg: &RunConfig) -> Result<(), CliError> {
    if cfg.r > cfg.n {
        return Err(CliError::Core(koornwinder::Error::Domain(format!("column length {} exceeds rank {}", cfg.r, cfg.n))));
    }
    Ok(())
}

fn toda_degree(cfg: &RunConfig) -> usize {
    cfg.degree.unwrap_or(if cfg.n <= 2 { 4 } else { 3 })
}

/// `(coefficient, column length)` pairs to JSON and LaTeX.
fn column_expansion<F: ExactScalar + LatexCoeff>(sym: &str, terms: &[(F, usize)]) -> (Value, String, Vec<Vec<String>>) {
    let json: Vec<Value> =
        terms.iter().map(|(c, k)| json!({ "column": k, "coeff": c.to_wire() })).collect();
    let latex = latex_sum(&terms.iter().map(|(c, k)| (c.clone(), column_symbol(sym, *k))).collect::<Vec<_>>());
    let mut csv = vec![vec!["column".to_string(), "coeff".to_string()]];
    csv.extend(terms.iter().map(|(c, k)| vec![k.to_string(), c.to_wire()]));
    (Value::Array(json), latex, csv)
}

fn matrix_rendered<F: ExactScalar + LatexCoeff>(
    head: Value,
    m: &koornwinder::bressoud::TriangularMatrix<F>,
) -> Rendered {
    let mut json = head;
    let rows = m.to_wire();
    json["entries"] = json!(rows);
    Rendered { json, latex: Some(matrix_latex(m)), csv: Some(rows) }
}

fn series_rendered(head: Value, f: &TruncatedSeries<Rational>) -> Rendered {
    let mut json = head;
    json["coefficients"] = series_json(f);
    let mut csv = vec![(1..=f.nvars()).map(|i| format!("e{i}")).chain(["coeff".to_string()]).collect::<Vec<_>>()];
    for (e, c) in f.terms() {
        csv.push(e.iter().map(|k| k.to_string()).chain([c.to_wire()]).collect());
    }
    Rendered { json, latex: None, csv: Some(csv) }
}

fn series_json(f: &TruncatedSeries<Rational>) -> Value {
    Value::Array(f.terms().map(|(e, c)| json!({ "exp": e, "coeff": c.to_wire() })).collect())
}

fn kostka_json(k: &KostkaPolynomial) -> Result<Value, CliError> {
    let coeffs: Vec<String> = k.coefficients()?.iter().map(|c| c.to_string()).collect();
    Ok(json!({ "l": k.l, "coefficients": coeffs, "latex": k.to_latex()? }))
}

pub fn compute(
    kind: ComputeKind,
    cfg: &RunConfig,
    matrix: BressoudMatrix,
    toda_type: TodaType,
) -> Result<Rendered, CliError> {
    let (n, r) = (cfg.n, cfg.r);
    match kind {
        ComputeKind::Koornwinder => {
            check_column(cfg)?;
            let ps = cfg.param_set(n)?;
            let c = build_c(n + 1, &ps)?;
            let row = n - r;
            // P_(1^r) = sum_k C[n-r, n-r+k] m_(1^{r-k})
            let terms: Vec<(Rational, usize)> = (0..=r).map(|k| (c.get(row, row + k).clone(), r - k)).collect();
            let mut coeffs = vec![Rational::zero(); r + 1];
            for (v, j) in &terms {
                coeffs[*j] = v.clone();
            }
            let poly = from_m_coeffs(n, &coeffs)?;
            let (_, latex, mut csv) = column_expansion("m", &terms);
            csv[0].extend(["c_row".to_string(), "c_col".to_string()]);
            let json_terms: Vec<Value> = terms
                .iter()
                .enumerate()
                .map(|(k, (v, j))| json!({ "column": j, "coeff": v.to_wire(), "c_entry": [row, row + k] }))
                .collect();
            for (k, line) in csv.iter_mut().skip(1).enumerate() {
                line.extend([row.to_string(), (row + k).to_string()]);
            }
            let json = json!({
                "kind": "koornwinder", "n": n, "r": r, "seed": cfg.seed, "params": params_json(&ps),
                "m_coefficients": json_terms, "polynomial": poly.to_json(),
            });
            Ok(Rendered { json, latex: Some(latex), csv: Some(csv) })
        }
        ComputeKind::Monomial => {
            let m = monomial_m::<Rational>(n, r)?;
            let json = json!({ "kind": "monomial", "n": n, "r": r, "polynomial": m.to_json() });
            Ok(Rendered { json, latex: Some(poly_latex(&m)), csv: Some(poly_csv(&m)) })
        }
        ComputeKind::Elementary => {
            let terms: Vec<(Rational, usize)> =
                e_in_m(n, r)?.into_iter().map(|(c, col)| (Rational(c.into()), col.r)).collect();
            let (t, latex, csv) = column_expansion("m", &terms);
            let json = json!({ "kind": "elementary", "n": n, "r": r, "terms": t });
            Ok(Rendered { json, latex: Some(latex), csv: Some(csv) })
        }
        ComputeKind::Kostka => {
            let k = kostka_closed(n, r, cfg.l)?;
            let mut json = kostka_json(&k)?;
            json["kind"] = json!("kostka");
            json["n"] = json!(n);
            json["r"] = json!(r);
            let coeffs = k.coefficients()?;
            let mut csv = vec![vec!["degree".to_string(), "coeff".to_string()]];
            csv.extend(coeffs.iter().enumerate().map(|(d, c)| vec![d.to_string(), c.to_string()]));
            Ok(Rendered { json, latex: Some(k.to_latex()?), csv: Some(csv) })
        }
        ComputeKind::Schur => {
            let terms: Vec<(Rational, usize)> = schur_b_m_coeffs(n, r)?
                .into_iter()
                .enumerate()
                .map(|(i, c)| (Rational(c.into()), r - i))
                .collect();
            let (t, latex, csv) = column_expansion("m", &terms);
            let json = json!({ "kind": "schur", "n": n, "r": r, "terms": t });
            Ok(Rendered { json, latex: Some(latex), csv: Some(csv) })
        }
        ComputeKind::HallLittlewood => {
            let t = RatFunc::indeterminate();
            let terms: Vec<(RatFunc, usize)> = hall_littlewood_b_e_coeffs(n, r, &t)?
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c, r - i))
                .collect();
            let json_terms: Vec<Value> =
                terms.iter().map(|(c, k)| json!({ "e": k, "coeff": c.to_wire() })).collect();
            let latex = latex_sum(&terms.iter().map(|(c, k)| (c.clone(), format!("E_{{{k}}}"))).collect::<Vec<_>>());
            let mut csv = vec![vec!["e".to_string(), "coeff".to_string()]];
            csv.extend(terms.iter().map(|(c, k)| vec![k.to_string(), c.to_wire()]));
            let json = json!({ "kind": "hall-littlewood", "n": n, "r": r, "variable": "t", "terms": json_terms });
            Ok(Rendered { json, latex: Some(latex), csv: Some(csv) })
        }
        ComputeKind::MatrixC => {
            let size = cfg.size.unwrap_or(8);
            let ps = cfg.param_set(size)?;
            let c = build_c(size, &ps)?;
            let head = json!({ "kind": "matrix-C", "size": size, "seed": cfg.seed, "params": params_json(&ps) });
            Ok(matrix_rendered(head, c.matrix()))
        }
        ComputeKind::Bressoud => {
            // rows beyond r = n would need E_r with r > n
            let size = cfg.size.unwrap_or(n + 1);
            if size > n + 1 {
                return Err(CliError::Core(koornwinder::Error::Domain(format!(
                    "the rank-{n} chain has blocks of size at most {}", n + 1
                ))));
            }
            let ps = cfg.param_set(n)?;
            let m = match matrix {
                BressoudMatrix::M => sans_m(n, &ps, size)?,
                BressoudMatrix::N => sans_n(n, &ps, size)?,
                BressoudMatrix::B => b_matrix(n, &ps, size)?,
            };
            let name = format!("{matrix:?}");
            let head = json!({
                "kind": "bressoud", "matrix": name, "n": n, "size": size, "seed": cfg.seed,
                "params": params_json(&ps),
            });
            Ok(matrix_rendered(head, &m))
        }
        ComputeKind::Toda => {
            let degree = toda_degree(cfg);
            let (s, q) = random_spectral(cfg.seed, 0, n.max(1));
            let f = match toda_type {
                TodaType::A => todaa_f(&s, &q, degree)?,
                TodaType::B => todab_f(&s, &q, degree)?,
            };
            let head = json!({
                "kind": "toda", "type": format!("{toda_type:?}"), "n": s.len(), "degree": degree, "seed": cfg.seed,
                "s": s.iter().map(Rational::to_wire).collect::<Vec<_>>(), "q": q.to_wire(),
            });
            Ok(series_rendered(head, &f))
        }
    }
}

/// The block of `C`, from the column recursion or (with `from_b`) from the
/// Bressoud product at rank `n`.
pub fn transition(cfg: &RunConfig, from_b: bool) -> Result<Rendered, CliError> {
    let (c, head) = if from_b {
        let ps = cfg.param_set(cfg.n + 1)?;
        let c = build_cn_from_b(cfg.n, &ps)?;
        (c, json!({ "kind": "transition", "source": "bressoud", "n": cfg.n, "seed": cfg.seed, "params": params_json(&ps) }))
    } else {
        let size = cfg.size.unwrap_or(8);
        let ps = cfg.param_set(size)?;
        let c = build_c(size, &ps)?;
        (c, json!({ "kind": "transition", "source": "recursion", "size": size, "seed": cfg.seed, "params": params_json(&ps) }))
    };
    let mut out = matrix_rendered(head, c.matrix());
    out.latex = Some(c.to_latex());
    Ok(out)
}

fn column_latex(k: usize) -> String {
    match k {
        0 => "\\varnothing".to_string(),
        1 => "(1)".to_string(),
        _ => format!("(1^{{{k}}})"),
    }
}

/// Every `K_{(1^r),(1^{r-l})}` for `0 <= l <= r`.
pub fn kostka_table(cfg: &RunConfig) -> Result<Rendered, CliError> {
    check_column(cfg)?;
    let ks: Vec<KostkaPolynomial> = (0..=cfg.r).map(|l| kostka_closed(cfg.n, cfg.r, l)).collect::<Result<_, _>>()?;
    let polys: Vec<Value> = ks.iter().map(kostka_json).collect::<Result<_, _>>()?;
    let mut latex = Vec::new();
    let mut csv = vec![vec!["l".to_string(), "coefficients".to_string(), "latex".to_string()]];
    for k in &ks {
        let body = k.to_latex()?;
        latex.push(format!("K_{{{},{}}}(t) = {body}", column_latex(k.r), column_latex(k.r - k.l)));
        let coeffs: Vec<String> = k.coefficients()?.iter().map(|c| c.to_string()).collect();
        csv.push(vec![k.l.to_string(), coeffs.join(" "), body]);
    }
    let json = json!({ "kind": "kostka", "n": cfg.n, "r": cfg.r, "polynomials": polys });
    Ok(Rendered { json, latex: Some(latex.join("\n")), csv: Some(csv) })
}

/// Runs the suites, reporting wall time on stderr; `Ok(false)` on any failed check.
pub fn verify(suite: Option<Suite>, cfg: &RunConfig) -> Result<(Rendered, bool), CliError> {
    let vc = cfg.verify_config();
    let reports: Vec<SuiteReport> = match suite {
        Some(s) => vec![run_suite(s, &vc)],
        None => run_all(&vc),
    };
    let mut err = std::io::stderr().lock();
    for rep in &reports {
        let _ = writeln!(err, "{:<16} {:>9.3}s", rep.suite, rep.elapsed.as_secs_f64());
    }
    let ok = reports.iter().all(|r| r.ok);
    let json = json!({
        "config": { "seed": vc.seed, "n": vc.n, "size": vc.size, "degree": vc.degree, "points": vc.points },
        "ok": ok,
        "suites": reports,
    });
    let mut csv = vec![["suite", "statement", "checks", "passed"].map(String::from).to_vec()];
    for rep in &reports {
        for st in &rep.statements {
            csv.push(vec![rep.suite.clone(), st.statement.clone(), st.checks.to_string(), st.passed.to_string()]);
        }
    }
    Ok((Rendered { json, latex: None, csv: Some(csv) }, ok))
}

/// Residual of the branching conjecture at sampled `(s, q)`, with the
/// eigenfunction coefficients it was built from.
pub fn verify_conjecture(cfg: &RunConfig) -> Result<(Rendered, bool), CliError> {
    let n = cfg.n.max(1);
    let degree = toda_degree(cfg);
    let mut points = Vec::new();
    let mut csv = vec![["point", "nonzero_residual_terms"].map(String::from).to_vec()];
    let mut ok = true;
    for k in 0..cfg.points as u64 {
        let (s, q) = random_spectral(cfg.seed, 1000 + k, n);
        let res = conjecture_residual(&s, &q, degree)?;
        ok &= res.is_zero();
        csv.push(vec![k.to_string(), res.len().to_string()]);
        points.push(json!({
            "s": s.iter().map(Rational::to_wire).collect::<Vec<_>>(),
            "q": q.to_wire(),
            "nonzero_residual_terms": res.len(),
            "residual": series_json(&res),
            "f_b_toda": series_json(&todab_f(&s, &q, degree)?),
        }));
    }
    let json = json!({ "kind": "toda-conjecture", "n": n, "degree": degree, "seed": cfg.seed, "ok": ok, "points": points });
    Ok((Rendered { json, latex: None, csv: Some(csv) }, ok))
}
