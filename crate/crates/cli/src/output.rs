//! Rendering of computed objects. JSON is the machine contract; LaTeX and CSV
//! are conveniences for inspection and spreadsheets.

use koornwinder::bressoud::TriangularMatrix;
use koornwinder::qkernel::ParamSet;
use koornwinder::symlaurent::LaurentPoly;
use koornwinder::{ExactScalar, RatFunc, Rational};
use serde_json::{json, Value};

use crate::config::Format;
use crate::error::CliError;

/// One result in every format it supports.
pub struct Rendered {
    pub json: Value,
    pub latex: Option<String>,
    pub csv: Option<Vec<Vec<String>>>,
}

impl Rendered {
    pub fn emit(self, format: Format) -> Result<String, CliError> {
        let unsupported = || CliError::Usage(format!("{format} output is not available for this command"));
        match format {
            Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(&self.json).expect("plain data"))),
            Format::Latex => self.latex.map(|s| format!("{s}\n")).ok_or_else(unsupported),
            Format::Csv => {
                let rows = self.csv.ok_or_else(unsupported)?;
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                for row in rows {
                    w.write_record(&row).map_err(|e| CliError::Io(e.to_string()))?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
                Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
            }
        }
    }
}

pub fn params_json(ps: &ParamSet<Rational>) -> Value {
    json!({
        "p": ps.p.to_wire(), "tau": ps.tau.to_wire(),
        "a": ps.a.to_wire(), "b": ps.b.to_wire(), "c": ps.c.to_wire(), "d": ps.d.to_wire(),
    })
}

/// LaTeX for a coefficient standing in front of a basis element.
pub trait LatexCoeff {
    /// `(negative, magnitude)`; the magnitude is `None` for a unit.
    fn latex_parts(&self) -> (bool, Option<String>);
    fn latex(&self) -> String;
}

impl LatexCoeff for Rational {
    fn latex_parts(&self) -> (bool, Option<String>) {
        let neg = self.is_negative();
        let mag = if neg { -self.clone() } else { self.clone() };
        (neg, (!mag.is_one()).then(|| mag.latex()))
    }

    fn latex(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else if self.is_negative() {
            format!("-\\frac{{{}}}{{{}}}", -self.numer(), self.denom())
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
}

fn upoly_latex(p: &koornwinder::UPoly) -> String {
    // render("t") writes t^12; LaTeX needs braces around multi-digit exponents
    let raw = p.render("t");
    let mut out = String::with_capacity(raw.len() + 8);
    let mut chars = raw.chars().peekable();
    while let Some(ch) = chars.next() {
        out.push(ch);
        if ch == '^' {
            out.push('{');
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}

impl LatexCoeff for RatFunc {
    fn latex_parts(&self) -> (bool, Option<String>) {
        if self.is_one() {
            return (false, None);
        }
        if (-self.clone()).is_one() {
            return (true, None);
        }
        (false, Some(format!("\\left({}\\right)", self.latex())))
    }

    fn latex(&self) -> String {
        if self.denom().is_one() {
            upoly_latex(self.numer())
        } else {
            format!("\\frac{{{}}}{{{}}}", upoly_latex(self.numer()), upoly_latex(self.denom()))
        }
    }
}

/// `sum c_i B_i` with the usual sign and unit conventions; `basis` is empty for a constant.
pub fn latex_sum<F: ExactScalar + LatexCoeff>(terms: &[(F, String)]) -> String {
    let mut out = String::new();
    for (c, basis) in terms.iter().filter(|(c, _)| !c.is_zero()) {
        let (neg, mag) = c.latex_parts();
        let body = match (mag, basis.is_empty()) {
            (None, true) => "1".to_string(),
            (None, false) => basis.clone(),
            (Some(m), true) => m,
            (Some(m), false) => format!("{m} {basis}"),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `m_{(1^k)}`, with `k = 1` written `m_{(1)}` and `k = 0` the constant.
pub fn column_symbol(sym: &str, k: usize) -> String {
    match k {
        0 if sym == "m" => String::new(),
        1 => format!("{sym}_{{(1)}}"),
        _ => format!("{sym}_{{(1^{{{k}}})}}"),
    }
}

pub fn poly_latex<F: ExactScalar + LatexCoeff>(p: &LaurentPoly<F>) -> String {
    let terms: Vec<(F, String)> = p
        .terms()
        .map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { format!("x_{{{}}}", i + 1) } else { format!("x_{{{}}}^{{{k}}}", i + 1) })
                .collect();
            (c.clone(), mono.join(" "))
        })
        .collect();
    latex_sum(&terms)
}

pub fn poly_csv<F: ExactScalar>(p: &LaurentPoly<F>) -> Vec<Vec<String>> {
    let mut rows = vec![(1..=p.n()).map(|i| format!("e{i}")).chain(["coeff".to_string()]).collect()];
    for (e, c) in p.terms() {
        rows.push(e.iter().map(|k| k.to_string()).chain([c.to_wire()]).collect());
    }
    rows
}

pub fn matrix_latex<F: ExactScalar + LatexCoeff>(m: &TriangularMatrix<F>) -> String {
    let rows: Vec<String> =
        m.rows().iter().map(|row| row.iter().map(LatexCoeff::latex).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn sums() {
        let terms = vec![(q(1, 1), column_symbol("m", 2)), (q(0, 1), column_symbol("m", 1)), (q(2, 1), column_symbol("m", 0))];
        assert_eq!(latex_sum(&terms), "m_{(1^{2})} + 2");
        let terms = vec![(q(-1, 1), "x".to_string()), (q(-3, 4), String::new())];
        assert_eq!(latex_sum(&terms), "-x - \\frac{3}{4}");
        assert_eq!(latex_sum::<Rational>(&[]), "0");
    }

    #[test]
    fn rational_functions() {
        let t = RatFunc::indeterminate();
        let f = (t.powu(12) - &RatFunc::one()).checked_div(&t).unwrap();
        assert_eq!(f.latex(), "\\frac{t^{12} - 1}{t}");
        assert_eq!(latex_sum(&[(-RatFunc::one(), "E".to_string())]), "-E");
    }

    #[test]
    fn csv_quotes_when_needed() {
        let r = Rendered { json: Value::Null, latex: None, csv: Some(vec![vec!["a,b".into(), "1/2".into()]]) };
        assert_eq!(r.emit(Format::Csv).unwrap(), "\"a,b\",1/2\n");
        let r = Rendered { json: json!({"x": 1}), latex: None, csv: None };
        assert!(matches!(r.emit(Format::Latex), Err(CliError::Usage(_))));
    }
}
