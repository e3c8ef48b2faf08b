//! The table of special values: φ at the evaluated nomes and the class
//! invariants, each shown from its closed form next to the series value.

use std::io::{self, Write};

use serde::Serialize;

use crate::closed_forms::{evaluate_closed_form, evaluate_expression};
use crate::error::Result;
use crate::invariants::{class_invariant_numeric, CLOSED_FORM_TABLE};
use crate::precision::{agree_digits, to_decimal, Context, Ratio, Real};
use crate::theta::{phi, Nome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Markdown,
    Latex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// Plain-text name such as `phi(e^-21pi)` or `G_49`.
    pub label: String,
    /// The same name in LaTeX.
    #[serde(skip)]
    pub latex: String,
    pub closed_form: String,
    pub series: String,
    pub digits_agreed: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialValues {
    pub digits: u32,
    pub phi: Vec<TableRow>,
    pub invariants: Vec<TableRow>,
}

/// `φ(e^{-kπ√n})` values: label, LaTeX, `k`, `n`, closed-form recipe.
const PHI_ROWS: [(&str, &str, u64, u64, &str); 10] = [
    ("phi(e^-pi)", r"\varphi(e^{-\pi})", 1, 1, "@phi-e-pi"),
    ("phi(e^-3pi)", r"\varphi(e^{-3\pi})", 3, 1, "@phi-e-pi*@e3-const"),
    ("phi(e^-5pi)", r"\varphi(e^{-5\pi})", 5, 1, "@phi-e-pi*@e5-const"),
    ("phi(e^-7pi)", r"\varphi(e^{-7\pi})", 7, 1, "@phi-e-pi*sqrt(@thm-e7)"),
    ("phi(e^-9pi)", r"\varphi(e^{-9\pi})", 9, 1, "@phi-e-pi*@ratio-9pisqrtn"),
    ("phi(e^-21pi)", r"\varphi(e^{-21\pi})", 21, 1, "@phi-e-pi*@thm-e21"),
    ("phi(e^-35pi)", r"\varphi(e^{-35\pi})", 35, 1, "@phi-e-pi*@thm-e35"),
    ("phi(e^-49pi)", r"\varphi(e^{-49\pi})", 49, 1, "@phi-e-pi*@thm-e49"),
    (
        "phi(e^-7pi*sqrt3)",
        r"\varphi(e^{-7\pi\sqrt{3}})",
        7,
        3,
        "@phi-e-7pi-sqrt3",
    ),
    (
        "phi(e^-7pi*sqrt7)",
        r"\varphi(e^{-7\pi\sqrt{7}})",
        7,
        7,
        "@thm1-phi-7pi-sqrt7",
    ),
];

fn row(label: String, latex: String, closed: &Real, series: &Real, digits: u32) -> TableRow {
    TableRow {
        label,
        latex,
        closed_form: to_decimal(closed, digits),
        series: to_decimal(series, digits),
        digits_agreed: agree_digits(closed, series).min(i64::from(digits)),
    }
}

pub fn special_values(ctx: &Context) -> Result<SpecialValues> {
    let digits = ctx.digits();
    let mut phis = Vec::with_capacity(PHI_ROWS.len());
    for (label, latex, k, n, recipe) in PHI_ROWS {
        let closed = evaluate_expression(recipe, ctx)?;
        let series = phi(&Nome::exp_neg_pi_sqrt(Ratio::integer(n * k * k), ctx), ctx)?;
        phis.push(row(label.into(), latex.into(), &closed, &series, digits));
    }
    let mut invariants = Vec::with_capacity(CLOSED_FORM_TABLE.len());
    for (n, id) in CLOSED_FORM_TABLE {
        let closed = evaluate_closed_form(id, ctx)?;
        let series = class_invariant_numeric(Ratio::integer(n), ctx)?;
        invariants.push(row(format!("G_{n}"), format!("G_{{{n}}}"), &closed, &series, digits));
    }
    Ok(SpecialValues {
        digits,
        phi: phis,
        invariants,
    })
}

impl SpecialValues {
    pub fn write(&self, format: TableFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            TableFormat::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            TableFormat::Markdown => {
                for (title, rows) in [("Theta values", &self.phi), ("Class invariants", &self.invariants)] {
                    writeln!(out, "## {title} ({} digits)\n", self.digits)?;
                    writeln!(out, "| value | closed form | series | digits agreed |")?;
                    writeln!(out, "|---|---|---|---|")?;
                    for r in rows {
                        writeln!(
                            out,
                            "| `{}` | {} | {} | {} |",
                            r.label, r.closed_form, r.series, r.digits_agreed
                        )?;
                    }
                    writeln!(out)?;
                }
                Ok(())
            }
            TableFormat::Latex => {
                writeln!(out, "\\begin{{tabular}}{{ll}}")?;
                writeln!(out, "\\hline")?;
                for r in self.phi.iter().chain(&self.invariants) {
                    writeln!(out, "${}$ & \\texttt{{{}}} \\\\", r.latex, r.closed_form)?;
                }
                writeln!(out, "\\hline")?;
                writeln!(out, "\\end{{tabular}}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match_series() {
        let ctx = Context::new(30).unwrap();
        let t = special_values(&ctx).unwrap();
        assert_eq!(t.phi.len(), 10);
        assert_eq!(t.invariants.len(), 10);
        for r in t.phi.iter().chain(&t.invariants) {
            assert!((25..=30).contains(&r.digits_agreed), "{}: {}", r.label, r.digits_agreed);
        }
        assert!(t.phi[0].closed_form.starts_with("1.08643481121330801457531612151"));
    }

    #[test]
    fn formats_render() {
        let ctx = Context::new(12).unwrap();
        let t = special_values(&ctx).unwrap();
        for f in [TableFormat::Json, TableFormat::Markdown, TableFormat::Latex] {
            let mut buf = Vec::new();
            t.write(f, &mut buf).unwrap();
            let s = String::from_utf8(buf).unwrap();
            assert!(s.contains("G_343") || s.contains("G_{343}"), "{f:?}");
        }
    }
}
