//! Rendering of polar, Euler, Betti and ring tables as CSV, Markdown or JSON.
//!
//! Output is a pure function of the values: the same request always renders
//! to the same bytes. CSV uses LF line endings and never needs quoting since
//! every cell is an integer or a bare token.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::grass::presentation::grassmann_relations;
use crate::grass::{poincare, schubert_ring, GrassSpec};
use crate::links::LinkProfile;
use crate::polar::PolarProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Md,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format '{other}' (expected csv, md or json)")),
        }
    }
}

fn num(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

fn json_text(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn md_row(cells: &[String]) -> String {
    format!("| {} |\n", cells.join(" | "))
}

fn md_rule(n: usize) -> String {
    format!("|{}\n", "---|".repeat(n))
}

/// Polar profiles: CSV in long form (`m,n,r,k,e`), Markdown with sizes down
/// and `k` across.
pub fn render_polar(profiles: &[PolarProfile], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("m,n,r,k,e\n");
            for p in profiles {
                for (k, e) in p.values.iter().enumerate() {
                    let _ = writeln!(out, "{},{},{},{k},{e}", p.m, p.n, p.r);
                }
            }
            out
        }
        Format::Md => {
            let width = profiles.iter().map(|p| p.values.len()).max().unwrap_or(0);
            let mut header = vec!["m×n".to_string(), "r".to_string()];
            header.extend((0..width).map(|k| format!("k={k}")));
            let mut out = md_row(&header);
            out.push_str(&md_rule(header.len()));
            for p in profiles {
                let mut row = vec![format!("{}×{}", p.m, p.n), p.r.to_string()];
                row.extend((0..width).map(|k| p.values.get(k).map(ToString::to_string).unwrap_or_default()));
                out.push_str(&md_row(&row));
            }
            out
        }
        Format::Json => json_text(Value::Array(
            profiles
                .iter()
                .map(|p| {
                    json!({
                        "m": p.m,
                        "n": p.n,
                        "r": p.r,
                        "values": p.values.iter().map(num).collect::<Vec<_>>(),
                        "raw_signs": p.raw_signs,
                    })
                })
                .collect(),
        )),
    }
}

/// One row of an Euler-characteristic table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerRow {
    pub m: u32,
    pub n: u32,
    pub s: u32,
    pub codim: u32,
    pub chi: BigInt,
}

pub fn render_euler(rows: &[EulerRow], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("m,n,s,i,chi\n");
            for r in rows {
                let _ = writeln!(out, "{},{},{},{},{}", r.m, r.n, r.s, r.codim, r.chi);
            }
            out
        }
        Format::Md => {
            let mut out = md_row(&["m".into(), "n".into(), "s".into(), "i".into(), "χ(L^i)".into()]);
            out.push_str(&md_rule(5));
            for r in rows {
                out.push_str(&md_row(&[
                    r.m.to_string(),
                    r.n.to_string(),
                    r.s.to_string(),
                    r.codim.to_string(),
                    r.chi.to_string(),
                ]));
            }
            out
        }
        Format::Json => json_text(Value::Array(
            rows.iter()
                .map(|r| json!({"m": r.m, "n": r.n, "s": r.s, "i": r.codim, "chi": num(&r.chi)}))
                .collect(),
        )),
    }
}

/// The Hilbert–Burch Euler table: `columns[m - 1][d]` is `χ` of the link of
/// dimension `d` of `M_{m,m+1}^m`. Rows are link dimensions, columns `m`.
pub fn render_hilbert_burch(columns: &[Vec<BigInt>], format: Format) -> String {
    let rows = columns.first().map_or(0, Vec::len);
    match format {
        Format::Csv => {
            let mut out = String::from("d");
            for m in 1..=columns.len() {
                let _ = write!(out, ",m{m}");
            }
            out.push('\n');
            for d in 0..rows {
                out.push_str(&d.to_string());
                for col in columns {
                    let _ = write!(out, ",{}", col[d]);
                }
                out.push('\n');
            }
            out
        }
        Format::Md => {
            let mut header = vec!["d \\ m".to_string()];
            header.extend((1..=columns.len()).map(|m| m.to_string()));
            let mut out = md_row(&header);
            out.push_str(&md_rule(header.len()));
            for d in 0..rows {
                let mut row = vec![d.to_string()];
                row.extend(columns.iter().map(|c| c[d].to_string()));
                out.push_str(&md_row(&row));
            }
            out
        }
        Format::Json => json_text(Value::Array(
            columns
                .iter()
                .enumerate()
                .map(|(i, c)| json!({"m": i + 1, "chi": c.iter().map(num).collect::<Vec<_>>()}))
                .collect(),
        )),
    }
}

pub fn render_betti(profiles: &[LinkProfile], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("m,n,s,i,k,b\n");
            for p in profiles {
                for (k, b) in p.betti.iter().enumerate() {
                    let _ = writeln!(out, "{},{},{},{},{k},{b}", p.spec.m(), p.spec.n(), p.spec.s(), p.codim);
                }
            }
            out
        }
        Format::Md => {
            let width = profiles.iter().map(|p| p.betti.len()).max().unwrap_or(0);
            let mut header = vec!["m".into(), "n".into(), "s".into(), "i".into(), "χ".into()];
            header.extend((0..width).map(|k| format!("b_{k}")));
            header.push("middle torsion".into());
            let mut out = md_row(&header);
            out.push_str(&md_rule(header.len()));
            for p in profiles {
                let mut row = vec![
                    p.spec.m().to_string(),
                    p.spec.n().to_string(),
                    p.spec.s().to_string(),
                    p.codim.to_string(),
                    p.chi.to_string(),
                ];
                row.extend((0..width).map(|k| p.betti.get(k).map(ToString::to_string).unwrap_or_default()));
                row.push(p.torsion.to_string());
                out.push_str(&md_row(&row));
            }
            out
        }
        Format::Json => json_text(Value::Array(
            profiles
                .iter()
                .map(|p| {
                    json!({
                        "m": p.spec.m(),
                        "n": p.spec.n(),
                        "s": p.spec.s(),
                        "i": p.codim,
                        "chi": num(&p.chi),
                        "middle": p.middle,
                        "betti": p.betti.iter().map(num).collect::<Vec<_>>(),
                        "middle_torsion": p.torsion.to_string(),
                    })
                })
                .collect(),
        )),
    }
}

/// Basis, Poincaré polynomial and presentation of `Grass(r, m)`.
pub fn render_ring(spec: GrassSpec, format: Format) -> String {
    let ring = schubert_ring(spec);
    let poincare = poincare(spec);
    let relations: Vec<String> = grassmann_relations(spec.r(), spec.m())
        .iter()
        .map(ToString::to_string)
        .collect();
    match format {
        Format::Csv => {
            let mut out = String::from("index,partition,degree\n");
            for (i, lam) in ring.basis().iter().enumerate() {
                let parts: Vec<String> = lam.parts().iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{i},{},{}", parts.join(" "), lam.weight());
            }
            out
        }
        Format::Md => {
            let mut out = format!("## {spec}\n\n");
            let _ = writeln!(out, "Dimension {}, rank {}.\n", spec.dim(), ring.basis().len());
            let _ = writeln!(out, "Poincaré polynomial: {poincare}\n");
            out.push_str("Presentation: Z[x_1..x_r] / J with x_i = c_i(S) and J generated by\n\n");
            for r in &relations {
                let _ = writeln!(out, "- {r}");
            }
            out.push('\n');
            out.push_str(&md_row(&["index".into(), "partition".into(), "degree".into()]));
            out.push_str(&md_rule(3));
            for (i, lam) in ring.basis().iter().enumerate() {
                out.push_str(&md_row(&[i.to_string(), lam.to_string(), lam.weight().to_string()]));
            }
            out
        }
        Format::Json => json_text(json!({
            "r": spec.r(),
            "m": spec.m(),
            "dim": spec.dim(),
            "basis": ring.basis().iter().map(|l| l.parts().to_vec()).collect::<Vec<_>>(),
            "poincare": poincare.to_dense().iter().map(num).collect::<Vec<_>>(),
            "relations": relations,
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polar::polar_profile;

    #[test]
    fn polar_csv() {
        let p = (*polar_profile(2, 3, 1).unwrap()).clone();
        assert_eq!(
            render_polar(&[p], Format::Csv),
            "m,n,r,k,e\n2,3,1,0,3\n2,3,1,1,4\n2,3,1,2,3\n2,3,1,3,0\n"
        );
    }

    #[test]
    fn polar_md_and_json() {
        let p = (*polar_profile(2, 2, 1).unwrap()).clone();
        let md = render_polar(std::slice::from_ref(&p), Format::Md);
        assert!(md.contains("| 2×2 | 1 | 2 | 2 | 2 |"));
        let js: Value = serde_json::from_str(&render_polar(&[p], Format::Json)).unwrap();
        assert_eq!(js[0]["values"][1], json!(2));
    }

    #[test]
    fn formats_parse() {
        assert_eq!("md".parse::<Format>().unwrap(), Format::Md);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn ring_csv() {
        let out = render_ring(GrassSpec::new(1, 3).unwrap(), Format::Csv);
        assert_eq!(out, "index,partition,degree\n0,,0\n1,1,1\n2,2,2\n");
    }
}
