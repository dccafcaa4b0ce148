//! Command-line front end. `run` takes the argument vector and returns
//! (exit code, stdout, stderr) so the binary stays a thin wrapper.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::AlgebraTag;
use crate::curve_file::{load_curve, parse_json, GhostFile};
use crate::error::{Error, Result};
use crate::ktheory::{curve_numerics, fm_partners, slope_orbits};
use crate::local_data::{
    complex_point_datum, klein_local_datum, local_skewness, skewness, witt_local_datum, PointDatum, WittPointClass,
};
use crate::report::{
    ClassifyReport, FamilyReport, GhostReport, GhostShift, InvariantsReport, JsonRational, LocalReport,
    SkewCentreReport, SlopesReport, ZooEntryReport, ZooReport,
};
use crate::skew_series::{centre_basis, dim_over_centre, dim_over_centre_by_basis, parse_twist};
use crate::weighted_curve::ghost_group;
use crate::zoo::{domestic_report, enumerate_chi_zero, enumerate_domestic, table, zoo_report, ZooEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZooClass {
    Tubular,
    Elliptic,
    Domestic,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "nccurve", about = "Invariants of weighted noncommutative real curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full invariant report of a curve file
    Invariants {
        file: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Domestic / elliptic / tubular / wild
    Classify {
        file: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Curves with nonnegative orbifold Euler characteristic
    Zoo {
        #[arg(long, value_enum, default_value = "all")]
        class: ZooClass,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Local data of a point class
    Local {
        class: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Slope orbits of a real elliptic curve under mutations
    Slopes {
        name: String,
        #[arg(long, default_value_t = 50)]
        bound: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Centre of a twisted power series ring
    SkewCentre {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        twist: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Ghost group of genus-zero local data
    Ghost {
        file: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                (1, String::new(), text)
            } else {
                (0, text, String::new())
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => (0, out, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}

fn dispatch(cmd: Command) -> Result<String> {
    match cmd {
        Command::Invariants { file, format } => cmd_invariants(&read(&file)?, format),
        Command::Classify { file, format } => cmd_classify(&read(&file)?, format),
        Command::Zoo { class, format } => cmd_zoo(class, format),
        Command::Local { class, format } => cmd_local(&class, format),
        Command::Slopes { name, bound, format } => cmd_slopes(&name, bound, format),
        Command::SkewCentre {
            algebra,
            twist,
            order,
            format,
        } => cmd_skew_centre(&algebra, &twist, order, format),
        Command::Ghost { file, format } => cmd_ghost(&read(&file)?, format),
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn vector(v: &[u32]) -> String {
    format!("({})", v.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or("-".into(), |x| x.to_string())
}

fn symbol(ascii: &str) -> String {
    AlgebraTag::from_ascii(ascii).map_or(ascii.to_string(), |t| t.symbol().to_string())
}

pub fn cmd_invariants(text: &str, format: Format) -> Result<String> {
    let r = InvariantsReport::new(&load_curve(text)?)?;
    if format == Format::Json {
        return json(&r);
    }
    let rows = vec![
        vec!["base".into(), r.base.clone()],
        vec!["genus".into(), r.genus.to_string()],
        vec!["centre genus".into(), r.centre_genus.to_string()],
        vec!["constants field".into(), r.constants_field.as_deref().map_or("-".into(), symbol)],
        vec!["κ".into(), r.kappa.to_string()],
        vec!["s".into(), r.s.to_string()],
        vec!["ε".into(), opt(r.epsilon)],
        vec!["χ".into(), r.chi.display()],
        vec!["χ'".into(), r.chi_normalized.display()],
        vec!["χ'_orb".into(), r.chi_orb.display()],
        vec!["class".into(), r.class.clone()],
        vec!["WRV".into(), vector(&r.wrv)],
        vec!["pbar".into(), r.pbar.to_string()],
        vec!["τ-order".into(), opt(r.tau_order)],
        vec!["CY".into(), r.cy.map_or("-".into(), |c| format!("{}/{}", c.num, c.den))],
        vec!["Pic".into(), r.picard.base_part.clone()],
        vec!["Pic torsion".into(), vector(&r.picard.torsion_quotient)],
        vec![
            "Pic_0".into(),
            r.picard.degree_zero_part.as_ref().map_or("-".into(), |v| {
                v.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join(" x ")
            }),
        ],
    ];
    Ok(table(&["invariant", "value"], &rows))
}

pub fn cmd_classify(text: &str, format: Format) -> Result<String> {
    let r = ClassifyReport::new(&load_curve(text)?)?;
    match format {
        Format::Json => json(&r),
        Format::Table => Ok(format!(
            "{}: {}  χ'_orb = {}  WRV {}\n",
            r.base,
            r.class,
            r.chi_orb.display(),
            vector(&r.wrv)
        )),
    }
}

pub fn cmd_zoo(class: ZooClass, format: Format) -> Result<String> {
    let chi_zero = match class {
        ZooClass::Domestic => Vec::new(),
        _ => enumerate_chi_zero()?,
    };
    let wanted = |e: &ZooEntry| match class {
        ZooClass::Tubular => e.class == crate::weighted_curve::CurveClass::Tubular,
        ZooClass::Elliptic => e.class == crate::weighted_curve::CurveClass::Elliptic,
        _ => true,
    };
    let entries: Vec<ZooEntry> = chi_zero.into_iter().filter(|e| wanted(e)).collect();
    let domestic = match class {
        ZooClass::Domestic | ZooClass::All => Some(enumerate_domestic()?),
        _ => None,
    };
    match format {
        Format::Json => {
            let mut all: Vec<ZooEntryReport> = entries.iter().map(ZooEntryReport::new).collect::<Result<_>>()?;
            let mut families = Vec::new();
            if let Some(d) = &domestic {
                for e in &d.nonweighted {
                    all.push(ZooEntryReport::new(e)?);
                }
                families = d.families.iter().map(FamilyReport::from).collect();
            }
            json(&ZooReport {
                entries: all,
                domestic_families: families,
            })
        }
        Format::Table => {
            let mut out = String::new();
            if class != ZooClass::Domestic {
                writeln!(out, "χ'_orb = 0: {} curves", entries.len()).expect("string write");
                out.push_str(&zoo_report(&entries));
            }
            if let Some(d) = &domestic {
                if !out.is_empty() {
                    out.push('\n');
                }
                writeln!(
                    out,
                    "domestic: {} non-weighted, {} weighted families",
                    d.nonweighted.len(),
                    d.families.len()
                )
                .expect("string write");
                out.push_str(&domestic_report(d));
            }
            Ok(out)
        }
    }
}

fn local_datum(class: &str) -> Result<(String, PointDatum)> {
    Ok(match class {
        "klein-inner" => ("klein-inner".into(), klein_local_datum(true)),
        "klein-boundary" => ("klein-boundary".into(), klein_local_datum(false)),
        "complex" => ("complex".into(), complex_point_datum()),
        other => {
            let c: WittPointClass = other.parse()?;
            (c.name().into(), witt_local_datum(c))
        }
    })
}

pub fn cmd_local(class: &str, format: Format) -> Result<String> {
    let (name, d) = local_datum(class)?;
    let r = LocalReport {
        class: name,
        e: d.e,
        e_star: d.e_star,
        e_tau: d.e_tau,
        residue_degree: d.residue_degree,
        simple_end: d.simple_end.ascii(),
        skewness: skewness(&d)?,
        local_skewness: local_skewness(&d)?,
    };
    match format {
        Format::Json => json(&r),
        Format::Table => {
            let row = vec![
                r.class.clone(),
                r.e.to_string(),
                r.e_star.to_string(),
                r.e_tau.to_string(),
                r.residue_degree.to_string(),
                d.simple_end.to_string(),
                r.skewness.to_string(),
            ];
            Ok(table(&["class", "e", "e*", "e_τ", "[k(x):k]", "End(S)", "e·e*·e_τ"], &[row]))
        }
    }
}

pub fn cmd_slopes(name: &str, bound: i64, format: Format) -> Result<String> {
    let n = curve_numerics(name)?;
    let o = slope_orbits(&n, bound)?;
    let partners: Vec<String> = fm_partners(name)?.into_iter().map(String::from).collect();
    let canonical = crate::witt_surface::canonical_name(name)?;
    let r = SlopesReport {
        name: canonical.to_string(),
        kappa: n.kappa,
        epsilon: n.epsilon,
        end_s_dim: n.end_s_dim,
        deg_s: n.deg_s,
        bound,
        orbits: o.count,
        convention_counts: [o.convention_counts.0, o.convention_counts.1],
        representatives: o
            .representatives
            .iter()
            .map(|v| v.iter().map(JsonRational::from_slope).collect())
            .collect(),
        parity_numerator: o.parity.map(|p| p.numerator),
        parity_denominator: o.parity.map(|p| p.denominator),
        fm_partners: partners,
    };
    if format == Format::Json {
        return json(&r);
    }
    let mut out = format!("{}: {} orbits (height bound {})\n", r.name, r.orbits, r.bound);
    for (i, reps) in o.representatives.iter().enumerate() {
        let s: Vec<String> = reps.iter().map(ToString::to_string).collect();
        writeln!(out, "  orbit {}: {}, ...", i + 1, s.join(", ")).expect("string write");
    }
    if let Some(p) = o.parity {
        writeln!(
            out,
            "  parity split: numerator {}, denominator {}",
            if p.numerator { "yes" } else { "no" },
            if p.denominator { "yes" } else { "no" }
        )
        .expect("string write");
    }
    writeln!(out, "Fourier-Mukai partners: {}", r.fm_partners.join(", ")).expect("string write");
    Ok(out)
}

pub fn cmd_skew_centre(algebra: &str, twist: &str, order: usize, format: Format) -> Result<String> {
    let tag = AlgebraTag::from_ascii(algebra).ok_or_else(|| Error::UnknownName(format!("algebra {algebra}")))?;
    let sigma = parse_twist(tag, twist)?;
    let c = centre_basis(tag, &sigma, order)?;
    let r = SkewCentreReport {
        algebra: tag.ascii().into(),
        twist: twist.into(),
        order,
        centre: c.power_series_name(),
        constant_subfield: c.constant_subfield.tag.ascii().into(),
        period: c.period,
        unit: c.unit.to_string(),
        dim_over_centre: dim_over_centre(tag, &sigma)?,
        dim_over_centre_by_basis: dim_over_centre_by_basis(tag, &sigma, order)?,
        exponent_dims: c.exponent_dims.clone(),
    };
    match format {
        Format::Json => json(&r),
        Format::Table => Ok(format!(
            "centre = {}, dim over centre = {}\n{}, period r = {}, central dims by exponent {:?} (mod T^{})\n",
            r.centre, r.dim_over_centre, c.unit_exponent_note, r.period, r.exponent_dims, order
        )),
    }
}

pub fn cmd_ghost(text: &str, format: Format) -> Result<String> {
    let f: GhostFile = parse_json(text)?;
    let data: Vec<(u32, u32)> = f.points.iter().map(|p| (p.e_tau, p.residue_degree)).collect();
    let g = ghost_group(&data, f.efficient)?;
    let r = GhostReport {
        group: g.describe(),
        factors: g.factors.clone(),
        order: g.order(),
        efficient: f.efficient,
        generators: g.shifts.iter().map(|&(point, d)| GhostShift { point, d }).collect(),
    };
    match format {
        Format::Json => json(&r),
        Format::Table => {
            let mut out = format!("ghost group {} (order {})\n", r.group, r.order);
            for s in &r.generators {
                writeln!(
                    out,
                    "  σ_x{}^-{} σ_x{} of order {}",
                    r.efficient, s.d, s.point, data[s.point].0
                )
                .expect("string write");
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        run(std::iter::once("nccurve").chain(args.iter().copied()))
    }

    #[test]
    fn skew_centre_line() {
        let (code, out, _) = run_args(&["skew-centre", "--algebra", "C", "--twist", "conj", "--order", "8"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("centre = R[[T^2]], dim over centre = 4\n"), "{out}");
    }

    #[test]
    fn slopes_k() {
        let (code, out, _) = run_args(&["slopes", "K"]);
        assert_eq!(code, 0);
        assert!(out.contains("2 orbits"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["frobnicate"]).0, 1);
        assert_eq!(run_args(&["local", "nowhere"]).0, 2);
        assert_eq!(run_args(&["slopes", "D"]).0, 3);
        assert_eq!(run_args(&["invariants", "/nonexistent/file.json"]).0, 1);
        assert_eq!(run_args(&["skew-centre", "--algebra", "Q", "--twist", "id"]).0, 2);
    }

    #[test]
    fn local_segmentation() {
        let (code, out, _) = run_args(&["local", "segmentation"]);
        assert_eq!(code, 0);
        assert!(out.lines().nth(1).unwrap().starts_with("segmentation  1  1   2    1"), "{out}");
    }
}
