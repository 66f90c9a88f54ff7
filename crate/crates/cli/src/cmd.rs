use std::fs;

use gmtors::arith::{
    abel_reciprocal_sum, coset_main_term_exact, jordan_progression_main_term_exact, jordan_sum_progression,
    jordan_table, MainTermParams, SymbolicMainTerm,
};
use gmtors::counting::{
    bound_exponent, char0_main_term, count_variety_charp, empirical_exponent, general_bound_exponent,
    hypersurface_exponent, lang_weil_check, verify_fink, CountConfig, CountReport,
};
use gmtors::field::{Field, PrimeField, Rationals};
use gmtors::intlat::{minor_gcd, smith_normal_form, successive_minima, IntMatrix, IntegerLattice, MinimaConfig};
use gmtors::json::*;
use gmtors::torsion::{coset_upper_bound, count_coset_exact, solve_monomial_equations};
use gmtors::variety::{is_admissible_hypersurface, stabilizer_lattice, LaurentPoly, RootsOfUnity};
use gmtors::{Coset, Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::{Command, Global, JordanMode};

fn input_error(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

/// Inline argument, else the contents of --file.
fn main_input(g: &Global, inline: &Option<String>, name: &str) -> Result<String> {
    match (inline, &g.file) {
        (Some(s), None) => Ok(s.clone()),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
        }
        (Some(_), Some(_)) => Err(input_error(format!("give --{name} or --file, not both"))),
        (None, None) => Err(input_error(format!("missing --{name} (or --file)"))),
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| input_error(format!("malformed JSON: {e}")))
}

fn count_config(g: &Global) -> CountConfig {
    CountConfig {
        max_field_bits: g.max_field_bits,
        max_points: g.max_points,
        method: g.method.into(),
        ..CountConfig::default()
    }
}

fn minima_config(g: &Global) -> MinimaConfig {
    MinimaConfig { dim_cap: g.minima_dim_cap, ..MinimaConfig::default() }
}

fn config_json(g: &Global, command: &str) -> Value {
    let cfg = count_config(g);
    json!({
        "command": command,
        "p": g.p,
        "k": g.k,
        "max_field_bits": g.max_field_bits,
        "max_points": g.max_points,
        "minima_dim_cap": g.minima_dim_cap,
        "method": cfg.method.as_str(),
        "format": "json",
        "file": g.file.as_ref().map(|f| f.display().to_string()),
    })
}

fn prime_field(p: u64) -> Result<PrimeField> {
    if p == 0 {
        return Err(Error::Domain("this command needs a prime characteristic --p".into()));
    }
    PrimeField::new(p)
}

fn symbolic_json(b: &SymbolicMainTerm) -> Value {
    json!({
        "coefficient": ratio_to_json(&b.coefficient),
        "zeta_arg": b.zeta_arg,
        "value": b.to_float::<f64>(),
    })
}

fn report_json(r: &CountReport) -> Value {
    r.to_json()
}

fn lattice_input(g: &Global, inline: &Option<String>, n: Option<usize>) -> Result<IntegerLattice<BigInt>> {
    let v = parse_json(&main_input(g, inline, "lattice")?)?;
    let n = match n {
        Some(n) => n,
        None => v
            .as_array()
            .and_then(|a| a.first())
            .and_then(|r| r.as_array())
            .map(|r| r.len())
            .ok_or_else(|| input_error("pass --n for a lattice without generators"))?,
    };
    lattice_from_json(n, &v)
}

fn coset_input(g: &Global, inline: &Option<String>) -> Result<Coset> {
    coset_from_json(&parse_json(&main_input(g, inline, "coset")?)?, g.p)
}

fn poly_text(g: &Global, inline: &Option<String>) -> Result<String> {
    main_input(g, inline, "poly")
}

fn admissible_json<F: RootsOfUnity>(p: &LaurentPoly<F>) -> Result<Value> {
    let rep = is_admissible_hypersurface(p)?;
    let witness = rep.witness.map(|w| {
        json!({"u": w.u, "zeta_order": w.zeta.order, "zeta_polynomial": w.zeta.polynomial})
    });
    Ok(json!({
        "polynomial": p.to_text(),
        "n": p.ambient_dim(),
        "admissible": rep.admissible,
        "witness": witness,
        "directions_checked": rep.directions_checked,
    }))
}

fn stabilizer_json<F: Field>(p: &LaurentPoly<F>) -> Result<Value> {
    let s = stabilizer_lattice(p)?;
    Ok(json!({
        "polynomial": p.to_text(),
        "n": p.ambient_dim(),
        "lattice": lattice_to_json(&s.lattice),
        "dimension": s.dimension,
        "caveat": s.caveat,
    }))
}

fn jordan(mode: JordanMode, d: u32, n: Option<u64>, m: u64, a: i64, x: Option<u64>) -> Result<Value> {
    match mode {
        JordanMode::Table => {
            let n = n.ok_or_else(|| input_error("--mode table needs --n"))?;
            if n == 0 {
                return Err(input_error("--n must be positive"));
            }
            let t = jordan_table(d, n as usize);
            Ok(json!({"d": d, "n": n, "values": vec_to_json(t.values())}))
        }
        JordanMode::Sum | JordanMode::Main => {
            let x = x.ok_or_else(|| input_error("--mode sum/main needs --x"))?;
            if m == 0 {
                return Err(Error::Domain("modulus --m must be positive".into()));
            }
            let params = MainTermParams { d, m, a, x };
            let main = jordan_progression_main_term_exact(&params);
            let mut out = json!({"d": d, "m": m, "a": a, "x": x, "g": params.g(), "main_term": symbolic_json(&main)});
            if let JordanMode::Sum = mode {
                let exact = jordan_sum_progression(d, m, a, x);
                let ratio = exact.to_f64().unwrap_or(f64::INFINITY) / main.to_float::<f64>();
                out["exact"] = int_to_json(&exact);
                out["ratio"] = json!(ratio);
            }
            Ok(out)
        }
    }
}

pub fn run(g: &Global, command: &Command) -> Result<Value> {
    if g.k == 0 {
        return Err(input_error("--k must be positive"));
    }
    let (name, mut out) = match command {
        Command::Jordan { mode, d, n, m, a, x } => ("jordan", jordan(*mode, *d, *n, *m, *a, *x)?),
        Command::Snf { matrix } => {
            let a: IntMatrix<BigInt> = matrix_from_json(&parse_json(&main_input(g, matrix, "matrix")?)?)?;
            let s = smith_normal_form(&a);
            let out = json!({
                "factors": vec_to_json(&s.invariant_factors),
                "rank": s.rank(),
                "U": matrix_to_json(&s.u),
                "D": matrix_to_json(&s.d),
                "V": matrix_to_json(&s.v),
            });
            ("snf", out)
        }
        Command::Minors { matrix, size } => {
            let a: IntMatrix<BigInt> = matrix_from_json(&parse_json(&main_input(g, matrix, "matrix")?)?)?;
            let sizes: Vec<usize> = match size {
                Some(k) => vec![*k],
                None => (1..=a.rows().min(a.cols())).collect(),
            };
            let mut d = Map::new();
            for k in sizes {
                d.insert(k.to_string(), int_to_json(&minor_gcd(&a, k)?));
            }
            ("minors", json!({"d": d}))
        }
        Command::Saturate { lattice, n } => {
            let l = lattice_input(g, lattice, *n)?;
            let sat = l.saturation();
            let mut out = json!({
                "lattice": lattice_to_json(&l),
                "rank": l.rank(),
                "saturation": lattice_to_json(&sat),
                "index_in_saturation": int_to_json(&l.index_in(&sat)?),
            });
            if g.p > 0 {
                let ps = l.p_saturation(g.p);
                out["p_saturation"] = lattice_to_json(&ps);
                out["is_p_full"] = json!(l.is_p_full(g.p));
            }
            ("saturate", out)
        }
        Command::Minima { lattice, n } => {
            let l = lattice_input(g, lattice, *n)?;
            let m = successive_minima(&l, &minima_config(g))?;
            let out = json!({
                "minima": vec_to_json(&m.minima),
                "witnesses": m.witnesses.iter().map(|w| vec_to_json(w)).collect::<Vec<_>>(),
                "product": int_to_json(&m.product()),
                "index": int_to_json(&l.index()?),
            });
            ("minima", out)
        }
        Command::CosetCount { coset, t } => {
            let c = coset_input(g, coset)?;
            let exact = count_coset_exact(&c, *t)?;
            let mut out = json!({"coset": coset_to_json(&c), "T": t, "exact": int_to_json(&exact)});
            if c.dim() > 0 {
                let g_ord = c.order().to_u64().ok_or_else(|| Error::Resource("coset order exceeds 64 bits".into()))?;
                let main = coset_main_term_exact(c.characteristic(), c.dim() as u32, g_ord, *t)?;
                let mf = main.to_float::<f64>();
                out["main_term"] = symbolic_json(&main);
                out["ratio"] = json!(exact.to_f64().unwrap_or(f64::INFINITY) / mf);
            }
            ("coset-count", out)
        }
        Command::CosetBound { coset, t } => {
            let c = coset_input(g, coset)?;
            let b = coset_upper_bound(&c, *t)?;
            ("coset-bound", json!({"coset": coset_to_json(&c), "T": t, "bound": ratio_to_json(&b)}))
        }
        Command::SolveMonomial { matrix, zeta } => {
            let u: IntMatrix<BigInt> = matrix_from_json(&parse_json(&main_input(g, matrix, "matrix")?)?)?;
            let z = point_from_json(&parse_json(zeta)?, g.p)?;
            let sols = solve_monomial_equations(&u, &z)?;
            let out = json!({
                "zeta": point_to_json(&z),
                "cosets": sols.iter().map(coset_to_json).collect::<Vec<_>>(),
            });
            ("solve-monomial", out)
        }
        Command::Admissible { poly, n } => {
            let text = poly_text(g, poly)?;
            let out = if g.p == 0 {
                admissible_json(&LaurentPoly::parse(&text, Rationals, *n)?)?
            } else {
                admissible_json(&LaurentPoly::parse(&text, prime_field(g.p)?, *n)?)?
            };
            ("admissible", out)
        }
        Command::Stabilizer { poly, n } => {
            let text = poly_text(g, poly)?;
            let out = if g.p == 0 {
                stabilizer_json(&LaurentPoly::parse(&text, Rationals, *n)?)?
            } else {
                stabilizer_json(&LaurentPoly::parse(&text, prime_field(g.p)?, *n)?)?
            };
            ("stabilizer", out)
        }
        Command::CountCharp { poly, n, t } => {
            let p = LaurentPoly::parse(&poly_text(g, poly)?, prime_field(g.p)?, *n)?;
            ("count-charp", report_json(&count_variety_charp(&p, g.k, *t, &count_config(g))?))
        }
        Command::Fink { t } => {
            let reps = verify_fink(prime_field(g.p)?.modulus(), t, &count_config(g))?;
            let out = if reps.len() == 1 {
                report_json(&reps[0])
            } else {
                json!({"reports": reps.iter().map(report_json).collect::<Vec<_>>()})
            };
            ("fink", out)
        }
        Command::Langweil { poly, n, l, r } => {
            let p = LaurentPoly::parse(&poly_text(g, poly)?, prime_field(g.p)?, *n)?;
            let r = r.unwrap_or(p.ambient_dim() as u32 - 1);
            ("langweil", lang_weil_check(&p, g.k, r, l, &count_config(g))?.to_json())
        }
        Command::Exponent { d, delta } => {
            let e: num_rational::Ratio<BigInt> = bound_exponent(*d, *delta)?;
            let mut out = json!({
                "d": d,
                "delta": delta,
                "value": ratio_to_json(&e),
                "float": e.to_f64(),
                "general": general_bound_exponent(*d),
            });
            if *delta == 0 {
                let h: num_rational::Ratio<BigInt> = hypersurface_exponent(*d + 1)?;
                out["hypersurface_in_dimension_d_plus_1"] = ratio_to_json(&h);
            }
            ("exponent", out)
        }
        Command::Char0Main { cosets, t } => {
            let v = parse_json(&main_input(g, cosets, "cosets")?)?;
            let cs: Vec<Coset> = v
                .as_array()
                .ok_or_else(|| input_error("expected a JSON array of cosets"))?
                .iter()
                .map(|c| coset_from_json(c, 0))
                .collect::<Result<_>>()?;
            let m = char0_main_term(&cs, *t)?;
            let out = json!({
                "T": t,
                "a": m.a,
                "b": m.b.as_ref().map(symbolic_json),
                "main": m.main,
                "finite_count": m.finite_count,
            });
            ("char0-main", out)
        }
        Command::Abel { prefix, t, nonnegative } => {
            let v = parse_json(&main_input(g, prefix, "prefix")?)?;
            let pre: Vec<BigInt> = vec_from_json(&v)?;
            let t = t.unwrap_or(pre.len());
            let s: BigRational = abel_reciprocal_sum(&pre, t, *nonnegative)?;
            ("abel", json!({"T": t, "value": ratio_to_json(&s), "float": s.to_f64()}))
        }
        Command::EmpiricalExponent { series } => {
            let v = parse_json(&main_input(g, series, "series")?)?;
            let pts: Vec<(f64, f64)> = v
                .as_array()
                .ok_or_else(|| input_error("expected [[T, count], ...]"))?
                .iter()
                .map(|row| match row.as_array().map(|r| r.as_slice()) {
                    Some([a, b]) => match (a.as_f64(), b.as_f64()) {
                        (Some(a), Some(b)) => Ok((a, b)),
                        _ => Err(input_error(format!("non-numeric pair {row}"))),
                    },
                    _ => Err(input_error(format!("expected a [T, count] pair, got {row}"))),
                })
                .collect::<Result<_>>()?;
            ("empirical-exponent", json!({"points": pts.len(), "value": empirical_exponent(&pts)?}))
        }
    };
    out["config"] = config_json(g, name);
    Ok(out)
}
