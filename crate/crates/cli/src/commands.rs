use std::fmt::Write as _;

use cycinv::classify::{classify_action, ClassKind};
use cycinv::groebner::toric_kernel;
use cycinv::modarith::normalize;
use cycinv::resolution::{eagon_northcott, explicit_kernel_2p1, hilbert_burch, minimal_free_resolution, Resolution};
use cycinv::semigroup::invariant_generators;
use cycinv::{Error, Result};
use serde_json::{json, Value};

use crate::render;
use crate::{Format, Method, Target};

fn header(t: &Target) -> Value {
    json!({ "p": t.action.p(), "a": t.action.a(), "b": t.action.b(), "weight": t.weight })
}

pub fn invariants(t: &Target, format: Format) -> Result<String> {
    let p = t.action.p() as u64;
    let inv = invariant_generators(p, t.weight)?;
    let canon = normalize(&t.action);
    let points: Vec<(u64, u64)> = inv.points().iter().map(|e| (e.c, e.d)).collect();
    Ok(match format {
        Format::Json => {
            let mut v = header(t);
            v["points"] = json!(points);
            v["degrees"] = json!(inv.degrees());
            v["slopes"] = json!(render::slopes(&inv));
            v["monomials"] = json!(points.iter().map(|&(c, d)| render::monomial(c, d)).collect::<Vec<_>>());
            v["canonical"] = json!({ "b": canon.b, "b_inv": canon.b_inv, "swapped": canon.swapped });
            render::json(&v)
        }
        Format::Csv => {
            let mut s = String::from("c,d,degree\n");
            for &(c, d) in &points {
                let _ = writeln!(s, "{c},{d},{}", c + d);
            }
            s
        }
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "Z/{p} acting by ({}, {}); weight b = {}", t.action.a(), t.action.b(), t.weight);
            if canon.swapped {
                let _ = writeln!(s, "canonical weight {} after swapping x1 and x2", canon.b);
            }
            let _ = writeln!(s, "{} invariants:", inv.len());
            for (i, &(c, d)) in points.iter().enumerate() {
                let _ = writeln!(s, "  y{i:<3} {:<16} degree {}", render::monomial(c, d), c + d);
            }
            let _ = writeln!(s, "slopes: {}", render::slopes(&inv).join(", "));
            s
        }
    })
}

pub fn kernel(t: &Target, reduced: bool, format: Format) -> Result<String> {
    let p = t.action.p() as u64;
    let inv = invariant_generators(p, t.weight)?;
    let ideal = toric_kernel(&inv)?;
    let ring = ideal.ring();
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    let basis = if reduced { Some(ideal.reduced_basis(ring.order())?) } else { None };
    let basis_strings: Option<Vec<String>> = basis.as_ref().map(|b| b.iter().map(|g| g.to_string()).collect());
    Ok(match format {
        Format::Json => {
            let mut v = header(t);
            v["variables"] = json!(ring.names());
            v["degrees"] = json!(ring.degrees());
            v["generators"] = json!(gens);
            if let Some(b) = &basis_strings {
                v["reduced_basis"] = json!(b);
            }
            render::json(&v)
        }
        Format::Csv => {
            let mut s = String::from("kind,polynomial,degree\n");
            let rows = ideal.generators().iter().map(|g| ("generator", g));
            let rows = rows.chain(basis.iter().flatten().map(|g| ("reduced", g)));
            for (kind, g) in rows {
                let _ = writeln!(s, "{kind},{g},{}", g.degree().unwrap_or(0));
            }
            s
        }
        Format::Human => {
            let mut s = String::new();
            let degs: Vec<String> = ring.names().iter().zip(ring.degrees()).map(|(n, d)| format!("{n}:{d}")).collect();
            let _ = writeln!(s, "ring: Q[{}]", degs.join(", "));
            let _ = writeln!(s, "kernel ({} generators):", gens.len());
            for g in &gens {
                let _ = writeln!(s, "  {g}");
            }
            if let Some(b) = &basis_strings {
                let _ = writeln!(s, "reduced Groebner basis ({} elements):", b.len());
                for g in b {
                    let _ = writeln!(s, "  {g}");
                }
            }
            s
        }
    })
}

fn twists(res: &Resolution) -> Vec<Vec<i64>> {
    res.modules().iter().map(|m| m.sorted_twists()).collect()
}

fn closed_form(t: &Target, method: Method, kind: ClassKind) -> Result<Resolution> {
    let p = t.action.p() as u64;
    let inapplicable = |name: &str| Error::Classification(format!("{name} does not apply: class is {kind}"));
    match method {
        Method::HilbertBurch => hilbert_burch(p, t.weight).map(|(_, r)| r).map_err(|e| match e {
            Error::Classification(_) => inapplicable("hilbert-burch"),
            e => e,
        }),
        Method::EagonNorthcott => {
            let (_, m, _) = explicit_kernel_2p1(p, t.weight).map_err(|e| match e {
                Error::Classification(_) => inapplicable("eagon-northcott"),
                e => e,
            })?;
            eagon_northcott(&m)
        }
        _ => unreachable!("closed forms only"),
    }
}

pub fn resolution(t: &Target, method: Method, matrices: bool, format: Format) -> Result<String> {
    let p = t.action.p() as u64;
    let kind = classify_action(&t.action)?.kind;
    let general =
        || -> Result<Resolution> { minimal_free_resolution(&toric_kernel(&invariant_generators(p, t.weight)?)?) };
    let (name, res) = match method {
        Method::General => ("general", general()?),
        Method::HilbertBurch => ("hilbert-burch", closed_form(t, method, kind)?),
        Method::EagonNorthcott => ("eagon-northcott", closed_form(t, method, kind)?),
        Method::Auto => {
            let closed = match kind {
                ClassKind::Codim2 => Some(("hilbert-burch", Method::HilbertBurch)),
                ClassKind::FiveGen2p1Lower | ClassKind::FiveGen2p1Upper => {
                    Some(("eagon-northcott", Method::EagonNorthcott))
                }
                _ => None,
            };
            match closed {
                Some((name, m)) => {
                    let res = closed_form(t, m, kind)?;
                    let check = general()?;
                    if twists(&res) != twists(&check) {
                        return Err(Error::TheoremViolation(format!(
                            "{name} twists {:?} differ from the computed resolution {:?}",
                            twists(&res),
                            twists(&check)
                        )));
                    }
                    (name, res)
                }
                None => ("general", general()?),
            }
        }
    };
    Ok(match format {
        Format::Json => {
            let mut h = header(t);
            h["method"] = json!(name);
            h["class"] = json!(kind.to_string());
            h["ranks"] = json!(res.ranks());
            let mut v = render::resolution_json(&res, h);
            if !matrices {
                if let Value::Object(o) = &mut v {
                    o.remove("differentials");
                }
            }
            render::json(&v)
        }
        Format::Csv => {
            let mut s = String::from("module,twist\n");
            for (i, m) in res.modules().iter().enumerate() {
                for tw in m.twists() {
                    let _ = writeln!(s, "{i},{tw}");
                }
            }
            s
        }
        Format::Human => render::resolution_human(&res, name, matrices),
    })
}
