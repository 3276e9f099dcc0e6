//! Python bindings for the Schubert duality engine.
//!
//! Thin wrappers over the core crate: closed-form maps with native types,
//! and the oracle/enumeration/quiver surfaces as JSON strings so Python
//! callers can `json.loads` them. Exact octonion arithmetic is exposed with
//! `(numerator, denominator)` string pairs.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use schubert_duality::closedform;
use schubert_duality::dualcore::{DualityEngine, Method};
use schubert_duality::polarize::{self, octonion};
use schubert_duality::quiver;
use schubert_duality::rootsys::{Family, RootDatum, SchubertIndex};
use schubert_duality::verify;

fn parse_space(s: &str) -> PyResult<Family> {
    let bad = || PyValueError::new_err(format!("bad space {s:?}: expected a:R,N | d:P | e6:1|3"));
    let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
    match kind {
        "a" => {
            let (r, n) = rest.split_once(',').ok_or_else(bad)?;
            Ok(Family::A {
                r: r.trim().parse().map_err(|_| bad())?,
                n: n.trim().parse().map_err(|_| bad())?,
            })
        }
        "d" => Ok(Family::Dspin { p: rest.trim().parse().map_err(|_| bad())? }),
        "e6" => match rest.trim() {
            "1" => Ok(Family::E6P1),
            "3" => Ok(Family::E6P3),
            _ => Err(bad()),
        },
        _ => Err(bad()),
    }
}

fn parse_index(family: Family, s: &str) -> PyResult<SchubertIndex> {
    let bad = || PyValueError::new_err(format!("bad index {s:?} for this space"));
    match family {
        Family::A { .. } => {
            let list: Result<Vec<usize>, _> =
                s.split(',').map(|x| x.trim().parse::<usize>()).collect();
            Ok(SchubertIndex::List(list.map_err(|_| bad())?))
        }
        Family::Dspin { .. } => {
            let signs: Result<Vec<i8>, ()> = s
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    _ => Err(()),
                })
                .collect();
            Ok(SchubertIndex::Signs(signs.map_err(|_| bad())?))
        }
        Family::E6P1 | Family::E6P3 => {
            if s.is_empty() || s == "e" {
                return Ok(SchubertIndex::Word(Vec::new()));
            }
            let word: Result<Vec<u8>, _> = s.split(',').map(|x| x.trim().parse::<u8>()).collect();
            Ok(SchubertIndex::Word(word.map_err(|_| bad())?))
        }
    }
}

fn datum(family: Family) -> PyResult<RootDatum> {
    RootDatum::new(family).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn signs_of(s: &str) -> PyResult<Vec<i8>> {
    s.chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => Err(PyValueError::new_err("signs must be a +/- string")),
        })
        .collect()
}

fn signs_to_string(signs: &[i8]) -> String {
    signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
}

/// Suitability of the Schubert class `l` in `G(r, n)`.
#[pyfunction]
fn grassmann_suitable(l: Vec<usize>, r: usize, n: usize) -> bool {
    l.len() == r && closedform::grassmann_suitable(&l, r, n)
}

/// Dual list of a suitable class in `G(r, n)`.
#[pyfunction]
fn grassmann_dual(l: Vec<usize>, r: usize, n: usize) -> PyResult<Vec<usize>> {
    closedform::grassmann_dual(&l, r, n).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Admissibility of a spinor sign string like "+-++-".
#[pyfunction]
fn spinor_admissible(signs: &str) -> PyResult<bool> {
    closedform::spinor_admissible(&signs_of(signs)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Dual sign string of an admissible spinor class.
#[pyfunction]
fn spinor_dual(signs: &str) -> PyResult<String> {
    closedform::spinor_dual(&signs_of(signs)?)
        .map(|out| signs_to_string(&out))
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Suitability of the isotropic Grassmannian `G_B(r, V)` for an
/// epsilon-symmetric form of the given rank.
#[pyfunction]
fn iso_suitable(epsilon: i8, r: usize, rank: usize) -> bool {
    closedform::iso_suitable(epsilon, r, rank)
}

/// Dual of one Schubert class; returns the CLI's JSON result document.
#[pyfunction]
#[pyo3(signature = (space, index, method = "auto"))]
fn dual(space: &str, index: &str, method: &str) -> PyResult<String> {
    let family = parse_space(space)?;
    let idx = parse_index(family, index)?;
    let method = match method {
        "auto" => Method::Auto,
        "closed-form" => Method::ClosedForm,
        "oracle" => Method::Oracle,
        other => return Err(PyValueError::new_err(format!("bad method {other:?}"))),
    };
    let d = datum(family)?;
    d.validate_index(&idx).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let engine = DualityEngine::new(d);
    let out = engine.analyze(&idx, method).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let doc = serde_json::json!({
        "space": space,
        "index": idx.to_string(),
        "suitable": out.suitable,
        "dual": out.dual.map(|d| d.to_string()),
        "lowest_weight": out.lowest_weight.map(|w| w.0),
        "witness": out.witness.map(|ls| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>()),
    });
    Ok(doc.to_string())
}

/// Every Schubert class of a space with suitability and dual, as JSON.
#[pyfunction]
fn enumerate_space(space: &str) -> PyResult<String> {
    let engine = DualityEngine::new(datum(parse_space(space)?)?);
    let rows = engine
        .enumerate_suitable(Method::Auto)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let out: Vec<serde_json::Value> = rows
        .into_iter()
        .map(|(idx, o)| {
            serde_json::json!({
                "index": idx.to_string(),
                "suitable": o.suitable,
                "dual": o.dual.map(|d| d.to_string()),
            })
        })
        .collect();
    Ok(serde_json::Value::Array(out).to_string())
}

/// The tangent-space quiver of a space as JSON, optionally marking the
/// order ideal of one class.
#[pyfunction]
#[pyo3(signature = (space, index = None))]
fn quiver_json(space: &str, index: Option<&str>) -> PyResult<String> {
    let family = parse_space(space)?;
    let d = datum(family)?;
    let q = quiver::build_hasse(&d);
    let marked = match index {
        Some(s) => {
            let idx = parse_index(family, s)?;
            Some(
                quiver::subquiver_qw(&q, &d, &idx)
                    .map_err(|e| PyValueError::new_err(e.to_string()))?,
            )
        }
        None => None,
    };
    Ok(quiver::emit(&q, &d, marked.as_ref(), quiver::Format::Json))
}

/// The suitability threshold `h0` of a space.
#[pyfunction]
fn h0(space: &str) -> PyResult<usize> {
    Ok(polarize::compute_h0(&datum(parse_space(space)?)?))
}

/// Run a named check suite; returns `(all_passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (suite, space = None))]
fn check(suite: &str, space: Option<&str>) -> PyResult<(bool, String)> {
    let family = space.map(parse_space).transpose()?;
    let need = || family.ok_or_else(|| PyValueError::new_err("this suite needs a space"));
    let reports = match suite {
        "biduality" => {
            verify::check_biduality(need()?).map_err(|e| PyValueError::new_err(e.to_string()))?
        }
        "equivalence" => {
            verify::check_equivalence(need()?).map_err(|e| PyValueError::new_err(e.to_string()))?
        }
        "h0" => verify::check_h0().map_err(|e| PyValueError::new_err(e.to_string()))?,
        "octonion" => verify::check_octonion(0xda1, 200, 40),
        "isotropic" => verify::check_isotropic(0xda1, 40),
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    };
    Ok((verify::all_passed(&reports), verify::render(&reports)))
}

type PyRat = (String, String);

fn oct_from_py(coords: Vec<(i64, i64)>) -> PyResult<octonion::Octonion> {
    if coords.len() != 8 {
        return Err(PyValueError::new_err("an octonion needs 8 coordinates"));
    }
    if coords.iter().any(|&(_, d)| d == 0) {
        return Err(PyValueError::new_err("zero denominator"));
    }
    Ok(octonion::Octonion(std::array::from_fn(|k| {
        num_rational::BigRational::new(coords[k].0.into(), coords[k].1.into())
    })))
}

fn rat_to_py(r: &num_rational::BigRational) -> PyRat {
    (r.numer().to_string(), r.denom().to_string())
}

/// Octonion product; coordinates in and out as rational pairs.
#[pyfunction]
fn oct_mul(a: Vec<(i64, i64)>, b: Vec<(i64, i64)>) -> PyResult<Vec<PyRat>> {
    let p = octonion::oct_mul(&oct_from_py(a)?, &oct_from_py(b)?);
    Ok(p.0.iter().map(rat_to_py).collect())
}

/// The octonion norm form, exactly.
#[pyfunction]
fn oct_norm(a: Vec<(i64, i64)>) -> PyResult<PyRat> {
    Ok(rat_to_py(&octonion::oct_norm(&oct_from_py(a)?)))
}

#[pymodule]
fn sdual(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(grassmann_suitable, m)?)?;
    m.add_function(wrap_pyfunction!(grassmann_dual, m)?)?;
    m.add_function(wrap_pyfunction!(spinor_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(spinor_dual, m)?)?;
    m.add_function(wrap_pyfunction!(iso_suitable, m)?)?;
    m.add_function(wrap_pyfunction!(dual, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_space, m)?)?;
    m.add_function(wrap_pyfunction!(quiver_json, m)?)?;
    m.add_function(wrap_pyfunction!(h0, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(oct_mul, m)?)?;
    m.add_function(wrap_pyfunction!(oct_norm, m)?)?;
    Ok(())
}
