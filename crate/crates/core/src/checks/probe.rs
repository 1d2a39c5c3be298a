use serde::{Deserialize, Serialize};

use super::eval::evaluate;
use super::instance::{Instance, Params};
use super::registry::find_check;
use crate::constants::{arith, endpoint_constants, geom, Endpoint};
use crate::error::{Error, Result};
use crate::gen::OrderedBounds;
use crate::hermitian::scalar_margin;
use crate::Hermitian;

pub const PROBE_CHECKS: [&str; 5] = ["thm19", "cor10", "prop8_nabla", "prop8_harm", "cor_xi_sharp"];

/// One side of a two-sided statement, evaluated where its constant is attained.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeSide {
    pub label: String,
    pub margin: f64,
    pub instance: Instance,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Probe {
    pub check_id: String,
    /// Largest `|margin|` over the sides; near zero means the constant is attained.
    pub gap: f64,
    pub sides: Vec<ProbeSide>,
}

fn scalars(a: f64, b: f64, params: Params) -> Instance {
    Instance::pair(Hermitian::diag(&[a]), Hermitian::diag(&[b]), params)
}

fn side(id: &str, label: &str, inst: Instance) -> Result<ProbeSide> {
    let parts = evaluate(find_check(id)?, &inst)?;
    let margin = parts
        .iter()
        .find(|p| p.label == label)
        .map(|p| p.margin)
        .ok_or_else(|| Error::InvalidParameter(format!("{id} has no part `{label}`")))?;
    Ok(ProbeSide {
        label: label.to_string(),
        margin,
        instance: inst,
    })
}

/// Evaluates a check at the scalar instances attaining its constants.
///
/// `thm19` and `cor_xi_sharp` read `(s, t)` as the sandwich interval; `cor10`
/// reads it as `(m, M)`; the separated-spectra checks use
/// `(m2, m1, M1, M2) = (s, 1, 1 + s, 1 + t)`, which needs `s ≤ 1` and `s ≤ t`.
pub fn sharpness_probe(check_id: &str, s: f64, t: f64, v: f64) -> Result<Probe> {
    find_check(check_id)?;
    let base = Params {
        v: Some(v),
        dim: 1,
        ..Params::default()
    };
    let sides = match check_id {
        "thm19" => {
            let c = endpoint_constants(s, t, v)?;
            let params = Params {
                s: Some(s),
                t: Some(t),
                ..base
            };
            vec![
                side(check_id, "lower", scalars(1.0, c.xi_at.pick(s, t), params.clone()))?,
                side(check_id, "upper", scalars(1.0, c.psi_at.pick(s, t), params))?,
            ]
        }
        "cor10" => {
            let (m, big_m) = (s, t);
            let c = endpoint_constants(m / big_m, big_m / m, v)?;
            let params = Params {
                m: Some(m),
                big_m: Some(big_m),
                ..base
            };
            let pair = |at: Endpoint| match at {
                Endpoint::S => (big_m, m),
                Endpoint::T => (m, big_m),
            };
            let (xa, xb) = pair(c.xi_at);
            let (ya, yb) = pair(c.psi_at);
            vec![
                side(check_id, "lower", scalars(xa, xb, params.clone()))?,
                side(check_id, "upper", scalars(ya, yb, params))?,
            ]
        }
        "prop8_nabla" | "prop8_harm" => {
            let bounds = OrderedBounds::new(s, 1.0, 1.0 + s, 1.0 + t)?;
            let params = Params {
                bounds: Some(bounds),
                ..base
            };
            let inner = scalars(1.0, 1.0 + s, params.clone());
            let outer = scalars(s, 1.0 + t, params);
            if check_id == "prop8_nabla" {
                vec![side(check_id, "lower", outer)?, side(check_id, "upper", inner)?]
            } else {
                vec![side(check_id, "lower", inner)?, side(check_id, "upper", outer)?]
            }
        }
        "cor_xi_sharp" => {
            // The constant enters through (1−v)+vx ≤ ξ x^v, probed with f = id.
            let c = endpoint_constants(s, t, v)?;
            let x = c.xi_at.pick(s, t);
            let params = Params {
                s: Some(s),
                t: Some(t),
                function: Some("x".into()),
                ..base
            };
            vec![ProbeSide {
                label: "arithmetic ≤ ξ·geometric".into(),
                margin: scalar_margin(arith(v, 1.0, x), c.xi * geom(v, 1.0, x)),
                instance: scalars(1.0, x, params),
            }]
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "sharpness probe supports {PROBE_CHECKS:?}, not `{other}`"
            )))
        }
    };
    let gap = sides.iter().map(|x| x.margin.abs()).fold(0.0, f64::max);
    Ok(Probe {
        check_id: check_id.to_string(),
        gap,
        sides,
    })
}
