use super::instance::Instance;
use super::registry::{CheckSpec, GridKind, InstanceKind};
use crate::constants::{arith, endpoint_constants, geom, harm, kantorovich, power_constants, specht, Weight};
use crate::constants::{aux_scalar, AuxFn};
use crate::entropy::{c8_bounds, check_ordered, printed_harm_bounds, tsallis, SpectralCase};
use crate::error::{Error, Result};
use crate::functions::{eval_fn, lookup, FunctionDescriptor};
use crate::gen::OrderedBounds;
use crate::hermitian::{loewner_margin, scalar_margin};
use crate::maps::apply_map;
use crate::means::{weighted_mean, MeanDescriptor};
use crate::Hermitian;

/// One comparison inside a check: `margin ≥ 0` iff it holds.
#[derive(Clone, Debug, PartialEq)]
pub struct Part {
    pub label: String,
    pub margin: f64,
}

struct Parts(Vec<Part>);

impl Parts {
    fn push(&mut self, label: impl Into<String>, margin: f64) {
        self.0.push(Part {
            label: label.into(),
            margin,
        });
    }

    fn matrix(&mut self, label: impl Into<String>, lhs: &Hermitian, rhs: &Hermitian) -> Result<()> {
        let m = loewner_margin(lhs, rhs)?;
        self.push(label, m);
        Ok(())
    }
}

fn precondition(msg: String) -> Error {
    Error::Precondition(msg)
}

fn check_weight(spec: &CheckSpec, v: f64) -> Result<()> {
    let ok = match spec.grid {
        GridKind::UnitWeights | GridKind::Half | GridKind::Powers => {
            if spec.id.starts_with("c8") {
                v > 0.0 && v <= 1.0
            } else {
                (0.0..=1.0).contains(&v)
            }
        }
        GridKind::AboveOne => v > 1.0,
        GridKind::BelowZero => v < 0.0,
        GridKind::Outside => !(0.0..=1.0).contains(&v),
    };
    if ok {
        Ok(())
    } else {
        Err(precondition(format!("weight v = {v} outside the range of {}", spec.id)))
    }
}

const SPECTRAL_SLACK: f64 = 1e-10;

fn check_bounded(a: &Hermitian, b: &Hermitian, m: f64, big_m: f64) -> Result<()> {
    if !(m > 0.0 && m <= big_m) {
        return Err(Error::InvalidParameter(format!("bounds need 0 < m ≤ M, got ({m}, {big_m})")));
    }
    let slack = SPECTRAL_SLACK * big_m.max(1.0);
    for (x, name) in [(a, "A"), (b, "B")] {
        let (lo, hi) = (x.min_eigenvalue(), x.max_eigenvalue());
        if lo < m - slack || hi > big_m + slack {
            return Err(precondition(format!("spectrum of {name} is [{lo}, {hi}], outside [{m}, {big_m}]")));
        }
    }
    Ok(())
}

fn check_sandwich(a: &Hermitian, b: &Hermitian, s: f64, t: f64) -> Result<()> {
    if !(s > 0.0 && s <= t) {
        return Err(Error::InvalidParameter(format!("sandwich needs 0 < s ≤ t, got ({s}, {t})")));
    }
    a.ensure_positive_definite()
        .map_err(|e| precondition(format!("A must be positive definite: {e}")))?;
    if loewner_margin(&a.scale(s), b)? < -SPECTRAL_SLACK || loewner_margin(b, &a.scale(t))? < -SPECTRAL_SLACK {
        return Err(precondition(format!("pair does not satisfy {s}A ≤ B ≤ {t}A")));
    }
    Ok(())
}

fn case_of(spec: &CheckSpec, v: f64) -> SpectralCase {
    match spec.instance {
        InstanceKind::OrderedHighLow => SpectralCase::HighLow,
        InstanceKind::OrderedBySign if v < 0.0 => SpectralCase::HighLow,
        _ => SpectralCase::LowHigh,
    }
}

fn function(inst: &Instance) -> Result<FunctionDescriptor> {
    let label = inst
        .params
        .function
        .as_deref()
        .ok_or_else(|| Error::InvalidParameter("instance is missing a function".into()))?;
    lookup(label)
}

fn require_class(spec: &CheckSpec, f: &FunctionDescriptor) -> Result<()> {
    match spec.function {
        Some(class) if !f.has_class(class) => Err(precondition(format!("{} is not declared {class}", f.label))),
        _ => Ok(()),
    }
}

fn arith_op(v: f64, a: &Hermitian, b: &Hermitian) -> Result<Hermitian> {
    weighted_mean(&MeanDescriptor::arithmetic(v), a, b)
}

fn geom_op(v: f64, a: &Hermitian, b: &Hermitian) -> Result<Hermitian> {
    weighted_mean(&MeanDescriptor::geometric(v), a, b)
}

fn harm_op(v: f64, a: &Hermitian, b: &Hermitian) -> Result<Hermitian> {
    weighted_mean(&MeanDescriptor::harmonic(v), a, b)
}

/// `(low_min, low_max, high_min, high_max)` as `(m2, m1, M1, M2)`.
fn unpack(b: &OrderedBounds) -> (f64, f64, f64, f64) {
    (b.low_min, b.low_max, b.high_min, b.high_max)
}

/// Validates the instance against `spec` and returns every sub-comparison.
pub fn evaluate(spec: &CheckSpec, inst: &Instance) -> Result<Vec<Part>> {
    let p = &inst.params;
    let v = p.weight()?;
    check_weight(spec, v)?;
    let mut parts = Parts(Vec::new());

    if spec.instance == InstanceKind::Scalar {
        scalar_check(spec, inst, v, &mut parts)?;
        return Ok(parts.0);
    }

    let (a, b) = inst.operands()?;
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    match spec.instance {
        InstanceKind::Sandwich => {
            let (s, t) = p.sandwich()?;
            check_sandwich(a, b, s, t)?;
        }
        InstanceKind::Bounded => {
            let (m, big_m) = p.range()?;
            check_bounded(a, b, m, big_m)?;
        }
        _ => check_ordered(case_of(spec, v), &p.ordered()?, a, b)?,
    }
    let phi = |x: &Hermitian| -> Result<Hermitian> {
        match &inst.map {
            Some(d) => apply_map(d, x),
            None => Err(Error::InvalidParameter("instance is missing a map".into())),
        }
    };
    if spec.uses_map {
        let d = inst.map.as_ref().ok_or_else(|| Error::InvalidParameter("instance is missing a map".into()))?;
        if !d.unital() {
            return Err(precondition(format!("map {} is not unital", d.label())));
        }
    }

    match spec.id {
        "eq6_chain" => {
            let (h, g, ar) = (harm_op(v, a, b)?, geom_op(v, a, b)?, arith_op(v, a, b)?);
            parts.matrix("harmonic ≤ geometric", &h, &g)?;
            parts.matrix("geometric ≤ arithmetic", &g, &ar)?;
        }
        "thm19" => {
            let (s, t) = p.sandwich()?;
            let c = endpoint_constants(s, t, v)?;
            let g = geom_op(v, a, b)?;
            parts.matrix("lower", &arith_op(v, a, b)?.scale(c.xi.recip()), &g)?;
            parts.matrix("upper", &g, &harm_op(v, a, b)?.scale(c.psi))?;
        }
        "cor10" => {
            let (m, big_m) = p.range()?;
            let w = Weight::new(v);
            let lo = geom(w.lambda, m, big_m) / arith(w.lambda, m, big_m);
            let hi = geom(w.mu, m, big_m) / harm(w.mu, m, big_m);
            let g = geom_op(v, a, b)?;
            parts.matrix("lower", &arith_op(v, a, b)?.scale(lo), &g)?;
            parts.matrix("upper", &g, &harm_op(v, a, b)?.scale(hi))?;
        }
        "needed_power" => {
            let (m, big_m) = p.range()?;
            let c = arith(0.5, m, big_m) / geom(0.5, m, big_m);
            parts.matrix("upper", &phi(&arith_op(0.5, a, b)?)?, &phi(&geom_op(0.5, a, b)?)?.scale(c))?;
        }
        "power_p_lin" | "power_p_fur" | "power_p_eta" | "power_p_eta_maps" => {
            let (m, big_m) = p.range()?;
            let pw = p.need(p.p, "p")?;
            let consts = power_constants(m, big_m, pw)?;
            let c = match spec.id {
                "power_p_lin" => consts.c_lin,
                "power_p_fur" => consts.c_fur,
                _ => consts.eta,
            };
            let lhs = phi(&arith_op(0.5, a, b)?)?.powf(pw)?;
            let inner = if spec.id == "power_p_eta_maps" {
                geom_op(0.5, &phi(a)?, &phi(b)?)?
            } else {
                phi(&geom_op(0.5, a, b)?)?
            };
            parts.matrix("upper", &lhs, &inner.powf(pw)?.scale(c))?;
        }
        "prop8_nabla" | "prop13_v_gt1" => {
            let (m2, m1, big_m1, big_m2) = unpack(&p.ordered()?);
            let outer = geom(v, m2, big_m2) / arith(v, m2, big_m2);
            let inner = geom(v, m1, big_m1) / arith(v, m1, big_m1);
            // The ratio is decreasing past 1 inside [0, 1] and increasing outside.
            let (lo, hi) = if spec.id == "prop8_nabla" { (outer, inner) } else { (inner, outer) };
            let (ar, g) = (arith_op(v, a, b)?, geom_op(v, a, b)?);
            parts.matrix("lower", &ar.scale(lo), &g)?;
            parts.matrix("upper", &g, &ar.scale(hi))?;
        }
        "prop8_harm" | "prop8_harm_literal" => {
            let (m2, m1, big_m1, big_m2) = unpack(&p.ordered()?);
            let lo = geom(v, m1, big_m1) / harm(v, m1, big_m1);
            let hi = if spec.id == "prop8_harm" {
                geom(v, m2, big_m2) / harm(v, m2, big_m2)
            } else {
                geom(v, m2, big_m2) / harm(v, m1, big_m2)
            };
            let (h, g) = (harm_op(v, a, b)?, geom_op(v, a, b)?);
            parts.matrix("lower", &h.scale(lo), &g)?;
            parts.matrix("upper", &g, &h.scale(hi))?;
        }
        "prop13_v_lt0" => {
            let (m2, m1, big_m1, big_m2) = unpack(&p.ordered()?);
            let lo = harm(v, m1, big_m1) / geom(v, m1, big_m1);
            let hi = harm(v, m2, big_m2) / geom(v, m2, big_m2);
            let (h, g) = (harm_op(v, a, b)?, geom_op(v, a, b)?);
            parts.matrix("lower", &g.scale(lo), &h)?;
            parts.matrix("upper", &h, &g.scale(hi))?;
        }
        "cor2_2_i" | "cor2_2_ii" => {
            let (m2, m1, big_m1, big_m2) = unpack(&p.ordered()?);
            let c = if spec.id == "cor2_2_i" {
                geom(v, m1, big_m1) / geom(v, m2, big_m2) * arith(v, m2, big_m2) / arith(v, m1, big_m1)
            } else {
                geom(v, big_m1, m1) / geom(v, big_m2, m2) * arith(v, big_m2, m2) / arith(v, big_m1, m1)
            };
            let lhs = geom_op(v, &phi(a)?, &phi(b)?)?;
            parts.matrix("upper", &lhs, &phi(&geom_op(v, a, b)?)?.scale(c))?;
        }
        "polya_szego" => {
            let (m, big_m) = p.range()?;
            let c = (big_m + m) / (2.0 * (big_m * m).sqrt());
            let lhs = geom_op(0.5, &phi(a)?, &phi(b)?)?;
            parts.matrix("upper", &lhs, &phi(&geom_op(0.5, a, b)?)?.scale(c))?;
        }
        "c8_i" | "c8_ii" => {
            let t = tsallis(a, b, v)?;
            let r = c8_bounds(case_of(spec, v), &p.ordered()?, v, a, b)?;
            parts.matrix("arithmetic lower", &r.nabla_lo, &t)?;
            parts.matrix("arithmetic upper", &t, &r.nabla_hi)?;
            parts.matrix("harmonic lower", &r.harm_lo, &t)?;
            parts.matrix("harmonic upper", &t, &r.harm_hi)?;
        }
        "c8_literal" => {
            let t = tsallis(a, b, v)?;
            let (lo, hi) = printed_harm_bounds(case_of(spec, v), &p.ordered()?, v, a, b)?;
            parts.matrix("harmonic lower", &lo, &t)?;
            parts.matrix("harmonic upper", &t, &hi)?;
        }
        "eq5" => {
            parts.matrix("arithmetic ≤ geometric", &arith_op(v, a, b)?, &geom_op(v, a, b)?)?;
        }
        "thm_c_f" | "thm_c_g" | "remark_alpha_f" | "hoa_baseline" | "additive_f" | "additive_g" => {
            let f = function(inst)?;
            require_class(spec, &f)?;
            let (c, offset) = match spec.id {
                "thm_c_f" | "thm_c_g" | "remark_alpha_f" => {
                    let (s, t) = p.sandwich()?;
                    let k = endpoint_constants(s, t, v)?;
                    (if spec.id == "remark_alpha_f" { k.alpha } else { k.xi * k.psi }, None)
                }
                "hoa_baseline" => {
                    let (m, big_m) = p.range()?;
                    ((big_m + m).powi(2) / (4.0 * big_m * m), None)
                }
                _ => {
                    let (m, big_m) = p.range()?;
                    let k = (big_m - m).powi(2) / (4.0 * big_m * m);
                    let at = if spec.id == "additive_f" { big_m } else { m };
                    (k, Some(k * f.eval_scalar(at)))
                }
            };
            let increasing = spec.id != "thm_c_g" && spec.id != "additive_g";
            let (fa, fb) = (eval_fn(&f, &phi(a)?)?, eval_fn(&f, &phi(b)?)?);
            for sigma in &inst.means {
                let f_sigma = eval_fn(&f, &phi(&weighted_mean(sigma, a, b)?)?)?;
                for tau in &inst.means {
                    let f_tau = weighted_mean(tau, &fa, &fb)?;
                    let label = format!("sigma={},tau={}", sigma.label(), tau.label());
                    let (big, small) = if increasing { (&f_tau, &f_sigma) } else { (&f_sigma, &f_tau) };
                    match offset {
                        None => parts.matrix(label, big, &small.scale(c))?,
                        Some(bound) => {
                            let diff = big.sub(small)?;
                            parts.matrix(label, &diff, &Hermitian::scalar(diff.dim(), bound))?
                        }
                    }
                }
            }
        }
        "eq15_specht" | "cor_xi_sharp" => {
            let f = function(inst)?;
            require_class(spec, &f)?;
            let (s, t) = p.sandwich()?;
            let c = if spec.id == "eq15_specht" {
                specht(s).max(specht(t))
            } else {
                endpoint_constants(s, t, v)?.xi
            };
            let lhs = geom_op(v, &eval_fn(&f, a)?, &eval_fn(&f, b)?)?;
            parts.matrix("upper", &lhs, &eval_fn(&f, &geom_op(v, a, b)?)?.scale(c))?;
        }
        "inner_product_g" => {
            let g = function(inst)?;
            require_class(spec, &g)?;
            let (s, t) = p.sandwich()?;
            let k = endpoint_constants(s, t, v)?;
            let (ga, gb) = (eval_fn(&g, a)?, eval_fn(&g, b)?);
            for sigma in &inst.means {
                let g_sigma = eval_fn(&g, &weighted_mean(sigma, a, b)?)?;
                for (i, h) in inst.vectors.iter().enumerate() {
                    let lhs = g_sigma.quadratic_form(h)?;
                    let rhs = k.xi * k.psi * ga.quadratic_form(h)?.powf(1.0 - v) * gb.quadratic_form(h)?.powf(v);
                    parts.push(format!("sigma={},h={i}", sigma.label()), scalar_margin(lhs, rhs));
                }
            }
        }
        "lemma14_convex" | "lemma14_concave" => {
            let f = function(inst)?;
            require_class(spec, &f)?;
            let outer = arith_op(v, &eval_fn(&f, a)?, &eval_fn(&f, b)?)?;
            let inner = eval_fn(&f, &arith_op(v, a, b)?)?;
            if spec.id == "lemma14_convex" {
                parts.matrix("upper", &outer, &inner)?;
            } else {
                parts.matrix("upper", &inner, &outer)?;
            }
        }
        "final_prop_i_f" | "final_prop_i_g" | "final_prop_ii_f" | "final_prop_ii_g" => {
            let f = function(inst)?;
            require_class(spec, &f)?;
            let (m2, _, _, big_m2) = unpack(&p.ordered()?);
            let (x, y) = if spec.id.starts_with("final_prop_i_") { (m2, big_m2) } else { (big_m2, m2) };
            let c = geom(v, x, y) / arith(v, x, y);
            let of_mean = eval_fn(&f, &geom_op(v, a, b)?)?;
            let mean_of = geom_op(v, &eval_fn(&f, a)?, &eval_fn(&f, b)?)?;
            if spec.id.ends_with("_f") {
                parts.matrix("upper", &of_mean, &mean_of.scale(c))?;
            } else {
                parts.matrix("upper", &mean_of, &of_mean.scale(c))?;
            }
        }
        other => return Err(Error::UnknownCheck(other.to_string())),
    }
    Ok(parts.0)
}

fn scalar_check(spec: &CheckSpec, inst: &Instance, v: f64, parts: &mut Parts) -> Result<()> {
    let p = &inst.params;
    match spec.id {
        "lemma21_signs" => {
            let x = p.need(p.x, "x")?;
            if !(x > 0.0 && x <= 1.0) {
                return Err(precondition(format!("x = {x} outside (0, 1]")));
            }
            let f = aux_scalar(AuxFn::FReflect, v, x)?;
            let g = aux_scalar(AuxFn::GReflect, v, x)?;
            if v <= 0.5 {
                parts.push("f reflection ≤ 0", scalar_margin(f, 0.0));
                parts.push("g reflection ≥ 0", scalar_margin(0.0, g));
            }
            if v >= 0.5 {
                parts.push("f reflection ≥ 0", scalar_margin(0.0, f));
                parts.push("g reflection ≤ 0", scalar_margin(g, 0.0));
            }
        }
        "remark_kantorovich_compare" => {
            let (m2, m1, big_m1, big_m2) = unpack(&p.ordered()?);
            let w = Weight::new(v);
            let ours_lo = geom(v, m1, big_m1) / arith(v, m1, big_m1);
            let ours_hi = arith(v, m2, big_m2) / geom(v, m2, big_m2);
            parts.push("lower constant", scalar_margin(ours_lo, kantorovich(big_m1 / m1).powf(-w.lambda)));
            parts.push("upper constant", scalar_margin(ours_hi, kantorovich(big_m2 / m2).powf(w.mu)));
        }
        "remark1_3_improves" => {
            let (m2, m1, big_m1, big_m2) = unpack(&p.ordered()?);
            let ps = (big_m2 + m2) / (2.0 * (big_m2 * m2).sqrt());
            let case_i = geom(v, m1, big_m1) / geom(v, m2, big_m2) * arith(v, m2, big_m2) / arith(v, m1, big_m1);
            let case_ii = geom(v, big_m1, m1) / geom(v, big_m2, m2) * arith(v, big_m2, m2) / arith(v, big_m1, m1);
            parts.push("case i", scalar_margin(case_i, ps));
            parts.push("case ii", scalar_margin(case_ii, ps));
        }
        "xi_vs_specht" => {
            let (s, t) = p.sandwich()?;
            let xi = endpoint_constants(s, t, v)?.xi;
            parts.push("xi ≤ specht", scalar_margin(xi, specht(s).max(specht(t))));
        }
        other => return Err(Error::UnknownCheck(other.to_string())),
    }
    Ok(())
}
