use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functions::FunctionClass;

/// How the operands of a check are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    /// `sA ≤ B ≤ tA`.
    Sandwich,
    /// `mI ≤ A, B ≤ MI`.
    Bounded,
    /// `spec(A)` below `spec(B)`.
    OrderedLowHigh,
    /// `spec(B)` below `spec(A)`.
    OrderedHighLow,
    /// Low/high for `v > 1`, high/low for `v < 0`.
    OrderedBySign,
    /// Scalar parameters only, no operands.
    Scalar,
}

/// Which weights (or powers) a check is swept over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridKind {
    /// The configured `v_grid` inside `[0, 1]`.
    UnitWeights,
    /// `v = 1/2` only.
    Half,
    AboveOne,
    BelowZero,
    /// Both `AboveOne` and `BelowZero`.
    Outside,
    /// The configured `p_grid` at `v = 1/2`.
    Powers,
}

pub const ABOVE_ONE: [f64; 3] = [1.5, 2.0, 3.0];
pub const BELOW_ZERO: [f64; 2] = [-0.5, -1.0];

/// Whether failures of a check count against the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Asserted,
    /// Reproduces a misprinted statement; failures are expected.
    Diagnostic,
    /// Believed but unproven; failures are findings.
    Monitored,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub instance: InstanceKind,
    pub grid: GridKind,
    pub expectation: Expectation,
    pub uses_map: bool,
    pub function: Option<FunctionClass>,
    /// Sweeps the mean catalog for `σ` (and `τ` when two means appear).
    pub means: MeanUse,
    pub vectors: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeanUse {
    None,
    Sigma,
    SigmaTau,
}

impl CheckSpec {
    pub fn is_asserted(&self) -> bool {
        self.expectation == Expectation::Asserted
    }

    /// Parameter names an instance of this check carries.
    pub fn schema(&self) -> Vec<&'static str> {
        let mut out = vec![if self.grid == GridKind::Powers { "p" } else { "v" }];
        match self.instance {
            InstanceKind::Sandwich => out.extend(["s", "t"]),
            InstanceKind::Bounded => out.extend(["m", "M"]),
            InstanceKind::OrderedLowHigh | InstanceKind::OrderedHighLow | InstanceKind::OrderedBySign => {
                out.extend(["m2", "m1", "M1", "M2"])
            }
            InstanceKind::Scalar => {}
        }
        if self.uses_map {
            out.push("map");
        }
        if self.function.is_some() {
            out.push("function");
        }
        match self.means {
            MeanUse::None => {}
            MeanUse::Sigma => out.push("sigma"),
            MeanUse::SigmaTau => out.extend(["sigma", "tau"]),
        }
        if self.vectors > 0 {
            out.push("h");
        }
        out.extend(["dim", "seed"]);
        out
    }
}

/// One line of [`list_checks`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckListing {
    pub check_id: String,
    pub statement: String,
    pub instance: InstanceKind,
    pub schema: Vec<String>,
    pub expectation: Expectation,
}

const fn spec(
    id: &'static str,
    statement: &'static str,
    instance: InstanceKind,
    grid: GridKind,
) -> CheckSpec {
    CheckSpec {
        id,
        statement,
        instance,
        grid,
        expectation: Expectation::Asserted,
        uses_map: false,
        function: None,
        means: MeanUse::None,
        vectors: 0,
    }
}

const fn mapped(mut c: CheckSpec) -> CheckSpec {
    c.uses_map = true;
    c
}

const fn with_fn(mut c: CheckSpec, class: FunctionClass) -> CheckSpec {
    c.function = Some(class);
    c
}

const fn with_means(mut c: CheckSpec, means: MeanUse) -> CheckSpec {
    c.means = means;
    c
}

const fn expect(mut c: CheckSpec, e: Expectation) -> CheckSpec {
    c.expectation = e;
    c
}

use FunctionClass::{Concave, Convex, Monotone, MonotoneDecreasing};
use GridKind::*;
use InstanceKind::*;

static REGISTRY: [CheckSpec; 39] = [
    spec("eq6_chain", "A!_vB ≤ A♯_vB ≤ A∇_vB", Bounded, UnitWeights),
    spec("thm19", "sA ≤ B ≤ tA ⇒ (1/ξ)A∇_vB ≤ A♯_vB ≤ ψ A!_vB", Sandwich, UnitWeights),
    spec(
        "lemma21_signs",
        "0 < x ≤ 1: f_v(x) − f_v(1/x) ≤ 0 ≤ g_v(x) − g_v(1/x) for v ≤ 1/2, reversed for v ≥ 1/2",
        Scalar,
        UnitWeights,
    ),
    spec(
        "cor10",
        "mI ≤ A, B ≤ MI ⇒ (m♯_λM)/(m∇_λM) A∇_vB ≤ A♯_vB ≤ (m♯_μM)/(m!_μM) A!_vB",
        Bounded,
        UnitWeights,
    ),
    spec(
        "remark_kantorovich_compare",
        "(m1♯_vM1)/(m1∇_vM1) ≤ K(M1/m1)^(−min{v,1−v}) and (m2∇_vM2)/(m2♯_vM2) ≤ K(M2/m2)^max{v,1−v}",
        Scalar,
        UnitWeights,
    ),
    mapped(spec("needed_power", "Φ(A∇B) ≤ (m∇M)/(m♯M) Φ(A♯B)", Bounded, Half)),
    mapped(spec("power_p_lin", "Φ(A∇B)^p ≤ c_lin Φ(A♯B)^p", Bounded, Powers)),
    mapped(spec("power_p_fur", "Φ(A∇B)^p ≤ c_fur Φ(A♯B)^p", Bounded, Powers)),
    mapped(spec("power_p_eta", "Φ(A∇B)^p ≤ η Φ(A♯B)^p, η = min{c_lin, c_fur}", Bounded, Powers)),
    mapped(spec("power_p_eta_maps", "Φ(A∇B)^p ≤ η (Φ(A)♯Φ(B))^p", Bounded, Powers)),
    spec(
        "prop8_nabla",
        "separated spectra, A low: (m2♯_vM2)/(m2∇_vM2) A∇_vB ≤ A♯_vB ≤ (m1♯_vM1)/(m1∇_vM1) A∇_vB",
        OrderedLowHigh,
        UnitWeights,
    ),
    spec(
        "prop8_harm",
        "separated spectra, A low: (m1♯_vM1)/(m1!_vM1) A!_vB ≤ A♯_vB ≤ (m2♯_vM2)/(m2!_vM2) A!_vB",
        OrderedLowHigh,
        UnitWeights,
    ),
    expect(
        spec(
            "prop8_harm_literal",
            "as prop8_harm with the upper denominator m1!_vM2 (misprinted variant)",
            OrderedLowHigh,
            UnitWeights,
        ),
        Expectation::Diagnostic,
    ),
    mapped(spec(
        "cor2_2_i",
        "A low, B high, Φ unital: Φ(A)♯_vΦ(B) ≤ (m1♯_vM1)/(m2♯_vM2)·(m2∇_vM2)/(m1∇_vM1) Φ(A♯_vB)",
        OrderedLowHigh,
        UnitWeights,
    )),
    mapped(spec(
        "cor2_2_ii",
        "B low, A high, Φ unital: Φ(A)♯_vΦ(B) ≤ (M1♯_vm1)/(M2♯_vm2)·(M2∇_vm2)/(M1∇_vm1) Φ(A♯_vB)",
        OrderedHighLow,
        UnitWeights,
    )),
    mapped(spec(
        "polya_szego",
        "mI ≤ A, B ≤ MI: Φ(A)♯Φ(B) ≤ (M+m)/(2√(Mm)) Φ(A♯B)",
        Bounded,
        Half,
    )),
    spec(
        "remark1_3_improves",
        "at v = 1/2 the separated-spectra map constants are ≤ (M2+m2)/(2√(M2m2))",
        Scalar,
        Half,
    ),
    spec(
        "c8_i",
        "A low, B high: two-sided ∇ and ! bounds on the Tsallis relative entropy T_v(A|B)",
        OrderedLowHigh,
        UnitWeights,
    ),
    spec(
        "c8_ii",
        "B low, A high: two-sided ∇ and ! bounds on the Tsallis relative entropy T_v(A|B)",
        OrderedHighLow,
        UnitWeights,
    ),
    expect(
        spec(
            "c8_literal",
            "A low, B high: the ! family of Tsallis bounds with A∇_vB inside (misprinted variant)",
            OrderedLowHigh,
            UnitWeights,
        ),
        Expectation::Diagnostic,
    ),
    spec("eq5", "v ∉ [0, 1]: A∇_vB ≤ A♯_vB", Bounded, Outside),
    spec(
        "prop13_v_gt1",
        "A low, B high, v > 1: (m1♯_vM1)/(m1∇_vM1) A∇_vB ≤ A♯_vB ≤ (m2♯_vM2)/(m2∇_vM2) A∇_vB",
        OrderedLowHigh,
        AboveOne,
    ),
    spec(
        "prop13_v_lt0",
        "A low, B high, v < 0: (m1!_vM1)/(m1♯_vM1) A♯_vB ≤ A!_vB ≤ (m2!_vM2)/(m2♯_vM2) A♯_vB",
        OrderedLowHigh,
        BelowZero,
    ),
    with_means(
        with_fn(
            mapped(spec(
                "thm_c_f",
                "sA ≤ B ≤ tA, f operator monotone: f(Φ(A))τ_v f(Φ(B)) ≤ ξψ f(Φ(Aσ_vB))",
                Sandwich,
                UnitWeights,
            )),
            Monotone,
        ),
        MeanUse::SigmaTau,
    ),
    with_means(
        with_fn(
            mapped(spec(
                "thm_c_g",
                "sA ≤ B ≤ tA, g operator monotone decreasing: g(Φ(Aσ_vB)) ≤ ξψ g(Φ(A))τ_v g(Φ(B))",
                Sandwich,
                UnitWeights,
            )),
            MonotoneDecreasing,
        ),
        MeanUse::SigmaTau,
    ),
    with_means(
        with_fn(
            mapped(spec(
                "remark_alpha_f",
                "sA ≤ B ≤ tA, f operator monotone: f(Φ(A))τ_v f(Φ(B)) ≤ α f(Φ(Aσ_vB))",
                Sandwich,
                UnitWeights,
            )),
            Monotone,
        ),
        MeanUse::SigmaTau,
    ),
    with_means(
        with_fn(
            mapped(spec(
                "hoa_baseline",
                "mI ≤ A, B ≤ MI: f(Φ(A))τ f(Φ(B)) ≤ (M+m)²/(4Mm) f(Φ(AσB))",
                Bounded,
                Half,
            )),
            Monotone,
        ),
        MeanUse::SigmaTau,
    ),
    with_means(
        with_fn(
            mapped(spec(
                "additive_f",
                "mI ≤ A, B ≤ MI, Φ unital: f(Φ(A))τ f(Φ(B)) − f(Φ(AσB)) ≤ (M−m)²/(4Mm) f(M) I",
                Bounded,
                Half,
            )),
            Monotone,
        ),
        MeanUse::SigmaTau,
    ),
    with_means(
        with_fn(
            mapped(spec(
                "additive_g",
                "mI ≤ A, B ≤ MI, Φ unital: g(Φ(AσB)) − g(Φ(A))τ g(Φ(B)) ≤ (M−m)²/(4Mm) g(m) I",
                Bounded,
                Half,
            )),
            MonotoneDecreasing,
        ),
        MeanUse::SigmaTau,
    ),
    with_fn(
        spec(
            "eq15_specht",
            "sA ≤ B ≤ tA: f(A)♯_v f(B) ≤ max{S(s), S(t)} f(A♯_vB)",
            Sandwich,
            UnitWeights,
        ),
        Monotone,
    ),
    with_fn(
        spec("cor_xi_sharp", "sA ≤ B ≤ tA: f(A)♯_v f(B) ≤ ξ f(A♯_vB)", Sandwich, UnitWeights),
        Monotone,
    ),
    expect(
        spec("xi_vs_specht", "ξ(s, t, v) ≤ max{S(s), S(t)}", Scalar, UnitWeights),
        Expectation::Monitored,
    ),
    CheckSpec {
        vectors: 8,
        ..with_means(
            with_fn(
                spec(
                    "inner_product_g",
                    "sA ≤ B ≤ tA: ⟨g(Aσ_vB)h, h⟩ ≤ ξψ ⟨g(A)h, h⟩^(1−v) ⟨g(B)h, h⟩^v",
                    Sandwich,
                    UnitWeights,
                ),
                MonotoneDecreasing,
            ),
            MeanUse::Sigma,
        )
    },
    with_fn(
        spec("lemma14_convex", "v ∉ [0, 1], f operator convex: f(A)∇_v f(B) ≤ f(A∇_vB)", OrderedBySign, Outside),
        Convex,
    ),
    with_fn(
        spec("lemma14_concave", "v ∉ [0, 1], f operator concave: f(A∇_vB) ≤ f(A)∇_v f(B)", OrderedBySign, Outside),
        Concave,
    ),
    with_fn(
        spec(
            "final_prop_i_f",
            "A low, B high, v > 1: f(A♯_vB) ≤ (m2♯_vM2)/(m2∇_vM2) f(A)♯_v f(B)",
            OrderedLowHigh,
            AboveOne,
        ),
        Monotone,
    ),
    with_fn(
        spec(
            "final_prop_i_g",
            "A low, B high, v > 1: g(A)♯_v g(B) ≤ (m2♯_vM2)/(m2∇_vM2) g(A♯_vB)",
            OrderedLowHigh,
            AboveOne,
        ),
        MonotoneDecreasing,
    ),
    with_fn(
        spec(
            "final_prop_ii_f",
            "B low, A high, v < 0: f(A♯_vB) ≤ (M2♯_vm2)/(M2∇_vm2) f(A)♯_v f(B)",
            OrderedHighLow,
            BelowZero,
        ),
        Monotone,
    ),
    with_fn(
        spec(
            "final_prop_ii_g",
            "B low, A high, v < 0: g(A)♯_v g(B) ≤ (M2♯_vm2)/(M2∇_vm2) g(A♯_vB)",
            OrderedHighLow,
            BelowZero,
        ),
        MonotoneDecreasing,
    ),
];

/// The full registry in declaration order.
pub fn registry() -> &'static [CheckSpec] {
    &REGISTRY
}

pub fn find_check(id: &str) -> Result<&'static CheckSpec> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Position of a check in the registry, used to key random streams.
pub fn check_index(id: &str) -> Result<usize> {
    REGISTRY
        .iter()
        .position(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Every check, sorted by id.
pub fn list_checks() -> Vec<CheckListing> {
    let mut out: Vec<CheckListing> = REGISTRY
        .iter()
        .map(|c| CheckListing {
            check_id: c.id.to_string(),
            statement: c.statement.to_string(),
            instance: c.instance,
            schema: c.schema().into_iter().map(String::from).collect(),
            expectation: c.expectation,
        })
        .collect();
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    out
}
