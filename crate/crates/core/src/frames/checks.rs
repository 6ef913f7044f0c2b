//! Evaluation of the frame identities under both realizations.
//!
//! Every identity is evaluated numerically, with both sides computed in the
//! chosen [`FrameAlgebra`], over all basis index pairs and, for identities
//! that take detector directions, over the nine basis-vector pairs plus
//! [`RANDOM_PAIRS`] seeded random unit pairs. Nothing here decides in
//! advance which identity should hold.
//!
//! Symbols are bound per realization as follows:
//!
//! * `β_j` in a frame-structure identity (EQ1, EQ4–EQ6, EQ9, EQ11) is the
//!   λ-handed frame, [`FrameAlgebra::handed_element`].
//! * Identities that name both bases (EQ23–EQ26, EQ36, EQ38) use the fixed
//!   basis `β_j` and the relabeled frame `β_j(λ) = λ β_j`.
//! * `I·v` is the fixed-basis dual `v_j β_j`; `μ·v` is `λ I·v`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::algebra::{delta, levi_civita, EvenElement, FrameAlgebra, Realization};
use super::Orientation;
use crate::clifford::{blade, IDENTITY_TOL};
use crate::clifford::{contract_trivector_vector, cross, gp, grade_project, Grade, Multivector, Vector3};
use crate::error::{Error, Result};
use crate::model::{random_unit_pairs, DIRECTION_SEED};

/// Number of seeded random direction pairs per vector identity.
pub const RANDOM_PAIRS: usize = 100;

/// Identifier of a checkable identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Eq1,
    Eq4,
    Eq5,
    Eq6,
    Eq8,
    Eq9,
    Eq11,
    Eq14,
    Eq15,
    Eq16,
    Eq18,
    Eq22,
    Eq23,
    Eq24,
    Eq25,
    Eq26,
    Eq36,
    Eq38,
    /// Vector-basis handedness flip leaves the bivector triple product at +1.
    Eq20,
    /// Bivector-basis handedness flip sends the triple product to −1.
    Eq21,
    /// Eq38 rewritten with `β_j(λ) = λ β_j` coincides with Eq25.
    Eq38ToEq25,
    /// Eq23 rewritten with `β_j(λ) = λ β_j` coincides with Eq24.
    Eq23ToEq24,
    /// Eq23 rewritten with `β_j(λ) = λ β_j` against Eq25.
    Eq23ToEq25,
}

impl CheckId {
    /// Identities accepted by [`check_equation`], in table order.
    pub const EQUATIONS: [CheckId; 18] = [
        CheckId::Eq1,
        CheckId::Eq4,
        CheckId::Eq5,
        CheckId::Eq6,
        CheckId::Eq8,
        CheckId::Eq9,
        CheckId::Eq11,
        CheckId::Eq14,
        CheckId::Eq15,
        CheckId::Eq16,
        CheckId::Eq18,
        CheckId::Eq22,
        CheckId::Eq23,
        CheckId::Eq24,
        CheckId::Eq25,
        CheckId::Eq26,
        CheckId::Eq36,
        CheckId::Eq38,
    ];

    /// Basis substitutions accepted by [`substitution_check`].
    pub const SUBSTITUTIONS: [CheckId; 3] = [CheckId::Eq38ToEq25, CheckId::Eq23ToEq24, CheckId::Eq23ToEq25];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Eq1 => "EQ1",
            CheckId::Eq4 => "EQ4",
            CheckId::Eq5 => "EQ5",
            CheckId::Eq6 => "EQ6",
            CheckId::Eq8 => "EQ8",
            CheckId::Eq9 => "EQ9",
            CheckId::Eq11 => "EQ11",
            CheckId::Eq14 => "EQ14",
            CheckId::Eq15 => "EQ15",
            CheckId::Eq16 => "EQ16",
            CheckId::Eq18 => "EQ18",
            CheckId::Eq22 => "EQ22",
            CheckId::Eq23 => "EQ23",
            CheckId::Eq24 => "EQ24",
            CheckId::Eq25 => "EQ25",
            CheckId::Eq26 => "EQ26",
            CheckId::Eq36 => "EQ36",
            CheckId::Eq38 => "EQ38",
            CheckId::Eq20 => "EQ20",
            CheckId::Eq21 => "EQ21",
            CheckId::Eq38ToEq25 => "EQ38->EQ25",
            CheckId::Eq23ToEq24 => "EQ23->EQ24",
            CheckId::Eq23ToEq25 => "EQ23->EQ25",
        }
    }

    fn all() -> impl Iterator<Item = CheckId> {
        CheckId::EQUATIONS.into_iter().chain([CheckId::Eq20, CheckId::Eq21]).chain(CheckId::SUBSTITUTIONS)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::all().find(|id| id.name() == s).ok_or_else(|| Error::UnknownEquation(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for CheckId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Outcome of evaluating one identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquationCheck {
    pub equation_id: CheckId,
    #[serde(rename = "lambda")]
    pub orientation: Orientation,
    pub realization: Realization,
    pub holds: bool,
    pub max_residual: f64,
}

impl EquationCheck {
    pub fn new(equation_id: CheckId, orientation: Orientation, realization: Realization, max_residual: f64) -> Self {
        EquationCheck { equation_id, orientation, realization, holds: max_residual < IDENTITY_TOL, max_residual }
    }

    pub const CSV_HEADER: &'static str = "equation_id,lambda,realization,holds,max_residual";

    /// One line of the truth table. The residual is written with nine
    /// decimals so that sub-tolerance rounding noise renders as zero.
    pub fn to_jsonl(&self) -> String {
        format!(
            "{{\"equation_id\":\"{}\",\"lambda\":{},\"realization\":\"{}\",\"holds\":{},\"max_residual\":{:.9}}}",
            self.equation_id,
            self.orientation.value(),
            self.realization,
            self.holds,
            self.max_residual
        )
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:.9}",
            self.equation_id,
            self.orientation.value(),
            self.realization,
            self.holds,
            self.max_residual
        )
    }
}

/// Basis-vector pairs followed by the seeded random pairs.
pub fn direction_pairs() -> Vec<(Vector3, Vector3)> {
    let mut pairs = Vec::with_capacity(9 + RANDOM_PAIRS);
    for j in 0..3 {
        for k in 0..3 {
            pairs.push((Vector3::axis(j), Vector3::axis(k)));
        }
    }
    pairs.extend(random_unit_pairs(DIRECTION_SEED, RANDOM_PAIRS));
    pairs
}

fn combination(coeffs: [f64; 3], elems: impl Fn(usize) -> EvenElement) -> EvenElement {
    (0..3).fold(EvenElement::ZERO, |acc, j| acc + coeffs[j] * elems(j))
}

/// `−δ_jk + c Σ_l ε_jkl X_l`.
fn rule_rhs(j: usize, k: usize, c: f64, elems: &impl Fn(usize) -> EvenElement) -> EvenElement {
    (0..3).fold(EvenElement::scalar(-delta(j, k)), |acc, l| acc + (c * levi_civita(j, k, l)) * elems(l))
}

/// Residual of `X_j X_k = −δ_jk + c ε_jkl X_l` over all nine pairs.
fn product_rule_residual(alg: &FrameAlgebra, c: f64, elems: impl Fn(usize) -> EvenElement) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..3 {
        for k in 0..3 {
            let lhs = alg.mul(&elems(j), &elems(k));
            worst = worst.max(lhs.max_abs_diff(&rule_rhs(j, k, c, &elems)));
        }
    }
    worst
}

fn triple_residual(alg: &FrameAlgebra, target: f64) -> f64 {
    [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
        .into_iter()
        .map(|(j, k, l)| {
            let prod = alg.mul(&alg.frame_mul(j, k), &alg.handed_element(l));
            prod.max_abs_diff(&EvenElement::scalar(target))
        })
        .fold(0.0, f64::max)
}

/// `μ·v` for `μ = λI`.
fn mu_dual(alg: &FrameAlgebra, v: [f64; 3]) -> EvenElement {
    let lambda = alg.orientation().sign();
    match alg.realization() {
        Realization::ConcreteEmbedding => {
            let m = contract_trivector_vector(&(Multivector::I * lambda), v).expect("λI is a trivector");
            EvenElement::bivector(m.bivector_part())
        }
        Realization::OrientedStructure => lambda * alg.dual(v),
    }
}

fn pair_residual(pairs: &[(Vector3, Vector3)], f: impl Fn(&[f64; 3], &[f64; 3], f64, &[f64; 3]) -> f64) -> f64 {
    pairs
        .iter()
        .map(|(a, b)| {
            let (a, b) = (a.components(), b.components());
            f(&a, &b, crate::clifford::dot(&a, &b), &cross(&a, &b))
        })
        .fold(0.0, f64::max)
}

fn equation_residual(id: CheckId, alg: &FrameAlgebra, pairs: &[(Vector3, Vector3)]) -> f64 {
    let lambda = alg.orientation().sign();
    let handed = |j| alg.handed_element(j);
    let frame = |j| alg.frame_element(j);
    let fixed = |j| alg.fixed_basis(j);
    match id {
        CheckId::Eq1 => product_rule_residual(alg, -1.0, handed),
        CheckId::Eq11 => product_rule_residual(alg, 1.0, handed),
        CheckId::Eq23 => product_rule_residual(alg, -1.0, frame),
        CheckId::Eq24 => product_rule_residual(alg, -lambda, fixed),
        CheckId::Eq25 => product_rule_residual(alg, -1.0, fixed),
        CheckId::Eq38 => product_rule_residual(alg, -lambda, frame),
        CheckId::Eq4 => {
            (0..3).map(|j| alg.frame_mul(j, j).max_abs_diff(&EvenElement::scalar(-1.0))).fold(0.0, f64::max)
        }
        CheckId::Eq5 => {
            let mut worst = 0.0f64;
            for j in 0..3 {
                for k in (0..3).filter(|&k| k != j) {
                    worst = worst.max(alg.frame_mul(j, k).max_abs_diff(&-alg.frame_mul(k, j)));
                }
            }
            worst
        }
        CheckId::Eq6 => triple_residual(alg, 1.0),
        CheckId::Eq9 => triple_residual(alg, -1.0),
        CheckId::Eq36 => (0..3)
            .map(|j| {
                let forward = frame(j).max_abs_diff(&(lambda * fixed(j)));
                let backward = fixed(j).max_abs_diff(&(lambda * frame(j)));
                forward.max(backward)
            })
            .fold(0.0, f64::max),
        CheckId::Eq8 | CheckId::Eq15 => pair_residual(pairs, |a, b, dot, c| {
            let lhs = alg.mul(&alg.dual(*a), &alg.dual(*b));
            lhs.max_abs_diff(&(EvenElement::scalar(-dot) - alg.dual(*c)))
        }),
        CheckId::Eq14 => pair_residual(pairs, |a, b, dot, c| {
            let lhs = alg.mul(&alg.dual(*a), &alg.dual(*b));
            lhs.max_abs_diff(&(EvenElement::scalar(-dot) + alg.dual(*c)))
        }),
        CheckId::Eq16 => pair_residual(pairs, |a, b, dot, c| {
            let lhs = alg.mul(&-alg.dual(*a), &-alg.dual(*b));
            lhs.max_abs_diff(&(EvenElement::scalar(-dot) - (-alg.dual(*c))))
        }),
        CheckId::Eq18 => pair_residual(pairs, |a, b, dot, c| {
            let lhs = alg.mul(&(lambda * alg.dual(*a)), &(lambda * alg.dual(*b)));
            lhs.max_abs_diff(&(EvenElement::scalar(-dot) - lambda * alg.dual(*c)))
        }),
        CheckId::Eq22 => pair_residual(pairs, |a, b, dot, c| {
            let lhs = alg.mul(&mu_dual(alg, *a), &mu_dual(alg, *b));
            lhs.max_abs_diff(&(EvenElement::scalar(-dot) - mu_dual(alg, *c)))
        }),
        CheckId::Eq26 => pair_residual(pairs, |a, b, dot, _| {
            let left = alg.mul(&combination(*a, frame), &combination(*b, frame));
            let middle = alg.mul(&(lambda * combination(*a, fixed)), &(lambda * combination(*b, fixed)));
            let mut right = EvenElement::scalar(-dot);
            for (j, aj) in a.iter().enumerate() {
                for (k, bk) in b.iter().enumerate() {
                    for l in 0..3 {
                        right = right + (-lambda * levi_civita(j, k, l) * aj * bk) * fixed(l);
                    }
                }
            }
            left.max_abs_diff(&middle).max(middle.max_abs_diff(&right))
        }),
        other => unreachable!("{other} is not a frame identity"),
    }
}

/// Evaluates one identity under the given orientation and realization.
pub fn check_equation(id: CheckId, lambda: Orientation, realization: Realization) -> Result<EquationCheck> {
    if !CheckId::EQUATIONS.contains(&id) {
        return Err(Error::UnknownEquation(id.to_string()));
    }
    let alg = FrameAlgebra::new(lambda, realization);
    let pairs = direction_pairs();
    Ok(EquationCheck::new(id, lambda, realization, equation_residual(id, &alg, &pairs)))
}

/// Like [`check_equation`] but parsing the identifier.
pub fn check_equation_named(id: &str, lambda: Orientation, realization: Realization) -> Result<EquationCheck> {
    check_equation(id.parse()?, lambda, realization)
}

/// A product rule `X_j X_k = δ-coeff δ_jk + ε-coeff ε_jkl X_l` whose
/// coefficients are signed powers of λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductRule {
    /// Whether `X` is the λ-frame `β_j(λ)` rather than the fixed basis.
    pub on_lambda_frame: bool,
    /// Power of λ multiplying the left-hand product.
    pub lhs_power: u32,
    pub delta: LambdaMonomial,
    pub epsilon: LambdaMonomial,
}

/// `sign · λ^power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaMonomial {
    pub sign: i8,
    pub power: u32,
}

impl LambdaMonomial {
    pub const fn new(sign: i8, power: u32) -> Self {
        LambdaMonomial { sign, power }
    }

    pub fn eval(&self, lambda: Orientation) -> f64 {
        f64::from(self.sign) * lambda.sign().powi(self.power as i32)
    }
}

impl ProductRule {
    const fn on_frame(delta: LambdaMonomial, epsilon: LambdaMonomial) -> Self {
        ProductRule { on_lambda_frame: true, lhs_power: 0, delta, epsilon }
    }

    const fn on_fixed(delta: LambdaMonomial, epsilon: LambdaMonomial) -> Self {
        ProductRule { on_lambda_frame: false, lhs_power: 0, delta, epsilon }
    }

    /// `β_j(λ) β_k(λ) = −δ_jk − ε_jkl β_l(λ)`.
    pub const EQ23: ProductRule = Self::on_frame(LambdaMonomial::new(-1, 0), LambdaMonomial::new(-1, 0));
    /// `β_j β_k = −δ_jk − λ ε_jkl β_l`.
    pub const EQ24: ProductRule = Self::on_fixed(LambdaMonomial::new(-1, 0), LambdaMonomial::new(-1, 1));
    /// `β_j β_k = −δ_jk − ε_jkl β_l`.
    pub const EQ25: ProductRule = Self::on_fixed(LambdaMonomial::new(-1, 0), LambdaMonomial::new(-1, 0));
    /// `β_j(λ) β_k(λ) = −δ_jk − λ ε_jkl β_l(λ)`.
    pub const EQ38: ProductRule = Self::on_frame(LambdaMonomial::new(-1, 0), LambdaMonomial::new(-1, 1));

    /// Rewrites a rule on the λ-frame in terms of the fixed basis using
    /// `β_j(λ) = λ β_j`, then cancels powers with `λ² = 1` so that the
    /// left-hand side is the bare product `β_j β_k`.
    pub fn substitute_fixed(self) -> ProductRule {
        let mut rule = self;
        if rule.on_lambda_frame {
            rule.on_lambda_frame = false;
            rule.lhs_power += 2;
            rule.epsilon.power += 1;
        }
        if rule.lhs_power % 2 == 1 {
            rule.delta.power += 1;
            rule.epsilon.power += 1;
        }
        rule.lhs_power = 0;
        rule.delta.power %= 2;
        rule.epsilon.power %= 2;
        rule
    }

    /// Whether the two rules agree for every λ once both are expressed over
    /// the fixed basis.
    pub fn reduces_to(self, target: ProductRule) -> bool {
        self.substitute_fixed() == target.substitute_fixed()
    }

    fn residual_element(&self, alg: &FrameAlgebra, j: usize, k: usize) -> EvenElement {
        let lambda = alg.orientation();
        let x = |i| {
            if self.on_lambda_frame {
                alg.frame_element(i)
            } else {
                alg.fixed_basis(i)
            }
        };
        let lhs = lambda.sign().powi(self.lhs_power as i32) * alg.mul(&x(j), &x(k));
        let mut rhs = EvenElement::scalar(self.delta.eval(lambda) * delta(j, k));
        for l in 0..3 {
            rhs = rhs + (self.epsilon.eval(lambda) * levi_civita(j, k, l)) * x(l);
        }
        lhs - rhs
    }
}

/// Substitutes `β_j(λ) = λ β_j` into `source` and compares with `target`
/// inside the realization: the per-pair residual elements `lhs − rhs` of the
/// two rules must coincide.
pub fn substitution_check(id: CheckId, lambda: Orientation, realization: Realization) -> Result<EquationCheck> {
    let (source, target) = match id {
        CheckId::Eq38ToEq25 => (ProductRule::EQ38, ProductRule::EQ25),
        CheckId::Eq23ToEq24 => (ProductRule::EQ23, ProductRule::EQ24),
        CheckId::Eq23ToEq25 => (ProductRule::EQ23, ProductRule::EQ25),
        other => return Err(Error::UnknownEquation(other.to_string())),
    };
    let alg = FrameAlgebra::new(lambda, realization);
    let mut worst = 0.0f64;
    for j in 0..3 {
        for k in 0..3 {
            let r_source = source.residual_element(&alg, j, k);
            let r_target = target.residual_element(&alg, j, k);
            worst = worst.max(r_source.max_abs_diff(&r_target));
        }
    }
    Ok(EquationCheck::new(id, lambda, realization, worst))
}

/// Eq38 reduced to the λ-independent Eq25.
pub fn gill_variant_reduction(lambda: Orientation, realization: Realization) -> EquationCheck {
    substitution_check(CheckId::Eq38ToEq25, lambda, realization).expect("known substitution")
}

/// `β_j(λ) = λ β_j` and `β_j = λ β_j(λ)`, elementwise in Cl(3,0).
pub fn reciprocity_check(lambda: Orientation) -> EquationCheck {
    let l = lambda.sign();
    let residual = (0..3)
        .map(|j| {
            let fixed = Multivector::beta(j);
            let frame = FrameAlgebra::new(lambda, Realization::ConcreteEmbedding).frame_element(j).to_multivector();
            frame.max_abs_diff(&(fixed * l)).max(fixed.max_abs_diff(&(frame * l)))
        })
        .fold(0.0, f64::max);
    EquationCheck::new(CheckId::Eq36, lambda, Realization::ConcreteEmbedding, residual)
}

/// Ordered product `β'_x β'_y β'_z` after negating the vector generators
/// selected by `flips`, with `I' = e'_x e'_y e'_z` and `β'_j = I'·e'_j`.
pub fn flipped_vector_triple(flips: [bool; 3]) -> Multivector {
    let e: Vec<Multivector> = (0..3)
        .map(|j| {
            let s = if flips[j] { -1.0 } else { 1.0 };
            Multivector::basis(blade::E1 + j) * s
        })
        .collect();
    let i_flipped = grade_project(&gp(&gp(&e[0], &e[1]), &e[2]), Grade::TRIVECTOR);
    let betas: Vec<Multivector> = (0..3)
        .map(|j| contract_trivector_vector(&i_flipped, e[j].vector_part()).expect("grade-3 projection"))
        .collect();
    gp(&gp(&betas[0], &betas[1]), &betas[2])
}

/// Ordered product of `s_j β_j` with `s_j = −1` where `flips[j]`.
pub fn flipped_bivector_triple(flips: [bool; 3]) -> Multivector {
    let b: Vec<Multivector> = (0..3).map(|j| Multivector::beta(j) * if flips[j] { -1.0 } else { 1.0 }).collect();
    gp(&gp(&b[0], &b[1]), &b[2])
}

/// Negating `e_y` (so `I → −I`) keeps `β_x β_y β_z = +1`.
pub fn flip_vector_basis_check() -> EquationCheck {
    flip_vector_basis_check_with([false, true, false])
}

pub fn flip_vector_basis_check_with(flips: [bool; 3]) -> EquationCheck {
    let residual = flipped_vector_triple(flips).max_abs_diff(&Multivector::ONE);
    EquationCheck::new(CheckId::Eq20, Orientation::Positive, Realization::ConcreteEmbedding, residual)
}

/// `(−β_x)(−β_y)(−β_z) = −1`.
pub fn flip_bivector_basis_check() -> EquationCheck {
    let residual = flipped_bivector_triple([true; 3]).max_abs_diff(&-Multivector::ONE);
    EquationCheck::new(CheckId::Eq21, Orientation::Negative, Realization::ConcreteEmbedding, residual)
}

/// The full table: every identity and substitution, for λ = +1 then −1,
/// concrete then oriented.
pub fn truth_table() -> Vec<EquationCheck> {
    let mut cases = Vec::new();
    for id in CheckId::EQUATIONS.into_iter().chain(CheckId::SUBSTITUTIONS) {
        for lambda in Orientation::BOTH {
            for realization in Realization::BOTH {
                cases.push((id, lambda, realization));
            }
        }
    }
    cases
        .into_par_iter()
        .map(|(id, lambda, realization)| {
            if CheckId::SUBSTITUTIONS.contains(&id) {
                substitution_check(id, lambda, realization)
            } else {
                check_equation(id, lambda, realization)
            }
            .expect("table ids are supported")
        })
        .collect()
}

/// Line-delimited rendering of a table, one record per line.
pub fn render_jsonl(table: &[EquationCheck]) -> String {
    table.iter().map(|c| c.to_jsonl() + "\n").collect()
}

pub fn render_csv(table: &[EquationCheck]) -> String {
    let mut out = String::from(EquationCheck::CSV_HEADER);
    out.push('\n');
    for c in table {
        out.push_str(&c.to_csv_row());
        out.push('\n');
    }
    out
}
