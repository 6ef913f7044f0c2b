//! Bivector frames whose handedness is set by the orientation λ.
//!
//! Two realizations of the λ-dependent frame are provided:
//!
//! * [`Realization::ConcreteEmbedding`] keeps the fixed Cl(3,0) and relabels
//!   the frame: `β_j(λ) = λ I e_j`. All products go through the blade table.
//! * [`Realization::OrientedStructure`] is an abstract four-dimensional even
//!   algebra spanned by `1, β_x, β_y, β_z` whose structure constants carry λ:
//!   `β_j β_k = −δ_jk − λ ε_jkl β_l`.
//!
//! In both, the fixed basis `β_j` and the λ-frame `β_j(λ) = λ β_j` are
//! related reciprocally. What differs is which of the two carries the
//! λ-handed multiplication rule: under the concrete embedding it is the
//! relabeled frame `β_j(λ)`; under the oriented structure it is `β_j`
//! itself.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Orientation;
use crate::clifford::{contract_trivector_vector, gp, inverse_unit_even, Grade, Multivector};
use crate::clifford::{IDENTITY_TOL, UNIT_TOL};
use crate::error::{Error, Result};

/// How the λ-dependent frame is made concrete.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Realization {
    #[serde(rename = "concrete")]
    ConcreteEmbedding,
    #[serde(rename = "oriented")]
    OrientedStructure,
}

impl Realization {
    pub const BOTH: [Realization; 2] = [Realization::ConcreteEmbedding, Realization::OrientedStructure];

    pub fn name(self) -> &'static str {
        match self {
            Realization::ConcreteEmbedding => "concrete",
            Realization::OrientedStructure => "oriented",
        }
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Realization {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "concrete" => Ok(Realization::ConcreteEmbedding),
            "oriented" => Ok(Realization::OrientedStructure),
            other => Err(format!("unknown realization `{other}` (expected concrete|oriented)")),
        }
    }
}

/// Kronecker delta over axis indices.
pub fn delta(j: usize, k: usize) -> f64 {
    if j == k {
        1.0
    } else {
        0.0
    }
}

/// Levi-Civita symbol over axis indices `0..3`.
pub fn levi_civita(j: usize, k: usize, l: usize) -> f64 {
    match (j, k, l) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Scalar plus bivector: `s + b_x β_x + b_y β_y + b_z β_z`.
///
/// The meaning of `β_j` is fixed by the [`FrameAlgebra`] the element is
/// used with; under the concrete embedding it is the Cl(3,0) blade `I e_j`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EvenElement {
    pub scalar: f64,
    pub bivector: [f64; 3],
}

impl EvenElement {
    pub const ZERO: EvenElement = EvenElement { scalar: 0.0, bivector: [0.0; 3] };
    pub const ONE: EvenElement = EvenElement { scalar: 1.0, bivector: [0.0; 3] };

    pub fn new(scalar: f64, bivector: [f64; 3]) -> Self {
        EvenElement { scalar, bivector }
    }

    pub fn scalar(s: f64) -> Self {
        EvenElement { scalar: s, bivector: [0.0; 3] }
    }

    pub fn bivector(b: [f64; 3]) -> Self {
        EvenElement { scalar: 0.0, bivector: b }
    }

    /// Unit basis bivector `β_axis`.
    pub fn beta(axis: usize) -> Self {
        let mut b = [0.0; 3];
        b[axis] = 1.0;
        Self::bivector(b)
    }

    /// `−δ_jk + c ε_jkl β_l`, the right-hand side of a frame product rule.
    pub fn structure_rhs(j: usize, k: usize, epsilon_coeff: f64) -> Self {
        let bivector = [0, 1, 2].map(|l| epsilon_coeff * levi_civita(j, k, l));
        EvenElement { scalar: -delta(j, k), bivector }
    }

    /// Sign of the bivector part flipped.
    pub fn conjugate(&self) -> Self {
        EvenElement { scalar: self.scalar, bivector: self.bivector.map(|b| -b) }
    }

    pub fn max_abs(&self) -> f64 {
        self.bivector.iter().fold(self.scalar.abs(), |m, b| m.max(b.abs()))
    }

    pub fn max_abs_diff(&self, other: &EvenElement) -> f64 {
        (*self - *other).max_abs()
    }

    /// Lifts into Cl(3,0) with `β_j = I e_j`.
    pub fn to_multivector(&self) -> Multivector {
        Multivector::even(self.scalar, self.bivector)
    }

    /// Reads the even part of a Cl(3,0) element, rejecting odd residue.
    pub fn from_multivector(m: &Multivector) -> Result<Self> {
        let residue = m.residue_outside(&[Grade::SCALAR, Grade::BIVECTOR]);
        if residue > IDENTITY_TOL {
            return Err(Error::NotEven { residue });
        }
        Ok(EvenElement { scalar: m.scalar_part(), bivector: m.bivector_part() })
    }
}

impl Add for EvenElement {
    type Output = EvenElement;

    fn add(self, rhs: EvenElement) -> EvenElement {
        EvenElement {
            scalar: self.scalar + rhs.scalar,
            bivector: [0, 1, 2].map(|i| self.bivector[i] + rhs.bivector[i]),
        }
    }
}

impl Sub for EvenElement {
    type Output = EvenElement;

    fn sub(self, rhs: EvenElement) -> EvenElement {
        EvenElement {
            scalar: self.scalar - rhs.scalar,
            bivector: [0, 1, 2].map(|i| self.bivector[i] - rhs.bivector[i]),
        }
    }
}

impl Neg for EvenElement {
    type Output = EvenElement;

    fn neg(self) -> EvenElement {
        EvenElement { scalar: -self.scalar, bivector: self.bivector.map(|b| -b) }
    }
}

impl Mul<f64> for EvenElement {
    type Output = EvenElement;

    fn mul(self, rhs: f64) -> EvenElement {
        EvenElement { scalar: self.scalar * rhs, bivector: self.bivector.map(|b| b * rhs) }
    }
}

impl Mul<EvenElement> for f64 {
    type Output = EvenElement;

    fn mul(self, rhs: EvenElement) -> EvenElement {
        rhs * self
    }
}

/// A bivector frame of orientation λ under a chosen realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrameAlgebra {
    orientation: Orientation,
    realization: Realization,
}

impl FrameAlgebra {
    pub fn new(orientation: Orientation, realization: Realization) -> Self {
        FrameAlgebra { orientation, realization }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn realization(&self) -> Realization {
        self.realization
    }

    fn lambda(&self) -> f64 {
        self.orientation.sign()
    }

    /// The fixed basis bivector `β_j`.
    pub fn fixed_basis(&self, j: usize) -> EvenElement {
        EvenElement::beta(j)
    }

    /// The λ-frame element `β_j(λ) = λ β_j`.
    pub fn frame_element(&self, j: usize) -> EvenElement {
        self.lambda() * EvenElement::beta(j)
    }

    /// The element of the frame whose handedness equals λ.
    pub fn handed_element(&self, j: usize) -> EvenElement {
        match self.realization {
            Realization::ConcreteEmbedding => self.frame_element(j),
            Realization::OrientedStructure => self.fixed_basis(j),
        }
    }

    /// Product of two even elements under this realization.
    pub fn mul(&self, x: &EvenElement, y: &EvenElement) -> EvenElement {
        match self.realization {
            Realization::ConcreteEmbedding => {
                let prod = gp(&x.to_multivector(), &y.to_multivector());
                EvenElement { scalar: prod.scalar_part(), bivector: prod.bivector_part() }
            }
            Realization::OrientedStructure => oriented_product(self.lambda(), x, y),
        }
    }

    /// Dual bivector `I·v = v_j β_j` of an arbitrary (not necessarily unit)
    /// vector.
    pub fn dual(&self, v: [f64; 3]) -> EvenElement {
        match self.realization {
            Realization::ConcreteEmbedding => {
                let m = contract_trivector_vector(&Multivector::I, v).expect("I is a pure trivector");
                EvenElement::bivector(m.bivector_part())
            }
            Realization::OrientedStructure => EvenElement::bivector(v),
        }
    }

    /// Product of the λ-handed frame elements `j` and `k`.
    ///
    /// Under the concrete embedding this is `gp(λ I e_j, λ I e_k)` in
    /// Cl(3,0) coordinates; under the oriented structure it is
    /// `−δ_jk − λ ε_jkl β_l`.
    pub fn frame_mul(&self, j: usize, k: usize) -> EvenElement {
        self.mul(&self.handed_element(j), &self.handed_element(k))
    }

    /// Re-expresses `x` in coordinates over the λ-handed frame.
    pub fn to_handed_coords(&self, x: &EvenElement) -> EvenElement {
        match self.realization {
            Realization::ConcreteEmbedding => {
                EvenElement { scalar: x.scalar, bivector: x.bivector.map(|b| b * self.lambda()) }
            }
            Realization::OrientedStructure => *x,
        }
    }

    /// Ordered product of the λ-handed frame, `β_x β_y β_z`.
    pub fn triple_product(&self) -> Result<f64> {
        let xy = self.frame_mul(0, 1);
        let xyz = self.mul(&xy, &self.handed_element(2));
        let residue = xyz.bivector.iter().fold(0.0f64, |m, b| m.max(b.abs()));
        if residue > IDENTITY_TOL {
            return Err(Error::NonScalarTriple { residue });
        }
        Ok(xyz.scalar)
    }

    /// Inverse of a unit even element in this algebra.
    pub fn inverse_unit(&self, x: &EvenElement) -> Result<EvenElement> {
        match self.realization {
            Realization::ConcreteEmbedding => {
                let inv = inverse_unit_even(&x.to_multivector())?;
                EvenElement::from_multivector(&inv)
            }
            Realization::OrientedStructure => {
                let conj = x.conjugate();
                let residue = self.mul(x, &conj).max_abs_diff(&EvenElement::ONE);
                if residue.is_nan() || residue > UNIT_TOL {
                    return Err(Error::NotInvertible { residue });
                }
                Ok(conj)
            }
        }
    }
}

/// `(s + u_j β_j)(t + v_k β_k)` with `β_j β_k = −δ_jk − λ ε_jkl β_l`.
fn oriented_product(lambda: f64, x: &EvenElement, y: &EvenElement) -> EvenElement {
    let (s, u) = (x.scalar, &x.bivector);
    let (t, v) = (y.scalar, &y.bivector);
    let mut out = EvenElement { scalar: s * t, bivector: [0, 1, 2].map(|i| s * v[i] + t * u[i]) };
    for (j, uj) in u.iter().enumerate() {
        for (k, vk) in v.iter().enumerate() {
            let c = uj * vk;
            if c == 0.0 {
                continue;
            }
            let rule = EvenElement::structure_rhs(j, k, -lambda);
            out.scalar += c * rule.scalar;
            for l in 0..3 {
                out.bivector[l] += c * rule.bivector[l];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Orientation = Orientation::Positive;
    const N: Orientation = Orientation::Negative;
    const C: Realization = Realization::ConcreteEmbedding;
    const O: Realization = Realization::OrientedStructure;

    #[test]
    fn frame_mul_examples() {
        for r in Realization::BOTH {
            assert_eq!(FrameAlgebra::new(P, r).frame_mul(0, 1), -EvenElement::beta(2));
        }
        assert_eq!(FrameAlgebra::new(N, O).frame_mul(0, 1), EvenElement::beta(2));
        for o in Orientation::BOTH {
            for r in Realization::BOTH {
                for j in 0..3 {
                    assert_eq!(FrameAlgebra::new(o, r).frame_mul(j, j), -EvenElement::ONE);
                }
            }
        }
    }

    #[test]
    fn oriented_rule_is_literal() {
        for o in Orientation::BOTH {
            let alg = FrameAlgebra::new(o, O);
            for j in 0..3 {
                for k in 0..3 {
                    let want = EvenElement::structure_rhs(j, k, -o.sign());
                    assert_eq!(alg.frame_mul(j, k), want);
                }
            }
        }
    }

    #[test]
    fn concrete_frame_rule_in_own_coordinates() {
        // gp(λβ_j, λβ_k) = −δ_jk − ε_jkl β_l = −δ_jk − λ ε_jkl β_l(λ)
        for o in Orientation::BOTH {
            let alg = FrameAlgebra::new(o, C);
            for j in 0..3 {
                for k in 0..3 {
                    let prod = alg.frame_mul(j, k);
                    assert_eq!(prod, EvenElement::structure_rhs(j, k, -1.0));
                    assert_eq!(alg.to_handed_coords(&prod), EvenElement::structure_rhs(j, k, -o.sign()));
                }
            }
        }
    }

    #[test]
    fn realizations_agree_at_positive_orientation() {
        let c = FrameAlgebra::new(P, C);
        let o = FrameAlgebra::new(P, O);
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(c.frame_mul(j, k), o.frame_mul(j, k));
            }
        }
    }

    #[test]
    fn triple_products() {
        assert_eq!(FrameAlgebra::new(P, O).triple_product().unwrap(), 1.0);
        assert_eq!(FrameAlgebra::new(N, O).triple_product().unwrap(), -1.0);
        assert_eq!(FrameAlgebra::new(P, C).triple_product().unwrap(), 1.0);
        assert_eq!(FrameAlgebra::new(N, C).triple_product().unwrap(), -1.0);
    }

    #[test]
    fn oriented_inverse_is_conjugate() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let x = EvenElement::new(h, [0.0, 0.0, h]);
        for o in Orientation::BOTH {
            let alg = FrameAlgebra::new(o, O);
            let inv = alg.inverse_unit(&x).unwrap();
            assert!(alg.mul(&x, &inv).max_abs_diff(&EvenElement::ONE) < 1e-15);
        }
        let long = EvenElement::new(1.0, [1.0, 0.0, 0.0]);
        assert!(FrameAlgebra::new(P, O).inverse_unit(&long).is_err());
        assert!(FrameAlgebra::new(P, C).inverse_unit(&long).is_err());
    }

    #[test]
    fn levi_civita_is_antisymmetric() {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    assert_eq!(levi_civita(j, k, l), -levi_civita(k, j, l));
                    assert_eq!(levi_civita(j, k, l), levi_civita(k, l, j));
                }
            }
        }
    }

    #[test]
    fn realization_names_round_trip() {
        for r in Realization::BOTH {
            assert_eq!(r.name().parse::<Realization>().unwrap(), r);
            assert_eq!(serde_json::to_string(&r).unwrap(), format!("\"{}\"", r.name()));
        }
        assert!("left".parse::<Realization>().is_err());
    }
}
