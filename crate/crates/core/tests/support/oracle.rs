//! Brute-force reference algebra.
//!
//! Cl(3,0) is implemented by reducing words in the generators `e1, e2, e3`
//! (anticommute distinct generators, cancel `e_i e_i = 1`), with no sign
//! tables. The oriented even algebra is a hand-written 4×4 product table.
//! Nothing here calls into the library's algebra code.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

/// Sorts a generator word, returning the sign and the canonical blade.
pub fn reduce(word: &[u8]) -> (f64, Vec<u8>) {
    let mut w = word.to_vec();
    let mut sign = 1.0;
    'outer: loop {
        for i in 0..w.len().saturating_sub(1) {
            if w[i] == w[i + 1] {
                w.drain(i..i + 2);
                continue 'outer;
            }
            if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                sign = -sign;
                continue 'outer;
            }
        }
        return (sign, w);
    }
}

/// Generator word spelled by a blade name such as `"e31"`; `"1"` is empty.
pub fn word_of_name(name: &str) -> Vec<u8> {
    if name == "1" {
        return Vec::new();
    }
    name.trim_start_matches('e').bytes().map(|b| b - b'0').collect()
}

pub const NAMES: [&str; 8] = ["1", "e1", "e2", "e3", "e12", "e23", "e31", "e123"];

/// Multivector keyed by canonical (ascending) blades.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Mv(pub BTreeMap<Vec<u8>, f64>);

impl Mv {
    pub fn word(w: &[u8], c: f64) -> Mv {
        let (s, b) = reduce(w);
        let mut m = BTreeMap::new();
        m.insert(b, s * c);
        Mv(m)
    }

    pub fn named(name: &str) -> Mv {
        Mv::word(&word_of_name(name), 1.0)
    }

    pub fn scalar(s: f64) -> Mv {
        Mv::word(&[], s)
    }

    pub fn pseudoscalar() -> Mv {
        Mv::word(&[1, 2, 3], 1.0)
    }

    pub fn vector(v: [f64; 3]) -> Mv {
        (0..3).fold(Mv::default(), |acc, j| acc.add(&Mv::word(&[j as u8 + 1], v[j])))
    }

    /// `I e_j`.
    pub fn beta(j: usize) -> Mv {
        Mv::pseudoscalar().mul(&Mv::word(&[j as u8 + 1], 1.0))
    }

    pub fn coeff(&self, blade: &[u8]) -> f64 {
        self.0.get(blade).copied().unwrap_or(0.0)
    }

    pub fn add(&self, other: &Mv) -> Mv {
        let mut out = self.0.clone();
        for (b, c) in &other.0 {
            *out.entry(b.clone()).or_insert(0.0) += c;
        }
        Mv(out)
    }

    pub fn scale(&self, s: f64) -> Mv {
        Mv(self.0.iter().map(|(b, c)| (b.clone(), c * s)).collect())
    }

    pub fn neg(&self) -> Mv {
        self.scale(-1.0)
    }

    pub fn mul(&self, other: &Mv) -> Mv {
        let mut out = Mv::default();
        for (bx, cx) in &self.0 {
            for (by, cy) in &other.0 {
                let w: Vec<u8> = bx.iter().chain(by).copied().collect();
                out = out.add(&Mv::word(&w, cx * cy));
            }
        }
        out
    }

    /// Reversion: each blade word read backwards.
    pub fn reverse(&self) -> Mv {
        self.0.iter().fold(Mv::default(), |acc, (b, c)| {
            let w: Vec<u8> = b.iter().rev().copied().collect();
            acc.add(&Mv::word(&w, *c))
        })
    }

    pub fn grade(&self, k: usize) -> Mv {
        Mv(self.0.iter().filter(|(b, _)| b.len() == k).map(|(b, c)| (b.clone(), *c)).collect())
    }

    /// Coefficients in the library's slot order, read through the names.
    pub fn to_slots(&self) -> [f64; 8] {
        let mut out = [0.0; 8];
        for (slot, name) in NAMES.iter().enumerate() {
            let (s, b) = reduce(&word_of_name(name));
            out[slot] = s * self.coeff(&b);
        }
        out
    }

    pub fn from_slots(c: &[f64; 8]) -> Mv {
        NAMES.iter().zip(c).fold(Mv::default(), |acc, (name, &x)| acc.add(&Mv::word(&word_of_name(name), x)))
    }

    pub fn max_abs_diff(&self, other: &Mv) -> f64 {
        self.add(&other.neg()).0.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// `[s, c_x, c_y, c_z]` with `x = s + c_j I e_j`; panics on odd residue.
    pub fn even_coords(&self) -> [f64; 4] {
        let odd = self.grade(1).add(&self.grade(3));
        assert!(odd.0.values().all(|c| c.abs() < 1e-12), "odd residue in {self:?}");
        let mut out = [self.coeff(&[]), 0.0, 0.0, 0.0];
        for j in 0..3 {
            // ⟨x β_j⟩₀ = −c_j since β_j² = −1 and distinct β anticommute.
            out[j + 1] = -self.mul(&Mv::beta(j)).coeff(&[]);
        }
        out
    }

    pub fn from_even_coords(c: [f64; 4]) -> Mv {
        (0..3).fold(Mv::scalar(c[0]), |acc, j| acc.add(&Mv::beta(j).scale(c[j + 1])))
    }
}

/// Inverse of a unit even element, `x⁻¹ = x̃ / (x x̃)`.
pub fn inverse_even(x: &Mv) -> Mv {
    let rev = x.reverse();
    let norm = x.mul(&rev).coeff(&[]);
    rev.scale(1.0 / norm)
}

/// Even element `[s, b_x, b_y, b_z]` of the oriented algebra.
pub type Q = [f64; 4];

/// Product table of the generators `1, B_x, B_y, B_z` for orientation λ,
/// written out entry by entry: `B_j B_k = −δ_jk − λ ε_jkl B_l`.
fn oriented_table(l: f64) -> [[(f64, usize); 4]; 4] {
    [
        [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
        [(1.0, 1), (-1.0, 0), (-l, 3), (l, 2)],
        [(1.0, 2), (l, 3), (-1.0, 0), (-l, 1)],
        [(1.0, 3), (-l, 2), (l, 1), (-1.0, 0)],
    ]
}

pub fn q_mul(l: f64, x: &Q, y: &Q) -> Q {
    let t = oriented_table(l);
    let mut out = [0.0; 4];
    for i in 0..4 {
        for j in 0..4 {
            let (s, k) = t[i][j];
            out[k] += s * x[i] * y[j];
        }
    }
    out
}

pub fn q_add(x: &Q, y: &Q) -> Q {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]]
}

pub fn q_scale(x: &Q, s: f64) -> Q {
    x.map(|c| c * s)
}

pub fn q_diff(x: &Q, y: &Q) -> f64 {
    (0..4).map(|i| (x[i] - y[i]).abs()).fold(0.0, f64::max)
}

/// One realization of the λ-frame, in even coordinates over the fixed basis.
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    pub lambda: f64,
    pub concrete: bool,
}

impl Frame {
    pub fn mul(&self, x: &Q, y: &Q) -> Q {
        if self.concrete {
            Mv::from_even_coords(*x).mul(&Mv::from_even_coords(*y)).even_coords()
        } else {
            q_mul(self.lambda, x, y)
        }
    }

    pub fn fixed(&self, j: usize) -> Q {
        let mut q = [0.0; 4];
        q[j + 1] = 1.0;
        q
    }

    /// `β_j(λ) = λ β_j`.
    pub fn relabeled(&self, j: usize) -> Q {
        q_scale(&self.fixed(j), self.lambda)
    }

    /// The frame whose ordered product is λ.
    pub fn handed(&self, j: usize) -> Q {
        if self.concrete {
            self.relabeled(j)
        } else {
            self.fixed(j)
        }
    }

    /// `I·v`; under the concrete embedding computed as `I v` in Cl(3,0).
    pub fn dual(&self, v: [f64; 3]) -> Q {
        if self.concrete {
            Mv::pseudoscalar().mul(&Mv::vector(v)).even_coords()
        } else {
            [0.0, v[0], v[1], v[2]]
        }
    }

    /// `(λI)·v`.
    pub fn mu_dual(&self, v: [f64; 3]) -> Q {
        if self.concrete {
            Mv::pseudoscalar().scale(self.lambda).mul(&Mv::vector(v)).even_coords()
        } else {
            q_scale(&self.dual(v), self.lambda)
        }
    }
}

fn eps(j: usize, k: usize, l: usize) -> f64 {
    match (j, k, l) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn kron(j: usize, k: usize) -> f64 {
    if j == k {
        1.0
    } else {
        0.0
    }
}

/// `X_j X_k − (d δ_jk + e ε_jkl X_l)`.
fn rule_residual_element(f: &Frame, x: &dyn Fn(usize) -> Q, d: f64, e: f64, j: usize, k: usize) -> Q {
    let lhs = f.mul(&x(j), &x(k));
    let mut rhs = [d * kron(j, k), 0.0, 0.0, 0.0];
    for l in 0..3 {
        rhs = q_add(&rhs, &q_scale(&x(l), e * eps(j, k, l)));
    }
    q_add(&lhs, &q_scale(&rhs, -1.0))
}

fn rule_residual(f: &Frame, x: &dyn Fn(usize) -> Q, d: f64, e: f64) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..3 {
        for k in 0..3 {
            worst = worst.max(q_diff(&rule_residual_element(f, x, d, e, j, k), &[0.0; 4]));
        }
    }
    worst
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub const TABLE_IDS: [&str; 21] = [
    "EQ1",
    "EQ4",
    "EQ5",
    "EQ6",
    "EQ8",
    "EQ9",
    "EQ11",
    "EQ14",
    "EQ15",
    "EQ16",
    "EQ18",
    "EQ22",
    "EQ23",
    "EQ24",
    "EQ25",
    "EQ26",
    "EQ36",
    "EQ38",
    "EQ38->EQ25",
    "EQ23->EQ24",
    "EQ23->EQ25",
];

/// Maximum residual of identity `id` in frame `f` over `pairs`.
pub fn residual(id: &str, f: &Frame, pairs: &[([f64; 3], [f64; 3])]) -> f64 {
    let l = f.lambda;
    let h = |j| f.handed(j);
    let r = |j| f.relabeled(j);
    let b = |j| f.fixed(j);
    let over_pairs = |g: &dyn Fn(&[f64; 3], &[f64; 3]) -> f64| pairs.iter().map(|(x, y)| g(x, y)).fold(0.0, f64::max);
    let triple = |target: f64| {
        [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
            .into_iter()
            .map(|(i, j, k)| q_diff(&f.mul(&f.mul(&h(i), &h(j)), &h(k)), &[target, 0.0, 0.0, 0.0]))
            .fold(0.0, f64::max)
    };
    let substitution = |src: (bool, f64), dst: (bool, f64)| {
        let mut worst = 0.0f64;
        for j in 0..3 {
            for k in 0..3 {
                let elem = |(on_frame, e): (bool, f64)| {
                    if on_frame {
                        rule_residual_element(f, &r, -1.0, e, j, k)
                    } else {
                        rule_residual_element(f, &b, -1.0, e, j, k)
                    }
                };
                worst = worst.max(q_diff(&elem(src), &elem(dst)));
            }
        }
        worst
    };
    match id {
        "EQ1" => rule_residual(f, &h, -1.0, -1.0),
        "EQ11" => rule_residual(f, &h, -1.0, 1.0),
        "EQ23" => rule_residual(f, &r, -1.0, -1.0),
        "EQ24" => rule_residual(f, &b, -1.0, -l),
        "EQ25" => rule_residual(f, &b, -1.0, -1.0),
        "EQ38" => rule_residual(f, &r, -1.0, -l),
        "EQ4" => (0..3).map(|j| q_diff(&f.mul(&h(j), &h(j)), &[-1.0, 0.0, 0.0, 0.0])).fold(0.0, f64::max),
        "EQ5" => {
            let mut worst = 0.0f64;
            for j in 0..3 {
                for k in 0..3 {
                    if j != k {
                        let jk = f.mul(&h(j), &h(k));
                        let kj = f.mul(&h(k), &h(j));
                        worst = worst.max(q_diff(&jk, &q_scale(&kj, -1.0)));
                    }
                }
            }
            worst
        }
        "EQ6" => triple(1.0),
        "EQ9" => triple(-1.0),
        "EQ36" => {
            (0..3).map(|j| q_diff(&r(j), &q_scale(&b(j), l)).max(q_diff(&b(j), &q_scale(&r(j), l)))).fold(0.0, f64::max)
        }
        "EQ8" | "EQ15" => over_pairs(&|x, y| {
            let rhs = q_add(&[-dot(x, y), 0.0, 0.0, 0.0], &q_scale(&f.dual(cross(x, y)), -1.0));
            q_diff(&f.mul(&f.dual(*x), &f.dual(*y)), &rhs)
        }),
        "EQ14" => over_pairs(&|x, y| {
            let rhs = q_add(&[-dot(x, y), 0.0, 0.0, 0.0], &f.dual(cross(x, y)));
            q_diff(&f.mul(&f.dual(*x), &f.dual(*y)), &rhs)
        }),
        "EQ16" => over_pairs(&|x, y| {
            let lhs = f.mul(&q_scale(&f.dual(*x), -1.0), &q_scale(&f.dual(*y), -1.0));
            let rhs = q_add(&[-dot(x, y), 0.0, 0.0, 0.0], &f.dual(cross(x, y)));
            q_diff(&lhs, &rhs)
        }),
        "EQ18" => over_pairs(&|x, y| {
            let lhs = f.mul(&q_scale(&f.dual(*x), l), &q_scale(&f.dual(*y), l));
            let rhs = q_add(&[-dot(x, y), 0.0, 0.0, 0.0], &q_scale(&f.dual(cross(x, y)), -l));
            q_diff(&lhs, &rhs)
        }),
        "EQ22" => over_pairs(&|x, y| {
            let rhs = q_add(&[-dot(x, y), 0.0, 0.0, 0.0], &q_scale(&f.mu_dual(cross(x, y)), -1.0));
            q_diff(&f.mul(&f.mu_dual(*x), &f.mu_dual(*y)), &rhs)
        }),
        "EQ26" => over_pairs(&|x, y| {
            let comb = |v: &[f64; 3], e: &dyn Fn(usize) -> Q| {
                (0..3).fold([0.0; 4], |acc, j| q_add(&acc, &q_scale(&e(j), v[j])))
            };
            let left = f.mul(&comb(x, &r), &comb(y, &r));
            let middle = f.mul(&q_scale(&comb(x, &b), l), &q_scale(&comb(y, &b), l));
            let mut right = [-dot(x, y), 0.0, 0.0, 0.0];
            for j in 0..3 {
                for k in 0..3 {
                    for m in 0..3 {
                        right = q_add(&right, &q_scale(&b(m), -l * eps(j, k, m) * x[j] * y[k]));
                    }
                }
            }
            q_diff(&left, &middle).max(q_diff(&middle, &right))
        }),
        "EQ38->EQ25" => substitution((true, -l), (false, -1.0)),
        "EQ23->EQ24" => substitution((true, -1.0), (false, -l)),
        "EQ23->EQ25" => substitution((true, -1.0), (false, -1.0)),
        other => panic!("oracle has no identity {other}"),
    }
}

/// The golden truth table, rendered independently of the library.
pub fn truth_table_jsonl(pairs: &[([f64; 3], [f64; 3])]) -> String {
    let mut out = String::new();
    for id in TABLE_IDS {
        for lambda in [1i64, -1] {
            for (concrete, name) in [(true, "concrete"), (false, "oriented")] {
                let f = Frame { lambda: lambda as f64, concrete };
                let res = residual(id, &f, pairs);
                out.push_str(&format!(
                    "{{\"equation_id\":\"{id}\",\"lambda\":{lambda},\"realization\":\"{name}\",\"holds\":{},\"max_residual\":{res:.9}}}\n",
                    res < 1e-12
                ));
            }
        }
    }
    out
}

/// `left,right,sign,target` for every ordered pair of basis blades.
pub fn blade_table_csv() -> String {
    let mut out = String::from("left,right,sign,target\n");
    for l in NAMES {
        for r in NAMES {
            let slots = Mv::named(l).mul(&Mv::named(r)).to_slots();
            let (target, coeff) = slots.iter().enumerate().find(|(_, c)| **c != 0.0).expect("nonzero product");
            out.push_str(&format!("{l},{r},{},{}\n", *coeff as i64, NAMES[target]));
        }
    }
    out
}

/// Concrete-embedding standardized product `(μ·a)(μ·b)` built from the raw
/// scores and dispersion scales, for orientation λ.
pub fn concrete_standardized(a: [f64; 3], b: [f64; 3], lambda: f64) -> [f64; 4] {
    let i = Mv::pseudoscalar();
    let sigma_a = i.neg().mul(&Mv::vector(a));
    let sigma_b = i.mul(&Mv::vector(b));
    let mu = i.scale(lambda);
    let raw_a = sigma_a.mul(&mu.mul(&Mv::vector(a))).coeff(&[]).signum();
    let raw_b = mu.mul(&Mv::vector(b)).mul(&sigma_b).coeff(&[]).signum();
    let std_a = inverse_even(&sigma_a).scale(raw_a);
    let std_b = inverse_even(&sigma_b).scale(raw_b);
    std_a.mul(&std_b).even_coords()
}

/// Concrete-embedding `(AB = −1) · D⁻¹` with `D = (−I·a)(I·b)`.
pub fn concrete_gillgame(a: [f64; 3], b: [f64; 3]) -> [f64; 4] {
    let i = Mv::pseudoscalar();
    let d = i.neg().mul(&Mv::vector(a)).mul(&i.mul(&Mv::vector(b)));
    inverse_even(&d).neg().even_coords()
}

/// Named detector pairs used by the concrete-estimator golden file.
pub fn estimator_pairs() -> Vec<(&'static str, [f64; 3], [f64; 3])> {
    let (s, c) = std::f64::consts::FRAC_PI_4.sin_cos();
    vec![
        ("ex,ex", [1.0, 0.0, 0.0], [1.0, 0.0, 0.0]),
        ("ex,ey", [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]),
        ("ey,ez", [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]),
        ("ez,ex", [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]),
        ("ex,ey45", [1.0, 0.0, 0.0], [c, s, 0.0]),
    ]
}

pub fn estimator_line(estimator: &str, pair: &str, v: [f64; 4]) -> String {
    let v = v.map(|x| x + 0.0);
    format!(
        "{{\"estimator\":\"{estimator}\",\"realization\":\"concrete\",\"pair\":\"{pair}\",\"scalar_part\":{:.12},\"bivector_part\":[{:.12},{:.12},{:.12}]}}\n",
        v[0], v[1], v[2], v[3]
    )
}

pub fn concrete_estimators_jsonl() -> String {
    let mut out = String::new();
    for (name, a, b) in estimator_pairs() {
        let plus = concrete_standardized(a, b, 1.0);
        let minus = concrete_standardized(a, b, -1.0);
        assert!(q_diff(&plus, &minus) < 1e-15, "standardized summand depends on λ for {name}");
        out.push_str(&estimator_line("standardized", name, plus));
        out.push_str(&estimator_line("gillgame", name, concrete_gillgame(a, b)));
    }
    out
}
