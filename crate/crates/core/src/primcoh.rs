//! Primitive cohomology of the coalgebra `C = k[X]` in low tensor degrees,
//! computed one graded slice at a time.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElt};
use crate::ihoe2::lambda_coeffs;
use crate::linalg::{rank_of_vectors, Matrix};
use crate::tensoralg::TensorElement;

fn binom_mod(f: &FieldCtx, n: u32, k: u32) -> FieldElt {
    let p = f.p() as u64;
    // Lucas: product of digit binomials
    let (mut n, mut k) = (n as u64, k as u64);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (a, b) = (n % p, k % p);
        if b > a {
            return FieldElt::ZERO;
        }
        let c = (0..b).fold(1u128, |c, i| c * (a - i) as u128 / (i + 1) as u128);
        acc = acc * (c as u64 % p) % p;
        n /= p;
        k /= p;
    }
    f.from_int(acc as i64)
}

pub type Cochain2 = BTreeMap<(u32, u32), FieldElt>;
type Cochain3 = BTreeMap<(u32, u32, u32), FieldElt>;

fn bump<K: Ord>(f: &FieldCtx, m: &mut BTreeMap<K, FieldElt>, k: K, c: FieldElt) {
    let e = m.entry(k).or_insert(FieldElt::ZERO);
    *e = f.add(*e, c);
}

fn prune<K: Ord>(m: BTreeMap<K, FieldElt>) -> BTreeMap<K, FieldElt> {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `∂(X^a) = Δ(X^a) - 1⊗X^a - X^a⊗1`.
fn d1(f: &FieldCtx, a: u32) -> Cochain2 {
    let mut out = Cochain2::new();
    for k in 0..=a {
        bump(f, &mut out, (k, a - k), binom_mod(f, a, k));
    }
    let m1 = f.neg(f.one());
    bump(f, &mut out, (0, a), m1);
    bump(f, &mut out, (a, 0), m1);
    prune(out)
}

/// `∂(x⊗y) = ∂(x)⊗y - x⊗∂(y)` on `C⊗C`.
fn d2(f: &FieldCtx, x: &Cochain2) -> Cochain3 {
    let mut out = Cochain3::new();
    for (&(a, b), &c) in x {
        for ((k, l), e) in d1(f, a) {
            bump(f, &mut out, (k, l, b), f.mul(c, e));
        }
        for ((k, l), e) in d1(f, b) {
            bump(f, &mut out, (a, k, l), f.neg(f.mul(c, e)));
        }
    }
    prune(out)
}

/// The part of the cobar complex of total `X`-degree `i`, over `F_p`.
#[derive(Clone, Debug)]
pub struct CochainComplexSlice {
    pub degree: u32,
    /// `∂: C_i → (C⊗C)_i`, a single column.
    pub d1: Matrix,
    /// `∂: (C⊗C)_i → (C⊗C⊗C)_i`.
    pub d2: Matrix,
    /// Basis of `(C⊗C)_i`: `X^a ⊗ X^{i-a}` for `a = 0..=i`.
    pub basis2: Vec<(u32, u32)>,
    pub basis3: Vec<(u32, u32, u32)>,
}

pub fn boundary_slice(p: u32, i: u32) -> Result<CochainComplexSlice> {
    if i < 1 {
        return Err(Error::InvalidParams("slice degree must be at least 1".into()));
    }
    let f = FieldCtx::new(p, 1)?;
    let basis2: Vec<(u32, u32)> = (0..=i).map(|a| (a, i - a)).collect();
    let basis3: Vec<(u32, u32, u32)> = (0..=i)
        .flat_map(|a| (0..=i - a).map(move |b| (a, b, i - a - b)))
        .collect();
    let idx3: BTreeMap<(u32, u32, u32), usize> = basis3.iter().enumerate().map(|(k, &t)| (t, k)).collect();
    let mut m1 = Matrix::zeros(basis2.len(), 1);
    for ((a, _), c) in d1(&f, i) {
        m1.set(a as usize, 0, c);
    }
    let mut m2 = Matrix::zeros(basis3.len(), basis2.len());
    for (col, &(a, b)) in basis2.iter().enumerate() {
        for (t, c) in d2(&f, &Cochain2::from([((a, b), f.one())])) {
            m2.set(idx3[&t], col, c);
        }
    }
    Ok(CochainComplexSlice {
        degree: i,
        d1: m1,
        d2: m2,
        basis2,
        basis3,
    })
}

impl CochainComplexSlice {
    pub fn composite_is_zero(&self, f: &FieldCtx) -> bool {
        self.d2.mul(f, &self.d1).is_zero()
    }

    pub fn h1(&self, f: &FieldCtx) -> usize {
        1 - self.d1.rank(f)
    }

    pub fn h2(&self, f: &FieldCtx) -> usize {
        let kernel = self.d2.cols() - self.d2.rank(f);
        kernel - self.d1.rank(f)
    }
}

/// `dim P^n_i` for `i = 1..=cap`.
pub fn pp_dims(p: u32, n: u32, cap: u32) -> Result<BTreeMap<u32, usize>> {
    if !(1..=2).contains(&n) {
        return Err(Error::Unsupported(format!("P^{n}")));
    }
    if cap < 1 {
        return Err(Error::InvalidParams("degree cap must be at least 1".into()));
    }
    let f = FieldCtx::new(p, 1)?;
    let mut out = BTreeMap::new();
    for i in 1..=cap {
        let s = boundary_slice(p, i)?;
        if !s.composite_is_zero(&f) {
            return Err(Error::Inconsistent(format!("∂∘∂ ≠ 0 in degree {i}")));
        }
        out.insert(i, if n == 1 { s.h1(&f) } else { s.h2(&f) });
    }
    Ok(out)
}

/// A named 2-cocycle: `Z_s` or `Y_{s,t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Class {
    Z(u32),
    Y(u32, u32),
}

impl Class {
    pub fn degree(self, p: u32) -> u64 {
        let p = p as u64;
        match self {
            Class::Z(s) => p.pow(s + 1),
            Class::Y(s, t) => p.pow(s) + p.pow(t),
        }
    }

    pub fn cochain(self, f: &FieldCtx) -> Cochain2 {
        let p = f.p();
        let mut out = Cochain2::new();
        match self {
            Class::Z(s) => {
                let q = p.pow(s);
                for (i, &l) in lambda_coeffs(p).iter().enumerate() {
                    let i = i as u32 + 1;
                    bump(f, &mut out, (q * i, q * (p - i)), f.from_int(l as i64));
                }
            }
            Class::Y(s, t) => {
                let (a, b) = (p.pow(s), p.pow(t));
                bump(f, &mut out, (a, b), f.one());
                bump(f, &mut out, (b, a), f.neg(f.one()));
            }
        }
        prune(out)
    }
}

impl std::fmt::Display for Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Class::Z(s) => write!(f, "Z_{s}"),
            Class::Y(s, t) => write!(f, "Y_{s},{t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCheck {
    pub class: Class,
    pub degree: u64,
    pub cocycle: bool,
    pub coboundary: bool,
}

impl ClassCheck {
    pub fn pass(&self) -> bool {
        self.cocycle && !self.coboundary
    }
}

/// Checks that `class` is a cocycle but not a coboundary.
pub fn check_class(p: u32, class: Class, cap: u32) -> Result<ClassCheck> {
    let degree = class.degree(p);
    if degree > cap as u64 {
        return Err(Error::DegreeOverflow { degree, cap });
    }
    let f = FieldCtx::new(p, 1)?;
    let (cocycle, coboundary) = classify_cochain(&f, degree as u32, &class.cochain(&f))?;
    Ok(ClassCheck {
        class,
        degree,
        cocycle,
        coboundary,
    })
}

/// `(in ker ∂², in im ∂¹)` for a homogeneous cochain of the given degree over `F_p`.
pub fn classify_cochain(f: &FieldCtx, degree: u32, x: &Cochain2) -> Result<(bool, bool)> {
    if x.keys().any(|&(a, b)| a + b != degree) {
        return Err(Error::InvalidParams("cochain is not homogeneous".into()));
    }
    let slice = boundary_slice(f.p(), degree)?;
    let v: Vec<FieldElt> = slice.basis2.iter().map(|k| x.get(k).copied().unwrap_or(FieldElt::ZERO)).collect();
    let image: Vec<FieldElt> = (0..slice.d1.rows()).map(|r| slice.d1.get(r, 0)).collect();
    let base_rank = rank_of_vectors(f, &[image.clone()]);
    let coboundary = rank_of_vectors(f, &[image, v]) == base_rank;
    Ok((d2(f, x).is_empty(), coboundary))
}

/// Every `Z_s` and `Y_{s,t}` of degree at most `cap`.
pub fn verify_classes(p: u32, cap: u32) -> Result<Vec<ClassCheck>> {
    let mut classes = Vec::new();
    let mut s = 0;
    while Class::Z(s).degree(p) <= cap as u64 {
        classes.push(Class::Z(s));
        s += 1;
    }
    let mut s = 0;
    while Class::Y(s, s + 1).degree(p) <= cap as u64 {
        let mut t = s + 1;
        while Class::Y(s, t).degree(p) <= cap as u64 {
            classes.push(Class::Y(s, t));
            t += 1;
        }
        s += 1;
    }
    if classes.is_empty() {
        return Err(Error::DegreeOverflow {
            degree: Class::Z(0).degree(p),
            cap,
        });
    }
    classes.into_iter().map(|c| check_class(p, c, cap)).collect()
}

/// Whether a tensor in `k[X_1]⊗k[X_1]` is a 2-cocycle.
pub fn is_cocycle(f: &FieldCtx, w: &TensorElement) -> Result<bool> {
    let n = w.n();
    let mut x = Cochain2::new();
    for (k, c) in w.terms() {
        let (l, r) = (&k[..n], &k[n..]);
        if l[1..].iter().chain(&r[1..]).any(|&e| e != 0) || l[0] < 0 || r[0] < 0 {
            return Err(Error::InvalidParams("tensor leaves k[X_1]⊗k[X_1]".into()));
        }
        bump(f, &mut x, (l[0] as u32, r[0] as u32), c);
    }
    Ok(d2(f, &prune(x)).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_slices() {
        let f = FieldCtx::new(2, 1).unwrap();
        assert!(boundary_slice(2, 1).unwrap().d1.is_zero());
        let s = boundary_slice(2, 2).unwrap();
        assert!(s.d1.is_zero());
        assert_eq!(s.basis2.len(), 3);
        // X⊗X spans the kernel
        assert_eq!(s.d2.kernel(&f), vec![vec![f.zero(), f.one(), f.zero()]]);
        assert!(boundary_slice(3, 3).unwrap().d1.is_zero());
        assert!(boundary_slice(2, 0).is_err());
    }

    #[test]
    fn lucas_binomials() {
        let f = FieldCtx::new(3, 1).unwrap();
        for n in 0..30u32 {
            for k in 0..=n {
                let exact = (0..k).fold(1u128, |c, i| c * (n - i) as u128 / (i + 1) as u128);
                assert_eq!(binom_mod(&f, n, k), f.from_int((exact % 3) as i64));
            }
        }
    }

    #[test]
    fn tables() {
        let nz = |p, n, cap| -> Vec<u32> {
            pp_dims(p, n, cap).unwrap().into_iter().filter(|&(_, d)| d > 0).map(|(i, _)| i).collect()
        };
        assert_eq!(nz(2, 1, 8), vec![1, 2, 4, 8]);
        assert_eq!(nz(2, 2, 8), vec![2, 3, 4, 5, 6, 8]);
        assert_eq!(nz(3, 2, 9), vec![3, 4, 9]);
    }

    #[test]
    fn class_examples() {
        assert!(check_class(2, Class::Z(0), 4).unwrap().pass());
        assert!(check_class(3, Class::Z(0), 4).unwrap().pass());
        assert!(check_class(2, Class::Z(2), 4).is_err());
        for c in verify_classes(3, 12).unwrap() {
            assert!(c.pass(), "{c:?}");
        }
    }

    #[test]
    fn antisymmetric_class_collapses_in_characteristic_two() {
        // X⊗X² + X²⊗X = ∂(X³) when p = 2, so the class is carried by X⊗X² alone
        let c = check_class(2, Class::Y(0, 1), 4).unwrap();
        assert!(c.cocycle && c.coboundary);
        let f = FieldCtx::new(2, 1).unwrap();
        let x = Cochain2::from([((1, 2), f.one())]);
        assert_eq!(classify_cochain(&f, 3, &x).unwrap(), (true, false));
    }
}
