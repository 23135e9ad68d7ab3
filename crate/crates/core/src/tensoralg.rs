//! Tensor squares and cubes of an Ore presentation.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldCtx, FieldElt};
use crate::orealg::{format_mono, Algebra, Mono, OrePresentation, PbwElement};

/// Concatenated exponent vectors of the tensor factors.
pub type TensorKey = SmallVec<[i32; 8]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    arity: usize,
    n: usize,
    terms: BTreeMap<TensorKey, FieldElt>,
}

/// Serialized tensor term; `mid` is present only for arity 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermRepr {
    pub left: Vec<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mid: Option<Vec<i32>>,
    pub right: Vec<i32>,
    pub coeff: Vec<u32>,
}

impl TensorElement {
    pub fn zero(arity: usize, n: usize) -> Self {
        TensorElement {
            arity,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `x_1 ⊗ ... ⊗ x_r`.
    pub fn pure(f: &FieldCtx, factors: &[&PbwElement], n: usize) -> Self {
        let mut acc: Vec<(TensorKey, FieldElt)> = vec![(TensorKey::new(), f.one())];
        for x in factors {
            let mut next = Vec::new();
            for (k, c) in &acc {
                for (m, d) in x.terms() {
                    let mut key = k.clone();
                    key.extend_from_slice(m);
                    next.push((key, f.mul(*c, d)));
                }
            }
            acc = next;
        }
        let mut out = TensorElement::zero(factors.len(), n);
        for (k, c) in acc {
            out.add_term(f, k, c);
        }
        out
    }

    /// `c · a ⊗ b` for monomials.
    pub fn from_monos(f: &FieldCtx, monos: &[&[i32]], c: FieldElt) -> Self {
        let n = monos.first().map_or(0, |m| m.len());
        let mut out = TensorElement::zero(monos.len(), n);
        let key: TensorKey = monos.iter().flat_map(|m| m.iter().copied()).collect();
        out.add_term(f, key, c);
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorKey, FieldElt)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coeff(&self, key: &[i32]) -> FieldElt {
        self.terms.get(key).copied().unwrap_or(FieldElt::ZERO)
    }

    /// The `k`-th factor of a key.
    pub fn component<'a>(&self, key: &'a [i32], k: usize) -> &'a [i32] {
        &key[k * self.n..(k + 1) * self.n]
    }

    pub fn add_term(&mut self, f: &FieldCtx, key: TensorKey, c: FieldElt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, f: &FieldCtx, other: &TensorElement, c: FieldElt) {
        debug_assert_eq!(self.arity, other.arity);
        if c.is_zero() {
            return;
        }
        for (k, &x) in &other.terms {
            self.add_term(f, k.clone(), f.mul(x, c));
        }
    }

    pub fn add(&self, f: &FieldCtx, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(f, other, f.one());
        out
    }

    pub fn sub(&self, f: &FieldCtx, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(f, other, f.neg(f.one()));
        out
    }

    pub fn scale(&self, f: &FieldCtx, c: FieldElt) -> TensorElement {
        let mut out = TensorElement::zero(self.arity, self.n);
        out.add_scaled(f, self, c);
        out
    }

    /// Swaps the two factors of a tensor square.
    pub fn flip(&self) -> TensorElement {
        assert_eq!(self.arity, 2);
        let n = self.n;
        TensorElement {
            arity: 2,
            n,
            terms: self
                .terms
                .iter()
                .map(|(k, &c)| {
                    let mut key: TensorKey = k[n..].iter().copied().collect();
                    key.extend_from_slice(&k[..n]);
                    (key, c)
                })
                .collect(),
        }
    }

    /// Applies a linear map, given on monomials, to factor `k`.
    pub fn map_factor(
        &self,
        f: &FieldCtx,
        k: usize,
        mut map: impl FnMut(&Mono) -> Result<PbwElement>,
    ) -> Result<TensorElement> {
        let n = self.n;
        let mut out = TensorElement::zero(self.arity, n);
        for (key, c) in self.terms() {
            let m: Mono = key[k * n..(k + 1) * n].iter().copied().collect();
            let img = map(&m)?;
            for (mi, ci) in img.terms() {
                let mut nk = key.clone();
                nk[k * n..(k + 1) * n].copy_from_slice(mi);
                out.add_term(f, nk, f.mul(c, ci));
            }
        }
        Ok(out)
    }

    /// Replaces factor `k` by a tensor square image, raising the arity by one.
    pub fn expand_factor(
        &self,
        f: &FieldCtx,
        k: usize,
        mut map: impl FnMut(&Mono) -> Result<TensorElement>,
    ) -> Result<TensorElement> {
        let n = self.n;
        let mut out = TensorElement::zero(self.arity + 1, n);
        for (key, c) in self.terms() {
            let m: Mono = key[k * n..(k + 1) * n].iter().copied().collect();
            let img = map(&m)?;
            for (ik, ci) in img.terms() {
                let mut nk: TensorKey = key[..k * n].iter().copied().collect();
                nk.extend_from_slice(ik);
                nk.extend_from_slice(&key[(k + 1) * n..]);
                out.add_term(f, nk, f.mul(c, ci));
            }
        }
        Ok(out)
    }

    /// Applies a linear functional to factor `k`, lowering the arity by one.
    pub fn contract_factor(
        &self,
        f: &FieldCtx,
        k: usize,
        mut map: impl FnMut(&Mono) -> Result<FieldElt>,
    ) -> Result<TensorElement> {
        let n = self.n;
        let mut out = TensorElement::zero(self.arity - 1, n);
        for (key, c) in self.terms() {
            let m: Mono = key[k * n..(k + 1) * n].iter().copied().collect();
            let v = map(&m)?;
            if v.is_zero() {
                continue;
            }
            let mut nk: TensorKey = key[..k * n].iter().copied().collect();
            nk.extend_from_slice(&key[(k + 1) * n..]);
            out.add_term(f, nk, f.mul(c, v));
        }
        Ok(out)
    }

    /// Reinterprets an arity-1 tensor as an ordinary element.
    pub fn into_element(self, f: &FieldCtx) -> PbwElement {
        assert_eq!(self.arity, 1);
        let mut out = PbwElement::zero();
        for (k, c) in self.terms {
            out.add_term(f, k.iter().copied().collect(), c);
        }
        out
    }

    /// The residue modulo `X_1^s H⊗H + H⊗X_1^p H`: drops every term whose left
    /// factor has `X_1`-exponent at least `s` or whose right factor has
    /// `X_1`-exponent at least `p`.
    pub fn reduce_congruence(&self, s: i32, p: i32) -> TensorElement {
        assert_eq!(self.arity, 2);
        let n = self.n;
        TensorElement {
            arity: 2,
            n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k[0] < s && k[n] < p)
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }

    pub fn to_repr(&self, f: &FieldCtx) -> Vec<TensorTermRepr> {
        let n = self.n;
        self.terms
            .iter()
            .map(|(k, &c)| {
                let part = |i: usize| k[i * n..(i + 1) * n].to_vec();
                TensorTermRepr {
                    left: part(0),
                    mid: (self.arity == 3).then(|| part(1)),
                    right: part(self.arity - 1),
                    coeff: f.coords(c),
                }
            })
            .collect()
    }

    pub fn from_repr(
        f: &FieldCtx,
        arity: usize,
        n: usize,
        terms: &[TensorTermRepr],
    ) -> Result<TensorElement> {
        let mut out = TensorElement::zero(arity, n);
        for t in terms {
            let mut parts = vec![&t.left];
            match (&t.mid, arity) {
                (Some(mid), 3) => parts.push(mid),
                (None, 2) => {}
                _ => return Err(Error::ArityMismatch(arity, if t.mid.is_some() { 3 } else { 2 })),
            }
            parts.push(&t.right);
            if parts.iter().any(|p| p.len() != n) {
                return Err(Error::InvalidPresentation(format!(
                    "tensor term with exponent vectors not of length {n}"
                )));
            }
            let key: TensorKey = parts.iter().flat_map(|p| p.iter().copied()).collect();
            out.add_term(f, key, f.from_coords(&t.coeff)?);
        }
        Ok(out)
    }

    pub fn display(&self, f: &FieldCtx) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let n = self.n;
        self.terms
            .iter()
            .rev()
            .map(|(k, &c)| {
                let body = (0..self.arity)
                    .map(|i| {
                        let s = format_mono(&k[i * n..(i + 1) * n]);
                        if s.is_empty() {
                            "1".to_string()
                        } else {
                            s
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("⊗");
                if c == f.one() {
                    body
                } else {
                    format!("{}*{}", f.format(c), body)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `H^{⊗r}` for `r` in `1..=3`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    base: Arc<OrePresentation>,
    arity: usize,
}

impl TensorAlgebra {
    pub fn new(base: Arc<OrePresentation>, arity: usize) -> Self {
        TensorAlgebra { base, arity }
    }

    pub fn base(&self) -> &Arc<OrePresentation> {
        &self.base
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn pure(&self, factors: &[&PbwElement]) -> TensorElement {
        assert_eq!(factors.len(), self.arity);
        TensorElement::pure(self.base.field(), factors, self.base.n())
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn tensor_mul(&self, u: &TensorElement, v: &TensorElement) -> Result<TensorElement> {
        if u.arity != v.arity {
            return Err(Error::ArityMismatch(u.arity, v.arity));
        }
        let f = self.base.field();
        let n = self.base.n();
        let r = u.arity;
        let mut out = TensorElement::zero(r, n);
        for (ku, cu) in u.terms() {
            for (kv, cv) in v.terms() {
                let mut acc: Vec<(TensorKey, FieldElt)> = vec![(TensorKey::new(), f.mul(cu, cv))];
                for i in 0..r {
                    let a: Mono = ku[i * n..(i + 1) * n].iter().copied().collect();
                    let b: Mono = kv[i * n..(i + 1) * n].iter().copied().collect();
                    let prod = self.base.mul_mono(&a, &b)?;
                    let mut next = Vec::with_capacity(acc.len() * prod.len());
                    for (k, c) in &acc {
                        for (m, d) in prod.terms() {
                            let mut key = k.clone();
                            key.extend_from_slice(m);
                            next.push((key, f.mul(*c, d)));
                        }
                    }
                    acc = next;
                }
                for (k, c) in acc {
                    out.add_term(f, k, c);
                }
            }
        }
        Ok(out)
    }

    /// The multiplication map `m(a⊗b) = ab`.
    pub fn contract_m(&self, u: &TensorElement) -> Result<PbwElement> {
        if u.arity != 2 {
            return Err(Error::ArityMismatch(u.arity, 2));
        }
        let f = self.base.field();
        let n = self.base.n();
        let mut out = PbwElement::zero();
        for (k, c) in u.terms() {
            let a: Mono = k[..n].iter().copied().collect();
            let b: Mono = k[n..].iter().copied().collect();
            out.add_scaled(f, &self.base.mul_mono(&a, &b)?, c);
        }
        Ok(out)
    }
}

impl Algebra for TensorAlgebra {
    type Elem = TensorElement;

    fn field(&self) -> &Field {
        self.base.field()
    }

    fn zero(&self) -> TensorElement {
        TensorElement::zero(self.arity, self.base.n())
    }

    fn one(&self) -> TensorElement {
        let f = self.base.field();
        let mut out = self.zero();
        out.add_term(f, SmallVec::from_elem(0, self.arity * self.base.n()), f.one());
        out
    }

    fn add(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        a.add(self.base.field(), b)
    }

    fn scale(&self, a: &TensorElement, c: FieldElt) -> TensorElement {
        a.scale(self.base.field(), c)
    }

    fn mul(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        self.tensor_mul(a, b)
    }

    fn is_zero(&self, a: &TensorElement) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use crate::orealg::OreData;

    fn h_d0(p: u32) -> Arc<OrePresentation> {
        let f = FieldCtx::new(p, 1).unwrap();
        let mut data = OreData::trivial(&f, 2);
        data.delta_images[1][0] = crate::orealg::generator(&f, 2, 0);
        OrePresentation::new(f, data, Some(100)).unwrap()
    }

    #[test]
    fn componentwise_products() {
        let h = h_d0(3);
        let t = TensorAlgebra::new(h.clone(), 2);
        let one = h.one();
        let x1 = h.gen(0);
        let x2 = h.gen(1);
        let a = t.pure(&[&x1, &one]);
        let b = t.pure(&[&one, &x1]);
        assert_eq!(t.tensor_mul(&a, &b).unwrap(), t.pure(&[&x1, &x1]));
        let c = t.pure(&[&x2, &one]);
        let lhs = t.tensor_mul(&c, &a).unwrap();
        let f = h.field();
        let expect = h.mul(&x2, &x1).unwrap();
        assert_eq!(lhs, t.pure(&[&expect, &one]));
        assert_eq!(expect, h.mono(&[1, 1]).add(f, &x1));
    }

    #[test]
    fn contraction_and_ad() {
        let h = h_d0(2);
        let t = TensorAlgebra::new(h.clone(), 2);
        let x1 = h.gen(0);
        let w = t.pure(&[&x1, &x1]);
        assert_eq!(t.contract_m(&w).unwrap(), h.mono(&[2, 0]));
        let one = h.one();
        let b = t.add(&t.pure(&[&h.gen(1), &one]), &t.pure(&[&one, &h.gen(1)]));
        assert!(t.ad_power(&b, &t.one(), 1).unwrap().is_zero());
        assert!(t.tensor_mul(&w, &TensorAlgebra::new(h.clone(), 3).one()).is_err());
    }

    #[test]
    fn repr_roundtrip() {
        let h = h_d0(3);
        let f = h.field().clone();
        let t = TensorAlgebra::new(h.clone(), 3);
        let e = t.pure(&[&h.gen(0), &h.mono(&[1, 2]), &h.gen(1)]);
        let back = TensorElement::from_repr(&f, 3, 2, &e.to_repr(&f)).unwrap();
        assert_eq!(back, e);
    }
}
