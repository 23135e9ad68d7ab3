//! Iterated Ore extensions `F[X_1][X_2; σ_2, δ_2]...[X_n; σ_n, δ_n]`.
//!
//! Elements are kept in the ordered monomial basis `X_1^{e_1} ... X_n^{e_n}`.
//! Products are normalized by peeling off the top generator of the left
//! factor and commuting its powers past the right factor with
//! `x a = σ(a) x + δ(a)`. Generators are indexed from 0 in code.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldCtx, FieldElt};

/// Exponent vector of an ordered monomial.
pub type Mono = SmallVec<[i32; 4]>;

pub fn unit_mono(n: usize) -> Mono {
    SmallVec::from_elem(0, n)
}

pub fn total_degree(m: &[i32]) -> u64 {
    m.iter().map(|e| e.unsigned_abs() as u64).sum()
}

fn highest_nonzero(m: &[i32]) -> Option<usize> {
    m.iter().rposition(|&e| e != 0)
}

fn lowest_nonzero(m: &[i32]) -> Option<usize> {
    m.iter().position(|&e| e != 0)
}

/// Sparse linear combination of ordered monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PbwElement {
    terms: BTreeMap<Mono, FieldElt>,
}

/// Serialized monomial term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRepr {
    pub exponents: Vec<i32>,
    pub coeff: Vec<u32>,
}

impl PbwElement {
    pub fn zero() -> Self {
        PbwElement::default()
    }

    pub fn monomial(m: Mono, c: FieldElt) -> Self {
        let mut e = PbwElement::zero();
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    pub fn constant(n: usize, c: FieldElt) -> Self {
        PbwElement::monomial(unit_mono(n), c)
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

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, FieldElt)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &[i32]) -> FieldElt {
        self.terms.get(m).copied().unwrap_or(FieldElt::ZERO)
    }

    pub fn add_term(&mut self, f: &FieldCtx, m: Mono, c: FieldElt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, f: &FieldCtx, other: &PbwElement, c: FieldElt) {
        if c.is_zero() {
            return;
        }
        for (m, &x) in &other.terms {
            self.add_term(f, m.clone(), f.mul(x, c));
        }
    }

    pub fn add(&self, f: &FieldCtx, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        out.add_scaled(f, other, f.one());
        out
    }

    pub fn sub(&self, f: &FieldCtx, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        out.add_scaled(f, other, f.neg(f.one()));
        out
    }

    pub fn scale(&self, f: &FieldCtx, c: FieldElt) -> PbwElement {
        let mut out = PbwElement::zero();
        out.add_scaled(f, self, c);
        out
    }

    pub fn neg(&self, f: &FieldCtx) -> PbwElement {
        self.scale(f, f.neg(f.one()))
    }

    /// Highest generator index occurring, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| highest_nonzero(m)).max()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| total_degree(m)).max()
    }

    /// `Some(c)` if the element is a scalar multiple of the unit.
    pub fn as_scalar(&self) -> Option<FieldElt> {
        match self.terms.len() {
            0 => Some(FieldElt::ZERO),
            1 => {
                let (m, &c) = self.terms.iter().next()?;
                m.iter().all(|&e| e == 0).then_some(c)
            }
            _ => None,
        }
    }

    /// Multiplies on the right by `X_g^k` when no generator above `g` occurs.
    fn shifted(&self, g: usize, k: i32) -> PbwElement {
        PbwElement {
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| {
                    let mut m = m.clone();
                    m[g] += k;
                    (m, c)
                })
                .collect(),
        }
    }

    pub fn to_repr(&self, f: &FieldCtx) -> Vec<TermRepr> {
        self.terms
            .iter()
            .map(|(m, &c)| TermRepr {
                exponents: m.to_vec(),
                coeff: f.coords(c),
            })
            .collect()
    }

    pub fn from_repr(f: &FieldCtx, n: usize, terms: &[TermRepr]) -> Result<PbwElement> {
        let mut out = PbwElement::zero();
        for t in terms {
            if t.exponents.len() != n {
                return Err(Error::InvalidPresentation(format!(
                    "exponent vector {:?} has length {} instead of {n}",
                    t.exponents,
                    t.exponents.len()
                )));
            }
            out.add_term(f, t.exponents.iter().copied().collect(), f.from_coords(&t.coeff)?);
        }
        Ok(out)
    }

    /// Human-readable form such as `2*X1^2*X2 + X1`.
    pub fn display(&self, f: &FieldCtx) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, &c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mono = format_mono(m);
            if mono.is_empty() {
                out.push_str(&f.format(c));
            } else if c == f.one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{}*{}", f.format(c), mono);
            }
        }
        out
    }
}

pub fn format_mono(m: &[i32]) -> String {
    m.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("X{}", i + 1)
            } else {
                format!("X{}^{}", i + 1, e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Result of a Jacobson binomial check `(a+b)^p = a^p + b^p + ad_b^{p-1}(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobsonCheck<E> {
    pub lhs: E,
    pub rhs: E,
    pub hypothesis_ok: bool,
}

impl<E: PartialEq> JacobsonCheck<E> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// An associative unital algebra over a finite field with exact elements.
pub trait Algebra {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn field(&self) -> &Field;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: FieldElt) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = self.field();
        self.add(a, &self.scale(b, f.neg(f.one())))
    }

    fn scalar(&self, c: FieldElt) -> Self::Elem {
        self.scale(&self.one(), c)
    }

    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.sub(&self.mul(a, b)?, &self.mul(b, a)?))
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Result<Self::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    fn pth_power(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.pow(a, self.field().p())
    }

    /// `ad_b^k(x)` with `ad_b(x) = bx - xb`.
    fn ad_power(&self, b: &Self::Elem, x: &Self::Elem, k: u32) -> Result<Self::Elem> {
        let mut cur = x.clone();
        for _ in 0..k {
            cur = self.commutator(b, &cur)?;
        }
        Ok(cur)
    }

    fn jacobson_binomial(
        &self,
        a: &Self::Elem,
        b: &Self::Elem,
    ) -> Result<JacobsonCheck<Self::Elem>> {
        let p = self.field().p();
        let mut hypothesis_ok = true;
        let mut ad = a.clone();
        for _ in 1..p {
            ad = self.commutator(b, &ad)?;
            if !self.is_zero(&self.commutator(&ad, a)?) {
                hypothesis_ok = false;
            }
        }
        let lhs = self.pth_power(&self.add(a, b))?;
        let rhs = self.add(&self.add(&self.pth_power(a)?, &self.pth_power(b)?), &ad);
        Ok(JacobsonCheck {
            lhs,
            rhs,
            hypothesis_ok,
        })
    }
}

/// How `σ_i` was certified to be an automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaCheck {
    Identity,
    /// `σ(X_j) = c_j X_j + (lower generators)` with `c_j != 0`.
    Triangular,
    /// The linear part is invertible but the triangular certificate does not
    /// apply; surjectivity is not proven.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkewKind {
    Sigma,
    Delta,
}

/// Raw generator data for a presentation.
#[derive(Clone, Debug)]
pub struct OreData {
    pub n: usize,
    /// Allow negative exponents on the first generator.
    pub laurent_first: bool,
    /// `sigma_images[i][j] = σ_i(X_j)` for `j < i`.
    pub sigma_images: Vec<Vec<PbwElement>>,
    /// `delta_images[i][j] = δ_i(X_j)` for `j < i`.
    pub delta_images: Vec<Vec<PbwElement>>,
}

impl OreData {
    /// Identity twists and zero derivations on `n` generators.
    pub fn trivial(f: &FieldCtx, n: usize) -> OreData {
        let sigma_images = (0..n)
            .map(|i| (0..i).map(|j| generator(f, n, j)).collect())
            .collect();
        let delta_images = (0..n).map(|i| vec![PbwElement::zero(); i]).collect();
        OreData {
            n,
            laurent_first: false,
            sigma_images,
            delta_images,
        }
    }
}

pub fn generator(f: &FieldCtx, n: usize, i: usize) -> PbwElement {
    let mut m = unit_mono(n);
    m[i] = 1;
    PbwElement::monomial(m, f.one())
}

type Cache<K, V> = RwLock<HashMap<K, V>>;

#[derive(Default)]
struct Caches {
    products: Cache<(Mono, Mono), PbwElement>,
    sigma: Cache<(usize, Mono), PbwElement>,
    delta: Cache<(usize, Mono), PbwElement>,
    commute: Cache<(usize, u32, Mono), Arc<Vec<PbwElement>>>,
}

fn cached<K: std::hash::Hash + Eq, V: Clone>(c: &Cache<K, V>, k: &K) -> Option<V> {
    c.read().ok().and_then(|m| m.get(k).cloned())
}

fn store<K: std::hash::Hash + Eq, V>(c: &Cache<K, V>, k: K, v: V) {
    if let Ok(mut m) = c.write() {
        m.insert(k, v);
    }
}

/// A validated iterated Ore presentation.
pub struct OrePresentation {
    field: Field,
    n: usize,
    laurent_first: bool,
    sigma: Vec<Vec<PbwElement>>,
    delta: Vec<Vec<PbwElement>>,
    sigma_identity: Vec<bool>,
    sigma_checks: Vec<SigmaCheck>,
    /// `σ_i(X_1)^{-1}` and `δ_i(X_1^{-1})` for Laurent presentations.
    laurent_data: Vec<Option<(PbwElement, PbwElement)>>,
    degree_cap: u32,
    caches: Caches,
}

impl std::fmt::Debug for OrePresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OrePresentation")
            .field("field", &self.field)
            .field("n", &self.n)
            .field("laurent_first", &self.laurent_first)
            .field("degree_cap", &self.degree_cap)
            .finish()
    }
}

/// Serialized presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OreRepr {
    pub n: usize,
    #[serde(default)]
    pub laurent_first: bool,
    pub sigma_images: Vec<Vec<Vec<TermRepr>>>,
    pub delta_images: Vec<Vec<Vec<TermRepr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
}

impl OrePresentation {
    /// Validates `data` and builds the presentation. The default degree cap
    /// is `p^3`.
    pub fn new(field: Field, data: OreData, degree_cap: Option<u32>) -> Result<Arc<Self>> {
        let p = field.p();
        let cap = degree_cap.unwrap_or(p.saturating_pow(3));
        let n = data.n;
        if n == 0 {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        if data.sigma_images.len() != n || data.delta_images.len() != n {
            return Err(Error::InvalidPresentation(format!(
                "expected generator data for {n} generators"
            )));
        }
        for i in 0..n {
            for (kind, images) in [("sigma", &data.sigma_images[i]), ("delta", &data.delta_images[i])] {
                if images.len() != i {
                    return Err(Error::InvalidPresentation(format!(
                        "{kind} data of generator {} must list {i} images",
                        i + 1
                    )));
                }
                for img in images {
                    check_shape(img, n, i, data.laurent_first)?;
                }
            }
        }
        let sigma_identity = (0..n)
            .map(|i| {
                (0..i).all(|j| data.sigma_images[i][j] == generator(&field, n, j))
            })
            .collect();
        let mut pres = OrePresentation {
            field,
            n,
            laurent_first: data.laurent_first,
            sigma: data.sigma_images,
            delta: data.delta_images,
            sigma_identity,
            sigma_checks: Vec::new(),
            laurent_data: vec![None; n],
            degree_cap: cap,
            caches: Caches::default(),
        };
        pres.validate()?;
        Ok(Arc::new(pres))
    }

    pub fn from_repr(field: Field, repr: &OreRepr) -> Result<Arc<Self>> {
        let n = repr.n;
        let conv = |v: &Vec<Vec<Vec<TermRepr>>>| -> Result<Vec<Vec<PbwElement>>> {
            v.iter()
                .map(|row| {
                    row.iter()
                        .map(|t| PbwElement::from_repr(&field, n, t))
                        .collect()
                })
                .collect()
        };
        let data = OreData {
            n,
            laurent_first: repr.laurent_first,
            sigma_images: conv(&repr.sigma_images)?,
            delta_images: conv(&repr.delta_images)?,
        };
        OrePresentation::new(field.clone(), data, repr.degree_cap)
    }

    pub fn to_repr(&self) -> OreRepr {
        let conv = |v: &Vec<Vec<PbwElement>>| {
            v.iter()
                .map(|row| row.iter().map(|e| e.to_repr(&self.field)).collect())
                .collect()
        };
        OreRepr {
            n: self.n,
            laurent_first: self.laurent_first,
            sigma_images: conv(&self.sigma),
            delta_images: conv(&self.delta),
            degree_cap: Some(self.degree_cap),
        }
    }

    /// Same generator data with a different degree cap.
    pub fn with_degree_cap(&self, cap: u32) -> Result<Arc<Self>> {
        OrePresentation::new(
            self.field.clone(),
            OreData {
                n: self.n,
                laurent_first: self.laurent_first,
                sigma_images: self.sigma.clone(),
                delta_images: self.delta.clone(),
            },
            Some(cap),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn laurent_first(&self) -> bool {
        self.laurent_first
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn sigma_checks(&self) -> &[SigmaCheck] {
        &self.sigma_checks
    }

    pub fn sigma_image(&self, i: usize, j: usize) -> &PbwElement {
        &self.sigma[i][j]
    }

    pub fn delta_image(&self, i: usize, j: usize) -> &PbwElement {
        &self.delta[i][j]
    }

    pub fn gen(&self, i: usize) -> PbwElement {
        generator(&self.field, self.n, i)
    }

    pub fn mono(&self, exps: &[i32]) -> PbwElement {
        PbwElement::monomial(exps.iter().copied().collect(), self.field.one())
    }

    pub fn unit(&self) -> Mono {
        unit_mono(self.n)
    }

    fn validate(&mut self) -> Result<()> {
        let f = self.field.clone();
        let n = self.n;
        for i in 0..n {
            if self.laurent_first && i > 0 {
                let img = &self.sigma[i][0];
                let unit = unit_monomial_inverse(&f, img, n).ok_or_else(|| {
                    Error::InvalidPresentation(format!(
                        "sigma_{} must send X1 to a unit monomial c*X1^(+-1)",
                        i + 1
                    ))
                })?;
                let (m, _) = img.terms().next().expect("nonzero");
                if m[0].abs() != 1 {
                    return Err(Error::InvalidPresentation(format!(
                        "sigma_{} must send X1 to c*X1^(+-1)",
                        i + 1
                    )));
                }
                // δ(X^{-1}) = -σ(X)^{-1} δ(X) X^{-1}
                let xinv = {
                    let mut m = self.unit();
                    m[0] = -1;
                    PbwElement::monomial(m, f.one())
                };
                let d = self.mul(&self.mul(&unit, &self.delta[i][0])?, &xinv)?.neg(&f);
                self.laurent_data[i] = Some((unit, d));
            }
            let check = self.check_sigma_invertible(i)?;
            self.sigma_checks.push(check);
            // relations of H_(i): X_l X_j = σ_l(X_j) X_l + δ_l(X_j), j < l < i
            for l in 0..i {
                for j in 0..l {
                    let rel_rhs = self.relation_rhs(l, j)?;
                    let xl = self.gen(l);
                    let xj = self.gen(j);
                    let s_lhs = self.mul(&self.sigma[i][l], &self.sigma[i][j])?;
                    let s_rhs = self.skew_eval(i, SkewKind::Sigma, &rel_rhs)?;
                    if s_lhs != s_rhs {
                        return Err(Error::InvalidPresentation(format!(
                            "sigma_{} does not respect the relation of X{} and X{}",
                            i + 1,
                            l + 1,
                            j + 1
                        )));
                    }
                    // formal Leibniz image of the word X_l X_j
                    let d_word = self
                        .mul(&self.sigma[i][l], &self.delta[i][j])?
                        .add(&f, &self.mul(&self.delta[i][l], &xj)?);
                    let d_rhs = self.skew_eval(i, SkewKind::Delta, &rel_rhs)?;
                    if d_word != d_rhs {
                        return Err(Error::InvalidPresentation(format!(
                            "delta_{} does not respect the relation of X{} and X{}",
                            i + 1,
                            l + 1,
                            j + 1
                        )));
                    }
                    let _ = xl;
                }
            }
        }
        Ok(())
    }

    fn check_sigma_invertible(&self, i: usize) -> Result<SigmaCheck> {
        if self.sigma_identity[i] {
            return Ok(SigmaCheck::Identity);
        }
        let f = &self.field;
        let triangular = (0..i).all(|j| {
            let img = &self.sigma[i][j];
            let mut lead = FieldElt::ZERO;
            let mut lower_only = true;
            for (m, c) in img.terms() {
                let is_xj = m.iter().enumerate().all(|(k, &e)| if k == j { e == 1 } else { e == 0 });
                if is_xj {
                    lead = c;
                } else if highest_nonzero(m).is_some_and(|h| h >= j) {
                    lower_only = false;
                }
            }
            !lead.is_zero() && lower_only
        });
        if triangular || (self.laurent_first && i > 0 && self.triangular_laurent(i)) {
            return Ok(SigmaCheck::Triangular);
        }
        let mut rows = Vec::with_capacity(i);
        for j in 0..i {
            let row: Vec<FieldElt> = (0..i)
                .map(|k| {
                    let mut m = self.unit();
                    m[k] = 1;
                    self.sigma[i][j].coeff(&m)
                })
                .collect();
            rows.push(row);
        }
        let rank = crate::linalg::rank_of_vectors(f, &rows);
        if rank == i {
            Ok(SigmaCheck::Inconclusive)
        } else {
            Err(Error::InvalidPresentation(format!(
                "sigma_{} has a singular linear part",
                i + 1
            )))
        }
    }

    fn triangular_laurent(&self, i: usize) -> bool {
        (1..i).all(|j| {
            let img = &self.sigma[i][j];
            let mut m = self.unit();
            m[j] = 1;
            !img.coeff(&m).is_zero()
                && img
                    .terms()
                    .all(|(t, _)| t == &m || highest_nonzero(t).is_none_or(|h| h < j))
        })
    }

    /// Normal form of `X_l X_j` for `j < l`.
    pub fn relation_rhs(&self, l: usize, j: usize) -> Result<PbwElement> {
        let f = &self.field;
        Ok(self
            .mul(&self.sigma[l][j], &self.gen(l))?
            .add(f, &self.delta[l][j]))
    }

    /// `σ_i(a)` or `δ_i(a)` for `a` in the subalgebra on generators below `i`.
    pub fn skew_eval(&self, i: usize, kind: SkewKind, a: &PbwElement) -> Result<PbwElement> {
        if let Some(g) = a.max_generator() {
            if g >= i {
                return Err(Error::GeneratorOutOfRange { found: g, limit: i });
            }
        }
        self.skew_elem(i, kind, a)
    }

    fn skew_elem(&self, i: usize, kind: SkewKind, a: &PbwElement) -> Result<PbwElement> {
        let f = &self.field;
        let mut out = PbwElement::zero();
        for (m, c) in a.terms() {
            let img = match kind {
                SkewKind::Sigma => self.sigma_mono(i, m)?,
                SkewKind::Delta => self.delta_mono(i, m)?,
            };
            out.add_scaled(f, &img, c);
        }
        Ok(out)
    }

    fn sigma_mono(&self, i: usize, m: &Mono) -> Result<PbwElement> {
        if self.sigma_identity[i] {
            return Ok(PbwElement::monomial(m.clone(), self.field.one()));
        }
        let key = (i, m.clone());
        if let Some(v) = cached(&self.caches.sigma, &key) {
            return Ok(v);
        }
        let mut acc = PbwElement::constant(self.n, self.field.one());
        for (j, &e) in m.iter().enumerate().take(i) {
            if e == 0 {
                continue;
            }
            let base = if e > 0 {
                self.sigma[i][j].clone()
            } else {
                self.laurent_data[i]
                    .as_ref()
                    .map(|(inv, _)| inv.clone())
                    .ok_or_else(|| Error::NotInvertible(format!("X{}", j + 1)))?
            };
            for _ in 0..e.unsigned_abs() {
                acc = self.mul(&acc, &base)?;
            }
        }
        store(&self.caches.sigma, key, acc.clone());
        Ok(acc)
    }

    fn delta_mono(&self, i: usize, m: &Mono) -> Result<PbwElement> {
        let Some(h) = highest_nonzero(m) else {
            return Ok(PbwElement::zero());
        };
        let key = (i, m.clone());
        if let Some(v) = cached(&self.caches.delta, &key) {
            return Ok(v);
        }
        let f = &self.field;
        let mut u = m.clone();
        let (letter, d_letter) = if m[h] > 0 {
            u[h] -= 1;
            (self.gen(h), self.delta[i][h].clone())
        } else {
            u[h] += 1;
            let mut xinv = self.unit();
            xinv[0] = -1;
            let d = self.laurent_data[i]
                .as_ref()
                .map(|(_, d)| d.clone())
                .ok_or_else(|| Error::NotInvertible("X1".into()))?;
            (PbwElement::monomial(xinv, f.one()), d)
        };
        let su = self.sigma_mono(i, &u)?;
        let du = self.delta_mono(i, &u)?;
        let out = self.mul(&su, &d_letter)?.add(f, &self.mul(&du, &letter)?);
        store(&self.caches.delta, key, out.clone());
        Ok(out)
    }

    /// `X_g^s · b = Σ_j parts[j] X_g^j` for a monomial `b` below `g`.
    fn commute_power(&self, g: usize, s: u32, b: &Mono) -> Result<Arc<Vec<PbwElement>>> {
        if s == 0 {
            return Ok(Arc::new(vec![PbwElement::monomial(b.clone(), self.field.one())]));
        }
        let key = (g, s, b.clone());
        if let Some(v) = cached(&self.caches.commute, &key) {
            return Ok(v);
        }
        let f = &self.field;
        let prev = self.commute_power(g, s - 1, b)?;
        let mut next = vec![PbwElement::zero(); s as usize + 1];
        for (j, e) in prev.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let se = self.skew_elem(g, SkewKind::Sigma, e)?;
            next[j + 1].add_scaled(f, &se, f.one());
            let de = self.skew_elem(g, SkewKind::Delta, e)?;
            next[j].add_scaled(f, &de, f.one());
        }
        let next = Arc::new(next);
        store(&self.caches.commute, key, next.clone());
        Ok(next)
    }

    /// Normal form of the product of two ordered monomials.
    pub fn mul_mono(&self, a: &Mono, b: &Mono) -> Result<PbwElement> {
        let f = &self.field;
        let a_max = highest_nonzero(a);
        let b_min = lowest_nonzero(b);
        let concat = match (a_max, b_min) {
            (None, _) | (_, None) => true,
            (Some(x), Some(y)) => x <= y,
        };
        if concat {
            let m: Mono = a.iter().zip(b).map(|(x, y)| x + y).collect();
            self.check_cap(&m)?;
            return Ok(PbwElement::monomial(m, f.one()));
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = cached(&self.caches.products, &key) {
            return Ok(v);
        }
        let top = a_max.max(highest_nonzero(b)).expect("nonunit");
        let s = a[top];
        let t = b[top];
        let mut a_low = a.clone();
        a_low[top] = 0;
        let mut b_low = b.clone();
        b_low[top] = 0;
        let out = if s == 0 {
            self.mul_mono(&a_low, &b_low)?.shifted(top, t)
        } else {
            let parts = self.commute_power(top, s as u32, &b_low)?;
            let mut out = PbwElement::zero();
            for (j, e) in parts.iter().enumerate() {
                for (m, c) in e.terms() {
                    let prod = self.mul_mono(&a_low, m)?;
                    out.add_scaled(f, &prod.shifted(top, j as i32 + t), c);
                }
            }
            out
        };
        for (m, _) in out.terms() {
            self.check_cap(m)?;
        }
        store(&self.caches.products, key, out.clone());
        Ok(out)
    }

    fn check_cap(&self, m: &[i32]) -> Result<()> {
        let d = total_degree(m);
        if d > self.degree_cap as u64 {
            Err(Error::DegreeOverflow {
                degree: d,
                cap: self.degree_cap,
            })
        } else {
            Ok(())
        }
    }

    /// Inverse of a unit monomial `c X_1^k`, if `x` is one.
    pub fn unit_inverse(&self, x: &PbwElement) -> Option<PbwElement> {
        let inv = unit_monomial_inverse(&self.field, x, self.n)?;
        let (m, _) = inv.terms().next()?;
        (self.laurent_first || m[0] == 0).then_some(inv)
    }

    /// Evaluates the algebra map (or anti-map when `anti`) determined by
    /// generator images in `target`. `first_inverse` is the image of
    /// `X_1^{-1}`, needed only for Laurent input.
    pub fn substitute<A: Algebra>(
        &self,
        target: &A,
        images: &[A::Elem],
        first_inverse: Option<&A::Elem>,
        h: &PbwElement,
        anti: bool,
    ) -> Result<A::Elem> {
        let mut powers: HashMap<(usize, i32), A::Elem> = HashMap::new();
        let mut out = target.zero();
        for (m, c) in h.terms() {
            let mut factors = Vec::new();
            for (j, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if let Some(v) = powers.get(&(j, e)) {
                    factors.push(v.clone());
                    continue;
                }
                let base = if e > 0 {
                    images[j].clone()
                } else {
                    first_inverse
                        .cloned()
                        .ok_or_else(|| Error::NotInvertible(format!("X{}", j + 1)))?
                };
                let v = target.pow(&base, e.unsigned_abs())?;
                powers.insert((j, e), v.clone());
                factors.push(v);
            }
            if anti {
                factors.reverse();
            }
            let mut prod = target.one();
            for x in &factors {
                prod = target.mul(&prod, x)?;
            }
            out = target.add(&out, &target.scale(&prod, c));
        }
        Ok(out)
    }

    /// Checks every defining relation under the map given by generator
    /// images. Returns the first failing pair `(l, j)` with the defect.
    pub fn relation_defect<A: Algebra>(
        &self,
        target: &A,
        images: &[A::Elem],
        first_inverse: Option<&A::Elem>,
        anti: bool,
    ) -> Result<Option<(usize, usize, A::Elem)>> {
        for l in 0..self.n {
            for j in 0..l {
                let rhs = self.relation_rhs(l, j)?;
                let lhs = if anti {
                    target.mul(&images[j], &images[l])?
                } else {
                    target.mul(&images[l], &images[j])?
                };
                let rhs = self.substitute(target, images, first_inverse, &rhs, anti)?;
                let defect = target.sub(&lhs, &rhs);
                if !target.is_zero(&defect) {
                    return Ok(Some((l, j, defect)));
                }
            }
        }
        Ok(None)
    }

    /// True when all generators commute.
    pub fn is_commutative(&self) -> Result<bool> {
        for l in 0..self.n {
            for j in 0..l {
                if !self.commutator(&self.gen(l), &self.gen(j))?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn unit_monomial_inverse(f: &FieldCtx, x: &PbwElement, n: usize) -> Option<PbwElement> {
    if x.len() != 1 {
        return None;
    }
    let (m, c) = x.terms().next()?;
    if m.iter().skip(1).any(|&e| e != 0) {
        return None;
    }
    let mut inv = unit_mono(n);
    inv[0] = -m[0];
    Some(PbwElement::monomial(inv, f.inv(c)?))
}

fn check_shape(e: &PbwElement, n: usize, limit: usize, laurent: bool) -> Result<()> {
    for (m, _) in e.terms() {
        if m.len() != n {
            return Err(Error::InvalidPresentation(format!(
                "exponent vector {m:?} has the wrong length"
            )));
        }
        if let Some(h) = highest_nonzero(m) {
            if h >= limit {
                return Err(Error::GeneratorOutOfRange { found: h, limit });
            }
        }
        if m.iter().enumerate().any(|(k, &e)| e < 0 && (k > 0 || !laurent)) {
            return Err(Error::InvalidPresentation(format!(
                "negative exponent in {m:?}"
            )));
        }
    }
    Ok(())
}

impl Algebra for OrePresentation {
    type Elem = PbwElement;

    fn field(&self) -> &Field {
        &self.field
    }

    fn zero(&self) -> PbwElement {
        PbwElement::zero()
    }

    fn one(&self) -> PbwElement {
        PbwElement::constant(self.n, self.field.one())
    }

    fn add(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        a.add(&self.field, b)
    }

    fn scale(&self, a: &PbwElement, c: FieldElt) -> PbwElement {
        a.scale(&self.field, c)
    }

    fn mul(&self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement> {
        let f = &self.field;
        let mut out = PbwElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let prod = self.mul_mono(ma, mb)?;
                out.add_scaled(f, &prod, f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    fn is_zero(&self, a: &PbwElement) -> bool {
        a.is_zero()
    }
}

/// The base field viewed as an algebra; used for counit evaluation.
pub struct ScalarAlgebra(pub Field);

impl Algebra for ScalarAlgebra {
    type Elem = FieldElt;

    fn field(&self) -> &Field {
        &self.0
    }

    fn zero(&self) -> FieldElt {
        FieldElt::ZERO
    }

    fn one(&self) -> FieldElt {
        self.0.one()
    }

    fn add(&self, a: &FieldElt, b: &FieldElt) -> FieldElt {
        self.0.add(*a, *b)
    }

    fn scale(&self, a: &FieldElt, c: FieldElt) -> FieldElt {
        self.0.mul(*a, c)
    }

    fn mul(&self, a: &FieldElt, b: &FieldElt) -> Result<FieldElt> {
        Ok(self.0.mul(*a, *b))
    }

    fn is_zero(&self, a: &FieldElt) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    /// `F[X1][X2; id, δ]` with `δ(X1)` given.
    fn two_step(p: u32, delta_x1: &[(i32, i64)]) -> Arc<OrePresentation> {
        let f = FieldCtx::new(p, 1).unwrap();
        let mut data = OreData::trivial(&f, 2);
        let mut d = PbwElement::zero();
        for &(e, c) in delta_x1 {
            d.add_term(&f, SmallVec::from_slice(&[e, 0]), f.from_int(c));
        }
        data.delta_images[1][0] = d;
        OrePresentation::new(f, data, Some(200)).unwrap()
    }

    #[test]
    fn defining_relation() {
        let h = two_step(3, &[(1, 1)]);
        let f = h.field().clone();
        let prod = h.mul(&h.gen(1), &h.gen(0)).unwrap();
        let expect = h.mono(&[1, 1]).add(&f, &h.mono(&[1, 0]));
        assert_eq!(prod, expect);
        assert_eq!(h.mul(&h.gen(0), &h.gen(1)).unwrap(), h.mono(&[1, 1]));
    }

    #[test]
    fn delta_of_square_and_pth_power() {
        let h = two_step(3, &[(1, 1)]);
        let f = h.field().clone();
        let d = h.skew_eval(1, SkewKind::Delta, &h.mono(&[2, 0])).unwrap();
        assert_eq!(d, h.mono(&[2, 0]).scale(&f, f.from_int(2)));
        let dp = h.skew_eval(1, SkewKind::Delta, &h.mono(&[3, 0])).unwrap();
        assert!(dp.is_zero());
        let c = h.commutator(&h.gen(1), &h.mono(&[2, 0])).unwrap();
        assert_eq!(c, d);
        assert!(h.skew_eval(1, SkewKind::Sigma, &h.gen(1)).is_err());
    }

    #[test]
    fn iterated_commutator_with_x2() {
        let h = two_step(5, &[(1, 1)]);
        let mut cur = h.gen(0);
        for _ in 0..4 {
            cur = h.commutator(&h.gen(1), &cur).unwrap();
            assert_eq!(cur, h.gen(0));
        }
    }

    #[test]
    fn pth_power_of_x2_acts_as_delta_p() {
        // p = 2, δ(X1) = X1: [X2^2, X1] = δ^2(X1) = X1
        let h = two_step(2, &[(1, 1)]);
        let x2sq = h.pth_power(&h.gen(1)).unwrap();
        assert_eq!(h.commutator(&x2sq, &h.gen(0)).unwrap(), h.gen(0));
        assert_eq!(h.pth_power(&h.gen(0)).unwrap(), h.mono(&[2, 0]));
    }

    #[test]
    fn jacobson_on_generators() {
        for p in [2, 3, 5] {
            let h = two_step(p, &[(1, 1), (p as i32, 1)]);
            let j = h.jacobson_binomial(&h.gen(0), &h.gen(1)).unwrap();
            assert!(j.hypothesis_ok);
            assert!(j.holds(), "p={p}");
        }
    }

    #[test]
    fn degree_overflow_is_reported() {
        let f = FieldCtx::new(2, 1).unwrap();
        let h = OrePresentation::new(f, OreData::trivial(&FieldCtx::new(2, 1).unwrap(), 2), None).unwrap();
        let big = h.mono(&[5, 4]);
        assert!(matches!(h.mul(&big, &big), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn invalid_delta_rejected() {
        // three generators, δ_3 violating the relation X2 X1 = X1 X2 + X1
        let f = FieldCtx::new(3, 1).unwrap();
        let mut data = OreData::trivial(&f, 3);
        data.delta_images[1][0] = generator(&f, 3, 0);
        data.delta_images[2][0] = generator(&f, 3, 1);
        let r = OrePresentation::new(f, data, None);
        assert!(matches!(r, Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn laurent_relation() {
        // K(1,1,1) over F_2: X2 X1 = X1 X2 + X1 - X1^2
        let f = FieldCtx::new(2, 1).unwrap();
        let mut data = OreData::trivial(&f, 2);
        data.laurent_first = true;
        let mut d = PbwElement::zero();
        d.add_term(&f, SmallVec::from_slice(&[1, 0]), f.one());
        d.add_term(&f, SmallVec::from_slice(&[2, 0]), f.neg(f.one()));
        data.delta_images[1][0] = d.clone();
        let h = OrePresentation::new(f.clone(), data, None).unwrap();
        let prod = h.mul(&h.gen(1), &h.gen(0)).unwrap();
        assert_eq!(prod, h.mono(&[1, 1]).add(&f, &d));
        let xinv = h.mono(&[-1, 0]);
        assert_eq!(h.mul(&h.gen(0), &xinv).unwrap(), h.one());
        // X2 commutes with X1 X1^{-1}
        let lhs = h.mul(&h.mul(&h.gen(1), &h.gen(0)).unwrap(), &xinv).unwrap();
        assert_eq!(lhs, h.gen(1));
    }

    #[test]
    fn repr_roundtrip() {
        let h = two_step(3, &[(1, 2), (3, 1)]);
        let f = h.field().clone();
        let e = h.mul(&h.mono(&[0, 2]), &h.mono(&[2, 1])).unwrap();
        let back = PbwElement::from_repr(&f, 2, &e.to_repr(&f)).unwrap();
        assert_eq!(back, e);
        let pres = OrePresentation::from_repr(f, &h.to_repr()).unwrap();
        assert_eq!(pres.mul(&h.gen(1), &h.gen(0)).unwrap(), h.mul(&h.gen(1), &h.gen(0)).unwrap());
    }
}
