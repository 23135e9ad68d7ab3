//! The two-generator families `H(d, b, c)` over `k[X_1]` and `K(a, b, c)`
//! over `k[X_1^{±1}]`, with isomorphism search and orbit normal forms.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::smallvec;

use crate::error::{Error, Result};
use crate::gf::{embed, extend, CoeffRepr, Embedding, Field, FieldCtx, FieldElt, MAX_EXTENSION_DEGREE};
use crate::hopf::{check_hopf_map as check_map, HopfMapReport, HopfStructure};
use crate::orealg::{Algebra, Mono, OreData, OrePresentation, PbwElement};
use crate::tensoralg::TensorElement;

/// `λ_i = (p-1)!/(i!(p-i)!) mod p` for `i = 1..p-1`.
///
/// The numerator `(p-1)(p-2)...(p-i+1)` and `i!` are coprime to `p`, so the
/// integer quotient reduces to the modular quotient.
pub fn lambda_coeffs(p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let inv = |a: u64| {
        let (mut base, mut e, mut acc) = (a % p64, p64 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p64;
            }
            base = base * base % p64;
            e >>= 1;
        }
        acc
    };
    (1..p as u64)
        .map(|i| {
            let num = (1..i).fold(1u64, |acc, k| acc * (p64 - k) % p64);
            let den = (1..=i).fold(1u64, |acc, k| acc * k % p64);
            (num * inv(den) % p64) as u32
        })
        .collect()
}

/// One scalar of `H(d, b, c)`, in scan order `d_0, d_1, ..., b_0, ..., c_{0,1}, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Param {
    D(u32),
    B(u32),
    C(u32, u32),
}

/// Finitely supported scalar sequences `d_s`, `b_s`, `c_{s,t}` (`s < t`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ihoe2Params {
    field: Field,
    values: BTreeMap<Param, FieldElt>,
}

/// Serialized parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ihoe2Repr {
    pub p: u32,
    pub m: u32,
    #[serde(default)]
    pub d: Vec<(u32, CoeffRepr)>,
    #[serde(default)]
    pub b: Vec<(u32, CoeffRepr)>,
    #[serde(default)]
    pub c: Vec<(u32, u32, CoeffRepr)>,
}

impl Ihoe2Params {
    pub fn zero(field: &Field) -> Self {
        Ihoe2Params {
            field: field.clone(),
            values: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn set(&mut self, param: Param, value: FieldElt) -> Result<()> {
        if let Param::C(s, t) = param {
            if s >= t {
                return Err(Error::InvalidParams(format!("c index ({s},{t}) needs s < t")));
            }
        }
        if value.is_zero() {
            self.values.remove(&param);
        } else {
            self.values.insert(param, value);
        }
        Ok(())
    }

    pub fn with(mut self, param: Param, value: FieldElt) -> Result<Self> {
        self.set(param, value)?;
        Ok(self)
    }

    pub fn get(&self, param: Param) -> FieldElt {
        self.values.get(&param).copied().unwrap_or(FieldElt::ZERO)
    }

    pub fn d(&self, s: u32) -> FieldElt {
        self.get(Param::D(s))
    }

    pub fn b(&self, s: u32) -> FieldElt {
        self.get(Param::B(s))
    }

    pub fn c(&self, s: u32, t: u32) -> FieldElt {
        self.get(Param::C(s, t))
    }

    /// Nonzero entries in scan order.
    pub fn support(&self) -> impl Iterator<Item = (Param, FieldElt)> + '_ {
        self.values.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `H(d, b, c)` is commutative exactly when every `d_s` vanishes.
    pub fn is_commutative(&self) -> bool {
        !self.values.keys().any(|k| matches!(k, Param::D(_)))
    }

    pub fn d_support(&self) -> impl Iterator<Item = (u32, FieldElt)> + '_ {
        self.support().filter_map(|(k, v)| match k {
            Param::D(s) => Some((s, v)),
            _ => None,
        })
    }

    /// Largest index appearing anywhere in the support.
    pub fn max_index(&self) -> u32 {
        self.values
            .keys()
            .map(|k| match *k {
                Param::D(s) | Param::B(s) => s,
                Param::C(_, t) => t,
            })
            .max()
            .unwrap_or(0)
    }

    /// Largest `X_1`-exponent in `δ(X_1)` or in either factor of the tail.
    pub fn max_exponent(&self) -> Result<u64> {
        let p = self.p() as u64;
        let mut top = 1u64;
        for k in self.values.keys() {
            let e = match *k {
                Param::D(s) => p.checked_pow(s),
                Param::B(s) => p.checked_pow(s + 1),
                Param::C(_, t) => p.checked_pow(t),
            };
            top = top.max(e.ok_or_else(|| Error::InvalidParams("support index too large".into()))?);
        }
        Ok(top)
    }

    /// Maps every scalar along a field embedding.
    pub fn embed(&self, e: &Embedding) -> Ihoe2Params {
        Ihoe2Params {
            field: e.target().clone(),
            values: self.values.iter().map(|(&k, &v)| (k, e.apply(v))).collect(),
        }
    }

    pub fn to_repr(&self) -> Ihoe2Repr {
        let f = &self.field;
        let mut r = Ihoe2Repr {
            p: f.p(),
            m: f.m(),
            d: Vec::new(),
            b: Vec::new(),
            c: Vec::new(),
        };
        for (k, v) in self.support() {
            let v = f.coeff_repr(v);
            match k {
                Param::D(s) => r.d.push((s, v)),
                Param::B(s) => r.b.push((s, v)),
                Param::C(s, t) => r.c.push((s, t, v)),
            }
        }
        r
    }

    pub fn from_repr(repr: &Ihoe2Repr) -> Result<Ihoe2Params> {
        let f = FieldCtx::new(repr.p, repr.m)?;
        Ihoe2Params::from_repr_in(&f, repr)
    }

    pub fn from_repr_in(f: &Field, repr: &Ihoe2Repr) -> Result<Ihoe2Params> {
        if repr.p != f.p() || repr.m != f.m() {
            return Err(Error::FieldMismatch);
        }
        let mut out = Ihoe2Params::zero(f);
        let mut put = |k: Param, v: &CoeffRepr| -> Result<()> {
            if out.values.contains_key(&k) {
                return Err(Error::InvalidParams(format!("{k:?} given twice")));
            }
            out.set(k, f.parse_coeff(v)?)
        };
        for (s, v) in &repr.d {
            put(Param::D(*s), v)?;
        }
        for (s, v) in &repr.b {
            put(Param::B(*s), v)?;
        }
        for (s, t, v) in &repr.c {
            put(Param::C(*s, *t), v)?;
        }
        Ok(out)
    }

    /// The image parameters under `X_1 ↦ α X_1'`, `X_2 ↦ β X_2' + ...`:
    /// `d'_s = d_s α^{p^s-1} β^{-1}`, `b'_s = b_s α^{p^{s+1}} β^{-1}`,
    /// `c'_{s,t} = c_{s,t} α^{p^s+p^t} β^{-1}`.
    pub fn act(&self, alpha: FieldElt, beta: FieldElt) -> Result<Ihoe2Params> {
        let f = &self.field;
        let beta_inv = f.inv(beta).ok_or(Error::DivisionByZero)?;
        let mut values = BTreeMap::new();
        for (k, v) in self.support() {
            let a = alpha_factor(f, k, alpha)?;
            values.insert(k, f.mul(f.mul(v, a), beta_inv));
        }
        Ok(Ihoe2Params {
            field: f.clone(),
            values,
        })
    }
}

fn alpha_factor(f: &FieldCtx, k: Param, alpha: FieldElt) -> Result<FieldElt> {
    Ok(match k {
        Param::D(s) => f.div(f.frobenius_iter(alpha, s), alpha)?,
        Param::B(s) => f.frobenius_iter(alpha, s + 1),
        Param::C(s, t) => f.mul(f.frobenius_iter(alpha, s), f.frobenius_iter(alpha, t)),
    })
}

fn x1_pow(n: usize, e: u64) -> Result<Mono> {
    let e = i32::try_from(e).map_err(|_| Error::InvalidParams("exponent too large".into()))?;
    let mut m: Mono = smallvec![0; n];
    m[0] = e;
    Ok(m)
}

/// `δ(X_1) = Σ d_s X_1^{p^s}` as an element of `H`.
pub fn delta_x1(params: &Ihoe2Params) -> Result<PbwElement> {
    let f = &params.field;
    let p = params.p() as u64;
    let mut out = PbwElement::zero();
    for (s, v) in params.d_support() {
        out.add_term(f, x1_pow(2, p.pow(s))?, v);
    }
    Ok(out)
}

/// The tail `w = Σ b_s Σ_i λ_i X_1^{p^s i}⊗X_1^{p^s(p-i)} + Σ c_{s,t} (X_1^{p^s}⊗X_1^{p^t} - X_1^{p^t}⊗X_1^{p^s})`.
pub fn tail_w(params: &Ihoe2Params) -> Result<TensorElement> {
    let f = &params.field;
    let p = params.p() as u64;
    let lambdas = lambda_coeffs(params.p());
    let mut w = TensorElement::zero(2, 2);
    for (k, v) in params.support() {
        match k {
            Param::D(_) => {}
            Param::B(s) => {
                let q = p.pow(s);
                for (i, &l) in lambdas.iter().enumerate() {
                    let i = i as u64 + 1;
                    let key = [x1_pow(2, q * i)?, x1_pow(2, q * (p - i))?].concat();
                    w.add_term(f, key.into_iter().collect(), f.mul(v, f.from_int(l as i64)));
                }
            }
            Param::C(s, t) => {
                let (a, b) = (x1_pow(2, p.pow(s))?, x1_pow(2, p.pow(t))?);
                w.add_term(f, [a.clone(), b.clone()].concat().into_iter().collect(), v);
                w.add_term(f, [b, a].concat().into_iter().collect(), f.neg(v));
            }
        }
    }
    Ok(w)
}

/// Default total-degree cap for `H(d, b, c)`: room for products of a few
/// tail terms.
pub fn default_degree_cap(params: &Ihoe2Params) -> Result<u32> {
    let p = params.p() as u64;
    let cap = (p.pow(3)).max(4 * p * params.max_exponent()?);
    u32::try_from(cap).map_err(|_| Error::InvalidParams("support too large".into()))
}

/// The presentation `k[X_1][X_2; Id, δ]` of `H(d, b, c)`.
pub fn presentation(params: &Ihoe2Params, degree_cap: Option<u32>) -> Result<Arc<OrePresentation>> {
    let f = params.field.clone();
    let cap = match degree_cap {
        Some(c) => c,
        None => default_degree_cap(params)?,
    };
    if params.max_exponent()? > cap as u64 {
        return Err(Error::InvalidParams(format!(
            "support needs exponent {} beyond the degree cap {cap}",
            params.max_exponent()?
        )));
    }
    let mut data = OreData::trivial(&f, 2);
    data.delta_images[1][0] = delta_x1(params)?;
    OrePresentation::new(f, data, Some(cap))
}

/// Builds `H(d, b, c)` with primitive `X_1` and `Δ(X_2) = X_2⊗1 + 1⊗X_2 + w`.
pub fn build_h(params: &Ihoe2Params, degree_cap: Option<u32>) -> Result<Arc<HopfStructure>> {
    let base = presentation(params, degree_cap)?;
    let tails = vec![TensorElement::zero(2, 2), tail_w(params)?];
    HopfStructure::from_tails(base, tails)
}

/// `H(d, b, c)` together with its Hopf structure.
#[derive(Clone, Debug)]
pub struct Ihoe2 {
    params: Ihoe2Params,
    hopf: Arc<HopfStructure>,
}

impl Ihoe2 {
    pub fn new(params: Ihoe2Params, degree_cap: Option<u32>) -> Result<Ihoe2> {
        let hopf = build_h(&params, degree_cap)?;
        Ok(Ihoe2 { params, hopf })
    }

    pub fn params(&self) -> &Ihoe2Params {
        &self.params
    }

    pub fn hopf(&self) -> &Arc<HopfStructure> {
        &self.hopf
    }

    pub fn base(&self) -> &Arc<OrePresentation> {
        self.hopf.base()
    }

    pub fn field(&self) -> &Field {
        self.params.field()
    }

    pub fn p(&self) -> u32 {
        self.params.p()
    }

    pub fn x1(&self) -> PbwElement {
        self.base().gen(0)
    }

    pub fn x2(&self) -> PbwElement {
        self.base().gen(1)
    }

    /// The tail `w` of `Δ(X_2)`.
    pub fn tail(&self) -> TensorElement {
        self.hopf.tail(1)
    }

    /// The central element `z = X_2^p - d_0^{p-1} X_2`.
    pub fn z(&self) -> Result<PbwElement> {
        let f = self.field();
        let c = f.pow(self.params.d(0), self.p() as u64 - 1);
        let x2p = self.base().pth_power(&self.x2())?;
        Ok(x2p.sub(f, &self.x2().scale(f, c)))
    }
}

/// Parameters of `K(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KParams {
    pub a: i32,
    pub b: FieldElt,
    pub c: FieldElt,
}

/// Builds `K(a, b, c) = k[X_1^{±1}][X_2; σ, δ]` with `σ(X_1) = c X_1`,
/// `δ(X_1) = b (X_1 - X_1^{a+1})`, grouplike `X_1` and
/// `Δ(X_2) = X_1^a⊗X_2 + X_2⊗1`.
pub fn build_k(field: &Field, params: &KParams, degree_cap: Option<u32>) -> Result<Arc<HopfStructure>> {
    let f = field.clone();
    if params.c.is_zero() {
        return Err(Error::InvalidParams("c must be nonzero".into()));
    }
    let a = params.a;
    let mono = |e1: i32, e2: i32| -> Mono { smallvec![e1, e2] };
    let mut data = OreData::trivial(&f, 2);
    data.laurent_first = true;
    data.sigma_images[1][0] = PbwElement::monomial(mono(1, 0), params.c);
    let mut d = PbwElement::zero();
    d.add_term(&f, mono(1, 0), params.b);
    d.add_term(&f, mono(a + 1, 0), f.neg(params.b));
    data.delta_images[1][0] = d;
    let cap = degree_cap.unwrap_or_else(|| (f.p().pow(3)).max(8 * (a.unsigned_abs() + 2)));
    let base = OrePresentation::new(f.clone(), data, Some(cap))?;
    let one = f.one();
    let pure = |l: Mono, r: Mono| TensorElement::from_monos(&f, &[&l, &r], one);
    let dx1 = pure(mono(1, 0), mono(1, 0));
    let dx2 = pure(mono(a, 0), mono(0, 1)).add(&f, &pure(mono(0, 1), mono(0, 0)));
    let s1 = PbwElement::monomial(mono(-1, 0), one);
    let s2 = PbwElement::monomial(mono(-a, 1), f.neg(one));
    HopfStructure::new(base, vec![dx1, dx2], vec![one, f.zero()], vec![s1, s2])
}

/// Scalars realizing an isomorphism `H(P) → H(P')`, possibly over an
/// extension of the parameter field.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub field: Field,
    pub alpha: FieldElt,
    pub beta: FieldElt,
    /// Degree of `field` over the parameter field (1 when no extension).
    pub extension_degree: u32,
}

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphic(IsoWitness),
    SupportMismatch,
    /// No scalars exist in any extension up to the searched degree.
    NotFound { searched_degree: u32 },
}

impl IsoOutcome {
    /// Scalars found over the parameter field itself.
    pub fn over_base(&self) -> Option<(FieldElt, FieldElt)> {
        match self {
            IsoOutcome::Isomorphic(w) if w.extension_degree == 1 => Some((w.alpha, w.beta)),
            _ => None,
        }
    }
}

fn scan_scalars(p: &Ihoe2Params, q: &Ihoe2Params) -> Result<Option<(FieldElt, FieldElt)>> {
    let f = &p.field;
    let Some((first, x)) = p.support().next() else {
        return Ok(Some((f.one(), f.one())));
    };
    let x_target = q.get(first);
    for alpha in f.nonzero_elements() {
        // β is forced by the first nonzero scalar
        let beta = f.div(f.mul(x, alpha_factor(f, first, alpha)?), x_target)?;
        if &p.act(alpha, beta)? == q {
            return Ok(Some((alpha, beta)));
        }
    }
    Ok(None)
}

/// Searches for `(α, β)` with `P.act(α, β) = P'`, first over the parameter
/// field and then over extensions of total degree up to 6.
pub fn iso_scalars(p: &Ihoe2Params, q: &Ihoe2Params) -> Result<IsoOutcome> {
    if p.field != q.field {
        return Err(Error::FieldMismatch);
    }
    let same_support = p.values.keys().eq(q.values.keys());
    if !same_support {
        return Ok(IsoOutcome::SupportMismatch);
    }
    if let Some((alpha, beta)) = scan_scalars(p, q)? {
        return Ok(IsoOutcome::Isomorphic(IsoWitness {
            field: p.field.clone(),
            alpha,
            beta,
            extension_degree: 1,
        }));
    }
    let m = p.field.m();
    let mut searched = 1;
    for k in 2..=MAX_EXTENSION_DEGREE / m {
        searched = k;
        let (big, e) = extend(&p.field, k)?;
        if let Some((alpha, beta)) = scan_scalars(&p.embed(&e), &q.embed(&e))? {
            return Ok(IsoOutcome::Isomorphic(IsoWitness {
                field: big,
                alpha,
                beta,
                extension_degree: k,
            }));
        }
    }
    Ok(IsoOutcome::NotFound {
        searched_degree: searched,
    })
}

/// Orbit representative: the first nonzero scalar is scaled to 1 and `α`
/// is chosen to make the remaining scalars lexicographically least.
pub fn canonical_form(p: &Ihoe2Params) -> Result<Ihoe2Params> {
    let f = &p.field;
    let Some((first, x)) = p.support().next() else {
        return Ok(p.clone());
    };
    let mut best: Option<(Vec<FieldElt>, Ihoe2Params)> = None;
    for alpha in f.nonzero_elements() {
        let beta = f.mul(x, alpha_factor(f, first, alpha)?);
        let cand = p.act(alpha, beta)?;
        let key: Vec<FieldElt> = cand.values.values().copied().collect();
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, cand));
        }
    }
    Ok(best.expect("nonempty field").1)
}

/// Generator images of `φ(X_1) = α X_1'`, `φ(X_2) = β X_2' + Σ e_s X_1'^{p^s}`.
pub fn map_images(
    f: &FieldCtx,
    alpha: FieldElt,
    beta: FieldElt,
    e: &BTreeMap<u32, FieldElt>,
) -> Result<Vec<PbwElement>> {
    let p = f.p() as u64;
    let x1 = PbwElement::monomial(smallvec![1, 0], alpha);
    let mut x2 = PbwElement::monomial(smallvec![0, 1], beta);
    for (&s, &v) in e {
        let pow = p
            .checked_pow(s)
            .ok_or_else(|| Error::InvalidParams("e index too large".into()))?;
        x2.add_term(f, x1_pow(2, pow)?, v);
    }
    Ok(vec![x1, x2])
}

/// Checks that `φ` above is a Hopf algebra map `H(P) → H(P')`.
pub fn check_hopf_map(
    p: &Ihoe2Params,
    q: &Ihoe2Params,
    alpha: FieldElt,
    beta: FieldElt,
    e: &BTreeMap<u32, FieldElt>,
) -> Result<HopfMapReport> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::InvalidParams("alpha and beta must be nonzero".into()));
    }
    if p.field != q.field {
        return Err(Error::FieldMismatch);
    }
    let e_top = e
        .keys()
        .max()
        .map_or(Ok(1), |&s| (p.p() as u64).checked_pow(s).ok_or(Error::DivisionByZero))?;
    let cap = default_degree_cap(p)?
        .max(default_degree_cap(q)?)
        .max((4 * e_top * p.max_exponent()?.max(q.max_exponent()?)) as u32);
    let src = build_h(p, Some(cap))?;
    let dst = build_h(q, Some(cap))?;
    let images = map_images(&p.field, alpha, beta, e)?;
    check_map(&src, &dst, &images)
}

/// Characters of `H(d, b, c)` over `f`: `χ(X_1) = a` with `Σ d_s a^{p^s} = 0`
/// and `χ(X_2)` arbitrary.
pub fn characters(params: &Ihoe2Params) -> Vec<(FieldElt, FieldElt)> {
    let f = &params.field;
    let roots: Vec<FieldElt> = f
        .elements()
        .filter(|&a| {
            f.sum(params.d_support().map(|(s, d)| f.mul(d, f.frobenius_iter(a, s))))
                .is_zero()
        })
        .collect();
    roots
        .into_iter()
        .flat_map(|a| f.elements().map(move |b| (a, b)))
        .collect()
}

/// Re-expresses parameters over a larger field.
pub fn embed_params(p: &Ihoe2Params, target: &Field) -> Result<Ihoe2Params> {
    Ok(p.embed(&embed(&p.field, target)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Axiom;

    fn binom_exact(n: u128, k: u128) -> u128 {
        (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn lambdas_match_exact_binomials() {
        assert_eq!(lambda_coeffs(2), vec![1]);
        assert_eq!(lambda_coeffs(3), vec![1, 1]);
        assert_eq!(lambda_coeffs(5), vec![1, 2, 2, 1]);
        for p in [7u32, 11, 13, 31] {
            let exact: Vec<u32> = (1..p as u128)
                .map(|i| ((binom_exact(p as u128, i) / p as u128) % p as u128) as u32)
                .collect();
            assert_eq!(lambda_coeffs(p), exact);
        }
    }

    fn params(p: u32, entries: &[(Param, i64)]) -> Ihoe2Params {
        let f = FieldCtx::new(p, 1).unwrap();
        let mut out = Ihoe2Params::zero(&f);
        for &(k, v) in entries {
            out.set(k, f.from_int(v)).unwrap();
        }
        out
    }

    #[test]
    fn tail_shapes() {
        let p = params(2, &[(Param::B(0), 1)]);
        let f = p.field().clone();
        let w = tail_w(&p).unwrap();
        assert_eq!(w, TensorElement::from_monos(&f, &[&[1, 0], &[1, 0]], f.one()));
        let p = params(3, &[(Param::C(0, 1), 1)]);
        let f = p.field().clone();
        let w = tail_w(&p).unwrap();
        let expect = TensorElement::from_monos(&f, &[&[1, 0], &[3, 0]], f.one())
            .sub(&f, &TensorElement::from_monos(&f, &[&[3, 0], &[1, 0]], f.one()));
        assert_eq!(w, expect);
    }

    #[test]
    fn antipode_examples() {
        let p = params(2, &[(Param::B(0), 1)]);
        let h = build_h(&p, None).unwrap();
        let base = h.base();
        let s2 = h.antipode(&base.gen(1)).unwrap();
        assert_eq!(s2, base.gen(1).add(base.field(), &base.mono(&[2, 0])));
        let p = params(5, &[(Param::B(0), 2), (Param::D(0), 1), (Param::C(0, 1), 3)]);
        let h = build_h(&p, None).unwrap();
        let f = h.field().clone();
        assert_eq!(h.antipode(&h.base().gen(1)).unwrap(), h.base().gen(1).neg(&f));
        // both contractions of the tail agree
        let w = tail_w(&p).unwrap();
        assert_eq!(h.convolve_left(&w).unwrap(), h.convolve_right(&w).unwrap());
        assert!(h.convolve_right(&w).unwrap().is_zero());
    }

    #[test]
    fn k_family() {
        let f = FieldCtx::new(2, 1).unwrap();
        let k = build_k(&f, &KParams { a: 1, b: f.one(), c: f.one() }, None).unwrap();
        let base = k.base();
        assert!(!base.is_commutative().unwrap());
        let rel = base.mul(&base.gen(1), &base.gen(0)).unwrap();
        let expect = base
            .mono(&[1, 1])
            .add(&f, &base.mono(&[1, 0]))
            .sub(&f, &base.mono(&[2, 0]));
        assert_eq!(rel, expect);
        let r = k.verify_hopf(4, 20, 1).unwrap();
        assert!(r.all_pass(), "{r:?}");
        let f3 = FieldCtx::new(3, 1).unwrap();
        let triv = build_k(&f3, &KParams { a: 0, b: f3.zero(), c: f3.one() }, None).unwrap();
        assert!(triv.base().is_commutative().unwrap());
        let twisted = build_k(&f3, &KParams { a: 0, b: f3.zero(), c: f3.from_int(2) }, None).unwrap();
        assert!(!twisted.base().is_commutative().unwrap());
        assert!(build_k(&f3, &KParams { a: 0, b: f3.zero(), c: f3.zero() }, None).is_err());
    }

    #[test]
    fn primitive_right_factor_coproduct_is_not_multiplicative() {
        // Δ(X_2) = X_1^a⊗X_2 + 1⊗X_2 fails on the defining relation when a, b ≠ 0
        let f = FieldCtx::new(3, 1).unwrap();
        let good = build_k(&f, &KParams { a: 1, b: f.one(), c: f.from_int(2) }, None).unwrap();
        let one = f.one();
        let dx1 = TensorElement::from_monos(&f, &[&[1, 0], &[1, 0]], one);
        let dx2 = TensorElement::from_monos(&f, &[&[1, 0], &[0, 1]], one)
            .add(&f, &TensorElement::from_monos(&f, &[&[0, 0], &[0, 1]], one));
        let bad = HopfStructure::new(
            good.base().clone(),
            vec![dx1, dx2],
            vec![one, f.zero()],
            vec![good.antipode_image(0).clone(), good.antipode_image(1).clone()],
        )
        .unwrap();
        let r = bad.verify_hopf(2, 2, 0).unwrap();
        assert!(!r.get(Axiom::Multiplicative).unwrap().pass);
    }

    #[test]
    fn iso_examples() {
        let f = FieldCtx::new(3, 1).unwrap();
        let p = params(3, &[(Param::D(0), 1)]);
        let q = params(3, &[(Param::D(0), 2)]);
        let (_, beta) = iso_scalars(&p, &q).unwrap().over_base().unwrap();
        assert_eq!(beta, f.inv(f.from_int(2)).unwrap());
        let (a, b) = iso_scalars(&p, &p).unwrap().over_base().unwrap();
        assert_eq!((a, b), (f.one(), f.one()));
        let r = params(3, &[(Param::D(1), 1)]);
        assert!(matches!(iso_scalars(&p, &r).unwrap(), IsoOutcome::SupportMismatch));
    }

    #[test]
    fn canonical_examples() {
        let p = params(5, &[(Param::D(0), 3)]);
        let c = canonical_form(&p).unwrap();
        assert_eq!(c, params(5, &[(Param::D(0), 1)]));
        let z = params(5, &[]);
        assert_eq!(canonical_form(&z).unwrap(), z);
        let p = params(2, &[(Param::D(0), 1), (Param::B(0), 1)]);
        assert_eq!(canonical_form(&p).unwrap(), p);
        assert_eq!(canonical_form(&canonical_form(&p).unwrap()).unwrap(), canonical_form(&p).unwrap());
    }

    #[test]
    fn identity_and_bad_automorphisms() {
        let p = params(3, &[(Param::D(0), 1), (Param::B(0), 1)]);
        let f = p.field().clone();
        let none = BTreeMap::new();
        assert!(check_hopf_map(&p, &p, f.one(), f.one(), &none).unwrap().pass());
        // β = 2 breaks d_0 = d_0 α^0 β^{-1}
        let r = check_hopf_map(&p, &p, f.one(), f.from_int(2), &none).unwrap();
        assert!(!r.pass());
        assert!(check_hopf_map(&p, &p, f.zero(), f.one(), &none).is_err());
    }

    #[test]
    fn repr_roundtrip() {
        let p = params(3, &[(Param::D(0), 1), (Param::B(1), 2), (Param::C(0, 2), 1)]);
        let r = p.to_repr();
        assert_eq!(Ihoe2Params::from_repr(&r).unwrap(), p);
    }
}
