//! Hopf structures on Ore presentations.
//!
//! A structure is given by the images `Δ(X_i)`, `ε(X_i)` and `S(X_i)`; all
//! three are extended multiplicatively (anti-multiplicatively for `S`) over
//! the ordered monomial basis.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElt};
use crate::linalg::Matrix;
use crate::orealg::{
    total_degree, unit_mono, Algebra, Mono, OrePresentation, PbwElement, ScalarAlgebra, TermRepr,
};
use crate::tensoralg::{TensorAlgebra, TensorElement, TensorKey, TensorTermRepr};

pub struct HopfStructure {
    base: Arc<OrePresentation>,
    square: TensorAlgebra,
    coproducts: Vec<TensorElement>,
    counit: Vec<FieldElt>,
    antipodes: Vec<PbwElement>,
    /// `Δ`, `ε`, `S` of `X_1^{-1}` when the first generator is invertible.
    first_inverse: Option<(TensorElement, FieldElt, PbwElement)>,
    delta_cache: RwLock<HashMap<Mono, TensorElement>>,
    antipode_cache: RwLock<HashMap<Mono, PbwElement>>,
}

impl std::fmt::Debug for HopfStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfStructure").field("base", &self.base).finish()
    }
}

/// Serialized Hopf data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfRepr {
    pub coproduct_images: Vec<Vec<TensorTermRepr>>,
    pub counit: Vec<Vec<u32>>,
    pub antipode_images: Vec<Vec<TermRepr>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Multiplicative,
    Coassociative,
    Counit,
    Antipode,
}

/// An element exhibiting a failed identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub context: String,
    pub element: WitnessElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessElement {
    Pbw(Vec<TermRepr>),
    Tensor(Vec<TensorTermRepr>),
    Scalar(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfReport {
    pub axioms: Vec<AxiomResult>,
    pub samples: usize,
    pub degree_cap: u32,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.axiom == axiom)
    }
}

/// A character `χ: H → k`, given by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<FieldElt>,
}

impl Character {
    pub fn values(&self) -> &[FieldElt] {
        &self.values
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// A winding endomorphism and its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Winding {
    pub images: Vec<PbwElement>,
    /// `None` when the order exceeds the cap.
    pub order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfMapReport {
    pub algebra_map: bool,
    pub coalgebra_map: bool,
    pub counit_preserved: bool,
}

impl HopfMapReport {
    pub fn pass(&self) -> bool {
        self.algebra_map && self.coalgebra_map && self.counit_preserved
    }
}

fn cached<V: Clone>(c: &RwLock<HashMap<Mono, V>>, k: &Mono) -> Option<V> {
    c.read().ok().and_then(|m| m.get(k).cloned())
}

fn store<V>(c: &RwLock<HashMap<Mono, V>>, k: Mono, v: V) {
    if let Ok(mut m) = c.write() {
        m.insert(k, v);
    }
}

impl HopfStructure {
    /// Attaches coproduct, counit and antipode images to `base`.
    pub fn new(
        base: Arc<OrePresentation>,
        coproducts: Vec<TensorElement>,
        counit: Vec<FieldElt>,
        antipodes: Vec<PbwElement>,
    ) -> Result<Arc<Self>> {
        let n = base.n();
        let f = base.field().clone();
        if coproducts.len() != n || counit.len() != n || antipodes.len() != n {
            return Err(Error::InvalidHopf(format!("expected data for {n} generators")));
        }
        for (i, d) in coproducts.iter().enumerate() {
            if d.arity() != 2 || d.n() != n {
                return Err(Error::InvalidHopf(format!("coproduct of X{} is not in H⊗H", i + 1)));
            }
            let too_high = d
                .terms()
                .any(|(k, _)| k.iter().enumerate().any(|(pos, &e)| e != 0 && pos % n > i));
            if too_high {
                return Err(Error::InvalidHopf(format!(
                    "coproduct of X{} involves later generators",
                    i + 1
                )));
            }
            let neg = d
                .terms()
                .any(|(k, _)| k.iter().enumerate().any(|(pos, &e)| e < 0 && (pos % n != 0 || !base.laurent_first())));
            if neg {
                return Err(Error::InvalidHopf(format!("coproduct of X{} has negative exponents", i + 1)));
            }
        }
        for (i, s) in antipodes.iter().enumerate() {
            if s.max_generator().is_some_and(|g| g > i) {
                return Err(Error::InvalidHopf(format!(
                    "antipode of X{} involves later generators",
                    i + 1
                )));
            }
        }
        let first_inverse = if base.laurent_first() {
            let d = &coproducts[0];
            if d.len() != 1 {
                return Err(Error::InvalidHopf("X1 must be a unit in H⊗H (single term)".into()));
            }
            let (k, c) = d.terms().next().expect("one term");
            let inv_key: TensorKey = k.iter().map(|e| -e).collect();
            let mut dinv = TensorElement::zero(2, n);
            dinv.add_term(&f, inv_key, f.inv(c).ok_or(Error::DivisionByZero)?);
            let einv = f
                .inv(counit[0])
                .ok_or_else(|| Error::InvalidHopf("counit of a unit must be nonzero".into()))?;
            let sinv = base
                .unit_inverse(&antipodes[0])
                .ok_or_else(|| Error::InvalidHopf("antipode of X1 must be a unit monomial".into()))?;
            Some((dinv, einv, sinv))
        } else {
            None
        };
        Ok(Arc::new(HopfStructure {
            square: TensorAlgebra::new(base.clone(), 2),
            base,
            coproducts,
            counit,
            antipodes,
            first_inverse,
            delta_cache: RwLock::new(HashMap::new()),
            antipode_cache: RwLock::new(HashMap::new()),
        }))
    }

    /// `Δ(X_i) = X_i⊗1 + 1⊗X_i + w_i`, `ε(X_i) = 0`, and
    /// `S(X_i) = -X_i - m(Id⊗S)(w_i)` computed generator by generator.
    pub fn from_tails(base: Arc<OrePresentation>, tails: Vec<TensorElement>) -> Result<Arc<Self>> {
        let n = base.n();
        let f = base.field().clone();
        if tails.len() != n {
            return Err(Error::InvalidHopf(format!("expected {n} tails")));
        }
        if base.laurent_first() {
            return Err(Error::InvalidHopf("primitive-shaped tails need a polynomial base".into()));
        }
        let one = base.one();
        let mut coproducts = Vec::with_capacity(n);
        let mut antipodes: Vec<PbwElement> = Vec::with_capacity(n);
        let square = TensorAlgebra::new(base.clone(), 2);
        for (i, w) in tails.iter().enumerate() {
            if w.arity() != 2 || w.n() != n {
                return Err(Error::InvalidHopf(format!("tail of X{} is not in H⊗H", i + 1)));
            }
            let bad = w
                .terms()
                .any(|(k, _)| k.iter().enumerate().any(|(pos, &e)| e < 0 || (e != 0 && pos % n >= i)));
            if bad {
                return Err(Error::InvalidHopf(format!(
                    "tail of X{} must use only earlier generators",
                    i + 1
                )));
            }
            let x = base.gen(i);
            let d = square
                .pure(&[&x, &one])
                .add(&f, &square.pure(&[&one, &x]))
                .add(&f, w);
            coproducts.push(d);
            // m(Id⊗S)(w) with S known on earlier generators
            let mut conv = PbwElement::zero();
            for (k, c) in w.terms() {
                let a = PbwElement::monomial(k[..n].iter().copied().collect(), f.one());
                let b = PbwElement::monomial(k[n..].iter().copied().collect(), f.one());
                let sb = base.substitute(base.as_ref(), &padded(&antipodes, n, &base), None, &b, true)?;
                conv.add_scaled(&f, &base.mul(&a, &sb)?, c);
            }
            antipodes.push(x.neg(&f).sub(&f, &conv));
        }
        let counit = vec![f.zero(); n];
        HopfStructure::new(base, coproducts, counit, antipodes)
    }

    pub fn from_repr(base: Arc<OrePresentation>, repr: &HopfRepr) -> Result<Arc<Self>> {
        let f = base.field().clone();
        let n = base.n();
        let coproducts = repr
            .coproduct_images
            .iter()
            .map(|t| TensorElement::from_repr(&f, 2, n, t))
            .collect::<Result<Vec<_>>>()?;
        let counit = repr
            .counit
            .iter()
            .map(|c| f.from_coords(c))
            .collect::<Result<Vec<_>>>()?;
        let antipodes = repr
            .antipode_images
            .iter()
            .map(|t| PbwElement::from_repr(&f, n, t))
            .collect::<Result<Vec<_>>>()?;
        HopfStructure::new(base, coproducts, counit, antipodes)
    }

    pub fn to_repr(&self) -> HopfRepr {
        let f = self.field();
        HopfRepr {
            coproduct_images: self.coproducts.iter().map(|d| d.to_repr(f)).collect(),
            counit: self.counit.iter().map(|&c| f.coords(c)).collect(),
            antipode_images: self.antipodes.iter().map(|s| s.to_repr(f)).collect(),
        }
    }

    pub fn base(&self) -> &Arc<OrePresentation> {
        &self.base
    }

    pub fn field(&self) -> &Field {
        self.base.field()
    }

    pub fn square(&self) -> &TensorAlgebra {
        &self.square
    }

    pub fn coproduct_image(&self, i: usize) -> &TensorElement {
        &self.coproducts[i]
    }

    pub fn counit_value(&self, i: usize) -> FieldElt {
        self.counit[i]
    }

    pub fn antipode_image(&self, i: usize) -> &PbwElement {
        &self.antipodes[i]
    }

    /// `w_i = Δ(X_i) - X_i⊗1 - 1⊗X_i`.
    pub fn tail(&self, i: usize) -> TensorElement {
        let f = self.field();
        let x = self.base.gen(i);
        let one = self.base.one();
        self.coproducts[i]
            .sub(f, &self.square.pure(&[&x, &one]))
            .sub(f, &self.square.pure(&[&one, &x]))
    }

    fn coproduct_mono(&self, m: &Mono) -> Result<TensorElement> {
        let n = self.base.n();
        let Some(h) = m.iter().rposition(|&e| e != 0) else {
            return Ok(self.square.one());
        };
        if let Some(v) = cached(&self.delta_cache, m) {
            return Ok(v);
        }
        let single = m.iter().filter(|&&e| e != 0).count() == 1;
        let out = if single {
            let e = m[h];
            let mut prev = m.clone();
            let step = if e > 0 {
                prev[h] -= 1;
                self.coproducts[h].clone()
            } else {
                prev[h] += 1;
                self.first_inverse
                    .as_ref()
                    .map(|(d, _, _)| d.clone())
                    .ok_or_else(|| Error::NotInvertible(format!("X{}", h + 1)))?
            };
            self.square.tensor_mul(&self.coproduct_mono(&prev)?, &step)?
        } else {
            let mut low = m.clone();
            low[h] = 0;
            let mut top = unit_mono(n);
            top[h] = m[h];
            self.square
                .tensor_mul(&self.coproduct_mono(&low)?, &self.coproduct_mono(&top)?)?
        };
        store(&self.delta_cache, m.clone(), out.clone());
        Ok(out)
    }

    pub fn coproduct(&self, h: &PbwElement) -> Result<TensorElement> {
        let f = self.field();
        let mut out = self.square.zero();
        for (m, c) in h.terms() {
            out.add_scaled(f, &self.coproduct_mono(m)?, c);
        }
        Ok(out)
    }

    pub fn counit_mono(&self, m: &[i32]) -> Result<FieldElt> {
        let f = self.field();
        let mut acc = f.one();
        for (j, &e) in m.iter().enumerate() {
            if e != 0 {
                acc = f.mul(acc, f.pow_signed(self.counit[j], e as i64)?);
            }
        }
        Ok(acc)
    }

    pub fn counit(&self, h: &PbwElement) -> Result<FieldElt> {
        let f = self.field();
        let mut acc = f.zero();
        for (m, c) in h.terms() {
            acc = f.add(acc, f.mul(c, self.counit_mono(m)?));
        }
        Ok(acc)
    }

    fn antipode_mono(&self, m: &Mono) -> Result<PbwElement> {
        if let Some(v) = cached(&self.antipode_cache, m) {
            return Ok(v);
        }
        let h = PbwElement::monomial(m.clone(), self.field().one());
        let inv = self.first_inverse.as_ref().map(|(_, _, s)| s);
        let out = self
            .base
            .substitute(self.base.as_ref(), &self.antipodes, inv, &h, true)?;
        store(&self.antipode_cache, m.clone(), out.clone());
        Ok(out)
    }

    pub fn antipode(&self, h: &PbwElement) -> Result<PbwElement> {
        let f = self.field();
        let mut out = PbwElement::zero();
        for (m, c) in h.terms() {
            out.add_scaled(f, &self.antipode_mono(m)?, c);
        }
        Ok(out)
    }

    /// `m(S⊗Id)(t)`.
    pub fn convolve_left(&self, t: &TensorElement) -> Result<PbwElement> {
        let s = t.map_factor(self.field(), 0, |m| self.antipode_mono(m))?;
        self.square.contract_m(&s)
    }

    /// `m(Id⊗S)(t)`.
    pub fn convolve_right(&self, t: &TensorElement) -> Result<PbwElement> {
        let s = t.map_factor(self.field(), 1, |m| self.antipode_mono(m))?;
        self.square.contract_m(&s)
    }

    fn pbw_witness(&self, context: String, e: &PbwElement) -> Witness {
        Witness {
            context,
            element: WitnessElement::Pbw(e.to_repr(self.field())),
        }
    }

    fn tensor_witness(&self, context: String, e: &TensorElement) -> Witness {
        Witness {
            context,
            element: WitnessElement::Tensor(e.to_repr(self.field())),
        }
    }

    fn check_multiplicative(&self) -> Result<Option<Witness>> {
        let inv = self.first_inverse.as_ref().map(|(d, _, _)| d);
        let defect = self
            .base
            .relation_defect(&self.square, &self.coproducts, inv, false)?;
        Ok(defect.map(|(l, j, d)| {
            self.tensor_witness(format!("coproduct on the relation of X{} and X{}", l + 1, j + 1), &d)
        }))
    }

    fn check_coassociative(&self) -> Result<Option<Witness>> {
        let f = self.field();
        for (i, d) in self.coproducts.iter().enumerate() {
            let left = d.expand_factor(f, 0, |m| self.coproduct_mono(m))?;
            let right = d.expand_factor(f, 1, |m| self.coproduct_mono(m))?;
            let diff = left.sub(f, &right);
            if !diff.is_zero() {
                return Ok(Some(self.tensor_witness(format!("coassociativity on X{}", i + 1), &diff)));
            }
        }
        Ok(None)
    }

    fn check_counit(&self) -> Result<Option<Witness>> {
        let f = self.field();
        for (i, d) in self.coproducts.iter().enumerate() {
            let x = self.base.gen(i);
            for (side, k) in [("(ε⊗Id)", 0), ("(Id⊗ε)", 1)] {
                let r = d
                    .contract_factor(f, k, |m| self.counit_mono(m))?
                    .into_element(f);
                let diff = r.sub(f, &x);
                if !diff.is_zero() {
                    return Ok(Some(self.pbw_witness(format!("{side}Δ(X{}) - X{}", i + 1, i + 1), &diff)));
                }
            }
        }
        let scalars = ScalarAlgebra(self.field().clone());
        let inv = self.first_inverse.as_ref().map(|(_, e, _)| e);
        if let Some((l, j, d)) = self.base.relation_defect(&scalars, &self.counit, inv, false)? {
            return Ok(Some(Witness {
                context: format!("counit on the relation of X{} and X{}", l + 1, j + 1),
                element: WitnessElement::Scalar(f.coords(d)),
            }));
        }
        Ok(None)
    }

    fn antipode_defect(&self, m: &Mono) -> Result<Option<Witness>> {
        let f = self.field();
        let h = PbwElement::monomial(m.clone(), f.one());
        let d = self.coproduct(&h)?;
        let unit = self.base.one().scale(f, self.counit(&h)?);
        for (side, r) in [("m(S⊗Id)Δ", self.convolve_left(&d)?), ("m(Id⊗S)Δ", self.convolve_right(&d)?)] {
            let diff = r.sub(f, &unit);
            if !diff.is_zero() {
                return Ok(Some(self.pbw_witness(
                    format!("{side} on {}", crate::orealg::format_mono(m)),
                    &diff,
                )));
            }
        }
        Ok(None)
    }

    fn random_monomial(&self, rng: &mut impl Rng, cap: u32) -> Mono {
        let n = self.base.n();
        let mut m = unit_mono(n);
        let total = rng.gen_range(0..=cap);
        for _ in 0..total {
            m[rng.gen_range(0..n)] += 1;
        }
        if self.base.laurent_first() && rng.gen_bool(0.5) {
            m[0] = -m[0];
        }
        m
    }

    fn check_antipode(&self, degree_cap: u32, samples: usize, seed: u64) -> Result<Option<Witness>> {
        let n = self.base.n();
        let inv = self.first_inverse.as_ref().map(|(_, _, s)| s);
        if let Some((l, j, d)) = self.base.relation_defect(self.base.as_ref(), &self.antipodes, inv, true)? {
            return Ok(Some(self.pbw_witness(
                format!("antipode on the relation of X{} and X{}", l + 1, j + 1),
                &d,
            )));
        }
        for i in 0..n {
            let mut m = unit_mono(n);
            m[i] = 1;
            if let Some(w) = self.antipode_defect(&m)? {
                return Ok(Some(w));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let m = self.random_monomial(&mut rng, degree_cap);
            if let Some(w) = self.antipode_defect(&m)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// Checks the four Hopf axioms. Computational limits (degree overflow)
    /// are errors; failed identities are report entries.
    pub fn verify_hopf(&self, degree_cap: u32, samples: usize, seed: u64) -> Result<HopfReport> {
        let entry = |axiom, w: Option<Witness>| AxiomResult {
            axiom,
            pass: w.is_none(),
            witness: w,
        };
        let axioms = vec![
            entry(Axiom::Multiplicative, self.check_multiplicative()?),
            entry(Axiom::Coassociative, self.check_coassociative()?),
            entry(Axiom::Counit, self.check_counit()?),
            entry(Axiom::Antipode, self.check_antipode(degree_cap, samples, seed)?),
        ];
        Ok(HopfReport {
            axioms,
            samples,
            degree_cap,
        })
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coproducts.iter().all(|d| &d.flip() == d)
    }

    /// `S(S(X_i)) = X_i` for every generator.
    pub fn antipode_squared_is_identity(&self) -> Result<bool> {
        for i in 0..self.base.n() {
            let s2 = self.antipode(&self.antipode(&self.base.gen(i))?)?;
            if s2 != self.base.gen(i) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A basis of the primitive elements spanned by monomials of total
    /// degree at most `cap` (non-negative exponents).
    pub fn primitives_up_to(&self, cap: u32) -> Result<Vec<PbwElement>> {
        if cap < 1 {
            return Err(Error::InvalidParams("degree cap must be at least 1".into()));
        }
        let f = self.field();
        let n = self.base.n();
        let monos = monomials_up_to(n, cap);
        let one = self.base.one();
        let mut cols = Vec::with_capacity(monos.len());
        let mut keys = BTreeSet::new();
        for m in &monos {
            let x = PbwElement::monomial(m.clone(), f.one());
            let d = self
                .coproduct(&x)?
                .sub(f, &self.square.pure(&[&x, &one]))
                .sub(f, &self.square.pure(&[&one, &x]));
            keys.extend(d.terms().map(|(k, _)| k.clone()));
            cols.push(d);
        }
        let keys: Vec<TensorKey> = keys.into_iter().collect();
        let index: HashMap<&TensorKey, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut mat = Matrix::zeros(keys.len().max(1), monos.len());
        for (c, d) in cols.iter().enumerate() {
            for (k, v) in d.terms() {
                mat.set(index[k], c, v);
            }
        }
        Ok(mat
            .kernel(f)
            .into_iter()
            .map(|v| {
                let mut e = PbwElement::zero();
                for (m, c) in monos.iter().zip(v) {
                    e.add_term(f, m.clone(), c);
                }
                e
            })
            .collect())
    }

    /// Validates a character against the defining relations.
    pub fn character(&self, values: Vec<FieldElt>) -> Result<Character> {
        let n = self.base.n();
        if values.len() != n {
            return Err(Error::InvalidCharacter(format!("expected {n} values")));
        }
        let f = self.field();
        let inv = if self.base.laurent_first() {
            Some(f.inv(values[0]).ok_or_else(|| {
                Error::InvalidCharacter("X1 is a unit and cannot map to 0".into())
            })?)
        } else {
            None
        };
        let scalars = ScalarAlgebra(f.clone());
        if let Some((l, j, _)) = self.base.relation_defect(&scalars, &values, inv.as_ref(), false)? {
            return Err(Error::InvalidCharacter(format!(
                "relation of X{} and X{} is not respected",
                l + 1,
                j + 1
            )));
        }
        Ok(Character { values })
    }

    pub fn counit_character(&self) -> Character {
        Character {
            values: self.counit.clone(),
        }
    }

    fn character_on_mono(&self, chi: &Character, m: &[i32]) -> Result<FieldElt> {
        let f = self.field();
        let mut acc = f.one();
        for (j, &e) in m.iter().enumerate() {
            if e != 0 {
                acc = f.mul(acc, f.pow_signed(chi.values[j], e as i64)?);
            }
        }
        Ok(acc)
    }

    /// `Ξ^l_χ(h) = χ(h_1) h_2` or `Ξ^r_χ(h) = h_1 χ(h_2)`.
    pub fn apply_winding(&self, chi: &Character, side: Side, h: &PbwElement) -> Result<PbwElement> {
        let f = self.field();
        let k = match side {
            Side::Left => 0,
            Side::Right => 1,
        };
        Ok(self
            .coproduct(h)?
            .contract_factor(f, k, |m| self.character_on_mono(chi, m))?
            .into_element(f))
    }

    /// Generator images of the winding map and its order up to `cap`.
    pub fn winding(&self, chi: &Character, side: Side, cap: u64) -> Result<Winding> {
        let n = self.base.n();
        let gens: Vec<PbwElement> = (0..n).map(|i| self.base.gen(i)).collect();
        let images = gens
            .iter()
            .map(|x| self.apply_winding(chi, side, x))
            .collect::<Result<Vec<_>>>()?;
        let mut cur = images.clone();
        let mut order = None;
        for k in 1..=cap {
            if cur == gens {
                order = Some(k);
                break;
            }
            cur = cur
                .iter()
                .map(|x| self.apply_winding(chi, side, x))
                .collect::<Result<Vec<_>>>()?;
        }
        Ok(Winding { images, order })
    }

    /// Checks that generator images define an algebra endomorphism.
    pub fn is_endomorphism(&self, images: &[PbwElement]) -> Result<bool> {
        let inv = if self.base.laurent_first() {
            match self.base.unit_inverse(&images[0]) {
                Some(x) => Some(x),
                None => return Ok(false),
            }
        } else {
            None
        };
        Ok(self
            .base
            .relation_defect(self.base.as_ref(), images, inv.as_ref(), false)?
            .is_none())
    }
}

fn padded(known: &[PbwElement], n: usize, base: &OrePresentation) -> Vec<PbwElement> {
    let mut v = known.to_vec();
    while v.len() < n {
        v.push(base.gen(v.len()));
    }
    v
}

/// All monomials with non-negative exponents and total degree at most `cap`,
/// in increasing order.
pub fn monomials_up_to(n: usize, cap: u32) -> Vec<Mono> {
    let mut out = vec![unit_mono(n)];
    for _ in 0..cap {
        let mut next = BTreeSet::new();
        for m in &out {
            for i in 0..n {
                let mut x = m.clone();
                x[i] += 1;
                next.insert(x);
            }
        }
        let mut all: BTreeSet<Mono> = out.into_iter().collect();
        all.extend(next);
        out = all.into_iter().collect();
    }
    out.retain(|m| total_degree(m) <= cap as u64);
    out
}

/// Checks that generator images `images` (in `dst`) define a Hopf algebra map
/// `src -> dst`.
pub fn check_hopf_map(src: &HopfStructure, dst: &HopfStructure, images: &[PbwElement]) -> Result<HopfMapReport> {
    let n = src.base.n();
    if images.len() != n {
        return Err(Error::InvalidParams(format!("expected {n} generator images")));
    }
    if src.base.laurent_first() {
        return Err(Error::Unsupported("Hopf maps out of a Laurent base".into()));
    }
    let f = dst.field();
    let phi = |m: &Mono| {
        src.base.substitute(
            dst.base.as_ref(),
            images,
            None,
            &PbwElement::monomial(m.clone(), f.one()),
            false,
        )
    };
    let algebra_map = src
        .base
        .relation_defect(dst.base.as_ref(), images, None, false)?
        .is_none();
    let mut coalgebra_map = true;
    let mut counit_preserved = true;
    for (i, img) in images.iter().enumerate() {
        let lhs = src.coproducts[i]
            .map_factor(f, 0, phi)?
            .map_factor(f, 1, phi)?;
        let rhs = dst.coproduct(img)?;
        if lhs != rhs {
            coalgebra_map = false;
        }
        if dst.counit(img)? != src.counit[i] {
            counit_preserved = false;
        }
    }
    Ok(HopfMapReport {
        algebra_map,
        coalgebra_map,
        counit_preserved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use crate::orealg::{generator, OreData};

    fn polynomial_bialgebra(p: u32, n: usize) -> Arc<HopfStructure> {
        let f = FieldCtx::new(p, 1).unwrap();
        let base = OrePresentation::new(f.clone(), OreData::trivial(&f, n), Some(64)).unwrap();
        let tails = vec![TensorElement::zero(2, n); n];
        HopfStructure::from_tails(base, tails).unwrap()
    }

    #[test]
    fn primitives_of_polynomial_ring() {
        let h = polynomial_bialgebra(2, 2);
        let prims = h.primitives_up_to(4).unwrap();
        assert_eq!(prims.len(), 6);
        for x in &prims {
            assert_eq!(x.len(), 1);
            let (m, _) = x.terms().next().unwrap();
            let d = total_degree(m);
            assert!(matches!(d, 1 | 2 | 4));
            assert_eq!(m.iter().filter(|&&e| e != 0).count(), 1);
        }
        let k = polynomial_bialgebra(3, 1);
        assert_eq!(k.primitives_up_to(3).unwrap().len(), 2);
        assert!(k.primitives_up_to(0).is_err());
    }

    #[test]
    fn trivial_structure_verifies() {
        let h = polynomial_bialgebra(3, 2);
        let r = h.verify_hopf(6, 10, 0).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert!(h.is_cocommutative());
        assert!(h.antipode_squared_is_identity().unwrap());
    }

    #[test]
    fn tampered_tail_breaks_counit() {
        let f = FieldCtx::new(3, 1).unwrap();
        let base = OrePresentation::new(f.clone(), OreData::trivial(&f, 2), Some(64)).unwrap();
        let x1 = generator(&f, 2, 0);
        let one = base.one();
        let w = TensorElement::pure(&f, &[&x1, &one], 2);
        let h = HopfStructure::from_tails(base, vec![TensorElement::zero(2, 2), w]).unwrap();
        let r = h.verify_hopf(4, 5, 0).unwrap();
        assert!(!r.get(Axiom::Counit).unwrap().pass);
    }

    #[test]
    fn counit_winding_is_identity() {
        let h = polynomial_bialgebra(2, 2);
        let w = h.winding(&h.counit_character(), Side::Left, 8).unwrap();
        assert_eq!(w.order, Some(1));
        let chi = h.character(vec![f1(&h), f1(&h)]).unwrap();
        let w = h.winding(&chi, Side::Right, 8).unwrap();
        assert_eq!(w.order, Some(2));
    }

    fn f1(h: &HopfStructure) -> FieldElt {
        h.field().one()
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_up_to(2, 2).len(), 6);
        assert_eq!(monomials_up_to(1, 5).len(), 6);
    }
}
