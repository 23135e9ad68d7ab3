//! Finite-dimensional quotients of `H(d, b, c)`: the central fibers
//! `H_{α,β}`, their simple modules, and the restricted Hopf quotients
//! `H / C(H)_+ H`.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::center::{hopf_center, CenterVerdict};
use crate::error::{Error, Result};
use crate::gf::{embed, extend, CoeffRepr, Embedding, Field, FieldCtx, FieldElt, FieldSpec};
use crate::ihoe2::{lambda_coeffs, Ihoe2, Ihoe2Params, Param};
use crate::linalg::{rank_of_vectors, Matrix, MatrixRepr};
use crate::orealg::{Algebra, Mono, PbwElement};
use crate::tensoralg::TensorElement;

/// An associative unital algebra given by structure constants on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    field: Field,
    labels: Vec<Mono>,
    index: HashMap<Mono, usize>,
    /// `table[i][j]` is `b_i b_j` as a sparse combination.
    table: Vec<Vec<Vec<(usize, FieldElt)>>>,
    unit: usize,
}

/// Serialized structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinDimRepr {
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<Vec<i32>>,
    pub unit: usize,
    /// `(i, j, k, c)`: the coefficient of `b_k` in `b_i b_j`.
    pub structure: Vec<(usize, usize, usize, CoeffRepr)>,
}

impl FinDimAlgebra {
    /// Builds the table from a product oracle on basis indices.
    pub fn from_products(
        field: &Field,
        labels: Vec<Mono>,
        unit: usize,
        mut product: impl FnMut(usize, usize) -> Result<Vec<FieldElt>>,
    ) -> Result<FinDimAlgebra> {
        let dim = labels.len();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut table = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                let v = product(i, j)?;
                row.push(
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                );
            }
            table.push(row);
        }
        Ok(FinDimAlgebra {
            field: field.clone(),
            labels,
            index,
            table,
            unit,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Mono] {
        &self.labels
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn label_index(&self, label: &[i32]) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn basis(&self, i: usize) -> Vec<FieldElt> {
        let mut v = vec![FieldElt::ZERO; self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, FieldElt)] {
        &self.table[i][j]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on every triple when the
    /// dimension is at most `exhaustive_up_to`, else on `samples` random triples.
    pub fn check_associativity(&self, exhaustive_up_to: usize, samples: usize, seed: u64) -> Result<bool> {
        let n = self.dim();
        let triple = |i: usize, j: usize, k: usize| -> Result<bool> {
            let (a, b, c) = (self.basis(i), self.basis(j), self.basis(k));
            Ok(self.mul(&self.mul(&a, &b)?, &c)? == self.mul(&a, &self.mul(&b, &c)?)?)
        };
        if n <= exhaustive_up_to {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !triple(i, j, k)? {
                            return Ok(false);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                if !triple(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn check_unit(&self) -> bool {
        let one = self.basis(self.unit);
        (0..self.dim()).all(|i| {
            let b = self.basis(i);
            self.mul(&one, &b).ok() == Some(b.clone()) && self.mul(&b, &one).ok() == Some(b)
        })
    }

    /// The same algebra with scalars extended along `e`.
    pub fn embed(&self, e: &Embedding) -> FinDimAlgebra {
        FinDimAlgebra {
            field: e.target().clone(),
            labels: self.labels.clone(),
            index: self.index.clone(),
            table: self
                .table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| v.iter().map(|&(k, c)| (k, e.apply(c))).collect())
                        .collect()
                })
                .collect(),
            unit: self.unit,
        }
    }

    pub fn to_repr(&self) -> FinDimRepr {
        let f = &self.field;
        let mut structure = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for &(k, c) in v {
                    structure.push((i, j, k, f.coeff_repr(c)));
                }
            }
        }
        FinDimRepr {
            field: f.spec(),
            dim: self.dim(),
            labels: self.labels.iter().map(|l| l.to_vec()).collect(),
            unit: self.unit,
            structure,
        }
    }

    pub fn from_repr(repr: &FinDimRepr) -> Result<FinDimAlgebra> {
        let f = FieldCtx::from_spec(&repr.field)?;
        if repr.labels.len() != repr.dim || repr.unit >= repr.dim {
            return Err(Error::InvalidPresentation("dimension mismatch".into()));
        }
        let mut dense = vec![vec![vec![FieldElt::ZERO; repr.dim]; repr.dim]; repr.dim];
        for (i, j, k, c) in &repr.structure {
            if *i >= repr.dim || *j >= repr.dim || *k >= repr.dim {
                return Err(Error::InvalidPresentation("structure index out of range".into()));
            }
            dense[*i][*j][*k] = f.parse_coeff(c)?;
        }
        let labels = repr.labels.iter().map(|l| l.iter().copied().collect()).collect();
        FinDimAlgebra::from_products(&f, labels, repr.unit, |i, j| Ok(dense[i][j].clone()))
    }
}

impl Algebra for FinDimAlgebra {
    type Elem = Vec<FieldElt>;

    fn field(&self) -> &Field {
        &self.field
    }

    fn zero(&self) -> Vec<FieldElt> {
        vec![FieldElt::ZERO; self.dim()]
    }

    fn one(&self) -> Vec<FieldElt> {
        self.basis(self.unit)
    }

    fn add(&self, a: &Vec<FieldElt>, b: &Vec<FieldElt>) -> Vec<FieldElt> {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    fn scale(&self, a: &Vec<FieldElt>, c: FieldElt) -> Vec<FieldElt> {
        a.iter().map(|&x| self.field.mul(x, c)).collect()
    }

    fn mul(&self, a: &Vec<FieldElt>, b: &Vec<FieldElt>) -> Result<Vec<FieldElt>> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, &x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, &y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = f.mul(x, y);
                for &(k, c) in &self.table[i][j] {
                    out[k] = f.add(out[k], f.mul(xy, c));
                }
            }
        }
        Ok(out)
    }

    fn is_zero(&self, a: &Vec<FieldElt>) -> bool {
        a.iter().all(|x| x.is_zero())
    }
}

/// Sparse elements of `A ⊗ A`.
pub type SquareElt = BTreeMap<(usize, usize), FieldElt>;

/// The tensor square of a finite-dimensional algebra.
pub struct Square<'a>(pub &'a FinDimAlgebra);

impl Square<'_> {
    pub fn pure(&self, a: &[FieldElt], b: &[FieldElt]) -> SquareElt {
        let f = &self.0.field;
        let mut out = SquareElt::new();
        for (i, &x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, &y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out.insert((i, j), f.mul(x, y));
            }
        }
        out
    }

    pub fn flip(&self, t: &SquareElt) -> SquareElt {
        t.iter().map(|(&(i, j), &c)| ((j, i), c)).collect()
    }

    /// `v⊗1 + 1⊗v`.
    pub fn primitive(&self, v: &[FieldElt]) -> SquareElt {
        let one = self.0.one();
        self.add(&self.pure(v, &one), &self.pure(&one, v))
    }
}

fn add_into(f: &FieldCtx, t: &mut SquareElt, key: (usize, usize), c: FieldElt) {
    let e = t.entry(key).or_insert(FieldElt::ZERO);
    *e = f.add(*e, c);
    if e.is_zero() {
        t.remove(&key);
    }
}

impl Algebra for Square<'_> {
    type Elem = SquareElt;

    fn field(&self) -> &Field {
        &self.0.field
    }

    fn zero(&self) -> SquareElt {
        SquareElt::new()
    }

    fn one(&self) -> SquareElt {
        let u = self.0.unit;
        SquareElt::from([((u, u), self.0.field.one())])
    }

    fn add(&self, a: &SquareElt, b: &SquareElt) -> SquareElt {
        let mut out = a.clone();
        for (&k, &c) in b {
            add_into(&self.0.field, &mut out, k, c);
        }
        out
    }

    fn scale(&self, a: &SquareElt, c: FieldElt) -> SquareElt {
        if c.is_zero() {
            return SquareElt::new();
        }
        a.iter().map(|(&k, &x)| (k, self.0.field.mul(x, c))).collect()
    }

    fn mul(&self, a: &SquareElt, b: &SquareElt) -> Result<SquareElt> {
        let f = &self.0.field;
        let t = &self.0.table;
        let mut out = SquareElt::new();
        for (&(i1, j1), &x) in a {
            for (&(i2, j2), &y) in b {
                let xy = f.mul(x, y);
                for &(k, c) in &t[i1][i2] {
                    let xyc = f.mul(xy, c);
                    for &(l, d) in &t[j1][j2] {
                        add_into(f, &mut out, (k, l), f.mul(xyc, d));
                    }
                }
            }
        }
        Ok(out)
    }

    fn is_zero(&self, a: &SquareElt) -> bool {
        a.is_empty()
    }
}

/// Rewriting rules for `H / ⟨X_1^p - α, X_2^D - r(X_2) - γ⟩`, where
/// `X_2^D - r(X_2)` is central.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRules {
    pub alpha: FieldElt,
    pub x2_degree: u32,
    /// `r(X_2)` as `(exponent, coefficient)` pairs, exponents below `x2_degree`.
    pub x2_rule: Vec<(u32, FieldElt)>,
    pub gamma: FieldElt,
}

/// A quotient of `H(d, b, c)` by a central ideal, with the reduction map.
#[derive(Clone, Debug)]
pub struct Quotient {
    ihoe: Ihoe2,
    rules: QuotientRules,
    algebra: FinDimAlgebra,
}

impl Quotient {
    pub fn new(ihoe: Ihoe2, rules: QuotientRules) -> Result<Quotient> {
        let p = ihoe.p() as i32;
        let d = rules.x2_degree as i32;
        if rules.x2_rule.iter().any(|&(k, _)| k >= rules.x2_degree) {
            return Err(Error::InvalidParams("rule exponent too large".into()));
        }
        let labels: Vec<Mono> = (0..p)
            .flat_map(|i| (0..d).map(move |j| Mono::from_slice(&[i, j])))
            .collect();
        let base = ihoe.base().clone();
        let dim = labels.len();
        let algebra = FinDimAlgebra::from_products(ihoe.field(), labels.clone(), 0, |i, j| {
            reduce_with(&ihoe, &rules, &base.mul_mono(&labels[i], &labels[j])?, dim)
        })?;
        Ok(Quotient {
            ihoe,
            rules,
            algebra,
        })
    }

    pub fn ihoe(&self) -> &Ihoe2 {
        &self.ihoe
    }

    pub fn rules(&self) -> &QuotientRules {
        &self.rules
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> FinDimAlgebra {
        self.algebra
    }

    /// The image of an element of `H`.
    pub fn reduce(&self, h: &PbwElement) -> Result<Vec<FieldElt>> {
        reduce_with(&self.ihoe, &self.rules, h, self.algebra.dim())
    }

    /// The image of an element of `H ⊗ H` in the tensor square.
    pub fn reduce_tensor(&self, t: &TensorElement) -> Result<SquareElt> {
        let f = self.ihoe.field();
        let n = t.n();
        let sq = Square(&self.algebra);
        let mut out = SquareElt::new();
        for (k, c) in t.terms() {
            let left = self.reduce(&PbwElement::monomial(Mono::from_slice(&k[..n]), f.one()))?;
            let right = self.reduce(&PbwElement::monomial(Mono::from_slice(&k[n..]), c))?;
            out = sq.add(&out, &sq.pure(&left, &right));
        }
        Ok(out)
    }

    /// `Δ` of an element of `H`, pushed to the quotient.
    pub fn coproduct(&self, h: &PbwElement) -> Result<SquareElt> {
        self.reduce_tensor(&self.ihoe.hopf().coproduct(h)?)
    }
}

/// Normal form in the quotient: `X_1^p ↦ α` and `X_2^D ↦ r(X_2) + γ`.
fn reduce_with(ihoe: &Ihoe2, rules: &QuotientRules, h: &PbwElement, dim: usize) -> Result<Vec<FieldElt>> {
    let f = ihoe.field();
    let p = ihoe.p() as i32;
    let d = rules.x2_degree as i32;
    let mut out = vec![FieldElt::ZERO; dim];
    let mut stack: Vec<(i32, i32, FieldElt)> = h.terms().map(|(m, c)| (m[0], m[1], c)).collect();
    while let Some((a, b, c)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        if a < 0 || b < 0 {
            return Err(Error::InvalidParams("negative exponent in quotient".into()));
        }
        if a >= p {
            stack.push((a - p, b, f.mul(c, rules.alpha)));
        } else if b >= d {
            stack.push((a, b - d, f.mul(c, rules.gamma)));
            for &(k, r) in &rules.x2_rule {
                stack.push((a, b - d + k as i32, f.mul(c, r)));
            }
        } else {
            let idx = (a * d + b) as usize;
            out[idx] = f.add(out[idx], c);
        }
    }
    Ok(out)
}

/// `d(α) = Σ_{s≥1} d_s α^{p^{s-1}}`.
pub fn d_poly(params: &Ihoe2Params, alpha: FieldElt) -> FieldElt {
    let f = params.field();
    f.sum(
        params
            .d_support()
            .filter(|&(s, _)| s >= 1)
            .map(|(s, d)| f.mul(d, f.frobenius_iter(alpha, s - 1))),
    )
}

/// `d_0^p α + d(α)^p`; the fiber over `(α, β)` is a matrix algebra exactly
/// when this is nonzero.
pub fn fiber_criterion(params: &Ihoe2Params, alpha: FieldElt) -> FieldElt {
    let f = params.field();
    f.add(
        f.mul(f.frobenius(params.d(0)), alpha),
        f.frobenius(d_poly(params, alpha)),
    )
}

fn require_noncommutative(h: &Ihoe2) -> Result<()> {
    if h.params().is_commutative() {
        Err(Error::Commutative)
    } else {
        Ok(())
    }
}

/// `H_{α,β} = H / ⟨X_1^p - α, X_2^p - d_0^{p-1} X_2 - β⟩`.
pub fn quotient_fiber(h: &Ihoe2, alpha: FieldElt, beta: FieldElt) -> Result<Quotient> {
    require_noncommutative(h)?;
    let f = h.field();
    let r = f.pow(h.params().d(0), h.p() as u64 - 1);
    let rules = QuotientRules {
        alpha,
        x2_degree: h.p(),
        x2_rule: if r.is_zero() { vec![] } else { vec![(1, r)] },
        gamma: beta,
    };
    Quotient::new(h.clone(), rules)
}

/// Images of the generators in a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    field: Field,
    images: Vec<Matrix>,
}

impl Representation {
    pub fn new(field: &Field, images: Vec<Matrix>) -> Representation {
        Representation {
            field: field.clone(),
            images,
        }
    }

    pub fn dim(&self) -> usize {
        self.images.first().map_or(0, Matrix::rows)
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    pub fn label_image(&self, label: &[i32]) -> Matrix {
        let f = &self.field;
        label
            .iter()
            .zip(&self.images)
            .fold(Matrix::identity(f, self.dim()), |acc, (&e, m)| acc.mul(f, &m.pow(f, e as u64)))
    }

    fn combination(&self, images: &[Matrix], v: &[(usize, FieldElt)]) -> Matrix {
        let f = &self.field;
        v.iter()
            .fold(Matrix::zeros(self.dim(), self.dim()), |acc, &(k, c)| acc.add(f, &images[k].scale(f, c)))
    }

    /// The linear extension over the basis labels is an algebra map.
    pub fn respects(&self, alg: &FinDimAlgebra) -> bool {
        if alg.field != self.field {
            return false;
        }
        let f = &self.field;
        let images: Vec<Matrix> = alg.labels.iter().map(|l| self.label_image(l)).collect();
        if images[alg.unit] != Matrix::identity(f, self.dim()) {
            return false;
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = images[i].mul(f, &images[j]);
                if lhs != self.combination(&images, &alg.table[i][j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Rank of the images of the basis labels inside the full matrix space.
    pub fn span_rank(&self, alg: &FinDimAlgebra) -> usize {
        let vectors: Vec<Vec<FieldElt>> = alg
            .labels
            .iter()
            .map(|l| self.label_image(l).entries().to_vec())
            .collect();
        rank_of_vectors(&self.field, &vectors)
    }

    pub fn to_repr(&self) -> Vec<MatrixRepr> {
        self.images.iter().map(|m| m.to_repr(&self.field)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiberKind {
    Azumaya,
    LocalNilpotent,
    BlockOfP,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberWitness {
    /// The images of the `p^2` basis monomials span `M_p`.
    Azumaya { span_rank: usize },
    /// `X_1 - α^{1/p}` and `X_2 - β^{1/p}` commute, have these nilpotency
    /// indices, and their monomials span the fiber.
    LocalNilpotent { nilpotency: [usize; 2], span_rank: usize },
    /// `u = d_0 X_1 + d(α)` has this nilpotency index; the characters send
    /// `w = d_0^{-1} X_2` to the listed roots of `w^p - w = β d_0^{-p}`.
    BlockOfP { u_nilpotency: usize, weights: Vec<FieldElt> },
}

#[derive(Clone, Debug)]
pub struct FiberClassification {
    pub kind: FiberKind,
    /// Field over which the witnesses live.
    pub field: Field,
    pub extension_degree: u32,
    pub alpha: FieldElt,
    pub beta: FieldElt,
    pub criterion: FieldElt,
    pub witness: FiberWitness,
    pub simples: Vec<Representation>,
    /// The fiber algebra over `field`.
    pub algebra: FinDimAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub kind: FiberKind,
    pub field: FieldSpec,
    pub extension_degree: u32,
    pub alpha: CoeffRepr,
    pub beta: CoeffRepr,
    pub criterion: CoeffRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotency: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<CoeffRepr>>,
    /// Generator images for each simple module.
    pub simples: Vec<Vec<MatrixRepr>>,
}

impl FiberClassification {
    pub fn report(&self) -> FiberReport {
        let f = &self.field;
        let (span_rank, nilpotency, weights) = match &self.witness {
            FiberWitness::Azumaya { span_rank } => (Some(*span_rank), None, None),
            FiberWitness::LocalNilpotent { nilpotency, span_rank } => {
                (Some(*span_rank), Some(nilpotency.to_vec()), None)
            }
            FiberWitness::BlockOfP { u_nilpotency, weights } => (
                None,
                Some(vec![*u_nilpotency]),
                Some(weights.iter().map(|&w| f.coeff_repr(w)).collect()),
            ),
        };
        FiberReport {
            kind: self.kind,
            field: f.spec(),
            extension_degree: self.extension_degree,
            alpha: f.coeff_repr(self.alpha),
            beta: f.coeff_repr(self.beta),
            criterion: f.coeff_repr(self.criterion),
            span_rank,
            nilpotency,
            weights,
            simples: self.simples.iter().map(Representation::to_repr).collect(),
        }
    }
}

/// Smallest `k ≥ 1` with `a^k = 0`, if at most `limit`.
fn nilpotency_index<A: Algebra>(alg: &A, a: &A::Elem, limit: usize) -> Result<Option<usize>> {
    let mut cur = a.clone();
    for k in 1..=limit {
        if alg.is_zero(&cur) {
            return Ok(Some(k));
        }
        cur = alg.mul(&cur, a)?;
    }
    Ok(alg.is_zero(&cur).then_some(limit + 1))
}

fn inconsistent(what: &str) -> Error {
    Error::Inconsistent(what.to_string())
}

/// Rebuilds `h` over the degree-`k` extension of its field.
fn over_extension(h: &Ihoe2, k: u32) -> Result<(Ihoe2, Embedding)> {
    if k == 1 {
        return Ok((h.clone(), Embedding::identity(h.field())));
    }
    let (_, e) = extend(h.field(), k)?;
    let params = h.params().embed(&e);
    let cap = h.base().degree_cap();
    Ok((Ihoe2::new(params, Some(cap))?, e))
}

/// Classifies the fiber over `(α, β)` and certifies the answer with explicit
/// simple modules, extending the field when an Artin–Schreier root is needed.
pub fn classify_fiber(h: &Ihoe2, alpha: FieldElt, beta: FieldElt) -> Result<FiberClassification> {
    require_noncommutative(h)?;
    let f = h.field();
    let d0 = h.params().d(0);
    let k = if d0.is_zero() {
        1
    } else {
        let c = f.div(beta, f.frobenius(d0))?;
        f.artin_schreier_roots(c).split_multiplier
    };
    let (big, e) = over_extension(h, k)?;
    let (alpha, beta) = (e.apply(alpha), e.apply(beta));
    let f = big.field().clone();
    let params = big.params().clone();
    let d0 = params.d(0);
    let d_alpha = d_poly(&params, alpha);
    let criterion = fiber_criterion(&params, alpha);
    let q = quotient_fiber(&big, alpha, beta)?;
    let alg = q.algebra();
    let p = big.p() as usize;

    let (kind, witness, simples) = if !criterion.is_zero() {
        let rep = azumaya_rep(&f, p, d0, d_alpha, alpha, beta, criterion)?;
        let span_rank = rep.span_rank(alg);
        if !rep.respects(alg) || span_rank != p * p {
            return Err(inconsistent("matrix representation of an Azumaya fiber"));
        }
        (FiberKind::Azumaya, FiberWitness::Azumaya { span_rank }, vec![rep])
    } else if d0.is_zero() {
        let (ra, rb) = (f.pth_root(alpha), f.pth_root(beta));
        let a = alg.sub(&q.reduce(&big.x1())?, &alg.scalar(ra));
        let b = alg.sub(&q.reduce(&big.x2())?, &alg.scalar(rb));
        let na = nilpotency_index(alg, &a, p)?;
        let nb = nilpotency_index(alg, &b, p)?;
        let mut vectors = Vec::new();
        for i in 0..p as u32 {
            for j in 0..p as u32 {
                vectors.push(alg.mul(&alg.pow(&a, i)?, &alg.pow(&b, j)?)?);
            }
        }
        let span_rank = rank_of_vectors(&f, &vectors);
        let commute = alg.is_zero(&alg.commutator(&a, &b)?);
        let simple = Representation::new(
            &f,
            vec![Matrix::scalar(1, ra), Matrix::scalar(1, rb)],
        );
        if !commute || na != Some(p) || nb != Some(p) || span_rank != p * p || !simple.respects(alg) {
            return Err(inconsistent("local nilpotent fiber"));
        }
        (
            FiberKind::LocalNilpotent,
            FiberWitness::LocalNilpotent {
                nilpotency: [p, p],
                span_rank,
            },
            vec![simple],
        )
    } else {
        let d0_inv = f.inv(d0).ok_or(Error::DivisionByZero)?;
        let u = alg.add(&q.reduce(&big.x1())?.iter().map(|&x| f.mul(x, d0)).collect(), &alg.scalar(d_alpha));
        let w = alg.scale(&q.reduce(&big.x2())?, d0_inv);
        let u_nil = nilpotency_index(alg, &u, p)?;
        let shifted = alg.commutator(&w, &u)?;
        let as_rhs = f.mul(beta, f.pow(d0_inv, p as u64));
        let as_lhs = alg.sub(&alg.pth_power(&w)?, &w);
        let mut ok = u_nil == Some(p) && shifted == u && as_lhs == alg.scalar(as_rhs);
        if !d_alpha.is_zero() {
            // the displayed form w^p - w + αβ d(α)^{-p} = 0
            let alt = f.mul(f.mul(alpha, beta), f.pow_signed(d_alpha, -(p as i64))?);
            ok &= alg.is_zero(&alg.add(&as_lhs, &alg.scalar(alt)));
        }
        let roots = f.artin_schreier_roots(as_rhs).roots;
        let x1_value = f.neg(f.mul(d_alpha, d0_inv));
        let simples: Vec<Representation> = roots
            .iter()
            .map(|&r| Representation::new(&f, vec![Matrix::scalar(1, x1_value), Matrix::scalar(1, f.mul(d0, r))]))
            .collect();
        let distinct = roots.iter().collect::<std::collections::BTreeSet<_>>().len() == p;
        ok &= roots.len() == p && distinct && simples.iter().all(|s| s.respects(alg));
        if !ok {
            return Err(inconsistent("block of characters"));
        }
        (
            FiberKind::BlockOfP,
            FiberWitness::BlockOfP {
                u_nilpotency: p,
                weights: roots,
            },
            simples,
        )
    };
    Ok(FiberClassification {
        kind,
        field: f,
        extension_degree: k,
        alpha,
        beta,
        criterion,
        witness,
        simples,
        algebra: q.into_algebra(),
    })
}

/// A `p`-dimensional representation of an Azumaya fiber.
fn azumaya_rep(
    f: &Field,
    p: usize,
    d0: FieldElt,
    d_alpha: FieldElt,
    alpha: FieldElt,
    beta: FieldElt,
    criterion: FieldElt,
) -> Result<Representation> {
    let one = f.one();
    if d0.is_zero() {
        // X_1 acts by t and X_2 by d(α) d/dt + β^{1/p} on k[t]/(t^p - α)
        let mut t = Matrix::zeros(p, p);
        let mut dt = Matrix::zeros(p, p);
        for j in 0..p {
            if j + 1 < p {
                t.set(j + 1, j, one);
            }
            if j > 0 {
                dt.set(j - 1, j, f.from_int(j as i64));
            }
        }
        t.set(0, p - 1, alpha);
        let x2 = dt.scale(f, d_alpha).add(f, &Matrix::scalar(p, f.pth_root(beta)));
        return Ok(Representation::new(f, vec![t, x2]));
    }
    // u = d_0 X_1 + d(α) shifts a weight basis of w = d_0^{-1} X_2 cyclically
    let d0_inv = f.inv(d0).ok_or(Error::DivisionByZero)?;
    let c = f.mul(beta, f.pow(d0_inv, p as u64));
    let offset = *f
        .artin_schreier_roots(c)
        .roots
        .first()
        .ok_or_else(|| inconsistent("no Artin-Schreier root after extension"))?;
    let mut u = Matrix::zeros(p, p);
    let mut w = Matrix::zeros(p, p);
    for i in 0..p {
        if i + 1 < p {
            u.set(i + 1, i, one);
        }
        w.set(i, i, f.add(offset, f.from_int(i as i64)));
    }
    u.set(0, p - 1, criterion);
    let x1 = u.sub(f, &Matrix::scalar(p, d_alpha)).scale(f, d0_inv);
    Ok(Representation::new(f, vec![x1, w.scale(f, d0)]))
}

#[derive(Clone, Debug)]
pub struct Census {
    /// Dimensions of the simple modules, one entry per isomorphism class.
    pub dims: Vec<usize>,
    pub sum_of_squares: usize,
    pub algebra_dim: usize,
    pub simples: Vec<Representation>,
}

/// Lists the simple modules of a fiber and re-verifies each against `a`.
pub fn simple_census(a: &FinDimAlgebra, c: &FiberClassification) -> Result<Census> {
    let a = if a.field == c.field {
        a.clone()
    } else {
        a.embed(&embed(&a.field, &c.field)?)
    };
    let p = c.field.p() as usize;
    let dims: Vec<usize> = c.simples.iter().map(Representation::dim).collect();
    let expected = match c.kind {
        FiberKind::Azumaya => vec![p],
        FiberKind::LocalNilpotent => vec![1],
        FiberKind::BlockOfP => vec![1; p],
    };
    if dims != expected {
        return Err(inconsistent("simple module dimensions"));
    }
    for s in &c.simples {
        if !s.respects(&a) || s.span_rank(&a) != s.dim() * s.dim() {
            return Err(inconsistent("simple module is not an irreducible representation"));
        }
    }
    if c.kind == FiberKind::BlockOfP {
        let distinct: std::collections::BTreeSet<Vec<FieldElt>> = c
            .simples
            .iter()
            .map(|s| s.images().iter().flat_map(|m| m.entries().to_vec()).collect())
            .collect();
        if distinct.len() != p {
            return Err(inconsistent("characters are not distinct"));
        }
    }
    let sum_of_squares: usize = dims.iter().map(|d| d * d).sum();
    let full = sum_of_squares == a.dim();
    if sum_of_squares > a.dim() || full != (c.kind == FiberKind::Azumaya) {
        return Err(inconsistent("sum of squared dimensions"));
    }
    Ok(Census {
        dims,
        sum_of_squares,
        algebra_dim: a.dim(),
        simples: c.simples.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusReport {
    /// Roots of `Σ d_s^p x^{p^s}` in the requested field.
    pub roots: Vec<CoeffRepr>,
    /// Number of distinct roots over the algebraic closure.
    pub r: u64,
    /// Degree over the requested field of the extension holding all roots,
    /// if within reach.
    pub splitting_degree: Option<u32>,
}

fn locus_roots(params: &Ihoe2Params) -> Vec<FieldElt> {
    let f = params.field();
    f.elements()
        .filter(|&x| {
            f.sum(
                params
                    .d_support()
                    .map(|(s, d)| f.mul(f.frobenius(d), f.frobenius_iter(x, s))),
            )
            .is_zero()
        })
        .collect()
}

/// Roots in `field` of `Σ_s d_s^p x^{p^s} = 0`, whose zero set is the
/// non-Azumaya locus.
pub fn nonazumaya_locus(params: &Ihoe2Params, field: &Field) -> Result<LocusReport> {
    if params.is_commutative() {
        return Err(Error::Commutative);
    }
    let params = params.embed(&embed(params.field(), field)?);
    let roots = locus_roots(&params);
    // an additive polynomial with lowest term x^{p^a} and top x^{p^b} has p^{b-a} distinct roots
    let (lo, hi) = params
        .d_support()
        .fold((u32::MAX, 0), |(lo, hi), (s, _)| (lo.min(s), hi.max(s)));
    let r = (field.p() as u64).pow(hi - lo);
    let mut splitting_degree = None;
    for k in 1..=crate::gf::MAX_EXTENSION_DEGREE / field.m() {
        let count = if k == 1 {
            roots.len() as u64
        } else {
            let (_, e) = extend(field, k)?;
            locus_roots(&params.embed(&e)).len() as u64
        };
        if count == r {
            splitting_degree = Some(k);
            break;
        }
    }
    Ok(LocusReport {
        roots: roots.iter().map(|&x| field.coeff_repr(x)).collect(),
        r,
        splitting_degree,
    })
}

/// Which of the four restricted quotients occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RestrictedCase {
    /// `b_0 = 0`, `d_0 = 0`: `k[x,y]/(x^p, y^p)` with `x, y` primitive.
    TruncatedPolynomial,
    /// `b_0 = 0`, `d_0 ≠ 0`: restricted enveloping algebra of the
    /// two-dimensional non-abelian Lie algebra.
    RestrictedLie,
    /// `b_0 ≠ 0`, `d_0 = 0`: `k[x,y]/(x^p, y^{p^2})` with a non-primitive `y`.
    TruncatedWitt,
    /// `b_0 ≠ 0`, `d_0 ≠ 0`: three generators `x, y, z = y^p - y`.
    ThreeGenerator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct RestrictedQuotient {
    pub case: RestrictedCase,
    pub center: CenterVerdict,
    pub quotient: Quotient,
    pub checks: Vec<PresentationCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedReport {
    pub case: RestrictedCase,
    pub center: CenterVerdict,
    pub dim: usize,
    pub pass: bool,
    pub checks: Vec<PresentationCheck>,
}

impl RestrictedQuotient {
    pub fn dim(&self) -> usize {
        self.quotient.algebra().dim()
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn report(&self) -> RestrictedReport {
        RestrictedReport {
            case: self.case,
            center: self.center,
            dim: self.dim(),
            pass: self.pass(),
            checks: self.checks.clone(),
        }
    }
}

struct Checker<'a> {
    q: &'a Quotient,
    checks: Vec<PresentationCheck>,
}

impl<'a> Checker<'a> {
    fn alg(&self) -> &'a FinDimAlgebra {
        self.q.algebra()
    }

    fn sq(&self) -> Square<'a> {
        Square(self.q.algebra())
    }

    fn record(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(PresentationCheck {
            name: name.into(),
            pass,
        });
    }

    fn eq(&mut self, name: &str, a: &[FieldElt], b: &[FieldElt]) {
        self.record(name, a == b);
    }

    fn zero(&mut self, name: &str, a: &[FieldElt]) {
        self.record(name, a.iter().all(|x| x.is_zero()));
    }

    fn pow(&self, a: &Vec<FieldElt>, e: u32) -> Result<Vec<FieldElt>> {
        self.alg().pow(a, e)
    }

    fn bracket(&self, a: &Vec<FieldElt>, b: &Vec<FieldElt>) -> Result<Vec<FieldElt>> {
        self.alg().commutator(a, b)
    }

    fn tail(&self, v: &[FieldElt], delta: &SquareElt) -> SquareElt {
        self.sq().sub(delta, &self.sq().primitive(v))
    }

    /// `Σ λ_i v^i ⊗ v^{p-i}`.
    fn lambda_sum(&self, v: &Vec<FieldElt>) -> Result<SquareElt> {
        let f = self.alg().field.clone();
        let p = f.p();
        let mut out = SquareElt::new();
        for (i, &l) in lambda_coeffs(p).iter().enumerate() {
            let i = i as u32 + 1;
            let term = self.sq().pure(&self.pow(v, i)?, &self.pow(v, p - i)?);
            out = self.sq().add(&out, &self.sq().scale(&term, f.from_int(l as i64)));
        }
        Ok(out)
    }

    fn span(&mut self, name: &str, vectors: Vec<Vec<FieldElt>>) {
        let f = self.alg().field.clone();
        let full = rank_of_vectors(&f, &vectors) == self.alg().dim();
        self.record(name, full);
    }

    fn cocommutative(&mut self, name: &str, delta: &SquareElt) {
        let sq = self.sq();
        self.record(name, sq.flip(delta) == *delta);
    }
}

/// Builds `H / C(H)_+ H` and checks it against the expected presentation.
pub fn restricted_quotient(h: &Ihoe2) -> Result<RestrictedQuotient> {
    require_noncommutative(h)?;
    let center = hopf_center(h)?.verdict;
    let f = h.field().clone();
    let p = h.p();
    let d0 = h.params().d(0);
    let b0 = h.params().get(Param::B(0));
    let rules = match center {
        CenterVerdict::XpZ => {
            let r = f.pow(d0, p as u64 - 1);
            QuotientRules {
                alpha: f.zero(),
                x2_degree: p,
                x2_rule: if r.is_zero() { vec![] } else { vec![(1, r)] },
                gamma: f.zero(),
            }
        }
        CenterVerdict::XpZp => {
            // z^p = X_2^{p^2} - d_0^{p(p-1)} X_2^p
            let r = f.pow(d0, (p * (p - 1)) as u64);
            QuotientRules {
                alpha: f.zero(),
                x2_degree: p * p,
                x2_rule: if r.is_zero() { vec![] } else { vec![(p, r)] },
                gamma: f.zero(),
            }
        }
    };
    let q = Quotient::new(h.clone(), rules)?;
    let case = match (center, d0.is_zero()) {
        (CenterVerdict::XpZ, true) => RestrictedCase::TruncatedPolynomial,
        (CenterVerdict::XpZ, false) => RestrictedCase::RestrictedLie,
        (CenterVerdict::XpZp, true) => RestrictedCase::TruncatedWitt,
        (CenterVerdict::XpZp, false) => RestrictedCase::ThreeGenerator,
    };
    let checks = presentation_checks(&q, case, d0, b0)?;
    Ok(RestrictedQuotient {
        case,
        center,
        quotient: q,
        checks,
    })
}

fn presentation_checks(q: &Quotient, case: RestrictedCase, d0: FieldElt, b0: FieldElt) -> Result<Vec<PresentationCheck>> {
    let h = q.ihoe();
    let f = h.field().clone();
    let p = h.p();
    let mut c = Checker { q, checks: Vec::new() };
    let alg = q.algebra();
    let sq = Square(alg);
    let expected_dim = match case {
        RestrictedCase::TruncatedPolynomial | RestrictedCase::RestrictedLie => p * p,
        _ => p * p * p,
    };
    c.record(format!("dim = {expected_dim}"), alg.dim() == expected_dim as usize);
    c.record("associative", alg.check_associativity((p * p) as usize, 300, 0)?);
    c.record("unit", alg.check_unit());

    // the ideal is a Hopf ideal: its generators have vanishing coproduct image
    let x1p = h.base().mono(&[p as i32, 0]);
    c.record("Δ(X_1^p) ≡ 0", q.coproduct(&x1p)?.is_empty());
    let dz = q.coproduct(&h.z()?)?;
    match case {
        RestrictedCase::TruncatedPolynomial | RestrictedCase::RestrictedLie => {
            c.record("Δ(z) ≡ 0", dz.is_empty());
        }
        _ => c.record("Δ(z^p) ≡ 0", sq.pth_power(&dz)?.is_empty()),
    }

    let x = q.reduce(&h.x1())?;
    let x2 = q.reduce(&h.x2())?;
    let dx = q.coproduct(&h.x1())?;
    let dx2 = q.coproduct(&h.x2())?;
    c.record("x primitive", c.tail(&x, &dx).is_empty());
    c.cocommutative("Δ(x) cocommutative", &dx);
    c.zero("x^p = 0", &c.pow(&x, p)?);
    match case {
        RestrictedCase::TruncatedPolynomial => {
            let y = x2;
            c.zero("y^p = 0", &c.pow(&y, p)?);
            c.zero("[x,y] = 0", &c.bracket(&x, &y)?);
            c.record("y primitive", c.tail(&y, &dx2).is_empty());
            c.record("commutative", alg.is_commutative());
            c.span("x^i y^j span", monomials(&c, &[(&x, p), (&y, p)])?);
        }
        RestrictedCase::RestrictedLie => {
            let d0_inv = f.inv(d0).ok_or(Error::DivisionByZero)?;
            let y = alg.scale(&x2, d0_inv);
            let dy = sq.scale(&dx2, d0_inv);
            c.eq("y^p = y", &c.pow(&y, p)?, &y);
            c.eq("[y,x] = x", &c.bracket(&y, &x)?, &x);
            c.record("y primitive", c.tail(&y, &dy).is_empty());
            c.cocommutative("Δ(y) cocommutative", &dy);
            c.span("x^i y^j span", monomials(&c, &[(&x, p), (&y, p)])?);
        }
        RestrictedCase::TruncatedWitt => {
            let b0_inv = f.inv(b0).ok_or(Error::DivisionByZero)?;
            let y = alg.scale(&x2, b0_inv);
            let dy = sq.scale(&dx2, b0_inv);
            c.zero("y^{p^2} = 0", &c.pow(&y, p * p)?);
            c.record("y^{p^2-1} ≠ 0", !alg.is_zero(&c.pow(&y, p * p - 1)?));
            c.record("commutative", alg.is_commutative());
            let u = c.lambda_sum(&x)?;
            c.record("Δ(y) tail = Σ λ_i x^i⊗x^{p-i}", c.tail(&y, &dy) == u);
            c.cocommutative("Δ(y) cocommutative", &dy);
            c.span("x^i y^j span", monomials(&c, &[(&x, p), (&y, p * p)])?);
        }
        RestrictedCase::ThreeGenerator => {
            let d0_inv = f.inv(d0).ok_or(Error::DivisionByZero)?;
            let e = f.mul(b0, d0_inv);
            let y = alg.scale(&x2, d0_inv);
            let z = alg.sub(&c.pow(&y, p)?, &y);
            let dy = sq.scale(&dx2, d0_inv);
            let dz = sq.sub(&sq.pth_power(&dy)?, &dy);
            let u = c.lambda_sum(&x)?;
            c.eq("[y,x] = x", &c.bracket(&y, &x)?, &x);
            c.zero("[y,z] = 0", &c.bracket(&y, &z)?);
            c.zero("[x,z] = 0", &c.bracket(&x, &z)?);
            c.zero("z^p = 0", &c.pow(&z, p)?);
            c.record("Δ(y) tail = e Σ λ_i x^i⊗x^{p-i}", c.tail(&y, &dy) == sq.scale(&u, e));
            c.record("Δ(z) tail = -e Σ λ_i x^i⊗x^{p-i}", c.tail(&z, &dz) == sq.scale(&u, f.neg(e)));
            c.cocommutative("Δ(y) cocommutative", &dy);
            c.span("x^i y^j z^k span", monomials(&c, &[(&x, p), (&y, p), (&z, p)])?);

            // X = y + z, Y = x, Z = -b_0^{-1} d_0 z
            let big_x = alg.add(&y, &z);
            let big_y = x.clone();
            let s = f.neg(f.inv(e).ok_or(Error::DivisionByZero)?);
            let big_z = alg.scale(&z, s);
            let d_big_x = sq.add(&dy, &dz);
            let d_big_z = sq.scale(&dz, s);
            c.eq("[X,Y] = Y", &c.bracket(&big_x, &big_y)?, &big_y);
            c.zero("[X,Z] = 0", &c.bracket(&big_x, &big_z)?);
            c.zero("[Y,Z] = 0", &c.bracket(&big_y, &big_z)?);
            c.eq("X^p = X", &c.pow(&big_x, p)?, &big_x);
            c.zero("Y^p = 0", &c.pow(&big_y, p)?);
            c.zero("Z^p = 0", &c.pow(&big_z, p)?);
            c.record("X primitive", c.tail(&big_x, &d_big_x).is_empty());
            c.record("Δ(Z) tail = Σ λ_i Y^i⊗Y^{p-i}", c.tail(&big_z, &d_big_z) == c.lambda_sum(&big_y)?);
        }
    }
    Ok(c.checks)
}

/// Ordered monomials `g_1^{e_1} g_2^{e_2} ...` with `e_k < bound_k`.
fn monomials(c: &Checker, gens: &[(&Vec<FieldElt>, u32)]) -> Result<Vec<Vec<FieldElt>>> {
    let alg = c.alg();
    let mut out = vec![alg.one()];
    for &(g, bound) in gens {
        let powers: Vec<Vec<FieldElt>> = (0..bound).map(|e| alg.pow(g, e)).collect::<Result<_>>()?;
        let mut next = Vec::with_capacity(out.len() * powers.len());
        for m in &out {
            for pw in &powers {
                next.push(alg.mul(m, pw)?);
            }
        }
        out = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(p: u32, m: u32, entries: &[(Param, i64)]) -> Ihoe2 {
        let f = FieldCtx::new(p, m).unwrap();
        let mut params = Ihoe2Params::zero(&f);
        for &(k, v) in entries {
            params.set(k, f.from_int(v)).unwrap();
        }
        Ihoe2::new(params, None).unwrap()
    }

    #[test]
    fn fiber_structure() {
        let a = h(2, 1, &[(Param::D(0), 1)]);
        let f = a.field().clone();
        let q = quotient_fiber(&a, f.one(), f.zero()).unwrap();
        let alg = q.algebra();
        assert_eq!(alg.dim(), 4);
        assert!(!alg.is_commutative());
        assert!(alg.check_associativity(16, 0, 0).unwrap());
        let x1 = q.reduce(&a.x1()).unwrap();
        let x2 = q.reduce(&a.x2()).unwrap();
        assert_eq!(alg.commutator(&x2, &x1).unwrap(), x1);
        assert_eq!(alg.pow(&x1, 2).unwrap(), alg.one());
        assert_eq!(alg.pow(&x2, 2).unwrap(), x2);
        let b = h(2, 1, &[(Param::D(1), 1)]);
        let q = quotient_fiber(&b, f.zero(), f.zero()).unwrap();
        assert!(q.algebra().is_commutative());
    }

    #[test]
    fn fiber_relation_uses_d_alpha() {
        let a = h(3, 1, &[(Param::D(0), 2), (Param::D(1), 1)]);
        let f = a.field().clone();
        for al in f.elements() {
            let q = quotient_fiber(&a, al, f.one()).unwrap();
            let alg = q.algebra();
            let x1 = q.reduce(&a.x1()).unwrap();
            let x2 = q.reduce(&a.x2()).unwrap();
            let rhs = alg.add(&alg.scale(&x1, f.from_int(2)), &alg.scalar(d_poly(a.params(), al)));
            assert_eq!(alg.commutator(&x2, &x1).unwrap(), rhs);
        }
    }

    #[test]
    fn azumaya_example_matrices() {
        let a = h(2, 1, &[(Param::D(0), 1)]);
        let f = a.field().clone();
        let c = classify_fiber(&a, f.one(), f.zero()).unwrap();
        assert_eq!(c.kind, FiberKind::Azumaya);
        let (o, z) = (f.one(), f.zero());
        assert_eq!(c.simples[0].images()[0], Matrix::from_rows(vec![vec![z, o], vec![o, z]]));
        assert_eq!(c.simples[0].images()[1], Matrix::from_rows(vec![vec![z, z], vec![z, o]]));
        assert_eq!(c.witness, FiberWitness::Azumaya { span_rank: 4 });
    }

    #[test]
    fn block_and_local_examples() {
        let a = h(2, 1, &[(Param::D(0), 1)]);
        let f = a.field().clone();
        let c = classify_fiber(&a, f.zero(), f.zero()).unwrap();
        assert_eq!(c.kind, FiberKind::BlockOfP);
        assert_eq!(c.simples.len(), 2);
        let b = h(2, 1, &[(Param::D(1), 1)]);
        let c = classify_fiber(&b, f.zero(), f.one()).unwrap();
        assert_eq!(c.kind, FiberKind::LocalNilpotent);
        assert_eq!(classify_fiber(&b, f.one(), f.one()).unwrap().kind, FiberKind::Azumaya);
    }

    #[test]
    fn artin_schreier_extension() {
        // w^2 - w = 1 has no root in F_2
        let a = h(2, 1, &[(Param::D(0), 1)]);
        let f = a.field().clone();
        let c = classify_fiber(&a, f.zero(), f.one()).unwrap();
        assert_eq!(c.kind, FiberKind::BlockOfP);
        assert_eq!(c.extension_degree, 2);
        let census = simple_census(quotient_fiber(&a, f.zero(), f.one()).unwrap().algebra(), &c).unwrap();
        assert_eq!(census.dims, vec![1, 1]);
    }

    #[test]
    fn census_p5_block() {
        let a = h(5, 1, &[(Param::D(0), 1)]);
        let f = a.field().clone();
        let c = classify_fiber(&a, f.zero(), f.zero()).unwrap();
        let census = simple_census(&c.algebra, &c).unwrap();
        assert_eq!(census.dims, vec![1; 5]);
        let c = classify_fiber(&a, f.one(), f.zero()).unwrap();
        assert_eq!(simple_census(&c.algebra, &c).unwrap().dims, vec![5]);
    }

    #[test]
    fn locus_counts() {
        let f = FieldCtx::new(2, 1).unwrap();
        let r = |e: &[(Param, i64)]| nonazumaya_locus(h(2, 1, e).params(), &f).unwrap();
        assert_eq!(r(&[(Param::D(0), 1)]).r, 1);
        assert_eq!(r(&[(Param::D(1), 1)]).r, 1);
        let both = r(&[(Param::D(0), 1), (Param::D(1), 1)]);
        assert_eq!((both.r, both.roots.len(), both.splitting_degree), (2, 2, Some(1)));
    }

    #[test]
    fn restricted_examples() {
        let r = restricted_quotient(&h(2, 1, &[(Param::D(1), 1)])).unwrap();
        assert_eq!((r.case, r.dim()), (RestrictedCase::TruncatedPolynomial, 4));
        assert!(r.pass(), "{:?}", r.checks);
        let r = restricted_quotient(&h(3, 1, &[(Param::D(0), 1)])).unwrap();
        assert_eq!((r.case, r.dim()), (RestrictedCase::RestrictedLie, 9));
        assert!(r.pass(), "{:?}", r.checks);
        let r = restricted_quotient(&h(2, 1, &[(Param::D(0), 1), (Param::B(0), 1)])).unwrap();
        assert_eq!((r.case, r.dim()), (RestrictedCase::ThreeGenerator, 8));
        assert!(r.pass(), "{:?}", r.checks);
        let r = restricted_quotient(&h(2, 1, &[(Param::D(1), 1), (Param::B(0), 1)])).unwrap();
        assert_eq!((r.case, r.dim()), (RestrictedCase::TruncatedWitt, 8));
        assert!(r.pass(), "{:?}", r.checks);
    }

    #[test]
    fn findim_repr_roundtrip() {
        let a = h(2, 1, &[(Param::D(0), 1)]);
        let f = a.field().clone();
        let q = quotient_fiber(&a, f.one(), f.one()).unwrap();
        let r = q.algebra().to_repr();
        assert_eq!(&FinDimAlgebra::from_repr(&r).unwrap(), q.algebra());
    }
}
