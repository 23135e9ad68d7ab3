//! Finite fields `F_{p^m}` built directly over the prime field.
//!
//! Elements are stored as the packed base-`p` integer of their coordinate
//! vector, so they are `Copy` and totally ordered. All arithmetic goes through
//! a shared [`FieldCtx`].

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order we are willing to tabulate.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;
/// Largest total extension degree used when searching for splitting fields.
pub const MAX_EXTENSION_DEGREE: u32 = 6;

/// A field element: packed coordinates `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
/// with respect to the power basis `1, g, ..., g^{m-1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElt(u32);

impl FieldElt {
    pub const ZERO: FieldElt = FieldElt(0);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub type Field = Arc<FieldCtx>;

/// Arithmetic context for `F_{p^m}`.
pub struct FieldCtx {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.p, self.m, self.modulus)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

/// Serialized form of a field context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus_coeffs: Option<Vec<u32>>,
}

/// A coefficient in input files: an integer (reduced into the prime field)
/// or an explicit coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffRepr {
    Int(i64),
    Coords(Vec<u32>),
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over F_p, coefficients low to high.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let q = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (k, &bk) in b.iter().enumerate() {
            let t = (q as u64 * bk as u64 % p as u64) as u32;
            r[shift + k] = (r[shift + k] + p - t) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut base = a as u64 % p as u64;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn digits(mut code: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(code % p);
        code /= p;
    }
    out
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for dg in 1..=deg / 2 {
        let count = p.pow(dg as u32);
        for code in 0..count {
            let mut g = digits(code, p, dg);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree `m` over `F_p`,
/// comparing coefficients from the top down.
fn least_irreducible(p: u32, m: u32) -> Option<Vec<u32>> {
    if m == 1 {
        return Some(vec![0, 1]);
    }
    let count = p.checked_pow(m)?;
    (0..count).find_map(|code| {
        let mut f = digits(code, p, m as usize);
        f.push(1);
        if f[0] != 0 && is_irreducible(&f, p) {
            Some(f)
        } else {
            None
        }
    })
}

impl FieldCtx {
    /// Builds `F_{p^m}` with the deterministic (lex-least) modulus.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_ORDER);
        let Some(order) = order else {
            return Err(Error::FieldTooLarge { p, m });
        };
        let order = order as u32;
        let modulus = least_irreducible(p, m)
            .ok_or_else(|| Error::Inconsistent(format!("no irreducible of degree {m} over F_{p}")))?;
        let mut ctx = FieldCtx {
            p,
            m,
            order,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        ctx.build_tables()?;
        Ok(Arc::new(ctx))
    }

    /// Builds the field from a serialized spec, checking any supplied modulus.
    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        let f = FieldCtx::new(spec.p, spec.m)?;
        if let Some(coeffs) = &spec.modulus_coeffs {
            if coeffs != &f.modulus {
                return Err(Error::BadCoords(format!(
                    "modulus {coeffs:?} differs from the canonical {:?}",
                    f.modulus
                )));
            }
        }
        Ok(f)
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            m: self.m,
            modulus_coeffs: Some(self.modulus.clone()),
        }
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let m = self.m as usize;
        let p = self.p;
        let da = digits(a, p, m);
        let db = digits(b, p, m);
        let mut prod = vec![0u32; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        let r = poly_rem(&prod, &self.modulus, p);
        self.pack(&r)
    }

    fn pack(&self, coords: &[u32]) -> u32 {
        coords.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    fn build_tables(&mut self) -> Result<()> {
        let q = self.order;
        let group = (q - 1) as usize;
        for cand in 1..q {
            let mut exp = Vec::with_capacity(group);
            let mut x = 1u32;
            let mut ok = true;
            for k in 0..group {
                if k > 0 && x == 1 {
                    ok = false;
                    break;
                }
                exp.push(x);
                x = if self.m == 1 {
                    (x as u64 * cand as u64 % self.p as u64) as u32
                } else {
                    self.slow_mul(x, cand)
                };
            }
            if ok && x == 1 {
                let mut log = vec![0u32; q as usize];
                for (k, &v) in exp.iter().enumerate() {
                    log[v as usize] = k as u32;
                }
                self.exp = exp;
                self.log = log;
                return Ok(());
            }
        }
        Err(Error::Inconsistent("no primitive element".into()))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus_coeffs(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElt {
        FieldElt(0)
    }

    pub fn one(&self) -> FieldElt {
        FieldElt(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElt {
        FieldElt(n.rem_euclid(self.p as i64) as u32)
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElt {
        FieldElt(self.exp.get(1).copied().unwrap_or(1))
    }

    pub fn coords(&self, x: FieldElt) -> Vec<u32> {
        digits(x.0, self.p, self.m as usize)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElt> {
        if coords.len() > self.m as usize {
            return Err(Error::BadCoords(format!(
                "{} coordinates for a degree-{} field",
                coords.len(),
                self.m
            )));
        }
        if let Some(&bad) = coords.iter().find(|&&c| c >= self.p) {
            return Err(Error::BadCoords(format!("coordinate {bad} not below {}", self.p)));
        }
        Ok(FieldElt(self.pack(coords)))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElt> {
        (0..self.order).map(FieldElt)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElt> {
        (1..self.order).map(FieldElt)
    }

    pub fn add(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        if self.m == 1 {
            let s = a.0 + b.0;
            return FieldElt(if s >= self.p { s - self.p } else { s });
        }
        if self.p == 2 {
            return FieldElt(a.0 ^ b.0);
        }
        self.digitwise(a.0, b.0, |x, y, p| (x + y) % p)
    }

    pub fn sub(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        if self.m == 1 {
            return FieldElt(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 });
        }
        if self.p == 2 {
            return FieldElt(a.0 ^ b.0);
        }
        self.digitwise(a.0, b.0, |x, y, p| (x + p - y) % p)
    }

    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32, u32) -> u32) -> FieldElt {
        let p = self.p;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += op(a % p, b % p, p) * place;
            place *= p;
            a /= p;
            b /= p;
        }
        FieldElt(out)
    }

    pub fn neg(&self, a: FieldElt) -> FieldElt {
        self.sub(FieldElt(0), a)
    }

    pub fn mul(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        if a.0 == 0 || b.0 == 0 {
            return FieldElt(0);
        }
        if self.m == 1 {
            return FieldElt((a.0 as u64 * b.0 as u64 % self.p as u64) as u32);
        }
        let n = self.exp.len();
        let k = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        FieldElt(self.exp[if k >= n { k - n } else { k }])
    }

    pub fn inv(&self, a: FieldElt) -> Option<FieldElt> {
        if a.0 == 0 {
            return None;
        }
        let n = self.exp.len();
        let k = self.log[a.0 as usize] as usize;
        Some(FieldElt(self.exp[(n - k) % n]))
    }

    pub fn div(&self, a: FieldElt, b: FieldElt) -> Result<FieldElt> {
        self.inv(b).map(|bi| self.mul(a, bi)).ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, a: FieldElt, e: u64) -> FieldElt {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return FieldElt(0);
        }
        let n = self.exp.len() as u64;
        let k = (self.log[a.0 as usize] as u64 * (e % n)) % n;
        FieldElt(self.exp[k as usize])
    }

    /// `a^e` for a signed exponent; fails on `0^e` with `e < 0`.
    pub fn pow_signed(&self, a: FieldElt, e: i64) -> Result<FieldElt> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            let ai = self.inv(a).ok_or(Error::DivisionByZero)?;
            Ok(self.pow(ai, e.unsigned_abs()))
        }
    }

    pub fn frobenius(&self, a: FieldElt) -> FieldElt {
        self.pow(a, self.p as u64)
    }

    /// `a^{p^s}`.
    pub fn frobenius_iter(&self, a: FieldElt, s: u32) -> FieldElt {
        (0..s % self.m.max(1)).fold(a, |x, _| self.frobenius(x))
    }

    /// The unique `y` with `y^p = x`.
    pub fn pth_root(&self, x: FieldElt) -> FieldElt {
        self.frobenius_iter(x, self.m - 1)
    }

    /// Absolute trace to `F_p`.
    pub fn trace(&self, x: FieldElt) -> FieldElt {
        let mut acc = FieldElt(0);
        let mut y = x;
        for _ in 0..self.m {
            acc = self.add(acc, y);
            y = self.frobenius(y);
        }
        acc
    }

    pub fn sum(&self, xs: impl IntoIterator<Item = FieldElt>) -> FieldElt {
        xs.into_iter().fold(FieldElt(0), |a, b| self.add(a, b))
    }

    /// Roots of `y^p - y = c` in this field.
    pub fn artin_schreier_roots(&self, c: FieldElt) -> ArtinSchreier {
        let first = self
            .elements()
            .find(|&y| self.sub(self.frobenius(y), y) == c);
        match first {
            Some(y) => ArtinSchreier {
                roots: (0..self.p as i64)
                    .map(|k| self.add(y, self.from_int(k)))
                    .collect(),
                split_multiplier: 1,
            },
            None => ArtinSchreier {
                roots: Vec::new(),
                split_multiplier: self.p,
            },
        }
    }

    pub fn parse_coeff(&self, c: &CoeffRepr) -> Result<FieldElt> {
        match c {
            CoeffRepr::Int(n) => Ok(self.from_int(*n)),
            CoeffRepr::Coords(v) => self.from_coords(v),
        }
    }

    pub fn coeff_repr(&self, x: FieldElt) -> CoeffRepr {
        CoeffRepr::Coords(self.coords(x))
    }

    pub fn format(&self, x: FieldElt) -> String {
        if self.m == 1 {
            x.0.to_string()
        } else {
            format!("{:?}", self.coords(x))
        }
    }
}

/// Roots of an Artin-Schreier equation, or the degree of the extension
/// that splits it when there are none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinSchreier {
    pub roots: Vec<FieldElt>,
    pub split_multiplier: u32,
}

/// A field embedding `F_{p^m} -> F_{p^{mk}}`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    basis_images: Vec<FieldElt>,
}

impl Embedding {
    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn apply(&self, x: FieldElt) -> FieldElt {
        let t = &self.target;
        self.source
            .coords(x)
            .iter()
            .zip(&self.basis_images)
            .fold(t.zero(), |acc, (&c, &b)| t.add(acc, t.mul(t.from_int(c as i64), b)))
    }

    pub fn identity(field: &Field) -> Embedding {
        let basis_images = (0..field.m())
            .map(|k| field.pow(field.generator(), k as u64))
            .collect();
        Embedding {
            source: field.clone(),
            target: field.clone(),
            basis_images,
        }
    }
}

impl FieldCtx {
    /// The class of the polynomial variable (power-basis generator); `1` in a
    /// prime field.
    pub fn generator(&self) -> FieldElt {
        if self.m == 1 {
            FieldElt(1)
        } else {
            FieldElt(self.p)
        }
    }
}

/// Embeds `source` into `target` by sending the power-basis generator to the
/// least root of the source modulus.
pub fn embed(source: &Field, target: &Field) -> Result<Embedding> {
    if source.p() != target.p() || target.m() % source.m() != 0 {
        return Err(Error::FieldMismatch);
    }
    if source.m() == 1 {
        return Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            basis_images: vec![target.one()],
        });
    }
    let poly = source.modulus_coeffs();
    let root = target
        .elements()
        .find(|&x| {
            let v = poly.iter().rev().fold(target.zero(), |acc, &c| {
                target.add(target.mul(acc, x), target.from_int(c as i64))
            });
            v.is_zero()
        })
        .ok_or_else(|| Error::Inconsistent("modulus has no root in the target".into()))?;
    let basis_images = (0..source.m()).map(|k| target.pow(root, k as u64)).collect();
    Ok(Embedding {
        source: source.clone(),
        target: target.clone(),
        basis_images,
    })
}

/// `F_{p^{mk}}` together with the embedding of `field`.
pub fn extend(field: &Field, k: u32) -> Result<(Field, Embedding)> {
    let total = field.m() * k;
    if total > MAX_EXTENSION_DEGREE && k > 1 {
        return Err(Error::ExtensionTooLarge(total));
    }
    let big = FieldCtx::new(field.p(), total)?;
    let e = embed(field, &big)?;
    Ok((big, e))
}
