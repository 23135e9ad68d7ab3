//! Centrality, the central element `z` and the Hopf center of `H(d, b, c)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldElt;
use crate::ihoe2::{Ihoe2, Param};
use crate::orealg::{Algebra, OrePresentation, PbwElement, TermRepr};
use crate::tensoralg::{TensorAlgebra, TensorElement, TensorTermRepr};

/// Outcome of a centrality test; the witness is a nonzero `[h, X_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralityCheck {
    pub central: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, Vec<TermRepr>)>,
}

pub fn is_central(base: &OrePresentation, h: &PbwElement) -> Result<CentralityCheck> {
    let f = base.field();
    for i in 0..base.n() {
        let c = base.commutator(h, &base.gen(i))?;
        if !c.is_zero() {
            return Ok(CentralityCheck {
                central: false,
                witness: Some((i, c.to_repr(f))),
            });
        }
    }
    Ok(CentralityCheck {
        central: true,
        witness: None,
    })
}

/// Terms of a two-fold tensor that lie in `k[X_1] ⊗ k[X_1]`, with every
/// `X_1`-exponent divisible by `q` when `q > 1`.
fn in_x1_powers(t: &TensorElement, q: i32) -> bool {
    let n = t.n();
    t.terms().all(|(k, _)| {
        (0..2).all(|side| {
            let m = &k[side * n..(side + 1) * n];
            m[1..].iter().all(|&e| e == 0) && m[0] % q == 0
        })
    })
}

/// `b = X_2⊗1 + 1⊗X_2`.
fn b_element(h: &Ihoe2, sq: &TensorAlgebra) -> TensorElement {
    let x2 = h.x2();
    let one = h.base().one();
    sq.pure(&[&x2, &one]).add(h.field(), &sq.pure(&[&one, &x2]))
}

/// Pieces of `Δ(z)`.
struct ZTail {
    /// `w^p - d_0^{p-1} w + ad_b^{p-1}(w)`
    full: TensorElement,
    /// `-d_0^{p-1} w + ad_b^{p-1}(w)`
    membership: TensorElement,
    /// `ad_b^i(w)` for `i = 1..p-1`
    ad_powers: Vec<TensorElement>,
}

fn z_tail(h: &Ihoe2) -> Result<ZTail> {
    let f = h.field();
    let p = h.p();
    let sq = TensorAlgebra::new(h.base().clone(), 2);
    let w = h.tail();
    let b = b_element(h, &sq);
    let mut ad_powers = Vec::with_capacity(p as usize - 1);
    let mut cur = w.clone();
    for _ in 1..p {
        cur = sq.commutator(&b, &cur)?;
        ad_powers.push(cur.clone());
    }
    let d0 = f.pow(h.params().d(0), p as u64 - 1);
    let membership = cur.sub(f, &w.scale(f, d0));
    let full = sq.pth_power(&w)?.add(f, &membership);
    Ok(ZTail {
        full,
        membership,
        ad_powers,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaZReport {
    /// `Δ(z)` computed through the coproduct equals the assembled right side.
    pub pass: bool,
    /// The tail lies in `k[X_1]⊗k[X_1]`.
    pub tail_in_x1: bool,
    /// The tail lies in `k[X_1^p]⊗k[X_1^p]`.
    pub tail_in_x1p: bool,
    pub tail: Vec<TensorTermRepr>,
}

/// Compares `Δ(z)` with `z⊗1 + 1⊗z + w^p - d_0^{p-1} w + ad_b^{p-1}(w)`.
pub fn delta_z_check(h: &Ihoe2) -> Result<DeltaZReport> {
    let f = h.field();
    let sq = TensorAlgebra::new(h.base().clone(), 2);
    let z = h.z()?;
    let lhs = h.hopf().coproduct(&z)?;
    let one = h.base().one();
    let tail = z_tail(h)?.full;
    let rhs = sq
        .pure(&[&z, &one])
        .add(f, &sq.pure(&[&one, &z]))
        .add(f, &tail);
    Ok(DeltaZReport {
        pass: lhs == rhs,
        tail_in_x1: in_x1_powers(&tail, 1),
        tail_in_x1p: in_x1_powers(&tail, h.p() as i32),
        tail: tail.to_repr(f),
    })
}

/// `ad_b^i(w) ≡ 0` modulo `X_1^p H⊗H + H⊗X_1^p H` for `i = 1..p-1`.
pub fn ad_powers_vanish_mod_p(h: &Ihoe2) -> Result<bool> {
    let p = h.p() as i32;
    Ok(z_tail(h)?
        .ad_powers
        .iter()
        .all(|t| t.reduce_congruence(p, p).is_zero()))
}

/// `Δ(z^p) - z^p⊗1 - 1⊗z^p` equals the `p`-th power of the tail of `Δ(z)`
/// and lies in `k[X_1^p]⊗k[X_1^p]`, so `k[X_1^p, z^p]` is a Hopf subalgebra.
pub fn delta_zp_check(h: &Ihoe2) -> Result<bool> {
    let f = h.field();
    let sq = TensorAlgebra::new(h.base().clone(), 2);
    let zp = h.base().pth_power(&h.z()?)?;
    let one = h.base().one();
    let rest = h
        .hopf()
        .coproduct(&zp)?
        .sub(f, &sq.pure(&[&zp, &one]))
        .sub(f, &sq.pure(&[&one, &zp]));
    let expected = sq.pth_power(&z_tail(h)?.full)?;
    Ok(rest == expected && in_x1_powers(&rest, h.p() as i32))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterVerdict {
    #[serde(rename = "k[X_1^p, z]")]
    XpZ,
    #[serde(rename = "k[X_1^p, z^p]")]
    XpZp,
}

impl std::fmt::Display for CenterVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CenterVerdict::XpZ => "k[X_1^p, z]",
            CenterVerdict::XpZp => "k[X_1^p, z^p]",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfCenterReport {
    pub verdict: CenterVerdict,
    /// `-d_0^{p-1} w + ad_b^{p-1}(w)`
    pub tail: Vec<TensorTermRepr>,
    /// Whether the tail lies in `k[X_1^p]⊗k[X_1^p]`.
    pub membership: bool,
}

/// Decides the Hopf center from the tail of `Δ(z)` and demands agreement
/// with the criterion `b_0 = 0`.
pub fn hopf_center(h: &Ihoe2) -> Result<HopfCenterReport> {
    if h.params().is_commutative() {
        return Err(Error::Commutative);
    }
    let f = h.field();
    let tail = z_tail(h)?.membership;
    let membership = in_x1_powers(&tail, h.p() as i32);
    let b0_zero = h.params().get(Param::B(0)).is_zero();
    if membership != b0_zero {
        return Err(Error::Inconsistent(format!(
            "tail membership {membership} disagrees with b_0 = 0 being {b0_zero}"
        )));
    }
    Ok(HopfCenterReport {
        verdict: if membership {
            CenterVerdict::XpZ
        } else {
            CenterVerdict::XpZp
        },
        tail: tail.to_repr(f),
        membership,
    })
}

/// Coordinates `(q, r, i, j)` of `h = Σ c (X_1^p)^q z^r X_1^i X_2^j` with
/// `0 ≤ i, j < p`.
pub type CenterCoords = BTreeMap<[u32; 4], FieldElt>;

/// Writes `h` over the basis `{X_1^i X_2^j : 0 ≤ i, j < p}` of `H` as a
/// module over `k[X_1^p, z]`.
pub fn decompose_over_center(h: &Ihoe2, x: &PbwElement) -> Result<CenterCoords> {
    let f = h.field();
    let p = h.p() as i32;
    let mut rest = x.clone();
    let mut out = CenterCoords::new();
    // the leading term in X_2 (then X_1) strictly drops at every step
    while let Some((m, c)) = rest
        .terms()
        .max_by_key(|(m, _)| (m[1], m[0]))
        .map(|(m, c)| (m.clone(), c))
    {
        if m[0] < 0 || m[1] < 0 {
            return Err(Error::InvalidParams("negative exponent".into()));
        }
        let key = [(m[0] / p) as u32, (m[1] / p) as u32, (m[0] % p) as u32, (m[1] % p) as u32];
        let basis = recompose_term(h, key)?;
        rest = rest.sub(f, &basis.scale(f, c));
        let entry = out.entry(key).or_insert(FieldElt::ZERO);
        *entry = f.add(*entry, c);
        if entry.is_zero() {
            out.remove(&key);
        }
    }
    Ok(out)
}

fn recompose_term(h: &Ihoe2, [q, r, i, j]: [u32; 4]) -> Result<PbwElement> {
    let base = h.base();
    let p = h.p() as i32;
    let lead = base.mono(&[p * q as i32 + i as i32, 0]);
    let zr = base.pow(&h.z()?, r)?;
    let tail = base.mono(&[0, j as i32]);
    base.mul(&base.mul(&lead, &zr)?, &tail)
}

pub fn recompose(h: &Ihoe2, coords: &CenterCoords) -> Result<PbwElement> {
    let f = h.field();
    let mut out = PbwElement::zero();
    for (&key, &c) in coords {
        out.add_scaled(f, &recompose_term(h, key)?, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use crate::ihoe2::Ihoe2Params;

    fn h(p: u32, entries: &[(Param, i64)]) -> Ihoe2 {
        let f = FieldCtx::new(p, 1).unwrap();
        let mut params = Ihoe2Params::zero(&f);
        for &(k, v) in entries {
            params.set(k, f.from_int(v)).unwrap();
        }
        Ihoe2::new(params, None).unwrap()
    }

    #[test]
    fn central_elements() {
        let a = h(3, &[(Param::D(0), 1), (Param::B(0), 1)]);
        let base = a.base();
        assert!(is_central(base, &base.mono(&[3, 0])).unwrap().central);
        assert!(is_central(base, &a.z().unwrap()).unwrap().central);
        let b = h(2, &[(Param::D(0), 1)]);
        let r = is_central(b.base(), &b.x1()).unwrap();
        assert!(!r.central);
        // [X_1, X_2] = -X_1
        assert_eq!(r.witness.unwrap().0, 1);
    }

    #[test]
    fn delta_z_examples() {
        let a = h(2, &[(Param::D(0), 1), (Param::B(0), 1)]);
        let r = delta_z_check(&a).unwrap();
        assert!(r.pass && r.tail_in_x1 && !r.tail_in_x1p);
        let a = h(3, &[(Param::D(0), 1)]);
        let r = delta_z_check(&a).unwrap();
        assert!(r.pass && r.tail.is_empty());
        let a = h(3, &[(Param::D(0), 1), (Param::C(0, 1), 1)]);
        let r = delta_z_check(&a).unwrap();
        assert!(r.pass && r.tail_in_x1p);
    }

    #[test]
    fn hopf_center_examples() {
        let v = |a: &Ihoe2| hopf_center(a).unwrap().verdict;
        assert_eq!(v(&h(3, &[(Param::D(0), 1), (Param::C(0, 1), 1)])), CenterVerdict::XpZ);
        assert_eq!(v(&h(3, &[(Param::D(0), 1), (Param::B(0), 1)])), CenterVerdict::XpZp);
        assert_eq!(v(&h(2, &[(Param::D(1), 1), (Param::B(0), 1)])), CenterVerdict::XpZp);
        assert_eq!(hopf_center(&h(3, &[(Param::B(0), 1)])).unwrap_err(), Error::Commutative);
    }

    #[test]
    fn mod_p_and_z_power() {
        let a = h(3, &[(Param::D(0), 2), (Param::B(0), 1), (Param::C(0, 1), 1)]);
        assert!(ad_powers_vanish_mod_p(&a).unwrap());
        let a = h(2, &[(Param::D(0), 1), (Param::B(0), 1), (Param::D(1), 1)]);
        assert!(delta_zp_check(&a).unwrap());
    }

    #[test]
    fn free_over_center() {
        let a = h(3, &[(Param::D(0), 1), (Param::D(1), 2)]);
        for i in 0..6 {
            for j in 0..6 {
                let x = a.base().mono(&[i, j]);
                let coords = decompose_over_center(&a, &x).unwrap();
                assert!(coords.keys().all(|k| k[2] < 3 && k[3] < 3));
                assert_eq!(recompose(&a, &coords).unwrap(), x);
            }
        }
    }
}
