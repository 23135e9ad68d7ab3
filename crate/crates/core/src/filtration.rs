//! Degree filtration of an iterated Hopf Ore extension and the check that
//! its associated graded ring is a commutative polynomial ring.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::hopf::HopfStructure;
use crate::orealg::{Algebra, Mono, OreData, OrePresentation, PbwElement};
use crate::tensoralg::TensorElement;

/// `X_i X_j = X_j X_i + a_{ji} X_i + c_{ji}` for `j < i` (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationData {
    pub i: usize,
    pub j: usize,
    /// `σ_i(X_j) - X_j`
    pub a: PbwElement,
    /// `δ_i(X_j)`
    pub c: PbwElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeAssignment {
    pub degrees: Vec<u64>,
    /// `D(w_i)`: the largest degree of a left tensor factor of the tail.
    pub tail_caps: Vec<u64>,
    pub relations: Vec<RelationData>,
}

/// Weighted degree of a monomial.
fn mono_degree(degrees: &[u64], m: &[i32]) -> u64 {
    m.iter().zip(degrees).map(|(&e, &d)| e as u64 * d).sum()
}

/// Largest weighted degree over the monomial support; 0 for scalars and 0.
pub fn deg(a: &DegreeAssignment, h: &PbwElement) -> u64 {
    h.terms()
        .map(|(m, _)| mono_degree(&a.degrees, m))
        .max()
        .unwrap_or(0)
}

fn tail_cap(degrees: &[u64], w: &TensorElement) -> u64 {
    let n = w.n();
    w.terms()
        .map(|(k, _)| mono_degree(degrees, &k[..n]))
        .max()
        .unwrap_or(0)
}

/// Minimal degrees with `d_1 = 1`, `d_i > D(w_i)` and `d_i ≥ deg c_{ji}`.
pub fn assign_degrees(hs: &HopfStructure) -> Result<DegreeAssignment> {
    let base = hs.base();
    if base.laurent_first() {
        return Err(Error::Unsupported("degree filtration needs a polynomial base".into()));
    }
    let f = base.field();
    let n = base.n();
    let mut degrees: Vec<u64> = Vec::with_capacity(n);
    let mut tail_caps = Vec::with_capacity(n);
    let mut relations = Vec::new();
    for i in 0..n {
        let mut rels = Vec::with_capacity(i);
        for j in 0..i {
            let a = base.sigma_image(i, j).sub(f, &base.gen(j));
            if a.max_generator().is_some_and(|g| g >= j) {
                return Err(Error::Unsupported(format!(
                    "σ_{}(X_{}) - X_{} involves X_{} or later",
                    i + 1,
                    j + 1,
                    j + 1,
                    j + 1
                )));
            }
            rels.push(RelationData {
                i,
                j,
                a,
                c: base.delta_image(i, j).clone(),
            });
        }
        let cap = tail_cap(&degrees, &hs.tail(i));
        let c_max = rels
            .iter()
            .map(|r| r.c.terms().map(|(m, _)| mono_degree(&degrees, m)).max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        let d = if i == 0 { 1 } else { (cap + 1).max(c_max).max(1) };
        degrees.push(d);
        tail_caps.push(cap);
        relations.extend(rels);
    }
    Ok(DegreeAssignment {
        degrees,
        tail_caps,
        relations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDegrees {
    pub i: usize,
    pub j: usize,
    /// `deg(X_i X_j - X_j X_i)`, below `d_i + d_j` when the check passes.
    pub commutator_degree: u64,
    pub bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedReport {
    pub degrees: Vec<u64>,
    pub tail_caps: Vec<u64>,
    pub relations: Vec<RelationDegrees>,
    /// `d_i > D(w_i) ≥ deg a_{il}` and `d_i ≥ deg c_{ji}`.
    pub bounds_hold: bool,
    pub commutators_drop: bool,
    pub submultiplicative: bool,
    pub word_degrees: bool,
    pub graded_dimension: bool,
    pub samples: usize,
    pub pass: bool,
}

fn random_element(rng: &mut ChaCha8Rng, base: &OrePresentation, max_exp: i32) -> PbwElement {
    let f = base.field();
    let mut h = PbwElement::zero();
    for _ in 0..rng.gen_range(1..4) {
        let m: Mono = (0..base.n()).map(|_| rng.gen_range(0..=max_exp)).collect();
        let c = f.from_int(rng.gen_range(1..f.p() as i64));
        h.add_term(f, m, c);
    }
    h
}

/// Number of monomials of weighted degree `k` for `k ≤ top`, by enumeration
/// and by the partition recursion for `Π 1/(1 - t^{d_i})`.
fn graded_counts(degrees: &[u64], top: u64) -> (Vec<u64>, Vec<u64>) {
    let mut enumerated = vec![0u64; top as usize + 1];
    let mut stack = vec![(0usize, 0u64)];
    while let Some((i, d)) = stack.pop() {
        if i == degrees.len() {
            enumerated[d as usize] += 1;
            continue;
        }
        let mut e = d;
        while e <= top {
            stack.push((i + 1, e));
            e += degrees[i];
        }
    }
    let mut series = vec![0u64; top as usize + 1];
    series[0] = 1;
    for &d in degrees {
        for k in d as usize..=top as usize {
            series[k] += series[k - d as usize];
        }
    }
    (enumerated, series)
}

/// Checks that commutators drop in degree, that `deg` is submultiplicative
/// and additive on words, and that graded dimensions match a polynomial ring.
pub fn graded_commutative_report(
    hs: &HopfStructure,
    a: &DegreeAssignment,
    samples: usize,
    seed: u64,
) -> Result<GradedReport> {
    let base = hs.base();
    let n = base.n();
    let d = &a.degrees;
    let mut bounds_hold = d.first().is_none_or(|&d1| d1 == 1);
    for r in &a.relations {
        bounds_hold &= d[r.j] > a.tail_caps[r.j] && deg(a, &r.a) <= a.tail_caps[r.j] && d[r.i] >= deg(a, &r.c);
    }
    let mut relations = Vec::new();
    let mut commutators_drop = true;
    for i in 0..n {
        for j in 0..i {
            let c = base.commutator(&base.gen(i), &base.gen(j))?;
            let cd = deg(a, &c);
            let bound = d[i] + d[j];
            commutators_drop &= c.is_zero() || cd < bound;
            relations.push(RelationDegrees {
                i,
                j,
                commutator_degree: cd,
                bound,
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_exp = 2;
    let mut submultiplicative = true;
    let mut word_degrees = true;
    for _ in 0..samples {
        let x = random_element(&mut rng, base, max_exp);
        let y = random_element(&mut rng, base, max_exp);
        submultiplicative &= deg(a, &base.mul(&x, &y)?) <= deg(a, &x) + deg(a, &y);
        // an unordered word in the generators has the weighted degree of its letters
        let len = rng.gen_range(1..6);
        let mut word = base.one();
        let mut weight = 0;
        for _ in 0..len {
            let g = rng.gen_range(0..n);
            word = base.mul(&word, &base.gen(g))?;
            weight += d[g];
        }
        word_degrees &= deg(a, &word) == weight;
    }

    let top = 4 * d.iter().copied().max().unwrap_or(1);
    let (enumerated, series) = graded_counts(d, top);
    let graded_dimension = enumerated == series;
    let pass = bounds_hold && commutators_drop && submultiplicative && word_degrees && graded_dimension;
    Ok(GradedReport {
        degrees: a.degrees.clone(),
        tail_caps: a.tail_caps.clone(),
        relations,
        bounds_hold,
        commutators_drop,
        submultiplicative,
        word_degrees,
        graded_dimension,
        samples,
        pass,
    })
}

fn primitive_hopf(field: &Field, data: OreData, cap: u32) -> Result<Arc<HopfStructure>> {
    let n = data.n;
    let base = OrePresentation::new(field.clone(), data, Some(cap))?;
    HopfStructure::from_tails(base, vec![TensorElement::zero(2, n); n])
}

/// `U(h_3)` with `[X_3, X_2] = X_1` and `X_1` central, all generators primitive.
pub fn heisenberg(field: &Field) -> Result<Arc<HopfStructure>> {
    let mut data = OreData::trivial(field, 3);
    data.delta_images[2][1] = crate::orealg::generator(field, 3, 0);
    primitive_hopf(field, data, 32)
}

/// `U(sl_2)` on `e, h, f` with `[h,e] = 2e`, `[f,e] = -h`, `[f,h] = 2f`,
/// written as `k[e][h; δ][f; σ, δ]` with `σ(h) = h + 2`.
pub fn sl2_tower(field: &Field) -> Result<Arc<HopfStructure>> {
    let g = |i| crate::orealg::generator(field, 3, i);
    let two = field.from_int(2);
    let mut data = OreData::trivial(field, 3);
    data.delta_images[1][0] = g(0).scale(field, two);
    data.sigma_images[2][1] = g(1).add(field, &PbwElement::constant(3, two));
    data.delta_images[2][0] = g(1).neg(field);
    primitive_hopf(field, data, 32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use crate::ihoe2::{build_h, Ihoe2Params, Param};

    #[test]
    fn two_step_degrees() {
        let f = FieldCtx::new(3, 1).unwrap();
        let p = Ihoe2Params::zero(&f).with(Param::D(0), f.one()).unwrap();
        let a = assign_degrees(&build_h(&p, None).unwrap()).unwrap();
        assert_eq!(a.degrees, vec![1, 1]);
        let f2 = FieldCtx::new(2, 1).unwrap();
        let p = Ihoe2Params::zero(&f2).with(Param::B(0), f2.one()).unwrap();
        let hs = build_h(&p, None).unwrap();
        let a = assign_degrees(&hs).unwrap();
        assert_eq!(a.degrees, vec![1, 2]);
        assert!(graded_commutative_report(&hs, &a, 20, 0).unwrap().pass);
    }

    #[test]
    fn one_step() {
        let f = FieldCtx::new(5, 1).unwrap();
        let hs = primitive_hopf(&f, OreData::trivial(&f, 1), 16).unwrap();
        assert_eq!(assign_degrees(&hs).unwrap().degrees, vec![1]);
    }

    #[test]
    fn deg_examples() {
        let a = DegreeAssignment {
            degrees: vec![1, 2],
            tail_caps: vec![0, 1],
            relations: vec![],
        };
        let f = FieldCtx::new(3, 1).unwrap();
        assert_eq!(deg(&a, &PbwElement::monomial(Mono::from_slice(&[1, 1]), f.one())), 3);
        assert_eq!(deg(&a, &PbwElement::constant(2, f.one())), 0);
        let hs = build_h(&Ihoe2Params::zero(&f).with(Param::D(0), f.one()).unwrap(), None).unwrap();
        let base = hs.base();
        let yx = base.mul(&base.gen(1), &base.gen(0)).unwrap();
        let xy = base.mul(&base.gen(0), &base.gen(1)).unwrap();
        assert_eq!(deg(&a, &yx), deg(&a, &xy));
    }

    #[test]
    fn fixtures() {
        let f = FieldCtx::new(3, 1).unwrap();
        for hs in [heisenberg(&f).unwrap(), sl2_tower(&f).unwrap()] {
            assert!(hs.verify_hopf(4, 10, 0).unwrap().all_pass());
            let a = assign_degrees(&hs).unwrap();
            assert_eq!(a.degrees, vec![1, 1, 1]);
            let r = graded_commutative_report(&hs, &a, 30, 1).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn partition_counts() {
        let (e, s) = graded_counts(&[1, 2, 2], 10);
        assert_eq!(e, s);
        assert_eq!(e[2], 3);
    }
}
