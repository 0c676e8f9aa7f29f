//! Vectorial maps F_2^m -> F_2^m as lookup tables, and the structural
//! properties the concatenation machinery needs: permutation sum triples
//! whose inverses add up, second-derivative non-vanishing, APN-ness,
//! component linear structures, monomial maps, and the two
//! Maiorana-McFarland builders.

use std::fmt;

use crate::boolfn::{dot, TruthTable};
use crate::error::{Error, Result};
use crate::gf2m::FieldContext;

/// A map F_2^m -> F_2^m stored as a 2^m-entry table of image indices.
#[derive(Clone, PartialEq, Eq)]
pub struct PointMap {
    m: u32,
    table: Vec<u32>,
    provenance: Option<String>,
}

impl PointMap {
    pub fn identity(m: u32) -> Result<Self> {
        check_m(m)?;
        Ok(PointMap {
            m,
            table: (0..1u32 << m).collect(),
            provenance: None,
        })
    }

    pub fn from_table(m: u32, table: Vec<u32>) -> Result<Self> {
        check_m(m)?;
        if table.len() != 1usize << m {
            return Err(Error::BadTableLength {
                expected: 1usize << m,
                got: table.len(),
            });
        }
        if let Some(&v) = table.iter().find(|&&v| v >= 1u32 << m) {
            return Err(Error::NotInField { value: v, m });
        }
        Ok(PointMap {
            m,
            table,
            provenance: None,
        })
    }

    /// Builds a map from its coordinate functions: `coords[j]` is the
    /// truth table of output bit j.
    pub fn from_coordinates(coords: &[TruthTable]) -> Result<Self> {
        let m = coords.len() as u32;
        check_m(m)?;
        for c in coords {
            if c.n() != m {
                return Err(Error::VariableCountMismatch {
                    left: m,
                    right: c.n(),
                });
            }
        }
        let table = (0..1u32 << m)
            .map(|y| {
                coords
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, c)| acc | (c.get(y) as u32) << j)
            })
            .collect();
        Ok(PointMap {
            m,
            table,
            provenance: None,
        })
    }

    /// The monomial map y -> alpha y^d (0 -> 0). Rejects alpha = 0 and
    /// exponents not coprime with the group order, which would not give
    /// a permutation.
    pub fn monomial(ctx: &FieldContext, alpha: u32, d: u64) -> Result<Self> {
        if alpha == 0 || alpha >= ctx.size() {
            return Err(Error::NotInField {
                value: alpha,
                m: ctx.m(),
            });
        }
        if gcd(d, ctx.order() as u64) != 1 {
            return Err(Error::ExponentNotCoprime {
                d,
                order: ctx.order(),
            });
        }
        check_m(ctx.m())?;
        let table = (0..ctx.size())
            .map(|y| {
                if y == 0 {
                    0
                } else {
                    ctx.mul(alpha, ctx.pow(y, d as i64).expect("nonzero base"))
                }
            })
            .collect();
        Ok(PointMap {
            m: ctx.m(),
            table,
            provenance: Some(format!("monomial alpha=a^{} d={}", ctx.log(alpha).unwrap(), d)),
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn image(&self, y: u32) -> u32 {
        self.table[y as usize]
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn with_provenance(mut self, tag: impl Into<String>) -> Self {
        self.provenance = Some(tag.into());
        self
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.table.len()];
        for &v in &self.table {
            if seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        true
    }

    pub fn inverse(&self) -> Result<PointMap> {
        let mut inv = vec![u32::MAX; self.table.len()];
        for (y, &v) in self.table.iter().enumerate() {
            if inv[v as usize] != u32::MAX {
                return Err(Error::NotPermutation {
                    detail: format!("value {v} hit twice"),
                });
            }
            inv[v as usize] = y as u32;
        }
        Ok(PointMap {
            m: self.m,
            table: inv,
            provenance: None,
        })
    }

    /// Pointwise sum (XOR of images).
    pub fn add(&self, other: &PointMap) -> Result<PointMap> {
        if self.m != other.m {
            return Err(Error::MapSizeMismatch {
                left: self.m,
                right: other.m,
            });
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(PointMap {
            m: self.m,
            table,
            provenance: None,
        })
    }

    /// self after inner: y -> self(inner(y)).
    pub fn compose(&self, inner: &PointMap) -> Result<PointMap> {
        if self.m != inner.m {
            return Err(Error::MapSizeMismatch {
                left: self.m,
                right: inner.m,
            });
        }
        let table = inner.table.iter().map(|&y| self.table[y as usize]).collect();
        Ok(PointMap {
            m: self.m,
            table,
            provenance: None,
        })
    }

    pub fn is_involution(&self) -> bool {
        self.table
            .iter()
            .enumerate()
            .all(|(y, &v)| self.table[v as usize] == y as u32)
    }

    /// Truth table of output bit i.
    pub fn coordinate_tt(&self, i: u32) -> Result<TruthTable> {
        if i >= self.m {
            return Err(Error::InvalidVariableCount { n: i + 1, max: self.m });
        }
        TruthTable::from_fn(self.m, |y| self.table[y as usize] >> i & 1 == 1)
    }

    /// ANF of output bit i, for row-style display of a map.
    pub fn coordinate_anf(&self, i: u32) -> Result<crate::boolfn::AnfForm> {
        Ok(self.coordinate_tt(i)?.anf())
    }
}

impl fmt::Debug for PointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointMap(m={}", self.m)?;
        if let Some(p) = &self.provenance {
            write!(f, ", {p}")?;
        }
        if self.m <= 4 {
            write!(f, ", {:?}", self.table)?;
        }
        write!(f, ")")
    }
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 || m > crate::gf2m::MAX_DEGREE {
        return Err(Error::InvalidFieldDegree {
            m,
            max: crate::gf2m::MAX_DEGREE,
        });
    }
    Ok(())
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Outcome of the permutation-triple check: either the property holds,
/// or a certificate pinpoints the first violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmOutcome {
    Holds,
    /// The pointwise sum of the three maps is not a permutation.
    SumNotPermutation { value: u32, points: (u32, u32) },
    /// The sum is a permutation but its inverse differs from the sum of
    /// the inverses at `point`.
    InverseMismatch {
        point: u32,
        sum_inverse: u32,
        inverse_sum: u32,
    },
}

impl AmOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, AmOutcome::Holds)
    }
}

/// Checks whether three permutations have the property that their sum is
/// a permutation whose inverse is the sum of their inverses. Inputs must
/// themselves be permutations of the same space.
pub fn check_am(p1: &PointMap, p2: &PointMap, p3: &PointMap) -> Result<AmOutcome> {
    for (i, p) in [p1, p2, p3].iter().enumerate() {
        if p.m != p1.m {
            return Err(Error::MapSizeMismatch {
                left: p1.m,
                right: p.m,
            });
        }
        if !p.is_permutation() {
            return Err(Error::NotPermutation {
                detail: format!("input {}", i + 1),
            });
        }
    }
    let sum = p1.add(p2)?.add(p3)?;
    let mut first_preimage = vec![u32::MAX; sum.table.len()];
    for (y, &v) in sum.table.iter().enumerate() {
        if first_preimage[v as usize] != u32::MAX {
            return Ok(AmOutcome::SumNotPermutation {
                value: v,
                points: (first_preimage[v as usize], y as u32),
            });
        }
        first_preimage[v as usize] = y as u32;
    }
    let sum_inv = sum.inverse()?;
    let inv_sum = p1.inverse()?.add(&p2.inverse()?)?.add(&p3.inverse()?)?;
    for y in 0..sum_inv.table.len() {
        if sum_inv.table[y] != inv_sum.table[y] {
            return Ok(AmOutcome::InverseMismatch {
                point: y as u32,
                sum_inverse: sum_inv.table[y],
                inverse_sum: inv_sum.table[y],
            });
        }
    }
    Ok(AmOutcome::Holds)
}

/// Second-derivative non-vanishing: for every pair of linearly
/// independent directions v, w, the value
/// p(y) + p(y+v) + p(y+w) + p(y+v+w) is nonzero at every point.
/// Cost O(2^{3m}) with early exit; intended for m <= 8.
pub fn check_p1(p: &PointMap) -> bool {
    let size = p.table.len();
    for v in 1..size {
        for w in v + 1..size {
            for y in 0..size {
                let val = p.table[y]
                    ^ p.table[y ^ v]
                    ^ p.table[y ^ w]
                    ^ p.table[y ^ v ^ w];
                if val == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Differential uniformity 2: every nonzero direction gives a 2-to-1
/// derivative map.
pub fn is_apn(p: &PointMap) -> bool {
    let size = p.table.len();
    let mut counts = vec![0u32; size];
    for a in 1..size {
        for c in counts.iter_mut() {
            *c = 0;
        }
        for x in 0..size {
            let d = (p.table[x] ^ p.table[x ^ a]) as usize;
            counts[d] += 1;
            if counts[d] > 2 {
                return false;
            }
        }
    }
    true
}

/// Linear structures of one component function b . p(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStructures {
    pub component: u32,
    pub structures: Vec<u32>,
}

/// Per-component linear-structure report over all nonzero components.
#[derive(Clone, Debug)]
pub struct ComponentStructureReport {
    /// True iff every component admits only the trivial structure 0.
    pub all_trivial: bool,
    /// Components with at least one nonzero structure, with the nonzero
    /// structures listed.
    pub nontrivial: Vec<ComponentStructures>,
}

pub fn component_linear_structures(p: &PointMap) -> ComponentStructureReport {
    let mut nontrivial = Vec::new();
    for b in 1..p.table.len() as u32 {
        let component = TruthTable::from_fn(p.m, |x| dot(b, p.table[x as usize]))
            .expect("m validated at map construction");
        let structures: Vec<u32> = component
            .linear_structures()
            .into_iter()
            .filter(|&a| a != 0)
            .collect();
        if !structures.is_empty() {
            nontrivial.push(ComponentStructures {
                component: b,
                structures,
            });
        }
    }
    ComponentStructureReport {
        all_trivial: nontrivial.is_empty(),
        nontrivial,
    }
}

fn check_mm_inputs(pi: &PointMap, h: &TruthTable) -> Result<()> {
    if h.n() != pi.m {
        return Err(Error::VariableCountMismatch {
            left: pi.m,
            right: h.n(),
        });
    }
    if 2 * pi.m > crate::boolfn::MAX_VARS {
        return Err(Error::InvalidVariableCount {
            n: 2 * pi.m,
            max: crate::boolfn::MAX_VARS,
        });
    }
    Ok(())
}

/// Value table of (x, y) -> x . map(y) + h(y) for an arbitrary map, with
/// x in the low m index bits and y in the high m. No bentness claim.
pub fn mm_table_dot(map: &PointMap, h: &TruthTable) -> Result<TruthTable> {
    check_mm_inputs(map, h)?;
    let m = map.m;
    TruthTable::from_fn(2 * m, |z| {
        let x = z & ((1 << m) - 1);
        let y = z >> m;
        dot(x, map.table[y as usize]) ^ h.get(y)
    })
}

/// Maiorana-McFarland bent function x . pi(y) + h(y); rejects
/// non-permutation maps, which would not be bent.
pub fn mm_bent_dot(pi: &PointMap, h: &TruthTable) -> Result<TruthTable> {
    if !pi.is_permutation() {
        return Err(Error::NotPermutation {
            detail: "mm_bent requires a permutation".into(),
        });
    }
    mm_table_dot(pi, h)
}

/// Trace-form table Tr(x map(y)) + h(y), evaluated through the field's
/// Gram matrix so the inner loop is a plain dot product.
pub fn mm_table_trace(ctx: &FieldContext, map: &PointMap, h: &TruthTable) -> Result<TruthTable> {
    check_mm_inputs(map, h)?;
    if ctx.m() != map.m {
        return Err(Error::MapSizeMismatch {
            left: ctx.m(),
            right: map.m,
        });
    }
    let m = map.m;
    let duals: Vec<u32> = map
        .table
        .iter()
        .map(|&v| ctx.trace_dual_vector(v))
        .collect();
    TruthTable::from_fn(2 * m, |z| {
        let x = z & ((1 << m) - 1);
        let y = z >> m;
        dot(x, duals[y as usize]) ^ h.get(y)
    })
}

/// Trace-form Maiorana-McFarland bent function; rejects non-permutations.
pub fn mm_bent_trace(ctx: &FieldContext, pi: &PointMap, h: &TruthTable) -> Result<TruthTable> {
    if !pi.is_permutation() {
        return Err(Error::NotPermutation {
            detail: "mm_bent requires a permutation".into(),
        });
    }
    mm_table_trace(ctx, pi, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FieldContext {
        FieldContext::new(3, None).unwrap()
    }

    fn f16() -> FieldContext {
        FieldContext::new(4, None).unwrap()
    }

    #[test]
    fn identity_inverse() {
        let id = PointMap::identity(3).unwrap();
        assert!(id.is_permutation());
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn constant_map_is_not_a_permutation() {
        let c = PointMap::from_table(2, vec![1, 1, 1, 1]).unwrap();
        assert!(!c.is_permutation());
        assert!(c.inverse().is_err());
    }

    #[test]
    fn monomial_inverse_map_is_self_inverse() {
        // m = 3: y -> a y^6 with a^{d+1} = a^7 = 1
        let ctx = f8();
        let p = PointMap::monomial(&ctx, ctx.generator(), 6).unwrap();
        assert!(p.is_permutation());
        assert!(p.is_involution());
        assert_eq!(p.inverse().unwrap().table(), p.table());
    }

    #[test]
    fn monomial_with_unit_parameters_is_identity() {
        let ctx = f8();
        let p = PointMap::monomial(&ctx, 1, 1).unwrap();
        assert_eq!(p.table(), PointMap::identity(3).unwrap().table());
    }

    #[test]
    fn inverse_is_involutive_on_permutations() {
        let mut state = 0xabcdu64;
        for _ in 0..20 {
            let mut t: Vec<u32> = (0..16).collect();
            for i in (1..16usize).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let j = (state >> 33) as usize % (i + 1);
                t.swap(i, j);
            }
            let p = PointMap::from_table(4, t).unwrap();
            assert_eq!(p.inverse().unwrap().inverse().unwrap().table(), p.table());
        }
    }

    #[test]
    fn monomial_rejects_bad_inputs() {
        let ctx = f16();
        assert!(PointMap::monomial(&ctx, 0, 1).is_err());
        // gcd(3, 15) = 3
        assert!(matches!(
            PointMap::monomial(&ctx, 1, 3),
            Err(Error::ExponentNotCoprime { .. })
        ));
        // d = 14 is fine: 14^2 = 196 = 1 mod 15
        assert_eq!((14u64 * 14) % 15, 1);
        assert!(PointMap::monomial(&ctx, 1, 14).is_ok());
    }

    #[test]
    fn add_self_gives_zero_map() {
        let ctx = f8();
        let p = PointMap::monomial(&ctx, ctx.generator(), 6).unwrap();
        let z = p.add(&p).unwrap();
        assert!(z.table().iter().all(|&v| v == 0));
    }

    #[test]
    fn am_holds_for_degenerate_equal_pair() {
        // pi1 = pi2 cancels, reducing the condition to pi3 alone
        let ctx = f8();
        let p = PointMap::monomial(&ctx, ctx.generator(), 3).unwrap();
        let q = PointMap::monomial(&ctx, ctx.generator_pow(2), 5).unwrap();
        assert!(check_am(&p, &p, &q).unwrap().holds());
    }

    #[test]
    fn am_holds_for_inverse_monomials_m3() {
        let ctx = f8();
        let alphas = [ctx.generator_pow(1), ctx.generator_pow(4), ctx.generator_pow(6)];
        let ps: Vec<PointMap> = alphas
            .iter()
            .map(|&a| PointMap::monomial(&ctx, a, 6).unwrap())
            .collect();
        let out = check_am(&ps[0], &ps[1], &ps[2]).unwrap();
        assert!(out.holds());
        // alpha_4 = sum = 1, so pi_4 = y^6
        let p4 = ps[0].add(&ps[1]).unwrap().add(&ps[2]).unwrap();
        let expected = PointMap::monomial(&ctx, 1, 6).unwrap();
        assert_eq!(p4.table(), expected.table());
    }

    #[test]
    fn am_check_is_symmetric() {
        let ctx = f8();
        let alphas = [ctx.generator_pow(1), ctx.generator_pow(4), ctx.generator_pow(6)];
        let ps: Vec<PointMap> = alphas
            .iter()
            .map(|&a| PointMap::monomial(&ctx, a, 6).unwrap())
            .collect();
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert!(check_am(&ps[perm[0]], &ps[perm[1]], &ps[perm[2]])
                .unwrap()
                .holds());
        }
    }

    #[test]
    fn am_rejects_non_permutation_input() {
        let c = PointMap::from_table(2, vec![0, 0, 1, 2]).unwrap();
        let id = PointMap::identity(2).unwrap();
        assert!(check_am(&c, &id, &id).is_err());
    }

    #[test]
    fn am_certificate_reports_violation() {
        // non-permutation input is rejected up front
        let p1 = PointMap::from_table(2, vec![0, 1, 2, 3]).unwrap();
        let bad = PointMap::from_table(2, vec![0, 3, 3, 0]).unwrap();
        assert!(check_am(&p1, &p1, &bad).is_err());
        // multiplications by 1, a, a^2 in F_4 sum to the zero map
        let ctx = FieldContext::new(2, None).unwrap();
        let mul = |c: u32| {
            PointMap::from_table(2, (0..4).map(|y| ctx.mul(c, y)).collect()).unwrap()
        };
        let out = check_am(&mul(1), &mul(2), &mul(3)).unwrap();
        assert!(matches!(out, AmOutcome::SumNotPermutation { value: 0, .. }));
        // permutation sum whose inverse is not the sum of inverses
        let p2 = PointMap::from_table(2, vec![0, 2, 1, 3]).unwrap();
        let q3 = PointMap::from_table(2, vec![1, 0, 3, 2]).unwrap();
        let out = check_am(&p1, &p2, &q3).unwrap();
        assert!(matches!(out, AmOutcome::InverseMismatch { .. }));
    }

    #[test]
    fn p1_fails_for_linear_maps() {
        assert!(!check_p1(&PointMap::identity(3).unwrap()));
    }

    #[test]
    fn p1_holds_for_inverse_map_m3() {
        let ctx = f8();
        let p = PointMap::monomial(&ctx, 1, 6).unwrap();
        assert!(check_p1(&p));
    }

    #[test]
    fn p1_fails_for_inverse_map_m4() {
        let ctx = f16();
        let p = PointMap::monomial(&ctx, 1, 14).unwrap();
        assert!(!check_p1(&p));
    }

    #[test]
    fn apn_gold_map_m3() {
        let ctx = f8();
        let p = PointMap::monomial(&ctx, 1, 3).unwrap();
        assert!(is_apn(&p));
        assert!(!is_apn(&PointMap::identity(3).unwrap()));
    }

    #[test]
    fn p1_equals_apn_for_quadratic_permutations() {
        // quadratic monomial permutations y -> alpha y^d, wt(d) = 2
        for (m, modulus) in [(3u32, None), (4, None), (5, None)] {
            let ctx = FieldContext::new(m, modulus).unwrap();
            for d in 1..ctx.order() as u64 {
                if d.count_ones() != 2 || gcd(d, ctx.order() as u64) != 1 {
                    continue;
                }
                for alpha in [1, ctx.generator()] {
                    let p = PointMap::monomial(&ctx, alpha, d).unwrap();
                    assert_eq!(check_p1(&p), is_apn(&p), "m={m} d={d}");
                }
            }
        }
    }

    #[test]
    fn components_of_linear_map_are_all_structured() {
        let report = component_linear_structures(&PointMap::identity(3).unwrap());
        assert!(!report.all_trivial);
        assert_eq!(report.nontrivial.len(), 7);
        for c in &report.nontrivial {
            assert_eq!(c.structures.len(), 7, "full linear space");
        }
    }

    #[test]
    fn components_of_m4_monomial_difference_are_trivial() {
        // pi_1 + pi_2 for the d = 14 monomial family: (a + a^2) y^14
        let ctx = f16();
        let diff = PointMap::monomial(&ctx, ctx.generator_pow(1) ^ ctx.generator_pow(2), 14).unwrap();
        assert!(component_linear_structures(&diff).all_trivial);
    }

    #[test]
    fn quadratic_monomial_components_follow_the_power_criterion() {
        // map y -> y^3 on F_16: the trace component Tr(delta y^3) has a
        // nonzero structure exactly when delta is a cube. 5 of the 15
        // nonzero elements are cubes.
        let ctx = f16();
        let cube = PointMap::from_table(
            4,
            (0..16).map(|y| ctx.pow(y, 3).unwrap()).collect(),
        )
        .unwrap();
        let report = component_linear_structures(&cube);
        assert_eq!(report.nontrivial.len(), 5);
        // dot-component b corresponds to delta with Tr(delta v) = b . v
        for entry in &report.nontrivial {
            let delta = (0..16u32)
                .find(|&d| ctx.trace_dual_vector(d) == entry.component)
                .unwrap();
            assert_eq!(ctx.log(delta).unwrap() % 3, 0, "delta must be a cube");
        }
    }

    #[test]
    fn mm_identity_gives_inner_product() {
        let id = PointMap::identity(2).unwrap();
        let h = TruthTable::zero(2).unwrap();
        let f = mm_bent_dot(&id, &h).unwrap();
        assert!(f.is_bent().unwrap());
        for z in 0..16u32 {
            let (x, y) = (z & 3, z >> 2);
            assert_eq!(f.get(z), dot(x, y));
        }
    }

    #[test]
    fn mm_bent_rejects_non_permutation() {
        let c = PointMap::from_table(2, vec![0, 0, 1, 2]).unwrap();
        let h = TruthTable::zero(2).unwrap();
        assert!(mm_bent_dot(&c, &h).is_err());
        // the raw table builder still works
        assert!(mm_table_dot(&c, &h).is_ok());
    }

    #[test]
    fn mm_trace_form_is_bent_for_monomials() {
        let ctx = f8();
        let pi = PointMap::monomial(&ctx, ctx.generator(), 6).unwrap();
        let h = TruthTable::from_fn(3, |y| ctx.trace(ctx.mul(ctx.generator(), ctx.pow(y, 3).unwrap()))).unwrap();
        let f = mm_bent_trace(&ctx, &pi, &h).unwrap();
        assert!(f.is_bent().unwrap());
    }

    #[test]
    fn mm_dual_formula() {
        // dual of x . pi(y) + h(y) is y . pi^{-1}(x) + h(pi^{-1}(x))
        let ctx = f8();
        for seed in [3u32, 5] {
            let pi = PointMap::monomial(&ctx, ctx.generator_pow(seed as i64), 5).unwrap();
            let h = TruthTable::from_fn(3, |y| (y * seed).count_ones() % 2 == 1).unwrap();
            let f = mm_bent_dot(&pi, &h).unwrap();
            let inv = pi.inverse().unwrap();
            let expected = TruthTable::from_fn(6, |z| {
                let (x, y) = (z & 7, z >> 3);
                let px = inv.image(x);
                dot(y, px) ^ h.get(px)
            })
            .unwrap();
            assert_eq!(f.dual().unwrap(), expected);
        }
    }

    #[test]
    fn coordinate_anf_roundtrip() {
        let ctx = f8();
        let p = PointMap::monomial(&ctx, ctx.generator(), 6).unwrap();
        let coords: Vec<TruthTable> = (0..3).map(|i| p.coordinate_tt(i).unwrap()).collect();
        let rebuilt = PointMap::from_coordinates(&coords).unwrap();
        assert_eq!(rebuilt.table(), p.table());
        // degree of the inverse map on F_8 is 2 in every coordinate
        for i in 0..3 {
            assert_eq!(p.coordinate_anf(i).unwrap().degree(), 2);
        }
    }

    #[test]
    fn involution_criterion_for_monomials() {
        // alpha^{d+1} = 1 and d^2 = 1 mod (2^m - 1) force an involution
        let ctx = f16();
        for e in 0..15 {
            let alpha = ctx.generator_pow(e);
            let p = PointMap::monomial(&ctx, alpha, 14).unwrap();
            assert!(p.is_involution(), "alpha=a^{e}");
        }
    }
}
