//! The construction layer: 4-concatenation, the dual bent condition, the
//! generalized concatenation builder with a y-only shift term, piecewise
//! lifts of permutation triples and their h-functions, monomial
//! quadruples, and homogeneous cubic concatenation.

use crate::boolfn::{AnfForm, TruthTable};
use crate::error::{Error, Result};
use crate::gf2m::FieldContext;
use crate::perm::{check_am, mm_bent_dot, mm_bent_trace, AmOutcome, PointMap};

/// Which inner product an MM construction uses on the x half.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MmForm {
    /// x . pi(y) on vectors.
    Dot,
    /// Tr(x pi(y)) through a field context.
    Trace,
}

impl std::fmt::Display for MmForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MmForm::Dot => write!(f, "dot"),
            MmForm::Trace => write!(f, "trace"),
        }
    }
}

/// Four equal-size pieces plus the optional y-only shift s relating
/// f4 = f1 + f2 + f3 + s, kept for provenance.
#[derive(Clone, Debug)]
pub struct ConcatenationSpec {
    pub parts: [TruthTable; 4],
    /// Shift over the y half (n/2 variables), when the pieces came from
    /// an MM construction.
    pub s: Option<TruthTable>,
    pub metadata: Vec<String>,
}

impl ConcatenationSpec {
    pub fn new(parts: [TruthTable; 4]) -> Result<Self> {
        let n = parts[0].n();
        for p in &parts {
            if p.n() != n {
                return Err(Error::VariableCountMismatch {
                    left: n,
                    right: p.n(),
                });
            }
        }
        Ok(ConcatenationSpec {
            parts,
            s: None,
            metadata: Vec::new(),
        })
    }

    pub fn concat(&self) -> Result<TruthTable> {
        concat4(&self.parts)
    }
}

/// Concatenation of four n-variable functions into n+2 variables. The
/// two new variables are appended as the most significant index bits;
/// the restrictions satisfy f(z,0,0) = f1, f(z,1,0) = f3,
/// f(z,0,1) = f2, f(z,1,1) = f4.
pub fn concat4(parts: &[TruthTable; 4]) -> Result<TruthTable> {
    let n = parts[0].n();
    for p in parts {
        if p.n() != n {
            return Err(Error::VariableCountMismatch {
                left: n,
                right: p.n(),
            });
        }
    }
    let size = 1u32 << n;
    // block order by (z_{n+1}, z_{n+2}): f1, f3, f2, f4
    let order = [0usize, 2, 1, 3];
    TruthTable::from_fn(n + 2, |z| {
        let block = (z >> n) as usize;
        parts[order[block]].get(z & (size - 1))
    })
}

/// Restrictions of an (n+2)-variable function to the four cosets;
/// inverse of [`concat4`].
pub fn decompose4(f: &TruthTable) -> Result<[TruthTable; 4]> {
    let n = f.n();
    if n < 3 {
        return Err(Error::hypothesis(
            "decomposition input",
            format!("needs at least 3 variables, got {n}"),
        ));
    }
    let small = n - 2;
    let restrict = |block: u32| TruthTable::from_fn(small, |z| f.get(z | block << small));
    Ok([restrict(0)?, restrict(2)?, restrict(1)?, restrict(3)?])
}

/// XOR of the duals of four bent functions equals the constant one.
/// Equivalent to bentness of their 4-concatenation.
pub fn dual_bent_condition(parts: &[TruthTable; 4]) -> Result<bool> {
    let mut acc: Option<TruthTable> = None;
    for p in parts {
        if !p.is_bent()? {
            return Err(Error::NotBent {
                detail: "dual bent condition needs four bent pieces".into(),
            });
        }
        let d = p.dual()?;
        acc = Some(match acc {
            None => d,
            Some(a) => &a ^ &d,
        });
    }
    Ok(acc.unwrap().as_constant() == Some(true))
}

fn am_or_hypothesis_error(pis: [&PointMap; 3]) -> Result<PointMap> {
    match check_am(pis[0], pis[1], pis[2])? {
        AmOutcome::Holds => {}
        AmOutcome::SumNotPermutation { value, points } => {
            return Err(Error::hypothesis(
                "permutation-triple property",
                format!("sum maps points {points:?} to the same value {value}"),
            ))
        }
        AmOutcome::InverseMismatch { point, .. } => {
            return Err(Error::hypothesis(
                "permutation-triple property",
                format!("inverse of the sum differs from the sum of inverses at {point}"),
            ))
        }
    }
    pis[0].add(pis[1])?.add(pis[2])
}

/// Evaluates h1(pi1^{-1}(y)) + h2(pi2^{-1}(y)) + h3(pi3^{-1}(y)) +
/// h4((pi1+pi2+pi3)^{-1}(y)) at every point; true iff identically 1.
/// The permutation triple must pass the sum/inverse property first.
pub fn check_hi_condition(pis: [&PointMap; 3], hs: [&TruthTable; 4]) -> Result<bool> {
    Ok(first_hi_violation(pis, hs)?.is_none())
}

/// First point where the composed sum is 0, if any.
fn first_hi_violation(pis: [&PointMap; 3], hs: [&TruthTable; 4]) -> Result<Option<u32>> {
    let m = pis[0].m();
    for h in &hs {
        if h.n() != m {
            return Err(Error::VariableCountMismatch {
                left: m,
                right: h.n(),
            });
        }
    }
    let p4 = am_or_hypothesis_error(pis)?;
    let invs = [
        pis[0].inverse()?,
        pis[1].inverse()?,
        pis[2].inverse()?,
        p4.inverse()?,
    ];
    for y in 0..1u32 << m {
        let sum = hs[0].get(invs[0].image(y))
            ^ hs[1].get(invs[1].image(y))
            ^ hs[2].get(invs[2].image(y))
            ^ hs[3].get(invs[3].image(y));
        if !sum {
            return Ok(Some(y));
        }
    }
    Ok(None)
}

/// A built concatenation together with its spec.
#[derive(Clone, Debug)]
pub struct BuiltConcatenation {
    pub spec: ConcatenationSpec,
    pub concat: TruthTable,
}

/// Builds the four MM functions from a permutation triple, three
/// h-functions and the y-only shift s (h4 = h1 + h2 + h3 + s), checks
/// the hypotheses pointwise, and concatenates. The result is bent by
/// construction, which is re-verified.
pub fn build_theorem2(
    pis: [&PointMap; 3],
    hs: [&TruthTable; 3],
    s: &TruthTable,
    form: MmForm,
    ctx: Option<&FieldContext>,
) -> Result<BuiltConcatenation> {
    let m = pis[0].m();
    if s.n() != m {
        return Err(Error::VariableCountMismatch {
            left: m,
            right: s.n(),
        });
    }
    let h4 = &(&(hs[0] ^ hs[1]) ^ hs[2]) ^ s;
    let all_h = [hs[0], hs[1], hs[2], &h4];
    if let Some(y) = first_hi_violation(pis, all_h)? {
        return Err(Error::hypothesis(
            "dual-sum condition on the h functions",
            format!("the composed sum is 0 at y = {y}"),
        ));
    }
    let p4 = pis[0].add(pis[1])?.add(pis[2])?;
    let all_pi = [pis[0], pis[1], pis[2], &p4];
    let mut parts = Vec::with_capacity(4);
    for (pi, h) in all_pi.iter().zip(all_h.iter()) {
        let f = match form {
            MmForm::Dot => mm_bent_dot(pi, h)?,
            MmForm::Trace => {
                let ctx = ctx.ok_or_else(|| {
                    Error::hypothesis("trace form", "field context required")
                })?;
                mm_bent_trace(ctx, pi, h)?
            }
        };
        parts.push(f);
    }
    let parts: [TruthTable; 4] = parts.try_into().expect("four parts");
    let concat = concat4(&parts)?;
    debug_assert!(concat.is_bent().unwrap());
    let mut spec = ConcatenationSpec::new(parts)?;
    spec.s = Some(s.clone());
    spec.metadata.push(format!("mm form {form}, m={m}"));
    Ok(BuiltConcatenation { spec, concat })
}

/// Piecewise lift of two permutation triples from m to m+1 variables:
/// the new top variable selects which triple acts, and the images keep
/// that variable. Both triples must satisfy the sum/inverse property;
/// the lifted triple then satisfies it one dimension up (re-verified).
pub fn lift_am(pis: [&PointMap; 3], sigmas: [&PointMap; 3]) -> Result<[PointMap; 3]> {
    let m = pis[0].m();
    if sigmas[0].m() != m {
        return Err(Error::MapSizeMismatch {
            left: m,
            right: sigmas[0].m(),
        });
    }
    if !check_am(pis[0], pis[1], pis[2])?.holds() {
        return Err(Error::hypothesis(
            "permutation-triple property",
            "first triple fails",
        ));
    }
    if !check_am(sigmas[0], sigmas[1], sigmas[2])?.holds() {
        return Err(Error::hypothesis(
            "permutation-triple property",
            "second triple fails",
        ));
    }
    let top = 1u32 << m;
    let mut out = Vec::with_capacity(3);
    for (pi, sigma) in pis.iter().zip(sigmas.iter()) {
        let mut table = vec![0u32; 1 << (m + 1)];
        for y in 0..top {
            table[y as usize] = sigma.image(y);
            table[(y | top) as usize] = pi.image(y) | top;
        }
        out.push(PointMap::from_table(m + 1, table)?);
    }
    let out: [PointMap; 3] = out.try_into().expect("three maps");
    debug_assert!(check_am(&out[0], &out[1], &out[2]).unwrap().holds());
    Ok(out)
}

/// Piecewise lift of the h-functions matching [`lift_am`]: the lifted
/// h'_i agrees with h_i on the upper half and g_i on the lower half.
/// Both quadruples must satisfy the dual-sum condition for their own
/// triples; the lifted quadruple then satisfies it for the lifted
/// triple, which is re-verified pointwise.
pub fn lift_h(
    pis: [&PointMap; 3],
    sigmas: [&PointMap; 3],
    hs: [&TruthTable; 4],
    gs: [&TruthTable; 4],
) -> Result<[TruthTable; 4]> {
    if !check_hi_condition(pis, hs)? {
        return Err(Error::hypothesis(
            "dual-sum condition on the h functions",
            "fails for the first triple",
        ));
    }
    if !check_hi_condition(sigmas, gs)? {
        return Err(Error::hypothesis(
            "dual-sum condition on the g functions",
            "fails for the second triple",
        ));
    }
    let m = pis[0].m();
    let mut lifted = Vec::with_capacity(4);
    for (h, g) in hs.iter().zip(gs.iter()) {
        let l = TruthTable::from_fn(m + 1, |y| {
            if y >> m & 1 == 1 {
                h.get(y & ((1 << m) - 1))
            } else {
                g.get(y)
            }
        })?;
        lifted.push(l);
    }
    let lifted: [TruthTable; 4] = lifted.try_into().expect("four tables");
    let phis = lift_am(pis, sigmas)?;
    debug_assert!(check_hi_condition(
        [&phis[0], &phis[1], &phis[2]],
        [&lifted[0], &lifted[1], &lifted[2], &lifted[3]]
    )
    .unwrap());
    Ok(lifted)
}

/// A monomial construction instance: involutive permutations
/// pi_i = alpha_i y^d and h_i = Tr(beta_i y^k) (h4 complemented), with
/// the beta_i derived from a permutation sigma of the four alphas.
#[derive(Clone, Debug)]
pub struct MonomialQuadruple {
    ctx: FieldContext,
    d: u64,
    k: u64,
    alphas: [u32; 4],
    sigma: [usize; 4],
    betas: [u32; 4],
    pis: [PointMap; 4],
    hs: [TruthTable; 4],
}

impl MonomialQuadruple {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn alphas(&self) -> [u32; 4] {
        self.alphas
    }

    pub fn betas(&self) -> [u32; 4] {
        self.betas
    }

    pub fn sigma(&self) -> [usize; 4] {
        self.sigma
    }

    pub fn pis(&self) -> &[PointMap; 4] {
        &self.pis
    }

    pub fn hs(&self) -> &[TruthTable; 4] {
        &self.hs
    }

    pub fn field(&self) -> &FieldContext {
        &self.ctx
    }

    /// The four trace-form MM bent functions.
    pub fn functions(&self) -> Result<[TruthTable; 4]> {
        let mut out = Vec::with_capacity(4);
        for (pi, h) in self.pis.iter().zip(self.hs.iter()) {
            out.push(mm_bent_trace(&self.ctx, pi, h)?);
        }
        Ok(out.try_into().expect("four parts"))
    }

    /// Their bent concatenation in 2m+2 variables.
    pub fn concat(&self) -> Result<TruthTable> {
        concat4(&self.functions()?)
    }

    /// The y-only difference f1 + f2 + f3 + f4 = h1 + h2 + h3 + h4.
    pub fn shift(&self) -> TruthTable {
        let mut s = self.hs[0].clone();
        for h in &self.hs[1..] {
            s ^= h;
        }
        s
    }
}

/// Builds a monomial quadruple. Preconditions, each reported
/// separately: d^2 = 1 mod 2^m - 1; the alphas nonzero, pairwise
/// distinct, with alpha^{d+1} = 1; their sum alpha_4 nonzero with the
/// same power condition; sigma a permutation of the four indices.
pub fn monomial_quadruple(
    ctx: &FieldContext,
    d: u64,
    k: u64,
    alphas: [u32; 3],
    sigma: [usize; 4],
) -> Result<MonomialQuadruple> {
    let order = ctx.order() as u64;
    if (d % order) * (d % order) % order != 1 % order {
        return Err(Error::hypothesis(
            "exponent involution",
            format!("d^2 = {} mod {order}, expected 1", d * d % order),
        ));
    }
    let mut sorted = sigma;
    sorted.sort_unstable();
    if sorted != [0, 1, 2, 3] {
        return Err(Error::hypothesis(
            "sigma",
            format!("{sigma:?} is not a permutation of 0..4"),
        ));
    }
    let alpha4 = alphas[0] ^ alphas[1] ^ alphas[2];
    let all = [alphas[0], alphas[1], alphas[2], alpha4];
    for (i, &a) in all.iter().enumerate() {
        if a == 0 || a >= ctx.size() {
            return Err(Error::hypothesis(
                "alphas nonzero",
                format!("alpha_{} = {a:#x}", i + 1),
            ));
        }
        if ctx.pow(a, d as i64 + 1)? != 1 {
            return Err(Error::hypothesis(
                "alpha power condition",
                format!("alpha_{}^{} != 1", i + 1, d + 1),
            ));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if all[i] == all[j] {
                return Err(Error::hypothesis(
                    "alphas pairwise distinct",
                    format!("alpha_{} = alpha_{}", i + 1, j + 1),
                ));
            }
        }
    }
    let sigma_of = |i: usize| all[sigma[i]];
    let beta = |num: u32, den_base: u32| -> Result<u32> {
        let den = ctx.pow(den_base, k as i64)?;
        Ok(ctx.mul(num, ctx.inv(den)?))
    };
    let betas = [
        beta(sigma_of(1), all[0])?,
        beta(sigma_of(2), all[1])?,
        beta(sigma_of(3), all[2])?,
        beta(sigma_of(0), all[3])?,
    ];
    let mut pis = Vec::with_capacity(4);
    for (i, &a) in all.iter().enumerate() {
        let p = PointMap::monomial(ctx, a, d)?
            .with_provenance(format!("monomial alpha_{}=a^{} d={d}", i + 1, ctx.log(a)?));
        pis.push(p);
    }
    let pis: [PointMap; 4] = pis.try_into().expect("four maps");
    let mut hs = Vec::with_capacity(4);
    for (i, &b) in betas.iter().enumerate() {
        let complement = i == 3;
        let h = TruthTable::from_fn(ctx.m(), |y| {
            ctx.trace(ctx.mul(b, ctx.pow(y, k as i64).expect("k >= 0"))) ^ complement
        })?;
        hs.push(h);
    }
    let hs: [TruthTable; 4] = hs.try_into().expect("four tables");
    let q = MonomialQuadruple {
        ctx: ctx.clone(),
        d,
        k,
        alphas: all,
        sigma,
        betas,
        pis,
        hs,
    };
    debug_assert!(check_hi_condition(
        [&q.pis[0], &q.pis[1], &q.pis[2]],
        [&q.hs[0], &q.hs[1], &q.hs[2], &q.hs[3]]
    )
    .unwrap());
    Ok(q)
}

/// Concatenation that stays homogeneous cubic: seed f1 homogeneous
/// cubic bent, quadratic homogeneous offsets q2, q3 with f1+q2, f1+q3
/// and f1+f2+f3 bent, and a linear (constant-free) s. The dual-sum
/// condition on (f1, f2, f3, f1+f2+f3+s) must hold; the output is the
/// bent concatenation, re-verified homogeneous cubic from its ANF.
pub fn homogeneous_concat(
    f1: &TruthTable,
    q2: &TruthTable,
    q3: &TruthTable,
    s: &TruthTable,
) -> Result<TruthTable> {
    let n = f1.n();
    for (name, t) in [("q2", q2), ("q3", q3), ("s", s)] {
        if t.n() != n {
            return Err(Error::hypothesis(
                "equal variable counts",
                format!("{name} has {} variables, expected {n}", t.n()),
            ));
        }
    }
    let s_anf = s.anf();
    if s_anf.degree() > 1 || s_anf.contains(0) {
        return Err(Error::hypothesis(
            "linear shift",
            "s must be linear with no constant term",
        ));
    }
    let f1_anf = f1.anf();
    if !(f1_anf.is_homogeneous() && f1_anf.degree() == 3) {
        return Err(Error::hypothesis(
            "seed homogeneous cubic",
            format!("degree {} homogeneous {}", f1_anf.degree(), f1_anf.is_homogeneous()),
        ));
    }
    for (name, q) in [("q2", q2), ("q3", q3)] {
        let anf = q.anf();
        if !(anf.is_homogeneous() && anf.degree() == 2) {
            return Err(Error::hypothesis(
                "quadratic homogeneous offset",
                format!("{name} has degree {}", anf.degree()),
            ));
        }
    }
    if !f1.is_bent()? {
        return Err(Error::hypothesis("seed bent", "f1 is not bent"));
    }
    let f2 = f1 ^ q2;
    let f3 = f1 ^ q3;
    let f123 = &(&f2 ^ &f3) ^ f1;
    for (name, f) in [("f2", &f2), ("f3", &f3), ("f1+f2+f3", &f123)] {
        if !f.is_bent()? {
            return Err(Error::hypothesis(
                "bent pieces",
                format!("{name} is not bent"),
            ));
        }
    }
    let f4 = &f123 ^ s;
    let parts = [f1.clone(), f2, f3, f4];
    if !dual_bent_condition(&parts)? {
        return Err(Error::hypothesis(
            "dual-sum condition",
            "the four duals do not sum to 1",
        ));
    }
    let out = concat4(&parts)?;
    let anf = out.anf();
    debug_assert!(anf.is_homogeneous() && anf.degree() == 3);
    debug_assert!(out.is_bent().unwrap());
    Ok(out)
}

/// ANF-level restatement of the concatenation, used as a cross-check in
/// tests: f = f1 + z_{n+1}(f1+f3) + z_{n+2}(f1+f2) + z_{n+1}z_{n+2}(f1+f2+f3+f4).
pub fn concat4_anf(parts: &[TruthTable; 4]) -> Result<AnfForm> {
    Ok(concat4(parts)?.anf())
}
