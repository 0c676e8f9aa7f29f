//! Boolean functions as bit-packed truth tables, with the spectral and
//! derivative calculus used everywhere else: Walsh-Hadamard transform,
//! algebraic normal form, duals, derivatives and linear structures.
//!
//! Index convention, fixed repo-wide: the value at integer index `i` is
//! `f(vec(i))` where variable `x_1` is the least-significant bit of `i`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use crate::error::{Error, Result};

/// Largest supported variable count for transforms.
pub const MAX_VARS: u32 = 20;

/// Delta-swap masks: `XOR_MASK[b]` selects the bit positions whose b-th
/// index bit is 0. Swapping against the complement shifted by `1 << b`
/// permutes word bits by `j -> j ^ (1 << b)`.
const XOR_MASK: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

#[inline]
fn word_xor_permute(mut w: u64, low: u32) -> u64 {
    for b in 0..6 {
        if low >> b & 1 == 1 {
            let s = 1 << b;
            let m = XOR_MASK[b as usize];
            w = ((w & m) << s) | ((w >> s) & m);
        }
    }
    w
}

/// Parity of `v` as a bit.
#[inline]
pub fn parity(v: u32) -> bool {
    v.count_ones() & 1 == 1
}

/// Scalar product x . y over F_2.
#[inline]
pub fn dot(x: u32, y: u32) -> bool {
    parity(x & y)
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::InvalidVariableCount { n, max: MAX_VARS });
    }
    Ok(())
}

/// Bit-packed value table of an n-variable Boolean function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    words: Vec<u64>,
}

impl TruthTable {
    pub fn zero(n: u32) -> Result<Self> {
        check_n(n)?;
        let words = vec![0u64; word_count(n)];
        Ok(TruthTable { n, words })
    }

    pub fn constant(n: u32, value: bool) -> Result<Self> {
        let mut t = Self::zero(n)?;
        if value {
            for w in &mut t.words {
                *w = !0;
            }
            t.mask_top();
        }
        Ok(t)
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut t = Self::zero(n)?;
        for x in 0..t.len() as u32 {
            if f(x) {
                t.set(x, true);
            }
        }
        Ok(t)
    }

    /// Builds a table from one byte per point (0 or 1).
    pub fn from_bits(n: u32, bits: &[u8]) -> Result<Self> {
        check_n(n)?;
        if bits.len() != 1usize << n {
            return Err(Error::BadTableLength {
                expected: 1usize << n,
                got: bits.len(),
            });
        }
        Self::from_fn(n, |x| bits[x as usize] != 0)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of points, `2^n`.
    pub fn len(&self) -> usize {
        1usize << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: u32) -> bool {
        debug_assert!((x as usize) < self.len());
        self.words[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, x: u32, v: bool) {
        debug_assert!((x as usize) < self.len());
        let w = &mut self.words[(x >> 6) as usize];
        if v {
            *w |= 1 << (x & 63);
        } else {
            *w &= !(1 << (x & 63));
        }
    }

    fn top_mask(&self) -> u64 {
        if self.n >= 6 {
            !0
        } else {
            (1u64 << (1 << self.n)) - 1
        }
    }

    fn mask_top(&mut self) {
        let m = self.top_mask();
        if let Some(last) = self.words.last_mut() {
            *last &= m;
        }
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `Some(b)` if the function is constantly `b`.
    pub fn as_constant(&self) -> Option<bool> {
        if self.is_zero() {
            Some(false)
        } else if self.weight() == self.len() as u64 {
            Some(true)
        } else {
            None
        }
    }

    /// f + 1.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.mask_top();
        out
    }

    /// The translate x -> f(x + a). `a` is reduced mod 2^n.
    pub fn translate(&self, a: u32) -> Self {
        let a = a & (self.len() as u32 - 1);
        let (ah, al) = ((a >> 6) as usize, a & 63);
        let mut out = Self {
            n: self.n,
            words: vec![0; self.words.len()],
        };
        for i in 0..self.words.len() {
            out.words[i] = word_xor_permute(self.words[i ^ ah], al);
        }
        out
    }

    /// First-order derivative D_a f(x) = f(x + a) + f(x).
    pub fn derivative(&self, a: u32) -> Self {
        let mut out = self.translate(a);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o ^= w;
        }
        out
    }

    /// True iff D_a D_b f is identically zero.
    pub fn second_derivative_vanishes(&self, a: u32, b: u32) -> bool {
        let g = self.derivative(a);
        g.derivative_is_zero(b)
    }

    /// True iff D_b of this table is identically zero, i.e. the table is
    /// invariant under translation by b. No allocation.
    pub(crate) fn derivative_is_zero(&self, b: u32) -> bool {
        let b = b & (self.len() as u32 - 1);
        let (bh, bl) = ((b >> 6) as usize, b & 63);
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w == word_xor_permute(self.words[i ^ bh], bl))
    }

    fn derivative_is_one(&self, b: u32) -> bool {
        let b = b & (self.len() as u32 - 1);
        let (bh, bl) = ((b >> 6) as usize, b & 63);
        let top = self.top_mask();
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w ^ word_xor_permute(self.words[i ^ bh], bl) == top)
    }

    /// Walsh-Hadamard transform, O(n 2^n) butterfly.
    pub fn walsh(&self) -> WalshSpectrum {
        let size = self.len();
        let mut values = vec![0i32; size];
        for (x, v) in values.iter_mut().enumerate() {
            *v = if self.get(x as u32) { -1 } else { 1 };
        }
        for k in 0..self.n {
            let s = 1usize << k;
            let mut base = 0;
            while base < size {
                for i in base..base + s {
                    let (u, v) = (values[i], values[i + s]);
                    values[i] = u + v;
                    values[i + s] = u - v;
                }
                base += 2 * s;
            }
        }
        WalshSpectrum { n: self.n, values }
    }

    /// Bent test: n even and the whole spectrum is +-2^{n/2}.
    pub fn is_bent(&self) -> Result<bool> {
        if self.n % 2 == 1 {
            return Err(Error::OddVariableCount { n: self.n });
        }
        let target = 1i32 << (self.n / 2);
        Ok(self.walsh().values.iter().all(|&v| v.abs() == target))
    }

    /// Dual of a bent function: W_f(u) = 2^{n/2} (-1)^{f*(u)}.
    pub fn dual(&self) -> Result<TruthTable> {
        if self.n % 2 == 1 {
            return Err(Error::OddVariableCount { n: self.n });
        }
        let target = 1i32 << (self.n / 2);
        let spectrum = self.walsh();
        let mut out = TruthTable::zero(self.n)?;
        for (u, &v) in spectrum.values.iter().enumerate() {
            if v == -target {
                out.set(u as u32, true);
            } else if v != target {
                return Err(Error::NotBent {
                    detail: format!("spectrum value {v} at point {u}"),
                });
            }
        }
        Ok(out)
    }

    /// All a with f(x+a) + f(x) constant in x. Always contains 0 and is
    /// closed under addition.
    pub fn linear_structures(&self) -> Vec<u32> {
        let size = self.len() as u32;
        let mut out = Vec::new();
        for a in 0..size {
            if self.derivative_is_zero(a) || self.derivative_is_one(a) {
                out.push(a);
            }
        }
        out
    }

    pub fn has_nontrivial_linear_structure(&self) -> bool {
        (1..self.len() as u32).any(|a| self.derivative_is_zero(a) || self.derivative_is_one(a))
    }

    pub fn anf(&self) -> AnfForm {
        AnfForm::from_tt(self)
    }

    /// Algebraic degree, via the ANF.
    pub fn degree(&self) -> u32 {
        self.anf().degree()
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, ", self.n)?;
        if self.n <= 6 {
            for x in 0..self.len() as u32 {
                write!(f, "{}", self.get(x) as u8)?;
            }
        } else {
            write!(f, "weight={}", self.weight())?;
        }
        write!(f, ")")
    }
}

impl BitXorAssign<&TruthTable> for TruthTable {
    /// Pointwise sum over F_2. Panics if the variable counts differ.
    fn bitxor_assign(&mut self, rhs: &TruthTable) {
        assert_eq!(self.n, rhs.n, "truth table variable counts differ");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor<&TruthTable> for &TruthTable {
    type Output = TruthTable;
    fn bitxor(self, rhs: &TruthTable) -> TruthTable {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

fn word_count(n: u32) -> usize {
    if n >= 6 {
        1usize << (n - 6)
    } else {
        1
    }
}

/// In-place binary Moebius (zeta) transform; involutive.
fn moebius_in_place(words: &mut [u64], n: u32) {
    for k in 0..n.min(6) {
        let s = 1 << k;
        let m = XOR_MASK[k as usize];
        for w in words.iter_mut() {
            *w ^= (*w & m) << s;
        }
    }
    for k in 6..n {
        let half = 1usize << (k - 6);
        let mut base = 0;
        while base < words.len() {
            for i in 0..half {
                let lo = words[base + i];
                words[base + half + i] ^= lo;
            }
            base += 2 * half;
        }
    }
}

/// Signed Walsh spectrum of an n-variable function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn value(&self, a: u32) -> i32 {
        self.values[a as usize]
    }

    /// Parseval check: sum of squares equals 2^{2n}.
    pub fn parseval_holds(&self) -> bool {
        let sum: i64 = self.values.iter().map(|&v| (v as i64) * (v as i64)).sum();
        sum == 1i64 << (2 * self.n)
    }

    /// Inverse transform back to the truth table.
    pub fn inverse(&self) -> Result<TruthTable> {
        let mut vals = self.values.clone();
        let size = vals.len();
        for k in 0..self.n {
            let s = 1usize << k;
            let mut base = 0;
            while base < size {
                for i in base..base + s {
                    let (u, v) = (vals[i], vals[i + s]);
                    vals[i] = u + v;
                    vals[i + s] = u - v;
                }
                base += 2 * s;
            }
        }
        let scale = 1i32 << self.n;
        let mut out = TruthTable::zero(self.n)?;
        for (x, &v) in vals.iter().enumerate() {
            match v / scale {
                1 => {}
                -1 => out.set(x as u32, true),
                _ => {
                    return Err(Error::BadTableLength {
                        expected: size,
                        got: x,
                    })
                }
            }
        }
        Ok(out)
    }
}

/// Algebraic normal form: the set of monomial masks with coefficient 1.
/// Mask bit i-1 set means the factor x_i is present; mask 0 is the
/// constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnfForm {
    n: u32,
    monomials: BTreeSet<u32>,
}

impl AnfForm {
    pub fn empty(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(AnfForm {
            n,
            monomials: BTreeSet::new(),
        })
    }

    pub fn from_monomials(n: u32, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_n(n)?;
        let mut monomials = BTreeSet::new();
        for m in masks {
            if m as u64 >= 1u64 << n {
                return Err(Error::InvalidVariableCount {
                    n: 32 - m.leading_zeros(),
                    max: n,
                });
            }
            // XOR semantics: a mask occurring twice cancels
            if !monomials.insert(m) {
                monomials.remove(&m);
            }
        }
        Ok(AnfForm { n, monomials })
    }

    /// Unique ANF of a truth table (binary Moebius transform).
    pub fn from_tt(t: &TruthTable) -> Self {
        let mut words = t.words.clone();
        moebius_in_place(&mut words, t.n);
        let mut monomials = BTreeSet::new();
        for (i, w) in words.iter().enumerate() {
            let mut w = *w;
            while w != 0 {
                let b = w.trailing_zeros();
                monomials.insert((i as u32) << 6 | b);
                w &= w - 1;
            }
        }
        AnfForm {
            n: t.n,
            monomials,
        }
    }

    /// Truth table of this ANF; inverse of [`AnfForm::from_tt`].
    pub fn tt(&self) -> TruthTable {
        let mut t = TruthTable::zero(self.n).expect("n validated at construction");
        for &m in &self.monomials {
            t.set(m, true);
        }
        moebius_in_place(&mut t.words, self.n);
        t
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn monomials(&self) -> impl Iterator<Item = u32> + '_ {
        self.monomials.iter().copied()
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.monomials.contains(&mask)
    }

    pub fn term_count(&self) -> usize {
        self.monomials.len()
    }

    /// Max Hamming weight over monomials; 0 for the empty form.
    pub fn degree(&self) -> u32 {
        self.monomials
            .iter()
            .map(|m| m.count_ones())
            .max()
            .unwrap_or(0)
    }

    /// All monomials share one degree (empty form counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.monomials.iter().map(|m| m.count_ones());
        match it.next() {
            None => true,
            Some(d) => it.all(|w| w == d),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tt_from_str(n: u32, bits: &str) -> TruthTable {
        let v: Vec<u8> = bits.bytes().map(|b| b - b'0').collect();
        TruthTable::from_bits(n, &v).unwrap()
    }

    #[test]
    fn zero_function_has_empty_anf() {
        let t = TruthTable::zero(2).unwrap();
        assert_eq!(t.anf().term_count(), 0);
        assert_eq!(t.anf().degree(), 0);
    }

    #[test]
    fn product_x1x2_anf() {
        // f = x1 x2: value 1 only at index 3
        let t = tt_from_str(2, "0001");
        let a = t.anf();
        assert_eq!(a.monomials().collect::<Vec<_>>(), vec![0b11]);
    }

    #[test]
    fn constant_one_tt() {
        let a = AnfForm::from_monomials(2, [0]).unwrap();
        assert_eq!(a.tt(), TruthTable::constant(2, true).unwrap());
        let e = AnfForm::empty(3).unwrap();
        assert!(e.tt().is_zero());
    }

    #[test]
    fn walsh_zero_function() {
        let t = TruthTable::zero(2).unwrap();
        assert_eq!(t.walsh().values(), &[4, 0, 0, 0]);
    }

    #[test]
    fn walsh_x1x2() {
        let t = tt_from_str(2, "0001");
        assert_eq!(t.walsh().values(), &[2, 2, 2, -2]);
    }

    #[test]
    fn bent_smallest() {
        let t = tt_from_str(2, "0001");
        assert!(t.is_bent().unwrap());
        // x1 + x2 is affine, not bent
        let a = tt_from_str(2, "0110");
        assert!(!a.is_bent().unwrap());
        assert!(tt_from_str(1, "01").is_bent().is_err());
    }

    #[test]
    fn dual_of_x1x2_is_itself() {
        let t = tt_from_str(2, "0001");
        assert_eq!(t.dual().unwrap(), t);
    }

    #[test]
    fn dual_rejects_non_bent() {
        let a = tt_from_str(2, "0110");
        assert!(matches!(a.dual(), Err(Error::NotBent { .. })));
    }

    #[test]
    fn derivative_in_zero_direction() {
        let t = tt_from_str(3, "01110100");
        assert!(t.derivative(0).is_zero());
        // D_a D_a f = 0
        for a in 0..8 {
            assert!(t.derivative(a).derivative(a).is_zero());
        }
    }

    #[test]
    fn linear_structures_of_affine_function() {
        let a = tt_from_str(2, "0110"); // x1 + x2
        assert_eq!(a.linear_structures(), vec![0, 1, 2, 3]);
        let b = tt_from_str(2, "0001"); // x1 x2
        assert_eq!(b.linear_structures(), vec![0]);
        assert!(!b.has_nontrivial_linear_structure());
    }

    #[test]
    fn degree_and_homogeneity() {
        // x1 x2 x3 + x1 x2
        let a = AnfForm::from_monomials(3, [0b111, 0b011]).unwrap();
        assert_eq!(a.degree(), 3);
        assert!(!a.is_homogeneous());
        let h = AnfForm::from_monomials(3, [0b110, 0b011]).unwrap();
        assert!(h.is_homogeneous());
        assert!(AnfForm::empty(3).unwrap().is_homogeneous());
    }

    #[test]
    fn translate_matches_pointwise() {
        let t = tt_from_str(3, "01110100");
        for a in 0..8u32 {
            let tr = t.translate(a);
            for x in 0..8u32 {
                assert_eq!(tr.get(x), t.get(x ^ a));
            }
        }
    }

    #[test]
    fn translate_crosses_word_boundaries() {
        let t = TruthTable::from_fn(8, |x| x.count_ones() % 3 == 0).unwrap();
        for &a in &[1u32, 63, 64, 65, 128, 200, 255] {
            let tr = t.translate(a);
            for x in 0..256u32 {
                assert_eq!(tr.get(x), t.get(x ^ a), "a={a} x={x}");
            }
        }
    }

    #[test]
    fn n_zero_and_oversize_rejected() {
        assert!(TruthTable::zero(0).is_err());
        assert!(TruthTable::zero(MAX_VARS + 1).is_err());
    }

    proptest! {
        #[test]
        fn moebius_is_involutive(bits in proptest::collection::vec(0u8..2, 256)) {
            let t = TruthTable::from_bits(8, &bits).unwrap();
            prop_assert_eq!(t.anf().tt(), t);
        }

        #[test]
        fn parseval_and_inverse_wht(bits in proptest::collection::vec(0u8..2, 256)) {
            let t = TruthTable::from_bits(8, &bits).unwrap();
            let w = t.walsh();
            prop_assert!(w.parseval_holds());
            prop_assert_eq!(w.inverse().unwrap(), t);
        }

        #[test]
        fn second_derivatives_commute(bits in proptest::collection::vec(0u8..2, 64),
                                      a in 0u32..64, b in 0u32..64) {
            let t = TruthTable::from_bits(6, &bits).unwrap();
            let ab = t.derivative(a).derivative(b);
            let ba = t.derivative(b).derivative(a);
            prop_assert_eq!(ab, ba);
        }

        #[test]
        fn linear_structures_form_a_subspace(bits in proptest::collection::vec(0u8..2, 64)) {
            let t = TruthTable::from_bits(6, &bits).unwrap();
            let ls = t.linear_structures();
            prop_assert!(ls.contains(&0));
            for &a in &ls {
                for &b in &ls {
                    prop_assert!(ls.binary_search(&(a ^ b)).is_ok());
                }
            }
        }
    }

    #[test]
    fn trace_component_linear_space_is_a_scaled_subfield() {
        // f(y) = Tr(delta y^3) on GF(2^4) with delta = beta^3: the
        // linear structures form beta^{-1} F_4, where F_4 inside
        // GF(2^4) is {0, 1, a^5, a^10}
        let ctx = crate::gf2m::FieldContext::new(4, None).unwrap();
        let beta = ctx.generator();
        let delta = ctx.pow(beta, 3).unwrap();
        let f = TruthTable::from_fn(4, |y| {
            ctx.trace(ctx.mul(delta, ctx.pow(y, 3).unwrap()))
        })
        .unwrap();
        let beta_inv = ctx.inv(beta).unwrap();
        let mut expected = vec![0u32];
        for e in [0i64, 5, 10] {
            expected.push(ctx.mul(beta_inv, ctx.generator_pow(e)));
        }
        expected.sort_unstable();
        assert_eq!(f.linear_structures(), expected);
    }

    #[test]
    fn moebius_exhaustive_small_n() {
        for n in 1..=4u32 {
            for v in 0u32..(1 << (1 << n)) {
                let t = TruthTable::from_fn(n, |x| v >> x & 1 == 1).unwrap();
                assert_eq!(t.anf().tt(), t);
            }
        }
    }
}
