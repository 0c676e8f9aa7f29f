//! Arithmetic in F_{2^m} over a primitive modulus, with exp/log tables,
//! absolute trace, and the encoding that bridges field elements and
//! truth-table indices.
//!
//! Elements are stored as bit masks in the polynomial basis
//! (1, a, ..., a^{m-1}); the coefficient of 1 sits in the least
//! significant bit, so field addition is plain XOR and an element IS a
//! valid truth-table index. The Gram matrix of the trace form is
//! precomputed so that Tr(x y) can be re-expressed as an F_2 dot product
//! when field-style and vector-style constructions are mixed.

use crate::error::{Error, Result};

/// Largest supported extension degree (exp/log tables stay small).
pub const MAX_DEGREE: u32 = 16;

/// GF(2^m) context: modulus, exp/log tables, trace table, Gram matrix.
#[derive(Clone, Debug)]
pub struct FieldContext {
    m: u32,
    modulus: u32,
    exp: Vec<u16>,
    log: Vec<u16>,
    trace_bits: Vec<u64>,
    gram: Vec<u32>,
}

/// Remainder of `a` modulo the polynomial `modulus` (degree `m`).
fn poly_rem(mut a: u64, modulus: u32, m: u32) -> u32 {
    while a >> m != 0 {
        let shift = 63 - a.leading_zeros() - m;
        a ^= (modulus as u64) << shift;
    }
    a as u32
}

/// Finds a nontrivial divisor of the modulus, if any, by trial division
/// over all polynomials of degree 1..=m/2.
fn reducible_factor(modulus: u32, m: u32) -> Option<u32> {
    for deg in 1..=m / 2 {
        for low in 0..1u32 << deg {
            let divisor = 1 << deg | low;
            if poly_divides(divisor, deg, modulus, m) {
                return Some(divisor);
            }
        }
    }
    None
}

fn poly_divides(divisor: u32, deg: u32, mut value: u32, m: u32) -> bool {
    let mut vdeg = m;
    while vdeg >= deg {
        if value >> vdeg & 1 == 1 {
            value ^= divisor << (vdeg - deg);
        }
        if vdeg == 0 {
            break;
        }
        vdeg -= 1;
    }
    value == 0
}

impl FieldContext {
    /// Builds the context. `modulus: None` selects the default for m:
    /// the lexicographically least primitive polynomial (x^3+x+1 for
    /// m = 3, x^4+x+1 for m = 4).
    pub fn new(m: u32, modulus: Option<u32>) -> Result<Self> {
        if !(2..=MAX_DEGREE).contains(&m) {
            return Err(Error::InvalidFieldDegree { m, max: MAX_DEGREE });
        }
        let modulus = match modulus {
            Some(p) => p,
            None => Self::default_modulus(m)?,
        };
        if modulus >> m != 1 {
            return Err(Error::BadModulusDegree { modulus, m });
        }
        if let Some(factor) = reducible_factor(modulus, m) {
            return Err(Error::ModulusReducible { modulus, factor });
        }
        let order = (1u32 << m) - 1;
        let mut exp = vec![0u16; order as usize + 1];
        let mut log = vec![0u16; 1usize << m];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x as u16;
            if x == 1 && i > 0 {
                return Err(Error::ModulusNotPrimitive { modulus, order: i });
            }
            log[x as usize] = i as u16;
            x = poly_rem((x as u64) << 1, modulus, m);
        }
        if x != 1 {
            // irreducible modulus always returns to 1 at the group order
            return Err(Error::ModulusNotPrimitive { modulus, order });
        }
        exp[order as usize] = 1;

        let mut ctx = FieldContext {
            m,
            modulus,
            exp,
            log,
            trace_bits: vec![0u64; (1usize << m).div_ceil(64)],
            gram: vec![0u32; m as usize],
        };
        for v in 0..1u32 << m {
            if ctx.compute_trace(v) {
                ctx.trace_bits[(v >> 6) as usize] |= 1 << (v & 63);
            }
        }
        for i in 0..m {
            for j in 0..m {
                let basis_product = ctx.mul(1 << i, 1 << j);
                if ctx.trace(basis_product) {
                    ctx.gram[i as usize] |= 1 << j;
                }
            }
        }
        Ok(ctx)
    }

    /// Lexicographically least primitive polynomial of degree m.
    pub fn default_modulus(m: u32) -> Result<u32> {
        if !(2..=MAX_DEGREE).contains(&m) {
            return Err(Error::InvalidFieldDegree { m, max: MAX_DEGREE });
        }
        let base = 1u32 << m;
        for low in 1..base {
            let candidate = base | low;
            if reducible_factor(candidate, m).is_some() {
                continue;
            }
            if Self::is_primitive(candidate, m) {
                return Ok(candidate);
            }
        }
        unreachable!("a primitive polynomial exists for every degree")
    }

    fn is_primitive(modulus: u32, m: u32) -> bool {
        let order = (1u32 << m) - 1;
        let mut x = 1u32;
        for i in 0..order {
            if x == 1 && i > 0 {
                return false;
            }
            x = poly_rem((x as u64) << 1, modulus, m);
        }
        x == 1
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, 2^m.
    pub fn size(&self) -> u32 {
        1 << self.m
    }

    /// Order of the multiplicative group, 2^m - 1.
    pub fn order(&self) -> u32 {
        (1 << self.m) - 1
    }

    /// The primitive element a (the class of x).
    pub fn generator(&self) -> u32 {
        0b10
    }

    /// a^e for the primitive element a; e may be negative.
    pub fn generator_pow(&self, e: i64) -> u32 {
        let order = self.order() as i64;
        self.exp[e.rem_euclid(order) as usize] as u32
    }

    fn check_elem(&self, x: u32) -> Result<()> {
        if x >= self.size() {
            return Err(Error::NotInField { value: x, m: self.m });
        }
        Ok(())
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        debug_assert!(x < self.size() && y < self.size());
        if x == 0 || y == 0 {
            return 0;
        }
        let order = self.order();
        let e = self.log[x as usize] as u32 + self.log[y as usize] as u32;
        self.exp[(e % order) as usize] as u32
    }

    pub fn inv(&self, x: u32) -> Result<u32> {
        self.check_elem(x)?;
        if x == 0 {
            return Err(Error::ZeroInverse);
        }
        let order = self.order();
        let e = (order - self.log[x as usize] as u32) % order;
        Ok(self.exp[e as usize] as u32)
    }

    /// x^e with e possibly negative (via the group order). By convention
    /// 0^0 = 1 and 0^e = 0 for e > 0; 0 raised to a negative power is an
    /// error.
    pub fn pow(&self, x: u32, e: i64) -> Result<u32> {
        self.check_elem(x)?;
        if x == 0 {
            return match e {
                0 => Ok(1),
                e if e > 0 => Ok(0),
                _ => Err(Error::ZeroInverse),
            };
        }
        let order = self.order() as i64;
        let e = (self.log[x as usize] as i64 * (e.rem_euclid(order))).rem_euclid(order);
        Ok(self.exp[e as usize] as u32)
    }

    /// Discrete log base a; error for 0.
    pub fn log(&self, x: u32) -> Result<u32> {
        self.check_elem(x)?;
        if x == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.log[x as usize] as u32)
    }

    fn compute_trace(&self, x: u32) -> bool {
        let mut acc = 0u32;
        let mut p = x;
        for _ in 0..self.m {
            acc ^= p;
            p = self.mul(p, p);
        }
        debug_assert!(acc == 0 || acc == 1);
        acc == 1
    }

    /// Absolute trace Tr(x) = sum of x^{2^i}, i < m.
    #[inline]
    pub fn trace(&self, x: u32) -> bool {
        debug_assert!(x < self.size());
        self.trace_bits[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    /// Coefficient vector of x in the polynomial basis; the coefficient
    /// of 1 lands in x_1 (the LSB). With this crate's representation the
    /// encoding is the identity on bit patterns.
    pub fn elem_to_vec(&self, x: u32) -> Result<u32> {
        self.check_elem(x)?;
        Ok(x)
    }

    pub fn vec_to_elem(&self, v: u32) -> Result<u32> {
        self.check_elem(v)?;
        Ok(v)
    }

    /// Gram matrix rows of the trace bilinear form: row i holds the bits
    /// Tr(a^i a^j) over j.
    pub fn gram_matrix(&self) -> &[u32] {
        &self.gram
    }

    /// The vector u with Tr(x c) = u . x for all x, through the Gram
    /// matrix.
    pub fn trace_dual_vector(&self, c: u32) -> u32 {
        let mut u = 0u32;
        for j in 0..self.m {
            if self.trace(self.mul(1 << j, c)) {
                u |= 1 << j;
            }
        }
        u
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_match_small_cases() {
        assert_eq!(FieldContext::default_modulus(3).unwrap(), 0xB);
        assert_eq!(FieldContext::default_modulus(4).unwrap(), 0x13);
        assert_eq!(FieldContext::default_modulus(5).unwrap(), 0x25);
        // x^8 + x^4 + x^3 + x^2 + 1; the lexicographically smaller AES
        // polynomial 0x11B is irreducible but not primitive
        assert_eq!(FieldContext::default_modulus(8).unwrap(), 0x11D);
        assert_eq!(FieldContext::default_modulus(16).unwrap(), 0x1002D);
    }

    #[test]
    fn m3_reduction_of_a_cubed() {
        let f = FieldContext::new(3, None).unwrap();
        // a^3 = a + 1, vector 110 read x1 x2 x3, i.e. index 0b011
        assert_eq!(f.generator_pow(3), 0b011);
        assert_eq!(f.elem_to_vec(0b011).unwrap(), 3);
    }

    #[test]
    fn m4_reduction_of_a_fourth() {
        let f = FieldContext::new(4, None).unwrap();
        assert_eq!(f.generator_pow(4), 0b0011);
    }

    #[test]
    fn irreducible_but_not_primitive_rejected() {
        // x^4 + x^3 + x^2 + x + 1: irreducible, order of x is 5
        let err = FieldContext::new(4, Some(0x1F)).unwrap_err();
        match err {
            Error::ModulusNotPrimitive { order, .. } => assert_eq!(order, 5),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn reducible_rejected() {
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        let err = FieldContext::new(4, Some(0x15)).unwrap_err();
        assert!(matches!(err, Error::ModulusReducible { factor: 0b111, .. }));
    }

    #[test]
    fn exponent_arithmetic_m3() {
        let f = FieldContext::new(3, None).unwrap();
        // a^4 * a^4 = a^8 = a
        let a4 = f.generator_pow(4);
        assert_eq!(f.mul(a4, a4), f.generator());
        // alpha_1 + alpha_2 + alpha_3 = a + a^4 + a^6 = 1
        assert_eq!(f.generator_pow(1) ^ f.generator_pow(4) ^ f.generator_pow(6), 1);
    }

    #[test]
    fn alpha_sum_m4() {
        let f = FieldContext::new(4, None).unwrap();
        let sum = f.generator_pow(1) ^ f.generator_pow(2) ^ f.generator_pow(4);
        assert_eq!(sum, f.generator_pow(8));
    }

    #[test]
    fn trace_basics() {
        let f3 = FieldContext::new(3, None).unwrap();
        assert!(!f3.trace(0));
        assert!(f3.trace(1), "Tr(1) = m mod 2 for odd m");
        let f4 = FieldContext::new(4, None).unwrap();
        let ones = (0..16).filter(|&x| f4.trace(x)).count();
        assert_eq!(ones, 8, "trace is balanced");
    }

    #[test]
    fn trace_is_linear_and_frobenius_invariant() {
        for m in 2..=8u32 {
            let f = FieldContext::new(m, None).unwrap();
            for x in 0..f.size() {
                assert_eq!(f.trace(f.mul(x, x)), f.trace(x));
                for y in 0..f.size() {
                    assert_eq!(f.trace(x ^ y), f.trace(x) ^ f.trace(y));
                }
            }
        }
    }

    #[test]
    fn pow_and_inverse() {
        let f = FieldContext::new(5, None).unwrap();
        for x in 1..f.size() {
            assert_eq!(f.pow(x, f.order() as i64).unwrap(), 1);
            assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
            assert_eq!(f.pow(x, -1).unwrap(), f.inv(x).unwrap());
        }
        assert_eq!(f.pow(0, 0).unwrap(), 1);
        assert_eq!(f.pow(0, 5).unwrap(), 0);
        assert!(f.pow(0, -2).is_err());
        assert!(f.inv(0).is_err());
    }

    #[test]
    fn trace_form_is_non_degenerate() {
        for m in 2..=8u32 {
            let f = FieldContext::new(m, None).unwrap();
            for x in 1..f.size() {
                assert!((0..f.size()).any(|y| f.trace(f.mul(x, y))));
            }
        }
    }

    #[test]
    fn gram_matrix_expresses_trace_products() {
        let f = FieldContext::new(4, None).unwrap();
        for x in 0..16 {
            for c in 0..16 {
                let u = f.trace_dual_vector(c);
                assert_eq!(crate::boolfn::dot(u, x), f.trace(f.mul(x, c)));
            }
        }
    }

    #[test]
    fn mul_distributes_and_associates() {
        let f = FieldContext::new(6, None).unwrap();
        let mut state = 0x12345u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as u32) & (f.size() - 1)
        };
        for _ in 0..2000 {
            let (x, y, z) = (next(), next(), next());
            assert_eq!(f.mul(x, y), f.mul(y, x));
            assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
            assert_eq!(f.mul(x, y ^ z), f.mul(x, y) ^ f.mul(x, z));
        }
    }
}
