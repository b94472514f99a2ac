//! Exact arithmetic in `Q(w)` for a primitive cube root of unity `w`,
//! its 2-local subring `O` and the residue field of order 4.
//!
//! `O` is the localisation of `Z[w]` at 2. Since 2 is inert in `Z[w]`
//! this is a discrete valuation ring with uniformizer 2 and residue
//! field `F_4`; the valuation of `a + b*w` is computed through the field
//! norm `a^2 - a*b + b^2`. All arithmetic is exact: rationals with
//! arbitrary-precision integers, no floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoeffError {
    #[error("element has negative 2-adic valuation {0}, not in O")]
    NotIntegral(i64),
}

/// 2-adic valuation: an integer for nonzero elements, infinite for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_nonnegative(self) -> bool {
        match self {
            Valuation::Finite(v) => v >= 0,
            Valuation::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

fn v2_bigint(n: &BigInt) -> Valuation {
    if n.is_zero() {
        Valuation::Infinite
    } else {
        Valuation::Finite(n.trailing_zeros().expect("nonzero integer") as i64)
    }
}

/// 2-adic valuation of a rational number.
pub fn v2_rat(q: &Rational) -> Valuation {
    match (v2_bigint(q.numer()), v2_bigint(q.denom())) {
        (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a - b),
        (Valuation::Infinite, _) => Valuation::Infinite,
        _ => unreachable!("denominator is nonzero"),
    }
}

/// Element `a + b*w` of `Q(w)`, with `w^2 = -1 - w` and `w^3 = 1`.
///
/// Fractions are kept in lowest terms with positive denominators by the
/// underlying rational type, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycNum {
    pub a: Rational,
    pub b: Rational,
}

impl CycNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        CycNum { a, b }
    }

    pub fn zero() -> Self {
        CycNum::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        CycNum::new(Rational::one(), Rational::zero())
    }

    /// The primitive cube root of unity `w`.
    pub fn omega() -> Self {
        CycNum::new(Rational::zero(), Rational::one())
    }

    /// `w^2 = -1 - w`.
    pub fn omega_sq() -> Self {
        CycNum::new(-Rational::one(), -Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        CycNum::new(Rational::from(BigInt::from(n)), Rational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        CycNum::new(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            Rational::zero(),
        )
    }

    pub fn from_rat(a: Rational) -> Self {
        CycNum::new(a, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Image under the nontrivial field automorphism `w -> w^2`.
    pub fn conj(&self) -> CycNum {
        CycNum::new(&self.a - &self.b, -self.b.clone())
    }

    /// Field norm `x * conj(x) = a^2 - a*b + b^2`, a rational number.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> CycNum {
        assert!(!self.is_zero(), "division by zero in Q(w)");
        let n = self.norm();
        let c = self.conj();
        CycNum::new(c.a / &n, c.b / &n)
    }

    pub fn scaled(&self, r: &Rational) -> CycNum {
        CycNum::new(&self.a * r, &self.b * r)
    }

    /// 2-adic valuation, computed as half the valuation of the norm.
    ///
    /// 2 is inert in `Z[w]`, so the norm of a nonzero element has even
    /// valuation; this is asserted.
    pub fn v2(&self) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        match v2_rat(&self.norm()) {
            Valuation::Finite(v) => {
                debug_assert!(v % 2 == 0, "norm valuation must be even for inert 2");
                Valuation::Finite(v / 2)
            }
            Valuation::Infinite => unreachable!("norm of nonzero element is nonzero"),
        }
    }

    /// Membership in the valuation ring `O`.
    pub fn in_o(&self) -> bool {
        self.v2().is_nonnegative()
    }

    /// The canonical map `O -> F_4`, sending `w` to the residue generator.
    ///
    /// Rejects elements of negative valuation.
    pub fn reduce_mod2(&self) -> Result<ResidueElem, CoeffError> {
        match self.v2() {
            Valuation::Finite(v) if v < 0 => return Err(CoeffError::NotIntegral(v)),
            _ => {}
        }
        // Both coordinates have odd denominator; an odd denominator is
        // congruent to 1 mod 2, so the parity of the numerator decides.
        let bit = |q: &Rational| -> u8 {
            debug_assert!(q.denom().is_odd());
            u8::from(q.numer().is_odd())
        };
        Ok(ResidueElem::from_bits(bit(&self.a), bit(&self.b)))
    }

    /// Exact power for small exponents.
    pub fn pow(&self, mut n: u32) -> CycNum {
        let mut acc = CycNum::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    fn fmt_rat(q: &Rational) -> String {
        if q.denom().is_one() {
            q.numer().to_string()
        } else {
            format!("{}/{}", q.numer(), q.denom())
        }
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::new(-self.a.clone(), -self.b.clone())
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    // (a + b*w)(c + d*w) = ac - bd + (ad + bc - bd)*w, using w^2 = -1 - w.
    fn mul(self, rhs: &CycNum) -> CycNum {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        CycNum::new(ac - &bd, ad + bc - bd)
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        &self + &rhs
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    /// Exact rendering: "a", "b*w" or "a+b*w" with reduced fractions,
    /// e.g. "-1/8+1/4*w". The bare generator prints as "w".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if !self.a.is_zero() {
            out.push_str(&CycNum::fmt_rat(&self.a));
        }
        if !self.b.is_zero() {
            if !self.a.is_zero() && self.b.is_positive() {
                out.push('+');
            }
            if self.b == Rational::one() {
                out.push('w');
            } else if self.b == -Rational::one() {
                out.push_str("-w");
            } else {
                out.push_str(&CycNum::fmt_rat(&self.b));
                out.push_str("*w");
            }
        }
        write!(f, "{out}")
    }
}

/// Element of the field with 4 elements `{0, 1, p, p^2}`, `p^2 = p + 1`.
///
/// Encoded as two bits: bit 0 is the coefficient of 1, bit 1 the
/// coefficient of the generator `p` (the residue of `w`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueElem(u8);

impl ResidueElem {
    pub const ZERO: ResidueElem = ResidueElem(0);
    pub const ONE: ResidueElem = ResidueElem(1);
    /// The residue of `w`; a generator of the multiplicative group.
    pub const GEN: ResidueElem = ResidueElem(2);
    /// `GEN^2 = GEN + 1`.
    pub const GEN_SQ: ResidueElem = ResidueElem(3);

    pub fn from_bits(one: u8, gen: u8) -> Self {
        ResidueElem((one & 1) | ((gen & 1) << 1))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn from_bits_u8(bits: u8) -> Self {
        debug_assert!(bits < 4);
        ResidueElem(bits)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> ResidueElem {
        match self.0 {
            1 => ResidueElem(1),
            2 => ResidueElem(3), // p * p^2 = p^3 = 1
            3 => ResidueElem(2),
            _ => panic!("inverse of zero in F_4"),
        }
    }

    pub fn pow(self, mut n: u32) -> ResidueElem {
        let mut acc = ResidueElem::ONE;
        let mut base = self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    pub fn all() -> [ResidueElem; 4] {
        [ResidueElem(0), ResidueElem(1), ResidueElem(2), ResidueElem(3)]
    }
}

impl Add for ResidueElem {
    type Output = ResidueElem;
    // Characteristic 2: addition is coefficient-wise xor.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: ResidueElem) -> ResidueElem {
        ResidueElem(self.0 ^ rhs.0)
    }
}

impl Sub for ResidueElem {
    type Output = ResidueElem;
    // Characteristic 2: subtraction coincides with addition.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: ResidueElem) -> ResidueElem {
        self + rhs
    }
}

impl Mul for ResidueElem {
    type Output = ResidueElem;
    fn mul(self, rhs: ResidueElem) -> ResidueElem {
        let (s1, t1) = (self.0 & 1, self.0 >> 1);
        let (s2, t2) = (rhs.0 & 1, rhs.0 >> 1);
        // (s1 + t1*p)(s2 + t2*p) with p^2 = p + 1.
        let tt = t1 & t2;
        let one = (s1 & s2) ^ tt;
        let gen = (s1 & t2) ^ (t1 & s2) ^ tt;
        ResidueElem(one | (gen << 1))
    }
}

impl fmt::Display for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "0"),
            1 => write!(f, "1"),
            2 => write!(f, "p"),
            _ => write!(f, "p^2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn omega_is_cube_root() {
        let w = CycNum::omega();
        assert_eq!(w.pow(3), CycNum::one());
        assert_eq!(&w * &w, CycNum::omega_sq());
        // 1 + w + w^2 = 0
        let sum = &(&CycNum::one() + &w) + &w.pow(2);
        assert!(sum.is_zero());
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(CycNum::from_int(2).v2(), Valuation::Finite(1));
        assert_eq!(CycNum::omega().v2(), Valuation::Finite(0));
        // 1 - w has norm 3, an odd integer.
        let x = &CycNum::one() - &CycNum::omega();
        assert_eq!(x.norm(), rat(3, 1));
        assert_eq!(x.v2(), Valuation::Finite(0));
        assert_eq!(CycNum::zero().v2(), Valuation::Infinite);
    }

    #[test]
    fn membership_examples() {
        assert!(CycNum::from_ratio(1, 3).in_o());
        assert!(!CycNum::from_ratio(1, 2).in_o());
        let w_over_8 = CycNum::new(rat(0, 1), rat(1, 8));
        assert_eq!(w_over_8.v2(), Valuation::Finite(-3));
        assert!(!w_over_8.in_o());
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(CycNum::from_int(3).reduce_mod2(), Ok(ResidueElem::ONE));
        assert_eq!(CycNum::omega().reduce_mod2(), Ok(ResidueElem::GEN));
        assert_eq!(CycNum::from_ratio(1, 3).reduce_mod2(), Ok(ResidueElem::ONE));
        assert_eq!(
            CycNum::from_ratio(1, 2).reduce_mod2(),
            Err(CoeffError::NotIntegral(-1))
        );
        // Consistency: reduce(1/3) is the inverse of reduce(3).
        let r3 = CycNum::from_int(3).reduce_mod2().unwrap();
        let r13 = CycNum::from_ratio(1, 3).reduce_mod2().unwrap();
        assert_eq!(r3 * r13, ResidueElem::ONE);
    }

    #[test]
    fn residue_field_axioms() {
        // p^2 = p + 1 and p^3 = 1.
        assert_eq!(
            ResidueElem::GEN * ResidueElem::GEN,
            ResidueElem::GEN + ResidueElem::ONE
        );
        assert_eq!(ResidueElem::GEN.pow(3), ResidueElem::ONE);
        for x in ResidueElem::all() {
            for y in ResidueElem::all() {
                assert_eq!(x * y, y * x);
                for z in ResidueElem::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
            if !x.is_zero() {
                assert_eq!(x * x.inv(), ResidueElem::ONE);
            }
        }
    }

    /// Independent valuation oracle: min of the coordinate valuations.
    /// `{1, w}` is an O-basis of O, so this agrees with the norm route.
    fn v2_by_coords(x: &CycNum) -> Valuation {
        v2_rat(&x.a).min(v2_rat(&x.b))
    }

    fn arb_cyc() -> impl Strategy<Value = CycNum> {
        let r = (-40i64..=40, 1i64..=40).prop_map(|(n, d)| rat(n, d));
        (r.clone(), r).prop_map(|(a, b)| CycNum::new(a, b))
    }

    proptest! {
        #[test]
        fn v2_is_multiplicative(x in arb_cyc(), y in arb_cyc()) {
            let xy = &x * &y;
            prop_assert_eq!(xy.v2(), x.v2() + y.v2());
        }

        #[test]
        fn v2_ultrametric(x in arb_cyc(), y in arb_cyc()) {
            let s = &x + &y;
            prop_assert!(s.v2() >= x.v2().min(y.v2()));
        }

        #[test]
        fn v2_norm_route_matches_coordinate_route(x in arb_cyc()) {
            prop_assert_eq!(x.v2(), v2_by_coords(&x));
        }

        #[test]
        fn reduction_is_ring_homomorphism(x in arb_cyc(), y in arb_cyc()) {
            if x.in_o() && y.in_o() {
                let rx = x.reduce_mod2().unwrap();
                let ry = y.reduce_mod2().unwrap();
                prop_assert_eq!((&x + &y).reduce_mod2().unwrap(), rx + ry);
                prop_assert_eq!((&x * &y).reduce_mod2().unwrap(), rx * ry);
            }
        }

        #[test]
        fn units_are_valuation_zero(x in arb_cyc()) {
            if !x.is_zero() {
                let inv_in_o = x.inv().in_o();
                let unit = x.in_o() && inv_in_o;
                prop_assert_eq!(unit, x.v2() == Valuation::Finite(0));
                prop_assert_eq!(&x * &x.inv(), CycNum::one());
            }
        }
    }
}
