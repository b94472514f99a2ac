//! The binary tetrahedral group of order 24, realized as `Q8 x| C3`, and
//! its group algebra with coefficients in `Q(w)`.
//!
//! Concrete model: `Q8 = {±1, ±i, ±j, ±k}` as unit quaternions and a
//! generator `t` of `C3` acting by the order-3 automorphism
//! `i -> j -> k -> i`. The distinguished elements are `y = i` (order 4),
//! `z = y^2 = -1` (the unique central involution) and `t`.

use crate::coeff::CycNum;

pub const ORDER: usize = 24;
pub const NUM_CLASSES: usize = 7;

/// Multiplication in `Q8`: elements are `(axis, sign)` with axes
/// `1, i, j, k` encoded 0..4 and sign bit 1 for the negative.
fn q8_mul(a: u8, b: u8) -> u8 {
    let (ax_a, s_a) = (a >> 1, a & 1);
    let (ax_b, s_b) = (b >> 1, b & 1);
    let mut sign = s_a ^ s_b;
    let axis = if ax_a == 0 {
        ax_b
    } else if ax_b == 0 {
        ax_a
    } else if ax_a == ax_b {
        sign ^= 1; // i^2 = j^2 = k^2 = -1
        0
    } else {
        // i*j = k cyclically; the reversed order flips the sign.
        let cyclic = matches!((ax_a, ax_b), (1, 2) | (2, 3) | (3, 1));
        if !cyclic {
            sign ^= 1;
        }
        6 - ax_a - ax_b
    };
    (axis << 1) | sign
}

/// The automorphism `i -> j -> k -> i` of `Q8` (the action of `t`).
fn q8_rot(a: u8) -> u8 {
    let (axis, sign) = (a >> 1, a & 1);
    let axis = if axis == 0 { 0 } else { axis % 3 + 1 };
    (axis << 1) | sign
}

/// Full multiplication and class data for the order-24 group.
///
/// Elements are indexed `0..24` as `c * 8 + q` for `q` in `Q8` and
/// `c` the power of `t`; multiplication is
/// `(q1, c1) * (q2, c2) = (q1 * rot^c1(q2), c1 + c2)`.
#[derive(Clone)]
pub struct GroupTable {
    pub mul: Vec<Vec<u8>>,
    pub inv: Vec<u8>,
    /// Class index of each element, in the representative order below.
    pub class_of: Vec<u8>,
    /// Representatives `(1, z, y, t, t^2, t z, t^2 z)`.
    pub reps: [u8; NUM_CLASSES],
    pub class_sizes: [usize; NUM_CLASSES],
    pub centralizer_orders: [usize; NUM_CLASSES],
    pub element_orders: Vec<u8>,
    pub class_elements: Vec<Vec<u8>>,
}

pub const REP_NAMES: [&str; NUM_CLASSES] = ["1", "z", "y", "t", "t2", "tz", "t2z"];

fn raw_mul(a: usize, b: usize) -> usize {
    let (qa, ca) = ((a % 8) as u8, a / 8);
    let (qb, cb) = ((b % 8) as u8, b / 8);
    let mut qb_rot = qb;
    for _ in 0..ca {
        qb_rot = q8_rot(qb_rot);
    }
    let q = q8_mul(qa, qb_rot);
    (ca + cb) % 3 * 8 + q as usize
}

/// Build the group: multiplication table, inverses, conjugacy classes,
/// centralizer orders and element orders. The construction is
/// deterministic and is validated by the invariants below (full
/// associativity scan lives in the verification harness and tests).
pub fn build_group() -> GroupTable {
    let mul: Vec<Vec<u8>> = (0..ORDER)
        .map(|a| (0..ORDER).map(|b| raw_mul(a, b) as u8).collect())
        .collect();
    let identity = 0usize;
    let inv: Vec<u8> = (0..ORDER)
        .map(|a| {
            (0..ORDER)
                .find(|&b| mul[a][b] as usize == identity)
                .expect("every element has an inverse") as u8
        })
        .collect();

    // z = -1 at q-index 1, y = i at q-index 2, t at index 8.
    let z = 1u8;
    let y = 2u8;
    let t = 8u8;
    let t2 = mul[t as usize][t as usize];
    let tz = mul[t as usize][z as usize];
    let t2z = mul[t2 as usize][z as usize];
    let reps: [u8; NUM_CLASSES] = [0, z, y, t, t2, tz, t2z];

    // Conjugacy classes by brute force.
    let mut class_of = vec![u8::MAX; ORDER];
    let mut class_elements: Vec<Vec<u8>> = Vec::new();
    for (ci, &rep) in reps.iter().enumerate() {
        assert_eq!(class_of[rep as usize], u8::MAX, "representatives lie in distinct classes");
        let mut members: Vec<u8> = (0..ORDER)
            .map(|g| {
                let gi = inv[g] as usize;
                mul[mul[g][rep as usize] as usize][gi]
            })
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            class_of[m as usize] = ci as u8;
        }
        class_elements.push(members);
    }
    assert!(class_of.iter().all(|&c| c != u8::MAX), "classes cover the group");

    let mut class_sizes = [0usize; NUM_CLASSES];
    for (ci, members) in class_elements.iter().enumerate() {
        class_sizes[ci] = members.len();
    }
    let centralizer_orders: [usize; NUM_CLASSES] =
        std::array::from_fn(|ci| ORDER / class_sizes[ci]);

    let element_orders: Vec<u8> = (0..ORDER)
        .map(|g| {
            let mut acc = g;
            let mut n = 1u8;
            while acc != identity {
                acc = mul[acc][g] as usize;
                n += 1;
            }
            n
        })
        .collect();

    GroupTable {
        mul,
        inv,
        class_of,
        reps,
        class_sizes,
        centralizer_orders,
        element_orders,
        class_elements,
    }
}

impl GroupTable {
    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Class index of the inverse of the representative of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of[self.inv_idx(self.reps[c] as usize)] as usize
    }

    /// Elements of odd order: the identity together with the two classes
    /// of order-3 elements.
    pub fn odd_order_elements(&self) -> Vec<usize> {
        (0..ORDER).filter(|&g| self.element_orders[g] % 2 == 1).collect()
    }

    pub fn class_has_odd_order(&self, c: usize) -> bool {
        self.element_orders[self.reps[c] as usize] % 2 == 1
    }

    /// The sum of the elements of class `c` in the group algebra.
    pub fn class_sum(&self, c: usize) -> GroupAlgebraElement {
        let mut coeffs = vec![CycNum::zero(); ORDER];
        for &g in &self.class_elements[c] {
            coeffs[g as usize] = CycNum::one();
        }
        GroupAlgebraElement { coeffs }
    }
}

/// Element of the group algebra: a length-24 coefficient vector over
/// `Q(w)` indexed by group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    pub coeffs: Vec<CycNum>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        GroupAlgebraElement { coeffs: vec![CycNum::zero(); ORDER] }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(g: usize) -> Self {
        let mut coeffs = vec![CycNum::zero(); ORDER];
        coeffs[g] = CycNum::one();
        GroupAlgebraElement { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<CycNum>) -> Self {
        assert_eq!(coeffs.len(), ORDER);
        GroupAlgebraElement { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        GroupAlgebraElement { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        GroupAlgebraElement { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Convolution product through the multiplication table.
    pub fn mul(&self, other: &Self, table: &GroupTable) -> Self {
        let mut out = vec![CycNum::zero(); ORDER];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = table.mul_idx(i, j);
                out[k] = &out[k] + &(a * b);
            }
        }
        GroupAlgebraElement { coeffs: out }
    }

    /// True iff the element commutes with every group basis element.
    ///
    /// `x g = g x` for all `g` holds iff the coefficients are constant
    /// on conjugacy orbits: comparing `(x g)[k] = x[k g^-1]` with
    /// `(g x)[k] = x[g^-1 k]` at `k = h g` gives `x[h] = x[g^-1 h g]`.
    pub fn is_central(&self, table: &GroupTable) -> bool {
        (0..ORDER).all(|g| {
            let gi = table.inv_idx(g);
            (0..ORDER).all(|h| {
                let conj = table.mul_idx(table.mul_idx(gi, h), g);
                self.coeffs[h] == self.coeffs[conj]
            })
        })
    }

    pub fn all_in_o(&self) -> bool {
        self.coeffs.iter().all(|c| c.in_o())
    }

    /// Coefficient-wise reduction into the group algebra over `F_4`;
    /// fails on any coefficient outside `O`.
    pub fn reduce_mod2(&self) -> Result<Vec<crate::coeff::ResidueElem>, crate::coeff::CoeffError> {
        self.coeffs.iter().map(|c| c.reduce_mod2()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_axioms_and_sizes() {
        let g = build_group();
        // Associativity on all 24^3 triples.
        for a in 0..ORDER {
            for b in 0..ORDER {
                let ab = g.mul_idx(a, b);
                for c in 0..ORDER {
                    assert_eq!(g.mul_idx(ab, c), g.mul_idx(a, g.mul_idx(b, c)));
                }
            }
        }
        for a in 0..ORDER {
            assert_eq!(g.mul_idx(a, g.inv_idx(a)), 0);
            assert_eq!(g.mul_idx(0, a), a);
            assert_eq!(g.mul_idx(a, 0), a);
        }
        assert_eq!(g.class_sizes, [1, 1, 6, 4, 4, 4, 4]);
        for c in 0..NUM_CLASSES {
            assert_eq!(g.class_sizes[c] * g.centralizer_orders[c], ORDER);
        }
        assert_eq!(g.centralizer_orders[3], 6);
    }

    #[test]
    fn distinguished_elements() {
        let g = build_group();
        let y = g.reps[2] as usize;
        let z = g.reps[1] as usize;
        let t = g.reps[3] as usize;
        assert_eq!(g.mul_idx(y, y), z);
        assert_eq!(g.element_orders[y], 4);
        assert_eq!(g.element_orders[t], 3);
        assert_eq!(g.mul_idx(g.mul_idx(t, t), t), 0);
        // z is central; the center is exactly {1, z}.
        let central: Vec<usize> = (0..ORDER)
            .filter(|&a| (0..ORDER).all(|b| g.mul_idx(a, b) == g.mul_idx(b, a)))
            .collect();
        assert_eq!(central, vec![0, z]);
    }

    #[test]
    fn odd_order_elements_match_classes() {
        let g = build_group();
        let odd = g.odd_order_elements();
        assert_eq!(odd.len(), 9);
        assert!(odd.contains(&0));
        assert!(!odd.contains(&(g.reps[1] as usize)));
        // Exactly the identity and the two order-3 classes.
        let mut expect: Vec<usize> = vec![0];
        expect.extend(g.class_elements[3].iter().map(|&x| x as usize));
        expect.extend(g.class_elements[4].iter().map(|&x| x as usize));
        expect.sort_unstable();
        assert_eq!(odd, expect);
    }

    #[test]
    fn class_sums_are_central_and_commute() {
        let g = build_group();
        let sums: Vec<GroupAlgebraElement> = (0..NUM_CLASSES).map(|c| g.class_sum(c)).collect();
        assert_eq!(sums[0], GroupAlgebraElement::one());
        let y_sum = &sums[2];
        assert_eq!(y_sum.coeffs.iter().filter(|c| !c.is_zero()).count(), 6);
        for s in &sums {
            assert!(s.is_central(&g));
        }
        for a in &sums {
            for b in &sums {
                assert_eq!(a.mul(b, &g), b.mul(a, &g));
            }
        }
        // The class sums span a 7-dimensional space.
        let rows: Vec<Vec<CycNum>> = sums.iter().map(|s| s.coeffs.clone()).collect();
        assert_eq!(crate::linalg::rank(&rows), NUM_CLASSES);
    }
}
