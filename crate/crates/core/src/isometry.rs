//! The virtual-character lattice, the projective sublattice and its
//! orthogonal complement, exhaustive classification of short vectors,
//! the full group of projective-lattice-preserving self-isometries, and
//! perfectness of the associated bicharacters.
//!
//! Virtual characters are integer 7-vectors in the orthonormal basis of
//! irreducible characters, so norms are plain coefficient dot products.

use crate::chartab::CharacterTable;
use crate::coeff::{CycNum, Valuation};
use crate::group::{GroupTable, NUM_CLASSES, ORDER};
use crate::linalg;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

pub const DIM: usize = 7;

/// Integer vector in the basis `eta0..eta6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VirtualCharacter(pub [i64; DIM]);

impl VirtualCharacter {
    pub fn zero() -> Self {
        VirtualCharacter([0; DIM])
    }

    pub fn basis(i: usize) -> Self {
        let mut v = [0; DIM];
        v[i] = 1;
        VirtualCharacter(v)
    }

    pub fn neg(&self) -> Self {
        VirtualCharacter(std::array::from_fn(|i| -self.0[i]))
    }

    pub fn add(&self, other: &Self) -> Self {
        VirtualCharacter(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        VirtualCharacter(std::array::from_fn(|i| self.0[i] - other.0[i]))
    }

    pub fn norm(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// Value at a group element, evaluated through the character table.
    pub fn value_at(&self, g: usize, table: &CharacterTable, group: &GroupTable) -> CycNum {
        let mut acc = CycNum::zero();
        for (i, &c) in self.0.iter().enumerate() {
            if c != 0 {
                let scaled = table
                    .value_at(i, g, group)
                    .scaled(&crate::coeff::Rational::from(num_bigint::BigInt::from(c)));
                acc = &acc + &scaled;
            }
        }
        acc
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c > 0 && !first {
                write!(f, "+")?;
            }
            match c {
                1 => {}
                -1 => write!(f, "-")?,
                _ => write!(f, "{c}*")?,
            }
            write!(f, "eta{i}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Coefficient dot product; agrees with `(1/24) sum_g u(g) v(g^-1)`
/// evaluated through the table (orthonormality of the irreducible
/// characters), which the tests assert.
pub fn inner_product(u: &VirtualCharacter, v: &VirtualCharacter) -> i64 {
    u.0.iter().zip(&v.0).map(|(a, b)| a * b).sum()
}

/// The same inner product through the character table, as an oracle.
pub fn inner_product_via_table(
    u: &VirtualCharacter,
    v: &VirtualCharacter,
    table: &CharacterTable,
    group: &GroupTable,
) -> CycNum {
    let mut acc = CycNum::zero();
    for g in 0..ORDER {
        let gi = group.inv_idx(g);
        acc = &acc + &(&u.value_at(g, table, group) * &v.value_at(gi, table, group));
    }
    acc.scaled(&crate::coeff::Rational::new(1.into(), (ORDER as i64).into()))
}

/// A sublattice of the virtual-character lattice, given by a basis of
/// integer vectors.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub basis: Vec<VirtualCharacter>,
    gram: Vec<Vec<i64>>,
    gram_adj: Vec<Vec<i64>>,
    gram_det: i64,
}

impl Lattice {
    pub fn new(basis: Vec<VirtualCharacter>) -> Self {
        let gram: Vec<Vec<i64>> = basis
            .iter()
            .map(|a| basis.iter().map(|b| inner_product(a, b)).collect())
            .collect();
        let gram_det: i64 = linalg::det_i64(&gram).try_into().expect("small determinant");
        assert!(gram_det != 0, "lattice basis must be linearly independent");
        let gram_adj = linalg::adjugate_i64(&gram);
        Lattice { basis, gram, gram_adj, gram_det }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &VirtualCharacter) -> bool {
        self.coords(v).is_some()
    }

    /// Exact integer coordinates of `v` in the basis, if `v` lies in the
    /// lattice: solve through the Gram adjugate, then verify
    /// reconstruction to reject vectors outside the rational span.
    pub fn coords(&self, v: &VirtualCharacter) -> Option<Vec<i64>> {
        let k = self.rank();
        let y: Vec<i64> = self.basis.iter().map(|b| inner_product(v, b)).collect();
        let mut coords = Vec::with_capacity(k);
        for i in 0..k {
            let num: i64 = (0..k).map(|j| y[j] * self.gram_adj[j][i]).sum();
            if num % self.gram_det != 0 {
                return None;
            }
            coords.push(num / self.gram_det);
        }
        let mut rec = VirtualCharacter::zero();
        for (c, b) in coords.iter().zip(&self.basis) {
            for i in 0..DIM {
                rec.0[i] += c * b.0[i];
            }
        }
        if rec == *v {
            Some(coords)
        } else {
            None
        }
    }

    /// All lattice elements of norm exactly `n`, both signs included,
    /// sorted lexicographically.
    ///
    /// Enumerates coefficient vectors against the Gram form: the dual
    /// bound `c_i^2 <= n * (G^-1)_ii` caps every coefficient
    /// (Cauchy-Schwarz against the dual basis), and the exact quadratic
    /// form filters, so the enumeration is exhaustive.
    pub fn elements_of_norm(&self, n: i64) -> Vec<VirtualCharacter> {
        assert!(n >= 1);
        let k = self.rank();
        let bounds: Vec<i64> = (0..k)
            .map(|i| isqrt(n * self.gram_adj[i][i] / self.gram_det))
            .collect();
        let mut out = Vec::new();
        let mut c = vec![0i64; k];
        self.search(0, &bounds, &mut c, n, &mut out);
        out.sort();
        out
    }

    fn search(
        &self,
        i: usize,
        bounds: &[i64],
        c: &mut Vec<i64>,
        n: i64,
        out: &mut Vec<VirtualCharacter>,
    ) {
        if i == self.rank() {
            if self.quadratic(c) == n {
                let mut v = VirtualCharacter::zero();
                for (ci, b) in c.iter().zip(&self.basis) {
                    for d in 0..DIM {
                        v.0[d] += ci * b.0[d];
                    }
                }
                out.push(v);
            }
            return;
        }
        for x in -bounds[i]..=bounds[i] {
            c[i] = x;
            self.search(i + 1, bounds, c, n, out);
        }
        c[i] = 0;
    }

    fn quadratic(&self, c: &[i64]) -> i64 {
        let k = self.rank();
        let mut acc = 0;
        for i in 0..k {
            for j in 0..k {
                acc += c[i] * self.gram[i][j] * c[j];
            }
        }
        acc
    }
}

/// Exact integer square root (floor).
fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Independent oracle: scan all integer 7-vectors with entries bounded by
/// `isqrt(n)` and keep the lattice members of norm `n`.
pub fn elements_of_norm_by_scan(lattice: &Lattice, n: i64) -> Vec<VirtualCharacter> {
    fn rec(
        i: usize,
        bound: i64,
        v: &mut [i64; DIM],
        n: i64,
        lattice: &Lattice,
        out: &mut Vec<VirtualCharacter>,
    ) {
        if i == DIM {
            let vc = VirtualCharacter(*v);
            if vc.norm() == n && lattice.contains(&vc) {
                out.push(vc);
            }
            return;
        }
        for x in -bound..=bound {
            v[i] = x;
            rec(i + 1, bound, v, n, lattice, out);
        }
        v[i] = 0;
    }
    let bound = isqrt(n);
    let mut out = Vec::new();
    let mut v = [0i64; DIM];
    rec(0, bound, &mut v, n, lattice, &mut out);
    out.sort();
    out
}

/// The projective lattice, spanned by the three projective
/// indecomposable characters (columns of the decomposition matrix).
pub fn proj_lattice(projectives: &[[i64; 7]; 3]) -> Lattice {
    Lattice::new(projectives.iter().map(|p| VirtualCharacter(*p)).collect())
}

/// The orthogonal complement of the projective lattice: the saturated
/// integer kernel of the pairing against the three projectives.
pub fn l0_lattice(projectives: &[[i64; 7]; 3]) -> Lattice {
    let rows: Vec<Vec<i64>> = projectives.iter().map(|p| p.to_vec()).collect();
    let kernel = linalg::integer_kernel(&rows);
    Lattice::new(
        kernel
            .into_iter()
            .map(|v| VirtualCharacter(v.try_into().expect("dimension 7")))
            .collect(),
    )
}

/// The unique (up to sign) norm-4 element of the complement lattice that
/// is orthogonal to every other norm-4 element.
pub fn distinguished_element(l0: &Lattice) -> Result<VirtualCharacter, String> {
    let norm4 = l0.elements_of_norm(4);
    let mut found: Vec<VirtualCharacter> = Vec::new();
    for v in &norm4 {
        let ok = norm4
            .iter()
            .filter(|u| **u != *v && **u != v.neg())
            .all(|u| inner_product(v, u) == 0);
        if ok {
            found.push(*v);
        }
    }
    match found.len() {
        2 if found[0] == found[1].neg() => Ok(found[0].max(found[1])),
        n => Err(format!("expected a unique element up to sign, found {n}")),
    }
}

// ---------------------------------------------------------------------
// Signed permutations
// ---------------------------------------------------------------------

/// A self-isometry of the virtual-character lattice: `eta_i` maps to
/// `eps_i * eta_{pi(i)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedPermutation {
    pub pi: [usize; DIM],
    pub eps: [i8; DIM],
}

impl SignedPermutation {
    pub fn identity() -> Self {
        SignedPermutation { pi: std::array::from_fn(|i| i), eps: [1; DIM] }
    }

    pub fn neg_identity() -> Self {
        SignedPermutation { pi: std::array::from_fn(|i| i), eps: [-1; DIM] }
    }

    /// Build from disjoint cycles on the indices, all signs positive:
    /// `from_cycles(&[&[0,1,2],&[4,6,5]])` sends 0 to 1, 1 to 2, 2 to 0,
    /// 4 to 6, 6 to 5, 5 to 4.
    pub fn from_cycles(cycles: &[&[usize]]) -> Self {
        let mut pi: [usize; DIM] = std::array::from_fn(|i| i);
        for cycle in cycles {
            for w in 0..cycle.len() {
                pi[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
        }
        SignedPermutation { pi, eps: [1; DIM] }
    }

    /// The signed double swap `(a,-b)(c,-d)`: sends `eta_a` to `-eta_b`,
    /// `eta_b` to `-eta_a`, and likewise for the second pair.
    pub fn signed_swap_pair(a: usize, b: usize, c: usize, d: usize) -> Self {
        let mut p = SignedPermutation::identity();
        p.pi[a] = b;
        p.pi[b] = a;
        p.eps[a] = -1;
        p.eps[b] = -1;
        p.pi[c] = d;
        p.pi[d] = c;
        p.eps[c] = -1;
        p.eps[d] = -1;
        p
    }

    /// Action on a virtual character: `sum v_i eta_i` maps to
    /// `sum v_i eps_i eta_{pi(i)}`.
    pub fn apply(&self, v: &VirtualCharacter) -> VirtualCharacter {
        let mut out = [0i64; DIM];
        for i in 0..DIM {
            out[self.pi[i]] = self.eps[i] as i64 * v.0[i];
        }
        VirtualCharacter(out)
    }

    /// Composition: first `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut pi = [0usize; DIM];
        let mut eps = [0i8; DIM];
        for i in 0..DIM {
            pi[i] = self.pi[other.pi[i]];
            eps[i] = other.eps[i] * self.eps[other.pi[i]];
        }
        SignedPermutation { pi, eps }
    }

    pub fn inverse(&self) -> Self {
        let mut pi = [0usize; DIM];
        let mut eps = [0i8; DIM];
        for i in 0..DIM {
            pi[self.pi[i]] = i;
            eps[self.pi[i]] = self.eps[i];
        }
        SignedPermutation { pi, eps }
    }
}

impl fmt::Display for SignedPermutation {
    /// Signed cycle notation on the symbols `i`, `-i`; a negated fixed
    /// point prints as the symbol 2-cycle `(i,-i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == SignedPermutation::identity() {
            return write!(f, "Id");
        }
        if *self == SignedPermutation::neg_identity() {
            return write!(f, "-Id");
        }
        let mut seen = [false; DIM];
        let mut out = String::new();
        for start in 0..DIM {
            if seen[start] || (self.pi[start] == start && self.eps[start] == 1) {
                seen[start] = true;
                continue;
            }
            if self.pi[start] == start {
                seen[start] = true;
                out.push_str(&format!("({start},-{start})"));
                continue;
            }
            let mut cycle: Vec<(i8, usize)> = Vec::new();
            let mut i = start;
            let mut sign = 1i8;
            loop {
                seen[i] = true;
                cycle.push((sign, i));
                sign *= self.eps[i];
                i = self.pi[i];
                if i == start {
                    break;
                }
            }
            out.push('(');
            for (k, (s, idx)) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                if *s < 0 {
                    out.push('-');
                }
                out.push_str(&idx.to_string());
            }
            // Sign picked up around the whole cycle; when negative the
            // cycle actually has twice the length on signed symbols.
            if sign < 0 {
                out.push_str(",..");
            }
            out.push(')');
        }
        write!(f, "{out}")
    }
}

/// The four generators of the isometry group: `-Id`, the two
/// permutations read off the character table, and the signed double
/// swap.
pub fn generators() -> [SignedPermutation; 4] {
    [
        SignedPermutation::neg_identity(),
        SignedPermutation::from_cycles(&[&[0, 1, 2], &[4, 6, 5]]),
        SignedPermutation::from_cycles(&[&[1, 2], &[4, 5]]),
        SignedPermutation::signed_swap_pair(2, 3, 5, 6),
    ]
}

fn canonical_key(p: &SignedPermutation) -> ([usize; DIM], [i8; DIM]) {
    (p.pi, p.eps)
}

/// Closure of a generating set under composition.
pub fn closure(gens: &[SignedPermutation]) -> Vec<SignedPermutation> {
    let mut seen: BTreeSet<([usize; DIM], [i8; DIM])> = BTreeSet::new();
    let mut todo: Vec<SignedPermutation> = vec![SignedPermutation::identity()];
    seen.insert(canonical_key(&todo[0]));
    while let Some(p) = todo.pop() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(canonical_key(&q)) {
                todo.push(q);
            }
        }
    }
    let mut out: Vec<SignedPermutation> = seen
        .into_iter()
        .map(|(pi, eps)| SignedPermutation { pi, eps })
        .collect();
    out.sort();
    out
}

/// Whether the isometry permutes the given sorted set of vectors.
pub fn preserves_set(p: &SignedPermutation, set: &[VirtualCharacter]) -> bool {
    set.iter().all(|v| set.binary_search(&p.apply(v)).is_ok())
}

/// Brute-force scan of all `2^7 * 7! = 645120` signed permutations,
/// keeping those that permute the norm-4 set of the projective lattice
/// (equivalently: preserve the projective lattice).
pub fn scan_proj_preserving(norm4: &[VirtualCharacter]) -> Vec<SignedPermutation> {
    let mut perms: Vec<[usize; DIM]> = Vec::with_capacity(5040);
    let mut idx: [usize; DIM] = std::array::from_fn(|i| i);
    permute(&mut idx, 0, &mut perms);
    let mut out = Vec::new();
    for pi in &perms {
        for mask in 0u32..(1 << DIM) {
            let eps: [i8; DIM] = std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
            let p = SignedPermutation { pi: *pi, eps };
            if preserves_set(&p, norm4) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

fn permute(idx: &mut [usize; DIM], k: usize, out: &mut Vec<[usize; DIM]>) {
    if k == DIM {
        out.push(*idx);
        return;
    }
    for i in k..DIM {
        idx.swap(k, i);
        permute(idx, k + 1, out);
        idx.swap(k, i);
    }
}

#[cfg(test)]
pub(crate) fn all_permutations() -> Vec<[usize; DIM]> {
    let mut perms = Vec::with_capacity(5040);
    let mut idx: [usize; DIM] = std::array::from_fn(|i| i);
    permute(&mut idx, 0, &mut perms);
    perms
}

// ---------------------------------------------------------------------
// Perfectness
// ---------------------------------------------------------------------

/// One class pair in a perfectness certificate.
#[derive(Clone, Debug, Serialize)]
pub struct PairEntry {
    pub pair: (String, String),
    pub value: String,
    pub valuation: String,
    pub required: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PerfectnessCertificate {
    pub isometry: String,
    pub perfect: bool,
    pub entries: Vec<PairEntry>,
    pub first_violation: Option<(String, String)>,
}

/// The bicharacter `mu(g, h) = sum_i eps_i eta_i(g) eta_{pi(i)}(h)`
/// attached to a self-isometry, evaluated exactly through the table.
pub fn mu_bicharacter(
    phi: &SignedPermutation,
    g: usize,
    h: usize,
    table: &CharacterTable,
    group: &GroupTable,
) -> CycNum {
    let mut acc = CycNum::zero();
    for i in 0..DIM {
        let term = table.value_at(i, g, group) * table.value_at(phi.pi[i], h, group);
        acc = if phi.eps[i] == 1 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// The two perfectness conditions on class representatives: the value at
/// every pair is divisible in `O` by both centralizer orders, and it
/// vanishes when exactly one argument has odd order. The certificate
/// lists all 49 pairs with exact values and valuations.
pub fn is_perfect(
    phi: &SignedPermutation,
    table: &CharacterTable,
    group: &GroupTable,
) -> PerfectnessCertificate {
    let mut entries = Vec::with_capacity(NUM_CLASSES * NUM_CLASSES);
    let mut first_violation = None;
    for cg in 0..NUM_CLASSES {
        for ch in 0..NUM_CLASSES {
            let g = group.reps[cg] as usize;
            let h = group.reps[ch] as usize;
            let mu = mu_bicharacter(phi, g, h, table, group);
            let required = v2_of_order(group.centralizer_orders[cg])
                .max(v2_of_order(group.centralizer_orders[ch]));
            let divisible = match mu.v2() {
                Valuation::Finite(v) => v >= required,
                Valuation::Infinite => true,
            };
            let separated = if group.class_has_odd_order(cg) != group.class_has_odd_order(ch) {
                mu.is_zero()
            } else {
                true
            };
            let ok = divisible && separated;
            if !ok && first_violation.is_none() {
                first_violation = Some((
                    crate::group::REP_NAMES[cg].to_string(),
                    crate::group::REP_NAMES[ch].to_string(),
                ));
            }
            entries.push(PairEntry {
                pair: (
                    crate::group::REP_NAMES[cg].to_string(),
                    crate::group::REP_NAMES[ch].to_string(),
                ),
                value: mu.to_string(),
                valuation: mu.v2().to_string(),
                required,
                ok,
            });
        }
    }
    let perfect = entries.iter().all(|e| e.ok);
    PerfectnessCertificate { isometry: phi.to_string(), perfect, entries, first_violation }
}

fn v2_of_order(n: usize) -> i64 {
    let mut n = n;
    let mut v = 0;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    v
}

// ---------------------------------------------------------------------
// The two permutations read off the character table
// ---------------------------------------------------------------------

/// The permutation induced on characters by the algebra automorphism
/// `x -> eta1(x) x` attached to the degree-one character `eta1`:
/// pointwise products `eta1 * eta_i` are located among the table rows.
pub fn twist_permutation(table: &CharacterTable) -> Result<[usize; DIM], String> {
    permutation_by_rows(table, |i, c| &table.values[1][c] * &table.values[i][c])
}

/// The permutation induced by the anti-automorphism inverting group
/// elements: composition with inversion permutes the table columns by
/// class inversion.
pub fn inversion_permutation(
    table: &CharacterTable,
    group: &GroupTable,
) -> Result<[usize; DIM], String> {
    permutation_by_rows(table, |i, c| {
        let rep = group.reps[c] as usize;
        let inv_class = group.class_of[group.inv_idx(rep)] as usize;
        table.values[i][inv_class].clone()
    })
}

fn permutation_by_rows(
    table: &CharacterTable,
    f: impl Fn(usize, usize) -> CycNum,
) -> Result<[usize; DIM], String> {
    let mut pi = [usize::MAX; DIM];
    for i in 0..DIM {
        let transformed: Vec<CycNum> = (0..NUM_CLASSES).map(|c| f(i, c)).collect();
        let j = (0..DIM)
            .find(|&j| table.values[j] == transformed)
            .ok_or_else(|| format!("transformed row {i} is not a character row"))?;
        pi[i] = j;
    }
    let mut seen = [false; DIM];
    for &j in &pi {
        if seen[j] {
            return Err("transformed rows do not form a permutation".to_string());
        }
        seen[j] = true;
    }
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{load_table, CharacterTable, DECOMPOSITION_MATRIX};
    use crate::group::build_group;
    use proptest::prelude::*;

    fn projectives() -> [[i64; 7]; 3] {
        CharacterTable::projective_characters(&DECOMPOSITION_MATRIX)
    }

    #[test]
    fn inner_products() {
        let p = projectives();
        let p0 = VirtualCharacter(p[0]);
        let p1 = VirtualCharacter(p[1]);
        assert_eq!(inner_product(&VirtualCharacter::basis(0), &VirtualCharacter::basis(0)), 1);
        assert_eq!(inner_product(&p0, &p0), 4);
        let d = p0.sub(&p1);
        assert_eq!(inner_product(&d, &d), 4);
    }

    #[test]
    fn inner_product_table_oracle() {
        let g = build_group();
        let t = load_table();
        let p = projectives();
        let vs = [
            VirtualCharacter::basis(0),
            VirtualCharacter::basis(4),
            VirtualCharacter(p[0]),
            VirtualCharacter([1, -1, 2, 0, 3, -2, 1]),
        ];
        for u in &vs {
            for v in &vs {
                let direct = CycNum::from_int(inner_product(u, v));
                assert_eq!(inner_product_via_table(u, v, &t, &g), direct);
            }
        }
    }

    #[test]
    fn l0_is_the_rank_4_orthogonal_complement() {
        let p = projectives();
        let l0 = l0_lattice(&p);
        assert_eq!(l0.rank(), 4);
        let special = VirtualCharacter([1, 1, 1, -1, 0, 0, 0]);
        assert!(l0.contains(&special));
        assert!(!l0.contains(&VirtualCharacter(p[0])));
        for b in &l0.basis {
            for q in &p {
                assert_eq!(inner_product(b, &VirtualCharacter(*q)), 0);
            }
        }
    }

    #[test]
    fn norm_enumeration_matches_scan_oracle() {
        let p = projectives();
        let proj = proj_lattice(&p);
        let l0 = l0_lattice(&p);
        for n in 1..=4 {
            assert_eq!(proj.elements_of_norm(n), elements_of_norm_by_scan(&proj, n), "proj n={n}");
            assert_eq!(l0.elements_of_norm(n), elements_of_norm_by_scan(&l0, n), "l0 n={n}");
        }
    }

    #[test]
    fn distinguished_norm4_element() {
        let p = projectives();
        let l0 = l0_lattice(&p);
        let d = distinguished_element(&l0).unwrap();
        assert_eq!(d, VirtualCharacter([1, 1, 1, -1, 0, 0, 0]));
        assert_eq!(d.norm(), 4);
        // Orthogonal to the listed norm-4 element eta0-eta1-eta5+eta6.
        assert_eq!(inner_product(&d, &VirtualCharacter([1, -1, 0, 0, 0, -1, 1])), 0);
    }

    #[test]
    fn generator_isometries_preserve_proj_norm4() {
        let p = projectives();
        let proj = proj_lattice(&p);
        let norm4 = proj.elements_of_norm(4);
        for g in generators() {
            assert!(preserves_set(&g, &norm4), "{g}");
        }
        // A transposition swapping eta0 and eta3 only is excluded: it
        // fixes the first projective character (equal coefficients at 0
        // and 3) but sends the second one out of the lattice.
        let bad = SignedPermutation::from_cycles(&[&[0, 3]]);
        assert!(!preserves_set(&bad, &norm4));
        let image = bad.apply(&VirtualCharacter(p[1]));
        assert_eq!(image, VirtualCharacter([1, 1, 0, 0, 1, 0, 1]));
        assert!(!proj.contains(&image));
    }

    #[test]
    fn closure_order_is_48() {
        let c = closure(&generators());
        assert_eq!(c.len(), 48);
        let p = projectives();
        let proj = proj_lattice(&p);
        let norm4 = proj.elements_of_norm(4);
        for m in &c {
            assert!(preserves_set(m, &norm4));
        }
        // The subgroup generated by -Id and the two table permutations
        // is contained in the full group.
        let sub = closure(&generators()[..3]);
        assert!(sub.iter().all(|s| c.binary_search(s).is_ok()));
    }

    #[test]
    fn table_permutations() {
        let g = build_group();
        let t = load_table();
        let twist = twist_permutation(&t).unwrap();
        assert_eq!(twist, [1, 2, 0, 3, 6, 4, 5]); // (0,1,2)(4,6,5)
        let inv = inversion_permutation(&t, &g).unwrap();
        assert_eq!(inv, [0, 2, 1, 3, 5, 4, 6]); // (1,2)(4,5)
        // eta1 * eta0 = eta1 and eta1 * eta3 = eta3.
        assert_eq!(twist[0], 1);
        assert_eq!(twist[3], 3);
        // eta0 and eta6 are fixed by inversion; eta1 maps to eta2.
        assert_eq!(inv[0], 0);
        assert_eq!(inv[6], 6);
        assert_eq!(inv[1], 2);
    }

    #[test]
    fn bicharacter_values() {
        let g = build_group();
        let t = load_table();
        let id = SignedPermutation::identity();
        assert_eq!(mu_bicharacter(&id, 0, 0, &t, &g), CycNum::from_int(24));
        let swap = SignedPermutation::signed_swap_pair(2, 3, 5, 6);
        assert_eq!(mu_bicharacter(&swap, 0, 0, &t, &g), CycNum::from_int(-8));
        let t_elem = g.reps[3] as usize;
        let z_elem = g.reps[1] as usize;
        assert!(mu_bicharacter(&swap, t_elem, z_elem, &t, &g).is_zero());
    }

    #[test]
    fn perfectness_examples() {
        let g = build_group();
        let t = load_table();
        assert!(is_perfect(&SignedPermutation::identity(), &t, &g).perfect);
        assert!(is_perfect(&SignedPermutation::signed_swap_pair(2, 3, 5, 6), &t, &g).perfect);
        // Negating eta0 alone violates the vanishing condition at (t, 1).
        let mut neg0 = SignedPermutation::identity();
        neg0.eps[0] = -1;
        let cert = is_perfect(&neg0, &t, &g);
        assert!(!cert.perfect);
        let mu = mu_bicharacter(&neg0, g.reps[3] as usize, 0, &t, &g);
        assert!(!mu.is_zero());
    }

    #[test]
    fn bicharacter_constant_on_classes() {
        // The value only depends on the classes; witness it through the
        // element-level evaluation path on class members.
        let g = build_group();
        let t = load_table();
        let swap = SignedPermutation::signed_swap_pair(2, 3, 5, 6);
        for cg in 0..NUM_CLASSES {
            for ch in 0..NUM_CLASSES {
                let base =
                    mu_bicharacter(&swap, g.reps[cg] as usize, g.reps[ch] as usize, &t, &g);
                for &ge in g.class_elements[cg].iter().take(2) {
                    for &he in g.class_elements[ch].iter().take(2) {
                        assert_eq!(mu_bicharacter(&swap, ge as usize, he as usize, &t, &g), base);
                    }
                }
            }
        }
    }

    fn arb_signed_perm() -> impl Strategy<Value = SignedPermutation> {
        (0usize..5040, any::<[bool; DIM]>()).prop_map(|(pidx, signs)| {
            let perms = all_permutations();
            SignedPermutation {
                pi: perms[pidx],
                eps: std::array::from_fn(|i| if signs[i] { -1 } else { 1 }),
            }
        })
    }

    proptest! {
        #[test]
        fn signed_permutations_are_isometries(
            p in arb_signed_perm(),
            u in proptest::array::uniform7(-4i64..=4),
            v in proptest::array::uniform7(-4i64..=4),
        ) {
            let u = VirtualCharacter(u);
            let v = VirtualCharacter(v);
            prop_assert_eq!(
                inner_product(&p.apply(&u), &p.apply(&v)),
                inner_product(&u, &v)
            );
        }

        #[test]
        fn composition_matches_action(
            p in arb_signed_perm(),
            q in arb_signed_perm(),
            v in proptest::array::uniform7(-4i64..=4),
        ) {
            let v = VirtualCharacter(v);
            prop_assert_eq!(p.compose(&q).apply(&v), p.apply(&q.apply(&v)));
            prop_assert_eq!(p.inverse().apply(&p.apply(&v)), v);
        }
    }
}
