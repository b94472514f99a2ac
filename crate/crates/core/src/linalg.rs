//! Exact linear algebra over `Q(w)` and valuation-aware elimination over
//! the local ring `O`.
//!
//! Matrices are plain `Vec<Vec<CycNum>>` in row-major order. Lattices are
//! row spans with `O`-coefficients. Elimination over `O` always pivots on
//! an entry of minimal 2-adic valuation, so every quotient used to clear
//! an entry stays in `O`; this gives Smith normal form over the local
//! ring, saturation of row spans, and purity certificates.

use crate::coeff::{CycNum, Valuation};

pub type Row = Vec<CycNum>;

pub fn zeros(n: usize) -> Row {
    vec![CycNum::zero(); n]
}

pub fn row_add(a: &Row, b: &Row) -> Row {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn row_sub(a: &Row, b: &Row) -> Row {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn row_scale(a: &Row, c: &CycNum) -> Row {
    a.iter().map(|x| x * c).collect()
}

pub fn row_is_zero(a: &Row) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn mat_mul(a: &[Row], b: &[Row]) -> Vec<Row> {
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    a.iter()
        .map(|ra| {
            let mut out = zeros(cols);
            for (x, rb) in ra.iter().zip(b) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(rb) {
                    *o = &*o + &(x * y);
                }
            }
            out
        })
        .collect()
}

pub fn transpose(a: &[Row]) -> Vec<Row> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn identity(n: usize) -> Vec<Row> {
    (0..n)
        .map(|i| {
            let mut r = zeros(n);
            r[i] = CycNum::one();
            r
        })
        .collect()
}

/// Reduced row echelon form over the field `Q(w)`; returns the reduced
/// matrix and the pivot columns.
pub fn rref(m: &[Row]) -> (Vec<Row>, Vec<usize>) {
    let mut m: Vec<Row> = m.to_vec();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        m[r] = row_scale(&m[r], &inv);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                m[i] = row_sub(&m[i], &row_scale(&m[r], &f));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (m, pivots)
}

pub fn rank(m: &[Row]) -> usize {
    rref(m).1.len()
}

/// Determinant of a square matrix via exact Gaussian elimination.
pub fn det(m: &[Row]) -> CycNum {
    let n = m.len();
    let mut m: Vec<Row> = m.to_vec();
    let mut acc = CycNum::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return CycNum::zero();
        };
        if p != c {
            m.swap(c, p);
            acc = -&acc;
        }
        let pivot = m[c][c].clone();
        acc = &acc * &pivot;
        let inv = pivot.inv();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                let scaled = row_scale(&m[c], &f);
                m[i] = row_sub(&m[i], &scaled);
            }
        }
    }
    acc
}

/// One solution of `x * m = b` over the field, if any.
pub fn solve_left(m: &[Row], b: &Row) -> Option<Row> {
    if m.is_empty() {
        return if row_is_zero(b) { Some(Vec::new()) } else { None };
    }
    // Transpose to the column picture: m^T x^T = b^T.
    let mut aug: Vec<Row> = transpose(m);
    for (r, val) in aug.iter_mut().zip(b.iter()) {
        r.push(val.clone());
    }
    let (red, pivots) = rref(&aug);
    let k = m.len();
    // Inconsistent if a pivot lands in the augmented column.
    if pivots.contains(&k) {
        return None;
    }
    let mut x = zeros(k);
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = red[ri][k].clone();
    }
    let check = mat_mul(&[x.clone()], m);
    if check[0] == *b {
        Some(x)
    } else {
        None
    }
}

/// Basis of the left kernel `{ x : x * m = 0 }` over the field.
pub fn left_kernel(m: &[Row]) -> Vec<Row> {
    let n = m.len();
    let mt = transpose(m);
    let (red, pivots) = rref(&mt);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    for f in free {
        let mut v = zeros(n);
        v[f] = CycNum::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -&red[ri][f];
        }
        basis.push(v);
    }
    basis
}

/// An `O`-basis of the `O`-span of the given rows (entries must lie in
/// `O`). Pivots on minimal valuation so all elimination quotients stay in
/// `O`; pivot entries are normalized to exact powers of 2 by unit scaling.
pub fn lattice_echelon(rows: &[Row]) -> Vec<Row> {
    let mut m: Vec<Row> = rows.iter().filter(|r| !row_is_zero(r)).cloned().collect();
    let nrows = m.len();
    if nrows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let mut best: Option<(usize, i64)> = None;
        for i in r..nrows {
            if let Valuation::Finite(v) = m[i][c].v2() {
                if best.map_or(true, |(_, bv)| v < bv) {
                    best = Some((i, v));
                }
            }
        }
        let Some((p, v)) = best else { continue };
        m.swap(r, p);
        // Scale by a unit so the pivot becomes 2^v exactly.
        let target = CycNum::from_rat(crate::coeff::Rational::new(
            num_bigint::BigInt::from(2).pow(v.max(0) as u32),
            num_bigint::BigInt::from(2).pow((-v).max(0) as u32),
        ));
        let unit = &target * &m[r][c].inv();
        debug_assert_eq!(unit.v2(), Valuation::Finite(0));
        m[r] = row_scale(&m[r], &unit);
        for i in r + 1..nrows {
            if !m[i][c].is_zero() {
                let q = &m[i][c] * &m[r][c].inv();
                debug_assert!(q.in_o());
                m[i] = row_sub(&m[i], &row_scale(&m[r], &q));
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    m.truncate(r);
    m.retain(|row| !row_is_zero(row));
    m
}

/// Smith normal form over the local ring `O`.
pub struct DvrSnf {
    /// Valuations of the invariant factors, one per nonzero diagonal entry.
    pub vals: Vec<i64>,
    pub rank: usize,
    /// Invertible-over-`O` matrix whose first `rank` rows are an `O`-basis
    /// of `(K-row-span of the input) intersected with O^cols`.
    pub w: Vec<Row>,
}

/// Diagonalize `m` as `U * S * W` with `U`, `W` invertible over `O` and
/// `S` diagonal with power-of-2 entries. Entries of `m` may lie in `K`;
/// `W` always has entries in `O`.
pub fn dvr_snf(m: &[Row]) -> DvrSnf {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut m: Vec<Row> = m.to_vec();
    let mut w = identity(ncols);
    let mut vals = Vec::new();
    let mut r = 0;
    while r < nrows && r < ncols {
        // Global minimal-valuation pivot in the remaining submatrix.
        let mut best: Option<(usize, usize, i64)> = None;
        for i in r..nrows {
            for j in r..ncols {
                if let Valuation::Finite(v) = m[i][j].v2() {
                    if best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((pi, pj, v)) = best else { break };
        m.swap(r, pi);
        if pj != r {
            for row in m.iter_mut() {
                row.swap(r, pj);
            }
            w.swap(r, pj);
        }
        // Unit-scale the pivot row so the pivot is 2^v.
        let target = CycNum::from_rat(crate::coeff::Rational::new(
            num_bigint::BigInt::from(2).pow(v.max(0) as u32),
            num_bigint::BigInt::from(2).pow((-v).max(0) as u32),
        ));
        let unit = &target * &m[r][r].inv();
        m[r] = row_scale(&m[r], &unit);
        // Clear the pivot column with row operations (quotients in O by
        // minimality of the pivot valuation).
        for i in r + 1..nrows {
            if !m[i][r].is_zero() {
                let q = &m[i][r] * &m[r][r].inv();
                m[i] = row_sub(&m[i], &row_scale(&m[r], &q));
            }
        }
        // Clear the pivot row with column operations, mirroring each as a
        // row operation on W so that W accumulates the inverse.
        for j in r + 1..ncols {
            if !m[r][j].is_zero() {
                let q = &m[r][j] * &m[r][r].inv();
                for row in m.iter_mut() {
                    let t = &row[r] * &q;
                    row[j] = &row[j] - &t;
                }
                // col_j -= q * col_r  ==>  row_r(W) += q * row_j(W)
                let add = row_scale(&w[j], &q);
                w[r] = row_add(&w[r], &add);
            }
        }
        vals.push(v);
        r += 1;
    }
    DvrSnf { rank: vals.len(), vals, w }
}

/// `O`-basis of the intersection of the `K`-span of the rows with `O^n`,
/// the saturation of the row span.
pub fn saturate_rowspan(rows: &[Row]) -> Vec<Row> {
    if rows.is_empty() {
        return Vec::new();
    }
    let snf = dvr_snf(rows);
    snf.w[..snf.rank].to_vec()
}

/// `O`-coordinates of `v` in the given lattice basis, if `v` lies in the
/// `O`-span.
pub fn o_coords(basis: &[Row], v: &Row) -> Option<Row> {
    let x = solve_left(basis, v)?;
    if x.iter().all(|c| c.in_o()) {
        Some(x)
    } else {
        None
    }
}

pub fn in_o_span(basis: &[Row], v: &Row) -> bool {
    o_coords(basis, v).is_some()
}

/// Equality of two lattices given by bases: mutual `O`-membership.
pub fn lattices_equal(a: &[Row], b: &[Row]) -> bool {
    a.iter().all(|v| in_o_span(b, v)) && b.iter().all(|v| in_o_span(a, v))
}

// ---------------------------------------------------------------------
// Small exact integer linear algebra (i64/i128), used for character
// lattices where everything is a short integer vector.
// ---------------------------------------------------------------------

pub fn det_i64(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    let mut acc: i128 = 0;
    for (j, &top) in m[0].iter().enumerate() {
        if top == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc += sign as i128 * top as i128 * det_i64(&minor);
    }
    acc
}

/// Adjugate of a small square integer matrix: `adj(m) * m = det(m) * I`.
pub fn adjugate_i64(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            let cof = sign as i128 * det_i64(&minor);
            adj[j][i] = cof.try_into().expect("adjugate fits in i64");
        }
    }
    adj
}

/// Saturated basis of the integer kernel `{ x in Z^n : m * x = 0 }`,
/// computed through Smith diagonalization over `Z` with tracked column
/// operations. The result is a basis of the full kernel lattice.
pub fn integer_kernel(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut m: Vec<Vec<i64>> = m.to_vec();
    let mut c_total: Vec<Vec<i64>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| i64::from(i == j)).collect())
        .collect();
    let col_swap = |m: &mut Vec<Vec<i64>>, ct: &mut Vec<Vec<i64>>, a: usize, b: usize| {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
        for row in ct.iter_mut() {
            row.swap(a, b);
        }
    };
    let col_axpy = |m: &mut Vec<Vec<i64>>, ct: &mut Vec<Vec<i64>>, q: i64, src: usize, dst: usize| {
        for row in m.iter_mut() {
            row[dst] -= q * row[src];
        }
        for row in ct.iter_mut() {
            row[dst] -= q * row[src];
        }
    };
    let mut r = 0;
    while r < nrows && r < ncols {
        // Repeatedly reduce until the pivot divides its row and column.
        loop {
            let mut best: Option<(usize, usize, i64)> = None;
            for i in r..nrows {
                for j in r..ncols {
                    let v = m[i][j].abs();
                    if v != 0 && best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                return (r..ncols).map(|j| c_total.iter().map(|row| row[j]).collect()).collect();
            };
            m.swap(r, pi);
            if pj != r {
                col_swap(&mut m, &mut c_total, r, pj);
            }
            let p = m[r][r];
            let mut dirty = false;
            for i in r + 1..nrows {
                if m[i][r] != 0 {
                    let q = m[i][r].div_euclid(p);
                    for j in 0..ncols {
                        m[i][j] -= q * m[r][j];
                    }
                    if m[i][r] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in r + 1..ncols {
                if m[r][j] != 0 {
                    let q = m[r][j].div_euclid(p);
                    col_axpy(&mut m, &mut c_total, q, r, j);
                    if m[r][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        r += 1;
    }
    (r..ncols).map(|j| c_total.iter().map(|row| row[j]).collect()).collect()
}

// ---------------------------------------------------------------------
// Linear algebra over the residue field of order 4
// ---------------------------------------------------------------------

pub mod gf4 {
    use crate::coeff::ResidueElem;

    pub type Vec4 = Vec<ResidueElem>;

    pub fn zeros(n: usize) -> Vec4 {
        vec![ResidueElem::ZERO; n]
    }

    pub fn add(a: &Vec4, b: &Vec4) -> Vec4 {
        a.iter().zip(b).map(|(x, y)| *x + *y).collect()
    }

    pub fn scale(a: &Vec4, c: ResidueElem) -> Vec4 {
        a.iter().map(|x| *x * c).collect()
    }

    pub fn is_zero(a: &Vec4) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    /// Canonical reduced row echelon form; returns the nonzero rows and
    /// their pivot columns. The output is a canonical key for the row
    /// span.
    pub fn rref(rows: &[Vec4]) -> (Vec<Vec4>, Vec<usize>) {
        let mut m: Vec<Vec4> = rows.iter().filter(|r| !is_zero(r)).cloned().collect();
        let nrows = m.len();
        if nrows == 0 {
            return (Vec::new(), Vec::new());
        }
        let cols = m[0].len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inv();
            m[r] = scale(&m[r], inv);
            for i in 0..nrows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c];
                    let sub = scale(&m[r], f);
                    m[i] = add(&m[i], &sub);
                }
            }
            pivots.push(c);
            r += 1;
            if r == nrows {
                break;
            }
        }
        m.truncate(r);
        (m, pivots)
    }

    pub fn rank(rows: &[Vec4]) -> usize {
        rref(rows).1.len()
    }

    /// Coefficients `c` with `sum c_i rows_i = target`, if solvable.
    pub fn solve(rows: &[Vec4], target: &Vec4) -> Option<Vec4> {
        let n = rows.len();
        if n == 0 {
            return if is_zero(target) { Some(Vec::new()) } else { None };
        }
        let cols = rows[0].len();
        // Augment with coefficient-tracking columns.
        let mut aug: Vec<Vec4> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..n).map(|j| {
                    if i == j {
                        ResidueElem::ONE
                    } else {
                        ResidueElem::ZERO
                    }
                }));
                row
            })
            .collect();
        // Eliminate on the first `cols` columns only.
        let mut r = 0;
        let mut pivots = Vec::new();
        for c in 0..cols {
            let Some(p) = (r..n).find(|&i| !aug[i][c].is_zero()) else {
                continue;
            };
            aug.swap(r, p);
            let inv = aug[r][c].inv();
            aug[r] = scale(&aug[r], inv);
            for i in 0..n {
                if i != r && !aug[i][c].is_zero() {
                    let f = aug[i][c];
                    let sub = scale(&aug[r], f);
                    aug[i] = add(&aug[i], &sub);
                }
            }
            pivots.push(c);
            r += 1;
            if r == n {
                break;
            }
        }
        let mut residual = target.clone();
        let mut coeffs = zeros(n);
        for (row_idx, &pc) in pivots.iter().enumerate() {
            if !residual[pc].is_zero() {
                let f = residual[pc];
                for c in 0..cols {
                    residual[c] = residual[c] + f * aug[row_idx][c];
                }
                for j in 0..n {
                    coeffs[j] = coeffs[j] + f * aug[row_idx][cols + j];
                }
            }
        }
        if is_zero(&residual) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn in_span(rows: &[Vec4], v: &Vec4) -> bool {
        solve(rows, v).is_some()
    }

    /// Basis of the right kernel `{ x : M x = 0 }` for `M` given by rows,
    /// through reduced echelon form and free-variable back substitution.
    pub fn kernel(rows: &[Vec4]) -> Vec<Vec4> {
        if rows.is_empty() {
            return Vec::new();
        }
        let n = rows[0].len();
        let (red, pivots) = rref(rows);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for f in free {
            let mut v = zeros(n);
            v[f] = ResidueElem::ONE;
            for (ri, &pc) in pivots.iter().enumerate() {
                // Characteristic 2: negation is identity.
                v[pc] = red[ri][f];
            }
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;
    use num_bigint::BigInt;

    fn c(n: i64) -> CycNum {
        CycNum::from_int(n)
    }

    fn cr(n: i64, d: i64) -> CycNum {
        CycNum::from_rat(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn det_and_rank() {
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        assert_eq!(det(&m), c(-2));
        assert_eq!(rank(&m), 2);
        let singular = vec![vec![c(1), c(2)], vec![c(2), c(4)]];
        assert!(det(&singular).is_zero());
        assert_eq!(rank(&singular), 1);
    }

    #[test]
    fn solve_and_kernel() {
        let m = vec![vec![c(1), c(0), c(1)], vec![c(0), c(1), c(1)]];
        let b = vec![c(2), c(3), c(5)];
        let x = solve_left(&m, &b).unwrap();
        assert_eq!(mat_mul(&[x], &m)[0], b);
        let nosol = vec![c(2), c(3), c(6)];
        assert!(solve_left(&m, &nosol).is_none());

        let k = left_kernel(&vec![vec![c(1), c(1)], vec![c(2), c(2)]]);
        assert_eq!(k.len(), 1);
        assert!(row_is_zero(&mat_mul(&k, &vec![vec![c(1), c(1)], vec![c(2), c(2)]])[0]));
    }

    #[test]
    fn echelon_basis_of_lattice() {
        // Rows (2,0) and (3,0) generate (1,0) over O since 3 is a unit.
        let rows = vec![vec![c(2), c(0)], vec![c(3), c(0)], vec![c(0), c(4)]];
        let basis = lattice_echelon(&rows);
        assert_eq!(basis.len(), 2);
        assert!(in_o_span(&basis, &vec![c(1), c(0)]));
        assert!(in_o_span(&basis, &vec![c(0), c(4)]));
        assert!(!in_o_span(&basis, &vec![c(0), c(2)]));
    }

    #[test]
    fn snf_saturation() {
        // Row span of (2,2) over K is the diagonal line; its saturation
        // in O^2 is generated by (1,1).
        let snf = dvr_snf(&vec![vec![c(2), c(2)]]);
        assert_eq!(snf.rank, 1);
        assert_eq!(snf.vals, vec![1]);
        let sat = saturate_rowspan(&vec![vec![c(2), c(2)]]);
        assert_eq!(sat.len(), 1);
        assert!(in_o_span(&sat, &vec![c(1), c(1)]));

        // K-entries are fine: (1/2, 1/2) spans the same line.
        let sat2 = saturate_rowspan(&vec![vec![cr(1, 2), cr(1, 2)]]);
        assert!(lattices_equal(&sat, &sat2));
    }

    #[test]
    fn purity_detection() {
        // (2,0) inside O^2 is not saturated: invariant valuation 1.
        let snf = dvr_snf(&vec![vec![c(2), c(0)]]);
        assert_eq!(snf.vals, vec![1]);
        // (1,3) is saturated.
        let snf2 = dvr_snf(&vec![vec![c(1), c(3)]]);
        assert_eq!(snf2.vals, vec![0]);
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // Kernel of (1,1,2) in Z^3 has rank 2 and contains (1,-1,0).
        let m = vec![vec![1i64, 1, 2]];
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v[0] + v[1] + 2 * v[2], 0);
        }
        // (1,-1,0) and (0,2,-1) must be integer combinations of the basis.
        // Saturation: the Gram determinant of the kernel basis equals the
        // squared covolume; for a saturated kernel of this matrix it is 6.
        let gram: Vec<Vec<i64>> = k
            .iter()
            .map(|a| k.iter().map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum()).collect())
            .collect();
        assert_eq!(det_i64(&gram), 6);
    }

    #[test]
    fn gf4_solve_and_rank() {
        use crate::coeff::ResidueElem as R;
        let rows = vec![
            vec![R::ONE, R::GEN, R::ZERO],
            vec![R::ZERO, R::ONE, R::GEN_SQ],
        ];
        assert_eq!(gf4::rank(&rows), 2);
        // target = GEN * row0 + row1
        let target = gf4::add(&gf4::scale(&rows[0], R::GEN), &rows[1]);
        let c = gf4::solve(&rows, &target).unwrap();
        assert_eq!(c, vec![R::GEN, R::ONE]);
        let outside = vec![R::ONE, R::ZERO, R::ZERO];
        assert!(!gf4::in_span(&rows, &outside));
        // Canonical form is a set key: shuffled spans agree.
        let shuffled = vec![gf4::add(&rows[0], &rows[1]), rows[1].clone()];
        assert_eq!(gf4::rref(&rows).0, gf4::rref(&shuffled).0);
    }

    #[test]
    fn adjugate_identity() {
        let m = vec![vec![4i64, 2, 2], vec![2, 4, 2], vec![2, 2, 4]];
        let adj = adjugate_i64(&m);
        let d = det_i64(&m);
        assert_eq!(d, 32);
        for i in 0..3 {
            for j in 0..3 {
                let s: i128 = (0..3).map(|k| adj[i][k] as i128 * m[k][j] as i128).sum();
                assert_eq!(s, if i == j { d } else { 0 });
            }
        }
    }
}
