//! The 7x7 character table of the order-24 group, orthogonality, central
//! idempotents, the decomposition and Cartan matrices, heights,
//! projective characters and class-sum expansions.
//!
//! The decomposition matrix is not transcribed: it is recomputed by
//! restricting the ordinary characters to the odd-order classes and
//! solving exactly against the three degree-one Brauer characters of the
//! simple modules; the frozen matrix below is then a regression target.

use crate::coeff::{CycNum, Valuation};
use crate::group::{GroupAlgebraElement, GroupTable, NUM_CLASSES, ORDER};
use crate::linalg;

pub const CHAR_NAMES: [&str; 7] = ["eta0", "eta1", "eta2", "eta3", "eta4", "eta5", "eta6"];

/// Rows are the irreducible characters `eta0..eta6`, columns the class
/// representatives `(1, z, y, t, t^2, tz, t^2 z)`.
#[derive(Clone)]
pub struct CharacterTable {
    pub values: Vec<Vec<CycNum>>,
}

/// The decomposition matrix `D` (7x3) and the Cartan matrix `C = D^T D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionData {
    pub d: [[i64; 3]; 7],
    pub c: [[i64; 3]; 3],
    /// Whether the two nontrivial simple modules had to be swapped to
    /// reach the reference labeling.
    pub swapped: bool,
}

/// The decomposition matrix in the reference labeling (trivial simple
/// first).
pub const DECOMPOSITION_MATRIX: [[i64; 3]; 7] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 1],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
];

pub const CARTAN_MATRIX: [[i64; 3]; 3] = [[4, 2, 2], [2, 4, 2], [2, 2, 4]];

/// The exact character table.
pub fn load_table() -> CharacterTable {
    let w = CycNum::omega();
    let w2 = CycNum::omega_sq();
    let i = CycNum::from_int;
    let values = vec![
        vec![i(1), i(1), i(1), i(1), i(1), i(1), i(1)],
        vec![i(1), i(1), i(1), w.clone(), w2.clone(), w.clone(), w2.clone()],
        vec![i(1), i(1), i(1), w2.clone(), w.clone(), w2.clone(), w.clone()],
        vec![i(3), i(3), i(-1), i(0), i(0), i(0), i(0)],
        vec![i(2), i(-2), i(0), -&w2, -&w, w2.clone(), w.clone()],
        vec![i(2), i(-2), i(0), -&w, -&w2, w.clone(), w2.clone()],
        vec![i(2), i(-2), i(0), i(-1), i(-1), i(1), i(1)],
    ];
    CharacterTable { values }
}

impl CharacterTable {
    /// Character value at a group element, through its class.
    pub fn value_at(&self, chi: usize, g: usize, group: &GroupTable) -> &CycNum {
        &self.values[chi][group.class_of[g] as usize]
    }

    pub fn degree(&self, chi: usize) -> &CycNum {
        &self.values[chi][0]
    }

    /// Row inner product `sum_g chi_i(g) chi_j(g^-1)` over all 24
    /// elements (not normalized).
    pub fn row_inner(&self, i: usize, j: usize, group: &GroupTable) -> CycNum {
        let mut acc = CycNum::zero();
        for g in 0..ORDER {
            let gi = group.inv_idx(g);
            acc = &acc + &(self.value_at(i, g, group) * self.value_at(j, gi, group));
        }
        acc
    }

    /// Column inner product `sum_i chi_i(g) chi_i(h^-1)` for class
    /// representatives `g`, `h`; equals `|C(g)|` when the two classes
    /// coincide and 0 otherwise.
    pub fn column_inner(&self, cg: usize, ch: usize, group: &GroupTable) -> CycNum {
        let ch_inv = group.inverse_class(ch);
        let mut acc = CycNum::zero();
        for i in 0..NUM_CLASSES {
            acc = &acc + &(&self.values[i][cg] * &self.values[i][ch_inv]);
        }
        acc
    }

    /// The central idempotent `e(chi_i) = chi_i(1)/|G| sum_x chi_i(x^-1) x`.
    pub fn central_idempotent(&self, i: usize, group: &GroupTable) -> GroupAlgebraElement {
        let deg = self.degree(i).clone();
        let scale = deg.scaled(&crate::coeff::Rational::new(1.into(), (ORDER as i64).into()));
        let coeffs = (0..ORDER)
            .map(|x| {
                let xi = group.inv_idx(x);
                self.value_at(i, xi, group) * &scale
            })
            .collect();
        GroupAlgebraElement::from_coeffs(coeffs)
    }

    /// All seven central idempotents.
    pub fn central_idempotents(&self, group: &GroupTable) -> Vec<GroupAlgebraElement> {
        (0..NUM_CLASSES).map(|i| self.central_idempotent(i, group)).collect()
    }

    /// Character heights: `v2(chi(1))` plus defect minus `v2(|G|)`; the
    /// defect is 3 here so this is just the valuation of the degree.
    pub fn heights(&self) -> [i64; 7] {
        std::array::from_fn(|i| {
            let Valuation::Finite(v) = self.degree(i).v2() else {
                unreachable!("degrees are nonzero")
            };
            let defect = 3;
            let v2_group_order = 3;
            v + defect - v2_group_order
        })
    }

    /// Expansion of `class_sum(c)` in the idempotent basis: the central
    /// character gives `class_sum(c) = sum_m (|c| chi_m(g_c) / chi_m(1))
    /// e(chi_m)` with `g_c` the class representative itself.
    ///
    /// Exactness is anchored by recomposition against the actual class
    /// sum; applying `chi_j` to both sides forces this coefficient, with
    /// no inverse on the representative.
    pub fn class_sum_expansion(&self, c: usize, group: &GroupTable) -> Vec<CycNum> {
        let size = CycNum::from_int(group.class_sizes[c] as i64);
        (0..NUM_CLASSES)
            .map(|m| {
                let val = &self.values[m][c] * &size;
                &val * &self.degree(m).inv()
            })
            .collect()
    }

    /// Brauer characters of the three simple modules on the odd-order
    /// classes `(1, t, t^2)`; the nontrivial ones take the cube roots of
    /// unity on `t` in the two possible orders.
    fn brauer_characters(swap: bool) -> [[CycNum; 3]; 3] {
        let one = CycNum::one();
        let w = CycNum::omega();
        let w2 = CycNum::omega_sq();
        let phi1 = [one.clone(), w.clone(), w2.clone()];
        let phi2 = [one.clone(), w2, w];
        let trivial = [one.clone(), one.clone(), one];
        if swap {
            [trivial, phi2, phi1]
        } else {
            [trivial, phi1, phi2]
        }
    }

    /// Recompute the decomposition matrix from Brauer restriction.
    ///
    /// Restricts every ordinary character to the odd-order classes,
    /// solves exactly against the Brauer characters, and demands a
    /// unique nonnegative-integer solution. The labeling of the two
    /// nontrivial simples is chosen to reproduce the reference matrix
    /// and the choice is recorded.
    pub fn brauer_decomposition(&self, group: &GroupTable) -> Result<DecompositionData, String> {
        // Columns of the restriction: classes of 1, t, t^2.
        let odd_classes = [0usize, 3, 4];
        let _ = group;
        for &swap in &[false, true] {
            let phis = Self::brauer_characters(swap);
            let mut d = [[0i64; 3]; 7];
            let mut ok = true;
            for i in 0..NUM_CLASSES {
                let rhs: Vec<CycNum> = odd_classes.iter().map(|&c| self.values[i][c].clone()).collect();
                // Solve sum_j d_j phi_j = rhs exactly.
                let mat: Vec<Vec<CycNum>> = phis.iter().map(|p| p.to_vec()).collect();
                let Some(sol) = linalg::solve_left(&mat, &rhs) else {
                    return Err(format!("restriction of row {i} is not in the Brauer span"));
                };
                for (j, v) in sol.iter().enumerate() {
                    if !v.is_rational() || !v.a.is_integer() {
                        return Err(format!("non-integer multiplicity in row {i}"));
                    }
                    let n: i64 = num_traits::ToPrimitive::to_i64(v.a.numer()).unwrap();
                    if n < 0 {
                        return Err(format!("negative multiplicity in row {i}"));
                    }
                    d[i][j] = n;
                }
            }
            if d != DECOMPOSITION_MATRIX {
                ok = false;
            }
            if ok {
                let mut c = [[0i64; 3]; 3];
                for a in 0..3 {
                    for b in 0..3 {
                        c[a][b] = (0..7).map(|i| d[i][a] * d[i][b]).sum();
                    }
                }
                return Ok(DecompositionData { d, c, swapped: swap });
            }
        }
        Err("no labeling of the simples reproduces the reference matrix".to_string())
    }

    /// The three projective indecomposable characters, as integer vectors
    /// in the `eta`-basis: the columns of the decomposition matrix.
    pub fn projective_characters(d: &[[i64; 3]; 7]) -> [[i64; 7]; 3] {
        std::array::from_fn(|j| std::array::from_fn(|i| d[i][j]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    #[test]
    fn table_entries() {
        let t = load_table();
        assert_eq!(t.values[3][0], CycNum::from_int(3));
        assert_eq!(t.values[4][3], -&CycNum::omega_sq());
        assert_eq!(t.values[6][5], CycNum::from_int(1));
        let degs: Vec<CycNum> = (0..7).map(|i| t.degree(i).clone()).collect();
        let expect: Vec<CycNum> = [1, 1, 1, 3, 2, 2, 2].iter().map(|&n| CycNum::from_int(n)).collect();
        assert_eq!(degs, expect);
    }

    #[test]
    fn orthogonality() {
        let g = build_group();
        let t = load_table();
        for i in 0..7 {
            for j in 0..7 {
                let expect = if i == j { CycNum::from_int(24) } else { CycNum::zero() };
                assert_eq!(t.row_inner(i, j, &g), expect, "rows {i},{j}");
            }
        }
        // Column orthogonality: |C(g)| on the diagonal pairing.
        for cg in 0..7 {
            for ch in 0..7 {
                let expect = if cg == ch {
                    CycNum::from_int(g.centralizer_orders[cg] as i64)
                } else {
                    CycNum::zero()
                };
                assert_eq!(t.column_inner(cg, ch, &g), expect, "cols {cg},{ch}");
            }
        }
        // The spotlight value: columns of 1 and z pair to zero.
        assert_eq!(t.column_inner(0, 1, &g), CycNum::zero());
    }

    #[test]
    fn idempotents_complete_orthogonal_central() {
        let g = build_group();
        let t = load_table();
        let es = t.central_idempotents(&g);
        assert_eq!(es[0].coeffs[0], CycNum::from_ratio(1, 24));
        // Coefficient of any order-4 element in e(eta3) is -1/8.
        let y = g.reps[2] as usize;
        assert_eq!(es[3].coeffs[y], CycNum::from_ratio(-1, 8));
        let mut sum = GroupAlgebraElement::zero();
        for e in &es {
            sum = sum.add(e);
            assert!(e.is_central(&g));
        }
        assert_eq!(sum, GroupAlgebraElement::one());
        for (i, a) in es.iter().enumerate() {
            for (j, b) in es.iter().enumerate() {
                let prod = a.mul(b, &g);
                if i == j {
                    assert_eq!(prod, *a);
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
    }

    #[test]
    fn decomposition_and_cartan() {
        let g = build_group();
        let t = load_table();
        let dd = t.brauer_decomposition(&g).unwrap();
        assert_eq!(dd.d, DECOMPOSITION_MATRIX);
        assert_eq!(dd.c, CARTAN_MATRIX);
        assert!(!dd.swapped);
        assert_eq!(dd.d[3], [1, 1, 1]);
        assert_eq!(dd.d[0], [1, 0, 0]);
        assert_eq!(dd.d[6], [0, 1, 1]);
        // det(C) computed exactly.
        let c_rows: Vec<Vec<i64>> = dd.c.iter().map(|r| r.to_vec()).collect();
        assert_eq!(linalg::det_i64(&c_rows), 32);
    }

    #[test]
    fn heights_vector() {
        let t = load_table();
        assert_eq!(t.heights(), [0, 0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn class_sum_expansions_match_direct_computation() {
        let g = build_group();
        let t = load_table();
        let es = t.central_idempotents(&g);
        for c in 0..NUM_CLASSES {
            let coeffs = t.class_sum_expansion(c, &g);
            let mut recomposed = GroupAlgebraElement::zero();
            for (m, coeff) in coeffs.iter().enumerate() {
                recomposed = recomposed.add(&es[m].scale(coeff));
            }
            assert_eq!(recomposed, g.class_sum(c), "class {c}");
        }
        // Frozen expansions: class of y and class of z.
        let y_exp = t.class_sum_expansion(2, &g);
        let expect: Vec<CycNum> = [6, 6, 6, -2, 0, 0, 0].iter().map(|&n| CycNum::from_int(n)).collect();
        assert_eq!(y_exp, expect);
        let z_exp = t.class_sum_expansion(1, &g);
        let expect: Vec<CycNum> = [1, 1, 1, 1, -1, -1, -1].iter().map(|&n| CycNum::from_int(n)).collect();
        assert_eq!(z_exp, expect);
        // Class of the identity expands to the all-ones vector.
        let one_exp = t.class_sum_expansion(0, &g);
        assert!(one_exp.iter().all(|c| *c == CycNum::one()));
        // Frozen expansion of the t-class: the coefficient on e(chi_1) is
        // 4*eta1(t) = 4w, with no inverse on the representative.
        let t_exp = t.class_sum_expansion(3, &g);
        let w = CycNum::omega();
        let w2 = CycNum::omega_sq();
        let four = CycNum::from_int(4);
        let mtwo = CycNum::from_int(-2);
        let expect = vec![
            four.clone(),
            &four * &w,
            &four * &w2,
            CycNum::zero(),
            &mtwo * &w2,
            &mtwo * &w,
            mtwo.clone(),
        ];
        assert_eq!(t_exp, expect);
    }

    #[test]
    fn class_sum_action_on_idempotents() {
        // class_sum(c) * e(chi_i) = (|c| chi_i(rep_c) / chi_i(1)) e(chi_i).
        let g = build_group();
        let t = load_table();
        let es = t.central_idempotents(&g);
        for c in 0..NUM_CLASSES {
            let cs = g.class_sum(c);
            for i in 0..NUM_CLASSES {
                let lhs = cs.mul(&es[i], &g);
                let scalar = &(&t.values[i][c] * &CycNum::from_int(g.class_sizes[c] as i64))
                    * &t.degree(i).inv();
                let rhs = es[i].scale(&scalar);
                assert_eq!(lhs, rhs, "class {c} on idempotent {i}");
            }
        }
    }
}
