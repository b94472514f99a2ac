//! Orchestration: every verification as a reported check, the counting
//! argument for character degrees, the isomorphism certificate between
//! the presented algebra and the group algebra, and machine-readable
//! exports. The `verify` binary drives everything here.

use crate::chartab::{self, CharacterTable, CARTAN_MATRIX, DECOMPOSITION_MATRIX};
use crate::coeff::{CycNum, ResidueElem, Valuation};
use crate::group::{GroupAlgebraElement, GroupTable, NUM_CLASSES, ORDER, REP_NAMES};
use crate::isometry::{self, SignedPermutation, VirtualCharacter};
use crate::linalg;
use crate::quiverpres::{self, PresentedAlgebra, NUM_MONOMIALS};
use crate::report::{Recorder, VerificationReport};
use crate::structure::{self, ArrowSet, CenterElements, Context, NormalizationTrace};
use std::cell::OnceCell;

/// Shared state for a verification run; every expensive artifact is
/// built once, lazily, and a failed build poisons its dependents with a
/// diagnostic instead of recomputing.
pub struct Session {
    ctx: OnceCell<Result<Context, String>>,
    centers: OnceCell<Result<CenterElements, String>>,
    bars: OnceCell<Result<structure::BarData, String>>,
    pipeline: OnceCell<Result<Pipeline, String>>,
    presented: OnceCell<Result<PresentedAlgebra, String>>,
}

pub struct Pipeline {
    pub raw: ArrowSet,
    pub certificates: Vec<structure::ArrowCertificate>,
    pub modules: Vec<structure::PureSubmodule>,
    pub normalized: ArrowSet,
    pub trace: NormalizationTrace,
}

impl Default for Session {
    fn default() -> Self {
        Self::new()
    }
}

impl Session {
    pub fn new() -> Session {
        Session {
            ctx: OnceCell::new(),
            centers: OnceCell::new(),
            bars: OnceCell::new(),
            pipeline: OnceCell::new(),
            presented: OnceCell::new(),
        }
    }

    pub fn ctx(&self) -> Result<&Context, String> {
        self.ctx.get_or_init(Context::new).as_ref().map_err(|e| e.clone())
    }

    pub fn centers(&self) -> Result<&CenterElements, String> {
        self.centers
            .get_or_init(|| self.ctx().map(structure::center_elements))
            .as_ref()
            .map_err(|e| e.clone())
    }

    pub fn bars(&self) -> Result<&structure::BarData, String> {
        self.bars
            .get_or_init(|| self.ctx().and_then(structure::bar_data))
            .as_ref()
            .map_err(|e| e.clone())
    }

    pub fn pipeline(&self) -> Result<&Pipeline, String> {
        self.pipeline
            .get_or_init(|| {
                let ctx = self.ctx()?;
                let centers = self.centers()?;
                let bars = self.bars()?;
                let (raw, certificates, modules) = structure::initial_arrows(ctx, bars)?;
                let (normalized, trace) = structure::normalize_arrows(ctx, centers, &raw)?;
                Ok(Pipeline { raw, certificates, modules, normalized, trace })
            })
            .as_ref()
            .map_err(|e: &String| e.clone())
    }

    pub fn presented(&self) -> Result<&PresentedAlgebra, String> {
        self.presented
            .get_or_init(PresentedAlgebra::build)
            .as_ref()
            .map_err(|e| e.clone())
    }
}

fn dependency_failure(name: &str, module: &str, err: &str) -> VerificationReport {
    let mut rec = Recorder::new(name, module);
    rec.require(&format!("dependency available: {err}"), false, "pipeline");
    rec.finish()
}

// ---------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------

pub fn check_cyclotomic() -> VerificationReport {
    let mut rec = Recorder::new("cyclotomic-arithmetic", "coeff");
    let w = CycNum::omega();
    rec.eq("w^3 = 1", CycNum::one(), w.pow(3), "direct");
    rec.eq("v2(2)", "1".to_string(), CycNum::from_int(2).v2().to_string(), "frozen");
    rec.eq("v2(w)", "0".to_string(), w.v2().to_string(), "frozen");
    let one_minus_w = &CycNum::one() - &w;
    rec.eq(
        "norm(1 - w) = 3, so v2(1 - w) = 0",
        "0".to_string(),
        one_minus_w.v2().to_string(),
        "oracle:norm",
    );
    rec.eq("v2(0)", "inf".to_string(), CycNum::zero().v2().to_string(), "frozen");
    rec.require("1/3 lies in O", CycNum::from_ratio(1, 3).in_o(), "direct");
    rec.require("1/2 lies outside O", !CycNum::from_ratio(1, 2).in_o(), "direct");
    let w_over_8 = w.scaled(&crate::coeff::Rational::new(1.into(), 8.into()));
    rec.eq("v2(w/8)", "-3".to_string(), w_over_8.v2().to_string(), "oracle:norm");
    rec.eq(
        "reduce(3) = 1",
        ResidueElem::ONE,
        CycNum::from_int(3).reduce_mod2().unwrap(),
        "frozen",
    );
    rec.eq(
        "reduce(w) is the residue generator",
        ResidueElem::GEN,
        w.reduce_mod2().unwrap(),
        "frozen",
    );
    rec.eq(
        "reduce(1/3) = 1",
        ResidueElem::ONE,
        CycNum::from_ratio(1, 3).reduce_mod2().unwrap(),
        "oracle:inverse of reduce(3)",
    );
    rec.require(
        "reduce rejects 1/2",
        CycNum::from_ratio(1, 2).reduce_mod2().is_err(),
        "direct",
    );
    rec.eq(
        "generator squared is generator plus one",
        ResidueElem::GEN_SQ,
        ResidueElem::GEN * ResidueElem::GEN,
        "direct",
    );
    rec.finish()
}

pub fn check_group(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("group-table", "group", &e),
    };
    let mut rec = Recorder::new("group-table", "group");
    let g = &ctx.group;
    let mut assoc = true;
    for a in 0..ORDER {
        for b in 0..ORDER {
            let ab = g.mul_idx(a, b);
            for c in 0..ORDER {
                if g.mul_idx(ab, c) != g.mul_idx(a, g.mul_idx(b, c)) {
                    assoc = false;
                }
            }
        }
    }
    rec.require("associativity on all 24^3 triples", assoc, "exhaustive");
    rec.require(
        "g * g^-1 = 1 for all g",
        (0..ORDER).all(|a| g.mul_idx(a, g.inv_idx(a)) == 0),
        "exhaustive",
    );
    rec.eq("group order", 24usize, ORDER, "frozen");
    rec.eq(
        "class sizes",
        "[1, 1, 6, 4, 4, 4, 4]".to_string(),
        format!("{:?}", g.class_sizes),
        "oracle:conjugation scan",
    );
    rec.eq(
        "centralizer of an order-3 element",
        6usize,
        g.centralizer_orders[3],
        "oracle:24 / class size",
    );
    let y = g.reps[2] as usize;
    let z = g.reps[1] as usize;
    rec.require("y^2 = z", g.mul_idx(y, y) == z, "direct");
    let central: Vec<usize> = (0..ORDER)
        .filter(|&a| (0..ORDER).all(|b| g.mul_idx(a, b) == g.mul_idx(b, a)))
        .collect();
    rec.eq("center", format!("{:?}", vec![0, z]), format!("{central:?}"), "exhaustive");
    let t = g.reps[3] as usize;
    rec.require("t^3 = 1", g.mul_idx(g.mul_idx(t, t), t) == 0, "direct");
    let odd = g.odd_order_elements();
    rec.eq("odd-order element count", 9usize, odd.len(), "oracle:element orders");
    rec.require("identity has odd order", odd.contains(&0), "direct");
    rec.require("z has even order", !odd.contains(&z), "direct");
    let sums: Vec<GroupAlgebraElement> = (0..NUM_CLASSES).map(|c| g.class_sum(c)).collect();
    rec.require("class sums are central", sums.iter().all(|s| s.is_central(g)), "exhaustive");
    rec.require(
        "class sums pairwise commute",
        sums.iter().all(|a| sums.iter().all(|b| a.mul(b, g) == b.mul(a, g))),
        "exhaustive",
    );
    let rows: Vec<Vec<CycNum>> = sums.iter().map(|s| s.coeffs.clone()).collect();
    rec.eq("class sums span dimension", 7usize, linalg::rank(&rows), "direct");
    rec.finish()
}

/// Row and column orthogonality for an arbitrary table; separated so a
/// corrupted table can be fed in to watch the check fail.
pub fn check_orthogonality_of(table: &CharacterTable, group: &GroupTable) -> VerificationReport {
    let mut rec = Recorder::new("char-orthogonality", "chartab");
    for i in 0..NUM_CLASSES {
        for j in 0..NUM_CLASSES {
            let expect = if i == j { CycNum::from_int(ORDER as i64) } else { CycNum::zero() };
            let got = table.row_inner(i, j, group);
            if !rec.eq(&format!("row pair ({i},{j})"), expect, got, "direct") {
                break;
            }
        }
    }
    for cg in 0..NUM_CLASSES {
        for ch in 0..NUM_CLASSES {
            let expect = if cg == ch {
                CycNum::from_int(group.centralizer_orders[cg] as i64)
            } else {
                CycNum::zero()
            };
            let got = table.column_inner(cg, ch, group);
            if !rec.eq(&format!("column pair ({cg},{ch})"), expect, got, "direct") {
                break;
            }
        }
    }
    rec.finish()
}

pub fn check_orthogonality(session: &Session) -> VerificationReport {
    match session.ctx() {
        Ok(ctx) => check_orthogonality_of(&ctx.table, &ctx.group),
        Err(e) => dependency_failure("char-orthogonality", "chartab", &e),
    }
}

pub fn check_central_idempotents(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("central-idempotents", "chartab", &e),
    };
    let mut rec = Recorder::new("central-idempotents", "chartab");
    let es = &ctx.cents;
    rec.eq(
        "coefficient of 1 in e(chi0)",
        CycNum::from_ratio(1, 24),
        es[0].coeffs[0].clone(),
        "frozen",
    );
    let y = ctx.group.reps[2] as usize;
    rec.eq(
        "coefficient of an order-4 element in e(chi3)",
        CycNum::from_ratio(-1, 8),
        es[3].coeffs[y].clone(),
        "oracle:3*(-1)/24",
    );
    let mut sum = GroupAlgebraElement::zero();
    let mut orthogonal = true;
    let mut central = true;
    for (i, a) in es.iter().enumerate() {
        sum = sum.add(a);
        central &= a.is_central(&ctx.group);
        for (j, b) in es.iter().enumerate() {
            let p = ctx.mul(a, b);
            let expect = if i == j { a.clone() } else { GroupAlgebraElement::zero() };
            orthogonal &= p == expect;
        }
    }
    rec.require("e(chi_i) e(chi_j) = delta e(chi_i), all 49 pairs", orthogonal, "exhaustive");
    rec.require("sum of idempotents is 1", sum == GroupAlgebraElement::one(), "direct");
    rec.require("every idempotent is central", central, "exhaustive");
    rec.finish()
}

pub fn check_decomposition(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("decomposition-matrix", "chartab", &e),
    };
    let mut rec = Recorder::new("decomposition-matrix", "chartab");
    let d = &ctx.decomp;
    rec.eq(
        "recomputed decomposition matrix equals the reference",
        format!("{DECOMPOSITION_MATRIX:?}"),
        format!("{:?}", d.d),
        "oracle:restriction to odd-order classes",
    );
    rec.eq("row of the degree-3 character", "[1, 1, 1]".to_string(), format!("{:?}", d.d[3]), "frozen");
    rec.eq("row of the trivial character", "[1, 0, 0]".to_string(), format!("{:?}", d.d[0]), "frozen");
    rec.eq("row of the last character", "[0, 1, 1]".to_string(), format!("{:?}", d.d[6]), "frozen");
    rec.require(
        "entries are nonnegative",
        d.d.iter().all(|r| r.iter().all(|&x| x >= 0)),
        "direct",
    );
    let heights = ctx.table.heights();
    let height0_rows_have_one =
        (0..NUM_CLASSES).filter(|&i| heights[i] == 0).all(|i| d.d[i].contains(&1));
    rec.require("height-zero rows contain a 1", height0_rows_have_one, "direct");
    rec.note(
        "simple-module labeling",
        if d.swapped { "swapped" } else { "natural" },
        "recorded choice",
    );
    rec.finish()
}

pub fn check_cartan(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("cartan-matrix", "chartab", &e),
    };
    let mut rec = Recorder::new("cartan-matrix", "chartab");
    rec.eq(
        "Cartan matrix equals D^T D",
        format!("{CARTAN_MATRIX:?}"),
        format!("{:?}", ctx.decomp.c),
        "oracle:matrix product",
    );
    let c_rows: Vec<Vec<i64>> = ctx.decomp.c.iter().map(|r| r.to_vec()).collect();
    rec.eq("det of the Cartan matrix", 32i128, linalg::det_i64(&c_rows), "oracle:exact determinant");
    rec.finish()
}

pub fn check_heights(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("heights", "chartab", &e),
    };
    let mut rec = Recorder::new("heights", "chartab");
    rec.eq(
        "height vector",
        "[0, 0, 0, 0, 1, 1, 1]".to_string(),
        format!("{:?}", ctx.table.heights()),
        "oracle:valuations of degrees",
    );
    rec.finish()
}

pub fn check_projectives(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("projective-characters", "chartab", &e),
    };
    let mut rec = Recorder::new("projective-characters", "chartab");
    let p = CharacterTable::projective_characters(&ctx.decomp.d);
    rec.eq(
        "first projective character",
        "eta0+eta3+eta4+eta5".to_string(),
        VirtualCharacter(p[0]).to_string(),
        "frozen",
    );
    rec.eq(
        "second projective character",
        "eta1+eta3+eta4+eta6".to_string(),
        VirtualCharacter(p[1]).to_string(),
        "frozen",
    );
    rec.eq(
        "third projective character",
        "eta2+eta3+eta5+eta6".to_string(),
        VirtualCharacter(p[2]).to_string(),
        "frozen",
    );
    for (i, q) in p.iter().enumerate() {
        let v = VirtualCharacter(*q);
        rec.eq(&format!("norm of projective {i}"), 4i64, v.norm(), "direct");
    }
    rec.finish()
}

pub fn check_class_sum_expansions(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("class-sum-expansions", "chartab", &e),
    };
    let mut rec = Recorder::new("class-sum-expansions", "chartab");
    for c in 0..NUM_CLASSES {
        let coeffs = ctx.table.class_sum_expansion(c, &ctx.group);
        let mut recomposed = GroupAlgebraElement::zero();
        for (m, coeff) in coeffs.iter().enumerate() {
            recomposed = recomposed.add(&ctx.cents[m].scale(coeff));
        }
        rec.require(
            &format!("expansion of class {} recomposes exactly", REP_NAMES[c]),
            recomposed == ctx.group.class_sum(c),
            "oracle:recomposition",
        );
    }
    let y_exp = ctx.table.class_sum_expansion(2, &ctx.group);
    let y_expect: Vec<CycNum> = [6, 6, 6, -2, 0, 0, 0].iter().map(|&n| CycNum::from_int(n)).collect();
    rec.require("expansion of the y class is (6,6,6,-2,0,0,0)", y_exp == y_expect, "frozen");
    let z_exp = ctx.table.class_sum_expansion(1, &ctx.group);
    let z_expect: Vec<CycNum> = [1, 1, 1, 1, -1, -1, -1].iter().map(|&n| CycNum::from_int(n)).collect();
    rec.require("expansion of the z class is (1,1,1,1,-1,-1,-1)", z_exp == z_expect, "frozen");
    let one_exp = ctx.table.class_sum_expansion(0, &ctx.group);
    rec.require(
        "expansion of the identity class is all ones",
        one_exp.iter().all(|c| *c == CycNum::one()),
        "direct",
    );
    // Action identity on all 49 pairs.
    let mut action_ok = true;
    for c in 0..NUM_CLASSES {
        let cs = ctx.group.class_sum(c);
        for i in 0..NUM_CLASSES {
            let lhs = ctx.mul(&cs, &ctx.cents[i]);
            let scalar = &(&ctx.table.values[i][c]
                * &CycNum::from_int(ctx.group.class_sizes[c] as i64))
                * &ctx.table.degree(i).inv();
            action_ok &= lhs == ctx.cents[i].scale(&scalar);
        }
    }
    rec.require(
        "class sums rescale idempotents by the central character",
        action_ok,
        "exhaustive",
    );
    rec.finish()
}

pub fn check_norm_classification(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("norm-classification", "isometry", &e),
    };
    let mut rec = Recorder::new("norm-classification", "isometry");
    let p = CharacterTable::projective_characters(&ctx.decomp.d);
    let proj = isometry::proj_lattice(&p);
    let l0 = isometry::l0_lattice(&p);
    rec.eq("rank of the orthogonal complement", 4usize, l0.rank(), "direct");

    let proj4 = proj.elements_of_norm(4);
    rec.eq("norm-4 elements of the projective lattice", 12usize, proj4.len(), "exhaustive");
    let expected_proj4 = {
        let ps: Vec<VirtualCharacter> = p.iter().map(|q| VirtualCharacter(*q)).collect();
        let mut v = vec![
            ps[0],
            ps[1],
            ps[2],
            ps[0].sub(&ps[1]),
            ps[0].sub(&ps[2]),
            ps[1].sub(&ps[2]),
        ];
        let negs: Vec<VirtualCharacter> = v.iter().map(|x| x.neg()).collect();
        v.extend(negs);
        v.sort();
        v
    };
    rec.require(
        "norm-4 projective list matches element for element",
        proj4 == expected_proj4,
        "frozen",
    );

    let l03 = l0.elements_of_norm(3);
    rec.eq("norm-3 elements of the complement", 12usize, l03.len(), "exhaustive");
    let frozen3: [[i64; 7]; 6] = [
        [1, 1, 0, 0, -1, 0, 0],
        [1, 0, 1, 0, 0, -1, 0],
        [1, 0, 0, -1, 0, 0, 1],
        [0, 1, 1, 0, 0, 0, -1],
        [0, 1, 0, -1, 0, 1, 0],
        [0, 0, 1, -1, 1, 0, 0],
    ];
    let expected3 = signed_sorted(&frozen3);
    rec.require("norm-3 complement list matches element for element", l03 == expected3, "frozen");

    let l04 = l0.elements_of_norm(4);
    rec.eq("norm-4 elements of the complement", 14usize, l04.len(), "exhaustive");
    let frozen4: [[i64; 7]; 7] = [
        [1, 1, 1, -1, 0, 0, 0],
        [1, -1, 0, 0, 0, -1, 1],
        [1, 0, -1, 0, -1, 0, 1],
        [1, 0, 0, 1, -1, -1, 0],
        [0, 1, -1, 0, -1, 1, 0],
        [0, 1, 0, 1, -1, 0, -1],
        [0, 0, 1, 1, 0, -1, -1],
    ];
    let expected4 = signed_sorted(&frozen4);
    rec.require("norm-4 complement list matches element for element", l04 == expected4, "frozen");

    // Independent oracle: ambient bounded scan.
    for n in [3i64, 4] {
        rec.require(
            &format!("lattice enumeration matches the ambient scan oracle at norm {n}"),
            proj.elements_of_norm(n) == isometry::elements_of_norm_by_scan(&proj, n)
                && l0.elements_of_norm(n) == isometry::elements_of_norm_by_scan(&l0, n),
            "oracle:ambient scan",
        );
    }

    match isometry::distinguished_element(&l0) {
        Ok(d) => {
            rec.eq(
                "distinguished norm-4 element",
                "eta0+eta1+eta2-eta3".to_string(),
                d.to_string(),
                "exhaustive",
            );
        }
        Err(e) => {
            rec.require(&format!("distinguished element: {e}"), false, "exhaustive");
        }
    }
    rec.finish()
}

fn signed_sorted(rows: &[[i64; 7]]) -> Vec<VirtualCharacter> {
    let mut v: Vec<VirtualCharacter> = rows.iter().map(|r| VirtualCharacter(*r)).collect();
    let negs: Vec<VirtualCharacter> = v.iter().map(|x| x.neg()).collect();
    v.extend(negs);
    v.sort();
    v
}

pub fn check_isometry_group(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("isometry-group", "isometry", &e),
    };
    let mut rec = Recorder::new("isometry-group", "isometry");
    let p = CharacterTable::projective_characters(&ctx.decomp.d);
    let proj = isometry::proj_lattice(&p);
    let norm4 = proj.elements_of_norm(4);
    let scanned = isometry::scan_proj_preserving(&norm4);
    let closed = isometry::closure(&isometry::generators());
    rec.eq("brute-force count over 645120 candidates", 48usize, scanned.len(), "exhaustive");
    rec.eq("generator closure order", 48usize, closed.len(), "oracle:frozen from the scan");
    rec.require("scan and closure agree as sets", scanned == closed, "oracle:two routes");
    for g in isometry::generators() {
        rec.require(
            &format!("generator {g} preserves the norm-4 set"),
            isometry::preserves_set(&g, &norm4),
            "direct",
        );
    }
    let bad = SignedPermutation::from_cycles(&[&[0, 3]]);
    rec.require(
        "the (eta0 eta3) transposition is excluded",
        !isometry::preserves_set(&bad, &norm4),
        "direct",
    );
    let image = bad.apply(&VirtualCharacter(p[1]));
    rec.require(
        "its image of the second projective leaves the lattice",
        !proj.contains(&image),
        "oracle:exact lattice solve",
    );
    let sub = isometry::closure(&isometry::generators()[..3]);
    rec.require(
        "the subgroup from -Id and the two table permutations is contained",
        sub.iter().all(|s| closed.binary_search(s).is_ok()),
        "direct",
    );
    // Permuting the norm-4 set really does preserve the lattice: the
    // images of the three projective characters stay inside it.
    let lattice_preserved = closed.iter().all(|m| {
        p.iter().all(|q| proj.contains(&m.apply(&VirtualCharacter(*q))))
    });
    rec.require(
        "every member maps the projective lattice into itself",
        lattice_preserved,
        "oracle:exact lattice solve",
    );
    rec.finish()
}

pub fn check_twist_permutation(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("twist-permutation", "isometry", &e),
    };
    let mut rec = Recorder::new("twist-permutation", "isometry");
    match isometry::twist_permutation(&ctx.table) {
        Ok(pi) => {
            rec.eq(
                "permutation from multiplying by the degree-one character",
                "[1, 2, 0, 3, 6, 4, 5]".to_string(),
                format!("{pi:?}"),
                "oracle:row identification",
            );
            rec.require("eta1 * eta0 = eta1", pi[0] == 1, "direct");
            rec.require("eta1 * eta3 = eta3 (3 is fixed)", pi[3] == 3, "direct");
        }
        Err(e) => {
            rec.require(&format!("twist permutation: {e}"), false, "direct");
        }
    }
    rec.finish()
}

pub fn check_inversion_permutation(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("inversion-permutation", "isometry", &e),
    };
    let mut rec = Recorder::new("inversion-permutation", "isometry");
    match isometry::inversion_permutation(&ctx.table, &ctx.group) {
        Ok(pi) => {
            rec.eq(
                "permutation from composing with inversion",
                "[0, 2, 1, 3, 5, 4, 6]".to_string(),
                format!("{pi:?}"),
                "oracle:row identification",
            );
            rec.require("eta0 is fixed", pi[0] == 0, "direct");
            rec.require("eta1 maps to eta2", pi[1] == 2, "direct");
            rec.require("eta6 is fixed", pi[6] == 6, "direct");
        }
        Err(e) => {
            rec.require(&format!("inversion permutation: {e}"), false, "direct");
        }
    }
    rec.finish()
}

pub fn check_perfectness(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("perfectness", "isometry", &e),
    };
    let mut rec = Recorder::new("perfectness", "isometry");
    let table = &ctx.table;
    let group = &ctx.group;
    let id = SignedPermutation::identity();
    rec.eq(
        "identity bicharacter at (1,1)",
        CycNum::from_int(24),
        isometry::mu_bicharacter(&id, 0, 0, table, group),
        "oracle:sum of squared degrees",
    );
    let swap = SignedPermutation::signed_swap_pair(2, 3, 5, 6);
    rec.eq(
        "signed double swap bicharacter at (1,1)",
        CycNum::from_int(-8),
        isometry::mu_bicharacter(&swap, 0, 0, table, group),
        "frozen",
    );
    let named: [(&str, SignedPermutation); 4] = [
        ("identity", id),
        ("twist", SignedPermutation::from_cycles(&[&[0, 1, 2], &[4, 6, 5]])),
        ("inversion", SignedPermutation::from_cycles(&[&[1, 2], &[4, 5]])),
        ("signed double swap", swap),
    ];
    for (name, phi) in &named {
        let cert = isometry::is_perfect(phi, table, group);
        rec.require(&format!("{name} isometry is perfect"), cert.perfect, "direct");
    }
    // Full 49-pair certificate for the signed double swap.
    let cert = isometry::is_perfect(&swap, table, group);
    for e in &cert.entries {
        rec.eq(
            &format!(
                "pair ({}, {}): value {} with valuation {}",
                e.pair.0, e.pair.1, e.value, e.valuation
            ),
            true,
            e.ok,
            &format!("required valuation {}", e.required),
        );
    }
    // Every member of the isometry group is perfect and preserves the
    // projective lattice.
    let members = isometry::closure(&isometry::generators());
    let p = CharacterTable::projective_characters(&ctx.decomp.d);
    let proj = isometry::proj_lattice(&p);
    let norm4 = proj.elements_of_norm(4);
    let mut all_perfect = true;
    let mut all_preserve = true;
    for m in &members {
        all_perfect &= isometry::is_perfect(m, table, group).perfect;
        all_preserve &= isometry::preserves_set(m, &norm4);
    }
    rec.require("all 48 members are perfect", all_perfect, "exhaustive");
    rec.require(
        "perfect members preserve the projective lattice",
        all_perfect && all_preserve,
        "exhaustive",
    );
    // Negating eta0 alone is not perfect: the vanishing condition fails.
    let mut neg0 = SignedPermutation::identity();
    neg0.eps[0] = -1;
    let bad = isometry::is_perfect(&neg0, table, group);
    rec.require("negating eta0 alone fails", !bad.perfect, "oracle:direct evaluation");
    let mu = isometry::mu_bicharacter(&neg0, group.reps[3] as usize, 0, table, group);
    rec.require("its value at (t, 1) is nonzero", !mu.is_zero(), "direct");
    rec.finish()
}

pub fn check_center_radical(session: &Session) -> VerificationReport {
    run_list_check("center-radical", "structure", session, |ctx, centers| {
        structure::center_radical_checks(ctx, centers)
    })
}

pub fn check_center_bases(session: &Session) -> VerificationReport {
    let (ctx, centers) = match (session.ctx(), session.centers()) {
        (Ok(c), Ok(z)) => (c, z),
        (Err(e), _) | (_, Err(e)) => return dependency_failure("center-bases", "structure", &e),
    };
    let mut rec = Recorder::new("center-bases", "structure");
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            match structure::center_basis_determinant(ctx, centers, i, j) {
                Ok(det) => {
                    rec.eq(
                        &format!("determinant valuation for the pair ({i},{j})"),
                        "0".to_string(),
                        det.v2().to_string(),
                        "direct",
                    );
                }
                Err(e) => {
                    rec.require(&format!("pair ({i},{j}): {e}"), false, "direct");
                }
            }
        }
    }
    rec.require(
        "replacing 8 e(chi3) by 4 e(chi3) leaves O",
        !ctx.cents[3].scale(&CycNum::from_int(4)).all_in_o(),
        "oracle:integrality",
    );
    rec.finish()
}

pub fn check_class_sum_span(session: &Session) -> VerificationReport {
    run_list_check("class-sum-span", "structure", session, |ctx, centers| {
        structure::class_sums_span_check(ctx, centers)
    })
}

pub fn check_corner_centers(session: &Session) -> VerificationReport {
    run_list_check("corner-centers", "structure", session, |ctx, centers| {
        structure::corner_checks(ctx, centers)
    })
}

pub fn check_corner_polynomials(session: &Session) -> VerificationReport {
    run_list_check("corner-polynomials", "structure", session, |ctx, centers| {
        structure::corner_polynomial_checks(ctx, centers)
    })
}

pub fn check_center_mod2(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("center-mod2", "structure", &e),
    };
    let pipeline = match session.pipeline() {
        Ok(p) => p,
        Err(e) => return dependency_failure("center-mod2", "structure", &e),
    };
    let mut rec = Recorder::new("center-mod2", "structure");
    match structure::bar_center_checks(ctx, &pipeline.normalized) {
        Ok(list) => {
            for (name, ok) in list {
                rec.require(&name, ok, "direct");
            }
        }
        Err(e) => {
            rec.require(&format!("center mod 2: {e}"), false, "direct");
        }
    }
    rec.finish()
}

pub fn check_primitivity(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("primitivity", "structure", &e),
    };
    let mut rec = Recorder::new("primitivity", "structure");
    for i in 0..3 {
        match structure::primitivity_certificate(ctx, i) {
            Ok(list) => {
                for (name, ok) in list {
                    rec.require(&name, ok, "exhaustive");
                }
            }
            Err(e) => {
                rec.require(&format!("corner {i}: {e}"), false, "exhaustive");
            }
        }
    }
    rec.finish()
}

pub fn check_pure_submodules(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("pure-submodules", "structure", &e),
    };
    let mut rec = Recorder::new("pure-submodules", "structure");
    match structure::pure_submodule(ctx, 0, &[3, 4]) {
        Ok(u) => {
            rec.eq("rank of the (0, {3,4}) submodule", 5usize, u.lattice.rank(), "oracle:degree sum");
            rec.require(
                "purity: all invariant valuations vanish",
                u.purity_vals.iter().all(|&v| v == 0),
                "oracle:local Smith form",
            );
        }
        Err(e) => {
            rec.require(&format!("(0, {{3,4}}): {e}"), false, "direct");
        }
    }
    match structure::pure_submodule(ctx, 0, &[0, 3, 4, 5]) {
        Ok(full) => {
            rec.eq("full column gives the whole projective", 8usize, full.lattice.rank(), "direct");
        }
        Err(e) => {
            rec.require(&format!("full column: {e}"), false, "direct");
        }
    }
    rec.require(
        "inconsistent characters are rejected",
        structure::pure_submodule(ctx, 0, &[1, 3]).is_err(),
        "direct",
    );
    rec.finish()
}

pub fn check_arrow_construction(session: &Session) -> VerificationReport {
    let pipeline = match session.pipeline() {
        Ok(p) => p,
        Err(e) => return dependency_failure("arrow-construction", "structure", &e),
    };
    let mut rec = Recorder::new("arrow-construction", "structure");
    for cert in &pipeline.certificates {
        let name = quiverpres::ARROW_NAMES[cert.arrow];
        rec.require(
            &format!("{name}: representative is nonzero in the arrow space"),
            cert.arrow_space_ok,
            "direct",
        );
        rec.eq(&format!("{name}: module rank"), 5usize, cert.module_rank, "oracle:degree sum");
        rec.require(
            &format!("{name}: module is pure"),
            cert.purity_vals.iter().all(|&v| v == 0),
            "oracle:local Smith form",
        );
        rec.require(
            &format!("{name}: generates its module (residue orbit has dimension 5)"),
            cert.generates_module,
            "oracle:residue-field span",
        );
        rec.require(
            &format!("{name}: character support matches"),
            cert.char_support_ok,
            "direct",
        );
    }
    rec.finish()
}

pub fn check_submodule_uniqueness(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("submodule-uniqueness", "structure", &e),
    };
    let bars = match session.bars() {
        Ok(b) => b,
        Err(e) => return dependency_failure("submodule-uniqueness", "structure", &e),
    };
    let pipeline = match session.pipeline() {
        Ok(p) => p,
        Err(e) => return dependency_failure("submodule-uniqueness", "structure", &e),
    };
    let mut rec = Recorder::new("submodule-uniqueness", "structure");
    let gamma_module = &pipeline.modules[quiverpres::GAMMA];
    match structure::unique_submodule_search(ctx, bars, gamma_module) {
        Ok(search) => {
            rec.eq(
                "submodules with dimension 5 and composition (2,2,1)",
                1usize,
                search.matching,
                "exhaustive",
            );
            rec.require(
                "the unique one is the arrow module",
                search.matches_arrow_module,
                "exhaustive",
            );
            rec.note(
                "submodule counts",
                &format!("{} cyclic, {} total", search.cyclic_count, search.total_count),
                "exhaustive",
            );
        }
        Err(e) => {
            rec.require(&format!("submodule search: {e}"), false, "exhaustive");
        }
    }
    rec.finish()
}

pub fn check_arrow_normalization(session: &Session) -> VerificationReport {
    let (ctx, centers) = match (session.ctx(), session.centers()) {
        (Ok(c), Ok(z)) => (c, z),
        (Err(e), _) | (_, Err(e)) => {
            return dependency_failure("arrow-normalization", "structure", &e)
        }
    };
    let pipeline = match session.pipeline() {
        Ok(p) => p,
        Err(e) => return dependency_failure("arrow-normalization", "structure", &e),
    };
    let mut rec = Recorder::new("arrow-normalization", "structure");
    for (name, ok) in &pipeline.trace.steps {
        rec.require(name, *ok, "direct");
    }
    for (name, ok) in structure::normalized_product_checks(ctx, centers, &pipeline.normalized) {
        rec.require(&name, ok, "direct");
    }
    rec.note(
        "solved pair scalars",
        &format!(
            "mu = [{}, {}, {}], nu = [{}, {}, {}]",
            pipeline.trace.mu[0],
            pipeline.trace.mu[1],
            pipeline.trace.mu[2],
            pipeline.trace.nu[0],
            pipeline.trace.nu[1],
            pipeline.trace.nu[2]
        ),
        "recorded",
    );
    rec.note(
        "triple scalars",
        &format!(
            "mu = {}, mu' = {}, kappa twist = 1 + ({}), residual gauge = {}",
            pipeline.trace.mu_triple,
            pipeline.trace.mu_prime,
            pipeline.trace.nu_kappa,
            pipeline.trace.residual
        ),
        "recorded",
    );
    rec.finish()
}

pub fn check_annihilation(session: &Session) -> VerificationReport {
    let (ctx, centers) = match (session.ctx(), session.centers()) {
        (Ok(c), Ok(z)) => (c, z),
        (Err(e), _) | (_, Err(e)) => {
            return dependency_failure("center-arrow-annihilation", "structure", &e)
        }
    };
    let pipeline = match session.pipeline() {
        Ok(p) => p,
        Err(e) => return dependency_failure("center-arrow-annihilation", "structure", &e),
    };
    let mut rec = Recorder::new("center-arrow-annihilation", "structure");
    for (name, ok) in structure::annihilation_checks(ctx, centers, &pipeline.normalized) {
        rec.require(&name, ok, "direct");
    }
    rec.finish()
}

pub fn check_defining_relations(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("defining-relations", "structure", &e),
    };
    let pipeline = match session.pipeline() {
        Ok(p) => p,
        Err(e) => return dependency_failure("defining-relations", "structure", &e),
    };
    let mut rec = Recorder::new("defining-relations", "structure");
    for (name, ok) in structure::defining_relations_in_algebra(ctx, &pipeline.normalized) {
        rec.require(&name, ok, "direct");
    }
    let all_integral = pipeline.normalized.arrows.iter().all(|a| a.all_in_o())
        && pipeline.normalized.idems.iter().all(|e| e.all_in_o());
    rec.require("all constructed elements have coefficients in O", all_integral, "direct");
    rec.finish()
}

pub fn check_quiver_constants(session: &Session) -> VerificationReport {
    let alg = match session.presented() {
        Ok(a) => a,
        Err(e) => return dependency_failure("quiver-structure-constants", "quiverpres", &e),
    };
    let mut rec = Recorder::new("quiver-structure-constants", "quiverpres");
    use quiverpres::{PresentedElement, E0, E1, M_BDL, M_BETA, M_BGB, M_DELTA, M_KAPPA, M_KLK};
    rec.eq(
        "e0 * e0",
        PresentedElement::basis(E0).to_string(),
        alg.constants[E0][E0].to_string(),
        "direct",
    );
    rec.require("e0 * e1 = 0", alg.constants[E0][E1].is_zero(), "direct");
    rec.eq(
        "beta * delta",
        PresentedElement::from_terms(&[(-2, M_KAPPA), (1, M_KLK)]).to_string(),
        alg.constants[M_BETA][M_DELTA].to_string(),
        "frozen",
    );
    rec.eq(
        "(beta delta lambda) * beta",
        PresentedElement::from_terms(&[(-8, M_BETA), (4, M_BGB)]).to_string(),
        alg.constants[M_BDL][M_BETA].to_string(),
        "frozen",
    );
    let one = PresentedElement::identity();
    let identity_ok = (0..NUM_MONOMIALS).all(|m| {
        let b = PresentedElement::basis(m);
        alg.mul(&one, &b) == b && alg.mul(&b, &one) == b
    });
    rec.require("e0 + e1 + e2 is a two-sided identity", identity_ok, "exhaustive");
    let integral = alg.constants.iter().all(|row| row.iter().all(|e| e.all_in_o()));
    rec.require("all structure constants lie in O", integral, "exhaustive");
    rec.finish()
}

pub fn check_quiver_relations(session: &Session) -> VerificationReport {
    let alg = match session.presented() {
        Ok(a) => a,
        Err(e) => return dependency_failure("quiver-relations", "quiverpres", &e),
    };
    let mut rec = Recorder::new("quiver-relations", "quiverpres");
    rec.require(
        "derived identities verified by formal expansion",
        quiverpres::verify_derived_identities().is_ok(),
        "oracle:two formal routes",
    );
    rec.eq("spanning set size", 24usize, quiverpres::SPANNING_WORDS.len(), "frozen");
    for (name, ok) in alg.relation_checks() {
        rec.require(&name, ok, "direct");
    }
    use quiverpres::{PresentedElement, M_BDL, M_BG, M_DELTA, M_DHD};
    let r = alg.reduce_str("gamma*beta*delta").unwrap();
    rec.eq(
        "reduce(gamma*beta*delta)",
        PresentedElement::from_terms(&[(-4, M_DELTA), (2, M_DHD)]).to_string(),
        r.to_string(),
        "frozen",
    );
    let r = alg.reduce_str("beta*gamma*beta*gamma").unwrap();
    rec.eq(
        "reduce(beta*gamma*beta*gamma)",
        PresentedElement::from_terms(&[(2, M_BG), (1, M_BDL)]).to_string(),
        r.to_string(),
        "oracle:group-algebra transport",
    );
    rec.require(
        "kappa*eta rewrites out of the spanning set",
        alg.reduce_str("kappa*eta").unwrap().support().len() == 2,
        "direct",
    );
    rec.finish()
}

pub fn check_quiver_associativity(session: &Session) -> VerificationReport {
    let alg = match session.presented() {
        Ok(a) => a,
        Err(e) => return dependency_failure("quiver-associativity", "quiverpres", &e),
    };
    let mut rec = Recorder::new("quiver-associativity", "quiverpres");
    match alg.associativity_failure() {
        None => {
            rec.require("all 24^3 basis triples associate", true, "exhaustive");
        }
        Some((s, t, u)) => {
            rec.eq(
                "first failing triple",
                "none".to_string(),
                format!(
                    "({}, {}, {})",
                    quiverpres::monomial_name(s),
                    quiverpres::monomial_name(t),
                    quiverpres::monomial_name(u)
                ),
                "exhaustive",
            );
        }
    }
    rec.finish()
}

pub fn check_quiver_peirce(session: &Session) -> VerificationReport {
    let alg = match session.presented() {
        Ok(a) => a,
        Err(e) => return dependency_failure("quiver-peirce", "quiverpres", &e),
    };
    let mut rec = Recorder::new("quiver-peirce", "quiverpres");
    let counts = alg.peirce_counts();
    for i in 0..3 {
        for j in 0..3 {
            rec.eq(
                &format!("monomials from vertex {i} to vertex {j}"),
                CARTAN_MATRIX[i][j],
                counts[i][j] as i64,
                "oracle:Cartan matrix",
            );
        }
    }
    rec.finish()
}

pub fn check_quiver_mod2(session: &Session) -> VerificationReport {
    let alg = match session.presented() {
        Ok(a) => a,
        Err(e) => return dependency_failure("quiver-mod2", "quiverpres", &e),
    };
    let mut rec = Recorder::new("quiver-mod2", "quiverpres");
    for (name, ok) in alg.mod2_checks() {
        rec.require(&name, ok, "direct");
    }
    rec.finish()
}

/// Exhaustive enumeration of multisets of seven positive integers whose
/// squares sum to the algebra rank, with the two exclusion arguments
/// re-derived by enumeration.
pub fn check_degree_partition() -> VerificationReport {
    let mut rec = Recorder::new("degree-partition", "harness");
    fn search(
        min: i64,
        left: usize,
        remaining: i64,
        stack: &mut Vec<i64>,
        found: &mut Vec<Vec<i64>>,
    ) {
        if left == 0 {
            if remaining == 0 {
                found.push(stack.clone());
            }
            return;
        }
        let mut d = min;
        while d * d * (left as i64) <= remaining {
            stack.push(d);
            search(d, left - 1, remaining - d * d, stack, found);
            stack.pop();
            d += 1;
        }
    }
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut stack: Vec<i64> = Vec::new();
    search(1, 7, 24, &mut stack, &mut found);
    rec.eq("number of valid degree multisets", 1usize, found.len(), "exhaustive");
    rec.eq(
        "the unique multiset",
        "[1, 1, 1, 2, 2, 2, 3]".to_string(),
        format!("{:?}", found.first().cloned().unwrap_or_default()),
        "exhaustive",
    );
    // No degree 4: 24 - 16 = 8 is not a sum of six positive squares.
    fn sums(min: i64, left: usize, acc: i64, cap: i64, out: &mut std::collections::BTreeSet<i64>) {
        if left == 0 {
            out.insert(acc);
            return;
        }
        let mut d = min;
        while acc + d * d * (left as i64) <= cap {
            sums(d, left - 1, acc + d * d, cap, out);
            d += 1;
        }
    }
    let mut six_square_sums = std::collections::BTreeSet::new();
    sums(1, 6, 0, 8, &mut six_square_sums);
    rec.require(
        "8 is not a sum of six positive squares",
        !six_square_sums.contains(&8),
        "oracle:enumeration",
    );
    // A degree-3 character must occur: 24 is not a sum of seven squares
    // drawn from {1, 4}.
    let mut possible = false;
    for b in 0..=7i64 {
        let a = 7 - b;
        if a + 4 * b == 24 {
            possible = true;
        }
    }
    rec.require("24 is not a sum of seven squares of 1 or 2", !possible, "oracle:enumeration");
    rec.finish()
}

/// Evaluate the 24 spanning monomials on the normalized arrows, certify
/// the unit determinant of the evaluation matrix, and transport all
/// 24 x 24 structure constants.
pub fn check_isomorphism(session: &Session) -> VerificationReport {
    let ctx = match session.ctx() {
        Ok(c) => c,
        Err(e) => return dependency_failure("presentation-isomorphism", "harness", &e),
    };
    let pipeline = match session.pipeline() {
        Ok(p) => p,
        Err(e) => return dependency_failure("presentation-isomorphism", "harness", &e),
    };
    let alg = match session.presented() {
        Ok(a) => a,
        Err(e) => return dependency_failure("presentation-isomorphism", "harness", &e),
    };
    let mut rec = Recorder::new("presentation-isomorphism", "harness");
    let set = &pipeline.normalized;
    let images: Vec<GroupAlgebraElement> =
        (0..NUM_MONOMIALS).map(|m| structure::eval_monomial(ctx, set, m)).collect();
    let idem_sum = images[0].add(&images[1]).add(&images[2]);
    rec.require("images of e0 + e1 + e2 give 1", idem_sum == GroupAlgebraElement::one(), "direct");
    rec.require(
        "all 24 images have coefficients in O",
        images.iter().all(|x| x.all_in_o()),
        "direct",
    );
    let matrix: Vec<Vec<CycNum>> = images.iter().map(|x| x.coeffs.clone()).collect();
    let det = linalg::det(&matrix);
    rec.eq(
        "valuation of the evaluation determinant",
        "0".to_string(),
        det.v2().to_string(),
        "oracle:exact determinant",
    );
    let mut transported = true;
    let mut first_fail = None;
    for s in 0..NUM_MONOMIALS {
        for t in 0..NUM_MONOMIALS {
            let lhs = ctx.mul(&images[s], &images[t]);
            let mut rhs = GroupAlgebraElement::zero();
            for (u, c) in alg.constants[s][t].coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rhs = rhs.add(&images[u].scale(c));
                }
            }
            if lhs != rhs {
                transported = false;
                if first_fail.is_none() {
                    first_fail = Some((s, t));
                }
            }
        }
    }
    rec.require("all 576 products transport exactly", transported, "exhaustive");
    if let Some((s, t)) = first_fail {
        rec.note(
            "first failing product",
            &format!("{} * {}", quiverpres::monomial_name(s), quiverpres::monomial_name(t)),
            "diagnostic",
        );
    }
    rec.require(
        "conclusion: the presented algebra is isomorphic to the group algebra",
        det.v2() == Valuation::Finite(0) && transported,
        "oracle:surjection with unit determinant",
    );
    rec.finish()
}

fn run_list_check(
    name: &str,
    module: &str,
    session: &Session,
    f: impl Fn(&Context, &CenterElements) -> Vec<(String, bool)>,
) -> VerificationReport {
    let (ctx, centers) = match (session.ctx(), session.centers()) {
        (Ok(c), Ok(z)) => (c, z),
        (Err(e), _) | (_, Err(e)) => return dependency_failure(name, module, &e),
    };
    let mut rec = Recorder::new(name, module);
    for (claim, ok) in f(ctx, centers) {
        rec.require(&claim, ok, "direct");
    }
    rec.finish()
}

// ---------------------------------------------------------------------
// Check registry and runner
// ---------------------------------------------------------------------

pub const GROUPS: [&str; 7] =
    ["chartable", "isometries", "perfect", "center", "arrows", "quiver", "theorem-c"];

type CheckFn = fn(&Session) -> VerificationReport;

/// `(name, module, group, runner)` for every check, in dependency order.
pub fn registry() -> Vec<(&'static str, &'static str, &'static str, CheckFn)> {
    fn cyclotomic(_: &Session) -> VerificationReport {
        check_cyclotomic()
    }
    fn degree(_: &Session) -> VerificationReport {
        check_degree_partition()
    }
    vec![
        ("cyclotomic-arithmetic", "coeff", "chartable", cyclotomic),
        ("group-table", "group", "chartable", check_group),
        ("char-orthogonality", "chartab", "chartable", check_orthogonality),
        ("central-idempotents", "chartab", "chartable", check_central_idempotents),
        ("decomposition-matrix", "chartab", "chartable", check_decomposition),
        ("cartan-matrix", "chartab", "chartable", check_cartan),
        ("heights", "chartab", "chartable", check_heights),
        ("projective-characters", "chartab", "chartable", check_projectives),
        ("class-sum-expansions", "chartab", "chartable", check_class_sum_expansions),
        ("norm-classification", "isometry", "isometries", check_norm_classification),
        ("isometry-group", "isometry", "isometries", check_isometry_group),
        ("twist-permutation", "isometry", "isometries", check_twist_permutation),
        ("inversion-permutation", "isometry", "isometries", check_inversion_permutation),
        ("perfectness", "isometry", "perfect", check_perfectness),
        ("center-radical", "structure", "center", check_center_radical),
        ("center-bases", "structure", "center", check_center_bases),
        ("class-sum-span", "structure", "center", check_class_sum_span),
        ("corner-centers", "structure", "center", check_corner_centers),
        ("corner-polynomials", "structure", "center", check_corner_polynomials),
        ("primitivity", "structure", "arrows", check_primitivity),
        ("pure-submodules", "structure", "arrows", check_pure_submodules),
        ("arrow-construction", "structure", "arrows", check_arrow_construction),
        ("submodule-uniqueness", "structure", "arrows", check_submodule_uniqueness),
        ("arrow-normalization", "structure", "arrows", check_arrow_normalization),
        ("center-arrow-annihilation", "structure", "arrows", check_annihilation),
        ("defining-relations", "structure", "arrows", check_defining_relations),
        ("center-mod2", "structure", "center", check_center_mod2),
        ("quiver-structure-constants", "quiverpres", "quiver", check_quiver_constants),
        ("quiver-relations", "quiverpres", "quiver", check_quiver_relations),
        ("quiver-associativity", "quiverpres", "quiver", check_quiver_associativity),
        ("quiver-peirce", "quiverpres", "quiver", check_quiver_peirce),
        ("quiver-mod2", "quiverpres", "quiver", check_quiver_mod2),
        ("degree-partition", "harness", "theorem-c", degree),
        ("presentation-isomorphism", "harness", "theorem-c", check_isomorphism),
    ]
}

/// Run the selected checks in dependency order. `group` restricts to one
/// CLI command group (or "all"); `only` further restricts by check name,
/// module name or group name.
pub fn run_all(session: &Session, group: &str, only: Option<&str>) -> Vec<VerificationReport> {
    registry()
        .into_iter()
        .filter(|(_, _, g, _)| group == "all" || *g == group)
        .filter(|(name, module, g, _)| match only {
            None => true,
            Some(o) => *name == o || *module == o || *g == o,
        })
        .map(|(_, _, _, f)| f(session))
        .collect()
}

// ---------------------------------------------------------------------
// Exports
// ---------------------------------------------------------------------

/// CSV export of the character table, decomposition matrix and Cartan
/// matrix, with exact coefficient strings.
pub fn export_chartable(session: &Session) -> Result<String, String> {
    let ctx = session.ctx()?;
    let mut out = String::new();
    out.push_str("# character table\n");
    out.push_str(&format!("char,{}\n", REP_NAMES.join(",")));
    for i in 0..NUM_CLASSES {
        let row: Vec<String> = ctx.table.values[i].iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("{},{}\n", chartab::CHAR_NAMES[i], row.join(",")));
    }
    out.push_str("\n# decomposition matrix\n");
    for i in 0..NUM_CLASSES {
        let row: Vec<String> = ctx.decomp.d[i].iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("{},{}\n", chartab::CHAR_NAMES[i], row.join(",")));
    }
    out.push_str("\n# cartan matrix\n");
    for r in &ctx.decomp.c {
        let row: Vec<String> = r.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("{}\n", row.join(",")));
    }
    Ok(out)
}

/// JSON export of the structure-constant tensor with exact coefficient
/// strings.
pub fn export_structure_constants(session: &Session) -> Result<String, String> {
    let alg = session.presented()?;
    #[derive(serde::Serialize)]
    struct Entry {
        s: String,
        t: String,
        coeffs: Vec<(String, String)>,
    }
    let mut entries = Vec::new();
    for s in 0..NUM_MONOMIALS {
        for t in 0..NUM_MONOMIALS {
            let e = &alg.constants[s][t];
            if e.is_zero() {
                continue;
            }
            let coeffs = e
                .support()
                .into_iter()
                .map(|u| (quiverpres::monomial_name(u), e.coeffs[u].to_string()))
                .collect();
            entries.push(Entry {
                s: quiverpres::monomial_name(s),
                t: quiverpres::monomial_name(t),
                coeffs,
            });
        }
    }
    serde_json::to_string_pretty(&entries).map_err(|e| e.to_string())
}

pub fn reports_to_json(reports: &[VerificationReport]) -> Result<String, String> {
    serde_json::to_string_pretty(reports).map_err(|e| e.to_string())
}

#[derive(serde::Serialize, serde::Deserialize)]
struct ElementJson {
    name: String,
    /// One `(a, b)` pair of reduced fraction strings per group element.
    coeffs: Vec<(String, String)>,
}

fn element_to_json(name: &str, x: &GroupAlgebraElement) -> ElementJson {
    ElementJson {
        name: name.to_string(),
        coeffs: x.coeffs.iter().map(|c| (c.a.to_string(), c.b.to_string())).collect(),
    }
}

fn element_from_json(e: &ElementJson) -> Result<GroupAlgebraElement, String> {
    let coeffs: Result<Vec<CycNum>, String> = e
        .coeffs
        .iter()
        .map(|(a, b)| {
            let pa = a.parse().map_err(|_| format!("bad fraction {a:?}"))?;
            let pb = b.parse().map_err(|_| format!("bad fraction {b:?}"))?;
            Ok(CycNum::new(pa, pb))
        })
        .collect();
    let coeffs = coeffs?;
    if coeffs.len() != ORDER {
        return Err(format!("element {} has {} coefficients", e.name, e.coeffs.len()));
    }
    Ok(GroupAlgebraElement::from_coeffs(coeffs))
}

/// JSON export of the normalized arrow set (idempotents and arrows) with
/// exact coefficients, so a later run can replay the verification
/// without redoing the construction.
pub fn export_arrows(session: &Session) -> Result<String, String> {
    let pipeline = session.pipeline()?;
    let mut out = Vec::new();
    for i in 0..3 {
        out.push(element_to_json(&format!("e{i}"), &pipeline.normalized.idems[i]));
    }
    for a in 0..quiverpres::NUM_ARROWS {
        out.push(element_to_json(
            quiverpres::ARROW_NAMES[a],
            &pipeline.normalized.arrows[a],
        ));
    }
    serde_json::to_string_pretty(&out).map_err(|e| e.to_string())
}

/// Read an arrow set back from its JSON export.
pub fn import_arrows(json: &str) -> Result<ArrowSet, String> {
    let entries: Vec<ElementJson> = serde_json::from_str(json).map_err(|e| e.to_string())?;
    let find = |name: &str| -> Result<GroupAlgebraElement, String> {
        let e = entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| format!("missing element {name}"))?;
        element_from_json(e)
    };
    let idems = [find("e0")?, find("e1")?, find("e2")?];
    let mut arrows = Vec::new();
    for a in 0..quiverpres::NUM_ARROWS {
        arrows.push(find(quiverpres::ARROW_NAMES[a])?);
    }
    let arrows: [GroupAlgebraElement; quiverpres::NUM_ARROWS] =
        arrows.try_into().map_err(|_| "six arrows")?;
    Ok(ArrowSet { arrows, idems })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_partition_unique() {
        let report = check_degree_partition();
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn orthogonality_fault_injection() {
        // Corrupting one table entry must fail the check and name the
        // offending pair.
        let ctx = Context::new().unwrap();
        let mut bad = ctx.table.clone();
        bad.values[3][2] = CycNum::from_int(1); // true value is -1
        let report = check_orthogonality_of(&bad, &ctx.group);
        assert!(!report.passed());
        let first = report.first_failure().unwrap();
        // The first pair hit involves the perturbed row 3.
        assert_eq!(first.claim, "row pair (0,3)");
    }

    #[test]
    fn chartable_group_checks_pass() {
        let session = Session::new();
        for r in run_all(&session, "chartable", None) {
            assert!(r.passed(), "{}: {:?}", r.check_name, r.first_failure());
        }
    }

    #[test]
    fn only_filter_selects_module() {
        let session = Session::new();
        let reports = run_all(&session, "all", Some("isometry"));
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.module == "isometry"));
    }

    #[test]
    fn exports_are_deterministic() {
        let session = Session::new();
        let a = export_chartable(&session).unwrap();
        let b = export_chartable(&session).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("eta4"));
    }

    #[test]
    fn arrow_export_replays() {
        let session = Session::new();
        let json = export_arrows(&session).unwrap();
        let imported = import_arrows(&json).unwrap();
        let ctx = session.ctx().unwrap();
        let centers = session.centers().unwrap();
        // The imported set satisfies the displayed products without
        // re-running the construction.
        for (name, ok) in structure::normalized_product_checks(ctx, centers, &imported) {
            assert!(ok, "{name}");
        }
    }
}
