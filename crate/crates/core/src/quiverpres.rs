//! The abstract algebra presented by three vertex idempotents, six quiver
//! arrows and the defining relations, realized concretely on its
//! 24-monomial spanning set.
//!
//! Word reduction works left to right: the running value is always an
//! `O`-combination of spanning monomials and one letter is absorbed per
//! step through a product table `monomial x arrow`. The table itself is
//! derived mechanically from the defining relations, following the case
//! split: two-letter words collapse through the quadratic relations,
//! three-letter words through the cubic ones (or are spanning monomials,
//! or one of the three derived identities), and the four-letter cases
//! rewrite through the inverted quadratic relations. Well-definedness is
//! certified a posteriori by the full associativity scan and by the
//! isomorphism onto the group algebra, not by a confluence proof.

use crate::coeff::{CycNum, ResidueElem};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub const NUM_ARROWS: usize = 6;
pub const NUM_MONOMIALS: usize = 24;
pub const NUM_VERTICES: usize = 3;

pub const BETA: usize = 0;
pub const GAMMA: usize = 1;
pub const DELTA: usize = 2;
pub const ETA_A: usize = 3;
pub const LAMBDA: usize = 4;
pub const KAPPA: usize = 5;

pub const ARROW_NAMES: [&str; NUM_ARROWS] = ["beta", "gamma", "delta", "eta", "lambda", "kappa"];
pub const ARROW_SOURCE: [usize; NUM_ARROWS] = [0, 1, 1, 2, 2, 0];
pub const ARROW_TARGET: [usize; NUM_ARROWS] = [1, 0, 2, 1, 0, 2];

/// The quiver: three vertices and six arrows with `x = e_s x e_t`.
#[derive(Clone, Debug)]
pub struct QuiverSpec {
    pub vertices: [usize; NUM_VERTICES],
    /// `(arrow, source, target)` triples.
    pub arrows: [(usize, usize, usize); NUM_ARROWS],
}

pub fn quiver() -> QuiverSpec {
    QuiverSpec {
        vertices: [0, 1, 2],
        arrows: std::array::from_fn(|a| (a, ARROW_SOURCE[a], ARROW_TARGET[a])),
    }
}

/// The 24 spanning monomials in the frozen canonical order: vertex
/// idempotents, arrows, two-letter words, the six three-letter words
/// repeating an arrow, and the three triangle words.
/// Stored as `(source vertex, arrow word)`.
pub const SPANNING_WORDS: [(usize, &[usize]); NUM_MONOMIALS] = [
    (0, &[]),
    (1, &[]),
    (2, &[]),
    (0, &[BETA]),
    (1, &[GAMMA]),
    (1, &[DELTA]),
    (2, &[ETA_A]),
    (2, &[LAMBDA]),
    (0, &[KAPPA]),
    (0, &[BETA, GAMMA]),
    (1, &[GAMMA, BETA]),
    (1, &[DELTA, ETA_A]),
    (2, &[ETA_A, DELTA]),
    (2, &[LAMBDA, KAPPA]),
    (0, &[KAPPA, LAMBDA]),
    (0, &[BETA, GAMMA, BETA]),
    (1, &[GAMMA, BETA, GAMMA]),
    (1, &[DELTA, ETA_A, DELTA]),
    (2, &[ETA_A, DELTA, ETA_A]),
    (2, &[LAMBDA, KAPPA, LAMBDA]),
    (0, &[KAPPA, LAMBDA, KAPPA]),
    (0, &[BETA, DELTA, LAMBDA]),
    (1, &[DELTA, LAMBDA, BETA]),
    (2, &[LAMBDA, BETA, DELTA]),
];

pub const E0: usize = 0;
pub const E1: usize = 1;
pub const E2: usize = 2;
pub const M_BETA: usize = 3;
pub const M_GAMMA: usize = 4;
pub const M_DELTA: usize = 5;
pub const M_ETA: usize = 6;
pub const M_LAMBDA: usize = 7;
pub const M_KAPPA: usize = 8;
pub const M_BG: usize = 9;
pub const M_GB: usize = 10;
pub const M_DH: usize = 11;
pub const M_HD: usize = 12;
pub const M_LK: usize = 13;
pub const M_KL: usize = 14;
pub const M_BGB: usize = 15;
pub const M_GBG: usize = 16;
pub const M_DHD: usize = 17;
pub const M_HDH: usize = 18;
pub const M_LKL: usize = 19;
pub const M_KLK: usize = 20;
pub const M_BDL: usize = 21;
pub const M_DLB: usize = 22;
pub const M_LBD: usize = 23;

/// The six quadratic relations: each two-letter word on the left equals
/// `-2 * arrow + (repeated three-letter word)`.
pub const QUADRATIC_RELATIONS: [([usize; 2], [(i64, usize); 2]); 6] = [
    ([BETA, DELTA], [(-2, M_KAPPA), (1, M_KLK)]),
    ([ETA_A, GAMMA], [(-2, M_LAMBDA), (1, M_LKL)]),
    ([DELTA, LAMBDA], [(-2, M_GAMMA), (1, M_GBG)]),
    ([KAPPA, ETA_A], [(-2, M_BETA), (1, M_BGB)]),
    ([LAMBDA, BETA], [(-2, M_ETA), (1, M_HDH)]),
    ([GAMMA, KAPPA], [(-2, M_DELTA), (1, M_DHD)]),
];

/// The twelve cubic relations: `word = -4 * arrow + 2 * (repeated word)`.
pub const CUBIC_RELATIONS: [([usize; 3], [(i64, usize); 2]); 12] = [
    ([GAMMA, BETA, DELTA], [(-4, M_DELTA), (2, M_DHD)]),
    ([DELTA, ETA_A, GAMMA], [(-4, M_GAMMA), (2, M_GBG)]),
    ([LAMBDA, KAPPA, ETA_A], [(-4, M_ETA), (2, M_HDH)]),
    ([BETA, GAMMA, KAPPA], [(-4, M_KAPPA), (2, M_KLK)]),
    ([ETA_A, DELTA, LAMBDA], [(-4, M_LAMBDA), (2, M_LKL)]),
    ([KAPPA, LAMBDA, BETA], [(-4, M_BETA), (2, M_BGB)]),
    ([ETA_A, GAMMA, BETA], [(-4, M_ETA), (2, M_HDH)]),
    ([BETA, DELTA, ETA_A], [(-4, M_BETA), (2, M_BGB)]),
    ([DELTA, LAMBDA, KAPPA], [(-4, M_DELTA), (2, M_DHD)]),
    ([LAMBDA, BETA, GAMMA], [(-4, M_LAMBDA), (2, M_LKL)]),
    ([KAPPA, ETA_A, DELTA], [(-4, M_KAPPA), (2, M_KLK)]),
    ([GAMMA, KAPPA, LAMBDA], [(-4, M_GAMMA), (2, M_GBG)]),
];

/// The three quartic relations: `word = -8 * arrow + 4 * (repeated word)`.
pub const QUARTIC_RELATIONS: [([usize; 4], [(i64, usize); 2]); 3] = [
    ([BETA, DELTA, LAMBDA, BETA], [(-8, M_BETA), (4, M_BGB)]),
    ([DELTA, LAMBDA, BETA, DELTA], [(-8, M_DELTA), (4, M_DHD)]),
    ([LAMBDA, BETA, DELTA, LAMBDA], [(-8, M_LAMBDA), (4, M_LKL)]),
];

/// Identities derived from the quadratic relations: both sides expand to
/// the same formal word combination, certified by
/// [`verify_derived_identities`].
pub const DERIVED_IDENTITIES: [([usize; 3], usize); 3] = [
    ([KAPPA, ETA_A, GAMMA], M_BDL),
    ([ETA_A, GAMMA, KAPPA], M_LBD),
    ([GAMMA, KAPPA, ETA_A], M_DLB),
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("inadmissible word: target/source mismatch at letter {0}")]
    Inadmissible(usize),
    #[error("unknown letter name {0:?}")]
    UnknownName(String),
    #[error("empty word has no source vertex")]
    Empty,
}

/// A letter of a path word: a vertex idempotent or an arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    Vertex(usize),
    Arrow(usize),
}

/// Parse a `*`-separated word such as `"beta*delta*lambda"` or `"e0*beta"`.
pub fn parse_word(s: &str) -> Result<Vec<Letter>, WordError> {
    s.split('*')
        .map(|name| {
            let name = name.trim();
            if let Some(v) = ["e0", "e1", "e2"].iter().position(|n| *n == name) {
                return Ok(Letter::Vertex(v));
            }
            if let Some(a) = ARROW_NAMES.iter().position(|n| *n == name) {
                return Ok(Letter::Arrow(a));
            }
            Err(WordError::UnknownName(name.to_string()))
        })
        .collect()
}

pub fn monomial_name(m: usize) -> String {
    let (src, word) = SPANNING_WORDS[m];
    if word.is_empty() {
        return format!("e{src}");
    }
    word.iter().map(|&a| ARROW_NAMES[a]).collect::<Vec<_>>().join("*")
}

pub fn monomial_source(m: usize) -> usize {
    SPANNING_WORDS[m].0
}

pub fn monomial_target(m: usize) -> usize {
    let (src, word) = SPANNING_WORDS[m];
    word.last().map_or(src, |&a| ARROW_TARGET[a])
}

fn monomial_index(word: &[usize]) -> Option<usize> {
    SPANNING_WORDS.iter().position(|(_, w)| *w == word)
}

/// Element of the presented algebra: an exact coefficient for each of
/// the 24 spanning monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedElement {
    pub coeffs: Vec<CycNum>,
}

impl PresentedElement {
    pub fn zero() -> Self {
        PresentedElement { coeffs: vec![CycNum::zero(); NUM_MONOMIALS] }
    }

    pub fn basis(m: usize) -> Self {
        let mut e = Self::zero();
        e.coeffs[m] = CycNum::one();
        e
    }

    pub fn from_terms(terms: &[(i64, usize)]) -> Self {
        let mut e = Self::zero();
        for &(c, m) in terms {
            e.coeffs[m] = &e.coeffs[m] + &CycNum::from_int(c);
        }
        e
    }

    pub fn identity() -> Self {
        Self::from_terms(&[(1, E0), (1, E1), (1, E2)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        PresentedElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        PresentedElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        PresentedElement { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn all_in_o(&self) -> bool {
        self.coeffs.iter().all(|c| c.in_o())
    }

    pub fn reduce_mod2(&self) -> Result<Vec<ResidueElem>, crate::coeff::CoeffError> {
        self.coeffs.iter().map(|c| c.reduce_mod2()).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..NUM_MONOMIALS).filter(|&m| !self.coeffs[m].is_zero()).collect()
    }
}

impl fmt::Display for PresentedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .map(|m| format!("({})*{}", self.coeffs[m], monomial_name(m)))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Verify the three derived identities by pure formal rewriting: expand
/// the left word through the quadratic relation at its first two letters
/// and the right monomial through the quadratic relation inside it, and
/// compare the resulting formal word combinations letter for letter.
pub fn verify_derived_identities() -> Result<(), String> {
    type Formal = BTreeMap<Vec<usize>, i64>;
    let quad_rhs_words = |lhs: &[usize; 2]| -> Vec<(i64, Vec<usize>)> {
        let (_, rhs) = QUADRATIC_RELATIONS
            .iter()
            .find(|(w, _)| w == lhs)
            .expect("quadratic relation exists");
        rhs.iter().map(|&(c, m)| (c, SPANNING_WORDS[m].1.to_vec())).collect()
    };
    for (lhs, rhs_mono) in DERIVED_IDENTITIES {
        // Left route: substitute the quadratic relation for the first
        // two letters of the left word.
        let mut left: Formal = BTreeMap::new();
        for (c, mut w) in quad_rhs_words(&[lhs[0], lhs[1]]) {
            w.push(lhs[2]);
            *left.entry(w).or_insert(0) += c;
        }
        // Right route: the right monomial is x1 x2 x3 where x2 x3 is a
        // quadratic left-hand side; substitute there.
        let rhs_word = SPANNING_WORDS[rhs_mono].1;
        let mut right: Formal = BTreeMap::new();
        for (c, w) in quad_rhs_words(&[rhs_word[1], rhs_word[2]]) {
            let mut full = vec![rhs_word[0]];
            full.extend(w);
            *right.entry(full).or_insert(0) += c;
        }
        left.retain(|_, c| *c != 0);
        right.retain(|_, c| *c != 0);
        if left != right {
            return Err(format!(
                "derived identity for monomial {} fails formally",
                monomial_name(rhs_mono)
            ));
        }
    }
    Ok(())
}

/// The presented algebra with its product table and structure constants.
pub struct PresentedAlgebra {
    /// `table[m][a]`: the product (monomial m) * (arrow a), present iff
    /// source(a) = target(m).
    table: Vec<Vec<Option<PresentedElement>>>,
    /// `constants[s][t] = s * t` for spanning monomials `s`, `t`.
    pub constants: Vec<Vec<PresentedElement>>,
}

impl PresentedAlgebra {
    /// Build the product table by the reduction case split, then the
    /// full structure-constant tensor.
    pub fn build() -> Result<PresentedAlgebra, String> {
        verify_derived_identities()?;
        let mut table: Vec<Vec<Option<PresentedElement>>> =
            vec![vec![None; NUM_ARROWS]; NUM_MONOMIALS];

        let admissible = |m: usize, a: usize| monomial_target(m) == ARROW_SOURCE[a];

        // Reduce a three-letter word: a spanning monomial, a cubic
        // relation, or a derived identity.
        let reduce3 = |w: &[usize; 3]| -> Result<PresentedElement, String> {
            if let Some(m) = monomial_index(w) {
                return Ok(PresentedElement::basis(m));
            }
            if let Some((_, rhs)) = CUBIC_RELATIONS.iter().find(|(lhs, _)| lhs == w) {
                return Ok(PresentedElement::from_terms(rhs));
            }
            if let Some(&(_, m)) = DERIVED_IDENTITIES.iter().find(|(lhs, _)| lhs == w) {
                return Ok(PresentedElement::basis(m));
            }
            Err(format!("three-letter word {w:?} escapes the case split"))
        };

        // Idempotents and arrows: two-letter words are spanning
        // monomials or quadratic left-hand sides.
        for m in 0..NUM_MONOMIALS {
            let (_, word) = SPANNING_WORDS[m];
            if word.len() > 1 {
                continue;
            }
            for a in 0..NUM_ARROWS {
                if !admissible(m, a) {
                    continue;
                }
                let entry = if word.is_empty() {
                    PresentedElement::basis(M_BETA + a)
                } else {
                    let w2 = [word[0], a];
                    if let Some(idx) = monomial_index(&w2) {
                        PresentedElement::basis(idx)
                    } else {
                        let (_, rhs) = QUADRATIC_RELATIONS
                            .iter()
                            .find(|(lhs, _)| *lhs == w2)
                            .ok_or_else(|| {
                                format!("two-letter word {w2:?} escapes the case split")
                            })?;
                        PresentedElement::from_terms(rhs)
                    }
                };
                table[m][a] = Some(entry);
            }
        }

        // Two-letter monomials: three-letter words.
        for m in M_BG..=M_KL {
            let (_, word) = SPANNING_WORDS[m];
            for a in 0..NUM_ARROWS {
                if !admissible(m, a) {
                    continue;
                }
                table[m][a] = Some(reduce3(&[word[0], word[1], a])?);
            }
        }

        // Repeated three-letter monomials x y x: rewrite through the
        // inverted quadratic relation x y x = (quadratic word) + 2 x,
        // so (x y x) a = reduce3(quadratic word, a) + 2 (x a).
        for m in M_BGB..=M_KLK {
            let (_, word) = SPANNING_WORDS[m];
            let (quad_lhs, _) = QUADRATIC_RELATIONS
                .iter()
                .find(|(_, rhs)| rhs[1].1 == m)
                .ok_or_else(|| format!("no quadratic relation produces monomial {m}"))?;
            let x = word[0];
            for a in 0..NUM_ARROWS {
                if !admissible(m, a) {
                    continue;
                }
                let head = reduce3(&[quad_lhs[0], quad_lhs[1], a])?;
                let tail = table[M_BETA + x][a]
                    .clone()
                    .ok_or("arrow row must be built first")?;
                table[m][a] = Some(head.add(&tail.scale(&CycNum::from_int(2))));
            }
        }

        // Triangle monomials x1 x2 x3: the cycle-completing letter is a
        // quartic relation; the other letter re-associates through the
        // cubic relation for x2 x3 a and absorbs into already-built rows.
        for m in M_BDL..=M_LBD {
            let (_, word) = SPANNING_WORDS[m];
            for a in 0..NUM_ARROWS {
                if !admissible(m, a) {
                    continue;
                }
                let w4 = [word[0], word[1], word[2], a];
                if let Some((_, rhs)) = QUARTIC_RELATIONS.iter().find(|(lhs, _)| *lhs == w4) {
                    table[m][a] = Some(PresentedElement::from_terms(rhs));
                    continue;
                }
                let tail = [word[1], word[2], a];
                let (_, rhs) = CUBIC_RELATIONS
                    .iter()
                    .find(|(lhs, _)| *lhs == tail)
                    .ok_or_else(|| format!("tail {tail:?} of triangle product is not cubic"))?;
                // x1 * rhs, absorbed letter by letter through built rows.
                let mut acc = PresentedElement::zero();
                for &(c, mono) in rhs {
                    let mut cur = PresentedElement::basis(M_BETA + word[0]);
                    for &letter in SPANNING_WORDS[mono].1 {
                        cur = absorb(&table, &cur, letter)?;
                    }
                    acc = acc.add(&cur.scale(&CycNum::from_int(c)));
                }
                table[m][a] = Some(acc);
            }
        }

        // Structure constants by concatenation.
        let mut constants = vec![vec![PresentedElement::zero(); NUM_MONOMIALS]; NUM_MONOMIALS];
        for s in 0..NUM_MONOMIALS {
            for t in 0..NUM_MONOMIALS {
                if monomial_target(s) != monomial_source(t) {
                    continue; // orthogonal pieces multiply to zero
                }
                let mut cur = PresentedElement::basis(s);
                for &letter in SPANNING_WORDS[t].1 {
                    cur = absorb(&table, &cur, letter)?;
                }
                constants[s][t] = cur;
            }
        }

        Ok(PresentedAlgebra { table, constants })
    }

    /// Reduce an admissible path word to an `O`-combination of spanning
    /// monomials.
    pub fn reduce(&self, word: &[Letter]) -> Result<PresentedElement, WordError> {
        let mut src: Option<usize> = None;
        let mut cursor: Option<usize> = None;
        for (pos, letter) in word.iter().enumerate() {
            match *letter {
                Letter::Vertex(v) => {
                    if let Some(c) = cursor {
                        if c != v {
                            return Err(WordError::Inadmissible(pos));
                        }
                    }
                    cursor = Some(v);
                    src.get_or_insert(v);
                }
                Letter::Arrow(a) => {
                    if let Some(c) = cursor {
                        if c != ARROW_SOURCE[a] {
                            return Err(WordError::Inadmissible(pos));
                        }
                    }
                    cursor = Some(ARROW_TARGET[a]);
                    src.get_or_insert(ARROW_SOURCE[a]);
                }
            }
        }
        let Some(src) = src else {
            return Err(WordError::Empty);
        };
        let mut cur = PresentedElement::basis(src);
        for (pos, letter) in word.iter().enumerate() {
            if let Letter::Arrow(a) = *letter {
                cur = absorb(&self.table, &cur, a).map_err(|_| WordError::Inadmissible(pos))?;
            }
        }
        Ok(cur)
    }

    pub fn reduce_str(&self, s: &str) -> Result<PresentedElement, WordError> {
        self.reduce(&parse_word(s)?)
    }

    /// Product of two elements through the structure constants.
    pub fn mul(&self, x: &PresentedElement, y: &PresentedElement) -> PresentedElement {
        let mut out = PresentedElement::zero();
        for s in 0..NUM_MONOMIALS {
            if x.coeffs[s].is_zero() {
                continue;
            }
            for t in 0..NUM_MONOMIALS {
                if y.coeffs[t].is_zero() {
                    continue;
                }
                let row = &self.constants[s][t];
                if row.is_zero() {
                    continue;
                }
                let c = &x.coeffs[s] * &y.coeffs[t];
                out = out.add(&row.scale(&c));
            }
        }
        out
    }

    /// Full associativity scan over all basis triples; returns the first
    /// failing triple if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        for s in 0..NUM_MONOMIALS {
            for t in 0..NUM_MONOMIALS {
                let st = &self.constants[s][t];
                for u in 0..NUM_MONOMIALS {
                    let left = self.mul(st, &PresentedElement::basis(u));
                    let right = self.mul(&PresentedElement::basis(s), &self.constants[t][u]);
                    if left != right {
                        return Some((s, t, u));
                    }
                }
            }
        }
        None
    }

    /// All 21 product relations plus the six idempotent absorptions,
    /// each verified through `reduce`.
    pub fn relation_checks(&self) -> Vec<(String, bool)> {
        let mut out = Vec::new();
        for a in 0..NUM_ARROWS {
            let s = ARROW_SOURCE[a];
            let t = ARROW_TARGET[a];
            let arrow = PresentedElement::basis(M_BETA + a);
            let left = self
                .reduce(&[Letter::Vertex(s), Letter::Arrow(a)])
                .map(|e| e == arrow)
                .unwrap_or(false);
            let right = self
                .reduce(&[Letter::Arrow(a), Letter::Vertex(t)])
                .map(|e| e == arrow)
                .unwrap_or(false);
            out.push((format!("e{s}*{0} = {0} = {0}*e{t}", ARROW_NAMES[a]), left && right));
        }
        {
            let mut check_words = |lhs: &[usize], rhs: &[(i64, usize)]| {
                let word: Vec<Letter> = lhs.iter().map(|&a| Letter::Arrow(a)).collect();
                let reduced = self.reduce(&word).expect("relation words are admissible");
                let expect = PresentedElement::from_terms(rhs);
                let name = lhs.iter().map(|&a| ARROW_NAMES[a]).collect::<Vec<_>>().join("*");
                out.push((name, reduced == expect));
            };
            for (lhs, rhs) in &QUADRATIC_RELATIONS {
                check_words(lhs, rhs);
            }
            for (lhs, rhs) in &CUBIC_RELATIONS {
                check_words(lhs, rhs);
            }
            for (lhs, rhs) in &QUARTIC_RELATIONS {
                check_words(lhs, rhs);
            }
        }
        out
    }

    /// Sizes of the vertex-to-vertex pieces of the spanning set; these
    /// must reproduce the Cartan matrix.
    pub fn peirce_counts(&self) -> [[usize; 3]; 3] {
        let mut counts = [[0usize; 3]; 3];
        for m in 0..NUM_MONOMIALS {
            counts[monomial_source(m)][monomial_target(m)] += 1;
        }
        counts
    }

    /// Structure constants reduced into the residue field.
    pub fn mod2_constants(&self) -> Vec<Vec<Vec<ResidueElem>>> {
        self.constants
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.reduce_mod2().expect("structure constants lie in O"))
                    .collect()
            })
            .collect()
    }

    fn mod2_mul(
        &self,
        c2: &[Vec<Vec<ResidueElem>>],
        x: &[ResidueElem],
        y: &[ResidueElem],
    ) -> Vec<ResidueElem> {
        let mut out = vec![ResidueElem::ZERO; NUM_MONOMIALS];
        for s in 0..NUM_MONOMIALS {
            if x[s].is_zero() {
                continue;
            }
            for t in 0..NUM_MONOMIALS {
                if y[t].is_zero() {
                    continue;
                }
                let c = x[s] * y[t];
                for u in 0..NUM_MONOMIALS {
                    out[u] = out[u] + c * c2[s][t][u];
                }
            }
        }
        out
    }

    /// The residue-field form of the defining relations: the six
    /// quadratic relations lose their doubled term, the three
    /// alternating triple products vanish, and so does the quadrupled
    /// four-letter word.
    pub fn mod2_checks(&self) -> Vec<(String, bool)> {
        let c2 = self.mod2_constants();
        let basis2 = |m: usize| -> Vec<ResidueElem> {
            let mut v = vec![ResidueElem::ZERO; NUM_MONOMIALS];
            v[m] = ResidueElem::ONE;
            v
        };
        let word2 = |w: &[usize]| -> Vec<ResidueElem> {
            let mut cur = basis2(M_BETA + w[0]);
            for &a in &w[1..] {
                cur = self.mod2_mul(&c2, &cur, &basis2(M_BETA + a));
            }
            cur
        };
        let mut out = Vec::new();
        let pairs: [([usize; 2], usize); 6] = [
            ([BETA, DELTA], M_KLK),
            ([ETA_A, GAMMA], M_LKL),
            ([DELTA, LAMBDA], M_GBG),
            ([KAPPA, ETA_A], M_BGB),
            ([LAMBDA, BETA], M_HDH),
            ([GAMMA, KAPPA], M_DHD),
        ];
        for (lhs, rhs) in pairs {
            let name = format!(
                "{}*{} = {} (mod 2)",
                ARROW_NAMES[lhs[0]],
                ARROW_NAMES[lhs[1]],
                monomial_name(rhs)
            );
            out.push((name, word2(&lhs) == basis2(rhs)));
        }
        for w in [
            [GAMMA, BETA, DELTA],
            [DELTA, ETA_A, GAMMA],
            [LAMBDA, KAPPA, ETA_A],
        ] {
            let name = format!(
                "{}*{}*{} = 0 (mod 2)",
                ARROW_NAMES[w[0]], ARROW_NAMES[w[1]], ARROW_NAMES[w[2]]
            );
            out.push((name, word2(&w).iter().all(|c| c.is_zero())));
        }
        out.push((
            "beta*delta*lambda*beta = 0 (mod 2)".to_string(),
            word2(&[BETA, DELTA, LAMBDA, BETA]).iter().all(|c| c.is_zero()),
        ));
        out
    }
}

fn absorb(
    table: &[Vec<Option<PresentedElement>>],
    x: &PresentedElement,
    a: usize,
) -> Result<PresentedElement, String> {
    let mut out = PresentedElement::zero();
    for m in 0..NUM_MONOMIALS {
        if x.coeffs[m].is_zero() {
            continue;
        }
        let entry = table[m][a]
            .as_ref()
            .ok_or_else(|| format!("no product for monomial {m} and arrow {a}"))?;
        out = out.add(&entry.scale(&x.coeffs[m]));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spanning_set_shape() {
        assert_eq!(SPANNING_WORDS.len(), 24);
        assert_eq!(monomial_index(&[BETA, DELTA, LAMBDA]), Some(M_BDL));
        assert_eq!(monomial_index(&[KAPPA, ETA_A]), None);
        // Every spanning word is an admissible path.
        for m in 0..NUM_MONOMIALS {
            let (src, word) = SPANNING_WORDS[m];
            let mut v = src;
            for &a in word {
                assert_eq!(ARROW_SOURCE[a], v, "monomial {m}");
                v = ARROW_TARGET[a];
            }
        }
        // Both sides of every quadratic relation live in the same piece.
        for (lhs, rhs) in &QUADRATIC_RELATIONS {
            let src = ARROW_SOURCE[lhs[0]];
            let tgt = ARROW_TARGET[lhs[1]];
            for &(_, m) in rhs {
                assert_eq!(monomial_source(m), src);
                assert_eq!(monomial_target(m), tgt);
            }
        }
    }

    #[test]
    fn derived_identities_hold_formally() {
        verify_derived_identities().unwrap();
    }

    #[test]
    fn reduction_examples() {
        let alg = PresentedAlgebra::build().unwrap();
        // A cubic relation, read back through reduce.
        let r = alg.reduce_str("gamma*beta*delta").unwrap();
        assert_eq!(r, PresentedElement::from_terms(&[(-4, M_DELTA), (2, M_DHD)]));
        // Idempotent absorption.
        let r = alg.reduce_str("e0*beta").unwrap();
        assert_eq!(r, PresentedElement::basis(M_BETA));
        // The four-letter alternating word.
        let r = alg.reduce_str("beta*gamma*beta*gamma").unwrap();
        assert_eq!(r, PresentedElement::from_terms(&[(2, M_BG), (1, M_BDL)]));
        // Inadmissible words are rejected.
        assert_eq!(alg.reduce_str("kappa*beta"), Err(WordError::Inadmissible(1)));
        assert_eq!(alg.reduce_str("e0*gamma"), Err(WordError::Inadmissible(1)));
        // Reduction is the identity on spanning monomials.
        for m in 0..NUM_MONOMIALS {
            let (src, word) = SPANNING_WORDS[m];
            let mut letters = vec![Letter::Vertex(src)];
            letters.extend(word.iter().map(|&a| Letter::Arrow(a)));
            assert_eq!(alg.reduce(&letters).unwrap(), PresentedElement::basis(m));
        }
    }

    #[test]
    fn structure_constant_examples() {
        let alg = PresentedAlgebra::build().unwrap();
        assert_eq!(alg.constants[E0][E0], PresentedElement::basis(E0));
        assert!(alg.constants[E0][E1].is_zero());
        assert_eq!(
            alg.constants[M_BETA][M_DELTA],
            PresentedElement::from_terms(&[(-2, M_KAPPA), (1, M_KLK)])
        );
        assert_eq!(
            alg.constants[M_BDL][M_BETA],
            PresentedElement::from_terms(&[(-8, M_BETA), (4, M_BGB)])
        );
        // The identity element really is the identity.
        let one = PresentedElement::identity();
        for m in 0..NUM_MONOMIALS {
            let b = PresentedElement::basis(m);
            assert_eq!(alg.mul(&one, &b), b);
            assert_eq!(alg.mul(&b, &one), b);
        }
        // All structure constants are integers in O.
        for row in &alg.constants {
            for e in row {
                assert!(e.all_in_o());
            }
        }
    }

    #[test]
    fn relations_hold() {
        let alg = PresentedAlgebra::build().unwrap();
        for (name, ok) in alg.relation_checks() {
            assert!(ok, "relation {name}");
        }
    }

    #[test]
    fn associativity_full_scan() {
        let alg = PresentedAlgebra::build().unwrap();
        assert_eq!(alg.associativity_failure(), None);
    }

    #[test]
    fn peirce_matches_cartan() {
        let alg = PresentedAlgebra::build().unwrap();
        let counts = alg.peirce_counts();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(counts[i][j] as i64, crate::chartab::CARTAN_MATRIX[i][j]);
            }
        }
        // The 0-0 corner: the four expected monomials.
        let corner: Vec<usize> = (0..NUM_MONOMIALS)
            .filter(|&m| monomial_source(m) == 0 && monomial_target(m) == 0)
            .collect();
        assert_eq!(corner, vec![E0, M_BG, M_KL, M_BDL]);
    }

    #[test]
    fn mod2_relations() {
        let alg = PresentedAlgebra::build().unwrap();
        for (name, ok) in alg.mod2_checks() {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn vertex_idempotents_complete() {
        let alg = PresentedAlgebra::build().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let p = alg.mul(&PresentedElement::basis(i), &PresentedElement::basis(j));
                if i == j {
                    assert_eq!(p, PresentedElement::basis(i));
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }
}
