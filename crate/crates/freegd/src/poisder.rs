//! The free Poisson algebra with derivation PoisDer<X> = Pois<X_infinity>.
//!
//! Standard basis monomials are multisets of Lyndon-Shirshov words; the
//! bracket expands by bi-Leibniz into pairwise Lie brackets which are
//! normalized back to LS orientation, with signs absorbed into the
//! coefficients. The weight-(-1) subspace carries the SGD operations.

use crate::comder::DLetter;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::lyndon::{lie_nf, lie_nf_assoc, lie_expand, LSWord, LieTree};
use std::cmp::Ordering;
use std::fmt;

/// A standard-basis monomial: a nonempty multiset of LS words, stored
/// ascending in the LS-word order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoisMonomial {
    factors: Vec<LSWord>,
}

impl PoisMonomial {
    pub fn new(mut factors: Vec<LSWord>) -> Self {
        assert!(!factors.is_empty(), "monomials are nonempty");
        factors.sort();
        PoisMonomial { factors }
    }

    pub fn generator(gen: u32) -> Self {
        Self::new(vec![LSWord::letter(DLetter::plain(gen))])
    }

    pub fn factors(&self) -> &[LSWord] {
        &self.factors
    }

    /// Total degree: letters across all factors.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.degree()).sum()
    }

    pub fn merged(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self::new(factors)
    }

    /// The monomial of ComDer obtained by erasing all bracket structure:
    /// the multiset of every letter occurring in any factor.
    pub fn erased(&self) -> crate::comder::CDMonomial {
        let mut letters: Vec<DLetter> = Vec::new();
        for f in &self.factors {
            letters.extend_from_slice(f.word().letters());
        }
        crate::comder::CDMonomial::new(letters)
    }

    /// The comparison key of Sec. 4: monomials compare as elements of
    /// ComDer first (their erased letter multisets under the Sec. 2
    /// order). Ties are broken by how the letters are grouped into
    /// factors: first each factor's descending tuple of derivative orders
    /// >= 1 (descending list of tuples, a letter joining a factor extends
    /// its tuple and ranks it higher), then the counts of order-0 letters
    /// per factor with fewer-per-factor ranking higher, then the
    /// descending lists of d-involving and d-free Lie factors.
    pub(crate) fn lemma_key(&self) -> LemmaKey<'_> {
        let (l, r, m, j_idx) = self.erased().s_key();
        let mut d_grouping: Vec<Vec<u32>> = Vec::new();
        let mut zero_blocks: Vec<usize> = Vec::new();
        for f in &self.factors {
            let mut orders: Vec<u32> = f
                .word()
                .letters()
                .iter()
                .map(|x| x.order)
                .filter(|&r| r >= 1)
                .collect();
            orders.sort_unstable_by(|x, y| y.cmp(x));
            if !orders.is_empty() {
                d_grouping.push(orders);
            }
            let zeros = f.word().letters().iter().filter(|x| x.order == 0).count();
            if zeros > 0 {
                zero_blocks.push(zeros);
            }
        }
        d_grouping.sort_unstable_by(|x, y| y.cmp(x));
        zero_blocks.sort_unstable_by(|x, y| y.cmp(x));
        let mut a_words = Vec::new();
        let mut b_words = Vec::new();
        for f in &self.factors {
            if f.degree() >= 2 {
                if f.is_d_free() {
                    b_words.push(f);
                } else {
                    a_words.push(f);
                }
            }
        }
        a_words.reverse();
        b_words.reverse();
        (
            l,
            r,
            m,
            d_grouping,
            std::cmp::Reverse(zero_blocks),
            a_words,
            b_words,
            j_idx,
        )
    }
}

pub(crate) type LemmaKey<'a> = (
    Vec<u32>,
    Vec<u32>,
    Vec<u32>,
    Vec<Vec<u32>>,
    std::cmp::Reverse<Vec<usize>>,
    Vec<&'a LSWord>,
    Vec<&'a LSWord>,
    Vec<u32>,
);

impl Ord for PoisMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lemma_key().cmp(&other.lemma_key())
    }
}

/// The Sec. 4 comparison without the final index tie-break: the preorder
/// the triangularity lemma is stated for.
pub(crate) fn lemma_preorder_less(x: &PoisMonomial, y: &PoisMonomial) -> bool {
    let kx = x.lemma_key();
    let ky = y.lemma_key();
    (&kx.0, &kx.1, &kx.2, &kx.3, &kx.4, &kx.5, &kx.6)
        < (&ky.0, &ky.1, &ky.2, &ky.3, &ky.4, &ky.5, &ky.6)
}

impl PartialOrd for PoisMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PoisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// An element of PoisDer<X>.
pub type PoisPoly = LinComb<PoisMonomial>;

pub fn pois_gen(gen: u32) -> PoisPoly {
    PoisPoly::monomial(PoisMonomial::generator(gen))
}

/// Bilinear multiset merge of factors.
pub fn pois_mul(p: &PoisPoly, q: &PoisPoly) -> PoisPoly {
    p.mul_with(q, |a, b| a.merged(b))
}

/// Weight: each letter contributes its order minus one, each bracket of a
/// Lie factor adds one.
pub fn pois_weight(m: &PoisMonomial) -> i64 {
    m.factors.iter().map(|f| f.weight()).sum()
}

pub fn pois_homogeneous_weight(p: &PoisPoly) -> Option<i64> {
    let mut weights = p.iter().map(|(m, _)| pois_weight(m));
    let first = weights.next()?;
    weights.all(|w| w == first).then_some(first)
}

/// Monomial from the remaining factors of `m` (position `skip` removed)
/// together with the LS words of `extra`, one output term per word.
fn with_factor_replaced(
    m: &PoisMonomial,
    skip: usize,
    rest_of: Option<(&PoisMonomial, usize)>,
    extra: &LinComb<LSWord>,
    out: &mut PoisPoly,
    coeff: &crate::lincomb::Rat,
) {
    for (w, c) in extra.iter() {
        let mut factors: Vec<LSWord> = m
            .factors
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, f)| f.clone())
            .collect();
        if let Some((other, skip2)) = rest_of {
            factors.extend(
                other
                    .factors
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip2)
                    .map(|(_, f)| f.clone()),
            );
        }
        factors.push(w.clone());
        out.add_term(PoisMonomial::new(factors), coeff * c);
    }
}

/// The Poisson bracket, expanded by bi-Leibniz into pairwise brackets of
/// LS factors, each normalized back to the LS basis.
pub fn pois_bracket(p: &PoisPoly, q: &PoisPoly) -> PoisPoly {
    let mut out = PoisPoly::zero();
    for (a, ca) in p.iter() {
        for (b, cb) in q.iter() {
            let c = ca * cb;
            for (i, fa) in a.factors.iter().enumerate() {
                for (j, fb) in b.factors.iter().enumerate() {
                    let lie = lie_nf(&LieTree::bracket(fa.tree().clone(), fb.tree().clone()))
                        .expect("bracket of LS words is a Lie element");
                    if lie.is_zero() {
                        continue;
                    }
                    with_factor_replaced(a, i, Some((b, j)), &lie, &mut out, &c);
                }
            }
        }
    }
    out
}

/// The derivation: Leibniz over factors; inside a Lie factor, the sum over
/// letters with the order incremented, renormalized to LS orientation.
pub fn pois_derive(p: &PoisPoly) -> PoisPoly {
    let mut out = PoisPoly::zero();
    for (m, c) in p.iter() {
        for (i, f) in m.factors.iter().enumerate() {
            let derived = derive_ls(f);
            with_factor_replaced(m, i, None, &derived, &mut out, c);
        }
    }
    out
}

/// d of a single LS factor as an LS-basis combination.
fn derive_ls(f: &LSWord) -> LinComb<LSWord> {
    let mut total: LinComb<crate::lyndon::AWord> = LinComb::zero();
    let base = lie_expand(f.tree());
    for pos in 0..f.degree() {
        for (w, c) in base.iter() {
            let mut letters = w.letters().to_vec();
            letters[pos].order += 1;
            total.add_term(crate::lyndon::AWord::new(letters), c.clone());
        }
    }
    lie_nf_assoc(total).expect("derivative of a Lie element is a Lie element")
}

/// The SGD product a o b = a * d(b) on the weight-(-1) subspace.
pub fn sgd_circ(p: &PoisPoly, q: &PoisPoly) -> Result<PoisPoly> {
    require_weight_minus_one(p)?;
    require_weight_minus_one(q)?;
    Ok(pois_mul(p, &pois_derive(q)))
}

/// The SGD bracket [a, b] = {a, b} on the weight-(-1) subspace.
pub fn sgd_bracket(p: &PoisPoly, q: &PoisPoly) -> Result<PoisPoly> {
    require_weight_minus_one(p)?;
    require_weight_minus_one(q)?;
    Ok(pois_bracket(p, q))
}

fn require_weight_minus_one(p: &PoisPoly) -> Result<()> {
    if p.is_zero() || pois_homogeneous_weight(p) == Some(-1) {
        Ok(())
    } else {
        let mut ws: Vec<i64> = p.iter().map(|(m, _)| pois_weight(m)).collect();
        ws.sort();
        ws.dedup();
        Err(Error::Weight {
            expected: -1,
            found: ws
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(","),
        })
    }
}

/// All basis monomials with the given total degree and weight over
/// generators 1..=num_gens; derivative orders are finite because the
/// weight bounds the total order sum.
pub fn pois_enumerate(
    num_gens: u32,
    degree: u32,
    weight: i64,
    multilinear: bool,
) -> Vec<PoisMonomial> {
    assert!(num_gens >= 1 && degree >= 1);
    if multilinear && degree > num_gens {
        return Vec::new();
    }

    // factor pool: LS words of degree d and order sum R; a monomial with
    // n factors satisfies sum(R_f) = weight + n, so R <= weight + degree
    let max_order_sum = weight + degree as i64;
    if max_order_sum < 0 {
        return Vec::new();
    }
    let mut pool: Vec<LSWord> = Vec::new();
    for d in 1..=degree {
        for r in 0..=max_order_sum as u32 {
            pool.extend(crate::lyndon::ls_enumerate_with_order_sum(num_gens, d, r));
        }
    }
    pool.sort();

    let mut out = Vec::new();
    let mut acc: Vec<LSWord> = Vec::new();
    pick_factors(
        &pool,
        0,
        degree,
        weight,
        &mut acc,
        &mut |factors: &[LSWord]| {
            if multilinear {
                let mut seen = vec![false; num_gens as usize + 1];
                for f in factors {
                    for x in f.word().letters() {
                        if x.gen > degree || seen[x.gen as usize] {
                            return;
                        }
                        seen[x.gen as usize] = true;
                    }
                }
            }
            out.push(PoisMonomial::new(factors.to_vec()));
        },
    );
    out.sort();
    out
}

fn pick_factors(
    pool: &[LSWord],
    min_idx: usize,
    remaining_degree: u32,
    remaining_weight: i64,
    acc: &mut Vec<LSWord>,
    emit: &mut impl FnMut(&[LSWord]),
) {
    if remaining_degree == 0 {
        if remaining_weight == 0 && !acc.is_empty() {
            emit(acc);
        }
        return;
    }
    for idx in min_idx..pool.len() {
        let f = &pool[idx];
        if f.degree() as u32 > remaining_degree {
            continue;
        }
        let w = f.weight();
        // the most negative weight the rest can reach is -(remaining letters)
        let rest_degree = remaining_degree - f.degree() as u32;
        let rest_weight = remaining_weight - w;
        if rest_weight < -(rest_degree as i64) {
            continue;
        }
        acc.push(f.clone());
        pick_factors(pool, idx, rest_degree, rest_weight, acc, emit);
        acc.pop();
    }
}
