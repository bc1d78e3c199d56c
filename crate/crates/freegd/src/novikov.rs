//! Normal forms of weight-(-1) monomials, the basis map phi into the free
//! magma, the expansion tau back into ComDer<X>, and triangular reduction
//! of arbitrary weight-(-1) elements to the monomial basis N_phi.

use crate::comder::{
    cd_derive, cd_enumerate, cd_homogeneous_weight, cd_mul, cd_weight, CDMonomial, CDPoly, DLetter,
};
use crate::error::{Error, Result};
use crate::lincomb::{rat, LinComb};
use std::collections::HashMap;
use std::fmt;

/// A term of the free magma with one binary operation `o`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MagmaTerm {
    Gen(u32),
    Circ(Box<MagmaTerm>, Box<MagmaTerm>),
}

impl MagmaTerm {
    pub fn circ(left: MagmaTerm, right: MagmaTerm) -> Self {
        MagmaTerm::Circ(Box::new(left), Box::new(right))
    }

    /// Number of generator leaves.
    pub fn degree(&self) -> usize {
        match self {
            MagmaTerm::Gen(_) => 1,
            MagmaTerm::Circ(l, r) => l.degree() + r.degree(),
        }
    }

    /// Generator indices, left to right.
    pub fn flatten(&self, out: &mut Vec<u32>) {
        match self {
            MagmaTerm::Gen(g) => out.push(*g),
            MagmaTerm::Circ(l, r) => {
                l.flatten(out);
                r.flatten(out);
            }
        }
    }
}

impl fmt::Display for MagmaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MagmaTerm::Gen(g) => write!(f, "x{g}"),
            MagmaTerm::Circ(l, r) => write!(f, "({l} o {r})"),
        }
    }
}

/// Normal form of a weight-(-1) monomial:
/// plain letters, then letters of order >= 2, then primed letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NovNF {
    /// Indices of the underived letters, ascending.
    pub plain: Vec<u32>,
    /// (index, order) of the letters of order >= 2, descending by the
    /// letter order (order first, then index).
    pub derived: Vec<(u32, u32)>,
    /// Indices of the order-1 letters, descending.
    pub primed: Vec<u32>,
}

impl NovNF {
    pub fn monomial(&self) -> CDMonomial {
        let mut letters: Vec<DLetter> = self.plain.iter().map(|&g| DLetter::plain(g)).collect();
        letters.extend(self.derived.iter().map(|&(g, r)| DLetter::new(g, r)));
        letters.extend(self.primed.iter().map(|&g| DLetter::new(g, 1)));
        CDMonomial::new(letters)
    }
}

/// Partition a weight-(-1) monomial into its normal form.
///
/// The count identity |plain| = sum(orders) - n + 1 holds automatically
/// for weight-(-1) input; n = 0 (no letters of order >= 2) is allowed.
pub fn nf_classify(m: &CDMonomial) -> Result<NovNF> {
    let w = cd_weight(m);
    if w != -1 {
        return Err(Error::Weight {
            expected: -1,
            found: w.to_string(),
        });
    }
    let mut plain = Vec::new();
    let mut derived = Vec::new();
    let mut primed = Vec::new();
    for letter in m.letters() {
        match letter.order {
            0 => plain.push(letter.gen),
            1 => primed.push(letter.gen),
            r => derived.push((letter.gen, r)),
        }
    }
    // input letters come sorted ascending; flip the blocks displayed descending
    primed.reverse();
    derived.sort_by(|&(g1, r1), &(g2, r2)| (r2, g2).cmp(&(r1, g1)));
    Ok(NovNF {
        plain,
        derived,
        primed,
    })
}

/// `S(a) < S(b)` for normal forms, comparing the tuples L, R, M
/// lexicographically with a proper prefix counting as smaller.
pub fn nf_less(a: &NovNF, b: &NovNF) -> bool {
    a.monomial().s_less(&b.monomial())
}

/// An item of the working pool of `phi`: a generator, or an extended
/// letter created by an earlier step. Extended letters are greater than
/// every generator; among themselves they compare by generator degree,
/// then by the flattened generator sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum PoolItem {
    Gen(u32),
    Ext { degree: usize, flat: Vec<u32>, term: MagmaTerm },
}

impl PoolItem {
    fn ext(term: MagmaTerm) -> Self {
        let mut flat = Vec::new();
        term.flatten(&mut flat);
        PoolItem::Ext {
            degree: term.degree(),
            flat,
            term,
        }
    }

    fn into_term(self) -> MagmaTerm {
        match self {
            PoolItem::Gen(g) => MagmaTerm::Gen(g),
            PoolItem::Ext { term, .. } => term,
        }
    }
}

/// Shared builder used by `phi` here and by the Poisson basis map: given a
/// sorted pool of weight-(-1) items, consume the letters of order >= 2
/// greatest first (each of order r nests the r greatest items around its
/// base generator, greatest outermost), then apply the order-1 letters by
/// right multiplication, greatest first.
pub(crate) fn phi_over_pool<T, F, G>(
    pool: &mut Vec<T>,
    derived: &[(u32, u32)],
    primed: &[u32],
    circ: F,
    gen: G,
) -> Result<T>
where
    T: Ord,
    F: Fn(T, T) -> T,
    G: Fn(u32) -> T,
{
    for &(g, r) in derived {
        if pool.len() < r as usize {
            return Err(Error::Structure(format!(
                "letter of order {r} needs {r} items, pool has {}",
                pool.len()
            )));
        }
        pool.sort();
        let consumed = pool.split_off(pool.len() - r as usize);
        let mut acc = gen(g);
        for item in consumed {
            acc = circ(item, acc);
        }
        pool.push(acc);
    }
    pool.sort();
    if pool.len() != 1 {
        return Err(Error::Structure(format!(
            "pool should hold exactly one item after the derived letters, has {}",
            pool.len()
        )));
    }
    let mut acc = pool.pop().unwrap();
    for &k in primed {
        acc = circ(acc, gen(k));
    }
    Ok(acc)
}

/// The basis map phi on normal forms.
pub fn phi(a: &NovNF) -> MagmaTerm {
    let mut pool: Vec<PoolItem> = a.plain.iter().map(|&g| PoolItem::Gen(g)).collect();
    phi_over_pool(
        &mut pool,
        &a.derived,
        &a.primed,
        |l, r| PoolItem::ext(MagmaTerm::circ(l.into_term(), r.into_term())),
        PoolItem::Gen,
    )
    .expect("normal forms never exhaust the pool")
    .into_term()
}

/// The homomorphism tau: Magma<X> -> ComDer<X>_{-1}; leaves map to
/// generators and nodes to the Novikov product.
pub fn tau_nov(t: &MagmaTerm) -> CDPoly {
    match t {
        MagmaTerm::Gen(g) => CDPoly::monomial(CDMonomial::generator(*g)),
        MagmaTerm::Circ(l, r) => {
            let lv = tau_nov(l);
            let rv = tau_nov(r);
            cd_mul(&lv, &cd_derive(&rv))
        }
    }
}

/// Triangular reducer with a memo table: results are independent of call
/// order, so the cache behaves as a pure function of the monomial.
#[derive(Default)]
pub struct NovReducer {
    memo: HashMap<CDMonomial, LinComb<MagmaTerm>>,
}

impl NovReducer {
    pub fn new() -> Self {
        Self::default()
    }

    /// The unique combination `e` of basis terms with `tau(e)` equal to the
    /// single monomial `m`. Follows the triangular scheme: peel phi of the
    /// normal form, then recurse into the strictly smaller tail.
    pub fn expr(&mut self, m: &CDMonomial) -> Result<LinComb<MagmaTerm>> {
        if let Some(hit) = self.memo.get(m) {
            return Ok(hit.clone());
        }
        let nf = nf_classify(m)?;
        let term = phi(&nf);
        let expansion = tau_nov(&term);
        debug_assert_eq!(expansion.coeff(m), rat(1));
        let mut result = LinComb::monomial(term);
        for (b, beta) in expansion.iter() {
            if b == m {
                continue;
            }
            let tail = self.expr(b)?;
            result.add_scaled(&(-beta.clone()), &tail);
        }
        self.memo.insert(m.clone(), result.clone());
        Ok(result)
    }

    /// Reduce a weight-(-1) homogeneous polynomial to the basis.
    pub fn reduce(&mut self, p: &CDPoly) -> Result<LinComb<MagmaTerm>> {
        if !p.is_zero() && cd_homogeneous_weight(p) != Some(-1) {
            return Err(Error::Weight {
                expected: -1,
                found: describe_weights(p),
            });
        }
        let mut out = LinComb::zero();
        for (m, c) in p.iter() {
            let e = self.expr(m)?;
            out.add_scaled(c, &e);
        }
        Ok(out)
    }
}

fn describe_weights(p: &CDPoly) -> String {
    let mut ws: Vec<i64> = p.iter().map(|(m, _)| cd_weight(m)).collect();
    ws.sort();
    ws.dedup();
    ws.iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One-shot reduction (fresh memo table).
pub fn nov_reduce(p: &CDPoly) -> Result<LinComb<MagmaTerm>> {
    NovReducer::new().reduce(p)
}

/// Product of two basis terms, expanded back into the basis.
pub fn nov_multiply(a: &MagmaTerm, b: &MagmaTerm) -> Result<LinComb<MagmaTerm>> {
    let product = cd_mul(&tau_nov(a), &cd_derive(&tau_nov(b)));
    nov_reduce(&product)
}

/// The monomial basis in a given degree: phi over every enumerated
/// weight-(-1) normal form, in the monomial order of the enumeration.
pub fn nov_basis(num_gens: u32, degree: u32, multilinear: bool) -> Vec<MagmaTerm> {
    cd_enumerate(num_gens, degree, -1, multilinear)
        .iter()
        .map(|m| phi(&nf_classify(m).expect("enumeration yields weight -1")))
        .collect()
}
