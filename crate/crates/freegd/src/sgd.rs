//! Normal forms of weight-(-1) Poisson monomials, the basis map psi into
//! the free algebra with two operations, the expansion tau2 back into
//! PoisDer<X>, and triangular reduction to the monomial basis N_psi.

use crate::comder::DLetter;
use crate::error::{Error, Result};
use crate::lincomb::{rat, LinComb, Rat};
use crate::lyndon::{LSWord, LieTree};
use crate::novikov::{phi_over_pool, MagmaTerm};
use crate::poisder::{
    pois_bracket, pois_derive, pois_enumerate, pois_homogeneous_weight, pois_mul, pois_weight,
    PoisMonomial, PoisPoly,
};
use std::collections::{HashMap, HashSet};
use std::fmt;

/// A term of the free algebra with two binary operations `o` and `[,]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Magma2Term {
    Gen(u32),
    Circ(Box<Magma2Term>, Box<Magma2Term>),
    Bracket(Box<Magma2Term>, Box<Magma2Term>),
}

impl Magma2Term {
    pub fn circ(l: Magma2Term, r: Magma2Term) -> Self {
        Magma2Term::Circ(Box::new(l), Box::new(r))
    }

    pub fn bracket(l: Magma2Term, r: Magma2Term) -> Self {
        Magma2Term::Bracket(Box::new(l), Box::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            Magma2Term::Gen(_) => 1,
            Magma2Term::Circ(l, r) | Magma2Term::Bracket(l, r) => l.degree() + r.degree(),
        }
    }

    fn flatten(&self, out: &mut Vec<u32>) {
        match self {
            Magma2Term::Gen(g) => out.push(*g),
            Magma2Term::Circ(l, r) | Magma2Term::Bracket(l, r) => {
                l.flatten(out);
                r.flatten(out);
            }
        }
    }
}

impl From<&MagmaTerm> for Magma2Term {
    fn from(t: &MagmaTerm) -> Self {
        match t {
            MagmaTerm::Gen(g) => Magma2Term::Gen(*g),
            MagmaTerm::Circ(l, r) => Magma2Term::circ((&**l).into(), (&**r).into()),
        }
    }
}

impl fmt::Display for Magma2Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magma2Term::Gen(g) => write!(f, "x{g}"),
            Magma2Term::Circ(l, r) => write!(f, "({l} o {r})"),
            Magma2Term::Bracket(l, r) => write!(f, "[{l}, {r}]"),
        }
    }
}

/// Normal form of a weight-(-1) Poisson monomial: the factors split into
/// plain letters, d-free Lie words, d-involving Lie words, and derived
/// letters, each block canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoisNF {
    /// Indices of order-0 letter factors, ascending.
    pub letters_plain: Vec<u32>,
    /// d-free Lie factors of degree >= 2, ascending.
    pub b_words: Vec<LSWord>,
    /// d-involving Lie factors of degree >= 2, descending.
    pub a_words: Vec<LSWord>,
    /// (index, order >= 1) of derived letter factors, descending by the
    /// letter order.
    pub letters_derived: Vec<(u32, u32)>,
    /// Sign relating the stored orientation to LS-canonical orientation;
    /// classification of a basis monomial is always +1.
    pub sign: i8,
}

/// Partition a weight-(-1) basis monomial into its normal form.
pub fn pnf_classify(m: &PoisMonomial) -> Result<PoisNF> {
    let w = pois_weight(m);
    if w != -1 {
        return Err(Error::Weight {
            expected: -1,
            found: w.to_string(),
        });
    }
    let mut nf = PoisNF {
        letters_plain: Vec::new(),
        b_words: Vec::new(),
        a_words: Vec::new(),
        letters_derived: Vec::new(),
        sign: 1,
    };
    for f in m.factors() {
        if f.degree() == 1 {
            let x = f.word().letters()[0];
            if x.order == 0 {
                nf.letters_plain.push(x.gen);
            } else {
                nf.letters_derived.push((x.gen, x.order));
            }
        } else if f.is_d_free() {
            nf.b_words.push(f.clone());
        } else {
            nf.a_words.push(f.clone());
        }
    }
    // factors arrive ascending; flip the blocks that are kept descending
    nf.a_words.reverse();
    nf.letters_derived
        .sort_by(|&(g1, r1), &(g2, r2)| (r2, g2).cmp(&(r1, g1)));
    Ok(nf)
}

impl PoisNF {
    pub fn monomial(&self) -> PoisMonomial {
        let mut factors: Vec<LSWord> = self
            .letters_plain
            .iter()
            .map(|&g| LSWord::letter(DLetter::plain(g)))
            .collect();
        factors.extend(self.b_words.iter().cloned());
        factors.extend(self.a_words.iter().cloned());
        factors.extend(
            self.letters_derived
                .iter()
                .map(|&(g, r)| LSWord::letter(DLetter::new(g, r))),
        );
        PoisMonomial::new(factors)
    }
}

/// `a < b` in the order of Sec. 4: the monomials compare as elements of
/// ComDer (erased letter multisets under the Sec. 2 order), with ties
/// broken by the grouping of letters into factors. Monomials differing
/// only in the indices of order->=2 letters tie; this is the preorder the
/// triangularity lemma is stated for.
pub fn pnf_less(a: &PoisNF, b: &PoisNF) -> bool {
    crate::poisder::lemma_preorder_less(&a.monomial(), &b.monomial())
}

/// Items of the working pool of `psi`: plain letters sit below d-free Lie
/// words, which sit below extended letters created by earlier steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Pool2Item {
    Plain(u32),
    BWord(LSWord),
    Ext {
        degree: usize,
        flat: Vec<u32>,
        term: Magma2Term,
    },
}

impl Pool2Item {
    fn ext(term: Magma2Term) -> Self {
        let mut flat = Vec::new();
        term.flatten(&mut flat);
        Pool2Item::Ext {
            degree: term.degree(),
            flat,
            term,
        }
    }

    fn into_term(self) -> Magma2Term {
        match self {
            Pool2Item::Plain(g) => Magma2Term::Gen(g),
            Pool2Item::BWord(w) => lie_tree_to_term(w.tree()),
            Pool2Item::Ext { term, .. } => term,
        }
    }
}

/// Realize a d-free bracketing as a two-operation term.
fn lie_tree_to_term(t: &LieTree) -> Magma2Term {
    match t {
        LieTree::Leaf(x) => {
            debug_assert_eq!(x.order, 0);
            Magma2Term::Gen(x.gen)
        }
        LieTree::Br(l, r) => Magma2Term::bracket(lie_tree_to_term(l), lie_tree_to_term(r)),
    }
}

/// The basis map psi on normal forms. A-words are processed greatest
/// first; an A-word of weight w absorbs the w+1 greatest pool items, its
/// letters (taken in descending order) each consume as many items as their
/// derivative order and are replaced by the resulting nests, and the
/// bracketing of the A-word is mirrored onto the nests. The remaining
/// items and the derived letters then go through the map phi of Sec. 2
/// over the extended alphabet.
pub fn psi(a: &PoisNF) -> Result<Magma2Term> {
    let mut pool: Vec<Pool2Item> = a
        .letters_plain
        .iter()
        .map(|&g| Pool2Item::Plain(g))
        .collect();
    pool.extend(a.b_words.iter().map(|w| Pool2Item::BWord(w.clone())));

    for aw in &a.a_words {
        let absorb = aw.weight() + 1;
        debug_assert!(absorb >= 1);
        let absorb = absorb as usize;
        if pool.len() < absorb {
            return Err(Error::Structure(format!(
                "A-word of weight {} needs {absorb} items, pool has {}",
                aw.weight(),
                pool.len()
            )));
        }
        pool.sort();
        let mut absorbed = pool.split_off(pool.len() - absorb);

        // letters of the A-word, by original position, sorted descending
        let letters = aw.word().letters();
        let mut ranked: Vec<usize> = (0..letters.len()).collect();
        ranked.sort_by(|&i, &j| letters[j].cmp(&letters[i]));

        // greatest letter first: each takes its block from the top
        let mut v_terms: Vec<Option<Magma2Term>> = vec![None; letters.len()];
        for &pos in &ranked {
            let p = letters[pos].order as usize;
            if absorbed.len() < p {
                return Err(Error::Structure(
                    "A-word letters request more items than absorbed".into(),
                ));
            }
            let block = absorbed.split_off(absorbed.len() - p);
            let mut acc = Magma2Term::Gen(letters[pos].gen);
            for item in block {
                acc = Magma2Term::circ(item.into_term(), acc);
            }
            v_terms[pos] = Some(acc);
        }
        if !absorbed.is_empty() {
            return Err(Error::Structure(
                "absorbed items left over after the A-word letters".into(),
            ));
        }

        let v_terms: Vec<Magma2Term> = v_terms.into_iter().map(Option::unwrap).collect();
        let mut next = 0;
        let ext = mirror_substitute(aw.tree(), &v_terms, &mut next);
        pool.push(Pool2Item::ext(ext));
    }

    let derived: Vec<(u32, u32)> = a
        .letters_derived
        .iter()
        .filter(|&&(_, r)| r >= 2)
        .copied()
        .collect();
    let primed: Vec<u32> = a
        .letters_derived
        .iter()
        .filter(|&&(_, r)| r == 1)
        .map(|&(g, _)| g)
        .collect();
    let item = phi_over_pool(
        &mut pool,
        &derived,
        &primed,
        |l, r| Pool2Item::ext(Magma2Term::circ(l.into_term(), r.into_term())),
        Pool2Item::Plain,
    )?;
    Ok(item.into_term())
}

/// Substitute the nests into the bracketing of the A-word, swapping the
/// children of every bracket (the orientation the paper's examples print).
fn mirror_substitute(t: &LieTree, v_terms: &[Magma2Term], next: &mut usize) -> Magma2Term {
    match t {
        LieTree::Leaf(_) => {
            let term = v_terms[*next].clone();
            *next += 1;
            term
        }
        LieTree::Br(l, r) => {
            let sl = mirror_substitute(l, v_terms, next);
            let sr = mirror_substitute(r, v_terms, next);
            Magma2Term::bracket(sr, sl)
        }
    }
}

/// The homomorphism tau: Magma2<X> -> PoisDer<X>_{-1}.
pub fn tau2(t: &Magma2Term) -> PoisPoly {
    match t {
        Magma2Term::Gen(g) => PoisPoly::monomial(PoisMonomial::generator(*g)),
        Magma2Term::Circ(l, r) => pois_mul(&tau2(l), &pois_derive(&tau2(r))),
        Magma2Term::Bracket(l, r) => pois_bracket(&tau2(l), &tau2(r)),
    }
}

/// Sign-normalized basis map: `s * psi(a)` where `s` is the coefficient of
/// the monomial itself in the expansion of `psi(a)`, required to be a unit
/// so that the normalized expansion is unitriangular with leading
/// coefficient exactly +1.
pub fn psi_hat(a: &PoisNF) -> Result<(Rat, Magma2Term)> {
    let term = psi(a)?;
    let expansion = tau2(&term);
    let s = expansion.coeff(&a.monomial());
    if s != rat(1) && s != rat(-1) {
        return Err(Error::Sign(s.to_string()));
    }
    Ok((s, term))
}

/// Triangular reducer with a memo table, mirroring the Novikov one.
#[derive(Default)]
pub struct SgdReducer {
    memo: HashMap<PoisMonomial, LinComb<Magma2Term>>,
    in_flight: HashSet<PoisMonomial>,
}

impl SgdReducer {
    pub fn new() -> Self {
        Self::default()
    }

    /// The unique combination `e` of basis terms with `tau2(e)` equal to
    /// the single monomial `m`.
    pub fn expr(&mut self, m: &PoisMonomial) -> Result<LinComb<Magma2Term>> {
        if let Some(hit) = self.memo.get(m) {
            return Ok(hit.clone());
        }
        if !self.in_flight.insert(m.clone()) {
            return Err(Error::Structure(format!(
                "reduction cycle at {m}: the monomial order is not decreasing"
            )));
        }
        let nf = pnf_classify(m)?;
        let (sign, term) = psi_hat(&nf)?;
        // s * tau2(psi) = m + strictly smaller tail
        let expansion = tau2(&term).scale(&sign);
        debug_assert_eq!(expansion.coeff(m), rat(1));
        let mut result = LinComb::term(term, sign);
        for (b, beta) in expansion.iter() {
            if b == m {
                continue;
            }
            let tail = self.expr(b)?;
            result.add_scaled(&(-beta.clone()), &tail);
        }
        self.in_flight.remove(m);
        self.memo.insert(m.clone(), result.clone());
        Ok(result)
    }

    /// Reduce a weight-(-1) homogeneous polynomial to the basis.
    pub fn reduce(&mut self, p: &PoisPoly) -> Result<LinComb<Magma2Term>> {
        if !p.is_zero() && pois_homogeneous_weight(p) != Some(-1) {
            let mut ws: Vec<i64> = p.iter().map(|(m, _)| pois_weight(m)).collect();
            ws.sort();
            ws.dedup();
            return Err(Error::Weight {
                expected: -1,
                found: ws
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
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

/// One-shot reduction (fresh memo table).
pub fn sgd_reduce(p: &PoisPoly) -> Result<LinComb<Magma2Term>> {
    SgdReducer::new().reduce(p)
}

/// The two SGD operations on basis terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Magma2Op {
    Circ,
    Bracket,
}

/// Product or bracket of two basis terms, expanded back into the basis.
pub fn sgd_multiply(a: &Magma2Term, b: &Magma2Term, op: Magma2Op) -> Result<LinComb<Magma2Term>> {
    let (ta, tb) = (tau2(a), tau2(b));
    let product = match op {
        Magma2Op::Circ => pois_mul(&ta, &pois_derive(&tb)),
        Magma2Op::Bracket => pois_bracket(&ta, &tb),
    };
    sgd_reduce(&product)
}

/// The monomial basis in a given degree: psi over every enumerated
/// weight-(-1) normal form, in the monomial order of the enumeration.
pub fn sgd_basis(num_gens: u32, degree: u32, multilinear: bool) -> Result<Vec<Magma2Term>> {
    pois_enumerate(num_gens, degree, -1, multilinear)
        .iter()
        .map(|m| psi(&pnf_classify(m)?))
        .collect()
}
