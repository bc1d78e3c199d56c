//! Associative and nonassociative Lyndon-Shirshov words over the graded
//! alphabet X_infinity, their canonical bracketing, and normalization of
//! arbitrary Lie expressions to the LS-word basis of the free Lie algebra.

use crate::comder::DLetter;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use std::cmp::Ordering;
use std::fmt;

/// A nonempty associative word over X_infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AWord(pub Vec<DLetter>);

impl AWord {
    pub fn new(letters: Vec<DLetter>) -> Self {
        assert!(!letters.is_empty(), "associative words are nonempty");
        AWord(letters)
    }

    pub fn letters(&self) -> &[DLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `u < v` in the word order: letters are compared from the left, and a
/// proper prefix is greater than the whole word (the empty word, passed as
/// an empty slice, is greatest of all).
pub fn word_less(u: &[DLetter], v: &[DLetter]) -> bool {
    word_cmp(u, v) == Ordering::Less
}

pub(crate) fn word_cmp(u: &[DLetter], v: &[DLetter]) -> Ordering {
    for (a, b) in u.iter().zip(v.iter()) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    // equal on the common prefix: the longer word is smaller
    v.len().cmp(&u.len())
}

impl Ord for AWord {
    fn cmp(&self, other: &Self) -> Ordering {
        word_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for AWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A word is an associative Lyndon-Shirshov word when it is strictly
/// greater than every proper rotation.
pub fn is_ls(w: &AWord) -> bool {
    let letters = w.letters();
    (1..letters.len()).all(|cut| {
        let mut rotation = letters[cut..].to_vec();
        rotation.extend_from_slice(&letters[..cut]);
        word_less(&rotation, letters)
    })
}

/// A binary bracketing over letters of X_infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LieTree {
    Leaf(DLetter),
    Br(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn bracket(l: LieTree, r: LieTree) -> Self {
        LieTree::Br(Box::new(l), Box::new(r))
    }

    pub fn leaves(&self, out: &mut Vec<DLetter>) {
        match self {
            LieTree::Leaf(x) => out.push(*x),
            LieTree::Br(l, r) => {
                l.leaves(out);
                r.leaves(out);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            LieTree::Leaf(_) => 1,
            LieTree::Br(l, r) => l.degree() + r.degree(),
        }
    }
}

impl fmt::Display for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTree::Leaf(x) => write!(f, "{x}"),
            LieTree::Br(l, r) => write!(f, "{{{l}, {r}}}"),
        }
    }
}

/// A nonassociative Lyndon-Shirshov word: an associative LS word together
/// with its unique admissible bracketing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LSWord {
    word: AWord,
    tree: LieTree,
}

impl LSWord {
    pub fn word(&self) -> &AWord {
        &self.word
    }

    pub fn tree(&self) -> &LieTree {
        &self.tree
    }

    pub fn letter(x: DLetter) -> Self {
        LSWord {
            word: AWord::new(vec![x]),
            tree: LieTree::Leaf(x),
        }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// Total derivative order of the letters.
    pub fn order_sum(&self) -> u32 {
        self.word.letters().iter().map(|x| x.order).sum()
    }

    /// True when no letter carries a derivative.
    pub fn is_d_free(&self) -> bool {
        self.word.letters().iter().all(|x| x.order == 0)
    }

    /// Weight under the Poisson weight function: order sum minus one.
    pub fn weight(&self) -> i64 {
        self.order_sum() as i64 - 1
    }

    /// Comparison class: d-free words of degree >= 2 sit below single
    /// letters, which sit below d-involving words of degree >= 2.
    fn class(&self) -> u8 {
        if self.degree() == 1 {
            1
        } else if self.is_d_free() {
            0
        } else {
            2
        }
    }
}

/// Order on LS words: comparison class, then degree, then the associative
/// words letter by letter (equal length makes this the word order).
impl Ord for LSWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.class(), self.degree(), self.word.letters())
            .cmp(&(other.class(), other.degree(), other.word.letters()))
    }
}

impl PartialOrd for LSWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LSWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tree)
    }
}

/// `A < B` in the LS-word order.
pub fn ls_less(a: &LSWord, b: &LSWord) -> bool {
    a < b
}

/// The unique bracketing of an associative LS word, by standard
/// factorization: split before the longest proper LS suffix, recursively.
pub fn ls_bracket(w: &AWord) -> Result<LSWord> {
    if !is_ls(w) {
        return Err(Error::NotLyndonShirshov(w.to_string()));
    }
    Ok(LSWord {
        word: w.clone(),
        tree: bracket_tree(w.letters()),
    })
}

fn bracket_tree(letters: &[DLetter]) -> LieTree {
    if letters.len() == 1 {
        return LieTree::Leaf(letters[0]);
    }
    for cut in 1..letters.len() {
        let suffix = AWord::new(letters[cut..].to_vec());
        if is_ls(&suffix) {
            return LieTree::bracket(bracket_tree(&letters[..cut]), bracket_tree(&letters[cut..]));
        }
    }
    unreachable!("every LS word of length >= 2 has a proper LS suffix");
}

/// Definition-3 validator, used as the oracle for `ls_bracket`.
pub fn satisfies_ls_conditions(w: &LSWord) -> bool {
    fn assoc(t: &LieTree) -> AWord {
        let mut ls = Vec::new();
        t.leaves(&mut ls);
        AWord::new(ls)
    }
    fn check(t: &LieTree) -> bool {
        match t {
            LieTree::Leaf(_) => true,
            LieTree::Br(l, r) => {
                let (u1, u2) = (assoc(l), assoc(r));
                // (LS1)
                let mut whole = u1.letters().to_vec();
                whole.extend_from_slice(u2.letters());
                if !is_ls(&AWord::new(whole)) {
                    return false;
                }
                // (LS2)
                if !(check(l) && check(r) && word_less(u2.letters(), u1.letters())) {
                    return false;
                }
                // (LS3)
                if let LieTree::Br(_, l_right) = &**l {
                    let u12 = assoc(l_right);
                    if word_less(u2.letters(), u12.letters()) {
                        return false;
                    }
                }
                true
            }
        }
    }
    assoc(&w.tree) == w.word && check(&w.tree)
}

/// Recursive commutator expansion of a bracketing into noncommutative
/// words: [p, q] -> pq - qp.
pub fn lie_expand(t: &LieTree) -> LinComb<AWord> {
    match t {
        LieTree::Leaf(x) => LinComb::monomial(AWord::new(vec![*x])),
        LieTree::Br(l, r) => {
            let lv = lie_expand(l);
            let rv = lie_expand(r);
            let concat = |a: &AWord, b: &AWord| {
                let mut letters = a.letters().to_vec();
                letters.extend_from_slice(b.letters());
                AWord::new(letters)
            };
            lv.mul_with(&rv, concat).sub(&rv.mul_with(&lv, concat))
        }
    }
}

/// Normalizes an associative expansion of a Lie element to the LS basis by
/// peeling the greatest word, which must be LS.
pub fn lie_nf_assoc(mut p: LinComb<AWord>) -> Result<LinComb<LSWord>> {
    let mut out = LinComb::zero();
    while let Some((w, c)) = p.leading() {
        let (w, c) = (w.clone(), c.clone());
        if !is_ls(&w) {
            return Err(Error::NotLieElement(w.to_string()));
        }
        let ls = ls_bracket(&w)?;
        p.add_scaled(&(-c.clone()), &lie_expand(ls.tree()));
        out.add_term(ls, c);
    }
    Ok(out)
}

/// The unique LS-basis combination equal to a bracket tree.
pub fn lie_nf(t: &LieTree) -> Result<LinComb<LSWord>> {
    lie_nf_assoc(lie_expand(t))
}

/// All LS words of the given degree over the truncated alphabet
/// {x_i^(r) : i <= max_gen, r <= max_order}, sorted.
pub fn ls_enumerate(max_gen: u32, max_order: u32, degree: u32) -> Vec<LSWord> {
    assert!(max_gen >= 1 && degree >= 1);
    let mut out = Vec::new();
    let mut acc: Vec<DLetter> = Vec::new();
    enumerate_words(&mut acc, max_gen, max_order, degree, &mut |letters| {
        let w = AWord::new(letters.to_vec());
        if is_ls(&w) {
            out.push(ls_bracket(&w).expect("just checked"));
        }
    });
    out.sort();
    out
}

fn enumerate_words(
    acc: &mut Vec<DLetter>,
    max_gen: u32,
    max_order: u32,
    remaining: u32,
    emit: &mut impl FnMut(&[DLetter]),
) {
    if remaining == 0 {
        emit(acc);
        return;
    }
    for order in 0..=max_order {
        for gen in 1..=max_gen {
            acc.push(DLetter::new(gen, order));
            enumerate_words(acc, max_gen, max_order, remaining - 1, emit);
            acc.pop();
        }
    }
}

/// All LS words with the given degree and exact total derivative order,
/// over generators 1..=max_gen. Used by the Poisson enumeration, where the
/// weight constraint bounds the order sum.
pub(crate) fn ls_enumerate_with_order_sum(max_gen: u32, degree: u32, order_sum: u32) -> Vec<LSWord> {
    let mut out = Vec::new();
    let mut acc: Vec<DLetter> = Vec::new();
    enumerate_words_budget(&mut acc, max_gen, degree, order_sum, &mut |letters| {
        let w = AWord::new(letters.to_vec());
        if is_ls(&w) {
            out.push(ls_bracket(&w).expect("just checked"));
        }
    });
    out.sort();
    out
}

fn enumerate_words_budget(
    acc: &mut Vec<DLetter>,
    max_gen: u32,
    remaining: u32,
    order_budget: u32,
    emit: &mut impl FnMut(&[DLetter]),
) {
    if remaining == 0 {
        if order_budget == 0 {
            emit(acc);
        }
        return;
    }
    for order in 0..=order_budget {
        for gen in 1..=max_gen {
            acc.push(DLetter::new(gen, order));
            enumerate_words_budget(acc, max_gen, remaining - 1, order_budget - order, emit);
            acc.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{lc_rank, rat};
    use proptest::prelude::*;

    fn l(gen: u32, order: u32) -> DLetter {
        DLetter::new(gen, order)
    }

    fn word(ls: &[(u32, u32)]) -> AWord {
        AWord::new(ls.iter().map(|&(g, r)| l(g, r)).collect())
    }

    #[test]
    fn word_order_examples() {
        // every nonempty word is smaller than the empty word
        assert!(word_less(word(&[(1, 0)]).letters(), &[]));
        // ab < a when a > b: a proper extension is smaller than its prefix
        let a = l(2, 0);
        let b = l(1, 0);
        assert!(word_less(&[a, b], &[a]));
        // first letters decide: x1' x2'' < x2'' x1'
        assert!(word_less(
            word(&[(1, 1), (2, 2)]).letters(),
            word(&[(2, 2), (1, 1)]).letters()
        ));
    }

    #[test]
    fn is_ls_examples() {
        // aabac with a > b > c, realized as a=x3, b=x2, c=x1
        let aabac = word(&[(3, 0), (3, 0), (2, 0), (3, 0), (1, 0)]);
        assert!(is_ls(&aabac));
        assert!(is_ls(&word(&[(1, 0)])));
        assert!(!is_ls(&word(&[(1, 1), (2, 2)])));
        assert!(is_ls(&word(&[(2, 2), (1, 1)])));
    }

    #[test]
    fn bracket_examples() {
        // ba with b > a
        let ba = ls_bracket(&word(&[(2, 0), (1, 0)])).unwrap();
        assert_eq!(
            ba.tree(),
            &LieTree::bracket(LieTree::Leaf(l(2, 0)), LieTree::Leaf(l(1, 0)))
        );
        let w = ls_bracket(&word(&[(2, 2), (1, 1)])).unwrap();
        assert_eq!(
            w.tree(),
            &LieTree::bracket(LieTree::Leaf(l(2, 2)), LieTree::Leaf(l(1, 1)))
        );
        assert!(ls_bracket(&word(&[(1, 1), (2, 2)])).is_err());
    }

    #[test]
    fn bracket_of_aabac_satisfies_definition_3() {
        // a=x3, b=x2, c=x1: the unique admissible bracketing is
        // {a, {{a, b}, {a, c}}}; validated against (LS1)-(LS3)
        let a = LieTree::Leaf(l(3, 0));
        let b = LieTree::Leaf(l(2, 0));
        let c = LieTree::Leaf(l(1, 0));
        let expected = LieTree::bracket(
            a.clone(),
            LieTree::bracket(
                LieTree::bracket(a.clone(), b),
                LieTree::bracket(a, c),
            ),
        );
        let got = ls_bracket(&word(&[(3, 0), (3, 0), (2, 0), (3, 0), (1, 0)])).unwrap();
        assert!(satisfies_ls_conditions(&got));
        assert_eq!(got.tree(), &expected);
    }

    #[test]
    fn brackets_satisfy_definition_3_exhaustively() {
        for degree in 1..=5 {
            for w in ls_enumerate(2, 1, degree) {
                assert!(satisfies_ls_conditions(&w), "violated by {w}");
            }
        }
    }

    #[test]
    fn expand_examples() {
        let t = LieTree::bracket(LieTree::Leaf(l(2, 0)), LieTree::Leaf(l(1, 0)));
        let e = lie_expand(&t);
        assert_eq!(e.coeff(&word(&[(2, 0), (1, 0)])), rat(1));
        assert_eq!(e.coeff(&word(&[(1, 0), (2, 0)])), rat(-1));

        let single = lie_expand(&LieTree::Leaf(l(1, 0)));
        assert_eq!(single, LinComb::monomial(word(&[(1, 0)])));

        // [[b,a],a] -> baa - 2 aba + aab
        let t = LieTree::bracket(t, LieTree::Leaf(l(1, 0)));
        let e = lie_expand(&t);
        assert_eq!(e.coeff(&word(&[(2, 0), (1, 0), (1, 0)])), rat(1));
        assert_eq!(e.coeff(&word(&[(1, 0), (2, 0), (1, 0)])), rat(-2));
        assert_eq!(e.coeff(&word(&[(1, 0), (1, 0), (2, 0)])), rat(1));
    }

    #[test]
    fn nf_antisymmetry() {
        // [x1, x2] = -[x2, x1]
        let t = LieTree::bracket(LieTree::Leaf(l(1, 0)), LieTree::Leaf(l(2, 0)));
        let nf = lie_nf(&t).unwrap();
        let canonical = ls_bracket(&word(&[(2, 0), (1, 0)])).unwrap();
        assert_eq!(nf, LinComb::term(canonical, rat(-1)));
    }

    #[test]
    fn nf_jacobi() {
        let x = |g| LieTree::Leaf(l(g, 0));
        let br = LieTree::bracket;
        let jacobi = [
            br(br(x(3), x(2)), x(1)),
            br(br(x(2), x(1)), x(3)),
            br(br(x(1), x(3)), x(2)),
        ];
        let mut total = LinComb::zero();
        for t in &jacobi {
            total = total.add(&lie_nf(t).unwrap());
        }
        assert!(total.is_zero());
    }

    #[test]
    fn multilinear_degree_3_rank_is_two() {
        let x = |g| LieTree::Leaf(l(g, 0));
        let br = LieTree::bracket;
        // all bracketings of the 3! orderings collapse to rank (3-1)! = 2
        let mut vecs = Vec::new();
        let perms = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
        for p in perms {
            vecs.push(lie_nf(&br(br(x(p[0]), x(p[1])), x(p[2]))).unwrap());
            vecs.push(lie_nf(&br(x(p[0]), br(x(p[1]), x(p[2])))).unwrap());
        }
        assert_eq!(lc_rank(&vecs), 2);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(ls_enumerate(2, 0, 2).len(), 1);
        assert_eq!(ls_enumerate(2, 0, 3).len(), 2);
        assert_eq!(ls_enumerate(3, 0, 1).len(), 3);
        // mixed alphabet of size two: one generator with orders 0..=1
        assert_eq!(ls_enumerate(1, 1, 2).len(), 1);
    }

    #[test]
    fn ls_word_order_examples() {
        let w = |ls: &[(u32, u32)]| ls_bracket(&word(ls)).unwrap();
        // degree ties broken by the word; d-involving beats plain letters
        assert!(ls_less(&w(&[(2, 1), (1, 0)]), &w(&[(4, 2), (3, 1)])));
        // a letter sits above d-free words of degree >= 2 ...
        assert!(ls_less(&w(&[(2, 0), (1, 0)]), &LSWord::letter(l(5, 0))));
        // ... and below d-involving ones
        assert!(ls_less(&LSWord::letter(l(5, 0)), &w(&[(2, 1), (1, 0)])));
    }

    fn arb_tree() -> impl Strategy<Value = LieTree> {
        let leaf = (1u32..4, 0u32..2).prop_map(|(g, r)| LieTree::Leaf(l(g, r)));
        leaf.prop_recursive(2, 5, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| LieTree::bracket(a, b))
        })
        .prop_filter("degree capped at 5", |t| t.degree() <= 5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn leading_word_of_ls_expansion_is_the_word(degree in 1u32..5, seed in 0usize..6) {
            let words = ls_enumerate(2, 1, degree);
            if !words.is_empty() {
                let w = &words[seed % words.len()];
                let e = lie_expand(w.tree());
                let (lead, c) = e.leading().unwrap();
                prop_assert_eq!(lead, w.word());
                prop_assert_eq!(c.clone(), rat(1));
            }
        }

        #[test]
        fn nf_is_idempotent_on_basis(degree in 1u32..5, seed in 0usize..6) {
            let words = ls_enumerate(2, 1, degree);
            if !words.is_empty() {
                let w = words[seed % words.len()].clone();
                let nf = lie_nf(w.tree()).unwrap();
                prop_assert_eq!(nf, LinComb::monomial(w));
            }
        }

        #[test]
        fn nf_respects_antisymmetry_and_jacobi(a in arb_tree(), b in arb_tree(), c in arb_tree()) {
            prop_assume!(a.degree() + b.degree() + c.degree() <= 7);
            let ab = lie_nf(&LieTree::bracket(a.clone(), b.clone())).unwrap();
            let ba = lie_nf(&LieTree::bracket(b.clone(), a.clone())).unwrap();
            prop_assert!(ab.add(&ba).is_zero());

            let br = LieTree::bracket;
            let jac = lie_nf(&br(br(a.clone(), b.clone()), c.clone())).unwrap()
                .add(&lie_nf(&br(br(b.clone(), c.clone()), a.clone())).unwrap())
                .add(&lie_nf(&br(br(c, a), b)).unwrap());
            prop_assert!(jac.is_zero());
        }
    }
}
