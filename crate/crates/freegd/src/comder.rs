//! The free commutative algebra with derivation ComDer<X>.
//!
//! Standard basis monomials are multisets of derivative-decorated
//! generators x_i^(r). The weight grading puts generators at -1 and the
//! derivation at +1; the weight-(-1) subspace is closed under the Novikov
//! product u o v = u * d(v).

use crate::lincomb::{LinComb, Rat};
use std::cmp::Ordering;
use std::fmt;

/// A generator with a derivative order: x_i^(r).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DLetter {
    /// Generator index, >= 1.
    pub gen: u32,
    /// Derivative order, >= 0.
    pub order: u32,
}

impl DLetter {
    pub fn new(gen: u32, order: u32) -> Self {
        assert!(gen >= 1, "generator indices start at 1");
        DLetter { gen, order }
    }

    pub fn plain(gen: u32) -> Self {
        Self::new(gen, 0)
    }

    fn key(&self) -> (u32, u32) {
        (self.order, self.gen)
    }
}

/// Order on X_infinity: compare derivative order first, then index.
impl Ord for DLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for DLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `a < b` in the letter order of X_infinity.
pub fn letter_less(a: &DLetter, b: &DLetter) -> bool {
    a < b
}

impl fmt::Display for DLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.gen)?;
        match self.order {
            0 => Ok(()),
            r @ 1..=3 => write!(f, "{}", "'".repeat(r as usize)),
            r => write!(f, "^({r})"),
        }
    }
}

/// A standard-basis monomial of ComDer<X>: a nonempty multiset of letters,
/// stored sorted ascending by the letter order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CDMonomial {
    letters: Vec<DLetter>,
}

impl CDMonomial {
    pub fn new(mut letters: Vec<DLetter>) -> Self {
        assert!(!letters.is_empty(), "monomials are nonempty");
        letters.sort();
        CDMonomial { letters }
    }

    pub fn generator(gen: u32) -> Self {
        Self::new(vec![DLetter::plain(gen)])
    }

    pub fn letters(&self) -> &[DLetter] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// Multiset union with another monomial.
    pub fn merged(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(letters)
    }

    /// The comparison key behind the order on normal forms:
    /// S(a) = (L, R, M) from Sec. 2, extended with the tuple of indices of
    /// the order->=2 letters so the order is total on all monomials.
    ///
    /// The tuples are read in display order: L and R descending, M
    /// ascending. Reading L descending is what makes redistributing a
    /// derivative downward produce a strictly smaller monomial.
    pub(crate) fn s_key(&self) -> (Vec<u32>, Vec<u32>, Vec<u32>, Vec<u32>) {
        let mut l = Vec::new();
        let mut j_idx = Vec::new();
        let mut r = Vec::new();
        let mut m = Vec::new();
        for letter in &self.letters {
            match letter.order {
                0 => m.push(letter.gen),
                1 => r.push(letter.gen),
                _ => {
                    l.push(letter.order);
                    j_idx.push(letter.gen);
                }
            }
        }
        // letters are stored ascending; L and R are displayed descending
        l.reverse();
        r.reverse();
        j_idx.reverse();
        (l, r, m, j_idx)
    }

    /// Strict comparison by S(a) alone (the paper's order, a preorder:
    /// monomials differing only in the indices of order->=2 letters tie).
    pub fn s_less(&self, other: &Self) -> bool {
        let (la, ra, ma, _) = self.s_key();
        let (lb, rb, mb, _) = other.s_key();
        (la, ra, ma) < (lb, rb, mb)
    }
}

/// Total order: S(a) first, ties broken by the order->=2 letter indices.
impl Ord for CDMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.s_key().cmp(&other.s_key())
    }
}

impl PartialOrd for CDMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CDMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// An element of ComDer<X>.
pub type CDPoly = LinComb<CDMonomial>;

/// Polynomial with a single generator monomial.
pub fn cd_gen(gen: u32) -> CDPoly {
    CDPoly::monomial(CDMonomial::generator(gen))
}

/// Bilinear extension of the multiset union of letters.
pub fn cd_mul(p: &CDPoly, q: &CDPoly) -> CDPoly {
    p.mul_with(q, |a, b| a.merged(b))
}

/// The derivation: Leibniz sum over letters with one occurrence's order
/// incremented.
pub fn cd_derive(p: &CDPoly) -> CDPoly {
    let mut out = CDPoly::zero();
    for (m, c) in p.iter() {
        for i in 0..m.letters().len() {
            let mut letters = m.letters().to_vec();
            letters[i].order += 1;
            out.add_term(CDMonomial::new(letters), c.clone());
        }
    }
    out
}

/// Weight of a standard-basis monomial: sum over letters of (order - 1).
pub fn cd_weight(m: &CDMonomial) -> i64 {
    m.letters()
        .iter()
        .map(|x| x.order as i64 - 1)
        .sum()
}

/// The common weight of all monomials of `p`, if `p` is homogeneous
/// (`None` for 0 or mixed weights).
pub fn cd_homogeneous_weight(p: &CDPoly) -> Option<i64> {
    let mut weights = p.iter().map(|(m, _)| cd_weight(m));
    let first = weights.next()?;
    weights.all(|w| w == first).then_some(first)
}

/// The Novikov product u o v = u * d(v).
pub fn nov_circ(p: &CDPoly, q: &CDPoly) -> CDPoly {
    cd_mul(p, &cd_derive(q))
}

/// All standard-basis monomials with `degree` letters of total `weight`
/// over generators 1..=num_gens. With `multilinear`, each generator
/// 1..=degree occurs exactly once (empty unless num_gens >= degree).
pub fn cd_enumerate(num_gens: u32, degree: u32, weight: i64, multilinear: bool) -> Vec<CDMonomial> {
    assert!(num_gens >= 1 && degree >= 1);
    let order_sum = weight + degree as i64;
    if order_sum < 0 {
        return Vec::new();
    }
    let order_sum = order_sum as u32;

    let mut out = Vec::new();
    if multilinear {
        if degree > num_gens {
            return Vec::new();
        }
        // one letter per generator 1..=degree; distribute orders
        let mut orders = vec![0u32; degree as usize];
        distribute_orders(&mut orders, 0, order_sum, &mut |orders| {
            let letters = orders
                .iter()
                .enumerate()
                .map(|(i, &r)| DLetter::new(i as u32 + 1, r))
                .collect();
            out.push(CDMonomial::new(letters));
        });
    } else {
        let mut letters = Vec::new();
        enumerate_multisets(
            &mut letters,
            DLetter::new(1, 0),
            num_gens,
            degree,
            order_sum,
            &mut |letters| out.push(CDMonomial::new(letters.to_vec())),
        );
    }
    out.sort();
    out
}

fn distribute_orders(orders: &mut [u32], pos: usize, remaining: u32, emit: &mut impl FnMut(&[u32])) {
    if pos + 1 == orders.len() {
        orders[pos] = remaining;
        emit(orders);
        return;
    }
    for r in 0..=remaining {
        orders[pos] = r;
        distribute_orders(orders, pos + 1, remaining - r, emit);
    }
}

/// Ascending multisets of letters with exact size and order sum.
fn enumerate_multisets(
    acc: &mut Vec<DLetter>,
    min_letter: DLetter,
    num_gens: u32,
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
        for gen in 1..=num_gens {
            let letter = DLetter::new(gen, order);
            if letter < min_letter {
                continue;
            }
            acc.push(letter);
            enumerate_multisets(acc, letter, num_gens, remaining - 1, order_budget - order, emit);
            acc.pop();
        }
    }
}

/// Monomial from (gen, order) pairs.
pub fn cd_monomial(letters: &[(u32, u32)]) -> CDMonomial {
    CDMonomial::new(letters.iter().map(|&(g, r)| DLetter::new(g, r)).collect())
}

/// Convenience constructor used throughout the tests: a monomial from
/// (gen, order) pairs with unit coefficient.
pub fn cd_mono(letters: &[(u32, u32)]) -> CDPoly {
    CDPoly::monomial(cd_monomial(letters))
}

/// Scalar helper for building test polynomials.
pub fn cd_scaled(c: Rat, letters: &[(u32, u32)]) -> CDPoly {
    cd_mono(letters).scale(&c)
}

/// One.. n distinct generators as polynomials.
pub fn cd_gens(n: u32) -> Vec<CDPoly> {
    (1..=n).map(cd_gen).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn letter_order_examples() {
        // x2 < x1' : order decides before index
        assert!(letter_less(&DLetter::new(2, 0), &DLetter::new(1, 1)));
        // irreflexive
        assert!(!letter_less(&DLetter::new(1, 0), &DLetter::new(1, 0)));
        // equal order, index decides
        assert!(letter_less(&DLetter::new(1, 2), &DLetter::new(2, 2)));
    }

    #[test]
    fn mul_examples() {
        // (x1 x2') * (x1') = x1 x1' x2'
        assert_eq!(
            cd_mul(&cd_mono(&[(1, 0), (2, 1)]), &cd_mono(&[(1, 1)])),
            cd_mono(&[(1, 0), (1, 1), (2, 1)])
        );
        // x1 * x1 = x1^2
        assert_eq!(
            cd_mul(&cd_gen(1), &cd_gen(1)),
            cd_mono(&[(1, 0), (1, 0)])
        );
        // (x1 + x2) * x3 = x1 x3 + x2 x3
        let lhs = cd_mul(&cd_gen(1).add(&cd_gen(2)), &cd_gen(3));
        assert_eq!(lhs, cd_mono(&[(1, 0), (3, 0)]).add(&cd_mono(&[(2, 0), (3, 0)])));
    }

    #[test]
    fn derive_examples() {
        assert_eq!(cd_derive(&cd_gen(1)), cd_mono(&[(1, 1)]));
        assert_eq!(
            cd_derive(&cd_mono(&[(1, 0), (2, 0)])),
            cd_mono(&[(1, 1), (2, 0)]).add(&cd_mono(&[(1, 0), (2, 1)]))
        );
        // d(x1^2 x2'') = 2 x1 x1' x2'' + x1^2 x2'''
        assert_eq!(
            cd_derive(&cd_mono(&[(1, 0), (1, 0), (2, 2)])),
            cd_scaled(rat(2), &[(1, 0), (1, 1), (2, 2)])
                .add(&cd_mono(&[(1, 0), (1, 0), (2, 3)]))
        );
    }

    #[test]
    fn weight_examples() {
        let m = |ls: &[(u32, u32)]| {
            CDMonomial::new(ls.iter().map(|&(g, r)| DLetter::new(g, r)).collect())
        };
        assert_eq!(cd_weight(&m(&[(1, 0)])), -1);
        assert_eq!(cd_weight(&m(&[(1, 2)])), 1);
        assert_eq!(cd_weight(&m(&[(1, 0), (2, 1)])), -1);
    }

    #[test]
    fn circ_examples() {
        // x1 o x2 = x1 x2'
        assert_eq!(nov_circ(&cd_gen(1), &cd_gen(2)), cd_mono(&[(1, 0), (2, 1)]));
        // (x1 x2') o x3 = x1 x2' x3'
        assert_eq!(
            nov_circ(&cd_mono(&[(1, 0), (2, 1)]), &cd_gen(3)),
            cd_mono(&[(1, 0), (2, 1), (3, 1)])
        );
        // x1 o (x2 x3') = x1 x2' x3' + x1 x2 x3''
        assert_eq!(
            nov_circ(&cd_gen(1), &cd_mono(&[(2, 0), (3, 1)])),
            cd_mono(&[(1, 0), (2, 1), (3, 1)]).add(&cd_mono(&[(1, 0), (2, 0), (3, 2)]))
        );
    }

    #[test]
    fn enumerate_examples() {
        let one_gen_3 = cd_enumerate(1, 3, -1, false);
        assert_eq!(one_gen_3.len(), 2);
        assert!(one_gen_3.contains(&CDMonomial::new(vec![
            DLetter::new(1, 0),
            DLetter::new(1, 0),
            DLetter::new(1, 2)
        ])));
        assert!(one_gen_3.contains(&CDMonomial::new(vec![
            DLetter::new(1, 0),
            DLetter::new(1, 1),
            DLetter::new(1, 1)
        ])));

        assert_eq!(cd_enumerate(3, 3, -1, true).len(), 6);
        assert_eq!(
            cd_enumerate(1, 1, -1, false),
            vec![CDMonomial::generator(1)]
        );
    }

    #[test]
    fn identities_left_symmetry_and_right_commutativity() {
        // direct expansions of the paper's defining identities on three
        // generic generators must vanish identically
        let (x1, x2, x3) = (cd_gen(1), cd_gen(2), cd_gen(3));
        let lhs = nov_circ(&nov_circ(&x1, &x2), &x3)
            .sub(&nov_circ(&x1, &nov_circ(&x2, &x3)))
            .sub(&nov_circ(&nov_circ(&x2, &x1), &x3))
            .add(&nov_circ(&x2, &nov_circ(&x1, &x3)));
        assert!(lhs.is_zero(), "left-symmetry failed: {lhs}");

        let rhs = nov_circ(&nov_circ(&x1, &x2), &x3).sub(&nov_circ(&nov_circ(&x1, &x3), &x2));
        assert!(rhs.is_zero(), "right-commutativity failed: {rhs}");
    }

    #[test]
    fn display_uses_star_and_caret() {
        assert_eq!(cd_mono(&[(1, 0), (2, 1), (1, 4)]).to_string(), "x1*x2'*x1^(4)");
        let p = cd_mono(&[(1, 0)]).scale(&ratio(-5, 6));
        assert_eq!(p.to_string(), "-5/6*x1");
    }

    fn arb_poly() -> impl Strategy<Value = CDPoly> {
        proptest::collection::vec(
            (
                proptest::collection::vec((1u32..4, 0u32..3), 1..4),
                -3i64..4,
            ),
            0..4,
        )
        .prop_map(|terms| {
            let mut p = CDPoly::zero();
            for (letters, c) in terms {
                p.add_term(
                    CDMonomial::new(letters.iter().map(|&(g, r)| DLetter::new(g, r)).collect()),
                    rat(c),
                );
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_commutative_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(cd_mul(&p, &q), cd_mul(&q, &p));
            prop_assert_eq!(cd_mul(&cd_mul(&p, &q), &r), cd_mul(&p, &cd_mul(&q, &r)));
        }

        #[test]
        fn derive_is_leibniz(p in arb_poly(), q in arb_poly()) {
            let lhs = cd_derive(&cd_mul(&p, &q));
            let rhs = cd_mul(&cd_derive(&p), &q).add(&cd_mul(&p, &cd_derive(&q)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn weight_adds_and_derivation_raises(p in arb_poly(), q in arb_poly()) {
            for (m, _) in cd_mul(&p, &q).iter() {
                let w = cd_weight(m);
                let decomposable = p.iter().any(|(a, _)| {
                    q.iter().any(|(b, _)| a.merged(b) == *m && cd_weight(a) + cd_weight(b) == w)
                });
                prop_assert!(decomposable);
            }
            for (m, _) in p.iter() {
                let w = cd_weight(m);
                for i in 0..m.letters().len() {
                    let mut letters = m.letters().to_vec();
                    letters[i].order += 1;
                    prop_assert_eq!(cd_weight(&CDMonomial::new(letters)), w + 1);
                }
            }
        }

        #[test]
        fn weight_minus_one_closed_under_circ(
            a in 0usize..2, b in 0usize..2
        ) {
            let pool = [cd_mono(&[(1, 0), (2, 1)]), cd_mono(&[(1, 0), (1, 0), (3, 2)])];
            let prod = nov_circ(&pool[a], &pool[b]);
            prop_assert_eq!(cd_homogeneous_weight(&prod), Some(-1));
        }
    }
}
