use freegd::lincomb::rat;
use freegd::poisder::{pois_enumerate, PoisMonomial};
use freegd::sgd::{pnf_classify, psi_hat, tau2};
use std::collections::BTreeSet;

// full per-factor signature: sorted-desc list of factors' order tuples
fn sig(m: &PoisMonomial) -> Vec<Vec<u32>> {
    let mut s: Vec<Vec<u32>> = m
        .factors()
        .iter()
        .map(|f| {
            let mut o: Vec<u32> = f.word().letters().iter().map(|x| x.order).collect();
            o.sort_unstable_by(|a, b| b.cmp(a));
            o
        })
        .collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

fn main() {
    let mut constraints: BTreeSet<(Vec<Vec<u32>>, Vec<Vec<u32>>)> = BTreeSet::new();
    for gens in 1..=3u32 {
        for deg in 1..=5u32 {
            for m in pois_enumerate(gens, deg, -1, false) {
                let nf = pnf_classify(&m).unwrap();
                let (s, term) = psi_hat(&nf).unwrap();
                let expansion = tau2(&term).scale(&s);
                assert_eq!(expansion.coeff(&m), rat(1));
                for (b, _) in expansion.iter() {
                    if b != &m && b.erased() == m.erased() && sig(b) != sig(&m) {
                        constraints.insert((sig(&m), sig(b)));
                    }
                }
            }
        }
    }
    // each line: the source signature must be GREATER than the tail signature
    for (hi, lo) in &constraints {
        println!("{hi:?}  >  {lo:?}");
    }
    println!("{} distinct signature constraints", constraints.len());
}
