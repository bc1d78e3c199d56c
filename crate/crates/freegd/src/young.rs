//! Young diagrams for partitions with strictly longer first row, filled by
//! generators; each admissible filling names one basis monomial of the
//! free Novikov algebra.

use crate::novikov::MagmaTerm;

/// A filled Young diagram. `rows[s]` holds the full row `s`: its interior
/// entries followed by the final entry, so `rows[s].len() == shape[s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungFilling {
    /// Row lengths: a partition with shape[0] > shape[1] >= ... >= 1
    /// (one-row diagrams may have any length, including 1).
    pub shape: Vec<u32>,
    pub rows: Vec<Vec<u32>>,
}

impl YoungFilling {
    fn is_admissible(&self) -> bool {
        // interior entries, read right-to-left within each row and then
        // row by row downward, weakly decrease
        let mut chain = Vec::new();
        for row in &self.rows {
            for &g in row[..row.len() - 1].iter().rev() {
                chain.push(g);
            }
        }
        if chain.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }

        let finals: Vec<u32> = self.rows.iter().map(|r| *r.last().unwrap()).collect();
        let lens = &self.shape;
        for s in 0..lens.len().saturating_sub(1) {
            let constrained = if s == 0 {
                lens[0] == lens[1] + 1
            } else if lens[s] >= 2 && lens[s + 1] >= 2 {
                lens[s] == lens[s + 1]
            } else {
                // single-cell tail entries weakly decrease downward
                lens[s] == 1 && lens[s + 1] == 1
            };
            if constrained && finals[s] < finals[s + 1] {
                return false;
            }
        }
        true
    }
}

/// All fillings of admissible shapes of `degree` cells with entries in
/// 1..=num_gens; with `multilinear`, entries are exactly 1..=degree
/// (empty unless num_gens >= degree).
pub fn young_fillings(num_gens: u32, degree: u32, multilinear: bool) -> Vec<YoungFilling> {
    assert!(num_gens >= 1 && degree >= 1);
    if multilinear && degree > num_gens {
        return Vec::new();
    }
    let mut out = Vec::new();
    for shape in shapes(degree) {
        let cells = degree as usize;
        let mut entries = vec![0u32; cells];
        fill(&mut entries, 0, num_gens, &mut |entries| {
            if multilinear {
                let mut seen = vec![false; num_gens as usize + 1];
                for &g in entries.iter() {
                    if g > degree || seen[g as usize] {
                        return;
                    }
                    seen[g as usize] = true;
                }
            }
            let mut rows = Vec::new();
            let mut at = 0;
            for &len in &shape {
                rows.push(entries[at..at + len as usize].to_vec());
                at += len as usize;
            }
            let filling = YoungFilling {
                shape: shape.clone(),
                rows,
            };
            if filling.is_admissible() {
                out.push(filling);
            }
        });
    }
    out
}

/// Partitions of n with the first part strictly greater than the second.
fn shapes(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for first in 1..=n {
        let mut acc = vec![first];
        partitions_below(n - first, first.saturating_sub(1), &mut acc, &mut out);
    }
    out
}

fn partitions_below(remaining: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(acc.clone());
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        acc.push(part);
        partitions_below(remaining - part, part, acc, out);
        acc.pop();
    }
}

fn fill(entries: &mut [u32], pos: usize, num_gens: u32, emit: &mut impl FnMut(&[u32])) {
    if pos == entries.len() {
        emit(entries);
        return;
    }
    for g in 1..=num_gens {
        entries[pos] = g;
        fill(entries, pos + 1, num_gens, emit);
    }
}

/// The basis monomial named by a filling: the first row nests inward with
/// its final entry innermost, and every later row right-multiplies the
/// accumulated term by its own nest.
pub fn filling_to_term(f: &YoungFilling) -> MagmaTerm {
    let mut term: Option<MagmaTerm> = None;
    for row in &f.rows {
        let mut nest = MagmaTerm::Gen(*row.last().unwrap());
        for &g in row[..row.len() - 1].iter() {
            nest = MagmaTerm::circ(MagmaTerm::Gen(g), nest);
        }
        term = Some(match term {
            None => nest,
            Some(prev) => MagmaTerm::circ(prev, nest),
        });
    }
    term.expect("fillings are nonempty")
}
