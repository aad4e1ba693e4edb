//! The Haglund–Haiman–Loehr filling formula for `H̃_μ[X; q, t]`.
//!
//! Row `j` of the diagram holds part `μ_j`; row 0 is the bottom row. The
//! reading order runs through rows from the top down, left to right.

use std::collections::HashMap;

use crate::combinatorics::{partitions_of, Cell, Partition};
use crate::exactalg::{Exponent, QtzPoly, Scalar};

use super::symfunc::{Basis, SymFunc};

struct Diagram {
    /// Cells in reading order.
    cells: Vec<Cell>,
    /// Reading position of the cell directly below, if any.
    below: Vec<Option<usize>>,
    arm: Vec<u32>,
    leg: Vec<u32>,
    /// Attacking pairs `(u, v)` with `u` read before `v`.
    attacks: Vec<(usize, usize)>,
}

impl Diagram {
    fn new(mu: &Partition) -> Self {
        let mut cells: Vec<Cell> = mu.cells().collect();
        cells.sort_by_key(|c| (std::cmp::Reverse(c.row), c.col));
        let pos: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let below = cells
            .iter()
            .map(|c| (c.row > 0).then(|| pos[&Cell { row: c.row - 1, col: c.col }]))
            .collect();
        let mut attacks = Vec::new();
        for (i, u) in cells.iter().enumerate() {
            for (j, v) in cells.iter().enumerate().skip(i + 1) {
                let same_row = u.row == v.row;
                // upper cell strictly right of the lower one
                let adjacent = u.row == v.row + 1 && u.col > v.col;
                if same_row || adjacent {
                    attacks.push((i, j));
                }
            }
        }
        Diagram {
            arm: cells.iter().map(|&c| mu.arm(c) as u32).collect(),
            leg: cells.iter().map(|&c| mu.leg(c) as u32).collect(),
            cells,
            below,
            attacks,
        }
    }

    /// `(inv, maj)` of a filling given in reading order.
    fn statistics(&self, filling: &[u8]) -> (u32, u32) {
        let mut inv = self
            .attacks
            .iter()
            .filter(|&&(u, v)| filling[u] > filling[v])
            .count() as i64;
        let mut maj = 0;
        for (i, b) in self.below.iter().enumerate() {
            if let Some(b) = *b {
                if filling[i] > filling[b] {
                    maj += self.leg[i] + 1;
                    inv -= self.arm[i] as i64;
                }
            }
        }
        (u32::try_from(inv).expect("inv is nonnegative"), maj)
    }
}

/// Next multiset permutation in lexicographic order.
fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `Σ q^{inv} t^{maj}` over fillings of `μ` with content `ν`.
pub fn filling_sum<T: Scalar>(mu: &Partition, nu: &Partition) -> QtzPoly<T> {
    let diagram = Diagram::new(mu);
    assert_eq!(diagram.cells.len(), nu.size());
    let mut filling: Vec<u8> = nu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(letter, &k)| std::iter::repeat_n(letter as u8, k))
        .collect();
    let mut counts: HashMap<(u32, u32), i64> = HashMap::new();
    loop {
        *counts.entry(diagram.statistics(&filling)).or_default() += 1;
        if !next_permutation(&mut filling) {
            break;
        }
    }
    QtzPoly::from_terms(counts.into_iter().map(|((i, m), c)| (Exponent::qt(i, m), T::from_int(c))))
}

/// `H̃_μ` in the monomial basis.
pub fn hhl_htilde_monomial<T: Scalar>(mu: &Partition) -> SymFunc<T> {
    let mut f = SymFunc::zero(Basis::Monomial, mu.size());
    for nu in partitions_of(mu.size()) {
        f.add_term(&nu, &filling_sum(mu, &nu));
    }
    f
}
