//! Young's seminormal form of the irreducible `S_n`-modules.
//!
//! Basis `v_T` over standard tableaux `T`. With `r = c_T(k+1) - c_T(k)`
//! the axial distance, `s_k v_T = v_T` if `k, k+1` share a row, `-v_T` if
//! they share a column, and otherwise
//! `s_k v_T = (1/r) v_T + v_{T'}` for `r > 0`,
//! `s_k v_T = (1/r) v_T + (1 - 1/r²) v_{T'}` for `r < 0`,
//! where `T'` swaps `k` and `k+1`. The Jucys–Murphy elements
//! `L_k = Σ_{j<k} s_{jk}` then act diagonally by the contents `c_T(k)`.

use std::collections::HashMap;

use super::cyclo::Cyclo8;
use super::matrix::ExactMatrix;
use crate::partition::Partition;
use crate::rational::{q, Rational};

/// A standard tableau as the `(row, col)` cell of each letter `0..n`.
pub type StandardTableau = Vec<(usize, usize)>;

/// Standard tableaux of shape `λ`, in the order produced by placing letters
/// into rows from top to bottom.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    fn rec(lambda: &Partition, filled: &mut Vec<usize>, t: &mut StandardTableau, out: &mut Vec<StandardTableau>) {
        if t.len() == lambda.size() {
            out.push(t.clone());
            return;
        }
        for r in 0..lambda.len() {
            let c = filled[r];
            if c < lambda.part(r) && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                t.push((r, c));
                rec(lambda, filled, t, out);
                t.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(lambda, &mut vec![0; lambda.len()], &mut Vec::new(), &mut out);
    out
}

fn content(cell: (usize, usize)) -> i64 {
    cell.1 as i64 - cell.0 as i64
}

/// The seminormal representation: tableaux and the matrices of `s_0, …, s_{n-2}`.
#[derive(Debug, Clone)]
pub struct SeminormalRep {
    pub tableaux: Vec<StandardTableau>,
    pub generators: Vec<ExactMatrix>,
}

impl SeminormalRep {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Contents `c_T(k)` of letter `k` in each basis tableau.
    pub fn contents(&self, k: usize) -> Vec<i64> {
        self.tableaux.iter().map(|t| content(t[k])).collect()
    }
}

pub fn young_seminormal(lambda: &Partition) -> SeminormalRep {
    let tableaux = standard_tableaux(lambda);
    let index: HashMap<&StandardTableau, usize> = tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let n = lambda.size();
    let dim = tableaux.len();
    let mut generators = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n.saturating_sub(1) {
        let mut trip = Vec::new();
        for (col, t) in tableaux.iter().enumerate() {
            let (a, b) = (t[k], t[k + 1]);
            if a.0 == b.0 {
                trip.push((col, col, Cyclo8::one()));
            } else if a.1 == b.1 {
                trip.push((col, col, Cyclo8::from_int(-1)));
            } else {
                let r = content(b) - content(a);
                let mut swapped = t.clone();
                swapped.swap(k, k + 1);
                let other = index[&swapped];
                trip.push((col, col, Cyclo8::from_rational(q(1, r))));
                let off: Rational = if r > 0 { Rational::from(1) } else { Rational::from(1) - q(1, r * r) };
                trip.push((other, col, Cyclo8::from_rational(off)));
            }
        }
        generators.push(ExactMatrix::from_triplets(dim, dim, trip));
    }
    SeminormalRep { tableaux, generators }
}
