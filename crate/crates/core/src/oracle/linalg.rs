//! Exact null spaces over `Q(ζ₈)`.
//!
//! Rows are added one at a time to a reduced echelon form whose pivot rows
//! have leading coefficient `1` and vanish in every other pivot column.
//! Pivoting is deterministic: the pivot of a row is its first nonzero
//! column after reduction, rows are taken in order.

use super::cyclo::Cyclo8;
use super::matrix::ExactMatrix;

type Row = Vec<(usize, Cyclo8)>;

/// `r - a·p` for sparse rows sorted by column.
fn sub_scaled(r: &Row, a: &Cyclo8, p: &Row) -> Row {
    let mut out = Row::with_capacity(r.len() + p.len());
    let (mut i, mut k) = (0, 0);
    while i < r.len() || k < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let ck = p.get(k).map_or(usize::MAX, |e| e.0);
        if ci < ck {
            out.push(r[i].clone());
            i += 1;
            continue;
        }
        let mut v = if ci == ck {
            i += 1;
            r[i - 1].1.clone()
        } else {
            Cyclo8::zero()
        };
        v.sub_mul(a, &p[k].1);
        k += 1;
        if !v.is_zero() {
            out.push((ck, v));
        }
    }
    out
}

fn entry(row: &Row, col: usize) -> Option<&Cyclo8> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|k| &row[k].1)
}

/// Basis of `{x : A x = 0}` in reduced form: `basis[j][free[j]] = 1` and
/// `basis[j][free[i]] = 0` for `i ≠ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub ambient: usize,
    pub free: Vec<usize>,
    pub basis: Vec<Vec<Cyclo8>>,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Trace of an operator preserving the kernel: `Σ_j (A k_j)[free_j]`.
    pub fn trace_of(&self, images: &[Vec<Cyclo8>]) -> Cyclo8 {
        let mut t = Cyclo8::zero();
        for (j, img) in images.iter().enumerate() {
            t += &img[self.free[j]];
        }
        t
    }

    /// Coordinates of a kernel vector in this basis.
    pub fn coordinates(&self, v: &[Cyclo8]) -> Vec<Cyclo8> {
        self.free.iter().map(|&f| v[f].clone()).collect()
    }
}

/// Reduced row echelon form of `a`: rows keyed by pivot column, sorted.
fn echelon(a: &ExactMatrix) -> Vec<(usize, Row)> {
    let mut pivots: Vec<(usize, Row)> = Vec::new();
    for r in 0..a.rows() {
        let mut row: Row = a.row(r).to_vec();
        // pivot rows vanish in each other's pivot columns, so one pass suffices
        for (c, prow) in &pivots {
            if let Some(x) = entry(&row, *c).cloned() {
                row = sub_scaled(&row, &x, prow);
            }
        }
        let Some((c, lead)) = row.first().cloned() else { continue };
        let inv = lead.inverse().expect("nonzero pivot");
        for e in row.iter_mut() {
            e.1 = &e.1 * &inv;
        }
        for (_, prow) in pivots.iter_mut() {
            if let Some(y) = entry(prow, c).cloned() {
                *prow = sub_scaled(prow, &y, &row);
            }
        }
        let pos = pivots.partition_point(|(pc, _)| *pc < c);
        pivots.insert(pos, (c, row));
    }
    pivots
}

/// Rank of `a` over `Q(ζ₈)`.
pub fn rank(a: &ExactMatrix) -> usize {
    echelon(a).len()
}

/// Exact null space of `a`.
pub fn nullspace(a: &ExactMatrix) -> Kernel {
    let n = a.cols();
    let pivots = echelon(a);
    let mut is_pivot = vec![false; n];
    for (c, _) in &pivots {
        is_pivot[*c] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let rows = pivots;
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Cyclo8::zero(); n];
        v[f] = Cyclo8::one();
        for (c, row) in &rows {
            if let Ok(k) = row.binary_search_by_key(&f, |e| e.0) {
                v[*c] = -&row[k].1;
            }
        }
        basis.push(v);
    }
    Kernel { ambient: n, free, basis }
}

/// `true` when every basis vector is annihilated and the count matches.
pub fn verify_kernel(a: &ExactMatrix, k: &Kernel) -> bool {
    k.basis.iter().all(|v| a.mul_vec(v).iter().all(Cyclo8::is_zero))
}
