//! Exact matrices over `Q(ζ₈)`, stored row-sparse (most oracle matrices are
//! monomial or nearly so).

use std::fmt;

use super::cyclo::Cyclo8;

type Row = Vec<(usize, Cyclo8)>;

/// A `rows × cols` matrix. Rows hold their nonzero entries sorted by column,
/// so structural equality is matrix equality.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Row>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Cyclo8::one())
    }

    pub fn scalar(n: usize, c: &Cyclo8) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for (i, row) in m.data.iter_mut().enumerate() {
                row.push((i, c.clone()));
            }
        }
        m
    }

    /// From `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, Cyclo8)>) -> Self {
        let mut data: Vec<Row> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}×{cols}");
            data[r].push((c, v));
        }
        for row in &mut data {
            *row = normalize(std::mem::take(row));
        }
        Self { rows, cols, data }
    }

    pub fn from_dense(rows: Vec<Vec<Cyclo8>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut trip = Vec::new();
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged dense matrix");
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    trip.push((i, j, v));
                }
            }
        }
        Self::from_triplets(r, c, trip)
    }

    pub fn from_rational_rows(rows: &[Vec<crate::rational::Rational>]) -> Self {
        Self::from_dense(rows.iter().map(|r| r.iter().cloned().map(Cyclo8::from).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Cyclo8)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Cyclo8 {
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => Cyclo8::zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Cyclo8>> {
        let mut out = vec![vec![Cyclo8::zero(); self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i][*j] = v.clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn add(&self, o: &ExactMatrix) -> ExactMatrix {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &ExactMatrix) -> ExactMatrix {
        self.combine(o, true)
    }

    fn combine(&self, o: &ExactMatrix, subtract: bool) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| {
                let mut row: Row = a.clone();
                row.extend(b.iter().map(|(j, v)| (*j, if subtract { -v } else { v.clone() })));
                normalize(row)
            })
            .collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Cyclo8) -> ExactMatrix {
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(j, v)| (*j, v * c)).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        ExactMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, o.rows, "inner dimension mismatch");
        let mut acc = vec![Cyclo8::zero(); o.cols];
        let mut touched = vec![false; o.cols];
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut cols: Vec<usize> = Vec::new();
            for (k, a) in row {
                for (j, b) in &o.data[*k] {
                    if !touched[*j] {
                        touched[*j] = true;
                        cols.push(*j);
                    }
                    acc[*j].add_mul(a, b);
                }
            }
            cols.sort_unstable();
            let mut out = Row::with_capacity(cols.len());
            for j in cols {
                touched[j] = false;
                let v = std::mem::take(&mut acc[j]);
                if !v.is_zero() {
                    out.push((j, v));
                }
            }
            data.push(out);
        }
        ExactMatrix { rows: self.rows, cols: o.cols, data }
    }

    pub fn mul_vec(&self, v: &[Cyclo8]) -> Vec<Cyclo8> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                let mut s = Cyclo8::zero();
                for (j, a) in row {
                    if !v[*j].is_zero() {
                        s.add_mul(a, &v[*j]);
                    }
                }
                s
            })
            .collect()
    }

    /// `self ⊗ o`, with index `i·dim(o) + k`.
    pub fn kron(&self, o: &ExactMatrix) -> ExactMatrix {
        let mut data = Vec::with_capacity(self.rows * o.rows);
        for ra in &self.data {
            for rb in &o.data {
                let mut row = Row::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * o.cols + jb, a * b));
                    }
                }
                data.push(row);
            }
        }
        ExactMatrix { rows: self.rows * o.rows, cols: self.cols * o.cols, data }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut data: Vec<Row> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn conj_transpose(&self) -> ExactMatrix {
        let mut t = self.transpose();
        for row in &mut t.data {
            for e in row.iter_mut() {
                e.1 = e.1.conj();
            }
        }
        t
    }

    pub fn trace(&self) -> Cyclo8 {
        let mut s = Cyclo8::zero();
        for i in 0..self.rows.min(self.cols) {
            s += &self.get(i, i);
        }
        s
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, k: u32) -> ExactMatrix {
        assert!(self.is_square());
        let mut out = ExactMatrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// First position where the two matrices differ.
    pub fn first_difference(&self, o: &ExactMatrix) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Some((self.rows.min(o.rows), self.cols.min(o.cols)));
        }
        let d = self.sub(o);
        d.data.iter().enumerate().find_map(|(i, row)| row.first().map(|(j, _)| (i, *j)))
    }

    /// Rows restricted to `keep` (in that order), then columns to `keep_cols`.
    pub fn submatrix(&self, keep: &[usize], keep_cols: &[usize]) -> ExactMatrix {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in keep_cols.iter().enumerate() {
            pos[c] = k;
        }
        let data = keep
            .iter()
            .map(|&r| {
                let mut row: Row = self.data[r]
                    .iter()
                    .filter(|(j, _)| pos[*j] != usize::MAX)
                    .map(|(j, v)| (pos[*j], v.clone()))
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        ExactMatrix { rows: keep.len(), cols: keep_cols.len(), data }
    }

    /// `true` when every entry lies in `Q(i)`.
    pub fn is_gaussian(&self) -> bool {
        self.data.iter().flatten().all(|(_, v)| v.components()[1] == 0u32 && v.components()[3] == 0u32)
    }
}

fn normalize(mut row: Row) -> Row {
    row.sort_by_key(|e| e.0);
    let mut out: Row = Vec::with_capacity(row.len());
    for (j, v) in row {
        match out.last_mut() {
            Some((k, acc)) if *k == j => *acc += &v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}×{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_dense(rows.iter().map(|r| r.iter().map(|&x| Cyclo8::from_int(x)).collect()).collect())
    }

    #[test]
    fn arithmetic() {
        let a = m(&[&[1, 2], &[0, -1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[-1, 0]]));
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&ExactMatrix::identity(2)), a);
        assert_eq!(a.trace(), Cyclo8::zero());
        assert_eq!(b.pow(2), ExactMatrix::identity(2));
        assert_eq!(a.transpose(), m(&[&[1, 0], &[2, -1]]));
        assert_eq!(a.kron(&ExactMatrix::identity(1)), a);
        assert_eq!(ExactMatrix::identity(2).kron(&b).rows(), 4);
        assert_eq!(a.first_difference(&b), Some((0, 0)));
        assert_eq!(a.first_difference(&a), None);
        assert_eq!(a.mul_vec(&[Cyclo8::one(), Cyclo8::one()]), vec![Cyclo8::from_int(3), Cyclo8::from_int(-1)]);
    }

    #[test]
    fn kron_index_convention() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.get(0, 1), Cyclo8::from_int(1));
        assert_eq!(k.get(1, 2), Cyclo8::from_int(2));
        assert_eq!(k.get(3, 2), Cyclo8::from_int(4));
        // mixed product rule
        assert_eq!(a.kron(&b).mul(&b.kron(&a)), a.mul(&b).kron(&b.mul(&a)));
    }
}
