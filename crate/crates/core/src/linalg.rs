//! Exact dense linear algebra over a [`Field`]: matrices, Gaussian
//! elimination, kernels, and an incremental eliminator used by the
//! derivation-space solvers. Prime fields get a specialized u64 kernel;
//! everything else goes through generic field arithmetic.

use crate::error::Error;
use crate::field::{Field, Scalar};

/// Row-major dense matrix over a field.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(rows_data: Vec<Vec<Scalar>>) -> Mat {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_data {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Mat { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self, field: &Field) -> Mat {
        let _ = field;
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, field: &Field, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = field.zero();
            for k in 0..self.cols {
                if !field.is_zero(&self[(i, k)]) && !field.is_zero(&other[(k, j)]) {
                    acc = field.add(&acc, &field.mul(&self[(i, k)], &other[(k, j)]));
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for k in 0..self.cols {
                    if !field.is_zero(&self[(i, k)]) && !field.is_zero(&v[k]) {
                        acc = field.add(&acc, &field.mul(&self[(i, k)], &v[k]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, field: &Field, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| field.add(&self[(i, j)], &other[(i, j)]))
    }

    pub fn sub(&self, field: &Field, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| field.sub(&self[(i, j)], &other[(i, j)]))
    }

    pub fn scale(&self, field: &Field, c: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| field.mul(&self[(i, j)], c))
    }

    pub fn is_zero(&self, field: &Field) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    /// Inverse by Gauss-Jordan elimination; errors on singular input.
    pub fn inverse(&self, field: &Field) -> Result<Mat, Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                field.one()
            } else {
                field.zero()
            }
        });
        let pivots = rref_in_place(field, &mut aug);
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return Err(Error::SingularMatrix);
        }
        Ok(Mat::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut m = self.clone();
        rref_in_place(field, &mut m).len()
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row echelon form in place. Pivot choice is deterministic:
/// scan columns left to right, take the first unused row with a nonzero
/// entry. Returns the pivot columns in order.
pub fn rref_in_place(field: &Field, m: &mut Mat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..m.cols {
        let Some(pr) = (next_row..m.rows).find(|&r| !field.is_zero(&m[(r, col)])) else {
            continue;
        };
        for j in 0..m.cols {
            let t = m[(pr, j)].clone();
            m[(pr, j)] = m[(next_row, j)].clone();
            m[(next_row, j)] = t;
        }
        let inv = field.invert(&m[(next_row, col)]).expect("pivot nonzero");
        for j in 0..m.cols {
            m[(next_row, j)] = field.mul(&m[(next_row, j)], &inv);
        }
        for r in 0..m.rows {
            if r != next_row && !field.is_zero(&m[(r, col)]) {
                let c = m[(r, col)].clone();
                for j in 0..m.cols {
                    let t = field.mul(&c, &m[(next_row, j)]);
                    m[(r, j)] = field.sub(&m[(r, j)], &t);
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == m.rows {
            break;
        }
    }
    pivots
}

/// Outcome of an exact linear solve.
pub struct SolveResult {
    /// One solution, if the system is consistent.
    pub particular: Option<Vec<Scalar>>,
    /// Deterministic basis of the solution space of M x = 0.
    pub kernel: Vec<Vec<Scalar>>,
}

/// Solve M x = b exactly, returning a particular solution (if any) and a
/// kernel basis.
pub fn solve_linear(field: &Field, m: &Mat, b: &[Scalar]) -> SolveResult {
    assert_eq!(m.rows, b.len(), "rhs length");
    let mut aug = Mat::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref_in_place(field, &mut aug);
    let inconsistent = pivots.last().is_some_and(|&c| c == m.cols);
    let main_pivots: Vec<usize> = pivots.iter().copied().filter(|&c| c < m.cols).collect();
    let particular = if inconsistent {
        None
    } else {
        let mut x = vec![field.zero(); m.cols];
        for (k, &c) in main_pivots.iter().enumerate() {
            x[c] = aug[(k, m.cols)].clone();
        }
        Some(x)
    };
    let kernel = kernel_from_rref(field, &aug, &main_pivots, m.cols);
    SolveResult { particular, kernel }
}

/// Deterministic kernel basis of M x = 0.
pub fn nullspace(field: &Field, m: &Mat) -> Vec<Vec<Scalar>> {
    let mut red = m.clone();
    let pivots = rref_in_place(field, &mut red);
    kernel_from_rref(field, &red, &pivots, m.cols)
}

fn kernel_from_rref(field: &Field, red: &Mat, pivots: &[usize], cols: usize) -> Vec<Vec<Scalar>> {
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free_col in 0..cols {
        if pivot_set.contains(&free_col) {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[free_col] = field.one();
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(&red[(k, free_col)]);
        }
        basis.push(v);
    }
    basis
}

/// Coordinate solver for a fixed independent spanning set: selects
/// span-dim many coordinate positions on which the spanning vectors are
/// invertible, so coordinates of vectors in the span can be read off by a
/// small matrix product. Rejects vectors outside the span.
pub struct SpanSolver {
    field: Field,
    ambient: usize,
    span_dim: usize,
    /// selected coordinate positions
    rows: Vec<usize>,
    /// inverse of the spanning matrix restricted to those positions
    inv: Mat,
    basis: Mat,
}

impl SpanSolver {
    /// `columns` are the spanning vectors; they must be independent.
    pub fn new(field: &Field, columns: &[Vec<Scalar>]) -> Result<SpanSolver, Error> {
        let m = columns.len();
        assert!(m > 0, "empty span");
        let n = columns[0].len();
        let basis = Mat::from_fn(n, m, |r, c| columns[c][r].clone());
        // pivot columns of the transpose = independent coordinate positions
        let mut bt = Mat::from_fn(m, n, |r, c| basis[(c, r)].clone());
        let rows = rref_in_place(field, &mut bt);
        if rows.len() != m {
            return Err(Error::InvalidAlgebra("spanning set is dependent".into()));
        }
        let square = Mat::from_fn(m, m, |r, c| basis[(rows[r], c)].clone());
        let inv = square.inverse(field).map_err(|_| {
            Error::InvalidAlgebra("selected coordinate block is singular".into())
        })?;
        Ok(SpanSolver { field: field.clone(), ambient: n, span_dim: m, rows, inv, basis })
    }

    /// Coordinates of v in the spanning set, or NotClosed if outside.
    pub fn coords(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let restricted: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let x = self.inv.mul_vec(f, &restricted);
        let reconstructed = self.basis.mul_vec(f, &x);
        if reconstructed[..] != *v {
            return Err(Error::NotClosed);
        }
        Ok(x)
    }

    pub fn span_dim(&self) -> usize {
        self.span_dim
    }
}

/// Incremental row eliminator maintaining a reduced echelon basis of the
/// row space. Prime fields use a u64 fast path; the output order is
/// identical to the generic path (determinism contract).
pub enum Eliminator {
    ModP(ModPElim),
    Generic(GenericElim),
}

pub struct ModPElim {
    p: u64,
    cols: usize,
    pivot_cols: Vec<usize>,
    rows: Vec<Vec<u64>>,
}

pub struct GenericElim {
    field: Field,
    cols: usize,
    pivot_cols: Vec<usize>,
    rows: Vec<Vec<Scalar>>,
}

impl Eliminator {
    pub fn new(field: &Field, cols: usize) -> Eliminator {
        match field.prime_modulus() {
            // u64 kernel needs p + p^2 to fit in u64
            Some(p) if p < (1 << 31) => {
                Eliminator::ModP(ModPElim { p, cols, pivot_cols: vec![], rows: vec![] })
            }
            _ => Eliminator::Generic(GenericElim {
                field: field.clone(),
                cols,
                pivot_cols: vec![],
                rows: vec![],
            }),
        }
    }

    /// Reduce a row against the current basis and absorb it if independent.
    /// Returns true when the rank grew.
    pub fn add_row(&mut self, field: &Field, row: &[Scalar]) -> bool {
        match self {
            Eliminator::ModP(e) => {
                let r: Vec<u64> = row
                    .iter()
                    .map(|x| match x {
                        Scalar::Mod(m) => *m,
                        _ => panic!("expected prime-field scalar"),
                    })
                    .collect();
                e.add_row(r)
            }
            Eliminator::Generic(e) => {
                let _ = field;
                e.add_row(row.to_vec())
            }
        }
    }

    pub fn add_sparse_row(&mut self, field: &Field, entries: &[(usize, Scalar)]) -> bool {
        let cols = self.cols();
        let mut row = vec![field.zero(); cols];
        for (j, v) in entries {
            row[*j] = field.add(&row[*j], v);
        }
        self.add_row(field, &row)
    }

    pub fn cols(&self) -> usize {
        match self {
            Eliminator::ModP(e) => e.cols,
            Eliminator::Generic(e) => e.cols,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Eliminator::ModP(e) => e.rows.len(),
            Eliminator::Generic(e) => e.rows.len(),
        }
    }

    pub fn pivot_cols(&self) -> &[usize] {
        match self {
            Eliminator::ModP(e) => &e.pivot_cols,
            Eliminator::Generic(e) => &e.pivot_cols,
        }
    }

    /// Current echelon rows as field scalars.
    pub fn rows_scalars(&self, field: &Field) -> Vec<Vec<Scalar>> {
        match self {
            Eliminator::ModP(e) => e
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| Scalar::Mod(x)).collect())
                .collect(),
            Eliminator::Generic(e) => {
                let _ = field;
                e.rows.clone()
            }
        }
    }

    /// Deterministic kernel basis of the accumulated row space.
    pub fn nullspace(&self, field: &Field) -> Vec<Vec<Scalar>> {
        let cols = self.cols();
        let rows = self.rows_scalars(field);
        let pivots = self.pivot_cols().to_vec();
        let red = if rows.is_empty() {
            Mat::zeros(field, 1, cols)
        } else {
            Mat::from_rows(rows)
        };
        kernel_from_rref(field, &red, &pivots, cols)
    }

    /// Does the row lie in the accumulated row space?
    pub fn contains(&self, field: &Field, row: &[Scalar]) -> bool {
        let _ = field;
        match self {
            Eliminator::ModP(e) => {
                let r: Vec<u64> = row
                    .iter()
                    .map(|x| match x {
                        Scalar::Mod(m) => *m,
                        _ => panic!("expected prime-field scalar"),
                    })
                    .collect();
                e.reduce(r).is_none()
            }
            Eliminator::Generic(e) => e.reduce(row.to_vec()).is_none(),
        }
    }
}

impl ModPElim {
    /// Fully reduce; returns None when the row reduces to zero, otherwise
    /// the normalized row and its pivot column.
    fn reduce(&self, mut row: Vec<u64>) -> Option<(usize, Vec<u64>)> {
        let p = self.p;
        for (idx, &pc) in self.pivot_cols.iter().enumerate() {
            let c = row[pc] % p;
            if c != 0 {
                let basis = &self.rows[idx];
                let cp = p - c;
                for j in pc..self.cols {
                    if basis[j] != 0 {
                        row[j] = (row[j] + cp * basis[j]) % p;
                    }
                }
            }
        }
        let lead = (0..self.cols).find(|&j| row[j] % p != 0)?;
        let inv = mod_inv(row[lead] % p, p);
        for x in row.iter_mut() {
            *x = (*x % p * inv) % p;
        }
        Some((lead, row))
    }

    fn add_row(&mut self, row: Vec<u64>) -> bool {
        let Some((lead, row)) = self.reduce(row) else {
            return false;
        };
        // keep full RREF: clear this column from existing rows
        for i in 0..self.rows.len() {
            let c = self.rows[i][lead];
            if c != 0 {
                let cp = self.p - c;
                for j in 0..self.cols {
                    if row[j] != 0 {
                        self.rows[i][j] = (self.rows[i][j] + cp * row[j]) % self.p;
                    }
                }
            }
        }
        // insert keeping pivot columns sorted
        let pos = self.pivot_cols.partition_point(|&c| c < lead);
        self.pivot_cols.insert(pos, lead);
        self.rows.insert(pos, row);
        true
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i128) as u64
}

impl GenericElim {
    fn reduce(&self, mut row: Vec<Scalar>) -> Option<(usize, Vec<Scalar>)> {
        let f = &self.field;
        for (idx, &pc) in self.pivot_cols.iter().enumerate() {
            if !f.is_zero(&row[pc]) {
                let c = row[pc].clone();
                let basis = &self.rows[idx];
                for j in pc..self.cols {
                    if !f.is_zero(&basis[j]) {
                        let t = f.mul(&c, &basis[j]);
                        row[j] = f.sub(&row[j], &t);
                    }
                }
            }
        }
        let lead = (0..self.cols).find(|&j| !f.is_zero(&row[j]))?;
        let inv = f.invert(&row[lead]).expect("lead nonzero");
        for x in row.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        Some((lead, row))
    }

    fn add_row(&mut self, row: Vec<Scalar>) -> bool {
        let Some((lead, row)) = self.reduce(row) else {
            return false;
        };
        let f = self.field.clone();
        for i in 0..self.rows.len() {
            if !f.is_zero(&self.rows[i][lead]) {
                let c = self.rows[i][lead].clone();
                for j in 0..self.cols {
                    if !f.is_zero(&row[j]) {
                        let t = f.mul(&c, &row[j]);
                        self.rows[i][j] = f.sub(&self.rows[i][j], &t);
                    }
                }
            }
        }
        let pos = self.pivot_cols.partition_point(|&c| c < lead);
        self.pivot_cols.insert(pos, lead);
        self.rows.insert(pos, row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf13() -> Field {
        Field::gf(13).unwrap()
    }

    #[test]
    fn identity_system_unique_solution() {
        let f = gf13();
        let m = Mat::identity(&f, 3);
        let b = vec![f.from_i64(4), f.from_i64(0), f.from_i64(12)];
        let res = solve_linear(&f, &m, &b);
        assert_eq!(res.particular.unwrap(), b);
        assert!(res.kernel.is_empty());
    }

    #[test]
    fn zero_matrix_full_kernel() {
        let f = gf13();
        let m = Mat::zeros(&f, 2, 3);
        let res = solve_linear(&f, &m, &[f.zero(), f.zero()]);
        assert_eq!(res.kernel.len(), 3);
        assert!(res.particular.is_some());
    }

    #[test]
    fn rank_one_system_matches_enumeration_oracle() {
        // GF(13), [[1,2],[2,4]], b=(1,2): enumerate all 169 candidates.
        let f = gf13();
        let m = Mat::from_rows(vec![
            vec![f.from_i64(1), f.from_i64(2)],
            vec![f.from_i64(2), f.from_i64(4)],
        ]);
        let mut solutions = vec![];
        for x in 0..13i64 {
            for y in 0..13i64 {
                if (x + 2 * y) % 13 == 1 && (2 * x + 4 * y) % 13 == 2 {
                    solutions.push((x, y));
                }
            }
        }
        assert_eq!(solutions.len(), 13, "solutions form a line");
        let res = solve_linear(&f, &m, &[f.from_i64(1), f.from_i64(2)]);
        let part = res.particular.unwrap();
        // returned solution is on the enumerated line
        let px = match part[0] {
            Scalar::Mod(v) => v as i64,
            _ => unreachable!(),
        };
        let py = match part[1] {
            Scalar::Mod(v) => v as i64,
            _ => unreachable!(),
        };
        assert!(solutions.contains(&(px, py)));
        assert_eq!(res.kernel.len(), 1);
        // kernel vector satisfies M v = 0
        let kv = m.mul_vec(&f, &res.kernel[0]);
        assert!(kv.iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn inconsistent_system_reports_no_solution() {
        let f = gf13();
        let m = Mat::from_rows(vec![
            vec![f.from_i64(1), f.from_i64(2)],
            vec![f.from_i64(2), f.from_i64(4)],
        ]);
        let res = solve_linear(&f, &m, &[f.from_i64(1), f.from_i64(3)]);
        assert!(res.particular.is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::rationals();
        let m = Mat::from_rows(vec![
            vec![f.from_i64(2), f.from_i64(1)],
            vec![f.from_i64(7), f.from_i64(4)],
        ]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Mat::identity(&f, 2));
        let sing = Mat::from_rows(vec![
            vec![f.from_i64(1), f.from_i64(2)],
            vec![f.from_i64(2), f.from_i64(4)],
        ]);
        assert!(sing.inverse(&f).is_err());
    }

    #[test]
    fn eliminator_matches_batch_rref_on_both_backends() {
        for f in [gf13(), Field::rationals()] {
            let rows: Vec<Vec<Scalar>> = vec![
                vec![f.from_i64(1), f.from_i64(2), f.from_i64(3), f.from_i64(4)],
                vec![f.from_i64(2), f.from_i64(4), f.from_i64(6), f.from_i64(8)],
                vec![f.from_i64(0), f.from_i64(1), f.from_i64(1), f.from_i64(0)],
                vec![f.from_i64(5), f.from_i64(0), f.from_i64(0), f.from_i64(1)],
            ];
            let mut elim = Eliminator::new(&f, 4);
            for r in &rows {
                elim.add_row(&f, r);
            }
            let mut m = Mat::from_rows(rows.clone());
            let pivots = rref_in_place(&f, &mut m);
            assert_eq!(elim.rank(), pivots.len());
            assert_eq!(elim.pivot_cols(), &pivots[..]);
            let elim_rows = elim.rows_scalars(&f);
            for (k, row) in elim_rows.iter().enumerate() {
                assert_eq!(row[..], m.row(k)[..], "row {k} differs on {f:?}");
            }
            // kernel vectors annihilate all original rows
            for v in elim.nullspace(&f) {
                for r in &rows {
                    let mut acc = f.zero();
                    for (a, b) in r.iter().zip(&v) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                    assert!(f.is_zero(&acc));
                }
            }
        }
    }
}
