//! Structure-constant algebras over an exact field, linear maps on them,
//! derivation spaces, automorphism checks, bracket closures, and
//! nilpotent exponentials.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::{Field, Scalar};
use crate::linalg::{rref_in_place, Eliminator, Mat};

/// Linear maps are plain matrices; column j is the image of basis vector j.
pub type LinearMap = Mat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFlags {
    pub commutative: bool,
    pub anticommutative: bool,
    pub unit: Option<usize>,
}

impl AlgebraFlags {
    pub fn plain() -> Self {
        AlgebraFlags { commutative: false, anticommutative: false, unit: None }
    }
    pub fn unital(idx: usize) -> Self {
        AlgebraFlags { commutative: false, anticommutative: false, unit: Some(idx) }
    }
    pub fn commutative_unital(idx: usize) -> Self {
        AlgebraFlags { commutative: true, anticommutative: false, unit: Some(idx) }
    }
    pub fn lie() -> Self {
        AlgebraFlags { commutative: false, anticommutative: true, unit: None }
    }
}

/// Finite-dimensional algebra given by sparse structure constants in a
/// named basis. Commutative (resp. anticommutative) algebras store only
/// the products with i <= j (resp. i < j).
#[derive(Debug, Clone)]
pub struct Algebra {
    pub field: Field,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub flags: AlgebraFlags,
    /// canonical half (or full table when no symmetry flag): index i*dim+j
    products: Vec<Vec<(usize, Scalar)>>,
}

impl Algebra {
    /// Build from a full product table; symmetry flags are verified and
    /// then used to halve the storage.
    pub fn from_table(
        field: Field,
        basis_names: Vec<String>,
        flags: AlgebraFlags,
        table: impl Fn(usize, usize) -> Vec<(usize, Scalar)>,
    ) -> Result<Algebra, Error> {
        let dim = basis_names.len();
        let mut products = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let entry = normalize_sparse(&field, table(i, j), dim)?;
                if flags.commutative && i > j {
                    let mirror = normalize_sparse(&field, table(j, i), dim)?;
                    if entry != mirror {
                        return Err(Error::InvalidAlgebra(format!(
                            "commutativity fails at ({i},{j})"
                        )));
                    }
                    continue;
                }
                if flags.anticommutative {
                    if i > j {
                        let mirror = negate_sparse(&field, &normalize_sparse(&field, table(j, i), dim)?);
                        if entry != mirror {
                            return Err(Error::InvalidAlgebra(format!(
                                "anticommutativity fails at ({i},{j})"
                            )));
                        }
                        continue;
                    }
                    if i == j && !entry.is_empty() {
                        return Err(Error::InvalidAlgebra(format!("nonzero square at ({i},{i})")));
                    }
                }
                products[i * dim + j] = entry;
            }
        }
        let a = Algebra { field, dim, basis_names, flags, products };
        a.check_unit()?;
        Ok(a)
    }

    fn check_unit(&self) -> Result<(), Error> {
        if let Some(u) = self.flags.unit {
            for i in 0..self.dim {
                let mut ei = vec![self.field.zero(); self.dim];
                ei[i] = self.field.one();
                let mut eu = vec![self.field.zero(); self.dim];
                eu[u] = self.field.one();
                if self.multiply(&eu, &ei) != ei || self.multiply(&ei, &eu) != ei {
                    return Err(Error::InvalidAlgebra(format!(
                        "flagged unit {u} does not act as identity on basis vector {i}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Product of basis vectors i and j as a sparse list.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        if self.flags.commutative && i > j {
            return self.products[j * self.dim + i].clone();
        }
        if self.flags.anticommutative {
            if i == j {
                return Vec::new();
            }
            if i > j {
                return negate_sparse(&self.field, &self.products[j * self.dim + i]);
            }
        }
        self.products[i * self.dim + j].clone()
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "left factor dimension");
        assert_eq!(y.len(), self.dim, "right factor dimension");
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, coeff) in self.basis_product(i, j) {
                    out[k] = f.add(&out[k], &f.mul(&c, &coeff));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn unit_vector(&self) -> Option<Vec<Scalar>> {
        self.flags.unit.map(|u| self.basis_vector(u))
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    /// Left-multiplication operator L_x.
    pub fn left_mul(&self, x: &[Scalar]) -> LinearMap {
        let mut m = Mat::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.multiply(x, &self.basis_vector(j));
            for (k, v) in col.into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        m
    }

    /// Right-multiplication operator R_x.
    pub fn right_mul(&self, x: &[Scalar]) -> LinearMap {
        let mut m = Mat::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.multiply(&self.basis_vector(j), x);
            for (k, v) in col.into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        m
    }

    /// Conjugate the structure constants so that multiplication commutes
    /// with the change of basis P (columns = new basis in old coordinates).
    pub fn change_basis(&self, p: &LinearMap, new_names: Vec<String>) -> Result<Algebra, Error> {
        assert_eq!(p.rows, self.dim);
        assert_eq!(p.cols, self.dim);
        let p_inv = p.inverse(&self.field).map_err(|_| Error::SingularMatrix)?;
        let f = self.field.clone();
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| p.column(j)).collect();
        let mut new_flags = self.flags.clone();
        new_flags.unit = None;
        if let Some(u) = self.flags.unit {
            // the unit survives the flag only if it is a new basis vector
            let coords = p_inv.mul_vec(&f, &self.basis_vector(u));
            let nonzero: Vec<usize> =
                (0..self.dim).filter(|&k| !f.is_zero(&coords[k])).collect();
            if nonzero.len() == 1 && coords[nonzero[0]] == f.one() {
                new_flags.unit = Some(nonzero[0]);
            }
        }
        Algebra::from_table(f.clone(), new_names, new_flags, |a, b| {
            let prod = self.multiply(&cols[a], &cols[b]);
            let coords = p_inv.mul_vec(&f, &prod);
            coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .collect()
        })
    }
}

fn normalize_sparse(
    field: &Field,
    entries: Vec<(usize, Scalar)>,
    dim: usize,
) -> Result<Vec<(usize, Scalar)>, Error> {
    let mut dense = vec![field.zero(); dim];
    for (k, c) in entries {
        if k >= dim {
            return Err(Error::InvalidAlgebra(format!("basis index {k} out of range")));
        }
        dense[k] = field.add(&dense[k], &c);
    }
    Ok(dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !field.is_zero(c))
        .collect())
}

fn negate_sparse(field: &Field, entries: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    entries.iter().map(|(k, c)| (*k, field.neg(c))).collect()
}

/// Symmetric bilinear form on an algebra's underlying space.
#[derive(Debug, Clone)]
pub struct BilinearForm {
    pub mat: Mat,
}

impl BilinearForm {
    pub fn new(field: &Field, mat: Mat) -> Result<BilinearForm, Error> {
        assert_eq!(mat.rows, mat.cols);
        for i in 0..mat.rows {
            for j in 0..i {
                if mat[(i, j)] != mat[(j, i)] {
                    let _ = field;
                    return Err(Error::InvalidAlgebra("form matrix not symmetric".into()));
                }
            }
        }
        Ok(BilinearForm { mat })
    }

    pub fn eval(&self, field: &Field, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = field.zero();
        for i in 0..self.mat.rows {
            if field.is_zero(&x[i]) {
                continue;
            }
            for j in 0..self.mat.cols {
                if field.is_zero(&y[j]) || field.is_zero(&self.mat[(i, j)]) {
                    continue;
                }
                acc = field.add(&acc, &field.mul(&x[i], &field.mul(&self.mat[(i, j)], &y[j])));
            }
        }
        acc
    }

    pub fn is_nondegenerate(&self, field: &Field) -> bool {
        self.mat.rank(field) == self.mat.rows
    }
}

/// A basis of Der(A) as linear maps, echelonized deterministically.
#[derive(Debug, Clone)]
pub struct DerivationSpace {
    pub basis: Vec<LinearMap>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Leibniz identity check: d(xy) = d(x)y + x d(y) on all basis pairs.
pub fn is_derivation(a: &Algebra, d: &LinearMap) -> bool {
    assert_eq!(d.rows, a.dim);
    assert_eq!(d.cols, a.dim);
    let f = &a.field;
    let cols: Vec<Vec<Scalar>> = (0..a.dim).map(|j| d.column(j)).collect();
    for i in 0..a.dim {
        for j in 0..a.dim {
            let prod = a.multiply(&a.basis_vector(i), &a.basis_vector(j));
            let lhs = d.mul_vec(f, &prod);
            let t1 = a.multiply(&cols[i], &a.basis_vector(j));
            let t2 = a.multiply(&a.basis_vector(i), &cols[j]);
            for k in 0..a.dim {
                if lhs[k] != f.add(&t1[k], &t2[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Multiplicativity plus invertibility check.
pub fn is_automorphism(a: &Algebra, phi: &LinearMap) -> bool {
    assert_eq!(phi.rows, a.dim);
    assert_eq!(phi.cols, a.dim);
    if phi.rank(&a.field) != a.dim {
        return false;
    }
    let f = &a.field;
    let cols: Vec<Vec<Scalar>> = (0..a.dim).map(|j| phi.column(j)).collect();
    for i in 0..a.dim {
        for j in 0..a.dim {
            let prod = a.multiply(&a.basis_vector(i), &a.basis_vector(j));
            let lhs = phi.mul_vec(f, &prod);
            let rhs = a.multiply(&cols[i], &cols[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Multiplicative bijection between two algebras over the same field.
pub fn is_isomorphism(a: &Algebra, b: &Algebra, phi: &LinearMap) -> bool {
    assert_eq!(a.field, b.field);
    assert_eq!(phi.cols, a.dim);
    assert_eq!(phi.rows, b.dim);
    if a.dim != b.dim || phi.rank(&a.field) != a.dim {
        return false;
    }
    let f = &a.field;
    let cols: Vec<Vec<Scalar>> = (0..a.dim).map(|j| phi.column(j)).collect();
    for i in 0..a.dim {
        for j in 0..a.dim {
            let lhs = phi.mul_vec(f, &a.multiply(&a.basis_vector(i), &a.basis_vector(j)));
            let rhs = b.multiply(&cols[i], &cols[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// d1 d2 - d2 d1.
pub fn bracket(field: &Field, d1: &LinearMap, d2: &LinearMap) -> LinearMap {
    d1.mul(field, d2).sub(field, &d2.mul(field, d1))
}

/// Exact nullspace of the Leibniz system, echelonized deterministically.
///
/// Equations are assembled sparsely and absorbed incrementally; once the
/// rank stagnates the remaining equations are verified against the
/// current kernel instead (and absorbed only if they fail), which keeps
/// the heavy Albert case inside its time budget.
pub fn derivation_space(a: &Algebra) -> DerivationSpace {
    let pairs = canonical_pairs(a);
    let equations = pairs
        .into_iter()
        .flat_map(|(i, j)| leibniz_equations(a, i, j));
    nullspace_from_equations(a, equations)
}

fn canonical_pairs(a: &Algebra) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            if a.flags.commutative && i > j {
                continue;
            }
            if a.flags.anticommutative && i >= j {
                continue;
            }
            pairs.push((i, j));
        }
    }
    pairs
}

/// The Leibniz equations for the basis pair (i, j), one per output
/// coordinate, over the n^2 unknowns d[r][c] (index r*n + c).
fn leibniz_equations(a: &Algebra, i: usize, j: usize) -> Vec<Vec<(usize, Scalar)>> {
    let n = a.dim;
    let f = &a.field;
    let prod_ij = a.basis_product(i, j);
    let mut eqs = Vec::with_capacity(n);
    for m in 0..n {
        let mut entries: Vec<(usize, Scalar)> = Vec::new();
        // d(b_i b_j)_m = sum_k c^k_ij d[m][k]
        for (k, c) in &prod_ij {
            entries.push((m * n + k, c.clone()));
        }
        // -(d(b_i) b_j)_m = -sum_k c^m_kj d[k][i]
        for k in 0..n {
            for (mm, c) in a.basis_product(k, j) {
                if mm == m {
                    entries.push((k * n + i, f.neg(&c)));
                }
            }
        }
        // -(b_i d(b_j))_m = -sum_k c^m_ik d[k][j]
        for k in 0..n {
            for (mm, c) in a.basis_product(i, k) {
                if mm == m {
                    entries.push((k * n + j, f.neg(&c)));
                }
            }
        }
        eqs.push(entries);
    }
    eqs
}

fn nullspace_from_equations(
    a: &Algebra,
    equations: impl Iterator<Item = Vec<(usize, Scalar)>>,
) -> DerivationSpace {
    let n = a.dim;
    let f = &a.field;
    let mut elim = Eliminator::new(f, n * n);
    let mut kernel: Option<Vec<Vec<Scalar>>> = None;
    let mut stagnant = 0usize;
    let threshold = 2 * n;
    for entries in equations {
        if let Some(kern) = &kernel {
            if kernel_satisfies(f, kern, &entries) {
                continue;
            }
            kernel = None;
        }
        let grew = elim.add_sparse_row(f, &entries);
        if grew {
            stagnant = 0;
        } else {
            stagnant += 1;
            if stagnant >= threshold && kernel.is_none() {
                kernel = Some(elim.nullspace(f));
            }
        }
    }
    let vectors = match kernel {
        Some(k) => k,
        None => elim.nullspace(f),
    };
    let basis = vectors
        .into_iter()
        .map(|v| Mat::from_fn(n, n, |r, c| v[r * n + c].clone()))
        .collect();
    DerivationSpace { basis }
}

fn kernel_satisfies(f: &Field, kernel: &[Vec<Scalar>], entries: &[(usize, Scalar)]) -> bool {
    kernel.iter().all(|v| {
        let mut acc = f.zero();
        for (idx, c) in entries {
            if !f.is_zero(&v[*idx]) {
                acc = f.add(&acc, &f.mul(c, &v[*idx]));
            }
        }
        f.is_zero(&acc)
    })
}

/// Derivation space of an anticommutative algebra computed from Leibniz
/// constraints against a generating set only. Valid when the Jacobi
/// identity holds and the given vectors generate the algebra; both facts
/// are checked here.
pub fn derivation_space_on_generators(
    a: &Algebra,
    generators: &[Vec<Scalar>],
) -> Result<DerivationSpace, Error> {
    if !a.flags.anticommutative {
        return Err(Error::InvalidAlgebra(
            "generator-pair derivation solver requires a Lie algebra".into(),
        ));
    }
    check_jacobi(a)?;
    check_generating(a, generators)?;
    let n = a.dim;
    let f = a.field.clone();
    let mut equations: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for g in generators {
        let l_g_neg = a.right_mul(g); // x -> [x, g]
        for i in 0..n {
            // d([b_i, g]) = [d(b_i), g] + [b_i, d(g)]
            let w = l_g_neg.column(i);
            for m in 0..n {
                let mut entries: Vec<(usize, Scalar)> = Vec::new();
                for (k, wk) in w.iter().enumerate() {
                    if !f.is_zero(wk) {
                        entries.push((m * n + k, wk.clone()));
                    }
                }
                // -[d(b_i), g]_m = -sum_k d[k][i] [b_k, g]_m
                for k in 0..n {
                    let c = &l_g_neg[(m, k)];
                    if !f.is_zero(c) {
                        entries.push((k * n + i, f.neg(c)));
                    }
                }
                // -[b_i, d(g)]_m = -sum_j g_j sum_k d[k][j] [b_i, b_k]_m
                for (j, gj) in g.iter().enumerate() {
                    if f.is_zero(gj) {
                        continue;
                    }
                    for k in 0..n {
                        for (mm, c) in a.basis_product(i, k) {
                            if mm == m {
                                entries.push((k * n + j, f.neg(&f.mul(gj, &c))));
                            }
                        }
                    }
                }
                equations.push(entries);
            }
        }
    }
    Ok(nullspace_from_equations(a, equations.into_iter()))
}

fn check_jacobi(a: &Algebra) -> Result<(), Error> {
    let f = &a.field;
    for i in 0..a.dim {
        for j in (i + 1)..a.dim {
            let bij = a.multiply(&a.basis_vector(i), &a.basis_vector(j));
            for k in (j + 1)..a.dim {
                let bjk = a.multiply(&a.basis_vector(j), &a.basis_vector(k));
                let bik = a.multiply(&a.basis_vector(i), &a.basis_vector(k));
                // [[i,j],k] + [[j,k],i] + [[k,i],j] with [[k,i],j] = [j,[i,k]]
                let t1 = a.multiply(&bij, &a.basis_vector(k));
                let t2 = a.multiply(&bjk, &a.basis_vector(i));
                let t3 = a.multiply(&a.basis_vector(j), &bik);
                for m in 0..a.dim {
                    let s = f.add(&t1[m], &f.add(&t2[m], &t3[m]));
                    if !f.is_zero(&s) {
                        return Err(Error::InvalidAlgebra(format!(
                            "Jacobi identity fails on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Do the vectors generate the whole algebra (closure of their span
/// under multiplication)?
pub fn generates(a: &Algebra, vectors: &[Vec<Scalar>]) -> bool {
    let f = &a.field;
    let mut elim = Eliminator::new(f, a.dim);
    let mut frontier: Vec<Vec<Scalar>> = Vec::new();
    for g in vectors {
        if elim.add_row(f, g) {
            frontier.push(g.clone());
        }
    }
    while !frontier.is_empty() && elim.rank() < a.dim {
        let mut next = Vec::new();
        let current = elim.rows_scalars(f);
        for v in &frontier {
            for w in &current {
                let b = a.multiply(v, w);
                if elim.add_row(f, &b) {
                    next.push(b);
                }
            }
        }
        frontier = next;
    }
    elim.rank() == a.dim
}

fn check_generating(a: &Algebra, generators: &[Vec<Scalar>]) -> Result<(), Error> {
    if !generates(a, generators) {
        return Err(Error::InvalidAlgebra(
            "given vectors do not generate the algebra".into(),
        ));
    }
    Ok(())
}

/// Build an anticommutative algebra whose structure constants express the
/// brackets of the given maps in their own span. Errors if the span is
/// not closed.
pub fn close_under_bracket(
    field: &Field,
    maps: &[LinearMap],
    names: Vec<String>,
) -> Result<Algebra, Error> {
    let m = maps.len();
    assert!(m > 0, "empty basis");
    let solver = crate::linalg::SpanSolver::new(
        field,
        &maps.iter().map(flatten_map).collect::<Vec<_>>(),
    )
    .map_err(|_| Error::InvalidAlgebra("bracket-closure basis is dependent".into()))?;
    let mut constants: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m * m];
    for i in 0..m {
        for j in (i + 1)..m {
            let br = bracket(field, &maps[i], &maps[j]);
            let coords = solver.coords(&flatten_map(&br))?;
            constants[i * m + j] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !field.is_zero(c))
                .collect();
        }
    }
    Algebra::from_table(field.clone(), names, AlgebraFlags::lie(), |i, j| {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => constants[i * m + j].clone(),
            Ordering::Equal => Vec::new(),
            Ordering::Greater => negate_sparse(field, &constants[j * m + i]),
        }
    })
}

/// Row-major flattening of a linear map.
pub fn flatten_map(m: &LinearMap) -> Vec<Scalar> {
    (0..m.rows * m.cols)
        .map(|i| m[(i / m.cols, i % m.cols)].clone())
        .collect()
}

/// exp(N) = I + N + N^2/2 for N with N^3 = 0; characteristic must not be 2.
pub fn exp_nilpotent(field: &Field, n: &LinearMap) -> Result<LinearMap, Error> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic {
            context: "nilpotent exponential".into(),
            characteristic: 2,
        });
    }
    let n2 = n.mul(field, n);
    let n3 = n2.mul(field, n);
    if !n3.is_zero(field) {
        return Err(Error::NotNilpotent);
    }
    let half = field.half()?;
    Ok(Mat::identity(field, n.rows)
        .add(field, n)
        .add(field, &n2.scale(field, &half)))
}

// ---------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub field: crate::field::FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    /// entries [i, j, k, coefficient-string]
    pub products: Vec<(usize, usize, usize, String)>,
    pub flags: AlgebraFlags,
}

impl Algebra {
    pub fn to_json(&self, name: &str) -> AlgebraJson {
        let mut products = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.flags.commutative && i > j {
                    continue;
                }
                if self.flags.anticommutative && i >= j {
                    continue;
                }
                for (k, c) in self.basis_product(i, j) {
                    products.push((i, j, k, self.field.to_string(&c)));
                }
            }
        }
        AlgebraJson {
            name: name.to_string(),
            field: self.field.spec().clone(),
            dim: self.dim,
            basis: self.basis_names.clone(),
            products,
            flags: self.flags.clone(),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Algebra, Error> {
        if j.basis.len() != j.dim {
            return Err(Error::InvalidAlgebra("basis length != dim".into()));
        }
        let field = Field::new(j.field.clone())?;
        let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); j.dim * j.dim];
        for (i, jj, k, s) in &j.products {
            if *i >= j.dim || *jj >= j.dim || *k >= j.dim {
                return Err(Error::InvalidAlgebra("product index out of range".into()));
            }
            table[i * j.dim + jj].push((*k, field.parse(s)?));
        }
        // mirror the canonical half when a symmetry flag is present
        let full = |a: usize, b: usize| -> Vec<(usize, Scalar)> {
            if j.flags.commutative && a > b {
                table[b * j.dim + a].clone()
            } else if j.flags.anticommutative && a > b {
                negate_sparse(&field, &table[b * j.dim + a])
            } else {
                table[a * j.dim + b].clone()
            }
        };
        Algebra::from_table(field.clone(), j.basis.clone(), j.flags.clone(), full)
    }
}

/// Deterministic random vector for fuzz suites.
pub fn sample_vector(field: &Field, dim: usize, rng: &mut impl rand::Rng) -> Vec<Scalar> {
    (0..dim).map(|_| field.sample(rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    /// 2-dim algebra F x F (componentwise), unit = e0 + e1 is not a basis
    /// vector, so build the 1-dim unital case separately.
    fn one_dim_unital(field: &Field) -> Algebra {
        Algebra::from_table(
            field.clone(),
            vec!["1".into()],
            AlgebraFlags::commutative_unital(0),
            |_, _| vec![(0, field.one())],
        )
        .unwrap()
    }

    #[test]
    fn one_dim_unital_has_no_derivations() {
        // d(1) = d(1*1) = 2 d(1) forces d = 0.
        let f = Field::gf(13).unwrap();
        let a = one_dim_unital(&f);
        assert_eq!(derivation_space(&a).dim(), 0);
    }

    #[test]
    fn zero_times_anything_is_zero() {
        let f = Field::gf(13).unwrap();
        let a = one_dim_unital(&f);
        let z = a.zero_vector();
        let y = vec![f.from_i64(7)];
        assert_eq!(a.multiply(&z, &y), z);
    }

    #[test]
    fn identity_map_is_automorphism() {
        let f = Field::rationals();
        let a = one_dim_unital(&f);
        assert!(is_automorphism(&a, &Mat::identity(&f, 1)));
    }

    #[test]
    fn exp_nilpotent_cases() {
        let f = Field::rationals();
        // exp(0) = I
        let zero = Mat::zeros(&f, 3, 3);
        assert_eq!(exp_nilpotent(&f, &zero).unwrap(), Mat::identity(&f, 3));
        // strictly upper triangular with N^2 != 0
        let mut n = Mat::zeros(&f, 3, 3);
        n[(0, 1)] = f.one();
        n[(1, 2)] = f.one();
        let e = exp_nilpotent(&f, &n).unwrap();
        let eneg = exp_nilpotent(&f, &n.scale(&f, &f.from_i64(-1))).unwrap();
        assert_eq!(e.mul(&f, &eneg), Mat::identity(&f, 3));
        // non-nilpotent input rejected
        assert!(matches!(
            exp_nilpotent(&f, &Mat::identity(&f, 2)),
            Err(Error::NotNilpotent)
        ));
        // characteristic 2 rejected
        let f2 = Field::gf(2).unwrap();
        assert!(exp_nilpotent(&f2, &Mat::zeros(&f2, 1, 1)).is_err());
    }

    #[test]
    fn bracket_of_map_with_itself_vanishes() {
        let f = Field::gf(13).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let d = Mat::from_fn(4, 4, |_, _| f.sample(&mut rng));
        assert!(bracket(&f, &d, &d).is_zero(&f));
    }

    #[test]
    fn change_basis_round_trip() {
        let f = Field::gf(13).unwrap();
        let a = one_dim_unital(&f);
        let p = Mat::identity(&f, 1);
        let b = a.change_basis(&p, vec!["1".into()]).unwrap();
        assert_eq!(b.basis_product(0, 0), a.basis_product(0, 0));
    }
}
