//! The split Cayley algebra with its norm and conjugation, the
//! Cayley-Dickson doubling process, the para-Hurwitz product, the order-3
//! twist giving the Okubo algebra, and related-triple machinery.

use crate::algebra::{
    is_isomorphism, Algebra, AlgebraFlags, BilinearForm, LinearMap,
};
use crate::error::Error;
use crate::field::{Field, Scalar};
use crate::linalg::{solve_linear, Mat};

/// Canonical basis order of the split Cayley algebra, frozen project-wide:
/// every degree table indexes it.
pub const CAYLEY_BASIS: [&str; 8] = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"];

/// Multiplication table of the split Cayley algebra in the canonical
/// basis order. Entry `TABLE[i][j]` encodes the product of basis vectors
/// i and j: 0 for zero, otherwise sign * (index + 1).
const CAYLEY_TABLE: [[i8; 8]; 8] = [
    [1, 0, 3, 4, 5, 0, 0, 0],
    [0, 2, 0, 0, 0, 6, 7, 8],
    [0, 3, 0, 8, -7, -1, 0, 0],
    [0, 4, -8, 0, 6, 0, -1, 0],
    [0, 5, 7, -6, 0, 0, 0, -1],
    [6, 0, -2, 0, 0, 0, 5, -4],
    [7, 0, 0, -2, 0, -5, 0, 3],
    [8, 0, 0, 0, -2, 4, -3, 0],
];

/// A composition algebra: the underlying algebra, the polar form of its
/// norm, and (when unital) the standard conjugation.
#[derive(Debug, Clone)]
pub struct CompositionData {
    pub algebra: Algebra,
    /// polar form n(x, y) = n(x+y) - n(x) - n(y)
    pub norm: BilinearForm,
    pub conjugation: Option<LinearMap>,
    /// the multiplicative unit in coordinates; None for the Okubo algebra
    pub unit: Option<Vec<Scalar>>,
}

impl CompositionData {
    pub fn field(&self) -> &Field {
        &self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// Quadratic norm n(x) = polar(x, x) / 2 (characteristic != 2).
    pub fn norm_of(&self, x: &[Scalar]) -> Scalar {
        let f = self.field();
        let nxx = self.norm.eval(f, x, x);
        f.div(&nxx, &f.from_i64(2)).expect("characteristic 2 excluded")
    }

    pub fn polar(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.norm.eval(self.field(), x, y)
    }

    pub fn conjugate(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.conjugation
            .as_ref()
            .expect("conjugation requires a unit")
            .mul_vec(self.field(), x)
    }

    /// Trace n(x, 1).
    pub fn trace_of(&self, x: &[Scalar]) -> Scalar {
        let unit = self.unit_element();
        self.polar(x, &unit)
    }

    /// Para-Hurwitz product on a unital composition algebra.
    pub fn para_product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.multiply(&self.conjugate(x), &self.conjugate(y))
    }

    /// Left para-Hurwitz multiplication operator l_x.
    pub fn para_left(&self, x: &[Scalar]) -> LinearMap {
        let mut m = Mat::zeros(self.field(), self.dim(), self.dim());
        for j in 0..self.dim() {
            let col = self.para_product(x, &self.algebra.basis_vector(j));
            for (k, v) in col.into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        m
    }

    /// Right para-Hurwitz multiplication operator r_x.
    pub fn para_right(&self, x: &[Scalar]) -> LinearMap {
        let mut m = Mat::zeros(self.field(), self.dim(), self.dim());
        for j in 0..self.dim() {
            let col = self.para_product(&self.algebra.basis_vector(j), x);
            for (k, v) in col.into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        m
    }
}

fn sparse_from_code(field: &Field, code: i8) -> Vec<(usize, Scalar)> {
    if code == 0 {
        return vec![];
    }
    let idx = (code.unsigned_abs() - 1) as usize;
    let c = if code > 0 { field.one() } else { field.neg(&field.one()) };
    vec![(idx, c)]
}

/// The split Cayley algebra over a field of characteristic != 2, with the
/// norm whose polar form pairs e1 with e2 and each u_i with v_i.
pub fn cayley_split(field: &Field) -> Result<CompositionData, Error> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic {
            context: "split Cayley algebra".into(),
            characteristic: 2,
        });
    }
    let algebra = Algebra::from_table(
        field.clone(),
        CAYLEY_BASIS.iter().map(|s| s.to_string()).collect(),
        AlgebraFlags::plain(),
        |i, j| sparse_from_code(field, CAYLEY_TABLE[i][j]),
    )?;
    let mut polar = Mat::zeros(field, 8, 8);
    polar[(0, 1)] = field.one();
    polar[(1, 0)] = field.one();
    for i in 0..3 {
        polar[(2 + i, 5 + i)] = field.one();
        polar[(5 + i, 2 + i)] = field.one();
    }
    let norm = BilinearForm::new(field, polar)?;
    // conjugation: x -> n(x,1) 1 - x with 1 = e1 + e2
    let mut conj = Mat::zeros(field, 8, 8);
    conj[(1, 0)] = field.one();
    conj[(0, 1)] = field.one();
    for i in 2..8 {
        conj[(i, i)] = field.from_i64(-1);
    }
    // the unit of the split model is e1 + e2
    let mut unit = vec![field.zero(); 8];
    unit[0] = field.one();
    unit[1] = field.one();
    Ok(CompositionData { algebra, norm, conjugation: Some(conj), unit: Some(unit) })
}

impl CompositionData {
    /// The multiplicative unit as a coordinate vector; panics for the
    /// Okubo algebra, which has none.
    pub fn unit_element(&self) -> Vec<Scalar> {
        self.unit.clone().expect("algebra has no unit")
    }
}

/// Evaluates the degree-2 identity x^2 - n(x,1) x + n(x) 1 = 0.
pub fn cayley_hamilton_check(cd: &CompositionData, x: &[Scalar]) -> bool {
    let f = cd.field();
    let unit = cd.unit_element();
    let x2 = cd.algebra.multiply(x, x);
    let tr = cd.norm.eval(f, x, &unit);
    let n = cd.norm_of(x);
    for k in 0..cd.dim() {
        let lhs = f.add(
            &f.sub(&x2[k], &f.mul(&tr, &x[k])),
            &f.mul(&n, &unit[k]),
        );
        if !f.is_zero(&lhs) {
            return false;
        }
    }
    true
}

/// Conjugation as an explicit vector operation for algebras whose unit is
/// an arbitrary vector: x -> n(x,1) 1 - x.
fn conj_vector(cd: &CompositionData, x: &[Scalar]) -> Vec<Scalar> {
    match &cd.conjugation {
        Some(c) => c.mul_vec(cd.field(), x),
        None => {
            let f = cd.field();
            let unit = cd.unit_element();
            let tr = cd.norm.eval(f, x, &unit);
            (0..cd.dim())
                .map(|k| f.sub(&f.mul(&tr, &unit[k]), &x[k]))
                .collect()
        }
    }
}

/// Cayley-Dickson doubling of a unital composition algebra: basis doubles,
/// products follow (a+bu)(c+du) = (ac - alpha conj(d) b) + (da + b conj(c)) u,
/// norm n(a+bu) = n(a) + alpha n(b). The Z_2 degree marks are 0 on the old
/// block and 1 on the new one.
pub fn cayley_dickson(
    q: &CompositionData,
    alpha: &Scalar,
    gen_name: &str,
) -> Result<(CompositionData, Vec<u8>), Error> {
    let f = q.field().clone();
    if f.is_zero(alpha) {
        return Err(Error::InvalidAlgebra("doubling parameter must be nonzero".into()));
    }
    let n = q.dim();
    let unit_vec = q.unit.clone().ok_or_else(|| {
        Error::InvalidAlgebra("Cayley-Dickson doubling requires a unital algebra".into())
    })?;
    // naming needs the unit to be a coordinate vector, which holds along
    // the doubling chain from the ground field
    let nonzero: Vec<usize> = (0..n).filter(|&k| !f.is_zero(&unit_vec[k])).collect();
    let unit_idx = match (nonzero.len(), nonzero.first()) {
        (1, Some(&k)) if unit_vec[k] == f.one() => k,
        _ => {
            return Err(Error::InvalidAlgebra(
                "doubling expects the unit to be a basis vector".into(),
            ))
        }
    };
    let mut names = q.algebra.basis_names.clone();
    for (j, b) in q.algebra.basis_names.iter().enumerate() {
        names.push(if j == unit_idx {
            gen_name.to_string()
        } else {
            format!("{b}{gen_name}")
        });
    }
    let conj_cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| conj_vector(q, &q.algebra.basis_vector(j)))
        .collect();
    let table = |i: usize, j: usize| -> Vec<(usize, Scalar)> {
        let mut out: Vec<(usize, Scalar)> = Vec::new();
        match (i < n, j < n) {
            (true, true) => {
                out.extend(q.algebra.basis_product(i, j));
            }
            (true, false) => {
                // a (du) = (d a) u
                let prod = q.algebra.multiply(&q.algebra.basis_vector(j - n), &q.algebra.basis_vector(i));
                for (k, c) in prod.into_iter().enumerate() {
                    if !f.is_zero(&c) {
                        out.push((k + n, c));
                    }
                }
            }
            (false, true) => {
                // (bu) c = (b conj(c)) u
                let prod = q.algebra.multiply(&q.algebra.basis_vector(i - n), &conj_cols[j]);
                for (k, c) in prod.into_iter().enumerate() {
                    if !f.is_zero(&c) {
                        out.push((k + n, c));
                    }
                }
            }
            (false, false) => {
                // (bu)(du) = -alpha (conj(d) b)
                let prod = q
                    .algebra
                    .multiply(&conj_cols[j - n], &q.algebra.basis_vector(i - n));
                let malpha = f.neg(alpha);
                for (k, c) in prod.into_iter().enumerate() {
                    if !f.is_zero(&c) {
                        out.push((k, f.mul(&malpha, &c)));
                    }
                }
            }
        }
        out
    };
    let algebra = Algebra::from_table(
        f.clone(),
        names,
        AlgebraFlags::unital(unit_idx),
        table,
    )?;
    let mut polar = Mat::zeros(&f, 2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            polar[(i, j)] = q.norm.mat[(i, j)].clone();
            polar[(i + n, j + n)] = f.mul(alpha, &q.norm.mat[(i, j)]);
        }
    }
    let norm = BilinearForm::new(&f, polar)?;
    // conj(a + bu) = conj(a) - bu
    let mut conj = Mat::zeros(&f, 2 * n, 2 * n);
    for j in 0..n {
        for (k, c) in conj_cols[j].iter().enumerate() {
            conj[(k, j)] = c.clone();
        }
        conj[(j + n, j + n)] = f.from_i64(-1);
    }
    let degrees: Vec<u8> = (0..2 * n).map(|i| u8::from(i >= n)).collect();
    let mut new_unit = vec![f.zero(); 2 * n];
    new_unit[unit_idx] = f.one();
    Ok((
        CompositionData { algebra, norm, conjugation: Some(conj), unit: Some(new_unit) },
        degrees,
    ))
}

/// The one-dimensional composition algebra F itself, the start of the
/// doubling chain.
pub fn ground_field_composition(field: &Field) -> CompositionData {
    let algebra = Algebra::from_table(
        field.clone(),
        vec!["1".into()],
        AlgebraFlags::commutative_unital(0),
        |_, _| vec![(0, field.one())],
    )
    .unwrap();
    let mut polar = Mat::zeros(field, 1, 1);
    polar[(0, 0)] = field.from_i64(2); // n(1) = 1, polar(1,1) = 2
    let norm = BilinearForm::new(field, polar).unwrap();
    let conj = Mat::identity(field, 1);
    CompositionData { algebra, norm, conjugation: Some(conj), unit: Some(vec![field.one()]) }
}

/// The triple doubling CD(F, a1, a2, a3) with generator names w1, w2, w3,
/// together with its Z_2^3 degree table.
pub fn cd_chain(field: &Field, alphas: [&Scalar; 3]) -> Result<(CompositionData, Vec<[u8; 3]>), Error> {
    let base = ground_field_composition(field);
    let (q1, d1) = cayley_dickson(&base, alphas[0], "w1")?;
    let (q2, d2) = cayley_dickson(&q1, alphas[1], "w2")?;
    let (q3, d3) = cayley_dickson(&q2, alphas[2], "w3")?;
    let degrees: Vec<[u8; 3]> = (0..8)
        .map(|i| {
            let b3 = d3[i];
            let i2 = i % 4;
            let b2 = d2[i2];
            let i1 = i2 % 2;
            let b1 = d1[i1];
            [b1, b2, b3]
        })
        .collect();
    Ok((q3, degrees))
}

/// The order-3 automorphism fixing e1, e2 and cycling u_j -> u_{j+1},
/// v_j -> v_{j+1}.
pub fn tau_automorphism(field: &Field) -> LinearMap {
    let mut m = Mat::zeros(field, 8, 8);
    m[(0, 0)] = field.one();
    m[(1, 1)] = field.one();
    for j in 0..3 {
        m[(2 + (j + 1) % 3, 2 + j)] = field.one();
        m[(5 + (j + 1) % 3, 5 + j)] = field.one();
    }
    m
}

/// The order-2 automorphism swapping e1 with e2 and each u_i with v_i.
pub fn sigma_automorphism(field: &Field) -> LinearMap {
    let mut m = Mat::zeros(field, 8, 8);
    m[(0, 1)] = field.one();
    m[(1, 0)] = field.one();
    for j in 0..3 {
        m[(5 + j, 2 + j)] = field.one();
        m[(2 + j, 5 + j)] = field.one();
    }
    m
}

/// The Okubo algebra: the split Cayley space with the product
/// x * y = tau(conj(x)) tau^2(conj(y)) and the same norm. It has no unit.
pub fn okubo(field: &Field) -> Result<CompositionData, Error> {
    let split = cayley_split(field)?;
    let f = field.clone();
    let tau = tau_automorphism(field);
    let tau2 = tau.mul(&f, &tau);
    let conj = split.conjugation.clone().unwrap();
    let tc = tau.mul(&f, &conj);
    let t2c = tau2.mul(&f, &conj);
    let cols_t: Vec<Vec<Scalar>> = (0..8).map(|j| tc.column(j)).collect();
    let cols_t2: Vec<Vec<Scalar>> = (0..8).map(|j| t2c.column(j)).collect();
    let algebra = Algebra::from_table(
        f.clone(),
        CAYLEY_BASIS.iter().map(|s| s.to_string()).collect(),
        AlgebraFlags::plain(),
        |i, j| {
            let prod = split.algebra.multiply(&cols_t[i], &cols_t2[j]);
            prod.into_iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .collect()
        },
    )?;
    Ok(CompositionData {
        algebra,
        norm: split.norm.clone(),
        conjugation: None,
        unit: None,
    })
}

/// Left-unit search by exact linear solve: is there e with e * x = x for
/// all x? (The Okubo algebra has none.)
pub fn has_left_unit(cd: &CompositionData) -> bool {
    let f = cd.field();
    let n = cd.dim();
    // unknown e: equations (e * b_j)_m = delta_{jm}
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for j in 0..n {
        for m in 0..n {
            let mut row = vec![f.zero(); n];
            for (i, cell) in row.iter_mut().enumerate() {
                for (k, c) in cd.algebra.basis_product(i, j) {
                    if k == m {
                        *cell = f.add(cell, &c);
                    }
                }
            }
            rows.push(row);
            rhs.push(if j == m { f.one() } else { f.zero() });
        }
    }
    let m = Mat::from_rows(rows);
    solve_linear(f, &m, &rhs).particular.is_some()
}

/// Symmetric composition laws: norm associativity n(x*y, z) = n(x, y*z) on
/// all basis triples (trilinear, so the basis suffices), and the quadratic
/// laws n(x*y) = n(x) n(y) and (x*y)*x = n(x) y = x*(y*x) on fuzzed samples.
pub fn verify_symmetric_composition(
    cd: &CompositionData,
    rng: &mut impl rand::Rng,
    fuzz: usize,
) -> bool {
    let f = cd.field();
    let n = cd.dim();
    for i in 0..n {
        let bi = cd.algebra.basis_vector(i);
        for j in 0..n {
            let bj = cd.algebra.basis_vector(j);
            let pij = cd.algebra.multiply(&bi, &bj);
            for k in 0..n {
                let bk = cd.algebra.basis_vector(k);
                let pjk = cd.algebra.multiply(&bj, &bk);
                if cd.norm.eval(f, &pij, &bk) != cd.norm.eval(f, &bi, &pjk) {
                    return false;
                }
            }
        }
    }
    for _ in 0..fuzz {
        let x = crate::algebra::sample_vector(f, n, rng);
        let y = crate::algebra::sample_vector(f, n, rng);
        let xy = cd.algebra.multiply(&x, &y);
        if cd.norm_of(&xy) != f.mul(&cd.norm_of(&x), &cd.norm_of(&y)) {
            return false;
        }
        let nx = cd.norm_of(&x);
        let lhs1 = cd.algebra.multiply(&xy, &x);
        let yx = cd.algebra.multiply(&y, &x);
        let lhs2 = cd.algebra.multiply(&x, &yx);
        for k in 0..n {
            let expect = f.mul(&nx, &y[k]);
            if lhs1[k] != expect || lhs2[k] != expect {
                return false;
            }
        }
    }
    true
}

/// Is f orthogonal for the polar norm: n(fx, fy) = n(x, y) on basis pairs.
pub fn is_orthogonal(cd: &CompositionData, map: &LinearMap) -> bool {
    let f = cd.field();
    let cols: Vec<Vec<Scalar>> = (0..cd.dim()).map(|j| map.column(j)).collect();
    for i in 0..cd.dim() {
        for j in 0..cd.dim() {
            let lhs = cd.norm.eval(f, &cols[i], &cols[j]);
            if lhs != cd.norm.mat[(i, j)] {
                return false;
            }
        }
    }
    true
}

/// Related-triple check: each component orthogonal and
/// f1(x . y) = f2(x) . f3(y) for the para-Hurwitz product, on all basis
/// pairs, plus the cyclic-stability cross-check on (f2, f3, f1).
pub fn verify_related_triple(
    cd: &CompositionData,
    f1: &LinearMap,
    f2: &LinearMap,
    f3: &LinearMap,
) -> bool {
    relation_holds(cd, f1, f2, f3)
        && is_orthogonal(cd, f1)
        && is_orthogonal(cd, f2)
        && is_orthogonal(cd, f3)
        && relation_holds(cd, f2, f3, f1)
}

fn relation_holds(cd: &CompositionData, f1: &LinearMap, f2: &LinearMap, f3: &LinearMap) -> bool {
    let f = cd.field();
    let cols2: Vec<Vec<Scalar>> = (0..cd.dim()).map(|j| f2.column(j)).collect();
    let cols3: Vec<Vec<Scalar>> = (0..cd.dim()).map(|j| f3.column(j)).collect();
    for i in 0..cd.dim() {
        for j in 0..cd.dim() {
            let para = cd.para_product(&cd.algebra.basis_vector(i), &cd.algebra.basis_vector(j));
            let lhs = f1.mul_vec(f, &para);
            let rhs = cd.para_product(&cols2[i], &cols3[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Related triple from an even list of trace-zero vectors of norm product
/// one: f2 = (-1)^r R_{x1} ... R_{x2r}, f3 = (-1)^r L_{x1} ... L_{x2r}
/// (ordinary Cayley multiplications), f1 recovered from the y = 1
/// substitution f1(conj(x)) = conj(f2(x)) conj(f3(1)).
pub fn triple_from_spin_generators(
    cd: &CompositionData,
    xs: &[Vec<Scalar>],
) -> Result<(LinearMap, LinearMap, LinearMap), Error> {
    let f = cd.field();
    let n = cd.dim();
    if xs.len() % 2 != 0 {
        return Err(Error::RelatedTriple("generator count must be even".into()));
    }
    let unit = cd.unit_element();
    let mut norm_prod = f.one();
    for x in xs {
        if !f.is_zero(&cd.norm.eval(f, x, &unit)) {
            return Err(Error::RelatedTriple("generator has nonzero trace".into()));
        }
        norm_prod = f.mul(&norm_prod, &cd.norm_of(x));
    }
    if norm_prod != f.one() {
        return Err(Error::RelatedTriple("norms must multiply to 1".into()));
    }
    let r = xs.len() / 2;
    let sign = if r % 2 == 0 { f.one() } else { f.from_i64(-1) };
    let mut f2 = Mat::identity(f, n).scale(f, &sign);
    let mut f3 = Mat::identity(f, n).scale(f, &sign);
    for x in xs {
        f2 = f2.mul(f, &cd.algebra.right_mul(x));
        f3 = f3.mul(f, &cd.algebra.left_mul(x));
    }
    // f1(z) = conj(f2(conj(z))) conj(f3(1))
    let conj = cd.conjugation.clone().expect("unital");
    let f3_1_conj = conj.mul_vec(f, &f3.mul_vec(f, &unit));
    let mut f1 = Mat::zeros(f, n, n);
    for j in 0..n {
        let z = cd.algebra.basis_vector(j);
        let w = conj.mul_vec(f, &f2.mul_vec(f, &conj.mul_vec(f, &z)));
        let img = cd.algebra.multiply(&w, &f3_1_conj);
        for (k, v) in img.into_iter().enumerate() {
            f1[(k, j)] = v;
        }
    }
    if !verify_related_triple(cd, &f1, &f2, &f3) {
        return Err(Error::RelatedTriple(
            "constructed triple failed verification (internal bug)".into(),
        ));
    }
    Ok((f1, f2, f3))
}

/// The abstract chain CD(F,1,1,1) together with the isomorphism of
/// composition data onto the split model, available whenever the field
/// contains i with i^2 = -1: the doubling generators map to
/// i(e1-e2), i(u1-v1), i(u2-v2).
pub fn cd_chain_split_iso(field: &Field) -> Result<(CompositionData, LinearMap), Error> {
    let one = field.one();
    let (chain, _) = cd_chain(field, [&one, &one, &one])?;
    let split = cayley_split(field)?;
    let i = field.sqrt_minus_one().ok_or(Error::MissingSqrtMinusOne)?;
    let f = field;
    let mk = |a: i64, p: usize, q: usize| -> Vec<Scalar> {
        // a * i * (b_p - b_q)
        let c = f.mul(&i, &f.from_i64(a));
        let mut v = split.algebra.zero_vector();
        v[p] = c.clone();
        v[q] = f.neg(&c);
        v
    };
    let w1 = mk(1, 0, 1); // i(e1 - e2)
    let w2 = mk(1, 2, 5); // i(u1 - v1)
    let w3 = mk(1, 3, 6); // i(u2 - v2)
    // chain basis order: 1, w1, w2, w1w2, w3, w1w3, w2w3, w1w2w3
    let unit = split.unit_element();
    let images = {
        let w1w2 = split.algebra.multiply(&w1, &w2);
        let w1w3 = split.algebra.multiply(&w1, &w3);
        let w2w3 = split.algebra.multiply(&w2, &w3);
        let w1w2w3 = split.algebra.multiply(&w1w2, &w3);
        vec![unit, w1.clone(), w2.clone(), w1w2, w3.clone(), w1w3, w2w3, w1w2w3]
    };
    let phi = Mat::from_fn(8, 8, |k, j| images[j][k].clone());
    if !is_isomorphism(&chain.algebra, &split.algebra, &phi) {
        return Err(Error::RelatedTriple(
            "doubling chain failed to embed in the split model (internal bug)".into(),
        ));
    }
    // norms must correspond as well
    for a in 0..8 {
        for b in 0..8 {
            let lhs = chain.norm.mat[(a, b)].clone();
            let rhs = split.norm.eval(f, &phi.column(a), &phi.column(b));
            if lhs != rhs {
                return Err(Error::RelatedTriple(
                    "doubling chain norm does not match the split norm".into(),
                ));
            }
        }
    }
    Ok((chain, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_automorphism, sample_vector};
    use rand::SeedableRng;

    fn gf13() -> Field {
        Field::gf(13).unwrap()
    }

    #[test]
    fn split_table_spot_checks() {
        let cd = cayley_split(&gf13()).unwrap();
        let f = cd.field().clone();
        let b = |i: usize| cd.algebra.basis_vector(i);
        // u1 u2 = v3, u1 v1 = -e1, u3 u1 = v2, v1 v2 = u3, e1 e1 = e1, e1 e2 = 0
        assert_eq!(cd.algebra.multiply(&b(2), &b(3)), b(7));
        let mut m_e1 = cd.algebra.zero_vector();
        m_e1[0] = f.from_i64(-1);
        assert_eq!(cd.algebra.multiply(&b(2), &b(5)), m_e1);
        assert_eq!(cd.algebra.multiply(&b(4), &b(2)), b(6));
        assert_eq!(cd.algebra.multiply(&b(5), &b(6)), b(4));
        assert_eq!(cd.algebra.multiply(&b(0), &b(0)), b(0));
        assert_eq!(cd.algebra.multiply(&b(0), &b(1)), cd.algebra.zero_vector());
    }

    #[test]
    fn characteristic_two_rejected() {
        assert!(cayley_split(&Field::gf(2).unwrap()).is_err());
    }

    #[test]
    fn unit_element_acts_as_identity() {
        let cd = cayley_split(&gf13()).unwrap();
        let one = cd.unit_element();
        for i in 0..8 {
            let b = cd.algebra.basis_vector(i);
            assert_eq!(cd.algebra.multiply(&one, &b), b);
            assert_eq!(cd.algebra.multiply(&b, &one), b);
        }
    }

    #[test]
    fn cayley_hamilton_basis_and_fuzz() {
        let cd = cayley_split(&gf13()).unwrap();
        for i in 0..8 {
            assert!(cayley_hamilton_check(&cd, &cd.algebra.basis_vector(i)));
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..1000 {
            let x = sample_vector(cd.field(), 8, &mut rng);
            assert!(cayley_hamilton_check(&cd, &x));
        }
    }

    #[test]
    fn composition_law_fuzz() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for field in [gf13(), Field::rationals()] {
            let cd = cayley_split(&field).unwrap();
            for _ in 0..500 {
                let x = sample_vector(&field, 8, &mut rng);
                let y = sample_vector(&field, 8, &mut rng);
                let xy = cd.algebra.multiply(&x, &y);
                assert_eq!(
                    cd.norm_of(&xy),
                    field.mul(&cd.norm_of(&x), &cd.norm_of(&y))
                );
            }
        }
    }

    #[test]
    fn conjugation_is_involution_and_antihomomorphism() {
        let cd = cayley_split(&gf13()).unwrap();
        let f = cd.field().clone();
        let c = cd.conjugation.clone().unwrap();
        assert_eq!(c.mul(&f, &c), Mat::identity(&f, 8));
        for i in 0..8 {
            for j in 0..8 {
                let bi = cd.algebra.basis_vector(i);
                let bj = cd.algebra.basis_vector(j);
                let lhs = c.mul_vec(&f, &cd.algebra.multiply(&bi, &bj));
                let rhs = cd
                    .algebra
                    .multiply(&c.mul_vec(&f, &bj), &c.mul_vec(&f, &bi));
                assert_eq!(lhs, rhs);
            }
        }
        // x conj(x) = n(x) 1
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let x = sample_vector(&f, 8, &mut rng);
            let prod = cd.algebra.multiply(&x, &c.mul_vec(&f, &x));
            let n = cd.norm_of(&x);
            let unit = cd.unit_element();
            for k in 0..8 {
                assert_eq!(prod[k], f.mul(&n, &unit[k]));
            }
        }
    }

    #[test]
    fn para_hurwitz_laws() {
        let cd = cayley_split(&gf13()).unwrap();
        let f = cd.field().clone();
        // 1 . x = conj(x)
        let one = cd.unit_element();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..200 {
            let x = sample_vector(&f, 8, &mut rng);
            let y = sample_vector(&f, 8, &mut rng);
            let z = sample_vector(&f, 8, &mut rng);
            assert_eq!(cd.para_product(&one, &x), cd.conjugate(&x));
            // n(x.y, z) = n(x, y.z)
            let xy = cd.para_product(&x, &y);
            let yz = cd.para_product(&y, &z);
            assert_eq!(cd.norm.eval(&f, &xy, &z), cd.norm.eval(&f, &x, &yz));
            // (x.y).x = n(x) y
            let lhs = cd.para_product(&xy, &x);
            let n = cd.norm_of(&x);
            for k in 0..8 {
                assert_eq!(lhs[k], f.mul(&n, &y[k]));
            }
        }
    }

    #[test]
    fn tau_is_an_automorphism_of_order_three() {
        let cd = cayley_split(&gf13()).unwrap();
        let f = cd.field().clone();
        let tau = tau_automorphism(&f);
        assert!(is_automorphism(&cd.algebra, &tau));
        let tau3 = tau.mul(&f, &tau).mul(&f, &tau);
        assert_eq!(tau3, Mat::identity(&f, 8));
    }

    #[test]
    fn okubo_is_symmetric_composition_without_unit() {
        let cd = okubo(&gf13()).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        assert!(verify_symmetric_composition(&cd, &mut rng, 300));
        assert!(!has_left_unit(&cd));
        // spot entries: e1*e1 = e2, u1*v3 = -e1
        let f = cd.field().clone();
        let b = |i: usize| cd.algebra.basis_vector(i);
        assert_eq!(cd.algebra.multiply(&b(0), &b(0)), b(1));
        let mut m_e1 = cd.algebra.zero_vector();
        m_e1[0] = f.from_i64(-1);
        assert_eq!(cd.algebra.multiply(&b(2), &b(7)), m_e1);
    }

    #[test]
    fn split_cayley_product_is_not_symmetric_composition() {
        // witness search over basis pairs for (xy)x != n(x) y
        let cd = cayley_split(&gf13()).unwrap();
        let f = cd.field().clone();
        let mut found = false;
        'outer: for i in 0..8 {
            for j in 0..8 {
                let x = cd.algebra.basis_vector(i);
                let y = cd.algebra.basis_vector(j);
                let xy = cd.algebra.multiply(&x, &y);
                let lhs = cd.algebra.multiply(&xy, &x);
                let n = cd.norm_of(&x);
                if (0..8).any(|k| lhs[k] != f.mul(&n, &y[k])) {
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn doubling_chain_degrees_and_split_iso() {
        let f = gf13();
        let one = f.one();
        let (chain, degrees) = cd_chain(&f, [&one, &one, &one]).unwrap();
        assert_eq!(chain.dim(), 8);
        assert_eq!(degrees[1], [1, 0, 0]);
        assert_eq!(degrees[2], [0, 1, 0]);
        assert_eq!(degrees[4], [0, 0, 1]);
        assert_eq!(degrees[7], [1, 1, 1]);
        // norm composition law survives doubling
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for _ in 0..200 {
            let x = sample_vector(&f, 8, &mut rng);
            let y = sample_vector(&f, 8, &mut rng);
            let xy = chain.algebra.multiply(&x, &y);
            assert_eq!(chain.norm_of(&xy), f.mul(&chain.norm_of(&x), &chain.norm_of(&y)));
        }
        // explicit isomorphism onto the split model
        assert!(cd_chain_split_iso(&f).is_ok());
        // over Q there is no i, so the iso is unavailable
        assert!(matches!(
            cd_chain_split_iso(&Field::rationals()),
            Err(Error::MissingSqrtMinusOne)
        ));
    }

    #[test]
    fn small_doubling_is_two_dimensional_composition() {
        let f = gf13();
        let one = f.one();
        let base = ground_field_composition(&f);
        let (k, deg) = cayley_dickson(&base, &one, "w1").unwrap();
        assert_eq!(k.dim(), 2);
        assert_eq!(deg, vec![0, 1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..200 {
            let x = sample_vector(&f, 2, &mut rng);
            let y = sample_vector(&f, 2, &mut rng);
            let xy = k.algebra.multiply(&x, &y);
            assert_eq!(k.norm_of(&xy), f.mul(&k.norm_of(&x), &k.norm_of(&y)));
        }
        assert!(cayley_dickson(&base, &f.zero(), "w1").is_err());
    }

    #[test]
    fn related_triples_identity_and_sign() {
        let cd = cayley_split(&gf13()).unwrap();
        let f = cd.field().clone();
        let id = Mat::identity(&f, 8);
        assert!(verify_related_triple(&cd, &id, &id, &id));
        let neg = id.scale(&f, &f.from_i64(-1));
        assert!(!verify_related_triple(&cd, &id, &id, &neg));
    }

    #[test]
    fn spin_generator_triples() {
        let cd = cayley_split(&gf13()).unwrap();
        let f = cd.field().clone();
        // empty list: identity triple
        let (f1, f2, f3) = triple_from_spin_generators(&cd, &[]).unwrap();
        assert_eq!(f1, Mat::identity(&f, 8));
        assert_eq!(f2, Mat::identity(&f, 8));
        assert_eq!(f3, Mat::identity(&f, 8));
        // xs = (a, a) with a trace-zero of norm^2 = 1
        // a = u1 + v1: n(a) = polar(u1,v1) = 1... quadratic form: n(a) = 1
        let mut a = cd.algebra.zero_vector();
        a[2] = f.one();
        a[5] = f.one();
        assert_eq!(cd.norm_of(&a), f.one());
        let (g1, g2, g3) = triple_from_spin_generators(&cd, &[a.clone(), a]).unwrap();
        assert!(verify_related_triple(&cd, &g1, &g2, &g3));
        // odd count rejected
        let mut b = cd.algebra.zero_vector();
        b[2] = f.one();
        b[5] = f.one();
        assert!(triple_from_spin_generators(&cd, &[b]).is_err());
    }
}
