//! The type-F4 Lie algebra Der(A) built two ways (Leibniz nullspace and
//! the triality + multiplication-operator span), the triality algebra of
//! the Cayley norm, the bracket relations among the spanning operators,
//! a Cartan subalgebra with its 48-root system, and a Chevalley basis
//! with integrality and sl2 checks.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::albert::{iota_index, AlbertData};
use crate::algebra::{bracket, flatten_map, DerivationSpace, LinearMap};
use crate::cayley::CompositionData;
use crate::error::Error;
use crate::field::{Field, Scalar};
use crate::grading::{der_induced_grading, Grading};
use crate::group::{solve_integer, GroupElement};
use crate::linalg::{Eliminator, Mat, SpanSolver};

/// A triple (d1, d2, d3) of norm-skew maps with
/// d1(x . y) = d2(x) . y + x . d3(y) for the para-Hurwitz product.
#[derive(Debug, Clone)]
pub struct TrialityTriple {
    pub d: [LinearMap; 3],
}

impl TrialityTriple {
    /// The cyclic image (d3, d1, d2).
    pub fn theta(&self) -> TrialityTriple {
        TrialityTriple {
            d: [self.d[2].clone(), self.d[0].clone(), self.d[1].clone()],
        }
    }

    pub fn flatten(&self, _f: &Field) -> Vec<Scalar> {
        let mut v = flatten_map(&self.d[0]);
        v.extend(flatten_map(&self.d[1]));
        v.extend(flatten_map(&self.d[2]));
        v
    }
}

/// Is the map skew for the polar norm: n(dx, y) + n(x, dy) = 0?
pub fn is_norm_skew(cd: &CompositionData, d: &LinearMap) -> bool {
    let f = cd.field();
    let n = &cd.norm.mat;
    let dn = d.transpose(f).mul(f, n);
    let nd = n.mul(f, d);
    dn.add(f, &nd).is_zero(f)
}

/// Does the triple satisfy the triality derivation law?
pub fn is_triality_triple(cd: &CompositionData, t: &TrialityTriple) -> bool {
    let f = cd.field();
    if !t.d.iter().all(|d| is_norm_skew(cd, d)) {
        return false;
    }
    for i in 0..8 {
        let bi = cd.algebra.basis_vector(i);
        let d2x = t.d[1].mul_vec(f, &bi);
        for j in 0..8 {
            let bj = cd.algebra.basis_vector(j);
            let lhs = t.d[0].mul_vec(f, &cd.para_product(&bi, &bj));
            let rhs1 = cd.para_product(&d2x, &bj);
            let rhs2 = cd.para_product(&bi, &t.d[2].mul_vec(f, &bj));
            for m in 0..8 {
                if lhs[m] != f.add(&rhs1[m], &rhs2[m]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Exact nullspace of the skewness + triality constraints: a
/// deterministic 28-dimensional basis of tri(C).
pub fn tri_compute(cd: &CompositionData) -> Result<Vec<TrialityTriple>, Error> {
    let f = cd.field();
    if f.characteristic() == 2 {
        return Err(Error::BadCharacteristic {
            context: "triality algebra".into(),
            characteristic: 2,
        });
    }
    // unknowns: three 8x8 maps, index t*64 + r*8 + c
    let cols = 3 * 64;
    let mut elim = Eliminator::new(f, cols);
    let nmat = &cd.norm.mat;
    // skewness of each component: sum_k D[k][i] N[k][j] + N[i][k] D[k][j] = 0
    for t in 0..3 {
        for i in 0..8 {
            for j in i..8 {
                let mut entries: Vec<(usize, Scalar)> = Vec::new();
                for k in 0..8 {
                    if !f.is_zero(&nmat[(k, j)]) {
                        entries.push((t * 64 + k * 8 + i, nmat[(k, j)].clone()));
                    }
                    if !f.is_zero(&nmat[(i, k)]) {
                        entries.push((t * 64 + k * 8 + j, nmat[(i, k)].clone()));
                    }
                }
                elim.add_sparse_row(f, &entries);
            }
        }
    }
    // para-products of basis pairs
    let para: Vec<Vec<Vec<Scalar>>> = (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    cd.para_product(&cd.algebra.basis_vector(i), &cd.algebra.basis_vector(j))
                })
                .collect()
        })
        .collect();
    // d1(b_i . b_j) - d2(b_i) . b_j - b_i . d3(b_j) = 0
    for i in 0..8 {
        for j in 0..8 {
            for m in 0..8 {
                let mut entries: Vec<(usize, Scalar)> = Vec::new();
                for k in 0..8 {
                    if !f.is_zero(&para[i][j][k]) {
                        entries.push((k * 8 + m * 0 + 0, f.zero())); // placeholder removed below
                    }
                }
                entries.clear();
                // term 1: sum_k (b_i . b_j)_k d1[m][k]
                for k in 0..8 {
                    if !f.is_zero(&para[i][j][k]) {
                        entries.push((m * 8 + k, para[i][j][k].clone()));
                    }
                }
                // term 2: -(d2(b_i) . b_j)_m = -sum_k d2[k][i] (b_k . b_j)_m
                for k in 0..8 {
                    if !f.is_zero(&para[k][j][m]) {
                        entries.push((64 + k * 8 + i, f.neg(&para[k][j][m])));
                    }
                }
                // term 3: -(b_i . d3(b_j))_m = -sum_k d3[k][j] (b_i . b_k)_m
                for k in 0..8 {
                    if !f.is_zero(&para[i][k][m]) {
                        entries.push((128 + k * 8 + j, f.neg(&para[i][k][m])));
                    }
                }
                elim.add_sparse_row(f, &entries);
            }
        }
    }
    let kernel = elim.nullspace(f);
    let triples = kernel
        .into_iter()
        .map(|v| TrialityTriple {
            d: [0, 1, 2].map(|t| Mat::from_fn(8, 8, |r, c| v[t * 64 + r * 8 + c].clone())),
        })
        .collect();
    Ok(triples)
}

/// The derivation of the Albert algebra attached to a triality triple:
/// kills the idempotents and acts by d_i on the i-th Cayley copy.
pub fn d_from_triple(a: &AlbertData, t: &TrialityTriple) -> LinearMap {
    let f = a.field().clone();
    let mut m = Mat::zeros(&f, 27, 27);
    for i in 0..3 {
        for k in 0..8 {
            for r in 0..8 {
                m[(iota_index(i, r), iota_index(i, k))] = t.d[i][(r, k)].clone();
            }
        }
    }
    m
}

/// The multiplication-operator derivation D_i(x) = 2 [L_{iota_i(x)},
/// L_{E_{i+1}}] (block index 0-based).
pub fn d_op_commutator(a: &AlbertData, i: usize, x: &[Scalar]) -> LinearMap {
    let f = a.field().clone();
    let lx = a.algebra.left_mul(&a.iota(i, x));
    let le = a.algebra.left_mul(&a.algebra.basis_vector((i + 1) % 3));
    bracket(&f, &lx, &le).scale(&f, &f.from_i64(2))
}

/// The same derivation from its explicit action table:
/// E_i -> 0, E_{i+1} -> iota_i(x)/2, E_{i+2} -> -iota_i(x)/2,
/// iota_i(y) -> 2 n(x,y)(E_{i+2} - E_{i+1}),
/// iota_{i+1}(y) -> -iota_{i+2}(x . y), iota_{i+2}(y) -> iota_{i+1}(y . x).
pub fn d_op_explicit(a: &AlbertData, i: usize, x: &[Scalar]) -> LinearMap {
    let f = a.field().clone();
    let half = f.half().expect("characteristic 2 excluded");
    let mut m = Mat::zeros(&f, 27, 27);
    let ix = a.iota(i, x);
    for (r, c) in ix.iter().enumerate() {
        m[(r, (i + 1) % 3)] = f.mul(&half, c);
        m[(r, (i + 2) % 3)] = f.neg(&f.mul(&half, c));
    }
    for k in 0..8 {
        let y = a.cayley.algebra.basis_vector(k);
        // iota_i(y) column
        let nxy = a.cayley.polar(x, &y);
        let c = f.mul(&f.from_i64(2), &nxy);
        m[((i + 1) % 3, iota_index(i, k))] = f.neg(&c);
        m[((i + 2) % 3, iota_index(i, k))] = c;
        // iota_{i+1}(y) -> -iota_{i+2}(x . y)
        let xy = a.cayley.para_product(x, &y);
        for (r, v) in xy.iter().enumerate() {
            m[(iota_index((i + 2) % 3, r), iota_index((i + 1) % 3, k))] = f.neg(v);
        }
        // iota_{i+2}(y) -> iota_{i+1}(y . x)
        let yx = a.cayley.para_product(&y, x);
        for (r, v) in yx.iter().enumerate() {
            m[(iota_index((i + 1) % 3, r), iota_index((i + 2) % 3, k))] = v.clone();
        }
    }
    m
}

/// sigma_{x,y}(z) = n(x,z) y - n(y,z) x.
pub fn sigma_xy(cd: &CompositionData, x: &[Scalar], y: &[Scalar]) -> LinearMap {
    let f = cd.field();
    let mut m = Mat::zeros(f, 8, 8);
    for j in 0..8 {
        let bj = cd.algebra.basis_vector(j);
        let nx = cd.polar(x, &bj);
        let ny = cd.polar(y, &bj);
        for r in 0..8 {
            m[(r, j)] = f.sub(&f.mul(&nx, &y[r]), &f.mul(&ny, &x[r]));
        }
    }
    m
}

/// The triality triple t_{x,y} = (sigma_{x,y}, n(x,y)/2 - r_x l_y,
/// n(x,y)/2 - l_x r_y) built from para-Hurwitz multiplications.
pub fn t_xy(cd: &CompositionData, x: &[Scalar], y: &[Scalar]) -> TrialityTriple {
    let f = cd.field();
    let half_n = f
        .div(&cd.polar(x, y), &f.from_i64(2))
        .expect("characteristic 2 excluded");
    let lx = cd.para_left(x);
    let ly = cd.para_left(y);
    let rx = cd.para_right(x);
    let ry = cd.para_right(y);
    let scaled_id = Mat::identity(f, 8).scale(f, &half_n);
    TrialityTriple {
        d: [
            sigma_xy(cd, x, y),
            scaled_id.sub(f, &rx.mul(f, &ly)),
            scaled_id.sub(f, &lx.mul(f, &ry)),
        ],
    }
}

/// D_{x,y}: the Albert derivation of the triple t_{x,y}.
pub fn d_xy(a: &AlbertData, x: &[Scalar], y: &[Scalar]) -> LinearMap {
    d_from_triple(a, &t_xy(&a.cayley, x, y))
}

/// The span decomposition of Der(A): 28 triality derivations plus three
/// 8-dimensional blocks of multiplication operators, meeting trivially.
pub struct DerSpan {
    pub tri_basis: Vec<TrialityTriple>,
    pub derivations: DerivationSpace,
    pub tri_dim: usize,
    pub block_dims: [usize; 3],
}

/// Build Der(A) as the span of D_tri(C) and the D_i(C) blocks, checking
/// the dimension ledger 28 + 8 + 8 + 8 = 52 and directness of the sum.
pub fn albert_derivations_via_span(a: &AlbertData) -> Result<DerSpan, Error> {
    let f = a.field();
    let tri = tri_compute(&a.cayley)?;
    let mut elim = Eliminator::new(f, 27 * 27);
    let mut count = 0usize;
    for t in &tri {
        if elim.add_row(f, &flatten_map(&d_from_triple(a, t))) {
            count += 1;
        }
    }
    let tri_dim = count;
    let mut block_dims = [0usize; 3];
    for i in 0..3 {
        let before = elim.rank();
        for k in 0..8 {
            let x = a.cayley.algebra.basis_vector(k);
            elim.add_row(f, &flatten_map(&d_op_commutator(a, i, &x)));
        }
        block_dims[i] = elim.rank() - before;
    }
    if tri_dim != 28 || block_dims != [8, 8, 8] || elim.rank() != 52 {
        return Err(Error::Decomposition(format!(
            "span dimensions tri={tri_dim}, blocks={block_dims:?}, total={}",
            elim.rank()
        )));
    }
    let basis = elim
        .rows_scalars(f)
        .into_iter()
        .map(|v| Mat::from_fn(27, 27, |r, c| v[r * 27 + c].clone()))
        .collect();
    Ok(DerSpan {
        tri_basis: tri,
        derivations: DerivationSpace { basis },
        tri_dim,
        block_dims,
    })
}

/// Verify the bracket relations among the spanning operators on sample
/// vectors: [D_t, D_i(x)] = D_i(d_i x), [D_i(x), D_{i+1}(y)] =
/// D_{i+2}(x . y), [D_i(x), D_i(y)] = 2 theta^i(D_{x,y}).
pub fn bracket_relations_hold(
    a: &AlbertData,
    t: &TrialityTriple,
    i: usize,
    x: &[Scalar],
    y: &[Scalar],
) -> bool {
    let f = a.field().clone();
    let dt = d_from_triple(a, t);
    let dix = d_op_commutator(a, i, x);
    let diy = d_op_commutator(a, i, y);
    // [D_t, D_i(x)] = D_i(d_i(x))
    let lhs1 = bracket(&f, &dt, &dix);
    let rhs1 = d_op_commutator(a, i, &t.d[i].mul_vec(&f, x));
    if lhs1 != rhs1 {
        return false;
    }
    // [D_i(x), D_{i+1}(y)] = D_{i+2}(x . y)
    let di1y = d_op_commutator(a, (i + 1) % 3, y);
    let lhs2 = bracket(&f, &dix, &di1y);
    let rhs2 = d_op_commutator(a, (i + 2) % 3, &a.cayley.para_product(x, y));
    if lhs2 != rhs2 {
        return false;
    }
    // [D_i(x), D_i(y)] = 2 theta^i(D_{x,y})
    let lhs3 = bracket(&f, &dix, &diy);
    let mut tt = t_xy(&a.cayley, x, y);
    for _ in 0..i {
        tt = tt.theta();
    }
    let rhs3 = d_from_triple(a, &tt).scale(&f, &f.from_i64(2));
    lhs3 == rhs3
}

/// A root datum: the four Cartan derivations, and one root per nonzero
/// degree of the Cartan grading with both its degree and its exact
/// eps-coordinates (stored doubled so they are integers).
pub struct RootDatum {
    pub cartan: [LinearMap; 4],
    pub roots: Vec<Root>,
}

pub struct Root {
    pub degree: GroupElement,
    /// 2 * (coordinates in the eps basis): entries in {0, +-1, +-2}
    pub eps2: [i64; 4],
    pub vector: LinearMap,
}

impl RootDatum {
    /// 24 with two +-2 entries, 8 with one, 16 with none (all +-1).
    pub fn census(&self) -> (usize, usize, usize) {
        let mut long = 0;
        let mut short = 0;
        let mut half = 0;
        for r in &self.roots {
            let twos = r.eps2.iter().filter(|&&c| c.abs() == 2).count();
            let ones = r.eps2.iter().filter(|&&c| c.abs() == 1).count();
            match (twos, ones) {
                (2, 0) => long += 1,
                (1, 0) => short += 1,
                (0, 4) => half += 1,
                _ => {}
            }
        }
        (long, short, half)
    }
}

/// Build the Cartan subalgebra spanned by D_{e1,e2} and D_{u_i,v_i},
/// decompose Der(A) by the Cartan grading, and read the eps-coordinates
/// of each root space off the exact eigenvalues of the Cartan action.
pub fn cartan_and_roots(
    a: &AlbertData,
    dspace: &DerivationSpace,
    cartan_grading: &Grading,
) -> Result<RootDatum, Error> {
    let f = a.field().clone();
    let c = &a.cayley;
    let pairs = [(0usize, 1usize), (2, 5), (3, 6), (4, 7)];
    let cartan: [LinearMap; 4] = pairs.map(|(p, q)| {
        d_xy(a, &c.algebra.basis_vector(p), &c.algebra.basis_vector(q))
    });
    let der_grading = der_induced_grading(&a.algebra, cartan_grading, dspace)?;
    let e = der_grading.group.identity();
    // the zero component must be the Cartan subalgebra itself
    let zero_count = der_grading.degrees.iter().filter(|d| **d == e).count();
    if zero_count != 4 {
        return Err(Error::Decomposition(format!(
            "Cartan component has dimension {zero_count}, expected 4"
        )));
    }
    {
        let zero_maps: Vec<Vec<Scalar>> = der_grading
            .maps
            .iter()
            .zip(&der_grading.degrees)
            .filter(|(_, d)| **d == e)
            .map(|(m, _)| flatten_map(m))
            .collect();
        let solver = SpanSolver::new(&f, &zero_maps)?;
        for h in &cartan {
            solver.coords(&flatten_map(h)).map_err(|_| {
                Error::Decomposition("Cartan element outside the zero component".into())
            })?;
        }
    }
    let mut roots = Vec::new();
    for (map, degree) in der_grading.maps.iter().zip(&der_grading.degrees) {
        if *degree == e {
            continue;
        }
        let mut eps2 = [0i64; 4];
        for (j, h) in cartan.iter().enumerate() {
            let br = bracket(&f, h, map);
            let lambda = eigenvalue(&f, map, &br)?;
            eps2[j] = lift_twice(&f, &lambda).ok_or_else(|| {
                Error::Decomposition("root eigenvalue outside {0,+-1/2,+-1}".into())
            })?;
        }
        roots.push(Root { degree: degree.clone(), eps2, vector: map.clone() });
    }
    // closure under negation
    {
        use std::collections::BTreeSet;
        let set: BTreeSet<[i64; 4]> = roots.iter().map(|r| r.eps2).collect();
        for r in &roots {
            let neg = [-r.eps2[0], -r.eps2[1], -r.eps2[2], -r.eps2[3]];
            if !set.contains(&neg) {
                return Err(Error::Decomposition("root set not closed under negation".into()));
            }
        }
    }
    Ok(RootDatum { cartan, roots })
}

/// The scalar lambda with candidate = lambda * reference, checked on every
/// coordinate; errors if the vectors are not proportional.
fn eigenvalue(f: &Field, reference: &LinearMap, candidate: &LinearMap) -> Result<Scalar, Error> {
    let rv = flatten_map(reference);
    let cv = flatten_map(candidate);
    let lead = rv
        .iter()
        .position(|x| !f.is_zero(x))
        .ok_or_else(|| Error::Decomposition("zero root vector".into()))?;
    let lambda = f.div(&cv[lead], &rv[lead])?;
    for (r, c) in rv.iter().zip(&cv) {
        if f.mul(&lambda, r) != *c {
            return Err(Error::Decomposition("bracket is not a scalar multiple".into()));
        }
    }
    Ok(lambda)
}

/// Lift a field element to twice its half-integer value when it is one of
/// 0, +-1/2, +-1.
fn lift_twice(f: &Field, x: &Scalar) -> Option<i64> {
    for t in [0i64, 1, -1, 2, -2] {
        let cand = f.div(&f.from_i64(t), &f.from_i64(2)).ok()?;
        if cand == *x {
            return Some(t);
        }
    }
    None
}

/// The four simple roots in doubled eps-coordinates.
pub const SIMPLE_ROOTS2: [[i64; 4]; 4] =
    [[1, -1, -1, -1], [0, 0, 0, 2], [0, 0, 2, -2], [0, 2, -2, 0]];

/// Coordinates of a root in the simple-root basis, when integral.
pub fn simple_coords(eps2: &[i64; 4]) -> Option<[i64; 4]> {
    // solve sum_i c_i alpha_i = eps2 over Z
    let rows: Vec<Vec<BigInt>> = (0..4)
        .map(|coord| (0..4).map(|i| BigInt::from(SIMPLE_ROOTS2[i][coord])).collect())
        .collect();
    let rhs: Vec<BigInt> = eps2.iter().map(|&c| BigInt::from(c)).collect();
    let sol = solve_integer(&rows, &rhs)?;
    let mut out = [0i64; 4];
    for (i, s) in sol.iter().enumerate() {
        out[i] = s.to_i64()?;
    }
    Some(out)
}

pub fn is_positive_root(eps2: &[i64; 4]) -> bool {
    match simple_coords(eps2) {
        Some(c) => c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x != 0),
        None => false,
    }
}

/// Canonical label for a chosen root vector.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum RootVectorChoice {
    /// D_{i+1}(basis k) (1-based copy in the name, 0-based fields)
    MulOperator { copy: usize, basis: usize },
    /// D_{x,y} for Cayley basis vectors x, y
    TrialityPair { first: usize, second: usize },
}

impl RootVectorChoice {
    pub fn display(&self) -> String {
        match self {
            RootVectorChoice::MulOperator { copy, basis } => {
                format!("D{}({})", copy + 1, crate::cayley::CAYLEY_BASIS[*basis])
            }
            RootVectorChoice::TrialityPair { first, second } => format!(
                "D({},{})",
                crate::cayley::CAYLEY_BASIS[*first],
                crate::cayley::CAYLEY_BASIS[*second]
            ),
        }
    }
}

/// A Chevalley basis: the four coroot brackets H_i followed by one vector
/// per root (positive roots first, negatives mirrored), each of the form
/// D_i(x) or D_{x,y}; negatives are the sigma-images of positives.
pub struct ChevalleyBasis {
    /// basis order: H_1..H_4, then X_alpha over ordered positive roots,
    /// then X_{-alpha} in the same root order
    pub basis: Vec<LinearMap>,
    pub positive_roots: Vec<[i64; 4]>,
    pub choices: Vec<RootVectorChoice>,
    /// structure constants: [b_i, b_j] = sum_k c_{ijk} b_k
    pub constants: Vec<Vec<Vec<(usize, Scalar)>>>,
}

/// Candidate generators in the frozen canonical order: the 24
/// multiplication operators first, then the 24 triality pairs.
fn candidates(a: &AlbertData) -> Vec<(RootVectorChoice, LinearMap)> {
    let mut out = Vec::with_capacity(48);
    for copy in 0..3 {
        for basis in 0..8 {
            let x = a.cayley.algebra.basis_vector(basis);
            out.push((
                RootVectorChoice::MulOperator { copy, basis },
                d_op_commutator(a, copy, &x),
            ));
        }
    }
    let hyperbolic = [(0usize, 1usize), (2, 5), (3, 6), (4, 7)];
    for first in 0..8 {
        for second in (first + 1)..8 {
            if hyperbolic.contains(&(first, second)) {
                continue; // Cartan directions, weight zero
            }
            let x = a.cayley.algebra.basis_vector(first);
            let y = a.cayley.algebra.basis_vector(second);
            out.push((
                RootVectorChoice::TrialityPair { first, second },
                d_xy(a, &x, &y),
            ));
        }
    }
    out
}

/// Build the Chevalley basis by matching each positive root's
/// eps-coordinates against the candidate table; negatives are -sigma
/// images, and H_i = [X_{alpha_i}, X_{-alpha_i}].
pub fn chevalley_basis(a: &AlbertData, datum: &RootDatum) -> Result<ChevalleyBasis, Error> {
    let f = a.field().clone();
    // ordered positive roots: by height, then lexicographic eps2
    let mut positive: Vec<([i64; 4], [i64; 4])> = datum
        .roots
        .iter()
        .filter_map(|r| simple_coords(&r.eps2).map(|c| (r.eps2, c)))
        .filter(|(_, c)| c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x != 0))
        .collect();
    if positive.len() != 24 {
        return Err(Error::Decomposition(format!(
            "expected 24 positive roots, found {}",
            positive.len()
        )));
    }
    positive.sort_by_key(|(eps2, c)| (c.iter().sum::<i64>(), *eps2));
    let cands = candidates(a);
    let weight_of = |m: &LinearMap| -> Result<[i64; 4], Error> {
        let mut eps2 = [0i64; 4];
        for (j, h) in datum.cartan.iter().enumerate() {
            let br = bracket(&f, h, m);
            let lambda = eigenvalue(&f, m, &br)?;
            eps2[j] = lift_twice(&f, &lambda)
                .ok_or_else(|| Error::Decomposition("candidate weight not half-integer".into()))?;
        }
        Ok(eps2)
    };
    let mut pos_vectors = Vec::with_capacity(24);
    let mut choices = Vec::with_capacity(24);
    for (eps2, _) in &positive {
        let mut found = None;
        for (choice, map) in &cands {
            if weight_of(map)? == *eps2 {
                found = Some((choice.clone(), map.clone()));
                break;
            }
        }
        let (choice, map) = found.ok_or_else(|| {
            Error::Decomposition(format!("no candidate of the required form for root {eps2:?}"))
        })?;
        choices.push(choice);
        pos_vectors.push(map);
    }
    // negatives: X_{-alpha} = -sigma X_alpha sigma
    let sigma = crate::albert::sigma_albert(a);
    let neg_vectors: Vec<LinearMap> = pos_vectors
        .iter()
        .map(|x| sigma.mul(&f, x).mul(&f, &sigma).scale(&f, &f.from_i64(-1)))
        .collect();
    // H_i from the four simple roots
    let mut h = Vec::with_capacity(4);
    for alpha in SIMPLE_ROOTS2 {
        let idx = positive
            .iter()
            .position(|(e, _)| *e == alpha)
            .ok_or_else(|| Error::Decomposition("simple root missing".into()))?;
        h.push(bracket(&f, &pos_vectors[idx], &neg_vectors[idx]));
    }
    let mut basis = h;
    basis.extend(pos_vectors);
    basis.extend(neg_vectors);
    // structure constants in this basis
    let solver = SpanSolver::new(&f, &basis.iter().map(flatten_map).collect::<Vec<_>>())?;
    let m = basis.len();
    let mut constants = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let br = bracket(&f, &basis[i], &basis[j]);
            let coords = solver.coords(&flatten_map(&br)).map_err(|_| {
                Error::Decomposition("bracket escaped the Chevalley span".into())
            })?;
            constants[i][j] = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .collect();
        }
    }
    Ok(ChevalleyBasis {
        basis,
        positive_roots: positive.into_iter().map(|(e, _)| e).collect(),
        choices,
        constants,
    })
}

impl ChevalleyBasis {
    /// Every structure constant lies in the image of Z (exact integers
    /// over Q; always true mod p, so only meaningful in characteristic 0).
    pub fn constants_integral(&self, f: &Field) -> bool {
        self.constants.iter().flatten().flatten().all(|(_, c)| f.as_integer(c).is_some())
    }

    /// sl2 relations for the four simple roots:
    /// [H_i, X_i] = 2 X_i, [H_i, Y_i] = -2 Y_i, [X_i, Y_i] = H_i.
    pub fn sl2_relations_hold(&self, f: &Field) -> bool {
        let npos = self.positive_roots.len();
        for (i, alpha) in SIMPLE_ROOTS2.iter().enumerate() {
            let Some(idx) = self.positive_roots.iter().position(|e| e == alpha) else {
                return false;
            };
            let h = &self.basis[i];
            let x = &self.basis[4 + idx];
            let y = &self.basis[4 + npos + idx];
            if bracket(f, h, x) != x.scale(f, &f.from_i64(2)) {
                return false;
            }
            if bracket(f, h, y) != y.scale(f, &f.from_i64(-2)) {
                return false;
            }
            if bracket(f, x, y) != *h {
                return false;
            }
        }
        true
    }

    /// ad_X as a matrix in the Chevalley basis.
    pub fn ad_matrix(&self, f: &Field, idx: usize) -> Mat {
        let m = self.basis.len();
        let mut out = Mat::zeros(f, m, m);
        for j in 0..m {
            for (k, c) in &self.constants[idx][j] {
                out[(*k, j)] = c.clone();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albert::{albert_build, cartan_degrees};
    use crate::algebra::{is_derivation, sample_vector};
    use crate::cayley::cayley_split;
    use crate::grading::{verified, Grading};
    use crate::group::FgAbGroup;
    use rand::SeedableRng;

    fn setup() -> AlbertData {
        albert_build(&cayley_split(&Field::gf(13).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn tri_dimension_and_theta_stability() {
        let a = setup();
        let f = a.field().clone();
        let tri = tri_compute(&a.cayley).unwrap();
        assert_eq!(tri.len(), 28);
        for t in &tri {
            assert!(is_triality_triple(&a.cayley, t));
        }
        // theta images stay in the span
        let solver =
            SpanSolver::new(&f, &tri.iter().map(|t| t.flatten(&f)).collect::<Vec<_>>()).unwrap();
        for t in &tri {
            assert!(solver.coords(&t.theta().flatten(&f)).is_ok());
        }
        // projection to the first component is injective on the span
        let mut elim = Eliminator::new(&f, 64);
        let mut rank = 0;
        for t in &tri {
            if elim.add_row(&f, &flatten_map(&t.d[0])) {
                rank += 1;
            }
        }
        assert_eq!(rank, 28);
    }

    #[test]
    fn theta_preserves_brackets_and_has_order_three() {
        let a = setup();
        let f = a.field().clone();
        let tri = tri_compute(&a.cayley).unwrap();
        let solver =
            SpanSolver::new(&f, &tri.iter().map(|t| t.flatten(&f)).collect::<Vec<_>>()).unwrap();
        for s in tri.iter().take(4) {
            let t3 = s.theta().theta().theta();
            assert_eq!(t3.flatten(&f), s.flatten(&f));
            for t in tri.iter().take(4) {
                // componentwise bracket of theta images = theta of bracket
                let br = |x: &TrialityTriple, y: &TrialityTriple| TrialityTriple {
                    d: [0, 1, 2].map(|c| bracket(&f, &x.d[c], &y.d[c])),
                };
                let lhs = br(&s.theta(), &t.theta());
                let rhs = br(s, t).theta();
                assert_eq!(lhs.flatten(&f), rhs.flatten(&f));
                // brackets stay in the span
                assert!(solver.coords(&br(s, t).flatten(&f)).is_ok());
            }
        }
    }

    #[test]
    fn d_operators_match_and_derive() {
        let a = setup();
        let f = a.field().clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for i in 0..3 {
            for _ in 0..5 {
                let x = sample_vector(&f, 8, &mut rng);
                let d1 = d_op_commutator(&a, i, &x);
                let d2 = d_op_explicit(&a, i, &x);
                assert_eq!(d1, d2, "copy {i}");
                assert!(is_derivation(&a.algebra, &d1));
            }
        }
        // D_1(x)(E_2) = iota_1(x)/2 and D_1(x)(iota_2(y)) = -iota_3(x . y)
        let x = a.cayley.algebra.basis_vector(7); // v3
        let d = d_op_commutator(&a, 0, &x);
        let e2 = a.algebra.basis_vector(1);
        let half = f.half().unwrap();
        let expect: Vec<Scalar> = a.iota(0, &x).iter().map(|c| f.mul(&half, c)).collect();
        assert_eq!(d.mul_vec(&f, &e2), expect);
        let y = a.cayley.algebra.basis_vector(2);
        let lhs = d.mul_vec(&f, &a.iota(1, &y));
        let para = a.cayley.para_product(&x, &y);
        let rhs: Vec<Scalar> = a
            .iota(2, &para)
            .iter()
            .map(|c| f.neg(c))
            .collect();
        assert_eq!(lhs, rhs);
        // D of the zero triple is zero
        let zero_triple = TrialityTriple {
            d: [Mat::zeros(&f, 8, 8), Mat::zeros(&f, 8, 8), Mat::zeros(&f, 8, 8)],
        };
        assert!(d_from_triple(&a, &zero_triple).is_zero(&f));
    }

    #[test]
    fn span_matches_nullspace_derivations() {
        let a = setup();
        let f = a.field().clone();
        let span = albert_derivations_via_span(&a).unwrap();
        assert_eq!(span.tri_dim, 28);
        assert_eq!(span.block_dims, [8, 8, 8]);
        assert_eq!(span.derivations.dim(), 52);
        let null = crate::algebra::derivation_space(&a.algebra);
        assert_eq!(null.dim(), 52);
        // mutual containment via exact rank
        let mut elim = Eliminator::new(&f, 27 * 27);
        for d in &null.basis {
            elim.add_row(&f, &flatten_map(d));
        }
        assert_eq!(elim.rank(), 52);
        for d in &span.derivations.basis {
            assert!(!elim.add_row(&f, &flatten_map(d)), "span escapes nullspace");
        }
    }

    #[test]
    fn bracket_relations_sampled() {
        let a = setup();
        let f = a.field().clone();
        let tri = tri_compute(&a.cayley).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        for i in 0..3 {
            for k in 0..4 {
                let x = sample_vector(&f, 8, &mut rng);
                let y = sample_vector(&f, 8, &mut rng);
                assert!(bracket_relations_hold(&a, &tri[k], i, &x, &y));
            }
        }
    }

    #[test]
    fn roots_census_and_eigenvalues() {
        let a = setup();
        let f = a.field().clone();
        let z4 = FgAbGroup::free(4);
        let grading =
            verified(&a.algebra, Grading::new(z4.clone(), cartan_degrees(&z4)).unwrap()).unwrap();
        let dspace = crate::algebra::derivation_space(&a.algebra);
        let datum = cartan_and_roots(&a, &dspace, &grading).unwrap();
        assert_eq!(datum.roots.len(), 48);
        assert_eq!(datum.census(), (24, 8, 16));
        // [D_{u1,v1}, X] = X on the eps_1 root space
        let eps1 = datum.roots.iter().find(|r| r.eps2 == [0, 2, 0, 0]).unwrap();
        let br = bracket(&f, &datum.cartan[1], &eps1.vector);
        assert_eq!(br, eps1.vector.clone());
    }

    #[test]
    fn chevalley_over_gf13() {
        let a = setup();
        let f = a.field().clone();
        let z4 = FgAbGroup::free(4);
        let grading =
            verified(&a.algebra, Grading::new(z4.clone(), cartan_degrees(&z4)).unwrap()).unwrap();
        let dspace = crate::algebra::derivation_space(&a.algebra);
        let datum = cartan_and_roots(&a, &dspace, &grading).unwrap();
        let ch = chevalley_basis(&a, &datum).unwrap();
        assert_eq!(ch.basis.len(), 52);
        assert!(ch.sl2_relations_hold(&f));
        // the four pinned simple-root vectors have the right shapes
        let i1 = ch.positive_roots.iter().position(|e| *e == SIMPLE_ROOTS2[0]).unwrap();
        assert_eq!(
            ch.choices[i1],
            RootVectorChoice::MulOperator { copy: 2, basis: 0 },
            "alpha_1 realized by D3(e1)"
        );
        let i2 = ch.positive_roots.iter().position(|e| *e == SIMPLE_ROOTS2[1]).unwrap();
        assert_eq!(
            ch.choices[i2],
            RootVectorChoice::MulOperator { copy: 0, basis: 7 },
            "alpha_2 realized by D1(v3)"
        );
        // X^3 = 0 on A and ad^3 = 0 for every root vector
        for idx in 4..52 {
            let x = &ch.basis[idx];
            let x3 = x.mul(&f, x).mul(&f, x);
            assert!(x3.is_zero(&f));
            let ad = ch.ad_matrix(&f, idx);
            let ad3 = ad.mul(&f, &ad).mul(&f, &ad);
            assert!(ad3.is_zero(&f));
        }
    }
}
