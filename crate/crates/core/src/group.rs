//! Finitely generated abelian groups, their elements and homomorphisms,
//! and Smith normal form over the integers. This is the substrate for
//! grading groups and universal groups.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Z^free_rank x Z_{d1} x ... x Z_{dk} with d1 | d2 | ... | dk, di >= 2.
/// Canonical generator order: free generators first, then torsion in
/// ascending order of the invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FgAbGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl FgAbGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self, Error> {
        for w in torsion.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::GroupMismatch);
            }
        }
        if torsion.iter().any(|&d| d < 2) {
            return Err(Error::GroupMismatch);
        }
        Ok(FgAbGroup { free_rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { free_rank: rank, torsion: vec![] }
    }

    pub fn trivial() -> Self {
        FgAbGroup { free_rank: 0, torsion: vec![] }
    }

    /// Z_d^k
    pub fn elementary(d: u64, k: usize) -> Self {
        FgAbGroup { free_rank: 0, torsion: vec![d; k] }
    }

    pub fn n_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            free: vec![0; self.free_rank],
            torsion: vec![0; self.torsion.len()],
        }
    }

    pub fn element(&self, free: Vec<i64>, torsion: Vec<i64>) -> Result<GroupElement, Error> {
        if free.len() != self.free_rank || torsion.len() != self.torsion.len() {
            return Err(Error::GroupMismatch);
        }
        let torsion = torsion
            .iter()
            .zip(&self.torsion)
            .map(|(&x, &d)| x.rem_euclid(d as i64) as u64)
            .collect();
        Ok(GroupElement { group: self.clone(), free, torsion })
    }

    /// The i-th canonical generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut g = self.identity();
        if i < self.free_rank {
            g.free[i] = 1;
        } else {
            g.torsion[i - self.free_rank] = 1;
        }
        g
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.n_generators()).map(|i| self.generator(i)).collect()
    }

    /// Order of the i-th canonical generator (None for infinite).
    pub fn generator_order(&self, i: usize) -> Option<u64> {
        if i < self.free_rank {
            None
        } else {
            Some(self.torsion[i - self.free_rank])
        }
    }

    /// Deterministic enumeration of elements with free coordinates drawn
    /// from 0, 1, -1, ..., bound, -bound, torsion coordinates full range.
    pub fn elements_bounded(&self, free_bound: i64) -> Vec<GroupElement> {
        let mut free_axis = vec![0i64];
        for v in 1..=free_bound {
            free_axis.push(v);
            free_axis.push(-v);
        }
        let mut out = vec![self.identity()];
        for i in 0..self.free_rank {
            let mut next = Vec::with_capacity(out.len() * free_axis.len());
            for e in &out {
                for &v in &free_axis {
                    let mut e2 = e.clone();
                    e2.free[i] = v;
                    next.push(e2);
                }
            }
            out = next;
        }
        for (i, &d) in self.torsion.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for v in 0..d {
                    let mut e2 = e.clone();
                    e2.torsion[i] = v;
                    next.push(e2);
                }
            }
            out = next;
        }
        out
    }

    /// Short display such as "Z^2 x Z_2^3" ("0" for the trivial group).
    pub fn display(&self) -> String {
        let mut parts: Vec<String> = vec![];
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == d {
                j += 1;
            }
            let count = j - i;
            if count == 1 {
                parts.push(format!("Z_{d}"));
            } else {
                parts.push(format!("Z_{d}^{count}"));
            }
            i = j;
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" x ")
        }
    }
}

/// An element of an [`FgAbGroup`], with torsion coordinates reduced
/// into `[0, d_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    group: FgAbGroup,
    free: Vec<i64>,
    torsion: Vec<u64>,
}

impl GroupElement {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn free_coords(&self) -> &[i64] {
        &self.free
    }

    pub fn torsion_coords(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_identity(&self) -> bool {
        self.free.iter().all(|&x| x == 0) && self.torsion.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement, Error> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let free = self
            .free
            .iter()
            .zip(&other.free)
            .map(|(a, b)| a.checked_add(*b).expect("free coordinate overflow"))
            .collect();
        let torsion = self
            .torsion
            .iter()
            .zip(&other.torsion)
            .zip(&self.group.torsion)
            .map(|((a, b), d)| (a + b) % d)
            .collect();
        Ok(GroupElement { group: self.group.clone(), free, torsion })
    }

    pub fn neg(&self) -> GroupElement {
        let free = self.free.iter().map(|a| -a).collect();
        let torsion = self
            .torsion
            .iter()
            .zip(&self.group.torsion)
            .map(|(a, d)| if *a == 0 { 0 } else { d - a })
            .collect();
        GroupElement { group: self.group.clone(), free, torsion }
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement, Error> {
        self.add(&other.neg())
    }

    pub fn scale(&self, n: i64) -> GroupElement {
        let free = self
            .free
            .iter()
            .map(|a| a.checked_mul(n).expect("free coordinate overflow"))
            .collect();
        let torsion = self
            .torsion
            .iter()
            .zip(&self.group.torsion)
            .map(|(a, d)| ((*a as i128 * n as i128).rem_euclid(*d as i128)) as u64)
            .collect();
        GroupElement { group: self.group.clone(), free, torsion }
    }

    /// Least n >= 1 with n*g = 0, or None if infinite.
    pub fn order(&self) -> Option<u64> {
        if self.free.iter().any(|&x| x != 0) {
            return None;
        }
        let mut ord = 1u64;
        for (x, d) in self.torsion.iter().zip(&self.group.torsion) {
            let o = d / gcd_u64(*x, *d);
            ord = lcm_u64(ord, o);
        }
        Some(ord)
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if a == 0 {
        b
    } else {
        gcd_u64(b % a, a)
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

/// Serialized form of a group element.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupElementJson {
    pub free: Vec<i64>,
    pub torsion: Vec<u64>,
}

impl GroupElement {
    pub fn to_json(&self) -> GroupElementJson {
        GroupElementJson { free: self.free.clone(), torsion: self.torsion.clone() }
    }

    pub fn from_json(group: &FgAbGroup, j: &GroupElementJson) -> Result<GroupElement, Error> {
        group.element(
            j.free.clone(),
            j.torsion.iter().map(|&x| x as i64).collect(),
        )
    }
}

/// Homomorphism between finitely generated abelian groups, given by the
/// images of the canonical generators of the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub domain: FgAbGroup,
    pub codomain: FgAbGroup,
    images: Vec<GroupElement>,
}

impl GroupHom {
    pub fn new(
        domain: FgAbGroup,
        codomain: FgAbGroup,
        images: Vec<GroupElement>,
    ) -> Result<GroupHom, Error> {
        if images.len() != domain.n_generators() {
            return Err(Error::BadHomomorphism);
        }
        for img in &images {
            if img.group() != &codomain {
                return Err(Error::GroupMismatch);
            }
        }
        // A torsion generator of order d must map to an element killed by d.
        for (i, img) in images.iter().enumerate() {
            if let Some(d) = domain.generator_order(i) {
                if !img.scale(d as i64).is_identity() {
                    return Err(Error::BadHomomorphism);
                }
            }
        }
        Ok(GroupHom { domain, codomain, images })
    }

    pub fn identity(group: &FgAbGroup) -> GroupHom {
        GroupHom {
            domain: group.clone(),
            codomain: group.clone(),
            images: group.generators(),
        }
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement, Error> {
        if x.group() != &self.domain {
            return Err(Error::GroupMismatch);
        }
        let mut acc = self.codomain.identity();
        for (i, c) in x.free_coords().iter().enumerate() {
            acc = acc.add(&self.images[i].scale(*c))?;
        }
        for (j, c) in x.torsion_coords().iter().enumerate() {
            acc = acc.add(&self.images[self.domain.free_rank + j].scale(*c as i64))?;
        }
        Ok(acc)
    }

    /// self o other (apply `other` first).
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom, Error> {
        if other.codomain != self.domain {
            return Err(Error::GroupMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>, _>>()?;
        GroupHom::new(other.domain.clone(), self.codomain.clone(), images)
    }

    /// Decides whether this homomorphism is an isomorphism. Finitely
    /// generated abelian groups are Hopfian, so for groups with equal
    /// invariant factors surjectivity suffices.
    pub fn is_iso(&self) -> bool {
        if self.domain.free_rank != self.codomain.free_rank
            || self.domain.torsion != self.codomain.torsion
        {
            return false;
        }
        self.is_surjective()
    }

    pub fn is_surjective(&self) -> bool {
        // Cokernel: quotient of Z^k (k = generators of codomain) by the
        // codomain relations together with the generator images.
        let k = self.codomain.n_generators();
        let mut relations: Vec<Vec<BigInt>> = Vec::new();
        for (j, &d) in self.codomain.torsion.iter().enumerate() {
            let mut row = vec![BigInt::zero(); k];
            row[self.codomain.free_rank + j] = BigInt::from(d);
            relations.push(row);
        }
        for img in &self.images {
            let mut row = vec![BigInt::zero(); k];
            for (i, c) in img.free_coords().iter().enumerate() {
                row[i] = BigInt::from(*c);
            }
            for (j, c) in img.torsion_coords().iter().enumerate() {
                row[self.codomain.free_rank + j] = BigInt::from(*c);
            }
            relations.push(row);
        }
        let (group, _) = group_from_presentation(k, &relations);
        group.is_trivial()
    }
}

/// Integer matrix with Smith normal form data: U * M * V = D.
pub struct SnfResult {
    /// Nonzero diagonal entries d1 | d2 | ... (including any 1s).
    pub factors: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub v_inv: Vec<Vec<BigInt>>,
    pub rows: usize,
    pub cols: usize,
}

fn identity_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Smith normal form of an integer matrix, with unimodular transforms.
/// Pivot choice: smallest nonzero absolute value, ties by row-major
/// position, which keeps intermediate entries small and is deterministic.
pub fn smith_normal_form(matrix: &[Vec<BigInt>]) -> SnfResult {
    let rows = matrix.len();
    let cols = if rows > 0 { matrix[0].len() } else { 0 };
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut u = identity_matrix(rows);
    let mut v = identity_matrix(cols);
    let mut v_inv = identity_matrix(cols);

    let row_add = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, c: &BigInt| {
        for k in 0..cols {
            let t = &m[src][k] * c;
            m[dst][k] += t;
        }
        for k in 0..rows {
            let t = &u[src][k] * c;
            u[dst][k] += t;
        }
    };
    let col_add = |m: &mut Vec<Vec<BigInt>>,
                   v: &mut Vec<Vec<BigInt>>,
                   v_inv: &mut Vec<Vec<BigInt>>,
                   dst: usize,
                   src: usize,
                   c: &BigInt| {
        for row in m.iter_mut() {
            let t = &row[src] * c;
            row[dst] += t;
        }
        for row in v.iter_mut() {
            let t = &row[src] * c;
            row[dst] += t;
        }
        // inverse op on the left factor: row src -= c * row dst
        for k in 0..cols {
            let t = &v_inv[dst][k] * c;
            v_inv[src][k] -= t;
        }
    };

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // pivot: smallest nonzero |entry| in the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() {
                    let better = match &pivot {
                        None => true,
                        Some((pi, pj)) => m[i][j].abs() < m[*pi][*pj].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        u.swap(t, pi);
        if pj != t {
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            v_inv.swap(t, pj);
        }

        // clear row and column t
        let mut clean = false;
        while !clean {
            clean = true;
            for i in (t + 1)..rows {
                if !m[i][t].is_zero() {
                    let q = div_rounded(&m[i][t], &m[t][t]);
                    if !q.is_zero() {
                        row_add(&mut m, &mut u, i, t, &-&q);
                    }
                    if !m[i][t].is_zero() {
                        // remainder smaller than pivot: swap up and restart
                        m.swap(t, i);
                        u.swap(t, i);
                        clean = false;
                    }
                }
            }
            for j in (t + 1)..cols {
                if !m[t][j].is_zero() {
                    let q = div_rounded(&m[t][j], &m[t][t]);
                    if !q.is_zero() {
                        col_add(&mut m, &mut v, &mut v_inv, j, t, &-&q);
                    }
                    if !m[t][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        for row in v.iter_mut() {
                            row.swap(t, j);
                        }
                        v_inv.swap(t, j);
                        clean = false;
                    }
                }
            }
        }

        // divisibility: fold in any entry the pivot does not divide
        let mut fixed = true;
        'outer: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if !(&m[i][j] % &m[t][t]).is_zero() {
                    let one = BigInt::from(1);
                    row_add(&mut m, &mut u, t, i, &one);
                    fixed = false;
                    break 'outer;
                }
            }
        }
        if fixed {
            t += 1;
        }
    }

    // normalize signs
    for i in 0..n {
        if m[i][i].is_negative() {
            for k in 0..cols {
                let x = -&m[i][k];
                m[i][k] = x;
            }
            for k in 0..rows {
                let x = -&u[i][k];
                u[i][k] = x;
            }
        }
    }

    let factors: Vec<BigInt> = (0..n).map(|i| m[i][i].clone()).filter(|d| !d.is_zero()).collect();
    SnfResult { factors, u, v, v_inv, rows, cols }
}

/// Rounded division (minimizes the remainder's absolute value).
fn div_rounded(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    let (q, r) = a.div_rem(b);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.is_negative()) != (b.is_negative()) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

/// An all-zero relation row keeps the matrix shape well-defined when no
/// relations are given.
fn pad_relations(n_generators: usize, relations: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if relations.is_empty() {
        vec![vec![BigInt::zero(); n_generators]]
    } else {
        relations.to_vec()
    }
}

/// Z^n modulo the subgroup generated by the relation rows, as a canonical
/// group together with the projection from the free group on n generators.
pub fn group_from_presentation(
    n_generators: usize,
    relations: &[Vec<BigInt>],
) -> (FgAbGroup, GroupHom) {
    for r in relations {
        assert_eq!(r.len(), n_generators, "relation length mismatch");
    }
    let padded = pad_relations(n_generators, relations);
    let snf = smith_normal_form(&padded);
    let r = snf.factors.len();
    let free_rank = n_generators - r;
    let torsion: Vec<u64> = snf
        .factors
        .iter()
        .filter(|d| **d > BigInt::from(1))
        .map(|d| d.to_u64().expect("invariant factor exceeds u64"))
        .collect();
    let group = FgAbGroup { free_rank, torsion: torsion.clone() };

    // y = x * V gives canonical coordinates; y[i] is taken mod d_i for
    // i < r and freely for i >= r. Canonical generator order is free
    // first, so permute.
    let n_skipped = r - torsion.len(); // factors equal to 1
    let mut images = Vec::with_capacity(n_generators);
    for i in 0..n_generators {
        // x = e_i, y = row i of V
        let y: Vec<BigInt> = (0..n_generators).map(|j| snf.v[i][j].clone()).collect();
        let free: Vec<i64> = (r..n_generators)
            .map(|j| y[j].to_i64().expect("coordinate exceeds i64"))
            .collect();
        let torsion_coords: Vec<i64> = (n_skipped..r)
            .map(|j| {
                use num_integer::Integer;
                let d = &snf.factors[j];
                y[j].mod_floor(d).to_i64().expect("coordinate exceeds i64")
            })
            .collect();
        images.push(group.element(free, torsion_coords).unwrap());
    }
    let hom = GroupHom::new(FgAbGroup::free(n_generators), group.clone(), images).unwrap();
    (group, hom)
}

/// A canonical-coordinate section of the presentation: for the j-th
/// canonical generator of the quotient, an integer combination of the
/// original n generators mapping onto it.
pub fn presentation_sections(n_generators: usize, relations: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let padded = pad_relations(n_generators, relations);
    let snf = smith_normal_form(&padded);
    let r = snf.factors.len();
    let n_skipped = snf.factors.iter().filter(|d| **d == BigInt::from(1)).count();
    // canonical generator order: free positions r..n, then torsion
    // positions n_skipped..r
    let mut positions: Vec<usize> = (r..n_generators).collect();
    positions.extend(n_skipped..r);
    positions
        .into_iter()
        .map(|pos| (0..n_generators).map(|i| snf.v_inv[pos][i].clone()).collect())
        .collect()
}

/// Solve C x = b over the integers (C given by rows). Returns one
/// particular solution if the system is solvable.
pub fn solve_integer(c_rows: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let rows = c_rows.len();
    assert_eq!(rows, b.len());
    let cols = if rows > 0 { c_rows[0].len() } else { 0 };
    let snf = smith_normal_form(c_rows);
    // U C V = D; C x = b  <=>  D (V^-1 x) = U b
    let ub: Vec<BigInt> = (0..rows)
        .map(|i| (0..rows).map(|j| &snf.u[i][j] * &b[j]).sum())
        .collect();
    let r = snf.factors.len();
    let mut z = vec![BigInt::zero(); cols];
    for i in 0..rows.min(cols) {
        if i < r {
            use num_integer::Integer;
            let (q, rem) = ub[i].div_rem(&snf.factors[i]);
            if !rem.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    for item in ub.iter().take(rows).skip(rows.min(cols)) {
        if !item.is_zero() {
            return None;
        }
    }
    // x = V z
    let x: Vec<BigInt> = (0..cols)
        .map(|i| (0..cols).map(|j| &snf.v[i][j] * &z[j]).sum())
        .collect();
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn z_x_z2cubed() -> FgAbGroup {
        FgAbGroup::new(1, vec![2, 2, 2]).unwrap()
    }

    #[test]
    fn element_arithmetic() {
        let g = z_x_z2cubed();
        let a = g.element(vec![1], vec![1, 0, 0]).unwrap();
        let b = g.element(vec![-1], vec![1, 1, 0]).unwrap();
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, g.element(vec![0], vec![0, 1, 0]).unwrap());
    }

    #[test]
    fn element_orders() {
        let g = z_x_z2cubed();
        assert_eq!(g.element(vec![0], vec![1, 1, 0]).unwrap().order(), Some(2));
        assert_eq!(g.element(vec![2], vec![0, 0, 0]).unwrap().order(), None);
        assert_eq!(g.identity().order(), Some(1));
    }

    #[test]
    fn snf_small_matrix() {
        // Oracle (gcd of minors): d1 = gcd of entries = 2, d1*d2 = |det| = |16-24| = 8.
        let m = vec![vec![bi(2), bi(4)], vec![bi(6), bi(8)]];
        let snf = smith_normal_form(&m);
        assert_eq!(snf.factors, vec![bi(2), bi(4)]);
    }

    #[test]
    fn snf_identity_and_zero() {
        let id = identity_matrix(3);
        assert_eq!(smith_normal_form(&id).factors, vec![bi(1), bi(1), bi(1)]);
        let zero = vec![vec![BigInt::zero(); 3]; 2];
        assert!(smith_normal_form(&zero).factors.is_empty());
    }

    #[test]
    fn snf_transform_identity_holds() {
        let cases: Vec<Vec<Vec<BigInt>>> = vec![
            vec![vec![bi(2), bi(4)], vec![bi(6), bi(8)]],
            vec![vec![bi(1), bi(1), bi(1)]],
            vec![vec![bi(4), bi(0)], vec![bi(0), bi(6)], vec![bi(2), bi(2)]],
            vec![vec![bi(0), bi(0)], vec![bi(0), bi(0)]],
        ];
        for m in cases {
            let rows = m.len();
            let cols = m[0].len();
            let snf = smith_normal_form(&m);
            // U M V must be diagonal with the invariant factors.
            for i in 0..rows {
                for j in 0..cols {
                    let mut s = BigInt::zero();
                    for k in 0..rows {
                        for l in 0..cols {
                            s += &snf.u[i][k] * &m[k][l] * &snf.v[l][j];
                        }
                    }
                    let expect = if i == j && i < snf.factors.len() {
                        snf.factors[i].clone()
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(s, expect, "UMV mismatch at ({i},{j})");
                }
            }
            // V * V^-1 = I
            for i in 0..cols {
                for j in 0..cols {
                    let s: BigInt = (0..cols).map(|k| &snf.v[i][k] * &snf.v_inv[k][j]).sum();
                    assert_eq!(s, if i == j { bi(1) } else { bi(0) });
                }
            }
            // transforms are unimodular
            assert!(smith_normal_form(&snf.u).factors.iter().all(|d| *d == bi(1)));
            assert!(smith_normal_form(&snf.v).factors.iter().all(|d| *d == bi(1)));
        }
    }

    #[test]
    fn presentation_examples() {
        // two generators with 2g1, 2g2 -> Z_2^2
        let (g, _) = group_from_presentation(
            2,
            &[vec![bi(2), bi(0)], vec![bi(0), bi(2)]],
        );
        assert_eq!(g, FgAbGroup::elementary(2, 2));
        // one generator, no relations -> Z
        let (g, _) = group_from_presentation(1, &[]);
        assert_eq!(g, FgAbGroup::free(1));
        // three generators, relation g1+g2+g3 = 0 -> Z^2
        // Oracle: SNF of [1 1 1] has a single factor 1.
        let (g, hom) = group_from_presentation(3, &[vec![bi(1), bi(1), bi(1)]]);
        assert_eq!(g, FgAbGroup::free(2));
        // the relation must hold among the generator images
        let sum = hom
            .apply(&FgAbGroup::free(3).element(vec![1, 1, 1], vec![]).unwrap())
            .unwrap();
        assert!(sum.is_identity());
    }

    #[test]
    fn presentation_row_permutation_invariant() {
        let rels = vec![
            vec![bi(2), bi(0), bi(4)],
            vec![bi(0), bi(6), bi(0)],
            vec![bi(2), bi(2), bi(2)],
        ];
        let (g1, _) = group_from_presentation(3, &rels);
        let mut permuted = rels.clone();
        permuted.rotate_left(1);
        let (g2, _) = group_from_presentation(3, &permuted);
        assert_eq!(g1, g2);
    }

    #[test]
    fn hom_apply_and_iso() {
        // Z^2 -> Z_3^2 sending generators to generators
        let dom = FgAbGroup::free(2);
        let cod = FgAbGroup::elementary(3, 2);
        let hom = GroupHom::new(
            dom.clone(),
            cod.clone(),
            vec![cod.generator(0), cod.generator(1)],
        )
        .unwrap();
        let img = hom.apply(&dom.element(vec![2, 2], vec![]).unwrap()).unwrap();
        assert_eq!(img, cod.element(vec![], vec![2, 2]).unwrap());
        assert!(!hom.is_iso());
        assert!(hom.is_surjective());

        // Z -> Z_2, 1 -> 1: 5 -> 1
        let z = FgAbGroup::free(1);
        let z2 = FgAbGroup::elementary(2, 1);
        let hom = GroupHom::new(z.clone(), z2.clone(), vec![z2.generator(0)]).unwrap();
        let img = hom.apply(&z.element(vec![5], vec![]).unwrap()).unwrap();
        assert_eq!(img, z2.generator(0));

        assert!(GroupHom::identity(&z_x_z2cubed()).is_iso());
    }

    #[test]
    fn hom_rejects_bad_torsion_images() {
        // Z_2 -> Z_4 sending the generator to an element of order 4
        let dom = FgAbGroup::elementary(2, 1);
        let cod = FgAbGroup::elementary(4, 1);
        assert!(GroupHom::new(dom, cod.clone(), vec![cod.generator(0)]).is_err());
    }

    #[test]
    fn hom_additivity_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let dom = FgAbGroup::new(2, vec![2, 4]).unwrap();
        let cod = FgAbGroup::new(1, vec![2, 8]).unwrap();
        // generator images: free gens anywhere, torsion gens with valid orders
        let hom = GroupHom::new(
            dom.clone(),
            cod.clone(),
            vec![
                cod.element(vec![3], vec![1, 5]).unwrap(),
                cod.element(vec![-1], vec![0, 3]).unwrap(),
                cod.element(vec![0], vec![1, 4]).unwrap(),
                cod.element(vec![0], vec![1, 2]).unwrap(),
            ],
        )
        .unwrap();
        for _ in 0..200 {
            let g = dom
                .element(
                    vec![rng.gen_range(-9..9), rng.gen_range(-9..9)],
                    vec![rng.gen_range(0..8), rng.gen_range(0..8)],
                )
                .unwrap();
            let h = dom
                .element(
                    vec![rng.gen_range(-9..9), rng.gen_range(-9..9)],
                    vec![rng.gen_range(0..8), rng.gen_range(0..8)],
                )
                .unwrap();
            let lhs = hom.apply(&g.add(&h).unwrap()).unwrap();
            let rhs = hom.apply(&g).unwrap().add(&hom.apply(&h).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn solve_integer_system() {
        // x + 2y = 5, 3x + 4y = 11 -> x = 1, y = 2 (unique)
        let c = vec![vec![bi(1), bi(2)], vec![bi(3), bi(4)]];
        let x = solve_integer(&c, &[bi(5), bi(11)]).unwrap();
        assert_eq!(x, vec![bi(1), bi(2)]);
        // 2x = 3 has no integer solution
        let c = vec![vec![bi(2)]];
        assert!(solve_integer(&c, &[bi(3)]).is_none());
    }

    #[test]
    fn sections_map_onto_canonical_generators() {
        let rels = vec![vec![bi(2), bi(0), bi(4)], vec![bi(0), bi(3), bi(0)]];
        let (group, proj) = group_from_presentation(3, &rels);
        let sections = presentation_sections(3, &rels);
        assert_eq!(sections.len(), group.n_generators());
        for (j, sec) in sections.iter().enumerate() {
            let x = FgAbGroup::free(3)
                .element(sec.iter().map(|c| c.to_i64().unwrap()).collect(), vec![])
                .unwrap();
            assert_eq!(proj.apply(&x).unwrap(), group.generator(j));
        }
    }
}
