//! Exact scalar arithmetic over the coefficient fields used by the
//! constructions: the rationals, prime fields GF(p), and quadratic
//! extensions of either (for adjoining i with i^2 = -1 or a primitive
//! cube root of unity).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Description of a supported field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    Prime {
        p: u64,
    },
    /// Base field extended by a root of the monic polynomial
    /// x^2 + c1*x + c0. Coefficients are canonical strings of base
    /// elements, serialized as `[c0, c1, "1"]`.
    Quadratic {
        base: Box<FieldSpec>,
        minpoly: Vec<String>,
    },
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime(p: u64) -> Self {
        FieldSpec::Prime { p }
    }

    /// Q(i) or GF(p)(i): extension by x^2 + 1.
    pub fn adjoin_sqrt_minus_one(base: FieldSpec) -> Self {
        FieldSpec::Quadratic {
            base: Box::new(base),
            minpoly: vec!["1".into(), "0".into(), "1".into()],
        }
    }

    /// Q(omega) or GF(p)(omega): extension by x^2 + x + 1.
    pub fn adjoin_cube_root(base: FieldSpec) -> Self {
        FieldSpec::Quadratic {
            base: Box::new(base),
            minpoly: vec!["1".into(), "1".into(), "1".into()],
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime { p } => *p,
            FieldSpec::Quadratic { base, .. } => base.characteristic(),
        }
    }
}

/// An element of a [`Field`]. Values are kept in canonical form:
/// reduced fractions with positive denominator, residues in `[0, p)`,
/// and extension elements as canonical coordinate pairs over the base.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
    Ext(Box<(Scalar, Scalar)>),
}

impl Scalar {
    pub fn ext(a: Scalar, b: Scalar) -> Self {
        Scalar::Ext(Box::new((a, b)))
    }
}

/// A validated field handle. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    spec: FieldSpec,
    kind: Kind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Rationals,
    Prime { p: u64 },
    Quadratic { base: Box<Field>, c0: Scalar, c1: Scalar },
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = 11u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field, Error> {
        let kind = match &spec {
            FieldSpec::Rationals => Kind::Rationals,
            FieldSpec::Prime { p } => {
                if !is_prime_u64(*p) {
                    return Err(Error::NonPrimeModulus(*p));
                }
                Kind::Prime { p: *p }
            }
            FieldSpec::Quadratic { base, minpoly } => {
                let base_field = Field::new((**base).clone())?;
                if matches!(base_field.kind, Kind::Quadratic { .. }) {
                    return Err(Error::UnsupportedField(
                        "nested quadratic extensions are not supported".into(),
                    ));
                }
                if minpoly.len() != 3 || minpoly[2] != "1" {
                    return Err(Error::UnsupportedField(
                        "minimal polynomial must be monic of degree 2".into(),
                    ));
                }
                let c0 = base_field.parse(&minpoly[0])?;
                let c1 = base_field.parse(&minpoly[1])?;
                if base_field.has_root(&c0, &c1) {
                    return Err(Error::ReduciblePolynomial);
                }
                Kind::Quadratic { base: Box::new(base_field), c0, c1 }
            }
        };
        Ok(Field { spec, kind })
    }

    pub fn rationals() -> Field {
        Field::new(FieldSpec::Rationals).unwrap()
    }

    pub fn gf(p: u64) -> Result<Field, Error> {
        Field::new(FieldSpec::prime(p))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.characteristic()
    }

    /// Residue modulus for prime fields, if this is one.
    pub fn prime_modulus(&self) -> Option<u64> {
        match &self.kind {
            Kind::Prime { p } => Some(*p),
            _ => None,
        }
    }

    /// Does x^2 + c1*x + c0 have a root? (Base fields only.)
    fn has_root(&self, c0: &Scalar, c1: &Scalar) -> bool {
        match &self.kind {
            Kind::Prime { p } => {
                let (c0, c1) = (as_mod(c0), as_mod(c1));
                (0..*p).any(|r| {
                    let r2 = mul_mod(r, r, *p);
                    (r2 + mul_mod(*c1, r, *p) + c0) % p == 0
                })
            }
            Kind::Rationals => {
                // Root exists iff the discriminant c1^2 - 4 c0 is a rational square.
                let (c0, c1) = (as_rat(c0), as_rat(c1));
                let disc = c1 * c1 - BigRational::from_integer(4.into()) * c0;
                rational_sqrt(&disc).is_some()
            }
            Kind::Quadratic { .. } => unreachable!("nested extension rejected earlier"),
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.kind {
            Kind::Rationals => Scalar::Rat(BigRational::zero()),
            Kind::Prime { .. } => Scalar::Mod(0),
            Kind::Quadratic { base, .. } => Scalar::ext(base.zero(), base.zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match &self.kind {
            Kind::Rationals => Scalar::Rat(BigRational::one()),
            Kind::Prime { .. } => Scalar::Mod(1),
            Kind::Quadratic { base, .. } => Scalar::ext(base.one(), base.zero()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match &self.kind {
            Kind::Rationals => Scalar::Rat(BigRational::from_integer(n.into())),
            Kind::Prime { p } => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod(r)
            }
            Kind::Quadratic { base, .. } => Scalar::ext(base.from_i64(n), base.zero()),
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(m) => *m == 0,
            Scalar::Ext(p) => self.base().is_zero(&p.0) && self.base().is_zero(&p.1),
        }
    }

    fn base(&self) -> &Field {
        match &self.kind {
            Kind::Quadratic { base, .. } => base,
            _ => self,
        }
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (&self.kind, x, y) {
            (Kind::Rationals, Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Kind::Prime { p }, Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod((a + b) % p),
            (Kind::Quadratic { base, .. }, Scalar::Ext(a), Scalar::Ext(b)) => {
                Scalar::ext(base.add(&a.0, &b.0), base.add(&a.1, &b.1))
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        match (&self.kind, x) {
            (Kind::Rationals, Scalar::Rat(a)) => Scalar::Rat(-a),
            (Kind::Prime { p }, Scalar::Mod(a)) => Scalar::Mod(if *a == 0 { 0 } else { p - a }),
            (Kind::Quadratic { base, .. }, Scalar::Ext(a)) => {
                Scalar::ext(base.neg(&a.0), base.neg(&a.1))
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (&self.kind, x, y) {
            (Kind::Rationals, Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Kind::Prime { p }, Scalar::Mod(a), Scalar::Mod(b)) => {
                Scalar::Mod(mul_mod(*a, *b, *p))
            }
            (Kind::Quadratic { base, c0, c1 }, Scalar::Ext(x), Scalar::Ext(y)) => {
                // (a+bt)(c+dt) with t^2 = -c1 t - c0
                let (a, b) = (&x.0, &x.1);
                let (c, d) = (&y.0, &y.1);
                let ac = base.mul(a, c);
                let bd = base.mul(b, d);
                let ad_bc = base.add(&base.mul(a, d), &base.mul(b, c));
                let re = base.sub(&ac, &base.mul(&bd, c0));
                let im = base.sub(&ad_bc, &base.mul(&bd, c1));
                Scalar::ext(re, im)
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn invert(&self, x: &Scalar) -> Result<Scalar, Error> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&self.kind, x) {
            (Kind::Rationals, Scalar::Rat(a)) => Scalar::Rat(a.recip()),
            (Kind::Prime { p }, Scalar::Mod(a)) => Scalar::Mod(inv_mod(*a, *p)),
            (Kind::Quadratic { base, c0, c1 }, Scalar::Ext(x)) => {
                // Norm of a+bt is a^2 - c1 a b + c0 b^2; the inverse is
                // (a - c1 b - b t) / norm.
                let (a, b) = (&x.0, &x.1);
                let norm = base.add(
                    &base.sub(&base.mul(a, a), &base.mul(c1, &base.mul(a, b))),
                    &base.mul(c0, &base.mul(b, b)),
                );
                let ninv = base.invert(&norm)?;
                let re = base.mul(&base.sub(a, &base.mul(c1, b)), &ninv);
                let im = base.neg(&base.mul(b, &ninv));
                Scalar::ext(re, im)
            }
            _ => panic!("scalar does not belong to this field"),
        })
    }

    pub fn div(&self, x: &Scalar, y: &Scalar) -> Result<Scalar, Error> {
        Ok(self.mul(x, &self.invert(y)?))
    }

    /// Divide by a small integer (errors if it is zero in the field).
    pub fn div_i64(&self, x: &Scalar, n: i64) -> Result<Scalar, Error> {
        self.div(x, &self.from_i64(n))
    }

    pub fn half(&self) -> Result<Scalar, Error> {
        self.invert(&self.from_i64(2))
    }

    /// An element i with i^2 = -1, if the field contains one.
    /// Deterministic choice: smallest canonical representative.
    pub fn sqrt_minus_one(&self) -> Option<Scalar> {
        // roots of x^2 + 1
        self.solve_quadratic_in_self(&self.zero(), &self.one())
    }

    /// A primitive cube root of unity (root of x^2 + x + 1), if present.
    /// Errors in characteristic 3, where no such root exists.
    pub fn primitive_cube_root(&self) -> Result<Option<Scalar>, Error> {
        if self.characteristic() == 3 {
            return Err(Error::BadCharacteristic {
                context: "primitive cube root of unity".into(),
                characteristic: 3,
            });
        }
        Ok(self.solve_quadratic_in_self(&self.one(), &self.one()))
    }

    /// Smallest root of x^2 + c1 x + c0 in this field, if any.
    fn solve_quadratic_in_self(&self, c1: &Scalar, c0: &Scalar) -> Option<Scalar> {
        match &self.kind {
            Kind::Prime { p } => {
                let (c0m, c1m) = (as_mod(c0), as_mod(c1));
                (0..*p)
                    .find(|&r| (mul_mod(r, r, *p) + mul_mod(*c1m, r, *p) + c0m) % p == 0)
                    .map(Scalar::Mod)
            }
            Kind::Rationals => {
                // x = (-c1 +- sqrt(disc)) / 2 rational iff disc is a square.
                let (c0r, c1r) = (as_rat(c0), as_rat(c1));
                let four = BigRational::from_integer(4.into());
                let disc = c1r * c1r - four * c0r;
                let s = rational_sqrt(&disc)?;
                let two = BigRational::from_integer(2.into());
                let r1 = (-as_rat(c1) + &s) / &two;
                let r2 = (-as_rat(c1) - &s) / &two;
                Some(Scalar::Rat(if rat_le(&r1, &r2) { r1 } else { r2 }))
            }
            Kind::Quadratic { base, c0: e0, c1: e1 } => {
                // Try base-field roots first (canonically smaller), then
                // solutions with a nonzero t-coordinate.
                if let Some(r) = base.solve_quadratic_in_self(&ext_base_part(c1), &ext_base_part(c0))
                {
                    return Some(Scalar::ext(r, base.zero()));
                }
                // For a + bt with b != 0: expanding (a+bt)^2 + c1(a+bt) + c0 = 0
                // over the base (with base-field c0, c1 here) forces
                // 2a + c1 = b*e1 and then b^2 * (e1^2 - 4 e0) = c1^2 - 4 c0.
                let four = base.from_i64(4);
                let dbase = base.sub(
                    &base.mul(&ext_base_part(c1), &ext_base_part(c1)),
                    &base.mul(&four, &ext_base_part(c0)),
                );
                let dext = base.sub(&base.mul(e1, e1), &base.mul(&four, e0));
                let ratio = base.div(&dbase, &dext).ok()?;
                let b = base.sqrt(&ratio)?;
                if base.is_zero(&b) {
                    return None;
                }
                let two_inv = base.invert(&base.from_i64(2)).ok()?;
                let a = base.mul(
                    &base.sub(&base.mul(&b, e1), &ext_base_part(c1)),
                    &two_inv,
                );
                Some(Scalar::ext(a, b))
            }
        }
    }

    /// Square root in a base field (prime or rationals), smallest choice.
    fn sqrt(&self, x: &Scalar) -> Option<Scalar> {
        match &self.kind {
            Kind::Prime { p } => {
                let xm = as_mod(x);
                (0..*p).find(|&r| mul_mod(r, r, *p) == *xm).map(Scalar::Mod)
            }
            Kind::Rationals => rational_sqrt(as_rat(x)).map(Scalar::Rat),
            Kind::Quadratic { .. } => None,
        }
    }

    /// Canonical decimal string: "5", "-2/3", or "a;b" for extensions.
    pub fn to_string(&self, x: &Scalar) -> String {
        match x {
            Scalar::Rat(r) => r.to_string(),
            Scalar::Mod(m) => m.to_string(),
            Scalar::Ext(p) => {
                let base = self.base();
                if base.is_zero(&p.1) {
                    base.to_string(&p.0)
                } else {
                    format!("{};{}", base.to_string(&p.0), base.to_string(&p.1))
                }
            }
        }
    }

    pub fn parse(&self, s: &str) -> Result<Scalar, Error> {
        let bad = |_| Error::ParseScalar(s.to_string());
        match &self.kind {
            Kind::Rationals => {
                let r: BigRational = if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n.trim().parse().map_err(bad)?;
                    let d: BigInt = d.trim().parse().map_err(bad)?;
                    if d.is_zero() {
                        return Err(Error::ParseScalar(s.to_string()));
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(s.trim().parse().map_err(bad)?)
                };
                Ok(Scalar::Rat(r))
            }
            Kind::Prime { p } => {
                let t = s.trim();
                let (neg, mag) = match t.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, t),
                };
                let v: u64 = mag.parse().map_err(|_| Error::ParseScalar(s.to_string()))?;
                let r = v % p;
                Ok(Scalar::Mod(if neg && r != 0 { p - r } else { r }))
            }
            Kind::Quadratic { base, .. } => {
                if let Some((a, b)) = s.split_once(';') {
                    Ok(Scalar::ext(base.parse(a)?, base.parse(b)?))
                } else {
                    Ok(Scalar::ext(base.parse(s)?, base.zero()))
                }
            }
        }
    }

    /// Deterministic sample stream for fuzz tests: uniform residues over
    /// GF(p); small integers (occasionally fractions) over Q.
    pub fn sample(&self, rng: &mut impl rand::Rng) -> Scalar {
        match &self.kind {
            Kind::Rationals => {
                let n = rng.gen_range(-9i64..=9);
                if rng.gen_range(0..4) == 0 {
                    let d = rng.gen_range(1i64..=5);
                    Scalar::Rat(BigRational::new(n.into(), d.into()))
                } else {
                    Scalar::Rat(BigRational::from_integer(n.into()))
                }
            }
            Kind::Prime { p } => Scalar::Mod(rng.gen_range(0..*p)),
            Kind::Quadratic { base, .. } => {
                Scalar::ext(base.sample(rng), base.sample(rng))
            }
        }
    }

    /// Exact integer value of a scalar, if it is one (used by the
    /// Chevalley integrality check over Q).
    pub fn as_integer(&self, x: &Scalar) -> Option<BigInt> {
        match x {
            Scalar::Rat(r) => r.is_integer().then(|| r.to_integer()),
            Scalar::Mod(m) => Some(BigInt::from(*m)),
            Scalar::Ext(p) => {
                if self.base().is_zero(&p.1) {
                    self.base().as_integer(&p.0)
                } else {
                    None
                }
            }
        }
    }

    /// Reduce an exact integer into the field.
    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match &self.kind {
            Kind::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            Kind::Prime { p } => {
                let m = n.mod_floor_u64(*p);
                Scalar::Mod(m)
            }
            Kind::Quadratic { base, .. } => Scalar::ext(base.from_bigint(n), base.zero()),
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

fn as_mod(x: &Scalar) -> &u64 {
    match x {
        Scalar::Mod(m) => m,
        _ => panic!("expected prime-field scalar"),
    }
}

fn as_rat(x: &Scalar) -> &BigRational {
    match x {
        Scalar::Rat(r) => r,
        _ => panic!("expected rational scalar"),
    }
}

/// Base-field component of an embedded extension scalar. Callers only
/// pass constants with zero t-part.
fn ext_base_part(x: &Scalar) -> Scalar {
    match x {
        Scalar::Ext(p) => p.0.clone(),
        other => other.clone(),
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid; a != 0 mod p, p prime.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "modulus not prime or element zero");
    t.rem_euclid(p as i128) as u64
}

fn rat_le(a: &BigRational, b: &BigRational) -> bool {
    a <= b
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn gf13() -> Field {
        Field::gf(13).unwrap()
    }

    #[test]
    fn gf13_basic_arithmetic() {
        let f = gf13();
        // 5 + 9 = 1 mod 13
        assert_eq!(f.add(&f.from_i64(5), &f.from_i64(9)), f.from_i64(1));
    }

    #[test]
    fn rational_product() {
        let f = Field::rationals();
        let x = f.parse("2/3").unwrap();
        let y = f.parse("9/4").unwrap();
        assert_eq!(f.mul(&x, &y), f.parse("3/2").unwrap());
    }

    #[test]
    fn gf13_inverse_matches_brute_force() {
        let f = gf13();
        // Oracle: scan k = 1..12 for 5k = 1 mod 13.
        let k = (1..13).find(|k| (5 * k) % 13 == 1).unwrap();
        assert_eq!(k, 8);
        assert_eq!(f.invert(&f.from_i64(5)).unwrap(), f.from_i64(8));
        for a in 1..13i64 {
            let inv = f.invert(&f.from_i64(a)).unwrap();
            assert_eq!(f.mul(&f.from_i64(a), &inv), f.one());
        }
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(matches!(Field::gf(12), Err(Error::NonPrimeModulus(12))));
        assert!(Field::gf(2).is_ok());
    }

    #[test]
    fn reducible_polynomial_rejected() {
        // x^2 - 1 = (x-1)(x+1) over Q
        let spec = FieldSpec::Quadratic {
            base: Box::new(FieldSpec::Rationals),
            minpoly: vec!["-1".into(), "0".into(), "1".into()],
        };
        assert!(matches!(Field::new(spec), Err(Error::ReduciblePolynomial)));
        // x^2 + 1 is reducible over GF(13) since 13 = 1 mod 4
        let spec = FieldSpec::adjoin_sqrt_minus_one(FieldSpec::prime(13));
        assert!(matches!(Field::new(spec), Err(Error::ReduciblePolynomial)));
        // ... but irreducible over GF(7)
        assert!(Field::new(FieldSpec::adjoin_sqrt_minus_one(FieldSpec::prime(7))).is_ok());
    }

    #[test]
    fn sqrt_minus_one_cases() {
        // Oracle: scan residues 0..12; 5^2 = 25 = 12 = -1 mod 13.
        let scan = (0..13u64).find(|r| (r * r) % 13 == 12).unwrap();
        assert_eq!(scan, 5);
        assert_eq!(gf13().sqrt_minus_one(), Some(Scalar::Mod(5)));
        assert_eq!(Field::rationals().sqrt_minus_one(), None);
        let qi = Field::new(FieldSpec::adjoin_sqrt_minus_one(FieldSpec::Rationals)).unwrap();
        let i = qi.sqrt_minus_one().unwrap();
        assert_eq!(qi.mul(&i, &i), qi.from_i64(-1));
        // defining relation: i = the adjoined root itself
        assert_eq!(i, Scalar::ext(qi.base().zero(), qi.base().one()));
    }

    #[test]
    fn primitive_cube_root_cases() {
        // Oracle scans: 3^3 = 27 = 1 mod 13 with 3 != 1; 2^3 = 8 = 1 mod 7.
        let scan13 = (2..13u64).find(|r| (r * r + r + 1) % 13 == 0).unwrap();
        assert_eq!(scan13, 3);
        assert_eq!(gf13().primitive_cube_root().unwrap(), Some(Scalar::Mod(3)));
        let scan7 = (2..7u64).find(|r| (r * r + r + 1) % 7 == 0).unwrap();
        assert_eq!(scan7, 2);
        assert_eq!(
            Field::gf(7).unwrap().primitive_cube_root().unwrap(),
            Some(Scalar::Mod(2))
        );
        assert_eq!(Field::rationals().primitive_cube_root().unwrap(), None);
        assert!(Field::gf(3).unwrap().primitive_cube_root().is_err());
        let qw = Field::new(FieldSpec::adjoin_cube_root(FieldSpec::Rationals)).unwrap();
        let w = qw.primitive_cube_root().unwrap().unwrap();
        let w3 = qw.mul(&w, &qw.mul(&w, &w));
        assert_eq!(w3, qw.one());
        assert_ne!(w, qw.one());
    }

    #[test]
    fn gf13_has_both_adjoined_constants() {
        // 13 = 1 mod 12, so the designated heavy-test field has i and omega.
        let f = gf13();
        assert!(f.sqrt_minus_one().is_some());
        assert!(f.primitive_cube_root().unwrap().is_some());
    }

    #[test]
    fn division_by_zero_is_error() {
        let f = gf13();
        assert!(matches!(f.invert(&f.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn string_round_trip() {
        let f = Field::rationals();
        for s in ["5", "-7/3", "0"] {
            let x = f.parse(s).unwrap();
            assert_eq!(f.to_string(&x), s);
        }
        let qi = Field::new(FieldSpec::adjoin_sqrt_minus_one(FieldSpec::Rationals)).unwrap();
        let x = qi.parse("1/2;-3").unwrap();
        assert_eq!(qi.to_string(&x), "1/2;-3");
    }

    fn all_fields() -> Vec<Field> {
        vec![
            Field::rationals(),
            gf13(),
            Field::gf(7).unwrap(),
            Field::new(FieldSpec::adjoin_sqrt_minus_one(FieldSpec::Rationals)).unwrap(),
            Field::new(FieldSpec::adjoin_cube_root(FieldSpec::Rationals)).unwrap(),
        ]
    }

    #[test]
    fn field_axioms_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for f in all_fields() {
            for _ in 0..200 {
                let (x, y, z) = (f.sample(&mut rng), f.sample(&mut rng), f.sample(&mut rng));
                // associativity and commutativity
                assert_eq!(f.add(&f.add(&x, &y), &z), f.add(&x, &f.add(&y, &z)));
                assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
                assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
                // distributivity
                assert_eq!(
                    f.mul(&x, &f.add(&y, &z)),
                    f.add(&f.mul(&x, &y), &f.mul(&x, &z))
                );
                // inverses
                assert_eq!(f.add(&x, &f.neg(&x)), f.zero());
                if !f.is_zero(&x) {
                    assert_eq!(f.mul(&x, &f.invert(&x).unwrap()), f.one());
                }
            }
        }
    }
}
