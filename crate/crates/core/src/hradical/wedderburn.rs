//! Block decomposition of `A / rad A` by central primitive idempotents, in the
//! split case only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algcore::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, Subspace, Vector};
use crate::field::{FieldSpec, Scalar};

const MAX_BRUTE_P: u64 = 1 << 20;
const MAX_RATIONAL_COEFF: u64 = 1_000_000_000_000;

/// `A / J` together with its central primitive idempotents.
#[derive(Clone, Debug)]
pub struct Blocks {
    pub radical: Subspace,
    pub quotient: FiniteDimAlgebra,
    pub unit: Vector,
    /// In the coordinates of `quotient`.
    pub idempotents: Vec<Vector>,
}

impl Blocks {
    /// Splits `A / j`; `j` must be an ideal with semisimple quotient.
    pub fn new(a: &FiniteDimAlgebra, j: &Subspace) -> Result<Self> {
        let quotient = a.quotient(j)?;
        if quotient.dim() == 0 {
            return Ok(Blocks {
                radical: j.clone(),
                unit: Vec::new(),
                quotient,
                idempotents: Vec::new(),
            });
        }
        let unit = match quotient.unit() {
            Some(u) => u.clone(),
            None => quotient
                .find_unit()
                .ok_or_else(|| Error::Contradiction("semisimple quotient without a unit".into()))?,
        };
        let idempotents = central_idempotents(&quotient, &unit)?;
        Ok(Blocks {
            radical: j.clone(),
            quotient,
            unit,
            idempotents,
        })
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// The kernel of `A -> (A/J) e_i`, i.e. `J + lift((1 - e_i)(A/J))`.
    pub fn maximal_ideal(&self, i: usize) -> Subspace {
        let b = &self.quotient;
        let comp = vector::sub(&self.unit, &self.idempotents[i]);
        let rows: Vec<Vector> = (0..b.dim())
            .map(|k| self.radical.lift(&b.mul(&comp, &b.basis_vector(k))))
            .collect();
        let lifted = Subspace::span(b.field(), rows, self.radical.ambient_dim()).expect("sized");
        self.radical.sum(&lifted).expect("sized")
    }

    pub fn maximal_ideals(&self) -> Vec<Subspace> {
        (0..self.len()).map(|i| self.maximal_ideal(i)).collect()
    }

    /// Image of an element of `A` in block `i`.
    pub fn component(&self, i: usize, x: &[Scalar]) -> Vector {
        self.quotient.mul(&self.radical.project(x), &self.idempotents[i])
    }
}

/// Central primitive idempotents of a semisimple algebra with unit `one`.
pub fn central_idempotents(b: &FiniteDimAlgebra, one: &[Scalar]) -> Result<Vec<Vector>> {
    let z = b.center();
    let mut idems = vec![one.to_vec()];
    for zb in z.basis() {
        let mut next = Vec::new();
        for e in idems {
            let u = b.mul(&e, zb);
            let poly = min_poly(b, &e, &u);
            let d = poly.len() - 1;
            if d == 1 {
                next.push(e);
                continue;
            }
            let roots = roots(&poly)?;
            if roots.len() < d {
                return Err(Error::Unsupported(format!(
                    "center of the semisimple quotient does not split over {}",
                    b.field()
                )));
            }
            for (j, lj) in roots.iter().enumerate() {
                let mut acc = e.clone();
                for (k, lk) in roots.iter().enumerate() {
                    if k == j {
                        continue;
                    }
                    let factor = vector::sub(&u, &vector::scale(lk, &e));
                    let inv = (lj - lk).inv().expect("distinct roots");
                    acc = vector::scale(&inv, &b.mul(&acc, &factor));
                }
                next.push(acc);
            }
        }
        idems = next;
    }
    Ok(idems)
}

/// Monic minimal polynomial of `u` in the algebra with identity `e`,
/// lowest degree first.
fn min_poly(b: &FiniteDimAlgebra, e: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
    let f = b.field();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = b.mul(powers.last().expect("nonempty"), u);
        let cols = powers.len();
        let rows: Vec<Vector> = (0..b.dim())
            .map(|r| powers.iter().map(|p| p[r].clone()).collect())
            .collect();
        let m = Matrix::from_rows(f, cols, rows).expect("sized");
        if let Some(c) = m.solve(&next).expect("sized") {
            let mut poly: Vec<Scalar> = c.iter().map(|x| -x).collect();
            poly.push(f.one());
            return poly;
        }
        powers.push(next);
    }
}

fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter().rev().fold(x.zero_like(), |acc, c| &(&acc * x) + c)
}

/// Distinct roots in the base field.
fn roots(poly: &[Scalar]) -> Result<Vec<Scalar>> {
    let f = poly[0].field();
    match f {
        FieldSpec::Prime { p } => {
            if p > MAX_BRUTE_P {
                return Err(Error::Unsupported(format!("root search over F_{p} is too large")));
            }
            Ok(f.elements()?.filter(|x| eval(poly, x).is_zero()).collect())
        }
        FieldSpec::Rationals => rational_roots(poly),
    }
}

fn rational_roots(poly: &[Scalar]) -> Result<Vec<Scalar>> {
    let lcm = poly.iter().fold(BigInt::one(), |l, c| l.lcm(&c.denominator()));
    let mut ints: Vec<BigInt> = poly.iter().map(|c| c.scaled_integer(&lcm)).collect();
    let mut out = Vec::new();
    let zero = Scalar::Q(BigRational::zero());
    if ints[0].is_zero() {
        out.push(zero);
        while ints.len() > 1 && ints[0].is_zero() {
            ints.remove(0);
        }
    }
    if ints.len() == 1 {
        return Ok(out);
    }
    let small = |x: &BigInt| x.abs().to_u64().filter(|&v| v <= MAX_RATIONAL_COEFF);
    let (Some(a0), Some(ad)) = (small(&ints[0]), small(ints.last().expect("nonempty"))) else {
        return Err(Error::Unsupported("minimal polynomial coefficients too large for root search".into()));
    };
    let as_rational: Vec<Scalar> = ints.iter().map(|c| Scalar::Q(BigRational::from_integer(c.clone()))).collect();
    let mut found: Vec<BigRational> = Vec::new();
    for num in divisors(a0) {
        for den in divisors(ad) {
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(sign) * BigInt::from(num), BigInt::from(den));
                if found.contains(&r) {
                    continue;
                }
                if eval(&as_rational, &Scalar::Q(r.clone())).is_zero() {
                    found.push(r);
                }
            }
        }
    }
    found.sort();
    out.extend(found.into_iter().map(Scalar::Q));
    Ok(out)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
