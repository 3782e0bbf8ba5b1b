//! Coordinate vectors as plain `Vec<Scalar>` with a few helpers.

use crate::field::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn neg(v: &[Scalar]) -> Vector {
    v.iter().map(|x| -x).collect()
}

/// Parses integer coordinates; convenient in tests and fixture builders.
pub fn from_i64s(field: FieldSpec, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

/// Every vector of `F_p^n`, lexicographic with the last coordinate fastest.
pub fn all_vectors(field: FieldSpec, n: usize) -> impl Iterator<Item = Vector> {
    let p = field.order().expect("prime field required");
    let total = (p as u128).pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![field.zero(); n];
        for slot in v.iter_mut().rev() {
            *slot = field.from_i64((idx % p as u128) as i64);
            idx /= p as u128;
        }
        v
    })
}

/// Nonzero vectors of `F_p^n` whose first nonzero coordinate is 1: one
/// representative per line.
pub fn projective_points(field: FieldSpec, n: usize) -> impl Iterator<Item = Vector> {
    all_vectors(field, n).filter(|v| v.iter().find(|x| !x.is_zero()).is_some_and(Scalar::is_one))
}

/// `(a,b,c)` rendering used in witnesses and reports.
pub fn render(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
