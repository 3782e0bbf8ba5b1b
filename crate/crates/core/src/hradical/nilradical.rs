//! The largest nilpotent ideal of a finite-dimensional algebra.
//!
//! Three backends:
//! - the trace form `{a : tr(L_{ab}) = 0 for all b in A¹}`, exact in
//!   characteristic 0 and for `p > dim A`;
//! - the modular trace tower over `F_p` for any `p`, which refines the trace
//!   form by the functionals `g_i(X) = (tr(X̃^{p^i}) mod p^{i+1}) / p^i` on
//!   integer lifts `X̃`;
//! - an exhaustive sweep over the elements of a small `F_p`-algebra: `v` lies
//!   in the radical iff the ideal it generates is nilpotent.

use crate::algcore::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{self, vector, Matrix, Subspace, Vector};
use crate::field::FieldSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilBackend {
    /// Trace form or modular tower, plus the exhaustive sweep whenever it
    /// fits under the cap; disagreement is a contradiction.
    Auto,
    Trace,
    Modular,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nilradical {
    pub space: Subspace,
    pub method: String,
}

/// `nilradical_with(a, NilBackend::Auto, DEFAULT_CAP)`.
pub fn nilradical(a: &FiniteDimAlgebra) -> Result<Subspace> {
    Ok(nilradical_with(a, NilBackend::Auto, exactla::DEFAULT_CAP)?.space)
}

pub fn nilradical_with(a: &FiniteDimAlgebra, backend: NilBackend, cap: u128) -> Result<Nilradical> {
    let f = a.field();
    let n = a.dim();
    let trace_ok = !f.is_finite() || f.characteristic() > n as u64;
    match backend {
        NilBackend::Trace => {
            if !trace_ok {
                return Err(Error::Unsupported(format!(
                    "trace form needs characteristic 0 or p > dim = {n}, got {f}"
                )));
            }
            checked(a, trace_form(a), "trace-form")
        }
        NilBackend::Modular => {
            if !f.is_finite() {
                return Err(Error::Unsupported("modular trace tower needs a prime field".into()));
            }
            checked(a, modular_tower(a), "modular-trace")
        }
        NilBackend::Exhaustive => {
            exactla::check_cap(f, n, cap)?;
            Ok(Nilradical {
                space: exhaustive(a),
                method: "exhaustive".into(),
            })
        }
        NilBackend::Auto => {
            let fast = if trace_ok {
                nilradical_with(a, NilBackend::Trace, cap)?
            } else {
                let mut r = nilradical_with(a, NilBackend::Modular, cap)?;
                r.method = format!("modular-trace (trace form unsupported: p = {} <= dim = {n})", f.characteristic());
                r
            };
            if exactla::check_cap(f, n, cap).is_err() {
                return Ok(fast);
            }
            let slow = exhaustive(a);
            if slow != fast.space {
                return Err(Error::Contradiction(format!(
                    "nilradical backends disagree: {} gives {}, exhaustive gives {slow}",
                    fast.method, fast.space
                )));
            }
            Ok(Nilradical {
                space: fast.space,
                method: format!("{}; exhaustive agrees", fast.method),
            })
        }
    }
}

fn checked(a: &FiniteDimAlgebra, space: Subspace, method: &str) -> Result<Nilradical> {
    if !a.is_ideal(&space) || !a.is_nilpotent(&space) {
        return Err(Error::Contradiction(format!("{method} backend returned {space}, not a nilpotent ideal")));
    }
    Ok(Nilradical {
        space,
        method: method.into(),
    })
}

/// `A ⊕ k` with the adjoined unit at index `dim A`.
pub(crate) fn unitalization(a: &FiniteDimAlgebra) -> FiniteDimAlgebra {
    let n = a.dim();
    let f = a.field();
    FiniteDimAlgebra::from_fn(f, n + 1, |i, j| {
        if i == n {
            vector::unit(f, n + 1, j)
        } else if j == n {
            vector::unit(f, n + 1, i)
        } else {
            let mut v = a.basis_product(i, j).to_vec();
            v.push(f.zero());
            v
        }
    })
    .expect("sized")
}

fn trace_form(a: &FiniteDimAlgebra) -> Subspace {
    let n = a.dim();
    let f = a.field();
    if n == 0 {
        return Subspace::zero(f, 0);
    }
    // b = 1 contributes tr(L_a); the other conditions are tr(L_{a e_j}).
    let traces: Vec<_> = (0..n).map(|k| a.left_mult_matrix(&a.basis_vector(k)).trace()).collect();
    let tr = |v: &[crate::Scalar]| -> crate::Scalar {
        let mut s = f.zero();
        for (c, t) in v.iter().zip(&traces) {
            s += &(c * t);
        }
        s
    };
    let mut rows = vec![traces.clone()];
    for j in 0..n {
        rows.push((0..n).map(|i| tr(a.basis_product(i, j))).collect());
    }
    let m = Matrix::from_rows(f, n, rows).expect("sized");
    Subspace::span(f, m.nullspace(), n).expect("sized")
}

fn modular_tower(a: &FiniteDimAlgebra) -> Subspace {
    let n = a.dim();
    let f = a.field();
    if n == 0 {
        return Subspace::zero(f, 0);
    }
    let p = f.characteristic() as u128;
    let u = unitalization(a);
    let big_n = n + 1;
    let mut levels = 0;
    let mut pp = p;
    while pp <= big_n as u128 {
        levels += 1;
        pp *= p;
    }
    let mut basis: Vec<Vector> = (0..big_n).map(|i| u.basis_vector(i)).collect();
    let mut pi = 1u128;
    for _ in 0..=levels {
        let modulus = pi * p;
        let g = |x: &Vector| -> u128 {
            let lift = lift_matrix(&u.left_mult_matrix(x));
            let t = int_trace(&int_pow(&lift, pi, modulus), modulus);
            t / pi
        };
        // rows indexed by the right factor e_j, columns by the current basis
        let rows: Vec<Vector> = (0..big_n)
            .map(|j| {
                let ej = u.basis_vector(j);
                basis.iter().map(|b| f.from_i64(g(&u.mul(b, &ej)) as i64)).collect()
            })
            .collect();
        let m = Matrix::from_rows(f, basis.len(), rows).expect("sized");
        basis = m
            .nullspace()
            .into_iter()
            .map(|c| {
                let mut v = vector::zero(f, big_n);
                for (ck, bk) in c.iter().zip(&basis) {
                    vector::axpy(&mut v, ck, bk);
                }
                v
            })
            .collect();
        if basis.is_empty() {
            break;
        }
        pi = modulus;
    }
    let rows = basis.into_iter().map(|mut v| {
        debug_assert!(v[n].is_zero());
        v.truncate(n);
        v
    });
    Subspace::span(f, rows, n).expect("sized")
}

fn lift_matrix(m: &Matrix) -> Vec<Vec<u128>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|x| x.residue().expect("prime field") as u128).collect())
        .collect()
}

fn int_mul(a: &[Vec<u128>], b: &[Vec<u128>], modulus: u128) -> Vec<Vec<u128>> {
    let n = a.len();
    let mut c = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % modulus;
            }
        }
    }
    c
}

fn int_pow(a: &[Vec<u128>], mut e: u128, modulus: u128) -> Vec<Vec<u128>> {
    let n = a.len();
    let mut result: Vec<Vec<u128>> = (0..n).map(|i| (0..n).map(|j| u128::from(i == j)).collect()).collect();
    let mut base: Vec<Vec<u128>> = a.iter().map(|r| r.iter().map(|x| x % modulus).collect()).collect();
    while e > 0 {
        if e & 1 == 1 {
            result = int_mul(&result, &base, modulus);
        }
        e >>= 1;
        if e > 0 {
            base = int_mul(&base, &base, modulus);
        }
    }
    result
}

fn int_trace(a: &[Vec<u128>], modulus: u128) -> u128 {
    a.iter().enumerate().fold(0, |s, (i, r)| (s + r[i]) % modulus)
}

fn exhaustive(a: &FiniteDimAlgebra) -> Subspace {
    let f: FieldSpec = a.field();
    let n = a.dim();
    let mut acc = Subspace::zero(f, n);
    for v in vector::projective_points(f, n) {
        if acc.contains(&v).expect("sized") {
            continue;
        }
        let line = Subspace::span(f, [v], n).expect("sized");
        let gen = a.ideal_generated(&line);
        if a.is_nilpotent(&gen) {
            acc = acc.sum(&gen).expect("sized");
        }
    }
    acc
}
