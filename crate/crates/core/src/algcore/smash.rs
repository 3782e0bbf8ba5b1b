//! The smash product `R # H` on `R ⊗ H`, basis `e_a # f_h` at index `a * dim H + h`.

use crate::algcore::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{vector, Subspace, Vector};
use crate::field::Scalar;
use crate::haction::HModuleAlgebra;

/// Coordinates of `a # h`.
pub fn tensor(a: &[Scalar], h: &[Scalar]) -> Vector {
    a.iter().flat_map(|x| h.iter().map(move |y| x * y)).collect()
}

/// `(a # h)(b # g) = Σ a (h_1 · b) # h_2 g`, with unit `1_R # 1_H`.
pub fn smash_product(m: &HModuleAlgebra) -> Result<FiniteDimAlgebra> {
    let one_r = m
        .r()
        .unit()
        .ok_or_else(|| Error::Precondition("smash product embedding needs R to have a unit".into()))?;
    let (dr, dh) = (m.dim_r(), m.dim_h());
    let n = dr * dh;
    let f = m.field();
    let h_alg = m.h().algebra();
    let mut products = Vec::with_capacity(n * n);
    for a in 0..dr {
        let ea = m.r().basis_vector(a);
        for h in 0..dh {
            let delta = m.h().comult_table(h);
            for b in 0..dr {
                let eb = m.r().basis_vector(b);
                for g in 0..dh {
                    let mut out = vector::zero(f, n);
                    for (jk, c) in delta.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (j, k) = (jk / dh, jk % dh);
                        let left = m.r().mul(&ea, &m.act_basis(j, &eb));
                        let right = h_alg.basis_product(k, g);
                        vector::axpy(&mut out, c, &tensor(&left, right));
                    }
                    products.push(out);
                }
            }
        }
    }
    FiniteDimAlgebra::new(f, n, products)?.with_unit(tensor(one_r, m.h().unit()))
}

/// `a -> a # 1_H`.
pub fn embed_r(m: &HModuleAlgebra, a: &[Scalar]) -> Vector {
    tensor(a, m.h().unit())
}

/// `{ a in R : a # 1_H in S }` for a subspace `S` of `R # H`.
pub fn r_preimage(m: &HModuleAlgebra, s: &Subspace) -> Result<Subspace> {
    let images: Vec<Vector> = (0..m.dim_r()).map(|a| embed_r(m, &m.r().basis_vector(a))).collect();
    Subspace::common_preimage(m.field(), m.dim_r(), &[images], s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::{fixtures, HopfAlgebra};
    use crate::exactla::vector::from_i64s;
    use crate::field::FieldSpec;

    #[test]
    fn trivial_hopf_gives_back_r() {
        let q = FieldSpec::Rationals;
        let e1 = fixtures::e1(q).unwrap();
        let s = smash_product(&e1).unwrap();
        assert_eq!(s, e1.r().clone());
    }

    #[test]
    fn e2_product_rule_and_dimension() {
        let q = FieldSpec::Rationals;
        let e2 = fixtures::e2(q).unwrap();
        let s = smash_product(&e2).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.validate().is_ok());
        let one_g = tensor(&from_i64s(q, &[1, 0]), &from_i64s(q, &[0, 1]));
        let x_one = tensor(&from_i64s(q, &[0, 1]), &from_i64s(q, &[1, 0]));
        // (1#g)(x#1) = (g·x)#g = -x#g
        let expected = tensor(&from_i64s(q, &[0, -1]), &from_i64s(q, &[0, 1]));
        assert_eq!(s.multiply(&one_g, &x_one).unwrap(), expected);
        assert_eq!(s.find_unit(), Some(tensor(&from_i64s(q, &[1, 0]), &from_i64s(q, &[1, 0]))));
    }

    #[test]
    fn needs_unit() {
        let q = FieldSpec::Rationals;
        let r = crate::algcore::FiniteDimAlgebra::zero_product(q, 1);
        let m = HModuleAlgebra::trivial_action(r, HopfAlgebra::group_c2(q)).unwrap();
        assert!(matches!(smash_product(&m), Err(Error::Precondition(_))));
    }
}
