use crate::algcore::algebra::{Element, FiniteDimAlgebra};
use crate::algcore::report::ValidationReport;
use crate::error::{check_dim, Error, Result};
use crate::exactla::{vector, Matrix, Subspace, Vector};
use crate::field::{FieldSpec, Scalar};

/// A finite-dimensional Hopf algebra in a fixed basis.
///
/// `comult[i]` is the `dim x dim` coefficient table of `Δ(e_i)` flattened
/// row-major, so `Δ(e_i) = sum_{j,k} comult[i][j*dim+k] e_j ⊗ e_k`.
/// Row `i` of `antipode` holds the coordinates of `S(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: FiniteDimAlgebra,
    comult: Vec<Vector>,
    counit: Vector,
    antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(algebra: FiniteDimAlgebra, comult: Vec<Vector>, counit: Vector, antipode: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if algebra.unit().is_none() {
            return Err(Error::Precondition("Hopf algebra needs a unit".into()));
        }
        check_dim(n, comult.len())?;
        for c in &comult {
            check_dim(n * n, c.len())?;
        }
        check_dim(n, counit.len())?;
        check_dim(n, antipode.nrows())?;
        check_dim(n, antipode.ncols())?;
        Ok(HopfAlgebra {
            algebra,
            comult,
            counit,
            antipode,
        })
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit().expect("checked at construction")
    }

    pub fn comult_table(&self, i: usize) -> &[Scalar] {
        &self.comult[i]
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    /// `Δ(h)` as a flattened `dim x dim` table.
    pub fn coproduct(&self, h: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vector::zero(self.field(), n * n);
        for (i, c) in h.iter().enumerate() {
            vector::axpy(&mut out, c, &self.comult[i]);
        }
        out
    }

    pub fn counit(&self, h: &[Scalar]) -> Scalar {
        h.iter()
            .zip(&self.counit)
            .fold(self.field().zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn antipode(&self, h: &[Scalar]) -> Element {
        let mut out = vector::zero(self.field(), self.dim());
        for (i, c) in h.iter().enumerate() {
            vector::axpy(&mut out, c, self.antipode.row(i));
        }
        out
    }

    /// Product in `H ⊗ H` of two flattened tables.
    fn tensor_mul(&self, s: &[Scalar], t: &[Scalar]) -> Vector {
        let n = self.dim();
        let a = &self.algebra;
        let mut out = vector::zero(self.field(), n * n);
        for (jk, x) in s.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            for (lm, y) in t.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (l, m) = (lm / n, lm % n);
                let c = x * y;
                let left = a.basis_product(j, l);
                let right = a.basis_product(k, m);
                for (p, lp) in left.iter().enumerate() {
                    if lp.is_zero() {
                        continue;
                    }
                    let cl = &c * lp;
                    for (q, rq) in right.iter().enumerate() {
                        if !rq.is_zero() {
                            out[p * n + q] += &(&cl * rq);
                        }
                    }
                }
            }
        }
        out
    }

    /// Full Hopf axiom check on every basis element: the algebra, coassociativity,
    /// counit, bialgebra compatibility and the antipode identities.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.algebra.validate();
        if !report.is_ok() {
            return report;
        }
        let n = self.dim();
        let f = self.field();
        let one = self.unit().clone();

        for i in 0..n {
            let d = &self.comult[i];
            // (Δ⊗id)Δ and (id⊗Δ)Δ as n^3 tables
            let mut lhs = vector::zero(f, n * n * n);
            let mut rhs = vector::zero(f, n * n * n);
            for j in 0..n {
                for k in 0..n {
                    let c = &d[j * n + k];
                    if c.is_zero() {
                        continue;
                    }
                    for (ab, x) in self.comult[j].iter().enumerate() {
                        if !x.is_zero() {
                            lhs[ab * n + k] += &(c * x);
                        }
                    }
                    for (ab, x) in self.comult[k].iter().enumerate() {
                        if !x.is_zero() {
                            rhs[j * n * n + ab] += &(c * x);
                        }
                    }
                }
            }
            if lhs != rhs {
                report.push("coassociativity", vec![i], format!("(Δ⊗id)Δ(e{i}) != (id⊗Δ)Δ(e{i})"));
            }

            let mut left = vector::zero(f, n);
            let mut right = vector::zero(f, n);
            for j in 0..n {
                for k in 0..n {
                    let c = &d[j * n + k];
                    left[k] += &(c * &self.counit[j]);
                    right[j] += &(c * &self.counit[k]);
                }
            }
            let e = self.algebra.basis_vector(i);
            if left != e || right != e {
                report.push("counit", vec![i], format!("(ε⊗id)Δ(e{i}) or (id⊗ε)Δ(e{i}) != e{i}"));
            }

            let target = vector::scale(&self.counit[i], &one);
            let mut s_left = vector::zero(f, n);
            let mut s_right = vector::zero(f, n);
            for j in 0..n {
                for k in 0..n {
                    let c = &d[j * n + k];
                    if c.is_zero() {
                        continue;
                    }
                    let ej = self.algebra.basis_vector(j);
                    let ek = self.algebra.basis_vector(k);
                    vector::axpy(&mut s_left, c, &self.algebra.mul(self.antipode.row(j), &ek));
                    vector::axpy(&mut s_right, c, &self.algebra.mul(&ej, self.antipode.row(k)));
                }
            }
            if s_left != target || s_right != target {
                report.push(
                    "antipode",
                    vec![i],
                    format!("m(S⊗id)Δ(e{i}) or m(id⊗S)Δ(e{i}) != ε(e{i})1"),
                );
            }
        }

        for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.basis_product(i, j);
                let delta_prod = self.coproduct(prod);
                let prod_delta = self.tensor_mul(&self.comult[i], &self.comult[j]);
                if delta_prod != prod_delta {
                    report.push("bialgebra-comult", vec![i, j], format!("Δ(e{i}e{j}) != Δ(e{i})Δ(e{j})"));
                }
                if self.counit(prod) != &self.counit[i] * &self.counit[j] {
                    report.push("bialgebra-counit", vec![i, j], format!("ε(e{i}e{j}) != ε(e{i})ε(e{j})"));
                }
            }
        }
        let mut one_one = vector::zero(f, n * n);
        for (a, x) in one.iter().enumerate() {
            for (b, y) in one.iter().enumerate() {
                one_one[a * n + b] = x * y;
            }
        }
        if self.coproduct(&one) != one_one {
            report.push("bialgebra-unit", vec![], "Δ(1) != 1⊗1");
        }
        if !self.counit(&one).is_one() {
            report.push("bialgebra-unit", vec![], "ε(1) != 1");
        }
        report
    }

    /// Left integrals `{ t : h t = ε(h) t for all h }`.
    pub fn left_integrals(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let mut rows = Vec::new();
        for i in 0..n {
            let l = self.algebra.left_mult_matrix(&self.algebra.basis_vector(i));
            for r in 0..n {
                let mut row = l.row(r).to_vec();
                row[r] -= &self.counit[i];
                rows.push(row);
            }
        }
        let m = Matrix::from_rows(f, n, rows).expect("sized");
        Subspace::span(f, m.nullspace(), n).expect("sized")
    }

    /// A left integral with `ε(t) = 1`, if the counit does not vanish on integrals.
    pub fn normalized_integral(&self) -> Option<Element> {
        let ints = self.left_integrals();
        for b in ints.basis() {
            let e = self.counit(b);
            if let Some(inv) = e.inv() {
                return Some(vector::scale(&inv, b));
            }
        }
        None
    }

    pub fn is_normalized_integral(&self, t: &[Scalar]) -> bool {
        t.len() == self.dim() && self.counit(t).is_one() && self.left_integrals().contains(t).unwrap_or(false)
    }

    /// The one-dimensional Hopf algebra `k`.
    pub fn trivial(field: FieldSpec) -> Self {
        let alg = FiniteDimAlgebra::new(field, 1, vec![vec![field.one()]])
            .and_then(|a| a.with_unit(vec![field.one()]))
            .expect("static");
        HopfAlgebra::new(alg, vec![vec![field.one()]], vec![field.one()], Matrix::identity(field, 1)).expect("static")
    }

    /// Group algebra `kC_2` on the basis `{1, g}`.
    pub fn group_c2(field: FieldSpec) -> Self {
        let o = field.one();
        let alg = FiniteDimAlgebra::from_triples(
            field,
            2,
            &[(0, 0, 0, o.clone()), (0, 1, 1, o.clone()), (1, 0, 1, o.clone()), (1, 1, 0, o.clone())],
        )
        .and_then(|a| a.with_unit(vector::from_i64s(field, &[1, 0])))
        .expect("static");
        let comult = vec![vector::from_i64s(field, &[1, 0, 0, 0]), vector::from_i64s(field, &[0, 0, 0, 1])];
        HopfAlgebra::new(alg, comult, vector::from_i64s(field, &[1, 1]), Matrix::identity(field, 2)).expect("static")
    }

    /// The dual `(kC_2)^*` on the basis of dual idempotents `{p0, p1}`.
    pub fn dual_c2(field: FieldSpec) -> Self {
        let o = field.one();
        let alg = FiniteDimAlgebra::from_triples(field, 2, &[(0, 0, 0, o.clone()), (1, 1, 1, o.clone())])
            .and_then(|a| a.with_unit(vector::from_i64s(field, &[1, 1])))
            .expect("static");
        // Δ(p0) = p0⊗p0 + p1⊗p1, Δ(p1) = p0⊗p1 + p1⊗p0
        let comult = vec![vector::from_i64s(field, &[1, 0, 0, 1]), vector::from_i64s(field, &[0, 1, 1, 0])];
        HopfAlgebra::new(alg, comult, vector::from_i64s(field, &[1, 0]), Matrix::identity(field, 2)).expect("static")
    }

    /// Sweedler's four-dimensional algebra on `{1, g, y, gy}` with
    /// `g^2 = 1`, `y^2 = 0`, `yg = -gy`, `Δy = y⊗1 + g⊗y`, `S(y) = -gy`.
    pub fn sweedler(field: FieldSpec) -> Result<Self> {
        if field.characteristic() == 2 {
            return Err(Error::Unsupported("Sweedler's algebra needs characteristic != 2".into()));
        }
        let o = field.one();
        let m = -&o;
        // indices: 0 = 1, 1 = g, 2 = y, 3 = gy
        let mut t = Vec::new();
        for i in 0..4 {
            t.push((0, i, i, o.clone()));
            if i != 0 {
                t.push((i, 0, i, o.clone()));
            }
        }
        t.extend([
            (1, 1, 0, o.clone()),
            (1, 2, 3, o.clone()),
            (1, 3, 2, o.clone()),
            (2, 1, 3, m.clone()),
            (3, 1, 2, m.clone()),
        ]);
        let alg = FiniteDimAlgebra::from_triples(field, 4, &t)?.with_unit(vector::from_i64s(field, &[1, 0, 0, 0]))?;
        let tab = |pairs: &[(usize, usize)]| {
            let mut v = vector::zero(field, 16);
            for &(j, k) in pairs {
                v[j * 4 + k] = o.clone();
            }
            v
        };
        let comult = vec![
            tab(&[(0, 0)]),
            tab(&[(1, 1)]),
            tab(&[(2, 0), (1, 2)]),
            tab(&[(3, 1), (0, 3)]),
        ];
        let antipode = Matrix::from_i64(field, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        HopfAlgebra::new(alg, comult, vector::from_i64s(field, &[1, 1, 0, 0]), antipode)
    }

    /// Same data with a replaced antipode (used to build negative controls).
    pub fn with_antipode(&self, antipode: Matrix) -> Result<Self> {
        HopfAlgebra::new(self.algebra.clone(), self.comult.clone(), self.counit.clone(), antipode)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::vector::from_i64s;

    #[test]
    fn standard_hopf_algebras_validate() {
        let q = FieldSpec::Rationals;
        for h in [HopfAlgebra::trivial(q), HopfAlgebra::group_c2(q), HopfAlgebra::dual_c2(q)] {
            assert!(h.validate().is_ok(), "{}", h.validate());
        }
        for f in [q, FieldSpec::prime(3).unwrap(), FieldSpec::prime(5).unwrap()] {
            let h = HopfAlgebra::sweedler(f).unwrap();
            assert!(h.validate().is_ok(), "{}", h.validate());
        }
        assert!(HopfAlgebra::sweedler(FieldSpec::prime(2).unwrap()).is_err());
    }

    #[test]
    fn corrupted_sweedler_antipode_names_y() {
        let q = FieldSpec::Rationals;
        let h = HopfAlgebra::sweedler(q).unwrap();
        // S(y) = +gy instead of -gy
        let bad = Matrix::from_i64(q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let rep = h.with_antipode(bad).unwrap().validate();
        assert!(rep.failures.iter().any(|f| f.axiom == "antipode" && f.indices == vec![2]));
        // m(S⊗id)Δ(y) = S(y) + S(g)y = gy + gy = 2gy with the corrupted S
        let sy = from_i64s(q, &[0, 0, 0, 1]);
        let g = from_i64s(q, &[0, 1, 0, 0]);
        let y = from_i64s(q, &[0, 0, 1, 0]);
        let lhs = vector::add(&sy, &h.algebra().mul(&g, &y));
        assert_eq!(lhs, from_i64s(q, &[0, 0, 0, 2]));
    }

    #[test]
    fn integrals_of_c2() {
        let q = FieldSpec::Rationals;
        let h = HopfAlgebra::group_c2(q);
        let ints = h.left_integrals();
        assert_eq!(ints, Subspace::span(q, [from_i64s(q, &[1, 1])], 2).unwrap());
        let half = q.parse("1/2").unwrap();
        assert_eq!(h.normalized_integral(), Some(vec![half.clone(), half]));

        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(HopfAlgebra::group_c2(f2).normalized_integral(), None);
    }

    #[test]
    fn sweedler_integral_is_y_plus_gy() {
        let q = FieldSpec::Rationals;
        let h = HopfAlgebra::sweedler(q).unwrap();
        assert_eq!(h.left_integrals(), Subspace::span(q, [from_i64s(q, &[0, 0, 1, 1])], 4).unwrap());
        assert_eq!(h.normalized_integral(), None);
    }

    #[test]
    fn dual_c2_integral_is_p0() {
        let f3 = FieldSpec::prime(3).unwrap();
        let h = HopfAlgebra::dual_c2(f3);
        assert_eq!(h.normalized_integral(), Some(from_i64s(f3, &[1, 0])));
    }
}
