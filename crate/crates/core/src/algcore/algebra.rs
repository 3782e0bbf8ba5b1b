use crate::algcore::report::ValidationReport;
use crate::error::{check_dim, Error, Result};
use crate::exactla::{vector, Matrix, Subspace, Vector};
use crate::field::{FieldSpec, Scalar};

/// A coordinate vector in an algebra's basis.
pub type Element = Vector;

/// Finite-dimensional associative algebra given by structure constants
/// `e_i e_j = sum_k c[i][j][k] e_k`, possibly without a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDimAlgebra {
    field: FieldSpec,
    dim: usize,
    /// `products[i * dim + j]` holds the coordinates of `e_i e_j`.
    products: Vec<Vector>,
    unit: Option<Vector>,
}

impl FiniteDimAlgebra {
    pub fn new(field: FieldSpec, dim: usize, products: Vec<Vector>) -> Result<Self> {
        check_dim(dim * dim, products.len())?;
        for p in &products {
            check_dim(dim, p.len())?;
        }
        Ok(FiniteDimAlgebra {
            field,
            dim,
            products,
            unit: None,
        })
    }

    pub fn from_fn(field: FieldSpec, dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let products = (0..dim * dim).map(|ij| f(ij / dim, ij % dim)).collect();
        Self::new(field, dim, products)
    }

    /// Builds from sparse `(i, j, k, value)` triples; omitted entries are zero.
    pub fn from_triples(field: FieldSpec, dim: usize, triples: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut products = vec![vector::zero(field, dim); dim * dim];
        for (i, j, k, v) in triples {
            for idx in [i, j, k] {
                if *idx >= dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: *idx + 1 });
                }
            }
            products[i * dim + j][*k] += v;
        }
        Self::new(field, dim, products)
    }

    /// The algebra with zero multiplication.
    pub fn zero_product(field: FieldSpec, dim: usize) -> Self {
        FiniteDimAlgebra {
            field,
            dim,
            products: vec![vector::zero(field, dim); dim * dim],
            unit: None,
        }
    }

    /// Declares a unit. `validate` checks that it really is one.
    pub fn with_unit(mut self, unit: Vector) -> Result<Self> {
        check_dim(self.dim, unit.len())?;
        self.unit = Some(unit);
        Ok(self)
    }

    pub fn without_unit(mut self) -> Self {
        self.unit = None;
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.products[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.products[i * self.dim + j][k]
    }

    pub fn basis_vector(&self, i: usize) -> Element {
        vector::unit(self.field, self.dim, i)
    }

    pub fn zero_element(&self) -> Element {
        vector::zero(self.field, self.dim)
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Element> {
        check_dim(self.dim, u.len())?;
        check_dim(self.dim, v.len())?;
        Ok(self.mul(u, v))
    }

    /// Bilinear product without length checks.
    pub(crate) fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Element {
        let mut out = self.zero_element();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                vector::axpy(&mut out, &(ui * vj), self.basis_product(i, j));
            }
        }
        out
    }

    pub(crate) fn mul3(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Element {
        self.mul(&self.mul(a, b), c)
    }

    /// Matrix of `x -> a x` acting on column coordinate vectors.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_rows(self.field, self.dim, cols).expect("sized").transpose()
    }

    /// Matrix of `x -> x a` acting on column coordinate vectors.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), a)).collect();
        Matrix::from_rows(self.field, self.dim, cols).expect("sized").transpose()
    }

    /// Associativity on all basis triples, plus the declared unit if any.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if let Err(e) = self.field.validate() {
            report.push("field", vec![], e.to_string());
            return report;
        }
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), self.basis_product(j, k));
                    if left != right {
                        report.push(
                            "associativity",
                            vec![i, j, k],
                            format!("(e{i}e{j})e{k} != e{i}(e{j}e{k})"),
                        );
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            for i in 0..n {
                let e = self.basis_vector(i);
                if self.mul(u, &e) != e || self.mul(&e, u) != e {
                    report.push("unit", vec![i], format!("declared unit fails on e{i}"));
                }
            }
        }
        report
    }

    fn solve_unit(&self, left: bool, right: bool) -> Option<Element> {
        let n = self.dim;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            for k in 0..n {
                let target = if i == k { self.field.one() } else { self.field.zero() };
                if left {
                    rows.push((0..n).map(|a| self.structure_constant(a, i, k).clone()).collect());
                    rhs.push(target.clone());
                }
                if right {
                    rows.push((0..n).map(|a| self.structure_constant(i, a, k).clone()).collect());
                    rhs.push(target);
                }
            }
        }
        if n == 0 {
            return Some(Vec::new());
        }
        let m = Matrix::from_rows(self.field, n, rows).ok()?;
        m.solve(&rhs).ok().flatten()
    }

    /// Solves `e e_i = e_i = e_i e` for all `i`; the unit is unique when it exists.
    pub fn find_unit(&self) -> Option<Element> {
        self.solve_unit(true, true)
    }

    /// Some `u` with `u x = x` for all `x`.
    pub fn find_left_unit(&self) -> Option<Element> {
        self.solve_unit(true, false)
    }

    /// Some `u` with `x u = x` for all `x`.
    pub fn find_right_unit(&self) -> Option<Element> {
        self.solve_unit(false, true)
    }

    /// Span of all products `s t` with `s` in `a`, `t` in `b`.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let rows = a
            .basis()
            .iter()
            .flat_map(|s| b.basis().iter().map(move |t| self.mul(s, t)))
            .collect();
        Subspace::from_rows(self.field, self.dim, rows)
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// `None` when `s` is a two-sided ideal, otherwise a product escaping it.
    pub fn ideal_witness(&self, s: &Subspace) -> Option<String> {
        for (bi, b) in s.basis().iter().enumerate() {
            for r in 0..self.dim {
                let e = self.basis_vector(r);
                if !s.contains(&self.mul(&e, b)).unwrap_or(false) {
                    return Some(format!("e{r} * basis[{bi}] escapes"));
                }
                if !s.contains(&self.mul(b, &e)).unwrap_or(false) {
                    return Some(format!("basis[{bi}] * e{r} escapes"));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.ideal_witness(s).is_none()
    }

    /// Two-sided ideal generated by `s` (no unit assumed): `S + RS + SR + RSR`.
    pub fn ideal_generated(&self, s: &Subspace) -> Subspace {
        let mut rows: Vec<Vector> = s.basis().to_vec();
        for b in s.basis() {
            for r in 0..self.dim {
                let e = self.basis_vector(r);
                let rb = self.mul(&e, b);
                rows.push(self.mul(b, &e));
                for q in 0..self.dim {
                    rows.push(self.mul(&rb, &self.basis_vector(q)));
                }
                rows.push(rb);
            }
        }
        Subspace::from_rows(self.field, self.dim, rows)
    }

    /// `(true, k)` with `s^k = 0` minimal, or `(false, 0)` when powers stabilize
    /// at a nonzero subspace. The zero subspace has index 1.
    pub fn nilpotency_index(&self, s: &Subspace) -> (bool, usize) {
        let mut power = s.clone();
        let mut k = 1;
        loop {
            if power.is_zero() {
                return (true, k);
            }
            let next = self.product_space(&power, s);
            if next == power || k > self.dim + 1 {
                return (false, 0);
            }
            power = next;
            k += 1;
        }
    }

    pub fn is_nilpotent(&self, s: &Subspace) -> bool {
        self.nilpotency_index(s).0
    }

    /// The quotient by an ideal, in the complement basis of its RREF form.
    pub fn quotient(&self, ideal: &Subspace) -> Result<FiniteDimAlgebra> {
        check_dim(self.dim, ideal.ambient_dim())?;
        if let Some(w) = self.ideal_witness(ideal) {
            return Err(Error::Precondition(format!("not an ideal: {w}")));
        }
        let comp = ideal.complement_coords();
        let m = comp.len();
        let products = (0..m * m)
            .map(|ab| ideal.project(self.basis_product(comp[ab / m], comp[ab % m])))
            .collect();
        let unit = self.unit.as_ref().map(|u| ideal.project(u));
        Ok(FiniteDimAlgebra {
            field: self.field,
            dim: m,
            products,
            unit,
        })
    }

    /// The center `{ z : z e_i = e_i z for all i }`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::new();
        for i in 0..n {
            for k in 0..n {
                rows.push(
                    (0..n)
                        .map(|a| self.structure_constant(a, i, k) - self.structure_constant(i, a, k))
                        .collect(),
                );
            }
        }
        if n == 0 {
            return Subspace::zero(self.field, 0);
        }
        let m = Matrix::from_rows(self.field, n, rows).expect("sized");
        Subspace::from_rows(self.field, n, m.nullspace())
    }

    /// Restriction of the structure constants to a subalgebra (given by any
    /// subspace closed under multiplication), in its RREF basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<FiniteDimAlgebra> {
        let basis = s.basis();
        let d = basis.len();
        let coords = |v: &[Scalar]| -> Result<Vector> {
            let r = s.reduce(v);
            if !vector::is_zero(&r) {
                return Err(Error::Precondition("subspace is not closed under multiplication".into()));
            }
            Ok(s.pivots().iter().map(|&p| v[p].clone()).collect())
        };
        let mut products = Vec::with_capacity(d * d);
        for a in basis {
            for b in basis {
                products.push(coords(&self.mul(a, b))?);
            }
        }
        FiniteDimAlgebra::new(self.field, d, products)
    }
}
