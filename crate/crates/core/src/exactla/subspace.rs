use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::exactla::matrix::{rref_in_place, Matrix};
use crate::exactla::vector::{self, Vector};
use crate::field::{FieldSpec, Scalar};

/// A subspace of `k^n` held by its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// bases are identical. Every ideal and radical in the crate is one of these.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| vector::unit(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I, V>(field: FieldSpec, vectors: I, ambient: usize) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vector>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            let v: Vector = v.into();
            check_dim(ambient, v.len())?;
            if !vector::is_zero(&v) {
                rows.push(v);
            }
        }
        Ok(Self::from_rows(field, ambient, rows))
    }

    /// Spans rows that are already known to have length `ambient`.
    pub(crate) fn from_rows(field: FieldSpec, ambient: usize, mut rows: Vec<Vector>) -> Self {
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            field,
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, self.basis.clone()).expect("rows sized")
    }

    /// Coordinates not used as pivots: they index a basis of the quotient.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Residue of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if !r[pc].is_zero() {
                let c = -&r[pc];
                vector::axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        check_dim(self.ambient, v.len())?;
        Ok(vector::is_zero(&self.reduce(v)))
    }

    /// Image of `v` in `k^n / self`, in the complement-coordinate basis.
    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.reduce(v);
        self.complement_coords().into_iter().map(|c| r[c].clone()).collect()
    }

    /// Canonical lift of quotient coordinates back to `k^n`.
    pub fn lift(&self, coords: &[Scalar]) -> Vector {
        let mut v = vector::zero(self.field, self.ambient);
        for (c, x) in self.complement_coords().into_iter().zip(coords) {
            v[c] = x.clone();
        }
        v
    }

    /// `{ x in k^domain : sum_j x_j maps[m][j] in target for every m }`, i.e. the
    /// common preimage of `target` under linear maps given by basis images.
    pub fn common_preimage(
        field: FieldSpec,
        domain: usize,
        maps: &[Vec<Vector>],
        target: &Subspace,
    ) -> Result<Subspace> {
        let comp = target.complement_coords();
        let mut rows = Vec::new();
        for images in maps {
            check_dim(domain, images.len())?;
            let reduced: Vec<Vector> = images
                .iter()
                .map(|v| {
                    check_dim(target.ambient, v.len())?;
                    Ok(target.reduce(v))
                })
                .collect::<Result<_>>()?;
            for &c in &comp {
                rows.push(reduced.iter().map(|r| r[c].clone()).collect());
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::full(field, domain));
        }
        let m = Matrix::from_rows(field, domain, rows)?;
        Ok(Self::from_rows(field, domain, m.nullspace()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::from_rows(self.field, self.ambient, rows))
    }

    /// Zassenhaus intersection: reduce `[u | u]` over `[w | 0]` and read the
    /// right halves of the rows whose left half vanished.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        let n = self.ambient;
        let mut rows: Vec<Vector> = self
            .basis
            .iter()
            .map(|u| u.iter().chain(u.iter()).cloned().collect())
            .collect();
        rows.extend(other.basis.iter().map(|w| {
            let mut r = w.clone();
            r.extend(vector::zero(self.field, n));
            r
        }));
        let pivots = rref_in_place(&mut rows, 2 * n);
        let inter = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Ok(Self::from_rows(self.field, n, inter))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_dim(self.ambient, other.ambient)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All `p^dim` elements of a subspace over a prime field.
    pub fn elements(&self) -> Result<impl Iterator<Item = Vector> + '_> {
        if !self.field.is_finite() {
            return Err(Error::Unsupported("element enumeration needs a finite field".into()));
        }
        Ok(vector::all_vectors(self.field, self.dim()).map(move |coeffs| {
            let mut v = vector::zero(self.field, self.ambient);
            for (c, b) in coeffs.iter().zip(&self.basis) {
                vector::axpy(&mut v, c, b);
            }
            v
        }))
    }

    /// Basis rows scaled to primitive integer vectors (denominators cleared).
    pub fn integer_rows(&self) -> Vec<Vec<String>> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::One;
        self.basis
            .iter()
            .map(|row| {
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(&x.denominator()));
                row.iter().map(|x| x.scaled_integer(&l).to_string()).collect()
            })
            .collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "span{{")?;
        for (i, r) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}
