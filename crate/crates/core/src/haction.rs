//! H-module algebras: the action tensor and everything computed directly from it.

use serde::{Deserialize, Serialize};

use crate::algcore::{smash, FiniteDimAlgebra, HopfAlgebra, ValidationReport};
use crate::error::{check_dim, Error, Result};
use crate::exactla::{vector, Matrix, Subspace, Vector};
use crate::field::{FieldSpec, Scalar};

/// How much of the module-algebra structure `validate_action` demands.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckLevel {
    /// Measuring and `1_H · r = r` only.
    Weak,
    /// Unital left module plus measuring; unitality too when `R` has a unit.
    #[default]
    Module,
    /// Module algebra whose unit satisfies `h · 1_R = ε(h) 1_R`.
    Unital,
}

impl std::str::FromStr for CheckLevel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(CheckLevel::Weak),
            "module" => Ok(CheckLevel::Module),
            "unital" => Ok(CheckLevel::Unital),
            _ => Err(Error::Parse(format!("unknown check level {s:?}"))),
        }
    }
}

/// An algebra `R` with an action of a Hopf algebra `H`:
/// `act[i * dim R + j]` holds the coordinates of `h_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModuleAlgebra {
    r: FiniteDimAlgebra,
    h: HopfAlgebra,
    act: Vec<Vector>,
}

impl HModuleAlgebra {
    pub fn new(r: FiniteDimAlgebra, h: HopfAlgebra, act: Vec<Vector>) -> Result<Self> {
        if r.field() != h.field() {
            return Err(Error::InvalidField(format!("R over {} but H over {}", r.field(), h.field())));
        }
        check_dim(r.dim() * h.dim(), act.len())?;
        for v in &act {
            check_dim(r.dim(), v.len())?;
        }
        Ok(HModuleAlgebra { r, h, act })
    }

    pub fn from_triples(r: FiniteDimAlgebra, h: HopfAlgebra, triples: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let (dr, dh) = (r.dim(), h.dim());
        let mut act = vec![vector::zero(r.field(), dr); dr * dh];
        for (i, j, k, v) in triples {
            if *i >= dh || *j >= dr || *k >= dr {
                return Err(Error::Parse(format!("action index ({i},{j},{k}) out of range")));
            }
            act[i * dr + j][*k] += v;
        }
        Self::new(r, h, act)
    }

    /// `H` acting on `R` through the counit.
    pub fn trivial_action(r: FiniteDimAlgebra, h: HopfAlgebra) -> Result<Self> {
        let (dr, dh) = (r.dim(), h.dim());
        let act = (0..dh * dr)
            .map(|ij| vector::scale(&h.counit_vector()[ij / dr], &r.basis_vector(ij % dr)))
            .collect();
        Self::new(r, h, act)
    }

    pub fn r(&self) -> &FiniteDimAlgebra {
        &self.r
    }

    pub fn h(&self) -> &HopfAlgebra {
        &self.h
    }

    pub fn field(&self) -> FieldSpec {
        self.r.field()
    }

    pub fn dim_r(&self) -> usize {
        self.r.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.h.dim()
    }

    pub fn action_table(&self) -> &[Vector] {
        &self.act
    }

    /// `h_i · v` for a basis element `h_i`.
    pub fn act_basis(&self, i: usize, v: &[Scalar]) -> Vector {
        let dr = self.dim_r();
        let mut out = vector::zero(self.field(), dr);
        for (j, c) in v.iter().enumerate() {
            vector::axpy(&mut out, c, &self.act[i * dr + j]);
        }
        out
    }

    /// `h · v` for arbitrary elements.
    pub fn act(&self, h: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vector::zero(self.field(), self.dim_r());
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(&mut out, c, &self.act_basis(i, v));
            }
        }
        out
    }

    /// Matrix of `v -> h_i · v` on column vectors.
    pub fn action_matrix(&self, i: usize) -> Matrix {
        let dr = self.dim_r();
        let cols = self.act[i * dr..(i + 1) * dr].to_vec();
        Matrix::from_rows(self.field(), dr, cols).expect("sized").transpose()
    }

    pub fn h_basis(&self) -> Vec<Vector> {
        (0..self.dim_h()).map(|i| self.h.algebra().basis_vector(i)).collect()
    }

    /// Checks the action axioms on every basis instance at the given level.
    pub fn validate_action(&self, level: CheckLevel) -> ValidationReport {
        let mut report = ValidationReport::default();
        let (dr, dh) = (self.dim_r(), self.dim_h());
        let one_h = self.h.unit().clone();
        for j in 0..dr {
            let e = self.r.basis_vector(j);
            if self.act(&one_h, &e) != e {
                report.push("unit-action", vec![j], format!("1_H · e{j} != e{j}"));
            }
        }
        for i in 0..dh {
            let delta = self.h.comult_table(i);
            for a in 0..dr {
                let ea = self.r.basis_vector(a);
                for b in 0..dr {
                    let eb = self.r.basis_vector(b);
                    let lhs = self.act_basis(i, self.r.basis_product(a, b));
                    let mut rhs = vector::zero(self.field(), dr);
                    for (jk, c) in delta.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let (j, k) = (jk / dh, jk % dh);
                        let prod = self.r.mul(&self.act_basis(j, &ea), &self.act_basis(k, &eb));
                        vector::axpy(&mut rhs, c, &prod);
                    }
                    if lhs != rhs {
                        report.push(
                            "measuring",
                            vec![i, a, b],
                            format!("h{i} · (e{a}e{b}) != Σ (h{i}_1 · e{a})(h{i}_2 · e{b})"),
                        );
                    }
                }
            }
        }
        if level >= CheckLevel::Module {
            for i in 0..dh {
                for k in 0..dh {
                    let hk = self.h.algebra().basis_product(i, k).to_vec();
                    for j in 0..dr {
                        let e = self.r.basis_vector(j);
                        if self.act(&hk, &e) != self.act_basis(i, &self.act_basis(k, &e)) {
                            report.push(
                                "module",
                                vec![i, k, j],
                                format!("(h{i}h{k}) · e{j} != h{i} · (h{k} · e{j})"),
                            );
                        }
                    }
                }
            }
        }
        match (level, self.r.unit()) {
            (CheckLevel::Unital, None) => report.push("unital", vec![], "R has no declared unit"),
            (CheckLevel::Weak, _) | (_, None) => {}
            (_, Some(u)) => {
                for i in 0..dh {
                    let expected = vector::scale(&self.h.counit_vector()[i], u);
                    if self.act_basis(i, u) != expected {
                        report.push("unital", vec![i], format!("h{i} · 1_R != ε(h{i}) 1_R"));
                    }
                }
            }
        }
        report
    }

    /// `span{ h · v : h in L, v in basis(S) }`.
    pub fn act_image(&self, l: &[Vector], s: &Subspace) -> Result<Subspace> {
        if l.is_empty() {
            return Err(Error::Precondition("act_image needs a non-empty list of H-elements".into()));
        }
        check_dim(self.dim_r(), s.ambient_dim())?;
        let mut rows = Vec::new();
        for h in l {
            check_dim(self.dim_h(), h.len())?;
            for v in s.basis() {
                rows.push(self.act(h, v));
            }
        }
        Subspace::span(self.field(), rows, self.dim_r())
    }

    /// `H · S` for the full Hopf algebra.
    pub fn h_image(&self, s: &Subspace) -> Subspace {
        let rows = (0..self.dim_h())
            .flat_map(|i| s.basis().iter().map(move |v| self.act_basis(i, v)))
            .collect();
        Subspace::from_rows(self.field(), self.dim_r(), rows)
    }

    pub fn is_h_stable(&self, s: &Subspace) -> bool {
        self.h_image(s).is_subspace_of(s).unwrap_or(false)
    }

    /// `(I:H) = { x : h · x in I for all h }`, the largest H-ideal inside `I`.
    pub fn colon_ideal(&self, ideal: &Subspace) -> Result<Subspace> {
        check_dim(self.dim_r(), ideal.ambient_dim())?;
        if let Some(w) = self.r.ideal_witness(ideal) {
            return Err(Error::Precondition(format!("(I:H) needs an ideal I: {w}")));
        }
        let dr = self.dim_r();
        let maps: Vec<Vec<Vector>> = (0..self.dim_h())
            .map(|i| self.act[i * dr..(i + 1) * dr].to_vec())
            .collect();
        let c = Subspace::common_preimage(self.field(), dr, &maps, ideal)?;
        if !self.r.is_ideal(&c) || !self.is_h_stable(&c) {
            return Err(Error::Contradiction(format!(
                "(I:H) = {c} is not an H-ideal; the action is not a module action"
            )));
        }
        Ok(c)
    }

    /// The induced action on `R / I` in the complement basis of `I`.
    pub fn quotient_action(&self, ideal: &Subspace) -> Result<HModuleAlgebra> {
        check_dim(self.dim_r(), ideal.ambient_dim())?;
        if !self.is_h_stable(ideal) {
            return Err(Error::Precondition(format!("{ideal} is not H-stable")));
        }
        let r = self.r.quotient(ideal)?;
        let comp = ideal.complement_coords();
        let act = (0..self.dim_h())
            .flat_map(|i| {
                comp.iter()
                    .map(move |&c| ideal.project(&self.act_basis(i, &self.r.basis_vector(c))))
            })
            .collect();
        HModuleAlgebra::new(r, self.h.clone(), act)
    }

    /// Checks `(h · a) # 1 = Σ (1 # h_1)(a # 1)(1 # S(h_2))` inside `R # H`
    /// on all basis pairs `(h, a)`.
    pub fn check_conjugation_identity(&self) -> Result<ValidationReport> {
        let smash = smash::smash_product(self)?;
        let (dr, dh) = (self.dim_r(), self.dim_h());
        let one_r = self.r.unit().expect("smash_product checked the unit").clone();
        let one_h = self.h.unit().clone();
        let mut report = ValidationReport::default();
        for i in 0..dh {
            let delta = self.h.comult_table(i);
            for a in 0..dr {
                let ea = self.r.basis_vector(a);
                let lhs = smash::tensor(&self.act_basis(i, &ea), &one_h);
                let a1 = smash::tensor(&ea, &one_h);
                let mut rhs = vector::zero(self.field(), dr * dh);
                for (jk, c) in delta.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (j, k) = (jk / dh, jk % dh);
                    let left = smash::tensor(&one_r, &self.h.algebra().basis_vector(j));
                    let right = smash::tensor(&one_r, &self.h.antipode(&self.h.algebra().basis_vector(k)));
                    let prod = smash.mul3(&left, &a1, &right);
                    vector::axpy(&mut rhs, c, &prod);
                }
                if lhs != rhs {
                    report.push(
                        "conjugation",
                        vec![i, a],
                        format!("(h{i} · e{a}) # 1 != Σ (1 # h_1)(e{a} # 1)(1 # S(h_2))"),
                    );
                }
            }
        }
        Ok(report)
    }
}
