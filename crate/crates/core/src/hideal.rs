//! H-ideals: membership, generation, products, annihilators, enumeration and
//! H-simplicity.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::exactla::{self, vector, Subspace, Vector};
use crate::haction::HModuleAlgebra;
use crate::verdict::Verdict;

/// A subspace of `R` known to be a two-sided, H-stable ideal.
#[derive(Clone, Debug)]
pub struct HIdeal<'a> {
    host: &'a HModuleAlgebra,
    space: Subspace,
}

impl<'a> HIdeal<'a> {
    /// Checks membership before wrapping.
    pub fn new(host: &'a HModuleAlgebra, space: Subspace) -> Result<Self> {
        if let Some(w) = h_ideal_witness(host, &space) {
            return Err(Error::Precondition(format!("{space} is not an H-ideal: {w}")));
        }
        Ok(HIdeal { host, space })
    }

    pub fn host(&self) -> &'a HModuleAlgebra {
        self.host
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}

impl PartialEq for HIdeal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
    }
}

/// Why a subspace fails to be an H-ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IdealWitness {
    /// `e_r * v` escapes.
    LeftProduct { r: usize, element: String, product: String },
    /// `v * e_r` escapes.
    RightProduct { r: usize, element: String, product: String },
    /// `h_i · v` escapes.
    Action { h: usize, element: String, image: String },
    Dimension { expected: usize, got: usize },
}

impl fmt::Display for IdealWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealWitness::LeftProduct { r, element, product } => {
                write!(f, "e{r} * {element} = {product} escapes")
            }
            IdealWitness::RightProduct { r, element, product } => {
                write!(f, "{element} * e{r} = {product} escapes")
            }
            IdealWitness::Action { h, element, image } => write!(f, "h{h} · {element} = {image} escapes"),
            IdealWitness::Dimension { expected, got } => write!(f, "ambient dimension {got} != {expected}"),
        }
    }
}

/// `None` iff `RS ⊆ S`, `SR ⊆ S` and `H·S ⊆ S`.
pub fn h_ideal_witness(m: &HModuleAlgebra, s: &Subspace) -> Option<IdealWitness> {
    let r = m.r();
    if s.ambient_dim() != r.dim() {
        return Some(IdealWitness::Dimension {
            expected: r.dim(),
            got: s.ambient_dim(),
        });
    }
    for b in s.basis() {
        for k in 0..r.dim() {
            let e = r.basis_vector(k);
            let lp = r.mul(&e, b);
            if !s.contains(&lp).expect("sized") {
                return Some(IdealWitness::LeftProduct {
                    r: k,
                    element: vector::render(b),
                    product: vector::render(&lp),
                });
            }
            let rp = r.mul(b, &e);
            if !s.contains(&rp).expect("sized") {
                return Some(IdealWitness::RightProduct {
                    r: k,
                    element: vector::render(b),
                    product: vector::render(&rp),
                });
            }
        }
    }
    for i in 0..m.dim_h() {
        for b in s.basis() {
            let img = m.act_basis(i, b);
            if !s.contains(&img).expect("sized") {
                return Some(IdealWitness::Action {
                    h: i,
                    element: vector::render(b),
                    image: vector::render(&img),
                });
            }
        }
    }
    None
}

pub fn is_h_ideal(m: &HModuleAlgebra, s: &Subspace) -> bool {
    h_ideal_witness(m, s).is_none()
}

/// The H-ideal generated by `E`, computed literally as
/// `H·E + R(H·E) + (H·E)R + R(H·E)R`.
pub fn h_ideal_generated<'a>(m: &'a HModuleAlgebra, e: &Subspace) -> Result<HIdeal<'a>> {
    check_dim(m.dim_r(), e.ambient_dim())?;
    let he = m.h_image(e);
    let r = m.r();
    let whole = r.whole();
    let rhe = r.product_space(&whole, &he);
    let her = r.product_space(&he, &whole);
    let rher = r.product_space(&rhe, &whole);
    let gen = he.sum(&rhe)?.sum(&her)?.sum(&rher)?;
    if !e.is_subspace_of(&gen)? || !is_h_ideal(m, &gen) {
        return Err(Error::Contradiction(format!(
            "generated H-ideal {gen} of {e} is not an H-ideal containing it"
        )));
    }
    Ok(HIdeal { host: m, space: gen })
}

pub fn ideal_product(m: &HModuleAlgebra, i: &Subspace, j: &Subspace) -> Result<Subspace> {
    check_dim(m.dim_r(), i.ambient_dim())?;
    check_dim(m.dim_r(), j.ambient_dim())?;
    Ok(m.r().product_space(i, j))
}

/// `I^n` for `n >= 1`.
pub fn ideal_power(m: &HModuleAlgebra, i: &Subspace, n: usize) -> Result<Subspace> {
    if n == 0 {
        return Err(Error::Precondition("ideal powers start at 1".into()));
    }
    let mut p = i.clone();
    for _ in 1..n {
        p = ideal_product(m, &p, i)?;
    }
    Ok(p)
}

/// `(true, k)` with `I^k = 0` minimal, else `(false, 0)`.
pub fn nilpotency_index(m: &HModuleAlgebra, i: &Subspace) -> (bool, usize) {
    m.r().nilpotency_index(i)
}

fn annihilator_conditions(m: &HModuleAlgebra, i: &Subspace, left: bool, right: bool) -> Result<Subspace> {
    check_dim(m.dim_r(), i.ambient_dim())?;
    let dr = m.dim_r();
    let r = m.r();
    let mut maps = Vec::new();
    for h in 0..m.dim_h() {
        let images: Vec<Vector> = (0..dr).map(|j| m.act_basis(h, &r.basis_vector(j))).collect();
        for y in i.basis() {
            if left {
                maps.push(images.iter().map(|ha| r.mul(ha, y)).collect());
            }
            if right {
                maps.push(images.iter().map(|ha| r.mul(y, ha)).collect());
            }
        }
    }
    Subspace::common_preimage(m.field(), dr, &maps, &Subspace::zero(m.field(), dr))
}

/// `I* = { a : (H·a) I = 0 = I (H·a) }`.
pub fn h_annihilator_star<'a>(m: &'a HModuleAlgebra, i: &HIdeal<'_>) -> Result<HIdeal<'a>> {
    let star = annihilator_conditions(m, i.space(), true, true)?;
    if !is_h_ideal(m, &star) {
        return Err(Error::Contradiction(format!("I* = {star} is not an H-ideal")));
    }
    Ok(HIdeal { host: m, space: star })
}

/// `I_l = { a : (H·a) I = 0 }`.
pub fn h_left_annihilator(m: &HModuleAlgebra, i: &Subspace) -> Result<Subspace> {
    annihilator_conditions(m, i, true, false)
}

/// `I_r = { a : I (H·a) = 0 }`.
pub fn h_right_annihilator(m: &HModuleAlgebra, i: &Subspace) -> Result<Subspace> {
    annihilator_conditions(m, i, false, true)
}

/// Every H-ideal of `R` over a prime field with `p^dim R <= cap`.
pub fn enumerate_h_ideals(m: &HModuleAlgebra, cap: u128) -> Result<Vec<HIdeal<'_>>> {
    let subspaces = exactla::enumerate_subspaces(m.dim_r(), m.field(), cap)?;
    Ok(subspaces
        .filter(|s| is_h_ideal(m, s))
        .map(|space| HIdeal { host: m, space })
        .collect())
}

/// Vectors tried by the sweep over ℚ: the basis, every `{0, ±1}` vector when
/// there are at most `3^8` of them, then 64 seeded pseudorandom vectors.
pub(crate) fn sweep_vectors(m: &HModuleAlgebra, seed: u64) -> Vec<Vector> {
    let n = m.dim_r();
    let f = m.field();
    let mut out: Vec<Vector> = (0..n).map(|i| vector::unit(f, n, i)).collect();
    if n <= 8 {
        let total = 3usize.pow(n as u32);
        for mut idx in 1..total {
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push(f.from_i64((idx % 3) as i64 - 1));
                idx /= 3;
            }
            if !vector::is_zero(&v) {
                out.push(v);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let v: Vector = (0..n).map(|_| f.from_i64(rng.gen_range(-7..=7))).collect();
        if !vector::is_zero(&v) {
            out.push(v);
        }
    }
    out
}

/// Dimension of the operator algebra generated by all left and right
/// multiplications and the H-action. It equals `(dim R)^2` exactly when the
/// only invariant subspaces are `0` and `R`.
pub(crate) fn operator_algebra_dim(m: &HModuleAlgebra) -> usize {
    let n = m.dim_r();
    let f = m.field();
    let r = m.r();
    let flatten = |mat: &exactla::Matrix| -> Vector { mat.rows().iter().flatten().cloned().collect() };
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(r.left_mult_matrix(&r.basis_vector(i)));
        gens.push(r.right_mult_matrix(&r.basis_vector(i)));
    }
    for i in 0..m.dim_h() {
        gens.push(m.action_matrix(i));
    }
    let mut span = Subspace::span(f, [flatten(&exactla::Matrix::identity(f, n))], n * n).expect("sized");
    let mut frontier = vec![exactla::Matrix::identity(f, n)];
    while let Some(a) = frontier.pop() {
        for g in &gens {
            let prod = g.mul(&a).expect("square");
            let flat = flatten(&prod);
            if !span.contains(&flat).expect("sized") {
                span = span.sum(&Subspace::span(f, [flat], n * n).expect("sized")).expect("sized");
                frontier.push(prod);
            }
        }
    }
    span.dim()
}

/// Decides whether `R` is H-simple (`R^2 != 0`, no H-ideals besides `0`, `R`).
///
/// Over a prime field within `cap` the answer is exact. Over ℚ a proper
/// generated H-ideal refutes; a full operator algebra certifies; otherwise the
/// sweep result is reported uncertified.
pub fn is_h_simple(m: &HModuleAlgebra, seed: u64, cap: u128) -> Verdict<String> {
    let n = m.dim_r();
    let r = m.r();
    if r.product_space(&r.whole(), &r.whole()).is_zero() {
        return Verdict::False {
            witness: "R^2 = 0".into(),
        };
    }
    let proper = |v: &Vector| -> Option<String> {
        let s = Subspace::span(m.field(), [v.clone()], n).ok()?;
        let g = h_ideal_generated(m, &s).ok()?;
        (!g.space().is_full()).then(|| format!("(H-ideal of {}) = {}", vector::render(v), g.space()))
    };
    if exactla::check_cap(m.field(), n, cap).is_ok() {
        for v in vector::projective_points(m.field(), n) {
            if let Some(w) = proper(&v) {
                return Verdict::False { witness: w };
            }
        }
        return Verdict::certified("every nonzero element generates R");
    }
    for v in sweep_vectors(m, seed) {
        if let Some(w) = proper(&v) {
            return Verdict::False { witness: w };
        }
    }
    if n == 1 {
        return Verdict::certified("one-dimensional");
    }
    if operator_algebra_dim(m) == n * n {
        return Verdict::certified("multiplications and action generate End(R)");
    }
    Verdict::True {
        certified: false,
        reason: "all swept elements generate R".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::{fixtures, FiniteDimAlgebra, HopfAlgebra};
    use crate::exactla::vector::from_i64s;
    use crate::exactla::DEFAULT_CAP;
    use crate::field::FieldSpec;

    fn x_line(f: FieldSpec) -> Subspace {
        Subspace::span(f, [from_i64s(f, &[0, 1])], 2).unwrap()
    }

    #[test]
    fn h_ideal_membership() {
        let q = FieldSpec::Rationals;
        let e2 = fixtures::e2(q).unwrap();
        assert!(is_h_ideal(&e2, &Subspace::zero(q, 2)));
        assert!(is_h_ideal(&e2, &e2.r().whole()));
        assert!(is_h_ideal(&e2, &x_line(q)));
        let e5 = fixtures::e5(q).unwrap();
        match h_ideal_witness(&e5, &x_line(q)) {
            Some(IdealWitness::Action { h, image, .. }) => {
                assert_eq!(h, 2);
                assert_eq!(image, "(1,0)");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn generation_examples() {
        let q = FieldSpec::Rationals;
        let e2 = fixtures::e2(q).unwrap();
        assert_eq!(h_ideal_generated(&e2, &x_line(q)).unwrap().space(), &x_line(q));
        let e5 = fixtures::e5(q).unwrap();
        assert!(h_ideal_generated(&e5, &x_line(q)).unwrap().space().is_full());
    }

    #[test]
    fn products_and_powers() {
        let q = FieldSpec::Rationals;
        let e2 = fixtures::e2(q).unwrap();
        assert_eq!(nilpotency_index(&e2, &Subspace::zero(q, 2)), (true, 1));
        assert_eq!(nilpotency_index(&e2, &x_line(q)), (true, 2));
        let e1 = fixtures::e1(q).unwrap();
        let strict = Subspace::span(q, [from_i64s(q, &[0, 1, 0])], 3).unwrap();
        assert_eq!(nilpotency_index(&e1, &strict), (true, 2));
        assert_eq!(nilpotency_index(&e1, &e1.r().whole()), (false, 0));
        assert!(ideal_power(&e1, &strict, 2).unwrap().is_zero());
        assert!(ideal_power(&e1, &strict, 0).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let q = FieldSpec::Rationals;
        let e2 = fixtures::e2(q).unwrap();
        let zero = HIdeal::new(&e2, Subspace::zero(q, 2)).unwrap();
        assert!(h_annihilator_star(&e2, &zero).unwrap().space().is_full());
        let x = HIdeal::new(&e2, x_line(q)).unwrap();
        assert_eq!(h_annihilator_star(&e2, &x).unwrap().space(), &x_line(q));
        let e3 = fixtures::e3(q).unwrap();
        let whole = HIdeal::new(&e3, e3.r().whole()).unwrap();
        assert!(h_annihilator_star(&e3, &whole).unwrap().space().is_zero());
    }

    #[test]
    fn enumeration_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        let spaces = |m: &HModuleAlgebra| -> Vec<Subspace> {
            enumerate_h_ideals(m, DEFAULT_CAP).unwrap().into_iter().map(HIdeal::into_space).collect()
        };
        let all3 = vec![Subspace::zero(f3, 2), x_line(f3), Subspace::full(f3, 2)];
        assert_eq!(spaces(&fixtures::e2(f3).unwrap()), all3);
        assert_eq!(spaces(&fixtures::e4(f3).unwrap()), all3);
        assert_eq!(
            spaces(&fixtures::e5(f3).unwrap()),
            vec![Subspace::zero(f3, 2), Subspace::full(f3, 2)]
        );
    }

    #[test]
    fn simplicity_examples() {
        let q = FieldSpec::Rationals;
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(is_h_simple(&fixtures::e5(q).unwrap(), 0, DEFAULT_CAP).is_certified_true());
        assert!(is_h_simple(&fixtures::e5(f3).unwrap(), 0, DEFAULT_CAP).is_certified_true());
        assert!(is_h_simple(&fixtures::e2(q).unwrap(), 0, DEFAULT_CAP).is_false());
        assert!(is_h_simple(&fixtures::e3(q).unwrap(), 0, DEFAULT_CAP).is_certified_true());
        let z = FiniteDimAlgebra::zero_product(q, 1);
        let m = HModuleAlgebra::trivial_action(z, HopfAlgebra::trivial(q)).unwrap();
        assert!(is_h_simple(&m, 0, DEFAULT_CAP).is_false());
    }
}
