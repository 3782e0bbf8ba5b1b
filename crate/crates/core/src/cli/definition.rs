//! The JSON definition format: sparse structure-constant triples, scalars
//! as exact strings (integers are accepted too).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algcore::fixtures::Fixture;
use crate::algcore::{FiniteDimAlgebra, HopfAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{vector, Matrix, Subspace, Vector};
use crate::field::{FieldSpec, Scalar};
use crate::haction::{CheckLevel, HModuleAlgebra};

pub const SCHEMA_VERSION: u32 = 1;

/// A scalar as written in a file: `"3/4"`, `"-2"` or a bare integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn parse(&self, f: FieldSpec, at: &str) -> Result<Scalar> {
        match self {
            Num::Int(i) => Ok(f.from_i64(*i)),
            Num::Text(s) => f.parse(s).map_err(|e| Error::Parse(format!("{at}: {e}"))),
        }
    }

    fn of(x: &Scalar) -> Num {
        match x.residue() {
            Some(v) => Num::Int(v as i64),
            None => Num::Text(x.to_string()),
        }
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Int(i) => write!(f, "{i}"),
            Num::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDef {
    pub dim: usize,
    /// `[i, j, k, c]`: `e_i e_j` has coefficient `c` on `e_k`.
    pub mult: Vec<(usize, usize, usize, Num)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDef {
    pub dim: usize,
    pub mult: Vec<(usize, usize, usize, Num)>,
    pub unit: Vec<Num>,
    /// `[i, j, k, c]`: `Δ(e_i)` has coefficient `c` on `e_j ⊗ e_k`.
    pub comult: Vec<(usize, usize, usize, Num)>,
    pub counit: Vec<Num>,
    /// `[i, j, c]`: `S(e_i)` has coefficient `c` on `e_j`.
    pub antipode: Vec<(usize, usize, Num)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefinitionFile {
    pub schema_version: u32,
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub field: FieldSpec,
    #[serde(default)]
    pub expected_level: CheckLevel,
    pub algebra: AlgebraDef,
    pub hopf: HopfDef,
    /// `[h, r, k, c]`: `h_h · e_r` has coefficient `c` on `e_k`.
    pub action: Vec<(usize, usize, usize, Num)>,
    /// Elements of `H` spanning it, for `W_L` comparisons.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spanning_set: Option<Vec<Vec<Num>>>,
    /// A normalized left integral used by `G_t`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral: Option<Vec<Num>>,
    /// Known radicals as integer basis rows, checked by `regress`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, Vec<Vec<i64>>>,
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", pad(indent + 1), Value::String(k.clone())));
                render(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}}}", pad(indent)));
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}]", pad(indent)));
        }
        Value::Array(xs) => {
            let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("[{}]", parts.join(", ")));
        }
        other => out.push_str(&other.to_string()),
    }
}

fn vec_of(f: FieldSpec, xs: &[Num], dim: usize, at: &str) -> Result<Vector> {
    if xs.len() != dim {
        return Err(Error::Parse(format!("{at}: expected {dim} entries, got {}", xs.len())));
    }
    xs.iter()
        .enumerate()
        .map(|(i, x)| x.parse(f, &format!("{at}[{i}]")))
        .collect()
}

fn index(i: usize, bound: usize, at: &str) -> Result<()> {
    if i >= bound {
        return Err(Error::Parse(format!("{at}: index {i} out of range (dim {bound})")));
    }
    Ok(())
}

fn triples(
    f: FieldSpec,
    ts: &[(usize, usize, usize, Num)],
    bounds: (usize, usize, usize),
    at: &str,
) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    ts.iter()
        .enumerate()
        .map(|(n, (i, j, k, c))| {
            let here = format!("{at}[{n}]");
            index(*i, bounds.0, &here)?;
            index(*j, bounds.1, &here)?;
            index(*k, bounds.2, &here)?;
            Ok((*i, *j, *k, c.parse(f, &here)?))
        })
        .collect()
}

fn algebra(f: FieldSpec, dim: usize, mult: &[(usize, usize, usize, Num)], at: &str) -> Result<FiniteDimAlgebra> {
    FiniteDimAlgebra::from_triples(f, dim, &triples(f, mult, (dim, dim, dim), at)?)
}

impl DefinitionFile {
    pub fn from_json(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse("empty definition file".into()));
        }
        let def: DefinitionFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if def.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                def.schema_version
            )));
        }
        def.field.validate()?;
        Ok(def)
    }

    /// Pretty JSON with sorted keys; arrays of scalars stay on one line.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        render(&serde_json::to_value(self).expect("serializable"), 0, &mut s);
        s.push('\n');
        s
    }

    pub fn build(&self) -> Result<HModuleAlgebra> {
        let f = self.field;
        let a = &self.algebra;
        let mut r = algebra(f, a.dim, &a.mult, "algebra.mult")?;
        if let Some(u) = &a.unit {
            r = r.with_unit(vec_of(f, u, a.dim, "algebra.unit")?)?;
        }
        let h = &self.hopf;
        let halg = algebra(f, h.dim, &h.mult, "hopf.mult")?.with_unit(vec_of(f, &h.unit, h.dim, "hopf.unit")?)?;
        let mut comult = vec![vector::zero(f, h.dim * h.dim); h.dim];
        for (i, j, k, c) in triples(f, &h.comult, (h.dim, h.dim, h.dim), "hopf.comult")? {
            comult[i][j * h.dim + k] += &c;
        }
        let counit = vec_of(f, &h.counit, h.dim, "hopf.counit")?;
        let mut s = Matrix::zeros(f, h.dim, h.dim);
        for (n, (i, j, c)) in h.antipode.iter().enumerate() {
            let here = format!("hopf.antipode[{n}]");
            index(*i, h.dim, &here)?;
            index(*j, h.dim, &here)?;
            let v = s.get(*i, *j) + &c.parse(f, &here)?;
            s.set(*i, *j, v);
        }
        let hopf = HopfAlgebra::new(halg, comult, counit, s)?;
        let act = triples(f, &self.action, (h.dim, a.dim, a.dim), "action")?;
        HModuleAlgebra::from_triples(r, hopf, &act)
    }

    pub fn spanning_set(&self) -> Result<Option<Vec<Vector>>> {
        self.spanning_set
            .as_ref()
            .map(|l| {
                l.iter()
                    .enumerate()
                    .map(|(i, v)| vec_of(self.field, v, self.hopf.dim, &format!("spanning_set[{i}]")))
                    .collect()
            })
            .transpose()
    }

    pub fn integral(&self) -> Result<Option<Vector>> {
        self.integral
            .as_ref()
            .map(|v| vec_of(self.field, v, self.hopf.dim, "integral"))
            .transpose()
    }

    /// Expected radicals as subspaces of `R`.
    pub fn expected_spaces(&self) -> Result<BTreeMap<String, Subspace>> {
        self.expected
            .iter()
            .map(|(k, rows)| {
                let vs = rows.iter().map(|r| vector::from_i64s(self.field, r));
                Ok((k.clone(), Subspace::span(self.field, vs, self.algebra.dim)?))
            })
            .collect()
    }

    /// The sparse serialization of a module algebra.
    pub fn from_module(name: &str, description: &str, level: CheckLevel, m: &HModuleAlgebra) -> Self {
        let sparse3 = |n: usize, m2: usize, get: &dyn Fn(usize, usize) -> Vector| {
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..m2 {
                    for (k, c) in get(i, j).iter().enumerate() {
                        if !c.is_zero() {
                            out.push((i, j, k, Num::of(c)));
                        }
                    }
                }
            }
            out
        };
        let nums = |v: &[Scalar]| v.iter().map(Num::of).collect::<Vec<_>>();
        let r = m.r();
        let h = m.h();
        let hd = h.dim();
        let mut comult = Vec::new();
        for i in 0..hd {
            for (jk, c) in h.comult_table(i).iter().enumerate() {
                if !c.is_zero() {
                    comult.push((i, jk / hd, jk % hd, Num::of(c)));
                }
            }
        }
        let mut antipode = Vec::new();
        for i in 0..hd {
            for (j, c) in h.antipode_matrix().row(i).iter().enumerate() {
                if !c.is_zero() {
                    antipode.push((i, j, Num::of(c)));
                }
            }
        }
        DefinitionFile {
            schema_version: SCHEMA_VERSION,
            name: name.into(),
            description: description.into(),
            field: m.field(),
            expected_level: level,
            algebra: AlgebraDef {
                dim: r.dim(),
                mult: sparse3(r.dim(), r.dim(), &|i, j| r.basis_product(i, j).to_vec()),
                unit: r.unit().map(|u| nums(u)),
            },
            hopf: HopfDef {
                dim: hd,
                mult: sparse3(hd, hd, &|i, j| h.algebra().basis_product(i, j).to_vec()),
                unit: nums(h.unit()),
                comult,
                counit: nums(h.counit_vector()),
                antipode,
            },
            action: sparse3(hd, r.dim(), &|i, j| m.act_basis(i, &r.basis_vector(j))),
            spanning_set: None,
            integral: None,
            expected: BTreeMap::new(),
        }
    }

    pub fn from_fixture(fx: &Fixture) -> Self {
        let mut d = DefinitionFile::from_module(&fx.name, &fx.description, fx.level, &fx.module);
        d.expected = fx.expected.clone();
        d.spanning_set = Some(fx.module.h_basis().iter().map(|v| v.iter().map(Num::of).collect()).collect());
        d.integral = fx
            .module
            .h()
            .normalized_integral()
            .map(|t| t.iter().map(Num::of).collect());
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::fixtures::builtin_corpus;

    #[test]
    fn fixtures_round_trip() {
        for fx in builtin_corpus().unwrap() {
            let d = DefinitionFile::from_fixture(&fx);
            let back = DefinitionFile::from_json(&d.to_json()).unwrap();
            assert_eq!(back, d, "{}", fx.name);
            assert_eq!(back.build().unwrap(), fx.module, "{}", fx.name);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(DefinitionFile::from_json(""), Err(Error::Parse(_))));
        assert!(matches!(DefinitionFile::from_json("{"), Err(Error::Parse(_))));
        let fx = &builtin_corpus().unwrap()[0];
        let mut d = DefinitionFile::from_fixture(fx);
        d.action.push((9, 0, 0, Num::Int(1)));
        let e = DefinitionFile::from_json(&d.to_json()).unwrap().build().unwrap_err();
        assert!(e.to_string().contains("action["), "{e}");
        let mut d = DefinitionFile::from_fixture(fx);
        d.schema_version = 7;
        assert!(DefinitionFile::from_json(&d.to_json()).is_err());
    }
}
