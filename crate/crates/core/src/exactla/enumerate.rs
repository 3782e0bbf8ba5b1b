//! Brute-force enumeration over small prime fields.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactla::subspace::Subspace;
use crate::exactla::vector;
use crate::field::FieldSpec;

/// Default bound on `p^n` for every exhaustive routine.
pub const DEFAULT_CAP: u128 = 10_000;

/// Fails unless `field` is finite and `p^n <= cap`.
pub fn check_cap(field: FieldSpec, n: usize, cap: u128) -> Result<()> {
    let p = field.order().ok_or_else(|| {
        Error::Unsupported("exhaustive enumeration requires a prime field".into())
    })?;
    let needed = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    Ok(())
}

/// Every subspace of `F_p^n` exactly once, as canonical RREF values.
///
/// Subspaces are produced by pivot set: for each increasing pivot tuple the
/// free entries (right of a pivot, outside pivot columns) run through `F_p`.
pub fn enumerate_subspaces(
    n: usize,
    field: FieldSpec,
    cap: u128,
) -> Result<impl Iterator<Item = Subspace>> {
    check_cap(field, n, cap)?;
    let iter = (0..=n).flat_map(move |k| {
        (0..n).combinations(k).flat_map(move |pivots| {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            vector::all_vectors(field, free.len()).map(move |vals| {
                let mut rows: Vec<_> = pivots
                    .iter()
                    .map(|&pc| vector::unit(field, n, pc))
                    .collect();
                for (&(r, c), v) in free.iter().zip(vals) {
                    rows[r][c] = v;
                }
                Subspace::from_rows(field, n, rows)
            })
        })
    });
    Ok(iter)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(enumerate_subspaces(1, f2, DEFAULT_CAP).unwrap().count(), 2);
        assert_eq!(enumerate_subspaces(2, f2, DEFAULT_CAP).unwrap().count(), 5);
        assert_eq!(enumerate_subspaces(4, f2, DEFAULT_CAP).unwrap().count(), 67);
    }

    #[test]
    fn cap_and_field_errors() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(matches!(
            enumerate_subspaces(9, f3, DEFAULT_CAP),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_subspaces(2, FieldSpec::Rationals, DEFAULT_CAP),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn output_is_already_canonical() {
        let f3 = FieldSpec::prime(3).unwrap();
        for s in enumerate_subspaces(3, f3, DEFAULT_CAP).unwrap() {
            let again = Subspace::span(f3, s.basis().to_vec(), 3).unwrap();
            assert_eq!(again, s);
        }
    }
}
