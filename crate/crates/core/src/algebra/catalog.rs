//! Named example algebras shipped with the tool.

use super::{
    direct_sum, dual_numbers, group_algebra, matrix_algebra, quadratic_extension, quaternion,
    rationals, symmetric_group_table, truncated_poly, upper_triangular, Algebra,
};
use crate::error::{Error, Result};
use crate::kernel::rational::rat;

pub const NAMES: &[&str] = &[
    "q",
    "dual-numbers",
    "m2",
    "m3",
    "quaternion",
    "upper-triangular-2",
    "upper-triangular-3",
    "truncated-poly-2",
    "truncated-poly-3",
    "qs3",
    "q-i",
    "m2-plus-q",
];

pub fn get(name: &str) -> Result<Algebra> {
    let alg = match name {
        "q" => rationals(),
        "dual-numbers" => dual_numbers(),
        "m2" => matrix_algebra(2),
        "m3" => matrix_algebra(3),
        "quaternion" => quaternion(rat(-1), rat(-1)),
        "upper-triangular-2" => upper_triangular(2),
        "upper-triangular-3" => upper_triangular(3),
        "truncated-poly-2" => truncated_poly(2),
        "truncated-poly-3" => truncated_poly(3),
        "qs3" => group_algebra("qs3", &symmetric_group_table(3).0)?,
        "q-i" => quadratic_extension(rat(-1)),
        "m2-plus-q" => direct_sum(&matrix_algebra(2), &rationals()),
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    };
    Ok(alg.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for n in NAMES {
            assert_eq!(get(n).unwrap().name(), *n);
        }
        assert!(matches!(get("m4"), Err(Error::UnknownCatalog(_))));
    }
}
