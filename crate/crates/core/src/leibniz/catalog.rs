//! Hand-built example algebras.
//!
//! Basis orders: `sl2` is `(e, f, h)`, `L2` is `(e1, e2)`, `heisenberg`
//! is `(x, y, z)`. Direct sums place the left summand first.

use crate::leibniz::algebra::LeibnizAlgebra;
use crate::scalar::Field;

pub fn abelian(field: Field, n: usize) -> LeibnizAlgebra {
    LeibnizAlgebra::from_i64_entries(&format!("abelian_{n}"), field, n, &[])
}

/// `⟨e1, e2⟩` with the single product `[e1, e1] = e2`.
pub fn l2(field: Field) -> LeibnizAlgebra {
    LeibnizAlgebra::from_i64_entries("L2", field, 2, &[(0, 0, 1, 1)])
}

/// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`, antisymmetric.
pub fn sl2(field: Field) -> LeibnizAlgebra {
    let name = match field {
        Field::Rational => "sl2".to_string(),
        Field::Prime(p) => format!("sl2_gf{p}"),
    };
    LeibnizAlgebra::from_i64_entries(
        &name,
        field,
        3,
        &[
            (0, 1, 2, 1),
            (1, 0, 2, -1),
            (2, 0, 0, 2),
            (0, 2, 0, -2),
            (2, 1, 1, -2),
            (1, 2, 1, 2),
        ],
    )
}

/// `sl2` with `[h,e] = e` (and `[e,h] = −e`); fails the Leibniz identities.
pub fn perturbed_sl2(field: Field) -> LeibnizAlgebra {
    LeibnizAlgebra::from_i64_entries(
        "sl2_perturbed",
        field,
        3,
        &[
            (0, 1, 2, 1),
            (1, 0, 2, -1),
            (2, 0, 0, 1),
            (0, 2, 0, -1),
            (2, 1, 1, -2),
            (1, 2, 1, 2),
        ],
    )
}

pub fn sl2_sl2(field: Field) -> LeibnizAlgebra {
    sl2(field)
        .direct_sum(&sl2(field))
        .expect("same field")
        .with_name("sl2+sl2")
}

/// `[x, y] = z = −[y, x]`.
pub fn heisenberg(field: Field) -> LeibnizAlgebra {
    LeibnizAlgebra::from_i64_entries("heisenberg", field, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

pub fn l2_sl2(field: Field) -> LeibnizAlgebra {
    l2(field)
        .direct_sum(&sl2(field))
        .expect("same field")
        .with_name("L2+sl2")
}

/// The shipped catalog.
pub fn standard() -> Vec<LeibnizAlgebra> {
    let q = Field::Rational;
    vec![
        abelian(q, 3),
        l2(q),
        sl2(q),
        sl2(Field::Prime(5)),
        sl2_sl2(q),
        heisenberg(q),
        l2_sl2(q),
    ]
}

/// Looks up a catalog algebra by name, e.g. `sl2`, `sl2_gf5`, `abelian_4`.
pub fn by_name(name: &str) -> Option<LeibnizAlgebra> {
    let q = Field::Rational;
    if let Some(n) = name.strip_prefix("abelian_") {
        return n.parse().ok().map(|n| abelian(q, n));
    }
    if let Some(p) = name.strip_prefix("sl2_gf") {
        let p: u32 = p.parse().ok()?;
        return Field::prime(p).ok().map(sl2);
    }
    match name {
        "L2" => Some(l2(q)),
        "sl2" => Some(sl2(q)),
        "sl2+sl2" => Some(sl2_sl2(q)),
        "heisenberg" => Some(heisenberg(q)),
        "L2+sl2" => Some(l2_sl2(q)),
        "sl2_perturbed" => Some(perturbed_sl2(q)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_flags() {
        for a in standard() {
            assert!(a.is_right_leibniz(), "{} should be right Leibniz", a.name());
            assert!(a.is_symmetric(), "{} should be symmetric", a.name());
        }
        assert!(!perturbed_sl2(Field::Rational).is_right_leibniz());
    }

    #[test]
    fn lookup_by_name() {
        for a in standard() {
            assert_eq!(by_name(a.name()).as_ref(), Some(&a));
        }
        assert!(by_name("nope").is_none());
    }
}
