//! Three-part paths `(k1,k2,k3)`, coordinates `(k1,k2,k3,r2,r3)`.

use super::{outputs, region, CaseSpec, ConePiece, Family, StatMap};
use crate::cones::{HalfOpenCone, Parity};
use crate::polynomial::{Monomial, MonomialMap};

const BASE: [&str; 7] = ["k1 >= 0", "k2 >= 0", "k3 >= 0", "r2 >= 0", "r2 <= k1", "r3 >= 0", "r3 <= r2 + k2"];

fn with_base(extra: &[&'static str]) -> Vec<&'static str> {
    BASE.iter().copied().chain(extra.iter().copied()).collect()
}

fn substitution(images: &[(&str, &str)]) -> MonomialMap {
    MonomialMap::new(&Family::Three.sigma_context(), &Family::Three.output_context(), images).expect("static map")
}

fn c1_map() -> MonomialMap {
    substitution(&[("z1", "x1*t^2"), ("z2", "x2"), ("z3", "x3"), ("w2", "q*t^-1"), ("w3", "q*t^-1")])
}

fn mapped_piece(label: &str, gens: &[[i64; 5]], open: &[bool], map: &MonomialMap) -> ConePiece {
    let generators: Vec<Vec<i64>> = gens.iter().map(|g| g.to_vec()).collect();
    let generator_outputs = generators
        .iter()
        .map(|g| map.apply(&Monomial(g.iter().map(|&x| x as i32).collect())))
        .collect();
    ConePiece {
        label: label.to_string(),
        cone: HalfOpenCone::with_integer_apex(&[0; 5], generators, open.to_vec()).expect("static cone"),
        generator_outputs,
    }
}

pub(super) fn cases() -> Vec<CaseSpec> {
    let f = Family::Three;
    let c1 = c1_map();
    let c2 = substitution(&[("z1", "x1*t^2"), ("z2", "x2*t"), ("z3", "x3"), ("w2", "q*t^-2"), ("w3", "q*t^-1")]);

    let c1_gens = [[1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [1, 0, 0, 1, 0], [1, 0, 0, 1, 1], [1, 1, 0, 1, 0]];
    let c2_gens = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [1, 1, 0, 1, 0], [0, 1, 0, 0, 1]];
    let c3_gens: Vec<Vec<i64>> =
        vec![vec![1, 0, 0, 0, 0], vec![0, 0, 1, 0, 0], vec![1, 1, 0, 1, 0], vec![1, 0, 0, 1, 1], vec![0, 1, 0, 0, 1]];
    let c3_piece = || ConePiece {
        label: "C3".to_string(),
        cone: HalfOpenCone::with_integer_apex(&[0; 5], c3_gens.clone(), super::flags("cccoo")).expect("static cone"),
        generator_outputs: outputs(f, &["x1*t^2", "x3", "x1*x2*q*t", "x1*q^2", "x2*q"]),
    };
    let c3 = |id: &str, parity: Parity| CaseSpec {
        id: id.to_string(),
        family: f,
        sign: 1,
        region: region(
            f,
            &with_base(&["r2 + k2 - r3 < 2*k2", "r2 + k2 - r3 < 2*r2"]),
            Some(("k2 + r2 - r3", parity)),
        ),
        pieces: vec![c3_piece()],
        stat_map: StatMap::GeneratorWeights,
        branch: 1,
        corrections: vec![],
    };

    vec![
        CaseSpec {
            id: "C1".into(),
            family: f,
            sign: 1,
            region: region(f, &with_base(&["r2 + k2 - r3 >= 2*k2", "r2 >= k2"]), None),
            pieces: vec![mapped_piece("C1", &c1_gens, &[false; 5], &c1)],
            stat_map: StatMap::Substitution(c1.clone()),
            branch: 0,
            corrections: vec![],
        },
        CaseSpec {
            id: "C2".into(),
            family: f,
            sign: 1,
            region: region(f, &with_base(&["r2 + k2 - r3 >= 2*r2", "r2 <= k2"]), None),
            pieces: vec![mapped_piece("C2", &c2_gens, &[false; 5], &c2)],
            stat_map: StatMap::Substitution(c2),
            branch: 0,
            corrections: vec![],
        },
        c3("C3A", Parity::Even),
        c3("C3B", Parity::Odd),
        CaseSpec {
            id: "O".into(),
            family: f,
            sign: -1,
            region: region(f, &with_base(&["r2 == k2", "r3 == 0"]), None),
            pieces: vec![mapped_piece(
                "O",
                &[[1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [1, 1, 0, 1, 0]],
                &[false; 3],
                &c1,
            )],
            stat_map: StatMap::Substitution(c1),
            branch: 0,
            corrections: vec![],
        },
    ]
}
