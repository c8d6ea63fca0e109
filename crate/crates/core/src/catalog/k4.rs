//! Four equal parts `(k,k,k,k)`, coordinates `(k,a,b,c)`.

use super::{flags, outputs, rational_apex, region, CaseSpec, ConePiece, Family, StatMap};
use crate::cones::{HalfOpenCone, Parity};
use crate::polynomial::MonomialMap;

const BASE: [&str; 7] = ["k >= 0", "a >= 0", "a <= k", "b >= 0", "b <= 2*k - a", "c >= 0", "c <= 3*k - a - b"];

const GENS: [(&str, &str); 8] = [
    ("v1", "x*y2^2*q^2*t^2"),
    ("v2", "x*q^6"),
    ("v3", "x*y1*q^3*t^3"),
    ("v4", "x*y1*y2*q*t^5"),
    ("v5", "x*y1*y2*y3*t^6"),
    ("v6", "x*y2^2*y3*q*t^3"),
    ("v7", "x*y3^3*q^3*t"),
    ("v8", "x*y1*y3^2*q*t^4"),
];

fn gen_output(name: &str) -> &'static str {
    GENS.iter().find(|(n, _)| *n == name).expect("known generator").1
}

/// Generators are read off the marker exponents of their outputs.
fn piece(label: &str, apex: &[(i64, i64)], gens: &[&str], pattern: &str) -> ConePiece {
    let monos: Vec<&str> = gens.iter().map(|g| gen_output(g)).collect();
    let generator_outputs = outputs(Family::K4, &monos);
    let generators = generator_outputs.iter().map(|m| m.exps()[..4].iter().map(|&e| e as i64).collect()).collect();
    ConePiece {
        label: label.to_string(),
        cone: HalfOpenCone::new(rational_apex(apex), generators, flags(pattern)).expect("static cone"),
        generator_outputs,
    }
}

const ZERO: [(i64, i64); 4] = [(0, 1); 4];

fn with_base(extra: &[&'static str]) -> Vec<&'static str> {
    BASE.iter().copied().chain(extra.iter().copied()).collect()
}

pub(super) fn cases() -> Vec<CaseSpec> {
    let f = Family::K4;
    let p1_map = MonomialMap::new(
        &f.sigma_context(),
        &f.output_context(),
        &[("y", "x*q^6*t^-4"), ("z1", "y1*q^-3*t^6"), ("z2", "y2*q^-2*t^3"), ("z3", "y3*q^-1*t")],
    )
    .expect("static map");
    let case = |id: &str, extra: &[&'static str], parity: Option<Parity>, pieces, branch, corrections| CaseSpec {
        id: id.to_string(),
        family: f,
        sign: 1,
        region: region(f, &with_base(extra), parity.map(|p| ("b", p))),
        pieces,
        stat_map: StatMap::GeneratorWeights,
        branch,
        corrections,
    };
    let even = Some(Parity::Even);
    let odd = Some(Parity::Odd);
    let mut p1c1 = case(
        "P1C1",
        &["b >= 2*k - 2*a", "c >= 4*k - 2*a - 2*b"],
        None,
        vec![
            piece("P1C1a", &ZERO, &["v1", "v4", "v6", "v8"], "cccc"),
            piece("P1C1b", &ZERO, &["v4", "v5", "v6", "v8"], "cocc"),
        ],
        0,
        vec![],
    );
    p1c1.stat_map = StatMap::Substitution(p1_map);
    vec![
        p1c1,
        case(
            "P1C2",
            &["b >= 2*k - 2*a", "c < 4*k - 2*a - 2*b"],
            None,
            vec![piece("P1C2", &ZERO, &["v1", "v3", "v4", "v8"], "cocc")],
            1,
            vec![],
        ),
        case(
            "P2C1",
            &["b < 2*k - 2*a", "2*c >= 6*k - 2*a - 3*b"],
            even,
            vec![piece("P2C1", &ZERO, &["v1", "v6", "v7", "v8"], "ccoc")],
            2,
            vec![],
        ),
        case(
            "P2C2",
            &["b < 2*k - 2*a", "2*c >= 6*k - 6*a - 3*b", "2*c < 6*k - 2*a - 3*b"],
            even,
            vec![piece("P2C2", &ZERO, &["v1", "v3", "v7", "v8"], "cooc")],
            3,
            vec![],
        ),
        case(
            "P2C3",
            &["b < 2*k - 2*a", "2*c < 6*k - 6*a - 3*b"],
            even,
            vec![piece("P2C3", &ZERO, &["v1", "v2", "v3", "v7"], "cocc")],
            4,
            vec![],
        ),
        case(
            "P3C1",
            &["b < 2*k - 2*a", "2*c >= 6*k - 2*a - 3*b - 1"],
            odd,
            vec![piece("P3C1", &[(-1, 2), (0, 1), (-1, 1), (-1, 2)], &["v1", "v6", "v7", "v8"], "ccoc")],
            5,
            vec![piece("P3C1-corr", &[(0, 1), (0, 1), (-1, 1), (1, 1)], &["v7", "v8"], "cc")],
        ),
        case(
            "P3C2",
            &["b < 2*k - 2*a", "2*c >= 6*k - 6*a - 3*b - 1", "2*c < 6*k - 2*a - 3*b - 1"],
            odd,
            vec![piece("P3C2", &[(0, 1), (0, 1), (0, 1), (-1, 2)], &["v1", "v3", "v7", "v8"], "cooc")],
            6,
            vec![],
        ),
        case(
            "P3C3",
            &["b < 2*k - 2*a", "2*c < 6*k - 6*a - 3*b - 1"],
            odd,
            vec![piece("P3C3", &[(1, 6), (0, 1), (0, 1), (0, 1)], &["v1", "v2", "v3", "v7"], "cocc")],
            7,
            vec![],
        ),
    ]
}
