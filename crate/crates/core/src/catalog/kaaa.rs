//! Parts `(k,k+m,k+m,k+m)`, coordinates `(k,m,a,b,c)`.

use super::{flags, outputs, region, CaseSpec, ConePiece, Family, StatMap};
use crate::cones::{HalfOpenCone, Parity};

const BASE: [&str; 8] =
    ["k >= 0", "m >= 0", "a >= 0", "a <= k", "b >= 0", "b <= 2*k + m - a", "c >= 0", "c <= 3*k + 2*m - a - b"];

const MID: [&str; 2] = ["b > 0", "b <= 2*k - 2*a"];

/// Generators are read off the marker exponents of their outputs; every
/// piece is apexed at the origin.
fn piece(label: &str, gens: &[&str], pattern: &str) -> ConePiece {
    let generator_outputs = outputs(Family::Kaaa, gens);
    let generators = generator_outputs.iter().map(|m| m.exps()[..5].iter().map(|&e| e as i64).collect()).collect();
    ConePiece {
        label: label.to_string(),
        cone: HalfOpenCone::with_integer_apex(&[0; 5], generators, flags(pattern)).expect("static cone"),
        generator_outputs,
    }
}

const G_K: &str = "x*q^6";
const G_M: &str = "y*q^3";
const G_A: &str = "x*z1*q^3*t^3";
const G_B2: &str = "x*z2^2*q^2*t^2";
const G_C3: &str = "x*z3^3*q^3*t";
const G_YC2: &str = "y*z3^2*q*t";
const G_AC2: &str = "x*z1*z3^2*q*t^4";
const G_B2C: &str = "x*z2^2*z3*q*t^3";
const G_YB: &str = "y*z2*q*t^2";
const G_AB: &str = "x*z1*z2*q*t^5";
const G_YBC: &str = "y*z2*z3*t^3";
const G_ABC: &str = "x*z1*z2*z3*t^6";

pub(super) fn cases() -> Vec<CaseSpec> {
    let f = Family::Kaaa;
    let case = |id: &str, extra: &[&'static str], parity: Option<Parity>, pieces: Vec<ConePiece>, branch| {
        let constraints: Vec<&str> = BASE.iter().copied().chain(extra.iter().copied()).collect();
        CaseSpec {
            id: id.to_string(),
            family: f,
            sign: 1,
            region: region(f, &constraints, parity.map(|p| ("b", p))),
            pieces,
            stat_map: StatMap::GeneratorWeights,
            branch,
            corrections: vec![],
        }
    };
    let mid = |extra: &[&'static str]| -> Vec<&'static str> {
        MID.iter().copied().chain(["c > 0"]).chain(extra.iter().copied()).collect()
    };
    let even = Some(Parity::Even);
    let odd = Some(Parity::Odd);
    vec![
        case("P1C1", &["b == 0", "c == 0"], None, vec![piece("P1C1", &[G_A, G_M, G_K], "ccc")], 0),
        case(
            "P1C2",
            &["b == 0", "c > 0", "c <= 3*k - 3*a"],
            None,
            vec![piece("P1C2", &[G_C3, G_K, G_A, G_M], "occc")],
            1,
        ),
        case(
            "P1C3",
            &["b == 0", "c > 3*k - 3*a"],
            None,
            vec![
                piece("P1C3a", &[G_C3, G_M, G_A, G_YC2], "ccco"),
                piece("P1C3b", &[G_C3, G_A, G_AC2, G_YC2], "ccoc"),
            ],
            2,
        ),
        case("P2", &["b > 0", "b <= 2*k - 2*a", "c == 0"], None, vec![piece("P2", &[G_A, G_M, G_B2, G_K], "ccoc")], 3),
        case(
            "P3C1",
            &mid(&["6*k - 6*a - 3*b - 2*c >= 0"]),
            even,
            vec![piece("P3C1", &[G_M, G_B2, G_A, G_C3, G_K], "cococ")],
            4,
        ),
        case(
            "P3C2",
            &mid(&["2*c - 6*k + 6*a + 3*b > 0", "6*k - 3*b - 2*a + 4*m - 2*c >= 0"]),
            even,
            vec![
                piece("P3C2a", &[G_M, G_YC2, G_C3, G_B2, G_A], "cococ"),
                piece("P3C2b", &[G_YC2, G_C3, G_B2, G_A, G_AC2], "ccoco"),
            ],
            6,
        ),
        case(
            "P3C3",
            &mid(&["2*c - 6*k + 3*b + 2*a - 4*m > 0"]),
            even,
            vec![piece("P3C3", &[G_C3, G_YC2, G_AC2, G_B2, G_B2C], "cccco")],
            8,
        ),
        case(
            "P4C1",
            &mid(&["6*k - 6*a - 3*b - 2*c - 1 >= 0"]),
            odd,
            vec![piece("P4C1", &[G_M, G_B2, G_A, G_C3, G_K], "cococ")],
            5,
        ),
        case(
            "P4C2",
            &mid(&["2*c - 6*k + 6*a + 3*b + 1 > 0", "6*k - 3*b - 2*a + 4*m - 2*c - 1 >= 0"]),
            odd,
            vec![
                piece("P4C2a", &[G_C3, G_B2, G_YC2, G_A, G_M], "coocc"),
                piece("P4C2b", &[G_C3, G_B2, G_YC2, G_A, G_AC2], "cocco"),
            ],
            7,
        ),
        case(
            "P4C3",
            &mid(&["2*c - 6*k + 3*b + 2*a - 4*m + 1 > 0"]),
            odd,
            vec![piece("P4C3", &[G_C3, G_YC2, G_AC2, G_B2, G_B2C], "cccco")],
            9,
        ),
        case(
            "P5C1",
            &["b - 2*k + 2*a > 0", "4*k - 2*a + 2*m - 2*b - c >= 0"],
            None,
            vec![
                piece("P5C1a", &[G_M, G_YC2, G_YB, G_B2, G_A], "ccocc"),
                piece("P5C1b", &[G_YC2, G_YB, G_B2, G_A, G_AC2], "cocco"),
                piece("P5C1c", &[G_YB, G_B2, G_A, G_AC2, G_AB], "cccco"),
            ],
            10,
        ),
        case(
            "P5C2",
            &["b - 2*k + 2*a > 0", "c - 4*k + 2*a - 2*m + 2*b > 0"],
            None,
            vec![
                piece("P5C2a", &[G_YC2, G_YB, G_YBC, G_B2, G_AC2], "ccocc"),
                piece("P5C2b", &[G_YC2, G_YBC, G_B2, G_B2C, G_AC2], "cococ"),
                piece("P5C2c", &[G_YB, G_YBC, G_B2, G_AC2, G_AB], "cocco"),
                piece("P5C2d", &[G_YBC, G_B2, G_B2C, G_AC2, G_AB], "ccoco"),
                piece("P5C2e", &[G_YBC, G_B2C, G_AC2, G_AB, G_ABC], "cccco"),
            ],
            11,
        ),
    ]
}
