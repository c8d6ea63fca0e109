use super::*;
use crate::paths::path_stats;
use crate::paths::DyckPath;

fn gf(family: Family, num: &str, den: &[&str]) -> RationalGF {
    RationalGF::parse(&family.output_context(), num, den).unwrap()
}

type Display<'a> = (&'a str, &'a [&'a str]);

fn assert_case(family: Family, id: &str, expected: &[Display]) {
    let spec = find_case(family, id).unwrap();
    let got = assemble_case(&spec).unwrap();
    let mut want = RationalGF::zero(&family.output_context());
    for (n, d) in expected {
        want = want.add(&gf(family, n, d)).unwrap();
    }
    assert!(got.equals(&want).unwrap(), "{family} {id}: got {got}");
}

#[test]
fn three_case_displays() {
    let f = Family::Three;
    assert_case(f, "C1", &[("1", &["x1*t^2", "x3", "x1*q*t", "x1*q^2", "x1*x2*q*t"])]);
    assert_case(f, "C2", &[("1", &["x1*t^2", "x2*t", "x3", "x1*x2*q*t", "x2*q"])]);
    let c3 = assemble_case(&find_case(f, "C3A").unwrap())
        .unwrap()
        .add(&assemble_case(&find_case(f, "C3B").unwrap()).unwrap())
        .unwrap();
    let want = gf(f, "x1*x2*q^3 + x1*x2*q^2*t", &["x1*t^2", "x3", "x1*x2*q*t", "x2*q", "x1*q^2"]);
    assert!(c3.equals(&want).unwrap(), "{c3}");
    assert_case(f, "O", &[("1", &["x1*t^2", "x3", "x1*x2*q*t"])]);
}

const V1: &str = "x*y2^2*q^2*t^2";
const V2: &str = "x*q^6";
const V3: &str = "x*y1*q^3*t^3";
const V4: &str = "x*y1*y2*q*t^5";
const V5: &str = "x*y1*y2*y3*t^6";
const V6: &str = "x*y2^2*y3*q*t^3";
const V7: &str = "x*y3^3*q^3*t";
const V8: &str = "x*y1*y3^2*q*t^4";

#[test]
fn k4_case_displays() {
    let f = Family::K4;
    assert_case(f, "P1C1", &[("1 - x^2*y1*y2^3*y3*q^2*t^8", &[V1, V4, V6, V8, V5])]);
    assert_case(f, "P1C2", &[("x*y1*q^3*t^3 + x*y1*y3*q^2*t^4", &[V1, V3, V4, V8])]);
    assert_case(f, "P2C1", &[("x*y3^3*q^3*t", &[V1, V6, V7, V8])]);
    assert_case(f, "P3C1", &[("x*y2*y3*q^2*t^2*(-x*y2^2*y3*q^2*t^3 + q + y3*t)", &[V1, V6, V7, V8])]);
    assert_case(f, "P2C2", &[("x^2*y1*y3^3*q^6*t^4 + x^2*y1*y3^4*q^5*t^5", &[V1, V3, V7, V8])]);
    assert_case(f, "P3C2", &[("x^2*y1*y2*y3*q^5*t^5*(q + y3*t)", &[V1, V3, V7, V8])]);
    assert_case(f, "P2C3", &[("x*q^4*(q^2 + y3*q*t + y3^2*t)", &[V1, V2, V3, V7])]);
    assert_case(f, "P3C3", &[("x*y2*q^4*t^2 + x^2*y2*y3*q^9*t^2 + x^2*y2*y3^2*q^8*t^3", &[V1, V2, V3, V7])]);
}

#[test]
fn kaaa_case_displays() {
    let f = Family::Kaaa;
    let table: &[(&str, &[Display])] = &[
        ("P1C1", &[("1", &["x*z1*q^3*t^3", "y*q^3", "x*q^6"])]),
        ("P1C2", &[("x*z3*q^3*t*(q^2 + z3*q + z3^2)", &["x*z3^3*q^3*t", "x*q^6", "x*z1*q^3*t^3", "y*q^3"])]),
        (
            "P1C3",
            &[
                ("y*z3*q^2*t + y*z3^2*q*t", &["x*z3^3*q^3*t", "y*q^3", "x*z1*q^3*t^3", "y*z3^2*q*t"]),
                ("x*z1*z3*q^2*t^4 + x*z1*z3^2*q*t^4", &["x*z3^3*q^3*t", "x*z1*q^3*t^3", "x*z1*z3^2*q*t^4", "y*z3^2*q*t"]),
            ],
        ),
        ("P2", &[("x*z2*q^4*t^2 + x*z2^2*q^2*t^2", &["x*z1*q^3*t^3", "y*q^3", "x*z2^2*q^2*t^2", "x*q^6"])]),
        (
            "P3C1",
            &[(
                "x^2*z2^2*z3*q^7*t^3 + x^2*z2^2*z3^2*q^6*t^3 + x^2*z2^2*z3^3*q^5*t^3",
                &["y*q^3", "x*z2^2*q^2*t^2", "x*z1*q^3*t^3", "x*z3^3*q^3*t", "x*q^6"],
            )],
        ),
        (
            "P3C2",
            &[
                (
                    "x*y*z2^2*z3*q^4*t^3 + x*y*z2^2*z3^2*q^3*t^3",
                    &["y*q^3", "y*z3^2*q*t", "x*z3^3*q^3*t", "x*z2^2*q^2*t^2", "x*z1*q^3*t^3"],
                ),
                (
                    "x^2*z1*z2^2*z3*q^4*t^6 + x^2*z1*z2^2*z3^2*q^3*t^6",
                    &["y*z3^2*q*t", "x*z3^3*q^3*t", "x*z2^2*q^2*t^2", "x*z1*q^3*t^3", "x*z1*z3^2*q*t^4"],
                ),
            ],
        ),
        (
            "P3C3",
            &[("x*z2^2*z3*q*t^3", &["x*z3^3*q^3*t", "y*z3^2*q*t", "x*z1*z3^2*q*t^4", "x*z2^2*q^2*t^2", "x*z2^2*z3*q*t^3"])],
        ),
        (
            "P4C1",
            &[(
                "x*z2*z3*q^3*t^2 + x^2*z2*z3^2*q^8*t^3 + x^2*z2*z3^3*q^7*t^3",
                &["y*q^3", "x*z2^2*q^2*t^2", "x*z1*q^3*t^3", "x*z3^3*q^3*t", "x*q^6"],
            )],
        ),
        (
            "P4C2",
            &[
                (
                    "x*y*z2*z3^2*q^5*t^3 + x*y*z2*z3^3*q^4*t^3",
                    &["x*z3^3*q^3*t", "x*z2^2*q^2*t^2", "y*z3^2*q*t", "x*z1*q^3*t^3", "y*q^3"],
                ),
                (
                    "x^2*z1*z2*z3^2*q^5*t^6 + x^2*z1*z2*z3^3*q^4*t^6",
                    &["x*z3^3*q^3*t", "x*z2^2*q^2*t^2", "y*z3^2*q*t", "x*z1*q^3*t^3", "x*z1*z3^2*q*t^4"],
                ),
            ],
        ),
        (
            "P4C3",
            &[("x*z2*z3^2*q^2*t^3", &["x*z3^3*q^3*t", "y*z3^2*q*t", "x*z1*z3^2*q*t^4", "x*z2^2*q^2*t^2", "x*z2^2*z3*q*t^3"])],
        ),
        (
            "P5C1",
            &[
                ("y*z2*q*t^2 + y^2*z2*z3*q^3*t^3", &["y*q^3", "y*z3^2*q*t", "y*z2*q*t^2", "x*z2^2*q^2*t^2", "x*z1*q^3*t^3"]),
                (
                    "x*y*z1*z2*z3*q^3*t^6 + x*y*z1*z2*z3^2*q^2*t^6",
                    &["y*z3^2*q*t", "y*z2*q*t^2", "x*z2^2*q^2*t^2", "x*z1*q^3*t^3", "x*z1*z3^2*q*t^4"],
                ),
                (
                    "x*z1*z2*q*t^5 + x^2*z1^2*z2*z3*q^3*t^9",
                    &["y*z2*q*t^2", "x*z2^2*q^2*t^2", "x*z1*q^3*t^3", "x*z1*z3^2*q*t^4", "x*z1*z2*q*t^5"],
                ),
            ],
        ),
        (
            "P5C2",
            &[
                ("y*z2*z3*t^3", &["y*z3^2*q*t", "y*z2*q*t^2", "y*z2*z3*t^3", "x*z2^2*q^2*t^2", "x*z1*z3^2*q*t^4"]),
                ("x*y*z2^3*z3^2*q*t^6", &["y*z3^2*q*t", "y*z2*z3*t^3", "x*z2^2*q^2*t^2", "x*z2^2*z3*q*t^3", "x*z1*z3^2*q*t^4"]),
                ("x*y*z1*z2^2*z3*q*t^8", &["y*z2*q*t^2", "y*z2*z3*t^3", "x*z2^2*q^2*t^2", "x*z1*z3^2*q*t^4", "x*z1*z2*q*t^5"]),
                ("x^2*z1*z2^3*z3*q^2*t^8", &["y*z2*z3*t^3", "x*z2^2*q^2*t^2", "x*z2^2*z3*q*t^3", "x*z1*z3^2*q*t^4", "x*z1*z2*q*t^5"]),
                ("x*z1*z2*z3*t^6", &["y*z2*z3*t^3", "x*z2^2*z3*q*t^3", "x*z1*z3^2*q*t^4", "x*z1*z2*q*t^5", "x*z1*z2*z3*t^6"]),
            ],
        ),
    ];
    for (id, pieces) in table {
        assert_case(f, id, pieces);
    }
}

#[test]
fn assembled_theorems_match_printed() {
    for f in Family::ALL {
        let th = theorem(f);
        let got = assemble_theorem(f).unwrap();
        assert!(got.equals(&th.corrected()).unwrap(), "{f}");
    }
}

#[test]
fn printed_kaaa_numerator_has_wrong_sign() {
    let th = theorem(Family::Kaaa);
    assert_eq!(th.sign, -1);
    assert_eq!(th.printed.numerator().coeff(&Monomial::one(4)), BigInt::from(-1));
}

fn box_points(family: Family, bound: i64) -> Vec<Vec<i64>> {
    let d = family.dim();
    let mut out = Vec::new();
    let mut p = vec![0i64; d];
    loop {
        out.push(p.clone());
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            if p[i] < bound {
                p[i] += 1;
                break;
            }
            p[i] = 0;
            i += 1;
        }
    }
}

fn base_region(family: Family) -> Region {
    let base: &[&str] = match family {
        Family::Three => &["r2 <= k1", "r3 <= r2 + k2"],
        Family::K4 => &["a <= k", "b <= 2*k - a", "c <= 3*k - a - b"],
        Family::Kaaa => &["a <= k", "b <= 2*k + m - a", "c <= 3*k + 2*m - a - b"],
    };
    region(family, base, None)
}

#[test]
fn regions_and_cones_partition_the_box() {
    for (f, bound) in [(Family::Three, 4), (Family::K4, 4), (Family::Kaaa, 3)] {
        let cases = case_catalog(f);
        let base = base_region(f);
        for p in box_points(f, bound) {
            let inside = base.contains(&p) as i64;
            let by_region: i64 = cases.iter().map(|c| c.sign * c.region.contains(&p) as i64).sum();
            let by_cones: i64 = cases.iter().map(|c| c.sign * c.realized_multiplicity(&p)).sum();
            assert_eq!(by_region, inside, "{f} regions at {p:?}");
            assert_eq!(by_cones, inside, "{f} cones at {p:?}");
        }
    }
}

#[test]
fn realization_matches_region_per_case() {
    for (f, bound) in [(Family::Three, 4), (Family::K4, 4), (Family::Kaaa, 3)] {
        for spec in case_catalog(f) {
            for p in box_points(f, bound) {
                let want = spec.region.contains(&p) as i64;
                assert_eq!(spec.realized_multiplicity(&p), want, "{f} {} at {p:?}", spec.id);
            }
        }
    }
}

#[test]
fn case_outputs_carry_path_statistics() {
    for (f, bound) in [(Family::Three, 4), (Family::K4, 4), (Family::Kaaa, 3)] {
        for spec in case_catalog(f) {
            for p in box_points(f, bound) {
                if !spec.region.contains(&p) {
                    continue;
                }
                let Some((kv, ranks)) = f.path_of(&p) else { continue };
                let stats = path_stats(&DyckPath::new(kv, ranks).unwrap()).unwrap();
                let want = f.output_monomial(&p, stats.area as i64, stats.bounce as i64);
                assert_eq!(spec.output_of(&p), want, "{f} {} at {p:?}", spec.id);
                assert_eq!(f.closed_stats(&p).unwrap(), (stats.area, stats.bounce));
                assert!(f.branches(&p).contains(&spec.branch) || spec.sign < 0, "{f} {} at {p:?}", spec.id);
            }
        }
    }
}

#[test]
fn coordinates_round_trip() {
    for f in Family::ALL {
        for kv in f.kvectors(3) {
            paths::for_each_ranks(&kv, None, |r| {
                let p = f.coordinates_of(&kv, r).unwrap();
                let (kv2, r2) = f.path_of(&p).unwrap();
                assert_eq!((kv2, r2.as_slice()), (kv.clone(), r));
            });
        }
    }
}

#[test]
fn constraint_parser() {
    let c = ctx(&["k", "a"]);
    let ineq = parse_constraint(&c, "2*a >= 6*k - 1").unwrap();
    assert_eq!(ineq.len(), 1);
    assert_eq!((ineq[0].coeffs.clone(), ineq[0].constant, ineq[0].strict), (vec![-6, 2], 1, false));
    assert_eq!(parse_constraint(&c, "a == k").unwrap().len(), 2);
    let lt = &parse_constraint(&c, "a < k").unwrap()[0];
    assert!(lt.holds(&[2, 1]) && !lt.holds(&[1, 1]));
    assert!(parse_constraint(&c, "a*k >= 0").is_err());
    assert!(parse_constraint(&c, "a + k").is_err());
}

#[test]
fn membership_checks_dimension() {
    let spec = find_case(Family::K4, "P2C1").unwrap();
    assert!(matches!(case_membership(&spec, &[1, 0, 0]), Err(Error::Usage(_))));
    assert!(case_membership(&spec, &[2, 0, 0, 6]).unwrap());
    assert!(!case_membership(&spec, &[2, 0, 1, 6]).unwrap());
}
