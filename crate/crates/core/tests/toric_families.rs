//! Identity checks for the stored toric fans, independent of the threshold.
//!
//! For a smooth Fano threefold `h⁰(-K) = (-K)³/2 + 3`, and for a toric one
//! the sections of `-K` are the lattice points of the dual polytope. Counting
//! those points therefore pins down the anticanonical degree of each stored
//! fan.

use lct_core::db::{load_builtin, lookup};
use lct_core::toric::dual_polytope;
use lct_core::{Integer, Rational, RationalVector};
use num_traits::ToPrimitive;

fn lattice_points(id: &str) -> usize {
    let db = load_builtin();
    let fan = lookup(&db, id).unwrap().fan.clone().expect("toric family");
    let delta = dual_polytope(&fan);
    let vertices = delta.enumerate_vertices().unwrap();
    let lo: Vec<i64> = (0..3)
        .map(|i| vertices.iter().map(|v| v[i].floor().to_integer().to_i64().unwrap()).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..3)
        .map(|i| vertices.iter().map(|v| v[i].ceil().to_integer().to_i64().unwrap()).max().unwrap())
        .collect();
    let mut count = 0;
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let p = RationalVector::new(
                    [x, y, z].iter().map(|&c| Rational::from_integer(Integer::from(c))).collect(),
                );
                if delta.contains(&p) {
                    count += 1;
                }
            }
        }
    }
    count
}

#[test]
fn anticanonical_degrees_match_the_classification() {
    let degrees = [
        ("1.17", 64),
        ("2.33", 54),
        ("2.34", 54),
        ("2.35", 56),
        ("2.36", 62),
        ("3.25", 44),
        ("3.26", 46),
        ("3.27", 48),
        ("3.28", 48),
        ("3.29", 50),
        ("3.30", 50),
        ("3.31", 52),
        ("4.9", 40),
        ("4.10", 42),
        ("4.11", 44),
        ("4.12", 46),
        ("5.2", 36),
        ("5.3", 36),
    ];
    for (id, degree) in degrees {
        assert_eq!(lattice_points(id), degree / 2 + 3, "family {id}");
    }
}

#[test]
fn exactly_the_toric_families_carry_fans() {
    let db = load_builtin();
    let with_fans: Vec<String> = db
        .records()
        .iter()
        .filter(|r| r.fan.is_some())
        .map(|r| r.id.to_string())
        .collect();
    assert_eq!(
        with_fans,
        [
            "1.17", "2.33", "2.34", "2.35", "2.36", "3.25", "3.26", "3.27", "3.28", "3.29", "3.30",
            "3.31", "4.9", "4.10", "4.11", "4.12", "5.2", "5.3"
        ]
    );
    for r in db.records().iter().filter(|r| r.fan.is_some()) {
        let fan = r.fan.as_ref().unwrap();
        // Picard rank of a complete simplicial toric variety.
        assert_eq!(fan.len() - fan.dim(), r.picard_rank as usize, "family {}", r.id);
    }
}
