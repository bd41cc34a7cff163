//! Origami geometry: cylinders, vertices, genus, curves and shears.

mod common;

use num_rational::Ratio;
use origami_forge_core::freegroup::{IntMatrix2, Word};
use origami_forge_core::origami::{AffineChange, Origami, OrigamiCurve, OrigamiError, Permutation};

fn sorted_orbits(o: &Origami) -> Vec<Vec<usize>> {
    let mut orbits: Vec<Vec<usize>> = o
        .vertex_orbits()
        .into_iter()
        .map(|mut v| {
            v.sort_unstable();
            v
        })
        .collect();
    orbits.sort();
    orbits
}

fn curve(start: usize, word: &str) -> OrigamiCurve {
    OrigamiCurve::new(start, Word::parse(word, 2).unwrap())
}

#[test]
fn wollmilchsau_geometry() {
    let o = Origami::wollmilchsau();
    assert_eq!(o.d(), 8);
    let cylinders: Vec<Vec<usize>> = o.cylinders().into_iter().map(|c| c.squares).collect();
    assert_eq!(cylinders, vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]]);
    assert_eq!(sorted_orbits(&o), vec![vec![1, 3], vec![2, 4], vec![5, 7], vec![6, 8]]);
    assert_eq!(o.genus().unwrap(), 3);
    assert_eq!(o.horizontal_multiplier(), (4, IntMatrix2::new(1, 4, 0, 1)));
    let parsed = Origami::new(
        Permutation::parse_cycles(8, "(1 2 3 4)(5 6 7 8)").unwrap(),
        Permutation::parse_cycles(8, "(1 7 3 5)(2 6 4 8)").unwrap(),
    )
    .unwrap();
    assert_eq!(parsed, o);
}

#[test]
fn o14_geometry() {
    let o = Origami::o14();
    let lengths: Vec<usize> = o.cylinders().iter().map(|c| c.len()).collect();
    assert_eq!(lengths, vec![4, 3, 7]);
    let mut expected =
        vec![vec![1], vec![2], vec![3, 6], vec![4], vec![5], vec![7], vec![8, 9, 10, 11, 12, 13], vec![14]];
    expected.sort();
    assert_eq!(sorted_orbits(&o), expected);
    assert_eq!(o.genus().unwrap(), 4);
    assert_eq!(o.horizontal_multiplier().0, 84);
}

#[test]
fn l_and_x_origamis() {
    for m in 2..=6 {
        for n in 2..=6 {
            let o = Origami::l_origami(m, n).unwrap();
            assert_eq!(o.d(), m + n - 1);
            let lengths: Vec<usize> = o.cylinders().iter().map(|c| c.len()).collect();
            let mut expected = vec![m];
            expected.extend(vec![1; n - 1]);
            assert_eq!(lengths, expected);
            assert_eq!(o.genus().unwrap(), 2, "L({m},{n})");
            assert_eq!(o.vertex_orbits().len(), m + n - 3);
        }
    }
    for n in 1..=6 {
        let o = Origami::x_origami(n).unwrap();
        assert_eq!(o.d(), 2 * n);
        assert_eq!(o.genus().unwrap(), n, "O({n})");
        assert_eq!(o.horizontal_multiplier().0, 2 * n as u64);
    }
    assert!(matches!(Origami::l_origami(1, 3), Err(OrigamiError::BadParameters(_))));
    assert!(matches!(Origami::x_origami(0), Err(OrigamiError::BadParameters(_))));
}

#[test]
fn validation_errors() {
    assert_eq!(Origami::from_images(vec![1, 2], vec![1, 2]), Err(OrigamiError::NotTransitive));
    assert_eq!(Permutation::new(vec![1, 1]), Err(OrigamiError::NotBijective { size: 2 }));
    assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
    assert_eq!(Permutation::parse_cycles(4, "(2 3)").unwrap().images(), &[1, 3, 2, 4]);
}

#[test]
fn curves_close_under_monodromy() {
    let w = Origami::wollmilchsau();
    assert!(w.is_closed(&curve(1, "x y^-1 x y")));
    assert!(w.is_closed(&curve(1, "x^4")));
    assert!(!w.is_closed(&curve(1, "x")));
    assert_eq!(w.trace_curve(&curve(1, "x")), vec![1, 2]);
    assert!(Origami::o14().is_closed(&curve(8, "x^-3 y^-1 x y")));
}

#[test]
fn shear_examples() {
    let l22 = Origami::l_origami(2, 2).unwrap();
    let (s, change) = l22.shear(1, 1).unwrap();
    assert_eq!(s.d(), 3);
    assert_eq!(s.vertical_multiplier(), 3);
    let a = change.conjugate(IntMatrix2::new(1, 0, 3, 1)).to_int().unwrap();
    assert_eq!(a, IntMatrix2::new(4, -3, 3, -2));
    assert_eq!(a.apply((1, 1)), (1, 1));
    let (same, id) = l22.shear(1, 0).unwrap();
    assert_eq!((same, id), (l22.clone(), AffineChange::identity()));
    assert_eq!(l22.shear(2, 4).unwrap_err(), OrigamiError::BadDirection { p: 2, q: 4 });
}

#[test]
fn random_invariants() {
    for o in common::sample(11, 150, 10) {
        let d = o.d();
        assert_eq!(o.cylinders().iter().map(|c| c.len()).sum::<usize>(), d);
        let orbits = o.vertex_orbits();
        assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), d);
        let g = o.genus().unwrap();
        // Riemann–Hurwitz: 2g − 2 is the total excess cone angle.
        assert_eq!(2 * g as i64 - 2, orbits.iter().map(|v| v.len() as i64 - 1).sum::<i64>());
        for (p, q) in [(1, 1), (1, 2), (-1, 2), (2, 3), (3, 1)] {
            let (s, change) = o.shear(p, q).unwrap();
            assert_eq!(s.d(), d * q as usize);
            assert_eq!(s.genus().unwrap(), g);
            for c in [-2, 1, 5] {
                let a = change.conjugate(IntMatrix2::new(1, 0, c, 1));
                assert_eq!(a.det(), 1.into());
                let e = a.entries;
                let (pr, qr) = (Ratio::from(p), Ratio::from(q));
                assert_eq!((e[0] * pr + e[1] * qr, e[2] * pr + e[3] * qr), (pr, qr));
            }
        }
    }
}
