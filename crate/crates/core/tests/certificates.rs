//! Homological certificates of horizontal multi-twists.

use origami_forge_core::homology::{twist_membership_certificate, twist_membership_certificate_direction};
use origami_forge_core::origami::Origami;

#[test]
fn fixtures_pass() {
    let mut fixtures = vec![("wollmilchsau", Origami::wollmilchsau()), ("o14", Origami::o14())];
    for n in 1..=5 {
        fixtures.push(("x", Origami::x_origami(n).unwrap()));
    }
    for m in 2..=4 {
        for n in 2..=4 {
            fixtures.push(("l", Origami::l_origami(m, n).unwrap()));
        }
    }
    for (name, o) in fixtures {
        let c = twist_membership_certificate(&o).unwrap();
        assert!(c.passed, "{name}: {c:?}");
    }
    let c = twist_membership_certificate(&Origami::wollmilchsau()).unwrap();
    assert_eq!(c.multiplier, 4);
    assert_eq!(twist_membership_certificate(&Origami::x_origami(3).unwrap()).unwrap().multiplier, 6);
}

#[test]
fn l22_direction_one_one() {
    let c = twist_membership_certificate_direction(&Origami::l_origami(2, 2).unwrap(), 1, 1).unwrap();
    assert_eq!(c.derivative, [4, -3, 3, -2]);
    assert!(c.passed, "{c:?}");
}
