//! Randomized checks over seed-deterministic transitive origamis.

mod common;

use origami_forge_core::freegroup::IntMatrix2;
use origami_forge_core::homology::{
    f2_independent, gram, standard_form, symplectic_completion, twist_membership_certificate, H1Model,
};
use origami_forge_core::hss::{find_hss, step1, step1_with_order};
use origami_forge_core::subgroup::CosetAction;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn hss_on_random_origamis() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (k, o) in common::sample(7, 200, 12).iter().enumerate() {
        let r = find_hss(o).unwrap_or_else(|e| panic!("#{k} {:?} {:?}: {e}", o.p1(), o.p2()));
        let g = o.genus().unwrap();
        assert_eq!(r.curves.len(), g);
        let model = H1Model::new(o).unwrap();
        let classes: Vec<Vec<i64>> = r.curves.iter().map(|c| model.class_of_curve(o, c).unwrap()).collect();
        for c in &r.curves {
            assert!(o.is_closed(c));
            assert!(c.word.is_conjugate_horizontal(), "{c}");
        }
        assert!(f2_independent(&classes), "#{k}");
        let cuts = step1(o).cuts.len();
        let b = o.cylinders().len();
        for _ in 0..10 {
            let mut order: Vec<usize> = (0..b).collect();
            order.shuffle(&mut rng);
            assert_eq!(step1_with_order(o, &order).cuts.len(), cuts);
        }
        assert!(model.intersection.is_skew_symmetric());
        assert_eq!(model.intersection.det().abs(), 1);
        let basis = symplectic_completion(&model, &classes).unwrap();
        let all: Vec<Vec<i64>> = basis.a.iter().chain(&basis.b).cloned().collect();
        assert_eq!(gram(&model, &all), standard_form(g));
        let (m, twist) = o.horizontal_multiplier();
        assert!(CosetAction::new(o).veech_contains(twist).unwrap(), "m = {m}");
        assert!(CosetAction::new(o).veech_contains(IntMatrix2::IDENTITY).unwrap());
        assert!(twist_membership_certificate(o).unwrap().passed);
    }
}
