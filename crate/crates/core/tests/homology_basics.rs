//! Cell complex, H₁ model and intersection form.

use origami_forge_core::freegroup::Word;
use origami_forge_core::homology::{gram, standard_form, CellComplex, H1Model};
use origami_forge_core::origami::Origami;

fn w(text: &str) -> Word {
    Word::parse(text, 2).unwrap()
}

#[test]
fn euler_characteristics() {
    let c = CellComplex::new(&Origami::wollmilchsau()).unwrap();
    assert_eq!((c.vertices.len(), c.d), (4, 8));
    assert_eq!(c.euler_characteristic(), -4);
    assert_eq!(CellComplex::new(&Origami::o14()).unwrap().euler_characteristic(), -6);
}

#[test]
fn l_origami_symplectic_words_give_standard_form() {
    for m in 2..=4 {
        for n in 2..=4 {
            let o = Origami::l_origami(m, n).unwrap();
            let model = H1Model::new(&o).unwrap();
            assert_eq!(model.rank(), 4);
            let words =
                [w(&format!("x^-{m}")), w("y x y^-1"), w("x y x^-1"), w(&format!("y x^-1 y^-1 x y x^-1 y^-{n}"))];
            let classes: Vec<Vec<i64>> = words.iter().map(|x| model.class_of(&o, x).unwrap()).collect();
            assert_eq!(gram(&model, &classes), standard_form(2), "L({m},{n})");
            assert!(model.intersection.is_skew_symmetric());
            assert_eq!(model.intersection.det().abs(), 1);
        }
    }
}
