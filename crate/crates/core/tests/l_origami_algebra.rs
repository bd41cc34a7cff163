//! The symplectic generators of the L-shaped origamis and the action of the
//! horizontal twist on them.

use origami_forge_core::freegroup::{Alphabet, F2Endo, IntMatrix2, Word};
use origami_forge_core::homology::{
    alpha_eval, block_form_check, charpoly_divides, induced_matrix, modg_alpha_check, symplectic_action_matrix,
    AlphaSpec, H1Model,
};
use origami_forge_core::linalg::IntMatrix;
use origami_forge_core::origami::Origami;

fn sym(text: &str) -> Word {
    Word::parse_with(text, 4, Alphabet::Symplectic { genus: 2 }).unwrap()
}

/// `a₁, a₂, b₁, b₂` as loops at square 1 of `L(m, n)`.
fn generators(m: usize, n: usize) -> Vec<Word> {
    [format!("x^-{m}"), "y x y^-1".to_string(), "x y x^-1".to_string(), format!("y x^-1 y^-1 x y x^-1 y^-{n}")]
        .iter()
        .map(|t| Word::parse(t, 2).unwrap())
        .collect()
}

/// Images of `a₁, a₂, b₁, b₂` under the twist `(1, m; 0, 1)`.
fn twist_images(m: usize, n: usize) -> Vec<Word> {
    let e = (1 - n as i64) * m as i64;
    vec![sym("a1"), sym("a1^-1 a2 a1"), sym("a1^-1 b1"), sym(&format!("a1^-1 b2 a2^{e} a1"))]
}

#[test]
fn alpha_of_twist_images() {
    let alpha = AlphaSpec::standard(2);
    let gamma = |i: usize| Word::generator(2, i).unwrap();
    for m in 2..=4 {
        for n in 2..=4 {
            let images = twist_images(m, n);
            let values: Vec<Word> = images.iter().map(|w| alpha_eval(&alpha, w).unwrap()).collect();
            assert_eq!(values, vec![Word::identity(2), Word::identity(2), gamma(1), gamma(2)]);
            assert_eq!(modg_alpha_check(&alpha, &images).unwrap(), Some(Word::identity(2)));
        }
    }
    let identity: Vec<Word> = (1..=4).map(|i| Word::generator(4, i).unwrap()).collect();
    assert_eq!(modg_alpha_check(&alpha, &identity).unwrap(), Some(Word::identity(2)));
    assert!(alpha_eval(&alpha, &Word::x()).is_err());
}

/// These images agree with the action of `x ↦ x, y ↦ x^m y` on
/// homology, computed from the origami.
#[test]
fn twist_images_match_homology() {
    for m in 2..=4 {
        for n in 2..=4 {
            let o = Origami::l_origami(m, n).unwrap();
            let model = H1Model::new(&o).unwrap();
            let classes: Vec<Vec<i64>> = generators(m, n).iter().map(|g| model.class_of(&o, g).unwrap()).collect();
            let basis = IntMatrix::from_columns(4, &classes);
            let phi = F2Endo::horizontal_twist_lift(m as u64);
            let induced = induced_matrix(&o, &model, &phi, &basis).unwrap();
            let words = symplectic_action_matrix(&twist_images(m, n));
            assert_eq!(induced, words, "L({m},{n})");
            let block = block_form_check(&words).expect("block form");
            assert_eq!(block.to_rows(), vec![vec![-1, 0], vec![0, (1 - n as i64) * m as i64]]);
            assert!(charpoly_divides(IntMatrix2::new(1, m as i64, 0, 1), &words));
        }
    }
}
