//! Origami and word-data file formats and the shipped fixture files.

use std::fs;

use origami_forge::fixtures::{fixture_dir, lookup, registry};
use origami_forge::io::{format_origami, parse_origami, parse_words, read_origami, read_words};
use origami_forge::ForgeError;
use origami_forge_core::freegroup::{IntMatrix2, Word};
use origami_forge_core::homology::alpha_eval;
use origami_forge_core::origami::Origami;

#[test]
fn origami_format_roundtrip() {
    for f in registry() {
        let text = format_origami(&f.origami);
        assert_eq!(parse_origami(&text).unwrap(), f.origami, "{}", f.name);
    }
    let text = "# the Wollmilchsau\n\np2: (1 7 3 5)(2 6 4 8)  # upper neighbours\nsquares: 8\np1: (1 2 3 4)(5 6 7 8)\n";
    assert_eq!(parse_origami(text).unwrap(), Origami::wollmilchsau());
}

#[test]
fn origami_format_errors() {
    let e = parse_origami("squares: 2\np1: (1 2)\nfoo").unwrap_err();
    assert!(matches!(e, ForgeError::Parse { line: 3, .. }), "{e}");
    let e = parse_origami("squares: 2\np1: ()\np2: ()").unwrap_err();
    assert_eq!(e.kind(), "origami");
    let e = parse_origami("squares: two").unwrap_err();
    assert!(matches!(e, ForgeError::Parse { line: 1, .. }));
    assert!(parse_origami("p1: (1 2)\np2: (1 2)").is_err());
    let e = read_origami(&fixture_dir().join("does-not-exist.ori")).unwrap_err();
    assert_eq!(e.kind(), "io");
}

#[test]
fn shipped_fixture_files_match_the_registry() {
    let mut seen = 0;
    for entry in fs::read_dir(fixture_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("ori") {
            continue;
        }
        let name = path.file_stem().unwrap().to_str().unwrap().to_string();
        let expected = lookup(&name).unwrap_or_else(|| panic!("{name} is not a registry fixture"));
        assert_eq!(read_origami(&path).unwrap(), expected, "{name}");
        seen += 1;
    }
    assert!(seen >= 7);
}

#[test]
fn word_data_files() {
    let l = read_words(&fixture_dir().join("l_origami_2_2.words")).unwrap();
    assert_eq!(l.genus, 2);
    assert_eq!(l.maps(), vec!["f".to_string()]);
    assert_eq!(l.generator("a1").unwrap(), &Word::parse("x^-2", 2).unwrap());
    let images = l.images("f").unwrap();
    assert_eq!(l.text(&images[3]), "a1^-1 b2 a2^-2 a1");
    assert_eq!(l.derivatives["f"], IntMatrix2::new(1, 2, 0, 1));

    let flat = read_words(&fixture_dir().join("flat_surface.words")).unwrap();
    assert_eq!(flat.maps(), vec!["f".to_string(), "g".to_string()]);
    assert_eq!(flat.alpha_names(), vec!["A1", "A2", "A3", "A4"]);
    // α₁(g(a₁)) = γ₁.
    let g_a1 = &flat.images("g").unwrap()[0];
    assert_eq!(alpha_eval(&flat.alpha("A1").unwrap(), g_a1).unwrap(), Word::generator(2, 1).unwrap());
    // Unlisted generators are fixed by images and killed by alphas.
    assert_eq!(flat.images("f").unwrap()[0], flat.word("a1").unwrap());
    assert!(flat.alpha("A1").unwrap().images[2].is_identity());
    assert_eq!(flat.images("h").unwrap_err().kind(), "unknown_name");
}

#[test]
fn word_data_errors() {
    let cases = [
        ("gen a1 = x", 1),
        ("genus: 2\ngen c1 = x", 2),
        ("genus: 2\nimage f a1 = a3", 2),
        ("genus: 2\n\nderivative f = 1 2 3", 3),
        ("genus: 2\nsomething", 2),
        ("genus: 0", 1),
    ];
    for (text, line) in cases {
        match parse_words(text) {
            Err(ForgeError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
    assert!(parse_words("# nothing\n").is_err());
    let e = read_words(&fixture_dir().join("l22.ori")).unwrap_err();
    assert!(matches!(e, ForgeError::InFile { .. }));
    assert_eq!(e.kind(), "parse");
}
