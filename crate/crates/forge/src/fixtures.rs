//! The built-in fixture origamis and the fixture directory.

use std::env;
use std::path::{Path, PathBuf};

use origami_forge_core::origami::Origami;

/// Environment variable overriding the fixture directory.
pub const FIXTURES_ENV: &str = "ORIGAMI_FORGE_FIXTURES";

/// A named origami of the registry.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub origami: Origami,
}

/// All built-in fixtures: the Wollmilchsau, the 14-square origami, the
/// L-shaped origamis `L(m, n)` for `2 ≤ m, n ≤ 6` and the X-shaped
/// origamis `O(n)` for `1 ≤ n ≤ 6`.
pub fn registry() -> Vec<Fixture> {
    let mut out = vec![
        Fixture { name: "wollmilchsau".into(), origami: Origami::wollmilchsau() },
        Fixture { name: "o14".into(), origami: Origami::o14() },
    ];
    for m in 2..=6 {
        for n in 2..=6 {
            let origami = Origami::l_origami(m, n).expect("m, n ≥ 2");
            out.push(Fixture { name: format!("l{m}{n}"), origami });
        }
    }
    for n in 1..=6 {
        out.push(Fixture { name: format!("x{n}"), origami: Origami::x_origami(n).expect("n ≥ 1") });
    }
    out
}

/// Looks up a built-in fixture by name.
pub fn lookup(name: &str) -> Option<Origami> {
    registry().into_iter().find(|f| f.name == name).map(|f| f.origami)
}

/// The fixture directory: `$ORIGAMI_FORGE_FIXTURES`, or `fixtures/` at the
/// workspace root.
pub fn fixture_dir() -> PathBuf {
    match env::var_os(FIXTURES_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
    }
}

/// Resolves a file argument: the path itself if it exists, otherwise the
/// same name inside the fixture directory.
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() {
        return path.to_path_buf();
    }
    let candidate = fixture_dir().join(path);
    if candidate.exists() {
        candidate
    } else {
        path.to_path_buf()
    }
}
