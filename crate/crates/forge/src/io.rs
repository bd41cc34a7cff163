//! Text formats: origami files (`.ori`) and word-data files (`.words`).
//!
//! An origami file has the lines
//!
//! ```text
//! # comment
//! squares: 8
//! p1: (1 2 3 4)(5 6 7 8)
//! p2: (1 7 3 5)(2 6 4 8)
//! ```
//!
//! in any order; `#` starts a comment and blank lines are ignored.
//!
//! A word-data file records words on a surface of genus `g` in the
//! symplectic alphabet `a1…ag, b1…bg`:
//!
//! ```text
//! genus: 2
//! gen a1 = x^-2                 # a1 as a loop in the origami (x, y words)
//! image f b1 = b1 a1^-1         # f_*(b1)
//! alpha A4 b1 = g1              # α(b1) over γ1…γg written g1…gg
//! derivative f = 1 2 0 1        # der(f) = (1,2;0,1)
//! ```
//!
//! Generators missing from an `image` block map to themselves; generators
//! missing from an `alpha` block map to the identity.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use origami_forge_core::freegroup::{Alphabet, IntMatrix2, Word};
use origami_forge_core::homology::AlphaSpec;
use origami_forge_core::origami::{Origami, Permutation};

use crate::ForgeError;

fn parse_error(line: usize, message: impl Into<String>) -> ForgeError {
    ForgeError::Parse { line, message: message.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Parses the origami file format.
pub fn parse_origami(text: &str) -> Result<Origami, ForgeError> {
    let mut squares: Option<usize> = None;
    let mut p1: Option<(usize, String)> = None;
    let mut p2: Option<(usize, String)> = None;
    for (n, line) in content_lines(text) {
        let (key, value) = line.split_once(':').ok_or_else(|| parse_error(n, "expected `key: value`"))?;
        let value = value.trim().to_string();
        let slot = match key.trim() {
            "squares" => {
                squares = Some(value.parse().map_err(|_| parse_error(n, "bad square count"))?);
                continue;
            }
            "p1" => &mut p1,
            "p2" => &mut p2,
            other => return Err(parse_error(n, format!("unknown key {other:?}"))),
        };
        if slot.is_some() {
            return Err(parse_error(n, format!("duplicate key {:?}", key.trim())));
        }
        *slot = Some((n, value));
    }
    let d = squares.ok_or_else(|| parse_error(0, "missing `squares:` line"))?;
    let perm = |entry: Option<(usize, String)>, name: &str| -> Result<Permutation, ForgeError> {
        let (n, text) = entry.ok_or_else(|| parse_error(0, format!("missing `{name}:` line")))?;
        Permutation::parse_cycles(d, &text).map_err(|e| parse_error(n, e.to_string()))
    };
    let (p1, p2) = (perm(p1, "p1")?, perm(p2, "p2")?);
    Ok(Origami::new(p1, p2)?)
}

/// Formats an origami in the origami file format.
pub fn format_origami(o: &Origami) -> String {
    format!("squares: {}\np1: {}\np2: {}\n", o.d(), o.p1(), o.p2())
}

/// Reads an origami file.
pub fn read_origami(path: &Path) -> Result<Origami, ForgeError> {
    let text = fs::read_to_string(path)
        .map_err(|e| ForgeError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_origami(&text).map_err(|e| e.in_file(path))
}

/// Contents of a word-data file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordData {
    pub genus: usize,
    /// Symplectic generators as words in `x`, `y`.
    pub generators: BTreeMap<String, Word>,
    images: BTreeMap<String, BTreeMap<usize, Word>>,
    alphas: BTreeMap<String, BTreeMap<usize, Word>>,
    pub derivatives: BTreeMap<String, IntMatrix2>,
}

impl WordData {
    fn alphabet(&self) -> Alphabet {
        Alphabet::Symplectic { genus: self.genus }
    }

    /// Names of the maps with `image` lines.
    pub fn maps(&self) -> Vec<String> {
        self.images.keys().cloned().collect()
    }

    /// Names of the homomorphisms with `alpha` lines.
    pub fn alpha_names(&self) -> Vec<String> {
        self.alphas.keys().cloned().collect()
    }

    /// `φ(a1)…φ(ag), φ(b1)…φ(bg)` for the map `name`.
    pub fn images(&self, name: &str) -> Result<Vec<Word>, ForgeError> {
        let table = self.images.get(name).ok_or_else(|| ForgeError::UnknownName(name.into()))?;
        let rank = 2 * self.genus;
        (1..=rank)
            .map(|i| match table.get(&i) {
                Some(w) => Ok(w.clone()),
                None => Ok(Word::generator(rank, i)?),
            })
            .collect()
    }

    /// The homomorphism `name`.
    pub fn alpha(&self, name: &str) -> Result<AlphaSpec, ForgeError> {
        let table = self.alphas.get(name).ok_or_else(|| ForgeError::UnknownName(name.into()))?;
        let images = (1..=2 * self.genus).map(|i| table.get(&i).cloned().unwrap_or_else(|| Word::identity(self.genus)));
        Ok(AlphaSpec::new(self.genus, images.collect())?)
    }

    /// The symplectic generator `name` as a word in `x`, `y`.
    pub fn generator(&self, name: &str) -> Result<&Word, ForgeError> {
        self.generators.get(name).ok_or_else(|| ForgeError::UnknownName(name.into()))
    }

    /// Formats a word over the symplectic alphabet.
    pub fn text(&self, w: &Word) -> String {
        w.to_text(self.alphabet())
    }

    /// Parses a word over the symplectic alphabet.
    pub fn word(&self, text: &str) -> Result<Word, ForgeError> {
        Ok(Word::parse_with(text, 2 * self.genus, self.alphabet())?)
    }
}

/// Index (1-based) of a symplectic generator name.
fn symplectic_index(name: &str, genus: usize) -> Option<usize> {
    let w = Word::parse_with(name, 2 * genus, Alphabet::Symplectic { genus }).ok()?;
    match w.letters() {
        [l] if l.is_positive() => Some(l.generator()),
        _ => None,
    }
}

/// Parses the word-data format.
pub fn parse_words(text: &str) -> Result<WordData, ForgeError> {
    let mut data = WordData {
        genus: 0,
        generators: BTreeMap::new(),
        images: BTreeMap::new(),
        alphas: BTreeMap::new(),
        derivatives: BTreeMap::new(),
    };
    for (n, line) in content_lines(text) {
        if let Some(g) = line.strip_prefix("genus:") {
            data.genus = g.trim().parse().map_err(|_| parse_error(n, "bad genus"))?;
            if data.genus == 0 {
                return Err(parse_error(n, "genus must be positive"));
            }
            continue;
        }
        if data.genus == 0 {
            return Err(parse_error(n, "`genus:` must come first"));
        }
        let g = data.genus;
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| parse_error(n, "expected `=`"))?;
        let lhs: Vec<&str> = lhs.split_whitespace().collect();
        let rhs = rhs.trim();
        let generator =
            |name: &str| symplectic_index(name, g).ok_or_else(|| parse_error(n, format!("unknown generator {name:?}")));
        let word_err = |e: origami_forge_core::freegroup::FreeGroupError| parse_error(n, e.to_string());
        match lhs.as_slice() {
            ["gen", name] => {
                generator(name)?;
                let w = Word::parse(rhs, 2).map_err(word_err)?;
                data.generators.insert((*name).to_string(), w);
            }
            ["image", map, name] => {
                let i = generator(name)?;
                let w = Word::parse_with(rhs, 2 * g, Alphabet::Symplectic { genus: g }).map_err(word_err)?;
                data.images.entry((*map).to_string()).or_default().insert(i, w);
            }
            ["alpha", alpha, name] => {
                let i = generator(name)?;
                let w = Word::parse(rhs, g).map_err(word_err)?;
                data.alphas.entry((*alpha).to_string()).or_default().insert(i, w);
            }
            ["derivative", map] => {
                let e: Result<Vec<i64>, _> = rhs.split_whitespace().map(str::parse).collect();
                match e.map_err(|_| parse_error(n, "bad matrix entry"))?.as_slice() {
                    [a, b, c, d] => {
                        data.derivatives.insert((*map).to_string(), IntMatrix2::new(*a, *b, *c, *d));
                    }
                    _ => return Err(parse_error(n, "a derivative needs four entries")),
                }
            }
            _ => return Err(parse_error(n, "unknown line")),
        }
    }
    if data.genus == 0 {
        return Err(parse_error(0, "missing `genus:` line"));
    }
    Ok(data)
}

/// Reads a word-data file.
pub fn read_words(path: &Path) -> Result<WordData, ForgeError> {
    let text = fs::read_to_string(path)
        .map_err(|e| ForgeError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_words(&text).map_err(|e| e.in_file(path))
}
