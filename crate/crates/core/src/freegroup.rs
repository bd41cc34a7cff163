//! Reduced words in free groups of finite rank, conjugacy machinery,
//! horizontality tests, and endomorphisms of F₂ together with the
//! exponent-sum homomorphism β̂ : Aut(F₂) → GL₂(ℤ).
//!
//! Generators are numbered from 1.  In rank 2 generator 1 is written `x`
//! and generator 2 is written `y`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

/// Errors raised by word and automorphism arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeGroupError {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("every word is trivial but some target is not")]
    AllTrivial,
    #[error("matrix has determinant {det}, expected ±1")]
    NotUnimodular { det: i64 },
    #[error("generator images do not define an automorphism of F2")]
    NotAutomorphism,
    #[error("cannot parse word {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A single letter `g_i^{±1}`, stored as a signed generator index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(i32);

impl Letter {
    /// Letter for generator `generator` (1-based) with exponent `+1` when
    /// `positive` is set and `-1` otherwise.
    pub fn new(generator: usize, positive: bool) -> Letter {
        assert!(generator >= 1, "generator indices start at 1");
        let g = generator as i32;
        Letter(if positive { g } else { -g })
    }

    pub fn generator(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// The exponent, either `1` or `-1`.
    pub fn exponent(self) -> i32 {
        self.0.signum()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }
}

/// How generator names are read and written in the word text format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// `x`, `y` for generators 1 and 2, and `gK` for generator `K`.
    /// Printing uses `x`/`y` in rank 2 and `gK` otherwise.
    Standard,
    /// Symplectic alphabet of a genus-`genus` surface group: `aK` is
    /// generator `K` and `bK` is generator `genus + K`.
    Symplectic { genus: usize },
}

/// A freely reduced word in the free group of rank `rank`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

/// Words serialize as their text form.
#[cfg(feature = "serde")]
impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text(Alphabet::Standard))
    }
}

impl Word {
    pub fn identity(rank: usize) -> Word {
        Word { rank, letters: Vec::new() }
    }

    /// The generator `g_index` as a word.
    pub fn generator(rank: usize, index: usize) -> Result<Word, FreeGroupError> {
        Word::power(rank, index, 1)
    }

    /// The power `g_index^k`.
    pub fn power(rank: usize, index: usize, k: i64) -> Result<Word, FreeGroupError> {
        Word::reduce(rank, &[(index, k)])
    }

    /// The generator `x` of F₂.
    pub fn x() -> Word {
        Word { rank: 2, letters: vec![Letter::new(1, true)] }
    }

    /// The generator `y` of F₂.
    pub fn y() -> Word {
        Word { rank: 2, letters: vec![Letter::new(2, true)] }
    }

    /// Freely reduces a raw sequence of syllables `(generator, exponent)`.
    /// Exponents may be any integer; zero exponents are skipped.
    pub fn reduce(rank: usize, raw: &[(usize, i64)]) -> Result<Word, FreeGroupError> {
        let mut letters = Vec::new();
        for &(g, e) in raw {
            if g == 0 || g > rank {
                return Err(FreeGroupError::IndexOutOfRange { index: g, rank });
            }
            let l = Letter::new(g, e > 0);
            for _ in 0..e.unsigned_abs() {
                letters.push(l);
            }
        }
        Ok(Word::from_letters_unchecked(rank, letters))
    }

    /// Builds a word from letters, checking indices and reducing freely.
    pub fn from_letters<I>(rank: usize, letters: I) -> Result<Word, FreeGroupError>
    where
        I: IntoIterator<Item = Letter>,
    {
        let letters: Vec<Letter> = letters.into_iter().collect();
        if let Some(l) = letters.iter().find(|l| l.generator() > rank) {
            return Err(FreeGroupError::IndexOutOfRange { index: l.generator(), rank });
        }
        Ok(Word::from_letters_unchecked(rank, letters))
    }

    fn from_letters_unchecked(rank: usize, letters: Vec<Letter>) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { rank, letters: out }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &Word) -> Result<(), FreeGroupError> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(FreeGroupError::RankMismatch { left: self.rank, right: other.rank })
        }
    }

    /// The product `self · v`.
    pub fn mul(&self, v: &Word) -> Result<Word, FreeGroupError> {
        self.check_rank(v)?;
        let mut letters = self.letters.clone();
        for &l in &v.letters {
            if letters.last() == Some(&l.inverse()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Ok(Word { rank: self.rank, letters })
    }

    pub fn inv(&self) -> Word {
        Word { rank: self.rank, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// The conjugate `g · self · g⁻¹`.
    pub fn conj(&self, g: &Word) -> Result<Word, FreeGroupError> {
        g.mul(self)?.mul(&g.inv())
    }

    /// The power `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Component `i` is the exponent sum of generator `i + 1`.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for l in &self.letters {
            sums[l.generator() - 1] += l.exponent() as i64;
        }
        sums
    }

    /// Maximal runs of equal letters as `(generator, exponent)` pairs.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((g, e)) if *g == l.generator() => *e += l.exponent() as i64,
                _ => out.push((l.generator(), l.exponent() as i64)),
            }
        }
        out
    }

    /// Returns `(core, conjugator)` with `self = conjugator · core · conjugator⁻¹`
    /// and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let l = &self.letters;
        let mut i = 0;
        let mut j = l.len();
        while j > i + 1 && l[i] == l[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        (Word { rank: self.rank, letters: l[i..j].to_vec() }, Word { rank: self.rank, letters: l[..i].to_vec() })
    }

    /// Returns `g` with `v = g · self · g⁻¹`, or `None` when the words are
    /// not conjugate (or have different ranks).
    pub fn is_conjugate(&self, v: &Word) -> Option<Word> {
        if self.rank != v.rank {
            return None;
        }
        let (cu, a) = self.cyclic_reduce();
        let (cv, b) = v.cyclic_reduce();
        if cu.len() != cv.len() {
            return None;
        }
        let n = cu.len();
        if n == 0 {
            return Some(Word::identity(self.rank));
        }
        for k in 0..n {
            let rotated = cu.letters[k..].iter().chain(cu.letters[..k].iter());
            if rotated.eq(cv.letters.iter()) {
                // cv = s⁻¹ · cu · s with s the first k letters of cu.
                let s = Word { rank: self.rank, letters: cu.letters[..k].to_vec() };
                return Some(&(&b * &s.inv()) * &a.inv());
            }
        }
        None
    }

    /// The primitive root `r` with `self = r^k`, `k ≥ 1` (identity for the
    /// identity).  The centralizer of a non-trivial word is `⟨root⟩`.
    pub fn root(&self) -> Word {
        let (core, t) = self.cyclic_reduce();
        let n = core.len();
        for p in 1..=n {
            if n % p == 0 && (p..n).all(|i| core.letters[i] == core.letters[i - p]) {
                let r = Word { rank: self.rank, letters: core.letters[..p].to_vec() };
                return &(&t * &r) * &t.inv();
            }
        }
        Word::identity(self.rank)
    }

    /// Horizontal words are products of `x^c y x^d y⁻¹` (or of the mirror
    /// form `x^c y⁻¹ x^d y`): every `y`-syllable has exponent ±1, their signs
    /// alternate and sum to zero.  Pure powers of `x` count as horizontal.
    pub fn is_horizontal(&self) -> bool {
        if self.rank != 2 {
            return false;
        }
        let ys: Vec<i64> = self.syllables().into_iter().filter(|&(g, _)| g == 2).map(|(_, e)| e).collect();
        ys.iter().all(|e| e.abs() == 1) && ys.windows(2).all(|w| w[0] == -w[1]) && ys.iter().sum::<i64>() == 0
    }

    /// True iff some cyclic rotation of the cyclic reduction is horizontal.
    pub fn is_conjugate_horizontal(&self) -> bool {
        if self.rank != 2 {
            return false;
        }
        let (core, _) = self.cyclic_reduce();
        let l = &core.letters;
        let n = l.len();
        // Rotate to the start of a cyclic y-syllable; then the linear and
        // cyclic syllable structures agree.
        let start = (0..n).find(|&i| l[i].generator() == 2 && l[(i + n - 1) % n] != l[i]);
        match start {
            None => l.iter().all(|c| c.generator() == 1),
            Some(s) => {
                let rotated = Word { rank: 2, letters: l[s..].iter().chain(l[..s].iter()).copied().collect() };
                rotated.is_horizontal()
            }
        }
    }

    /// Applies the homomorphism `g_i ↦ images[i - 1]` to this word.
    pub fn substitute(&self, images: &[Word]) -> Result<Word, FreeGroupError> {
        if images.len() != self.rank {
            return Err(FreeGroupError::RankMismatch { left: self.rank, right: images.len() });
        }
        let target = images.first().map_or(0, |w| w.rank);
        let mut out = Word::identity(target);
        for l in &self.letters {
            let img = &images[l.generator() - 1];
            out = if l.is_positive() { out.mul(img)? } else { out.mul(&img.inv())? };
        }
        Ok(out)
    }

    /// Parses the word text format with the standard alphabet.
    pub fn parse(text: &str, rank: usize) -> Result<Word, FreeGroupError> {
        Word::parse_with(text, rank, Alphabet::Standard)
    }

    /// Parses space-separated tokens `name` or `name^k`; `1` (or an empty
    /// string) denotes the identity.
    pub fn parse_with(text: &str, rank: usize, alphabet: Alphabet) -> Result<Word, FreeGroupError> {
        let err = |reason: String| FreeGroupError::Parse { text: text.into(), reason };
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e.parse().map_err(|_| err(format!("bad exponent in {token:?}")))?;
                    (n, e)
                }
                None => (token, 1),
            };
            let index = generator_index(name, alphabet).ok_or_else(|| err(format!("unknown generator {name:?}")))?;
            raw.push((index, exp));
        }
        Word::reduce(rank, &raw)
    }

    /// Formats the word in the text format of `alphabet`.
    pub fn to_text(&self, alphabet: Alphabet) -> String {
        if self.is_identity() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .syllables()
            .into_iter()
            .map(|(g, e)| {
                let name = generator_name(g, self.rank, alphabet);
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join(" ")
    }
}

fn generator_index(name: &str, alphabet: Alphabet) -> Option<usize> {
    let numbered = |prefix: char| -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        let k: usize = rest.parse().ok()?;
        (k >= 1).then_some(k)
    };
    match alphabet {
        Alphabet::Standard => match name {
            "x" => Some(1),
            "y" => Some(2),
            _ => numbered('g'),
        },
        Alphabet::Symplectic { genus } => {
            if let Some(k) = numbered('a') {
                (k <= genus).then_some(k)
            } else {
                numbered('b').filter(|&k| k <= genus).map(|k| genus + k)
            }
        }
    }
}

fn generator_name(g: usize, rank: usize, alphabet: Alphabet) -> String {
    match alphabet {
        Alphabet::Standard if rank == 2 => (if g == 1 { "x" } else { "y" }).into(),
        Alphabet::Standard => format!("g{g}"),
        Alphabet::Symplectic { genus } if g <= genus => format!("a{g}"),
        Alphabet::Symplectic { genus } => format!("b{}", g - genus),
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(Alphabet::Standard))
    }
}

/// Group product; panics when the ranks differ (use [`Word::mul`] for a
/// checked product).
impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::mul(self, rhs).expect("rank mismatch in word product")
    }
}

/// Decides whether one `g` conjugates every `u_i` to `v_i`
/// (`v_i = g · u_i · g⁻¹`), returning such a `g`.
///
/// The first non-trivial `u_i` fixes `g` up to right multiplication by its
/// centralizer `⟨root(u_i)⟩`.  Candidates `g₀ · root^k` are scanned for `|k|`
/// up to a bound beyond which conjugates of the remaining words are longer
/// than their targets.
pub fn simultaneous_conjugacy(pairs: &[(Word, Word)]) -> Result<Option<Word>, FreeGroupError> {
    let Some((first_u, _)) = pairs.first() else {
        return Ok(None);
    };
    let rank = first_u.rank;
    for (u, v) in pairs {
        if u.rank != rank {
            return Err(FreeGroupError::RankMismatch { left: rank, right: u.rank });
        }
        if v.rank != rank {
            return Err(FreeGroupError::RankMismatch { left: rank, right: v.rank });
        }
    }
    let Some((u1, v1)) = pairs.iter().find(|(u, _)| !u.is_identity()) else {
        return if pairs.iter().all(|(_, v)| v.is_identity()) {
            Ok(Some(Word::identity(rank)))
        } else {
            Err(FreeGroupError::AllTrivial)
        };
    };
    let Some(g0) = u1.is_conjugate(v1) else {
        return Ok(None);
    };
    let r = u1.root();
    let max_u = pairs.iter().map(|(u, _)| u.len()).max().unwrap_or(0);
    let max_v = pairs.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let bound = (max_v + 2 * g0.len() + 2 * max_u + 4 * r.len() + 2) as i64;
    let works = |g: &Word| pairs.iter().all(|(u, v)| &u.conj(g).expect("ranks checked") == v);
    for k in 0..=bound {
        for k in if k == 0 { vec![0] } else { vec![k, -k] } {
            let g = &g0 * &r.pow(k);
            if works(&g) {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

/// A 2×2 integer matrix `(a, b; c, d)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IntMatrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2 { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> IntMatrix2 {
        IntMatrix2 { a, b, c, d }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    pub fn apply(&self, v: (i64, i64)) -> (i64, i64) {
        (self.a * v.0 + self.b * v.1, self.c * v.0 + self.d * v.1)
    }

    /// Coefficients `[c0, c1, 1]` of the characteristic polynomial
    /// `x² − tr·x + det`, lowest degree first.
    pub fn charpoly(&self) -> [i64; 3] {
        [self.det(), -self.trace(), 1]
    }

    /// Row-major entries.
    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

impl Mul for IntMatrix2 {
    type Output = IntMatrix2;

    fn mul(self, o: IntMatrix2) -> IntMatrix2 {
        IntMatrix2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.a, self.b, self.c, self.d)
    }
}

/// An endomorphism of F₂ = ⟨x, y⟩ given by the images of `x` and `y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Endo {
    image_x: Word,
    image_y: Word,
    is_automorphism: bool,
}

impl F2Endo {
    /// An endomorphism with the given generator images (not flagged as an
    /// automorphism).
    pub fn new(image_x: Word, image_y: Word) -> Result<F2Endo, FreeGroupError> {
        for w in [&image_x, &image_y] {
            if w.rank != 2 {
                return Err(FreeGroupError::RankMismatch { left: 2, right: w.rank });
            }
        }
        Ok(F2Endo { image_x, image_y, is_automorphism: false })
    }

    /// An automorphism with the given generator images.  Invertibility is
    /// certified by Nielsen's criterion: `(u, v)` is a basis of F₂ iff the
    /// commutator `[u, v]` is conjugate to `[x, y]^{±1}`.
    pub fn automorphism(image_x: Word, image_y: Word) -> Result<F2Endo, FreeGroupError> {
        let mut phi = F2Endo::new(image_x, image_y)?;
        let c = commutator(&phi.image_x, &phi.image_y);
        let base = commutator(&Word::x(), &Word::y());
        if base.is_conjugate(&c).is_none() && base.inv().is_conjugate(&c).is_none() {
            return Err(FreeGroupError::NotAutomorphism);
        }
        phi.is_automorphism = true;
        Ok(phi)
    }

    fn elementary(image_x: Word, image_y: Word) -> F2Endo {
        F2Endo { image_x, image_y, is_automorphism: true }
    }

    pub fn identity() -> F2Endo {
        F2Endo::elementary(Word::x(), Word::y())
    }

    /// `x ↦ y, y ↦ x`.
    pub fn swap() -> F2Endo {
        F2Endo::elementary(Word::y(), Word::x())
    }

    /// `x ↦ x, y ↦ x^q y`, with β̂ = (1, q; 0, 1).
    pub fn twist(q: i64) -> F2Endo {
        F2Endo::elementary(Word::x(), &Word::x().pow(q) * &Word::y())
    }

    /// `x ↦ x⁻¹, y ↦ y`.
    pub fn invert_x() -> F2Endo {
        F2Endo::elementary(Word::x().inv(), Word::y())
    }

    /// `x ↦ x, y ↦ y⁻¹`.
    pub fn invert_y() -> F2Endo {
        F2Endo::elementary(Word::x(), Word::y().inv())
    }

    /// The inner automorphism `w ↦ g · w · g⁻¹`.
    pub fn inner(g: &Word) -> Result<F2Endo, FreeGroupError> {
        Ok(F2Endo::elementary(Word::x().conj(g)?, Word::y().conj(g)?))
    }

    /// The lift `x ↦ x, y ↦ x^m y` of the horizontal multitwist with
    /// derivative (1, m; 0, 1).
    pub fn horizontal_twist_lift(m: u64) -> F2Endo {
        F2Endo::twist(m as i64)
    }

    pub fn image_x(&self) -> &Word {
        &self.image_x
    }

    pub fn image_y(&self) -> &Word {
        &self.image_y
    }

    pub fn is_automorphism(&self) -> bool {
        self.is_automorphism
    }

    /// Applies the endomorphism to a rank-2 word.
    pub fn apply(&self, w: &Word) -> Result<Word, FreeGroupError> {
        if w.rank != 2 {
            return Err(FreeGroupError::RankMismatch { left: 2, right: w.rank });
        }
        w.substitute(&[self.image_x.clone(), self.image_y.clone()])
    }

    /// The composition `self ∘ psi` (apply `psi` first).
    pub fn compose(&self, psi: &F2Endo) -> F2Endo {
        F2Endo {
            image_x: self.apply(&psi.image_x).expect("rank 2"),
            image_y: self.apply(&psi.image_y).expect("rank 2"),
            is_automorphism: self.is_automorphism && psi.is_automorphism,
        }
    }

    /// β̂(φ): the columns are the exponent-sum vectors of φ(x) and φ(y).
    pub fn beta_hat(&self) -> IntMatrix2 {
        let ex = self.image_x.exponent_sums();
        let ey = self.image_y.exponent_sums();
        IntMatrix2 { a: ex[0], b: ey[0], c: ex[1], d: ey[1] }
    }
}

/// The commutator `u v u⁻¹ v⁻¹`.
pub fn commutator(u: &Word, v: &Word) -> Word {
    &(&(u * v) * &u.inv()) * &v.inv()
}

/// An automorphism `φ` with `β̂(φ) = a`, built from the elementary
/// automorphisms `x ↦ x, y ↦ x^q y`, the swap and the two inversions.
///
/// The matrix is row-reduced to the identity by a Euclidean algorithm on
/// its first column (subtract the quotient multiple of row 2 from row 1,
/// then swap rows, until the lower-left entry vanishes), followed by sign
/// fixes and clearing of the upper-right entry.  `φ` composes the lifts of
/// the inverse row operations in order.
pub fn lift_matrix(a: IntMatrix2) -> Result<F2Endo, FreeGroupError> {
    let det = a.det();
    if det != 1 && det != -1 {
        return Err(FreeGroupError::NotUnimodular { det });
    }
    // Each recorded step is the lift of the inverse of the row operation.
    let mut steps: Vec<F2Endo> = Vec::new();
    let mut m = a;
    while m.c != 0 {
        let q = m.a.div_euclid(m.c);
        if q != 0 {
            m = IntMatrix2::new(1, -q, 0, 1) * m;
            steps.push(F2Endo::twist(q));
        }
        m = IntMatrix2::new(0, 1, 1, 0) * m;
        steps.push(F2Endo::swap());
    }
    if m.a == -1 {
        m = IntMatrix2::new(-1, 0, 0, 1) * m;
        steps.push(F2Endo::invert_x());
    }
    if m.d == -1 {
        m = IntMatrix2::new(1, 0, 0, -1) * m;
        steps.push(F2Endo::invert_y());
    }
    if m.b != 0 {
        let b = m.b;
        m = IntMatrix2::new(1, -b, 0, 1) * m;
        steps.push(F2Endo::twist(b));
    }
    debug_assert_eq!(m, IntMatrix2::IDENTITY);
    Ok(steps.iter().fold(F2Endo::identity(), |acc, s| acc.compose(s)))
}
