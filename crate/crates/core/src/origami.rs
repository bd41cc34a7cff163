//! Origamis (square-tiled surfaces) given by a pair of permutations
//! `(p1, p2)` = (right neighbour, upper neighbour) on the squares `1..=d`,
//! their cylinders, vertices and genus, the example origamis used
//! throughout the test suite, and the shear construction that turns a
//! rational direction `(p, q)` into the vertical direction of a new origami.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::freegroup::{IntMatrix2, Word};

/// Errors raised when building or analysing origamis.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrigamiError {
    #[error("image table is not a bijection of 1..={size}")]
    NotBijective { size: usize },
    #[error("permutations act on {left} and {right} points")]
    SizeMismatch { left: usize, right: usize },
    #[error("the permutations do not act transitively")]
    NotTransitive,
    #[error("origami needs at least one square")]
    Empty,
    #[error("d minus the number of vertices is odd (convention bug)")]
    ParityViolation,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("direction ({p}, {q}) is not primitive")]
    BadDirection { p: i64, q: i64 },
    #[error("cannot parse cycle notation: {0}")]
    Parse(String),
}

/// A permutation of `{1, …, d}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    /// `images[s - 1]` is the image of `s`.
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image table (`images[s - 1]` is the
    /// image of `s`).
    pub fn new(images: Vec<usize>) -> Result<Permutation, OrigamiError> {
        let d = images.len();
        let mut seen = vec![false; d + 1];
        for &i in &images {
            if i == 0 || i > d || seen[i] {
                return Err(OrigamiError::NotBijective { size: d });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(d: usize) -> Permutation {
        Permutation { images: (1..=d).collect() }
    }

    /// Builds a permutation of `{1, …, d}` from disjoint cycles; points not
    /// mentioned are fixed.
    pub fn from_cycles(d: usize, cycles: &[Vec<usize>]) -> Result<Permutation, OrigamiError> {
        let mut images: Vec<usize> = (1..=d).collect();
        let mut used = vec![false; d + 1];
        for cycle in cycles {
            for (k, &s) in cycle.iter().enumerate() {
                if s == 0 || s > d || used[s] {
                    return Err(OrigamiError::NotBijective { size: d });
                }
                used[s] = true;
                images[s - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse_cycles(d: usize, text: &str) -> Result<Permutation, OrigamiError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner =
                rest.strip_prefix('(').ok_or_else(|| OrigamiError::Parse(format!("expected '(' in {text:?}")))?;
            let close = inner.find(')').ok_or_else(|| OrigamiError::Parse(format!("unclosed cycle in {text:?}")))?;
            let cycle: Result<Vec<usize>, _> = inner[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect();
            let cycle = cycle.map_err(|_| OrigamiError::Parse(format!("bad entry in {text:?}")))?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = inner[close + 1..].trim_start();
        }
        Permutation::from_cycles(d, &cycles)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// The image of square `s` (1-based).
    pub fn apply(&self, s: usize) -> usize {
        self.images[s - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &t) in self.images.iter().enumerate() {
            inv[t - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Mapping notation: `(self ∘ other)(s) = self(other(s))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&s| self.apply(s)).collect() }
    }

    /// The `k`-th power for any integer `k`.
    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.size());
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    /// Orbits, each listed in cycle order starting at its smallest point,
    /// sorted by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let d = self.size();
        let mut seen = vec![false; d + 1];
        let mut out = Vec::new();
        for s in 1..=d {
            if seen[s] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                orbit.push(t);
                t = self.apply(t);
            }
            out.push(orbit);
        }
        out
    }

    /// Length of the cycle through `s`.
    pub fn cycle_length(&self, s: usize) -> usize {
        let mut n = 1;
        let mut t = self.apply(s);
        while t != s {
            t = self.apply(t);
            n += 1;
        }
        n
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for orbit in self.orbits().into_iter().filter(|o| o.len() > 1) {
            any = true;
            let parts: Vec<String> = orbit.iter().map(|s| format!("{s}")).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// A horizontal cylinder: an orbit of `p1`, in `p1` order starting at the
/// smallest square.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Cylinder {
    pub squares: Vec<usize>,
}

impl Cylinder {
    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }
}

/// A closed curve given by a start square and a word of unit steps
/// (`x` = one square right, `y` = one square up).
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OrigamiCurve {
    pub start: usize,
    pub word: Word,
}

impl OrigamiCurve {
    pub fn new(start: usize, word: Word) -> OrigamiCurve {
        OrigamiCurve { start, word }
    }
}

impl fmt::Display for OrigamiCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.start, self.word)
    }
}

/// A connected origami.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Origami {
    p1: Permutation,
    p2: Permutation,
}

impl Origami {
    /// Validates `(p1, p2)`: equal sizes, at least one square, and a
    /// transitive action.
    pub fn new(p1: Permutation, p2: Permutation) -> Result<Origami, OrigamiError> {
        if p1.size() != p2.size() {
            return Err(OrigamiError::SizeMismatch { left: p1.size(), right: p2.size() });
        }
        let d = p1.size();
        if d == 0 {
            return Err(OrigamiError::Empty);
        }
        let mut seen = vec![false; d + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(s) = stack.pop() {
            for t in [p1.apply(s), p2.apply(s)] {
                if !seen[t] {
                    seen[t] = true;
                    count += 1;
                    stack.push(t);
                }
            }
        }
        if count != d {
            return Err(OrigamiError::NotTransitive);
        }
        Ok(Origami { p1, p2 })
    }

    /// Builds an origami from image tables of `p1` and `p2`.
    pub fn from_images(p1: Vec<usize>, p2: Vec<usize>) -> Result<Origami, OrigamiError> {
        Origami::new(Permutation::new(p1)?, Permutation::new(p2)?)
    }

    /// Builds an origami with `d` squares from cycle lists.
    pub fn from_cycles(d: usize, p1: &[Vec<usize>], p2: &[Vec<usize>]) -> Result<Origami, OrigamiError> {
        Origami::new(Permutation::from_cycles(d, p1)?, Permutation::from_cycles(d, p2)?)
    }

    /// Number of squares.
    pub fn d(&self) -> usize {
        self.p1.size()
    }

    pub fn p1(&self) -> &Permutation {
        &self.p1
    }

    pub fn p2(&self) -> &Permutation {
        &self.p2
    }

    /// The origami with `p1` and `p2` exchanged (mirror in the diagonal):
    /// vertical data of `self` becomes horizontal data of the transpose.
    pub fn transpose(&self) -> Origami {
        Origami { p1: self.p2.clone(), p2: self.p1.clone() }
    }

    /// The horizontal cylinders, sorted by smallest square.
    pub fn cylinders(&self) -> Vec<Cylinder> {
        self.p1.orbits().into_iter().map(|squares| Cylinder { squares }).collect()
    }

    /// Index (0-based) of the cylinder containing each square; entry `s - 1`
    /// belongs to square `s`.
    pub fn cylinder_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.d()];
        for (i, c) in self.cylinders().iter().enumerate() {
            for &s in &c.squares {
                idx[s - 1] = i;
            }
        }
        idx
    }

    /// The permutation `p2 ∘ p1 ∘ p2⁻¹ ∘ p1⁻¹` whose orbits are the vertices
    /// (a square is identified with its lower-left corner).
    pub fn commutator(&self) -> Permutation {
        self.p2.compose(&self.p1).compose(&self.p2.inverse()).compose(&self.p1.inverse())
    }

    /// Vertex orbits in cycle order of the commutator, sorted by smallest
    /// square.
    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        self.commutator().orbits()
    }

    /// `g = (d − #vertices)/2 + 1`.
    pub fn genus(&self) -> Result<usize, OrigamiError> {
        let v = self.vertex_orbits().len();
        let d = self.d();
        if v > d + 2 || !(d + 2 - v).is_multiple_of(2) {
            return Err(OrigamiError::ParityViolation);
        }
        Ok((d + 2 - v) / 2)
    }

    /// `m = lcm` of the cylinder lengths together with the derivative
    /// `(1, m; 0, 1)` of the horizontal multitwist.
    pub fn horizontal_multiplier(&self) -> (u64, IntMatrix2) {
        let m = self.cylinders().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)));
        (m, IntMatrix2::new(1, m as i64, 0, 1))
    }

    /// `m = lcm` of the vertical cylinder lengths (orbits of `p2`).
    pub fn vertical_multiplier(&self) -> u64 {
        self.transpose().horizontal_multiplier().0
    }

    /// The square reached from `s` by one step along `letter` (`x` acts by
    /// `p1`, `y` by `p2`, inverse letters by the inverse permutations).
    pub fn step(&self, s: usize, generator: usize, positive: bool) -> usize {
        let p = if generator == 1 { &self.p1 } else { &self.p2 };
        if positive {
            p.apply(s)
        } else {
            p.images.iter().position(|&t| t == s).expect("bijective") + 1
        }
    }

    /// The squares visited by a curve, starting with the start square.
    pub fn trace_curve(&self, curve: &OrigamiCurve) -> Vec<usize> {
        let inv1 = self.p1.inverse();
        let inv2 = self.p2.inverse();
        let mut s = curve.start;
        let mut out = vec![s];
        for l in curve.word.letters() {
            s = match (l.generator(), l.is_positive()) {
                (1, true) => self.p1.apply(s),
                (1, false) => inv1.apply(s),
                (_, true) => self.p2.apply(s),
                (_, false) => inv2.apply(s),
            };
            out.push(s);
        }
        out
    }

    /// True iff the curve returns to its start square.
    pub fn is_closed(&self, curve: &OrigamiCurve) -> bool {
        self.trace_curve(curve).last() == Some(&curve.start)
    }

    /// The origami whose squares are the parallelograms of direction
    /// `(p, q)` and an affine change `g` with derivative
    /// `(1/q, p/q; 0, 1)` mapping it onto `self`.
    ///
    /// The direction is first normalised to `q ≥ 0`.  For `q = 0` the
    /// direction is horizontal and `self` is returned with the identity
    /// change.  Otherwise square `(s, j)` (`s ∈ 1..=d`, `j ∈ 0..q`) is the
    /// parallelogram whose lower side is the `j`-th of `q` equal pieces of
    /// the lower side of `s`; it is numbered `(s − 1)·q + j + 1`.  Its right
    /// neighbour is `(s, j + 1)` or, after the last slice, `(p1(s), 0)`.  Its
    /// upper side is slice `(j + p) mod q` of the upper side of
    /// `p1^k(s)` with `k = ⌊(j + p)/q⌋`, so its upper neighbour is
    /// `(p2(p1^k(s)), (j + p) mod q)`.
    pub fn shear(&self, p: i64, q: i64) -> Result<(Origami, AffineChange), OrigamiError> {
        if p.gcd(&q) != 1 {
            return Err(OrigamiError::BadDirection { p, q });
        }
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        if q == 0 {
            return Ok((self.clone(), AffineChange::identity()));
        }
        let d = self.d();
        let qu = q as usize;
        let index = |s: usize, j: usize| (s - 1) * qu + j + 1;
        let mut p1 = vec![0; d * qu];
        let mut p2 = vec![0; d * qu];
        for s in 1..=d {
            for j in 0..qu {
                p1[index(s, j) - 1] = if j + 1 < qu { index(s, j + 1) } else { index(self.p1.apply(s), 0) };
                let shifted = j as i64 + p;
                let k = shifted.div_euclid(q);
                let slice = shifted.rem_euclid(q) as usize;
                let above = self.p2.apply(self.p1.pow(k).apply(s));
                p2[index(s, j) - 1] = index(above, slice);
            }
        }
        let sheared = Origami::from_images(p1, p2)?;
        Ok((sheared, AffineChange::shear(p, q)))
    }

    /// The Wollmilchsau: `p1 = (1 2 3 4)(5 6 7 8)`, `p2 = (1 7 3 5)(2 6 4 8)`.
    pub fn wollmilchsau() -> Origami {
        Origami::from_cycles(8, &[vec![1, 2, 3, 4], vec![5, 6, 7, 8]], &[vec![1, 7, 3, 5], vec![2, 6, 4, 8]])
            .expect("valid fixture")
    }

    /// The genus-4 origami with 14 squares and cylinders of lengths 4, 3, 7.
    pub fn o14() -> Origami {
        Origami::from_images(
            vec![2, 3, 4, 1, 6, 7, 5, 9, 10, 11, 12, 13, 14, 8],
            vec![13, 14, 11, 9, 8, 10, 12, 5, 3, 4, 1, 2, 6, 7],
        )
        .expect("valid fixture")
    }

    /// The L-shaped origami `L(m, n)` with `m + n − 1` squares:
    /// `p1 = (1 … m)`, `p2 = (1 m+1 … m+n−1)`.
    pub fn l_origami(m: usize, n: usize) -> Result<Origami, OrigamiError> {
        if m < 2 || n < 2 {
            return Err(OrigamiError::BadParameters(format!("L({m},{n}) needs m, n ≥ 2")));
        }
        let d = m + n - 1;
        let column: Vec<usize> = core::iter::once(1).chain(m + 1..=d).collect();
        Origami::from_cycles(d, &[(1..=m).collect()], &[column])
    }

    /// The X-shaped origami `O(n)` with `2n` squares in one horizontal
    /// cylinder: `p1 = (1 … 2n)`, `p2 = (1 2)(3 4)…(2n−1 2n)`.
    pub fn x_origami(n: usize) -> Result<Origami, OrigamiError> {
        if n < 1 {
            return Err(OrigamiError::BadParameters("O(n) needs n ≥ 1".into()));
        }
        let pairs: Vec<Vec<usize>> = (1..=n).map(|i| vec![2 * i - 1, 2 * i]).collect();
        Origami::from_cycles(2 * n, &[(1..=2 * n).collect()], &pairs)
    }
}

/// An exact rational 2×2 matrix recording the derivative of an affine map.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AffineChange {
    /// Row-major entries.
    pub entries: [Ratio<i64>; 4],
}

impl AffineChange {
    pub fn identity() -> AffineChange {
        AffineChange::from_int(IntMatrix2::IDENTITY)
    }

    /// The derivative `(1/q, p/q; 0, 1)` of the shear to direction `(p, q)`.
    pub fn shear(p: i64, q: i64) -> AffineChange {
        AffineChange { entries: [Ratio::new(1, q), Ratio::new(p, q), Ratio::from_integer(0), Ratio::from_integer(1)] }
    }

    pub fn from_int(m: IntMatrix2) -> AffineChange {
        AffineChange { entries: m.entries().map(Ratio::from_integer) }
    }

    pub fn mul(&self, o: &AffineChange) -> AffineChange {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = o.entries;
        AffineChange { entries: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h] }
    }

    pub fn det(&self) -> Ratio<i64> {
        let [a, b, c, d] = self.entries;
        a * d - b * c
    }

    /// The inverse matrix (the determinant must be non-zero).
    pub fn inverse(&self) -> AffineChange {
        let [a, b, c, d] = self.entries;
        let det = self.det();
        AffineChange { entries: [d / det, -b / det, -c / det, a / det] }
    }

    /// The integer matrix, when every entry is an integer.
    pub fn to_int(&self) -> Option<IntMatrix2> {
        let e = self.entries;
        if e.iter().all(|r| r.is_integer()) {
            Some(IntMatrix2::new(e[0].to_integer(), e[1].to_integer(), e[2].to_integer(), e[3].to_integer()))
        } else {
            None
        }
    }

    /// Conjugates `m` by this change: `self · m · self⁻¹`.
    pub fn conjugate(&self, m: IntMatrix2) -> AffineChange {
        self.mul(&AffineChange::from_int(m)).mul(&self.inverse())
    }
}

impl fmt::Display for AffineChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "({a},{b};{c},{d})")
    }
}
