//! Cellular homology of the closed surface of an origami and the
//! homological certificates built on it.
//!
//! The cell structure has one vertex per vertex orbit, two edges per
//! square (`h_s`, the bottom edge of `s`, and `v_s`, its left edge) and one
//! face per square, with
//! `∂ s = h_s + v_{p1 s} − h_{p2 s} − v_s`, `∂ h_s = [p1 s] − [s]` and
//! `∂ v_s = [p2 s] − [s]`, where `[s]` is the vertex at the lower-left
//! corner of `s`.  Edge `h_s` has index `s − 1`, edge `v_s` index
//! `d + s − 1`.
//!
//! Intersection numbers are computed against the dual cell structure
//! (square centers, dual edges `X_s` from `s` to `p1 s` and `Y_s` from `s`
//! to `p2 s`).  A primal cycle is moved to a homologous dual cycle by
//! replacing each edge with the dual path through the centers of its end
//! squares, joined around every vertex by the loops `x⁻¹y⁻¹xy`.  The sign
//! convention is the one in which a horizontal curve traversed leftwards
//! meets an upward vertical curve with intersection number `+1`, so that
//! `î(x⁻ᵐ, xyx⁻¹) = 1` on the L-shaped origamis.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::freegroup::{simultaneous_conjugacy, Alphabet, F2Endo, FreeGroupError, IntMatrix2, Word};
use crate::hss::{find_hss, HssError};
use crate::linalg::{inverse_unimodular, poly_divides, rank_mod2, right_inverse, smith, IntMatrix};
use crate::origami::{Origami, OrigamiCurve, OrigamiError};
use crate::subgroup::{CosetAction, SubgroupError};

/// Errors raised by homology computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("boundary maps do not compose to zero")]
    ConventionViolation,
    #[error("first homology has torsion or the wrong rank")]
    Torsion,
    #[error("word does not describe a closed curve")]
    NotClosed,
    #[error("word does not lie in the subgroup")]
    NotInSubgroup,
    #[error("classes do not pairwise intersect trivially")]
    NotLagrangian,
    #[error("classes do not span a direct summand")]
    NotPrimitive,
    #[error("automorphism does not stabilize the subgroup up to conjugacy")]
    DoesNotStabilize,
    #[error("matrix is not invertible over the integers")]
    NotUnimodular,
    #[error("affine change of coordinates is not integral")]
    NotIntegral,
    #[error("vector has length {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error(transparent)]
    Origami(#[from] OrigamiError),
    #[error(transparent)]
    Hss(#[from] HssError),
}

/// The cell complex of an origami surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    pub d: usize,
    /// Vertex orbits (orbits of the commutator permutation).
    pub vertices: Vec<Vec<usize>>,
    /// Index of the vertex at the lower-left corner of square `s`
    /// (position `s − 1`).
    pub vertex_of: Vec<usize>,
    /// `∂₁`: vertices × edges.
    pub boundary1: IntMatrix,
    /// `∂₂`: edges × faces.
    pub boundary2: IntMatrix,
}

impl CellComplex {
    pub fn new(o: &Origami) -> Result<CellComplex, HomologyError> {
        let d = o.d();
        let vertices = o.vertex_orbits();
        let mut vertex_of = vec![0; d];
        for (k, orbit) in vertices.iter().enumerate() {
            for &s in orbit {
                vertex_of[s - 1] = k;
            }
        }
        let (p1, p2) = (o.p1(), o.p2());
        let mut boundary1 = IntMatrix::zeros(vertices.len(), 2 * d);
        let mut boundary2 = IntMatrix::zeros(2 * d, d);
        for s in 1..=d {
            let (h, v) = (s - 1, d + s - 1);
            boundary1[(vertex_of[p1.apply(s) - 1], h)] += 1;
            boundary1[(vertex_of[s - 1], h)] -= 1;
            boundary1[(vertex_of[p2.apply(s) - 1], v)] += 1;
            boundary1[(vertex_of[s - 1], v)] -= 1;
            boundary2[(h, s - 1)] += 1;
            boundary2[(d + p1.apply(s) - 1, s - 1)] += 1;
            boundary2[(p2.apply(s) - 1, s - 1)] -= 1;
            boundary2[(v, s - 1)] -= 1;
        }
        let complex = CellComplex { d, vertices, vertex_of, boundary1, boundary2 };
        if !complex.boundary1.mul(&complex.boundary2).is_zero() {
            return Err(HomologyError::ConventionViolation);
        }
        Ok(complex)
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - 2 * self.d as i64 + self.d as i64
    }
}

/// The edge chain of the path that starts at the lower-left corner of
/// `start` and follows `word` (`x` along bottom edges, `y` along left
/// edges).  Returns the chain and the final square.
pub fn edge_chain(o: &Origami, start: usize, word: &Word) -> (Vec<i64>, usize) {
    let d = o.d();
    let mut chain = vec![0; 2 * d];
    let mut s = start;
    for l in word.letters() {
        let (generator, positive) = (l.generator(), l.is_positive());
        if positive {
            let offset = if generator == 1 { 0 } else { d };
            chain[offset + s - 1] += 1;
            s = o.step(s, generator, true);
        } else {
            s = o.step(s, generator, false);
            let offset = if generator == 1 { 0 } else { d };
            chain[offset + s - 1] -= 1;
        }
    }
    (chain, s)
}

/// The dual chain (in `X_s`, `Y_s` coordinates) of the center-to-center
/// path from `start` along `word`.  Returns the chain and the final square.
pub fn dual_chain(o: &Origami, start: usize, word: &Word) -> (Vec<i64>, usize) {
    // The dual edges are indexed exactly like the primal ones.
    edge_chain(o, start, word)
}

/// `H₁(X, ℤ) ≅ ℤ^{2g}` with an explicit basis, coordinate map and
/// intersection form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Model {
    pub complex: CellComplex,
    pub genus: usize,
    /// Basis cycles (edge chains), one per column: `2d × 2g`.
    pub basis: IntMatrix,
    /// Coordinates of cycles: `2g × 2d`; `coordinates · basis = I` and
    /// boundaries map to zero.
    pub coordinates: IntMatrix,
    /// Intersection numbers of basis cycles.
    pub intersection: IntMatrix,
    /// `pairing[e][f]`: contribution of primal edge `e` against dual edge
    /// `f` to an intersection number.
    pairing: IntMatrix,
    /// Primal edge chains to homologous dual chains: `2d × 2d`.
    to_dual: IntMatrix,
}

impl H1Model {
    pub fn new(o: &Origami) -> Result<H1Model, HomologyError> {
        let complex = CellComplex::new(o)?;
        let d = o.d();
        let genus = o.genus()?;
        let s1 = smith(&complex.boundary1);
        let r = s1.rank;
        let kernel = s1.v.submatrix(0, 2 * d, r, 2 * d);
        let v_inv_tail = s1.v_inv.submatrix(r, 2 * d, 0, 2 * d);
        let c = v_inv_tail.mul(&complex.boundary2);
        let sc = smith(&c);
        let rb = sc.rank;
        if !sc.unit_invariants() || kernel.cols() - rb != 2 * genus {
            return Err(HomologyError::Torsion);
        }
        let k = kernel.cols();
        let basis = kernel.mul(&sc.u_inv.submatrix(0, k, rb, k));
        let coordinates = sc.u.mul(&v_inv_tail).submatrix(rb, k, 0, 2 * d);
        let (pairing, to_dual) = dual_data(o, &complex);
        let mut model = H1Model {
            complex,
            genus,
            basis,
            coordinates,
            intersection: IntMatrix::zeros(2 * genus, 2 * genus),
            pairing,
            to_dual,
        };
        let cols = model.basis.columns();
        for i in 0..2 * genus {
            for j in 0..2 * genus {
                model.intersection[(i, j)] = model.intersect_chains(&cols[i], &cols[j]);
            }
        }
        Ok(model)
    }

    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    /// Coordinates of an edge cycle.
    pub fn class_of_chain(&self, chain: &[i64]) -> Result<Vec<i64>, HomologyError> {
        if chain.len() != 2 * self.complex.d {
            return Err(HomologyError::Dimension { expected: 2 * self.complex.d, found: chain.len() });
        }
        if self.complex.boundary1.mul_vec(chain).iter().any(|&x| x != 0) {
            return Err(HomologyError::NotClosed);
        }
        Ok(self.coordinates.mul_vec(chain))
    }

    /// The class of a closed curve.
    pub fn class_of_curve(&self, o: &Origami, curve: &OrigamiCurve) -> Result<Vec<i64>, HomologyError> {
        let (chain, end) = edge_chain(o, curve.start, &curve.word);
        if end != curve.start {
            return Err(HomologyError::NotClosed);
        }
        self.class_of_chain(&chain)
    }

    /// The class of an element of `H` (a loop at base square 1).
    pub fn class_of(&self, o: &Origami, w: &Word) -> Result<Vec<i64>, HomologyError> {
        if !CosetAction::new(o).contains(w) {
            return Err(HomologyError::NotInSubgroup);
        }
        self.class_of_curve(o, &OrigamiCurve::new(1, w.clone()))
    }

    /// The basis cycle representing a coordinate vector.
    pub fn cycle_of(&self, class: &[i64]) -> Vec<i64> {
        self.basis.mul_vec(class)
    }

    /// Intersection number of two edge cycles.
    pub fn intersect_chains(&self, a: &[i64], b: &[i64]) -> i64 {
        let dual = self.to_dual.mul_vec(b);
        let pa = self.pairing.transpose().mul_vec(a);
        pa.iter().zip(&dual).map(|(x, y)| x * y).sum()
    }

    /// Intersection number of two classes in coordinates.
    pub fn intersect(&self, a: &[i64], b: &[i64]) -> i64 {
        let ib = self.intersection.mul_vec(b);
        a.iter().zip(&ib).map(|(x, y)| x * y).sum()
    }
}

/// The pairing of primal edges with dual edges and the primal-to-dual
/// transfer matrix.
fn dual_data(o: &Origami, complex: &CellComplex) -> (IntMatrix, IntMatrix) {
    let d = o.d();
    let (p1, p2) = (o.p1(), o.p2());
    // Dual edge Y_s crosses h_{p2 s} (upwards across a rightward edge);
    // X_s crosses v_{p1 s} (rightwards across an upward edge).
    let mut pairing = IntMatrix::zeros(2 * d, 2 * d);
    for s in 1..=d {
        pairing[(p2.apply(s) - 1, d + s - 1)] -= 1;
        pairing[(d + p1.apply(s) - 1, s - 1)] += 1;
    }
    // walk[u]: dual path from the reference square of u's vertex to u.
    let loop_word = Word::reduce(2, &[(1, -1), (2, -1), (1, 1), (2, 1)]).expect("rank 2");
    let mut walk: Vec<Vec<i64>> = vec![Vec::new(); d];
    for orbit in &complex.vertices {
        let mut acc = vec![0; 2 * d];
        let mut u = orbit[0];
        for _ in 0..orbit.len() {
            walk[u - 1] = acc.clone();
            let (step, next) = dual_chain(o, u, &loop_word);
            for (a, b) in acc.iter_mut().zip(step) {
                *a += b;
            }
            u = next;
        }
    }
    let mut to_dual = IntMatrix::zeros(2 * d, 2 * d);
    for s in 1..=d {
        for (edge, end) in [(s - 1, p1.apply(s)), (d + s - 1, p2.apply(s))] {
            to_dual[(edge, edge)] += 1;
            for f in 0..2 * d {
                to_dual[(f, edge)] += walk[s - 1][f] - walk[end - 1][f];
            }
        }
    }
    (pairing, to_dual)
}

/// True iff the classes are linearly independent over ℤ/2.
pub fn f2_independent(classes: &[Vec<i64>]) -> bool {
    rank_mod2(classes) == classes.len()
}

/// A symplectic basis `(A₁…A_g, B₁…B_g)` in model coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticBasis {
    pub a: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
}

impl SymplecticBasis {
    /// The change of basis matrix with columns `A₁…A_g, B₁…B_g`.
    pub fn matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<i64>> = self.a.iter().chain(&self.b).cloned().collect();
        IntMatrix::from_columns(cols.first().map_or(0, Vec::len), &cols)
    }
}

/// The standard symplectic form `J = (0, I; −I, 0)`.
pub fn standard_form(genus: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * genus, 2 * genus);
    for i in 0..genus {
        j[(i, genus + i)] = 1;
        j[(genus + i, i)] = -1;
    }
    j
}

/// The Gram matrix of the intersection form on the given classes.
pub fn gram(model: &H1Model, classes: &[Vec<i64>]) -> IntMatrix {
    let n = classes.len();
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = model.intersect(&classes[i], &classes[j]);
        }
    }
    g
}

/// Extends a primitive Lagrangian family `A₁…A_g` to a symplectic basis:
/// `C` with `î(A_i, C_j) = δ_ij` comes from a right inverse of
/// `(î(A_i, ·))_i`, and `B_j = C_j + Σ_{i<j} î(C_i, C_j)·A_i`.
pub fn symplectic_completion(model: &H1Model, lagrangian: &[Vec<i64>]) -> Result<SymplecticBasis, HomologyError> {
    let g = model.genus;
    if lagrangian.len() != g {
        return Err(HomologyError::Dimension { expected: g, found: lagrangian.len() });
    }
    for a in lagrangian {
        if a.len() != 2 * g {
            return Err(HomologyError::Dimension { expected: 2 * g, found: a.len() });
        }
    }
    for a in lagrangian {
        for b in lagrangian {
            if model.intersect(a, b) != 0 {
                return Err(HomologyError::NotLagrangian);
            }
        }
    }
    let rows: Vec<Vec<i64>> = lagrangian.iter().map(|a| model.intersection.transpose().mul_vec(a)).collect();
    let w = IntMatrix::from_rows(&rows);
    let c = right_inverse(&w).ok_or(HomologyError::NotPrimitive)?.columns();
    let mut b = Vec::with_capacity(g);
    for j in 0..g {
        let mut bj = c[j].clone();
        for i in 0..j {
            let k = model.intersect(&c[i], &c[j]);
            for (x, y) in bj.iter_mut().zip(&lagrangian[i]) {
                *x += k * y;
            }
        }
        b.push(bj);
    }
    Ok(SymplecticBasis { a: lagrangian.to_vec(), b })
}

/// The matrix of the map induced by `φ` on `H₁(X, ℤ)`, in the basis whose
/// columns are given by `basis` (model coordinates), columns being images.
/// When `φ` maps `H` only to a conjugate of itself it is first composed
/// with the inner automorphism making it stabilize `H`.
pub fn induced_matrix(
    o: &Origami,
    model: &H1Model,
    phi: &F2Endo,
    basis: &IntMatrix,
) -> Result<IntMatrix, HomologyError> {
    let cs = CosetAction::new(o);
    let psi = match cs.aut_stabilizes(phi)? {
        Some(1) => phi.clone(),
        Some(_) => cs.normalize_stabilizer(phi)?.ok_or(HomologyError::DoesNotStabilize)?,
        None => return Err(HomologyError::DoesNotStabilize),
    };
    let gens = cs.schreier_system().generators().to_vec();
    let mut before = Vec::with_capacity(gens.len());
    let mut after = Vec::with_capacity(gens.len());
    for h in &gens {
        before.push(model.class_of(o, h)?);
        after.push(model.class_of(o, &psi.apply(h)?)?);
    }
    let n = IntMatrix::from_columns(model.rank(), &before);
    let n_img = IntMatrix::from_columns(model.rank(), &after);
    let r = right_inverse(&n).ok_or(HomologyError::Torsion)?;
    let m_model = n_img.mul(&r);
    let p_inv = inverse_unimodular(basis).ok_or(HomologyError::NotUnimodular)?;
    Ok(p_inv.mul(&m_model).mul(basis))
}

/// The block `A` when `m = (I, A; 0, I)`.
pub fn block_form_check(m: &IntMatrix) -> Option<IntMatrix> {
    let n = m.rows();
    if n != m.cols() || !n.is_multiple_of(2) {
        return None;
    }
    let g = n / 2;
    let id = IntMatrix::identity(g);
    let ok = m.submatrix(0, g, 0, g) == id && m.submatrix(g, n, g, n) == id && m.submatrix(g, n, 0, g).is_zero();
    ok.then(|| m.submatrix(0, g, g, n))
}

/// Whether the characteristic polynomial of `a` divides that of `m`.
pub fn charpoly_divides(a: IntMatrix2, m: &IntMatrix) -> bool {
    let [c0, c1, c2] = a.charpoly();
    poly_divides(&[c0 as i128, c1 as i128, c2 as i128], &m.charpoly())
}

/// A homomorphism from the genus-`g` surface group to `F_g`, given by the
/// images of `a₁…a_g, b₁…b_g` (words of rank `g` in `γ₁…γ_g`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaSpec {
    pub genus: usize,
    pub images: Vec<Word>,
}

impl AlphaSpec {
    pub fn new(genus: usize, images: Vec<Word>) -> Result<AlphaSpec, HomologyError> {
        if images.len() != 2 * genus {
            return Err(HomologyError::Dimension { expected: 2 * genus, found: images.len() });
        }
        if let Some(w) = images.iter().find(|w| w.rank() != genus) {
            return Err(HomologyError::Dimension { expected: genus, found: w.rank() });
        }
        Ok(AlphaSpec { genus, images })
    }

    /// The standard symplectic homomorphism `a_i ↦ 1`, `b_i ↦ γ_i`.
    pub fn standard(genus: usize) -> AlphaSpec {
        let mut images = vec![Word::identity(genus); genus];
        images.extend((1..=genus).map(|i| Word::generator(genus, i).expect("in range")));
        AlphaSpec { genus, images }
    }

    /// `α(w)` for a word over `a₁…a_g, b₁…b_g` (rank `2g`).
    pub fn eval(&self, w: &Word) -> Result<Word, HomologyError> {
        if w.rank() != 2 * self.genus {
            return Err(HomologyError::UnknownGenerator(format!("word of rank {}", w.rank())));
        }
        Ok(w.substitute(&self.images)?)
    }
}

/// `α(w)` (free function form).
pub fn alpha_eval(alpha: &AlphaSpec, w: &Word) -> Result<Word, HomologyError> {
    alpha.eval(w)
}

/// The common conjugator `c` with `α(φ(x)) = c · α(x) · c⁻¹` for all
/// generators `x`, if one exists; `images` lists `φ(a₁)…φ(a_g), φ(b₁)…φ(b_g)`.
pub fn modg_alpha_check(alpha: &AlphaSpec, images: &[Word]) -> Result<Option<Word>, HomologyError> {
    let g = alpha.genus;
    if images.len() != 2 * g {
        return Err(HomologyError::Dimension { expected: 2 * g, found: images.len() });
    }
    let mut pairs = Vec::with_capacity(2 * g);
    for (i, img) in images.iter().enumerate() {
        let generator = Word::generator(2 * g, i + 1)?;
        pairs.push((alpha.eval(&generator)?, alpha.eval(img)?));
    }
    Ok(simultaneous_conjugacy(&pairs)?)
}

/// The matrix of a map on the abelianized surface group given by the
/// images of `a₁…a_g, b₁…b_g`: column `j` holds the exponent sums of the
/// `j`-th image.
pub fn symplectic_action_matrix(images: &[Word]) -> IntMatrix {
    let n = images.len();
    let cols: Vec<Vec<i64>> = images.iter().map(Word::exponent_sums).collect();
    IntMatrix::from_columns(n, &cols)
}

/// Formats a word over the symplectic alphabet.
pub fn symplectic_text(w: &Word) -> String {
    w.to_text(Alphabet::Symplectic { genus: w.rank() / 2 })
}

/// The assembled evidence that the horizontal multi-twist (or, for a
/// direction `(p, q)`, the parabolic map fixing that direction) acts on
/// homology as required: block form, characteristic polynomial
/// divisibility and fixed horizontal classes.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TwistCertificate {
    pub genus: usize,
    pub direction: Option<(i64, i64)>,
    /// Multiplier `m` of the twist on the (possibly sheared and
    /// transposed) origami the pipeline ran on.
    pub multiplier: u64,
    /// Derivative of the affine map on the original origami.
    pub derivative: [i64; 4],
    pub veech_witness: Option<usize>,
    pub veech_contains: bool,
    pub eigenvector: bool,
    pub curves: Vec<OrigamiCurve>,
    pub classes: Vec<Vec<i64>>,
    pub z2_independent: bool,
    pub lagrangian: bool,
    pub symplectic_standard: bool,
    pub action_matrix: Vec<Vec<i64>>,
    pub block: Option<Vec<Vec<i64>>>,
    pub charpoly_divides: bool,
    pub proj_fixed: bool,
    pub passed: bool,
}

/// Runs the horizontal pipeline on `work` with the twist multiplier `m`.
fn horizontal_certificate(work: &Origami, m: u64) -> Result<TwistCertificate, HomologyError> {
    let cs = CosetAction::new(work);
    let twist = IntMatrix2::new(1, m as i64, 0, 1);
    let phi = F2Endo::horizontal_twist_lift(m);
    let veech_witness = cs.aut_stabilizes(&phi)?;
    let model = H1Model::new(work)?;
    let hss = find_hss(work)?;
    let classes: Vec<Vec<i64>> = hss.curves.iter().map(|c| model.class_of_curve(work, c)).collect::<Result<_, _>>()?;
    let z2_independent = f2_independent(&classes);
    let lagrangian = classes.iter().all(|a| classes.iter().all(|b| model.intersect(a, b) == 0));
    let mut cert = TwistCertificate {
        genus: model.genus,
        direction: None,
        multiplier: m,
        derivative: twist.entries(),
        veech_witness,
        veech_contains: veech_witness.is_some(),
        eigenvector: true,
        curves: hss.curves.clone(),
        classes: classes.clone(),
        z2_independent,
        lagrangian,
        symplectic_standard: false,
        action_matrix: Vec::new(),
        block: None,
        charpoly_divides: false,
        proj_fixed: hss.curves.iter().all(|c| {
            let e = c.word.exponent_sums();
            twist.apply((e[0], e[1])) == (e[0], e[1])
        }),
        passed: false,
    };
    if lagrangian && veech_witness.is_some() {
        let basis = symplectic_completion(&model, &classes)?;
        let p = basis.matrix();
        let all: Vec<Vec<i64>> = basis.a.iter().chain(&basis.b).cloned().collect();
        cert.symplectic_standard = gram(&model, &all) == standard_form(model.genus);
        let m_phi = induced_matrix(work, &model, &phi, &p)?;
        cert.block = block_form_check(&m_phi).map(|b| b.to_rows());
        cert.charpoly_divides = charpoly_divides(twist, &m_phi);
        cert.action_matrix = m_phi.to_rows();
    }
    Ok(cert)
}

impl TwistCertificate {
    fn finish(mut self) -> TwistCertificate {
        self.passed = self.veech_contains
            && self.eigenvector
            && self.z2_independent
            && self.lagrangian
            && self.symplectic_standard
            && self.block.is_some()
            && self.charpoly_divides
            && self.proj_fixed;
        self
    }
}

/// The certificate for the horizontal multi-twist with
/// `m = lcm` of the cylinder lengths.
pub fn twist_membership_certificate(o: &Origami) -> Result<TwistCertificate, HomologyError> {
    let (m, _) = o.horizontal_multiplier();
    Ok(horizontal_certificate(o, m)?.finish())
}

/// The certificate for a parabolic map with eigenvector `(p, q)`: the
/// origami is sheared so that `(p, q)` becomes vertical, the vertical
/// twist `(1, 0; c, 1)` of the sheared origami is certified through its
/// transpose, and `A = der(g) · (1, 0; c, 1) · der(g)⁻¹` is checked to be
/// integral, to fix `(p, q)` and to lie in the Veech group.
pub fn twist_membership_certificate_direction(o: &Origami, p: i64, q: i64) -> Result<TwistCertificate, HomologyError> {
    let (sheared, change) = o.shear(p, q)?;
    let c = sheared.vertical_multiplier();
    let mut cert = horizontal_certificate(&sheared.transpose(), c)?;
    let a = change.conjugate(IntMatrix2::new(1, 0, c as i64, 1)).to_int().ok_or(HomologyError::NotIntegral)?;
    if a.det() != 1 {
        return Err(HomologyError::NotUnimodular);
    }
    cert.direction = Some((p, q));
    cert.derivative = a.entries();
    cert.eigenvector = a.apply((p, q)) == (p, q);
    cert.veech_witness = CosetAction::new(o).veech_witness(a)?;
    cert.veech_contains = cert.veech_contains && cert.veech_witness.is_some();
    Ok(cert.finish())
}
