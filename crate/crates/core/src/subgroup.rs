//! The finite-index subgroup `H ≤ F₂` of an origami: the stabilizer of a
//! base square under the monodromy action (`x` acts by `p1`, `y` by `p2`,
//! words act on the right, letters applied left to right).  Provides
//! membership, a Schreier system of free generators, Reidemeister–Schreier
//! rewriting, the puncture relations, and the test whether an automorphism
//! of F₂ maps `H` to a conjugate of itself (Veech group membership).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::freegroup::{lift_matrix, F2Endo, FreeGroupError, IntMatrix2, Letter, Word};
use crate::origami::{Origami, Permutation};

/// Errors raised by subgroup computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubgroupError {
    #[error("word does not lie in the subgroup")]
    NotInSubgroup,
    #[error("endomorphism is not known to be an automorphism")]
    NotAutomorphism,
    #[error("matrix has determinant {det}, expected 1")]
    NotUnimodular { det: i64 },
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
}

/// The monodromy action of F₂ on the squares of an origami, with a base
/// square whose stabilizer is `H`.
#[derive(Clone, Debug)]
pub struct CosetAction<'a> {
    origami: &'a Origami,
    base: usize,
    p1_inv: Permutation,
    p2_inv: Permutation,
}

impl<'a> CosetAction<'a> {
    /// The action with base square 1.
    pub fn new(origami: &'a Origami) -> CosetAction<'a> {
        CosetAction::with_base(origami, 1)
    }

    pub fn with_base(origami: &'a Origami, base: usize) -> CosetAction<'a> {
        assert!(base >= 1 && base <= origami.d(), "base square out of range");
        CosetAction { origami, base, p1_inv: origami.p1().inverse(), p2_inv: origami.p2().inverse() }
    }

    pub fn origami(&self) -> &'a Origami {
        self.origami
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// The square `s · l` for a single letter.
    pub fn act_letter(&self, s: usize, l: Letter) -> usize {
        match (l.generator(), l.is_positive()) {
            (1, true) => self.origami.p1().apply(s),
            (1, false) => self.p1_inv.apply(s),
            (_, true) => self.origami.p2().apply(s),
            (_, false) => self.p2_inv.apply(s),
        }
    }

    /// The square `s · w`.
    pub fn act(&self, s: usize, w: &Word) -> usize {
        w.letters().iter().fold(s, |t, &l| self.act_letter(t, l))
    }

    /// Membership in `H`: `w` fixes the base square.
    pub fn contains(&self, w: &Word) -> bool {
        w.rank() == 2 && self.act(self.base, w) == self.base
    }

    /// The Schreier system of the (only) tree policy.
    pub fn schreier_system(&self) -> SchreierSystem {
        SchreierSystem::new(self, TreePolicy::BreadthFirstXFirst)
    }

    /// One relation per vertex orbit: `t_s · (x⁻¹y⁻¹xy)^n · t_s⁻¹` where `s`
    /// is the smallest square of the orbit, `t_s` its coset representative
    /// and `n` the orbit size.  The loop `x⁻¹y⁻¹xy` from square `s` circles
    /// the lower-left corner of `s` counterclockwise and ends in the next
    /// square of the vertex orbit.
    pub fn puncture_relations(&self) -> PunctureData {
        let ss = self.schreier_system();
        let comm = Word::reduce(2, &[(1, -1), (2, -1), (1, 1), (2, 1)]).expect("rank 2");
        let relations = self
            .origami
            .vertex_orbits()
            .into_iter()
            .map(|orbit| {
                let s = orbit[0];
                let conjugator = ss.representative(s).clone();
                let exponent = orbit.len();
                let word = comm.pow(exponent as i64).conj(&conjugator).expect("rank 2");
                PunctureRelation { orbit, conjugator, exponent, word }
            })
            .collect();
        PunctureData { relations }
    }

    /// A square `s` with `φ(H) = Stab(s)`, if one exists.  `φ(H) ⊆ Stab(s)`
    /// is tested on the free generators of `H` through the permutations
    /// induced by `φ(x)` and `φ(y)`; equality follows since both subgroups
    /// have index `d`.
    pub fn aut_stabilizes(&self, phi: &F2Endo) -> Result<Option<usize>, SubgroupError> {
        if !phi.is_automorphism() {
            return Err(SubgroupError::NotAutomorphism);
        }
        let d = self.origami.d();
        let image_perm = |w: &Word| -> Vec<usize> { (1..=d).map(|s| self.act(s, w)).collect() };
        let px = Permutation::new(image_perm(phi.image_x())).expect("monodromy is bijective");
        let py = Permutation::new(image_perm(phi.image_y())).expect("monodromy is bijective");
        let transported = Origami::new(px, py).expect("image of a transitive action");
        let moved = CosetAction::new(&transported);
        let gens = self.schreier_system().generators;
        Ok((1..=d).find(|&s| gens.iter().all(|h| moved.act(s, h) == s)))
    }

    /// The automorphism `ψ = conj(t_s) ∘ φ` with `ψ(H) = H`, where `s` is
    /// the witness of [`CosetAction::aut_stabilizes`]; `None` when `φ` does
    /// not stabilize the conjugacy class of `H`.
    pub fn normalize_stabilizer(&self, phi: &F2Endo) -> Result<Option<F2Endo>, SubgroupError> {
        let Some(s) = self.aut_stabilizes(phi)? else {
            return Ok(None);
        };
        let t = self.schreier_system().representative(s).clone();
        Ok(Some(F2Endo::inner(&t)?.compose(phi)))
    }

    /// Whether `A ∈ SL₂(ℤ)` lies in the Veech group: some (every) lift of
    /// `A` to Aut(F₂) maps `H` to a conjugate of `H`.
    pub fn veech_contains(&self, a: IntMatrix2) -> Result<bool, SubgroupError> {
        Ok(self.veech_witness(a)?.is_some())
    }

    /// Like [`CosetAction::veech_contains`], returning the witness square.
    pub fn veech_witness(&self, a: IntMatrix2) -> Result<Option<usize>, SubgroupError> {
        if a.det() != 1 {
            return Err(SubgroupError::NotUnimodular { det: a.det() });
        }
        self.aut_stabilizes(&lift_matrix(a)?)
    }
}

/// How the spanning tree of the coset graph is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreePolicy {
    /// Breadth-first search from the base square, visiting squares in queue
    /// order and trying the `x`-edge before the `y`-edge.
    BreadthFirstXFirst,
}

/// Spanning-tree data for `H`: a coset representative per square and the
/// `d + 1` free generators `h_i = t_s · a · t_{s·a}⁻¹` of the non-tree
/// edges, ordered by (source square in BFS order, `x` before `y`).
#[derive(Clone, Debug)]
pub struct SchreierSystem {
    base: usize,
    reps: Vec<Word>,
    generators: Vec<Word>,
    /// `edge_generator[s - 1][a]` is the generator index (0-based) of the
    /// edge leaving `s` along generator `a + 1`, or `None` for tree edges.
    edge_generator: Vec<[Option<usize>; 2]>,
    targets: Vec<[usize; 2]>,
}

impl SchreierSystem {
    pub fn new(cs: &CosetAction<'_>, policy: TreePolicy) -> SchreierSystem {
        let TreePolicy::BreadthFirstXFirst = policy;
        let o = cs.origami();
        let d = o.d();
        let targets: Vec<[usize; 2]> = (1..=d).map(|s| [o.p1().apply(s), o.p2().apply(s)]).collect();
        let mut reps: Vec<Option<Word>> = vec![None; d];
        let mut tree = vec![[false; 2]; d];
        let mut order = Vec::with_capacity(d);
        let mut queue = VecDeque::from([cs.base()]);
        reps[cs.base() - 1] = Some(Word::identity(2));
        while let Some(s) = queue.pop_front() {
            order.push(s);
            for a in 0..2 {
                let t = targets[s - 1][a];
                if reps[t - 1].is_none() {
                    let step = Word::generator(2, a + 1).expect("rank 2");
                    reps[t - 1] = Some(reps[s - 1].as_ref().expect("visited") * &step);
                    tree[s - 1][a] = true;
                    queue.push_back(t);
                }
            }
        }
        let reps: Vec<Word> = reps.into_iter().map(|r| r.expect("transitive")).collect();
        let mut generators = Vec::with_capacity(d + 1);
        let mut edge_generator = vec![[None; 2]; d];
        for &s in &order {
            for a in 0..2 {
                if !tree[s - 1][a] {
                    let t = targets[s - 1][a];
                    let step = Word::generator(2, a + 1).expect("rank 2");
                    generators.push(&(&reps[s - 1] * &step) * &reps[t - 1].inv());
                    edge_generator[s - 1][a] = Some(generators.len() - 1);
                }
            }
        }
        SchreierSystem { base: cs.base(), reps, generators, edge_generator, targets }
    }

    /// The free generators `h_1, …, h_{d+1}`.
    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    /// The coset representative `t_s` with `base · t_s = s`.
    pub fn representative(&self, s: usize) -> &Word {
        &self.reps[s - 1]
    }

    /// Index (0-based) of a generator equal to `w`, if any.
    pub fn generator_index(&self, w: &Word) -> Option<usize> {
        self.generators.iter().position(|h| h == w)
    }

    /// Reidemeister–Schreier rewriting of `w ∈ H` as a word of rank `d + 1`
    /// in the free generators.
    pub fn rewrite(&self, w: &Word) -> Result<Word, SubgroupError> {
        let rank = self.generators.len();
        let mut s = self.base;
        let mut raw: Vec<(usize, i64)> = Vec::new();
        for l in w.letters() {
            let a = l.generator() - 1;
            if l.is_positive() {
                if let Some(g) = self.edge_generator[s - 1][a] {
                    raw.push((g + 1, 1));
                }
                s = self.targets[s - 1][a];
            } else {
                let prev = (1..=self.reps.len()).find(|&t| self.targets[t - 1][a] == s).expect("bijective");
                if let Some(g) = self.edge_generator[prev - 1][a] {
                    raw.push((g + 1, -1));
                }
                s = prev;
            }
        }
        if s != self.base {
            return Err(SubgroupError::NotInSubgroup);
        }
        let out = Word::reduce(rank, &raw)?;
        debug_assert_eq!(&self.substitute(&out)?, w);
        Ok(out)
    }

    /// Evaluates a word in the free generators as an element of F₂.
    pub fn substitute(&self, hw: &Word) -> Result<Word, SubgroupError> {
        Ok(hw.substitute(&self.generators)?)
    }
}

/// One puncture relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PunctureRelation {
    /// The vertex orbit (orbit of the commutator permutation).
    pub orbit: Vec<usize>,
    pub conjugator: Word,
    pub exponent: usize,
    /// `conjugator · (x⁻¹y⁻¹xy)^exponent · conjugator⁻¹`, an element of `H`.
    pub word: Word,
}

/// The puncture relations of all vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PunctureData {
    pub relations: Vec<PunctureRelation>,
}
