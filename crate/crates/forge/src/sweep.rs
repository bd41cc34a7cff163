//! Randomized property suite over seed-deterministic origamis.

use origami_forge_core::freegroup::IntMatrix2;
use origami_forge_core::homology::{
    f2_independent, gram, standard_form, symplectic_completion, twist_membership_certificate, H1Model,
};
use origami_forge_core::hss::{find_hss, step1, step1_with_order};
use origami_forge_core::origami::Origami;
use origami_forge_core::subgroup::CosetAction;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::random::OrigamiSampler;

/// Parameters of a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub max_d: usize,
    pub count: usize,
    pub seed: u64,
}

/// Outcome of the individual checks on one origami.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Checks {
    /// `g` curves, each closed and conjugate-horizontal, ℤ/2-independent.
    pub hss: bool,
    /// Step-1 cut count equal under 10 random bridging orders.
    pub cut_count_invariant: bool,
    /// The multi-twist and the identity lie in the Veech group.
    pub veech: bool,
    /// Rank `2g`, skew unimodular form, symplectic completion gives `J`.
    pub homology: bool,
    /// The twist certificate passes.
    pub certificate: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.hss && self.cut_count_invariant && self.veech && self.homology && self.certificate
    }
}

/// Result for one sampled origami.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub index: usize,
    pub d: usize,
    pub p1: String,
    pub p2: String,
    pub genus: usize,
    pub multiplier: u64,
    pub curves: Vec<String>,
    pub checks: Checks,
    pub error: Option<String>,
}

/// Result of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub algorithm: &'static str,
    pub config: SweepConfig,
    pub passed: usize,
    pub failed: usize,
    pub samples: Vec<SampleReport>,
}

/// Draws the origamis of a sweep (sequentially, so the sample set depends
/// only on the seed) together with one seed per sample for its own
/// randomized checks.
pub fn samples(config: &SweepConfig) -> Vec<(Origami, u64)> {
    let mut sampler = OrigamiSampler::new(config.seed);
    (0..config.count)
        .map(|_| {
            let o = sampler.origami_up_to(config.max_d.max(1));
            (o, sampler.next_seed())
        })
        .collect()
}

/// Runs the property suite; samples are processed in parallel and
/// reported in index order.
pub fn run_sweep(config: &SweepConfig) -> SweepReport {
    let reports: Vec<SampleReport> =
        samples(config).into_par_iter().enumerate().map(|(i, (o, seed))| check_origami(i, &o, seed)).collect();
    let passed = reports.iter().filter(|r| r.checks.all()).count();
    SweepReport {
        schema: 1,
        algorithm: "chacha8-fy-reject",
        config: *config,
        passed,
        failed: reports.len() - passed,
        samples: reports,
    }
}

/// Runs all checks on one origami.
pub fn check_origami(index: usize, o: &Origami, seed: u64) -> SampleReport {
    let mut report = SampleReport {
        index,
        d: o.d(),
        p1: o.p1().to_string(),
        p2: o.p2().to_string(),
        genus: 0,
        multiplier: o.horizontal_multiplier().0,
        curves: Vec::new(),
        checks: Checks::default(),
        error: None,
    };
    if let Err(e) = run_checks(o, seed, &mut report) {
        report.error = Some(e);
    }
    report
}

fn run_checks(o: &Origami, seed: u64, report: &mut SampleReport) -> Result<(), String> {
    let genus = o.genus().map_err(|e| e.to_string())?;
    report.genus = genus;
    let model = H1Model::new(o).map_err(|e| e.to_string())?;
    let hss = find_hss(o).map_err(|e| e.to_string())?;
    report.curves = hss.curves.iter().map(|c| c.to_string()).collect();
    let classes: Vec<Vec<i64>> =
        hss.curves.iter().map(|c| model.class_of_curve(o, c)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    report.checks.hss = hss.curves.len() == genus
        && hss.curves.iter().all(|c| o.is_closed(c) && c.word.is_conjugate_horizontal())
        && f2_independent(&classes);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cuts = step1(o).cuts.len();
    let b = o.cylinders().len();
    report.checks.cut_count_invariant = (0..10).all(|_| {
        let mut order: Vec<usize> = (0..b).collect();
        order.shuffle(&mut rng);
        step1_with_order(o, &order).cuts.len() == cuts
    });

    let cs = CosetAction::new(o);
    let (_, twist) = o.horizontal_multiplier();
    report.checks.veech = cs.veech_contains(twist).map_err(|e| e.to_string())?
        && cs.veech_contains(IntMatrix2::IDENTITY).map_err(|e| e.to_string())?;

    let form = &model.intersection;
    report.checks.homology = model.rank() == 2 * genus
        && form.is_skew_symmetric()
        && form.det().abs() == 1
        && match symplectic_completion(&model, &classes) {
            Ok(basis) => {
                let all: Vec<Vec<i64>> = basis.a.iter().chain(&basis.b).cloned().collect();
                gram(&model, &all) == standard_form(genus)
            }
            Err(_) => false,
        };

    report.checks.certificate = twist_membership_certificate(o).map_err(|e| e.to_string())?.passed;
    Ok(())
}
