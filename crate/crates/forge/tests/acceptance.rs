//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when
//! any criterion fails.

use std::process::ExitCode;

use num_complex::Complex64;
use origami_forge::cli;
use origami_forge::fixtures::{fixture_dir, registry};
use origami_forge::io::read_words;
use origami_forge::sweep::{check_origami, run_sweep, SweepConfig, SweepReport};
use origami_forge_core::freegroup::{lift_matrix, Alphabet, F2Endo, IntMatrix2, Word};
use origami_forge_core::homology::{
    alpha_eval, charpoly_divides, modg_alpha_check, symplectic_action_matrix, twist_membership_certificate,
    twist_membership_certificate_direction, AlphaSpec,
};
use origami_forge_core::hss::find_hss;
use origami_forge_core::linalg::IntMatrix;
use origami_forge_core::moebius::{Classification, FixedPointData, MoebiusMap, TOLERANCE};
use origami_forge_core::origami::Origami;
use origami_forge_core::subgroup::CosetAction;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

type Criterion = (usize, &'static str, fn(&Context) -> Outcome);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sweep_config() -> SweepConfig {
    SweepConfig { max_d: 12, count: 200, seed: 0 }
}

/// Shared data: the sweep report over random origamis.
struct Context {
    sweep: SweepReport,
}

fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for o in &mut v {
        o.sort_unstable();
    }
    v.sort();
    v
}

fn criterion_1(_: &Context) -> Outcome {
    let w = Origami::wollmilchsau();
    let cyl: Vec<Vec<usize>> = w.cylinders().into_iter().map(|c| c.squares).collect();
    ensure(cyl == vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]], || format!("Wollmilchsau cylinders {cyl:?}"))?;
    let orbits = sorted(w.vertex_orbits());
    ensure(orbits == vec![vec![1, 3], vec![2, 4], vec![5, 7], vec![6, 8]], || {
        format!("Wollmilchsau vertices {orbits:?}")
    })?;
    ensure(w.genus().map_err(err)? == 3, || "Wollmilchsau genus".into())?;
    let o = Origami::o14();
    let lengths: Vec<usize> = o.cylinders().iter().map(|c| c.len()).collect();
    ensure(lengths == vec![4, 3, 7], || format!("O14 cylinder lengths {lengths:?}"))?;
    let expected =
        sorted(vec![vec![1], vec![2], vec![3, 6], vec![4], vec![5], vec![7], vec![8, 11, 12, 9, 10, 13], vec![14]]);
    ensure(sorted(o.vertex_orbits()) == expected, || "O14 vertex orbits".into())?;
    ensure(o.genus().map_err(err)? == 4, || "O14 genus".into())?;
    for m in 2..=6 {
        for n in 2..=6 {
            let g = Origami::l_origami(m, n).map_err(err)?.genus().map_err(err)?;
            ensure(g == 2, || format!("L({m},{n}) has genus {g}"))?;
        }
    }
    for n in 1..=6 {
        let g = Origami::x_origami(n).map_err(err)?.genus().map_err(err)?;
        ensure(g == n, || format!("O({n}) has genus {g}"))?;
    }
    Ok("Wollmilchsau, O14, L(m,n) for 2≤m,n≤6, O(n) for 1≤n≤6".into())
}

fn curve_texts(o: &Origami) -> Result<Vec<(usize, String)>, String> {
    Ok(find_hss(o).map_err(err)?.curves.iter().map(|c| (c.start, c.word.to_string())).collect())
}

fn criterion_2(_: &Context) -> Outcome {
    let w = curve_texts(&Origami::wollmilchsau())?;
    let expected: Vec<(usize, String)> =
        vec![(1, "x^4".into()), (1, "x y^-1 x y".into()), (5, "x^-1 y^-1 x^-1 y".into())];
    ensure(w == expected, || format!("Wollmilchsau curves {w:?}"))?;
    let o = curve_texts(&Origami::o14())?;
    ensure(o.len() == 4, || format!("O14 has {} curves", o.len()))?;
    for c in [(8, "x^-3 y^-1 x y".to_string()), (8, "x^2 y^-1 x^-1 y".to_string())] {
        ensure(o.contains(&c), || format!("O14 curves {o:?} lack {c:?}"))?;
    }
    Ok("Wollmilchsau 3 curves exact, O14 4 curves".into())
}

fn criterion_3(ctx: &Context) -> Outcome {
    for (i, f) in registry().iter().enumerate() {
        let r = check_origami(i, &f.origami, i as u64);
        ensure(r.checks.hss && r.checks.cut_count_invariant, || {
            format!("fixture {}: {:?} {:?}", f.name, r.checks, r.error)
        })?;
    }
    let bad: Vec<usize> =
        ctx.sweep.samples.iter().filter(|s| !(s.checks.hss && s.checks.cut_count_invariant)).map(|s| s.index).collect();
    ensure(bad.is_empty(), || format!("sweep samples failing: {bad:?}"))?;
    Ok(format!("{} fixtures + {} random origamis (d ≤ 12)", registry().len(), ctx.sweep.samples.len()))
}

fn criterion_4(ctx: &Context) -> Outcome {
    for f in registry() {
        let cs = CosetAction::new(&f.origami);
        let (_, twist) = f.origami.horizontal_multiplier();
        ensure(cs.veech_contains(twist).map_err(err)?, || format!("{}: twist not in Veech group", f.name))?;
        ensure(cs.veech_contains(IntMatrix2::IDENTITY).map_err(err)?, || format!("{}: identity", f.name))?;
    }
    let bad: Vec<usize> = ctx.sweep.samples.iter().filter(|s| !s.checks.veech).map(|s| s.index).collect();
    ensure(bad.is_empty(), || format!("sweep samples failing: {bad:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut count = 0;
    while count < 500 {
        let e: Vec<i64> = (0..4).map(|_| rng.random_range(-20..=20)).collect();
        let a = IntMatrix2::new(e[0], e[1], e[2], e[3]);
        if a.det().abs() != 1 {
            continue;
        }
        count += 1;
        let back = lift_matrix(a).map_err(err)?.beta_hat();
        ensure(back == a, || format!("lift of {a} has matrix {back}"))?;
    }
    Ok("fixtures + sweep members; 500 lift roundtrips".into())
}

fn criterion_5(ctx: &Context) -> Outcome {
    for f in registry() {
        let r = check_origami(0, &f.origami, 0);
        ensure(r.checks.homology, || format!("{}: homology checks {:?}", f.name, r.error))?;
        let cert = twist_membership_certificate(&f.origami).map_err(err)?;
        ensure(cert.block.is_some(), || format!("{}: induced matrix not in block form", f.name))?;
        ensure(cert.charpoly_divides, || format!("{}: charpoly does not divide", f.name))?;
        ensure(cert.passed, || format!("{}: certificate failed", f.name))?;
    }
    let bad: Vec<usize> = ctx.sweep.samples.iter().filter(|s| !s.checks.homology).map(|s| s.index).collect();
    ensure(bad.is_empty(), || format!("sweep samples failing: {bad:?}"))?;
    Ok("rank 2g, unimodular skew form, J, block form, charpoly".into())
}

fn criterion_6(_: &Context) -> Outcome {
    let file = read_words(&fixture_dir().join("l_origami_2_2.words")).map_err(err)?;
    let sym = |t: &str| Word::parse_with(t, 4, Alphabet::Symplectic { genus: 2 }).map_err(err);
    let alpha = AlphaSpec::standard(2);
    let gammas = vec![
        Word::identity(2),
        Word::identity(2),
        Word::generator(2, 1).map_err(err)?,
        Word::generator(2, 2).map_err(err)?,
    ];
    for m in 2..=4usize {
        for n in 2..=4usize {
            let o = Origami::l_origami(m, n).map_err(err)?;
            let ss = CosetAction::new(&o).schreier_system();
            let x_m = Word::parse(&format!("x^{m}"), 2).map_err(err)?;
            let h1 = ss.generator_index(&x_m).ok_or("x^m is not a generator")?;
            let phi = F2Endo::horizontal_twist_lift(m as u64);
            for i in 2..=m {
                let hi = Word::parse(&format!("x^{} y x^-{}", i - 1, i - 1), 2).map_err(err)?;
                let k = ss.generator_index(&hi).ok_or("h_i is not a generator")?;
                let image = ss.rewrite(&phi.apply(&hi).map_err(err)?).map_err(err)?;
                let expected = Word::reduce(m + n, &[(h1 + 1, 1), (k + 1, 1)]).map_err(err)?;
                ensure(image == expected, || format!("L({m},{n}): f(h_{i}) rewrites to {image}"))?;
            }
            let e = (1 - n as i64) * m as i64;
            let images = if (m, n) == (2, 2) {
                file.images("f").map_err(err)?
            } else {
                vec![sym("a1")?, sym("a1^-1 a2 a1")?, sym("a1^-1 b1")?, sym(&format!("a1^-1 b2 a2^{e} a1"))?]
            };
            let values: Vec<Word> =
                images.iter().map(|w| alpha_eval(&alpha, w)).collect::<Result<_, _>>().map_err(err)?;
            ensure(values == gammas, || format!("L({m},{n}): alpha values {values:?}"))?;
            let conj = modg_alpha_check(&alpha, &images).map_err(err)?;
            ensure(conj == Some(Word::identity(2)), || format!("L({m},{n}): conjugator {conj:?}"))?;
        }
    }
    Ok("rewriting patterns, alpha values, identity conjugator for 2≤m,n≤4".into())
}

fn criterion_7(_: &Context) -> Outcome {
    let l22 = Origami::l_origami(2, 2).map_err(err)?;
    let (sheared, change) = l22.shear(1, 1).map_err(err)?;
    let c = sheared.vertical_multiplier();
    ensure(c == 3, || format!("vertical multiplier {c}"))?;
    let a = change.conjugate(IntMatrix2::new(1, 0, c as i64, 1)).to_int().ok_or("non-integral A")?;
    ensure(a == IntMatrix2::new(4, -3, 3, -2), || format!("A = {a}"))?;
    ensure(a.apply((1, 1)) == (1, 1), || "A does not fix (1,1)".into())?;
    let cert = twist_membership_certificate_direction(&l22, 1, 1).map_err(err)?;
    ensure(cert.passed && cert.derivative == [4, -3, 3, -2], || format!("certificate {cert:?}"))?;
    Ok("A = (4,-3;3,-2), A(1,1) = (1,1)".into())
}

fn criterion_8(_: &Context) -> Outcome {
    let data = read_words(&fixture_dir().join("flat_surface.words")).map_err(err)?;
    let mg = symplectic_action_matrix(&data.images("g").map_err(err)?);
    ensure(mg == IntMatrix::identity(4), || format!("M_g = {mg}"))?;
    let mf = symplectic_action_matrix(&data.images("f").map_err(err)?);
    let expected = IntMatrix::from_rows(&[vec![1, 0, -1, 0], vec![0, 1, 0, -1], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
    ensure(mf == expected, || format!("M_f = {mf}"))?;
    let der = data.derivatives["f"] * data.derivatives["g"];
    ensure(der == IntMatrix2::new(9, 2, 4, 1) && der.charpoly() == [1, -10, 1], || format!("der(fg) = {der}"))?;
    let mfg = mf.mul(&mg);
    ensure(!charpoly_divides(der, &mfg), || "charpoly unexpectedly divides".into())?;
    let member = |map: &str, alpha: &str| -> Result<bool, String> {
        Ok(modg_alpha_check(&data.alpha(alpha).map_err(err)?, &data.images(map).map_err(err)?).map_err(err)?.is_some())
    };
    for (map, alpha, expected) in [
        ("g", "A1", true),
        ("g", "A2", true),
        ("g", "A3", true),
        ("f", "A4", true),
        ("f", "A1", false),
        ("f", "A2", false),
        ("f", "A3", false),
        ("g", "A4", false),
    ] {
        let got = member(map, alpha)?;
        ensure(got == expected, || format!("{map} in Mod2({alpha}): {got}"))?;
    }
    Ok("M_g = I, M_f unipotent, x^2-10x+1 does not divide, membership table".into())
}

fn criterion_9(_: &Context) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let point = |rng: &mut ChaCha8Rng| Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
    let mut done = 0;
    while done < 1000 {
        let (z, w) = (point(&mut rng), point(&mut rng));
        if (z - w).norm() < 0.5 {
            continue;
        }
        let lambda = Complex64::from_polar(rng.random_range(0.05..0.95), rng.random_range(-3.1..3.1));
        let data = FixedPointData { z, w, lambda };
        let m = MoebiusMap::from_fixed_data(&data).map_err(err)?;
        let back = m.fixed_data().map_err(err)?;
        ensure(back.approx_eq(&data, TOLERANCE), || format!("{data:?} -> {back:?}"))?;
        done += 1;
    }
    let t = 0.9f64;
    let prototypes = [
        (MoebiusMap::identity(), Classification::Identity),
        (MoebiusMap::real(1.0, 1.0, 0.0, 1.0).map_err(err)?, Classification::Parabolic),
        (MoebiusMap::real(t.cos(), -t.sin(), t.sin(), t.cos()).map_err(err)?, Classification::Elliptic),
        (MoebiusMap::real(2.0, 0.0, 0.0, 0.5).map_err(err)?, Classification::Loxodromic),
    ];
    let mut done = 0;
    while done < 1000 {
        let e: Vec<Complex64> = (0..4).map(|_| point(&mut rng)).collect();
        if (e[0] * e[3] - e[1] * e[2]).norm() < 0.5 {
            continue;
        }
        let g = MoebiusMap::new(e[0], e[1], e[2], e[3]).map_err(err)?;
        let (m, class) = prototypes[done % 4];
        let got = m.conjugate_by(&g).classify();
        ensure(got == class, || format!("{m:?} conjugated by {g:?} is {got}"))?;
        done += 1;
    }
    Ok("1000 roundtrips, 1000 conjugations".into())
}

fn run_cli(args: &[&str]) -> (u8, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("origami-forge").chain(args.iter().copied()), &mut out, &mut err);
    (code, out)
}

fn criterion_10(ctx: &Context) -> Outcome {
    let first = serde_json::to_string(&ctx.sweep).map_err(err)?;
    let second = serde_json::to_string(&run_sweep(&sweep_config())).map_err(err)?;
    ensure(first == second, || "sweep reports differ".into())?;
    let commands: [&[&str]; 6] = [
        &["sweep", "--max-d", "10", "--count", "50", "--seed", "42"],
        &["hss", "o14"],
        &["verify-hss", "wollmilchsau"],
        &["homology", "l22", "--twist"],
        &["homology", "l22", "--direction", "1,1"],
        &["moebius", "2,0", "0,0", "0,0", "0.5,0"],
    ];
    for args in commands {
        let (c1, o1) = run_cli(args);
        let (c2, o2) = run_cli(args);
        ensure(c1 == 0 && c2 == 0, || format!("{args:?} exited with {c1}/{c2}"))?;
        ensure(o1 == o2, || format!("{args:?} output differs"))?;
    }
    Ok(format!("sweep ({} bytes) and 6 CLI commands byte-identical", first.len()))
}

fn main() -> ExitCode {
    let ctx = Context { sweep: run_sweep(&sweep_config()) };
    let criteria: [Criterion; 10] = [
        (1, "fixture geometry", criterion_1),
        (2, "HSS reference curves", criterion_2),
        (3, "HSS correctness", criterion_3),
        (4, "Veech membership", criterion_4),
        (5, "homology certificates", criterion_5),
        (6, "L(m,n) algebra", criterion_6),
        (7, "shear identity", criterion_7),
        (8, "flat-surface counterexample", criterion_8),
        (9, "Möbius numerics", criterion_9),
        (10, "determinism", criterion_10),
    ];
    let mut failed = 0;
    for (n, name, check) in criteria {
        match check(&ctx) {
            Ok(detail) => println!("criterion {n}: PASS ({name}: {detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({name}: {why})");
            }
        }
    }
    println!("acceptance: {}/10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
