//! The `demo` subcommand: run the worked examples end to end, print one
//! PASS/FAIL line per check, exit nonzero if anything fails.

use clap::Args;

use steklov::bounds::{
    bound_regime, euler_characteristic, sigma2_lens, verify_sharpness_family, BoundRegimeInput,
    CellComplex, ConformalFlag, LensParams, Regime,
};
use steklov::harmonic::{
    dtn_cone, dtn_disk, invariant_harmonic_dims, quotient_ball_spectrum,
    steklov_isospectral_quotients,
};
use steklov::inverse::{
    data_equivalent, enumerate_class_members, peel_progressions, recover_boundary_class,
};
use steklov::matgroup::{
    close_group, cyclic_rotation_group, signed_diagonal, Matrix, DEFAULT_TOLERANCE,
};
use steklov::rational::{format_rat, rat, rat_int, Rat};
use steklov::spectra::{
    canonical_disk_spectrum, canonical_half_disk_spectrum, canonical_spectrum, enumerate,
    spectra_equal, BoundaryData, Length, SpectrumUnit, SpectrumView,
};
use steklov::sunada::{
    permutation_character_equal, sunada_ball_check, sunada_condition, FiniteGroup,
    MatrixRealization, SubgroupCollection,
};

use crate::CliError;

#[derive(Args)]
pub struct DemoArgs {
    /// Which demo to run: all, disk, half-disk, ell1ell2, invert, cone,
    /// quotients, spherical, sunada, lens, euler, regime.
    #[arg(default_value = "all")]
    name: String,
    /// Cone order for the cone demo.
    #[arg(long, default_value_t = 7)]
    k: u64,
}

struct DemoRun {
    failures: usize,
}

impl DemoRun {
    fn check(&mut self, name: &str, passed: bool, detail: String) {
        if passed {
            println!("PASS {name}: {detail}");
        } else {
            println!("FAIL {name}: {detail}");
            self.failures += 1;
        }
    }
}

pub fn run(args: DemoArgs) -> Result<(), CliError> {
    let mut run = DemoRun { failures: 0 };
    let all = args.name == "all";
    let mut matched = all;

    if all || args.name == "disk" {
        matched = true;
        demo_disk(&mut run)?;
    }
    if all || args.name == "half-disk" {
        matched = true;
        demo_half_disk(&mut run)?;
    }
    if all || args.name == "ell1ell2" {
        matched = true;
        demo_ell1ell2(&mut run)?;
    }
    if all || args.name == "invert" {
        matched = true;
        demo_invert(&mut run)?;
    }
    if all || args.name == "cone" {
        matched = true;
        demo_cone(&mut run, args.k)?;
    }
    if all || args.name == "quotients" {
        matched = true;
        demo_quotients(&mut run)?;
    }
    if all || args.name == "spherical" {
        matched = true;
        demo_spherical(&mut run)?;
    }
    if all || args.name == "sunada" {
        matched = true;
        demo_sunada(&mut run)?;
    }
    if all || args.name == "lens" {
        matched = true;
        demo_lens(&mut run)?;
    }
    if all || args.name == "euler" {
        matched = true;
        demo_euler(&mut run)?;
    }
    if all || args.name == "regime" {
        matched = true;
        demo_regime(&mut run)?;
    }

    if !matched {
        return Err(CliError::domain(format!(
            "unknown demo `{}`; see `steklov demo --help`",
            args.name
        )));
    }
    if run.failures > 0 {
        return Err(CliError::failed_demo(format!(
            "{} demo check(s) failed",
            run.failures
        )));
    }
    Ok(())
}

fn len(r: Rat) -> Result<Length, CliError> {
    Ok(Length::new(r)?)
}

fn render(values: &[Rat]) -> String {
    values.iter().map(format_rat).collect::<Vec<_>>().join(", ")
}

fn ints(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| rat_int(v)).collect()
}

fn demo_disk(run: &mut DemoRun) -> Result<(), CliError> {
    let spectrum = canonical_disk_spectrum(&len(rat_int(2))?);
    let view = enumerate(&spectrum, 7)?;
    let expected = ints(&[0, 1, 1, 2, 2, 3, 3]);
    run.check(
        "disk",
        view.values() == expected,
        format!("Stek(D(2pi)) = {} (x pi)", render(view.values())),
    );
    Ok(())
}

fn demo_half_disk(run: &mut DemoRun) -> Result<(), CliError> {
    let spectrum = canonical_half_disk_spectrum(&len(rat_int(1))?);
    let view = enumerate(&spectrum, 5)?;
    let expected = ints(&[0, 1, 2, 3, 4]);
    let simple = view.values().windows(2).all(|w| w[0] < w[1]);
    run.check(
        "half-disk",
        view.values() == expected && simple,
        format!(
            "Stek(O_HD(1)) = {} (x pi), all multiplicities one",
            render(view.values())
        ),
    );
    Ok(())
}

fn ell1ell2_pair() -> Result<(BoundaryData, BoundaryData), CliError> {
    // l1 = 1, l2 = 2: disk 2*l1 with two half-disks l2, and the interchange.
    let a = BoundaryData::new(
        vec![Length::new(rat_int(2))?],
        vec![Length::new(rat_int(2))?, Length::new(rat_int(2))?],
    );
    let b = BoundaryData::new(
        vec![Length::new(rat_int(4))?],
        vec![Length::new(rat_int(1))?, Length::new(rat_int(1))?],
    );
    Ok((a, b))
}

fn demo_ell1ell2(run: &mut DemoRun) -> Result<(), CliError> {
    let (a, b) = ell1ell2_pair()?;
    let sa = canonical_spectrum(&a);
    let sb = canonical_spectrum(&b);
    let equal = spectra_equal(&sa, &sb)?;
    let va = enumerate(&sa, 10)?;
    let vb = enumerate(&sb, 10)?;
    println!("  spectrum of (2; 2,2):  {} (x pi)", render(va.values()));
    println!("  spectrum of (4; 1,1):  {} (x pi)", render(vb.values()));
    run.check(
        "ell1ell2",
        equal && data_equivalent(&a, &b),
        format!(
            "verdict {}, data equivalence {}",
            if equal { "EQUAL" } else { "UNEQUAL" },
            data_equivalent(&a, &b)
        ),
    );
    Ok(())
}

fn demo_invert(run: &mut DemoRun) -> Result<(), CliError> {
    // Peel the displayed disk spectrum.
    let view = SpectrumView::new(SpectrumUnit::Absolute, ints(&[0, 1, 1, 2, 2, 3, 3]))?;
    let decomposition = peel_progressions(&view)?;
    let progressions: Vec<(Rat, u64)> = decomposition
        .progressions()
        .map(|(d, m)| (d.clone(), m))
        .collect();
    run.check(
        "invert/peel",
        decomposition.zeros() == 1 && progressions == vec![(rat_int(1), 2)],
        format!(
            "0,1,1,2,2,3,3 peels to {} zero(s) + {} progression(s)",
            decomposition.zeros(),
            progressions.len()
        ),
    );

    // Recover the interchange class from either side.
    let (a, b) = ell1ell2_pair()?;
    let class_of = |bd: &BoundaryData| -> Result<_, CliError> {
        let spectrum = canonical_spectrum(bd);
        let n = steklov::inverse::sufficient_prefix_len(&spectrum);
        let view = enumerate(&spectrum, n)?;
        Ok(recover_boundary_class(&peel_progressions(&view)?)?)
    };
    let ca = class_of(&a)?;
    let cb = class_of(&b)?;
    let members = enumerate_class_members(&ca)?;
    run.check(
        "invert/class",
        ca == cb && members.len() == 2 && members.contains(&a) && members.contains(&b),
        format!(
            "both sides recover r={}, s={}, merged lengths {{{}}} with {} members",
            ca.r(),
            ca.s(),
            render(ca.merged_lengths()),
            members.len()
        ),
    );

    // A class that is forced to be a singleton: distinct type II lengths.
    let singleton = recover_boundary_class(&peel_progressions(&enumerate(
        &canonical_spectrum(&BoundaryData::new(
            vec![],
            vec![
                Length::new(rat_int(1))?,
                Length::new(rat_int(2))?,
                Length::new(rat_int(3))?,
            ],
        )),
        40,
    )?)?)?;
    let members = enumerate_class_members(&singleton)?;
    run.check(
        "invert/singleton",
        members.len() == 1,
        format!("distinct type II lengths leave {} member", members.len()),
    );
    Ok(())
}

fn demo_cone(run: &mut DemoRun, k: u64) -> Result<(), CliError> {
    let cone = dtn_cone(k, 10)?;
    let disk = dtn_disk(&rat_int(1), 10)?;
    println!("  cone k={k} modes 0..10:  {}", render(cone.eigenvalues()));
    println!("  unit disk modes 0..10: {}", render(disk.eigenvalues()));
    run.check(
        "cone",
        cone.eigenvalues() == disk.eigenvalues(),
        format!(
            "Dirichlet-to-Neumann operators {}",
            if cone.eigenvalues() == disk.eigenvalues() {
                "IDENTICAL"
            } else {
                "DIFFERENT"
            }
        ),
    );
    Ok(())
}

fn demo_quotients(run: &mut DemoRun) -> Result<(), CliError> {
    // Closure of the three pi-rotations about the coordinate axes.
    let klein = close_group(
        &[
            signed_diagonal(&[1, -1, -1]),
            signed_diagonal(&[-1, 1, -1]),
            signed_diagonal(&[-1, -1, 1]),
        ],
        DEFAULT_TOLERANCE,
        8,
    )?;
    run.check(
        "quotients/closure",
        klein.order() == 4,
        format!(
            "three axis rotations close to a group of order {}",
            klein.order()
        ),
    );

    // Trivial group on the unit disk in the plane.
    let trivial = steklov::matgroup::OrthogonalGroup::<Rat>::trivial(2)?;
    let view = quotient_ball_spectrum(&trivial, &rat_int(1), 3)?;
    run.check(
        "quotients/ball",
        view.values() == ints(&[0, 1, 1, 2, 2, 3, 3]),
        format!("B(0,1) in the plane: {}", render(view.values())),
    );

    // Z_5 on the radius-5 disk gives the very same values.
    let z5 = cyclic_rotation_group(5)?;
    let view = quotient_ball_spectrum(&z5, &rat_int(5), 15)?;
    run.check(
        "quotients/cone-path",
        view.values() == ints(&[0, 1, 1, 2, 2, 3, 3]),
        format!("Z_5 \\ D(10pi): {}", render(view.values())),
    );

    // Antipodal quotient in O(3) keeps even degrees only.
    let antipodal = close_group(&[signed_diagonal(&[-1, -1, -1])], DEFAULT_TOLERANCE, 4)?;
    let table = invariant_harmonic_dims(&antipodal, 4)?;
    run.check(
        "quotients/antipodal",
        table.dims() == [1, 0, 5, 0, 9],
        format!("antipodal dims 0..4 = {:?}", table.dims()),
    );
    Ok(())
}

fn demo_spherical(run: &mut DemoRun) -> Result<(), CliError> {
    // Conjugate groups are isospectral as spherical space forms.
    let x = signed_diagonal(&[1, -1, -1]);
    let y = signed_diagonal(&[-1, 1, -1]);
    let klein = close_group(&[x.clone(), y.clone()], DEFAULT_TOLERANCE, 8)?;
    let mut q_entries = vec![rat_int(0); 9];
    q_entries[1] = rat_int(1);
    q_entries[5] = rat_int(1);
    q_entries[6] = rat_int(1);
    let q = Matrix::new(3, q_entries)?;
    let conjugated: Vec<Matrix<Rat>> = [x, y]
        .iter()
        .map(|g| q.mul(g).mul(&q.transpose()))
        .collect();
    let conjugate = close_group(&conjugated, DEFAULT_TOLERANCE, 8)?;
    let verdict = steklov_isospectral_quotients(&klein, &conjugate, 12)?;
    run.check(
        "spherical/conjugate",
        verdict.isospectral,
        format!(
            "conjugate Klein-4 groups isospectral up to degree {}",
            verdict.checked_degree
        ),
    );

    // Rotation vs reflection Z_2 in the plane differ at degree 1.
    let rotation = close_group(&[signed_diagonal(&[-1, -1])], DEFAULT_TOLERANCE, 4)?;
    let reflection = close_group(&[signed_diagonal(&[1, -1])], DEFAULT_TOLERANCE, 4)?;
    let verdict = steklov_isospectral_quotients(&rotation, &reflection, 8)?;
    run.check(
        "spherical/z2",
        !verdict.isospectral && verdict.first_difference == Some((1, 0, 1)),
        format!(
            "rotation vs reflection first differ at {:?}",
            verdict.first_difference
        ),
    );
    Ok(())
}

fn demo_sunada(run: &mut DemoRun) -> Result<(), CliError> {
    let group = FiniteGroup::klein_four();
    let h = SubgroupCollection::new(&group, vec![vec![0, 1], vec![0, 2], vec![0, 3]])?;
    let k = SubgroupCollection::new(&group, vec![vec![0], vec![0, 1, 2, 3], vec![0, 1, 2, 3]])?;

    let condition = sunada_condition(&group, &h, &k)?;
    for line in &condition.per_class {
        println!(
            "  class [{}] (size {}): {} vs {}",
            line.representative_label,
            line.class_size,
            format_rat(&line.lhs),
            format_rat(&line.rhs)
        );
    }
    let characters = permutation_character_equal(&group, &h, &k)?;
    run.check(
        "sunada/condition",
        condition.holds && characters.equal,
        format!(
            "condition {}, permutation characters {}",
            condition.holds, characters.equal
        ),
    );

    let rotations = MatrixRealization::new(
        &group,
        vec![
            Matrix::identity(3),
            signed_diagonal(&[1, -1, -1]),
            signed_diagonal(&[-1, 1, -1]),
            signed_diagonal(&[-1, -1, 1]),
        ],
        DEFAULT_TOLERANCE,
    )?;
    let ball = sunada_ball_check(&rotations, &h, &k, 30)?;
    run.check(
        "sunada/rotations",
        ball.equal,
        format!(
            "axis-rotation action: union spectra equal up to degree {}",
            ball.max_degree
        ),
    );

    let reflections = MatrixRealization::new(
        &group,
        vec![
            Matrix::identity(3),
            signed_diagonal(&[1, 1, -1]),
            signed_diagonal(&[1, -1, 1]),
            signed_diagonal(&[1, -1, -1]),
        ],
        DEFAULT_TOLERANCE,
    )?;
    let ball = sunada_ball_check(&reflections, &h, &k, 30)?;
    run.check(
        "sunada/reflections",
        ball.equal,
        format!(
            "coordinate-plane reflection action: union spectra equal up to degree {}",
            ball.max_degree
        ),
    );
    Ok(())
}

fn demo_lens(run: &mut DemoRun) -> Result<(), CliError> {
    let mut all_sharp = true;
    for m in [2usize, 3] {
        for j in 2..=4u64 {
            all_sharp &= verify_sharpness_family(j, m)?;
        }
    }
    run.check(
        "lens/sharpness",
        all_sharp,
        "sigma2(O(j^m; 1, j, ..., j^(m-1))) = j for m in {2,3}, j in {2..4}".to_string(),
    );

    let params = LensParams::new(9, vec![1, 3])?;
    let result = sigma2_lens(&params);
    run.check(
        "lens/witness",
        result.sigma2 == 3,
        format!(
            "sigma2(O(9; 1,3)) = {} with witness {:?}",
            result.sigma2, result.witness
        ),
    );
    Ok(())
}

fn demo_euler(run: &mut DemoRun) -> Result<(), CliError> {
    let mut ok = true;
    for k in [2u64, 3, 5] {
        let chi = euler_characteristic(&CellComplex::cone(k)?);
        println!("  chi(cone of order {k}) = {}", format_rat(&chi));
        ok &= chi == rat(1, k as i64);
    }
    run.check(
        "euler/cone",
        ok,
        "cone complexes give chi = 1/k".to_string(),
    );

    // Doubling the half-disk orbisurface across its mirror gives the disk:
    // chi doubles from 1/2 to 1.
    let half_disk = CellComplex::new(vec![
        steklov::bounds::Cell {
            dim: 0,
            isotropy: 2,
        },
        steklov::bounds::Cell {
            dim: 0,
            isotropy: 2,
        },
        steklov::bounds::Cell {
            dim: 1,
            isotropy: 2,
        },
        steklov::bounds::Cell {
            dim: 1,
            isotropy: 1,
        },
        steklov::bounds::Cell {
            dim: 2,
            isotropy: 1,
        },
    ])?;
    let chi_half = euler_characteristic(&half_disk);
    let chi_disk = euler_characteristic(&CellComplex::disk());
    run.check(
        "euler/doubling",
        chi_half == rat(1, 2) && chi_disk == chi_half.clone() * rat_int(2),
        format!(
            "chi(half-disk) = {}, chi(double) = {}",
            format_rat(&chi_half),
            format_rat(&chi_disk)
        ),
    );
    Ok(())
}

fn demo_regime(run: &mut DemoRun) -> Result<(), CliError> {
    // A cone has chi = 1/k > 0, one smooth boundary circle.
    let input = BoundRegimeInput {
        chi: rat(1, 7),
        r: 1,
        s: 0,
    };
    let report = bound_regime(&input, 2, &rat_int(1), &rat_int(1), ConformalFlag::Zero)?;
    run.check(
        "regime/cone",
        report.regime == Regime::NonnegativeExcess,
        format!(
            "excess {} puts the cone in the nonnegative regime, rhs = {}",
            format_rat(&report.excess),
            format_rat(&report.rhs)
        ),
    );
    Ok(())
}
