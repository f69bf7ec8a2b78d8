use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use findist_core::clifford::{
    contragredient_display, even_units, rho_star, Blade, CliffordElement, EvenCliffordElement, QuadraticFormSpec,
};
use findist_core::counting::{
    bisector_stats, bisector_stats_sweep, distance_stats, isosceles_count, isotropic_cone_occupancy,
    max_collinear_cocircular, prune_curve, prune_heavy, segment_classes, verify_identities,
};
use findist_core::geometry::{all_lines, all_points, Line};
use findist_core::incidence::{incidence_ratio, reduce_to_incidences, ReductionWitness, Verdict};
use findist_core::kinematic::{
    all_proj_points, coordinate_rank, exceptional_set, kappa, kappa_chart_a_raw, kappa_chart_b_raw, kappa_inv,
    phi_left, phi_right, r_tau_plane, transporter_image, ProjPoint,
};
use findist_core::motions::{enumerate_motions, r_tau_set, RigidMotion};
use findist_core::{Field, FieldElement, PointSet};
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{ExperimentConfig, Ratio};
use crate::generate::{generate, Generator};
use crate::report::{points_digest, text_digest, Finding, Report, SweepRow};
use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Stats,
    Verify,
    Reduce,
    Prune,
    KinematicCheck,
    CliffordCheck,
    Sweep,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Stats => "stats",
            Command::Verify => "verify",
            Command::Reduce => "reduce",
            Command::Prune => "prune",
            Command::KinematicCheck => "kinematic-check",
            Command::CliffordCheck => "clifford-check",
            Command::Sweep => "sweep",
        }
    }
}

/// A report plus any side files it refers to.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub artifacts: Vec<(PathBuf, String)>,
}

/// Runs `command` on the configured worker pool.
pub fn run(command: Command, config: &ExperimentConfig) -> Result<Outcome, HarnessError> {
    config.validate()?;
    match config.workers {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| HarnessError::Config(e.to_string()))?;
            pool.install(|| dispatch(command, config))
        }
        None => dispatch(command, config),
    }
}

fn dispatch(command: Command, config: &ExperimentConfig) -> Result<Outcome, HarnessError> {
    let field = Field::new(config.field.clone()).map_err(|e| HarnessError::Config(e.to_string()))?;
    let mut report = Report::new(command.name(), config.digest(), field.spec().to_string());
    let mut artifacts = Vec::new();
    let point_set = || generate(&config.generator, field, config.seed);
    match command {
        Command::Stats => stats(&point_set()?, config, &mut report),
        Command::Verify => verify(&point_set()?, config, &mut report)?,
        Command::Reduce => {
            let witnesses = reduce(&point_set()?, &mut report);
            if let Some(path) = &config.outputs.witnesses {
                let json = serde_json::to_string_pretty(&witnesses).expect("witnesses serialize") + "\n";
                artifacts.push((path.clone(), json));
            }
        }
        Command::Prune => prune(&point_set()?, &mut report),
        Command::KinematicCheck => kinematic_check(field, config, &mut report),
        Command::CliffordCheck => clifford_check(field, config, &mut report),
        Command::Sweep => sweep(config, &mut report)?,
    }
    Ok(Outcome { report, artifacts })
}

fn exponent_holds(n: u128, p: u128, e: Ratio) -> bool {
    // n ≤ p^{num/den}  ⇔  n^den ≤ p^num
    match (n.checked_pow(e.den), p.checked_pow(e.num)) {
        (Some(l), Some(r)) => l <= r,
        (None, _) => false,
        (_, None) => true,
    }
}

/// Largest number of points of A on one isotropic line.
pub fn isotropic_line_occupancy(a: &PointSet) -> usize {
    if !a.field().has_sqrt_minus_one() {
        return 0;
    }
    all_lines(a.field()).iter().filter(|l| l.is_isotropic()).map(|l| l.incidence_count(a)).max().unwrap_or(0)
}

/// The corpus constraints: |A| ≤ p^{4/3} and at most a third of A on any isotropic line.
pub fn in_hypothesis(a: &PointSet, config: &ExperimentConfig) -> bool {
    let n = a.len() as u128;
    let p = a.field().characteristic() as u128;
    let share = config.thresholds.isotropic_share;
    exponent_holds(n, p, config.thresholds.size_exponent)
        && isotropic_line_occupancy(a) as u128 * share.den as u128 <= share.num as u128 * n
}

#[derive(Serialize)]
struct StatsDetail {
    points: usize,
    distinct_distances: usize,
    pind: usize,
    pind_nonzero: usize,
    nonzero_pairs: u64,
    isosceles: u128,
    isosceles_all: u128,
    quadruples: u128,
    bisector_energy: u128,
    bisector_energy_star: u128,
    max_curve: usize,
    max_line: usize,
    max_circle: usize,
    isotropic_cone_occupancy: usize,
    isotropic_line_occupancy: usize,
    in_hypothesis: bool,
}

fn stats(a: &PointSet, config: &ExperimentConfig, report: &mut Report) {
    let d = distance_stats(a);
    let iso = isosceles_count(a);
    let bis = bisector_stats(a);
    let m = max_collinear_cocircular(a);
    report.detail("inputs_digest", points_digest(a));
    report.detail(
        "stats",
        StatsDetail {
            points: a.len(),
            distinct_distances: d.distinct(),
            pind: d.pind,
            pind_nonzero: d.pind_nonzero,
            nonzero_pairs: d.nonzero_pairs,
            isosceles: iso.t,
            isosceles_all: iso.t_all,
            quadruples: segment_classes(a).quadruples(),
            bisector_energy: bis.b_energy,
            bisector_energy_star: bis.b_star_energy,
            max_curve: m.m,
            max_line: m.m_line,
            max_circle: m.m_circle,
            isotropic_cone_occupancy: isotropic_cone_occupancy(a),
            isotropic_line_occupancy: isotropic_line_occupancy(a),
            in_hypothesis: in_hypothesis(a, config),
        },
    );
}

fn verify(a: &PointSet, config: &ExperimentConfig, report: &mut Report) -> Result<(), HarnessError> {
    let identities = verify_identities(a);
    let known: BTreeSet<&str> = identities.checks.iter().map(|c| c.name.as_str()).collect();
    for name in &config.checks {
        // the relation check only exists when its hypothesis holds
        if !known.contains(name.as_str()) && name != "bisector_relation_failures" {
            return Err(HarnessError::Config(format!("unknown check {name:?}")));
        }
    }
    let digest = points_digest(a);
    for c in &identities.checks {
        if config.checks.is_empty() || config.checks.contains(&c.name) {
            report.push(Finding {
                name: c.name.clone(),
                inputs_digest: digest.clone(),
                lhs: c.lhs.to_string(),
                rhs: c.rhs.to_string(),
                relation: c.relation.clone(),
                pass: c.pass,
                hard: c.hard,
            });
        }
    }
    report.detail("points", a.len());
    report.detail("diagonal_gap", identities.diagonal_gap.to_string());
    report.detail("cauchy_schwarz_tight", identities.cauchy_schwarz_tight);
    report.detail("isotropic_cone_occupancy", identities.isotropic_cone_occupancy);
    Ok(())
}

#[derive(Serialize)]
struct ReductionSummary {
    r: FieldElement,
    segments: usize,
    lifted: bool,
    axis: Option<Line>,
    axial_pairs: String,
    on_axis_pairs: String,
    incidences: u64,
    k: usize,
    incidence_surrogate: Option<f64>,
    verdict: Option<Verdict>,
    error: Option<String>,
}

/// Runs the reduction for every nonzero length; returns witnesses whose counts differ.
fn reduce(a: &PointSet, report: &mut Report) -> Vec<ReductionWitness> {
    let lengths: Vec<FieldElement> = segment_classes(a).nonzero_lengths().collect();
    let results: Vec<_> = lengths.par_iter().map(|&r| (r, reduce_to_incidences(a, r))).collect();
    let digest = points_digest(a);
    let mut summaries = Vec::new();
    let mut discrepancies = Vec::new();
    for (r, result) in results {
        let name = format!("reduction r={r}");
        match result {
            Ok(w) => {
                let explained = w.axial_pairs + w.on_axis_pairs;
                let pass = w.structurally_valid() && w.axis_admissible && w.verdict != Verdict::Unexplained;
                report.check(&name, &digest, w.incidences, explained, "=", pass);
                summaries.push(ReductionSummary {
                    r,
                    segments: w.segments.len(),
                    lifted: w.lifted,
                    axis: Some(w.axis),
                    axial_pairs: w.axial_pairs.to_string(),
                    on_axis_pairs: w.on_axis_pairs.to_string(),
                    incidences: w.incidences,
                    k: w.k,
                    incidence_surrogate: incidence_ratio(&w.points, &w.planes).ok().map(|x| x.surrogate),
                    verdict: Some(w.verdict),
                    error: None,
                });
                if w.verdict != Verdict::Equal {
                    discrepancies.push(w);
                }
            }
            Err(e) => {
                report.check(&name, &digest, "error", "witness", "=", false);
                summaries.push(ReductionSummary {
                    r,
                    segments: 0,
                    lifted: false,
                    axis: None,
                    axial_pairs: String::new(),
                    on_axis_pairs: String::new(),
                    incidences: 0,
                    k: 0,
                    incidence_surrogate: None,
                    verdict: None,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    report.detail("reductions", summaries);
    report.detail("discrepancies", discrepancies.len());
    discrepancies
}

fn prune(a: &PointSet, report: &mut Report) {
    let digest = points_digest(a);
    let result = prune_heavy(a);
    let n2 = (a.len() as u128).pow(2);
    report.check("prune_steps", &digest, result.steps, result.step_limit, "<=", result.steps <= result.step_limit);
    report.check("prune_threshold", &digest, (result.final_m as u128).pow(3), n2, "<=", result.threshold_met);
    let mut current = a.clone();
    let mut curves: Vec<_> = result.removed.iter().map(|(c, _)| *c).collect();
    if curves.is_empty() {
        curves.extend(max_collinear_cocircular(a).heaviest.map(|(c, _)| c));
    }
    for (i, curve) in curves.iter().enumerate() {
        let check = prune_curve(&current, curve);
        report.check(
            &format!("prune_curve[{i}]"),
            &points_digest(&current),
            check.t_before,
            check.bound,
            "<=",
            check.holds,
        );
        current = check.remaining;
    }
    report.detail("removed", result.removed.iter().map(|(c, k)| (format!("{c:?}"), *k)).collect::<Vec<_>>());
    report.detail("remaining", result.remaining.len());
    report.detail("final_m", result.final_m);
}

fn sample_pairs<T: Copy>(items: &[T], count: usize, rng: &mut ChaCha8Rng) -> Vec<(T, T)> {
    (0..count).map(|_| (*items.choose(rng).expect("nonempty"), *items.choose(rng).expect("nonempty"))).collect()
}

fn kinematic_check(f: &'static Field, config: &ExperimentConfig, report: &mut Report) {
    let digest = text_digest(&format!("kinematic {} {} {}", f.spec(), config.seed, config.samples));
    let q = f.order() as u128;
    let so2 = (f.order() as i64 - f.chi_minus_one()) as u128;
    let motions = enumerate_motions(f);
    report.check("sf_order", &digest, motions.len(), q * q * so2, "=", motions.len() as u128 == q * q * so2);

    let image: BTreeSet<ProjPoint> = motions.par_iter().map(kappa).collect();
    let all = all_proj_points(f);
    let complement: BTreeSet<ProjPoint> =
        all.iter().copied().filter(|p| !(p.coords()[0].square() + p.coords()[1].square()).is_zero()).collect();
    report.check("kappa_injective", &digest, image.len(), motions.len(), "=", image.len() == motions.len());
    report.check("kappa_image_is_complement", &digest, image.len(), complement.len(), "=", image == complement);
    let exceptional = exceptional_set(f).len();
    report.check(
        "exceptional_set_size",
        &digest,
        all.len() - image.len(),
        exceptional,
        "=",
        all.len() - image.len() == exceptional,
    );

    let one = f.one();
    let (round_trip, charts) = motions
        .par_iter()
        .map(|g| {
            let back = kappa_inv(&kappa(g)).ok() != Some(*g);
            let both = g.u() != one && g.u() != -one;
            let disagree =
                both && ProjPoint::new(kappa_chart_a_raw(g)).ok() != ProjPoint::new(kappa_chart_b_raw(g)).ok();
            (usize::from(back), usize::from(disagree))
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    report.check("round_trip_failures", &digest, round_trip, 0, "=", round_trip == 0);
    report.check("chart_disagreements", &digest, charts, 0, "=", charts == 0);

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let pairs = sample_pairs(&motions, config.samples, &mut rng);
    let equivariance = pairs
        .par_iter()
        .filter(|(g, x)| {
            kappa(&g.compose(x)) != phi_left(g).apply(&kappa(x))
                || kappa(&x.compose(g)) != phi_right(g).apply(&kappa(x))
        })
        .count();
    report.check("equivariance_failures", &digest, equivariance, 0, "=", equivariance == 0);

    let pts = all_points(f);
    let point_pairs: Vec<_> = if f.order() <= 7 {
        pts.iter().flat_map(|x| pts.iter().map(move |y| (*x, *y))).collect()
    } else {
        sample_pairs(&pts, config.samples, &mut rng)
    };
    let transporters = point_pairs
        .par_iter()
        .filter(|(x, y)| {
            let img = transporter_image(*x, *y);
            img.len() as u128 != so2 || coordinate_rank(&img) != 2
        })
        .count();
    report.check("transporter_line_failures", &digest, transporters, 0, "=", transporters == 0);

    let mut axes: Vec<Line> = all_lines(f).into_iter().filter(|l| !l.is_isotropic()).collect();
    axes.shuffle(&mut rng);
    axes.truncate(config.samples.min(10));
    axes.insert(0, Line::new(f.zero(), f.one(), f.zero()).expect("x-axis"));
    let planes = axes
        .iter()
        .filter(|axis| {
            let plane = r_tau_plane(axis).expect("non-isotropic");
            !r_tau_set(axis).expect("non-isotropic").iter().all(|g| plane.contains(&kappa(g)))
        })
        .count();
    report.check("axis_plane_failures", &digest, planes, 0, "=", planes == 0);
}

fn random_unit(form: QuadraticFormSpec, rng: &mut ChaCha8Rng) -> EvenCliffordElement {
    let f = form.field();
    loop {
        let coords = [(); 4].map(|_| f.from_index(rng.gen_range(0..f.order())).expect("in range"));
        let g = EvenCliffordElement::new(form, coords).expect("field matches");
        if g.is_unit() {
            return g;
        }
    }
}

/// Largest field for which the even units are enumerated.
const EXHAUSTIVE_UNITS_MAX_Q: u64 = 7;

fn clifford_check(f: &'static Field, config: &ExperimentConfig, report: &mut Report) {
    let digest = text_digest(&format!("clifford {} {} {}", f.spec(), config.seed, config.samples));
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut lambdas = vec![f.from_int(-1), f.from_int(2)];
    lambdas.dedup();
    for lam in lambdas {
        let Ok(form) = QuadraticFormSpec::new(lam) else { continue };
        let tag = format!("lambda={lam}");
        let basis: Vec<CliffordElement> = Blade::ALL.iter().map(|b| CliffordElement::basis(form, *b)).collect();
        let mut assoc = 0;
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    assoc += usize::from((*x * *y) * *z != *x * (*y * *z));
                }
            }
        }
        report.check(&format!("associativity_failures[{tag}]"), &digest, assoc, 0, "=", assoc == 0);

        let units: Vec<EvenCliffordElement> = if f.order() <= EXHAUSTIVE_UNITS_MAX_Q {
            even_units(form)
        } else {
            (0..config.samples).map(|_| random_unit(form, &mut rng)).collect()
        };
        let pairs = sample_pairs(&units, config.samples, &mut rng);
        let norm =
            pairs.par_iter().filter(|(g, h)| g.multiply(h).expect("same form").norm() != g.norm() * h.norm()).count();
        report.check(&format!("norm_multiplicativity_failures[{tag}]"), &digest, norm, 0, "=", norm == 0);

        let e = [Blade::E1, Blade::E2, Blade::E3].map(|b| CliffordElement::basis(form, b));
        let display = units
            .par_iter()
            .filter(|g| {
                let m = contragredient_display(g).expect("unit");
                e.iter().enumerate().any(|(i, v)| {
                    let img = findist_core::clifford::sandwich(g, v).expect("unit");
                    !img.is_vector()
                        || [Blade::E1, Blade::E2, Blade::E3].iter().enumerate().any(|(j, b)| img.coeff(*b) != m[i][j])
                })
            })
            .count();
        report.check(&format!("sandwich_display_failures[{tag}]"), &digest, display, 0, "=", display == 0);

        if lam == f.from_int(-1) {
            let homs = pairs
                .par_iter()
                .filter(|(g, h)| {
                    rho_star(&g.multiply(h).expect("same form")).expect("unit")
                        != rho_star(g).expect("unit").compose(&rho_star(h).expect("unit"))
                })
                .count();
            report.check("rho_star_homomorphism_failures", &digest, homs, 0, "=", homs == 0);
            if f.order() <= EXHAUSTIVE_UNITS_MAX_Q {
                let mut fibres: BTreeMap<RigidMotion, u64> = BTreeMap::new();
                let mut kernel = 0;
                for g in &units {
                    let m = rho_star(g).expect("unit");
                    kernel += usize::from(m.is_identity() != g.is_central());
                    *fibres.entry(m).or_default() += 1;
                }
                let sf = enumerate_motions(f).len();
                report.check("rho_star_surjective", &digest, fibres.len(), sf, "=", fibres.len() == sf);
                let bad = fibres.values().filter(|&&c| c != f.order() - 1).count();
                report.check("rho_star_fibre_size_failures", &digest, bad, 0, "=", bad == 0);
                report.check("rho_star_kernel_failures", &digest, kernel, 0, "=", kernel == 0);
            }
        }
    }
}

struct Instance {
    field: &'static Field,
    generator: Generator,
    seed: u64,
}

fn sweep_row(inst: &Instance, config: &ExperimentConfig) -> Result<SweepRow, HarnessError> {
    let a = generate(&inst.generator, inst.field, inst.seed)?;
    let n = a.len();
    let d = distance_stats(&a);
    let classes = segment_classes(&a);
    let bis = bisector_stats_sweep(&a);
    let size_two_thirds = (n as f64).powf(2.0 / 3.0);
    let pind_ratio = if n == 0 { 0.0 } else { d.pind_nonzero as f64 / size_two_thirds };
    // the largest class, smallest length first on ties
    let heaviest =
        classes.nonzero_lengths().map(|r| (classes.get(r).len(), r)).max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let incidence = heaviest
        .and_then(|(_, r)| reduce_to_incidences(&a, r).ok())
        .and_then(|w| incidence_ratio(&w.points, &w.planes).ok());
    let in_hyp = in_hypothesis(&a, config);
    let mut flags = Vec::new();
    if !in_hyp {
        flags.push("out-of-hypothesis");
    }
    if in_hyp && pind_ratio < config.thresholds.pind_ratio_min {
        flags.push("pind-below-floor");
    }
    if let (Some(ceiling), Some(r)) = (config.thresholds.incidence_ceiling, &incidence) {
        if r.surrogate > ceiling {
            flags.push("incidence-above-ceiling");
        }
    }
    Ok(SweepRow {
        field: inst.field.spec().to_string(),
        q: inst.field.order(),
        generator: inst.generator.label(),
        seed: inst.seed,
        size: n,
        pind: d.pind_nonzero,
        size_two_thirds,
        pind_ratio,
        isosceles: isosceles_count(&a).t,
        quadruples: classes.quadruples(),
        b_star_energy: bis.b_star_energy,
        max_curve: max_collinear_cocircular(&a).m,
        incidence_ratio: incidence.as_ref().map(|r| r.ratio),
        incidence_surrogate: incidence.as_ref().map(|r| r.surrogate),
        in_hypothesis: in_hyp,
        flags: flags.join(";"),
    })
}

fn sweep(config: &ExperimentConfig, report: &mut Report) -> Result<(), HarnessError> {
    let sweep = config.sweep.as_ref().ok_or_else(|| HarnessError::Config("sweep needs a \"sweep\" section".into()))?;
    let mut seeds = ChaCha8Rng::seed_from_u64(config.seed);
    let mut instances = Vec::new();
    for spec in &sweep.fields {
        let field = Field::new(spec.clone()).map_err(|e| HarnessError::Config(e.to_string()))?;
        for &size in &sweep.sizes {
            for _ in 0..sweep.repeats {
                instances.push(Instance { field, generator: Generator::Random { size }, seed: seeds.next_u64() });
            }
        }
        for g in &sweep.extra {
            instances.push(Instance { field, generator: g.clone(), seed: seeds.next_u64() });
        }
    }
    let rows: Vec<SweepRow> = instances.par_iter().map(|inst| sweep_row(inst, config)).collect::<Result<_, _>>()?;
    let enforce = config.thresholds.enforce_monitors;
    for (i, row) in rows.iter().enumerate() {
        let digest = text_digest(&format!("{} {} {}", row.field, row.generator, row.seed));
        if row.in_hypothesis {
            report.push(Finding {
                name: format!("pind_ratio[{i}]"),
                inputs_digest: digest.clone(),
                lhs: format!("{:.6}", row.pind_ratio),
                rhs: format!("{:.6}", config.thresholds.pind_ratio_min),
                relation: ">=".into(),
                pass: row.pind_ratio >= config.thresholds.pind_ratio_min,
                hard: enforce,
            });
        }
        if let (Some(ceiling), Some(s)) = (config.thresholds.incidence_ceiling, row.incidence_surrogate) {
            report.push(Finding {
                name: format!("incidence_surrogate[{i}]"),
                inputs_digest: digest,
                lhs: format!("{s:.6}"),
                rhs: format!("{ceiling:.6}"),
                relation: "<=".into(),
                pass: s <= ceiling,
                hard: enforce,
            });
        }
    }
    report.rows = rows;
    Ok(())
}
