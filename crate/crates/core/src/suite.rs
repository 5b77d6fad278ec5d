//! The acceptance suite: one aggregated report per criterion.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{project, separate, AlgebraElement, Gen};
use crate::classical::{ClassicalElement, ClassicalEngine, HallTree, LoopGen};
use crate::coeffs::QRational;
use crate::error::Result;
use crate::report::Report;
use crate::representations::{
    bethe_check, check_factorization, check_gauss_normalization, check_module_antisymmetry, reconstruct_spin_one_pair, validate_relations, Bethe,
    EvalModule, Factorization, ModeWindow,
};
use crate::roots::{AffineCartanData, NormalOrdering};
use crate::weight::{check_antisymmetry, check_classical, check_closed_form, check_q1_limit, classical_weight, default_ceiling, universal_weight, OrderedMultiset};

/// Mode window used for relation checks unless told otherwise.
pub const DEFAULT_MODE_WINDOW: ModeWindow = ModeWindow { lo: -4, hi: 4 };

/// Per-variable ceiling step for the Bethe comparison.
pub const BETHE_STEP: i64 = 12;

#[derive(Clone, Copy, Debug)]
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub limit: Option<Duration>,
}

pub const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, name: "closed-form equivalence", limit: Some(Duration::from_secs(10)) },
    Criterion { id: 2, name: "projection identities", limit: Some(Duration::from_secs(1)) },
    Criterion { id: 3, name: "antisymmetry and regularity", limit: Some(Duration::from_secs(60)) },
    Criterion { id: 4, name: "classical formula", limit: Some(Duration::from_secs(60)) },
    Criterion { id: 5, name: "q = 1 limit", limit: None },
    Criterion { id: 6, name: "tensor factorization", limit: Some(Duration::from_secs(300)) },
    Criterion { id: 7, name: "Bethe identity", limit: Some(Duration::from_secs(120)) },
    Criterion { id: 8, name: "module validation", limit: Some(Duration::from_secs(30)) },
    Criterion { id: 9, name: "root combinatorics", limit: Some(Duration::from_secs(5)) },
    Criterion { id: 10, name: "rational reconstruction", limit: None },
];

fn labelled(label: impl std::fmt::Display, mut r: Report) -> Report {
    if let Some(msg) = r.first_failure.take() {
        r.first_failure = Some(format!("{label}: {msg}"));
    }
    r
}

/// A check that must fail; a pass becomes a failure of the suite.
fn negative_control(label: &str, r: Report) -> Report {
    if r.passed() {
        Report::fail(r.checked_coefficients, format!("{label}: negative control passed"))
    } else {
        Report::pass(0).with_note(format!("{label}: negative control fails as expected"))
    }
}

fn expect(label: &str, ok: bool) -> Report {
    if ok {
        Report::pass(1)
    } else {
        Report::fail(1, label.to_string())
    }
}

pub fn closed_form() -> Result<Report> {
    let ceiling = default_ceiling(2);
    let w = universal_weight(&OrderedMultiset::uniform(2), &ceiling)?;
    let f11 = vec![Gen::F(1), Gen::F(1)];
    let a = QRational::q_pow(-2) - QRational::one();
    let spot = |e: [i64; 2], c: QRational| -> Result<Report> {
        Ok(expect(&format!("coefficient {e:?}"), w.coefficient(&e)? == Some(&AlgebraElement::term(f11.clone(), c))))
    };
    Ok(Report::all([check_closed_form(&ceiling)?, spot([-2, 0], a.clone())?, spot([-3, 1], &QRational::q_pow(-2) * &a)?]))
}

fn random_element(rng: &mut StdRng) -> AlgebraElement {
    let mut x = AlgebraElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let w: Vec<Gen> = (0..rng.gen_range(0..=4))
            .map(|_| if rng.gen_bool(0.7) { Gen::F(rng.gen_range(-3..=3)) } else { Gen::Psi(rng.gen_range(0..=2)) })
            .collect();
        x.add_term(w, QRational::from_int(rng.gen_range(1..=5)));
    }
    x
}

pub fn projection_identities() -> Result<Report> {
    let e = AlgebraElement::parse;
    let mut reports = vec![
        expect("f[1]f[0] separates to q^-2 f[0]f[1]", separate(&e("f[1] f[0]")?)? == AlgebraElement::term(vec![Gen::F(0), Gen::F(1)], QRational::q_pow(-2))),
        expect(
            "P(f[2]f[0]) = (q^-2 - 1) f[1]f[1]",
            project(&e("f[2] f[0]")?)? == AlgebraElement::term(vec![Gen::F(1), Gen::F(1)], QRational::q_pow(-2) - QRational::one()),
        ),
    ];
    let mut rng = StdRng::seed_from_u64(7);
    for k in 0..50 {
        let b = rng.gen_range(-3..=0);
        let x = random_element(&mut rng);
        let y = AlgebraElement::word(vec![Gen::F(b)]).concat(&x);
        reports.push(expect(&format!("sample {k}: P(f[{b}]·({x})) is nonzero"), project(&y)?.is_zero()));
    }
    Ok(Report::all(reports))
}

pub fn antisymmetry() -> Result<Report> {
    let mut out = Vec::new();
    for n in 2..=3 {
        out.push(labelled(format!("n={n}"), check_antisymmetry(n, &default_ceiling(n))?));
    }
    Ok(Report::all(out))
}

pub fn classical() -> Result<Report> {
    let mut out = Vec::new();
    for palette in [vec![1], vec![1, 2]] {
        for n in 1..=3u32 {
            for k in 0..palette.len().pow(n) {
                let colors: Vec<usize> = (0..n).map(|j| palette[k / palette.len().pow(j) % palette.len()]).collect();
                out.push(labelled(format!("colors {colors:?}"), check_classical(&colors, &default_ceiling(colors.len()))?));
            }
        }
    }
    let engine = ClassicalEngine::new(&[1, 2], 2);
    let w = classical_weight(&engine, &OrderedMultiset::colored(&[1, 2]), &default_ceiling(2))?;
    let f12 = engine.basis.find(HallTree::Pair(0, 1)).expect("bracket of the two letters");
    let expected = ClassicalElement::word(vec![LoopGen { hall: f12, mode: 1 }]);
    out.push(expect("coefficient of t1^-2 t2 is f12[1]", w.coefficient(&[-2, 1])? == Some(&expected)));
    Ok(Report::all(out))
}

pub fn q1_limit() -> Result<Report> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push(labelled(format!("n={n}"), check_q1_limit(n, &default_ceiling(n))?));
    }
    Ok(Report::all(out))
}

pub fn shipped_modules() -> Vec<EvalModule> {
    vec![EvalModule::trivial(), EvalModule::spin_half(), EvalModule::spin_one()]
}

fn module_pairs() -> Vec<(EvalModule, EvalModule)> {
    let ms = [EvalModule::spin_half(), EvalModule::spin_one()];
    ms.iter().flat_map(|a| ms.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

pub fn factorization() -> Result<Report> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for (a, b) in module_pairs() {
            let r = check_factorization(&a, &b, n, &default_ceiling(n), Factorization::Full)?;
            out.push(labelled(format!("{:?}⊗{:?}, n={n}", a.spin(), b.spin()), r));
        }
    }
    let bad = check_factorization(&EvalModule::spin_one(), &EvalModule::spin_half(), 2, &default_ceiling(2), Factorization::WithoutExchange)?;
    out.push(negative_control("without exchange factor", bad));
    Ok(Report::all(out))
}

pub fn bethe() -> Result<Report> {
    let m = EvalModule::spin_one();
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push(labelled(format!("n={n}"), bethe_check(&m, n, BETHE_STEP, Bethe::Full)?));
    }
    out.push(negative_control("without prefactor", bethe_check(&m, 2, BETHE_STEP, Bethe::WithoutPrefactor)?));
    Ok(Report::all(out))
}

pub fn module_validation() -> Result<Report> {
    let mut out = Vec::new();
    for m in shipped_modules() {
        out.push(labelled(format!("{:?}", m.spin()), validate_relations(&m, DEFAULT_MODE_WINDOW)));
        if m.lowering_capacity() > 0 {
            out.push(labelled(format!("{:?} Gauss normalization", m.spin()), check_gauss_normalization(&m, 8)?));
            out.push(labelled(format!("{:?} antisymmetry", m.spin()), check_module_antisymmetry(&m, &default_ceiling(2))?));
        }
    }
    let broken = EvalModule::spin_one().with_sign_flip(crate::representations::Current::PsiPlus, 1);
    out.push(negative_control("flipped psi+[1]", validate_relations(&broken, DEFAULT_MODE_WINDOW)));
    Ok(Report::all(out))
}

pub fn roots() -> Result<Report> {
    let mut out = Vec::new();
    for (name, word) in [("A1~", vec![0, 1]), ("A2~", vec![0, 1, 2, 1])] {
        let cartan = AffineCartanData::from_name(name)?;
        let ord = NormalOrdering::build(&cartan, &word, 40)?;
        out.push(labelled(format!("{name} ord1"), ord.verify_ord1(8)));
        for c in 1..=2 {
            out.push(labelled(format!("{name} shift c={c}"), ord.verify_shift_correspondence(c, 6)?));
        }
    }
    Ok(Report::all(out))
}

pub fn reconstruction() -> Result<Report> {
    let rec = reconstruct_spin_one_pair(&default_ceiling(2), 20)?;
    Ok(rec.report.with_note(format!("{} surplus coefficients", rec.surplus)))
}

pub fn run(id: usize) -> Result<Report> {
    match id {
        1 => closed_form(),
        2 => projection_identities(),
        3 => antisymmetry(),
        4 => classical(),
        5 => q1_limit(),
        6 => factorization(),
        7 => bethe(),
        8 => module_validation(),
        9 => roots(),
        10 => reconstruction(),
        _ => Err(crate::error::Error::Invalid(format!("no criterion {id}"))),
    }
}

/// Runs a criterion and reports the elapsed time.
pub fn run_timed(id: usize) -> (Result<Report>, Duration) {
    let start = Instant::now();
    let r = run(id);
    (r, start.elapsed())
}
