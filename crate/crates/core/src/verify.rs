//! Named checks, run by name with a shared set of parameters.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{
    combi_lin_check, g1_satisfies_identity, initial_g, lagrange_check, lambda_expansion_check,
    m2_display_check, trivariate_check,
};
use crate::counting::{closed_labelled, closed_unlabelled, refined_polynomial};
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::report::{merge, CheckReport};
use crate::ring::{rat, rat_frac, Rat, Ring};
use crate::series::{
    closed_form_f11, closed_form_g1, closed_form_m1_double_sum, closed_form_m1_nonneg,
    solve_functional_equation, solver_vs_oracle, substitute_t_of_z, transformed_equation_check,
    transformed_series, verify_q_specialization, ZSeries,
};
use crate::tamari::{check_decomposition_bijection, check_sublattice_embedding, enumerate_intervals, TamariPoset};
use crate::urat::URat;

/// Parameters shared by all checks: `m`, poset size `n`, series order and vertex cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckParams {
    pub m: u32,
    pub n: usize,
    pub order: usize,
    pub cap: usize,
}

pub const CHECK_NAMES: &[&str] = &[
    "counts",
    "embedding",
    "bijection",
    "solver-oracle",
    "q-analogue",
    "theorem-main",
    "theorem-m1",
    "transformed-equation",
    "trivariate",
    "m2-display",
    "lambda",
    "lagrange",
    "combi-lin",
    "g1-identity",
];

/// Whether a check applies at this `m` (some are specific to m = 1 or m = 2).
pub fn applies(name: &str, m: u32) -> bool {
    match name {
        "theorem-m1" => m == 1,
        "m2-display" => m == 2,
        "combi-lin" => m <= 2,
        _ => true,
    }
}

pub fn run_check(name: &str, p: &CheckParams) -> Result<CheckReport> {
    let CheckParams { m, n, order, cap } = *p;
    match name {
        "counts" => counts(m, n, cap),
        "embedding" => {
            let r = check_sublattice_embedding(m, n)?;
            Ok(bool_report("embedding", m, n, r.ok, &r.failures))
        }
        "bijection" => {
            let r = check_decomposition_bijection(n)?;
            Ok(bool_report("bijection", 1, n, r.ok, &r.failures))
        }
        "solver-oracle" => {
            let plain = solver_vs_oracle(m, n, false, cap)?;
            let withq = solver_vs_oracle(m, n, true, cap)?;
            Ok(merge("solver-oracle", m, n, &[plain, withq]))
        }
        "q-analogue" => Ok(verify_q_specialization(m, n, cap)?.report),
        "theorem-main" => theorem_main(m, order),
        "theorem-m1" => theorem_m1(order),
        "transformed-equation" => transformed_equation_check(m, order),
        "trivariate" => trivariate_check(m, order),
        "m2-display" => m2_display_check(order),
        "lambda" => lambda_suite(m, order),
        "lagrange" => lagrange_suite(100, 0x7a3a_0001),
        "combi-lin" => combi_lin_check(m, order),
        "g1-identity" => g1_satisfies_identity(m, order),
        _ => Err(Error::Mismatch(format!("unknown check {name}"))),
    }
}

fn bool_report(name: &str, m: u32, n: usize, ok: bool, failures: &[String]) -> CheckReport {
    if ok {
        CheckReport::pass(name, m, n)
    } else {
        CheckReport::fail(name, m, n, None, failures.first().cloned().unwrap_or_default())
    }
}

/// Brute-force interval and labelled counts against the closed forms, `1 <= k <= n`.
fn counts(m: u32, n: usize, cap: usize) -> Result<CheckReport> {
    for k in 1..=n {
        let poset = TamariPoset::build_capped(m, k, cap)?;
        let unlabelled = enumerate_intervals(&poset).len();
        if num_bigint::BigInt::from(unlabelled) != closed_unlabelled(m, k) {
            return Ok(CheckReport::fail("counts", m, n, Some(k), "interval count"));
        }
        if refined_polynomial(&poset, false).labelled_total() != closed_labelled(m, k) {
            return Ok(CheckReport::fail("counts", m, n, Some(k), "labelled count"));
        }
    }
    Ok(CheckReport::pass("counts", m, n))
}

/// The solver at `y = 1` after the change of variables against the closed
/// form `G_1`, and `F(t;1,1)` against `(1 - mz) e^{(m+1)z}`.
pub fn theorem_main(m: u32, order: usize) -> Result<CheckReport> {
    let f = solve_functional_equation(m, order, false);
    let g = transformed_series(&f, m, order)?.map(|c| c.eval(Var::Y, &rat(1)));
    let g1 = closed_form_g1(m, order)?;
    let first = CheckReport::from_mismatch("theorem-main-g1", m, order, g.first_difference(&g1));
    let f11 = substitute_t_of_z(&f, m, order)?.map(|c| c.eval(Var::X, &rat(1)).eval(Var::Y, &rat(1)));
    let second = CheckReport::from_mismatch(
        "theorem-main-f11",
        m,
        order,
        f11.first_difference(&closed_form_f11(m, order)),
    );
    Ok(merge("theorem-main", m, order, &[first, second]))
}

/// The m = 1 pipeline against the double-sum and the non-negative-part forms.
pub fn theorem_m1(order: usize) -> Result<CheckReport> {
    let g = transformed_series(&solve_functional_equation(1, order, false), 1, order)?;
    let a = CheckReport::from_mismatch(
        "theorem-m1-double-sum",
        1,
        order,
        g.first_difference(&closed_form_m1_double_sum(order)),
    );
    let b = CheckReport::from_mismatch(
        "theorem-m1-nonneg",
        1,
        order,
        g.first_difference(&closed_form_m1_nonneg(order)),
    );
    Ok(merge("theorem-m1", 1, order, &[a, b]))
}

/// The three inputs used for the iteration lemma: `1`, `u^2` and `(1+u) e^{-mzu}`.
pub fn lambda_inputs(m: u32, order: usize) -> Vec<ZSeries<URat>> {
    vec![
        ZSeries::one(order),
        ZSeries::constant(URat::from_poly(Poly::var(Var::U).pow(2)), order),
        initial_g(m, order),
    ]
}

pub fn lambda_suite(m: u32, order: usize) -> Result<CheckReport> {
    let mut parts = Vec::new();
    for h in lambda_inputs(m, order) {
        for k in 0..=3 {
            parts.push(lambda_expansion_check(&h, k, order)?);
        }
    }
    Ok(merge("lambda", m, order, &parts))
}

/// Distinct nonzero rationals `p/q` with `|p| <= 40`, `1 <= q <= 9`.
pub fn random_points(rng: &mut StdRng, count: usize) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::with_capacity(count);
    while out.len() < count {
        let x = rat_frac(rng.gen_range(-40..=40), rng.gen_range(1..=9));
        if x != rat(0) && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// `trials` random tuples, cycling through `m = 1..=4`, each with a random `Q` of degree `< m`.
pub fn lagrange_suite(trials: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    for t in 0..trials {
        let m = t % 4 + 1;
        let xs = random_points(&mut rng, m + 1);
        let q: Vec<Rat> = (0..m).map(|_| rat_frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
        let r = lagrange_check(&xs, &q)?;
        if !r.ok() {
            return Ok(CheckReport::fail("lagrange", m as u32, trials, Some(t), format!("{r:?}")));
        }
    }
    Ok(CheckReport::pass("lagrange", 0, trials))
}
