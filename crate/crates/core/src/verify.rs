//! Named verification suites: grid sweeps of the crate's exact identities,
//! each reporting pass/fail per check with a concrete counterexample on
//! failure. The CLI `verify` command is a thin shell over this module.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::{
    bernoulli, binomial, eulerian, factorial, power_sum, power_sum_bernoulli, rational_to_f64,
    BernoulliTable, BigRational, EulerianTable,
};
use crate::measure::{
    affine_mass, convolve, cut_measure, full_distribution, riffle_oracle, class_distribution,
    Family, MeasureSpec,
};
use crate::perm::{permutations, Permutation};
use crate::sim::sample_inverse_law;
use crate::tv::{tv_ac_upper, tv_generic, tv_rc_expr1, tv_rc_expr2, tv_rc_expr3, tv_rc_lower,
    tv_rc_upper};

/// The suites `verify --suite <name>` can run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Worpitzky,
    Eulerian,
    Bernoulli,
    CyclicDescents,
    Normalization,
    Closure,
    TvEqualities,
    Bounds,
    Oracle,
    AffinePhysical,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Worpitzky,
        Suite::Eulerian,
        Suite::Bernoulli,
        Suite::CyclicDescents,
        Suite::Normalization,
        Suite::Closure,
        Suite::TvEqualities,
        Suite::Bounds,
        Suite::Oracle,
        Suite::AffinePhysical,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Worpitzky => "worpitzky",
            Suite::Eulerian => "eulerian",
            Suite::Bernoulli => "bernoulli",
            Suite::CyclicDescents => "cyclic-descents",
            Suite::Normalization => "normalization",
            Suite::Closure => "closure",
            Suite::TvEqualities => "tv-equalities",
            Suite::Bounds => "bounds",
            Suite::Oracle => "oracle",
            Suite::AffinePhysical => "affine-physical",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .iter()
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::domain(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// Knobs shared by the suites; `max_n`/`max_k` default per suite when unset.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max_n: Option<u32>,
    pub max_k: Option<u64>,
    pub enum_limit: u32,
    pub word_limit: u64,
    pub seed: u64,
    pub threads: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: None,
            max_k: None,
            enum_limit: crate::DEFAULT_ENUM_LIMIT,
            word_limit: crate::DEFAULT_WORD_LIMIT,
            seed: 1,
            threads: 1,
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Grid summary on success, first counterexample on failure.
    pub detail: String,
}

impl Check {
    fn passed(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass: true, detail: detail.into() }
    }

    fn failed(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass: false, detail: detail.into() }
    }

    fn from_counterexample(
        name: impl Into<String>,
        grid: impl Into<String>,
        counterexample: Option<String>,
    ) -> Self {
        match counterexample {
            None => Check::passed(name, grid),
            Some(ce) => Check::failed(name, ce),
        }
    }
}

/// All check outcomes of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Runs one suite under the given configuration.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport, Error> {
    let checks = match suite {
        Suite::Worpitzky => worpitzky(cfg),
        Suite::Eulerian => eulerian_suite(cfg)?,
        Suite::Bernoulli => bernoulli_suite(cfg),
        Suite::CyclicDescents => cyclic_descents(cfg)?,
        Suite::Normalization => normalization(cfg)?,
        Suite::Closure => closure(cfg)?,
        Suite::TvEqualities => tv_equalities(cfg)?,
        Suite::Bounds => bounds(cfg)?,
        Suite::Oracle => oracle(cfg)?,
        Suite::AffinePhysical => affine_physical(cfg)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn worpitzky(cfg: &VerifyConfig) -> Vec<Check> {
    let max_n = cfg.max_n.unwrap_or(10);
    let max_k = cfg.max_k.unwrap_or(20);
    let mut ce = None;
    for n in 1..=max_n {
        let table = EulerianTable::new(n);
        for k in 0..=max_k {
            let mut sum = BigInt::zero();
            for j in 1..=n as i64 {
                sum += table.get(j) * binomial(k + n as u64 - j as u64, n as i64);
            }
            if sum != BigInt::from(k).pow(n) {
                ce.get_or_insert(format!("n={n} k={k}: sum {sum} != {k}^{n}"));
            }
        }
    }
    vec![Check::from_counterexample(
        "worpitzky-identity",
        format!("k^n = sum_j A(n,j) C(k+n-j, n) for n <= {max_n}, k <= {max_k}"),
        ce,
    )]
}

fn eulerian_suite(cfg: &VerifyConfig) -> Result<Vec<Check>, Error> {
    let max_n = cfg.max_n.unwrap_or(10);
    let mut checks = Vec::new();

    let mut ce = None;
    for n in 1..=max_n {
        let table = EulerianTable::new(n);
        let mut sum = BigInt::zero();
        for d in 1..=n as i64 {
            sum += table.get(d);
        }
        if sum != factorial(n as u64) {
            ce.get_or_insert(format!("n={n}: row sum {sum} != {n}!"));
        }
    }
    checks.push(Check::from_counterexample(
        "row-sums",
        format!("sum_d A(n,d) = n! for n <= {max_n}"),
        ce,
    ));

    let mut ce = None;
    for n in 1..=max_n {
        let table = EulerianTable::new(n);
        for d in 1..=n as i64 {
            if table.get(d) != table.get(n as i64 + 1 - d) {
                ce.get_or_insert(format!("n={n} d={d}: A(n,d) != A(n,n+1-d)"));
            }
            if table.get(d) < BigInt::one() {
                ce.get_or_insert(format!("n={n} d={d}: entry below 1"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "symmetry",
        format!("A(n,d) = A(n,n+1-d) and A(n,d) >= 1 for n <= {max_n}"),
        ce,
    ));

    let enum_n = max_n.min(7).min(cfg.enum_limit);
    let mut ce = None;
    for n in 1..=enum_n {
        let mut counts = vec![BigInt::zero(); n as usize];
        for p in permutations(n, cfg.enum_limit)? {
            counts[p.descents() as usize] += 1;
        }
        for d in 1..=n as i64 {
            if eulerian(n, d) != counts[(d - 1) as usize] {
                ce.get_or_insert(format!("n={n} d={d}: table disagrees with enumeration"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "enumeration-crosscheck",
        format!("descent census of S_n matches the table for n <= {enum_n}"),
        ce,
    ));

    Ok(checks)
}

fn bernoulli_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let max_a = cfg.max_n.unwrap_or(20) as u64;
    let mut checks = Vec::new();

    let table = BernoulliTable::up_to(4);
    let named = [
        (0u32, BigRational::one()),
        (1, crate::exact::ratio(-1, 2)),
        (2, crate::exact::ratio(1, 6)),
        (3, BigRational::zero()),
        (4, crate::exact::ratio(-1, 30)),
    ];
    let ce = named
        .iter()
        .find(|(i, want)| table.get(*i) != want)
        .map(|(i, want)| format!("B_{i} != {want}"));
    checks.push(Check::from_counterexample("known-values", "B_0..B_4 as defined", ce));

    let mut ce = None;
    for a in 1..=max_a {
        for n in 1..=12u64 {
            if power_sum_bernoulli(a, n) != BigRational::from(power_sum(a, n)) {
                ce.get_or_insert(format!("a={a} n={n}: expansion disagrees with direct sum"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "power-sum-expansion",
        format!("Bernoulli expansion equals the direct sum for a <= {max_a}, n <= 12"),
        ce,
    ));

    let table = BernoulliTable::up_to(60);
    let mut prev: Option<BigRational> = None;
    let mut ce = None;
    for t in 1..=30u32 {
        let sign = if t % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let term = BigRational::from(sign) * table.get(2 * t)
            / BigRational::from(factorial(2 * t as u64 - 1));
        if term <= BigRational::zero() {
            ce.get_or_insert(format!("t={t}: term not positive"));
        }
        if let Some(p) = &prev {
            if &term >= p {
                ce.get_or_insert(format!("t={t}: sequence not strictly decreasing"));
            }
        }
        prev = Some(term);
    }
    checks.push(Check::from_counterexample(
        "alternating-ratio-decreasing",
        "(-1)^(t-1) B_2t / (2t-1)! positive and strictly decreasing for t <= 30",
        ce,
    ));

    checks
}

fn cyclic_descents(cfg: &VerifyConfig) -> Result<Vec<Check>, Error> {
    let max_n = cfg.max_n.unwrap_or(8).min(cfg.enum_limit);
    let mut checks = Vec::new();

    let mut ce = None;
    for n in 2..=max_n {
        let table = EulerianTable::new(n - 1);
        let mut joint: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for p in permutations(n, cfg.enum_limit)? {
            *joint.entry((p.cyclic_descents(), p.descents())).or_insert(0) += 1;
        }
        for d in 1..n {
            let lower = joint.get(&(d, d - 1)).copied().unwrap_or(0);
            let upper = joint.get(&(d, d)).copied().unwrap_or(0);
            if BigInt::from(lower) != BigInt::from(d) * table.get(d as i64) {
                ce.get_or_insert(format!(
                    "n={n} cd={d}: {lower} permutations with d = cd-1, expected d*A(n-1,d)"
                ));
            }
            if BigInt::from(upper) != BigInt::from(n - d) * table.get(d as i64) {
                ce.get_or_insert(format!(
                    "n={n} cd={d}: {upper} permutations with d = cd, expected (n-d)*A(n-1,d)"
                ));
            }
            let total = lower + upper;
            if BigInt::from(total) != BigInt::from(n) * table.get(d as i64) {
                ce.get_or_insert(format!("n={n} cd={d}: class size {total} != n*A(n-1,d)"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "joint-counts",
        format!("(cd, d) census matches d*A(n-1,d) / (n-d)*A(n-1,d) for n <= {max_n}"),
        ce,
    ));

    let mut ce = None;
    for n in 2..=max_n.min(7) {
        for p in permutations(n, cfg.enum_limit)? {
            let cd = p.cyclic_descents();
            for j in 1..=n {
                let shifted = p.compose(&Permutation::rotation(n, j));
                if shifted.cyclic_descents() != cd {
                    ce.get_or_insert(format!("n={n} p={p} j={j}: cd changed under rotation"));
                }
            }
        }
    }
    checks.push(Check::from_counterexample(
        "rotation-invariance",
        format!("cd constant on cyclic shift classes for n <= {}", max_n.min(7)),
        ce,
    ));

    Ok(checks)
}

fn normalization(cfg: &VerifyConfig) -> Result<Vec<Check>, Error> {
    let max_n = cfg.max_n.unwrap_or(7).min(cfg.enum_limit);
    let max_k = cfg.max_k.unwrap_or(12);
    let mut checks = Vec::new();
    for family in [Family::Riffle, Family::CutRiffle, Family::Affine, Family::Uniform] {
        let mut ce = None;
        for n in 2..=max_n {
            for k in [1u64, 2, 3, 4, 6, 12].into_iter().filter(|&k| k <= max_k) {
                let spec = MeasureSpec::new(family, n, k)?;
                let total = full_distribution(&spec, cfg.enum_limit)?.total();
                if total != BigRational::one() {
                    ce.get_or_insert(format!("{spec}: total {total} != 1"));
                }
            }
        }
        checks.push(Check::from_counterexample(
            format!("{family}-normalizes"),
            format!("masses sum to exactly 1 for 2 <= n <= {max_n}, k in {{1,2,3,4,6,12}}"),
            ce,
        ));
    }
    Ok(checks)
}

fn closure(cfg: &VerifyConfig) -> Result<Vec<Check>, Error> {
    let rc_max = cfg.max_n.unwrap_or(6).min(cfg.enum_limit);
    let a_max = cfg.max_n.unwrap_or(5).min(6).min(cfg.enum_limit);
    let mut checks = Vec::new();
    for family in [Family::Riffle, Family::CutRiffle, Family::Affine] {
        let top = if family == Family::Affine { a_max } else { rc_max };
        let mut ce = None;
        for n in 2..=top {
            for (k1, k2) in [(2u64, 2u64), (2, 3), (3, 2), (3, 3)] {
                let a = full_distribution(&MeasureSpec::new(family, n, k1)?, cfg.enum_limit)?;
                let b = full_distribution(&MeasureSpec::new(family, n, k2)?, cfg.enum_limit)?;
                let product = full_distribution(
                    &MeasureSpec::new(family, n, k1 * k2)?,
                    cfg.enum_limit,
                )?;
                if convolve(&a, &b) != product {
                    ce.get_or_insert(format!("n={n} k1={k1} k2={k2}: convolution disagrees"));
                }
            }
        }
        checks.push(Check::from_counterexample(
            format!("{family}-closed-under-iteration"),
            format!("F_k1 * F_k2 = F_k1k2 for n <= {top}, k in {{2,3}}"),
            ce,
        ));
    }
    Ok(checks)
}

fn tv_equalities(cfg: &VerifyConfig) -> Result<Vec<Check>, Error> {
    let max_n = cfg.max_n.unwrap_or(10);
    let max_k = cfg.max_k.unwrap_or(64);
    let grid: Vec<u64> = [2u64, 3, 4, 5, 8, 16, 64].into_iter().filter(|&k| k <= max_k).collect();
    let mut checks = Vec::new();

    let mut ce = None;
    for n in 2..=max_n {
        for &k in &grid {
            let e1 = tv_rc_expr1(n, k);
            let e2 = tv_rc_expr2(n, k);
            let e3 = tv_rc_expr3(n, k);
            if e1 != e2 {
                ce.get_or_insert(format!("n={n} k={k}: expr1 = {e1} but expr2 = {e2}"));
            }
            if e1 != e3 {
                ce.get_or_insert(format!("n={n} k={k}: expr1 = {e1} but expr3 = {e3}"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "triple-equality",
        format!("expr1 = expr2 = expr3 for 2 <= n <= {max_n}, k in {:?}", grid),
        ce,
    ));

    let brute_n = max_n.min(7).min(cfg.enum_limit);
    let mut ce = None;
    for n in 2..=brute_n {
        for k in [2u64, 3, 4, 8].into_iter().filter(|&k| k <= max_k) {
            let r = full_distribution(&MeasureSpec::new(Family::Riffle, n, k)?, cfg.enum_limit)?;
            let c =
                full_distribution(&MeasureSpec::new(Family::CutRiffle, n, k)?, cfg.enum_limit)?;
            let brute = tv_generic(&r, &c);
            if brute != tv_rc_expr1(n, k) {
                ce.get_or_insert(format!("n={n} k={k}: enumeration gives {brute}"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "expr1-matches-enumeration",
        format!("expr1 equals brute-force total variation for n <= {brute_n}, k in {{2,3,4,8}}"),
        ce,
    ));

    Ok(checks)
}

fn bounds(cfg: &VerifyConfig) -> Result<Vec<Check>, Error> {
    let max_n = cfg.max_n.unwrap_or(10);
    let max_k = cfg.max_k.unwrap_or(64);
    let mut checks = Vec::new();

    let mut ce = None;
    for n in 2..=max_n {
        for k in [2u64, 3, 4, 5, 8, 16, 64].into_iter().filter(|&k| k <= max_k) {
            if tv_rc_expr1(n, k) > tv_rc_upper(n, k) {
                ce.get_or_insert(format!("n={n} k={k}: distance exceeds n/4k"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "upper-bound",
        format!("expr1 <= n/(4k) for n <= {max_n} on the k grid"),
        ce,
    ));

    let lower_top = max_n.min(8).max(4);
    let mut ce = None;
    for n in 4..=lower_top {
        for k in n as u64..=max_k {
            if tv_rc_lower(n, k) > tv_rc_expr1(n, k) {
                ce.get_or_insert(format!("n={n} k={k}: stated lower bound exceeds the distance"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "lower-bound",
        format!("(6/25)(n-1)/k + (n+1)B_n/k^(n-1) <= expr1 for 4 <= n <= {lower_top}, n <= k <= {max_k}"),
        ce,
    ));

    let affine_top = max_n.min(6).min(cfg.enum_limit);
    let mut ce = None;
    for n in 4..=affine_top {
        for k in [n as u64, 2 * n as u64, 4 * n as u64] {
            let a = full_distribution(&MeasureSpec::new(Family::Affine, n, k)?, cfg.enum_limit)?;
            let c =
                full_distribution(&MeasureSpec::new(Family::CutRiffle, n, k)?, cfg.enum_limit)?;
            let tv = rational_to_f64(&tv_generic(&a, &c));
            let bound = tv_ac_upper(n, k);
            if tv >= bound {
                ce.get_or_insert(format!("n={n} k={k}: tv {tv} not below bound {bound}"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "affine-cut-upper-bound",
        format!("||affine - cut-riffle|| < n(2n/ek)^(n/2) for 4 <= n <= {affine_top}, k in {{n,2n,4n}}"),
        ce,
    ));

    Ok(checks)
}

fn oracle(cfg: &VerifyConfig) -> Result<Vec<Check>, Error> {
    let max_n = cfg.max_n.unwrap_or(6).min(cfg.enum_limit);
    let mut checks = Vec::new();

    let riffle_k = cfg.max_k.unwrap_or(3).min(3);
    let mut ce = None;
    for n in 2..=max_n {
        for k in 1..=riffle_k {
            let oracle = riffle_oracle(n, k, cfg.word_limit)?;
            let closed =
                full_distribution(&MeasureSpec::new(Family::Riffle, n, k)?, cfg.enum_limit)?;
            if oracle != closed {
                ce.get_or_insert(format!("n={n} k={k}: digit-word law disagrees"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "riffle-digit-words",
        format!("k^n digit enumeration equals the closed form for n <= {max_n}, k <= {riffle_k}"),
        ce,
    ));

    let cut_k = cfg.max_k.unwrap_or(4).min(4);
    let mut ce = None;
    for n in 2..=max_n {
        for k in 1..=cut_k {
            let r = full_distribution(&MeasureSpec::new(Family::Riffle, n, k)?, cfg.enum_limit)?;
            let c =
                full_distribution(&MeasureSpec::new(Family::CutRiffle, n, k)?, cfg.enum_limit)?;
            let cut = cut_measure(n, cfg.enum_limit)?;
            if convolve(&cut, &r) != c {
                ce.get_or_insert(format!("n={n} k={k}: cut * riffle disagrees"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "cut-riffle-convolution",
        format!("cut measure convolved with riffle equals cut-riffle for n <= {max_n}, k <= {cut_k}"),
        ce,
    ));

    // same measure on conjugacy classes in both orders
    let mut ce = None;
    for n in 2..=max_n {
        for k in [2u64, 3] {
            let r = full_distribution(&MeasureSpec::new(Family::Riffle, n, k)?, cfg.enum_limit)?;
            let cut = cut_measure(n, cfg.enum_limit)?;
            let ab = class_distribution(&convolve(&r, &cut));
            let ba = class_distribution(&convolve(&cut, &r));
            if ab != ba {
                ce.get_or_insert(format!("n={n} k={k}: class distributions differ"));
            }
        }
    }
    checks.push(Check::from_counterexample(
        "class-distribution-commutes",
        format!("riffle-then-cut and cut-then-riffle match on conjugacy classes for n <= {max_n}"),
        ce,
    ));

    Ok(checks)
}

fn affine_physical(cfg: &VerifyConfig) -> Result<Vec<Check>, Error> {
    let max_deck = cfg.max_n.unwrap_or(6).min(cfg.enum_limit);
    let samples = 200_000u64;
    let mut checks = Vec::new();
    for deck in (2..=max_deck).step_by(2) {
        let spec = MeasureSpec::new(Family::Affine, deck, 2)?;
        let exact = full_distribution(&spec, cfg.enum_limit)?;
        let counts = sample_inverse_law(&spec, samples, cfg.seed);
        let total = samples as f64;
        let mut ce = None;
        for (rank, mass) in exact.iter() {
            let p = rational_to_f64(mass);
            let count = counts.get(&rank).copied().unwrap_or(0);
            if p == 0.0 {
                if count > 0 {
                    ce.get_or_insert(format!(
                        "deck={deck} rank={rank}: impossible permutation drawn {count} times"
                    ));
                }
            } else if p < 1.0 {
                let sigma = (count as f64 - total * p) / (total * p * (1.0 - p)).sqrt();
                if sigma.abs() > 4.0 {
                    ce.get_or_insert(format!(
                        "deck={deck} rank={rank}: deviation {sigma:.2} sigma"
                    ));
                }
            }
        }
        checks.push(Check::from_counterexample(
            format!("physical-law-deck-{deck}"),
            format!("{samples} draws within 4 sigma of the affine 2-shuffle masses (seed {})",
                cfg.seed),
            ce,
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        // shrunken grids keep this test fast; full grids run in the
        // acceptance suite and through the CLI
        let cfg = VerifyConfig {
            max_n: Some(5),
            max_k: Some(8),
            ..VerifyConfig::default()
        };
        for suite in [
            Suite::Worpitzky,
            Suite::Eulerian,
            Suite::Bernoulli,
            Suite::CyclicDescents,
            Suite::Normalization,
            Suite::Closure,
            Suite::TvEqualities,
            Suite::Bounds,
            Suite::Oracle,
        ] {
            let report = run_suite(suite, &cfg).unwrap();
            assert!(report.passed(), "{}: {:?}", suite, report.checks);
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn affine_physical_suite_passes() {
        let cfg = VerifyConfig { max_n: Some(4), ..VerifyConfig::default() };
        let report = run_suite(Suite::AffinePhysical, &cfg).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.checks.len(), 2); // decks 2 and 4
    }

    #[test]
    fn report_json_shape() {
        let cfg = VerifyConfig { max_n: Some(3), max_k: Some(4), ..VerifyConfig::default() };
        let report = run_suite(Suite::Worpitzky, &cfg).unwrap();
        let json = report.to_json();
        assert_eq!(json["suite"], "worpitzky");
        assert_eq!(json["passed"], true);
        assert!(json["checks"].as_array().unwrap().len() == 1);
    }
}
