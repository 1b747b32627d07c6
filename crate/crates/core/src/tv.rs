//! Exact total-variation distances between the shuffle measures.
//!
//! The distance between the riffle and cut-then-riffle measures has three
//! equivalent closed forms. The Eulerian form ([`tv_rc_expr1`]) is the
//! normative value in this crate: it is a sum of visibly nonnegative terms
//! and is validated directly against brute-force enumeration. The power-sum
//! form ([`tv_rc_expr2`]) and the Bernoulli form ([`tv_rc_expr3`]) are
//! derived rewritings kept as cross-checks; equality of all three on a grid
//! is part of the verification suites.
//!
//! Distances against the uniform distribution aggregate over descent or
//! cyclic-descent classes, which is exact because those measures are
//! functions of the corresponding statistic. That makes every `n = 52` row
//! in a mixing table an exact rational, no enumeration involved.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exact::{
    binomial, factorial, falling_factorial, format_sig15, power_sum, rational_to_f64,
    BernoulliTable, BigRational, EulerianTable,
};
use crate::measure::{
    cut_riffle_mass, full_distribution, riffle_mass, stat_distribution, uniform_mass, Family,
    FullDistribution, MeasureSpec, Statistic,
};

/// `(1/2) sum |p(x) - q(x)|` over all of `S_n`.
pub fn tv_generic(p: &FullDistribution, q: &FullDistribution) -> BigRational {
    assert_eq!(p.n(), q.n(), "total variation needs equal deck sizes");
    let mut sum = BigRational::zero();
    for ((_, pm), (_, qm)) in p.iter().zip(q.iter()) {
        sum += (pm - qm).abs();
    }
    sum / BigRational::from(BigInt::from(2))
}

/// Total variation between the marginal distributions of a statistic under
/// two measures. Always a lower bound for the full total variation.
pub fn tv_statistic(
    a: &MeasureSpec,
    b: &MeasureSpec,
    statistic: Statistic,
    limit: u32,
) -> Result<BigRational, Error> {
    assert_eq!(a.n, b.n, "total variation needs equal deck sizes");
    let da = stat_distribution(a, statistic, limit)?;
    let db = stat_distribution(b, statistic, limit)?;
    let values: std::collections::BTreeSet<u32> =
        da.masses().keys().chain(db.masses().keys()).copied().collect();
    let mut sum = BigRational::zero();
    for v in values {
        sum += (da.get(v) - db.get(v)).abs();
    }
    Ok(sum / BigRational::from(BigInt::from(2)))
}

/// Exact `||riffle - cut-riffle||` as the Eulerian sum
/// `(1 / k^n n) sum_{j=1}^{n-1} j (n-j) A(n-1, j) C(n+k-j-1, n-1)`.
///
/// This is the normative value of the distance throughout the crate.
pub fn tv_rc_expr1(n: u32, k: u64) -> BigRational {
    assert!(n >= 2 && k >= 1);
    let table = EulerianTable::new(n - 1);
    let mut sum = BigInt::zero();
    for j in 1..n as u64 {
        let weight = BigInt::from(j) * BigInt::from(n as u64 - j);
        sum += weight * table.get(j as i64) * binomial(n as u64 + k - j - 1, n as i64 - 1);
    }
    BigRational::new(sum, BigInt::from(k).pow(n) * BigInt::from(n))
}

/// The same distance written with partial power sums:
/// `(k^n - k^(n+1)/n + (n+1) sum_{s<k} s^n - k(n-1) sum_{s<k} s^(n-1)) / k^n`.
pub fn tv_rc_expr2(n: u32, k: u64) -> BigRational {
    assert!(n >= 2 && k >= 1);
    let kn = BigInt::from(k).pow(n);
    let mut numerator = BigRational::from(kn.clone());
    numerator -= BigRational::new(BigInt::from(k).pow(n + 1), BigInt::from(n));
    numerator += BigRational::from(BigInt::from(n as u64 + 1) * power_sum(k, n as u64));
    numerator -= BigRational::from(
        BigInt::from(k) * BigInt::from(n as u64 - 1) * power_sum(k, n as u64 - 1),
    );
    numerator / BigRational::from(kn)
}

/// The same distance again, as a Bernoulli-number expansion:
/// `sum_{t=1}^{n-2} (B_{t+1}/k^t) ((n)_t / t! + (n-1)_t / (t+1)!)
///  + (n+1) B_n / k^(n-1)`.
pub fn tv_rc_expr3(n: u32, k: u64) -> BigRational {
    assert!(n >= 2 && k >= 1);
    let bern = BernoulliTable::up_to(n);
    let mut sum = BigRational::zero();
    for t in 1..=n.saturating_sub(2) as u64 {
        let coeff = BigRational::new(falling_factorial(n as i64, t), factorial(t))
            + BigRational::new(falling_factorial(n as i64 - 1, t), factorial(t + 1));
        let scale = BigRational::new(BigInt::one(), BigInt::from(k).pow(t as u32));
        sum += bern.get(t as u32 + 1) * coeff * scale;
    }
    sum += bern.get(n)
        * BigRational::new(BigInt::from(n as u64 + 1), BigInt::from(k).pow(n - 1));
    sum
}

/// The upper bound `n / (4k)` for `||riffle - cut-riffle||`, exact.
pub fn tv_rc_upper(n: u32, k: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(4) * BigInt::from(k))
}

/// The lower bound `(6/25)(n-1)/k + (n+1) B_n / k^(n-1)` for
/// `||riffle - cut-riffle||`, exact. Stated only for `k >= n`, and sharp
/// only from `n = 4` up: at `n = 2, 3` the alternating tail it relies on is
/// too short and the "bound" actually exceeds the distance.
pub fn tv_rc_lower(n: u32, k: u64) -> BigRational {
    assert!(k >= n as u64, "the lower bound is only asserted for k >= n");
    let linear = BigRational::new(
        BigInt::from(6) * BigInt::from(n as u64 - 1),
        BigInt::from(25) * BigInt::from(k),
    );
    let tail = crate::exact::bernoulli(n)
        * BigRational::new(BigInt::from(n as u64 + 1), BigInt::from(k).pow(n - 1));
    linear + tail
}

/// The floating bound `n (2n / ek)^(n/2)` for `||affine - cut-riffle||`,
/// valid for `k >= n`. This is the one deliberately non-exact quantity in
/// the crate; it never feeds back into rational arithmetic.
pub fn tv_ac_upper(n: u32, k: u64) -> f64 {
    assert!(k >= n as u64, "the affine bound is only asserted for k >= n");
    let n = n as f64;
    let k = k as f64;
    n * (2.0 * n / (std::f64::consts::E * k)).powf(n / 2.0)
}

/// Exact `||riffle - uniform||` by descent-class aggregation, valid at any
/// deck size.
pub fn tv_riffle_uniform(n: u32, k: u64) -> BigRational {
    let table = EulerianTable::new(n);
    let u = uniform_mass(n);
    let mut sum = BigRational::zero();
    for d in 0..n {
        let diff = (riffle_mass(n, k, d) - &u).abs();
        sum += BigRational::from(table.get(d as i64 + 1)) * diff;
    }
    sum / BigRational::from(BigInt::from(2))
}

/// Exact `||cut-riffle - uniform||` by cyclic-descent-class aggregation,
/// valid at any deck size.
pub fn tv_cut_riffle_uniform(n: u32, k: u64) -> BigRational {
    assert!(n >= 2);
    let table = EulerianTable::new(n - 1);
    let u = uniform_mass(n);
    let mut sum = BigRational::zero();
    for cd in 1..n {
        let count = BigInt::from(n) * table.get(cd as i64);
        let diff = (cut_riffle_mass(n, k, cd) - &u).abs();
        sum += BigRational::from(count) * diff;
    }
    sum / BigRational::from(BigInt::from(2))
}

/// The reference measure a mixing table compares against.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MixReference {
    Uniform,
    Riffle,
    CutRiffle,
}

impl MixReference {
    pub fn name(&self) -> &'static str {
        match self {
            MixReference::Uniform => "uniform",
            MixReference::Riffle => "riffle",
            MixReference::CutRiffle => "cut-riffle",
        }
    }

    fn family(&self) -> Family {
        match self {
            MixReference::Uniform => Family::Uniform,
            MixReference::Riffle => Family::Riffle,
            MixReference::CutRiffle => Family::CutRiffle,
        }
    }
}

impl std::str::FromStr for MixReference {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "uniform" => Ok(MixReference::Uniform),
            "riffle" => Ok(MixReference::Riffle),
            "cut-riffle" => Ok(MixReference::CutRiffle),
            other => Err(Error::domain(format!(
                "unknown reference {other:?}; expected uniform, riffle or cut-riffle"
            ))),
        }
    }
}

/// One row of a mixing table: after `m` steps the shuffle parameter is
/// `base^m` and the distance to the reference is `tv`.
#[derive(Clone, Debug)]
pub struct MixingRow {
    pub m: u32,
    pub k: u64,
    pub tv: BigRational,
    pub tv_float: String,
}

impl MixingRow {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "k": self.k,
            "tv": crate::exact::rational_json(&self.tv),
            "tv_float": self.tv_float,
        })
    }
}

/// Exact distance from the `family` measure at `k = base^m` to the
/// reference measure at the same `k`, for each `m` in the range.
///
/// Closed forms cover riffle or cut-riffle against uniform and riffle
/// against cut-riffle at any deck size; every other pairing enumerates
/// `S_n` and therefore requires `n <= limit`.
pub fn mixing_table(
    family: Family,
    n: u32,
    base: u64,
    m_range: std::ops::RangeInclusive<u32>,
    reference: MixReference,
    limit: u32,
) -> Result<Vec<MixingRow>, Error> {
    assert!(base >= 1);
    let mut rows = Vec::new();
    for m in m_range {
        let k = base
            .checked_pow(m)
            .ok_or_else(|| Error::resource(format!("k = {base}^{m} overflows a 64-bit integer")))?;
        let tv = match (family, reference) {
            (Family::Riffle, MixReference::Uniform) => tv_riffle_uniform(n, k),
            (Family::CutRiffle, MixReference::Uniform) => tv_cut_riffle_uniform(n, k),
            (Family::Riffle, MixReference::CutRiffle)
            | (Family::CutRiffle, MixReference::Riffle) => tv_rc_expr1(n, k),
            (Family::Riffle, MixReference::Riffle)
            | (Family::CutRiffle, MixReference::CutRiffle) => BigRational::zero(),
            (family, reference) => {
                if n > limit {
                    return Err(Error::resource(format!(
                        "no closed form for {} vs {} at n = {n}; the supported closed-form \
                         pairs are riffle/uniform, cut-riffle/uniform and riffle/cut-riffle, \
                         anything else enumerates S_n and needs n <= {limit}",
                        family.name(),
                        reference.name()
                    )));
                }
                let a = full_distribution(&MeasureSpec::new(family, n, k)?, limit)?;
                let b = full_distribution(&MeasureSpec::new(reference.family(), n, k)?, limit)?;
                tv_generic(&a, &b)
            }
        };
        let tv_float = format_sig15(rational_to_f64(&tv));
        rows.push(MixingRow { m, k, tv, tv_float });
    }
    Ok(rows)
}

/// CSV rendering of a mixing table: header plus one `m,k,tv_num,tv_den,
/// tv_float` line per row, LF endings.
pub fn mixing_table_csv(rows: &[MixingRow]) -> String {
    let mut out = String::from("m,k,tv_num,tv_den,tv_float\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.m,
            row.k,
            row.tv.numer(),
            row.tv.denom(),
            row.tv_float
        ));
    }
    out
}
