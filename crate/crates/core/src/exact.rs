//! Exact integer and rational arithmetic: binomials, Eulerian and Bernoulli
//! numbers, Euler's phi, Ramanujan sums, falling factorials and power sums.
//!
//! Everything here is computed without floating point. The only float in the
//! module is [`rational_to_f64`], which exists for rendering results, never
//! for computing them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational in canonical form: reduced, positive
/// denominator. Every probability mass and exact distance in this crate is
/// one of these.
pub type BigRational = num_rational::BigRational;

/// Shorthand for a rational from small integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(a, b)`, with the out-of-range convention
/// `C(a, b) = 0` for `b < 0` or `b > a`. The mass formulas rely on this to
/// vanish when a descent count exhausts the shuffle parameter.
pub fn binomial(a: u64, b: i64) -> BigInt {
    if b < 0 || b as u64 > a {
        return BigInt::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

fn eulerian_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// One row of Eulerian numbers: `A(n, d)` counts the permutations of `n`
/// symbols with `d - 1` descents, for `d = 1..=n`.
///
/// Rows are built by the two-term recurrence
/// `A(n, d) = d * A(n-1, d) + (n - d + 1) * A(n-1, d-1)`
/// and memoized per `n`; a table is immutable once built and cheap to clone.
#[derive(Clone, Debug)]
pub struct EulerianTable {
    n: u32,
    row: Arc<Vec<BigInt>>,
}

impl EulerianTable {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "Eulerian numbers need n >= 1");
        let mut cache = eulerian_cache().lock().unwrap();
        if let Some(row) = cache.get(&n) {
            return EulerianTable { n, row: Arc::clone(row) };
        }
        let mut row = vec![BigInt::one()];
        for m in 2..=n as usize {
            let mut next = vec![BigInt::zero(); m];
            for d in 1..=m {
                let mut v = BigInt::zero();
                if d <= row.len() {
                    v += BigInt::from(d) * &row[d - 1];
                }
                if d >= 2 {
                    v += BigInt::from(m - d + 1) * &row[d - 2];
                }
                next[d - 1] = v;
            }
            row = next;
        }
        let row = Arc::new(row);
        cache.insert(n, Arc::clone(&row));
        EulerianTable { n, row }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `A(n, d)`; zero outside `1 <= d <= n`.
    pub fn get(&self, d: i64) -> BigInt {
        if d < 1 || d > self.n as i64 {
            BigInt::zero()
        } else {
            self.row[(d - 1) as usize].clone()
        }
    }
}

/// `A(n, d)`, the number of permutations of `n` symbols with `d - 1`
/// descents; zero outside `1 <= d <= n`.
pub fn eulerian(n: u32, d: i64) -> BigInt {
    EulerianTable::new(n).get(d)
}

fn bernoulli_cache() -> &'static Mutex<Vec<BigRational>> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

/// Bernoulli numbers `B_0..=B_max` (so `B_1 = -1/2`), from the recurrence
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`, which is exact term for term with the
/// generating function `z / (e^z - 1)`.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn up_to(max_index: u32) -> Self {
        let mut cache = bernoulli_cache().lock().unwrap();
        while cache.len() <= max_index as usize {
            let m = cache.len(); // computing B_m
            let mut sum = BigRational::zero();
            for (j, b) in cache.iter().enumerate() {
                sum += BigRational::from(binomial(m as u64 + 1, j as i64)) * b;
            }
            let next = -sum / BigRational::from(BigInt::from(m + 1));
            cache.push(next);
        }
        BernoulliTable { values: cache[..=max_index as usize].to_vec() }
    }

    pub fn get(&self, i: u32) -> &BigRational {
        &self.values[i as usize]
    }
}

/// The Bernoulli number `B_i`.
pub fn bernoulli(i: u32) -> BigRational {
    BernoulliTable::up_to(i).get(i).clone()
}

/// Euler's phi: the count of `1 <= l <= r` with `gcd(l, r) = 1`.
pub fn euler_phi(r: u64) -> u64 {
    assert!(r >= 1, "euler_phi needs r >= 1");
    let mut n = r;
    let mut result = r;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Moebius function.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Ramanujan sum `C_r(m) = sum of e^{2 pi i l m / r}` over `l` coprime to
/// `r`, evaluated in pure integer arithmetic through the divisor identity
/// `C_r(m) = sum_{d | gcd(r, m mod r)} d * mu(r / d)`.
///
/// `m` may be negative; it is reduced modulo `r` first, which leaves the sum
/// unchanged.
pub fn ramanujan_sum(r: u64, m: i64) -> i64 {
    assert!(r >= 1, "ramanujan_sum needs r >= 1");
    let m_red = m.rem_euclid(r as i64) as u64;
    let g = r.gcd(&m_red); // gcd(r, 0) = r
    divisors(g).iter().map(|&d| d as i64 * moebius(r / d)).sum()
}

/// Falling factorial `n (n-1) ... (n-t+1)`; the empty product for `t = 0`.
pub fn falling_factorial(n: i64, t: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..t as i64 {
        acc *= n - i;
    }
    acc
}

/// Partial power sum `0^n + 1^n + ... + (a-1)^n` by direct summation, with
/// the convention `0^0 = 1` so that `power_sum(a, 0) = a`.
pub fn power_sum(a: u64, n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for r in 0..a {
        acc += BigInt::from(r).pow(n as u32);
    }
    acc
}

/// The same partial power sum through its Bernoulli-number expansion:
/// `(a^n / (n+1)) (a + sum_{t=0}^{n-1} B_{t+1} (n+1)_{t+1} / ((t+1)! a^t))`.
/// Must agree with [`power_sum`] exactly; the agreement is a tested
/// invariant, not an assumption.
pub fn power_sum_bernoulli(a: u64, n: u64) -> BigRational {
    assert!(a >= 1 && n >= 1);
    let table = BernoulliTable::up_to(n as u32);
    let mut inner = BigRational::from(BigInt::from(a));
    for t in 0..n {
        let coeff = BigRational::new(
            falling_factorial(n as i64 + 1, t + 1),
            factorial(t + 1) * BigInt::from(a).pow(t as u32),
        );
        inner += table.get(t as u32 + 1) * coeff;
    }
    let lead = BigRational::new(BigInt::from(a).pow(n as u32), BigInt::from(n + 1));
    lead * inner
}

/// Rounds an exact rational to the nearest `f64`, staying finite and
/// accurate even when numerator and denominator are hundreds of digits.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if r.numer().is_zero() {
        return 0.0;
    }
    let negative = r.numer().sign() == Sign::Minus;
    let num = r.numer().abs();
    let den = r.denom().clone();
    // Scale so the integer quotient carries ~64 significant bits, convert,
    // then undo the scaling with an exact power of two.
    let shift = 64 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let val = q.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-shift as i32);
    if negative {
        -val
    } else {
        val
    }
}

/// Fixed 15-significant-digit rendering used for every float the crate
/// prints; part of the CLI output contract.
pub fn format_sig15(x: f64) -> String {
    format!("{:.14e}", x)
}

/// JSON form of a rational: `{"num": "...", "den": "..."}` with decimal
/// strings in canonical reduced form.
pub fn rational_json(r: &BigRational) -> serde_json::Value {
    serde_json::json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}
