//! Seeded Monte Carlo simulators of the physical shuffles, and reports that
//! compare empirical counts against the exact laws.
//!
//! Conventions, fixed once: every simulator returns the new deck listing —
//! position `i` of the result holds the label `listing(i)`, cards being
//! labeled by starting position. The law of the listing's *inverse* is the
//! corresponding closed-form measure, so the sampling pipeline inverts each
//! draw before applying a statistic. The exhaustive small-deck tests below
//! pin this convention against the mass functions.
//!
//! Randomness comes from ChaCha8 keyed by a 64-bit seed, with one
//! independent stream per worker (`set_stream`), so a report is a pure
//! function of (seed, worker count, request).

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exact::{format_sig15, rational_json, rational_to_f64, BigRational};
use crate::measure::{stat_distribution, Family, MeasureSpec, Statistic};
use crate::perm::Permutation;

/// Identifier recorded in every report so a run can be reproduced.
pub const GENERATOR_ID: &str = "chacha8";

/// The worker RNG for a given seed and stream index.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Bottom-up riffle of the given piles: repeatedly drop the bottom card of a
/// pile chosen with probability proportional to its remaining size. Piles
/// are top-to-bottom; the returned listing is too.
fn proportional_merge(mut piles: Vec<Vec<u32>>, rng: &mut impl Rng) -> Vec<u32> {
    let n: usize = piles.iter().map(|p| p.len()).sum();
    let mut listing = vec![0u32; n];
    for pos in (0..n).rev() {
        let mut r = rng.gen_range(0..pos as u64 + 1);
        for pile in piles.iter_mut() {
            if (r as usize) < pile.len() {
                listing[pos] = pile.pop().expect("pile nonempty");
                break;
            }
            r -= pile.len() as u64;
        }
    }
    listing
}

/// One Gilbert-Shannon-Reeds k-shuffle: multinomial cut into k piles, then
/// proportional drops. Returns the new deck listing; the listing's inverse
/// is distributed as the riffle measure.
pub fn gsr_shuffle(n: u32, k: u64, rng: &mut impl Rng) -> Permutation {
    assert!(n >= 1 && k >= 1);
    // counts of n iid uniform digits are exactly the multinomial pile sizes
    let mut sizes: BTreeMap<u64, u32> = BTreeMap::new();
    for _ in 0..n {
        *sizes.entry(rng.gen_range(0..k)).or_insert(0) += 1;
    }
    let mut piles = Vec::with_capacity(sizes.len());
    let mut start = 1u32;
    for (_, size) in sizes {
        piles.push((start..start + size).collect());
        start += size;
    }
    let listing = proportional_merge(piles, rng);
    Permutation::from_images(listing).expect("merge permutes the labels")
}

/// The digit construction of the same law: give every position an
/// independent uniform digit in `1..=k` and stably sort positions by digit.
/// Agreement in law with [`gsr_shuffle`] is a tested property.
pub fn inverse_digit_shuffle(n: u32, k: u64, rng: &mut impl Rng) -> Permutation {
    assert!(n >= 1 && k >= 1);
    let digits: Vec<u64> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    let mut positions: Vec<u32> = (1..=n).collect();
    positions.sort_by_key(|&pos| digits[(pos - 1) as usize]);
    Permutation::from_images(positions).expect("positions are a bijection")
}

/// Cut at a uniform position (rotation), then GSR-shuffle the cut deck.
/// The listing's inverse is distributed as the cut-then-riffle measure.
pub fn cut_then_riffle(n: u32, k: u64, rng: &mut impl Rng) -> Permutation {
    assert!(n >= 2);
    let j = rng.gen_range(1..=n);
    let cut = Permutation::rotation(n, j);
    cut.compose(&gsr_shuffle(n, k, rng))
}

/// The physical inverse affine 2-shuffle on an even deck of `2n` cards:
/// draw an even `2j` with probability `C(2n, 2j) / 2^(2n-1)` (the even
/// binomial weights normalize exactly once `2j = 0` is included), form the
/// second pile by putting the bottom `j` cards on top of the top `j`, and
/// riffle the two piles together. The listing's inverse is distributed as
/// the affine 2-shuffle measure; that match is itself tested, not assumed.
pub fn affine2_inverse_shuffle(deck: u32, rng: &mut impl Rng) -> Permutation {
    assert!(deck >= 2 && deck % 2 == 0, "the affine sampler needs an even deck");
    // Binomial(2n, 1/2) conditioned on being even has exactly the required
    // law; rejection keeps the arithmetic exact.
    let two_j = loop {
        let heads: u32 = (0..deck).map(|_| rng.gen::<bool>() as u32).sum();
        if heads % 2 == 0 {
            break heads;
        }
    };
    let j = two_j / 2;
    let second: Vec<u32> = (deck - j + 1..=deck).chain(1..=j).collect();
    let first: Vec<u32> = (j + 1..=deck - j).collect();
    let listing = proportional_merge(vec![first, second], rng);
    Permutation::from_images(listing).expect("merge permutes the labels")
}

/// Fisher-Yates, for the uniform family.
pub fn uniform_shuffle(n: u32, rng: &mut impl Rng) -> Permutation {
    let mut labels: Vec<u32> = (1..=n).collect();
    for i in (1..n as usize).rev() {
        let j = rng.gen_range(0..=i as u64) as usize;
        labels.swap(i, j);
    }
    Permutation::from_images(labels).expect("shuffle permutes the labels")
}

fn draw(spec: &MeasureSpec, rng: &mut impl Rng) -> Permutation {
    match spec.family {
        Family::Riffle => gsr_shuffle(spec.n, spec.k, rng),
        Family::CutRiffle => cut_then_riffle(spec.n, spec.k, rng),
        Family::Affine => affine2_inverse_shuffle(spec.n, rng),
        Family::Uniform => uniform_shuffle(spec.n, rng),
    }
}

/// One statistic value in a [`SampleReport`].
#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub value: u32,
    pub count: u64,
    /// Exact mass under the measure, when computable.
    pub exact: Option<BigRational>,
    /// `(count - N p) / sqrt(N p (1-p))`; absent when `p` is 0 or 1 (the
    /// binomial deviation is degenerate there) or when no exact mass is
    /// known.
    pub sigma: Option<f64>,
}

/// Empirical counts of a statistic from a seeded run, with exact-law
/// comparison diagnostics.
#[derive(Clone, Debug)]
pub struct SampleReport {
    pub family: Family,
    pub n: u32,
    pub k: u64,
    pub statistic: Statistic,
    pub samples: u64,
    pub seed: u64,
    pub streams: u32,
    pub generator: &'static str,
    pub entries: Vec<ReportEntry>,
    pub max_abs_sigma: Option<f64>,
    pub chi_square: Option<f64>,
    pub degrees_of_freedom: Option<u32>,
    /// True when any cell deviates by more than four binomial standard
    /// deviations, or when an exactly-impossible value was observed.
    pub exceeds_4_sigma: bool,
}

impl SampleReport {
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "value": e.value,
                    "count": e.count,
                    "exact": e.exact.as_ref().map(rational_json),
                    "sigma": e.sigma.map(format_sig15),
                })
            })
            .collect();
        serde_json::json!({
            "family": self.family.name(),
            "n": self.n,
            "k": self.k,
            "statistic": self.statistic.to_string(),
            "samples": self.samples,
            "seed": self.seed,
            "streams": self.streams,
            "generator": self.generator,
            "entries": entries,
            "max_abs_sigma": self.max_abs_sigma.map(format_sig15),
            "chi_square": self.chi_square.map(format_sig15),
            "degrees_of_freedom": self.degrees_of_freedom,
            "exceeds_4_sigma": self.exceeds_4_sigma,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,count,exact_num,exact_den,sigma\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                e.value,
                e.count,
                e.exact.as_ref().map(|r| r.numer().to_string()).unwrap_or_default(),
                e.exact.as_ref().map(|r| r.denom().to_string()).unwrap_or_default(),
                e.sigma.map(format_sig15).unwrap_or_default(),
            ))
        }
        out
    }
}

/// Draws `samples` permutations from the family's physical simulator across
/// `threads` independent RNG streams, inverts each draw, applies the
/// statistic, and compares counts against the exact marginal when one is
/// computable (closed form, or enumeration under `limit`).
///
/// Deterministic: the report is a pure function of the arguments.
pub fn sample_statistic(
    spec: &MeasureSpec,
    statistic: Statistic,
    samples: u64,
    seed: u64,
    threads: u32,
    limit: u32,
) -> Result<SampleReport, Error> {
    assert!(threads >= 1);
    if spec.family == Family::Affine && (spec.k != 2 || spec.n % 2 != 0) {
        return Err(Error::domain(
            "the affine family has a physical sampler only for k = 2 on an even deck",
        ));
    }
    if statistic == Statistic::CyclicDescents && spec.n < 2 {
        return Err(Error::domain("cyclic descents are undefined for n = 1"));
    }
    if let Statistic::CardPosition(i) = statistic {
        if i < 1 || i > spec.n {
            return Err(Error::domain(format!(
                "card-position({i}) out of range for n = {}",
                spec.n
            )));
        }
    }

    // exact reference marginal, when the deck is small enough or a closed
    // form applies
    let exact = match stat_distribution(spec, statistic, limit) {
        Ok(d) => Some(d),
        Err(Error::Resource(_)) => None,
        Err(e) => return Err(e),
    };

    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    std::thread::scope(|scope| {
        let mut workers = Vec::new();
        for t in 0..threads as u64 {
            let quota =
                samples / threads as u64 + u64::from(t < samples % threads as u64);
            let spec = *spec;
            workers.push(scope.spawn(move || {
                let mut rng = stream_rng(seed, t);
                let mut local: BTreeMap<u32, u64> = BTreeMap::new();
                for _ in 0..quota {
                    let p = draw(&spec, &mut rng);
                    *local.entry(statistic.evaluate(&p.inverse())).or_insert(0) += 1;
                }
                local
            }));
        }
        for w in workers {
            for (value, c) in w.join().expect("sampling worker panicked") {
                *counts.entry(value).or_insert(0) += c;
            }
        }
    });

    let mut entries = Vec::new();
    let mut max_abs_sigma: Option<f64> = None;
    let mut chi_square: Option<f64> = None;
    let mut dof: Option<u32> = None;
    let mut exceeds = false;

    if samples > 0 {
        let mut values: std::collections::BTreeSet<u32> = counts.keys().copied().collect();
        if let Some(d) = &exact {
            values.extend(d.masses().keys().copied());
        }
        let total = samples as f64;
        let mut chi = 0.0;
        let mut cells = 0u32;
        for value in values {
            let count = counts.get(&value).copied().unwrap_or(0);
            let exact_mass = exact.as_ref().map(|d| d.get(value));
            let sigma = match &exact_mass {
                Some(p) => {
                    let pf = rational_to_f64(p);
                    if pf > 0.0 {
                        chi += (count as f64 - total * pf).powi(2) / (total * pf);
                        cells += 1;
                    }
                    if pf > 0.0 && pf < 1.0 {
                        let s = (count as f64 - total * pf) / (total * pf * (1.0 - pf)).sqrt();
                        max_abs_sigma = Some(max_abs_sigma.unwrap_or(0.0).max(s.abs()));
                        if s.abs() > 4.0 {
                            exceeds = true;
                        }
                        Some(s)
                    } else {
                        // degenerate cell: any disagreement with certainty
                        // is an outright failure
                        let expected = if pf == 0.0 { 0 } else { samples };
                        if count != expected {
                            exceeds = true;
                        }
                        None
                    }
                }
                None => None,
            };
            entries.push(ReportEntry { value, count, exact: exact_mass, sigma });
        }
        if exact.is_some() {
            chi_square = Some(chi);
            dof = Some(cells.saturating_sub(1));
        }
    }

    Ok(SampleReport {
        family: spec.family,
        n: spec.n,
        k: spec.k,
        statistic,
        samples,
        seed,
        streams: threads,
        generator: GENERATOR_ID,
        entries,
        max_abs_sigma,
        chi_square,
        degrees_of_freedom: dof,
        exceeds_4_sigma: exceeds,
    })
}

/// Empirical full-law counts by permutation rank; the sampler's output is
/// inverted first, so the counts estimate the measure itself. Used by the
/// verification suites and tests.
pub fn sample_inverse_law(
    spec: &MeasureSpec,
    samples: u64,
    seed: u64,
) -> BTreeMap<u64, u64> {
    let mut rng = stream_rng(seed, 0);
    let mut counts = BTreeMap::new();
    for _ in 0..samples {
        let p = draw(spec, &mut rng).inverse();
        *counts.entry(p.rank()).or_insert(0) += 1;
    }
    counts
}
