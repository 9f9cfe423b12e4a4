//! The distribution of tree realization numbers under the uniform measure on
//! `S_n`, its moments, and random barcode generators.
//!
//! All distribution arithmetic is exact. `π_n` is built level by level as a
//! Dirichlet convolution with the uniform distribution `U_k` on `{1,…,k}`,
//! which on multiplicities reads `m_k(c) = Σ_{a ≤ k, a | c} m_{k−1}(c / a)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};
use thiserror::Error;

use crate::barcode::{permutation_type, BarcodeError, StrictBarcode};
use crate::perm::Permutation;
use crate::realization::factorial;

/// Largest `n` accepted by [`trn_distribution`]. The support roughly doubles
/// with each level (about 3.7 million values at `n = 20`), and `20!` is the
/// last factorial that fits in a `u64`.
pub const MAX_DISTRIBUTION_N: usize = 20;

/// Trials per random stream when sampling histograms. Part of the
/// reproducibility contract: changing it changes every seeded histogram.
pub const TRIALS_PER_STREAM: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("n = {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("n must be at least 1")]
    EmptyGroup,
    #[error("support value overflowed 64 bits")]
    Overflow,
    #[error("invalid sampler interval [{0}, {1}]")]
    BadInterval(f64, f64),
    #[error("separated scheme needs births [{births_hi}] strictly below deaths [{deaths_lo}]")]
    Overlap { births_hi: f64, deaths_lo: f64 },
    #[error("trials must be at least 1")]
    NoTrials,
    #[error(transparent)]
    Barcode(#[from] BarcodeError),
}

/// Exact probability mass function on positive integers.
pub type Pmf = BTreeMap<u64, BigRational>;

/// Uniform distribution on `{1,…,k}`.
pub fn uniform(k: u64) -> Pmf {
    let p = BigRational::new(BigInt::one(), BigInt::from(k));
    (1..=k).map(|a| (a, p.clone())).collect()
}

/// `(f * g)(c) = Σ_{ab = c} f(a) g(b)`.
pub fn dirichlet_convolve(f: &Pmf, g: &Pmf) -> Result<Pmf, StatsError> {
    let mut out = Pmf::new();
    for (&a, pa) in f {
        for (&b, pb) in g {
            let c = a.checked_mul(b).ok_or(StatsError::Overflow)?;
            *out.entry(c).or_insert_with(BigRational::zero) += pa * pb;
        }
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

/// `π_n`, stored as the multiplicities `m_n(x) = n!·π_n(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrnDistribution {
    n: usize,
    multiplicity: BTreeMap<u64, u64>,
}

/// `π_n = U_n * U_{n−1} * … * U_1`.
pub fn trn_distribution(n: usize) -> Result<TrnDistribution, StatsError> {
    if n == 0 {
        return Err(StatsError::EmptyGroup);
    }
    if n > MAX_DISTRIBUTION_N {
        return Err(StatsError::TooLarge {
            n,
            max: MAX_DISTRIBUTION_N,
        });
    }
    let mut level: HashMap<u64, u64> = HashMap::from([(1, 1)]);
    for k in 2..=n as u64 {
        let mut next = HashMap::with_capacity(level.len() * 2);
        for (&b, &m) in &level {
            for a in 1..=k {
                *next.entry(a * b).or_insert(0) += m;
            }
        }
        level = next;
    }
    Ok(TrnDistribution {
        n,
        multiplicity: level.into_iter().collect(),
    })
}

impl TrnDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `n!`, the common denominator of every probability.
    pub fn total(&self) -> u64 {
        (1..=self.n as u64).product()
    }

    /// `(x, m_n(x))` in increasing `x`.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.multiplicity.iter().map(|(&x, &m)| (x, m))
    }

    pub fn multiplicity(&self, x: u64) -> u64 {
        self.multiplicity.get(&x).copied().unwrap_or(0)
    }

    pub fn support_size(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn probability(&self, x: u64) -> BigRational {
        BigRational::new(
            BigInt::from(self.multiplicity(x)),
            BigInt::from(self.total()),
        )
    }

    pub fn to_pmf(&self) -> Pmf {
        self.multiplicity
            .keys()
            .map(|&x| (x, self.probability(x)))
            .collect()
    }

    /// The multiset `Π_n`: each realization number repeated by multiplicity.
    pub fn multiset(&self) -> Vec<u64> {
        self.multiplicities()
            .flat_map(|(x, m)| std::iter::repeat_n(x, m as usize))
            .collect()
    }

    /// `Σ x^k π_n(x)`, summed over the support.
    pub fn moment(&self, k: u32) -> BigRational {
        let sum = self.multiplicities().fold(BigUint::zero(), |acc, (x, m)| {
            acc + BigUint::from(x).pow(k) * m
        });
        BigRational::new(BigInt::from(sum), BigInt::from(self.total()))
    }

    /// CSV with header `x,multiplicity,probability_num,probability_den`, the
    /// probability in lowest terms.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,multiplicity,probability_num,probability_den\n");
        for (x, m) in self.multiplicities() {
            let p = self.probability(x);
            let _ = writeln!(out, "{x},{m},{},{}", p.numer(), p.denom());
        }
        out
    }
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `E(π_n) = (n+1)!/2^n`.
pub fn mean(n: usize) -> BigRational {
    ratio(factorial(n + 1), BigUint::one() << n)
}

/// `E(π_n²) = (n+1)!·(2n+1)! / (12^n·n!)`.
pub fn second_moment(n: usize) -> BigRational {
    ratio(
        factorial(n + 1) * factorial(2 * n + 1),
        BigUint::from(12u32).pow(n as u32) * factorial(n),
    )
}

pub fn variance(n: usize) -> BigRational {
    let m = mean(n);
    second_moment(n) - &m * &m
}

/// `E(π_n^k)` from `E(π_n^k) = (1/n)·(Σ_{a ≤ n} a^k)·E(π_{n−1}^k)`.
pub fn kth_moment(n: usize, k: u32) -> BigRational {
    (1..=n).fold(BigRational::one(), |acc, level| {
        let power_sum =
            (1..=level as u64).fold(BigUint::zero(), |s, a| s + BigUint::from(a).pow(k));
        acc * ratio(power_sum, BigUint::from(level))
    })
}

/// `Σ_{i=1}^n log(i!)/i`, natural logarithm.
pub fn expected_log_trn(n: usize) -> f64 {
    let mut log_fact = 0.0;
    let mut total = 0.0;
    for i in 1..=n {
        log_fact += (i as f64).ln();
        total += log_fact / i as f64;
    }
    total
}

/// How random barcodes are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Births uniform on the birth interval, each death uniform between its
    /// birth and the top of the death interval.
    Conditioned,
    /// Births uniform on the birth interval, deaths uniform on a disjoint
    /// later interval, matched to births by draw index.
    Separated,
}

/// Seeded generator of random strict barcodes.
///
/// Randomness comes from ChaCha8 seeded with `seed`; stream `s` of the
/// generator is selected with `set_stream(s)`. [`sample_barcode`] uses
/// stream 0, and histogram trial block `c` uses stream `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarcodeSampler {
    pub scheme: Scheme,
    pub seed: u64,
    pub births: (f64, f64),
    pub deaths: (f64, f64),
}

impl BarcodeSampler {
    /// Births in `[0, 100]`, deaths up to 100.
    pub fn conditioned(seed: u64) -> Self {
        BarcodeSampler {
            scheme: Scheme::Conditioned,
            seed,
            births: (0.0, 100.0),
            deaths: (0.0, 100.0),
        }
    }

    /// Births in `[0, 49]`, deaths in `[50, 100]`.
    pub fn separated(seed: u64) -> Self {
        BarcodeSampler {
            scheme: Scheme::Separated,
            seed,
            births: (0.0, 49.0),
            deaths: (50.0, 100.0),
        }
    }

    pub fn validate(&self) -> Result<(), StatsError> {
        for (lo, hi) in [self.births, self.deaths] {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(StatsError::BadInterval(lo, hi));
            }
        }
        match self.scheme {
            Scheme::Separated if self.births.1 >= self.deaths.0 => Err(StatsError::Overlap {
                births_hi: self.births.1,
                deaths_lo: self.deaths.0,
            }),
            Scheme::Conditioned if self.births.1 > self.deaths.1 => {
                Err(StatsError::BadInterval(self.births.1, self.deaths.1))
            }
            _ => Ok(()),
        }
    }

    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    /// Draws one strict barcode with `n` finite bars, redrawing on ties. The
    /// essential bar is born one unit before the birth interval opens.
    pub fn sample_with(&self, rng: &mut ChaCha8Rng, n: usize) -> StrictBarcode {
        let birth = Uniform::new_inclusive(self.births.0, self.births.1);
        let essential = self.births.0 - 1.0;
        loop {
            let births: Vec<f64> = (0..n).map(|_| birth.sample(rng)).collect();
            let bars: Vec<(f64, f64)> = match self.scheme {
                Scheme::Conditioned => births
                    .into_iter()
                    .map(|b| (b, Uniform::new_inclusive(b, self.deaths.1).sample(rng)))
                    .collect(),
                Scheme::Separated => {
                    let death = Uniform::new_inclusive(self.deaths.0, self.deaths.1);
                    let deaths: Vec<f64> = (0..n).map(|_| death.sample(rng)).collect();
                    let mut births = births;
                    births.sort_by(f64::total_cmp);
                    births.into_iter().zip(deaths).collect()
                }
            };
            if let Ok(b) = StrictBarcode::new(essential, bars) {
                return b;
            }
        }
    }
}

/// One barcode from stream 0: the same sampler always returns the same
/// barcode.
pub fn sample_barcode(sampler: &BarcodeSampler, n: usize) -> Result<StrictBarcode, StatsError> {
    sampler.validate()?;
    if n == 0 {
        return Err(StatsError::EmptyGroup);
    }
    Ok(sampler.sample_with(&mut sampler.rng(0), n))
}

/// `trials` barcodes in the same order the histogram consumes them: block `c`
/// of [`TRIALS_PER_STREAM`] draws comes from stream `c`.
pub fn sample_barcodes(
    sampler: &BarcodeSampler,
    n: usize,
    trials: u64,
) -> Result<impl Iterator<Item = StrictBarcode> + '_, StatsError> {
    sampler.validate()?;
    if n == 0 {
        return Err(StatsError::EmptyGroup);
    }
    let blocks = trials.div_ceil(TRIALS_PER_STREAM);
    Ok((0..blocks).flat_map(move |c| {
        let mut rng = sampler.rng(c);
        let count = TRIALS_PER_STREAM.min(trials - c * TRIALS_PER_STREAM);
        (0..count).map(move |_| sampler.sample_with(&mut rng, n))
    }))
}

/// Counts of permutation types over `trials` sampled barcodes. Trials are cut
/// into blocks of [`TRIALS_PER_STREAM`], block `c` drawn from stream `c`;
/// blocks are spread over `jobs` threads without affecting the result.
pub fn pushforward_histogram(
    sampler: &BarcodeSampler,
    n: usize,
    trials: u64,
    jobs: usize,
) -> Result<BTreeMap<Permutation, u64>, StatsError> {
    sampler.validate()?;
    if n == 0 {
        return Err(StatsError::EmptyGroup);
    }
    if trials == 0 {
        return Err(StatsError::NoTrials);
    }
    let blocks = trials.div_ceil(TRIALS_PER_STREAM);
    let run_block = |c: u64| {
        let mut rng = sampler.rng(c);
        let count = TRIALS_PER_STREAM.min(trials - c * TRIALS_PER_STREAM);
        let mut hist: BTreeMap<Permutation, u64> = BTreeMap::new();
        for _ in 0..count {
            *hist
                .entry(permutation_type(&sampler.sample_with(&mut rng, n)))
                .or_insert(0) += 1;
        }
        hist
    };
    let jobs = jobs.clamp(1, blocks as usize) as u64;
    let partials: Vec<BTreeMap<Permutation, u64>> = if jobs == 1 {
        (0..blocks).map(run_block).collect()
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let run_block = &run_block;
                    s.spawn(move || {
                        (j..blocks)
                            .step_by(jobs as usize)
                            .map(run_block)
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("sampling thread panicked"))
                .collect()
        })
    };
    let mut total = BTreeMap::new();
    for part in partials {
        for (perm, c) in part {
            *total.entry(perm).or_insert(0) += c;
        }
    }
    Ok(total)
}

/// CSV with header `perm,count,frequency`; permutations are quoted
/// comma-separated images.
pub fn histogram_csv(hist: &BTreeMap<Permutation, u64>) -> String {
    let trials: u64 = hist.values().sum();
    let mut out = String::from("perm,count,frequency\n");
    for (perm, &count) in hist {
        let images: Vec<String> = perm.images().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(
            out,
            "\"{}\",{count},{}",
            images.join(","),
            count as f64 / trials as f64
        );
    }
    out
}

/// Pearson goodness-of-fit against the uniform distribution on `S_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

/// Classes absent from the histogram count as zero.
pub fn chi_square_uniform(hist: &BTreeMap<Permutation, u64>, n: usize) -> ChiSquareTest {
    let counts: Vec<u64> = Permutation::all(n)
        .map(|p| hist.get(&p).copied().unwrap_or(0))
        .collect();
    let trials: u64 = counts.iter().sum();
    let expected = trials as f64 / counts.len() as f64;
    let statistic = counts
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    let dof = counts.len() - 1;
    let p_value = if dof == 0 {
        1.0
    } else {
        ChiSquared::new(dof as f64)
            .map(|d| d.sf(statistic))
            .unwrap_or(f64::NAN)
    };
    ChiSquareTest {
        statistic,
        degrees_of_freedom: dof,
        p_value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::trn;
    use num_traits::ToPrimitive;

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// `{trn(σ) : σ ∈ S_n}` counted by brute force.
    fn pushforward(n: usize) -> BTreeMap<u64, u64> {
        let mut m = BTreeMap::new();
        for s in Permutation::all(n) {
            *m.entry(trn(&s).to_u64().unwrap()).or_insert(0) += 1;
        }
        m
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(uniform(1), Pmf::from([(1, q(1, 1))]));
        let pi2 = dirichlet_convolve(&uniform(2), &uniform(1)).unwrap();
        assert_eq!(pi2, Pmf::from([(1, q(1, 2)), (2, q(1, 2))]));
        let pi3 = dirichlet_convolve(&uniform(3), &pi2).unwrap();
        assert_eq!(
            pi3,
            Pmf::from([
                (1, q(1, 6)),
                (2, q(2, 6)),
                (3, q(1, 6)),
                (4, q(1, 6)),
                (6, q(1, 6))
            ])
        );
        assert_eq!(trn_distribution(3).unwrap().to_pmf(), pi3);
        let big = Pmf::from([(u64::MAX / 2, q(1, 1))]);
        assert_eq!(
            dirichlet_convolve(&big, &uniform(3)),
            Err(StatsError::Overflow)
        );
    }

    #[test]
    fn rational_and_integer_routes_agree() {
        let mut pmf = uniform(1);
        for n in 2..=8 {
            pmf = dirichlet_convolve(&uniform(n as u64), &pmf).unwrap();
            assert_eq!(trn_distribution(n).unwrap().to_pmf(), pmf);
        }
    }

    #[test]
    fn distribution_examples() {
        assert_eq!(
            trn_distribution(1).unwrap().to_pmf(),
            Pmf::from([(1, q(1, 1))])
        );
        assert_eq!(
            trn_distribution(4).unwrap().multiset(),
            [1, 2, 2, 2, 3, 3, 4, 4, 4, 4, 6, 6, 6, 6, 8, 8, 8, 9, 12, 12, 12, 16, 18, 24]
        );
        for n in 1..=7 {
            let d = trn_distribution(n).unwrap();
            assert_eq!(
                d.multiplicities().collect::<BTreeMap<_, _>>(),
                pushforward(n)
            );
        }
        assert_eq!(trn_distribution(0), Err(StatsError::EmptyGroup));
        assert!(matches!(
            trn_distribution(21),
            Err(StatsError::TooLarge { .. })
        ));
    }

    #[test]
    fn moment_examples() {
        assert_eq!(mean(3), q(3, 1));
        assert_eq!(mean(1), q(1, 1));
        assert_eq!(mean(7), q(315, 1));
        assert_eq!(trn_distribution(7).unwrap().moment(1), q(315, 1));

        assert_eq!(second_moment(3), q(35, 3));
        assert_eq!(second_moment(1), q(1, 1));
        assert_eq!(second_moment(2), q(5, 2));

        assert_eq!(variance(1), q(0, 1));
        assert_eq!(variance(2), q(1, 4));
        assert_eq!(variance(3), q(8, 3));

        assert_eq!(kth_moment(5, 0), q(1, 1));
        assert_eq!(kth_moment(3, 1), mean(3));
        assert_eq!(kth_moment(3, 3), q(54, 1));
        for n in 1..=8 {
            assert_eq!(kth_moment(n, 2), second_moment(n));
        }
    }

    #[test]
    fn expected_log_examples() {
        assert_eq!(expected_log_trn(1), 0.0);
        assert!((expected_log_trn(2) - 2f64.ln() / 2.0).abs() < 1e-15);
        let brute = (2.0 * 2f64.ln() + 3f64.ln() + 4f64.ln() + 6f64.ln()) / 6.0;
        assert!((expected_log_trn(3) - brute).abs() < 1e-12);
        assert!((expected_log_trn(3) - 0.9438267466893242).abs() < 1e-12);
    }

    #[test]
    fn csv_output() {
        let csv = trn_distribution(2).unwrap().to_csv();
        assert_eq!(
            csv,
            "x,multiplicity,probability_num,probability_den\n1,1,1,2\n2,1,1,2\n"
        );
        let csv = trn_distribution(3).unwrap().to_csv();
        assert!(csv.contains("\n2,2,1,3\n"));
    }

    #[test]
    fn sampler_is_deterministic() {
        for sampler in [BarcodeSampler::conditioned(7), BarcodeSampler::separated(7)] {
            let a = sample_barcode(&sampler, 5).unwrap();
            let b = sample_barcode(&sampler, 5).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.len(), 5);
        }
        let a = sample_barcode(&BarcodeSampler::separated(1), 4).unwrap();
        let b = sample_barcode(&BarcodeSampler::separated(2), 4).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn sampler_respects_intervals() {
        let s = BarcodeSampler::separated(3);
        let mut rng = s.rng(0);
        for _ in 0..200 {
            let b = s.sample_with(&mut rng, 4);
            assert!(b.births().all(|x| (0.0..=49.0).contains(&x)));
            assert!(b.deaths().all(|x| (50.0..=100.0).contains(&x)));
        }
        let c = BarcodeSampler::conditioned(3);
        let mut rng = c.rng(0);
        for _ in 0..200 {
            let b = c.sample_with(&mut rng, 4);
            assert!(b
                .bars()
                .iter()
                .all(|bar| bar.birth < bar.death && bar.death <= 100.0));
        }
    }

    #[test]
    fn sampler_validation() {
        let mut s = BarcodeSampler::separated(0);
        s.births = (0.0, 60.0);
        assert!(matches!(
            sample_barcode(&s, 3),
            Err(StatsError::Overlap { .. })
        ));
        s.births = (5.0, 5.0);
        assert!(matches!(s.validate(), Err(StatsError::BadInterval(..))));
        assert_eq!(
            sample_barcode(&BarcodeSampler::separated(0), 0),
            Err(StatsError::EmptyGroup)
        );
    }

    #[test]
    fn histogram_examples() {
        let s = BarcodeSampler::separated(11);
        let one = pushforward_histogram(&s, 1, 500, 1).unwrap();
        assert_eq!(one, BTreeMap::from([(Permutation::identity(1), 500)]));

        let two = pushforward_histogram(&s, 2, 10_000, 1).unwrap();
        assert_eq!(two.values().sum::<u64>(), 10_000);
        // 3σ band for Binomial(10000, 1/2)
        for &c in two.values() {
            assert!((c as f64 - 5000.0).abs() <= 150.0, "{c}");
        }
        assert_eq!(
            pushforward_histogram(&s, 2, 0, 1),
            Err(StatsError::NoTrials)
        );
    }

    #[test]
    fn stream_matches_histogram() {
        let s = BarcodeSampler::separated(21);
        let trials = TRIALS_PER_STREAM + 100;
        let mut hist = BTreeMap::new();
        let drawn: Vec<_> = sample_barcodes(&s, 3, trials).unwrap().collect();
        assert_eq!(drawn.len() as u64, trials);
        assert_eq!(drawn[0], sample_barcode(&s, 3).unwrap());
        for b in &drawn {
            *hist.entry(permutation_type(b)).or_insert(0) += 1;
        }
        assert_eq!(hist, pushforward_histogram(&s, 3, trials, 3).unwrap());
    }

    #[test]
    fn histogram_is_independent_of_jobs() {
        let s = BarcodeSampler::conditioned(5);
        let serial = pushforward_histogram(&s, 3, 20_000, 1).unwrap();
        let parallel = pushforward_histogram(&s, 3, 20_000, 4).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn conditioned_scheme_favours_identity() {
        let s = BarcodeSampler::conditioned(9);
        let hist = pushforward_histogram(&s, 3, 30_000, 2).unwrap();
        let id = hist[&Permutation::identity(3)] as f64 / 30_000.0;
        assert!(id > 1.0 / 6.0 + 0.02, "{id}");
    }

    #[test]
    fn chi_square_of_exact_uniform_is_zero() {
        let hist: BTreeMap<_, _> = Permutation::all(3).map(|p| (p, 100)).collect();
        let t = chi_square_uniform(&hist, 3);
        assert_eq!(t.statistic, 0.0);
        assert_eq!(t.degrees_of_freedom, 5);
        assert!((t.p_value - 1.0).abs() < 1e-12);
        let skewed = BTreeMap::from([(Permutation::identity(3), 600)]);
        let t = chi_square_uniform(&skewed, 3);
        assert_eq!(t.statistic, 3000.0);
        assert!(t.p_value < 1e-100);
    }

    #[test]
    fn histogram_csv_format() {
        let hist = BTreeMap::from([
            (Permutation::new(vec![1, 2]).unwrap(), 3),
            (Permutation::new(vec![2, 1]).unwrap(), 1),
        ]);
        assert_eq!(
            histogram_csv(&hist),
            "perm,count,frequency\n\"1,2\",3,0.75\n\"2,1\",1,0.25\n"
        );
    }
}
