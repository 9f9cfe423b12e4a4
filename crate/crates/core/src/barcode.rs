//! Strict barcodes: one essential bar `[b_0, ∞)` plus `n` finite bars with
//! pairwise distinct births and pairwise distinct deaths.
//!
//! The essential bar is stored by its birth only. Finite bars are kept in
//! increasing birth order, so bar `i` (1-indexed) is the `i`-th born.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{InversionVector, Permutation};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BarcodeError {
    #[error("endpoint {0} is not a finite number")]
    NonFinite(f64),
    #[error("bar [{birth}, {death}) must have birth < death")]
    EmptyBar { birth: f64, death: f64 },
    #[error("essential birth {essential} is not below every finite birth (found {birth})")]
    EssentialNotOldest { essential: f64, birth: f64 },
    #[error("two bars are born at {0}")]
    DuplicateBirth(f64),
    #[error("two bars die at {0}")]
    DuplicateDeath(f64),
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("bar counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("permutation types differ: {left} vs {right}")]
    TypeMismatch {
        left: Permutation,
        right: Permutation,
    },
    #[error("interpolation parameter {0} outside [0, 1]")]
    ParameterOutOfRange(f64),
}

/// A finite bar `[birth, death)`. Serialized as a two-element array.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Bar {
    pub birth: f64,
    pub death: f64,
}

impl Bar {
    pub fn new(birth: f64, death: f64) -> Self {
        Bar { birth, death }
    }
}

impl From<[f64; 2]> for Bar {
    fn from([birth, death]: [f64; 2]) -> Self {
        Bar { birth, death }
    }
}

impl From<Bar> for [f64; 2] {
    fn from(b: Bar) -> Self {
        [b.birth, b.death]
    }
}

impl From<(f64, f64)> for Bar {
    fn from((birth, death): (f64, f64)) -> Self {
        Bar { birth, death }
    }
}

/// Unvalidated barcode data, as read from or written to JSON. Also the result
/// of adding two barcodes whose sum is not strict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawBarcode {
    pub essential_birth: f64,
    pub bars: Vec<Bar>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawBarcode", into = "RawBarcode")]
pub struct StrictBarcode {
    essential_birth: f64,
    bars: Vec<Bar>,
}

impl StrictBarcode {
    /// Validates and sorts the bars by birth.
    pub fn new<I, B>(essential_birth: f64, bars: I) -> Result<Self, BarcodeError>
    where
        I: IntoIterator<Item = B>,
        B: Into<Bar>,
    {
        let mut bars: Vec<Bar> = bars.into_iter().map(Into::into).collect();
        if !essential_birth.is_finite() {
            return Err(BarcodeError::NonFinite(essential_birth));
        }
        for bar in &bars {
            for x in [bar.birth, bar.death] {
                if !x.is_finite() {
                    return Err(BarcodeError::NonFinite(x));
                }
            }
            if bar.birth >= bar.death {
                return Err(BarcodeError::EmptyBar {
                    birth: bar.birth,
                    death: bar.death,
                });
            }
        }
        bars.sort_by(|a, b| a.birth.total_cmp(&b.birth));
        if let Some(first) = bars.first() {
            if first.birth <= essential_birth {
                return Err(BarcodeError::EssentialNotOldest {
                    essential: essential_birth,
                    birth: first.birth,
                });
            }
        }
        if let Some(w) = bars.windows(2).find(|w| w[0].birth == w[1].birth) {
            return Err(BarcodeError::DuplicateBirth(w[0].birth));
        }
        let mut deaths: Vec<f64> = bars.iter().map(|b| b.death).collect();
        deaths.sort_by(f64::total_cmp);
        if let Some(w) = deaths.windows(2).find(|w| w[0] == w[1]) {
            return Err(BarcodeError::DuplicateDeath(w[0]));
        }
        Ok(StrictBarcode {
            essential_birth,
            bars,
        })
    }

    pub fn essential_birth(&self) -> f64 {
        self.essential_birth
    }

    /// Finite bars in increasing birth order.
    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    /// Number of finite bars.
    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn births(&self) -> impl Iterator<Item = f64> + '_ {
        self.bars.iter().map(|b| b.birth)
    }

    pub fn deaths(&self) -> impl Iterator<Item = f64> + '_ {
        self.bars.iter().map(|b| b.death)
    }

    pub fn to_raw(&self) -> RawBarcode {
        RawBarcode {
            essential_birth: self.essential_birth,
            bars: self.bars.clone(),
        }
    }
}

impl TryFrom<RawBarcode> for StrictBarcode {
    type Error = BarcodeError;

    fn try_from(raw: RawBarcode) -> Result<Self, Self::Error> {
        StrictBarcode::new(raw.essential_birth, raw.bars)
    }
}

impl From<StrictBarcode> for RawBarcode {
    fn from(b: StrictBarcode) -> Self {
        RawBarcode {
            essential_birth: b.essential_birth,
            bars: b.bars,
        }
    }
}

impl fmt::Display for StrictBarcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{[{},∞)", self.essential_birth)?;
        for bar in &self.bars {
            write!(f, ",[{},{})", bar.birth, bar.death)?;
        }
        write!(f, "}}")
    }
}

/// `σ(j)` is the rank of the death of the `j`-th born bar among all finite
/// deaths. The essential bar plays no role.
pub fn permutation_type(barcode: &StrictBarcode) -> Permutation {
    let mut order: Vec<usize> = (0..barcode.len()).collect();
    order.sort_by(|&a, &b| barcode.bars[a].death.total_cmp(&barcode.bars[b].death));
    let mut images = vec![0; barcode.len()];
    for (rank, &j) in order.iter().enumerate() {
        images[j] = rank + 1;
    }
    Permutation::new(images).expect("ranks of distinct deaths form a permutation")
}

/// `l_i(B) = #{ 0 ≤ j < i : d_j > d_i }` with `d_0 = ∞`, i.e. the number of
/// bars (essential included) that strictly contain bar `i`.
pub fn barcode_inversion_vector(barcode: &StrictBarcode) -> InversionVector {
    let bars = &barcode.bars;
    let entries = (0..bars.len())
        .map(|i| 1 + bars[..i].iter().filter(|b| b.death > bars[i].death).count())
        .collect();
    InversionVector::new(entries).expect("containment counts are bounded by position")
}

/// `B(σ) = {[0,∞)} ∪ {[i, σ(i)+n)}`.
pub fn standard_barcode(sigma: &Permutation) -> StrictBarcode {
    let n = sigma.len();
    let bars = sigma
        .images()
        .iter()
        .enumerate()
        .map(|(k, &v)| Bar::new((k + 1) as f64, (v + n) as f64))
        .collect();
    StrictBarcode {
        essential_birth: 0.0,
        bars,
    }
}

pub fn scale(barcode: &StrictBarcode, lambda: f64) -> Result<StrictBarcode, BarcodeError> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(BarcodeError::NonPositiveScale(lambda));
    }
    StrictBarcode::new(
        lambda * barcode.essential_birth,
        barcode
            .bars
            .iter()
            .map(|b| Bar::new(lambda * b.birth, lambda * b.death)),
    )
}

/// Result of adding two barcodes bar by bar.
#[derive(Debug, Clone, PartialEq)]
pub enum BarcodeSum {
    Strict(StrictBarcode),
    /// Births are still distinct but two deaths coincide.
    NonStrict(RawBarcode),
}

impl BarcodeSum {
    pub fn is_strict(&self) -> bool {
        matches!(self, BarcodeSum::Strict(_))
    }

    pub fn into_strict(self) -> Option<StrictBarcode> {
        match self {
            BarcodeSum::Strict(b) => Some(b),
            BarcodeSum::NonStrict(_) => None,
        }
    }
}

/// Pointwise sum of endpoints, pairing bars by birth order.
pub fn add(left: &StrictBarcode, right: &StrictBarcode) -> Result<BarcodeSum, BarcodeError> {
    if left.len() != right.len() {
        return Err(BarcodeError::SizeMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let raw = RawBarcode {
        essential_birth: left.essential_birth + right.essential_birth,
        bars: left
            .bars
            .iter()
            .zip(&right.bars)
            .map(|(a, b)| Bar::new(a.birth + b.birth, a.death + b.death))
            .collect(),
    };
    match StrictBarcode::try_from(raw.clone()) {
        Ok(b) => Ok(BarcodeSum::Strict(b)),
        Err(BarcodeError::DuplicateDeath(_)) => Ok(BarcodeSum::NonStrict(raw)),
        Err(e) => Err(e),
    }
}

/// The point `t·B + (1−t)·B′` on the straight segment between two barcodes of
/// the same permutation type.
pub fn interpolate(
    b: &StrictBarcode,
    b_prime: &StrictBarcode,
    t: f64,
) -> Result<StrictBarcode, BarcodeError> {
    if !(0.0..=1.0).contains(&t) {
        return Err(BarcodeError::ParameterOutOfRange(t));
    }
    if b.len() != b_prime.len() {
        return Err(BarcodeError::SizeMismatch {
            left: b.len(),
            right: b_prime.len(),
        });
    }
    let (left, right) = (permutation_type(b), permutation_type(b_prime));
    if left != right {
        return Err(BarcodeError::TypeMismatch { left, right });
    }
    if t == 0.0 {
        return Ok(b_prime.clone());
    }
    if t == 1.0 {
        return Ok(b.clone());
    }
    let mix = |x: f64, y: f64| t * x + (1.0 - t) * y;
    StrictBarcode::new(
        mix(b.essential_birth, b_prime.essential_birth),
        b.bars
            .iter()
            .zip(&b_prime.bars)
            .map(|(x, y)| Bar::new(mix(x.birth, y.birth), mix(x.death, y.death))),
    )
}
