//! Permutations of `{1,…,n}` in 1-indexed image notation, their left
//! inversion vectors, and the left (weak) Bruhat order.
//!
//! Composition is read right to left: `(a ∘ b)(i) = a(b(i))`. Left
//! multiplication by the adjacent transposition `τ_i = (i, i+1)` therefore
//! swaps the *values* `i` and `i+1` in image notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of 1..={n}: {images:?}")]
    NotBijection { n: usize, images: Vec<usize> },
    #[error("inversion vector entry {position} is {value}, must lie in 1..={position}")]
    EntryOutOfRange { position: usize, value: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("transposition index {index} out of range for n = {n}")]
    BadTransposition { index: usize, n: usize },
    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// An element of the symmetric group `S_n`, stored as `[σ(1), …, σ(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotBijection { n, images });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The longest element `[n, n-1, …, 1]`.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self, PermError> {
        check_same_size(self, other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j - 1]).collect(),
        })
    }

    /// `τ_i ∘ self` for `1 ≤ i < n`.
    pub fn left_transpose(&self, i: usize) -> Result<Self, PermError> {
        if i == 0 || i >= self.len() {
            return Err(PermError::BadTransposition {
                index: i,
                n: self.len(),
            });
        }
        let images = self
            .images
            .iter()
            .map(|&v| match v {
                v if v == i => i + 1,
                v if v == i + 1 => i,
                v => v,
            })
            .collect();
        Ok(Permutation { images })
    }

    /// All of `S_n` in lexicographic order of image notation.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

fn check_same_size(a: &Permutation, b: &Permutation) -> Result<(), PermError> {
    if a.len() != b.len() {
        return Err(PermError::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `3,2,1,4`, `[3,2,1,4]` and whitespace around entries. The empty
/// string and `[]` give the empty permutation.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: String| PermError::Parse {
            input: s.to_string(),
            reason,
        };
        let body = s.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let images = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(images).map_err(|e| parse_err(e.to_string()))
    }
}

/// Lexicographic enumeration of `S_n` (next-permutation stepping).
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_lexicographic(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Left inversion vector `(l_1, …, l_n)` with `1 ≤ l_i ≤ i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct InversionVector {
    entries: Vec<usize>,
}

impl InversionVector {
    pub fn new(entries: Vec<usize>) -> Result<Self, PermError> {
        for (k, &value) in entries.iter().enumerate() {
            let position = k + 1;
            if value < 1 || value > position {
                return Err(PermError::EntryOutOfRange { position, value });
            }
        }
        Ok(InversionVector { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `l_i` for `1 ≤ i ≤ n`.
    pub fn get(&self, i: usize) -> usize {
        self.entries[i - 1]
    }
}

impl TryFrom<Vec<usize>> for InversionVector {
    type Error = PermError;

    fn try_from(entries: Vec<usize>) -> Result<Self, Self::Error> {
        InversionVector::new(entries)
    }
}

impl From<InversionVector> for Vec<usize> {
    fn from(v: InversionVector) -> Self {
        v.entries
    }
}

impl fmt::Display for InversionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Fenwick tree over values `1..=n` counting how many have been inserted.
struct Counter {
    tree: Vec<usize>,
}

impl Counter {
    fn new(n: usize) -> Self {
        Counter {
            tree: vec![0; n + 1],
        }
    }

    fn insert(&mut self, mut v: usize) {
        while v < self.tree.len() {
            self.tree[v] += 1;
            v += v & v.wrapping_neg();
        }
    }

    /// Number of inserted values `≤ v`.
    fn count_le(&self, mut v: usize) -> usize {
        let mut total = 0;
        while v > 0 {
            total += self.tree[v];
            v -= v & v.wrapping_neg();
        }
        total
    }
}

/// `l_i(σ) = #{ j ≤ i : σ(j) ≥ σ(i) }`.
pub fn left_inversion_vector(sigma: &Permutation) -> InversionVector {
    let n = sigma.len();
    let mut seen = Counter::new(n);
    let mut entries = Vec::with_capacity(n);
    for (k, &v) in sigma.images.iter().enumerate() {
        // k earlier values, of which count_le(v) are below v
        entries.push(k - seen.count_le(v) + 1);
        seen.insert(v);
    }
    InversionVector { entries }
}

/// Inverse of [`left_inversion_vector`].
pub fn from_inversion_vector(v: &InversionVector) -> Permutation {
    let n = v.len();
    // the first i images are exactly the values not yet placed at positions > i,
    // and σ(i) is the l_i-th largest of them
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut images = vec![0; n];
    for i in (0..n).rev() {
        let idx = remaining.len() - v.entries[i];
        images[i] = remaining.remove(idx);
    }
    Permutation { images }
}

/// Number of inversions, which equals the length of a reduced word in the
/// adjacent transpositions.
pub fn word_length(sigma: &Permutation) -> usize {
    left_inversion_vector(sigma)
        .entries
        .iter()
        .map(|&l| l - 1)
        .sum()
}

/// `σ ≤ σ′` in the left weak order.
pub fn bruhat_leq(sigma: &Permutation, sigma_prime: &Permutation) -> Result<bool, PermError> {
    let quotient = sigma_prime.compose(&sigma.inverse())?;
    Ok(word_length(sigma_prime) == word_length(sigma) + word_length(&quotient))
}

/// A cover `σ ⋖ τ_i σ` of the left weak order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringPair {
    pub lower: Permutation,
    pub upper: Permutation,
    /// The transposition index `i` with `upper = τ_i ∘ lower`.
    pub position: usize,
}

/// Every covering pair of the left weak order on `S_n`, grouped by the lower
/// element in lexicographic order, then by increasing `i`.
pub fn covering_pairs(n: usize) -> impl Iterator<Item = CoveringPair> {
    Permutation::all(n).flat_map(move |sigma| {
        let inv = sigma.inverse();
        (1..n)
            .filter(move |&i| inv.apply(i) < inv.apply(i + 1))
            .map(move |i| CoveringPair {
                upper: sigma.left_transpose(i).expect("1 <= i < n"),
                lower: sigma.clone(),
                position: i,
            })
            .collect::<Vec<_>>()
    })
}
