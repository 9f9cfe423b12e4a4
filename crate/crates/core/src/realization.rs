//! Tree realization numbers and exhaustive enumeration of the merge trees
//! realizing a strict barcode.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::barcode::StrictBarcode;
use crate::mergetree::{MergeTree, RawMergeTree};
use crate::perm::{left_inversion_vector, Permutation};

/// Product of the left inversion vector entries of `σ`.
pub fn trn(sigma: &Permutation) -> BigUint {
    left_inversion_vector(sigma)
        .entries()
        .iter()
        .fold(BigUint::one(), |acc, &l| acc * l)
}

/// For each finite bar in birth order, the number of bars (essential
/// included) strictly containing it.
pub fn containment_indices(barcode: &StrictBarcode) -> Vec<usize> {
    let bars = barcode.bars();
    bars.iter()
        .map(|inner| {
            1 + bars
                .iter()
                .filter(|outer| outer.birth < inner.birth && outer.death > inner.death)
                .count()
        })
        .collect()
}

/// `R(B) = ∏ μ(I_j)` where `μ(I_j)` counts the bars containing `I_j`.
pub fn trn_of_barcode(barcode: &StrictBarcode) -> BigUint {
    containment_indices(barcode)
        .into_iter()
        .fold(BigUint::one(), |acc, mu| acc * mu)
}

/// `(n+1)!·n!/2^n`, the number of combinatorial merge trees with `n+1` leaves.
pub fn count_combinatorial_merge_trees(n: usize) -> BigUint {
    let n_fact = factorial(n);
    let product = &n_fact * (n_fact.clone() * (n + 1));
    product >> n
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Lazily enumerates every combinatorial class of merge tree whose Elder-rule
/// barcode is `B`, using `B`'s own endpoints as node heights.
///
/// Bars are attached in increasing death order: bar `i` dies by merging into
/// one of the `μ(I_i)` bars that contain it. Each tree is indexed by the
/// mixed-radix number whose digits are these choices, one digit per bar in
/// birth order with the last-born bar least significant; digit `k` picks the
/// `k`-th container by increasing birth (the essential bar first). Trees are
/// emitted in increasing index.
///
/// Leaves are named `b0` (essential) and `b1..bn` by birth order, the merge
/// where bar `i` dies is `d{i}`, and the root is `r`.
#[derive(Debug, Clone)]
pub struct Realizations {
    births: Vec<f64>,
    deaths: Vec<f64>,
    /// Containing bars of each finite bar, essential = 0, by increasing birth.
    containers: Vec<Vec<usize>>,
    /// Finite bars (1-based) by increasing death.
    death_order: Vec<usize>,
    digits: Option<Vec<usize>>,
    total: BigUint,
}

pub fn enumerate_realizations(barcode: &StrictBarcode) -> Realizations {
    let bars = barcode.bars();
    let births: Vec<f64> = std::iter::once(barcode.essential_birth())
        .chain(barcode.births())
        .collect();
    let deaths: Vec<f64> = std::iter::once(f64::INFINITY)
        .chain(barcode.deaths())
        .collect();
    let containers: Vec<Vec<usize>> = (1..=bars.len())
        .map(|i| {
            (0..i)
                .filter(|&k| deaths[k] > deaths[i])
                .collect::<Vec<_>>()
        })
        .collect();
    let mut death_order: Vec<usize> = (1..=bars.len()).collect();
    death_order.sort_by(|&a, &b| deaths[a].total_cmp(&deaths[b]));
    let total = containers
        .iter()
        .fold(BigUint::one(), |acc, c| acc * c.len());
    Realizations {
        births,
        deaths,
        digits: Some(vec![0; containers.len()]),
        containers,
        death_order,
        total,
    }
}

impl Realizations {
    /// Number of trees in the full enumeration.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// The tree with the given index, or `None` past the end.
    pub fn tree_at(&self, index: &BigUint) -> Option<MergeTree> {
        self.digits_of(index).map(|d| self.build(&d))
    }

    /// Repositions the stream so the next tree emitted has the given index.
    /// Disjoint index ranges can be produced independently this way.
    pub fn starting_at(mut self, index: &BigUint) -> Self {
        self.digits = self.digits_of(index);
        self
    }

    fn digits_of(&self, index: &BigUint) -> Option<Vec<usize>> {
        if *index >= self.total {
            return None;
        }
        let mut rest = index.clone();
        let mut digits = vec![0; self.containers.len()];
        for (d, c) in digits.iter_mut().zip(&self.containers).rev() {
            let radix = BigUint::from(c.len());
            *d = (&rest % &radix).to_usize().expect("digit below radix");
            rest /= radix;
        }
        Some(digits)
    }

    fn build(&self, digits: &[usize]) -> MergeTree {
        let leaf = |k: usize| format!("b{k}");
        let merge = |k: usize| format!("d{k}");
        // top[k]: current topmost node of the component whose elder is bar k
        let mut top: Vec<String> = (0..self.births.len()).map(leaf).collect();
        let mut raw = RawMergeTree::new("r");
        for (k, &b) in self.births.iter().enumerate() {
            raw = raw.node(leaf(k), "", b);
        }
        for &i in &self.death_order {
            let j = self.containers[i - 1][digits[i - 1]];
            let node = merge(i);
            raw.nodes.get_mut(&top[i]).unwrap().parent = Some(node.clone());
            raw.nodes.get_mut(&top[j]).unwrap().parent = Some(node.clone());
            raw = raw.node(node.clone(), "", self.deaths[i]);
            top[j] = node;
        }
        raw.nodes.get_mut(&top[0]).unwrap().parent = Some("r".into());
        raw.validate()
            .expect("attaching bars to containing bars yields a valid merge tree")
    }
}

impl Iterator for Realizations {
    type Item = MergeTree;

    fn next(&mut self) -> Option<MergeTree> {
        let digits = self.digits.as_mut()?;
        let tree = {
            let snapshot = digits.clone();
            self.build(&snapshot)
        };
        let digits = self.digits.as_mut().unwrap();
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < self.containers[pos].len() {
                break;
            }
            digits[pos] = 0;
        }
        Some(tree)
    }
}
