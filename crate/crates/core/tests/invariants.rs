//! Properties that tie several modules together, checked exhaustively on
//! small sizes and by random testing beyond.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use treecode::barcode::{permutation_type, standard_barcode};
use treecode::mergetree::{
    canonical_code, combinatorially_equivalent, elder_rule, standardize, MergeTree, RawMergeTree,
};
use treecode::partition::{chain_to_tree, enumerate_maximal_chains, refines, tree_to_chain};
use treecode::perm::{covering_pairs, left_inversion_vector, Permutation};
use treecode::phylo::{
    all_labelled_trees, count_phylo_classes, eta_brute_force, h_delta, t_delta, PhyloNode,
    PhyloTree,
};
use treecode::realization::{count_combinatorial_merge_trees, enumerate_realizations, trn};
use treecode::stats::{mean, trn_distribution};

fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

/// Same nodes and parents, new heights: leaves keep their birth order,
/// internal nodes keep their death order, but births and deaths interleave
/// however `leaf_heights` and `gaps` dictate.
fn reheight(tree: &MergeTree, leaf_heights: &[f64], gaps: &[f64]) -> MergeTree {
    let mut heights = vec![0.0; tree.node_count()];
    let mut sorted = leaf_heights.to_vec();
    sorted.sort_by(f64::total_cmp);
    for (&v, &h) in tree.leaves().iter().zip(&sorted) {
        heights[v] = h;
    }
    let mut last = f64::NEG_INFINITY;
    for (&v, &gap) in tree.internals().iter().zip(gaps) {
        let floor = tree
            .children(v)
            .iter()
            .map(|&c| heights[c])
            .fold(last, f64::max);
        heights[v] = floor + gap;
        last = heights[v];
    }
    let mut raw = tree.to_raw();
    for (v, &h) in heights.iter().enumerate() {
        if v != tree.root() {
            raw.nodes.get_mut(tree.name(v)).unwrap().height = Some(h);
        }
    }
    raw.validate().expect("reheighting keeps the tree valid")
}

fn all_standard_trees(n: usize) -> Vec<MergeTree> {
    enumerate_maximal_chains(n)
        .map(|c| chain_to_tree(&c))
        .collect()
}

fn permutation_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<u32>(), n).prop_map(|keys| {
            let mut idx: Vec<usize> = (1..=keys.len()).collect();
            idx.sort_by_key(|&i| (keys[i - 1], i));
            Permutation::new(idx).unwrap()
        })
    })
}

/// A generic merge tree drawn from a random combinatorial class.
fn tree_strategy() -> impl Strategy<Value = MergeTree> {
    (permutation_strategy(6), any::<u64>()).prop_flat_map(|(sigma, pick)| {
        let n = sigma.len();
        let realizations = enumerate_realizations(&standard_barcode(&sigma));
        let index = BigUint::from(pick) % realizations.total();
        let tree = realizations.tree_at(&index).unwrap();
        (
            Just(tree),
            prop::collection::btree_set(0u32..100_000, n + 1),
            prop::collection::vec(1u32..10_000, n + 1),
        )
            .prop_map(|(tree, leaves, gaps)| {
                let leaves: Vec<f64> = leaves.into_iter().map(|x| x as f64 / 1000.0).collect();
                let gaps: Vec<f64> = gaps.into_iter().map(|x| x as f64 / 997.0).collect();
                reheight(&tree, &leaves, &gaps)
            })
    })
}

#[test]
fn adjacent_permutations_never_share_a_realization_number() {
    for n in 2..=6 {
        for pair in covering_pairs(n) {
            assert_ne!(trn(&pair.lower), trn(&pair.upper));
        }
    }
}

#[test]
fn ratio_update_needs_the_position_of_the_moved_value() {
    let sigma = perm(&[1, 3, 2]);
    let up = sigma.left_transpose(1).unwrap();
    assert_eq!(up, perm(&[2, 3, 1]));
    let l = left_inversion_vector(&sigma);
    // entry at position i+1 = 2 would predict R·(l_2+1)/l_2 = 4
    assert_eq!(trn(&sigma) * (l.get(2) + 1) / l.get(2), BigUint::from(4u32));
    assert_eq!(trn(&up), BigUint::from(3u32));
    // value i+1 = 2 sits at position 3, whose entry is the one that grows
    let q = sigma.inverse().apply(2);
    assert_eq!(trn(&sigma) * (l.get(q) + 1) / l.get(q), trn(&up));
}

#[test]
fn standard_barcodes_recover_their_type() {
    for n in 0..=7 {
        for sigma in Permutation::all(n) {
            assert_eq!(permutation_type(&standard_barcode(&sigma)), sigma);
        }
    }
}

#[test]
fn realization_counts_exhaustive_up_to_seven_bars() {
    for n in 1..=7 {
        let mut total = BigUint::default();
        for sigma in Permutation::all(n) {
            let e = enumerate_realizations(&standard_barcode(&sigma));
            let emitted = e.count();
            assert_eq!(BigUint::from(emitted), trn(&sigma), "{sigma}");
            total += emitted;
        }
        assert_eq!(total, count_combinatorial_merge_trees(n));
    }
}

#[test]
fn class_determines_permutation_type_exhaustively() {
    for n in 0..=5 {
        let mut seen: HashMap<_, Permutation> = HashMap::new();
        for tree in all_standard_trees(n) {
            let sigma = permutation_type(&elder_rule(&tree));
            // a stretched copy: births spread out, deaths bunched close
            let leaves: Vec<f64> = (0..=n).map(|i| i as f64 * 3.5).collect();
            let gaps: Vec<f64> = (0..n + 1).map(|j| 0.01 + j as f64 * 0.001).collect();
            let other = reheight(&tree, &leaves, &gaps);
            assert_eq!(canonical_code(&other), canonical_code(&tree));
            assert_eq!(permutation_type(&elder_rule(&other)), sigma);
            let code = canonical_code(&tree);
            if let Some(prev) = seen.insert(code, sigma.clone()) {
                assert_eq!(prev, sigma);
            }
        }
    }
}

#[test]
fn standard_trees_use_the_standard_heights() {
    for n in 0..=4 {
        for tree in all_standard_trees(n) {
            let mut leaves: Vec<f64> = tree
                .leaves()
                .iter()
                .map(|&v| tree.height(v).unwrap())
                .collect();
            let mut internals: Vec<f64> = tree
                .internals()
                .iter()
                .map(|&v| tree.height(v).unwrap())
                .collect();
            leaves.sort_by(f64::total_cmp);
            internals.sort_by(f64::total_cmp);
            assert_eq!(leaves, (0..=n).map(|i| i as f64).collect::<Vec<_>>());
            assert_eq!(
                internals,
                (n + 1..=2 * n).map(|i| i as f64).collect::<Vec<_>>()
            );
            assert_eq!(standardize(&tree), tree);
        }
    }
}

#[test]
fn chains_step_by_single_merges() {
    for n in 1..=4 {
        for chain in enumerate_maximal_chains(n) {
            for w in chain.partitions().windows(2) {
                assert_eq!(w[0].block_count(), w[1].block_count() + 1);
                assert!(refines(&w[0], &w[1]).unwrap());
            }
            assert_eq!(tree_to_chain(&chain_to_tree(&chain)).unwrap(), chain);
        }
    }
}

#[test]
fn standard_trees_round_trip_through_chains() {
    for n in 1..=4 {
        for sigma in Permutation::all(n) {
            for tree in enumerate_realizations(&standard_barcode(&sigma)) {
                let standard = standardize(&tree);
                let back = chain_to_tree(&tree_to_chain(&standard).unwrap());
                assert_eq!(canonical_code(&back), canonical_code(&tree));
            }
        }
    }
}

#[test]
fn eta_counts_the_classes_behind_each_labelled_shape() {
    for n in 1..=5 {
        let mut groups: BTreeMap<String, (u64, PhyloTree)> = BTreeMap::new();
        for tree in all_standard_trees(n) {
            let phylo = t_delta(&tree, 1.0).unwrap().combinatorial();
            groups.entry(phylo.topology_key()).or_insert((0, phylo)).0 += 1;
        }
        let mut total = BigUint::default();
        for (count, phylo) in groups.values() {
            let eta = eta_brute_force(phylo).unwrap();
            assert_eq!(eta, BigUint::from(*count), "{}", phylo.to_newick());
            total += eta;
        }
        assert_eq!(total, count_combinatorial_merge_trees(n));
    }
}

#[test]
fn fewer_phylogenetic_classes_than_merge_tree_classes() {
    for n in 1..=12 {
        let phylo = count_phylo_classes(n + 1).unwrap();
        let merge = count_combinatorial_merge_trees(n);
        assert!(phylo <= merge);
        assert_eq!(phylo < merge, n >= 3, "n = {n}");
    }
}

#[test]
fn relabelled_fiber_has_one_unlabelled_tree() {
    // leaves 0, 1, 2, 3; (0,1) merge at 4, (2,3) at 5, everything at 6
    let tree = RawMergeTree::new("r")
        .node("a", "p", 0.0)
        .node("b", "p", 1.0)
        .node("c", "q", 2.0)
        .node("d", "q", 3.0)
        .node("p", "s", 4.0)
        .node("q", "s", 5.0)
        .node("s", "r", 6.0)
        .validate()
        .unwrap();
    let phylo = t_delta(&tree, 2.0).unwrap();
    let leaves = tree.leaves().len();
    let labels: Vec<String> = (0..leaves).map(|i| i.to_string()).collect();

    let mut labelled = HashSet::new();
    let mut fibers = 0;
    for pi in Permutation::all(leaves) {
        let renamed = phylo
            .relabel(|l| {
                let i: usize = l.parse().unwrap();
                labels[pi.apply(i + 1) - 1].clone()
            })
            .unwrap();
        let back = h_delta(&renamed, 2.0).unwrap();
        assert!(combinatorially_equivalent(&back.tree, &tree));
        assert_eq!(canonical_code(&back.tree), canonical_code(&tree));
        labelled.insert(back.labels_by_birth());
        fibers += 1;
    }
    assert_eq!(fibers, 24);
    assert_eq!(labelled.len(), 24);
}

#[test]
fn nearby_trees_can_have_different_split_topologies() {
    let eps = 1e-3;
    // the leaves at 1 and 1+ε trade places; every height moves by at most ε
    let make = |x: f64, y: f64| {
        RawMergeTree::new("r")
            .node("u", "m", 0.0)
            .node("v", "m", x)
            .node("w", "top", y)
            .node("m", "top", 2.0)
            .node("top", "r", 3.0)
            .validate()
            .unwrap()
    };
    let left = make(1.0, 1.0 + eps);
    let right = make(1.0 + eps, 1.0);
    assert!(!combinatorially_equivalent(&left, &right));
    let (pl, pr) = (t_delta(&left, 1.0).unwrap(), t_delta(&right, 1.0).unwrap());
    assert_ne!(pl.topology_key(), pr.topology_key());
    assert_eq!(pl.combinatorial().to_newick(), "(((0,1),2));");
    assert_eq!(pr.combinatorial().to_newick(), "(((0,2),1));");
}

#[test]
fn h_delta_shifts_with_delta() {
    let p = treecode::phylo::parse_newick("((A:1.5,B:0.5):2,(C:1,D:3.25):0.75):1;").unwrap();
    let a = h_delta(&p, 10.0).unwrap();
    let b = h_delta(&p, 12.5).unwrap();
    assert!(combinatorially_equivalent(&a.tree, &b.tree));
    assert_eq!(a.tree.translate(2.5), b.tree);
    assert_eq!(a.labels_by_birth(), b.labels_by_birth());
}

#[test]
fn probability_mass_and_mean() {
    for n in 1..=14 {
        let d = trn_distribution(n).unwrap();
        let pmf = d.to_pmf();
        let mass: BigRational = pmf.values().sum();
        assert!(mass.is_one());
        let m: BigRational = pmf
            .iter()
            .map(|(&x, p)| p * BigRational::from_integer(x.into()))
            .sum();
        assert_eq!(m, mean(n), "n = {n}");
        let counted: u64 = d.multiplicities().map(|(_, c)| c).sum();
        assert_eq!(counted, d.total());
    }
}

/// The permutation of `S_k` that sends `k` to `j` and agrees with `σ` on
/// relative order elsewhere.
fn embed(sigma: &Permutation, j: usize) -> Permutation {
    let mut images: Vec<usize> = sigma
        .images()
        .iter()
        .map(|&v| if v >= j { v + 1 } else { v })
        .collect();
    images.push(j);
    Permutation::new(images).unwrap()
}

#[test]
fn embedding_scales_the_realization_number() {
    for k in 1..=6 {
        for sigma in Permutation::all(k - 1) {
            for j in 1..=k {
                let r = trn(&sigma).to_u64().unwrap();
                let lifted = trn(&embed(&sigma, j)).to_u64().unwrap();
                assert_eq!(lifted, (k - j + 1) as u64 * r, "{sigma} j={j}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn elder_rule_bars_match_tree_heights(tree in tree_strategy()) {
        let b = elder_rule(&tree);
        prop_assert_eq!(b.len() + 1, tree.leaves().len());
        prop_assert_eq!(b.len(), tree.internals().len());
        let mut deaths: Vec<f64> = b.deaths().collect();
        let mut internals: Vec<f64> = tree.internals().iter().map(|&v| tree.height(v).unwrap()).collect();
        deaths.sort_by(f64::total_cmp);
        internals.sort_by(f64::total_cmp);
        prop_assert_eq!(deaths, internals);
        let mut births: Vec<f64> = std::iter::once(b.essential_birth()).chain(b.births()).collect();
        let mut leaves: Vec<f64> = tree.leaves().iter().map(|&v| tree.height(v).unwrap()).collect();
        births.sort_by(f64::total_cmp);
        leaves.sort_by(f64::total_cmp);
        prop_assert_eq!(births, leaves);
    }

    #[test]
    fn standardize_keeps_the_class(tree in tree_strategy()) {
        let s = standardize(&tree);
        prop_assert!(s.is_standard_form());
        prop_assert_eq!(canonical_code(&s), canonical_code(&tree));
        prop_assert_eq!(
            elder_rule(&s),
            standard_barcode(&permutation_type(&elder_rule(&tree)))
        );
    }

    #[test]
    fn translation_keeps_the_class(tree in tree_strategy(), shift in -50.0f64..50.0) {
        prop_assert!(combinatorially_equivalent(&tree, &tree.translate(shift)));
    }

    #[test]
    fn h_delta_inverts_t_delta(tree in tree_strategy(), delta in 0.0f64..5.0, top in -20.0f64..20.0) {
        let back = h_delta(&t_delta(&tree, delta).unwrap(), top).unwrap();
        prop_assert!(combinatorially_equivalent(&back.tree, &tree));
    }

    #[test]
    fn random_metric_trees_give_valid_merge_trees(
        shape in 0usize..105,
        lengths in prop::collection::vec(1u32..1_000_000, 16),
    ) {
        let base = &all_labelled_trees(5)[shape];
        let nodes: Vec<PhyloNode> = base
            .nodes()
            .iter()
            .enumerate()
            .map(|(i, node)| PhyloNode {
                length: node.parent.map(|_| lengths[i] as f64 / 1e4),
                ..node.clone()
            })
            .collect();
        let metric = PhyloTree::new(nodes, base.root()).unwrap();
        // distinct lengths almost surely give distinct heights; a collision
        // must surface as a validation error, never a panic
        if let Ok(labelled) = h_delta(&metric, 100.0) {
            prop_assert_eq!(labelled.tree.leaves().len(), 5);
            prop_assert_eq!(labelled.labels.len(), 5);
        }
    }
}
