//! Combinatorics of merge trees and their persistence barcodes.
//!
//! A merge tree records how sublevel-set components are born and merge; the
//! Elder rule reduces it to a strict barcode. Many non-equivalent trees share
//! a barcode, and their number, the tree realization number, is the product
//! of the entries of the left inversion vector of the barcode's permutation
//! type. This crate computes that number, enumerates the trees behind it,
//! relates them to maximal chains in the partition lattice and to
//! phylogenetic trees, and describes its distribution when the permutation
//! type is uniform.
//!
//! | module | contents |
//! |---|---|
//! | [`perm`] | permutations, inversion vectors, left weak order |
//! | [`barcode`] | strict barcodes and their permutation types |
//! | [`mergetree`] | merge trees, the Elder rule, combinatorial equivalence |
//! | [`realization`] | realization numbers and exhaustive enumeration |
//! | [`partition`] | set partitions and maximal chains |
//! | [`phylo`] | Newick trees and the merge tree correspondence |
//! | [`stats`] | exact distribution of realization numbers, samplers |

pub mod barcode;
pub mod mergetree;
pub mod partition;
pub mod perm;
pub mod phylo;
pub mod realization;
pub mod stats;
