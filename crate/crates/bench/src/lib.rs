//! Fixed workloads shared by the criterion benches.

use superbott_core::{BundleSpec, GLWeight, Partition, SuperDim};

pub fn partition(s: &str) -> Partition {
    s.parse().expect("workload partitions are well formed")
}

/// `(λ, μ, ν)` triples of increasing size for LR coefficients.
pub fn lr_triples() -> Vec<(Partition, Partition, Partition)> {
    vec![
        (partition("[2,1]"), partition("[2,1]"), partition("[3,2,1]")),
        (partition("[3,2,1]"), partition("[2,1]"), partition("[4,3,2]")),
        (partition("[4,2,1]"), partition("[3,2,1]"), partition("[5,4,3,1]")),
    ]
}

/// Mixed-sign weight pairs for the rational tensor product.
pub fn tensor_pairs() -> Vec<(GLWeight, GLWeight)> {
    let w = |v: &[i64]| GLWeight::new(v.to_vec()).expect("dominant");
    vec![
        (w(&[1, 0, -1]), w(&[1, 0, -1])),
        (w(&[2, 1, 0, -1]), w(&[1, 1, -1, -2])),
        (w(&[3, 1, 0, -1, -2]), w(&[2, 0, 0, -1, -3])),
    ]
}

/// Bundles for the E1 page, from a few dozen to several thousand expansion tuples.
pub fn e1_specs() -> Vec<BundleSpec> {
    let s = |p, q, m, n, a: &str, b: &str| {
        BundleSpec::new(p, q, SuperDim::new(m, n), partition(a), partition(b)).expect("valid ranks")
    };
    vec![
        s(1, 1, 3, 2, "[3]", "[]"),
        s(2, 1, 5, 2, "[2,1]", "[1]"),
        s(2, 1, 5, 2, "[3]", "[2,1]"),
    ]
}

/// `(λ, μ, m|n)` for the rational Schur character.
pub fn rational_inputs() -> Vec<(Partition, Partition, SuperDim)> {
    vec![
        (partition("[1]"), partition("[1]"), SuperDim::new(3, 1)),
        (partition("[2,1]"), partition("[2]"), SuperDim::new(4, 2)),
        (partition("[3,1]"), partition("[2,1]"), SuperDim::new(5, 2)),
    ]
}
