//! Scaled randomized invariants that are too heavy for unit tests:
//! large-sample orthogonality of the walk sampler and full coverage of
//! the size-4 group.

use std::collections::HashSet;

use lcdkit::construct::{
    default_walk_length, enumerate_orthogonal, is_orthogonal, random_orthogonal,
};

#[test]
fn walk_outputs_are_orthogonal_at_scale() {
    for n in 4..=12usize {
        let len = default_walk_length(n);
        for sample in 0..1000u64 {
            let seed = 0x4000 * n as u64 + sample;
            let q = random_orthogonal(n, seed, len).unwrap();
            assert!(
                is_orthogonal(q.matrix()).unwrap(),
                "sample {sample} at size {n} is not orthogonal"
            );
        }
    }
    println!("9000 sampled walks, all orthogonal");
}

#[test]
fn walks_are_deterministic_and_cover_the_size_4_group() {
    let q1 = random_orthogonal(8, 77, default_walk_length(8)).unwrap();
    let q2 = random_orthogonal(8, 77, default_walk_length(8)).unwrap();
    assert_eq!(q1, q2, "same seed must give the same matrix");

    let group: HashSet<_> = enumerate_orthogonal(4)
        .unwrap()
        .into_iter()
        .map(|q| q.into_matrix())
        .collect();
    assert_eq!(group.len(), 48);

    let mut visited = HashSet::new();
    for sample in 0..500u64 {
        let q = random_orthogonal(4, 9000 + sample, default_walk_length(4)).unwrap();
        visited.insert(q.into_matrix());
    }
    assert!(
        visited.is_subset(&group),
        "a walk left the enumerated group"
    );
    assert_eq!(
        visited.len(),
        group.len(),
        "500 walks should visit the whole 48-element group"
    );
}
