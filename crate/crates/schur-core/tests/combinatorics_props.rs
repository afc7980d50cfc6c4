use proptest::prelude::*;

use schur_core::combinatorics::*;

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Reads bytes as choices among the letters allowed at each step, building
/// the word from the right so every suffix stays balanced.
fn yamanouchi(choices: &[u8]) -> Word {
    let mut counts = vec![0usize; choices.len() + 2];
    let mut letters = vec![];
    for &b in choices {
        let allowed: Vec<usize> = (1..=choices.len()).filter(|&l| l == 1 || counts[l - 1] > counts[l]).collect();
        let l = allowed[b as usize % allowed.len()];
        counts[l] += 1;
        letters.insert(0, l);
    }
    Word::new(letters)
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn conjugation_is_an_involution(l in partition(5, 5)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn column_structure_reconstructs(l in partition(5, 5)) {
        prop_assert_eq!(column_structure(&l).to_partition(), l);
    }

    #[test]
    fn lr_is_symmetric(l in partition(3, 3), m in partition(3, 3), pick in any::<prop::sample::Index>()) {
        let nus = Partition::all_of_size(l.size() + m.size());
        let nu = pick.get(&nus);
        prop_assert_eq!(lr_coefficient(&l, &m, nu), lr_coefficient(&m, &l, nu));
    }

    #[test]
    fn hook_content_counts_tableaux(l in partition(4, 3), n in 1usize..=4) {
        let counted = enumerate_sstd(&SkewShape::straight(l.clone()), n).len() as u64;
        prop_assert_eq!(schur_dimension(&l, n), counted);
    }

    #[test]
    fn alpha_beta_round_trip(choices in prop::collection::vec(any::<u8>(), 0..=9)) {
        let w = yamanouchi(&choices);
        prop_assert!(w.is_yamanouchi());
        let t = beta(&w).unwrap();
        prop_assert!(t.is_std());
        prop_assert_eq!(alpha(&t).unwrap(), w);
    }

    #[test]
    fn lr_tableaux_are_lr(l in partition(3, 3), m in partition(3, 2)) {
        for nu in Partition::all_of_size(l.size() + m.size()) {
            if !l.is_contained_in(&nu) {
                continue;
            }
            for t in lr_tableaux(&SkewShape::new(nu.clone(), l.clone()).unwrap(), &m) {
                prop_assert!(t.is_sstd() && t.word().is_yamanouchi());
                prop_assert_eq!(t.content(), m.parts().to_vec());
            }
        }
    }
}

#[test]
fn yamanouchi_counts_match_standard_tableaux() {
    // words of length d with content λ biject with standard tableaux of shape λ
    for d in 0..=6 {
        let total: usize = Partition::all_of_size(d).iter().map(|l| enumerate_std(l).len()).sum();
        let words = (0..d).fold(1usize, |acc, _| acc * d.max(1));
        let mut count = 0;
        for code in 0..words {
            let letters: Vec<usize> = (0..d).map(|i| code / d.max(1).pow(i as u32) % d.max(1) + 1).collect();
            if Word::new(letters).is_yamanouchi() {
                count += 1;
            }
        }
        assert_eq!(count, total, "d = {d}");
    }
}
