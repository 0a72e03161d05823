mod common;

use common::{minor_gcd, rows_i64};
use hopf_core::abelian::{group_from_presentation, is_isomorphic, torsion_order, Presentation};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn presentation_strategy() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(gens, rels)| {
        (
            Just(gens),
            prop::collection::vec(prop::collection::vec(-3i64..=3, gens), rels),
        )
    })
}

fn group(gens: usize, rows: &[Vec<i64>]) -> hopf_core::abelian::FgAbelianGroup {
    group_from_presentation(&Presentation::from_rows(gens, rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn invariant_under_row_moves((gens, rows) in presentation_strategy(), i in 0usize..3, j in 0usize..3) {
        let base = group(gens, &rows);
        let (i, j) = (i % rows.len(), j % rows.len());

        let mut swapped = rows.clone();
        swapped.swap(i, j);
        prop_assert!(is_isomorphic(&base, &group(gens, &swapped)));

        let mut negated = rows.clone();
        negated[i] = negated[i].iter().map(|x| -x).collect();
        prop_assert!(is_isomorphic(&base, &group(gens, &negated)));

        if i != j {
            let mut added = rows.clone();
            let src = added[j].clone();
            for (x, y) in added[i].iter_mut().zip(src) {
                *x += y;
            }
            prop_assert!(is_isomorphic(&base, &group(gens, &added)));
        }

        let mut padded = rows.clone();
        padded.push(vec![0; gens]);
        prop_assert_eq!(base, group(gens, &padded));
    }

    #[test]
    fn torsion_matches_minor_chain((gens, rows) in presentation_strategy()) {
        let g = group(gens, &rows);
        let oracle = rows_i64(&rows);
        // d_1 ... d_r = gcd of r-minors where r = rank of the relation matrix
        let max_k = rows.len().min(gens);
        let r = (1..=max_k).rev().find(|&k| !minor_gcd(&oracle, k).is_zero()).unwrap_or(0);
        prop_assert_eq!(g.rank(), gens - r);
        let product = if r == 0 { BigInt::one() } else { minor_gcd(&oracle, r) };
        prop_assert_eq!(torsion_order(&g), product);
    }
}
