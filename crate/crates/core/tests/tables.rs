//! Cross-module table invariants: split pairs differ exactly on their own
//! classes, restrictions sum correctly, spin rows vanish as the theory says.

use spinchar::characters::{CharId, CharTag};
use spinchar::classes::GroupKind;
use spinchar::partitions::strict_partitions_of;
use spinchar::table_of;

#[test]
fn associate_pairs_differ_exactly_on_their_label() {
    for n in 4..=10u32 {
        let t = table_of(GroupKind::SpinSym(n)).unwrap();
        for lambda in strict_partitions_of(n) {
            if lambda.is_even() {
                continue;
            }
            let a = t
                .char_index(&CharId::new(GroupKind::SpinSym(n), lambda.clone(), CharTag::Plain))
                .unwrap();
            let b = t
                .char_index(&CharId::new(
                    GroupKind::SpinSym(n),
                    lambda.clone(),
                    CharTag::Associate,
                ))
                .unwrap();
            for (k, c) in t.classes.iter().enumerate() {
                let differ = t.values[a][k] != t.values[b][k];
                assert_eq!(differ, c.id.cycle_type == lambda, "{lambda} at {}", c.id);
            }
        }
    }
}

#[test]
fn conjugate_pairs_differ_exactly_on_their_label() {
    for n in 4..=10u32 {
        let t = table_of(GroupKind::SpinAlt(n)).unwrap();
        for lambda in strict_partitions_of(n) {
            if !lambda.is_even() {
                continue;
            }
            let a = t
                .char_index(&CharId::new(GroupKind::SpinAlt(n), lambda.clone(), CharTag::Plus))
                .unwrap();
            let b = t
                .char_index(&CharId::new(
                    GroupKind::SpinAlt(n),
                    lambda.clone(),
                    CharTag::Minus,
                ))
                .unwrap();
            for (k, c) in t.classes.iter().enumerate() {
                let differ = t.values[a][k] != t.values[b][k];
                assert_eq!(differ, c.id.cycle_type == lambda, "{lambda} at {}", c.id);
            }
        }
    }
}

#[test]
fn restriction_of_a_pair_sums_to_the_lift() {
    // spin conjugate rows of the cover of A_n sum to the restriction of the
    // corresponding character of the cover of S_n on every shared class
    for n in 4..=9u32 {
        let alt = table_of(GroupKind::SpinAlt(n)).unwrap();
        let sym = table_of(GroupKind::SpinSym(n)).unwrap();
        for lambda in strict_partitions_of(n) {
            if !lambda.is_even() {
                continue;
            }
            let a = alt
                .char_index(&CharId::new(GroupKind::SpinAlt(n), lambda.clone(), CharTag::Plus))
                .unwrap();
            let b = alt
                .char_index(&CharId::new(
                    GroupKind::SpinAlt(n),
                    lambda.clone(),
                    CharTag::Minus,
                ))
                .unwrap();
            let parent = sym
                .char_index(&CharId::new(GroupKind::SpinSym(n), lambda.clone(), CharTag::Plain))
                .unwrap();
            for (k, c) in alt.classes.iter().enumerate() {
                // match the covering class: same cycle type and (1)/(z) side
                use spinchar::classes::ClassTag::*;
                let side = match c.id.tag {
                    One | OnePlus | OneMinus => One,
                    Zee | ZeePlus | ZeeMinus => Zee,
                    _ => Whole,
                };
                let parent_col = sym
                    .classes
                    .iter()
                    .position(|s| {
                        s.id.cycle_type == c.id.cycle_type
                            && (s.id.tag == side || s.id.tag == Whole)
                    })
                    .expect("covering class");
                let sum = alt.values[a][k].add(&alt.values[b][k]);
                assert_eq!(
                    sum, sym.values[parent][parent_col],
                    "restriction sum of <{lambda}> at {}",
                    c.id
                );
            }
        }
    }
}

#[test]
fn spin_rows_vanish_off_odd_and_own_classes() {
    for n in 4..=12u32 {
        for kind in [GroupKind::SpinSym(n), GroupKind::SpinAlt(n)] {
            let t = table_of(kind).unwrap();
            for (row, id) in t.chars.iter().enumerate() {
                if !id.kind.is_spin() {
                    continue;
                }
                for (k, c) in t.classes.iter().enumerate() {
                    if !c.id.cycle_type.all_parts_odd() && c.id.cycle_type != id.label {
                        assert!(
                            t.values[row][k].is_zero(),
                            "{id} nonzero at {}",
                            c.id
                        );
                    }
                }
            }
        }
    }
}
