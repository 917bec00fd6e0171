//! Spin character tables of the double covers of `S_n` and `A_n`.
//!
//! Values on classes with all parts odd come from the bar recursion (the
//! shifted analogue of the rim-hook rule): removing a bar of odd length `b`
//! from a strict partition either shortens one part, with sign `(-1)^s` where
//! `s` counts the parts jumped while re-sorting, or removes two parts summing
//! to `b` (rows `i < j`, 1-based), with coefficient `2 * (-1)^(i+j+1+lambda_j)`.
//! The resulting integers are scaled by the 2-power
//! `2^((len(mu) - len(lambda) - [lambda odd]) / 2)`.
//!
//! On the split classes labelled by the character's own partition the values
//! are `+/- i^((n-r+1)/2) sqrt(lambda_1 ... lambda_r / 2)` (associate pairs in
//! the cover of `S_n`) and the conjugate pairs in the cover of `A_n` deviate
//! by `+/- i^((n-r)/2) sqrt(lambda_1 ... lambda_r) / 2` on their own split
//! classes. Everything else vanishes.
//!
//! None of these constants is trusted: the recursion is cross-checked against
//! an independent symmetric-function expansion in the test suite, and every
//! produced table must pass exact orthogonality and degree-sum checks before
//! it is returned.

use std::sync::LazyLock;

use dashmap::DashMap;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use thiserror::Error;

use crate::characters::{mn_value, table_alt, CharError, CharId, CharTag, CharacterTable};
use crate::classes::{classes_of, ClassError, ClassTag, GroupKind};
use crate::partitions::{partitions_of, strict_partitions_of, Partition};
use crate::values::{rat, rat_frac, AlgebraicValue};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpinError {
    #[error("partitions have different sizes")]
    SizeMismatch,
    #[error("partition must have distinct parts")]
    NotStrict,
    #[error("class type must have all parts odd")]
    NotOddType,
    #[error("partition has the wrong parity for this family")]
    NotApplicable,
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Char(#[from] CharError),
}

/// Value of the spin character on split classes is attached to the
/// `(1)`-labelled half; the `z`-translate carries the negation.
pub type SpinValue = AlgebraicValue;

/// One way of removing a bar of a given length from a strict partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarRemoval {
    /// The strict partition left after the removal.
    pub result: Partition,
    /// Contribution multiplier: `(-1)^s` for a shortened row, `+/-2` for a
    /// removed pair of rows.
    pub coefficient: i64,
    /// Rows involved (1-based indices into the original partition).
    pub rows: (usize, Option<usize>),
}

/// The bar structure of a strict partition: all removals of a given length.
#[derive(Debug, Clone)]
pub struct BarDiagram {
    pub partition: Partition,
    pub length: u32,
    pub removals: Vec<BarRemoval>,
}

impl BarDiagram {
    pub fn new(lambda: &Partition, b: u32) -> Result<Self, SpinError> {
        if !lambda.is_strict() {
            return Err(SpinError::NotStrict);
        }
        Ok(BarDiagram {
            partition: lambda.clone(),
            length: b,
            removals: bar_removals(lambda, b),
        })
    }
}

/// All removals of a bar of length `b` from the strict partition `lambda`.
pub fn bar_removals(lambda: &Partition, b: u32) -> Vec<BarRemoval> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    for (i0, &v) in parts.iter().enumerate() {
        if v < b {
            continue;
        }
        let rest = v - b;
        if rest > 0 && parts.contains(&rest) {
            continue;
        }
        let swaps = parts
            .iter()
            .enumerate()
            .filter(|&(j0, &w)| j0 != i0 && w < v && w > rest)
            .count();
        let mut new_parts: Vec<u32> = parts
            .iter()
            .enumerate()
            .filter(|&(j0, _)| j0 != i0)
            .map(|(_, &w)| w)
            .collect();
        if rest > 0 {
            new_parts.push(rest);
            new_parts.sort_unstable_by(|a, b| b.cmp(a));
        }
        out.push(BarRemoval {
            result: Partition::new(new_parts).expect("strict partition"),
            coefficient: if swaps % 2 == 0 { 1 } else { -1 },
            rows: (i0 + 1, None),
        });
    }
    for i0 in 0..parts.len() {
        for j0 in (i0 + 1)..parts.len() {
            if parts[i0] + parts[j0] != b {
                continue;
            }
            let new_parts: Vec<u32> = parts
                .iter()
                .enumerate()
                .filter(|&(k0, _)| k0 != i0 && k0 != j0)
                .map(|(_, &w)| w)
                .collect();
            // rows i < j (1-based): sign (-1)^(i + j + 1 + lambda_j)
            let exp = (i0 + 1) + (j0 + 1) + 1 + parts[j0] as usize;
            let coeff = if exp % 2 == 0 { 2 } else { -2 };
            out.push(BarRemoval {
                result: Partition::new(new_parts).expect("strict partition"),
                coefficient: coeff,
                rows: (i0 + 1, Some(j0 + 1)),
            });
        }
    }
    out
}

type BarKey = (Vec<u32>, Vec<u32>);
static BAR_CACHE: LazyLock<DashMap<BarKey, i64>> = LazyLock::new(DashMap::new);

/// The integer part of the bar recursion (values before the 2-power scaling).
fn bar_x(lambda: &Partition, mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key: BarKey = (lambda.parts().to_vec(), mu.to_vec());
    if let Some(v) = BAR_CACHE.get(&key) {
        return *v;
    }
    let b = mu[0];
    let mut total = 0i64;
    for removal in bar_removals(lambda, b) {
        total += removal.coefficient * bar_x(&removal.result, &mu[1..]);
    }
    BAR_CACHE.insert(key, total);
    total
}

/// Exact value of the spin character labelled by the strict partition
/// `lambda` on the `(1)`-labelled class of all-odd cycle type `mu`. The value
/// on the `z`-translate is the negation. Always a rational integer.
pub fn spin_value_odd(lambda: &Partition, mu: &Partition) -> Result<AlgebraicValue, SpinError> {
    if !lambda.is_strict() {
        return Err(SpinError::NotStrict);
    }
    if !mu.all_parts_odd() {
        return Err(SpinError::NotOddType);
    }
    if lambda.n() != mu.n() {
        return Err(SpinError::SizeMismatch);
    }
    let x = bar_x(lambda, mu.parts());
    let ell = mu.len() as i64;
    let r = lambda.len() as i64;
    let eps = if lambda.is_even() { 0 } else { 1 };
    let exp = ell - r - eps;
    debug_assert!(exp % 2 == 0, "2-power exponent must be even");
    let value = rat(x) * rat(2).pow((exp / 2) as i32);
    if !value.is_integer() {
        return Err(SpinError::Char(CharError::SelfCheck(format!(
            "spin value of <{lambda}> on ({mu}) is not integral: {value}"
        ))));
    }
    Ok(AlgebraicValue::from_rational(value))
}

/// Number of standard shifted tableaux of strict shape `lambda`.
pub fn shifted_tableaux_count(lambda: &Partition) -> u128 {
    let n = lambda.n();
    let parts = lambda.parts();
    let mut value = rat(1);
    for k in 1..=n as i64 {
        value = value * rat(k);
    }
    for &a in parts {
        for k in 1..=a as i64 {
            value = value / rat(k);
        }
    }
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            value = value * rat_frac(parts[i] as i64 - parts[j] as i64, parts[i] as i64 + parts[j] as i64);
        }
    }
    assert!(value.is_integer());
    value.to_integer().to_u128().expect("tableaux count fits")
}

/// Degree of the spin character labelled `lambda`:
/// `2^floor((n - r)/2)` times the shifted tableaux count.
pub fn spin_degree(lambda: &Partition) -> u128 {
    let n = lambda.n();
    let r = lambda.len() as u32;
    (1u128 << ((n - r) / 2)) * shifted_tableaux_count(lambda)
}

/// Values of the two characters of a split pair on the canonical half of the
/// split class labelled by their own partition:
///
/// - `lambda` odd: the associate pair of the cover of `S_n` takes
///   `(e, -e)` on the `(1)`-half, `e = i^((n-r+1)/2) sqrt(prod / 2)`.
/// - `lambda` even with an even part: the conjugate pair of the cover of
///   `A_n` takes `(d, -d)` on the `+`-half, `d = i^((n-r)/2) sqrt(prod) / 2`.
/// - `lambda` even with all parts odd: the conjugate pair takes
///   `(v/2 + d, v/2 - d)` on the `(1)+`-half, `v` the bar-recursion value.
pub fn spin_exceptional_value(
    lambda: &Partition,
) -> Result<(AlgebraicValue, AlgebraicValue), SpinError> {
    if !lambda.is_strict() {
        return Err(SpinError::NotStrict);
    }
    let n = lambda.n() as i64;
    let r = lambda.len() as i64;
    let prod: i64 = lambda.parts().iter().map(|&a| a as i64).product();
    if !lambda.is_even() {
        // associate pair on the split class in the cover of S_n
        let k = ((n - r + 1) / 2).rem_euclid(4) as u32;
        debug_assert_eq!(prod % 2, 0, "odd partition has an even part");
        let e = AlgebraicValue::i_power(k).mul(&AlgebraicValue::sqrt_int(prod / 2));
        Ok((e.clone(), e.neg()))
    } else {
        let k = ((n - r) / 2).rem_euclid(4) as u32;
        let d = AlgebraicValue::i_power(k)
            .mul(&AlgebraicValue::sqrt_int(prod))
            .scale(&rat_frac(1, 2));
        if lambda.all_parts_odd() {
            let v = spin_value_odd(lambda, lambda)?;
            let half = v.scale(&rat_frac(1, 2));
            Ok((half.add(&d), half.sub(&d)))
        } else {
            Ok((d.clone(), d.neg()))
        }
    }
}

/// Full character table of the double cover of `S_n`: lifted rows keep kind
/// `Sym(n)`, spin rows carry `SpinSym(n)`.
pub fn table_spin_sym(n: u32) -> Result<std::sync::Arc<CharacterTable>, SpinError> {
    crate::characters::table_for_kind_cached(GroupKind::SpinSym(n), || {
        build_spin_sym(n).map_err(|e| match e {
            SpinError::Char(c) => c,
            other => CharError::SelfCheck(other.to_string()),
        })
    })
    .map_err(SpinError::Char)
}

fn build_spin_sym(n: u32) -> Result<CharacterTable, SpinError> {
    let kind = GroupKind::SpinSym(n);
    let classes = classes_of(kind)?;
    let mut chars: Vec<CharId> = Vec::new();
    let mut specs: Vec<SpinRowSpec> = Vec::new();
    for lambda in partitions_of(n) {
        chars.push(CharId::new(GroupKind::Sym(n), lambda.clone(), CharTag::Plain));
        specs.push(SpinRowSpec::Lift(lambda));
    }
    for lambda in strict_partitions_of(n) {
        if lambda.is_even() {
            chars.push(CharId::new(kind, lambda.clone(), CharTag::Plain));
            specs.push(SpinRowSpec::SelfAssociate(lambda));
        } else {
            chars.push(CharId::new(kind, lambda.clone(), CharTag::Plain));
            specs.push(SpinRowSpec::AssociatePair(lambda.clone(), false));
            chars.push(CharId::new(kind, lambda.clone(), CharTag::Associate));
            specs.push(SpinRowSpec::AssociatePair(lambda, true));
        }
    }
    let values: Result<Vec<Vec<AlgebraicValue>>, SpinError> = specs
        .par_iter()
        .map(|spec| {
            classes
                .iter()
                .map(|c| spin_sym_entry(spec, &c.id.cycle_type, c.id.tag))
                .collect()
        })
        .collect();
    let values = values?;
    finish_table(kind, chars, classes, values, n)
}

enum SpinRowSpec {
    /// Lift of the `S_n`-character with this label.
    Lift(Partition),
    /// Spin character with even strict label (its own associate).
    SelfAssociate(Partition),
    /// Spin character with odd strict label; `true` for the associate.
    AssociatePair(Partition, bool),
}

fn spin_sym_entry(
    spec: &SpinRowSpec,
    mu: &Partition,
    tag: ClassTag,
) -> Result<AlgebraicValue, SpinError> {
    match spec {
        SpinRowSpec::Lift(lambda) => Ok(AlgebraicValue::from_int(mn_value(lambda, mu)?)),
        SpinRowSpec::SelfAssociate(lambda) => {
            if mu.all_parts_odd() {
                let v = spin_value_odd(lambda, mu)?;
                Ok(if tag == ClassTag::Zee { v.neg() } else { v })
            } else {
                Ok(AlgebraicValue::zero())
            }
        }
        SpinRowSpec::AssociatePair(lambda, associate) => {
            if mu.all_parts_odd() {
                let v = spin_value_odd(lambda, mu)?;
                // all-odd classes are even, so associates agree there
                Ok(if tag == ClassTag::Zee { v.neg() } else { v })
            } else if mu == lambda {
                let (e_plain, e_assoc) = spin_exceptional_value(lambda)?;
                let e = if *associate { e_assoc } else { e_plain };
                Ok(if tag == ClassTag::Zee { e.neg() } else { e })
            } else {
                Ok(AlgebraicValue::zero())
            }
        }
    }
}

/// Full character table of the double cover of `A_n`: lifted rows keep kind
/// `Alt(n)`, spin rows carry `SpinAlt(n)`.
pub fn table_spin_alt(n: u32) -> Result<std::sync::Arc<CharacterTable>, SpinError> {
    crate::characters::table_for_kind_cached(GroupKind::SpinAlt(n), || {
        build_spin_alt(n).map_err(|e| match e {
            SpinError::Char(c) => c,
            other => CharError::SelfCheck(other.to_string()),
        })
    })
    .map_err(SpinError::Char)
}

fn build_spin_alt(n: u32) -> Result<CharacterTable, SpinError> {
    let kind = GroupKind::SpinAlt(n);
    let classes = classes_of(kind)?;
    let alt = table_alt(n)?;
    let mut chars: Vec<CharId> = Vec::new();
    let mut rows: Vec<Vec<AlgebraicValue>> = Vec::new();

    // lifted rows: value at a cover class is the A_n-value at the image class
    for (row, id) in alt.chars.iter().enumerate() {
        chars.push(id.clone());
        let mut vals = Vec::with_capacity(classes.len());
        for c in &classes {
            let image_tag = match c.id.tag {
                ClassTag::OnePlus | ClassTag::ZeePlus | ClassTag::Plus => ClassTag::Plus,
                ClassTag::OneMinus | ClassTag::ZeeMinus | ClassTag::Minus => ClassTag::Minus,
                _ => ClassTag::Whole,
            };
            // the +/- refinement exists in A_n only when the A_n class splits
            let col = alt
                .classes
                .iter()
                .position(|a| {
                    a.id.cycle_type == c.id.cycle_type
                        && (a.id.tag == image_tag || a.id.tag == ClassTag::Whole)
                })
                .expect("image class");
            vals.push(alt.values[row][col].clone());
        }
        rows.push(vals);
    }

    // spin rows
    for lambda in strict_partitions_of(n) {
        if !lambda.is_even() {
            // irreducible restriction of the associate pair
            chars.push(CharId::new(kind, lambda.clone(), CharTag::Plain));
            let mut vals = Vec::with_capacity(classes.len());
            for c in &classes {
                let mu = &c.id.cycle_type;
                if mu.all_parts_odd() {
                    let v = spin_value_odd(&lambda, mu)?;
                    vals.push(if is_zee(c.id.tag) { v.neg() } else { v });
                } else {
                    vals.push(AlgebraicValue::zero());
                }
            }
            rows.push(vals);
        } else {
            // conjugate pair
            let (val_plus, val_minus) = spin_exceptional_value(&lambda)?;
            for (tag, own) in [(CharTag::Plus, &val_plus), (CharTag::Minus, &val_minus)] {
                chars.push(CharId::new(kind, lambda.clone(), tag));
                let mut vals = Vec::with_capacity(classes.len());
                for c in &classes {
                    let mu = &c.id.cycle_type;
                    if *mu == lambda {
                        // own split classes: the pair deviates by +/- d
                        let v = own_class_value(own, &val_plus, &val_minus, tag, c.id.tag);
                        vals.push(v);
                    } else if mu.all_parts_odd() {
                        let v = spin_value_odd(&lambda, mu)?.scale(&rat_frac(1, 2));
                        vals.push(if is_zee(c.id.tag) { v.neg() } else { v });
                    } else {
                        vals.push(AlgebraicValue::zero());
                    }
                }
                rows.push(vals);
            }
        }
    }
    finish_table(kind, chars, classes, rows, n)
}

fn is_zee(tag: ClassTag) -> bool {
    matches!(tag, ClassTag::Zee | ClassTag::ZeePlus | ClassTag::ZeeMinus)
}

/// Value of one member of a conjugate pair on one of its own split classes.
/// `own` is the member's value on the canonical half (`(1)+` or `+`).
fn own_class_value(
    own: &AlgebraicValue,
    val_plus: &AlgebraicValue,
    val_minus: &AlgebraicValue,
    char_tag: CharTag,
    class_tag: ClassTag,
) -> AlgebraicValue {
    // On the +/- partner half the two members exchange values; on z-translates
    // everything negates.
    let swapped = match class_tag {
        ClassTag::OnePlus | ClassTag::ZeePlus | ClassTag::Plus => false,
        ClassTag::OneMinus | ClassTag::ZeeMinus | ClassTag::Minus => true,
        _ => unreachable!("own type classes of a conjugate pair are split"),
    };
    let base = if swapped {
        if char_tag == CharTag::Plus {
            val_minus.clone()
        } else {
            val_plus.clone()
        }
    } else {
        own.clone()
    };
    if is_zee(class_tag) {
        base.neg()
    } else {
        base
    }
}

fn finish_table(
    kind: GroupKind,
    chars: Vec<CharId>,
    classes: Vec<crate::classes::ClassInfo>,
    values: Vec<Vec<AlgebraicValue>>,
    n: u32,
) -> Result<CharacterTable, SpinError> {
    let ident = classes
        .iter()
        .position(|c| c.id.cycle_type.support() == 0 && !is_zee(c.id.tag))
        .expect("identity class");
    let degrees: Vec<u128> = values
        .iter()
        .map(|row| {
            let d = row[ident].as_rational().expect("integral degree");
            assert!(d.is_integer());
            d.to_integer().to_u128().expect("degree fits")
        })
        .collect();
    // spin degrees must match the closed formula
    for (id, d) in chars.iter().zip(&degrees) {
        if id.kind.is_spin() && id.kind == kind {
            let want = match kind {
                GroupKind::SpinSym(_) => spin_degree(&id.label),
                _ => {
                    if id.label.is_even() {
                        spin_degree(&id.label) / 2
                    } else {
                        spin_degree(&id.label)
                    }
                }
            };
            if *d != want {
                return Err(SpinError::Char(CharError::SelfCheck(format!(
                    "degree of {id} is {d}, expected {want}"
                ))));
            }
        }
    }
    let table = CharacterTable {
        kind,
        chars,
        classes,
        values,
        degrees,
    };
    if table.chars.len() != table.classes.len() {
        return Err(SpinError::Char(CharError::SelfCheck(format!(
            "table is not square: {} chars vs {} classes",
            table.chars.len(),
            table.classes.len()
        ))));
    }
    table.check_degree_sum()?;
    check_z_antisymmetry(&table)?;
    check_vanishing(&table)?;
    if n <= 14 {
        table.check_row_orthogonality()?;
    }
    Ok(table)
}

/// Spin rows negate under the z-translate; lifted rows are invariant.
fn check_z_antisymmetry(table: &CharacterTable) -> Result<(), SpinError> {
    for (row, id) in table.chars.iter().enumerate() {
        for (col, c) in table.classes.iter().enumerate() {
            let zc = crate::classes::z_translate(&c.id);
            let zcol = table.class_index(&zc).expect("z-translate class");
            let want = if id.kind.is_spin() {
                table.values[row][col].neg()
            } else {
                table.values[row][col].clone()
            };
            if table.values[row][zcol] != want {
                return Err(SpinError::Char(CharError::SelfCheck(format!(
                    "z-antisymmetry failed for {id} at {}",
                    c.id
                ))));
            }
        }
    }
    Ok(())
}

/// Spin rows vanish outside all-odd classes and their own-type classes.
fn check_vanishing(table: &CharacterTable) -> Result<(), SpinError> {
    for (row, id) in table.chars.iter().enumerate() {
        if !id.kind.is_spin() {
            continue;
        }
        for (col, c) in table.classes.iter().enumerate() {
            let mu = &c.id.cycle_type;
            if !mu.all_parts_odd() && *mu != id.label && !table.values[row][col].is_zero() {
                return Err(SpinError::Char(CharError::SelfCheck(format!(
                    "{id} does not vanish on {}",
                    c.id
                ))));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(v: &AlgebraicValue) -> i64 {
        v.as_integer().unwrap().to_i64().unwrap()
    }

    #[test]
    fn basic_spin_degree() {
        for n in 4u32..=12 {
            let lam = p(&[n]);
            let ident = p(&vec![1; n as usize]);
            let v = spin_value_odd(&lam, &ident).unwrap();
            assert_eq!(int(&v) as u128, 1u128 << ((n - 1) / 2));
        }
    }

    #[test]
    fn degree_column_matches_formula() {
        for n in 4u32..=10 {
            let ident = p(&vec![1; n as usize]);
            for lam in strict_partitions_of(n) {
                let v = spin_value_odd(&lam, &ident).unwrap();
                assert_eq!(int(&v) as u128, spin_degree(&lam), "degree of <{lam}>");
            }
        }
    }

    #[test]
    fn known_small_values() {
        // the degree-1 characters of the cover of S_3 take -1 on 3-cycles
        assert_eq!(int(&spin_value_odd(&p(&[2, 1]), &p(&[3])).unwrap()), -1);
        // basic spin of S_5-cover on 5-cycles
        assert_eq!(int(&spin_value_odd(&p(&[5]), &p(&[5])).unwrap()), 1);
        assert_eq!(int(&spin_value_odd(&p(&[3, 2]), &p(&[5])).unwrap()), 1);
        assert_eq!(int(&spin_value_odd(&p(&[3, 2]), &p(&[3, 1, 1])).unwrap()), -1);
        assert_eq!(int(&spin_value_odd(&p(&[4, 1]), &p(&[5])).unwrap()), -1);
        assert_eq!(int(&spin_value_odd(&p(&[4, 1]), &p(&[3, 1, 1])).unwrap()), 0);
        // never zero at the identity
        for n in 4u32..=12 {
            let ident = p(&vec![1; n as usize]);
            for lam in strict_partitions_of(n) {
                assert!(!spin_value_odd(&lam, &ident).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn error_paths() {
        assert_eq!(
            spin_value_odd(&p(&[2, 2]), &p(&[3, 1])),
            Err(SpinError::NotStrict)
        );
        assert_eq!(
            spin_value_odd(&p(&[3, 1]), &p(&[2, 2])),
            Err(SpinError::NotOddType)
        );
        assert_eq!(
            spin_value_odd(&p(&[3, 1]), &p(&[3, 1, 1])),
            Err(SpinError::SizeMismatch)
        );
    }

    #[test]
    fn exceptional_values() {
        // <2,1> of the cover of S_3 takes +/- i on its own class
        let (a, b) = spin_exceptional_value(&p(&[2, 1])).unwrap();
        assert_eq!(a, AlgebraicValue::i_power(1));
        assert_eq!(b, AlgebraicValue::i_power(3));
        // <4> takes +/- sqrt(2)
        let (a, _) = spin_exceptional_value(&p(&[4])).unwrap();
        assert_eq!(a, AlgebraicValue::sqrt_int(2).neg());
        // conjugate pair for (5): (1 +/- sqrt 5)/2 up to labelling
        let (a, b) = spin_exceptional_value(&p(&[5])).unwrap();
        let half = rat_frac(1, 2);
        let lo = AlgebraicValue::from_int(1)
            .sub(&AlgebraicValue::sqrt_int(5))
            .scale(&half);
        let hi = AlgebraicValue::from_int(1)
            .add(&AlgebraicValue::sqrt_int(5))
            .scale(&half);
        assert!((a == lo && b == hi) || (a == hi && b == lo));
    }

    #[test]
    fn spin_sym_five_table() {
        let t = table_spin_sym(5).unwrap();
        assert_eq!(t.chars.len(), 12);
        assert_eq!(t.classes.len(), 12);
        // 7 lifts + 4 spin rows? (5),(4,1)x2,(3,2)x2 -> 5 spin rows
        let spin_rows = t.chars.iter().filter(|c| c.kind.is_spin()).count();
        assert_eq!(spin_rows, 5);
        t.check_column_orthogonality().unwrap();
    }

    #[test]
    fn spin_alt_five_table() {
        let t = table_spin_alt(5).unwrap();
        assert_eq!(t.chars.len(), 9);
        t.check_column_orthogonality().unwrap();
        // the two 2-dimensional rows carry the golden ratio on the order-5 classes
        let plus = t
            .char_index(&CharId::new(GroupKind::SpinAlt(5), p(&[5]), CharTag::Plus))
            .unwrap();
        assert_eq!(t.degrees[plus], 2);
    }

    #[test]
    fn associate_pair_differs_only_on_own_class() {
        let t = table_spin_sym(5).unwrap();
        let a = t
            .char_index(&CharId::new(GroupKind::SpinSym(5), p(&[4, 1]), CharTag::Plain))
            .unwrap();
        let b = t
            .char_index(&CharId::new(
                GroupKind::SpinSym(5),
                p(&[4, 1]),
                CharTag::Associate,
            ))
            .unwrap();
        for (k, c) in t.classes.iter().enumerate() {
            let differ = t.values[a][k] != t.values[b][k];
            assert_eq!(differ, c.id.cycle_type == p(&[4, 1]), "at {}", c.id);
        }
    }

    #[test]
    fn prop72_seed_pair_n5() {
        // <5> and <3,2> agree on the 3'-classes of the cover of S_5
        let t = table_spin_sym(5).unwrap();
        let a = t
            .char_index(&CharId::new(GroupKind::SpinSym(5), p(&[5]), CharTag::Plain))
            .unwrap();
        let b = t
            .char_index(&CharId::new(GroupKind::SpinSym(5), p(&[3, 2]), CharTag::Plain))
            .unwrap();
        for (k, c) in t.classes.iter().enumerate() {
            if c.representative_order % 3 != 0 {
                assert_eq!(t.values[a][k], t.values[b][k], "at {}", c.id);
            }
        }
    }

    #[test]
    fn lift_agrees_with_spin_on_odd_order_classes_n5() {
        // <4,1> vs the lift of (3,1,1) on 2'-classes
        let t = table_spin_sym(5).unwrap();
        let spin = t
            .char_index(&CharId::new(GroupKind::SpinSym(5), p(&[4, 1]), CharTag::Plain))
            .unwrap();
        let lift = t
            .char_index(&CharId::new(GroupKind::Sym(5), p(&[3, 1, 1]), CharTag::Plain))
            .unwrap();
        for (k, c) in t.classes.iter().enumerate() {
            if c.representative_order % 2 != 0 {
                assert_eq!(t.values[spin][k], t.values[lift][k], "at {}", c.id);
            }
        }
    }

    #[test]
    fn tables_up_to_ten_verify() {
        for n in 4..=10 {
            table_spin_sym(n).unwrap();
            table_spin_alt(n).unwrap();
        }
    }
}
