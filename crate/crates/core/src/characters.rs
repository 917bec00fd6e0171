//! Ordinary irreducible character tables of `S_n` and `A_n`, exact, including
//! split-class values.
//!
//! Values of `S_n` come from the rim-hook (Murnaghan-Nakayama) recursion,
//! memoized on (remaining shape, remaining cycle lengths) and removing hooks
//! of the largest remaining cycle first. For a self-conjugate label the two
//! `A_n`-rows take the classical exceptional values
//! `(eps +/- sqrt(eps * h)) / 2` on the split class of type `diag(lambda)`;
//! the formula is not trusted: every produced table is checked against exact
//! row orthogonality and the build fails loudly on mismatch.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::{classes_of, ClassError, ClassId, ClassInfo, ClassTag, GroupKind};
use crate::partitions::{partitions_of, Partition};
use crate::values::{rat, AlgebraicValue, AlgebraicValueDto, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("partitions have different sizes")]
    SizeMismatch,
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error("table self-check failed: {0}")]
    SelfCheck(String),
}

/// Which irreducible character of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CharTag {
    Plain,
    Plus,
    Minus,
    Associate,
}

/// Identifier of an irreducible character. Inside a double-cover table the
/// lifted rows keep the base-group kind (`Sym`/`Alt`), spin rows carry the
/// spin kind; this is also how the `spin_only` scope is defined.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharId {
    pub kind: GroupKind,
    pub label: Partition,
    pub tag: CharTag,
}

impl CharId {
    pub fn new(kind: GroupKind, label: Partition, tag: CharTag) -> Self {
        CharId { kind, label, tag }
    }

    pub fn is_spin(&self) -> bool {
        self.kind.is_spin()
    }
}

impl fmt::Display for CharId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Sym(_) | GroupKind::Alt(_) => {
                write!(f, "({})", self.label)?;
                match self.tag {
                    CharTag::Plus => write!(f, "+"),
                    CharTag::Minus => write!(f, "-"),
                    _ => Ok(()),
                }
            }
            GroupKind::SpinSym(_) | GroupKind::SpinAlt(_) => {
                write!(f, "\u{27e8}{}\u{27e9}", self.label)?;
                match self.tag {
                    CharTag::Associate => write!(f, "a"),
                    CharTag::Plus => write!(f, "+"),
                    CharTag::Minus => write!(f, "-"),
                    CharTag::Plain => Ok(()),
                }
            }
        }
    }
}

impl fmt::Debug for CharId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type MnKey = (Vec<u32>, Vec<u32>);
static MN_CACHE: LazyLock<DashMap<MnKey, i64>> = LazyLock::new(DashMap::new);

/// Exact value of the `S_n`-character labelled `lambda` on the class of cycle
/// type `mu`, by the rim-hook recursion (largest remaining cycle first).
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i64, CharError> {
    if lambda.n() != mu.n() {
        return Err(CharError::SizeMismatch);
    }
    Ok(mn_rec(lambda.parts().to_vec(), mu.parts()))
}

fn mn_rec(lambda: Vec<u32>, mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1; // lambda is empty too
    }
    let key: MnKey = (lambda.clone(), mu.to_vec());
    if let Some(v) = MN_CACHE.get(&key) {
        return *v;
    }
    let r = mu[0];
    let shape = Partition::new(key.0.clone()).expect("valid shape");
    let mut total = 0i64;
    for (rest, leg) in crate::partitions::removable_r_hooks(&shape, r) {
        let sign = if leg % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(rest.parts().to_vec(), &mu[1..]);
    }
    MN_CACHE.insert(key, total);
    total
}

/// Degree of the `S_n`-character labelled `lambda`: `n! / prod(hooks)`.
pub fn degree(lambda: &Partition) -> u128 {
    let n = lambda.n();
    let mut num = BigUint::one();
    for k in 1..=n as u64 {
        num *= BigUint::from(k);
    }
    let mut den = BigUint::one();
    for h in lambda.hook_lengths() {
        den *= BigUint::from(h as u64);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "hook length formula divides exactly");
    q.to_u128().expect("degree fits in u128")
}

/// Exact character table: rows indexed by [`CharId`], columns by [`ClassId`].
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub kind: GroupKind,
    pub chars: Vec<CharId>,
    pub classes: Vec<ClassInfo>,
    /// `values[row][col]`
    pub values: Vec<Vec<AlgebraicValue>>,
    pub degrees: Vec<u128>,
}

impl CharacterTable {
    pub fn value(&self, row: usize, col: usize) -> &AlgebraicValue {
        &self.values[row][col]
    }

    pub fn char_index(&self, id: &CharId) -> Option<usize> {
        self.chars.iter().position(|c| c == id)
    }

    pub fn class_index(&self, id: &ClassId) -> Option<usize> {
        self.classes.iter().position(|c| &c.id == id)
    }

    /// `sum_C |C| chi(C) conj(psi(C))`, which must equal `|G| [chi = psi]`.
    pub fn row_inner_product(&self, a: usize, b: usize) -> AlgebraicValue {
        let mut acc = AlgebraicValue::zero();
        for (k, info) in self.classes.iter().enumerate() {
            let x = &self.values[a][k];
            if x.is_zero() {
                continue;
            }
            let y = self.values[b][k].conj();
            if y.is_zero() {
                continue;
            }
            acc = acc.add(&x.mul(&y).scale(&rat_u128(info.size)));
        }
        acc
    }

    /// `sum_chi chi(C) conj(chi(C'))`, which must equal
    /// `centralizer_order(C) [C = C']`.
    pub fn column_inner_product(&self, a: usize, b: usize) -> AlgebraicValue {
        let mut acc = AlgebraicValue::zero();
        for row in &self.values {
            let x = &row[a];
            if x.is_zero() {
                continue;
            }
            let y = row[b].conj();
            if y.is_zero() {
                continue;
            }
            acc = acc.add(&x.mul(&y));
        }
        acc
    }

    /// Exact first-orthogonality check over all row pairs.
    pub fn check_row_orthogonality(&self) -> Result<(), CharError> {
        let g = rat_u128(self.kind.order());
        let bad: Option<String> = (0..self.chars.len())
            .into_par_iter()
            .find_map_any(|i| {
                for j in i..self.chars.len() {
                    let got = self.row_inner_product(i, j);
                    let want = if i == j {
                        AlgebraicValue::from_rational(g.clone())
                    } else {
                        AlgebraicValue::zero()
                    };
                    if got != want {
                        return Some(format!(
                            "row orthogonality failed at ({}, {}): got {}",
                            self.chars[i], self.chars[j], got
                        ));
                    }
                }
                None
            });
        match bad {
            Some(msg) => Err(CharError::SelfCheck(msg)),
            None => Ok(()),
        }
    }

    /// Exact second-orthogonality check over all column pairs.
    pub fn check_column_orthogonality(&self) -> Result<(), CharError> {
        let bad: Option<String> = (0..self.classes.len())
            .into_par_iter()
            .find_map_any(|i| {
                for j in i..self.classes.len() {
                    let got = self.column_inner_product(i, j);
                    let want = if i == j {
                        AlgebraicValue::from_rational(rat_u128(self.classes[i].centralizer_order))
                    } else {
                        AlgebraicValue::zero()
                    };
                    if got != want {
                        return Some(format!(
                            "column orthogonality failed at ({}, {}): got {}",
                            self.classes[i].id, self.classes[j].id, got
                        ));
                    }
                }
                None
            });
        match bad {
            Some(msg) => Err(CharError::SelfCheck(msg)),
            None => Ok(()),
        }
    }

    pub fn check_degree_sum(&self) -> Result<(), CharError> {
        let sum: u128 = self.degrees.iter().map(|d| d * d).sum();
        if sum != self.kind.order() {
            return Err(CharError::SelfCheck(format!(
                "degree square sum {} != group order {}",
                sum,
                self.kind.order()
            )));
        }
        Ok(())
    }

    fn validate(&self, full_orthogonality: bool) -> Result<(), CharError> {
        if self.chars.len() != self.classes.len() {
            return Err(CharError::SelfCheck(format!(
                "table is not square: {} chars vs {} classes",
                self.chars.len(),
                self.classes.len()
            )));
        }
        self.check_degree_sum()?;
        if full_orthogonality {
            self.check_row_orthogonality()?;
        }
        Ok(())
    }
}

pub fn rat_u128(x: u128) -> Rational {
    Rational::from_integer(x.into())
}

/// Serialization form of a table, with a format version for the on-disk cache.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CharacterTableDto {
    pub format_version: u32,
    pub kind: GroupKind,
    pub chars: Vec<CharId>,
    pub classes: Vec<ClassInfo>,
    pub values: Vec<Vec<AlgebraicValueDto>>,
    pub degrees: Vec<u128>,
}

pub const TABLE_FORMAT_VERSION: u32 = 1;

impl CharacterTable {
    pub fn to_dto(&self) -> CharacterTableDto {
        CharacterTableDto {
            format_version: TABLE_FORMAT_VERSION,
            kind: self.kind,
            chars: self.chars.clone(),
            classes: self.classes.clone(),
            values: self
                .values
                .iter()
                .map(|row| row.iter().map(|v| v.to_dto()).collect())
                .collect(),
            degrees: self.degrees.clone(),
        }
    }

    pub fn from_dto(dto: CharacterTableDto) -> Result<Self, String> {
        if dto.format_version != TABLE_FORMAT_VERSION {
            return Err(format!(
                "table format version {} != {}",
                dto.format_version, TABLE_FORMAT_VERSION
            ));
        }
        let values: Result<Vec<Vec<AlgebraicValue>>, String> = dto
            .values
            .iter()
            .map(|row| row.iter().map(AlgebraicValue::from_dto).collect())
            .collect();
        let table = CharacterTable {
            kind: dto.kind,
            chars: dto.chars,
            classes: dto.classes,
            values: values?,
            degrees: dto.degrees,
        };
        if table.chars.len() != table.classes.len()
            || table.values.len() != table.chars.len()
            || table.values.iter().any(|r| r.len() != table.classes.len())
        {
            return Err("table dimensions are inconsistent".into());
        }
        Ok(table)
    }
}

/// Bound up to which freshly built tables get the full exact orthogonality
/// self-check (construction cost grows like the cube of the class count).
const VERIFY_BOUND: u32 = 14;

type TableCache = Mutex<HashMap<GroupKind, Arc<CharacterTable>>>;
static TABLES: LazyLock<TableCache> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Process-wide table cache keyed by group kind; builders run at most once.
pub(crate) fn table_for_kind_cached(
    kind: GroupKind,
    build: impl FnOnce() -> Result<CharacterTable, CharError>,
) -> Result<Arc<CharacterTable>, CharError> {
    cached_or_build(kind, build)
}

fn cached_or_build(
    kind: GroupKind,
    build: impl FnOnce() -> Result<CharacterTable, CharError>,
) -> Result<Arc<CharacterTable>, CharError> {
    if let Some(t) = TABLES.lock().unwrap().get(&kind) {
        return Ok(t.clone());
    }
    let table = Arc::new(build()?);
    TABLES
        .lock()
        .unwrap()
        .entry(kind)
        .or_insert_with(|| table.clone());
    Ok(table)
}

/// Character table of `S_n`.
pub fn table_sym(n: u32) -> Result<Arc<CharacterTable>, CharError> {
    cached_or_build(GroupKind::Sym(n), || {
        let kind = GroupKind::Sym(n);
        let classes = classes_of(kind)?;
        let labels = partitions_of(n);
        let chars: Vec<CharId> = labels
            .iter()
            .map(|l| CharId::new(kind, l.clone(), CharTag::Plain))
            .collect();
        let values: Vec<Vec<AlgebraicValue>> = labels
            .par_iter()
            .map(|l| {
                classes
                    .iter()
                    .map(|c| {
                        AlgebraicValue::from_int(
                            mn_value(l, &c.id.cycle_type).expect("equal sizes"),
                        )
                    })
                    .collect()
            })
            .collect();
        let degrees: Vec<u128> = labels.iter().map(degree).collect();
        for (d, row) in degrees.iter().zip(&values) {
            // identity column must agree with the hook length formula
            let ident = row[classes
                .iter()
                .position(|c| c.id.cycle_type.support() == 0)
                .expect("identity class")]
            .clone();
            if ident.as_rational() != Ok(rat_u128(*d)) {
                return Err(CharError::SelfCheck(
                    "degree column disagrees with hook formula".into(),
                ));
            }
        }
        let table = CharacterTable {
            kind,
            chars,
            classes,
            values,
            degrees,
        };
        table.validate(n <= VERIFY_BOUND)?;
        Ok(table)
    })
}

/// Character table of `A_n`, with exceptional split values verified by
/// orthogonality at build time.
pub fn table_alt(n: u32) -> Result<Arc<CharacterTable>, CharError> {
    cached_or_build(GroupKind::Alt(n), || {
        let kind = GroupKind::Alt(n);
        let classes = classes_of(kind)?;
        let mut chars = Vec::new();
        let mut rows: Vec<Vec<AlgebraicValue>> = Vec::new();
        let half = rat(1) / rat(2);
        for lambda in partitions_of(n) {
            let conj = lambda.conjugate();
            if lambda == conj && n >= 2 {
                // conjugate pair chi^{lambda +/-}
                let diag = lambda.diag().expect("self-conjugate");
                let d = lambda.diagonal_length() as u32;
                let eps: i64 = if (n - d) % 4 == 0 { 1 } else { -1 };
                let got = mn_value(&lambda, &diag)?;
                if got != eps {
                    return Err(CharError::SelfCheck(format!(
                        "value of ({lambda}) on its diagonal class is {got}, expected {eps}"
                    )));
                }
                let h = lambda.principal_hook_product() as i64;
                let root = AlgebraicValue::sqrt_int(eps * h);
                let base = AlgebraicValue::from_int(eps);
                let exceptional =
                    |sgn: i64| base.add(&root.scale(&rat(sgn))).scale(&half);
                for tag in [CharTag::Plus, CharTag::Minus] {
                    let mut row = Vec::with_capacity(classes.len());
                    for c in &classes {
                        let mu = &c.id.cycle_type;
                        if *mu == diag {
                            let same = (c.id.tag == ClassTag::Plus) == (tag == CharTag::Plus);
                            row.push(exceptional(if same { 1 } else { -1 }));
                        } else {
                            row.push(
                                AlgebraicValue::from_int(mn_value(&lambda, mu)?).scale(&half),
                            );
                        }
                    }
                    chars.push(CharId::new(kind, lambda.clone(), tag));
                    rows.push(row);
                }
            } else if lambda > conj || n < 2 {
                // restriction of chi^lambda (= chi^conj); label the lex-greater
                let mut row = Vec::with_capacity(classes.len());
                for c in &classes {
                    row.push(AlgebraicValue::from_int(mn_value(&lambda, &c.id.cycle_type)?));
                }
                chars.push(CharId::new(kind, lambda.clone(), CharTag::Plain));
                rows.push(row);
            }
        }
        let ident = classes
            .iter()
            .position(|c| c.id.cycle_type.support() == 0)
            .expect("identity class");
        let degrees: Vec<u128> = rows
            .iter()
            .map(|row| {
                let d = row[ident].as_rational().expect("integral degree");
                assert!(d.is_integer());
                d.to_integer().to_u128().expect("degree fits")
            })
            .collect();
        let table = CharacterTable {
            kind,
            chars,
            classes,
            values: rows,
            degrees,
        };
        table.validate(n <= VERIFY_BOUND)?;
        Ok(table)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_character_row() {
        for n in 1..=8 {
            let triv = p(&[n]);
            for mu in partitions_of(n) {
                assert_eq!(mn_value(&triv, &mu).unwrap(), 1);
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_value(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_value(&p(&[3, 1, 1]), &p(&[5])).unwrap(), 1);
        assert_eq!(mn_value(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert!(mn_value(&p(&[2, 1]), &p(&[4])).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&p(&[5])), 1);
        assert_eq!(degree(&p(&[3, 1, 1])), 6);
        assert_eq!(degree(&p(&[2, 2])), 2);
    }

    #[test]
    fn identity_column_is_hook_formula() {
        for n in 1..=14 {
            let ident = p(&vec![1; n as usize]);
            for lambda in partitions_of(n) {
                assert_eq!(
                    mn_value(&lambda, &ident).unwrap() as u128,
                    degree(&lambda),
                    "degree of {lambda}"
                );
            }
        }
    }

    #[test]
    fn conjugate_twists_by_sign() {
        for n in 1..=10 {
            for lambda in partitions_of(n) {
                let conj = lambda.conjugate();
                for mu in partitions_of(n) {
                    let sign = if mu.is_even() { 1 } else { -1 };
                    assert_eq!(
                        mn_value(&conj, &mu).unwrap(),
                        sign * mn_value(&lambda, &mu).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn sym_tables() {
        let t1 = table_sym(1).unwrap();
        assert_eq!(t1.values, vec![vec![AlgebraicValue::one()]]);
        let t3 = table_sym(3).unwrap();
        assert_eq!(t3.chars.len(), 3);
        // sign character row
        let sign_row = t3.char_index(&CharId::new(GroupKind::Sym(3), p(&[1, 1, 1]), CharTag::Plain)).unwrap();
        let vals: Vec<i64> = (0..3)
            .map(|k| {
                t3.value(sign_row, k)
                    .as_integer()
                    .unwrap()
                    .to_i64()
                    .unwrap()
            })
            .collect();
        // classes in revlex type order: (3), (2,1), (1,1,1)
        assert_eq!(vals, vec![1, -1, 1]);
        let t5 = table_sym(5).unwrap();
        t5.check_row_orthogonality().unwrap();
        t5.check_column_orthogonality().unwrap();
    }

    #[test]
    fn alt_golden_values() {
        let t = table_alt(5).unwrap();
        let plus = t
            .char_index(&CharId::new(GroupKind::Alt(5), p(&[3, 1, 1]), CharTag::Plus))
            .unwrap();
        let c5p = t
            .class_index(&ClassId::new(GroupKind::Alt(5), p(&[5]), ClassTag::Plus))
            .unwrap();
        let golden = AlgebraicValue::from_int(1)
            .add(&AlgebraicValue::sqrt_int(5))
            .scale(&crate::values::rat_frac(1, 2));
        assert_eq!(t.value(plus, c5p), &golden);
        t.check_column_orthogonality().unwrap();

        let t4 = table_alt(4).unwrap();
        let plus = t4
            .char_index(&CharId::new(GroupKind::Alt(4), p(&[2, 2]), CharTag::Plus))
            .unwrap();
        let c3p = t4
            .class_index(&ClassId::new(GroupKind::Alt(4), p(&[3, 1]), ClassTag::Plus))
            .unwrap();
        let want = AlgebraicValue::from_int(-1)
            .add(&AlgebraicValue::sqrt_int(-3))
            .scale(&crate::values::rat_frac(1, 2));
        assert_eq!(t4.value(plus, c3p), &want);
    }

    #[test]
    fn alt_rows_for_conjugate_labels_coincide() {
        let t = table_alt(5).unwrap();
        // (4,1) and (2,1,1,1) restrict to the same character; only the
        // lex-greater label appears
        assert!(t
            .char_index(&CharId::new(GroupKind::Alt(5), p(&[4, 1]), CharTag::Plain))
            .is_some());
        assert!(t
            .char_index(&CharId::new(GroupKind::Alt(5), p(&[2, 1, 1, 1]), CharTag::Plain))
            .is_none());
        let row = t
            .char_index(&CharId::new(GroupKind::Alt(5), p(&[4, 1]), CharTag::Plain))
            .unwrap();
        for (k, c) in t.classes.iter().enumerate() {
            assert_eq!(
                t.value(row, k).as_integer().unwrap(),
                num_bigint::BigInt::from(mn_value(&p(&[2, 1, 1, 1]), &c.id.cycle_type).unwrap())
            );
        }
    }

    #[test]
    fn alt_split_rows_sum_to_restriction() {
        for n in 4..=9 {
            let t = table_alt(n).unwrap();
            for lambda in crate::partitions::self_conjugate_partitions_of(n) {
                let plus = t
                    .char_index(&CharId::new(GroupKind::Alt(n), lambda.clone(), CharTag::Plus))
                    .unwrap();
                let minus = t
                    .char_index(&CharId::new(GroupKind::Alt(n), lambda.clone(), CharTag::Minus))
                    .unwrap();
                let diag = lambda.diag().unwrap();
                for (k, c) in t.classes.iter().enumerate() {
                    let sum = t.value(plus, k).add(t.value(minus, k));
                    assert_eq!(
                        sum.as_integer().unwrap(),
                        num_bigint::BigInt::from(mn_value(&lambda, &c.id.cycle_type).unwrap())
                    );
                    // rows differ exactly on the diag(lambda) classes
                    let differ = t.value(plus, k) != t.value(minus, k);
                    assert_eq!(differ, c.id.cycle_type == diag);
                }
            }
        }
    }

    #[test]
    fn class_count_equals_char_count() {
        for n in 1..=12 {
            let t = table_sym(n).unwrap();
            assert_eq!(t.chars.len(), t.classes.len());
            let t = table_alt(n).unwrap();
            assert_eq!(t.chars.len(), t.classes.len());
        }
    }

    #[test]
    fn degenerate_alt() {
        let t = table_alt(1).unwrap();
        assert_eq!(t.chars.len(), 1);
        let t = table_alt(2).unwrap();
        assert_eq!(t.chars.len(), 1);
        assert_eq!(t.degrees, vec![1]);
    }

    #[test]
    fn dto_round_trip() {
        let t = table_alt(5).unwrap();
        let dto = t.to_dto();
        let back = CharacterTable::from_dto(dto).unwrap();
        assert_eq!(back.values, t.values);
        assert_eq!(back.chars, t.chars);
    }
}
