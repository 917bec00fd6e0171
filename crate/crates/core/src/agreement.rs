//! Enumerates pairs of irreducible characters agreeing on `l'`-classes,
//! classifies them against the predicted families, and checks that the
//! classification is label-invariant.
//!
//! Agreement on a fixed set of columns is an equality relation, so the
//! agreeing pairs decompose into cliques; both the cliques and the pairs are
//! reported. Predictions:
//!
//! - symmetric group: conjugate labels at `l = 2`, nothing for `l > 2`;
//! - alternating group: the conjugate pairs whose diagonal-hook class has
//!   order divisible by `l`, plus two extra families at `l = 3` built from
//!   self-conjugate partitions of `n - 3` via 3-hook additions;
//! - covers: associate (resp. conjugate) pairs whose own split classes have
//!   order divisible by `l`, plus the sporadic `l = 3` sets of small degree
//!   recorded for `n <= 14`.
//!
//! The divisibility criterion is stated on the class order (lcm of the type,
//! doubled for the lifts when the winding parity demands); for prime-power
//! `l` this is the same as "a part (or principal hook) divisible by l".

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::characters::{table_alt, table_sym, CharError, CharId, CharTag, CharacterTable};
use crate::classes::{classes_of, ClassTag, GroupKind};
use crate::partitions::{
    addable_r_hooks, removable_r_hooks, self_conjugate_partitions_of, strict_partitions_of,
    Partition,
};
use crate::spin::{table_spin_alt, table_spin_sym, SpinError};
use crate::values::AlgebraicValue;

/// Which rows participate in an agreement run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Scope {
    AllIrreducible,
    SpinOnly,
}

impl std::str::FromStr for Scope {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" | "all-irreducible" => Ok(Scope::AllIrreducible),
            "spin-only" | "spin" => Ok(Scope::SpinOnly),
            other => Err(format!("unknown scope {other}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairKind {
    ConjugatePair,
    AssociatePair,
    Thm71CaseI,
    Thm71CaseII,
    SpinExceptional,
    Unclassified,
}

/// An unordered pair of distinct characters agreeing on every `l'`-class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementPair {
    pub a: CharId,
    pub b: CharId,
    pub l: u32,
    pub kind: PairKind,
}

/// The classification's prediction for one `(group, n, l)`.
#[derive(Debug, Clone, Default)]
pub struct PredictionSet {
    pub conjugate_pairs: Vec<(CharId, CharId)>,
    pub associate_pairs: Vec<(CharId, CharId)>,
    pub thm71_case_i: Vec<Vec<CharId>>,
    pub thm71_case_ii: Vec<(CharId, CharId)>,
    pub spin_exceptional: Vec<Vec<CharId>>,
    /// Transitive closure of all of the above: maximal predicted cliques.
    pub cliques: Vec<Vec<CharId>>,
}

impl PredictionSet {
    /// All unordered predicted pairs (2-subsets of the merged cliques).
    pub fn pairs(&self) -> BTreeSet<(CharId, CharId)> {
        let mut out = BTreeSet::new();
        for clique in &self.cliques {
            for i in 0..clique.len() {
                for j in (i + 1)..clique.len() {
                    out.insert(ordered(clique[i].clone(), clique[j].clone()));
                }
            }
        }
        out
    }
}

fn ordered(a: CharId, b: CharId) -> (CharId, CharId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn table_of(kind: GroupKind) -> Result<Arc<CharacterTable>, CharError> {
    let demote = |e: SpinError| match e {
        SpinError::Char(c) => c,
        other => CharError::SelfCheck(other.to_string()),
    };
    match kind {
        GroupKind::Sym(n) => table_sym(n),
        GroupKind::Alt(n) => table_alt(n),
        GroupKind::SpinSym(n) => table_spin_sym(n).map_err(demote),
        GroupKind::SpinAlt(n) => table_spin_alt(n).map_err(demote),
    }
}

/// Rows of the table participating in the scope.
fn rows_in_scope(table: &CharacterTable, scope: Scope) -> Vec<usize> {
    (0..table.chars.len())
        .filter(|&i| match scope {
            Scope::AllIrreducible => true,
            Scope::SpinOnly => table.chars[i].kind.is_spin(),
        })
        .collect()
}

/// Maximal sets of in-scope characters with equal values on every `l'`-class
/// of the table, in deterministic (row-order) form.
pub fn agreement_cliques_on(
    table: &CharacterTable,
    l: u32,
    scope: Scope,
) -> Vec<Vec<CharId>> {
    let cols: Vec<usize> = (0..table.classes.len())
        .filter(|&k| table.classes[k].representative_order % l as u64 != 0)
        .collect();
    let mut groups: HashMap<Vec<&AlgebraicValue>, Vec<usize>> = HashMap::new();
    for row in rows_in_scope(table, scope) {
        let key: Vec<&AlgebraicValue> = cols.iter().map(|&k| &table.values[row][k]).collect();
        groups.entry(key).or_default().push(row);
    }
    let mut cliques: Vec<Vec<usize>> = groups
        .into_values()
        .filter(|rows| rows.len() >= 2)
        .collect();
    cliques.sort();
    cliques
        .into_iter()
        .map(|rows| rows.into_iter().map(|r| table.chars[r].clone()).collect())
        .collect()
}

/// All unordered pairs of distinct irreducible characters (in scope) with
/// equal values on every `l'`-class, classified against the predictions.
pub fn agreeing_pairs(
    kind: GroupKind,
    l: u32,
    scope: Scope,
) -> Result<Vec<AgreementPair>, CharError> {
    let table = table_of(kind)?;
    let cliques = agreement_cliques_on(&table, l, scope);
    let predictions = predicted_pairs(kind, l)?;
    let mut out = Vec::new();
    for clique in &cliques {
        for i in 0..clique.len() {
            for j in (i + 1)..clique.len() {
                let (a, b) = (clique[i].clone(), clique[j].clone());
                let kind_of = classify(&predictions, &a, &b);
                out.push(AgreementPair {
                    a,
                    b,
                    l,
                    kind: kind_of,
                });
            }
        }
    }
    Ok(out)
}

fn classify(pred: &PredictionSet, a: &CharId, b: &CharId) -> PairKind {
    let key = ordered(a.clone(), b.clone());
    let in_pairs = |list: &[(CharId, CharId)]| {
        list.iter()
            .any(|(x, y)| ordered(x.clone(), y.clone()) == key)
    };
    let in_cliques = |list: &[Vec<CharId>]| {
        list.iter()
            .any(|c| c.contains(a) && c.contains(b))
    };
    if in_pairs(&pred.conjugate_pairs) {
        PairKind::ConjugatePair
    } else if in_pairs(&pred.associate_pairs) {
        PairKind::AssociatePair
    } else if in_cliques(&pred.thm71_case_i) {
        PairKind::Thm71CaseI
    } else if in_pairs(&pred.thm71_case_ii) {
        PairKind::Thm71CaseII
    } else if in_cliques(&pred.spin_exceptional) || in_cliques(&pred.cliques) {
        PairKind::SpinExceptional
    } else {
        PairKind::Unclassified
    }
}

/// True when every class whose cycle type is `ty` has order divisible by `l`,
/// i.e. when the pair differing only there agrees on `l'`-classes.
fn own_classes_excluded(kind: GroupKind, ty: &Partition, l: u32) -> Result<bool, CharError> {
    Ok(classes_of(kind)
        .map_err(CharError::Class)?
        .iter()
        .filter(|c| c.id.cycle_type == *ty)
        .all(|c| c.representative_order % l as u64 == 0))
}

/// The restriction row label in an alternating-side table: the
/// lexicographically greater of the label and its conjugate.
fn restriction_label(lambda: &Partition) -> Partition {
    let conj = lambda.conjugate();
    if *lambda >= conj {
        lambda.clone()
    } else {
        conj
    }
}

/// Sporadic agreeing sets of spin characters of the cover of `S_n` on
/// `3'`-classes, `n <= 14` (labels only; associate images are added by the
/// predictor).
const SPORADIC_SPIN_SYM_3: &[(u32, &[&[u32]])] = &[
    (5, &[&[5], &[3, 2]]),
    (6, &[&[6], &[3, 2, 1]]),
    (7, &[&[6, 1], &[4, 3]]),
    (8, &[&[7, 1], &[4, 3, 1]]),
    (8, &[&[6, 2], &[5, 3]]),
    (10, &[&[8, 2], &[5, 3, 2]]),
    (11, &[&[7, 3, 1], &[6, 4, 1]]),
    (12, &[&[9, 3], &[6, 3, 2, 1]]),
    (13, &[&[9, 3, 1], &[6, 4, 3]]),
    (13, &[&[8, 3, 2], &[6, 5, 2]]),
    (14, &[&[9, 3, 2], &[8, 3, 2, 1], &[6, 5, 3]]),
];

/// Sporadic agreeing sets of spin characters of the cover of `A_n` on
/// `3'`-classes beyond conjugate pairs and restrictions, `n <= 14`. Each entry
/// lists one irreducible restriction label followed by split labels whose two
/// halves both join the set. The n = 4 entry is the coincidence of the three
/// two-dimensional spin characters of the cover of `A_4`: its only
/// `3'`-classes are the central ones and the order-4 class, where all three
/// take the values 2, -2, 0.
const SPORADIC_SPIN_ALT_3: &[(u32, &[u32], &[&[u32]])] = &[
    (4, &[4], &[&[3, 1]]),
    (12, &[5, 4, 3], &[&[9, 3], &[6, 3, 2, 1]]),
    (13, &[7, 3, 2, 1], &[&[9, 3, 1], &[6, 4, 3]]),
];

/// The classification's pair list for `(kind, l)`, constructed
/// combinatorially (the sporadic `l = 3` spin lists are literal data).
pub fn predicted_pairs(kind: GroupKind, l: u32) -> Result<PredictionSet, CharError> {
    let n = kind.n();
    let mut pred = PredictionSet::default();
    match kind {
        GroupKind::Sym(_) => {
            if l == 2 {
                for lambda in crate::partitions::partitions_of(n) {
                    let conj = lambda.conjugate();
                    if lambda > conj {
                        pred.conjugate_pairs.push((
                            CharId::new(kind, lambda.clone(), CharTag::Plain),
                            CharId::new(kind, conj, CharTag::Plain),
                        ));
                    }
                }
            }
        }
        GroupKind::Alt(_) => {
            if l % 2 == 1 {
                for mu in self_conjugate_partitions_of(n) {
                    let diag = mu.diag().expect("self-conjugate");
                    if diag.element_order() % l as u64 == 0 {
                        pred.conjugate_pairs.push((
                            CharId::new(kind, mu.clone(), CharTag::Plus),
                            CharId::new(kind, mu.clone(), CharTag::Minus),
                        ));
                    }
                }
            }
            if l == 3 && n >= 3 {
                for nu in self_conjugate_partitions_of(n - 3) {
                    let addable = addable_r_hooks(&nu, 3);
                    let removable = removable_r_hooks(&nu, 3);
                    if removable.is_empty() {
                        // 3-core: first-row, principal and first-column hooks
                        debug_assert_eq!(addable.len(), 3);
                        let lam = &addable.iter().find(|(_, leg)| *leg == 0).unwrap().0;
                        let mu = &addable.iter().find(|(_, leg)| *leg == 1).unwrap().0;
                        debug_assert!(mu.is_self_conjugate());
                        pred.thm71_case_i.push(vec![
                            CharId::new(kind, restriction_label(lam), CharTag::Plain),
                            CharId::new(kind, mu.clone(), CharTag::Plus),
                            CharId::new(kind, mu.clone(), CharTag::Minus),
                        ]);
                    } else if removable.len() == 1 {
                        debug_assert_eq!(addable.len(), 4);
                        let lam = &addable.iter().find(|(_, leg)| *leg == 0).unwrap().0;
                        let mu = &addable.iter().find(|(_, leg)| *leg == 1).unwrap().0;
                        pred.thm71_case_ii.push((
                            CharId::new(kind, restriction_label(lam), CharTag::Plain),
                            CharId::new(kind, restriction_label(mu), CharTag::Plain),
                        ));
                    }
                }
            }
        }
        GroupKind::SpinSym(_) => {
            for lambda in strict_partitions_of(n) {
                if !lambda.is_even() && own_classes_excluded(kind, &lambda, l)? {
                    pred.associate_pairs.push((
                        CharId::new(kind, lambda.clone(), CharTag::Plain),
                        CharId::new(kind, lambda.clone(), CharTag::Associate),
                    ));
                }
            }
            if l == 3 {
                for (m, sets) in SPORADIC_SPIN_SYM_3 {
                    if *m != n {
                        continue;
                    }
                    let mut plain = Vec::new();
                    let mut image = Vec::new();
                    for labels in sets.iter() {
                        let lambda = Partition::new(labels.to_vec()).unwrap();
                        plain.push(CharId::new(kind, lambda.clone(), CharTag::Plain));
                        let assoc_tag = if lambda.is_even() {
                            CharTag::Plain
                        } else {
                            CharTag::Associate
                        };
                        image.push(CharId::new(kind, lambda, assoc_tag));
                    }
                    pred.spin_exceptional.push(plain);
                    pred.spin_exceptional.push(image);
                }
            }
        }
        GroupKind::SpinAlt(_) => {
            for lambda in strict_partitions_of(n) {
                if lambda.is_even() && own_classes_excluded(kind, &lambda, l)? {
                    pred.conjugate_pairs.push((
                        CharId::new(kind, lambda.clone(), CharTag::Plus),
                        CharId::new(kind, lambda.clone(), CharTag::Minus),
                    ));
                }
            }
            if l == 3 {
                // descents of the sporadic fully-split sets of the cover of S_n
                let spin_sym = predicted_pairs(GroupKind::SpinSym(n), 3)?;
                for clique in &spin_sym.spin_exceptional {
                    let mut odd_labels: Vec<Partition> = Vec::new();
                    let mut even_ok: Vec<Partition> = Vec::new();
                    for id in clique {
                        if id.label.is_even() {
                            if own_classes_excluded(kind, &id.label, 3)?
                                && !even_ok.contains(&id.label)
                            {
                                even_ok.push(id.label.clone());
                            }
                        } else if !odd_labels.contains(&id.label) {
                            odd_labels.push(id.label.clone());
                        }
                    }
                    if odd_labels.len() >= 2 {
                        pred.spin_exceptional.push(
                            odd_labels
                                .iter()
                                .map(|lam| CharId::new(kind, lam.clone(), CharTag::Plain))
                                .collect(),
                        );
                    }
                    if even_ok.len() >= 2 {
                        let mut set = Vec::new();
                        for lam in &even_ok {
                            set.push(CharId::new(kind, lam.clone(), CharTag::Plus));
                            set.push(CharId::new(kind, lam.clone(), CharTag::Minus));
                        }
                        pred.spin_exceptional.push(set);
                    }
                }
                for (m, restriction, split) in SPORADIC_SPIN_ALT_3 {
                    if *m != n {
                        continue;
                    }
                    let mut set = vec![CharId::new(
                        kind,
                        Partition::new(restriction.to_vec()).unwrap(),
                        CharTag::Plain,
                    )];
                    for labels in split.iter() {
                        let lam = Partition::new(labels.to_vec()).unwrap();
                        set.push(CharId::new(kind, lam.clone(), CharTag::Plus));
                        set.push(CharId::new(kind, lam, CharTag::Minus));
                    }
                    pred.spin_exceptional.push(set);
                }
            }
        }
    }
    pred.cliques = merge_cliques(&pred);
    Ok(pred)
}

/// Union-find closure of all predicted relations into maximal cliques.
fn merge_cliques(pred: &PredictionSet) -> Vec<Vec<CharId>> {
    struct Uf {
        ids: Vec<CharId>,
        index: BTreeMap<CharId, usize>,
        parent: Vec<usize>,
    }
    impl Uf {
        fn find(&mut self, mut x: usize) -> usize {
            while self.parent[x] != x {
                self.parent[x] = self.parent[self.parent[x]];
                x = self.parent[x];
            }
            x
        }
        fn touch(&mut self, id: &CharId) -> usize {
            if let Some(&i) = self.index.get(id) {
                return i;
            }
            let i = self.ids.len();
            self.ids.push(id.clone());
            self.parent.push(i);
            self.index.insert(id.clone(), i);
            i
        }
        fn relate(&mut self, a: &CharId, b: &CharId) {
            let ia = self.touch(a);
            let ib = self.touch(b);
            let (ra, rb) = (self.find(ia), self.find(ib));
            if ra != rb {
                self.parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut uf = Uf {
        ids: Vec::new(),
        index: BTreeMap::new(),
        parent: Vec::new(),
    };
    for (a, b) in pred
        .conjugate_pairs
        .iter()
        .chain(&pred.associate_pairs)
        .chain(&pred.thm71_case_ii)
    {
        uf.relate(a, b);
    }
    for clique in pred.thm71_case_i.iter().chain(&pred.spin_exceptional) {
        for w in clique.windows(2) {
            uf.relate(&w[0], &w[1]);
        }
    }
    let mut groups: BTreeMap<usize, Vec<CharId>> = BTreeMap::new();
    for i in 0..uf.ids.len() {
        let r = uf.find(i);
        groups.entry(r).or_default().push(uf.ids[i].clone());
    }
    let mut out: Vec<Vec<CharId>> = groups
        .into_values()
        .map(|mut v| {
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

/// Outcome of comparing the found agreement relation with the prediction.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub group: String,
    pub n: u32,
    pub l: u32,
    pub status: bool,
    pub found: Vec<(String, String)>,
    pub predicted: Vec<(String, String)>,
    pub extra: Vec<(String, String)>,
    pub missing: Vec<(String, String)>,
}

/// Compares the agreeing pairs with the predicted pairs; PASS iff equal as
/// sets of unordered pairs. Spin families are compared in spin scope.
pub fn verify_classification(kind: GroupKind, l: u32) -> Result<VerifyReport, CharError> {
    let scope = if kind.is_spin() {
        Scope::SpinOnly
    } else {
        Scope::AllIrreducible
    };
    let found_pairs = agreeing_pairs(kind, l, scope)?;
    let found: BTreeSet<(CharId, CharId)> = found_pairs
        .iter()
        .map(|p| ordered(p.a.clone(), p.b.clone()))
        .collect();
    let predicted = predicted_pairs(kind, l)?.pairs();
    let fmt =
        |s: &BTreeSet<(CharId, CharId)>| -> Vec<(String, String)> {
            s.iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect()
        };
    let extra: BTreeSet<_> = found.difference(&predicted).cloned().collect();
    let missing: BTreeSet<_> = predicted.difference(&found).cloned().collect();
    Ok(VerifyReport {
        group: kind.family_name().to_string(),
        n: kind.n(),
        l,
        status: extra.is_empty() && missing.is_empty(),
        found: fmt(&found),
        predicted: fmt(&predicted),
        extra: fmt(&extra),
        missing: fmt(&missing),
    })
}

/// One label-convention flip: swap the two halves of a split class, or swap a
/// split character pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Flip {
    /// Swap the `(1)`/`(z)` halves (spin) of all classes of this type.
    ClassZee(Partition),
    /// Swap the `+`/`-` halves of all classes of this type.
    ClassSign(Partition),
    /// Swap the rows of a split character pair (`+/-` or plain/associate).
    CharPair(Partition),
}

/// The table rewritten under the flipped labelling: values and metadata move
/// with the underlying sets, the ids keep their names.
pub fn flip_table(table: &CharacterTable, flips: &[Flip]) -> CharacterTable {
    let mut out = table.clone();
    let swap_columns = |out: &mut CharacterTable, a: usize, b: usize| {
        for row in &mut out.values {
            row.swap(a, b);
        }
        let (sa, sb) = (
            out.classes[a].representative_order,
            out.classes[b].representative_order,
        );
        out.classes[a].representative_order = sb;
        out.classes[b].representative_order = sa;
    };
    for flip in flips {
        match flip {
            Flip::ClassZee(ty) => {
                for (x, y) in [
                    (ClassTag::One, ClassTag::Zee),
                    (ClassTag::OnePlus, ClassTag::ZeePlus),
                    (ClassTag::OneMinus, ClassTag::ZeeMinus),
                ] {
                    let a = out
                        .classes
                        .iter()
                        .position(|c| c.id.cycle_type == *ty && c.id.tag == x);
                    let b = out
                        .classes
                        .iter()
                        .position(|c| c.id.cycle_type == *ty && c.id.tag == y);
                    if let (Some(a), Some(b)) = (a, b) {
                        swap_columns(&mut out, a, b);
                    }
                }
            }
            Flip::ClassSign(ty) => {
                for (x, y) in [
                    (ClassTag::Plus, ClassTag::Minus),
                    (ClassTag::OnePlus, ClassTag::OneMinus),
                    (ClassTag::ZeePlus, ClassTag::ZeeMinus),
                ] {
                    let a = out
                        .classes
                        .iter()
                        .position(|c| c.id.cycle_type == *ty && c.id.tag == x);
                    let b = out
                        .classes
                        .iter()
                        .position(|c| c.id.cycle_type == *ty && c.id.tag == y);
                    if let (Some(a), Some(b)) = (a, b) {
                        swap_columns(&mut out, a, b);
                    }
                }
            }
            Flip::CharPair(label) => {
                for (x, y) in [
                    (CharTag::Plus, CharTag::Minus),
                    (CharTag::Plain, CharTag::Associate),
                ] {
                    let a = out
                        .chars
                        .iter()
                        .position(|c| c.label == *label && c.tag == x && c.kind == out.kind);
                    let b = out
                        .chars
                        .iter()
                        .position(|c| c.label == *label && c.tag == y && c.kind == out.kind);
                    if let (Some(a), Some(b)) = (a, b) {
                        out.values.swap(a, b);
                        out.degrees.swap(a, b);
                    }
                }
            }
        }
    }
    out
}

/// The character relabelling induced by the flips, applied to a clique list:
/// rows swapped by `CharPair` flips exchange their names.
fn relabel(cliques: &[Vec<CharId>], flips: &[Flip], kind: GroupKind) -> Vec<Vec<CharId>> {
    let map = |id: &CharId| -> CharId {
        for flip in flips {
            if let Flip::CharPair(label) = flip {
                if id.label == *label && id.kind == kind {
                    let tag = match id.tag {
                        CharTag::Plus => CharTag::Minus,
                        CharTag::Minus => CharTag::Plus,
                        // plain <-> associate pairs exist only for odd strict
                        // labels in the cover of S_n
                        CharTag::Plain
                            if matches!(id.kind, GroupKind::SpinSym(_))
                                && !id.label.is_even() =>
                        {
                            CharTag::Associate
                        }
                        CharTag::Associate => CharTag::Plain,
                        other => other,
                    };
                    return CharId::new(id.kind, id.label.clone(), tag);
                }
            }
        }
        id.clone()
    };
    let mut out: Vec<Vec<CharId>> = cliques
        .iter()
        .map(|c| {
            let mut v: Vec<CharId> = c.iter().map(&map).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

/// Re-runs the agreement computation with the labels of chosen split classes
/// and split character pairs swapped; the result must be the original result
/// up to the induced relabelling of the character names.
pub fn label_invariance_check(
    kind: GroupKind,
    l: u32,
    scope: Scope,
    flips: &[Flip],
) -> Result<bool, CharError> {
    let table = table_of(kind)?;
    let mut base = agreement_cliques_on(&table, l, scope);
    base.iter_mut().for_each(|c| c.sort());
    base.sort();
    let flipped = flip_table(&table, flips);
    let mut got = agreement_cliques_on(&flipped, l, scope);
    got.iter_mut().for_each(|c| c.sort());
    got.sort();
    let expected = relabel(&base, flips, kind);
    Ok(got == expected)
}

/// All valid flips for a group: split classes and split character pairs.
pub fn available_flips(kind: GroupKind) -> Result<Vec<Flip>, CharError> {
    let mut out = Vec::new();
    let mut seen_zee: BTreeSet<Partition> = BTreeSet::new();
    let mut seen_sign: BTreeSet<Partition> = BTreeSet::new();
    for c in classes_of(kind).map_err(CharError::Class)? {
        match c.id.tag {
            ClassTag::One | ClassTag::OnePlus => {
                if seen_zee.insert(c.id.cycle_type.clone()) {
                    out.push(Flip::ClassZee(c.id.cycle_type.clone()));
                }
            }
            _ => {}
        }
        match c.id.tag {
            ClassTag::Plus | ClassTag::OnePlus => {
                if seen_sign.insert(c.id.cycle_type.clone()) {
                    out.push(Flip::ClassSign(c.id.cycle_type.clone()));
                }
            }
            _ => {}
        }
    }
    let table = table_of(kind)?;
    let mut seen_char: BTreeSet<Partition> = BTreeSet::new();
    for id in &table.chars {
        if id.kind == kind
            && matches!(id.tag, CharTag::Plus | CharTag::Associate)
            && seen_char.insert(id.label.clone())
        {
            out.push(Flip::CharPair(id.label.clone()));
        }
    }
    Ok(out)
}

/// Pairs of distinct `S_n`-labels whose characters agree on all even
/// `l'`-classes. The classification says these are exactly the conjugate
/// label pairs for `l >= 4`.
pub fn sym_even_lprime_agreeing_labels(
    n: u32,
    l: u32,
) -> Result<Vec<(Partition, Partition)>, CharError> {
    let table = table_sym(n)?;
    let cols: Vec<usize> = (0..table.classes.len())
        .filter(|&k| {
            table.classes[k].is_even && table.classes[k].representative_order % l as u64 != 0
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..table.chars.len() {
        for j in (i + 1)..table.chars.len() {
            if cols
                .iter()
                .all(|&k| table.values[i][k] == table.values[j][k])
            {
                out.push((table.chars[i].label.clone(), table.chars[j].label.clone()));
            }
        }
    }
    Ok(out)
}

/// Executable form of the induced-character identity: for every irreducible
/// of `A_n` and every even cycle type, the induced `S_n`-character value
/// equals `(2 / k) *` (sum of the values on the `k` classes of that type).
pub fn check_induction_identity(n: u32) -> Result<(), CharError> {
    let alt = table_alt(n)?;
    let sym = table_sym(n)?;
    for (row, id) in alt.chars.iter().enumerate() {
        // induced character: restriction row -> chi^lambda + chi^lambda',
        // split row -> chi^lambda
        let induced_value = |mu: &Partition| -> Result<AlgebraicValue, CharError> {
            let lam_row = sym
                .chars
                .iter()
                .position(|c| c.label == id.label)
                .expect("label");
            let col = sym
                .classes
                .iter()
                .position(|c| c.id.cycle_type == *mu)
                .expect("class");
            let mut v = sym.values[lam_row][col].clone();
            if id.tag == CharTag::Plain {
                let conj = id.label.conjugate();
                let conj_row = sym
                    .chars
                    .iter()
                    .position(|c| c.label == conj)
                    .expect("conjugate label");
                v = v.add(&sym.values[conj_row][col]);
            }
            Ok(v)
        };
        let mut seen: BTreeSet<Partition> = BTreeSet::new();
        for c in &alt.classes {
            let mu = c.id.cycle_type.clone();
            if !seen.insert(mu.clone()) {
                continue;
            }
            let members: Vec<usize> = alt
                .classes
                .iter()
                .enumerate()
                .filter(|(_, x)| x.id.cycle_type == mu)
                .map(|(k, _)| k)
                .collect();
            let k = members.len() as i64;
            let mut sum = AlgebraicValue::zero();
            for m in members {
                sum = sum.add(&alt.values[row][m]);
            }
            let lhs = induced_value(&mu)?.scale(&crate::values::rat(k));
            let rhs = sum.scale(&crate::values::rat(2));
            if lhs != rhs {
                return Err(CharError::SelfCheck(format!(
                    "induction identity failed for {id} on type ({mu})"
                )));
            }
        }
    }
    Ok(())
}

/// Executable form of the conjugacy equivalence: two irreducibles of `A_n`
/// have equal class sums over every even type iff they are a split pair
/// (equivalently, are exchanged by an odd conjugation).
pub fn check_restriction_equivalence(n: u32) -> Result<(), CharError> {
    let alt = table_alt(n)?;
    let types: BTreeSet<Partition> = alt
        .classes
        .iter()
        .map(|c| c.id.cycle_type.clone())
        .collect();
    let sums: Vec<Vec<AlgebraicValue>> = (0..alt.chars.len())
        .map(|row| {
            types
                .iter()
                .map(|mu| {
                    let mut acc = AlgebraicValue::zero();
                    for (k, c) in alt.classes.iter().enumerate() {
                        if c.id.cycle_type == *mu {
                            acc = acc.add(&alt.values[row][k]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    for i in 0..alt.chars.len() {
        for j in (i + 1)..alt.chars.len() {
            let equal = sums[i] == sums[j];
            let split_pair = alt.chars[i].label == alt.chars[j].label;
            if equal != split_pair {
                return Err(CharError::SelfCheck(format!(
                    "conjugacy equivalence failed for {} vs {}",
                    alt.chars[i], alt.chars[j]
                )));
            }
        }
    }
    Ok(())
}
