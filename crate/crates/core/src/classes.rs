//! Conjugacy-class bookkeeping for the four group families: which cycle types
//! exist, which split, class sizes, element orders, and the even / `l'` filters.
//!
//! Splitting rules:
//! - `S_n -> A_n`: a class of even cycle type splits iff all parts are odd and
//!   distinct.
//! - `S_n -> tS_n` (double cover): the preimage of a class splits iff all parts
//!   are odd, or the type is odd with distinct parts.
//! - inside `tA_n`: a cycle type contributes `2^([all odd] + [all distinct])`
//!   classes, the refinements being the `(1)/(z)` halves (when the `tS_n`
//!   preimage splits) and the `+/-` halves (tracking the `A_n`-class of the
//!   image, when the preimage of the `A_n`-class splits).
//!
//! Lift orders: a preimage of a permutation of order `m` has order `m` or
//! `2m`. [`lift_winding_parity`] decides this via the winding number of the
//! rotation path in `Spin(n)`; the formula is validated against an explicit
//! double-cover model in the test suite.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{partitions_of, Partition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("unsupported n = {0} for {1}")]
    UnsupportedN(u32, &'static str),
    #[error("l must be at least 2, got {0}")]
    UnsupportedL(u32),
}

/// One of the four group families, together with `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    Sym(u32),
    Alt(u32),
    SpinSym(u32),
    SpinAlt(u32),
}

impl GroupKind {
    pub fn n(&self) -> u32 {
        match *self {
            GroupKind::Sym(n) | GroupKind::Alt(n) | GroupKind::SpinSym(n) | GroupKind::SpinAlt(n) => n,
        }
    }

    pub fn is_spin(&self) -> bool {
        matches!(self, GroupKind::SpinSym(_) | GroupKind::SpinAlt(_))
    }

    pub fn is_alternating(&self) -> bool {
        matches!(self, GroupKind::Alt(_) | GroupKind::SpinAlt(_))
    }

    /// Supported ranges: `S_n`/`A_n` up to 20, double covers 4..=14.
    pub fn validate(&self) -> Result<(), ClassError> {
        let n = self.n();
        match self {
            GroupKind::Sym(_) | GroupKind::Alt(_) => {
                if n < 1 || n > 20 {
                    return Err(ClassError::UnsupportedN(n, self.family_name()));
                }
            }
            GroupKind::SpinSym(_) | GroupKind::SpinAlt(_) => {
                if n < 4 || n > 14 {
                    return Err(ClassError::UnsupportedN(n, self.family_name()));
                }
            }
        }
        Ok(())
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            GroupKind::Sym(_) => "sym",
            GroupKind::Alt(_) => "alt",
            GroupKind::SpinSym(_) => "spin-sym",
            GroupKind::SpinAlt(_) => "spin-alt",
        }
    }

    pub fn order(&self) -> u128 {
        let n = self.n();
        let fact: u128 = (1..=n as u128).product();
        match self {
            GroupKind::Sym(_) => fact,
            GroupKind::Alt(_) => {
                if n <= 1 {
                    1
                } else {
                    fact / 2
                }
            }
            GroupKind::SpinSym(_) => 2 * fact,
            GroupKind::SpinAlt(_) => fact,
        }
    }

    pub fn prefix(&self) -> String {
        match self {
            GroupKind::Sym(n) => format!("S{n}"),
            GroupKind::Alt(n) => format!("A{n}"),
            GroupKind::SpinSym(n) => format!("tS{n}"),
            GroupKind::SpinAlt(n) => format!("tA{n}"),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix())
    }
}

impl fmt::Debug for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix())
    }
}

impl FromStr for GroupKind {
    type Err = String;

    /// Parses `"sym"`, `"alt"`, `"spin-sym"`, `"spin-alt"` (without n) is not
    /// enough; this accepts the prefix form `S5`, `tA12`, etc.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (fam, num) = if let Some(r) = s.strip_prefix("tS") {
            ("tS", r)
        } else if let Some(r) = s.strip_prefix("tA") {
            ("tA", r)
        } else if let Some(r) = s.strip_prefix('S') {
            ("S", r)
        } else if let Some(r) = s.strip_prefix('A') {
            ("A", r)
        } else {
            return Err(format!("bad group kind: {s}"));
        };
        let n: u32 = num.parse().map_err(|_| format!("bad group kind: {s}"))?;
        Ok(match fam {
            "S" => GroupKind::Sym(n),
            "A" => GroupKind::Alt(n),
            "tS" => GroupKind::SpinSym(n),
            _ => GroupKind::SpinAlt(n),
        })
    }
}

/// Which piece of the (possibly split) class of a given cycle type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassTag {
    Whole,
    Plus,
    Minus,
    One,
    Zee,
    OnePlus,
    OneMinus,
    ZeePlus,
    ZeeMinus,
}

impl ClassTag {
    fn suffix(&self) -> &'static str {
        match self {
            ClassTag::Whole => "",
            ClassTag::Plus => "+",
            ClassTag::Minus => "-",
            ClassTag::One => ":1",
            ClassTag::Zee => ":z",
            ClassTag::OnePlus => ":1+",
            ClassTag::OneMinus => ":1-",
            ClassTag::ZeePlus => ":z+",
            ClassTag::ZeeMinus => ":z-",
        }
    }

    /// The `z`-translate of the tag, for split spin classes.
    pub fn z_swap(&self) -> ClassTag {
        match self {
            ClassTag::One => ClassTag::Zee,
            ClassTag::Zee => ClassTag::One,
            ClassTag::OnePlus => ClassTag::ZeePlus,
            ClassTag::ZeePlus => ClassTag::OnePlus,
            ClassTag::OneMinus => ClassTag::ZeeMinus,
            ClassTag::ZeeMinus => ClassTag::OneMinus,
            // for a 2-way +/- split inside tA_n the z-translate swaps the halves
            ClassTag::Plus => ClassTag::Minus,
            ClassTag::Minus => ClassTag::Plus,
            ClassTag::Whole => ClassTag::Whole,
        }
    }
}

/// Identifier of a conjugacy class: cycle type plus split tag.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassId {
    pub kind: GroupKind,
    pub cycle_type: Partition,
    pub tag: ClassTag,
}

impl ClassId {
    pub fn new(kind: GroupKind, cycle_type: Partition, tag: ClassTag) -> Self {
        ClassId {
            kind,
            cycle_type,
            tag,
        }
    }
}

/// Serializes like `S5:(2,2,1)`, `A5:(5)+`, `tS5:(3,1,1):z`, `tA5:(5):1+`.
impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:({}){}",
            self.kind.prefix(),
            self.cycle_type,
            self.tag.suffix()
        )
    }
}

impl fmt::Debug for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A conjugacy class with its size and basic invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub id: ClassId,
    pub size: u128,
    pub centralizer_order: u128,
    pub is_even: bool,
    /// Order of the elements of this class. For the double covers this is the
    /// lift order computed from [`lift_winding_parity`], with the `(1)`-labelled
    /// half of an odd-type split class anchored to the canonical word lift.
    pub representative_order: u64,
}

/// Parity (mod 2) of the winding number of the canonical lift of a permutation
/// of cycle type `lambda`, i.e. the exponent `w` in `x^m = z^w` where `m` is
/// the order of the image and `x` is the canonical lift.
///
/// Decompose the permutation into rotation planes: a part `a` contributes
/// plane angles `2*pi*j/a`, and each even part contributes one `-1` eigenvalue;
/// those are grouped pairwise into half-turn planes (with one leftover
/// reflection when the permutation is odd). Winding over `m` applications:
/// odd `a`: `(m/a) * (a^2-1)/8`; even `a`: `m(a-2)/8`; plus `ceil(k/2) * m/2`
/// where `k` is the number of even parts.
pub fn lift_winding_parity(cycle_type: &Partition) -> u8 {
    let m = cycle_type.element_order();
    let mut w: u64 = 0;
    let mut even_parts = 0u64;
    for &a in cycle_type.parts() {
        let a = a as u64;
        if a % 2 == 1 {
            w += (m / a) * ((a * a - 1) / 8) % 2;
        } else {
            even_parts += 1;
            w += (m * (a - 2) / 8) % 2;
        }
    }
    if even_parts > 0 {
        w += even_parts.div_ceil(2) * (m / 2);
    }
    (w % 2) as u8
}

/// Order of the canonical (`(1)`-labelled) lift of a permutation of this type.
pub fn canonical_lift_order(cycle_type: &Partition) -> u64 {
    let m = cycle_type.element_order();
    if lift_winding_parity(cycle_type) == 1 {
        2 * m
    } else {
        m
    }
}

fn spin_splits_in_cover(lambda: &Partition) -> bool {
    lambda.all_parts_odd() || (!lambda.is_even() && lambda.is_strict())
}

fn alt_splits(lambda: &Partition, n: u32) -> bool {
    n >= 2 && lambda.is_even() && lambda.is_strict() && lambda.all_parts_odd()
}

/// Complete irredundant class list with exact sizes, in deterministic order
/// (cycle types reverse-lexicographic, split pieces in tag order).
pub fn classes_of(kind: GroupKind) -> Result<Vec<ClassInfo>, ClassError> {
    kind.validate()?;
    let n = kind.n();
    let group_order = kind.order();
    let mut out = Vec::new();
    for lambda in partitions_of(n) {
        let sym_size = (GroupKind::Sym(n).order()) / lambda.centralizer_order();
        let is_even = lambda.is_even();
        let m = lambda.element_order();
        match kind {
            GroupKind::Sym(_) => {
                push(&mut out, kind, &lambda, ClassTag::Whole, sym_size, group_order, is_even, m);
            }
            GroupKind::Alt(_) => {
                if !is_even {
                    continue;
                }
                if alt_splits(&lambda, n) {
                    for tag in [ClassTag::Plus, ClassTag::Minus] {
                        push(&mut out, kind, &lambda, tag, sym_size / 2, group_order, true, m);
                    }
                } else {
                    push(&mut out, kind, &lambda, ClassTag::Whole, sym_size, group_order, true, m);
                }
            }
            GroupKind::SpinSym(_) => {
                let w = lift_winding_parity(&lambda);
                if spin_splits_in_cover(&lambda) {
                    // For odd m the two halves have orders m and 2m; the
                    // (1)-half is the class of the canonical word lift.
                    let one_order = if w == 1 { 2 * m } else { m };
                    let zee_order = if m % 2 == 1 {
                        3 * m - one_order // the other one of {m, 2m}
                    } else {
                        one_order
                    };
                    push(&mut out, kind, &lambda, ClassTag::One, sym_size, group_order, is_even, one_order);
                    push(&mut out, kind, &lambda, ClassTag::Zee, sym_size, group_order, is_even, zee_order);
                } else {
                    let order = if w == 1 { 2 * m } else { m };
                    push(&mut out, kind, &lambda, ClassTag::Whole, 2 * sym_size, group_order, is_even, order);
                }
            }
            GroupKind::SpinAlt(_) => {
                if !is_even {
                    continue;
                }
                let all_odd = lambda.all_parts_odd();
                let distinct = lambda.is_strict();
                let w = lift_winding_parity(&lambda);
                let one_order = if w == 1 { 2 * m } else { m };
                let zee_order = if m % 2 == 1 { 3 * m - one_order } else { one_order };
                match (all_odd, distinct) {
                    (true, true) => {
                        for (tag, order) in [
                            (ClassTag::OnePlus, one_order),
                            (ClassTag::OneMinus, one_order),
                            (ClassTag::ZeePlus, zee_order),
                            (ClassTag::ZeeMinus, zee_order),
                        ] {
                            push(&mut out, kind, &lambda, tag, sym_size / 2, group_order, true, order);
                        }
                    }
                    (true, false) => {
                        push(&mut out, kind, &lambda, ClassTag::One, sym_size, group_order, true, one_order);
                        push(&mut out, kind, &lambda, ClassTag::Zee, sym_size, group_order, true, zee_order);
                    }
                    (false, true) => {
                        // single tS_n-class splitting on restriction; z swaps the halves
                        for tag in [ClassTag::Plus, ClassTag::Minus] {
                            push(&mut out, kind, &lambda, tag, sym_size, group_order, true, one_order);
                        }
                    }
                    (false, false) => {
                        push(&mut out, kind, &lambda, ClassTag::Whole, 2 * sym_size, group_order, true, one_order);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn push(
    out: &mut Vec<ClassInfo>,
    kind: GroupKind,
    lambda: &Partition,
    tag: ClassTag,
    size: u128,
    group_order: u128,
    is_even: bool,
    representative_order: u64,
) {
    debug_assert_eq!(group_order % size, 0);
    out.push(ClassInfo {
        id: ClassId::new(kind, lambda.clone(), tag),
        size,
        centralizer_order: group_order / size,
        is_even,
        representative_order,
    });
}

/// Classes of even cycle type.
pub fn even_classes(kind: GroupKind) -> Result<Vec<ClassId>, ClassError> {
    Ok(classes_of(kind)?
        .into_iter()
        .filter(|c| c.is_even)
        .map(|c| c.id)
        .collect())
}

/// Classes whose element order is not divisible by `l`.
pub fn l_prime_classes(kind: GroupKind, l: u32) -> Result<Vec<ClassId>, ClassError> {
    if l < 2 {
        return Err(ClassError::UnsupportedL(l));
    }
    Ok(classes_of(kind)?
        .into_iter()
        .filter(|c| c.representative_order % l as u64 != 0)
        .map(|c| c.id)
        .collect())
}

/// The class obtained by multiplying representatives by the central element z
/// (spin families only). Fixes whole-preimage classes, swaps split halves.
pub fn z_translate(c: &ClassId) -> ClassId {
    assert!(c.kind.is_spin(), "z_translate applies to spin families only");
    ClassId::new(c.kind, c.cycle_type.clone(), c.tag.z_swap())
}
