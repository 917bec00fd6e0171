//! Exact character tables of the symmetric and alternating groups and their
//! double covers, with tools for comparing irreducible characters on classes
//! of restricted element order and for computing in the centre of the group
//! algebra.
//!
//! All arithmetic is exact: character values live in the ring generated by
//! the rationals, `i`, and square roots of squarefree integers. Every table
//! construction self-checks (orthogonality, degree sums, vanishing patterns)
//! and fails loudly rather than returning inconsistent data.
//!
//! Modules:
//! - [`partitions`]: hooks, cores, quotients, abacus, regularisation
//! - [`values`]: the exact value ring
//! - [`classes`]: conjugacy classes, sizes, split rules, element orders
//! - [`characters`]: rim-hook recursion and the `S_n` / `A_n` tables
//! - [`spin`]: bar recursion and the double-cover tables
//! - [`class_algebra`]: structure constants, closure, generation checks
//! - [`agreement`]: agreeing pairs, predictions, classification reports
//! - [`cover`]: explicit small-n models used as oracles

pub mod agreement;
pub mod characters;
pub mod class_algebra;
pub mod classes;
pub mod cover;
pub mod partitions;
pub mod spin;
pub mod values;

pub use agreement::{
    agreeing_pairs, label_invariance_check, predicted_pairs, table_of, verify_classification,
    AgreementPair, Flip, PairKind, PredictionSet, Scope, VerifyReport,
};
pub use characters::{degree, mn_value, table_alt, table_sym, CharId, CharTag, CharacterTable};
pub use classes::{classes_of, even_classes, l_prime_classes, z_translate, ClassId, ClassInfo, ClassTag, GroupKind};
pub use partitions::{
    count_l_prime_classes, dblreg, partitions_of, strict_partitions_of, Partition,
};
pub use spin::{spin_exceptional_value, spin_value_odd, table_spin_alt, table_spin_sym};
pub use values::{AlgebraicValue, Rational};
