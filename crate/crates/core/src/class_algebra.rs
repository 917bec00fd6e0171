//! The centre of the group algebra in the class-sum basis: exact structure
//! constants, an independent convolution oracle, subalgebra closure over the
//! rationals, and the class-sum generation checks.
//!
//! Structure constants come from the character-sum formula
//! `a^c_(ab) = (|C_a||C_b|/|G|) sum_chi chi(a) chi(b) conj(chi(c)) / chi(1)`
//! and must be nonnegative integers; a failure here signals a character-table
//! bug, so it is a hard error.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::characters::{rat_u128, CharError, CharacterTable};
use crate::classes::{ClassError, ClassId, GroupKind};
use crate::cover::{
    all_permutations, canonical_permutation, compose, cycle_type, inverse, is_odd, CoverGroup,
};
use crate::partitions::Partition;
use crate::values::{AlgebraicValue, Rational};

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("non-integral structure constant at ({0}, {1}) -> {2}: {3}")]
    NonIntegralStructureConstant(String, String, String, String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error("unknown class {0}")]
    UnknownClass(String),
}

/// Element of the centre of the rational group algebra in the class-sum
/// basis: a rational coefficient per conjugacy class of one fixed group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentreElement {
    pub kind: GroupKind,
    /// Dense coefficients, indexed like the class list of `kind`.
    pub coeffs: Vec<Rational>,
}

impl CentreElement {
    pub fn zero(kind: GroupKind, dim: usize) -> Self {
        CentreElement {
            kind,
            coeffs: vec![Rational::zero(); dim],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// All structure constants of one group, as a dense tensor of integers.
pub struct StructureConstants {
    pub kind: GroupKind,
    pub classes: Vec<ClassId>,
    /// `consts[a][b][c]` = coefficient of class `c` in `s_a s_b`.
    pub consts: Vec<Vec<Vec<BigInt>>>,
}

impl StructureConstants {
    pub fn class_index(&self, id: &ClassId) -> Option<usize> {
        self.classes.iter().position(|c| c == id)
    }
}

static TENSORS: LazyLock<Mutex<HashMap<GroupKind, Arc<StructureConstants>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The full structure-constant tensor of the given group (cached).
pub fn structure_tensor(kind: GroupKind) -> Result<Arc<StructureConstants>, AlgebraError> {
    if let Some(t) = TENSORS.lock().unwrap().get(&kind) {
        return Ok(t.clone());
    }
    let table = crate::agreement::table_of(kind)?;
    let k = table.classes.len();
    let group_order = rat_u128(kind.order());
    let rows: Result<Vec<Vec<Vec<BigInt>>>, AlgebraError> = (0..k)
        .into_par_iter()
        .map(|a| {
            let mut out_a = Vec::with_capacity(k);
            for b in 0..k {
                if b < a {
                    // symmetric; filled below
                    out_a.push(Vec::new());
                    continue;
                }
                let mut weights: Vec<AlgebraicValue> = Vec::with_capacity(table.chars.len());
                for (row, vals) in table.values.iter().enumerate() {
                    let w = vals[a]
                        .mul(&vals[b])
                        .scale(&(rat_u128(1) / rat_u128(table.degrees[row])));
                    weights.push(w);
                }
                let scale = rat_u128(table.classes[a].size) * rat_u128(table.classes[b].size)
                    / group_order.clone();
                let mut per_c = Vec::with_capacity(k);
                for c in 0..k {
                    let mut acc = AlgebraicValue::zero();
                    for (row, w) in weights.iter().enumerate() {
                        if w.is_zero() || table.values[row][c].is_zero() {
                            continue;
                        }
                        acc = acc.add(&w.mul(&table.values[row][c].conj()));
                    }
                    let val = acc.scale(&scale);
                    let rat = val.as_rational().map_err(|_| {
                        AlgebraError::NonIntegralStructureConstant(
                            table.classes[a].id.to_string(),
                            table.classes[b].id.to_string(),
                            table.classes[c].id.to_string(),
                            val.to_string(),
                        )
                    })?;
                    if !rat.is_integer() || rat.is_negative() {
                        return Err(AlgebraError::NonIntegralStructureConstant(
                            table.classes[a].id.to_string(),
                            table.classes[b].id.to_string(),
                            table.classes[c].id.to_string(),
                            rat.to_string(),
                        ));
                    }
                    per_c.push(rat.to_integer());
                }
                out_a.push(per_c);
            }
            Ok(out_a)
        })
        .collect();
    let mut consts = rows?;
    for a in 0..k {
        for b in 0..a {
            consts[a][b] = consts[b][a].clone();
        }
    }
    let tensor = Arc::new(StructureConstants {
        kind,
        classes: table.classes.iter().map(|c| c.id.clone()).collect(),
        consts,
    });
    TENSORS
        .lock()
        .unwrap()
        .entry(kind)
        .or_insert_with(|| tensor.clone());
    Ok(tensor)
}

/// The product `s_a s_b` in the class-sum basis: class -> coefficient.
pub fn structure_constants(
    kind: GroupKind,
    a: &ClassId,
    b: &ClassId,
) -> Result<Vec<(ClassId, BigInt)>, AlgebraError> {
    let tensor = structure_tensor(kind)?;
    let ia = tensor
        .class_index(a)
        .ok_or_else(|| AlgebraError::UnknownClass(a.to_string()))?;
    let ib = tensor
        .class_index(b)
        .ok_or_else(|| AlgebraError::UnknownClass(b.to_string()))?;
    Ok(tensor
        .classes
        .iter()
        .zip(&tensor.consts[ia][ib])
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c.clone(), v.clone()))
        .collect())
}

/// Independent brute-force structure constants for `S_n`: enumerate the class
/// of type `lambda`, multiply by a fixed representative of type `mu`, and
/// count the products per cycle type.
pub fn convolution_oracle(
    n: u32,
    lambda: &Partition,
    mu: &Partition,
) -> Vec<(Partition, u128)> {
    assert!(n <= 8, "oracle is exponential; keep n small");
    let nn = n as usize;
    let perms = all_permutations(nn);
    let fixed = canonical_permutation(mu, nn);
    let mut counts: HashMap<Partition, u128> = HashMap::new();
    for x in perms.iter().filter(|x| cycle_type(x) == *lambda) {
        *counts.entry(cycle_type(&compose(x, &fixed))).or_insert(0) += 1;
    }
    let mu_size = (GroupKind::Sym(n).order() / mu.centralizer_order()) as u128;
    let mut out: Vec<(Partition, u128)> = counts
        .into_iter()
        .map(|(nu, count)| {
            let nu_size = GroupKind::Sym(n).order() / nu.centralizer_order();
            let total = count * mu_size;
            assert_eq!(total % nu_size, 0, "class-sum coefficient is integral");
            (nu, total / nu_size)
        })
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Row-reduced basis over the rationals, with deterministic pivot order.
struct Echelon {
    /// Column visit order (pivot preference).
    order: Vec<usize>,
    /// Rows in echelon form: (pivot position in `order`, coefficients).
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn new(order: Vec<usize>) -> Self {
        Echelon {
            order,
            rows: Vec::new(),
        }
    }

    /// Reduces `v` against the basis; returns the residue.
    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (pivot, row) in &self.rows {
            let col = self.order[*pivot];
            if !v[col].is_zero() {
                let factor = v[col].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        v
    }

    /// Reduces and inserts if independent; returns whether the rank grew.
    fn insert(&mut self, v: Vec<Rational>) -> bool {
        let v = self.reduce(v);
        for (k, &col) in self.order.iter().enumerate() {
            if !v[col].is_zero() {
                let inv = v[col].clone().recip();
                let normalized: Vec<Rational> = v.iter().map(|x| x * &inv).collect();
                self.rows.push((k, normalized));
                self.rows.sort_by_key(|(p, _)| *p);
                return true;
            }
        }
        false
    }

    fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }
}

/// Basis of the smallest unital subalgebra of the centre containing the
/// generators, computed by iterating products against the generators and
/// re-reducing until a fixed point. Pivot order follows the `ClassId`
/// serialization sort.
pub fn subalgebra_closure(
    kind: GroupKind,
    generators: &[CentreElement],
) -> Result<Vec<CentreElement>, AlgebraError> {
    let tensor = structure_tensor(kind)?;
    let k = tensor.classes.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| tensor.classes[i].to_string());

    let identity_idx = tensor
        .classes
        .iter()
        .position(|c| c.cycle_type.support() == 0 && {
            // the class of the identity element itself
            use crate::classes::ClassTag::*;
            matches!(c.tag, Whole | One | OnePlus | Plus)
        })
        .expect("identity class");

    let mut basis = Echelon::new(order);
    let mut unit = vec![Rational::zero(); k];
    unit[identity_idx] = Rational::from_integer(1.into());
    let mut vectors: Vec<Vec<Rational>> = vec![unit];
    for g in generators {
        assert_eq!(g.kind, kind);
        vectors.push(g.coeffs.clone());
    }
    let mut fresh: Vec<Vec<Rational>> = Vec::new();
    for v in vectors {
        if basis.insert(v.clone()) {
            fresh.push(v);
        }
    }
    let gen_vecs: Vec<Vec<Rational>> = generators.iter().map(|g| g.coeffs.clone()).collect();
    while !fresh.is_empty() {
        let batch: Vec<Vec<Rational>> = fresh
            .par_iter()
            .flat_map(|v| {
                gen_vecs
                    .par_iter()
                    .map(|g| multiply_vectors(&tensor, v, g))
                    .collect::<Vec<_>>()
            })
            .collect();
        fresh.clear();
        for prod in batch {
            if basis.insert(prod.clone()) {
                fresh.push(prod);
            }
        }
    }
    Ok(basis
        .rows
        .iter()
        .map(|(_, row)| CentreElement {
            kind,
            coeffs: row.clone(),
        })
        .collect())
}

fn multiply_vectors(
    tensor: &StructureConstants,
    u: &[Rational],
    v: &[Rational],
) -> Vec<Rational> {
    let k = tensor.classes.len();
    let mut out = vec![Rational::zero(); k];
    for (a, ua) in u.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (b, vb) in v.iter().enumerate() {
            if vb.is_zero() {
                continue;
            }
            let w = ua * vb;
            for (c, coef) in tensor.consts[a][b].iter().enumerate() {
                if !coef.is_zero() {
                    out[c] = &out[c] + &(&w * &Rational::from_integer(coef.clone()));
                }
            }
        }
    }
    out
}

/// Product of two centre elements.
pub fn multiply(
    kind: GroupKind,
    u: &CentreElement,
    v: &CentreElement,
) -> Result<CentreElement, AlgebraError> {
    let tensor = structure_tensor(kind)?;
    Ok(CentreElement {
        kind,
        coeffs: multiply_vectors(&tensor, &u.coeffs, &v.coeffs),
    })
}

/// Outcome of a class-sum generation check.
#[derive(Debug, Clone, serde::Serialize)]
pub struct GenerationReport {
    pub kind: String,
    pub n: u32,
    pub l: u32,
    pub generated: bool,
    /// Dimension of the generated subalgebra.
    pub dimension: usize,
    /// Number of generator sums supplied.
    pub generators: usize,
    /// Parent-class sums not contained in the subalgebra.
    pub missing: Vec<String>,
    /// Parent cycle types of the generators.
    pub generator_types: Vec<String>,
    /// For each generated target, its expression in the closure basis.
    #[serde(skip)]
    pub certificates: Vec<(String, Vec<Rational>)>,
}

/// Groups the classes of the alternating-side group by parent class of the
/// symmetric-side group: for `Alt` the parent is the `S_n`-class (split halves
/// summed), for `SpinAlt` the parent is the `tS_n`-class (so the `(1)` and
/// `(z)` halves stay separate generators).
fn parent_class_sums(
    kind: GroupKind,
    tensor: &StructureConstants,
) -> Vec<(Partition, Option<bool>, Vec<usize>)> {
    use crate::classes::ClassTag::*;
    let mut groups: Vec<(Partition, Option<bool>, Vec<usize>)> = Vec::new();
    for (i, c) in tensor.classes.iter().enumerate() {
        // key: cycle type plus, for spin-alt, which tS_n-class half
        let half = match kind {
            GroupKind::SpinAlt(_) => match c.tag {
                One | OnePlus | OneMinus => Some(false),
                Zee | ZeePlus | ZeeMinus => Some(true),
                _ => None,
            },
            _ => None,
        };
        if let Some(g) = groups
            .iter_mut()
            .find(|(t, h, _)| *t == c.cycle_type && *h == half)
        {
            g.2.push(i);
        } else {
            groups.push((c.cycle_type.clone(), half, vec![i]));
        }
    }
    groups
}

/// Verifies that the even `l'` parent-class sums generate all even
/// parent-class sums inside the centre of the alternating-side group algebra.
pub fn check_generation(
    kind: GroupKind,
    l: u32,
    force: bool,
) -> Result<GenerationReport, AlgebraError> {
    let n = kind.n();
    match kind {
        GroupKind::Alt(_) => {
            if !force && l < 4 {
                return Err(AlgebraError::PreconditionViolated(format!(
                    "theorem requires l >= 4 for alt, got l = {l}"
                )));
            }
        }
        GroupKind::SpinAlt(_) => {
            if !force && (l < 5 || l % 2 == 0) {
                return Err(AlgebraError::PreconditionViolated(format!(
                    "theorem requires odd l >= 5 for spin-alt, got l = {l}"
                )));
            }
        }
        _ => {
            return Err(AlgebraError::PreconditionViolated(
                "generation checks run in alt or spin-alt".into(),
            ))
        }
    }
    if !force && n < l {
        return Err(AlgebraError::PreconditionViolated(format!(
            "theorem requires n >= l, got n = {n}, l = {l}"
        )));
    }
    let tensor = structure_tensor(kind)?;
    let k = tensor.classes.len();
    let table = crate::agreement::table_of(kind)?;
    let order_of = |i: usize| table.classes[i].representative_order;
    let groups = parent_class_sums(kind, &tensor);

    let mut generators = Vec::new();
    let mut generator_types = Vec::new();
    let mut targets = Vec::new();
    for (ty, half, members) in &groups {
        let mut coeffs = vec![Rational::zero(); k];
        for &i in members {
            coeffs[i] = Rational::from_integer(1.into());
        }
        let el = CentreElement { kind, coeffs };
        // all classes in one parent are translates of each other, so they
        // share their element order; the alternating side is all even
        let lp = order_of(members[0]) % l as u64 != 0;
        if lp {
            let label = match half {
                None => format!("({ty})"),
                Some(false) => format!("({ty}):1"),
                Some(true) => format!("({ty}):z"),
            };
            generator_types.push(label);
            generators.push(el.clone());
        }
        let label = match half {
            None => format!("({ty})"),
            Some(false) => format!("({ty}):1"),
            Some(true) => format!("({ty}):z"),
        };
        targets.push((label, el));
    }

    let basis = subalgebra_closure(kind, &generators)?;
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| tensor.classes[i].to_string());
    let mut ech = Echelon::new(order);
    for b in &basis {
        ech.insert(b.coeffs.clone());
    }
    let mut missing = Vec::new();
    let mut certificates = Vec::new();
    for (label, target) in &targets {
        if ech.contains(&target.coeffs) {
            certificates.push((label.clone(), express_in_basis(&ech, &target.coeffs)));
        } else {
            missing.push(label.clone());
        }
    }
    Ok(GenerationReport {
        kind: kind.family_name().to_string(),
        n,
        l,
        generated: missing.is_empty(),
        dimension: basis.len(),
        generators: generators.len(),
        missing,
        generator_types,
        certificates,
    })
}

fn express_in_basis(ech: &Echelon, v: &[Rational]) -> Vec<Rational> {
    // forward elimination records the coefficients used per basis row
    let mut v = v.to_vec();
    let mut coeffs = Vec::with_capacity(ech.rows.len());
    for (pivot, row) in &ech.rows {
        let col = ech.order[*pivot];
        let factor = v[col].clone();
        coeffs.push(factor.clone());
        if !factor.is_zero() {
            for (x, y) in v.iter_mut().zip(row) {
                *x = &*x - &(&factor * y);
            }
        }
    }
    coeffs
}

/// Central character value `omega_chi(s_C) = |C| chi(C) / chi(1)`.
pub fn central_character_value(
    table: &CharacterTable,
    char_idx: usize,
    class_idx: usize,
) -> AlgebraicValue {
    table.values[char_idx][class_idx]
        .scale(&(rat_u128(table.classes[class_idx].size) / rat_u128(table.degrees[char_idx])))
}

/// The class sum of all classes of the given cycle type (summing split halves).
pub fn whole_type_sum(kind: GroupKind, ty: &Partition) -> Result<CentreElement, AlgebraError> {
    let tensor = structure_tensor(kind)?;
    let mut coeffs = vec![Rational::zero(); tensor.classes.len()];
    for (i, c) in tensor.classes.iter().enumerate() {
        if c.cycle_type == *ty {
            coeffs[i] = Rational::from_integer(1.into());
        }
    }
    Ok(CentreElement { kind, coeffs })
}

/// Aligns the abstract class list with the conjugacy classes of the cover
/// model: `(1)` / `+` halves are the classes containing the canonical word
/// lift, `z`-tagged halves contain its `z`-translate, and the `OneMinus` half
/// is the other piece of the same full-cover class as the canonical lift.
/// Returns the model class per abstract index, plus the class id per element.
pub fn model_class_alignment(
    group: &CoverGroup,
    kind: GroupKind,
) -> Result<(Vec<usize>, Vec<usize>), AlgebraError> {
    use crate::classes::ClassTag::*;
    let even_only = matches!(kind, GroupKind::SpinAlt(_));
    let (class_of, count) = group.conjugacy_classes(even_only);
    let (tilde_class_of, _) = group.conjugacy_classes(false);
    let tensor = structure_tensor(kind)?;
    let mut map = vec![usize::MAX; tensor.classes.len()];
    for (abstract_idx, id) in tensor.classes.iter().enumerate() {
        let w = group.canonical_lift(&id.cycle_type);
        let zw = group.z_shift[w];
        let pick = match id.tag {
            Whole | One | OnePlus | Plus => class_of[w],
            Zee | ZeePlus | Minus => class_of[zw],
            OneMinus => other_half(group, &class_of, &tilde_class_of, w),
            ZeeMinus => other_half(group, &class_of, &tilde_class_of, zw),
        };
        map[abstract_idx] = pick;
    }
    // sanity: bijection onto model classes
    let mut seen = vec![false; count];
    for &c in &map {
        assert!(c != usize::MAX && !seen[c], "alignment must be a bijection");
        seen[c] = true;
    }
    Ok((map, class_of))
}

/// The other restricted class inside the full-cover class of `w`.
fn other_half(
    group: &CoverGroup,
    class_of: &[usize],
    tilde_class_of: &[usize],
    w: usize,
) -> usize {
    (0..group.elements.len())
        .find(|&x| tilde_class_of[x] == tilde_class_of[w] && class_of[x] != class_of[w])
        .map(|x| class_of[x])
        .expect("full-cover class splits on restriction")
}

/// Structure constants of the cover model (or its even subgroup) computed by
/// brute force, indexed like the abstract class list via the alignment.
pub fn model_structure_tensor(
    group: &CoverGroup,
    kind: GroupKind,
) -> Result<Vec<Vec<Vec<BigInt>>>, AlgebraError> {
    let (map, class_of) = model_class_alignment(group, kind)?;
    let k = map.len();
    // members per abstract class
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for x in 0..group.elements.len() {
        if class_of[x] == usize::MAX {
            continue;
        }
        if let Some(a) = map.iter().position(|&c| c == class_of[x]) {
            members[a].push(x);
        }
    }
    let mut out = vec![vec![vec![BigInt::zero(); k]; k]; k];
    for a in 0..k {
        for b in 0..k {
            let fixed = members[b][0];
            let mut counts = vec![0u64; k];
            for &x in &members[a] {
                let prod = group.mul_idx(x, fixed);
                let c = map
                    .iter()
                    .position(|&mc| mc == class_of[prod])
                    .expect("product class");
                counts[c] += 1;
            }
            for c in 0..k {
                let total = counts[c] as u128 * members[b].len() as u128;
                let size = members[c].len() as u128;
                assert_eq!(total % size, 0);
                out[a][b][c] = BigInt::from(total / size);
            }
        }
    }
    Ok(out)
}

/// Brute-force `A_n` structure constants aligned with the abstract classes:
/// `+` halves contain the canonical permutation.
pub fn alt_model_structure_tensor(n: u32) -> Result<Vec<Vec<Vec<BigInt>>>, AlgebraError> {
    let tensor = structure_tensor(GroupKind::Alt(n))?;
    let nn = n as usize;
    let perms: Vec<crate::cover::Perm> = all_permutations(nn)
        .into_iter()
        .filter(|p| !is_odd(p))
        .collect();
    let k = tensor.classes.len();
    // assign each even permutation to an abstract class
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    let index: HashMap<crate::cover::Perm, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut assigned = vec![usize::MAX; perms.len()];
    for (cls_idx, c) in tensor.classes.iter().enumerate() {
        use crate::classes::ClassTag::*;
        match c.tag {
            Whole => {
                for (i, p) in perms.iter().enumerate() {
                    if cycle_type(p) == c.cycle_type {
                        members[cls_idx].push(i);
                        assigned[i] = cls_idx;
                    }
                }
            }
            Plus => {
                // orbit of the canonical permutation under A_n-conjugation,
                // using the 3-cycles (0 1 k) as generators
                let mut gens: Vec<crate::cover::Perm> = Vec::new();
                for k2 in 2..nn {
                    let mut g = crate::cover::identity_perm(nn);
                    g[0] = 1;
                    g[1] = k2 as u8;
                    g[k2] = 0;
                    gens.push(g);
                }
                let start = index[&canonical_permutation(&c.cycle_type, nn)];
                let mut stack = vec![start];
                let mut seen: Vec<usize> = vec![start];
                assigned[start] = cls_idx;
                while let Some(x) = stack.pop() {
                    for g in &gens {
                        let y = compose(&compose(g, &perms[x]), &inverse(g));
                        let yi = index[&y];
                        if assigned[yi] == usize::MAX {
                            assigned[yi] = cls_idx;
                            seen.push(yi);
                            stack.push(yi);
                        }
                    }
                }
                members[cls_idx] = seen;
            }
            Minus => {
                // everything of the type not already assigned to Plus
                for (i, p) in perms.iter().enumerate() {
                    if cycle_type(p) == c.cycle_type && assigned[i] == usize::MAX {
                        members[cls_idx].push(i);
                        assigned[i] = cls_idx;
                    }
                }
            }
            _ => unreachable!("A_n classes are whole or +/-"),
        }
    }
    for (cls_idx, c) in tensor.classes.iter().enumerate() {
        assert_eq!(
            members[cls_idx].len() as u128,
            {
                let t = crate::classes::classes_of(GroupKind::Alt(n))?;
                t.iter().find(|ci| ci.id == *c).unwrap().size
            },
            "class size of {c}"
        );
    }
    let mut out = vec![vec![vec![BigInt::zero(); k]; k]; k];
    for a in 0..k {
        for b in 0..k {
            let fixed = &perms[members[b][0]];
            let mut counts = vec![0u64; k];
            for &x in &members[a] {
                let prod = compose(&perms[x], fixed);
                counts[assigned[index[&prod]]] += 1;
            }
            for c in 0..k {
                let total = counts[c] as u128 * members[b].len() as u128;
                let size = members[c].len() as u128;
                assert_eq!(total % size, 0);
                out[a][b][c] = BigInt::from(total / size);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn identity_class_is_the_unit() {
        let kind = GroupKind::Sym(4);
        let tensor = structure_tensor(kind).unwrap();
        let e = ClassId::new(kind, p(&[1, 1, 1, 1]), crate::classes::ClassTag::Whole);
        for b in &tensor.classes {
            let prod = structure_constants(kind, &e, b).unwrap();
            assert_eq!(prod, vec![(b.clone(), BigInt::from(1))]);
        }
    }

    #[test]
    fn transposition_square_in_s4() {
        let kind = GroupKind::Sym(4);
        let t = ClassId::new(kind, p(&[2, 1, 1]), crate::classes::ClassTag::Whole);
        let prod = structure_constants(kind, &t, &t).unwrap();
        let as_map: HashMap<String, BigInt> = prod
            .into_iter()
            .map(|(c, v)| (c.cycle_type.to_string(), v))
            .collect();
        assert_eq!(as_map["1,1,1,1"], BigInt::from(6));
        assert_eq!(as_map["2,2"], BigInt::from(2));
        assert_eq!(as_map["3,1"], BigInt::from(3));
        // matches the independent convolution oracle
        let oracle = convolution_oracle(4, &p(&[2, 1, 1]), &p(&[2, 1, 1]));
        for (nu, v) in oracle {
            assert_eq!(as_map.get(&nu.to_string()), Some(&BigInt::from(v)));
        }
    }

    #[test]
    fn support_lemma_in_s8() {
        // the unique maximal-support constituent of s_lambda s_mu is the join
        for n in [6u32, 8] {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    if lambda.support() + mu.support() > n || lambda.support() == 0 {
                        continue;
                    }
                    let prod = convolution_oracle(n, &lambda, &mu);
                    let bound = lambda.support() + mu.support();
                    let big: Vec<&Partition> = prod
                        .iter()
                        .filter(|(nu, _)| nu.support() >= bound)
                        .map(|(nu, _)| nu)
                        .collect();
                    let join = Partition::from_unsorted(
                        lambda
                            .parts()
                            .iter()
                            .chain(mu.parts().iter())
                            .cloned()
                            .filter(|&x| x > 1)
                            .chain(std::iter::repeat(1).take(
                                (n - lambda.support() - mu.support()) as usize,
                            ))
                            .collect(),
                    );
                    assert_eq!(big.len(), 1, "unique top-support summand");
                    assert_eq!(big[0], &join);
                }
            }
        }
    }

    #[test]
    fn generation_instances() {
        let r = check_generation(GroupKind::Alt(6), 4, false).unwrap();
        assert!(r.generated, "alt n=6 l=4: missing {:?}", r.missing);
        let r = check_generation(GroupKind::Alt(7), 5, false).unwrap();
        assert!(r.generated);
        let r = check_generation(GroupKind::SpinAlt(5), 5, false).unwrap();
        assert!(r.generated);
        assert!(check_generation(GroupKind::Alt(6), 3, false).is_err());
        assert!(check_generation(GroupKind::SpinAlt(6), 6, false).is_err());
        assert!(check_generation(GroupKind::Alt(4), 5, false).is_err());
        // degenerate exploration still works with force
        let r = check_generation(GroupKind::Alt(4), 5, true).unwrap();
        assert!(r.generated, "vacuously true below l");
    }

    #[test]
    fn closure_of_everything_is_everything() {
        let kind = GroupKind::Alt(5);
        let tensor = structure_tensor(kind).unwrap();
        let k = tensor.classes.len();
        let gens: Vec<CentreElement> = (0..k)
            .map(|i| {
                let mut coeffs = vec![Rational::zero(); k];
                coeffs[i] = Rational::from_integer(1.into());
                CentreElement { kind, coeffs }
            })
            .collect();
        let basis = subalgebra_closure(kind, &gens).unwrap();
        assert_eq!(basis.len(), k);
    }

    #[test]
    fn cycles_generate_the_centre_of_sym() {
        // Kramer: class sums of cycles generate Z(Q S_n)
        for n in 3u32..=8 {
            let kind = GroupKind::Sym(n);
            let tensor = structure_tensor(kind).unwrap();
            let k = tensor.classes.len();
            let gens: Vec<CentreElement> = (2..=n)
                .map(|i| {
                    let mut parts = vec![i];
                    parts.extend(std::iter::repeat(1).take((n - i) as usize));
                    let ty = Partition::new(parts).unwrap();
                    whole_type_sum(kind, &ty).unwrap()
                })
                .collect();
            let basis = subalgebra_closure(kind, &gens).unwrap();
            assert_eq!(basis.len(), k, "cycles generate at n = {n}");
        }
    }
}
