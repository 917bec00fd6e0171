//! Explicit small-n models used as oracles: permutations of `S_n`/`A_n` and a
//! faithful double cover of `S_n` realized inside the Clifford algebra with
//! `e_i^2 = -1`, generated by `t_j = (e_j - e_{j+1}) / sqrt(2)`.
//!
//! These satisfy `t_j^2 = z`, `(t_j t_{j+1})^3 = z` and
//! `t_j t_k = z t_k t_j` for `|j - k| > 1` with `z = -1` central, which is the
//! presentation of the double cover. Everything here is exact and intended for
//! `n <= 7` (permutations) and `n <= 6` (the cover); the main crate never
//! depends on it, the test suite uses it to validate splitting rules, lift
//! orders, value conventions and structure constants.

use std::collections::{BTreeMap, HashMap};

use crate::partitions::Partition;
use crate::values::{rat_frac, AlgebraicValue};

pub type Perm = Vec<u8>;

pub fn identity_perm(n: usize) -> Perm {
    (0..n as u8).collect()
}

/// `(a . b)(i) = a(b(i))`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i as usize]).collect()
}

pub fn inverse(p: &Perm) -> Perm {
    let mut out = vec![0u8; p.len()];
    for (i, &img) in p.iter().enumerate() {
        out[img as usize] = i as u8;
    }
    out
}

pub fn cycle_type(p: &Perm) -> Partition {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = p[cur] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts)
}

pub fn is_odd(p: &Perm) -> bool {
    !cycle_type(p).is_even()
}

pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity_perm(n);
    fn heap(k: usize, cur: &mut Perm, out: &mut Vec<Perm>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

/// The permutation with consecutive cycles `(1..l1)(l1+1..l1+l2)...`.
pub fn canonical_permutation(lambda: &Partition, n: usize) -> Perm {
    assert_eq!(lambda.n() as usize, n);
    let mut p = identity_perm(n);
    let mut start = 0usize;
    for &part in lambda.parts() {
        let part = part as usize;
        for i in 0..part {
            p[start + i] = (start + (i + 1) % part) as u8;
        }
        start += part;
    }
    p
}

/// Element of the even/odd Clifford monoid spanned by blades, of the form
/// `2^(-scale/2) * sum_S coeff_S e_S`. Reduced so that not all coefficients
/// are even while `scale >= 2`; this makes the representation of group
/// elements unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    scale: u32,
    blades: BTreeMap<u32, i64>,
}

fn blade_mul(s: u32, t: u32) -> (u32, i64) {
    let mut acc = s;
    let mut sign = 1i64;
    let mut rem = t;
    while rem != 0 {
        let b = rem.trailing_zeros();
        rem &= rem - 1;
        let greater = acc & !((1u32 << (b + 1)) - 1);
        if greater.count_ones() % 2 == 1 {
            sign = -sign;
        }
        if acc & (1 << b) != 0 {
            sign = -sign; // e_b^2 = -1
            acc &= !(1 << b);
        } else {
            acc |= 1 << b;
        }
    }
    (acc, sign)
}

impl CliffordElement {
    pub fn one() -> Self {
        CliffordElement {
            scale: 0,
            blades: BTreeMap::from([(0, 1)]),
        }
    }

    /// The central element `z = -1`.
    pub fn z() -> Self {
        CliffordElement {
            scale: 0,
            blades: BTreeMap::from([(0, -1)]),
        }
    }

    /// Generator `t_j = (e_j - e_{j+1}) / sqrt(2)`, 1-based `j`.
    pub fn generator(j: usize) -> Self {
        CliffordElement {
            scale: 1,
            blades: BTreeMap::from([(1 << (j - 1), 1), (1 << j, -1)]),
        }
    }

    pub fn neg(&self) -> Self {
        CliffordElement {
            scale: self.scale,
            blades: self.blades.iter().map(|(&b, &c)| (b, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut blades: BTreeMap<u32, i64> = BTreeMap::new();
        for (&s, &cs) in &self.blades {
            for (&t, &ct) in &other.blades {
                let (blade, sign) = blade_mul(s, t);
                let entry = blades.entry(blade).or_insert(0);
                *entry += cs * ct * sign;
            }
        }
        blades.retain(|_, c| *c != 0);
        let mut out = CliffordElement {
            scale: self.scale + other.scale,
            blades,
        };
        out.reduce();
        out
    }

    fn reduce(&mut self) {
        while self.scale >= 2 && self.blades.values().all(|c| c % 2 == 0) {
            for c in self.blades.values_mut() {
                *c /= 2;
            }
            self.scale -= 2;
        }
    }
}

/// The double cover of `S_n`, fully enumerated.
pub struct CoverGroup {
    pub n: usize,
    pub elements: Vec<CliffordElement>,
    index: HashMap<CliffordElement, usize>,
    /// Image of each element under the projection to `S_n`.
    pub perms: Vec<Perm>,
    /// Index of `z * x` for each `x`.
    pub z_shift: Vec<usize>,
}

impl CoverGroup {
    pub fn new(n: usize) -> Self {
        assert!((2..=7).contains(&n), "cover model is for small n");
        let gens: Vec<CliffordElement> = (1..n).map(CliffordElement::generator).collect();
        let gen_perms: Vec<Perm> = (1..n)
            .map(|j| {
                let mut p = identity_perm(n);
                p.swap(j - 1, j);
                p
            })
            .collect();
        let mut elements = vec![CliffordElement::one()];
        let mut perms = vec![identity_perm(n)];
        let mut index = HashMap::new();
        index.insert(CliffordElement::one(), 0usize);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for (g, gp) in gens.iter().zip(&gen_perms) {
                let prod = elements[i].mul(g);
                if !index.contains_key(&prod) {
                    let idx = elements.len();
                    index.insert(prod.clone(), idx);
                    elements.push(prod);
                    perms.push(compose(&perms[i], gp));
                    frontier.push(idx);
                }
            }
        }
        let fact: usize = (1..=n).product();
        assert_eq!(elements.len(), 2 * fact, "cover has order 2 * n!");
        let z_shift: Vec<usize> = elements
            .iter()
            .map(|x| index[&x.mul(&CliffordElement::z())])
            .collect();
        CoverGroup {
            n,
            elements,
            index,
            perms,
            z_shift,
        }
    }

    pub fn index_of(&self, x: &CliffordElement) -> usize {
        self.index[x]
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn order_of(&self, a: usize) -> u64 {
        // identity is element 0 by construction; a^k is tracked in step with k
        if a == 0 {
            return 1;
        }
        let mut cur = a;
        let mut k = 1u64;
        while cur != 0 {
            cur = self.mul_idx(cur, a);
            k += 1;
            assert!(k < 10_000);
        }
        k
    }

    pub fn is_even_element(&self, a: usize) -> bool {
        !is_odd(&self.perms[a])
    }

    /// Canonical word lift of the consecutive-cycle permutation of type
    /// `lambda`: the product of `t_a t_(a+1) ... t_(b-1)` over the cycles.
    pub fn canonical_lift(&self, lambda: &Partition) -> usize {
        let mut x = CliffordElement::one();
        let mut start = 1usize;
        for &part in lambda.parts() {
            let part = part as usize;
            for j in start..start + part - 1 {
                x = x.mul(&CliffordElement::generator(j));
            }
            start += part;
        }
        let idx = self.index[&x];
        debug_assert_eq!(cycle_type(&self.perms[idx]), *lambda);
        idx
    }

    /// Conjugacy classes of the cover (`even_only = false`) or of its even
    /// subgroup (`even_only = true`). Returns the class index per element,
    /// with `usize::MAX` for elements outside the subgroup.
    pub fn conjugacy_classes(&self, even_only: bool) -> (Vec<usize>, usize) {
        let mut conjugators: Vec<usize> = Vec::new();
        if even_only {
            for j in 2..self.n {
                let x = CliffordElement::generator(1).mul(&CliffordElement::generator(j));
                conjugators.push(self.index[&x]);
            }
        } else {
            for j in 1..self.n {
                conjugators.push(self.index[&CliffordElement::generator(j)]);
            }
        }
        let inv: Vec<usize> = conjugators
            .iter()
            .map(|&g| {
                // order is finite and small; find inverse by powering
                let mut cur = g;
                let mut prev = g;
                while cur != 0 {
                    prev = cur;
                    cur = self.mul_idx(cur, g);
                }
                prev
            })
            .collect();
        let mut class = vec![usize::MAX; self.elements.len()];
        let mut count = 0usize;
        for start in 0..self.elements.len() {
            if class[start] != usize::MAX {
                continue;
            }
            if even_only && !self.is_even_element(start) {
                continue;
            }
            let id = count;
            count += 1;
            let mut stack = vec![start];
            class[start] = id;
            while let Some(x) = stack.pop() {
                for (&g, &gi) in conjugators.iter().zip(&inv) {
                    let y = self.mul_idx(self.mul_idx(g, x), gi);
                    if class[y] == usize::MAX {
                        class[y] = id;
                        stack.push(y);
                    }
                }
            }
        }
        (class, count)
    }
}

/// Dense square matrix over exact algebraic values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix(pub Vec<Vec<AlgebraicValue>>);

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut rows = vec![vec![AlgebraicValue::zero(); dim]; dim];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = AlgebraicValue::one();
        }
        Matrix(rows)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let dim = self.0.len();
        let mut out = vec![vec![AlgebraicValue::zero(); dim]; dim];
        for i in 0..dim {
            for k in 0..dim {
                let a = &self.0[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = &other.0[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    out[i][j] = out[i][j].add(&a.mul(b));
                }
            }
        }
        Matrix(out)
    }

    pub fn scale(&self, v: &AlgebraicValue) -> Matrix {
        Matrix(
            self.0
                .iter()
                .map(|row| row.iter().map(|x| x.mul(v)).collect())
                .collect(),
        )
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a.add(b)).collect())
                .collect(),
        )
    }

    pub fn trace(&self) -> AlgebraicValue {
        let mut acc = AlgebraicValue::zero();
        for (i, row) in self.0.iter().enumerate() {
            acc = acc.add(&row[i]);
        }
        acc
    }
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, rb) = (a.0.len(), b.0.len());
    let dim = ra * rb;
    let mut out = vec![vec![AlgebraicValue::zero(); dim]; dim];
    for i in 0..ra {
        for j in 0..ra {
            if a.0[i][j].is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a.0[i][j].mul(&b.0[k][l]);
                }
            }
        }
    }
    Matrix(out)
}

/// Matrices `rho(e_1), ..., rho(e_n)` of a spinor representation with
/// `rho(e_i)^2 = -I`, built from Pauli matrices tensored with `i`.
pub fn gamma_matrices(n: usize) -> Vec<Matrix> {
    let m = n.div_ceil(2);
    let i1 = AlgebraicValue::i_power(1);
    let p1 = Matrix(vec![
        vec![AlgebraicValue::zero(), AlgebraicValue::one()],
        vec![AlgebraicValue::one(), AlgebraicValue::zero()],
    ]);
    let p2 = Matrix(vec![
        vec![AlgebraicValue::zero(), AlgebraicValue::i_power(3)],
        vec![AlgebraicValue::i_power(1), AlgebraicValue::zero()],
    ]);
    let p3 = Matrix(vec![
        vec![AlgebraicValue::one(), AlgebraicValue::zero()],
        vec![AlgebraicValue::zero(), AlgebraicValue::from_int(-1)],
    ]);
    let eye = Matrix::identity(2);
    let mut out = Vec::new();
    for idx in 1..=n {
        let slot = (idx + 1) / 2; // tensor position, 1-based
        let head = if idx % 2 == 1 { &p1 } else { &p2 };
        let mut mat = Matrix::identity(1);
        for pos in 1..=m {
            let factor = if pos < slot {
                &p3
            } else if pos == slot {
                head
            } else {
                &eye
            };
            mat = kron(&mat, factor);
        }
        out.push(mat.scale(&i1));
    }
    out
}

/// Spinor matrix of a Clifford group element.
pub fn spinor_matrix(x: &CliffordElement, gammas: &[Matrix]) -> Matrix {
    let dim = gammas[0].0.len();
    let mut acc = Matrix(vec![vec![AlgebraicValue::zero(); dim]; dim]);
    for (&blade, &coeff) in &x.blades {
        let mut m = Matrix::identity(dim);
        for b in 0..32 {
            if blade & (1 << b) != 0 {
                m = m.mul(&gammas[b as usize]);
            }
        }
        acc = acc.add(&m.scale(&AlgebraicValue::from_int(coeff)));
    }
    // overall factor 2^(-scale/2) = (sqrt(2)/2)^scale
    let inv_sqrt2 = AlgebraicValue::sqrt_int(2).scale(&rat_frac(1, 2));
    let mut factor = AlgebraicValue::one();
    for _ in 0..x.scale {
        factor = factor.mul(&inv_sqrt2);
    }
    acc.scale(&factor)
}
