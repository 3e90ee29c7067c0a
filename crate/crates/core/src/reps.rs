//! Character tables and representation arithmetic.
//!
//! A representation is recorded by its character: one exact cyclotomic value
//! per conjugacy class. Tables for groups constructed as products of cyclic
//! groups are written down directly; everything else goes through the
//! class-algebra method: simultaneous eigenvectors of the class-sum matrices
//! over a prime field `F_p` with `exponent(G) | p - 1`, followed by an exact
//! lift of the character values to cyclotomic numbers by discrete Fourier
//! inversion on roots of unity. Both orthogonality relations are verified
//! exactly on every table before it is handed out.
//!
//! [`GroupContext`] bundles a group with its table, its subgroup classes, and
//! the full restriction-multiplicity matrices `G-irreducible -> H-irreducible`
//! for every subgroup class. Downstream fixed-point computations work entirely
//! in those integer matrices.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactnum::{rat, CyclotomicNumber, Rational};
use crate::groups::{subgroups_up_to_conjugacy, FiniteGroupData, Subgroup};
use crate::modp::{self, Fp};

/// A class function with cyclotomic values; for genuine characters the value
/// at the identity class is the dimension.
#[derive(Clone, Debug)]
pub struct Character {
    pub group: Arc<FiniteGroupData>,
    /// One value per conjugacy class, in class order.
    pub values: Vec<CyclotomicNumber>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && same_group(&self.group, &other.group)
    }
}

fn same_group(a: &Arc<FiniteGroupData>, b: &Arc<FiniteGroupData>) -> bool {
    Arc::ptr_eq(a, b)
        || (a.order() == b.order()
            && a.class_count() == b.class_count()
            && a.classes()
                .iter()
                .zip(b.classes())
                .all(|(x, y)| x.members == y.members))
}

impl Character {
    pub fn trivial(group: Arc<FiniteGroupData>) -> Self {
        let values = vec![CyclotomicNumber::one(); group.class_count()];
        Character { group, values }
    }

    pub fn zero(group: Arc<FiniteGroupData>) -> Self {
        let values = vec![CyclotomicNumber::zero(); group.class_count()];
        Character { group, values }
    }

    /// Dimension: the value at the identity class, which must be a
    /// nonnegative integer for genuine characters.
    pub fn dim(&self) -> Result<u64> {
        self.values[0]
            .as_integer()
            .and_then(|d| d.to_u64())
            .ok_or_else(|| Error::NotACharacter("identity value is not a nonnegative integer".into()))
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect();
        Ok(Character { group: self.group.clone(), values })
    }

    /// Pointwise product: the character of the tensor product.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.mul(b)).collect();
        Ok(Character { group: self.group.clone(), values })
    }

    /// Complex conjugate: the character of the dual representation.
    pub fn dual(&self) -> Self {
        Character {
            group: self.group.clone(),
            values: self.values.iter().map(CyclotomicNumber::conj).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::Mismatch("characters live over different groups".into()))
        }
    }
}

/// Exact inner product `<a, b> = (1/|G|) sum_g a(g) conj(b(g))`, which must be
/// a nonnegative integer for genuine characters.
pub fn inner_product(a: &Character, b: &Character) -> Result<u64> {
    a.check_same(b)?;
    let g = &a.group;
    let mut acc = CyclotomicNumber::zero();
    for (t, class) in g.classes().iter().enumerate() {
        let term = a.values[t].mul(&b.values[t].conj()).scale(&rat(class.members.len() as i64));
        acc = acc.add(&term);
    }
    let total = acc.scale(&Rational::new(1.into(), (g.order() as i64).into()));
    let value = total
        .as_integer()
        .ok_or_else(|| Error::NotACharacter(format!("inner product {} is not an integer", total)))?;
    if value.is_negative() {
        return Err(Error::NotACharacter(format!("inner product {value} is negative")));
    }
    Ok(value.to_u64().unwrap())
}

/// `dim Hom_H(a, b)` for genuine characters over the same group; equals the
/// sum over irreducibles of the product of multiplicities.
pub fn hom_dim(a: &Character, b: &Character) -> Result<u64> {
    inner_product(a, b)
}

/// Restriction of a character of `G` to a subgroup: the value on an `H`-class
/// is the value at the parent class of any representative.
pub fn restrict(chi: &Character, h: &Subgroup) -> Result<Character> {
    if !same_group(&chi.group, &h.parent) {
        return Err(Error::Mismatch("subgroup does not belong to the character's group".into()));
    }
    let values = h
        .class_to_parent_class
        .iter()
        .map(|&pc| chi.values[pc].clone())
        .collect();
    Ok(Character { group: h.group.clone(), values })
}

/// Dimension of the `H`-fixed subspace: `(1/|H|) sum_h chi(h)`, an exact
/// nonnegative integer (the multiplicity of the trivial `H`-character).
pub fn fixed_dim(chi: &Character, h: &Subgroup) -> Result<u64> {
    let res = restrict(chi, h)?;
    inner_product(&res, &Character::trivial(h.group.clone()))
}

/// Ordered character table with deterministic labels.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: Arc<FiniteGroupData>,
    pub irreducibles: Vec<Character>,
    pub labels: Vec<String>,
    pub dims: Vec<u64>,
    by_label: HashMap<String, usize>,
    /// Index of the trivial character.
    pub trivial_idx: usize,
    /// `dual_perm[i]` is the index of the dual of irreducible `i`.
    pub dual_perm: Vec<usize>,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.group.class_count()
    }

    pub fn index_of_label(&self, label: &str) -> Result<usize> {
        self.by_label
            .get(label)
            .copied()
            .ok_or_else(|| Error::Label(format!("`{label}` (known: {})", self.labels.join(", "))))
    }

    pub fn is_linear(&self, i: usize) -> bool {
        self.dims[i] == 1
    }

    /// Index of an irreducible equal to `chi`, if any.
    pub fn find_irreducible(&self, chi: &Character) -> Option<usize> {
        self.irreducibles.iter().position(|c| c.values == chi.values)
    }

    /// Character of a nonnegative combination of irreducibles.
    pub fn combine(&self, mults: &BTreeMap<usize, u64>) -> Character {
        let mut acc = Character::zero(self.group.clone());
        for (&i, &m) in mults {
            for v in 0..self.group.class_count() {
                let term = self.irreducibles[i].values[v].scale(&rat(m as i64));
                acc.values[v] = acc.values[v].add(&term);
            }
        }
        acc
    }

    fn validate(&self) -> Result<()> {
        let g = &self.group;
        let k = g.class_count();
        if self.irreducibles.len() != k {
            return Err(Error::Internal(format!(
                "{} irreducibles for {} classes",
                self.irreducibles.len(),
                k
            )));
        }
        let dim_sq: u64 = self.dims.iter().map(|d| d * d).sum();
        if dim_sq != g.order() as u64 {
            return Err(Error::Internal(format!("sum of dim^2 = {dim_sq} != |G| = {}", g.order())));
        }
        // row orthogonality
        for i in 0..k {
            for j in 0..k {
                let ip = {
                    let mut acc = CyclotomicNumber::zero();
                    for (t, class) in g.classes().iter().enumerate() {
                        let term = self.irreducibles[i].values[t]
                            .mul(&self.irreducibles[j].values[t].conj())
                            .scale(&rat(class.members.len() as i64));
                        acc = acc.add(&term);
                    }
                    acc.scale(&Rational::new(1.into(), (g.order() as i64).into()))
                };
                let expected = if i == j { CyclotomicNumber::one() } else { CyclotomicNumber::zero() };
                if ip != expected {
                    return Err(Error::Internal(format!("row orthogonality fails at ({i},{j})")));
                }
            }
        }
        // column orthogonality
        for s in 0..k {
            for t in 0..k {
                let mut acc = CyclotomicNumber::zero();
                for chi in &self.irreducibles {
                    acc = acc.add(&chi.values[s].mul(&chi.values[t].conj()));
                }
                let expected = if s == t {
                    CyclotomicNumber::from_integer(
                        (g.order() / g.classes()[s].members.len()) as i64,
                    )
                } else {
                    CyclotomicNumber::zero()
                };
                if acc != expected {
                    return Err(Error::Internal(format!("column orthogonality fails at ({s},{t})")));
                }
            }
        }
        Ok(())
    }

    fn from_rows(group: Arc<FiniteGroupData>, mut rows: Vec<Character>) -> Result<Self> {
        let trivial = Character::trivial(group.clone());
        // stable sort: dimension, trivial first, then lexicographic value tuple
        rows.sort_by(|a, b| {
            let da = a.values[0].clone();
            let db = b.values[0].clone();
            da.compare(&db)
                .then_with(|| (b.values == trivial.values).cmp(&(a.values == trivial.values)))
                .then_with(|| {
                    for (x, y) in a.values.iter().zip(&b.values) {
                        let c = x.compare(y);
                        if c != std::cmp::Ordering::Equal {
                            return c;
                        }
                    }
                    std::cmp::Ordering::Equal
                })
        });
        let dims: Result<Vec<u64>> = rows
            .iter()
            .map(|c| {
                c.values[0]
                    .as_integer()
                    .and_then(|d| d.to_u64())
                    .filter(|&d| d > 0)
                    .ok_or_else(|| Error::Internal("irreducible with nonpositive dimension".into()))
            })
            .collect();
        let dims = dims?;
        let labels = assign_labels(&rows, &dims, &trivial);
        let by_label = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let trivial_idx = rows
            .iter()
            .position(|c| c.values == trivial.values)
            .ok_or_else(|| Error::Internal("no trivial character".into()))?;
        let dual_perm: Result<Vec<usize>> = rows
            .iter()
            .map(|c| {
                let d = c.dual();
                rows.iter()
                    .position(|x| x.values == d.values)
                    .ok_or_else(|| Error::Internal("table not closed under duality".into()))
            })
            .collect();
        let table = CharacterTable {
            group,
            irreducibles: rows,
            labels,
            dims,
            by_label,
            trivial_idx,
            dual_perm: dual_perm?,
        };
        table.validate()?;
        Ok(table)
    }
}

/// Deterministic labels over the sorted rows: `triv`, `sign` (the unique
/// rational-valued nontrivial linear character, when unique), `lin1, lin2,
/// ...` for the remaining linear characters, `std` for the first
/// higher-dimensional irreducible, `irr1, irr2, ...` for the rest.
fn assign_labels(rows: &[Character], dims: &[u64], trivial: &Character) -> Vec<String> {
    let rational_linear: Vec<usize> = rows
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            dims[*i] == 1
                && c.values != trivial.values
                && c.values.iter().all(|v| v.as_rational().is_some())
        })
        .map(|(i, _)| i)
        .collect();
    let mut labels = vec![String::new(); rows.len()];
    let mut lin_counter = 0;
    let mut sgn_counter = 0;
    let mut irr_counter = 0;
    let mut std_taken = false;
    for (i, c) in rows.iter().enumerate() {
        labels[i] = if c.values == trivial.values {
            "triv".into()
        } else if dims[i] == 1 && rational_linear.contains(&i) {
            if rational_linear.len() == 1 {
                "sign".into()
            } else {
                sgn_counter += 1;
                format!("sgn{sgn_counter}")
            }
        } else if dims[i] == 1 {
            lin_counter += 1;
            format!("lin{lin_counter}")
        } else if !std_taken {
            std_taken = true;
            "std".into()
        } else {
            irr_counter += 1;
            format!("irr{irr_counter}")
        };
    }
    labels
}

/// Compute the exact character table of `g`.
///
/// Groups built as products of cyclic groups get the table of linear
/// characters directly; other groups go through the class-algebra eigenvector
/// method over `F_p`.
pub fn character_table(group: &Arc<FiniteGroupData>) -> Result<CharacterTable> {
    let rows = if let Some(orders) = group.abelian_orders.clone() {
        abelian_rows(group, &orders)
    } else {
        class_algebra_rows(group)?
    };
    CharacterTable::from_rows(group.clone(), rows)
}

fn abelian_rows(group: &Arc<FiniteGroupData>, orders: &[u64]) -> Vec<Character> {
    let n = group.order();
    let r = orders.len();
    let m = orders.iter().fold(1u64, |acc, &d| num_integer::lcm(acc, d));
    // element id <-> exponent tuple, in the same lexicographic order used by
    // the abelian constructor
    let tuple_of = |mut id: usize| -> Vec<u64> {
        let mut t = vec![0u64; r];
        for i in (0..r).rev() {
            t[i] = (id % orders[i] as usize) as u64;
            id /= orders[i] as usize;
        }
        t
    };
    let mut rows = Vec::with_capacity(n);
    for chi_id in 0..n {
        let k = tuple_of(chi_id);
        let mut values = vec![CyclotomicNumber::one(); group.class_count()];
        for elem in 0..n {
            let a = tuple_of(elem);
            let mut exp = 0u64;
            for i in 0..r {
                exp = (exp + (m / orders[i]) * ((k[i] * a[i]) % orders[i])) % m;
            }
            values[group.class_of(elem)] = CyclotomicNumber::root_of_unity(m, exp as i64);
        }
        rows.push(Character { group: group.clone(), values });
    }
    rows
}

fn integer_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Class-algebra method: simultaneous eigenvectors of the class-sum matrices
/// over `F_p`, then exact lift of the character values to cyclotomic numbers.
fn class_algebra_rows(group: &Arc<FiniteGroupData>) -> Result<Vec<Character>> {
    let n = group.order() as u64;
    let k = group.class_count();
    let m = group.exponent();
    let max_class = group.classes().iter().map(|c| c.members.len()).max().unwrap() as u64;
    // p = 1 (mod m), large enough that dimensions and multiplicities lift
    // uniquely from F_p
    let bound = (2 * (integer_sqrt(n) + 1) * max_class).max(n);
    let mut p = m + 1;
    while p <= bound || !is_prime(p) {
        p += m;
    }
    let f = Fp::new(p);
    // primitive m-th root of unity in F_p
    let mut z = 1;
    for gen in 2..p {
        let cand = f.pow(gen, (p - 1) / m);
        if cand != 1 && prime_factors(m).iter().all(|&q| f.pow(cand, m / q) != 1) {
            z = cand;
            break;
        }
    }
    if m == 1 {
        z = 1;
    }
    // class-sum matrices: entry [s][t] counts pairs (x in C_r, y in C_s) with
    // x*y equal to the fixed representative of C_t
    let class_matrix = |r: usize| -> modp::Matrix {
        let mut mat = vec![vec![0u64; k]; k];
        for t in 0..k {
            let zt = group.classes()[t].rep;
            for &x in &group.classes()[r].members {
                let y = group.mul(group.inv(x), zt);
                mat[group.class_of(y)][t] += 1;
            }
        }
        mat
    };
    // split the full space into joint eigenlines
    let mut subspaces: Vec<Vec<modp::Vector>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for r in 1..k {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mat = class_matrix(r);
        let mut next = Vec::new();
        for space in subspaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(modp::split_by_eigenspaces(f, &mat, &space));
            }
        }
        subspaces = next;
    }
    if subspaces.len() != k || subspaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Internal(
            "class matrices failed to separate central characters".into(),
        ));
    }
    let class_sizes: Vec<u64> =
        group.classes().iter().map(|c| c.members.len() as u64).collect();
    let inv_class: Vec<usize> = (0..k).map(|t| group.inverse_class(t)).collect();
    let mut rows = Vec::with_capacity(k);
    for space in subspaces {
        let raw = &space[0];
        if raw[0] == 0 {
            return Err(Error::Internal("central character vanishes at identity".into()));
        }
        // normalize so the identity coordinate is 1
        let scale = f.inv(raw[0]);
        let w: Vec<u64> = raw.iter().map(|&x| f.mul(x, scale)).collect();
        // |G| / dim^2 = sum_t w[t] w[t*] / |C_t|
        let mut s = 0u64;
        for t in 0..k {
            s = f.add(s, f.mul(f.mul(w[t], w[inv_class[t]]), f.inv(class_sizes[t])));
        }
        let target = f.mul(n % p, f.inv(s));
        let dim = (1..=integer_sqrt(n))
            .find(|&d| f.mul(d, d) == target)
            .ok_or_else(|| Error::Internal("irreducible dimension did not lift".into()))?;
        // character values mod p
        let theta: Vec<u64> =
            (0..k).map(|t| f.mul(f.mul(dim, w[t]), f.inv(class_sizes[t]))).collect();
        // lift each value as a multiset of roots of unity
        let mut values = vec![CyclotomicNumber::zero(); k];
        for t in 0..k {
            let x = group.classes()[t].rep;
            let ord = group.elem_order(x) as u64;
            let zk = f.pow(z, m / ord);
            let zk_inv = f.inv(zk);
            let mut value = CyclotomicNumber::zero();
            for e in 0..ord {
                // multiplicity of zeta_ord^e among the eigenvalues of rho(x)
                let mut mu = 0u64;
                for l in 0..ord {
                    let xl = group.power(x, l);
                    let term = f.mul(theta[group.class_of(xl)], f.pow(zk_inv, e * l));
                    mu = f.add(mu, term);
                }
                mu = f.mul(mu, f.inv(ord % p));
                if mu > dim {
                    return Err(Error::Internal("eigenvalue multiplicity did not lift".into()));
                }
                if mu > 0 {
                    let root = CyclotomicNumber::root_of_unity(ord, e as i64);
                    value = value.add(&root.scale(&rat(mu as i64)));
                }
            }
            values[t] = value;
        }
        rows.push(Character { group: group.clone(), values });
    }
    Ok(rows)
}

/// Decompose a class function against a table: multiplicities of each
/// irreducible, all exact nonnegative integers. Fails with
/// [`Error::NotACharacter`] when an inner product is non-integral or negative.
pub fn decompose(chi: &Character, table: &CharacterTable) -> Result<BTreeMap<usize, u64>> {
    let mut out = BTreeMap::new();
    for (i, irr) in table.irreducibles.iter().enumerate() {
        let m = inner_product(chi, irr)?;
        if m > 0 {
            out.insert(i, m);
        }
    }
    // exactness: the combination must reproduce chi
    let back = table.combine(&out);
    if back.values != chi.values {
        return Err(Error::NotACharacter(
            "class function is not a nonnegative combination of irreducibles".into(),
        ));
    }
    Ok(out)
}

/// An ordered sequence of irreducible summands; the order is significant data
/// (the wedge decompositions depend on it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSequence {
    /// Indices into the table's irreducibles, with repetition, in order.
    pub blocks: Vec<usize>,
}

impl RepSequence {
    pub fn from_labels(table: &CharacterTable, labels: &[&str]) -> Result<Self> {
        let blocks: Result<Vec<usize>> =
            labels.iter().map(|l| table.index_of_label(l)).collect();
        Ok(RepSequence { blocks: blocks? })
    }

    pub fn labels(&self, table: &CharacterTable) -> Vec<String> {
        self.blocks.iter().map(|&b| table.labels[b].clone()).collect()
    }

    pub fn dim(&self, table: &CharacterTable) -> u64 {
        self.blocks.iter().map(|&b| table.dims[b]).sum()
    }

    pub fn character(&self, table: &CharacterTable) -> Character {
        let mut mults = BTreeMap::new();
        for &b in &self.blocks {
            *mults.entry(b).or_insert(0) += 1;
        }
        table.combine(&mults)
    }

    pub fn is_all_linear(&self, table: &CharacterTable) -> bool {
        self.blocks.iter().all(|&b| table.is_linear(b))
    }
}

/// Isotypic data of a restriction: multiplicities over the subgroup's
/// irreducibles, split into the one-dimensional part and the rest.
#[derive(Clone, Debug)]
pub struct HIsotypic {
    /// `mults[i]` is the multiplicity of the `i`-th `H`-irreducible.
    pub mults: Vec<u64>,
    /// `(h_irrep index, multiplicity)` for linear `H`-irreducibles.
    pub linear: Vec<(usize, u64)>,
    /// Same for irreducibles of dimension greater than one.
    pub higher: Vec<(usize, u64)>,
}

/// Everything the splitting and fixed-point machinery needs about one
/// subgroup class: the subgroup, its own character table, and the restriction
/// multiplicities of every parent irreducible.
#[derive(Clone, Debug)]
pub struct SubgroupContext {
    pub subgroup: Subgroup,
    pub table: CharacterTable,
    /// `rest[g_irrep][h_irrep]` = multiplicity of the `H`-irreducible in the
    /// restriction of the `G`-irreducible.
    pub rest: Vec<Vec<u64>>,
}

impl SubgroupContext {
    pub fn label(&self) -> &str {
        &self.subgroup.label
    }

    pub fn h_irrep_count(&self) -> usize {
        self.table.irreducibles.len()
    }

    /// Restriction multiplicity vector of a multiset of `G`-irreducibles.
    pub fn restrict_multiset(&self, mults: &BTreeMap<usize, u64>) -> Vec<u64> {
        let mut out = vec![0u64; self.h_irrep_count()];
        for (&g_irr, &m) in mults {
            for (i, &r) in self.rest[g_irr].iter().enumerate() {
                out[i] += m * r;
            }
        }
        out
    }

    /// `dim Hom_H` between two genuine `H`-characters given as multiplicity
    /// vectors.
    pub fn hom(&self, a: &[u64], b: &[u64]) -> u64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    /// Fixed dimension of an `H`-character given as a multiplicity vector.
    pub fn fixed_dim_vec(&self, a: &[u64]) -> u64 {
        a[self.table.trivial_idx]
    }

    /// Dual multiplicity vector (conjugate representation).
    pub fn dual_vec(&self, a: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; a.len()];
        for (i, &m) in a.iter().enumerate() {
            out[self.table.dual_perm[i]] += m;
        }
        out
    }

    /// Total dimension of a multiplicity vector.
    pub fn dim_vec(&self, a: &[u64]) -> u64 {
        a.iter().zip(&self.table.dims).map(|(m, d)| m * d).sum()
    }
}

/// A group together with its character table and per-subgroup restriction
/// data, computed once and shared immutably.
#[derive(Debug)]
pub struct GroupContext {
    pub group: Arc<FiniteGroupData>,
    pub table: CharacterTable,
    pub subgroups: Vec<SubgroupContext>,
}

impl GroupContext {
    pub fn new(group: Arc<FiniteGroupData>) -> Result<Self> {
        let table = character_table(&group)?;
        let subs = subgroups_up_to_conjugacy(&group)?;
        let mut subgroups = Vec::with_capacity(subs.len());
        for subgroup in subs {
            let h_table = character_table(&subgroup.group)?;
            let mut rest = Vec::with_capacity(table.irreducibles.len());
            for irr in &table.irreducibles {
                let restricted = restrict(irr, &subgroup)?;
                let mults = decompose(&restricted, &h_table)?;
                let mut row = vec![0u64; h_table.irreducibles.len()];
                for (i, m) in mults {
                    row[i] = m;
                }
                rest.push(row);
            }
            subgroups.push(SubgroupContext { subgroup, table: h_table, rest });
        }
        Ok(GroupContext { group, table, subgroups })
    }

    pub fn subgroup_by_label(&self, label: &str) -> Option<&SubgroupContext> {
        self.subgroups.iter().find(|s| s.label() == label)
    }

    /// Isotypic decomposition of the restriction of a character.
    pub fn isotypic(&self, chi: &Character, sub: &SubgroupContext) -> Result<HIsotypic> {
        let restricted = restrict(chi, &sub.subgroup)?;
        let map = decompose(&restricted, &sub.table)?;
        let mut mults = vec![0u64; sub.h_irrep_count()];
        for (i, m) in map {
            mults[i] = m;
        }
        let linear = mults
            .iter()
            .enumerate()
            .filter(|(i, m)| **m > 0 && sub.table.dims[*i] == 1)
            .map(|(i, m)| (i, *m))
            .collect();
        let higher = mults
            .iter()
            .enumerate()
            .filter(|(i, m)| **m > 0 && sub.table.dims[*i] > 1)
            .map(|(i, m)| (i, *m))
            .collect();
        Ok(HIsotypic { mults, linear, higher })
    }

    /// Index of the irreducible `psi (x) dual(phi)` for a linear `phi`
    /// (twisting by a linear character permutes the irreducibles).
    pub fn twist_by_linear_dual(&self, psi: usize, phi: usize) -> Result<usize> {
        debug_assert!(self.table.is_linear(phi));
        let twisted = self.table.irreducibles[psi]
            .tensor(&self.table.irreducibles[phi].dual())?;
        self.table
            .find_irreducible(&twisted)
            .ok_or_else(|| Error::Internal("linear twist left the irreducible list".into()))
    }
}

/// Character-table JSON: `{"classes":[sizes],"irreducibles":[{"label":...,
/// "values":["a0+a1*z^1+...@N", ...]}]}`.
pub fn table_to_json(table: &CharacterTable) -> serde_json::Value {
    let classes: Vec<usize> =
        table.group.classes().iter().map(|c| c.members.len()).collect();
    let class_reps: Vec<String> = table
        .group
        .classes()
        .iter()
        .map(|c| table.group.elem_name(c.rep).to_string())
        .collect();
    let irreducibles: Vec<serde_json::Value> = table
        .irreducibles
        .iter()
        .zip(&table.labels)
        .map(|(chi, label)| {
            serde_json::json!({
                "label": label,
                "values": chi.values.iter().map(|v| v.encode()).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({
        "group": table.group.name,
        "order": table.group.order(),
        "classes": classes,
        "class_reps": class_reps,
        "irreducibles": irreducibles,
    })
}

/// Parse and validate a user-supplied character table for `group`. The table
/// must pass both orthogonality relations exactly.
pub fn table_from_json(
    group: &Arc<FiniteGroupData>,
    value: &serde_json::Value,
) -> Result<CharacterTable> {
    let irr = value
        .get("irreducibles")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Parse("missing `irreducibles` array".into()))?;
    if let Some(classes) = value.get("classes").and_then(|v| v.as_array()) {
        let sizes: Vec<usize> =
            group.classes().iter().map(|c| c.members.len()).collect();
        let given: Vec<usize> =
            classes.iter().filter_map(|v| v.as_u64().map(|x| x as usize)).collect();
        if given != sizes {
            return Err(Error::Parse(format!(
                "class sizes {given:?} do not match the group's {sizes:?}"
            )));
        }
    }
    let mut rows = Vec::with_capacity(irr.len());
    for entry in irr {
        let values = entry
            .get("values")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("irreducible without `values`".into()))?;
        if values.len() != group.class_count() {
            return Err(Error::Parse("value count does not match class count".into()));
        }
        let parsed: Result<Vec<CyclotomicNumber>> = values
            .iter()
            .map(|v| {
                v.as_str()
                    .ok_or_else(|| Error::Parse("value is not a string".into()))
                    .and_then(CyclotomicNumber::decode)
            })
            .collect();
        rows.push(Character { group: group.clone(), values: parsed? });
    }
    CharacterTable::from_rows(group.clone(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, GroupSpec};

    fn ctx(name: &str) -> GroupContext {
        let g = build_group(&GroupSpec::Builtin { name: name.into() }).unwrap();
        GroupContext::new(g).unwrap()
    }

    fn zeta(n: u64, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(n, k)
    }

    #[test]
    fn c2_table_is_forced_by_orthogonality() {
        let t = ctx("C2").table;
        assert_eq!(t.labels, vec!["triv", "sign"]);
        assert_eq!(t.irreducibles[0].values, vec![zeta(1, 0), zeta(1, 0)]);
        assert_eq!(
            t.irreducibles[1].values,
            vec![CyclotomicNumber::one(), CyclotomicNumber::from_integer(-1)]
        );
    }

    #[test]
    fn c3_table_has_the_linear_characters() {
        let t = ctx("C3").table;
        assert_eq!(t.dims, vec![1, 1, 1]);
        let rows: Vec<Vec<CyclotomicNumber>> =
            t.irreducibles.iter().map(|c| c.values.clone()).collect();
        let expected_a = vec![CyclotomicNumber::one(), zeta(3, 1), zeta(3, 2)];
        let expected_b = vec![CyclotomicNumber::one(), zeta(3, 2), zeta(3, 1)];
        assert!(rows.contains(&expected_a));
        assert!(rows.contains(&expected_b));
        assert_eq!(t.labels[t.trivial_idx], "triv");
    }

    #[test]
    fn s3_table_degrees_and_standard_character() {
        let c = ctx("S3");
        let t = &c.table;
        assert_eq!(t.dims, vec![1, 1, 2]);
        assert_eq!(t.labels, vec!["triv", "sign", "std"]);
        // classes ordered: e, transpositions (order 2), 3-cycles (order 3)
        let std = &t.irreducibles[2];
        assert_eq!(std.values[0], CyclotomicNumber::from_integer(2));
        assert_eq!(std.values[1], CyclotomicNumber::zero());
        assert_eq!(std.values[2], CyclotomicNumber::from_integer(-1));
    }

    #[test]
    fn tables_of_builtins_validate_exactly() {
        for name in ["C1", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "A4", "S4", "D6"] {
            let c = ctx(name);
            let order: u64 = c.table.dims.iter().map(|d| d * d).sum();
            assert_eq!(order, c.group.order() as u64, "{name}");
        }
    }

    #[test]
    fn decompose_regular_and_permutation_characters() {
        let c = ctx("C2");
        // regular character of C2: (2, 0)
        let mut reg = Character::zero(c.group.clone());
        reg.values[0] = CyclotomicNumber::from_integer(2);
        let m = decompose(&reg, &c.table).unwrap();
        assert_eq!(m, BTreeMap::from([(0, 1), (1, 1)]));

        let s3 = ctx("S3");
        // permutation character of S3 on 3 points: (3, 1, 0)
        let mut perm = Character::zero(s3.group.clone());
        perm.values[0] = CyclotomicNumber::from_integer(3);
        perm.values[1] = CyclotomicNumber::one();
        let m = decompose(&perm, &s3.table).unwrap();
        let triv = s3.table.index_of_label("triv").unwrap();
        let std = s3.table.index_of_label("std").unwrap();
        assert_eq!(m, BTreeMap::from([(triv, 1), (std, 1)]));

        // zero character decomposes to the empty map
        let zero = Character::zero(s3.group.clone());
        assert!(decompose(&zero, &s3.table).unwrap().is_empty());

        // a non-character is rejected
        let mut bad = Character::zero(s3.group.clone());
        bad.values[1] = CyclotomicNumber::one();
        assert!(matches!(decompose(&bad, &s3.table), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn tensor_dual_and_twist() {
        let s3 = ctx("S3");
        let t = &s3.table;
        let sign = &t.irreducibles[t.index_of_label("sign").unwrap()];
        let std = &t.irreducibles[t.index_of_label("std").unwrap()];
        // sign (x) sign = triv
        let sq = sign.tensor(sign).unwrap();
        assert_eq!(t.find_irreducible(&sq), Some(t.trivial_idx));
        // std is self-dual (real values)
        assert_eq!(std.dual(), std.clone());
        // std (x) sign = std
        let tw = std.tensor(sign).unwrap();
        assert_eq!(t.find_irreducible(&tw), t.index_of_label("std").ok());
    }

    #[test]
    fn restriction_examples() {
        let s3 = ctx("S3");
        let t = &s3.table;
        let std_idx = t.index_of_label("std").unwrap();
        let std = &t.irreducibles[std_idx];

        let c3 = s3.subgroup_by_label("C3").unwrap();
        let restricted = restrict(std, &c3.subgroup).unwrap();
        // (2, -1, -1): the two nontrivial linear characters of C3
        assert_eq!(restricted.values[0], CyclotomicNumber::from_integer(2));
        let m = decompose(&restricted, &c3.table).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.values().all(|&v| v == 1));
        assert!(!m.contains_key(&c3.table.trivial_idx));

        let c2 = s3.subgroup_by_label("C2").unwrap();
        let m = decompose(&restrict(std, &c2.subgroup).unwrap(), &c2.table).unwrap();
        let triv = c2.table.index_of_label("triv").unwrap();
        let sign = c2.table.index_of_label("sign").unwrap();
        assert_eq!(m, BTreeMap::from([(triv, 1), (sign, 1)]));

        // restriction to the trivial subgroup is the dimension constant
        let e = s3.subgroup_by_label("e").unwrap();
        let m = decompose(&restrict(std, &e.subgroup).unwrap(), &e.table).unwrap();
        assert_eq!(m, BTreeMap::from([(0, 2)]));
    }

    #[test]
    fn fixed_dims() {
        let c2 = ctx("C2");
        let sign = &c2.table.irreducibles[c2.table.index_of_label("sign").unwrap()];
        let whole = c2.subgroup_by_label("C2").unwrap();
        assert_eq!(fixed_dim(sign, &whole.subgroup).unwrap(), 0);

        let s3 = ctx("S3");
        let std = &s3.table.irreducibles[s3.table.index_of_label("std").unwrap()];
        let c2sub = s3.subgroup_by_label("C2").unwrap();
        assert_eq!(fixed_dim(std, &c2sub.subgroup).unwrap(), 1);
        let e = s3.subgroup_by_label("e").unwrap();
        assert_eq!(fixed_dim(std, &e.subgroup).unwrap(), 2);
    }

    #[test]
    fn isotypic_partition() {
        let s3 = ctx("S3");
        let std = s3.table.irreducibles[s3.table.index_of_label("std").unwrap()].clone();
        let c3 = s3.subgroup_by_label("C3").unwrap();
        let iso = s3.isotypic(&std, c3).unwrap();
        assert_eq!(iso.linear.len(), 2);
        assert!(iso.higher.is_empty());

        let whole = s3.subgroup_by_label("S3").unwrap();
        let iso = s3.isotypic(&std, whole).unwrap();
        assert!(iso.linear.is_empty());
        assert_eq!(iso.higher, vec![(whole.table.index_of_label("std").unwrap(), 1)]);
    }

    #[test]
    fn hom_dims() {
        let c2 = ctx("C2");
        let triv = Character::trivial(c2.group.clone());
        assert_eq!(hom_dim(&triv, &triv).unwrap(), 1);

        let s3 = ctx("S3");
        let std = &s3.table.irreducibles[s3.table.index_of_label("std").unwrap()];
        assert_eq!(hom_dim(std, std).unwrap(), 1);

        let c3 = ctx("C3");
        let chi = &c3.table.irreducibles[1];
        let chibar = &c3.table.irreducibles[2];
        let sum = chi.add(chibar).unwrap();
        assert_eq!(hom_dim(&sum, chi).unwrap(), 1);
    }

    #[test]
    fn decompose_round_trips_on_random_multiplicities() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for name in ["S3", "D4", "Q8", "A4", "C6"] {
            let c = ctx(name);
            for _ in 0..20 {
                let mut mults = BTreeMap::new();
                for i in 0..c.table.irreducibles.len() {
                    let m = rng.gen_range(0..=4u64);
                    if m > 0 {
                        mults.insert(i, m);
                    }
                }
                let chi = c.table.combine(&mults);
                assert_eq!(decompose(&chi, &c.table).unwrap(), mults, "{name}");
            }
        }
    }

    #[test]
    fn fixed_dim_matches_isotypic_multiplicity_of_linear_twists() {
        // dim (chi (x) dual(phi))^H equals the multiplicity of phi in the
        // restriction, for every linear H-character phi
        for name in ["S3", "D4", "A4"] {
            let c = ctx(name);
            for chi in &c.table.irreducibles {
                for sub in &c.subgroups {
                    let iso = c.isotypic(chi, sub).unwrap();
                    for (h_idx, needed) in
                        sub.table.dims.iter().enumerate().filter(|(_, d)| **d == 1)
                    {
                        let _ = needed;
                        let phi = &sub.table.irreducibles[h_idx];
                        let twisted =
                            restrict(chi, &sub.subgroup).unwrap().tensor(&phi.dual()).unwrap();
                        let fd = inner_product(
                            &twisted,
                            &Character::trivial(sub.subgroup.group.clone()),
                        )
                        .unwrap();
                        assert_eq!(fd, iso.mults[h_idx], "{name}/{}", sub.label());
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_preserves_dimension() {
        for name in ["S3", "D4", "Q8", "A4", "C6", "S4"] {
            let c = ctx(name);
            for chi in &c.table.irreducibles {
                for sub in &c.subgroups {
                    let iso = c.isotypic(chi, sub).unwrap();
                    let total: u64 = iso
                        .mults
                        .iter()
                        .zip(&sub.table.dims)
                        .map(|(m, d)| m * d)
                        .sum();
                    assert_eq!(total, chi.dim().unwrap(), "{name}/{}", sub.label());
                }
            }
        }
    }

    #[test]
    fn table_json_round_trip_and_validation() {
        let c = ctx("S3");
        let json = table_to_json(&c.table);
        let back = table_from_json(&c.group, &json).unwrap();
        assert_eq!(back.labels, c.table.labels);
        for (a, b) in back.irreducibles.iter().zip(&c.table.irreducibles) {
            assert_eq!(a.values, b.values);
        }
        // corrupt a value: orthogonality must fail
        let mut bad = json.clone();
        bad["irreducibles"][2]["values"][1] = serde_json::json!("1@1");
        assert!(table_from_json(&c.group, &bad).is_err());
    }

    #[test]
    fn abelian_and_class_algebra_paths_agree() {
        // build C6 both as an abelian product and as a permutation group
        let via_abelian = ctx("C6").table;
        let perm = build_group(&GroupSpec::Perm {
            degree: 5,
            generators: vec![vec![2, 3, 1, 5, 4]],
        })
        .unwrap();
        assert_eq!(perm.order(), 6);
        let via_dixon = character_table(&perm).unwrap();
        assert_eq!(via_abelian.dims, via_dixon.dims);
        // the two presentations are isomorphic, so each character's value
        // multiset is preserved even though class numbering may differ
        let tuples = |t: &CharacterTable| -> Vec<Vec<String>> {
            t.irreducibles
                .iter()
                .map(|c| {
                    let mut row: Vec<String> = c.values.iter().map(|v| v.encode()).collect();
                    row.sort();
                    row
                })
                .collect()
        };
        let mut a = tuples(&via_abelian);
        let mut b = tuples(&via_dixon);
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}

