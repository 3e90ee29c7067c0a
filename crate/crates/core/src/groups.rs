//! Concrete finite groups at desk scale (`|G| <= 96`): multiplication tables,
//! conjugacy classes, and the subgroup lattice up to conjugacy.
//!
//! Groups are built from one of four specs: a list of cyclic orders (products
//! of cyclic groups), permutation generators on at most 12 points, an explicit
//! multiplication table, or a builtin name. Element ids are canonical
//! (lexicographic on permutation images or abelian tuples) so all downstream
//! output is reproducible. Group data is immutable after construction and
//! freely shareable across threads.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard bound on group order; everything here is exhaustive search.
pub const MAX_ORDER: usize = 96;

const MAX_PERM_DEGREE: usize = 12;

/// A conjugacy class: member element ids with a chosen representative
/// (the smallest id).
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// A finite group as a complete multiplication table with conjugacy data.
#[derive(Debug)]
pub struct FiniteGroupData {
    pub name: String,
    elem_names: Vec<String>,
    mult: Vec<Vec<u16>>,
    inverse: Vec<u16>,
    orders: Vec<u32>,
    identity: usize,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
    /// Cyclic factor orders when the group was constructed as a product of
    /// cyclic groups; enables the direct linear-character table.
    pub(crate) abelian_orders: Option<Vec<u64>>,
}

impl FiniteGroupData {
    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Order of the element `a`.
    pub fn elem_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn elem_name(&self, a: usize) -> &str {
        &self.elem_names[a]
    }

    /// `a^k` for `k >= 0`.
    pub fn power(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Class index of the inverses of class `c` (well defined).
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of(self.inv(self.classes[c].rep))
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        let mut m = 1u64;
        for &o in &self.orders {
            m = num_integer::lcm(m, o as u64);
        }
        m
    }

    fn from_table(
        name: String,
        elem_names: Vec<String>,
        mult: Vec<Vec<u16>>,
        abelian_orders: Option<Vec<u64>>,
    ) -> Result<Self> {
        let n = mult.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Group(format!("order {n} outside 1..={MAX_ORDER}")));
        }
        for row in &mult {
            if row.len() != n || row.iter().any(|&x| x as usize >= n) {
                return Err(Error::Group("malformed multiplication table".into()));
            }
        }
        // identity
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult[e][a] as usize == a && mult[a][e] as usize == a))
            .ok_or_else(|| Error::Group("no identity element".into()))?;
        // associativity (n <= 96, so the cubic check is cheap)
        for a in 0..n {
            for b in 0..n {
                let ab = mult[a][b] as usize;
                for c in 0..n {
                    if mult[ab][c] != mult[a][mult[b][c] as usize] {
                        return Err(Error::Group(format!(
                            "table is not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        // inverses
        let mut inverse = vec![0u16; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mult[a][b] as usize == identity)
                .ok_or_else(|| Error::Group(format!("element {a} has no inverse")))?;
            if mult[inv][a] as usize != identity {
                return Err(Error::Group(format!("one-sided inverse at {a}")));
            }
            inverse[a] = inv as u16;
        }
        // element orders
        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != identity {
                x = mult[x][a] as usize;
                k += 1;
            }
            orders[a] = k;
        }
        // conjugacy classes by orbit of conjugation
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<ConjClass> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..n {
                let conj = mult[mult[g][a] as usize][inverse[g] as usize] as usize;
                if class_of[conj] == usize::MAX {
                    class_of[conj] = usize::MAX - 1; // mark
                    members.push(conj);
                }
            }
            members.sort_unstable();
            let idx = classes.len();
            for &m in &members {
                class_of[m] = idx;
            }
            classes.push(ConjClass { rep: members[0], members });
        }
        // deterministic class order: identity first, then by (element order, rep id)
        classes.sort_by_key(|c| (orders[c.rep], c.rep));
        for (i, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = i;
            }
        }
        debug_assert_eq!(classes[0].rep, identity);
        Ok(FiniteGroupData {
            name,
            elem_names,
            mult,
            inverse,
            orders,
            identity,
            classes,
            class_of,
            abelian_orders,
        })
    }
}

/// Input format for [`build_group`].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupSpec {
    /// Product of cyclic groups `C_{d1} x ... x C_{dr}`.
    Abelian { orders: Vec<u64> },
    /// Subgroup of `S_degree` generated by permutations given as 1-based
    /// image lists.
    Perm { degree: usize, generators: Vec<Vec<usize>> },
    /// Explicit multiplication table over named elements; `mult[i][j]` is the
    /// index of `elements[i] * elements[j]`.
    Table { elements: Vec<String>, mult: Vec<Vec<u16>> },
    /// Named constructor: `C{n}`, `C2xC3x...`, `D{n}` (dihedral, order 2n,
    /// n <= 12), `Q8`, `S3`, `S4`, `A4`, `trivial`.
    Builtin { name: String },
}

/// Build a validated group from a spec. Conjugacy classes are computed by the
/// orbit of conjugation; resulting order must not exceed [`MAX_ORDER`].
pub fn build_group(spec: &GroupSpec) -> Result<Arc<FiniteGroupData>> {
    match spec {
        GroupSpec::Abelian { orders } => build_abelian(orders, None),
        GroupSpec::Perm { degree, generators } => {
            build_perm(*degree, generators, format!("Perm({degree})"))
        }
        GroupSpec::Table { elements, mult } => Ok(Arc::new(FiniteGroupData::from_table(
            "Table".into(),
            elements.clone(),
            mult.clone(),
            None,
        )?)),
        GroupSpec::Builtin { name } => build_builtin(name),
    }
}

fn build_abelian(orders: &[u64], name: Option<String>) -> Result<Arc<FiniteGroupData>> {
    if orders.iter().any(|&d| d == 0) {
        return Err(Error::Group("zero cyclic order".into()));
    }
    let orders: Vec<u64> = orders.iter().copied().filter(|&d| d > 1).collect();
    let n: u64 = orders.iter().product();
    if n as usize > MAX_ORDER {
        return Err(Error::Group(format!("abelian order {n} exceeds {MAX_ORDER}")));
    }
    let n = n as usize;
    let r = orders.len();
    // elements are tuples in lexicographic order
    let mut tuples: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = vec![0u64; r];
    loop {
        tuples.push(cur.clone());
        let mut i = r;
        loop {
            if i == 0 {
                cur.clear();
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < orders[i] {
                break;
            }
            cur[i] = 0;
            if i == 0 {
                cur.clear();
                break;
            }
        }
        if cur.is_empty() {
            break;
        }
    }
    debug_assert_eq!(tuples.len(), n.max(1));
    let index: HashMap<Vec<u64>, usize> =
        tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let count = tuples.len();
    let mut mult = vec![vec![0u16; count]; count];
    for (i, a) in tuples.iter().enumerate() {
        for (j, b) in tuples.iter().enumerate() {
            let sum: Vec<u64> =
                a.iter().zip(b).zip(&orders).map(|((x, y), d)| (x + y) % d).collect();
            mult[i][j] = index[&sum] as u16;
        }
    }
    let elem_names = tuples
        .iter()
        .map(|t| {
            if r == 1 {
                format!("g^{}", t[0])
            } else {
                format!("({})", t.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            }
        })
        .collect();
    let name = name.unwrap_or_else(|| {
        if orders.is_empty() {
            "C1".to_string()
        } else {
            orders.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x")
        }
    });
    Ok(Arc::new(FiniteGroupData::from_table(name, elem_names, mult, Some(orders))?))
}

fn perm_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a * b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn build_perm(
    degree: usize,
    generators: &[Vec<usize>],
    name: String,
) -> Result<Arc<FiniteGroupData>> {
    if degree == 0 || degree > MAX_PERM_DEGREE {
        return Err(Error::Group(format!(
            "permutation degree {degree} outside 1..={MAX_PERM_DEGREE}"
        )));
    }
    let mut gens: Vec<Vec<usize>> = Vec::new();
    for g in generators {
        if g.len() != degree {
            return Err(Error::Group(format!("generator {g:?} has wrong length")));
        }
        let zero: Vec<usize> = g.iter().map(|&x| x.wrapping_sub(1)).collect();
        let mut seen = vec![false; degree];
        for &x in &zero {
            if x >= degree || seen[x] {
                return Err(Error::Group(format!("generator {g:?} is not a permutation")));
            }
            seen[x] = true;
        }
        gens.push(zero);
    }
    // breadth-first closure under composition
    let identity: Vec<usize> = (0..degree).collect();
    let mut elems: HashSet<Vec<usize>> = HashSet::new();
    elems.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for g in &gens {
            let q = perm_mul(g, &p);
            if elems.insert(q.clone()) {
                if elems.len() > MAX_ORDER {
                    return Err(Error::Group(format!("generated group exceeds order {MAX_ORDER}")));
                }
                frontier.push(q);
            }
        }
    }
    let mut sorted: Vec<Vec<usize>> = elems.into_iter().collect();
    sorted.sort();
    let index: HashMap<Vec<usize>, usize> =
        sorted.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let n = sorted.len();
    let mut mult = vec![vec![0u16; n]; n];
    for (i, a) in sorted.iter().enumerate() {
        for (j, b) in sorted.iter().enumerate() {
            mult[i][j] = index[&perm_mul(a, b)] as u16;
        }
    }
    let elem_names = sorted.iter().map(|p| cycle_notation(p)).collect();
    Ok(Arc::new(FiniteGroupData::from_table(name, elem_names, mult, None)?))
}

fn build_builtin(name: &str) -> Result<Arc<FiniteGroupData>> {
    let canonical = name.trim();
    if canonical.eq_ignore_ascii_case("trivial") || canonical == "C1" {
        return build_abelian(&[], Some("C1".into()));
    }
    if canonical.starts_with('C') && canonical.chars().skip(1).all(|c| c.is_ascii_digit() || c == 'x' || c == 'C') {
        let orders: Result<Vec<u64>> = canonical
            .split('x')
            .map(|part| {
                part.strip_prefix('C')
                    .and_then(|d| d.parse::<u64>().ok())
                    .ok_or_else(|| Error::Group(format!("bad cyclic factor in `{canonical}`")))
            })
            .collect();
        return build_abelian(&orders?, Some(canonical.into()));
    }
    if let Some(rest) = canonical.strip_prefix('D') {
        if let Ok(n) = rest.parse::<usize>() {
            if !(2..=12).contains(&n) {
                return Err(Error::Group(format!("dihedral D{n}: n must be in 2..=12")));
            }
            // rotation (1 2 ... n) and a reflection
            let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n + 1).collect();
            let refl: Vec<usize> = (0..n).map(|i| (n - i) % n + 1).collect();
            return build_perm(n, &[rot, refl], format!("D{n}"));
        }
    }
    match canonical {
        "S3" => build_perm(3, &[vec![2, 1, 3], vec![2, 3, 1]], "S3".into()),
        "S4" => build_perm(4, &[vec![2, 1, 3, 4], vec![2, 3, 4, 1]], "S4".into()),
        "A4" => build_perm(4, &[vec![2, 3, 1, 4], vec![2, 1, 4, 3]], "A4".into()),
        "Q8" => {
            // elements 1, -1, i, -i, j, -j, k, -k
            let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
            let idx = |s: &str| names.iter().position(|n| *n == s).unwrap() as u16;
            let quat = |a: &str, b: &str| -> String {
                let (sa, ua) = if let Some(u) = a.strip_prefix('-') { (-1, u) } else { (1, a) };
                let (sb, ub) = if let Some(u) = b.strip_prefix('-') { (-1, u) } else { (1, b) };
                let (sign, unit) = match (ua, ub) {
                    ("1", u) | (u, "1") => (1, u.to_string()),
                    ("i", "i") | ("j", "j") | ("k", "k") => (-1, "1".to_string()),
                    ("i", "j") => (1, "k".into()),
                    ("j", "i") => (-1, "k".into()),
                    ("j", "k") => (1, "i".into()),
                    ("k", "j") => (-1, "i".into()),
                    ("k", "i") => (1, "j".into()),
                    ("i", "k") => (-1, "j".into()),
                    _ => unreachable!(),
                };
                let total = sa * sb * sign;
                if total < 0 {
                    format!("-{unit}")
                } else {
                    unit
                }
            };
            let mut mult = vec![vec![0u16; 8]; 8];
            for (i, a) in names.iter().enumerate() {
                for (j, b) in names.iter().enumerate() {
                    mult[i][j] = idx(&quat(a, b));
                }
            }
            Ok(Arc::new(FiniteGroupData::from_table(
                "Q8".into(),
                names.iter().map(|s| s.to_string()).collect(),
                mult,
                None,
            )?))
        }
        other => Err(Error::Group(format!("unknown builtin group `{other}`"))),
    }
}

/// A subgroup of a parent group, carried both as member ids in the parent and
/// as a standalone group in its own right (for its own character table).
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub parent: Arc<FiniteGroupData>,
    /// Sorted parent element ids.
    pub members: Vec<usize>,
    /// The induced group; element `i` is `members[i]`.
    pub group: Arc<FiniteGroupData>,
    /// For each conjugacy class of the induced group, the parent class
    /// containing its elements.
    pub class_to_parent_class: Vec<usize>,
    pub label: String,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_whole_group(&self) -> bool {
        self.members.len() == self.parent.order()
    }
}

fn closure_mask(g: &FiniteGroupData, seed: u128) -> u128 {
    let mut mask = seed | (1u128 << g.identity());
    loop {
        let mut next = mask;
        let members: Vec<usize> = (0..g.order()).filter(|&i| mask >> i & 1 == 1).collect();
        for &a in &members {
            for &b in &members {
                next |= 1u128 << g.mul(a, b);
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

fn conjugate_mask(g: &FiniteGroupData, mask: u128, by: usize) -> u128 {
    let mut out = 0u128;
    for i in 0..g.order() {
        if mask >> i & 1 == 1 {
            out |= 1u128 << g.mul(g.mul(by, i), g.inv(by));
        }
    }
    out
}

/// Enumerate all subgroups of `g` (as element bitmasks), exhaustively.
///
/// Breadth-first closure of subgroups generated by at most two elements, then
/// saturation by adjoining one generator at a time until no new subgroups
/// appear. Every subgroup has a one-generator-at-a-time chain, so this
/// reaches everything.
pub(crate) fn all_subgroup_masks(g: &FiniteGroupData) -> Vec<u128> {
    let n = g.order();
    let mut known: HashSet<u128> = HashSet::new();
    known.insert(closure_mask(g, 0));
    for a in 0..n {
        for b in a..n {
            known.insert(closure_mask(g, 1u128 << a | 1u128 << b));
        }
    }
    loop {
        let mut fresh: Vec<u128> = Vec::new();
        for &mask in &known {
            for x in 0..n {
                if mask >> x & 1 == 0 {
                    let bigger = closure_mask(g, mask | 1u128 << x);
                    if !known.contains(&bigger) && !fresh.contains(&bigger) {
                        fresh.push(bigger);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        known.extend(fresh);
    }
    let mut out: Vec<u128> = known.into_iter().collect();
    out.sort_by_key(|m| (m.count_ones(), *m));
    out
}

fn induced_group(
    parent: &Arc<FiniteGroupData>,
    members: &[usize],
    label: &str,
) -> Result<Arc<FiniteGroupData>> {
    let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let k = members.len();
    let mut mult = vec![vec![0u16; k]; k];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            mult[i][j] = pos[&parent.mul(a, b)] as u16;
        }
    }
    let names = members.iter().map(|&m| parent.elem_name(m).to_string()).collect();
    Ok(Arc::new(FiniteGroupData::from_table(label.to_string(), names, mult, None)?))
}

fn subgroup_type_label(parent: &FiniteGroupData, h: &FiniteGroupData) -> String {
    if h.order() == 1 {
        return "e".into();
    }
    if h.order() == parent.order() {
        return parent.name.clone();
    }
    let cyclic = (0..h.order()).any(|a| h.elem_order(a) as usize == h.order());
    if cyclic {
        return format!("C{}", h.order());
    }
    if h.order() == 4 {
        return "V4".into();
    }
    format!("H{}", h.order())
}

/// All subgroups of `g` up to conjugacy, including the trivial subgroup and
/// `g` itself. Labels are deterministic; conjugate subgroups share one entry.
pub fn subgroups_up_to_conjugacy(g: &Arc<FiniteGroupData>) -> Result<Vec<Subgroup>> {
    let masks = all_subgroup_masks(g);
    // dedupe by conjugation orbit, keeping the minimal mask as representative
    let mut canonical: Vec<u128> = Vec::new();
    let mut seen: HashSet<u128> = HashSet::new();
    for &mask in &masks {
        if seen.contains(&mask) {
            continue;
        }
        let mut orbit_min = mask;
        let mut orbit = Vec::new();
        for by in 0..g.order() {
            let c = conjugate_mask(g, mask, by);
            orbit.push(c);
            orbit_min = orbit_min.min(c);
        }
        seen.extend(orbit);
        canonical.push(orbit_min);
    }
    canonical.sort_by_key(|m| (m.count_ones(), *m));
    let mut label_counts: HashMap<String, usize> = HashMap::new();
    let mut out = Vec::with_capacity(canonical.len());
    for mask in canonical {
        let members: Vec<usize> = (0..g.order()).filter(|&i| mask >> i & 1 == 1).collect();
        let probe = induced_group(g, &members, "H")?;
        let base = subgroup_type_label(g, &probe);
        let count = label_counts.entry(base.clone()).or_insert(0);
        let label = if *count == 0 {
            base.clone()
        } else {
            format!("{}{}", base, (b'a' + *count as u8) as char)
        };
        *count += 1;
        let group = induced_group(g, &members, &label)?;
        let class_to_parent_class =
            group.classes().iter().map(|c| g.class_of(members[c.rep])).collect();
        out.push(Subgroup { parent: g.clone(), members, group, class_to_parent_class, label });
    }
    Ok(out)
}
