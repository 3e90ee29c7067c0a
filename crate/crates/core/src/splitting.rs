//! Symbolic wedge decompositions of `CP(V)` and `Gr_n(V)`.
//!
//! For an ordered sequence of one-dimensional summands, both spaces split
//! into representation spheres: `CP(V)` along the flag filtration (one sphere
//! `S^{omega_i}` per step), `Gr_n(V)` along Schubert cells (one sphere
//! `S^{W_sigma}` per Schubert symbol). For general irreducible summands the
//! splitting is into Thom summands over lower Grassmannians, and iterating
//! the one-step decomposition pushes everything down to Grassmannians over
//! single irreducibles.
//!
//! A summand is stored in a normal form closed under that iteration: a smash
//! product of Grassmannian factors `Gr_{k_j}(ambient_j)` carrying their
//! tautological bundles `eta_j`, with total bundle
//!
//! ```text
//!   E = (+)_j Hom(eta_j, U_j)  (-)  sum_{j != l} c_{jl} Hom(eta_j, eta_l)
//!       (-)  (+)_j Hom(D_j, eta_j)  (+)  W
//! ```
//!
//! where the `U_j`, `D_j`, `W` are genuine representations (multisets of
//! irreducibles). The subtracted terms arise because the complement of a
//! plane inside the ambient representation is `V_0` minus the tautological
//! plane, not `V_0` itself; dropping them breaks the classical Poincaré
//! accounting already for `Gr_2(C^4)`. A summand with no factors is a
//! representation sphere `S^W`; one factor with an empty bundle is a plus
//! Grassmannian; one factor with a bundle is a Thom space.
//!
//! Everything here is a pure function of immutable inputs, and the engine
//! never reorders the input sequence: permuting it changes the output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::PoincarePolynomial;
use crate::reps::{decompose, CharacterTable, GroupContext, RepSequence};

/// Multiset of irreducibles: table index -> multiplicity (> 0).
pub type ReprMultiset = BTreeMap<usize, u64>;

fn multiset_of(blocks: &[usize]) -> ReprMultiset {
    let mut out = ReprMultiset::new();
    for &b in blocks {
        *out.entry(b).or_insert(0) += 1;
    }
    out
}

fn multiset_dim(table: &CharacterTable, ms: &ReprMultiset) -> u64 {
    ms.iter().map(|(&i, &m)| table.dims[i] * m).sum()
}

/// Multiset difference; panics on underflow (the Schubert condition makes
/// underflow impossible for valid inputs, so hitting it is a bug).
fn multiset_sub(a: &ReprMultiset, b: &ReprMultiset) -> ReprMultiset {
    let mut out = a.clone();
    for (&i, &m) in b {
        let have = out.get(&i).copied().unwrap_or(0);
        assert!(have >= m, "multiset difference underflow at irreducible {i}");
        if have == m {
            out.remove(&i);
        } else {
            out.insert(i, have - m);
        }
    }
    out
}

fn multiset_union(a: &ReprMultiset, b: &ReprMultiset) -> ReprMultiset {
    let mut out = a.clone();
    for (&i, &m) in b {
        *out.entry(i).or_insert(0) += m;
    }
    out
}

/// Which side of `Hom(plane, bundle)` the tautological plane sits on when
/// fixed-point ranks are computed. `HomFromPlane` is the convention under
/// which the per-character telescoping identity closes; `TensorWithPlane` is
/// the opposite reading, kept as a diagnostic so the verifier can show the
/// cross-checks have teeth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TwistConvention {
    #[default]
    HomFromPlane,
    TensorWithPlane,
}

/// A Schubert symbol `1 <= sigma_1 < ... < sigma_n <= m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertSymbol(pub Vec<usize>);

impl SchubertSymbol {
    /// Complex cell dimension `|sigma| = sum(sigma_i - i)`.
    pub fn cell_dim(&self) -> usize {
        self.0.iter().enumerate().map(|(i, s)| s - i - 1).sum()
    }
}

/// All Schubert symbols for `Gr_n(C^m)` in lexicographic order; exactly
/// `binomial(m, n)` of them.
pub fn enumerate_schubert(n: usize, m: usize) -> Result<Vec<SchubertSymbol>> {
    if n > m {
        return Err(Error::Domain(format!("Schubert symbols need n <= m, got ({n}, {m})")));
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(SchubertSymbol(cur.clone()));
        if n == 0 {
            break;
        }
        let mut i = n;
        loop {
            i -= 1;
            if cur[i] < m - (n - 1 - i) {
                cur[i] += 1;
                for j in i + 1..n {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// The cell representation `W_sigma` of a Schubert cell over an ordered
/// sequence of one-dimensional summands: for each `i`, the first
/// `sigma_i - 1` summands minus the summands already used at positions
/// `sigma_1, ..., sigma_{i-1}`, all twisted by the inverse of the
/// `sigma_i`-th summand.
pub fn schubert_rep(
    ctx: &GroupContext,
    sigma: &SchubertSymbol,
    seq: &RepSequence,
) -> Result<ReprMultiset> {
    let m = seq.blocks.len();
    require_linear(ctx, seq)?;
    if sigma.0.is_empty() {
        return Ok(ReprMultiset::new());
    }
    if *sigma.0.last().unwrap() > m || sigma.0.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain(format!("invalid Schubert symbol {:?} for m = {m}", sigma.0)));
    }
    let mut total = ReprMultiset::new();
    for (i, &si) in sigma.0.iter().enumerate() {
        let mut avail = multiset_of(&seq.blocks[..si - 1]);
        let used = multiset_of(
            &sigma.0[..i].iter().map(|&sl| seq.blocks[sl - 1]).collect::<Vec<_>>(),
        );
        avail = multiset_sub(&avail, &used);
        for (&phi, &mult) in &avail {
            let twisted = ctx.twist_by_linear_dual(phi, seq.blocks[si - 1])?;
            *total.entry(twisted).or_insert(0) += mult;
        }
    }
    Ok(total)
}

/// One Grassmannian smash factor `Gr_k(ambient)` with its tautological
/// `k`-plane bundle. Nondegenerate by construction: `0 < k < dim(ambient)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrFactor {
    /// Ordered irreducible blocks of the ambient representation.
    pub ambient: Vec<usize>,
    pub k: usize,
}

/// A wedge summand in the closed normal form described in the module docs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Summand {
    /// Constant bundle summand / sphere twist `W`.
    pub twist: ReprMultiset,
    pub factors: Vec<GrFactor>,
    /// `tensors[j]` is `U_j` in `Hom(eta_j, U_j)`.
    pub tensors: Vec<ReprMultiset>,
    /// `neg[j]` is `D_j` in the subtracted `Hom(D_j, eta_j)`.
    pub neg: Vec<ReprMultiset>,
    /// `cross[(j, l)] = c` for the subtracted `c * Hom(eta_j, eta_l)`.
    pub cross: BTreeMap<(usize, usize), u64>,
    /// Constant part of the tautological plane over this piece (the blocks
    /// the plane fully contains); drives the recursion bookkeeping.
    pub taut_const: ReprMultiset,
    /// Which theorem/step produced this summand, outermost first.
    pub trace: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummandKind {
    Sphere,
    Thom,
    GrPlus,
    Smash,
}

impl SummandKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SummandKind::Sphere => "sphere",
            SummandKind::Thom => "thom",
            SummandKind::GrPlus => "grplus",
            SummandKind::Smash => "smash",
        }
    }
}

impl Summand {
    fn sphere(twist: ReprMultiset, taut: ReprMultiset, trace: Vec<String>) -> Self {
        Summand { twist, taut_const: taut, trace, ..Default::default() }
    }

    pub fn kind(&self) -> SummandKind {
        match self.factors.len() {
            0 => SummandKind::Sphere,
            1 => {
                if self.tensors[0].is_empty() && self.neg[0].is_empty() && self.twist.is_empty() {
                    SummandKind::GrPlus
                } else if self.neg[0].is_empty() {
                    SummandKind::Thom
                } else {
                    SummandKind::Smash
                }
            }
            _ => SummandKind::Smash,
        }
    }

    /// Complex rank of the total bundle (the suspension amount over the base).
    pub fn bundle_rank(&self, table: &CharacterTable) -> i64 {
        let mut rank = multiset_dim(table, &self.twist) as i64;
        for (j, f) in self.factors.iter().enumerate() {
            rank += f.k as i64 * multiset_dim(table, &self.tensors[j]) as i64;
            rank -= f.k as i64 * multiset_dim(table, &self.neg[j]) as i64;
        }
        for (&(j, l), &c) in &self.cross {
            rank -= (c as i64) * self.factors[j].k as i64 * self.factors[l].k as i64;
        }
        rank
    }

    /// Top nonequivariant complex cell dimension: base dimension plus bundle
    /// rank.
    pub fn top_cell_dim(&self, table: &CharacterTable) -> i64 {
        let mut dim = self.bundle_rank(table);
        for f in &self.factors {
            let ambient: u64 = f.ambient.iter().map(|&b| table.dims[b]).sum();
            dim += (f.k as i64) * (ambient as i64 - f.k as i64);
        }
        dim
    }
}

/// An ordered wedge of summands, with provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeDecomposition {
    pub group: String,
    pub rep_labels: Vec<String>,
    /// `cp` or `gr(n)`.
    pub target: String,
    pub summands: Vec<Summand>,
}

fn require_linear(ctx: &GroupContext, seq: &RepSequence) -> Result<()> {
    if seq.is_all_linear(&ctx.table) {
        Ok(())
    } else {
        Err(Error::Domain(
            "sequence has a summand of dimension > 1; use the general splitting".into(),
        ))
    }
}

/// Splitting of `CP(V)` for a sequence of one-dimensional summands
/// `(phi_1, ..., phi_n)`: one sphere per flag step, `omega_i` being the first
/// `i` summands twisted by the inverse of the next one.
pub fn split_cp_abelian(ctx: &GroupContext, seq: &RepSequence) -> Result<WedgeDecomposition> {
    require_linear(ctx, seq)?;
    let n = seq.blocks.len();
    let mut summands = Vec::with_capacity(n);
    for i in 0..n {
        let next = seq.blocks[i];
        let mut omega = ReprMultiset::new();
        for &phi in &seq.blocks[..i] {
            *omega.entry(ctx.twist_by_linear_dual(phi, next)?).or_insert(0) += 1;
        }
        summands.push(Summand::sphere(
            omega,
            multiset_of(&[next]),
            vec![format!("cp-abelian i={i}")],
        ));
    }
    Ok(WedgeDecomposition {
        group: ctx.group.name.clone(),
        rep_labels: seq.labels(&ctx.table),
        target: "cp".into(),
        summands,
    })
}

/// Splitting of `Gr_n(V)` for a sequence of one-dimensional summands: one
/// sphere `S^{W_sigma}` per Schubert symbol, in lexicographic symbol order.
pub fn split_gr_abelian(
    ctx: &GroupContext,
    n: usize,
    seq: &RepSequence,
) -> Result<WedgeDecomposition> {
    require_linear(ctx, seq)?;
    let m = seq.blocks.len();
    let symbols = enumerate_schubert(n, m)?;
    let mut summands = Vec::with_capacity(symbols.len());
    for sigma in &symbols {
        let rep = schubert_rep(ctx, sigma, seq)?;
        let taut = multiset_of(
            &sigma.0.iter().map(|&s| seq.blocks[s - 1]).collect::<Vec<_>>(),
        );
        summands.push(Summand::sphere(
            rep,
            taut,
            vec![format!("gr-abelian sigma={:?}", sigma.0)],
        ));
    }
    Ok(WedgeDecomposition {
        group: ctx.group.name.clone(),
        rep_labels: seq.labels(&ctx.table),
        target: format!("gr({n})"),
        summands,
    })
}

/// Character multiset of `Hom(psi, U)` (or `psi (x) U` under the diagnostic
/// convention) for a single irreducible `psi` and genuine `U`.
fn hom_twist(
    ctx: &GroupContext,
    psi: usize,
    u: &ReprMultiset,
    convention: TwistConvention,
) -> Result<ReprMultiset> {
    let psi_char = &ctx.table.irreducibles[psi];
    let factor = match convention {
        TwistConvention::HomFromPlane => psi_char.dual(),
        TwistConvention::TensorWithPlane => psi_char.clone(),
    };
    let u_char = ctx.table.combine(u);
    let product = u_char.tensor(&factor)?;
    decompose(&product, &ctx.table)
}

/// Splitting of `CP(V)` for any ordered sequence of irreducibles: one Thom
/// summand over `CP(psi_{i+1})` per flag step, with the previously adjoined
/// blocks as the bundle tensor factor. Point bases (one-dimensional blocks)
/// degenerate to representation spheres, so on all-linear input this
/// coincides with [`split_cp_abelian`].
pub fn split_cp_general(
    ctx: &GroupContext,
    seq: &RepSequence,
    convention: TwistConvention,
) -> Result<WedgeDecomposition> {
    let n = seq.blocks.len();
    let mut summands = Vec::with_capacity(n);
    for i in 0..n {
        let psi = seq.blocks[i];
        let u = multiset_of(&seq.blocks[..i]);
        let trace = vec![format!("cp-general i={i}")];
        if ctx.table.is_linear(psi) {
            summands.push(Summand::sphere(
                hom_twist(ctx, psi, &u, convention)?,
                multiset_of(&[psi]),
                trace,
            ));
        } else {
            summands.push(Summand {
                twist: ReprMultiset::new(),
                factors: vec![GrFactor { ambient: vec![psi], k: 1 }],
                tensors: vec![u],
                neg: vec![ReprMultiset::new()],
                cross: BTreeMap::new(),
                taut_const: ReprMultiset::new(),
                trace,
            });
        }
    }
    Ok(WedgeDecomposition {
        group: ctx.group.name.clone(),
        rep_labels: seq.labels(&ctx.table),
        target: "cp".into(),
        summands,
    })
}

/// A piece of the one-step Grassmannian filtration: the stratum of planes
/// meeting `V_0` in dimension `n - k`, compactified. `a_is_point` collapses
/// `Gr_k(V')` when `k = dim V'`; the `B` side is a whole (unrecursed)
/// Grassmannian over `V_0`.
fn step_piece(
    ctx: &GroupContext,
    k: usize,
    vprime: &RepSequence,
    n_minus_k: usize,
    v0: &RepSequence,
    convention: TwistConvention,
    trace: String,
) -> Result<Option<Summand>> {
    let table = &ctx.table;
    let v0_dim = v0.dim(table) as usize;
    if n_minus_k > v0_dim {
        return Ok(None); // empty stratum
    }
    let vp_dim = vprime.dim(table) as usize;
    debug_assert!(k >= 1 && k <= vp_dim);
    let v0_ms = multiset_of(&v0.blocks);
    let mut s = Summand { trace: vec![trace], ..Default::default() };
    // B side: Gr_{n-k}(V0)
    let b_factor = if n_minus_k == 0 {
        None
    } else if n_minus_k == v0_dim {
        s.taut_const = v0_ms.clone();
        None
    } else {
        s.factors.push(GrFactor { ambient: v0.blocks.clone(), k: n_minus_k });
        s.tensors.push(ReprMultiset::new());
        s.neg.push(ReprMultiset::new());
        Some(0usize)
    };
    // bundle tensor factor: V0 minus the constant part of the plane
    let u = multiset_sub(&v0_ms, &s.taut_const);
    // A side: Gr_k(V')
    if k == vp_dim {
        // point base: the whole of V' joins the plane, the bundle becomes
        // Hom(V', V0 - eta_B)
        if vprime.blocks.len() == 1 {
            let psi = vprime.blocks[0];
            s.twist = multiset_union(&s.twist, &hom_twist(ctx, psi, &u, convention)?);
            if let Some(b) = b_factor {
                *s.neg[b].entry(psi).or_insert(0) += 1;
            }
        } else {
            // multi-block V' taken whole: accumulate per block
            for &psi in &vprime.blocks {
                s.twist = multiset_union(&s.twist, &hom_twist(ctx, psi, &u, convention)?);
                if let Some(b) = b_factor {
                    *s.neg[b].entry(psi).or_insert(0) += 1;
                }
            }
        }
        s.taut_const = multiset_union(&s.taut_const, &multiset_of(&vprime.blocks));
    } else {
        let a_idx = s.factors.len();
        s.factors.push(GrFactor { ambient: vprime.blocks.clone(), k });
        s.tensors.push(u);
        s.neg.push(ReprMultiset::new());
        if let Some(b) = b_factor {
            s.cross.insert((a_idx, b), 1);
        }
    }
    Ok(Some(s))
}

/// One step of the general Grassmannian splitting for `V = V0 (+) V'`:
/// strata `Th(Gr_k(V'), Hom(xi_k, V0 - eta)) ^ Gr_{n-k}(V0)_+` for
/// `k = 1..min(n, dim V')`, followed by `Gr_n(V0)_+`. No recursion.
pub fn split_gr_step(
    ctx: &GroupContext,
    n: usize,
    v0: &RepSequence,
    vprime: &RepSequence,
    convention: TwistConvention,
) -> Result<WedgeDecomposition> {
    let table = &ctx.table;
    let v0_dim = v0.dim(table) as usize;
    let vp_dim = vprime.dim(table) as usize;
    if n > v0_dim + vp_dim {
        return Err(Error::Domain(format!("n = {n} exceeds dim V = {}", v0_dim + vp_dim)));
    }
    let mut summands = Vec::new();
    if n == 0 {
        summands.push(Summand::sphere(
            ReprMultiset::new(),
            ReprMultiset::new(),
            vec!["gr-step n=0".into()],
        ));
    } else {
        for k in 1..=n.min(vp_dim) {
            let trace = format!("gr-step k={k}");
            if let Some(s) = step_piece(ctx, k, vprime, n - k, v0, convention, trace)? {
                summands.push(s);
            }
        }
        // the deepest filtration layer: planes inside V0
        if n <= v0_dim {
            let mut s = if n == v0_dim {
                Summand::sphere(
                    ReprMultiset::new(),
                    multiset_of(&v0.blocks),
                    Vec::new(),
                )
            } else {
                Summand {
                    factors: vec![GrFactor { ambient: v0.blocks.clone(), k: n }],
                    tensors: vec![ReprMultiset::new()],
                    neg: vec![ReprMultiset::new()],
                    ..Default::default()
                }
            };
            s.trace = vec!["gr-step k=0 (planes inside V0)".into()];
            summands.push(s);
        }
    }
    let mut rep_labels = v0.labels(table);
    rep_labels.extend(vprime.labels(table));
    Ok(WedgeDecomposition {
        group: ctx.group.name.clone(),
        rep_labels,
        target: format!("gr({n})"),
        summands,
    })
}

/// Fully recursed Grassmannian splitting: repeatedly split off the last
/// irreducible block (`V' =` final block, `V0 =` prefix) and recurse into
/// every Grassmannian factor over `V0`, until every factor is a Grassmannian
/// over a single irreducible.
pub fn split_gr_recursive(
    ctx: &GroupContext,
    n: usize,
    seq: &RepSequence,
    convention: TwistConvention,
) -> Result<WedgeDecomposition> {
    let table = &ctx.table;
    let total = seq.dim(table) as usize;
    if n > total {
        return Err(Error::Domain(format!("n = {n} exceeds dim V = {total}")));
    }
    let summands = rec_split(ctx, n, &seq.blocks, convention, 0)?;
    Ok(WedgeDecomposition {
        group: ctx.group.name.clone(),
        rep_labels: seq.labels(table),
        target: format!("gr({n})"),
        summands,
    })
}

/// Smash the recursed piece of `Gr_{n-k}(V0)_+` with the stratum factor
/// `Gr_k(psi)` carrying `Hom(xi_k, V0 - eta)`.
fn smash_with_stratum(
    ctx: &GroupContext,
    psi: usize,
    k: usize,
    v0_ms: &ReprMultiset,
    piece: &Summand,
    convention: TwistConvention,
    trace: String,
) -> Result<Summand> {
    let table = &ctx.table;
    let d = table.dims[psi] as usize;
    let mut s = piece.clone();
    s.trace.insert(0, trace);
    let u = multiset_sub(v0_ms, &piece.taut_const);
    if k == d {
        // point stratum factor: psi joins the plane whole and the bundle
        // contribution is Hom(psi, V0 - eta) = Hom(psi, U) - sum_j Hom(psi, eta_j)
        s.twist = multiset_union(&s.twist, &hom_twist(ctx, psi, &u, convention)?);
        for j in 0..s.factors.len() {
            *s.neg[j].entry(psi).or_insert(0) += 1;
        }
        *s.taut_const.entry(psi).or_insert(0) += 1;
    } else {
        let a_idx = s.factors.len();
        for j in 0..a_idx {
            *s.cross.entry((a_idx, j)).or_insert(0) += 1;
        }
        s.factors.push(GrFactor { ambient: vec![psi], k });
        s.tensors.push(u);
        s.neg.push(ReprMultiset::new());
    }
    Ok(s)
}

fn rec_split(
    ctx: &GroupContext,
    n: usize,
    blocks: &[usize],
    convention: TwistConvention,
    depth: usize,
) -> Result<Vec<Summand>> {
    let table = &ctx.table;
    let total: usize = blocks.iter().map(|&b| table.dims[b] as usize).sum();
    if n > total {
        return Ok(Vec::new());
    }
    if n == 0 {
        return Ok(vec![Summand::sphere(ReprMultiset::new(), ReprMultiset::new(), Vec::new())]);
    }
    if n == total {
        return Ok(vec![Summand::sphere(ReprMultiset::new(), multiset_of(blocks), Vec::new())]);
    }
    if blocks.len() == 1 {
        // 0 < n < dim(psi): an irreducible Grassmannian, terminal
        return Ok(vec![Summand {
            factors: vec![GrFactor { ambient: blocks.to_vec(), k: n }],
            tensors: vec![ReprMultiset::new()],
            neg: vec![ReprMultiset::new()],
            ..Default::default()
        }]);
    }
    let (v0_blocks, last) = blocks.split_at(blocks.len() - 1);
    let psi = last[0];
    let d = table.dims[psi] as usize;
    let v0_ms = multiset_of(v0_blocks);
    let label = &table.labels[psi];
    let mut out = Vec::new();
    for k in 1..=n.min(d) {
        let pieces = rec_split(ctx, n - k, v0_blocks, convention, depth + 1)?;
        for piece in &pieces {
            let trace = format!("gr-step k={k} V'={label} (depth {depth})");
            out.push(smash_with_stratum(ctx, psi, k, &v0_ms, piece, convention, trace)?);
        }
    }
    // deepest layer: planes inside V0, recursed in place
    let mut inside = rec_split(ctx, n, v0_blocks, convention, depth + 1)?;
    for s in &mut inside {
        s.trace.insert(0, format!("gr-step k=0 V'={label} (depth {depth})"));
    }
    out.extend(inside);
    Ok(out)
}

/// Multiset of sphere twists of an all-sphere decomposition (abelian inputs
/// fully degenerate); fails if any summand did not degenerate.
pub fn sphere_multiset(d: &WedgeDecomposition) -> Result<BTreeMap<ReprMultiset, u64>> {
    let mut out = BTreeMap::new();
    for s in &d.summands {
        if s.kind() != SummandKind::Sphere {
            return Err(Error::Domain("decomposition contains non-sphere summands".into()));
        }
        *out.entry(s.twist.clone()).or_insert(0) += 1;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// JSON and LaTeX emitters
// ---------------------------------------------------------------------------

fn multiset_json(table: &CharacterTable, ms: &ReprMultiset) -> serde_json::Value {
    let map: BTreeMap<String, u64> =
        ms.iter().map(|(&i, &m)| (table.labels[i].clone(), m)).collect();
    serde_json::json!(map)
}

fn multiset_from_json(table: &CharacterTable, v: &serde_json::Value) -> Result<ReprMultiset> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("multiset must be an object {label: mult}".into()))?;
    let mut out = ReprMultiset::new();
    for (label, m) in obj {
        let idx = table.index_of_label(label)?;
        let mult =
            m.as_u64().ok_or_else(|| Error::Parse(format!("bad multiplicity for `{label}`")))?;
        if mult > 0 {
            out.insert(idx, mult);
        }
    }
    Ok(out)
}

fn factor_json(table: &CharacterTable, s: &Summand, j: usize) -> serde_json::Value {
    let f = &s.factors[j];
    serde_json::json!({
        "base": {
            "k": f.k,
            "ambient": f.ambient.iter().map(|&b| table.labels[b].clone()).collect::<Vec<_>>(),
        },
        "bundle": { "tensor": multiset_json(table, &s.tensors[j]), "rank": f.k },
        "neg": multiset_json(table, &s.neg[j]),
    })
}

/// Decomposition as JSON: one entry per summand with its kind, sphere twist,
/// factors (base + bundle), subtracted cross terms, plane bookkeeping, and
/// trace.
pub fn decomposition_to_json(table: &CharacterTable, d: &WedgeDecomposition) -> serde_json::Value {
    let summands: Vec<serde_json::Value> = d
        .summands
        .iter()
        .map(|s| {
            let mut obj = serde_json::json!({
                "kind": s.kind().as_str(),
                "rep": multiset_json(table, &s.twist),
                "factors": (0..s.factors.len())
                    .map(|j| factor_json(table, s, j))
                    .collect::<Vec<_>>(),
                "cross": s.cross.iter().map(|(&(j, l), &c)| serde_json::json!([j, l, c]))
                    .collect::<Vec<_>>(),
                "plane_const": multiset_json(table, &s.taut_const),
                "trace": s.trace,
            });
            if s.factors.len() == 1 {
                obj["base"] = obj["factors"][0]["base"].clone();
                obj["bundle"] = obj["factors"][0]["bundle"].clone();
            }
            obj
        })
        .collect();
    serde_json::json!({
        "group": d.group,
        "rep": d.rep_labels,
        "target": d.target,
        "summands": summands,
    })
}

/// Re-parse an emitted decomposition; inverse of [`decomposition_to_json`].
pub fn decomposition_from_json(
    table: &CharacterTable,
    v: &serde_json::Value,
) -> Result<WedgeDecomposition> {
    let get = |k: &str| {
        v.get(k).ok_or_else(|| Error::Parse(format!("decomposition JSON missing `{k}`")))
    };
    let group = get("group")?.as_str().unwrap_or_default().to_string();
    let rep_labels: Vec<String> = get("rep")?
        .as_array()
        .ok_or_else(|| Error::Parse("`rep` must be an array".into()))?
        .iter()
        .filter_map(|x| x.as_str().map(str::to_string))
        .collect();
    let target = get("target")?.as_str().unwrap_or_default().to_string();
    let mut summands = Vec::new();
    for sv in get("summands")?.as_array().ok_or_else(|| Error::Parse("`summands` array".into()))? {
        let twist = multiset_from_json(table, &sv["rep"])?;
        let mut factors = Vec::new();
        let mut tensors = Vec::new();
        let mut neg = Vec::new();
        for fv in sv["factors"].as_array().unwrap_or(&Vec::new()) {
            let k = fv["base"]["k"]
                .as_u64()
                .ok_or_else(|| Error::Parse("factor base needs `k`".into()))?
                as usize;
            let ambient: Result<Vec<usize>> = fv["base"]["ambient"]
                .as_array()
                .ok_or_else(|| Error::Parse("factor base needs `ambient`".into()))?
                .iter()
                .map(|x| {
                    x.as_str()
                        .ok_or_else(|| Error::Parse("ambient labels must be strings".into()))
                        .and_then(|l| table.index_of_label(l))
                })
                .collect();
            factors.push(GrFactor { ambient: ambient?, k });
            tensors.push(multiset_from_json(table, &fv["bundle"]["tensor"])?);
            neg.push(multiset_from_json(table, &fv["neg"])?);
        }
        let mut cross = BTreeMap::new();
        for cv in sv["cross"].as_array().unwrap_or(&Vec::new()) {
            let t = cv
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| Error::Parse("cross entries are [j, l, c]".into()))?;
            let (j, l, c) = (
                t[0].as_u64().unwrap_or(0) as usize,
                t[1].as_u64().unwrap_or(0) as usize,
                t[2].as_u64().unwrap_or(0),
            );
            cross.insert((j, l), c);
        }
        let taut_const = multiset_from_json(table, &sv["plane_const"])?;
        let trace = sv["trace"]
            .as_array()
            .map(|a| a.iter().filter_map(|x| x.as_str().map(str::to_string)).collect())
            .unwrap_or_default();
        summands.push(Summand { twist, factors, tensors, neg, cross, taut_const, trace });
    }
    Ok(WedgeDecomposition { group, rep_labels, target, summands })
}

fn label_latex(label: &str) -> String {
    if label == "sign" {
        return "\\sigma".into();
    }
    if let Some(k) = label.strip_prefix("sgn") {
        return format!("\\sigma_{{{k}}}");
    }
    if let Some(k) = label.strip_prefix("lin") {
        return format!("\\chi_{{{k}}}");
    }
    if label == "std" {
        return "\\mathrm{std}".into();
    }
    if let Some(k) = label.strip_prefix("irr") {
        return format!("\\psi_{{{k}}}");
    }
    format!("\\mathrm{{{label}}}")
}

/// Sphere exponent: trivial summands as their real dimension, others as a
/// formal sum of characters; `0` for the empty twist.
fn twist_latex(table: &CharacterTable, ms: &ReprMultiset) -> String {
    let mut terms = Vec::new();
    for (&i, &m) in ms {
        if i == table.trivial_idx {
            terms.push(format!("{}", 2 * m * table.dims[i]));
        } else {
            let base = label_latex(&table.labels[i]);
            terms.push(if m == 1 { base } else { format!("{m}{base}") });
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn tensor_latex(table: &CharacterTable, ms: &ReprMultiset) -> String {
    let mut terms = Vec::new();
    for (&i, &m) in ms {
        let base = label_latex(&table.labels[i]);
        terms.push(if m == 1 { base } else { format!("{m}{base}") });
    }
    if terms.is_empty() {
        "0".into()
    } else if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        format!("({})", terms.join("+"))
    }
}

fn gr_latex(table: &CharacterTable, f: &GrFactor) -> String {
    let ambient =
        f.ambient.iter().map(|&b| label_latex(&table.labels[b])).collect::<Vec<_>>().join("+");
    if f.k == 1 {
        format!("\\mathbb{{C}}P({ambient})")
    } else {
        format!("\\mathrm{{Gr}}_{{{}}}({ambient})", f.k)
    }
}

/// Render one summand in the paper's display notation (`S^{omega}`,
/// `Th(U (x) gamma_psi)`, wedge/smash); the subtracted tautological terms are
/// bookkeeping and do not show here.
pub fn summand_latex(table: &CharacterTable, s: &Summand) -> String {
    match s.kind() {
        SummandKind::Sphere => format!("S^{{{}}}", twist_latex(table, &s.twist)),
        SummandKind::GrPlus => format!("{}_+", gr_latex(table, &s.factors[0])),
        _ => {
            let mut parts: Vec<String> = Vec::new();
            if !s.twist.is_empty() {
                parts.push(format!("S^{{{}}}", twist_latex(table, &s.twist)));
            }
            for (j, f) in s.factors.iter().enumerate() {
                if s.tensors[j].is_empty() && s.neg[j].is_empty() {
                    parts.push(format!("{}_+", gr_latex(table, f)));
                } else {
                    let tensor = tensor_latex(table, &s.tensors[j]);
                    let bundle = if f.ambient.len() == 1 && f.k == 1 {
                        let base = label_latex(&table.labels[f.ambient[0]]);
                        format!("{tensor}\\otimes\\gamma_{{{base}}}")
                    } else {
                        format!("{tensor}\\otimes\\xi_{{{}}}", f.k)
                    };
                    if f.ambient.len() == 1 && f.k == 1 {
                        parts.push(format!("\\mathrm{{Th}}({bundle})"));
                    } else {
                        parts.push(format!(
                            "\\mathrm{{Th}}({}, {bundle})",
                            gr_latex(table, f)
                        ));
                    }
                }
            }
            parts.join(" \\wedge ")
        }
    }
}

/// The whole wedge in LaTeX, summands joined by `\vee`.
pub fn decomposition_latex(table: &CharacterTable, d: &WedgeDecomposition) -> String {
    let mut out = String::new();
    for (i, s) in d.summands.iter().enumerate() {
        if i > 0 {
            out.push_str(" \\vee ");
        }
        let _ = write!(out, "{}", summand_latex(table, s));
    }
    if d.summands.is_empty() {
        out.push_str("\\ast");
    }
    out
}

/// Plain-text renderer, same structure as the LaTeX one.
pub fn decomposition_text(table: &CharacterTable, d: &WedgeDecomposition) -> String {
    let ms_text = |ms: &ReprMultiset| -> String {
        if ms.is_empty() {
            return "0".into();
        }
        ms.iter()
            .map(|(&i, &m)| {
                if m == 1 {
                    table.labels[i].clone()
                } else {
                    format!("{m}*{}", table.labels[i])
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    };
    let gr_text = |f: &GrFactor| -> String {
        let ambient =
            f.ambient.iter().map(|&b| table.labels[b].clone()).collect::<Vec<_>>().join(",");
        if f.k == 1 {
            format!("CP({ambient})")
        } else {
            format!("Gr_{}({ambient})", f.k)
        }
    };
    let mut parts = Vec::new();
    for s in &d.summands {
        let text = match s.kind() {
            SummandKind::Sphere => format!("S^({})", ms_text(&s.twist)),
            SummandKind::GrPlus => format!("{}+", gr_text(&s.factors[0])),
            _ => {
                let mut ps = Vec::new();
                if !s.twist.is_empty() {
                    ps.push(format!("S^({})", ms_text(&s.twist)));
                }
                for (j, f) in s.factors.iter().enumerate() {
                    if s.tensors[j].is_empty() && s.neg[j].is_empty() {
                        ps.push(format!("{}+", gr_text(f)));
                    } else {
                        ps.push(format!("Th({}, ({})*xi_{})", gr_text(f), ms_text(&s.tensors[j]), f.k));
                    }
                }
                ps.join(" ^ ")
            }
        };
        parts.push(text);
    }
    parts.join(" v ")
}

/// Underlying (nonequivariant) cell-dimension histogram of an all-sphere
/// decomposition, as a Poincaré polynomial in `t`.
pub fn sphere_dims_poly(table: &CharacterTable, d: &WedgeDecomposition) -> Result<PoincarePolynomial> {
    let mut p = PoincarePolynomial::zero();
    for s in &d.summands {
        if s.kind() != SummandKind::Sphere {
            return Err(Error::Domain("decomposition contains non-sphere summands".into()));
        }
        p.add_assign(&PoincarePolynomial::monomial(
            2 * multiset_dim(table, &s.twist) as usize,
        ));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::q_binomial;
    use crate::groups::{build_group, GroupSpec};

    fn ctx(name: &str) -> GroupContext {
        let g = build_group(&GroupSpec::Builtin { name: name.into() }).unwrap();
        GroupContext::new(g).unwrap()
    }

    fn seq(ctx: &GroupContext, labels: &[&str]) -> RepSequence {
        RepSequence::from_labels(&ctx.table, labels).unwrap()
    }

    fn ms(ctx: &GroupContext, labels: &[&str]) -> ReprMultiset {
        multiset_of(
            &labels.iter().map(|l| ctx.table.index_of_label(l).unwrap()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn schubert_enumeration_matches_lex_order() {
        let symbols = enumerate_schubert(2, 4).unwrap();
        let raw: Vec<Vec<usize>> = symbols.iter().map(|s| s.0.clone()).collect();
        assert_eq!(
            raw,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        let dims: Vec<usize> = symbols.iter().map(|s| s.cell_dim()).collect();
        assert_eq!(dims, vec![0, 1, 2, 2, 3, 4]);

        let one = enumerate_schubert(1, 3).unwrap();
        assert_eq!(one.iter().map(|s| s.0.clone()).collect::<Vec<_>>(), vec![vec![1], vec![2], vec![3]]);

        let full = enumerate_schubert(3, 3).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].cell_dim(), 0);

        assert!(enumerate_schubert(4, 3).is_err());
    }

    #[test]
    fn schubert_histogram_matches_q_binomial() {
        for m in 0..=8usize {
            for n in 0..=m.min(4) {
                let mut p = PoincarePolynomial::zero();
                for s in enumerate_schubert(n, m).unwrap() {
                    p.add_assign(&PoincarePolynomial::monomial(2 * s.cell_dim()));
                }
                assert_eq!(p, q_binomial(m, n).unwrap(), "({m},{n})");
            }
        }
    }

    #[test]
    fn schubert_rep_examples() {
        let c = ctx("C2");
        let v = seq(&c, &["triv", "sign", "triv"]);
        // bottom cell
        let bottom = schubert_rep(&c, &SchubertSymbol(vec![1, 2]), &v).unwrap();
        assert!(bottom.is_empty());
        // top cell has dimension n(m-n)
        let top = schubert_rep(&c, &SchubertSymbol(vec![2, 3]), &v).unwrap();
        assert_eq!(top, ms(&c, &["sign", "triv"]));
        assert_eq!(top.values().sum::<u64>(), 2);
    }

    #[test]
    fn cp_abelian_examples() {
        let c = ctx("C2");
        let d = split_cp_abelian(&c, &seq(&c, &["triv", "sign"])).unwrap();
        assert_eq!(d.summands.len(), 2);
        assert!(d.summands[0].twist.is_empty());
        assert_eq!(d.summands[1].twist, ms(&c, &["sign"]));

        // classical case: trivial group, C^3 -> spheres of dims 0, 2, 4
        let t = ctx("C1");
        let d = split_cp_abelian(&t, &seq(&t, &["triv", "triv", "triv"])).unwrap();
        let dims: Vec<u64> =
            d.summands.iter().map(|s| 2 * multiset_dim(&t.table, &s.twist)).collect();
        assert_eq!(dims, vec![0, 2, 4]);

        // omega_2 = (triv + triv) (x) sign^{-1} = 2 sign
        let d = split_cp_abelian(&c, &seq(&c, &["triv", "triv", "sign"])).unwrap();
        assert_eq!(d.summands[2].twist, ms(&c, &["sign", "sign"]));
        assert_eq!(d.summands[1].twist, ms(&c, &["triv"]));

        // non-linear blocks are rejected
        let s3 = ctx("S3");
        assert!(split_cp_abelian(&s3, &seq(&s3, &["triv", "std"])).is_err());
    }

    #[test]
    fn gr_abelian_matches_cp_at_n_one() {
        for name in ["C2", "C3", "C4", "C2xC2", "C6"] {
            let c = ctx(name);
            let labels: Vec<String> = c.table.labels.clone();
            // a few deterministic ordered sequences up to dim 6
            let picks: Vec<Vec<&str>> = vec![
                labels.iter().map(String::as_str).take(3).collect(),
                labels.iter().map(String::as_str).rev().take(4).collect(),
                labels.iter().map(String::as_str).cycle().take(6).collect(),
            ];
            for labels in picks {
                let v = seq(&c, &labels);
                let cp = split_cp_abelian(&c, &v).unwrap();
                let gr = split_gr_abelian(&c, 1, &v).unwrap();
                let cp_twists: Vec<_> = cp.summands.iter().map(|s| s.twist.clone()).collect();
                let gr_twists: Vec<_> = gr.summands.iter().map(|s| s.twist.clone()).collect();
                assert_eq!(cp_twists, gr_twists, "{name} {labels:?}");
            }
        }
    }

    #[test]
    fn gr_abelian_edge_cases_and_counts() {
        let c = ctx("C2");
        let v = seq(&c, &["triv", "sign", "triv", "sign"]);
        for n in 0..=4usize {
            let d = split_gr_abelian(&c, n, &v).unwrap();
            let binom = [1, 4, 6, 4, 1][n];
            assert_eq!(d.summands.len(), binom);
        }
        // n = 0 and n = m give a single S^0
        for n in [0, 4] {
            let d = split_gr_abelian(&c, n, &v).unwrap();
            assert_eq!(d.summands.len(), 1);
            assert!(d.summands[0].twist.is_empty());
        }
        // trivial group, n=2, m=4: cell dims 0,2,4,4,6,8
        let t = ctx("C1");
        let v = seq(&t, &["triv"; 4]);
        let d = split_gr_abelian(&t, 2, &v).unwrap();
        assert_eq!(sphere_dims_poly(&t.table, &d).unwrap(), q_binomial(4, 2).unwrap());
    }

    #[test]
    fn cp_general_shapes() {
        let s3 = ctx("S3");
        // single std block: CP(std)_+
        let d = split_cp_general(&s3, &seq(&s3, &["std"]), TwistConvention::default()).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].kind(), SummandKind::GrPlus);

        // (triv, std): S^0 v Th(triv (x) gamma_std)
        let d =
            split_cp_general(&s3, &seq(&s3, &["triv", "std"]), TwistConvention::default()).unwrap();
        assert_eq!(d.summands.len(), 2);
        assert_eq!(d.summands[0].kind(), SummandKind::Sphere);
        assert!(d.summands[0].twist.is_empty());
        assert_eq!(d.summands[1].kind(), SummandKind::Thom);
        assert_eq!(d.summands[1].tensors[0], ms(&s3, &["triv"]));

        // all-linear input degenerates to the abelian answer, same order
        let c2 = ctx("C2");
        let v = seq(&c2, &["triv", "sign"]);
        let gen = split_cp_general(&c2, &v, TwistConvention::default()).unwrap();
        let ab = split_cp_abelian(&c2, &v).unwrap();
        let twists = |d: &WedgeDecomposition| -> Vec<ReprMultiset> {
            d.summands.iter().map(|s| s.twist.clone()).collect()
        };
        assert_eq!(twists(&gen), twists(&ab));
        assert!(gen.summands.iter().all(|s| s.kind() == SummandKind::Sphere));
    }

    #[test]
    fn gr_step_examples() {
        let c2 = ctx("C2");
        // V0 = triv, V' = sign, n = 1: Th over the point CP(sign) degenerates
        // to S^sign; then Gr_1(triv)_+ = S^0
        let d = split_gr_step(
            &c2,
            1,
            &seq(&c2, &["triv"]),
            &seq(&c2, &["sign"]),
            TwistConvention::default(),
        )
        .unwrap();
        assert_eq!(d.summands.len(), 2);
        assert_eq!(d.summands[0].twist, ms(&c2, &["sign"]));
        assert!(d.summands[1].twist.is_empty());
        // matches split_cp_abelian(triv, sign) as a multiset
        let ab = split_cp_abelian(&c2, &seq(&c2, &["triv", "sign"])).unwrap();
        assert_eq!(sphere_multiset(&d).unwrap(), sphere_multiset(&ab).unwrap());

        // n = 0: a single S^0
        let d = split_gr_step(
            &c2,
            0,
            &seq(&c2, &["triv"]),
            &seq(&c2, &["sign"]),
            TwistConvention::default(),
        )
        .unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].kind(), SummandKind::Sphere);

        // dim V0 = 0: Gr_n(V')_+ itself
        let s3 = ctx("S3");
        let empty = RepSequence { blocks: vec![] };
        let d = split_gr_step(
            &s3,
            1,
            &empty,
            &seq(&s3, &["std"]),
            TwistConvention::default(),
        )
        .unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].kind(), SummandKind::GrPlus);

        // n exceeding dim V errors
        assert!(split_gr_step(
            &c2,
            3,
            &seq(&c2, &["triv"]),
            &seq(&c2, &["sign"]),
            TwistConvention::default()
        )
        .is_err());
    }

    #[test]
    fn gr_recursive_examples() {
        let c2 = ctx("C2");
        let v = seq(&c2, &["triv", "sign"]);
        let rec = split_gr_recursive(&c2, 1, &v, TwistConvention::default()).unwrap();
        let ab = split_gr_abelian(&c2, 1, &v).unwrap();
        assert_eq!(sphere_multiset(&rec).unwrap(), sphere_multiset(&ab).unwrap());

        // trivial group, n=2, m=4: six spheres with cell dims 0,2,4,4,6,8
        let t = ctx("C1");
        let v = seq(&t, &["triv"; 4]);
        let rec = split_gr_recursive(&t, 2, &v, TwistConvention::default()).unwrap();
        assert_eq!(rec.summands.len(), 6);
        assert_eq!(sphere_dims_poly(&t.table, &rec).unwrap(), q_binomial(4, 2).unwrap());

        // single irreducible ambient: one GrPlus summand
        let s3 = ctx("S3");
        let rec = split_gr_recursive(&s3, 1, &seq(&s3, &["std"]), TwistConvention::default())
            .unwrap();
        assert_eq!(rec.summands.len(), 1);
        assert_eq!(rec.summands[0].kind(), SummandKind::GrPlus);

        // every Grassmannian factor in a recursed output is over one block
        let rec = split_gr_recursive(
            &s3,
            2,
            &seq(&s3, &["triv", "std", "std"]),
            TwistConvention::default(),
        )
        .unwrap();
        for s in &rec.summands {
            for f in &s.factors {
                assert_eq!(f.ambient.len(), 1);
            }
        }
    }

    #[test]
    fn recursive_matches_abelian_sphere_multisets() {
        for name in ["C2", "C3", "C4", "C2xC2", "C6"] {
            let c = ctx(name);
            let labels: Vec<&str> = c.table.labels.iter().map(String::as_str).collect();
            let v = seq(&c, &labels.iter().cycle().take(4).copied().collect::<Vec<_>>());
            for n in 0..=3usize {
                let rec = split_gr_recursive(&c, n, &v, TwistConvention::default()).unwrap();
                let ab = split_gr_abelian(&c, n, &v).unwrap();
                assert_eq!(
                    sphere_multiset(&rec).unwrap(),
                    sphere_multiset(&ab).unwrap(),
                    "{name} n={n}"
                );
                // the plane bookkeeping matches the Schubert coordinates too
                let pairs = |d: &WedgeDecomposition| -> BTreeMap<(ReprMultiset, ReprMultiset), u64> {
                    let mut out = BTreeMap::new();
                    for s in &d.summands {
                        *out.entry((s.twist.clone(), s.taut_const.clone())).or_insert(0) += 1;
                    }
                    out
                };
                assert_eq!(pairs(&rec), pairs(&ab), "{name} n={n}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let s3 = ctx("S3");
        for d in [
            split_cp_general(&s3, &seq(&s3, &["triv", "std", "sign"]), TwistConvention::default())
                .unwrap(),
            split_gr_recursive(
                &s3,
                2,
                &seq(&s3, &["std", "std"]),
                TwistConvention::default(),
            )
            .unwrap(),
        ] {
            let json = decomposition_to_json(&s3.table, &d);
            let back = decomposition_from_json(&s3.table, &json).unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn latex_notation() {
        let c2 = ctx("C2");
        let d = split_cp_abelian(&c2, &seq(&c2, &["triv", "sign"])).unwrap();
        assert_eq!(decomposition_latex(&c2.table, &d), "S^{0} \\vee S^{\\sigma}");

        let s3 = ctx("S3");
        let d =
            split_cp_general(&s3, &seq(&s3, &["triv", "std"]), TwistConvention::default()).unwrap();
        let latex = decomposition_latex(&s3.table, &d);
        assert!(latex.contains("\\mathrm{Th}"), "{latex}");
        assert!(latex.contains("\\gamma_{\\mathrm{std}}"), "{latex}");
    }

    #[test]
    fn order_sensitivity_is_preserved() {
        let c2 = ctx("C2");
        let a = split_cp_abelian(&c2, &seq(&c2, &["triv", "sign"])).unwrap();
        let b = split_cp_abelian(&c2, &seq(&c2, &["sign", "triv"])).unwrap();
        let twists = |d: &WedgeDecomposition| -> Vec<ReprMultiset> {
            d.summands.iter().map(|s| s.twist.clone()).collect()
        };
        assert_ne!(twists(&a), twists(&b));
    }
}
