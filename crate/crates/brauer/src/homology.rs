//! Syzygies, stable Hom, the hook calculus and the location of string
//! modules in the stable Auslander–Reiten quiver.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::presentation::{Family, Presentation};
use crate::ribbon::{self, GrowthClass};
use crate::strmod::{
    self, projective_basis, Letter, MatrixRep, StringModule, StringWord,
};

/// `Ω(M)` or `Ω⁻¹(M)` together with the projective cover (or injective
/// envelope) it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyResult {
    pub input: StringModule,
    /// q-vertices of the top (resp. socle) of the input.
    pub cover: Vec<usize>,
    pub summands: Vec<StringModule>,
}

impl SyzygyResult {
    pub fn module(&self) -> &StringModule {
        &self.summands[0]
    }
}

pub fn is_projective(p: &Presentation, m: &StringModule) -> bool {
    let peaks = m.word().peaks();
    peaks.len() == 1 && p.projective(m.word().q_at(p, peaks[0])).dim() == m.dim()
}

fn finish(p: &Presentation, letters: Vec<Letter>, anchor: usize) -> StringWord {
    if letters.is_empty() {
        StringWord::trivial_side(anchor)
    } else {
        StringWord::from_letters(p, letters).expect("syzygy of a string is a string")
    }
}

fn run_left(ls: &[Letter], pos: usize, inverse: bool) -> usize {
    (0..pos).rev().take_while(|&k| ls[k].inverse == inverse).count()
}

fn run_right(ls: &[Letter], pos: usize, inverse: bool) -> usize {
    (pos..ls.len()).take_while(|&k| ls[k].inverse == inverse).count()
}

/// `Ω` on an oriented word: one segment of the kernel per peak, glued
/// through the top elements of the differences between neighbouring covers.
pub fn omega_word(p: &Presentation, c: &StringWord) -> StringWord {
    let g = p.graph();
    let ls = c.letters();
    let mut letters = Vec::new();
    let mut prev_r: Option<(usize, usize)> = None;
    let mut anchor = 0;
    for pk in c.peaks() {
        let l = run_left(ls, pk, true);
        let r = run_right(ls, pk, false);
        let r_half = if r > 0 { Some(p.arrow(ls[pk].arrow).half) } else { None };
        let l_half = if l > 0 { Some(p.arrow(ls[pk - 1].arrow).half) } else { None };
        let (lh, rh) = match (l_half, r_half) {
            (Some(a), Some(b)) => (a, b),
            (Some(a), None) => (a, g.pair(a)),
            (None, Some(b)) => (g.pair(b), b),
            (None, None) => (g.pair(c.anchor()), c.anchor()),
        };
        let (ll, lr) = (p.branch_len(lh), p.branch_len(rh));
        if let Some((ph, pr)) = prev_r {
            letters.push(Letter::inverse(p.branch_arrow(ph, pr + 1)));
            letters.push(Letter::direct(p.branch_arrow(lh, l + 1)));
        }
        anchor = if ll > 0 { p.branch_side(lh, ll) } else { p.branch_side(rh, lr) };
        for k in (l + 1)..ll {
            letters.push(Letter::direct(p.branch_arrow(lh, k + 1)));
        }
        for k in ((r + 1)..lr).rev() {
            letters.push(Letter::inverse(p.branch_arrow(rh, k + 1)));
        }
        prev_r = Some((rh, r));
    }
    finish(p, letters, anchor)
}

/// `Ω⁻¹` on an oriented word, dual to [`omega_word`] via the socle.
pub fn cosyzygy_word(p: &Presentation, c: &StringWord) -> StringWord {
    let g = p.graph();
    let ls = c.letters();
    let mut letters = Vec::new();
    let mut prev: Option<(usize, usize)> = None;
    let mut anchor = 0;
    for d in c.deeps() {
        let ul = run_left(ls, d, false);
        let ur = run_right(ls, d, true);
        let bl = if ul > 0 { Some(g.sigma(p.arrow(ls[d - 1].arrow).half)) } else { None };
        let br = if ur > 0 { Some(g.sigma(p.arrow(ls[d].arrow).half)) } else { None };
        let (lh, rh) = match (bl, br) {
            (Some(a), Some(b)) => (a, b),
            (Some(a), None) => (a, g.pair(a)),
            (None, Some(b)) => (g.pair(b), b),
            (None, None) => (c.anchor(), g.pair(c.anchor())),
        };
        let (lbl, lbr) = (p.branch_len(lh) as i64, p.branch_len(rh) as i64);
        let top_l = lbl - ul as i64 - 1;
        let top_r = lbr - ur as i64 - 1;
        if let Some((ph, pk)) = prev {
            letters.push(Letter::direct(p.branch_arrow(ph, pk)));
            letters.push(Letter::inverse(p.branch_arrow(lh, (top_l + 1) as usize)));
        }
        anchor = lh;
        for k in (1..=top_l.max(0) as usize).rev() {
            letters.push(Letter::inverse(p.branch_arrow(lh, k)));
        }
        for k in 1..=top_r.max(0) as usize {
            letters.push(Letter::direct(p.branch_arrow(rh, k)));
        }
        prev = Some((rh, (top_r + 1) as usize));
    }
    finish(p, letters, anchor)
}

pub fn syzygy(p: &Presentation, m: &StringModule) -> Result<SyzygyResult> {
    if is_projective(p, m) {
        return Err(Error::ProjectiveInput);
    }
    let w = omega_word(p, m.word());
    Ok(SyzygyResult { input: m.clone(), cover: m.top(p), summands: vec![StringModule::new(p, &w)] })
}

pub fn cosyzygy(p: &Presentation, m: &StringModule) -> Result<SyzygyResult> {
    if is_projective(p, m) {
        return Err(Error::ProjectiveInput);
    }
    let w = cosyzygy_word(p, m.word());
    Ok(SyzygyResult { input: m.clone(), cover: m.socle(p), summands: vec![StringModule::new(p, &w)] })
}

pub fn omega(p: &Presentation, m: &StringModule) -> Result<StringModule> {
    Ok(syzygy(p, m)?.summands.remove(0))
}

pub fn omega_inv(p: &Presentation, m: &StringModule) -> Result<StringModule> {
    Ok(cosyzygy(p, m)?.summands.remove(0))
}

/// `Ω^k` for any integer `k`.
pub fn omega_pow(p: &Presentation, m: &StringModule, k: i64) -> Result<StringModule> {
    let mut x = m.clone();
    for _ in 0..k.unsigned_abs() {
        x = if k > 0 { omega(p, &x)? } else { omega_inv(p, &x)? };
    }
    Ok(x)
}

/// Kernel of the projective cover computed by the matrix oracle: its
/// dimension vector and the dimension vector of its top.
pub fn oracle_syzygy_profile(p: &Presentation, m: &StringModule) -> (Vec<usize>, Vec<usize>) {
    let w = m.word();
    let mrep = MatrixRep::from_word(p, w);
    let dm = mrep.dim();
    // basis of the cover: (projective basis, image vector in M)
    let mut cover_q = Vec::new();
    let mut images: Vec<Vec<i64>> = Vec::new();
    let mut reps = Vec::new();
    for pk in w.peaks() {
        let q = w.q_at(p, pk);
        let pb = projective_basis(p, q);
        let prep = MatrixRep::projective(p, q);
        let mut img = vec![vec![0i64; dm]; pb.dim()];
        img[0][pk] = 1;
        for (bi, br) in pb.shape.branches.iter().enumerate() {
            let mut v = img[0].clone();
            for k in 1..=br.len {
                v = mrep.act(&v, p.branch_arrow(br.half, k));
                let pos = pb.branch_pos(bi, k);
                if k < br.len || bi == 0 {
                    img[pos] = v.clone();
                }
            }
        }
        let off = cover_q.len();
        cover_q.extend(pb.basis_q.iter().copied());
        images.extend(img);
        reps.push((off, prep));
    }
    let total = cover_q.len();
    // kernel basis via nullspace of the image matrix (rows = coordinates of M)
    let rows: Vec<linalg::SparseRow> = (0..dm)
        .map(|y| (0..total).filter(|&x| images[x][y] != 0).map(|x| (x, images[x][y])).collect())
        .collect();
    let ker = linalg::nullspace(total, &rows);
    let mut dimv = vec![0; p.n_q()];
    // kernel is graded: count per vertex via ranks of the graded pieces
    for q in 0..p.n_q() {
        let cols: Vec<usize> = (0..total).filter(|&x| cover_q[x] == q).collect();
        let sub: Vec<Vec<i64>> = (0..dm).map(|y| cols.iter().map(|&x| images[x][y]).collect()).collect();
        dimv[q] = cols.len() - linalg::rank_dense(&sub);
    }
    // radical of the kernel: span of ker·a over all arrows
    let act = |v: &[BigRational], a: usize| -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); total];
        for (off, rep) in &reps {
            for &(to, from, c) in &rep.action[a] {
                let x = &v[off + from];
                if !x.is_zero() {
                    out[off + to] += x * BigRational::from_integer(c.into());
                }
            }
        }
        out
    };
    let mut radv = vec![0; p.n_q()];
    for q in 0..p.n_q() {
        let mut vecs = Vec::new();
        for v in &ker {
            for a in 0..p.arrows().len() {
                if p.arrow(a).target != q {
                    continue;
                }
                let u = act(v, a);
                if u.iter().any(|x| !x.is_zero()) {
                    vecs.push(u);
                }
            }
        }
        radv[q] = linalg::rank_rational(&vecs);
    }
    let top = dimv.iter().zip(&radv).map(|(d, r)| d - r).collect();
    (dimv, top)
}

/// `dim Hom̲(M, N)`: Hom modulo maps factoring through projectives.
pub fn stable_hom_dim(p: &Presentation, m: &StringModule, n: &StringModule) -> usize {
    let hom = strmod::hom_dim(p, m, n);
    if hom == 0 {
        return 0;
    }
    let dm = m.dim();
    let mut rows: Vec<linalg::SparseRow> = Vec::new();
    for q in 0..p.n_q() {
        let a = strmod::proj_canonical_homs(p, m.word(), q);
        let b = strmod::proj_canonical_homs(p, n.word(), q);
        for phi in &a.into {
            for psi in &b.out_of {
                let c = linalg::matmul(psi, phi);
                let row: linalg::SparseRow = c
                    .iter()
                    .enumerate()
                    .flat_map(|(y, r)| r.iter().enumerate().filter(|(_, v)| **v != 0).map(move |(x, v)| (y * dm + x, *v)))
                    .collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    hom - linalg::rank(&rows)
}

/// Same quantity computed entirely by the matrix oracle.
pub fn oracle_stable_hom_dim(p: &Presentation, m: &StringModule, n: &StringModule) -> usize {
    let (mr, nr) = (MatrixRep::from_word(p, m.word()), MatrixRep::from_word(p, n.word()));
    let hom = strmod::oracle_hom_dim(p, &mr, &nr);
    let mut comps: Vec<Vec<BigRational>> = Vec::new();
    for q in 0..p.n_q() {
        let pr = MatrixRep::projective(p, q);
        let into = strmod::oracle_hom_basis(p, &mr, &pr);
        let out = strmod::oracle_hom_basis(p, &pr, &nr);
        for f in &into {
            for g in &out {
                let mut flat = Vec::with_capacity(nr.dim() * mr.dim());
                for row in g {
                    for x in 0..mr.dim() {
                        let mut s = BigRational::zero();
                        for (k, gk) in row.iter().enumerate() {
                            if !gk.is_zero() && !f[k][x].is_zero() {
                                s += gk * &f[k][x];
                            }
                        }
                        flat.push(s);
                    }
                }
                comps.push(flat);
            }
        }
    }
    hom - linalg::rank_rational(&comps)
}

pub fn stable_end_dim(p: &Presentation, m: &StringModule) -> usize {
    stable_hom_dim(p, m, m)
}

/// `dim Ext¹(M, M) = dim Hom̲(Ω(M), M)`.
pub fn ext1_dim(p: &Presentation, m: &StringModule) -> Result<usize> {
    let om = omega(p, m)?;
    Ok(stable_hom_dim(p, &om, m))
}

/// Period of `M` under `Ω`, if it returns within `bound` steps (default
/// `2|E|`). A dimension sequence that cycles without any isomorphism is
/// reported as [`Error::BoundExceeded`].
pub fn is_periodic(p: &Presentation, m: &StringModule, bound: Option<usize>) -> Result<Option<usize>> {
    let bound = bound.unwrap_or(2 * p.graph().n_edges());
    let mut dims = vec![m.dim()];
    let mut x = m.clone();
    for k in 1..=bound {
        x = omega(p, &x)?;
        if &x == m {
            return Ok(Some(k));
        }
        dims.push(x.dim());
    }
    let cycles = (1..=bound / 2).any(|per| (per..dims.len()).all(|j| dims[j] == dims[j - per]));
    if cycles {
        return Err(Error::BoundExceeded(bound));
    }
    Ok(None)
}

/// The four hook/cohook moves at the two ends of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HookOp {
    /// Add a hook or delete a cohook at the start.
    LeftPlus,
    /// Inverse of `LeftPlus`.
    LeftMinus,
    RightPlus,
    RightMinus,
}

fn side_before_word(p: &Presentation, c: &StringWord) -> usize {
    match c.letters().first() {
        None => c.anchor(),
        Some(l) => {
            let s = l.start_side(p);
            if l.inverse { p.graph().pair(s) } else { s }
        }
    }
}

fn left_plus(p: &Presentation, c: &StringWord) -> Option<StringWord> {
    let g = p.graph();
    let req = side_before_word(p, c);
    let gh = g.sigma_inv(req);
    let ls = c.letters();
    if let Some(ga) = p.arrow_at(gh) {
        let gamma = Letter::direct(ga);
        let run = if ls.first().is_some_and(|l| !l.inverse) { run_right(ls, 0, false) } else { 0 };
        if run < gamma.max_run(p) {
            let dh = g.pair(gh);
            let dl = p.branch_len(dh).saturating_sub(1);
            let mut letters: Vec<Letter> = (1..=dl).rev().map(|k| Letter::inverse(p.branch_arrow(dh, k))).collect();
            letters.push(gamma);
            letters.extend_from_slice(ls);
            return Some(StringWord::from_letters(p, letters).expect("hook addition yields a string"));
        }
    }
    // delete a cohook: the initial direct run and the first inverse letter
    let k = ls.iter().position(|l| l.inverse)?;
    let rest = ls[k + 1..].to_vec();
    if rest.is_empty() {
        Some(StringWord::trivial_side(g.pair(p.arrow(ls[k].arrow).half)))
    } else {
        Some(StringWord::from_letters(p, rest).expect("subword of a string"))
    }
}

fn left_minus(p: &Presentation, c: &StringWord) -> Option<StringWord> {
    let g = p.graph();
    let bh = g.pair(side_before_word(p, c));
    let ls = c.letters();
    if let Some(ba) = p.arrow_at(bh) {
        let beta = Letter::inverse(ba);
        let run = if ls.first().is_some_and(|l| l.inverse) { run_right(ls, 0, true) } else { 0 };
        if run < beta.max_run(p) {
            let last = g.sigma_inv(g.pair(g.sigma(bh)));
            let el = p.branch_len(last).saturating_sub(1);
            let mut halves = Vec::with_capacity(el);
            let mut h = last;
            for _ in 0..el {
                halves.push(h);
                h = g.sigma_inv(h);
            }
            let mut letters: Vec<Letter> =
                halves.iter().rev().map(|&h| Letter::direct(p.arrow_at(h).expect("non-truncated"))).collect();
            letters.push(beta);
            letters.extend_from_slice(ls);
            return Some(StringWord::from_letters(p, letters).expect("cohook addition yields a string"));
        }
    }
    // delete a hook: the initial inverse run and the first direct letter
    let k = ls.iter().position(|l| !l.inverse)?;
    let rest = ls[k + 1..].to_vec();
    if rest.is_empty() {
        Some(StringWord::trivial_side(g.sigma(p.arrow(ls[k].arrow).half)))
    } else {
        Some(StringWord::from_letters(p, rest).expect("subword of a string"))
    }
}

/// Apply a hook move to an oriented word; `None` means the move gives zero.
pub fn apply(p: &Presentation, op: HookOp, c: &StringWord) -> Option<StringWord> {
    match op {
        HookOp::LeftPlus => left_plus(p, c),
        HookOp::LeftMinus => left_minus(p, c),
        HookOp::RightPlus => left_plus(p, &c.inverse(p)).map(|w| w.inverse(p)),
        HookOp::RightMinus => left_minus(p, &c.inverse(p)).map(|w| w.inverse(p)),
    }
}

/// Targets of the irreducible maps out of `M`.
pub fn hooks(p: &Presentation, m: &StringModule) -> Vec<StringModule> {
    [HookOp::LeftPlus, HookOp::RightPlus]
        .into_iter()
        .filter_map(|op| apply(p, op, m.word()))
        .map(|w| StringModule::new(p, &w))
        .collect()
}

/// Sources of the irreducible maps into `M`.
pub fn cohooks(p: &Presentation, m: &StringModule) -> Vec<StringModule> {
    [HookOp::LeftMinus, HookOp::RightMinus]
        .into_iter()
        .filter_map(|op| apply(p, op, m.word()))
        .map(|w| StringModule::new(p, &w))
        .collect()
}

/// `τ⁻¹` via both hook additions. At a tube mouth one side is blocked
/// until the other side has grown, so both orders are tried.
pub fn tau_inv(p: &Presentation, m: &StringModule) -> Option<StringModule> {
    let w = m.word();
    let lr = apply(p, HookOp::LeftPlus, w).and_then(|x| apply(p, HookOp::RightPlus, &x));
    let w = lr.or_else(|| apply(p, HookOp::RightPlus, w).and_then(|x| apply(p, HookOp::LeftPlus, &x)))?;
    Some(StringModule::new(p, &w))
}

/// `start, op(start), op²(start), …` with `len` entries, stopping early if a
/// move gives zero.
pub fn diagonal(p: &Presentation, start: &StringWord, len: usize, op: HookOp) -> Vec<StringWord> {
    let mut out = vec![start.clone()];
    while out.len() < len {
        match apply(p, op, out.last().expect("nonempty")) {
            Some(w) => out.push(w),
            None => break,
        }
    }
    out
}

/// Boundary module for half-edge `h`: the maximal uniserial submodule of
/// `P(edge h)` along `h`, or the simple when `h` sits at a truncated vertex.
pub fn boundary_module(p: &Presentation, h: usize) -> StringWord {
    let lb = p.branch_len(h);
    if lb == 0 {
        return StringWord::trivial_side(p.graph().pair(h));
    }
    if lb == 1 {
        return StringWord::trivial_side(h);
    }
    let letters = (1..lb).map(|k| Letter::direct(p.branch_arrow(h, k))).collect();
    StringWord::from_letters(p, letters).expect("uniserial string")
}

/// All boundary modules, one per half-edge, in half-edge order.
pub fn boundary_modules(p: &Presentation) -> Vec<StringModule> {
    (0..p.graph().n_half_edges()).map(|h| StringModule::new(p, &boundary_module(p, h))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentAddress {
    ExceptionalTube {
        /// 1-based index of the double-stepped Green walk.
        tube_id: usize,
        rank: usize,
        d: usize,
        /// Half-edge of the boundary module the ray starts from.
        boundary_half: usize,
    },
    ZaInfinityInfinity {
        /// `(t, j, k)`: `Ω^k(M)` is position `j` of the diagonal through `S(t)`.
        diagonal: Option<(usize, usize, i64)>,
    },
}

impl ComponentAddress {
    pub fn tube_id(&self) -> Option<usize> {
        match self {
            ComponentAddress::ExceptionalTube { tube_id, .. } => Some(*tube_id),
            _ => None,
        }
    }
    pub fn d(&self) -> Option<usize> {
        match self {
            ComponentAddress::ExceptionalTube { d, .. } => Some(*d),
            _ => None,
        }
    }
}

/// Find the mouth module and ray index of a periodic module.
pub fn locate_in_tube(p: &Presentation, m: &StringModule) -> Option<ComponentAddress> {
    let g = p.graph();
    let walks = g.double_stepped_walks();
    for h in 0..g.n_half_edges() {
        let b = boundary_module(p, h);
        let tube = g.double_walk_of(h);
        let rank = walks[tube].len();
        let max_steps = rank * (m.dim() + 2);
        for op in [HookOp::LeftPlus, HookOp::RightPlus] {
            let mut w = b.clone();
            for d in 0..=max_steps {
                if w.same_module(m.word(), p) {
                    return Some(ComponentAddress::ExceptionalTube { tube_id: tube + 1, rank, d, boundary_half: h });
                }
                match apply(p, op, &w) {
                    Some(x) => w = x,
                    None => break,
                }
            }
        }
    }
    None
}

/// The diagonal through a non-periodic simple in an Ω-stable component,
/// when the star parameters put it in one of the two described cases.
/// Positions are generated by [`HookOp::RightPlus`] from `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleDiagonal {
    pub t: usize,
    /// 1: `m_{t+1} = 2`; 2: `i = 1`, `m_0 = 2`, `m_1 > 2`.
    pub case: u8,
    pub start: StringWord,
}

impl SimpleDiagonal {
    pub fn positions(&self, p: &Presentation, len: usize) -> Vec<StringWord> {
        diagonal(p, &self.start, len, HookOp::RightPlus)
    }
}

/// Diagonals `D_t` for every non-periodic simple `S(t)` with Ω-stable
/// component on a star.
pub fn simple_diagonals(p: &Presentation) -> Vec<SimpleDiagonal> {
    let Ok(ss) = p.star_strings() else { return Vec::new() };
    let (n, i) = (ss.n(), ss.i());
    let mut out = Vec::new();
    for t in 0..=n {
        let s = StringModule::simple(p, t);
        if !matches!(is_periodic(p, &s, None), Ok(None)) {
            continue;
        }
        if ss.m(t + 1) == 2 {
            // Ω⁻¹(S(t)) oriented to begin with δ_t⁻¹
            let w = omega_inv(p, &s).expect("simple is not projective").word().clone();
            let d = p.arrow_index(&format!("d{t}"));
            let starts = |w: &StringWord| w.letters().first().is_some_and(|l| l.inverse && Some(l.arrow) == d);
            let start = if starts(&w) { w } else { w.inverse(p) };
            out.push(SimpleDiagonal { t, case: 1, start });
        } else if i == 1 && t == 0 && ss.m(0) == 2 && ss.m(1) > 2 {
            out.push(SimpleDiagonal { t, case: 2, start: ss.x(1, 0).expect("x_{1,0}") });
        }
    }
    out
}

/// Locate `M` in the stable AR quiver.
pub fn locate(p: &Presentation, m: &StringModule) -> Result<ComponentAddress> {
    if is_projective(p, m) {
        return Err(Error::ProjectiveInput);
    }
    if is_periodic(p, m, None)?.is_some() {
        if let Some(a) = locate_in_tube(p, m) {
            return Ok(a);
        }
    }
    Ok(ComponentAddress::ZaInfinityInfinity { diagonal: diagonal_position(p, m)? })
}

/// `(t, j, k)` with `Ω^k(M) = M_j` on the diagonal `D_t`.
pub fn diagonal_position(p: &Presentation, m: &StringModule) -> Result<Option<(usize, usize, i64)>> {
    let diags = simple_diagonals(p);
    if diags.is_empty() {
        return Ok(None);
    }
    let e = p.graph().n_edges() as i64;
    let kmax = 4 * e + 4;
    let mut orbit: HashMap<StringModule, i64> = HashMap::new();
    orbit.insert(m.clone(), 0);
    let (mut up, mut down) = (m.clone(), m.clone());
    for k in 1..=kmax {
        up = omega(p, &up)?;
        down = omega_inv(p, &down)?;
        orbit.entry(up.clone()).or_insert(k);
        orbit.entry(down.clone()).or_insert(-k);
    }
    let jmax = 2 * (e as usize) + 2;
    let mut best: Option<(usize, usize, i64)> = None;
    for d in &diags {
        for (j, w) in d.positions(p, jmax + 1).iter().enumerate() {
            if let Some(&k) = orbit.get(&StringModule::new(p, w)) {
                // Ω^k(M) = M_j, so M = Ω^{-k}(M_j)
                let cand = (d.t, j, k);
                if best.is_none_or(|b| (j, k.abs()) < (b.1, b.2.abs())) {
                    best = Some(cand);
                }
                break;
            }
        }
    }
    Ok(best)
}

/// Witness row: a boundary module, its tube, `Ω` of it and that tube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapWitness {
    pub boundary: String,
    pub tube: usize,
    pub omega: String,
    pub omega_tube: usize,
}

pub fn omega_swaps_tubes(p: &Presentation) -> Result<(bool, Vec<SwapWitness>)> {
    let g = p.graph();
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let gc = ribbon::growth_class(g);
    if gc != GrowthClass::NonPolynomial {
        return Err(Error::GrowthClassUnsupported(gc.to_string()));
    }
    let mut rows = Vec::new();
    let mut ok = true;
    for b in boundary_modules(p) {
        let ob = omega(p, &b)?;
        let t1 = locate_in_tube(p, &b).and_then(|a| a.tube_id()).unwrap_or(0);
        let t2 = locate_in_tube(p, &ob).and_then(|a| a.tube_id()).unwrap_or(0);
        ok &= t1 != 0 && t2 != 0 && t1 != t2;
        rows.push(SwapWitness { boundary: b.display(p), tube: t1, omega: ob.display(p), omega_tube: t2 });
    }
    Ok((ok, rows))
}

/// `m_{t+1} = 2`, or `i = 1`, `t = 0`, `m_0 = 2`.
pub fn omega_stable_simple_component(p: &Presentation, t: usize) -> Result<bool> {
    let ss = p.star_strings()?;
    if t > ss.n() {
        return Err(Error::IndexOutOfFamily(format!("no q-vertex {t}")));
    }
    if is_periodic(p, &StringModule::simple(p, t), None)?.is_some() {
        return Err(Error::PeriodicSimple(t));
    }
    Ok(ss.m(t + 1) == 2 || (ss.i() == 1 && t == 0 && ss.m(0) == 2))
}

/// Breadth-first search through hook moves: is `n` within `radius` moves
/// of `m`? Used as an independent same-component check.
pub fn within_moves(p: &Presentation, m: &StringModule, n: &StringModule, radius: usize) -> bool {
    let mut seen: HashMap<StringModule, usize> = HashMap::new();
    let mut q = VecDeque::from([(m.word().clone(), 0usize)]);
    seen.insert(m.clone(), 0);
    while let Some((w, d)) = q.pop_front() {
        if StringModule::new(p, &w) == *n {
            return true;
        }
        if d == radius {
            continue;
        }
        for op in [HookOp::LeftPlus, HookOp::RightPlus, HookOp::LeftMinus, HookOp::RightMinus] {
            if let Some(x) = apply(p, op, &w) {
                let key = StringModule::new(p, &x);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(key) {
                    e.insert(d + 1);
                    q.push_back((x, d + 1));
                }
            }
        }
    }
    false
}

/// A window of the component around `M`: nodes at hook coordinates
/// `(a, b)` with `|a|, |b| <= radius`, merged by module.
#[derive(Debug, Clone, Serialize)]
pub struct Window {
    pub nodes: Vec<WindowNode>,
    /// Irreducible maps as node index pairs.
    pub arrows: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WindowNode {
    pub word: String,
    pub coords: (i64, i64),
    pub label: String,
}

pub fn component_window(p: &Presentation, m: &StringModule, radius: usize) -> Window {
    let r = radius as i64;
    let mut index: BTreeMap<StringModule, usize> = BTreeMap::new();
    let mut nodes = Vec::new();
    let mut arrows = std::collections::BTreeSet::new();
    let mut q = VecDeque::new();
    let add = |w: &StringWord, c: (i64, i64), nodes: &mut Vec<WindowNode>, index: &mut BTreeMap<StringModule, usize>| -> (usize, bool) {
        let key = StringModule::new(p, w);
        if let Some(&i) = index.get(&key) {
            return (i, false);
        }
        let i = nodes.len();
        nodes.push(WindowNode { word: key.display(p), coords: c, label: String::new() });
        index.insert(key, i);
        (i, true)
    };
    let (root, _) = add(m.word(), (0, 0), &mut nodes, &mut index);
    q.push_back((m.word().clone(), (0i64, 0i64), root));
    while let Some((w, (a, b), i)) = q.pop_front() {
        let moves = [
            (HookOp::LeftPlus, (a + 1, b), true),
            (HookOp::RightPlus, (a, b + 1), true),
            (HookOp::LeftMinus, (a - 1, b), false),
            (HookOp::RightMinus, (a, b - 1), false),
        ];
        for (op, c, out) in moves {
            if c.0.abs() > r || c.1.abs() > r {
                continue;
            }
            if let Some(x) = apply(p, op, &w) {
                let (j, fresh) = add(&x, c, &mut nodes, &mut index);
                arrows.insert(if out { (i, j) } else { (j, i) });
                if fresh {
                    q.push_back((x, c, j));
                }
            }
        }
    }
    Window { nodes, arrows: arrows.into_iter().collect() }
}

impl Window {
    pub fn label_with(&mut self, f: impl Fn(&str) -> String) {
        for n in &mut self.nodes {
            n.label = f(&n.word);
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph component {\n  rankdir=LR;\n  node [shape=box];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let label = if n.label.is_empty() { n.word.clone() } else { format!("{}\\n{}", n.word, n.label) };
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", label.replace('"', "\\\"")));
        }
        for (a, b) in &self.arrows {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Family tag helper for reports.
pub fn family_name(p: &Presentation) -> String {
    match p.family() {
        Family::Star { n, mbar } => {
            let m: Vec<String> = mbar.iter().map(|x| x.to_string()).collect();
            format!("W_{{{n},({})}}", m.join(","))
        }
        Family::Koszul { n, l, m, .. } => format!("Koszul(n={n}, l={l}, m={m})"),
        Family::General => "general".to_string(),
    }
}
