//! String words, string modules, canonical homomorphisms and the matrix
//! oracle.
//!
//! Modules are right modules. In a word `l_0 l_1 … l_{L-1}` with basis
//! `x_0 … x_L`, a direct letter `a` at position `p` means `x_p·a = x_{p+1}`
//! and an inverse letter `a⁻¹` means `x_{p+1}·a = x_p`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseRow};
use crate::presentation::{Presentation, ProjectiveShape};

/// An arrow or its formal inverse. Ordered by `(arrow, inverse)`, direct first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Letter {
        Letter { arrow, inverse: false }
    }
    pub fn inverse(arrow: usize) -> Letter {
        Letter { arrow, inverse: true }
    }
    pub fn inv(self) -> Letter {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }
    pub fn start_q(self, p: &Presentation) -> usize {
        let a = p.arrow(self.arrow);
        if self.inverse { a.target } else { a.source }
    }
    pub fn end_q(self, p: &Presentation) -> usize {
        let a = p.arrow(self.arrow);
        if self.inverse { a.source } else { a.target }
    }
    /// Half-edge side the letter leaves from.
    pub fn start_side(self, p: &Presentation) -> usize {
        let h = p.arrow(self.arrow).half;
        if self.inverse { p.graph().sigma(h) } else { h }
    }
    /// Half-edge side the letter arrives on.
    pub fn end_side(self, p: &Presentation) -> usize {
        let h = p.arrow(self.arrow).half;
        if self.inverse { h } else { p.graph().sigma(h) }
    }
    /// Maximal run length of letters of this arrow's vertex in `Λ_s`.
    pub fn max_run(self, p: &Presentation) -> usize {
        p.branch_len(p.arrow(self.arrow).half) - 1
    }
}

/// Side on which the next letter must start, given the previous end side.
pub(crate) fn compatible(p: &Presentation, prev: Letter, next: Letter) -> bool {
    let e = prev.end_side(p);
    let s = next.start_side(p);
    if prev.inverse == next.inverse { s == e } else { s == p.graph().pair(e) }
}

/// A string: a reduced walk whose runs are nonzero in `Λ_s`. The empty word
/// carries an anchor half-edge that fixes its left/right orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringWord {
    letters: Vec<Letter>,
    anchor: usize,
}

impl StringWord {
    /// Trivial word at q-vertex `q`, anchored at the least half-edge.
    pub fn trivial_at(p: &Presentation, q: usize) -> StringWord {
        StringWord { letters: Vec::new(), anchor: p.q_halves(q).0 }
    }
    /// Trivial word with an explicit side.
    pub fn trivial_side(anchor: usize) -> StringWord {
        StringWord { letters: Vec::new(), anchor }
    }

    /// Validate a letter sequence.
    pub fn from_letters(p: &Presentation, letters: Vec<Letter>) -> Result<StringWord> {
        if letters.is_empty() {
            return Err(Error::Format("empty letter list; use a trivial word".into()));
        }
        let mut run = 1;
        for k in 0..letters.len() {
            if letters[k].arrow >= p.arrows().len() {
                return Err(Error::UnknownArrow(format!("#{}", letters[k].arrow)));
            }
            if k > 0 {
                let (a, b) = (letters[k - 1], letters[k]);
                if a.end_q(p) != b.start_q(p) {
                    return Err(Error::NonComposable(k - 1, k));
                }
                if a.arrow == b.arrow && a.inverse != b.inverse {
                    return Err(Error::InverseCancellation(k - 1, k));
                }
                if !compatible(p, a, b) {
                    return Err(Error::ZeroSubpath(k));
                }
                run = if a.inverse == b.inverse { run + 1 } else { 1 };
            }
            if run > letters[k].max_run(p) {
                return Err(Error::ZeroSubpath(k));
            }
        }
        let anchor = letters[0].start_side(p);
        Ok(StringWord { letters, anchor })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }
    pub fn len(&self) -> usize {
        self.letters.len()
    }
    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
    /// Side marker of a trivial word.
    pub fn anchor(&self) -> usize {
        self.anchor
    }
    pub fn dim(&self) -> usize {
        self.letters.len() + 1
    }
    pub fn start_q(&self, p: &Presentation) -> usize {
        match self.letters.first() {
            Some(l) => l.start_q(p),
            None => p.q_of_half(self.anchor),
        }
    }
    pub fn end_q(&self, p: &Presentation) -> usize {
        match self.letters.last() {
            Some(l) => l.end_q(p),
            None => p.q_of_half(self.anchor),
        }
    }
    /// q-vertex of basis position `pos`.
    pub fn q_at(&self, p: &Presentation, pos: usize) -> usize {
        if pos == 0 { self.start_q(p) } else { self.letters[pos - 1].end_q(p) }
    }

    /// `C⁻¹`.
    pub fn inverse(&self, p: &Presentation) -> StringWord {
        if self.is_trivial() {
            return StringWord { letters: Vec::new(), anchor: p.graph().pair(self.anchor) };
        }
        let letters: Vec<Letter> = self.letters.iter().rev().map(|l| l.inv()).collect();
        let anchor = letters[0].start_side(p);
        StringWord { letters, anchor }
    }

    /// `min(C, C⁻¹)`; trivial words are re-anchored at the least half-edge.
    pub fn canonical(&self, p: &Presentation) -> StringWord {
        if self.is_trivial() {
            return StringWord::trivial_at(p, self.start_q(p));
        }
        let inv = self.inverse(p);
        if inv.letters < self.letters { inv } else { self.clone() }
    }

    pub fn same_module(&self, other: &StringWord, p: &Presentation) -> bool {
        self.canonical(p) == other.canonical(p)
    }

    /// Positions not in the image of any letter (the top).
    pub fn peaks(&self) -> Vec<usize> {
        let l = &self.letters;
        (0..=l.len())
            .filter(|&p| (p == 0 || l[p - 1].inverse) && (p == l.len() || !l[p].inverse))
            .collect()
    }
    /// Positions killed by every arrow (the socle).
    pub fn deeps(&self) -> Vec<usize> {
        let l = &self.letters;
        (0..=l.len())
            .filter(|&p| (p == 0 || !l[p - 1].inverse) && (p == l.len() || l[p].inverse))
            .collect()
    }

    /// Subword on positions `a..=b`, oriented as in `self`.
    pub fn sub(&self, p: &Presentation, a: usize, b: usize) -> StringWord {
        if a == b {
            let q = self.q_at(p, a);
            // keep a side consistent with the surrounding letters when possible
            let anchor = if a < self.letters.len() {
                side_before(p, self.letters[a])
            } else if a > 0 {
                side_after(p, self.letters[a - 1])
            } else {
                self.anchor
            };
            debug_assert_eq!(p.q_of_half(anchor), q);
            return StringWord { letters: Vec::new(), anchor };
        }
        let letters = self.letters[a..b].to_vec();
        let anchor = letters[0].start_side(p);
        StringWord { letters, anchor }
    }

    pub fn display(&self, p: &Presentation) -> String {
        if self.is_trivial() {
            return format!("e{}", p.q_name(p.q_of_half(self.anchor)));
        }
        self.letters
            .iter()
            .map(|l| format!("{}{}", if l.inverse { "-" } else { "" }, p.arrow(l.arrow).id))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Dimension vector indexed by q-vertex.
    pub fn dim_vector(&self, p: &Presentation) -> Vec<usize> {
        let mut v = vec![0; p.n_q()];
        for pos in 0..=self.len() {
            v[self.q_at(p, pos)] += 1;
        }
        v
    }
}

/// Side of a trivial word that a letter could follow (acts as a virtual
/// direct letter whose start and end side coincide).
fn side_before(p: &Presentation, next: Letter) -> usize {
    let s = next.start_side(p);
    if next.inverse { p.graph().pair(s) } else { s }
}

fn side_after(p: &Presentation, prev: Letter) -> usize {
    let e = prev.end_side(p);
    if prev.inverse { p.graph().pair(e) } else { e }
}

/// Parse the word syntax: whitespace-separated arrow ids, `-` marks an
/// inverse, `e<q>` is a trivial word. A parenthesised word denotes a band
/// and is rejected.
pub fn parse_word(text: &str, p: &Presentation) -> Result<StringWord> {
    let t = text.trim();
    if t.starts_with('(') {
        return Err(Error::BandModule);
    }
    let tokens: Vec<&str> = t.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(Error::Format("empty word".into()));
    }
    if tokens.len() == 1 && tokens[0].starts_with('e') && p.arrow_index(tokens[0]).is_none() {
        let name = &tokens[0][1..];
        let q = (0..p.n_q())
            .find(|&q| p.q_name(q) == name)
            .ok_or_else(|| Error::Format(format!("unknown vertex `{name}`")))?;
        return Ok(StringWord::trivial_at(p, q));
    }
    let mut letters = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let (inv, id) = match tok.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, tok),
        };
        let a = p.arrow_index(id).ok_or_else(|| Error::UnknownArrow(id.to_string()))?;
        letters.push(Letter { arrow: a, inverse: inv });
    }
    StringWord::from_letters(p, letters)
}

/// A string module: the canonical representative of `C ~ C⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringModule {
    word: StringWord,
}

impl StringModule {
    pub fn new(p: &Presentation, word: &StringWord) -> StringModule {
        StringModule { word: word.canonical(p) }
    }
    pub fn parse(text: &str, p: &Presentation) -> Result<StringModule> {
        Ok(StringModule::new(p, &parse_word(text, p)?))
    }
    pub fn simple(p: &Presentation, q: usize) -> StringModule {
        StringModule { word: StringWord::trivial_at(p, q) }
    }
    pub fn word(&self) -> &StringWord {
        &self.word
    }
    pub fn dim(&self) -> usize {
        self.word.dim()
    }
    pub fn display(&self, p: &Presentation) -> String {
        self.word.display(p)
    }
    pub fn top(&self, p: &Presentation) -> Vec<usize> {
        self.word.peaks().into_iter().map(|x| self.word.q_at(p, x)).collect()
    }
    pub fn socle(&self, p: &Presentation) -> Vec<usize> {
        self.word.deeps().into_iter().map(|x| self.word.q_at(p, x)).collect()
    }
}

/// `M[C] ↠ M[S] ↪ M[D]`, with `S` occupying `c_interval` in `C` and
/// `d_interval` in `D` (read backwards when `reversed`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalHom {
    pub c_interval: (usize, usize),
    pub d_interval: (usize, usize),
    pub reversed: bool,
}

impl CanonicalHom {
    /// Image of basis position `x` of `C`, if inside the factor interval.
    pub fn image(&self, x: usize) -> Option<usize> {
        let (a, b) = self.c_interval;
        if x < a || x > b {
            return None;
        }
        let k = x - a;
        Some(if self.reversed { self.d_interval.1 - k } else { self.d_interval.0 + k })
    }
    pub fn rank(&self) -> usize {
        self.c_interval.1 - self.c_interval.0 + 1
    }
}

/// Intervals `[a,b]` of `C` that are factor strings.
pub fn factor_intervals(c: &StringWord) -> Vec<(usize, usize)> {
    let l = c.letters();
    let n = l.len();
    let mut out = Vec::new();
    for a in 0..=n {
        if a > 0 && !l[a - 1].inverse {
            continue;
        }
        for b in a..=n {
            if b == n || !l[b].inverse {
                out.push((a, b));
            }
        }
    }
    out
}

/// Intervals `[c,d]` of `D` that are substrings giving submodules.
pub fn sub_intervals(d: &StringWord) -> Vec<(usize, usize)> {
    let l = d.letters();
    let n = l.len();
    let mut out = Vec::new();
    for a in 0..=n {
        if a > 0 && l[a - 1].inverse {
            continue;
        }
        for b in a..=n {
            if b == n || l[b].inverse {
                out.push((a, b));
            }
        }
    }
    out
}

/// Every canonical homomorphism `M[C] → M[D]`, scanned by
/// `(start in C, start in D)`.
pub fn canonical_homs_words(p: &Presentation, c: &StringWord, d: &StringWord) -> Vec<CanonicalHom> {
    let fi = factor_intervals(c);
    let si = sub_intervals(d);
    let cl = c.letters();
    let dl = d.letters();
    let mut out = Vec::new();
    for &(a, b) in &fi {
        for &(x, y) in &si {
            if b - a != y - x {
                continue;
            }
            if a == b {
                if c.q_at(p, a) == d.q_at(p, x) {
                    out.push(CanonicalHom { c_interval: (a, b), d_interval: (x, y), reversed: false });
                }
                continue;
            }
            if cl[a..b] == dl[x..y] {
                out.push(CanonicalHom { c_interval: (a, b), d_interval: (x, y), reversed: false });
            }
            let len = b - a;
            if (0..len).all(|k| cl[a + k] == dl[y - 1 - k].inv()) {
                out.push(CanonicalHom { c_interval: (a, b), d_interval: (x, y), reversed: true });
            }
        }
    }
    out.sort_by_key(|h| (h.c_interval.0, h.d_interval.0, h.c_interval.1, h.reversed));
    out
}

pub fn canonical_homs(p: &Presentation, m: &StringModule, n: &StringModule) -> Vec<CanonicalHom> {
    canonical_homs_words(p, m.word(), n.word())
}

pub fn hom_dim(p: &Presentation, m: &StringModule, n: &StringModule) -> usize {
    canonical_homs(p, m, n).len()
}

/// Dense `dim N × dim M` 0/1 matrix in the position bases.
pub fn hom_matrix(h: &CanonicalHom, dim_m: usize, dim_n: usize) -> Vec<Vec<i64>> {
    let mut f = vec![vec![0i64; dim_m]; dim_n];
    for x in 0..dim_m {
        if let Some(y) = h.image(x) {
            f[y][x] = 1;
        }
    }
    f
}

/// A representation of the bound quiver in a fixed basis. Actions are
/// stored per arrow as `(to, from, coefficient)`: `b_from · a = c · b_to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    /// q-vertex of each basis vector.
    pub basis_q: Vec<usize>,
    pub action: Vec<Vec<(usize, usize, i64)>>,
}

impl MatrixRep {
    pub fn dim(&self) -> usize {
        self.basis_q.len()
    }

    pub fn dims(&self, p: &Presentation) -> Vec<usize> {
        let mut d = vec![0; p.n_q()];
        for &q in &self.basis_q {
            d[q] += 1;
        }
        d
    }

    pub fn from_word(p: &Presentation, w: &StringWord) -> MatrixRep {
        let basis_q = (0..=w.len()).map(|pos| w.q_at(p, pos)).collect();
        let mut action = vec![Vec::new(); p.arrows().len()];
        for (pos, l) in w.letters().iter().enumerate() {
            if l.inverse {
                action[l.arrow].push((pos, pos + 1, 1));
            } else {
                action[l.arrow].push((pos + 1, pos, 1));
            }
        }
        MatrixRep { basis_q, action }
    }

    /// Projective `P(q)` in the basis `e, L_1.., R_1.., soc` of
    /// [`projective_basis`].
    pub fn projective(p: &Presentation, q: usize) -> MatrixRep {
        let pb = projective_basis(p, q);
        let mut action = vec![Vec::new(); p.arrows().len()];
        for (bi, br) in pb.shape.branches.iter().enumerate() {
            for k in 1..=br.len {
                let a = p.branch_arrow(br.half, k);
                let from = pb.branch_pos(bi, k - 1);
                let to = pb.branch_pos(bi, k);
                action[a].push((to, from, 1));
            }
        }
        MatrixRep { basis_q: pb.basis_q.clone(), action }
    }

    /// Apply the path of arrows to a vector.
    pub fn act(&self, v: &[i64], a: usize) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for &(to, from, c) in &self.action[a] {
            out[to] += c * v[from];
        }
        out
    }

    pub fn act_path(&self, v: &[i64], path: &[usize]) -> Vec<i64> {
        path.iter().fold(v.to_vec(), |acc, &a| self.act(&acc, a))
    }

    /// Check every relation of the presentation on every basis vector.
    pub fn satisfies_relations(&self, p: &Presentation) -> bool {
        let rel = p.relations();
        let n = self.dim();
        let unit = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        (0..n).all(|i| {
            let v = unit(i);
            rel.type1.iter().all(|(x, y)| {
                let (sx, sy) = (p.arrow(x[0]).source, p.arrow(y[0]).source);
                if self.basis_q[i] != sx || sx != sy {
                    return true;
                }
                self.act_path(&v, x) == self.act_path(&v, y)
            }) && rel.type2.iter().all(|path| self.act_path(&v, path).iter().all(|&c| c == 0))
                && rel.type3.iter().all(|&(a, b)| self.act_path(&v, &[a, b]).iter().all(|&c| c == 0))
        })
    }
}

/// Basis of `P(q)`: index 0 is the top `e`, then the interior of each
/// branch, then the socle. For a single branch the socle is its last vertex.
#[derive(Debug, Clone)]
pub struct ProjectiveBasis {
    pub shape: ProjectiveShape,
    pub basis_q: Vec<usize>,
    offsets: Vec<usize>,
    soc: usize,
}

impl ProjectiveBasis {
    /// Basis index of the element reached after `k` arrows on branch `b`.
    pub fn branch_pos(&self, b: usize, k: usize) -> usize {
        let len = self.shape.branches[b].len;
        if k == 0 {
            0
        } else if k == len {
            self.soc
        } else {
            self.offsets[b] + k - 1
        }
    }
    pub fn soc(&self) -> usize {
        self.soc
    }
    pub fn dim(&self) -> usize {
        self.basis_q.len()
    }
}

pub fn projective_basis(p: &Presentation, q: usize) -> ProjectiveBasis {
    let shape = p.projective(q);
    let mut basis_q = vec![q];
    let mut offsets = Vec::new();
    for br in &shape.branches {
        offsets.push(basis_q.len());
        for k in 1..br.len {
            basis_q.push(p.branch_vertex(br.half, k));
        }
    }
    let soc = if shape.branches.is_empty() {
        0
    } else {
        basis_q.push(q);
        basis_q.len() - 1
    };
    ProjectiveBasis { shape, basis_q, offsets, soc }
}

/// Equations `N_a f = f M_a` over the unknown blocks `f_q: M_q → N_q`.
fn intertwiner_system(
    p_arrows: &[(usize, usize)],
    m: &MatrixRep,
    n: &MatrixRep,
) -> (Vec<(usize, usize)>, Vec<SparseRow>) {
    let mut var = HashMap::new();
    for (y, &qy) in n.basis_q.iter().enumerate() {
        for (x, &qx) in m.basis_q.iter().enumerate() {
            if qx == qy {
                let k = var.len();
                var.insert((y, x), k);
            }
        }
    }
    let at = |r: &MatrixRep, q: usize| -> Vec<usize> { (0..r.dim()).filter(|&i| r.basis_q[i] == q).collect() };
    let mut rows = Vec::new();
    for (a, &(s, t)) in p_arrows.iter().enumerate() {
        let mut n_by_to: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
        for &(to, from, c) in &n.action[a] {
            n_by_to.entry(to).or_default().push((from, c));
        }
        let mut m_by_from: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
        for &(to, from, c) in &m.action[a] {
            m_by_from.entry(from).or_default().push((to, c));
        }
        for &y in &at(n, t) {
            for &x in &at(m, s) {
                let mut row: SparseRow = Vec::new();
                for &(yp, c) in n_by_to.get(&y).into_iter().flatten() {
                    row.push((var[&(yp, x)], c));
                }
                for &(xp, c) in m_by_from.get(&x).into_iter().flatten() {
                    row.push((var[&(y, xp)], -c));
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let mut vars = vec![(0, 0); var.len()];
    for (k, v) in var {
        vars[v] = k;
    }
    (vars, rows)
}

/// `dim Hom(M, N)` by exact nullspace of the intertwiner equations.
pub fn oracle_hom_dim(p: &Presentation, m: &MatrixRep, n: &MatrixRep) -> usize {
    let arrows: Vec<(usize, usize)> = p.arrows().iter().map(|a| (a.source, a.target)).collect();
    let (vars, rows) = intertwiner_system(&arrows, m, n);
    linalg::nullity(vars.len(), &rows)
}

/// A basis of `Hom(M, N)` from the oracle, as dense `dim N × dim M` matrices.
pub fn oracle_hom_basis(p: &Presentation, m: &MatrixRep, n: &MatrixRep) -> Vec<Vec<Vec<BigRational>>> {
    let arrows: Vec<(usize, usize)> = p.arrows().iter().map(|a| (a.source, a.target)).collect();
    let (vars, rows) = intertwiner_system(&arrows, m, n);
    linalg::nullspace(vars.len(), &rows)
        .into_iter()
        .map(|v| {
            let mut f = vec![vec![BigRational::zero(); m.dim()]; n.dim()];
            for (k, &(y, x)) in vars.iter().enumerate() {
                f[y][x] = v[k].clone();
            }
            f
        })
        .collect()
}

/// True if the dense `dim N × dim M` matrix intertwines the two actions.
pub fn intertwines(f: &[Vec<i64>], m: &MatrixRep, n: &MatrixRep) -> bool {
    for (y, row) in f.iter().enumerate() {
        for (x, &c) in row.iter().enumerate() {
            if c != 0 && m.basis_q[x] != n.basis_q[y] {
                return false;
            }
        }
    }
    let dense = |r: &MatrixRep, a: usize| {
        let mut out = vec![vec![0i64; r.dim()]; r.dim()];
        for &(to, from, c) in &r.action[a] {
            out[to][from] += c;
        }
        out
    };
    (0..m.action.len()).all(|a| linalg::matmul(&dense(n, a), f) == linalg::matmul(f, &dense(m, a)))
}

/// Maps `M → P(q)` (through `rad P(q)`) and `P(q) → M` (through
/// `P(q)/soc`), each as a dense matrix in the position/projective bases.
#[derive(Debug, Clone)]
pub struct ProjHoms {
    pub into: Vec<Vec<Vec<i64>>>,
    pub out_of: Vec<Vec<Vec<i64>>>,
}

/// `rad P(q)` as a word with, for each position, its index in the
/// projective basis.
pub fn radical_word(p: &Presentation, q: usize) -> Option<(StringWord, Vec<usize>)> {
    let pb = projective_basis(p, q);
    let brs = &pb.shape.branches;
    match brs.len() {
        0 => None,
        1 => {
            let b = &brs[0];
            if b.len == 1 {
                let w = StringWord::trivial_side(p.branch_side(b.half, 1));
                return Some((w, vec![pb.soc()]));
            }
            let letters = (2..=b.len).map(|k| Letter::direct(p.branch_arrow(b.half, k))).collect();
            let pos = (1..=b.len).map(|k| pb.branch_pos(0, k)).collect();
            Some((StringWord::from_letters(p, letters).expect("radical is a string"), pos))
        }
        _ => {
            let (l, r) = (&brs[0], &brs[1]);
            let mut letters = Vec::new();
            let mut pos = Vec::new();
            for k in 1..l.len {
                pos.push(pb.branch_pos(0, k));
                letters.push(Letter::direct(p.branch_arrow(l.half, k + 1)));
            }
            pos.push(pb.soc());
            for k in (1..r.len).rev() {
                letters.push(Letter::inverse(p.branch_arrow(r.half, k + 1)));
                pos.push(pb.branch_pos(1, k));
            }
            if letters.is_empty() {
                return Some((StringWord::trivial_side(p.branch_side(l.half, 1)), pos));
            }
            Some((StringWord::from_letters(p, letters).expect("radical is a string"), pos))
        }
    }
}

/// `P(q)/soc` as a word with projective-basis indices per position.
pub fn top_quotient_word(p: &Presentation, q: usize) -> (StringWord, Vec<usize>) {
    let pb = projective_basis(p, q);
    let brs = &pb.shape.branches;
    let mut letters = Vec::new();
    let mut pos = Vec::new();
    match brs.len() {
        0 => return (StringWord::trivial_at(p, q), vec![0]),
        1 => {
            let b = &brs[0];
            pos.push(0);
            for k in 1..b.len {
                letters.push(Letter::direct(p.branch_arrow(b.half, k)));
                pos.push(pb.branch_pos(0, k));
            }
            if letters.is_empty() {
                return (StringWord::trivial_side(b.half), pos);
            }
        }
        _ => {
            let (l, r) = (&brs[0], &brs[1]);
            for k in (1..l.len).rev() {
                pos.push(pb.branch_pos(0, k));
                letters.push(Letter::inverse(p.branch_arrow(l.half, k)));
            }
            pos.push(0);
            for k in 1..r.len {
                letters.push(Letter::direct(p.branch_arrow(r.half, k)));
                pos.push(pb.branch_pos(1, k));
            }
            if letters.is_empty() {
                return (StringWord::trivial_side(r.half), pos);
            }
        }
    }
    (StringWord::from_letters(p, letters).expect("top quotient is a string"), pos)
}

/// Canonical maps between `M` and `P(q)`.
pub fn proj_canonical_homs(p: &Presentation, m: &StringWord, q: usize) -> ProjHoms {
    let pb = projective_basis(p, q);
    let dp = pb.dim();
    let dm = m.dim();
    let mut into = Vec::new();
    if let Some((rad, pos)) = radical_word(p, q) {
        for h in canonical_homs_words(p, m, &rad) {
            let mut f = vec![vec![0i64; dm]; dp];
            for x in 0..dm {
                if let Some(y) = h.image(x) {
                    f[pos[y]][x] = 1;
                }
            }
            into.push(f);
        }
    }
    let mut out_of = Vec::new();
    let (top, pos) = top_quotient_word(p, q);
    for h in canonical_homs_words(p, &top, m) {
        let mut f = vec![vec![0i64; dp]; dm];
        for x in 0..top.dim() {
            if let Some(y) = h.image(x) {
                f[y][pos[x]] = 1;
            }
        }
        out_of.push(f);
    }
    ProjHoms { into, out_of }
}

/// Valid letters that may follow `prev` given the current run length.
pub(crate) fn successors(p: &Presentation, prev: Letter, run: usize) -> Vec<Letter> {
    let g = p.graph();
    let mut out = Vec::new();
    let e = prev.end_side(p);
    // same direction
    if run < prev.max_run(p) {
        let next = if prev.inverse { p.arrow_at(g.sigma_inv(e)) } else { p.arrow_at(e) };
        if let Some(a) = next {
            out.push(Letter { arrow: a, inverse: prev.inverse });
        }
    }
    // switch direction
    let other = g.pair(e);
    let next = if prev.inverse { p.arrow_at(other) } else { p.arrow_at(g.sigma_inv(other)) };
    if let Some(a) = next {
        let l = Letter { arrow: a, inverse: !prev.inverse };
        if a != prev.arrow && l.max_run(p) >= 1 {
            out.push(l);
        }
    }
    out
}

/// Letters that can start a word at q-vertex `q`.
pub(crate) fn starters(p: &Presentation, q: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    for (i, a) in p.arrows().iter().enumerate() {
        let ok = p.branch_len(a.half) >= 2;
        if a.source == q && ok {
            out.push(Letter::direct(i));
        }
        if a.target == q && ok {
            out.push(Letter::inverse(i));
        }
    }
    out
}

/// All string modules of length `<= max_len`, as canonical words, in
/// increasing length then lexicographic order.
pub fn enumerate_words(p: &Presentation, max_len: usize) -> Vec<StringWord> {
    let mut out: BTreeSet<(usize, StringWord)> = BTreeSet::new();
    for q in 0..p.n_q() {
        out.insert((0, StringWord::trivial_at(p, q)));
    }
    // frontier of oriented words with their final run length
    let mut frontier: Vec<(Vec<Letter>, usize)> = Vec::new();
    for q in 0..p.n_q() {
        for l in starters(p, q) {
            frontier.push((vec![l], 1));
        }
    }
    frontier.sort();
    frontier.dedup();
    while let Some(len) = frontier.first().map(|f| f.0.len()) {
        if len > max_len {
            break;
        }
        let mut next = Vec::new();
        for (letters, run) in &frontier {
            let w = StringWord { anchor: letters[0].start_side(p), letters: letters.clone() };
            out.insert((len, w.canonical(p)));
            if len < max_len {
                let last = *letters.last().expect("nonempty");
                for l in successors(p, last, *run) {
                    let mut nl = letters.clone();
                    let r = if l.inverse == last.inverse { run + 1 } else { 1 };
                    nl.push(l);
                    next.push((nl, r));
                }
            }
        }
        frontier = next;
    }
    out.into_iter().map(|(_, w)| w).collect()
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}#{}", if self.inverse { "-" } else { "" }, self.arrow)
    }
}
