//! Bound-quiver presentation `Λ_G = 𝕜Q_G/I_G` of a Brauer graph.
//!
//! Paths are read left to right: `a0 a1` means first `a0`, then `a1`.
//! Every arrow is attached to a half-edge `h` at a non-truncated vertex and
//! runs from the edge of `h` to the edge of `σ(h)`. Nonzero paths are exactly
//! the subpaths of the special-cycle powers `A_{v,h}^{m(v)}`; in the socle
//! quotient `Λ_s` the full powers vanish as well.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ribbon::{self, natural_cmp, BrauerGraph};
use crate::strmod::{Letter, StringWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
    /// Graph vertex carrying the special cycle.
    pub vertex: usize,
    /// Position of `half` in the cyclic order of `vertex`.
    pub position: usize,
    pub half: usize,
}

/// Which named family the graph was recognised as.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Family {
    Star { n: usize, mbar: Vec<u32> },
    Koszul { n: usize, l: u32, m: u32, lambda: i64 },
    General,
}

/// One maximal nonzero path from the top of `P(i)`: the special cycle power
/// starting at `half`, or nothing when the end is truncated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub half: usize,
    /// `m(v)·val(v)` arrows.
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectiveShape {
    pub q: usize,
    pub branches: Vec<Branch>,
}

impl ProjectiveShape {
    pub fn dim(&self) -> usize {
        match self.branches.as_slice() {
            [b] => b.len + 1,
            [a, b] => a.len + b.len,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relations {
    /// Pairs of equal special-cycle powers (as arrow lists).
    pub type1: Vec<(Vec<usize>, Vec<usize>)>,
    /// `A^{m} · first arrow`.
    pub type2: Vec<Vec<usize>>,
    /// Forbidden length-two compositions.
    pub type3: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    graph: BrauerGraph,
    q_edge: Vec<usize>,
    edge_q: Vec<usize>,
    arrows: Vec<Arrow>,
    arrow_at: Vec<Option<usize>>,
    family: Family,
    star: Option<ribbon::StarShape>,
}

impl Presentation {
    pub fn graph(&self) -> &BrauerGraph {
        &self.graph
    }
    pub fn family(&self) -> &Family {
        &self.family
    }
    pub fn star_shape(&self) -> Option<&ribbon::StarShape> {
        self.star.as_ref()
    }
    pub fn n_q(&self) -> usize {
        self.q_edge.len()
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }
    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }
    /// Arrow carried by half-edge `h`, if its vertex is not truncated.
    pub fn arrow_at(&self, h: usize) -> Option<usize> {
        self.arrow_at[h]
    }
    /// q-vertex of the edge containing `h`.
    pub fn q_of_half(&self, h: usize) -> usize {
        self.edge_q[self.graph.edge_of(h)]
    }
    pub fn q_edge(&self, q: usize) -> usize {
        self.q_edge[q]
    }
    pub fn q_name(&self, q: usize) -> String {
        match self.family {
            Family::General => self.graph.edge_name(self.q_edge[q]).to_string(),
            _ => q.to_string(),
        }
    }
    /// The two half-edges of q-vertex `q`.
    pub fn q_halves(&self, q: usize) -> (usize, usize) {
        self.graph.edge_halves(self.q_edge[q])
    }

    /// Length of the maximal path starting on side `h` (0 when truncated).
    pub fn branch_len(&self, h: usize) -> usize {
        let v = self.graph.attach(h);
        if self.graph.is_truncated(v) {
            0
        } else {
            self.graph.mult(v) as usize * self.graph.valency(v)
        }
    }
    /// The `k`-th arrow (1-based) of the branch on side `h`.
    pub fn branch_arrow(&self, h: usize, k: usize) -> usize {
        let mut x = h;
        for _ in 1..k {
            x = self.graph.sigma(x);
        }
        self.arrow_at[x].expect("branch on a non-truncated vertex")
    }
    /// q-vertex reached after `k` arrows along the branch on side `h`.
    pub fn branch_vertex(&self, h: usize, k: usize) -> usize {
        let mut x = h;
        for _ in 0..k {
            x = self.graph.sigma(x);
        }
        self.q_of_half(x)
    }
    /// Side reached after `k` arrows (the half-edge the next arrow starts from).
    pub fn branch_side(&self, h: usize, k: usize) -> usize {
        let mut x = h;
        for _ in 0..k {
            x = self.graph.sigma(x);
        }
        x
    }

    pub fn projective(&self, q: usize) -> ProjectiveShape {
        let (a, b) = self.q_halves(q);
        let branches = [a, b]
            .into_iter()
            .filter(|&h| self.branch_len(h) > 0)
            .map(|h| Branch { half: h, len: self.branch_len(h) })
            .collect();
        ProjectiveShape { q, branches }
    }

    pub fn special_cycle(&self, h: usize) -> Vec<usize> {
        let v = self.graph.attach(h);
        if self.graph.is_truncated(v) {
            return Vec::new();
        }
        (1..=self.graph.valency(v)).map(|k| self.branch_arrow(h, k)).collect()
    }

    pub fn relations(&self) -> Relations {
        let g = &self.graph;
        let power = |h: usize| -> Vec<usize> { (1..=self.branch_len(h)).map(|k| self.branch_arrow(h, k)).collect() };
        let mut type1 = Vec::new();
        let mut type2 = Vec::new();
        for e in 0..g.n_edges() {
            let (a, b) = g.edge_halves(e);
            let (la, lb) = (self.branch_len(a), self.branch_len(b));
            if la > 0 && lb > 0 {
                type1.push((power(a), power(b)));
            }
            for h in [a, b] {
                if self.branch_len(h) > 0 {
                    let mut p = power(h);
                    p.push(self.branch_arrow(h, 1));
                    type2.push(p);
                }
            }
        }
        let mut type3 = Vec::new();
        for (x, ax) in self.arrows.iter().enumerate() {
            let end = g.sigma(ax.half);
            if let Some(y) = self.arrow_at[g.pair(end)] {
                let loop_exempt = x == y && g.valency(ax.vertex) == 1;
                if !loop_exempt {
                    type3.push((x, y));
                }
            }
        }
        Relations { type1, type2, type3 }
    }

    /// Total dimension, as the sum of the projective dimensions.
    pub fn dim(&self) -> usize {
        (0..self.n_q()).map(|q| self.projective(q).dim()).sum()
    }

    /// Structured export: q-vertices, arrows, special cycles and relations.
    pub fn export(&self) -> serde_json::Value {
        let name = |a: &usize| self.arrows[*a].id.clone();
        let rel = self.relations();
        let cycles: Vec<_> = (0..self.graph.n_half_edges())
            .filter(|&h| self.arrow_at[h].is_some())
            .map(|h| {
                serde_json::json!({
                    "vertex": self.graph.vertex_id(self.graph.attach(h)),
                    "half_edge": self.graph.half_id(h),
                    "arrows": self.special_cycle(h).iter().map(name).collect::<Vec<_>>(),
                    "power": self.graph.mult(self.graph.attach(h)),
                })
            })
            .collect();
        serde_json::json!({
            "family": format!("{:?}", self.family),
            "q_vertices": (0..self.n_q()).map(|q| self.q_name(q)).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|a| serde_json::json!({
                "id": a.id, "source": self.q_name(a.source), "target": self.q_name(a.target),
                "vertex": self.graph.vertex_id(a.vertex), "position": a.position,
            })).collect::<Vec<_>>(),
            "special_cycles": cycles,
            "relations": {
                "type1": rel.type1.iter().map(|(a, b)| (a.iter().map(name).collect::<Vec<_>>(), b.iter().map(name).collect::<Vec<_>>())).collect::<Vec<_>>(),
                "type2": rel.type2.iter().map(|p| p.iter().map(name).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "type3": rel.type3.iter().map(|(a, b)| (name(a), name(b))).collect::<Vec<_>>(),
            },
        })
    }
}

/// Build the presentation. Stars in normal form and Koszul lines get the
/// conventional arrow names (`a{j}`/`d{j}` and `d`, `g`, `a{k}`, `b{k}`);
/// anything else gets `v{vertex}p{position}`.
pub fn present(graph: &BrauerGraph) -> Presentation {
    if let Some(s) = ribbon::recognize_star(graph) {
        return present_star(graph, s);
    }
    if let Some(l) = ribbon::recognize_line(graph) {
        return present_line(graph, l, 1);
    }
    let mut order: Vec<usize> = (0..graph.n_edges()).collect();
    order.sort_by(|&a, &b| natural_cmp(graph.edge_name(a), graph.edge_name(b)));
    build(graph, order, Family::General, None, |v, pos, _| format!("v{}p{}", graph.vertex_id(v), pos))
}

fn build(
    graph: &BrauerGraph,
    q_edge: Vec<usize>,
    family: Family,
    star: Option<ribbon::StarShape>,
    name: impl Fn(usize, usize, usize) -> String,
) -> Presentation {
    let mut edge_q = vec![0; graph.n_edges()];
    for (q, &e) in q_edge.iter().enumerate() {
        edge_q[e] = q;
    }
    let mut arrows = Vec::new();
    let mut arrow_at = vec![None; graph.n_half_edges()];
    for v in 0..graph.n_vertices() {
        if graph.is_truncated(v) {
            continue;
        }
        for (pos, &h) in graph.cyclic_order(v).iter().enumerate() {
            arrow_at[h] = Some(arrows.len());
            arrows.push(Arrow {
                id: name(v, pos, h),
                source: edge_q[graph.edge_of(h)],
                target: edge_q[graph.edge_of(graph.sigma(h))],
                vertex: v,
                position: pos,
                half: h,
            });
        }
    }
    Presentation { graph: graph.clone(), q_edge, edge_q, arrows, arrow_at, family, star }
}

fn present_star(graph: &BrauerGraph, s: ribbon::StarShape) -> Presentation {
    let q_edge: Vec<usize> = s.center_half.iter().map(|&h| graph.edge_of(h)).collect();
    let center = s.center;
    let ch = s.center_half.clone();
    let family = Family::Star { n: s.n, mbar: s.mbar.clone() };
    build(graph, q_edge, family, Some(s), |v, _, h| {
        if v == center {
            format!("a{}", ch.iter().position(|&x| x == h).expect("centre half"))
        } else {
            let j = ch.iter().position(|&x| graph.edge_of(x) == graph.edge_of(h)).expect("leaf edge");
            format!("d{j}")
        }
    })
}

fn present_line(graph: &BrauerGraph, l: ribbon::LineShape, lambda: i64) -> Presentation {
    let n = l.n;
    let path = l.path.clone();
    let edges = l.edges.clone();
    let family = Family::Koszul { n, l: l.l, m: l.m, lambda };
    build(graph, l.edges.clone(), family, None, |v, _, h| {
        let k = path.iter().position(|&x| x == v).expect("line vertex");
        if k == 0 {
            "d".into()
        } else if k == n + 1 {
            "g".into()
        } else if graph.edge_of(h) == edges[k - 1] {
            format!("a{k}")
        } else {
            format!("b{k}")
        }
    })
}

/// The star `W_{n,m̄}`.
pub fn make_star(n: usize, mbar: &[u32]) -> Result<BrauerGraph> {
    if mbar.is_empty() || mbar.len() > n + 2 {
        return Err(Error::BadMultiplicityVector(format!("length {} not in 1..={}", mbar.len(), n + 2)));
    }
    if let Some(m) = mbar.iter().find(|&&m| m < 2) {
        return Err(Error::BadMultiplicityVector(format!("entry {m} < 2")));
    }
    if mbar.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadMultiplicityVector(format!("{mbar:?} is not non-decreasing")));
    }
    let mut leaves = mbar[1..].to_vec();
    leaves.resize(n + 1, 1);
    Ok(ribbon::star_graph(mbar[0], &leaves))
}

/// Standard Koszul algebra `Λ_λ` with `λ` normalised to 1; its Brauer graph
/// is the line with end multiplicities `l` and `m`. `lambda` is kept as
/// metadata only.
pub fn make_koszul(n: usize, l: u32, m: u32) -> Result<Presentation> {
    make_koszul_lambda(n, l, m, 1)
}

pub fn make_koszul_lambda(n: usize, l: u32, m: u32, lambda: i64) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::IndexOutOfFamily("n must be positive".into()));
    }
    if l < 2 || m < 2 {
        return Err(Error::BadMultiplicityVector(format!("end multiplicities ({l}, {m}) must be >= 2")));
    }
    if lambda == 0 {
        return Err(Error::IndexOutOfFamily("lambda must be nonzero".into()));
    }
    let mut mults = vec![1; n + 2];
    mults[0] = l;
    mults[n + 1] = m;
    let g = ribbon::line_graph(&mults);
    let shape = ribbon::recognize_line(&g).expect("line shape");
    Ok(present_line(&g, shape, lambda))
}

/// Named strings over `Λ(n, m̄)`.
pub struct StarStrings<'a> {
    p: &'a Presentation,
    n: usize,
    mbar: Vec<u32>,
}

impl Presentation {
    pub fn star_strings(&self) -> Result<StarStrings<'_>> {
        match &self.family {
            Family::Star { n, mbar } => Ok(StarStrings { p: self, n: *n, mbar: mbar.clone() }),
            _ => Err(Error::NotAStar),
        }
    }
}

impl<'a> StarStrings<'a> {
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn i(&self) -> usize {
        self.mbar.len() - 1
    }
    /// `m_k`, with 1 for truncated leaves.
    pub fn m(&self, k: usize) -> u32 {
        self.mbar.get(k).copied().unwrap_or(1)
    }
    fn md(&self, j: usize) -> usize {
        (j as i64).rem_euclid(self.n as i64 + 1) as usize
    }
    fn check(&self, what: &str, ok: bool) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfFamily(what.to_string()))
        }
    }
    fn alpha(&self, j: usize) -> Letter {
        Letter::direct(self.p.arrow_index(&format!("a{}", self.md(j))).expect("alpha"))
    }
    fn delta(&self, j: usize, inverse: bool) -> Result<Letter> {
        let a = self.p.arrow_index(&format!("d{j}")).ok_or_else(|| Error::IndexOutOfFamily(format!("no loop d{j}")))?;
        Ok(if inverse { Letter::inverse(a) } else { Letter::direct(a) })
    }
    fn word(&self, base: usize, letters: Vec<Letter>) -> Result<StringWord> {
        if letters.is_empty() {
            Ok(StringWord::trivial_at(self.p, base))
        } else {
            StringWord::from_letters(self.p, letters)
        }
    }
    fn cat(&self, parts: &[StringWord]) -> Result<StringWord> {
        let base = parts.first().map(|w| w.start_q(self.p)).unwrap_or(0);
        let letters: Vec<Letter> = parts.iter().flat_map(|w| w.letters().iter().copied()).collect();
        self.word(base, letters)
    }

    /// Trivial word at q-vertex `l`.
    pub fn e(&self, l: usize) -> Result<StringWord> {
        self.check("e_l needs l <= n", l <= self.n)?;
        Ok(StringWord::trivial_at(self.p, l))
    }
    /// `x_{l,p} = α_l ⋯ α_{p−1}`, indices mod `n+1`; `x_{l,l} = e_l`.
    pub fn x(&self, l: usize, p: usize) -> Result<StringWord> {
        self.check("x_{l,p} needs l, p <= n", l <= self.n && p <= self.n)?;
        let len = self.md(p + self.n + 1 - l);
        self.word(l, (0..len).map(|k| self.alpha(l + k)).collect())
    }
    /// `A_l^k`.
    pub fn a_pow(&self, l: usize, k: usize) -> Result<StringWord> {
        self.check("A_l needs l <= n", l <= self.n)?;
        self.check("A_l^k needs k < m0", k < self.mbar[0] as usize)?;
        self.word(l, (0..k * (self.n + 1)).map(|s| self.alpha(l + s)).collect())
    }
    /// `δ_j^{±k}`.
    pub fn delta_pow(&self, j: usize, k: usize, inverse: bool) -> Result<StringWord> {
        self.check("δ_j needs j < i", j < self.i())?;
        self.check("δ_j^k needs k < m_{j+1}", k < self.m(j + 1) as usize)?;
        let d = self.delta(j, inverse)?;
        self.word(j, vec![d; k])
    }
    fn dblock(&self, k: usize) -> Result<Vec<Letter>> {
        let mut v = vec![self.delta(k, true)?; self.m(k + 1) as usize - 1];
        v.push(self.alpha(k));
        Ok(v)
    }
    /// `y_l = Π_{k=l}^{i−1} (δ_k^{−(m_{k+1}−1)} α_k)`; `y_i = e_i`.
    pub fn y(&self, l: usize) -> Result<StringWord> {
        self.check("y_l needs l <= i", l <= self.i() && self.i() <= self.n)?;
        let mut letters = Vec::new();
        for k in l..self.i() {
            letters.extend(self.dblock(k)?);
        }
        self.word(l, letters)
    }
    /// `z_j` (only when every leaf has multiplicity at least 2).
    pub fn z(&self, j: usize) -> Result<StringWord> {
        self.check("z_j needs i = n+1", self.i() == self.n + 1)?;
        self.check("z_j needs j <= n", j <= self.n)?;
        let mut letters = Vec::new();
        for k in j..self.n {
            letters.extend(self.dblock(k)?);
        }
        letters.extend(vec![self.delta(self.n, true)?; self.m(self.n + 1) as usize - 1]);
        self.word(j, letters)
    }
    /// `μ_{l,r} = A_l x_{l,r}`.
    pub fn mu(&self, l: usize, r: usize) -> Result<StringWord> {
        self.cat(&[self.a_pow(l, 1)?, self.x(l, r)?])
    }
    /// `μ_l = μ_{l,l−1}`.
    pub fn mu_l(&self, l: usize) -> Result<StringWord> {
        self.mu(l, self.md(l + self.n))
    }
    /// `ρ_{l,r} = (δ_l⁻¹μ_l)⋯(δ_1⁻¹μ_1)(δ_0⁻¹μ_{0,r})`.
    pub fn rho(&self, l: usize, r: usize) -> Result<StringWord> {
        self.check("ρ_{l,r} needs l <= i−1", l < self.i())?;
        self.check("ρ_{l,r} needs r <= n", r <= self.n)?;
        let mut parts = Vec::new();
        for k in (1..=l).rev() {
            parts.push(self.delta_pow(k, 1, true)?);
            parts.push(self.mu_l(k)?);
        }
        parts.push(self.delta_pow(0, 1, true)?);
        parts.push(self.mu(0, r)?);
        self.cat(&parts)
    }
    /// `ρ_l = ρ_{l,l}`.
    pub fn rho_l(&self, l: usize) -> Result<StringWord> {
        self.rho(l, l)
    }
    /// `γ_{a,b} = Π_{k=a}^{b} (δ_k⁻¹ α_k)`.
    pub fn gamma(&self, a: usize, b: usize) -> Result<StringWord> {
        self.check("γ_{a,b} needs a <= b < i", a <= b && b < self.i())?;
        let mut letters = Vec::new();
        for k in a..=b {
            letters.push(self.delta(k, true)?);
            letters.push(self.alpha(k));
        }
        self.word(a, letters)
    }
    /// Concatenate named strings, checking the result is a string.
    pub fn concat(&self, parts: &[StringWord]) -> Result<StringWord> {
        self.cat(parts)
    }

    /// `(δ_a⁻¹μ_a)(δ_{a−1}⁻¹μ_{a−1})⋯(δ_b⁻¹μ_b)`, indices mod `n+1`.
    fn dmu_chain(&self, a: i64, b: i64) -> Result<Vec<StringWord>> {
        let mut parts = Vec::new();
        let mut k = a;
        while k >= b {
            let kk = self.md(k.rem_euclid(self.n as i64 + 1) as usize);
            parts.push(self.delta_pow(kk, 1, true)?);
            parts.push(self.mu_l(kk)?);
            k -= 1;
        }
        Ok(parts)
    }

    /// Position `s` of the tube diagonal starting at the boundary simple
    /// `S(n)` (when some leaf is truncated) or at `M[z_n]` (otherwise):
    /// `x_{n−s,n}`, `y_j x_{i,n}`, then the `N_p` strings; or `z_{n−s}`,
    /// then `z_{n−r}(α_n z_0)^{q+1}`.
    pub fn tube_diagonal(&self, s: usize) -> Result<StringWord> {
        let (n, i) = (self.n, self.i());
        let alpha_n = self.word(n, vec![self.alpha(n)])?;
        if i == n + 1 {
            if s <= n {
                return self.z(n - s);
            }
            let pp = s - n - 1;
            let (q, r) = (pp / (n + 1), pp % (n + 1));
            let mut parts = vec![self.z(n - r)?];
            for _ in 0..=q {
                parts.push(alpha_n.clone());
                parts.push(self.z(0)?);
            }
            return self.cat(&parts);
        }
        let m_k = |k: usize| -> Result<StringWord> {
            if k >= i {
                self.x(k, n)
            } else {
                self.cat(&[self.y(k)?, self.x(i, n)?])
            }
        };
        if s <= n {
            return m_k(n - s);
        }
        let pp = s - n - 1;
        let (q, r) = (pp / (n + 1), pp % (n + 1));
        let mut parts = Vec::new();
        if r > 0 && r <= n - i {
            parts.push(self.x(n - r, n)?);
        } else if r > n - i {
            parts.push(self.y(n - r)?);
            parts.push(self.x(i, n)?);
        }
        for _ in 0..=q {
            parts.push(alpha_n.clone());
            parts.push(self.y(0)?);
            parts.push(self.x(i, n)?);
        }
        self.cat(&parts)
    }

    /// `C_j` on the diagonal `D_t` through `Ω⁻¹(S(t))`, all multiplicities 2.
    pub fn simple_diagonal(&self, t: usize, j: usize) -> Result<StringWord> {
        self.check("closed form needs all multiplicities 2", self.mbar.iter().all(|&m| m == 2))?;
        self.check("D_t needs t < i", t < self.i())?;
        let (n, i) = (self.n, self.i());
        let (t_, j_) = (t as i64, j as i64);
        if i == n + 1 {
            return self.cat(&self.dmu_chain(t_, t_ - j_)?);
        }
        if j < t {
            return self.cat(&self.dmu_chain(t_, t_ - j_)?);
        }
        let (q, r) = ((j - t) / (n + 1), (j - t) % (n + 1));
        let mut parts = Vec::new();
        if r <= n - i + 1 {
            if q == 0 {
                parts.push(self.rho(t, n - r)?);
            } else {
                parts.push(self.rho(t, i - 1)?);
                for _ in 1..q {
                    parts.push(self.rho_l(i - 1)?);
                }
                parts.push(self.rho(i - 1, n - r)?);
            }
        } else {
            parts.push(self.rho(t, i - 1)?);
            for _ in 0..q {
                parts.push(self.rho_l(i - 1)?);
            }
            parts.extend(self.dmu_chain(i as i64 - 1, (n - r + 1) as i64)?);
        }
        self.cat(&parts)
    }

    /// `C_j` on the diagonal through `M[x_{1,0}]` when `i = 1`, `m_0 = 2`,
    /// `m_1 > 2`.
    pub fn x10_diagonal(&self, j: usize) -> Result<StringWord> {
        self.check("needs i = 1, m_0 = 2, m_1 > 2", self.i() == 1 && self.m(0) == 2 && self.m(1) > 2)?;
        let n = self.n;
        let x10 = self.x(1, 0)?;
        if j == 0 {
            return Ok(x10);
        }
        // x_{1,0}(δ_0⁻¹A_0)^q δ_0⁻¹ μ_{0,n−r} with j−1 = q(n+1)+r
        let (q, r) = ((j - 1) / (n + 1), (j - 1) % (n + 1));
        let d0 = self.delta_pow(0, 1, true)?;
        let mut parts = vec![x10];
        for _ in 0..q {
            parts.push(d0.clone());
            parts.push(self.a_pow(0, 1)?);
        }
        parts.push(d0);
        parts.push(self.mu(0, n - r)?);
        self.cat(&parts)
    }
}
