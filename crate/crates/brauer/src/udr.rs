//! Universal deformation rings of string modules with stable
//! endomorphism ring `k`, classified by the tube and diagonal tables, the
//! ladder criterion, and transport along star reduction.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{self, ComponentAddress};
use crate::linalg;
use crate::presentation::{present, Family, Presentation};
use crate::ribbon::{self, BrauerGraph, GrowthClass};
use crate::strmod::{self, StringModule, StringWord};

/// Symbolic universal deformation ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "ring", content = "param", rename_all = "snake_case")]
pub enum UdrClass {
    /// `k`
    Base,
    /// `k[[x]]`
    PowerSeries,
    /// `k[[x]]/(x^N)`, `N >= 2`
    TruncatedPoly(u32),
    Unknown(String),
}

impl UdrClass {
    /// `k[[x]]/(x^n)`, collapsing `n = 1` to `k`.
    pub fn truncated(n: u32) -> UdrClass {
        if n <= 1 {
            UdrClass::Base
        } else {
            UdrClass::TruncatedPoly(n)
        }
    }
    pub fn is_ring(&self) -> bool {
        !matches!(self, UdrClass::Unknown(_))
    }
}

impl fmt::Display for UdrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UdrClass::Base => write!(f, "k"),
            UdrClass::PowerSeries => write!(f, "k[[x]]"),
            UdrClass::TruncatedPoly(n) => write!(f, "k[[x]]/(x^{n})"),
            UdrClass::Unknown(r) => write!(f, "unknown ({r})"),
        }
    }
}

/// One step of the classification pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub rule: String,
    pub detail: String,
}

fn ev(rule: &str, detail: impl Into<String>) -> Evidence {
    Evidence { rule: rule.to_string(), detail: detail.into() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub word: String,
    pub class: UdrClass,
    pub stable_end_dim: usize,
    pub ext1_dim: Option<usize>,
    pub address: Option<ComponentAddress>,
    pub evidence: Vec<Evidence>,
}

impl Classification {
    pub fn rules(&self) -> Vec<&str> {
        self.evidence.iter().map(|e| e.rule.as_str()).collect()
    }
}

/// Classify `R(Λ, M)`.
pub fn classify(p: &Presentation, m: &StringModule) -> Result<Classification> {
    if homology::is_projective(p, m) {
        return Err(Error::ProjectiveInput);
    }
    let g = p.graph();
    let mut out = Classification {
        word: m.display(p),
        class: UdrClass::Unknown(String::new()),
        stable_end_dim: homology::stable_end_dim(p, m),
        ext1_dim: None,
        address: None,
        evidence: Vec::new(),
    };
    let done = |mut out: Classification, class: UdrClass| {
        out.class = class;
        Ok(out)
    };
    out.evidence.push(ev("stable-end", format!("dim End(M) modulo projectives = {}", out.stable_end_dim)));
    if out.stable_end_dim != 1 {
        return done(out, UdrClass::Unknown("stable endomorphism ring not k".into()));
    }
    let ext1 = homology::ext1_dim(p, m)?;
    out.ext1_dim = Some(ext1);
    out.evidence.push(ev("ext1", format!("dim Ext^1(M,M) = dim Hom(Omega M, M) modulo projectives = {ext1}")));
    if ext1 == 0 {
        out.evidence.push(ev("ext-vanishing", "Ext^1(M,M) = 0 forces R = k"));
        return done(out, UdrClass::Base);
    }
    if !g.is_tree() {
        return done(out, UdrClass::Unknown("not a generalized Brauer tree algebra".into()));
    }
    let gc = ribbon::growth_class(g);
    if gc != GrowthClass::NonPolynomial {
        out.evidence.push(ev("growth", format!("growth class {gc}")));
        return done(out, UdrClass::Unknown("outside the classified families".into()));
    }
    let e = g.n_edges();
    let address = homology::locate(p, m)?;
    out.address = Some(address.clone());
    match address {
        ComponentAddress::ExceptionalTube { tube_id, rank, d, .. } => {
            out.evidence.push(ev("tube-distance", format!("tube {tube_id} of rank {rank}, d_M = {d}, |E| - 1 = {}", e - 1)));
            if let Some(check) = tube_closed_form(p, m, d) {
                out.evidence.push(check);
            }
            let class = if d + 1 < e {
                UdrClass::Base
            } else if d + 1 == e {
                UdrClass::PowerSeries
            } else {
                UdrClass::Unknown("d_M exceeds |E| - 1".into())
            };
            done(out, class)
        }
        ComponentAddress::ZaInfinityInfinity { diagonal: Some((t, j, k)) } => {
            let ss = p.star_strings()?;
            let n = ss.n();
            let diag = homology::simple_diagonals(p).into_iter().find(|d| d.t == t).expect("diagonal exists");
            out.evidence.push(ev(
                "omega-reduction",
                format!("Omega^{k}(M) is position {j} of the diagonal through S({t}); R is constant on Omega-orbits"),
            ));
            let closed = if diag.case == 1 { ss.simple_diagonal(t, j) } else { ss.x10_diagonal(j) };
            if let Ok(c) = closed {
                let pos = diag.positions(p, j + 1);
                let agree = pos.get(j).is_some_and(|w| w.same_module(&c, p));
                out.evidence.push(ev("diagonal-closed-form", format!("C_{j} = {} agrees: {agree}", c.display(p))));
            }
            let class = match (diag.case, j) {
                (1, 0) => {
                    out.evidence.push(ev("simple-component case 1", "position 0 (Omega-orbit of S(t)): k[[x]]/(x^2)"));
                    UdrClass::truncated(2)
                }
                (1, j) if j == n => {
                    out.evidence.push(ev("simple-component case 1", "position n: k[[x]]"));
                    UdrClass::PowerSeries
                }
                (2, 0) => {
                    out.evidence.push(ev("simple-component case 2", "position 0 (Omega-orbit of M_0): k[[x]]/(x^2)"));
                    UdrClass::truncated(2)
                }
                (2, j) if j == n => {
                    let m1 = ss.m(1);
                    out.evidence.push(ev("simple-component case 2", format!("position n (Omega-orbit of S(0)): k[[x]]/(x^{m1})")));
                    UdrClass::truncated(m1)
                }
                (_, j) if j < n => {
                    out.evidence.push(ev("simple-component", "interior position: k"));
                    UdrClass::Base
                }
                _ => UdrClass::Unknown("diagonal position beyond n".into()),
            };
            done(out, class)
        }
        ComponentAddress::ZaInfinityInfinity { diagonal: None } => {
            done(out, UdrClass::Unknown("outside the classified families".into()))
        }
    }
}

/// Does the Ω-orbit of `M` contain the closed-form string at distance `d`
/// on the tube diagonal?
fn tube_closed_form(p: &Presentation, m: &StringModule, d: usize) -> Option<Evidence> {
    let target = match p.family() {
        Family::Star { .. } => p.star_strings().ok()?.tube_diagonal(d).ok()?,
        _ => return None,
    };
    let target = StringModule::new(p, &target);
    let period = 2 * p.graph().n_edges();
    let mut x = m.clone();
    let mut hit = None;
    for k in 0..period {
        if x == target {
            hit = Some(k);
            break;
        }
        x = homology::omega(p, &x).ok()?;
    }
    Some(ev(
        "tube-closed-form",
        match hit {
            Some(k) => format!("Omega^{k}(M) = M[{}] agrees: true", target.display(p)),
            None => format!("M[{}] not in the Omega-orbit, agrees: false", target.display(p)),
        },
    ))
}

/// `W_0, W_1, …` with maps `W_{l-1} ↪ W_l` and `W_l ↠ W_{l-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ladder {
    Finite(Vec<StringWord>),
    /// `W_l = prefix · block^l`.
    Template { prefix: StringWord, block: StringWord },
}

impl Ladder {
    pub fn word(&self, p: &Presentation, l: usize) -> Result<StringWord> {
        match self {
            Ladder::Finite(ws) => ws.get(l).cloned().ok_or_else(|| Error::IndexOutOfFamily(format!("ladder has no W_{l}"))),
            Ladder::Template { prefix, block } => {
                if l == 0 {
                    return Ok(prefix.clone());
                }
                let mut letters = prefix.letters().to_vec();
                for _ in 0..l {
                    letters.extend_from_slice(block.letters());
                }
                StringWord::from_letters(p, letters)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderVerdict {
    pub class: UdrClass,
    /// Highest `l` checked.
    pub depth: usize,
    /// True when every hypothesis was checked for a finite ladder.
    pub complete: bool,
    pub notes: Vec<String>,
}

fn dense(h: &strmod::CanonicalHom, from: usize, to: usize) -> Vec<Vec<i64>> {
    strmod::hom_matrix(h, from, to)
}

fn fail(condition: &str, l: usize) -> Error {
    Error::HypothesisFailed { condition: condition.to_string(), l }
}

/// Column space of `a` contains that of `b` and both have the same rank.
fn same_image(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let t = |m: &[Vec<i64>]| -> Vec<Vec<i64>> {
        let cols = m.first().map_or(0, |r| r.len());
        (0..cols).map(|c| m.iter().map(|r| r[c]).collect()).collect()
    };
    let (ta, tb) = (t(a), t(b));
    let ra = linalg::rank_dense(&ta);
    let both: Vec<Vec<i64>> = ta.iter().chain(tb.iter()).cloned().collect();
    ra == linalg::rank_dense(&tb) && ra == linalg::rank_dense(&both)
}

/// Check the ladder hypotheses for `M` and return the implied ring.
pub fn verify_ladder(p: &Presentation, m: &StringModule, ladder: &Ladder, probe_depth: Option<usize>) -> Result<LadderVerdict> {
    if homology::ext1_dim(p, m)? != 1 {
        return Err(fail("ext1 = 1", 0));
    }
    let w0 = ladder.word(p, 0)?;
    if StringModule::new(p, &w0) != *m {
        return Err(fail("W_0 isomorphic to M", 0));
    }
    let n_q = p.n_q();
    let (top, complete) = match ladder {
        Ladder::Finite(ws) => (ws.len().saturating_sub(1), true),
        Ladder::Template { .. } => (probe_depth.unwrap_or(2 * n_q + 2), false),
    };
    let dm = m.dim();
    for l in 1..=top {
        let (prev, cur) = (ladder.word(p, l - 1)?, ladder.word(p, l)?);
        let (dp, dc) = (prev.dim(), cur.dim());
        let iota = strmod::canonical_homs_words(p, &prev, &cur)
            .into_iter()
            .find(|h| h.rank() == dp)
            .ok_or_else(|| fail("monomorphism", l))?;
        let eps = strmod::canonical_homs_words(p, &cur, &prev)
            .into_iter()
            .find(|h| h.rank() == dp)
            .ok_or_else(|| fail("epimorphism", l))?;
        let sigma = linalg::matmul(&dense(&iota, dp, dc), &dense(&eps, dc, dp));
        if dc - linalg::rank_dense(&sigma) != dm {
            return Err(fail("kernel of sigma isomorphic to M", l));
        }
        let m_into: Vec<Vec<Vec<i64>>> = strmod::canonical_homs_words(p, m.word(), &cur)
            .into_iter()
            .filter(|h| h.rank() == dm)
            .map(|h| dense(&h, dm, dc))
            .collect();
        if !m_into.iter().any(|f| linalg::is_zero(&linalg::matmul(&sigma, f))) {
            return Err(fail("kernel of sigma isomorphic to M", l));
        }
        let mut power = sigma.clone();
        for _ in 1..l {
            power = linalg::matmul(&power, &sigma);
        }
        if !m_into.iter().any(|f| same_image(&power, f)) {
            return Err(fail("image of sigma^l isomorphic to M", l));
        }
    }
    let mut notes = vec!["maximality of the ladder is assumed, not checked".to_string()];
    let class = if complete {
        let wn = StringModule::new(p, &ladder.word(p, top)?);
        if strmod::hom_dim(p, &wn, m) != 1 {
            return Err(fail("dim Hom(W_N, M) = 1", top));
        }
        let own = homology::omega(p, &wn)?;
        if homology::stable_hom_dim(p, &own, m) != 0 {
            return Err(fail("Ext^1(W_N, M) = 0", top));
        }
        UdrClass::truncated(top as u32 + 1)
    } else {
        notes.push(format!("verified to depth {top}; infinitude follows from the repeating block"));
        UdrClass::PowerSeries
    };
    Ok(LadderVerdict { class, depth: top, complete, notes })
}

/// A module on the star reduction of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeModule {
    /// A word over the star presentation.
    Word(String),
    /// Distance `d` on the tube diagonal starting at the boundary.
    Tube { d: usize },
    /// Position `j` on the diagonal through the simple `S(t)`.
    Diagonal { t: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeClassification {
    pub star: String,
    pub word: String,
    pub classification: Classification,
    pub transport: String,
}

/// Classify on `star_reduce(graph)` and report the invariant-level result
/// for the tree algebra.
pub fn classify_tree(graph: &BrauerGraph, module: &TreeModule) -> Result<TreeClassification> {
    if !graph.is_tree() {
        return Err(Error::NotATree);
    }
    let gc = ribbon::growth_class(graph);
    if gc != GrowthClass::NonPolynomial {
        return Err(Error::GrowthClassUnsupported(gc.to_string()));
    }
    let star = ribbon::star_reduce(graph)?;
    let p = present(&star);
    let ss = p.star_strings()?;
    let word = match module {
        TreeModule::Word(text) => strmod::parse_word(text, &p)?,
        TreeModule::Tube { d } => ss.tube_diagonal(*d)?,
        TreeModule::Diagonal { t, j } => {
            let diag = homology::simple_diagonals(&p)
                .into_iter()
                .find(|x| x.t == *t)
                .ok_or_else(|| Error::IndexOutOfFamily(format!("no Omega-stable diagonal through S({t})")))?;
            diag.positions(&p, j + 1).get(*j).cloned().ok_or_else(|| Error::IndexOutOfFamily(format!("diagonal ends before {j}")))?
        }
    };
    let m = StringModule::new(&p, &word);
    let classification = classify(&p, &m)?;
    Ok(TreeClassification {
        star: homology::family_name(&p),
        word: m.display(&p),
        classification,
        transport: "the tree algebra is derived equivalent to the star algebra; the induced stable equivalence of Morita type \
                    preserves universal deformation rings, so the class holds for the corresponding tree module"
            .to_string(),
    })
}
