//! Verification suites: every checked identity becomes one [`Check`] line
//! with expected and computed values, tagged with the acceptance criterion
//! it supports. Shared by `brauer verify` and the acceptance tests.

use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{self, ComponentAddress};
use crate::presentation::{make_koszul, make_star, present, Presentation};
use crate::ribbon::{self, BrauerGraph};
use crate::strmod::{self, MatrixRep, StringModule, StringWord};
use crate::udr::{self, Ladder, TreeModule, UdrClass};

pub const SUITES: [&str; 9] = ["walks", "homs-oracle", "syzygy", "tubes", "case1", "case2", "koszul", "section4", "udr-tables"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub max_len: usize,
    pub seed: u64,
    pub bound: Option<usize>,
    pub probe_depth: Option<usize>,
    /// Size of the random tree corpus.
    pub trees: usize,
}

impl Default for Config {
    fn default() -> Config {
        Config { max_len: 12, seed: 2024, bound: None, probe_depth: None, trees: 200 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

impl Check {
    pub fn line(&self) -> String {
        format!(
            "[{}] c{:02} {}: expected {}, computed {}",
            if self.ok { "ok" } else { "FAIL" },
            self.criterion,
            self.name,
            self.expected,
            self.computed
        )
    }
}

fn eq<T: Debug + PartialEq>(criterion: u8, name: impl Into<String>, expected: T, computed: T) -> Check {
    Check { criterion, name: name.into(), ok: expected == computed, expected: format!("{expected:?}"), computed: format!("{computed:?}") }
}

fn holds(criterion: u8, name: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>, ok: bool) -> Check {
    Check { criterion, name: name.into(), expected: expected.into(), computed: computed.into(), ok }
}

/// Suite that carries the lines of acceptance criterion `k`.
pub fn criterion_suite(k: u8) -> Option<&'static str> {
    Some(match k {
        1 | 2 => "walks",
        3 => "homs-oracle",
        4 => "syzygy",
        5 => "tubes",
        6 => "case1",
        7 => "case2",
        8 => "section4",
        9 => "koszul",
        10 | 11 => "udr-tables",
        _ => return None,
    })
}

pub fn run_criterion(k: u8, cfg: &Config) -> Result<Vec<Check>> {
    let suite = criterion_suite(k).ok_or_else(|| Error::IndexOutOfFamily(format!("no criterion {k}")))?;
    Ok(run_suite(suite, cfg)?.into_iter().filter(|c| c.criterion == k).collect())
}

pub fn run_suite(name: &str, cfg: &Config) -> Result<Vec<Check>> {
    match name {
        "walks" => Ok(walks(cfg)),
        "homs-oracle" => homs_oracle(cfg),
        "syzygy" => syzygy(cfg),
        "tubes" => tubes(cfg),
        "case1" => case1(cfg),
        "case2" => case2(cfg),
        "koszul" => koszul(cfg),
        "section4" => section4(cfg),
        "udr-tables" => udr_tables(cfg),
        _ => Err(Error::Format(format!("unknown suite `{name}` (expected one of {})", SUITES.join(", ")))),
    }
}

pub fn star(n: usize, mbar: &[u32]) -> Presentation {
    present(&make_star(n, mbar).expect("valid star parameters"))
}

fn module(p: &Presentation, w: &StringWord) -> StringModule {
    StringModule::new(p, w)
}

fn label(p: &Presentation) -> String {
    homology::family_name(p)
}

/// Seeded random trees with 2..=8 edges and multiplicities 1..=4.
pub fn tree_corpus(cfg: &Config) -> Vec<BrauerGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.trees)
        .map(|_| {
            let e = rng.gen_range(2..=8);
            ribbon::random_tree(&mut rng, e, 4)
        })
        .collect()
}

fn walks(cfg: &Config) -> Vec<Check> {
    let corpus = tree_corpus(cfg);
    let total = corpus.len();
    let count = |f: &dyn Fn(&BrauerGraph) -> bool| corpus.iter().filter(|g| f(g)).count();
    let mut out = vec![
        eq(1, "one Green walk of length 2|E|", total, count(&|g| {
            let w = g.green_walks();
            w.len() == 1 && w[0].len() == 2 * g.n_edges()
        })),
        eq(1, "two double-stepped walks of length |E|", total, count(&|g| {
            let w = g.double_stepped_walks();
            w.len() == 2 && w.iter().all(|x| x.len() == g.n_edges())
        })),
        eq(1, "one face of perimeter 2|E|", total, count(&|g| g.perimeters() == vec![2 * g.n_edges()])),
        eq(1, "bipartite", total, count(&|g| g.is_bipartite())),
    ];
    let mut per_criterion = [0usize; 6];
    let mut all = 0;
    for g in &corpus {
        let s = ribbon::star_reduce(g).expect("tree");
        let r = ribbon::derived_equivalent(g, &s);
        for (k, c) in r.criteria.iter().enumerate() {
            per_criterion[k] += usize::from(c.ok);
        }
        all += usize::from(r.equivalent);
    }
    let names = ["vertices", "edges", "faces", "multiplicities", "perimeters", "bipartite"];
    for (k, n) in names.iter().enumerate() {
        out.push(eq(2, format!("star reduction preserves {n}"), total, per_criterion[k]));
    }
    out.push(eq(2, "derived_equivalent(tree, star_reduce(tree))", total, all));
    out
}

fn homs_oracle(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for p in [star(2, &[2, 2, 2]), star(2, &[2, 3])] {
        let words = strmod::enumerate_words(&p, cfg.max_len);
        let reps: Vec<MatrixRep> = words.iter().map(|w| MatrixRep::from_word(&p, w)).collect();
        let (mut pairs, mut agree, mut intertwine) = (0usize, 0usize, 0usize);
        let mut first_bad = None;
        for (a, wa) in words.iter().enumerate() {
            for (b, wb) in words.iter().enumerate() {
                pairs += 1;
                let homs = strmod::canonical_homs_words(&p, wa, wb);
                let oracle = strmod::oracle_hom_dim(&p, &reps[a], &reps[b]);
                if homs.len() == oracle {
                    agree += 1;
                } else if first_bad.is_none() {
                    first_bad = Some(format!("{} -> {}: {} vs {}", wa.display(&p), wb.display(&p), homs.len(), oracle));
                }
                let (da, db) = (wa.dim(), wb.dim());
                if homs.iter().all(|h| strmod::intertwines(&strmod::hom_matrix(h, da, db), &reps[a], &reps[b])) {
                    intertwine += 1;
                }
            }
        }
        let name = label(&p);
        out.push(holds(
            3,
            format!("{name}: |canonical homs| = oracle dim, {} words of length <= {}", words.len(), cfg.max_len),
            format!("{pairs}/{pairs}"),
            match first_bad {
                None => format!("{agree}/{pairs}"),
                Some(b) => format!("{agree}/{pairs} (first mismatch {b})"),
            },
            agree == pairs,
        ));
        out.push(eq(3, format!("{name}: canonical hom matrices intertwine the actions"), pairs, intertwine));
    }
    let p = star(2, &[2, 2, 2]);
    let s2 = StringModule::simple(&p, 2);
    out.push(eq(3, "dim Hom(S(2), S(2))", 1, strmod::hom_dim(&p, &s2, &s2)));
    let (a0, a1) = (StringModule::parse("a0", &p)?, StringModule::parse("a1", &p)?);
    out.push(eq(3, "dim Hom(M[a0], M[a1])", 0, strmod::hom_dim(&p, &a0, &a1)));
    out.push(eq(3, "dim Hom(M[a1], M[a0]) (onto the shared S(1))", 1, strmod::hom_dim(&p, &a1, &a0)));
    let ph = strmod::proj_canonical_homs(&p, s2.word(), 2);
    out.push(eq(3, "maps S(2) -> P(2), P(2) -> S(2)", (1, 1), (ph.into.len(), ph.out_of.len())));
    Ok(out)
}

fn syzygy(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for p in [star(2, &[2, 2, 2]), star(3, &[2, 2, 2, 2])] {
        let name = label(&p);
        let ss = p.star_strings()?;
        let (n, i) = (ss.n(), ss.i());
        let m0 = ss.m(0) as usize;
        for l in i..=n {
            let x = module(&p, &ss.x(l, n)?);
            let want = ss.concat(&[ss.x(0, l)?, ss.a_pow(l, m0 - 1)?])?;
            let got = homology::omega(&p, &x)?;
            out.push(eq(4, format!("{name}: Omega(M[x_{{{l},{n}}}]) = M[x_{{0,{l}}} A_{l}^{}]", m0 - 1), want.canonical(&p).display(&p), got.display(&p)));
        }
        for t in 0..p.n_q() {
            let s = StringModule::simple(&p, t);
            let rad = strmod::radical_word(&p, t).map(|(w, _)| w.canonical(&p).display(&p));
            out.push(eq(4, format!("{name}: Omega(S({t})) = rad P({t})"), rad, Some(homology::omega(&p, &s)?.display(&p))));
        }
        let words = strmod::enumerate_words(&p, cfg.max_len.min(6));
        let (mut total, mut dim_ok, mut top_ok, mut inv_ok) = (0, 0, 0, 0);
        for w in &words {
            let m = module(&p, w);
            if homology::is_projective(&p, &m) {
                continue;
            }
            total += 1;
            let sy = homology::syzygy(&p, &m)?;
            let om = sy.module();
            let (dimv, topv) = homology::oracle_syzygy_profile(&p, &m);
            let mut top = vec![0; p.n_q()];
            for q in om.top(&p) {
                top[q] += 1;
            }
            let cover_dim: usize = sy.cover.iter().map(|&q| p.projective(q).dim()).sum();
            dim_ok += usize::from(dimv == om.word().dim_vector(&p) && om.dim() + m.dim() == cover_dim);
            top_ok += usize::from(topv == top);
            inv_ok += usize::from(homology::omega_inv(&p, om)? == m);
        }
        out.push(eq(4, format!("{name}: dim Omega(M) = dim P(M) - dim M = oracle kernel dim (length <= 6)"), total, dim_ok));
        out.push(eq(4, format!("{name}: top of Omega(M) matches oracle"), total, top_ok));
        out.push(eq(4, format!("{name}: Omega^-1 Omega = id"), total, inv_ok));
    }
    Ok(out)
}

/// Boundary strings listed for stars and Koszul lines.
pub fn expected_boundary(p: &Presentation) -> Result<Vec<String>> {
    let mut words: Vec<StringWord> = Vec::new();
    if let Ok(ss) = p.star_strings() {
        let (n, i) = (ss.n(), ss.i());
        let m0 = ss.m(0) as usize;
        for l in 0..=n {
            words.push(ss.concat(&[ss.x((l + 1) % (n + 1), l)?, ss.a_pow(l, m0 - 1)?])?);
        }
        for j in 0..i {
            words.push(ss.delta_pow(j, ss.m(j + 1) as usize - 1, false)?);
        }
        for k in i..=n {
            words.push(ss.e(k)?);
        }
    } else if let crate::presentation::Family::Koszul { n, l, m, .. } = *p.family() {
        let rep = |a: &str, k: u32| vec![a; k as usize - 1].join(" ");
        words.push(strmod::parse_word(&rep("d", l), p)?);
        words.push(strmod::parse_word(&rep("g", m), p)?);
        for j in 1..=n {
            words.push(strmod::parse_word(&format!("a{j}"), p)?);
            words.push(strmod::parse_word(&format!("b{j}"), p)?);
        }
    } else {
        return Err(Error::IndexOutOfFamily("boundary list is known for stars and Koszul lines only".into()));
    }
    let mut out: Vec<String> = words.iter().map(|w| w.canonical(p).display(p)).collect();
    out.sort();
    Ok(out)
}

fn tubes(_cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let family = [
        star(2, &[2, 2, 2]),
        star(2, &[2, 3]),
        star(1, &[2, 2, 2]),
        star(3, &[2, 2, 2, 2]),
        make_koszul(2, 2, 3)?,
    ];
    for p in &family {
        let name = label(p);
        let g = p.graph();
        let e = g.n_edges();
        let walks = g.double_stepped_walks();
        out.push(eq(5, format!("{name}: double-stepped walk lengths"), vec![e, e], walks.iter().map(|w| w.len()).collect()));
        let bs = homology::boundary_modules(p);
        let addrs: Vec<Option<ComponentAddress>> = bs.iter().map(|b| homology::locate_in_tube(p, b)).collect();
        let mut ids: Vec<usize> = addrs.iter().flatten().filter_map(|a| a.tube_id()).collect();
        ids.sort_unstable();
        ids.dedup();
        out.push(eq(5, format!("{name}: boundary modules lie in tubes 1 and 2"), vec![1, 2], ids));
        let ranks_ds: Vec<(usize, usize)> = addrs
            .iter()
            .map(|a| match a {
                Some(ComponentAddress::ExceptionalTube { rank, d, .. }) => (*rank, *d),
                _ => (0, usize::MAX),
            })
            .collect();
        out.push(eq(5, format!("{name}: every boundary module at (rank |E|, d 0)"), vec![(e, 0); bs.len()], ranks_ds));
        let periods: Vec<Option<usize>> = bs.iter().map(|b| homology::is_periodic(p, b, None).ok().flatten()).collect();
        out.push(holds(
            5,
            format!("{name}: boundary modules are Omega-periodic with period dividing 2|E|"),
            format!("period | {}", 2 * e),
            format!("{periods:?}"),
            periods.iter().all(|x| x.is_some_and(|k| (2 * e) % k == 0)),
        ));
        let (swaps, rows) = homology::omega_swaps_tubes(p)?;
        out.push(holds(5, format!("{name}: Omega swaps the tubes on all {} boundary modules", rows.len()), "true", swaps.to_string(), swaps));
        let mut got: Vec<String> = bs.iter().map(|b| b.display(p)).collect();
        got.sort();
        out.push(eq(5, format!("{name}: boundary set equals the listed strings"), expected_boundary(p)?, got));
        if let Some(s) = p.star_shape() {
            let exc: Vec<usize> = ribbon::exceptional_edges(g).iter().map(|&e| p.q_of_half(g.edge_halves(e).0)).collect();
            let mut exc = exc;
            exc.sort_unstable();
            out.push(eq(5, format!("{name}: exceptional edges"), (s.i()..=s.n).collect::<Vec<_>>(), exc));
        }
    }
    Ok(out)
}

/// Closed form, hook generation, stable End, Ext^1 and UDR along the tube
/// diagonal `0..=n`, then the non-brick strings beyond it.
fn tube_battery(p: &Presentation, criterion: u8, out: &mut Vec<Check>) -> Result<Vec<StringModule>> {
    let ss = p.star_strings()?;
    let n = ss.n();
    let e = p.graph().n_edges();
    let name = label(p);
    let start = ss.tube_diagonal(0)?;
    let hooks = homology::diagonal(p, &start, n + 4, homology::HookOp::LeftPlus);
    let mut mods = Vec::new();
    for s in 0..n + 4 {
        let c = ss.tube_diagonal(s)?;
        let agree = hooks.get(s).is_some_and(|h| h.same_module(&c, p));
        out.push(holds(criterion, format!("{name}: position {s} closed form = hook diagonal"), c.display(p), hooks.get(s).map_or("none".into(), |h| h.display(p)), agree));
        let m = module(p, &c);
        let se = homology::stable_end_dim(p, &m);
        if s > n {
            out.push(holds(criterion, format!("{name}: N_{} = {} has stable End >= 2", s - n - 1, m.display(p)), ">= 2", se.to_string(), se >= 2));
            continue;
        }
        let d = homology::locate(p, &m)?.d();
        out.push(eq(criterion, format!("{name}: d_M of {}", m.display(p)), Some(s), d));
        let mut orbit_se = Vec::new();
        for k in -(2 * e as i64)..=(2 * e as i64) {
            orbit_se.push(homology::stable_end_dim(p, &homology::omega_pow(p, &m, k)?));
        }
        out.push(eq(criterion, format!("{name}: stable End = 1 on the Omega-orbit of {}", m.display(p)), vec![1; orbit_se.len()], orbit_se));
        out.push(eq(criterion, format!("{name}: ext1 at d = {s}"), usize::from(s == n), homology::ext1_dim(p, &m)?));
        let want = if s == n { UdrClass::PowerSeries } else { UdrClass::Base };
        out.push(eq(criterion, format!("{name}: UDR at d = {s}"), want, udr::classify(p, &m)?.class));
        mods.push(m);
    }
    Ok(mods)
}

fn case1(_cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    tube_battery(&star(2, &[2, 2, 2]), 6, &mut out)?;
    Ok(out)
}

fn case2(_cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let p = star(1, &[2, 2, 2]);
    let ss = p.star_strings()?;
    for j in 0..=ss.n() {
        out.push(eq(7, format!("z_{j} sits at tube distance n - j"), Some(ss.n() - j), homology::locate(&p, &module(&p, &ss.z(j)?))?.d()));
    }
    tube_battery(&p, 7, &mut out)?;
    Ok(out)
}

/// Stable End, Ext^1 and UDR along the diagonal through `S(t)`.
fn diagonal_battery(p: &Presentation, d: &homology::SimpleDiagonal, want: &[UdrClass], out: &mut Vec<Check>) -> Result<Vec<StringModule>> {
    let ss = p.star_strings()?;
    let n = ss.n();
    let name = format!("{} D_{}", label(p), d.t);
    let span = 2 * n + 4;
    let pos = d.positions(p, span);
    let mut closed_ok = 0;
    for (j, w) in pos.iter().enumerate().take(n + 1) {
        let c = if d.case == 1 { ss.simple_diagonal(d.t, j)? } else { ss.x10_diagonal(j)? };
        closed_ok += usize::from(c.same_module(w, p));
    }
    out.push(eq(8, format!("{name}: closed-form strings agree with hook diagonal at positions 0..=n"), n + 1, closed_ok));
    let se: Vec<usize> = pos.iter().map(|w| homology::stable_end_dim(p, &module(p, w))).collect();
    let brick: Vec<usize> = se.iter().enumerate().filter(|(_, &x)| x == 1).map(|(j, _)| j).collect();
    out.push(eq(8, format!("{name}: positions with stable End = 1 among 0..{}", span - 1), (0..=n).collect::<Vec<_>>(), brick));
    let mut ext = Vec::new();
    let mut mods = Vec::new();
    for w in pos.iter().take(n + 1) {
        let m = module(p, w);
        ext.push(homology::ext1_dim(p, &m)?);
        mods.push(m);
    }
    let want_ext: Vec<usize> = (0..=n).map(|j| usize::from(j == 0 || j == n)).collect();
    out.push(eq(8, format!("{name}: ext1 along positions 0..=n"), want_ext, ext));
    let got: Vec<UdrClass> = mods.iter().map(|m| udr::classify(p, m).map(|c| c.class)).collect::<Result<_>>()?;
    out.push(eq(8, format!("{name}: UDR along positions 0..=n"), want.to_vec(), got));
    Ok(mods)
}

fn same_component_check(p: &Presentation, t: usize, out: &mut Vec<Check>) -> Result<()> {
    let name = label(p);
    let s = StringModule::simple(p, t);
    let os = homology::omega(p, &s)?;
    let stable = homology::omega_stable_simple_component(p, t)?;
    out.push(eq(8, format!("{name}: component of S({t}) is Omega-stable"), true, stable));
    let radius = 4 * p.graph().n_edges() + 4;
    out.push(eq(8, format!("{name}: Omega(S({t})) reachable from S({t}) by hook moves"), true, homology::within_moves(p, &s, &os, radius)));
    let e = p.q_edge(t);
    out.push(eq(8, format!("{name}: S({t}) and rad P({t}) share a component (edge-path criterion)"), true, ribbon::simple_rad_same_component(p.graph(), e, e)?));
    Ok(())
}

fn section4(_cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let p = star(2, &[2, 2, 2]);
    let diags = homology::simple_diagonals(&p);
    let ts: Vec<usize> = diags.iter().map(|d| d.t).collect();
    out.push(eq(8, format!("{}: simples with Omega-stable diagonal", label(&p)), vec![0, 1], ts));
    for d in &diags {
        same_component_check(&p, d.t, &mut out)?;
        diagonal_battery(&p, d, &[UdrClass::TruncatedPoly(2), UdrClass::Base, UdrClass::PowerSeries], &mut out)?;
    }
    let q = star(2, &[2, 3]);
    same_component_check(&q, 0, &mut out)?;
    let d = homology::simple_diagonals(&q).into_iter().find(|d| d.t == 0).expect("diagonal through S(0)");
    out.push(eq(8, format!("{}: diagonal through S(0) is case 2", label(&q)), 2, d.case));
    diagonal_battery(&q, &d, &[UdrClass::TruncatedPoly(2), UdrClass::Base, UdrClass::TruncatedPoly(3)], &mut out)?;
    let s0 = StringModule::simple(&q, 0);
    out.push(eq(8, "UDR(S(0)) on W_{2,(2,3)}", UdrClass::TruncatedPoly(3), udr::classify(&q, &s0)?.class));
    let m0 = module(&q, &q.star_strings()?.x(1, 0)?);
    out.push(eq(8, "UDR(M_0) on W_{2,(2,3)}", UdrClass::TruncatedPoly(2), udr::classify(&q, &m0)?.class));
    let r = star(2, &[3, 3]);
    out.push(eq(8, format!("{}: component of S(0) is Omega-stable", label(&r)), false, homology::omega_stable_simple_component(&r, 0)?));
    Ok(out)
}

/// Cumulative diagonal strings for the Koszul line, positions `0..=n`.
pub fn koszul_diagonal(p: &Presentation) -> Result<Vec<StringWord>> {
    let crate::presentation::Family::Koszul { n, l, m, .. } = *p.family() else {
        return Err(Error::IndexOutOfFamily("not a Koszul line".into()));
    };
    let rep = |a: &str, k: u32| vec![a.to_string(); k as usize - 1];
    let mut blocks: Vec<Vec<String>> = vec![rep("g", m)];
    let pair = |x: String, y: String| vec![x, y];
    if n % 2 == 0 {
        for k in (2..=n).rev().step_by(2) {
            blocks.push(pair(format!("-a{k}"), format!("b{}", k - 1)));
        }
        blocks.push(pair("-d".into(), "a1".into()));
        for k in (2..n - 1).step_by(2) {
            blocks.push(pair(format!("-b{k}"), format!("a{}", k + 1)));
        }
    } else {
        for k in (3..=n).rev().step_by(2) {
            blocks.push(pair(format!("-a{k}"), format!("b{}", k - 1)));
        }
        let mut b = vec!["-a1".to_string()];
        b.extend(rep("d", l));
        blocks.push(b);
        for k in (1..n - 1).step_by(2) {
            blocks.push(pair(format!("-b{k}"), format!("a{}", k + 1)));
        }
    }
    let mut acc: Vec<String> = Vec::new();
    let mut out = Vec::new();
    for b in blocks {
        acc.extend(b);
        out.push(strmod::parse_word(&acc.join(" "), p)?);
    }
    Ok(out)
}

fn koszul(_cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let (n, l, m) = (2usize, 2u32, 3u32);
    let p = make_koszul(n, l, m)?;
    let g = p.graph();
    let s = ribbon::star_reduce(g)?;
    let shape = ribbon::recognize_star(&s).map(|x| (x.n, x.mbar));
    out.push(eq(9, "star_reduce(Koszul(2,2,3))", Some((n, vec![l.min(m), l.max(m)])), shape));
    out.push(eq(9, "Koszul(2,2,3) derived equivalent to its star reduction", true, ribbon::derived_equivalent(g, &s).equivalent));
    let bs = homology::boundary_modules(&p);
    let addrs: Vec<ComponentAddress> = bs.iter().filter_map(|b| homology::locate_in_tube(&p, b)).collect();
    let mut ids: Vec<usize> = addrs.iter().filter_map(|a| a.tube_id()).collect();
    ids.sort_unstable();
    ids.dedup();
    out.push(eq(9, "number of exceptional tubes", 2, ids.len()));
    let ranks: Vec<usize> = ids
        .iter()
        .map(|&t| {
            addrs
                .iter()
                .find_map(|a| match a {
                    ComponentAddress::ExceptionalTube { tube_id, rank, .. } if *tube_id == t => Some(*rank),
                    _ => None,
                })
                .unwrap_or(0)
        })
        .collect();
    out.push(eq(9, "tube ranks 2n+2", vec![2 * n + 2; 2], ranks));
    let (swaps, _) = homology::omega_swaps_tubes(&p)?;
    out.push(eq(9, "Omega swaps the two tubes", true, swaps));
    let mut got: Vec<String> = bs.iter().map(|b| b.display(&p)).collect();
    got.sort();
    out.push(eq(9, "boundary set", expected_boundary(&p)?, got));
    let diag = koszul_diagonal(&p)?;
    let hooks = homology::diagonal(&p, &diag[0], n + 2, homology::HookOp::RightPlus);
    let e = g.n_edges();
    for (s, w) in diag.iter().enumerate() {
        let mm = module(&p, w);
        let name = format!("position {s}: {}", w.display(&p));
        out.push(eq(9, format!("{name} on the hook diagonal"), true, hooks.get(s).is_some_and(|h| h.same_module(w, &p))));
        out.push(eq(9, format!("{name} stable End"), 1, homology::stable_end_dim(&p, &mm)));
        out.push(eq(9, format!("{name} d_M"), Some(s), homology::locate(&p, &mm)?.d()));
        let want = if s + 1 == e { UdrClass::PowerSeries } else { UdrClass::Base };
        out.push(eq(9, format!("{name} UDR"), want, udr::classify(&p, &mm)?.class));
    }
    if let Some(next) = hooks.get(n + 1) {
        let se = homology::stable_end_dim(&p, &module(&p, next));
        out.push(holds(9, format!("position {}: {} stable End", n + 1, next.display(&p)), ">= 2", se.to_string(), se >= 2));
    }
    Ok(out)
}

/// Every module classified by the case1, case2, section4 and koszul
/// suites, with its presentation.
pub fn classified_modules() -> Result<Vec<(Presentation, StringModule)>> {
    let mut out = Vec::new();
    let mut sink = Vec::new();
    for p in [star(2, &[2, 2, 2]), star(1, &[2, 2, 2])] {
        for m in tube_battery(&p, 0, &mut sink)? {
            out.push((p.clone(), m));
        }
    }
    for p in [star(2, &[2, 2, 2]), star(2, &[2, 3])] {
        for d in homology::simple_diagonals(&p) {
            let n = p.star_strings()?.n();
            for w in d.positions(&p, n + 1) {
                out.push((p.clone(), module(&p, &w)));
            }
        }
    }
    let q = star(2, &[2, 3]);
    out.push((q.clone(), StringModule::simple(&q, 0)));
    let k = make_koszul(2, 2, 3)?;
    for w in koszul_diagonal(&k)? {
        out.push((k.clone(), module(&k, &w)));
    }
    Ok(out)
}

fn udr_tables(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let table = |p: &Presentation, words: Vec<(String, StringWord, UdrClass)>, out: &mut Vec<Check>| -> Result<()> {
        for (row, w, want) in words {
            let c = udr::classify(p, &module(p, &w))?;
            out.push(eq(0, format!("{} {row} {}", label(p), w.display(p)), want.to_string(), c.class.to_string()));
        }
        Ok(())
    };
    for p in [star(2, &[2, 2, 2]), star(1, &[2, 2, 2]), star(3, &[2, 2, 2, 2])] {
        let ss = p.star_strings()?;
        let n = ss.n();
        let rows = (0..=n)
            .map(|s| Ok((format!("tube d={s}"), ss.tube_diagonal(s)?, if s == n { UdrClass::PowerSeries } else { UdrClass::Base })))
            .collect::<Result<Vec<_>>>()?;
        table(&p, rows, &mut out)?;
    }
    for (p, ends) in [
        (star(2, &[2, 2, 2]), [UdrClass::TruncatedPoly(2), UdrClass::PowerSeries]),
        (star(3, &[2, 2, 2, 2]), [UdrClass::TruncatedPoly(2), UdrClass::PowerSeries]),
        (star(2, &[2, 3]), [UdrClass::TruncatedPoly(2), UdrClass::TruncatedPoly(3)]),
        (star(2, &[2, 4]), [UdrClass::TruncatedPoly(2), UdrClass::TruncatedPoly(4)]),
    ] {
        let n = p.star_strings()?.n();
        for d in homology::simple_diagonals(&p) {
            let rows = d
                .positions(&p, n + 1)
                .into_iter()
                .enumerate()
                .map(|(j, w)| {
                    let want = if j == 0 { ends[0].clone() } else if j == n { ends[1].clone() } else { UdrClass::Base };
                    (format!("D_{} j={j}", d.t), w, want)
                })
                .collect();
            table(&p, rows, &mut out)?;
        }
    }
    let w322 = star(3, &[2, 2]);
    let e0 = StringModule::simple(&w322, 0);
    let c = udr::classify(&w322, &e0)?;
    out.push(holds(0, format!("{} (one-domestic) S(0) not covered", label(&w322)), "unknown", c.class.to_string(), !c.class.is_ring()));
    for (mults, module, want) in [
        (vec![2, 2, 2, 1], TreeModule::Tube { d: 0 }, UdrClass::Base),
        (vec![2, 2, 2, 1], TreeModule::Tube { d: 2 }, UdrClass::PowerSeries),
        (vec![2, 1, 4], TreeModule::Diagonal { t: 0, j: 1 }, UdrClass::TruncatedPoly(4)),
    ] {
        let r = udr::classify_tree(&ribbon::line_graph(&mults), &module)?;
        out.push(eq(0, format!("line {mults:?} {module:?} via {}", r.star), want, r.classification.class));
    }

    let q = star(2, &[2, 3]);
    let ss = q.star_strings()?;
    let s0 = StringModule::simple(&q, 0);
    let ladder = Ladder::Finite((0..ss.m(1) as usize).map(|j| if j == 0 { Ok(s0.word().clone()) } else { ss.delta_pow(0, j, true) }).collect::<Result<_>>()?);
    let v = udr::verify_ladder(&q, &s0, &ladder, cfg.probe_depth)?;
    out.push(eq(10, "finite ladder S(0), d0^-1, d0^-2 on W_{2,(2,3)}", (UdrClass::TruncatedPoly(3), true), (v.class, v.complete)));
    let p = star(2, &[2, 2, 2]);
    let ss = p.star_strings()?;
    let (n, i) = (ss.n(), ss.i());
    let prefix = ss.concat(&[ss.y(0)?, ss.x(i, n)?])?;
    let block = ss.concat(&[ss.x(i, 0)?, ss.y(0)?, ss.x(i, n)?])?;
    let m = module(&p, &prefix);
    let v = udr::verify_ladder(&p, &m, &Ladder::Template { prefix: prefix.clone(), block }, cfg.probe_depth)?;
    out.push(eq(10, format!("template ladder for M[y_0 x_{{{i},{n}}}] on W_{{2,(2,2,2)}}"), UdrClass::PowerSeries, v.class));
    for d in homology::simple_diagonals(&p) {
        let mn = module(&p, &d.positions(&p, n + 1)[n]);
        let om = homology::omega(&p, &mn)?;
        let alpha = strmod::parse_word(&format!("a{}", d.t), &p)?;
        // orient D_n so that alpha_t D_n composes
        let block = [om.word().clone(), om.word().inverse(&p)].into_iter().find_map(|w| {
            let mut letters = alpha.letters().to_vec();
            letters.extend_from_slice(w.letters());
            StringWord::from_letters(&p, letters).ok().map(|b| (w, b))
        });
        let got = match block {
            Some((prefix, block)) => udr::verify_ladder(&p, &om, &Ladder::Template { prefix, block }, cfg.probe_depth).map(|v| v.class),
            None => Err(Error::IndexOutOfFamily("alpha_t D_n is not a string".into())),
        };
        out.push(eq(10, format!("template ladder D_n (alpha_{} D_n)^l for Omega(M_n) on W_{{2,(2,2,2)}}", d.t), Ok(UdrClass::PowerSeries), got));
    }
    let broken = Ladder::Finite(vec![s0.word().clone(), strmod::parse_word("a2", &q)?]);
    let r = udr::verify_ladder(&q, &s0, &broken, cfg.probe_depth);
    out.push(eq(10, "broken ladder rejected", Err(Error::HypothesisFailed { condition: "epimorphism".into(), l: 1 }), r.map(|v| v.class)));

    let mods = classified_modules()?;
    let mut agree = 0;
    let mut bad = Vec::new();
    for (p, m) in &mods {
        let a = udr::classify(p, m)?.class;
        let b = udr::classify(p, &homology::omega(p, m)?)?.class;
        let c = udr::classify(p, &homology::omega_inv(p, m)?)?.class;
        if a == b && a == c {
            agree += 1;
        } else {
            bad.push(format!("{} {}: {a} / {b} / {c}", label(p), m.display(p)));
        }
    }
    out.push(holds(
        11,
        format!("classify(Omega^{{+-1}}(M)) = classify(M) over {} modules from the case1/case2/section4/koszul suites", mods.len()),
        format!("{}/{}", mods.len(), mods.len()),
        if bad.is_empty() { format!("{agree}/{}", mods.len()) } else { format!("{agree}/{} ({})", mods.len(), bad.join("; ")) },
        bad.is_empty(),
    ));
    Ok(out)
}
