//! Ribbon graphs with multiplicities (Brauer graphs).
//!
//! A graph is given by half-edges `H`, the attachment map `s: H -> V`, the
//! pairing involution `ι` and the rotation `σ` (one cycle per vertex). All
//! walk- and face-type data is derived from the single step permutation
//! `h ↦ ι(σ(h))`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// A vertex record as it appears in the graph file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: String,
    pub multiplicity: u32,
}

/// Ordered map read from a JSON object, rejecting repeated keys.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UniqueMap<V>(pub Vec<(String, V)>);

impl<V: Serialize> Serialize for UniqueMap<V> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(k, v)| (k, v)))
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for UniqueMap<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct Vis<V>(std::marker::PhantomData<V>);
        impl<'de, V: Deserialize<'de>> Visitor<'de> for Vis<V> {
            type Value = UniqueMap<V>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object with distinct keys")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut seen = BTreeSet::new();
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, V>()? {
                    if !seen.insert(k.clone()) {
                        return Err(de::Error::custom(format!("duplicate key `{k}`")));
                    }
                    out.push((k, v));
                }
                Ok(UniqueMap(out))
            }
        }
        d.deserialize_map(Vis(std::marker::PhantomData))
    }
}

/// Raw graph data in the canonical file layout. Not yet validated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphData {
    pub vertices: Vec<VertexRecord>,
    pub half_edges: Vec<String>,
    pub attach: UniqueMap<String>,
    pub pairing: UniqueMap<String>,
    pub cyclic_orders: UniqueMap<Vec<String>>,
}

/// Tree shorthand: an edge list, per-vertex rotations given as neighbour
/// lists, and multiplicities (default 1).
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeShorthand {
    pub edges: Vec<(String, String)>,
    #[serde(default)]
    pub multiplicities: UniqueMap<u32>,
    #[serde(default)]
    pub rotation: UniqueMap<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Option<Vec<VertexRecord>>,
    half_edges: Option<Vec<String>>,
    attach: Option<UniqueMap<String>>,
    pairing: Option<UniqueMap<String>>,
    cyclic_orders: Option<UniqueMap<Vec<String>>>,
    tree: Option<TreeShorthand>,
}

impl GraphData {
    /// Parse the JSON graph format (canonical layout or `tree` shorthand).
    pub fn from_json(text: &str) -> Result<GraphData> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| {
            Error::Format(format!("line {} column {}: {}", e.line(), e.column(), e))
        })?;
        match file.tree {
            Some(t) => {
                if file.vertices.is_some() || file.half_edges.is_some() || file.attach.is_some() {
                    return Err(Error::Format("`tree` cannot be combined with explicit fields".into()));
                }
                t.expand()
            }
            None => {
                let missing = |n: &str| Error::Format(format!("missing field `{n}`"));
                Ok(GraphData {
                    vertices: file.vertices.ok_or_else(|| missing("vertices"))?,
                    half_edges: file.half_edges.ok_or_else(|| missing("half_edges"))?,
                    attach: file.attach.ok_or_else(|| missing("attach"))?,
                    pairing: file.pairing.ok_or_else(|| missing("pairing"))?,
                    cyclic_orders: file.cyclic_orders.ok_or_else(|| missing("cyclic_orders"))?,
                })
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph data serializes")
    }
}

impl TreeShorthand {
    /// Expand to the canonical layout. Edge `k` gets half-edges `k+` (first
    /// endpoint) and `k-` (second endpoint).
    pub fn expand(&self) -> Result<GraphData> {
        let mut order: Vec<String> = Vec::new();
        let mut seen = BTreeSet::new();
        for (a, b) in &self.edges {
            for v in [a, b] {
                if seen.insert(v.clone()) {
                    order.push(v.clone());
                }
            }
        }
        for (v, _) in &self.multiplicities.0 {
            if seen.insert(v.clone()) {
                order.push(v.clone());
            }
        }
        let mult: HashMap<&str, u32> = self.multiplicities.0.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        let mut data = GraphData::default();
        for v in &order {
            data.vertices.push(VertexRecord { id: v.clone(), multiplicity: *mult.get(v.as_str()).unwrap_or(&1) });
        }
        // neighbour -> half-edge, per vertex, in edge-list order
        let mut at: BTreeMap<String, Vec<(String, String)>> = BTreeMap::new();
        for (k, (a, b)) in self.edges.iter().enumerate() {
            let (hp, hm) = (format!("{k}+"), format!("{k}-"));
            data.half_edges.push(hp.clone());
            data.half_edges.push(hm.clone());
            data.attach.0.push((hp.clone(), a.clone()));
            data.attach.0.push((hm.clone(), b.clone()));
            data.pairing.0.push((hp.clone(), hm.clone()));
            data.pairing.0.push((hm.clone(), hp.clone()));
            at.entry(a.clone()).or_default().push((b.clone(), hp));
            at.entry(b.clone()).or_default().push((a.clone(), hm));
        }
        let rot: HashMap<&str, &Vec<String>> = self.rotation.0.iter().map(|(k, v)| (k.as_str(), v)).collect();
        for v in &order {
            let incident = at.get(v).cloned().unwrap_or_default();
            let cyc = match rot.get(v.as_str()) {
                None => incident.iter().map(|(_, h)| h.clone()).collect(),
                Some(nbrs) => {
                    let mut out = Vec::new();
                    for nb in nbrs.iter() {
                        let hs: Vec<_> = incident.iter().filter(|(u, _)| u == nb).collect();
                        if hs.len() != 1 {
                            return Err(Error::Format(format!(
                                "rotation at `{v}` names `{nb}`, which is not a unique neighbour"
                            )));
                        }
                        out.push(hs[0].1.clone());
                    }
                    if out.len() != incident.len() {
                        return Err(Error::Format(format!("rotation at `{v}` does not list every neighbour")));
                    }
                    out
                }
            };
            data.cyclic_orders.0.push((v.clone(), cyc));
        }
        Ok(data)
    }
}

/// Outcome of [`validate`]: empty `violations` means the data is a legal graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every graph invariant and name each offending element.
pub fn validate(data: &GraphData) -> ValidationReport {
    let mut v = Vec::new();
    let mut vid: HashMap<&str, usize> = HashMap::new();
    for (i, rec) in data.vertices.iter().enumerate() {
        if vid.insert(rec.id.as_str(), i).is_some() {
            v.push(format!("duplicate vertex {}", rec.id));
        }
        if rec.multiplicity == 0 {
            v.push(format!("vertex {} has multiplicity 0", rec.id));
        }
    }
    let mut hid: HashMap<&str, usize> = HashMap::new();
    for (i, h) in data.half_edges.iter().enumerate() {
        if hid.insert(h.as_str(), i).is_some() {
            v.push(format!("duplicate half-edge {h}"));
        }
    }
    let nh = data.half_edges.len();
    let mut attach = vec![usize::MAX; nh];
    for (h, x) in &data.attach.0 {
        match (hid.get(h.as_str()), vid.get(x.as_str())) {
            (Some(&hi), Some(&xi)) => attach[hi] = xi,
            (None, _) => v.push(format!("attach names unknown half-edge {h}")),
            (_, None) => v.push(format!("half-edge {h} attached to unknown vertex {x}")),
        }
    }
    for (i, a) in attach.iter().enumerate() {
        if *a == usize::MAX {
            v.push(format!("half-edge {} not attached", data.half_edges[i]));
        }
    }
    let mut pair = vec![usize::MAX; nh];
    for (h, g) in &data.pairing.0 {
        match (hid.get(h.as_str()), hid.get(g.as_str())) {
            (Some(&hi), Some(&gi)) => pair[hi] = gi,
            _ => v.push(format!("pairing names unknown half-edge {h} or {g}")),
        }
    }
    for h in 0..nh {
        let name = &data.half_edges[h];
        if pair[h] == usize::MAX {
            v.push(format!("half-edge {name} has no pairing"));
        } else if pair[h] == h {
            v.push(format!("pairing has fixed point {name}"));
        } else if pair[pair[h]] != h {
            v.push(format!("pairing is not an involution at {name}"));
        }
    }
    let mut placed = vec![0usize; nh];
    let mut order_seen = BTreeSet::new();
    for (x, cyc) in &data.cyclic_orders.0 {
        let Some(&xi) = vid.get(x.as_str()) else {
            v.push(format!("cyclic order for unknown vertex {x}"));
            continue;
        };
        order_seen.insert(xi);
        for h in cyc {
            match hid.get(h.as_str()) {
                None => v.push(format!("cyclic order at {x} names unknown half-edge {h}")),
                Some(&hi) => {
                    placed[hi] += 1;
                    if attach[hi] != usize::MAX && attach[hi] != xi {
                        v.push(format!("cyclic order at {x} contains half-edge {h} attached elsewhere"));
                    }
                }
            }
        }
    }
    for (i, rec) in data.vertices.iter().enumerate() {
        let deg = attach.iter().filter(|&&a| a == i).count();
        if deg > 0 && !order_seen.contains(&i) {
            v.push(format!("vertex {} has no cyclic order", rec.id));
        }
        if deg == 0 {
            v.push(format!("vertex {} is isolated", rec.id));
        }
    }
    for h in 0..nh {
        if placed[h] != 1 && attach[h] != usize::MAX {
            v.push(format!(
                "half-edge {} appears {} times in cyclic orders",
                data.half_edges[h], placed[h]
            ));
        }
    }
    if v.is_empty() && !data.vertices.is_empty() {
        // connectivity over vertices via edges
        let n = data.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for h in 0..nh {
            adj[attach[h]].push(attach[pair[h]]);
        }
        let mut seen = vec![false; n];
        let mut q = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    q.push_back(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            v.push("graph not connected".to_string());
        }
    }
    if data.vertices.is_empty() {
        v.push("graph has no vertices".to_string());
    }
    ValidationReport { violations: v }
}

/// Compare identifiers so that embedded numbers sort numerically.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, String)> {
        let mut out: Vec<(bool, String)> = Vec::new();
        for c in s.chars() {
            let d = c.is_ascii_digit();
            match out.last_mut() {
                Some((dd, buf)) if *dd == d => buf.push(c),
                _ => out.push((d, c.to_string())),
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(cb.iter()) {
        let o = if *da && *db {
            let ta = sa.trim_start_matches('0');
            let tb = sb.trim_start_matches('0');
            ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb))
        } else {
            sa.cmp(sb)
        };
        if o != Ordering::Equal {
            return o;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

/// A validated Brauer graph. Indices are dense: vertices `0..V`, half-edges
/// `0..H`, edges `0..E` ordered naturally by their least half-edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerGraph {
    vertex_ids: Vec<String>,
    mult: Vec<u32>,
    half_ids: Vec<String>,
    attach: Vec<usize>,
    pair: Vec<usize>,
    sigma: Vec<usize>,
    orders: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_of: Vec<usize>,
    data: GraphData,
}

impl BrauerGraph {
    pub fn from_data(data: &GraphData) -> Result<BrauerGraph> {
        let rep = validate(data);
        if !rep.ok() {
            return Err(Error::InvalidGraph(rep.violations));
        }
        let vid: HashMap<&str, usize> = data.vertices.iter().enumerate().map(|(i, r)| (r.id.as_str(), i)).collect();
        let hid: HashMap<&str, usize> = data.half_edges.iter().enumerate().map(|(i, h)| (h.as_str(), i)).collect();
        let nh = data.half_edges.len();
        let mut attach = vec![0; nh];
        for (h, x) in &data.attach.0 {
            attach[hid[h.as_str()]] = vid[x.as_str()];
        }
        let mut pair = vec![0; nh];
        for (h, g) in &data.pairing.0 {
            pair[hid[h.as_str()]] = hid[g.as_str()];
        }
        let mut orders = vec![Vec::new(); data.vertices.len()];
        let mut sigma = vec![0; nh];
        for (x, cyc) in &data.cyclic_orders.0 {
            let hs: Vec<usize> = cyc.iter().map(|h| hid[h.as_str()]).collect();
            for k in 0..hs.len() {
                sigma[hs[k]] = hs[(k + 1) % hs.len()];
            }
            orders[vid[x.as_str()]] = hs;
        }
        let mut edges: Vec<(usize, usize)> = (0..nh)
            .filter(|&h| natural_cmp(&data.half_edges[h], &data.half_edges[pair[h]]) == Ordering::Less)
            .map(|h| (h, pair[h]))
            .collect();
        edges.sort_by(|a, b| natural_cmp(&data.half_edges[a.0], &data.half_edges[b.0]));
        let mut edge_of = vec![0; nh];
        for (e, &(a, b)) in edges.iter().enumerate() {
            edge_of[a] = e;
            edge_of[b] = e;
        }
        Ok(BrauerGraph {
            vertex_ids: data.vertices.iter().map(|r| r.id.clone()).collect(),
            mult: data.vertices.iter().map(|r| r.multiplicity).collect(),
            half_ids: data.half_edges.clone(),
            attach,
            pair,
            sigma,
            orders,
            edges,
            edge_of,
            data: data.clone(),
        })
    }

    pub fn from_json(text: &str) -> Result<BrauerGraph> {
        BrauerGraph::from_data(&GraphData::from_json(text)?)
    }

    pub fn data(&self) -> &GraphData {
        &self.data
    }
    pub fn n_vertices(&self) -> usize {
        self.vertex_ids.len()
    }
    pub fn n_half_edges(&self) -> usize {
        self.half_ids.len()
    }
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertex_ids[v]
    }
    pub fn half_id(&self, h: usize) -> &str {
        &self.half_ids[h]
    }
    pub fn half_index(&self, id: &str) -> Option<usize> {
        self.half_ids.iter().position(|h| h == id)
    }
    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_ids.iter().position(|h| h == id)
    }
    /// Multiplicity `m(v)`.
    pub fn mult(&self, v: usize) -> u32 {
        self.mult[v]
    }
    /// `s(h)`.
    pub fn attach(&self, h: usize) -> usize {
        self.attach[h]
    }
    /// `ι(h)`.
    pub fn pair(&self, h: usize) -> usize {
        self.pair[h]
    }
    /// `σ(h)`.
    pub fn sigma(&self, h: usize) -> usize {
        self.sigma[h]
    }
    pub fn sigma_inv(&self, h: usize) -> usize {
        let o = &self.orders[self.attach[h]];
        let k = o.iter().position(|&x| x == h).expect("half-edge in its rotation");
        o[(k + o.len() - 1) % o.len()]
    }
    pub fn cyclic_order(&self, v: usize) -> &[usize] {
        &self.orders[v]
    }
    pub fn valency(&self, v: usize) -> usize {
        self.orders[v].len()
    }
    /// `val(v)·m(v) = 1`.
    pub fn is_truncated(&self, v: usize) -> bool {
        self.valency(v) * self.mult[v] as usize == 1
    }
    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }
    pub fn edge_halves(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }
    /// Canonical edge name: the least of its two half-edge ids.
    pub fn edge_name(&self, e: usize) -> &str {
        &self.half_ids[self.edges[e].0]
    }
    pub fn edge_index(&self, name: &str) -> Option<usize> {
        (0..self.n_edges()).find(|&e| self.edge_name(e) == name)
    }
    pub fn edge_ends(&self, e: usize) -> (usize, usize) {
        let (a, b) = self.edges[e];
        (self.attach[a], self.attach[b])
    }
    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.edge_ends(e);
        a == b
    }
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = self.mult.clone();
        m.sort_unstable();
        m
    }

    /// The step map `h ↦ ι(σ(h))`.
    pub fn step(&self, h: usize) -> usize {
        self.pair[self.sigma[h]]
    }

    fn orbits(&self, f: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
        let nh = self.n_half_edges();
        let mut seen = vec![false; nh];
        let mut out = Vec::new();
        // start each orbit at its least id so the rotation is canonical
        let mut by_id: Vec<usize> = (0..nh).collect();
        by_id.sort_by(|&a, &b| natural_cmp(&self.half_ids[a], &self.half_ids[b]));
        for &h in &by_id {
            if seen[h] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = h;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x);
                x = f(x);
            }
            out.push(orbit);
        }
        out
    }

    pub fn green_walks(&self) -> Vec<GreenWalk> {
        self.orbits(|h| self.step(h)).into_iter().map(|steps| GreenWalk { steps }).collect()
    }

    pub fn double_stepped_walks(&self) -> Vec<GreenWalk> {
        self.orbits(|h| self.step(self.step(h))).into_iter().map(|steps| GreenWalk { steps }).collect()
    }

    /// Index of the double-stepped walk containing `h`.
    pub fn double_walk_of(&self, h: usize) -> usize {
        self.double_stepped_walks()
            .iter()
            .position(|w| w.steps.contains(&h))
            .expect("walks partition half-edges")
    }

    pub fn faces(&self) -> Vec<Face> {
        self.green_walks()
            .into_iter()
            .map(|w| {
                let mut boundary = Vec::with_capacity(2 * w.steps.len());
                for &h in &w.steps {
                    boundary.push(h);
                    boundary.push(self.sigma[h]);
                }
                Face { perimeter: w.steps.len(), boundary }
            })
            .collect()
    }

    pub fn perimeters(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.faces().iter().map(|f| f.perimeter).collect();
        p.sort_unstable();
        p
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n_vertices();
        let mut seen = vec![false; n];
        let mut q = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = q.pop_front() {
            for &h in &self.orders[x] {
                let y = self.attach[self.pair[h]];
                if !seen[y] {
                    seen[y] = true;
                    q.push_back(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.n_edges() + 1 == self.n_vertices()
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n_vertices();
        let mut colour = vec![u8::MAX; n];
        colour[0] = 0;
        let mut q = VecDeque::from([0usize]);
        while let Some(x) = q.pop_front() {
            for &h in &self.orders[x] {
                let y = self.attach[self.pair[h]];
                if colour[y] == u8::MAX {
                    colour[y] = 1 - colour[x];
                    q.push_back(y);
                } else if colour[y] == colour[x] {
                    return false;
                }
            }
        }
        true
    }

    /// Neighbouring vertex across half-edge `h`.
    pub fn across(&self, h: usize) -> usize {
        self.attach[self.pair[h]]
    }
}

/// Orbit of the step map, rotated to start at its least half-edge id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenWalk {
    pub steps: Vec<usize>,
}

impl GreenWalk {
    pub fn len(&self) -> usize {
        self.steps.len()
    }
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub perimeter: usize,
    /// `h0, σ(h0), ι(σ(h0)), …` with `2·perimeter` entries.
    pub boundary: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Criterion {
    pub name: &'static str,
    pub left: String,
    pub right: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedEqReport {
    pub equivalent: bool,
    pub criteria: Vec<Criterion>,
}

/// Compare the six derived-equivalence invariants.
pub fn derived_equivalent(g1: &BrauerGraph, g2: &BrauerGraph) -> DerivedEqReport {
    fn c<T: PartialEq + fmt::Debug>(name: &'static str, a: T, b: T) -> Criterion {
        Criterion { name, ok: a == b, left: format!("{a:?}"), right: format!("{b:?}") }
    }
    let criteria = vec![
        c("vertices", g1.n_vertices(), g2.n_vertices()),
        c("edges", g1.n_edges(), g2.n_edges()),
        c("faces", g1.faces().len(), g2.faces().len()),
        c("multiplicities", g1.multiplicities(), g2.multiplicities()),
        c("perimeters", g1.perimeters(), g2.perimeters()),
        c("bipartite", g1.is_bipartite(), g2.is_bipartite()),
    ];
    DerivedEqReport { equivalent: criteria.iter().all(|c| c.ok), criteria }
}

/// Star with centre multiplicity `center` and leaves in the given cyclic
/// order. Vertices `z0..z{n+1}`, half-edges `j+` (centre) and `j-` (leaf).
pub fn star_graph(center: u32, leaves: &[u32]) -> BrauerGraph {
    let mut d = GraphData::default();
    d.vertices.push(VertexRecord { id: "z0".into(), multiplicity: center });
    let mut center_order = Vec::new();
    for (j, &m) in leaves.iter().enumerate() {
        let (p, q, z) = (format!("{j}+"), format!("{j}-"), format!("z{}", j + 1));
        d.vertices.push(VertexRecord { id: z.clone(), multiplicity: m });
        d.half_edges.push(p.clone());
        d.half_edges.push(q.clone());
        d.attach.0.push((p.clone(), "z0".into()));
        d.attach.0.push((q.clone(), z.clone()));
        d.pairing.0.push((p.clone(), q.clone()));
        d.pairing.0.push((q.clone(), p.clone()));
        d.cyclic_orders.0.push((z, vec![q]));
        center_order.push(p);
    }
    d.cyclic_orders.0.insert(0, ("z0".into(), center_order));
    BrauerGraph::from_data(&d).expect("star data is valid")
}

/// Line `ζ0 – ζ1 – … – ζ{k}` with the given multiplicities; edge `j` joins
/// `z{j}` and `z{j+1}`.
pub fn line_graph(mults: &[u32]) -> BrauerGraph {
    let mut d = GraphData::default();
    let n = mults.len();
    for (v, &m) in mults.iter().enumerate() {
        d.vertices.push(VertexRecord { id: format!("z{v}"), multiplicity: m });
    }
    let mut orders: Vec<Vec<String>> = vec![Vec::new(); n];
    for j in 0..n - 1 {
        let (p, q) = (format!("{j}+"), format!("{j}-"));
        d.half_edges.push(p.clone());
        d.half_edges.push(q.clone());
        d.attach.0.push((p.clone(), format!("z{j}")));
        d.attach.0.push((q.clone(), format!("z{}", j + 1)));
        d.pairing.0.push((p.clone(), q.clone()));
        d.pairing.0.push((q.clone(), p.clone()));
        orders[j].push(p);
        orders[j + 1].push(q);
    }
    for (v, o) in orders.into_iter().enumerate() {
        d.cyclic_orders.0.push((format!("z{v}"), o));
    }
    BrauerGraph::from_data(&d).expect("line data is valid")
}

/// Reduce a generalized Brauer tree to the star with the same multiplicity
/// multiset: the smallest multiplicity above 1 sits at the centre, the rest
/// follow in non-decreasing order, then the truncated leaves.
pub fn star_reduce(g: &BrauerGraph) -> Result<BrauerGraph> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let mut big: Vec<u32> = g.multiplicities().into_iter().filter(|&m| m > 1).collect();
    big.sort_unstable();
    let n_leaves = g.n_vertices() - 1;
    let (center, mut leaves) = if big.is_empty() { (1, Vec::new()) } else { (big[0], big[1..].to_vec()) };
    leaves.resize(n_leaves, 1);
    Ok(star_graph(center, &leaves))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthClass {
    Finite,
    OneDomestic,
    TwoDomestic,
    NonPolynomial,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(match self {
            GrowthClass::Finite => "finite",
            GrowthClass::OneDomestic => "one_domestic",
            GrowthClass::TwoDomestic => "two_domestic",
            GrowthClass::NonPolynomial => "non_polynomial",
        })
    }
}

pub fn growth_class(g: &BrauerGraph) -> GrowthClass {
    let big: Vec<u32> = g.multiplicities().into_iter().filter(|&m| m > 1).collect();
    if g.is_tree() {
        if big.len() <= 1 {
            return GrowthClass::Finite;
        }
        if big.len() == 2 && big.iter().all(|&m| m == 2) {
            return GrowthClass::OneDomestic;
        }
        return GrowthClass::NonPolynomial;
    }
    if g.n_edges() == g.n_vertices() && big.is_empty() {
        // unique cycle; its length decides
        return if cycle_length(g) % 2 == 1 { GrowthClass::OneDomestic } else { GrowthClass::TwoDomestic };
    }
    GrowthClass::NonPolynomial
}

/// Length of the unique cycle of a connected unicyclic graph.
fn cycle_length(g: &BrauerGraph) -> usize {
    // strip leaves repeatedly; what remains is the cycle
    let n = g.n_vertices();
    let mut deg: Vec<usize> = (0..n).map(|v| g.valency(v)).collect();
    let mut alive = vec![true; n];
    let mut q: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = q.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &h in g.cyclic_order(v) {
            let u = g.across(h);
            if alive[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    q.push_back(u);
                }
            }
        }
    }
    alive.iter().filter(|&&a| a).count()
}

/// Edges lying in an exceptional subtree: a multiplicity-1 tree hanging off
/// a single connecting vertex.
pub fn exceptional_edges(g: &BrauerGraph) -> Vec<usize> {
    let mut out = BTreeSet::new();
    for v in 0..g.n_vertices() {
        for &h in g.cyclic_order(v) {
            let e = g.edge_of(h);
            if g.is_loop(e) {
                continue;
            }
            let u = g.across(h);
            // component of u in G - v
            let mut comp = BTreeSet::from([u]);
            let mut q = VecDeque::from([u]);
            let mut inner_edges = BTreeSet::new();
            let mut to_v = BTreeSet::new();
            while let Some(x) = q.pop_front() {
                for &k in g.cyclic_order(x) {
                    let y = g.across(k);
                    let ek = g.edge_of(k);
                    if y == v {
                        to_v.insert(ek);
                        continue;
                    }
                    inner_edges.insert(ek);
                    if comp.insert(y) {
                        q.push_back(y);
                    }
                }
            }
            let is_tree = to_v.len() == 1 && inner_edges.len() + 1 == comp.len();
            if is_tree && comp.iter().all(|&x| g.mult(x) == 1) {
                out.insert(e);
                out.extend(inner_edges);
            }
        }
    }
    out.into_iter().collect()
}

/// Decide whether `S(i)` and `rad P(j)` share a stable component via the
/// even-length edge-path criterion. Exhaustive over (vertex, last edge,
/// parity) states, so no length bound is needed.
pub fn simple_rad_same_component(g: &BrauerGraph, i: usize, j: usize) -> Result<bool> {
    let exc = exceptional_edges(g);
    for e in [i, j] {
        if exc.contains(&e) {
            return Err(Error::ExceptionalEdgeArgument(e));
        }
    }
    if growth_class(g) == GrowthClass::OneDomestic {
        return Ok(true);
    }
    if g.is_loop(i) || g.is_loop(j) {
        return Ok(false);
    }
    let non_exc_at = |v: usize| -> BTreeSet<usize> {
        g.cyclic_order(v).iter().map(|&h| g.edge_of(h)).filter(|e| !exc.contains(e)).collect()
    };
    // state: (vertex reached, edge just used, parity of length)
    let mut seen = BTreeSet::new();
    let mut q = VecDeque::new();
    let (a, b) = g.edge_halves(i);
    for h in [a, b] {
        let st = (g.across(h), i, 1usize);
        if seen.insert(st) {
            q.push_back(st);
        }
    }
    while let Some((v, last, par)) = q.pop_front() {
        if last == j && par == 0 {
            return Ok(true);
        }
        for &h in g.cyclic_order(v) {
            let next = g.edge_of(h);
            if g.is_loop(next) {
                continue;
            }
            let want = if next == last { 2 } else { 1 };
            if g.mult(v) != want {
                continue;
            }
            let ne = non_exc_at(v);
            let allowed: BTreeSet<usize> = [last, next].into_iter().collect();
            if ne != allowed {
                continue;
            }
            let st = (g.across(h), next, 1 - par);
            if seen.insert(st) {
                q.push_back(st);
            }
        }
    }
    Ok(false)
}

/// Recognised normal-form star `W_{n, m̄}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarShape {
    pub n: usize,
    /// `(m0, …, mi)`.
    pub mbar: Vec<u32>,
    pub center: usize,
    /// Centre half-edge of edge `j`.
    pub center_half: Vec<usize>,
}

impl StarShape {
    pub fn i(&self) -> usize {
        self.mbar.len() - 1
    }
}

/// Recognise `W_{n,m̄}`: a centre with multiplicity `m0 ≥ 2` adjacent to every
/// edge, leaves in counterclockwise order with multiplicities `m1 ≤ … ≤ mi`
/// (all `≥ m0`) followed by truncated leaves.
pub fn recognize_star(g: &BrauerGraph) -> Option<StarShape> {
    if !g.is_tree() {
        return None;
    }
    let e = g.n_edges();
    let candidates: Vec<usize> = (0..g.n_vertices()).filter(|&v| g.valency(v) == e).collect();
    for c in candidates {
        let m0 = g.mult(c);
        if m0 < 2 {
            continue;
        }
        let order = g.cyclic_order(c);
        for rot in 0..order.len() {
            let halves: Vec<usize> = (0..e).map(|k| order[(rot + k) % e]).collect();
            let leaf_m: Vec<u32> = halves.iter().map(|&h| g.mult(g.across(h))).collect();
            let big = leaf_m.iter().take_while(|&&m| m > 1).count();
            let ok = leaf_m[big..].iter().all(|&m| m == 1)
                && leaf_m[..big].windows(2).all(|w| w[0] <= w[1])
                && leaf_m[..big].first().is_none_or(|&m| m >= m0);
            if ok {
                let mut mbar = vec![m0];
                mbar.extend_from_slice(&leaf_m[..big]);
                return Some(StarShape { n: e - 1, mbar, center: c, center_half: halves });
            }
        }
    }
    None
}

/// Recognised line `ζ0(l) – ζ1 – … – ζn – ζ{n+1}(m)` with `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineShape {
    pub n: usize,
    pub l: u32,
    pub m: u32,
    /// Vertices `ζ0..ζ{n+1}` in order.
    pub path: Vec<usize>,
    /// Edge `k` joins `ζk` and `ζ{k+1}`.
    pub edges: Vec<usize>,
}

pub fn recognize_line(g: &BrauerGraph) -> Option<LineShape> {
    if !g.is_tree() || g.n_edges() < 2 {
        return None;
    }
    let ends: Vec<usize> = (0..g.n_vertices()).filter(|&v| g.valency(v) == 1).collect();
    if ends.len() != 2 || (0..g.n_vertices()).any(|v| g.valency(v) > 2) {
        return None;
    }
    let start = ends[0];
    let mut path = vec![start];
    let mut edges = Vec::new();
    let mut prev_edge = usize::MAX;
    let mut v = start;
    loop {
        let next = g.cyclic_order(v).iter().copied().find(|&h| g.edge_of(h) != prev_edge);
        let Some(h) = next else { break };
        prev_edge = g.edge_of(h);
        edges.push(prev_edge);
        v = g.across(h);
        path.push(v);
    }
    let n = edges.len() - 1;
    let (l, m) = (g.mult(path[0]), g.mult(path[n + 1]));
    let inner_ok = path[1..=n].iter().all(|&v| g.mult(v) == 1);
    if l >= 2 && m >= 2 && inner_ok {
        Some(LineShape { n, l, m, path, edges })
    } else {
        None
    }
}

/// Random generalized Brauer tree with `n_edges` edges, shuffled rotations
/// and multiplicities in `1..=max_mult`.
pub fn random_tree<R: Rng>(rng: &mut R, n_edges: usize, max_mult: u32) -> BrauerGraph {
    let n = n_edges + 1;
    let mut t = TreeShorthand::default();
    let names: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    let mut nbrs: Vec<Vec<String>> = vec![Vec::new(); n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        t.edges.push((names[u].clone(), names[v].clone()));
        nbrs[u].push(names[v].clone());
        nbrs[v].push(names[u].clone());
    }
    for v in 0..n {
        nbrs[v].shuffle(rng);
        t.rotation.0.push((names[v].clone(), nbrs[v].clone()));
        t.multiplicities.0.push((names[v].clone(), rng.gen_range(1..=max_mult)));
    }
    BrauerGraph::from_data(&t.expand().expect("generated tree expands")).expect("generated tree is valid")
}
