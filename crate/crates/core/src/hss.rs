//! Construction of a horizontal Schottky cut system: `g` pairwise disjoint,
//! non-separating, horizontal simple closed curves on an origami of genus
//! `g`.
//!
//! Step 1 cuts a maximal non-separating set of horizontal cylinders along
//! their core curves.  Every further curve is found combinatorially: the
//! cut surface (with each boundary curve collapsed to a point) is encoded
//! by cyclic and linear lists of edge labels, the lists are glued into one
//! polygon `P`, a pair of edges `(α, α)` separating another pair is chosen
//! in `P`, and the arc joining the two `α` sides is traced back through the
//! gluing steps into a chain of arcs in the original pieces, which spells
//! out the new curve as a word in `x` and `y`.  The pieces crossed by the
//! new curve are then split and the procedure repeats.
//!
//! All choices are deterministic:
//! * step 1 adds bridges in descending cylinder order;
//! * the pool is ordered by (lower halves, upper halves, whole cylinders),
//!   then cylinder index, then creation order;
//! * the first list of the pool absorbs, one at a time, the next list in
//!   pool order that shares a label with it; among the shared labels the one
//!   producing the fewest cancellations wins, ties going to the label that
//!   comes first in the absorbed list;
//! * the separating pair is the smallest non-sentinel label `α` separating
//!   some other label, with the smallest such witness `β`;
//! * minimal-|t| ties in cyclic lists take the positive value.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::freegroup::Word;
use crate::origami::{Origami, OrigamiCurve};

/// Errors raised by the cut-system construction.  Apart from
/// [`HssError::NoCommonLabel`] (a misuse of [`concatenate`]) these signal
/// internal inconsistencies and never occur for valid origamis.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HssError {
    #[error("lists have no common label {0}")]
    NoCommonLabel(String),
    #[error("list pool cannot be merged into one list")]
    Disconnected,
    #[error("no pair of labels separates another pair")]
    NoPairFound,
    #[error("label {0} does not occur twice in the merged list")]
    LabelNotPaired(String),
    #[error("pair chain is inconsistent: {0}")]
    InconsistentChain(String),
    #[error("genus computation failed")]
    Genus,
}

/// A prime mark attached to a split label: `'` or `''`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Prime {
    Single,
    Double,
}

/// A label in a list: a horizontal edge (named by the square above it,
/// possibly with prime marks from earlier splits) or the vertical-edge
/// sentinel `a_Z` of an uncut cylinder.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Square { square: usize, primes: Vec<Prime> },
    Sentinel { cylinder: usize },
}

impl Label {
    pub fn square(square: usize) -> Label {
        Label::Square { square, primes: Vec::new() }
    }

    /// The square of a square label.
    pub fn square_index(&self) -> Option<usize> {
        match self {
            Label::Square { square, .. } => Some(*square),
            Label::Sentinel { .. } => None,
        }
    }

    pub fn is_sentinel(&self) -> bool {
        matches!(self, Label::Sentinel { .. })
    }

    fn with_prime(&self, p: Prime) -> Label {
        match self {
            Label::Square { square, primes } => {
                let mut primes = primes.clone();
                primes.push(p);
                Label::Square { square: *square, primes }
            }
            Label::Sentinel { .. } => self.clone(),
        }
    }

    /// Parses `12`, `8'`, `8''`, `8'''` (prime marks are read greedily as
    /// `''` then `'`) or `a3` (sentinel of cylinder 3).
    pub fn parse(text: &str) -> Option<Label> {
        if let Some(rest) = text.strip_prefix('a') {
            let c: usize = rest.parse().ok()?;
            return (c >= 1).then(|| Label::Sentinel { cylinder: c - 1 });
        }
        let digits = text.find('\'').unwrap_or(text.len());
        let square: usize = text[..digits].parse().ok()?;
        let mut marks = &text[digits..];
        let mut primes = Vec::new();
        while !marks.is_empty() {
            if let Some(r) = marks.strip_prefix("''") {
                primes.push(Prime::Double);
                marks = r;
            } else {
                marks = marks.strip_prefix('\'')?;
                primes.push(Prime::Single);
            }
        }
        Some(Label::Square { square, primes })
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Square { square, primes } => {
                write!(f, "{square}")?;
                for p in primes {
                    f.write_str(match p {
                        Prime::Single => "'",
                        Prime::Double => "''",
                    })?;
                }
                Ok(())
            }
            Label::Sentinel { cylinder } => write!(f, "a{}", cylinder + 1),
        }
    }
}

/// A list of labels, cyclic (order up to rotation) or linear.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledList {
    pub entries: Vec<Label>,
    pub cyclic: bool,
}

impl LabeledList {
    pub fn cyclic(entries: Vec<Label>) -> LabeledList {
        LabeledList { entries, cyclic: true }
    }

    pub fn linear(entries: Vec<Label>) -> LabeledList {
        LabeledList { entries, cyclic: false }
    }

    /// Parses a whitespace- or comma-separated list of labels.
    pub fn parse(text: &str, cyclic: bool) -> Option<LabeledList> {
        let entries: Option<Vec<Label>> =
            text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).map(Label::parse).collect();
        Some(LabeledList { entries: entries?, cyclic })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for LabeledList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = if self.cyclic { ("[", "]") } else { ("(", ")") };
        let parts: Vec<String> = self.entries.iter().map(|l| format!("{l}")).collect();
        write!(f, "{open}{}{close}", parts.join(","))
    }
}

/// Splices `m` into `l` at `l[i] = m[j]`: `[a…, x, b…]` and `[c…, x, d…]`
/// become `[a…, d…, c…, b…]`.
fn splice<T: Clone>(l: &[T], i: usize, m: &[T], j: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(l.len() + m.len() - 2);
    out.extend_from_slice(&l[..i]);
    out.extend_from_slice(&m[j + 1..]);
    out.extend_from_slice(&m[..j]);
    out.extend_from_slice(&l[i + 1..]);
    out
}

/// Removes adjacent equal entries until none remain, treating the list as
/// cyclic.  Returns the surviving entries and the number of removed pairs.
fn cancel<T, F: Fn(&T, &T) -> bool>(v: Vec<T>, same: F) -> (Vec<T>, usize) {
    let mut out: Vec<T> = Vec::with_capacity(v.len());
    let mut removed = 0;
    for e in v {
        if out.last().is_some_and(|l| same(l, &e)) {
            out.pop();
            removed += 1;
        } else {
            out.push(e);
        }
    }
    while out.len() >= 2 && same(&out[0], &out[out.len() - 1]) {
        out.pop();
        out.remove(0);
        removed += 1;
    }
    (out, removed)
}

/// Glues two lists along a common label and cancels adjacent duplicates.
/// The result is always cyclic: gluing closes up the boundary of the
/// combined polygon.
pub fn concatenate(l: &LabeledList, m: &LabeledList, at: &Label) -> Result<LabeledList, HssError> {
    let i = l.entries.iter().position(|x| x == at);
    let j = m.entries.iter().position(|x| x == at);
    let (Some(i), Some(j)) = (i, j) else {
        return Err(HssError::NoCommonLabel(format!("{at}")));
    };
    let (entries, _) = cancel(splice(&l.entries, i, &m.entries, j), |a, b| a == b);
    Ok(LabeledList::cyclic(entries))
}

/// Lower (`u`) or upper (`o`) half of a horizontal cylinder.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Half {
    Lower,
    Upper,
}

/// The two nodes `z_i^o`, `z_i^u` per cylinder, the edges `z_i^o — z_j^u`
/// whenever `p2` carries a square of `Z_i` into `Z_j`, and the bridges
/// `z_i^o — z_i^u` added in step 1.  Cylinders are 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfCylinderGraph {
    pub cylinders: usize,
    pub edges: Vec<(usize, usize)>,
    pub bridges: Vec<usize>,
}

impl HalfCylinderGraph {
    fn node_upper(i: usize) -> usize {
        2 * i
    }

    fn node_lower(i: usize) -> usize {
        2 * i + 1
    }

    /// Number of connected components using the edges and the given
    /// bridges.
    pub fn components_with(&self, bridges: &[usize]) -> usize {
        let mut uf = UnionFind::new(2 * self.cylinders);
        for &(i, j) in &self.edges {
            uf.union(Self::node_upper(i), Self::node_lower(j));
        }
        for &b in bridges {
            uf.union(Self::node_upper(b), Self::node_lower(b));
        }
        uf.count()
    }

    /// True iff the bridged graph is connected and each bridge is needed.
    pub fn is_minimal_connected(&self) -> bool {
        self.components_with(&self.bridges) == 1
            && (0..self.bridges.len()).all(|k| {
                let mut fewer = self.bridges.clone();
                fewer.remove(k);
                self.components_with(&fewer) > 1
            })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&a| self.find(a) == a).count()
    }
}

/// Result of step 1: the cut cylinders (0-based, ascending) and the graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step1 {
    pub cuts: Vec<usize>,
    pub graph: HalfCylinderGraph,
}

/// Step 1 with bridges tried in descending cylinder order.
pub fn step1(o: &Origami) -> Step1 {
    let b = o.cylinders().len();
    let order: Vec<usize> = (0..b).rev().collect();
    step1_with_order(o, &order)
}

/// Step 1 with bridges tried in the given order of (0-based) cylinders; a
/// bridge is added only when it joins two components.
pub fn step1_with_order(o: &Origami, order: &[usize]) -> Step1 {
    let cyl = o.cylinder_index();
    let b = o.cylinders().len();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for s in 1..=o.d() {
        edges.insert((cyl[s - 1], cyl[o.p2().apply(s) - 1]));
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let mut uf = UnionFind::new(2 * b);
    for &(i, j) in &edges {
        uf.union(HalfCylinderGraph::node_upper(i), HalfCylinderGraph::node_lower(j));
    }
    let mut bridges = Vec::new();
    for &i in order {
        if uf.union(HalfCylinderGraph::node_upper(i), HalfCylinderGraph::node_lower(i)) {
            bridges.push(i);
        }
    }
    let cuts = (0..b).filter(|i| !bridges.contains(i)).collect();
    Step1 { cuts, graph: HalfCylinderGraph { cylinders: b, edges, bridges } }
}

/// A polygon of the cut surface.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PoolBody {
    /// A list belonging to one half of a cylinder.
    Half { half: Half, list: LabeledList },
    /// An uncut cylinder `[a_Z, lower…, a_Z, upper…]`; both segments are
    /// cyclic lists of their halves.
    Whole { lower: Vec<Label>, upper: Vec<Label> },
}

/// A list of the pool together with its cylinder and creation number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoolList {
    pub cylinder: usize,
    pub seq: usize,
    pub body: PoolBody,
}

impl PoolList {
    fn sort_key(&self) -> (u8, usize, usize) {
        let group = match &self.body {
            PoolBody::Half { half: Half::Lower, .. } => 0,
            PoolBody::Half { half: Half::Upper, .. } => 1,
            PoolBody::Whole { .. } => 2,
        };
        (group, self.cylinder, self.seq)
    }

    /// The list as glued: half lists as they are, whole cylinders as
    /// `[a_Z, lower…, a_Z, upper…]`.
    pub fn materialize(&self) -> LabeledList {
        match &self.body {
            PoolBody::Half { list, .. } => list.clone(),
            PoolBody::Whole { lower, upper } => {
                let a = Label::Sentinel { cylinder: self.cylinder };
                let mut entries = vec![a.clone()];
                entries.extend(lower.iter().cloned());
                entries.push(a);
                entries.extend(upper.iter().cloned());
                LabeledList::cyclic(entries)
            }
        }
    }
}

/// The set `𝓛` of lists describing the cut surface.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ListPool {
    pub lists: Vec<PoolList>,
    next_seq: usize,
}

impl ListPool {
    fn sort(&mut self) {
        self.lists.sort_by_key(PoolList::sort_key);
    }

    /// All lists of one half (the sets `𝓛_u` or `𝓛_o`): half lists plus the
    /// segments of whole cylinders, with their cylinders, in pool order.
    pub fn half_lists(&self, half: Half) -> Vec<(usize, LabeledList)> {
        let mut out = Vec::new();
        for pl in &self.lists {
            match &pl.body {
                PoolBody::Half { half: h, list } if *h == half => out.push((pl.cylinder, list.clone())),
                PoolBody::Whole { lower, upper } => {
                    let seg = if half == Half::Lower { lower } else { upper };
                    out.push((pl.cylinder, LabeledList::cyclic(seg.clone())));
                }
                _ => {}
            }
        }
        out.sort_by_key(|(c, _)| *c);
        out
    }

    /// The lists of `𝓛` in pool order as glued.
    pub fn materialized(&self) -> Vec<LabeledList> {
        self.lists.iter().map(PoolList::materialize).collect()
    }
}

/// The initial pool: `L(Z,u)` and `L(Z,o)` for cut cylinders, `L(Z)` for
/// the others.  `L(Z,u)` lists the squares of `Z` left to right starting
/// at the smallest; `L(Z,o)` lists the `p2`-images of those squares right
/// to left.
pub fn init_lists(o: &Origami, cuts: &[usize]) -> ListPool {
    let mut lists = Vec::new();
    for (i, c) in o.cylinders().iter().enumerate() {
        let lower: Vec<Label> = c.squares.iter().map(|&s| Label::square(s)).collect();
        let upper: Vec<Label> = c.squares.iter().rev().map(|&s| Label::square(o.p2().apply(s))).collect();
        if cuts.contains(&i) {
            for (half, seg) in [(Half::Lower, lower), (Half::Upper, upper)] {
                lists.push(PoolList {
                    cylinder: i,
                    seq: 0,
                    body: PoolBody::Half { half, list: LabeledList::cyclic(seg) },
                });
            }
        } else {
            lists.push(PoolList { cylinder: i, seq: 0, body: PoolBody::Whole { lower, upper } });
        }
    }
    let mut pool = ListPool { lists, next_seq: 1 };
    pool.sort();
    pool
}

/// Where an entry of a glued list came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Segment {
    /// The whole half list.
    List,
    /// The lower segment of a whole cylinder.
    Lower,
    /// The upper segment of a whole cylinder.
    Upper,
    /// One of the two sentinels of a whole cylinder.
    Sentinel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Origin {
    list: usize,
    segment: Segment,
    pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Entry {
    label: Label,
    token: usize,
}

/// One gluing step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeEvent {
    /// Id of the absorbing list (initial lists have ids `0..n` in pool
    /// order; the result of event `k` has id `n + k`).
    pub accumulator: usize,
    pub partner: usize,
    pub label: Label,
    /// Labels of the pairs removed by cancellation.
    pub cancelled: Vec<Label>,
    pub result: usize,
    pub result_list: LabeledList,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct MergeTrace {
    accumulator_tokens: BTreeSet<usize>,
    accumulator_token: usize,
    partner_token: usize,
}

/// The log of gluing the pool into one list, with enough token data to
/// trace arcs back into the original lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeHistory {
    pub initial: Vec<LabeledList>,
    pub events: Vec<MergeEvent>,
    pub result: LabeledList,
    origins: Vec<Origin>,
    labels: Vec<Label>,
    traces: Vec<MergeTrace>,
    result_tokens: Vec<usize>,
}

impl MergeHistory {
    /// Re-executes the logged gluing steps from the initial lists.
    pub fn replay(&self) -> Result<LabeledList, HssError> {
        let mut lists: Vec<LabeledList> = self.initial.clone();
        let mut last = lists.first().cloned().ok_or(HssError::Disconnected)?;
        for e in &self.events {
            last = concatenate(&lists[e.accumulator], &lists[e.partner], &e.label)?;
            lists.push(last.clone());
        }
        Ok(last)
    }
}

/// Glues all lists of the pool into one (see the module documentation for
/// the policy).
pub fn merge_all(pool: &ListPool) -> Result<(LabeledList, MergeHistory), HssError> {
    let mut origins = Vec::new();
    let mut labels = Vec::new();
    let mut tokenized: Vec<Vec<Entry>> = Vec::new();
    for (li, pl) in pool.lists.iter().enumerate() {
        let mut entries = Vec::new();
        let mut push = |label: Label, segment: Segment, pos: usize, entries: &mut Vec<Entry>| {
            let token = origins.len();
            origins.push(Origin { list: li, segment, pos });
            labels.push(label.clone());
            entries.push(Entry { label, token });
        };
        match &pl.body {
            PoolBody::Half { list, .. } => {
                for (pos, l) in list.entries.iter().enumerate() {
                    push(l.clone(), Segment::List, pos, &mut entries);
                }
            }
            PoolBody::Whole { lower, upper } => {
                let a = Label::Sentinel { cylinder: pl.cylinder };
                push(a.clone(), Segment::Sentinel, 0, &mut entries);
                for (pos, l) in lower.iter().enumerate() {
                    push(l.clone(), Segment::Lower, pos, &mut entries);
                }
                push(a, Segment::Sentinel, 1, &mut entries);
                for (pos, l) in upper.iter().enumerate() {
                    push(l.clone(), Segment::Upper, pos, &mut entries);
                }
            }
        }
        tokenized.push(entries);
    }
    let initial: Vec<LabeledList> = pool.materialized();
    let n = tokenized.len();
    let mut remaining: Vec<(usize, Vec<Entry>)> = tokenized.into_iter().enumerate().collect();
    if remaining.is_empty() {
        return Err(HssError::Disconnected);
    }
    let (mut acc_id, mut acc) = remaining.remove(0);
    let mut events = Vec::new();
    let mut traces = Vec::new();
    while !remaining.is_empty() {
        let acc_labels: BTreeSet<&Label> = acc.iter().map(|e| &e.label).collect();
        let k = remaining
            .iter()
            .position(|(_, m)| m.iter().any(|e| acc_labels.contains(&e.label)))
            .ok_or(HssError::Disconnected)?;
        let (partner_id, partner) = remaining.remove(k);
        let mut best: Option<(usize, usize, usize, Vec<Entry>, usize)> = None;
        for (j, e) in partner.iter().enumerate() {
            let Some(i) = acc.iter().position(|a| a.label == e.label) else {
                continue;
            };
            let (merged, removed) = cancel(splice(&acc, i, &partner, j), |a, b| a.label == b.label);
            if best.as_ref().is_none_or(|b| removed < b.4) {
                best = Some((i, j, removed, merged, removed));
            }
        }
        let (i, j, _, merged, _) = best.expect("partner shares a label");
        let label = acc[i].label.clone();
        let kept: BTreeSet<usize> = merged.iter().map(|e| e.token).collect();
        let cancelled: Vec<Label> = acc
            .iter()
            .chain(partner.iter())
            .filter(|e| !kept.contains(&e.token) && e.token != acc[i].token && e.token != partner[j].token)
            .map(|e| e.label.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        traces.push(MergeTrace {
            accumulator_tokens: acc.iter().map(|e| e.token).collect(),
            accumulator_token: acc[i].token,
            partner_token: partner[j].token,
        });
        let result = n + events.len();
        let result_list = LabeledList::cyclic(merged.iter().map(|e| e.label.clone()).collect());
        events.push(MergeEvent { accumulator: acc_id, partner: partner_id, label, cancelled, result, result_list });
        acc = merged;
        acc_id = result;
    }
    let result = LabeledList::cyclic(acc.iter().map(|e| e.label.clone()).collect());
    let history = MergeHistory {
        initial,
        events,
        result: result.clone(),
        origins,
        labels,
        traces,
        result_tokens: acc.iter().map(|e| e.token).collect(),
    };
    Ok((result, history))
}

/// A pair `(α, α)` of `P` separating a pair `(β, β)`: the smallest
/// non-sentinel `α` that separates anything, with its smallest witness.
pub fn find_separating_pair(p: &LabeledList) -> Result<(Label, Label), HssError> {
    let mut positions: alloc::collections::BTreeMap<&Label, Vec<usize>> = alloc::collections::BTreeMap::new();
    for (i, l) in p.entries.iter().enumerate() {
        positions.entry(l).or_default().push(i);
    }
    for (alpha, pos) in &positions {
        if alpha.is_sentinel() || pos.len() != 2 {
            continue;
        }
        let (i, j) = (pos[0], pos[1]);
        let witness = positions.iter().find(|(beta, bpos)| {
            *beta != alpha && bpos.len() == 2 && bpos.iter().filter(|&&k| i < k && k < j).count() == 1
        });
        if let Some((beta, _)) = witness {
            return Ok(((*alpha).clone(), (*beta).clone()));
        }
    }
    Err(HssError::NoPairFound)
}

/// One arc of the new curve: from side `from` to side `to` inside one
/// original list (or one segment of an uncut cylinder).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainPair {
    pub from: Label,
    pub to: Label,
    /// Index of the list in the pool the chain was traced in.
    pub list: usize,
    pub segment: Segment,
    pub half: Half,
    pub cylinder: usize,
    pub cyclic: bool,
    /// Positions of `from` and `to` inside the list or segment.
    pub from_pos: usize,
    pub to_pos: usize,
}

/// The chain `(α₀, α₁), (α₁, α₂), …, (α_{r−1}, α_r)` of arcs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairChain {
    pub pairs: Vec<ChainPair>,
}

impl fmt::Display for PairChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pairs {
            write!(f, "({},{})", p.from, p.to)?;
        }
        Ok(())
    }
}

/// Traces the arc between the two occurrences of `alpha` in the merged
/// list back through the gluing steps.  Whenever a gluing at `x`
/// separates the ends of an arc `(p, q)`, the arc is replaced by `(p, x)`
/// and `(x, q)`.
pub fn backtrack(pool: &ListPool, history: &MergeHistory, alpha: &Label) -> Result<PairChain, HssError> {
    let occurrences: Vec<usize> =
        history.result_tokens.iter().copied().filter(|&t| &history.labels[t] == alpha).collect();
    if occurrences.len() != 2 {
        return Err(HssError::LabelNotPaired(format!("{alpha}")));
    }
    let mut chain = vec![(occurrences[0], occurrences[1])];
    for trace in history.traces.iter().rev() {
        let mut next = Vec::with_capacity(chain.len() + 1);
        for (p, q) in chain {
            let in_p = trace.accumulator_tokens.contains(&p);
            let in_q = trace.accumulator_tokens.contains(&q);
            if in_p == in_q {
                next.push((p, q));
            } else {
                let side = |inside: bool| if inside { trace.accumulator_token } else { trace.partner_token };
                next.push((p, side(in_p)));
                next.push((side(in_q), q));
            }
        }
        chain = next;
    }
    let mut pairs = Vec::with_capacity(chain.len());
    for (p, q) in chain {
        let (op, oq) = (history.origins[p], history.origins[q]);
        let describe = || format!("({}, {})", history.labels[p], history.labels[q]);
        if op.list != oq.list || op.segment != oq.segment || op.segment == Segment::Sentinel {
            return Err(HssError::InconsistentChain(describe()));
        }
        let pl = &pool.lists[op.list];
        let (half, cyclic) = match (&pl.body, op.segment) {
            (PoolBody::Half { half, list }, Segment::List) => (*half, list.cyclic),
            (PoolBody::Whole { .. }, Segment::Lower) => (Half::Lower, true),
            (PoolBody::Whole { .. }, Segment::Upper) => (Half::Upper, true),
            _ => return Err(HssError::InconsistentChain(describe())),
        };
        pairs.push(ChainPair {
            from: history.labels[p].clone(),
            to: history.labels[q].clone(),
            list: op.list,
            segment: op.segment,
            half,
            cylinder: pl.cylinder,
            cyclic,
            from_pos: op.pos,
            to_pos: oq.pos,
        });
    }
    Ok(PairChain { pairs })
}

/// Forward `p1`-distance from `a` to `b` (in `0..ℓ`) and the cylinder
/// length `ℓ`.
fn forward_distance(o: &Origami, a: usize, b: usize) -> Result<(i64, i64), HssError> {
    let len = o.p1().cycle_length(a) as i64;
    let mut s = a;
    for t in 0..len {
        if s == b {
            return Ok((t, len));
        }
        s = o.p1().apply(s);
    }
    Err(HssError::InconsistentChain(format!("squares {a} and {b} lie in different cylinders")))
}

/// The signed horizontal displacement `t` of an arc and the vertical step
/// (`-1` below, `+1` above) of its piece `x^t y^{∓1}`.
fn arc_displacement(o: &Origami, pair: &ChainPair) -> Result<(i64, i64), HssError> {
    let sq = |l: &Label| l.square_index().ok_or_else(|| HssError::InconsistentChain("sentinel in arc".into()));
    let (a, b) = (sq(&pair.from)?, sq(&pair.to)?);
    let down = |s: usize| o.p2().inverse().apply(s);
    let forward_first = pair.from_pos < pair.to_pos;
    let t = match (pair.half, pair.cyclic) {
        (half, true) => {
            let (a, b) = if half == Half::Lower { (a, b) } else { (down(a), down(b)) };
            let (f, len) = forward_distance(o, a, b)?;
            if f <= len - f {
                f
            } else {
                f - len
            }
        }
        (Half::Lower, false) => {
            if forward_first {
                positive_distance(o, a, b)?
            } else {
                -positive_distance(o, b, a)?
            }
        }
        (Half::Upper, false) => {
            if forward_first {
                -positive_distance(o, down(b), down(a))?
            } else {
                positive_distance(o, down(a), down(b))?
            }
        }
    };
    let vertical = if pair.half == Half::Lower { -1 } else { 1 };
    Ok((t, vertical))
}

/// Minimal `t ≥ 1` with `p1^t(a) = b`.
fn positive_distance(o: &Origami, a: usize, b: usize) -> Result<i64, HssError> {
    let (f, len) = forward_distance(o, a, b)?;
    Ok(if f == 0 { len } else { f })
}

/// The curve `(q, w₀ ⋯ w_{r−1})` spelled by a chain: each arc in a lower
/// half contributes `x^t y⁻¹`, each arc in an upper half `x^t y`.
pub fn emit_curve(o: &Origami, chain: &PairChain) -> Result<OrigamiCurve, HssError> {
    let first = chain.pairs.first().ok_or_else(|| HssError::InconsistentChain("empty chain".into()))?;
    let a0 = first.from.square_index().ok_or_else(|| HssError::InconsistentChain("sentinel start".into()))?;
    let start = if first.half == Half::Lower { a0 } else { o.p2().inverse().apply(a0) };
    let mut raw = Vec::new();
    for pair in &chain.pairs {
        let (t, v) = arc_displacement(o, pair)?;
        raw.push((1, t));
        raw.push((2, v));
    }
    let word = Word::reduce(2, &raw).expect("rank 2");
    let curve = OrigamiCurve::new(start, word);
    if !o.is_closed(&curve) {
        return Err(HssError::InconsistentChain(format!("curve {curve} is not closed")));
    }
    Ok(curve)
}

/// Splits every list crossed by the chain into the part `L₀` that stays
/// and the cut-out piece `L₁` (a linear list), marking the split sides
/// with primes.  `L₀` keeps the rotation and cyclicity of its parent.
pub fn step3_update(o: &Origami, pool: &ListPool, chain: &PairChain) -> Result<ListPool, HssError> {
    let mut pool = pool.clone();
    for pair in &chain.pairs {
        let (t, _) = arc_displacement(o, pair)?;
        let pl = pool.lists.get(pair.list).ok_or_else(|| HssError::InconsistentChain("unknown list".into()))?;
        let cylinder = pl.cylinder;
        let (segment, cyclic): (Vec<Label>, bool) = match (&pl.body, pair.segment) {
            (PoolBody::Half { list, .. }, Segment::List) => (list.entries.clone(), list.cyclic),
            (PoolBody::Whole { lower, .. }, Segment::Lower) => (lower.clone(), true),
            (PoolBody::Whole { upper, .. }, Segment::Upper) => (upper.clone(), true),
            _ => return Err(HssError::InconsistentChain("arc outside a half".into())),
        };
        let find = |l: &Label| {
            segment
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| HssError::InconsistentChain(format!("label {l} not found for splitting")))
        };
        let (ps, pt) = (find(&pair.from)?, find(&pair.to)?);
        let from_first = if cyclic {
            match pair.half {
                Half::Lower => t >= 0,
                Half::Upper => t < 0,
            }
        } else {
            ps < pt
        };
        let (i, j) = if from_first { (ps, pt) } else { (pt, ps) };
        let n = segment.len();
        let between: Vec<usize> = if i < j { (i + 1..j).collect() } else { (i + 1..n).chain(0..j).collect() };
        let (first_keep, first_cut, second_keep, second_cut) = match pair.half {
            Half::Lower => (Prime::Single, Prime::Double, Prime::Double, Prime::Single),
            Half::Upper => (Prime::Double, Prime::Single, Prime::Single, Prime::Double),
        };
        let mut kept = Vec::with_capacity(n - between.len());
        for (k, l) in segment.iter().enumerate() {
            if k == i {
                kept.push(l.with_prime(first_keep));
            } else if k == j {
                kept.push(l.with_prime(second_keep));
            } else if !between.contains(&k) {
                kept.push(l.clone());
            }
        }
        let mut cut = vec![segment[i].with_prime(first_cut)];
        cut.extend(between.iter().map(|&k| segment[k].clone()));
        cut.push(segment[j].with_prime(second_cut));
        let pl = &mut pool.lists[pair.list];
        match (&mut pl.body, pair.segment) {
            (PoolBody::Half { list, .. }, _) => list.entries = kept,
            (PoolBody::Whole { lower, .. }, Segment::Lower) => *lower = kept,
            (PoolBody::Whole { upper, .. }, _) => *upper = kept,
        }
        let seq = pool.next_seq;
        pool.next_seq += 1;
        pool.lists.push(PoolList {
            cylinder,
            seq,
            body: PoolBody::Half { half: pair.half, list: LabeledList::linear(cut) },
        });
    }
    Ok(pool)
}

/// One round of the list machine (steps 2 and 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HssRound {
    /// The pool before gluing, in pool order.
    pub pool: ListPool,
    pub history: MergeHistory,
    pub alpha: Label,
    pub beta: Label,
    pub chain: PairChain,
    pub curve: OrigamiCurve,
}

/// A horizontal Schottky cut system with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HssResult {
    pub genus: usize,
    /// Cut cylinders of step 1 (0-based, ascending).
    pub step1_cuts: Vec<usize>,
    /// The `g` curves: cylinder core curves first, then one per round.
    pub curves: Vec<OrigamiCurve>,
    pub rounds: Vec<HssRound>,
}

/// Runs the whole construction and returns exactly `g` curves.
pub fn find_hss(o: &Origami) -> Result<HssResult, HssError> {
    let genus = o.genus().map_err(|_| HssError::Genus)?;
    let s1 = step1(o);
    let cylinders = o.cylinders();
    let mut curves: Vec<OrigamiCurve> = s1
        .cuts
        .iter()
        .map(|&i| {
            let c = &cylinders[i];
            OrigamiCurve::new(c.squares[0], Word::power(2, 1, c.len() as i64).expect("rank 2"))
        })
        .collect();
    let mut rounds = Vec::new();
    if curves.len() < genus {
        let mut pool = init_lists(o, &s1.cuts);
        while curves.len() < genus {
            let (p, history) = merge_all(&pool)?;
            let (alpha, beta) = find_separating_pair(&p)?;
            let chain = backtrack(&pool, &history, &alpha)?;
            let curve = emit_curve(o, &chain)?;
            curves.push(curve.clone());
            let mut next = step3_update(o, &pool, &chain)?;
            next.sort();
            rounds.push(HssRound { pool, history, alpha, beta, chain, curve });
            pool = next;
        }
    }
    Ok(HssResult { genus, step1_cuts: s1.cuts, curves, rounds })
}
