//! Signature dynamic program over a nice tree decomposition computing a
//! smallest Z*-forcing set.
//!
//! Bag vertices are addressed by slot (their index in the sorted bag). Event
//! node `2i` is the moment slot `i` turns blue, `2i + 1` the moment the rule
//! of slot `i` fires. Dependency graphs are kept transitively closed: row `x`
//! holds every event reachable from `x`, so forgetting a vertex is just
//! dropping its two events.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use indexmap::IndexMap;
use rustc_hash::{FxBuildHasher, FxHashMap};
use smallvec::SmallVec;

use super::nice::{NiceKind, NiceTd};
use super::TdError;
use crate::bits::ones;
use crate::graph::Graph;

/// Largest bag size minus one the slot encoding supports.
pub const MAX_DP_WIDTH: usize = 31;
/// Default bound on the number of signatures kept per node.
pub const DEFAULT_SIGNATURE_CAP: usize = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GammaType {
    Zstar,
    Bot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiType {
    Zstar,
    E,
    Bot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventNode {
    Gamma(usize),
    Phi(usize),
}

type Rows = SmallVec<[u64; 16]>;
/// Bit-packed [`Key`] as stored in a table.
type Packed = SmallVec<[u64; 5]>;

/// Child entries an entry was derived from; `NONE` marks an absent slot.
type Back = [u32; 2];
/// Join input: key, weight and the entry index it came from.
type Entry = (Key, u32, u32);
const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Key {
    gbot: u32,
    phz: u32,
    phe: u32,
    bg: u32,
    bp: u32,
    bpi: u32,
    lambda: bool,
    d: Rows,
}

/// Signatures of one node, keyed by everything except the weight.
#[derive(Debug, Clone)]
pub struct SignatureTable {
    bag: Vec<usize>,
    map: IndexMap<Packed, (u32, Back), FxBuildHasher>,
    /// Entries whose weight, counting initial-set bag vertices, exceeds this
    /// are dropped.
    bound: u32,
}

struct BitWriter {
    words: Packed,
    used: usize,
}

impl BitWriter {
    fn push(&mut self, value: u64, bits: usize) {
        if bits == 0 {
            return;
        }
        let off = self.used % 64;
        if off == 0 {
            self.words.push(value);
        } else {
            *self.words.last_mut().unwrap() |= value << off;
            if off + bits > 64 {
                self.words.push(value >> (64 - off));
            }
        }
        self.used += bits;
    }
}

struct BitReader<'a> {
    words: &'a [u64],
    pos: usize,
}

impl BitReader<'_> {
    fn take(&mut self, bits: usize) -> u64 {
        if bits == 0 {
            return 0;
        }
        let (w, off) = (self.pos / 64, self.pos % 64);
        let mut v = self.words[w] >> off;
        if off + bits > 64 {
            v |= self.words[w + 1] << (64 - off);
        }
        self.pos += bits;
        if bits == 64 {
            v
        } else {
            v & ((1u64 << bits) - 1)
        }
    }
}

impl Key {
    fn pack(&self, k: usize) -> Packed {
        let mut w = BitWriter {
            words: Packed::new(),
            used: 0,
        };
        for m in [self.gbot, self.phz, self.phe, self.bg, self.bp, self.bpi] {
            w.push(m as u64, k);
        }
        w.push(self.lambda as u64, 1);
        // A vertex of the initial set is blue from the start, so its event
        // has no incoming arcs and its outgoing arcs never close a cycle.
        for (x, &row) in self.d.iter().enumerate() {
            let bot_source = x % 2 == 0 && self.gbot >> (x / 2) & 1 == 1;
            w.push(if bot_source { 0 } else { row }, 2 * k);
        }
        w.words
    }

    fn unpack(words: &[u64], k: usize) -> Key {
        let mut r = BitReader { words, pos: 0 };
        let mut m = [0u32; 6];
        for x in &mut m {
            *x = r.take(k) as u32;
        }
        let lambda = r.take(1) == 1;
        let d = (0..2 * k).map(|_| r.take(2 * k)).collect();
        Key {
            gbot: m[0],
            phz: m[1],
            phe: m[2],
            bg: m[3],
            bp: m[4],
            bpi: m[5],
            lambda,
            d,
        }
    }
}

/// Decoded signature, for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub bag: Vec<usize>,
    pub gamma: Vec<GammaType>,
    pub phi: Vec<PhiType>,
    pub b_gamma: Vec<bool>,
    pub b_phi: Vec<bool>,
    pub b_pi: Vec<bool>,
    pub lambda: bool,
    /// Arcs of the closed dependency graph, in vertex ids.
    pub arcs: Vec<(EventNode, EventNode)>,
    pub omega: usize,
}

impl SignatureTable {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn bag(&self) -> &[usize] {
        &self.bag
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.map.values().map(|e| e.0).min().map(|w| w as usize)
    }

    pub fn signatures(&self) -> Vec<Signature> {
        let k = self.bag.len();
        let bit = |m: u32, i: usize| m >> i & 1 == 1;
        let event = |e: usize| {
            let v = self.bag[e / 2];
            if e.is_multiple_of(2) {
                EventNode::Gamma(v)
            } else {
                EventNode::Phi(v)
            }
        };
        self.map
            .iter()
            .map(|(packed, &(w, _))| (Key::unpack(packed, k), w))
            .map(|(key, w)| Signature {
                bag: self.bag.clone(),
                gamma: (0..k)
                    .map(|i| if bit(key.gbot, i) { GammaType::Bot } else { GammaType::Zstar })
                    .collect(),
                phi: (0..k)
                    .map(|i| {
                        if bit(key.phz, i) {
                            PhiType::Zstar
                        } else if bit(key.phe, i) {
                            PhiType::E
                        } else {
                            PhiType::Bot
                        }
                    })
                    .collect(),
                b_gamma: (0..k).map(|i| bit(key.bg, i)).collect(),
                b_phi: (0..k).map(|i| bit(key.bp, i)).collect(),
                b_pi: (0..k).map(|i| bit(key.bpi, i)).collect(),
                lambda: key.lambda,
                arcs: key
                    .d
                    .iter()
                    .enumerate()
                    .flat_map(|(a, &row)| ones(row).map(move |b| (a, b)))
                    .map(|(a, b)| (event(a), event(b)))
                    .collect(),
                omega: w as usize,
            })
            .collect()
    }

    fn entries(&self) -> impl Iterator<Item = (usize, Key, u32)> + '_ {
        let k = self.bag.len();
        self.map
            .iter()
            .enumerate()
            .map(move |(i, (packed, &(w, _)))| (i, Key::unpack(packed, k), w))
    }

    fn new(bag: Vec<usize>, bound: u32) -> Self {
        SignatureTable {
            bag,
            map: IndexMap::default(),
            bound,
        }
    }

    fn insert(&mut self, key: &Key, w: u32, back: Back) {
        if w + key.gbot.count_ones() > self.bound {
            return;
        }
        debug_assert!({
            let bot_events = ones(key.gbot as u64).fold(0u64, |m, i| m | 1 << gamma(i));
            key.d.iter().all(|&row| row & bot_events == 0)
        });
        self.map
            .entry(key.pack(self.bag.len()))
            .and_modify(|old| {
                if w < old.0 {
                    *old = (w, back);
                }
            })
            .or_insert((w, back));
    }
}

const fn gamma(i: usize) -> usize {
    2 * i
}

const fn phi(i: usize) -> usize {
    2 * i + 1
}

/// Adds arc `a -> b` to a closed graph; `false` if it closes a cycle.
fn add_arc(d: &mut [u64], a: usize, b: usize) -> bool {
    if a == b || d[b] >> a & 1 == 1 {
        return false;
    }
    if d[a] >> b & 1 == 1 {
        return true;
    }
    let gain = d[b] | 1 << b;
    for x in 0..d.len() {
        if x == a || d[x] >> a & 1 == 1 {
            d[x] |= gain;
        }
    }
    true
}

/// Re-closes after a union; `false` if the result has a cycle.
fn close(d: &mut [u64]) -> bool {
    for k in 0..d.len() {
        let row = d[k];
        for x in 0..d.len() {
            if d[x] >> k & 1 == 1 {
                d[x] |= row;
            }
        }
    }
    (0..d.len()).all(|x| d[x] >> x & 1 == 0)
}

fn insert_bit32(m: u32, p: usize, bit: bool) -> u32 {
    let lo = m & ((1u32 << p) - 1);
    let hi = (m >> p).checked_shl(p as u32 + 1).unwrap_or(0);
    lo | hi | (bit as u32) << p
}

fn remove_bit32(m: u32, p: usize) -> u32 {
    let lo = m & ((1u32 << p) - 1);
    let hi = m.checked_shr(p as u32 + 1).unwrap_or(0) << p;
    lo | hi
}

fn insert_events(m: u64, p: usize) -> u64 {
    let lo = m & ((1u64 << (2 * p)) - 1);
    let hi = (m >> (2 * p)).checked_shl(2 * p as u32 + 2).unwrap_or(0);
    lo | hi
}

fn remove_events(m: u64, p: usize) -> u64 {
    let lo = m & ((1u64 << (2 * p)) - 1);
    let hi = m.checked_shr(2 * p as u32 + 2).unwrap_or(0) << (2 * p);
    lo | hi
}

fn leaf(bound: u32) -> SignatureTable {
    let mut t = SignatureTable::new(Vec::new(), bound);
    t.insert(
        &Key {
            gbot: 0,
            phz: 0,
            phe: 0,
            bg: 0,
            bp: 0,
            bpi: 0,
            lambda: false,
            d: Rows::new(),
        },
        0,
        [NONE; 2],
    );
    t
}

fn introduce(child: &SignatureTable, bag: &[usize], v: usize, forced: Option<GammaType>) -> SignatureTable {
    let p = bag.binary_search(&v).expect("introduced vertex is in the bag");
    let mut out = SignatureTable::new(bag.to_vec(), child.bound);
    let choices = [
        (GammaType::Zstar, PhiType::Zstar),
        (GammaType::Zstar, PhiType::Bot),
        (GammaType::Bot, PhiType::Zstar),
        (GammaType::Bot, PhiType::Bot),
        (GammaType::Zstar, PhiType::E),
    ];
    for (ci, key, w) in child.entries() {
        let back = [ci as u32, NONE];
        let mut d: Rows = key.d.iter().map(|&r| insert_events(r, p)).collect();
        d.insert(2 * p, 0);
        d.insert(2 * p + 1, 0);
        for &(gt, pt) in &choices {
            if pt == PhiType::E && key.lambda {
                continue;
            }
            if forced.is_some_and(|f| f != gt) {
                continue;
            }
            let gb = gt == GammaType::Bot;
            let mut nd = d.clone();
            if pt == PhiType::Zstar {
                nd[gamma(p)] |= 1 << phi(p);
            }
            out.insert(
                &Key {
                    gbot: insert_bit32(key.gbot, p, gb),
                    phz: insert_bit32(key.phz, p, pt == PhiType::Zstar),
                    phe: insert_bit32(key.phe, p, pt == PhiType::E),
                    bg: insert_bit32(key.bg, p, gb),
                    bp: insert_bit32(key.bp, p, pt != PhiType::Zstar),
                    bpi: insert_bit32(key.bpi, p, gb || pt == PhiType::E),
                    lambda: key.lambda || pt == PhiType::E,
                    d: nd,
                },
                w,
                back,
            );
        }
    }
    out
}

/// Drops slot `p` from a finished signature, with the weight it adds.
fn project(key: &Key, p: usize) -> Option<(Key, u32)> {
    let bit = 1u32 << p;
    if key.bg & key.bp & key.bpi & bit == 0 {
        return None;
    }
    let mut d = key.d.clone();
    d.drain(2 * p..2 * p + 2);
    for r in &mut d {
        *r = remove_events(*r, p);
    }
    let projected = Key {
        gbot: remove_bit32(key.gbot, p),
        phz: remove_bit32(key.phz, p),
        phe: remove_bit32(key.phe, p),
        bg: remove_bit32(key.bg, p),
        bp: remove_bit32(key.bp, p),
        bpi: remove_bit32(key.bpi, p),
        lambda: key.lambda,
        d,
    };
    Some((projected, (key.gbot & bit != 0) as u32))
}

fn forget(child: &SignatureTable, bag: &[usize], v: usize) -> SignatureTable {
    let p = child.bag.binary_search(&v).expect("forgotten vertex was in the bag");
    let mut out = SignatureTable::new(bag.to_vec(), child.bound);
    for (ci, key, w) in child.entries() {
        if let Some((key, extra)) = project(&key, p) {
            out.insert(&key, w + extra, [ci as u32, NONE]);
        }
    }
    out
}

/// Receives rule-node signatures, optionally forgetting a slot on the way.
struct Sink {
    out: SignatureTable,
    forget: Option<usize>,
}

impl Sink {
    fn put(&mut self, key: &Key, w: u32, back: Back) {
        match self.forget {
            None => self.out.insert(key, w, back),
            Some(p) => {
                if let Some((key, extra)) = project(key, p) {
                    self.out.insert(&key, w + extra, back);
                }
            }
        }
    }
}

fn join(a: &SignatureTable, b: &SignatureTable) -> SignatureTable {
    let mut out = SignatureTable::new(a.bag.clone(), a.bound.min(b.bound));
    let mut groups: FxHashMap<(u32, u32, u32), Vec<Entry>> = FxHashMap::default();
    for (bi, key, w) in b.entries() {
        groups.entry((key.gbot, key.phz, key.phe)).or_default().push((key, w, bi as u32));
    }
    for (ai, k1, w1) in a.entries() {
        let Some(partners) = groups.get(&(k1.gbot, k1.phz, k1.phe)) else {
            continue;
        };
        let zg = !k1.gbot;
        for (k2, w2, bi) in partners {
            let (w2, bi) = (*w2, *bi);
            if k1.bg & k2.bg & zg != 0 || k1.bp & k2.bp & k1.phz != 0 || k1.bpi & k2.bpi & zg & k1.phz != 0 {
                continue;
            }
            // A bag vertex of type E was introduced on both sides, which sets
            // lambda on both; only an E vertex below one side alone conflicts.
            if k1.lambda && k2.lambda && k1.phe == 0 {
                continue;
            }
            let mut d: Rows = k1.d.iter().zip(&k2.d).map(|(x, y)| x | y).collect();
            if !close(&mut d) {
                continue;
            }
            out.insert(
                &Key {
                    gbot: k1.gbot,
                    phz: k1.phz,
                    phe: k1.phe,
                    bg: k1.bg | k2.bg,
                    bp: k1.bp | k2.bp,
                    bpi: k1.bpi | k2.bpi,
                    lambda: k1.lambda || k2.lambda,
                    d,
                },
                w1 + w2,
                [ai as u32, bi],
            );
        }
    }
    out
}

/// Rule step for `v`; with `then_forget` the result is already projected
/// onto the bag without `v`.
fn rule(child: &SignatureTable, g: &Graph, v: usize, then_forget: bool) -> SignatureTable {
    let bag = &child.bag;
    let s = bag.binary_search(&v).expect("rule vertex is in the bag");
    let vb = 1u32 << s;
    let k = bag.len();
    let nb: u32 = (0..k)
        .filter(|&i| i != s && g.has_edge(v, bag[i]))
        .fold(0, |m, i| m | 1 << i);
    let others: u32 = ((1u64 << k) - 1) as u32 & !vb;
    let mut out = Sink {
        out: SignatureTable::new(
            if then_forget {
                bag.iter().copied().filter(|&x| x != v).collect()
            } else {
                bag.clone()
            },
            child.bound,
        ),
        forget: then_forget.then_some(s),
    };
    for (ci, key, w) in child.entries() {
        let back = [ci as u32, NONE];
        let v_e = key.phe & vb != 0;
        let v_z = key.phz & vb != 0;
        let mut base = key.clone();
        let mut ok = true;
        // (g) an E vertex turns blue after everything else in the bag.
        if v_e {
            for i in ones(others as u64) {
                ok &= add_arc(&mut base.d, gamma(i), gamma(s));
            }
        }
        // (h) and v turns blue before any other E vertex of the bag.
        if let Some(e) = ones((key.phe & others) as u64).next() {
            ok &= add_arc(&mut base.d, gamma(s), gamma(e));
        }
        if !ok {
            continue;
        }

        let f_opts: Vec<Option<usize>> = if key.bg & vb != 0 {
            vec![None]
        } else {
            ones((nb & key.phz & !key.bp) as u64).map(Some).collect()
        };
        let g_opts: Vec<Option<usize>> = if key.bp & vb != 0 {
            vec![None]
        } else {
            ones((nb & !key.gbot & !key.bg) as u64).map(Some).collect()
        };
        let h_opts: Vec<Option<usize>> = if key.bpi & vb != 0 {
            vec![None]
        } else {
            ones((nb & !key.gbot) as u64).map(Some).collect()
        };
        let w_cands: Vec<usize> = if key.gbot & vb == 0 {
            ones((nb & !key.bpi) as u64).collect()
        } else {
            Vec::new()
        };

        for &f in &f_opts {
            let mut k1 = base.clone();
            let mut ok = true;
            if let Some(f) = f {
                ok &= add_arc(&mut k1.d, phi(f), gamma(s));
                k1.bg |= vb;
                k1.bp |= 1 << f;
            }
            // (e) neighbours whose rule forces someone other than v need v blue first.
            for i in ones((nb & key.phz) as u64) {
                if Some(i) == f || !ok {
                    continue;
                }
                ok &= add_arc(&mut k1.d, gamma(s), phi(i));
                if v_e && ok {
                    ok &= add_arc(&mut k1.d, phi(i), gamma(s));
                }
            }
            if !ok {
                continue;
            }
            for &gg in &g_opts {
                let mut k2 = k1.clone();
                let mut ok = true;
                if let Some(x) = gg {
                    ok &= add_arc(&mut k2.d, phi(s), gamma(x));
                    k2.bg |= 1 << x;
                    k2.bp |= vb;
                }
                // (f) v's rule needs all its other neighbours blue.
                if v_z {
                    for i in ones(nb as u64) {
                        if Some(i) == gg || !ok {
                            continue;
                        }
                        ok &= add_arc(&mut k2.d, gamma(i), phi(s));
                        if key.phe >> i & 1 == 1 && ok {
                            ok &= add_arc(&mut k2.d, phi(s), gamma(i));
                        }
                    }
                }
                if !ok {
                    continue;
                }
                for &h in &h_opts {
                    let mut k3 = k2.clone();
                    if let Some(h) = h {
                        if !add_arc(&mut k3.d, gamma(s), gamma(h)) {
                            continue;
                        }
                        k3.bpi |= vb;
                    }
                    subsets_w(&mut out, k3, w, back, &w_cands, 0, s);
                }
            }
        }
    }
    out.out
}

/// (d) every subset of the candidates may use v as the white neighbour
/// present when they turn blue.
fn subsets_w(out: &mut Sink, key: Key, w: u32, back: Back, cands: &[usize], from: usize, s: usize) {
    out.put(&key, w, back);
    for j in from..cands.len() {
        let x = cands[j];
        let mut next = key.clone();
        if !add_arc(&mut next.d, gamma(x), gamma(s)) {
            continue;
        }
        next.bpi |= 1 << x;
        subsets_w(out, next, w, back, cands, j + 1, s);
    }
}

/// Computes the signature table of `node` from its children's tables.
pub fn process_node(
    g: &Graph,
    nice: &NiceTd,
    node: usize,
    children: &[&SignatureTable],
    constraints: Option<&[Option<GammaType>]>,
) -> SignatureTable {
    process_bounded(g, nice, node, children, constraints, u32::MAX)
}

fn process_bounded(
    g: &Graph,
    nice: &NiceTd,
    node: usize,
    children: &[&SignatureTable],
    constraints: Option<&[Option<GammaType>]>,
    bound: u32,
) -> SignatureTable {
    let t = &nice.nodes[node];
    match t.kind {
        NiceKind::Leaf => leaf(bound),
        NiceKind::Introduce(v) => introduce(children[0], &t.bag, v, constraints.and_then(|c| c[v])),
        NiceKind::Forget(v) => forget(children[0], &t.bag, v),
        NiceKind::Rule(v) => rule(children[0], g, v, false),
        NiceKind::Join => join(children[0], children[1]),
    }
}

/// Minimum weight over the root signatures together with a set attaining
/// it, or `None` if no signature of weight at most `bound` survives.
pub fn run(
    g: &Graph,
    nice: &NiceTd,
    constraints: Option<&[Option<GammaType>]>,
    cap: usize,
    bound: usize,
) -> Result<Option<(usize, Vec<usize>)>, TdError> {
    if nice.width() > MAX_DP_WIDTH {
        return Err(TdError::WidthTooLarge(nice.width()));
    }
    let bound = bound.min(u32::MAX as usize) as u32;
    // A forget node computes its rule child in one pass; the rule node's own
    // table stays empty and back pointers skip it.
    let fused: Vec<bool> = (0..nice.nodes.len())
        .map(|i| match nice.nodes[i].kind {
            NiceKind::Forget(v) => nice.nodes[nice.nodes[i].children[0]].kind == NiceKind::Rule(v),
            _ => false,
        })
        .collect();
    let mut tables: Vec<SignatureTable> = Vec::with_capacity(nice.nodes.len());
    for i in 0..nice.nodes.len() {
        let node = &nice.nodes[i];
        let table = if fused[i] {
            let r = node.children[0];
            let NiceKind::Forget(v) = node.kind else { unreachable!() };
            rule(&tables[nice.nodes[r].children[0]], g, v, true)
        } else if matches!(node.kind, NiceKind::Rule(_)) {
            SignatureTable::new(node.bag.clone(), bound)
        } else {
            let kids: Vec<&SignatureTable> = node.children.iter().map(|&c| &tables[c]).collect();
            process_bounded(g, nice, i, &kids, constraints, bound)
        };
        if table.len() > cap {
            return Err(TdError::SignatureCapExceeded(cap));
        }
        tables.push(table);
    }
    let root = &tables[nice.root()];
    let Some((best, _)) = root.map.values().enumerate().min_by_key(|(_, e)| e.0) else {
        return Ok(None);
    };
    let weight = root.map[best].0 as usize;
    let mut set = Vec::new();
    let mut stack = vec![(nice.root(), best)];
    while let Some((node, idx)) = stack.pop() {
        let t = &tables[node];
        let (packed, &(_, back)) = t.map.get_index(idx).expect("back pointers stay in range");
        let key = Key::unpack(packed, t.bag.len());
        if let NiceKind::Introduce(v) = nice.nodes[node].kind {
            let p = t.bag.binary_search(&v).unwrap();
            if key.gbot >> p & 1 == 1 {
                set.push(v);
            }
        }
        for (&c, &b) in nice.nodes[node].children.iter().zip(&back) {
            let c = if fused[node] { nice.nodes[c].children[0] } else { c };
            stack.push((c, b as usize));
        }
    }
    set.sort_unstable();
    set.dedup();
    Ok(Some((weight, set)))
}

/// A dependency graph over named event nodes, not necessarily closed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DependencyGraph {
    arcs: BTreeSet<(EventNode, EventNode)>,
}

impl DependencyGraph {
    pub fn new(arcs: impl IntoIterator<Item = (EventNode, EventNode)>) -> Self {
        DependencyGraph {
            arcs: arcs.into_iter().collect(),
        }
    }

    pub fn arcs(&self) -> &BTreeSet<(EventNode, EventNode)> {
        &self.arcs
    }

    pub fn contains(&self, a: EventNode, b: EventNode) -> bool {
        self.arcs.contains(&(a, b))
    }

    /// Adds the transitive closure of the subgraph induced by `v`'s events
    /// and their in- and out-neighbours.
    pub fn bypass(&self, v: usize) -> DependencyGraph {
        let centre = [EventNode::Gamma(v), EventNode::Phi(v)];
        let mut local: BTreeSet<EventNode> = centre.into_iter().collect();
        for &(a, b) in &self.arcs {
            if centre.contains(&a) {
                local.insert(b);
            }
            if centre.contains(&b) {
                local.insert(a);
            }
        }
        let nodes: Vec<EventNode> = local.into_iter().collect();
        let idx = |x: EventNode| nodes.binary_search(&x).ok();
        let m = nodes.len();
        let mut reach = vec![vec![false; m]; m];
        for &(a, b) in &self.arcs {
            if let (Some(i), Some(j)) = (idx(a), idx(b)) {
                reach[i][j] = true;
            }
        }
        for k in 0..m {
            for i in 0..m {
                if reach[i][k] {
                    for j in 0..m {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut out = self.clone();
        for i in 0..m {
            for j in 0..m {
                if reach[i][j] && i != j {
                    out.arcs.insert((nodes[i], nodes[j]));
                }
            }
        }
        out
    }

    /// Deletes both event nodes of `v`.
    pub fn remove_vertex(&self, v: usize) -> DependencyGraph {
        let gone = |x: &EventNode| matches!(x, EventNode::Gamma(u) | EventNode::Phi(u) if *u == v);
        DependencyGraph {
            arcs: self
                .arcs
                .iter()
                .filter(|(a, b)| !gone(a) && !gone(b))
                .copied()
                .collect(),
        }
    }
}
