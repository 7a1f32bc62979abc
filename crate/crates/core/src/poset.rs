//! Finite ranked posets with a unique minimum.
//!
//! Elements are named by strings on input and stored as dense indices sorted
//! by `(rank, name)`, so index order is always a linear extension.  The order
//! relation is kept as a bitset table: `below[v]` holds every `u <= v`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Largest rank for which rank sets still fit in a `u64` mask.
pub const MAX_RANK: u32 = 62;

pub(crate) type Bits = Vec<u64>;

pub(crate) fn bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

#[derive(Clone, Default)]
struct Flags {
    graded: OnceLock<bool>,
    eulerian: OnceLock<bool>,
    lower_eulerian: OnceLock<bool>,
    simplicial: OnceLock<bool>,
    dual_simplicial: OnceLock<bool>,
}

/// Tri-state view of the cached predicates: `None` means not yet computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CachedFlags {
    pub graded: Option<bool>,
    pub eulerian: Option<bool>,
    pub lower_eulerian: Option<bool>,
    pub simplicial: Option<bool>,
    pub dual_simplicial: Option<bool>,
}

#[derive(Clone)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    ranks: Vec<u32>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    below: Vec<Bits>,
    flags: Flags,
}

/// `(f_{-1}, f_0, ..., f_n)`: element counts by rank, shifted down by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    pub entries: Vec<u64>,
}

impl FVector {
    /// `f_i` for `-1 <= i`, zero past the end.
    pub fn get(&self, i: i64) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.entries.get(k).copied())
            .unwrap_or(0)
    }

    /// The `n` with `f_n` the last entry.
    pub fn top_index(&self) -> i64 {
        self.entries.len() as i64 - 2
    }
}

impl Poset {
    pub fn empty() -> Self {
        Self::assemble(Vec::new(), Vec::new(), Vec::new())
    }

    /// Builds a poset from an element list and cover pairs.  Elements that only
    /// occur in covers are added automatically.  Without explicit ranks, the
    /// rank of `x` is the length of the longest chain from the minimum to `x`.
    pub fn from_covers<E, C>(
        elements: E,
        covers: C,
        explicit_ranks: Option<&BTreeMap<String, u32>>,
    ) -> Result<Self>
    where
        E: IntoIterator,
        E::Item: Into<String>,
        C: IntoIterator<Item = (String, String)>,
    {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |s: String, names: &mut Vec<String>| -> usize {
            *index.entry(s.clone()).or_insert_with(|| {
                names.push(s);
                names.len() - 1
            })
        };
        for e in elements {
            intern(e.into(), &mut names);
        }
        let mut pairs = BTreeSet::new();
        for (u, v) in covers {
            let a = intern(u, &mut names);
            let b = intern(v, &mut names);
            pairs.insert((a, b));
        }
        if names.is_empty() {
            return Err(Error::NoMinimum);
        }
        let ranks = explicit_ranks.map(|m| {
            names
                .iter()
                .map(|n| m.get(n).copied())
                .collect::<Vec<Option<u32>>>()
        });
        Self::build(names, pairs.into_iter().collect(), ranks)
    }

    /// Convenience form of [`Self::from_covers`] for string literals.
    pub fn from_cover_pairs(pairs: &[(&str, &str)]) -> Result<Self> {
        Self::from_covers(
            Vec::<String>::new(),
            pairs.iter().map(|(u, v)| (u.to_string(), v.to_string())),
            None,
        )
    }

    fn build(
        names: Vec<String>,
        covers: Vec<(usize, usize)>,
        explicit: Option<Vec<Option<u32>>>,
    ) -> Result<Self> {
        let n = names.len();
        let mut up = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in &covers {
            if a == b {
                return Err(Error::CycleDetected(names[a].clone()));
            }
            up[a].push(b);
            indeg[b] += 1;
        }
        let minima: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();

        let mut order = Vec::with_capacity(n);
        let mut remaining = indeg.clone();
        let mut queue: VecDeque<usize> = minima.iter().copied().collect();
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &up[u] {
                remaining[v] -= 1;
                if remaining[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| remaining[i] > 0).unwrap();
            return Err(Error::CycleDetected(names[stuck].clone()));
        }
        if minima.len() != 1 {
            return Err(Error::MultipleMinima(minima.len()));
        }
        let bottom = minima[0];

        let ranks: Vec<u32> = match explicit {
            Some(given) => {
                let mut out = Vec::with_capacity(n);
                for (i, r) in given.into_iter().enumerate() {
                    out.push(r.ok_or_else(|| Error::NoRank(names[i].clone()))?);
                }
                if out[bottom] != 0 {
                    return Err(Error::Input(format!(
                        "minimum `{}` must have rank 0, found {}",
                        names[bottom], out[bottom]
                    )));
                }
                out
            }
            None => {
                let mut r = vec![0u32; n];
                for &u in &order {
                    for &v in &up[u] {
                        r[v] = r[v].max(r[u] + 1);
                    }
                }
                r
            }
        };
        for &(a, b) in &covers {
            if ranks[b] != ranks[a] + 1 {
                return Err(Error::RankMismatch {
                    lower: names[a].clone(),
                    upper: names[b].clone(),
                    lower_rank: ranks[a],
                    upper_rank: ranks[b],
                });
            }
        }
        if let Some(&r) = ranks.iter().max() {
            if r > MAX_RANK {
                return Err(Error::RankTooLarge(r));
            }
        }

        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&a, &b| (ranks[a], &names[a]).cmp(&(ranks[b], &names[b])));
        let mut new_of = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            new_of[old] = new;
        }
        let sorted_names = perm.iter().map(|&o| names[o].clone()).collect();
        let sorted_ranks = perm.iter().map(|&o| ranks[o]).collect();
        let sorted_covers = covers.iter().map(|&(a, b)| (new_of[a], new_of[b])).collect();
        Ok(Self::assemble(sorted_names, sorted_ranks, sorted_covers))
    }

    /// Final step of construction; inputs must already be sorted by rank.
    fn assemble(names: Vec<String>, ranks: Vec<u32>, covers: Vec<(usize, usize)>) -> Self {
        let n = names.len();
        let words = n.div_ceil(64);
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            up[a].push(b);
            down[b].push(a);
        }
        for l in up.iter_mut().chain(down.iter_mut()) {
            l.sort_unstable();
            l.dedup();
        }
        let mut below = vec![vec![0u64; words]; n];
        for v in 0..n {
            set_bit(&mut below[v], v);
            for &u in &down[v] {
                let (lo, hi) = below.split_at_mut(v);
                for (w, x) in hi[0].iter_mut().zip(&lo[u]) {
                    *w |= x;
                }
            }
        }
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Self {
            names,
            index,
            ranks,
            up,
            down,
            below,
            flags: Flags::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Index of the unique minimum (always 0 for a nonempty poset).
    pub fn bottom(&self) -> Option<usize> {
        (!self.is_empty()).then_some(0)
    }

    /// Index of the unique maximal element, if there is exactly one.
    pub fn top(&self) -> Option<usize> {
        let mut maxima = (0..self.len()).filter(|&i| self.up[i].is_empty());
        match (maxima.next(), maxima.next()) {
            (Some(t), None) => Some(t),
            _ => None,
        }
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.ranks[i]
    }

    pub fn max_rank(&self) -> u32 {
        self.ranks.last().copied().unwrap_or(0)
    }

    pub fn up_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn down_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        bit(&self.below[v], u)
    }

    pub fn lt(&self, u: usize, v: usize) -> bool {
        u != v && self.leq(u, v)
    }

    pub fn elements_of_rank(&self, r: u32) -> impl Iterator<Item = usize> + '_ {
        let start = self.ranks.partition_point(|&x| x < r);
        let end = self.ranks.partition_point(|&x| x <= r);
        start..end
    }

    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|u| self.up[u].iter().map(move |&v| (u, v)))
            .collect()
    }

    /// Element counts by rank, `(f_{-1}, ..., f_{max rank - 1})`.
    pub fn f_vector(&self) -> FVector {
        let mut entries = vec![0u64; self.max_rank() as usize + 1];
        for &r in &self.ranks {
            entries[r as usize] += 1;
        }
        if self.is_empty() {
            entries.clear();
        }
        FVector { entries }
    }

    pub fn is_graded(&self) -> bool {
        *self
            .flags
            .graded
            .get_or_init(|| !self.is_empty() && self.top().is_some())
    }

    fn require_top(&self) -> Result<usize> {
        self.top()
            .filter(|_| !self.is_empty())
            .ok_or_else(|| Error::NotGraded(self.graded_failure()))
    }

    fn graded_failure(&self) -> String {
        if self.is_empty() {
            return "the poset is empty".into();
        }
        let maxima: Vec<&str> = (0..self.len())
            .filter(|&i| self.up[i].is_empty())
            .map(|i| self.name(i))
            .collect();
        format!("{} maximal elements ({})", maxima.len(), maxima.join(", "))
    }

    /// `sum_{u <= z <= v} (-1)^{rank z}`
    fn alternating_sum(&self, u: usize, v: usize) -> i64 {
        let mut sum = 0i64;
        for z in u..=v {
            if self.leq(u, z) && self.leq(z, v) {
                sum += if self.ranks[z] % 2 == 0 { 1 } else { -1 };
            }
        }
        sum
    }

    /// First interval `[u, v]`, `u < v`, whose alternating rank sum is nonzero.
    pub fn eulerian_witness(&self) -> Option<(usize, usize)> {
        for v in 0..self.len() {
            for u in 0..v {
                if self.leq(u, v) && self.alternating_sum(u, v) != 0 {
                    return Some((u, v));
                }
            }
        }
        None
    }

    fn witness_names(&self, w: Option<(usize, usize)>) -> Option<(String, String)> {
        w.map(|(u, v)| (self.name(u).to_string(), self.name(v).to_string()))
    }

    /// Graded and every nontrivial interval has alternating rank sum zero.
    pub fn is_eulerian(&self) -> bool {
        *self
            .flags
            .eulerian
            .get_or_init(|| self.is_graded() && self.is_lower_eulerian())
    }

    /// Every principal lower interval `[0, p]` is Eulerian.
    pub fn is_lower_eulerian(&self) -> bool {
        *self
            .flags
            .lower_eulerian
            .get_or_init(|| self.eulerian_witness().is_none())
    }

    pub fn require_eulerian(&self) -> Result<()> {
        if self.is_eulerian() {
            return Ok(());
        }
        if !self.is_graded() {
            return Err(Error::NotEulerian { witness: None });
        }
        Err(Error::NotEulerian {
            witness: self.witness_names(self.eulerian_witness()),
        })
    }

    pub fn require_lower_eulerian(&self) -> Result<()> {
        if self.is_lower_eulerian() {
            return Ok(());
        }
        Err(Error::NotLowerEulerian {
            witness: self.witness_names(self.eulerian_witness()),
        })
    }

    /// Whether the closed interval `[u, v]` is isomorphic to a Boolean algebra.
    pub fn is_boolean_interval(&self, u: usize, v: usize) -> bool {
        if !self.leq(u, v) {
            return false;
        }
        let r = (self.ranks[v] - self.ranks[u]) as usize;
        let atoms: Vec<usize> = self.up[u].iter().copied().filter(|&a| self.leq(a, v)).collect();
        if atoms.len() != r || r > 20 {
            return false;
        }
        let members: Vec<usize> = (u..=v).filter(|&z| self.leq(u, z) && self.leq(z, v)).collect();
        if members.len() != 1 << r {
            return false;
        }
        let mask_of = |z: usize| -> u32 {
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &a)| self.leq(a, z))
                .fold(0, |m, (k, _)| m | 1 << k)
        };
        let masks: Vec<u32> = members.iter().map(|&z| mask_of(z)).collect();
        let distinct: BTreeSet<u32> = masks.iter().copied().collect();
        if distinct.len() != members.len() {
            return false;
        }
        for (a, &za) in members.iter().enumerate() {
            for (b, &zb) in members.iter().enumerate() {
                let subset = masks[a] & !masks[b] == 0;
                if subset != self.leq(za, zb) {
                    return false;
                }
            }
        }
        true
    }

    /// Every `[0, t]` with `t != 1` is a Boolean algebra.
    pub fn is_simplicial(&self) -> Result<bool> {
        let top = self.require_top()?;
        Ok(*self.flags.simplicial.get_or_init(|| {
            (0..self.len())
                .filter(|&t| t != top)
                .all(|t| self.is_boolean_interval(0, t))
        }))
    }

    /// Every `[t, 1]` with `t != 0` is a Boolean algebra.
    pub fn is_dual_simplicial(&self) -> Result<bool> {
        let top = self.require_top()?;
        Ok(*self.flags.dual_simplicial.get_or_init(|| {
            (1..self.len()).all(|t| self.is_boolean_interval(t, top))
        }))
    }

    pub fn cached_flags(&self) -> CachedFlags {
        CachedFlags {
            graded: self.flags.graded.get().copied(),
            eulerian: self.flags.eulerian.get().copied(),
            lower_eulerian: self.flags.lower_eulerian.get().copied(),
            simplicial: self.flags.simplicial.get().copied(),
            dual_simplicial: self.flags.dual_simplicial.get().copied(),
        }
    }

    /// The order dual; requires a unique maximum, which becomes the new minimum.
    pub fn dual(&self) -> Result<Self> {
        let top = self.require_top()?;
        let n = self.len();
        let r = self.ranks[top];
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&a, &b| {
            (r - self.ranks[a], &self.names[a]).cmp(&(r - self.ranks[b], &self.names[b]))
        });
        let mut new_of = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            new_of[old] = new;
        }
        let names = perm.iter().map(|&o| self.names[o].clone()).collect();
        let ranks = perm.iter().map(|&o| r - self.ranks[o]).collect();
        let covers = self
            .cover_pairs()
            .into_iter()
            .map(|(a, b)| (new_of[b], new_of[a]))
            .collect();
        Ok(Self::assemble(names, ranks, covers))
    }

    fn induced(&self, members: &[usize], base_rank: u32) -> Self {
        let mut new_of = HashMap::new();
        for (k, &m) in members.iter().enumerate() {
            new_of.insert(m, k);
        }
        let names = members.iter().map(|&m| self.names[m].clone()).collect();
        let ranks = members.iter().map(|&m| self.ranks[m] - base_rank).collect();
        let mut covers = Vec::new();
        for &m in members {
            for &w in &self.up[m] {
                if let Some(&k) = new_of.get(&w) {
                    covers.push((new_of[&m], k));
                }
            }
        }
        Self::assemble(names, ranks, covers)
    }

    fn require_leq(&self, u: usize, v: usize) -> Result<()> {
        if self.leq(u, v) {
            Ok(())
        } else {
            Err(Error::NotComparable(self.name(u).into(), self.name(v).into()))
        }
    }

    /// `[u, v]` with ranks measured from `u`.
    pub fn closed_interval(&self, u: usize, v: usize) -> Result<Self> {
        self.require_leq(u, v)?;
        let members: Vec<usize> = (u..=v).filter(|&z| self.leq(u, z) && self.leq(z, v)).collect();
        Ok(self.induced(&members, self.ranks[u]))
    }

    /// `[u, v)`; empty when `u = v`.
    pub fn half_open_interval(&self, u: usize, v: usize) -> Result<Self> {
        self.require_leq(u, v)?;
        let members: Vec<usize> = (u..v).filter(|&z| self.leq(u, z) && self.leq(z, v)).collect();
        Ok(self.induced(&members, self.ranks[u]))
    }

    /// Removes the unique maximum: `[0, 1)`.
    pub fn without_top(&self) -> Result<Self> {
        let top = self.require_top()?;
        self.half_open_interval(0, top)
    }

    /// Adjoins a new maximum above every maximal element.
    pub fn with_top(&self, name: &str) -> Result<Self> {
        if self.index.contains_key(name) {
            return Err(Error::Input(format!("element `{name}` already present")));
        }
        let mut names = self.names.clone();
        let mut covers = self.cover_pairs();
        let maxima: Vec<usize> = (0..self.len()).filter(|&i| self.up[i].is_empty()).collect();
        let r = maxima.iter().map(|&m| self.ranks[m]).max().unwrap_or(0) + 1;
        if maxima.iter().any(|&m| self.ranks[m] + 1 != r) {
            return Err(Error::NotGraded("maximal elements have different ranks".into()));
        }
        names.push(name.to_string());
        let t = names.len() - 1;
        covers.extend(maxima.iter().map(|&m| (m, t)));
        let mut ranks = self.ranks.clone();
        ranks.push(if self.is_empty() { 0 } else { r });
        Ok(Self::assemble(names, ranks, covers))
    }

    /// Isomorphism test by rank-by-rank backtracking.  Meant for the small
    /// face lattices used in tests.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        if self.len() != other.len() || self.ranks != other.ranks {
            return false;
        }
        let n = self.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, other: &Poset, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if i == self.len() {
            return true;
        }
        let want: BTreeSet<usize> = self.down[i].iter().map(|&d| map[d]).collect();
        for j in other.elements_of_rank(self.ranks[i]).collect::<Vec<_>>() {
            if used[j]
                || other.up[j].len() != self.up[i].len()
                || other.down[j].len() != self.down[i].len()
                || other.down[j].iter().copied().collect::<BTreeSet<_>>() != want
            {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if self.extend_iso(other, i + 1, map, used) {
                return true;
            }
            used[j] = false;
        }
        map[i] = usize::MAX;
        false
    }

    /// `{"elements": [...], "covers": [[u, v], ...], "ranks": {...}}`, sorted
    /// by `(rank, id)`.
    pub fn to_json(&self) -> Value {
        let covers: Vec<Value> = self
            .cover_pairs()
            .into_iter()
            .map(|(u, v)| json!([self.names[u], self.names[v]]))
            .collect();
        let ranks: serde_json::Map<String, Value> = self
            .names
            .iter()
            .zip(&self.ranks)
            .map(|(n, &r)| (n.clone(), json!(r)))
            .collect();
        json!({ "elements": self.names, "covers": covers, "ranks": ranks })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Input("poset must be a JSON object".into()))?;
        let elements: Vec<String> = match obj.get("elements") {
            None => Vec::new(),
            Some(e) => e
                .as_array()
                .ok_or_else(|| Error::Input("`elements` must be a list".into()))?
                .iter()
                .map(json_id)
                .collect::<Result<_>>()?,
        };
        let covers: Vec<(String, String)> = match obj.get("covers") {
            None => Vec::new(),
            Some(c) => c
                .as_array()
                .ok_or_else(|| Error::Input("`covers` must be a list".into()))?
                .iter()
                .map(|p| {
                    let pair = p
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| Error::Input(format!("bad cover {p}")))?;
                    Ok((json_id(&pair[0])?, json_id(&pair[1])?))
                })
                .collect::<Result<_>>()?,
        };
        let ranks = match obj.get("ranks") {
            None | Some(Value::Null) => None,
            Some(r) => {
                let m = r
                    .as_object()
                    .ok_or_else(|| Error::Input("`ranks` must be an object".into()))?;
                let mut out = BTreeMap::new();
                for (k, val) in m {
                    let rank = val
                        .as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| Error::Input(format!("bad rank for `{k}`")))?;
                    out.insert(k.clone(), rank);
                }
                Some(out)
            }
        };
        Self::from_covers(elements, covers, ranks.as_ref())
    }
}

fn json_id(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Input(format!("element ids must be strings, found {other}"))),
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("elements", &self.len())
            .field("max_rank", &self.max_rank())
            .field("covers", &self.cover_pairs().len())
            .finish()
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.ranks == other.ranks && self.up == other.up
    }
}

impl Eq for Poset {}

fn subset_name(mask: u64, r: u32) -> String {
    let items: Vec<String> = (0..r)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// The subsets of an `r`-set ordered by inclusion.
pub fn boolean_algebra(r: u32) -> Result<Poset> {
    if r > 20 {
        return Err(Error::ParameterOutOfRange(format!("boolean algebra rank {r} > 20")));
    }
    let size = 1u64 << r;
    let names: Vec<String> = (0..size).map(|m| subset_name(m, r)).collect();
    let covers = (0..size).flat_map(|m| {
        (0..r)
            .filter(move |i| m >> i & 1 == 0)
            .map(move |i| (subset_name(m, r), subset_name(m | 1 << i, r)))
    });
    Poset::from_covers(names, covers, None)
}

/// `0 < 1 < ... < n`
pub fn chain(n: u32) -> Result<Poset> {
    if n > MAX_RANK {
        return Err(Error::RankTooLarge(n));
    }
    let names: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let covers = (0..n).map(|i| (i.to_string(), (i + 1).to_string()));
    Poset::from_covers(names, covers, None)
}

/// Face lattice of the `d`-cube.  A nonempty face is a word over `{-, +, *}`
/// (`*` marks a free coordinate); the empty face is `"empty"`.
pub fn cube_lattice(d: u32) -> Result<Poset> {
    if d == 0 || d > 8 {
        return Err(Error::ParameterOutOfRange(format!("cube dimension {d} not in 1..=8")));
    }
    let faces: Vec<String> = (0..3u32.pow(d))
        .map(|mut code| {
            (0..d)
                .map(|_| {
                    let c = ['-', '+', '*'][(code % 3) as usize];
                    code /= 3;
                    c
                })
                .collect()
        })
        .collect();
    let mut covers = Vec::new();
    for f in &faces {
        if !f.contains('*') {
            covers.push(("empty".to_string(), f.clone()));
        }
        for (i, c) in f.char_indices() {
            if c != '*' {
                let mut g = f.clone();
                g.replace_range(i..i + 1, "*");
                covers.push((f.clone(), g));
            }
        }
    }
    let mut names = vec!["empty".to_string()];
    names.extend(faces);
    Poset::from_covers(names, covers, None)
}

/// Face lattice of the `d`-dimensional cross-polytope.  A proper face is a
/// word over `{0, +, -}` choosing at most one of `±e_i` per coordinate; the
/// whole polytope is `"full"`.
pub fn cross_polytope_lattice(d: u32) -> Result<Poset> {
    if d == 0 || d > 8 {
        return Err(Error::ParameterOutOfRange(format!(
            "cross-polytope dimension {d} not in 1..=8"
        )));
    }
    let faces: Vec<String> = (0..3u32.pow(d))
        .map(|mut code| {
            (0..d)
                .map(|_| {
                    let c = ['0', '+', '-'][(code % 3) as usize];
                    code /= 3;
                    c
                })
                .collect()
        })
        .collect();
    let mut covers = Vec::new();
    for f in &faces {
        if !f.contains('0') {
            covers.push((f.clone(), "full".to_string()));
        }
        for (i, c) in f.char_indices() {
            if c == '0' {
                for s in ["+", "-"] {
                    let mut g = f.clone();
                    g.replace_range(i..i + 1, s);
                    covers.push((f.clone(), g));
                }
            }
        }
    }
    let mut names = faces;
    names.push("full".to_string());
    Poset::from_covers(names, covers, None)
}

/// Face lattice of an `m`-gon: `empty`, vertices `v0..`, edges `e0..`
/// (edge `e_i` joins `v_i` and `v_{i+1}`), and `full`.
pub fn polygon_lattice(m: u32) -> Result<Poset> {
    if m < 3 {
        return Err(Error::ParameterOutOfRange(format!("polygon needs m >= 3, got {m}")));
    }
    let mut covers = Vec::new();
    for i in 0..m {
        covers.push(("empty".to_string(), format!("v{i}")));
        covers.push((format!("v{i}"), format!("e{i}")));
        covers.push((format!("v{}", (i + 1) % m), format!("e{i}")));
        covers.push((format!("e{i}"), "full".to_string()));
    }
    Poset::from_covers(Vec::<String>::new(), covers, None)
}

/// A random layered poset with a unique minimum: each non-minimal element
/// covers a nonempty random subset of the previous layer.  Usually neither
/// graded nor Eulerian.
pub fn random_ranked_poset<R: Rng>(rng: &mut R, max_elements: usize, max_rank: u32) -> Poset {
    let max_elements = max_elements.max(2);
    let mut layers: Vec<Vec<String>> = vec![vec!["0".to_string()]];
    let mut count = 1;
    let target = rng.gen_range(2..=max_elements);
    while count < target && (layers.len() as u32) <= max_rank {
        let width = rng.gen_range(1..=3).min(target - count);
        let layer: Vec<String> = (0..width).map(|k| format!("r{}x{k}", layers.len())).collect();
        count += width;
        layers.push(layer);
    }
    let mut covers = Vec::new();
    for w in layers.windows(2) {
        for v in &w[1] {
            let lower = &w[0];
            let first = rng.gen_range(0..lower.len());
            covers.push((lower[first].clone(), v.clone()));
            for (k, u) in lower.iter().enumerate() {
                if k != first && rng.gen_bool(0.5) {
                    covers.push((u.clone(), v.clone()));
                }
            }
        }
    }
    let names: Vec<String> = layers.concat();
    Poset::from_covers(names, covers, None).expect("layered construction is always valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Oracle: the alternating sum over every interval, recomputed from covers
    /// by explicit downward search rather than the bitset tables.
    fn brute_eulerian(p: &Poset) -> bool {
        let n = p.len();
        let mut reach = vec![BTreeSet::new(); n];
        for v in 0..n {
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                if reach[v].insert(x) {
                    stack.extend(p.down_covers(x).iter().copied());
                }
            }
        }
        if p.top().is_none() {
            return false;
        }
        (0..n).all(|v| {
            reach[v].iter().all(|&u| {
                u == v || {
                    let s: i64 = reach[v]
                        .iter()
                        .filter(|&&z| reach[z].contains(&u))
                        .map(|&z| if p.rank(z) % 2 == 0 { 1 } else { -1 })
                        .sum();
                    s == 0
                }
            })
        })
    }

    #[test]
    fn chain_from_covers() {
        let p = Poset::from_cover_pairs(&[("0", "a"), ("a", "1")]).unwrap();
        assert_eq!(p.len(), 3);
        let ranks: Vec<u32> = ["0", "a", "1"].iter().map(|s| p.rank(p.id(s).unwrap())).collect();
        assert_eq!(ranks, vec![0, 1, 2]);
        assert!(!p.is_eulerian());
    }

    #[test]
    fn diamond_is_eulerian() {
        let p = Poset::from_cover_pairs(&[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap();
        assert!(p.is_graded());
        assert!(p.is_eulerian());
        assert_eq!(p.max_rank(), 2);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Poset::from_cover_pairs(&[("0", "a"), ("a", "b"), ("b", "a")]),
            Err(Error::CycleDetected(_))
        ));
        assert_eq!(
            Poset::from_cover_pairs(&[("a", "c"), ("b", "c")]),
            Err(Error::MultipleMinima(2))
        );
        let bad = Poset::from_cover_pairs(&[("0", "a"), ("a", "b"), ("0", "c"), ("c", "d"), ("d", "b")]);
        assert!(matches!(bad, Err(Error::RankMismatch { .. })));
        let ranks: BTreeMap<String, u32> = [("0".into(), 0), ("a".into(), 2)].into_iter().collect();
        assert!(matches!(
            Poset::from_covers(Vec::<String>::new(), [("0".into(), "a".into())], Some(&ranks)),
            Err(Error::RankMismatch { .. })
        ));
        let partial: BTreeMap<String, u32> = [("0".into(), 0)].into_iter().collect();
        assert_eq!(
            Poset::from_covers(Vec::<String>::new(), [("0".into(), "a".into())], Some(&partial)),
            Err(Error::NoRank("a".into()))
        );
        let single = Poset::from_covers(["x"], Vec::new(), None).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn boolean_algebras() {
        let b3 = boolean_algebra(3).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.f_vector().entries, vec![1, 3, 3, 1]);
        assert_eq!(boolean_algebra(0).unwrap().len(), 1);
        let b2 = boolean_algebra(2).unwrap();
        assert!(b2.is_eulerian());
        let b4 = boolean_algebra(4).unwrap();
        assert!(b4.is_eulerian());
        assert!(b4.is_simplicial().unwrap());
        assert!(b4.is_dual_simplicial().unwrap());
    }

    #[test]
    fn face_lattices() {
        let c3 = cube_lattice(3).unwrap();
        assert_eq!(c3.len(), 28);
        assert_eq!(c3.f_vector().entries, vec![1, 8, 12, 6, 1]);
        assert!(c3.is_eulerian());
        assert!(c3.is_dual_simplicial().unwrap());
        assert!(!c3.is_simplicial().unwrap());
        assert_eq!(polygon_lattice(4).unwrap().f_vector().entries, vec![1, 4, 4, 1]);
        assert!(polygon_lattice(5).unwrap().is_eulerian());
        assert!(cross_polytope_lattice(2).unwrap().is_isomorphic(&polygon_lattice(4).unwrap()));
        assert!(cross_polytope_lattice(3).unwrap().is_simplicial().unwrap());
        assert!(matches!(polygon_lattice(2), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(cube_lattice(0), Err(Error::ParameterOutOfRange(_))));
        for d in 1..=4 {
            assert_eq!(cube_lattice(d).unwrap().len(), 3usize.pow(d) + 1);
        }
    }

    #[test]
    fn duality() {
        let b3 = boolean_algebra(3).unwrap();
        assert!(b3.dual().unwrap().is_isomorphic(&b3));
        assert!(cube_lattice(2).unwrap().dual().unwrap().is_isomorphic(&polygon_lattice(4).unwrap()));
        let c = chain(2).unwrap();
        assert!(c.dual().unwrap().is_isomorphic(&c));
        for d in 1..=3 {
            let cube = cube_lattice(d).unwrap();
            let cross = cross_polytope_lattice(d).unwrap();
            assert!(cube.dual().unwrap().is_isomorphic(&cross));
            let back = cube.dual().unwrap().dual().unwrap();
            assert!(back.is_isomorphic(&cube));
            assert_eq!(back.max_rank(), cube.max_rank());
        }
        let v = Poset::from_cover_pairs(&[("0", "a"), ("0", "b")]).unwrap();
        assert!(matches!(v.dual(), Err(Error::NotGraded(_))));
    }

    #[test]
    fn dual_f_vector_reverses_interior() {
        for p in [cube_lattice(4).unwrap(), polygon_lattice(7).unwrap(), boolean_algebra(5).unwrap()] {
            let f = p.f_vector();
            let g = p.dual().unwrap().f_vector();
            let n = f.top_index();
            for i in 0..n {
                assert_eq!(f.get(i), g.get(n - 1 - i));
            }
        }
    }

    #[test]
    fn intervals() {
        let b3 = boolean_algebra(3).unwrap();
        let atom = b3.id("{2}").unwrap();
        let top = b3.top().unwrap();
        let seg = b3.closed_interval(0, atom).unwrap();
        assert!(seg.is_isomorphic(&chain(1).unwrap()));
        assert_eq!(b3.half_open_interval(0, top).unwrap().len(), 7);
        assert!(b3.half_open_interval(atom, atom).unwrap().is_empty());
        let other = b3.id("{1}").unwrap();
        assert!(matches!(b3.closed_interval(atom, other), Err(Error::NotComparable(..))));
        let upper = b3.closed_interval(atom, top).unwrap();
        assert!(upper.is_isomorphic(&boolean_algebra(2).unwrap()));
        assert_eq!(upper.rank(upper.top().unwrap()), 2);
    }

    #[test]
    fn lower_eulerian() {
        let b3 = boolean_algebra(3).unwrap();
        let half = b3.without_top().unwrap();
        assert!(half.is_lower_eulerian());
        assert!(!half.is_graded());
        assert!(!chain(2).unwrap().is_lower_eulerian());
        assert!(Poset::empty().is_lower_eulerian());
        assert_eq!(
            chain(2).unwrap().require_eulerian(),
            Err(Error::NotEulerian { witness: Some(("0".into(), "2".into())) })
        );
    }

    #[test]
    fn flags_are_cached_and_agree_with_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut posets = vec![
            boolean_algebra(4).unwrap(),
            cube_lattice(3).unwrap(),
            cross_polytope_lattice(3).unwrap(),
            polygon_lattice(6).unwrap(),
            chain(3).unwrap(),
        ];
        posets.extend((0..40).map(|_| random_ranked_poset(&mut rng, 12, 4)));
        for p in posets {
            assert_eq!(p.cached_flags().eulerian, None);
            let e = p.is_eulerian();
            assert_eq!(p.cached_flags().eulerian, Some(e));
            assert_eq!(e, brute_eulerian(&p));
        }
    }

    #[test]
    fn json_round_trip() {
        let p = polygon_lattice(5).unwrap();
        let v = p.to_json();
        let q = Poset::from_json(&v).unwrap();
        assert_eq!(p, q);
        assert_eq!(v["elements"][0], "empty");
        assert_eq!(v["elements"].as_array().unwrap().last().unwrap(), "full");
        let bare = json!({"covers": [["0", "a"], ["a", "b"]]});
        assert_eq!(Poset::from_json(&bare).unwrap().max_rank(), 2);
        assert!(Poset::from_json(&json!({"elements": []})).is_err());
    }

    #[test]
    fn with_top_closes_half_open() {
        let b3 = boolean_algebra(3).unwrap();
        let closed = b3.without_top().unwrap().with_top("T").unwrap();
        assert!(closed.is_isomorphic(&b3));
    }
}
