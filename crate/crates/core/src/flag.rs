//! Flag f-, h- and L-vectors.
//!
//! A subset `S` of `[1, n]` is a `u64` mask with bit `i - 1` standing for `i`.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Flag vectors are dense over all `2^n` subsets, so `n` is capped here.
pub const MAX_FLAG_SPAN: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlagKind {
    F,
    H,
    L,
}

impl fmt::Display for FlagKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlagKind::F => "F",
            FlagKind::H => "H",
            FlagKind::L => "L",
        })
    }
}

impl std::str::FromStr for FlagKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" => Ok(FlagKind::F),
            "H" => Ok(FlagKind::H),
            "L" => Ok(FlagKind::L),
            other => Err(Error::Input(format!("unknown flag kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVector {
    n: u32,
    kind: FlagKind,
    values: Vec<Rational>,
}

impl FlagVector {
    pub fn new(n: u32, kind: FlagKind, values: Vec<Rational>) -> Result<Self> {
        check_span(n)?;
        if values.len() != 1 << n {
            return Err(Error::Input(format!(
                "flag vector over [1,{n}] needs {} values, got {}",
                1u64 << n,
                values.len()
            )));
        }
        Ok(Self { n, kind, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> FlagKind {
        self.kind
    }

    pub fn get(&self, s: u64) -> &Rational {
        &self.values[s as usize]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn full_set(&self) -> u64 {
        full_set(self.n)
    }

    fn expect(&self, kind: FlagKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                expected: kind.to_string(),
                found: self.kind.to_string(),
            })
        }
    }

    /// `{"n": n, "kind": "F", "values": {"mask": [num, den]}}`
    pub fn to_json(&self) -> Value {
        let mut values = Map::new();
        for (s, v) in self.values.iter().enumerate() {
            values.insert(s.to_string(), arith::rational_to_json(v));
        }
        let mut obj = Map::new();
        obj.insert("kind".into(), Value::from(self.kind.to_string()));
        obj.insert("n".into(), Value::from(self.n));
        obj.insert("values".into(), Value::Object(values));
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Input(format!("flag vector: {what}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing `n`"))? as u32;
        let kind: FlagKind = v["kind"].as_str().ok_or_else(|| bad("missing `kind`"))?.parse()?;
        check_span(n)?;
        let map = v["values"].as_object().ok_or_else(|| bad("missing `values`"))?;
        let mut values = vec![Rational::zero(); 1 << n];
        for (k, val) in map {
            let s: usize = k.parse().map_err(|_| bad("keys must be integer masks"))?;
            if s >= values.len() {
                return Err(bad("mask outside [1,n]"));
            }
            values[s] = arith::rational_from_json(val)?;
        }
        Self::new(n, kind, values)
    }
}

fn check_span(n: u32) -> Result<()> {
    if n > MAX_FLAG_SPAN {
        Err(Error::ParameterOutOfRange(format!(
            "flag vectors need n <= {MAX_FLAG_SPAN}, got {n}"
        )))
    } else {
        Ok(())
    }
}

pub fn full_set(n: u32) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// Elements of `S`, smallest first.
pub fn elements(s: u64) -> impl Iterator<Item = u32> {
    (0..64).filter(move |i| s >> i & 1 == 1).map(|i| i + 1)
}

pub fn mask_of(items: &[u32]) -> u64 {
    items.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

/// Maximal runs `[i, j]` of consecutive integers in `S`.
pub fn runs(s: u64) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut rest = s;
    while rest != 0 {
        let i = rest.trailing_zeros();
        let len = (rest >> i).trailing_ones();
        out.push((i + 1, i + len));
        rest &= !(full_set(len) << i);
    }
    out
}

/// `S` is a disjoint union of integer intervals of even length.
pub fn is_even_set(s: u64) -> bool {
    runs(s).iter().all(|&(i, j)| (j - i + 1) % 2 == 0)
}

/// `R ⊆ S` and `S \ R` is an even set.
pub fn evenly_contains(s: u64, r: u64) -> bool {
    r & !s == 0 && is_even_set(s & !r)
}

/// Which rank window of the poset the flag vector is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagMode {
    /// Ranks `1..=n` with `n = rank(1) - 1`, the open interior of `[0, 1]`.
    Interior,
    /// Ranks `1..=n` with `n` the maximal rank, every element counted.
    Whole,
}

/// The natural mode: the interior when a top of positive rank exists.
pub fn natural_mode(p: &Poset) -> FlagMode {
    match p.top() {
        Some(t) if p.rank(t) >= 1 => FlagMode::Interior,
        _ => FlagMode::Whole,
    }
}

/// Span `n` of the flag vector of `p` in the given mode.
pub fn span(p: &Poset, mode: FlagMode) -> u32 {
    match mode {
        FlagMode::Interior => p.max_rank().saturating_sub(1),
        FlagMode::Whole => p.max_rank(),
    }
}

/// Flag f-vector in the natural mode: for `[0, 1]` this counts chains in the
/// open interior, otherwise chains among all elements.
pub fn flag_f(p: &Poset) -> Result<FlagVector> {
    flag_f_with_mode(p, natural_mode(p))
}

/// Flag f-vector with `n` the maximal rank, as used for posets without a top.
pub fn flag_f_ranked(p: &Poset) -> Result<FlagVector> {
    flag_f_with_mode(p, FlagMode::Whole)
}

/// `f_S` counts chains `u_1 < ... < u_k` with `rank(u_j) = s_j`, where
/// `S = {s_1 < ... < s_k}`.
pub fn flag_f_with_mode(p: &Poset, mode: FlagMode) -> Result<FlagVector> {
    let n = span(p, mode);
    check_span(n)?;
    let layers: Vec<Vec<usize>> = (0..=n + 1).map(|r| p.elements_of_rank(r).collect()).collect();
    let mut values = Vec::with_capacity(1 << n);
    for s in 0..1u64 << n {
        let mut counts: Vec<(usize, u128)> = Vec::new();
        let mut first = true;
        for r in elements(s) {
            let layer = &layers[r as usize];
            counts = if first {
                layer.iter().map(|&v| (v, 1)).collect()
            } else {
                layer
                    .iter()
                    .map(|&v| {
                        let c = counts
                            .iter()
                            .filter(|&&(u, _)| p.leq(u, v))
                            .map(|&(_, c)| c)
                            .sum();
                        (v, c)
                    })
                    .collect()
            };
            first = false;
        }
        let total: u128 = if first { 1 } else { counts.iter().map(|&(_, c)| c).sum() };
        values.push(Rational::from_integer(total.into()));
    }
    FlagVector::new(n, FlagKind::F, values)
}

/// `h_S = sum_{T ⊆ S} (-1)^{|S - T|} f_T`
pub fn h_from_f(f: &FlagVector) -> Result<FlagVector> {
    f.expect(FlagKind::F)?;
    let mut v = f.values.clone();
    for i in 0..f.n {
        let b = 1usize << i;
        for s in 0..v.len() {
            if s & b != 0 {
                let lower = v[s ^ b].clone();
                v[s] -= lower;
            }
        }
    }
    FlagVector::new(f.n, FlagKind::H, v)
}

/// `f_S = sum_{T ⊆ S} h_T`
pub fn f_from_h(h: &FlagVector) -> Result<FlagVector> {
    h.expect(FlagKind::H)?;
    let mut v = h.values.clone();
    for i in 0..h.n {
        let b = 1usize << i;
        for s in 0..v.len() {
            if s & b != 0 {
                let lower = v[s ^ b].clone();
                v[s] += lower;
            }
        }
    }
    FlagVector::new(h.n, FlagKind::F, v)
}

/// Iterates over all subsets of `s`.
fn subsets(s: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(s);
    std::iter::from_fn(move || {
        let cur = next?;
        next = (cur != 0).then(|| (cur - 1) & s);
        Some(cur)
    })
}

/// `L_S = (-1)^{n - |S|} sum_{T ⊇ [1,n] - S} (-1/2)^{|T|} f_T`
pub fn l_from_f(f: &FlagVector) -> Result<FlagVector> {
    f.expect(FlagKind::F)?;
    let full = f.full_set();
    let half = arith::ratio(-1, 2);
    let powers: Vec<Rational> = (0..=f.n)
        .map(|k| num_traits::pow(half.clone(), k as usize))
        .collect();
    let values = (0..=full)
        .map(|s| {
            let comp = full & !s;
            let sum: Rational = subsets(s)
                .map(|u| {
                    let t = comp | u;
                    &powers[t.count_ones() as usize] * &f.values[t as usize]
                })
                .sum();
            sum * arith::sign((f.n - s.count_ones()) as i64)
        })
        .collect();
    FlagVector::new(f.n, FlagKind::L, values)
}

/// `f_S = 2^{|S|} sum_{T ⊆ [1,n] - S} L_T`
pub fn f_from_l(l: &FlagVector) -> Result<FlagVector> {
    l.expect(FlagKind::L)?;
    let full = l.full_set();
    let values = (0..=full)
        .map(|s| {
            let sum: Rational = subsets(full & !s).map(|t| l.values[t as usize].clone()).sum();
            sum * Rational::from_integer(num_bigint::BigInt::one() << s.count_ones())
        })
        .collect();
    FlagVector::new(l.n, FlagKind::F, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::poset::{boolean_algebra, chain, cube_lattice, polygon_lattice, random_ranked_poset};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ints(f: &FlagVector) -> Vec<Rational> {
        f.values().to_vec()
    }

    /// Oracle: enumerate every chain of the poset explicitly and record its
    /// rank set.
    fn chain_oracle(p: &Poset, lo: u32, hi: u32) -> Vec<u64> {
        let n = hi - lo + 1;
        let mut out = vec![0u64; 1 << n];
        let members: Vec<usize> = (0..p.len())
            .filter(|&i| (lo..=hi).contains(&p.rank(i)))
            .collect();
        fn grow(p: &Poset, members: &[usize], last: Option<usize>, mask: u64, lo: u32, out: &mut [u64]) {
            out[mask as usize] += 1;
            for &v in members {
                if last.is_none_or(|u| p.lt(u, v)) {
                    grow(p, members, Some(v), mask | 1 << (p.rank(v) - lo), lo, out);
                }
            }
        }
        grow(p, &members, None, 0, lo, &mut out);
        out
    }

    #[test]
    fn boolean_three() {
        let f = flag_f(&boolean_algebra(3).unwrap()).unwrap();
        assert_eq!(f.n(), 2);
        assert_eq!(ints(&f), vec![rat(1), rat(3), rat(3), rat(6)]);
        let h = h_from_f(&f).unwrap();
        assert_eq!(ints(&h), vec![rat(1), rat(2), rat(2), rat(1)]);
        let l = l_from_f(&f).unwrap();
        assert_eq!(ints(&l), vec![ratio(3, 2), rat(0), rat(0), ratio(-1, 2)]);
    }

    #[test]
    fn polygons() {
        for m in 3..9 {
            let f = flag_f(&polygon_lattice(m).unwrap()).unwrap();
            let m = m as i64;
            assert_eq!(ints(&f), vec![rat(1), rat(m), rat(m), rat(2 * m)]);
            let l = l_from_f(&f).unwrap();
            assert_eq!(ints(&l), vec![ratio(m, 2), rat(0), rat(0), ratio(-(m - 2), 2)]);
        }
    }

    #[test]
    fn chains_have_unit_flags() {
        let f = flag_f(&chain(5).unwrap()).unwrap();
        assert_eq!(f.n(), 4);
        assert!(f.values().iter().all(|v| *v == rat(1)));
    }

    #[test]
    fn chain_counts_match_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let p = random_ranked_poset(&mut rng, 12, 4);
            let f = flag_f_ranked(&p).unwrap();
            if p.max_rank() == 0 {
                continue;
            }
            let oracle = chain_oracle(&p, 1, p.max_rank());
            assert_eq!(ints(&f), oracle.iter().map(|&c| rat(c as i64)).collect::<Vec<_>>());
        }
        let c = cube_lattice(3).unwrap();
        let oracle = chain_oracle(&c, 1, 3);
        let f = flag_f(&c).unwrap();
        assert_eq!(ints(&f), oracle.iter().map(|&c| rat(c as i64)).collect::<Vec<_>>());
    }

    #[test]
    fn boolean_h_counts_permutations() {
        // h_S of the rank-r Boolean algebra counts permutations of [r] with descent set S
        for r in 1..=7u32 {
            let h = h_from_f(&flag_f(&boolean_algebra(r).unwrap()).unwrap()).unwrap();
            let total: Rational = h.values().iter().cloned().sum();
            assert_eq!(total, rat((1..=r as i64).product()));
        }
    }

    #[test]
    fn even_sets() {
        assert!(is_even_set(mask_of(&[1, 2, 5, 6])));
        assert!(!is_even_set(mask_of(&[1, 2, 3])));
        assert!(is_even_set(0));
        assert!(evenly_contains(mask_of(&[1, 2, 3, 4]), mask_of(&[3, 4])));
        assert!(!evenly_contains(mask_of(&[1, 2, 3]), mask_of(&[2, 3])));
        assert!(!evenly_contains(mask_of(&[1, 2]), mask_of(&[3])));
        assert_eq!(runs(mask_of(&[1, 2, 4, 7, 8, 9])), vec![(1, 2), (4, 4), (7, 9)]);
    }

    #[test]
    fn kind_mismatch() {
        let f = flag_f(&boolean_algebra(2).unwrap()).unwrap();
        assert_eq!(
            f_from_h(&f),
            Err(Error::KindMismatch { expected: "H".into(), found: "F".into() })
        );
        assert!(f_from_l(&f).is_err());
    }

    #[test]
    fn json_round_trip() {
        let l = l_from_f(&flag_f(&boolean_algebra(3).unwrap()).unwrap()).unwrap();
        let v = l.to_json();
        assert_eq!(v["values"]["3"], serde_json::json!([-1, 2]));
        assert_eq!(FlagVector::from_json(&v).unwrap(), l);
    }

    fn arb_flag() -> impl Strategy<Value = FlagVector> {
        (0u32..6).prop_flat_map(|n| {
            prop::collection::vec((-50i64..50, 1i64..6), 1usize << n).prop_map(move |vs| {
                FlagVector::new(n, FlagKind::F, vs.into_iter().map(|(a, b)| ratio(a, b)).collect())
                    .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn h_round_trip(f in arb_flag()) {
            let h = h_from_f(&f).unwrap();
            prop_assert_eq!(f_from_h(&h).unwrap(), f.clone());
            // direct inclusion-exclusion as oracle
            for s in 0..=f.full_set() {
                let direct: Rational = subsets(s)
                    .map(|t| f.get(t) * arith::sign((s.count_ones() - t.count_ones()) as i64))
                    .sum();
                prop_assert_eq!(h.get(s), &direct);
            }
        }

        #[test]
        fn l_round_trip(f in arb_flag()) {
            let l = l_from_f(&f).unwrap();
            prop_assert_eq!(f_from_l(&l).unwrap(), f);
        }
    }
}
