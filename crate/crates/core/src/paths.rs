//! Brute-force lattice-path enumerators.
//!
//! A sign vector `lambda ∈ {-1, 1}^n` is the path from `(0, 0)` whose `i`-th
//! step is `(1, lambda_i)`.  Every enumerator here walks the full `2^n` space
//! without pruning; they exist to check the closed forms, not to be fast.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::flag::{self, runs};
use crate::laurent::LaurentPoly;
use crate::toric::q_poly;

/// Longest sign vector the enumerators accept.
pub const MAX_PATH_LENGTH: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    entries: Vec<i8>,
}

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::Input("sign vector entries must be +1 or -1".into()));
        }
        Ok(Self { entries })
    }

    /// Bit `j` of `code` set means `lambda_{j+1} = -1`.
    pub fn from_code(n: usize, code: u64) -> Self {
        let entries = (0..n).map(|j| if code >> j & 1 == 1 { -1 } else { 1 }).collect();
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// `lambda_1 + ... + lambda_i` for `i = 1..=n`.
    pub fn prefix_sums(&self) -> Vec<i64> {
        self.entries
            .iter()
            .scan(0i64, |acc, &e| {
                *acc += e as i64;
                Some(*acc)
            })
            .collect()
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().map(|&e| e as i64).sum()
    }

    /// `S(lambda) = {s : lambda_1 + ... + lambda_s > 0}`
    pub fn s_set(&self) -> u64 {
        self.positions(|h| h > 0)
    }

    /// `R(lambda) = {i : lambda_1 + ... + lambda_i = 0}`
    pub fn r_set(&self) -> u64 {
        self.positions(|h| h == 0)
    }

    /// Number of `-1` entries.
    pub fn i_lambda(&self) -> i64 {
        self.entries.iter().filter(|&&e| e == -1).count() as i64
    }

    pub fn weakly_above(&self) -> bool {
        self.prefix_sums().iter().all(|&h| h >= 0)
    }

    pub fn strictly_above(&self) -> bool {
        self.prefix_sums().iter().all(|&h| h > 0)
    }

    fn positions(&self, pred: impl Fn(i64) -> bool) -> u64 {
        self.prefix_sums()
            .iter()
            .enumerate()
            .filter(|&(_, &h)| pred(h))
            .fold(0, |m, (i, _)| m | 1 << i)
    }
}

/// All `2^n` sign vectors of length `n`.
pub fn sign_vectors(n: usize) -> Result<impl Iterator<Item = SignVector>> {
    if n > MAX_PATH_LENGTH {
        return Err(Error::OracleTooLarge(n));
    }
    Ok((0..1u64 << n).map(move |code| SignVector::from_code(n, code)))
}

/// `R ∪ (R - 1)`
fn r_cover(r: u64) -> u64 {
    r | r >> 1
}

/// `x^{ups - downs}`, negated once per up step if `neg_up` and once per down
/// step if `neg_down`.
fn step_weight(lam: &SignVector, neg_up: bool, neg_down: bool) -> LaurentPoly {
    let downs = lam.i_lambda();
    let ups = lam.len() as i64 - downs;
    let flips = if neg_up { ups } else { 0 } + if neg_down { downs } else { 0 };
    LaurentPoly::monomial(ups - downs, arith::sign(flips))
}

/// Total weight of all `lambda` with nonnegative endpoint and `S` evenly
/// containing `R ∪ (R - 1)`: `1/x` per `-1`, `-x` per `+1`, and `-1` per
/// element of `S(lambda) - S`.
pub fn st_ce_all(s: u64, n: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for lam in sign_vectors(n)? {
        if lam.total() < 0 || !flag::evenly_contains(s, r_cover(lam.r_set())) {
            continue;
        }
        let extra = (lam.s_set() & !s).count_ones() as i64;
        out += &step_weight(&lam, true, false).scale(&arith::sign(extra));
    }
    Ok(out)
}

/// The reflected form: paths weakly above the axis, `-1/x` per `-1`, `x` per
/// `+1`, and a factor `2` per element of `R(lambda)`.
pub fn st_ce_reflected(s: u64, n: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for lam in sign_vectors(n)? {
        let r = lam.r_set();
        if !lam.weakly_above() || !flag::evenly_contains(s, r_cover(r)) {
            continue;
        }
        let two = Rational::from_integer(BigInt::one() << r.count_ones());
        out += &step_weight(&lam, false, true).scale(&two);
    }
    Ok(out)
}

/// Positions `{i, i+1}` covered by each `d` of a cd-word, as a mask, and the
/// degree of the word.
pub fn d_positions(word: &[u8]) -> (u64, usize) {
    let mut mask = 0u64;
    let mut pos = 0usize;
    for &l in word {
        if l == b'd' {
            mask |= 0b11 << pos;
            pos += 2;
        } else {
            pos += 1;
        }
    }
    (mask, pos)
}

/// Path model of `st(w, x)` for a cd-word: weakly-above paths whose set
/// `R ∪ (R - 1)` is exactly the set of positions covered by `d`, weighted
/// `-1/x` per `-1`, `x` per `+1`, `-1` per element of `R(lambda)`.
pub fn st_cd_word_paths(word: &[u8]) -> Result<LaurentPoly> {
    let (covered, n) = d_positions(word);
    let mut out = LaurentPoly::zero();
    for lam in sign_vectors(n)? {
        let r = lam.r_set();
        if !lam.weakly_above() || r_cover(r) != covered {
            continue;
        }
        let sign = arith::sign(r.count_ones() as i64);
        out += &step_weight(&lam, false, true).scale(&sign);
    }
    Ok(out)
}

/// Total weight of the paths of length `n` strictly above the axis, with
/// `x` per up step and `-1/x` per down step.
pub fn q_poly_paths(n: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for lam in sign_vectors(n)? {
        if lam.strictly_above() {
            out += &step_weight(&lam, false, true);
        }
    }
    Ok(out)
}

/// Paths of horizontal length `n` with up steps `(1, 1)` of weight `x`, down
/// steps `(1, -1)` of weight `-1/x` and long steps `(2, 0)` of weight `1`,
/// staying strictly above the axis after the start.
pub fn x_to_q_paths(n: usize) -> Result<LaurentPoly> {
    if n > MAX_PATH_LENGTH {
        return Err(Error::OracleTooLarge(n));
    }
    fn walk(left: usize, height: i64, weight: &LaurentPoly, out: &mut LaurentPoly) {
        if left == 0 {
            *out += weight;
            return;
        }
        walk(left - 1, height + 1, &(weight * &LaurentPoly::x()), out);
        if height > 1 {
            let down = LaurentPoly::monomial(-1, arith::rat(-1));
            walk(left - 1, height - 1, &(weight * &down), out);
        }
        if left >= 2 && height > 0 {
            walk(left - 2, height, weight, out);
        }
    }
    let mut out = LaurentPoly::zero();
    walk(n, 0, &LaurentPoly::one(), &mut out);
    Ok(out)
}

/// The unique sparse interval system of `S`: its maximal runs.
pub fn sparse_intervals(s: u64) -> Vec<(u32, u32)> {
    runs(s)
}

/// `st_h(S, x)`: paths with nonnegative endpoint and `S(lambda) = S`, each
/// contributing `x^{n - 2 i} (-1)^{|S| + n - i}`.
pub fn st_h_bruteforce(s: u64, n: usize) -> Result<LaurentPoly> {
    let k = s.count_ones() as i64;
    let mut out = LaurentPoly::zero();
    for lam in sign_vectors(n)? {
        if lam.total() >= 0 && lam.s_set() == s {
            let i = lam.i_lambda();
            out.add_term(n as i64 - 2 * i, arith::sign(k + n as i64 - i));
        }
    }
    Ok(out)
}

/// [`st_h_bruteforce`] for every `S ⊆ [1, n]` in one pass, indexed by mask.
pub fn st_h_bruteforce_all(n: usize) -> Result<Vec<LaurentPoly>> {
    let mut out = vec![LaurentPoly::zero(); 1 << n];
    for lam in sign_vectors(n)? {
        if lam.total() >= 0 {
            let s = lam.s_set();
            let i = lam.i_lambda();
            out[s as usize].add_term(n as i64 - 2 * i, arith::sign(s.count_ones() as i64 + n as i64 - i));
        }
    }
    Ok(out)
}

/// Same sum with the step weights read as `x` per `-1`, `-1/x` per `+1` and
/// `-1` per element of `S(lambda)`; the image of [`st_h_bruteforce`] under
/// `x -> 1/x`.
pub fn st_h_bruteforce_prose(s: u64, n: usize) -> Result<LaurentPoly> {
    let k = s.count_ones() as i64;
    let mut out = LaurentPoly::zero();
    for lam in sign_vectors(n)? {
        if lam.total() >= 0 && lam.s_set() == s {
            let i = lam.i_lambda();
            let up = n as i64 - i;
            out.add_term(i - up, arith::sign(up + k));
        }
    }
    Ok(out)
}

/// `C_{m/2}` when `m` is a nonnegative even integer, else zero.
fn catalan_half(m: i64) -> BigInt {
    if m < 0 || m % 2 != 0 {
        BigInt::ZERO
    } else {
        arith::catalan(m / 2)
    }
}

/// Closed form of `st_h(S, x)` from the sparse interval system
/// `{[i_1, j_1], ..., [i_r, j_r]}` of `S`.  Each maximal run of `S` is a
/// Dyck-like excursion above the axis, each gap between runs is a first
/// return to the axis; `j_0 = -1`.
pub fn st_h_closed(s: u64, n: usize) -> LaurentPoly {
    let n = n as i64;
    let iv: Vec<(i64, i64)> = sparse_intervals(s).iter().map(|&(i, j)| (i as i64, j as i64)).collect();
    let r = iv.len() as i64;
    let j_last = iv.last().map_or(-1, |&(_, j)| j);
    let mut prod = BigInt::one();
    let mut prev_j = -1;
    for (k, &(i, j)) in iv.iter().enumerate() {
        prod *= catalan_half(i - prev_j - 2);
        if (k as i64) < r - 1 || j_last < n {
            prod *= catalan_half(j - i);
        }
        prev_j = j;
    }
    if j_last < n {
        if n % 2 != 0 {
            return LaurentPoly::zero();
        }
        prod *= catalan_half(n - j_last - 1);
        LaurentPoly::constant(Rational::from_integer(prod) * arith::sign(r + n / 2))
    } else {
        let i_r = iv[iv.len() - 1].0;
        if i_r % 2 == 0 {
            return LaurentPoly::zero();
        }
        let sign = arith::sign(r - 1 + (i_r - 1) / 2);
        q_poly((n - i_r + 1) as u32).scale(&(Rational::from_integer(prod) * sign))
    }
}

/// The closed form with the Catalan indices `C_{(i_k - j_{k-1})/2}`,
/// `C_{(n - j_r)/2}`, sign `(-1)^{r + (i_r - 1)/2}` and `j_0 = 0` taken
/// literally; a half-integer index gives zero.
pub fn st_h_closed_as_printed(s: u64, n: usize) -> LaurentPoly {
    let n = n as i64;
    let iv: Vec<(i64, i64)> = sparse_intervals(s).iter().map(|&(i, j)| (i as i64, j as i64)).collect();
    let r = iv.len() as i64;
    let j_last = iv.last().map_or(0, |&(_, j)| j);
    let mut prod = BigInt::one();
    let mut prev_j = 0;
    for (k, &(i, j)) in iv.iter().enumerate() {
        prod *= catalan_half(i - prev_j);
        if (k as i64) < r - 1 || j_last < n {
            prod *= catalan_half(j - i);
        }
        prev_j = j;
    }
    if iv.is_empty() || j_last < n {
        if n % 2 != 0 {
            return LaurentPoly::zero();
        }
        prod *= catalan_half(n - j_last);
        LaurentPoly::constant(Rational::from_integer(prod) * arith::sign(r + n / 2))
    } else {
        let i_r = iv[iv.len() - 1].0;
        if i_r % 2 == 0 {
            return LaurentPoly::zero();
        }
        let sign = arith::sign(r + (i_r - 1) / 2);
        q_poly((n - i_r + 1) as u32).scale(&(Rational::from_integer(prod) * sign))
    }
}

/// Narayana oracle: Dyck paths of semilength `i` with exactly `k` peaks.
pub fn narayana_paths(i: usize, k: usize) -> Result<u64> {
    let mut count = 0;
    for lam in sign_vectors(2 * i)? {
        if lam.total() == 0 && lam.weakly_above() {
            let e = lam.entries();
            let peaks = e.windows(2).filter(|w| w[0] == 1 && w[1] == -1).count();
            if peaks == k {
                count += 1;
            }
        }
    }
    Ok(count)
}
