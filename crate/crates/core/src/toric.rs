//! Stanley's toric `f` and `g` polynomials and the short toric polynomial
//! `st`, together with the operators `C`, `D` and the `Q_n`, `t_n` bases.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::flag::{self, FlagVector};
use crate::laurent::LaurentPoly;
use crate::nc::{Alphabet, NCPoly};
use crate::poset::Poset;

/// `f` and `g` of a half-open interval `[0, 1)` with `n = rank(1) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricPair {
    pub f: LaurentPoly,
    pub g: LaurentPoly,
    pub n: i64,
}

/// A short toric polynomial with its degree parameter `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortToric {
    pub poly: LaurentPoly,
    pub n: i64,
}

impl ShortToric {
    pub fn new(poly: LaurentPoly, n: i64) -> Self {
        Self { poly, n }
    }

    pub fn is_additively_symmetric(&self) -> bool {
        self.poly.is_add_symmetric(self.n).unwrap_or(false)
    }
}

/// `(x - 1)^k` for `k = 0..=m`
fn powers(base: &LaurentPoly, m: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::one()];
    for k in 1..=m {
        out.push(&out[k - 1] * base);
    }
    out
}

fn x_minus_one() -> LaurentPoly {
    LaurentPoly::from_int_coeffs(&[-1, 1])
}

/// `f([0, p), x)` and `g([0, p), x)` for every element `p`, by the intertwined
/// recurrence.  Requires every `[0, p]` to be Eulerian for the output to mean
/// anything, but runs on any ranked poset.
fn toric_tables(p: &Poset) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    let n = p.len();
    let top_rank = p.max_rank() as usize;
    let pw = powers(&x_minus_one(), top_rank + 1);
    let one_minus_x = LaurentPoly::from_int_coeffs(&[1, -1]);
    let mut fs = vec![LaurentPoly::one(); n];
    let mut gs = vec![LaurentPoly::one(); n];
    for v in 1..n {
        let r = p.rank(v) as usize;
        let mut by_rank = vec![LaurentPoly::zero(); r];
        for u in 0..v {
            if p.leq(u, v) {
                by_rank[p.rank(u) as usize] += &gs[u];
            }
        }
        let f: LaurentPoly = by_rank
            .iter()
            .enumerate()
            .map(|(k, s)| s * &pw[r - 1 - k])
            .sum();
        let half = ((r as i64) - 1).div_euclid(2);
        gs[v] = (&one_minus_x * &f).truncate_le(half);
        fs[v] = f;
    }
    (fs, gs)
}

/// Toric `f` and `g` of `[0, 1)` for a graded Eulerian poset `[0, 1]`.
pub fn stanley_f_g(p: &Poset) -> Result<ToricPair> {
    p.require_eulerian()?;
    let top = p.top().expect("Eulerian posets have a top");
    let (mut fs, mut gs) = toric_tables(p);
    let n = p.rank(top) as i64 - 1;
    let pair = ToricPair {
        f: fs.swap_remove(top),
        g: gs.swap_remove(top),
        n,
    };
    if n >= 0 && !pair.f.is_mult_symmetric(n)? {
        return Err(Error::NotMultSymmetric(n));
    }
    Ok(pair)
}

/// `(h_0, ..., h_n)`, the coefficients of `x^n f(1/x)`.
pub fn toric_h_vector(t: &ToricPair) -> Vec<BigInt> {
    let n = t.n.max(0);
    (0..=n)
        .map(|i| arith::to_integer(&t.f.coeff(n - i)).expect("toric f has integer coefficients"))
        .collect()
}

/// Extended toric `f(P, x) = sum_p g([0, p), x) (x - 1)^{n - rank p}` of a
/// lower Eulerian poset, `n` the length of the longest chain.
pub fn f_lower_eulerian(p: &Poset) -> Result<LaurentPoly> {
    p.require_lower_eulerian()?;
    if p.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let (_, gs) = toric_tables(p);
    let n = p.max_rank() as usize;
    let pw = powers(&x_minus_one(), n);
    Ok((0..p.len()).map(|v| &gs[v] * &pw[n - p.rank(v) as usize]).sum())
}

/// `st(P, x)` by the rank-uniform recurrence, with `n` the maximal rank and
/// `st(empty) = 1`.
pub fn st_recurrence(p: &Poset) -> ShortToric {
    if p.is_empty() {
        return ShortToric::new(LaurentPoly::one(), 0);
    }
    let len = p.len();
    let n = p.max_rank() as usize;
    let pw = powers(&LaurentPoly::inv_minus_x(), n);
    let xmi = LaurentPoly::x_minus_inv();
    // w[q] = U_{>=1}(st([0, q)) (x - 1/x)) for q above the minimum
    let mut w = vec![LaurentPoly::zero(); len];
    let combine = |upto: usize, r: usize, w: &[LaurentPoly], members: &dyn Fn(usize) -> bool| {
        let mut by_rank = vec![LaurentPoly::zero(); r + 1];
        for q in 1..upto {
            if members(q) {
                by_rank[p.rank(q) as usize] += &w[q];
            }
        }
        let mut total = pw[r].clone();
        for (k, s) in by_rank.iter().enumerate().skip(1) {
            total += &(s * &pw[r - k]);
        }
        total.truncate_ge(0)
    };
    for v in 1..len {
        let r = p.rank(v) as usize - 1;
        let st_v = combine(v, r, &w, &|q| p.leq(q, v));
        w[v] = (&st_v * &xmi).truncate_ge(1);
    }
    ShortToric::new(combine(len, n, &w, &|_| true), n as i64)
}

/// `st` of `[0, 1)` for a poset with a top, otherwise of the poset itself.
pub fn short_toric(p: &Poset) -> Result<ShortToric> {
    match p.top() {
        Some(t) if p.rank(t) >= 1 => Ok(st_recurrence(&p.without_top()?)),
        _ => Ok(st_recurrence(p)),
    }
}

/// `st = U_{>=0}(x^{-n} f(x^2))`
pub fn st_from_f(f: &LaurentPoly, n: i64) -> Result<ShortToric> {
    Ok(ShortToric::new(f.to_additive_variant(n)?, n))
}

pub fn f_from_st(t: &ShortToric) -> Result<LaurentPoly> {
    t.poly.to_multiplicative_variant(t.n)
}

/// Recovers `g` from `U_{>=1}(st (x - 1/x)) = x^{n+1} g(x^{-2})`.
pub fn g_from_st(t: &ShortToric) -> Result<LaurentPoly> {
    let u = (&t.poly * &LaurentPoly::x_minus_inv()).truncate_ge(1);
    let mut g = LaurentPoly::zero();
    for (e, c) in u.terms() {
        let diff = t.n + 1 - e;
        if diff < 0 || diff % 2 != 0 {
            return Err(Error::UnexpectedParity {
                exponent: e,
                expected_parity: (t.n + 1).rem_euclid(2),
            });
        }
        g.add_term(diff / 2, c.clone());
    }
    Ok(g)
}

/// Sign vectors of length `n` with their `S(lambda)` mask and `i_lambda`.
pub(crate) fn sign_vector_stats(n: u32) -> impl Iterator<Item = (u64, i64)> {
    (0..1u64 << n).map(move |lam| {
        let mut sum = 0i64;
        let mut s = 0u64;
        for j in 0..n {
            sum += if lam >> j & 1 == 1 { -1 } else { 1 };
            if sum > 0 {
                s |= 1 << j;
            }
        }
        (s, lam.count_ones() as i64)
    })
}

/// Fine's formula for the toric `f`:
/// `sum_S f_S sum_{S(lambda) ⊇ S} (-1)^{|S| + n - i} x^i`.
pub fn fine_f(f: &FlagVector) -> LaurentPoly {
    let n = f.n() as i64;
    let stats: Vec<(u64, i64)> = sign_vector_stats(f.n()).collect();
    let mut out = LaurentPoly::zero();
    for s in 0..=f.full_set() {
        let fs = f.get(s);
        if fs.is_zero() {
            continue;
        }
        let k = s.count_ones() as i64;
        for &(sl, i) in &stats {
            if s & !sl == 0 {
                out.add_term(i, fs * arith::sign(k + n - i));
            }
        }
    }
    out
}

/// Short toric form of Fine's formula, valid for any ranked poset with `0`.
pub fn fine_st(f: &FlagVector) -> ShortToric {
    let n = f.n() as i64;
    let stats: Vec<(u64, i64)> = sign_vector_stats(f.n()).collect();
    let mut out = LaurentPoly::zero();
    for s in 0..=f.full_set() {
        let fs = f.get(s);
        if fs.is_zero() {
            continue;
        }
        let k = s.count_ones() as i64;
        for &(sl, i) in &stats {
            if n - 2 * i >= 0 && s & !sl == 0 {
                out.add_term(n - 2 * i, fs * arith::sign(n - i + k));
            }
        }
    }
    ShortToric::new(out, n)
}

/// `C(x^m) = x^{m+1} - x^{m-1}` for `m >= 2`, `x^{m+1}` for `m = 0, 1`.
pub fn op_c(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.has_negative_exponents() {
        return Err(Error::NegativeExponentPresent);
    }
    let mut out = LaurentPoly::zero();
    for (m, c) in p.terms() {
        out.add_term(m + 1, c.clone());
        if m >= 2 {
            out.add_term(m - 1, -c);
        }
    }
    Ok(out)
}

/// `D(1) = 1`, `D(x^2) = -1`, and `D` kills every other power.
pub fn op_d(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.has_negative_exponents() {
        return Err(Error::NegativeExponentPresent);
    }
    Ok(LaurentPoly::constant(p.coeff(0) - p.coeff(2)))
}

/// Applies the letters of `word` to `1`, first letter first.
pub fn apply_cd_word(word: &[u8]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for &l in word {
        acc = match l {
            b'c' => op_c(&acc),
            _ => op_d(&acc),
        }
        .expect("operators preserve ordinary polynomials");
    }
    acc
}

/// `st` from the cd-index by substituting the operators `C`, `D`.
pub fn st_via_cd(phi: &NCPoly) -> Result<ShortToric> {
    if phi.alphabet() != Alphabet::CD {
        return Err(Error::AlphabetMismatch {
            expected: Alphabet::CD.to_string(),
            found: phi.alphabet().to_string(),
        });
    }
    let n = phi.homogeneous_degree().unwrap_or(0) as i64;
    let mut out = LaurentPoly::zero();
    for (w, c) in phi.terms() {
        out += &apply_cd_word(w.letters()).scale(c);
    }
    Ok(ShortToric::new(out, n))
}

/// `Q_n = sum_j (-1)^j (C(n-1, j) - C(n-1, j-1)) x^{n-2j}`, `Q_0 = 1`.
pub fn q_poly(n: u32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    let n = n as i64;
    LaurentPoly::from_terms((0..=n / 2).map(|j| {
        let c = arith::ballot(n - 1, j);
        (n - 2 * j, Rational::from_integer(c) * arith::sign(j))
    }))
}

/// `t_n = sum_k x^{n-2k}`; `t_{-1} = 0`.
pub fn t_poly(n: i64) -> LaurentPoly {
    if n < 0 {
        return LaurentPoly::zero();
    }
    LaurentPoly::from_terms((0..=n / 2).map(|k| (n - 2 * k, Rational::one())))
}

/// Closed form of `st` for a single cd-word `c^{k_1} d ... c^{k_r} d c^k`:
/// zero if some `k_i` is odd, else `(-1)^{sum k_i / 2} prod C_{k_i/2} Q_k`.
pub fn st_cd_word(word: &[u8]) -> LaurentPoly {
    let mut blocks = vec![0i64];
    for &l in word {
        if l == b'd' {
            blocks.push(0);
        } else {
            *blocks.last_mut().unwrap() += 1;
        }
    }
    let k = blocks.pop().unwrap();
    if blocks.iter().any(|b| b % 2 == 1) {
        return LaurentPoly::zero();
    }
    let half: i64 = blocks.iter().sum::<i64>() / 2;
    let cat: BigInt = blocks.iter().map(|b| arith::catalan(b / 2)).product();
    q_poly(k as u32).scale(&(Rational::from_integer(cat) * arith::sign(half)))
}

/// Coefficients `a_k` with `x^n = sum_k a_k Q_{n-2k}`.
pub fn x_to_q(n: u32) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    let n = n as i64;
    (0..=n / 2).map(|k| arith::binomial(n - 1 - k, k)).collect()
}

/// Coefficients `a_k` with `x^n = sum_k a_k t_{n-2k}`.
pub fn x_to_t(n: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n as usize / 2 + 1];
    out[0] = BigInt::one();
    if n >= 2 {
        out[1] = -BigInt::one();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorganVoyce {
    /// `x^{2n} = sum_k C(n-1+k, n-k) Q_{2k}`
    B,
    /// `x^{2n+1} = sum_k C(n+k, n-k) Q_{2k+1}`
    SmallB,
}

/// Morgan-Voyce coefficients indexed by `k = 0..=n`.
pub fn morgan_voyce(n: u32, kind: MorganVoyce) -> Vec<BigInt> {
    let n = n as i64;
    match kind {
        MorganVoyce::B if n == 0 => vec![BigInt::one()],
        MorganVoyce::B => (0..=n).map(|k| arith::binomial(n - 1 + k, n - k)).collect(),
        MorganVoyce::SmallB => (0..=n).map(|k| arith::binomial(n + k, n - k)).collect(),
    }
}

/// Coefficients `c_k` with `st = sum_k c_k t_{n-2k}`.
pub fn t_coordinates(t: &ShortToric) -> Vec<Rational> {
    let n = t.n;
    (0..=n.max(0) / 2)
        .map(|k| t.poly.coeff(n - 2 * k) - t.poly.coeff(n - 2 * k + 2))
        .collect()
}

/// Both sides of `st = sum c_k t_{n-2k}` and `g = sum c_k x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub st: ShortToric,
    pub g: LaurentPoly,
    /// Whether `g_from_st(st)` reproduces `g`.
    pub consistent: bool,
}

pub fn g_st_transfer(coeffs: &[BigInt], n: i64) -> Transfer {
    let mut st = LaurentPoly::zero();
    let mut g = LaurentPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let c = Rational::from_integer(c.clone());
        st += &t_poly(n - 2 * k as i64).scale(&c);
        g.add_term(k as i64, c);
    }
    let st = ShortToric::new(st, n);
    let consistent = g_from_st(&st).is_ok_and(|h| h == g);
    Transfer { st, g, consistent }
}

/// `sum_S (-1)^{|S|} f_S` over every rank of the poset.
pub fn reduced_euler_char(p: &Poset) -> Result<Rational> {
    let f = flag::flag_f_ranked(p)?;
    Ok((0..=f.full_set())
        .map(|s| f.get(s) * arith::sign(s.count_ones() as i64))
        .sum())
}
