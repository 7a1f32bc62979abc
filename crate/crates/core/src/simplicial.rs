//! Simplicial and dual simplicial Eulerian posets: augmented André
//! permutations, the polynomials `Φ̌ⁿᵢ`, and the toric `h`/`g`/`st` formulas
//! of dual simplicial posets in terms of their `f`-vector.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::nc::{self, Alphabet, NCPoly, Word};
use crate::poset::{self, FVector, Poset};
use crate::toric::{self, t_poly, ShortToric};

/// Largest `n` for which André permutations of `[1, n+1]` are enumerated.
pub const MAX_ANDRE_N: u32 = 9;

/// Recursive membership test; letters are compared by their natural order.
pub fn is_augmented_andre(p: &[u32]) -> bool {
    if p.len() <= 1 {
        return true;
    }
    let (m, _) = p.iter().enumerate().min_by_key(|&(_, v)| v).unwrap();
    let max = *p.iter().max().unwrap();
    let (left, right) = (&p[..m], &p[m + 1..]);
    right.contains(&max) && is_augmented_andre(left) && is_augmented_andre(right)
}

/// Augmented André permutations of `[1, n+1]` in lexicographic order.
pub fn andre_permutations(n: u32) -> Result<Vec<Vec<u32>>> {
    if n > MAX_ANDRE_N {
        return Err(Error::ParameterOutOfRange(format!("André enumeration needs n <= {MAX_ANDRE_N}, got {n}")));
    }
    Ok((1..=n + 1)
        .permutations(n as usize + 1)
        .filter(|p| is_augmented_andre(p))
        .collect())
}

/// The cd-variation monomial: a `d` over `{i, i+1}` for each descent `i`,
/// a `c` on every other position of `[1, len-1]`.
pub fn cd_variation(p: &[u32]) -> Result<Word> {
    let len = p.len();
    let descent = |i: usize| i < len && p[i - 1] > p[i];
    let mut letters = Vec::new();
    let mut pos = 1;
    while pos < len {
        if descent(pos) {
            if pos + 1 >= len {
                return Err(Error::TrailingDescent(pos));
            }
            if descent(pos + 1) {
                return Err(Error::ConsecutiveDescents(pos));
            }
            letters.push(b'd');
            pos += 2;
        } else {
            letters.push(b'c');
            pos += 1;
        }
    }
    Ok(Word::new(letters))
}

fn check_phi_index(n: u32, i: u32) -> Result<()> {
    if n == 0 || i >= n {
        return Err(Error::ParameterOutOfRange(format!("Φ̌ needs 0 <= i < n, got n = {n}, i = {i}")));
    }
    Ok(())
}

/// `Φ̌ⁿᵢ` as the sum of cd-variations of the augmented André permutations
/// `π` of `[1, n+1]` with `π(n) = n - i`.
pub fn phi_check_enum(n: u32, i: u32) -> Result<NCPoly> {
    check_phi_index(n, i)?;
    let mut out = NCPoly::zero(Alphabet::CD);
    for p in andre_permutations(n)? {
        if p[n as usize - 1] == n - i {
            out.add_term(cd_variation(&p)?, Rational::one());
        }
    }
    Ok(out)
}

/// Memoised cd-indices of Boolean algebras and `Φ̌ⁿᵢ` by the recurrence.
#[derive(Default)]
pub struct PhiCheckTable {
    boolean: HashMap<u32, NCPoly>,
    phi: HashMap<(u32, u32), NCPoly>,
}

impl PhiCheckTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// cd-index of the Boolean algebra of rank `k >= 1`.
    pub fn boolean(&mut self, k: u32) -> Result<NCPoly> {
        if let Some(p) = self.boolean.get(&k) {
            return Ok(p.clone());
        }
        let p = nc::cd_index(&poset::boolean_algebra(k)?)?;
        self.boolean.insert(k, p.clone());
        Ok(p)
    }

    pub fn phi_check(&mut self, n: u32, i: u32) -> Result<NCPoly> {
        check_phi_index(n, i)?;
        if let Some(p) = self.phi.get(&(n, i)) {
            return Ok(p.clone());
        }
        let c = NCPoly::from_int_terms(Alphabet::CD, &[("c", 1)])?;
        let d = NCPoly::from_int_terms(Alphabet::CD, &[("d", 1)])?;
        let out = if n == 1 {
            c
        } else if i == n - 1 {
            self.boolean(n - 1)?.mul(&d)?
        } else {
            let mut acc = c.mul(&self.phi_check(n - 1, i)?)?;
            for m in 2..n {
                for j in 0..=i.min(m - 1) {
                    if i - j >= n - m {
                        continue;
                    }
                    let coef = arith::binomial(i as i64, j as i64)
                        * arith::binomial(n as i64 - i as i64 - 2, (m - 1 - j) as i64);
                    if coef.is_zero() {
                        continue;
                    }
                    let term = self.boolean(m - 1)?.mul(&d)?.mul(&self.phi_check(n - m, i - j)?)?;
                    acc = acc.add(&term.scale(&Rational::from_integer(coef)))?;
                }
            }
            acc
        };
        self.phi.insert((n, i), out.clone());
        Ok(out)
    }
}

/// `Φ̌ⁿᵢ` by the recurrence in `n`.
pub fn phi_check_rec(n: u32, i: u32) -> Result<NCPoly> {
    PhiCheckTable::new().phi_check(n, i)
}

/// `t_{n,i}(x) = Φ̌ⁿᵢ(C, D)(1)`, the contribution of `h_i` to the short toric
/// polynomial of a dual simplicial poset.  Dualising reverses cd-words.
pub fn t_ni(phi_check: &NCPoly) -> Result<ShortToric> {
    toric::st_via_cd(&phi_check.reverse())
}

/// Result of a successful decomposition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub n: u32,
    pub h: Vec<BigInt>,
    pub phi: NCPoly,
}

/// Checks `Φ_P = Σ_i h_i Φ̌ⁿᵢ` for a simplicial Eulerian poset of rank `n+1`,
/// `h` the toric `h`-vector of `[0, 1)`.
pub fn stanley_decomposition_check(p: &Poset) -> Result<Decomposition> {
    if !p.is_simplicial()? {
        return Err(Error::NotSimplicial);
    }
    let phi = nc::cd_index(p)?;
    let pair = toric::stanley_f_g(p)?;
    let h = toric::toric_h_vector(&pair);
    if pair.n < 1 {
        return Err(Error::ParameterOutOfRange("decomposition needs rank >= 2".into()));
    }
    let n = pair.n as u32;
    let mut rhs = NCPoly::zero(Alphabet::CD);
    let mut table = PhiCheckTable::new();
    for i in 0..n {
        rhs = rhs.add(&table.phi_check(n, i)?.scale(&Rational::from_integer(h[i as usize].clone())))?;
    }
    let residual = phi.sub(&rhs)?;
    if !residual.is_zero() {
        return Err(Error::DecompositionMismatch { residual: residual.to_string() });
    }
    Ok(Decomposition { n, h, phi })
}

/// `f([0, 1), x) = Σ_{i=0}^{n} f_{i-1} (x - 1)^{n-i}` for a simplicial
/// Eulerian poset of rank `n + 1` with `f`-vector `fv`.
pub fn simplicial_toric_f(fv: &FVector) -> LaurentPoly {
    let n = fv.top_index();
    let xm1 = LaurentPoly::from_int_coeffs(&[-1, 1]);
    (0..=n.max(0))
        .map(|i| xm1.pow((n - i) as u32).scale(&arith::rat(fv.get(i - 1) as i64)))
        .sum()
}

/// `h_k = Σ_{i=k}^{n} (-1)^{i-k} C(i, k) f_i`, the toric `h`-vector of
/// `(0, 1]*` for a dual simplicial poset of rank `n + 1`.
pub fn dual_h_from_f(p: &Poset) -> Result<Vec<BigInt>> {
    if !p.is_dual_simplicial()? {
        return Err(Error::NotDualSimplicial);
    }
    Ok(h_from_face_numbers(&p.f_vector()))
}

/// The `h_k` formula on raw face numbers.
pub fn h_from_face_numbers(fv: &FVector) -> Vec<BigInt> {
    let n = fv.top_index();
    (0..=n)
        .map(|k| {
            (k..=n)
                .map(|i| arith::binomial(i, k) * BigInt::from(fv.get(i)) * if (i - k) % 2 == 0 { 1 } else { -1 })
                .sum()
        })
        .collect()
}

fn check_tau_index(n: i64, i: i64, k: i64) -> Result<()> {
    if n < 1 || i < 0 || i >= n || k < 0 || k > n / 2 {
        return Err(Error::IndexOutOfRange(format!("τ({n}, {i}, {k})")));
    }
    Ok(())
}

/// Coefficient of `t_{n-2k}` in `t_{n,i}`.
pub fn tau(n: i64, i: i64, k: i64) -> Result<BigInt> {
    check_tau_index(n, i, k)?;
    let b = arith::binomial;
    Ok(if i == 0 {
        match k {
            0 => BigInt::one(),
            1 => BigInt::from(1 - n),
            _ => BigInt::zero(),
        }
    } else {
        b(n - i, k) * b(i - 1, k - 1) - b(n - i - 1, k) * b(i, k - 1)
    })
}

/// `p(n, k) = C(n, k) - C(n, k-1)`
pub fn ballot_p(n: i64, k: i64) -> BigInt {
    arith::binomial(n, k) - arith::binomial(n, k - 1)
}

/// Coefficient of `h_i (x - 1)^k` in `g`, for `i > 0`.
pub fn sigma(n: i64, i: i64, k: i64) -> Result<BigInt> {
    if n < 1 || i < 1 || i >= n || k < 0 || k > n / 2 {
        return Err(Error::IndexOutOfRange(format!("σ({n}, {i}, {k})")));
    }
    let b = arith::binomial;
    Ok(b(n - k - 1, k) * ballot_p(n - 2 * k - 1, n - i - k - 1) + b(n - k - 1, k - 1) * ballot_p(n - 2 * k, n - i - k))
}

/// `N(i, k) = C(i-1, k-1) C(i, k-1) / k`
pub fn narayana(i: i64, k: i64) -> Result<BigInt> {
    if i < 1 || k < 1 || k > i {
        return Err(Error::IndexOutOfRange(format!("N({i}, {k})")));
    }
    Ok(arith::binomial(i - 1, k - 1) * arith::binomial(i, k - 1) / BigInt::from(k))
}

/// `(n + 1 - 2i)/k · C(n-i, k-1) C(i-1, k-1)`, the coefficient of `x^k` in the
/// contribution of `h_i - h_{i-1}`.
pub fn monotone_coefficient(n: i64, i: i64, k: i64) -> Rational {
    Rational::new(
        BigInt::from(n + 1 - 2 * i) * arith::binomial(n - i, k - 1) * arith::binomial(i - 1, k - 1),
        BigInt::from(k),
    )
}

fn check_h(h: &[BigInt], n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange("dual simplicial formulas need n >= 1".into()));
    }
    if h.len() != n as usize + 1 {
        return Err(Error::Input(format!("h-vector has length {}, expected {}", h.len(), n + 1)));
    }
    let n = n as usize;
    for i in 0..=n / 2 {
        if h[i] != h[n - i] {
            return Err(Error::AsymmetricHVector {
                i,
                mirror: n - i,
                left: h[i].to_string(),
                right: h[n - i].to_string(),
            });
        }
    }
    Ok(())
}

fn int(c: &BigInt) -> Rational {
    Rational::from_integer(c.clone())
}

/// `st([0, 1))` of a dual simplicial Eulerian poset of rank `n + 1` from the
/// `h`-vector of `(0, 1]*`.
pub fn st_dual_simplicial(h: &[BigInt], n: u32) -> Result<ShortToric> {
    check_h(h, n)?;
    let n = n as i64;
    let mut st = (t_poly(n) - t_poly(n - 2).scale(&arith::rat(n - 1))).scale(&int(&h[0]));
    for i in 1..n {
        for k in 1..=n / 2 {
            let c = tau(n, i, k)? * &h[i as usize];
            st += &t_poly(n - 2 * k).scale(&int(&c));
        }
    }
    Ok(ShortToric::new(st, n))
}

/// `g([0, 1))` in the monomial basis with `τ` coefficients.
pub fn g_dual_simplicial(h: &[BigInt], n: u32) -> Result<LaurentPoly> {
    check_h(h, n)?;
    let n = n as i64;
    let mut g = LaurentPoly::from_int_coeffs(&[1, 1 - n]).scale(&int(&h[0]));
    for i in 1..n {
        for k in 1..=n / 2 {
            g.add_term(k, int(&(tau(n, i, k)? * &h[i as usize])));
        }
    }
    Ok(g)
}

/// `g([0, 1))` in terms of the differences `h_i - h_{i-1}`.
pub fn g_dual_monotone(h: &[BigInt], n: u32) -> Result<LaurentPoly> {
    check_h(h, n)?;
    let n = n as i64;
    let mut g = LaurentPoly::constant(int(&h[0]));
    for i in 1..=n / 2 {
        let diff = int(&(&h[i as usize] - &h[i as usize - 1]));
        for k in 1..=i.min(n - i) {
            g.add_term(k, monotone_coefficient(n, i, k) * &diff);
        }
    }
    Ok(g)
}

/// `g([0, 1))` in the basis `(x - 1)^k` with `σ` coefficients.
pub fn g_shifted_basis(h: &[BigInt], n: u32) -> Result<LaurentPoly> {
    check_h(h, n)?;
    let n = n as i64;
    let xm1 = LaurentPoly::from_int_coeffs(&[-1, 1]);
    let mut g = (LaurentPoly::constant(arith::rat(2 - n)) - xm1.scale(&arith::rat(n - 1))).scale(&int(&h[0]));
    for i in 1..n {
        for k in 0..=n / 2 {
            let c = sigma(n, i, k)? * &h[i as usize];
            g += &xm1.pow(k as u32).scale(&int(&c));
        }
    }
    Ok(g)
}

/// Gessel's `g` of the boundary of the `n`-cube, `Σ_k C(n-k, k) C_{n-k} (x-1)^k`.
pub fn gessel_cube_g(n: u32) -> LaurentPoly {
    let n = n as i64;
    let xm1 = LaurentPoly::from_int_coeffs(&[-1, 1]);
    (0..=n / 2)
        .map(|k| xm1.pow(k as u32).scale(&int(&(arith::binomial(n - k, k) * arith::catalan(n - k)))))
        .sum()
}

/// The same polynomial as `Σ_k C(n, k) C(2n-2k, n) / (n-k+1) (x-1)^k`.
pub fn gessel_cube_g_binomial(n: u32) -> LaurentPoly {
    let n = n as i64;
    let xm1 = LaurentPoly::from_int_coeffs(&[-1, 1]);
    (0..=n / 2)
        .map(|k| {
            let c = Rational::new(arith::binomial(n, k) * arith::binomial(2 * n - 2 * k, n), BigInt::from(n - k + 1));
            xm1.pow(k as u32).scale(&c)
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlbVerdict {
    /// `g` and `f([0, 1])` both have nonnegative coefficients.
    Holds,
    Fails(LaurentPoly),
    /// Preconditions not met; the reason is attached.
    Skipped(String),
}

/// Nonnegativity of `g([0, 1))` and of `f([0, 1], x) = x^{n+1} g(1/x)` when
/// `h_0 <= h_1 <= ... <= h_{n/2}`.
pub fn glb_nonnegativity_check(h: &[BigInt], n: u32) -> GlbVerdict {
    if let Err(e) = check_h(h, n) {
        return GlbVerdict::Skipped(e.to_string());
    }
    let half = n as usize / 2;
    if let Some(i) = (1..=half).find(|&i| h[i] < h[i - 1]) {
        return GlbVerdict::Skipped(format!("h_{} = {} < h_{} = {}", i, h[i], i - 1, h[i - 1]));
    }
    let g = match g_dual_monotone(h, n) {
        Ok(g) => g,
        Err(e) => return GlbVerdict::Skipped(e.to_string()),
    };
    let f = g.substitute_power(-1).shift(n as i64 + 1);
    if g.terms().chain(f.terms()).any(|(_, c)| c.is_negative()) {
        GlbVerdict::Fails(g)
    } else {
        GlbVerdict::Holds
    }
}
