//! Exact arithmetic: rationals, cyclotomic numbers, Poincaré polynomials.
//!
//! Character values of a finite group are sums of roots of unity, so they live
//! in cyclotomic fields `Q(zeta_N)`. We represent them in the power basis
//! `{1, zeta, ..., zeta^(phi(N)-1)}` of `Q[x]/(Phi_N(x))` with rational
//! coefficients. Reduction mod the cyclotomic polynomial gives a unique normal
//! form, which makes equality and the "is this value rational?" question exact
//! decisions. Inner products of characters must come out as nonnegative
//! integers, and everything downstream depends on that exactness.
//!
//! Poincaré polynomials carry rational Betti numbers of fixed-point spaces:
//! finitely supported nonnegative integer coefficients indexed by homological
//! degree, in the variable `t`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer =
        BigInt::from_str(n.trim()).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let denom =
        BigInt::from_str(d.trim()).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(numer, denom))
}

/// Euler totient of `n >= 1`.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

/// Exact division of integer polynomials (low degree first); the remainder
/// must vanish.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd && den[dd].is_one(), "division by non-monic polynomial");
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd].clone();
        if !c.is_zero() {
            for j in 0..=dd {
                rem[i + j] -= &c * &den[j];
            }
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

/// The `n`-th cyclotomic polynomial `Phi_n`, coefficients low degree first.
///
/// Computed by exact division of `x^n - 1` by all lower `Phi_d` for `d | n`,
/// working up through the divisors of `n`. Results are cached process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut known: BTreeMap<u64, Arc<Vec<BigInt>>> = BTreeMap::new();
    for d in divisors(n) {
        if let Some(hit) = cache.lock().unwrap().get(&d) {
            known.insert(d, hit.clone());
            continue;
        }
        // x^d - 1
        let mut f = vec![BigInt::zero(); d as usize + 1];
        f[0] = -BigInt::one();
        f[d as usize] = BigInt::one();
        for (e, phi_e) in &known {
            if d % e == 0 && *e < d {
                f = poly_div_exact(&f, phi_e);
            }
        }
        let phi_d = Arc::new(f);
        cache.lock().unwrap().insert(d, phi_d.clone());
        known.insert(d, phi_d);
    }
    known[&n].clone()
}

/// Element of the `N`-th cyclotomic field in the power basis of
/// `Q[x]/(Phi_N)`.
///
/// The canonical form is unique once reduced mod `Phi_N`; a value that turns
/// out to be rational is stored at conductor 1 so that mixed-conductor
/// arithmetic stays cheap. Values are immutable after construction.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    conductor: u64,
    /// Coordinates in `{zeta^0, ..., zeta^(phi(N)-1)}`, length `phi(N)`.
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    /// Long division by the monic `Phi_N`, padded to length `phi(N)`.
    fn reduce_vec(conductor: u64, mut raw: Vec<Rational>) -> Vec<Rational> {
        let phi = euler_phi(conductor) as usize;
        let modulus = cyclotomic_polynomial(conductor);
        while raw.len() > phi {
            let c = raw.pop().unwrap();
            if !c.is_zero() {
                let top = raw.len() - phi;
                for j in 0..phi {
                    let adj = &c * Rational::from_integer(modulus[j].clone());
                    raw[top + j] -= adj;
                }
            }
        }
        raw.resize(phi, Rational::zero());
        raw
    }

    fn reduced(conductor: u64, raw: Vec<Rational>) -> Self {
        let coeffs = Self::reduce_vec(conductor, raw);
        if conductor > 1 && coeffs[1..].iter().all(Zero::is_zero) {
            CyclotomicNumber { conductor: 1, coeffs: vec![coeffs[0].clone()] }
        } else {
            CyclotomicNumber { conductor, coeffs }
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        CyclotomicNumber { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// The root of unity `zeta_n^k`, stored at its true order
    /// (`zeta_n^k = zeta_{n/g}^{k/g}` for `g = gcd(k mod n, n)`).
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let e = k.rem_euclid(n as i64) as u64;
        let g = e.gcd(&n);
        let (n, e) = (n / g, (e / g) as usize);
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::reduced(n, raw)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Returns the rational value iff all higher basis coefficients vanish.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Exact integer value, if the number is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    /// Coordinates at conductor `m` via `zeta_n -> zeta_m^(m/n)`, always of
    /// length `phi(m)` (no normal-form collapse, so vectors stay aligned).
    fn lift_coeffs(&self, m: u64) -> Vec<Rational> {
        assert!(m % self.conductor == 0, "conductor {} does not divide {}", self.conductor, m);
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let stride = (m / self.conductor) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * stride] = c.clone();
            }
        }
        Self::reduce_vec(m, raw)
    }

    /// Re-express at conductor `m`; `n | m` required.
    pub fn lift(&self, m: u64) -> Self {
        Self::reduced(m, self.lift_coeffs(m))
    }

    fn common(&self, other: &Self) -> (Vec<Rational>, Vec<Rational>, u64) {
        let m = self.conductor.lcm(&other.conductor);
        (self.lift_coeffs(m), other.lift_coeffs(m), m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, m) = self.common(other);
        let coeffs = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
        Self::reduced(m, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, m) = self.common(other);
        let mut raw = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Self::reduced(m, raw)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex conjugation `zeta -> zeta^(-1)`; an involution fixing rationals.
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor as usize;
        let mut raw = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(n - i) % n] += c;
            }
        }
        Self::reduced(self.conductor, raw)
    }

    /// Deterministic total order used for stable irreducible labels; not a
    /// field order.
    pub fn compare(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.common(other);
        a.cmp(&b)
    }

    /// Encoding `a0+a1*z^1+...@N` used by the character-table JSON format.
    pub fn encode(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(sign);
            }
            if i == 0 {
                out.push_str(&fmt_rational(&mag));
            } else {
                out.push_str(&format!("{}*z^{}", fmt_rational(&mag), i));
            }
        }
        if first {
            out.push('0');
        }
        format!("{}@{}", out, self.conductor)
    }

    /// Parse the `encode` format; conductor defaults to 1 when `@N` is absent.
    pub fn decode(text: &str) -> Result<Self> {
        let (body, conductor) = match text.rsplit_once('@') {
            Some((b, n)) => {
                let n: u64 = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad conductor in `{text}`")))?;
                if n == 0 {
                    return Err(Error::Parse(format!("zero conductor in `{text}`")));
                }
                (b, n)
            }
            None => (text, 1),
        };
        let phi = euler_phi(conductor) as usize;
        let mut raw = vec![Rational::zero(); phi.max(1)];
        // split on top-level +/- while keeping signs
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in body.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(std::mem::take(&mut cur));
                if ch == '-' {
                    cur.push('-');
                }
            } else {
                cur.push(ch);
            }
        }
        terms.push(cur);
        for term in terms.iter().map(|t| t.trim()).filter(|t| !t.is_empty()) {
            let (coeff_str, exp) = match term.split_once("*z^") {
                Some((c, e)) => {
                    let e: usize = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?;
                    (c, e)
                }
                None => {
                    if let Some(e) = term.strip_prefix("z^") {
                        let e: usize = e
                            .trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?;
                        ("1", e)
                    } else if let Some(e) = term.strip_prefix("-z^") {
                        let e: usize = e
                            .trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?;
                        ("-1", e)
                    } else {
                        (term, 0)
                    }
                }
            };
            let coeff = parse_rational(coeff_str)?;
            if exp >= raw.len() {
                raw.resize(exp + 1, Rational::zero());
            }
            raw[exp] += coeff;
        }
        Ok(Self::reduced(conductor, raw))
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.common(other);
        a == b
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

/// Finitely supported polynomial in `t` with nonnegative integer coefficients,
/// indexed by homological degree. Evaluation at `t = 1` gives total rank.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PoincarePolynomial {
    /// `coeffs[d]` is the Betti number in degree `d`; no trailing zeros.
    coeffs: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn zero() -> Self {
        PoincarePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// The single term `t^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = 1;
        PoincarePolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        let mut p = PoincarePolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PoincarePolynomial { coeffs }
    }

    /// Multiply by `t^k` (homology shift).
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        PoincarePolynomial { coeffs }
    }

    /// Total rank: evaluation at `t = 1`.
    pub fn total_rank(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// True when every nonzero coefficient sits in an even degree.
    pub fn even_degrees_only(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(d, c)| *c == 0 || d % 2 == 0)
    }

    /// Degree/coefficient pairs of the nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0).map(|(d, c)| (d, *c))
    }

    pub fn to_map(&self) -> BTreeMap<usize, u64> {
        self.terms().collect()
    }

    pub fn from_map(map: &BTreeMap<usize, u64>) -> Self {
        let mut p = Self::zero();
        for (d, c) in map {
            if *c > 0 {
                let mut term = Self::monomial(*d);
                term.coeffs[*d] = *c;
                p.add_assign(&term);
            }
        }
        p
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for PoincarePolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_map().serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for PoincarePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<usize, u64>::deserialize(deserializer)?;
        Ok(Self::from_map(&map))
    }
}

/// Gaussian binomial `[N choose m]` in `q = t^2`: the Poincaré polynomial of
/// the Grassmannian `Gr_m(C^N)`. Coefficients are symmetric and evaluation at
/// `t = 1` gives `binomial(N, m)`.
pub fn q_binomial(n: usize, m: usize) -> Result<PoincarePolynomial> {
    if m > n {
        return Err(Error::Domain(format!("q_binomial({n}, {m}): m > N")));
    }
    // q-Pascal: [n m] = [n-1 m-1] + q^m [n-1 m], computed in q-degrees.
    let mut row: Vec<Vec<u64>> = vec![vec![1]];
    for _ in 1..=n {
        let prev = row;
        let cols = prev.len() + 1;
        let mut next: Vec<Vec<u64>> = Vec::with_capacity(cols);
        for k in 0..cols {
            let mut acc: Vec<u64> = Vec::new();
            if k > 0 {
                acc = prev[k - 1].clone();
            }
            if k < prev.len() {
                if acc.len() < prev[k].len() + k {
                    acc.resize(prev[k].len() + k, 0);
                }
                for (i, c) in prev[k].iter().enumerate() {
                    acc[i + k] += c;
                }
            }
            next.push(acc);
        }
        row = next;
    }
    let q_coeffs = &row[m];
    let mut coeffs = vec![0u64; q_coeffs.len() * 2 - 1];
    for (i, c) in q_coeffs.iter().enumerate() {
        coeffs[2 * i] = *c;
    }
    Ok(PoincarePolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn zeta(n: u64, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        let as_i64 = |v: &Arc<Vec<BigInt>>| v.iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn square_of_i_is_minus_one() {
        // zeta_4^2 = -1 by Phi_4 = x^2 + 1
        let i = zeta(4, 1);
        assert_eq!(i.mul(&i), CyclotomicNumber::from_integer(-1));
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let x = zeta(12, 5).add(&CyclotomicNumber::from_rational(ratio(3, 2)));
        assert_eq!(x.mul(&CyclotomicNumber::one()), x);
    }

    #[test]
    fn cube_roots_multiply_to_one() {
        assert_eq!(zeta(3, 1).mul(&zeta(3, 2)), CyclotomicNumber::one());
    }

    #[test]
    fn rationality_detection() {
        // 1 + zeta_3 + zeta_3^2 = 0, so zeta_3 + zeta_3^2 = -1
        let s = zeta(3, 1).add(&zeta(3, 2));
        assert_eq!(s.as_rational(), Some(rat(-1)));
        assert_eq!(zeta(5, 1).as_rational(), None);
        let r = CyclotomicNumber::from_rational(ratio(7, 2));
        assert_eq!(r.as_rational(), Some(ratio(7, 2)));
    }

    #[test]
    fn conjugation_is_involution_fixing_rationals() {
        let x = zeta(7, 3).add(&zeta(7, 5).scale(&ratio(2, 3)));
        assert_eq!(x.conj().conj(), x);
        let r = CyclotomicNumber::from_rational(ratio(-5, 4));
        assert_eq!(r.conj(), r);
        // zeta * conj(zeta) = 1 for a root of unity
        assert_eq!(zeta(12, 1).mul(&zeta(12, 1).conj()), CyclotomicNumber::one());
    }

    #[test]
    fn lifting_preserves_value() {
        // zeta_3 at conductor 12 equals zeta_12^4
        assert_eq!(zeta(3, 1).lift(12), zeta(12, 4));
        assert_eq!(zeta(3, 1), zeta(12, 4));
    }

    #[test]
    fn encode_decode_round_trip() {
        let x = zeta(12, 5).scale(&ratio(-3, 4)).add(&CyclotomicNumber::from_rational(ratio(1, 2)));
        let text = x.encode();
        assert_eq!(CyclotomicNumber::decode(&text).unwrap(), x);
        assert_eq!(CyclotomicNumber::decode("7/2").unwrap().as_rational(), Some(ratio(7, 2)));
        assert_eq!(CyclotomicNumber::decode("-1-1*z^1@3").unwrap(), zeta(3, 2));
    }

    #[test]
    fn q_binomial_small_cases() {
        // Betti numbers of CP^2
        assert_eq!(q_binomial(3, 1).unwrap().to_map(), BTreeMap::from([(0, 1), (2, 1), (4, 1)]));
        assert_eq!(q_binomial(5, 0).unwrap(), PoincarePolynomial::one());
        assert!(q_binomial(3, 4).is_err());
    }

    #[test]
    fn q_binomial_gr_2_4_from_schubert_enumeration() {
        // Independent oracle: enumerate Schubert symbols of Gr_2(C^4) and
        // histogram their cell dimensions |sigma| = sum(sigma_i - i).
        let mut hist = BTreeMap::new();
        for a in 1..=4usize {
            for b in (a + 1)..=4 {
                let dim = (a - 1) + (b - 2);
                *hist.entry(2 * dim).or_insert(0u64) += 1;
            }
        }
        assert_eq!(hist, BTreeMap::from([(0, 1), (2, 1), (4, 2), (6, 1), (8, 1)]));
        assert_eq!(q_binomial(4, 2).unwrap().to_map(), hist);
    }

    #[test]
    fn q_binomial_symmetry_and_counting_up_to_8() {
        fn binom(n: usize, m: usize) -> u64 {
            let mut r = 1u64;
            for i in 0..m {
                r = r * (n - i) as u64 / (i + 1) as u64;
            }
            r
        }
        for n in 0..=8usize {
            for m in 0..=n {
                let p = q_binomial(n, m).unwrap();
                assert_eq!(p, q_binomial(n, n - m).unwrap());
                assert_eq!(p.total_rank(), binom(n, m));
                assert!(p.even_degrees_only());
                // coefficients count Schubert symbols by dimension
                let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
                let mut sym: Vec<usize> = (1..=m).collect();
                loop {
                    let dim: usize = sym.iter().enumerate().map(|(i, s)| s - i - 1).sum();
                    *hist.entry(2 * dim).or_insert(0) += 1;
                    // next lexicographic symbol
                    let mut i = m;
                    loop {
                        if i == 0 {
                            break;
                        }
                        i -= 1;
                        if sym[i] < n - (m - 1 - i) {
                            sym[i] += 1;
                            for j in i + 1..m {
                                sym[j] = sym[j - 1] + 1;
                            }
                            break;
                        }
                        if i == 0 {
                            sym.clear();
                            break;
                        }
                    }
                    if sym.is_empty() || m == 0 {
                        break;
                    }
                }
                if m == 0 {
                    hist.insert(0, 1);
                }
                assert_eq!(p.to_map(), hist, "histogram mismatch at ({n},{m})");
            }
        }
    }

    #[test]
    fn poincare_display() {
        let p = PoincarePolynomial::from_coeffs(vec![1, 0, 1, 0, 2]);
        assert_eq!(p.to_string(), "1 + t^2 + 2t^4");
        assert_eq!(PoincarePolynomial::zero().to_string(), "0");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        // conductors in the divisor lattice of 24, so every lcm stays <= 24
        fn arb_cyclotomic() -> impl Strategy<Value = CyclotomicNumber> {
            let conductors = proptest::sample::select(vec![1u64, 2, 3, 4, 6, 8, 12, 24]);
            (conductors, proptest::collection::vec((-4i64..=4, 1i64..=3), 1..4)).prop_map(
                |(n, terms)| {
                    let mut acc = CyclotomicNumber::zero();
                    for (num, den) in terms {
                        let k = (num.unsigned_abs() % n) as i64;
                        acc = acc.add(&CyclotomicNumber::root_of_unity(n, k).scale(&ratio(num, den)));
                    }
                    acc
                },
            )
        }

        proptest! {
            #[test]
            fn ring_axioms_hold_at_small_conductors(
                a in arb_cyclotomic(), b in arb_cyclotomic(), c in arb_cyclotomic()
            ) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                prop_assert_eq!(a.sub(&a), CyclotomicNumber::zero());
            }

            #[test]
            fn conjugation_distributes(a in arb_cyclotomic(), b in arb_cyclotomic()) {
                prop_assert_eq!(a.conj().conj(), a.clone());
                prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
                prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
            }
        }
    }
}
