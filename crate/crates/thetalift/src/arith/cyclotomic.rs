//! Exact arithmetic in cyclotomic fields Q(zeta_M).
//!
//! Elements are stored on the canonical power basis
//! `{e(k/M) : 0 <= k < phi(M)}` obtained by reducing modulo the M-th
//! cyclotomic polynomial, so equality is decidable without floating point.
//! Moduli are small throughout (lcm(8, 2N) for lattices of level N), so the
//! dense representation is cheap.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly;
use super::real::{Cplx, Real};
use super::QQ;

/// Precomputed data for a fixed modulus M: the degree phi(M) and the
/// expansions of `x^j mod Phi_M(x)` for every exponent that can appear
/// during construction or multiplication.
struct CycModulus {
    m: u64,
    phi: usize,
    /// rows[j - phi] = coefficients of x^(j) reduced, for phi <= j <= max_pow.
    rows: Vec<Vec<QQ>>,
}

impl CycModulus {
    fn reduce_power(&self, j: usize) -> Vec<QQ> {
        assert!(j >= self.phi && j - self.phi < self.rows.len());
        self.rows[j - self.phi].clone()
    }
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer cyclotomic polynomial Phi_M, ascending coefficients.
fn cyclotomic_polynomial(m: u64, cache: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    let result = if m == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        // (x^m - 1) / prod_{d | m, d < m} Phi_d
        let mut num = vec![BigInt::zero(); m as usize + 1];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::one();
        for d in 1..m {
            if m % d == 0 {
                let phi_d = cyclotomic_polynomial(d, cache);
                num = int_poly_div_exact(&num, &phi_d);
            }
        }
        num
    };
    cache.insert(m, result.clone());
    result
}

fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = &r[dr] / &b[db];
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = &b[i] * &c;
            r[dr - db + i] -= t;
        }
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    assert!(r.is_empty(), "non-exact cyclotomic division");
    q
}

fn modulus_data(m: u64) -> Arc<CycModulus> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycModulus>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(d) = guard.get(&m) {
        return d.clone();
    }
    let phi = euler_phi(m) as usize;
    let mut poly_cache = HashMap::new();
    let phim = cyclotomic_polynomial(m, &mut poly_cache);
    let phim_q: Vec<QQ> = phim.iter().map(|c| QQ::from_integer(c.clone())).collect();
    // x^phi = x^phi - Phi_M(x) (monic), then extend by multiplying by x.
    let max_pow = (2 * phi).max(m as usize).max(phi + 1);
    let mut rows: Vec<Vec<QQ>> = Vec::new();
    let mut cur: Vec<QQ> = (0..phi).map(|i| -phim_q[i].clone()).collect();
    rows.push(cur.clone());
    for _ in (phi + 1)..=max_pow {
        // multiply by x: shift, then reduce the overflow coefficient
        let overflow = cur[phi - 1].clone();
        let mut next = vec![QQ::zero(); phi];
        for i in 1..phi {
            next[i] = cur[i - 1].clone();
        }
        if !overflow.is_zero() {
            for (i, r0) in rows[0].iter().enumerate() {
                next[i] += r0 * &overflow;
            }
        }
        rows.push(next.clone());
        cur = next;
    }
    let data = Arc::new(CycModulus { m, phi, rows });
    guard.insert(m, data.clone());
    data
}

/// An element of Q(zeta_M) in the canonical reduced basis.
#[derive(Clone)]
pub struct Cyclotomic {
    modulus: u64,
    /// Length phi(M); coeffs[k] multiplies e(k/M).
    coeffs: Vec<QQ>,
}

impl Cyclotomic {
    pub fn zero(modulus: u64) -> Self {
        let d = modulus_data(modulus);
        Cyclotomic {
            modulus,
            coeffs: vec![QQ::zero(); d.phi],
        }
    }

    pub fn one(modulus: u64) -> Self {
        Self::from_rational(modulus, QQ::one())
    }

    pub fn from_rational(modulus: u64, c: QQ) -> Self {
        let mut z = Self::zero(modulus);
        z.coeffs[0] = c;
        z
    }

    /// The root of unity e(k/M).
    pub fn root(modulus: u64, k: i64) -> Self {
        let d = modulus_data(modulus);
        let kk = k.rem_euclid(modulus as i64) as usize;
        let mut z = Self::zero(modulus);
        if kk < d.phi {
            z.coeffs[kk] = QQ::one();
        } else {
            z.coeffs = d.reduce_power(kk);
        }
        z
    }

    /// e(r) for rational r, in the smallest natural modulus (the denominator).
    pub fn e(r: &QQ) -> Self {
        let den = r.denom().to_u64().expect("denominator too large");
        let num = (r.numer().mod_floor(r.denom())).to_i64().unwrap();
        Self::root(den, num)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Rational content when the element lies in Q.
    pub fn as_rational(&self) -> Option<QQ> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (a, b) = promote_pair(self, rhs);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic {
            modulus: a.modulus,
            coeffs,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &QQ) -> Self {
        Cyclotomic {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = promote_pair(self, rhs);
        let d = modulus_data(a.modulus);
        let phi = d.phi;
        let mut prod = vec![QQ::zero(); 2 * phi.max(1)];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    prod[i + j] += ca * cb;
                }
            }
        }
        let mut out = vec![QQ::zero(); phi];
        for (j, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < phi {
                out[j] += c;
            } else {
                for (i, r) in d.reduce_power(j).iter().enumerate() {
                    out[i] += r * &c;
                }
            }
        }
        Cyclotomic {
            modulus: a.modulus,
            coeffs: out,
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Cyclotomic::one(self.modulus);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation: e(k/M) -> e(-k/M). An involution.
    pub fn conj(&self) -> Self {
        let m = self.modulus;
        let mut out = Cyclotomic::zero(m);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let r = Cyclotomic::root(m, -(k as i64)).scale(c);
                out = out.add(&r);
            }
        }
        out
    }

    /// Re-express in a larger modulus (target must be a multiple).
    pub fn promote(&self, target: u64) -> Self {
        assert!(
            target % self.modulus == 0,
            "promotion target must be a multiple of the modulus"
        );
        if target == self.modulus {
            return self.clone();
        }
        let step = (target / self.modulus) as i64;
        let mut out = Cyclotomic::zero(target);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let r = Cyclotomic::root(target, k as i64 * step).scale(c);
                out = out.add(&r);
            }
        }
        out
    }

    /// Numeric value at the given binary precision.
    pub fn eval(&self, prec: usize) -> Cplx {
        let mut acc = Cplx::zero(prec);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = QQ::new(BigInt::from(k as u64), BigInt::from(self.modulus));
            let root = Cplx::e_rational(&angle, prec);
            acc = acc.add(&root.scale_real(&Real::from_rational(c, prec)));
        }
        acc
    }

    /// Coefficients on the canonical basis (for display and serialization).
    pub fn basis_coeffs(&self) -> &[QQ] {
        &self.coeffs
    }
}

fn promote_pair(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
    if a.modulus == b.modulus {
        (a.clone(), b.clone())
    } else {
        let m = num_integer::lcm(a.modulus, b.modulus);
        (a.promote(m), b.promote(m))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = promote_pair(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "e({k}/{})", self.modulus)?;
            } else {
                write!(f, "{mag}*e({k}/{})", self.modulus)?;
            }
        }
        Ok(())
    }
}

/// Exact square root of a positive integer as a cyclotomic number, via
/// quadratic Gauss sums: sqrt(p) lives in Q(zeta_p) for p = 1 mod 4, in
/// Q(zeta_{4p}) for p = 3 mod 4, and sqrt(2) = e(1/8) + e(-1/8).
pub fn sqrt_integer(n: u64) -> Cyclotomic {
    assert!(n > 0);
    let mut rational = BigInt::one();
    let mut root = Cyclotomic::one(1);
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            rational *= BigInt::from(p).pow(e / 2);
            if e % 2 == 1 {
                root = root.mul(&sqrt_prime(p));
            }
        }
        p += 1;
    }
    if m > 1 {
        root = root.mul(&sqrt_prime(m));
    }
    root.scale(&QQ::from_integer(rational))
}

fn sqrt_prime(p: u64) -> Cyclotomic {
    if p == 2 {
        let m = 8;
        return Cyclotomic::root(m, 1).add(&Cyclotomic::root(m, -1));
    }
    // Quadratic Gauss sum g = sum_k e(k^2/p) equals sqrt(p) for p = 1 (4)
    // and i*sqrt(p) for p = 3 (4).
    let mut g = Cyclotomic::zero(p);
    for k in 0..p {
        let kk = ((k as i64) * (k as i64)).rem_euclid(p as i64);
        g = g.add(&Cyclotomic::root(p, kk));
    }
    if p % 4 == 1 {
        g
    } else {
        // sqrt(p) = e(-1/4) * g
        let m = num_integer::lcm(4, p);
        g.promote(m).mul(&Cyclotomic::root(m, -(m as i64 / 4)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qq;

    #[test]
    fn root_of_unity_power_is_one() {
        for m in [1u64, 2, 3, 8, 12, 24] {
            let z = Cyclotomic::root(m, 1);
            assert_eq!(z.pow(m), Cyclotomic::one(m), "modulus {m}");
            assert!(z.pow(m - 1).mul(&z) == Cyclotomic::one(m));
        }
    }

    #[test]
    fn conjugation_is_involution() {
        let z = Cyclotomic::root(24, 5)
            .scale(&qq(3, 2))
            .add(&Cyclotomic::root(24, 11));
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn norm_is_rational_nonnegative() {
        let z = Cyclotomic::root(12, 1)
            .scale(&qq(2, 3))
            .sub(&Cyclotomic::root(12, 5));
        let norm = z.mul(&z.conj());
        // z * conj(z) of this element happens to be rational
        let r = norm.as_rational().expect("norm should be rational here");
        assert!(r >= QQ::zero());
    }

    #[test]
    fn primitive_sixth_root_reduction() {
        // e(1/6) satisfies x^2 - x + 1 = 0, so e(2/6) = e(1/6) - 1... check via arithmetic
        let z = Cyclotomic::root(6, 1);
        let z2 = z.mul(&z);
        assert_eq!(z2, Cyclotomic::root(6, 2));
        // 1 + e(1/3) + e(2/3) = 0
        let s = Cyclotomic::one(3)
            .add(&Cyclotomic::root(3, 1))
            .add(&Cyclotomic::root(3, 2));
        assert!(s.is_zero());
    }

    #[test]
    fn promote_preserves_value() {
        let z = Cyclotomic::root(3, 1);
        let w = z.promote(12);
        assert_eq!(w, z);
        assert_eq!(w.mul(&w).mul(&w), Cyclotomic::one(12));
    }

    #[test]
    fn sqrt_squares_back() {
        for n in [1u64, 2, 3, 4, 5, 6, 8, 12, 45] {
            let r = sqrt_integer(n);
            let sq = r.mul(&r);
            assert_eq!(
                sq.as_rational(),
                Some(QQ::from_integer(BigInt::from(n))),
                "sqrt({n})^2"
            );
        }
    }

    #[test]
    fn sqrt_is_positive_real() {
        let r = sqrt_integer(3);
        let v = r.eval(96);
        assert!(v.re.to_f64() > 1.7 && v.re.to_f64() < 1.8);
        assert!(v.im.to_f64().abs() < 1e-20);
    }
}
