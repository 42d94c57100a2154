//! Dense univariate polynomial helpers over exact coefficient rings.
//!
//! Polynomials are coefficient vectors in ascending degree with no trailing
//! zeros. These are used for cyclotomic polynomials, characteristic
//! polynomials of Hecke operators, and number-field arithmetic; degrees stay
//! small throughout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::QQ;

/// Strip trailing zero coefficients.
pub fn normalize(mut p: Vec<QQ>) -> Vec<QQ> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &[QQ]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add(a: &[QQ], b: &[QQ]) -> Vec<QQ> {
    let mut out = vec![QQ::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    normalize(out)
}

pub fn sub(a: &[QQ], b: &[QQ]) -> Vec<QQ> {
    let mut out = vec![QQ::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    normalize(out)
}

pub fn mul(a: &[QQ], b: &[QQ]) -> Vec<QQ> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![QQ::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    normalize(out)
}

pub fn scale(a: &[QQ], c: &QQ) -> Vec<QQ> {
    normalize(a.iter().map(|x| x * c).collect())
}

/// Euclidean division: returns `(quotient, remainder)` with
/// `a = q*b + r`, `deg r < deg b`. Panics if `b` is zero.
pub fn div_rem(a: &[QQ], b: &[QQ]) -> (Vec<QQ>, Vec<QQ>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() <= db {
        return (Vec::new(), normalize(r));
    }
    let mut q = vec![QQ::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].clone() / lead.clone();
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = &b[i] * &c;
            r[dr - db + i] -= t;
        }
        r = normalize(r);
        if r.is_empty() {
            break;
        }
        if r.len() - 1 < db + 1 && r.len() <= db {
            break;
        }
    }
    (normalize(q), normalize(r))
}

/// Monic gcd over the rationals.
pub fn gcd(a: &[QQ], b: &[QQ]) -> Vec<QQ> {
    let mut x = normalize(a.to_vec());
    let mut y = normalize(b.to_vec());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        scale(&x, &(QQ::one() / lead))
    } else {
        x
    }
}

/// Formal derivative.
pub fn derivative(p: &[QQ]) -> Vec<QQ> {
    if p.len() <= 1 {
        return Vec::new();
    }
    normalize(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * QQ::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// A polynomial is squarefree iff gcd(p, p') is constant.
pub fn is_squarefree(p: &[QQ]) -> bool {
    let g = gcd(p, &derivative(p));
    g.len() <= 1
}

pub fn eval(p: &[QQ], x: &QQ) -> QQ {
    let mut acc = QQ::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Clear denominators and content: primitive integer polynomial with
/// positive leading coefficient, equal to `p` up to a positive rational
/// factor.
pub fn primitive_integer(p: &[QQ]) -> Vec<BigInt> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut den = BigInt::one();
    for c in p {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * QQ::from_integer(den.clone())).to_integer()).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return ints;
    }
    let mut out: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        for c in &mut out {
            *c = -c.clone();
        }
    }
    out
}

/// All rational roots of `p`, found by testing divisor pairs of the
/// constant and leading coefficients of the primitive integer model.
pub fn rational_roots(p: &[QQ]) -> Vec<QQ> {
    let ip = primitive_integer(p);
    if ip.len() <= 1 {
        return Vec::new();
    }
    let mut k = 0;
    while ip[k].is_zero() {
        k += 1;
    }
    let mut roots = Vec::new();
    if k > 0 {
        roots.push(QQ::zero());
    }
    let tail = &ip[k..];
    let a0 = tail[0].abs();
    let an = tail.last().unwrap().abs();
    for r in divisors(&a0) {
        for s in divisors(&an) {
            for sign in [1i64, -1] {
                let cand = QQ::new(&r * BigInt::from(sign), s.clone());
                if eval(p, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // Small numbers only in practice; fall back to trial division.
    let mut out = Vec::new();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// Factor a squarefree rational polynomial into monic irreducible factors.
///
/// Strategy: strip rational roots, then certify irreducibility of the
/// remaining cofactor. Degrees 2 and 3 are irreducible without rational
/// roots; higher degrees get a reduction-mod-p certificate. Returns an
/// error string when no certificate is found (outside the supported desk
/// scale).
pub fn factor_squarefree(p: &[QQ]) -> Result<Vec<Vec<QQ>>, String> {
    let mut work = normalize(p.to_vec());
    if work.len() <= 1 {
        return Ok(Vec::new());
    }
    let lead = work.last().unwrap().clone();
    work = scale(&work, &(QQ::one() / lead));
    let mut factors = Vec::new();
    for r in rational_roots(&work) {
        let lin = vec![-r, QQ::one()];
        let (q, rem) = div_rem(&work, &lin);
        assert!(rem.is_empty(), "root division must be exact");
        factors.push(lin);
        work = q;
    }
    if work.len() == 1 {
        return Ok(factors);
    }
    let deg = work.len() - 1;
    if deg <= 3 || mod_p_irreducible(&work) {
        factors.push(work);
        Ok(factors)
    } else {
        Err(format!(
            "cannot certify irreducibility of a degree-{deg} factor"
        ))
    }
}

/// Try to certify irreducibility by factoring mod several small primes.
fn mod_p_irreducible(p: &[QQ]) -> bool {
    let ip = primitive_integer(p);
    let deg = ip.len() - 1;
    'primes: for q in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let qi = BigInt::from(q);
        if (ip.last().unwrap() % &qi).is_zero() {
            continue;
        }
        let reduced: Vec<u64> = ip
            .iter()
            .map(|c| {
                let m = ((c % &qi) + &qi) % &qi;
                use num_traits::ToPrimitive;
                m.to_u64().unwrap()
            })
            .collect();
        // Brute force: check for any monic factor of degree 1..=deg/2.
        for d in 1..=deg / 2 {
            if has_monic_factor_mod_p(&reduced, d, q) {
                continue 'primes;
            }
        }
        return true;
    }
    false
}

fn has_monic_factor_mod_p(p: &[u64], d: usize, q: u64) -> bool {
    // Enumerate all monic polynomials of degree d over F_q (desk scale only).
    let total = q.pow(d as u32);
    if total > 2_000_000 {
        return true; // give up: treat as "maybe reducible"
    }
    let mut coeffs = vec![0u64; d + 1];
    coeffs[d] = 1;
    for idx in 0..total {
        let mut t = idx;
        for c in coeffs.iter_mut().take(d) {
            *c = t % q;
            t /= q;
        }
        if poly_rem_mod_p(p, &coeffs, q).iter().all(|&c| c == 0) {
            return true;
        }
    }
    false
}

fn poly_rem_mod_p(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv_lead = mod_inv(b[db], q);
    let mut r: Vec<u64> = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        if r[dr] == 0 {
            r.pop();
            continue;
        }
        let c = (r[dr] as u128 * inv_lead as u128 % q as u128) as u64;
        for i in 0..=db {
            let t = (b[i] as u128 * c as u128 % q as u128) as u64;
            r[dr - db + i] = (r[dr - db + i] + q - t) % q;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn mod_inv(a: u64, q: u64) -> u64 {
    // Fermat; q prime, a != 0 mod q.
    let mut base = a as u128 % q as u128;
    let mut exp = q - 2;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q as u128;
        }
        base = base * base % q as u128;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{qq, qq_int};

    fn p(v: &[i64]) -> Vec<QQ> {
        normalize(v.iter().map(|&c| qq_int(c)).collect())
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[1, 0, 0, 0, 0, -1]); // 1 - x^5... coefficients ascending: 1 + 0x + ... - x^5
        let b = p(&[-1, 1]); // x - 1
        let (q, r) = div_rem(&a, &b);
        assert_eq!(add(&mul(&q, &b), &r), a);
    }

    #[test]
    fn gcd_of_multiples() {
        let f = p(&[-1, 0, 1]); // x^2 - 1
        let g = p(&[1, 1]); // x + 1
        assert_eq!(gcd(&f, &g), p(&[1, 1]));
    }

    #[test]
    fn squarefree_detection() {
        assert!(is_squarefree(&p(&[-1, 0, 1])));
        assert!(!is_squarefree(&p(&[1, 2, 1]))); // (x+1)^2
    }

    #[test]
    fn rational_roots_of_quadratic() {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let f = p(&[-3, 5, 2]);
        let roots = rational_roots(&f);
        assert_eq!(roots, vec![qq_int(-3), qq(1, 2)]);
    }

    #[test]
    fn factor_quadratic_irreducible() {
        // x^2 - 2 has no rational roots
        let f = p(&[-2, 0, 1]);
        let factors = factor_squarefree(&f).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0], f);
    }

    #[test]
    fn factor_with_rational_root() {
        // (x - 540)(x^2 - 2) scaled
        let f = mul(&p(&[-540, 1]), &p(&[-2, 0, 1]));
        let factors = factor_squarefree(&f).unwrap();
        assert_eq!(factors.len(), 2);
    }

    #[test]
    fn mod_p_certificate_degree_four() {
        // x^4 + x + 1 is irreducible over Q (irreducible mod 2... use mod-p list)
        let f = p(&[1, 1, 0, 0, 1]);
        assert!(factor_squarefree(&f).is_ok());
    }
}
