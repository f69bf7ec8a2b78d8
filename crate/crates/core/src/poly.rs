//! Dense polynomials over a prime field, coefficients stored constant term first.

pub(crate) fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn mul_mod_p(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod_p(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_p(acc, base, p);
        }
        base = mul_mod_p(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod_p(a: u64, p: u64) -> u64 {
    pow_mod_p(a, p - 2, p)
}

/// Remainder of `a` modulo a monic-or-not nonzero `m`.
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let m = trim(m.to_vec());
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod_p(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let factor = mul_mod_p(r[dr], lead_inv, p);
        let shift = dr - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = mul_mod_p(factor, c, p);
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod_p(x, y, p)) % p;
        }
    }
    trim(out)
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

/// Base-`p` digits of `n`, least significant first, padded to `len`.
pub(crate) fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p` digits of `n`.
fn monic_from_index(n: u64, deg: usize, p: u64) -> Vec<u64> {
    let mut c = digits(n, p, deg);
    c.push(1);
    c
}

pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for n in 0..count {
            let g = monic_from_index(n, d, p);
            if rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `r` over F_p.
///
/// Candidates are ordered by the integer whose base-`p` digits are the
/// non-leading coefficients (constant term least significant).
pub fn find_irreducible(p: u64, r: u32) -> Vec<u64> {
    let deg = r as usize;
    let count = p.pow(r);
    (0..count)
        .map(|n| monic_from_index(n, deg, p))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remainder_by_quadratic() {
        // x^3 mod (x^2 + 1) over F_3 is -x = 2x
        assert_eq!(rem(&[0, 0, 0, 1], &[1, 0, 1], 3), vec![0, 2]);
    }

    #[test]
    fn small_irreducibles() {
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        assert!(is_irreducible(&[2, 0, 1], 5));
        assert!(is_irreducible(&[1, 1, 1], 5));
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(960), vec![2, 3, 5]);
        assert_eq!(prime_factors(80), vec![2, 5]);
    }
}
