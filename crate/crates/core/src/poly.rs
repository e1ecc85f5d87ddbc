//! Univariate polynomials over exact scalars, just enough to find the roots
//! of small minimal polynomials in `Q` or `F_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::Scalar;

/// Coefficients, lowest degree first.
pub type Poly = Vec<Scalar>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &Poly) -> Option<usize> {
    let n = trim(p.clone()).len();
    n.checked_sub(1)
}

fn monic(p: Poly) -> Poly {
    let p = trim(p);
    match p.last() {
        None => p,
        Some(l) => {
            let inv = l.inv();
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

pub fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.clone());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead_inv = b.last().unwrap().inv();
    let mut q = vec![Scalar::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[shift + i] -= &t;
        }
        q[shift] = c;
        r = trim(r);
    }
    (q, r)
}

pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul(x, y);
        }
    }
    trim(out)
}

fn powmod(base: &Poly, mut e: u64, m: &Poly) -> Poly {
    let mut acc = vec![Scalar::one()];
    let mut b = divrem(base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(&mul(&acc, &b), m).1;
        }
        e >>= 1;
        if e > 0 {
            b = divrem(&mul(&b, &b), m).1;
        }
    }
    acc
}

pub fn eval(p: &Poly, x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Distinct roots of `p` in the field of characteristic `char` (0 for `Q`).
/// Rational root search gives up on coefficients too large to factor by trial
/// division, so the result may be incomplete in that case.
pub fn roots(p: &Poly, char: u64) -> Vec<Scalar> {
    let p = trim(p.clone());
    if p.len() <= 1 {
        return vec![];
    }
    let mut out = if char == 0 { rational_roots(&p) } else { fp_roots(&p, char) };
    out.sort();
    out.dedup();
    out
}

fn fp_roots(p: &Poly, q: u64) -> Vec<Scalar> {
    let to_f = |c: &Scalar| c.to_mod(q).expect("coefficient outside F_p");
    let p: Poly = p.iter().map(to_f).collect();
    let t = vec![Scalar::Mod { v: 0, p: q }, Scalar::Mod { v: 1, p: q }];
    let mut tp = powmod(&t, q, &p);
    while tp.len() < 2 {
        tp.push(Scalar::Mod { v: 0, p: q });
    }
    tp[1] -= &Scalar::one();
    let g = gcd(&p, &trim(tp));
    let mut out = Vec::new();
    split_linear(&g, q, 0, &mut out);
    out
}

fn split_linear(g: &Poly, q: u64, mut delta: u64, out: &mut Vec<Scalar>) {
    match degree(g) {
        None | Some(0) => {}
        Some(1) => out.push(-&(&g[0] / &g[1])),
        Some(d) => loop {
            let base = vec![Scalar::Mod { v: delta % q, p: q }, Scalar::Mod { v: 1, p: q }];
            delta += 1;
            let mut h = powmod(&base, (q - 1) / 2, g);
            if h.is_empty() {
                h.push(Scalar::Mod { v: 0, p: q });
            }
            h[0] -= &Scalar::one();
            let f = gcd(g, &trim(h));
            let fd = degree(&f).unwrap_or(0);
            if fd > 0 && fd < d {
                let (other, _) = divrem(g, &f);
                split_linear(&f, q, delta, out);
                split_linear(&monic(other), q, delta, out);
                return;
            }
            if delta > 4 * q.min(1 << 20) {
                return;
            }
        },
    }
}

const FACTOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > FACTOR_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                small.push(n / d);
            }
        }
        d += 1;
    }
    Some(small.into_iter().map(BigInt::from).collect())
}

fn rational_roots(p: &Poly) -> Vec<Scalar> {
    // clear denominators
    let coeffs: Vec<_> = p.iter().map(|c| c.as_big_rational().expect("rational coefficient")).collect();
    let mut l = BigInt::one();
    for c in &coeffs {
        l = l.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &l).to_integer()).collect();
    let mut out = Vec::new();
    // strip factors of t
    let z = ints.iter().take_while(|c| c.is_zero()).count();
    if z > 0 {
        out.push(Scalar::zero());
        ints.drain(..z);
    }
    if ints.len() <= 1 {
        return out;
    }
    let (Some(num), Some(den)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return out;
    };
    let poly: Poly = ints
        .iter()
        .map(|c| Scalar::from_big_rational(num_rational::BigRational::from_integer(c.clone())))
        .collect();
    for a in &num {
        for b in &den {
            for s in [1, -1] {
                let cand = Scalar::from_big_rational(num_rational::BigRational::new(a * s, b.clone()));
                if eval(&poly, &cand).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(xs: &[i64]) -> Poly {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn rational_roots_found() {
        // (t - 2)(2t + 3) t = 2t^3 - t^2 - 6t
        let r = roots(&ip(&[0, -6, -1, 2]), 0);
        assert_eq!(r, vec![Scalar::from_frac(-3, 2), Scalar::zero(), Scalar::from_int(2)]);
        assert!(roots(&ip(&[1, 0, 1]), 0).is_empty());
    }

    #[test]
    fn prime_roots_found() {
        let q = 10007;
        // t^2 + 1 splits mod 10007? 10007 = 3 mod 4 so no; (t-3)(t-5) does
        let p: Poly = ip(&[15, -8, 1]).iter().map(|c| c.to_mod(q).unwrap()).collect();
        let r = roots(&p, q);
        assert_eq!(r.len(), 2);
        for x in &r {
            assert!(eval(&p, x).is_zero());
        }
        let irr: Poly = ip(&[1, 0, 1]).iter().map(|c| c.to_mod(q).unwrap()).collect();
        assert!(roots(&irr, q).is_empty());
    }

    #[test]
    fn gcd_is_monic() {
        let a = mul(&ip(&[-1, 1]), &ip(&[2, 1]));
        let b = mul(&ip(&[-1, 1]), &ip(&[5, 1]));
        assert_eq!(gcd(&a, &b), ip(&[-1, 1]));
    }
}

pub fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * &Scalar::from_int(i as i64)).collect())
}

/// Product of the distinct irreducible factors of `p`, monic. `None` when
/// the derivative vanishes, which only happens in positive characteristic.
pub fn squarefree_part(p: &Poly, char: u64) -> Option<Poly> {
    let p = trim(p.clone());
    let mut d = derivative(&p);
    if char > 0 {
        d = trim(d.iter().map(|c| c.to_mod(char).expect("coefficient outside F_p")).collect());
    }
    if d.is_empty() {
        return None;
    }
    let g = gcd(&p, &d);
    Some(monic(divrem(&p, &g).0))
}
