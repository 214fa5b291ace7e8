//! Minimal polynomials of square matrices and their roots in the base field.
//!
//! Used to find eigenvalues when splitting endomorphisms; only roots
//! lying in the field itself are reported.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::field::Field;
use super::matrix::Matrix;
use super::scalar::Scalar;

/// Coefficients `c_0, ..., c_{d-1}, 1` of the monic minimal polynomial.
pub fn minimal_polynomial(a: &Matrix) -> Vec<Scalar> {
    assert!(a.is_square(), "minimal polynomial of a non-square matrix");
    let f = a.field();
    let n = a.rows();
    let flat = |m: &Matrix| m.entries().to_vec();
    let mut powers: Vec<Vec<Scalar>> = vec![flat(&Matrix::identity(f, n))];
    let mut current = Matrix::identity(f, n);
    loop {
        current = current.mul(a);
        let target = flat(&current);
        let k = powers.len();
        // columns are the previous powers
        let mut data = Vec::with_capacity(n * n * k);
        for i in 0..n * n {
            for p in &powers {
                data.push(p[i].clone());
            }
        }
        let basis = Matrix::from_canonical(f, n * n, k, data);
        let rhs = Matrix::from_canonical(f, n * n, 1, target.clone());
        if let Some(x) = basis.solve_right(&rhs) {
            let mut coeffs: Vec<Scalar> = (0..k).map(|i| f.neg(x.get(i, 0))).collect();
            coeffs.push(f.one());
            return coeffs;
        }
        powers.push(target);
    }
}

pub fn eval(field: Field, coeffs: &[Scalar], x: &Scalar) -> Scalar {
    coeffs
        .iter()
        .rev()
        .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
}

/// Distinct roots in the field, sorted.
pub fn roots(field: Field, coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut out = match field {
        Field::Rationals => rational_roots(coeffs),
        Field::Prime(p) => prime_roots(p, coeffs)
            .into_iter()
            .map(|r| Scalar::from_int(r as i64))
            .collect(),
    };
    out.sort();
    out.dedup();
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

// Rational root theorem; coefficients beyond 10^12 are not factored and
// simply yield no candidates.
fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let field = Field::Rationals;
    let mut lcm = BigInt::from(1);
    for c in coeffs {
        lcm = lcm.lcm(&c.parts().1);
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| {
            let (n, d) = c.parts();
            n * (&lcm / d)
        })
        .collect();
    let mut out = Vec::new();
    let mut low = 0;
    while low < ints.len() && ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        out.push(Scalar::ZERO);
    }
    if low + 1 >= ints.len() {
        return out;
    }
    let (Some(a0), Some(an)) = (
        ints[low].abs().to_u64(),
        ints[ints.len() - 1].abs().to_u64(),
    ) else {
        return out;
    };
    if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
        return out;
    }
    for p in divisors(a0) {
        for q in divisors(an) {
            for sign in [1i128, -1] {
                let cand = Scalar::from_i128(sign * p as i128, q as i128);
                if eval(field, coeffs, &cand).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    out
}

type ModPoly = Vec<u64>;

fn trim(p: &mut ModPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    super::scalar::pow_mod(a, p - 2, p)
}

fn poly_rem(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, bi) in b.iter().enumerate() {
            let idx = shift + i;
            r[idx] = (r[idx] + p - c * bi % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &ModPoly, b: &ModPoly, m: &ModPoly, p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem(&out, m, p)
}

fn poly_powmod(base: &ModPoly, mut e: u64, m: &ModPoly, p: u64) -> ModPoly {
    let mut acc = poly_rem(&vec![1], m, p);
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let li = inv_mod(lead, p);
        for c in x.iter_mut() {
            *c = *c * li % p;
        }
    }
    x
}

fn poly_sub(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    let mut out: ModPoly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_div_exact(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    let mut q = vec![0u64; r.len().saturating_sub(db)];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * lead_inv % p;
        q[shift] = c;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        trim(&mut r);
    }
    q
}

// g is a product of distinct linear factors
fn split_linear(g: &ModPoly, p: u64, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push((p - g[0] * inv_mod(g[1], p) % p) % p),
        _ => {
            if p == 2 {
                // only 0 and 1 can be roots
                for r in 0..2u64 {
                    let v = g.iter().rev().fold(0, |acc, c| (acc * r + c) % p);
                    if v == 0 {
                        out.push(r);
                    }
                }
                return;
            }
            for a in 0..p {
                let h = poly_powmod(&vec![a, 1], (p - 1) / 2, g, p);
                let d = poly_gcd(&poly_sub(&h, &vec![1], p), g, p);
                if d.len() > 1 && d.len() < g.len() {
                    let rest = poly_div_exact(g, &d, p);
                    split_linear(&d, p, out);
                    split_linear(&rest, p, out);
                    return;
                }
            }
        }
    }
}

fn prime_roots(p: u32, coeffs: &[Scalar]) -> Vec<u64> {
    let p = p as u64;
    let mut f: ModPoly = coeffs
        .iter()
        .map(|c| c.mod_prime(p as u32).expect("prime-field scalar") as u64)
        .collect();
    trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    if p <= 1 << 12 {
        return (0..p)
            .filter(|&r| f.iter().rev().fold(0, |acc, c| (acc * r + c) % p) == 0)
            .collect();
    }
    let xp = poly_powmod(&vec![0, 1], p, &f, p);
    let g = poly_gcd(&poly_sub(&xp, &vec![0, 1], p), &f, p);
    let mut out = Vec::new();
    split_linear(&g, p, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minpoly_of_projection() {
        let q = Field::Rationals;
        let e = Matrix::from_ints(q, &[&[1, 0], &[0, 0]]);
        // x^2 - x
        assert_eq!(
            minimal_polynomial(&e),
            vec![Scalar::ZERO, Scalar::from_int(-1), Scalar::ONE]
        );
        assert_eq!(roots(q, &minimal_polynomial(&e)), vec![Scalar::ZERO, Scalar::ONE]);
    }

    #[test]
    fn rational_roots_found() {
        let q = Field::Rationals;
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let c = vec![Scalar::from_int(-3), Scalar::from_int(5), Scalar::from_int(2)];
        assert_eq!(roots(q, &c), vec![Scalar::from_int(-3), Scalar::from_i128(1, 2)]);
        // x^2 + 1 has none
        assert!(roots(q, &[Scalar::ONE, Scalar::ZERO, Scalar::ONE]).is_empty());
    }

    #[test]
    fn large_prime_roots() {
        let p = 1_000_003u32;
        let f = Field::prime(p as u64).unwrap();
        // (x - 5)(x - 77)(x^2 + 1)  ; -1 is a non-residue mod 1000003
        let lin = |r: i64| vec![f.from_int(-r), f.one()];
        let mul = |a: &[Scalar], b: &[Scalar]| {
            let mut out = vec![f.zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] = f.add(&out[i + j], &f.mul(x, y));
                }
            }
            out
        };
        let poly = mul(&mul(&lin(5), &lin(77)), &[f.one(), f.zero(), f.one()]);
        assert_eq!(roots(f, &poly), vec![f.from_int(5), f.from_int(77)]);
    }
}
