//! Univariate rational polynomials: arithmetic, gcd, minimal polynomials and
//! factorization over Q by Kronecker's method (small degrees only).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{fmt_scalar, Scalar};
use super::sparse::SparseVec;
use super::{solve, QMatrix};
use crate::error::{Error, Result};

/// Coefficients lowest degree first, no trailing zeros. The zero polynomial
/// has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Scalar::from_integer(x.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Scalar::one()] }
    }

    /// `t - r`
    pub fn linear(r: Scalar) -> Self {
        Poly::new(vec![-r, Scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let lead = d.leading();
        let mut q = vec![Scalar::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (j, x) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * x;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Scalar::from_integer(BigInt::from(k))).collect())
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.leading().recip();
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree().is_some_and(|d| d == 0 || self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Primitive integer polynomial with positive leading coefficient, same roots.
    fn primitive_int(&self) -> Vec<BigInt> {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut v: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let sign = if v.last().is_some_and(|x| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
        for x in &mut v {
            *x = &*x / &g * &sign;
        }
        v
    }

    /// Irreducible monic factors over Q with multiplicities, sorted by
    /// degree then coefficients. Only degrees up to `max_degree` are accepted.
    pub fn factor(&self, max_degree: usize) -> Result<Vec<(Poly, usize)>> {
        let d = self.degree().ok_or_else(|| Error::invalid("cannot factor the zero polynomial"))?;
        if d > max_degree {
            return Err(Error::cap("polynomial degree for factorization", d, max_degree));
        }
        let mut out: Vec<(Poly, usize)> = Vec::new();
        let mut rest = self.monic();
        while rest.degree().unwrap_or(0) > 0 {
            let f = smallest_factor(&rest);
            let mut m = 0;
            loop {
                let (q, r) = rest.div_rem(&f);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                m += 1;
            }
            out.push((f, m));
        }
        out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs.cmp(&b.coeffs)));
        Ok(out)
    }

    pub fn is_irreducible(&self, max_degree: usize) -> Result<bool> {
        let f = self.factor(max_degree)?;
        Ok(self.degree().unwrap_or(0) > 0 && f.len() == 1 && f[0].1 == 1)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            out.push(k.clone());
            let other = &n / &k;
            if other != k {
                out.push(other);
            }
        }
        k += 1;
    }
    out
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Poly {
    let mut acc = Poly::zero();
    for i in 0..xs.len() {
        let mut basis = Poly::one();
        let mut denom = BigInt::one();
        for j in 0..xs.len() {
            if i != j {
                basis = basis.mul(&Poly::linear(Scalar::from_integer(xs[j].clone())));
                denom *= &xs[i] - &xs[j];
            }
        }
        acc = acc.add(&basis.scale(&Scalar::new(ys[i].clone(), denom)));
    }
    acc
}

/// Smallest-degree monic irreducible factor of a monic `p` of positive degree.
fn smallest_factor(p: &Poly) -> Poly {
    let n = p.degree().unwrap();
    let ip = p.primitive_int();
    let int_eval = |x: &BigInt| ip.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c);
    for k in 1..=n / 2 {
        // k + 1 sample points with few divisors; a root gives a linear factor at once
        let mut pts: Vec<(BigInt, BigInt)> = Vec::new();
        for step in 0..25i64 {
            let x = BigInt::from(if step % 2 == 0 { step / 2 } else { -(step + 1) / 2 });
            let v = int_eval(&x);
            if v.is_zero() {
                return Poly::linear(Scalar::from_integer(x));
            }
            pts.push((x, v));
        }
        pts.sort_by_key(|(_, v)| divisors(v).len());
        pts.truncate(k + 1);
        let xs: Vec<BigInt> = pts.iter().map(|(x, _)| x.clone()).collect();
        // g and -g are both factors, so the first value can be taken positive
        let choices: Vec<Vec<BigInt>> = pts
            .iter()
            .enumerate()
            .map(|(i, (_, v))| {
                let ds = divisors(v);
                if i == 0 {
                    ds
                } else {
                    ds.into_iter().flat_map(|d| [d.clone(), -d]).collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; k + 1];
        'outer: loop {
            let ys: Vec<BigInt> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            let g = interpolate(&xs, &ys);
            if g.degree() == Some(k) && g.coeffs.iter().all(|c| c.is_integer()) && p.rem(&g).is_zero() {
                return g.monic();
            }
            for pos in 0..=k {
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    continue 'outer;
                }
                idx[pos] = 0;
            }
            break;
        }
    }
    p.clone()
}

/// Minimal polynomial of an element of a finite-dimensional algebra, given
/// the map `k -> x^k` (with `x^0` the unit) in an ambient space of dimension
/// `dim`. Monic.
pub fn minimal_polynomial(dim: usize, mut power: impl FnMut(usize) -> SparseVec) -> Poly {
    let mut powers: Vec<SparseVec> = vec![power(0)];
    for k in 1..=dim + 1 {
        let next = power(k);
        let m = QMatrix::from_columns(dim, &powers);
        if let Some(c) = solve(&m, &next) {
            let mut coeffs = vec![Scalar::zero(); k + 1];
            for (i, x) in c {
                coeffs[i] = -x;
            }
            coeffs[k] = Scalar::one();
            return Poly::new(coeffs);
        }
        powers.push(next);
    }
    unreachable!("powers of an element span at most dim + 1 vectors")
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_scalar(c),
                1 => format!("{}*t", fmt_scalar(c)),
                _ => format!("{}*t^{k}", fmt_scalar(c)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Parses coefficient lists such as `["1", "0", "-2"]` (lowest degree first).
pub fn parse_poly(coeffs: &[String]) -> Result<Poly> {
    let c: Result<Vec<Scalar>> = coeffs.iter().map(|s| super::scalar::parse_scalar(s)).collect();
    Ok(Poly::new(c?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]); // t^2 - 1
        let b = Poly::from_ints(&[-1, 1]); // t - 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&Poly::from_ints(&[1, 1])), Poly::from_ints(&[1, 1]));
        let (g, s, t) = a.xgcd(&Poly::from_ints(&[2, 0, 1]));
        assert_eq!(g, Poly::one());
        assert_eq!(s.mul(&a).add(&t.mul(&Poly::from_ints(&[2, 0, 1]))), Poly::one());
    }

    #[test]
    fn factorization_examples() {
        // (t^2 + 1)(t - 2)^2
        let p = Poly::from_ints(&[1, 0, 1]).mul(&Poly::from_ints(&[-2, 1])).mul(&Poly::from_ints(&[-2, 1]));
        let f = p.factor(6).unwrap();
        assert_eq!(f, vec![(Poly::from_ints(&[-2, 1]), 2), (Poly::from_ints(&[1, 0, 1]), 1)]);
        // t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2), no rational roots
        let f = Poly::from_ints(&[4, 0, 0, 0, 1]).factor(6).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(q, m)| q.degree() == Some(2) && *m == 1));
        // (t^3 - 2)(t^3 + t + 1): two cubics
        let f = Poly::from_ints(&[-2, 0, 0, 1]).mul(&Poly::from_ints(&[1, 1, 0, 1])).factor(6).unwrap();
        assert_eq!(f.len(), 2);
        assert!(Poly::from_ints(&[-2, 0, 1]).is_irreducible(6).unwrap());
        assert!(!Poly::from_ints(&[-4, 0, 1]).is_irreducible(6).unwrap());
        assert!(Poly::from_ints(&[1, 1, 1, 1, 1, 1, 1]).factor(5).is_err());
    }

    #[test]
    fn rational_coefficients() {
        // (t - 1/2)(t + 1/3)
        let p = Poly::linear(crate::exactlin::scalar::frac(1, 2)).mul(&Poly::linear(crate::exactlin::scalar::frac(-1, 3)));
        let f = p.factor(6).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.iter().map(|(q, _)| q.clone()).fold(Poly::one(), |a, b| a.mul(&b)), p.monic());
    }

    #[test]
    fn minimal_polynomial_of_diagonal() {
        // diag(1, 1, 2) as an element of Q^3 with componentwise product
        let x = [(0, int(1)), (1, int(1)), (2, int(2))];
        let mp = minimal_polynomial(3, |k| x.iter().map(|(i, c)| (*i, num_traits::pow(c.clone(), k))).collect());
        assert_eq!(mp, Poly::from_ints(&[2, -3, 1]));
    }
}
