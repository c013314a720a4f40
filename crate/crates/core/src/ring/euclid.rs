//! Euclidean domains and their quotients: ℤ, ℤ/n, 𝔽_p, 𝔽_p[X] and
//! 𝔽_p[X]/(f). Every ideal is principal, so membership questions reduce to
//! gcd arithmetic.

use super::{is_prime, Decision, RingOracle, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};
use std::fmt::Debug;
use std::hash::Hash;

/// A Euclidean domain with a canonical associate in each class.
pub trait Euclid: Clone + Send + Sync {
    type El: Clone + Eq + Hash + Debug + Send + Sync;

    fn name(&self) -> String;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    /// `(q, r)` with `a = qb + r` and `r` the canonical residue mod `b`.
    fn div_rem(&self, a: &Self::El, b: &Self::El) -> (Self::El, Self::El);
    /// The canonical associate (absolute value, monic polynomial).
    fn normal(&self, a: &Self::El) -> Self::El;
    fn is_unit(&self, a: &Self::El) -> bool;
    fn show(&self, a: &Self::El) -> String;
    fn parse(&self, s: &str) -> Result<Self::El>;
    /// All canonical residues modulo `m ≠ 0`, if there are at most `limit`.
    fn residues(&self, m: &Self::El, limit: usize) -> Option<Vec<Self::El>>;
    fn probes(&self) -> Vec<Self::El>;
    fn sample(&self, rng: &mut dyn RngCore) -> Self::El;
    /// Elements of size at most `coeff` (|n| ≤ coeff, degree < coeff).
    fn small(&self, coeff: u32) -> Vec<Self::El>;

    fn is_zero(&self, a: &Self::El) -> bool {
        *a == self.zero()
    }

    fn divides(&self, d: &Self::El, a: &Self::El) -> bool {
        if self.is_zero(d) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, d).1)
    }

    fn exact_div(&self, a: &Self::El, d: &Self::El) -> Self::El {
        self.div_rem(a, d).0
    }

    fn gcd(&self, a: &Self::El, b: &Self::El) -> Self::El {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !self.is_zero(&y) {
            let r = self.div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        self.normal(&x)
    }

    /// `(g, s, t)` with `g = sa + tb` and `g` the normalized gcd.
    fn ext_gcd(&self, a: &Self::El, b: &Self::El) -> (Self::El, Self::El, Self::El) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.add(&s0, &self.neg(&self.mul(&q, &s1)));
            let t2 = self.add(&t0, &self.neg(&self.mul(&q, &t1)));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if self.is_zero(&r0) {
            return (r0, s0, t0);
        }
        // Scale so that g is the canonical associate.
        let g = self.normal(&r0);
        let u = self.exact_div(&g, &r0);
        (g, self.mul(&s0, &u), self.mul(&t0, &u))
    }

    /// Removes from `h` every prime factor it shares with `x`, without
    /// factoring: divide by `gcd(h, x)` until the gcd is a unit.
    fn strip(&self, h: &Self::El, x: &Self::El) -> Self::El {
        let mut h = h.clone();
        if self.is_zero(&h) {
            return h;
        }
        loop {
            let g = self.gcd(&h, x);
            if self.is_unit(&g) {
                return self.normal(&h);
            }
            h = self.exact_div(&h, &g);
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Euclid for Integers {
    type El = BigInt;

    fn name(&self) -> String {
        "ℤ".into()
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        let r = a.mod_floor(&b.abs());
        ((a - &r) / b, r)
    }
    fn normal(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn show(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<BigInt> {
        s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: `{s}`")))
    }
    fn residues(&self, m: &BigInt, limit: usize) -> Option<Vec<BigInt>> {
        let n = m.abs();
        if n > BigInt::from(limit) {
            return None;
        }
        let n: i64 = (&n).try_into().ok()?;
        Some((0..n).map(BigInt::from).collect())
    }
    fn probes(&self) -> Vec<BigInt> {
        [0, 1, -1, 2, 3, 4, 6, 12].iter().map(|&k| BigInt::from(k)).collect()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> BigInt {
        BigInt::from(rng.gen_range(-10_000i64..=10_000))
    }
    fn small(&self, coeff: u32) -> Vec<BigInt> {
        let c = coeff as i64;
        let mut v: Vec<BigInt> = (0..=c).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] }).map(BigInt::from).collect();
        v.dedup();
        v
    }
}

/// Univariate polynomials over 𝔽_p, coefficients low to high with no
/// trailing zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GfPoly {
    p: u64,
}

impl GfPoly {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::Invalid(format!("{p} is not a supported prime")));
        }
        Ok(GfPoly { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn inv(&self, a: u64) -> u64 {
        let mut r = 1u64;
        let (mut b, mut e) = (a % self.p, self.p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }

    pub fn x(&self) -> Vec<u64> {
        vec![0, 1]
    }

    pub fn constant(&self, c: u64) -> Vec<u64> {
        Self::trim(vec![c % self.p])
    }

    pub fn degree(a: &[u64]) -> Option<usize> {
        a.len().checked_sub(1)
    }

    /// Random polynomial of degree at most `deg`.
    pub fn random(&self, rng: &mut dyn RngCore, deg: usize) -> Vec<u64> {
        Self::trim((0..=deg).map(|_| rng.gen_range(0..self.p)).collect())
    }
}

impl Euclid for GfPoly {
    type El = Vec<u64>;

    fn name(&self) -> String {
        format!("𝔽{}[X]", self.p)
    }
    fn zero(&self) -> Vec<u64> {
        Vec::new()
    }
    fn one(&self) -> Vec<u64> {
        vec![1]
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let n = a.len().max(b.len());
        Self::trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % self.p).collect())
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % self.p;
            }
        }
        Self::trim(r)
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|c| (self.p - c) % self.p).collect()
    }
    fn div_rem(&self, a: &Vec<u64>, b: &Vec<u64>) -> (Vec<u64>, Vec<u64>) {
        let mut r = a.clone();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead = self.inv(*b.last().expect("nonzero divisor"));
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = r.last().copied().unwrap_or(0) * lead % self.p;
            q[shift] = c;
            for (j, bj) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + self.p - c * bj % self.p) % self.p;
            }
            r = Self::trim(r);
        }
        (Self::trim(q), r)
    }
    fn normal(&self, a: &Vec<u64>) -> Vec<u64> {
        match a.last() {
            None => Vec::new(),
            Some(&l) => {
                let i = self.inv(l);
                a.iter().map(|c| c * i % self.p).collect()
            }
        }
    }
    fn is_unit(&self, a: &Vec<u64>) -> bool {
        a.len() == 1
    }
    fn show(&self, a: &Vec<u64>) -> String {
        if a.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in a.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "X".into(),
                (1, c) => format!("{c}X"),
                (i, 1) => format!("X^{i}"),
                (i, c) => format!("{c}X^{i}"),
            });
        }
        parts.join("+")
    }
    fn parse(&self, s: &str) -> Result<Vec<u64>> {
        let bad = || Error::Parse(format!("not a polynomial: `{s}`"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut acc = Vec::new();
        for term in s.split('+') {
            let (coef, rest) = match term.find(['X', 'x']) {
                None => (term, None),
                Some(i) => (&term[..i], Some(&term[i + 1..])),
            };
            let c: u64 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad())? };
            let e: usize = match rest {
                None => 0,
                Some("") => 1,
                Some(r) => r.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?,
            };
            let mut t = vec![0u64; e + 1];
            t[e] = c % self.p;
            acc = self.add(&acc, &Self::trim(t));
        }
        Ok(acc)
    }
    fn residues(&self, m: &Vec<u64>, limit: usize) -> Option<Vec<Vec<u64>>> {
        let d = m.len().checked_sub(1)?;
        let count = (self.p as u128).checked_pow(d as u32)?;
        if count > limit as u128 {
            return None;
        }
        Some(all_polys(self.p, d))
    }
    fn probes(&self) -> Vec<Vec<u64>> {
        vec![vec![], vec![1], vec![0, 1], vec![1, 1], vec![0, 0, 1], vec![0, 1, 1]]
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Vec<u64> {
        self.random(rng, 4)
    }
    fn small(&self, coeff: u32) -> Vec<Vec<u64>> {
        all_polys(self.p, coeff as usize)
    }
}

/// Every polynomial of degree below `d`.
fn all_polys(p: u64, d: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v| (0..p).map(move |c| {
                let mut w = v.clone();
                w.push(c);
                w
            }))
            .collect();
    }
    out.into_iter().map(GfPoly::trim).collect()
}

/// `D/⟨m⟩` for a Euclidean domain `D`; `m = 0` is `D` itself.
#[derive(Clone, Debug)]
pub struct EuclidRing<D: Euclid> {
    dom: D,
    m: D::El,
}

pub fn integers() -> EuclidRing<Integers> {
    EuclidRing::new(Integers, BigInt::zero())
}

pub fn mod_n(n: u64) -> Result<EuclidRing<Integers>> {
    if n == 0 {
        return Err(Error::Invalid("modulus must be at least 1".into()));
    }
    Ok(EuclidRing::new(Integers, BigInt::from(n)))
}

pub fn prime_field(p: u64) -> Result<EuclidRing<Integers>> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    mod_n(p)
}

/// `𝔽_p[X]`.
pub fn poly_over_field(p: u64) -> Result<EuclidRing<GfPoly>> {
    Ok(EuclidRing::new(GfPoly::new(p)?, Vec::new()))
}

impl<D: Euclid> EuclidRing<D> {
    pub fn new(dom: D, m: D::El) -> Self {
        let m = dom.normal(&m);
        EuclidRing { dom, m }
    }

    pub fn domain(&self) -> &D {
        &self.dom
    }

    pub fn modulus(&self) -> &D::El {
        &self.m
    }

    pub fn reduce(&self, x: &D::El) -> D::El {
        if self.dom.is_zero(&self.m) {
            x.clone()
        } else {
            self.dom.div_rem(x, &self.m).1
        }
    }

    /// Generator, in `D`, of the preimage of `⟨gens⟩`.
    pub fn ideal_generator(&self, gens: &[D::El]) -> D::El {
        gens.iter().fold(self.m.clone(), |g, x| self.dom.gcd(&g, x))
    }

    pub fn lift(&self, x: D::El) -> D::El {
        self.reduce(&x)
    }

    fn is_base(&self) -> bool {
        self.dom.is_zero(&self.m)
    }

    /// `(a_0..a_ℓ, m_0..m_ℓ)` for a tuple of length at least two in the
    /// domain itself: the last two entries carry the identity, the outer
    /// ones are padded with `a_i = 0, m_i = 0`.
    fn pid_witness(&self, xs: &[D::El]) -> (Vec<D::El>, Vec<u32>) {
        let d = &self.dom;
        let l = xs.len() - 1;
        let (x0, x1) = (&xs[l - 1], &xs[l]);
        let mut a = vec![d.zero(); xs.len()];
        let mut m = vec![0u32; xs.len()];
        if d.is_zero(x0) {
            m[l - 1] = 1;
            return (a, m);
        }
        // x0 = s·h with h coprime to x1 and every prime of s dividing x1.
        let h = d.strip(x0, x1);
        let s = d.exact_div(&d.normal(x0), &h);
        let mut m1 = 0u32;
        let mut p = d.one();
        while !d.divides(&s, &p) {
            p = d.mul(&p, x1);
            m1 += 1;
        }
        let a1 = if d.is_unit(&h) {
            d.zero()
        } else {
            // a1 ≡ -x1⁻¹ (mod h), so h | 1 + a1·x1.
            let (_, inv, _) = d.ext_gcd(x1, &h);
            d.neg(&d.div_rem(&inv, &h).1)
        };
        let inner = d.mul(&p, &d.add(&d.one(), &d.mul(&a1, x1)));
        let a0 = d.neg(&d.exact_div(&inner, x0));
        a[l] = a1;
        m[l] = m1;
        a[l - 1] = a0;
        (a, m)
    }
}

impl<D: Euclid> RingOracle for EuclidRing<D> {
    type El = D::El;

    fn describe(&self) -> String {
        if self.is_base() {
            self.dom.name()
        } else {
            format!("{}/({})", self.dom.name(), self.dom.show(&self.m))
        }
    }
    fn same_as(&self, other: &Self) -> bool {
        self.m == other.m
    }
    fn zero(&self) -> D::El {
        self.reduce(&self.dom.zero())
    }
    fn one(&self) -> D::El {
        self.reduce(&self.dom.one())
    }
    fn add(&self, a: &D::El, b: &D::El) -> D::El {
        self.reduce(&self.dom.add(a, b))
    }
    fn mul(&self, a: &D::El, b: &D::El) -> D::El {
        self.reduce(&self.dom.mul(a, b))
    }
    fn neg(&self, a: &D::El) -> D::El {
        self.reduce(&self.dom.neg(a))
    }
    fn show(&self, a: &D::El) -> String {
        self.dom.show(a)
    }
    fn parse(&self, s: &str) -> Result<D::El> {
        Ok(self.reduce(&self.dom.parse(s)?))
    }

    fn radical_member(&self, x: &D::El, gens: &[D::El]) -> bool {
        let g = self.ideal_generator(gens);
        if self.dom.is_zero(&g) {
            return self.dom.is_zero(x);
        }
        self.dom.is_unit(&self.dom.strip(&g, x))
    }

    fn ideal_member(&self, x: &D::El, gens: &[D::El]) -> bool {
        let g = self.ideal_generator(gens);
        self.dom.divides(&g, x)
    }

    fn one_in_ideal(&self, gens: &[D::El]) -> bool {
        self.dom.is_unit(&self.ideal_generator(gens))
    }

    fn enumerate(&self) -> Option<Vec<D::El>> {
        if self.is_base() {
            return None;
        }
        self.dom.residues(&self.m, ENUMERATION_LIMIT)
    }

    fn probes(&self) -> Vec<D::El> {
        let mut v: Vec<D::El> = Vec::new();
        for p in self.dom.probes() {
            let r = self.reduce(&p);
            if !v.contains(&r) {
                v.push(r);
            }
        }
        v
    }

    fn sample(&self, rng: &mut dyn RngCore) -> D::El {
        self.reduce(&self.dom.sample(rng))
    }

    fn search_space(&self, coeff: u32) -> Vec<D::El> {
        let mut v: Vec<D::El> = Vec::new();
        for p in self.dom.small(coeff) {
            let r = self.reduce(&p);
            if !v.contains(&r) {
                v.push(r);
            }
        }
        v
    }

    fn quotient(&self, gens: &[D::El]) -> Result<Self> {
        Ok(EuclidRing::new(self.dom.clone(), self.ideal_generator(gens)))
    }

    fn project(&self, target: &Self, x: &D::El) -> D::El {
        target.reduce(x)
    }

    /// ℤ and 𝔽_p[X] are Jacobson rings, so `J(𝔞) = √𝔞` for every ideal; a
    /// proper quotient is zero-dimensional and the same holds there.
    fn jacobson_member(&self, x: &D::El, gens: &[D::El]) -> Decision {
        Decision::from_bool(self.radical_member(x, gens))
    }

    /// In the domain, `(0 : j) = 0` unless `j = 0`. In a proper quotient
    /// `D/(m)`, `(√0 : d)` is generated by the primes of `m` not dividing
    /// `d`, which together with `d` generate the whole ring.
    fn krull_boundary_generators(&self, j: &[D::El]) -> Result<Vec<D::El>> {
        if !self.is_base() {
            return Ok(vec![self.one()]);
        }
        let d = self.ideal_generator(j);
        Ok(if self.dom.is_zero(&d) { vec![self.one()] } else { vec![d] })
    }

    fn heitmann_boundary_generators(&self, j: &[D::El]) -> Result<Vec<D::El>> {
        // J(0) = √0 in every ring of this family.
        self.krull_boundary_generators(j)
    }

    fn is_domain(&self) -> Option<bool> {
        if self.is_base() {
            Some(true)
        } else {
            None
        }
    }

    fn collapse_witness(&self, xs: &[D::El]) -> Option<(Vec<D::El>, Vec<u32>)> {
        if !self.is_base() || xs.is_empty() {
            return None;
        }
        if xs.len() >= 2 {
            return Some(self.pid_witness(xs));
        }
        let x = &xs[0];
        if self.dom.is_zero(x) {
            return Some((vec![self.zero()], vec![1]));
        }
        if self.dom.is_unit(x) {
            // 1 + a·x = 0 with a = -x⁻¹.
            let (_, inv, _) = self.dom.ext_gcd(x, &self.dom.zero());
            return Some((vec![self.dom.neg(&inv)], vec![0]));
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn integer_radicals() {
        let r = integers();
        assert!(r.radical_member(&z(6), &[z(12)]));
        assert!(!r.radical_member(&z(2), &[z(12)]));
        assert!(r.radical_member(&z(0), &[]));
        assert!(!r.radical_member(&z(5), &[]));
        let m4 = mod_n(4).unwrap();
        assert!(m4.radical_member(&z(2), &[]));
        assert!(!m4.radical_member(&z(1), &[]));
    }

    #[test]
    fn radical_matches_factorization_oracle() {
        // x ∈ √⟨g⟩ iff every prime dividing g divides x.
        let r = integers();
        let primes = |mut n: i64| {
            let mut ps = Vec::new();
            let mut d = 2;
            while n > 1 {
                if n % d == 0 {
                    ps.push(d);
                    while n % d == 0 {
                        n /= d;
                    }
                }
                d += 1;
            }
            ps
        };
        for g in 1..80i64 {
            for x in 0..80i64 {
                let expect = primes(g).iter().all(|p| x % p == 0);
                assert_eq!(r.radical_member(&z(x), &[z(g)]), expect, "{x} in rad({g})");
            }
        }
    }

    #[test]
    fn jacobson_shortcut_agrees_with_exhaustion_on_zmod() {
        for n in 1..=40u64 {
            let r = mod_n(n).unwrap();
            let all = r.enumerate().unwrap();
            for x in &all {
                for g in [z(0), z(2), z(3)] {
                    let g = r.reduce(&g);
                    let exact = super::super::jacobson_exhaustive(&r, &all, x, std::slice::from_ref(&g));
                    assert_eq!(r.jacobson_member(x, std::slice::from_ref(&g)), Decision::from_bool(exact), "n={n} x={x} g={g}");
                }
            }
        }
    }

    #[test]
    fn jacobson_of_integers_spot_check() {
        // 1 + x·y must be a unit for every y; y = 1 already excludes x ∉ {0, -2}
        // and y = -1 excludes -2.
        let r = integers();
        for x in -30..=30i64 {
            let units_for_small_y = (-3..=3i64).all(|y| (1 + x * y).abs() == 1);
            assert_eq!(r.jacobson_member(&z(x), &[]) == Decision::Yes, units_for_small_y);
        }
        assert_eq!(mod_n(12).unwrap().jacobson_member(&z(6), &[]), Decision::Yes);
    }

    #[test]
    fn zmod12_jacobson_radical() {
        let r = mod_n(12).unwrap();
        let j: Vec<i64> = (0..12).filter(|&x| r.jacobson_member(&z(x), &[]) == Decision::Yes).collect();
        assert_eq!(j, vec![0, 6]);
    }

    #[test]
    fn boundary_generators() {
        let r = integers();
        assert_eq!(r.krull_boundary_generators(&[z(1)]).unwrap(), vec![z(1)]);
        assert_eq!(r.krull_boundary_generators(&[z(6)]).unwrap(), vec![z(6)]);
        assert_eq!(r.krull_boundary_generators(&[z(0)]).unwrap(), vec![z(1)]);
        let m4 = mod_n(4).unwrap();
        assert!(m4.one_in_ideal(&m4.krull_boundary_generators(&[z(2)]).unwrap()));
    }

    #[test]
    fn shortcut_boundaries_agree_with_exhaustion() {
        for n in 1..=36u64 {
            let r = mod_n(n).unwrap();
            let all = r.enumerate().unwrap();
            for x in &all {
                let fast = r.krull_boundary_generators(std::slice::from_ref(x)).unwrap();
                let mut slow = vec![x.clone()];
                slow.extend(all.iter().filter(|a| r.radical_member(&r.mul(a, x), &[])).cloned());
                assert_eq!(r.ideal_generator(&fast), r.ideal_generator(&slow), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn pid_witnesses_collapse() {
        let r = integers();
        for (x0, x1) in [(12, 18), (0, 5), (7, 0), (6, 35), (8, 2), (-9, 6), (1, 1), (10, 4)] {
            let xs = [z(x0), z(x1)];
            let (a, m) = r.collapse_witness(&xs).unwrap();
            assert!(super::super::verify_collapse(&r, &xs, &a, &m).unwrap(), "{x0},{x1}: {a:?} {m:?}");
        }
        let p = poly_over_field(5).unwrap();
        let xs = [p.dom.x(), vec![1, 1]];
        let (a, m) = p.collapse_witness(&xs).unwrap();
        assert!(super::super::verify_collapse(&p, &xs, &a, &m).unwrap());
    }

    #[test]
    fn polynomial_arithmetic() {
        let p = poly_over_field(5).unwrap();
        let d = p.domain();
        let f = d.parse("X^2+4").unwrap();
        let g = d.parse("X+1").unwrap();
        let (q, r) = d.div_rem(&f, &g);
        assert_eq!(d.add(&d.mul(&q, &g), &r), f);
        assert_eq!(d.show(&f), "X^2+4");
        // X^2 + 4 = (X+1)(X+4) over 𝔽5
        assert!(r.is_empty());
        assert!(p.radical_member(&d.parse("X^2+X").unwrap(), &[d.parse("X^3").unwrap()]));
        assert!(!p.radical_member(&d.parse("X+1").unwrap(), &[d.parse("X^3").unwrap()]));
    }

    #[test]
    fn parse_descriptors() {
        assert!(prime_field(6).is_err());
        assert!(mod_n(0).is_err());
        assert_eq!(prime_field(5).unwrap().enumerate().unwrap().len(), 5);
        let q = poly_over_field(3).unwrap().quotient(&[vec![1, 0, 1]]).unwrap();
        assert_eq!(q.enumerate().unwrap().len(), 9);
    }
}
