//! Effective commutative rings: the oracle interface, concrete instances,
//! boundary rings, ring-level dimension deciders and the bridge to the
//! Zariski lattice.

mod dims;
mod euclid;
mod finite;
mod zar;

pub use dims::{
    collapse_value, hdim_ring_leq, heitmann_boundary_ring, heitmann_iterated_member, heitmann_kernel_member, kdim_ring_leq,
    krull_boundary_ring, lower_boundary_ring, ring_kdim_oracle, search_collapse, verify_collapse, CollapseSearch,
    RingBudget, RingStrategy,
};
pub use euclid::{integers, mod_n, poly_over_field, prime_field, Euclid, EuclidRing, GfPoly, Integers};
pub use finite::{FiniteRing, RingTable};
pub use zar::{heit_eq, heit_join, heit_meet, zar_eq, zar_lattice_adapter, zar_leq, HeitElement, ZarAdapter, ZarElement, MAX_POOL};

use crate::error::{Error, Result};
use rand::RngCore;
use std::fmt::Debug;
use std::hash::Hash;

/// Three-valued answer of a membership test that may run out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn known(self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Unknown => None,
        }
    }

    /// Conjunction that lets a definite `No` win over `Unknown`.
    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::No, _) | (_, Decision::No) => Decision::No,
            (Decision::Yes, Decision::Yes) => Decision::Yes,
            _ => Decision::Unknown,
        }
    }

    pub fn require(self, what: &str) -> Result<bool> {
        self.known().ok_or_else(|| Error::Unknown(what.to_string()))
    }
}

/// Largest carrier the generic exhaustive procedures will walk.
pub const ENUMERATION_LIMIT: usize = 4096;

/// A commutative ring with decidable equality and the membership tests the
/// Zariski lattice needs. Elements are always canonical representatives, so
/// `==` on `El` is ring equality.
pub trait RingOracle: Clone + Send + Sync {
    type El: Clone + Eq + Hash + Debug + Send + Sync;

    fn describe(&self) -> String;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn show(&self, a: &Self::El) -> String;
    /// Parses an element; integers are read as multiples of one.
    fn parse(&self, s: &str) -> Result<Self::El>;

    /// Decides `x ∈ √⟨gens⟩`.
    fn radical_member(&self, x: &Self::El, gens: &[Self::El]) -> bool;
    /// Decides `x ∈ ⟨gens⟩`.
    fn ideal_member(&self, x: &Self::El, gens: &[Self::El]) -> bool;
    /// Full carrier, when finite and small enough to walk.
    fn enumerate(&self) -> Option<Vec<Self::El>>;
    /// Deterministic small elements every sampled search starts from.
    fn probes(&self) -> Vec<Self::El>;
    /// A random element of bounded size.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::El;
    /// Candidate multipliers for bounded witness searches.
    fn search_space(&self, coeff: u32) -> Vec<Self::El>;
    /// The quotient `A/⟨gens⟩`.
    fn quotient(&self, gens: &[Self::El]) -> Result<Self>;
    /// Image of `x` in `target`, which must be a quotient of `self`.
    fn project(&self, target: &Self, x: &Self::El) -> Self::El;

    /// Whether `other` is known to be the same ring; used to skip repeated
    /// work, so `false` is always safe.
    fn same_as(&self, _other: &Self) -> bool {
        false
    }

    fn eq(&self, a: &Self::El, b: &Self::El) -> bool {
        a == b
    }

    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::El, e: u32) -> Self::El {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    fn product(&self, xs: &[Self::El]) -> Self::El {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    fn is_zero(&self, a: &Self::El) -> bool {
        *a == self.zero()
    }

    fn is_trivial(&self) -> bool {
        self.one() == self.zero()
    }

    fn one_in_ideal(&self, gens: &[Self::El]) -> bool {
        self.ideal_member(&self.one(), gens)
    }

    /// Decides whether `x` is invertible modulo `⟨gens⟩`.
    fn unit_mod(&self, x: &Self::El, gens: &[Self::El]) -> bool {
        let mut g = gens.to_vec();
        g.push(x.clone());
        self.one_in_ideal(&g)
    }

    /// `x ∈ J_A(⟨gens⟩)`: for every y, `1 + xy` is a unit modulo the ideal.
    /// The default walks the carrier; infinite rings must override.
    fn jacobson_member(&self, x: &Self::El, gens: &[Self::El]) -> Decision {
        match self.enumerate() {
            Some(all) => Decision::from_bool(jacobson_exhaustive(self, &all, x, gens)),
            None => Decision::Unknown,
        }
    }

    /// Generators of `K_A(j) = j + (√0 : j)`.
    fn krull_boundary_generators(&self, j: &[Self::El]) -> Result<Vec<Self::El>> {
        let all = self.enumerate().ok_or_else(|| Error::Ring(format!("{}: no membership method for K_A(j)", self.describe())))?;
        let mut gens = j.to_vec();
        gens.extend(all.iter().filter(|a| j.iter().all(|g| self.radical_member(&self.mul(a, g), &[]))).cloned());
        Ok(gens)
    }

    /// Generators of `H_A(j) = j + (J_A(0) : j)`.
    fn heitmann_boundary_generators(&self, j: &[Self::El]) -> Result<Vec<Self::El>> {
        let all = self.enumerate().ok_or_else(|| Error::Ring(format!("{}: no membership method for H_A(j)", self.describe())))?;
        let mut gens = j.to_vec();
        for a in &all {
            let mut inside = Decision::Yes;
            for g in j {
                inside = inside.and(self.jacobson_member(&self.mul(a, g), &[]));
            }
            match inside {
                Decision::Yes => gens.push(a.clone()),
                Decision::No => {}
                Decision::Unknown => return Err(Error::Unknown(format!("{}: J_A(0) membership", self.describe()))),
            }
        }
        Ok(gens)
    }

    /// `Some(true)` when the ring is known to be an integral domain.
    fn is_domain(&self) -> Option<bool> {
        None
    }

    /// Instance-specific construction of `a_i, m_i` with
    /// `x_0^{m_0}(⋯(x_ℓ^{m_ℓ}(1 + a_ℓx_ℓ) + ⋯) + a_0x_0) = 0`.
    fn collapse_witness(&self, _xs: &[Self::El]) -> Option<(Vec<Self::El>, Vec<u32>)> {
        None
    }

    /// Instance-specific proof that no collapse exists for `xs`.
    fn refute_collapse(&self, xs: &[Self::El]) -> bool {
        // In a domain, x^m(1 + ax) = 0 forces x = 0 or x a unit.
        xs.len() == 1 && self.is_domain() == Some(true) && !self.is_zero(&xs[0]) && !self.one_in_ideal(&xs[..1])
    }

    /// Decides whether the Krull boundary monoid `x^ℕ(1 + xA)` meets 0.
    fn lower_boundary_contains_zero(&self, x: &Self::El, budget: &RingBudget) -> Decision {
        if self.is_zero(x) {
            return Decision::Yes;
        }
        if let Some(all) = self.enumerate() {
            let pows = distinct_powers(self, x);
            let found = all.iter().any(|a| {
                let s = self.add(&self.one(), &self.mul(a, x));
                pows.iter().any(|(p, _)| self.is_zero(&self.mul(p, &s)))
            });
            return Decision::from_bool(found);
        }
        if self.is_domain() == Some(true) {
            // x^n(1 + ax) = 0 with x ≠ 0 forces 1 + ax = 0.
            return Decision::from_bool(self.one_in_ideal(std::slice::from_ref(x)));
        }
        for a in self.search_space(budget.coeff) {
            let s = self.add(&self.one(), &self.mul(&a, x));
            let mut p = self.one();
            for _ in 0..=budget.exp {
                if self.is_zero(&self.mul(&p, &s)) {
                    return Decision::Yes;
                }
                p = self.mul(&p, x);
            }
        }
        Decision::Unknown
    }
}

pub(crate) fn jacobson_exhaustive<R: RingOracle>(r: &R, all: &[R::El], x: &R::El, gens: &[R::El]) -> bool {
    let one = r.one();
    all.iter().all(|y| r.unit_mod(&r.add(&one, &r.mul(x, y)), gens))
}

/// `x^m` for m = 0, 1, … until the sequence repeats, with the first
/// exponent at which each value occurs. Only for finite rings.
pub(crate) fn distinct_powers<R: RingOracle>(r: &R, x: &R::El) -> Vec<(R::El, u32)> {
    let mut out: Vec<(R::El, u32)> = Vec::new();
    let mut p = r.one();
    let mut m = 0u32;
    while !out.iter().any(|(q, _)| *q == p) {
        out.push((p.clone(), m));
        p = r.mul(&p, x);
        m += 1;
    }
    out
}

/// Parses a ring descriptor: `int`, `zmod:<n>`, `gf:<p>`, `poly:gf:<p>`
/// or `table:<file>`.
pub enum AnyRing {
    Int(EuclidRing<Integers>),
    Poly(EuclidRing<GfPoly>),
    Table(FiniteRing),
}

impl AnyRing {
    pub fn parse(desc: &str) -> Result<AnyRing> {
        let bad = || Error::Invalid(format!("bad ring descriptor `{desc}`"));
        let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
        if desc == "int" {
            return Ok(AnyRing::Int(integers()));
        }
        if let Some(n) = desc.strip_prefix("zmod:") {
            return Ok(AnyRing::Int(mod_n(num(n)?)?));
        }
        if let Some(p) = desc.strip_prefix("poly:gf:") {
            return Ok(AnyRing::Poly(poly_over_field(num(p)?)?));
        }
        if let Some(p) = desc.strip_prefix("gf:") {
            return Ok(AnyRing::Int(prime_field(num(p)?)?));
        }
        if let Some(path) = desc.strip_prefix("table:") {
            return Ok(AnyRing::Table(FiniteRing::from_file(path)?));
        }
        Err(bad())
    }

    pub fn describe(&self) -> String {
        match self {
            AnyRing::Int(r) => r.describe(),
            AnyRing::Poly(r) => r.describe(),
            AnyRing::Table(r) => r.describe(),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
