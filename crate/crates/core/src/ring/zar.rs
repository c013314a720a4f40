//! The Zariski lattice of a ring and its Heitmann quotient, through
//! finitely many radicals `D_A(x)`.

use super::{Decision, RingOracle};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::lattice::{Element, Lattice};

/// Largest generator pool accepted by the adapter (2^pool radical tests).
pub const MAX_POOL: usize = 20;

/// `D_A(gens)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZarElement<E> {
    pub gens: Vec<E>,
}

/// `J_A(gens)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeitElement<E> {
    pub gens: Vec<E>,
}

/// `⋀ D(u) ≤ ⋁ D(j)`, i.e. `∏u ∈ √⟨j⟩`.
pub fn zar_leq<R: RingOracle>(r: &R, u: &[R::El], j: &[R::El]) -> bool {
    r.radical_member(&r.product(u), j)
}

pub fn zar_eq<R: RingOracle>(r: &R, a: &ZarElement<R::El>, b: &ZarElement<R::El>) -> bool {
    a.gens.iter().all(|g| r.radical_member(g, &b.gens)) && b.gens.iter().all(|g| r.radical_member(g, &a.gens))
}

impl<E: Clone> ZarElement<E> {
    pub fn new(gens: Vec<E>) -> Self {
        ZarElement { gens }
    }

    /// `D(𝔞) ∧ D(𝔟) = D(𝔞𝔟)`.
    pub fn meet<R: RingOracle<El = E>>(&self, r: &R, other: &Self) -> Self {
        ZarElement { gens: products(r, &self.gens, &other.gens) }
    }

    /// `D(𝔞) ∨ D(𝔟) = D(𝔞 + 𝔟)`.
    pub fn join(&self, other: &Self) -> Self {
        ZarElement { gens: self.gens.iter().chain(&other.gens).cloned().collect() }
    }
}

fn products<R: RingOracle>(r: &R, a: &[R::El], b: &[R::El]) -> Vec<R::El> {
    a.iter().flat_map(|x| b.iter().map(move |y| r.mul(x, y))).collect()
}

impl<E: Clone> HeitElement<E> {
    pub fn new(gens: Vec<E>) -> Self {
        HeitElement { gens }
    }
}

/// Equality of `J_A(𝔞)` and `J_A(𝔟)` by mutual generator membership.
pub fn heit_eq<R: RingOracle>(r: &R, a: &HeitElement<R::El>, b: &HeitElement<R::El>) -> Decision {
    let mut d = Decision::Yes;
    for g in &a.gens {
        d = d.and(r.jacobson_member(g, &b.gens));
    }
    for g in &b.gens {
        d = d.and(r.jacobson_member(g, &a.gens));
    }
    d
}

/// `J(𝔧₁) ∧ J(𝔧₂) = J(𝔧₁𝔧₂)`.
pub fn heit_meet<R: RingOracle>(r: &R, a: &HeitElement<R::El>, b: &HeitElement<R::El>) -> HeitElement<R::El> {
    HeitElement { gens: products(r, &a.gens, &b.gens) }
}

/// `J(𝔧₁) ∨ J(𝔧₂) = J(𝔧₁ + 𝔧₂)`.
pub fn heit_join<R: RingOracle>(_r: &R, a: &HeitElement<R::El>, b: &HeitElement<R::El>) -> HeitElement<R::El> {
    HeitElement { gens: a.gens.iter().chain(&b.gens).cloned().collect() }
}

/// The sublattice of `Zar A` generated by `D(g)` for `g` in a pool, as a
/// finitely presented lattice with one generator per pool element.
#[derive(Clone, Debug)]
pub struct ZarAdapter<R: RingOracle> {
    ring: R,
    pool: Vec<R::El>,
    lattice: Lattice,
}

/// Builds the adapter. An assignment of truth values to the `D(g)` is a
/// model exactly when some prime realizes it: the product of the true
/// generators stays outside the radical of the false ones.
pub fn zar_lattice_adapter<R: RingOracle>(r: &R, pool: &[R::El]) -> Result<ZarAdapter<R>> {
    let mut uniq: Vec<R::El> = Vec::new();
    for g in pool {
        if !uniq.contains(g) {
            uniq.push(g.clone());
        }
    }
    if uniq.len() > MAX_POOL {
        return Err(Error::Invalid(format!("pool of {} elements exceeds the bound of {MAX_POOL}", uniq.len())));
    }
    let n = uniq.len();
    let models: Vec<u64> = (0..1u64 << n).filter(|&v| realizable(r, &uniq, v, None)).collect();
    let labels = uniq.iter().map(|g| label(&r.show(g))).collect();
    let lattice = Lattice::from_models(labels, models)?;
    Ok(ZarAdapter { ring: r.clone(), pool: uniq, lattice })
}

fn label(shown: &str) -> String {
    let inner: String = shown.chars().filter(|c| !c.is_whitespace()).map(|c| match c {
        '(' => '[',
        ')' => ']',
        c => c,
    }).collect();
    format!("D[{inner}]")
}

/// Is there a prime containing the false generators (and `extra`, if
/// given) but none of the true ones?
fn realizable<R: RingOracle>(r: &R, pool: &[R::El], v: u64, extra: Option<(&R::El, bool)>) -> bool {
    let mut truths = Vec::new();
    let mut falses = Vec::new();
    for (i, g) in pool.iter().enumerate() {
        if v >> i & 1 == 1 {
            truths.push(g.clone());
        } else {
            falses.push(g.clone());
        }
    }
    match extra {
        Some((x, true)) => truths.push(x.clone()),
        Some((x, false)) => falses.push(x.clone()),
        None => {}
    }
    !r.radical_member(&r.product(&truths), &falses)
}

impl<R: RingOracle> ZarAdapter<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn pool(&self) -> &[R::El] {
        &self.pool
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// `D(x)` as a lattice element, when it lies in the sublattice. Each
    /// model must then decide `x`.
    pub fn d(&self, x: &R::El) -> Result<Option<Element>> {
        if let Some(i) = self.pool.iter().position(|g| self.ring.radical_member(g, std::slice::from_ref(x)) && self.ring.radical_member(x, std::slice::from_ref(g))) {
            return Ok(Some(Element::generator(i)));
        }
        let models = self.lattice.models();
        let mut set = Bits::new(models.len());
        for (k, &v) in models.iter().enumerate() {
            let can_true = realizable(&self.ring, &self.pool, v, Some((x, true)));
            let can_false = realizable(&self.ring, &self.pool, v, Some((x, false)));
            match (can_true, can_false) {
                (true, false) => set.set(k),
                (false, true) => {}
                _ => return Ok(None),
            }
        }
        let tab = self.lattice.enumerate_elements()?;
        Ok(tab.id_of_set(&set).map(|id| tab.element(id).clone()))
    }

    /// `D(x_1, …, x_n) = ⋁ D(x_i)`.
    pub fn d_ideal(&self, gens: &[R::El]) -> Result<Option<Element>> {
        let mut acc = Element::bottom();
        for g in gens {
            match self.d(g)? {
                Some(e) => acc = acc.join(&e),
                None => return Ok(None),
            }
        }
        Ok(Some(self.lattice.canonical(&acc)?))
    }

    /// Like `d`, but an error when `D(x)` is outside the sublattice.
    pub fn d_req(&self, x: &R::El) -> Result<Element> {
        self.d(x)?.ok_or_else(|| Error::Ring(format!("D({}) is not in the pool's sublattice", self.ring.show(x))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{integers, mod_n};
    use num_bigint::BigInt;

    fn z(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn zar_order() {
        let r = integers();
        assert!(zar_leq(&r, &[z(0)], &[z(7)]));
        assert!(zar_leq(&r, &[z(2), z(3)], &[z(6)]));
        assert!(zar_leq(&r, &[z(6)], &[z(2)]));
        assert!(zar_eq(&r, &ZarElement::new(vec![z(4)]), &ZarElement::new(vec![z(2)])));
        let m = ZarElement::new(vec![z(2)]).meet(&r, &ZarElement::new(vec![z(3)]));
        assert!(zar_eq(&r, &m, &ZarElement::new(vec![z(6)])));
        assert!(zar_eq(&r, &ZarElement::new(vec![z(2)]).join(&ZarElement::new(vec![z(3)])), &ZarElement::new(vec![z(1)])));
    }

    #[test]
    fn heitmann_elements() {
        let r = mod_n(36).unwrap();
        let m = heit_meet(&r, &HeitElement::new(vec![z(2)]), &HeitElement::new(vec![z(3)]));
        assert_eq!(heit_eq(&r, &m, &HeitElement::new(vec![z(6)])), Decision::Yes);
        let r12 = mod_n(12).unwrap();
        assert_eq!(heit_eq(&r12, &HeitElement::new(vec![z(4)]), &HeitElement::new(vec![z(2)])), Decision::Yes);
        assert_eq!(heit_eq(&r12, &HeitElement::new(vec![z(3)]), &HeitElement::new(vec![z(2)])), Decision::No);
        let j = heit_join(&r12, &HeitElement::new(vec![z(3)]), &HeitElement::new(vec![z(2)]));
        assert_eq!(heit_eq(&r12, &j, &HeitElement::new(vec![z(1)])), Decision::Yes);
    }

    #[test]
    fn adapter_sizes() {
        let a = zar_lattice_adapter(&integers(), &[z(2), z(3)]).unwrap();
        assert_eq!(a.lattice().enumerate_elements().unwrap().len(), 5);
        let six = a.d(&z(6)).unwrap().unwrap();
        let meet = a.lattice().meet(&Element::generator(0), &Element::generator(1)).unwrap();
        assert!(a.lattice().equal(&six, &meet).unwrap());
        assert!(a.lattice().equal(&a.d(&z(1)).unwrap().unwrap(), &a.lattice().top()).unwrap());
        let m4 = mod_n(4).unwrap();
        let b = zar_lattice_adapter(&m4, &[z(2)]).unwrap();
        assert_eq!(b.lattice().enumerate_elements().unwrap().len(), 2);
        let c = zar_lattice_adapter(&m4, &[z(0), z(1)]).unwrap();
        assert_eq!(c.lattice().enumerate_elements().unwrap().len(), 2);
        assert!(zar_lattice_adapter(&integers(), &(1..=21).map(z).collect::<Vec<_>>()).is_err());
    }

    #[test]
    fn adapter_order_matches_zar_leq() {
        let r = mod_n(60).unwrap();
        let pool: Vec<BigInt> = [2, 3, 5, 4, 6, 10].iter().map(|&k| z(k)).collect();
        let a = zar_lattice_adapter(&r, &pool).unwrap();
        for (i, x) in pool.iter().enumerate() {
            for (j, y) in pool.iter().enumerate() {
                let lat = a.lattice().leq(&Element::generator(i), &Element::generator(j)).unwrap();
                assert_eq!(lat, zar_leq(&r, std::slice::from_ref(x), std::slice::from_ref(y)), "{x} {y}");
            }
        }
    }
}
