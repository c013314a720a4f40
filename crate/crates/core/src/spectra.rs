//! Brute-force classical semantics of finite lattices: prime spectra and the
//! dimension and radical oracles derived from them. Nothing here calls the
//! constructive deciders; the order of points is plain set inclusion.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::ideals::{conductor, quotient, quotient_by_preorder, IdealHandle, QuotientMap};
use crate::lattice::{downset_lattice, order_isomorphic, Element, ElementTable, FinitePoset, Lattice};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Arc;

/// A prime ideal as a set of element ids; its complement is a prime filter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePoint {
    pub ideal: Bits,
}

impl PrimePoint {
    pub fn contains(&self, id: usize) -> bool {
        self.ideal.get(id)
    }

    pub fn as_ideal(&self, host: &Lattice) -> IdealHandle {
        IdealHandle::from_members(host, self.ideal.clone())
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumPoset {
    pub points: Vec<PrimePoint>,
    /// `order[i][j]` iff point `i` is contained in point `j`.
    pub order: Vec<Vec<bool>>,
}

fn subset(a: &Bits, b: &Bits) -> bool {
    a.ones().all(|i| b.get(i))
}

impl SpectrumPoset {
    pub fn from_points(points: Vec<PrimePoint>) -> Self {
        let order = points.iter().map(|p| points.iter().map(|q| subset(&p.ideal, &q.ideal)).collect()).collect();
        SpectrumPoset { points, order }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn poset(&self) -> FinitePoset {
        FinitePoset::from_fn(self.len(), |a, b| self.order[a][b]).expect("inclusion is a partial order")
    }

    pub fn maximal(&self) -> Vec<PrimePoint> {
        self.poset().maximal().into_iter().map(|i| self.points[i].clone()).collect()
    }

    pub fn minimal(&self) -> Vec<PrimePoint> {
        self.poset().minimal().into_iter().map(|i| self.points[i].clone()).collect()
    }
}

/// Kernels of all maps `T → 2`, one per model.
pub fn prime_ideals(t: &Lattice) -> Result<SpectrumPoset> {
    let tab = t.enumerate_elements()?;
    let mut seen = std::collections::HashSet::new();
    let points = (0..t.num_models())
        .map(|k| PrimePoint { ideal: tab.collect(|e| !tab.set(e).get(k)) })
        .filter(|p| seen.insert(p.ideal.clone()))
        .collect();
    Ok(SpectrumPoset::from_points(points))
}

pub fn maximal_ideals(t: &Lattice) -> Result<Vec<PrimePoint>> {
    Ok(prime_ideals(t)?.maximal())
}

pub fn minimal_primes(t: &Lattice) -> Result<Vec<PrimePoint>> {
    Ok(prime_ideals(t)?.minimal())
}

/// Length of the longest chain of primes; `-1` for the trivial lattice.
pub fn kdim_oracle(t: &Lattice) -> Result<i64> {
    Ok(prime_ideals(t)?.poset().height())
}

/// Intersection of the maximal ideals containing `j`.
pub fn jacobson_oracle(t: &Lattice, j: &IdealHandle) -> Result<IdealHandle> {
    let tab = t.enumerate_elements()?;
    if tab.len() == 1 {
        return Err(Error::Invalid("trivial lattice has no maximal ideals".into()));
    }
    let members = j.members()?;
    let mut acc = Bits::full(tab.len());
    for m in maximal_ideals(t)? {
        if subset(&members, &m.ideal) {
            acc = acc.and(&m.ideal);
        }
    }
    Ok(IdealHandle::from_members(t, acc))
}

/// Primes equal to the intersection of the maximal ideals above them.
pub fn jspec_points(t: &Lattice) -> Result<Vec<PrimePoint>> {
    if t.is_trivial() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for p in prime_ideals(t)?.points {
        if jacobson_oracle(t, &p.as_ideal(t))?.members()? == p.ideal {
            out.push(p);
        }
    }
    Ok(out)
}

/// `𝔇(a)`: indices of the points not containing `a`.
pub fn d_set(points: &[PrimePoint], a: usize) -> Bits {
    Bits::from_indices(points.len(), points.iter().enumerate().filter(|(_, p)| !p.contains(a)).map(|(i, _)| i))
}

/// Quotient by `a ⪯ b ⇔ 𝔇(a) ∩ Z ⊆ 𝔇(b) ∩ Z`.
pub fn patch_closure(t: &Lattice, z: &[PrimePoint]) -> Result<(Lattice, QuotientMap)> {
    let tab = t.enumerate_elements()?;
    let d: Vec<Bits> = tab.ids().map(|a| d_set(z, a)).collect();
    quotient_by_preorder(t, |a, b| subset(&d[a], &d[b]))
}

pub fn jspec_lattice(t: &Lattice) -> Result<Lattice> {
    Ok(patch_closure(t, &maximal_ideals(t)?)?.0)
}

/// Primes of the target of `pi`, as ideals of its source.
pub fn pulled_back_primes(pi: &QuotientMap) -> Result<Vec<PrimePoint>> {
    let target_primes = prime_ideals(pi.target())?;
    let map = pi.id_map()?;
    Ok(target_primes
        .points
        .iter()
        .map(|p| PrimePoint { ideal: Bits::from_indices(map.len(), map.iter().enumerate().filter(|(_, &y)| p.contains(y)).map(|(x, _)| x)) })
        .collect())
}

/// `T/(a = 1)`, whose spectrum is `{p : a ∉ p}`.
pub fn open_subspace(t: &Lattice, a: &Element) -> Result<(Lattice, QuotientMap)> {
    quotient(t, &[], std::slice::from_ref(a))
}

/// `T/(b = 0)`, whose spectrum is `{p : b ∈ p}`.
pub fn closed_subspace(t: &Lattice, b: &Element) -> Result<(Lattice, QuotientMap)> {
    quotient(t, std::slice::from_ref(b), &[])
}

/// `T/((a : b) = 0)`, whose spectrum is the closure of `𝔙(a) ∩ 𝔇(b)`.
pub fn locally_closed_closure(t: &Lattice, a: &Element, b: &Element) -> Result<(Lattice, QuotientMap)> {
    let c = conductor(&IdealHandle::principal(t, a)?, std::slice::from_ref(b))?;
    quotient(t, &[c.generator()?], &[])
}

/// Pointwise closure of `𝔙(a) ∩ 𝔇(b)`: primes containing one of its points.
pub fn locally_closed_closure_points(t: &Lattice, a: &Element, b: &Element) -> Result<Vec<PrimePoint>> {
    let tab = t.enumerate_elements()?;
    let (ai, bi) = (tab.id_of(t, a)?, tab.id_of(t, b)?);
    let all = prime_ideals(t)?.points;
    let base: Vec<&PrimePoint> = all.iter().filter(|p| p.contains(ai) && !p.contains(bi)).collect();
    Ok(all.iter().filter(|q| base.iter().any(|p| subset(&p.ideal, &q.ideal))).cloned().collect())
}

/// `downset_lattice(Spec T) ≍ T`.
pub fn spectrum_roundtrip(t: &Lattice) -> Result<bool> {
    let spec = prime_ideals(t)?;
    order_isomorphic(&downset_lattice(&spec.poset())?, t)
}

fn heitmann_oracle_generator(tab: &ElementTable, j0: &Bits, x: usize) -> usize {
    let ann = tab.ids().filter(|&u| j0.get(tab.meet(x, u))).fold(tab.bottom(), |acc, u| tab.join(acc, u));
    tab.join(x, ann)
}

/// Least `ℓ` with `Hdim T ≤ ℓ`, recomputed with radicals taken as
/// intersections of maximal ideals.
pub fn hdim_oracle(t: &Lattice) -> Result<i64> {
    let mut memo = HashMap::new();
    hdim_oracle_rec(t, &mut memo)
}

fn hdim_oracle_rec(t: &Lattice, memo: &mut HashMap<Vec<u64>, i64>) -> Result<i64> {
    if let Some(&d) = memo.get(t.models()) {
        return Ok(d);
    }
    let tab = t.enumerate_elements()?;
    let d = if tab.len() == 1 {
        -1
    } else {
        let j0 = jacobson_oracle(t, &IdealHandle::zero(t))?.members()?;
        let mut best = -1;
        for g in t.generators() {
            let h = heitmann_oracle_generator(&tab, &j0, tab.id_of(t, &g)?);
            let (b, _) = quotient(t, &[tab.element(h).clone()], &[])?;
            best = best.max(hdim_oracle_rec(&b, memo)?);
        }
        (best + 1).max(0)
    };
    memo.insert(t.models().to_vec(), d);
    Ok(d)
}

/// `He(T)` built from `a ⪯ b ⇔ J(↓a) ⊆ J(↓b)` with oracle radicals.
pub fn heitmann_lattice_oracle(t: &Lattice) -> Result<Lattice> {
    let tab = t.enumerate_elements()?;
    if tab.len() == 1 {
        return Ok(t.clone());
    }
    let rad: Vec<Bits> = tab.ids().map(|a| jacobson_oracle(t, &IdealHandle::principal(t, tab.element(a))?)?.members()).collect::<Result<_>>()?;
    Ok(quotient_by_preorder(t, |a, b| subset(&rad[a], &rad[b]))?.0)
}

pub fn jdim_oracle(t: &Lattice) -> Result<i64> {
    kdim_oracle(&heitmann_lattice_oracle(t)?)
}

/// Label of a point: the generator of the prime ideal.
pub fn point_label(t: &Lattice, tab: &Arc<ElementTable>, p: &PrimePoint) -> String {
    let g = p.ideal.ones().fold(tab.bottom(), |acc, i| tab.join(acc, i));
    t.display(tab.element(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumJson {
    pub points: Vec<String>,
    pub order: Vec<(usize, usize)>,
}

/// Points labelled by their prime ideals and all strict inclusion pairs.
pub fn spectrum_json(t: &Lattice, points: &[PrimePoint]) -> Result<SpectrumJson> {
    let tab = t.enumerate_elements()?;
    let poset = SpectrumPoset::from_points(points.to_vec()).poset();
    Ok(SpectrumJson { points: points.iter().map(|p| point_label(t, &tab, p)).collect(), order: poset.strict_pairs() })
}

/// Hasse diagram in DOT; edges point from smaller to larger primes.
pub fn spectrum_dot(t: &Lattice, points: &[PrimePoint]) -> Result<String> {
    let tab = t.enumerate_elements()?;
    let poset = SpectrumPoset::from_points(points.to_vec()).poset();
    let mut s = String::from("digraph spectrum {\n  rankdir=BT;\n");
    for (i, p) in points.iter().enumerate() {
        s.push_str(&format!("  p{i} [label=\"{}\"];\n", point_label(t, &tab, p).replace('"', "\\\"")));
    }
    for (a, b) in poset.covers() {
        s.push_str(&format!("  p{a} -> p{b};\n"));
    }
    s.push_str("}\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::jacobson;
    use crate::lattice::{boolean, chain, free_lattice, trivial};

    #[test]
    fn spectra_examples() {
        assert_eq!(prime_ideals(&free_lattice(0)).unwrap().len(), 1);
        let c = prime_ideals(&chain(3)).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.poset().height(), 1);
        let b = prime_ideals(&boolean(2)).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b.poset().height(), 0);
    }

    #[test]
    fn max_min_examples() {
        let c = chain(3);
        let m = maximal_ideals(&c).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].ideal.ones().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(maximal_ideals(&boolean(2)).unwrap().len(), 2);
        assert_eq!(minimal_primes(&boolean(2)).unwrap().len(), 2);
        assert!(maximal_ideals(&trivial()).unwrap().is_empty());
        assert!(minimal_primes(&trivial()).unwrap().is_empty());
    }

    #[test]
    fn kdim_oracle_examples() {
        assert_eq!(kdim_oracle(&free_lattice(0)).unwrap(), 0);
        for n in 1..=7 {
            assert_eq!(kdim_oracle(&chain(n)).unwrap(), n as i64 - 2);
        }
        assert_eq!(kdim_oracle(&free_lattice(2)).unwrap(), 2);
    }

    #[test]
    fn jacobson_oracle_examples() {
        let c = chain(3);
        let j = jacobson_oracle(&c, &IdealHandle::zero(&c)).unwrap();
        assert_eq!(j.members().unwrap().ones().collect::<Vec<_>>(), vec![0, 1]);
        let b = boolean(3);
        assert_eq!(jacobson_oracle(&b, &IdealHandle::zero(&b)).unwrap().members().unwrap().count(), 1);
        assert_eq!(jacobson_oracle(&c, &IdealHandle::whole(&c)).unwrap().members().unwrap().count(), 3);
        assert!(jacobson_oracle(&trivial(), &IdealHandle::zero(&trivial())).is_err());
        let f = free_lattice(2);
        for a in f.enumerate_elements().unwrap().elements() {
            let p = IdealHandle::principal(&f, a).unwrap();
            assert!(jacobson(&p).unwrap().same_members(&jacobson_oracle(&f, &p).unwrap()).unwrap());
        }
    }

    #[test]
    fn jspec_examples() {
        assert_eq!(jspec_points(&chain(3)).unwrap(), maximal_ideals(&chain(3)).unwrap());
        assert_eq!(jspec_points(&boolean(2)).unwrap().len(), 2);
        assert!(jspec_points(&trivial()).unwrap().is_empty());
    }

    #[test]
    fn patch_closure_examples() {
        let f = free_lattice(2);
        let all = prime_ideals(&f).unwrap().points;
        assert!(patch_closure(&f, &all).unwrap().0.same_models(&f));
        assert!(patch_closure(&f, &[]).unwrap().0.is_trivial());
        let c = chain(3);
        assert!(order_isomorphic(&jspec_lattice(&c).unwrap(), &free_lattice(0)).unwrap());
        let b = boolean(2);
        assert!(order_isomorphic(&jspec_lattice(&b).unwrap(), &b).unwrap());
        assert!(jspec_lattice(&trivial()).unwrap().is_trivial());
    }

    #[test]
    fn subspace_examples() {
        let f = free_lattice(2);
        assert!(open_subspace(&f, &Element::top()).unwrap().0.same_models(&f));
        assert!(closed_subspace(&f, &Element::bottom()).unwrap().0.same_models(&f));
        let c = chain(3);
        let m = c.gen("m").unwrap();
        let (q, pi) = closed_subspace(&c, &m).unwrap();
        assert!(order_isomorphic(&q, &free_lattice(0)).unwrap());
        let pts = pulled_back_primes(&pi).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].contains(1));
    }

    #[test]
    fn locally_closed_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        assert!(locally_closed_closure(&c, &Element::bottom(), &m).unwrap().0.same_models(&c));
        let f = free_lattice(2);
        let tab = f.enumerate_elements().unwrap();
        for a in tab.elements() {
            for b in tab.elements() {
                let (_, pi) = locally_closed_closure(&f, a, b).unwrap();
                let mut got: Vec<Bits> = pulled_back_primes(&pi).unwrap().into_iter().map(|p| p.ideal).collect();
                let mut want: Vec<Bits> = locally_closed_closure_points(&f, a, b).unwrap().into_iter().map(|p| p.ideal).collect();
                got.sort();
                want.sort();
                assert_eq!(got, want);
            }
            let (c1, _) = locally_closed_closure(&f, a, &Element::top()).unwrap();
            assert!(c1.same_models(&closed_subspace(&f, a).unwrap().0));
        }
    }

    #[test]
    fn roundtrips() {
        for l in [chain(4), free_lattice(2), free_lattice(3), boolean(3), free_lattice(0)] {
            assert!(spectrum_roundtrip(&l).unwrap());
        }
        let p = FinitePoset::from_pairs(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let spec = prime_ideals(&downset_lattice(&p).unwrap()).unwrap();
        assert!(spec.poset().isomorphic(&p));
    }

    #[test]
    fn dim_oracles() {
        for l in [chain(3), boolean(2)] {
            assert_eq!(hdim_oracle(&l).unwrap(), 0);
            assert_eq!(jdim_oracle(&l).unwrap(), 0);
        }
        assert_eq!(hdim_oracle(&trivial()).unwrap(), -1);
        assert_eq!(jdim_oracle(&trivial()).unwrap(), -1);
    }

    #[test]
    fn exports() {
        let c = chain(3);
        let pts = prime_ideals(&c).unwrap().points;
        let j = spectrum_json(&c, &pts).unwrap();
        assert_eq!(j.points.len(), 2);
        assert_eq!(j.order.len(), 1);
        let b = boolean(2);
        let dot = spectrum_dot(&b, &maximal_ideals(&b).unwrap()).unwrap();
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("[label=").count(), 2);
    }
}
