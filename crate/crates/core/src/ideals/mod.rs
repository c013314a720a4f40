//! Ideals, filters, conductors, Jacobson radicals, quotients, coverings and gluing.

mod glue;
mod handle;

pub use glue::{diagram_from_ideal_cover, glue, limit_of_filter_cover, limit_of_ideal_cover, GluedLattice, GluingDiagram, GluingDoc};
pub use handle::{FilterHandle, FilterSide, Handle, IdealHandle, IdealSide, Side};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::fault::{self, Fault};
use crate::lattice::{Element, Lattice, LatticeHom, Relation};

pub fn ideal_from(host: &Lattice, s: &[Element]) -> Result<IdealHandle> {
    IdealHandle::generated(host, s)
}

pub fn filter_from(host: &Lattice, s: &[Element]) -> Result<FilterHandle> {
    FilterHandle::generated(host, s)
}

/// `(b : A) = {x | a ∧ x ∈ b for all a ∈ A}`.
pub fn conductor(b: &IdealHandle, a: &[Element]) -> Result<IdealHandle> {
    let host = b.host();
    for e in a {
        host.check(e)?;
    }
    let t = host.enumerate_elements()?;
    let members = b.members()?;
    let a_ids = a.iter().map(|e| t.id_of(host, e)).collect::<Result<Vec<_>>>()?;
    let bits = t.collect(|x| a_ids.iter().all(|&ai| members.get(t.meet(ai, x))));
    Ok(IdealHandle::from_members(host, bits))
}

/// `(f \ f') = {x | a ∨ x ∈ f for all a ∈ f'}`. When `f'` carries
/// generators only those are tested.
pub fn difference(f: &FilterHandle, f2: &FilterHandle) -> Result<FilterHandle> {
    let host = f.host();
    if !f2.host().same_models(host) {
        return Err(Error::Invalid("filters live on different lattices".into()));
    }
    let t = host.enumerate_elements()?;
    let members = f.members()?;
    let probe: Vec<usize> = match f2.generators() {
        Some(gs) => gs.iter().map(|g| t.id_of(host, g)).collect::<Result<_>>()?,
        None => f2.members()?.ones().collect(),
    };
    let bits = t.collect(|x| probe.iter().all(|&a| members.get(t.join(a, x))));
    Ok(FilterHandle::from_members(host, bits))
}

/// Jacobson radical: `a` belongs iff every `x` with `a ∨ x = 1` already
/// satisfies `z ∨ x = 1` for some `z` in the ideal.
pub fn jacobson(j: &IdealHandle) -> Result<IdealHandle> {
    let host = j.host();
    let t = host.enumerate_elements()?;
    if fault::active(Fault::Jacobson) {
        return Ok(IdealHandle::from_members(host, j.members()?));
    }
    let g = j.generator_id()?;
    let top = t.top();
    let far: Vec<usize> = t.ids().filter(|&x| t.join(g, x) != top).collect();
    let bits = t.collect(|a| far.iter().all(|&x| t.join(a, x) != top));
    Ok(IdealHandle::from_members(host, bits))
}

/// Every principal ideal equals its Jacobson radical.
pub fn is_weakly_jacobson(host: &Lattice) -> Result<bool> {
    let t = host.enumerate_elements()?;
    for a in t.ids() {
        let p = IdealHandle::principal(host, t.element(a))?;
        if jacobson(&p)?.members()? != p.members()? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    /// `T/(s = 0)`
    IdealKill(Element),
    /// `T/(u = 1)`
    FilterKill(Element),
    /// `T/(j = 0, u = 1)`
    Pair { zero: Element, one: Element },
    /// Quotient by a compatible preorder.
    Preorder,
}

/// Canonical surjection from a lattice onto one of its quotients. Both
/// sides share generators, so the map is the identity on element syntax.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: Lattice,
    target: Lattice,
    kind: QuotientKind,
    keep: Vec<usize>,
}

impl QuotientMap {
    fn new(source: &Lattice, target: &Lattice, kind: QuotientKind) -> Self {
        let keep = target.models().iter().map(|v| source.models().binary_search(v).expect("target models come from source")).collect();
        QuotientMap { source: source.clone(), target: target.clone(), kind, keep }
    }

    pub fn source(&self) -> &Lattice {
        &self.source
    }

    pub fn target(&self) -> &Lattice {
        &self.target
    }

    pub fn kind(&self) -> &QuotientKind {
        &self.kind
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.source.check(x)?;
        Ok(x.clone())
    }

    /// Model set in the target of a source model set.
    pub fn map_set(&self, s: &Bits) -> Bits {
        s.select(&self.keep)
    }

    /// Target id of every source id.
    pub fn id_map(&self) -> Result<Vec<usize>> {
        let ts = self.source.enumerate_elements()?;
        let tt = self.target.enumerate_elements()?;
        Ok(ts.ids().map(|i| tt.id_of_set(&self.map_set(ts.set(i))).expect("quotient image exists")).collect())
    }

    pub fn hom(&self) -> LatticeHom {
        LatticeHom::on_generators(&self.source, &self.target).expect("quotient maps are homomorphisms")
    }
}

fn kill_relations(zero: &[Element], one: &[Element]) -> Vec<Relation> {
    let mut rels = Vec::new();
    for j in zero {
        for t in j.terms() {
            rels.push(Relation { lhs: vec![*t], rhs: Vec::new() });
        }
    }
    for u in one {
        for clause in u.dual().terms() {
            rels.push(Relation { lhs: Vec::new(), rhs: clause.gens().collect() });
        }
    }
    rels
}

/// `T/(J = 0, U = 1)`.
pub fn quotient(t: &Lattice, zero: &[Element], one: &[Element]) -> Result<(Lattice, QuotientMap)> {
    for e in zero.iter().chain(one) {
        t.check(e)?;
    }
    let target = t.restrict(|v| zero.iter().all(|j| !j.eval(v)) && one.iter().all(|u| u.eval(v)), kill_relations(zero, one));
    let kind = match (zero.is_empty(), one.is_empty()) {
        (_, true) => QuotientKind::IdealKill(t.join_all(zero)?),
        (true, false) => QuotientKind::FilterKill(t.meet_all(one)?),
        (false, false) => QuotientKind::Pair { zero: t.join_all(zero)?, one: t.meet_all(one)? },
    };
    let map = QuotientMap::new(t, &target, kind);
    Ok((target, map))
}

/// Quotient by an ideal: `T/(𝔞 = 0)`.
pub fn quotient_by_ideal(i: &IdealHandle) -> Result<(Lattice, QuotientMap)> {
    quotient(i.host(), &[i.generator()?], &[])
}

/// Quotient by a filter: `T/(𝔣 = 1)`.
pub fn quotient_by_filter(f: &FilterHandle) -> Result<(Lattice, QuotientMap)> {
    quotient(f.host(), &[], &[f.generator()?])
}

/// Quotient by the lattice preorder `le` on element ids: models must send
/// `a` to at most `b` whenever `le(a, b)`.
pub fn quotient_by_preorder(t: &Lattice, le: impl Fn(usize, usize) -> bool) -> Result<(Lattice, QuotientMap)> {
    let tab = t.enumerate_elements()?;
    let mut bad = Bits::new(t.num_models());
    for a in tab.ids() {
        for b in tab.ids() {
            if !tab.set(a).is_subset(tab.set(b)) && le(a, b) {
                bad = bad.or(&tab.set(a).and_not(tab.set(b)));
            }
        }
    }
    let kept: Vec<u64> = t.models().iter().enumerate().filter(|(k, _)| !bad.get(*k)).map(|(_, &v)| v).collect();
    let target = t.restrict(|v| kept.binary_search(&v).is_ok(), Vec::new());
    let map = QuotientMap::new(t, &target, QuotientKind::Preorder);
    Ok((target, map))
}

/// `π(I) = ↓π(g)` for the generator `g` of `I`.
pub fn ideal_image(pi: &QuotientMap, i: &IdealHandle) -> Result<IdealHandle> {
    if !i.host().same_models(pi.source()) {
        return Err(Error::Invalid("ideal does not live on the source of the map".into()));
    }
    IdealHandle::principal(pi.target(), &pi.apply(&i.generator()?)?)
}

/// `π⁻¹(I)` for an ideal `I` of the target.
pub fn ideal_preimage(pi: &QuotientMap, i: &IdealHandle) -> Result<IdealHandle> {
    if !i.host().same_models(pi.target()) {
        return Err(Error::Invalid("ideal does not live on the target of the map".into()));
    }
    let members = i.members()?;
    let map = pi.id_map()?;
    let bits = Bits::from_indices(map.len(), map.iter().enumerate().filter(|(_, &y)| members.get(y)).map(|(x, _)| x));
    Ok(IdealHandle::from_members(pi.source(), bits))
}

pub fn filter_image(pi: &QuotientMap, f: &FilterHandle) -> Result<FilterHandle> {
    if !f.host().same_models(pi.source()) {
        return Err(Error::Invalid("filter does not live on the source of the map".into()));
    }
    FilterHandle::principal(pi.target(), &pi.apply(&f.generator()?)?)
}

pub fn filter_preimage(pi: &QuotientMap, f: &FilterHandle) -> Result<FilterHandle> {
    if !f.host().same_models(pi.target()) {
        return Err(Error::Invalid("filter does not live on the target of the map".into()));
    }
    let members = f.members()?;
    let map = pi.id_map()?;
    let bits = Bits::from_indices(map.len(), map.iter().enumerate().filter(|(_, &y)| members.get(y)).map(|(x, _)| x));
    Ok(FilterHandle::from_members(pi.source(), bits))
}

fn intersection<S: Side>(hs: &[Handle<S>]) -> Result<Bits> {
    let first = hs.first().ok_or_else(|| Error::Invalid("empty family".into()))?;
    let mut acc = first.members()?;
    for h in &hs[1..] {
        if !h.host().same_models(first.host()) {
            return Err(Error::Invalid("family spans different lattices".into()));
        }
        acc = acc.and(&h.members()?);
    }
    Ok(acc)
}

/// The ideals cover `T` when their intersection is `{0}`.
pub fn covers_ideals(hs: &[IdealHandle]) -> Result<bool> {
    let inter = intersection(hs)?;
    let t = hs[0].host().enumerate_elements()?;
    Ok(inter.count() == 1 && inter.get(t.bottom()))
}

/// The filters cover `T` when their intersection is `{1}`.
pub fn covers_filters(hs: &[FilterHandle]) -> Result<bool> {
    let inter = intersection(hs)?;
    let t = hs[0].host().enumerate_elements()?;
    Ok(inter.count() == 1 && inter.get(t.top()))
}

/// `a ≡ b` modulo the principal ideal `↓s`.
pub fn congruent_mod(t: &Lattice, a: &Element, b: &Element, s: &Element) -> Result<bool> {
    t.equal(&t.join(a, s)?, &t.join(b, s)?)
}

/// Solve `y ≡ x_i mod ↓s_i` for all `i`; the answer is `⋀ (x_i ∨ s_i)`.
pub fn chinese_solve(t: &Lattice, s: &[Element], x: &[Element]) -> Result<Element> {
    if s.len() != x.len() {
        return Err(Error::Invalid("moduli and residues differ in length".into()));
    }
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let sij = t.join(&s[i], &s[j])?;
            if !congruent_mod(t, &x[i], &x[j], &sij)? {
                return Err(Error::Incompatible(i, j));
            }
        }
    }
    let mut y = Element::top();
    for (si, xi) in s.iter().zip(x) {
        y = t.meet(&y, &t.join(xi, si)?)?;
    }
    t.canonical(&y)
}

/// Splitting of `T → T/(s = 0)`: `y ↦ y ∨ s`, landing in `↑s`.
#[derive(Clone, Debug)]
pub struct Section {
    source: Lattice,
    s: Element,
}

impl Section {
    pub fn apply(&self, y: &Element) -> Result<Element> {
        self.source.canonical(&self.source.join(y, &self.s)?)
    }

    pub fn s(&self) -> &Element {
        &self.s
    }
}

pub fn section(pi: &QuotientMap) -> Result<Section> {
    match pi.kind() {
        QuotientKind::IdealKill(s) => Ok(Section { source: pi.source().clone(), s: s.clone() }),
        _ => Err(Error::NotPrincipal("section needs a quotient by a principal ideal".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain, free_lattice, order_isomorphic};

    fn ids(h: &IdealHandle) -> Vec<usize> {
        h.members().unwrap().ones().collect()
    }

    #[test]
    fn ideal_from_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        assert_eq!(ids(&ideal_from(&c, &[]).unwrap()), vec![0]);
        assert_eq!(ids(&ideal_from(&c, std::slice::from_ref(&m)).unwrap()), vec![0, 1]);
        let f = filter_from(&c, &[m]).unwrap();
        assert_eq!(f.members().unwrap().ones().collect::<Vec<_>>(), vec![1, 2]);
        assert!(matches!(ideal_from(&c, &[Element::generator(5)]), Err(Error::ForeignGenerator)));
    }

    #[test]
    fn conductor_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        let zero = IdealHandle::zero(&c);
        assert_eq!(ids(&conductor(&zero, std::slice::from_ref(&m)).unwrap()), vec![0]);
        assert_eq!(ids(&conductor(&zero, &[Element::bottom()]).unwrap()), vec![0, 1, 2]);
        let dm = IdealHandle::principal(&c, &m).unwrap();
        assert_eq!(ids(&conductor(&dm, &[Element::top()]).unwrap()), ids(&dm));
    }

    #[test]
    fn difference_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        let one = FilterHandle::principal(&c, &Element::top()).unwrap();
        let um = FilterHandle::principal(&c, &m).unwrap();
        let d = difference(&one, &um).unwrap();
        assert_eq!(d.members().unwrap().ones().collect::<Vec<_>>(), vec![2]);
        let whole = difference(&um, &one).unwrap();
        assert_eq!(whole.members().unwrap().count(), 3);
        let zero = FilterHandle::principal(&c, &Element::bottom()).unwrap();
        assert_eq!(difference(&um, &zero).unwrap().members().unwrap(), um.members().unwrap());
    }

    #[test]
    fn jacobson_examples() {
        let c = chain(3);
        assert_eq!(ids(&jacobson(&IdealHandle::zero(&c)).unwrap()), vec![0, 1]);
        let b = boolean(2);
        assert_eq!(ids(&jacobson(&IdealHandle::zero(&b)).unwrap()), vec![0]);
        let whole = IdealHandle::whole(&c);
        assert_eq!(ids(&jacobson(&whole).unwrap()), vec![0, 1, 2]);
        assert!(is_weakly_jacobson(&b).unwrap());
        assert!(!is_weakly_jacobson(&c).unwrap());
        assert!(is_weakly_jacobson(&free_lattice(0)).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        let (q, _) = quotient(&c, &[], &[]).unwrap();
        assert!(q.same_models(&c));
        let (q, pi) = quotient(&c, std::slice::from_ref(&m), &[]).unwrap();
        assert!(order_isomorphic(&q, &free_lattice(0)).unwrap());
        assert!(q.equal(&pi.apply(&m).unwrap(), &Element::bottom()).unwrap());
        // T/(a = 0) ≅ ↑a
        let f = free_lattice(2);
        let x = f.gen("x").unwrap();
        let (q, _) = quotient(&f, std::slice::from_ref(&x), &[]).unwrap();
        let up = FilterHandle::principal(&f, &x).unwrap().members().unwrap().count();
        assert_eq!(q.enumerate_elements().unwrap().len(), up);
    }

    #[test]
    fn transport_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        let (q, pi) = quotient(&c, std::slice::from_ref(&m), &[]).unwrap();
        let zero_q = IdealHandle::zero(&q);
        let pre = ideal_preimage(&pi, &zero_q).unwrap();
        assert_eq!(ids(&pre), vec![0, 1]);
        let lhs = ideal_preimage(&pi, &jacobson(&zero_q).unwrap()).unwrap();
        let rhs = jacobson(&pre).unwrap();
        assert_eq!(ids(&lhs), ids(&rhs));
        let f = free_lattice(2);
        let x = f.gen("x").unwrap();
        let y = f.gen("y").unwrap();
        let (_, pi) = quotient(&f, std::slice::from_ref(&y), &[]).unwrap();
        let img = ideal_image(&pi, &IdealHandle::principal(&f, &x).unwrap()).unwrap();
        assert!(img.contains(&x).unwrap() && !img.contains(&Element::top()).unwrap());
    }

    #[test]
    fn cover_examples() {
        let b = boolean(2);
        let (a, na) = (b.gen("a").unwrap(), b.gen("b").unwrap());
        let cover = [IdealHandle::principal(&b, &a).unwrap(), IdealHandle::principal(&b, &na).unwrap()];
        assert!(covers_ideals(&cover).unwrap());
        assert!(covers_ideals(&[IdealHandle::zero(&b)]).unwrap());
        let c = chain(3);
        assert!(!covers_ideals(&[IdealHandle::principal(&c, &c.gen("m").unwrap()).unwrap()]).unwrap());
    }

    #[test]
    fn chinese_examples() {
        let b = boolean(2);
        let (a, na) = (b.gen("a").unwrap(), b.gen("b").unwrap());
        let y = chinese_solve(&b, &[a.clone(), na.clone()], &[Element::bottom(), Element::top()]).unwrap();
        assert!(b.equal(&y, &a).unwrap());
        let c = b.join(&a, &na).unwrap();
        let y = chinese_solve(&b, &[a.clone(), na.clone()], &[c.clone(), c.clone()]).unwrap();
        assert!(congruent_mod(&b, &y, &c, &a).unwrap() && congruent_mod(&b, &y, &c, &na).unwrap());
        let z = Element::bottom();
        assert_eq!(chinese_solve(&b, &[z.clone(), z.clone()], &[Element::bottom(), Element::top()]).unwrap_err(), Error::Incompatible(0, 1));
    }

    #[test]
    fn section_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        let (_, pi) = quotient(&c, std::slice::from_ref(&m), &[]).unwrap();
        let phi = section(&pi).unwrap();
        assert!(c.equal(&phi.apply(&Element::bottom()).unwrap(), &m).unwrap());
        assert!(c.equal(&phi.apply(&Element::top()).unwrap(), &Element::top()).unwrap());
        let (_, pf) = quotient(&c, &[], &[m]).unwrap();
        assert!(section(&pf).is_err());
    }
}
