//! Krull and Heitmann boundaries and the dimension deciders Kdim, Jdim, Hdim.

use crate::error::{Error, Result};
use crate::heyting::{difference_id, implication_id};
use crate::ideals::{jacobson, quotient, quotient_by_preorder, FilterHandle, IdealHandle, QuotientMap};
use crate::lattice::{Element, ElementTable, Lattice};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Holds,
    Fails,
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Unknown => "unknown",
        })
    }
}

/// A tuple `x_0..x_ℓ` with its complementary sequence `a_0..a_ℓ`; ring
/// witnesses also carry the exponents `m_0..m_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<E> {
    pub xs: Vec<E>,
    pub a: Vec<E>,
    pub m: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionVerdict<E> {
    pub bound: i64,
    pub outcome: Outcome,
    /// Every tuple that matters was examined.
    pub exhaustive: bool,
    pub witnesses: Vec<Witness<E>>,
    pub counterexample: Option<Vec<E>>,
    pub note: String,
}

impl<E> DimensionVerdict<E> {
    pub fn new(bound: i64, outcome: Outcome) -> Self {
        DimensionVerdict { bound, outcome, exhaustive: true, witnesses: Vec::new(), counterexample: None, note: String::new() }
    }

    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Complementary sequences, quantified over generator tuples.
    Global2c,
    /// Recursion through upper Krull boundaries.
    Upper2a,
    /// Recursion through lower Krull boundaries.
    Lower2b,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "global" | "global-2c" | "2c" => Ok(Strategy::Global2c),
            "upper" | "upper-2a" | "2a" => Ok(Strategy::Upper2a),
            "lower" | "lower-2b" | "2b" => Ok(Strategy::Lower2b),
            _ => Err(Error::Invalid(format!("unknown strategy `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DimOptions {
    pub strategy: Strategy,
    pub witnesses: bool,
    /// Tuple entries are drawn from this system; `None` means the
    /// presentation generators, which suffice.
    pub system: Option<Vec<Element>>,
}

impl Default for DimOptions {
    fn default() -> Self {
        DimOptions { strategy: Strategy::Global2c, witnesses: false, system: None }
    }
}

impl DimOptions {
    pub fn strategy(strategy: Strategy) -> Self {
        DimOptions { strategy, ..Default::default() }
    }
}

fn system_ids(t: &Lattice, tab: &ElementTable, system: &Option<Vec<Element>>) -> Result<Vec<usize>> {
    let elems = match system {
        Some(s) => s.clone(),
        None => t.generators(),
    };
    elems.iter().map(|e| tab.id_of(t, e)).collect()
}

fn join_where(t: &ElementTable, pred: impl Fn(usize) -> bool) -> usize {
    t.ids().filter(|&y| pred(y)).fold(t.bottom(), |acc, y| t.join(acc, y))
}

fn meet_where(t: &ElementTable, pred: impl Fn(usize) -> bool) -> usize {
    t.ids().filter(|&y| pred(y)).fold(t.top(), |acc, y| t.meet(acc, y))
}

/// Generator of `(0 : x)`.
pub(crate) fn annihilator_id(t: &ElementTable, x: usize) -> usize {
    join_where(t, |y| t.meet(x, y) == t.bottom())
}

/// Generator of `K^x = ↓x ∨ (0 : x)`.
pub(crate) fn krull_ideal_id(t: &ElementTable, x: usize) -> usize {
    t.join(x, annihilator_id(t, x))
}

/// Generator of `K_x = ↑x ∧ (1 \ x)`.
pub(crate) fn krull_filter_id(t: &ElementTable, x: usize) -> usize {
    t.meet(x, meet_where(t, |v| t.join(v, x) == t.top()))
}

/// Upper Krull boundary ideal `K^x_T = ↓x ∨ (0 : x)`, generated by `x` and
/// the generator of `(0 : x)`.
pub fn krull_boundary_ideal(t: &Lattice, x: &Element) -> Result<IdealHandle> {
    let tab = t.enumerate_elements()?;
    let xi = tab.id_of(t, x)?;
    IdealHandle::generated(t, &[x.clone(), tab.element(annihilator_id(&tab, xi)).clone()])
}

/// Lower Krull boundary filter `K_x^T = ↑x ∧ (1 \ x)`.
pub fn krull_boundary_filter(t: &Lattice, x: &Element) -> Result<FilterHandle> {
    let tab = t.enumerate_elements()?;
    let xi = tab.id_of(t, x)?;
    FilterHandle::principal(t, tab.element(krull_filter_id(&tab, xi)))
}

pub fn upper_boundary(t: &Lattice, x: &Element) -> Result<(Lattice, QuotientMap)> {
    let tab = t.enumerate_elements()?;
    let g = krull_ideal_id(&tab, tab.id_of(t, x)?);
    quotient(t, &[tab.element(g).clone()], &[])
}

pub fn lower_boundary(t: &Lattice, x: &Element) -> Result<(Lattice, QuotientMap)> {
    let tab = t.enumerate_elements()?;
    let g = krull_filter_id(&tab, tab.id_of(t, x)?);
    quotient(t, &[], &[tab.element(g).clone()])
}

/// Greedy complementary sequence: each `a_i` is the largest admissible
/// value, which leaves the most room for later constraints. Returns the
/// sequence and the final bound `a_ℓ ∨ x_ℓ`.
fn greedy_sequence(t: &ElementTable, xs: &[usize]) -> (Vec<usize>, usize) {
    let mut prev = t.bottom();
    let mut a = Vec::with_capacity(xs.len());
    for &x in xs {
        let ai = join_where(t, |c| t.leq(t.meet(c, x), prev));
        a.push(ai);
        prev = t.join(ai, x);
    }
    (a, prev)
}

/// Checks `a_0 ∧ x_0 ≤ 0, a_i ∧ x_i ≤ a_{i-1} ∨ x_{i-1}, y ≤ a_ℓ ∨ x_ℓ`.
pub fn verify_chain(t: &Lattice, xs: &[Element], a: &[Element], y: &Element) -> Result<bool> {
    if xs.len() != a.len() || xs.is_empty() {
        return Ok(false);
    }
    let mut prev = Element::bottom();
    for (x, ai) in xs.iter().zip(a) {
        if !t.leq(&t.meet(ai, x)?, &prev)? {
            return Ok(false);
        }
        prev = t.join(ai, x)?;
    }
    t.leq(y, &prev)
}

/// `y ∈ K_T[x_0..x_ℓ]`; on success returns a complementary sequence.
pub fn iterated_krull_membership(t: &Lattice, y: &Element, xs: &[Element]) -> Result<Option<Vec<Element>>> {
    let tab = t.enumerate_elements()?;
    let yi = tab.id_of(t, y)?;
    if xs.is_empty() {
        return Ok(if yi == tab.bottom() { Some(Vec::new()) } else { None });
    }
    let ids = xs.iter().map(|x| tab.id_of(t, x)).collect::<Result<Vec<_>>>()?;
    let (a, last) = greedy_sequence(&tab, &ids);
    Ok(if tab.leq(yi, last) { Some(a.iter().map(|&i| tab.element(i).clone()).collect()) } else { None })
}

fn tuples(system: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|p| system.iter().map(move |&s| [p.clone(), vec![s]].concat())).collect();
    }
    out
}

pub fn kdim_leq(t: &Lattice, l: i64, opts: &DimOptions) -> Result<DimensionVerdict<Element>> {
    if l < -1 {
        return Err(Error::Invalid(format!("dimension bound {l} below -1")));
    }
    let tab = t.enumerate_elements()?;
    if l == -1 {
        let trivial = tab.len() == 1;
        let v = DimensionVerdict::new(l, if trivial { Outcome::Holds } else { Outcome::Fails });
        return Ok(if trivial { v } else { v.with_note("lattice is not trivial") });
    }
    let system = system_ids(t, &tab, &opts.system)?;
    match opts.strategy {
        Strategy::Global2c => {
            let mut v = DimensionVerdict::new(l, Outcome::Holds);
            for xs in tuples(&system, l as usize + 1) {
                let (a, last) = greedy_sequence(&tab, &xs);
                if last != tab.top() {
                    v.outcome = Outcome::Fails;
                    v.counterexample = Some(xs.iter().map(|&i| tab.element(i).clone()).collect());
                    v.note = "no complementary sequence exists for this tuple".into();
                    return Ok(v);
                }
                if opts.witnesses {
                    v.witnesses.push(Witness {
                        xs: xs.iter().map(|&i| tab.element(i).clone()).collect(),
                        a: a.iter().map(|&i| tab.element(i).clone()).collect(),
                        m: None,
                    });
                }
            }
            Ok(v)
        }
        Strategy::Upper2a | Strategy::Lower2b => {
            let upper = opts.strategy == Strategy::Upper2a;
            let system_elems: Vec<Element> = system.iter().map(|&i| tab.element(i).clone()).collect();
            let mut memo = HashMap::new();
            let path = boundary_recursion(t, l, &system_elems, &mut memo, &|t, x| if upper { upper_boundary(t, x) } else { lower_boundary(t, x) })?;
            Ok(verdict_from_path(l, path))
        }
    }
}

fn verdict_from_path(l: i64, path: Option<Vec<Element>>) -> DimensionVerdict<Element> {
    match path {
        None => DimensionVerdict::new(l, Outcome::Holds),
        Some(xs) => {
            let mut v = DimensionVerdict::new(l, Outcome::Fails);
            v.note = "a boundary along this tuple stays nontrivial".into();
            v.counterexample = Some(xs);
            v
        }
    }
}

type BoundaryFn<'a> = dyn Fn(&Lattice, &Element) -> Result<(Lattice, QuotientMap)> + 'a;

/// `dim ≤ l` through `∀x ∈ S, dim(boundary(x)) ≤ l − 1`. Returns `None`
/// when it holds, otherwise the failing sequence of generators.
fn boundary_recursion(t: &Lattice, l: i64, system: &[Element], memo: &mut HashMap<(Vec<u64>, i64), Option<Vec<Element>>>, boundary: &BoundaryFn<'_>) -> Result<Option<Vec<Element>>> {
    let key = (t.models().to_vec(), l);
    if let Some(r) = memo.get(&key) {
        return Ok(r.clone());
    }
    let result = if l == -1 {
        if t.enumerate_elements()?.len() == 1 {
            None
        } else {
            Some(Vec::new())
        }
    } else {
        let mut res = None;
        for x in system {
            let (b, _) = boundary(t, x)?;
            if let Some(mut rest) = boundary_recursion(&b, l - 1, system, memo, boundary)? {
                rest.insert(0, x.clone());
                res = Some(rest);
                break;
            }
        }
        res
    };
    memo.insert(key, result.clone());
    Ok(result)
}

/// `He(T)`: quotient by `a ⪯ b ⇔ ∀x (a ∨ x = 1 ⇒ b ∨ x = 1)`.
pub fn heitmann_lattice(t: &Lattice) -> Result<(Lattice, QuotientMap)> {
    let tab = t.enumerate_elements()?;
    let co: Vec<_> = tab.ids().map(|a| tab.collect(|x| tab.join(a, x) == tab.top())).collect();
    quotient_by_preorder(t, |a, b| co[a].is_subset(&co[b]))
}

pub fn jdim_leq(t: &Lattice, l: i64, opts: &DimOptions) -> Result<DimensionVerdict<Element>> {
    let (he, _) = heitmann_lattice(t)?;
    kdim_leq(&he, l, opts)
}

/// Generator of `H^x = ↓x ∨ (J(0) : x)`, given the member set of `J(0)`.
fn heitmann_ideal_id(t: &ElementTable, j0: &crate::bits::Bits, x: usize) -> usize {
    t.join(x, join_where(t, |u| j0.get(t.meet(x, u))))
}

/// Heitmann boundary ideal `H^x_T = ↓x ∨ (J_T(0) : x)`.
pub fn heitmann_boundary_ideal(t: &Lattice, x: &Element) -> Result<IdealHandle> {
    let tab = t.enumerate_elements()?;
    let j0 = jacobson(&IdealHandle::zero(t))?.members()?;
    IdealHandle::principal(t, tab.element(heitmann_ideal_id(&tab, &j0, tab.id_of(t, x)?)))
}

pub fn heitmann_boundary(t: &Lattice, x: &Element) -> Result<(Lattice, QuotientMap)> {
    let g = heitmann_boundary_ideal(t, x)?.generator()?;
    quotient(t, &[g], &[])
}

pub fn hdim_leq(t: &Lattice, l: i64, opts: &DimOptions) -> Result<DimensionVerdict<Element>> {
    if l < -1 {
        return Err(Error::Invalid(format!("dimension bound {l} below -1")));
    }
    let tab = t.enumerate_elements()?;
    let system: Vec<Element> = system_ids(t, &tab, &opts.system)?.into_iter().map(|i| tab.element(i).clone()).collect();
    let mut memo = HashMap::new();
    let path = boundary_recursion(t, l, &system, &mut memo, &heitmann_boundary)?;
    Ok(verdict_from_path(l, path))
}

/// `H_T[x_0..x_k]` as a member set, built one boundary at a time through
/// `y ∈ H[T, 𝔞; x] ⇔ ∃z [y ≤ x ∨ z ∧ ∀u ((z ∧ x) ∨ u ∨ g = 1 ⇒ u ∨ g = 1)]`
/// where `g` generates `𝔞`.
pub fn iterated_heitmann_ideal(t: &Lattice, xs: &[Element]) -> Result<IdealHandle> {
    let tab = t.enumerate_elements()?;
    let top = tab.top();
    let mut g = tab.bottom();
    for x in xs {
        let x = tab.id_of(t, x)?;
        let zs: Vec<usize> = tab
            .ids()
            .filter(|&z| {
                let zx = tab.meet(z, x);
                tab.ids().all(|u| tab.join(tab.join(zx, u), g) != top || tab.join(u, g) == top)
            })
            .collect();
        let members = tab.collect(|y| zs.iter().any(|&z| tab.leq(y, tab.join(x, z))));
        g = members.ones().fold(tab.bottom(), |acc, y| tab.join(acc, y));
    }
    IdealHandle::principal(t, tab.element(g))
}

pub fn iterated_heitmann_membership(t: &Lattice, y: &Element, xs: &[Element]) -> Result<bool> {
    iterated_heitmann_ideal(t, xs)?.contains(y)
}

/// `1 = x_ℓ ∨ (x_ℓ → (… (x_1 ∨ (x_1 → (x_0 ∨ ¬x_0))) …))` for every tuple
/// over the generator system.
pub fn kdim_heyting_form(t: &Lattice, l: i64) -> Result<bool> {
    let tab = t.enumerate_elements()?;
    if l < 0 {
        return Ok(tab.len() == 1);
    }
    let system = system_ids(t, &tab, &None)?;
    for xs in tuples(&system, l as usize + 1) {
        let mut acc = tab.bottom();
        for &x in &xs {
            let imp = implication_id(&tab, x, acc).ok_or_else(|| Error::NotPrincipal("implication".into()))?;
            acc = tab.join(x, imp);
        }
        if acc != tab.top() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `0 = x_0 ∧ (x_0 − (x_1 ∧ (x_1 − (… (x_ℓ ∧ (1 − x_ℓ))))))` for every tuple.
pub fn kdim_brouwer_form(t: &Lattice, l: i64) -> Result<bool> {
    let tab = t.enumerate_elements()?;
    if l < 0 {
        return Ok(tab.len() == 1);
    }
    let system = system_ids(t, &tab, &None)?;
    for xs in tuples(&system, l as usize + 1) {
        let mut acc = tab.top();
        for &x in xs.iter().rev() {
            let d = difference_id(&tab, acc, x).ok_or_else(|| Error::NotPrincipal("difference".into()))?;
            acc = tab.meet(x, d);
        }
        if acc != tab.bottom() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain, free_lattice, order_isomorphic, trivial};

    fn ids<S: crate::ideals::Side>(h: &crate::ideals::Handle<S>) -> Vec<usize> {
        h.members().unwrap().ones().collect()
    }

    #[test]
    fn krull_boundary_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        assert_eq!(ids(&krull_boundary_ideal(&c, &Element::top()).unwrap()), vec![0, 1, 2]);
        assert_eq!(ids(&krull_boundary_ideal(&c, &Element::bottom()).unwrap()), vec![0, 1, 2]);
        assert_eq!(ids(&krull_boundary_ideal(&c, &m).unwrap()), vec![0, 1]);
        assert_eq!(ids(&krull_boundary_filter(&c, &Element::bottom()).unwrap()), vec![0, 1, 2]);
        assert_eq!(ids(&krull_boundary_filter(&c, &Element::top()).unwrap()), vec![0, 1, 2]);
        assert_eq!(ids(&krull_boundary_filter(&c, &m).unwrap()), vec![1, 2]);
    }

    #[test]
    fn boundary_quotients() {
        let two = free_lattice(0);
        assert!(upper_boundary(&two, &Element::top()).unwrap().0.is_trivial());
        let c = chain(3);
        let m = c.gen("m").unwrap();
        assert!(order_isomorphic(&upper_boundary(&c, &m).unwrap().0, &two).unwrap());
        assert!(order_isomorphic(&lower_boundary(&c, &m).unwrap().0, &two).unwrap());
    }

    #[test]
    fn kdim_examples() {
        let two = free_lattice(0);
        let v = kdim_leq(&two, 0, &DimOptions { witnesses: true, system: Some(vec![Element::top()]), ..Default::default() }).unwrap();
        assert!(v.holds());
        assert_eq!(v.witnesses[0].a, vec![Element::bottom()]);
        let c = chain(3);
        for s in [Strategy::Global2c, Strategy::Upper2a, Strategy::Lower2b] {
            let v = kdim_leq(&c, 0, &DimOptions::strategy(s)).unwrap();
            assert_eq!(v.outcome, Outcome::Fails);
            assert_eq!(v.counterexample, Some(vec![c.gen("m").unwrap()]));
            assert!(kdim_leq(&c, 1, &DimOptions::strategy(s)).unwrap().holds());
        }
        for n in 2..=6 {
            let c = chain(n);
            let l = n as i64 - 2;
            for s in [Strategy::Global2c, Strategy::Upper2a, Strategy::Lower2b] {
                assert!(kdim_leq(&c, l, &DimOptions::strategy(s)).unwrap().holds(), "chain {n} strategy {s:?}");
                assert!(!kdim_leq(&c, l - 1, &DimOptions::strategy(s)).unwrap().holds(), "chain {n} strategy {s:?}");
            }
        }
    }

    #[test]
    fn witnesses_satisfy_chain() {
        let f = free_lattice(2);
        let v = kdim_leq(&f, 2, &DimOptions { witnesses: true, ..Default::default() }).unwrap();
        assert!(v.holds());
        assert_eq!(v.witnesses.len(), 8);
        for w in &v.witnesses {
            assert!(verify_chain(&f, &w.xs, &w.a, &Element::top()).unwrap());
        }
    }

    #[test]
    fn iterated_krull_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        assert!(iterated_krull_membership(&c, &Element::bottom(), std::slice::from_ref(&m)).unwrap().is_some());
        assert!(iterated_krull_membership(&c, &Element::top(), std::slice::from_ref(&m)).unwrap().is_none());
        assert!(iterated_krull_membership(&c, &Element::top(), &[m.clone(), m.clone()]).unwrap().is_some());
        let two = free_lattice(0);
        for x in [Element::bottom(), Element::top()] {
            assert!(iterated_krull_membership(&two, &Element::top(), &[x]).unwrap().is_some());
        }
    }

    #[test]
    fn iterated_krull_is_kernel_of_successive_boundaries() {
        let f = free_lattice(2);
        let tab = f.enumerate_elements().unwrap();
        let gens = f.generators();
        for x0 in &gens {
            for x1 in &gens {
                let (b0, _) = upper_boundary(&f, x0).unwrap();
                let (b1, _) = upper_boundary(&b0, x1).unwrap();
                for y in tab.elements() {
                    let in_kernel = b1.equal(y, &Element::bottom()).unwrap();
                    let member = iterated_krull_membership(&f, y, &[x0.clone(), x1.clone()]).unwrap().is_some();
                    assert_eq!(in_kernel, member);
                }
            }
        }
    }

    #[test]
    fn heitmann_lattice_examples() {
        let two = free_lattice(0);
        assert!(order_isomorphic(&heitmann_lattice(&two).unwrap().0, &two).unwrap());
        let c = chain(3);
        let (he, _) = heitmann_lattice(&c).unwrap();
        assert!(order_isomorphic(&he, &two).unwrap());
        assert!(he.equal(&c.gen("m").unwrap(), &Element::bottom()).unwrap());
        for l in [chain(5), free_lattice(2), boolean(2)] {
            let (he, _) = heitmann_lattice(&l).unwrap();
            for x in l.enumerate_elements().unwrap().elements() {
                assert_eq!(he.equal(x, &Element::top()).unwrap(), l.equal(x, &Element::top()).unwrap());
            }
        }
    }

    #[test]
    fn jdim_examples() {
        assert!(jdim_leq(&chain(3), 0, &DimOptions::default()).unwrap().holds());
        assert!(jdim_leq(&trivial(), -1, &DimOptions::default()).unwrap().holds());
        let f = free_lattice(2);
        for l in -1..3 {
            if kdim_leq(&f, l, &DimOptions::default()).unwrap().holds() {
                assert!(jdim_leq(&f, l, &DimOptions::default()).unwrap().holds());
            }
        }
    }

    #[test]
    fn heitmann_boundary_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        assert_eq!(ids(&heitmann_boundary_ideal(&c, &m).unwrap()), vec![0, 1, 2]);
        assert_eq!(ids(&heitmann_boundary_ideal(&c, &Element::top()).unwrap()), vec![0, 1, 2]);
        let b = boolean(2);
        for x in b.enumerate_elements().unwrap().elements() {
            assert_eq!(ids(&heitmann_boundary_ideal(&b, x).unwrap()), ids(&krull_boundary_ideal(&b, x).unwrap()));
        }
    }

    #[test]
    fn hdim_examples() {
        let c = chain(3);
        assert!(hdim_leq(&c, 0, &DimOptions::default()).unwrap().holds());
        assert!(!hdim_leq(&c, -1, &DimOptions::default()).unwrap().holds());
        assert!(hdim_leq(&trivial(), -1, &DimOptions::default()).unwrap().holds());
    }

    #[test]
    fn iterated_heitmann_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        assert!(iterated_heitmann_membership(&c, &Element::bottom(), std::slice::from_ref(&m)).unwrap());
        assert!(iterated_heitmann_membership(&c, &Element::top(), &[m]).unwrap());
        let f = free_lattice(2);
        let x = f.gen("x").unwrap();
        let direct = heitmann_boundary_ideal(&f, &x).unwrap();
        assert_eq!(ids(&iterated_heitmann_ideal(&f, &[x]).unwrap()), ids(&direct));
    }

    #[test]
    fn heyting_and_brouwer_forms() {
        for (l, n) in [(chain(4), 2), (free_lattice(2), 2), (boolean(2), 0)] {
            for k in -1..=3 {
                let want = kdim_leq(&l, k, &DimOptions::default()).unwrap().holds();
                assert_eq!(kdim_heyting_form(&l, k).unwrap(), want, "heyting {k}");
                assert_eq!(kdim_brouwer_form(&l, k).unwrap(), want, "brouwer {k}");
            }
            assert!(kdim_leq(&l, n, &DimOptions::default()).unwrap().holds());
        }
    }
}
