//! Finitely presented distributive lattices.
//!
//! A lattice is given by generators and relations `⋀A ≤ ⋁B`. Its order is
//! decided through the two-valued models of the presentation: `a ≤ b` iff
//! every model sending `a` to 1 also sends `b` to 1.

mod element;
mod hom;
mod iso;
mod json;
mod named;
mod poset;
mod table;

pub use element::{Element, MeetTerm};
pub use hom::LatticeHom;
pub use iso::{order_isomorphic, poset_isomorphism};
pub use json::{PresentationDoc, RelationDoc};
pub use named::{boolean, chain, free_lattice, trivial};
pub use poset::{downset_lattice, lattice_from_order, FinitePoset};
pub use table::ElementTable;

use crate::bits::Bits;
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Largest generator count for which models are enumerated by brute force.
pub const MAX_GENERATORS: usize = 24;
/// Default cap on the number of distinct elements an enumeration may produce.
pub const DEFAULT_CEILING: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorId {
    pub index: usize,
    pub label: String,
}

/// `⋀lhs ≤ ⋁rhs`, with `rhs` given by generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Vec<MeetTerm>,
    pub rhs: Vec<usize>,
}

impl Relation {
    pub fn new(lhs: impl IntoIterator<Item = usize>, rhs: impl IntoIterator<Item = usize>) -> Self {
        Relation { lhs: vec![MeetTerm::from_gens(lhs)], rhs: rhs.into_iter().collect() }
    }

    pub fn lhs_mask(&self) -> u64 {
        self.lhs.iter().fold(0, |m, t| m | t.0)
    }

    pub fn rhs_mask(&self) -> u64 {
        self.rhs.iter().fold(0, |m, &g| m | 1 << g)
    }

    pub fn satisfied_by(&self, v: u64) -> bool {
        self.lhs_mask() & !v != 0 || self.rhs_mask() & v != 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<GeneratorId>,
    pub relations: Vec<Relation>,
}

#[derive(Clone)]
pub struct Lattice(Arc<Inner>);

struct Inner {
    labels: Vec<String>,
    relations: Vec<Relation>,
    models: Vec<u64>,
    ceiling: usize,
    table: OnceLock<Result<Arc<ElementTable>>>,
}

fn all_models(n: usize, rels: &[Relation]) -> Vec<u64> {
    (0..1u64 << n).filter(|&v| rels.iter().all(|r| r.satisfied_by(v))).collect()
}

impl Lattice {
    /// Lattice presented by `labels` and `relations`.
    pub fn present(labels: Vec<String>, relations: Vec<Relation>) -> Result<Lattice> {
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
            if l.is_empty() || l == "0" || l == "1" || l.contains(['&', '|', '(', ')', ' ']) {
                return Err(Error::Parse(format!("bad generator label `{l}`")));
            }
        }
        if labels.len() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators { count: labels.len(), limit: MAX_GENERATORS });
        }
        let n = labels.len();
        for r in &relations {
            if r.lhs_mask() >> n != 0 || r.rhs.iter().any(|&g| g >= n) {
                return Err(Error::ForeignGenerator);
            }
        }
        let models = all_models(n, &relations);
        Ok(Self::build(labels, relations, models, DEFAULT_CEILING))
    }

    /// Convenience constructor from label strings.
    pub fn present_labels(labels: &[&str], relations: Vec<Relation>) -> Result<Lattice> {
        Self::present(labels.iter().map(|s| s.to_string()).collect(), relations)
    }

    fn build(labels: Vec<String>, relations: Vec<Relation>, mut models: Vec<u64>, ceiling: usize) -> Lattice {
        models.sort_unstable();
        models.dedup();
        Lattice(Arc::new(Inner { labels, relations, models, ceiling, table: OnceLock::new() }))
    }

    /// Lattice whose models are exactly `models` (assignments over `labels`).
    pub fn from_models(labels: Vec<String>, models: Vec<u64>) -> Result<Lattice> {
        if labels.len() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators { count: labels.len(), limit: MAX_GENERATORS });
        }
        let n = labels.len();
        if models.iter().any(|&v| n < 64 && v >> n != 0) {
            return Err(Error::ForeignGenerator);
        }
        Ok(Self::build(labels, Vec::new(), models, DEFAULT_CEILING))
    }

    /// Quotient keeping only the models accepted by `keep`, with extra
    /// relations recorded for display.
    pub(crate) fn restrict(&self, keep: impl Fn(u64) -> bool, extra: Vec<Relation>) -> Lattice {
        let models = self.0.models.iter().copied().filter(|&v| keep(v)).collect();
        let mut rels = self.0.relations.clone();
        rels.extend(extra);
        Self::build(self.0.labels.clone(), rels, models, self.0.ceiling)
    }

    /// Same lattice with a different enumeration ceiling.
    pub fn with_ceiling(&self, ceiling: usize) -> Lattice {
        Self::build(self.0.labels.clone(), self.0.relations.clone(), self.0.models.clone(), ceiling)
    }

    pub fn ceiling(&self) -> usize {
        self.0.ceiling
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn num_generators(&self) -> usize {
        self.0.labels.len()
    }

    pub fn models(&self) -> &[u64] {
        &self.0.models
    }

    pub fn num_models(&self) -> usize {
        self.0.models.len()
    }

    /// Relations as given (for quotients: parent relations plus recorded extras).
    pub fn relations(&self) -> &[Relation] {
        &self.0.relations
    }

    /// A presentation whose models are exactly this lattice's models: the
    /// recorded relations plus one relation excluding each further assignment.
    pub fn presentation(&self) -> Presentation {
        let n = self.num_generators();
        let mut relations = self.0.relations.clone();
        let models: HashSet<u64> = self.0.models.iter().copied().collect();
        for v in all_models(n, &self.0.relations) {
            if !models.contains(&v) {
                let lhs = (0..n).filter(|g| v >> g & 1 == 1);
                let rhs = (0..n).filter(|g| v >> g & 1 == 0);
                relations.push(Relation::new(lhs, rhs));
            }
        }
        Presentation {
            generators: self.0.labels.iter().enumerate().map(|(index, label)| GeneratorId { index, label: label.clone() }).collect(),
            relations,
        }
    }

    pub fn same_models(&self, other: &Lattice) -> bool {
        self.0.labels == other.0.labels && self.0.models == other.0.models
    }

    pub fn ptr_eq(&self, other: &Lattice) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn is_trivial(&self) -> bool {
        self.0.models.is_empty()
    }

    pub fn top(&self) -> Element {
        Element::top()
    }

    pub fn bottom(&self) -> Element {
        Element::bottom()
    }

    pub fn generator(&self, i: usize) -> Result<Element> {
        if i >= self.num_generators() {
            return Err(Error::ForeignGenerator);
        }
        Ok(Element::generator(i))
    }

    pub fn gen(&self, label: &str) -> Result<Element> {
        let i = self.index_of(label)?;
        Ok(Element::generator(i))
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.num_generators()).map(Element::generator).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownSymbol(label.to_string()))
    }

    pub(crate) fn check(&self, a: &Element) -> Result<()> {
        let n = self.num_generators();
        if n < 64 && a.support() >> n != 0 {
            return Err(Error::ForeignGenerator);
        }
        Ok(())
    }

    /// Model set of `a`: bit `k` is set iff model `k` sends `a` to 1.
    pub fn set_of(&self, a: &Element) -> Result<Bits> {
        self.check(a)?;
        Ok(self.set_unchecked(a))
    }

    pub(crate) fn set_unchecked(&self, a: &Element) -> Bits {
        Bits::from_indices(self.num_models(), self.0.models.iter().enumerate().filter(|(_, &v)| a.eval(v)).map(|(i, _)| i))
    }

    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        let (sa, sb) = (self.set_of(a)?, self.set_of(b)?);
        Ok(crate::fault::model_leq(&sa, &sb))
    }

    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool> {
        Ok(self.set_of(a)? == self.set_of(b)?)
    }

    pub fn meet(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.meet(b))
    }

    pub fn join(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.join(b))
    }

    pub fn meet_all<'a>(&self, xs: impl IntoIterator<Item = &'a Element>) -> Result<Element> {
        xs.into_iter().try_fold(Element::top(), |acc, x| self.meet(&acc, x))
    }

    pub fn join_all<'a>(&self, xs: impl IntoIterator<Item = &'a Element>) -> Result<Element> {
        xs.into_iter().try_fold(Element::bottom(), |acc, x| self.join(&acc, x))
    }

    /// All distinct elements, built once and cached.
    pub fn enumerate_elements(&self) -> Result<Arc<ElementTable>> {
        self.0.table.get_or_init(|| table::build(self).map(Arc::new)).clone()
    }

    /// Canonical representative of `a` (the one stored in the element table).
    pub fn canonical(&self, a: &Element) -> Result<Element> {
        let t = self.enumerate_elements()?;
        let id = t.id_of_set(&self.set_of(a)?).expect("element table is closed");
        Ok(t.element(id).clone())
    }

    /// Opposite lattice: same generators, relations reversed, order reversed.
    /// Elements carry over through [`Element::dual`].
    pub fn opposite(&self) -> Lattice {
        let n = self.num_generators();
        let mask = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let relations = self
            .0
            .relations
            .iter()
            .map(|r| {
                let l = r.lhs_mask();
                Relation { lhs: vec![MeetTerm(r.rhs_mask())], rhs: (0..n).filter(|g| l >> g & 1 == 1).collect() }
            })
            .collect();
        let models = self.0.models.iter().map(|v| !v & mask).collect();
        Self::build(self.0.labels.clone(), relations, models, self.0.ceiling)
    }

    pub fn display(&self, a: &Element) -> String {
        a.display(&self.0.labels)
    }

    /// Parse an element written with `&` (or `∧`) inside terms and `|` (or `∨`)
    /// between terms; `0` and `1` are the constants.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let s = s.replace('∧', "&").replace('∨', "|");
        let s = s.trim();
        if s == "0" {
            return Ok(Element::bottom());
        }
        let mut terms = Vec::new();
        for t in s.split('|') {
            let mut mask = 0u64;
            for g in t.split('&') {
                let g = g.trim().trim_matches(|c| c == '(' || c == ')').trim();
                match g {
                    "1" => {}
                    "0" => {
                        mask = u64::MAX;
                        break;
                    }
                    "" => return Err(Error::Parse(format!("empty factor in `{s}`"))),
                    _ => mask |= 1 << self.index_of(g)?,
                }
            }
            if mask != u64::MAX {
                terms.push(MeetTerm(mask));
            }
        }
        Ok(Element::from_terms(terms))
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice").field("labels", &self.0.labels).field("models", &self.0.models.len()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free2() -> Lattice {
        free_lattice(2)
    }

    #[test]
    fn order_examples() {
        let t = free2();
        let (x, y) = (t.gen("x").unwrap(), t.gen("y").unwrap());
        assert!(t.leq(&x.meet(&y), &x.join(&y)).unwrap());
        assert!(!t.leq(&x, &y).unwrap());
        let q = Lattice::present_labels(&["x", "y"], vec![Relation::new([0, 1], [])]).unwrap();
        assert!(q.leq(&x.meet(&y), &Element::bottom()).unwrap());
    }

    #[test]
    fn meet_join_examples() {
        let t = free2();
        let (x, y) = (t.gen("x").unwrap(), t.gen("y").unwrap());
        let xy = t.join(&x, &y).unwrap();
        assert_eq!(t.join(&x, &t.bottom()).unwrap(), x);
        assert_eq!(t.meet(&xy, &x).unwrap(), x);
        assert_eq!(t.meet(&xy, &xy).unwrap().terms().len(), 2);
    }

    #[test]
    fn triviality() {
        assert!(!free_lattice(0).is_trivial());
        let t = Lattice::present_labels(&["x"], vec![Relation::new([0], []), Relation::new([], [0])]).unwrap();
        assert!(t.is_trivial());
        let u = Lattice::present_labels(&["x", "y"], vec![Relation::new([0], []), Relation::new([1], []), Relation::new([], [0])]).unwrap();
        assert!(u.is_trivial());
    }

    #[test]
    fn errors() {
        assert_eq!(Lattice::present_labels(&["x", "x"], vec![]).unwrap_err(), Error::DuplicateLabel("x".into()));
        assert_eq!(Lattice::present_labels(&["x"], vec![Relation::new([1], [])]).unwrap_err(), Error::ForeignGenerator);
        let t = free_lattice(1);
        assert_eq!(t.leq(&Element::generator(3), &Element::top()).unwrap_err(), Error::ForeignGenerator);
        assert!(matches!(t.parse_element("q"), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn opposite_reverses_order() {
        let c = chain(5);
        let op = c.opposite();
        let t = c.enumerate_elements().unwrap();
        for a in t.elements() {
            for b in t.elements() {
                assert_eq!(c.leq(a, b).unwrap(), op.leq(&b.dual(), &a.dual()).unwrap());
            }
        }
        assert!(op.opposite().same_models(&c));
    }

    #[test]
    fn opposite_chain3_atom() {
        let c = chain(3);
        let op = c.opposite();
        let m = c.gen("m").unwrap();
        // m was the largest non-unit; in the opposite it sits just above 0.
        let t = op.enumerate_elements().unwrap();
        let id = t.id_of(&op, &m.dual()).unwrap();
        assert_eq!(t.upper_covers_of_bottom(), vec![id]);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let t = free_lattice(3);
        let e = t.parse_element("x & y | z").unwrap();
        assert_eq!(t.display(&e), "z | x&y");
        assert_eq!(t.parse_element(&t.display(&e)).unwrap(), e);
        assert_eq!(t.parse_element("0").unwrap(), Element::bottom());
        assert_eq!(t.parse_element("1").unwrap(), Element::top());
    }

    #[test]
    fn presentation_reproduces_models() {
        let c = chain(4);
        let q = c.restrict(|v| v != 0, vec![]);
        let p = q.presentation();
        let again = Lattice::present(p.generators.iter().map(|g| g.label.clone()).collect(), p.relations).unwrap();
        assert!(again.same_models(&q));
    }
}
