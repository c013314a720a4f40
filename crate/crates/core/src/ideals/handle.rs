use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::lattice::{Element, ElementTable, Lattice};
use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

/// Which side of the lattice a handle lives on.
pub trait Side: Send + Sync + 'static {
    const NAME: &'static str;
    /// `y` lies in the principal set of `g`.
    fn principal(t: &ElementTable, g: usize, y: usize) -> bool;
    fn principal_el(host: &Lattice, g: &Element, y: &Element) -> Result<bool>;
    fn combine(t: &ElementTable, a: usize, b: usize) -> usize;
    fn neutral(t: &ElementTable) -> usize;
    fn neutral_el() -> Element;
    fn absorbing_el() -> Element;
    fn combine_el(host: &Lattice, a: &Element, b: &Element) -> Result<Element>;
}

pub struct IdealSide;
pub struct FilterSide;

impl Side for IdealSide {
    const NAME: &'static str = "ideal";
    fn principal(t: &ElementTable, g: usize, y: usize) -> bool {
        t.leq(y, g)
    }
    fn principal_el(host: &Lattice, g: &Element, y: &Element) -> Result<bool> {
        host.leq(y, g)
    }
    fn combine(t: &ElementTable, a: usize, b: usize) -> usize {
        t.join(a, b)
    }
    fn neutral(t: &ElementTable) -> usize {
        t.bottom()
    }
    fn neutral_el() -> Element {
        Element::bottom()
    }
    fn absorbing_el() -> Element {
        Element::top()
    }
    fn combine_el(host: &Lattice, a: &Element, b: &Element) -> Result<Element> {
        host.join(a, b)
    }
}

impl Side for FilterSide {
    const NAME: &'static str = "filter";
    fn principal(t: &ElementTable, g: usize, y: usize) -> bool {
        t.leq(g, y)
    }
    fn principal_el(host: &Lattice, g: &Element, y: &Element) -> Result<bool> {
        host.leq(g, y)
    }
    fn combine(t: &ElementTable, a: usize, b: usize) -> usize {
        t.meet(a, b)
    }
    fn neutral(t: &ElementTable) -> usize {
        t.top()
    }
    fn neutral_el() -> Element {
        Element::top()
    }
    fn absorbing_el() -> Element {
        Element::bottom()
    }
    fn combine_el(host: &Lattice, a: &Element, b: &Element) -> Result<Element> {
        host.meet(a, b)
    }
}

type Pred = Arc<dyn Fn(&Lattice, &Element) -> Result<bool> + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Principal(Element),
    Members(Bits),
    Predicate(Pred),
}

/// An ideal (or filter) of a lattice, given by a principal generator, an
/// explicit member set over the host's element table, or a predicate.
pub struct Handle<S: Side> {
    host: Lattice,
    repr: Repr,
    generators: Option<Vec<Element>>,
    _side: PhantomData<S>,
}

pub type IdealHandle = Handle<IdealSide>;
pub type FilterHandle = Handle<FilterSide>;

impl<S: Side> Clone for Handle<S> {
    fn clone(&self) -> Self {
        Handle { host: self.host.clone(), repr: self.repr.clone(), generators: self.generators.clone(), _side: PhantomData }
    }
}

impl<S: Side> fmt::Debug for Handle<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Principal(g) => write!(f, "{}({})", S::NAME, self.host.display(g)),
            Repr::Members(b) => write!(f, "{}{:?}", S::NAME, b),
            Repr::Predicate(_) => write!(f, "{}(predicate)", S::NAME),
        }
    }
}

impl<S: Side> Handle<S> {
    fn make(host: &Lattice, repr: Repr, generators: Option<Vec<Element>>) -> Self {
        Handle { host: host.clone(), repr, generators, _side: PhantomData }
    }

    /// `↓g` for ideals, `↑g` for filters.
    pub fn principal(host: &Lattice, g: &Element) -> Result<Self> {
        host.check(g)?;
        Ok(Self::make(host, Repr::Principal(g.clone()), Some(vec![g.clone()])))
    }

    /// Generated by a finite set (principal, generated by its join resp. meet).
    pub fn generated(host: &Lattice, s: &[Element]) -> Result<Self> {
        let mut g = S::neutral_el();
        for e in s {
            g = S::combine_el(host, &g, e)?;
        }
        Ok(Self::make(host, Repr::Principal(g), Some(s.to_vec())))
    }

    /// `{0}` for ideals, `{1}` for filters.
    pub fn zero(host: &Lattice) -> Self {
        Self::make(host, Repr::Principal(S::neutral_el()), Some(Vec::new()))
    }

    pub fn whole(host: &Lattice) -> Self {
        let g = S::absorbing_el();
        Self::make(host, Repr::Principal(g.clone()), Some(vec![g]))
    }

    /// Explicit member set over the ids of `host.enumerate_elements()`.
    pub fn from_members(host: &Lattice, members: Bits) -> Self {
        Self::make(host, Repr::Members(members), None)
    }

    pub fn from_predicate(host: &Lattice, pred: impl Fn(&Lattice, &Element) -> Result<bool> + Send + Sync + 'static) -> Self {
        Self::make(host, Repr::Predicate(Arc::new(pred)), None)
    }

    pub fn host(&self) -> &Lattice {
        &self.host
    }

    pub fn generators(&self) -> Option<&[Element]> {
        self.generators.as_deref()
    }

    pub fn contains(&self, y: &Element) -> Result<bool> {
        self.host.check(y)?;
        match &self.repr {
            Repr::Principal(g) => S::principal_el(&self.host, g, y),
            Repr::Members(b) => {
                let t = self.host.enumerate_elements()?;
                Ok(b.get(t.id_of(&self.host, y)?))
            }
            Repr::Predicate(p) => p(&self.host, y),
        }
    }

    /// Member set over the host's element ids.
    pub fn members(&self) -> Result<Bits> {
        let t = self.host.enumerate_elements()?;
        match &self.repr {
            Repr::Principal(g) => {
                let gi = t.id_of(&self.host, g)?;
                Ok(t.collect(|y| S::principal(&t, gi, y)))
            }
            Repr::Members(b) => Ok(b.clone()),
            Repr::Predicate(p) => {
                let mut b = Bits::new(t.len());
                for i in t.ids() {
                    if p(&self.host, t.element(i))? {
                        b.set(i);
                    }
                }
                Ok(b)
            }
        }
    }

    /// Id of the generator; on a finite host every ideal and filter is principal.
    pub fn generator_id(&self) -> Result<usize> {
        let t = self.host.enumerate_elements()?;
        match &self.repr {
            Repr::Principal(g) => t.id_of(&self.host, g),
            _ => {
                let m = self.members()?;
                Ok(m.ones().fold(S::neutral(&t), |acc, i| S::combine(&t, acc, i)))
            }
        }
    }

    pub fn generator(&self) -> Result<Element> {
        match &self.repr {
            Repr::Principal(g) => Ok(g.clone()),
            _ => {
                let t = self.host.enumerate_elements()?;
                Ok(t.element(self.generator_id()?).clone())
            }
        }
    }

    pub fn same_members(&self, other: &Self) -> Result<bool> {
        if !self.host.same_models(&other.host) {
            return Err(Error::Invalid("handles live on different lattices".into()));
        }
        Ok(self.members()? == other.members()?)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if !self.host.same_models(&other.host) {
            return Err(Error::Invalid("handles live on different lattices".into()));
        }
        Ok(Self::from_members(&self.host, self.members()?.and(&other.members()?)))
    }

    /// Checks the defining axioms on the enumerated host: contains the
    /// neutral element, closed under the side's operation, and closed in
    /// the side's direction.
    pub fn is_valid(&self) -> Result<bool> {
        let t = self.host.enumerate_elements()?;
        let m = self.members()?;
        if !m.get(S::neutral(&t)) {
            return Ok(false);
        }
        for a in m.ones() {
            for b in t.ids() {
                if S::principal(&t, a, b) && !m.get(b) {
                    return Ok(false);
                }
                if m.get(b) && !m.get(S::combine(&t, a, b)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
