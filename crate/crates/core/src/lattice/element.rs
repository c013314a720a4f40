use std::fmt;

/// A finite meet of generators, stored as a bitmask; the empty meet is 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MeetTerm(pub u64);

impl MeetTerm {
    pub const TOP: MeetTerm = MeetTerm(0);

    pub fn from_gens(gens: impl IntoIterator<Item = usize>) -> Self {
        MeetTerm(gens.into_iter().fold(0, |m, g| m | 1 << g))
    }

    pub fn gens(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |g| self.0 >> g & 1 == 1)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `self ≤ other` in the free lattice: `self` mentions every generator of `other`.
    pub fn below(self, other: MeetTerm) -> bool {
        other.0 & !self.0 == 0
    }
}

impl fmt::Debug for MeetTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.gens().collect::<Vec<_>>())
    }
}

/// Join of meet terms, kept as an antichain. Syntactic equality of two
/// `Element`s implies semantic equality but not conversely; compare
/// through a [`crate::lattice::Lattice`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    terms: Vec<MeetTerm>,
}

fn term_order(a: &MeetTerm, b: &MeetTerm) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then(a.0.reverse_bits().cmp(&b.0.reverse_bits()).reverse())
}

impl Element {
    pub fn bottom() -> Self {
        Element { terms: Vec::new() }
    }

    pub fn top() -> Self {
        Element { terms: vec![MeetTerm::TOP] }
    }

    pub fn generator(i: usize) -> Self {
        Element { terms: vec![MeetTerm(1 << i)] }
    }

    pub fn term(t: MeetTerm) -> Self {
        Element { terms: vec![t] }
    }

    /// Irredundant antichain built from arbitrary terms.
    pub fn from_terms(terms: impl IntoIterator<Item = MeetTerm>) -> Self {
        let mut ts: Vec<MeetTerm> = terms.into_iter().collect();
        ts.sort_by(term_order);
        ts.dedup();
        let mut out: Vec<MeetTerm> = Vec::with_capacity(ts.len());
        for t in ts {
            // Terms arrive by increasing size, so only earlier ones can absorb t.
            if !out.iter().any(|&s| t.below(s)) {
                out.push(t);
            }
        }
        Element { terms: out }
    }

    pub fn terms(&self) -> &[MeetTerm] {
        &self.terms
    }

    pub fn is_syntactic_bottom(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_syntactic_top(&self) -> bool {
        self.terms.first() == Some(&MeetTerm::TOP)
    }

    /// Union of all generators mentioned.
    pub fn support(&self) -> u64 {
        self.terms.iter().fold(0, |m, t| m | t.0)
    }

    pub fn eval(&self, model: u64) -> bool {
        self.terms.iter().any(|t| t.0 & !model == 0)
    }

    pub fn join(&self, other: &Element) -> Element {
        Element::from_terms(self.terms.iter().chain(&other.terms).copied())
    }

    pub fn meet(&self, other: &Element) -> Element {
        Element::from_terms(self.terms.iter().flat_map(|a| other.terms.iter().map(move |b| MeetTerm(a.0 | b.0))))
    }

    /// The same lattice element written in the opposite lattice, where meets
    /// and joins trade places: terms of the result are the minimal hitting
    /// sets of the terms of `self`.
    pub fn dual(&self) -> Element {
        let mut acc = Element::top();
        for t in &self.terms {
            let clause = Element::from_terms(t.gens().map(|g| MeetTerm(1 << g)));
            acc = acc.meet(&clause);
        }
        acc
    }

    pub fn display(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|t| {
                if t.is_empty() {
                    "1".to_string()
                } else {
                    t.gens().map(|g| labels.get(g).cloned().unwrap_or_else(|| format!("#{g}"))).collect::<Vec<_>>().join("&")
                }
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_reduction() {
        let e = Element::from_terms([MeetTerm(0b11), MeetTerm(0b01), MeetTerm(0b01)]);
        assert_eq!(e.terms(), &[MeetTerm(0b01)]);
        assert_eq!(Element::top().join(&Element::generator(3)), Element::top());
        assert_eq!(Element::bottom().meet(&Element::generator(3)), Element::bottom());
    }

    #[test]
    fn dual_of_constants_and_terms() {
        assert_eq!(Element::bottom().dual(), Element::top());
        assert_eq!(Element::top().dual(), Element::bottom());
        let xy = Element::term(MeetTerm(0b11));
        assert_eq!(xy.dual(), Element::generator(0).join(&Element::generator(1)));
        assert_eq!(xy.dual().dual(), xy);
    }
}
