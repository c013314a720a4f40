use super::{Element, Lattice, MeetTerm};
use crate::bits::Bits;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::OnceLock;

/// Operation tables are precomputed up to this many elements.
const TABLE_LIMIT: usize = 1024;

/// Every distinct element of a finite lattice, indexed `0..len()`.
///
/// Ids are sorted by the size of the model set, so `0` is the bottom, the
/// last id is the top, and `a < b` implies `id(a) < id(b)`.
pub struct ElementTable {
    elements: Vec<Element>,
    sets: Vec<Bits>,
    index: HashMap<Bits, usize>,
    ops: OnceLock<Option<(Vec<u32>, Vec<u32>)>>,
}

pub(super) fn build(t: &Lattice) -> Result<ElementTable> {
    let m = t.num_models();
    let n = t.num_generators();
    let ceiling = t.ceiling();
    let gen_sets: Vec<Bits> = (0..n).map(|g| t.set_unchecked(&Element::generator(g))).collect();

    // Distinct meets of generators, smallest masks first.
    let mut terms: Vec<(MeetTerm, Bits)> = vec![(MeetTerm::TOP, Bits::full(m))];
    let mut seen: HashMap<Bits, usize> = HashMap::from([(Bits::full(m), 0)]);
    let mut i = 0;
    while i < terms.len() {
        let (mask, set) = terms[i].clone();
        for (g, gs) in gen_sets.iter().enumerate() {
            if mask.0 >> g & 1 == 1 {
                continue;
            }
            let s = set.and(gs);
            if !seen.contains_key(&s) {
                seen.insert(s.clone(), terms.len());
                terms.push((MeetTerm(mask.0 | 1 << g), s));
                if terms.len() > ceiling {
                    return Err(Error::CeilingExceeded(ceiling));
                }
            }
        }
        i += 1;
    }
    terms.retain(|(_, s)| !s.is_empty());

    // Join closure starting from the bottom.
    let mut sets: Vec<Bits> = vec![Bits::new(m)];
    let mut index: HashMap<Bits, usize> = HashMap::from([(Bits::new(m), 0)]);
    let mut i = 0;
    while i < sets.len() {
        let cur = sets[i].clone();
        for (_, ts) in &terms {
            let s = cur.or(ts);
            if !index.contains_key(&s) {
                if sets.len() >= ceiling {
                    return Err(Error::CeilingExceeded(ceiling));
                }
                index.insert(s.clone(), sets.len());
                sets.push(s);
            }
        }
        i += 1;
    }
    sets.sort_by(|a, b| a.count().cmp(&b.count()).then_with(|| a.cmp(b)));

    // Canonical form: the maximal meet terms lying below the element.
    let elements = sets
        .iter()
        .map(|s| {
            let below: Vec<&(MeetTerm, Bits)> = terms.iter().filter(|(_, ts)| ts.is_subset(s)).collect();
            let maximal = below.iter().filter(|(_, ts)| !below.iter().any(|(_, us)| us != ts && ts.is_subset(us))).map(|(mt, _)| *mt);
            Element::from_terms(maximal)
        })
        .collect();
    let index = sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    Ok(ElementTable { elements, sets, index, ops: OnceLock::new() })
}

impl ElementTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Element {
        &self.elements[id]
    }

    pub fn set(&self, id: usize) -> &Bits {
        &self.sets[id]
    }

    pub fn ids(&self) -> std::ops::Range<usize> {
        0..self.elements.len()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn id_of_set(&self, s: &Bits) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn id_of(&self, t: &Lattice, a: &Element) -> Result<usize> {
        let s = t.set_of(a)?;
        self.id_of_set(&s).ok_or_else(|| Error::Invalid("element table does not belong to this lattice".into()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        crate::fault::model_leq(&self.sets[a], &self.sets[b])
    }

    fn tables(&self) -> Option<&(Vec<u32>, Vec<u32>)> {
        self.ops
            .get_or_init(|| {
                let n = self.len();
                if n > TABLE_LIMIT {
                    return None;
                }
                let mut meet = vec![0u32; n * n];
                let mut join = vec![0u32; n * n];
                for a in 0..n {
                    for b in a..n {
                        let m = self.index[&self.sets[a].and(&self.sets[b])] as u32;
                        let j = self.index[&self.sets[a].or(&self.sets[b])] as u32;
                        meet[a * n + b] = m;
                        meet[b * n + a] = m;
                        join[a * n + b] = j;
                        join[b * n + a] = j;
                    }
                }
                Some((meet, join))
            })
            .as_ref()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        match self.tables() {
            Some((m, _)) => m[a * self.len() + b] as usize,
            None => self.index[&self.sets[a].and(&self.sets[b])],
        }
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        match self.tables() {
            Some((_, j)) => j[a * self.len() + b] as usize,
            None => self.index[&self.sets[a].or(&self.sets[b])],
        }
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    /// Atoms: elements covering the bottom.
    pub fn upper_covers_of_bottom(&self) -> Vec<usize> {
        self.ids()
            .filter(|&a| a != self.bottom() && !self.ids().any(|b| b != a && b != self.bottom() && self.sets[b].is_subset(&self.sets[a])))
            .collect()
    }

    /// Bitset over ids of the elements accepted by `pred`.
    pub fn collect(&self, pred: impl Fn(usize) -> bool) -> Bits {
        Bits::from_indices(self.len(), self.ids().filter(|&i| pred(i)))
    }

    /// Ids of the join-irreducible elements (nonzero, not the join of two strictly smaller elements).
    pub fn join_irreducibles(&self) -> Vec<usize> {
        self.ids()
            .filter(|&a| {
                if a == self.bottom() {
                    return false;
                }
                let below: Vec<usize> = self.ids().filter(|&b| b != a && self.sets[b].is_subset(&self.sets[a])).collect();
                self.join_all(below) != a
            })
            .collect()
    }
}
