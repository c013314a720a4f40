//! Heyting implication, Brouwer difference, complements, and the Boolean envelope.

use crate::error::{Error, Result};
use crate::ideals::{FilterHandle, IdealHandle};
use crate::lattice::{Element, ElementTable, Lattice, LatticeHom, MeetTerm, Relation};

fn maximum(t: &ElementTable, cands: &[usize]) -> Option<usize> {
    cands.iter().copied().find(|&m| cands.iter().all(|&x| t.leq(x, m)))
}

fn minimum(t: &ElementTable, cands: &[usize]) -> Option<usize> {
    cands.iter().copied().find(|&m| cands.iter().all(|&x| t.leq(m, x)))
}

pub(crate) fn implication_id(t: &ElementTable, b: usize, c: usize) -> Option<usize> {
    let xs: Vec<usize> = t.ids().filter(|&x| t.leq(t.meet(x, b), c)).collect();
    maximum(t, &xs)
}

pub(crate) fn difference_id(t: &ElementTable, c: usize, b: usize) -> Option<usize> {
    let zs: Vec<usize> = t.ids().filter(|&z| t.leq(c, t.join(z, b))).collect();
    minimum(t, &zs)
}

/// `b → c`: the largest `x` with `x ∧ b ≤ c`.
pub fn implication(host: &Lattice, b: &Element, c: &Element) -> Result<Element> {
    let t = host.enumerate_elements()?;
    let (bi, ci) = (t.id_of(host, b)?, t.id_of(host, c)?);
    implication_id(&t, bi, ci)
        .map(|i| t.element(i).clone())
        .ok_or_else(|| Error::NotPrincipal(format!("conductor ({} : {})", host.display(c), host.display(b))))
}

/// `¬x = x → 0`.
pub fn negation(host: &Lattice, x: &Element) -> Result<Element> {
    implication(host, x, &Element::bottom())
}

/// `c − b`: the smallest `z` with `c ≤ z ∨ b`.
pub fn brouwer_difference(host: &Lattice, c: &Element, b: &Element) -> Result<Element> {
    let t = host.enumerate_elements()?;
    let (ci, bi) = (t.id_of(host, c)?, t.id_of(host, b)?);
    difference_id(&t, ci, bi)
        .map(|i| t.element(i).clone())
        .ok_or_else(|| Error::NotPrincipal(format!("difference filter ({} \\ {})", host.display(c), host.display(b))))
}

/// `1 − x`.
pub fn brouwer_complement(host: &Lattice, x: &Element) -> Result<Element> {
    brouwer_difference(host, &Element::top(), x)
}

pub(crate) fn complement_id(t: &ElementTable, x: usize) -> Option<usize> {
    t.ids().find(|&y| t.meet(x, y) == t.bottom() && t.join(x, y) == t.top())
}

pub fn complement(host: &Lattice, x: &Element) -> Result<Element> {
    let t = host.enumerate_elements()?;
    let xi = t.id_of(host, x)?;
    complement_id(&t, xi).map(|i| t.element(i).clone()).ok_or_else(|| Error::NoComplement(host.display(x)))
}

pub fn is_boolean(host: &Lattice) -> Result<bool> {
    let t = host.enumerate_elements()?;
    Ok(t.ids().all(|x| complement_id(&t, x).is_some()))
}

/// Filter generated by all `x ∨ ¬x`.
pub fn f_min(host: &Lattice) -> Result<FilterHandle> {
    let t = host.enumerate_elements()?;
    let mut gens = Vec::with_capacity(t.len());
    for x in t.ids() {
        let n = implication_id(&t, x, t.bottom()).ok_or_else(|| Error::NotPrincipal("negation".into()))?;
        gens.push(t.element(t.join(x, n)).clone());
    }
    FilterHandle::generated(host, &gens)
}

/// Ideal generated by all `x ∧ (1 − x)`.
pub fn i_max(host: &Lattice) -> Result<IdealHandle> {
    let t = host.enumerate_elements()?;
    let mut gens = Vec::with_capacity(t.len());
    for x in t.ids() {
        let n = difference_id(&t, t.top(), x).ok_or_else(|| Error::NotPrincipal("Brouwer complement".into()))?;
        gens.push(t.element(t.meet(x, n)).clone());
    }
    IdealHandle::generated(host, &gens)
}

/// Full implication table of a finite lattice (every finite distributive
/// lattice is a Heyting algebra).
pub struct HeytingWitness {
    host: Lattice,
    n: usize,
    imp: Vec<usize>,
}

impl HeytingWitness {
    pub fn build(host: &Lattice) -> Result<Self> {
        let t = host.enumerate_elements()?;
        let n = t.len();
        let mut imp = Vec::with_capacity(n * n);
        for a in t.ids() {
            for b in t.ids() {
                imp.push(implication_id(&t, a, b).ok_or_else(|| Error::NotPrincipal("implication".into()))?);
            }
        }
        Ok(HeytingWitness { host: host.clone(), n, imp })
    }

    pub fn host(&self) -> &Lattice {
        &self.host
    }

    /// Id of `a → b`.
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.n + b]
    }

    /// `a→a = 1`, `a∧(a→b) = a∧b`, `b∧(a→b) = b`, `a→(b∧c) = (a→b)∧(a→c)`.
    pub fn check_axioms(&self) -> Result<bool> {
        let t = self.host.enumerate_elements()?;
        for a in t.ids() {
            if self.imp(a, a) != t.top() {
                return Ok(false);
            }
            for b in t.ids() {
                let ab = self.imp(a, b);
                if t.meet(a, ab) != t.meet(a, b) || t.meet(b, ab) != b {
                    return Ok(false);
                }
                for c in t.ids() {
                    if self.imp(a, t.meet(b, c)) != t.meet(ab, self.imp(a, c)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// `T^bool` with the embeddings of `T` (undotted generators) and of the
/// opposite lattice (dotted generators).
#[derive(Clone, Debug)]
pub struct BooleanEnvelope {
    pub lattice: Lattice,
    pub embedding: LatticeHom,
    pub co_embedding: LatticeHom,
}

/// Largest generator count for which the generating rule is instantiated
/// over every quadruple of generator subsets (16^n instances).
pub const ENVELOPE_FULL_RULE_LIMIT: usize = 4;

/// Relations of `T^bool`: for generator subsets `A, B, E, F`, whenever
/// `⋀A ∧ ⋀E ≤ ⋁B ∨ ⋁F` holds in `T`, impose `⋀A ∧ ⋀Ḟ ≤ ⋁B ∨ ⋁Ė`.
/// Above [`ENVELOPE_FULL_RULE_LIMIT`] generators only the instances
/// `g ∧ ġ ≤ 0`, `1 ≤ g ∨ ġ` and the relations of `T` are used, which
/// determine the same models.
pub fn envelope_relations(host: &Lattice) -> Vec<Relation> {
    let n = host.num_generators();
    let models = host.models();
    let entails = |lhs: u64, rhs: u64| models.iter().all(|&v| lhs & !v != 0 || rhs & v != 0);
    let dot = |m: u64| m << n;
    let mut rels = Vec::new();
    if n <= ENVELOPE_FULL_RULE_LIMIT {
        for code in 0..1u64 << (4 * n) {
            let (mut a, mut b, mut e, mut f) = (0u64, 0u64, 0u64, 0u64);
            for g in 0..n {
                let c = code >> (4 * g);
                a |= (c & 1) << g;
                b |= (c >> 1 & 1) << g;
                e |= (c >> 2 & 1) << g;
                f |= (c >> 3 & 1) << g;
            }
            if entails(a | e, b | f) {
                let lhs = a | dot(f);
                let rhs = b | dot(e);
                rels.push(Relation { lhs: vec![MeetTerm(lhs)], rhs: (0..2 * n).filter(|g| rhs >> g & 1 == 1).collect() });
            }
        }
    } else {
        rels.extend(host.presentation().relations);
        for g in 0..n {
            rels.push(Relation::new([g, n + g], []));
            rels.push(Relation::new([], [g, n + g]));
        }
    }
    rels
}

pub fn boolean_envelope(host: &Lattice) -> Result<BooleanEnvelope> {
    let n = host.num_generators();
    let mut labels: Vec<String> = host.labels().to_vec();
    labels.extend(host.labels().iter().map(|l| format!("{l}'")));
    let env = Lattice::present(labels, envelope_relations(host))?.with_ceiling(host.ceiling());
    let embedding = LatticeHom::new(host, &env, (0..n).map(Element::generator).collect())?;
    let co_embedding = LatticeHom::new(&host.opposite(), &env, (0..n).map(|g| Element::generator(n + g)).collect())?;
    Ok(BooleanEnvelope { lattice: env, embedding, co_embedding })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain, free_lattice, order_isomorphic};

    #[test]
    fn implication_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        assert_eq!(implication(&c, &m, &m).unwrap(), Element::top());
        assert_eq!(implication(&c, &m, &Element::bottom()).unwrap(), Element::bottom());
        let b = boolean(2);
        let (a, na) = (b.gen("a").unwrap(), b.gen("b").unwrap());
        assert!(b.equal(&implication(&b, &a, &Element::bottom()).unwrap(), &na).unwrap());
    }

    #[test]
    fn negation_examples() {
        let c = chain(3);
        assert_eq!(negation(&c, &Element::bottom()).unwrap(), Element::top());
        assert_eq!(negation(&c, &Element::top()).unwrap(), Element::bottom());
        assert_eq!(negation(&c, &c.gen("m").unwrap()).unwrap(), Element::bottom());
        let b = boolean(2);
        let a = b.gen("a").unwrap();
        let nn = negation(&b, &negation(&b, &a).unwrap()).unwrap();
        assert!(b.equal(&nn, &a).unwrap());
    }

    #[test]
    fn brouwer_examples() {
        let c = chain(3);
        let m = c.gen("m").unwrap();
        assert!(c.equal(&brouwer_difference(&c, &m, &Element::bottom()).unwrap(), &m).unwrap());
        assert_eq!(brouwer_complement(&c, &Element::top()).unwrap(), Element::bottom());
        assert_eq!(brouwer_complement(&c, &m).unwrap(), Element::top());
    }

    #[test]
    fn boolean_examples() {
        assert!(is_boolean(&free_lattice(0)).unwrap());
        assert!(!is_boolean(&chain(3)).unwrap());
        assert!(!is_boolean(&free_lattice(2)).unwrap());
        let c = chain(3);
        assert!(matches!(complement(&c, &c.gen("m").unwrap()), Err(Error::NoComplement(_))));
        let b = boolean(3);
        assert!(is_boolean(&b).unwrap());
    }

    #[test]
    fn f_min_i_max_examples() {
        let b = boolean(2);
        assert_eq!(f_min(&b).unwrap().members().unwrap().count(), 1);
        assert_eq!(i_max(&b).unwrap().members().unwrap().count(), 1);
        let c = chain(3);
        assert_eq!(f_min(&c).unwrap().members().unwrap().ones().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(i_max(&c).unwrap().members().unwrap().ones().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn witness_axioms() {
        for l in [chain(4), free_lattice(2), boolean(2)] {
            assert!(HeytingWitness::build(&l).unwrap().check_axioms().unwrap());
        }
    }

    #[test]
    fn envelope_examples() {
        let two = free_lattice(0);
        assert!(order_isomorphic(&boolean_envelope(&two).unwrap().lattice, &two).unwrap());
        assert!(order_isomorphic(&boolean_envelope(&free_lattice(1)).unwrap().lattice, &boolean(2)).unwrap());
        assert!(order_isomorphic(&boolean_envelope(&chain(3)).unwrap().lattice, &boolean(2)).unwrap());
        assert_eq!(boolean_envelope(&free_lattice(2)).unwrap().lattice.enumerate_elements().unwrap().len(), 1 << 4);
    }

    #[test]
    fn envelope_models_are_model_pairs() {
        for l in [chain(5), free_lattice(2), boolean(3)] {
            let env = boolean_envelope(&l).unwrap().lattice;
            let n = l.num_generators();
            let mask = (1u64 << n) - 1;
            let mut want: Vec<u64> = l.models().iter().map(|&v| v | ((!v & mask) << n)).collect();
            want.sort_unstable();
            assert_eq!(env.models(), &want[..]);
        }
    }
}
