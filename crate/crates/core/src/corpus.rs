//! Seeded test corpora: small named lattices, random presentations and
//! random posets.

use crate::lattice::{boolean, chain, free_lattice, FinitePoset, Lattice, Relation};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_COUNT: usize = 240;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub lattice: Lattice,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub max_gens: usize,
    pub max_rels: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { seed: DEFAULT_SEED, count: DEFAULT_COUNT, max_gens: 3, max_rels: 3 }
    }
}

const LABELS: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];

/// One random relation `⋀A ≤ ⋁B` over `n` generators; `A` and `B` are
/// disjoint since overlapping sides make the relation trivial.
pub fn random_relation(rng: &mut impl Rng, n: usize) -> Relation {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for g in 0..n {
        match rng.gen_range(0..3) {
            0 => lhs.push(g),
            1 => rhs.push(g),
            _ => {}
        }
    }
    Relation::new(lhs, rhs)
}

/// A presentation on at most `max_gens` generators with at most `max_rels`
/// random relations.
pub fn random_presentation(rng: &mut impl Rng, max_gens: usize, max_rels: usize) -> Lattice {
    let n = rng.gen_range(1..=max_gens.clamp(1, LABELS.len()));
    let k = rng.gen_range(0..=max_rels);
    let rels = (0..k).map(|_| random_relation(rng, n)).collect();
    Lattice::present_labels(&LABELS[..n], rels).expect("labels are distinct and in range")
}

/// Chains, Boolean algebras and free lattices used by every suite.
pub fn named_lattices() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(CorpusEntry { name: format!("chain {n}"), lattice: chain(n) });
    }
    for k in 0..=3 {
        out.push(CorpusEntry { name: format!("boolean 2^{k}"), lattice: boolean(k) });
    }
    for n in 0..=3 {
        out.push(CorpusEntry { name: format!("free {n}"), lattice: free_lattice(n) });
    }
    out
}

pub fn random_corpus(spec: &CorpusSpec) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|i| {
            let lattice = random_presentation(&mut rng, spec.max_gens, spec.max_rels);
            let rels: Vec<String> = lattice.presentation().relations.iter().map(|r| relation_text(&lattice, r)).collect();
            let name = format!("random #{i} [{}]", rels.join(", "));
            CorpusEntry { name, lattice }
        })
        .collect()
}

fn relation_text(t: &Lattice, r: &Relation) -> String {
    let side = |gs: Vec<usize>, empty: &str, op: &str| {
        if gs.is_empty() {
            empty.to_string()
        } else {
            gs.iter().map(|&g| t.labels()[g].clone()).collect::<Vec<_>>().join(op)
        }
    };
    let lhs: Vec<usize> = (0..t.num_generators()).filter(|g| r.lhs_mask() >> g & 1 == 1).collect();
    format!("{} <= {}", side(lhs, "1", "&"), side(r.rhs.clone(), "0", "|"))
}

/// Named lattices followed by the random corpus.
pub fn standard_corpus(spec: &CorpusSpec) -> Vec<CorpusEntry> {
    let mut out = named_lattices();
    out.extend(random_corpus(spec));
    out
}

/// Random posets with 0..=max_points points.
pub fn random_posets(seed: u64, count: usize, max_points: usize) -> Vec<FinitePoset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=max_points);
            let density = rng.gen_range(0.0..0.6);
            FinitePoset::random(&mut rng, n, density)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_large_enough() {
        let a = standard_corpus(&CorpusSpec::default());
        let b = standard_corpus(&CorpusSpec::default());
        assert!(a.len() >= 200);
        assert!(a.iter().zip(&b).all(|(x, y)| x.name == y.name && x.lattice.same_models(&y.lattice)));
        let r = random_corpus(&CorpusSpec::default());
        assert!(r.len() >= 200);
        assert!(r.iter().all(|e| e.lattice.num_generators() <= 3 && e.lattice.relations().len() <= 3));
    }

    #[test]
    fn corpus_is_varied() {
        let a = random_corpus(&CorpusSpec::default());
        let mut sizes: Vec<usize> = a.iter().map(|e| e.lattice.enumerate_elements().unwrap().len()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        assert!(sizes.len() >= 6, "{sizes:?}");
        assert!(a.iter().any(|e| e.lattice.is_trivial()));
    }

    #[test]
    fn posets_respect_bounds() {
        let ps = random_posets(1, 50, 8);
        assert!(ps.iter().all(|p| p.len() <= 8));
        assert!(ps.iter().any(|p| p.len() >= 6));
    }
}
