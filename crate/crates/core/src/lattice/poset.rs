use super::{Element, Lattice, MeetTerm, MAX_GENERATORS};
use crate::error::{Error, Result};
use rand::Rng;

/// A finite partial order on `0..len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    le: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Reflexive-transitive closure of `pairs` (`(a, b)` meaning `a ≤ b`).
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Invalid(format!("pair ({a}, {b}) out of range")));
            }
            le[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && le[i][j] && le[j][i] {
                    return Err(Error::Invalid(format!("cycle through {i} and {j}")));
                }
            }
        }
        Ok(FinitePoset { le })
    }

    pub fn from_fn(n: usize, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let pairs: Vec<_> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| le(i, j)).collect();
        let p = Self::from_pairs(n, &pairs)?;
        if (0..n).any(|i| (0..n).any(|j| p.le[i][j] != (i == j || le(i, j)))) {
            return Err(Error::Invalid("relation is not transitive".into()));
        }
        Ok(p)
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_pairs(n, &[]).expect("valid")
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(n, &pairs).expect("valid")
    }

    /// Random poset: each pair `i < j` is related with probability `density`.
    pub fn random(rng: &mut impl Rng, n: usize, density: f64) -> Self {
        let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let chosen: Vec<_> = pairs.into_iter().filter(|_| rng.gen_bool(density)).collect();
        Self::from_pairs(n, &chosen).expect("edges go upward, so no cycles")
    }

    pub fn len(&self) -> usize {
        self.le.len()
    }

    pub fn is_empty(&self) -> bool {
        self.le.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    /// Strict pairs `a < b`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i != j && self.le[i][j]).collect()
    }

    /// Covering pairs `a ⋖ b` (the Hasse diagram).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        self.strict_pairs().into_iter().filter(|&(a, b)| !(0..n).any(|c| c != a && c != b && self.le[a][c] && self.le[c][b])).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| j == i || !self.le[i][j])).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| j == i || !self.le[j][i])).collect()
    }

    /// Number of points in the longest chain, minus one; `-1` when empty.
    pub fn height(&self) -> i64 {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&j| self.le[j][i]).count());
        let mut best = vec![0i64; n];
        for (k, &i) in order.iter().enumerate() {
            for &j in &order[..k] {
                if j != i && self.le[j][i] {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(-1)
    }

    pub fn isomorphic(&self, other: &FinitePoset) -> bool {
        super::poset_isomorphism(self.len(), |a, b| self.leq(a, b), other.len(), |a, b| other.leq(a, b)).is_some()
    }
}

/// Lattice of down-sets of `p`. Generator `p{i}` is the principal down-set of
/// point `i`; the model attached to point `i` sends a down-set to 1 iff it
/// contains `i`. Hence the prime ideal of point `i` is the set of down-sets
/// not containing `i`, and the spectrum ordered by inclusion is `p` itself.
pub fn downset_lattice(p: &FinitePoset) -> Result<Lattice> {
    let n = p.len();
    if n > MAX_GENERATORS {
        return Err(Error::TooManyGenerators { count: n, limit: MAX_GENERATORS });
    }
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    let models = (0..n).map(|i| (0..n).filter(|&q| p.leq(i, q)).fold(0u64, |m, q| m | 1 << q)).collect();
    Lattice::from_models(labels, models)
}

/// Rebuild a finite distributive lattice given only by its order on `0..n`.
/// Returns the lattice and the element corresponding to each input point.
pub fn lattice_from_order(n: usize, le: impl Fn(usize, usize) -> bool) -> Result<(Lattice, Vec<Element>)> {
    if n == 0 {
        return Err(Error::Invalid("a lattice has at least one element".into()));
    }
    let lower_covers = |x: usize| {
        (0..n).filter(|&y| y != x && le(y, x) && !(0..n).any(|z| z != x && z != y && le(y, z) && le(z, x))).count()
    };
    let irr: Vec<usize> = (0..n).filter(|&x| lower_covers(x) == 1).collect();
    let jp = FinitePoset::from_fn(irr.len(), |a, b| le(irr[a], irr[b]))?;
    let lat = downset_lattice(&jp)?;
    let elems: Vec<Element> =
        (0..n).map(|x| Element::from_terms(irr.iter().enumerate().filter(|(_, &j)| le(j, x)).map(|(k, _)| MeetTerm(1 << k)))).collect();
    let table = lat.enumerate_elements()?;
    let mut seen = std::collections::HashSet::new();
    for e in &elems {
        seen.insert(table.id_of(&lat, e)?);
    }
    if seen.len() != n || table.len() != n {
        return Err(Error::Invalid("order is not a finite distributive lattice".into()));
    }
    Ok((lat, elems))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain, order_isomorphic};

    #[test]
    fn downsets_of_antichain_and_chain() {
        for n in 0..=4 {
            let b = downset_lattice(&FinitePoset::antichain(n)).unwrap();
            assert!(order_isomorphic(&b, &boolean(n)).unwrap());
        }
        for k in 0..=4 {
            let c = downset_lattice(&FinitePoset::chain(k)).unwrap();
            assert_eq!(c.enumerate_elements().unwrap().len(), k + 1);
        }
    }

    #[test]
    fn rebuild_from_order() {
        let c = chain(5);
        let t = c.enumerate_elements().unwrap();
        let (l, elems) = lattice_from_order(t.len(), |a, b| t.set(a).is_subset(t.set(b))).unwrap();
        assert!(order_isomorphic(&l, &c).unwrap());
        assert_eq!(elems.len(), 5);
    }

    #[test]
    fn rejects_non_distributive() {
        // M3: 0 < a, b, c < 1
        let le = |x: usize, y: usize| x == y || x == 0 || y == 4;
        assert!(lattice_from_order(5, le).is_err());
    }

    #[test]
    fn height() {
        assert_eq!(FinitePoset::chain(4).height(), 3);
        assert_eq!(FinitePoset::antichain(3).height(), 0);
        assert_eq!(FinitePoset::antichain(0).height(), -1);
    }
}
