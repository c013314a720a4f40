//! Finite commutative rings given by addition and multiplication tables.
//! Every question is answered by walking the carrier.

use super::{distinct_powers, RingOracle};
use crate::error::{Error, Result};
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

/// Largest table accepted; validation is cubic in the size.
pub const MAX_TABLE: usize = 256;

/// On-disk form of a finite ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingTable {
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

#[derive(Debug)]
struct Tables {
    names: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
}

/// A finite ring. Quotients remember how the parent's elements project.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    t: Arc<Tables>,
    /// Parent element index to class index, for rings built by `quotient`.
    from_parent: Option<Arc<Vec<usize>>>,
}

impl FiniteRing {
    pub fn from_table(table: RingTable) -> Result<FiniteRing> {
        let n = table.elements.len();
        let bad = |m: String| Error::Invalid(format!("ring table: {m}"));
        if n == 0 || n > MAX_TABLE {
            return Err(bad(format!("{n} elements (1..={MAX_TABLE} allowed)")));
        }
        for (name, tab) in [("add", &table.add), ("mul", &table.mul)] {
            if tab.len() != n || tab.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
                return Err(bad(format!("`{name}` is not an {n}×{n} table over the elements")));
            }
        }
        if table.zero >= n || table.one >= n {
            return Err(bad("zero/one out of range".into()));
        }
        let (a, m, z, o) = (&table.add, &table.mul, table.zero, table.one);
        let mut neg = vec![usize::MAX; n];
        for x in 0..n {
            if a[z][x] != x || m[o][x] != x {
                return Err(bad(format!("identity law fails at `{}`", table.elements[x])));
            }
            neg[x] = (0..n).find(|&y| a[x][y] == z).ok_or_else(|| bad(format!("`{}` has no negative", table.elements[x])))?;
            for y in 0..n {
                if a[x][y] != a[y][x] || m[x][y] != m[y][x] {
                    return Err(bad("operations are not commutative".into()));
                }
                for w in 0..n {
                    if a[a[x][y]][w] != a[x][a[y][w]] || m[m[x][y]][w] != m[x][m[y][w]] {
                        return Err(bad("operations are not associative".into()));
                    }
                    if m[x][a[y][w]] != a[m[x][y]][m[x][w]] {
                        return Err(bad("multiplication does not distribute".into()));
                    }
                }
            }
        }
        Ok(FiniteRing {
            t: Arc::new(Tables { names: table.elements, add: table.add, mul: table.mul, neg, zero: z, one: o }),
            from_parent: None,
        })
    }

    /// Tabulates any ring with a small enough carrier.
    pub fn from_oracle<R: RingOracle>(r: &R) -> Result<FiniteRing> {
        let all = r.enumerate().ok_or_else(|| Error::Ring(format!("{}: carrier is not enumerable", r.describe())))?;
        if all.len() > MAX_TABLE {
            return Err(Error::Ring(format!("{}: carrier too large to tabulate", r.describe())));
        }
        let index: HashMap<&R::El, usize> = all.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let op = |f: &dyn Fn(&R::El, &R::El) -> R::El| -> Vec<Vec<usize>> {
            all.iter().map(|x| all.iter().map(|y| index[&f(x, y)]).collect()).collect()
        };
        FiniteRing::from_table(RingTable {
            elements: all.iter().map(|x| r.show(x)).collect(),
            add: op(&|x, y| r.add(x, y)),
            mul: op(&|x, y| r.mul(x, y)),
            zero: index[&r.zero()],
            one: index[&r.one()],
        })
    }

    pub fn from_json(text: &str) -> Result<FiniteRing> {
        FiniteRing::from_table(serde_json::from_str(text)?)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<FiniteRing> {
        FiniteRing::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_table(&self) -> RingTable {
        RingTable {
            elements: self.t.names.clone(),
            add: self.t.add.clone(),
            mul: self.t.mul.clone(),
            zero: self.t.zero,
            one: self.t.one,
        }
    }

    /// `ℤ/n` as a table, elements named by their residues.
    pub fn zmod(n: usize) -> Result<FiniteRing> {
        if n == 0 || n > MAX_TABLE {
            return Err(Error::Invalid(format!("ℤ/{n} is out of range for a table ring")));
        }
        FiniteRing::from_table(RingTable {
            elements: (0..n).map(|i| i.to_string()).collect(),
            add: (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect(),
            mul: (0..n).map(|i| (0..n).map(|j| (i * j) % n).collect()).collect(),
            zero: 0,
            one: 1 % n,
        })
    }

    /// Direct product; elements are named `(a,b)`.
    pub fn product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing> {
        let (na, nb) = (a.len(), b.len());
        if na * nb > MAX_TABLE {
            return Err(Error::Invalid("product is too large for a table ring".into()));
        }
        let idx = |i: usize, j: usize| i * nb + j;
        let mut elements = Vec::new();
        for i in 0..na {
            for j in 0..nb {
                elements.push(format!("({},{})", a.t.names[i], b.t.names[j]));
            }
        }
        let op = |ta: &Vec<Vec<usize>>, tb: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            (0..na * nb).map(|x| (0..na * nb).map(|y| idx(ta[x / nb][y / nb], tb[x % nb][y % nb])).collect()).collect()
        };
        FiniteRing::from_table(RingTable {
            add: op(&a.t.add, &b.t.add),
            mul: op(&a.t.mul, &b.t.mul),
            elements,
            zero: idx(a.t.zero, b.t.zero),
            one: idx(a.t.one, b.t.one),
        })
    }

    pub fn len(&self) -> usize {
        self.t.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, x: usize) -> &str {
        &self.t.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.t.names.iter().position(|n| n == name)
    }

    /// The ideal generated by `gens`, as a membership vector.
    pub fn ideal(&self, gens: &[usize]) -> Vec<bool> {
        let n = self.len();
        let mut inside = vec![false; n];
        inside[self.t.zero] = true;
        let mut members = vec![self.t.zero];
        let push = |v: usize, inside: &mut Vec<bool>, members: &mut Vec<usize>| {
            if !inside[v] {
                inside[v] = true;
                members.push(v);
            }
        };
        for &g in gens {
            for r in 0..n {
                push(self.t.mul[r][g], &mut inside, &mut members);
            }
        }
        // Close under addition; multiples of sums are sums of multiples.
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j <= i {
                let s = self.t.add[a][members[j]];
                push(s, &mut inside, &mut members);
                j += 1;
            }
            i += 1;
        }
        inside
    }

    /// All ideals, by closing `{0}` under adding one generator at a time.
    pub fn all_ideals(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut seen: Vec<Vec<bool>> = vec![self.ideal(&[])];
        let mut i = 0;
        while i < seen.len() {
            let base: Vec<usize> = (0..n).filter(|&x| seen[i][x]).collect();
            for x in 0..n {
                if seen[i][x] {
                    continue;
                }
                let mut g = base.clone();
                g.push(x);
                let next = self.ideal(&g);
                if !seen.contains(&next) {
                    seen.push(next);
                }
            }
            i += 1;
        }
        seen
    }

    /// Prime ideals: proper, and `ab ∈ P` forces `a ∈ P` or `b ∈ P`.
    pub fn prime_ideals(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        self.all_ideals()
            .into_iter()
            .filter(|p| !p[self.t.one] && (0..n).all(|a| (0..n).all(|b| !p[self.t.mul[a][b]] || p[a] || p[b])))
            .collect()
    }
}

impl RingOracle for FiniteRing {
    type El = usize;

    fn describe(&self) -> String {
        format!("finite ring of order {}", self.len())
    }
    fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || (self.t.add == other.t.add && self.t.mul == other.t.mul && self.t.one == other.t.one)
    }
    fn zero(&self) -> usize {
        self.t.zero
    }
    fn one(&self) -> usize {
        self.t.one
    }
    fn add(&self, a: &usize, b: &usize) -> usize {
        self.t.add[*a][*b]
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.t.mul[*a][*b]
    }
    fn neg(&self, a: &usize) -> usize {
        self.t.neg[*a]
    }
    fn show(&self, a: &usize) -> String {
        self.t.names[*a].clone()
    }
    fn parse(&self, s: &str) -> Result<usize> {
        if let Some(i) = self.index_of(s.trim()) {
            return Ok(i);
        }
        let k: i64 = s.trim().parse().map_err(|_| Error::Parse(format!("unknown ring element `{s}`")))?;
        let unit = if k < 0 { self.neg(&self.t.one) } else { self.t.one };
        Ok((0..k.unsigned_abs()).fold(self.t.zero, |acc, _| self.add(&acc, &unit)))
    }

    fn radical_member(&self, x: &usize, gens: &[usize]) -> bool {
        let ideal = self.ideal(gens);
        distinct_powers(self, x).iter().any(|(p, _)| ideal[*p])
    }

    fn ideal_member(&self, x: &usize, gens: &[usize]) -> bool {
        self.ideal(gens)[*x]
    }

    fn enumerate(&self) -> Option<Vec<usize>> {
        Some((0..self.len()).collect())
    }

    fn probes(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> usize {
        rng.gen_range(0..self.len())
    }

    fn search_space(&self, _coeff: u32) -> Vec<usize> {
        (0..self.len()).collect()
    }

    fn quotient(&self, gens: &[usize]) -> Result<FiniteRing> {
        let ideal = self.ideal(gens);
        let n = self.len();
        let mut class = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if class[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for y in 0..n {
                if ideal[self.sub(&y, &x)] {
                    class[y] = c;
                }
            }
        }
        let k = reps.len();
        let op = |tab: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            (0..k).map(|i| (0..k).map(|j| class[tab[reps[i]][reps[j]]]).collect()).collect()
        };
        let names = if k == n {
            self.t.names.clone()
        } else {
            reps.iter().map(|&r| format!("[{}]", self.t.names[r])).collect()
        };
        let mut q = FiniteRing::from_table(RingTable {
            elements: names,
            add: op(&self.t.add),
            mul: op(&self.t.mul),
            zero: class[self.t.zero],
            one: class[self.t.one],
        })?;
        q.from_parent = Some(Arc::new(class));
        Ok(q)
    }

    fn project(&self, target: &FiniteRing, x: &usize) -> usize {
        match &target.from_parent {
            Some(map) if map.len() == self.len() => map[*x],
            _ => *x,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Decision;

    #[test]
    fn rejects_bad_tables() {
        let mut t = FiniteRing::zmod(4).unwrap().to_table();
        t.mul[1][2] = 3;
        assert!(FiniteRing::from_table(t).is_err());
        assert!(FiniteRing::from_json("{\"elements\":[]}").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let r = FiniteRing::product(&FiniteRing::zmod(2).unwrap(), &FiniteRing::zmod(4).unwrap()).unwrap();
        let text = serde_json::to_string(&r.to_table()).unwrap();
        assert_eq!(FiniteRing::from_json(&text).unwrap().to_table(), r.to_table());
        assert_eq!(r.len(), 8);
    }

    #[test]
    fn zmod12_facts() {
        let r = FiniteRing::zmod(12).unwrap();
        let j: Vec<usize> = (0..12).filter(|x| r.jacobson_member(x, &[]) == Decision::Yes).collect();
        assert_eq!(j, vec![0, 6]);
        assert_eq!(r.prime_ideals().len(), 2);
        assert_eq!(r.all_ideals().len(), 6);
        let h = r.heitmann_boundary_generators(&[2]).unwrap();
        assert!(r.one_in_ideal(&h));
    }

    #[test]
    fn quotient_projects() {
        let r = FiniteRing::zmod(12).unwrap();
        let q = r.quotient(&[4]).unwrap();
        assert_eq!(q.len(), 4);
        assert_eq!(r.project(&q, &5), r.project(&q, &1));
        assert_ne!(r.project(&q, &2), q.zero());
        let k = FiniteRing::zmod(4).unwrap();
        let kb = k.krull_boundary_generators(&[2]).unwrap();
        assert!(k.one_in_ideal(&kb));
    }

    #[test]
    fn boolean_cube_is_reduced() {
        let f2 = FiniteRing::zmod(2).unwrap();
        let r = FiniteRing::product(&FiniteRing::product(&f2, &f2).unwrap(), &f2).unwrap();
        assert!((0..8).all(|x| x == 0 || !r.radical_member(&x, &[])));
        assert_eq!(r.prime_ideals().len(), 3);
    }
}
