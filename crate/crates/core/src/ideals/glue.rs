use super::{quotient, QuotientMap};
use crate::error::{Error, Result};
use crate::lattice::{lattice_from_order, Element, ElementTable, Lattice, LatticeHom};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

fn pair(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

fn triple(i: usize, j: usize, k: usize) -> (usize, usize, usize) {
    let mut v = [i, j, k];
    v.sort_unstable();
    (v[0], v[1], v[2])
}

/// Gluing data along principal ideals.
///
/// `proj[(i, j)]` maps piece `i` onto the overlap `overlaps[(min, max)]` and
/// must be the quotient by `↓s[(i, j)]`. `proj3[((i, j), k)]` maps the
/// overlap of `i < j` onto the triple overlap with `k`.
#[derive(Clone, Debug, Default)]
pub struct GluingDiagram {
    pub pieces: Vec<Lattice>,
    pub overlaps: BTreeMap<(usize, usize), Lattice>,
    pub triples: BTreeMap<(usize, usize, usize), Lattice>,
    pub proj: BTreeMap<(usize, usize), LatticeHom>,
    pub proj3: BTreeMap<((usize, usize), usize), LatticeHom>,
    pub s: BTreeMap<(usize, usize), Element>,
}

/// Result of gluing: the limit lattice, its projections onto the pieces,
/// and the elements `s_i` whose principal ideals the projections kill.
#[derive(Clone, Debug)]
pub struct GluedLattice {
    pub lattice: Lattice,
    pub projections: Vec<LatticeHom>,
    pub s: Vec<Element>,
}

impl GluingDiagram {
    fn get<'a, K: Ord + std::fmt::Debug, V>(m: &'a BTreeMap<K, V>, k: K, what: &str) -> Result<&'a V> {
        let msg = format!("missing {what} {k:?}");
        m.get(&k).ok_or(Error::Gluing(msg))
    }

    /// Checks every condition of the gluing statement.
    pub fn validate(&self) -> Result<()> {
        let n = self.pieces.len();
        if n == 0 {
            return Err(Error::Gluing("no pieces".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let over = Self::get(&self.overlaps, pair(i, j), "overlap")?;
                let p = Self::get(&self.proj, (i, j), "projection")?;
                let s = Self::get(&self.s, (i, j), "element s")?;
                if !p.source().same_models(&self.pieces[i]) || !p.target().same_models(over) {
                    return Err(Error::Gluing(format!("projection ({i}, {j}) has the wrong ends")));
                }
                self.pieces[i].check(s)?;
                if !kills_exactly(p, s)? {
                    return Err(Error::Gluing(format!("projection ({i}, {j}) is not the quotient by s_{i}{j}")));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let over = &self.overlaps[&pair(i, j)];
                    let a = self.proj[&(i, j)].apply(&self.s[&(i, k)]);
                    let b = self.proj[&(j, i)].apply(&self.s[&(j, k)]);
                    if !over.equal(&a, &b)? {
                        return Err(Error::Gluing(format!("triple condition fails for ({i}, {j}, {k})")));
                    }
                    let tri = Self::get(&self.triples, triple(i, j, k), "triple overlap")?;
                    let q_ij = Self::get(&self.proj3, (pair(i, j), k), "triple projection")?;
                    let q_ik = Self::get(&self.proj3, (pair(i, k), j), "triple projection")?;
                    if !q_ij.source().same_models(over) || !q_ij.target().same_models(tri) {
                        return Err(Error::Gluing(format!("triple projection ({i}, {j}; {k}) has the wrong ends")));
                    }
                    for g in self.pieces[i].generators() {
                        let via_j = q_ij.apply(&self.proj[&(i, j)].apply(&g));
                        let via_k = q_ik.apply(&self.proj[&(i, k)].apply(&g));
                        if !tri.equal(&via_j, &via_k)? {
                            return Err(Error::Gluing(format!("diagram does not commute at ({i}, {j}, {k})")));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `p` is surjective and identifies exactly the elements congruent modulo `↓s`.
fn kills_exactly(p: &LatticeHom, s: &Element) -> Result<bool> {
    if !p.is_surjective()? {
        return Ok(false);
    }
    let src = p.source();
    let t = src.enumerate_elements()?;
    let map = p.id_map()?;
    let si = t.id_of(src, s)?;
    for a in t.ids() {
        for b in a + 1..t.len() {
            if (map[a] == map[b]) != (t.join(a, si) == t.join(b, si)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Tuples `(x_i)` with `maps[(i,j)](x_i) = maps[(j,i)](x_j)` for all `i < j`.
fn compatible_tuples(tables: &[Arc<ElementTable>], maps: &BTreeMap<(usize, usize), Vec<usize>>) -> Vec<Vec<usize>> {
    let n = tables.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(k: usize, n: usize, tables: &[Arc<ElementTable>], maps: &BTreeMap<(usize, usize), Vec<usize>>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == n {
            out.push(cur.clone());
            return;
        }
        for x in tables[k].ids() {
            if (0..k).all(|i| maps[&(i, k)][cur[i]] == maps[&(k, i)][x]) {
                cur.push(x);
                go(k + 1, n, tables, maps, cur, out);
                cur.pop();
            }
        }
    }
    go(0, n, tables, maps, &mut cur, &mut out);
    out
}

fn tuple_lattice(tables: &[Arc<ElementTable>], tuples: &[Vec<usize>]) -> Result<(Lattice, Vec<Element>)> {
    let le = |a: usize, b: usize| tuples[a].iter().zip(&tuples[b]).zip(tables).all(|((&x, &y), t)| t.leq(x, y));
    lattice_from_order(tuples.len(), le)
}

/// Glue a validated diagram into its projective limit.
pub fn glue(d: &GluingDiagram) -> Result<GluedLattice> {
    d.validate()?;
    let n = d.pieces.len();
    let tables = d.pieces.iter().map(|p| p.enumerate_elements()).collect::<Result<Vec<_>>>()?;
    let mut maps = BTreeMap::new();
    for (&k, p) in &d.proj {
        maps.insert(k, p.id_map()?);
    }
    let tuples = compatible_tuples(&tables, &maps);
    let (lat, elems) = tuple_lattice(&tables, &tuples)?;
    let lt = lat.enumerate_elements()?;
    let mut tuple_of = vec![usize::MAX; lt.len()];
    for (k, e) in elems.iter().enumerate() {
        tuple_of[lt.id_of(&lat, e)?] = k;
    }
    let mut projections = Vec::with_capacity(n);
    for (i, t) in tables.iter().enumerate() {
        let images = lat
            .generators()
            .iter()
            .map(|g| Ok(t.element(tuples[tuple_of[lt.id_of(&lat, g)?]][i]).clone()))
            .collect::<Result<Vec<_>>>()?;
        projections.push(LatticeHom::new(&lat, &d.pieces[i], images)?);
    }
    let mut s = Vec::with_capacity(n);
    for j in 0..n {
        let want: Vec<usize> = (0..n)
            .map(|i| if i == j { Ok(tables[j].bottom()) } else { tables[i].id_of(&d.pieces[i], &d.s[&(i, j)]) })
            .collect::<Result<_>>()?;
        let k = tuples.iter().position(|t| *t == want).ok_or_else(|| Error::Gluing(format!("s_{j} is not a compatible tuple")))?;
        s.push(elems[k].clone());
    }
    Ok(GluedLattice { lattice: lat, projections, s })
}

impl GluedLattice {
    /// Each projection is the quotient by `↓s_i`, and `π_i(s_j) = s_ij`.
    pub fn verify(&self, d: &GluingDiagram) -> Result<bool> {
        for (i, p) in self.projections.iter().enumerate() {
            if !kills_exactly(p, &self.s[i])? {
                return Ok(false);
            }
            for (j, sj) in self.s.iter().enumerate() {
                if i != j && !d.pieces[i].equal(&p.apply(sj), &d.s[&(i, j)])? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Diagram of the quotients of `t` by the principal ideals `↓s_i`, their
/// pairwise and triple overlaps, and `s_ij = π_i(s_j)`.
pub fn diagram_from_ideal_cover(t: &Lattice, s: &[Element]) -> Result<GluingDiagram> {
    let n = s.len();
    let mut d = GluingDiagram::default();
    for si in s {
        d.pieces.push(quotient(t, std::slice::from_ref(si), &[])?.0);
    }
    for i in 0..n {
        for j in i + 1..n {
            d.overlaps.insert((i, j), quotient(t, &[s[i].clone(), s[j].clone()], &[])?.0);
            for k in j + 1..n {
                d.triples.insert((i, j, k), quotient(t, &[s[i].clone(), s[j].clone(), s[k].clone()], &[])?.0);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let over = &d.overlaps[&pair(i, j)];
            d.proj.insert((i, j), LatticeHom::on_generators(&d.pieces[i], over)?);
            d.s.insert((i, j), s[j].clone());
            for k in 0..n {
                if k != i && k != j && i < j {
                    d.proj3.insert(((i, j), k), LatticeHom::on_generators(over, &d.triples[&triple(i, j, k)])?);
                }
            }
        }
    }
    Ok(d)
}

/// The limit of the quotients `T/(s_i = 0)` over their pairwise overlaps,
/// without the gluing data. Equals `T` up to isomorphism when the ideals cover.
pub fn limit_of_ideal_cover(t: &Lattice, s: &[Element]) -> Result<Lattice> {
    if s.is_empty() {
        return Err(Error::Invalid("empty cover".into()));
    }
    let n = s.len();
    let mut qs: Vec<(Lattice, QuotientMap)> = Vec::new();
    for si in s {
        qs.push(quotient(t, std::slice::from_ref(si), &[])?);
    }
    let tables = qs.iter().map(|(q, _)| q.enumerate_elements()).collect::<Result<Vec<_>>>()?;
    let mut maps = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let (_, over) = quotient(&qs[i].0, &[s[j].clone()], &[])?;
                maps.insert((i, j), over.id_map()?);
            }
        }
    }
    // The overlap of i and j is reached from either side through the same
    // model restriction, so target ids agree.
    let tuples = compatible_tuples(&tables, &maps);
    Ok(tuple_lattice(&tables, &tuples)?.0)
}

/// Dual of [`limit_of_ideal_cover`] for the filters `↑u_i`.
pub fn limit_of_filter_cover(t: &Lattice, u: &[Element]) -> Result<Lattice> {
    let op = t.opposite();
    let du: Vec<Element> = u.iter().map(Element::dual).collect();
    Ok(limit_of_ideal_cover(&op, &du)?.opposite())
}

/// File form of a gluing diagram. Lattices are presentation files relative
/// to the document; maps list the image of each source generator.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluingDoc {
    pub pieces: Vec<String>,
    #[serde(default)]
    pub overlaps: Vec<PairFile>,
    #[serde(default)]
    pub triples: Vec<TripleFile>,
    pub projections: Vec<ProjectionDoc>,
    #[serde(default)]
    pub triple_projections: Vec<TripleProjectionDoc>,
    pub s: Vec<SDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairFile {
    pub i: usize,
    pub j: usize,
    pub file: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleFile {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub file: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProjectionDoc {
    pub from: usize,
    pub to: usize,
    pub images: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleProjectionDoc {
    pub pair: (usize, usize),
    pub k: usize,
    pub images: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SDoc {
    pub i: usize,
    pub j: usize,
    pub element: String,
}

impl GluingDoc {
    pub fn load(path: &Path) -> Result<GluingDiagram> {
        let doc: GluingDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        doc.resolve(path.parent().unwrap_or(Path::new(".")))
    }

    pub fn resolve(&self, base: &Path) -> Result<GluingDiagram> {
        let load = |f: &str| Lattice::from_file(&base.join(f));
        let mut d = GluingDiagram::default();
        for p in &self.pieces {
            d.pieces.push(load(p)?);
        }
        for o in &self.overlaps {
            d.overlaps.insert(pair(o.i, o.j), load(&o.file)?);
        }
        for t in &self.triples {
            d.triples.insert(triple(t.i, t.j, t.k), load(&t.file)?);
        }
        let piece = |i: usize| d.pieces.get(i).cloned().ok_or_else(|| Error::Gluing(format!("no piece {i}")));
        for p in &self.projections {
            let src = piece(p.from)?;
            let dst = GluingDiagram::get(&d.overlaps, pair(p.from, p.to), "overlap")?.clone();
            let images = p.images.iter().map(|e| dst.parse_element(e)).collect::<Result<Vec<_>>>()?;
            d.proj.insert((p.from, p.to), LatticeHom::new(&src, &dst, images)?);
        }
        for p in &self.triple_projections {
            let key = pair(p.pair.0, p.pair.1);
            let src = GluingDiagram::get(&d.overlaps, key, "overlap")?.clone();
            let dst = GluingDiagram::get(&d.triples, triple(key.0, key.1, p.k), "triple overlap")?.clone();
            let images = p.images.iter().map(|e| dst.parse_element(e)).collect::<Result<Vec<_>>>()?;
            d.proj3.insert((key, p.k), LatticeHom::new(&src, &dst, images)?);
        }
        for s in &self.s {
            d.s.insert((s.i, s.j), piece(s.i)?.parse_element(&s.element)?);
        }
        Ok(d)
    }
}
