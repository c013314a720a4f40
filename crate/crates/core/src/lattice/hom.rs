use super::{Element, Lattice};
use crate::error::{Error, Result};

/// A lattice map fixed by the images of the source generators.
#[derive(Clone, Debug)]
pub struct LatticeHom {
    source: Lattice,
    target: Lattice,
    images: Vec<Element>,
}

impl LatticeHom {
    /// Checks that the substitution respects the source relations: every
    /// model of the target must pull back to a model of the source.
    pub fn new(source: &Lattice, target: &Lattice, images: Vec<Element>) -> Result<Self> {
        if images.len() != source.num_generators() {
            return Err(Error::Invalid(format!("{} images for {} generators", images.len(), source.num_generators())));
        }
        for e in &images {
            target.check(e)?;
        }
        for &w in target.models() {
            let v = images.iter().enumerate().filter(|(_, e)| e.eval(w)).fold(0u64, |m, (g, _)| m | 1 << g);
            if source.models().binary_search(&v).is_err() {
                return Err(Error::Invalid("generator images violate a source relation".into()));
            }
        }
        Ok(LatticeHom { source: source.clone(), target: target.clone(), images })
    }

    /// The map sending each generator to the generator at the same index
    /// (quotient maps between lattices sharing generators).
    pub fn on_generators(source: &Lattice, target: &Lattice) -> Result<Self> {
        if source.num_generators() != target.num_generators() {
            return Err(Error::Invalid("generator counts differ".into()));
        }
        Self::new(source, target, target.generators())
    }

    pub fn source(&self) -> &Lattice {
        &self.source
    }

    pub fn target(&self) -> &Lattice {
        &self.target
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn apply(&self, a: &Element) -> Element {
        a.terms().iter().fold(Element::bottom(), |acc, t| {
            let m = t.gens().fold(Element::top(), |m, g| m.meet(&self.images[g]));
            acc.join(&m)
        })
    }

    pub fn compose(&self, next: &LatticeHom) -> Result<LatticeHom> {
        let images = self.images.iter().map(|e| next.apply(e)).collect();
        LatticeHom::new(&self.source, &next.target, images)
    }

    /// Image id in the target table of each source id.
    pub fn id_map(&self) -> Result<Vec<usize>> {
        let ts = self.source.enumerate_elements()?;
        let tt = self.target.enumerate_elements()?;
        ts.elements().iter().map(|e| tt.id_of(&self.target, &self.apply(e))).collect()
    }

    pub fn is_surjective(&self) -> Result<bool> {
        let tt = self.target.enumerate_elements()?;
        let mut hit = vec![false; tt.len()];
        for i in self.id_map()? {
            hit[i] = true;
        }
        Ok(hit.into_iter().all(|h| h))
    }
}
