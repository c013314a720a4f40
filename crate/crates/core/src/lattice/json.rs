use super::{Lattice, MeetTerm, Relation};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// On-disk presentation: `{"generators": [...], "relations": [{"meet": [[...]], "join": [...]}]}`.
///
/// Each entry of `meet` is one conjunct written as a list of labels met
/// together; all entries are met. An empty `meet` is 1 and an empty `join` is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relations: Vec<RelationDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    #[serde(default)]
    pub meet: Vec<Vec<String>>,
    #[serde(default)]
    pub join: Vec<String>,
}

impl PresentationDoc {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_lattice(&self) -> Result<Lattice> {
        let idx = |l: &String| self.generators.iter().position(|g| g == l).ok_or_else(|| Error::UnknownSymbol(l.clone()));
        let mut rels = Vec::with_capacity(self.relations.len());
        for r in &self.relations {
            let lhs = r
                .meet
                .iter()
                .map(|conj| conj.iter().map(idx).collect::<Result<Vec<_>>>().map(MeetTerm::from_gens))
                .collect::<Result<Vec<_>>>()?;
            let rhs = r.join.iter().map(idx).collect::<Result<Vec<_>>>()?;
            rels.push(Relation { lhs, rhs });
        }
        Lattice::present(self.generators.clone(), rels)
    }

    /// Full presentation of `t`, including relations excluding non-models.
    pub fn from_lattice(t: &Lattice) -> Self {
        let p = t.presentation();
        let labels = t.labels();
        PresentationDoc {
            generators: labels.to_vec(),
            relations: p
                .relations
                .iter()
                .map(|r| RelationDoc {
                    meet: r.lhs.iter().map(|m| m.gens().map(|g| labels[g].clone()).collect()).collect(),
                    join: r.rhs.iter().map(|&g| labels[g].clone()).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl Lattice {
    pub fn from_json(s: &str) -> Result<Lattice> {
        PresentationDoc::parse(s)?.to_lattice()
    }

    pub fn from_file(path: &std::path::Path) -> Result<Lattice> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        PresentationDoc::from_lattice(self).to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Element;

    #[test]
    fn documented_example() {
        let s = r#"{"generators": ["x","y"], "relations": [{"meet": [["x","y"]], "join": []}]}"#;
        let t = Lattice::from_json(s).unwrap();
        let (x, y) = (t.gen("x").unwrap(), t.gen("y").unwrap());
        assert!(t.leq(&x.meet(&y), &Element::bottom()).unwrap());
        assert!(!t.leq(&x, &Element::bottom()).unwrap());
    }

    #[test]
    fn empty_sides_are_constants() {
        let one_le_x = r#"{"generators":["x"],"relations":[{"meet":[],"join":["x"]}]}"#;
        let t = Lattice::from_json(one_le_x).unwrap();
        assert!(t.equal(&t.gen("x").unwrap(), &Element::top()).unwrap());
        let one_le_zero = r#"{"generators":[],"relations":[{"meet":[],"join":[]}]}"#;
        assert!(Lattice::from_json(one_le_zero).unwrap().is_trivial());
    }

    #[test]
    fn exact_serialization() {
        let s = r#"{"generators":["x","y"],"relations":[{"meet":[["x","y"]],"join":[]}]}"#;
        assert_eq!(Lattice::from_json(s).unwrap().to_json(), s);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Lattice::from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(Lattice::from_json(r#"{"generators":["x"],"relations":[{"meet":[["q"]],"join":[]}]}"#), Err(Error::UnknownSymbol(_))));
        assert!(matches!(Lattice::from_json(r#"{"generators":["x","x"]}"#), Err(Error::DuplicateLabel(_))));
    }
}
