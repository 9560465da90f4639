//! JSON documents for racks, morphisms, squares, groups, congruences and
//! reports. Nested objects are repeated inline; equality of shared objects
//! is checked structurally when a square is assembled.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::classify::ClassificationReport;
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::rack::{Morphism, Rack};
use crate::square::ExtSquare;

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Document {
    Rack(RackDoc),
    Morphism(MorphismDoc),
    Square(SquareDoc),
    Group(GroupDoc),
    Congruence(CongruenceDoc),
    Report(ReportDoc),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RackDoc {
    pub size: usize,
    pub op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub dom: RackDoc,
    pub cod: RackDoc,
    pub map: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareDoc {
    #[serde(rename = "f_A")]
    pub f_a: MorphismDoc,
    #[serde(rename = "f_B")]
    pub f_b: MorphismDoc,
    pub alpha_top: MorphismDoc,
    pub alpha_bot: MorphismDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub size: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CongruenceDoc {
    pub classes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub subject: String,
    pub flags: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Value>,
}

impl RackDoc {
    pub fn from_rack(a: &Rack) -> RackDoc {
        RackDoc {
            size: a.size(),
            op: a.table(),
            name: a.name().map(str::to_string),
            labels: a.labels().map(<[String]>::to_vec),
            source: None,
        }
    }

    pub fn to_rack(&self) -> Result<Rack> {
        if self.op.len() != self.size {
            return Err(Error::Shape(format!(
                "size is {} but op has {} rows",
                self.size,
                self.op.len()
            )));
        }
        let mut r = Rack::new(&self.op)?;
        if let Some(n) = &self.name {
            r = r.named(n.clone());
        }
        if let Some(l) = &self.labels {
            if l.len() != self.size {
                return Err(Error::Shape(format!(
                    "{} labels for {} elements",
                    l.len(),
                    self.size
                )));
            }
            r = r.with_labels(l.clone());
        }
        Ok(r)
    }
}

impl MorphismDoc {
    pub fn from_morphism(f: &Morphism) -> MorphismDoc {
        MorphismDoc {
            dom: RackDoc::from_rack(f.dom()),
            cod: RackDoc::from_rack(f.cod()),
            map: f.map().to_vec(),
            source: None,
        }
    }

    pub fn to_morphism(&self) -> Result<Morphism> {
        Morphism::new(self.dom.to_rack()?, self.cod.to_rack()?, self.map.clone())
    }
}

impl SquareDoc {
    pub fn from_square(sq: &ExtSquare) -> SquareDoc {
        SquareDoc {
            f_a: MorphismDoc::from_morphism(sq.f_a()),
            f_b: MorphismDoc::from_morphism(sq.f_b()),
            alpha_top: MorphismDoc::from_morphism(sq.alpha_top()),
            alpha_bot: MorphismDoc::from_morphism(sq.alpha_bot()),
            source: None,
        }
    }

    pub fn to_square(&self) -> Result<ExtSquare> {
        ExtSquare::new(
            self.f_a.to_morphism()?,
            self.f_b.to_morphism()?,
            self.alpha_top.to_morphism()?,
            self.alpha_bot.to_morphism()?,
        )
    }
}

impl GroupDoc {
    pub fn from_group(g: &FiniteGroup) -> GroupDoc {
        GroupDoc {
            size: g.size(),
            mul: g.table(),
            labels: g.labels().map(<[String]>::to_vec),
            source: None,
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        if self.mul.len() != self.size {
            return Err(Error::Shape(format!(
                "size is {} but mul has {} rows",
                self.size,
                self.mul.len()
            )));
        }
        let g = FiniteGroup::new(&self.mul)?;
        Ok(match &self.labels {
            Some(l) if l.len() == self.size => g.with_labels(l.clone()),
            Some(l) => {
                return Err(Error::Shape(format!(
                    "{} labels for {} elements",
                    l.len(),
                    self.size
                )))
            }
            None => g,
        })
    }
}

impl CongruenceDoc {
    pub fn from_congruence(c: &Congruence) -> CongruenceDoc {
        CongruenceDoc {
            classes: c.classes().to_vec(),
        }
    }
}

impl From<&ClassificationReport> for ReportDoc {
    fn from(r: &ClassificationReport) -> ReportDoc {
        ReportDoc {
            subject: r.subject.clone(),
            flags: r.flags.clone(),
            witnesses: r.witnesses.clone(),
        }
    }
}

impl Document {
    pub fn type_name(&self) -> &'static str {
        match self {
            Document::Rack(_) => "rack",
            Document::Morphism(_) => "morphism",
            Document::Square(_) => "square",
            Document::Group(_) => "group",
            Document::Congruence(_) => "congruence",
            Document::Report(_) => "report",
        }
    }

    /// Checks everything the schema cannot: axioms, homomorphism,
    /// commutation.
    pub fn validate(&self) -> Result<()> {
        match self {
            Document::Rack(d) => d.to_rack().map(drop),
            Document::Morphism(d) => d.to_morphism().map(drop),
            Document::Square(d) => d.to_square().map(drop),
            Document::Group(d) => d.to_group().map(drop),
            Document::Congruence(_) | Document::Report(_) => Ok(()),
        }
    }

    pub fn set_source(&mut self, s: impl Into<String>) {
        let s = Some(s.into());
        match self {
            Document::Rack(d) => d.source = s,
            Document::Morphism(d) => d.source = s,
            Document::Square(d) => d.source = s,
            Document::Group(d) => d.source = s,
            Document::Congruence(_) | Document::Report(_) => {}
        }
    }
}

/// Syntactic parse only; call [`Document::validate`] for the algebra.
pub fn parse(text: &str) -> serde_json::Result<Document> {
    serde_json::from_str(text)
}

/// One line of compact JSON with a trailing newline.
pub fn emit(doc: &Document) -> String {
    let mut s = serde_json::to_string(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Axiom;

    #[test]
    fn trivial_rack_file() {
        let d = parse(r#"{"type":"rack","size":2,"op":[[0,0],[1,1]]}"#).unwrap();
        let Document::Rack(r) = &d else { panic!() };
        assert_eq!(r.to_rack().unwrap(), Rack::trivial(2));
    }

    #[test]
    fn round_trip() {
        let d = Document::Rack(RackDoc::from_rack(&Rack::dihedral(3)));
        let text = emit(&d);
        assert_eq!(parse(&text).unwrap(), d);
        assert_eq!(emit(&parse(&text).unwrap()), text);
        let sq = crate::corpus::toy().square;
        let d = Document::Square(SquareDoc::from_square(&sq));
        let back = parse(&emit(&d)).unwrap();
        let Document::Square(s) = back else { panic!() };
        assert_eq!(s.to_square().unwrap(), sq);
    }

    #[test]
    fn validation_errors() {
        let d = parse(r#"{"type":"rack","size":2,"op":[[0,2],[1,1]]}"#).unwrap();
        assert!(matches!(d.validate(), Err(Error::Shape(_))));
        let d = parse(r#"{"type":"rack","size":3,"op":[[0,1,2],[1,2,0],[2,0,1]]}"#).unwrap();
        assert!(matches!(
            d.validate(),
            Err(Error::AxiomViolation {
                axiom: Axiom::R2,
                ..
            })
        ));
        assert!(parse(r#"{"type":"rack","size":2}"#).is_err());
        assert!(parse(r#"{"type":"banana"}"#).is_err());
    }
}
