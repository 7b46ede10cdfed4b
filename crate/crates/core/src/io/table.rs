//! CSV information tables.
//!
//! The first header cell must be `id`; the remaining headers name attributes.
//! Every attribute starts as a condition attribute; one may be promoted to the
//! decision attribute afterwards.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::rough::{Attribute, AttributeKind, InformationSystem};

pub fn read_table<R: Read>(reader: R) -> Result<InformationSystem> {
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    let mut cells = headers.iter();
    match cells.next() {
        Some("id") => {}
        other => {
            return Err(Error::Parse {
                line: 1,
                message: format!("first header must be `id`, found `{}`", other.unwrap_or("")),
            })
        }
    }
    let attributes: Vec<Attribute> = cells
        .map(|name| Attribute {
            name: name.to_string(),
            kind: AttributeKind::Condition,
        })
        .collect();

    let mut objects = Vec::new();
    let mut rows = Vec::new();
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != headers.len() {
            return Err(Error::Parse {
                line,
                message: format!("expected {} fields, found {}", headers.len(), record.len()),
            });
        }
        let id = &record[0];
        if id.is_empty() {
            return Err(Error::Parse {
                line,
                message: "empty object id".into(),
            });
        }
        objects.push(id.to_string());
        rows.push(record.iter().skip(1).map(str::to_string).collect());
    }
    if objects.is_empty() {
        return Err(Error::Format("table has a header but no rows".into()));
    }
    InformationSystem::new(objects, attributes, rows)
}

pub fn load_table(path: impl AsRef<Path>) -> Result<InformationSystem> {
    read_table(File::open(path.as_ref()).map_err(Error::file(path))?)
}

/// How the target set of objects is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetSelector {
    Ids(Vec<String>),
    /// Objects whose `attribute` equals `value`.
    AttributeValue {
        attribute: String,
        value: String,
    },
}

impl TargetSelector {
    /// Parses `Attr=Value`.
    pub fn attribute_value(spec: &str) -> Result<Self> {
        let (attribute, value) = spec
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("expected ATTRIBUTE=VALUE, got `{spec}`")))?;
        Ok(TargetSelector::AttributeValue {
            attribute: attribute.trim().to_string(),
            value: value.trim().to_string(),
        })
    }

    /// Parses a comma-separated id list; an empty string is the empty set.
    pub fn ids(list: &str) -> Self {
        TargetSelector::Ids(
            list.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect(),
        )
    }

    /// The selected objects, in universe order.
    pub fn resolve(&self, system: &InformationSystem) -> Result<Vec<String>> {
        match self {
            TargetSelector::Ids(ids) => {
                let mut positions = ids
                    .iter()
                    .map(|id| system.object_position(id))
                    .collect::<Result<Vec<_>>>()?;
                positions.sort_unstable();
                positions.dedup();
                Ok(positions.into_iter().map(|p| system.objects()[p].clone()).collect())
            }
            TargetSelector::AttributeValue { attribute, value } => system.objects_where(attribute, value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE: &str = "id,Age,Hypertension,Complication,Delivery
1,20.....29,No,None,Fullterm
2,20.....29,Yes,Obesity,Preterm
3,20.....29,Yes,None,Preterm
4,20.....29,No,None,Fullterm
5,30.....39,Yes,None,Fullterm
6,30.....39,Yes,Alcoholic,Preterm
7,40.....50,No,None,Fullterm
";

    #[test]
    fn reads_patient_table() {
        let mut sys = read_table(TABLE.as_bytes()).unwrap();
        assert_eq!(sys.objects().len(), 7);
        assert_eq!(sys.attributes().len(), 4);
        sys.set_decision("Delivery").unwrap();
        assert_eq!(sys.decision_attribute(), Some("Delivery"));
        assert_eq!(sys.condition_attributes().count(), 3);
        assert_eq!(sys.value("6", "Complication").unwrap(), "Alcoholic");
    }

    #[test]
    fn targets() {
        let sys = read_table(TABLE.as_bytes()).unwrap();
        let by_ids = TargetSelector::ids("7, 1,4,5").resolve(&sys).unwrap();
        assert_eq!(by_ids, ["1", "4", "5", "7"]);
        let by_value = TargetSelector::attribute_value("Delivery=Fullterm")
            .unwrap()
            .resolve(&sys)
            .unwrap();
        assert_eq!(by_value, by_ids);
        assert!(TargetSelector::ids("1,9").resolve(&sys).is_err());
        assert!(TargetSelector::attribute_value("Delivery").is_err());
        assert!(TargetSelector::ids("").resolve(&sys).unwrap().is_empty());
    }

    #[test]
    fn wrong_arity_reports_line() {
        let bad = "id,a,b\n1,x,y\n2,x\n";
        match read_table(bad.as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_body_and_bad_header() {
        assert!(read_table("id,a,b\n".as_bytes()).is_err());
        assert!(read_table("".as_bytes()).is_err());
        assert!(matches!(
            read_table("name,a\n1,x\n".as_bytes()),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
