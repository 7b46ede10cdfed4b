//! Indiscernibility partitions, rough membership and Pawlak approximations.
//!
//! Objects are identified by string ids. The universe order is the order in
//! which objects were supplied (the row order of an ingested table); every set
//! returned here is listed in that order.

use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact membership degree in `[0, 1]`.
pub type Membership = Ratio<u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttributeKind {
    Condition,
    Decision,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attribute {
    pub name: String,
    pub kind: AttributeKind,
}

/// A table of objects described by categorical attributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationSystem {
    objects: Vec<String>,
    attributes: Vec<Attribute>,
    // row-major, objects.len() x attributes.len()
    values: Vec<Vec<String>>,
    object_index: HashMap<String, usize>,
}

impl InformationSystem {
    /// Builds a system from rows of values, one row per object, in attribute
    /// order. Values are trimmed and compared as opaque strings.
    pub fn new(objects: Vec<String>, attributes: Vec<Attribute>, values: Vec<Vec<String>>) -> Result<Self> {
        if objects.is_empty() {
            return Err(Error::domain("information system has no objects"));
        }
        if values.len() != objects.len() {
            return Err(Error::Format(format!(
                "{} objects but {} value rows",
                objects.len(),
                values.len()
            )));
        }
        let mut object_index = HashMap::with_capacity(objects.len());
        for (i, id) in objects.iter().enumerate() {
            if object_index.insert(id.clone(), i).is_some() {
                return Err(Error::domain(format!("duplicate object id `{id}`")));
            }
        }
        let mut seen = BTreeSet::new();
        for attr in &attributes {
            if !seen.insert(attr.name.as_str()) {
                return Err(Error::Config(format!("duplicate attribute `{}`", attr.name)));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != attributes.len() {
                    return Err(Error::Format(format!(
                        "object `{}` has {} values, expected {}",
                        objects[i],
                        row.len(),
                        attributes.len()
                    )));
                }
                Ok(row.into_iter().map(|v| v.trim().to_string()).collect())
            })
            .collect::<Result<Vec<Vec<String>>>>()?;
        Ok(Self {
            objects,
            attributes,
            values,
            object_index,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[Attribute] {
        &self.attributes
    }

    pub fn condition_attributes(&self) -> impl Iterator<Item = &str> {
        self.attributes
            .iter()
            .filter(|a| a.kind == AttributeKind::Condition)
            .map(|a| a.name.as_str())
    }

    pub fn decision_attribute(&self) -> Option<&str> {
        self.attributes
            .iter()
            .find(|a| a.kind == AttributeKind::Decision)
            .map(|a| a.name.as_str())
    }

    /// Marks `name` as the decision attribute; any previous decision
    /// attribute becomes a condition attribute.
    pub fn set_decision(&mut self, name: &str) -> Result<()> {
        let pos = self.attribute_position(name)?;
        for (i, attr) in self.attributes.iter_mut().enumerate() {
            attr.kind = if i == pos {
                AttributeKind::Decision
            } else {
                AttributeKind::Condition
            };
        }
        Ok(())
    }

    fn attribute_position(&self, name: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::Config(format!("unknown attribute `{name}`")))
    }

    pub fn value(&self, object: &str, attribute: &str) -> Result<&str> {
        let row = self.object_position(object)?;
        let col = self.attribute_position(attribute)?;
        Ok(&self.values[row][col])
    }

    pub fn object_position(&self, object: &str) -> Result<usize> {
        self.object_index
            .get(object)
            .copied()
            .ok_or_else(|| Error::domain(format!("object `{object}` is not in the universe")))
    }

    /// Objects whose value for `attribute` equals `value` (after trimming).
    pub fn objects_where(&self, attribute: &str, value: &str) -> Result<Vec<String>> {
        let col = self.attribute_position(attribute)?;
        let value = value.trim();
        Ok(self
            .objects
            .iter()
            .zip(&self.values)
            .filter(|(_, row)| row[col] == value)
            .map(|(id, _)| id.clone())
            .collect())
    }

    /// Groups objects that agree on every attribute in `attrs`.
    pub fn partition_by<S: AsRef<str>>(&self, attrs: &[S]) -> Result<Partition> {
        if attrs.is_empty() {
            return Err(Error::Config("attribute set must not be empty".into()));
        }
        let cols = attrs
            .iter()
            .map(|a| self.attribute_position(a.as_ref()))
            .collect::<Result<Vec<_>>>()?;

        let mut key_to_block: HashMap<Vec<&str>, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index = Vec::with_capacity(self.objects.len());
        // Rows are visited in universe order, so blocks come out ordered by
        // their first member.
        for row in &self.values {
            let key: Vec<&str> = cols.iter().map(|&c| row[c].as_str()).collect();
            let next = blocks.len();
            let block = *key_to_block.entry(key).or_insert(next);
            if block == next {
                blocks.push(Vec::new());
            }
            blocks[block].push(index.len());
            index.push(block);
        }
        Ok(Partition {
            universe: self.objects.clone(),
            object_index: self.object_index.clone(),
            blocks,
            index,
        })
    }

    /// Partition on all condition attributes.
    pub fn indiscernibility(&self) -> Result<Partition> {
        let attrs: Vec<&str> = self.condition_attributes().collect();
        self.partition_by(&attrs)
    }
}

/// Equivalence classes of the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    universe: Vec<String>,
    object_index: HashMap<String, usize>,
    blocks: Vec<Vec<usize>>,
    index: Vec<usize>,
}

impl Partition {
    /// Builds a partition directly from blocks of ids. Blocks must be
    /// disjoint, non-empty, and cover `universe`.
    pub fn from_blocks<S: AsRef<str>>(universe: &[S], blocks: &[Vec<S>]) -> Result<Self> {
        let universe: Vec<String> = universe.iter().map(|s| s.as_ref().to_string()).collect();
        let mut object_index = HashMap::new();
        for (i, id) in universe.iter().enumerate() {
            if object_index.insert(id.clone(), i).is_some() {
                return Err(Error::domain(format!("duplicate object id `{id}`")));
            }
        }
        let mut index = vec![usize::MAX; universe.len()];
        let mut out: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::domain("partition block is empty"));
            }
            let mut members = Vec::with_capacity(block.len());
            for id in block {
                let pos = *object_index
                    .get(id.as_ref())
                    .ok_or_else(|| Error::domain(format!("object `{}` is not in the universe", id.as_ref())))?;
                if index[pos] != usize::MAX {
                    return Err(Error::domain(format!("object `{}` appears in two blocks", id.as_ref())));
                }
                index[pos] = usize::MAX - 1;
                members.push(pos);
            }
            members.sort_unstable();
            out.push(members);
        }
        if let Some(pos) = index.iter().position(|&b| b == usize::MAX) {
            return Err(Error::domain(format!("object `{}` is in no block", universe[pos])));
        }
        out.sort_by_key(|b| b[0]);
        for (b, members) in out.iter().enumerate() {
            for &m in members {
                index[m] = b;
            }
        }
        Ok(Self {
            universe,
            object_index,
            blocks: out,
            index,
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks as id lists, each in universe order, ordered by first member.
    pub fn blocks(&self) -> Vec<Vec<&str>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&i| self.universe[i].as_str()).collect())
            .collect()
    }

    /// Index of the block containing `object`.
    pub fn block_of(&self, object: &str) -> Result<usize> {
        Ok(self.index[self.position(object)?])
    }

    /// The equivalence class of `object`.
    pub fn class_of(&self, object: &str) -> Result<Vec<&str>> {
        let b = self.block_of(object)?;
        Ok(self.blocks[b].iter().map(|&i| self.universe[i].as_str()).collect())
    }

    fn position(&self, object: &str) -> Result<usize> {
        self.object_index
            .get(object)
            .copied()
            .ok_or_else(|| Error::domain(format!("object `{object}` is not in the universe")))
    }

    fn resolve<S: AsRef<str>>(&self, target: &[S]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.universe.len()];
        for id in target {
            mask[self.position(id.as_ref())?] = true;
        }
        Ok(mask)
    }

    fn block_membership(&self, block: usize, mask: &[bool]) -> Membership {
        let members = &self.blocks[block];
        let inside = members.iter().filter(|&&i| mask[i]).count();
        Ratio::new(inside as u64, members.len() as u64)
    }

    /// `|[object] ∩ target| / |[object]|`.
    pub fn rough_membership<S: AsRef<str>>(&self, target: &[S], object: &str) -> Result<Membership> {
        let mask = self.resolve(target)?;
        let block = self.block_of(object)?;
        Ok(self.block_membership(block, &mask))
    }

    /// Membership of every object, in universe order.
    pub fn memberships<S: AsRef<str>>(&self, target: &[S]) -> Result<MembershipAssignment> {
        let mask = self.resolve(target)?;
        let per_block: Vec<Membership> = (0..self.blocks.len())
            .map(|b| self.block_membership(b, &mask))
            .collect();
        Ok(MembershipAssignment {
            objects: self.universe.clone(),
            values: self.index.iter().map(|&b| per_block[b]).collect(),
            target: self
                .universe
                .iter()
                .zip(&mask)
                .filter(|(_, &m)| m)
                .map(|(id, _)| id.clone())
                .collect(),
        })
    }

    /// Objects whose class lies entirely inside `target`.
    pub fn lower_approximation<S: AsRef<str>>(&self, target: &[S]) -> Result<Vec<String>> {
        let m = self.memberships(target)?;
        Ok(m.select(|w| w == Ratio::from_integer(1)))
    }

    /// Objects whose class meets `target`.
    pub fn upper_approximation<S: AsRef<str>>(&self, target: &[S]) -> Result<Vec<String>> {
        let m = self.memberships(target)?;
        Ok(m.select(|w| w > Ratio::from_integer(0)))
    }
}

/// Membership value of every object of a universe for one target set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipAssignment {
    objects: Vec<String>,
    values: Vec<Membership>,
    target: Vec<String>,
}

impl MembershipAssignment {
    /// Assembles an assignment from explicit values, for callers that already
    /// hold membership degrees. Every value must lie in `[0, 1]`.
    pub fn from_values(pairs: Vec<(String, Membership)>, target: Vec<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (id, w) in &pairs {
            if !seen.insert(id.as_str()) {
                return Err(Error::domain(format!("duplicate object id `{id}`")));
            }
            if *w > Ratio::from_integer(1) {
                return Err(Error::domain(format!("membership of `{id}` exceeds 1: {w}")));
            }
        }
        for id in &target {
            if !seen.contains(id.as_str()) {
                return Err(Error::domain(format!("target object `{id}` is not in the universe")));
            }
        }
        let (objects, values) = pairs.into_iter().unzip();
        Ok(Self {
            objects,
            values,
            target,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn values(&self) -> &[Membership] {
        &self.values
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Membership)> {
        self.objects.iter().map(String::as_str).zip(self.values.iter().copied())
    }

    pub fn get(&self, object: &str) -> Option<Membership> {
        self.iter().find(|(id, _)| *id == object).map(|(_, w)| w)
    }

    fn select(&self, keep: impl Fn(Membership) -> bool) -> Vec<String> {
        self.iter()
            .filter(|(_, w)| keep(*w))
            .map(|(id, _)| id.to_string())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn patients() -> InformationSystem {
        let rows = [
            ("1", "20.....29", "No", "None", "Fullterm"),
            ("2", "20.....29", "Yes", "Obesity", "Preterm"),
            ("3", "20.....29", "Yes", "None", "Preterm"),
            ("4", "20.....29", "No", "None", "Fullterm"),
            ("5", "30.....39", "Yes", "None", "Fullterm"),
            ("6", "30.....39", "Yes", "Alcoholic", "Preterm"),
            ("7", "40.....50", "No", "None", "Fullterm"),
        ];
        let attr = |name: &str, kind| Attribute {
            name: name.into(),
            kind,
        };
        InformationSystem::new(
            rows.iter().map(|r| r.0.to_string()).collect(),
            vec![
                attr("Age", AttributeKind::Condition),
                attr("Hypertension", AttributeKind::Condition),
                attr("Complication", AttributeKind::Condition),
                attr("Delivery", AttributeKind::Decision),
            ],
            rows.iter()
                .map(|r| vec![r.1.into(), r.2.into(), r.3.into(), r.4.into()])
                .collect(),
        )
        .unwrap()
    }

    fn r(p: u64, q: u64) -> Membership {
        Ratio::new(p, q)
    }

    #[test]
    fn condition_partition_matches_worked_example() {
        let p = patients().indiscernibility().unwrap();
        assert_eq!(
            p.blocks(),
            vec![vec!["1", "4"], vec!["2"], vec!["3"], vec!["5"], vec!["6"], vec!["7"]]
        );
        assert_eq!(p.class_of("4").unwrap(), vec!["1", "4"]);
    }

    #[test]
    fn age_partition() {
        let p = patients().partition_by(&["Age"]).unwrap();
        assert_eq!(p.blocks(), vec![vec!["1", "2", "3", "4"], vec!["5", "6"], vec!["7"]]);
    }

    #[test]
    fn unknown_attribute_is_named() {
        let err = patients().partition_by(&["Age", "Weight"]).unwrap_err();
        assert!(matches!(err, Error::Config(ref m) if m.contains("Weight")), "{err}");
        assert!(patients().partition_by::<&str>(&[]).is_err());
    }

    #[test]
    fn distinct_rows_give_singletons() {
        let sys = InformationSystem::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![Attribute {
                name: "x".into(),
                kind: AttributeKind::Condition,
            }],
            vec![vec!["1".into()], vec!["2".into()], vec![" 3 ".into()]],
        )
        .unwrap();
        assert_eq!(sys.indiscernibility().unwrap().len(), 3);
        assert_eq!(sys.value("c", "x").unwrap(), "3");
    }

    #[test]
    fn membership_values() {
        let p = patients().indiscernibility().unwrap();
        let target = ["1", "4", "5", "7"];
        assert_eq!(p.rough_membership(&target, "1").unwrap(), r(1, 1));
        assert_eq!(p.rough_membership(&["1", "5"], "1").unwrap(), r(1, 2));
        let all: Vec<&str> = p.universe().iter().map(String::as_str).collect();
        for o in &all {
            assert_eq!(p.rough_membership(&all, o).unwrap(), r(1, 1));
        }
    }

    #[test]
    fn membership_errors() {
        let p = patients().indiscernibility().unwrap();
        assert!(matches!(p.rough_membership(&["1"], "9"), Err(Error::Domain(_))));
        assert!(matches!(p.rough_membership(&["1", "42"], "1"), Err(Error::Domain(_))));
    }

    #[test]
    fn approximations() {
        let p = patients().indiscernibility().unwrap();
        let t = ["1", "4", "5", "7"];
        assert_eq!(p.lower_approximation(&t).unwrap(), t);
        assert_eq!(p.upper_approximation(&t).unwrap(), t);
        assert_eq!(p.lower_approximation(&["1", "5"]).unwrap(), ["5"]);
        assert_eq!(p.upper_approximation(&["1", "5"]).unwrap(), ["1", "4", "5"]);
        assert!(p.lower_approximation::<&str>(&[]).unwrap().is_empty());
        let all: Vec<&str> = p.universe().iter().map(String::as_str).collect();
        assert_eq!(p.upper_approximation(&all).unwrap(), all);
    }

    #[test]
    fn objects_where_decision() {
        assert_eq!(
            patients().objects_where("Delivery", "Fullterm").unwrap(),
            ["1", "4", "5", "7"]
        );
    }

    #[test]
    fn from_blocks_validates() {
        let u = ["a", "b", "c"];
        let p = Partition::from_blocks(&u, &[vec!["c"], vec!["b", "a"]]).unwrap();
        assert_eq!(p.blocks(), vec![vec!["a", "b"], vec!["c"]]);
        assert!(Partition::from_blocks(&u, &[vec!["a"], vec!["b"]]).is_err());
        assert!(Partition::from_blocks(&u, &[vec!["a", "b"], vec!["b", "c"]]).is_err());
    }

    #[test]
    fn duplicate_objects_rejected() {
        let res = InformationSystem::new(vec!["a".into(), "a".into()], vec![], vec![vec![], vec![]]);
        assert!(res.is_err());
    }
}
