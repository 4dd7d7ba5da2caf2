use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{from_cayley_named, FiniteGroup, GroupError, GroupFactory, Result};

/// On-disk Cayley table: `{ "name", "order", "identity", "table" }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyJson {
    pub name: String,
    pub order: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

impl CayleyJson {
    pub fn from_group(g: &FiniteGroup) -> Self {
        CayleyJson {
            name: g.name().to_string(),
            order: g.order(),
            identity: g.identity(),
            table: g.table_rows(),
        }
    }

    pub fn into_group(self, factory: &GroupFactory) -> Result<FiniteGroup> {
        if self.order != self.table.len() {
            return Err(GroupError::OrderMismatch {
                declared: self.order,
                actual: self.table.len(),
            });
        }
        from_cayley_named(&self.name, &self.table, self.identity, None, factory)
    }
}

impl FiniteGroup {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CayleyJson::from_group(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str, factory: &GroupFactory) -> Result<FiniteGroup> {
        let doc: CayleyJson = serde_json::from_str(text)?;
        doc.into_group(factory)
    }

    pub fn load(path: &Path, factory: &GroupFactory) -> Result<FiniteGroup> {
        let text = std::fs::read_to_string(path)?;
        FiniteGroup::from_json(&text, factory)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{dicyclic, GroupFactory};
    use super::*;

    #[test]
    fn json_round_trip_preserves_table() {
        let q = dicyclic(2).unwrap();
        let text = q.to_json();
        assert!(text.starts_with("{\"name\":\"Dic2\",\"order\":8,\"identity\":0,\"table\":[["));
        let back = FiniteGroup::from_json(&text, &GroupFactory::default()).unwrap();
        assert_eq!(back, q);
        assert_eq!(back.name(), "Dic2");
    }

    #[test]
    fn order_mismatch_is_reported() {
        let text = r#"{"name":"bad","order":3,"identity":0,"table":[[0,1],[1,0]]}"#;
        let err = FiniteGroup::from_json(text, &GroupFactory::default()).unwrap_err();
        assert!(matches!(err, GroupError::OrderMismatch { declared: 3, actual: 2 }));
    }

    #[test]
    fn axiom_errors_surface_through_json() {
        let text = r#"{"name":"bad","order":2,"identity":0,"table":[[0,1],[1,1]]}"#;
        let err = FiniteGroup::from_json(text, &GroupFactory::default()).unwrap_err();
        assert!(matches!(err, GroupError::NoInverse(1)));
    }
}
