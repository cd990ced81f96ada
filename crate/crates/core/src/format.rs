//! JSON literals for every value type. Object keys come out sorted and
//! element lists in lexicographic order, so equal values serialize to
//! identical bytes.

use serde_json::{json, Map, Value};

use crate::branch_ring::{CurveAlgebra, DEFAULT_TRUNCATION};
use crate::char_vectors::CharacterVectorSet;
use crate::error::{Error, Result};
use crate::good_semigroup::GoodSemigroup;
use crate::mult_tree::{MultiplicityTree, TreeNode};
use crate::numerical::{CharacterSet1D, MultiplicitySequence, NumericalSemigroup};

pub trait Json: Sized {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;

    fn parse_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column().saturating_sub(1),
            message: e.to_string(),
        })?;
        Self::from_json(&value)
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(format!("{what} must be a JSON object")))
}

fn field<'a>(o: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

fn nat(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| bad(format!("{what} must be a natural number")))
}

fn nat_list(v: &Value, what: &str) -> Result<Vec<u64>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} must be an array")))?
        .iter()
        .map(|x| nat(x, what))
        .collect()
}

fn vector_list(v: &Value, what: &str) -> Result<Vec<Vec<u64>>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} must be an array of vectors")))?
        .iter()
        .map(|x| nat_list(x, what))
        .collect()
}

fn dimension(o: &Map<String, Value>) -> Result<usize> {
    let d = nat(field(o, "d")?, "d")? as usize;
    if d == 0 {
        return Err(bad("d must be at least 1"));
    }
    Ok(d)
}

impl Json for NumericalSemigroup {
    fn to_json(&self) -> Value {
        json!({"conductor": self.conductor(), "small_elements": self.small_elements()})
    }

    /// Accepts `{"generators":[…]}` (additively generated) or
    /// `{"conductor":c,"small_elements":[…]}`.
    fn from_json(value: &Value) -> Result<Self> {
        let o = object(value, "a semigroup literal")?;
        if let Some(g) = o.get("generators") {
            return NumericalSemigroup::generated_by(&nat_list(g, "generators")?);
        }
        let c = nat(field(o, "conductor")?, "conductor")?;
        let small = nat_list(field(o, "small_elements")?, "small_elements")?;
        NumericalSemigroup::from_small_elements(c, &small)
    }
}

impl Json for MultiplicitySequence {
    fn to_json(&self) -> Value {
        json!({"prefix": self.prefix()})
    }

    fn from_json(value: &Value) -> Result<Self> {
        let o = object(value, "a sequence literal")?;
        let prefix = nat_list(field(o, "prefix")?, "prefix")?;
        let entries = prefix
            .into_iter()
            .map(|e| u32::try_from(e).map_err(|_| bad("sequence entry too large")))
            .collect::<Result<Vec<_>>>()?;
        MultiplicitySequence::new(entries)
    }
}

impl Json for CharacterSet1D {
    fn to_json(&self) -> Value {
        json!({"characters": self.characters()})
    }

    fn from_json(value: &Value) -> Result<Self> {
        let o = object(value, "a character literal")?;
        let chars = nat_list(field(o, "characters")?, "characters")?;
        crate::numerical::arf_closure(&chars)?.arf_characters()
    }
}

impl Json for GoodSemigroup {
    fn to_json(&self) -> Value {
        json!({"d": self.d(), "conductor": self.corner(), "small_elements": self.small_elements()})
    }

    fn from_json(value: &Value) -> Result<Self> {
        let o = object(value, "a good semigroup literal")?;
        let d = dimension(o)?;
        let c = nat_list(field(o, "conductor")?, "conductor")?;
        let small = vector_list(field(o, "small_elements")?, "small_elements")?;
        GoodSemigroup::from_literal(d, &c, &small)
    }
}

impl Json for MultiplicityTree {
    fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes()
            .iter()
            .map(|n| json!({"level": n.level, "vector": n.vector, "parent": n.parent}))
            .collect();
        json!({"d": self.d(), "stable_level": self.stable_level(), "nodes": nodes})
    }

    fn from_json(value: &Value) -> Result<Self> {
        let o = object(value, "a tree literal")?;
        let d = dimension(o)?;
        let stable = nat(field(o, "stable_level")?, "stable_level")? as usize;
        let nodes = field(o, "nodes")?
            .as_array()
            .ok_or_else(|| bad("nodes must be an array"))?
            .iter()
            .map(|n| {
                let n = object(n, "a node")?;
                let parent = match field(n, "parent")? {
                    Value::Null => None,
                    p => Some(nat(p, "parent")? as usize),
                };
                Ok(TreeNode {
                    level: nat(field(n, "level")?, "level")? as usize,
                    vector: nat_list(field(n, "vector")?, "vector")?,
                    parent,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MultiplicityTree::from_nodes(d, stable, &nodes)
    }
}

impl Json for CharacterVectorSet {
    fn to_json(&self) -> Value {
        let v: Vec<&Vec<u64>> = self.vectors().collect();
        json!({"d": self.d(), "vectors": v})
    }

    fn from_json(value: &Value) -> Result<Self> {
        let o = object(value, "a character-vector literal")?;
        let d = dimension(o)?;
        CharacterVectorSet::new(d, vector_list(field(o, "vectors")?, "vectors")?)
    }
}

/// Curve literal as read from input, before series parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub variables: Vec<String>,
    pub truncation: usize,
    pub generators: Vec<Vec<String>>,
}

impl CurveSpec {
    pub fn from_json(value: &Value) -> Result<Self> {
        let o = object(value, "a curve literal")?;
        let variables: Vec<String> = field(o, "variables")?
            .as_array()
            .ok_or_else(|| bad("variables must be an array of names"))?
            .iter()
            .map(|v| v.as_str().map(str::to_string).ok_or_else(|| bad("variable names must be strings")))
            .collect::<Result<_>>()?;
        if variables.is_empty() {
            return Err(bad("a curve needs at least one variable"));
        }
        if let Some(d) = o.get("d") {
            let d = nat(d, "d")? as usize;
            if d != variables.len() {
                return Err(bad(format!("d = {d} but {} variables are listed", variables.len())));
            }
        }
        let truncation = match o.get("truncation") {
            Some(t) => nat(t, "truncation")? as usize,
            None => DEFAULT_TRUNCATION,
        };
        let generators = field(o, "generators")?
            .as_array()
            .ok_or_else(|| bad("generators must be an array"))?
            .iter()
            .map(|g| {
                g.as_array()
                    .ok_or_else(|| bad("each generator must be an array of series strings"))?
                    .iter()
                    .map(|s| s.as_str().map(str::to_string).ok_or_else(|| bad("series must be strings")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(CurveSpec { variables, truncation, generators })
    }

    pub fn build(&self) -> Result<CurveAlgebra> {
        self.build_with_truncation(self.truncation)
    }

    pub fn build_with_truncation(&self, truncation: usize) -> Result<CurveAlgebra> {
        CurveAlgebra::parse(&self.variables, truncation, &self.generators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn good_semigroup_literal_is_bit_exact() {
        let text = r#"{"d":2,"conductor":[8,4],"small_elements":[[0,0],[4,2],[6,4],[8,4]]}"#;
        let s = GoodSemigroup::parse_json(text).unwrap();
        assert_eq!(serde_json::to_string(&s.to_json()).unwrap(), r#"{"conductor":[8,4],"d":2,"small_elements":[[0,0],[4,2],[6,4],[8,4]]}"#);
    }

    #[test]
    fn numerical_literals() {
        let s = NumericalSemigroup::parse_json(r#"{"conductor":14,"small_elements":[0,4,6,8,10,12,13]}"#).unwrap();
        assert_eq!(s.conductor(), 12);
        let g = NumericalSemigroup::parse_json(r#"{"generators":[4,6,13]}"#).unwrap();
        assert_eq!(g.conductor(), 16);
        assert_eq!(
            serde_json::to_string(&NumericalSemigroup::naturals().to_json()).unwrap(),
            r#"{"conductor":0,"small_elements":[]}"#
        );
        let seq = MultiplicitySequence::parse_json(r#"{"prefix":[6,3,3,3]}"#).unwrap();
        assert_eq!(seq.prefix(), &[6, 3, 3, 3]);
        assert!(NumericalSemigroup::parse_json("{").unwrap_err().is_parse());
    }

    #[test]
    fn tree_round_trip() {
        let t = MultiplicityTree::new(
            vec![MultiplicitySequence::new(vec![4, 2, 2]).unwrap(), MultiplicitySequence::new(vec![2, 2]).unwrap()],
            vec![1],
        )
        .unwrap();
        let text = serde_json::to_string(&t.to_json()).unwrap();
        assert!(text.starts_with(r#"{"d":2,"nodes":[{"level":0,"parent":null,"vector":[4,2]}"#));
        assert_eq!(MultiplicityTree::parse_json(&text).unwrap(), t);
        // an explicit stable level above the minimum is accepted
        let padded = r#"{"d":1,"stable_level":3,"nodes":[{"level":0,"vector":[2],"parent":null},{"level":1,"vector":[1],"parent":0},{"level":2,"vector":[1],"parent":1}]}"#;
        assert_eq!(MultiplicityTree::parse_json(padded).unwrap().branches()[0].prefix(), &[2]);
    }

    #[test]
    fn curve_literal() {
        let v: Value = serde_json::from_str(
            r#"{"d":2,"variables":["t","u"],"truncation":64,"generators":[["t^4","u^2"],["t^6+t^7","u^5"]]}"#,
        )
        .unwrap();
        let c = CurveSpec::from_json(&v).unwrap().build().unwrap();
        assert_eq!(c.generators().len(), 2);
        let v: Value = serde_json::from_str(r#"{"variables":["t"],"generators":[["t^4 + s"]]}"#).unwrap();
        assert!(CurveSpec::from_json(&v).unwrap().build().unwrap_err().is_parse());
    }
}
