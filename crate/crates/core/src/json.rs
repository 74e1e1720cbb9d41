//! JSON form of the syntax trees.
//!
//! Connectives are `{"op": NAME, "args": [...]}`, leaves are
//! `{"op": "atom", "name": ...}` or `{"op": KEYWORD}`, and modalities carry
//! `"regex"` and `"arg"` instead of `"args"`. Keys are written in exactly
//! that order.

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::ast::{
    Formula, LdlfFormula, LtlfFormula, PldlfFormula, PltlfFormula, Prop, Regex, View,
};

/// Serialization adapter for any formula family.
pub struct Json<'a, F>(pub &'a F);

impl<F: Formula> Serialize for Json<'_, F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.view() {
            View::Atom(atom) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("op", "atom")?;
                map.serialize_entry("name", &atom.name)?;
                map.end()
            }
            View::Constant(c) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("op", c.keyword())?;
                map.end()
            }
            View::Prefix(op, arg) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("op", op.json_name())?;
                map.serialize_entry("args", &[Json(arg)])?;
                map.end()
            }
            View::Infix(op, lhs, rhs) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("op", op.json_name())?;
                map.serialize_entry("args", &[Json(lhs), Json(rhs)])?;
                map.end()
            }
            View::Modality(op, regex, arg) => {
                let mut map = serializer.serialize_map(Some(3))?;
                map.serialize_entry("op", op.json_name())?;
                map.serialize_entry("regex", regex)?;
                map.serialize_entry("arg", &Json(arg))?;
                map.end()
            }
        }
    }
}

impl<F: Formula> Serialize for Regex<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        match self {
            Regex::Prop(p) => {
                map.serialize_entry("op", "prop")?;
                map.serialize_entry("args", &[Json(p)])?;
            }
            Regex::Test(f) => {
                map.serialize_entry("op", "test")?;
                map.serialize_entry("args", &[Json(f.as_ref())])?;
            }
            Regex::Concat(l, r) => {
                map.serialize_entry("op", "concat")?;
                map.serialize_entry("args", &[l, r])?;
            }
            Regex::Union(l, r) => {
                map.serialize_entry("op", "union")?;
                map.serialize_entry("args", &[l, r])?;
            }
            Regex::Star(r) => {
                map.serialize_entry("op", "star")?;
                map.serialize_entry("args", &[r])?;
            }
        }
        map.end()
    }
}

macro_rules! serialize_via_json {
    ($($ty:ty),*) => {$(
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                Json(self).serialize(serializer)
            }
        }
    )*};
}

serialize_via_json!(Prop, LtlfFormula, PltlfFormula, LdlfFormula, PldlfFormula);

/// Compact JSON text of `f`, without a trailing line feed.
pub fn to_json<F: Formula>(f: &F) -> String {
    serde_json::to_string(&Json(f)).expect("formula trees always serialize")
}
