//! JSON input in the forms accepted by the command line and the C ABI.
//!
//! A polygon is `{"vertices": [...]}` or any object with a `"polygon"` key
//! holding one (such as `gen` output). Translate sets accept
//! `{"lattice": ..., "offsets": [...]}`, a bare lattice `{"basis": [...]}`,
//! or any object with a `"lattice"` key.

use std::path::Path;

use serde_json::Value;

use crate::error::{Error, ParseError};
use crate::lattice::{Lattice, TranslateSet};
use crate::polygon::CSPolygon;

fn json_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(ParseError::Json(e.to_string()))
}

pub fn parse_value(text: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(json_err)
}

pub fn read_value(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_value(&text)
}

pub fn polygon_from_value(v: &Value) -> Result<CSPolygon, Error> {
    let inner = v.get("polygon").unwrap_or(v);
    serde_json::from_value(inner.clone()).map_err(json_err)
}

pub fn lattice_from_value(v: &Value) -> Result<Lattice, Error> {
    let inner = if v.get("basis").is_some() {
        v
    } else {
        v.get("lattice")
            .ok_or_else(|| json_err("expected a \"basis\" or \"lattice\" key"))?
    };
    serde_json::from_value(inner.clone()).map_err(json_err)
}

pub fn translates_from_value(v: &Value) -> Result<TranslateSet, Error> {
    if v.get("basis").is_some() {
        return Ok(TranslateSet::lattice(lattice_from_value(v)?));
    }
    serde_json::from_value(v.clone()).map_err(json_err)
}

pub fn read_polygon(path: &Path) -> Result<CSPolygon, Error> {
    polygon_from_value(&read_value(path)?)
}

pub fn read_lattice(path: &Path) -> Result<Lattice, Error> {
    lattice_from_value(&read_value(path)?)
}

pub fn read_translates(path: &Path) -> Result<TranslateSet, Error> {
    translates_from_value(&read_value(path)?)
}
