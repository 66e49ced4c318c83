//! Homomorphism selection: builtin assignments by name, or JSON files
//! describing custom ones.
//!
//! A file looks like
//!
//! ```json
//! {
//!   "name": "jones",
//!   "presentation": "b2",
//!   "writhe_module": true,
//!   "vars": ["q"],
//!   "images": { "a": "q", "a'": "q", "b": "q^-1", "b'": "q^-1", "A": "-q^-3" },
//!   "v_first": "1",
//!   "v_ratio": "-q^2 - q^-2"
//! }
//! ```
//!
//! Polynomials use the same syntax the tool prints.

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use skein4::ring::{Gen, Homomorphism, LaurentPoly};
use skein4::Presentation;

#[derive(Deserialize)]
struct HomFile {
    name: String,
    presentation: String,
    #[serde(default)]
    writhe_module: bool,
    vars: Vec<String>,
    images: BTreeMap<String, String>,
    v_first: String,
    v_ratio: String,
}

pub fn builtin(name: &str) -> Option<Homomorphism> {
    match name {
        "jones" => Some(Homomorphism::jones()),
        "q" => Some(Homomorphism::q_poly()),
        "dubrovnik" => Some(Homomorphism::dubrovnik()),
        _ => None,
    }
}

/// A builtin name, or a path to a JSON description.
pub fn load(name_or_path: &str) -> Result<Homomorphism> {
    if let Some(h) = builtin(name_or_path) {
        return Ok(h);
    }
    let text = std::fs::read_to_string(name_or_path)
        .with_context(|| format!("no builtin homomorphism or readable file '{name_or_path}'"))?;
    from_json(&text).with_context(|| format!("homomorphism file {name_or_path}"))
}

pub fn from_json(text: &str) -> Result<Homomorphism> {
    let file: HomFile = serde_json::from_str(text)?;
    let pres = match file.presentation.as_str() {
        "b1" => Presentation::B1,
        "b1a" => Presentation::B1A,
        "b2" => Presentation::B2,
        other => bail!("unknown presentation '{other}' (expected b1, b1a, or b2)"),
    };
    if file.vars.is_empty() || file.vars.len() > 2 {
        bail!("vars must list one or two variable names");
    }
    let vars: Vec<&str> = file.vars.iter().map(|v| v.as_str()).collect();
    let poly = |label: &str, text: &str| -> Result<LaurentPoly> {
        LaurentPoly::parse(&vars, text).map_err(|e| anyhow::anyhow!("{label}: {e}"))
    };

    let mut images = Vec::new();
    for (key, value) in &file.images {
        let gen = match key.as_str() {
            "e" => Gen::E,
            "e'" => Gen::Ep,
            "a" => Gen::Aa,
            "a'" => Gen::Ap,
            "b" => Gen::B,
            "b'" => Gen::Bp,
            "A" => Gen::BigA,
            other => bail!("unknown generator '{other}'"),
        };
        images.push((gen, poly(&format!("image of {key}"), value)?));
    }
    let v_first = poly("v_first", &file.v_first)?;
    let v_ratio = poly("v_ratio", &file.v_ratio)?;
    Ok(Homomorphism::new(
        &file.name,
        pres,
        file.writhe_module,
        &vars,
        &images,
        v_first,
        v_ratio,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_reproduces_the_builtin_jones() {
        let text = r#"{
            "name": "jones",
            "presentation": "b2",
            "writhe_module": true,
            "vars": ["q"],
            "images": { "a": "q", "a'": "q", "b": "q^-1", "b'": "q^-1", "A": "-q^-3" },
            "v_first": "1",
            "v_ratio": "-q^2 - q^-2"
        }"#;
        let custom = from_json(text).unwrap();
        let residuals = custom.check(8).unwrap();
        assert!(residuals.iter().all(|(_, r)| r.is_zero()));
        let builtin = Homomorphism::jones();
        for g in [Gen::Aa, Gen::Ap, Gen::B, Gen::Bp, Gen::BigA] {
            assert_eq!(custom.image(g), builtin.image(g));
        }
    }

    #[test]
    fn bad_fields_are_reported() {
        assert!(from_json("{}").is_err());
        let bad_pres = r#"{"name":"x","presentation":"b9","vars":["q"],
            "images":{},"v_first":"1","v_ratio":"1"}"#;
        assert!(from_json(bad_pres).unwrap_err().to_string().contains("b9"));
        let bad_gen = r#"{"name":"x","presentation":"b2","vars":["q"],
            "images":{"z":"q"},"v_first":"1","v_ratio":"1"}"#;
        assert!(from_json(bad_gen).unwrap_err().to_string().contains("'z'"));
        let bad_poly = r#"{"name":"x","presentation":"b2","vars":["q"],
            "images":{"a":"q+t"},"v_first":"1","v_ratio":"1"}"#;
        assert!(from_json(bad_poly).is_err());
    }

    #[test]
    fn builtin_names_resolve() {
        assert!(builtin("jones").is_some());
        assert!(builtin("q").is_some());
        assert!(builtin("dubrovnik").is_some());
        assert!(builtin("alexander").is_none());
    }
}
