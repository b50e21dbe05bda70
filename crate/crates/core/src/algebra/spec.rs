use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::galois::{is_prime, GaloisField};
use super::isotope::{isotope_data, isotope_table};
use super::literal;
use super::table::CayleyTable;
use super::{Algebra, AlgebraRef, Kind};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum SpecKind {
    PrimeField,
    GaloisField,
    Rationals,
    Quaternions,
    Octonions,
    CayleyTable,
    Isotope,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Either a preset name or an inline Galois-field spec.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum BaseRef {
    Preset(String),
    Spec(Box<AlgebraSpec>),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct IsotopeSpec {
    pub base: BaseRef,
    /// Literal of the element `a` in the base field.
    pub a: String,
    /// Matrix of `V` over the prime field acting on coefficient columns; identity when absent.
    #[serde(rename = "V", default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<Vec<u64>>>,
}

/// Serializable description of an algebra (the spec-file format).
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub kind: SpecKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    /// Field polynomial coefficients, low degree first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<TableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isotope: Option<IsotopeSpec>,
    /// Pivot literals `b_0..b_{m-1}` for algebras without a right unit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivots: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Built-in algebra names accepted by [`AlgebraSpec::preset`]; `f<p>` works for any prime p.
pub const PRESETS: &[&str] = &[
    "f2",
    "f3",
    "f5",
    "f7",
    "gf4",
    "gf8",
    "gf9",
    "gf25",
    "rationals",
    "quaternions",
    "octonions",
    "gf9-isotope",
];

impl AlgebraSpec {
    pub(crate) fn simple(kind: SpecKind) -> Self {
        AlgebraSpec {
            kind,
            p: None,
            poly: None,
            tables: None,
            isotope: None,
            pivots: None,
            label: None,
        }
    }

    pub fn prime_field(p: u64) -> Self {
        AlgebraSpec {
            p: Some(p),
            ..Self::simple(SpecKind::PrimeField)
        }
    }

    pub fn galois_field(p: u64, poly: &[u64]) -> Self {
        AlgebraSpec {
            p: Some(p),
            poly: Some(poly.to_vec()),
            ..Self::simple(SpecKind::GaloisField)
        }
    }

    pub fn cayley_table(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Self {
        AlgebraSpec {
            tables: Some(TableSpec {
                add,
                mul,
                labels: None,
            }),
            ..Self::simple(SpecKind::CayleyTable)
        }
    }

    pub fn isotope(base: &str, a: &str, v: Option<Vec<Vec<u64>>>) -> Self {
        AlgebraSpec {
            isotope: Some(IsotopeSpec {
                base: BaseRef::Preset(base.to_string()),
                a: a.to_string(),
                v,
            }),
            ..Self::simple(SpecKind::Isotope)
        }
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    pub fn preset(name: &str) -> Result<Self> {
        let lower = name.to_ascii_lowercase();
        let spec = match lower.as_str() {
            "gf4" | "f4" => Self::galois_field(2, &[1, 1, 1]),
            "gf8" | "f8" => Self::galois_field(2, &[1, 1, 0, 1]),
            "gf9" | "f9" => Self::galois_field(3, &[1, 0, 1]),
            "gf25" | "f25" => Self::galois_field(5, &[2, 0, 1]),
            "rationals" | "q" => Self::simple(SpecKind::Rationals),
            "quaternions" | "h" => Self::simple(SpecKind::Quaternions),
            "octonions" | "o" => Self::simple(SpecKind::Octonions),
            "gf9-isotope" => Self::isotope("gf9", "t", None),
            other => {
                let digits = other
                    .strip_prefix("gf")
                    .or_else(|| other.strip_prefix('f'))
                    .and_then(|d| d.parse::<u64>().ok());
                match digits {
                    Some(p) if is_prime(p) => Self::prime_field(p),
                    _ => {
                        return Err(Error::InvalidParameter(format!(
                            "unknown algebra preset `{name}` (known: {})",
                            PRESETS.join(", ")
                        )))
                    }
                }
            }
        };
        Ok(spec.with_label(&lower))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    /// Resolves `arg` as a preset name, or else as a path to a JSON spec file.
    pub fn load(arg: &str) -> Result<Self> {
        match Self::preset(arg) {
            Ok(s) => Ok(s),
            Err(preset_err) => {
                let path = Path::new(arg);
                if !path.exists() {
                    return Err(preset_err);
                }
                let text = std::fs::read_to_string(path)?;
                Self::from_json(&text).map_err(|e| match e {
                    Error::Parse { location, message } => Error::Parse {
                        location: format!("{}: {location}", path.display()),
                        message,
                    },
                    other => other,
                })
            }
        }
    }

    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("spec serializes");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    pub(crate) fn describe(&self) -> String {
        match self.kind {
            SpecKind::PrimeField => format!("F_{}", self.p.unwrap_or(0)),
            SpecKind::GaloisField => format!(
                "GF({}^{})",
                self.p.unwrap_or(0),
                self.poly.as_ref().map_or(0, |p| p.len().saturating_sub(1))
            ),
            SpecKind::Rationals => "rationals".into(),
            SpecKind::Quaternions => "quaternions".into(),
            SpecKind::Octonions => "octonions".into(),
            SpecKind::CayleyTable => format!(
                "table({})",
                self.tables.as_ref().map_or(0, |t| t.add.len())
            ),
            SpecKind::Isotope => "isotope".into(),
        }
    }

    fn require<T: Clone>(&self, v: &Option<T>, field: &str) -> Result<T> {
        v.clone().ok_or_else(|| {
            Error::parse(format!("field `{field}`"), format!("required for {:?}", self.kind))
        })
    }

    fn galois(&self) -> Result<GaloisField> {
        GaloisField::new(self.require(&self.p, "p")?, &self.require(&self.poly, "poly")?)
    }

    /// Validates the spec and builds the algebra.
    pub fn build(&self) -> Result<AlgebraRef> {
        let kind = match self.kind {
            SpecKind::PrimeField => {
                let p = self.require(&self.p, "p")?;
                if !is_prime(p) {
                    return Err(Error::InvalidParameter(format!("modulus {p} is not prime")));
                }
                Kind::Prime(p)
            }
            SpecKind::GaloisField => Kind::Galois(self.galois()?),
            SpecKind::Rationals => Kind::Rationals,
            SpecKind::Quaternions => Kind::Quaternions,
            SpecKind::Octonions => Kind::Octonions,
            SpecKind::CayleyTable => {
                let t = self.require(&self.tables, "tables")?;
                Kind::Table(CayleyTable::new(t.add, t.mul, t.labels)?, None)
            }
            SpecKind::Isotope => {
                let iso = self.require(&self.isotope, "isotope")?;
                let base_spec = match &iso.base {
                    BaseRef::Preset(name) => Self::preset(name)?,
                    BaseRef::Spec(s) => (**s).clone(),
                };
                if base_spec.kind != SpecKind::GaloisField {
                    return Err(Error::InvalidParameter(
                        "isotope base must be a Galois field".into(),
                    ));
                }
                let base = base_spec.galois()?;
                let a = literal::parse_poly(&iso.a, base.p, base.degree()).ok_or_else(|| {
                    Error::parse("field `isotope.a`", format!("`{}` is not a field element", iso.a))
                })?;
                let data = isotope_data(&base, &a, iso.v.clone())?;
                let labels = (0..base.order() as usize)
                    .map(|i| literal::format_poly(&base.element(i)))
                    .collect();
                let table = isotope_table(&data, labels)?;
                Kind::Table(table, Some(data))
            }
        };
        Ok(Arc::new(Algebra::from_kind(self.clone(), kind)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_build() {
        for name in PRESETS {
            let alg = AlgebraSpec::preset(name).unwrap().build().unwrap();
            assert_eq!(alg.name(), *name);
        }
        assert!(AlgebraSpec::preset("f6").is_err());
        assert!(AlgebraSpec::preset("f11").is_ok());
    }

    #[test]
    fn json_roundtrip_and_digest_stability() {
        let spec = AlgebraSpec::isotope("gf9", "t", None);
        let text = spec.to_json();
        assert!(text.contains("\"kind\": \"isotope\""));
        let back = AlgebraSpec::from_json(&text).unwrap();
        assert_eq!(back, spec);
        assert_eq!(back.digest(), spec.digest());
        assert_ne!(spec.digest(), AlgebraSpec::preset("gf9").unwrap().digest());
    }

    #[test]
    fn json_field_names() {
        let spec = AlgebraSpec::from_json(
            r#"{"kind": "isotope", "isotope": {"base": "gf9", "a": "t", "V": [[1,0],[0,1]]}}"#,
        )
        .unwrap();
        let alg = spec.build().unwrap();
        assert_eq!(alg.order(), Some(9));
        let gf = AlgebraSpec::from_json(r#"{"kind": "galois-field", "p": 2, "poly": [1, 1, 1]}"#)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(gf.order(), Some(4));
    }

    #[test]
    fn parse_errors_carry_location() {
        let err = AlgebraSpec::from_json("{\n \"kind\": \"prime-field\",\n \"p\": \"x\"}").unwrap_err();
        match err {
            Error::Parse { location, .. } => assert!(location.starts_with("line 3"), "{location}"),
            other => panic!("{other:?}"),
        }
        let missing = AlgebraSpec::from_json(r#"{"kind": "galois-field", "p": 3}"#)
            .unwrap()
            .build()
            .unwrap_err();
        assert!(missing.to_string().contains("poly"));
    }

    #[test]
    fn malformed_table_names_the_row() {
        let add = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
        let err = AlgebraSpec::cayley_table(add, mul).build().unwrap_err();
        assert!(matches!(err, Error::AxiomViolation(_)));
        assert!(err.to_string().contains("row 2"));
    }
}
