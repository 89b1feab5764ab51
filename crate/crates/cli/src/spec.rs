//! Field and algebra specification files.
//!
//! A spec is a TOML document with a `[field]` table and, for commands that
//! need a full algebra, an `[algebra]` table:
//!
//! ```toml
//! [field]
//! kind = "quadratic"   # one of: quadratic, cyclotomic, custom
//! m = -1               # quadratic: K = Q(sqrt(m)); m squarefree, not 0 or 1
//! # p = 5              # cyclotomic: K = Q(zeta_p); p an odd prime
//! # defining_poly = ["-1", "-2", "1", "1"]  # custom: monic poly, ascending
//! # sigma_image = ["-2", "0", "1"]          # custom: sigma(t) as poly in t
//!
//! [algebra]
//! a = "-1"             # the parameter, as "num" or "num/den"
//! ```
//!
//! All rational values are exact "num/den" strings; decimals are never
//! accepted as inputs.

use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Deserialize;
use weylrep_core::cyclicalg::CyclicAlgebra;
use weylrep_core::numberfield::NumberField;
use weylrep_core::rational::parse_rational;
use weylrep_core::unipoly::UniPoly;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub field: FieldSpec,
    pub algebra: Option<AlgebraSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub kind: String,
    pub m: Option<i64>,
    pub p: Option<u64>,
    pub defining_poly: Option<Vec<String>>,
    pub sigma_image: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub a: String,
}

/// Reads and parses a spec file, without building anything yet.
pub fn load_spec(path: &Path) -> Result<SpecFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read spec file {}: {e}", path.display()))?;
    toml::from_str(&text).map_err(|e| format!("invalid spec file {}: {e}", path.display()))
}

fn parse_poly(key: &str, coeffs: &[String]) -> Result<UniPoly, String> {
    let parsed: Result<Vec<_>, _> = coeffs.iter().map(|s| parse_rational(s)).collect();
    Ok(UniPoly::new(parsed.map_err(|e| format!("{key}: {e}"))?))
}

fn ensure_absent(kind: &str, keys: &[(&str, bool)]) -> Result<(), String> {
    for (key, present) in keys {
        if *present {
            return Err(format!("key '{key}' does not apply to kind = \"{kind}\""));
        }
    }
    Ok(())
}

/// Builds the number field a `[field]` table describes.
pub fn build_field(spec: &FieldSpec) -> Result<Arc<NumberField>, String> {
    match spec.kind.as_str() {
        "quadratic" => {
            let m = spec.m.ok_or("quadratic fields need the key 'm'")?;
            ensure_absent(
                "quadratic",
                &[
                    ("p", spec.p.is_some()),
                    ("defining_poly", spec.defining_poly.is_some()),
                    ("sigma_image", spec.sigma_image.is_some()),
                ],
            )?;
            NumberField::quadratic(BigInt::from(m)).map_err(|e| e.to_string())
        }
        "cyclotomic" => {
            let p = spec.p.ok_or("cyclotomic fields need the key 'p'")?;
            ensure_absent(
                "cyclotomic",
                &[
                    ("m", spec.m.is_some()),
                    ("defining_poly", spec.defining_poly.is_some()),
                    ("sigma_image", spec.sigma_image.is_some()),
                ],
            )?;
            NumberField::cyclotomic_prime(p).map_err(|e| e.to_string())
        }
        "custom" => {
            let f = spec
                .defining_poly
                .as_ref()
                .ok_or("custom fields need the key 'defining_poly'")?;
            let s = spec.sigma_image.as_ref().ok_or("custom fields need the key 'sigma_image'")?;
            ensure_absent("custom", &[("m", spec.m.is_some()), ("p", spec.p.is_some())])?;
            NumberField::custom(parse_poly("defining_poly", f)?, parse_poly("sigma_image", s)?)
                .map_err(|e| e.to_string())
        }
        other => Err(format!(
            "unknown field kind '{other}' (expected quadratic, cyclotomic, or custom)"
        )),
    }
}

/// Builds the full cyclic algebra a spec file describes; requires the
/// `[algebra]` table.
pub fn build_algebra(file: &SpecFile) -> Result<Arc<CyclicAlgebra>, String> {
    let alg = file
        .algebra
        .as_ref()
        .ok_or("spec file has no [algebra] table (only a [field] table was found)")?;
    let a = parse_rational(&alg.a).map_err(|e| e.to_string())?;
    let field = build_field(&file.field)?;
    CyclicAlgebra::new(field, a).map_err(|e| e.to_string())
}
