//! JSON stack descriptions.
//!
//! ```json
//! {
//!   "group": { "finite_orders": [], "torus_rank": 1 },
//!   "weights": [[1], [3], [3]],
//!   "space": "affine_minus_origin",
//!   "bundles": { "L": [ { "character": [-1], "coefficient": 2 } ] },
//!   "classes": { "x": { "sector": 1, "terms": [ { "character": [3], "coefficient": "1/2" } ] } }
//! }
//! ```
//!
//! A character is the list of finite exponents followed by the torus weight
//! when the torus rank is 1.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::algebra::rational::{int, parse_rational};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::stack::{ActionSpec, Character, GroupSpec, Space, Stack, VirtualBundle};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    #[serde(default)]
    finite_orders: Vec<u32>,
    #[serde(default)]
    torus_rank: u8,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    character: Vec<i64>,
    #[serde(default = "default_coefficient")]
    coefficient: Value,
}

fn default_coefficient() -> Value {
    Value::from(1)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClass {
    sector: usize,
    terms: Vec<RawTerm>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    group: RawGroup,
    #[serde(default)]
    weights: Vec<Vec<i64>>,
    space: String,
    #[serde(default)]
    bundles: BTreeMap<String, Vec<RawTerm>>,
    #[serde(default)]
    classes: BTreeMap<String, RawClass>,
}

/// A class given as a character combination on one sector.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassSpec {
    pub sector: usize,
    pub terms: VirtualBundle,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StackConfig {
    pub action: ActionSpec,
    pub bundles: BTreeMap<String, VirtualBundle>,
    pub classes: BTreeMap<String, ClassSpec>,
}

pub const BUILTIN_BUNDLES: [&str; 4] = ["T", "T*", "Tdual", "chi"];

pub fn parse_config(path: &Path) -> Result<StackConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_config_str(&text)
}

pub fn parse_config_str(text: &str) -> Result<StackConfig> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut problems = Vec::new();

    let group = GroupSpec {
        finite_orders: raw.group.finite_orders.clone(),
        torus_rank: raw.group.torus_rank,
    };
    if group.torus_rank > 1 {
        problems.push(format!("torus rank {} is not supported (0 or 1)", group.torus_rank));
    }
    if group.finite_orders.contains(&0) {
        problems.push("finite orders must be positive".to_string());
    }
    let space = match raw.space.as_str() {
        "affine_minus_origin" => Some(Space::AffineMinusOrigin),
        "point" => Some(Space::Point),
        other => {
            problems.push(format!("unknown space `{other}` (expected affine_minus_origin or point)"));
            None
        }
    };
    if !problems.is_empty() {
        return Err(Error::Validation(problems));
    }
    let width = group.finite_orders.len() + group.torus_rank as usize;
    let character = |v: &[i64], what: &str, problems: &mut Vec<String>| -> Option<Character> {
        if v.len() != width {
            problems.push(format!("{what}: character {v:?} should have {width} entries"));
            return None;
        }
        let nf = group.finite_orders.len();
        let torus = if group.torus_rank == 1 { v[nf] } else { 0 };
        Some(Character::new(&group, v[..nf].to_vec(), torus))
    };
    let coefficient = |c: &Value, what: &str, problems: &mut Vec<String>| -> Option<Rational> {
        let parsed = match c {
            Value::Number(n) => n.as_i64().map(int),
            Value::String(s) => parse_rational(s),
            _ => None,
        };
        if parsed.is_none() {
            problems.push(format!("{what}: coefficient {c} is not an integer or \"p/q\""));
        }
        parsed
    };
    let bundle = |terms: &[RawTerm], what: &str, problems: &mut Vec<String>| -> VirtualBundle {
        let mut v = VirtualBundle::zero();
        for t in terms {
            if let (Some(w), Some(c)) = (character(&t.character, what, problems), coefficient(&t.coefficient, what, problems)) {
                v.add_term(w, c);
            }
        }
        v
    };

    let weights: Vec<Character> = raw
        .weights
        .iter()
        .enumerate()
        .filter_map(|(j, w)| character(w, &format!("weight {}", j + 1), &mut problems))
        .collect();
    let mut bundles = BTreeMap::new();
    for (name, terms) in &raw.bundles {
        if BUILTIN_BUNDLES.contains(&name.as_str()) {
            problems.push(format!("bundle name `{name}` is reserved"));
        }
        bundles.insert(name.clone(), bundle(terms, &format!("bundle {name}"), &mut problems));
    }
    let mut classes = BTreeMap::new();
    for (name, class) in &raw.classes {
        classes.insert(
            name.clone(),
            ClassSpec {
                sector: class.sector,
                terms: bundle(&class.terms, &format!("class {name}"), &mut problems),
            },
        );
    }
    let action = ActionSpec {
        group,
        weights,
        space: space.expect("checked above"),
    };
    // malformed weights were dropped; validating the rest would only cascade
    let validation = if action.weights.len() == raw.weights.len() { action.validate() } else { Ok(()) };
    match validation {
        Ok(()) => {}
        Err(Error::Validation(v)) => problems.extend(v),
        Err(Error::InfiniteStabilizer(msg)) => problems.push(format!("infinite stabilizer: {msg}")),
        Err(e) => return Err(e),
    }
    if problems.is_empty() {
        let config = StackConfig { action, bundles, classes };
        let sectors = config.stack()?.sectors().len();
        let bad: Vec<String> = config
            .classes
            .iter()
            .filter(|(_, c)| c.sector >= sectors)
            .map(|(n, c)| format!("class {n}: sector {} out of range ({sectors} sectors)", c.sector))
            .collect();
        if bad.is_empty() {
            Ok(config)
        } else {
            Err(Error::Validation(bad))
        }
    } else {
        Err(Error::Validation(problems))
    }
}

impl StackConfig {
    pub fn stack(&self) -> Result<Stack> {
        Stack::new(self.action.clone())
    }

    /// A configured bundle or one of the built-in names `T`, `T*` (alias
    /// `Tdual`) and `chi`.
    pub fn bundle(&self, stack: &Stack, name: &str) -> Result<VirtualBundle> {
        match name {
            "T" => Ok(stack.tangent()),
            "T*" | "Tdual" => Ok(stack.cotangent()),
            "chi" => Ok(VirtualBundle::character(stack.tautological())),
            _ => self
                .bundles
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnknownBundleName(name.to_string())),
        }
    }
}
