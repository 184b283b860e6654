//! Batch commands behind the `inertia` binary. Each command returns the same
//! data as text and as JSON.

pub mod config;

use serde_json::{json, Value};

use crate::algebra::TruncatedSeries;
use crate::chern::{inertial_chern, inertial_rank};
use crate::error::{Error, Result};
use crate::localization::{localized_product, support_decomposition};
use crate::products::{check_inertial_pair, CheckReport, InertialPairSpec, InertialProduct};
use crate::rings::{label_text, InertiaKClass, KClass};
use crate::stack::Stack;

pub use config::{parse_config, parse_config_str, ClassSpec, StackConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    K,
    Chow,
}

impl Theory {
    fn name(self) -> &'static str {
        match self {
            Theory::K => "K",
            Theory::Chow => "Chow",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Sectors,
    Table { product: String, theory: Theory },
    Check { product: Option<String> },
    Chern { product: String },
    Localize,
}

/// A rendered report.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

/// A product named on the command line.
#[derive(Clone, Debug)]
pub enum ProductChoice {
    Pair(InertialPairSpec),
    Localized,
}

/// `orbifold | virtual | vplus:NAME | vminus:NAME | localized`.
pub fn parse_product(config: &StackConfig, stack: &Stack, name: &str) -> Result<ProductChoice> {
    Ok(match name {
        "orbifold" => ProductChoice::Pair(InertialPairSpec::Orbifold),
        "virtual" => ProductChoice::Pair(InertialPairSpec::Virtual),
        "localized" => ProductChoice::Localized,
        _ => match name
            .strip_suffix(')')
            .and_then(|n| n.split_once('('))
            .or_else(|| name.split_once(':'))
        {
            Some(("vplus", b)) => ProductChoice::Pair(InertialPairSpec::VPlus(config.bundle(stack, b)?)),
            Some(("vminus", b)) => ProductChoice::Pair(InertialPairSpec::VMinus(config.bundle(stack, b)?)),
            _ => {
                return Err(Error::Validation(vec![format!(
                    "unknown product `{name}` (expected orbifold, virtual, vplus:NAME, vminus:NAME, vplus(NAME), vminus(NAME) or localized)"
                )]))
            }
        },
    })
}

pub fn run_command(config: &StackConfig, command: &Command) -> Result<Output> {
    let stack = config.stack()?;
    match command {
        Command::Sectors => Ok(sectors(&stack)),
        Command::Table { product, theory } => {
            let choice = parse_product(config, &stack, product)?;
            table(&stack, product, &choice, *theory)
        }
        Command::Check { product } => {
            let names: Vec<String> = match product {
                Some(p) => vec![p.clone()],
                None => default_pair_names(config),
            };
            let mut reports = Vec::new();
            for name in &names {
                match parse_product(config, &stack, name)? {
                    ProductChoice::Pair(spec) => {
                        spec.validate()?;
                        reports.push((name.clone(), check_inertial_pair(&stack, &spec)));
                    }
                    ProductChoice::Localized => {
                        return Err(Error::UnsupportedCombination(
                            "axiom checks apply to inertial pairs, not the localized product".into(),
                        ))
                    }
                }
            }
            Ok(check(&reports))
        }
        Command::Chern { product } => match parse_product(config, &stack, product)? {
            ProductChoice::Pair(spec) => chern(config, &stack, product, &spec),
            ProductChoice::Localized => Err(Error::UnsupportedCombination(
                "the inertial Chern character needs an inertial pair".into(),
            )),
        },
        Command::Localize => localize(&stack),
    }
}

fn default_pair_names(config: &StackConfig) -> Vec<String> {
    let mut names = vec!["orbifold".to_string(), "virtual".to_string()];
    let bundles = ["T", "T*", "chi"].into_iter().map(String::from).chain(config.bundles.keys().cloned());
    for b in bundles {
        names.push(format!("vplus:{b}"));
        names.push(format!("vminus:{b}"));
    }
    names
}

fn field_line(stack: &Stack) -> String {
    let n = stack.field().conductor();
    format!("field: Q(z{n}), z = exp(2*pi*i/{n})")
}

fn chow_presentation(stack: &Stack, i: usize) -> String {
    let order = stack.chow_order(&stack.sector(i).fixed);
    let t = if order == 1 { "t".to_string() } else { format!("t^{order}") };
    format!("Q(z{})[t]/<{t}>", stack.field().conductor())
}

fn sector_json(stack: &Stack, theory: Theory) -> Value {
    Value::Array(
        stack
            .sectors()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                json!({
                    "index": i,
                    "element": s.element.to_string(),
                    "fixed": s.fixed.to_string(),
                    "ring": match theory {
                        Theory::K => stack.sector_k_ring(i).presentation(),
                        Theory::Chow => chow_presentation(stack, i),
                    },
                })
            })
            .collect(),
    )
}

fn sectors(stack: &Stack) -> Output {
    let mut text = vec![field_line(stack), "sectors:".to_string()];
    let mut rows = Vec::new();
    for (i, s) in stack.sectors().iter().enumerate() {
        let age = stack.age(&s.element);
        let k = stack.sector_k_ring(i).presentation();
        let chow = chow_presentation(stack, i);
        text.push(format!("  [{i}] g = {}  fixed {}  age {}", s.element, s.fixed, age));
        text.push(format!("      K: {k}"));
        text.push(format!("      Chow: {chow}"));
        rows.push(json!({
            "index": i,
            "element": s.element.to_string(),
            "fixed": s.fixed.to_string(),
            "age": age.to_string(),
            "k_ring": k,
            "chow_ring": chow,
        }));
    }
    Output {
        text: text.join("\n") + "\n",
        json: json!({ "field": format!("Q(z{})", stack.field().conductor()), "sectors": rows }),
    }
}

pub(crate) fn k_class_json(x: &KClass) -> Value {
    Value::Array(
        x.parts()
            .iter()
            .map(|p| Value::Array(p.coordinates().iter().map(|c| Value::String(c.to_string())).collect()))
            .collect(),
    )
}

pub(crate) fn series_json(x: &TruncatedSeries) -> Value {
    Value::Array(x.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

/// Where a product of two basis classes lands and what it is there.
struct Entry {
    sector: Option<usize>,
    text: String,
    json: Value,
}

fn k_entry(x: &InertiaKClass) -> Entry {
    let nonzero: Vec<usize> = (0..x.parts().len()).filter(|&k| !x.part(k).is_zero()).collect();
    match nonzero.as_slice() {
        [] => Entry {
            sector: None,
            text: "0".into(),
            json: Value::Null,
        },
        [k] => Entry {
            sector: Some(*k),
            text: x.part(*k).to_string(),
            json: k_class_json(x.part(*k)),
        },
        _ => Entry {
            sector: None,
            text: x.to_string(),
            json: Value::Array(x.parts().iter().map(k_class_json).collect()),
        },
    }
}

fn chow_entry(x: &crate::rings::InertiaChowClass) -> Entry {
    let nonzero: Vec<usize> = (0..x.parts().len()).filter(|&k| !x.part(k).is_zero()).collect();
    match nonzero.as_slice() {
        [] => Entry {
            sector: None,
            text: "0".into(),
            json: Value::Null,
        },
        [k] => Entry {
            sector: Some(*k),
            text: x.part(*k).to_string(),
            json: series_json(x.part(*k)),
        },
        _ => Entry {
            sector: None,
            text: x.to_string(),
            json: Value::Array(x.parts().iter().map(series_json).collect()),
        },
    }
}

fn table(stack: &Stack, name: &str, choice: &ProductChoice, theory: Theory) -> Result<Output> {
    let n = stack.sectors().len();
    let mut entries: Vec<Vec<Entry>> = Vec::with_capacity(n);
    match (choice, theory) {
        (ProductChoice::Localized, Theory::Chow) => {
            return Err(Error::UnsupportedCombination(
                "the localized product is defined on K-theory only".into(),
            ))
        }
        (ProductChoice::Localized, Theory::K) => {
            for i in 0..n {
                let row = (0..n)
                    .map(|j| Ok(k_entry(&localized_product(stack, &stack.k_fundamental(i), &stack.k_fundamental(j))?)))
                    .collect::<Result<Vec<_>>>()?;
                entries.push(row);
            }
        }
        (ProductChoice::Pair(spec), Theory::K) => {
            let prod = InertialProduct::new(stack, spec.clone())?;
            for i in 0..n {
                let row = (0..n)
                    .map(|j| Ok(k_entry(&prod.mul_k(&stack.k_fundamental(i), &stack.k_fundamental(j))?)))
                    .collect::<Result<Vec<_>>>()?;
                entries.push(row);
            }
        }
        (ProductChoice::Pair(spec), Theory::Chow) => {
            let prod = InertialProduct::new(stack, spec.clone())?;
            for i in 0..n {
                let row = (0..n)
                    .map(|j| Ok(chow_entry(&prod.mul_chow(&stack.chow_fundamental(i), &stack.chow_fundamental(j))?)))
                    .collect::<Result<Vec<_>>>()?;
                entries.push(row);
            }
        }
    }
    let symmetric = (0..n).all(|i| (0..n).all(|j| entries[i][j].text == entries[j][i].text));
    let mut text = vec![
        format!("product: {name}"),
        format!("theory: {}", theory.name()),
        field_line(stack),
        "sectors:".to_string(),
    ];
    for (i, s) in stack.sectors().iter().enumerate() {
        let ring = match theory {
            Theory::K => stack.sector_k_ring(i).presentation(),
            Theory::Chow => chow_presentation(stack, i),
        };
        text.push(format!("  [{i}] g = {}  fixed {}  {ring}", s.element, s.fixed));
    }
    text.push("products of sector units [i]*[j] -> [k]:".to_string());
    for i in 0..n {
        for j in 0..n {
            if symmetric && j < i {
                continue;
            }
            let e = &entries[i][j];
            let target = e.sector.map_or("-".to_string(), |k| k.to_string());
            text.push(format!("  [{i}]*[{j}] -> [{target}]: {}", e.text));
        }
    }
    let json = json!({
        "product": name,
        "theory": theory.name(),
        "field": format!("Q(z{})", stack.field().conductor()),
        "sectors": sector_json(stack, theory),
        "entries": entries.iter().map(|row| row.iter().map(|e| json!({
            "sector": e.sector,
            "text": e.text,
            "coefficients": e.json,
        })).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Ok(Output {
        text: text.join("\n") + "\n",
        json,
    })
}

fn check(reports: &[(String, CheckReport)]) -> Output {
    let text: Vec<String> = reports
        .iter()
        .map(|(name, r)| format!("{}\n{}", name, indent(&r.to_string())))
        .collect();
    let json = Value::Array(
        reports
            .iter()
            .map(|(name, r)| {
                json!({
                    "product": name,
                    "pair": r.pair,
                    "passed": r.passed(),
                    "sectors": r.sectors,
                    "pairs_checked": r.pairs_checked,
                    "triples_checked": r.triples_checked,
                    "identity_failures": r.identity_failures,
                    "commutativity_failures": r.commutativity_failures,
                    "integrality_failures": r.integrality_failures,
                    "cocycle_failures": r.cocycle_failures,
                    "chern_failures": r.chern_failures,
                    "gorenstein": r.gorenstein,
                    "strongly_gorenstein": r.strongly_gorenstein,
                })
            })
            .collect(),
    );
    Output {
        text: text.join("\n") + "\n",
        json,
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

/// The configured classes, or the unit of every sector when none are given.
pub fn named_classes(config: &StackConfig, stack: &Stack) -> Result<Vec<(String, InertiaKClass)>> {
    if config.classes.is_empty() {
        return Ok((0..stack.sectors().len())
            .map(|i| (format!("1[{i}]"), stack.k_fundamental(i)))
            .collect());
    }
    config
        .classes
        .iter()
        .map(|(name, c)| {
            let mut parts: Vec<KClass> = (0..stack.sectors().len()).map(|i| stack.sector_k_ring(i).zero()).collect();
            parts[c.sector] = stack.bundle_class(&c.terms, &stack.sector_k_ring(c.sector));
            Ok((name.clone(), stack.k_class(parts)?))
        })
        .collect()
}

fn chern(config: &StackConfig, stack: &Stack, name: &str, spec: &InertialPairSpec) -> Result<Output> {
    let mut text = vec![format!("product: {name}"), field_line(stack)];
    let mut rows = Vec::new();
    for (cname, x) in named_classes(config, stack)? {
        let ch = inertial_chern(stack, spec, &x)?;
        let rank = inertial_rank(stack, spec, &x)?;
        text.push(format!("class {cname}: {x}"));
        for (i, p) in ch.parts().iter().enumerate() {
            if !p.is_zero() || !x.part(i).is_zero() {
                text.push(format!("  [{i}] inertial Chern: {p}"));
                text.push(format!("  [{i}] inertial rank: {}", rank[i]));
            }
        }
        rows.push(json!({
            "class": cname,
            "chern": ch.parts().iter().map(series_json).collect::<Vec<_>>(),
            "rank": rank.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }));
    }
    Ok(Output {
        text: text.join("\n") + "\n",
        json: json!({ "product": name, "field": format!("Q(z{})", stack.field().conductor()), "classes": rows }),
    })
}

fn localize(stack: &Stack) -> Result<Output> {
    let decomposition = support_decomposition(stack)?;
    let mut text = vec![field_line(stack), "supports:".to_string()];
    let mut rows = Vec::new();
    for (i, supports) in decomposition.iter().enumerate() {
        text.push(format!("  [{i}] g = {}", stack.sector(i).element));
        let mut items = Vec::new();
        for s in supports {
            let comp = label_text(stack.sector_k_ring(i).components()[s.component].label());
            text.push(format!(
                "      h = {}  multiplicity {}  idempotent {}",
                s.element, s.multiplicity, s.idempotent
            ));
            items.push(json!({
                "h": s.element.to_string(),
                "component": comp,
                "multiplicity": s.multiplicity,
                "idempotent": k_class_json(&s.idempotent),
            }));
        }
        rows.push(json!({ "sector": i, "supports": items }));
    }
    let t = table(stack, "localized", &ProductChoice::Localized, Theory::K)?;
    text.push(String::new());
    text.push(t.text.trim_end().to_string());
    Ok(Output {
        text: text.join("\n") + "\n",
        json: json!({ "supports": rows, "table": t.json }),
    })
}
