//! Ring documents: JSON with polynomial strings.

use serde::{Deserialize, Serialize};

use qflop_core::poly::parse_polynomial;
use qflop_core::{GradedRing, MultiDegree, WeightSystem};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Weight {
    Scalar(i64),
    Vector(Vec<i64>),
}

impl Weight {
    fn to_vec(&self) -> Vec<i64> {
        match self {
            Weight::Scalar(w) => vec![*w],
            Weight::Vector(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Variable {
    pub name: String,
    pub weight: Weight,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tor_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homology_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_window: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget_steps: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget_size: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusSpec {
    /// Generators of the monoid `C`, one vector per generator.
    pub monoid: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub variables: Vec<Variable>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub options: SpecOptions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<TorusSpec>,
}

fn is_default(o: &SpecOptions) -> bool {
    *o == SpecOptions::default()
}

impl RingSpec {
    /// The document for an existing ring; scalar weights stay scalars.
    pub fn from_ring(name: &str, r: &GradedRing) -> Self {
        let variables = r
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let w = &r.weights.weight(i).0;
                let weight = if w.len() == 1 { Weight::Scalar(w[0]) } else { Weight::Vector(w.clone()) };
                Variable { name: v.clone(), weight }
            })
            .collect();
        RingSpec {
            name: Some(name.to_string()),
            variables,
            relations: r.fmt_all(&r.relations),
            options: SpecOptions::default(),
            torus: None,
        }
    }

    /// Validates names, weights and relations and builds the ring.
    pub fn to_ring(&self) -> Result<GradedRing, CliError> {
        let names: Vec<String> = self.variables.iter().map(|v| v.name.clone()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(CliError::Spec(format!("duplicate variable '{n}'")));
            }
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
            if !ok {
                return Err(CliError::Spec(format!("invalid variable name '{n}'")));
            }
        }
        let rows: Vec<Vec<i64>> = self.variables.iter().map(|v| v.weight.to_vec()).collect();
        let dim = rows.first().map_or(1, |r| r.len());
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(CliError::Spec("all weights must have the same positive length".into()));
        }
        let weights = WeightSystem::new(dim, rows.into_iter().map(MultiDegree).collect()).map_err(CliError::Core)?;
        let free = GradedRing::free(names.clone(), weights.clone()).map_err(CliError::Core)?;
        let mut rels = Vec::with_capacity(self.relations.len());
        for (k, text) in self.relations.iter().enumerate() {
            let p = parse_polynomial(text, &names)
                .map_err(|e| CliError::Spec(format!("relation {} \"{text}\": {e}", k + 1)))?;
            free.require_homogeneous(&p, &format!("relation {}", k + 1)).map_err(CliError::Core)?;
            rels.push(p);
        }
        GradedRing::new(names, weights, rels).map_err(CliError::Core)
    }
}

/// Parses a ring document. JSON errors carry their line and column.
pub fn parse_ring_spec(text: &str) -> Result<(RingSpec, GradedRing), CliError> {
    let spec: RingSpec = serde_json::from_str(text).map_err(|e| CliError::Spec(format!("malformed document: {e}")))?;
    let ring = spec.to_ring()?;
    Ok((spec, ring))
}
