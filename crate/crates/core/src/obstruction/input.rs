use std::collections::BTreeMap;

use serde::Deserialize;

use super::{ObstructionError, ObstructionProblem};
use crate::chain_complexes::{ChainFragment, Generator, LambdaMatrix};
use crate::group_algebra::{GroupRingElement, GroupTable};

/// A generator given either by its label alone or in full.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum GeneratorInput {
    Label(String),
    Full(Generator),
}

impl GeneratorInput {
    fn into_generator(self) -> Generator {
        match self {
            GeneratorInput::Label(l) => Generator::new(&l),
            GeneratorInput::Full(g) => g,
        }
    }
}

/// A fragment whose group-ring entries are written as expressions such as
/// `"1 - omega"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FragmentInput {
    top_degree: i64,
    #[serde(default)]
    augmented: bool,
    generators: Vec<Vec<GeneratorInput>>,
    boundaries: Vec<Vec<Vec<String>>>,
}

/// An obstruction problem in text form, over a group supplied separately
/// (for example from a Cayley table file).
///
/// ```json
/// {
///   "source": {"top_degree": 2, "augmented": true,
///              "generators": [["c2"], ["c1"], ["c0"]],
///              "boundaries": [[["2 + 2*omega"]], [["1 - omega"]]]},
///   "target": {"top_degree": 1, "augmented": true,
///              "generators": [["d1"], ["d0"]],
///              "boundaries": [[["1 - omega"]]]},
///   "map": {"0": [["1"]], "1": [["1"]]},
///   "homology_generator": ["1 + omega"]
/// }
/// ```
///
/// A matrix with zero rows is written `[]`; a matrix with zero columns as a
/// list of empty rows.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemInput {
    source: FragmentInput,
    target: FragmentInput,
    map: BTreeMap<i64, Vec<Vec<String>>>,
    homology_generator: Vec<String>,
}

fn parse_matrix(rows: &[Vec<String>], n_rows: usize, n_cols: usize, g: &GroupTable, what: &str) -> Result<LambdaMatrix, ObstructionError> {
    if rows.len() != n_rows || rows.iter().any(|r| r.len() != n_cols) {
        return Err(ObstructionError::Invalid(format!("{what} must be {n_rows}x{n_cols}")));
    }
    let parsed = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| GroupRingElement::parse(e, g).map_err(|err| ObstructionError::Invalid(format!("{what}: {err}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut m = LambdaMatrix::zeros(n_rows, n_cols);
    for (i, row) in parsed.into_iter().enumerate() {
        for (j, e) in row.into_iter().enumerate() {
            m.set(i, j, e);
        }
    }
    Ok(m)
}

impl FragmentInput {
    fn build(self, g: &GroupTable, name: &str) -> Result<ChainFragment, ObstructionError> {
        let generators: Vec<Vec<Generator>> = self
            .generators
            .into_iter()
            .map(|d| d.into_iter().map(GeneratorInput::into_generator).collect())
            .collect();
        if self.boundaries.len() + 1 != generators.len() {
            return Err(ObstructionError::Invalid(format!(
                "{name}: {} degrees need {} boundaries",
                generators.len(),
                generators.len().saturating_sub(1)
            )));
        }
        let boundaries = self
            .boundaries
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                let what = format!("{name} boundary from degree {}", self.top_degree - i as i64);
                parse_matrix(rows, generators[i + 1].len(), generators[i].len(), g, &what)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChainFragment::new(g.clone(), self.top_degree, generators, boundaries, self.augmented)?)
    }
}

impl ProblemInput {
    pub fn from_json(text: &str) -> Result<Self, ObstructionError> {
        serde_json::from_str(text).map_err(|e| ObstructionError::Invalid(format!("problem file: {e}")))
    }

    pub fn build(self, g: &GroupTable) -> Result<ObstructionProblem, ObstructionError> {
        let source = self.source.build(g, "source")?;
        let target = self.target.build(g, "target")?;
        let mut components = BTreeMap::new();
        for (k, rows) in &self.map {
            if !source.contains(*k) || !target.contains(*k) {
                return Err(ObstructionError::Invalid(format!("map component in degree {k} is outside the complexes")));
            }
            let m = parse_matrix(rows, target.rank(*k), source.rank(*k), g, &format!("f_{k}"))?;
            components.insert(*k, m);
        }
        let generator = self
            .homology_generator
            .iter()
            .map(|e| GroupRingElement::parse(e, g).map_err(|err| ObstructionError::Invalid(format!("homology generator: {err}"))))
            .collect::<Result<Vec<_>, _>>()?;
        ObstructionProblem::from_parts(source, target, components, generator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::build_cyclic;
    use crate::obstruction::chain_obstruction;
    use num_bigint::BigInt;

    const EXAMPLE: &str = r#"{
        "source": {"top_degree": 3, "augmented": true,
                   "generators": [["c3"], ["c2"], ["c1"], ["c0"]],
                   "boundaries": [[["1 - omega"]], [["2 + 2*omega"]], [["1 - omega"]]]},
        "target": {"top_degree": 1, "augmented": true,
                   "generators": [["d1"], [{"label": "d0"}]],
                   "boundaries": [[["1 - omega"]]]},
        "map": {"0": [["1"]], "1": [["1"]]},
        "homology_generator": ["1 + omega"]
    }"#;

    #[test]
    fn parses_and_solves_the_worked_example() {
        let g = build_cyclic(2, "omega").unwrap();
        let p = ProblemInput::from_json(EXAMPLE).unwrap().build(&g).unwrap();
        let out = chain_obstruction(&p).unwrap();
        assert_eq!(out.class.coordinates(), vec![BigInt::from(2)]);
    }

    #[test]
    fn reports_bad_input() {
        let g = build_cyclic(2, "omega").unwrap();
        assert!(ProblemInput::from_json("{}").is_err());
        let bad = EXAMPLE.replace("2 + 2*omega", "2 + 2*tau");
        assert!(matches!(ProblemInput::from_json(&bad).unwrap().build(&g), Err(ObstructionError::Invalid(_))));
        let bad = EXAMPLE.replace(r#""1": [["1"]]"#, r#""1": [["1", "1"]]"#);
        assert!(ProblemInput::from_json(&bad).unwrap().build(&g).is_err());
    }
}
