use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{GroupError, GroupRingElement, GroupTable};

/// A homomorphism `G -> {+1, -1}`, e.g. the orientation character of a
/// `G`-manifold or a one-dimensional real representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Character {
    values: Vec<i8>,
}

impl Character {
    pub fn trivial(g: &GroupTable) -> Self {
        Character { values: vec![1; g.order()] }
    }

    /// Builds a character from a full value table, checking it is
    /// multiplicative.
    pub fn from_values(g: &GroupTable, values: Vec<i8>) -> Result<Self, GroupError> {
        if values.len() != g.order() || values.iter().any(|v| *v != 1 && *v != -1) {
            return Err(GroupError::InconsistentCharacter(
                "character values must be +1 or -1 for every element".into(),
            ));
        }
        let chi = Character { values };
        chi.check_multiplicative(g)?;
        Ok(chi)
    }

    /// Extends signs prescribed on the named generators to a character.
    ///
    /// Every named generator must be assigned. Fails with
    /// [`GroupError::InconsistentCharacter`] when the relations of the group
    /// force a contradiction.
    pub fn from_generator_signs(g: &GroupTable, signs: &BTreeMap<String, i8>) -> Result<Self, GroupError> {
        for name in signs.keys() {
            if g.generator(name).is_none() {
                return Err(GroupError::UnknownElement(name.clone()));
            }
        }
        let mut gens = Vec::new();
        for (name, s) in g.generators() {
            let sign = *signs.get(name).ok_or_else(|| {
                GroupError::InconsistentCharacter(format!("no sign given for generator `{name}`"))
            })?;
            if sign != 1 && sign != -1 {
                return Err(GroupError::InconsistentCharacter(format!(
                    "sign for `{name}` must be +1 or -1, got {sign}"
                )));
            }
            gens.push((*s, sign));
        }

        let mut values = vec![0i8; g.order()];
        values[g.identity()] = 1;
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(x) = queue.pop_front() {
            for &(s, sign) in &gens {
                let y = g.mul(x, s);
                let v = values[x] * sign;
                if values[y] == 0 {
                    values[y] = v;
                    queue.push_back(y);
                } else if values[y] != v {
                    return Err(GroupError::InconsistentCharacter(format!(
                        "relations force {} to be both +1 and -1",
                        g.element_name(y)
                    )));
                }
            }
        }
        let chi = Character { values };
        chi.check_multiplicative(g)?;
        Ok(chi)
    }

    /// Convenience for the D8-style `(alpha, beta, gamma)` sign triples.
    pub fn from_signs(g: &GroupTable, signs: &[(&str, i8)]) -> Result<Self, GroupError> {
        let map = signs.iter().map(|(n, s)| (n.to_string(), *s)).collect();
        Self::from_generator_signs(g, &map)
    }

    fn check_multiplicative(&self, g: &GroupTable) -> Result<(), GroupError> {
        for a in 0..g.order() {
            for b in 0..g.order() {
                if self.values[g.mul(a, b)] != self.values[a] * self.values[b] {
                    return Err(GroupError::InconsistentCharacter(format!(
                        "not multiplicative at ({}, {})",
                        g.element_name(a),
                        g.element_name(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn value(&self, x: usize) -> i8 {
        self.values[x]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    /// Pointwise product of two characters.
    pub fn product(&self, other: &Character) -> Character {
        Character {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }

    /// Signs on the named generators, in declaration order.
    pub fn generator_signs(&self, g: &GroupTable) -> Vec<(String, i8)> {
        g.generators().iter().map(|(n, s)| (n.clone(), self.values[*s])).collect()
    }
}

/// The twisted augmentation `sum a_g g -> sum a_g chi(g)`, a ring
/// homomorphism `Z[G] -> Z`.
pub fn augment(a: &GroupRingElement, chi: &Character) -> BigInt {
    a.terms()
        .map(|(x, c)| if chi.value(x) == 1 { c.clone() } else { -c })
        .sum()
}
