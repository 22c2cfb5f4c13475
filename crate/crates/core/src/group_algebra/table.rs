use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::GroupError;

/// A finite group given by its full multiplication table.
///
/// Elements are the indices `0..order`. `mul[a][b]` is the index of the
/// product `a * b`. Every element carries a display name: the shortest word
/// in the named generators (ties broken by generator order), with `1` for
/// the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGroupTable", into = "RawGroupTable")]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    generators: Vec<(String, usize)>,
    element_names: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RawGroupTable {
    mul: Vec<Vec<usize>>,
    generators: Vec<(String, usize)>,
}

impl TryFrom<RawGroupTable> for GroupTable {
    type Error = GroupError;

    fn try_from(raw: RawGroupTable) -> Result<Self, Self::Error> {
        GroupTable::new(raw.mul, raw.generators)
    }
}

impl From<GroupTable> for RawGroupTable {
    fn from(g: GroupTable) -> Self {
        RawGroupTable {
            mul: g.mul,
            generators: g.generators,
        }
    }
}

impl GroupTable {
    /// Validates a Cayley table and the list of named generators.
    ///
    /// Checks closure, associativity, the existence of a two-sided identity
    /// and inverses, and that the named generators generate the whole group.
    pub fn new(mul: Vec<Vec<usize>>, generators: Vec<(String, usize)>) -> Result<Self, GroupError> {
        let order = mul.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        for (row, entries) in mul.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::RaggedRow { row, len: entries.len(), order });
            }
            if let Some(&bad) = entries.iter().find(|&&e| e >= order) {
                return Err(GroupError::EntryOutOfRange { row, entry: bad, order });
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = Vec::with_capacity(order);
        for (x, row) in mul.iter().enumerate() {
            let inv = (0..order)
                .find(|&y| row[y] == identity && mul[y][x] == identity)
                .ok_or(GroupError::NoInverse(x))?;
            inverse.push(inv);
        }
        let mut seen_names = BTreeMap::new();
        for (name, idx) in &generators {
            if *idx >= order {
                return Err(GroupError::EntryOutOfRange { row: order, entry: *idx, order });
            }
            if !is_identifier(name) {
                return Err(GroupError::BadGeneratorName(name.clone()));
            }
            if seen_names.insert(name.clone(), *idx).is_some() {
                return Err(GroupError::DuplicateGenerator(name.clone()));
            }
        }

        // Breadth-first search over right multiplication by generators gives
        // every element a shortest word.
        let mut element_names: Vec<Option<String>> = vec![None; order];
        element_names[identity] = Some("1".to_string());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for (name, s) in &generators {
                let y = mul[x][*s];
                if element_names[y].is_none() {
                    let word = if x == identity {
                        name.clone()
                    } else {
                        format!("{}*{}", element_names[x].as_ref().unwrap(), name)
                    };
                    element_names[y] = Some(word);
                    queue.push_back(y);
                }
            }
        }
        if let Some(missing) = element_names.iter().position(Option::is_none) {
            return Err(GroupError::NotGenerated(missing));
        }

        Ok(GroupTable {
            mul,
            identity,
            inverse,
            generators,
            element_names: element_names.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    /// Named generators in declaration order.
    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().find(|(n, _)| n == name).map(|&(_, i)| i)
    }

    pub fn element_name(&self, idx: usize) -> &str {
        &self.element_names[idx]
    }

    /// Looks up an element by its display name or by any `*`-separated word
    /// in the generator names. `1` denotes the identity.
    pub fn element(&self, word: &str) -> Option<usize> {
        if let Some(i) = self.element_names.iter().position(|n| n == word) {
            return Some(i);
        }
        word.split('*').map(str::trim).try_fold(self.identity, |acc, letter| {
            if letter == "1" {
                Some(acc)
            } else {
                self.generator(letter).map(|s| self.mul[acc][s])
            }
        })
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut power = x;
        let mut k = 1;
        while power != self.identity {
            power = self.mul[power][x];
            k += 1;
        }
        k
    }

    /// The subgroup generated by the given elements, as a sorted list.
    pub fn subgroup_generated(&self, elements: &[usize]) -> Vec<usize> {
        let mut members = vec![false; self.order()];
        members[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &s in elements {
                let y = self.mul[x][s];
                if !members[y] {
                    members[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| members[i]).collect()
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {}", self.order())?;
        for row in &self.mul {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        let gens: Vec<String> = self.generators.iter().map(|(n, i)| format!("{n}={i}")).collect();
        write!(f, "generators {}", gens.join(" "))
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// The dihedral group of order 8 acting on the square by
/// `alpha(x, y) = (-x, y)`, `beta(x, y) = (x, -y)`, `gamma(x, y) = (y, x)`.
///
/// Elements are indexed by the normal-form words
/// `1, alpha, beta, alpha*beta, gamma, alpha*gamma, beta*gamma, alpha*beta*gamma`,
/// i.e. `alpha^i beta^j gamma^k` sits at index `i + 2j + 4k`.
pub fn build_d8() -> GroupTable {
    type M = [[i8; 2]; 2];
    fn mat_mul(a: &M, b: &M) -> M {
        let mut c = [[0i8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        c
    }
    const ID: M = [[1, 0], [0, 1]];
    const ALPHA: M = [[-1, 0], [0, 1]];
    const BETA: M = [[1, 0], [0, -1]];
    const GAMMA: M = [[0, 1], [1, 0]];

    let elements: Vec<M> = (0..8)
        .map(|idx| {
            let mut m = ID;
            if idx & 1 != 0 {
                m = mat_mul(&m, &ALPHA);
            }
            if idx & 2 != 0 {
                m = mat_mul(&m, &BETA);
            }
            if idx & 4 != 0 {
                m = mat_mul(&m, &GAMMA);
            }
            m
        })
        .collect();
    let mul = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| {
                    let p = mat_mul(a, b);
                    elements.iter().position(|e| *e == p).expect("closed under products")
                })
                .collect()
        })
        .collect();
    let generators = vec![
        ("alpha".to_string(), 1),
        ("beta".to_string(), 2),
        ("gamma".to_string(), 4),
    ];
    GroupTable::new(mul, generators).expect("D8 table is a group")
}

/// The cyclic group of order `n` with generator `name`.
pub fn build_cyclic(n: usize, name: &str) -> Result<GroupTable, GroupError> {
    let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let generators = if n > 1 { vec![(name.to_string(), 1)] } else { Vec::new() };
    GroupTable::new(mul, generators)
}
