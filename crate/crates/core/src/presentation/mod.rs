//! Words, finite presentations, the cyclic and bicyclic specializations, the
//! presentation families attached to `J_n(m,k)`, and a plain-text format.

mod families;
mod text;
mod word;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;

pub use families::{
    build_derived_presentation, build_e_presentation, build_fabc_presentation,
    build_fibonacci_presentation, build_j_presentation, build_refined_derived_presentation,
    build_u_presentation, derived_relator, u_relator, v_relator, FibonacciParams,
};
pub use text::{parse_presentation, parse_word, print_presentation};
pub use word::{Letter, Word};

use crate::algebra::{IntMatrix, IntPolynomial};
use crate::{Error, Result};

/// Anything that can be read as generators plus a list of relators.
pub trait Presentation {
    fn generator_count(&self) -> usize;

    fn relator_list(&self) -> Vec<Word>;

    /// Exponent-sum matrix: one row per relator, one column per generator.
    fn relation_matrix(&self) -> IntMatrix {
        let rels = self.relator_list();
        let mut m = IntMatrix::zeros(rels.len(), self.generator_count());
        for (i, r) in rels.iter().enumerate() {
            for l in r.letters() {
                m[(i, l.generator)] += BigInt::from(l.exponent);
            }
        }
        m
    }
}

/// A finite presentation with named generators.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !is_identifier(g) {
                return Err(Error::invalid(format!("`{g}` is not a valid generator name")));
            }
            if !seen.insert(g.as_str()) {
                return Err(Error::invalid(format!("generator `{g}` declared twice")));
            }
        }
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= generators.len() {
                    return Err(Error::invalid(format!(
                        "relator uses generator index {g} but only {} are declared",
                        generators.len()
                    )));
                }
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    /// Generators named `x0 .. x{rank-1}`.
    pub fn indexed(rank: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new((0..rank).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(|g| self.generators[g].clone())
    }
}

impl Presentation for GroupPresentation {
    fn generator_count(&self) -> usize {
        self.generators.len()
    }

    fn relator_list(&self) -> Vec<Word> {
        self.relators.clone()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_presentation(self))
    }
}

impl fmt::Debug for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupPresentation({self})")
    }
}

fn check_rank(rank: usize, words: &[&Word]) -> Result<()> {
    if rank == 0 {
        return Err(Error::invalid("a cyclic presentation needs at least one generator"));
    }
    for w in words {
        if let Some(g) = w.max_generator() {
            if g >= rank {
                return Err(Error::invalid(format!(
                    "generator index {g} out of range for {rank} generators"
                )));
            }
        }
    }
    Ok(())
}

/// `G_r(w)`: generators `x_0..x_{r-1}`, relators the `r` shifts of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPresentation {
    rank: usize,
    word: Word,
}

impl CyclicPresentation {
    pub fn new(rank: usize, word: Word) -> Result<Self> {
        check_rank(rank, &[&word])?;
        Ok(CyclicPresentation { rank, word })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn representer_polynomial(&self) -> IntPolynomial {
        self.word
            .representer_polynomial(self.rank)
            .expect("indices checked at construction")
    }

    pub fn to_presentation(&self) -> GroupPresentation {
        GroupPresentation::indexed(self.rank, self.relator_list()).expect("indices in range")
    }
}

fn shifts(w: &Word, rank: usize) -> impl Iterator<Item = Word> + '_ {
    (0..rank).map(move |i| w.shift(rank, i as i64).expect("indices in range"))
}

impl Presentation for CyclicPresentation {
    fn generator_count(&self) -> usize {
        self.rank
    }

    fn relator_list(&self) -> Vec<Word> {
        shifts(&self.word, self.rank).collect()
    }
}

/// `G_r(w, v)`: generators `x_0..x_{r-1}`, relators all shifts of `w` and of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicyclicPresentation {
    rank: usize,
    w: Word,
    v: Word,
}

impl BicyclicPresentation {
    pub fn new(rank: usize, w: Word, v: Word) -> Result<Self> {
        check_rank(rank, &[&w, &v])?;
        Ok(BicyclicPresentation { rank, w, v })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn w(&self) -> &Word {
        &self.w
    }

    pub fn v(&self) -> &Word {
        &self.v
    }

    pub fn to_presentation(&self) -> GroupPresentation {
        GroupPresentation::indexed(self.rank, self.relator_list()).expect("indices in range")
    }
}

impl Presentation for BicyclicPresentation {
    fn generator_count(&self) -> usize {
        self.rank
    }

    fn relator_list(&self) -> Vec<Word> {
        shifts(&self.w, self.rank)
            .chain(shifts(&self.v, self.rank))
            .collect()
    }
}
