use std::fmt;

use crate::algebra::IntPolynomial;
use crate::{Error, Result};

/// A generator index raised to a nonzero power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i64,
}

/// Freely reduced word over indexed generators.
///
/// Adjacent letters on the same generator are always merged and zero
/// exponents dropped, so two words are equal as values exactly when they are
/// equal as free-group elements.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Self::power(g, 1)
    }

    /// `x_g^e`
    pub fn power(g: usize, e: i64) -> Self {
        Self::from_pairs([(g, e)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::identity();
        for (generator, exponent) in pairs {
            w.push(Letter {
                generator,
                exponent,
            });
        }
        w
    }

    /// Product `x_{i_0} x_{i_1} ...` of positive generators.
    pub fn product_of(indices: impl IntoIterator<Item = usize>) -> Self {
        Self::from_pairs(indices.into_iter().map(|g| (g, 1)))
    }

    fn push(&mut self, letter: Letter) {
        if letter.exponent == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.generator == letter.generator => {
                last.exponent += letter.exponent;
                if last.exponent == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length as a free-group word (sum of absolute exponents).
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|l| l.exponent.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == g)
            .map(|l| l.exponent)
            .sum()
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    generator: l.generator,
                    exponent: -l.exponent,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Word::identity(), |acc, _| acc.concat(&base))
    }

    /// `[a, b] = a^-1 b^-1 a b`
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a.inverse().concat(&b.inverse()).concat(a).concat(b)
    }

    /// Free reduction. Words are kept reduced, so this is a copy; it exists
    /// for callers that want to state the operation explicitly.
    pub fn reduce(&self) -> Self {
        let mut w = Word::identity();
        for &l in &self.letters {
            w.push(l);
        }
        w
    }

    fn check_range(&self, rank: usize) -> Result<()> {
        match self.max_generator() {
            Some(g) if g >= rank => Err(Error::invalid(format!(
                "generator index {g} out of range for {rank} generators"
            ))),
            _ => Ok(()),
        }
    }

    /// Applies the shift automorphism `x_j -> x_{j+i mod rank}`.
    pub fn shift(&self, rank: usize, i: i64) -> Result<Self> {
        if rank == 0 {
            return Err(Error::invalid("shift over zero generators"));
        }
        self.check_range(rank)?;
        let r = rank as i64;
        Ok(Self::from_pairs(self.letters.iter().map(|l| {
            let j = (l.generator as i64 + i).rem_euclid(r) as usize;
            (j, l.exponent)
        })))
    }

    /// Polynomial whose coefficient of `x^i` is the exponent sum of `x_i`.
    pub fn representer_polynomial(&self, rank: usize) -> Result<IntPolynomial> {
        self.check_range(rank)?;
        let mut coeffs = vec![0i64; rank];
        for l in &self.letters {
            coeffs[l.generator] += l.exponent;
        }
        Ok(IntPolynomial::from_i64s(&coeffs))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Renders with indexed names `x0, x1, ...`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |g: usize| format!("x{g}");
        f.write_str(&self.render(names))
    }
}

impl Word {
    pub(crate) fn render(&self, name: impl Fn(usize) -> String) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l.exponent {
                1 => name(l.generator),
                e => format!("{}^{}", name(l.generator), e),
            })
            .collect();
        parts.join(" ")
    }
}
