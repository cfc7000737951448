//! Freely reduced words over named generators.

use std::fmt;

/// A reduced word: syllables `g^k` with `k != 0` and no two adjacent
/// syllables on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    syllables: Vec<(String, i64)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(name: impl Into<String>) -> Self {
        FreeWord {
            syllables: vec![(name.into(), 1)],
        }
    }

    /// Reduces an arbitrary syllable sequence.
    pub fn from_syllables<S: Into<String>>(raw: impl IntoIterator<Item = (S, i64)>) -> Self {
        let mut w = FreeWord::identity();
        for (g, k) in raw {
            w.push(g.into(), k);
        }
        w
    }

    pub fn syllables(&self) -> &[(String, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters `g^{±1}` in the word.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|(_, k)| k.unsigned_abs()).sum()
    }

    fn push(&mut self, g: String, k: i64) {
        if k == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((h, e)) if *h == g => {
                *e += k;
                if *e == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, k)),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for (g, k) in &other.syllables {
            out.push(g.clone(), *k);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            syllables: self.syllables.iter().rev().map(|(g, k)| (g.clone(), -k)).collect(),
        }
    }

    pub fn generators(&self) -> impl Iterator<Item = &str> {
        self.syllables.iter().map(|(g, _)| g.as_str())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("e");
        }
        for (i, (g, k)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *k == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{k}")?;
            }
        }
        Ok(())
    }
}
