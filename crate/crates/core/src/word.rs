//! Words over a ranked alphabet and the deg-lex monomial order.

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::Result;

/// A finite sequence of generator indices. The empty word is the identity.
///
/// `Ord` is the deg-lex order: shorter words are smaller, words of equal
/// length compare lexicographically by letter rank.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letter(index: u32) -> Self {
        Word(vec![index])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `a · self · b`.
    pub fn wrap(&self, a: &[u32], b: &[u32]) -> Word {
        let mut letters = Vec::with_capacity(a.len() + self.len() + b.len());
        letters.extend_from_slice(a);
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(b);
        Word(letters)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Start positions of every occurrence of `factor` inside `self`.
    pub fn occurrences(&self, factor: &Word) -> Vec<usize> {
        occurrences(&self.0, &factor.0)
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        factor.is_empty()
            || self
                .0
                .windows(factor.len())
                .any(|w| w == factor.0.as_slice())
    }

    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        self.0.iter().try_for_each(|&l| alphabet.check_letter(l))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayWord<'a> {
        DisplayWord {
            letters: &self.0,
            alphabet,
        }
    }
}

pub(crate) fn occurrences(hay: &[u32], needle: &[u32]) -> Vec<usize> {
    if needle.len() > hay.len() {
        return Vec::new();
    }
    (0..=hay.len() - needle.len())
        .filter(|&i| &hay[i..i + needle.len()] == needle)
        .collect()
}

impl From<Vec<u32>> for Word {
    fn from(letters: Vec<u32>) -> Self {
        Word(letters)
    }
}

impl From<&[u32]> for Word {
    fn from(letters: &[u32]) -> Self {
        Word(letters.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "w[{}]", parts.join(" "))
    }
}

/// Renders a word as `x*y*z`, or `1` for the empty word.
pub struct DisplayWord<'a> {
    letters: &'a [u32],
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(self.alphabet.name(l as usize))?;
        }
        Ok(())
    }
}

/// The deg-lex order over a fixed alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegLexOrder {
    alphabet: Alphabet,
}

impl DegLexOrder {
    pub fn new(alphabet: Alphabet) -> Self {
        DegLexOrder { alphabet }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn cmp(&self, u: &Word, v: &Word) -> Result<Ordering> {
        word_cmp(u, v, self)
    }
}

/// Compares two words by length, then lexicographically by rank.
pub fn word_cmp(u: &Word, v: &Word, ord: &DegLexOrder) -> Result<Ordering> {
    u.validate(&ord.alphabet)?;
    v.validate(&ord.alphabet)?;
    Ok(u.cmp(v))
}

/// All words of length exactly `len` over `n` letters, ascending.
pub fn words_of_length(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * n);
        for w in &out {
            for l in 0..n as u32 {
                let mut letters = w.0.clone();
                letters.push(l);
                next.push(Word(letters));
            }
        }
        out = next;
    }
    out
}

/// All words of length at most `max_len`, ascending.
pub fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|len| words_of_length(n, len))
        .collect()
}
