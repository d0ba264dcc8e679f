use std::fmt;

use super::ReprError;

/// Finite ordered alphabet. Symbol order fixes matrix order and serialization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    /// Symbols must be non-empty, unique, and free of whitespace, `,`, `=` and `#`.
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self, ReprError> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(ReprError::BadAlphabet("empty symbol name".into()));
            }
            if s.chars().any(|c| c.is_whitespace() || matches!(c, ',' | '=' | '#')) {
                return Err(ReprError::BadAlphabet(format!("invalid symbol name `{s}`")));
            }
            if symbols[..i].contains(s) {
                return Err(ReprError::BadAlphabet(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    pub fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Reads a word. With single-character symbols the word is the plain
    /// concatenation (`ab`); otherwise symbols are comma-separated (`s1,s2`).
    /// `""` and `ε` denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, ReprError> {
        if text.is_empty() || text == "ε" {
            return Ok(Word::empty());
        }
        let lookup = |s: &str| self.index_of(s).ok_or_else(|| ReprError::UnknownSymbol(s.to_string()));
        let indices = if self.single_char() && !text.contains(',') {
            text.chars()
                .map(|c| lookup(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            text.split(',').map(lookup).collect::<Result<Vec<_>, _>>()?
        };
        Ok(Word(indices))
    }

    /// Inverse of [`Alphabet::parse_word`]; the empty word renders as `ε`.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.single_char() { "" } else { "," };
        w.0.iter().map(|&i| self.symbol(i)).collect::<Vec<_>>().join(sep)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbols.join(" "))
    }
}

/// Finite word, stored as symbol indices into an [`Alphabet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(indices: Vec<usize>) -> Self {
        Word(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    pub fn push(&mut self, symbol: usize) {
        self.0.push(symbol);
    }

    pub fn extended(&self, symbol: usize) -> Word {
        let mut w = self.clone();
        w.0.push(symbol);
        w
    }

    pub fn prepended(&self, symbol: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(symbol);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn fits(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|&i| i < alphabet.len())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// All words of exactly `len` letters over `size` symbols, in lexicographic order.
pub fn words_of_length(size: usize, len: usize) -> Vec<Word> {
    let mut level = vec![Word::empty()];
    for _ in 0..len {
        level = level
            .iter()
            .flat_map(|w| (0..size).map(move |a| w.extended(a)))
            .collect();
    }
    level
}

/// All words of length at most `max_len`, in length-lexicographic order.
pub fn words_up_to(size: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| words_of_length(size, l)).collect()
}
