use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Symbol index into a [`ParityAlphabet`].
pub type Sym = usize;

/// Finite alphabet split into even and odd symbols.
#[derive(Clone, PartialEq, Eq)]
pub struct ParityAlphabet {
    symbols: Vec<String>,
    odd: Vec<bool>,
    index: HashMap<String, Sym>,
}

impl ParityAlphabet {
    pub fn new<S, T>(symbols: impl IntoIterator<Item = S>, odd: impl IntoIterator<Item = T>) -> Result<Self>
    where
        S: Into<String>,
        T: AsRef<str>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        let mut flags = vec![false; symbols.len()];
        for s in odd {
            let s = s.as_ref();
            let i = *index.get(s).ok_or_else(|| Error::UnknownSymbol(s.to_string()))?;
            flags[i] = true;
        }
        Ok(ParityAlphabet {
            symbols,
            odd: flags,
            index,
        })
    }

    /// `{0, 1}` with `1` odd.
    pub fn binary() -> Self {
        Self::new(["0", "1"], ["1"]).expect("static alphabet")
    }

    /// Digits `0..n0+n1`; the first `n0` are even, the rest odd.
    pub fn with_counts(n0: usize, n1: usize) -> Result<Self> {
        let n = n0 + n1;
        let symbols: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let odd: Vec<String> = (n0..n).map(|i| i.to_string()).collect();
        Self::new(symbols, odd)
    }

    /// Same symbols, new odd set.
    pub fn repartition<T: AsRef<str>>(&self, odd: impl IntoIterator<Item = T>) -> Result<Self> {
        Self::new(self.symbols.iter().cloned(), odd)
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

    pub fn name(&self, s: Sym) -> &str {
        &self.symbols[s]
    }

    pub fn lookup(&self, name: &str) -> Result<Sym> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn is_odd(&self, s: Sym) -> bool {
        self.odd[s]
    }

    pub fn odd_symbols(&self) -> Vec<&str> {
        (0..self.len()).filter(|&i| self.odd[i]).map(|i| self.name(i)).collect()
    }

    /// n0 = number of even symbols.
    pub fn n0(&self) -> usize {
        self.odd.iter().filter(|&&o| !o).count()
    }

    /// n1 = number of odd symbols.
    pub fn n1(&self) -> usize {
        self.odd.iter().filter(|&&o| o).count()
    }

    pub fn evens(&self) -> impl Iterator<Item = Sym> + '_ {
        (0..self.len()).filter(move |&i| !self.odd[i])
    }

    pub fn odds(&self) -> impl Iterator<Item = Sym> + '_ {
        (0..self.len()).filter(move |&i| self.odd[i])
    }

    /// 0 if the word has an even number of odd symbols, else 1.
    pub fn parity(&self, word: &[Sym]) -> u8 {
        word.iter().filter(|&&s| self.odd[s]).count() as u8 & 1
    }

    pub fn encode<T: AsRef<str>>(&self, names: &[T]) -> Result<Vec<Sym>> {
        names.iter().map(|n| self.lookup(n.as_ref())).collect()
    }

    fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Renders a word: plain concatenation when every symbol is one character, dot-joined otherwise.
    pub fn render(&self, word: &[Sym]) -> String {
        let sep = if self.single_char() { "" } else { "." };
        word.iter().map(|&s| self.name(s)).collect::<Vec<_>>().join(sep)
    }

    /// Inverse of [`render`](Self::render).
    pub fn parse(&self, text: &str) -> Result<Vec<Sym>> {
        if text.is_empty() {
            return Ok(Vec::new());
        }
        if self.single_char() {
            text.chars().map(|c| self.lookup(&c.to_string())).collect()
        } else {
            text.split('.').map(|p| self.lookup(p)).collect()
        }
    }
}

impl fmt::Debug for ParityAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParityAlphabet")
            .field("symbols", &self.symbols)
            .field("odd", &self.odd_symbols())
            .finish()
    }
}

/// Parity of a word given by symbol names.
pub fn parity_of_word<T: AsRef<str>>(word: &[T], alphabet: &ParityAlphabet) -> Result<u8> {
    Ok(alphabet.parity(&alphabet.encode(word)?))
}
