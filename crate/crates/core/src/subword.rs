//! Subword order on words over a finite alphabet. Small oracle used to
//! show the colored composition poset is not a subword order in
//! disguise: a length-3 word covers at most 3 subwords, while the
//! composition (1c0,1c1,1c0) covers 4.

use std::collections::BTreeSet;

use crate::error::Error;

/// A word over the alphabet 0..alphabet_size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    alphabet_size: u8,
    letters: Vec<u8>,
}

impl Word {
    pub fn new(alphabet_size: u8, letters: Vec<u8>) -> Result<Self, Error> {
        for &l in &letters {
            if l >= alphabet_size {
                return Err(Error::ColorOutOfRange {
                    color: l,
                    m: alphabet_size,
                });
            }
        }
        Ok(Word {
            alphabet_size,
            letters,
        })
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// The distinct words obtained by deleting one letter: the down-covers
/// of `w` in the subword order.
pub fn subword_down_covers(w: &Word) -> BTreeSet<Word> {
    let mut covers = BTreeSet::new();
    for i in 0..w.letters.len() {
        let mut shorter = w.letters.clone();
        shorter.remove(i);
        covers.insert(Word {
            alphabet_size: w.alphabet_size,
            letters: shorter,
        });
    }
    covers
}

/// All words of a given length, for exhaustive scans.
pub fn enumerate_words(alphabet_size: u8, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut letters = vec![0u8; len];
    loop {
        out.push(Word {
            alphabet_size,
            letters: letters.clone(),
        });
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            letters[i] += 1;
            if letters[i] < alphabet_size {
                break;
            }
            letters[i] = 0;
        }
    }
}
