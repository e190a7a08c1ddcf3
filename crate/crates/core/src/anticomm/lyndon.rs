//! Associative Lyndon–Shirshov words under the convention "greater than
//! every proper rotation".

use super::AcWord;
use crate::error::{Error, Result};
use crate::word::Word;

pub fn is_ls_word(u: &Word) -> Result<bool> {
    let l = u.letters();
    if l.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..l.len()).all(|k| {
        let rotated = l[k..].iter().chain(&l[..k]);
        l.iter().cmp(rotated).is_gt()
    }))
}

/// Splits at the longest proper LS suffix and brackets both halves. The
/// result need not be a normal anti-commutative word.
pub fn ls_bracketing(u: &Word) -> Result<AcWord> {
    if !is_ls_word(u)? {
        return Err(Error::NotLyndonShirshov);
    }
    Ok(bracket(u.letters()))
}

fn bracket(l: &[u32]) -> AcWord {
    if l.len() == 1 {
        return AcWord::Leaf(l[0]);
    }
    let split = (1..l.len())
        .find(|&k| is_ls_word(&Word::from(&l[k..])).expect("nonempty"))
        .expect("the last letter is LS");
    AcWord::node(bracket(&l[..split]), bracket(&l[split..]))
}

/// LS words of length `n` over `letters` letters, ascending.
///
/// Duval's generation of Lyndon words, run on the reversed alphabet.
pub fn ls_words(letters: usize, n: usize) -> Vec<Word> {
    if letters == 0 || n == 0 {
        return Vec::new();
    }
    let top = letters as u32 - 1;
    let mut out = Vec::new();
    let mut w: Vec<u32> = vec![0];
    while !w.is_empty() {
        if w.len() == n {
            out.push(Word::new(w.iter().map(|&x| top - x).collect()));
        }
        let m = w.len();
        while w.len() < n {
            let next = w[w.len() - m];
            w.push(next);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[u32]) -> Word {
        Word::from(l)
    }

    #[test]
    fn examples() {
        // x = 0 < y = 1
        assert!(is_ls_word(&w(&[0])).unwrap());
        assert!(is_ls_word(&w(&[1, 0])).unwrap());
        assert!(!is_ls_word(&w(&[0, 1])).unwrap());
        assert!(is_ls_word(&w(&[1, 1, 0])).unwrap());
        assert!(!is_ls_word(&w(&[1, 0, 1])).unwrap());
        assert!(!is_ls_word(&w(&[1, 1])).unwrap());
        assert_eq!(is_ls_word(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn bracketing_examples() {
        assert_eq!(ls_bracketing(&w(&[0])).unwrap(), AcWord::Leaf(0));
        assert_eq!(
            ls_bracketing(&w(&[1, 0])).unwrap(),
            AcWord::node(AcWord::Leaf(1), AcWord::Leaf(0))
        );
        let yyx = ls_bracketing(&w(&[1, 1, 0])).unwrap();
        assert_eq!(
            yyx,
            AcWord::node(
                AcWord::Leaf(1),
                AcWord::node(AcWord::Leaf(1), AcWord::Leaf(0))
            )
        );
        assert!(!yyx.is_normal());
        assert_eq!(ls_bracketing(&w(&[0, 1])), Err(Error::NotLyndonShirshov));
    }

    #[test]
    fn generation_matches_filter() {
        for n in 1..=7 {
            let filtered: Vec<Word> = crate::word::words_of_length(2, n)
                .into_iter()
                .filter(|u| is_ls_word(u).unwrap())
                .collect();
            assert_eq!(ls_words(2, n), filtered, "length {n}");
        }
        assert_eq!(ls_words(2, 2), vec![w(&[1, 0])]);
        assert_eq!(ls_words(3, 1).len(), 3);
    }
}
