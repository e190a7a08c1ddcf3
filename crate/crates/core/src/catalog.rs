//! Explicit presentations: the Chinese monoid, the tensor product of two
//! free algebras, and a brute-force congruence oracle for semigroup
//! presentations.

use std::collections::BTreeSet;

use crate::alphabet::Alphabet;
use crate::lincomb::scalar;
use crate::poly::Polynomial;
use crate::rewrite::{irr_words, RewriteSystem};
use crate::word::{words_of_length, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationKind {
    Semigroup,
    Algebra,
}

/// Generators plus defining relations. Semigroup relations `u = v` are
/// stored as binomials `u − v` with `u > v`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<Polynomial>,
    pub kind: PresentationKind,
}

impl Presentation {
    /// Builds a semigroup presentation; identities are dropped and
    /// duplicates removed.
    pub fn semigroup(alphabet: Alphabet, pairs: impl IntoIterator<Item = (Word, Word)>) -> Self {
        let mut seen = BTreeSet::new();
        let mut relations = Vec::new();
        for (u, v) in pairs {
            if u == v {
                continue;
            }
            let (hi, lo) = if u > v { (u, v) } else { (v, u) };
            if seen.insert((hi.clone(), lo.clone())) {
                relations.push(binomial(hi, lo));
            }
        }
        Presentation {
            alphabet,
            relations,
            kind: PresentationKind::Semigroup,
        }
    }

    /// The two sides of each binomial relation, greater first.
    pub fn sides(&self) -> Vec<(Word, Word)> {
        self.relations
            .iter()
            .filter_map(|p| {
                let mut ms = p.monomials();
                match (ms.next(), ms.next(), ms.next()) {
                    (Some(u), Some(v), None) => Some((u.clone(), v.clone())),
                    _ => None,
                }
            })
            .collect()
    }

    pub fn rewrite_system(&self) -> RewriteSystem {
        RewriteSystem::new(self.alphabet.clone(), self.relations.clone())
            .expect("relations are nonzero")
    }
}

fn binomial(u: Word, v: Word) -> Polynomial {
    Polynomial::from_terms([(u, scalar(1)), (v, scalar(-1))])
}

fn word(letters: &[u32]) -> Word {
    Word::from(letters)
}

/// Generators `x1 < … < xk`.
pub fn chinese_alphabet(k: usize) -> Alphabet {
    Alphabet::indexed("x", k)
}

/// `cba = bca = cab` for all `c ≥ b ≥ a`.
pub fn chinese_relations(k: usize) -> Presentation {
    let mut pairs = Vec::new();
    for c in 0..k as u32 {
        for b in 0..=c {
            for a in 0..=b {
                let cba = word(&[c, b, a]);
                pairs.push((cba.clone(), word(&[b, c, a])));
                pairs.push((cba, word(&[c, a, b])));
            }
        }
    }
    Presentation::semigroup(chinese_alphabet(k), pairs)
}

/// The five relation families of the Chinese monoid's Gröbner–Shirshov
/// basis under deg-lex with `x1 < … < xk`:
///
/// * `xi xj xk − xj xi xk` and `xi xk xj − xj xi xk` for `i > j > k`,
/// * `xi xj xj − xj xi xj` and `xi xi xj − xi xj xi` for `i > j`,
/// * `xi xj xi xk − xi xk xi xj` for `i > j > k`.
pub fn chinese_gsb(k: usize) -> RewriteSystem {
    let n = k as u32;
    let mut rels = Vec::new();
    for i in 0..n {
        for j in 0..i {
            for l in 0..j {
                rels.push(binomial(word(&[i, j, l]), word(&[j, i, l])));
                rels.push(binomial(word(&[i, l, j]), word(&[j, i, l])));
                rels.push(binomial(word(&[i, j, i, l]), word(&[i, l, i, j])));
            }
            rels.push(binomial(word(&[i, j, j]), word(&[j, i, j])));
            rels.push(binomial(word(&[i, i, j]), word(&[i, j, i])));
        }
    }
    rels.sort_by(|p, q| p.leading_monomial().cmp(&q.leading_monomial()));
    RewriteSystem::new(chinese_alphabet(k), rels).expect("binomials are monic")
}

/// Whether `u` has the form `w1 w2 … wk` with
/// `wr = (xr x1)^t1 (xr x2)^t2 … (xr x(r−1))^t(r−1) xr^trr`.
pub fn is_staircase(u: &Word, k: usize) -> bool {
    let l = u.letters();
    if l.iter().any(|&x| x as usize >= k) {
        return false;
    }
    let mut pos = 0;
    // Each block is headed by its letter r; blocks appear with r increasing.
    let mut last_head: Option<u32> = None;
    while pos < l.len() {
        let r = l[pos];
        if last_head.is_some_and(|h| r <= h) {
            return false;
        }
        last_head = Some(r);
        let mut floor = 0;
        while pos + 1 < l.len() && l[pos] == r && l[pos + 1] < r && l[pos + 1] >= floor {
            floor = l[pos + 1];
            pos += 2;
        }
        while pos < l.len() && l[pos] == r {
            pos += 1;
        }
    }
    true
}

/// Compares staircase words with `Irr(chinese_gsb(k))` up to `max_len`.
pub fn staircase_equals_irr(k: usize, max_len: usize) -> bool {
    let irr: BTreeSet<Word> = irr_words(&chinese_gsb(k), max_len).into_iter().collect();
    let stair: BTreeSet<Word> = (0..=max_len)
        .flat_map(|n| words_of_length(k, n))
        .filter(|u| is_staircase(u, k))
        .collect();
    irr == stair
}

/// Number of congruence classes among words of length `n`, by closing the
/// relations (both directions, any position) with union-find. Rewrites that
/// change the length are ignored.
pub fn congruence_classes(p: &Presentation, n: usize) -> usize {
    let k = p.alphabet.len();
    let words = words_of_length(k, n);
    let index = |w: &[u32]| w.iter().fold(0usize, |acc, &l| acc * k + l as usize);
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let sides = p.sides();
    for w in &words {
        let wl = w.letters();
        for (u, v) in &sides {
            if u.len() != v.len() {
                continue;
            }
            for (from, to) in [(u, v), (v, u)] {
                for pos in w.occurrences(from) {
                    let mut image = wl.to_vec();
                    image[pos..pos + from.len()].copy_from_slice(to.letters());
                    let (a, b) = (
                        find(&mut parent, index(wl)),
                        find(&mut parent, index(&image)),
                    );
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
    }
    (0..words.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}

/// Generators `x1 < … < x(nx) < y1 < … < y(ny)`.
pub fn tensor_alphabet(nx: usize, ny: usize) -> Alphabet {
    let names = (1..=nx)
        .map(|i| format!("x{i}"))
        .chain((1..=ny).map(|j| format!("y{j}")));
    Alphabet::new(names).expect("distinct names")
}

/// `y·x − x·y` for every `x ∈ X`, `y ∈ Y`, with every `y` above every `x`.
pub fn tensor_relations(nx: usize, ny: usize) -> RewriteSystem {
    let mut rels = Vec::new();
    for y in nx..nx + ny {
        for x in 0..nx {
            rels.push(binomial(
                word(&[y as u32, x as u32]),
                word(&[x as u32, y as u32]),
            ));
        }
    }
    RewriteSystem::new(tensor_alphabet(nx, ny), rels).expect("binomials are monic")
}

/// Whether every `X` letter precedes every `Y` letter.
pub fn is_tensor_normal(u: &Word, nx: usize) -> bool {
    let first_y = u.letters().iter().position(|&l| l as usize >= nx);
    first_y.is_none_or(|p| u.letters()[p..].iter().all(|&l| l as usize >= nx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gsb::{all_compositions, is_gsb};
    use crate::rewrite::{irr_counts, normal_form};

    #[test]
    fn chinese_relation_counts() {
        assert!(chinese_relations(1).relations.is_empty());
        let r2 = chinese_relations(2);
        assert_eq!(r2.relations.len(), 2);
        // (2,2,1): 221 = 212; (2,1,1): 211 = 121 (1-based names).
        let sides: BTreeSet<(Word, Word)> = r2.sides().into_iter().collect();
        assert!(sides.contains(&(word(&[1, 1, 0]), word(&[1, 0, 1]))));
        assert!(sides.contains(&(word(&[1, 0, 0]), word(&[0, 1, 0]))));
        assert!(chinese_relations(3).relations.len() <= 16);
    }

    #[test]
    fn chinese_relations_reduce_to_zero() {
        for k in 1..=3 {
            let s = chinese_gsb(k);
            for r in chinese_relations(k).relations {
                assert!(normal_form(&r, &s).is_zero());
            }
        }
    }

    #[test]
    fn chinese_gsb_is_a_basis_for_small_ranks() {
        assert!(is_gsb(&chinese_gsb(2)).holds);
        assert!(is_gsb(&chinese_gsb(3)).holds);
    }

    #[test]
    fn chinese_basis_elements_are_congruent() {
        // Each binomial's two words fall into one class of the congruence.
        for k in 2..=3 {
            let pres = chinese_relations(k);
            for rel in chinese_gsb(k).elements() {
                let n = rel.leading_monomial().unwrap().len();
                let extended = Presentation::semigroup(
                    pres.alphabet.clone(),
                    pres.sides().into_iter().chain([{
                        let mut ms = rel.monomials();
                        (ms.next().unwrap().clone(), ms.next().unwrap().clone())
                    }]),
                );
                assert_eq!(
                    congruence_classes(&extended, n),
                    congruence_classes(&pres, n)
                );
            }
        }
    }

    #[test]
    fn staircase_examples() {
        assert!(is_staircase(&Word::empty(), 2));
        assert!(is_staircase(&word(&[1, 0, 1]), 2));
        assert!(!is_staircase(&word(&[1, 1, 0]), 2));
        assert!(!irr_words(&chinese_gsb(2), 3).contains(&word(&[1, 1, 0])));
        assert!(is_staircase(&word(&[0, 0, 2, 0, 2, 1, 2]), 3));
        assert!(!is_staircase(&word(&[2, 1, 2, 0]), 3));
    }

    #[test]
    fn staircase_matches_irr() {
        assert!(staircase_equals_irr(1, 6));
        assert!(staircase_equals_irr(2, 5));
        assert!(staircase_equals_irr(3, 4));
        assert_eq!(irr_counts(&chinese_gsb(2), 5), vec![1, 2, 4, 6, 9, 12]);
    }

    #[test]
    fn congruence_examples() {
        let p = chinese_relations(2);
        assert_eq!(congruence_classes(&p, 3), 6);
        assert_eq!(congruence_classes(&p, 2), 4);
        assert_eq!(congruence_classes(&chinese_relations(3), 1), 3);
    }

    #[test]
    fn tensor_examples() {
        let s = tensor_relations(2, 2);
        assert!(is_gsb(&s).holds);
        assert!(all_compositions(&s).is_empty());
        let t = tensor_relations(1, 1);
        assert_eq!(irr_counts(&t, 2), vec![1, 2, 3]);
        for u in irr_words(&s, 4) {
            assert!(is_tensor_normal(&u, 2));
        }
    }
}
