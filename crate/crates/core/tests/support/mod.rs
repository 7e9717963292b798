//! Independent oracles for the acceptance suite.
//!
//! Both oracles deliberately avoid the library's optimized paths: layer
//! counts come from exhaustive word enumeration, and Hecke products come
//! from a string-rewriting normal form that never touches the signed
//! permutation model.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use iwahori_core::laurent::int_poly;
use iwahori_core::{AffineElt, CoxeterSystem, HeckeAlgebra, HeckeElt, LaurentPoly};

/// Layer counts by brute force: spell out every word over the generators up
/// to `max_len` letters and record the shortest spelling of each element.
pub fn word_enumeration_layers(system: &CoxeterSystem, max_len: usize) -> Vec<u64> {
    let gens: Vec<AffineElt> = system
        .gen_indices()
        .into_iter()
        .map(|i| system.generator(i).expect("generator index"))
        .collect();
    let mut min_len: BTreeMap<AffineElt, usize> = BTreeMap::new();
    min_len.insert(system.identity(), 0);
    // `words` holds the group element of every word of length exactly k.
    let mut words: Vec<AffineElt> = vec![system.identity()];
    for k in 1..=max_len {
        let mut next = Vec::with_capacity(words.len() * gens.len());
        for w in &words {
            for s in &gens {
                let v = w.compose(s);
                min_len.entry(v.clone()).or_insert(k);
                next.push(v);
            }
        }
        words = next;
    }
    let mut counts = vec![0u64; max_len + 1];
    for &k in min_len.values() {
        counts[k] += 1;
    }
    counts
}

/// Hecke multiplication by pure string rewriting. Elements are linear
/// combinations of words; a product is normalized by exhausting braid moves
/// and splitting any adjacent repeated letter with the quadratic relation
/// `T_i T_i = q_i + (q_i - 1) T_i`. The canonical key for a reduced word is
/// the lexicographically smallest word in its braid-equivalence class.
pub struct RewriteOracle {
    system: CoxeterSystem,
    exps: BTreeMap<usize, u32>,
}

/// A formal combination of canonical reduced words.
pub type WordCombo = BTreeMap<Vec<usize>, LaurentPoly>;

impl RewriteOracle {
    pub fn new(system: CoxeterSystem, exps: &[(usize, u32)]) -> Self {
        let exps: BTreeMap<usize, u32> = exps.iter().copied().collect();
        assert_eq!(
            exps.keys().copied().collect::<Vec<_>>(),
            system.gen_indices(),
            "exponents must cover the generator set"
        );
        RewriteOracle { system, exps }
    }

    fn q_poly(&self, i: usize) -> LaurentPoly {
        LaurentPoly::q().pow(self.exps[&i])
    }

    /// All words reachable from `word` by braid substitutions
    /// `(i j i ...)_m -> (j i j ...)_m` where `m` is the bond of `i, j`.
    fn braid_closure(&self, word: &[usize]) -> BTreeSet<Vec<usize>> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(w) = queue.pop_front() {
            for p in 0..w.len().saturating_sub(1) {
                let (i, j) = (w[p], w[p + 1]);
                if i == j {
                    continue;
                }
                let Some(m) = self.system.bond(i, j) else {
                    continue;
                };
                let m = m as usize;
                if p + m > w.len() {
                    continue;
                }
                let alternates = (0..m).all(|t| w[p + t] == if t % 2 == 0 { i } else { j });
                if !alternates {
                    continue;
                }
                let mut flipped = w.clone();
                for (t, slot) in flipped[p..p + m].iter_mut().enumerate() {
                    *slot = if t % 2 == 0 { j } else { i };
                }
                if seen.insert(flipped.clone()) {
                    queue.push_back(flipped);
                }
            }
        }
        seen
    }

    /// Accumulate `coeff * T_word` into `out` in normal form.
    fn normalize_into(&self, word: &[usize], coeff: &LaurentPoly, out: &mut WordCombo) {
        if coeff.is_zero() {
            return;
        }
        let closure = self.braid_closure(word);
        for w in &closure {
            let doubled = (0..w.len().saturating_sub(1)).find(|&p| w[p] == w[p + 1]);
            if let Some(p) = doubled {
                let q = self.q_poly(w[p]);
                let mut dropped = w[..p].to_vec();
                dropped.extend_from_slice(&w[p + 2..]);
                let mut merged = w[..p + 1].to_vec();
                merged.extend_from_slice(&w[p + 2..]);
                self.normalize_into(&dropped, &(coeff * &q), out);
                self.normalize_into(&merged, &(coeff * &(&q - &LaurentPoly::one())), out);
                return;
            }
        }
        // No repeated letters anywhere in the braid class: the word is
        // reduced, and the class minimum is a canonical name for the group
        // element it spells.
        let canon = closure.into_iter().next().expect("closure contains word");
        let entry = out.entry(canon).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + coeff;
        let zero = entry.is_zero();
        if zero {
            out.retain(|_, c| !c.is_zero());
        }
    }

    /// The product `T_{w1} T_{w2}` for reduced words `w1`, `w2`.
    pub fn mul_words(&self, w1: &[usize], w2: &[usize]) -> WordCombo {
        let concat: Vec<usize> = w1.iter().chain(w2.iter()).copied().collect();
        let mut out = WordCombo::new();
        self.normalize_into(&concat, &LaurentPoly::one(), &mut out);
        out
    }

    /// Re-express a word combination in the fast engine for comparison.
    pub fn to_hecke(&self, alg: &HeckeAlgebra, combo: &WordCombo) -> HeckeElt {
        let mut acc = alg.zero();
        for (word, coeff) in combo {
            let t = alg
                .basis_from_word(false, word)
                .expect("oracle words are valid")
                .scale(coeff);
            acc = &acc + &t;
        }
        acc
    }
}

/// `int_poly` re-exported so acceptance assertions can spell small
/// polynomials without repeating the import dance.
pub fn poly(min_exp: i64, coeffs: &[i64]) -> LaurentPoly {
    int_poly(min_exp, coeffs)
}

#[cfg(test)]
mod oracle_self_tests {
    use super::*;

    #[test]
    fn dihedral_words_count_two_per_layer() {
        let sys = CoxeterSystem::infinite_dihedral();
        assert_eq!(word_enumeration_layers(&sys, 4), vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn quadratic_split_matches_by_hand() {
        let sys = CoxeterSystem::affine_c(2).unwrap();
        let oracle = RewriteOracle::new(sys, &[(0, 1), (1, 1), (2, 1)]);
        // T_0 T_0 = q + (q - 1) T_0
        let combo = oracle.mul_words(&[0], &[0]);
        assert_eq!(combo.len(), 2);
        assert_eq!(combo[&vec![]], poly(1, &[1]));
        assert_eq!(combo[&vec![0]], poly(0, &[-1, 1]));
    }
}
