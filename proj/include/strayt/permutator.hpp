#pragma once

#include <cstddef>
#include <vector>

#include "strayt/cayley.hpp"
#include "strayt/core.hpp"
#include "strayt/straight_words.hpp"

namespace strayt {

/// Perm(Y) = {s in S : Y.s = Y}, the permutators of Y.
struct PermutatorSemigroup {
  StateSet y;
  /// Ascending element indices. ε is included only when S contains it.
  std::vector<ElementIndex> elements;
  /// Order of the permutation group the members induce on Y; 0 when Perm(Y)
  /// is empty.
  std::size_t restriction_group_order = 0;
};

PermutatorSemigroup perm_semigroup(const CayleyGraph& g, const StateSet& y);

/// A word is a minimal permutator of Y when it permutes Y and is not a
/// product of two or more permutator words. This holds iff no proper nonempty
/// prefix permutes Y: if a prefix u of w = uv permutes Y then so does v
/// (Y.v = (Y.u).v = Y.w = Y), splitting w; conversely any split w = w1 w2
/// into permutator words makes w1 such a prefix.
bool is_minimal_permutator(const CayleyGraph& g, const Word& w,
                           const StateSet& y);

/// The finite code M_S(Y) of straight minimal permutators.
struct MinimalStraightCode {
  StateSet y;
  std::vector<Word> words;
  /// False if a search limit cut the enumeration short.
  bool complete = true;
};

/// Enumerates M_S(Y). The search prunes every path whose current prefix
/// already permutes Y.
MinimalStraightCode minimal_straight_permutators(
    const CayleyGraph& g, const StateSet& y, const SearchLimits& limits = {});

/// Factors of a permutator word, each a minimal permutator.
struct Factorization {
  std::vector<Word> factors;
};

/// Unique factorization of a permutator word into minimal permutators,
/// cutting after every prefix that permutes Y. Throws NotAPermutatorWord.
Factorization factorize(const Presentation& p, const Word& w,
                        const StateSet& y);
Factorization factorize(const CayleyGraph& g, const Word& w,
                        const StateSet& y);

/// A straight word realizing the same element as w, obtained by cutting
/// loops out of w's trajectory: take the first node that occurs again later,
/// delete every letter after the one that first enters it, up to and
/// including the one entering it for the last time, and repeat until the
/// word is straight.
Word reduce(const CayleyGraph& g, const Word& w);

/// The retraction φ: the concatenation of reduce() over the minimal
/// permutator factors of w. Fixes every word of M_S(Y) and is multiplicative
/// over permutator words. Throws NotAPermutatorWord.
Word retract(const CayleyGraph& g, const Word& w, const StateSet& y);

/// Elements of the subsemigroup generated by the realizations of the seeds,
/// ascending.
std::vector<ElementIndex> subgroup_closure(const CayleyGraph& g,
                                           const std::vector<Word>& seeds);

/// Element of w in the graph.
ElementIndex realize(const CayleyGraph& g, const Word& w);

}  // namespace strayt
