#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "strayt/cayley.hpp"
#include "strayt/core.hpp"

namespace strayt {

struct SearchLimits {
  /// Longest word to consider. Defaults to |S|, which no straight word can
  /// exceed; larger values are clamped to it.
  std::optional<std::size_t> max_length;
  /// Stop after this many words.
  std::optional<std::size_t> max_results;
};

struct SearchResult {
  /// Sorted by length, then by generator index.
  std::vector<Word> words;
  /// More words matched than max_results allowed.
  bool truncated = false;
};

/// Straight words by backtracking over the Cayley graph. With a target,
/// only the words realizing it.
SearchResult all_straight_words(const CayleyGraph& g,
                                std::optional<ElementIndex> target = {},
                                const SearchLimits& limits = {});

/// Labels of simple paths from `from` to `to`. When from == to the path may
/// close a single loop back to its start; from ε this gives exactly the
/// straight words realizing `to`.
SearchResult straight_paths(const CayleyGraph& g, ElementIndex from,
                            ElementIndex to, const SearchLimits& limits = {});

/// Straight words whose realization permutes Y.
SearchResult straight_permutator_words(const CayleyGraph& g, const StateSet& y,
                                       const SearchLimits& limits = {});

namespace detail {

/// Backtracking core shared with the permutator module. Walks simple paths
/// from `from`, stepping back onto `from` only as the final letter. A word is
/// reported when `accept` holds for its end node; if `stop_on_accept` the
/// path is not extended past such a node.
template <class Accept>
SearchResult backtrack(const CayleyGraph& g, ElementIndex from,
                       const Accept& accept, bool stop_on_accept,
                       const SearchLimits& limits);

}  // namespace detail

}  // namespace strayt

#include "strayt/straight_words_impl.hpp"
