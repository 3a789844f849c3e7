#include "strayt/straight_words.hpp"

#include <stdexcept>

namespace strayt {

SearchResult all_straight_words(const CayleyGraph& g,
                                std::optional<ElementIndex> target,
                                const SearchLimits& limits) {
  if (!target) {
    return detail::backtrack(
        g, kIdentity, [](ElementIndex) { return true; }, false, limits);
  }
  if (*target >= g.size()) {
    throw std::out_of_range("target element index out of range");
  }
  return straight_paths(g, kIdentity, *target, limits);
}

SearchResult straight_paths(const CayleyGraph& g, ElementIndex from,
                            ElementIndex to, const SearchLimits& limits) {
  if (to >= g.size()) throw std::out_of_range("element index out of range");
  // A simple path cannot revisit `to`, so nothing past it can match.
  return detail::backtrack(
      g, from, [to](ElementIndex e) { return e == to; }, true, limits);
}

SearchResult straight_permutator_words(const CayleyGraph& g, const StateSet& y,
                                       const SearchLimits& limits) {
  const std::vector<bool> mask = g.permutator_mask(y);
  return detail::backtrack(
      g, kIdentity, [&mask](ElementIndex e) { return bool(mask[e]); }, false,
      limits);
}

}  // namespace strayt
