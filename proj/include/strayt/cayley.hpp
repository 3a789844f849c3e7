#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "strayt/core.hpp"

namespace strayt {

/// Index of an element in a CayleyGraph's table. Index 0 is always ε.
using ElementIndex = std::uint32_t;

inline constexpr ElementIndex kIdentity = 0;

struct EnumerateOptions {
  /// Throw EnumerationLimit once the table would exceed this many entries.
  std::optional<std::size_t> max_elements;
};

/// The right Cayley graph of S^1 = S ∪ {ε} for a presentation: every element
/// realized by a word, with an edge s -g-> s.g for each generator g.
///
/// Elements are numbered in breadth-first discovery order from ε, expanding
/// generators in presentation order. The first word recorded for each
/// element is therefore a shortest realizing word, and the least one in
/// generator-index order among those.
///
/// ε sits at index 0 even when some nonempty word realizes it; in that case
/// contains_identity() is true and ε counts towards order().
class CayleyGraph {
 public:
  CayleyGraph(CayleyGraph&&) noexcept = default;
  CayleyGraph& operator=(CayleyGraph&&) noexcept = default;
  CayleyGraph(const CayleyGraph&) = delete;
  CayleyGraph& operator=(const CayleyGraph&) = delete;

  const Presentation& presentation() const noexcept { return presentation_; }

  /// |S^1|, the number of table entries.
  std::size_t size() const noexcept { return elements_.size(); }

  /// |S|, the number of elements realized by nonempty words.
  std::size_t order() const noexcept {
    return contains_identity_ ? size() : size() - 1;
  }

  bool contains_identity() const noexcept { return contains_identity_; }

  const Transformation& element(ElementIndex e) const {
    return *elements_.at(e);
  }

  /// e.g
  ElementIndex successor(ElementIndex e, Letter g) const {
    return edges_[static_cast<std::size_t>(e) * generators_ + g];
  }

  /// Shortest, then least, word realizing e. Throws NotInSemigroup for ε
  /// when ε is not in S.
  Word first_word(ElementIndex e) const;

  std::optional<ElementIndex> find(const Transformation& s) const;

  /// Throws NotInSemigroup if s is not in the table.
  ElementIndex element_index(const Transformation& s) const;

  /// Whether e's transformation permutes Y, for every element.
  std::vector<bool> permutator_mask(const StateSet& y) const;

 private:
  friend CayleyGraph enumerate(const Presentation&, const EnumerateOptions&);
  explicit CayleyGraph(const Presentation& p);

  static constexpr ElementIndex kNoParent = ~ElementIndex{0};

  Presentation presentation_;
  std::size_t generators_;
  // Nodes of an unordered_map keep their address, so elements_ can point
  // into index_.
  std::unordered_map<Transformation, ElementIndex> index_;
  std::vector<const Transformation*> elements_;
  std::vector<ElementIndex> edges_;
  std::vector<ElementIndex> parent_;
  std::vector<Letter> last_letter_;
  bool contains_identity_ = false;
  ElementIndex identity_parent_ = kNoParent;
  Letter identity_letter_ = 0;
};

/// Breadth-first closure of the generators. Single-threaded; the discovery
/// order is part of the result.
CayleyGraph enumerate(const Presentation& p, const EnumerateOptions& opts = {});

/// Node sequence ε, w[0..1), w[0..2), ..., w. Length is |w| + 1.
struct Trajectory {
  std::vector<ElementIndex> nodes;

  bool operator==(const Trajectory&) const = default;
};

/// Throws std::out_of_range for a letter outside the generator list.
Trajectory trajectory(const CayleyGraph& g, const Word& w);

/// True iff the nodes of w's trajectory are pairwise distinct, except that
/// the last node may coincide with the first (both ε).
bool is_straight(const CayleyGraph& g, const Word& w);
bool is_straight(const Trajectory& t);

}  // namespace strayt
