#include "strayt/cayley.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "strayt/errors.hpp"
#include "strayt/notation.hpp"

namespace strayt {

CayleyGraph::CayleyGraph(const Presentation& p)
    : presentation_(p), generators_(p.size()) {}

Word CayleyGraph::first_word(ElementIndex e) const {
  if (e >= size()) throw std::out_of_range("element index out of range");
  std::vector<Letter> letters;
  ElementIndex at = e;
  if (e == kIdentity) {
    if (!contains_identity_) {
      throw NotInSemigroup("the identity is not realized by a nonempty word");
    }
    letters.push_back(identity_letter_);
    at = identity_parent_;
  }
  while (at != kIdentity) {
    letters.push_back(last_letter_[at]);
    at = parent_[at];
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

std::optional<ElementIndex> CayleyGraph::find(const Transformation& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex CayleyGraph::element_index(const Transformation& s) const {
  if (auto e = find(s)) return *e;
  throw NotInSemigroup("not in the semigroup: " +
                       (s.degree() == presentation_.degree()
                            ? print_linear(s)
                            : "degree " + std::to_string(s.degree())));
}

std::vector<bool> CayleyGraph::permutator_mask(const StateSet& y) const {
  std::vector<bool> mask(size());
  for (std::size_t e = 0; e < size(); ++e) mask[e] = permutes(*elements_[e], y);
  return mask;
}

CayleyGraph enumerate(const Presentation& p, const EnumerateOptions& opts) {
  CayleyGraph g(p);
  const std::size_t k = p.size();

  auto add = [&](Transformation t, ElementIndex parent, Letter letter) {
    if (opts.max_elements && g.elements_.size() >= *opts.max_elements) {
      throw EnumerationLimit("enumeration exceeded " +
                             std::to_string(*opts.max_elements) + " elements");
    }
    auto idx = static_cast<ElementIndex>(g.elements_.size());
    auto [it, inserted] = g.index_.emplace(std::move(t), idx);
    g.elements_.push_back(&it->first);
    g.parent_.push_back(parent);
    g.last_letter_.push_back(letter);
    return idx;
  };

  add(identity(p.degree()), CayleyGraph::kNoParent, 0);

  // The table doubles as the BFS queue.
  for (std::size_t e = 0; e < g.elements_.size(); ++e) {
    for (Letter a = 0; a < k; ++a) {
      Transformation next = compose(*g.elements_[e], p[a].transform);
      ElementIndex target;
      if (auto it = g.index_.find(next); it != g.index_.end()) {
        target = it->second;
        if (target == kIdentity && !g.contains_identity_) {
          g.contains_identity_ = true;
          g.identity_parent_ = static_cast<ElementIndex>(e);
          g.identity_letter_ = a;
        }
      } else {
        target = add(std::move(next), static_cast<ElementIndex>(e), a);
      }
      g.edges_.push_back(target);
    }
  }
  return g;
}

Trajectory trajectory(const CayleyGraph& g, const Word& w) {
  const auto k = g.presentation().size();
  Trajectory t;
  t.nodes.reserve(w.size() + 1);
  t.nodes.push_back(kIdentity);
  for (Letter a : w) {
    if (a >= k) {
      throw std::out_of_range("letter " + std::to_string(a) +
                              " is not a generator index");
    }
    t.nodes.push_back(g.successor(t.nodes.back(), a));
  }
  return t;
}

bool is_straight(const Trajectory& t) {
  const auto& nodes = t.nodes;
  std::vector<ElementIndex> seen(nodes.begin(), nodes.end() - 1);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  // The last node may only repeat an earlier one if it closes a loop at ε.
  ElementIndex last = nodes.back();
  return last == kIdentity ||
         !std::binary_search(seen.begin(), seen.end(), last);
}

bool is_straight(const CayleyGraph& g, const Word& w) {
  return is_straight(trajectory(g, w));
}

}  // namespace strayt
