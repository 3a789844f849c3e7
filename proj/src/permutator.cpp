#include "strayt/permutator.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "strayt/errors.hpp"

namespace strayt {

namespace {

struct PrefixScan {
  // Lengths of the proper and improper prefixes that permute Y, ascending.
  std::vector<std::size_t> cuts;
  // Smallest state of Y missing from Y.w, 0 if w permutes Y.
  State missing = 0;
};

// Tracks the image of Y letter by letter; Y.(uv) = (Y.u).v.
PrefixScan scan_prefixes(const Presentation& p, const Word& w,
                         const StateSet& y) {
  if (y.max() > p.degree()) {
    throw std::invalid_argument("state " + std::to_string(y.max()) +
                                " exceeds degree " +
                                std::to_string(p.degree()));
  }
  PrefixScan scan;
  std::vector<State> image(y.begin(), y.end());
  const std::vector<State> target(y.begin(), y.end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Transformation& t = p[w[i]].transform;
    for (State& x : image) x = t(x);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image == target) scan.cuts.push_back(i + 1);
  }
  if (scan.cuts.empty() || scan.cuts.back() != w.size()) {
    for (State x : y) {
      if (!std::binary_search(image.begin(), image.end(), x)) {
        scan.missing = x;
        break;
      }
    }
  }
  return scan;
}

}  // namespace

ElementIndex realize(const CayleyGraph& g, const Word& w) {
  return trajectory(g, w).nodes.back();
}

PermutatorSemigroup perm_semigroup(const CayleyGraph& g, const StateSet& y) {
  PermutatorSemigroup perm{y, {}, 0};
  const std::vector<bool> mask = g.permutator_mask(y);
  for (ElementIndex e = 0; e < g.size(); ++e) {
    if (e == kIdentity && !g.contains_identity()) continue;
    if (mask[e]) perm.elements.push_back(e);
  }
  if (perm.elements.empty()) return perm;

  std::set<SetPermutation> gens;
  for (ElementIndex e : perm.elements) gens.insert(restrict(g.element(e), y));
  // Perm(Y) is closed, so its restrictions already form the group; closing
  // them again checks that.
  std::set<SetPermutation> group(gens);
  std::deque<SetPermutation> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    SetPermutation x = std::move(queue.front());
    queue.pop_front();
    for (const SetPermutation& s : gens) {
      SetPermutation xs = x.then(s);
      if (group.insert(xs).second) queue.push_back(std::move(xs));
    }
  }
  perm.restriction_group_order = group.size();
  return perm;
}

bool is_minimal_permutator(const CayleyGraph& g, const Word& w,
                           const StateSet& y) {
  PrefixScan scan = scan_prefixes(g.presentation(), w, y);
  return scan.cuts.size() == 1 && scan.cuts.front() == w.size();
}

MinimalStraightCode minimal_straight_permutators(const CayleyGraph& g,
                                                 const StateSet& y,
                                                 const SearchLimits& limits) {
  const std::vector<bool> mask = g.permutator_mask(y);
  SearchResult found = detail::backtrack(
      g, kIdentity, [&mask](ElementIndex e) { return bool(mask[e]); }, true,
      limits);
  return {y, std::move(found.words), !found.truncated};
}

Factorization factorize(const Presentation& p, const Word& w,
                        const StateSet& y) {
  PrefixScan scan = scan_prefixes(p, w, y);
  if (scan.missing != 0) throw NotAPermutatorWord(scan.missing);
  // Each factor ends at the next permuting prefix.
  Factorization out;
  std::size_t start = 0;
  for (std::size_t cut : scan.cuts) {
    out.factors.push_back(w.subword(start, cut - start));
    start = cut;
  }
  return out;
}

Factorization factorize(const CayleyGraph& g, const Word& w,
                        const StateSet& y) {
  return factorize(g.presentation(), w, y);
}

Word reduce(const CayleyGraph& g, const Word& w) {
  std::vector<ElementIndex> nodes = trajectory(g, w).nodes;
  std::vector<Letter> letters(w.begin(), w.end());

  for (;;) {
    const std::size_t m = letters.size();
    // Last occurrence of every node. A final ε closes an allowed loop and
    // does not count as a repeat of the start.
    std::unordered_map<ElementIndex, std::size_t> last;
    for (std::size_t j = 0; j <= m; ++j) {
      if (j == m && j > 0 && nodes[j] == kIdentity) break;
      last[nodes[j]] = j;
    }
    std::size_t first = m + 1;
    for (std::size_t i = 0; i <= m; ++i) {
      if (last[nodes[i]] > i) {
        first = i;
        break;
      }
    }
    if (first > m) break;
    // Letters first+1 .. last (1-based) walk the loop from the node back to
    // itself.
    const std::size_t until = last[nodes[first]];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(first),
                  letters.begin() + static_cast<std::ptrdiff_t>(until));
    nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(first) + 1,
                nodes.begin() + static_cast<std::ptrdiff_t>(until) + 1);
  }
  return Word(std::move(letters));
}

Word retract(const CayleyGraph& g, const Word& w, const StateSet& y) {
  Factorization f = factorize(g, w, y);
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Word& factor : f.factors) {
    Word r = reduce(g, factor);
    out.insert(out.end(), r.begin(), r.end());
  }
  return Word(std::move(out));
}

std::vector<ElementIndex> subgroup_closure(const CayleyGraph& g,
                                           const std::vector<Word>& seeds) {
  std::vector<ElementIndex> gens;
  for (const Word& w : seeds) gens.push_back(realize(g, w));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::unordered_set<ElementIndex> seen(gens.begin(), gens.end());
  std::vector<ElementIndex> order(gens.begin(), gens.end());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (ElementIndex s : gens) {
      ElementIndex xs =
          g.element_index(compose(g.element(order[i]), g.element(s)));
      if (seen.insert(xs).second) order.push_back(xs);
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace strayt
