#pragma once

// Template definitions for straight_words.hpp.

#include <algorithm>
#include <cassert>

namespace strayt::detail {

template <class Accept>
class Backtracker {
 public:
  Backtracker(const CayleyGraph& g, ElementIndex from, const Accept& accept,
              bool stop_on_accept, const SearchLimits& limits)
      : g_(g),
        from_(from),
        accept_(accept),
        stop_on_accept_(stop_on_accept),
        max_results_(limits.max_results),
        cap_(std::min(limits.max_length.value_or(g.order()), g.order())),
        visited_(g.size(), false) {}

  SearchResult run() {
    if (!max_results_) {
      walk(std::nullopt);
      std::sort(result_.words.begin(), result_.words.end(),
                [](const Word& a, const Word& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
                });
      return std::move(result_);
    }
    // A result cap must cut the length-major order, so deepen one length at
    // a time; the walk for each length emits in lexicographic order.
    for (std::size_t len = 1; len <= cap_; ++len) {
      if (!walk(len) || done_) break;
    }
    return std::move(result_);
  }

 private:
  struct Frame {
    ElementIndex node;
    Letter next;
  };

  // Explores simple paths from from_. With `exact`, only words of that length
  // are reported and paths stop there. Returns whether some path of length
  // `exact` could still be extended.
  bool walk(std::optional<std::size_t> exact) {
    const auto k = static_cast<Letter>(g_.presentation().size());
    const std::size_t limit = exact ? *exact : cap_;
    bool alive = false;
    std::vector<Frame> frames{{from_, 0}};
    std::vector<Letter> letters;

    while (!frames.empty() && !done_) {
      Frame& top = frames.back();
      if (top.next == k || letters.size() >= limit) {
        visited_[top.node] = false;
        frames.pop_back();
        if (!letters.empty()) letters.pop_back();
        continue;
      }
      const Letter a = top.next++;
      const ElementIndex next = g_.successor(top.node, a);
      const std::size_t len = letters.size() + 1;
      const bool report_here = !exact || len == *exact;

      if (next == from_) {
        // Closing a loop ends the word. The start node is never marked
        // visited; this is the only way back onto it.
        if (report_here && accept_(next)) emit(letters, a);
        continue;
      }
      if (visited_[next]) continue;
      const bool accepted = accept_(next);
      if (accepted && report_here) emit(letters, a);
      if (accepted && stop_on_accept_) continue;
      if (len == limit) {
        alive = true;
        continue;
      }
      visited_[next] = true;
      letters.push_back(a);
      frames.push_back({next, 0});
    }
    for (const Frame& f : frames) visited_[f.node] = false;
    return alive;
  }

  void emit(const std::vector<Letter>& prefix, Letter last) {
    if (max_results_ && result_.words.size() == *max_results_) {
      result_.truncated = true;
      done_ = true;
      return;
    }
    std::vector<Letter> w(prefix);
    w.push_back(last);
    assert(w.size() <= g_.order());
    result_.words.emplace_back(std::move(w));
  }

  const CayleyGraph& g_;
  ElementIndex from_;
  const Accept& accept_;
  bool stop_on_accept_;
  std::optional<std::size_t> max_results_;
  std::size_t cap_;
  std::vector<bool> visited_;
  SearchResult result_;
  bool done_ = false;
};

template <class Accept>
SearchResult backtrack(const CayleyGraph& g, ElementIndex from,
                       const Accept& accept, bool stop_on_accept,
                       const SearchLimits& limits) {
  if (from >= g.size()) throw std::out_of_range("element index out of range");
  return Backtracker<Accept>(g, from, accept, stop_on_accept, limits).run();
}

}  // namespace strayt::detail
