#include "strayt/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "strayt/errors.hpp"

namespace strayt {

namespace {

class LinearParser {
 public:
  LinearParser(std::string_view text, std::size_t n)
      : text_(text), n_(n), image_(n + 1, 0), mentioned_(n + 1, false) {}

  Transformation run() {
    skip_space();
    while (pos_ < text_.size()) {
      component();
      skip_space();
    }
    std::vector<State> images(n_);
    for (std::size_t x = 1; x <= n_; ++x) {
      images[x - 1] = image_[x] == 0 ? static_cast<State>(x) : image_[x];
    }
    return Transformation(images);
  }

 private:
  void component() {
    if (peek() != '(') {
      entry();
      return;
    }
    ++pos_;
    std::vector<State> cycle;
    if (peek() != ')') {
      cycle.push_back(entry());
      while (peek() == ',') {
        ++pos_;
        cycle.push_back(entry());
      }
    }
    expect(')');
    if (cycle.size() >= 2) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        image_[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
    }
  }

  // Returns the entry's root point.
  State entry() {
    if (peek() != '[') return mention(point());
    ++pos_;
    std::vector<State> sources{entry()};
    while (peek() == ',') {
      ++pos_;
      sources.push_back(entry());
    }
    expect(';');
    State target = mention(point());
    expect(']');
    for (State s : sources) image_[s] = target;
    return target;
  }

  State point() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a point");
    unsigned long long value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || value == 0 || value > n_) {
      std::string digits(text_.substr(start, pos_ - start));
      pos_ = start;
      fail("point " + digits + " outside {1.." + std::to_string(n_) + "}");
    }
    return static_cast<State>(value);
  }

  State mention(State p) {
    if (mentioned_[p]) fail("point " + std::to_string(p) + " used twice");
    mentioned_[p] = true;
    return p;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
  std::vector<State> image_;
  std::vector<bool> mentioned_;
};

}  // namespace

Transformation parse_linear(std::string_view text, std::size_t n) {
  if (n == 0) throw ParseError("state count must be positive");
  return LinearParser(text, n).run();
}

std::string print_linear(const Transformation& s) {
  const std::size_t n = s.degree();
  auto f = [&](std::size_t x) -> std::size_t { return s(State(x)); };

  // Walk from every point until the path closes; the closing point and
  // everything after it on that walk lie on a cycle.
  std::vector<bool> on_cycle(n + 1, false);
  std::vector<int> colour(n + 1, 0);  // 0 new, 1 on current walk, 2 done
  for (std::size_t start = 1; start <= n; ++start) {
    std::vector<std::size_t> walk;
    std::size_t x = start;
    while (colour[x] == 0) {
      colour[x] = 1;
      walk.push_back(x);
      x = f(x);
    }
    if (colour[x] == 1) {
      for (std::size_t y = x; !on_cycle[y]; y = f(y)) on_cycle[y] = true;
    }
    for (std::size_t y : walk) colour[y] = 2;
  }

  std::vector<std::vector<std::size_t>> sources(n + 1);
  for (std::size_t x = 1; x <= n; ++x) {
    if (!on_cycle[x]) sources[f(x)].push_back(x);
  }

  // The cycle point each point eventually lands on, and per cycle the
  // smallest point of its component.
  std::vector<std::size_t> sink(n + 1, 0);
  for (std::size_t x = 1; x <= n; ++x) {
    std::size_t y = x;
    while (!on_cycle[y]) y = f(y);
    sink[x] = y;
  }
  std::vector<std::size_t> comp_min(n + 1, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> comp_key(n + 1, 0);  // keyed by smallest cycle point
  for (std::size_t x = 1; x <= n; ++x) {
    std::size_t c = sink[x];
    std::size_t lead = c;
    for (std::size_t y = f(c); y != c; y = f(y)) lead = std::min(lead, y);
    comp_key[x] = lead;
    comp_min[lead] = std::min(comp_min[lead], x);
  }

  auto print_entry = [&](auto&& self, std::size_t p, std::string& out) -> void {
    if (sources[p].empty()) {
      out += std::to_string(p);
      return;
    }
    out += '[';
    for (std::size_t i = 0; i < sources[p].size(); ++i) {
      if (i > 0) out += ',';
      self(self, sources[p][i], out);
    }
    out += ';';
    out += std::to_string(p);
    out += ']';
  };

  std::vector<std::pair<std::size_t, std::string>> components;
  for (std::size_t lead = 1; lead <= n; ++lead) {
    if (!on_cycle[lead] || comp_key[lead] != lead) continue;
    std::vector<std::size_t> cycle{lead};
    for (std::size_t y = f(lead); y != lead; y = f(y)) cycle.push_back(y);
    if (cycle.size() == 1 && sources[lead].empty()) continue;
    std::string text;
    if (cycle.size() == 1) {
      print_entry(print_entry, lead, text);
    } else {
      text += '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i > 0) text += ',';
        print_entry(print_entry, cycle[i], text);
      }
      text += ')';
    }
    components.emplace_back(comp_min[lead], std::move(text));
  }
  if (components.empty()) return "()";
  std::sort(components.begin(), components.end());
  std::string out;
  for (auto& [key, text] : components) out += text;
  return out;
}

Transformation parse_images(std::string_view text) {
  std::vector<State> images;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    unsigned long long value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        value > std::numeric_limits<State>::max()) {
      throw ParseError("not a state: '" + token + "'");
    }
    images.push_back(static_cast<State>(value));
  }
  if (images.empty()) throw ParseError("empty image list");
  for (State x : images) {
    if (x < 1 || x > images.size()) {
      throw ParseError("image " + std::to_string(x) + " outside {1.." +
                       std::to_string(images.size()) + "}");
    }
  }
  return Transformation(images);
}

std::string print_images(const Transformation& s) {
  std::string out;
  for (State x : s.images()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace strayt
