#include "strayt/core.hpp"

#include <algorithm>
#include <stdexcept>

#include "strayt/errors.hpp"

namespace strayt {

Transformation::Transformation(std::span<const State> images) {
  if (images.empty()) {
    throw std::invalid_argument("transformation needs at least one state");
  }
  map_.reserve(images.size());
  for (State x : images) {
    if (x < 1 || x > images.size()) {
      throw std::invalid_argument("image " + std::to_string(x) +
                                  " outside {1.." +
                                  std::to_string(images.size()) + "}");
    }
    map_.push_back(x - 1);
  }
}

Transformation::Transformation(std::initializer_list<State> images)
    : Transformation(std::span<const State>(images.begin(), images.size())) {}

Transformation Transformation::identity(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("identity needs at least one state");
  }
  Transformation t;
  t.map_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.map_[i] = static_cast<State>(i);
  }
  return t;
}

State Transformation::operator()(State x) const {
  if (x < 1 || x > map_.size()) {
    throw std::out_of_range("state " + std::to_string(x) + " out of range");
  }
  return map_[x - 1] + 1;
}

std::vector<State> Transformation::images() const {
  std::vector<State> out(map_.size());
  std::transform(map_.begin(), map_.end(), out.begin(),
                 [](State x) { return x + 1; });
  return out;
}

bool Transformation::is_identity() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

bool Transformation::is_permutation() const {
  std::vector<bool> hit(map_.size(), false);
  for (State x : map_) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::size_t Transformation::hash() const noexcept {
  // FNV-1a over the image table.
  std::size_t h = 14695981039346656037ull;
  for (State x : map_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Transformation identity(std::size_t n) { return Transformation::identity(n); }

Transformation compose(const Transformation& s, const Transformation& t) {
  if (s.degree() != t.degree()) {
    throw std::invalid_argument("cannot compose maps of degree " +
                                std::to_string(s.degree()) + " and " +
                                std::to_string(t.degree()));
  }
  Transformation r;
  r.map_.resize(s.map_.size());
  for (std::size_t i = 0; i < s.map_.size(); ++i) {
    r.map_[i] = t.map_[s.map_[i]];
  }
  return r;
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("a word has at least one letter");
  }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Word Word::operator+(const Word& rhs) const {
  std::vector<Letter> out(letters_);
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  if (pos + count > letters_.size()) {
    throw std::out_of_range("subword past end of word");
  }
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + count));
}

Presentation::Presentation(std::vector<Generator> generators)
    : degree_(0), generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw std::invalid_argument("presentation needs at least one generator");
  }
  degree_ = generators_.front().transform.degree();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.name.empty()) {
      throw std::invalid_argument("generator name must be nonempty");
    }
    if (g.transform.degree() != degree_) {
      throw std::invalid_argument("generator '" + g.name + "' has degree " +
                                  std::to_string(g.transform.degree()) +
                                  ", expected " + std::to_string(degree_));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[j].name == g.name) {
        throw std::invalid_argument("duplicate generator name '" + g.name +
                                    "'");
      }
    }
  }
}

Letter Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return static_cast<Letter>(i);
  }
  return static_cast<Letter>(generators_.size());
}

Transformation evaluate(const Presentation& p, const Word& w) {
  Transformation acc = p[w[0]].transform;
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = compose(acc, p[w[i]].transform);
  }
  return acc;
}

StateSet::StateSet(std::vector<State> members) : members_(std::move(members)) {
  if (members_.empty()) {
    throw std::invalid_argument("state set must be nonempty");
  }
  std::sort(members_.begin(), members_.end());
  if (members_.front() == 0) {
    throw std::invalid_argument("states are numbered from 1");
  }
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("state set has a repeated state");
  }
}

StateSet::StateSet(std::initializer_list<State> members)
    : StateSet(std::vector<State>(members)) {}

StateSet StateSet::all(std::size_t n) {
  std::vector<State> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<State>(i + 1);
  return StateSet(std::move(m));
}

bool StateSet::contains(State x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

namespace {

void check_range(const Transformation& s, const StateSet& y) {
  if (y.max() > s.degree()) {
    throw std::invalid_argument("state " + std::to_string(y.max()) +
                                " exceeds degree " +
                                std::to_string(s.degree()));
  }
}

}  // namespace

State first_unreturned(const Transformation& s, const StateSet& y) {
  check_range(s, y);
  std::vector<State> image;
  image.reserve(y.size());
  for (State x : y) image.push_back(s(x));
  std::sort(image.begin(), image.end());
  for (State x : y) {
    if (!std::binary_search(image.begin(), image.end(), x)) return x;
  }
  return 0;
}

bool permutes(const Transformation& s, const StateSet& y) {
  return first_unreturned(s, y) == 0;
}

SetPermutation::SetPermutation(StateSet domain, std::vector<State> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) {
    throw std::invalid_argument("permutation image count mismatch");
  }
  std::vector<State> sorted(images_);
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), domain_.begin())) {
    throw std::invalid_argument("images are not a rearrangement of the set");
  }
}

State SetPermutation::operator()(State x) const {
  auto m = domain_.members();
  auto it = std::lower_bound(m.begin(), m.end(), x);
  if (it == m.end() || *it != x) {
    throw std::out_of_range("state " + std::to_string(x) + " not in domain");
  }
  return images_[static_cast<std::size_t>(it - m.begin())];
}

bool SetPermutation::is_identity() const noexcept {
  return std::equal(images_.begin(), images_.end(), domain_.begin());
}

SetPermutation SetPermutation::then(const SetPermutation& rhs) const {
  if (!(domain_ == rhs.domain_)) {
    throw std::invalid_argument("permutations act on different sets");
  }
  std::vector<State> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs(images_[i]);
  return SetPermutation(domain_, std::move(out));
}

SetPermutation restrict(const Transformation& s, const StateSet& y) {
  if (State missing = first_unreturned(s, y); missing != 0) {
    throw NotAPermutator("map does not permute the set: state " +
                         std::to_string(missing) + " is not returned");
  }
  std::vector<State> images;
  images.reserve(y.size());
  for (State x : y) images.push_back(s(x));
  return SetPermutation(y, std::move(images));
}

}  // namespace strayt
