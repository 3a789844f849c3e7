#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strayt {

/// A point of the state set X = {1..n}. States are 1-based at every public
/// boundary.
using State = std::uint32_t;

/// Index into a presentation's generator list (0-based).
using Letter = std::uint32_t;

/// A total map on {1..n}, acting on the right: x.(st) = (x.s).t.
class Transformation {
 public:
  /// Builds a transformation from its 1-based image table; entry i is the
  /// image of state i+1. Throws std::invalid_argument for an empty table or
  /// an image outside {1..n}.
  explicit Transformation(std::span<const State> images);
  Transformation(std::initializer_list<State> images);

  static Transformation identity(std::size_t n);

  std::size_t degree() const noexcept { return map_.size(); }

  /// Image of the 1-based state x.
  State operator()(State x) const;

  /// 1-based image table.
  std::vector<State> images() const;

  bool is_identity() const noexcept;
  bool is_permutation() const;

  bool operator==(const Transformation&) const = default;
  auto operator<=>(const Transformation&) const = default;

  std::size_t hash() const noexcept;

 private:
  Transformation() = default;
  friend Transformation compose(const Transformation&, const Transformation&);

  // 0-based internally.
  std::vector<State> map_;
};

/// ε on {1..n}. Throws std::invalid_argument for n = 0.
Transformation identity(std::size_t n);

/// s applied first, then t: x -> t(s(x)).
Transformation compose(const Transformation& s, const Transformation& t);

/// A nonempty sequence of generator indices.
class Word {
 public:
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Concatenation.
  Word operator+(const Word& rhs) const;

  /// Letters [pos, pos + count).
  Word subword(std::size_t pos, std::size_t count) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct Generator {
  std::string name;
  Transformation transform;
};

/// State count plus an ordered list of named generators.
class Presentation {
 public:
  /// Throws std::invalid_argument if the list is empty, names are empty or
  /// repeated, or the generators disagree on the degree.
  explicit Presentation(std::vector<Generator> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const Generator& operator[](Letter g) const { return generators_.at(g); }
  const std::vector<Generator>& generators() const noexcept {
    return generators_;
  }

  /// Index of the generator with this name, or size() if there is none.
  Letter find(std::string_view name) const;

 private:
  std::size_t degree_;
  std::vector<Generator> generators_;
};

/// Realization of a word: its letters applied left to right. Throws
/// std::out_of_range for a letter that is not a generator index.
Transformation evaluate(const Presentation& p, const Word& w);

/// A nonempty set of states, kept sorted.
class StateSet {
 public:
  /// Throws std::invalid_argument on an empty list, a zero state or a
  /// duplicate.
  explicit StateSet(std::vector<State> members);
  StateSet(std::initializer_list<State> members);

  /// {1..n}
  static StateSet all(std::size_t n);

  std::size_t size() const noexcept { return members_.size(); }
  std::span<const State> members() const noexcept { return members_; }
  State max() const noexcept { return members_.back(); }
  bool contains(State x) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool operator==(const StateSet&) const = default;

 private:
  std::vector<State> members_;
};

/// True iff Y.s = Y. Throws std::invalid_argument if Y exceeds s's degree.
bool permutes(const Transformation& s, const StateSet& y);

/// Smallest state of Y missing from Y.s, or 0 when s permutes Y.
State first_unreturned(const Transformation& s, const StateSet& y);

/// A bijection of a state set onto itself.
class SetPermutation {
 public:
  SetPermutation(StateSet domain, std::vector<State> images);

  const StateSet& domain() const noexcept { return domain_; }
  /// images()[i] is the image of domain().members()[i].
  std::span<const State> images() const noexcept { return images_; }
  State operator()(State x) const;

  bool is_identity() const noexcept;

  /// this applied first, then rhs.
  SetPermutation then(const SetPermutation& rhs) const;

  bool operator==(const SetPermutation&) const = default;
  auto operator<=>(const SetPermutation& rhs) const {
    return images_ <=> rhs.images_;
  }

 private:
  StateSet domain_;
  std::vector<State> images_;
};

/// The bijection Y -> Y induced by s. Throws NotAPermutator if s does not
/// permute Y.
SetPermutation restrict(const Transformation& s, const StateSet& y);

}  // namespace strayt

template <>
struct std::hash<strayt::Transformation> {
  std::size_t operator()(const strayt::Transformation& t) const noexcept {
    return t.hash();
  }
};
