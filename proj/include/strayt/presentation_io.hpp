#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "strayt/core.hpp"

namespace strayt {

/// Presentation file format:
///
///   # comment
///   states 4
///   t = ([[3;1];2],4)
///   r = images: 4 2 2 4
///
/// The header must come before any generator. Generator names consist of
/// letters, digits, '_' and '\''. A definition is either linear notation or
/// "images:" followed by the full image list. Errors carry the 1-based line.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::filesystem::path& path);

/// Canonical file text; every generator in linear notation.
std::string format_presentation(const Presentation& p);

/// Reads words over a presentation's generator names.
///
/// Tokens are separated by whitespace or '.'. A token is a generator name,
/// "@alias" for a named word, or, when every generator name is a single
/// character, a run of such characters ("bacbac").
class WordReader {
 public:
  explicit WordReader(const Presentation& p) : p_(&p) {}

  Word parse(std::string_view text) const;

  /// Adds @name. Throws std::invalid_argument if the name is taken.
  void define(const std::string& name, Word w);

  /// Reads "name = word" lines; words may use aliases defined earlier.
  void load_aliases(std::string_view text);
  void load_alias_file(const std::filesystem::path& path);

  const std::map<std::string, Word, std::less<>>& aliases() const noexcept {
    return aliases_;
  }

 private:
  const Presentation* p_;
  std::map<std::string, Word, std::less<>> aliases_;
};

/// Letters run together when every name is one character ("bac"), else
/// space-separated ("t1 t5 t3").
std::string format_word(const Presentation& p, const Word& w);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace strayt
