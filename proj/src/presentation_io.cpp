#include "strayt/presentation_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "strayt/errors.hpp"
#include "strayt/notation.hpp"

namespace strayt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'';
  });
}

// Splits text into lines with comments and surrounding blanks removed,
// keeping the 1-based line number of each nonempty one.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, line);
  }
  return out;
}

// "name = rhs"
std::pair<std::string_view, std::string_view> split_definition(
    std::string_view line, std::size_t number) {
  std::size_t eq = line.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError("expected '<name> = <definition>'", number);
  }
  std::string_view name = trim(line.substr(0, eq));
  if (!is_name(name)) {
    throw ParseError("invalid name '" + std::string(name) + "'", number);
  }
  return {name, trim(line.substr(eq + 1))};
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing 'states <n>' header");

  auto [header_line, header] = lines.front();
  std::size_t n = 0;
  {
    std::istringstream in{std::string(header)};
    std::string keyword, count, extra;
    in >> keyword >> count;
    auto [ptr, ec] =
        std::from_chars(count.data(), count.data() + count.size(), n);
    if (keyword != "states" || ec != std::errc() ||
        ptr != count.data() + count.size() || n == 0 || (in >> extra)) {
      throw ParseError("expected 'states <n>' header", header_line);
    }
  }

  std::vector<Generator> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [number, line] = lines[i];
    auto [name, rhs] = split_definition(line, number);
    for (const auto& g : gens) {
      if (g.name == name) {
        throw ParseError("duplicate generator '" + std::string(name) + "'",
                         number);
      }
    }
    try {
      constexpr std::string_view kImages = "images:";
      if (rhs.substr(0, kImages.size()) == kImages) {
        Transformation t = parse_images(rhs.substr(kImages.size()));
        if (t.degree() != n) {
          throw ParseError("expected " + std::to_string(n) + " images, got " +
                           std::to_string(t.degree()));
        }
        gens.push_back({std::string(name), std::move(t)});
      } else {
        gens.push_back({std::string(name), parse_linear(rhs, n)});
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    }
  }
  if (gens.empty()) throw ParseError("presentation has no generators");
  return Presentation(std::move(gens));
}

Presentation load_presentation(const std::filesystem::path& path) {
  return parse_presentation(read_file(path));
}

std::string format_presentation(const Presentation& p) {
  std::string out = "states " + std::to_string(p.degree()) + "\n";
  for (const auto& g : p.generators()) {
    out += g.name + " = " + print_linear(g.transform) + "\n";
  }
  return out;
}

Word WordReader::parse(std::string_view text) const {
  const bool single_chars =
      std::all_of(p_->generators().begin(), p_->generators().end(),
                  [](const Generator& g) { return g.name.size() == 1; });
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto separator = [](char c) {
    return c == '.' || std::isspace(static_cast<unsigned char>(c));
  };
  while (pos < text.size()) {
    if (separator(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !separator(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    if (token.front() == '@') {
      auto it = aliases_.find(token.substr(1));
      if (it == aliases_.end()) {
        throw ParseError("unknown alias '" + std::string(token) + "'");
      }
      letters.insert(letters.end(), it->second.begin(), it->second.end());
    } else if (Letter g = p_->find(token); g < p_->size()) {
      letters.push_back(g);
    } else if (single_chars) {
      for (char c : token) {
        Letter h = p_->find(std::string_view(&c, 1));
        if (h == p_->size()) {
          throw ParseError(std::string("unknown generator '") + c + "'");
        }
        letters.push_back(h);
      }
    } else {
      throw ParseError("unknown generator '" + std::string(token) + "'");
    }
  }
  if (letters.empty()) throw ParseError("empty word");
  return Word(std::move(letters));
}

void WordReader::define(const std::string& name, Word w) {
  if (!is_name(name)) throw std::invalid_argument("invalid alias '" + name + "'");
  if (!aliases_.emplace(name, std::move(w)).second) {
    throw std::invalid_argument("alias '" + name + "' defined twice");
  }
}

void WordReader::load_aliases(std::string_view text) {
  for (auto [number, line] : content_lines(text)) {
    auto [name, rhs] = split_definition(line, number);
    if (aliases_.contains(name)) {
      throw ParseError("alias '" + std::string(name) + "' defined twice",
                       number);
    }
    try {
      define(std::string(name), parse(rhs));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    }
  }
}

void WordReader::load_alias_file(const std::filesystem::path& path) {
  load_aliases(read_file(path));
}

std::string format_word(const Presentation& p, const Word& w) {
  const bool single_chars =
      std::all_of(p.generators().begin(), p.generators().end(),
                  [](const Generator& g) { return g.name.size() == 1; });
  std::string out;
  for (Letter a : w) {
    if (!single_chars && !out.empty()) out += ' ';
    out += p[a].name;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace strayt
