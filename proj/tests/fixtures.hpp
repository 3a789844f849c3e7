#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "strayt/core.hpp"
#include "strayt/presentation_io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(STRAYT_DATA_DIR) + "/" + name;
}

inline strayt::Presentation load(const std::string& name) {
  return strayt::load_presentation(path(name));
}

inline strayt::Presentation ex1() { return load("ex1_monogenic.txt"); }
inline strayt::Presentation ex2() { return load("ex2_cycle.txt"); }
inline strayt::Presentation ex3() { return load("ex3_constants.txt"); }
inline strayt::Presentation ex4() { return load("ex4_abc.txt"); }
inline strayt::Presentation p53() { return load("p53.txt"); }

inline strayt::Word word(const strayt::Presentation& p, const std::string& text) {
  return strayt::WordReader(p).parse(text);
}

// p53 words a, b, x, y from the sidecar file.
inline strayt::WordReader p53_reader(const strayt::Presentation& p) {
  strayt::WordReader r(p);
  r.load_alias_file(path("p53.words"));
  return r;
}

inline oracle::Map to_map(const strayt::Transformation& t) {
  oracle::Map m{0};
  for (auto x : t.images()) m.push_back(x);
  return m;
}

inline std::vector<oracle::Map> maps(const strayt::Presentation& p) {
  std::vector<oracle::Map> out;
  for (const auto& g : p.generators()) out.push_back(to_map(g.transform));
  return out;
}

inline std::vector<unsigned> letters(const strayt::Word& w) {
  return {w.begin(), w.end()};
}

inline std::string show(const strayt::Presentation& p, const strayt::Word& w) {
  return strayt::format_word(p, w);
}

inline std::vector<std::string> show(const strayt::Presentation& p,
                                     const std::vector<strayt::Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(show(p, w));
  return out;
}

}  // namespace fixtures
