#include "strayt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <optional>
#include <sstream>

#include "strayt/cayley.hpp"
#include "strayt/errors.hpp"
#include "strayt/notation.hpp"
#include "strayt/permutator.hpp"
#include "strayt/presentation_io.hpp"
#include "strayt/straight_words.hpp"

namespace strayt::cli {

namespace {

struct Options {
  std::string file;
  std::string aliases;
  bool tsv = false;

  std::string target;
  bool all = false;
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> max_results;
  bool length_order = false;

  std::string set;
  bool words = false;
  bool minimal = false;
  bool group_order = false;

  std::string word;
};

// Presentation, aliases and the enumerated graph for one invocation.
class Session {
 public:
  explicit Session(const Options& opt)
      : presentation_(load_presentation(opt.file)), reader_(presentation_) {
    std::filesystem::path aliases = opt.aliases;
    if (aliases.empty()) {
      std::filesystem::path sidecar = opt.file;
      sidecar.replace_extension(".words");
      if (std::filesystem::exists(sidecar)) aliases = sidecar;
    }
    if (!aliases.empty()) reader_.load_alias_file(aliases);
  }

  const Presentation& presentation() const { return presentation_; }
  const WordReader& reader() const { return reader_; }

  const CayleyGraph& graph() {
    if (!graph_) {
      EnumerateOptions opts;
      if (const char* cap = std::getenv("STRAYT_MAX_ELEMENTS"); cap && *cap) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(cap, cap + std::strlen(cap), value);
        if (ec != std::errc() || *ptr != '\0') {
          throw std::invalid_argument("STRAYT_MAX_ELEMENTS must be a count");
        }
        opts.max_elements = value;
      }
      graph_.emplace(enumerate(presentation_, opts));
    }
    return *graph_;
  }

  std::string show(const Word& w) const {
    return format_word(presentation_, w);
  }

 private:
  Presentation presentation_;
  WordReader reader_;
  std::optional<CayleyGraph> graph_;
};

StateSet parse_set(const std::string& text, std::size_t n) {
  std::vector<State> members;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t b = token.find_first_not_of(" \t");
    std::size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in state set");
    token = token.substr(b, e - b + 1);
    unsigned long value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("not a state: '" + token + "'");
    }
    if (value < 1 || value > n) {
      throw ParseError("state " + token + " outside {1.." + std::to_string(n) +
                       "}");
    }
    members.push_back(static_cast<State>(value));
  }
  try {
    return StateSet(std::move(members));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// Sorts by generator names, which reproduces alphabetical listings.
void sort_by_names(const Presentation& p, std::vector<Word>& words) {
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [&](Letter x, Letter y) { return p[x].name < p[y].name; });
  });
}

ElementIndex resolve_target(Session& s, const std::string& text) {
  const CayleyGraph& g = s.graph();
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) {
    t.remove_prefix(1);
  }
  if (t.starts_with("images:")) {
    Transformation m = parse_images(t.substr(7));
    if (m.degree() != s.presentation().degree()) {
      throw ParseError("target has " + std::to_string(m.degree()) +
                       " images, expected " +
                       std::to_string(s.presentation().degree()));
    }
    return g.element_index(m);
  }
  if (!t.empty() && (t.front() == '[' || t.front() == '(')) {
    return g.element_index(parse_linear(t, s.presentation().degree()));
  }
  return realize(g, s.reader().parse(t));
}

SearchLimits limits_of(const Options& opt) {
  return SearchLimits{opt.max_len, opt.max_results};
}

int print_words(Session& s, const Options& opt, SearchResult result,
                bool with_realization, std::ostream& out, std::ostream& err) {
  if (!opt.length_order) sort_by_names(s.presentation(), result.words);
  for (const Word& w : result.words) {
    out << s.show(w);
    if (with_realization || opt.tsv) {
      out << (opt.tsv ? "\t" : "  ")
          << print_linear(s.graph().element(realize(s.graph(), w)));
    }
    out << '\n';
  }
  if (result.truncated) {
    err << "warning: output truncated at " << result.words.size()
        << " words\n";
    return kTruncated;
  }
  return kOk;
}

int cmd_order(Session& s, const Options& opt, std::ostream& out) {
  const CayleyGraph& g = s.graph();
  if (opt.tsv) {
    out << g.order() << '\t' << (g.contains_identity() ? "true" : "false")
        << '\n';
  } else {
    out << g.order() << '\n'
        << "identity in S: " << (g.contains_identity() ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_straight(Session& s, const Options& opt, std::ostream& out,
                 std::ostream& err) {
  if (opt.all == !opt.target.empty()) {
    err << "error: give exactly one of --target or --all\n";
    return kUsage;
  }
  std::optional<ElementIndex> target;
  if (!opt.all) target = resolve_target(s, opt.target);
  SearchResult r = all_straight_words(s.graph(), target, limits_of(opt));
  return print_words(s, opt, std::move(r), opt.all, out, err);
}

int cmd_perm(Session& s, const Options& opt, std::ostream& out,
             std::ostream& err) {
  if (int(opt.words) + int(opt.minimal) + int(opt.group_order) > 1) {
    err << "error: --words, --minimal and --group-order are exclusive\n";
    return kUsage;
  }
  StateSet y = parse_set(opt.set, s.presentation().degree());
  const CayleyGraph& g = s.graph();
  if (opt.words) {
    return print_words(s, opt, straight_permutator_words(g, y, limits_of(opt)),
                       true, out, err);
  }
  if (opt.minimal) {
    MinimalStraightCode code =
        minimal_straight_permutators(g, y, limits_of(opt));
    return print_words(s, opt, {std::move(code.words), !code.complete}, true,
                       out, err);
  }
  PermutatorSemigroup perm = perm_semigroup(g, y);
  if (opt.group_order) {
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= y.size(); ++i) factorial *= i;
    if (opt.tsv) {
      out << perm.restriction_group_order << '\t'
          << (perm.restriction_group_order == factorial ? "true" : "false")
          << '\n';
    } else {
      out << "restriction group order = " << perm.restriction_group_order
          << '\n'
          << "full symmetric group on Y: "
          << (perm.restriction_group_order == factorial ? "yes" : "no")
          << '\n';
    }
    return kOk;
  }
  if (opt.tsv) {
    out << perm.elements.size() << '\n';
  } else {
    out << "|Perm(Y)| = " << perm.elements.size() << '\n';
  }
  return kOk;
}

int cmd_factorize(Session& s, const Options& opt, std::ostream& out) {
  StateSet y = parse_set(opt.set, s.presentation().degree());
  Word w = s.reader().parse(opt.word);
  Factorization f = factorize(s.presentation(), w, y);
  for (const Word& factor : f.factors) {
    out << s.show(factor);
    if (opt.tsv) out << '\t' << factor.size();
    out << '\n';
  }
  return kOk;
}

int cmd_reduce(Session& s, const Options& opt, std::ostream& out) {
  Word w = s.reader().parse(opt.word);
  Word r = reduce(s.graph(), w);
  if (opt.tsv) {
    out << s.show(r) << '\t' << w.size() << '\t' << r.size() << '\n';
  } else {
    out << s.show(r) << '\n'
        << "length " << w.size() << " -> " << r.size() << '\n';
  }
  return kOk;
}

int cmd_trajectory(Session& s, const Options& opt, std::ostream& out) {
  const CayleyGraph& g = s.graph();
  Word w = s.reader().parse(opt.word);
  Trajectory t = trajectory(g, w);
  for (std::size_t k = 0; k < t.nodes.size(); ++k) {
    const ElementIndex e = t.nodes[k];
    const std::string form = print_linear(g.element(e));
    std::optional<std::size_t> earlier;
    for (std::size_t j = 0; j < k; ++j) {
      if (t.nodes[j] == e) {
        earlier = j;
        break;
      }
    }
    if (opt.tsv) {
      out << k << '\t' << e << '\t' << form << '\n';
    } else {
      out << k << "  #" << e << "  " << form;
      if (earlier) out << "  (= node " << *earlier << ")";
      out << '\n';
    }
  }
  if (!opt.tsv) {
    out << "straight: " << (is_straight(t) ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_show(Session& s, std::ostream& out) {
  out << format_presentation(s.presentation());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Straight words and permutators of transformation semigroups",
               "strayt"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "presentation file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--aliases", opt.aliases,
                    "word alias file (default: <file>.words if present)")
        ->check(CLI::ExistingFile);
    sub->add_flag("--tsv", opt.tsv, "tab-separated output");
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-len", opt.max_len, "longest word to search");
    sub->add_option("--max-results", opt.max_results, "stop after N words");
    sub->add_flag("--length-order", opt.length_order,
                  "list by length then generator order instead of by name");
  };

  auto* order = app.add_subcommand("order", "print |S|");
  add_common(order);

  auto* straight = app.add_subcommand("straight", "enumerate straight words");
  add_common(straight);
  add_limits(straight);
  straight->add_option("--target", opt.target,
                       "word, linear form, or 'images: i1 ... in'");
  straight->add_flag("--all", opt.all, "every straight word");

  auto* perm = app.add_subcommand("perm", "permutators of a state set");
  add_common(perm);
  add_limits(perm);
  perm->add_option("--set", opt.set, "states, e.g. 3,5,8")->required();
  perm->add_flag("--words", opt.words, "straight permutator words");
  perm->add_flag("--minimal", opt.minimal, "minimal straight permutators");
  perm->add_flag("--group-order", opt.group_order,
                 "order of the induced permutation group");

  auto* fact = app.add_subcommand("factorize", "split into minimal permutators");
  add_common(fact);
  fact->add_option("--set", opt.set, "states, e.g. 3,5,8")->required();
  fact->add_option("--word", opt.word, "word to factorize")->required();

  auto* red = app.add_subcommand("reduce", "cut loops out of a word");
  add_common(red);
  red->add_option("--word", opt.word, "word to reduce")->required();

  auto* traj = app.add_subcommand("trajectory", "prefix realizations of a word");
  add_common(traj);
  traj->add_option("--word", opt.word, "word")->required();

  auto* show = app.add_subcommand("show", "print the presentation");
  add_common(show);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Session s(opt);
    if (*order) return cmd_order(s, opt, out);
    if (*straight) return cmd_straight(s, opt, out, err);
    if (*perm) return cmd_perm(s, opt, out, err);
    if (*fact) return cmd_factorize(s, opt, out);
    if (*red) return cmd_reduce(s, opt, out);
    if (*traj) return cmd_trajectory(s, opt, out);
    if (*show) return cmd_show(s, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotInSemigroup& e) {
    err << "error: " << e.what() << '\n';
    return kNotInSemigroup;
  } catch (const NotAPermutatorWord& e) {
    err << "error: " << e.what() << '\n';
    return kNotAPermutatorWord;
  } catch (const EnumerationLimit& e) {
    err << "error: " << e.what() << '\n';
    return kEnumerationLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace strayt::cli
