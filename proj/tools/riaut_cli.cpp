// riaut: command line front end for the riaut library.
//
// Exit status: 0 on success, 1 on a domain error (the error name is printed
// on stderr), 2 on a usage error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "riaut/riaut.hpp"

using json = nlohmann::ordered_json;
using namespace riaut;

namespace {

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // A result in both output formats.
  struct Out {
    std::string text;
    json        j;
  };

  struct Context {
    std::size_t              k      = 2;
    bool                     dict   = false;
    std::string              format = "text";
    std::uint64_t            seed   = 0;
    std::size_t              cap    = default_enumeration_cap;
    std::vector<std::string> args;

    // subcommand options
    std::string rel   = "J";
    std::string mode  = "riaut";
    std::string gens;
    std::size_t level = 0;

    Alphabet alphabet() const {
      return Alphabet(k);
    }

    Mode gen_mode() const {
      return dict ? Mode::dict : Mode::general;
    }
  };

  ////////////////////////////////////////////////////////////////////////////
  // Output forms
  ////////////////////////////////////////////////////////////////////////////

  json pairs_json(std::vector<std::pair<Word, Word>> const& pairs) {
    json out = json::array();
    for (auto const& [x, y] : pairs) {
      out.push_back({to_string(x), to_string(y)});
    }
    return out;
  }

  json words_json(std::vector<Word> const& words) {
    json out = json::array();
    for (auto const& w : words) {
      out.push_back(to_string(w));
    }
    return out;
  }

  Out show(bool b) {
    return {b ? "true" : "false", b};
  }

  Out show(RiAutElem const& x) {
    return {to_string(x), pairs_json(x.pairs())};
  }

  Out show(GElem const& g) {
    return show(g.rep());
  }

  Out show(MaximalPrefixCode const& P) {
    return {to_string(P), words_json(P.words())};
  }

  Out show(ExpansionElem const& x) {
    json S = json::array();
    for (auto const& h : x.S()) {
      S.push_back(show(h).j);
    }
    return {to_string(x), {{"g", show(x.g()).j}, {"S", S}}};
  }

  Out show(RiHomElem const& x) {
    return {to_string(x), pairs_json(x.pairs())};
  }

  template <typename T>
  Out lines(std::vector<T> const& xs, std::string const& empty = "") {
    Out out{"", json::array()};
    for (auto const& x : xs) {
      auto o = show(x);
      out.text += (out.text.empty() ? "" : "\n") + o.text;
      out.j.push_back(o.j);
    }
    if (xs.empty()) {
      out.text = empty;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Input
  ////////////////////////////////////////////////////////////////////////////

  std::string trim(std::string const& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }

  std::vector<RiAutElem> read_generators(std::string const& path, Alphabet const& A) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot read generator file " + path);
    }
    std::vector<RiAutElem> out;
    std::string            line;
    while (std::getline(in, line)) {
      line = trim(line.substr(0, line.find('#')));
      if (!line.empty()) {
        out.push_back(parse_table(line, A));
      }
    }
    return out;
  }

  std::vector<GElem> to_group(std::vector<RiAutElem> const& Delta) {
    std::vector<GElem> out;
    for (auto const& d : Delta) {
      out.push_back(max_extend(d));
    }
    return out;
  }

  std::vector<GenWord> parse_gen_words(std::string const& text) {
    std::vector<GenWord> out;
    std::stringstream    in(text);
    std::string          w;
    while (std::getline(in, w, ';')) {
      out.push_back(parse_gen_word(trim(w)));
    }
    if (out.empty()) {
      out.emplace_back();
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////////

  using Handler = std::function<Out(Context const&)>;

  struct Command {
    std::string description;
    std::size_t min_args;
    std::size_t max_args;
    Handler     run;
  };

  RiAutElem table(Context const& c, std::size_t i) {
    return parse_table(c.args[i], c.alphabet());
  }

  RiHomElem hom(Context const& c, std::size_t i) {
    return parse_hom(c.args[i], c.alphabet());
  }

  std::map<std::string, Command> commands() {
    std::map<std::string, Command> cmd;

    cmd["compose"] = {"X Y: the composite X o Y (Y applied first)", 2, 2,
                      [](Context const& c) { return show(compose(table(c, 0), table(c, 1))); }};
    cmd["inverse"] = {"X: the inverse of X", 1, 1,
                      [](Context const& c) { return show(inverse(table(c, 0))); }};
    cmd["maxext"]  = {"X: the maximal extension of X", 1, 1,
                     [](Context const& c) { return show(max_extend(table(c, 0))); }};
    cmd["eq"]      = {"X Y: whether X and Y have the same maximal extension", 2, 2,
                 [](Context const& c) {
                   return show(max_extend(table(c, 0)) == max_extend(table(c, 1)));
                 }};
    cmd["dictcheck"] = {"X: whether X preserves the dictionary order", 1, 1,
                        [](Context const& c) { return show(is_dict_preserving(table(c, 0))); }};

    cmd["jcmp"] = {"X Y: whether X <= Y in the order given by --rel", 2, 2,
                   [](Context const& c) {
                     auto x = table(c, 0), y = table(c, 1);
                     if (c.rel == "R") {
                       return show(r_leq(x, y));
                     }
                     if (c.rel == "L") {
                       return show(l_leq(x, y));
                     }
                     return show(j_leq(x, y));
                   }};
    cmd["jfactor"] = {"X Y: beta and alpha with X = beta o Y o alpha", 2, 2,
                      [](Context const& c) {
                        auto f = j_factor(table(c, 0), table(c, 1));
                        auto b = show(f.beta), a = show(f.alpha);
                        return Out{b.text + "\n" + a.text, {{"beta", b.j}, {"alpha", a.j}}};
                      }};

    cmd["gens"]   = {"the standard generating set", 0, 0,
                   [](Context const& c) {
                     return lines(standard_generators(c.alphabet(), c.gen_mode(), c.cap).elements);
                   }};
    cmd["factor"] = {"X: X as a composite of generators, f_m o ... o f_1", 1, 1,
                     [](Context const& c) {
                       auto fs = factor(table(c, 0), c.gen_mode());
                       Out  out{"", json::array()};
                       for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
                         auto o = show(*it);
                         out.text += (out.text.empty() ? "" : " ∘ ") + o.text;
                         out.j.push_back(o.j);
                       }
                       return out;
                     }};
    cmd["lemma45"]   = {"P: a maximally extended element with domain code P", 1, 1,
                      [](Context const& c) {
                        auto P = parse_code(c.args[0], c.alphabet());
                        return show(max_extended_with_domain(P, c.gen_mode()));
                      }};
    cmd["twoleaves"] = {"P z: a code of the same size with a second inner leaf", 2, 2,
                        [](Context const& c) {
                          auto A = c.alphabet();
                          auto r = two_inner_leaves(parse_code(c.args[0], A),
                                                    parse_word(c.args[1], A));
                          auto q = show(r.code);
                          auto kept = to_string(r.kept), extra = to_string(r.extra);
                          return Out{q.text + "\n" + kept + "\n" + extra,
                                     {{"code", q.j}, {"kept", kept}, {"extra", extra}}};
                        }};
    cmd["intersect"] = {"P Q: the code generating PA* ∩ QA*", 2, 2,
                        [](Context const& c) {
                          auto A = c.alphabet();
                          return show(intersect(parse_code(c.args[0], A), parse_code(c.args[1], A)));
                        }};

    cmd["expmul"] = {"X Y: the product XY in the suffix expansion", 2, 2,
                     [](Context const& c) {
                       auto A = c.alphabet();
                       return show(exp_multiply(parse_expansion(c.args[0], A),
                                                parse_expansion(c.args[1], A)));
                     }};
    cmd["rho"]    = {"X: the image of an expansion element in riAut", 1, 1,
                  [](Context const& c) { return show(rho(parse_expansion(c.args[0], c.alphabet()))); }};
    cmd["lift"]   = {"X: a word over embedded generators mapping to X", 1, 1,
                   [](Context const& c) {
                     auto A = c.alphabet();
                     auto Delta = c.gens.empty()
                                      ? standard_generators(A, c.gen_mode(), c.cap).elements
                                      : read_generators(c.gens, A);
                     return lines(lift(table(c, 0), lifting_set(Delta, c.gen_mode())), "^");
                   }};
    cmd["fiber"]  = {"X: every expansion element mapping to X", 1, 1,
                    [](Context const& c) {
                      return lines(rho_fiber(table(c, 0), c.gen_mode(), c.cap));
                    }};

    cmd["wp"]    = {"u v: whether two generator words are equal", 2, 2,
                 [](Context const& c) {
                   auto A     = c.alphabet();
                   auto Delta = read_generators(c.gens, A);
                   auto u = parse_gen_word(c.args[0]), v = parse_gen_word(c.args[1]);
                   if (c.mode == "group") {
                     return show(wp_group(u, v, to_group(Delta), A));
                   }
                   if (c.mode == "dict") {
                     return show(wp_dict(u, v, Delta, A));
                   }
                   if (c.mode == "expansion") {
                     return show(wp_expansion(u, v, to_group(Delta), A));
                   }
                   return show(wp_riaut(u, v, Delta, A));
                 }};
    cmd["setwp"] = {"U V: whether two ;-separated word lists have the same values", 2, 2,
                    [](Context const& c) {
                      auto A = c.alphabet();
                      return show(set_wp(parse_gen_words(c.args[0]), parse_gen_words(c.args[1]),
                                         to_group(read_generators(c.gens, A)), A));
                    }};

    cmd["rees"]     = {"[X Y]: size of the quotient at --level, or the product of X and Y",
                   0, 2,
                   [](Context const& c) {
                     ReesQuotient R(c.alphabet(), c.level, c.cap);
                     if (c.args.empty()) {
                       return Out{std::to_string(R.size()), R.size()};
                     }
                     if (c.args.size() != 2) {
                       throw UsageError("rees takes zero or two tables");
                     }
                     auto name = R.name(R.multiply(R.project(table(c, 0)), R.project(table(c, 1))));
                     return Out{name, name};
                   }};
    cmd["separate"] = {"X Y: a level whose quotient separates X and Y", 2, 2,
                       [](Context const& c) {
                         auto s = separate(table(c, 0), table(c, 1));
                         return Out{std::to_string(s.level) + "\n" + show(s.distinct).text,
                                    {{"level", s.level}, {"distinct", s.distinct}}};
                       }};
    cmd["etai"]     = {"X: the class of X under eta_i for i = --level", 1, 1,
                   [](Context const& c) {
                     auto e = eta_i_class(table(c, 0), c.level);
                     return Out{to_string(e), {{"group_part", e.group_part}, {"value", show(e.value).j}}};
                   }};

    cmd["rihom-compose"]  = {"X Y: the composite X o Y of partial homomorphisms", 2, 2,
                            [](Context const& c) { return show(hom_compose(hom(c, 0), hom(c, 1))); }};
    cmd["rihom-image"]    = {"X: the minimal elements of the image", 1, 1,
                          [](Context const& c) {
                            auto I = image_code(hom(c, 0));
                            return Out{to_string(I), words_json(I)};
                          }};
    cmd["rihom-pccheck"]  = {"X: whether X maps prefix codes to prefix codes", 1, 1,
                            [](Context const& c) { return show(is_pc_preserving(hom(c, 0))); }};
    cmd["rihom-restrict"] = {"X: a prefix code preserving restriction of X", 1, 1,
                             [](Context const& c) { return show(restrict_to_pc(hom(c, 0))); }};
    return cmd;
  }

}  // namespace

int main(int argc, char** argv) {
  Context    ctx;
  auto const cmds = commands();

  CLI::App app{"Computations with prefix code bijections and their groups", "riaut"};
  app.require_subcommand(1);
  app.add_option("-k", ctx.k, "alphabet size")->check(CLI::Range(2, 26));
  app.add_flag("--dict", ctx.dict, "restrict to dictionary order preserving elements");
  app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", ctx.seed, "random seed (reserved; no subcommand is randomized)");
  app.add_option("--cap", ctx.cap, "bound on enumerations")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));

  for (auto const& [name, c] : cmds) {
    auto* sub = app.add_subcommand(name, c.description);
    sub->fallthrough();
    // One string option per position: a vector option would read "[x,y]" as a list.
    for (std::size_t i = 0; i < c.max_args; ++i) {
      sub->add_option_function<std::string>(
          "arg" + std::to_string(i + 1), [&ctx](std::string const& s) { ctx.args.push_back(s); },
          "argument");
    }
    if (name == "jcmp") {
      sub->add_option("--rel", ctx.rel, "J, R or L")->check(CLI::IsMember({"J", "R", "L"}));
    } else if (name == "wp") {
      sub->add_option("--mode", ctx.mode, "riaut, group, dict or expansion")
          ->check(CLI::IsMember({"riaut", "group", "dict", "expansion"}));
      sub->add_option("--gens", ctx.gens, "generator file")->required();
    } else if (name == "setwp") {
      sub->add_option("--gens", ctx.gens, "generator file")->required();
    } else if (name == "lift") {
      sub->add_option("--gens", ctx.gens, "generator file");
    } else if (name == "rees" || name == "etai") {
      sub->add_option("--level", ctx.level, "level")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  auto const  name = app.get_subcommands().front()->get_name();
  auto const& c    = cmds.at(name);
  try {
    if (ctx.args.size() < c.min_args || ctx.args.size() > c.max_args) {
      throw UsageError(name + " expects " + std::to_string(c.min_args)
                       + (c.min_args == c.max_args ? "" : " to " + std::to_string(c.max_args))
                       + " arguments, found " + std::to_string(ctx.args.size()));
    }
    auto out = c.run(ctx);
    if (ctx.format == "json") {
      std::cout << out.j.dump() << '\n';
    } else {
      std::cout << out.text << '\n';
    }
  } catch (Error const& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (UsageError const& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
