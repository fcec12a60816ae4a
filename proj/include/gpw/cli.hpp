#ifndef GPW_CLI_HPP
#define GPW_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpw/bass_serre.hpp"
#include "gpw/errors.hpp"
#include "gpw/growth.hpp"
#include "gpw/io.hpp"
#include "gpw/oracles.hpp"
#include "gpw/search.hpp"
#include "gpw/sharpness.hpp"
#include "gpw/support.hpp"

namespace gpw::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { Ok = 0, Failed = 1, Usage = 2, CapHit = 3 };

inline Json set_json(const Graph& graph, const VertexSet& set) { return set_names(graph, set); }

inline Json support_report_json(const Graph& graph, const SupportReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(format_word(c));
  return Json{{"supp", set_json(graph, r.supp)},
              {"cone", set_json(graph, r.cone)},
              {"finite", set_json(graph, r.finite)},
              {"stsupp", set_json(graph, r.stsupp)},
              {"components", comps},
              {"irreducible", r.irreducible},
              {"stably_irreducible", r.stably_irreducible},
              {"strongly_irreducible", r.strongly_irreducible},
              {"regular", r.regular}};
}

inline Json certificate_json(const SearchCertificate& c) {
  const auto& graph = c.element.context()->graph();
  Json trace = Json::array();
  for (auto [m, n] : c.exponent_trace) trace.push_back({m, n});
  return Json{{"element", format_word(c.element)},
              {"n", c.n()},
              {"letters", c.letters},
              {"exponent_trace", trace},
              {"achieved", set_json(graph, c.achieved)},
              {"classification", support_report_json(graph, c.classification)}};
}

inline Json bound_json(const SearchCertificate& c) {
  Json b{{"n", c.n()}, {"bound", c.bound}, {"formula", c.bound_formula}, {"within", c.n() <= c.bound}};
  if (c.bound == std::numeric_limits<std::uint64_t>::max()) b["bound_saturated"] = true;
  return b;
}

/// Plain-text rendering of a report: one `key: value` line per scalar field,
/// nested objects indented.
inline void render_text(std::ostream& out, const Json& j, int indent = 0) {
  auto scalar = [](const Json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
      }
      return s + "]";
    }
    return v.dump();
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    out << std::string(static_cast<std::size_t>(indent), ' ') << it.key() << ":";
    const Json& v = it.value();
    bool nested_array = v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
    if (v.is_object()) {
      out << "\n";
      render_text(out, v, indent + 2);
    } else if (nested_array) {
      out << "\n";
      for (const auto& e : v) {
        out << std::string(static_cast<std::size_t>(indent + 2), ' ') << "-\n";
        render_text(out, e, indent + 4);
      }
    } else {
      out << " " << scalar(v) << "\n";
    }
  }
}

namespace detail {

inline oracle::RawWord to_raw(const std::vector<Syllable>& w) {
  oracle::RawWord out;
  for (const auto& s : w) out.push_back({s.vertex, s.exponent});
  return out;
}

/// n_max for the stable-support oracle: lcm of the finite orders, at least 2.
inline std::size_t stable_power_horizon(const GroupContext& ctx) {
  std::uint64_t l = 2;
  for (const auto& g : ctx.groups())
    if (g.is_finite()) l = std::min<std::uint64_t>(std::lcm(l, g.order), 720);
  return static_cast<std::size_t>(l);
}

}  // namespace detail

struct Session {
  bool json = false;
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  bool oracle = false;
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-product workbench", "gpw"};
  app.require_subcommand(1);
  Session session;
  app.add_flag("--json", session.json, "Structured JSON output");
  app.add_option("--threads", session.threads, "Worker threads (GPW_THREADS overrides)")->check(CLI::PositiveNumber);
  app.add_option("--seed", session.seed, "Seed recorded with the report");
  app.add_flag("--oracle", session.oracle, "Cross-check against brute-force oracles")->group("");

  std::string spec_path, word_a, word_b, words_path, vertex_name, example, target_name = "strongly-irreducible";
  std::vector<std::string> vertex_names;
  Exponent exponent = 0;
  std::optional<Exponent> lo, hi;
  std::size_t n_max = 6, max_elements = EnumerationOptions{}.max_elements, param = 0;
  std::optional<double> alpha, beta;
  bool torsion_free = false, ball = false;

  std::function<int()> action;
  Json doc;
  Context ctx;

  auto spec_arg = [&](CLI::App* sub) { sub->add_option("spec", spec_path, "Group spec file")->required(); };
  auto word_arg = [&](CLI::App* sub, std::string& w, const char* name) {
    sub->add_option(name, w, "Word, e.g. \"x1^3 y2 x1^-1\"")->required();
  };
  auto words_arg = [&](CLI::App* sub) {
    sub->add_option("words", words_path, "File with one word per line")->required();
  };
  auto load = [&] { ctx = load_spec(spec_path); };
  auto word = [&](const std::string& w) { return parse_word(ctx, w); };
  auto word_set = [&] {
    auto U = parse_word_set(ctx, read_file(words_path));
    if (U.empty()) throw PreconditionFailed("word set '" + words_path + "' is empty");
    return U;
  };
  auto words_json = [&](const std::vector<GroupElement>& U) {
    Json a = Json::array();
    for (const auto& u : U) a.push_back(format_word(u));
    return a;
  };
  auto oracle_result = [&](bool agrees, const std::string& what) {
    doc["result"]["oracle"] = Json{{"checked", what}, {"agrees", agrees}};
    return agrees ? int{Ok} : int{Failed};
  };
  auto presentation = [&] { return oracle::Presentation{ctx->graph(), ctx->groups()}; };
  auto options = [&] { return EnumerationOptions{thread_budget(session.threads), max_elements}; };

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    spec_arg(sub);
    return sub;
  };

  auto* nf = add("normal-form", "Canonical reduced word");
  word_arg(nf, word_a, "word");
  nf->callback([&] {
    action = [&] {
      load();
      auto raw = parse_raw_word(ctx, word_a);
      auto g = reduce(ctx, raw);
      doc["input"] = {{"spec", spec_path}, {"word", word_a}};
      doc["result"] = {{"word", format_word(g)}, {"length", g.length()}};
      if (session.oracle) {
        auto p = presentation();
        auto eq = oracle::shuffle_equal(p, oracle::naive_reduce(p, detail::to_raw(raw)), detail::to_raw(g.syllables()));
        return oracle_result(eq.value_or(false), "shuffle_equal");
      }
      return int{Ok};
    };
  });

  auto* mul = add("mul", "Product of two words");
  word_arg(mul, word_a, "left");
  word_arg(mul, word_b, "right");
  mul->callback([&] {
    action = [&] {
      load();
      doc["input"] = {{"spec", spec_path}, {"left", word_a}, {"right", word_b}};
      doc["result"] = {{"word", format_word(word(word_a) * word(word_b))}};
      return int{Ok};
    };
  });

  auto* pw = add("pow", "Integer power of a word");
  word_arg(pw, word_a, "word");
  pw->add_option("exponent", exponent, "Exponent")->required();
  pw->callback([&] {
    action = [&] {
      load();
      doc["input"] = {{"spec", spec_path}, {"word", word_a}, {"exponent", exponent}};
      doc["result"] = {{"word", format_word(power(word(word_a), exponent))}};
      return int{Ok};
    };
  });

  auto* cr = add("cyclic-reduce", "Cyclically reduced conjugate and conjugator");
  word_arg(cr, word_a, "word");
  cr->callback([&] {
    action = [&] {
      load();
      auto [core, conj] = cyclic_reduce(word(word_a));
      doc["input"] = {{"spec", spec_path}, {"word", word_a}};
      doc["result"] = {{"core", format_word(core)}, {"conjugator", format_word(conj)}};
      return int{Ok};
    };
  });

  auto support_like = [&](const char* name, const char* help, bool stable) {
    auto* sub = add(name, help);
    word_arg(sub, word_a, "word");
    sub->callback([&, name, stable] {
      action = [&, name, stable] {
        load();
        auto g = word(word_a);
        VertexSet s = stable ? stable_support(g) : support(g);
        doc["input"] = {{"spec", spec_path}, {"word", word_a}};
        doc["result"] = {{name, set_json(ctx->graph(), s)}};
        if (session.oracle) {
          auto p = presentation();
          auto raw = detail::to_raw(g.syllables());
          VertexSet o = stable ? oracle::brute_stable_support(p, raw, detail::stable_power_horizon(*ctx))
                               : oracle::brute_support(p, raw);
          return oracle_result(o == s, stable ? "brute_stable_support" : "brute_support");
        }
        return int{Ok};
      };
    });
  };
  support_like("supp", "Essential support", false);
  support_like("stsupp", "Stable support", true);

  auto* comps = add("components", "Irreducible components");
  word_arg(comps, word_a, "word");
  comps->callback([&] {
    action = [&] {
      load();
      Json a = Json::array();
      for (const auto& c : irreducible_components(word(word_a))) a.push_back(format_word(c));
      doc["input"] = {{"spec", spec_path}, {"word", word_a}};
      doc["result"] = {{"components", a}};
      return int{Ok};
    };
  });

  auto* cls = add("classify", "Support report and classification flags");
  word_arg(cls, word_a, "word");
  cls->callback([&] {
    action = [&] {
      load();
      auto g = word(word_a);
      doc["input"] = {{"spec", spec_path}, {"word", word_a}};
      doc["result"] = support_report_json(ctx->graph(), classify(g));
      if (session.oracle) {
        auto p = presentation();
        auto raw = detail::to_raw(g.syllables());
        bool ok = oracle::brute_support(p, raw) == support(g) &&
                  oracle::brute_stable_support(p, raw, detail::stable_power_horizon(*ctx)) == stable_support(g);
        return oracle_result(ok, "brute_support, brute_stable_support");
      }
      return int{Ok};
    };
  });

  auto* ss = add("supp-set", "Support of a finite set and its aconical part");
  words_arg(ss);
  ss->callback([&] {
    action = [&] {
      load();
      auto U = word_set();
      auto s = support_of_set(U);
      doc["input"] = {{"spec", spec_path}, {"words", words_json(U)}};
      doc["result"] = {{"supp", set_json(ctx->graph(), s.supp)}, {"acon", set_json(ctx->graph(), s.acon)}};
      if (session.oracle) {
        std::vector<oracle::RawWord> raw;
        for (const auto& u : U) raw.push_back(detail::to_raw(u.syllables()));
        VertexSet o = oracle::brute_support_set(presentation(), raw, 3);
        return oracle_result(s.supp.is_subset_of(o), "brute_support_set upper bound, conjugators of length <= 3");
      }
      return int{Ok};
    };
  });

  auto* find = add("find", "Short regular or strongly irreducible element of some U^n");
  words_arg(find);
  find->add_option("--target", target_name, "regular | strongly-irreducible")
      ->check(CLI::IsMember({"regular", "strongly-irreducible"}));
  find->callback([&] {
    action = [&] {
      load();
      auto U = word_set();
      Target t = target_name == "regular" ? Target::Regular : Target::StronglyIrreducible;
      auto r = find_short(U, t);
      doc["input"] = {{"spec", spec_path}, {"words", words_json(U)}, {"target", to_string(t)}};
      doc["result"] = {{"target", to_string(t)},
                       {"feasible", r.feasibility.feasible},
                       {"reason", to_string(r.feasibility.reason)}};
      if (!r.certificate) return int{Failed};
      doc["certificate"] = certificate_json(*r.certificate);
      doc["bounds"] = bound_json(*r.certificate);
      return int{Ok};
    };
  });

  auto* fs = add("full-support", "Element of some U^n covering acon(supp U)");
  words_arg(fs);
  fs->add_flag("--torsion-free", torsion_free, "Cover all of supp(U) in a torsion-free product");
  fs->callback([&] {
    action = [&] {
      load();
      auto U = word_set();
      auto cert = torsion_free ? full_support_torsion_free(U) : full_support_element(U);
      doc["input"] = {{"spec", spec_path}, {"words", words_json(U)}, {"torsion_free", torsion_free}};
      doc["result"] = {{"element", format_word(cert.element)}, {"n", cert.n()}};
      doc["certificate"] = certificate_json(cert);
      doc["bounds"] = bound_json(cert);
      return int{Ok};
    };
  });

  auto* es = add("exponent-sum", "Exponent-sum search in a right-angled Artin group");
  words_arg(es);
  es->callback([&] {
    action = [&] {
      load();
      auto U = word_set();
      auto cert = exponent_sum_search(U);
      doc["input"] = {{"spec", spec_path}, {"words", words_json(U)}};
      doc["result"] = {{"element", format_word(cert.element)}, {"n", cert.n()}};
      doc["certificate"] = certificate_json(cert);
      doc["bounds"] = bound_json(cert);
      return int{Ok};
    };
  });

  auto* sl = add("simul-lox", "Smallest (m, n) with g^m h^n loxodromic in every listed tree");
  word_arg(sl, word_a, "gword");
  word_arg(sl, word_b, "hword");
  sl->add_option("--vertices", vertex_names, "Vertices (default: where g or h is loxodromic)")->delimiter(',');
  sl->callback([&] {
    action = [&] {
      load();
      auto g = word(word_a), h = word(word_b);
      const auto& graph = ctx->graph();
      std::vector<VertexId> V;
      if (vertex_names.empty())
        V = (graph.acon(support(g)) | graph.acon(support(h))).members();
      else
        for (const auto& n : vertex_names) V.push_back(graph.vertex(n));
      auto [m, n] = simultaneous_loxodromic(g, h, V);
      Json names = Json::array();
      for (auto v : V) names.push_back(graph.name(v));
      doc["input"] = {{"spec", spec_path}, {"g", word_a}, {"h", word_b}, {"vertices", names}};
      doc["result"] = {{"m", m}, {"n", n}, {"product", format_word(power(g, m) * power(h, n))}};
      doc["bounds"] = {{"k", V.size()}, {"M", simultaneous_loxodromic_bound(V.size())}, {"formula", "(2k)^k(2k+1)"}};
      return int{Ok};
    };
  });

  auto* tau = add("tau", "Action type and translation length in the trees T_v");
  word_arg(tau, word_a, "word");
  tau->add_option("--vertex", vertex_name, "Single vertex (default: every vertex)");
  tau->callback([&] {
    action = [&] {
      load();
      auto g = word(word_a);
      const auto& graph = ctx->graph();
      std::vector<VertexId> V;
      if (vertex_name.empty())
        for (VertexId v = 0; v < graph.size(); ++v) V.push_back(v);
      else
        V.push_back(graph.vertex(vertex_name));
      Json rows = Json::array();
      for (auto v : V) {
        auto a = tree_action(g, v);
        rows.push_back({{"vertex", graph.name(v)}, {"action", to_string(a.kind)}, {"tau", a.tau}});
      }
      doc["input"] = {{"spec", spec_path}, {"word", word_a}};
      doc["result"] = {{"trees", rows}};
      return int{Ok};
    };
  });

  auto* ex = add("exceptional", "Exponent pairs where combining supports fails");
  word_arg(ex, word_a, "gword");
  word_arg(ex, word_b, "hword");
  ex->add_option("--lo", lo, "Window start (default 4d+5)");
  ex->add_option("--hi", hi, "Window end (default start+20)");
  ex->callback([&] {
    action = [&] {
      load();
      auto g = word(word_a), h = word(word_b);
      Exponent from = lo.value_or(exceptional_window_floor(*ctx));
      Exponent to = hi.value_or(from + 20);
      auto r = exceptional_exponents(g, h, from, to);
      auto d = std::max<std::size_t>(ctx->dim(), 1);
      bool fits = line_cover_fits(r.failures, d, d, d);
      Json fails = Json::array();
      for (auto [m, n] : r.failures) fails.push_back({m, n});
      doc["input"] = {{"spec", spec_path}, {"g", word_a}, {"h", word_b}};
      doc["result"] = {{"window", {from, to}},
                       {"failures", fails},
                       {"excluded", r.excluded},
                       {"greedy_cover", {{"rows", r.cover_rows}, {"columns", r.cover_columns}, {"rays", r.cover_rays}}},
                       {"covered_by_dim_lines", fits}};
      doc["bounds"] = {{"dim", ctx->dim()}, {"max_lines_per_kind", d}};
      return fits ? int{Ok} : int{Failed};
    };
  });

  auto* gr = add("growth", "Sizes of U^n (or balls with --ball)");
  words_arg(gr);
  gr->add_option("--n", n_max, "Largest n")->check(CLI::PositiveNumber);
  gr->add_flag("--ball", ball, "Symmetrize and adjoin the identity");
  gr->add_option("--alpha", alpha, "alpha in |U^n| >= (alpha |U|)^(beta n)");
  gr->add_option("--beta", beta, "beta in |U^n| >= (alpha |U|)^(beta n)");
  gr->add_option("--max-elements", max_elements, "Per-level element budget")->check(CLI::PositiveNumber);
  gr->callback([&] {
    action = [&] {
      load();
      auto U = word_set();
      if (alpha.has_value() != beta.has_value()) throw PreconditionFailed("--alpha and --beta go together");
      auto r = ball ? ball_sizes(U, n_max, options()) : product_set_sizes(U, n_max, options());
      if (alpha) apply_inequality(r, *alpha, *beta);
      doc["input"] = {{"spec", spec_path}, {"words", words_json(U)}, {"n", n_max}, {"ball", ball}};
      Json res{{"mode", ball ? "ball" : "product"}, {"letter_count", r.letter_count}, {"sizes", r.sizes},
               {"truncated", r.truncated}};
      if (alpha) {
        res["alpha"] = *alpha;
        res["beta"] = *beta;
        res["per_n_check"] = r.per_n_check;
      }
      if (ball) res["fekete_upper"] = r.fekete_upper;
      if (!r.note.empty()) res["note"] = r.note;
      doc["result"] = res;
      int status = Ok;
      for (bool b : r.per_n_check)
        if (!b) status = Failed;
      if (session.oracle) {
        auto p = presentation();
        auto letters = ball ? ball_generators(U) : U;
        std::vector<oracle::RawWord> raw;
        for (const auto& u : distinct(letters)) raw.push_back(detail::to_raw(u.syllables()));
        bool ok = true;
        std::size_t checked = 0;
        for (std::size_t n = 1; n <= std::min<std::size_t>(r.sizes.size(), 3); ++n) {
          auto c = oracle::naive_product_set(p, raw, n);
          if (!c) break;
          ok = ok && *c == r.sizes[n - 1];
          checked = n;
        }
        if (oracle_result(ok, "naive_product_set for n <= " + std::to_string(checked)) != Ok) status = Failed;
      }
      return status;
    };
  });

  auto* ver = app.add_subcommand("verify", "Reproduce a sharpness example");
  ver->add_option("example", example, "bipartite | abelian | sharpness")
      ->required()
      ->check(CLI::IsMember({"bipartite", "abelian", "sharpness"}));
  ver->add_option("--param,--m,--N", param, "m for bipartite, N otherwise")->required();
  ver->callback([&] {
    action = [&] {
      VerifyReport r = example == "bipartite" ? verify_bipartite(param, options())
                       : example == "abelian" ? verify_abelian(param)
                                              : verify_sharpness(param, options());
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      doc["input"] = {{"example", example}, {"parameter", param}};
      doc["result"] = {{"verdict", r.pass() ? "PASS" : "FAIL"}, {"checks", checks}};
      if (r.certificate) {
        doc["certificate"] = certificate_json(*r.certificate);
        doc["bounds"] = bound_json(*r.certificate);
      }
      return r.pass() ? int{Ok} : int{Failed};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? int{Ok} : int{Usage};
  }

  int status = Ok;
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    doc["command"] = command;
    doc["input"] = Json::object();
    doc["result"] = Json::object();
    status = action();
    if (!doc.contains("bounds")) doc["bounds"] = Json::object();
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\nreproduce with: " << e.reproduction() << "\n";
    return CapHit;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return Usage;
  } catch (const TorsionPresent& e) {
    err << "torsion present: " << e.what() << "\n";
    return Usage;
  } catch (const PreconditionFailed& e) {
    err << "precondition failed: " << e.what() << "\n";
    return Usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  if (session.json) {
    doc["input"]["seed"] = session.seed;
    out << doc.dump(2) << "\n";
  } else {
    Json view = doc["result"];
    if (doc.contains("certificate")) view["certificate"] = doc["certificate"];
    if (!doc["bounds"].empty()) view["bounds"] = doc["bounds"];
    render_text(out, view);
  }
  return status;
}

}  // namespace gpw::cli

#endif  // GPW_CLI_HPP
