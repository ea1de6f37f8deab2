#include "gpcalc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <ostream>

#include "gpcalc/amalgam.hpp"
#include "gpcalc/config.hpp"
#include "gpcalc/cyclic.hpp"
#include "gpcalc/errors.hpp"
#include "gpcalc/factorization.hpp"
#include "gpcalc/oracles.hpp"
#include "gpcalc/presentation.hpp"
#include "gpcalc/roots.hpp"
#include "gpcalc/witness.hpp"

namespace gpcalc {
namespace {

using nlohmann::json;

json integer_json(Integer const& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

std::string human(NormalForm const& g) {
  return g.is_identity() ? "(identity)" : to_string(g);
}

json element_json(NormalForm const& g) {
  json syllables = json::array();
  for (auto const& s : g.syllables())
    syllables.push_back({{"vertex", g.ambient()->graph().name(s.vertex)},
                         {"exponent", integer_json(s.exponent)}});
  return {{"word", to_string(g)}, {"length", g.length()}, {"syllables", syllables}};
}

json vertex_set_json(SimplicialGraph const& graph, VertexSet xs) {
  json out = json::array();
  for (auto v : xs.members()) out.push_back(graph.name(v));
  return out;
}

VertexSet parse_vertex_set(SimplicialGraph const& graph, std::string text) {
  std::replace(text.begin(), text.end(), ',', ' ');
  std::erase_if(text, [](char c) { return c == '{' || c == '}'; });
  std::istringstream in(text);
  VertexSet out;
  for (std::string name; in >> name;) out.insert(graph.id(name));
  return out;
}

json target_json(TargetElement const& x) { return json(x); }

class Runner {
 public:
  Runner(std::ostream& out, bool const& as_json) : out_(out), as_json_(as_json) {}

  void load(std::string const& path) {
    ambient_ = make_ambient(load_presentation(path));
  }
  NormalForm element(std::string const& text) const {
    return parse_element(ambient_, text);
  }
  Ambient const& ambient() const { return ambient_; }
  SimplicialGraph const& graph() const { return ambient_->graph(); }
  Budget const& budget() const { return budget_; }
  void set_budget(Budget b) { budget_ = b; }

  /// Writes either the JSON document or the human-readable text.
  void emit(json const& doc, std::string const& text) {
    if (as_json_) {
      out_ << doc.dump() << "\n";
    } else {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << "\n";
    }
  }

 private:
  std::ostream& out_;
  bool const& as_json_;
  Ambient ambient_;
  Budget budget_;
};

std::string amalgam_text(AmalgamForm const& f) {
  std::string text = "ks:";
  if (f.ks.empty()) text += " (none)";
  for (auto const& k : f.ks)
    text += std::string(" [") + to_string(k.side) + "] " + to_string(k.element) + ";";
  if (!f.ks.empty()) text.pop_back();
  return text + "\nr: " + human(f.r) + "\nstar length: " +
         std::to_string(f.star_length()) + "\n";
}

json amalgam_json(AmalgamForm const& f) {
  json ks = json::array();
  for (auto const& k : f.ks)
    ks.push_back({{"side", to_string(k.side)}, {"element", element_json(k.element)}});
  return {{"ks", ks}, {"r", element_json(f.r)}, {"star_length", f.star_length()}};
}

void register_commands(CLI::App& app, Runner& run,
                       std::vector<std::function<void()>>& actions) {
  auto presentation = std::make_shared<std::string>();
  auto word = std::make_shared<std::string>();
  auto word2 = std::make_shared<std::string>();
  auto prime = std::make_shared<std::string>();
  auto separator = std::make_shared<std::string>();
  auto radius = std::make_shared<int>(2);
  auto bound = std::make_shared<int>(1);
  auto isolation_bound = std::make_shared<int>(2);
  auto isolation_radius = std::make_shared<int>(5);
  auto qmax = std::make_shared<int>(5);
  auto kmax = std::make_shared<int>(3);

  auto add = [&](CLI::App* parent, std::string const& name, std::string const& about,
                 int words, std::function<void()> body) {
    CLI::App* cmd = parent->add_subcommand(name, about);
    cmd->add_option("presentation", *presentation, "presentation file (.gp)")
        ->required();
    if (words >= 1) cmd->add_option("word", *word, "element, e.g. \"a b^-1\"")->required();
    if (words >= 2) cmd->add_option("word2", *word2, "second element")->required();
    cmd->callback([&run, presentation, body, &actions] {
      actions.push_back([&run, presentation, body] {
        run.load(*presentation);
        body();
      });
    });
    return cmd;
  };

  add(&app, "reduce", "print the normal form", 1, [&run, word] {
    auto g = run.element(*word);
    run.emit(element_json(g), human(g));
  });

  add(&app, "equal", "decide whether two words are equal", 2, [&run, word, word2] {
    bool eq = equal(parse_word(run.ambient(), *word), parse_word(run.ambient(), *word2));
    run.emit({{"equal", eq}}, eq ? "true" : "false");
  });

  add(&app, "support", "print the support", 1, [&run, word] {
    auto g = run.element(*word);
    auto s = support(g);
    auto e = essential_support(g);
    run.emit({{"support", vertex_set_json(run.graph(), s)},
              {"essential_support", vertex_set_json(run.graph(), e)}},
             "support: " + format_vertex_set(run.graph(), s) +
                 "\nessential support: " + format_vertex_set(run.graph(), e));
  });

  add(&app, "cyclic-reduce", "conjugate to a cyclically reduced element", 1,
      [&run, word] {
        auto g = run.element(*word);
        auto r = cyclically_reduce(g);
        bool already = is_cyclically_reduced(g);
        run.emit({{"conjugator", element_json(r.conjugator)},
                  {"core", element_json(r.core)},
                  {"cyclically_reduced", already}},
                 "conjugator: " + human(r.conjugator) + "\ncore: " + human(r.core) +
                     "\ncyclically reduced: " + (already ? "true" : "false"));
      });

  add(&app, "factor", "P-S decomposition and irreducible factors", 1, [&run, word] {
    auto g = run.element(*word);
    auto ps = ps_decompose(g);
    auto fac = irreducible_factorize(g);
    json factors = json::array();
    std::string text = "s: " + human(ps.s) + "\np: " + human(ps.p) + "\nfactors:";
    if (fac.factors.empty()) text += " (none)";
    for (auto const& f : fac.factors) {
      factors.push_back({{"vertices", vertex_set_json(run.graph(), f.vertices)},
                         {"element", element_json(f.element)}});
      text += "\n  " + format_vertex_set(run.graph(), f.vertices) + ": " +
              human(f.element);
    }
    run.emit({{"s", element_json(ps.s)},
              {"p", element_json(ps.p)},
              {"s_vertices", vertex_set_json(run.graph(), ps.s_vertices)},
              {"p_vertices", vertex_set_json(run.graph(), ps.p_vertices)},
              {"factors", factors}},
             text);
  });

  {
    auto* cmd = add(&app, "split", "split as an amalgam over a retract", 0,
                    [&run, word, separator] {
                      std::optional<VertexSet> c;
                      if (!separator->empty())
                        c = parse_vertex_set(run.graph(), *separator);
                      auto s = split(run.ambient(), c);
                      auto const& gr = run.graph();
                      json doc{{"A", vertex_set_json(gr, s.a)},
                               {"B", vertex_set_json(gr, s.b)},
                               {"C", vertex_set_json(gr, s.c)}};
                      std::string text = "A: " + format_vertex_set(gr, s.a) +
                                         "\nB: " + format_vertex_set(gr, s.b) +
                                         "\nC: " + format_vertex_set(gr, s.c) + "\n";
                      if (!word->empty()) {
                        auto f = to_amalgam_form(run.element(*word), s);
                        doc["form"] = amalgam_json(f);
                        text += amalgam_text(f);
                      }
                      run.emit(doc, text);
                    });
    cmd->add_option("word", *word, "element to put in amalgam form");
    cmd->add_option("--separator", *separator, "separating set, e.g. \"v\" or \"u,w\"");
  }

  add(&app, "plog", "primitive root and primitive logarithm", 1, [&run, word] {
    auto r = plog(run.element(*word), run.budget());
    run.emit({{"root", element_json(r.root)}, {"plog", integer_json(r.plog)}},
             "root: " + human(r.root) + "\nplog: " + to_string(r.plog));
  });

  {
    auto* cmd = add(&app, "isolated", "is <g> p-isolated", 1, [&run, word, prime] {
      auto g = run.element(*word);
      Integer p(*prime);
      bool iso = is_p_isolated(g, p, run.budget());
      auto r = plog(g, run.budget());
      run.emit({{"p", integer_json(p)}, {"p_isolated", iso}, {"plog", integer_json(r.plog)}},
               std::string(iso ? "true" : "false") + "\nplog: " + to_string(r.plog));
    });
    cmd->add_option("-p", *prime, "prime")->required()->check(CLI::PositiveNumber);
  }

  add(&app, "maximal", "is <g> a maximal cyclic subgroup", 1, [&run, word] {
    auto r = plog(run.element(*word), run.budget());
    bool maximal = r.plog == 1;
    run.emit({{"maximal_cyclic", maximal}, {"plog", integer_json(r.plog)}},
             std::string(maximal ? "true" : "false") + "\nplog: " + to_string(r.plog));
  });

  add(&app, "member", "is f a power of g", 2, [&run, word, word2] {
    auto f = run.element(*word);
    auto g = run.element(*word2);
    auto k = in_cyclic(f, g, run.budget());
    if (k) {
      run.emit({{"member", true}, {"k", integer_json(*k)}}, "f = g^" + to_string(*k));
    } else {
      run.emit({{"member", false}}, "not a member");
    }
  });

  {
    auto* cmd = add(&app, "witness", "search for a finite p-quotient separating f from <g>",
                    0, [&run, word, word2, prime] {
                      auto f = run.element(*word);
                      auto g = run.element(*word2);
                      Integer p(*prime);
                      auto w = find_witness(f, g, p, run.budget());
                      if (!w) {
                        run.emit({{"found", false}, {"p", integer_json(p)}},
                                 "no witness found (the search is incomplete; this "
                                 "does not prove inseparability)");
                        return;
                      }
                      json images = json::object();
                      for (VertexId v = 0; v < w->images.size(); ++v)
                        images[run.graph().name(v)] = target_json(w->images[v]);
                      json subgroup = json::array();
                      for (auto const& x : w->subgroup_image) subgroup.push_back(target_json(x));
                      json report{{"found", true},
                                  {"p", w->p},
                                  {"target", to_string(w->target)},
                                  {"k", w->k},
                                  {"images", images},
                                  {"certificate",
                                   {{"element_image", target_json(w->element_image)},
                                    {"subgroup_image", subgroup}}}};
                      if (w->target == TargetKind::MagnusModPk) {
                        json basis = json::array();
                        auto target = w->group(*run.ambient());
                        for (auto const& m : target.basis()) {
                          json names = json::array();
                          for (auto v : m) names.push_back(run.graph().name(v));
                          basis.push_back(names);
                        }
                        report["degree"] = w->degree;
                        report["basis"] = basis;
                      }
                      run.emit(report, format_witness(*run.ambient(), *w));
                    });
    cmd->add_option("-p", *prime, "prime")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--element", *word, "f")->required();
    cmd->add_option("--generator", *word2, "g")->required();
  }

  CLI::App* dev = app.add_subcommand("dev-oracle", "brute-force reference computations");
  dev->require_subcommand(1);

  add(dev, "bfs", "minimum length over the T1/T2/T3 closure", 1, [&run, word] {
    auto n = oracle::bfs_min_length(parse_word(run.ambient(), *word),
                                    run.budget().shuffle_states);
    run.emit({{"min_length", n}}, std::to_string(n));
  });

  {
    auto* cmd = add(dev, "ball", "enumerate a ball of normal forms", 0,
                    [&run, radius, bound] {
                      auto ball = oracle::enumerate_ball(run.ambient(), {*radius, *bound});
                      json elements = json::array();
                      std::string text = "count: " + std::to_string(ball.size());
                      for (auto const& g : ball) {
                        elements.push_back(to_string(g));
                        text += "\n" + human(g);
                      }
                      run.emit({{"count", ball.size()}, {"elements", elements}}, text);
                    });
    cmd->add_option("--radius", *radius, "maximum normal-form length")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--bound", *bound, "maximum absolute exponent")
        ->check(CLI::PositiveNumber);
  }

  add(dev, "divisor-plog", "plog by divisor-prefix search on the shuffle class", 1,
      [&run, word] {
        auto d = oracle::divisor_prefix_plog(run.element(*word), run.budget().shuffle_states);
        run.emit({{"plog", integer_json(d)}}, to_string(d));
      });

  {
    auto* cmd = add(dev, "isolation", "search a ball for a failure of p-isolation", 1,
                    [&run, word, prime, isolation_radius, qmax, isolation_bound] {
                      auto g = run.element(*word);
                      Integer p(*prime);
                      IsolationOracle oracle(run.ambient(), *isolation_radius, *qmax, *isolation_bound);
                      auto cex = oracle.counterexample(g, p);
                      if (cex) {
                        run.emit({{"isolated", false},
                                  {"f", element_json(cex->f)},
                                  {"q", integer_json(cex->q)}},
                                 "false (f = " + human(cex->f) +
                                     ", q = " + to_string(cex->q) + ")");
                      } else {
                        run.emit({{"isolated", true}}, "true (no counterexample in the ball)");
                      }
                    });
    cmd->add_option("-p", *prime, "prime")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--radius", *isolation_radius, "ball radius")->check(CLI::NonNegativeNumber);
    cmd->add_option("--qmax", *qmax, "largest prime q tried")->check(CLI::PositiveNumber);
    cmd->add_option("--bound", *isolation_bound, "maximum absolute exponent")
        ->check(CLI::PositiveNumber);
  }

  {
    auto* cmd = add(dev, "quotient-scan", "all homomorphisms to Z/p^k", 2,
                    [&run, word, word2, prime, kmax] {
                      auto s = oracle::scan_cyclic_quotients(
                          run.element(*word), run.element(*word2),
                          to_int64(Integer(*prime)), *kmax);
                      run.emit({{"homomorphisms", s.homomorphisms},
                                {"separating", s.separating}},
                               "homomorphisms: " + std::to_string(s.homomorphisms) +
                                   "\nseparating: " + std::to_string(s.separating));
                    });
    cmd->add_option("-p", *prime, "prime")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--kmax", *kmax, "largest k")->check(CLI::PositiveNumber);
  }
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  bool as_json = false;
  CLI::App app{"gpcalc: normal forms, roots and p-separability in graph products"};
  app.name("gpcalc");
  app.add_flag("--json", as_json, "structured output");
  app.require_subcommand(1);

  Runner run(out, as_json);
  std::vector<std::function<void()>> actions;
  register_commands(app, run, actions);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    run.set_budget(Budget::from_environment());
    for (auto const& action : actions) action();
  } catch (SyntaxError const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (DomainError const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gpcalc
