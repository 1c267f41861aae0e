// rabu: finite truncations of semi-regular right-angled buildings and the
// stabilizer actions of their universal groups.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rabu/config.hpp"
#include "rabu/errors.hpp"
#include "rabu/exports.hpp"
#include "rabu/universal.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config_path;
  std::string word;
  std::string other_word;
  std::string type;
  std::string method = "both";
  std::string dot_path;
  std::string json_path;
  std::string spec_path;
  int radius = 0;
  unsigned seed = 0;
  bool stats = false;
  bool intersect = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw rabu::InputError("cannot write to " + path);
  out << text;
}

void print_report(const rabu::Report& report, const std::string& json_path) {
  for (const rabu::Check& c : report.checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.check
              << "  expected=" << c.expected << " actual=" << c.actual << "\n";
  }
  std::cout << (report.pass() ? "all checks passed" : "some checks FAILED") << "\n";
  if (!json_path.empty()) write_file(json_path, rabu::report_json(report));
}

rabu::Word parse_reduced(const rabu::Config& config, const std::string& text) {
  const rabu::Word w = rabu::parse_word(config.diagram, text);
  if (!rabu::is_reduced(config.diagram, w)) {
    throw rabu::PreconditionError("word '" + text + "' is not reduced (canonical form: '" +
                                  rabu::format_word(config.diagram,
                                                    rabu::reduce(config.diagram, w)) +
                                  "')");
  }
  return w;
}

int cmd_reduce(const rabu::Config& config, const Options& opt) {
  const rabu::Word w = rabu::parse_word(config.diagram, opt.word);
  std::cout << rabu::format_word(config.diagram, rabu::reduce(config.diagram, w))
            << "\n";
  return kExitPass;
}

int cmd_equal(const rabu::Config& config, const Options& opt) {
  const rabu::Word a = rabu::parse_word(config.diagram, opt.word);
  const rabu::Word b = rabu::parse_word(config.diagram, opt.other_word);
  std::cout << (rabu::words_equal(config.diagram, a, b) ? "equal" : "distinct")
            << "\n";
  return kExitPass;
}

int cmd_rep(const rabu::Config& config, const Options& opt) {
  const rabu::Word w = parse_reduced(config, opt.word);
  for (const rabu::RepEntry& rep : rabu::rep_set(config.diagram, w)) {
    std::cout << rabu::format_word(config.diagram, rep.word) << "  [";
    for (std::size_t j = 0; j < rep.sigma.size(); ++j) {
      if (j) std::cout << ' ';
      std::cout << rep.sigma[j] + 1;
    }
    std::cout << "]\n";
  }
  return kExitPass;
}

int cmd_poset(const rabu::Config& config, const Options& opt) {
  const rabu::Word w = parse_reduced(config, opt.word);
  const rabu::PositionPoset poset = rabu::position_poset(config.diagram, w);
  for (auto [i, j] : poset.pairs()) {
    std::cout << i << " < " << j << "\n";
  }
  if (poset.pairs().empty()) std::cout << "(empty relation)\n";
  return kExitPass;
}

int cmd_ball(const rabu::Config& config, const Options& opt) {
  const rabu::Ball ball(config.diagram, opt.radius, config.caps);
  std::cout << "chambers: " << ball.size() << "\n";
  if (opt.stats) {
    for (int n = 0; n <= ball.radius(); ++n) {
      std::cout << "sphere " << n << ": " << ball.sphere_end(n) - ball.sphere_begin(n)
                << " chambers\n";
    }
    std::size_t edges = 0;
    for (int idx = 0; idx < ball.size(); ++idx) edges += ball.neighbors(idx).size();
    std::cout << "edges: " << edges / 2 << "\n";
  }
  if (!opt.dot_path.empty()) {
    std::ofstream out(opt.dot_path);
    if (!out) throw rabu::InputError("cannot write to " + opt.dot_path);
    rabu::write_ball_dot(out, ball);
  }
  if (!opt.json_path.empty()) write_file(opt.json_path, rabu::ball_index_json(ball));
  return kExitPass;
}

int cmd_twtree(const rabu::Config& config, const Options& opt) {
  const rabu::Ball ball(config.diagram, opt.radius, config.caps);
  const int s = config.diagram.generator_index(opt.type);
  const rabu::TreeWallTree tree = rabu::tree_wall_tree(ball, s);
  std::cout << "walls: " << tree.walls.size()
            << "  residues: " << tree.residue_gates.size()
            << "  edges: " << tree.edges.size() << "  tree: "
            << (tree.is_tree() ? "yes" : "NO") << "\n";
  if (!opt.dot_path.empty()) {
    std::ofstream out(opt.dot_path);
    if (!out) throw rabu::InputError("cannot write to " + opt.dot_path);
    rabu::write_tree_wall_tree_dot(out, config.diagram, tree);
  }
  return tree.is_tree() ? kExitPass : kExitMismatch;
}

// Shared by sphere-order and ball-order: print one line, mirror it into
// JSON when asked, never report PASS on unequal numbers.
int report_orders(const std::string& what, std::optional<rabu::Uint128> formula,
                  std::optional<rabu::Uint128> generated,
                  const std::string& json_path) {
  if (formula) std::cout << "formula=" << rabu::to_string(*formula);
  if (formula && generated) std::cout << ' ';
  if (generated) std::cout << "generated=" << rabu::to_string(*generated);
  bool match = true;
  if (formula && generated) {
    match = *formula == *generated;
    std::cout << (match ? " PASS" : " FAIL");
  }
  std::cout << "\n";
  if (!json_path.empty()) {
    rabu::Report report;
    report.checks.push_back(rabu::Check{
        what, formula ? rabu::to_string(*formula) : "(not computed)",
        generated ? rabu::to_string(*generated) : "(not computed)", match});
    write_file(json_path, rabu::report_json(report));
  }
  return match ? kExitPass : kExitMismatch;
}

int cmd_sphere_order(const rabu::Config& config, const Options& opt) {
  const rabu::Word w = parse_reduced(config, opt.word);
  std::optional<rabu::Uint128> formula, generated;
  if (opt.method != "generate") {
    formula = rabu::sphere_order_formula(config.diagram, w);
  }
  if (opt.method != "formula") {
    generated = rabu::sphere_stabilizer(config.diagram, w, config.caps).group.order();
  }
  return report_orders("sphere order of '" + opt.word + "'", formula, generated,
                       opt.json_path);
}

int cmd_ball_order(const rabu::Config& config, const Options& opt) {
  std::optional<rabu::Uint128> formula, generated;
  if (opt.method != "generate") {
    formula = rabu::order_formulas(config.diagram, opt.radius, config.caps)
                  .ball_orders[opt.radius];
  }
  if (opt.method != "formula") {
    generated = rabu::ball_stabilizer(config.diagram, opt.radius, config.caps)
                    .group.order();
  }
  return report_orders("ball order at radius " + std::to_string(opt.radius), formula,
                       generated, opt.json_path);
}

rabu::GwpSpec spec_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rabu::InputError("cannot open spec file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw rabu::InputError(std::string("spec file is not valid JSON: ") + e.what());
  }
  rabu::GwpSpec spec;
  for (const auto& name : j.at("elements")) {
    spec.element_names.push_back(name.get<std::string>());
  }
  const int n = static_cast<int>(spec.element_names.size());
  auto index_of = [&](const std::string& name) {
    for (int i = 0; i < n; ++i) {
      if (spec.element_names[i] == name) return i;
    }
    throw rabu::InputError("unknown poset element '" + name + "'");
  };
  spec.less.assign(n, std::vector<bool>(n, false));
  for (const auto& pair : j.at("less")) {
    spec.less[index_of(pair.at(0).get<std::string>())]
             [index_of(pair.at(1).get<std::string>())] = true;
  }
  // Close transitively; validate() still rejects cycles.
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (spec.less[a][k] && spec.less[k][b]) spec.less[a][b] = true;
      }
    }
  }
  spec.set_sizes.assign(n, 0);
  for (const auto& [name, size] : j.at("sets").items()) {
    spec.set_sizes[index_of(name)] = size.get<int>();
  }
  for (int i = 0; i < n; ++i) {
    const std::string& name = spec.element_names[i];
    std::vector<rabu::Permutation> gens;
    for (const auto& text : j.at("groups").at(name)) {
      gens.push_back(rabu::parse_permutation(text.get<std::string>(), spec.set_sizes[i]));
    }
    spec.factors.emplace_back(spec.set_sizes[i], std::move(gens));
  }
  spec.validate();
  return spec;
}

int cmd_gwp(const rabu::Config& config, const Options& opt) {
  rabu::GwpSpec spec;
  if (!opt.spec_path.empty()) {
    spec = spec_from_json(opt.spec_path);
  } else {
    spec = rabu::sphere_spec(config.diagram, parse_reduced(config, opt.word));
  }
  if (spec.element_names.empty()) {
    for (int i = 1; i <= spec.size(); ++i) {
      spec.element_names.push_back(std::to_string(i));
    }
  }
  std::cout << "poset:";
  bool any = false;
  for (int a = 0; a < spec.size(); ++a) {
    for (int b = 0; b < spec.size(); ++b) {
      if (spec.less[a][b]) {
        std::cout << ' ' << spec.element_names[a] << '<' << spec.element_names[b];
        any = true;
      }
    }
  }
  if (!any) std::cout << " (empty)";
  std::cout << "\n";
  const rabu::ActionGroup group = rabu::gwp_generate(spec, config.caps);
  std::cout << "degree=" << group.group.degree()
            << " order=" << rabu::to_string(group.group.order())
            << " formula=" << rabu::to_string(rabu::gwp_order_formula(spec)) << "\n";
  if (opt.intersect) {
    if (opt.word.empty()) {
      throw rabu::InputError("--intersect needs --word (the intersection model is word-based)");
    }
    const rabu::ActionGroup intersection =
        rabu::wreath_intersection(config.diagram, parse_reduced(config, opt.word),
                                  config.caps);
    const bool match = intersection.group.same_action(group.group);
    std::cout << "intersection order=" << rabu::to_string(intersection.group.order())
              << (match ? " same_action PASS" : " same_action FAIL") << "\n";
    return match ? kExitPass : kExitMismatch;
  }
  return kExitPass;
}

int cmd_check(const rabu::Config& config, const Options& opt) {
  const rabu::Report report = rabu::check_preconditions(config.diagram);
  print_report(report, opt.json_path);
  return report.pass() ? kExitPass : kExitMismatch;
}

int cmd_verify(const rabu::Config& config, const Options& opt) {
  rabu::Report report;
  const rabu::CoxeterDiagram& d = config.diagram;
  const int radius = opt.radius;

  for (int n = 0; n + 1 <= radius; ++n) {
    const rabu::Report one = rabu::verify_recursion(d, n, config.caps);
    for (rabu::Check c : one.checks) {
      c.check = "recursion n=" + std::to_string(n) + ": " + c.check;
      report.checks.push_back(std::move(c));
    }
  }

  const rabu::Ball ball(d, radius, config.caps);

  // Sphere stabilizers against both wreath models, and both order routes.
  for (const rabu::Word& w : rabu::enumerate_elements(d, radius, config.caps.ball_size)) {
    if (w.empty()) continue;
    const std::string name = rabu::format_word(d, w);
    const rabu::ActionGroup sphere = rabu::sphere_stabilizer(d, w, config.caps);
    const rabu::ActionGroup gwp = rabu::gwp_generate(rabu::sphere_spec(d, w), config.caps);
    const bool gwp_match = sphere.group.same_action(gwp.group);
    report.checks.push_back(rabu::Check{
        "sphere '" + name + "' equals its generalized wreath product", "true",
        gwp_match ? "true" : "false", gwp_match});
    const rabu::ActionGroup intersection = rabu::wreath_intersection(d, w, config.caps);
    const bool int_match = intersection.group.same_action(gwp.group);
    report.checks.push_back(rabu::Check{
        "sphere '" + name + "' equals the wreath intersection", "true",
        int_match ? "true" : "false", int_match});
    report.checks.push_back(rabu::Check{
        "sphere '" + name + "' order formula",
        rabu::to_string(rabu::sphere_order_formula(d, w)),
        rabu::to_string(sphere.group.order()),
        rabu::sphere_order_formula(d, w) == sphere.group.order()});
  }

  // Gate property over every full panel and chamber of the ball.
  {
    bool gate_ok = true;
    for (int idx = 0; idx < ball.size() && gate_ok; ++idx) {
      const rabu::Chamber& c = ball.chamber(idx);
      if (c.length() > radius - 1) break;
      for (int s = 0; s < d.rank() && gate_ok; ++s) {
        if (rabu::standard_color(d, c, s) != 1) continue;
        const rabu::Panel p = rabu::panel(d, c, s);
        for (int from = 0; from < ball.size() && gate_ok; ++from) {
          const int gate = ball.project_to_panel(p, from);
          const std::vector<int> dist = ball.distances_from(from);
          for (const rabu::Chamber& member : p.chambers) {
            const int target = ball.require_index(member);
            if (dist[target] != dist[gate] + ball.distance(gate, target)) {
              gate_ok = false;
            }
          }
        }
      }
    }
    report.checks.push_back(rabu::Check{"gate property", "true",
                                        gate_ok ? "true" : "false", gate_ok});
  }

  // Closing squares wherever the configuration appears.
  {
    bool squares_ok = true;
    std::size_t found = 0;
    for (int c3 = 0; c3 < ball.size(); ++c3) {
      const int n3 = ball.chamber(c3).length();
      for (auto [t, c1] : ball.neighbors(c3)) {
        for (auto [s, c2] : ball.neighbors(c3)) {
          if (s == t || c1 == c2) continue;
          if (ball.chamber(c1).length() != n3 - 1 ||
              ball.chamber(c2).length() != n3 - 1) {
            continue;
          }
          ++found;
          try {
            rabu::close_square_up(ball, c1, c2, c3);
          } catch (const std::exception&) {
            squares_ok = false;
          }
        }
      }
      for (auto [s, c2] : ball.neighbors(c3)) {
        if (ball.chamber(c2).length() != n3) continue;
        for (auto [t, below] : ball.neighbors(c2)) {
          if (t == s || ball.chamber(below).length() != n3 - 1) continue;
          ++found;
          try {
            rabu::close_square_level(ball, c3, c2, below);
          } catch (const std::exception&) {
            squares_ok = false;
          }
        }
      }
    }
    report.checks.push_back(rabu::Check{
        "closing squares (" + std::to_string(found) + " configurations)", "true",
        squares_ok ? "true" : "false", squares_ok});
  }

  // Concave galleries on seeded random chamber pairs.
  {
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> pick(0, ball.size() - 1);
    bool concave_ok = true;
    for (int trial = 0; trial < 1000 && concave_ok; ++trial) {
      const int a = pick(rng), b = pick(rng);
      const std::vector<int> gallery = rabu::concave_gallery(ball, a, b);
      if (static_cast<int>(gallery.size()) != ball.distance(a, b) + 1) {
        concave_ok = false;
      }
      int phase = 0;
      for (std::size_t i = 1; i < gallery.size(); ++i) {
        const int step = ball.chamber(gallery[i]).length() -
                         ball.chamber(gallery[i - 1]).length();
        if (phase == 0 && step != -1) phase = step == 0 ? 1 : 2;
        else if (phase == 1 && step == -1) concave_ok = false;
        else if (phase == 1 && step == 1) phase = 2;
        else if (phase == 2 && step != 1) concave_ok = false;
      }
    }
    report.checks.push_back(rabu::Check{"concave galleries (1000 random pairs)",
                                        "true", concave_ok ? "true" : "false",
                                        concave_ok});
  }

  // Sphere counts.
  {
    bool counts_ok = true;
    std::map<rabu::Word, int> counts;
    for (int idx = 0; idx < ball.size(); ++idx) ++counts[ball.chamber(idx).word];
    for (const auto& [word, count] : counts) {
      int expected = 1;
      for (int letter : word) expected *= d.thickness(letter) - 1;
      if (count != expected) counts_ok = false;
    }
    report.checks.push_back(rabu::Check{"sphere counts", "true",
                                        counts_ok ? "true" : "false", counts_ok});
  }

  for (int s = 0; s < d.rank(); ++s) {
    const rabu::TreeWallTree tree = rabu::tree_wall_tree(ball, s);
    report.checks.push_back(rabu::Check{
        "tree-wall tree for " + d.name(s) + " acyclic and connected", "true",
        tree.is_tree() ? "true" : "false", tree.is_tree()});
  }

  {
    const rabu::OrderFormulas formulas = rabu::order_formulas(d, radius, config.caps);
    const rabu::BallGroup bg = rabu::ball_stabilizer(ball);
    report.checks.push_back(rabu::Check{
        "ball order at radius " + std::to_string(radius),
        rabu::to_string(formulas.ball_orders[radius]),
        rabu::to_string(bg.group.order()),
        formulas.ball_orders[radius] == bg.group.order()});
  }

  print_report(report, opt.json_path);
  return report.pass() ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite right-angled buildings and universal group stabilizers"};
  app.require_subcommand(1);
  Options opt;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("-c,--config", opt.config_path, "diagram config (JSON)")
        ->required();
  };

  CLI::App* reduce = app.add_subcommand("reduce", "canonical reduced form of a word");
  add_config(reduce);
  reduce->add_option("--word", opt.word, "word, e.g. \"s t s\"")->required();

  CLI::App* equal = app.add_subcommand("equal", "do two words represent the same element");
  add_config(equal);
  equal->add_option("--word", opt.word)->required();
  equal->add_option("--other", opt.other_word)->required();

  CLI::App* rep = app.add_subcommand("rep", "all reduced rewritings of a reduced word");
  add_config(rep);
  rep->add_option("--word", opt.word)->required();

  CLI::App* poset = app.add_subcommand("poset", "position order of a reduced word");
  add_config(poset);
  poset->add_option("--word", opt.word)->required();

  CLI::App* ball = app.add_subcommand("ball", "build a ball around the base chamber");
  add_config(ball);
  ball->add_option("--radius", opt.radius)->required();
  ball->add_flag("--stats", opt.stats, "print sphere sizes and edge count");
  ball->add_option("--dot", opt.dot_path, "write the adjacency graph as DOT");
  ball->add_option("--json", opt.json_path, "write the chamber index table as JSON");

  CLI::App* twtree = app.add_subcommand("twtree", "tree-wall tree of one type");
  add_config(twtree);
  twtree->add_option("--type", opt.type, "generator name")->required();
  twtree->add_option("--radius", opt.radius)->required();
  twtree->add_option("--dot", opt.dot_path, "write the bipartite graph as DOT");

  CLI::App* sphere_order = app.add_subcommand("sphere-order", "order of a sphere stabilizer");
  add_config(sphere_order);
  sphere_order->add_option("--word", opt.word)->required();
  sphere_order->add_option("--method", opt.method)
      ->check(CLI::IsMember({"formula", "generate", "both"}));
  sphere_order->add_option("--json", opt.json_path, "write the verdict as JSON");

  CLI::App* ball_order = app.add_subcommand("ball-order", "order of a ball stabilizer");
  add_config(ball_order);
  ball_order->add_option("--radius", opt.radius)->required();
  ball_order->add_option("--method", opt.method)
      ->check(CLI::IsMember({"formula", "generate", "both"}));
  ball_order->add_option("--json", opt.json_path, "write the verdict as JSON");

  CLI::App* gwp = app.add_subcommand("gwp", "generalized wreath product of a word or spec");
  add_config(gwp);
  gwp->add_option("--word", opt.word, "reduced word; poset and factors derived");
  gwp->add_option("--spec", opt.spec_path, "explicit poset/spec JSON file");
  gwp->add_flag("--intersect", opt.intersect,
                "also build the intersection of rewriting wreath products");

  CLI::App* check = app.add_subcommand("check", "simplicity hypotheses of the diagram");
  add_config(check);
  check->add_option("--json", opt.json_path, "write the report as JSON");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_config(verify);
  verify->add_option("--radius", opt.radius)->required();
  verify->add_option("--seed", opt.seed, "seed for sampled properties (default 0)");
  verify->add_option("--json", opt.json_path, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const rabu::Config config = rabu::parse_config_file(opt.config_path);
    if (reduce->parsed()) return cmd_reduce(config, opt);
    if (equal->parsed()) return cmd_equal(config, opt);
    if (rep->parsed()) return cmd_rep(config, opt);
    if (poset->parsed()) return cmd_poset(config, opt);
    if (ball->parsed()) return cmd_ball(config, opt);
    if (twtree->parsed()) return cmd_twtree(config, opt);
    if (sphere_order->parsed()) return cmd_sphere_order(config, opt);
    if (ball_order->parsed()) return cmd_ball_order(config, opt);
    if (gwp->parsed()) return cmd_gwp(config, opt);
    if (check->parsed()) return cmd_check(config, opt);
    if (verify->parsed()) return cmd_verify(config, opt);
  } catch (const rabu::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
