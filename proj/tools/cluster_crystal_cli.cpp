// Command-line front end.  Every command reads and writes JSON; errors are
// reported as {"error": {"kind", "detail"}} with exit status 1 for domain
// errors and 2 for usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cluster_crystal/crystal.hpp"
#include "cluster_crystal/errors.hpp"
#include "cluster_crystal/json_io.hpp"
#include "cluster_crystal/tropical.hpp"
#include "cluster_crystal/typea_oracle.hpp"
#include "cluster_crystal/verification.hpp"

namespace cc = cluster_crystal;
using cc::Json;

namespace {

Json error_json(const std::string& kind, const std::string& detail) {
  return Json{{"error", Json{{"kind", kind}, {"detail", detail}}}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cc::UsageError("file_not_found", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw cc::UsageError("invalid_json", path + ": " + e.what());
  }
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::uint64_t default_rng_seed() {
  if (const char* env = std::getenv("CLUSTER_CRYSTAL_RNG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw cc::UsageError("invalid_rng_seed", "CLUSTER_CRYSTAL_RNG_SEED must be a non-negative integer");
    }
  }
  return 0;
}

// A seed named either by --seed FILE or by --cartan and --word.
struct SeedSource {
  std::string file;
  std::string cartan;
  std::string word;

  void attach(CLI::App* app) {
    app->add_option("--seed", file, "Seed JSON file");
    app->add_option("--cartan", cartan, "Cartan type such as A4, or a JSON file");
    app->add_option("--word", word, "Reduced word, e.g. 1,2,1");
  }

  cc::SeedPtr load() const {
    if (!file.empty()) return cc::seed_from_json(read_json_file(file));
    if (cartan.empty() || word.empty()) throw cc::UsageError("missing_seed", "give --seed or both --cartan and --word");
    return cc::make_seed(load_cartan(cartan), cc::parse_word(word));
  }

  static cc::CartanMatrix load_cartan(const std::string& text) {
    std::ifstream probe(text);
    if (probe) return cc::cartan_from_json(read_json_file(text));
    return cc::CartanMatrix::parse(text);
  }
};

std::vector<int> parse_letters(const std::string& text, const std::vector<int>& available) {
  if (text == "all") return available;
  std::vector<int> letters = cc::parse_word(text);
  for (int l : letters) {
    if (std::find(available.begin(), available.end(), l) == available.end()) {
      throw cc::DomainError("letter_absent", "letter " + std::to_string(l) + " does not occur in the word");
    }
  }
  return letters;
}

cc::Structure structure_of(const std::string& text) { return cc::parse_structure(text); }

std::string grid(const cc::IntMatrix& m) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, std::to_string(m(r, c)).size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string cell = std::to_string(m(r, c));
      if (c) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string grid(const cc::RationalMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(cc::format_rational(m(r, c)));
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[r * m.cols() + c];
      if (c) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

// Acts on a point of any chart by moving it to the fresh chart of its seed.
template <class Crystal, class P>
P act_on_chart(const P& point, int j, const cc::Rational& c, bool closed_form) {
  const cc::SeedPtr fresh = cc::fresh_seed_of(point.seed());
  const cc::Chart chart(fresh, point.seed().history());
  const Crystal crystal(fresh, closed_form);
  return chart.from_fresh(crystal.act(j, c, chart.to_fresh(point)));
}

template <class Crystal, class P>
Json functions_on_chart(const P& point, int j) {
  const cc::SeedPtr fresh = cc::fresh_seed_of(point.seed());
  const cc::Chart chart(fresh, point.seed().history());
  const Crystal crystal(fresh);
  const P at_fresh = chart.to_fresh(point);
  return Json{{"j", j},
              {"gamma", cc::format_rational(crystal.gamma(j, at_fresh))},
              {"epsilon", cc::format_rational(crystal.epsilon(j, at_fresh))},
              {"phi", cc::format_rational(crystal.phi(j, at_fresh))}};
}

Json tally_json(const cc::CrystalReport& report) {
  Json axioms = Json::array();
  for (const auto& t : report.axioms) {
    Json entry{{"axiom", t.name}, {"checked", t.checked}, {"failed", t.failed}};
    if (t.first_counterexample) entry["counterexample"] = *t.first_counterexample;
    axioms.push_back(std::move(entry));
  }
  return Json{{"passed", report.passed()}, {"points", report.points}, {"axioms", axioms}};
}

std::vector<cc::TropPoint> sample_box(const cc::SeedPtr& seed, std::int64_t radius, std::size_t max_points,
                                      std::uint64_t rng_seed) {
  double total = 1;
  for (std::size_t d = 0; d < seed->size(); ++d) total *= static_cast<double>(2 * radius + 1);
  if (total <= static_cast<double>(max_points)) return cc::box_points(seed, radius, max_points);
  return cc::random_box_points(seed, radius, max_points, rng_seed);
}

int run(int argc, char** argv) {
  CLI::App app{"Geometric crystals on cluster tori attached to reduced words"};
  app.require_subcommand(1);
  std::uint64_t rng_seed = default_rng_seed();

  // seed build
  auto* seed_cmd = app.add_subcommand("seed", "Seeds attached to reduced words");
  seed_cmd->require_subcommand(1);
  auto* seed_build = seed_cmd->add_subcommand("build", "Build the seed of a reduced word");
  std::string cartan_text, word_text, print_mode = "json";
  seed_build->add_option("--cartan", cartan_text, "Cartan type such as A4, or a JSON file")->required();
  seed_build->add_option("--word", word_text, "Reduced word, e.g. 1,2,1")->required();
  seed_build->add_option("--print", print_mode, "json, b-tilde, b or m")
      ->check(CLI::IsMember({"json", "b-tilde", "b", "m"}));

  // mutate
  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a seed, or a point together with its seed");
  SeedSource mutate_seed;
  mutate_seed.attach(mutate_cmd);
  std::string mutate_point, mutate_structure = "x";
  int mutate_k = 0;
  mutate_cmd->add_option("--k", mutate_k, "Unfrozen index to mutate at")->required();
  mutate_cmd->add_option("--point", mutate_point, "Point JSON file");
  mutate_cmd->add_option("--structure", mutate_structure, "a or x (for --point)");

  // ensemble
  auto* ensemble_cmd = app.add_subcommand("ensemble", "Ensemble map p: A -> X");
  std::string ensemble_point;
  ensemble_cmd->add_option("--point", ensemble_point, "A-point JSON file")->required();

  // act
  auto* act_cmd = app.add_subcommand("act", "Geometric crystal action e_j^c on a torus point");
  std::string act_structure, act_point, act_c = "1";
  int act_j = 0;
  bool closed_form = false, act_functions = false;
  act_cmd->add_option("--structure", act_structure, "a or x")->required();
  act_cmd->add_option("--j", act_j, "Letter")->required();
  act_cmd->add_option("--c", act_c, "Parameter c, a nonzero rational");
  act_cmd->add_option("--point", act_point, "Point JSON file")->required();
  act_cmd->add_flag("--closed-form-typeA", closed_form, "Use the type A closed form (A-side, longest word)");
  act_cmd->add_flag("--functions", act_functions, "Print gamma_j, epsilon_j and phi_j instead of acting");

  // minors
  auto* minors_cmd = app.add_subcommand("minors", "A-coordinates of a cell matrix by generalized minors");
  SeedSource minors_seed;
  minors_seed.attach(minors_cmd);
  std::string minors_matrix;
  minors_cmd->add_option("--matrix", minors_matrix, "Matrix JSON file; a random cell matrix when omitted");
  minors_cmd->add_option("--rng-seed", rng_seed, "Seed for the random cell matrix");

  // twist
  auto* twist_cmd = app.add_subcommand("twist", "Twist map of the cell G^{u,e} and its inverse");
  std::string twist_word, twist_matrix;
  bool twist_inverse = false;
  twist_cmd->add_option("--word", twist_word, "Reduced word of u")->required();
  twist_cmd->add_option("--matrix", twist_matrix, "Matrix JSON file")->required();
  twist_cmd->add_flag("--inverse", twist_inverse, "Apply the inverse twist");

  // oracle verify
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-checks against the matrix oracle");
  oracle_cmd->require_subcommand(1);
  auto* verify_cmd = oracle_cmd->add_subcommand("verify", "Run every applicable identity check");
  SeedSource oracle_seed;
  oracle_seed.attach(verify_cmd);
  int trials = 25;
  verify_cmd->add_option("--trials", trials, "Random trials per check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--rng-seed", rng_seed, "Sampling seed");

  // trop
  auto* trop_cmd = app.add_subcommand("trop", "Tropical crystals on Z^T points");
  trop_cmd->require_subcommand(1);
  auto* trop_act_cmd = trop_cmd->add_subcommand("act", "Apply e_j^n (n = -1 is f_j)");
  std::string trop_structure = "x", trop_point, letters_text = "all", graph_out;
  int trop_j = 0;
  std::int64_t trop_n = 1, box = 3;
  std::size_t max_points = 20000;
  trop_act_cmd->add_option("--structure", trop_structure, "a or x")->required();
  trop_act_cmd->add_option("--j", trop_j, "Letter")->required();
  trop_act_cmd->add_option("--n", trop_n, "Exponent");
  trop_act_cmd->add_option("--point", trop_point, "Tropical point JSON file")->required();

  auto* trop_wt_cmd = trop_cmd->add_subcommand("wt", "wt_j, epsilon_j and phi_j of a tropical point");
  trop_wt_cmd->add_option("--structure", trop_structure, "a or x")->required();
  trop_wt_cmd->add_option("--j", trop_j, "Letter")->required();
  trop_wt_cmd->add_option("--point", trop_point, "Tropical point JSON file")->required();

  auto* trop_mutate_cmd = trop_cmd->add_subcommand("mutate", "Tropical mutation of a point");
  int trop_k = 0;
  trop_mutate_cmd->add_option("--structure", trop_structure, "a or x")->required();
  trop_mutate_cmd->add_option("--k", trop_k, "Unfrozen index")->required();
  trop_mutate_cmd->add_option("--point", trop_point, "Tropical point JSON file")->required();

  auto* trop_check_cmd = trop_cmd->add_subcommand("check", "Check the crystal axioms on a box of points");
  SeedSource check_seed;
  check_seed.attach(trop_check_cmd);
  std::string check_structure = "both";
  trop_check_cmd->add_option("--structure", check_structure, "a, x or both");
  trop_check_cmd->add_option("--box", box, "Box radius")->check(CLI::NonNegativeNumber);
  trop_check_cmd->add_option("--letters", letters_text, "all, or a comma-separated list");
  trop_check_cmd->add_option("--max-points", max_points, "Sample this many random points when the box is larger");
  trop_check_cmd->add_option("--rng-seed", rng_seed, "Sampling seed");

  SeedSource graph_seed;
  const auto add_graph = [&](CLI::App* parent) {
    auto* cmd = parent->add_subcommand("graph", "Crystal graph of a box as Graphviz DOT");
    graph_seed.attach(cmd);
    cmd->add_option("--structure", trop_structure, "a or x");
    cmd->add_option("--box", box, "Box radius")->check(CLI::NonNegativeNumber);
    cmd->add_option("--letters", letters_text, "all, or a comma-separated list");
    cmd->add_option("--out", graph_out, "Output file (default stdout)");
    return cmd;
  };
  auto* trop_graph_cmd = add_graph(trop_cmd);
  auto* graph_cmd = add_graph(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print(error_json("usage", e.what()));
    return 2;
  }

  if (seed_build->parsed()) {
    const cc::Seed seed = cc::Seed::from_word(SeedSource::load_cartan(cartan_text), cc::parse_word(word_text));
    if (print_mode == "json") {
      print(cc::seed_to_json(seed));
    } else if (print_mode == "b-tilde") {
      std::cout << grid(seed.b_tilde());
    } else if (print_mode == "b") {
      std::cout << grid(seed.exchange_matrix());
    } else {
      std::cout << grid(seed.frozen_block());
    }
    return 0;
  }

  if (mutate_cmd->parsed()) {
    if (!mutate_point.empty()) {
      const Json j = read_json_file(mutate_point);
      if (structure_of(mutate_structure) == cc::Structure::A) {
        print(cc::point_to_json(cc::mutate_a_point(cc::a_point_from_json(j), mutate_k)));
      } else {
        print(cc::point_to_json(cc::mutate_x_point(cc::x_point_from_json(j), mutate_k)));
      }
    } else {
      print(cc::seed_to_json(mutate_seed.load()->mutate(mutate_k)));
    }
    return 0;
  }

  if (ensemble_cmd->parsed()) {
    print(cc::point_to_json(cc::ensemble_point(cc::a_point_from_json(read_json_file(ensemble_point)))));
    return 0;
  }

  if (act_cmd->parsed()) {
    const Json j = read_json_file(act_point);
    const cc::Rational c = cc::parse_rational(act_c);
    if (c == 0) throw cc::UsageError("invalid_argument", "c must be nonzero");
    if (structure_of(act_structure) == cc::Structure::A) {
      const cc::APoint a = cc::a_point_from_json(j);
      print(act_functions ? functions_on_chart<cc::ACrystal>(a, act_j)
                          : cc::point_to_json(act_on_chart<cc::ACrystal>(a, act_j, c, closed_form)));
    } else {
      if (closed_form) throw cc::UsageError("invalid_flag", "--closed-form-typeA applies to the A-side only");
      const cc::XPoint x = cc::x_point_from_json(j);
      print(act_functions ? functions_on_chart<cc::XCrystal>(x, act_j)
                          : cc::point_to_json(act_on_chart<cc::XCrystal>(x, act_j, c, false)));
    }
    return 0;
  }

  if (minors_cmd->parsed()) {
    const cc::SeedPtr seed = minors_seed.load();
    if (!seed->cartan().is_type_a()) throw cc::DomainError("not_type_a", "the matrix oracle needs type A");
    cc::RationalMatrix g = minors_matrix.empty()
                               ? cc::typea::random_cell_matrix(seed->rank(), seed->word(), rng_seed).matrix
                               : cc::matrix_from_json(read_json_file(minors_matrix));
    print(Json{{"matrix", cc::matrix_to_json(g)}, {"point", cc::point_to_json(cc::typea::minors_a(seed, g))}});
    return 0;
  }

  if (twist_cmd->parsed()) {
    const auto word = cc::parse_word(twist_word);
    const cc::RationalMatrix g = cc::matrix_from_json(read_json_file(twist_matrix));
    if (g.rows() != g.cols()) throw cc::UsageError("invalid_matrix", "matrix must be square");
    const auto a = cc::CartanMatrix::finite_type('A', static_cast<int>(g.rows()) - 1);
    cc::check_letters(a, word);
    if (!cc::check_reduced(a, word)) throw cc::DomainError("non_reduced_word", "the word is not reduced");
    print(cc::matrix_to_json(twist_inverse ? cc::typea::twist_inverse(word, g) : cc::typea::twist(word, g)));
    return 0;
  }

  if (verify_cmd->parsed()) {
    const auto results = cc::verify::oracle_verify(oracle_seed.load(), trials, rng_seed);
    Json checks = Json::array();
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed;
      Json entry{{"check", r.name}, {"status", r.passed ? "pass" : "fail"}, {"trials", r.trials}};
      if (!r.detail.empty()) entry["detail"] = r.detail;
      checks.push_back(std::move(entry));
    }
    print(Json{{"passed", all}, {"checks", checks}});
    return all ? 0 : 1;
  }

  if (trop_act_cmd->parsed()) {
    const cc::TropPoint b = cc::trop_point_from_json(read_json_file(trop_point));
    print(cc::point_to_json(cc::trop_act(structure_of(trop_structure), trop_j, trop_n, b)));
    return 0;
  }

  if (trop_wt_cmd->parsed()) {
    const cc::TropPoint b = cc::trop_point_from_json(read_json_file(trop_point));
    const cc::WtEpsPhi w = cc::trop_wt_eps_phi(structure_of(trop_structure), trop_j, b);
    print(Json{{"j", trop_j}, {"wt", w.wt}, {"epsilon", w.epsilon}, {"phi", w.phi}});
    return 0;
  }

  if (trop_mutate_cmd->parsed()) {
    const cc::TropPoint b = cc::trop_point_from_json(read_json_file(trop_point));
    print(cc::point_to_json(cc::trop_mutate(structure_of(trop_structure), trop_k, b)));
    return 0;
  }

  if (trop_check_cmd->parsed()) {
    const cc::SeedPtr seed = check_seed.load();
    const cc::SeedPtr fresh = cc::fresh_seed_of(*seed);
    std::vector<cc::Structure> structures;
    if (check_structure == "both") {
      structures = {cc::Structure::A, cc::Structure::X};
    } else {
      structures = {structure_of(check_structure)};
    }
    Json reports = Json::array();
    bool all = true;
    for (cc::Structure s : structures) {
      const cc::TropicalCrystal crystal(s, fresh, seed->history());
      const auto letters = parse_letters(letters_text, crystal.letters());
      const auto sample = sample_box(crystal.seed(), box, max_points, rng_seed);
      const cc::CrystalReport report = cc::crystal_check(crystal, sample, letters);
      Json entry{{"structure", cc::to_string(s)}, {"chart", seed->history()}, {"axioms", tally_json(report)}};
      all = all && report.passed();
      if (!seed->is_fresh()) {
        const cc::TropicalCrystal source(s, fresh);
        const auto fresh_sample = sample_box(fresh, box, max_points, rng_seed);
        const cc::CrystalReport glued = cc::glued_check(source, crystal, fresh_sample, letters);
        entry["glued"] = tally_json(glued);
        all = all && glued.passed();
      }
      reports.push_back(std::move(entry));
    }
    print(Json{{"passed", all}, {"reports", reports}});
    return all ? 0 : 1;
  }

  if (trop_graph_cmd->parsed() || graph_cmd->parsed()) {
    const cc::SeedPtr seed = graph_seed.load();
    const cc::TropicalCrystal crystal(structure_of(trop_structure), cc::fresh_seed_of(*seed), seed->history());
    const std::string dot = cc::emit_dot(crystal, box, parse_letters(letters_text, crystal.letters()));
    if (graph_out.empty()) {
      std::cout << dot;
    } else {
      std::ofstream out(graph_out);
      if (!out) throw cc::UsageError("file_not_writable", "cannot write '" + graph_out + "'");
      out << dot;
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cc::UsageError& e) {
    print(error_json(e.kind(), e.what()));
    return 2;
  } catch (const cc::DomainError& e) {
    print(error_json(e.kind(), e.what()));
    return 1;
  } catch (const nlohmann::json::exception& e) {
    print(error_json("invalid_json", e.what()));
    return 2;
  } catch (const std::exception& e) {
    print(error_json("internal", e.what()));
    return 1;
  }
}
