// Command-line surface for ornamentation lattices: validation, enumeration,
// Pop dynamics, image membership, counting, and the self-verification suite.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "orna/image.hpp"
#include "orna/io.hpp"
#include "orna/lattice.hpp"
#include "orna/ornamentation.hpp"
#include "orna/rank_orbit.hpp"
#include "orna/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNegative = 3;

void print_ornamentation(const orna::Ornamentation& d) {
  std::cout << orna::ornamentation_to_json(d).dump() << '\n';
}

int cmd_tree_validate(const std::string& text) {
  orna::RootedPlaneTree::parse(text);  // throws ParseError on bad input
  std::cout << "ok\n";
  return kExitOk;
}

int cmd_enumerate(const std::string& text, const std::string& dot_path, bool count_only) {
  orna::LatticeGraph lattice = orna::enumerate_lattice(orna::make_tree(text));
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw orna::DomainError("cannot open " + dot_path);
    orna::write_dot(lattice, out);
  }
  if (count_only) {
    std::cout << lattice.elements.size() << '\n';
  } else {
    for (const orna::Ornamentation& d : lattice.elements) print_ornamentation(d);
  }
  return kExitOk;
}

int cmd_pop(const std::string& input, int times) {
  orna::Ornamentation d = orna::read_ornamentation_file(input);
  for (int i = 0; i < times; ++i) d = orna::pop(d);
  print_ornamentation(d);
  return kExitOk;
}

int cmd_orbit(const std::string& input) {
  auto orbit = orna::forward_orbit(orna::read_ornamentation_file(input));
  for (const orna::Ornamentation& d : orbit) print_ornamentation(d);
  std::cout << orbit.size() << '\n';
  return kExitOk;
}

int cmd_max_orbit(const std::string& text, bool oracle) {
  orna::TreePtr tree = orna::make_tree(text);
  int formula = orna::max_orbit_size(*tree);
  std::cout << formula << '\n';
  if (oracle) {
    int brute = orna::brute_max_orbit(orna::enumerate_lattice(tree));
    std::cout << brute << '\n';
    if (formula != brute) {
      throw orna::IntegrityError("formula and brute maximum orbit sizes disagree");
    }
  }
  return kExitOk;
}

int cmd_dagger(const std::string& text) {
  orna::Ornamentation dagger = orna::build_delta_dagger(orna::make_tree(text));
  print_ornamentation(dagger);
  std::cout << orna::forward_orbit(dagger).size() << '\n';
  return kExitOk;
}

int cmd_image(const std::string& input, int k, bool want_preimage) {
  if (k < 0) throw orna::DomainError("k must be nonnegative");
  orna::Ornamentation d = orna::read_ornamentation_file(input);

  if (k == 1) {
    if (auto hug = orna::find_hug(d)) {
      std::cerr << hug->hugger.to_string() << " hugs v" << hug->hugged << '\n';
      return kExitNegative;
    }
    std::cout << "member\n";
    if (want_preimage) print_ornamentation(orna::pop_preimage(d));
    return kExitOk;
  }

  if (d.tree().is_chain()) {
    orna::GSequence g = orna::to_g_sequence(d);
    orna::PopkReport report = orna::popk_tamari_report(g, k);
    if (!report.pass) {
      for (const auto& f : report.failures) {
        std::cerr << orna::to_string(f.condition) << " fails at node v" << f.witness[0]
                  << '\n';
      }
      return kExitNegative;
    }
    std::cout << "member\n";
    if (want_preimage && k >= 1) {
      orna::GSequence ext = orna::tamari_popk_preimage(g, k);
      print_ornamentation(orna::from_g_sequence(d.tree_ptr(), ext));
    }
    return kExitOk;
  }

  // general tree, k != 1: only the necessary conditions are decidable
  orna::PopkReport report = orna::popk_necessary(d, k);
  if (!report.pass) {
    for (const auto& f : report.failures) {
      std::cerr << orna::to_string(f.condition) << " fails (nodes";
      for (orna::NodeId v : f.witness) std::cerr << " v" << v;
      std::cerr << ")\n";
    }
    return kExitNegative;
  }
  std::cout << "necessary conditions pass (membership not decided)\n";
  return kExitOk;
}

int cmd_count(int n, int k, const std::string& method, bool series) {
  if (n < 0 || k < 0) throw orna::DomainError("chain length and k must be nonnegative");
  auto one = [&](int m) -> orna::BigInt {
    if (method == "recurrence") return orna::count_popk_images(m, k);
    if (method == "gf") return orna::gf_coefficients(k, m)[m];
    if (method == "brute") {
      if (m > 10) throw orna::ResourceError("brute counting capped at chains of 10 nodes");
      if (m == 0) return 1;
      std::string text(m, '(');
      text.append(m, ')');
      auto lattice = orna::enumerate_lattice(orna::make_tree(text));
      return orna::brute_popk_image(lattice, k).size();
    }
    throw orna::DomainError("unknown method: " + method);
  };
  if (series) {
    for (int m = 0; m <= n; ++m) std::cout << one(m) << '\n';
  } else {
    std::cout << one(n) << '\n';
  }
  return kExitOk;
}

int cmd_verify(int max_nodes, const std::string& suite) {
  std::vector<orna::verify::SuiteResult> results;
  if (suite.empty()) {
    results = orna::verify::run_all_suites(max_nodes);
  } else {
    results.push_back(orna::verify::run_suite(suite, max_nodes));
  }
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.summary << '\n';
    if (!r.passed) {
      std::cout << "  " << r.detail << '\n';
      all_ok = false;
    }
  }
  return all_ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ornamentation lattices and their pop-stack dynamics"};
  app.require_subcommand(1);

  std::string tree_text, input_path, dot_path, suite, method = "recurrence";
  int times = 1, k = 1, chain_n = 0, max_nodes = 0;
  bool count_only = false, oracle = false, want_preimage = false, series = false;

  auto* tree_cmd = app.add_subcommand("tree", "plane-tree utilities");
  auto* validate = tree_cmd->add_subcommand("validate", "parse a parenthesis string");
  validate->add_option("paren", tree_text, "tree as a parenthesis string")->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate the ornamentation lattice");
  enumerate->add_option("--tree", tree_text)->required();
  enumerate->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
  enumerate->add_flag("--count-only", count_only);

  auto* pop_cmd = app.add_subcommand("pop", "apply Pop to an ornamentation");
  pop_cmd->add_option("--input", input_path, "ornamentation JSON file")->required();
  pop_cmd->add_option("--times", times)->check(CLI::NonNegativeNumber);

  auto* orbit_cmd = app.add_subcommand("orbit", "forward orbit under Pop");
  orbit_cmd->add_option("--input", input_path)->required();

  auto* max_orbit = app.add_subcommand("max-orbit", "maximum forward-orbit size");
  max_orbit->add_option("--tree", tree_text)->required();
  max_orbit->add_flag("--oracle", oracle, "also report the brute-force value");

  auto* dagger = app.add_subcommand("dagger", "extremal ornamentation and its orbit size");
  dagger->add_option("--tree", tree_text)->required();

  auto* image = app.add_subcommand("image", "Pop^k image membership");
  image->add_option("--input", input_path)->required();
  image->add_option("--k", k)->check(CLI::NonNegativeNumber);
  image->add_flag("--preimage", want_preimage, "also emit a preimage");

  auto* count = app.add_subcommand("count", "|Pop^k image| on Tamari lattices");
  count->add_option("--chain", chain_n)->required()->check(CLI::NonNegativeNumber);
  count->add_option("--k", k)->check(CLI::NonNegativeNumber);
  count->add_option("--method", method)->check(CLI::IsMember({"recurrence", "gf", "brute"}));
  count->add_flag("--series", series, "print coefficients 0..N, one per line");

  auto* verify = app.add_subcommand("verify", "run the self-verification suites");
  verify->add_option("--max-nodes", max_nodes)->check(CLI::NonNegativeNumber);
  verify->add_option("--suite", suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*validate) return cmd_tree_validate(tree_text);
    if (*enumerate) return cmd_enumerate(tree_text, dot_path, count_only);
    if (*pop_cmd) return cmd_pop(input_path, times);
    if (*orbit_cmd) return cmd_orbit(input_path);
    if (*max_orbit) return cmd_max_orbit(tree_text, oracle);
    if (*dagger) return cmd_dagger(tree_text);
    if (*image) return cmd_image(input_path, k, want_preimage);
    if (*count) return cmd_count(chain_n, k, method, series);
    if (*verify) return cmd_verify(max_nodes, suite);
    std::cerr << "no subcommand\n";
    return kExitBadInput;
  } catch (const orna::IntegrityError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const orna::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const orna::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const orna::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
