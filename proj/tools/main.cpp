// shelfchain command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "shelfchain/doab.hpp"
#include "shelfchain/errors.hpp"
#include "shelfchain/extend.hpp"
#include "shelfchain/io.hpp"
#include "shelfchain/shuffle.hpp"
#include "shelfchain/spectrum.hpp"
#include "shelfchain/verify.hpp"

namespace sc = shelfchain;
using nlohmann::json;

namespace {

struct Options {
  std::string instance;
  std::string weights;
  std::string method;
  std::string pi;
  std::string set;
  bool json = false;
  bool table = false;
  bool keep_zero = false;
};

sc::Weights resolve_weights(const sc::Instance& inst, const std::string& spec) {
  if (spec.empty()) {
    if (inst.weights) return *inst.weights;
    throw sc::Error(sc::ErrorKind::MissingWeight, "no --weights given and the instance has none");
  }
  if (spec == "uniform") return sc::uniform_weights(inst.tree);
  const auto first = spec.find_first_not_of(" \t\n");
  if (first != std::string::npos && spec[first] == '{') return sc::parse_weights(inst.tree, spec);
  std::ifstream in(spec);
  if (!in) throw sc::Error(sc::ErrorKind::ParseError, "cannot read weights file " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  return sc::parse_weights(inst.tree, buf.str());
}

bool all_forests(const sc::ShelfTree& tree) {
  for (std::size_t v = 0; v < tree.leaf_parent_count(); ++v) {
    if (!sc::is_rooted_forest(tree.node(v).poset)) return false;
  }
  return true;
}

sc::Spectrum run_method(const sc::ShelfTree& tree, std::string method, bool keep_zero) {
  if (method.empty()) method = all_forests(tree) ? "forest" : "ladder";
  if (method == "forest") return sc::forest_spectrum(tree, {keep_zero});
  if (method == "ladder") return sc::ladder_spectrum(tree);
  if (method == "doab") return sc::doab_spectrum(tree, {keep_zero, sc::IdempotentChoice::First});
  throw sc::Error(sc::ErrorKind::ParseError, "unknown method '" + method + "'");
}

void print_spectrum_table(const sc::Spectrum& s) {
  std::cout << std::left << std::setw(6) << "mult" << "  " << std::setw(44) << "eigenvalue" << "  label\n";
  for (const auto& e : s.entries) {
    std::cout << std::left << std::setw(6) << e.multiplicity << "  " << std::setw(44) << e.eigenvalue.to_string()
              << "  " << e.label << "\n";
  }
  std::cout << "total multiplicity " << s.total_multiplicity() << " of " << s.dimension << "\n";
}

int cmd_states(const sc::Instance& inst, const Options& o) {
  if (o.json) {
    std::cout << sc::states_to_json(inst.tree) << "\n";
    return 0;
  }
  const sc::StateSpace space(inst.tree);
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::cout << std::setw(5) << i << "  " << sc::format_state(inst.tree, space.at(i)) << "\n";
  }
  return 0;
}

int cmd_apply(const sc::Instance& inst, const Options& o) {
  const auto state = sc::parse_state(inst.tree, o.pi);
  const auto set = sc::parse_leaf_set(o.set);
  const auto moved = sc::apply_move(inst.tree, state, set);
  const auto text = sc::format_state(inst.tree, moved);
  if (o.json) {
    std::cout << json{{"from", o.pi}, {"set", set.key()}, {"to", text}}.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

int cmd_matrix(const sc::Instance& inst, const Options& o) {
  const auto m = sc::build_transition_matrix(inst.tree);
  if (o.weights.empty()) {
    if (o.json) {
      std::cout << sc::matrix_to_json(inst.tree, m) << "\n";
      return 0;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::cout << sc::format_state(inst.tree, m.states()[i]) << ":";
      for (const auto& [j, f] : m.row(i)) {
        std::cout << "  -> " << sc::format_state(inst.tree, m.states()[j]) << " [" << f.to_string() << "]";
      }
      std::cout << "\n";
    }
    return 0;
  }
  const auto values = sc::substitute(m, resolve_weights(inst, o.weights));
  if (o.json) {
    std::cout << sc::matrix_to_json(inst.tree, m, values) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < values.rows(); ++i) {
    for (std::size_t j = 0; j < values.cols(); ++j) std::cout << (j ? " " : "") << sc::format_rational(values(i, j));
    std::cout << "\n";
  }
  return 0;
}

int cmd_spectrum(const sc::Instance& inst, const Options& o) {
  const auto spec = run_method(inst.tree, o.method, o.keep_zero);
  if (o.json) {
    std::cout << sc::spectrum_to_json(spec) << "\n";
  } else {
    print_spectrum_table(spec);
  }
  return 0;
}

int cmd_verify(const sc::Instance& inst, const Options& o) {
  const auto spec = run_method(inst.tree, o.method, false);
  auto ws = sc::standard_weights(inst.tree);
  if (inst.weights) ws.push_back(*inst.weights);
  if (!o.weights.empty()) ws.push_back(resolve_weights(inst, o.weights));
  auto report = sc::verify_spectrum(inst.tree, spec, ws);
  report.instance = o.instance;
  if (o.json) {
    std::cout << sc::report_to_json(report) << "\n";
  } else {
    std::cout << "instance   " << o.instance << "\n";
    std::cout << "states     " << report.dimension << "\n";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      const auto& c = report.checks[i];
      std::cout << "weights #" << i + 1 << "  " << (c.pass ? "pass" : "FAIL");
      if (!c.pass) std::cout << "  residual " << c.residual.to_string();
      std::cout << "\n";
    }
    if (report.symbolic_run) std::cout << "symbolic   " << (report.symbolic_pass ? "pass" : "FAIL") << "\n";
    std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
  }
  return report.pass() ? 0 : 2;
}

int cmd_monoid(const sc::Instance& inst, const Options& o) {
  const auto m = sc::tree_monoid(inst.tree);
  const auto report = sc::monoid_report(m);
  if (o.json) {
    std::cout << sc::monoid_report_to_json(report) << "\n";
    return 0;
  }
  std::cout << "elements   " << report.size << "\n";
  std::cout << "R-trivial  " << (report.r_trivial ? "yes" : "no") << "\n";
  std::cout << "J-classes  " << report.j.classes.size() << "\n";
  for (std::size_t c = 0; c < report.j.classes.size(); ++c) {
    const auto& cls = report.j.classes[c];
    std::cout << "  J" << c << "  size " << cls.members.size();
    if (cls.regular) {
      std::cout << "  |H| " << cls.group.size() << (report.abelian[c] ? "  abelian" : "  non-abelian");
    } else {
      std::cout << "  not regular";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_stationary(const sc::Instance& inst, const Options& o) {
  const auto m = sc::build_transition_matrix(inst.tree);
  const auto values = sc::substitute(m, resolve_weights(inst, o.weights));
  const auto pi = sc::stationary_distribution(values);
  if (o.json) {
    std::cout << sc::stationary_to_json(inst.tree, m.states(), pi) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < pi.size(); ++i) {
    std::cout << sc::format_state(inst.tree, m.states()[i]) << "  " << sc::format_rational(pi[i]) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-structured promotion chains: states, matrices and exact spectra"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "instance JSON file")->required()->check(CLI::ExistingFile);
    auto* fmt = sub->add_flag("--json", o.json, "emit JSON");
    sub->add_flag("--table", o.table, "emit a table (default)")->excludes(fmt);
  };

  auto* states = app.add_subcommand("states", "list the state space with indices");
  common(states);
  auto* apply = app.add_subcommand("apply", "apply one move to a state");
  common(apply);
  apply->add_option("--pi", o.pi, "state such as \"132|4|56\"")->required();
  apply->add_option("--set", o.set, "leaf set key such as \"1,4\" (empty for the empty set)")->required();
  auto* matrix = app.add_subcommand("matrix", "symbolic or substituted transition matrix");
  common(matrix);
  matrix->add_option("--weights", o.weights, "weights file, inline JSON object or \"uniform\"");
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
  common(spectrum);
  spectrum->add_option("--method", o.method, "forest, ladder or doab")
      ->check(CLI::IsMember({"forest", "ladder", "doab"}));
  spectrum->add_flag("--keep-zero-multiplicity", o.keep_zero, "keep entries of multiplicity zero");
  auto* verify = app.add_subcommand("verify", "check a spectrum against exact characteristic polynomials");
  common(verify);
  verify->add_option("--method", o.method, "forest, ladder or doab")
      ->check(CLI::IsMember({"forest", "ladder", "doab"}));
  verify->add_option("--weights", o.weights, "extra weight vector to check");
  auto* monoid = app.add_subcommand("monoid", "report on the transformation monoid of the moves");
  common(monoid);
  auto* stationary = app.add_subcommand("stationary", "exact stationary distribution");
  common(stationary);
  stationary->add_option("--weights", o.weights, "weights file, inline JSON object or \"uniform\"");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto inst = sc::load_instance(o.instance);
    if (states->parsed()) return cmd_states(inst, o);
    if (apply->parsed()) return cmd_apply(inst, o);
    if (matrix->parsed()) return cmd_matrix(inst, o);
    if (spectrum->parsed()) return cmd_spectrum(inst, o);
    if (verify->parsed()) return cmd_verify(inst, o);
    if (monoid->parsed()) return cmd_monoid(inst, o);
    if (stationary->parsed()) return cmd_stationary(inst, o);
  } catch (const sc::Error& e) {
    std::cerr << json{{"error", std::string(sc::to_string(e.kind()))}, {"message", e.detail()}}.dump() << "\n";
    return 1;
  }
  return 1;
}
