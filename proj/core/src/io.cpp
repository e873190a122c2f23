#include "shelfchain/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shelfchain/errors.hpp"

namespace shelfchain {

using nlohmann::json;

namespace {

std::string id_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::ParseError, "node identifiers must be strings or integers");
}

Poset parse_poset(const json& j) {
  if (!j.is_object() || !j.contains("elements")) throw Error(ErrorKind::ParseError, "poset needs \"elements\"");
  std::vector<int> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_number_integer()) throw Error(ErrorKind::ParseError, "poset elements must be integers");
    elements.push_back(e.get<int>());
  }
  std::vector<Cover> covers;
  if (j.contains("covers")) {
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorKind::ParseError, "covers are [a, b] pairs");
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  }
  return validate_poset(std::move(elements), std::move(covers));
}

json poset_json(const Poset& p) {
  json covers = json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
  return {{"elements", p.elements()}, {"covers", covers}};
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

json form_json(const LinForm& f) {
  json out = json::object();
  for (const auto& [set, c] : f.terms()) out[set.key()] = c;
  return out;
}

json spectrum_json(const Spectrum& s) {
  json out = json::array();
  for (const auto& e : s.entries) {
    out.push_back({{"eigenvalue", form_json(e.eigenvalue)}, {"multiplicity", e.multiplicity}, {"label", e.label}});
  }
  return out;
}

json poly_json(const RationalPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(format_rational(c));
  return out;
}

json weights_json(const Weights& w) {
  json out = json::object();
  for (const auto& [set, r] : w) out[set.key()] = format_rational(r);
  return out;
}

}  // namespace

Weights parse_weights(const ShelfTree& tree, std::string_view json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "weights must be an object of E-key -> \"p/q\"");
  Weights w;
  for (const auto& [key, value] : j.items()) {
    LeafSet set = parse_leaf_set(key);
    if (!is_admissible(tree, set)) throw Error(ErrorKind::InadmissibleSet, "weight key \"" + key + "\" is not admissible");
    if (value.is_string()) {
      w[set] = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
      w[set] = Rational(value.get<long>());
    } else {
      throw Error(ErrorKind::ParseError, "weight of \"" + key + "\" must be a \"p/q\" string");
    }
  }
  return w;
}

std::string weights_to_json(const Weights& w) { return weights_json(w).dump(2); }

Instance parse_instance(std::string_view json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("tree") || !j.contains("leaf_posets")) {
    throw Error(ErrorKind::ParseError, "instance needs \"tree\" and \"leaf_posets\"");
  }
  const json& t = j.at("tree");
  if (!t.contains("root")) throw Error(ErrorKind::ParseError, "tree needs a \"root\"");
  TreeSpec spec;
  spec.root = id_text(t.at("root"));
  if (t.contains("children")) {
    for (const auto& [node, kids] : t.at("children").items()) {
      auto& list = spec.children[node];
      for (const auto& k : kids) list.push_back(id_text(k));
    }
  }
  for (const auto& [node, p] : j.at("leaf_posets").items()) spec.leaf_posets.emplace(node, parse_poset(p));
  Instance inst{load_tree(spec), std::nullopt};
  if (j.contains("weights")) inst.weights = parse_weights(inst.tree, j.at("weights").dump());
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string instance_to_json(const ShelfTree& tree, const std::optional<Weights>& weights) {
  const auto spec = tree.spec();
  json children = json::object();
  for (const auto& [node, kids] : spec.children) children[node] = kids;
  json posets = json::object();
  for (const auto& [node, p] : spec.leaf_posets) posets[node] = poset_json(p);
  json out = {{"tree", {{"root", spec.root}, {"children", children}}}, {"leaf_posets", posets}};
  if (weights) out["weights"] = weights_json(*weights);
  return out.dump(2);
}

std::string linform_to_json(const LinForm& f) { return form_json(f).dump(); }

std::string states_to_json(const ShelfTree& tree) {
  const StateSpace space(tree);
  json out = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    out.push_back({{"index", i}, {"state", format_state(tree, space.at(i))}});
  }
  return out.dump(2);
}

std::string matrix_to_json(const ShelfTree& tree, const SymbolicMatrix& m) {
  json states = json::array();
  for (const auto& s : m.states()) states.push_back(format_state(tree, s));
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(form_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"states", states}, {"entries", rows}}.dump(2);
}

std::string matrix_to_json(const ShelfTree& tree, const SymbolicMatrix& m, const RationalMatrix& values) {
  json states = json::array();
  for (const auto& s : m.states()) states.push_back(format_state(tree, s));
  json rows = json::array();
  for (std::size_t i = 0; i < values.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < values.cols(); ++j) row.push_back(format_rational(values(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"states", states}, {"entries", rows}}.dump(2);
}

std::string spectrum_to_json(const Spectrum& spectrum) { return spectrum_json(spectrum).dump(2); }

std::string report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    json entry = {{"weights", weights_json(report.weights[i])}, {"pass", c.pass}};
    if (!c.pass) {
      entry["residual"] = poly_json(c.residual);
      entry["expected"] = poly_json(c.expected);
      entry["actual"] = poly_json(c.actual);
    }
    checks.push_back(std::move(entry));
  }
  json out = {{"instance", report.instance}, {"dimension", report.dimension}, {"checks", checks},
              {"pass", report.pass()}};
  if (report.symbolic_run) out["symbolic_pass"] = report.symbolic_pass;
  return out.dump(2);
}

std::string monoid_report_to_json(const MonoidReport& report) {
  json classes = json::array();
  for (std::size_t c = 0; c < report.j.classes.size(); ++c) {
    const auto& cls = report.j.classes[c];
    json entry = {{"id", c}, {"size", cls.members.size()}, {"regular", cls.regular}};
    if (cls.regular) {
      entry["idempotent"] = cls.idempotent;
      entry["group_order"] = cls.group.size();
      entry["orthodox"] = cls.orthodox;
      entry["abelian"] = static_cast<bool>(report.abelian[c]);
      json table = json::array();
      for (const auto& chi : report.characters[c]) {
        json row = json::array();
        for (const auto& v : chi.values) row.push_back(std::to_string(v.num) + "/" + std::to_string(v.den));
        table.push_back(std::move(row));
      }
      entry["characters"] = table;
    }
    classes.push_back(std::move(entry));
  }
  json order = json::array();
  for (const auto& [lo, hi] : report.covers) order.push_back({lo, hi});
  return json{{"elements", report.size}, {"r_trivial", report.r_trivial}, {"classes", classes}, {"covers", order}}
      .dump(2);
}

std::string stationary_to_json(const ShelfTree& tree, const std::vector<State>& states, const std::vector<Rational>& pi) {
  json out = json::array();
  for (std::size_t i = 0; i < pi.size(); ++i) {
    out.push_back({{"state", format_state(tree, states[i])}, {"probability", format_rational(pi[i])}});
  }
  return out.dump(2);
}

}  // namespace shelfchain
