#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "shelfchain/doab.hpp"
#include "shelfchain/matrix.hpp"
#include "shelfchain/spectrum.hpp"
#include "shelfchain/tree.hpp"
#include "shelfchain/verify.hpp"

namespace shelfchain {

// All JSON crosses this interface as text.

struct Instance {
  ShelfTree tree;
  std::optional<Weights> weights;
};

/// {"tree":{"root":..,"children":{..}},"leaf_posets":{..},"weights":{..}}.
/// Throws ParseError or any tree/poset validation error.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const ShelfTree& tree, const std::optional<Weights>& weights = std::nullopt);

/// {"1,4": "1/8", ...}; keys must be admissible. Throws ParseError or InadmissibleSet.
Weights parse_weights(const ShelfTree& tree, std::string_view json_text);
std::string weights_to_json(const Weights& w);

std::string linform_to_json(const LinForm& f);
std::string states_to_json(const ShelfTree& tree);
std::string matrix_to_json(const ShelfTree& tree, const SymbolicMatrix& m);
std::string matrix_to_json(const ShelfTree& tree, const SymbolicMatrix& m, const RationalMatrix& values);
/// [{"eigenvalue":{..},"multiplicity":m,"label":".."}, ...]
std::string spectrum_to_json(const Spectrum& spectrum);
std::string report_to_json(const VerificationReport& report);
std::string monoid_report_to_json(const MonoidReport& report);
std::string stationary_to_json(const ShelfTree& tree, const std::vector<State>& states, const std::vector<Rational>& pi);

}  // namespace shelfchain
