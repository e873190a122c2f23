#include "shelfchain/linform.hpp"

#include "shelfchain/errors.hpp"

namespace shelfchain {

LinForm LinForm::var(const LeafSet& set, std::int64_t coeff) {
  LinForm f;
  f.add(set, coeff);
  return f;
}

std::int64_t LinForm::coeff(const LeafSet& set) const {
  auto it = terms_.find(set);
  return it == terms_.end() ? 0 : it->second;
}

void LinForm::add(const LeafSet& set, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(set, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LinForm& LinForm::operator+=(const LinForm& other) {
  for (const auto& [set, c] : other.terms_) add(set, c);
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& other) {
  for (const auto& [set, c] : other.terms_) add(set, -c);
  return *this;
}

LinForm LinForm::operator-() const {
  LinForm out;
  for (const auto& [set, c] : terms_) out.terms_.emplace(set, -c);
  return out;
}

Rational LinForm::evaluate(const Weights& w) const {
  Rational sum = 0;
  for (const auto& [set, c] : terms_) {
    auto it = w.find(set);
    if (it == w.end()) throw Error(ErrorKind::MissingWeight, "no weight for x_{" + set.key() + "}");
    sum += Rational(static_cast<long>(c)) * it->second;
  }
  return sum;
}

std::string LinForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [set, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += set.empty() ? "x_∅" : "x_{" + set.key() + "}";
  }
  return out;
}

LinForm total_form(const ShelfTree& tree) {
  LinForm f;
  for (const auto& e : admissible_sets(tree)) f.add(e, 1);
  return f;
}

}  // namespace shelfchain
