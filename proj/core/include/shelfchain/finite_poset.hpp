#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace shelfchain {

/// A finite partial order on the indices 0..n-1, stored as a dense relation
/// matrix. Shared by upset lattices, set-partition lattices and J-class posets
/// so that all of them use one Möbius implementation.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// `leq(i, j)` must be reflexive, antisymmetric and transitive.
  FinitePoset(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const noexcept { return size_; }
  bool leq(std::size_t i, std::size_t j) const { return rel_[i * size_ + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  /// Indices ordered so that i < j in the poset implies i appears first.
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  /// mu(x, y) via mu(x,x)=1, mu(x,y) = -sum_{x<=z<y} mu(x,z). Throws NotComparable.
  std::int64_t mobius(std::size_t x, std::size_t y) const;

  /// mu(x, y) for every y (zero where x is not below y).
  std::vector<std::int64_t> mobius_from(std::size_t x) const;

  /// mu(x, y) for every x (zero where x is not below y).
  std::vector<std::int64_t> mobius_to(std::size_t y) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> rel_;
  std::vector<std::size_t> topo_;
};

}  // namespace shelfchain
