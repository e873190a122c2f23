#include "shelfchain/finite_poset.hpp"

#include <algorithm>
#include <string>

#include "shelfchain/errors.hpp"

namespace shelfchain {

FinitePoset::FinitePoset(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq)
    : size_(size), rel_(size * size, 0) {
  std::vector<std::size_t> below(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (i == j || leq(i, j)) {
        rel_[i * size + j] = 1;
        ++below[j];
      }
    }
  }
  topo_.resize(size);
  for (std::size_t i = 0; i < size; ++i) topo_[i] = i;
  // a strictly larger element has a strictly larger down-set
  std::stable_sort(topo_.begin(), topo_.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
}

std::int64_t FinitePoset::mobius(std::size_t x, std::size_t y) const {
  if (!leq(x, y)) {
    throw Error(ErrorKind::NotComparable,
                "mobius(" + std::to_string(x) + ", " + std::to_string(y) + "): x is not below y");
  }
  std::vector<std::int64_t> mu(size_, 0);
  for (std::size_t z : topo_) {
    if (!leq(x, z) || !leq(z, y)) continue;
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t w : topo_) {
      if (w == z) break;
      if (leq(x, w) && leq(w, z)) sum += mu[w];
    }
    mu[z] = -sum;
  }
  return mu[y];
}

std::vector<std::int64_t> FinitePoset::mobius_from(std::size_t x) const {
  std::vector<std::int64_t> mu(size_, 0);
  std::vector<std::size_t> seen;
  for (std::size_t z : topo_) {
    if (!leq(x, z)) continue;
    if (z == x) {
      mu[z] = 1;
    } else {
      std::int64_t sum = 0;
      for (std::size_t w : seen) {
        if (leq(w, z)) sum += mu[w];
      }
      mu[z] = -sum;
    }
    seen.push_back(z);
  }
  return mu;
}

std::vector<std::int64_t> FinitePoset::mobius_to(std::size_t y) const {
  std::vector<std::int64_t> mu(size_, 0);
  std::vector<std::size_t> seen;
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    const std::size_t z = *it;
    if (!leq(z, y)) continue;
    if (z == y) {
      mu[z] = 1;
    } else {
      std::int64_t sum = 0;
      for (std::size_t w : seen) {
        if (leq(z, w)) sum += mu[w];
      }
      mu[z] = -sum;
    }
    seen.push_back(z);
  }
  return mu;
}

}  // namespace shelfchain
