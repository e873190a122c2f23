#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "shelfchain/finite_poset.hpp"

namespace shelfchain {

/// A map on {0, ..., n-1} given by its table.
using Transformation = std::vector<std::uint32_t>;

Transformation identity_transformation(std::size_t n);
/// (s * t)(i) = s(t(i)): t acts first.
Transformation compose(const Transformation& s, const Transformation& t);
bool is_idempotent(const Transformation& s);
/// Number of points with s(i) = i.
std::size_t fix_count(const Transformation& s);

/// A finite transformation monoid closed under composition.
class TransformationMonoid {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const Transformation& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Transformation>& elements() const noexcept { return elements_; }
  const std::vector<Transformation>& generators() const noexcept { return generators_; }
  /// Index of the element equal to generator g.
  std::size_t generator_element(std::size_t g) const { return generator_elements_.at(g); }
  std::size_t identity() const noexcept { return 0; }

  std::optional<std::size_t> find(const Transformation& t) const;
  /// Index of elements[i] * elements[j].
  std::size_t multiply(std::size_t i, std::size_t j) const;
  /// elements[i] * generator g and generator g * elements[i].
  std::size_t right(std::size_t i, std::size_t g) const { return right_[i * generators_.size() + g]; }
  std::size_t left(std::size_t i, std::size_t g) const { return left_[i * generators_.size() + g]; }
  /// Generator word producing the element, for diagnostics.
  const std::vector<std::uint32_t>& word(std::size_t i) const { return words_.at(i); }

  friend TransformationMonoid generate_monoid(const std::vector<Transformation>& generators,
                                              std::size_t cap);

 private:
  struct Hash {
    std::size_t operator()(const Transformation& t) const noexcept;
  };

  std::size_t degree_ = 0;
  std::vector<Transformation> elements_;
  std::vector<Transformation> generators_;
  std::vector<std::size_t> generator_elements_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_;
  std::vector<std::vector<std::uint32_t>> words_;
  std::unordered_map<Transformation, std::size_t, Hash> index_;
};

/// Closure of the generators and the identity, breadth first, generators
/// tried in order. Throws CapExceeded above `cap` elements.
TransformationMonoid generate_monoid(const std::vector<Transformation>& generators,
                                     std::size_t cap = 1000000);

/// True when distinct elements always generate distinct right ideals.
bool is_r_trivial(const TransformationMonoid& m);

/// A root of unity exp(2 pi i num / den), stored as the reduced angle fraction.
struct RootOfUnity {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::complex<double> value() const;
  bool is_real() const noexcept { return den <= 2; }
  /// +1 or -1 for real roots.
  int sign() const noexcept { return num == 0 ? 1 : -1; }
  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inverse() const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Values on the elements of a maximal subgroup, aligned with its element list.
struct Character {
  std::vector<RootOfUnity> values;
};

struct JClass {
  std::vector<std::size_t> members;
  bool regular = false;
  /// Chosen idempotent (meaningful when regular).
  std::size_t idempotent = 0;
  /// Maximal subgroup at the idempotent, identity first.
  std::vector<std::size_t> group;
  bool orthodox = false;
};

enum class IdempotentChoice { First, Last };

struct JStructure {
  std::vector<JClass> classes;
  /// order.leq(i, j): classes[i] <=_J classes[j].
  FinitePoset order;
  /// class_of[element] = class index.
  std::vector<std::size_t> class_of;

  /// Element x satisfies x >=_J classes[j].
  bool above(std::size_t x, std::size_t j) const { return order.leq(j, class_of[x]); }
};

/// J-classes (mutual two-sided divisibility), their order, regularity and
/// maximal subgroups. Classes are listed by smallest member index.
JStructure j_order(const TransformationMonoid& m, IdempotentChoice choice = IdempotentChoice::First);

/// Elements h with e h e = h that permute the image of e.
std::vector<std::size_t> maximal_subgroup(const TransformationMonoid& m, std::size_t e);

bool is_abelian(const TransformationMonoid& m, const std::vector<std::size_t>& group);

/// All characters of an abelian group (element list, identity first), the
/// trivial character first. Throws NonAbelian.
std::vector<Character> characters(const TransformationMonoid& m, const std::vector<std::size_t>& group);

}  // namespace shelfchain
