#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gralg/abelian_group.hpp"
#include "gralg/finite_field.hpp"
#include "gralg/involution.hpp"

namespace gralg {

class AlgebraElement;

/// Raised when an enumeration would exceed the configured budget.
class CapacityError : public std::runtime_error {
 public:
  /// `required_log2` is log2 of the number of candidates the request needs.
  CapacityError(int required_log2, std::uint64_t budget);
  int required_log2() const noexcept { return required_log2_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  int required_log2_;
  std::uint64_t budget_;
};

/// The group algebra FG of a finite abelian 2-group over GF(2^k).
///
/// Elements are dense coefficient vectors of field words indexed by the group
/// element index.  The object is a cheap handle onto a shared Cayley table;
/// the span-based kernels below are what enumeration loops call directly.
class GroupAlgebra {
 public:
  static constexpr std::uint32_t kMaxDimension = 1024;

  GroupAlgebra(Field field, AbelianGroup group);

  const Field& field() const noexcept { return impl_->field; }
  const AbelianGroup& group() const noexcept { return impl_->group; }
  std::uint32_t dimension() const noexcept { return impl_->group.order(); }
  /// "GF(4)[C8]".
  std::string name() const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis(const GroupElement& g) const;
  AlgebraElement from_words(std::vector<std::uint8_t> coeffs) const;
  /// Parses `1 + a^2 + (x+1)*a^5`.
  AlgebraElement parse(std::string_view text) const;
  std::string format(std::span<const std::uint8_t> coeffs) const;

  /// out = x * y (convolution).  `out` must not alias x or y.
  void multiply(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y,
                std::span<std::uint8_t> out) const noexcept;
  /// out = x^sigma.  `out` must not alias x.
  void involute(const Involution& sigma, std::span<const std::uint8_t> x,
                std::span<std::uint8_t> out) const noexcept;
  std::uint8_t augmentation(std::span<const std::uint8_t> x) const noexcept;
  /// Index of g*h.
  std::uint32_t product_index(std::uint32_t g, std::uint32_t h) const noexcept {
    return impl_->cayley[static_cast<std::size_t>(g) * dimension() + h];
  }

  friend bool operator==(const GroupAlgebra& a, const GroupAlgebra& b) noexcept {
    return a.impl_ == b.impl_ || (a.field() == b.field() && a.group() == b.group());
  }

 private:
  struct Impl {
    Field field;
    AbelianGroup group;
    std::vector<std::uint16_t> cayley;
  };
  std::shared_ptr<const Impl> impl_;
};

/// An element sum_g alpha_g g of FG.
class AlgebraElement {
 public:
  AlgebraElement(GroupAlgebra algebra, std::vector<std::uint8_t> coeffs);

  const GroupAlgebra& algebra() const noexcept { return algebra_; }
  std::span<const std::uint8_t> coeffs() const noexcept { return coeffs_; }
  std::uint8_t word(std::uint32_t index) const { return coeffs_.at(index); }
  FieldElement coeff(const GroupElement& g) const;
  void set_coeff(const GroupElement& g, const FieldElement& value);

  FieldElement augmentation() const;
  /// In FG with G a 2-group and char F = 2, x is a unit iff aug(x) != 0.
  bool is_unit() const noexcept { return algebra_.augmentation(coeffs_) != 0; }
  bool is_normalized_unit() const noexcept { return algebra_.augmentation(coeffs_) == 1; }
  bool is_one() const noexcept;
  /// Writes x = aug(x) (1 + w) with w nilpotent and returns
  /// aug(x)^-1 * prod_j (1 + w^(2^j)).  Throws std::domain_error on non-units.
  AlgebraElement inverse() const;
  AlgebraElement pow(std::uint64_t e) const;
  AlgebraElement scaled(const FieldElement& c) const;
  std::string to_string() const { return algebra_.format(coeffs_); }

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) noexcept {
    return x.coeffs_ == y.coeffs_ && x.algebra_ == y.algebra_;
  }
  /// Lexicographic on the coefficient words; the canonical set ordering.
  friend bool operator<(const AlgebraElement& x, const AlgebraElement& y) noexcept {
    return x.coeffs_ < y.coeffs_;
  }

 private:
  GroupAlgebra algebra_;
  std::vector<std::uint8_t> coeffs_;
};

/// Hash of the coefficient byte image.
struct AlgebraElementHash {
  std::size_t operator()(const AlgebraElement& x) const noexcept;
};

/// The F-linear extension of sigma.
AlgebraElement apply_involution(const Involution& sigma, const AlgebraElement& x);

/// H^ = sum of the elements of H.
AlgebraElement hat_sum(const GroupAlgebra& algebra, const Subgroup& h);

/// I(H): the ideal of FG generated by {1 + h : h in H}.
class SubgroupIdeal {
 public:
  SubgroupIdeal(GroupAlgebra algebra, Subgroup h);

  const Subgroup& subgroup() const noexcept { return subgroup_; }
  /// t (1 + h) for t in a transversal of H and h in H \ {1}.
  std::span<const AlgebraElement> basis() const noexcept { return basis_; }
  /// Rank of the basis over F.
  int dimension() const noexcept { return static_cast<int>(echelon_.size()); }
  /// log2 |I(H)| = k * dimension.
  int size_log2() const noexcept { return dimension() * algebra_.field().degree(); }
  /// Membership by reduction against the row-echelon form of the basis.
  bool contains(const AlgebraElement& x) const;

 private:
  GroupAlgebra algebra_;
  Subgroup subgroup_;
  std::vector<AlgebraElement> basis_;
  std::vector<std::pair<std::uint32_t, std::vector<std::uint8_t>>> echelon_;  // pivot, row
};

/// Psi: FG -> F(G/H), pushing coefficients along g -> gH.
class QuotientMap {
 public:
  QuotientMap(const GroupAlgebra& source, const Subgroup& h);

  const GroupAlgebra& source() const noexcept { return source_; }
  const GroupAlgebra& target() const noexcept { return target_; }
  const QuotientGroup& groups() const noexcept { return groups_; }

  AlgebraElement operator()(const AlgebraElement& x) const;
  void apply(std::span<const std::uint8_t> x, std::span<std::uint8_t> out) const noexcept;

 private:
  GroupAlgebra source_;
  QuotientGroup groups_;
  GroupAlgebra target_;
};

/// log2 |V(FG)| = k (|G| - 1).
int normalized_unit_count_log2(const GroupAlgebra& algebra) noexcept;
/// |V(FG)|; throws CapacityError if it exceeds `budget`.
std::uint64_t require_enumerable(const GroupAlgebra& algebra, std::uint64_t budget);

/// Walks V(FG) by ordinal.  Ordinal r lists the free coefficients at indices
/// 1..|G|-1 as base-q digits with index |G|-1 least significant; the identity
/// coefficient is then forced so that the augmentation is 1.
class NormalizedUnitCursor {
 public:
  NormalizedUnitCursor(const GroupAlgebra& algebra, std::uint64_t ordinal);

  std::span<const std::uint8_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t ordinal() const noexcept { return ordinal_; }
  void advance() noexcept;

 private:
  std::uint32_t q_mask_;
  std::vector<std::uint8_t> coeffs_;
  std::uint64_t ordinal_;
};

/// Calls fn(coeffs) for ordinals in [begin, end).
template <typename Fn>
void for_each_normalized_unit(const GroupAlgebra& algebra, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  NormalizedUnitCursor cursor(algebra, begin);
  for (std::uint64_t r = begin; r < end; ++r, cursor.advance()) fn(cursor.coeffs());
}

/// V(FG) as a list, in ordinal order.
std::vector<AlgebraElement> enumerate_normalized_units(const GroupAlgebra& algebra, std::uint64_t budget);

}  // namespace gralg
