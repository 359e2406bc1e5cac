#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gralg {

class GroupElement;

/// A finite abelian 2-group C_{2^{n_1}} x ... x C_{2^{n_r}}.
///
/// Elements are identified with their mixed-radix index in [0, |G|): the
/// exponent of the last factor varies fastest, so in C_8 x C_2 the element
/// a^i b^j has index 2*i + j.  Generators are named a, b, c, ... in factor
/// order.
class AbelianGroup {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws std::invalid_argument if any n_i < 1 or |G| exceeds kMaxOrder.
  explicit AbelianGroup(std::vector<int> exponents);
  /// C_{2^n}.
  static AbelianGroup cyclic(int n);
  /// "c8", "c8xc2", "C4,C2", "8x2": each factor order must be a power of two.
  static AbelianGroup parse(std::string_view text);

  std::span<const int> exponents() const noexcept { return impl_->exponents; }
  int rank() const noexcept { return static_cast<int>(impl_->exponents.size()); }
  std::uint32_t order() const noexcept { return impl_->order; }
  std::uint32_t factor_order(int i) const { return 1u << impl_->exponents.at(static_cast<std::size_t>(i)); }
  /// Largest element order.
  std::uint32_t exponent() const noexcept;
  bool is_cyclic() const noexcept { return rank() == 1; }
  /// "C8xC2".
  std::string name() const;

  GroupElement identity() const;
  GroupElement generator(int i) const;
  /// Reduces each residue modulo its factor order.
  GroupElement element(std::span<const std::int64_t> exps) const;
  GroupElement element_at(std::uint32_t index) const;
  std::vector<GroupElement> elements() const;

  // Index-level arithmetic.
  std::uint32_t encode(std::span<const std::uint32_t> exps) const;
  std::vector<std::uint32_t> decode(std::uint32_t index) const;
  std::uint32_t mul_index(std::uint32_t g, std::uint32_t h) const noexcept;
  std::uint32_t inv_index(std::uint32_t g) const noexcept;
  std::uint32_t pow_index(std::uint32_t g, std::int64_t m) const noexcept;
  std::uint32_t order_of_index(std::uint32_t g) const noexcept;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) noexcept {
    return a.impl_ == b.impl_ || a.impl_->exponents == b.impl_->exponents;
  }

 private:
  struct Impl {
    std::vector<int> exponents;
    std::vector<std::uint32_t> strides;
    std::uint32_t order = 1;
  };
  std::shared_ptr<const Impl> impl_;
};

/// An element of a specific AbelianGroup.  Operations between elements of
/// different groups throw std::invalid_argument.
class GroupElement {
 public:
  GroupElement(AbelianGroup group, std::uint32_t index);

  const AbelianGroup& group() const noexcept { return group_; }
  std::uint32_t index() const noexcept { return index_; }
  std::vector<std::uint32_t> exps() const { return group_.decode(index_); }
  bool is_identity() const noexcept { return index_ == 0; }

  GroupElement inverse() const { return {group_, group_.inv_index(index_)}; }
  GroupElement pow(std::int64_t m) const { return {group_, group_.pow_index(index_, m)}; }
  /// Least m >= 1 with g^m = 1.
  std::uint32_t order() const noexcept { return group_.order_of_index(index_); }
  /// "1", "a^3", "a^2*b".
  std::string to_string() const;

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement& g, const GroupElement& h) noexcept {
    return g.index_ == h.index_ && g.group_ == h.group_;
  }
  friend bool operator<(const GroupElement& g, const GroupElement& h) noexcept {
    return g.index_ < h.index_;
  }

 private:
  AbelianGroup group_;
  std::uint32_t index_;
};

/// Subgroups are kept as index-sorted element lists.
using Subgroup = std::vector<GroupElement>;

/// G[2^i] as the kernel of g -> g^(2^i).
Subgroup torsion_subgroup(const AbelianGroup& group, int i);
/// G^{2^i} as the image of g -> g^(2^i).
Subgroup power_subgroup(const AbelianGroup& group, int i);
/// Closure of the elements of order exactly 2^i (the literal definition of
/// G[2^i]); used to confirm the kernel form.
Subgroup generated_by_order(const AbelianGroup& group, int i);
/// Closure of `generators` under the group operation (includes identity).
Subgroup generate(const AbelianGroup& group, std::span<const GroupElement> generators);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subgroup(const AbelianGroup& group, const Subgroup& s);

/// The quotient G/H presented again as a product of cyclic 2-groups,
/// together with the projection g -> gH on indices.
struct QuotientGroup {
  AbelianGroup source;
  AbelianGroup target;
  Subgroup kernel;
  std::vector<std::uint32_t> projection;  ///< source index -> target index
  std::vector<std::uint32_t> section;     ///< target index -> a source coset representative
};

/// Builds G/H.  The target decomposition is found by searching for elements
/// whose orders match the abelian invariants of G/H and whose span is the
/// whole quotient.  Throws std::invalid_argument if `h` is not a subgroup.
QuotientGroup quotient(const AbelianGroup& group, const Subgroup& h);

}  // namespace gralg
