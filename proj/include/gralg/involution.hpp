#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gralg/abelian_group.hpp"

namespace gralg {

/// An automorphism of order <= 2 of a finite abelian 2-group, given by the
/// images of the generators.  Its F-linear extension is an involution of FG.
class Involution {
 public:
  /// Validates that the images define a bijective homomorphism whose square
  /// is the identity; throws std::invalid_argument otherwise.
  Involution(AbelianGroup group, std::vector<GroupElement> images, std::string label = {});

  static Involution identity(const AbelianGroup& group);

  /// Accepts a table name (`sigma1`..`sigma4` on C_{2^n} with n > 2,
  /// `sigma1`..`sigma6` on C8xC2) or an explicit image list
  /// such as `a->a^3,b->b`.
  static Involution parse(const AbelianGroup& group, std::string_view text);

  const AbelianGroup& group() const noexcept { return group_; }
  std::span<const GroupElement> images() const noexcept { return images_; }
  /// Table name when one applies, otherwise the explicit image list.
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  GroupElement apply(const GroupElement& g) const;
  /// permutation()[i] is the index of the image of element i.
  std::span<const std::uint32_t> permutation() const noexcept { return permutation_; }
  /// Generator images as indices; the key for lexicographic ordering.
  std::vector<std::uint32_t> image_indices() const;
  /// "a->a^3,b->b".
  std::string to_string() const;

  friend bool operator==(const Involution& x, const Involution& y) noexcept {
    return x.group_ == y.group_ && x.permutation_ == y.permutation_;
  }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> images_;
  std::vector<std::uint32_t> permutation_;
  std::string label_;
};

/// All automorphisms sigma with sigma^2 = id, identity included, each once,
/// ordered lexicographically by generator-image index vectors.  Entries that
/// coincide with a named table entry carry that name as their label.
std::vector<Involution> enumerate_involutive_automorphisms(const AbelianGroup& group);

/// Brute-force count of all automorphisms of `group`.
std::uint64_t count_automorphisms(const AbelianGroup& group);

struct AutomorphismGroupShape {
  std::uint64_t order;
  std::vector<std::uint64_t> cyclic_factors;  ///< descending
};

/// Aut(C_{2^n}) ~ C_{2^{n-2}} x C_2 for n > 2, with the order cross-checked
/// against count_automorphisms() when n <= 5.  Throws std::invalid_argument
/// for non-cyclic groups or n <= 2.
AutomorphismGroupShape aut_group_order(const AbelianGroup& group);

/// Fixed points {g : sigma(g) = g}.
Subgroup symmetric_group_elements(const Involution& sigma);

/// Named involutions available for `group` ("sigma1", ...), in table order.
std::vector<Involution> named_involutions(const AbelianGroup& group);

/// The involution gH -> sigma(g)H of G/H; requires sigma(H) = H.
Involution induced_involution(const Involution& sigma, const QuotientGroup& q);

}  // namespace gralg
