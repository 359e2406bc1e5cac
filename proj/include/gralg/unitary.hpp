#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gralg/group_algebra.hpp"
#include "gralg/involution.hpp"

namespace gralg {

enum class Method { Automatic, Enumeration, ImageCount, Formula };

std::string_view to_string(Method m) noexcept;
/// "auto", "enumeration", "image-count", "formula".
Method parse_method(std::string_view text);

struct EnumerationOptions {
  /// Maximum number of normalized units a sweep may visit.
  std::uint64_t budget = std::uint64_t{1} << 24;
  /// 0 means worker_count().
  unsigned workers = 0;
};

/// Order, exponent and abelian invariants of a computed unit subgroup.
/// Exponent and invariants are absent when only the order is known.
struct SubgroupReport {
  std::string group;
  std::string field;
  std::string sigma;
  int order_log2 = 0;
  std::optional<std::uint64_t> exponent;
  std::optional<std::vector<std::uint64_t>> invariants;  ///< cyclic orders, descending
  Method method = Method::Enumeration;
  double elapsed_ms = 0.0;

  std::uint64_t order() const;  ///< throws std::overflow_error above 2^63
};

/// V_sigma(FG) = {u in V(FG) : u u^sigma = 1}, sorted ascending.
struct UnitarySubgroup {
  Involution sigma;
  std::vector<AlgebraElement> elements;

  bool contains(const AlgebraElement& x) const;
};

struct UnitaryComputation {
  std::optional<UnitarySubgroup> subgroup;  ///< absent for Method::ImageCount
  SubgroupReport report;
};

/// u^sigma = u^{-1}, tested as u u^sigma = 1.  Throws std::invalid_argument
/// unless u is a normalized unit.
bool is_unitary(const AlgebraElement& u, const Involution& sigma);

/// Enumeration collects the whole subgroup; image-count returns
/// |V(FG)| / |{x x^sigma}| only.  Automatic means enumeration.
UnitaryComputation compute_unitary_subgroup(const GroupAlgebra& algebra, const Involution& sigma,
                                            Method method = Method::Automatic,
                                            const EnumerationOptions& options = {});

/// S_sigma = {x x^sigma : x in V(FG)}, the image of phi(x) = x x^sigma.
struct StarImage {
  std::vector<AlgebraElement> elements;  ///< sorted
  std::uint64_t order() const noexcept { return elements.size(); }
};
StarImage compute_star_image(const GroupAlgebra& algebra, const Involution& sigma,
                             const EnumerationOptions& options = {});

/// x x^{sigma4} on F C_{2^n}, n > 2, evaluated coefficient-wise from the
/// three-sum expression (squares of paired even and odd coefficients, plus the
/// mirrored odd cross terms).  Throws std::invalid_argument for non-cyclic
/// groups or n <= 2.
AlgebraElement sigma4_product_closed_form(const AlgebraElement& x);

/// For y = x x^{sigma4}: the odd-position coefficients of y sum to zero and
/// coeff(a^l) = coeff(a^{l + 2^{n-1}}) for every odd l.
bool check_corollary1(const AlgebraElement& x);

/// The element sigma3 of the table on C_{2^n}, a -> a^{2^{n-1}-1}.
Involution cyclic_sigma3(const AbelianGroup& group);
Involution cyclic_sigma4(const AbelianGroup& group);

/// S_H for H = <a^{2^{n-1}}> in C_{2^n}, two ways.
struct SHSubgroup {
  /// Closure of a^{2^{n-1}}, 1 + beta a^{2^{n-2}} H^ and
  /// 1 + alpha (a^i + a^{2^{n-1}-i}) H^ for all scalars and 1 <= i < 2^{n-2}.
  std::vector<AlgebraElement> from_generators;
  /// {x x^{sigma3} : x in V(FG), Psi(x) unitary in F(G/H)}.
  std::vector<AlgebraElement> from_preimage;
  /// |N_Psi|, the preimage of V_{sigma3}(F(G/H)) in V(FG).
  std::uint64_t preimage_order = 0;

  std::uint64_t order() const noexcept { return from_generators.size(); }
  bool contains(const AlgebraElement& x) const;
};

/// The generator list used by SHSubgroup::from_generators.
std::vector<AlgebraElement> s_h_generators(const GroupAlgebra& algebra);
SHSubgroup s_h_subgroup(const GroupAlgebra& algebra, const EnumerationOptions& options = {});

/// |V_{sigma3}| recovered as |I(H)| |V_*(F(G/H))| / |S_H|.
struct Sigma3Decomposition {
  int ideal_size_log2 = 0;
  std::uint64_t quotient_unitary_order = 0;
  std::uint64_t s_h_order = 0;
  std::uint64_t enumerated_order = 0;

  /// Exact: throws std::logic_error if |S_H| does not divide the numerator.
  std::uint64_t predicted_order() const;
};
Sigma3Decomposition sigma3_decomposition(const GroupAlgebra& algebra, const EnumerationOptions& options = {});

/// log2 of the order of a unit (orders in V(FG) are powers of two).
int element_order_log2(const AlgebraElement& u);
/// #{u : u^(2^t) = 1} for t = 0, 1, ... up to the first t covering the set.
std::vector<std::uint64_t> order_census(std::span<const AlgebraElement> elements);
/// Abelian invariants (cyclic orders, descending) of a finite abelian
/// 2-group of units, recovered from the order census.  Throws
/// std::invalid_argument if the set is visibly not a subgroup.
std::vector<std::uint64_t> abelian_invariants(std::span<const AlgebraElement> elements);
/// Largest element order; same validation as abelian_invariants.
std::uint64_t subgroup_exponent(std::span<const AlgebraElement> elements);
/// Checks u v in S for every pair when |S|^2 <= max_pairs, otherwise for
/// max_pairs deterministic pseudo-random pairs; also checks 1 in S.
bool is_closed_under_product(std::span<const AlgebraElement> elements, std::uint64_t max_pairs);

}  // namespace gralg
