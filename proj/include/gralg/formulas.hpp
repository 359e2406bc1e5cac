#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gralg/abelian_group.hpp"
#include "gralg/involution.hpp"

namespace gralg {

/// Which closed form produced a prediction.
enum class FormulaSource {
  Canonical,        ///< |G^2[2]| q^{(|G|+|G[2]|)/2 - 1}, any abelian 2-group
  Sigma3,           ///< q^{2^{n-1}} for a -> a^{2^{n-1}-1} on C_{2^n}
  Sigma4,           ///< q^{2^{n-1}}, elementary abelian, for a -> a^{2^{n-1}+1}
  CanonicalCyclic,  ///< 2 q^{2^{n-1}} on C_{2^n}
};

/// "L1", "L3", "L6", "SIGMA2-CYCLIC".
std::string_view to_string(FormulaSource s) noexcept;

/// A predicted subgroup order.  Every prediction is a power of two, so it is
/// held as its base-2 logarithm and stays exact for large n.
struct OrderPrediction {
  int log2_value = 0;
  FormulaSource source = FormulaSource::Canonical;
  bool elementary_abelian = false;

  /// Throws std::overflow_error when the value needs more than 63 bits.
  std::uint64_t value() const;
  /// Exact decimal expansion of 2^log2_value.
  std::string decimal() const;
};

/// `q` must be a power of two >= 2.
OrderPrediction order_canonical(const AbelianGroup& group, std::uint32_t q);
/// 2 q^{2^{n-1}}; n < 2 is rejected with std::invalid_argument.
OrderPrediction order_canonical_cyclic(int n, std::uint32_t q);
/// n <= 2 is rejected with std::invalid_argument.
OrderPrediction order_sigma3(int n, std::uint32_t q);
OrderPrediction order_sigma4(int n, std::uint32_t q);

/// True when sigma is g -> g^{-1}.
bool is_canonical(const Involution& sigma);

/// The applicable closed form for sigma over GF(q), if any: the canonical
/// formula for g -> g^{-1} on any group, and the sigma3/sigma4 formulas on
/// C_{2^n} with n > 2.
std::optional<OrderPrediction> predict_order(const Involution& sigma, std::uint32_t q);

/// Decimal digits of 2^e.
std::string pow2_decimal(int e);

}  // namespace gralg
