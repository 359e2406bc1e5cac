#include "gralg/formulas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gralg {

std::string_view to_string(FormulaSource s) noexcept {
  switch (s) {
    case FormulaSource::Canonical: return "L1";
    case FormulaSource::Sigma3: return "L3";
    case FormulaSource::Sigma4: return "L6";
    case FormulaSource::CanonicalCyclic: return "SIGMA2-CYCLIC";
  }
  return "unknown";
}

std::string pow2_decimal(int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::string digits = "1";  // little-endian
  for (int i = 0; i < e; ++i) {
    int carry = 0;
    for (char& d : digits) {
      const int v = (d - '0') * 2 + carry;
      d = static_cast<char>('0' + v % 10);
      carry = v / 10;
    }
    if (carry) digits += static_cast<char>('0' + carry);
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::uint64_t OrderPrediction::value() const {
  if (log2_value >= 64) throw std::overflow_error("predicted order 2^" + std::to_string(log2_value) + " exceeds 64 bits");
  return std::uint64_t{1} << log2_value;
}

std::string OrderPrediction::decimal() const { return pow2_decimal(log2_value); }

namespace {

int field_degree(std::uint32_t q) {
  if (q < 2 || !std::has_single_bit(q)) throw std::invalid_argument("field order must be a power of two, got " + std::to_string(q));
  return std::countr_zero(q);
}

void require_n_above_two(int n) {
  if (n <= 2) throw std::invalid_argument("closed form requires n > 2, got n = " + std::to_string(n));
}

}  // namespace

OrderPrediction order_canonical(const AbelianGroup& group, std::uint32_t q) {
  const int k = field_degree(q);
  const auto g2 = torsion_subgroup(group, 1);
  const auto squares_2 = intersect(power_subgroup(group, 1), g2);
  const std::uint64_t doubled = static_cast<std::uint64_t>(group.order()) + g2.size();
  if (doubled % 2 != 0) throw std::logic_error("|G| + |G[2]| is odd");
  const int field_power = static_cast<int>(doubled / 2) - 1;
  return {std::countr_zero(squares_2.size()) + k * field_power, FormulaSource::Canonical, false};
}

OrderPrediction order_canonical_cyclic(int n, std::uint32_t q) {
  // C_2 has G^2[2] = 1, so the factor 2 appears only from C_4 on
  if (n < 2) throw std::invalid_argument("cyclic canonical form requires n >= 2, got n = " + std::to_string(n));
  return {1 + field_degree(q) * (1 << (n - 1)), FormulaSource::CanonicalCyclic, false};
}

OrderPrediction order_sigma3(int n, std::uint32_t q) {
  require_n_above_two(n);
  return {field_degree(q) * (1 << (n - 1)), FormulaSource::Sigma3, false};
}

OrderPrediction order_sigma4(int n, std::uint32_t q) {
  require_n_above_two(n);
  return {field_degree(q) * (1 << (n - 1)), FormulaSource::Sigma4, true};
}

bool is_canonical(const Involution& sigma) {
  const AbelianGroup& g = sigma.group();
  const auto perm = sigma.permutation();
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (perm[i] != g.inv_index(i)) return false;
  }
  return true;
}

std::optional<OrderPrediction> predict_order(const Involution& sigma, std::uint32_t q) {
  const AbelianGroup& g = sigma.group();
  if (is_canonical(sigma)) return order_canonical(g, q);
  if (!g.is_cyclic() || g.exponents()[0] <= 2) return std::nullopt;
  const int n = g.exponents()[0];
  const std::uint32_t half = 1u << (n - 1);
  const std::uint32_t image = sigma.images()[0].index();
  if (image == half - 1) return order_sigma3(n, q);
  if (image == half + 1) return order_sigma4(n, q);
  return std::nullopt;
}

}  // namespace gralg
