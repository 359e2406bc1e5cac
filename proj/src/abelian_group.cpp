#include "gralg/abelian_group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace gralg {

AbelianGroup::AbelianGroup(std::vector<int> exponents) {
  auto impl = std::make_shared<Impl>();
  std::uint64_t order = 1;
  for (int n : exponents) {
    if (n < 1) throw std::invalid_argument("cyclic factor exponent must be >= 1");
    order <<= n;
    if (order > kMaxOrder) {
      throw std::invalid_argument("group order exceeds the supported maximum of 2^16");
    }
  }
  impl->exponents = std::move(exponents);
  impl->order = static_cast<std::uint32_t>(order);
  impl->strides.resize(impl->exponents.size());
  std::uint32_t stride = 1;
  for (std::size_t i = impl->exponents.size(); i-- > 0;) {
    impl->strides[i] = stride;
    stride <<= impl->exponents[i];
  }
  impl_ = std::move(impl);
}

AbelianGroup AbelianGroup::cyclic(int n) { return AbelianGroup(std::vector<int>{n}); }

AbelianGroup AbelianGroup::parse(std::string_view text) {
  std::vector<int> exps;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw std::invalid_argument("empty cyclic factor in '" + std::string(text) + "'");
    std::string digits = token;
    if (digits[0] == 'c' || digits[0] == 'C') digits.erase(0, 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("bad cyclic factor '" + token + "'");
    }
    const unsigned long long m = std::stoull(digits);
    if (m < 2 || !std::has_single_bit(m) || m > kMaxOrder) {
      throw std::invalid_argument("cyclic factor order must be a power of two >= 2, got '" + token + "'");
    }
    exps.push_back(std::countr_zero(m));
    token.clear();
  };
  for (char c : text) {
    if (c == 'x' || c == 'X' || c == ',' || c == '*') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) token += c;
  }
  flush();
  return AbelianGroup(std::move(exps));
}

std::uint32_t AbelianGroup::exponent() const noexcept {
  int m = 0;
  for (int n : impl_->exponents) m = std::max(m, n);
  return 1u << m;
}

std::string AbelianGroup::name() const {
  if (impl_->exponents.empty()) return "1";
  std::string out;
  for (int n : impl_->exponents) {
    if (!out.empty()) out += 'x';
    out += "C" + std::to_string(1u << n);
  }
  return out;
}

GroupElement AbelianGroup::identity() const { return {*this, 0}; }

GroupElement AbelianGroup::generator(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("generator index out of range");
  return {*this, impl_->strides[static_cast<std::size_t>(i)]};
}

GroupElement AbelianGroup::element(std::span<const std::int64_t> exps) const {
  if (exps.size() != impl_->exponents.size()) {
    throw std::invalid_argument("exponent vector length does not match the group rank");
  }
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const std::int64_t m = std::int64_t{1} << impl_->exponents[i];
    index += static_cast<std::uint32_t>(((exps[i] % m) + m) % m) * impl_->strides[i];
  }
  return {*this, index};
}

GroupElement AbelianGroup::element_at(std::uint32_t index) const {
  if (index >= order()) throw std::out_of_range("element index out of range");
  return {*this, index};
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order());
  for (std::uint32_t i = 0; i < order(); ++i) out.emplace_back(*this, i);
  return out;
}

std::uint32_t AbelianGroup::encode(std::span<const std::uint32_t> exps) const {
  if (exps.size() != impl_->exponents.size()) {
    throw std::invalid_argument("exponent vector length does not match the group rank");
  }
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    index += (exps[i] & ((1u << impl_->exponents[i]) - 1)) * impl_->strides[i];
  }
  return index;
}

std::vector<std::uint32_t> AbelianGroup::decode(std::uint32_t index) const {
  std::vector<std::uint32_t> out(impl_->exponents.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (index / impl_->strides[i]) & ((1u << impl_->exponents[i]) - 1);
  }
  return out;
}

std::uint32_t AbelianGroup::mul_index(std::uint32_t g, std::uint32_t h) const noexcept {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < impl_->exponents.size(); ++i) {
    const std::uint32_t s = impl_->strides[i];
    const std::uint32_t mask = (1u << impl_->exponents[i]) - 1;
    out += (((g / s) + (h / s)) & mask) * s;
  }
  return out;
}

std::uint32_t AbelianGroup::inv_index(std::uint32_t g) const noexcept { return pow_index(g, -1); }

std::uint32_t AbelianGroup::pow_index(std::uint32_t g, std::int64_t m) const noexcept {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < impl_->exponents.size(); ++i) {
    const std::uint32_t s = impl_->strides[i];
    const std::int64_t mask = (std::int64_t{1} << impl_->exponents[i]) - 1;
    const std::int64_t e = static_cast<std::int64_t>((g / s) & static_cast<std::uint32_t>(mask));
    // Two's complement makes the mask a correct reduction for negative m.
    out += static_cast<std::uint32_t>((e * m) & mask) * s;
  }
  return out;
}

std::uint32_t AbelianGroup::order_of_index(std::uint32_t g) const noexcept {
  std::uint32_t order = 1;
  for (; g != 0; g = mul_index(g, g)) order <<= 1;
  return order;
}

GroupElement::GroupElement(AbelianGroup group, std::uint32_t index)
    : group_(std::move(group)), index_(index) {
  if (index_ >= group_.order()) throw std::out_of_range("element index out of range");
}

std::string GroupElement::to_string() const {
  const auto e = exps();
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += static_cast<char>('a' + i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (!(g.group_ == h.group_)) {
    throw std::invalid_argument("operands belong to different groups: " + g.group_.name() +
                                " and " + h.group_.name());
  }
  return {g.group_, g.group_.mul_index(g.index_, h.index_)};
}

namespace {

Subgroup from_mask(const AbelianGroup& group, const std::vector<bool>& mask) {
  Subgroup out;
  for (std::uint32_t i = 0; i < group.order(); ++i) {
    if (mask[i]) out.emplace_back(group, i);
  }
  return out;
}

}  // namespace

Subgroup torsion_subgroup(const AbelianGroup& group, int i) {
  if (i < 0) throw std::invalid_argument("torsion level must be >= 0");
  const std::int64_t power = i >= 31 ? (std::int64_t{1} << 31) : (std::int64_t{1} << i);
  std::vector<bool> mask(group.order(), false);
  for (std::uint32_t g = 0; g < group.order(); ++g) mask[g] = group.pow_index(g, power) == 0;
  return from_mask(group, mask);
}

Subgroup power_subgroup(const AbelianGroup& group, int i) {
  if (i < 0) throw std::invalid_argument("power level must be >= 0");
  const std::int64_t power = i >= 31 ? (std::int64_t{1} << 31) : (std::int64_t{1} << i);
  std::vector<bool> mask(group.order(), false);
  for (std::uint32_t g = 0; g < group.order(); ++g) mask[group.pow_index(g, power)] = true;
  return from_mask(group, mask);
}

Subgroup generate(const AbelianGroup& group, std::span<const GroupElement> generators) {
  std::vector<bool> mask(group.order(), false);
  std::vector<std::uint32_t> frontier{0};
  mask[0] = true;
  while (!frontier.empty()) {
    const std::uint32_t g = frontier.back();
    frontier.pop_back();
    for (const auto& s : generators) {
      if (!(s.group() == group)) throw std::invalid_argument("generator from a different group");
      const std::uint32_t h = group.mul_index(g, s.index());
      if (!mask[h]) {
        mask[h] = true;
        frontier.push_back(h);
      }
    }
  }
  return from_mask(group, mask);
}

Subgroup generated_by_order(const AbelianGroup& group, int i) {
  if (i < 0) throw std::invalid_argument("order level must be >= 0");
  std::vector<GroupElement> gens;
  for (std::uint32_t g = 0; g < group.order(); ++g) {
    if (i < 31 && group.order_of_index(g) == (1u << i)) gens.emplace_back(group, g);
  }
  return generate(group, gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subgroup(const AbelianGroup& group, const Subgroup& s) {
  std::vector<bool> mask(group.order(), false);
  for (const auto& g : s) {
    if (!(g.group() == group)) return false;
    mask[g.index()] = true;
  }
  if (!mask[0]) return false;
  for (const auto& g : s) {
    if (!mask[group.inv_index(g.index())]) return false;
    for (const auto& h : s) {
      if (!mask[group.mul_index(g.index(), h.index())]) return false;
    }
  }
  return true;
}

QuotientGroup quotient(const AbelianGroup& group, const Subgroup& h) {
  if (!is_subgroup(group, h)) throw std::invalid_argument("quotient by a set that is not a subgroup");

  const std::uint32_t n = group.order();
  // Cosets are labelled in order of their smallest member.
  constexpr std::uint32_t kUnset = ~0u;
  std::vector<std::uint32_t> coset(n, kUnset);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (coset[g] != kUnset) continue;
    const auto label = static_cast<std::uint32_t>(reps.size());
    reps.push_back(g);
    for (const auto& x : h) coset[group.mul_index(g, x.index())] = label;
  }
  const auto m = static_cast<std::uint32_t>(reps.size());
  auto cmul = [&](std::uint32_t c, std::uint32_t d) { return coset[group.mul_index(reps[c], reps[d])]; };
  auto corder_log2 = [&](std::uint32_t c) {
    int t = 0;
    for (; c != 0; c = cmul(c, c)) ++t;
    return t;
  };

  // Invariants from the order census: log2 #{c : c^(2^t) = 1} = sum_i min(t, e_i).
  int max_t = 0;
  std::vector<int> order_log2(m);
  for (std::uint32_t c = 0; c < m; ++c) {
    order_log2[c] = corder_log2(c);
    max_t = std::max(max_t, order_log2[c]);
  }
  std::vector<int> census_log2(static_cast<std::size_t>(max_t) + 2, 0);
  for (int t = 0; t <= max_t + 1; ++t) {
    const auto count = std::count_if(order_log2.begin(), order_log2.end(), [&](int o) { return o <= t; });
    census_log2[static_cast<std::size_t>(t)] = std::countr_zero(static_cast<std::uint64_t>(count));
  }
  std::vector<int> invariants;
  for (int t = max_t; t >= 1; --t) {
    const int at_least_t = census_log2[static_cast<std::size_t>(t)] - census_log2[static_cast<std::size_t>(t) - 1];
    const int at_least_next = census_log2[static_cast<std::size_t>(t) + 1] - census_log2[static_cast<std::size_t>(t)];
    for (int k = 0; k < at_least_t - at_least_next; ++k) invariants.push_back(t);
  }

  // Backtracking search for a basis with orders 2^{invariants[i]}.
  std::vector<std::uint32_t> basis;
  std::function<bool(const std::vector<std::uint32_t>&)> extend = [&](const std::vector<std::uint32_t>& span) {
    if (basis.size() == invariants.size()) return span.size() == m;
    const int want = invariants[basis.size()];
    std::vector<bool> in_span(m, false);
    for (auto s : span) in_span[s] = true;
    for (std::uint32_t c = 1; c < m; ++c) {
      if (order_log2[c] != want) continue;
      bool independent = true;
      std::uint32_t p = c;
      for (int j = 1; j < (1 << want); ++j, p = cmul(p, c)) {
        if (in_span[p]) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      std::vector<std::uint32_t> next;
      next.reserve(span.size() << want);
      std::uint32_t power = 0;
      for (int j = 0; j < (1 << want); ++j, power = cmul(power, c)) {
        for (auto s : span) next.push_back(cmul(s, power));
      }
      basis.push_back(c);
      if (extend(next)) return true;
      basis.pop_back();
    }
    return false;
  };
  if (!extend({0})) throw std::logic_error("no basis found for quotient group");

  AbelianGroup target(invariants);
  std::vector<std::uint32_t> target_of_coset(m);
  for (std::uint32_t t = 0; t < target.order(); ++t) {
    const auto e = target.decode(t);
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t j = 0; j < e[i]; ++j) c = cmul(c, basis[i]);
    }
    target_of_coset[c] = t;
  }

  QuotientGroup out{group, target, h, std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(m)};
  for (std::uint32_t g = 0; g < n; ++g) out.projection[g] = target_of_coset[coset[g]];
  for (std::uint32_t c = 0; c < m; ++c) out.section[target_of_coset[c]] = reps[c];
  return out;
}

}  // namespace gralg
