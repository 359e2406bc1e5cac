#include "gralg/unitary.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

#include "gralg/parallel.hpp"

namespace gralg {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Automatic: return "auto";
    case Method::Enumeration: return "enumeration";
    case Method::ImageCount: return "image-count";
    case Method::Formula: return "formula";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "auto") return Method::Automatic;
  if (text == "enumeration") return Method::Enumeration;
  if (text == "image-count") return Method::ImageCount;
  if (text == "formula") return Method::Formula;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::uint64_t SubgroupReport::order() const {
  if (order_log2 >= 64) throw std::overflow_error("subgroup order 2^" + std::to_string(order_log2) + " exceeds 64 bits");
  return std::uint64_t{1} << order_log2;
}

bool UnitarySubgroup::contains(const AlgebraElement& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool SHSubgroup::contains(const AlgebraElement& x) const {
  return std::binary_search(from_generators.begin(), from_generators.end(), x);
}

namespace {

// Coefficient vectors of enumerable algebras fit in 64 bits: k(|G|-1) <= 62
// implies k|G| <= 64 for every k <= 8 and power-of-two |G|.
std::uint64_t pack(std::span<const std::uint8_t> c, int k) noexcept {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < c.size(); ++i) key |= static_cast<std::uint64_t>(c[i]) << (k * i);
  return key;
}

std::vector<std::uint8_t> unpack(std::uint64_t key, int k, std::uint32_t dim) {
  std::vector<std::uint8_t> c(dim);
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  for (std::uint32_t i = 0; i < dim; ++i) c[i] = static_cast<std::uint8_t>((key >> (k * i)) & mask);
  return c;
}

bool is_one_word(std::span<const std::uint8_t> c) noexcept {
  if (c[0] != 1) return false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) return false;
  }
  return true;
}

std::vector<AlgebraElement> from_keys(const GroupAlgebra& algebra, const std::vector<std::uint64_t>& keys) {
  std::vector<AlgebraElement> out;
  out.reserve(keys.size());
  for (auto key : keys) out.push_back(algebra.from_words(unpack(key, algebra.field().degree(), algebra.dimension())));
  std::sort(out.begin(), out.end());
  return out;
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<std::uint64_t> merge_unique(std::vector<std::vector<std::uint64_t>>& parts) {
  std::vector<std::uint64_t> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  sort_unique(all);
  return all;
}

void require_compatible(const GroupAlgebra& algebra, const Involution& sigma) {
  if (!(algebra.group() == sigma.group())) {
    throw std::invalid_argument("involution of " + sigma.group().name() + " used on " + algebra.name());
  }
}

// Unitary members of V(FG) as packed keys.
std::vector<std::uint64_t> sweep_unitary(const GroupAlgebra& algebra, const Involution& sigma,
                                         const EnumerationOptions& options) {
  const std::uint64_t total = require_enumerable(algebra, options.budget);
  const int k = algebra.field().degree();
  auto parts = run_partitioned(
      total,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> found;
        std::vector<std::uint8_t> conj(algebra.dimension()), prod(algebra.dimension());
        for_each_normalized_unit(algebra, begin, end, [&](std::span<const std::uint8_t> x) {
          algebra.involute(sigma, x, conj);
          algebra.multiply(x, conj, prod);
          if (is_one_word(prod)) found.push_back(pack(x, k));
        });
        return found;
      },
      options.workers);
  return merge_unique(parts);
}

std::vector<std::uint64_t> sweep_image(const GroupAlgebra& algebra, const Involution& sigma,
                                       const EnumerationOptions& options) {
  const std::uint64_t total = require_enumerable(algebra, options.budget);
  const int k = algebra.field().degree();
  auto parts = run_partitioned(
      total,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> image;
        std::vector<std::uint8_t> conj(algebra.dimension()), prod(algebra.dimension());
        for_each_normalized_unit(algebra, begin, end, [&](std::span<const std::uint8_t> x) {
          algebra.involute(sigma, x, conj);
          algebra.multiply(x, conj, prod);
          image.push_back(pack(prod, k));
          // Bound memory on large sweeps; the image is usually far smaller.
          if (image.size() >= (std::size_t{1} << 20)) sort_unique(image);
        });
        sort_unique(image);
        return image;
      },
      options.workers);
  return merge_unique(parts);
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

bool is_unitary(const AlgebraElement& u, const Involution& sigma) {
  require_compatible(u.algebra(), sigma);
  if (!u.is_normalized_unit()) throw std::invalid_argument("is_unitary expects a normalized unit, got " + u.to_string());
  return (u * apply_involution(sigma, u)).is_one();
}

UnitaryComputation compute_unitary_subgroup(const GroupAlgebra& algebra, const Involution& sigma, Method method,
                                            const EnumerationOptions& options) {
  require_compatible(algebra, sigma);
  const auto start = std::chrono::steady_clock::now();
  UnitaryComputation out;
  out.report.group = algebra.group().name();
  out.report.field = algebra.field().name();
  out.report.sigma = sigma.label();

  switch (method) {
    case Method::Automatic:
    case Method::Enumeration: {
      UnitarySubgroup sub{sigma, from_keys(algebra, sweep_unitary(algebra, sigma, options))};
      out.report.method = Method::Enumeration;
      out.report.order_log2 = std::countr_zero(static_cast<std::uint64_t>(sub.elements.size()));
      if (!std::has_single_bit(sub.elements.size())) throw std::logic_error("unitary subgroup order is not a power of two");
      out.report.exponent = subgroup_exponent(sub.elements);
      out.report.invariants = abelian_invariants(sub.elements);
      out.subgroup = std::move(sub);
      break;
    }
    case Method::ImageCount: {
      const auto image = sweep_image(algebra, sigma, options);
      if (!std::has_single_bit(image.size())) throw std::logic_error("image of phi is not a 2-group");
      out.report.method = Method::ImageCount;
      out.report.order_log2 = normalized_unit_count_log2(algebra) - std::countr_zero(static_cast<std::uint64_t>(image.size()));
      break;
    }
    case Method::Formula:
      throw std::invalid_argument("formula predictions live in the formulas module");
  }
  out.report.elapsed_ms = elapsed_since(start);
  return out;
}

StarImage compute_star_image(const GroupAlgebra& algebra, const Involution& sigma, const EnumerationOptions& options) {
  require_compatible(algebra, sigma);
  return StarImage{from_keys(algebra, sweep_image(algebra, sigma, options))};
}

namespace {

int cyclic_exponent_or_throw(const AbelianGroup& group) {
  if (!group.is_cyclic()) throw std::invalid_argument("expected a cyclic group C_{2^n}, got " + group.name());
  const int n = group.exponents()[0];
  if (n <= 2) throw std::invalid_argument("expected C_{2^n} with n > 2, got " + group.name());
  return n;
}

}  // namespace

Involution cyclic_sigma3(const AbelianGroup& group) {
  cyclic_exponent_or_throw(group);
  return Involution::parse(group, "sigma3");
}

Involution cyclic_sigma4(const AbelianGroup& group) {
  cyclic_exponent_or_throw(group);
  return Involution::parse(group, "sigma4");
}

AlgebraElement sigma4_product_closed_form(const AlgebraElement& x) {
  const GroupAlgebra& algebra = x.algebra();
  const int n = cyclic_exponent_or_throw(algebra.group());
  const Field& f = algebra.field();
  const std::uint32_t size = 1u << n;
  const std::uint32_t half = size >> 1, quarter = size >> 2, eighth = size >> 3;
  auto alpha = [&](std::int64_t i) {
    return x.coeffs()[static_cast<std::uint32_t>(i) & (size - 1)];
  };
  std::vector<std::uint8_t> y(size, 0);
  for (std::uint32_t i = 0; i < quarter; ++i) {
    const std::uint8_t even = alpha(2 * i) ^ alpha(2 * i + half);
    y[4 * i] ^= f.square(even);
    const std::int64_t j = 2 * (static_cast<std::int64_t>(i) + eighth) + 1;
    y[4 * i + 2] ^= f.square(alpha(j) ^ alpha(j + half));
  }
  for (std::uint32_t j = 0; j < quarter; ++j) {
    const std::int64_t l = 2 * static_cast<std::int64_t>(j) + 1;
    std::uint8_t c = 0;
    for (std::uint32_t i = 0; i < quarter; ++i) {
      const std::int64_t e = 2 * static_cast<std::int64_t>(i);
      c ^= f.mul(alpha(e) ^ alpha(e + half), alpha(l - e + half) ^ alpha(l - e));
    }
    y[static_cast<std::uint32_t>(l)] ^= c;
    y[static_cast<std::uint32_t>(l) + half] ^= c;
  }
  return algebra.from_words(std::move(y));
}

bool check_corollary1(const AlgebraElement& x) {
  const GroupAlgebra& algebra = x.algebra();
  const int n = cyclic_exponent_or_throw(algebra.group());
  const AlgebraElement y = x * apply_involution(cyclic_sigma4(algebra.group()), x);
  const std::uint32_t size = 1u << n, half = size >> 1;
  std::uint8_t odd_sum = 0;
  for (std::uint32_t l = 1; l < size; l += 2) odd_sum ^= y.word(l);
  if (odd_sum != 0) return false;
  for (std::uint32_t l = 1; l < half; l += 2) {
    if (y.word(l) != y.word(l + half)) return false;
  }
  return true;
}

std::vector<AlgebraElement> s_h_generators(const GroupAlgebra& algebra) {
  const int n = cyclic_exponent_or_throw(algebra.group());
  const std::uint32_t size = 1u << n, half = size >> 1, quarter = size >> 2;
  const Field& f = algebra.field();
  std::vector<AlgebraElement> gens;
  {
    std::vector<std::uint8_t> c(size, 0);
    c[half] = 1;
    gens.push_back(algebra.from_words(std::move(c)));
  }
  for (std::uint32_t beta = 1; beta < f.order(); ++beta) {
    std::vector<std::uint8_t> c(size, 0);
    c[0] = 1;
    c[quarter] ^= static_cast<std::uint8_t>(beta);
    c[quarter + half] ^= static_cast<std::uint8_t>(beta);
    gens.push_back(algebra.from_words(std::move(c)));
  }
  for (std::uint32_t i = 1; i < quarter; ++i) {
    for (std::uint32_t alpha = 1; alpha < f.order(); ++alpha) {
      std::vector<std::uint8_t> c(size, 0);
      c[0] = 1;
      // (a^i + a^{half-i}) (1 + a^half)
      for (std::uint32_t e : {i, half - i, i + half, size - i}) c[e & (size - 1)] ^= static_cast<std::uint8_t>(alpha);
      gens.push_back(algebra.from_words(std::move(c)));
    }
  }
  return gens;
}

SHSubgroup s_h_subgroup(const GroupAlgebra& algebra, const EnumerationOptions& options) {
  const Involution sigma3 = cyclic_sigma3(algebra.group());
  SHSubgroup out;

  // (i) closure of the generator list.
  {
    const auto gens = s_h_generators(algebra);
    std::unordered_set<AlgebraElement, AlgebraElementHash> seen{algebra.one()};
    std::vector<AlgebraElement> frontier{algebra.one()};
    while (!frontier.empty()) {
      const AlgebraElement g = frontier.back();
      frontier.pop_back();
      for (const auto& s : gens) {
        AlgebraElement p = g * s;
        if (seen.insert(p).second) frontier.push_back(std::move(p));
      }
    }
    out.from_generators.assign(seen.begin(), seen.end());
    std::sort(out.from_generators.begin(), out.from_generators.end());
  }

  // (ii) image of x -> x x^{sigma3} on the preimage of V_{sigma3}(F(G/H)).
  const Subgroup h = symmetric_group_elements(sigma3);
  const QuotientMap psi(algebra, h);
  const Involution induced = induced_involution(sigma3, psi.groups());
  const GroupAlgebra& target = psi.target();
  const std::uint64_t total = require_enumerable(algebra, options.budget);
  const int k = algebra.field().degree();
  struct Part {
    std::vector<std::uint64_t> image;
    std::uint64_t preimage = 0;
  };
  auto parts = run_partitioned(
      total,
      [&](std::uint64_t begin, std::uint64_t end) {
        Part part;
        std::vector<std::uint8_t> conj(algebra.dimension()), prod(algebra.dimension());
        std::vector<std::uint8_t> qx(target.dimension()), qconj(target.dimension()), qprod(target.dimension());
        for_each_normalized_unit(algebra, begin, end, [&](std::span<const std::uint8_t> x) {
          psi.apply(x, qx);
          target.involute(induced, qx, qconj);
          target.multiply(qx, qconj, qprod);
          if (!is_one_word(qprod)) return;
          ++part.preimage;
          algebra.involute(sigma3, x, conj);
          algebra.multiply(x, conj, prod);
          part.image.push_back(pack(prod, k));
        });
        sort_unique(part.image);
        return part;
      },
      options.workers);
  std::vector<std::vector<std::uint64_t>> images;
  for (auto& p : parts) {
    out.preimage_order += p.preimage;
    images.push_back(std::move(p.image));
  }
  out.from_preimage = from_keys(algebra, merge_unique(images));
  return out;
}

std::uint64_t Sigma3Decomposition::predicted_order() const {
  if (ideal_size_log2 >= 63 || s_h_order == 0) throw std::overflow_error("decomposition out of range");
  const std::uint64_t numerator = (std::uint64_t{1} << ideal_size_log2) * quotient_unitary_order;
  if (numerator / (std::uint64_t{1} << ideal_size_log2) != quotient_unitary_order) {
    throw std::overflow_error("decomposition numerator overflows");
  }
  if (numerator % s_h_order != 0) throw std::logic_error("|S_H| does not divide |I(H)| |V_*(F(G/H))|");
  return numerator / s_h_order;
}

Sigma3Decomposition sigma3_decomposition(const GroupAlgebra& algebra, const EnumerationOptions& options) {
  const Involution sigma3 = cyclic_sigma3(algebra.group());
  const Subgroup h = symmetric_group_elements(sigma3);
  Sigma3Decomposition out;
  out.ideal_size_log2 = SubgroupIdeal(algebra, h).size_log2();
  const QuotientMap psi(algebra, h);
  const Involution induced = induced_involution(sigma3, psi.groups());
  out.quotient_unitary_order =
      compute_unitary_subgroup(psi.target(), induced, Method::Enumeration, options).report.order();
  out.s_h_order = s_h_subgroup(algebra, options).order();
  out.enumerated_order = compute_unitary_subgroup(algebra, sigma3, Method::Enumeration, options).report.order();
  return out;
}

int element_order_log2(const AlgebraElement& u) {
  if (!u.is_unit()) throw std::invalid_argument("element order of a non-unit");
  AlgebraElement x = u;
  const std::uint32_t field_order = u.algebra().field().order();
  // Non-normalized units carry a scalar of odd order q-1; strip it first.
  if (!u.is_normalized_unit()) x = x.pow(field_order - 1);
  int t = 0;
  for (; !x.is_one(); ++t) {
    if (t > 32) throw std::logic_error("unit order is not a power of two");
    x = x * x;
  }
  return t;
}

std::vector<std::uint64_t> order_census(std::span<const AlgebraElement> elements) {
  std::vector<int> orders;
  orders.reserve(elements.size());
  for (const auto& u : elements) orders.push_back(element_order_log2(u));
  const int max_t = orders.empty() ? 0 : *std::max_element(orders.begin(), orders.end());
  std::vector<std::uint64_t> census(static_cast<std::size_t>(max_t) + 1, 0);
  for (int o : orders) {
    for (int t = o; t <= max_t; ++t) ++census[static_cast<std::size_t>(t)];
  }
  return census;
}

bool is_closed_under_product(std::span<const AlgebraElement> elements, std::uint64_t max_pairs) {
  if (elements.empty()) return false;
  std::vector<AlgebraElement> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](const AlgebraElement& x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  if (!member(elements.front().algebra().one())) return false;
  const std::uint64_t n = sorted.size();
  if (n * n <= max_pairs) {
    for (const auto& u : sorted) {
      for (const auto& v : sorted) {
        if (!member(u * v)) return false;
      }
    }
    return true;
  }
  // splitmix64 with a fixed seed.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&] {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (std::uint64_t i = 0; i < max_pairs; ++i) {
    if (!member(sorted[next() % n] * sorted[next() % n])) return false;
  }
  return true;
}

namespace {

void validate_unit_group(std::span<const AlgebraElement> elements) {
  if (elements.empty()) throw std::invalid_argument("empty set is not a group");
  if (!std::has_single_bit(elements.size())) {
    throw std::invalid_argument("set of size " + std::to_string(elements.size()) + " is not a 2-group");
  }
  const GroupAlgebra& algebra = elements.front().algebra();
  std::vector<AlgebraElement> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("set contains duplicates");
  }
  for (const auto& u : sorted) {
    if (!(u.algebra() == algebra)) throw std::invalid_argument("elements from different algebras");
    if (!u.is_unit()) throw std::invalid_argument("non-unit " + u.to_string() + " in unit group");
    if (!std::binary_search(sorted.begin(), sorted.end(), u * u)) {
      throw std::invalid_argument("set is not closed under squaring");
    }
  }
  if (!is_closed_under_product(sorted, std::uint64_t{1} << 16)) {
    throw std::invalid_argument("set is not closed under multiplication");
  }
}

}  // namespace

std::vector<std::uint64_t> abelian_invariants(std::span<const AlgebraElement> elements) {
  validate_unit_group(elements);
  const auto census = order_census(elements);
  // log2 c_t = sum_i min(t, e_i), so d_t = log2 c_t - log2 c_{t-1} counts the e_i >= t.
  std::vector<int> level;
  for (auto c : census) {
    if (!std::has_single_bit(c)) throw std::invalid_argument("order census is not a power of two");
    level.push_back(std::countr_zero(c));
  }
  const int max_t = static_cast<int>(census.size()) - 1;
  auto at_least = [&](int t) { return t > max_t ? 0 : level[static_cast<std::size_t>(t)] - level[static_cast<std::size_t>(t) - 1]; };
  std::vector<std::uint64_t> out;
  for (int t = max_t; t >= 1; --t) {
    const int exactly = at_least(t) - at_least(t + 1);
    if (exactly < 0) throw std::invalid_argument("order census is inconsistent with an abelian group");
    for (int i = 0; i < exactly; ++i) out.push_back(std::uint64_t{1} << t);
  }
  return out;
}

std::uint64_t subgroup_exponent(std::span<const AlgebraElement> elements) {
  validate_unit_group(elements);
  int max_t = 0;
  for (const auto& u : elements) max_t = std::max(max_t, element_order_log2(u));
  return std::uint64_t{1} << max_t;
}

}  // namespace gralg
