#include "gralg/group_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace gralg {

CapacityError::CapacityError(int required_log2, std::uint64_t budget)
    : std::runtime_error("enumeration needs 2^" + std::to_string(required_log2) +
                         " candidates, budget is " + std::to_string(budget)),
      required_log2_(required_log2),
      budget_(budget) {}

GroupAlgebra::GroupAlgebra(Field field, AbelianGroup group) {
  if (group.order() > kMaxDimension) {
    throw std::invalid_argument("group algebra dimension " + std::to_string(group.order()) +
                                " exceeds the supported maximum of " + std::to_string(kMaxDimension));
  }
  auto impl = std::make_shared<Impl>(Impl{std::move(field), std::move(group), {}});
  const std::uint32_t n = impl->group.order();
  impl->cayley.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t g = 0; g < n; ++g) {
    for (std::uint32_t h = 0; h < n; ++h) {
      impl->cayley[static_cast<std::size_t>(g) * n + h] = static_cast<std::uint16_t>(impl->group.mul_index(g, h));
    }
  }
  impl_ = std::move(impl);
}

std::string GroupAlgebra::name() const { return field().name() + "[" + group().name() + "]"; }

AlgebraElement GroupAlgebra::zero() const { return {*this, std::vector<std::uint8_t>(dimension(), 0)}; }

AlgebraElement GroupAlgebra::one() const {
  std::vector<std::uint8_t> c(dimension(), 0);
  c[0] = 1;
  return {*this, std::move(c)};
}

AlgebraElement GroupAlgebra::basis(const GroupElement& g) const {
  if (!(g.group() == group())) throw std::invalid_argument("group element from a different group");
  std::vector<std::uint8_t> c(dimension(), 0);
  c[g.index()] = 1;
  return {*this, std::move(c)};
}

AlgebraElement GroupAlgebra::from_words(std::vector<std::uint8_t> coeffs) const {
  return {*this, std::move(coeffs)};
}

void GroupAlgebra::multiply(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y,
                            std::span<std::uint8_t> out) const noexcept {
  const std::uint32_t n = dimension();
  std::fill(out.begin(), out.end(), std::uint8_t{0});
  const Field& f = field();
  for (std::uint32_t g = 0; g < n; ++g) {
    if (x[g] == 0) continue;
    const std::uint8_t* row = f.mul_row(x[g]);
    const std::uint16_t* cay = impl_->cayley.data() + static_cast<std::size_t>(g) * n;
    for (std::uint32_t h = 0; h < n; ++h) out[cay[h]] ^= row[y[h]];
  }
}

void GroupAlgebra::involute(const Involution& sigma, std::span<const std::uint8_t> x,
                            std::span<std::uint8_t> out) const noexcept {
  const auto perm = sigma.permutation();
  for (std::uint32_t g = 0; g < dimension(); ++g) out[perm[g]] = x[g];
}

std::uint8_t GroupAlgebra::augmentation(std::span<const std::uint8_t> x) const noexcept {
  std::uint8_t a = 0;
  for (auto c : x) a ^= c;
  return a;
}

std::string GroupAlgebra::format(std::span<const std::uint8_t> coeffs) const {
  std::string out;
  for (std::uint32_t g = 0; g < coeffs.size(); ++g) {
    if (coeffs[g] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string mono = GroupElement(group(), g).to_string();
    if (coeffs[g] == 1) {
      out += mono;
      continue;
    }
    std::string c = field().format(coeffs[g]);
    if (c.find('+') != std::string::npos) c = "(" + c + ")";
    out += g == 0 ? c : c + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

namespace {

// Splits at '+' outside parentheses.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
  out.push_back(cur);
  return out;
}

std::uint32_t parse_monomial(const AbelianGroup& group, std::string_view word) {
  if (word.empty()) throw std::invalid_argument("empty monomial");
  if (word == "1") return 0;
  std::vector<std::int64_t> exps(static_cast<std::size_t>(group.rank()), 0);
  std::size_t pos = 0;
  while (pos < word.size()) {
    if (word[pos] == '*') {
      ++pos;
      continue;
    }
    const int gen = word[pos] - 'a';
    if (gen < 0 || gen >= group.rank()) {
      throw std::invalid_argument("unknown generator '" + std::string(1, word[pos]) + "' for " + group.name());
    }
    ++pos;
    std::int64_t e = 1;
    if (pos < word.size() && word[pos] == '^') {
      const std::size_t start = ++pos;
      if (pos < word.size() && word[pos] == '-') ++pos;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
      const std::string digits(word.substr(start, pos - start));
      if (digits.empty() || digits == "-") throw std::invalid_argument("missing exponent in '" + std::string(word) + "'");
      e = std::stoll(digits);
    }
    exps[static_cast<std::size_t>(gen)] += e;
  }
  return group.element(exps).index();
}

}  // namespace

AlgebraElement GroupAlgebra::parse(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty algebra element");
  std::vector<std::uint8_t> coeffs(dimension(), 0);
  for (const std::string& term : split_terms(s)) {
    if (term.empty()) throw std::invalid_argument("empty term in '" + s + "'");
    if (term == "0") continue;
    std::uint8_t c = 1;
    std::string_view mono = term;
    if (term[0] == '(') {
      const auto close = term.find(')');
      c = field().parse_element(std::string_view(term).substr(1, close - 1));
      mono = std::string_view(term).substr(close + 1);
      if (!mono.empty() && mono[0] == '*') mono.remove_prefix(1);
      if (mono.empty()) mono = "1";
    } else if (term[0] == 'x') {
      const auto star = term.find('*');
      c = field().parse_element(std::string_view(term).substr(0, star));
      mono = star == std::string::npos ? std::string_view("1") : std::string_view(term).substr(star + 1);
    }
    coeffs[parse_monomial(group(), mono)] ^= c;
  }
  return {*this, std::move(coeffs)};
}

AlgebraElement::AlgebraElement(GroupAlgebra algebra, std::vector<std::uint8_t> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_.dimension()) {
    throw std::invalid_argument("coefficient vector has length " + std::to_string(coeffs_.size()) +
                                ", expected " + std::to_string(algebra_.dimension()));
  }
  const std::uint32_t q = algebra_.field().order();
  for (auto c : coeffs_) {
    if (c >= q) throw std::invalid_argument("coefficient word outside " + algebra_.field().name());
  }
}

FieldElement AlgebraElement::coeff(const GroupElement& g) const {
  if (!(g.group() == algebra_.group())) throw std::invalid_argument("group element from a different group");
  return FieldElement(algebra_.field(), coeffs_[g.index()]);
}

void AlgebraElement::set_coeff(const GroupElement& g, const FieldElement& value) {
  if (!(g.group() == algebra_.group())) throw std::invalid_argument("group element from a different group");
  if (!(value.field() == algebra_.field())) throw std::invalid_argument("coefficient from a different field");
  coeffs_[g.index()] = value.repr();
}

FieldElement AlgebraElement::augmentation() const {
  return FieldElement(algebra_.field(), algebra_.augmentation(coeffs_));
}

bool AlgebraElement::is_one() const noexcept {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint8_t c) { return c == 0; });
}

namespace {

void require_same_algebra(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.algebra() == y.algebra())) {
    throw std::invalid_argument("operands belong to different algebras: " + x.algebra().name() + " and " +
                                y.algebra().name());
  }
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_algebra(x, y);
  std::vector<std::uint8_t> c(x.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeffs_[i] ^ y.coeffs_[i];
  return {x.algebra_, std::move(c)};
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_algebra(x, y);
  std::vector<std::uint8_t> c(x.coeffs_.size());
  x.algebra_.multiply(x.coeffs_, y.coeffs_, c);
  return {x.algebra_, std::move(c)};
}

AlgebraElement AlgebraElement::scaled(const FieldElement& c) const {
  if (!(c.field() == algebra_.field())) throw std::invalid_argument("scalar from a different field");
  std::vector<std::uint8_t> out(coeffs_.size());
  const Field& f = algebra_.field();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(c.repr(), coeffs_[i]);
  return {algebra_, std::move(out)};
}

AlgebraElement AlgebraElement::pow(std::uint64_t e) const {
  AlgebraElement result = algebra_.one();
  AlgebraElement base = *this;
  for (; e != 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

AlgebraElement AlgebraElement::inverse() const {
  const std::uint8_t aug = algebra_.augmentation(coeffs_);
  if (aug == 0) throw std::domain_error("element with augmentation 0 is not a unit");
  const Field& f = algebra_.field();
  const std::uint8_t aug_inv = f.inv(aug);
  // w = x / aug - 1 has augmentation 0, so w^(exp G) = 0.
  AlgebraElement w = scaled(FieldElement(f, aug_inv)) + algebra_.one();
  AlgebraElement result = algebra_.one();
  for (std::uint32_t step = 1; step < algebra_.group().exponent(); step <<= 1) {
    result = result * (algebra_.one() + w);
    w = w * w;
  }
  return result.scaled(FieldElement(f, aug_inv));
}

std::size_t AlgebraElementHash::operator()(const AlgebraElement& x) const noexcept {
  // FNV-1a over the coefficient bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto c : x.coeffs()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

AlgebraElement apply_involution(const Involution& sigma, const AlgebraElement& x) {
  if (!(sigma.group() == x.algebra().group())) throw std::invalid_argument("involution of a different group");
  std::vector<std::uint8_t> out(x.coeffs().size());
  x.algebra().involute(sigma, x.coeffs(), out);
  return x.algebra().from_words(std::move(out));
}

AlgebraElement hat_sum(const GroupAlgebra& algebra, const Subgroup& h) {
  std::vector<std::uint8_t> c(algebra.dimension(), 0);
  for (const auto& g : h) {
    if (!(g.group() == algebra.group())) throw std::invalid_argument("subgroup of a different group");
    c[g.index()] = 1;
  }
  return algebra.from_words(std::move(c));
}

SubgroupIdeal::SubgroupIdeal(GroupAlgebra algebra, Subgroup h) : algebra_(std::move(algebra)), subgroup_(std::move(h)) {
  const AbelianGroup& group = algebra_.group();
  if (!is_subgroup(group, subgroup_)) throw std::invalid_argument("I(H) needs a subgroup H");
  // Transversal: the smallest index of every coset.
  std::vector<bool> covered(group.order(), false);
  for (std::uint32_t t = 0; t < group.order(); ++t) {
    if (covered[t]) continue;
    for (const auto& x : subgroup_) covered[group.mul_index(t, x.index())] = true;
    for (const auto& x : subgroup_) {
      if (x.is_identity()) continue;
      std::vector<std::uint8_t> c(algebra_.dimension(), 0);
      c[t] ^= 1;
      c[group.mul_index(t, x.index())] ^= 1;
      basis_.push_back(algebra_.from_words(std::move(c)));
    }
  }

  // Row reduction over F.
  const Field& f = algebra_.field();
  for (const auto& b : basis_) {
    std::vector<std::uint8_t> row(b.coeffs().begin(), b.coeffs().end());
    for (const auto& [pivot, prow] : echelon_) {
      if (const std::uint8_t c = row[pivot]; c != 0) {
        for (std::size_t i = 0; i < row.size(); ++i) row[i] ^= f.mul(c, prow[i]);
      }
    }
    const auto it = std::find_if(row.begin(), row.end(), [](std::uint8_t c) { return c != 0; });
    if (it == row.end()) continue;
    const auto pivot = static_cast<std::uint32_t>(it - row.begin());
    const std::uint8_t scale = f.inv(row[pivot]);
    for (auto& c : row) c = f.mul(scale, c);
    // Keep earlier rows reduced at the new pivot.
    for (auto& [p, prow] : echelon_) {
      if (const std::uint8_t c = prow[pivot]; c != 0) {
        for (std::size_t i = 0; i < row.size(); ++i) prow[i] ^= f.mul(c, row[i]);
      }
    }
    echelon_.emplace_back(pivot, std::move(row));
  }
}

bool SubgroupIdeal::contains(const AlgebraElement& x) const {
  if (!(x.algebra() == algebra_)) throw std::invalid_argument("element of a different algebra");
  const Field& f = algebra_.field();
  std::vector<std::uint8_t> row(x.coeffs().begin(), x.coeffs().end());
  for (const auto& [pivot, prow] : echelon_) {
    if (const std::uint8_t c = row[pivot]; c != 0) {
      for (std::size_t i = 0; i < row.size(); ++i) row[i] ^= f.mul(c, prow[i]);
    }
  }
  return std::all_of(row.begin(), row.end(), [](std::uint8_t c) { return c == 0; });
}

QuotientMap::QuotientMap(const GroupAlgebra& source, const Subgroup& h)
    : source_(source), groups_(quotient(source.group(), h)), target_(source.field(), groups_.target) {}

void QuotientMap::apply(std::span<const std::uint8_t> x, std::span<std::uint8_t> out) const noexcept {
  std::fill(out.begin(), out.end(), std::uint8_t{0});
  for (std::uint32_t g = 0; g < x.size(); ++g) out[groups_.projection[g]] ^= x[g];
}

AlgebraElement QuotientMap::operator()(const AlgebraElement& x) const {
  if (!(x.algebra() == source_)) throw std::invalid_argument("element of a different algebra");
  std::vector<std::uint8_t> out(target_.dimension());
  apply(x.coeffs(), out);
  return target_.from_words(std::move(out));
}

int normalized_unit_count_log2(const GroupAlgebra& algebra) noexcept {
  return algebra.field().degree() * static_cast<int>(algebra.dimension() - 1);
}

std::uint64_t require_enumerable(const GroupAlgebra& algebra, std::uint64_t budget) {
  const int log2 = normalized_unit_count_log2(algebra);
  if (log2 >= 63 || (std::uint64_t{1} << log2) > budget) throw CapacityError(log2, budget);
  return std::uint64_t{1} << log2;
}

NormalizedUnitCursor::NormalizedUnitCursor(const GroupAlgebra& algebra, std::uint64_t ordinal)
    : q_mask_(algebra.field().order() - 1), coeffs_(algebra.dimension(), 0), ordinal_(ordinal) {
  const int k = algebra.field().degree();
  std::uint8_t acc = 0;
  for (std::size_t p = coeffs_.size(); p-- > 1;) {
    coeffs_[p] = static_cast<std::uint8_t>(ordinal & q_mask_);
    acc ^= coeffs_[p];
    ordinal >>= k;
  }
  coeffs_[0] = static_cast<std::uint8_t>(1 ^ acc);
}

void NormalizedUnitCursor::advance() noexcept {
  ++ordinal_;
  std::uint8_t delta = 0;
  for (std::size_t p = coeffs_.size(); p-- > 1;) {
    const std::uint8_t old = coeffs_[p];
    const auto next = static_cast<std::uint8_t>((old + 1u) & q_mask_);
    coeffs_[p] = next;
    delta ^= old ^ next;
    if (next != 0) break;
  }
  coeffs_[0] ^= delta;
}

std::vector<AlgebraElement> enumerate_normalized_units(const GroupAlgebra& algebra, std::uint64_t budget) {
  const std::uint64_t count = require_enumerable(algebra, budget);
  std::vector<AlgebraElement> out;
  out.reserve(count);
  for_each_normalized_unit(algebra, 0, count, [&](std::span<const std::uint8_t> c) {
    out.push_back(algebra.from_words(std::vector<std::uint8_t>(c.begin(), c.end())));
  });
  return out;
}

}  // namespace gralg
