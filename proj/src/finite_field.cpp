#include "gralg/finite_field.hpp"

#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gralg {

std::uint32_t clmul(std::uint32_t a, std::uint32_t b) noexcept {
  std::uint32_t r = 0;
  for (; b != 0; b >>= 1, a <<= 1) {
    if (b & 1u) r ^= a;
  }
  return r;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) noexcept {
  const int dm = std::bit_width(m) - 1;
  for (int d = std::bit_width(a) - 1; d >= dm; --d) {
    if ((a >> d) & 1u) a ^= m << (d - dm);
  }
  return a;
}

bool is_irreducible(int degree, std::uint32_t modulus) noexcept {
  if (degree < 1 || static_cast<int>(std::bit_width(modulus)) - 1 != degree) return false;
  for (std::uint32_t d = 2; d < (1u << degree); ++d) {
    if (poly_mod(modulus, d) == 0) return false;
  }
  return true;
}

std::uint32_t Field::default_modulus(int degree) {
  switch (degree) {
    case 1: return 0b11;
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 6: return 0b1000011;
    case 7: return 0b10000011;
    case 8: return 0b100011011;
    default: throw std::invalid_argument("field degree must lie in [1, 8]");
  }
}

Field::Field() : Field(1, 0b11) {}

Field::Field(int degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("field degree must lie in [1, 8], got " + std::to_string(degree));
  }
  if (!is_irreducible(degree, modulus)) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) +
                                " is not an irreducible polynomial of degree " +
                                std::to_string(degree));
  }

  // Tables are shared between all handles onto the same field.
  static std::mutex mutex;
  static std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const Tables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{degree, modulus}];
  if (!slot) {
    const std::uint32_t q = 1u << degree;
    auto t = std::make_shared<Tables>();
    t->mul.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        t->mul[(a << degree) | b] = static_cast<std::uint8_t>(poly_mod(clmul(a, b), modulus));
      }
    }
    t->inv.assign(q, 0);
    for (std::uint32_t a = 1; a < q; ++a) {
      for (std::uint32_t b = 1; b < q; ++b) {
        if (t->mul[(a << degree) | b] == 1) {
          t->inv[a] = static_cast<std::uint8_t>(b);
          break;
        }
      }
    }
    // sqrt(a) = a^(2^(k-1)): k-1 squarings.
    t->sqrt.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      std::uint32_t r = a;
      for (int i = 1; i < degree; ++i) r = t->mul[(r << degree) | r];
      t->sqrt[a] = static_cast<std::uint8_t>(r);
    }
    slot = std::move(t);
  }
  tables_ = slot;
}

Field Field::with_order(std::uint32_t q) {
  if (q < 2 || !std::has_single_bit(q)) {
    throw std::invalid_argument("field order must be a power of two, got " + std::to_string(q));
  }
  const int k = std::countr_zero(q);
  return Field(k, default_modulus(k));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, int base = 10) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("expected a number");
  std::uint64_t v = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else throw std::invalid_argument("bad digit in '" + std::string(s) + "'");
    if (d >= base) throw std::invalid_argument("bad digit in '" + std::string(s) + "'");
    v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(d);
    if (v > (1ull << 40)) throw std::invalid_argument("number too large: " + std::string(s));
  }
  return v;
}

}  // namespace

Field Field::parse(std::string_view q, std::string_view modulus) {
  q = trim(q);
  if (q.size() > 4 && (q.substr(0, 3) == "GF(" || q.substr(0, 3) == "gf(") && q.back() == ')') {
    q = q.substr(3, q.size() - 4);
  }
  std::uint64_t order;
  if (auto caret = q.find('^'); caret != std::string_view::npos) {
    if (parse_uint(q.substr(0, caret)) != 2) throw std::invalid_argument("field base must be 2");
    const auto k = parse_uint(q.substr(caret + 1));
    if (k < 1 || k > kMaxDegree) throw std::invalid_argument("field degree must lie in [1, 8]");
    order = 1ull << k;
  } else {
    order = parse_uint(q);
  }
  if (order < 2 || order > 256 || !std::has_single_bit(order)) {
    throw std::invalid_argument("field order must be 2^k with 1 <= k <= 8, got " + std::string(q));
  }
  const int k = std::countr_zero(order);
  modulus = trim(modulus);
  if (modulus.empty()) return Field(k, default_modulus(k));
  if (modulus.size() > 2 && modulus[0] == '0' && (modulus[1] == 'b' || modulus[1] == 'B')) {
    modulus.remove_prefix(2);
  }
  return Field(k, static_cast<std::uint32_t>(parse_uint(modulus, 2)));
}

std::string Field::name() const { return "GF(" + std::to_string(order()) + ")"; }

std::uint8_t Field::inv(std::uint8_t a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return tables_->inv[a];
}

std::uint8_t Field::pow(std::uint8_t a, std::uint64_t e) const noexcept {
  std::uint8_t r = 1;
  for (; e != 0; e >>= 1, a = mul(a, a)) {
    if (e & 1u) r = mul(r, a);
  }
  return r;
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement Field::element(std::uint32_t repr) const {
  if (repr >= order()) {
    throw std::out_of_range("word " + std::to_string(repr) + " is not an element of " + name());
  }
  return FieldElement(*this, static_cast<std::uint8_t>(repr));
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order());
  for (std::uint32_t r = 0; r < order(); ++r) out.emplace_back(*this, static_cast<std::uint8_t>(r));
  return out;
}

std::string Field::format(std::uint8_t repr) const {
  if (repr == 0) return "0";
  std::string out;
  for (int d = degree_ - 1; d >= 0; --d) {
    if (!((repr >> d) & 1u)) continue;
    if (!out.empty()) out += '+';
    if (d == 0) out += '1';
    else if (d == 1) out += 'x';
    else out += "x^" + std::to_string(d);
  }
  return out;
}

std::uint8_t Field::parse_element(std::string_view text) const {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw std::invalid_argument("empty field element");
  std::uint32_t repr = 0;
  std::string_view rest = compact;
  while (!rest.empty()) {
    const auto plus = rest.find('+');
    const std::string_view term = rest.substr(0, plus);
    rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
    std::uint64_t d;
    if (term == "0") continue;
    if (term == "1") d = 0;
    else if (term == "x") d = 1;
    else if (term.size() > 2 && term.substr(0, 2) == "x^") d = parse_uint(term.substr(2));
    else throw std::invalid_argument("bad field term '" + std::string(term) + "'");
    if (d >= static_cast<std::uint64_t>(degree_)) {
      throw std::invalid_argument("term '" + std::string(term) + "' exceeds the degree of " + name());
    }
    repr ^= 1u << d;
  }
  return static_cast<std::uint8_t>(repr);
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw std::invalid_argument("operands belong to different fields: " + a.field().name() +
                                " (modulus " + std::to_string(a.field().modulus()) + ") and " +
                                b.field().name() + " (modulus " +
                                std::to_string(b.field().modulus()) + ")");
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.repr_ ^ b.repr_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.field_.mul(a.repr_, b.repr_));
}

FieldElement inverse(const FieldElement& a) {
  return FieldElement(a.field(), a.field().inv(a.repr()));
}

FieldElement sqrt(const FieldElement& a) { return FieldElement(a.field(), a.field().sqrt(a.repr())); }

FieldElement pow(const FieldElement& a, std::uint64_t e) {
  return FieldElement(a.field(), a.field().pow(a.repr(), e));
}

std::uint32_t multiplicative_order(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("zero has no multiplicative order");
  const Field& f = a.field();
  std::uint32_t m = 1;
  for (std::uint8_t x = a.repr(); x != 1; x = f.mul(x, a.repr())) ++m;
  return m;
}

}  // namespace gralg
