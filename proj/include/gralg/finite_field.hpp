#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gralg {

class FieldElement;

/// The field GF(2^k), 1 <= k <= 8, in a fixed polynomial basis.
///
/// A Field is a cheap handle onto immutable precomputed tables (product,
/// inverse and square root).  Two handles compare equal when they were built
/// from the same degree and modulus.  Elements are stored as k-bit words whose
/// bit i is the coordinate of x^i.
class Field {
 public:
  static constexpr int kMaxDegree = 8;

  /// GF(2).
  Field();

  /// GF(2^degree) reduced by `modulus` (bit i = coefficient of x^i).  Throws
  /// std::invalid_argument for an out-of-range degree or a reducible modulus.
  Field(int degree, std::uint32_t modulus);

  /// GF(q) with the default modulus for q = 2^k.
  static Field with_order(std::uint32_t q);

  /// Parses "q" as `4`, `2^3`, `GF(8)`; `modulus` is empty (default) or a
  /// bit string such as `0b111`.
  static Field parse(std::string_view q, std::string_view modulus = {});

  static std::uint32_t default_modulus(int degree);

  int degree() const noexcept { return degree_; }
  std::uint32_t order() const noexcept { return 1u << degree_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  // Word-level arithmetic used by the hot loops of the algebra module.
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept {
    return tables_->mul[(static_cast<std::size_t>(a) << degree_) | b];
  }
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t sqrt(std::uint8_t a) const noexcept { return tables_->sqrt[a]; }
  std::uint8_t square(std::uint8_t a) const noexcept { return mul(a, a); }
  std::uint8_t pow(std::uint8_t a, std::uint64_t e) const noexcept;

  /// Row `a` of the product table: mul_row(a)[b] == mul(a, b).
  const std::uint8_t* mul_row(std::uint8_t a) const noexcept {
    return tables_->mul.data() + (static_cast<std::size_t>(a) << degree_);
  }

  FieldElement zero() const;
  FieldElement one() const;
  /// Throws std::out_of_range when `repr` has bits at or above the degree.
  FieldElement element(std::uint32_t repr) const;
  /// All 2^k elements, ascending by representation word.
  std::vector<FieldElement> elements() const;

  /// Formats a word as a polynomial in x, e.g. "x^2+1".
  std::string format(std::uint8_t repr) const;
  /// Inverse of format(); accepts "0", "1", "x", "x^2+x+1" and spaces.
  std::uint8_t parse_element(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint8_t> mul;
    std::vector<std::uint8_t> inv;
    std::vector<std::uint8_t> sqrt;
  };

  int degree_;
  std::uint32_t modulus_;
  std::shared_ptr<const Tables> tables_;
};

/// An element of a specific Field.  Arithmetic between elements of different
/// fields throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(Field field, std::uint8_t repr) : field_(std::move(field)), repr_(repr) {}

  const Field& field() const noexcept { return field_; }
  std::uint8_t repr() const noexcept { return repr_; }
  bool is_zero() const noexcept { return repr_ == 0; }
  std::string to_string() const { return field_.format(repr_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.repr_ == b.repr_;
  }

 private:
  Field field_;
  std::uint8_t repr_;
};

/// Multiplicative inverse; throws std::domain_error on zero.
FieldElement inverse(const FieldElement& a);
/// The unique b with b*b == a, computed as a^(2^(k-1)).
FieldElement sqrt(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);
/// Least m >= 1 with a^m == 1; throws std::domain_error on zero.
std::uint32_t multiplicative_order(const FieldElement& a);

/// Carry-less product of two polynomials over GF(2).
std::uint32_t clmul(std::uint32_t a, std::uint32_t b) noexcept;
/// Remainder of `a` modulo `m` as polynomials over GF(2); m != 0.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) noexcept;
/// Trial division by every polynomial of degree 1..degree-1.
bool is_irreducible(int degree, std::uint32_t modulus) noexcept;

}  // namespace gralg
