#pragma once

#include <cstdint>
#include <vector>

#include "gralg/group_algebra.hpp"
#include "oracle.hpp"

namespace testing_support {

// splitmix64; fixed seeds keep every property run reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return (*this)() % n; }

 private:
  std::uint64_t state_;
};

inline oracle::Field oracle_field(const gralg::Field& f) { return {f.degree(), f.modulus()}; }

inline oracle::Group oracle_group(const gralg::AbelianGroup& g) {
  return {std::vector<int>(g.exponents().begin(), g.exponents().end())};
}

inline std::vector<oracle::Tuple> oracle_images(const gralg::Involution& sigma) {
  std::vector<oracle::Tuple> out;
  for (const auto& img : sigma.images()) out.push_back(img.exps());
  return out;
}

inline oracle::Vec to_vec(const gralg::AlgebraElement& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

inline gralg::AlgebraElement from_vec(const gralg::GroupAlgebra& alg, const oracle::Vec& v) {
  return alg.from_words(std::vector<std::uint8_t>(v.begin(), v.end()));
}

inline gralg::AlgebraElement random_element(const gralg::GroupAlgebra& alg, Rng& rng) {
  std::vector<std::uint8_t> c(alg.dimension());
  for (auto& w : c) w = static_cast<std::uint8_t>(rng.below(alg.field().order()));
  return alg.from_words(std::move(c));
}

}  // namespace testing_support
