#pragma once

// Slow reference implementations that share no code with the library.
// Everything here works on plain integers and exponent tuples.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

// Shift-and-reduce product in GF(2)[x]/(modulus).
inline unsigned gf_mul(unsigned a, unsigned b, int degree, unsigned modulus) {
  unsigned acc = 0;
  for (int i = 0; i < degree; ++i) {
    if (b & (1u << i)) acc ^= a << i;
  }
  for (int bit = 2 * degree - 2; bit >= degree; --bit) {
    if (acc & (1u << bit)) acc ^= modulus << (bit - degree);
  }
  return acc;
}

struct Field {
  int degree;
  unsigned modulus;
  unsigned q() const { return 1u << degree; }
  unsigned mul(unsigned a, unsigned b) const { return gf_mul(a, b, degree, modulus); }
};

using Tuple = std::vector<unsigned>;

// Product of cyclic groups of orders 2^exps[i]; elements are exponent tuples.
struct Group {
  std::vector<int> exps;

  unsigned order() const {
    unsigned n = 1;
    for (int e : exps) n <<= e;
    return n;
  }
  unsigned mod(std::size_t i) const { return 1u << exps[i]; }
  // Last coordinate varies fastest.
  unsigned index(const Tuple& t) const {
    unsigned idx = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) idx = idx * mod(i) + t[i] % mod(i);
    return idx;
  }
  Tuple tuple(unsigned idx) const {
    Tuple t(exps.size());
    for (std::size_t i = exps.size(); i-- > 0;) {
      t[i] = idx % mod(i);
      idx /= mod(i);
    }
    return t;
  }
  Tuple add(const Tuple& x, const Tuple& y) const {
    Tuple t(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) t[i] = (x[i] + y[i]) % mod(i);
    return t;
  }
  Tuple scale(const Tuple& x, unsigned m) const {
    Tuple t(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) t[i] = static_cast<unsigned>((std::uint64_t{x[i]} * m) % mod(i));
    return t;
  }
  unsigned element_order(const Tuple& x) const {
    unsigned m = 1;
    Tuple acc = x;
    while (std::any_of(acc.begin(), acc.end(), [](unsigned v) { return v != 0; })) {
      acc = add(acc, x);
      ++m;
    }
    return m;
  }
};

// An automorphism given by generator images.
inline Tuple apply(const Group& g, const std::vector<Tuple>& images, const Tuple& x) {
  Tuple out(g.exps.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) out = g.add(out, g.scale(images[i], x[i]));
  return out;
}

using Vec = std::vector<unsigned>;

// Convolution over exponent tuples.
inline Vec convolve(const Group& g, const Field& f, const Vec& x, const Vec& y) {
  Vec out(g.order(), 0);
  for (unsigned i = 0; i < g.order(); ++i) {
    if (!x[i]) continue;
    const Tuple ti = g.tuple(i);
    for (unsigned j = 0; j < g.order(); ++j) {
      if (!y[j]) continue;
      out[g.index(g.add(ti, g.tuple(j)))] ^= f.mul(x[i], y[j]);
    }
  }
  return out;
}

inline Vec involute(const Group& g, const std::vector<Tuple>& images, const Vec& x) {
  Vec out(g.order(), 0);
  for (unsigned i = 0; i < g.order(); ++i) out[g.index(apply(g, images, g.tuple(i)))] ^= x[i];
  return out;
}

inline Vec one(const Group& g) {
  Vec v(g.order(), 0);
  v[0] = 1;
  return v;
}

inline unsigned augmentation(const Vec& x) {
  unsigned a = 0;
  for (unsigned c : x) a ^= c;
  return a;
}

// Every coefficient vector, in counting order.
template <typename Fn>
void for_each_vector(const Group& g, const Field& f, Fn&& fn) {
  Vec v(g.order(), 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == f.q()) v[i++] = 0;
    if (i == v.size()) return;
  }
}

// V(FG) by filtering all q^|G| vectors on augmentation 1.
inline std::vector<Vec> normalized_units(const Group& g, const Field& f) {
  std::vector<Vec> out;
  for_each_vector(g, f, [&](const Vec& v) {
    if (augmentation(v) == 1) out.push_back(v);
  });
  return out;
}

inline std::vector<Vec> unitary(const Group& g, const Field& f, const std::vector<Tuple>& images) {
  std::vector<Vec> out;
  const Vec e = one(g);
  for (const auto& u : normalized_units(g, f)) {
    if (convolve(g, f, u, involute(g, images, u)) == e) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<Vec> star_image(const Group& g, const Field& f, const std::vector<Tuple>& images) {
  std::set<Vec> out;
  for (const auto& u : normalized_units(g, f)) out.insert(convolve(g, f, u, involute(g, images, u)));
  return out;
}

inline unsigned unit_order(const Group& g, const Field& f, const Vec& u) {
  unsigned m = 1;
  Vec acc = u;
  const Vec e = one(g);
  while (acc != e) {
    acc = convolve(g, f, acc, u);
    ++m;
  }
  return m;
}

// Cyclic decomposition of a finite abelian 2-group from its element orders:
// the number of cyclic factors of order >= 2^t is log2(c_t / c_{t-1}) where
// c_t counts elements of order dividing 2^t.
inline std::vector<std::uint64_t> invariants_from_orders(const std::vector<unsigned>& orders) {
  std::map<int, std::uint64_t> census;  // t -> #{order divides 2^t}
  int top = 0;
  for (unsigned o : orders) {
    int t = 0;
    while ((1u << t) < o) ++t;
    top = std::max(top, t);
  }
  for (int t = 0; t <= top; ++t) {
    census[t] = static_cast<std::uint64_t>(
        std::count_if(orders.begin(), orders.end(), [t](unsigned o) { return o <= (1u << t); }));
  }
  std::vector<int> at_least(top + 2, 0);
  for (int t = 1; t <= top; ++t) {
    std::uint64_t ratio = census[t] / census[t - 1];
    int r = 0;
    while ((std::uint64_t{1} << r) < ratio) ++r;
    at_least[t] = r;
  }
  std::vector<std::uint64_t> inv;
  for (int t = top; t >= 1; --t) {
    const int exact = at_least[t] - (t < top ? at_least[t + 1] : 0);
    for (int i = 0; i < exact; ++i) inv.push_back(std::uint64_t{1} << t);
  }
  return inv;
}

// Generator-image tuples of every automorphism with sigma^2 = id.
inline std::vector<std::vector<Tuple>> involutive_automorphisms(const Group& g) {
  std::vector<std::vector<Tuple>> out;
  const std::size_t r = g.exps.size();
  std::vector<unsigned> choice(r, 0);
  while (true) {
    std::vector<Tuple> images;
    bool ok = true;
    for (std::size_t i = 0; i < r; ++i) {
      images.push_back(g.tuple(choice[i]));
      // the image of a generator of order 2^e must have order dividing 2^e
      if ((g.mod(i) % g.element_order(images.back())) != 0) ok = false;
    }
    if (ok) {
      std::set<unsigned> seen;
      for (unsigned i = 0; i < g.order(); ++i) seen.insert(g.index(apply(g, images, g.tuple(i))));
      ok = seen.size() == g.order();
    }
    if (ok) {
      for (std::size_t i = 0; i < r && ok; ++i) {
        Tuple gen(r, 0);
        gen[i] = 1;
        ok = apply(g, images, apply(g, images, gen)) == gen;
      }
    }
    if (ok) out.push_back(images);
    std::size_t i = r;
    while (i-- > 0) {
      if (++choice[i] < g.order()) break;
      choice[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return out;
  }
}

}  // namespace oracle
