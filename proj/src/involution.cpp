#include "gralg/involution.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gralg {

Involution::Involution(AbelianGroup group, std::vector<GroupElement> images, std::string label)
    : group_(std::move(group)), images_(std::move(images)), label_(std::move(label)) {
  if (images_.size() != static_cast<std::size_t>(group_.rank())) {
    throw std::invalid_argument("need one image per generator of " + group_.name());
  }
  for (int i = 0; i < group_.rank(); ++i) {
    const auto& img = images_[static_cast<std::size_t>(i)];
    if (!(img.group() == group_)) throw std::invalid_argument("generator image from a different group");
    // The only relations of a product of cyclic groups are the factor orders.
    if (group_.factor_order(i) % img.order() != 0) {
      throw std::invalid_argument("image " + img.to_string() + " of generator " +
                                  std::string(1, static_cast<char>('a' + i)) +
                                  " has order not dividing " + std::to_string(group_.factor_order(i)));
    }
  }
  const std::uint32_t n = group_.order();
  permutation_.resize(n);
  std::vector<bool> hit(n, false);
  for (std::uint32_t g = 0; g < n; ++g) {
    const auto e = group_.decode(g);
    std::uint32_t image = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      image = group_.mul_index(image, group_.pow_index(images_[i].index(), e[i]));
    }
    permutation_[g] = image;
    if (hit[image]) throw std::invalid_argument("generator images do not define a bijection");
    hit[image] = true;
  }
  for (std::uint32_t g = 0; g < n; ++g) {
    if (permutation_[permutation_[g]] != g) {
      throw std::invalid_argument("automorphism " + to_string() + " does not square to the identity");
    }
  }
  if (label_.empty()) label_ = to_string();
}

Involution Involution::identity(const AbelianGroup& group) {
  std::vector<GroupElement> images;
  for (int i = 0; i < group.rank(); ++i) images.push_back(group.generator(i));
  return Involution(group, std::move(images));
}

namespace {

std::string compact(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

GroupElement parse_group_word(const AbelianGroup& group, std::string_view word) {
  std::vector<std::int64_t> exps(static_cast<std::size_t>(group.rank()), 0);
  std::size_t pos = 0;
  if (word == "1") return group.identity();
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
      ++pos;
      const std::size_t start = pos;
      if (pos < word.size() && word[pos] == '-') ++pos;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
      const std::string digits(word.substr(start, pos - start));
      if (digits.empty() || digits == "-") throw std::invalid_argument("missing exponent in '" + std::string(word) + "'");
      e = std::stoll(digits);
    }
    exps[static_cast<std::size_t>(gen)] += e;
  }
  return group.element(exps);
}

GroupElement word(const AbelianGroup& g, std::int64_t a, std::int64_t b = 0) {
  std::vector<std::int64_t> e{a};
  if (g.rank() == 2) e.push_back(b);
  return g.element(e);
}

}  // namespace

Involution Involution::parse(const AbelianGroup& group, std::string_view text) {
  const std::string s = compact(text);
  if (s.rfind("sigma", 0) == 0) {
    for (auto& inv : named_involutions(group)) {
      if (inv.label() == s) return inv;
    }
    throw std::invalid_argument("no involution named '" + s + "' for " + group.name());
  }
  // Generators not mentioned are fixed.
  std::vector<GroupElement> images;
  for (int i = 0; i < group.rank(); ++i) images.push_back(group.generator(i));
  std::string_view rest = s;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto arrow = item.find("->");
    if (arrow != 1) throw std::invalid_argument("expected 'g->word' in '" + std::string(item) + "'");
    const int gen = item[0] - 'a';
    if (gen < 0 || gen >= group.rank()) {
      throw std::invalid_argument("unknown generator in '" + std::string(item) + "'");
    }
    images[static_cast<std::size_t>(gen)] = parse_group_word(group, item.substr(3));
  }
  Involution out(group, std::move(images));
  for (auto& named : named_involutions(group)) {
    if (named == out) return named;
  }
  return out;
}

GroupElement Involution::apply(const GroupElement& g) const {
  if (!(g.group() == group_)) throw std::invalid_argument("element from a different group");
  return {group_, permutation_[g.index()]};
}

std::vector<std::uint32_t> Involution::image_indices() const {
  std::vector<std::uint32_t> out;
  for (const auto& img : images_) out.push_back(img.index());
  return out;
}

std::string Involution::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('a' + i);
    out += "->" + images_[i].to_string();
  }
  return out.empty() ? "id" : out;
}

std::vector<Involution> named_involutions(const AbelianGroup& group) {
  std::vector<Involution> out;
  const auto exps = group.exponents();
  if (exps.size() == 1 && exps[0] > 2) {
    const std::int64_t half = std::int64_t{1} << (exps[0] - 1);
    out.emplace_back(group, std::vector{word(group, 1)}, "sigma1");
    out.emplace_back(group, std::vector{word(group, -1)}, "sigma2");
    out.emplace_back(group, std::vector{word(group, half - 1)}, "sigma3");
    out.emplace_back(group, std::vector{word(group, half + 1)}, "sigma4");
  } else if (exps.size() == 2 && exps[0] == 3 && exps[1] == 1) {
    // b -> a^4 b in sigma4 and sigma5: a^2 b has order 4 and cannot be the image of b.
    out.emplace_back(group, std::vector{word(group, 1), word(group, 0, 1)}, "sigma1");
    out.emplace_back(group, std::vector{word(group, 3, 1), word(group, 0, 1)}, "sigma2");
    out.emplace_back(group, std::vector{word(group, 1, 1), word(group, 0, 1)}, "sigma3");
    out.emplace_back(group, std::vector{word(group, 1), word(group, 4, 1)}, "sigma4");
    out.emplace_back(group, std::vector{word(group, 3), word(group, 4, 1)}, "sigma5");
    out.emplace_back(group, std::vector{word(group, 3), word(group, 0, 1)}, "sigma6");
  }
  return out;
}

namespace {

// Calls visit(perm) for every bijective homomorphism.
template <typename Visit>
void for_each_automorphism(const AbelianGroup& group, Visit&& visit) {
  const int r = group.rank();
  std::vector<std::vector<std::uint32_t>> candidates(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (std::uint32_t g = 0; g < group.order(); ++g) {
      if (group.factor_order(i) % group.order_of_index(g) == 0) candidates[static_cast<std::size_t>(i)].push_back(g);
    }
  }
  std::vector<std::uint32_t> choice(static_cast<std::size_t>(r));
  std::vector<std::uint32_t> perm(group.order());
  std::vector<bool> hit(group.order());
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      std::fill(hit.begin(), hit.end(), false);
      for (std::uint32_t g = 0; g < group.order(); ++g) {
        const auto e = group.decode(g);
        std::uint32_t image = 0;
        for (std::size_t j = 0; j < e.size(); ++j) image = group.mul_index(image, group.pow_index(choice[j], e[j]));
        if (hit[image]) return;
        hit[image] = true;
        perm[g] = image;
      }
      visit(choice, perm);
      return;
    }
    for (auto c : candidates[static_cast<std::size_t>(i)]) {
      choice[static_cast<std::size_t>(i)] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Involution> enumerate_involutive_automorphisms(const AbelianGroup& group) {
  const auto named = named_involutions(group);
  std::vector<Involution> out;
  for_each_automorphism(group, [&](const std::vector<std::uint32_t>& choice, const std::vector<std::uint32_t>& perm) {
    for (std::uint32_t g = 0; g < perm.size(); ++g) {
      if (perm[perm[g]] != g) return;
    }
    std::vector<GroupElement> images;
    for (auto c : choice) images.emplace_back(group, c);
    Involution inv(group, std::move(images));
    for (const auto& n : named) {
      if (n == inv) inv.set_label(n.label());
    }
    out.push_back(std::move(inv));
  });
  // Candidates are visited in ascending index order per generator, which is
  // already lexicographic; sort anyway so the contract does not depend on it.
  std::sort(out.begin(), out.end(), [](const Involution& x, const Involution& y) {
    return x.image_indices() < y.image_indices();
  });
  return out;
}

std::uint64_t count_automorphisms(const AbelianGroup& group) {
  std::uint64_t count = 0;
  for_each_automorphism(group, [&](const auto&, const auto&) { ++count; });
  return count;
}

AutomorphismGroupShape aut_group_order(const AbelianGroup& group) {
  if (!group.is_cyclic()) throw std::invalid_argument("aut_group_order expects a cyclic group");
  const int n = group.exponents()[0];
  if (n <= 2) throw std::invalid_argument("aut_group_order is defined here only for C_{2^n} with n > 2");
  AutomorphismGroupShape shape{std::uint64_t{1} << (n - 1), {std::uint64_t{1} << (n - 2), 2}};
  if (n <= 5 && count_automorphisms(group) != shape.order) {
    throw std::logic_error("brute-force automorphism count disagrees with 2^(n-1)");
  }
  return shape;
}

Subgroup symmetric_group_elements(const Involution& sigma) {
  Subgroup out;
  const auto perm = sigma.permutation();
  for (std::uint32_t g = 0; g < perm.size(); ++g) {
    if (perm[g] == g) out.emplace_back(sigma.group(), g);
  }
  return out;
}

Involution induced_involution(const Involution& sigma, const QuotientGroup& q) {
  if (!(sigma.group() == q.source)) throw std::invalid_argument("involution and quotient disagree on the group");
  for (const auto& h : q.kernel) {
    if (q.projection[sigma.permutation()[h.index()]] != 0) {
      throw std::invalid_argument("involution does not preserve the kernel subgroup");
    }
  }
  std::vector<GroupElement> images;
  for (int i = 0; i < q.target.rank(); ++i) {
    const std::uint32_t lift = q.section[q.target.generator(i).index()];
    images.emplace_back(q.target, q.projection[sigma.permutation()[lift]]);
  }
  return Involution(q.target, std::move(images));
}

}  // namespace gralg
