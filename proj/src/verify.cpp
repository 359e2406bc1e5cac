#include "gralg/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gralg/formulas.hpp"

namespace gralg {

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
    case CheckStatus::Info: return "INFO";
  }
  return "UNKNOWN";
}

bool SuiteReport::pass() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = pass();
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"observed", c.observed}, {"expected", c.expected},
                   {"status", std::string(to_string(c.status))}});
  }
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << to_string(c.status) << ": " << c.name << " (observed " << c.observed << ", expected " << c.expected
       << ")\n";
  }
  os << suite << ": " << (pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::vector<std::string> suite_names() { return {"lemma3", "lemma5", "lemma6", "theorem1", "example-c8xc2"}; }

namespace {

std::string list_text(const std::vector<std::uint64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  template <typename A, typename B>
  void equal(std::string name, const A& observed, const B& expected) {
    add(std::move(name), text(observed), text(expected), observed == expected);
  }
  void truth(std::string name, bool ok, std::string observed, std::string expected) {
    add(std::move(name), std::move(observed), std::move(expected), ok);
  }
  void skip(std::string name, const std::string& reason) {
    report_.checks.push_back({std::move(name), reason, "-", CheckStatus::Skipped});
  }
  void info(std::string name, std::string observed, std::string note) {
    report_.checks.push_back({std::move(name), std::move(observed), std::move(note), CheckStatus::Info});
  }
  SuiteReport take() { return std::move(report_); }

 private:
  static std::string text(const std::string& s) { return s; }
  static std::string text(const char* s) { return s; }
  static std::string text(bool b) { return b ? "true" : "false"; }
  static std::string text(const std::vector<std::uint64_t>& v) { return list_text(v); }
  template <typename T>
  static std::string text(const T& v) { return std::to_string(v); }

  void add(std::string name, std::string observed, std::string expected, bool ok) {
    report_.checks.push_back({std::move(name), std::move(observed), std::move(expected),
                              ok ? CheckStatus::Pass : CheckStatus::Fail});
  }

  SuiteReport report_;
};

int cyclic_n(const SuiteConfig& config) {
  if (config.n <= 2) throw std::invalid_argument("suite requires n > 2");
  return config.n;
}

SuiteReport lemma3(const SuiteConfig& config) {
  Recorder r("lemma3");
  const int n = cyclic_n(config);
  const std::uint32_t q = config.field.order();
  const AbelianGroup group = AbelianGroup::cyclic(n);
  const GroupAlgebra algebra(config.field, group);
  const Involution sigma3 = cyclic_sigma3(group);
  const int k = config.field.degree();

  const Subgroup h = symmetric_group_elements(sigma3);
  const std::vector<GroupElement> top{group.generator(0).pow(std::int64_t{1} << (n - 1))};
  r.truth("G_sigma3 = <a^{2^{n-1}}>", h == generate(group, top), std::to_string(h.size()) + " elements", "{1, a^" + std::to_string(1 << (n - 1)) + "}");

  const SubgroupIdeal ideal(algebra, h);
  r.equal("log2 |I(H)|", ideal.size_log2(), k * (1 << (n - 1)));
  try {
    const SHSubgroup sh = s_h_subgroup(algebra, config.options);
    r.equal("|S_H| from generators", sh.order(), 2 * (std::uint64_t{1} << (k * (1 << (n - 2)))));
    r.truth("S_H generator closure = N_Psi image", sh.from_generators == sh.from_preimage,
            std::to_string(sh.from_preimage.size()) + " image elements", std::to_string(sh.order()) + " elements");
    r.truth("a^{2^{n-1}} in S_H", sh.contains(algebra.basis(top[0])), "checked", "member");
    std::uint64_t bad = 0;
    for (std::uint32_t gamma = 2; gamma < q; ++gamma) {
      if (sh.contains(algebra.basis(top[0]).scaled(config.field.element(gamma)))) ++bad;
    }
    r.equal("gamma a^{2^{n-1}} in S_H for gamma != 1", bad, std::uint64_t{0});

    const Sigma3Decomposition d = sigma3_decomposition(algebra, config.options);
    r.equal("|I(H)| |V_*(F(G/H))| / |S_H| = |V_sigma3|", d.predicted_order(), d.enumerated_order);
    r.equal("|V_sigma3| = q^{2^{n-1}}", d.enumerated_order, order_sigma3(n, q).value());
  } catch (const CapacityError& e) {
    r.skip("S_H and order decomposition", e.what());
  }
  return r.take();
}

SuiteReport lemma5(const SuiteConfig& config) {
  Recorder r("lemma5");
  const int n = cyclic_n(config);
  const GroupAlgebra algebra(config.field, AbelianGroup::cyclic(n));
  const Involution sigma4 = cyclic_sigma4(algebra.group());
  std::uint64_t total = 0, closed_ok = 0, cor_ok = 0;
  auto visit = [&](const AlgebraElement& x) {
    ++total;
    if (sigma4_product_closed_form(x) == x * apply_involution(sigma4, x)) ++closed_ok;
    if (check_corollary1(x)) ++cor_ok;
  };
  std::string mode;
  try {
    const std::uint64_t count = require_enumerable(algebra, config.options.budget);
    for_each_normalized_unit(algebra, 0, count, [&](std::span<const std::uint8_t> c) {
      visit(algebra.from_words(std::vector<std::uint8_t>(c.begin(), c.end())));
    });
    mode = "exhaustive";
  } catch (const CapacityError&) {
    std::mt19937_64 rng(config.seed);
    for (std::uint64_t i = 0; i < config.samples; ++i) visit(random_normalized_unit(algebra, rng));
    mode = "random";
  }
  r.info("sweep", mode, std::to_string(total) + " units");
  r.equal("closed form = x x^sigma4", closed_ok, total);
  r.equal("odd coefficients cancel and mirror", cor_ok, total);
  return r.take();
}

SuiteReport lemma6(const SuiteConfig& config) {
  Recorder r("lemma6");
  const int n = cyclic_n(config);
  const std::uint32_t q = config.field.order();
  const int k = config.field.degree();
  const GroupAlgebra algebra(config.field, AbelianGroup::cyclic(n));
  const Involution sigma4 = cyclic_sigma4(algebra.group());
  try {
    const auto v = compute_unitary_subgroup(algebra, sigma4, Method::Enumeration, config.options);
    const auto& elems = v.subgroup->elements;
    r.equal("|V_sigma4|", v.report.order(), order_sigma4(n, q).value());
    const bool squares = std::all_of(elems.begin(), elems.end(), [](const AlgebraElement& u) { return (u * u).is_one(); });
    r.truth("every element squares to 1", squares, squares ? "all" : "not all", "all");
    r.equal("exponent", *v.report.exponent, std::uint64_t{2});
    const StarImage s = compute_star_image(algebra, sigma4, config.options);
    r.equal("|S_sigma4|", s.order(), std::uint64_t{1} << (k * ((1 << (n - 1)) - 1)));
    r.equal("|V| = |V_sigma4| |S_sigma4|", v.report.order() * s.order(), require_enumerable(algebra, config.options.budget));
  } catch (const CapacityError& e) {
    r.skip("V_sigma4 enumeration", e.what());
  }
  return r.take();
}

SuiteReport theorem1(const SuiteConfig& config) {
  Recorder r("theorem1");
  const int n = cyclic_n(config);
  const std::uint32_t q = config.field.order();
  const AbelianGroup group = AbelianGroup::cyclic(n);
  const GroupAlgebra algebra(config.field, group);
  try {
    const auto v2 = compute_unitary_subgroup(algebra, Involution::parse(group, "sigma2"), Method::Enumeration, config.options);
    const auto v3 = compute_unitary_subgroup(algebra, Involution::parse(group, "sigma3"), Method::Enumeration, config.options);
    const auto v4 = compute_unitary_subgroup(algebra, Involution::parse(group, "sigma4"), Method::Enumeration, config.options);
    const auto& i2 = *v2.report.invariants;
    const auto& i3 = *v3.report.invariants;
    const auto& i4 = *v4.report.invariants;
    r.info("invariants V_sigma2", list_text(i2), "");
    r.info("invariants V_sigma3", list_text(i3), "");
    r.info("invariants V_sigma4", list_text(i4), "");
    r.truth("invariants pairwise distinct", i2 != i3 && i2 != i4 && i3 != i4,
            list_text(i2) + " " + list_text(i3) + " " + list_text(i4), "pairwise distinct");
    r.equal("|V_sigma2| = 2 q^{2^{n-1}}", v2.report.order(), order_canonical_cyclic(n, q).value());
    const auto a2 = algebra.basis(group.generator(0).pow(2));
    r.truth("a^2 in V_sigma3", v3.subgroup->contains(a2), v3.subgroup->contains(a2) ? "member" : "absent", "member");
    r.truth("exponent V_sigma3 >= 2^{n-1}", *v3.report.exponent >= (std::uint64_t{1} << (n - 1)),
            std::to_string(*v3.report.exponent), ">= " + std::to_string(1u << (n - 1)));
    r.equal("exponent V_sigma4", *v4.report.exponent, std::uint64_t{2});
  } catch (const CapacityError& e) {
    r.skip("unitary subgroups", e.what());
  }
  return r.take();
}

SuiteReport example_c8xc2(const SuiteConfig& config) {
  Recorder r("example-c8xc2");
  const AbelianGroup group = AbelianGroup::parse("c8xc2");
  const GroupAlgebra algebra(config.field, group);
  const auto all = enumerate_involutive_automorphisms(group);
  r.info("involutive automorphisms (brute force)", std::to_string(all.size()), "table lists 6");
  try {
    std::vector<std::vector<std::uint64_t>> inv;
    for (const auto& sigma : named_involutions(group)) {
      const auto res = compute_unitary_subgroup(algebra, sigma, Method::Enumeration, config.options);
      r.info("V_" + sigma.label() + " (" + sigma.to_string() + ")",
             "order " + std::to_string(res.report.order()) + " invariants " + list_text(*res.report.invariants), "");
      inv.push_back(*res.report.invariants);
    }
    r.equal("invariants V_sigma2 = invariants V_sigma4", list_text(inv[1]), list_text(inv[3]));
    const bool klein = inv[1] == std::vector<std::uint64_t>{2, 2};
    r.info("V_sigma2 is C2xC2", klein ? "yes" : "no", "recorded claim: \"isomorphic to Klein four-group C_2 x C_2\" (not asserted)");
  } catch (const CapacityError& e) {
    r.skip("unitary subgroups", e.what());
  }
  return r.take();
}

}  // namespace

SuiteReport run_suite(std::string_view suite, const SuiteConfig& config) {
  if (suite == "lemma3") return lemma3(config);
  if (suite == "lemma5") return lemma5(config);
  if (suite == "lemma6") return lemma6(config);
  if (suite == "theorem1") return theorem1(config);
  if (suite == "example-c8xc2") return example_c8xc2(config);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace gralg
