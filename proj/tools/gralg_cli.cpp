// Batch driver for unitary subgroup computations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gralg/formulas.hpp"
#include "gralg/involution.hpp"
#include "gralg/report.hpp"
#include "gralg/verify.hpp"

namespace {

struct CommonOptions {
  std::string group = "c8";
  std::string field = "2";
  std::string modulus;
  std::vector<std::string> involutions{"all"};
  std::string method = "auto";
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "table";
};

void add_algebra_options(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--group", o.group, "group, e.g. c8 or c8xc2")->capture_default_str();
  cmd->add_option("--field", o.field, "field order q = 2^k, e.g. 4 or 2^3")->capture_default_str();
  cmd->add_option("--modulus", o.modulus, "irreducible modulus as a bit string, e.g. 0b111");
  cmd->add_option("--involution", o.involutions,
                  "sigma1.., explicit images like a->a^3,b->b, 'all' or 'none'")
      ->capture_default_str();
  cmd->add_option("--budget", o.budget, "maximum number of units to enumerate")->capture_default_str();
}

std::vector<gralg::Involution> select_involutions(const gralg::AbelianGroup& group,
                                                  const std::vector<std::string>& selection) {
  std::vector<gralg::Involution> out;
  for (const auto& s : selection) {
    if (s == "none" || s.empty()) continue;
    if (s == "all") {
      for (auto& inv : gralg::order_for_display(gralg::enumerate_involutive_automorphisms(group))) out.push_back(inv);
    } else {
      out.push_back(gralg::Involution::parse(group, s));
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

int cmd_orders(const CommonOptions& o) {
  const auto group = gralg::AbelianGroup::parse(o.group);
  const gralg::GroupAlgebra algebra(gralg::Field::parse(o.field, o.modulus), group);
  const auto involutions = select_involutions(group, o.involutions);
  gralg::EnumerationOptions options;
  options.budget = o.budget;
  const auto rows = gralg::orders_table(algebra, involutions, gralg::parse_method(o.method), options);

  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      auto row = gralg::to_json(r);
      row["group"] = group.name();
      row["field"] = algebra.field().name();
      j.push_back(std::move(row));
    }
    emit(j.dump(2) + "\n", o.out);
  } else if (o.format == "csv") {
    emit(gralg::orders_csv(rows), o.out);
  } else {
    emit(algebra.name() + "\n" + gralg::format_orders_table(rows), o.out);
  }
  for (const auto& r : rows) {
    if (r.computed && !r.agrees()) return 1;
  }
  return 0;
}

int cmd_predict(const CommonOptions& o) {
  const auto group = gralg::AbelianGroup::parse(o.group);
  const auto field = gralg::Field::parse(o.field, o.modulus);
  nlohmann::json j = nlohmann::json::array();
  for (const auto& sigma : select_involutions(group, o.involutions)) {
    if (const auto p = gralg::predict_order(sigma, field.order())) {
      auto r = gralg::to_json(gralg::formula_report(group, field, sigma, *p));
      r["source"] = std::string(gralg::to_string(p->source));
      j.push_back(std::move(r));
    }
  }
  emit(j.dump(2) + "\n", o.out);
  return 0;
}

int cmd_verify(const std::string& suite, int n, const CommonOptions& o, std::uint64_t samples) {
  gralg::SuiteConfig config;
  config.n = n;
  config.field = gralg::Field::parse(o.field, o.modulus);
  config.options.budget = o.budget;
  config.seed = o.seed;
  config.samples = samples;
  const auto report = gralg::run_suite(suite, config);
  emit(o.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text(), o.out);
  return report.pass() ? 0 : 1;
}

int cmd_report(const CommonOptions& o, const std::vector<std::string>& groups, const std::vector<std::uint32_t>& fields,
               bool timing) {
  gralg::MatrixConfig config;
  if (!groups.empty()) config.groups = groups;
  if (!fields.empty()) config.fields = fields;
  config.options.budget = o.budget;
  config.seed = o.seed;
  config.timing = timing;
  const auto cells = gralg::run_matrix(config);
  emit(o.format == "csv" ? gralg::matrix_csv(cells) : gralg::matrix_json(config, cells).dump(2) + "\n", o.out);
  for (const auto& c : cells) {
    if (c.row.computed && !c.row.agrees()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary subgroups of modular group algebras of abelian 2-groups"};
  app.require_subcommand(1);
  // Worker count comes from GRALG_WORKERS.

  CommonOptions orders_opts;
  auto* orders = app.add_subcommand("orders", "order, exponent and invariants of every selected V_sigma");
  add_algebra_options(orders, orders_opts);
  orders->add_option("--method", orders_opts.method, "auto, enumeration or image-count")->capture_default_str();
  orders->add_option("--format", orders_opts.format, "table, json or csv")->capture_default_str();
  orders->add_option("--out", orders_opts.out, "output file (default stdout)");

  CommonOptions predict_opts;
  auto* predict = app.add_subcommand("predict", "closed-form order predictions");
  add_algebra_options(predict, predict_opts);
  predict->add_option("--out", predict_opts.out, "output file (default stdout)");

  CommonOptions verify_opts;
  verify_opts.format = "text";
  std::string suite;
  int n = 3;
  std::uint64_t samples = 10000;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "lemma3, lemma5, lemma6, theorem1 or example-c8xc2")
      ->required()
      ->check(CLI::IsMember(gralg::suite_names()));
  verify->add_option("--n", n, "cyclic group C_{2^n}")->capture_default_str();
  verify->add_option("--field", verify_opts.field, "field order")->capture_default_str();
  verify->add_option("--modulus", verify_opts.modulus, "irreducible modulus as a bit string");
  verify->add_option("--budget", verify_opts.budget, "maximum number of units to enumerate")->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "seed for randomized sweeps")->capture_default_str();
  verify->add_option("--samples", samples, "random samples when a sweep exceeds the budget")->capture_default_str();
  verify->add_option("--format", verify_opts.format, "text or json")->capture_default_str();
  verify->add_option("--out", verify_opts.out, "output file (default stdout)");

  CommonOptions report_opts;
  report_opts.format = "json";
  std::vector<std::string> report_groups;
  std::vector<std::uint32_t> report_fields;
  bool timing = false;
  auto* report = app.add_subcommand("report", "write the full order matrix");
  report->add_option("--group", report_groups, "groups (default c8 c16 c8xc2)");
  report->add_option("--field", report_fields, "field orders (default 2 4 8)");
  report->add_option("--budget", report_opts.budget, "maximum number of units to enumerate")->capture_default_str();
  report->add_option("--seed", report_opts.seed, "seed recorded in the report")->capture_default_str();
  report->add_option("--format", report_opts.format, "json or csv")->capture_default_str();
  report->add_option("--out", report_opts.out, "output file (default stdout)");
  report->add_flag("--timing", timing, "record wall-clock times (breaks byte-identical reruns)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*orders) return cmd_orders(orders_opts);
    if (*predict) return cmd_predict(predict_opts);
    if (*verify) return cmd_verify(suite, n, verify_opts, samples);
    if (*report) return cmd_report(report_opts, report_groups, report_fields, timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
