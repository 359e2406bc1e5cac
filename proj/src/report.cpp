#include "gralg/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace gralg {

namespace {

nlohmann::json order_json(int log2) {
  if (log2 < 64) return std::uint64_t{1} << log2;
  return pow2_decimal(log2);
}

std::string invariants_text(const std::optional<std::vector<std::uint64_t>>& inv) {
  if (!inv) return "-";
  if (inv->empty()) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < inv->size(); ++i) out += (i ? "," : "") + std::to_string((*inv)[i]);
  return out + "]";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::json to_json(const SubgroupReport& report) {
  nlohmann::json j;
  j["group"] = report.group;
  j["field"] = report.field;
  j["sigma"] = report.sigma;
  j["order"] = order_json(report.order_log2);
  j["exponent"] = report.exponent ? nlohmann::json(*report.exponent) : nlohmann::json(nullptr);
  j["invariants"] = report.invariants ? nlohmann::json(*report.invariants) : nlohmann::json(nullptr);
  j["method"] = std::string(to_string(report.method));
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

SubgroupReport formula_report(const AbelianGroup& group, const Field& field, const Involution& sigma,
                              const OrderPrediction& prediction) {
  SubgroupReport r;
  r.group = group.name();
  r.field = field.name();
  r.sigma = sigma.label();
  r.order_log2 = prediction.log2_value;
  r.method = Method::Formula;
  if (prediction.elementary_abelian) {
    r.exponent = prediction.log2_value == 0 ? 1 : 2;
    r.invariants = std::vector<std::uint64_t>(static_cast<std::size_t>(prediction.log2_value), 2);
  }
  return r;
}

bool OrdersRow::agrees() const {
  if (!computed) return false;
  if (!predicted) return true;
  return predicted->log2_value == computed->order_log2;
}

std::vector<Involution> order_for_display(std::vector<Involution> involutions) {
  const auto named = [](const Involution& s) {
    return s.label().rfind("sigma", 0) == 0 ? std::stoi(s.label().substr(5)) : 1 << 30;
  };
  std::stable_sort(involutions.begin(), involutions.end(),
                   [&](const Involution& x, const Involution& y) { return named(x) < named(y); });
  return involutions;
}

std::vector<OrdersRow> orders_table(const GroupAlgebra& algebra, std::span<const Involution> involutions,
                                    Method method, const EnumerationOptions& options) {
  std::vector<OrdersRow> rows;
  for (const auto& sigma : involutions) {
    OrdersRow row;
    row.sigma = sigma.label();
    row.images = sigma.to_string();
    row.predicted = predict_order(sigma, algebra.field().order());
    try {
      row.computed = compute_unitary_subgroup(algebra, sigma, method, options).report;
    } catch (const CapacityError& e) {
      row.skipped = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const OrdersRow& row) {
  nlohmann::json j;
  if (row.computed) {
    j = to_json(*row.computed);
  } else {
    j["sigma"] = row.sigma;
    j["order"] = nullptr;
    j["exponent"] = nullptr;
    j["invariants"] = nullptr;
    j["method"] = nullptr;
    j["elapsed_ms"] = nullptr;
  }
  j["images"] = row.images;
  j["predicted"] = row.predicted ? order_json(row.predicted->log2_value) : nlohmann::json(nullptr);
  j["predicted_source"] = row.predicted ? nlohmann::json(std::string(to_string(row.predicted->source))) : nlohmann::json(nullptr);
  j["agree"] = row.agrees();
  j["status"] = row.computed ? "ok" : "skipped";
  if (!row.skipped.empty()) j["reason"] = row.skipped;
  return j;
}

std::string format_orders_table(std::span<const OrdersRow> rows) {
  std::vector<std::vector<std::string>> cells{{"sigma", "images", "predicted", "order", "exponent", "invariants", "agree"}};
  for (const auto& r : rows) {
    std::vector<std::string> line{r.sigma == r.images ? "-" : r.sigma, r.images,
                                  r.predicted ? r.predicted->decimal() : "-"};
    if (r.computed) {
      line.push_back(pow2_decimal(r.computed->order_log2));
      line.push_back(r.computed->exponent ? std::to_string(*r.computed->exponent) : "-");
      line.push_back(invariants_text(r.computed->invariants));
      line.push_back(r.agrees() ? "yes" : "NO");
    } else {
      line.push_back("SKIPPED: " + r.skipped);
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(7, 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i + 1 < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i + 1 < line.size()) {
        os << std::left << std::setw(static_cast<int>(width[i] + 2)) << line[i];
      } else {
        os << line[i];
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string orders_csv(std::span<const OrdersRow> rows) {
  std::ostringstream os;
  os << "sigma,images,predicted,order,exponent,invariants,method,agree,status\n";
  for (const auto& r : rows) {
    os << csv_escape(r.sigma) << ',' << csv_escape(r.images) << ','
       << (r.predicted ? r.predicted->decimal() : "") << ',';
    if (r.computed) {
      os << pow2_decimal(r.computed->order_log2) << ','
         << (r.computed->exponent ? std::to_string(*r.computed->exponent) : "") << ','
         << csv_escape(invariants_text(r.computed->invariants)) << ',' << to_string(r.computed->method) << ','
         << (r.agrees() ? "true" : "false") << ",ok\n";
    } else {
      os << ",,,,false,skipped\n";
    }
  }
  return os.str();
}

std::vector<MatrixCell> run_matrix(const MatrixConfig& config) {
  std::vector<MatrixCell> cells;
  for (const auto& g : config.groups) {
    const AbelianGroup group = AbelianGroup::parse(g);
    const auto involutions = order_for_display(enumerate_involutive_automorphisms(group));
    for (auto q : config.fields) {
      const GroupAlgebra algebra(Field::with_order(q), group);
      for (auto& row : orders_table(algebra, involutions, Method::Automatic, config.options)) {
        if (row.computed && !config.timing) row.computed->elapsed_ms = 0.0;
        cells.push_back({group.name(), q, std::move(row)});
      }
    }
  }
  return cells;
}

nlohmann::json matrix_json(const MatrixConfig& config, std::span<const MatrixCell> cells) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["seed"] = config.seed;
  j["budget"] = config.options.budget;
  j["groups"] = config.groups;
  j["fields"] = config.fields;
  auto& arr = j["cells"] = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json cell = to_json(c.row);
    cell["group"] = c.group;
    cell["field"] = Field::with_order(c.field).name();
    arr.push_back(std::move(cell));
  }
  return j;
}

std::string matrix_csv(std::span<const MatrixCell> cells) {
  std::ostringstream os;
  os << "# schema_version=" << kReportSchemaVersion << '\n';
  os << "group,field,sigma,images,predicted,order,exponent,invariants,method,agree,status\n";
  for (const auto& c : cells) {
    const auto& r = c.row;
    os << c.group << ',' << Field::with_order(c.field).name() << ',' << csv_escape(r.sigma) << ','
       << csv_escape(r.images) << ',' << (r.predicted ? r.predicted->decimal() : "") << ',';
    if (r.computed) {
      os << pow2_decimal(r.computed->order_log2) << ','
         << (r.computed->exponent ? std::to_string(*r.computed->exponent) : "") << ','
         << csv_escape(invariants_text(r.computed->invariants)) << ',' << to_string(r.computed->method) << ','
         << (r.agrees() ? "true" : "false") << ",ok\n";
    } else {
      os << ",,,,false,skipped\n";
    }
  }
  return os.str();
}

}  // namespace gralg
