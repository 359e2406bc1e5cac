#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "gralg/formulas.hpp"
#include "gralg/group_algebra.hpp"
#include "gralg/unitary.hpp"

namespace gralg {

inline constexpr int kReportSchemaVersion = 1;

/// {group, field, sigma, order, exponent, invariants, method, elapsed_ms}.
/// Orders above 2^64 are written as decimal strings; unknown exponent and
/// invariants as null.
nlohmann::json to_json(const SubgroupReport& report);

/// The formula prediction as a SubgroupReport with method "formula".
SubgroupReport formula_report(const AbelianGroup& group, const Field& field, const Involution& sigma,
                              const OrderPrediction& prediction);

/// One row of the `orders` table.
struct OrdersRow {
  std::string sigma;
  std::string images;
  std::optional<OrderPrediction> predicted;
  std::optional<SubgroupReport> computed;
  std::string skipped;  ///< reason, empty when computed

  /// No formula, or formula equal to the computed order.
  bool agrees() const;
};

/// Named involutions first in table order, then the rest in enumeration order.
std::vector<Involution> order_for_display(std::vector<Involution> involutions);

/// One row per involution.  Capacity overruns become skipped rows.
std::vector<OrdersRow> orders_table(const GroupAlgebra& algebra, std::span<const Involution> involutions,
                                    Method method, const EnumerationOptions& options);

nlohmann::json to_json(const OrdersRow& row);
std::string format_orders_table(std::span<const OrdersRow> rows);
std::string orders_csv(std::span<const OrdersRow> rows);

struct MatrixConfig {
  std::vector<std::string> groups{"c8", "c16", "c8xc2"};
  std::vector<std::uint32_t> fields{2, 4, 8};
  EnumerationOptions options;
  std::uint64_t seed = 1;
  /// Keep wall-clock times; off by default so reruns are byte-identical.
  bool timing = false;
};

/// Every (group, field, involution) cell of the matrix.
struct MatrixCell {
  std::string group;
  std::uint32_t field = 0;
  OrdersRow row;
};

std::vector<MatrixCell> run_matrix(const MatrixConfig& config);
nlohmann::json matrix_json(const MatrixConfig& config, std::span<const MatrixCell> cells);
/// First line "# schema_version=1", then a header row, then one row per cell.
std::string matrix_csv(std::span<const MatrixCell> cells);

}  // namespace gralg
