#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbitdist/orbit.hpp"
#include "orbitdist/verify.hpp"

namespace orbitdist {

struct RunOptions {
  int threads = 1;
  uint64_t budget = uint64_t(1) << 26;
  uint64_t seed = 0;
  std::function<void(uint64_t, uint64_t)> progress;
};

// Everything the dist command reports for one subspace.
struct RunReport {
  int p = 0, e = 1, n = 0, q = 0;
  std::vector<uint8_t> modulus;
  std::string subspace;
  int k = 0, t = 1;
  uint64_t orbit_size = 0;
  std::vector<uint64_t> lambda;
  std::map<int, uint64_t> delta;
  std::map<int, uint64_t> pairs;
  std::optional<int> min_distance;
  std::optional<SubfieldShiftCount> shifts;  // shifts of F_{q^{2t}} in U, when 2t | n
  uint64_t seed = 0;
  double wall_ms = 0;
};

RunReport run_distribution(const FieldTower& tower, std::string_view dsl,
                           const RunOptions& opts = {});

nlohmann::json report_to_json(const RunReport& r);
// columns: i, lambda_i, distance, delta, pair_count
std::string report_to_csv(const RunReport& r);

nlohmann::json check_report_to_json(const CheckReport& r);

// A reference subspace with a known intersection distribution, used by
// the reproduce command.
struct ReferenceExample {
  std::string name;
  int p = 0, e = 1, n = 0;
  std::string subspace;
  int k = 0, t = 1;
  std::vector<uint64_t> lambda;
  std::optional<uint64_t> shift_count;
  bool large = false;
};

std::vector<ReferenceExample> parse_reference_examples(const std::string& json_text);
const std::vector<ReferenceExample>& bundled_examples();

struct ReproduceOptions {
  bool skip_large = false;
  int threads = 1;
  const ConwayTable* conway = nullptr;  // bundled table when null
  // override the modulus of the examples over this (p, e*n) field
  std::optional<std::vector<uint8_t>> modulus_override;
  std::function<void(const std::string&, uint64_t, uint64_t)> progress;
};

struct ReproduceRow {
  ReferenceExample example;
  bool skipped = false;
  std::vector<uint64_t> lambda;
  int t = 0;
  uint64_t orbit_size = 0;
  std::optional<uint64_t> shift_count;
  bool exact_match = false;     // λ, t (and shift count when given) all equal
  bool sum_rule_ok = false;     // Σλ = orbit_size - 1
  bool divisibility_ok = false; // the modulus-independent divisibility pattern
  std::string modulus_used;
  double wall_ms = 0;
};

std::vector<ReproduceRow> run_reproduce(const ReproduceOptions& opts = {});

nlohmann::json reproduce_row_to_json(const ReproduceRow& r);

}  // namespace orbitdist
