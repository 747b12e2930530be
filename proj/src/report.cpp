#include "orbitdist/report.hpp"

#include <chrono>
#include <sstream>

#include "orbitdist/embedded_data.hpp"
#include "orbitdist/version.hpp"

namespace orbitdist {

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

// the divisibility pattern that holds for any primitive modulus: with
// stabilizer exponent t and D = q^t(q^t+1), every λ_i is a multiple of D
// when n/t is odd; otherwise λ_{2tm} ≡ q^t (mod D) for the shift count
// (q^{2tm}-1)/(q^{2t}-1) and the remaining λ_i are multiples of D
bool divisibility_pattern(const FieldTower& T, const Subspace& u,
                          const IntersectionDistribution& d) {
  const int t = d.t;
  uint64_t qt = 1;
  for (int i = 0; i < t * T.e(); ++i) qt *= uint64_t(T.p());
  const uint64_t D = qt * (qt + 1);
  for (int i = 0; i < d.k; ++i)
    if (i % t != 0 && d.lambda[i] != 0) return false;
  if ((T.n() / t) % 2 != 0) {
    for (uint64_t v : d.lambda)
      if (v % D != 0) return false;
    return true;
  }
  const SubfieldShiftCount sc = count_subfield_line_shifts(u, t);
  const int special = 2 * t * sc.m;
  for (int i = 0; i < d.k; ++i) {
    if (i == special) {
      if (d.lambda[i] < qt || (d.lambda[i] - qt) % D != 0) return false;
    } else if (d.lambda[i] % D != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

RunReport run_distribution(const FieldTower& tower, std::string_view dsl,
                           const RunOptions& opts) {
  const double t0 = now_ms();
  RunReport r;
  r.p = tower.p();
  r.e = tower.e();
  r.n = tower.n();
  r.q = tower.q();
  r.modulus = tower.modulus();
  r.subspace = std::string(dsl);
  r.seed = opts.seed;

  const Subspace u = parse_subspace(dsl, tower);
  r.k = u.k();

  SweepOptions so;
  so.budget = opts.budget;
  so.threads = opts.threads;
  so.progress = opts.progress;
  const IntersectionDistribution d = intersection_distribution(u, so);
  r.t = d.t;
  r.orbit_size = d.orbit_size;
  r.lambda = d.lambda;
  const DistanceDistribution dd = distance_distribution(d);
  r.delta = dd.delta;
  r.min_distance = dd.min_distance;
  r.pairs = pair_counts(d);
  if (tower.n() % (2 * d.t) == 0) r.shifts = count_subfield_line_shifts(u, d.t);
  r.wall_ms = now_ms() - t0;
  return r;
}

nlohmann::json report_to_json(const RunReport& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["e"] = r.e;
  j["q"] = r.q;
  j["n"] = r.n;
  j["modulus"] = r.modulus;
  j["subspace"] = r.subspace;
  j["k"] = r.k;
  j["t"] = r.t;
  j["orbit_size"] = r.orbit_size;
  j["lambda"] = r.lambda;
  nlohmann::json delta = nlohmann::json::object();
  for (const auto& [d, c] : r.delta) delta[std::to_string(d)] = c;
  j["delta"] = delta;
  nlohmann::json pairs = nlohmann::json::object();
  for (const auto& [d, c] : r.pairs) pairs[std::to_string(d)] = c;
  j["pair_counts"] = pairs;
  if (r.min_distance)
    j["min_distance"] = *r.min_distance;
  else
    j["min_distance"] = nullptr;
  if (r.shifts)
    j["shifts"] = {{"m", r.shifts->m}, {"count", r.shifts->count}};
  else
    j["shifts"] = nullptr;
  j["seed"] = r.seed;
  j["wall_ms"] = r.wall_ms;
  j["version"] = kVersion;
  return j;
}

std::string report_to_csv(const RunReport& r) {
  std::ostringstream os;
  os << "i,lambda_i,distance,delta,pair_count\n";
  for (int i = 0; i < r.k; ++i) {
    const int dist = 2 * r.k - 2 * i;
    os << i << "," << r.lambda[i] << "," << dist << "," << r.delta.at(dist) << ","
       << r.pairs.at(dist) << "\n";
  }
  return os.str();
}

nlohmann::json check_report_to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check_name;
  j["q"] = r.q;
  j["n"] = r.n;
  j["k"] = r.params.k;
  j["t"] = r.params.t;
  j["samples"] = r.params.samples;
  j["seed"] = r.params.seed;
  j["passed"] = r.passed;
  j["witnesses"] = r.witnesses;
  j["observed_multipliers"] = r.observed_multipliers;
  j["note"] = r.note;
  return j;
}

std::vector<ReferenceExample> parse_reference_examples(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<ReferenceExample> out;
  for (const auto& e : j.at("examples")) {
    ReferenceExample ex;
    ex.name = e.at("name").get<std::string>();
    ex.p = e.at("p").get<int>();
    ex.e = e.value("e", 1);
    ex.n = e.at("n").get<int>();
    ex.subspace = e.at("subspace").get<std::string>();
    ex.k = e.at("k").get<int>();
    ex.t = e.at("t").get<int>();
    ex.lambda = e.at("lambda").get<std::vector<uint64_t>>();
    if (e.contains("shift_count")) ex.shift_count = e.at("shift_count").get<uint64_t>();
    ex.large = e.value("large", false);
    out.push_back(std::move(ex));
  }
  return out;
}

const std::vector<ReferenceExample>& bundled_examples() {
  static const std::vector<ReferenceExample> v =
      parse_reference_examples(embedded::reference_examples_json());
  return v;
}

std::vector<ReproduceRow> run_reproduce(const ReproduceOptions& opts) {
  const ConwayTable& table = opts.conway ? *opts.conway : ConwayTable::bundled();
  std::vector<ReproduceRow> rows;
  for (const ReferenceExample& ex : bundled_examples()) {
    ReproduceRow row;
    row.example = ex;
    if (ex.large && opts.skip_large) {
      row.skipped = true;
      rows.push_back(std::move(row));
      continue;
    }
    const double t0 = now_ms();
    std::vector<uint8_t> modulus;
    if (opts.modulus_override && int(opts.modulus_override->size()) == ex.e * ex.n + 1) {
      modulus = *opts.modulus_override;
    } else {
      const auto* f = table.find(ex.p, ex.e * ex.n);
      if (!f)
        throw Error("no conway polynomial for p=" + std::to_string(ex.p) +
                    " degree=" + std::to_string(ex.e * ex.n));
      modulus = *f;
    }
    const FieldTower tower(ex.p, ex.e, ex.n, modulus);
    row.modulus_used = tower.describe_modulus();
    const Subspace u = parse_subspace(ex.subspace, tower);

    SweepOptions so;
    so.threads = opts.threads;
    if (opts.progress) {
      const std::string name = ex.name;
      const auto& cb = opts.progress;
      so.progress = [name, &cb](uint64_t done, uint64_t total) { cb(name, done, total); };
    }
    const IntersectionDistribution d = intersection_distribution(u, so);
    row.lambda = d.lambda;
    row.t = d.t;
    row.orbit_size = d.orbit_size;
    row.sum_rule_ok = (d.sum() == d.orbit_size - 1);
    row.divisibility_ok = divisibility_pattern(tower, u, d);
    row.exact_match = (d.lambda == ex.lambda) && (d.t == ex.t) && (u.k() == ex.k);
    if (tower.n() % (2 * d.t) == 0) {
      row.shift_count = count_subfield_line_shifts(u, d.t).count;
      if (ex.shift_count && row.exact_match)
        row.exact_match = (*row.shift_count == *ex.shift_count);
    }
    row.wall_ms = now_ms() - t0;
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json reproduce_row_to_json(const ReproduceRow& r) {
  nlohmann::json j;
  j["name"] = r.example.name;
  j["p"] = r.example.p;
  j["e"] = r.example.e;
  j["n"] = r.example.n;
  j["subspace"] = r.example.subspace;
  j["expected_lambda"] = r.example.lambda;
  j["expected_t"] = r.example.t;
  j["skipped"] = r.skipped;
  if (!r.skipped) {
    j["lambda"] = r.lambda;
    j["t"] = r.t;
    j["orbit_size"] = r.orbit_size;
    j["exact_match"] = r.exact_match;
    j["sum_rule_ok"] = r.sum_rule_ok;
    j["divisibility_ok"] = r.divisibility_ok;
    j["modulus"] = r.modulus_used;
    j["wall_ms"] = r.wall_ms;
  }
  return j;
}

}  // namespace orbitdist
