#include "blobmkt/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "blobmkt/errors.hpp"

namespace blobmkt {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& obj, const char* where,
                           std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (item.key() == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ValidationError(std::string("unknown field '") + item.key() + "' in " +
                            where);
    }
  }
}

double number_field(const json& obj, const char* where, const char* name,
                    bool required, double fallback = 0.0) {
  if (!obj.contains(name)) {
    if (required) {
      throw ValidationError(std::string(where) + " is missing required field '" +
                            name + "'");
    }
    return fallback;
  }
  const json& v = obj.at(name);
  if (!v.is_number()) {
    throw ValidationError(std::string("field '") + name + "' in " + where +
                          " must be a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ValidationError(std::string("field '") + name + "' in " + where +
                          " must be finite");
  }
  return x;
}

std::string string_field(const json& obj, const char* where, const char* name) {
  if (!obj.contains(name) || !obj.at(name).is_string()) {
    throw ValidationError(std::string(where) + " needs a string field '" + name + "'");
  }
  return obj.at(name).get<std::string>();
}

MarketParams parse_params(const json& obj) {
  reject_unknown_fields(obj, "params", {"a", "G", "P0", "P1", "k", "U", "B_floor"});
  MarketParams p;
  p.delay_cost = number_field(obj, "params", "a", true);
  p.gas_price = number_field(obj, "params", "G", true);
  p.post_overhead_gas = number_field(obj, "params", "P0", true);
  p.calldata_gas_per_tx = number_field(obj, "params", "P1", true);
  p.target_blob_rate = number_field(obj, "params", "k", true);
  if (obj.contains("U")) p.max_blob_size = number_field(obj, "params", "U", true);
  p.price_floor = number_field(obj, "params", "B_floor", false, 0.0);
  p.validate();
  return p;
}

std::vector<Rollup> parse_rollups(const json& arr, bool* resorted) {
  if (!arr.is_array() || arr.empty()) {
    throw ValidationError("'rollups' must be a non-empty array");
  }
  std::vector<Rollup> rollups;
  std::set<std::string> seen;
  for (const json& item : arr) {
    if (!item.is_object()) throw ValidationError("each rollup must be an object");
    reject_unknown_fields(item, "rollup", {"id", "rate"});
    Rollup r;
    r.id = string_field(item, "rollup", "id");
    r.rate = number_field(item, "rollup", "rate", true);
    if (r.id.empty()) throw ValidationError("rollup id must be non-empty");
    if (!seen.insert(r.id).second) {
      throw ValidationError("duplicate rollup id '" + r.id + "'");
    }
    if (r.rate <= 0.0) {
      throw ValidationError("rate must be positive (rollup '" + r.id + "')");
    }
    rollups.push_back(std::move(r));
  }
  std::vector<Rollup> sorted = rollups;
  std::sort(sorted.begin(), sorted.end(), [](const Rollup& a, const Rollup& b) {
    return a.rate != b.rate ? a.rate > b.rate : a.id < b.id;
  });
  *resorted = false;
  for (std::size_t i = 0; i < rollups.size(); ++i) {
    if (sorted[i].id != rollups[i].id) {
      *resorted = true;
      break;
    }
  }
  return sorted;
}

bool has_rollup(const std::vector<Rollup>& rollups, const std::string& id) {
  return std::any_of(rollups.begin(), rollups.end(),
                     [&](const Rollup& r) { return r.id == id; });
}

MergeSpec parse_merge(const json& arr, const std::vector<Rollup>& rollups) {
  if (!arr.is_array() || arr.size() != 2 || !arr[0].is_string() || !arr[1].is_string()) {
    throw ValidationError("'merge' must be an array of two rollup ids");
  }
  MergeSpec spec{arr[0].get<std::string>(), arr[1].get<std::string>()};
  if (spec.first == spec.second) {
    throw ValidationError("'merge' ids must differ");
  }
  for (const std::string& id : {spec.first, spec.second}) {
    if (!has_rollup(rollups, id)) {
      throw ValidationError("'merge' references unknown rollup '" + id + "'");
    }
  }
  return spec;
}

BargainSpec parse_bargain(const json& obj, const std::vector<Rollup>& rollups) {
  if (!obj.is_object()) throw ValidationError("'bargain' must be an object");
  reject_unknown_fields(obj, "bargain", {"first", "second", "f", "B", "B_N", "R"});
  BargainSpec spec;
  if (obj.contains("first") || obj.contains("second")) {
    spec.first = string_field(obj, "bargain", "first");
    spec.second = string_field(obj, "bargain", "second");
    if (*spec.first == *spec.second) throw ValidationError("'bargain' ids must differ");
    for (const std::string& id : {*spec.first, *spec.second}) {
      if (!has_rollup(rollups, id)) {
        throw ValidationError("'bargain' references unknown rollup '" + id + "'");
      }
    }
    if (obj.contains("f") || obj.contains("B") || obj.contains("B_N")) {
      throw ValidationError("'bargain' takes either two ids or direct numbers, not both");
    }
    return spec;
  }
  spec.rate_ratio = number_field(obj, "bargain", "f", true);
  spec.solo_price = number_field(obj, "bargain", "B", true);
  spec.joint_price = number_field(obj, "bargain", "B_N", true);
  if (obj.contains("R")) spec.large_rate = number_field(obj, "bargain", "R", true);
  if (*spec.rate_ratio <= 0.0 || *spec.rate_ratio > 1.0) {
    throw ValidationError("'bargain' field 'f' must lie in (0, 1]");
  }
  if (*spec.solo_price < 0.0 || *spec.joint_price < 0.0) {
    throw ValidationError("'bargain' prices must be non-negative");
  }
  if (spec.large_rate && *spec.large_rate <= 0.0) {
    throw ValidationError("'bargain' field 'R' must be positive");
  }
  return spec;
}

SimSpec parse_sim(const json& obj, const std::vector<Rollup>& rollups) {
  if (!obj.is_object()) throw ValidationError("'sim' must be an object");
  reject_unknown_fields(obj, "sim", {"rollup", "arrival", "horizon", "seed", "venue"});
  SimSpec spec;
  spec.rollup_id = string_field(obj, "sim", "rollup");
  if (!has_rollup(rollups, spec.rollup_id)) {
    throw ValidationError("'sim' references unknown rollup '" + spec.rollup_id + "'");
  }
  const std::string arrival = string_field(obj, "sim", "arrival");
  if (arrival == "uniform") {
    spec.arrival = ArrivalModel::UniformDeterministic;
  } else if (arrival == "poisson") {
    spec.arrival = ArrivalModel::Poisson;
  } else {
    throw ValidationError("'sim' arrival must be 'uniform' or 'poisson'");
  }
  spec.horizon = number_field(obj, "sim", "horizon", true);
  if (spec.horizon <= 0.0) throw ValidationError("'sim' horizon must be positive");
  if (obj.contains("seed")) {
    const json& v = obj.at("seed");
    if (!v.is_number_unsigned()) {
      throw ValidationError("'sim' seed must be an unsigned integer");
    }
    spec.seed = v.get<std::uint64_t>();
  }
  if (obj.contains("venue")) {
    const std::string venue = string_field(obj, "sim", "venue");
    if (venue == "blob") {
      spec.venue = Venue::Blob;
    } else if (venue == "l1") {
      spec.venue = Venue::L1;
    } else {
      throw ValidationError("'sim' venue must be 'blob' or 'l1'");
    }
  }
  return spec;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scenario parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("scenario must be a JSON object");
  reject_unknown_fields(doc, "scenario",
                        {"params", "rollups", "blob_price", "merge", "bargain", "sim"});
  if (!doc.contains("params")) throw ValidationError("scenario is missing 'params'");
  if (!doc.contains("rollups")) throw ValidationError("scenario is missing 'rollups'");

  Scenario sc;
  sc.params = parse_params(doc.at("params"));
  sc.rollups = parse_rollups(doc.at("rollups"), &sc.resorted);
  if (doc.contains("blob_price")) {
    const double b = number_field(doc, "scenario", "blob_price", true);
    if (b < 0.0) throw ValidationError("'blob_price' must be non-negative");
    sc.blob_price = b;
  }
  if (doc.contains("merge")) sc.merge = parse_merge(doc.at("merge"), sc.rollups);
  if (doc.contains("bargain")) sc.bargain = parse_bargain(doc.at("bargain"), sc.rollups);
  if (doc.contains("sim")) sc.sim = parse_sim(doc.at("sim"), sc.rollups);
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace blobmkt
