// Copyright 2026 The fpcheb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fpcheb/report_io.hpp"

#include <fmt/format.h>

namespace fpcheb {

Json artifact(const std::string& kind) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

std::string format_double(double value) { return fmt::format("{}", value); }

Json complex_json(std::complex<double> z) {
  return Json{{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}};
}

Json census_json(const CensusReport& report) {
  Json j = artifact("census");
  j["p"] = report.p;
  j["d"] = report.d;
  j["family"] = report.family;
  j["interval"] = report.interval;
  j["interval_size"] = report.interval_size;
  j["ramified"] = report.ramified;
  j["certification"] = report.certification;
  j["error_normalization"] = "sqrt(p)*ln(p)";
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["class"] = row.label;
    r["count"] = row.count;
    if (row.main_term) {
      r["main_term"] = *row.main_term;
      r["raw_error"] = *row.raw_error;
      r["normalized_error"] = *row.normalized_error;
    }
    rows.push_back(std::move(r));
  }
  j["classes"] = std::move(rows);
  return j;
}

std::string census_csv(const CensusReport& report) {
  std::string out = "class,count,main_term,raw_error,normalized_error\n";
  for (const auto& row : report.rows) {
    // Labels contain commas.
    out += fmt::format("\"{}\",{}", row.label, row.count);
    if (row.main_term) {
      out += fmt::format(",{},{},{}\n", format_double(*row.main_term),
                         format_double(*row.raw_error), format_double(*row.normalized_error));
    } else {
      out += ",,,\n";
    }
  }
  return out;
}

Json type_json(const FactorizationType& type) {
  Json a = Json::array();
  for (int part : type.degrees()) a.push_back(part);
  return a;
}

Json factorization_json(const Factorization& factorization) {
  Json factors = Json::array();
  for (const auto& fp : factorization.factors) {
    factors.push_back(Json{{"poly", fp.factor.to_text()}, {"exp", fp.exponent}});
  }
  return Json{{"unit", factorization.unit}, {"factors", std::move(factors)}};
}

Json bad_set_json(const BadSet& set) {
  Json j = artifact("badset");
  j["p"] = set.p;
  j["d"] = set.d;
  j["shape"] = set.shape;
  j["bad"] = set.bad;
  j["size"] = set.size();
  return j;
}

namespace {

Json forge_body(const ForgeReport& report, bool with_timing) {
  Json j;
  j["p"] = report.p;
  j["d"] = report.d;
  j["base"] = report.base.to_text();
  j["found"] = report.found.to_text();
  j["b"] = report.b_used;
  j["a"] = report.a_used;
  j["rabin_calls"] = report.rabin_calls;
  j["field_mults"] = report.field_mults;
  j["interval_length"] = report.interval_length;
  j["doublings"] = report.doublings;
  j["budget_ratio"] = report.budget_ratio;
  if (with_timing) j["wall_seconds"] = report.wall_seconds;
  return j;
}

}  // namespace

Json forge_json(const ForgeReport& report, bool with_timing) {
  Json j = artifact("forge");
  const Json body = forge_body(report, with_timing);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

Json scaling_json(const ScalingTable& table, bool with_timing) {
  Json j = artifact("scaling");
  j["d"] = table.d;
  j["slope"] = table.slope;
  j["intercept"] = table.intercept;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r = forge_body(row.report, with_timing);
    r["shoup_model"] = row.shoup_model;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string scaling_csv(const ScalingTable& table) {
  std::string out = "p,d,b,a,rabin_calls,field_mults,budget_ratio,shoup_model\n";
  for (const auto& row : table.rows) {
    const auto& r = row.report;
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.p, r.d, r.b_used, r.a_used, r.rabin_calls,
                       r.field_mults, format_double(r.budget_ratio),
                       format_double(row.shoup_model));
  }
  return out;
}

}  // namespace fpcheb
