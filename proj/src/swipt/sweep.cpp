// Copyright 2026 The swipt-link Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swipt/sweep.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

constexpr const char* kToolkit = "swipt-link";

std::string Num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<CurveSpec> BothReceivers(const SystemParams& p, Scheme s,
                                     int order) {
  return {{p, s, order, Receiver::kPs}, {p, s, order, Receiver::kTs}};
}

void Append(std::vector<CurveSpec>& dst, std::vector<CurveSpec> src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

const std::vector<std::string>& RecipeNames() {
  static const std::vector<std::string> names = {"fig1", "fig2", "fig3",
                                                 "fig4"};
  return names;
}

std::vector<CurveSpec> Recipe(std::string_view name, const SystemParams& base) {
  std::vector<CurveSpec> out;
  if (name == "fig1" || name == "fig2") {
    const int order = name == "fig1" ? 16 : 4;
    for (Scheme s : {Scheme::kPsk, Scheme::kPam, Scheme::kQam}) {
      Append(out, BothReceivers(base, s, order));
    }
  } else if (name == "fig3") {
    for (double p_th : {0.0, DbmToWatts(-20.0)}) {
      SystemParams p = base;
      p.eh_sensitivity = p_th;
      Append(out, BothReceivers(p, Scheme::kQam, 16));
    }
  } else if (name == "fig4") {
    for (int m : {1, 2, 5, 20}) {
      SystemParams p = base;
      p.fading_m = m;
      Append(out, BothReceivers(p, Scheme::kQam, 16));
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown recipe '" + std::string(name) +
                    "' (expected fig1, fig2, fig3 or fig4)");
  }
  return out;
}

SweepTable RunSweep(std::span<const CurveSpec> curves, int n_points,
                    int workers) {
  SweepTable table;
  for (const CurveSpec& spec : curves) {
    const ValidatedParams params = Validate(spec.params);
    const auto c = Constellation::Build(spec.scheme, spec.order);
    const auto grid = UniformGrid(QMax(params, c, spec.receiver), n_points);
    auto rows = TradeoffCurve(params, c, spec.receiver, grid, workers);
    table.rows.insert(table.rows.end(), rows.begin(), rows.end());
  }
  return table;
}

std::string ConfigHash(const SystemParams& params) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& key : FieldNames()) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s=%.17g\n", key.c_str(),
                  GetField(params, key));
    for (const char* c = buf; *c; ++c) {
      h ^= static_cast<unsigned char>(*c);
      h *= 0x100000001b3ULL;
    }
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::string RenderCsv(const SweepTable& table, const OutputHeader& header) {
  std::ostringstream os;
  os << "# toolkit: " << kToolkit << " " << SWIPT_VERSION_STRING << "\n"
     << "# command: " << header.command << "\n"
     << "# config_hash: " << header.config_hash << "\n"
     << "# seed: " << header.seed << "\n"
     << "scheme,modulation,M,m,P_th_W,q0_W,ssr_star,rho,p_tx_W,p_eh_W,"
        "p_info_W,feasible\n";
  for (const auto& r : table.rows) {
    os << ToString(r.receiver) << ',' << ToString(r.scheme) << ',' << r.order
       << ',' << r.fading_m << ',' << Num(r.p_th) << ',' << Num(r.q0) << ','
       << Num(r.ssr_star) << ',' << Num(r.rho) << ',' << Num(r.p_tx) << ','
       << Num(r.p_eh) << ',' << Num(r.p_info) << ','
       << (r.feasible ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string RenderJson(const SweepTable& table, const OutputHeader& header) {
  nlohmann::ordered_json doc;
  doc["toolkit"] = kToolkit;
  doc["version"] = SWIPT_VERSION_STRING;
  doc["command"] = header.command;
  doc["config_hash"] = header.config_hash;
  doc["seed"] = header.seed;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    nlohmann::ordered_json j;
    j["scheme"] = ToString(r.receiver);
    j["modulation"] = ToString(r.scheme);
    j["M"] = r.order;
    j["m"] = r.fading_m;
    j["P_th_W"] = r.p_th;
    j["q0_W"] = r.q0;
    j["ssr_star"] = r.ssr_star;
    j["rho"] = r.rho;
    j["p_tx_W"] = r.p_tx;
    j["p_eh_W"] = r.p_eh;
    j["p_info_W"] = r.p_info;
    j["feasible"] = r.feasible;
    if (!r.feasible) j["error"] = r.error;
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace swipt
