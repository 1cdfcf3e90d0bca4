#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hwav/avcore.hpp"
#include "hwav/census.hpp"
#include "hwav/diagram.hpp"
#include "hwav/poset.hpp"

namespace hwav {

using Json = nlohmann::ordered_json;

inline Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& x : w) a.push_back(to_string(x));
  return a;
}

inline Json root_list_json(const NoncompactPoset& P, const std::vector<int>& idx) {
  Json a = Json::array();
  for (int i : idx) a.push_back(root_label(P.roots[i]));
  return a;
}

inline Json av_json(const Context& ctx, const AVResult& r) {
  Json j;
  j["type"] = ctx.type().name();
  j["lambda_rho"] = weight_json(r.lambda_rho);
  j["integrality"] = integrality_name(r.integrality);
  j["y_size"] = r.y_size;
  j["width"] = r.width_m;
  j["witness"] = root_list_json(ctx.poset, r.witness);
  j["k"] = r.k;
  j["real_rank"] = r.real_rank;
  j["orbit_label"] = r.orbit_label;
  j["orbit_dim"] = r.orbit_dim;
  j["gk_dim"] = r.gk_dim;
  j["delta"] = r.delta;
  if (r.w_word) {
    Json w = Json::array();
    for (int i : *r.w_word) w.push_back(i + 1);
    j["w_word"] = w;
  }
  return j;
}

inline Json diagram_json(const Context& ctx, const Weight& lr) {
  Diagram d = compute_diagram(lr, ctx.rs, ctx.poset);
  WidthResult w = width(ctx.poset, d.y);
  Json j;
  j["type"] = ctx.type().name();
  j["lambda_rho"] = weight_json(lr);
  j["integrality"] = integrality_name(d.integrality);
  j["y"] = root_list_json(ctx.poset, to_indices(d.y));
  j["y_size"] = static_cast<int>(d.y.count());
  j["is_downset"] = is_downset(ctx.poset, d.y);
  j["width"] = w.m;
  j["witness"] = root_list_json(ctx.poset, w.witness);
  return j;
}

inline Json census_json(const CensusReport& c) {
  Json j;
  j["type"] = c.type.name();
  j["counts"] = c.counts_by_width;
  j["expected"] = c.expected;
  j["total"] = c.total;
  j["expected_total"] = c.expected_total;
  j["pass"] = c.pass;
  j["mismatches"] = c.mismatches;
  return j;
}

inline Json check_json(const CheckReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  return j;
}

inline Json springer_json(const HermitianType& t) {
  Json a = Json::array();
  for (const auto& row : springer_table(t)) {
    Json j;
    j["k"] = row.k;
    j["orbit_dim"] = row.orbit_dim;
    j["label"] = row.complex_label;
    j["special"] = row.special;
    j["springer_dim"] = row.springer_dim;
    a.push_back(j);
  }
  return a;
}

}  // namespace hwav
