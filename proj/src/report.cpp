#include "compactlab/report.hpp"

namespace compactlab {

Json to_json(const ConvergenceVerdict& v) {
  Json j;
  j["outcome"] = v.supported() ? "supported-up-to" : "refuted";
  j["depth"] = v.depth;
  j["horizon"] = v.horizon;
  if (v.supported()) {
    j["stabilization_index"] = v.stabilization_index;
  } else {
    j["witness_index"] = v.witness_index;
    j["permanent"] = v.permanent;
    j["reason"] = v.reason;
  }
  if (v.gap_at_stabilization)
    j["gap_at_stabilization"] = format_rational(*v.gap_at_stabilization);
  if (v.gap_at_horizon) j["gap_at_horizon"] = format_rational(*v.gap_at_horizon);
  if (v.prefix_agreement) j["prefix_agreement"] = *v.prefix_agreement;
  if (!v.orbit_value.empty()) j["orbit_value"] = v.orbit_value;
  if (!v.target_value.empty()) j["target_value"] = v.target_value;
  return j;
}

Json to_json(const ProbeResult& r) {
  Json j;
  j["agree"] = r.agree;
  j["base"] = to_json(r.base);
  j["translated"] = to_json(r.translated);
  return j;
}

Json to_json(const WitnessCertificate& cert) {
  Json j;
  j["case"] = cert.case_name();
  j["point"] = cert.x0.str();
  j["sequence"] = cert.spec.str();
  j["gromov_sequence"] = cert.gromov_spec.str();
  j["gromov_target"] = cert.gromov_target.str();
  if (cert.constant_orbit) {
    j["constant_orbit"] = cert.constant_orbit->str();
    j["divergence_depth"] = cert.divergence_depth;
  } else {
    j["group_side_family"] = cert.group_side_family;
    j["orbit_side_family"] = cert.orbit_side_family;
  }
  j["replay_depth"] = cert.replay_depth;
  j["gromov_depth"] = cert.gromov_depth;
  j["horizon"] = cert.horizon;
  j["point_orbital_replay"] = to_json(cert.replay_point_orbital);
  j["gromov_replay"] = to_json(cert.replay_gromov);
  j["verified"] = cert.verified;
  return j;
}

Json to_json(const FiniteAuditReport& report) {
  Json j;
  j["system"] = report.system;
  j["point_orbital"] = report.point_orbital;
  j["orbital"] = report.orbital;
  j["orbital_reduction_note"] = report.orbital_reduction_note;
  Json candidates = Json::array();
  for (const auto& c : report.candidates) {
    Json entry;
    entry["candidate"] = c.candidate;
    entry["point_orbital"] = c.point_orbital;
    if (!c.point_orbital) {
      entry["witness_class"] = c.witness_class;
      entry["declared_limit"] = c.declared_limit;
      entry["orbit_limit"] = c.orbit_limit;
    }
    candidates.push_back(std::move(entry));
  }
  j["candidates"] = std::move(candidates);
  return j;
}

Json to_json(const GeodesicProductReport& report) {
  Json j;
  j["horizon"] = report.horizon;
  j["products_checked"] = report.products_checked;
  j["all_zero"] = report.all_zero();
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(Json{{"m", v.m}, {"n", v.n}, {"product", v.product}});
  }
  j["violations"] = std::move(violations);
  return j;
}

Json to_json(const AgreementReport& report) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json entry;
    entry["spec"] = row.spec;
    entry["target"] = row.target;
    entry["gromov"] = to_json(row.gromov);
    entry["orbital"] = to_json(row.orbital);
    entry["agree"] = row.agree;
    rows.push_back(std::move(entry));
  }
  j["rows"] = std::move(rows);
  j["agreements"] = report.agreements;
  j["total"] = report.rows.size();
  j["max_gap_at_horizon"] = format_rational(report.max_gap_at_horizon);
  if (report.point_orbital_disagreement)
    j["point_orbital_disagreement"] = to_json(*report.point_orbital_disagreement);
  return j;
}

Json make_report(const std::string& command, const std::string& status, Json result,
                 const std::optional<unsigned long long>& seed) {
  Json j;
  j["schema_version"] = "1";
  j["command"] = command;
  j["status"] = status;
  j["result"] = std::move(result);
  if (seed) j["seed"] = *seed;
  return j;
}

}  // namespace compactlab
