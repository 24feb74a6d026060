#pragma once

#include <json.hpp>

#include "compactlab/finite_systems.hpp"
#include "compactlab/oracle.hpp"
#include "compactlab/witnesses.hpp"

namespace compactlab {

// Reports keep key insertion order and contain no timestamps, so identical
// inputs yield byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const ConvergenceVerdict& v);
Json to_json(const ProbeResult& r);
Json to_json(const WitnessCertificate& cert);
Json to_json(const FiniteAuditReport& report);
Json to_json(const GeodesicProductReport& report);
Json to_json(const AgreementReport& report);

// {schema_version, command, status, result[, seed]}
Json make_report(const std::string& command, const std::string& status, Json result,
                 const std::optional<unsigned long long>& seed = {});

}  // namespace compactlab
