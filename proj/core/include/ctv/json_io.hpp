#pragma once

#include "ctv/certificate.hpp"
#include "ctv/instance.hpp"

#include <json.hpp>

#include <string>

namespace ctv {

using Json = nlohmann::json;

/// All serialization uses "p/q" strings for rationals (denominator omitted
/// when 1) and objects with sorted keys, so dumps are byte-deterministic.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json hyperplane_to_json(const OrientedHyperplane& h);
OrientedHyperplane hyperplane_from_json(const Json& j);

Json spec_to_json(const InstanceSpec& s);
InstanceSpec spec_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json zero_cell_to_json(const ZeroCellHit& hit);

Json complex_to_json(const SphereComplex& C, const std::vector<CentralData>& data);

Json probe_report_to_json(const std::vector<ProbeRow>& rows);

/// Canonical rendering used for every file the tools write: 2-space
/// indent, sorted keys, trailing newline.
std::string dump_json(const Json& j);

/// Parses a file; wraps parse failures in std::invalid_argument.
Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace ctv
