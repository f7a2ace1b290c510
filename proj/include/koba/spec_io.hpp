#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "koba/domains_nd.hpp"
#include "koba/oracles.hpp"

namespace koba {

// A parsed domain-spec document. The canonical echo re-serializes the fields
// that define the domain, bit-exact, so printed specs re-parse identically.
struct ParsedDomain {
    std::string type;  // "intersection" | "hull" | "ball" | "lens"
    DomainND domain = DomainND::planar(ConvexRegion2D::disk({0.0, 0.0}, 1.0));
    std::optional<LensMap> lens;
    nlohmann::json canonical;
};

ParsedDomain parse_domain_spec(const nlohmann::json& doc);
ParsedDomain load_domain_spec_file(const std::string& path);

// Flat list of reals "a,b,..." interpreted as a complex n-vector: either n
// real entries or 2n interleaved (re, im) pairs.
CVec parse_point_list(const std::string& text, std::size_t dim);

// Locale-independent formatting at 9 significant digits.
std::string format_sig9(double value);

nlohmann::json report_to_json(const MetricBoundReport& report);

}  // namespace koba
