#include "koba/spec_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "koba/schwarz_lab.hpp"

namespace koba {

namespace {

double require_number(const nlohmann::json& node, const std::string& where) {
    if (!node.is_number()) throw SpecParseError(where + ": expected a number");
    return node.get<double>();
}

const nlohmann::json& require_field(const nlohmann::json& doc, const char* name,
                                    const std::string& where) {
    const auto it = doc.find(name);
    if (it == doc.end()) throw SpecParseError(where + ": missing field '" + name + "'");
    return *it;
}

std::vector<std::vector<double>> require_tuples(const nlohmann::json& node, std::size_t arity,
                                                const std::string& where) {
    if (!node.is_array()) throw SpecParseError(where + ": expected an array");
    std::vector<std::vector<double>> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        const auto& row = node[i];
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != arity)
            throw SpecParseError(row_where + ": expected " + std::to_string(arity) + " numbers");
        std::vector<double> tuple;
        tuple.reserve(arity);
        for (std::size_t j = 0; j < arity; ++j) tuple.push_back(require_number(row[j], row_where));
        out.push_back(std::move(tuple));
    }
    return out;
}

}  // namespace

ParsedDomain parse_domain_spec(const nlohmann::json& doc) {
    if (!doc.is_object()) throw SpecParseError("spec: expected a JSON object");
    const auto& type_node = require_field(doc, "type", "spec");
    if (!type_node.is_string()) throw SpecParseError("spec.type: expected a string");
    const std::string type = type_node.get<std::string>();

    ParsedDomain parsed;
    parsed.type = type;
    parsed.canonical["type"] = type;

    try {
        if (type == "intersection") {
            std::vector<HalfPlane> halfplanes;
            nlohmann::json hp_echo = nlohmann::json::array();
            if (doc.contains("halfplanes")) {
                for (const auto& row : require_tuples(doc["halfplanes"], 3, "spec.halfplanes")) {
                    const cx normal{row[0], row[1]};
                    if (std::abs(std::abs(normal) - 1.0) > 1e-12)
                        throw SpecParseError("spec.halfplanes: normals must have unit length");
                    halfplanes.push_back({normal, row[2]});
                    hp_echo.push_back({row[0], row[1], row[2]});
                }
            }
            std::vector<Disk> disks;
            nlohmann::json disk_echo = nlohmann::json::array();
            if (doc.contains("disks")) {
                for (const auto& row : require_tuples(doc["disks"], 3, "spec.disks")) {
                    disks.push_back({cx{row[0], row[1]}, row[2]});
                    disk_echo.push_back({row[0], row[1], row[2]});
                }
            }
            parsed.canonical["halfplanes"] = hp_echo;
            parsed.canonical["disks"] = disk_echo;
            parsed.domain = DomainND::planar(
                ConvexRegion2D::intersection(std::move(halfplanes), std::move(disks)));
        } else if (type == "hull") {
            std::vector<Disk> generators;
            nlohmann::json echo = nlohmann::json::array();
            for (const auto& row :
                 require_tuples(require_field(doc, "generators", "spec"), 3, "spec.generators")) {
                generators.push_back({cx{row[0], row[1]}, row[2]});
                echo.push_back({row[0], row[1], row[2]});
            }
            parsed.canonical["generators"] = echo;
            parsed.domain = DomainND::planar(ConvexRegion2D::hull(std::move(generators)));
        } else if (type == "ball") {
            const auto& dim_node = require_field(doc, "dim", "spec");
            if (!dim_node.is_number_integer() || dim_node.get<int>() < 1)
                throw SpecParseError("spec.dim: expected a positive integer");
            const auto dim = dim_node.get<std::size_t>();
            const double radius = require_number(require_field(doc, "radius", "spec"), "spec.radius");
            CVec center(dim, cx{0.0, 0.0});
            nlohmann::json center_echo = nlohmann::json::array();
            const auto rows = require_tuples(require_field(doc, "center", "spec"), 2, "spec.center");
            if (rows.size() != dim)
                throw SpecParseError("spec.center: expected one (re, im) pair per dimension");
            for (std::size_t i = 0; i < dim; ++i) {
                center[i] = {rows[i][0], rows[i][1]};
                center_echo.push_back({rows[i][0], rows[i][1]});
            }
            parsed.canonical["dim"] = dim;
            parsed.canonical["center"] = center_echo;
            parsed.canonical["radius"] = radius;
            parsed.domain = DomainND::ball(std::move(center), radius);
        } else if (type == "lens") {
            const double h = require_number(require_field(doc, "h", "spec"), "spec.h");
            if (!(h > 0.0) || !(h < 1.0)) throw SpecParseError("spec.h: must lie in (0, 1)");
            parsed.canonical["h"] = h;
            auto lens = lens_params(h);
            parsed.lens = lens.map;
            parsed.domain = DomainND::planar(std::move(lens.region));
        } else {
            throw SpecParseError("spec.type: unknown type '" + type + "'");
        }
    } catch (const InvalidRegion& e) {
        throw SpecParseError(std::string("spec: ") + e.what());
    } catch (const DomainError& e) {
        throw SpecParseError(std::string("spec: ") + e.what());
    }
    return parsed;
}

ParsedDomain load_domain_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open spec file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecParseError("spec file '" + path + "': " + e.what());
    }
    return parse_domain_spec(doc);
}

CVec parse_point_list(const std::string& text, std::size_t dim) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw SpecParseError("point list: cannot parse '" + item + "'");
        }
    }
    CVec out(dim, cx{0.0, 0.0});
    if (values.size() == dim) {
        for (std::size_t i = 0; i < dim; ++i) out[i] = values[i];
    } else if (values.size() == 2 * dim) {
        for (std::size_t i = 0; i < dim; ++i) out[i] = {values[2 * i], values[2 * i + 1]};
    } else {
        throw SpecParseError("point list: expected " + std::to_string(dim) + " or " +
                             std::to_string(2 * dim) + " numbers, got " +
                             std::to_string(values.size()));
    }
    return out;
}

std::string format_sig9(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

nlohmann::json report_to_json(const MetricBoundReport& report) {
    nlohmann::json doc;
    auto put = [&](const char* key, double v) { doc[key] = std::stod(format_sig9(v)); };
    put("r", report.r);
    put("r_hat", report.r_hat);
    put("dist_pq", report.dist_pq);
    put("beta", report.beta);
    put("gamma", report.gamma);
    doc["regime"] = regime_name(report.regime);
    put("graham_lower", report.graham_lower);
    put("graham_upper", report.graham_upper);
    put("improved_upper", report.improved_upper);
    if (report.exact)
        doc["exact"] = std::stod(format_sig9(*report.exact));
    else
        doc["exact"] = nullptr;
    return doc;
}

}  // namespace koba
