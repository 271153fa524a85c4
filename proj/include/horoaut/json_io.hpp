#pragma once

#include "horoaut/bundles.hpp"
#include "horoaut/fan.hpp"
#include "horoaut/horospherical.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace horoaut {

using Json = nlohmann::json;

struct BundleBatch {
  std::vector<BundleSpec> specs;
};

using InputDocument = std::variant<Fan, HorosphericalDatum, BundleSpec, BundleBatch>;

/// Throws SchemaError on malformed JSON, unknown or missing fields, and
/// non-integer numbers. Domain checks are left to the validators, except
/// that a bundle base with a nonzero torus rank is an InvalidBundle.
InputDocument parse_document(std::string_view text);
InputDocument parse_document_json(const Json& j);

Fan fan_from_json(const Json& j);
HorosphericalDatum datum_from_json(const Json& j);
BundleSpec bundle_from_json(const Json& j);

Json to_json(const Fan& fan);
Json to_json(const HorosphericalDatum& datum);
Json to_json(const BundleSpec& spec);

struct FanRootsDocument {
  ToricAutReport report;
  std::optional<Int> oracle_radius;
};

struct HoroDocument {
  AutReport report;
  Extendability extendability;
};

struct BundleDocument {
  BundleReport report;
  std::optional<bool> pipeline_agrees;
};

Json to_json(const FanRootsDocument& doc);
Json to_json(const HoroDocument& doc);
Json to_json(const BundleDocument& doc);

FanRootsDocument fan_roots_document_from_json(const Json& j);
HoroDocument horo_document_from_json(const Json& j);
BundleDocument bundle_document_from_json(const Json& j);

/// Pretty output is indented by two spaces; keys are always sorted.
std::string dump_canonical(const Json& j, bool pretty);

}  // namespace horoaut
