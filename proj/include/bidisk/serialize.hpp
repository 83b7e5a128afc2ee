#pragma once

#include <json.hpp>

#include "bidisk/holomaps.hpp"
#include "bidisk/kernels.hpp"

// JSON encoding of points, kernels, and map trees. Complex numbers are
// [re, im] arrays; map nodes are objects tagged by constructor name. Every
// witness a checker emits round-trips through these functions.

namespace bidisk {

using Json = nlohmann::json;

Json to_json(Complex c);
Complex complex_from_json(const Json& j);

Json to_json(const DiskPoint& z);
DiskPoint disk_point_from_json(const Json& j);

Json to_json(const BiPoint& p);
BiPoint bipoint_from_json(const Json& j);

Json to_json(const KernelSpec& k);
KernelSpec kernel_from_json(const Json& j);

Json to_json(const HoloMap1& f);
HoloMap1 holomap1_from_json(const Json& j);

Json to_json(const ScalarMap2& f);
ScalarMap2 scalar_map2_from_json(const Json& j);

Json to_json(const HoloMap2& f);
HoloMap2 holomap2_from_json(const Json& j);

}  // namespace bidisk
