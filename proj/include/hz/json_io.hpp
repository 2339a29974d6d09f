/**
 * @file json_io.hpp
 * @brief JSON forms of fans, polynomials, series and crosscheck reports.
 *
 * Exact integers and rationals are written as decimal strings.
 */
#pragma once

#include "hz/fan.hpp"
#include "hz/genfun.hpp"
#include "hz/hirzebruch.hpp"

#include <json.hpp>

namespace hz {

using json = nlohmann::ordered_json;

json fan_to_json(const StackyFan& f);
StackyFan fan_from_json(const json& j);

json poly_to_json(const RatPoly& p);
RatPoly poly_from_json(const json& j);

json series_to_json(const SeriesWindow& s);
SeriesWindow series_from_json(const json& j);

json params_to_json(const HirzebruchParams& P);
json run_to_json(const EngineRun& run);
json report_to_json(const CrosscheckReport& rep);

}  // namespace hz
