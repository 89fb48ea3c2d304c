#pragma once

#include <string>

#include <json.hpp>

#include "qvcount/fock.hpp"
#include "qvcount/partitions.hpp"
#include "qvcount/quiver.hpp"
#include "qvcount/walls.hpp"

namespace qvc {

using Json = nlohmann::ordered_json;

// Rationals are always emitted as "p/q" strings so no float ever reaches the output.
Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const IntVector& v);
Json to_json(const Partition& p);
Json to_json(const Root& r);
Json to_json(const Hyperplane& h);
Json to_json(const Quiver& q);

/// {command, inputs, result, status, version}
Json make_report(const std::string& command, Json inputs, Json result, const std::string& status);

/// One header line and one row per record; record lists are taken from result.rows,
/// result.hyperplanes or result.roots when present, otherwise the result is a single row.
std::string to_csv(const Json& report);

}  // namespace qvc
