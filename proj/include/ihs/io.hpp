#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ihs/hyperspace.hpp"
#include "ihs/morphisms.hpp"
#include "ihs/set_system.hpp"
#include "ihs/stream.hpp"

namespace ihs {

/// Any malformed external input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {"n": relations, "size": elements, "labels": [[class id per element] per
/// relation]}. Output labels are canonical; input labels are accepted as
/// arbitrary non-negative integers and canonicalized.
std::string hyperspace_to_json(const Hyperspace& space);
Hyperspace hyperspace_from_json(const std::string& text);

/// First line "n=<ground>", then one member per line as space-separated
/// element indices. A blank interior line is the empty member; members are
/// written in ascending mask order.
std::string set_system_to_text(const SetSystem& sys);
SetSystem set_system_from_text(const std::string& text);

/// First line "n=<length> m=<codomain>", then one entry per line in the
/// member syntax above.
std::string set_tuple_to_text(const SetTuple& tuple);
SetTuple set_tuple_from_text(const std::string& text);

std::string coloring_to_json(const Coloring& coloring, int relation_count);

/// {"N":..,"violations":[..],"counts":[{"a":..,"i":..,"count":..,"bound":..}],
///  "profile":[..]}; violations carry a "kind" of "certificate" or
/// "profile".
std::string audit_report_to_json(const AuditReport& report);

std::string witness_to_json(const SearchOutcome& outcome);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ihs
