#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "ineqforge/field2d.hpp"
#include "ineqforge/forms.hpp"
#include "ineqforge/verify.hpp"

namespace ineq::report {

using json = nlohmann::ordered_json;

/// Fully resolved run description; serialized verbatim into every report so
/// any output can be reproduced bit for bit from its own header.
struct RunConfig {
    std::string subcommand;
    std::map<std::string, std::string> options;  // sorted -> stable serialization

    json to_json() const;
    static RunConfig from_json(const json& j);
};

json to_json(const forms::DeficitReport& r);
json to_json(const verify::VerificationReport& r);
json to_json(const verify::ChainReport& r);
json to_json(const verify::ReductionReport& r);
json to_json(const verify::ThetaScanTable& t);
json to_json(const talenti::TalentiReport& r);

/// Wraps a payload with the config echo and library version.
json finalize_report(const RunConfig& cfg, json payload);

/// Writes text to path, or stdout when path is empty.
void write_output(const std::string& path, const std::string& text);

/// Plain CSV series for plotting; kind selects which series the report must
/// contain (theta-scan | talenti | deficit-sweep | spectrum).
std::string emit_plot_data(const json& report, const std::string& kind);

}
