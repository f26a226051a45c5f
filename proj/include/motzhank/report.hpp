#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace motzhank {

enum class Status { verified, refuted, inconclusive };
std::string to_string(Status s);

using ParamValue = std::variant<long, std::string>;

/// Outcome of checking one claim at one parameter point.
struct VerificationReport {
    std::string claim_id;
    std::vector<std::pair<std::string, ParamValue>> params;
    Status status = Status::inconclusive;
    std::vector<std::pair<std::string, std::string>> witness;
    double elapsed_ms = 0;

    VerificationReport& param(std::string name, long v);
    VerificationReport& param(std::string name, std::string v);
    VerificationReport& note(std::string name, std::string v);

    /// Witness entry by name, empty if absent.
    std::string witness_of(const std::string& name) const;

    nlohmann::ordered_json to_json(bool with_timing) const;
    std::string to_text(bool with_timing) const;
};

/// Orders by claim id, then parameters (numbers numerically).
bool report_less(const VerificationReport& a, const VerificationReport& b);

std::string render_json(const std::vector<VerificationReport>& reports, bool with_timing);
std::string render_text(const std::vector<VerificationReport>& reports, bool with_timing);

} // namespace motzhank
