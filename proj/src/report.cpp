#include "motzhank/report.hpp"

#include <sstream>

namespace motzhank {

std::string to_string(Status s) {
    switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

VerificationReport& VerificationReport::param(std::string name, long v) {
    params.emplace_back(std::move(name), v);
    return *this;
}

VerificationReport& VerificationReport::param(std::string name, std::string v) {
    params.emplace_back(std::move(name), std::move(v));
    return *this;
}

VerificationReport& VerificationReport::note(std::string name, std::string v) {
    witness.emplace_back(std::move(name), std::move(v));
    return *this;
}

std::string VerificationReport::witness_of(const std::string& name) const {
    for (const auto& [k, v] : witness)
        if (k == name) return v;
    return {};
}

nlohmann::ordered_json VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["claim_id"] = claim_id;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) {
        if (std::holds_alternative<long>(v)) p[k] = std::get<long>(v);
        else p[k] = std::get<std::string>(v);
    }
    j["params"] = p;
    j["status"] = to_string(status);
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [k, v] : witness) w[k] = v;
    j["witness"] = w;
    j["elapsed_ms"] = with_timing ? static_cast<long>(elapsed_ms + 0.5) : 0L;
    return j;
}

std::string VerificationReport::to_text(bool with_timing) const {
    std::ostringstream os;
    os << to_string(status) << ' ' << claim_id;
    for (const auto& [k, v] : params) {
        os << ' ' << k << '=';
        if (std::holds_alternative<long>(v)) os << std::get<long>(v);
        else os << std::get<std::string>(v);
    }
    if (with_timing) os << " (" << static_cast<long>(elapsed_ms + 0.5) << " ms)";
    for (const auto& [k, v] : witness) os << "\n    " << k << ": " << v;
    return os.str();
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    const std::size_t n = std::min(a.params.size(), b.params.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [ka, va] = a.params[i];
        const auto& [kb, vb] = b.params[i];
        if (ka != kb) return ka < kb;
        if (va.index() != vb.index()) return va.index() < vb.index();
        if (va != vb) return va < vb;
    }
    return a.params.size() < b.params.size();
}

std::string render_json(const std::vector<VerificationReport>& reports, bool with_timing) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(r.to_json(with_timing));
    return arr.dump(2) + "\n";
}

std::string render_text(const std::vector<VerificationReport>& reports, bool with_timing) {
    std::string out;
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : reports) {
        out += r.to_text(with_timing) + "\n";
        ++counts[static_cast<int>(r.status)];
    }
    out += "summary: " + std::to_string(counts[0]) + " verified, " + std::to_string(counts[1]) +
           " refuted, " + std::to_string(counts[2]) + " inconclusive\n";
    return out;
}

} // namespace motzhank
