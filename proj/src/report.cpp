#include "supercong/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace supercong {

namespace {
// CSV field quoting for commas/quotes (case labels contain commas).
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

std::string to_csv(const std::vector<ClaimReport>& reports, bool with_timing) {
    std::ostringstream os;
    os << "claim,p,case,lhs,rhs,modulus,verdict,micros\n";
    for (const auto& r : reports) {
        os << csv_field(r.claim) << ',' << r.p << ',' << csv_field(r.case_label) << ','
           << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << csv_field(r.modulus)
           << ',' << verdict_name(r.verdict) << ',' << (with_timing ? r.micros : 0) << '\n';
    }
    return os.str();
}

std::string to_json(const std::vector<ClaimReport>& reports, bool with_timing) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json row;
        row["claim"] = r.claim;
        row["p"] = r.p;
        row["case"] = r.case_label;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs;
        row["modulus"] = r.modulus;
        row["verdict"] = verdict_name(r.verdict);
        row["micros"] = with_timing ? r.micros : 0;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

std::string to_table(const std::vector<ClaimReport>& reports) {
    size_t wc = 5, wp = 1, wcase = 4, wl = 3, wr = 3, wm = 7;
    for (const auto& r : reports) {
        wc = std::max(wc, r.claim.size());
        wp = std::max(wp, std::to_string(r.p).size());
        wcase = std::max(wcase, r.case_label.size());
        wl = std::max(wl, r.lhs.size());
        wr = std::max(wr, r.rhs.size());
        wm = std::max(wm, r.modulus.size());
    }
    std::ostringstream os;
    auto pad = [&](const std::string& s, size_t w) {
        os << s << std::string(w - std::min(w, s.size()) + 2, ' ');
    };
    pad("claim", wc);
    pad("p", wp);
    pad("case", wcase);
    pad("lhs", wl);
    pad("rhs", wr);
    pad("modulus", wm);
    os << "verdict  micros\n";
    for (const auto& r : reports) {
        pad(r.claim, wc);
        pad(std::to_string(r.p), wp);
        pad(r.case_label, wcase);
        pad(r.lhs, wl);
        pad(r.rhs, wr);
        pad(r.modulus, wm);
        os << verdict_name(r.verdict) << "  " << r.micros << '\n';
    }
    return os.str();
}

std::string summary_text(const SweepSummary& s) {
    std::ostringstream os;
    for (const auto& pc : s.per_claim) {
        os << pc.id << " [" << status_name(pc.status) << "]: " << pc.pass << " pass, "
           << pc.fail << " fail, " << pc.inapplicable << " inapplicable\n";
    }
    os << "proved failures: " << s.proved_failures
       << ", conjectural failures: " << s.conjectural_failures << '\n';
    return os.str();
}

}  // namespace supercong
