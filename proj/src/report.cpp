#include "curvlab/report.hpp"

#include <json.hpp>

#include <sstream>

namespace curvlab {

bool ReportSection::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void ReportSection::add(std::string id, bool ok, std::string detail) {
    checks.push_back({std::move(id), ok, std::move(detail)});
}

bool AuditReport::pass() const {
    for (const auto& s : sections)
        if (!s.pass()) return false;
    return true;
}

int AuditReport::failure_count() const {
    int n = 0;
    for (const auto& s : sections)
        for (const auto& c : s.checks)
            if (!c.pass) ++n;
    return n;
}

ReportSection& AuditReport::section(const std::string& name) {
    for (auto& s : sections)
        if (s.name == name) return s;
    sections.push_back({name, {}});
    return sections.back();
}

std::string AuditReport::text() const {
    std::ostringstream os;
    for (const auto& s : sections) {
        os << "[" << s.name << "]\n";
        for (const auto& c : s.checks) {
            os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.id;
            if (!c.detail.empty()) os << "  " << c.detail;
            os << "\n";
        }
    }
    os << (pass() ? "verdict: pass" : "verdict: fail") << "\n";
    return os.str();
}

std::string AuditReport::json() const {
    nlohmann::json j;
    j["verdict"] = pass() ? "pass" : "fail";
    j["sections"] = nlohmann::json::array();
    for (const auto& s : sections) {
        nlohmann::json js;
        js["name"] = s.name;
        js["pass"] = s.pass();
        js["checks"] = nlohmann::json::array();
        for (const auto& c : s.checks) {
            nlohmann::json jc;
            jc["id"] = c.id;
            jc["pass"] = c.pass;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            js["checks"].push_back(jc);
        }
        j["sections"].push_back(js);
    }
    return j.dump(2);
}

} // namespace curvlab
