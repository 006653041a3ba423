#ifndef CURVLAB_REPORT_HPP
#define CURVLAB_REPORT_HPP

#include <string>
#include <vector>

namespace curvlab {

// One verdict of an audit: a stable check id, pass/fail, exact values and
// witnesses in printable form.
struct CheckResult {
    std::string id;
    bool pass = true;
    std::string detail;
};

struct ReportSection {
    std::string name;
    std::vector<CheckResult> checks;

    bool pass() const;
    void add(std::string id, bool ok, std::string detail = "");
};

struct AuditReport {
    std::vector<ReportSection> sections;

    bool pass() const;
    int failure_count() const;
    ReportSection& section(const std::string& name);
    std::string text() const;
    std::string json() const;
};

} // namespace curvlab

#endif
