#ifndef LAMRING_REPORT_HPP
#define LAMRING_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

namespace lamring {

struct Violation {
    std::string condition;  // stable id, e.g. "psi.composition"
    std::string witness;    // offending elements / indices
    std::string lhs;
    std::string rhs;
};

/// Structured verification outcome; deterministic rendering for golden files.
struct Report {
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }

    void fail(std::string condition, std::string witness, std::string lhs = "", std::string rhs = "") {
        violations.push_back({std::move(condition), std::move(witness), std::move(lhs), std::move(rhs)});
    }
    void note(std::string text) { notes.push_back(std::move(text)); }
    void merge(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }

    std::string to_string() const {
        std::ostringstream os;
        os << (ok() ? "ok" : "FAILED") << "\n";
        for (const auto& v : violations) {
            os << "violation: " << v.condition << " at " << v.witness;
            if (!v.lhs.empty() || !v.rhs.empty()) os << "  lhs=" << v.lhs << "  rhs=" << v.rhs;
            os << "\n";
        }
        for (const auto& n : notes) os << "note: " << n << "\n";
        return os.str();
    }
};

}  // namespace lamring

#endif
