#pragma once

#include <string>
#include <vector>

#include "phigamma/errors.hpp"

namespace phigamma {

struct CheckResult {
    std::string name;
    bool pass{};
    std::string witness;  // empty on pass, else a short description of the failure
};

struct CheckReport {
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
    }
    void absorb(const CheckReport& other, const std::string& prefix = "") {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

/* throws with the given code if any check failed */
inline void require_pass(const CheckReport& report, ErrCode code) {
    if (const CheckResult* f = report.first_failure())
        fail(code, f->name + (f->witness.empty() ? "" : " [" + f->witness + "]"));
}

}  // namespace phigamma
