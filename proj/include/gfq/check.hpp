#pragma once

#include <string>
#include <vector>

namespace gfq {

// One verified statement. `pass` means the computed facts matched the
// predicted behavior; for knowingly degenerate cases the prediction itself
// encodes the degeneracy, so a matching "failure" still passes.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckList {
    std::vector<CheckResult> items;

    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back(CheckResult{std::move(name), pass, std::move(detail)});
    }
    void extend(const CheckList& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
    bool all_pass() const {
        for (const auto& c : items)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int f = 0;
        for (const auto& c : items)
            if (!c.pass) ++f;
        return f;
    }
};

}  // namespace gfq
