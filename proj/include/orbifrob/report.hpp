#pragma once

#include <string>
#include <vector>

namespace orbifrob {

/// One named check with outcome and, on failure, a concrete witness.
struct CheckItem {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& witness = "") {
        items.push_back({name, pass, witness});
    }
    const CheckItem* first_failure() const {
        for (const auto& it : items)
            if (!it.pass) return &it;
        return nullptr;
    }
    std::string summary() const {
        std::string s;
        for (const auto& it : items) {
            s += it.name;
            s += it.pass ? ": pass" : ": FAIL";
            if (!it.pass && !it.witness.empty()) s += " [" + it.witness + "]";
            s += "\n";
        }
        return s;
    }
};

}  // namespace orbifrob
