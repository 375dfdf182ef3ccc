#pragma once

#include <optional>
#include <string>
#include <vector>

namespace skewhopf {

struct Check {
    std::string name;
    bool pass = true;
    std::string witness;       // empty when passing
    std::optional<long> rank;
    std::vector<long> dims;
};

struct Report {
    std::vector<Check> checks;
    std::optional<int> degree_bound;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    Check& add(std::string name, bool ok, std::string witness = {}) {
        checks.push_back(Check{std::move(name), ok, ok ? std::string() : std::move(witness), {}, {}});
        return checks.back();
    }
    void merge(const Report& other, const std::string& prefix = {}) {
        for (auto c : other.checks) {
            if (!prefix.empty()) c.name = prefix + "." + c.name;
            checks.push_back(std::move(c));
        }
        if (other.degree_bound && !degree_bound) degree_bound = other.degree_bound;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
        return {};
    }
};

}  // namespace skewhopf
