#pragma once

#include <doctest.h>

#include "hyperring/cli/registry.hpp"
#include "hyperring/cli/theorems.hpp"
#include "hyperring/constructions.hpp"

namespace testing {

inline auto builtin(const std::string& id) -> hyperring::MultiringPtr {
    auto A = hyperring::cli::find_builtin(id);
    REQUIRE_MESSAGE(A, "no builtin " << id);
    return A;
}

inline auto el(const hyperring::Multiring& A, std::string_view name) -> hyperring::Element { return A.at(name); }

inline auto set(const hyperring::Multiring& A, std::initializer_list<std::string_view> names) -> hyperring::Subset {
    auto s = A.empty_set();
    for (auto n : names) s.insert(A.at(n));
    return s;
}

/// Runs a theorem checker over every builtin: no failures, at least one pass.
/// Returns the ids where it passed.
inline auto theorem_passes(const std::string& id) -> std::vector<std::string> {
    const auto* t = hyperring::cli::find_theorem(id);
    REQUIRE_MESSAGE(t, "no theorem " << id);
    std::vector<std::string> passed;
    for (const auto& inst : hyperring::cli::builtin_registry()) {
        const auto r = hyperring::cli::run_theorem(*t, inst);
        CHECK_MESSAGE(r.status != hyperring::cli::Status::Fail, id << " on " << inst.id << ": " << r.reason);
        if (r.status == hyperring::cli::Status::Pass) passed.push_back(inst.id);
    }
    CHECK_MESSAGE(!passed.empty(), id << " never applied");
    return passed;
}

inline auto names(const hyperring::Multiring& A, const hyperring::Subset& s) -> std::vector<std::string> {
    std::vector<std::string> out;
    s.for_each([&](hyperring::Element a) { out.push_back(A.element_name(a)); });
    return out;
}

}  // namespace testing
