#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperring/cli/registry.hpp"

namespace hyperring::cli {

/// Thrown by a checker when the theorem does not apply to the instance.
class Skip : public Error {
public:
    using Error::Error;
};

enum class Status { Pass, Fail, Skipped };
auto status_name(Status s) -> std::string;
/// Throws PreconditionFailed on an unknown name.
auto parse_status(const std::string& s) -> Status;

struct VerificationReport {
    std::string theorem;
    std::string instance;
    Status status = Status::Pass;
    std::string reason;                // skip reason or failure message
    std::vector<std::string> witness;  // nonempty on Fail
    double wall_ms = 0;

    auto operator==(const VerificationReport&) const -> bool = default;
};

struct Theorem {
    std::string id;
    std::string statement;
    std::function<void(const Multiring&)> check;  // throws Skip, TheoremViolation, ...
};

/// The 27 checkers in a fixed order.
auto theorem_registry() -> const std::vector<Theorem>&;
/// nullptr for an unknown id.
auto find_theorem(const std::string& id) -> const Theorem*;

/// Runs one checker and maps exceptions to a status.
auto run_theorem(const Theorem& t, const Instance& inst) -> VerificationReport;
/// Every (theorem, instance) pair, sorted by theorem id then instance id.
auto verify(const std::vector<const Theorem*>& theorems, const std::vector<Instance>& instances)
    -> std::vector<VerificationReport>;

}  // namespace hyperring::cli
