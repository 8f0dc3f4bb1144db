#pragma once

#include <cstddef>
#include <cstdint>

namespace hyperring {

/// Limits for the exponential searches. Exceeding one raises BudgetExceeded.
struct Budget {
    // Morphism and isomorphism search run when |A| * |B| <= search_size^2.
    std::size_t search_size = 12;
    // Full axiom validation runs up to this carrier size.
    std::size_t validate_size = 64;
    // Largest carrier (or pair space) a construction may produce.
    std::size_t max_elements = 4096;
    // Idempotent count up to which partitions are enumerated.
    std::size_t partition_idempotents = 16;
    std::uint64_t max_nodes = 20'000'000;

    static auto defaults() -> const Budget&;
    /// Meant to be called once at startup, before any worker threads.
    static void set_defaults(const Budget& b);
};

}  // namespace hyperring
