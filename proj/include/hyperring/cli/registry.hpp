#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperring/multiring.hpp"

namespace hyperring::cli {

struct Instance {
    std::string id;  // also the multiring name
    MultiringPtr ring;
};

/// The builtin instances, in a fixed order. Built once on first use.
auto builtin_registry() -> const std::vector<Instance>&;
/// nullptr when no builtin has that id.
auto find_builtin(std::string_view id) -> MultiringPtr;

/// Sign vectors on three points, generated by x = (+,-,0); sums are the
/// pointwise sign sums restricted to the carrier. Real reduced and a = a^3,
/// but not a hyperring.
auto rs7() -> MultiringPtr;

}  // namespace hyperring::cli
