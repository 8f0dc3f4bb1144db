#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperring/constructions.hpp"

namespace hyperring {

/// F_A on the basic opens: D(a) |-> S_a^{-1} A.
struct StructuralPresheaf {
    MultiringPtr owner;
    std::vector<Subset> opens;        // distinct D(a) over prime indices, sorted
    std::vector<Element> generators;  // least a with D(a) = opens[i]
    std::vector<Subset> saturations;  // S_a
    std::vector<LocalizationPresentation> sections;
    std::vector<std::size_t> open_of;  // a |-> index of D(a)
    /// (i, j) with opens[j] inside opens[i] |-> rho_{i, j}
    std::map<std::pair<std::size_t, std::size_t>, Morphism> restrictions;

    auto restriction(std::size_t from, std::size_t to) const -> const Morphism&;
    auto open_index(const Subset& u) const -> std::optional<std::size_t>;
};

/// Throws BudgetExceeded if sections outgrow the budget.
auto build_presheaf(const Multiring& A) -> StructuralPresheaf;

struct Stalk {
    std::size_t open;                  // minimal open containing p
    LocalizationPresentation local;    // A_p
    Morphism iso;                      // S_b^{-1} A -> A_p
};
/// The stalk at prime index `p`, checked against A_p.
auto stalk(const StructuralPresheaf& F, std::size_t p) -> Stalk;

struct SheafCheck {
    bool mono = true;
    bool glue = true;
    std::vector<std::string> witness;
    auto sheaf() const -> bool { return mono && glue; }
};
/// Mono and gluing conditions over every irredundant cover of every nonempty basic open.
auto check_sheaf(const StructuralPresheaf& F) -> SheafCheck;
auto is_monopresheaf(const Multiring& A) -> bool;
auto is_sheaf(const Multiring& A) -> bool;

/// Irredundant families of opens (indices into F.opens) whose union is opens[u].
auto irredundant_covers(const StructuralPresheaf& F, std::size_t u) -> std::vector<std::vector<std::size_t>>;

struct InvertibleCheck {
    bool image_units = false;   // rho_a(S_a) inside the units of A_a
    bool weak_units = false;    // weak units of A_a are units
    bool divisors = false;      // S_a = {x : a^n = xy}
    bool iso = false;           // A_a -> S_a^{-1} A is an isomorphism
};
/// Evaluates the four a-invertible clauses and checks they agree.
auto check_invertible(const Multiring& A, Element a) -> InvertibleCheck;
auto has_invertible_property(const Multiring& A, Element a) -> bool;

/// D(a) in D(b), sqrt(a) in sqrt(b), a in sqrt(b), S_b in S_a agree for all pairs.
void check_basic_open_order(const Multiring& A);
/// For a in b + c in A_p, finds x outside p with ax in bx + cx and checks a in b + c in A_x.
void check_fiber_to_open(const Multiring& A);

}  // namespace hyperring
