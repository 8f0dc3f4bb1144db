#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperring/budget.hpp"
#include "hyperring/errors.hpp"
#include "hyperring/subset.hpp"

namespace hyperring {

class Multiring;
class Spectrum;
struct IdempotentFrame;
using MultiringPtr = std::shared_ptr<const Multiring>;

/// Unvalidated operation tables over the carrier {0, ..., n-1}.
struct RawTables {
    std::string name;
    std::vector<std::string> names;
    std::vector<std::vector<std::vector<Element>>> add;  // add[a][b] lists a+b
    std::vector<std::vector<Element>> mul;
    std::vector<Element> neg;
    Element zero = 0;
    Element one = 0;
};

enum class Axiom {
    NonEmptySum,
    Reversibility,       // k in a+b  =>  b in -a+k and a in k-b
    Neutral,             // a+0 = {a}
    Associativity,       // (a+b)+c contained in a+(b+c)
    Commutativity,
    ZeroAbsorbing,       // a*0 = 0
    HalfDistributivity,  // a in b+c  =>  ad in bd+cd
    MulMonoid,           // commutative, associative, unital
};

auto axiom_name(Axiom a) -> std::string_view;

struct Violation {
    Axiom axiom;
    std::vector<Element> witness;
    std::string message;
};

/// At most one violation is recorded per axiom.
struct ValidationReport {
    std::vector<Violation> violations;
    auto ok() const -> bool { return violations.empty(); }
    auto violates(Axiom a) const -> bool;
    auto describe(const std::vector<std::string>& names) const -> std::string;
};

class ValidationError : public Error {
public:
    ValidationError(std::string name, ValidationReport report, const std::vector<std::string>& names)
        : Error("not a multiring: " + name + "\n" + report.describe(names)), report_(std::move(report)) {}
    auto report() const -> const ValidationReport& { return report_; }

private:
    ValidationReport report_;
};

/// Checks shape and throws MalformedTable; returns axiom violations.
auto validate_multiring(const RawTables& t, const Budget& budget = Budget::defaults()) -> ValidationReport;

namespace detail {
struct Memo {
    std::once_flag spectrum_once;
    std::shared_ptr<const Spectrum> spectrum;
    std::once_flag frame_once;
    std::shared_ptr<const IdempotentFrame> frame;
};
}  // namespace detail

/// Immutable finite multiring. Always owned by a shared_ptr.
class Multiring : public std::enable_shared_from_this<Multiring> {
public:
    /// Validates the axioms and throws ValidationError on failure.
    static auto create(RawTables t) -> MultiringPtr;
    /// Only checks shape. For constructions whose axioms follow from theory.
    static auto create_unchecked(RawTables t) -> MultiringPtr;

    auto ptr() const -> MultiringPtr { return shared_from_this(); }

    auto name() const -> const std::string& { return name_; }
    auto size() const -> std::size_t { return n_; }
    auto element_name(Element a) const -> const std::string& { return names_[a]; }
    auto element_names() const -> const std::vector<std::string>& { return names_; }
    auto find(std::string_view name) const -> std::optional<Element>;
    /// Looks up a name and throws PreconditionFailed if absent.
    auto at(std::string_view name) const -> Element;

    auto add(Element a, Element b) const -> const Subset& { return add_[a * n_ + b]; }
    auto mul(Element a, Element b) const -> Element { return mul_[a * n_ + b]; }
    auto neg(Element a) const -> Element { return neg_[a]; }
    auto zero() const -> Element { return zero_; }
    auto one() const -> Element { return one_; }
    auto minus_one() const -> Element { return neg_[one_]; }
    auto is_zero_ring() const -> bool { return zero_ == one_; }

    auto empty_set() const -> Subset { return Subset(n_); }
    auto singleton(Element a) const -> Subset { return Subset(n_, {a}); }
    auto carrier() const -> Subset { return Subset::full(n_); }

    /// S + T as the union of s + t.
    auto sum(const Subset& s, const Subset& t) const -> Subset;
    auto sum(Element a, const Subset& t) const -> Subset;
    /// x1 + (x2 + (... + xn)); {0} for the empty list.
    auto sum_of(const std::vector<Element>& xs) const -> Subset;
    /// a - b, i.e. a + (-b).
    auto diff(Element a, Element b) const -> const Subset& { return add(a, neg_[b]); }
    auto scale(Element a, const Subset& s) const -> Subset;
    auto products(const Subset& s, const Subset& t) const -> Subset;
    auto image_neg(const Subset& s) const -> Subset;
    auto power(Element a, std::size_t k) const -> Element;
    /// {a^0, a^1, a^2, ...}
    auto powers(Element a) const -> Subset;
    /// Every element of every finite sum of members of `s` (s itself included).
    auto sum_closure(const Subset& s) const -> Subset;
    auto squares() const -> Subset;
    /// x + y is a singleton for every x, y.
    auto is_ring() const -> bool;

    auto tables() const -> RawTables;
    auto renamed(std::string name) const -> MultiringPtr;
    /// Same tables (names ignored).
    auto same_tables(const Multiring& o) const -> bool;

    auto memo() const -> detail::Memo& { return *memo_; }

    Multiring(const Multiring&) = delete;
    auto operator=(const Multiring&) -> Multiring& = delete;

private:
    struct Key {};

public:
    Multiring(Key, RawTables t);

private:
    std::string name_;
    std::size_t n_;
    std::vector<std::string> names_;
    std::vector<Subset> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    Element zero_;
    Element one_;
    std::shared_ptr<detail::Memo> memo_;
};

/// Set the default for whether constructions re-validate their output.
/// On by default unless NDEBUG is defined.
void set_revalidate_constructions(bool on);
auto revalidate_constructions() -> bool;

/// Used by constructions: creates the result and, if enabled and within
/// budget, re-runs the axiom check.
auto make_constructed(RawTables t) -> MultiringPtr;

/// Every x in b*d + c*d has the form a*d with a in b + c.
struct HyperringCheck {
    bool ok = true;
    std::vector<Element> witness;  // x, b, c, d
};
auto check_hyperring(const Multiring& A) -> HyperringCheck;
auto is_hyperring(const Multiring& A) -> bool;

struct Classification {
    bool multidomain = false;
    bool multifield = false;
    bool hyperfield = false;
};
auto classify(const Multiring& A) -> Classification;

auto units(const Multiring& A) -> Subset;
/// a is a weak unit when 1 lies in a sum of multiples of a.
auto weak_units(const Multiring& A) -> Subset;
auto idempotents(const Multiring& A) -> Subset;

}  // namespace hyperring
