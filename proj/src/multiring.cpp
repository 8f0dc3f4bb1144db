#include "hyperring/multiring.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <unordered_set>

namespace hyperring {

namespace {

Budget g_budget{};

#ifdef NDEBUG
std::atomic<bool> g_revalidate{false};
#else
std::atomic<bool> g_revalidate{true};
#endif

void check_shape(const RawTables& t) {
    const auto n = t.names.size();
    if (n == 0) throw MalformedTable("empty carrier");
    std::unordered_set<std::string> seen;
    for (const auto& nm : t.names) {
        if (nm.empty()) throw MalformedTable("empty element name");
        if (!seen.insert(nm).second) throw MalformedTable("duplicate element name '" + nm + "'");
    }
    auto in_range = [n](Element e) { return e < n; };
    if (!in_range(t.zero) || !in_range(t.one)) throw MalformedTable("zero or one out of range");
    if (t.neg.size() != n) throw MalformedTable("neg table has wrong length");
    for (auto e : t.neg)
        if (!in_range(e)) throw MalformedTable("neg entry out of range");
    if (t.mul.size() != n || t.add.size() != n) throw MalformedTable("table is not n x n");
    for (std::size_t a = 0; a < n; ++a) {
        if (t.mul[a].size() != n || t.add[a].size() != n) throw MalformedTable("ragged table row");
        for (auto e : t.mul[a])
            if (!in_range(e)) throw MalformedTable("mul entry out of range");
        for (const auto& s : t.add[a])
            for (auto e : s)
                if (!in_range(e)) throw MalformedTable("add entry out of range");
    }
}

}  // namespace

auto Budget::defaults() -> const Budget& { return g_budget; }
void Budget::set_defaults(const Budget& b) { g_budget = b; }

auto axiom_name(Axiom a) -> std::string_view {
    switch (a) {
        case Axiom::NonEmptySum: return "nonempty sums";
        case Axiom::Reversibility: return "axiom i (reversibility)";
        case Axiom::Neutral: return "axiom ii (a+0={a})";
        case Axiom::Associativity: return "axiom iii (associativity)";
        case Axiom::Commutativity: return "axiom iv (commutativity)";
        case Axiom::ZeroAbsorbing: return "axiom v (a*0=0)";
        case Axiom::HalfDistributivity: return "axiom vi (half-distributivity)";
        case Axiom::MulMonoid: return "multiplicative monoid";
    }
    return "?";
}

auto ValidationReport::violates(Axiom a) const -> bool {
    return std::any_of(violations.begin(), violations.end(), [a](const auto& v) { return v.axiom == a; });
}

auto ValidationReport::describe(const std::vector<std::string>& names) const -> std::string {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << axiom_name(v.axiom) << ": " << v.message << " [";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            os << (i ? " " : "") << (v.witness[i] < names.size() ? names[v.witness[i]] : std::to_string(v.witness[i]));
        os << "]\n";
    }
    return os.str();
}

auto validate_multiring(const RawTables& t, const Budget& budget) -> ValidationReport {
    check_shape(t);
    const auto n = t.names.size();
    if (n > budget.validate_size)
        throw BudgetExceeded("axiom validation limited to " + std::to_string(budget.validate_size) + " elements");

    std::vector<Subset> add(n * n, Subset(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (auto e : t.add[a][b]) add[a * n + b].insert(e);
    auto A = [&](Element a, Element b) -> const Subset& { return add[a * n + b]; };
    auto M = [&](Element a, Element b) { return t.mul[a][b]; };
    const auto& N = t.neg;
    const auto z = t.zero;

    ValidationReport rep;
    auto report = [&](Axiom ax, std::vector<Element> w, std::string msg) {
        if (!rep.violates(ax)) rep.violations.push_back({ax, std::move(w), std::move(msg)});
    };

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (A(a, b).empty()) report(Axiom::NonEmptySum, {a, b}, "a+b is empty");
            if (A(a, b) != A(b, a)) report(Axiom::Commutativity, {a, b}, "a+b != b+a");
        }
    for (Element a = 0; a < n; ++a)
        if (A(a, z) != Subset(n, {a})) report(Axiom::Neutral, {a}, "a+0 != {a}");

    for (Element a = 0; a < n && !rep.violates(Axiom::Reversibility); ++a)
        for (Element b = 0; b < n && !rep.violates(Axiom::Reversibility); ++b)
            A(a, b).for_each([&](Element k) {
                if (!A(N[a], k).contains(b)) report(Axiom::Reversibility, {k, a, b}, "k in a+b but b not in -a+k");
                else if (!A(k, N[b]).contains(a))
                    report(Axiom::Reversibility, {k, a, b}, "k in a+b but a not in k-b");
            });

    Subset left(n), right(n);
    for (Element a = 0; a < n && !rep.violates(Axiom::Associativity); ++a)
        for (Element b = 0; b < n && !rep.violates(Axiom::Associativity); ++b)
            for (Element c = 0; c < n; ++c) {
                left.clear();
                right.clear();
                A(a, b).for_each([&](Element g) { left |= A(g, c); });
                A(b, c).for_each([&](Element h) { right |= A(a, h); });
                if (!left.is_subset_of(right)) {
                    report(Axiom::Associativity, {a, b, c}, "(a+b)+c not contained in a+(b+c)");
                    break;
                }
            }

    for (Element a = 0; a < n; ++a)
        if (M(a, z) != z) report(Axiom::ZeroAbsorbing, {a}, "a*0 != 0");

    for (Element a = 0; a < n && !rep.violates(Axiom::MulMonoid); ++a) {
        if (M(t.one, a) != a) report(Axiom::MulMonoid, {a}, "1*a != a");
        for (Element b = 0; b < n; ++b) {
            if (M(a, b) != M(b, a)) report(Axiom::MulMonoid, {a, b}, "ab != ba");
            for (Element c = 0; c < n && !rep.violates(Axiom::MulMonoid); ++c)
                if (M(M(a, b), c) != M(a, M(b, c))) report(Axiom::MulMonoid, {a, b, c}, "(ab)c != a(bc)");
        }
    }

    for (Element b = 0; b < n && !rep.violates(Axiom::HalfDistributivity); ++b)
        for (Element c = 0; c < n && !rep.violates(Axiom::HalfDistributivity); ++c)
            A(b, c).for_each([&](Element a) {
                for (Element d = 0; d < n; ++d)
                    if (!A(M(b, d), M(c, d)).contains(M(a, d))) {
                        report(Axiom::HalfDistributivity, {a, b, c, d}, "a in b+c but ad not in bd+cd");
                        return;
                    }
            });
    return rep;
}

Multiring::Multiring(Key, RawTables t)
    : name_(std::move(t.name)),
      n_(t.names.size()),
      names_(std::move(t.names)),
      add_(n_ * n_, Subset(n_)),
      mul_(n_ * n_),
      neg_(std::move(t.neg)),
      zero_(t.zero),
      one_(t.one),
      memo_(std::make_shared<detail::Memo>()) {
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            mul_[a * n_ + b] = t.mul[a][b];
            for (auto e : t.add[a][b]) add_[a * n_ + b].insert(e);
        }
}

auto Multiring::create(RawTables t) -> MultiringPtr {
    auto rep = validate_multiring(t);
    if (!rep.ok()) throw ValidationError(t.name, std::move(rep), t.names);
    return std::make_shared<const Multiring>(Key{}, std::move(t));
}

auto Multiring::create_unchecked(RawTables t) -> MultiringPtr {
    check_shape(t);
    return std::make_shared<const Multiring>(Key{}, std::move(t));
}

void set_revalidate_constructions(bool on) { g_revalidate = on; }
auto revalidate_constructions() -> bool { return g_revalidate; }

auto make_constructed(RawTables t) -> MultiringPtr {
    if (t.names.size() > Budget::defaults().max_elements)
        throw BudgetExceeded("construction produced " + std::to_string(t.names.size()) + " elements");
    if (revalidate_constructions() && t.names.size() <= Budget::defaults().validate_size) {
        auto rep = validate_multiring(t);
        if (!rep.ok())
            throw TheoremViolation("construction " + t.name + " is a multiring", {rep.describe(t.names)});
    }
    return Multiring::create_unchecked(std::move(t));
}

auto Multiring::find(std::string_view name) const -> std::optional<Element> {
    for (std::size_t i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

auto Multiring::at(std::string_view name) const -> Element {
    if (auto e = find(name)) return *e;
    throw PreconditionFailed("no element named '" + std::string(name) + "' in " + name_);
}

auto Multiring::sum(const Subset& s, const Subset& t) const -> Subset {
    Subset out(n_);
    s.for_each([&](Element a) { t.for_each([&](Element b) { out |= add(a, b); }); });
    return out;
}

auto Multiring::sum(Element a, const Subset& t) const -> Subset {
    Subset out(n_);
    t.for_each([&](Element b) { out |= add(a, b); });
    return out;
}

auto Multiring::sum_of(const std::vector<Element>& xs) const -> Subset {
    if (xs.empty()) return singleton(zero_);
    Subset acc = singleton(xs.back());
    for (std::size_t i = xs.size() - 1; i-- > 0;) acc = sum(xs[i], acc);
    return acc;
}

auto Multiring::scale(Element a, const Subset& s) const -> Subset {
    Subset out(n_);
    s.for_each([&](Element b) { out.insert(mul(a, b)); });
    return out;
}

auto Multiring::products(const Subset& s, const Subset& t) const -> Subset {
    Subset out(n_);
    s.for_each([&](Element a) { t.for_each([&](Element b) { out.insert(mul(a, b)); }); });
    return out;
}

auto Multiring::image_neg(const Subset& s) const -> Subset {
    Subset out(n_);
    s.for_each([&](Element a) { out.insert(neg_[a]); });
    return out;
}

auto Multiring::power(Element a, std::size_t k) const -> Element {
    Element r = one_;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

auto Multiring::powers(Element a) const -> Subset {
    Subset out(n_);
    Element x = one_;
    while (!out.contains(x)) {
        out.insert(x);
        x = mul(x, a);
    }
    return out;
}

auto Multiring::sum_closure(const Subset& s) const -> Subset {
    Subset u = s;
    while (true) {
        Subset v = u | sum(s, u);
        if (v == u) return u;
        u = std::move(v);
    }
}

auto Multiring::squares() const -> Subset {
    Subset out(n_);
    for (Element a = 0; a < n_; ++a) out.insert(mul(a, a));
    return out;
}

auto Multiring::is_ring() const -> bool {
    return std::all_of(add_.begin(), add_.end(), [](const Subset& s) { return s.count() == 1; });
}

auto Multiring::tables() const -> RawTables {
    RawTables t;
    t.name = name_;
    t.names = names_;
    t.add.assign(n_, std::vector<std::vector<Element>>(n_));
    t.mul.assign(n_, std::vector<Element>(n_));
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            t.add[a][b] = add(a, b).elements();
            t.mul[a][b] = mul(a, b);
        }
    t.neg = neg_;
    t.zero = zero_;
    t.one = one_;
    return t;
}

auto Multiring::renamed(std::string name) const -> MultiringPtr {
    auto t = tables();
    t.name = std::move(name);
    return create_unchecked(std::move(t));
}

auto Multiring::same_tables(const Multiring& o) const -> bool {
    return n_ == o.n_ && zero_ == o.zero_ && one_ == o.one_ && neg_ == o.neg_ && mul_ == o.mul_ && add_ == o.add_;
}

auto check_hyperring(const Multiring& A) -> HyperringCheck {
    const auto n = A.size();
    for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
            for (Element d = 0; d < n; ++d) {
                const auto allowed = A.scale(d, A.add(b, c));
                const auto& got = A.add(A.mul(b, d), A.mul(c, d));
                if (!got.is_subset_of(allowed)) {
                    auto x = (got - allowed).first().value();
                    return {false, {x, b, c, d}};
                }
            }
    return {};
}

auto is_hyperring(const Multiring& A) -> bool { return check_hyperring(A).ok; }

auto units(const Multiring& A) -> Subset {
    Subset out = A.empty_set();
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (A.mul(a, b) == A.one()) {
                out.insert(a);
                break;
            }
    return out;
}

auto weak_units(const Multiring& A) -> Subset {
    Subset out = A.empty_set();
    const auto all = A.carrier();
    for (Element a = 0; a < A.size(); ++a)
        if (A.sum_closure(A.scale(a, all)).contains(A.one())) out.insert(a);
    return out;
}

auto idempotents(const Multiring& A) -> Subset {
    Subset out = A.empty_set();
    for (Element a = 0; a < A.size(); ++a)
        if (A.mul(a, a) == a) out.insert(a);
    return out;
}

auto classify(const Multiring& A) -> Classification {
    Classification c;
    if (A.is_zero_ring()) return c;
    c.multidomain = true;
    for (Element a = 0; a < A.size() && c.multidomain; ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (a != A.zero() && b != A.zero() && A.mul(a, b) == A.zero()) {
                c.multidomain = false;
                break;
            }
    auto nonzero = A.carrier();
    nonzero.erase(A.zero());
    c.multifield = nonzero.is_subset_of(weak_units(A));
    c.hyperfield = nonzero.is_subset_of(units(A));
    return c;
}

}  // namespace hyperring
