#include "hyperring/realspec.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hyperring {

namespace {

auto three() -> const MultiringPtr& {
    static const MultiringPtr t = sign3();
    return t;
}

auto sign_char(Sign s) -> char { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

}  // namespace

auto sign_sum_contains(Sign x, Sign y, Sign z) -> bool {
    return three()->add(sign_index(y), sign_index(z)).contains(sign_index(x));
}

auto SperPoint::as_morphism() const -> Morphism {
    std::vector<Element> m(signs.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = sign_index(signs[i]);
    return Morphism(owner, three(), std::move(m));
}

auto SperPoint::support() const -> Subset {
    Subset s = owner->empty_set();
    for (Element a = 0; a < signs.size(); ++a)
        if (signs[a] == 0) s.insert(a);
    return s;
}

auto sums_of_squares(const Multiring& A) -> Subset { return A.sum_closure(A.squares()); }

auto is_semireal(const Multiring& A) -> bool { return !sums_of_squares(A).contains(A.minus_one()); }

auto Preorder::generated(const Multiring& A, const Subset& x) -> Preorder {
    Subset t = x | A.squares();
    while (true) {
        auto u = t | A.products(t, t) | A.sum(t, t);
        if (u == t) break;
        t = std::move(u);
    }
    const bool proper = !t.contains(A.minus_one());
    return Preorder(A.ptr(), std::move(t), proper);
}

auto sper_nonnegative_on(const Multiring& A, const Subset& X, const Budget& budget) -> std::vector<SperPoint> {
    std::vector<SperPoint> out;
    for (const auto& f : enumerate_morphisms(A, *three(), budget)) {
        SperPoint p{A.ptr(), {}};
        for (auto v : f.map()) p.signs.push_back(sign_of(v));
        bool keep = true;
        X.for_each([&](Element t) { keep = keep && p.signs[t] >= 0; });
        if (keep) out.push_back(std::move(p));
    }
    return out;
}

auto enumerate_sper(const Multiring& A, const Preorder* T, const Budget& budget) -> std::vector<SperPoint> {
    return sper_nonnegative_on(A, T ? T->elements() : A.empty_set(), budget);
}

auto is_prime_cone(const Multiring& A, const Subset& P) -> bool {
    if (!A.squares().is_subset_of(P)) return false;
    if (!A.sum(P, P).is_subset_of(P) || !A.products(P, P).is_subset_of(P)) return false;
    const auto negP = A.image_neg(P);
    if ((P | negP) != A.carrier()) return false;
    return is_prime_ideal(A, P & negP);
}

namespace {

class ConePropagation {
public:
    explicit ConePropagation(const Multiring& A) : A_(A), st_(A.size(), kUnknown) {}

    auto run() -> std::vector<Subset> {
        bool ok = true;
        A_.squares().for_each([&](Element s) { ok = ok && set(s, kIn); });
        if (ok && set(A_.minus_one(), kOut) && propagate()) descend();
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    static constexpr int kUnknown = 0, kIn = 1, kOut = 2;

    auto set(Element x, int s) -> bool {
        if (st_[x] == s) return true;
        if (st_[x] != kUnknown) return false;
        st_[x] = s;
        trail_.push_back(x);
        queue_.push_back(x);
        return true;
    }

    auto propagate() -> bool {
        while (!queue_.empty()) {
            const auto x = queue_.front();
            queue_.pop_front();
            bool ok = true;
            if (st_[x] == kIn) {
                for (Element y = 0; y < A_.size() && ok; ++y)
                    if (st_[y] == kIn) {
                        ok = set(A_.mul(x, y), kIn);
                        A_.add(x, y).for_each([&](Element z) { ok = ok && set(z, kIn); });
                    }
            } else {
                ok = set(A_.neg(x), kIn);
            }
            if (!ok) {
                queue_.clear();
                return false;
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            st_[trail_.back()] = kUnknown;
            trail_.pop_back();
        }
    }

    void descend() {
        auto it = std::find(st_.begin(), st_.end(), kUnknown);
        if (it == st_.end()) {
            Subset P = A_.empty_set();
            for (Element e = 0; e < A_.size(); ++e)
                if (st_[e] == kIn) P.insert(e);
            if (is_prime_cone(A_, P)) found_.push_back(std::move(P));
            return;
        }
        const auto x = static_cast<Element>(it - st_.begin());
        for (int s : {kIn, kOut}) {
            const auto mark = trail_.size();
            if (set(x, s) && propagate()) descend();
            undo(mark);
        }
    }

    const Multiring& A_;
    std::vector<int> st_;
    std::vector<Element> trail_;
    std::deque<Element> queue_;
    std::vector<Subset> found_;
};

}  // namespace

auto prime_cones(const Multiring& A) -> std::vector<Subset> { return ConePropagation(A).run(); }

auto cone_to_order(const Multiring& A, const Subset& P) -> SperPoint {
    const auto negP = A.image_neg(P);
    SperPoint p{A.ptr(), std::vector<Sign>(A.size())};
    for (Element a = 0; a < A.size(); ++a)
        p.signs[a] = P.contains(a) ? (negP.contains(a) ? 0 : 1) : -1;
    return p;
}

auto cone_order_bijection(const Multiring& A) -> ConeOrderBijection {
    ConeOrderBijection b{prime_cones(A), enumerate_sper(A), {}};
    ensure(b.cones.size() == b.orders.size(), "prime cones and orders are equinumerous",
           {std::to_string(b.cones.size()), std::to_string(b.orders.size())});
    for (const auto& P : b.cones) {
        auto sigma = cone_to_order(A, P);
        ensure(is_morphism(sigma.as_morphism()), "the sign map of a prime cone is an order");
        auto it = std::find(b.orders.begin(), b.orders.end(), sigma);
        ensure(it != b.orders.end(), "the order of a prime cone is enumerated");
        b.order_of_cone.push_back(static_cast<std::size_t>(it - b.orders.begin()));
        Subset back = A.empty_set();
        for (Element a = 0; a < A.size(); ++a)
            if (sigma(a) >= 0) back.insert(a);
        ensure(back == P, "sigma^{-1}{0,1} recovers the cone");
    }
    for (const auto& sigma : b.orders) {
        Subset P = A.empty_set();
        for (Element a = 0; a < A.size(); ++a)
            if (sigma(a) >= 0) P.insert(a);
        ensure(is_prime_cone(A, P), "sigma^{-1}{0,1} is a prime cone");
        ensure(cone_to_order(A, P) == sigma, "the cone of an order recovers the order");
    }
    return b;
}

auto is_real_ideal(const Multiring& A, const Subset& I) -> bool {
    const auto sos = sums_of_squares(A);
    for (Element a = 0; a < A.size(); ++a) {
        if (I.contains(a)) continue;
        auto s = A.sum(A.mul(a, a), sos);
        s.insert(A.mul(a, a));
        if (s.intersects(I)) return false;
    }
    return true;
}

namespace {

auto representatives(const Morphism& proj) -> std::vector<Element> {
    std::vector<Element> rep(proj.cod().size(), static_cast<Element>(-1));
    for (Element a = proj.dom().size(); a-- > 0;) rep[proj(a)] = a;
    return rep;
}

}  // namespace

auto q_construction(const Preorder& T) -> QPresentation {
    const auto& A = T.owner();
    if (!T.proper()) throw EmptyRealSpectrum("preorder is improper in " + A.name());
    auto points = enumerate_sper(A, &T);
    if (points.empty()) throw EmptyRealSpectrum("no orders nonnegative on the preorder in " + A.name());

    const auto n = A.size();
    std::vector<std::vector<Sign>> vec(n, std::vector<Sign>(points.size()));
    for (Element a = 0; a < n; ++a)
        for (std::size_t i = 0; i < points.size(); ++i) vec[a][i] = points[i](a);
    auto distinct = vec;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto k = distinct.size();
    std::map<std::vector<Sign>, Element> index;
    for (Element c = 0; c < k; ++c) index[distinct[c]] = c;
    auto lookup = [&](const std::vector<Sign>& v) {
        auto it = index.find(v);
        ensure(it != index.end(), "sign vectors of A are closed under the pointwise operations");
        return it->second;
    };

    RawTables t;
    t.name = "Q(" + A.name() + ")";
    for (const auto& v : distinct) {
        std::string nm = "[";
        for (auto s : v) nm += sign_char(s);
        t.names.push_back(nm + "]");
    }
    t.zero = lookup(vec[A.zero()]);
    t.one = lookup(vec[A.one()]);
    t.neg.resize(k);
    t.mul.assign(k, std::vector<Element>(k));
    t.add.assign(k, std::vector<std::vector<Element>>(k));
    const auto m = points.size();
    for (Element x = 0; x < k; ++x) {
        std::vector<Sign> ng(m);
        for (std::size_t i = 0; i < m; ++i) ng[i] = static_cast<Sign>(-distinct[x][i]);
        t.neg[x] = lookup(ng);
        for (Element y = 0; y < k; ++y) {
            std::vector<Sign> pr(m);
            for (std::size_t i = 0; i < m; ++i) pr[i] = static_cast<Sign>(distinct[x][i] * distinct[y][i]);
            t.mul[x][y] = lookup(pr);
            for (Element z = 0; z < k; ++z) {
                bool in = true;
                for (std::size_t i = 0; i < m && in; ++i)
                    in = sign_sum_contains(distinct[z][i], distinct[x][i], distinct[y][i]);
                if (in) t.add[x][y].push_back(z);
            }
        }
    }
    std::vector<Element> proj(n);
    for (Element a = 0; a < n; ++a) proj[a] = lookup(vec[a]);
    auto result = make_constructed(std::move(t));
    QPresentation q{A.ptr(), T.elements(), std::move(points), result, Morphism(A.ptr(), result, std::move(proj))};
    ensure(is_morphism(q.proj), "pi: A -> Q_T(A) is a morphism");
    auto rrm = check_rrm(*result);
    ensure(rrm.ok, "Q_T(A) is real reduced", {rrm.clause});
    return q;
}

auto one_plus(const Multiring& A, const Subset& T) -> MultiplicativeSet {
    return MultiplicativeSet::of(A, A.sum(A.one(), T));
}

auto q_of(const Multiring& A) -> QPresentation {
    auto q = q_construction(Preorder::sums_of_squares(A));
    auto alt = sper_nonnegative_on(A, A.sum(A.one(), q.preorder));
    ensure(alt == q.points, "orders nonnegative on 1 + sums of squares are those nonnegative on sums of squares");
    return q;
}

auto q_functor(const QPresentation& qa, const QPresentation& qb, const Morphism& f) -> Morphism {
    if (!f.image(qa.preorder).is_subset_of(qb.preorder)) throw PreorderNotPreserved("f(T) is not inside P");
    const auto rep = representatives(qa.proj);
    std::vector<Element> m(rep.size());
    for (Element c = 0; c < m.size(); ++c) m[c] = qb.proj(f(rep[c]));
    for (Element a = 0; a < f.dom().size(); ++a)
        ensure(m[qa.proj(a)] == qb.proj(f(a)), "Q(f) is well defined");
    Morphism g(qa.result, qb.result, std::move(m));
    ensure(is_morphism(g), "Q(f) is a morphism");
    return g;
}

auto q_lifted_sum(const QPresentation& q) -> std::vector<Subset> {
    const auto& A = *q.source;
    const auto k = q.result->size();
    std::vector<Subset> out(k * k, Subset(k));
    for (Element b = 0; b < A.size(); ++b)
        for (Element c = 0; c < A.size(); ++c)
            A.add(b, c).for_each([&](Element a) { out[q.proj(b) * k + q.proj(c)].insert(q.proj(a)); });
    return out;
}

auto check_rrm(const Multiring& A) -> RrmCheck {
    if (!is_semireal(A)) return {false, "semi-real", {A.minus_one()}};
    for (Element a = 0; a < A.size(); ++a)
        if (A.mul(A.mul(a, a), a) != a) return {false, "a^3 = a", {a}};
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b) {
            const auto b2a = A.mul(A.mul(b, b), a);
            if (A.add(a, b2a) != A.singleton(a)) return {false, "a + b^2 a = {a}", {a, b}};
            if (A.add(A.mul(a, a), A.mul(b, b)).count() != 1) return {false, "a^2 + b^2 is a singleton", {a, b}};
        }
    return {};
}

auto is_rrm(const Multiring& A) -> bool { return check_rrm(A).ok; }

auto is_real_reduced_hyperfield(const Multiring& F) -> bool {
    if (!classify(F).hyperfield) throw PreconditionFailed(F.name() + " is not a hyperfield");
    bool triple = !F.is_zero_ring() && F.add(F.one(), F.one()) == F.singleton(F.one());
    for (Element a = 0; a < F.size() && triple; ++a)
        if (a != F.zero()) triple = F.mul(a, a) == F.one();
    ensure(triple == is_rrm(F), "real reduced hyperfield axioms agree with the real reduced multiring axioms",
           {F.name()});
    return triple;
}

auto q_universal_check(const QPresentation& q, const Morphism& f) -> Morphism {
    const auto& R = f.cod();
    if (!is_rrm(R)) throw PreconditionFailed(R.name() + " is not real reduced");
    if (!f.image(q.preorder).is_subset_of(sums_of_squares(R)))
        throw PreorderNotPreserved("f(T) is not inside the sums of squares of the codomain");
    const auto rep = representatives(q.proj);
    std::vector<Element> m(rep.size());
    for (Element c = 0; c < m.size(); ++c) m[c] = f(rep[c]);
    for (Element a = 0; a < f.dom().size(); ++a)
        ensure(m[q.proj(a)] == f(a), "f is constant on the fibres of pi", {f.dom().element_name(a)});
    Morphism g(q.result, f.cod_ptr(), std::move(m));
    ensure(is_morphism(g), "the factorization through Q_T(A) is a morphism");
    return g;
}

auto hyperfield_representation_check(const Multiring& F) -> HyperfieldRepresentation {
    if (!classify(F).hyperfield) throw PreconditionFailed(F.name() + " is not a hyperfield");
    if (!is_semireal(F)) throw NotSemireal(F.name() + " is not semi-real");
    const auto sos = sums_of_squares(F);
    auto nonzero_sq = F.squares();
    nonzero_sq.erase(F.zero());
    auto S_nonzero = MultiplicativeSet::of(F, F.sum_closure(nonzero_sq));
    auto S_one = one_plus(F, sos);
    auto q = q_of(F);
    auto M2 = marshall_quotient(S_nonzero);
    auto M1 = marshall_quotient(S_one);
    auto to_nonzero = induced_map_marshall(identity(F), M1, S_one, M2, S_nonzero);
    auto to_q = factor_through(M1, q.proj);
    ensure(is_isomorphism(to_nonzero), "F/m(1+sums of squares) -> F/m(sums of nonzero squares) is an isomorphism");
    ensure(is_isomorphism(to_q), "F/m(1+sums of squares) -> Q(F) is an isomorphism");
    return {std::move(M2), std::move(M1), std::move(q), std::move(to_nonzero), std::move(to_q)};
}

auto pythagoras_number(const Multiring& A) -> Pythagoras {
    const auto sq = A.squares();
    Pythagoras p;
    p.per_element.assign(A.size(), 0);
    Subset layer = sq;
    for (std::size_t k = 1;; ++k) {
        layer.for_each([&](Element x) {
            if (!p.per_element[x]) p.per_element[x] = k;
        });
        auto next = A.sum(sq, layer);
        if (next == layer) break;
        layer = std::move(next);
    }
    for (auto v : p.per_element) p.number = std::max(p.number, v);
    return p;
}

}  // namespace hyperring
