#include "hyperring/cli/registry.hpp"

#include <array>

#include "hyperring/constructions.hpp"
#include "hyperring/realspec.hpp"

namespace hyperring::cli {

namespace {

auto subset_of(const Multiring& A, std::initializer_list<std::string_view> names) -> Subset {
    auto s = A.empty_set();
    for (auto n : names) s.insert(A.at(n));
    return s;
}

auto build() -> std::vector<Instance> {
    std::vector<Instance> out;
    auto add = [&](std::string id, const MultiringPtr& A) { out.push_back({id, A->renamed(id)}); };

    const auto K = krasner();
    const auto three = sign3();
    add("K", K);
    add("3", three);
    add("KxK", product({K, K}));
    const auto t2 = product({three, three});
    add("3x3", t2);
    add("3x3x3", product({three, three, three}));
    for (std::size_t n = 2; n <= 12; ++n) add("Z" + std::to_string(n), zmod(n));
    for (std::size_t q : {3, 5, 7, 11, 13}) add("F" + std::to_string(q) + "/sq", field_mod_squares(q));

    const auto z12 = zmod(12);
    const auto z6 = zmod(6);
    add("Z12/(4)", quotient_by_ideal(ideal_generated(*z12, subset_of(*z12, {"4"}))).result);
    add("Z6[1/3]", localize(MultiplicativeSet::generated(*z6, subset_of(*z6, {"3"}))).result);
    add("Z12_(2)", local_at(PrimeIdeal::of(*z12, principal_ideal(*z12, z12->at("2")))).result);
    add("3x3/(1,0)", quotient_by_ideal(ideal_generated(*t2, subset_of(*t2, {"(1,0)"}))).result);
    add("3x3/m<(1,-1)>", marshall_quotient(MultiplicativeSet::generated(*t2, subset_of(*t2, {"(1,-1)"}))).result);
    add("3x3/m<-1>", marshall_quotient(MultiplicativeSet::generated(*t2, subset_of(*t2, {"(-1,-1)"}))).result);
    add("RS7", rs7());
    return out;
}

}  // namespace

auto rs7() -> MultiringPtr {
    using V = std::array<Sign, 3>;
    const std::vector<V> vecs{{0, 0, 0}, {1, 1, 1}, {-1, -1, -1}, {1, -1, 0}, {-1, 1, 0}, {1, 1, 0}, {-1, -1, 0}};
    const std::vector<std::string> names{"0", "1", "-1", "x", "-x", "x2", "-x2"};
    auto index = [&](const V& v) {
        for (Element i = 0; i < vecs.size(); ++i)
            if (vecs[i] == v) return i;
        throw MalformedTable("RS7 is not closed under the operations");
    };
    RawTables t;
    t.name = "RS7";
    t.names = names;
    t.zero = 0;
    t.one = 1;
    const auto n = vecs.size();
    t.neg.resize(n);
    t.mul.assign(n, std::vector<Element>(n));
    t.add.assign(n, std::vector<std::vector<Element>>(n));
    for (Element a = 0; a < n; ++a) {
        t.neg[a] = index({static_cast<Sign>(-vecs[a][0]), static_cast<Sign>(-vecs[a][1]), static_cast<Sign>(-vecs[a][2])});
        for (Element b = 0; b < n; ++b) {
            V m;
            for (int i = 0; i < 3; ++i) m[i] = static_cast<Sign>(vecs[a][i] * vecs[b][i]);
            t.mul[a][b] = index(m);
            for (Element c = 0; c < n; ++c) {
                bool in = true;
                for (int i = 0; i < 3; ++i) in = in && sign_sum_contains(vecs[c][i], vecs[a][i], vecs[b][i]);
                if (in) t.add[a][b].push_back(c);
            }
        }
    }
    return Multiring::create(std::move(t));
}

auto builtin_registry() -> const std::vector<Instance>& {
    static const auto reg = build();
    return reg;
}

auto find_builtin(std::string_view id) -> MultiringPtr {
    for (const auto& i : builtin_registry())
        if (i.id == id) return i.ring;
    return nullptr;
}

}  // namespace hyperring::cli
