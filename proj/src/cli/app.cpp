#include "hyperring/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hyperring/cli/definition.hpp"
#include "hyperring/cli/json_io.hpp"
#include "hyperring/hull.hpp"
#include "hyperring/presheaf.hpp"
#include "hyperring/vonneumann.hpp"

namespace hyperring::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string format = "text";
    std::size_t budget = 0;
    std::string out_path;
    bool timing = false;

    auto as_json() const -> bool { return format == "json"; }
};

auto yes_no(bool b) -> std::string { return b ? "yes" : "no"; }

auto load(const std::string& where) -> MultiringPtr {
    if (std::filesystem::is_regular_file(where)) {
        std::ifstream in(where);
        std::stringstream ss;
        ss << in.rdbuf();
        const auto text = ss.str();
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            json j;
            try {
                j = json::parse(text);
            } catch (const json::parse_error& e) {
                throw ParseError(1, 1, e.what());
            }
            return multiring_from_json(j);
        }
        return parse_definition(text);
    }
    if (auto b = find_builtin(where)) return b;
    throw UsageError("no such file or builtin instance: " + where);
}

// Comma-separated element names; commas inside brackets belong to names.
auto element_list(const Multiring& A, const std::string& s) -> Subset {
    auto out = A.empty_set();
    std::string cur;
    int depth = 0;
    auto flush = [&] {
        if (cur.empty()) return;
        auto e = A.find(cur);
        if (!e) throw UsageError("unknown element '" + cur + "' of " + A.name());
        out.insert(*e);
        cur.clear();
    };
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) flush();
        else cur += c;
    }
    flush();
    return out;
}

auto set_text(const Multiring& A, const Subset& s) -> std::string {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Element a) {
        out += (first ? "" : ",") + A.element_name(a);
        first = false;
    });
    return out + "}";
}

auto set_json(const Multiring& A, const Subset& s) -> json {
    json j = json::array();
    s.for_each([&](Element a) { j.push_back(A.element_name(a)); });
    return j;
}

auto map_json(const Morphism& f) -> json {
    json j = json::object();
    for (Element a = 0; a < f.dom().size(); ++a) j[f.dom().element_name(a)] = f.cod().element_name(f(a));
    return j;
}

auto map_text(const Morphism& f) -> std::string {
    std::string s;
    for (Element a = 0; a < f.dom().size(); ++a)
        s += "  " + f.dom().element_name(a) + " -> " + f.cod().element_name(f(a)) + "\n";
    return s;
}

auto doc(const std::string& command) -> json { return {{"schema", kSchema}, {"command", command}}; }

// A construction result: the map from the source and the result's definition.
auto construction_output(const Options& o, const std::string& command, const std::string& header,
                         json extra, const Morphism& map, std::ostream& os) -> int {
    const auto& R = map.cod();
    if (o.as_json()) {
        auto j = doc(command);
        j.update(extra);
        j["map"] = map_json(map);
        j["result"] = multiring_to_json(R);
        os << j.dump(2) << '\n';
    } else {
        os << header << "map:\n" << map_text(map) << emit_definition(R);
    }
    return kOk;
}

auto cmd_check(const Options& o, const std::string& file, std::ostream& os) -> int {
    MultiringPtr A;
    try {
        A = load(file);
    } catch (const ValidationError& e) {
        if (o.as_json()) {
            auto j = doc("check");
            j["flags"] = {{"multiring", false}};
            j["violations"] = e.what();
            os << j.dump(2) << '\n';
        } else {
            os << "multiring=no\n" << e.what() << '\n';
        }
        return kPropertyFails;
    }
    const bool hyper = is_hyperring(*A);
    const bool vnh = hyper && is_vnh(*A);
    const bool geo = vnh && is_geometric(*A);
    const bool hf = classify(*A).hyperfield;
    const bool rrm = is_rrm(*A);
    if (o.as_json()) {
        auto j = doc("check");
        j["name"] = A->name();
        j["size"] = A->size();
        j["flags"] = {{"multiring", true}, {"hyperring", hyper}, {"hyperfield", hf},
                      {"rrm", rrm},        {"vnh", vnh},         {"geometric", geo}};
        os << j.dump(2) << '\n';
    } else {
        os << A->name() << ": " << A->size() << " elements\n";
        os << "multiring=yes hyperring=" << yes_no(hyper) << " hyperfield=" << yes_no(hf) << " rrm=" << yes_no(rrm)
           << " vnh=" << yes_no(vnh) << " geometric=" << yes_no(geo) << '\n';
    }
    return kOk;
}

auto cmd_spec(const Options& o, const Multiring& A, std::ostream& os) -> int {
    const auto& S = spec(A);
    if (o.as_json()) {
        auto j = doc("spec");
        j["name"] = A.name();
        j["primes"] = json::array();
        for (std::size_t i = 0; i < S.size(); ++i)
            j["primes"].push_back({{"elements", set_json(A, S.prime(i))}, {"maximal", S.is_maximal_index(i)}});
        json opens = json::object();
        for (Element a = 0; a < A.size(); ++a) {
            json idx = json::array();
            S.basic_open(a).for_each([&](Element p) { idx.push_back(p); });
            opens[A.element_name(a)] = idx;
        }
        j["basic_opens"] = opens;
        os << j.dump(2) << '\n';
        return kOk;
    }
    os << "spec(" << A.name() << "): " << S.size() << (S.size() == 1 ? " prime\n" : " primes\n");
    for (std::size_t i = 0; i < S.size(); ++i)
        os << "p" << i << " = " << set_text(A, S.prime(i)) << (S.is_maximal_index(i) ? " maximal" : "") << '\n';
    for (Element a = 0; a < A.size(); ++a) {
        os << "D(" << A.element_name(a) << ") = {";
        bool first = true;
        S.basic_open(a).for_each([&](Element p) {
            os << (first ? "" : ",") << 'p' << p;
            first = false;
        });
        os << "}\n";
    }
    return kOk;
}

auto sign_char(Sign s) -> char { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

auto cmd_sper(const Options& o, const Multiring& A, std::ostream& os) -> int {
    const auto b = cone_order_bijection(A);
    if (o.as_json()) {
        auto j = doc("sper");
        j["name"] = A.name();
        j["orders"] = json::array();
        for (const auto& s : b.orders) {
            json signs = json::object();
            for (Element a = 0; a < A.size(); ++a) signs[A.element_name(a)] = static_cast<int>(s(a));
            j["orders"].push_back(signs);
        }
        j["prime_cones"] = b.cones.size();
        os << j.dump(2) << '\n';
        return kOk;
    }
    os << "sper(" << A.name() << "): " << b.orders.size() << (b.orders.size() == 1 ? " order" : " orders") << ", "
       << b.cones.size() << " prime cones\n";
    for (std::size_t i = 0; i < b.orders.size(); ++i) {
        os << "s" << i << ":";
        for (Element a = 0; a < A.size(); ++a) os << ' ' << A.element_name(a) << '=' << sign_char(b.orders[i](a));
        os << '\n';
    }
    return kOk;
}

auto cmd_hull(const Options& o, const Multiring& A, std::ostream& os) -> int {
    const auto h = hull(A);
    const auto bij = is_bijective(h.v);
    return construction_output(o, "hull", "v_A bijective: " + yes_no(bij) + "\n", {{"v_bijective", bij}}, h.v, os);
}

auto cmd_presheaf(const Options& o, const Multiring& A, bool sheaf_check, std::ostream& os) -> int {
    const auto F = build_presheaf(A);
    std::optional<SheafCheck> sc;
    if (sheaf_check) sc = check_sheaf(F);
    if (o.as_json()) {
        auto j = doc("presheaf");
        j["name"] = A.name();
        j["opens"] = json::array();
        for (std::size_t i = 0; i < F.opens.size(); ++i) {
            json pts = json::array();
            F.opens[i].for_each([&](Element p) { pts.push_back(p); });
            j["opens"].push_back({{"generator", A.element_name(F.generators[i])},
                                  {"primes", pts},
                                  {"section_size", F.sections[i].result->size()}});
        }
        if (sc) j["sheaf_check"] = {{"mono", sc->mono}, {"glue", sc->glue}, {"witness", sc->witness}};
        os << j.dump(2) << '\n';
    } else {
        os << "presheaf(" << A.name() << "): " << F.opens.size() << " basic opens\n";
        for (std::size_t i = 0; i < F.opens.size(); ++i) {
            os << "U" << i << " = D(" << A.element_name(F.generators[i]) << ") = {";
            bool first = true;
            F.opens[i].for_each([&](Element p) {
                os << (first ? "" : ",") << 'p' << p;
                first = false;
            });
            os << "}: " << F.sections[i].result->size() << " sections\n";
        }
        if (sc) {
            os << "mono=" << yes_no(sc->mono) << " glue=" << yes_no(sc->glue) << " sheaf=" << yes_no(sc->sheaf())
               << '\n';
            for (const auto& w : sc->witness) os << "witness: " << w << '\n';
        }
    }
    return sc && !sc->sheaf() ? kPropertyFails : kOk;
}

auto cmd_iso(const Options& o, const Multiring& A, const Multiring& B, std::ostream& os) -> int {
    const auto f = find_isomorphism(A, B);
    if (o.as_json()) {
        auto j = doc("iso");
        j["from"] = A.name();
        j["to"] = B.name();
        j["isomorphic"] = f.has_value();
        if (f) j["map"] = map_json(*f);
        os << j.dump(2) << '\n';
    } else if (f) {
        os << "isomorphism " << A.name() << " -> " << B.name() << ":\n" << map_text(*f);
    } else {
        os << "no isomorphism " << A.name() << " -> " << B.name() << '\n';
    }
    return f ? kOk : kPropertyFails;
}

auto cmd_verify(const Options& o, bool all, const std::string& theorem, const std::string& registry,
                const std::string& instance, std::ostream& os) -> int {
    std::vector<const Theorem*> ts;
    if (all) {
        for (const auto& t : theorem_registry()) ts.push_back(&t);
    } else {
        const auto* t = find_theorem(theorem);
        if (!t) throw UsageError("unknown theorem id: " + theorem);
        ts.push_back(t);
    }
    std::vector<Instance> insts;
    if (!registry.empty()) {
        if (registry != "builtin") throw UsageError("unknown registry: " + registry);
        insts = builtin_registry();
    } else {
        const auto A = load(instance);
        insts.push_back({A->name(), A});
    }
    const auto rs = verify(ts, insts);
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : rs) {
        if (r.status == Status::Pass) ++pass;
        if (r.status == Status::Fail) ++fail;
        if (r.status == Status::Skipped) ++skip;
    }
    if (o.as_json()) {
        os << reports_to_json(rs, o.timing).dump(2) << '\n';
    } else {
        os << std::left << std::setw(10) << "THEOREM" << std::setw(16) << "INSTANCE" << std::setw(9) << "STATUS"
           << "DETAIL\n";
        for (const auto& r : rs) {
            std::string detail = r.reason;
            if (r.status == Status::Skipped) detail = "(" + detail + ")";
            for (const auto& w : r.witness) detail += " [" + w + "]";
            if (o.timing) {
                std::ostringstream t;
                t << std::fixed << std::setprecision(1) << r.wall_ms << "ms";
                detail += (detail.empty() ? "" : " ") + t.str();
            }
            std::string line;
            {
                std::ostringstream l;
                l << std::left << std::setw(10) << r.theorem << std::setw(16) << r.instance << std::setw(9)
                  << status_name(r.status) << detail;
                line = l.str();
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << '\n';
        }
        os << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
    }
    return fail ? kPropertyFails : kOk;
}

auto env_budget() -> std::size_t {
    const char* v = std::getenv("HYPERRING_LAB_BUDGET");
    if (!v || !*v) return 0;
    try {
        std::size_t pos = 0;
        const auto n = std::stoul(v, &pos);
        if (pos != std::string(v).size() || n == 0) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw UsageError(std::string("HYPERRING_LAB_BUDGET must be a positive integer, got '") + v + "'");
    }
}

}  // namespace

auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int {
    CLI::App app{"Finite multirings, hyperrings and their spectra", "hyperring-lab"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", o.budget, "Search size limit (morphism search runs while |A|*|B| <= N^2)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", o.out_path, "Write output to this file");
    app.add_flag("--timing", o.timing, "Report wall times");

    std::string file, file2, ideal, at_set, preorder, theorem, registry, instance;
    std::size_t at_prime = 0;
    bool sheaf_check = false, all = false;

    auto* check = app.add_subcommand("check", "Axioms and classification flags");
    check->add_option("file", file, "Definition file or builtin name")->required();
    auto* specc = app.add_subcommand("spec", "Prime spectrum and basic opens");
    specc->add_option("file", file)->required();
    auto* sper = app.add_subcommand("sper", "Real spectrum");
    sper->add_option("file", file)->required();
    auto* quotient = app.add_subcommand("quotient", "Quotient by the ideal generated by elements");
    quotient->add_option("file", file)->required();
    quotient->add_option("--ideal", ideal, "Comma-separated generators")->required();
    auto* localize_c = app.add_subcommand("localize", "Localization");
    localize_c->add_option("file", file)->required();
    auto* at_opt = localize_c->add_option("--at-prime", at_prime, "Prime index from `spec`");
    auto* set_opt = localize_c->add_option("--set", at_set, "Comma-separated generators of S");
    at_opt->excludes(set_opt);
    auto* marshall = app.add_subcommand("marshall", "Marshall quotient A /m S");
    marshall->add_option("file", file)->required();
    marshall->add_option("--set", at_set, "Comma-separated generators of S")->required();
    auto* qreal = app.add_subcommand("qreal", "Real reduced reflection Q_T(A)");
    qreal->add_option("file", file)->required();
    qreal->add_option("--preorder", preorder, "Comma-separated generators of T besides the squares");
    auto* hull_c = app.add_subcommand("hull", "Von Neumann hull V(A)");
    hull_c->add_option("file", file)->required();
    auto* geohull = app.add_subcommand("geohull", "Geometric hull A /m S_u");
    geohull->add_option("file", file)->required();
    auto* presheaf = app.add_subcommand("presheaf", "Structural presheaf on basic opens");
    presheaf->add_option("file", file)->required();
    presheaf->add_flag("--sheaf-check", sheaf_check, "Check the mono and gluing conditions");
    auto* iso = app.add_subcommand("iso", "Isomorphism search");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();
    auto* verify_c = app.add_subcommand("verify", "Run theorem checkers");
    auto* all_opt = verify_c->add_flag("--all", all, "Every theorem");
    auto* th_opt = verify_c->add_option("--theorem", theorem, "One theorem id");
    all_opt->excludes(th_opt);
    auto* reg_opt = verify_c->add_option("--registry", registry, "Instance registry (builtin)");
    auto* inst_opt = verify_c->add_option("--instance", instance, "Definition file or builtin name");
    reg_opt->excludes(inst_opt);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        const auto code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    std::ostringstream buf;
    int code = kOk;
    const auto start = std::chrono::steady_clock::now();
    try {
        Budget b;
        if (auto e = env_budget()) b.search_size = e;
        if (o.budget) b.search_size = o.budget;
        Budget::set_defaults(b);

        if (localize_c->parsed() && at_opt->count() + set_opt->count() != 1)
            throw UsageError("localize needs exactly one of --at-prime and --set");
        if (verify_c->parsed() && all_opt->count() + th_opt->count() != 1)
            throw UsageError("verify needs exactly one of --all and --theorem");
        if (verify_c->parsed() && reg_opt->count() + inst_opt->count() != 1)
            throw UsageError("verify needs exactly one of --registry and --instance");

        if (check->parsed()) {
            code = cmd_check(o, file, buf);
        } else if (verify_c->parsed()) {
            code = cmd_verify(o, all, theorem, registry, instance, buf);
        } else if (iso->parsed()) {
            code = cmd_iso(o, *load(file), *load(file2), buf);
        } else {
            const auto A = load(file);
            if (specc->parsed()) code = cmd_spec(o, *A, buf);
            else if (sper->parsed()) code = cmd_sper(o, *A, buf);
            else if (hull_c->parsed()) code = cmd_hull(o, *A, buf);
            else if (presheaf->parsed()) code = cmd_presheaf(o, *A, sheaf_check, buf);
            else if (quotient->parsed()) {
                const auto I = ideal_generated(*A, element_list(*A, ideal));
                const auto q = quotient_by_ideal(I);
                code = construction_output(o, "quotient", "ideal: " + set_text(*A, I.elements()) + "\n",
                                           {{"ideal", set_json(*A, I.elements())}}, q.proj, buf);
            } else if (localize_c->parsed()) {
                std::optional<MultiplicativeSet> S;
                if (at_opt->count()) {
                    const auto& sp = spec(*A);
                    if (at_prime >= sp.size())
                        throw UsageError("prime index " + std::to_string(at_prime) + " out of range; " + A->name() +
                                         " has " + std::to_string(sp.size()));
                    S = MultiplicativeSet::of(*A, sp.prime(at_prime).complement());
                } else {
                    S = MultiplicativeSet::generated(*A, element_list(*A, at_set));
                }
                const auto L = localize(*S);
                code = construction_output(o, "localize", "S: " + set_text(*A, S->elements()) + "\n",
                                           {{"S", set_json(*A, S->elements())}}, L.rho, buf);
            } else if (marshall->parsed()) {
                const auto S = MultiplicativeSet::generated(*A, element_list(*A, at_set));
                const auto q = marshall_quotient(S);
                code = construction_output(o, "marshall", "S: " + set_text(*A, S.elements()) + "\n",
                                           {{"S", set_json(*A, S.elements())}}, q.proj, buf);
            } else if (qreal->parsed()) {
                const auto T = Preorder::generated(*A, element_list(*A, preorder));
                const auto q = q_construction(T);
                code = construction_output(
                    o, "qreal",
                    "T: " + set_text(*A, T.elements()) + "\norders: " + std::to_string(q.points.size()) + "\n",
                    {{"T", set_json(*A, T.elements())}, {"orders", q.points.size()}}, q.proj, buf);
            } else if (geohull->parsed()) {
                const auto g = geometric_hull(*A);
                code = construction_output(o, "geohull", "", json::object(), g.proj, buf);
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const TheoremViolation& e) {
        err << "property fails: " << e.claim();
        for (const auto& w : e.witness()) err << " [" << w << "]";
        err << '\n';
        return kPropertyFails;
    } catch (const Error& e) {
        err << "property fails: " << e.what() << '\n';
        return kPropertyFails;
    }

    if (o.timing && !o.as_json())
        buf << "wall time: " << std::fixed << std::setprecision(1)
            << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() << " ms\n";
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) {
            err << "usage error: cannot write " << o.out_path << '\n';
            return kUsage;
        }
        f << buf.str();
    } else {
        out << buf.str();
    }
    return code;
}

}  // namespace hyperring::cli
