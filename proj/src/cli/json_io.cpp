#include "hyperring/cli/json_io.hpp"

#include <map>

namespace hyperring::cli {

using nlohmann::json;

namespace {

void check_schema(const json& j) {
    if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchema)
        throw ParseError(1, 1, std::string("expected \"schema\": \"") + kSchema + "\"");
}

auto names_of(const Multiring& A, const Subset& s) -> json {
    json out = json::array();
    s.for_each([&](Element a) { out.push_back(A.element_name(a)); });
    return out;
}

}  // namespace

auto multiring_to_json(const Multiring& A) -> json {
    const auto& nm = A.element_names();
    json j{{"schema", kSchema}, {"kind", "multiring"}, {"name", A.name()}, {"elements", nm},
           {"zero", nm[A.zero()]}, {"one", nm[A.one()]}};
    json neg = json::object(), mul = json::object(), add = json::object();
    for (Element a = 0; a < A.size(); ++a) {
        neg[nm[a]] = nm[A.neg(a)];
        json mrow = json::object(), arow = json::object();
        for (Element b = 0; b < A.size(); ++b) {
            mrow[nm[b]] = nm[A.mul(a, b)];
            arow[nm[b]] = names_of(A, A.add(a, b));
        }
        mul[nm[a]] = std::move(mrow);
        add[nm[a]] = std::move(arow);
    }
    j["neg"] = std::move(neg);
    j["mul"] = std::move(mul);
    j["add"] = std::move(add);
    return j;
}

auto multiring_from_json(const json& j) -> MultiringPtr {
    check_schema(j);
    try {
        RawTables t;
        t.name = j.at("name").get<std::string>();
        t.names = j.at("elements").get<std::vector<std::string>>();
        std::map<std::string, Element> idx;
        for (Element i = 0; i < t.names.size(); ++i) idx[t.names[i]] = i;
        auto at = [&](const std::string& s) {
            auto it = idx.find(s);
            if (it == idx.end()) throw ParseError(1, 1, "unknown element '" + s + "'");
            return it->second;
        };
        t.zero = at(j.at("zero").get<std::string>());
        t.one = at(j.at("one").get<std::string>());
        const auto n = t.names.size();
        t.neg.resize(n);
        t.mul.assign(n, std::vector<Element>(n));
        t.add.assign(n, std::vector<std::vector<Element>>(n));
        for (Element a = 0; a < n; ++a) {
            t.neg[a] = at(j.at("neg").at(t.names[a]).get<std::string>());
            for (Element b = 0; b < n; ++b) {
                t.mul[a][b] = at(j.at("mul").at(t.names[a]).at(t.names[b]).get<std::string>());
                for (const auto& c : j.at("add").at(t.names[a]).at(t.names[b])) t.add[a][b].push_back(at(c.get<std::string>()));
            }
        }
        return Multiring::create(std::move(t));
    } catch (const json::exception& e) {
        throw ParseError(1, 1, e.what());
    }
}

auto report_to_json(const VerificationReport& r, bool timing) -> json {
    json j{{"theorem", r.theorem}, {"instance", r.instance}, {"status", status_name(r.status)}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (timing) j["wall_ms"] = r.wall_ms;
    return j;
}

auto report_from_json(const json& j) -> VerificationReport {
    try {
        VerificationReport r;
        r.theorem = j.at("theorem").get<std::string>();
        r.instance = j.at("instance").get<std::string>();
        r.status = parse_status(j.at("status").get<std::string>());
        r.reason = j.value("reason", std::string());
        r.witness = j.value("witness", std::vector<std::string>());
        r.wall_ms = j.value("wall_ms", 0.0);
        if (r.status == Status::Fail && r.witness.empty()) throw ParseError(1, 1, "failed report without a witness");
        return r;
    } catch (const json::exception& e) {
        throw ParseError(1, 1, e.what());
    } catch (const PreconditionFailed& e) {
        throw ParseError(1, 1, e.what());
    }
}

auto reports_to_json(const std::vector<VerificationReport>& rs, bool timing) -> json {
    json list = json::array();
    std::map<std::string, int> summary{{"pass", 0}, {"fail", 0}, {"skipped", 0}};
    for (const auto& r : rs) {
        list.push_back(report_to_json(r, timing));
        ++summary[status_name(r.status)];
    }
    return {{"schema", kSchema}, {"command", "verify"}, {"reports", list}, {"summary", summary}};
}

auto reports_from_json(const json& j) -> std::vector<VerificationReport> {
    check_schema(j);
    if (!j.contains("reports") || !j["reports"].is_array()) throw ParseError(1, 1, "expected a \"reports\" array");
    std::vector<VerificationReport> out;
    for (const auto& r : j["reports"]) out.push_back(report_from_json(r));
    return out;
}

}  // namespace hyperring::cli
