#include "amicus/json_io.hpp"

namespace amicus {

nlohmann::json json_u128(u128 v) {
    if (v <= static_cast<u128>(~static_cast<u64>(0))) return static_cast<u64>(v);
    return to_string(v);
}

u128 u128_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_u128(j.get<std::string>());
    return static_cast<u128>(j.get<u64>());
}

nlohmann::json to_json(const FactoredInteger& n) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& pp : n.factors())
        factors.push_back({json_u128(pp.prime), pp.exponent});
    return {{"value", json_u128(n.value())}, {"factors", factors}};
}

FactoredInteger factored_from_json(const nlohmann::json& j) {
    std::vector<PrimePower> factors;
    for (const auto& item : j.at("factors"))
        factors.push_back({u128_from_json(item.at(0)), item.at(1).get<unsigned>()});
    FactoredInteger n = FactoredInteger::from_factors(std::move(factors));
    if (n.value() != u128_from_json(j.at("value")))
        throw std::invalid_argument("amicus: factored-integer JSON value disagrees with its factors");
    return n;
}

nlohmann::json to_json(const AmicablePair& pair) {
    return {{"m", to_json(pair.m)},
            {"n", to_json(pair.n)},
            {"sigma", json_u128(pair.sigma)},
            {"provenance", {{"method", pair.provenance.method}, {"params", pair.provenance.params}}}};
}

nlohmann::json to_json(const SearchOutcome& outcome) {
    nlohmann::json candidate = nlohmann::json::object();
    for (const auto& [k, v] : outcome.candidate) candidate[k] = json_u128(v);
    nlohmann::json derived = nlohmann::json::object();
    for (const auto& [k, v] : outcome.derived) derived[k] = json_u128(v);
    nlohmann::json j{{"candidate", candidate}, {"derived", derived}};
    if (outcome.pair) {
        j["status"] = "success";
        j["pair"] = to_json(*outcome.pair);
    } else {
        j["status"] = "rejected";
        j["reason"] = outcome.rejection;
    }
    return j;
}

nlohmann::json to_json(const Certificate& cert) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& rep : cert.representations) reps.push_back({rep.a, rep.b});
    return {{"target", cert.target},
            {"representations", reps},
            {"verdict", to_string(cert.verdict)},
            {"residue_class", cert.residue_class},
            {"crosscheck", cert.crosscheck}};
}

namespace {
nlohmann::json entry_to_json(const EntryResult& r) {
    nlohmann::json j{{"label", r.label},
                     {"sigma_m", json_u128(r.sigma_m)},
                     {"sigma_n", json_u128(r.sigma_n)},
                     {"sum", json_u128(r.sum)},
                     {"pass", r.pass},
                     {"expected_valid", r.expected_valid}};
    if (!r.pass) j["failure"] = r.failure;
    return j;
}
}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& r : report.entries) entries.push_back(entry_to_json(r));
    nlohmann::json errata = nlohmann::json::array();
    for (const auto& r : report.errata) errata.push_back(entry_to_json(r));
    return {{"entries", entries},
            {"errata", errata},
            {"valid_count", report.valid_count},
            {"invalid_count", report.invalid_count},
            {"as_expected", report.as_expected}};
}

}  // namespace amicus
