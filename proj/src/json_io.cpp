#include "morikawa/json_io.hpp"

namespace morikawa {

namespace {

nlohmann::ordered_json term_json(std::initializer_list<int> exps, const Rational& c) {
    nlohmann::ordered_json t;
    t["e"] = exps;
    t["n"] = numerator(c).str();
    t["d"] = denominator(c).str();
    return t;
}

Rational term_value(const nlohmann::json& t) {
    BigInt n(t.at("n").get<std::string>());
    BigInt d(t.at("d").get<std::string>());
    if (d == 0) throw DomainError("polynomial term with zero denominator");
    return Rational(n, d);
}

}  // namespace

nlohmann::ordered_json to_json(const UniPoly& p, const std::string& var) {
    nlohmann::ordered_json j;
    j["vars"] = {var};
    j["terms"] = nlohmann::ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        j["terms"].push_back(term_json({k}, c));
    }
    return j;
}

nlohmann::ordered_json to_json(const BivarPoly& p) {
    nlohmann::ordered_json j;
    j["vars"] = {"t", "x"};
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) j["terms"].push_back(term_json({e.t, e.x}, c));
    return j;
}

nlohmann::ordered_json to_json(const TrivarPoly& p) {
    nlohmann::ordered_json j;
    j["vars"] = {"k", "x", "y"};
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) j["terms"].push_back(term_json({e[0], e[1], e[2]}, c));
    return j;
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
    if (j.at("vars").size() != 1) throw DomainError("expected one variable");
    std::vector<Rational> coeffs;
    for (const auto& t : j.at("terms")) {
        int k = t.at("e").at(0).get<int>();
        if (k < 0) throw DomainError("negative exponent");
        if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(static_cast<size_t>(k) + 1, Rational(0));
        coeffs[static_cast<size_t>(k)] += term_value(t);
    }
    return UniPoly(std::move(coeffs));
}

BivarPoly bivar_from_json(const nlohmann::json& j) {
    if (j.at("vars").size() != 2) throw DomainError("expected two variables");
    BivarPoly out;
    for (const auto& t : j.at("terms")) {
        int dt = t.at("e").at(0).get<int>();
        int dx = t.at("e").at(1).get<int>();
        if (dt < 0 || dx < 0) throw DomainError("negative exponent");
        out = out + BivarPoly::term(term_value(t), dt, dx);
    }
    return out;
}

TrivarPoly trivar_from_json(const nlohmann::json& j) {
    if (j.at("vars").size() != 3) throw DomainError("expected three variables");
    TrivarPoly out;
    for (const auto& t : j.at("terms")) {
        int dk = t.at("e").at(0).get<int>();
        int dx = t.at("e").at(1).get<int>();
        int dy = t.at("e").at(2).get<int>();
        if (dk < 0 || dx < 0 || dy < 0) throw DomainError("negative exponent");
        out = out + TrivarPoly::term(term_value(t), dk, dx, dy);
    }
    return out;
}

}  // namespace morikawa
