#include "conifold/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace conifold {

using nlohmann::json;

namespace {

// Most JSON consumers cannot hold integers beyond 2^53 losslessly; anything
// larger travels as a decimal string.
json int_to_json(const Int& v) {
    static const Int kMaxSafe = (Int(1) << 53) - 1;
    if (v <= kMaxSafe && v >= -kMaxSafe) return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw std::invalid_argument("expected integer or decimal string");
}

} // namespace

json series_to_json(const Series4D& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back({{"exp", {m.q1, m.q2, m.lam}}, {"coef", c.str()}});
    return {{"context", "4d"}, {"order", x.bound().order}, {"terms", terms}};
}

json series_to_json(const Series6D& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back({{"exp", {m.q, m.T, m.s}}, {"coef", c.str()}});
    return {{"context", "6d"},
            {"box", {x.bound().qmax, x.bound().tmax}},
            {"terms", terms}};
}

Series4D series4d_from_json(const json& j) {
    if (j.at("context").get<std::string>() != "4d")
        throw std::invalid_argument("series4d_from_json: context mismatch");
    Series4D x(TotalDegree{j.at("order").get<int>()});
    for (const json& t : j.at("terms")) {
        const auto& e = t.at("exp");
        const Monomial4D m{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()};
        if (m.q1 < 0 || m.q2 < 0 || m.lam < 0)
            throw std::invalid_argument("series4d_from_json: negative exponent");
        if (!admits(x.bound(), m))
            throw std::invalid_argument("series4d_from_json: term outside order bound");
        x.add_term(m, int_from_json(t.at("coef")));
    }
    return x;
}

Series6D series6d_from_json(const json& j) {
    if (j.at("context").get<std::string>() != "6d")
        throw std::invalid_argument("series6d_from_json: context mismatch");
    const auto& b = j.at("box");
    Series6D x(Box{b.at(0).get<int>(), b.at(1).get<int>()});
    for (const json& t : j.at("terms")) {
        const auto& e = t.at("exp");
        const Monomial6D m{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()};
        if (m.q < 0 || m.T < 0)
            throw std::invalid_argument("series6d_from_json: negative exponent");
        if (!admits(x.bound(), m))
            throw std::invalid_argument("series6d_from_json: term outside box");
        x.add_term(m, int_from_json(t.at("coef")));
    }
    return x;
}

json laurent_to_json(const LaurentPoly& p) {
    json coeffs = json::array();
    int s_min = 0;
    if (!p.is_zero()) {
        s_min = p.min_exp();
        for (int w = s_min; w <= p.max_exp(); ++w) coeffs.push_back(p.coeff(w).str());
    }
    return {{"s_min", s_min}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    int w = j.at("s_min").get<int>();
    for (const json& c : j.at("coeffs")) p.add_term(w++, int_from_json(c));
    return p;
}

json sl2_to_json(const SL2Decomp& d) {
    json out = json::object();
    for (const auto& [hw, mult] : d.mult) out[std::to_string(hw)] = int_to_json(mult);
    return out;
}

namespace {

// Table cells list coefficients densely from s_min upward, stepping by 2
// when the exponents all share one parity (they always do for conifold
// invariants, whose s-parity is m - l mod 2) and by 1 otherwise.
std::string coeff_cell(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    int step = 2;
    for (const auto& [w, c] : p.coeffs())
        if ((w - p.min_exp()) % 2 != 0) step = 1;
    std::string out;
    for (int w = p.min_exp(); w <= p.max_exp(); w += step) {
        if (!out.empty()) out += ",";
        out += p.coeff(w).str();
    }
    return out;
}

std::string sl2_cell(const SL2Decomp& d) {
    std::string out;
    for (auto it = d.mult.rbegin(); it != d.mult.rend(); ++it) {
        if (!out.empty()) out += " ";
        out += std::to_string(it->first) + ":" + it->second.str();
    }
    return out.empty() ? "-" : out;
}

} // namespace

json table_to_json(const InvariantTable& t) {
    json rows = json::array();
    for (const InvariantRow& r : t.rows) {
        const json lj = laurent_to_json(r.refined);
        rows.push_back({{"l", r.l},
                        {"m", r.m},
                        {"s_min", lj.at("s_min")},
                        {"coeffs", lj.at("coeffs")},
                        {"P_lm", r.numeric.str()},
                        {"sl2", sl2_to_json(r.sl2)}});
    }
    return {{"box", {t.box.qmax, t.box.tmax}}, {"chamber", t.chamber.name()}, {"rows", rows}};
}

std::string table_to_csv(const InvariantTable& t) {
    std::ostringstream os;
    os << "l,m,s_min,coeffs,P_lm,sl2\n";
    for (const InvariantRow& r : t.rows) {
        const int s_min = r.refined.is_zero() ? 0 : r.refined.min_exp();
        os << r.l << "," << r.m << "," << s_min << ",\"" << coeff_cell(r.refined) << "\","
           << r.numeric << "," << sl2_cell(r.sl2) << "\n";
    }
    return os.str();
}

std::string table_to_text(const InvariantTable& t) {
    std::ostringstream os;
    os << "# stable-pairs invariants, chamber " << t.chamber.name() << ", box qmax="
       << t.box.qmax << " tmax=" << t.box.tmax << "\n";
    size_t wpoly = 7, wnum = 4;
    for (const InvariantRow& r : t.rows) {
        wpoly = std::max(wpoly, to_t_string(r.refined).size());
        wnum = std::max(wnum, r.numeric.str().size());
    }
    os << std::left << std::setw(4) << "l" << std::setw(4) << "m" << std::setw(wnum + 2)
       << "P_lm" << std::setw(wpoly + 2) << "refined"
       << "sl2\n";
    for (const InvariantRow& r : t.rows)
        os << std::left << std::setw(4) << r.l << std::setw(4) << r.m << std::setw(wnum + 2)
           << r.numeric.str() << std::setw(wpoly + 2) << to_t_string(r.refined)
           << sl2_cell(r.sl2) << "\n";
    return os.str();
}

json report_to_json(const Report& r) {
    json ds = json::array();
    for (const Discrepancy& d : r.discrepancies)
        ds.push_back({{"where", d.where}, {"detail", d.detail}});
    return {{"identity", r.identity},
            {"box", {r.box.qmax, r.box.tmax}},
            {"status", r.ok ? "ok" : "fail"},
            {"discrepancies", ds}};
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << r.identity << ": " << (r.ok ? "ok" : "FAIL") << " (box qmax=" << r.box.qmax
       << " tmax=" << r.box.tmax << ")";
    if (!r.ok) {
        os << ", " << r.discrepancies.size() << " discrepancies";
        for (const Discrepancy& d : r.discrepancies) os << "\n  " << d.where << ": " << d.detail;
    }
    os << "\n";
    return os.str();
}

} // namespace conifold
