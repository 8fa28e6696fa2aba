// JSON and CSV serialization of decomposition and verification reports.
// Exact values are always serialized as strings; nothing is ever emitted as
// a floating-point literal. Key order and row order are deterministic.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "decompose.hpp"
#include "exact_matrix.hpp"
#include "verify.hpp"

namespace su3mult {

using nlohmann::json;

inline json matrix_json(const DenseMatrix& m, const std::array<int, 4>& domain_sector,
                        const std::array<int, 4>& codomain_sector) {
    json out;
    out["domain"] = domain_sector;
    out["codomain"] = codomain_sector;
    json entries = json::array();
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
            if (!m.at(r, c).is_zero()) entries.push_back({r, c, m.at(r, c).str()});
    out["entries"] = std::move(entries);
    return out;
}

inline json matrix_json(const OperatorMatrix& om) {
    auto sector_of = [](const std::vector<FockMonomial>& monos) {
        if (monos.empty()) return std::array<int, 4>{};
        std::array<int, 4> counts = monos.front().family_counts();
        for (const auto& m : monos)
            if (m.family_counts() != counts)
                throw std::invalid_argument("matrix_json: monomials span several sectors");
        return counts;
    };
    return matrix_json(om.m, sector_of(om.domain), sector_of(om.codomain));
}

inline json term_json(const ResolvedTerm& t) {
    json out;
    out["p"] = t.label.p;
    out["q"] = t.label.q;
    out["multiplicity"] = t.multiplicity;
    json eigs = json::array();
    int worst_digits = 0;
    for (const auto& e : t.eigenvalues) {
        eigs.push_back(e.str());
        if (!e.exact) worst_digits = worst_digits == 0 ? e.digits : std::min(worst_digits, e.digits);
    }
    out["c4prime_eigenvalues"] = std::move(eigs);
    out["exact"] = t.exact;
    if (!t.exact) out["decimal_digits"] = worst_digits;
    return out;
}

inline json decomposition_json(const Resolution& r) {
    json out;
    out["factors"] = {{r.factor1.p, r.factor1.q}, {r.factor2.p, r.factor2.q}};
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back(term_json(t));
    out["terms"] = std::move(terms);
    out["dimension_check"] = r.dimension_check;
    out["oracle_agreement"] = r.oracle_agreement;
    return out;
}

namespace iodetail {

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace iodetail

inline std::string decomposition_csv(const Resolution& r) {
    std::string out = "p,q,multiplicity,c4prime_eigenvalues,exact\n";
    for (const auto& t : r.terms) {
        std::string eigs;
        for (const auto& e : t.eigenvalues) {
            if (!eigs.empty()) eigs += ';';
            eigs += e.str();
        }
        out += std::to_string(t.label.p) + "," + std::to_string(t.label.q) + "," +
               std::to_string(t.multiplicity) + "," + iodetail::csv_quote(eigs) + "," +
               (t.exact ? "true" : "false") + "\n";
    }
    return out;
}

// Oracle-only decomposition: the terms schema without eigenvalue fields.
inline json oracle_json(const IrrepLabel& f1, const IrrepLabel& f2) {
    json out;
    out["factors"] = {{f1.p, f1.q}, {f2.p, f2.q}};
    json terms = json::array();
    for (const auto& [lab, mult] : oracle::tensor_decompose(f1, f2)) {
        json t;
        t["p"] = lab.p;
        t["q"] = lab.q;
        t["multiplicity"] = mult;
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

inline std::string oracle_csv(const IrrepLabel& f1, const IrrepLabel& f2) {
    std::string out = "p,q,multiplicity\n";
    for (const auto& [lab, mult] : oracle::tensor_decompose(f1, f2))
        out += std::to_string(lab.p) + "," + std::to_string(lab.q) + "," +
               std::to_string(mult) + "\n";
    return out;
}

inline json verification_json(const std::vector<VerificationReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) {
        json row;
        row["identity"] = r.identity;
        row["nmax"] = r.nmax;
        row["states_checked"] = r.states_checked;
        row["status"] = r.passed ? "pass" : "fail";
        if (!r.passed) row["counterexample"] = r.counterexample;
        out.push_back(std::move(row));
    }
    return out;
}

inline std::string verification_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "identity,nmax,states_checked,status\n";
    for (const auto& r : reports)
        out += iodetail::csv_quote(r.identity) + "," + std::to_string(r.nmax) + "," +
               std::to_string(r.states_checked) + "," + (r.passed ? "pass" : "fail") + "\n";
    return out;
}

struct BatteryRow {
    IrrepLabel factor1, factor2;
    bool agreement = false;
    bool dimension_check = false;
    bool distinct = false;  // no repeated eigenvalue inside any multiplicity space
};

inline json battery_json(const std::vector<BatteryRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json row;
        row["factors"] = {{r.factor1.p, r.factor1.q}, {r.factor2.p, r.factor2.q}};
        row["agreement"] = r.agreement;
        row["dimension_check"] = r.dimension_check;
        row["distinct"] = r.distinct;
        out.push_back(std::move(row));
    }
    return out;
}

inline std::string battery_csv(const std::vector<BatteryRow>& rows) {
    std::string out = "p1,q1,p2,q2,agreement,dimension_check,distinct\n";
    for (const auto& r : rows)
        out += std::to_string(r.factor1.p) + "," + std::to_string(r.factor1.q) + "," +
               std::to_string(r.factor2.p) + "," + std::to_string(r.factor2.q) + "," +
               (r.agreement ? "true" : "false") + "," + (r.dimension_check ? "true" : "false") +
               "," + (r.distinct ? "true" : "false") + "\n";
    return out;
}

}  // namespace su3mult
