// Command-line front door: decomposition runs, verification suites, the
// oracle battery, single-target spectra, and oracle-only decompositions,
// with JSON/CSV exports. Exit codes: 0 success, 1 verification or
// consistency failure, 2 usage error.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "su3mult/decompose.hpp"
#include "su3mult/report_io.hpp"
#include "su3mult/verify.hpp"

namespace {

using namespace su3mult;

constexpr int kNmaxCeiling = 10;

struct OutputPaths {
    std::string json_path, csv_path;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

void emit(const OutputPaths& paths, const json& as_json, const std::string& as_csv,
          const std::string& as_text) {
    if (!paths.json_path.empty()) write_file(paths.json_path, as_json.dump(2) + "\n");
    if (!paths.csv_path.empty()) write_file(paths.csv_path, as_csv);
    if (paths.json_path.empty() && paths.csv_path.empty()) std::cout << as_text;
}

C4PrimeWeights parse_weights(const std::array<std::string, 4>& raw) {
    C4PrimeWeights w;
    w.l1 = rational_from_string(raw[0]);
    w.l2 = rational_from_string(raw[1]);
    w.l3 = rational_from_string(raw[2]);
    w.l4 = rational_from_string(raw[3]);
    if (w.l1 < 0 || w.l2 < 0 || w.l3 < 0 || w.l4 < 0)
        throw CLI::ValidationError("--l1..--l4 must be nonnegative rationals");
    return w;
}

std::string eigenvalue_row(const ResolvedTerm& t) {
    std::string eigs;
    for (const auto& e : t.eigenvalues) {
        if (!eigs.empty()) eigs += ", ";
        eigs += e.str();
        if (!e.exact) eigs += " (inexact, " + std::to_string(e.digits) + " digits)";
    }
    return eigs;
}

int run_decompose(const IrrepLabel& f1, const IrrepLabel& f2, const C4PrimeWeights& w,
                  const OutputPaths& paths) {
    Resolution r = resolve(f1, f2, w);
    std::string text = "decomposition of (" + std::to_string(f1.p) + "," + std::to_string(f1.q) +
                       ") x (" + std::to_string(f2.p) + "," + std::to_string(f2.q) + ")\n";
    for (const auto& t : r.terms)
        text += "  (" + std::to_string(t.label.p) + "," + std::to_string(t.label.q) +
                ")  multiplicity " + std::to_string(t.multiplicity) + "  eigenvalues [" +
                eigenvalue_row(t) + "]\n";
    text += std::string("dimension check: ") + (r.dimension_check ? "pass" : "FAIL") + "\n";
    text += std::string("oracle agreement: ") + (r.oracle_agreement ? "pass" : "FAIL") + "\n";
    emit(paths, decomposition_json(r), decomposition_csv(r), text);
    return r.dimension_check && r.oracle_agreement ? 0 : 1;
}

int run_oracle(const IrrepLabel& f1, const IrrepLabel& f2, const OutputPaths& paths) {
    auto dec = oracle::tensor_decompose(f1, f2);
    std::string text = "oracle decomposition of (" + std::to_string(f1.p) + "," +
                       std::to_string(f1.q) + ") x (" + std::to_string(f2.p) + "," +
                       std::to_string(f2.q) + ")\n";
    for (const auto& [lab, mult] : dec)
        text += "  (" + std::to_string(lab.p) + "," + std::to_string(lab.q) + ")  multiplicity " +
                std::to_string(mult) + "\n";
    emit(paths, oracle_json(f1, f2), oracle_csv(f1, f2), text);
    return 0;
}

int run_spectrum(const IrrepLabel& f1, const IrrepLabel& f2, const IrrepLabel& target,
                 const C4PrimeWeights& w, const OutputPaths& paths) {
    ConstrainedBasis basis = constrained_basis(f1, f2);
    std::vector<StateVector> hw = highest_weight_space(basis, target);
    std::array<int, 4> sector{f1.p, f1.q, f2.p, f2.q};

    json out;
    out["factors"] = {{f1.p, f1.q}, {f2.p, f2.q}};
    out["target"] = {target.p, target.q};
    out["multiplicity"] = hw.size();
    std::string text = "spectrum of the resolving invariant on (" + std::to_string(target.p) +
                       "," + std::to_string(target.q) + ") inside (" + std::to_string(f1.p) + "," +
                       std::to_string(f1.q) + ") x (" + std::to_string(f2.p) + "," +
                       std::to_string(f2.q) + ")\n";
    std::string csv = "eigenvalue,multiplicity,exact\n";
    if (hw.empty()) {
        out["eigenvalues"] = json::array();
        text += "  multiplicity 0\n";
        emit(paths, out, csv, text);
        return 0;
    }

    DenseMatrix h = pairing_matrix(build_c4prime(w), hw);
    DenseMatrix g = gram_matrix(hw);
    EigenResult eig = generalized_eigen(h, g);
    json eigs = json::array();
    for (auto it = eig.spaces.rbegin(); it != eig.spaces.rend(); ++it) {
        json e;
        e["value"] = it->value.str();
        e["multiplicity"] = it->multiplicity;
        e["exact"] = it->value.exact;
        if (!it->value.exact) e["decimal_digits"] = it->value.digits;
        eigs.push_back(std::move(e));
        text += "  " + it->value.str() + "  multiplicity " + std::to_string(it->multiplicity) +
                (it->value.exact ? "" : "  (inexact)") + "\n";
        csv += it->value.str() + "," + std::to_string(it->multiplicity) + "," +
               (it->value.exact ? "true" : "false") + "\n";
    }
    out["eigenvalues"] = std::move(eigs);
    out["pairing"] = matrix_json(h, sector, sector);
    out["gram"] = matrix_json(g, sector, sector);
    emit(paths, out, csv, text);
    return 0;
}

int run_battery(int bound, const C4PrimeWeights& w, const OutputPaths& paths) {
    std::vector<IrrepLabel> labels;
    for (int p = 0; p <= bound; ++p)
        for (int q = 0; p + q <= bound; ++q) labels.push_back({p, q});
    std::sort(labels.begin(), labels.end());

    std::vector<BatteryRow> rows;
    bool all_agree = true;
    for (const auto& f1 : labels) {
        for (const auto& f2 : labels) {
            Resolution r = resolve(f1, f2, w);
            BatteryRow row{f1, f2, r.oracle_agreement, r.dimension_check, true};
            for (const auto& t : r.terms)
                if (!t.distinct) row.distinct = false;
            all_agree = all_agree && row.agreement && row.dimension_check;
            rows.push_back(row);
        }
    }

    std::string text = "battery over labels with p+q <= " + std::to_string(bound) + " (" +
                       std::to_string(rows.size()) + " ordered pairs)\n";
    for (const auto& row : rows)
        text += "  (" + std::to_string(row.factor1.p) + "," + std::to_string(row.factor1.q) +
                ") x (" + std::to_string(row.factor2.p) + "," + std::to_string(row.factor2.q) +
                ")  agreement " + (row.agreement ? "pass" : "FAIL") + "  distinct " +
                (row.distinct ? "yes" : "NO") + "\n";
    text += std::string("all pairs agree: ") + (all_agree ? "yes" : "NO") + "\n";
    emit(paths, battery_json(rows), battery_csv(rows), text);
    return all_agree ? 0 : 1;
}

int run_verify(const std::string& suite, int nmax, std::optional<int> margin,
               const OutputPaths& paths) {
    std::vector<VerificationReport> reports;
    auto trunc = [&](int def_nmax, int def_margin) {
        int n = nmax > 0 ? nmax : def_nmax;
        return Truncation(n, margin.value_or(def_margin > n ? n : def_margin));
    };
    if (suite == "so42" || suite == "all") {
        auto r = verify_so42_closure(trunc(6, 4));
        reports.insert(reports.end(), r.begin(), r.end());
    }
    if (suite == "invariance" || suite == "all") {
        auto r = verify_invariance(trunc(6, 2));
        reports.insert(reports.end(), r.begin(), r.end());
    }
    if (suite == "identities" || suite == "all") {
        auto r = verify_weight_identities(trunc(6, 0));
        reports.insert(reports.end(), r.begin(), r.end());
    }
    if (suite == "casimirs" || suite == "all") {
        auto r2 = verify_casimir2_commutation(trunc(8, 6));
        reports.insert(reports.end(), r2.begin(), r2.end());
        auto r3 = verify_casimir3_commutation(trunc(8, 8));
        reports.insert(reports.end(), r3.begin(), r3.end());
    }
    if (reports.empty()) throw CLI::ValidationError("unknown suite: " + suite);

    std::string text, csv = verification_csv(reports);
    size_t failed = 0;
    for (const auto& r : reports) {
        if (!r.passed) {
            ++failed;
            text += "FAIL " + r.identity + " (" + std::to_string(r.states_checked) +
                    " states): " + r.counterexample + "\n";
        }
    }
    text += std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) +
            " identities verified\n";
    emit(paths, verification_json(reports), csv, text);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact su(3) tensor-product resolution on the constrained Fock space"};
    app.require_subcommand(1);

    int p1 = 0, q1 = 0, p2 = 0, q2 = 0, tp = 0, tq = 0;
    int bound = 2, nmax = 0;
    std::optional<int> margin;
    std::array<std::string, 4> raw_weights{"1", "0", "0", "0"};
    OutputPaths paths;
    std::string suite = "all";

    auto add_factors = [&](CLI::App* cmd) {
        cmd->add_option("--p1", p1, "first factor p")->check(CLI::NonNegativeNumber);
        cmd->add_option("--q1", q1, "first factor q")->check(CLI::NonNegativeNumber);
        cmd->add_option("--p2", p2, "second factor p")->check(CLI::NonNegativeNumber);
        cmd->add_option("--q2", q2, "second factor q")->check(CLI::NonNegativeNumber);
    };
    auto add_weights = [&](CLI::App* cmd) {
        cmd->add_option("--l1", raw_weights[0], "first resolving coefficient (rational)");
        cmd->add_option("--l2", raw_weights[1], "second resolving coefficient");
        cmd->add_option("--l3", raw_weights[2], "third resolving coefficient");
        cmd->add_option("--l4", raw_weights[3], "fourth resolving coefficient");
    };
    auto add_outputs = [&](CLI::App* cmd) {
        cmd->add_option("--json", paths.json_path, "write a JSON report to this path");
        cmd->add_option("--csv", paths.csv_path, "write a CSV report to this path");
    };

    CLI::App* dec = app.add_subcommand("decompose", "resolve one tensor product");
    add_factors(dec);
    add_weights(dec);
    add_outputs(dec);

    CLI::App* ver = app.add_subcommand("verify", "run algebraic verification suites");
    ver->add_option("suite", suite, "so42 | invariance | identities | casimirs | all");
    ver->add_option("--nmax", nmax, "truncation ceiling (default per suite, at most 10)")
        ->check(CLI::Range(0, kNmaxCeiling));
    int margin_arg = -1;
    ver->add_option("--margin", margin_arg, "interior margin (default per suite)")
        ->check(CLI::NonNegativeNumber);
    add_outputs(ver);

    CLI::App* bat = app.add_subcommand("battery", "compare the resolver against the oracle");
    bat->add_option("--bound", bound, "include all labels with p+q <= bound (default 2)")
        ->check(CLI::Range(0, 3));
    add_weights(bat);
    add_outputs(bat);

    CLI::App* spec_cmd = app.add_subcommand("spectrum", "resolving spectrum for one target");
    add_factors(spec_cmd);
    spec_cmd->add_option("--p", tp, "target p")->check(CLI::NonNegativeNumber);
    spec_cmd->add_option("--q", tq, "target q")->check(CLI::NonNegativeNumber);
    add_weights(spec_cmd);
    add_outputs(spec_cmd);

    CLI::App* orc = app.add_subcommand("oracle", "character-theoretic decomposition only");
    add_factors(orc);
    add_outputs(orc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (margin_arg >= 0) margin = margin_arg;
        if (dec->parsed())
            return run_decompose({p1, q1}, {p2, q2}, parse_weights(raw_weights), paths);
        if (ver->parsed()) return run_verify(suite, nmax, margin, paths);
        if (bat->parsed()) return run_battery(bound, parse_weights(raw_weights), paths);
        if (spec_cmd->parsed())
            return run_spectrum({p1, q1}, {p2, q2}, {tp, tq}, parse_weights(raw_weights), paths);
        if (orc->parsed()) return run_oracle({p1, q1}, {p2, q2}, paths);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
