#include "sl3cat/json_io.hpp"

#include <cstdio>

namespace sl3cat {

Json report_header(const std::string& command) {
    Json j;
    j["tool"] = "sl3cat";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["conventions"] = {
        {"modular_relation", "(S T)^3 = xi * S^2 with S = s~/sqrt(dim C), T = diag(theta)"},
        {"smatrix", "unnormalized s~ from the balancing formula; first row equals the dimensions"},
        {"twist_comparison",
         "condensed T-matrices are compared entrywise up to complex conjugation; the stationary "
         "twist at level 6 matches the reference display only after conjugation, and reports flag "
         "this explicitly"},
        {"orbit_representatives", "lexicographic least weight of each rotation orbit"},
    };
    return j;
}

Json cyclo_json(const Cyclo& value, bool with_float) {
    Json j;
    j["conductor"] = value.conductor();
    Json coeffs = Json::array();
    for (const Rational& c : value.coeffs()) coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    if (with_float) {
        auto z = value.to_complex();
        j["float"] = {z.real(), z.imag()};
    }
    return j;
}

Cyclo cyclo_from_json(const Json& j) {
    long conductor = j.at("conductor").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Cyclo::from_coeffs(conductor, std::move(coeffs));
}

Json weight_json(Weight w) { return Json::array({w.m1, w.m2}); }

Weight weight_from_json(const Json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

Json alcove_json(int k) {
    AlcoveSet a = alcove_weights(k);
    Json j = report_header("alcove");
    j["level"] = k;
    j["count"] = a.size();
    Json weights = Json::array();
    for (Weight w : a.weights) weights.push_back(weight_json(w));
    j["weights"] = std::move(weights);
    Json r0 = Json::array();
    for (Weight w : root_lattice_weights(k)) r0.push_back(weight_json(w));
    j["root_lattice"] = std::move(r0);
    return j;
}

Json fusion_json(const FusionTable& table) {
    Json j = report_header("fusion");
    j["level"] = table.level();
    Json coeffs = Json::array();
    const auto& idx = table.index();
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            for (std::size_t c = 0; c < idx.size(); ++c) {
                long n = table.coeff_by_index(a, b, c);
                if (n == 0) continue;
                coeffs.push_back(Json{{"a", weight_json(idx.weights[a])},
                                      {"b", weight_json(idx.weights[b])},
                                      {"c", weight_json(idx.weights[c])},
                                      {"n", n}});
            }
    j["coeffs"] = std::move(coeffs);
    return j;
}

std::string fusion_csv(const FusionTable& table) {
    std::string out = "a1,a2,b1,b2,c1,c2,n\n";
    const auto& idx = table.index();
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            for (std::size_t c = 0; c < idx.size(); ++c) {
                long n = table.coeff_by_index(a, b, c);
                if (n == 0) continue;
                Weight wa = idx.weights[a], wb = idx.weights[b], wc = idx.weights[c];
                out += std::to_string(wa.m1) + "," + std::to_string(wa.m2) + "," +
                       std::to_string(wb.m1) + "," + std::to_string(wb.m2) + "," +
                       std::to_string(wc.m1) + "," + std::to_string(wc.m2) + "," +
                       std::to_string(n) + "\n";
            }
    return out;
}

Json modular_json(const ModularData& data, bool exact, bool floats) {
    Json j = report_header("modular");
    j["level"] = data.level;
    j["labels"] = data.labels;
    if (!data.weights.empty()) {
        Json ws = Json::array();
        for (Weight w : data.weights) ws.push_back(weight_json(w));
        j["weights"] = std::move(ws);
    }
    auto value = [&](const Cyclo& v) {
        if (!exact) {
            auto z = v.to_complex();
            return Json::array({z.real(), z.imag()});
        }
        return cyclo_json(v, floats);
    };
    Json twists = Json::array(), dims = Json::array();
    for (const Cyclo& t : data.twists) twists.push_back(value(t));
    for (const Cyclo& d : data.dims) dims.push_back(value(d));
    j["twists"] = std::move(twists);
    j["dims"] = std::move(dims);
    Json s = Json::array();
    for (const auto& row : data.smatrix) {
        Json r = Json::array();
        for (const Cyclo& e : row) r.push_back(value(e));
        s.push_back(std::move(r));
    }
    j["smatrix"] = std::move(s);
    j["global_dim"] = value(data.global_dim);
    j["charge"] = value(data.charge);
    j["charge_exponent"] = to_string(data.charge_exponent);
    return j;
}

std::string modular_csv(const ModularData& data, int precision) {
    char buf[64];
    auto fmt = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        return std::string(buf);
    };
    std::string out = "label,m1,m2,dim,twist_re,twist_im\n";
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
        auto t = data.twists[i].to_complex();
        double d = data.dims[i].to_complex().real();
        std::string m1 = "", m2 = "";
        if (!data.weights.empty()) {
            m1 = std::to_string(data.weights[i].m1);
            m2 = std::to_string(data.weights[i].m2);
        }
        out += data.labels[i] + "," + m1 + "," + m2 + "," + fmt(d) + "," + fmt(t.real()) + "," +
               fmt(t.imag()) + "\n";
    }
    return out;
}

Json condense_json(const CondensedData& data, const FusionRing* resolved) {
    Json j = report_header("condense");
    j["level"] = data.level;
    j["m"] = data.m;
    Json simples = Json::array();
    for (std::size_t i = 0; i < data.simples.size(); ++i) {
        const CondensedSimple& s = data.simples[i];
        Json sj;
        sj["label"] = s.label;
        sj["kind"] = s.stationary ? "stationary" : "free";
        Json orbit = Json::array();
        for (Weight w : s.orbit) orbit.push_back(weight_json(w));
        sj["orbit"] = std::move(orbit);
        sj["dim"] = cyclo_json(data.dims[i]);
        sj["twist"] = cyclo_json(data.twists[i]);
        simples.push_back(std::move(sj));
    }
    j["simples"] = std::move(simples);
    j["global_dim"] = cyclo_json(data.global_dim());

    const std::size_t nf = data.free_count();
    Json aggregate = Json::array();
    for (std::size_t a = 0; a <= nf; ++a) {
        for (std::size_t b = a; b <= nf; ++b) {
            AggregateFusion f = free_fusion(data, a, b);
            Json row;
            auto slot = [&](std::size_t i) {
                return i == nf ? std::string("X1+X2+X3") : data.simples[i].label;
            };
            row["a"] = slot(a);
            row["b"] = slot(b);
            Json parts = Json::array();
            for (const auto& [c, n] : f.free)
                parts.push_back(Json{{"simple", data.simples[c].label}, {"n", n}});
            if (f.stationary != 0)
                parts.push_back(Json{{"simple", "X1+X2+X3"}, {"n", f.stationary}});
            row["summands"] = std::move(parts);
            aggregate.push_back(std::move(row));
        }
    }
    j["aggregate_fusion"] = std::move(aggregate);

    if (resolved) {
        Json rj;
        rj["labels"] = resolved->labels;
        Json coeffs = Json::array();
        for (std::size_t a = 0; a < resolved->rank; ++a)
            for (std::size_t b = 0; b < resolved->rank; ++b)
                for (std::size_t c = 0; c < resolved->rank; ++c)
                    if (resolved->coeff(a, b, c) != 0)
                        coeffs.push_back(Json{{"a", resolved->labels[a]},
                                              {"b", resolved->labels[b]},
                                              {"c", resolved->labels[c]},
                                              {"n", resolved->coeff(a, b, c)}});
        rj["coeffs"] = std::move(coeffs);
        j["resolved_fusion"] = std::move(rj);
    }

    Json branching = Json::array();
    for (const auto& row : data.branching) branching.push_back(row);
    j["branching"] = std::move(branching);
    return j;
}

Json certificate_json(const CertificateReport& report) {
    Json j = report_header("certify");
    j["m"] = report.m;
    j["level"] = report.level;
    Json checks;
    checks["central_self_coefficient"] = {
        {"value", report.central_self_coefficient},
        {"expected", report.m + 1},
        {"passed", report.central_coefficient_ok},
    };
    checks["dimension_route"] = {
        {"route", report.dim_check},
        {"stationary_dim", report.stationary_dim_value},
        {"threshold", report.dim_threshold},
        {"margin", report.dim_margin},
        {"cubic_lower_bound", report.cubic_lower_bound},
        {"passed", report.dim_check_passed},
    };
    checks["free_duals_reach_adjoint"] = report.dual_tensor_adjoint_ok;
    checks["adjoint_generates_root_lattice"] = report.adjoint_generates_root_lattice;
    j["checks"] = std::move(checks);
    j["verdict"] = report.verdict;
    return j;
}

Json invariant_json(const InvariantReport& report, int k) {
    Json j = report_header("invariant");
    j["level"] = k;
    Json z = Json::array();
    for (const auto& row : report.z) z.push_back(row);
    j["Z"] = std::move(z);
    j["checks"] = {
        {"commutes_with_S", report.commutes_with_s},
        {"commutes_with_T", report.commutes_with_t},
        {"unit_entry_is_one", report.unit_entry_is_one},
        {"entries_nonnegative", report.entries_nonnegative},
    };
    j["all_passed"] = report.all_passed();
    return j;
}

Json muger_json(const MugerReport& report) {
    Json j = report_header("modular/decomposition");
    j["level"] = report.level;
    Json pointed = Json::array(), cent = Json::array();
    for (Weight w : report.pointed) pointed.push_back(weight_json(w));
    for (Weight w : report.centralizer) cent.push_back(weight_json(w));
    j["pointed"] = std::move(pointed);
    j["pointed_count"] = report.pointed.size();
    j["centralizer"] = std::move(cent);
    j["centralizer_count"] = report.centralizer.size();
    j["corner_twist"] = cyclo_json(report.corner_twist);
    j["full_charge_exponent"] = to_string(report.full_exponent);
    j["pointed_charge_exponent"] = to_string(report.pointed_exponent);
    j["centralizer_charge_exponent"] = to_string(report.centralizer_exponent);
    j["factorizable"] = report.factorizable;
    j["pointed_is_prime"] = report.pointed_is_prime;
    j["centralizer_note"] = report.centralizer_note;
    return j;
}

Json ledger_json(const LedgerReport& report) {
    Json j = report_header("witt");
    Json verdicts = Json::array();
    for (const RelationVerdict& v : report.verdicts) {
        Json vj;
        vj["relation"] = v.pretty;
        vj["source"] = v.name;
        vj["residue"] = to_string(v.residue);
        vj["verdict"] = v.consistent ? "consistent" : "FLAGGED";
        if (!v.note.empty()) vj["note"] = v.note;
        verdicts.push_back(std::move(vj));
    }
    j["relations"] = std::move(verdicts);

    Json lambda;
    for (long m = 0; m <= 2; ++m) {
        Json row;
        auto cell = [&](int family) -> Json {
            try {
                return to_string(lambda_invariant(family, m));
            } catch (const std::invalid_argument&) {
                return "n/a";
            }
        };
        row["family1"] = cell(1);
        row["family2"] = cell(2);
        row["family3"] = cell(3);
        lambda["m=" + std::to_string(m)] = std::move(row);
    }
    j["lambda_table"] = std::move(lambda);
    j["matches_expected"] = report.matches_expected;
    return j;
}

Json expected_pattern_json() {
    Json arr = Json::array();
    for (const ExpectedVerdict& e : expected_pattern())
        arr.push_back(Json{{"source", e.name},
                           {"verdict", e.consistent ? "consistent" : "FLAGGED"},
                           {"residue", to_string(e.residue)}});
    return Json{{"relations", std::move(arr)}};
}

} // namespace sl3cat
