#include "sl3cat/witt.hpp"

#include <stdexcept>

namespace sl3cat {

Rational sl3_charge_exponent(long k) {
    if (k < 1) throw std::invalid_argument("invalid level");
    return mod2(Rational(2 * k, k + 3));
}

Rational sl2_charge_exponent(long k) {
    if (k < 1) throw std::invalid_argument("invalid level");
    return mod2(Rational(3 * k, 4 * (k + 2)));
}

void WittLedger::register_entry(WittEntry entry) {
    entry.exponent = mod2(entry.exponent);
    entries_[entry.label] = std::move(entry);
}

const WittEntry& WittLedger::at(const std::string& label) const {
    auto it = entries_.find(label);
    if (it == entries_.end()) throw std::invalid_argument("unknown ledger label: " + label);
    return it->second;
}

RelationVerdict check_relation(const WittLedger& ledger, const Relation& relation) {
    Rational acc(0);
    for (const auto& [label, power] : relation.lhs) acc += Rational(power) * ledger.at(label).exponent;
    for (const auto& [label, power] : relation.rhs) acc -= Rational(power) * ledger.at(label).exponent;
    RelationVerdict v;
    v.name = relation.name;
    v.pretty = relation.pretty;
    v.residue = mod2(acc);
    v.consistent = (v.residue == 0);
    return v;
}

Rational lambda_invariant(int family, long m) {
    switch (family) {
        case 1:
            if (m < 1) throw std::invalid_argument("inadmissible m for family 1 (m = 0 is excluded)");
            return Rational(9 * m, 6 * m + 8);
        case 2:
            if (m < 0 || m == 1)
                throw std::invalid_argument("inadmissible m for family 2 (m = 1 is excluded)");
            return Rational(3 * m - 7, 6 * m + 10);
        case 3:
            if (m == 0 || m == 1 || m == 3 || m == 7)
                throw std::invalid_argument(
                    "inadmissible m for family 3 (m in {0, 1, 3, 7} is excluded)");
            if (m < 0) throw std::invalid_argument("inadmissible m for family 3");
            return Rational(2 * m, m + 1);
        default:
            throw std::invalid_argument("family must be 1, 2 or 3");
    }
}

ChainReport check_inequality_chain(long lo, long hi) {
    if (lo < 3) throw std::invalid_argument("chain inequalities require arguments >= 3");
    ChainReport report;
    report.lo = lo;
    report.hi = hi;
    const Rational two(2), three_half(3, 2), one(1), half(1, 2), zero(0);
    for (long v = lo; v <= hi; ++v) {
        Rational l3(2 * v, v + 1);
        if (!(l3 < two && l3 >= three_half))
            report.violations.push_back("lambda3(" + std::to_string(v) + ") outside [3/2, 2)");
        Rational l1(9 * v, 6 * v + 8);
        if (!(l1 < three_half && l1 > one))
            report.violations.push_back("lambda1(" + std::to_string(v) + ") outside (1, 3/2)");
        Rational l2(3 * v - 7, 6 * v + 10);
        if (!(l2 < half && l2 > zero))
            report.violations.push_back("lambda2(" + std::to_string(v) + ") outside (0, 1/2)");
    }
    report.holds = report.violations.empty();
    return report;
}

WittLedger standard_ledger() {
    WittLedger ledger;
    ledger.register_entry({"Vec", Rational(0), "closed-form", 1, true});
    for (long k : {1L, 2L, 3L, 4L, 5L, 6L, 9L, 21L}) {
        WittEntry e;
        e.label = "C(sl3," + std::to_string(k) + ")";
        e.exponent = sl3_charge_exponent(k);
        e.provenance = "closed-form";
        e.num_simples = (k + 1) * (k + 2) / 2;
        e.self_dual = false; // (1,0)* = (0,1) already breaks object-wise self-duality
        ledger.register_entry(std::move(e));
    }
    for (long k : {1L, 2L, 4L, 12L, 16L, 28L}) {
        WittEntry e;
        e.label = "C(sl2," + std::to_string(k) + ")";
        e.exponent = sl2_charge_exponent(k);
        e.provenance = "closed-form";
        e.num_simples = k + 1;
        e.self_dual = true;
        ledger.register_entry(std::move(e));
    }
    return ledger;
}

std::vector<Relation> standard_relations() {
    auto sl3 = [](long k) { return "C(sl3," + std::to_string(k) + ")"; };
    auto sl2 = [](long k) { return "C(sl2," + std::to_string(k) + ")"; };
    return {
        {"Thm2(a)", "[C(sl3,1)]^4 = [Vec]", {{sl3(1), 4}}, {}},
        {"Thm2(b)", "[C(sl3,3)]^2 = [Vec]", {{sl3(3), 2}}, {}},
        {"Thm2(c)", "[C(sl3,5)]^2 = [Vec]", {{sl3(5), 2}}, {}},
        {"Thm2(d)", "[C(sl3,1)]^3 = [C(sl3,9)]", {{sl3(1), 3}}, {{sl3(9), 1}}},
        {"Thm2(e)", "[C(sl3,21)]^8 = [Vec]", {{sl3(21), 8}}, {}},
        {"eq(16)", "[C(sl3,3)] = [C(sl2,2)]^8", {{sl3(3), 1}}, {{sl2(2), 8}}},
        {"eq(17)", "[C(sl3,21)][C(sl2,1)] = [Vec]", {{sl3(21), 1}, {sl2(1), 1}}, {}},
        {"eq(18)", "[C(sl3,2)][C(sl2,28)] = [C(sl3,9)]", {{sl3(2), 1}, {sl2(28), 1}}, {{sl3(9), 1}}},
        {"eq(21)", "[C(sl2,4)] = [C(sl3,1)]", {{sl2(4), 1}}, {{sl3(1), 1}}},
        {"eq(22)", "[C(sl2,4)]^3 = [C(sl3,9)]", {{sl2(4), 3}}, {{sl3(9), 1}}},
        {"eq(23)", "[C(sl3,6)][C(sl2,16)] = [Vec]", {{sl3(6), 1}, {sl2(16), 1}}, {}},
        {"eq(24)", "[C(sl3,4)][C(sl3,1)] = [C(sl2,12)]", {{sl3(4), 1}, {sl3(1), 1}}, {{sl2(12), 1}}},
    };
}

std::vector<ExpectedVerdict> expected_pattern() {
    std::vector<ExpectedVerdict> out;
    for (const Relation& r : standard_relations()) {
        if (r.name == "Thm2(c)")
            out.push_back({r.name, false, Rational(1, 2)});
        else if (r.name == "eq(24)")
            out.push_back({r.name, false, Rational(1)});
        else
            out.push_back({r.name, true, Rational(0)});
    }
    return out;
}

LedgerReport run_full_ledger() {
    const WittLedger ledger = standard_ledger();
    LedgerReport report;
    for (const Relation& r : standard_relations()) {
        RelationVerdict v = check_relation(ledger, r);
        if (r.name == "eq(24)") {
            // The variant with the reverse of C(sl3,1) passes the charge
            // check; report it without asserting it as the stated relation.
            Relation variant = r;
            variant.lhs = {{ "C(sl3,4)", 1}, {"C(sl3,1)", -1}};
            RelationVerdict vv = check_relation(ledger, variant);
            if (vv.consistent)
                v.note = "variant [C(sl3,4)][C(sl3,1)]^-1 = [C(sl2,12)] is charge-consistent";
        }
        report.verdicts.push_back(std::move(v));
    }
    report.matches_expected = true;
    auto expected = expected_pattern();
    for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
        if (report.verdicts[i].name != expected[i].name ||
            report.verdicts[i].consistent != expected[i].consistent ||
            mod2(report.verdicts[i].residue) != mod2(expected[i].residue))
            report.matches_expected = false;
    }
    return report;
}

} // namespace sl3cat
