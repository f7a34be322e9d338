#pragma once

// Central-charge ledger for Witt classes.  Charge exponents are exact
// rationals t with xi = exp(pi*i*t), reduced mod 2; products add exponents
// and reverses negate them, so a relation between classes gives a linear
// congruence that the checker evaluates exactly.  A passing check is a
// necessary condition only; FLAGGED verdicts are first-class results.

#include "sl3cat/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sl3cat {

Rational sl3_charge_exponent(long k);
Rational sl2_charge_exponent(long k);

struct WittEntry {
    std::string label;
    Rational exponent; // in [0, 2)
    std::string provenance;
    std::optional<long> num_simples;
    std::optional<bool> self_dual; // all simple objects self-dual
};

class WittLedger {
  public:
    void register_entry(WittEntry entry);
    bool has(const std::string& label) const { return entries_.count(label) != 0; }
    const WittEntry& at(const std::string& label) const;
    const std::map<std::string, WittEntry>& entries() const { return entries_; }

  private:
    std::map<std::string, WittEntry> entries_;
};

struct Relation {
    std::string name;   // e.g. "Thm2(a)"
    std::string pretty; // display form
    std::vector<std::pair<std::string, long>> lhs; // (label, power)
    std::vector<std::pair<std::string, long>> rhs;
};

struct RelationVerdict {
    std::string name;
    std::string pretty;
    Rational residue; // sum(lhs) - sum(rhs) mod 2
    bool consistent = false;
    std::string note;
};

// Throws std::invalid_argument on labels missing from the ledger.
RelationVerdict check_relation(const WittLedger& ledger, const Relation& relation);

// Charge exponents of the three families of simple anisotropic
// representatives; values are returned as printed in the tables (family 2
// is negative for small m).  Inadmissible m raises std::invalid_argument
// naming the exclusion.
Rational lambda_invariant(int family, long m);

struct ChainReport {
    long lo = 0, hi = 0;
    bool holds = false;
    std::vector<std::string> violations;
};

// Exact check of the band inequalities
//   2 > lambda3(r) >= 3/2 > lambda1(s) > 1 > 1/2 > lambda2(t) > 0
// for every r, s, t in [lo, hi] (all values >= 3 are evaluated).
ChainReport check_inequality_chain(long lo = 3, long hi = 50);

WittLedger standard_ledger();
std::vector<Relation> standard_relations();

struct ExpectedVerdict {
    std::string name;
    bool consistent;
    Rational residue;
};
// The shipped expectation: everything consistent except Thm2(c) (residue
// 1/2) and eq(24) (residue 1).
std::vector<ExpectedVerdict> expected_pattern();

struct LedgerReport {
    std::vector<RelationVerdict> verdicts;
    bool matches_expected = false;
};

LedgerReport run_full_ledger();

} // namespace sl3cat
