#pragma once

// Quotients of an imprimitive scheme over a square-spread relation.

#include "ascheme/scheme.hpp"
#include "ascheme/spreads.hpp"
#include "ascheme/srg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ascheme {

/// A result that contradicts a proved statement about quotients. Points at a
/// bug rather than bad input.
class TheoremFalsified : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct QuotientReport {
    int relation = 0;
    long long b = 0;
    Graph quotient;                     // on the n cliques
    std::vector<long long> eigenvalues; // distinct eigenvalues of B, decreasing
};

/// The spread formed by relation i; throws SpreadError if it is not one.
Spread relation_spread(const Scheme& s, int spread_class);

/// B = (1/n) P^T A P for relation rel_class, where the columns of P are the
/// characteristic vectors of the spread's cliques. For the spread class
/// itself, b = n - 1 and the quotient graph is empty.
QuotientReport quotient_relation(const Scheme& s, int spread_class, int rel_class);

struct QuotientScheme {
    Scheme scheme;
    /// class_map[i] = class of the quotient scheme receiving relation i
    /// (0 for the identity and the spread class).
    std::vector<int> class_map;
    std::vector<QuotientReport> reports; // indexed by relation, entry 0 unused
};

QuotientScheme quotient_scheme(const Scheme& s, int spread_class);

struct PropositionReport {
    int relation = 0;
    std::optional<SrgParams> params;
    std::optional<SrgType> type;
    long long b = 0;
    bool quotient_complete = false;
    /// Complete quotient: the relation is of Latin square type. Otherwise:
    /// the relation is not strictly of negative Latin square type.
    bool holds = true;
    bool b_is_n = false;
    bool b_is_one = false;
    bool coclique_extension = false;    // A = quotient (x) J_n
    bool zero_eigenvalue = false;
    bool complete_multipartite = false;
    bool disjoint_cliques = false;

    std::string describe() const;
};

std::vector<PropositionReport> proposition_reports(const Scheme& s, int spread_class);

struct LatticeIdempotentReport {
    long long n = 0;
    std::vector<std::size_t> rows; // rows j != 0 of P with P_{j,l} = n - 2
    /// n^2 E = (2n-2) I + (n-2) A - 2 (J - I - A) for the idempotent found.
    bool identity_holds = false;
    /// Other strongly regular relations that are not of Latin square type.
    std::vector<int> non_latin;

    std::size_t count() const { return rows.size(); }
};

/// Throws SrgError when relation l does not have the parameters
/// (n^2, 2(n-1), n-2, 2) of a lattice graph.
LatticeIdempotentReport lattice_idempotent_count(const Scheme& s, int lattice_class);

} // namespace ascheme
