#pragma once

// Strongly regular graphs: parameters, restricted eigenvalues, and the Latin
// square / negative Latin square / conference classification.

#include "ascheme/graph.hpp"
#include "ascheme/scheme.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace ascheme {

struct SrgParams {
    long long v = 0, k = 0, lambda = 0, mu = 0;
    // Restricted eigenvalues r >= s; empty when they are irrational
    // (only possible for conference graphs).
    std::optional<long long> r, s;
    long long f = 0, g = 0; // multiplicities of r and s (or of the two irrational ones)

    std::string str() const;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Why a graph is not strongly regular, with a witness where one exists.
struct NotSrg {
    enum class Reason { Irregular, Complete, Empty, LambdaNotConstant, MuNotConstant, BadMultiplicity };
    Reason reason;
    VertexPair first{0, 0};
    VertexPair second{0, 0};
    std::string describe() const;
};

using SrgResult = std::variant<SrgParams, NotSrg>;

/// Parameters from (v, k, lambda, mu): eigenvalues and multiplicities, or
/// BadMultiplicity when they are not integral.
SrgResult srg_from_parameters(long long v, long long k, long long lambda, long long mu);

/// Common-neighbour counts over edges and non-edges via packed rows.
SrgResult srg_params(const Graph& g);

/// Same question for relation i of a scheme, read off the intersection
/// numbers: lambda = p^i_{ii}, mu = p^h_{ii} for every h != 0, i.
SrgResult relation_srg_params(const Scheme& s, int i);

enum class SrgKind { StrictLatinSquare, StrictNegativeLatinSquare, Conference, Untyped };

struct SrgType {
    SrgKind kind = SrgKind::Untyped;
    long long n = 0; // signed: negative for negative Latin square type
    long long t = 0;

    std::string str() const;
    friend bool operator==(const SrgType&, const SrgType&) = default;
};

SrgType classify_type(const SrgParams& p);

/// Conference graphs on a square number of vertices count as both types.
bool is_ls_inclusive(const SrgParams& p);
bool is_nls_inclusive(const SrgParams& p);

/// Latin square parameters (n, t) with the given sign of n, for the inclusive
/// predicates above.
std::optional<SrgType> latin_square_parameters(const SrgParams& p, bool negative);

class SrgError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class LatinSign { LatinSquare, NegativeLatinSquare };

/// For an SRG on n^2 vertices with a restricted eigenvalue a and k = -a(n-1):
/// LS type when the satisfying n is positive, NLS when negative.
LatinSign lemma_type_from_eigenvalue(long long v, long long k, long long a);

/// Dimension of the common eigenspace of eigenvalue n-t of a (negative) Latin
/// square graph and eigenvalue r of a commuting SRG with valency k and
/// restricted eigenvalues r, s: -t (k + (n-1) s) / (r - s). Throws SrgError
/// when r - s and n have different signs or the value is not a nonnegative
/// integer.
long long common_eigenspace_dim(long long n, long long t, long long k, long long r, long long s);

/// Perfect-square root, or nullopt.
std::optional<long long> exact_sqrt(long long v);

} // namespace ascheme
