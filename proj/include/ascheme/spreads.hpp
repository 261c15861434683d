#pragma once

// Spreads (partitions of the vertex set into equal cliques), clique search,
// spread removal, and the spread family of the Brouwer-Pasechnik graph.

#include "ascheme/gf.hpp"
#include "ascheme/graph.hpp"
#include "ascheme/scheme.hpp"
#include "ascheme/srg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ascheme {

class SpreadError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Vertex -> clique index. Cliques are numbered by their least vertex.
struct Spread {
    std::size_t clique_size = 0;
    std::vector<int> assignment;

    std::size_t order() const { return assignment.size(); }
    std::size_t clique_count() const { return clique_size ? order() / clique_size : 0; }
    /// n cliques of order n.
    bool is_square() const { return clique_size * clique_size == order(); }
    std::vector<std::vector<std::size_t>> cliques() const;
    /// Graph of within-clique pairs.
    Graph graph() const;

    /// Builds from a list of disjoint, equal-size cliques covering 0..v-1.
    static Spread from_cliques(std::size_t v, const std::vector<std::vector<std::size_t>>& cliques);

    friend bool operator==(const Spread&, const Spread&) = default;
};

/// The spread whose within-clique graph is exactly g, if g is a disjoint
/// union of n cliques of order n. Throws SpreadError when v is not a square.
std::optional<Spread> is_square_spread(const Graph& g);

enum class SearchStatus { Found, NoneFound, Exhausted };
const char* to_string(SearchStatus s);

constexpr long long kDefaultSearchBudget = 10'000'000;

struct SpreadSearch {
    SearchStatus status = SearchStatus::NoneFound;
    std::optional<Spread> spread;
    long long nodes = 0;
};

/// Clique size tried when none is given: the Delsarte bound 1 - k/s of a
/// strongly regular g when it is an integer dividing v, otherwise sqrt(v).
/// Throws SpreadError when neither applies.
std::size_t default_spread_clique_size(const Graph& g);

/// Exact cover of the vertices by cliques of g of the given size. The least
/// uncovered vertex is always covered next and candidate cliques are tried in
/// increasing vertex order, so the witness is reproducible.
SpreadSearch find_spread(const Graph& g, std::optional<std::size_t> clique_size = std::nullopt,
                         long long budget = kDefaultSearchBudget);

struct SpreadRemoval {
    Graph residual;
    std::optional<SrgParams> host;      // g itself, when strongly regular
    std::optional<SrgParams> params;    // residual, when strongly regular
    std::optional<SrgType> type;        // residual type
    std::optional<IntersectionArray> drg; // residual, when distance-regular
    /// Set when g was of Latin square type, the spread square, and the
    /// residual is not: that would contradict a theorem and signals a bug.
    bool falsified = false;
    std::string note;
};

/// g minus the spread's edges. Throws SpreadError if a spread edge is missing.
SpreadRemoval remove_spread(const Graph& g, const Spread& s);

struct CliqueSearch {
    SearchStatus status = SearchStatus::NoneFound;
    std::vector<std::size_t> clique; // sorted
    long long nodes = 0;
};

/// Decides whether g has a clique of the given size, using branch and bound
/// with a greedy colouring bound.
CliqueSearch find_clique(const Graph& g, std::size_t size, long long budget = kDefaultSearchBudget);

/// Vertex (u, u') of the Brouwer-Pasechnik graph has index enc(u) q^3 + enc(u').
inline std::size_t bp_vertex(const Field& f, const Vec3& u, const Vec3& u2)
{
    const std::size_t q3 = static_cast<std::size_t>(f.order()) * f.order() * f.order();
    return static_cast<std::size_t>(encode(f, u)) * q3 + encode(f, u2);
}

/// From a clique {(w, phi(w))} of size q^3 in z3 minus S_0, returns S_0 and
/// S_alpha = {{(w, alpha phi(w) + y) : w} : y} for each nonzero alpha, in
/// increasing order of alpha's encoding. Checks that every spread lies in
/// z3 and that cliques of different spreads meet in exactly one vertex.
std::vector<Spread> bp_spread_family(const Field& f, const Graph& z3, const std::vector<std::size_t>& clique);

} // namespace ascheme
