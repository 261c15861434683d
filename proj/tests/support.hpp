#pragma once

// Independent brute-force oracles and a shared corpus of schemes for tests.

#include "ascheme/constructions.hpp"
#include "ascheme/exactmat.hpp"
#include "ascheme/fusion.hpp"
#include "ascheme/graph.hpp"
#include "ascheme/scheme.hpp"
#include "ascheme/spreads.hpp"
#include "ascheme/srg.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace testing {

using namespace ascheme;

/// p[h][i][j] by direct triple counting over every pair, or nullopt when some
/// count is not constant on its relation. Same layout as Scheme::tensor().
std::optional<std::vector<long long>> naive_tensor(const ColorMatrix& c);

/// (v, k, lambda, mu) by counting common neighbours pair by pair.
std::optional<std::tuple<long long, long long, long long, long long>> naive_srg(const Graph& g);

/// Breadth-first distances from every vertex (-1 when unreachable).
std::vector<std::vector<int>> bfs_distances(const Graph& g);

/// Intersection array from the definition: for every pair at distance i,
/// count neighbours of y at distance i-1 and i+1 from x.
std::optional<IntersectionArray> naive_drg_array(const Graph& g);

/// Integer v x v matrix, row major.
using IntMat = std::vector<std::vector<long long>>;

IntMat adjacency(const Graph& g);
IntMat multiply(const IntMat& a, const IntMat& b);

/// D * v * E_j as an integer matrix, where D clears the denominators of
/// column j of Q. Returns the scale D alongside.
std::pair<IntMat, long long> scaled_idempotent(const Scheme& s, const Spectrum& sp, std::size_t j);

/// Checks A_i E_j = P_ji E_j for every i, E_j^2 = E_j and trace E_j = m_j by
/// materialising the idempotents. Returns an empty string on success.
std::string idempotent_oracle(const Scheme& s, const Spectrum& sp);

/// Rows of m as a sorted list, for comparison up to row order.
std::vector<std::vector<Rational>> sorted_rows(const RatMatrix& m);
bool same_rows(const RatMatrix& a, const std::vector<std::vector<long long>>& rows);
bool has_row(const RatMatrix& m, const std::vector<long long>& row);

/// Each class as an edge set, sorted; equal iff two colourings define the
/// same relations up to relabelling.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> relation_sets(const ColorMatrix& c);
bool same_partition(const ColorMatrix& a, const ColorMatrix& b);

/// All set partitions of 1..d in restricted-growth order, enumerated by an
/// odometer independent of the library's enumerator.
std::vector<ClassPartition> all_partitions(int d);

struct NamedScheme {
    std::string name;
    const Scheme* scheme;
};

/// Lazily built, cached schemes shared across test cases.
const Scheme& corpus_scheme(const std::string& name);
/// Every corpus scheme, small ones first.
std::vector<NamedScheme> corpus();
/// Corpus schemes with at most max_v vertices.
std::vector<NamedScheme> corpus_upto(std::size_t max_v);

/// Graph from an edge predicate.
template <class F>
Graph graph_from(std::size_t v, F adjacent)
{
    Graph g(v);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y)
            if (adjacent(x, y))
                g.add_edge(x, y);
    return g;
}

Graph complete_graph(std::size_t v);
Graph cycle_graph(std::size_t v);

/// The Clebsch graph (valency 5) as a cyclotomic class of GF(16), the spread
/// found in its complement, and the remaining valency-7 graph.
struct ClebschDecomposition {
    Graph clebsch;
    Graph spread;
    Graph rest;
};
ClebschDecomposition clebsch_decomposition();

/// Distinct joint eigenvalue tuples of commuting symmetric 01 matrices with
/// their common eigenspace dimensions, found from kernels of stacked
/// (A_i - theta_i I).
std::map<std::vector<long long>, std::size_t> joint_spectrum(const std::vector<Graph>& graphs);

} // namespace testing
