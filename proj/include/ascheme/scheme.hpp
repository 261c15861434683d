#pragma once

// Symmetric association schemes: the colour-matrix representation, axiom
// verification with intersection numbers, and exact eigenmatrices.

#include "ascheme/exactmat.hpp"
#include "ascheme/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ascheme {

class SchemeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using VertexPair = std::pair<std::size_t, std::size_t>;

/// v x v symmetric matrix of relation indices 0..d; 0 exactly on the diagonal.
class ColorMatrix {
public:
    ColorMatrix() = default;
    /// Validates every invariant; throws SchemeError naming the offending cell.
    ColorMatrix(std::size_t v, int d, std::vector<std::uint8_t> cells);

    static ColorMatrix from_rows(const std::vector<std::vector<int>>& rows);
    /// Builds cells[x][y] = color(x, y) for x != y (color must be symmetric).
    static ColorMatrix from_function(std::size_t v, int d,
                                     const std::function<int(std::size_t, std::size_t)>& color);
    /// Colours vertex pairs by membership in edge-disjoint graphs covering K_v.
    static ColorMatrix from_graphs(const std::vector<Graph>& graphs);

    std::size_t order() const { return v_; }
    int classes() const { return d_; }
    int operator()(std::size_t x, std::size_t y) const { return cells_[x * v_ + y]; }
    std::span<const std::uint8_t> row(std::size_t x) const { return {cells_.data() + x * v_, v_}; }
    const std::vector<std::uint8_t>& cells() const { return cells_; }

    Graph relation(int i) const;

    friend bool operator==(const ColorMatrix&, const ColorMatrix&) = default;

private:
    std::size_t v_ = 0;
    int d_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// A failed closure check: the number of z with (x,z) in relation i and
/// (z,y) in relation j differs between two pairs (x,y) of relation h.
struct Violation {
    int i = 0;
    int j = 0;
    int h = 0;
    VertexPair first;
    VertexPair second;
    long long first_count = 0;
    long long second_count = 0;

    std::string describe() const;
};

class Scheme {
public:
    /// Trusted constructor for callers that have already established closure
    /// (verification routines, fusion fast path). p is indexed [h][i][j].
    Scheme(ColorMatrix colors, std::vector<long long> p, std::vector<VertexPair> representatives);

    const ColorMatrix& colors() const { return colors_; }
    std::size_t order() const { return colors_.order(); }
    int classes() const { return colors_.classes(); }

    long long p(int h, int i, int j) const
    {
        const std::size_t n = static_cast<std::size_t>(classes()) + 1;
        return p_[(static_cast<std::size_t>(h) * n + static_cast<std::size_t>(i)) * n + static_cast<std::size_t>(j)];
    }
    long long valency(int i) const { return p(0, i, i); }
    std::vector<long long> valencies() const;
    const std::vector<long long>& tensor() const { return p_; }
    /// First pair (row-major) lying in relation h.
    VertexPair representative(int h) const { return reps_[static_cast<std::size_t>(h)]; }

    /// (L_i)[h][j] = p^j_{ih}: multiplication by A_i in the basis A_0..A_d.
    RatMatrix intersection_matrix(int i) const;

private:
    ColorMatrix colors_;
    std::vector<long long> p_;
    std::vector<VertexPair> reps_;
};

using VerifyResult = std::variant<Scheme, Violation>;

/// Checks that every product A_i A_j is constant on each relation, using
/// packed boolean rows. Deterministic: the reported violation is the least
/// (x, y, i, j) in lexicographic order.
VerifyResult scheme_verify(const ColorMatrix& c);

/// Verification for a translation colouring cells[x][y] = connection[y - x]
/// on an abelian group of order v: closure only needs checking from the base
/// point 0. `subtract(a, b)` returns the index of a - b.
VerifyResult scheme_verify_translation(const std::vector<int>& connection, int d,
                                       const std::function<std::size_t(std::size_t, std::size_t)>& subtract);

/// Unwraps a verification result, throwing SchemeError with the violation text.
Scheme expect_scheme(VerifyResult r);

inline const Violation* as_violation(const VerifyResult& r) { return std::get_if<Violation>(&r); }

struct Spectrum {
    RatMatrix P;                           // rows = idempotents, columns = relations
    RatMatrix Q;                           // v * P^{-1}
    std::vector<long long> multiplicities; // m_j = Q_{0j}
};

class SpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectrumOptions {
    /// Generic linear combinations tried before falling back to iterative
    /// common-eigenspace refinement.
    int generic_attempts = 5;
};

/// Exact eigenmatrices. Row 0 of P is (1, k_1, ..., k_d); the remaining rows
/// are sorted lexicographically decreasing. Throws SpectrumError when an
/// eigenvalue is irrational.
Spectrum spectrum(const Scheme& s, SpectrumOptions opts = {});

/// Sorts rows 1.. of an eigenmatrix into the canonical order.
RatMatrix canonical_row_order(const RatMatrix& P);

Graph relation_graph(const Scheme& s, int i);

class DisconnectedGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct IntersectionArray {
    std::vector<long long> b; // b_0 .. b_{D-1}
    std::vector<long long> c; // c_1 .. c_D

    int diameter() const { return static_cast<int>(c.size()); }
    std::string str() const;
    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Intersection array when g is distance-regular, nullopt otherwise.
/// Throws DisconnectedGraph for disconnected input.
std::optional<IntersectionArray> drg_array(const Graph& g);

/// All-pairs distances; throws DisconnectedGraph when g is disconnected.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

/// Colour matrix of a connected graph's distance partition.
ColorMatrix distance_coloring(const Graph& g);

/// 64-bit FNV-1a over (v, d, tensor); stable across runs.
std::uint64_t tensor_digest(const Scheme& s);

} // namespace ascheme
