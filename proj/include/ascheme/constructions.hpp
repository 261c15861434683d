#pragma once

// Named builders. Each returns a verified scheme; vertex numbering is fixed
// by element encodings so outputs are reproducible byte for byte.

#include "ascheme/fusion.hpp"
#include "ascheme/gf.hpp"
#include "ascheme/scheme.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace ascheme {

class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// GQ(2,2) from the duads and synthemes of {0,...,5}.
struct GQ22 {
    std::vector<std::array<int, 2>> points; // 15 duads, lexicographic
    std::vector<std::array<int, 3>> lines;  // 15 synthemes as point indices
    std::vector<std::vector<int>> spreads;  // 6 sets of 5 line indices
    std::vector<std::vector<int>> ovoids;   // ovoid i = duads through element i
};

GQ22 build_gq22();

/// Vertices (spread s, ovoid o) with index 6s + o. Relation 1 is the
/// Sylvester graph, 2 its distance-2 graph, 3 same spread, 4 same ovoid.
Scheme build_sylvester();

struct BilinearForms {
    Scheme three; // rank 1 | rank 2, not alternating | rank 3 or alternating
    Scheme four;  // rank 1 | rank 2, not alternating | rank 3 | alternating
};

/// Symmetric 3x3 matrices over GF(q), q even, indexed by SymMat3::code.
/// q > 4 needs force.
BilinearForms build_bilinear_forms(unsigned q, bool force = false);

struct BrouwerPasechnik {
    Scheme scheme; // distance scheme of z
    Graph z;
};

/// (u,u') ~ (v,v') iff v' - u' = u x v; vertex index enc(u) q^3 + enc(u').
/// q > 3 needs force.
BrouwerPasechnik build_brouwer_pasechnik(unsigned q, bool force = false);

/// Distance 3 in the Brouwer-Pasechnik graph: w = u and w' != u', or
/// w' - u' not orthogonal to w - u.
bool bp_distance3(const Field& f, std::size_t x, std::size_t y);

/// Distance scheme of H(D,q); words are base-q digit strings. Needs q^D <= 2^16.
Scheme build_hamming(int D, int q);

/// Index of a vector of GF(q)^dim: sum of u_i q^i.
std::vector<Elem> decode_vector(const Field& f, int dim, std::size_t code);
std::size_t encode_vector(const Field& f, const std::vector<Elem>& u);

/// All nonzero multiples of the given vectors (by code), sorted.
std::vector<std::size_t> projective_expand(const Field& f, int dim, const std::vector<std::size_t>& points);

/// x ~_i y iff x - y lies in parts[i-1]. Parts must partition the nonzero
/// vectors and be closed under nonzero scalars; otherwise ConstructionError.
VerifyResult build_translation_scheme(const Field& f, int dim, const std::vector<std::vector<std::size_t>>& parts);

/// PG(2,4) as normalised vectors (first nonzero coordinate 1), split into
/// the triangle, xyz = alpha for alpha = 1, 2, 3 (by encoding), and the
/// weight-2 points.
struct PG24Partition {
    std::vector<std::vector<std::size_t>> parts;
};

PG24Partition pg24_partition(const Field& gf4);

/// Translation scheme on GF(4)^3 from pg24_partition.
Scheme build_decaen_vandam();

/// x ~_i y iff log(x - y) = i - 1 mod e.
Scheme build_cyclotomic(unsigned q, unsigned e);

/// AG(2,8) on GF(8)^2 with index x + 8y. Class 1 is slope infinity, class
/// 2 + enc(m) is slope m.
Scheme build_ag28_scheme();

/// {1,2,3} | {4,5} | {6,7} | {8,9}, valencies 21, 14, 14, 14.
ClassPartition ag28_polhill_fusion();

/// Vertex c * 64 + b for c in GF(16) and b in GF(8)^2.
Scheme build_polhill_product();

/// Even-weight words of length 12 modulo the all-ones word, classes by
/// min(wt, 12 - wt) = 2, 4, 6. Index = bits 0..9 (bit 10 is parity).
Scheme build_folded_halved_cube();

/// 1-class scheme on v vertices.
Scheme build_complete(std::size_t v);

/// Outer classes blown up by all-ones blocks, followed by the inner classes
/// inside each block. Vertex (a, b) has index a * inner.order() + b.
Scheme build_wreath(const Scheme& outer, const Scheme& inner);

/// Wreath product with the 1-class scheme on m vertices (m = 1 returns the
/// inner scheme).
Scheme build_wreath(std::size_t m, const Scheme& inner);

/// K_{n,n} minus a perfect matching: vertex i (< n) is matched with n + i.
/// Class 1 = opposite side unmatched, 2 = same side, 3 = matched.
Scheme build_knn_minus_matching(std::size_t n);

/// L_2(n) and its complement (the Hamming scheme H(2,n)).
Scheme build_lattice_scheme(std::size_t n);

using LatinSquare = std::vector<std::vector<int>>;

/// Cell (r,c) has index r n + c. Classes: same row, same column, same symbol
/// in each square, then the remaining pairs (omitted if empty).
Scheme build_latin_square_scheme(const std::vector<LatinSquare>& squares);

/// L_a(r,c) = a r + c over GF(q), for the first `count` nonzero a.
std::vector<LatinSquare> field_mols(unsigned q, unsigned count);

} // namespace ascheme
