#include "support.hpp"

#include "ascheme/gf.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>

namespace testing {

std::optional<std::vector<long long>> naive_tensor(const ColorMatrix& c)
{
    const std::size_t v = c.order();
    const std::size_t n = static_cast<std::size_t>(c.classes()) + 1;
    std::vector<long long> p(n * n * n, -1);
    std::vector<long long> counts(n * n);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t z = 0; z < v; ++z)
                ++counts[static_cast<std::size_t>(c(x, z)) * n + static_cast<std::size_t>(c(z, y))];
            const std::size_t h = static_cast<std::size_t>(c(x, y));
            for (std::size_t ij = 0; ij < n * n; ++ij) {
                long long& slot = p[h * n * n + ij];
                if (slot < 0)
                    slot = counts[ij];
                else if (slot != counts[ij])
                    return std::nullopt;
            }
        }
    return p;
}

std::optional<std::tuple<long long, long long, long long, long long>> naive_srg(const Graph& g)
{
    const std::size_t v = g.order();
    long long k = -1, lambda = -1, mu = -1;
    for (std::size_t x = 0; x < v; ++x) {
        long long deg = 0;
        for (std::size_t y = 0; y < v; ++y)
            deg += g.adjacent(x, y);
        if (k >= 0 && deg != k)
            return std::nullopt;
        k = deg;
    }
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y) {
            long long common = 0;
            for (std::size_t z = 0; z < v; ++z)
                common += g.adjacent(x, z) && g.adjacent(z, y);
            long long& slot = g.adjacent(x, y) ? lambda : mu;
            if (slot >= 0 && slot != common)
                return std::nullopt;
            slot = common;
        }
    if (lambda < 0 || mu < 0)
        return std::nullopt;
    return std::make_tuple(static_cast<long long>(v), k, lambda, mu);
}

std::vector<std::vector<int>> bfs_distances(const Graph& g)
{
    const std::size_t v = g.order();
    std::vector<std::vector<int>> dist(v, std::vector<int>(v, -1));
    for (std::size_t s = 0; s < v; ++s) {
        std::deque<std::size_t> queue{s};
        dist[s][s] = 0;
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t y = 0; y < v; ++y)
                if (g.adjacent(x, y) && dist[s][y] < 0) {
                    dist[s][y] = dist[s][x] + 1;
                    queue.push_back(y);
                }
        }
    }
    return dist;
}

std::optional<IntersectionArray> naive_drg_array(const Graph& g)
{
    const auto dist = bfs_distances(g);
    const std::size_t v = g.order();
    int diameter = 0;
    for (const auto& row : dist)
        for (int d : row) {
            if (d < 0)
                return std::nullopt;
            diameter = std::max(diameter, d);
        }
    std::vector<long long> b(static_cast<std::size_t>(diameter) + 1, -1), c(static_cast<std::size_t>(diameter) + 1, -1);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y) {
            const int i = dist[x][y];
            long long down = 0, up = 0;
            for (std::size_t z = 0; z < v; ++z) {
                if (!g.adjacent(y, z))
                    continue;
                down += dist[x][z] == i - 1;
                up += dist[x][z] == i + 1;
            }
            auto& bi = b[static_cast<std::size_t>(i)];
            auto& ci = c[static_cast<std::size_t>(i)];
            if ((bi >= 0 && bi != up) || (ci >= 0 && ci != down))
                return std::nullopt;
            bi = up;
            ci = down;
        }
    IntersectionArray a;
    for (int i = 0; i < diameter; ++i)
        a.b.push_back(b[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= diameter; ++i)
        a.c.push_back(c[static_cast<std::size_t>(i)]);
    return a;
}

IntMat adjacency(const Graph& g)
{
    IntMat m(g.order(), std::vector<long long>(g.order(), 0));
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < g.order(); ++y)
            m[x][y] = g.adjacent(x, y);
    return m;
}

IntMat multiply(const IntMat& a, const IntMat& b)
{
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    IntMat out(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const long long x = a[i][l];
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] += x * b[l][j];
        }
    return out;
}

std::pair<IntMat, long long> scaled_idempotent(const Scheme& s, const Spectrum& sp, std::size_t j)
{
    const auto d = static_cast<std::size_t>(s.classes());
    BigInt lcm = 1;
    for (std::size_t i = 0; i <= d; ++i)
        lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(sp.Q(i, j))));
    const long long D = lcm.convert_to<long long>();
    std::vector<long long> coeff(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        const Rational scaled = sp.Q(i, j) * D;
        coeff[i] = numerator(scaled).convert_to<long long>();
    }
    const std::size_t v = s.order();
    IntMat m(v, std::vector<long long>(v));
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y)
            m[x][y] = coeff[static_cast<std::size_t>(s.colors()(x, y))];
    return {m, D};
}

std::string idempotent_oracle(const Scheme& s, const Spectrum& sp)
{
    const auto d = static_cast<std::size_t>(s.classes());
    const auto v = static_cast<long long>(s.order());
    std::vector<IntMat> A;
    for (int i = 0; i <= s.classes(); ++i) {
        IntMat a(s.order(), std::vector<long long>(s.order(), 0));
        for (std::size_t x = 0; x < s.order(); ++x)
            for (std::size_t y = 0; y < s.order(); ++y)
                a[x][y] = s.colors()(x, y) == i;
        A.push_back(std::move(a));
    }
    for (std::size_t j = 0; j <= d; ++j) {
        const auto [M, D] = scaled_idempotent(s, sp, j);
        long long trace = 0;
        for (std::size_t x = 0; x < s.order(); ++x)
            trace += M[x][x];
        if (trace != D * v * sp.multiplicities[j])
            return "trace of idempotent " + std::to_string(j) + " differs from its multiplicity";
        const IntMat sq = multiply(M, M);
        for (std::size_t x = 0; x < s.order(); ++x)
            for (std::size_t y = 0; y < s.order(); ++y)
                if (sq[x][y] != D * v * M[x][y])
                    return "idempotent " + std::to_string(j) + " is not idempotent";
        for (std::size_t i = 1; i <= d; ++i) {
            const Rational& eig = sp.P(j, i);
            if (denominator(eig) != 1)
                return "non-integral eigenvalue";
            const long long e = numerator(eig).convert_to<long long>();
            const IntMat prod = multiply(A[i], M);
            for (std::size_t x = 0; x < s.order(); ++x)
                for (std::size_t y = 0; y < s.order(); ++y)
                    if (prod[x][y] != e * M[x][y])
                        return "A_" + std::to_string(i) + " does not act by P(" + std::to_string(j) + "," +
                               std::to_string(i) + ") on idempotent " + std::to_string(j);
        }
    }
    return {};
}

std::vector<std::vector<Rational>> sorted_rows(const RatMatrix& m)
{
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Rational> row;
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

bool same_rows(const RatMatrix& a, const std::vector<std::vector<long long>>& rows)
{
    return sorted_rows(a) == sorted_rows(RatMatrix::from_ints(rows));
}

bool has_row(const RatMatrix& m, const std::vector<long long>& row)
{
    if (row.size() != m.cols())
        return false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool match = true;
        for (std::size_t c = 0; c < m.cols() && match; ++c)
            match = m(r, c) == row[c];
        if (match)
            return true;
    }
    return false;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> relation_sets(const ColorMatrix& c)
{
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sets(static_cast<std::size_t>(c.classes()) + 1);
    for (std::size_t x = 0; x < c.order(); ++x)
        for (std::size_t y = x + 1; y < c.order(); ++y)
            sets[static_cast<std::size_t>(c(x, y))].emplace_back(x, y);
    sets.erase(sets.begin());
    std::sort(sets.begin(), sets.end());
    return sets;
}

bool same_partition(const ColorMatrix& a, const ColorMatrix& b)
{
    return a.order() == b.order() && a.classes() == b.classes() && relation_sets(a) == relation_sets(b);
}

std::vector<ClassPartition> all_partitions(int d)
{
    std::vector<ClassPartition> out;
    std::vector<int> a(static_cast<std::size_t>(d), 0);
    for (;;) {
        const int blocks = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<int>> bl(static_cast<std::size_t>(blocks));
        for (int i = 0; i < d; ++i)
            bl[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])].push_back(i + 1);
        out.emplace_back(d, bl);
        // Advance the rightmost position that may still grow.
        int pos = d - 1;
        for (; pos > 0; --pos) {
            const int prefix = *std::max_element(a.begin(), a.begin() + pos);
            if (a[static_cast<std::size_t>(pos)] <= prefix)
                break;
        }
        if (pos == 0)
            return out;
        ++a[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < d; ++i)
            a[static_cast<std::size_t>(i)] = 0;
    }
}

Graph complete_graph(std::size_t v)
{
    return graph_from(v, [](std::size_t, std::size_t) { return true; });
}

Graph cycle_graph(std::size_t v)
{
    return graph_from(v, [v](std::size_t x, std::size_t y) { return (y - x) % v == 1 || (x - y + v) % v == 1; });
}

namespace {

Scheme distance_scheme(const Graph& g) { return expect_scheme(scheme_verify(distance_coloring(g))); }

Scheme p64_scheme()
{
    const Scheme& dv3 = corpus_scheme("dv-3");
    const Graph r = relation_graph(dv3, 1);
    const auto found = find_spread(r);
    if (!found.spread)
        throw std::runtime_error("no spread in the valency-18 relation");
    return distance_scheme(remove_spread(r, *found.spread).residual);
}

/// Brouwer-Pasechnik fissions: Z3 minus S0 as class 3 and S0 as class 4;
/// then Z3 minus both spreads, S0, S1.
Scheme bp_fission(int classes)
{
    const Scheme& bp = corpus_scheme("bp-2");
    const Graph z3 = relation_graph(bp, 3);
    const Field f = Field::of_order(2);
    const auto s0 = find_spread(z3);
    if (!s0.spread)
        throw std::runtime_error("no spread in Z3");
    const Graph z4 = z3.minus(s0.spread->graph());
    const auto clique = find_clique(z4, 8);
    const auto family = bp_spread_family(f, z3, clique.clique);
    std::vector<Graph> graphs{relation_graph(bp, 1), relation_graph(bp, 2)};
    if (classes == 4) {
        graphs.push_back(z3.minus(family[0].graph()));
        graphs.push_back(family[0].graph());
    } else {
        graphs.push_back(z3.minus(family[0].graph()).minus(family[1].graph()));
        graphs.push_back(family[0].graph());
        graphs.push_back(family[1].graph());
    }
    return expect_scheme(scheme_verify(ColorMatrix::from_graphs(graphs)));
}

Scheme fused(const std::string& base, const std::string& blocks)
{
    const Scheme& s = corpus_scheme(base);
    return expect_scheme(is_fusion_scheme(s, ClassPartition::parse(blocks, s.classes())));
}

const std::vector<std::pair<std::string, std::function<Scheme()>>>& builders()
{
    static const std::vector<std::pair<std::string, std::function<Scheme()>>> list = {
        {"complete-5", [] { return build_complete(5); }},
        {"c5", [] { return distance_scheme(cycle_graph(5)); }},
        {"c6", [] { return distance_scheme(cycle_graph(6)); }},
        {"knn-2", [] { return build_knn_minus_matching(2); }},
        {"knn-4", [] { return build_knn_minus_matching(4); }},
        {"hamming-3-2", [] { return build_hamming(3, 2); }},
        {"lattice-3", [] { return build_lattice_scheme(3); }},
        {"lattice-4", [] { return build_lattice_scheme(4); }},
        {"hamming-2-4", [] { return build_hamming(2, 4); }},
        {"cyclotomic-9-2", [] { return build_cyclotomic(9, 2); }},
        {"cyclotomic-16-3", [] { return build_cyclotomic(16, 3); }},
        {"wreath-4", [] { return build_wreath(2, build_knn_minus_matching(4)); }},
        {"latin-4-1", [] { return build_latin_square_scheme(field_mols(4, 1)); }},
        {"latin-4-2", [] { return build_latin_square_scheme(field_mols(4, 2)); }},
        {"lattice-5", [] { return build_lattice_scheme(5); }},
        {"latin-5-3", [] { return build_latin_square_scheme(field_mols(5, 3)); }},
        {"sylvester", [] { return build_sylvester(); }},
        {"wreath-6", [] { return build_wreath(3, build_knn_minus_matching(6)); }},
        {"lattice-8", [] { return build_lattice_scheme(8); }},
        {"hamming-3-4", [] { return build_hamming(3, 4); }},
        {"bilinear-3", [] { return build_bilinear_forms(2).three; }},
        {"bilinear-4", [] { return build_bilinear_forms(2).four; }},
        {"bp-2", [] { return build_brouwer_pasechnik(2).scheme; }},
        {"bp-4", [] { return bp_fission(4); }},
        {"bp-5", [] { return bp_fission(5); }},
        {"decaen-vandam", [] { return build_decaen_vandam(); }},
        {"dv-4", [] { return fused("decaen-vandam", "1|2|3,4|5"); }},
        {"dv-3", [] { return fused("decaen-vandam", "1,2|3,4|5"); }},
        {"p64", [] { return p64_scheme(); }},
        {"ag28", [] { return build_ag28_scheme(); }},
        {"ag28-fused", [] { return fused("ag28", "1,2,3|4,5|6,7|8,9"); }},
        {"cyclotomic-81-4", [] { return build_cyclotomic(81, 4); }},
        {"cyclotomic-81-10", [] { return build_cyclotomic(81, 10); }},
        {"paley81-a", [] { return fused("cyclotomic-81-4", "1|2,4|3"); }},
        {"paley81-b", [] { return fused("cyclotomic-81-10", "1,3,5,7,9|2|4,6,8,10"); }},
        {"folded-halved", [] { return build_folded_halved_cube(); }},
        {"polhill", [] { return build_polhill_product(); }},
    };
    return list;
}

} // namespace

const Scheme& corpus_scheme(const std::string& name)
{
    static std::map<std::string, std::unique_ptr<Scheme>> cache;
    auto it = cache.find(name);
    if (it != cache.end())
        return *it->second;
    for (const auto& [n, make] : builders())
        if (n == name) {
            auto s = std::make_unique<Scheme>(make());
            const Scheme& ref = *s;
            cache.emplace(name, std::move(s));
            return ref;
        }
    throw std::invalid_argument("no corpus scheme named " + name);
}

std::vector<NamedScheme> corpus()
{
    std::vector<NamedScheme> out;
    for (const auto& entry : builders())
        out.push_back({entry.first, &corpus_scheme(entry.first)});
    return out;
}

std::vector<NamedScheme> corpus_upto(std::size_t max_v)
{
    std::vector<NamedScheme> out;
    for (const auto& e : corpus())
        if (e.scheme->order() <= max_v)
            out.push_back(e);
    return out;
}

ClebschDecomposition clebsch_decomposition()
{
    const Scheme c = build_cyclotomic(16, 3);
    ClebschDecomposition d;
    d.clebsch = relation_graph(c, 1);
    const auto found = find_spread(d.clebsch.complement());
    if (!found.spread)
        throw std::runtime_error("no spread in the Clebsch complement");
    d.spread = found.spread->graph();
    d.rest = d.clebsch.complement().minus(d.spread);
    return d;
}

std::map<std::vector<long long>, std::size_t> joint_spectrum(const std::vector<Graph>& graphs)
{
    const std::size_t v = graphs.at(0).order();
    std::vector<std::vector<long long>> eigen;
    std::vector<RatMatrix> mats;
    for (const auto& g : graphs) {
        RatMatrix m(v, v);
        for (std::size_t x = 0; x < v; ++x)
            for (std::size_t y = 0; y < v; ++y)
                m(x, y) = g.adjacent(x, y) ? 1 : 0;
        auto roots = integer_roots(char_poly(m), static_cast<long long>(v)).roots;
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        eigen.push_back(roots);
        mats.push_back(m);
    }
    std::map<std::vector<long long>, std::size_t> out;
    std::vector<std::size_t> idx(graphs.size(), 0);
    for (;;) {
        RatMatrix stacked(v * graphs.size(), v);
        std::vector<long long> tuple;
        for (std::size_t g = 0; g < graphs.size(); ++g) {
            const long long theta = eigen[g][idx[g]];
            tuple.push_back(theta);
            for (std::size_t x = 0; x < v; ++x)
                for (std::size_t y = 0; y < v; ++y)
                    stacked(g * v + x, y) = mats[g](x, y) - (x == y ? theta : 0);
        }
        const std::size_t dim = kernel_basis(stacked).size();
        if (dim > 0)
            out[tuple] = dim;
        std::size_t g = 0;
        for (; g < graphs.size(); ++g) {
            if (++idx[g] < eigen[g].size())
                break;
            idx[g] = 0;
        }
        if (g == graphs.size())
            return out;
    }
}

} // namespace testing
