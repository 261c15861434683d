#include "ascheme/scheme.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ascheme {

namespace {

std::string cell_name(std::size_t x, std::size_t y)
{
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

} // namespace

ColorMatrix::ColorMatrix(std::size_t v, int d, std::vector<std::uint8_t> cells)
    : v_(v), d_(d), cells_(std::move(cells))
{
    if (v < 2)
        throw SchemeError("a scheme needs at least 2 vertices");
    if (d < 1 || d > 255)
        throw SchemeError("class count must be in 1..255");
    if (cells_.size() != v * v)
        throw SchemeError("cell count does not match v*v");
    std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
    for (std::size_t x = 0; x < v; ++x) {
        if (cells_[x * v + x] != 0)
            throw SchemeError("diagonal cell " + cell_name(x, x) + " is not 0");
        for (std::size_t y = 0; y < v; ++y) {
            if (x == y)
                continue;
            const int c = cells_[x * v + y];
            if (c == 0)
                throw SchemeError("class 0 off the diagonal at " + cell_name(x, y));
            if (c > d)
                throw SchemeError("class index " + std::to_string(c) + " out of range at " + cell_name(x, y));
            if (cells_[y * v + x] != c)
                throw SchemeError("colour matrix not symmetric at " + cell_name(x, y));
            seen[static_cast<std::size_t>(c)] = true;
        }
    }
    for (int c = 1; c <= d; ++c)
        if (!seen[static_cast<std::size_t>(c)])
            throw SchemeError("class " + std::to_string(c) + " is empty");
}

ColorMatrix ColorMatrix::from_rows(const std::vector<std::vector<int>>& rows)
{
    const std::size_t v = rows.size();
    std::vector<std::uint8_t> cells(v * v);
    int d = 0;
    for (std::size_t x = 0; x < v; ++x) {
        if (rows[x].size() != v)
            throw SchemeError("row " + std::to_string(x) + " has wrong length");
        for (std::size_t y = 0; y < v; ++y) {
            const int c = rows[x][y];
            if (c < 0 || c > 255)
                throw SchemeError("class index out of range at " + cell_name(x, y));
            cells[x * v + y] = static_cast<std::uint8_t>(c);
            d = std::max(d, c);
        }
    }
    return ColorMatrix(v, d, std::move(cells));
}

ColorMatrix ColorMatrix::from_function(std::size_t v, int d,
                                       const std::function<int(std::size_t, std::size_t)>& color)
{
    std::vector<std::uint8_t> cells(v * v, 0);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y) {
            const int c = color(x, y);
            if (c < 0 || c > 255)
                throw SchemeError("class index out of range at " + cell_name(x, y));
            cells[x * v + y] = cells[y * v + x] = static_cast<std::uint8_t>(c);
        }
    return ColorMatrix(v, d, std::move(cells));
}

ColorMatrix ColorMatrix::from_graphs(const std::vector<Graph>& graphs)
{
    if (graphs.empty())
        throw SchemeError("no graphs given");
    const std::size_t v = graphs.front().order();
    std::vector<std::uint8_t> cells(v * v, 0);
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        if (graphs[g].order() != v)
            throw SchemeError("graphs have different orders");
        for (std::size_t x = 0; x < v; ++x)
            for (auto y : graphs[g].neighbors(x)) {
                auto& cell = cells[x * v + y];
                if (cell != 0)
                    throw SchemeError("graphs overlap at " + cell_name(x, y));
                cell = static_cast<std::uint8_t>(g + 1);
            }
    }
    return ColorMatrix(v, static_cast<int>(graphs.size()), std::move(cells));
}

Graph ColorMatrix::relation(int i) const
{
    Graph g(v_);
    for (std::size_t x = 0; x < v_; ++x)
        for (std::size_t y = x + 1; y < v_; ++y)
            if ((*this)(x, y) == i)
                g.add_edge(x, y);
    return g;
}

std::string Violation::describe() const
{
    std::ostringstream os;
    os << "A_" << i << "*A_" << j << " not constant on relation " << h << ": pair " << cell_name(first.first, first.second)
       << " has " << first_count << ", pair " << cell_name(second.first, second.second) << " has " << second_count;
    return os.str();
}

Scheme::Scheme(ColorMatrix colors, std::vector<long long> p, std::vector<VertexPair> representatives)
    : colors_(std::move(colors)), p_(std::move(p)), reps_(std::move(representatives))
{
    const std::size_t n = static_cast<std::size_t>(colors_.classes()) + 1;
    if (p_.size() != n * n * n || reps_.size() != n)
        throw SchemeError("intersection tensor has wrong shape");
}

std::vector<long long> Scheme::valencies() const
{
    std::vector<long long> k;
    for (int i = 0; i <= classes(); ++i)
        k.push_back(valency(i));
    return k;
}

RatMatrix Scheme::intersection_matrix(int i) const
{
    const int d = classes();
    RatMatrix L(static_cast<std::size_t>(d) + 1, static_cast<std::size_t>(d) + 1);
    for (int h = 0; h <= d; ++h)
        for (int j = 0; j <= d; ++j)
            L(static_cast<std::size_t>(h), static_cast<std::size_t>(j)) = p(j, i, h);
    return L;
}

namespace {

std::vector<VertexPair> find_representatives(const ColorMatrix& c)
{
    const int d = c.classes();
    std::vector<VertexPair> reps(static_cast<std::size_t>(d) + 1);
    std::vector<bool> have(static_cast<std::size_t>(d) + 1, false);
    reps[0] = {0, 0};
    have[0] = true;
    int missing = d;
    for (std::size_t x = 0; x < c.order() && missing; ++x)
        for (std::size_t y = x + 1; y < c.order() && missing; ++y) {
            const auto h = static_cast<std::size_t>(c(x, y));
            if (!have[h]) {
                have[h] = true;
                reps[h] = {x, y};
                --missing;
            }
        }
    return reps;
}

} // namespace

VerifyResult scheme_verify(const ColorMatrix& c)
{
    const std::size_t v = c.order();
    const int d = c.classes();
    const std::size_t n = static_cast<std::size_t>(d) + 1;

    std::vector<Graph> rel;
    rel.reserve(n);
    rel.emplace_back(v);
    for (int i = 1; i <= d; ++i)
        rel.push_back(c.relation(i));

    // Regularity (the diagonal case h = 0).
    for (int i = 1; i <= d; ++i) {
        const std::size_t k0 = rel[static_cast<std::size_t>(i)].degree(0);
        for (std::size_t x = 1; x < v; ++x) {
            const std::size_t kx = rel[static_cast<std::size_t>(i)].degree(x);
            if (kx != k0)
                return Violation{i, i, 0, {0, 0}, {x, x}, static_cast<long long>(k0), static_cast<long long>(kx)};
        }
    }

    const auto reps = find_representatives(c);
    std::vector<long long> p(n * n * n, 0);
    auto at = [&](std::size_t h, std::size_t i, std::size_t j) -> long long& { return p[(h * n + i) * n + j]; };
    for (std::size_t i = 0; i < n; ++i)
        at(0, i, i) = i == 0 ? 1 : static_cast<long long>(rel[i].degree(0));
    for (std::size_t h = 1; h < n; ++h) {
        const auto [x, y] = reps[h];
        at(h, 0, h) = at(h, h, 0) = 1;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                at(h, i, j) = static_cast<long long>(popcount_and(rel[i].row(x), rel[j].row(y)));
    }

    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y) {
            const std::size_t h = c(x, y);
            if (reps[h] == VertexPair{x, y})
                continue;
            for (std::size_t i = 1; i < n; ++i) {
                const auto rx = rel[i].row(x);
                for (std::size_t j = 1; j < n; ++j) {
                    const auto cnt = static_cast<long long>(popcount_and(rx, rel[j].row(y)));
                    if (cnt != at(h, i, j))
                        return Violation{static_cast<int>(i), static_cast<int>(j), static_cast<int>(h),
                                         reps[h], {x, y}, at(h, i, j), cnt};
                }
            }
        }
    return Scheme(c, std::move(p), reps);
}

VerifyResult scheme_verify_translation(const std::vector<int>& connection, int d,
                                       const std::function<std::size_t(std::size_t, std::size_t)>& subtract)
{
    const std::size_t v = connection.size();
    if (v < 2 || connection[0] != 0)
        throw SchemeError("connection set must have the identity in class 0");
    for (std::size_t g = 1; g < v; ++g) {
        if (connection[g] < 1 || connection[g] > d)
            throw SchemeError("connection class out of range for element " + std::to_string(g));
        if (connection[subtract(0, g)] != connection[g])
            throw SchemeError("connection set not closed under negation at element " + std::to_string(g));
    }
    ColorMatrix colors = ColorMatrix::from_function(
        v, d, [&](std::size_t x, std::size_t y) { return connection[subtract(y, x)]; });

    const std::size_t n = static_cast<std::size_t>(d) + 1;
    std::vector<long long> p(n * n * n, 0);
    auto at = [&](std::size_t h, std::size_t i, std::size_t j) -> long long& { return p[(h * n + i) * n + j]; };
    std::vector<std::size_t> rep_elem(n, 0);
    std::vector<bool> have(n, false);
    have[0] = true;
    std::vector<long long> counts(n * n);
    for (std::size_t g = 0; g < v; ++g) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t z = 0; z < v; ++z)
            ++counts[static_cast<std::size_t>(connection[z]) * n + static_cast<std::size_t>(connection[subtract(g, z)])];
        const auto h = static_cast<std::size_t>(connection[g]);
        if (!have[h] || g == 0) {
            have[h] = true;
            rep_elem[h] = g;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    at(h, i, j) = counts[i * n + j];
            continue;
        }
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                if (counts[i * n + j] != at(h, i, j))
                    return Violation{static_cast<int>(i), static_cast<int>(j), static_cast<int>(h),
                                     {0, rep_elem[h]}, {0, g}, at(h, i, j), counts[i * n + j]};
    }
    // Representatives as the first pair in row-major order, matching scheme_verify.
    auto reps = find_representatives(colors);
    return Scheme(std::move(colors), std::move(p), std::move(reps));
}

Scheme expect_scheme(VerifyResult r)
{
    if (auto* v = std::get_if<Violation>(&r))
        throw SchemeError("not an association scheme: " + v->describe());
    return std::get<Scheme>(std::move(r));
}

namespace {

bool lex_greater(const RatMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(a, c) != m(b, c))
            return m(a, c) > m(b, c);
    }
    return false;
}

long long infinity_norm(const RatMatrix& m)
{
    Rational best = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            s += abs(m(r, c));
        best = std::max(best, s);
    }
    BigInt b = numerator(best) / denominator(best) + 1;
    return b.convert_to<long long>();
}

std::vector<long long> distinct_integer_eigenvalues(const RatMatrix& m)
{
    const auto roots = integer_roots(char_poly(m), infinity_norm(m));
    if (roots.residual_degree > 0)
        throw SpectrumError("irrational spectrum: characteristic polynomial has a factor of degree " +
                            std::to_string(roots.residual_degree) + " without integer roots");
    std::vector<long long> r = roots.roots;
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

RatMatrix shifted(const RatMatrix& m, long long theta)
{
    RatMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out(i, i) -= theta;
    return out;
}

// Eigenvectors of a generic element; nullopt if its eigenvalues collide.
std::optional<std::vector<RatVector>> generic_eigenvectors(const Scheme& s, long long base)
{
    const int d = s.classes();
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    RatMatrix M(n, n);
    long long w = 1;
    for (int i = 1; i <= d; ++i) {
        w = (w * base) % 97;
        const long long c = w == 0 ? 1 : w;
        M = M + Rational(c) * s.intersection_matrix(i);
    }
    const auto eig = distinct_integer_eigenvalues(M);
    if (eig.size() != n)
        return std::nullopt;
    std::vector<RatVector> out;
    for (long long theta : eig) {
        auto k = kernel_basis(shifted(M, theta));
        if (k.size() != 1)
            return std::nullopt;
        out.push_back(std::move(k.front()));
    }
    return out;
}

// Intersection of the column spans of two bases.
std::vector<RatVector> intersect_spans(const std::vector<RatVector>& a, const std::vector<RatVector>& b)
{
    const std::size_t dim = a.front().size();
    RatMatrix stacked(dim, a.size() + b.size());
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < a.size(); ++c)
            stacked(r, c) = a[c][r];
        for (std::size_t c = 0; c < b.size(); ++c)
            stacked(r, a.size() + c) = -b[c][r];
    }
    std::vector<RatVector> out;
    for (const auto& coeffs : kernel_basis(stacked)) {
        RatVector x(dim);
        for (std::size_t c = 0; c < a.size(); ++c)
            for (std::size_t r = 0; r < dim; ++r)
                x[r] += coeffs[c] * a[c][r];
        out.push_back(std::move(x));
    }
    return out;
}

// Splits the whole space by the eigenspaces of each L_i in turn.
std::vector<RatVector> refined_eigenvectors(const Scheme& s)
{
    const int d = s.classes();
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    std::vector<std::vector<RatVector>> spaces(1);
    for (std::size_t i = 0; i < n; ++i) {
        RatVector e(n);
        e[i] = 1;
        spaces[0].push_back(std::move(e));
    }
    for (int i = 1; i <= d && spaces.size() < n; ++i) {
        const RatMatrix L = s.intersection_matrix(i);
        std::vector<std::vector<RatVector>> next;
        for (long long theta : distinct_integer_eigenvalues(L)) {
            const auto eig = kernel_basis(shifted(L, theta));
            for (const auto& sp : spaces) {
                auto meet = intersect_spans(sp, eig);
                if (!meet.empty())
                    next.push_back(std::move(meet));
            }
        }
        spaces = std::move(next);
    }
    if (spaces.size() != n)
        throw SpectrumError("common eigenspace refinement did not separate all idempotents");
    std::vector<RatVector> out;
    for (auto& sp : spaces)
        out.push_back(std::move(sp.front()));
    return out;
}

} // namespace

RatMatrix canonical_row_order(const RatMatrix& P)
{
    std::vector<std::size_t> order(P.rows());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lex_greater(P, a, b); });
    RatMatrix out(P.rows(), P.cols());
    for (std::size_t r = 0; r < order.size(); ++r)
        for (std::size_t c = 0; c < P.cols(); ++c)
            out(r, c) = P(order[r], c);
    return out;
}

Spectrum spectrum(const Scheme& s, SpectrumOptions opts)
{
    const int d = s.classes();
    const std::size_t n = static_cast<std::size_t>(d) + 1;

    std::optional<std::vector<RatVector>> vecs;
    for (int attempt = 0; attempt < opts.generic_attempts && !vecs; ++attempt)
        vecs = generic_eigenvectors(s, d + 1 + attempt);
    if (!vecs)
        vecs = refined_eigenvectors(s);

    RatMatrix P(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const RatVector& x = (*vecs)[r];
        if (x[0] == 0)
            throw SpectrumError("eigenvector with vanishing first coordinate");
        for (std::size_t c = 0; c < n; ++c) {
            P(r, c) = x[c] / x[0];
            if (denominator(P(r, c)) != 1)
                throw SpectrumError("non-integral eigenvalue");
        }
    }
    P = canonical_row_order(P);
    for (std::size_t c = 0; c < n; ++c)
        if (P(0, c) != s.valency(static_cast<int>(c)))
            throw SpectrumError("trivial idempotent row does not match valencies");

    RatMatrix Q = Rational(static_cast<long long>(s.order())) * mat_inverse(P);
    std::vector<long long> m;
    long long total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const Rational& mj = Q(0, j);
        if (denominator(mj) != 1 || mj <= 0)
            throw SpectrumError("multiplicity " + to_string(mj) + " is not a positive integer");
        m.push_back(numerator(mj).convert_to<long long>());
        total += m.back();
    }
    if (total != static_cast<long long>(s.order()))
        throw SpectrumError("multiplicities do not sum to v");
    return Spectrum{std::move(P), std::move(Q), std::move(m)};
}

Graph relation_graph(const Scheme& s, int i)
{
    if (i < 1 || i > s.classes())
        throw SchemeError("relation index " + std::to_string(i) + " out of range 1.." + std::to_string(s.classes()));
    return s.colors().relation(i);
}

std::string IntersectionArray::str() const
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i)
        os << (i ? "," : "") << b[i];
    os << ";";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << "}";
    return os.str();
}

namespace {

std::vector<int> bfs(const Graph& g, std::size_t src)
{
    std::vector<int> dist(g.order(), -1);
    std::deque<std::size_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (auto y : g.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

} // namespace

std::vector<std::vector<int>> distance_matrix(const Graph& g)
{
    std::vector<std::vector<int>> out;
    out.reserve(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        out.push_back(bfs(g, x));
        if (std::find(out.back().begin(), out.back().end(), -1) != out.back().end())
            throw DisconnectedGraph("graph is disconnected");
    }
    return out;
}

std::optional<IntersectionArray> drg_array(const Graph& g)
{
    const std::size_t v = g.order();
    const auto dist = distance_matrix(g);
    std::vector<std::vector<std::size_t>> nbrs(v);
    for (std::size_t x = 0; x < v; ++x)
        nbrs[x] = g.neighbors(x);

    int diameter = -1;
    std::vector<long long> b, c;
    for (std::size_t x = 0; x < v; ++x) {
        const int ecc = *std::max_element(dist[x].begin(), dist[x].end());
        if (diameter < 0) {
            diameter = ecc;
            b.assign(static_cast<std::size_t>(diameter) + 1, -1);
            c.assign(static_cast<std::size_t>(diameter) + 1, -1);
        } else if (ecc != diameter) {
            return std::nullopt;
        }
        for (std::size_t y = 0; y < v; ++y) {
            const int i = dist[x][y];
            long long up = 0, down = 0;
            for (auto z : nbrs[y]) {
                if (dist[x][z] == i + 1)
                    ++up;
                else if (dist[x][z] == i - 1)
                    ++down;
            }
            auto& bi = b[static_cast<std::size_t>(i)];
            auto& ci = c[static_cast<std::size_t>(i)];
            if (bi < 0) {
                bi = up;
                ci = down;
            } else if (bi != up || ci != down) {
                return std::nullopt;
            }
        }
    }
    IntersectionArray arr;
    for (int i = 0; i < diameter; ++i)
        arr.b.push_back(b[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= diameter; ++i)
        arr.c.push_back(c[static_cast<std::size_t>(i)]);
    return arr;
}

ColorMatrix distance_coloring(const Graph& g)
{
    const auto dist = distance_matrix(g);
    int diameter = 0;
    for (const auto& row : dist)
        diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
    return ColorMatrix::from_function(g.order(), diameter,
                                      [&](std::size_t x, std::size_t y) { return dist[x][y]; });
}

std::uint64_t tensor_digest(const Scheme& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](long long x) {
        for (int b = 0; b < 8; ++b) {
            h ^= static_cast<std::uint64_t>(x >> (8 * b)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<long long>(s.order()));
    mix(s.classes());
    for (auto x : s.tensor())
        mix(x);
    return h;
}

} // namespace ascheme
