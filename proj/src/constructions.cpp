#include "ascheme/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace ascheme {

GQ22 build_gq22()
{
    GQ22 gq;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            gq.points.push_back({a, b});
    auto point_index = [&](int a, int b) {
        if (a > b)
            std::swap(a, b);
        return static_cast<int>(std::find(gq.points.begin(), gq.points.end(), std::array<int, 2>{a, b}) -
                                gq.points.begin());
    };
    // Synthemes: 0 is paired with some b, the least remaining element with c,
    // and the last two together.
    for (int b = 1; b < 6; ++b) {
        std::vector<int> rest;
        for (int x = 1; x < 6; ++x)
            if (x != b)
                rest.push_back(x);
        for (int i = 1; i < 4; ++i) {
            std::vector<int> other;
            for (int j = 1; j < 4; ++j)
                if (j != i)
                    other.push_back(rest[static_cast<std::size_t>(j)]);
            std::array<int, 3> line{point_index(0, b), point_index(rest[0], rest[static_cast<std::size_t>(i)]),
                                    point_index(other[0], other[1])};
            std::sort(line.begin(), line.end());
            gq.lines.push_back(line);
        }
    }
    std::sort(gq.lines.begin(), gq.lines.end());

    // Spreads: five lines covering all fifteen points.
    std::vector<int> chosen;
    std::vector<bool> covered(15, false);
    auto search = [&](auto&& self, int from) -> void {
        if (chosen.size() == 5) {
            gq.spreads.push_back(chosen);
            return;
        }
        for (int l = from; l < 15; ++l) {
            const auto& line = gq.lines[static_cast<std::size_t>(l)];
            if (std::any_of(line.begin(), line.end(), [&](int p) { return covered[static_cast<std::size_t>(p)]; }))
                continue;
            for (int p : line)
                covered[static_cast<std::size_t>(p)] = true;
            chosen.push_back(l);
            self(self, l + 1);
            chosen.pop_back();
            for (int p : line)
                covered[static_cast<std::size_t>(p)] = false;
        }
    };
    search(search, 0);

    for (int e = 0; e < 6; ++e) {
        std::vector<int> ovoid;
        for (int p = 0; p < 15; ++p)
            if (gq.points[static_cast<std::size_t>(p)][0] == e || gq.points[static_cast<std::size_t>(p)][1] == e)
                ovoid.push_back(p);
        gq.ovoids.push_back(ovoid);
    }
    if (gq.spreads.size() != 6)
        throw ConstructionError("GQ(2,2) should have 6 spreads");
    return gq;
}

Scheme build_sylvester()
{
    const GQ22 gq = build_gq22();
    auto common = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        if (out.size() != 1)
            throw ConstructionError("GQ(2,2) spreads or ovoids do not meet in exactly one element");
        return out.front();
    };
    auto colors = ColorMatrix::from_function(36, 4, [&](std::size_t x, std::size_t y) {
        const auto s1 = x / 6, o1 = x % 6, s2 = y / 6, o2 = y % 6;
        if (s1 == s2)
            return 3;
        if (o1 == o2)
            return 4;
        const int line = common(gq.spreads[s1], gq.spreads[s2]);
        const int point = common(gq.ovoids[o1], gq.ovoids[o2]);
        const auto& l = gq.lines[static_cast<std::size_t>(line)];
        return std::find(l.begin(), l.end(), point) != l.end() ? 1 : 2;
    });
    return expect_scheme(scheme_verify(colors));
}

namespace {

Scheme translation_or_throw(const std::vector<int>& connection, int d,
                            const std::function<std::size_t(std::size_t, std::size_t)>& subtract)
{
    return expect_scheme(scheme_verify_translation(connection, d, subtract));
}

} // namespace

BilinearForms build_bilinear_forms(unsigned q, bool force)
{
    const Field f = Field::of_order(q);
    if (f.characteristic() != 2)
        throw ConstructionError("symmetric bilinear forms scheme needs even q");
    if (q > 4 && !force)
        throw ConstructionError("q > 4 exceeds the default size budget");
    const std::size_t v = static_cast<std::size_t>(q) * q * q * q * q * q;
    std::vector<int> three(v, 0), four(v, 0);
    for (std::size_t g = 1; g < v; ++g) {
        const auto r = sym_rank(f, SymMat3::from_code(f, static_cast<unsigned>(g)));
        if (r.alternating) {
            three[g] = 3;
            four[g] = 4;
        } else {
            three[g] = r.rank;
            four[g] = r.rank;
        }
    }
    auto subtract = [&](std::size_t a, std::size_t b) -> std::size_t {
        return sym_sub(f, SymMat3::from_code(f, static_cast<unsigned>(a)), SymMat3::from_code(f, static_cast<unsigned>(b)))
            .code(f);
    };
    return {translation_or_throw(three, 3, subtract), translation_or_throw(four, 4, subtract)};
}

BrouwerPasechnik build_brouwer_pasechnik(unsigned q, bool force)
{
    if (q > 3 && !force)
        throw ConstructionError("q > 3 exceeds the default size budget");
    const Field f = Field::of_order(q);
    const std::size_t q3 = static_cast<std::size_t>(q) * q * q;
    Graph z(q3 * q3);
    for (std::size_t uc = 0; uc < q3; ++uc) {
        const Vec3 u = decode3(f, static_cast<unsigned>(uc));
        for (std::size_t vc = 0; vc < q3; ++vc) {
            const Vec3 vv = decode3(f, static_cast<unsigned>(vc));
            const Vec3 c = cross(f, u, vv);
            for (std::size_t u2 = 0; u2 < q3; ++u2) {
                const std::size_t v2 = encode(f, vadd(f, decode3(f, static_cast<unsigned>(u2)), c));
                const std::size_t x = uc * q3 + u2, y = vc * q3 + v2;
                if (x < y)
                    z.add_edge(x, y);
            }
        }
    }
    return {expect_scheme(scheme_verify(distance_coloring(z))), std::move(z)};
}

bool bp_distance3(const Field& f, std::size_t x, std::size_t y)
{
    const std::size_t q3 = static_cast<std::size_t>(f.order()) * f.order() * f.order();
    const Vec3 u = decode3(f, static_cast<unsigned>(x / q3)), u2 = decode3(f, static_cast<unsigned>(x % q3));
    const Vec3 w = decode3(f, static_cast<unsigned>(y / q3)), w2 = decode3(f, static_cast<unsigned>(y % q3));
    if (w == u)
        return w2 != u2;
    return dot(f, vsub(f, w2, u2), vsub(f, w, u)) != 0;
}

Scheme build_hamming(int D, int q)
{
    if (D < 1 || q < 2)
        throw ConstructionError("Hamming scheme needs D >= 1 and q >= 2");
    long long v = 1;
    for (int i = 0; i < D; ++i) {
        v *= q;
        if (v > (1 << 16))
            throw ConstructionError("q^D exceeds 65536");
    }
    const auto vs = static_cast<std::size_t>(v);
    const auto uq = static_cast<std::size_t>(q);
    std::vector<int> connection(vs, 0);
    for (std::size_t g = 1; g < vs; ++g)
        for (std::size_t t = g; t; t /= uq)
            connection[g] += t % uq != 0;
    auto subtract = [&](std::size_t a, std::size_t b) {
        std::size_t out = 0, place = 1;
        for (int i = 0; i < D; ++i) {
            out += ((a % uq + uq - b % uq) % uq) * place;
            a /= uq;
            b /= uq;
            place *= uq;
        }
        return out;
    };
    return translation_or_throw(connection, D, subtract);
}

std::vector<Elem> decode_vector(const Field& f, int dim, std::size_t code)
{
    std::vector<Elem> u(static_cast<std::size_t>(dim));
    for (auto& c : u) {
        c = static_cast<Elem>(code % f.order());
        code /= f.order();
    }
    return u;
}

std::size_t encode_vector(const Field& f, const std::vector<Elem>& u)
{
    std::size_t code = 0;
    for (std::size_t i = u.size(); i-- > 0;)
        code = code * f.order() + u[i];
    return code;
}

std::vector<std::size_t> projective_expand(const Field& f, int dim, const std::vector<std::size_t>& points)
{
    std::vector<std::size_t> out;
    for (auto p : points) {
        auto u = decode_vector(f, dim, p);
        for (Elem c = 1; c < f.order(); ++c) {
            std::vector<Elem> w(u.size());
            std::transform(u.begin(), u.end(), w.begin(), [&](Elem x) { return f.mul(c, x); });
            out.push_back(encode_vector(f, w));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VerifyResult build_translation_scheme(const Field& f, int dim, const std::vector<std::vector<std::size_t>>& parts)
{
    if (dim < 1)
        throw ConstructionError("dimension must be positive");
    std::size_t v = 1;
    for (int i = 0; i < dim; ++i)
        v *= f.order();
    if (parts.empty() || parts.size() > 255)
        throw ConstructionError("need between 1 and 255 parts");
    std::vector<int> connection(v, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto g : parts[i]) {
            if (g == 0 || g >= v)
                throw ConstructionError("part " + std::to_string(i + 1) + " contains invalid vector " + std::to_string(g));
            if (connection[g] != 0)
                throw ConstructionError("vector " + std::to_string(g) + " lies in two parts");
            connection[g] = static_cast<int>(i) + 1;
        }
    for (std::size_t g = 1; g < v; ++g) {
        if (connection[g] == 0)
            throw ConstructionError("vector " + std::to_string(g) + " lies in no part");
        const auto u = decode_vector(f, dim, g);
        for (Elem c = 2; c < f.order(); ++c) {
            std::vector<Elem> w(u.size());
            std::transform(u.begin(), u.end(), w.begin(), [&](Elem x) { return f.mul(c, x); });
            if (connection[encode_vector(f, w)] != connection[g])
                throw ConstructionError("part " + std::to_string(connection[g]) + " is not closed under scalar " +
                                        std::to_string(c));
        }
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].empty())
            throw ConstructionError("part " + std::to_string(i + 1) + " is empty");
    auto subtract = [&](std::size_t a, std::size_t b) {
        auto x = decode_vector(f, dim, a);
        const auto y = decode_vector(f, dim, b);
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = f.sub(x[i], y[i]);
        return encode_vector(f, x);
    };
    return scheme_verify_translation(connection, static_cast<int>(parts.size()), subtract);
}

PG24Partition pg24_partition(const Field& f)
{
    if (f.order() != 4)
        throw ConstructionError("PG(2,4) partition needs GF(4)");
    PG24Partition out;
    out.parts.resize(5);
    for (std::size_t code = 1; code < 64; ++code) {
        const auto u = decode_vector(f, 3, code);
        const auto lead = std::find_if(u.begin(), u.end(), [](Elem x) { return x != 0; });
        if (*lead != 1)
            continue;
        const auto weight = std::count_if(u.begin(), u.end(), [](Elem x) { return x != 0; });
        if (weight == 1)
            out.parts[0].push_back(code);
        else if (weight == 2)
            out.parts[4].push_back(code);
        else
            out.parts[f.mul(u[0], f.mul(u[1], u[2]))].push_back(code);
    }
    return out;
}

Scheme build_decaen_vandam()
{
    const Field f = Field::of_order(4);
    const auto pg = pg24_partition(f);
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& p : pg.parts)
        parts.push_back(projective_expand(f, 3, p));
    return expect_scheme(build_translation_scheme(f, 3, parts));
}

Scheme build_cyclotomic(unsigned q, unsigned e)
{
    const Field f = Field::of_order(q);
    if (e < 1 || (q - 1) % e != 0)
        throw ConstructionError("e must divide q - 1");
    if (e > 255)
        throw ConstructionError("at most 255 classes");
    if (f.characteristic() != 2 && ((q - 1) / e) % 2 != 0)
        throw ConstructionError("cyclotomic scheme is not symmetric: (q-1)/e is odd in odd characteristic");
    std::vector<int> connection(q, 0);
    for (Elem x = 1; x < q; ++x)
        connection[x] = static_cast<int>(f.log(x) % e) + 1;
    return translation_or_throw(connection, static_cast<int>(e),
                                [&](std::size_t a, std::size_t b) { return f.sub(static_cast<Elem>(a), static_cast<Elem>(b)); });
}

Scheme build_ag28_scheme()
{
    const Field f = Field::of_order(8);
    std::vector<int> connection(64, 0);
    for (std::size_t g = 1; g < 64; ++g) {
        const Elem dx = static_cast<Elem>(g % 8), dy = static_cast<Elem>(g / 8);
        connection[g] = dx == 0 ? 1 : 2 + static_cast<int>(f.mul(dy, f.inv(dx)));
    }
    return translation_or_throw(connection, 9, [&](std::size_t a, std::size_t b) {
        return f.sub(static_cast<Elem>(a % 8), static_cast<Elem>(b % 8)) +
               8 * static_cast<std::size_t>(f.sub(static_cast<Elem>(a / 8), static_cast<Elem>(b / 8)));
    });
}

ClassPartition ag28_polhill_fusion() { return ClassPartition(9, {{1, 2, 3}, {4, 5}, {6, 7}, {8, 9}}); }

Scheme build_polhill_product()
{
    const Field f16 = Field::of_order(16);
    const Field f8 = Field::of_order(8);
    const ColorMatrix b = fuse(build_ag28_scheme(), ag28_polhill_fusion());
    const Scheme c = build_cyclotomic(16, 3);
    // Row: class of the GF(16) part; column: class of the AG(2,8) part.
    static constexpr int table[4][5] = {
        {0, 1, 2, 3, 4},
        {2, 2, 1, 4, 3},
        {3, 3, 4, 1, 2},
        {4, 4, 3, 2, 1},
    };
    std::vector<int> connection(1024);
    for (std::size_t g = 0; g < 1024; ++g)
        connection[g] = table[c.colors()(0, g / 64)][b(0, g % 64)];
    return translation_or_throw(connection, 4, [&](std::size_t x, std::size_t y) {
        const std::size_t hi = f16.sub(static_cast<Elem>(x / 64), static_cast<Elem>(y / 64));
        const std::size_t lo = f8.sub(static_cast<Elem>(x % 8), static_cast<Elem>(y % 8)) +
                               8 * static_cast<std::size_t>(f8.sub(static_cast<Elem>(x % 64 / 8), static_cast<Elem>(y % 64 / 8)));
        return hi * 64 + lo;
    });
}

Scheme build_folded_halved_cube()
{
    std::vector<int> connection(1024, 0);
    for (unsigned g = 1; g < 1024; ++g) {
        const unsigned word = g | ((std::popcount(g) & 1U) << 10);
        const int wt = std::popcount(word);
        connection[g] = std::min(wt, 12 - wt) / 2;
    }
    return translation_or_throw(connection, 3, [](std::size_t a, std::size_t b) { return a ^ b; });
}

Scheme build_complete(std::size_t v)
{
    return expect_scheme(scheme_verify(ColorMatrix::from_function(v, 1, [](std::size_t, std::size_t) { return 1; })));
}

Scheme build_wreath(const Scheme& outer, const Scheme& inner)
{
    const std::size_t n = inner.order();
    const int d_out = outer.classes();
    const int d = d_out + inner.classes();
    if (d > 255)
        throw ConstructionError("wreath product would have more than 255 classes");
    const auto& oc = outer.colors();
    const auto& ic = inner.colors();
    return expect_scheme(scheme_verify(ColorMatrix::from_function(outer.order() * n, d, [&](std::size_t x, std::size_t y) {
        const std::size_t a = x / n, b = y / n;
        return a != b ? oc(a, b) : d_out + ic(x % n, y % n);
    })));
}

Scheme build_wreath(std::size_t m, const Scheme& inner)
{
    if (m == 0)
        throw ConstructionError("wreath product needs at least one copy");
    if (m == 1)
        return inner;
    return build_wreath(build_complete(m), inner);
}

Scheme build_knn_minus_matching(std::size_t n)
{
    if (n < 2)
        throw ConstructionError("K_{n,n} minus a matching needs n >= 2");
    return expect_scheme(scheme_verify(ColorMatrix::from_function(2 * n, 3, [n](std::size_t x, std::size_t y) {
        if ((x < n) == (y < n))
            return 2;
        return x % n == y % n ? 3 : 1;
    })));
}

Scheme build_lattice_scheme(std::size_t n)
{
    if (n < 2)
        throw ConstructionError("lattice scheme needs n >= 2");
    return build_hamming(2, static_cast<int>(n));
}

Scheme build_latin_square_scheme(const std::vector<LatinSquare>& squares)
{
    if (squares.empty())
        throw ConstructionError("need at least one Latin square");
    const std::size_t n = squares.front().size();
    for (std::size_t k = 0; k < squares.size(); ++k) {
        const auto& L = squares[k];
        if (L.size() != n)
            throw ConstructionError("square " + std::to_string(k + 1) + " has the wrong order");
        for (std::size_t r = 0; r < n; ++r) {
            if (L[r].size() != n)
                throw ConstructionError("square " + std::to_string(k + 1) + " is not square");
            std::vector<bool> in_row(n, false), in_col(n, false);
            for (std::size_t c = 0; c < n; ++c) {
                const int a = L[r][c], b = L[c][r];
                if (a < 0 || static_cast<std::size_t>(a) >= n || in_row[static_cast<std::size_t>(a)] || b < 0 ||
                    static_cast<std::size_t>(b) >= n || in_col[static_cast<std::size_t>(b)])
                    throw ConstructionError("square " + std::to_string(k + 1) + " is not a Latin square");
                in_row[static_cast<std::size_t>(a)] = in_col[static_cast<std::size_t>(b)] = true;
            }
        }
    }
    for (std::size_t a = 0; a < squares.size(); ++a)
        for (std::size_t b = a + 1; b < squares.size(); ++b) {
            std::set<std::pair<int, int>> pairs;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    pairs.insert({squares[a][r][c], squares[b][r][c]});
            if (pairs.size() != n * n)
                throw ConstructionError("squares " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                        " are not orthogonal");
        }
    const int named = 2 + static_cast<int>(squares.size());
    const bool remainder = squares.size() + 1 < n;
    if (named + (remainder ? 1 : 0) > 255)
        throw ConstructionError("too many classes");
    return expect_scheme(scheme_verify(ColorMatrix::from_function(n * n, named + (remainder ? 1 : 0), [&](std::size_t x, std::size_t y) {
        const std::size_t r1 = x / n, c1 = x % n, r2 = y / n, c2 = y % n;
        if (r1 == r2)
            return 1;
        if (c1 == c2)
            return 2;
        for (std::size_t k = 0; k < squares.size(); ++k)
            if (squares[k][r1][c1] == squares[k][r2][c2])
                return 3 + static_cast<int>(k);
        return named + 1;
    })));
}

std::vector<LatinSquare> field_mols(unsigned q, unsigned count)
{
    const Field f = Field::of_order(q);
    if (count < 1 || count >= q)
        throw ConstructionError("between 1 and q-1 squares");
    std::vector<LatinSquare> out;
    for (Elem a = 1; a <= count; ++a) {
        LatinSquare L(q, std::vector<int>(q));
        for (Elem r = 0; r < q; ++r)
            for (Elem c = 0; c < q; ++c)
                L[r][c] = static_cast<int>(f.add(f.mul(a, r), c));
        out.push_back(std::move(L));
    }
    return out;
}

} // namespace ascheme
