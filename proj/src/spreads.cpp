#include "ascheme/spreads.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace ascheme {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t v) { return Bits((v + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
void clear_bit(Bits& b, std::size_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

std::size_t count(const Bits& b)
{
    std::size_t c = 0;
    for (auto w : b)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

/// Least set bit at index >= from, or npos.
std::size_t next_bit(const Bits& b, std::size_t from)
{
    std::size_t w = from >> 6;
    if (w >= b.size())
        return SIZE_MAX;
    std::uint64_t cur = b[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (cur)
            return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
        if (++w == b.size())
            return SIZE_MAX;
        cur = b[w];
    }
}

Bits and_row(const Bits& a, std::span<const std::uint64_t> r)
{
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] & r[i];
    return out;
}

} // namespace

std::vector<std::vector<std::size_t>> Spread::cliques() const
{
    std::vector<std::vector<std::size_t>> out(clique_count());
    for (std::size_t x = 0; x < assignment.size(); ++x)
        out[static_cast<std::size_t>(assignment[x])].push_back(x);
    return out;
}

Graph Spread::graph() const
{
    Graph g(order());
    for (const auto& c : cliques())
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                g.add_edge(c[i], c[j]);
    return g;
}

Spread Spread::from_cliques(std::size_t v, const std::vector<std::vector<std::size_t>>& cliques)
{
    if (cliques.empty())
        throw SpreadError("spread has no cliques");
    const std::size_t size = cliques.front().size();
    if (size == 0 || size * cliques.size() != v)
        throw SpreadError("cliques of a spread must have equal size and cover every vertex");
    auto sorted = cliques;
    for (auto& c : sorted)
        std::sort(c.begin(), c.end());
    std::sort(sorted.begin(), sorted.end());
    Spread s{size, std::vector<int>(v, -1)};
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].size() != size)
            throw SpreadError("clique " + std::to_string(i) + " has " + std::to_string(sorted[i].size()) +
                              " vertices, expected " + std::to_string(size));
        for (auto x : sorted[i]) {
            if (x >= v)
                throw SpreadError("vertex " + std::to_string(x) + " out of range");
            if (s.assignment[x] != -1)
                throw SpreadError("vertex " + std::to_string(x) + " lies in two cliques");
            s.assignment[x] = static_cast<int>(i);
        }
    }
    return s;
}

std::optional<Spread> is_square_spread(const Graph& g)
{
    const auto n = exact_sqrt(static_cast<long long>(g.order()));
    if (!n)
        throw SpreadError("vertex count " + std::to_string(g.order()) + " is not a square");
    if (g.regular_degree() != static_cast<std::size_t>(*n - 1))
        return std::nullopt;
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (seen[x])
            continue;
        auto c = g.neighbors(x);
        c.push_back(x);
        std::sort(c.begin(), c.end());
        for (auto a : c) {
            seen[a] = true;
            for (auto b : c)
                if (a != b && !g.adjacent(a, b))
                    return std::nullopt;
        }
        cliques.push_back(std::move(c));
    }
    return Spread::from_cliques(g.order(), cliques);
}

const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found:
        return "WITNESS";
    case SearchStatus::NoneFound:
        return "NONE";
    case SearchStatus::Exhausted:
        return "EXHAUSTED";
    }
    return "?";
}

std::size_t default_spread_clique_size(const Graph& g)
{
    const auto v = static_cast<long long>(g.order());
    if (auto r = srg_params(g); const auto* p = std::get_if<SrgParams>(&r)) {
        if (p->s && *p->s < 0 && p->k % -*p->s == 0) {
            const long long bound = 1 + p->k / -*p->s;
            if (bound > 1 && v % bound == 0)
                return static_cast<std::size_t>(bound);
        }
    }
    if (auto n = exact_sqrt(v))
        return static_cast<std::size_t>(*n);
    throw SpreadError("no clique size given and vertex count " + std::to_string(v) + " is not a square");
}

namespace {

class SpreadSearcher {
public:
    SpreadSearcher(const Graph& g, std::size_t size, long long budget)
        : g_(g), size_(size), budget_(budget), uncovered_(make_bits(g.order()))
    {
        for (std::size_t x = 0; x < g.order(); ++x)
            set_bit(uncovered_, x);
    }

    SpreadSearch run()
    {
        SpreadSearch out;
        const bool found = cover();
        out.nodes = nodes_;
        if (found) {
            out.status = SearchStatus::Found;
            std::vector<std::vector<std::size_t>> cl(cliques_.begin(), cliques_.end());
            out.spread = Spread::from_cliques(g_.order(), cl);
        } else {
            out.status = exhausted_ ? SearchStatus::Exhausted : SearchStatus::NoneFound;
        }
        return out;
    }

private:
    bool cover()
    {
        const std::size_t x = next_bit(uncovered_, 0);
        if (x == SIZE_MAX)
            return true;
        clique_ = {x};
        clear_bit(uncovered_, x);
        const bool ok = extend(and_row(uncovered_, g_.row(x)), 0);
        set_bit(uncovered_, x);
        return ok;
    }

    bool extend(const Bits& cand, std::size_t from)
    {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (clique_.size() == size_) {
            // Every clique vertex is already marked covered.
            cliques_.push_back(clique_);
            const auto saved = clique_;
            const bool ok = cover();
            clique_ = saved;
            if (!ok)
                cliques_.pop_back();
            return ok;
        }
        if (count(cand) + clique_.size() < size_)
            return false;
        for (std::size_t y = next_bit(cand, from); y != SIZE_MAX; y = next_bit(cand, y + 1)) {
            clique_.push_back(y);
            clear_bit(uncovered_, y);
            Bits next = and_row(cand, g_.row(y));
            const bool ok = extend(next, y + 1);
            if (ok)
                return true;
            // Restore the vertices of the partial clique (cover() restores the rest).
            set_bit(uncovered_, y);
            clique_.pop_back();
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t size_;
    long long budget_;
    long long nodes_ = 0;
    bool exhausted_ = false;
    Bits uncovered_;
    std::vector<std::size_t> clique_;
    std::vector<std::vector<std::size_t>> cliques_;
};

} // namespace

SpreadSearch find_spread(const Graph& g, std::optional<std::size_t> clique_size, long long budget)
{
    const std::size_t size = clique_size ? *clique_size : default_spread_clique_size(g);
    if (size == 0 || g.order() % size != 0)
        throw SpreadError("clique size " + std::to_string(size) + " does not divide " + std::to_string(g.order()));
    if (size == 1) {
        std::vector<std::vector<std::size_t>> singles;
        for (std::size_t x = 0; x < g.order(); ++x)
            singles.push_back({x});
        return {SearchStatus::Found, Spread::from_cliques(g.order(), singles), 0};
    }
    return SpreadSearcher(g, size, budget).run();
}

SpreadRemoval remove_spread(const Graph& g, const Spread& s)
{
    if (s.order() != g.order())
        throw SpreadError("spread and graph have different vertex counts");
    const Graph sg = s.graph();
    if (!g.contains(sg)) {
        for (const auto& c : s.cliques())
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    if (!g.adjacent(c[i], c[j]))
                        throw SpreadError("spread edge (" + std::to_string(c[i]) + "," + std::to_string(c[j]) +
                                          ") is not an edge of the graph");
    }
    SpreadRemoval out;
    out.residual = g.minus(sg);
    if (auto r = srg_params(g); const auto* p = std::get_if<SrgParams>(&r))
        out.host = *p;
    auto rr = srg_params(out.residual);
    if (const auto* p = std::get_if<SrgParams>(&rr)) {
        out.params = *p;
        out.type = classify_type(*p);
        out.note = "residual " + p->str() + " " + out.type->str();
    } else {
        out.note = "residual is not strongly regular (" + std::get<NotSrg>(rr).describe() + ")";
        try {
            out.drg = drg_array(out.residual);
            if (out.drg)
                out.note += "; distance-regular with intersection array " + out.drg->str();
            else
                out.note += "; not distance-regular";
        } catch (const DisconnectedGraph&) {
            out.note += "; disconnected";
        }
    }
    const bool host_ls = out.host && is_ls_inclusive(*out.host);
    if (host_ls && s.is_square() && out.residual.edge_count() > 0 && !(out.params && is_ls_inclusive(*out.params))) {
        out.falsified = true;
        out.note = "theorem falsified: Latin square graph minus a square spread is not of Latin square type; " + out.note;
    }
    return out;
}

namespace {

class CliqueSearcher {
public:
    CliqueSearcher(const Graph& g, std::size_t size, long long budget) : g_(g), size_(size), budget_(budget) {}

    CliqueSearch run()
    {
        CliqueSearch out;
        Bits all = make_bits(g_.order());
        for (std::size_t x = 0; x < g_.order(); ++x)
            set_bit(all, x);
        if (expand(all)) {
            out.status = SearchStatus::Found;
            out.clique = current_;
            std::sort(out.clique.begin(), out.clique.end());
        } else {
            out.status = exhausted_ ? SearchStatus::Exhausted : SearchStatus::NoneFound;
        }
        out.nodes = nodes_;
        return out;
    }

private:
    // Greedy colouring of the candidates in vertex order; returns vertices
    // sorted by colour together with their colour numbers.
    void colour(const Bits& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) const
    {
        Bits left = cand;
        std::size_t c = 0;
        while (count(left)) {
            ++c;
            Bits avail = left;
            for (std::size_t y = next_bit(avail, 0); y != SIZE_MAX; y = next_bit(avail, y + 1)) {
                order.push_back(y);
                colours.push_back(c);
                clear_bit(left, y);
                const auto r = g_.row(y);
                for (std::size_t w = 0; w < avail.size(); ++w)
                    avail[w] &= ~r[w];
            }
        }
    }

    bool expand(Bits cand)
    {
        if (current_.size() == size_)
            return true;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        std::vector<std::size_t> order, colours;
        colour(cand, order, colours);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + colours[i] < size_)
                return false;
            const std::size_t y = order[i];
            current_.push_back(y);
            if (expand(and_row(cand, g_.row(y))))
                return true;
            current_.pop_back();
            if (exhausted_)
                return false;
            clear_bit(cand, y);
        }
        return false;
    }

    const Graph& g_;
    std::size_t size_;
    long long budget_;
    long long nodes_ = 0;
    bool exhausted_ = false;
    std::vector<std::size_t> current_;
};

} // namespace

CliqueSearch find_clique(const Graph& g, std::size_t size, long long budget)
{
    if (size == 0)
        return {SearchStatus::Found, {}, 0};
    if (size > g.order())
        return {SearchStatus::NoneFound, {}, 0};
    return CliqueSearcher(g, size, budget).run();
}

std::vector<Spread> bp_spread_family(const Field& f, const Graph& z3, const std::vector<std::size_t>& clique)
{
    const std::size_t q = f.order();
    const std::size_t q3 = q * q * q;
    if (z3.order() != q3 * q3)
        throw SpreadError("graph does not have q^6 vertices");
    if (clique.size() != q3)
        throw SpreadError("clique has " + std::to_string(clique.size()) + " vertices, expected " + std::to_string(q3));

    std::vector<std::optional<Vec3>> phi(q3);
    for (auto c : clique) {
        if (c >= z3.order())
            throw SpreadError("clique vertex " + std::to_string(c) + " out of range");
        const std::size_t w = c / q3;
        if (phi[w])
            throw SpreadError("clique has repeated first coordinate " + std::to_string(w));
        phi[w] = decode3(f, static_cast<unsigned>(c % q3));
    }

    std::vector<Spread> family;
    {
        std::vector<std::vector<std::size_t>> s0(q3);
        for (std::size_t w = 0; w < q3; ++w)
            for (std::size_t w2 = 0; w2 < q3; ++w2)
                s0[w].push_back(w * q3 + w2);
        family.push_back(Spread::from_cliques(z3.order(), s0));
    }
    for (Elem alpha = 1; alpha < q; ++alpha) {
        std::vector<std::vector<std::size_t>> sa(q3);
        for (std::size_t y = 0; y < q3; ++y) {
            const Vec3 yv = decode3(f, static_cast<unsigned>(y));
            for (std::size_t w = 0; w < q3; ++w)
                sa[y].push_back(bp_vertex(f, decode3(f, static_cast<unsigned>(w)), vadd(f, vscale(f, alpha, *phi[w]), yv)));
        }
        family.push_back(Spread::from_cliques(z3.order(), sa));
    }

    for (std::size_t i = 0; i < family.size(); ++i)
        if (!z3.contains(family[i].graph()))
            throw SpreadError("spread " + std::to_string(i) + " is not contained in the distance-3 graph");
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            std::vector<int> meet(q3 * q3, 0);
            for (std::size_t x = 0; x < z3.order(); ++x)
                ++meet[static_cast<std::size_t>(family[a].assignment[x]) * q3 +
                       static_cast<std::size_t>(family[b].assignment[x])];
            if (std::any_of(meet.begin(), meet.end(), [](int m) { return m != 1; }))
                throw SpreadError("cliques of spreads " + std::to_string(a) + " and " + std::to_string(b) +
                                  " do not meet in exactly one vertex");
        }
    return family;
}

} // namespace ascheme
