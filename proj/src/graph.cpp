#include "ascheme/graph.hpp"

#include <optional>

namespace ascheme {

Graph::Graph(std::size_t v) : v_(v), words_((v + 63) / 64), bits_(v * ((v + 63) / 64), 0) {}

void Graph::add_edge(std::size_t x, std::size_t y)
{
    if (x == y)
        throw std::invalid_argument("loops are not allowed");
    bits_[x * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
    bits_[y * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
}

void Graph::remove_edge(std::size_t x, std::size_t y)
{
    bits_[x * words_ + (y >> 6)] &= ~(std::uint64_t{1} << (y & 63));
    bits_[y * words_ + (x >> 6)] &= ~(std::uint64_t{1} << (x & 63));
}

std::size_t Graph::degree(std::size_t x) const
{
    std::size_t d = 0;
    for (auto w : row(x))
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (auto w : bits_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t x) const
{
    std::vector<std::size_t> out;
    auto r = row(x);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t Graph::common(std::size_t x, std::size_t y) const
{
    return popcount_and(row(x), row(y));
}

std::optional<std::size_t> Graph::regular_degree() const
{
    if (v_ == 0)
        return std::nullopt;
    const std::size_t d = degree(0);
    for (std::size_t x = 1; x < v_; ++x)
        if (degree(x) != d)
            return std::nullopt;
    return d;
}

Graph Graph::complement() const
{
    Graph g(v_);
    for (std::size_t x = 0; x < v_; ++x)
        for (std::size_t y = x + 1; y < v_; ++y)
            if (!adjacent(x, y))
                g.add_edge(x, y);
    return g;
}

Graph Graph::united(const Graph& other) const
{
    if (other.v_ != v_)
        throw std::invalid_argument("graphs have different orders");
    Graph g = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        g.bits_[i] |= other.bits_[i];
    return g;
}

Graph Graph::minus(const Graph& other) const
{
    if (other.v_ != v_)
        throw std::invalid_argument("graphs have different orders");
    Graph g = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        g.bits_[i] &= ~other.bits_[i];
    return g;
}

bool Graph::contains(const Graph& other) const
{
    if (other.v_ != v_)
        return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (other.bits_[i] & ~bits_[i])
            return false;
    return true;
}

bool Graph::disjoint_from(const Graph& other) const
{
    if (other.v_ != v_)
        return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (other.bits_[i] & bits_[i])
            return false;
    return true;
}

} // namespace ascheme
