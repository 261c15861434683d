#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ascheme {

/// Simple undirected graph on vertices 0..v-1, adjacency stored as packed
/// 64-bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t v);

    std::size_t order() const { return v_; }
    std::size_t words_per_row() const { return words_; }

    bool adjacent(std::size_t x, std::size_t y) const
    {
        return (bits_[x * words_ + (y >> 6)] >> (y & 63)) & 1U;
    }
    void add_edge(std::size_t x, std::size_t y);
    void remove_edge(std::size_t x, std::size_t y);

    std::span<const std::uint64_t> row(std::size_t x) const
    {
        return {bits_.data() + x * words_, words_};
    }

    std::size_t degree(std::size_t x) const;
    std::size_t edge_count() const;
    std::vector<std::size_t> neighbors(std::size_t x) const;
    /// Number of common neighbours of x and y.
    std::size_t common(std::size_t x, std::size_t y) const;
    /// Degree if every vertex has the same degree.
    std::optional<std::size_t> regular_degree() const;

    Graph complement() const;
    /// Edge set union / difference; both graphs must have the same order.
    Graph united(const Graph& other) const;
    Graph minus(const Graph& other) const;
    bool contains(const Graph& other) const;
    bool disjoint_from(const Graph& other) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t v_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

} // namespace ascheme
