#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace pathcolor {

using Vertex = int;

/// Fixed-universe bitset over the vertex ids 0..universe-1 of a host graph.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(int universe);
    VertexSubset(int universe, std::initializer_list<Vertex> members);
    VertexSubset(int universe, const std::vector<Vertex>& members);

    static VertexSubset full(int universe);
    static VertexSubset from_mask(int universe, std::uint64_t mask);

    int universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept {
        return v >= 0 && v < universe_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
    }
    void insert(Vertex v);
    void erase(Vertex v);

    int count() const noexcept;
    bool empty() const noexcept;
    /// Smallest member, or -1 when empty.
    Vertex first() const noexcept;
    /// Smallest member greater than v, or -1.
    Vertex next(Vertex v) const noexcept;

    std::vector<Vertex> members() const;
    /// Low 64 bits; only meaningful when universe() <= 64.
    std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

    bool is_subset_of(const VertexSubset& other) const;
    bool intersects(const VertexSubset& other) const;

    VertexSubset& operator|=(const VertexSubset& other);
    VertexSubset& operator&=(const VertexSubset& other);
    VertexSubset& operator-=(const VertexSubset& other);

    friend VertexSubset operator|(VertexSubset a, const VertexSubset& b) { return a |= b; }
    friend VertexSubset operator&(VertexSubset a, const VertexSubset& b) { return a &= b; }
    friend VertexSubset operator-(VertexSubset a, const VertexSubset& b) { return a -= b; }
    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const noexcept;

private:
    void check_universe(const VertexSubset& other) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace pathcolor

template <>
struct std::hash<pathcolor::VertexSubset> {
    std::size_t operator()(const pathcolor::VertexSubset& s) const noexcept { return s.hash(); }
};
