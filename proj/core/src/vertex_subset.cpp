#include "pathcolor/vertex_subset.hpp"

#include <bit>

#include "pathcolor/errors.hpp"

namespace pathcolor {

namespace {

std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

}  // namespace

VertexSubset::VertexSubset(int universe) : universe_(universe) {
    if (universe < 0) throw GraphError("negative subset universe");
    words_.assign(word_count(universe), 0);
}

VertexSubset::VertexSubset(int universe, std::initializer_list<Vertex> members) : VertexSubset(universe) {
    for (Vertex v : members) insert(v);
}

VertexSubset::VertexSubset(int universe, const std::vector<Vertex>& members) : VertexSubset(universe) {
    for (Vertex v : members) insert(v);
}

VertexSubset VertexSubset::full(int universe) {
    VertexSubset s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSubset VertexSubset::from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw GraphError("from_mask requires universe <= 64");
    VertexSubset s(universe);
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

void VertexSubset::insert(Vertex v) {
    if (v < 0 || v >= universe_) throw GraphError("vertex " + std::to_string(v) + " outside subset universe");
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSubset::erase(Vertex v) {
    if (v < 0 || v >= universe_) throw GraphError("vertex " + std::to_string(v) + " outside subset universe");
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSubset::count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSubset::empty() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

Vertex VertexSubset::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return -1;
}

Vertex VertexSubset::next(Vertex v) const noexcept {
    const Vertex start = v + 1;
    if (start >= universe_) return -1;
    std::size_t w = static_cast<std::size_t>(start) >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (bits) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        if (++w >= words_.size()) return -1;
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSubset::members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

void VertexSubset::check_universe(const VertexSubset& other) const {
    if (universe_ != other.universe_) throw GraphError("vertex subsets over different universes");
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSubset::intersects(const VertexSubset& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

VertexSubset& VertexSubset::operator|=(const VertexSubset& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSubset& VertexSubset::operator&=(const VertexSubset& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSubset& VertexSubset::operator-=(const VertexSubset& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::size_t VertexSubset::hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace pathcolor
