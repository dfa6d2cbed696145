#ifndef MCS_VERTEX_SUBSET_HPP
#define MCS_VERTEX_SUBSET_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mcs {

using Vertex = std::size_t;
using Color = int;

/// A set of vertex ids drawn from a fixed universe 0..universe-1, stored as a bitset.
/// Iteration is always in ascending id order.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSubset(std::size_t universe, std::initializer_list<Vertex> ids)
        : VertexSubset(universe) {
        for (Vertex v : ids) insert(v);
    }

    static VertexSubset from_ids(std::size_t universe, std::span<const Vertex> ids) {
        VertexSubset s(universe);
        for (Vertex v : ids) s.insert(v);
        return s;
    }

    static VertexSubset from_words(std::size_t universe, std::span<const std::uint64_t> words) {
        VertexSubset s(universe);
        std::copy_n(words.begin(), std::min(words.size(), s.words_.size()), s.words_.begin());
        return s;
    }

    static VertexSubset full(std::size_t universe) {
        VertexSubset s(universe);
        for (Vertex v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    std::size_t universe() const { return universe_; }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool contains(Vertex v) const {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }

    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                auto tz = static_cast<std::size_t>(std::countr_zero(bits));
                f(static_cast<Vertex>(w * 64 + tz));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    bool intersects(const VertexSubset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSubset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSubset& operator|=(const VertexSubset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSubset& operator&=(const VertexSubset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSubset& operator-=(const VertexSubset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSubset operator|(VertexSubset a, const VertexSubset& b) { return a |= b; }
    friend VertexSubset operator&(VertexSubset a, const VertexSubset& b) { return a &= b; }
    friend VertexSubset operator-(VertexSubset a, const VertexSubset& b) { return a -= b; }

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

    /// Complement within the universe.
    VertexSubset complement() const {
        VertexSubset out(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        if (auto tail = universe_ & 63; tail && !out.words_.empty())
            out.words_.back() &= (std::uint64_t{1} << tail) - 1;
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    /// Lexicographic comparison of the ascending member lists.
    friend bool lexicographically_less(const VertexSubset& a, const VertexSubset& b) {
        auto ma = a.members();
        auto mb = b.members();
        return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mcs

#endif
