#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kdom {

using Vertex = std::uint32_t;

/// Fixed-universe bitset over the vertices 0..n-1.
///
/// The universe size is set at construction and never changes; binary
/// operations require both operands to share it. Bits above the universe in
/// the last word are kept clear so that count() and equality are exact.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept {
        assert(v < universe_);
        return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void insert(Vertex v) noexcept {
        assert(v < universe_);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void erase(Vertex v) noexcept {
        assert(v < universe_);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }
    bool is_full() const noexcept { return count() == universe_; }

    /// |this ∩ other| without materializing the intersection.
    std::size_t intersection_count(const VertexSet& other) const noexcept {
        assert(universe_ == other.universe_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        }
        return c;
    }
    /// |other \ this|, i.e. how many members of `other` this set lacks.
    std::size_t missing_count(const VertexSet& other) const noexcept {
        assert(universe_ == other.universe_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            c += static_cast<std::size_t>(std::popcount(other.words_[i] & ~words_[i]));
        }
        return c;
    }
    bool is_subset_of(const VertexSet& other) const noexcept {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& other) noexcept {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& other) noexcept {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) noexcept {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }
    VertexSet complement() const {
        VertexSet s = *this;
        for (Word& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Smallest member, or universe() when empty.
    Vertex first() const noexcept { return next(0); }
    /// Smallest member >= from, or universe() when there is none.
    Vertex next(Vertex from) const noexcept {
        std::size_t wi = from / kWordBits;
        if (wi >= words_.size()) return static_cast<Vertex>(universe_);
        Word w = words_[wi] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w != 0) {
                return static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            }
            if (++wi == words_.size()) return static_cast<Vertex>(universe_);
            w = words_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w != 0) {
                f(static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    /// Members in increasing order.
    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <class Range>
    static VertexSet from_range(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<Vertex>(v));
        return s;
    }

private:
    void trim() noexcept {
        if (universe_ % kWordBits != 0 && !words_.empty()) {
            words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
        }
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

}  // namespace kdom
