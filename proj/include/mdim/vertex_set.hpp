#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdim {

// Fixed-width bitset over the vertex range 0..n-1. Used both for candidate
// sensor sets and for distinguisher sets D(x,y).
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}
    VertexSet(std::size_t n, std::initializer_list<std::size_t> members) : VertexSet(n) {
        for (auto v : members) insert(v);
    }
    static VertexSet full(std::size_t n) {
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v) s.insert(v);
        return s;
    }
    static VertexSet from_list(std::size_t n, const std::vector<std::size_t>& members) {
        VertexSet s(n);
        for (auto v : members) s.insert(v);
        return s;
    }

    std::size_t universe() const { return n_; }

    bool contains(std::size_t v) const {
        return v < n_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
    }
    void insert(std::size_t v) {
        check(v);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void erase(std::size_t v) {
        check(v);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }

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

    // |this ∩ other|; both sets must share a universe.
    std::size_t intersection_size(const VertexSet& other) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }
    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Members in increasing order.
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(i * kWordBits + bit);
                w &= w - 1;
            }
        }
    }

    const std::vector<Word>& words() const { return words_; }

    // "{0,2,5}"
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](std::size_t v) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

private:
    void check(std::size_t v) const {
        if (v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(n_ == 0 ? 0 : n_ - 1));
    }

    std::size_t n_ = 0;
    std::vector<Word> words_;
};

} // namespace mdim
