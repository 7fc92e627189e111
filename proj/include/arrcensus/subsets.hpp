#pragma once

// Index sets. Hyperplane labels are 1-based throughout the public API.

#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace arrcensus {

/// A subset of {1..n} for n <= 32, stored as a bitmask (element i <-> bit i-1).
class LineSet {
public:
    constexpr LineSet() = default;
    constexpr explicit LineSet(std::uint32_t bits) : bits_(bits) {}

    static LineSet of(std::initializer_list<int> elements);
    static LineSet of(const std::vector<int>& elements);
    static LineSet range(int n) { return LineSet(n >= 32 ? ~0u : ((1u << n) - 1u)); }

    constexpr std::uint32_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int element) const { return (bits_ >> (element - 1)) & 1u; }
    bool is_subset_of(LineSet other) const { return (bits_ & ~other.bits_) == 0; }

    LineSet with(int element) const { return LineSet(bits_ | (1u << (element - 1))); }
    LineSet without(int element) const { return LineSet(bits_ & ~(1u << (element - 1))); }

    /// Sorted 1-based elements.
    std::vector<int> elements() const;
    /// Compact label such as "124" (elements < 10) or "1,2,14".
    std::string label() const;

    friend LineSet operator|(LineSet a, LineSet b) { return LineSet(a.bits_ | b.bits_); }
    friend LineSet operator&(LineSet a, LineSet b) { return LineSet(a.bits_ & b.bits_); }
    friend bool operator==(LineSet a, LineSet b) = default;
    /// Lexicographic order on the sorted element lists.
    friend bool operator<(LineSet a, LineSet b);

private:
    std::uint32_t bits_ = 0;
};

/// All k-subsets of {1..n} in lexicographic order.
std::vector<LineSet> combinations(int n, int k);

std::uint64_t binomial(int n, int k);

/// The ordered universe of k-subsets of {1..n}, with index lookup.
class SubsetUniverse {
public:
    SubsetUniverse(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return members_.size(); }
    LineSet operator[](std::size_t index) const { return members_[index]; }
    const std::vector<LineSet>& members() const { return members_; }

    /// -1 when `s` is not a k-subset of {1..n}.
    int index_of(LineSet s) const;

private:
    int n_;
    int k_;
    std::vector<LineSet> members_;
    std::unordered_map<std::uint32_t, int> index_;
};

/// Shared, immutable universe for (n, k); cached per thread-safe static map.
std::shared_ptr<const SubsetUniverse> subset_universe(int n, int k);

/// Fixed-width dynamic bitset over hyperplane indices 0..size-1.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t universe_size() const { return size_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool is_subset_of(const IndexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    IndexSet& operator|=(const IndexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : words_) h = (h ^ w) * 1099511628211ull;
        return h;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    /// Orders by the sorted index list (lexicographic), matching member order.
    friend bool operator<(const IndexSet& a, const IndexSet& b);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace arrcensus
