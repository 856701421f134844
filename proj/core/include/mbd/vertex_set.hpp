#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mbd {

// Set of vertex ids 0..63 backed by one machine word. Graphs wider than
// kMaxVertices are rejected at construction time, so all set algebra here
// is exact.
class VertexSet {
public:
    static constexpr int kMaxVertices = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) add(v);
    }

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    // {0, 1, ..., n-1}
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= kMaxVertices ? ~std::uint64_t{0}
                                           : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }

    void add(int v) { bits_ |= std::uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    // Smallest member; only valid on nonempty sets.
    int first() const { return std::countr_zero(bits_); }

    // Order of equal-size sets that matches comparing their sorted member
    // lists: the set owning the smallest non-shared vertex comes first.
    bool lex_before(VertexSet o) const {
        std::uint64_t d = bits_ ^ o.bits_;
        if (d == 0) return false;
        return contains(std::countr_zero(d));
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool fst = true;
        for (std::uint64_t b = bits_; b; b &= b - 1) {
            if (!fst) s += ',';
            s += std::to_string(std::countr_zero(b));
            fst = false;
        }
        s += '}';
        return s;
    }

    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

// Calls fn(VertexSet) for every size-k subset of pool, lexicographically
// smallest set first. Stops early (and returns true) as soon as fn returns
// true. k == 0 yields the empty set once.
template <typename Fn>
bool for_each_subset_of_size(VertexSet pool, int k, Fn&& fn) {
    std::vector<int> elems = pool.to_vector();
    const int m = static_cast<int>(elems.size());
    if (k > m) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s.add(elems[static_cast<std::size_t>(i)]);
        if (fn(s)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace mbd
