#ifndef DTW_CORE_HPP
#define DTW_CORE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtw {

/// Thrown when an operation's preconditions are violated or input data is malformed.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a search exceeds its node/position budget. A budget failure is
/// not a verdict; callers must distinguish it from "proven absent/impossible".
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

/// Subset of the vertices of one digraph, held as a 64-bit mask over the
/// dense vertex indices. All set algebra is exact; graphs are capped at
/// 64 vertices at construction.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    /// Smallest contained index; -1 on the empty set.
    constexpr int min() const { return bits_ ? std::countr_zero(bits_) : -1; }

    constexpr VertexSet operator|(const VertexSet& o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(const VertexSet& o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(const VertexSet& o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(const VertexSet& o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    /// Iterates ascending vertex indices.
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits_}; }
    iterator end() const { return {0}; }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted index sequences (so {0,5} < {1,2}).
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x || y) {
        if (x == y) return false;
        int ax = x ? std::countr_zero(x) : 64;
        int ay = y ? std::countr_zero(y) : 64;
        if (ax != ay) return ax < ay;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

}  // namespace dtw

#endif
