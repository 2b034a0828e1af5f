#ifndef FLOC_VERTEX_SET_HPP
#define FLOC_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace floc {

/// Subset of the vertices {0, ..., n-1} of a graph with n <= 64, stored as a
/// bitmask.  Vertex i corresponds to bit i.  Cheap to copy; all operations
/// are value-returning.
class vertex_set {
public:
    constexpr vertex_set() = default;
    constexpr explicit vertex_set(std::uint64_t bits) : bits_(bits) {}

    static constexpr vertex_set of(std::initializer_list<int> vs) {
        vertex_set s;
        for (int v : vs) s.bits_ |= std::uint64_t{1} << v;
        return s;
    }

    /// All vertices of an n-vertex graph.
    static constexpr vertex_set full(int n) {
        return vertex_set(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr bool subset_of(vertex_set o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr vertex_set with(int v) const { return vertex_set(bits_ | (std::uint64_t{1} << v)); }
    constexpr vertex_set without(int v) const { return vertex_set(bits_ & ~(std::uint64_t{1} << v)); }

    /// Lowest vertex id in the set; undefined on the empty set.
    constexpr int front() const { return std::countr_zero(bits_); }

    friend constexpr vertex_set operator&(vertex_set a, vertex_set b) { return vertex_set(a.bits_ & b.bits_); }
    friend constexpr vertex_set operator|(vertex_set a, vertex_set b) { return vertex_set(a.bits_ | b.bits_); }
    friend constexpr vertex_set operator^(vertex_set a, vertex_set b) { return vertex_set(a.bits_ ^ b.bits_); }
    friend constexpr vertex_set operator-(vertex_set a, vertex_set b) { return vertex_set(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(vertex_set a, vertex_set b) = default;

    /// Iterates over the member vertex ids in increasing order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        friend constexpr bool operator==(iterator a, iterator b) = default;

    private:
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace floc

#endif
