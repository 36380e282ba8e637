#ifndef PACKBOUND_VERTEX_SET_HH
#define PACKBOUND_VERTEX_SET_HH

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <vector>

namespace packbound
{
    /// Hard cap on graph order; every vertex set fits in one machine word.
    inline constexpr int max_vertices = 64;

    /// Set of vertex ids drawn from the fixed universe 0..universe-1.
    class VertexSet
    {
        private:
            std::uint64_t _bits = 0;
            int _universe = 0;

        public:
            class Iterator
            {
                private:
                    std::uint64_t _rest = 0;

                public:
                    using iterator_category = std::forward_iterator_tag;
                    using value_type = int;
                    using difference_type = std::ptrdiff_t;
                    using pointer = const int *;
                    using reference = int;

                    Iterator() = default;
                    explicit Iterator(std::uint64_t rest) : _rest(rest) { }

                    auto operator* () const -> int { return std::countr_zero(_rest); }
                    auto operator++ () -> Iterator & { _rest &= _rest - 1; return *this; }
                    auto operator++ (int) -> Iterator { auto old = *this; ++*this; return old; }
                    auto operator== (const Iterator &) const -> bool = default;
            };

            VertexSet() = default;

            /// Empty set over 0..universe-1. Throws std::invalid_argument outside 0..max_vertices.
            explicit VertexSet(int universe);

            /// Throws std::invalid_argument if bits has members at or above universe.
            static auto from_bits(int universe, std::uint64_t bits) -> VertexSet;
            static auto full(int universe) -> VertexSet;
            static auto from_members(int universe, const std::vector<int> & members) -> VertexSet;

            [[nodiscard]] auto universe() const -> int { return _universe; }
            [[nodiscard]] auto bits() const -> std::uint64_t { return _bits; }
            [[nodiscard]] auto size() const -> int { return std::popcount(_bits); }
            [[nodiscard]] auto empty() const -> bool { return 0 == _bits; }
            [[nodiscard]] auto contains(int v) const -> bool
            {
                return v >= 0 && v < _universe && ((_bits >> v) & 1u);
            }

            /// Throws std::out_of_range for ids outside the universe.
            auto insert(int v) -> void;
            auto erase(int v) -> void;

            [[nodiscard]] auto members() const -> std::vector<int>;
            [[nodiscard]] auto first() const -> int { return empty() ? -1 : std::countr_zero(_bits); }

            [[nodiscard]] auto begin() const -> Iterator { return Iterator{_bits}; }
            [[nodiscard]] auto end() const -> Iterator { return Iterator{0}; }

            [[nodiscard]] auto complement() const -> VertexSet;
            [[nodiscard]] auto intersects(const VertexSet & other) const -> bool { return 0 != (_bits & other._bits); }
            [[nodiscard]] auto subset_of(const VertexSet & other) const -> bool { return 0 == (_bits & ~other._bits); }

            auto operator&= (const VertexSet & other) -> VertexSet & { _bits &= other._bits; return *this; }
            auto operator|= (const VertexSet & other) -> VertexSet & { _bits |= other._bits; return *this; }
            auto operator-= (const VertexSet & other) -> VertexSet & { _bits &= ~other._bits; return *this; }

            friend auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
            friend auto operator== (const VertexSet &, const VertexSet &) -> bool = default;
    };

    auto operator<< (std::ostream &, const VertexSet &) -> std::ostream &;

    /// Mask with the low n bits set; n may be 64.
    [[nodiscard]] constexpr auto low_bits(int n) -> std::uint64_t
    {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
}

#endif
