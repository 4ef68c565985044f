#ifndef DIGDOM_VERTEX_SET_HH
#define DIGDOM_VERTEX_SET_HH

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace digdom
{
    using Vertex = std::size_t;

    /// Largest vertex count any graph in the library may have.
    inline constexpr std::size_t max_vertices = 4096;

    /**
     * Fixed-capacity set of vertex indices 0..capacity-1, stored as a packed
     * bit vector. Binary operations require equal capacities.
     */
    class VertexSet
    {
    public:
        using Word = std::uint64_t;
        static constexpr std::size_t word_bits = 64;

        class const_iterator
        {
        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = Vertex;
            using difference_type = std::ptrdiff_t;
            using pointer = const Vertex *;
            using reference = Vertex;

            const_iterator() = default;
            const_iterator(const VertexSet * set, Vertex at) : _set(set), _at(at) {}

            auto operator*() const -> Vertex { return _at; }
            auto operator++() -> const_iterator &
            {
                _at = _set->next(_at + 1);
                return *this;
            }
            auto operator++(int) -> const_iterator
            {
                auto copy = *this;
                ++*this;
                return copy;
            }
            auto operator==(const const_iterator & other) const -> bool { return _at == other._at; }

        private:
            const VertexSet * _set = nullptr;
            Vertex _at = 0;
        };

        VertexSet() = default;
        explicit VertexSet(std::size_t capacity) : _capacity(capacity), _words((capacity + word_bits - 1) / word_bits, 0) {}
        VertexSet(std::size_t capacity, std::initializer_list<Vertex> members);
        VertexSet(std::size_t capacity, std::span<const Vertex> members);

        static auto full(std::size_t capacity) -> VertexSet;

        auto capacity() const -> std::size_t { return _capacity; }

        auto test(Vertex v) const -> bool { return (_words[v / word_bits] >> (v % word_bits)) & 1u; }
        auto set(Vertex v) -> void { _words[v / word_bits] |= Word{1} << (v % word_bits); }
        auto reset(Vertex v) -> void { _words[v / word_bits] &= ~(Word{1} << (v % word_bits)); }
        auto clear() -> void;

        auto count() const -> std::size_t;
        auto empty() const -> bool;
        auto any() const -> bool { return ! empty(); }

        /// First member >= from, or capacity() if there is none.
        auto next(Vertex from) const -> Vertex;
        auto first() const -> Vertex { return next(0); }

        auto begin() const -> const_iterator { return {this, first()}; }
        auto end() const -> const_iterator { return {this, _capacity}; }

        auto operator|=(const VertexSet & other) -> VertexSet &;
        auto operator&=(const VertexSet & other) -> VertexSet &;
        auto operator-=(const VertexSet & other) -> VertexSet &;

        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

        auto intersects(const VertexSet & other) const -> bool;
        auto intersection_count(const VertexSet & other) const -> std::size_t;
        auto is_subset_of(const VertexSet & other) const -> bool;

        auto to_vector() const -> std::vector<Vertex>;
        auto to_string() const -> std::string;

        auto operator==(const VertexSet & other) const -> bool = default;

        /// Orders sets by their sorted member lists, so sorted collections read naturally.
        auto lexicographic_less(const VertexSet & other) const -> bool;

        auto words() const -> std::span<const Word> { return _words; }

    private:
        std::size_t _capacity = 0;
        std::vector<Word> _words;
    };
}

#endif
