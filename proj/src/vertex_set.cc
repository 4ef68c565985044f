#include <digdom/vertex_set.hh>

#include <algorithm>
#include <stdexcept>

using namespace digdom;

using std::size_t;
using std::vector;

namespace
{
    auto check_same_capacity(const VertexSet & a, const VertexSet & b) -> void
    {
        if (a.capacity() != b.capacity())
            throw std::invalid_argument("vertex sets of different capacity: " + std::to_string(a.capacity()) +
                " vs " + std::to_string(b.capacity()));
    }
}

VertexSet::VertexSet(size_t capacity, std::initializer_list<Vertex> members) :
    VertexSet(capacity, std::span<const Vertex>(members.begin(), members.size()))
{
}

VertexSet::VertexSet(size_t capacity, std::span<const Vertex> members) : VertexSet(capacity)
{
    for (auto v : members) {
        if (v >= capacity)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside set of capacity " + std::to_string(capacity));
        set(v);
    }
}

auto VertexSet::full(size_t capacity) -> VertexSet
{
    VertexSet result(capacity);
    for (auto & w : result._words)
        w = ~Word{0};
    if (auto tail = capacity % word_bits; tail != 0)
        result._words.back() = (Word{1} << tail) - 1;
    return result;
}

auto VertexSet::clear() -> void
{
    std::fill(_words.begin(), _words.end(), 0);
}

auto VertexSet::count() const -> size_t
{
    size_t result = 0;
    for (auto w : _words)
        result += std::popcount(w);
    return result;
}

auto VertexSet::empty() const -> bool
{
    return std::all_of(_words.begin(), _words.end(), [](Word w) { return w == 0; });
}

auto VertexSet::next(Vertex from) const -> Vertex
{
    if (from >= _capacity)
        return _capacity;
    size_t w = from / word_bits;
    Word bits = _words[w] & (~Word{0} << (from % word_bits));
    while (true) {
        if (bits != 0)
            return w * word_bits + std::countr_zero(bits);
        if (++w == _words.size())
            return _capacity;
        bits = _words[w];
    }
}

auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
{
    check_same_capacity(*this, other);
    for (size_t i = 0; i < _words.size(); ++i)
        _words[i] |= other._words[i];
    return *this;
}

auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
{
    check_same_capacity(*this, other);
    for (size_t i = 0; i < _words.size(); ++i)
        _words[i] &= other._words[i];
    return *this;
}

auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
{
    check_same_capacity(*this, other);
    for (size_t i = 0; i < _words.size(); ++i)
        _words[i] &= ~other._words[i];
    return *this;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    check_same_capacity(*this, other);
    for (size_t i = 0; i < _words.size(); ++i)
        if (_words[i] & other._words[i])
            return true;
    return false;
}

auto VertexSet::intersection_count(const VertexSet & other) const -> size_t
{
    check_same_capacity(*this, other);
    size_t result = 0;
    for (size_t i = 0; i < _words.size(); ++i)
        result += std::popcount(_words[i] & other._words[i]);
    return result;
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    check_same_capacity(*this, other);
    for (size_t i = 0; i < _words.size(); ++i)
        if (_words[i] & ~other._words[i])
            return false;
    return true;
}

auto VertexSet::to_vector() const -> vector<Vertex>
{
    vector<Vertex> result;
    result.reserve(count());
    for (auto v : *this)
        result.push_back(v);
    return result;
}

auto VertexSet::to_string() const -> std::string
{
    std::string result = "{";
    bool first_member = true;
    for (auto v : *this) {
        if (! first_member)
            result += ",";
        result += std::to_string(v);
        first_member = false;
    }
    return result + "}";
}

auto VertexSet::lexicographic_less(const VertexSet & other) const -> bool
{
    auto a = to_vector(), b = other.to_vector();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}
