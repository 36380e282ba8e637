#include <packbound/vertex_set.hh>

#include <ostream>
#include <stdexcept>
#include <string>

using namespace packbound;

VertexSet::VertexSet(int universe) :
    _universe(universe)
{
    if (universe < 0 || universe > max_vertices)
        throw std::invalid_argument("vertex set universe out of range: " + std::to_string(universe));
}

auto VertexSet::from_bits(int universe, std::uint64_t bits) -> VertexSet
{
    VertexSet result(universe);
    if (0 != (bits & ~low_bits(universe)))
        throw std::invalid_argument("vertex set bits exceed universe");
    result._bits = bits;
    return result;
}

auto VertexSet::full(int universe) -> VertexSet
{
    return from_bits(universe, low_bits(universe));
}

auto VertexSet::from_members(int universe, const std::vector<int> & members) -> VertexSet
{
    VertexSet result(universe);
    for (auto v : members)
        result.insert(v);
    return result;
}

auto VertexSet::insert(int v) -> void
{
    if (v < 0 || v >= _universe)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of " + std::to_string(_universe));
    _bits |= std::uint64_t{1} << v;
}

auto VertexSet::erase(int v) -> void
{
    if (v < 0 || v >= _universe)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of " + std::to_string(_universe));
    _bits &= ~(std::uint64_t{1} << v);
}

auto VertexSet::members() const -> std::vector<int>
{
    return std::vector<int>(begin(), end());
}

auto VertexSet::complement() const -> VertexSet
{
    VertexSet result(_universe);
    result._bits = ~_bits & low_bits(_universe);
    return result;
}

auto packbound::operator<< (std::ostream & s, const VertexSet & set) -> std::ostream &
{
    s << "{";
    bool first = true;
    for (auto v : set) {
        if (! first)
            s << ", ";
        s << v;
        first = false;
    }
    return s << "}";
}
