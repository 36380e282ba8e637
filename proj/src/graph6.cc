#include <packbound/graph6.hh>

#include <string>

using namespace packbound;

namespace
{
    constexpr int bias = 63;

    auto bit_count(int n) -> std::size_t
    {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }
}

auto packbound::parse_graph6(std::string_view text) -> Graph
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    if (text.empty())
        throw ParseError("graph6: empty record");

    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: character " + std::to_string(int(c)) + " at offset " + std::to_string(i) + " outside 63..126");
    }

    int n = static_cast<unsigned char>(text[0]) - bias;
    if (n > graph6_max_order)
        throw ParseError("graph6: long-form header not supported");

    auto expected = 1 + (bit_count(n) + 5) / 6;
    if (text.size() < expected)
        throw ParseError("graph6: truncated bit stream (expected " + std::to_string(expected) + " bytes, got " + std::to_string(text.size()) + ")");
    if (text.size() > expected)
        throw ParseError("graph6: trailing data (expected " + std::to_string(expected) + " bytes, got " + std::to_string(text.size()) + ")");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = static_cast<unsigned char>(text[1 + k / 6]) - bias;
            if ((chunk >> (5 - k % 6)) & 1)
                edges.push_back({i, j});
        }

    return Graph(n, edges);
}

auto packbound::to_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    if (n > graph6_max_order)
        throw std::invalid_argument("graph6: order " + std::to_string(n) + " needs the long form");

    std::string result(1 + (bit_count(n) + 5) / 6, char(bias));
    result[0] = char(bias + n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j))
                result[1 + k / 6] = char(result[1 + k / 6] + (1 << (5 - k % 6)));
    return result;
}
