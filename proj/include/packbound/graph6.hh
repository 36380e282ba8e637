#ifndef PACKBOUND_GRAPH6_HH
#define PACKBOUND_GRAPH6_HH

#include <packbound/graph.hh>

#include <stdexcept>
#include <string>
#include <string_view>

namespace packbound
{
    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Largest order expressible in the short graph6 header.
    inline constexpr int graph6_max_order = 62;

    /// Decode one graph6 record (short form only). A trailing newline or
    /// carriage return is ignored. Throws ParseError.
    [[nodiscard]] auto parse_graph6(std::string_view text) -> Graph;

    /// Throws std::invalid_argument if the graph is too large for the short form.
    [[nodiscard]] auto to_graph6(const Graph & g) -> std::string;
}

#endif
