#ifndef PACKBOUND_GRAPH_IO_HH
#define PACKBOUND_GRAPH_IO_HH

#include <packbound/graph.hh>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace packbound
{
    /// Edge-list text: a line "n m", then m lines "u v" with 0-based ids. Throws ParseError.
    [[nodiscard]] auto parse_edge_list(std::string_view text) -> Graph;
    [[nodiscard]] auto to_edge_list(const Graph & g) -> std::string;

    enum class InputFormat
    {
        graph6,
        edge_list
    };

    /// One record from an input stream. Exactly one of graph and error is meaningful.
    struct GraphRecord
    {
        std::size_t line = 0;
        std::optional<Graph> graph;
        std::string error;
    };

    /// True if the line consists of exactly two non-negative integers.
    [[nodiscard]] auto looks_like_edge_list_header(std::string_view line) -> bool;

    /**
     * Read every record from a stream. The first non-blank line decides the
     * format: two integers select edge-list blocks, anything else selects one
     * graph6 record per line. Malformed records come back with their line
     * number and message rather than aborting the read, except that a broken
     * edge-list block ends the stream since there is no way to resynchronise.
     */
    [[nodiscard]] auto read_graphs(std::istream & in) -> std::vector<GraphRecord>;
}

#endif
