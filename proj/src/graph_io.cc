#include <packbound/graph_io.hh>
#include <packbound/graph6.hh>

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

using namespace packbound;

namespace
{
    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    auto parse_int_pair(std::string_view line) -> std::optional<std::pair<long, long>>
    {
        line = trim(line);
        long a = 0, b = 0;
        auto [p, ec] = std::from_chars(line.data(), line.data() + line.size(), a);
        if (ec != std::errc{} || p == line.data() + line.size() || ! std::isspace(static_cast<unsigned char>(*p)))
            return std::nullopt;
        auto rest = trim(std::string_view(p, line.data() + line.size() - p));
        auto [q, ec2] = std::from_chars(rest.data(), rest.data() + rest.size(), b);
        if (ec2 != std::errc{} || q != rest.data() + rest.size())
            return std::nullopt;
        return std::pair{a, b};
    }

    struct LineSource
    {
        std::istream & in;
        std::size_t line_number = 0;

        auto next_nonblank(std::string & out) -> bool
        {
            while (std::getline(in, out)) {
                ++line_number;
                if (! trim(out).empty())
                    return true;
            }
            return false;
        }
    };

    auto read_edge_list_block(LineSource & source, const std::string & header) -> Graph
    {
        auto counts = parse_int_pair(header);
        if (! counts || counts->first < 0 || counts->second < 0)
            throw ParseError("expected header \"n m\"");
        auto [n, m] = *counts;
        if (n > max_vertices)
            throw ParseError("order " + std::to_string(n) + " exceeds " + std::to_string(max_vertices));

        std::vector<Edge> edges;
        std::string line;
        for (long i = 0; i < m; ++i) {
            if (! source.next_nonblank(line))
                throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
            auto e = parse_int_pair(line);
            if (! e)
                throw ParseError("expected edge \"u v\"");
            edges.push_back({int(e->first), int(e->second)});
        }
        try {
            return Graph(int(n), edges);
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(e.what());
        }
    }
}

auto packbound::looks_like_edge_list_header(std::string_view line) -> bool
{
    return parse_int_pair(line).has_value();
}

auto packbound::parse_edge_list(std::string_view text) -> Graph
{
    std::istringstream in{std::string(text)};
    LineSource source{in};
    std::string header;
    if (! source.next_nonblank(header))
        throw ParseError("empty edge list");
    auto g = read_edge_list_block(source, header);
    std::string extra;
    if (source.next_nonblank(extra))
        throw ParseError("unexpected content after edge list at line " + std::to_string(source.line_number));
    return g;
}

auto packbound::to_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto & [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto packbound::read_graphs(std::istream & in) -> std::vector<GraphRecord>
{
    std::vector<GraphRecord> records;
    LineSource source{in};
    std::string line;
    if (! source.next_nonblank(line))
        return records;

    if (looks_like_edge_list_header(line)) {
        do {
            GraphRecord record;
            record.line = source.line_number;
            try {
                record.graph = read_edge_list_block(source, line);
                records.push_back(std::move(record));
            }
            catch (const ParseError & e) {
                record.error = e.what();
                record.line = source.line_number;
                records.push_back(std::move(record));
                break;
            }
        } while (source.next_nonblank(line));
        return records;
    }

    do {
        GraphRecord record;
        record.line = source.line_number;
        auto text = trim(line);
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);
        try {
            record.graph = parse_graph6(text);
        }
        catch (const ParseError & e) {
            record.error = e.what();
        }
        records.push_back(std::move(record));
    } while (source.next_nonblank(line));
    return records;
}
