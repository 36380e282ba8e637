#include <packbound/report.hh>

#include <sstream>

using namespace packbound;
using nlohmann::json;

auto packbound::to_json(const VertexSet & s) -> json
{
    return json(s.members());
}

auto packbound::to_json(const ExactReal & v) -> json
{
    return json{{"exact", v.to_string()}, {"approx", v.to_double()}};
}

auto packbound::to_json(const SolveResult & r) -> json
{
    return json{
        {"value", r.value},
        {"witness", to_json(r.witness)},
        {"nodes_explored", r.nodes_explored},
        {"method", to_string(r.method)}
    };
}

auto packbound::to_json(const BoundEvaluation & e) -> json
{
    json result{{"bound", to_string(e.id)}, {"applicable", e.applicable}};
    if (e.k)
        result["k"] = *e.k;
    if (e.applicable)
        result["value"] = to_json(e.value);
    else
        result["reason"] = e.reason;
    if (e.invariant)
        result["invariant"] = *e.invariant;
    if (e.holds)
        result["holds"] = *e.holds;
    if (e.tight)
        result["tight"] = *e.tight;
    return result;
}

auto packbound::to_json(const FamilyWitness & w) -> json
{
    json result{{"family", to_string(w.family)}, {"k", w.k}};
    if (w.clique_s)
        result["S"] = to_json(*w.clique_s);
    if (w.family == FamilyKind::gamma) {
        json pairs = json::array();
        for (const auto & [u, v] : w.matching_h)
            pairs.push_back(json::array({u, v}));
        result["H"] = pairs;
    }
    else if (w.family == FamilyKind::gamma_prime)
        result["H"] = w.independent_h;
    if (! w.private_neighbours.empty() || w.family == FamilyKind::gamma || w.family == FamilyKind::gamma_prime) {
        json pn = json::object();
        for (const auto & [u, members] : w.private_neighbours)
            pn[std::to_string(u)] = members;
        result["pn"] = pn;
    }
    return result;
}

auto packbound::to_json(const TheoremVerdict & v) -> json
{
    return json{{"graph", v.graph}, {"claim", to_string(v.claim)}, {"status", to_string(v.status)}, {"details", v.details}};
}

auto packbound::to_json(const SweepSummary & s, bool include_timing) -> json
{
    json claims = json::object();
    for (const auto & [claim, c] : s.counts) {
        auto tight = s.tight_witnesses.find(claim);
        claims[to_string(claim)] = json{
            {"holds", c.holds},
            {"tight", c.tight},
            {"violated", c.violated},
            {"inapplicable", c.inapplicable},
            {"finding", c.finding},
            {"tight_witnesses", tight == s.tight_witnesses.end() ? json::array() : json(tight->second)}
        };
    }
    json result{
        {"graphs_processed", s.graphs_processed},
        {"malformed_records", s.malformed_records},
        {"violations", s.violations()},
        {"findings", s.findings()},
        {"claims", claims}
    };
    if (include_timing)
        result["wall_seconds"] = s.wall_seconds;
    return result;
}

auto packbound::tight_instances_csv(const SweepSummary & s) -> std::string
{
    std::ostringstream out;
    out << "claim,graph6\n";
    for (const auto & [claim, graphs] : s.tight_witnesses)
        for (const auto & g : graphs)
            out << to_string(claim) << ',' << g << '\n';
    return out.str();
}
