#ifndef PACKBOUND_REPORT_HH
#define PACKBOUND_REPORT_HH

#include <packbound/bounds.hh>
#include <packbound/exact_real.hh>
#include <packbound/families.hh>
#include <packbound/solvers.hh>
#include <packbound/verifier.hh>

#include <json.hpp>

#include <string>

namespace packbound
{
    [[nodiscard]] auto to_json(const VertexSet &) -> nlohmann::json;
    [[nodiscard]] auto to_json(const ExactReal &) -> nlohmann::json;
    [[nodiscard]] auto to_json(const SolveResult &) -> nlohmann::json;
    [[nodiscard]] auto to_json(const BoundEvaluation &) -> nlohmann::json;

    /// {family, S:[ids], H:[[u,v],...] or [ids], pn:{"u":[ids]}}, plus k.
    [[nodiscard]] auto to_json(const FamilyWitness &) -> nlohmann::json;

    [[nodiscard]] auto to_json(const TheoremVerdict &) -> nlohmann::json;

    /// Wall time is left out unless asked for, so identical runs serialise identically.
    [[nodiscard]] auto to_json(const SweepSummary &, bool include_timing = false) -> nlohmann::json;

    /// "claim,graph6" header plus one row per tight witness.
    [[nodiscard]] auto tight_instances_csv(const SweepSummary &) -> std::string;
}

#endif
