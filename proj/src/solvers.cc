#include <packbound/solvers.hh>

#include <algorithm>
#include <numeric>
#include <string>

using namespace packbound;

NodeLimitExceeded::NodeLimitExceeded(std::uint64_t nodes) :
    std::runtime_error("node limit exceeded after " + std::to_string(nodes) + " nodes"),
    _nodes(nodes)
{
}

auto packbound::to_string(SolveMethod m) -> std::string
{
    switch (m) {
        case SolveMethod::branch_and_bound: return "branch_and_bound";
        case SolveMethod::exhaustive:       return "exhaustive";
    }
    return "unknown";
}

namespace
{
    enum class Neighbourhood
    {
        closed,
        open
    };

    auto neighbourhoods(const Graph & g, Neighbourhood kind) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        result.reserve(g.order());
        for (int v = 0; v < g.order(); ++v)
            result.push_back(kind == Neighbourhood::closed ? g.closed_neighbours(v) : g.neighbours(v));
        return result;
    }

    auto descending_degree_order(const Graph & g) -> std::vector<int>
    {
        std::vector<int> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });
        return order;
    }

    struct NodeCounter
    {
        std::optional<std::uint64_t> limit;
        std::uint64_t count = 0;

        auto tick() -> void
        {
            ++count;
            if (limit && count > *limit)
                throw NodeLimitExceeded(count);
        }
    };

    auto validate(const SolveOptions & opts) -> void
    {
        if (opts.node_limit && *opts.node_limit == 0)
            throw std::invalid_argument("node limit must be positive");
    }

    // Each vertex w tolerates at most `capacity` chosen vertices in its
    // neighbourhood. Adjacency is symmetric, so choosing v consumes capacity
    // at exactly the vertices of nbhd(v).
    class PackingSearch
    {
        private:
            const Graph & _g;
            std::vector<VertexSet> _nbhd;
            std::vector<int> _order;
            std::vector<int> _capacity;
            NodeCounter _counter;
            int _best_value = -1;
            VertexSet _best;

            auto eligible(int v) const -> bool
            {
                for (auto w : _nbhd[v])
                    if (_capacity[w] <= 0)
                        return false;
                return true;
            }

            // Disjoint pieces nbhd(w) ∩ rest contribute at most capacity[w] each.
            auto upper_bound(VertexSet rest) const -> int
            {
                int bound = 0;
                for (auto w : _order) {
                    auto piece = _nbhd[w] & rest;
                    if (piece.size() > _capacity[w]) {
                        bound += _capacity[w];
                        rest -= piece;
                    }
                }
                return bound + rest.size();
            }

            auto search(std::size_t position, VertexSet chosen, const VertexSet & candidates) -> void
            {
                _counter.tick();

                if (chosen.size() > _best_value) {
                    _best_value = chosen.size();
                    _best = chosen;
                }

                auto open = _g.empty_set();
                for (auto v : candidates)
                    if (eligible(v))
                        open.insert(v);

                if (chosen.size() + upper_bound(open) <= _best_value)
                    return;

                while (position < _order.size() && ! open.contains(_order[position]))
                    ++position;
                if (position == _order.size())
                    return;

                int v = _order[position];
                open.erase(v);

                for (auto w : _nbhd[v])
                    --_capacity[w];
                auto with_v = chosen;
                with_v.insert(v);
                search(position + 1, with_v, open);
                for (auto w : _nbhd[v])
                    ++_capacity[w];

                search(position + 1, chosen, open);
            }

        public:
            PackingSearch(const Graph & g, Neighbourhood kind, int capacity, const SolveOptions & opts) :
                _g(g),
                _nbhd(neighbourhoods(g, kind)),
                _order(descending_degree_order(g)),
                _capacity(g.order(), capacity),
                _counter{opts.node_limit},
                _best(g.empty_set())
            {
            }

            auto run() -> SolveResult
            {
                search(0, _g.empty_set(), _g.vertices());
                return SolveResult{_best_value, _best, _counter.count, SolveMethod::branch_and_bound};
            }
    };

    class DominationSearch
    {
        private:
            const Graph & _g;
            std::vector<int> _order;
            std::vector<int> _need;
            std::vector<int> _available;
            NodeCounter _counter;
            int _best_value;
            VertexSet _best;

            auto search(std::size_t position, VertexSet chosen) -> void
            {
                _counter.tick();

                int total = 0, largest = 0;
                for (auto need : _need)
                    if (need > 0) {
                        total += need;
                        largest = std::max(largest, need);
                    }

                if (0 == total) {
                    if (chosen.size() < _best_value) {
                        _best_value = chosen.size();
                        _best = chosen;
                    }
                    return;
                }

                int per_vertex = _g.max_degree() + 1;
                int lower = std::max((total + per_vertex - 1) / per_vertex, largest);
                if (chosen.size() + lower >= _best_value)
                    return;
                if (position == _order.size())
                    return;

                int v = _order[position];
                auto closed = _g.closed_neighbours(v);

                bool useful = false;
                for (auto w : closed)
                    useful = useful || _need[w] > 0;

                if (useful) {
                    for (auto w : closed) {
                        --_need[w];
                        --_available[w];
                    }
                    auto with_v = chosen;
                    with_v.insert(v);
                    search(position + 1, with_v);
                    for (auto w : closed) {
                        ++_need[w];
                        ++_available[w];
                    }
                }

                bool feasible = true;
                for (auto w : closed) {
                    --_available[w];
                    feasible = feasible && _need[w] <= _available[w];
                }
                if (feasible)
                    search(position + 1, chosen);
                for (auto w : closed)
                    ++_available[w];
            }

        public:
            DominationSearch(const Graph & g, int k, const SolveOptions & opts) :
                _g(g),
                _order(descending_degree_order(g)),
                _need(g.order(), k),
                _available(g.order()),
                _counter{opts.node_limit},
                _best_value(g.order() + 1),
                _best(g.empty_set())
            {
                for (int v = 0; v < g.order(); ++v)
                    _available[v] = g.degree(v) + 1;
            }

            auto run() -> SolveResult
            {
                search(0, _g.empty_set());
                return SolveResult{_best_value, _best, _counter.count, SolveMethod::branch_and_bound};
            }
    };

    // Subsets of {0..n-1} of the given size in increasing numeric order.
    template <typename Accept_>
    auto first_subset_of_size(int n, int size, NodeCounter & counter, Accept_ && accept) -> std::optional<std::uint64_t>
    {
        if (0 == size) {
            counter.tick();
            return accept(std::uint64_t{0}) ? std::optional<std::uint64_t>{0} : std::nullopt;
        }
        if (size > n)
            return std::nullopt;

        std::uint64_t mask = low_bits(size);
        std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            counter.tick();
            if (accept(mask))
                return mask;
            // Gosper's hack
            std::uint64_t lowest = mask & -mask;
            std::uint64_t ripple = mask + lowest;
            mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
        }
        return std::nullopt;
    }

    template <typename Accept_>
    auto exhaustive_maximum(const Graph & g, const SolveOptions & opts, Accept_ && accept) -> SolveResult
    {
        if (g.order() > max_exhaustive_order)
            throw std::invalid_argument("exhaustive mode limited to " + std::to_string(max_exhaustive_order) + " vertices");
        NodeCounter counter{opts.node_limit};
        for (int size = g.order(); size >= 0; --size)
            if (auto mask = first_subset_of_size(g.order(), size, counter, accept))
                return SolveResult{size, VertexSet::from_bits(g.order(), *mask), counter.count, SolveMethod::exhaustive};
        throw std::logic_error("exhaustive maximum found no feasible subset");
    }

    template <typename Accept_>
    auto exhaustive_minimum(const Graph & g, const SolveOptions & opts, Accept_ && accept) -> SolveResult
    {
        if (g.order() > max_exhaustive_order)
            throw std::invalid_argument("exhaustive mode limited to " + std::to_string(max_exhaustive_order) + " vertices");
        NodeCounter counter{opts.node_limit};
        for (int size = 0; size <= g.order(); ++size)
            if (auto mask = first_subset_of_size(g.order(), size, counter, accept))
                return SolveResult{size, VertexSet::from_bits(g.order(), *mask), counter.count, SolveMethod::exhaustive};
        throw std::logic_error("exhaustive minimum found no feasible subset");
    }

    auto limited_fits(const Graph & g, std::uint64_t mask, int k) -> bool
    {
        for (int v = 0; v < g.order(); ++v)
            if (std::popcount(g.closed_neighbours(v).bits() & mask) > k)
                return false;
        return true;
    }

    auto open_fits(const Graph & g, std::uint64_t mask) -> bool
    {
        for (int v = 0; v < g.order(); ++v)
            if (std::popcount(g.neighbours(v).bits() & mask) > 1)
                return false;
        return true;
    }

    auto dominates(const Graph & g, std::uint64_t mask, int k) -> bool
    {
        for (int v = 0; v < g.order(); ++v)
            if (std::popcount(g.closed_neighbours(v).bits() & mask) < k)
                return false;
        return true;
    }
}

auto packbound::is_limited_packing(const Graph & g, const VertexSet & set, int k) -> bool
{
    return set.universe() == g.order() && limited_fits(g, set.bits(), k);
}

auto packbound::is_open_packing(const Graph & g, const VertexSet & set) -> bool
{
    return set.universe() == g.order() && open_fits(g, set.bits());
}

auto packbound::is_tuple_dominating(const Graph & g, const VertexSet & set, int k) -> bool
{
    return set.universe() == g.order() && dominates(g, set.bits(), k);
}

auto packbound::limited_packing_number(const Graph & g, int k, const SolveOptions & opts) -> SolveResult
{
    validate(opts);
    if (k < 1)
        throw std::invalid_argument("limited packing needs k >= 1");

    if (opts.force_exhaustive)
        return exhaustive_maximum(g, opts, [&] (std::uint64_t mask) { return limited_fits(g, mask, k); });

    if (k >= g.max_degree() + 1)
        return SolveResult{g.order(), g.vertices(), 0, SolveMethod::branch_and_bound};

    return PackingSearch(g, Neighbourhood::closed, k, opts).run();
}

auto packbound::packing_number(const Graph & g, const SolveOptions & opts) -> SolveResult
{
    return limited_packing_number(g, 1, opts);
}

auto packbound::open_packing_number(const Graph & g, const SolveOptions & opts) -> SolveResult
{
    validate(opts);
    if (opts.force_exhaustive)
        return exhaustive_maximum(g, opts, [&] (std::uint64_t mask) { return open_fits(g, mask); });
    return PackingSearch(g, Neighbourhood::open, 1, opts).run();
}

auto packbound::tuple_domination_number(const Graph & g, int k, const SolveOptions & opts) -> SolveResult
{
    validate(opts);
    if (k < 1)
        throw std::invalid_argument("tuple domination needs k >= 1");
    if (g.order() > 0 && g.min_degree() < k - 1)
        throw UndefinedInvariant("k-tuple domination with k = " + std::to_string(k) + " needs minimum degree >= "
                + std::to_string(k - 1) + ", graph has " + std::to_string(g.min_degree()));

    if (opts.force_exhaustive)
        return exhaustive_minimum(g, opts, [&] (std::uint64_t mask) { return dominates(g, mask, k); });
    return DominationSearch(g, k, opts).run();
}
