#include <packbound/families.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

using namespace packbound;

auto packbound::to_string(FamilyKind f) -> std::string
{
    switch (f) {
        case FamilyKind::omega:       return "omega";
        case FamilyKind::sigma:       return "sigma";
        case FamilyKind::gamma:       return "gamma";
        case FamilyKind::gamma_prime: return "gamma-prime";
    }
    return "unknown";
}

auto packbound::parse_family_kind(const std::string & s) -> FamilyKind
{
    if (s == "omega")
        return FamilyKind::omega;
    if (s == "sigma")
        return FamilyKind::sigma;
    if (s == "gamma")
        return FamilyKind::gamma;
    if (s == "gamma-prime" || s == "gamma_prime")
        return FamilyKind::gamma_prime;
    throw std::invalid_argument("unknown family '" + s + "'");
}

namespace
{
    auto is_clique(const Graph & g, const VertexSet & s) -> bool
    {
        for (auto v : s)
            if (! (s - g.closed_neighbours(v)).empty())
                return false;
        return true;
    }

    // Clique S such that every vertex outside S has exactly `outside_regularity`
    // neighbours outside S, and every vertex of S has exactly `reach` of them.
    // A vertex of such an S has degree |S| − 1 + reach, so for each target size
    // only vertices of that degree are candidates.
    class CliqueCertificateSearch
    {
        private:
            const Graph & _g;
            int _outside_regularity;
            int _reach;

            auto accepts(const VertexSet & s) const -> bool
            {
                auto outside = s.complement();
                for (auto v : outside)
                    if ((_g.neighbours(v) & outside).size() != _outside_regularity)
                        return false;
                for (auto v : s)
                    if ((_g.neighbours(v) & outside).size() != _reach)
                        return false;
                return true;
            }

            // Grows cliques in increasing id order, so the first accepted one is lexicographically smallest.
            auto grow(const VertexSet & chosen, const VertexSet & candidates, int target) const -> std::optional<VertexSet>
            {
                if (chosen.size() == target)
                    return accepts(chosen) ? std::optional{chosen} : std::nullopt;
                if (chosen.size() + candidates.size() < target)
                    return std::nullopt;

                auto rest = candidates;
                for (auto v : candidates) {
                    rest.erase(v);
                    auto next = chosen;
                    next.insert(v);
                    if (auto found = grow(next, rest & _g.neighbours(v), target))
                        return found;
                }
                return std::nullopt;
            }

        public:
            CliqueCertificateSearch(const Graph & g, int outside_regularity, int reach) :
                _g(g), _outside_regularity(outside_regularity), _reach(reach)
            {
            }

            auto run() const -> std::optional<VertexSet>
            {
                for (int size = 0; size <= _g.order(); ++size) {
                    auto candidates = _g.empty_set();
                    for (int v = 0; v < _g.order(); ++v)
                        if (_g.degree(v) == size - 1 + _reach)
                            candidates.insert(v);
                    if (auto found = grow(_g.empty_set(), candidates, size))
                        return found;
                }
                return std::nullopt;
            }
    };

    // Set X ⊆ allowed such that every vertex v has exactly one member of X in
    // nbhd(v). Decides vertices in id order, include first, so the first hit is
    // lexicographically smallest.
    class EfficientSetSearch
    {
        private:
            const Graph & _g;
            std::vector<VertexSet> _nbhd;
            VertexSet _allowed;
            std::vector<int> _hits;
            std::vector<int> _remaining;

            auto search(int v, VertexSet chosen) -> std::optional<VertexSet>
            {
                if (v == _g.order())
                    return chosen;
                if (! _allowed.contains(v))
                    return search(v + 1, chosen);

                bool can_include = true;
                for (auto w : _nbhd[v])
                    can_include = can_include && 0 == _hits[w];

                std::optional<VertexSet> found;
                if (can_include) {
                    for (auto w : _nbhd[v]) {
                        ++_hits[w];
                        --_remaining[w];
                    }
                    auto with_v = chosen;
                    with_v.insert(v);
                    found = search(v + 1, with_v);
                    for (auto w : _nbhd[v]) {
                        --_hits[w];
                        ++_remaining[w];
                    }
                    if (found)
                        return found;
                }

                bool feasible = true;
                for (auto w : _nbhd[v]) {
                    --_remaining[w];
                    feasible = feasible && (_hits[w] > 0 || _remaining[w] > 0);
                }
                if (feasible)
                    found = search(v + 1, chosen);
                for (auto w : _nbhd[v])
                    ++_remaining[w];
                return found;
            }

        public:
            EfficientSetSearch(const Graph & g, bool closed, const VertexSet & allowed) :
                _g(g), _allowed(allowed), _hits(g.order(), 0), _remaining(g.order(), 0)
            {
                for (int v = 0; v < g.order(); ++v) {
                    _nbhd.push_back(closed ? g.closed_neighbours(v) : g.neighbours(v));
                    _remaining[v] = (_nbhd.back() & allowed).size();
                }
            }

            auto run() -> std::optional<VertexSet>
            {
                for (auto r : _remaining)
                    if (0 == r)
                        return std::nullopt;
                return search(0, _g.empty_set());
            }
    };

    auto minimum_degree_vertices(const Graph & g) -> VertexSet
    {
        auto result = g.empty_set();
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == g.min_degree())
                result.insert(v);
        return result;
    }

    auto check_private_partition(const Graph & g, const VertexSet & core, const FamilyWitness & w, int expected_size) -> bool
    {
        auto outside = core.complement();
        auto covered = g.empty_set();
        int total = 0;
        for (auto u : core) {
            auto found = w.private_neighbours.find(u);
            if (found == w.private_neighbours.end())
                return false;
            auto pn = g.empty_set();
            for (auto x : found->second) {
                if (x < 0 || x >= g.order() || pn.contains(x))
                    return false;
                pn.insert(x);
            }
            if (pn.size() != expected_size || pn != (g.neighbours(u) & outside))
                return false;
            if (covered.intersects(pn))
                return false;
            covered |= pn;
            total += pn.size();
        }
        if (w.private_neighbours.size() != static_cast<std::size_t>(core.size()))
            return false;
        if (covered != outside || total != outside.size())
            return false;
        for (auto x : outside)
            if ((g.neighbours(x) & core).size() != 1)
                return false;
        return true;
    }
}

auto packbound::recognize_omega(const Graph & g, int k) -> std::optional<FamilyWitness>
{
    if (k < 1)
        throw std::invalid_argument("omega needs k >= 1");
    auto s = CliqueCertificateSearch(g, k - 1, k).run();
    if (! s)
        return std::nullopt;
    return FamilyWitness{FamilyKind::omega, k, s, {}, {}, {}};
}

auto packbound::recognize_sigma(const Graph & g) -> std::optional<FamilyWitness>
{
    auto s = CliqueCertificateSearch(g, 1, 1).run();
    if (! s)
        return std::nullopt;
    return FamilyWitness{FamilyKind::sigma, 1, s, {}, {}, {}};
}

auto packbound::recognize_gamma(const Graph & g) -> std::optional<FamilyWitness>
{
    if (g.order() < 2 || ! g.is_connected())
        throw std::invalid_argument("recognize_gamma needs a connected graph with n >= 2");

    auto core = EfficientSetSearch(g, false, minimum_degree_vertices(g)).run();
    if (! core)
        return std::nullopt;

    FamilyWitness w{FamilyKind::gamma, g.min_degree() - 1, std::nullopt, {}, {}, {}};
    for (auto u : *core) {
        int partner = (g.neighbours(u) & *core).first();
        if (u < partner)
            w.matching_h.emplace_back(u, partner);
        w.private_neighbours[u] = (g.neighbours(u) - *core).members();
    }
    return w;
}

auto packbound::recognize_gamma_prime(const Graph & g) -> std::optional<FamilyWitness>
{
    if (g.order() < 1 || ! g.is_connected())
        throw std::invalid_argument("recognize_gamma_prime needs a connected nonempty graph");

    auto core = EfficientSetSearch(g, true, minimum_degree_vertices(g)).run();
    if (! core)
        return std::nullopt;

    FamilyWitness w{FamilyKind::gamma_prime, g.min_degree(), std::nullopt, {}, core->members(), {}};
    for (auto u : *core)
        w.private_neighbours[u] = g.neighbours(u).members();
    return w;
}

auto packbound::check_certificate(const Graph & g, const FamilyWitness & w) -> bool
{
    switch (w.family) {
        case FamilyKind::omega:
        case FamilyKind::sigma: {
            if (! w.clique_s || w.clique_s->universe() != g.order() || ! is_clique(g, *w.clique_s))
                return false;
            int regularity = w.family == FamilyKind::omega ? w.k - 1 : 1;
            int reach = w.family == FamilyKind::omega ? w.k : 1;
            if (w.family == FamilyKind::omega && w.k < 1)
                return false;
            auto outside = w.clique_s->complement();
            for (auto v : outside)
                if ((g.neighbours(v) & outside).size() != regularity)
                    return false;
            for (auto v : *w.clique_s)
                if ((g.neighbours(v) & outside).size() != reach)
                    return false;
            return true;
        }

        case FamilyKind::gamma: {
            if (w.matching_h.empty() || w.k != g.min_degree() - 1)
                return false;
            auto core = g.empty_set();
            for (const auto & [u, v] : w.matching_h) {
                if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
                    return false;
                if (core.contains(u) || core.contains(v) || ! g.adjacent(u, v))
                    return false;
                core.insert(u);
                core.insert(v);
            }
            for (auto u : core)
                if (g.degree(u) != g.min_degree() || (g.neighbours(u) & core).size() != 1)
                    return false;
            for (auto x : core.complement())
                if (g.degree(x) < w.k + 1)
                    return false;
            return check_private_partition(g, core, w, w.k);
        }

        case FamilyKind::gamma_prime: {
            if (w.independent_h.empty() || w.k != g.min_degree())
                return false;
            auto core = g.empty_set();
            for (auto u : w.independent_h) {
                if (u < 0 || u >= g.order() || core.contains(u))
                    return false;
                core.insert(u);
            }
            for (auto u : core)
                if (g.degree(u) != g.min_degree() || g.neighbours(u).intersects(core))
                    return false;
            return check_private_partition(g, core, w, w.k);
        }
    }
    return false;
}

namespace
{
    auto build_omega(const OmegaParams & p) -> Graph
    {
        if (p.k < 1 || p.clique_size < 0 || p.outside_size < 0)
            throw std::invalid_argument("omega: need k >= 1 and nonnegative sizes");
        if (static_cast<int>(p.attachments.size()) != p.clique_size)
            throw std::invalid_argument("omega: one attachment list per clique vertex");

        int s = p.clique_size;
        std::vector<Edge> edges;
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v)
                edges.push_back({u, v});

        std::vector<int> outside_degree(p.outside_size, 0);
        for (const auto & [u, v] : p.outside_edges) {
            if (u < 0 || v < 0 || u >= p.outside_size || v >= p.outside_size)
                throw std::invalid_argument("omega: outside edge out of range");
            ++outside_degree[u];
            ++outside_degree[v];
            edges.push_back({s + u, s + v});
        }
        for (auto d : outside_degree)
            if (d != p.k - 1)
                throw std::invalid_argument("omega: outside part is not (k-1)-regular");

        for (int i = 0; i < s; ++i) {
            std::set<int> targets(p.attachments[i].begin(), p.attachments[i].end());
            if (static_cast<int>(targets.size()) != p.k || static_cast<int>(p.attachments[i].size()) != p.k)
                throw std::invalid_argument("omega: every clique vertex needs exactly k distinct outside neighbours");
            for (auto x : targets) {
                if (x < 0 || x >= p.outside_size)
                    throw std::invalid_argument("omega: attachment out of range");
                edges.push_back({i, s + x});
            }
        }
        try {
            return Graph(s + p.outside_size, edges);
        }
        catch (const std::invalid_argument & e) {
            throw std::invalid_argument(std::string("omega: ") + e.what());
        }
    }

    auto build_sigma(const SigmaParams & p) -> Graph
    {
        if (p.clique_size < 0 || p.matching_edges < 0)
            throw std::invalid_argument("sigma: sizes must be nonnegative");
        if (static_cast<int>(p.attachments.size()) != p.clique_size)
            throw std::invalid_argument("sigma: one attachment per clique vertex");

        int s = p.clique_size, outside = 2 * p.matching_edges;
        std::vector<Edge> edges;
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v)
                edges.push_back({u, v});
        for (int i = 0; i < p.matching_edges; ++i)
            edges.push_back({s + 2 * i, s + 2 * i + 1});
        for (int i = 0; i < s; ++i) {
            if (p.attachments[i] < 0 || p.attachments[i] >= outside)
                throw std::invalid_argument("sigma: attachment out of range");
            edges.push_back({i, s + p.attachments[i]});
        }
        return Graph(s + outside, edges);
    }

    auto build_core_with_private(int core_size, const std::vector<Edge> & core_edges, int k,
            const std::vector<Edge> & private_edges, int min_private_degree, const std::string & name) -> Graph
    {
        int private_count = core_size * k;
        std::vector<Edge> edges = core_edges;
        for (int j = 0; j < private_count; ++j)
            edges.push_back({j / k, core_size + j});

        std::vector<int> degree(private_count, 1);
        for (const auto & [a, b] : private_edges) {
            if (a < 0 || b < 0 || a >= private_count || b >= private_count)
                throw std::invalid_argument(name + ": private edge out of range");
            ++degree[a];
            ++degree[b];
            edges.push_back({core_size + a, core_size + b});
        }
        for (int j = 0; j < private_count; ++j)
            if (degree[j] < min_private_degree)
                throw std::invalid_argument(name + ": private vertex " + std::to_string(j) + " has degree below "
                        + std::to_string(min_private_degree));

        Graph g;
        try {
            g = Graph(core_size + private_count, edges);
        }
        catch (const std::invalid_argument & e) {
            throw std::invalid_argument(name + ": " + e.what());
        }
        if (! g.is_connected())
            throw std::invalid_argument(name + ": result is disconnected");
        return g;
    }

    auto build_gamma(const GammaParams & p) -> Graph
    {
        if (p.t < 1 || p.k < 0)
            throw std::invalid_argument("gamma: need t >= 1 and k >= 0");
        std::vector<Edge> matching;
        for (int i = 0; i < p.t; ++i)
            matching.push_back({2 * i, 2 * i + 1});
        return build_core_with_private(2 * p.t, matching, p.k, p.private_edges, p.k + 1, "gamma");
    }

    auto build_gamma_prime(const GammaPrimeParams & p) -> Graph
    {
        if (p.t < 1 || p.k < 0)
            throw std::invalid_argument("gamma-prime: need t >= 1 and k >= 0");
        return build_core_with_private(p.t, {}, p.k, p.private_edges, p.k, "gamma-prime");
    }

    // Random connected edge set on `count` vertices in which every vertex has
    // degree at least `min_degree`: a random spanning tree, then patches for
    // deficient vertices, then a sprinkle of extra edges.
    auto random_private_edges(int count, int min_degree, std::mt19937_64 & rng) -> std::vector<Edge>
    {
        if (count <= 1)
            return {};
        if (min_degree > count - 1)
            throw std::invalid_argument("private part too small for the degree requirement");

        std::vector<std::vector<bool>> adjacent(count, std::vector<bool>(count, false));
        std::vector<int> degree(count, 0);
        std::vector<Edge> edges;
        auto add = [&] (int a, int b) {
            adjacent[a][b] = adjacent[b][a] = true;
            ++degree[a];
            ++degree[b];
            edges.push_back({std::min(a, b), std::max(a, b)});
        };

        std::vector<int> order(count);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 1; i < count; ++i) {
            std::uniform_int_distribution<int> pick(0, i - 1);
            add(order[i], order[pick(rng)]);
        }

        for (int v = 0; v < count; ++v)
            while (degree[v] < min_degree) {
                std::vector<int> options;
                for (int w = 0; w < count; ++w)
                    if (w != v && ! adjacent[v][w])
                        options.push_back(w);
                std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
                add(v, options[pick(rng)]);
            }

        std::bernoulli_distribution extra(0.15);
        for (int a = 0; a < count; ++a)
            for (int b = a + 1; b < count; ++b)
                if (! adjacent[a][b] && extra(rng))
                    add(a, b);

        std::sort(edges.begin(), edges.end());
        return edges;
    }

    // Pairing model with restarts; falls back to a circulant.
    auto random_regular(int count, int degree, std::mt19937_64 & rng) -> std::vector<Edge>
    {
        if (degree < 0 || degree >= std::max(count, 1) || (count * degree) % 2 != 0)
            throw std::invalid_argument("no " + std::to_string(degree) + "-regular graph on " + std::to_string(count) + " vertices");
        if (0 == degree)
            return {};

        for (int attempt = 0; attempt < 1000; ++attempt) {
            std::vector<int> points;
            for (int v = 0; v < count; ++v)
                for (int i = 0; i < degree; ++i)
                    points.push_back(v);
            std::shuffle(points.begin(), points.end(), rng);
            std::set<Edge> seen;
            bool ok = true;
            for (std::size_t i = 0; ok && i < points.size(); i += 2) {
                int a = std::min(points[i], points[i + 1]), b = std::max(points[i], points[i + 1]);
                ok = a != b && seen.insert({a, b}).second;
            }
            if (ok)
                return {seen.begin(), seen.end()};
        }

        std::set<Edge> edges;
        for (int v = 0; v < count; ++v)
            for (int step = 1; step <= degree / 2; ++step) {
                int w = (v + step) % count;
                edges.insert({std::min(v, w), std::max(v, w)});
            }
        if (degree % 2 == 1)
            for (int v = 0; v < count / 2; ++v)
                edges.insert({v, v + count / 2});
        return {edges.begin(), edges.end()};
    }
}

auto packbound::generate_family(const FamilyParams & params) -> Graph
{
    return std::visit([] (const auto & p) -> Graph {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, OmegaParams>)
            return build_omega(p);
        else if constexpr (std::is_same_v<T, SigmaParams>)
            return build_sigma(p);
        else if constexpr (std::is_same_v<T, GammaParams>)
            return build_gamma(p);
        else
            return build_gamma_prime(p);
    }, params);
}

auto packbound::sample_omega(int k, std::mt19937_64 & rng) -> OmegaParams
{
    if (k < 1)
        throw std::invalid_argument("omega: need k >= 1");

    OmegaParams p;
    p.k = k;
    p.clique_size = std::uniform_int_distribution<int>(0, 3)(rng);
    int outside = std::uniform_int_distribution<int>(std::max(k, 1), k + 5)(rng);
    if ((outside * (k - 1)) % 2 != 0)
        ++outside;
    p.outside_size = outside;
    p.outside_edges = random_regular(outside, k - 1, rng);

    std::vector<int> pool(outside);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < p.clique_size; ++i) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> chosen(pool.begin(), pool.begin() + k);
        std::sort(chosen.begin(), chosen.end());
        p.attachments.push_back(chosen);
    }
    return p;
}

auto packbound::sample_sigma(std::mt19937_64 & rng) -> SigmaParams
{
    SigmaParams p;
    p.clique_size = std::uniform_int_distribution<int>(0, 4)(rng);
    p.matching_edges = std::uniform_int_distribution<int>(1, 4)(rng);
    std::uniform_int_distribution<int> target(0, 2 * p.matching_edges - 1);
    for (int i = 0; i < p.clique_size; ++i)
        p.attachments.push_back(target(rng));
    return p;
}

auto packbound::sample_gamma(int t, int k, std::mt19937_64 & rng) -> GammaParams
{
    if (t < 1 || k < 0 || (0 == k && t > 1))
        throw std::invalid_argument("gamma: need t >= 1, k >= 0, and t = 1 when k = 0");
    return GammaParams{t, k, random_private_edges(2 * t * k, k, rng)};
}

auto packbound::sample_gamma_prime(int t, int k, std::mt19937_64 & rng) -> GammaPrimeParams
{
    if (t < 1 || k < 0 || (0 == k && t > 1))
        throw std::invalid_argument("gamma-prime: need t >= 1, k >= 0, and t = 1 when k = 0");
    return GammaPrimeParams{t, k, random_private_edges(t * k, std::max(k - 1, 0), rng)};
}
