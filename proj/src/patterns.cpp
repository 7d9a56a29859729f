#include "chibound/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chibound {

bool embedding_valid(const Graph& host, const Embedding& e) {
    const Graph& p = e.pattern.graph;
    const int pn = p.vertex_count();
    if (static_cast<int>(e.map.size()) != pn) return false;
    for (int a = 0; a < pn; ++a) {
        int ha = e.map[static_cast<size_t>(a)];
        if (ha < 0 || ha >= host.vertex_count()) return false;
        for (int b = a + 1; b < pn; ++b) {
            int hb = e.map[static_cast<size_t>(b)];
            if (ha == hb) return false;
            if (p.adjacent(a, b) != host.adjacent(ha, hb)) return false;
        }
    }
    return true;
}

namespace {

bool extend(const Graph& host, const Graph& pat, const std::vector<int>& order,
            size_t depth, std::vector<int>& image, Bitset& used) {
    if (depth == order.size()) return true;
    const int pv = order[depth];
    const int pdeg = pat.degree(pv);
    for (int hv = 0; hv < host.vertex_count(); ++hv) {
        if (used.test(hv)) continue;
        if (host.degree(hv) < pdeg) continue;
        bool ok = true;
        for (size_t t = 0; t < depth; ++t) {
            const int pu = order[t];
            if (pat.adjacent(pv, pu) != host.adjacent(hv, image[static_cast<size_t>(pu)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[static_cast<size_t>(pv)] = hv;
        used.set(hv);
        if (extend(host, pat, order, depth + 1, image, used)) return true;
        used.reset(hv);
    }
    return false;
}

} // namespace

std::optional<Embedding> find_induced(const Graph& host, const PatternSpec& pattern) {
    const Graph& pat = pattern.graph;
    const int pn = pat.vertex_count();
    if (pn < 1) throw std::invalid_argument("pattern must have at least one vertex");
    if (pn > host.vertex_count()) return std::nullopt;

    std::vector<int> order(static_cast<size_t>(pn));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pat.degree(a) > pat.degree(b); });

    std::vector<int> image(static_cast<size_t>(pn), -1);
    Bitset used(host.vertex_count());
    if (!extend(host, pat, order, 0, image, used)) return std::nullopt;
    return Embedding{pattern, image};
}

FreeVerdict is_free(const Graph& host, const std::vector<PatternSpec>& family) {
    for (const auto& p : family) {
        if (auto e = find_induced(host, p)) return FreeVerdict{false, std::move(e)};
    }
    return FreeVerdict{true, std::nullopt};
}

bool anchor_valid(const Graph& g, const Anchor2K2& a) {
    const int vs[4] = {a.v1, a.v2, a.v3, a.v4};
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j]) return false;
    return g.adjacent(a.v1, a.v2) && g.adjacent(a.v3, a.v4) &&
           !g.adjacent(a.v1, a.v3) && !g.adjacent(a.v1, a.v4) &&
           !g.adjacent(a.v2, a.v3) && !g.adjacent(a.v2, a.v4);
}

std::vector<Anchor2K2> find_all_2k2(const Graph& host, int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    const auto es = host.edges();
    std::vector<Anchor2K2> out;
    for (size_t i = 0; i < es.size(); ++i) {
        const auto [a, b] = es[i];
        for (size_t j = i + 1; j < es.size(); ++j) {
            const auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (host.adjacent(a, c) || host.adjacent(a, d) || host.adjacent(b, c) ||
                host.adjacent(b, d))
                continue;
            out.push_back(Anchor2K2{a, b, c, d});
            if (static_cast<int>(out.size()) >= cap) return out;
        }
    }
    return out;
}

namespace {

PatternSpec fixed_pattern(const std::string& name) {
    if (name == "2k2")
        return {name, Graph::from_edges(4, {{0, 1}, {2, 3}}, name)};
    if (name == "p3up2")
        return {name, Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}}, name)};
    if (name == "diamond")
        return {name, join(make_complete(1), make_path(3)).with_name(name)};
    if (name == "w4")
        return {name, join(make_complete(1), make_cycle(4)).with_name(name)};
    if (name == "house")
        return {name, complement(make_path(5)).with_name(name)};
    if (name == "crown") {
        // K_{1,3}: center 0, leaves 1..3.
        Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        return {name, join(make_complete(1), star).with_name(name)};
    }
    if (name == "hvn") {
        // K4 on 0..3 plus vertex 4 adjacent to exactly two of them.
        return {name, Graph::from_edges(
                          5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}},
                          name)};
    }
    throw std::invalid_argument("unknown pattern: " + name);
}

} // namespace

PatternSpec catalog_pattern(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'c' || name[0] == 'k' || name[0] == 'e') &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        const int k = std::stoi(name.substr(1));
        switch (name[0]) {
        case 'p': return {name, make_path(k).with_name(name)};
        case 'c': return {name, make_cycle(k).with_name(name)};
        case 'k': return {name, make_complete(k).with_name(name)};
        default: return {name, make_empty(k).with_name(name)};
        }
    }
    return fixed_pattern(name);
}

std::vector<std::string> catalog_names() {
    return {"2k2", "p3up2", "diamond", "w4", "house", "crown", "hvn",
            "p<k>", "c<k>", "k<k>", "e<k>"};
}

} // namespace chibound
