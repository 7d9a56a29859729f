#ifndef CHIBOUND_PATTERNS_HPP
#define CHIBOUND_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

struct PatternSpec {
    std::string name;
    Graph graph;
};

/// Witness of an induced occurrence: map[p] is the host vertex playing
/// pattern vertex p. Induced means edges and non-edges both correspond.
struct Embedding {
    PatternSpec pattern;
    std::vector<int> map;
};

/// Recheck the induced-correspondence invariant of an embedding.
bool embedding_valid(const Graph& host, const Embedding& e);

/// Deterministic induced-subgraph search: backtracking over pattern
/// vertices in degree-descending order (index tie-break); host candidates
/// are tried in increasing index, so the first hit is the
/// lexicographically smallest mapped tuple in that search order.
std::optional<Embedding> find_induced(const Graph& host, const PatternSpec& pattern);

struct FreeVerdict {
    bool free = true;
    std::optional<Embedding> certificate;
};

/// free == true iff no family member occurs induced; otherwise carries
/// the first certificate found (family order, then search order).
FreeVerdict is_free(const Graph& host, const std::vector<PatternSpec>& family);

/// An induced 2K2: v1~v2, v3~v4 and no edge between the two pairs.
struct Anchor2K2 {
    int v1, v2, v3, v4;
    bool operator==(const Anchor2K2&) const = default;
};

bool anchor_valid(const Graph& g, const Anchor2K2& a);

/// Enumerates induced 2K2s as ordered anchors (v1<v2, v3<v4, (v1,v2)
/// lexicographically before (v3,v4)), deduplicated, truncated at cap.
/// An empty result means the host is 2K2-free.
std::vector<Anchor2K2> find_all_2k2(const Graph& host, int cap);

/// Built-in pattern catalog. Fixed names: 2k2, p3up2, diamond, w4, house,
/// crown, hvn; parametric shorthands: p<k>, c<k>, k<k>, e<k>.
PatternSpec catalog_pattern(const std::string& name);
std::vector<std::string> catalog_names();

} // namespace chibound

#endif
