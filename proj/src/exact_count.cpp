#include "hexcacti/exact_count.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace hexcacti {

namespace {

constexpr int kBruteLimit = 26;

std::vector<std::uint64_t> adjacency_masks(const CactusGraph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count, 0);
    for (const auto& [u, v] : g.edges) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

// --- brute force: include/exclude recursion in lexicographic order ---------

BigCount brute_matchings(const std::vector<std::pair<int, int>>& edges,
                         size_t idx, std::uint64_t covered) {
    if (idx == edges.size()) return 1;
    BigCount total = brute_matchings(edges, idx + 1, covered);
    auto [u, v] = edges[idx];
    std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if ((covered & mask) == 0)
        total += brute_matchings(edges, idx + 1, covered | mask);
    return total;
}

BigCount brute_independent(const std::vector<std::uint64_t>& adj, int v,
                           std::uint64_t chosen) {
    if (v == static_cast<int>(adj.size())) return 1;
    BigCount total = brute_independent(adj, v + 1, chosen);
    if ((adj[v] & chosen) == 0)
        total += brute_independent(adj, v + 1, chosen | (std::uint64_t{1} << v));
    return total;
}

// --- deletion-identity recursion with memoization --------------------------

struct DeletionCounter {
    const std::vector<std::uint64_t>& adj;
    IndexKind kind;
    std::unordered_map<std::uint64_t, BigCount> memo;

    BigCount count(std::uint64_t alive) {
        if (alive == 0) return 1;
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;

        // Split off the connected component of the lowest alive vertex.
        int v0 = std::countr_zero(alive);
        std::uint64_t comp = std::uint64_t{1} << v0, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v] & alive & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        BigCount result;
        if (comp != alive) {
            result = count(comp) * count(alive & ~comp);
        } else {
            // Pick the alive vertex of maximum alive degree.
            int best = -1, best_deg = -1;
            for (std::uint64_t m = alive; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                int deg = std::popcount(adj[v] & alive);
                if (deg > best_deg) { best_deg = deg; best = v; }
            }
            std::uint64_t vbit = std::uint64_t{1} << best;
            if (best_deg == 0) {
                // Isolated vertex (single-vertex component).
                result = kind == IndexKind::MerrifieldSimmons ? 2 : 1;
            } else if (kind == IndexKind::MerrifieldSimmons) {
                // i(G) = i(G - v) + i(G - N[v])
                result = count(alive & ~vbit) +
                         count(alive & ~(vbit | adj[best]));
            } else {
                // m(G) = m(G - v) + sum over neighbors u of m(G - v - u)
                result = count(alive & ~vbit);
                for (std::uint64_t m = adj[best] & alive; m;) {
                    int u = std::countr_zero(m);
                    m &= m - 1;
                    result += count(alive & ~vbit & ~(std::uint64_t{1} << u));
                }
            }
        }
        memo.emplace(alive, result);
        return result;
    }
};

}  // namespace

BigCount count_brute(const CactusGraph& g, IndexKind kind) {
    if (kind == IndexKind::Hosoya) {
        if (g.edges.size() > kBruteLimit)
            throw SizeLimitExceeded("count_brute: more than 26 edges");
        return brute_matchings(g.edges, 0, 0);
    }
    if (g.vertex_count > kBruteLimit)
        throw SizeLimitExceeded("count_brute: more than 26 vertices");
    return brute_independent(adjacency_masks(g), 0, 0);
}

BigCount count_recursive(const CactusGraph& g, IndexKind kind) {
    if (g.vertex_count > 64)
        throw SizeLimitExceeded("count_recursive: more than 64 vertices");
    if (g.vertex_count == 0) return 1;
    auto adj = adjacency_masks(g);
    DeletionCounter counter{adj, kind, {}};
    std::uint64_t all = g.vertex_count == 64
                            ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << g.vertex_count) - 1;
    return counter.count(all);
}

const TransferMatrix& hexagon_transfer(Attachment d, IndexKind kind) {
    static const auto cache = [] {
        std::array<std::array<TransferMatrix, 2>, 3> c{};
        for (int dist = 1; dist <= 3; ++dist) {
            for (int k = 0; k < 2; ++k) {
                TransferMatrix& t = c[dist - 1][k];
                if (k == static_cast<int>(IndexKind::Hosoya)) {
                    for (unsigned sub = 0; sub < 64; ++sub) {
                        unsigned covered = 0;
                        bool ok = true;
                        for (int e = 0; e < 6 && ok; ++e) {
                            if (!(sub >> e & 1)) continue;
                            unsigned mask = (1u << e) | (1u << (e + 1) % 6);
                            if (covered & mask) ok = false;
                            covered |= mask;
                        }
                        if (ok) t.e[covered & 1][covered >> dist & 1] += 1;
                    }
                } else {
                    for (unsigned sub = 0; sub < 64; ++sub) {
                        bool ok = true;
                        for (int v = 0; v < 6 && ok; ++v)
                            if ((sub >> v & 1) && (sub >> (v + 1) % 6 & 1))
                                ok = false;
                        if (ok) t.e[sub & 1][sub >> dist & 1] += 1;
                    }
                }
            }
        }
        return c;
    }();
    return cache[attachment_distance(d) - 1][static_cast<int>(kind)];
}

BigCount count_chain(const AttachmentSequence& seq, IndexKind kind) {
    if (seq.n == 0) return 1;
    const TransferMatrix& any = hexagon_transfer(Attachment::Para, kind);
    // Counts of one hexagon by the status of a single marked vertex:
    // (8, 10) for matchings, (13, 5) for independent sets.
    BigCount h0 = any.row_sum(0), h1 = any.row_sum(1);
    if (seq.n == 1) return h0 + h1;

    bool hosoya = kind == IndexKind::Hosoya;
    BigCount v0 = h0, v1 = h1;  // status of the first cut vertex
    for (Attachment d : seq.choices) {
        const TransferMatrix& t = hexagon_transfer(d, kind);
        BigCount n0, n1;
        if (hosoya) {
            // A covered cut vertex may be covered from one side only.
            n0 = v0 * (t.e[0][0] + t.e[1][0]) + v1 * t.e[0][0];
            n1 = v0 * (t.e[0][1] + t.e[1][1]) + v1 * t.e[0][1];
        } else {
            // Set membership of the cut vertex must agree on both sides.
            n0 = v0 * t.e[0][0] + v1 * t.e[1][0];
            n1 = v0 * t.e[0][1] + v1 * t.e[1][1];
        }
        v0 = std::move(n0);
        v1 = std::move(n1);
    }
    if (hosoya) return BigCount(v0 * (h0 + h1) + v1 * h0);
    return BigCount(v0 * h0 + v1 * h1);
}

}  // namespace hexcacti
