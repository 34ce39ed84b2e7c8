#ifndef HEXCACTI_EXACT_COUNT_HPP
#define HEXCACTI_EXACT_COUNT_HPP

#include <stdexcept>

#include "hexcacti/cactus_graph.hpp"
#include "hexcacti/rational.hpp"

namespace hexcacti {

enum class IndexKind { Hosoya, MerrifieldSimmons };

using BigCount = BigInt;

struct SizeLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Conditional counts across one hexagon: e[x][y] = matchings (independent
// sets) of a single hexagon whose entry cut vertex has status x and whose exit
// cut vertex, at cyclic distance d, has status y. Status 1 means covered by a
// hexagon edge (Hosoya) or in the set (Merrifield-Simmons).
struct TransferMatrix {
    BigCount e[2][2];
    BigCount row_sum(int x) const { return e[x][0] + e[x][1]; }
    BigCount total() const { return row_sum(0) + row_sum(1); }
};

// Exhaustive subset enumeration with early pruning. Bounds: 26 edges (Hosoya)
// or 26 vertices (Merrifield-Simmons); throws SizeLimitExceeded beyond that.
BigCount count_brute(const CactusGraph& g, IndexKind kind);

// Deletion-identity recursion (m(G) over an exposed/matched vertex, i(G) over
// an in/out vertex) with memoization and per-component multiplication.
// Independent of both count_brute and count_chain. Graphs up to 64 vertices.
BigCount count_recursive(const CactusGraph& g, IndexKind kind);

// Precomputed by brute force over a single hexagon, cached per (d, kind).
const TransferMatrix& hexagon_transfer(Attachment d, IndexKind kind);

// Linear-time chain DP propagating a 2-vector of counts (cut vertex
// unused/used) through the transfer matrices.
BigCount count_chain(const AttachmentSequence& seq, IndexKind kind);

}  // namespace hexcacti

#endif
