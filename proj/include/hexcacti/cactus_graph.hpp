#ifndef HEXCACTI_CACTUS_GRAPH_HPP
#define HEXCACTI_CACTUS_GRAPH_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace hexcacti {

// How a hexagon is glued onto the previous one: its identification vertex sits
// at this cyclic distance from the previous hexagon's cut vertex.
enum class Attachment { Ortho = 1, Meta = 2, Para = 3 };

inline int attachment_distance(Attachment a) { return static_cast<int>(a); }
Attachment attachment_from_distance(int d);
char attachment_char(Attachment a);          // 'o' / 'm' / 'p'
Attachment attachment_from_char(char c);     // case-insensitive

// One realization of the n-hexagon random chain. The first two hexagons are
// forced, so `choices` governs hexagons 3..n only.
struct AttachmentSequence {
    int n = 0;
    std::vector<Attachment> choices;

    AttachmentSequence() = default;
    AttachmentSequence(int n_, std::vector<Attachment> choices_);

    // "pom" etc., alphabet {o,m,p}; length must be max(n-2, 0).
    static AttachmentSequence from_string(int n, const std::string& s);
    std::string str() const;  // lowercase
};

AttachmentSequence reverse_sequence(const AttachmentSequence& seq);

// Which vertex of the pendant path x1..x5 gets identified with the host graph.
enum class AuxVariant { Prime = 1, Tilde = 2, Hat = 3 };

struct CactusGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    // 6-tuples in clockwise order starting at each hexagon's entry cut vertex.
    std::vector<std::array<int, 6>> hexagons;
    std::vector<int> cut_vertices;
    // Entry cut vertex of the last hexagon (the attachment anchor); -1 if empty.
    int terminal_cut = -1;
};

CactusGraph build_chain(const AttachmentSequence& seq);

// Chain plus a pendant path on five vertices, identified at x1/x2/x3 per the
// variant, at cyclic distance `pendant` from the last hexagon's cut vertex.
// With n = 0 the result is exactly the path P5.
CactusGraph build_aux(const AttachmentSequence& seq, Attachment pendant,
                      AuxVariant variant);

std::string to_dot(const CactusGraph& g);

}  // namespace hexcacti

#endif
