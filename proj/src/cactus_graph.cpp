#include "hexcacti/cactus_graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hexcacti {

Attachment attachment_from_distance(int d) {
    if (d < 1 || d > 3)
        throw std::invalid_argument("attachment distance must be 1, 2 or 3");
    return static_cast<Attachment>(d);
}

char attachment_char(Attachment a) {
    switch (a) {
        case Attachment::Ortho: return 'o';
        case Attachment::Meta: return 'm';
        case Attachment::Para: return 'p';
    }
    throw std::logic_error("bad attachment");
}

Attachment attachment_from_char(char c) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'o': return Attachment::Ortho;
        case 'm': return Attachment::Meta;
        case 'p': return Attachment::Para;
    }
    throw std::invalid_argument(std::string("bad attachment character '") + c +
                                "' (expected o, m or p)");
}

AttachmentSequence::AttachmentSequence(int n_, std::vector<Attachment> choices_)
    : n(n_), choices(std::move(choices_)) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    size_t want = n >= 2 ? static_cast<size_t>(n - 2) : 0u;
    if (choices.size() != want)
        throw std::invalid_argument("attachment sequence for n=" +
                                    std::to_string(n) + " must have " +
                                    std::to_string(want) + " choices, got " +
                                    std::to_string(choices.size()));
}

AttachmentSequence AttachmentSequence::from_string(int n, const std::string& s) {
    std::vector<Attachment> ch;
    ch.reserve(s.size());
    for (char c : s) ch.push_back(attachment_from_char(c));
    return AttachmentSequence(n, std::move(ch));
}

std::string AttachmentSequence::str() const {
    std::string s;
    s.reserve(choices.size());
    for (Attachment a : choices) s.push_back(attachment_char(a));
    return s;
}

AttachmentSequence reverse_sequence(const AttachmentSequence& seq) {
    std::vector<Attachment> rev(seq.choices.rbegin(), seq.choices.rend());
    return AttachmentSequence(seq.n, std::move(rev));
}

namespace {

// Exit position of hexagon h (0-based) within its own ring. Hexagon 0 has no
// entry; its designated cut vertex is ring position 0. For later hexagons the
// attachment distance of the next hexagon picks the clockwise candidate.
int exit_position(const AttachmentSequence& seq, int h) {
    if (h == 0) return 0;
    return attachment_distance(seq.choices[h - 1]);
}

}  // namespace

CactusGraph build_chain(const AttachmentSequence& seq) {
    CactusGraph g;
    if (seq.n == 0) return g;
    int entry = -1;
    for (int h = 0; h < seq.n; ++h) {
        std::array<int, 6> ring;
        int start = h == 0 ? 0 : 1;
        if (h > 0) ring[0] = entry;
        for (int i = start; i < 6; ++i) ring[i] = g.vertex_count++;
        for (int i = 0; i < 6; ++i)
            g.edges.emplace_back(ring[i], ring[(i + 1) % 6]);
        g.hexagons.push_back(ring);
        g.terminal_cut = ring[0];
        if (h + 1 < seq.n) {
            entry = ring[exit_position(seq, h)];
            g.cut_vertices.push_back(entry);
        }
    }
    return g;
}

CactusGraph build_aux(const AttachmentSequence& seq, Attachment pendant,
                      AuxVariant variant) {
    CactusGraph g = build_chain(seq);
    int identified = static_cast<int>(variant) - 1;  // index of x1/x2/x3
    std::array<int, 5> path;
    if (seq.n == 0) {
        for (int i = 0; i < 5; ++i) path[i] = g.vertex_count++;
    } else {
        const auto& last = g.hexagons.back();
        int host = last[attachment_distance(pendant)];
        for (int i = 0; i < 5; ++i)
            path[i] = i == identified ? host : g.vertex_count++;
        g.cut_vertices.push_back(host);
    }
    for (int i = 0; i + 1 < 5; ++i) g.edges.emplace_back(path[i], path[i + 1]);
    return g;
}

std::string to_dot(const CactusGraph& g) {
    std::ostringstream out;
    out << "graph cactus {\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        bool cut = std::find(g.cut_vertices.begin(), g.cut_vertices.end(), v) !=
                   g.cut_vertices.end();
        out << "  v" << v;
        if (cut) out << " [shape=doublecircle, xlabel=\"cut\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace hexcacti
