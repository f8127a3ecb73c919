#include "nanoword/genus.hpp"

#include <vector>

namespace nanoword {

namespace {

// Darts of a crossing vertex in counterclockwise order:
//   0: first-pass in, 2: first-pass out (the strand runs straight through),
//   1/3: second-pass in/out, swapped by the projection sign. The pairing
// of sign values to the two mirror rotations is the one that makes every
// kink word planar and is compatible with the sign flip of the base point
// move (so genus is a curve invariant, not just a word invariant).
struct Darts {
    int in1, out1, in2, out2;
};

Darts darts_for(int sign) {
    if (sign > 0) return {0, 2, 1, 3};
    return {0, 2, 3, 1};
}

}  // namespace

GenusResult genus_detail(const EtaleWord& w) {
    // Crossing subsequence only; fronts drop their cusps, long words are
    // read as closed.
    std::vector<int> vertex_of_pos;   // position -> vertex id
    std::vector<int> sign_of_vertex;
    std::vector<int> pass_of_pos;     // 0 = first visit, 1 = second
    {
        std::vector<int> vertex_of_letter(w.letters().size(), -1);
        for (int id : w.occurrences()) {
            const Letter& l = w.letters()[id];
            if (l.kind == LetterKind::cusp) continue;
            if (vertex_of_letter[id] < 0) {
                vertex_of_letter[id] = static_cast<int>(sign_of_vertex.size());
                sign_of_vertex.push_back(sign_of(l.proj));
                pass_of_pos.push_back(0);
            } else {
                pass_of_pos.push_back(1);
            }
            vertex_of_pos.push_back(vertex_of_letter[id]);
        }
    }
    int n = static_cast<int>(sign_of_vertex.size());
    if (n == 0) return {0, 2};  // embedded circle on the sphere

    int L = static_cast<int>(vertex_of_pos.size());
    // Global dart ids: 4v + slot. alpha pairs darts along word arcs.
    std::vector<int> alpha(4 * n, -1);
    auto io = [&](int pos) {
        Darts d = darts_for(sign_of_vertex[vertex_of_pos[pos]]);
        int v = vertex_of_pos[pos];
        if (pass_of_pos[pos] == 0) return std::pair<int, int>{4 * v + d.in1, 4 * v + d.out1};
        return std::pair<int, int>{4 * v + d.in2, 4 * v + d.out2};
    };
    for (int p = 0; p < L; ++p) {
        int out = io(p).second;
        int in = io((p + 1) % L).first;
        alpha[out] = in;
        alpha[in] = out;
    }

    // Faces: orbits of sigma(alpha(d)) with sigma the ccw step at a vertex.
    std::vector<bool> seen(4 * n, false);
    int faces = 0;
    for (int d0 = 0; d0 < 4 * n; ++d0) {
        if (seen[d0]) continue;
        ++faces;
        int d = d0;
        while (!seen[d]) {
            seen[d] = true;
            int a = alpha[d];
            d = (a / 4) * 4 + (a % 4 + 1) % 4;
        }
    }

    int euler = n - 2 * n + faces;
    return {(2 - euler) / 2, faces};
}

int genus(const EtaleWord& w) { return genus_detail(w).genus; }

}  // namespace nanoword
