#pragma once

// Test-only reference implementations, kept independent of the library
// code paths they check.

#include <algorithm>
#include <array>
#include <functional>
#include <vector>

#include "nanoword/genus.hpp"
#include "nanoword/pairing.hpp"

namespace nanoword::oracle {

// Pairing by brute force: try every injective kind-respecting assignment
// of roles to letters and compare the explicit restriction sequence.
inline RingElem brute_force_pairing(const Pattern& v, const EtaleWord& w, PairingMode mode) {
    Pattern p = canonical_pattern(v);
    int nroles = static_cast<int>(p.roles.size());
    std::vector<int> letter_ids;
    for (size_t i = 0; i < w.letters().size(); ++i) letter_ids.push_back(static_cast<int>(i));

    RingElem total;
    std::vector<int> assign(nroles, -1);
    std::vector<bool> used(w.letters().size(), false);

    auto restriction_matches = [&]() {
        std::vector<int> expect;  // role at each kept position
        for (int id : w.occurrences()) {
            for (int r = 0; r < nroles; ++r)
                if (assign[r] == id) expect.push_back(r);
        }
        if (expect.size() != p.seq.size()) return false;
        return std::equal(expect.begin(), expect.end(), p.seq.begin());
    };

    std::function<void(int)> rec = [&](int role) {
        if (role == nroles) {
            if (!restriction_matches()) return;
            RingElem weight = RingElem(Rational(1));
            for (int r = 0; r < nroles; ++r) {
                Proj proj = w.letters()[assign[r]].proj;
                RingElem base = mode == PairingMode::sign ? RingElem(Rational(sign_of(proj)))
                                                          : rho(proj);
                for (int d = 0; d < p.roles[r].dim; ++d) weight *= base;
            }
            total += weight;
            return;
        }
        for (int id : letter_ids) {
            if (used[id]) continue;
            if ((w.letters()[id].kind == LetterKind::cusp) !=
                (p.roles[role].kind == LetterKind::cusp))
                continue;
            used[id] = true;
            assign[role] = id;
            rec(role + 1);
            used[id] = false;
            assign[role] = -1;
        }
    };
    rec(0);
    return total;
}

// Face count of the carrier surface by walking arc sides through compass
// frames at each crossing, instead of the library's dart permutation.
inline int side_walk_faces(const EtaleWord& w) {
    std::vector<int> vertex_of_pos, sign_of_vertex, pass_of_pos;
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
    int L = static_cast<int>(vertex_of_pos.size());
    if (L == 0) return 2;

    // Arm = (arc id, end). end 0: the arc starts here (tail); 1: ends here.
    struct Arm {
        int arc;
        int end;
    };
    // arms[v] in ccw compass order E, N, W, S.
    int n = static_cast<int>(sign_of_vertex.size());
    std::vector<std::array<Arm, 4>> arms(n);
    for (int pos = 0; pos < L; ++pos) {
        int v = vertex_of_pos[pos];
        int in_arc = (pos + L - 1) % L;
        int out_arc = pos;
        if (pass_of_pos[pos] == 0) {
            arms[v][2] = {in_arc, 1};   // W: first pass arrives from the west
            arms[v][0] = {out_arc, 0};  // E
        } else if (sign_of_vertex[v] > 0) {
            arms[v][3] = {in_arc, 1};   // S: second strand runs south to north
            arms[v][1] = {out_arc, 0};  // N
        } else {
            arms[v][1] = {in_arc, 1};   // N: second strand runs north to south
            arms[v][3] = {out_arc, 0};  // S
        }
    }

    // State: 2 per arc; 0 = forward (left side), 1 = backward (right side).
    auto next_state = [&](int state) {
        int arc = state / 2, dir = state % 2;
        int arrive_pos = dir == 0 ? (arc + 1) % L : arc;
        int v = vertex_of_pos[arrive_pos];
        int arrive_end = dir == 0 ? 1 : 0;
        int idx = -1;
        for (int i = 0; i < 4; ++i)
            if (arms[v][i].arc == arc && arms[v][i].end == arrive_end) idx = i;
        const Arm& leave = arms[v][(idx + 1) % 4];
        return leave.arc * 2 + (leave.end == 0 ? 0 : 1);
    };

    std::vector<bool> seen(2 * L, false);
    int faces = 0;
    for (int s0 = 0; s0 < 2 * L; ++s0) {
        if (seen[s0]) continue;
        ++faces;
        for (int s = s0; !seen[s]; s = next_state(s)) seen[s] = true;
    }
    return faces;
}

inline int side_walk_genus(const EtaleWord& w) {
    int n = 0;
    for (const Letter& l : w.letters()) n += l.kind == LetterKind::crossing;
    if (n == 0) return 0;
    int euler = n - 2 * n + side_walk_faces(w);
    return (2 - euler) / 2;
}

}  // namespace nanoword::oracle
