#pragma once

#include "nanoword/word.hpp"

namespace nanoword {

struct GenusResult {
    int genus = 0;
    int faces = 0;
};

/// Minimal genus of a closed surface carrying the curve the word encodes,
/// via the ribbon graph of the word: one 4-valent vertex per crossing,
/// vertex rotation chosen by the projection sign, edges from consecutive
/// occurrences (cyclically), faces traced through the rotation system.
/// Long words are closed through the point at infinity; cusp letters of
/// fronts are ignored. The empty word has genus 0.
GenusResult genus_detail(const EtaleWord& w);

int genus(const EtaleWord& w);

inline bool is_planar(const EtaleWord& w) { return genus(w) == 0; }

}  // namespace nanoword
