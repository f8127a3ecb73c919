#pragma once

#include "nanoword/word.hpp"

namespace nanoword {

enum class BaseFamily { K, L, KF };

/// Generators for the reference curves the basic invariants are pinned on.
///
///   K family (closed):  K0 = figure eight (word AA, index 0),
///                       K1 = embedded circle (empty word, index 1),
///                       K_{i+1} = circle with i kinks.
///   L family (long):    L_i = |i| kinks whose signs sum to i.
///   KF family (front):  K_{i,k} = the K_i crossing pattern plus 2k cusps,
///                       all with positive subscript so the Maslov index
///                       is 2k; half the cusps are a+ and half b+, which
///                       pins the front basic-invariant table.
///
/// `cusps` is only meaningful for KF. K and KF reject negative index.
EtaleWord base_curve(BaseFamily family, long long index, int cusps = 0);

}  // namespace nanoword
