#pragma once

// Reference data for the exceptional types, kept in one place so every
// transcribed value has a single point of review: the v_i generator words,
// the strong-minuscule counts per node, and the Demazure dimension table.
// Classical-family closed forms live in closed_form_count().

#include <array>
#include <vector>

namespace smw::tables {

struct ViEntry {
  const char* type;
  int i;
  std::array<int, 8> word;  // zero-padded
  int len;
};

inline constexpr ViEntry kExceptionalVi[] = {
    {"E6", 1, {6, 5, 4, 3, 2, 1}, 6},
    {"E6", 2, {6, 5, 4, 3, 1, 2}, 6},
    {"E6", 3, {6, 5, 4, 1, 2, 3}, 6},
    {"E6", 4, {6, 5, 1, 2, 3, 4}, 6},
    {"E6", 5, {6, 1, 2, 3, 4, 5}, 6},
    {"E6", 6, {1, 2, 5, 4, 3, 6}, 6},
    {"E7", 1, {7, 6, 5, 4, 3, 2, 1}, 7},
    {"E7", 2, {7, 6, 5, 4, 3, 1, 2}, 7},
    {"E7", 3, {7, 6, 5, 4, 1, 2, 3}, 7},
    {"E7", 4, {7, 6, 5, 1, 2, 3, 4}, 7},
    {"E7", 5, {7, 6, 1, 2, 3, 4, 5}, 7},
    {"E7", 6, {7, 1, 2, 3, 4, 5, 6}, 7},
    {"E7", 7, {1, 2, 6, 5, 4, 3, 7}, 7},
    {"E8", 1, {8, 7, 6, 5, 4, 3, 2, 1}, 8},
    {"E8", 2, {8, 7, 6, 5, 4, 3, 1, 2}, 8},
    {"E8", 3, {8, 7, 6, 5, 4, 1, 2, 3}, 8},
    {"E8", 4, {8, 7, 6, 5, 1, 2, 3, 4}, 8},
    {"E8", 5, {8, 7, 6, 1, 2, 3, 4, 5}, 8},
    {"E8", 6, {8, 7, 1, 2, 3, 4, 5, 6}, 8},
    {"E8", 7, {8, 1, 2, 3, 4, 5, 6, 7}, 8},
    {"E8", 8, {1, 2, 7, 6, 5, 4, 3, 8}, 8},
    {"F4", 3, {1, 2, 4, 3}, 4},
    {"F4", 4, {1, 2, 3, 4}, 4},
    {"G2", 1, {2, 1}, 2},
};

struct CountEntry {
  const char* type;
  int i;
  long long count;  // #SM_i
};

inline constexpr CountEntry kExceptionalCounts[] = {
    {"E6", 1, 16}, {"E6", 2, 4},  {"E6", 3, 1},  {"E6", 4, 4},
    {"E6", 5, 16}, {"E6", 6, 12},

    {"E7", 1, 35}, {"E7", 2, 5},  {"E7", 3, 1},  {"E7", 4, 5},
    {"E7", 5, 11}, {"E7", 6, 43}, {"E7", 7, 20},

    {"E8", 1, 71}, {"E8", 2, 6},  {"E8", 3, 1},  {"E8", 4, 6},
    {"E8", 5, 16}, {"E8", 6, 27}, {"E8", 7, 105}, {"E8", 8, 30},

    {"F4", 3, 1},  {"F4", 4, 6},

    {"G2", 1, 1},
};

// dim E_{bar(v_i)}(Lambda_i) for the exceptional minuscule nodes.
inline constexpr CountEntry kExceptionalDemazureDims[] = {
    {"E6", 1, 16},
    {"E6", 5, 16},
    {"E7", 6, 43},
};

}  // namespace smw::tables
