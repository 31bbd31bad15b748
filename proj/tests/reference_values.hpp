#pragma once

// Frozen output of reference/gen_reference.py (networkx subset counting,
// sympy determinants). Coefficient lists start at x^0.

#include <cstdint>
#include <string_view>
#include <vector>

namespace ecpoly::reference {

struct PolyValue {
  std::string_view graph;
  std::vector<std::int64_t> coeffs;
};

struct TreeValue {
  std::string_view graph;
  std::int64_t trees;
};

inline const std::vector<PolyValue> kConnectedCover = {
    {"P2", {0, 1}},
    {"P4", {0, 0, 0, 1}},
    {"P6", {0, 0, 0, 0, 0, 1}},
    {"C3", {0, 0, 3, 1}},
    {"C4", {0, 0, 0, 4, 1}},
    {"C7", {0, 0, 0, 0, 0, 0, 7, 1}},
    {"K4", {0, 0, 0, 16, 15, 6, 1}},
    {"K5", {0, 0, 0, 0, 125, 222, 205, 120, 45, 10, 1}},
    {"K6", {0, 0, 0, 0, 0, 1296, 3660, 5700, 6165, 4945, 2997, 1365, 455, 105, 15, 1}},
    {"Kb1,3", {0, 0, 0, 1}},
    {"Kb2,3", {0, 0, 0, 0, 12, 6, 1}},
    {"Kb3,3", {0, 0, 0, 0, 0, 81, 78, 36, 9, 1}},
    {"F2,3", {0, 0, 0, 0, 9, 6, 1}},
    {"F3,3", {0, 0, 0, 0, 0, 0, 27, 27, 9, 1}},
    {"prism3", {0, 0, 0, 0, 0, 75, 77, 36, 9, 1}},
    {"petersen", {0, 0, 0, 0, 0, 0, 0, 0, 0, 2000, 2172, 1230, 445, 105, 15, 1}},
    {"corona(K3)", {0, 0, 0, 0, 0, 3, 1}},
    {"corona(C4)", {0, 0, 0, 0, 0, 0, 0, 4, 1}},
    {"two_triangles_bridge", {0, 0, 0, 0, 0, 9, 6, 1}},
    {"G?]uf?", {0, 0, 0, 0, 0, 0, 0, 384, 408, 212, 66, 12, 1}},
    {"G@NMf?", {0, 0, 0, 0, 0, 0, 0, 363, 399, 211, 66, 12, 1}},
    {"G@Umf?", {0, 0, 0, 0, 0, 0, 0, 392, 409, 212, 66, 12, 1}},
    {"G@UuV?", {0, 0, 0, 0, 0, 0, 0, 336, 389, 210, 66, 12, 1}},
    {"G@^EL_", {0, 0, 0, 0, 0, 0, 0, 256, 336, 198, 65, 12, 1}},
    {"EFz_", {0, 0, 0, 0, 0, 81, 78, 36, 9, 1}},
    {"ELv_", {0, 0, 0, 0, 0, 75, 77, 36, 9, 1}},
};

inline const std::vector<PolyValue> kCover = {
    {"C4", {0, 0, 2, 4, 1}},
    {"K4", {0, 0, 3, 16, 15, 6, 1}},
    {"P4", {0, 0, 1, 1}},
    {"Kb2,3", {0, 0, 0, 6, 12, 6, 1}},
};

inline const std::vector<TreeValue> kSpanningTrees = {
    {"P2", 1},
    {"P4", 1},
    {"P6", 1},
    {"C3", 3},
    {"C4", 4},
    {"C7", 7},
    {"K4", 16},
    {"K5", 125},
    {"K6", 1296},
    {"Kb1,3", 1},
    {"Kb2,3", 12},
    {"Kb3,3", 81},
    {"F2,3", 9},
    {"F3,3", 27},
    {"prism3", 75},
    {"petersen", 2000},
    {"corona(K3)", 3},
    {"corona(C4)", 4},
    {"two_triangles_bridge", 9},
    {"G?]uf?", 384},
    {"G@NMf?", 363},
    {"G@Umf?", 392},
    {"G@UuV?", 336},
    {"G@^EL_", 256},
    {"EFz_", 81},
    {"ELv_", 75},
};

// n = 1..7
inline constexpr std::size_t kConnectedGraphs[] = {1, 1, 2, 6, 21, 112, 853};
inline constexpr std::size_t kAllGraphs[] = {1, 2, 4, 11, 34, 156, 1044};

}  // namespace ecpoly::reference
