#pragma once

#include <utility>
#include <vector>

namespace ncircle::poset {

// Finite T0 approximation of the circle with 2N points. Even indices are the
// bottom points (closed "vertices" of the subdivision), odd indices the top
// points (open arcs). The cover relation zig-zags around the cycle: bottom
// point 2i sits below the two arcs 2i-1 and 2i+1 (mod 2N).
struct CirclePoset {
    int n_cells = 0;                          // N
    std::vector<std::pair<int, int>> covers;  // (lower, upper) pairs

    int point_count() const { return 2 * n_cells; }
};

// The zig-zag circle poset. Rejects n_cells < 2; the 2-point case collapses
// to a non-Hausdorff interval rather than a circle.
CirclePoset build_circle_poset(int n_cells);

// a <= b in the reflexive-transitive closure of the cover relation.
bool leq(const CirclePoset& p, int a, int b);

// Smallest open set containing a in the Alexandrov topology: the up-set
// {b : a <= b}, sorted. Singleton for top points, 3 points for bottom points.
std::vector<int> minimal_open_set(const CirclePoset& p, int a);

// True iff distinct points have distinct minimal open sets. Holds for every
// poset built here; fails only if the cover data contains a cycle.
bool is_t0(const CirclePoset& p);

// The cover pairs in ascending (lower, upper) order.
std::vector<std::pair<int, int>> hasse_edges(const CirclePoset& p);

}  // namespace ncircle::poset
