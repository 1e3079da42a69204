#include "ncircle/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncircle::poset {

namespace {

void require_point(const CirclePoset& p, int a) {
    if (a < 0 || a >= p.point_count())
        throw std::out_of_range("circle poset: point index out of range");
}

// Up-sets of every point by breadth-first closure over the covers. The
// builders only produce height-one orders, but corrupted cover data (used by
// the T0 check) may chain, so close transitively.
std::vector<std::vector<bool>> up_sets(const CirclePoset& p) {
    const int n = p.point_count();
    std::vector<std::vector<int>> above(static_cast<std::size_t>(n));
    for (const auto& [lo, hi] : p.covers) {
        require_point(p, lo);
        require_point(p, hi);
        above[static_cast<std::size_t>(lo)].push_back(hi);
    }
    std::vector<std::vector<bool>> up(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int a = 0; a < n; ++a) {
        auto& reach = up[static_cast<std::size_t>(a)];
        std::vector<int> frontier{a};
        reach[static_cast<std::size_t>(a)] = true;
        while (!frontier.empty()) {
            const int cur = frontier.back();
            frontier.pop_back();
            for (int nxt : above[static_cast<std::size_t>(cur)]) {
                if (!reach[static_cast<std::size_t>(nxt)]) {
                    reach[static_cast<std::size_t>(nxt)] = true;
                    frontier.push_back(nxt);
                }
            }
        }
    }
    return up;
}

}  // namespace

CirclePoset build_circle_poset(int n_cells) {
    if (n_cells < 2)
        throw std::invalid_argument("build_circle_poset: n_cells must be >= 2");
    CirclePoset p;
    p.n_cells = n_cells;
    const int n = 2 * n_cells;
    p.covers.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n_cells; ++i) {
        const int bottom = 2 * i;
        p.covers.emplace_back(bottom, (bottom - 1 + n) % n);
        p.covers.emplace_back(bottom, (bottom + 1) % n);
    }
    return p;
}

bool leq(const CirclePoset& p, int a, int b) {
    require_point(p, a);
    require_point(p, b);
    if (a == b) return true;
    return up_sets(p)[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::vector<int> minimal_open_set(const CirclePoset& p, int a) {
    require_point(p, a);
    const auto up = up_sets(p);
    std::vector<int> out;
    for (int b = 0; b < p.point_count(); ++b)
        if (up[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) out.push_back(b);
    return out;
}

bool is_t0(const CirclePoset& p) {
    const auto up = up_sets(p);
    const int n = p.point_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (up[static_cast<std::size_t>(a)] == up[static_cast<std::size_t>(b)]) return false;
    return true;
}

std::vector<std::pair<int, int>> hasse_edges(const CirclePoset& p) {
    auto edges = p.covers;
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace ncircle::poset
