#include "fewnomial/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>

#include "fewnomial/newton.hpp"

namespace fewnomial {

void validate(const GridSpec& grid) {
    if (!(grid.half_width > 0.0)) raise(Errc::invalid_argument, "window half-width must be positive");
    if (grid.resolution < 16 || (grid.resolution & (grid.resolution - 1)) != 0)
        raise(Errc::invalid_argument, "resolution must be a power of two, at least 16");
    if (grid.max_doublings < 0) raise(Errc::invalid_argument, "max_doublings must be >= 0");
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    std::vector<int> rank_;

    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        rank_.push_back(0);
        return parent.back();
    }
    int find(int x) {
        int root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            int next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }
};

int sign_of(double v) { return v >= 0.0 ? 1 : -1; }  // exact zeros count as positive

// Node signs over [-w, w]^2. The per-term log magnitude splits into per-axis
// parts, so only the final exponentials are taken per node.
std::vector<signed char> fill_signs(const Fewnomial& f, double w, int resolution,
                                    double* step_out) {
    const int nodes = resolution + 1;
    const double step = 2.0 * w / resolution;
    *step_out = step;
    const auto& terms = f.terms();
    const std::size_t m = terms.size();

    std::vector<double> ax(m * nodes), ay(m * nodes), logc(m);
    std::vector<char> neg(m);
    for (std::size_t t = 0; t < m; ++t) {
        logc[t] = std::log(std::fabs(terms[t].coefficient));
        neg[t] = terms[t].coefficient < 0;
        for (int i = 0; i < nodes; ++i) {
            double u = -w + step * i;
            ax[t * nodes + i] = terms[t].exponent[0] * u;
            ay[t * nodes + i] = terms[t].exponent[1] * u;
        }
    }

    std::vector<signed char> sgn(static_cast<std::size_t>(nodes) * nodes);
    std::vector<double> logs(m);
    for (int j = 0; j < nodes; ++j) {
        for (int i = 0; i < nodes; ++i) {
            double lmax = -std::numeric_limits<double>::infinity();
            for (std::size_t t = 0; t < m; ++t) {
                logs[t] = logc[t] + ax[t * nodes + i] + ay[t * nodes + j];
                if (logs[t] > lmax) lmax = logs[t];
            }
            double s = 0.0;
            for (std::size_t t = 0; t < m; ++t) {
                double d = logs[t] - lmax;
                if (d > -45.0) s += neg[t] ? -std::exp(d) : std::exp(d);
            }
            sgn[static_cast<std::size_t>(j) * nodes + i] = static_cast<signed char>(sign_of(s));
        }
    }
    return sgn;
}

// Edge keys: horizontal (i,j)-(i+1,j) and vertical (i,j)-(i,j+1).
std::int64_t hkey(int i, int j, int r) { return (static_cast<std::int64_t>(j) * r + i) * 2; }
std::int64_t vkey(int i, int j, int r) {
    return (static_cast<std::int64_t>(j) * (r + 1) + i) * 2 + 1;
}

struct EdgePoint {
    double x0, y0, x1, y1;  // endpoints in log coordinates
};

EdgePoint edge_endpoints(std::int64_t key, int r, double lo, double step) {
    bool vertical = key & 1;
    std::int64_t q = key >> 1;
    if (!vertical) {
        int j = static_cast<int>(q / r);
        int i = static_cast<int>(q % r);
        return {lo + step * i, lo + step * j, lo + step * (i + 1), lo + step * j};
    }
    int j = static_cast<int>(q / (r + 1));
    int i = static_cast<int>(q % (r + 1));
    return {lo + step * i, lo + step * j, lo + step * i, lo + step * (j + 1)};
}

// Bisection along an edge with a sign change; returns the refined point.
std::array<double, 2> refine_crossing(const Fewnomial& f, const EdgePoint& e) {
    double ax = e.x0, ay = e.y0, bx = e.x1, by = e.y1;
    int sa = sign_of(evaluate_log(f, LogPoint(Vec{ax, ay})));
    for (int it = 0; it < 64; ++it) {
        double mx = 0.5 * (ax + bx), my = 0.5 * (ay + by);
        if (std::fabs(bx - ax) + std::fabs(by - ay) <= 1e-12) return {mx, my};
        int sm = sign_of(evaluate_log(f, LogPoint(Vec{mx, my})));
        if (sm == sa) {
            ax = mx;
            ay = my;
        } else {
            bx = mx;
            by = my;
        }
    }
    return {0.5 * (ax + bx), 0.5 * (ay + by)};
}

// Within an ambiguous cell the pairing is decided by which diagonal the
// decider sign connects. Returns pairs over {0=bottom, 1=right, 2=top, 3=left}.
std::array<std::array<int, 2>, 2> ambiguous_pairs(int config, int decider) {
    bool plus_main_diagonal = config == 5;  // bottom-left and top-right positive
    bool connect_positive = decider > 0;
    if (plus_main_diagonal == connect_positive)
        return {{{0, 1}, {2, 3}}};  // arcs around bottom-right and top-left
    return {{{0, 3}, {1, 2}}};      // arcs around bottom-left and top-right
}

const int kCellSegments[16][4] = {
    // pairs of edge slots (bottom=0,right=1,top=2,left=3), -1 terminated
    {-1, -1, -1, -1},  // 0
    {0, 3, -1, -1},    // 1: bl
    {0, 1, -1, -1},    // 2: br
    {3, 1, -1, -1},    // 3: bl,br
    {1, 2, -1, -1},    // 4: tr
    {-1, -1, -1, -1},  // 5: ambiguous
    {0, 2, -1, -1},    // 6: br,tr
    {3, 2, -1, -1},    // 7: bl,br,tr
    {2, 3, -1, -1},    // 8: tl
    {0, 2, -1, -1},    // 9: bl,tl
    {-1, -1, -1, -1},  // 10: ambiguous
    {1, 2, -1, -1},    // 11: bl,br,tl
    {3, 1, -1, -1},    // 12: tr,tl
    {0, 1, -1, -1},    // 13: bl,tr,tl
    {0, 3, -1, -1},    // 14: br,tr,tl
    {-1, -1, -1, -1},  // 15
};

}  // namespace

RootScan isolate_roots_1d(const Fewnomial& f, const GridSpec& grid) {
    validate(grid);
    if (f.nvars() != 1) raise(Errc::not_univariate, "1-d isolation needs one variable");

    const int r = grid.resolution;
    const double w = grid.half_width;
    const double step = 2.0 * w / r;
    std::vector<double> vals(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) vals[static_cast<std::size_t>(i)] = evaluate_log(f, LogPoint(Vec{-w + step * i}));

    RootScan scan;
    for (int i = 0; i <= r; ++i) {
        if (vals[static_cast<std::size_t>(i)] == 0.0) {
            bool flip = i > 0 && i < r &&
                        vals[static_cast<std::size_t>(i - 1)] * vals[static_cast<std::size_t>(i + 1)] < 0;
            scan.brackets.push_back(RootBracket{-w + step * i, -w + step * i, flip});
        }
    }
    for (int i = 0; i < r; ++i) {
        double va = vals[static_cast<std::size_t>(i)], vb = vals[static_cast<std::size_t>(i + 1)];
        if (va == 0.0 || vb == 0.0) continue;
        if ((va > 0) == (vb > 0)) continue;
        double lo = -w + step * i, hi = lo + step;
        int sa = sign_of(va);
        while (hi - lo > 1e-12) {
            double mid = 0.5 * (lo + hi);
            double vm = evaluate_log(f, LogPoint(Vec{mid}));
            if (vm == 0.0) {
                lo = mid - 0.5e-12;
                hi = mid + 0.5e-12;
                break;
            }
            if (sign_of(vm) == sa)
                lo = mid;
            else
                hi = mid;
        }
        scan.brackets.push_back(RootBracket{lo, hi, true});
    }
    std::sort(scan.brackets.begin(), scan.brackets.end(),
              [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
    scan.within_descartes = static_cast<int>(scan.brackets.size()) <= sign_changes(f);
    return scan;
}

Census census_grid(const Fewnomial& f, const GridSpec& grid, const CensusOptions& options) {
    validate(grid);
    if (f.nvars() != 2) raise(Errc::dimension_mismatch, "grid census needs two variables");

    const int r = grid.resolution;
    const double w = grid.half_width;
    double step = 0.0;
    std::vector<signed char> sgn = fill_signs(f, w, r, &step);
    const int nodes = r + 1;
    const double lo = -w;

    UnionFind uf;
    std::unordered_map<std::int64_t, int> index;
    std::vector<std::int64_t> keys;
    std::vector<char> on_boundary;
    auto slot = [&](std::int64_t key) {
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = uf.add();
        index.emplace(key, id);
        keys.push_back(key);
        on_boundary.push_back(0);
        return id;
    };

    std::vector<std::pair<std::int64_t, std::int64_t>> segments;
    auto cell_edge_key = [&](int cx, int cy, int which) {
        switch (which) {
            case 0: return hkey(cx, cy, r);          // bottom
            case 1: return vkey(cx + 1, cy, r);      // right
            case 2: return hkey(cx, cy + 1, r);      // top
            default: return vkey(cx, cy, r);         // left
        }
    };
    auto log_at = [&](double x, double y) { return evaluate_log(f, LogPoint(Vec{x, y})); };

    for (int cy = 0; cy < r; ++cy) {
        for (int cx = 0; cx < r; ++cx) {
            int bl = sgn[static_cast<std::size_t>(cy) * nodes + cx] > 0;
            int br = sgn[static_cast<std::size_t>(cy) * nodes + cx + 1] > 0;
            int tr = sgn[static_cast<std::size_t>(cy + 1) * nodes + cx + 1] > 0;
            int tl = sgn[static_cast<std::size_t>(cy + 1) * nodes + cx] > 0;
            int config = bl | (br << 1) | (tr << 2) | (tl << 3);
            if (config == 0 || config == 15) continue;

            bool boundary_cell = cx == 0 || cy == 0 || cx == r - 1 || cy == r - 1;
            auto connect = [&](int ea, int eb) {
                std::int64_t ka = cell_edge_key(cx, cy, ea);
                std::int64_t kb = cell_edge_key(cx, cy, eb);
                int ia = slot(ka), ib = slot(kb);
                uf.unite(ia, ib);
                if (boundary_cell) {
                    on_boundary[static_cast<std::size_t>(ia)] = 1;
                    on_boundary[static_cast<std::size_t>(ib)] = 1;
                }
                segments.emplace_back(ka, kb);
            };

            if (config != 5 && config != 10) {
                const int* seg = kCellSegments[config];
                for (int k = 0; k < 4 && seg[k] >= 0; k += 2) connect(seg[k], seg[k + 1]);
                continue;
            }

            // Saddle cell: subdivide once, then let the center sign decide.
            double x0 = lo + step * cx, y0 = lo + step * cy;
            double xm = x0 + 0.5 * step, ym = y0 + 0.5 * step;
            double x1 = x0 + step, y1 = y0 + step;
            int c = sign_of(log_at(xm, ym));
            int mb = sign_of(log_at(xm, y0));
            int mr = sign_of(log_at(x1, ym));
            int mt = sign_of(log_at(xm, y1));
            int ml = sign_of(log_at(x0, ym));

            // Local slots: 0..7 outer halves (b0,b1,r0,r1,t0,t1,l0,l1 counter-
            // clockwise), 8..11 inner spokes (south, east, north, west).
            UnionFind local;
            for (int k = 0; k < 12; ++k) local.add();
            struct Sub {
                int corners[4];  // bl, br, tr, tl signs (+1/-1)
                int slots[4];    // bottom, right, top, left local slots
            };
            int sbl = bl ? 1 : -1, sbr = br ? 1 : -1, str = tr ? 1 : -1, stl = tl ? 1 : -1;
            Sub subs[4] = {
                {{sbl, mb, c, ml}, {0, 8, 11, 7}},    // south-west
                {{mb, sbr, mr, c}, {1, 2, 9, 8}},     // south-east
                {{c, mr, str, mt}, {9, 3, 4, 10}},    // north-east
                {{ml, c, mt, stl}, {11, 10, 5, 6}},   // north-west
            };
            for (const Sub& sub : subs) {
                int sc = (sub.corners[0] > 0) | ((sub.corners[1] > 0) << 1) |
                         ((sub.corners[2] > 0) << 2) | ((sub.corners[3] > 0) << 3);
                if (sc == 0 || sc == 15) continue;
                if (sc == 5 || sc == 10) {
                    auto pairs = ambiguous_pairs(sc, c);
                    for (const auto& pr : pairs)
                        local.unite(sub.slots[pr[0]], sub.slots[pr[1]]);
                    continue;
                }
                const int* seg = kCellSegments[sc];
                for (int k = 0; k < 4 && seg[k] >= 0; k += 2)
                    local.unite(sub.slots[seg[k]], sub.slots[seg[k + 1]]);
            }

            // Parent crossings sit in the outer half whose endpoints differ.
            auto outer_slot = [&](int corner_a, int mid, int half0, int half1) {
                return corner_a != mid ? half0 : half1;
            };
            int parent_slot[4] = {
                outer_slot(sbl, mb, 0, 1),  // bottom
                outer_slot(sbr, mr, 2, 3),  // right
                outer_slot(str, mt, 4, 5),  // top: tr-to-tl order is slots 4,5
                outer_slot(stl, ml, 6, 7),  // left
            };
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                    if (local.find(parent_slot[a]) == local.find(parent_slot[b]))
                        connect(a, b);
        }
    }

    // Crossings near a verified critical zero all pass through it.
    const double merge_radius = 2.5 * step;
    for (const LogPoint& q : options.merge_points) {
        if (q.coords.size() != 2) raise(Errc::dimension_mismatch, "merge point must be 2-d");
        int anchor = -1;
        for (std::size_t k = 0; k < keys.size(); ++k) {
            EdgePoint e = edge_endpoints(keys[k], r, lo, step);
            double mx = 0.5 * (e.x0 + e.x1) - q.coords[0];
            double my = 0.5 * (e.y0 + e.y1) - q.coords[1];
            if (std::hypot(mx, my) > merge_radius) continue;
            if (anchor < 0)
                anchor = static_cast<int>(k);
            else
                uf.unite(anchor, static_cast<int>(k));
        }
    }

    Census census;
    census.window_used = grid;

    std::vector<std::int64_t> sorted_keys = keys;
    std::sort(sorted_keys.begin(), sorted_keys.end());
    std::map<int, int> component_of_root;
    std::vector<char> root_boundary;
    for (std::int64_t key : sorted_keys) {
        int root = uf.find(index[key]);
        if (component_of_root.emplace(root, static_cast<int>(component_of_root.size())).second)
            root_boundary.push_back(0);
    }
    for (std::size_t k = 0; k < keys.size(); ++k)
        if (on_boundary[k])
            root_boundary[static_cast<std::size_t>(component_of_root[uf.find(static_cast<int>(k))])] = 1;

    census.tot = static_cast<int>(component_of_root.size());
    for (char b : root_boundary) (b ? census.non : census.comp)++;

    if (options.contours && !segments.empty()) {
        std::unordered_map<std::int64_t, std::array<double, 2>> refined;
        refined.reserve(keys.size());
        for (std::int64_t key : sorted_keys)
            refined.emplace(key, refine_crossing(f, edge_endpoints(key, r, lo, step)));

        std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::size_t>>> adjacency;
        for (std::size_t s = 0; s < segments.size(); ++s) {
            adjacency[segments[s].first].emplace_back(segments[s].second, s);
            adjacency[segments[s].second].emplace_back(segments[s].first, s);
        }
        std::vector<char> used(segments.size(), 0);

        auto walk = [&](std::int64_t start) {
            Contour contour;
            int root = uf.find(index[start]);
            contour.component = component_of_root[root];
            contour.compact = !root_boundary[static_cast<std::size_t>(contour.component)];
            contour.points.push_back(refined[start]);
            std::int64_t cur = start;
            for (;;) {
                bool advanced = false;
                for (auto& [next, seg] : adjacency[cur]) {
                    if (used[seg]) continue;
                    used[seg] = 1;
                    contour.points.push_back(refined[next]);
                    cur = next;
                    advanced = true;
                    break;
                }
                if (!advanced) break;
            }
            return contour;
        };

        // Open chains first (odd-degree endpoints), then leftover cycles.
        for (auto& [key, nbrs] : adjacency) {
            std::size_t pending = 0;
            for (auto& [next, seg] : nbrs)
                if (!used[seg]) ++pending;
            if (pending != 0 && pending != 2) {
                while (true) {
                    bool any = false;
                    for (auto& [next, seg] : nbrs)
                        if (!used[seg]) any = true;
                    if (!any) break;
                    census.contours.push_back(walk(key));
                }
            }
        }
        for (auto& [key, nbrs] : adjacency)
            for (auto& [next, seg] : nbrs)
                if (!used[seg]) census.contours.push_back(walk(key));

        std::stable_sort(census.contours.begin(), census.contours.end(),
                         [](const Contour& a, const Contour& b) { return a.component < b.component; });
    }
    return census;
}

Census census_stabilized(const Fewnomial& f, const GridSpec& initial, const CensusOptions& options) {
    validate(initial);
    Census prev = census_grid(f, initial, options);
    GridSpec current = initial;
    // A single agreeing pair is not enough: a window that clips a compact
    // component can produce the same wrong counts twice before the component
    // fits, so convergence requires the counts to survive two doublings.
    int agreements = 0;
    bool converged = false;
    for (int k = 0; k < initial.max_doublings && !converged; ++k) {
        current.half_width *= 2.0;
        current.resolution *= 2;
        Census next = census_grid(f, current, options);
        if (next.tot == prev.tot && next.comp == prev.comp && next.non == prev.non)
            converged = ++agreements >= 2;
        else
            agreements = 0;
        prev = next;
    }
    prev.converged = converged;

    // A compact-component claim must survive cell refinement at the final
    // window. Two zero branches that close in slower than the window grows
    // stay at the resolution limit forever (the cell size is constant across
    // doublings), and the aliased tail fragments into phantom compact
    // pieces; halving the cell merges them back.
    if (prev.comp >= 1) {
        const int resolution_cap = std::max(8192, initial.resolution);
        GridSpec probe = prev.window_used;
        bool verified = false;
        while (!verified && probe.resolution * 2 <= resolution_cap) {
            probe.resolution *= 2;
            Census refined = census_grid(f, probe, options);
            verified = refined.tot == prev.tot && refined.comp == prev.comp &&
                       refined.non == prev.non;
            refined.converged = prev.converged;
            prev = refined;
        }
        if (!verified) prev.converged = false;
    }
    return prev;
}

SliceCensus noncompact_census_3d(const Fewnomial& f, const GridSpec& grid) {
    validate(grid);
    if (f.nvars() != 3) raise(Errc::unsupported_dimension, "slice harness expects three variables");

    std::vector<AxisBounds> window(3, AxisBounds{std::exp(-grid.half_width), std::exp(grid.half_width)});
    SliceCensus out;
    out.family = slice_reduction(f, window);

    CensusOptions quiet;
    quiet.contours = false;
    for (const Fewnomial& slice : out.family.slices) {
        Census c = census_stabilized(slice, grid, quiet);
        out.upper_estimate += c.tot;
        out.slice_censuses.push_back(std::move(c));
    }
    return out;
}

std::optional<PositivePoint> critical_zero_search(const Fewnomial& f, const GridSpec& grid) {
    validate(grid);
    if (f.nvars() != 2) raise(Errc::dimension_mismatch, "critical-zero search needs two variables");

    const double w = grid.half_width;
    const int starts_per_axis = 33;
    const double tol = 1e-8;

    for (int sj = 0; sj < starts_per_axis; ++sj) {
        for (int si = 0; si < starts_per_axis; ++si) {
            Vec u{-w + 2.0 * w * si / (starts_per_axis - 1),
                  -w + 2.0 * w * sj / (starts_per_axis - 1)};
            double lambda = 1e-3;
            for (int iter = 0; iter < 60; ++iter) {
                double f0 = evaluate_log(f, LogPoint(u));
                Vec g = gradient_log(f, LogPoint(u));
                if (!std::isfinite(f0) || !std::isfinite(g[0]) || !std::isfinite(g[1])) break;
                // The relative residual rejects regions where every term
                // decays at once: there |f| passes the absolute test without
                // any cancellation, far from an actual zero.
                if (std::fabs(f0) < tol && std::hypot(g[0], g[1]) < tol &&
                    relative_residual(f, LogPoint(u)) < 1e-7)
                    return to_positive(LogPoint(u));

                Vec h = hessian_log(f, LogPoint(u));
                // Rows of the Jacobian of (f, f_1, f_2) in log coordinates.
                double j[3][2] = {{g[0], g[1]}, {h[0], h[1]}, {h[2], h[3]}};
                double res[3] = {f0, g[0], g[1]};
                double jtj[2][2] = {{0, 0}, {0, 0}};
                double jtr[2] = {0, 0};
                for (int row = 0; row < 3; ++row) {
                    for (int a = 0; a < 2; ++a) {
                        jtr[a] += j[row][a] * res[row];
                        for (int b = 0; b < 2; ++b) jtj[a][b] += j[row][a] * j[row][b];
                    }
                }
                double cost = res[0] * res[0] + res[1] * res[1] + res[2] * res[2];

                bool stepped = false;
                for (int attempt = 0; attempt < 8; ++attempt) {
                    double a00 = jtj[0][0] + lambda, a11 = jtj[1][1] + lambda, a01 = jtj[0][1];
                    double det = a00 * a11 - a01 * a01;
                    if (det == 0.0) {
                        lambda *= 10;
                        continue;
                    }
                    double dx = (-jtr[0] * a11 + jtr[1] * a01) / det;
                    double dy = (jtr[0] * a01 - jtr[1] * a00) / det;
                    Vec cand{u[0] + dx, u[1] + dy};
                    if (std::fabs(cand[0]) > 4 * w || std::fabs(cand[1]) > 4 * w) {
                        lambda *= 10;
                        continue;
                    }
                    double cf = evaluate_log(f, LogPoint(cand));
                    Vec cg = gradient_log(f, LogPoint(cand));
                    double ccost = cf * cf + cg[0] * cg[0] + cg[1] * cg[1];
                    if (std::isfinite(ccost) && ccost < cost) {
                        u = cand;
                        lambda = std::max(lambda / 3.0, 1e-12);
                        stepped = true;
                        break;
                    }
                    lambda *= 10;
                }
                if (!stepped) break;
            }
        }
    }
    return std::nullopt;
}

}  // namespace fewnomial
