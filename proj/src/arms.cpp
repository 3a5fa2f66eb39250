#include "sdplab/arms.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdplab {

bool ColorSequence::mixed() const {
    for (int c : colors)
        if (c != colors[0]) return true;
    return false;
}

ColorSequence ColorSequence::rotated(std::size_t r) const {
    ColorSequence out;
    const std::size_t k = colors.size();
    out.colors.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.colors.push_back(colors[(i + r) % k]);
    return out;
}

ColorSequence ColorSequence::reversed() const {
    ColorSequence out = *this;
    std::reverse(out.colors.begin(), out.colors.end());
    return out;
}

const std::vector<std::pair<std::string, ColorSequence>>& canonical_sequences() {
    static const std::vector<std::pair<std::string, ColorSequence>> table = {
        {"Arm1", {{1}}},
        {"Arm3hp", {{1, 0, 1}}},
        {"Arm4hp", {{1, 0, 0, 1}}},
        {"Arm5", {{1, 0, 0, 1, 0}}},
        {"Arm6", {{0, 1, 0, 0, 1, 0}}},
    };
    return table;
}

const ColorSequence& canonical_sequence(std::string_view name) {
    for (const auto& [nm, seq] : canonical_sequences())
        if (nm == name) return seq;
    throw std::invalid_argument("canonical_sequence: unknown name " + std::string(name));
}

namespace {

// Cell classes on the local zone grid.  kOpen/kClosed are the two path colors;
// everything >= kHole is a wall.
enum CellClass : std::uint8_t { kClosed = 0, kOpen = 1, kHole = 2, kOut = 3, kFlat = 4 };

inline bool is_wall(std::uint8_t c) { return c >= kHole; }

constexpr std::int32_t kNone = -1;
constexpr std::int32_t kSrc = -2;
constexpr std::int32_t kSnk = -3;

constexpr int kPrimalSteps[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
constexpr int kMatchSteps[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                   {1, 0},   {-1, 1}, {0, 1}, {1, 1}};

// Scratch state for one query: the zone grid plus a unit-vertex-capacity flow
// over it.  Flow and BFS marks are epoch-stamped so resets are O(1).
struct Workspace {
    std::int32_t n = 0, N = 0, side = 0;
    bool half = false;

    std::vector<std::uint8_t> cls;
    std::vector<std::uint8_t> wild;
    bool any_wild = false;

    std::uint32_t flow_epoch = 1;
    std::vector<std::uint32_t> fstamp;
    std::vector<std::uint8_t> used_;
    std::vector<std::int32_t> prv_, nxt_;

    std::uint32_t bfs_epoch = 1;
    std::vector<std::uint32_t> vstamp;
    std::vector<std::int32_t> parent_;
    std::vector<std::int8_t> how_;
    std::vector<std::int32_t> queue_;
    std::vector<std::int32_t> chain_;

    std::vector<std::int64_t> radial_;
    std::vector<std::array<std::vector<std::int32_t>, 2>> srcs_;
    std::vector<std::int32_t> ring_;

    std::size_t cells() const { return std::size_t(side) * std::size_t(side); }
    std::int32_t idx(std::int32_t dx, std::int32_t dy) const {
        return (dy + N + 1) * side + (dx + N + 1);
    }
    std::int32_t dx_of(std::int32_t i) const { return i % side - (N + 1); }
    std::int32_t dy_of(std::int32_t i) const { return i / side - (N + 1); }
    std::int32_t dist_of(std::int32_t i) const {
        return std::max(std::abs(dx_of(i)), std::abs(dy_of(i)));
    }
    std::uint8_t at(std::int32_t dx, std::int32_t dy) const { return cls[idx(dx, dy)]; }

    bool stamped(std::int32_t i) const { return fstamp[i] == flow_epoch; }
    bool used(std::int32_t i) const { return stamped(i) && used_[i]; }
    std::int32_t prv(std::int32_t i) const { return stamped(i) ? prv_[i] : kNone; }
    std::int32_t nxt(std::int32_t i) const { return stamped(i) ? nxt_[i] : kNone; }
    void touch(std::int32_t i) {
        if (!stamped(i)) {
            fstamp[i] = flow_epoch;
            used_[i] = 0;
            prv_[i] = kNone;
            nxt_[i] = kNone;
        }
    }

    void fresh_flow() {
        if (++flow_epoch == 0) {
            std::fill(fstamp.begin(), fstamp.end(), 0u);
            flow_epoch = 1;
        }
    }
    void fresh_bfs() {
        if (++bfs_epoch == 0) {
            std::fill(vstamp.begin(), vstamp.end(), 0u);
            bfs_epoch = 1;
        }
    }

    bool passable(std::int32_t i, int color) const {
        return cls[i] == color || (any_wild && wild[i]);
    }
};

Workspace& workspace() {
    static thread_local Workspace ws;
    return ws;
}

template <typename T>
void ensure_size(std::vector<T>& v, std::size_t need) {
    if (v.size() < need) v.resize(need, T{});
}

void build_zone(Workspace& ws, const SiteConfig& cfg, Coord u, std::int32_t n, std::int32_t N,
                ArmVariant variant) {
    ws.n = n;
    ws.N = N;
    ws.side = 2 * N + 3;
    ws.half = variant != ArmVariant::full_plane;
    const bool flip = variant == ArmVariant::half_plane_below;
    const std::size_t cells = ws.cells();
    ws.cls.assign(cells, kOut);
    ensure_size(ws.wild, cells);
    ws.any_wild = false;
    ensure_size(ws.fstamp, cells);
    ensure_size(ws.used_, cells);
    ensure_size(ws.prv_, cells);
    ensure_size(ws.nxt_, cells);
    ensure_size(ws.vstamp, 2 * cells);
    ensure_size(ws.parent_, 2 * cells);
    ensure_size(ws.how_, 2 * cells);

    for (std::int32_t dy = -(N + 1); dy <= N + 1; ++dy) {
        for (std::int32_t dx = -(N + 1); dx <= N + 1; ++dx) {
            const std::int32_t d = std::max(std::abs(dx), std::abs(dy));
            std::uint8_t c;
            if (d <= n)
                c = kHole;
            else if (d > N)
                c = kOut;
            else if (ws.half && dy < 0)
                c = kFlat;
            else {
                const std::int32_t sy = flip ? u.y - dy : u.y + dy;
                c = cfg.get({u.x + dx, sy}) ? kOpen : kClosed;
            }
            ws.cls[ws.idx(dx, dy)] = c;
        }
    }
}

// Boundary parameter along the square max(|a|,|b|) = m in doubled coordinates,
// increasing counter-clockwise from the bottom-right corner; range [0, 8m).
std::int64_t boundary_param(std::int64_t a, std::int64_t b, std::int64_t m) {
    if (a == m && b < m) return b + m;
    if (b == m && a > -m) return 2 * m + (m - a);
    if (a == -m && b > -m) return 4 * m + (m - b);
    return 6 * m + (a + m);
}

// Cells ahead of a corner (doubled odd coordinates) for direction d, left and
// right of the heading.  d: 0 = +x, 1 = +y, 2 = -x, 3 = -y.
constexpr int kStepX[4] = {1, 0, -1, 0};
constexpr int kStepY[4] = {0, 1, 0, -1};

inline void ahead_cells(std::int32_t a, std::int32_t b, int d, std::int32_t& lx, std::int32_t& ly,
                        std::int32_t& rx, std::int32_t& ry) {
    switch (d) {
        case 0: lx = (a + 1) / 2; ly = (b + 1) / 2; rx = lx; ry = (b - 1) / 2; break;
        case 1: lx = (a - 1) / 2; ly = (b + 1) / 2; rx = (a + 1) / 2; ry = ly; break;
        case 2: lx = (a - 1) / 2; ly = (b - 1) / 2; rx = lx; ry = (b + 1) / 2; break;
        default: lx = (a + 1) / 2; ly = (b - 1) / 2; rx = (a - 1) / 2; ry = ly; break;
    }
}

// Inner boundary beats outer beats the half-plane floor; inner and outer can
// never meet at one corner once N > n.
std::uint8_t wall_class(std::uint8_t c1, std::uint8_t c2) {
    std::uint8_t w = 0;
    for (std::uint8_t c : {c1, c2}) {
        if (c == kHole)
            w = kHole;
        else if (c == kOut && w != kHole)
            w = kOut;
        else if (c == kFlat && w == 0)
            w = kFlat;
    }
    return w;
}

// Follow one interface arc (open cells on the left, closed on the right) from
// its first edge until a wall shows up ahead; returns the end corner and the
// wall's class.
struct ArcEnd {
    std::int32_t a, b;
    std::uint8_t wall;
};

ArcEnd walk_arc(const Workspace& ws, std::int32_t a, std::int32_t b, int d) {
    a += 2 * kStepX[d];
    b += 2 * kStepY[d];
    for (;;) {
        std::int32_t lx, ly, rx, ry;
        ahead_cells(a, b, d, lx, ly, rx, ry);
        const std::uint8_t cl = ws.at(lx, ly);
        const std::uint8_t cr = ws.at(rx, ry);
        if (is_wall(cl) || is_wall(cr)) return {a, b, wall_class(cl, cr)};
        if (cl == kClosed)
            d = (d + 1) & 3;  // closed wins the diagonal: hug it on the left
        else if (cr == kOpen)
            d = (d + 3) & 3;
        a += 2 * kStepX[d];
        b += 2 * kStepY[d];
    }
}

// Inner-boundary parameters of the arcs running from the inner square to the
// outer ring.  Every arc is traced exactly once: its first edge is the unique
// directed interface edge whose tail corner still touches a wall.
void trace_radial(Workspace& ws, std::vector<std::int64_t>& out) {
    out.clear();
    const std::int32_t N = ws.N;
    const std::int64_t m = 2 * std::int64_t(ws.n) + 1;

    auto try_start = [&](std::int32_t a, std::int32_t b, int d) {
        std::int32_t lx, ly, rx, ry;
        ahead_cells(a, b, (d + 2) & 3, lx, ly, rx, ry);
        const std::uint8_t w0 = wall_class(ws.at(lx, ly), ws.at(rx, ry));
        if (w0 == 0) return;
        const ArcEnd end = walk_arc(ws, a, b, d);
        if ((w0 == kHole && end.wall == kOut) || (w0 == kOut && end.wall == kHole)) {
            const bool start_inner = w0 == kHole;
            const std::int64_t ia = start_inner ? a : end.a;
            const std::int64_t ib = start_inner ? b : end.b;
            out.push_back(boundary_param(ia, ib, m));
        }
    };

    for (std::int32_t dy = -(N + 1); dy <= N + 1; ++dy) {
        for (std::int32_t dx = -(N + 1); dx <= N; ++dx) {
            const std::uint8_t c0 = ws.at(dx, dy);
            const std::uint8_t c1 = ws.at(dx + 1, dy);
            if (!is_wall(c0) && !is_wall(c1) && c0 != c1) {
                if (c0 == kOpen)
                    try_start(2 * dx + 1, 2 * dy - 1, 1);
                else
                    try_start(2 * dx + 1, 2 * dy + 1, 3);
            }
        }
    }
    for (std::int32_t dy = -(N + 1); dy <= N; ++dy) {
        for (std::int32_t dx = -(N + 1); dx <= N + 1; ++dx) {
            const std::uint8_t c0 = ws.at(dx, dy);
            const std::uint8_t c1 = ws.at(dx, dy + 1);
            if (!is_wall(c0) && !is_wall(c1) && c0 != c1) {
                if (c1 == kOpen)
                    try_start(2 * dx - 1, 2 * dy + 1, 0);
                else
                    try_start(2 * dx + 1, 2 * dy + 1, 2);
            }
        }
    }
    std::sort(out.begin(), out.end());
}

// One augmenting path for the vertex-disjoint path packing of the given color,
// from any listed source cell to the ring at distance N.  Standard node-split
// residual search; arc codes: 0 enter-source, 1 split, 2 reverse split, 3 hop,
// 4 reverse hop.
bool augment(Workspace& ws, int color, const std::vector<std::int32_t>& srcs) {
    if (srcs.empty()) return false;
    ws.fresh_bfs();
    auto& q = ws.queue_;
    q.clear();
    auto visit = [&](std::int32_t st, std::int32_t par, std::int8_t how) {
        if (ws.vstamp[st] == ws.bfs_epoch) return;
        ws.vstamp[st] = ws.bfs_epoch;
        ws.parent_[st] = par;
        ws.how_[st] = how;
        q.push_back(st);
    };
    for (std::int32_t s : srcs) visit(2 * s, kNone, 0);

    const int(*steps)[2] =
        color == 1 ? static_cast<const int(*)[2]>(kPrimalSteps) : kMatchSteps;
    const int nsteps = color == 1 ? 4 : 8;
    std::int32_t accept = kNone;
    for (std::size_t head = 0; head < q.size(); ++head) {
        const std::int32_t st = q[head];
        const std::int32_t i = st >> 1;
        if (st & 1) {
            if (ws.dist_of(i) == ws.N) {
                accept = st;
                break;
            }
            const bool ui = ws.used(i);
            const std::int32_t dx = ws.dx_of(i), dy = ws.dy_of(i);
            for (int t = 0; t < nsteps; ++t) {
                const std::int32_t j = ws.idx(dx + steps[t][0], dy + steps[t][1]);
                if (!ws.passable(j, color)) continue;
                if (ui && ws.nxt(i) == j) continue;
                visit(2 * j, st, 3);
            }
            if (ui) visit(2 * i, st, 2);
        } else {
            if (!ws.used(i)) {
                visit(2 * i + 1, st, 1);
            } else if (ws.prv(i) >= 0) {
                visit(2 * ws.prv(i) + 1, st, 4);
            }
        }
    }
    if (accept == kNone) return false;

    auto& chain = ws.chain_;
    chain.clear();
    for (std::int32_t st = accept;; st = ws.parent_[st]) {
        chain.push_back(st);
        if (ws.how_[st] == 0) break;
    }
    // Cancellations first, then additions: a cell rewired in one augmentation
    // sees its old hop removed before the new one lands.
    for (std::int32_t st : chain) {
        const std::int32_t i = st >> 1;
        switch (ws.how_[st]) {
            case 2: {
                ws.touch(i);
                ws.used_[i] = 0;
                ws.prv_[i] = kNone;
                ws.nxt_[i] = kNone;
                break;
            }
            case 4: {
                const std::int32_t w = ws.parent_[st] >> 1;
                ws.touch(i);
                ws.touch(w);
                if (ws.nxt_[i] == w) ws.nxt_[i] = kNone;
                if (ws.prv_[w] == i) ws.prv_[w] = kNone;
                break;
            }
            default: break;
        }
    }
    for (std::int32_t st : chain) {
        const std::int32_t i = st >> 1;
        switch (ws.how_[st]) {
            case 0: ws.touch(i); ws.prv_[i] = kSrc; break;
            case 1: ws.touch(i); ws.used_[i] = 1; break;
            case 3: {
                const std::int32_t v = ws.parent_[st] >> 1;
                ws.touch(i);
                ws.touch(v);
                ws.nxt_[v] = i;
                ws.prv_[i] = v;
                break;
            }
            default: break;
        }
    }
    ws.touch(accept >> 1);
    ws.nxt_[accept >> 1] = kSnk;
    return true;
}

// All cells of the inner ring (distance n+1, square corners excluded) that the
// color can start from.
void ring_sources(const Workspace& ws, int color, std::vector<std::int32_t>& out) {
    out.clear();
    const std::int32_t r = ws.n + 1;
    for (std::int32_t v = -ws.n; v <= ws.n; ++v) {
        for (const std::int32_t i :
             {ws.idx(r, v), ws.idx(-r, v), ws.idx(v, r), ws.idx(v, -r)}) {
            if (ws.passable(i, color)) out.push_back(i);
        }
    }
}

// Inner-ring sources grouped by the gap between consecutive radial arcs (full
// plane: cyclic gaps; half plane: linear slots including the two open ends).
void build_interval_sources(Workspace& ws) {
    const auto& T = ws.radial_;
    const std::size_t nslots = ws.half ? T.size() + 1 : T.size();
    ws.srcs_.assign(nslots, {});
    const std::int32_t r = ws.n + 1;
    const std::int64_t m = 2 * std::int64_t(ws.n) + 1;
    const std::size_t s = T.size();

    auto add = [&](std::int32_t dx, std::int32_t dy, std::int64_t a, std::int64_t b) {
        const std::int32_t i = ws.idx(dx, dy);
        const std::uint8_t c = ws.cls[i];
        if (is_wall(c)) return;
        const std::int64_t t = boundary_param(a, b, m);
        const std::size_t at = std::upper_bound(T.begin(), T.end(), t) - T.begin();
        const std::size_t slot = ws.half ? at : (at + s - 1) % s;
        ws.srcs_[slot][c].push_back(i);
    };
    for (std::int32_t v = -ws.n; v <= ws.n; ++v) {
        add(r, v, m, 2 * std::int64_t(v));
        add(-r, v, -m, 2 * std::int64_t(v));
        add(v, r, 2 * std::int64_t(v), m);
        add(v, -r, 2 * std::int64_t(v), -m);
    }
}

// Greedy cyclic embedding: walk the gaps counter-clockwise once, serving the
// next arms of the rotation while the joint flow admits them.  A gap only ever
// hosts one color, so stopping at a color change costs nothing.
bool try_embed(Workspace& ws, const std::vector<int>& sig) {
    ws.fresh_flow();
    std::size_t ptr = 0;
    const std::size_t k = sig.size();
    for (std::size_t j = 0; j < ws.srcs_.size() && ptr < k; ++j) {
        const int c = sig[ptr];
        while (ptr < k && sig[ptr] == c && augment(ws, c, ws.srcs_[j][c])) ++ptr;
    }
    return ptr == k;
}

bool backtrack_event(Workspace& ws, const std::vector<int>& sig);

// Exact decision on the prepared zone.  use_backtrack switches the mixed-color
// case to the exhaustive path-system search (needed once wildcards break the
// interface structure the greedy relies on).
bool detect_core(Workspace& ws, const std::vector<int>& sig, bool use_backtrack) {
    int cnt[2] = {0, 0};
    for (int c : sig) ++cnt[c];
    for (int c = 0; c < 2; ++c) {
        if (!cnt[c]) continue;
        ring_sources(ws, c, ws.ring_);
        ws.fresh_flow();
        int got = 0;
        while (got < cnt[c] && augment(ws, c, ws.ring_)) ++got;
        if (got < cnt[c]) return false;
    }
    if (cnt[0] == 0 || cnt[1] == 0) return true;  // one color: Menger, order is vacuous

    if (use_backtrack) return backtrack_event(ws, sig);

    trace_radial(ws, ws.radial_);
    if (ws.radial_.empty()) return false;  // mixed arms force an interface crossing
    build_interval_sources(ws);
    if (ws.half) return try_embed(ws, sig);

    std::set<std::vector<int>> seen;
    for (std::size_t r = 0; r < sig.size(); ++r) {
        std::vector<int> rot(sig.size());
        for (std::size_t i = 0; i < sig.size(); ++i) rot[i] = sig[(i + r) % sig.size()];
        if (!seen.insert(rot).second) continue;
        if (try_embed(ws, rot)) return true;
    }
    return false;
}

// Exhaustive ordered path-system search; exact but exponential, so reserved
// for wildcard zones at small radii.
// Exhaustive ordered path-system search.  Only chordless paths are explored:
// every arm shrinks to a shortest path inside its own cell set, which keeps
// its head and a subset of cells, so existence is unchanged.
struct Backtracker {
    Workspace* ws;
    const std::vector<int>* sig;
    std::vector<std::pair<std::int64_t, std::int32_t>> heads[2];
    std::vector<std::uint8_t> visited;
    std::vector<std::int32_t> path;
    std::int64_t wrap = 0;   // 8m, 0 for half plane
    std::int64_t limit = 0;  // first head's linearized parameter + wrap

    bool place_arm(std::size_t arm, std::int64_t prev_eff) {
        if (arm == sig->size()) return true;
        const int c = (*sig)[arm];
        for (const auto& [t, cell] : heads[c]) {
            std::int64_t eff = t;
            if (arm == 0) {
                if (wrap > 0) limit = t + wrap;
            } else if (wrap > 0) {
                if (eff <= limit - wrap) eff += wrap;
                if (eff >= limit) continue;
            }
            if (eff <= prev_eff) continue;
            if (visited[cell]) continue;
            if (grow_path(arm, cell, eff)) return true;
        }
        return false;
    }

    bool chord(std::int32_t j, int c) const {
        const std::int32_t jx = ws->dx_of(j), jy = ws->dy_of(j);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const std::int32_t dx = std::abs(ws->dx_of(path[i]) - jx);
            const std::int32_t dy = std::abs(ws->dy_of(path[i]) - jy);
            if (c == 1 ? dx + dy == 1 : std::max(dx, dy) == 1) return true;
        }
        return false;
    }

    bool grow_path(std::size_t arm, std::int32_t cell, std::int64_t eff) {
        visited[cell] = 1;
        path.push_back(cell);
        bool ok = false;
        if (ws->dist_of(cell) == ws->N) {
            std::vector<std::int32_t> saved;
            saved.swap(path);
            ok = place_arm(arm + 1, eff);
            path.swap(saved);
        } else {
            const int c = (*sig)[arm];
            const int(*steps)[2] = c == 1 ? kPrimalSteps : kMatchSteps;
            const int nsteps = c == 1 ? 4 : 8;
            const std::int32_t dx = ws->dx_of(cell), dy = ws->dy_of(cell);
            for (int t = 0; t < nsteps && !ok; ++t) {
                const std::int32_t j = ws->idx(dx + steps[t][0], dy + steps[t][1]);
                if (!visited[j] && ws->passable(j, c) && !chord(j, c)) ok = grow_path(arm, j, eff);
            }
        }
        path.pop_back();
        if (!ok) visited[cell] = 0;
        return ok;
    }
};

bool backtrack_event(Workspace& ws, const std::vector<int>& sig) {
    Backtracker bt;
    bt.ws = &ws;
    bt.visited.assign(ws.cells(), 0);
    const std::int64_t m = 2 * std::int64_t(ws.n) + 1;
    const std::int32_t r = ws.n + 1;
    for (std::int32_t v = -ws.n; v <= ws.n; ++v) {
        const std::array<std::pair<std::int32_t, std::int64_t>, 4> ring = {{
            {ws.idx(r, v), boundary_param(m, 2 * std::int64_t(v), m)},
            {ws.idx(-r, v), boundary_param(-m, 2 * std::int64_t(v), m)},
            {ws.idx(v, r), boundary_param(2 * std::int64_t(v), m, m)},
            {ws.idx(v, -r), boundary_param(2 * std::int64_t(v), -m, m)},
        }};
        for (const auto& [i, t] : ring) {
            for (int c = 0; c < 2; ++c) {
                if (ws.passable(i, c)) bt.heads[c].push_back({t, i});
            }
        }
    }
    for (int c = 0; c < 2; ++c) std::sort(bt.heads[c].begin(), bt.heads[c].end());

    if (!ws.half) {
        std::set<std::vector<int>> seen;
        for (std::size_t rr = 0; rr < sig.size(); ++rr) {
            std::vector<int> rot(sig.size());
            for (std::size_t i = 0; i < sig.size(); ++i) rot[i] = sig[(i + rr) % sig.size()];
            if (!seen.insert(rot).second) continue;
            bt.sig = &rot;
            bt.wrap = 8 * m;
            bt.limit = 0;
            std::fill(bt.visited.begin(), bt.visited.end(), 0);
            if (bt.place_arm(0, std::numeric_limits<std::int64_t>::min() / 2)) return true;
        }
        return false;
    }
    bt.sig = &sig;
    bt.wrap = 0;
    return bt.place_arm(0, std::numeric_limits<std::int64_t>::min() / 2);
}

struct Prepared {
    std::int32_t n = 0;
    bool trivial = false;
    std::vector<int> sig;
};

// Half-plane variants only read their own side of the ball.
Rect required_rect(Coord center, std::int32_t outer, ArmVariant variant) {
    Rect need = ball(center, outer);
    if (variant == ArmVariant::half_plane_above) need.y_min = center.y;
    if (variant == ArmVariant::half_plane_below) need.y_max = center.y;
    return need;
}

Prepared prepare(Workspace& ws, const SiteConfig& cfg, const ArmQuery& q, const char* fn) {
    Prepared out;
    const std::size_t k = q.sequence.size();
    if (k == 0) throw std::invalid_argument(std::string(fn) + ": sequence must be nonempty");
    for (int c : q.sequence.colors) {
        if (c != 0 && c != 1)
            throw std::invalid_argument(std::string(fn) + ": colors must be 0 or 1");
    }
    if (q.inner < 0 || q.outer < 1)
        throw std::invalid_argument(std::string(fn) + ": need inner >= 0 and outer >= 1");
    out.n = std::max<std::int32_t>(q.inner, static_cast<std::int32_t>(k));
    if (out.n >= q.outer) {
        out.trivial = true;
        return out;
    }
    const Rect need = required_rect(q.center, q.outer, q.variant);
    const Rect& dom = cfg.domain();
    if (need.x_min < dom.x_min || need.x_max > dom.x_max || need.y_min < dom.y_min ||
        need.y_max > dom.y_max)
        throw std::invalid_argument(std::string(fn) +
                                    ": config domain must cover the outer ball");
    build_zone(ws, cfg, q.center, out.n, q.outer, q.variant);
    out.sig = q.sequence.colors;
    if (q.variant == ArmVariant::half_plane_below)
        std::reverse(out.sig.begin(), out.sig.end());
    return out;
}

// Wildcard cells: rewritable by the defect, passable for both colors.
void mark_wildcards(Workspace& ws, const ArmQuery& q, Coord center) {
    const bool flip = q.variant == ArmVariant::half_plane_below;
    const std::int32_t cx = center.x - q.center.x;
    const std::int32_t cy = flip ? q.center.y - center.y : center.y - q.center.y;
    std::fill(ws.wild.begin(), ws.wild.begin() + ws.cells(), std::uint8_t(0));
    for (std::int32_t dy = std::max(cy - 3, -ws.N - 1); dy <= std::min(cy + 3, ws.N + 1); ++dy) {
        for (std::int32_t dx = std::max(cx - 3, -ws.N - 1); dx <= std::min(cx + 3, ws.N + 1);
             ++dx) {
            const std::int32_t i = ws.idx(dx, dy);
            if (!is_wall(ws.cls[i])) ws.wild[i] = 1;
        }
    }
    ws.any_wild = true;
}

std::string query_spec(const ArmQuery& q, double p) {
    std::ostringstream os;
    os << "arms sigma=";
    for (int c : q.sequence.colors) os << c;
    os << " inner=" << q.inner << " outer=" << q.outer << " variant=";
    switch (q.variant) {
        case ArmVariant::full_plane: os << "full"; break;
        case ArmVariant::half_plane_above: os << "hp-above"; break;
        case ArmVariant::half_plane_below: os << "hp-below"; break;
    }
    os << " defect=" << (q.allow_defect ? 1 : 0) << " p=" << p;
    return os.str();
}

}  // namespace

int max_disjoint_crossings(const SiteConfig& config, Coord u, std::int32_t n, std::int32_t N,
                           int color, ArmVariant variant) {
    if (color != 0 && color != 1)
        throw std::invalid_argument("max_disjoint_crossings: color must be 0 or 1");
    if (n < 0 || N < 1) throw std::invalid_argument("max_disjoint_crossings: need n >= 0, N >= 1");
    if (n >= N) return 0;
    const Rect need = required_rect(u, N, variant);
    const Rect& dom = config.domain();
    if (need.x_min < dom.x_min || need.x_max > dom.x_max || need.y_min < dom.y_min ||
        need.y_max > dom.y_max)
        throw std::invalid_argument("max_disjoint_crossings: config domain must cover the outer ball");
    Workspace& ws = workspace();
    build_zone(ws, config, u, n, N, variant);
    ring_sources(ws, color, ws.ring_);
    ws.fresh_flow();
    int got = 0;
    while (augment(ws, color, ws.ring_)) ++got;
    return got;
}

bool has_arm_event(const SiteConfig& config, const ArmQuery& q) {
    if (q.allow_defect)
        throw std::invalid_argument("has_arm_event: defect queries go to has_defected_arm_event");
    Workspace& ws = workspace();
    const Prepared p = prepare(ws, config, q, "has_arm_event");
    if (p.trivial) return true;
    return detect_core(ws, p.sig, false);
}

bool has_defected_arm_event(const SiteConfig& config, const ArmQuery& q) {
    if (!q.allow_defect)
        throw std::invalid_argument("has_defected_arm_event: query must set allow_defect");
    ArmQuery plain = q;
    plain.allow_defect = false;
    if (has_arm_event(config, plain)) return true;

    Workspace& ws = workspace();
    const std::int32_t n = std::max<std::int32_t>(q.inner, static_cast<std::int32_t>(q.sequence.size()));
    const std::int32_t lo = std::max<std::int32_t>(0, n - 2);
    const std::int32_t hi = q.outer + 3;
    std::vector<Coord> centers;
    for (std::int32_t ay = -hi; ay <= hi; ++ay) {
        for (std::int32_t ax = -hi; ax <= hi; ++ax) {
            if (std::max(std::abs(ax), std::abs(ay)) < lo) continue;
            centers.push_back({q.center.x + ax, q.center.y + ay});
        }
    }

    // Cheap monochromatic patches catch most repairable configs.
    const std::array<std::pair<std::int32_t, bool>, 6> patches = {
        {{3, true}, {3, false}, {1, true}, {1, false}, {2, true}, {2, false}}};
    for (Coord c : centers) {
        for (const auto& [radius, fill] : patches) {
            SiteConfig rewritten = config;
            const Rect patch = ball(c, radius);
            for (std::int32_t y = patch.y_min; y <= patch.y_max; ++y) {
                for (std::int32_t x = patch.x_min; x <= patch.x_max; ++x) {
                    if (rewritten.domain().contains(Coord{x, y})) rewritten.set({x, y}, fill);
                }
            }
            if (has_arm_event(rewritten, plain)) return true;
        }
    }

    // Exact fallback: a rewrite of the ball exists iff a path system exists
    // with the ball's cells passable by either color.
    for (Coord c : centers) {
        const Prepared p = prepare(ws, config, plain, "has_defected_arm_event");
        if (p.trivial) return true;
        mark_wildcards(ws, q, c);
        if (detect_core(ws, p.sig, true)) return true;
    }
    return false;
}

Estimate estimate_arm_probability(const ArmQuery& q, double p, std::int64_t samples,
                                  const RandomSource& source) {
    if (samples < 1)
        throw std::invalid_argument("estimate_arm_probability: need samples >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("estimate_arm_probability: need p in [0,1]");
    const Rect domain = ball(q.center, q.outer);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const SiteConfig cfg = sample_config(domain, p, source.substream(std::uint64_t(i)));
        const bool hit = q.allow_defect ? has_defected_arm_event(cfg, q) : has_arm_event(cfg, q);
        hits += hit ? 1 : 0;
    }
    return make_estimate(hits, samples, source.seed, query_spec(q, p));
}

}  // namespace sdplab
