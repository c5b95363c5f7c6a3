#include "gapfill/skeleton.hpp"

#include <cstdlib>
#include <queue>

namespace gapfill {

namespace {

// 8-neighborhood ring, clockwise from north.
constexpr int kDx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kDy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};

int degree(const BinaryImage& img, int x, int y) {
    int n = 0;
    for (int k = 0; k < 8; ++k) n += img.at(x + kDx[k], y + kDy[k]);
    return n;
}

bool deletable(const BinaryImage& img, int x, int y, int sub) {
    uint8_t p[8];
    int b = 0;
    for (int k = 0; k < 8; ++k) {
        p[k] = img.at(x + kDx[k], y + kDy[k]);
        b += p[k];
    }
    if (b < 2 || b > 6) return false;  // endpoint or interior pixel
    int transitions = 0;
    for (int k = 0; k < 8; ++k)
        if (!p[k] && p[(k + 1) % 8]) ++transitions;
    if (transitions != 1) return false;  // removal would split the ring
    // Directional conditions: p[0]=N, p[2]=E, p[4]=S, p[6]=W.
    if (sub == 0) return !(p[0] && p[2] && p[4]) && !(p[2] && p[4] && p[6]);
    return !(p[0] && p[2] && p[6]) && !(p[0] && p[4] && p[6]);
}

// True when deleting (x, y) keeps its white neighbors mutually 8-connected
// and opens no hole.  The white ring slots must form one component under
// their own pixel adjacency: consecutive slots touch, and the edge slots
// N/E/S/W also touch the next edge slot across the corner between them (a
// plain 01-transition count misses that bridge and refuses safely deletable
// corners).  The vacated pixel must also have a 4-adjacent background slot,
// or removing it would leave an isolated background dot.
bool simple_point(const BinaryImage& img, int x, int y) {
    uint8_t p[8];
    int b = 0;
    for (int k = 0; k < 8; ++k) {
        p[k] = img.at(x + kDx[k], y + kDy[k]);
        b += p[k];
    }
    if (b == 0) return false;                    // lone pixel: keep
    if (p[0] && p[2] && p[4] && p[6]) return false;  // would open a pinhole
    bool seen[8] = {};
    int comps = 0;
    for (int k = 0; k < 8; ++k) {
        if (!p[k] || seen[k]) continue;
        ++comps;
        int stack[8];
        int top = 0;
        stack[top++] = k;
        seen[k] = true;
        while (top > 0) {
            const int c = stack[--top];
            const int adj[4] = {(c + 1) & 7, (c + 7) & 7, (c & 1) ? -1 : (c + 2) & 7,
                                (c & 1) ? -1 : (c + 6) & 7};
            for (const int a : adj) {
                if (a < 0 || !p[a] || seen[a]) continue;
                seen[a] = true;
                stack[top++] = a;
            }
        }
    }
    return comps == 1;
}

}  // namespace

BinaryImage thin(const BinaryImage& img) {
    BinaryImage out = img;
    std::vector<PixelCoord> marked;
    while (true) {
        bool changed = false;
        for (int sub = 0; sub < 2; ++sub) {
            // Candidates are marked against the image as it stood at the top
            // of the subpass, so each subpass peels exactly one boundary
            // layer and thick shapes erode evenly from both sides onto their
            // medial axis.  (Deleting as we scan would let one raster sweep
            // eat a thick bar from the top clear through to its bottom row.)
            marked.clear();
            for (int y = 0; y < out.height; ++y)
                for (int x = 0; x < out.width; ++x)
                    if (out.px(x, y) && deletable(out, x, y, sub)) marked.push_back({x, y});
            // Apply one at a time, re-checking against the live image: a
            // blind batch wipe would erase isolated 2x2 blocks outright.
            for (const PixelCoord m : marked) {
                if (deletable(out, m.x, m.y, sub)) {
                    out.px(m.x, m.y) = 0;
                    changed = true;
                }
            }
        }
        if (changed) continue;
        // Subpasses have converged.  Junction tangles can still hold a 2x2
        // block whose members the directional conditions all refuse
        // (interior or local cut vertex).  Break each such block at its
        // first simple member, then hand back to the subpasses to re-thin
        // the neighborhood.  Running this on non-converged shapes instead
        // would chew boundary blocks and wreck the even peeling above.
        for (int y = 0; y + 1 < out.height; ++y) {
            for (int x = 0; x + 1 < out.width; ++x) {
                if (!(out.px(x, y) && out.px(x + 1, y) && out.px(x, y + 1) &&
                      out.px(x + 1, y + 1)))
                    continue;
                const PixelCoord members[4] = {{x, y}, {x + 1, y}, {x, y + 1}, {x + 1, y + 1}};
                for (const PixelCoord m : members) {
                    if (simple_point(out, m.x, m.y)) {
                        out.px(m.x, m.y) = 0;
                        changed = true;
                        break;
                    }
                }
            }
        }
        if (!changed) return out;
    }
}

std::vector<PixelCoord> find_endpoints(const BinaryImage& img) {
    std::vector<PixelCoord> eps;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (img.px(x, y) && degree(img, x, y) == 1) eps.push_back({x, y});
    return eps;
}

namespace {

// Walk inward from endpoint e along degree-<=2 pixels.  Fills `chain` and
// returns true when the walk reaches a pixel that continues in at least two
// genuinely distinct directions besides the chain (a junction) within
// max_len pixels.  Two continuations that touch each other are one thick
// corner, not a fork: thinning leaves such corners on staircased curves,
// and reading them as junctions would chop off genuine curve tails.  Walks
// that exceed the cap or end at another endpoint qualify nothing.
bool spur_chain(const BinaryImage& img, PixelCoord e, int max_len,
                std::vector<PixelCoord>& chain) {
    chain.clear();
    PixelCoord prev{-1, -1};
    PixelCoord cur = e;
    while (true) {
        chain.push_back(cur);
        if (static_cast<int>(chain.size()) > max_len) return false;  // branch too long
        PixelCoord next{-1, -1};
        int n_next = 0;
        for (int k = 0; k < 8; ++k) {
            const int nx = cur.x + kDx[k], ny = cur.y + kDy[k];
            if (img.at(nx, ny) && !(nx == prev.x && ny == prev.y)) {
                next = {nx, ny};
                ++n_next;
            }
        }
        if (n_next != 1) return false;  // dead end (or unexpectedly thick)
        PixelCoord others[8];
        int n_others = 0;
        for (int k = 0; k < 8; ++k) {
            const int ox = next.x + kDx[k], oy = next.y + kDy[k];
            if (img.at(ox, oy) && !(ox == cur.x && oy == cur.y)) others[n_others++] = {ox, oy};
        }
        if (n_others == 0) return false;  // bare endpoint-to-endpoint path: keep
        if (n_others >= 3) return true;   // hangs off a junction: a spur
        if (n_others == 2) {
            const bool corner_pair = std::abs(others[0].x - others[1].x) <= 1 &&
                                     std::abs(others[0].y - others[1].y) <= 1;
            return !corner_pair;  // fork is a spur anchor; thick corner is not
        }
        prev = cur;
        cur = next;
    }
}

}  // namespace

BinaryImage prune(const BinaryImage& img, const PruneParams& params) {
    BinaryImage out = img;
    if (params.max_spur_length <= 0) return out;

    // One chain is removed at a time, always the shortest qualifying one
    // (ties go to the earliest endpoint in raster order).  At a forked curve
    // end this deletes the short arm first, which demotes the fork to a
    // plain through-pixel, so the genuine continuation re-walks past it and
    // survives; removing all marked chains in one batch would take both arms
    // and retract the curve.
    std::vector<PixelCoord> chain, best;
    while (true) {
        best.clear();
        for (const PixelCoord e : find_endpoints(out)) {
            if (spur_chain(out, e, params.max_spur_length, chain) &&
                (best.empty() || chain.size() < best.size()))
                best = chain;
        }
        if (best.empty()) return out;
        for (const PixelCoord p : best) out.px(p.x, p.y) = 0;
    }
}

BinaryImage largest_component(const BinaryImage& img) {
    BinaryImage out(img.width, img.height);
    std::vector<uint8_t> seen(img.size(), 0);
    std::vector<PixelCoord> best, current;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const size_t idx = static_cast<size_t>(y) * img.width + x;
            if (!img.px(x, y) || seen[idx]) continue;
            current.clear();
            std::queue<PixelCoord> q;
            q.push({x, y});
            seen[idx] = 1;
            while (!q.empty()) {
                const PixelCoord p = q.front();
                q.pop();
                current.push_back(p);
                for (int k = 0; k < 8; ++k) {
                    const int nx = p.x + kDx[k], ny = p.y + kDy[k];
                    if (!img.in_bounds(nx, ny) || !img.px(nx, ny)) continue;
                    const size_t nidx = static_cast<size_t>(ny) * img.width + nx;
                    if (seen[nidx]) continue;
                    seen[nidx] = 1;
                    q.push({nx, ny});
                }
            }
            // Strict > keeps the first component found on ties, and raster
            // scan discovers components in smallest-(y,x) order.
            if (current.size() > best.size()) best = current;
        }
    }
    for (const PixelCoord p : best) out.px(p.x, p.y) = 1;
    return out;
}

}  // namespace gapfill
