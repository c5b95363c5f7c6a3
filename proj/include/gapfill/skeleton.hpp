#pragma once

#include <vector>

#include "gapfill/image.hpp"

namespace gapfill {

struct PruneParams {
    int max_spur_length = 0;  // 0 disables pruning
};

// Iterative thinning to a one-pixel-wide 8-connected skeleton.  Each of the
// two directional subpasses marks its candidates against a frozen snapshot
// (so one boundary layer peels per subpass and thick shapes settle on their
// medial axis) and then deletes them one at a time with a live re-check
// (so every 8-connected component stays represented; a blind batch wipe
// would erase 2x2 blocks outright).  Idempotent.
BinaryImage thin(const BinaryImage& img);

// Foreground pixels with exactly one foreground 8-neighbor, in raster order.
std::vector<PixelCoord> find_endpoints(const BinaryImage& img);

// Remove side branches: walk inward from each endpoint; a chain that within
// max_spur_length pixels reaches a junction (a pixel with two or more
// distinct continuations besides the chain; a touching pair counts as one
// thick corner) is a spur.  The shortest spur is deleted (ties by the
// endpoint's raster position) and the scan restarts on the updated image,
// until no spur remains.  Removing the short arm of a fork first lets the
// longer continuation re-walk through the former junction and survive.
// Longer branches and bare paths (endpoint to endpoint) are kept.
BinaryImage prune(const BinaryImage& img, const PruneParams& params);

// Keep only the largest 8-connected component; ties keep the component whose
// smallest (y, x) pixel comes first.  Empty input stays empty.
BinaryImage largest_component(const BinaryImage& img);

}  // namespace gapfill
