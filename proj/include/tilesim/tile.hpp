#pragma once

#include <array>
#include <string>

#include "tilesim/geometry.hpp"

namespace tilesim {

// Interned glue name. 0 is the reserved null glue (empty side).
using GlueId = int;
inline constexpr GlueId kNullGlue = 0;

// Glue name plus binding strength (0, 1 or 2).
struct GlueSpec {
    GlueId name = kNullGlue;
    int strength = 0;

    friend bool operator==(const GlueSpec&, const GlueSpec&) = default;
};

// A unit square (2D) or cube (3D). Fixed orientation; no rotation.
struct TileType {
    std::string id;
    std::array<GlueSpec, kNumDirs> sides{};  // indexed by Dir
    int arm = -1;                            // subassembly label, -1 = unlabeled
    bool erroneous = false;                  // deliberate blockage tile

    const GlueSpec& side(Dir d) const { return sides[static_cast<int>(d)]; }
    GlueSpec& side(Dir d) { return sides[static_cast<int>(d)]; }
};

}  // namespace tilesim
