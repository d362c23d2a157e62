#pragma once

#include "tilesim/builder.hpp"
#include "tilesim/system.hpp"

namespace tilesim::tests {

// Four-tile toy system: a seed with two strength-2 glues, one tile binding
// east, one north, and a corner tile binding cooperatively with two
// strength-1 glues. The optional fifth tile binds east of the seed like tile
// A but exposes nothing, so once placed the corner can never complete: a
// deliberate blockage. With labels, every tile carries arm "main".
inline TileSystem toy_square_system(bool with_erroneous, bool with_arm_labels = false) {
    TileSystem sys;
    sys.dimension = 2;
    sys.manifest = "fixture: toy-square";
    GlueId a = sys.intern_glue("a");
    GlueId b = sys.intern_glue("b");
    GlueId c = sys.intern_glue("c");
    GlueId d = sys.intern_glue("d");
    int arm = with_arm_labels ? sys.intern_arm("main") : -1;

    TileType seed;
    seed.id = "S";
    seed.arm = arm;
    seed.side(Dir::North) = {a, 2};
    seed.side(Dir::East) = {b, 2};
    int seed_idx = sys.add_tile(seed);

    TileType ta;  // east of seed
    ta.id = "A";
    ta.arm = arm;
    ta.side(Dir::West) = {b, 2};
    ta.side(Dir::North) = {c, 1};
    sys.add_tile(ta);

    TileType tb;  // north of seed
    tb.id = "B";
    tb.arm = arm;
    tb.side(Dir::South) = {a, 2};
    tb.side(Dir::East) = {d, 1};
    sys.add_tile(tb);

    TileType tc;  // corner, cooperative 1+1
    tc.id = "C";
    tc.arm = arm;
    tc.side(Dir::West) = {d, 1};
    tc.side(Dir::South) = {c, 1};
    sys.add_tile(tc);

    if (with_erroneous) {
        TileType tx;
        tx.id = "X";
        tx.arm = arm;
        tx.erroneous = true;
        tx.side(Dir::West) = {b, 2};
        sys.add_tile(tx);
    }

    sys.seed.emplace_back(Position{0, 0, 0}, seed_idx);
    sys.validate();
    return sys;
}

}  // namespace tilesim::tests
