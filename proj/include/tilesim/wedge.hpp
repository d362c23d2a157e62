#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilesim/builder.hpp"
#include "tilesim/turing.hpp"

namespace tilesim {

// Row-by-row machine simulation in canonical coordinates: row y holds the
// tape after y head moves, rows stack north and each row extends one cell
// east (the wedge slope). Within a row, growth radiates from a strength-2
// pivot above the previous head: the written cell binds first, the state hops
// one cell sideways, copies fill outward, and the slope cell extends east.
// If the machine halts, a marker crawls east along the final row and walks
// down the slope until a halting tile binds beside the seed row.
//
// Column 0 is tracked through flagged symbols so wall tiles can expose a
// west-face ladder glue ("wall.<p>", parity p = row mod wall_parity); the
// message-passing and consensus constructions read those faces.
struct WedgeProto {
    ProtoSystem proto;
    TuringMachineSpec tm;
    int parity = 1;      // wall-glue row parity period
    int base_end = 1;    // east end of the seed row (canonical x)
};

struct WedgeOptions {
    int wall_parity = 1;
    // Optional strength-2 glue on the seed row's west face, so composers can
    // anchor ladder bases into the seed.
    std::string seed_west_anchor;
};

WedgeProto make_wedge_proto(const TuringMachineSpec& tm, const WedgeOptions& opts = {});

// Tiles added by the first `rows` complete rows (seed excluded), in canonical
// coordinates; the exact set the engine converges to row by row. If the
// machine halts within `rows` and include_marker is set, the halting marker
// path is appended. Oracle-checked against TmInterpreter in tests.
std::vector<std::pair<Position, std::string>> wedge_grown_tiles(const WedgeProto& wp,
                                                                int rows,
                                                                bool include_marker);

// Number of rows the wedge builds before halting (rows == head moves), or
// nullopt if the machine does not halt within probe_limit moves.
std::optional<int> wedge_halt_rows(const WedgeProto& wp, int probe_limit);

// The symbol a canonical cell carries, as decoded from a grown tile id;
// empty if the tile is not a tape-content tile. Used by the row oracle.
std::string wedge_tile_symbol(const WedgeProto& wp, const std::string& tile_id);

// Standalone 2D system for one machine (identity frame, no namespace).
TileSystem gen_wedge(const TuringMachineSpec& tm);

}  // namespace tilesim
