#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilesim/engine.hpp"

namespace tilesim {

struct EnumerationBound {
    int max_tiles = 24;       // tiles per configuration, seed included
    int max_branches = 200000;  // safety cap on distinct visited configurations
};

struct EnumerationResult {
    std::vector<Configuration> terminals;
    bool bound_exceeded = false;  // some branch hit max_tiles or max_branches
    int visited = 0;              // distinct configurations explored
};

// Exhaustive exploration of every legal attachment order (configurations
// deduplicated; attachability depends only on the configuration, so the
// reachable set is order-independent). reverse_order flips the branch
// exploration order; results must not change.
EnumerationResult enumerate_terminal_assemblies(const TileSystem& sys,
                                                const EnumerationBound& bound,
                                                bool reverse_order = false);

struct LDWitness {
    std::vector<Attachment> prefix;     // attachments leading to the violation
    Position location;                  // where it happened
    int placed_tile = -1;               // tile bound there
    std::vector<int> competing_tiles;   // other types that could legally bind
    int condition = 0;                  // 1 = non-minimal strength, 2 = non-unique
    std::string describe(const TileSystem& sys) const;
};

struct LDVerdict {
    bool is_locally_deterministic = false;
    bool bound_exceeded = false;
    std::optional<LDWitness> witness;
};

// Checks local determinism over all assembly sequences up to the bound:
// (1) every attachment binds with exactly the minimum strength (2);
// (2) at each attachment, deleting the tile and its OUT-neighbors (the
//     not-yet-placed tiles that will consume its glue) leaves no other tile
//     type able to bind there -- rendered as: no competing type is attachable
//     at that location against the same prefix, for any reachable prefix;
// (3) every maximal sequence within the bound ends terminal (automatic for
//     bounded exhaustive search; exceeding the bound is reported instead).
// Seed positions are exempt, as seed tiles are not added by any sequence.
LDVerdict check_local_determinism(const TileSystem& sys, const EnumerationBound& bound);

struct UniqueTerminalResult {
    bool unique = false;
    bool bound_exceeded = false;
    int terminal_count = 0;
};

UniqueTerminalResult verify_unique_terminal(const TileSystem& sys,
                                            const EnumerationBound& bound);

}  // namespace tilesim
