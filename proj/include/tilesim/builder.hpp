#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tilesim/system.hpp"

namespace tilesim {

// Tile description with glue names still textual; building block for the
// construction generators before interning into a TileSystem.
struct ProtoGlue {
    std::string name;
    int strength = 0;
};

struct ProtoTile {
    std::string id;
    std::array<ProtoGlue, kNumDirs> sides{};
    bool erroneous = false;

    ProtoTile& set(Dir d, std::string name, int strength) {
        sides[static_cast<int>(d)] = {std::move(name), strength};
        return *this;
    }
};

// A construction fragment in its own canonical coordinates.
struct ProtoSystem {
    int dimension = 2;
    std::vector<ProtoTile> tiles;
    std::vector<std::pair<Position, std::string>> seed;  // (pos, tile id)
    std::vector<std::pair<std::string, std::string>> relations;

    ProtoTile& add(const std::string& id) {
        tiles.push_back(ProtoTile{id, {}, false});
        return tiles.back();
    }
};

// Integer lattice frame: world = origin + x*ex + y*ey, z translated only.
// Directions permute with the axes, so a fragment designed "rows north,
// growth east" can be planted facing any compass direction.
struct Frame {
    Position origin{};
    int ex_x = 1, ex_y = 0;  // image of canonical +x
    int ey_x = 0, ey_y = 1;  // image of canonical +y

    static Frame facing_east(Position origin) { return {origin, 1, 0, 0, 1}; }
    static Frame facing_west(Position origin) { return {origin, -1, 0, 0, 1}; }
    static Frame facing_north(Position origin) { return {origin, 0, 1, -1, 0}; }
    static Frame facing_south(Position origin) { return {origin, 0, -1, 1, 0}; }

    Position to_world(const Position& p) const {
        return {origin.x + p.x * ex_x + p.y * ey_x,
                origin.y + p.x * ex_y + p.y * ey_y,
                origin.z + p.z};
    }
    Dir map_dir(Dir canonical) const;
};

// Copies a fragment into a system: ids and glue names get the namespace
// prefix, positions and sides go through the frame, every tile gets an arm
// label (empty = none). Throws on id collisions.
void transplant(TileSystem& dst, const ProtoSystem& proto, const std::string& ns,
                const std::string& arm, const Frame& frame);
// Variant assigning arm labels per proto tile id.
void transplant(TileSystem& dst, const ProtoSystem& proto, const std::string& ns,
                const std::function<std::string(const std::string&)>& arm_of,
                const Frame& frame);

}  // namespace tilesim
