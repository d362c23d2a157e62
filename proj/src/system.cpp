#include "tilesim/system.hpp"

#include <algorithm>

#include "tilesim/configuration.hpp"
#include "tilesim/engine.hpp"

namespace tilesim {

GlueId TileSystem::intern_glue(const std::string& name) {
    if (name.empty()) return kNullGlue;
    auto it = glue_index_.find(name);
    if (it != glue_index_.end()) return it->second;
    GlueId id = static_cast<GlueId>(glue_names_.size());
    glue_names_.push_back(name);
    glue_index_.emplace(name, id);
    return id;
}

GlueId TileSystem::find_glue(const std::string& name) const {
    auto it = glue_index_.find(name);
    return it == glue_index_.end() ? kNullGlue : it->second;
}

void TileSystem::add_relation(GlueId a, GlueId b) {
    if (a == kNullGlue || b == kNullGlue)
        throw TilesimError("cannot relate the null glue");
    relation_.insert(pair_key(a, b));
}

std::vector<std::pair<GlueId, GlueId>> TileSystem::relation_pairs() const {
    std::vector<std::pair<GlueId, GlueId>> out;
    out.reserve(relation_.size());
    for (std::uint64_t k : relation_)
        out.emplace_back(static_cast<GlueId>(k >> 32),
                         static_cast<GlueId>(k & 0xffffffffu));
    return out;
}

int TileSystem::add_tile(TileType t) {
    if (tile_index_.count(t.id)) throw TilesimError("duplicate tile id: " + t.id);
    int idx = static_cast<int>(tiles_.size());
    tile_index_.emplace(t.id, idx);
    tiles_.push_back(std::move(t));
    return idx;
}

int TileSystem::tile_index(const std::string& id) const {
    auto it = tile_index_.find(id);
    return it == tile_index_.end() ? -1 : it->second;
}

int TileSystem::intern_arm(const std::string& name) {
    auto it = arm_index_.find(name);
    if (it != arm_index_.end()) return it->second;
    int id = static_cast<int>(arm_names_.size());
    arm_names_.push_back(name);
    arm_index_.emplace(name, id);
    return id;
}

int TileSystem::find_arm(const std::string& name) const {
    auto it = arm_index_.find(name);
    return it == arm_index_.end() ? -1 : it->second;
}

void TileSystem::validate() const {
    if (dimension != 2 && dimension != 3)
        throw TilesimError("dimension must be 2 or 3");
    for (const TileType& t : tiles_) {
        for (int d = 0; d < kNumDirs; ++d) {
            const GlueSpec& g = t.sides[d];
            if (g.strength < 0 || g.strength > 2)
                throw TilesimError("tile " + t.id + ": glue strength out of range");
            if (g.name == kNullGlue && g.strength != 0)
                throw TilesimError("tile " + t.id + ": null glue with nonzero strength");
            if (g.name != kNullGlue &&
                (g.name < 0 || g.name >= static_cast<GlueId>(glue_names_.size())))
                throw TilesimError("tile " + t.id + ": undeclared glue");
            if (dimension == 2 && d >= 4 && g.strength != 0)
                throw TilesimError("tile " + t.id + ": up/down glue in a 2D system");
        }
        if (t.arm >= arm_count())
            throw TilesimError("tile " + t.id + ": undeclared arm label");
    }
    if (seed.empty()) throw TilesimError("empty seed assembly");
    std::set<Position> seen;
    for (const auto& [pos, tile] : seed) {
        if (tile < 0 || tile >= tile_count())
            throw TilesimError("seed references unknown tile");
        if (!seen.insert(pos).second)
            throw TilesimError("seed places two tiles at one position");
        if (dimension == 2 && pos.z != 0)
            throw TilesimError("seed uses z in a 2D system");
    }
    Configuration c = Configuration::from_seed(*this);
    if (!check_stable(c, *this))
        throw TilesimError("seed assembly is not stable");
}

}  // namespace tilesim
