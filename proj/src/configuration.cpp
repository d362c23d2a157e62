#include "tilesim/configuration.hpp"

#include <algorithm>

namespace tilesim {

Configuration Configuration::from_seed(const TileSystem& sys) {
    Configuration c;
    // Seed order is the declaration order; it fixes placement indices.
    for (const auto& [pos, tile] : sys.seed) c.place(sys, pos, tile);
    return c;
}

void Configuration::place(const TileSystem& sys, const Position& p, int tile) {
    if (placement_.count(p)) throw TilesimError("position occupied");
    placement_.emplace(p, PlacedTile{tile, next_order_++});
    const TileType& t = sys.tile(tile);
    if (t.erroneous) {
        ++blockage_count_;
        if (t.arm >= 0) frozen_arms_.insert(t.arm);
    }
}

std::vector<std::pair<Position, PlacedTile>> Configuration::sorted_placement() const {
    std::vector<std::pair<Position, PlacedTile>> out(placement_.begin(), placement_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string Configuration::canonical_key(const TileSystem& sys) const {
    std::string key;
    key.reserve(placement_.size() * 16);
    for (const auto& [pos, placed] : sorted_placement()) {
        key += to_string(pos, 3);
        key += '=';
        key += sys.tile(placed.tile).id;
        key += ';';
    }
    key += '|';
    for (int arm : frozen_arms_) {
        key += sys.arm_name(arm);
        key += ';';
    }
    key += '|';
    key += std::to_string(blockage_count_);
    return key;
}

bool operator==(const Configuration& a, const Configuration& b) {
    if (a.blockage_count_ != b.blockage_count_) return false;
    if (a.frozen_arms_ != b.frozen_arms_) return false;
    if (a.placement_.size() != b.placement_.size()) return false;
    for (const auto& [pos, placed] : a.placement_) {
        auto it = b.placement_.find(pos);
        if (it == b.placement_.end() || it->second.tile != placed.tile) return false;
    }
    return true;
}

}  // namespace tilesim
