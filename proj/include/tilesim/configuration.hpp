#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tilesim/geometry.hpp"
#include "tilesim/system.hpp"

namespace tilesim {

struct PlacedTile {
    int tile = -1;   // index into TileSystem tiles
    int order = -1;  // placement index; seed tiles come first
};

// A partial, seed-connected placement of tiles plus blockage state.
class Configuration {
public:
    static Configuration from_seed(const TileSystem& sys);

    bool occupied(const Position& p) const { return placement_.count(p) != 0; }
    const PlacedTile* at(const Position& p) const {
        auto it = placement_.find(p);
        return it == placement_.end() ? nullptr : &it->second;
    }
    int size() const { return static_cast<int>(placement_.size()); }
    int next_order() const { return next_order_; }

    // Raw placement; positions in unspecified order.
    const std::unordered_map<Position, PlacedTile, PositionHash>& placement() const {
        return placement_;
    }
    std::vector<std::pair<Position, PlacedTile>> sorted_placement() const;

    // Places a tile without legality checks (legality lives in the engine).
    // An erroneous tile freezes its arm and counts as a blockage.
    void place(const TileSystem& sys, const Position& p, int tile);

    void freeze_arm(int arm) { frozen_arms_.insert(frozen_arms_.end(), arm); }
    bool arm_frozen(int arm) const { return frozen_arms_.count(arm) != 0; }
    const std::set<int>& frozen_arms() const { return frozen_arms_; }

    int blockage_count() const { return blockage_count_; }
    void add_injected_blockage() { ++blockage_count_; }

    // Canonical serialization of (placement, frozen arms, blockage count);
    // used for deduplication and injectivity checks.
    std::string canonical_key(const TileSystem& sys) const;

    // Equality is by position -> tile mapping plus blockage state; placement
    // order is history, not content.
    friend bool operator==(const Configuration& a, const Configuration& b);

private:
    std::unordered_map<Position, PlacedTile, PositionHash> placement_;
    std::set<int> frozen_arms_;
    int blockage_count_ = 0;
    int next_order_ = 0;
};

}  // namespace tilesim
