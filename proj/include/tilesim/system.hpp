#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tilesim/geometry.hpp"
#include "tilesim/tile.hpp"

namespace tilesim {

struct TilesimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The full tile assembly system: tile types, seed assembly, glue alphabet,
// strength assignment (on the tile sides) and the symmetric glue relation.
// Temperature is fixed at 2 throughout.
class TileSystem {
public:
    int dimension = 2;
    std::string manifest;  // reproduction header carried through files

    // --- glue alphabet -------------------------------------------------
    GlueId intern_glue(const std::string& name);
    GlueId find_glue(const std::string& name) const;  // kNullGlue if absent
    const std::string& glue_name(GlueId g) const { return glue_names_.at(g); }
    int glue_count() const { return static_cast<int>(glue_names_.size()); }

    // Extra related pairs beyond name equality.
    void add_relation(GlueId a, GlueId b);
    bool related(GlueId a, GlueId b) const {
        if (a == kNullGlue || b == kNullGlue) return false;
        if (a == b) return true;
        return relation_.count(pair_key(a, b)) != 0;
    }
    std::vector<std::pair<GlueId, GlueId>> relation_pairs() const;

    // --- tile types -----------------------------------------------------
    int add_tile(TileType t);  // returns index; id must be fresh
    int tile_index(const std::string& id) const;  // -1 if absent
    const TileType& tile(int index) const { return tiles_.at(index); }
    int tile_count() const { return static_cast<int>(tiles_.size()); }
    const std::vector<TileType>& tiles() const { return tiles_; }

    // --- arms -----------------------------------------------------------
    int intern_arm(const std::string& name);
    int find_arm(const std::string& name) const;  // -1 if absent
    const std::string& arm_name(int a) const { return arm_names_.at(a); }
    int arm_count() const { return static_cast<int>(arm_names_.size()); }

    // --- seed -----------------------------------------------------------
    std::vector<std::pair<Position, int>> seed;  // (position, tile index)

    // Checks structural invariants: declared glues, symmetric relation,
    // connected stable seed, dimension constraints. Throws on violation.
    void validate() const;

private:
    static std::uint64_t pair_key(GlueId a, GlueId b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }

    std::vector<std::string> glue_names_{""};  // slot 0 = null glue
    std::unordered_map<std::string, GlueId> glue_index_{{"", kNullGlue}};
    std::set<std::uint64_t> relation_;
    std::vector<TileType> tiles_;
    std::unordered_map<std::string, int> tile_index_;
    std::vector<std::string> arm_names_;
    std::unordered_map<std::string, int> arm_index_;
};

}  // namespace tilesim
