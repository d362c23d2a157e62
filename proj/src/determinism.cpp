#include "tilesim/determinism.hpp"

#include <algorithm>
#include <unordered_set>

namespace tilesim {

namespace {

struct Explorer {
    const TileSystem& sys;
    const EnumerationBound& bound;
    bool reverse;
    std::unordered_set<std::string> seen;
    EnumerationResult result;
    std::unordered_set<std::string> terminal_keys;

    // Returns false once a cap is hit and exploration should unwind.
    bool visit(Configuration& config) {
        std::string key = config.canonical_key(sys);
        if (!seen.insert(key).second) return true;
        if (++result.visited > bound.max_branches) {
            result.bound_exceeded = true;
            return false;
        }
        auto options = frontier(config, sys);
        if (options.empty()) {
            if (terminal_keys.insert(key).second) result.terminals.push_back(config);
            return true;
        }
        if (config.size() >= bound.max_tiles) {
            result.bound_exceeded = true;
            return true;  // prune this branch but keep exploring others
        }
        if (reverse) std::reverse(options.begin(), options.end());
        for (const auto& [pos, tile] : options) {
            Configuration next = config;
            next.place(sys, pos, tile);
            if (!visit(next)) return false;
        }
        return true;
    }
};

}  // namespace

EnumerationResult enumerate_terminal_assemblies(const TileSystem& sys,
                                                const EnumerationBound& bound,
                                                bool reverse_order) {
    Configuration seed = Configuration::from_seed(sys);
    if (seed.size() > bound.max_tiles)
        throw TilesimError("bound smaller than the seed assembly");
    Explorer e{sys, bound, reverse_order, {}, {}, {}};
    e.visit(seed);
    return std::move(e.result);
}

std::string LDWitness::describe(const TileSystem& sys) const {
    std::string s = "condition " + std::to_string(condition) + " at " +
                    to_string(location, sys.dimension) + ": tile " +
                    sys.tile(placed_tile).id;
    if (condition == 1) {
        s += " bound with non-minimal strength";
    } else {
        s += " competes with";
        for (int t : competing_tiles) s += " " + sys.tile(t).id;
    }
    s += " (prefix length " + std::to_string(prefix.size()) + ")";
    return s;
}

namespace {

struct LDExplorer {
    const TileSystem& sys;
    const EnumerationBound& bound;
    std::unordered_set<std::string> seen;
    int visited = 0;
    LDVerdict verdict;
    std::vector<Attachment> path;

    // Returns false to stop the whole search (violation or hard cap).
    bool visit(Configuration& config) {
        std::string key = config.canonical_key(sys);
        if (!seen.insert(key).second) return true;
        if (++visited > bound.max_branches) {
            verdict.bound_exceeded = true;
            return false;
        }
        auto options = frontier(config, sys);
        if (options.empty()) return true;  // terminal: condition 3 holds here
        if (config.size() >= bound.max_tiles) {
            verdict.bound_exceeded = true;
            return true;
        }
        // Group options by position to detect competing tile types.
        for (std::size_t i = 0; i < options.size(); ++i) {
            const auto& [pos, tile] = options[i];
            int strength = binding_strength(config, sys, pos, tile);
            LDWitness w;
            if (strength != kTemperature) {
                w.condition = 1;
            } else {
                for (const auto& [pos2, tile2] : options)
                    if (pos2 == pos && tile2 != tile) w.competing_tiles.push_back(tile2);
                if (w.competing_tiles.empty()) continue;
                w.condition = 2;
            }
            w.prefix = path;
            w.location = pos;
            w.placed_tile = tile;
            verdict.witness = std::move(w);
            return false;
        }
        for (const auto& [pos, tile] : options) {
            Configuration next = config;
            next.place(sys, pos, tile);
            path.push_back({pos, tile});
            bool keep_going = visit(next);
            path.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

LDVerdict check_local_determinism(const TileSystem& sys, const EnumerationBound& bound) {
    LDExplorer e{sys, bound, {}, 0, {}, {}};
    Configuration seed = Configuration::from_seed(sys);
    e.visit(seed);
    e.verdict.is_locally_deterministic = !e.verdict.witness && !e.verdict.bound_exceeded;
    return std::move(e.verdict);
}

UniqueTerminalResult verify_unique_terminal(const TileSystem& sys,
                                            const EnumerationBound& bound) {
    EnumerationResult r = enumerate_terminal_assemblies(sys, bound);
    return {r.terminals.size() == 1 && !r.bound_exceeded, r.bound_exceeded,
            static_cast<int>(r.terminals.size())};
}

}  // namespace tilesim
