#include "tilesim/engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace tilesim {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw TilesimError("Rng::below(0)");
    if (n == 1) return 0;
    // Classic modulo rejection: discard draws from the biased tail.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    std::uint64_t x = gen_();
    while (limit != std::numeric_limits<std::uint64_t>::max() && x > limit) x = gen_();
    return x % n;
}

static int num_dirs(const TileSystem& sys) { return sys.dimension == 3 ? 6 : 4; }

// Strength contributed across one shared face.
static int bond(const TileSystem& sys, const TileType& a, Dir toward,
                const TileType& b) {
    const GlueSpec& ga = a.side(toward);
    const GlueSpec& gb = b.side(opposite(toward));
    if (!sys.related(ga.name, gb.name)) return 0;
    return std::min(ga.strength, gb.strength);
}

int binding_strength(const Configuration& config, const TileSystem& sys,
                     const Position& pos, int tile) {
    if (config.occupied(pos)) throw TilesimError("position occupied");
    const TileType& t = sys.tile(tile);
    int total = 0;
    for (int d = 0; d < num_dirs(sys); ++d) {
        Dir dir = static_cast<Dir>(d);
        const PlacedTile* n = config.at(pos.shifted(dir));
        if (!n) continue;
        total += bond(sys, t, dir, sys.tile(n->tile));
    }
    return total;
}

bool attachable(const Configuration& config, const TileSystem& sys,
                const Position& pos, int tile) {
    if (config.occupied(pos)) return false;
    if (sys.dimension == 2 && pos.z != 0) return false;
    const TileType& t = sys.tile(tile);
    if (t.arm >= 0 && config.arm_frozen(t.arm)) return false;
    bool adjacent = false;
    for (int d = 0; d < num_dirs(sys); ++d) {
        if (config.occupied(pos.shifted(static_cast<Dir>(d)))) { adjacent = true; break; }
    }
    if (!adjacent) return false;
    return binding_strength(config, sys, pos, tile) >= kTemperature;
}

std::vector<Position> candidate_positions(const Configuration& config,
                                          const TileSystem& sys) {
    std::set<Position> out;
    for (const auto& [pos, placed] : config.placement()) {
        (void)placed;
        for (int d = 0; d < num_dirs(sys); ++d) {
            Position q = pos.shifted(static_cast<Dir>(d));
            if (!config.occupied(q)) out.insert(q);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::pair<Position, int>> frontier(const Configuration& config,
                                               const TileSystem& sys) {
    std::vector<std::pair<Position, int>> out;
    for (const Position& pos : candidate_positions(config, sys))
        for (int t = 0; t < sys.tile_count(); ++t)
            if (attachable(config, sys, pos, t)) out.emplace_back(pos, t);
    return out;
}

bool is_terminal(const Configuration& config, const TileSystem& sys) {
    for (const Position& pos : candidate_positions(config, sys))
        for (int t = 0; t < sys.tile_count(); ++t)
            if (attachable(config, sys, pos, t)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Stability: global min cut of the bond graph (Stoer-Wagner).

bool check_stable(const Configuration& config, const TileSystem& sys) {
    if (config.size() == 0) throw TilesimError("not a configuration");

    std::vector<Position> nodes;
    nodes.reserve(config.size());
    std::unordered_map<Position, int, PositionHash> index;
    for (const auto& [pos, placed] : config.sorted_placement()) {
        (void)placed;
        index.emplace(pos, static_cast<int>(nodes.size()));
        nodes.push_back(pos);
    }

    // Adjacency connectivity first; a disconnected placement is no
    // configuration at all.
    std::vector<char> seen(nodes.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d = 0; d < num_dirs(sys); ++d) {
            auto it = index.find(nodes[v].shifted(static_cast<Dir>(d)));
            if (it != index.end() && !seen[it->second]) {
                seen[it->second] = 1;
                ++reached;
                stack.push_back(it->second);
            }
        }
    }
    if (reached != static_cast<int>(nodes.size()))
        throw TilesimError("not a configuration");

    const int n = static_cast<int>(nodes.size());
    if (n == 1) return true;

    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (int v = 0; v < n; ++v) {
        const TileType& tv = sys.tile(config.at(nodes[v])->tile);
        for (int d = 0; d < num_dirs(sys); ++d) {
            Dir dir = static_cast<Dir>(d);
            auto it = index.find(nodes[v].shifted(dir));
            if (it == index.end()) continue;
            int u = it->second;
            if (u < v) continue;  // count each edge once
            int s = bond(sys, tv, dir, sys.tile(config.at(nodes[u])->tile));
            w[v][u] += s;
            w[u][v] += s;
        }
    }

    // Stoer-Wagner minimum cut.
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    int best = std::numeric_limits<int>::max();
    std::vector<int> weight(n);
    std::vector<char> added(n);
    for (int phase = n; phase > 1; --phase) {
        std::fill(weight.begin(), weight.end(), 0);
        std::fill(added.begin(), added.end(), 0);
        int prev = -1, last = -1;
        for (int it = 0; it < phase; ++it) {
            int sel = -1;
            for (int i = 0; i < phase; ++i)
                if (!added[i] && (sel == -1 || weight[i] > weight[sel])) sel = i;
            added[sel] = 1;
            prev = last;
            last = sel;
            for (int i = 0; i < phase; ++i)
                if (!added[i]) weight[i] += w[active[last]][active[i]];
        }
        best = std::min(best, weight[last]);
        if (best < kTemperature) return false;  // early out
        // merge last into prev
        int a = active[prev], b = active[last];
        for (int i = 0; i < phase; ++i) {
            int c = active[i];
            w[a][c] += w[b][c];
            w[c][a] += w[c][b];
        }
        for (int i = last; i + 1 < phase; ++i) active[i] = active[i + 1];
    }
    return best >= kTemperature;
}

// ---------------------------------------------------------------------------
// Incremental frontier.

void Frontier::insert(const Position& p, int tile) {
    auto key = std::make_pair(p, tile);
    if (index_.count(key)) return;
    index_.emplace(key, entries_.size());
    entries_.push_back(key);
}

void Frontier::erase(const Position& p, int tile) {
    auto key = std::make_pair(p, tile);
    auto it = index_.find(key);
    if (it == index_.end()) return;
    std::size_t slot = it->second;
    index_.erase(it);
    if (slot + 1 != entries_.size()) {
        entries_[slot] = entries_.back();
        index_[entries_[slot]] = slot;
    }
    entries_.pop_back();
}

void Frontier::refresh_position(const Configuration& config, const TileSystem& sys,
                                const Position& p) {
    for (int t = 0; t < sys.tile_count(); ++t) {
        if (attachable(config, sys, p, t))
            insert(p, t);
        else
            erase(p, t);
    }
}

void Frontier::rebuild(const Configuration& config, const TileSystem& sys) {
    entries_.clear();
    index_.clear();
    for (const Position& p : candidate_positions(config, sys))
        refresh_position(config, sys, p);
}

void Frontier::after_place(const Configuration& config, const TileSystem& sys,
                           const Position& placed) {
    for (int t = 0; t < sys.tile_count(); ++t) erase(placed, t);
    // Strengths only grow as neighbors appear, except where a freeze from an
    // erroneous tile pruned whole arms; the caller handles that case.
    for (int d = 0; d < num_dirs(sys); ++d) {
        Position q = placed.shifted(static_cast<Dir>(d));
        if (!config.occupied(q)) refresh_position(config, sys, q);
    }
}

void Frontier::after_freeze(const Configuration& config, const TileSystem& sys,
                            int arm) {
    std::vector<std::pair<Position, int>> doomed;
    for (const auto& e : entries_)
        if (sys.tile(e.second).arm == arm) doomed.push_back(e);
    for (const auto& e : doomed) erase(e.first, e.second);
    (void)config;
}

std::vector<std::pair<Position, int>> Frontier::sorted_entries() const {
    auto out = entries_;
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// step / run

Attachment step(Configuration& config, Frontier& frontier, const TileSystem& sys,
                Rng& rng) {
    if (frontier.empty()) throw TilesimError("terminal");
    const auto& [pos, tile] = frontier.entry(rng.below(frontier.size()));
    Attachment a{pos, tile};
    const TileType& t = sys.tile(tile);
    bool was_frozen_arm = t.erroneous && t.arm >= 0;
    config.place(sys, a.pos, a.tile);
    frontier.after_place(config, sys, a.pos);
    if (was_frozen_arm) frontier.after_freeze(config, sys, t.arm);
    return a;
}

std::vector<std::string> trace_header(const TileSystem& sys, std::uint64_t seed,
                                      int max_steps, const FaultPlan& faults) {
    std::vector<std::string> h;
    if (!sys.manifest.empty()) h.push_back("# tileset: " + sys.manifest);
    std::string line = "# run: seed=" + std::to_string(seed) +
                       " max-steps=" + std::to_string(max_steps) +
                       " rng=" + Rng::kAlgorithm;
    for (const FaultEvent& f : faults)
        line += " block=" + sys.arm_name(f.arm) + "@" + std::to_string(f.step);
    h.push_back(line);
    return h;
}

RunResult run(const TileSystem& sys, Rng& rng, int max_steps, const FaultPlan& faults) {
    if (max_steps < 0) throw TilesimError("max_steps must be >= 0");
    RunResult r{Configuration::from_seed(sys), {}, {}, false, 0};
    r.sequence.rng_seed = rng.seed();
    r.trace = trace_header(sys, rng.seed(), max_steps, faults);

    FaultPlan plan = faults;
    std::stable_sort(plan.begin(), plan.end(),
                     [](const FaultEvent& a, const FaultEvent& b) { return a.step < b.step; });
    std::size_t next_fault = 0;

    Frontier f;
    f.rebuild(r.config, sys);
    for (int s = 0; s < max_steps; ++s) {
        while (next_fault < plan.size() && plan[next_fault].step <= s) {
            // An arm already frozen by an erroneous tile absorbs the event.
            if (!r.config.arm_frozen(plan[next_fault].arm)) {
                inject_blockage(r.config, sys, plan[next_fault].arm);
                f.after_freeze(r.config, sys, plan[next_fault].arm);
                r.trace.push_back("BLOCK " + std::to_string(s) + " " +
                                  sys.arm_name(plan[next_fault].arm));
            }
            ++next_fault;
        }
        if (f.empty()) {
            r.reached_terminal = true;
            return r;
        }
        Attachment a = step(r.config, f, sys, rng);
        r.sequence.attachments.push_back(a);
        r.trace.push_back("STEP " + std::to_string(s) + " PLACE " +
                          to_string(a.pos, sys.dimension) + " " + sys.tile(a.tile).id);
        ++r.steps_taken;
    }
    // Late faults scheduled at or past the budget are dropped by contract.
    r.reached_terminal = f.empty();
    return r;
}

void inject_blockage(Configuration& config, const TileSystem& sys, int arm) {
    if (arm < 0 || arm >= sys.arm_count()) throw TilesimError("unknown arm");
    if (config.arm_frozen(arm)) throw TilesimError("already blocked");
    config.freeze_arm(arm);
    config.add_injected_blockage();
}

bool replay_sequence(const TileSystem& sys, const AssemblySequence& seq,
                     std::string* error) {
    Configuration c = Configuration::from_seed(sys);
    for (std::size_t i = 0; i < seq.attachments.size(); ++i) {
        const Attachment& a = seq.attachments[i];
        if (!attachable(c, sys, a.pos, a.tile)) {
            if (error)
                *error = "attachment " + std::to_string(i) + " at " +
                         to_string(a.pos, sys.dimension) + " was illegal";
            return false;
        }
        c.place(sys, a.pos, a.tile);
    }
    return true;
}

std::string ascii_snapshot(const Configuration& config, const TileSystem& sys) {
    if (config.size() == 0) return "(empty)\n";
    int minx = 1 << 30, maxx = -(1 << 30), miny = 1 << 30, maxy = -(1 << 30);
    int minz = 1 << 30, maxz = -(1 << 30);
    for (const auto& [pos, placed] : config.placement()) {
        (void)placed;
        minx = std::min(minx, pos.x); maxx = std::max(maxx, pos.x);
        miny = std::min(miny, pos.y); maxy = std::max(maxy, pos.y);
        minz = std::min(minz, pos.z); maxz = std::max(maxz, pos.z);
    }
    static const char* alphabet =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    std::map<int, char> mark;  // tile index -> display char
    std::ostringstream out;
    for (int z = minz; z <= maxz; ++z) {
        if (sys.dimension == 3) out << "layer z=" << z << "\n";
        for (int y = maxy; y >= miny; --y) {
            for (int x = minx; x <= maxx; ++x) {
                const PlacedTile* p = config.at({x, y, z});
                if (!p) { out << '.'; continue; }
                auto it = mark.find(p->tile);
                if (it == mark.end()) {
                    char c = alphabet[mark.size() % 62];
                    it = mark.emplace(p->tile, c).first;
                }
                out << it->second;
            }
            out << "\n";
        }
    }
    out << "legend:";
    for (const auto& [tile, c] : mark) out << " " << c << "=" << sys.tile(tile).id;
    out << "\n";
    return out.str();
}

}  // namespace tilesim
