#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tilesim/configuration.hpp"
#include "tilesim/system.hpp"

namespace tilesim {

// Attachments need total matched strength >= kTemperature. Fixed at 2; every
// construction here binds either with one strength-2 glue or two cooperating
// strength-1 glues.
inline constexpr int kTemperature = 2;

// Seedable generator with a pinned algorithm so traces are reproducible
// bit-for-bit. Identifier recorded in trace headers.
class Rng {
public:
    static constexpr const char* kAlgorithm = "mt19937_64/mod-rejection-v1";

    explicit Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return gen_(); }

    // Unbiased draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 gen_;
    std::uint64_t seed_;
};

// Sum over occupied neighbors of min(abutting strengths) where the abutting
// glue names are related; throws "position occupied" if pos is taken.
int binding_strength(const Configuration& config, const TileSystem& sys,
                     const Position& pos, int tile);

// Total predicate: unoccupied, adjacent to the assembly, arm not frozen,
// strength >= 2.
bool attachable(const Configuration& config, const TileSystem& sys,
                const Position& pos, int tile);

// All empty cells adjacent to at least one placed tile.
std::vector<Position> candidate_positions(const Configuration& config,
                                          const TileSystem& sys);

// Full recomputed frontier, sorted (position, tile index). The run loop keeps
// an incremental mirror of this; tests cross-check the two.
std::vector<std::pair<Position, int>> frontier(const Configuration& config,
                                               const TileSystem& sys);

bool is_terminal(const Configuration& config, const TileSystem& sys);

// Bond graph min-cut check: every cut of the realized binding strengths must
// weigh at least 2. Throws "not a configuration" if the placement is not
// connected by adjacency.
bool check_stable(const Configuration& config, const TileSystem& sys);

// One attachment of a trace / assembly sequence.
struct Attachment {
    Position pos;
    int tile = -1;
};

struct AssemblySequence {
    std::vector<Attachment> attachments;
    std::uint64_t rng_seed = 0;
};

// Scheduled arm freeze, applied before the step with the given index.
struct FaultEvent {
    int step = 0;
    int arm = -1;
};
using FaultPlan = std::vector<FaultEvent>;

// Incremental frontier used by step/run. Entry order is a deterministic
// function of the attachment history, so traces replay exactly.
class Frontier {
public:
    void rebuild(const Configuration& config, const TileSystem& sys);
    void after_place(const Configuration& config, const TileSystem& sys,
                     const Position& placed);
    void after_freeze(const Configuration& config, const TileSystem& sys, int arm);

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::pair<Position, int>& entry(std::size_t i) const { return entries_[i]; }
    std::vector<std::pair<Position, int>> sorted_entries() const;

private:
    void refresh_position(const Configuration& config, const TileSystem& sys,
                          const Position& p);
    void insert(const Position& p, int tile);
    void erase(const Position& p, int tile);

    struct KeyHash {
        std::size_t operator()(const std::pair<Position, int>& k) const {
            return PositionHash{}(k.first) * 1315423911u + static_cast<unsigned>(k.second);
        }
    };
    std::vector<std::pair<Position, int>> entries_;
    std::unordered_map<std::pair<Position, int>, std::size_t, KeyHash> index_;
};

// Applies one uniformly random frontier attachment. Throws "terminal" if the
// frontier is empty. Mutates config and frontier consistently.
Attachment step(Configuration& config, Frontier& frontier, const TileSystem& sys,
                Rng& rng);

struct RunResult {
    Configuration config;
    AssemblySequence sequence;
    std::vector<std::string> trace;  // STEP / BLOCK lines
    bool reached_terminal = false;
    int steps_taken = 0;
};

// Repeats step() up to max_steps, applying scheduled blockages at their step
// indices. Stops early at a terminal configuration.
RunResult run(const TileSystem& sys, Rng& rng, int max_steps,
              const FaultPlan& faults = {});

// Explicit freeze: marks the arm and counts one blockage.
// Throws "already blocked" / "unknown arm".
void inject_blockage(Configuration& config, const TileSystem& sys, int arm);

// Replays a sequence from the seed, checking each attachment was legal
// (strength >= 2, arm unfrozen) at its moment. Returns false with a message
// on the first violation.
bool replay_sequence(const TileSystem& sys, const AssemblySequence& seq,
                     std::string* error = nullptr);

// Trace header lines recording the manifest, rng algorithm and parameters.
std::vector<std::string> trace_header(const TileSystem& sys, std::uint64_t seed,
                                      int max_steps, const FaultPlan& faults);

// One grid per z-layer with a legend mapping characters to tile ids.
std::string ascii_snapshot(const Configuration& config, const TileSystem& sys);

}  // namespace tilesim
