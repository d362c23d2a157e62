#pragma once

#include <vector>

#include "tilesim/consensus_object.hpp"
#include "tilesim/layout.hpp"
#include "tilesim/turing.hpp"
#include "tilesim/wedge.hpp"

namespace tilesim {

// Two machine-simulating arms growing west and east out of a shared seed row,
// with the decision gadget in the middle of the corridor. Each arm's column-0
// wall feeds a counting ladder; when the ladder reaches the arm's invoke row
// it unlocks a descent column whose foot exposes the arm's proposed value,
// launching a ray along the corridor floor toward the decision cell. Acks
// ride the ray tops back; a strength-2 return tile lands on the corner above
// each arm's ray start.
struct TwoConsensusParams {
    TuringMachineSpec tm1;
    TuringMachineSpec tm2;
    std::vector<int> values;
    int input1 = 0;
    int input2 = 0;
    int invoke_rows1 = 2;  // prologue: wedge rows before the arm may invoke
    int invoke_rows2 = 2;
    int corridor_halfwidth = 10;
};

class TwoConsensus {
public:
    explicit TwoConsensus(TwoConsensusParams params);

    const TileSystem& system() const { return system_; }
    const Layout& layout() const { return layout_; }
    const TwoConsensusParams& params() const { return params_; }

    // --- world-coordinate image fragments (conformance building blocks) ---
    // Arm grown to `rows` complete wedge rows plus the ladder that exists at
    // that height.
    std::vector<std::pair<Position, std::string>> arm_rows_tiles(int arm, int rows) const;
    // Descent column, ray start and the full ray up to the decision cell.
    std::vector<std::pair<Position, std::string>> invoke_tiles(int arm) const;
    // The decision tile for value v arriving from the given arm's side.
    std::pair<Position, std::string> decision_tile(int decider_arm, int v) const;
    // Ack root (first return only) + ack ride + return landing for one arm.
    std::vector<std::pair<Position, std::string>> return_tiles(int arm, int v,
                                                               bool include_root) const;
    // Halting marker path of an arm's machine (halting variants only).
    std::vector<std::pair<Position, std::string>> halt_marker_tiles(int arm) const;

    // Positions the harnesses scan.
    Position corner_position(int arm) const;
    Position decision_position() const { return kRhoDecision; }
    std::string corner_tile_id(int arm, int v) const;
    std::string arm_label(int arm) const { return arm == 1 ? "pi1" : "pi2"; }

private:
    void build();
    const WedgeProto& proto_of(int arm) const { return arm == 1 ? wp1_ : wp2_; }
    Frame frame_of(int arm) const;
    std::string ns_of(int arm) const { return arm == 1 ? "p1." : "p2."; }
    std::string wedge_ns_of(int arm) const { return arm == 1 ? "p1w." : "p2w."; }
    int invoke_rows_of(int arm) const {
        return arm == 1 ? params_.invoke_rows1 : params_.invoke_rows2;
    }
    int input_of(int arm) const { return arm == 1 ? params_.input1 : params_.input2; }

    TwoConsensusParams params_;
    WedgeProto wp1_, wp2_;
    TileSystem system_;
    Layout layout_;
};

std::pair<TileSystem, Layout> gen_2consensus_system(const TwoConsensusParams& params);

}  // namespace tilesim
