#pragma once

#include <string>
#include <vector>

#include "tilesim/layout.hpp"
#include "tilesim/turing.hpp"
#include "tilesim/wedge.hpp"

namespace tilesim {

// Message-passing pair: two wedges facing each other across a corridor, a
// seed pillar beside each wall carrying that arm's inbuffer column above it,
// and per-message ray/climb machinery.
//
// A message ray rides a corridor surface toward the receiver and stops beside
// the receiver's pillar. A climb column ascends next to the inbuffer column,
// pushing a strength-2 probe one cell above the inbuffer's top; at every
// other inbuffer row the probe's sideways glue lets an insertion tile carrying
// the message symbol race the plain inbuffer tile for the next cell. Winning
// plants the symbol in the inbuffer column; the column above the insertion
// converts the climb column into a fresh inbuffer column, which is where the
// next message from the same sender inserts. An ack ray rides back over the
// message ray as soon as the climb starts.
//
// At most two messages per direction; each message is one symbol.
struct TwoProcParams {
    TuringMachineSpec tm1;
    TuringMachineSpec tm2;
    std::vector<std::string> messages1;  // sent p1 -> p2, in order
    std::vector<std::string> messages2;  // sent p2 -> p1, in order
    int corridor_halfwidth = 8;
};

inline constexpr int kMaxMessagesPerDirection = 2;
inline constexpr int kPillarHeight = 12;

class TwoProcessor {
public:
    explicit TwoProcessor(TwoProcParams params);

    const TileSystem& system() const { return system_; }
    const Layout& layout() const { return layout_; }
    const TwoProcParams& params() const { return params_; }

    // Insertion tile id for message k (1-based) of a direction (1 = p1->p2).
    std::string insert_tile_id(int direction, int k) const;
    // True if that message's symbol has entered the receiving inbuffer stack.
    bool delivered(const Configuration& c, int direction, int k) const;
    // True if the sender's ack ray for message k has started back.
    bool ack_started(const Configuration& c, int direction, int k) const;

    // Receiver's primary inbuffer column x for a direction.
    int inbuffer_column(int direction) const;

private:
    void build();
    void build_direction(int direction);

    TwoProcParams params_;
    WedgeProto wp1_, wp2_;
    TileSystem system_;
    Layout layout_;
};

std::pair<TileSystem, Layout> gen_two_processor(const TwoProcParams& params);

}  // namespace tilesim
