#pragma once

#include <vector>

#include "tilesim/builder.hpp"
#include "tilesim/layout.hpp"

namespace tilesim {

// Shared decision gadget: a five-cell base row whose center cell exposes a
// distinguished north glue. Value rays ride the flanking cells' tops toward
// the center; the first value tile to bind at the decision cell wins, raises
// a strength-2 ack glue, and ack tiles carrying that value ride back over
// both rays. Exactly 6 tile types per value plus 5 structural types:
//
//   per value v:   west ray, east ray, west-decision, east-decision,
//                  ack root, ack rider
//   structural:    anchor, west base, decision base, east base, cap base
//
// Decision tiles bind with nonzero south+west+north or south+east+north
// glues only, carry v on the west or east side, and raise "Ack.<v>" north.
struct RhoOptions {
    // Optional strength-2 anchors so a composed seed can link the base row
    // into a larger assembly.
    std::string west_link;
    std::string east_link;
};

ProtoSystem make_rho_proto(const std::vector<int>& values, const RhoOptions& opts = {});

// Canonical geometry of the fragment.
inline constexpr int kRhoWest = -2;           // anchor cell x
inline constexpr int kRhoEast = 2;            // cap cell x
inline constexpr Position kRhoDecision{0, 1, 0};
inline constexpr Position kRhoAckRoot{0, 2, 0};

// Standalone system: seed = the full base row; nothing else can grow without
// composed value sources. Tile count is exactly 6*|values|+5.
std::pair<TileSystem, Layout> gen_consensus_object(const std::vector<int>& values);

}  // namespace tilesim
