#pragma once

#include <string>
#include <vector>

#include "tilesim/builder.hpp"

namespace tilesim {

struct ArmInfo {
    std::string label;
    std::string direction;  // E/W/N/S compass, possibly with lane suffix
    int input = 0;          // proposed value x_i (consensus constructions)
    int invoke_rows = 0;    // wedge rows completed before the port unlocks
    Position wall_base;     // world position of the arm's column-0 seed cell
    Position port;          // where the value ray departs
    Position corner;        // where the return/decision tile lands
};

struct InbufferColumn {
    std::string owner;  // receiving arm label
    int x = 0;          // world column
    int min_y = 0;      // first growable cell
    int slot = 0;       // 0 = primary inbuffer, k = column converted by message k
};

// Sidecar emitted next to every generated tileset: geometry the harnesses and
// conformance checks need, plus the documented step bound for fault-free
// termination.
struct Layout {
    std::string construction;
    std::string manifest;
    int step_bound = 0;
    std::vector<ArmInfo> arms;
    std::vector<int> values;
    Position decision_location;
    bool has_decision = false;
    std::vector<Position> pad_extent;
    std::vector<Position> entry_squares;
    std::vector<Position> fault_exempt_positions;
    std::vector<std::string> fault_exempt_arms;
    std::vector<InbufferColumn> inbuffer_columns;
    std::string notes;
};

std::string write_layout(const Layout& lay);
Layout parse_layout(const std::string& text);
Layout load_layout_file(const std::string& path);

}  // namespace tilesim
