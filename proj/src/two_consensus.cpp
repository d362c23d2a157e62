#include "tilesim/two_consensus.hpp"

namespace tilesim {

namespace {

TileType make_tile(TileSystem& sys, const std::string& id, const std::string& arm) {
    TileType t;
    t.id = id;
    t.arm = arm.empty() ? -1 : sys.intern_arm(arm);
    return t;
}

void set_side(TileSystem& sys, TileType& t, Dir d, const std::string& glue, int strength) {
    t.side(d) = {sys.intern_glue(glue), strength};
}

}  // namespace

TwoConsensus::TwoConsensus(TwoConsensusParams params) : params_(std::move(params)) {
    if (params_.values.empty()) throw TilesimError("value set must be nonempty");
    auto in = [&](int v) {
        for (int x : params_.values) if (x == v) return true;
        return false;
    };
    if (!in(params_.input1) || !in(params_.input2))
        throw TilesimError("inputs must come from the value set");
    if (params_.invoke_rows1 < 1 || params_.invoke_rows2 < 1)
        throw TilesimError("invoke rows must be >= 1");
    if (params_.corridor_halfwidth < 6)
        throw TilesimError("corridor too narrow");
    build();
}

Frame TwoConsensus::frame_of(int arm) const {
    int c = params_.corridor_halfwidth;
    return arm == 1 ? Frame::facing_west({-c, 0, 0}) : Frame::facing_east({c, 0, 0});
}

void TwoConsensus::build() {
    const int c = params_.corridor_halfwidth;
    system_.dimension = 2;

    WedgeOptions wopts;
    wopts.seed_west_anchor = "armlink";
    wp1_ = make_wedge_proto(params_.tm1, wopts);
    wp2_ = make_wedge_proto(params_.tm2, wopts);
    transplant(system_, wp1_.proto, wedge_ns_of(1), "pi1", frame_of(1));
    transplant(system_, wp2_.proto, wedge_ns_of(2), "pi2", frame_of(2));

    RhoOptions ropts;
    ropts.west_link = "gwl";
    ropts.east_link = "gwr";
    ProtoSystem rho = make_rho_proto(params_.values, ropts);
    transplant(system_, rho, "rho.", [](const std::string& id) {
        if (id.rfind("wray.", 0) == 0) return std::string("pi1");
        if (id.rfind("eray.", 0) == 0) return std::string("pi2");
        return std::string("rho");
    }, Frame::facing_east({0, 0, 0}));

    // --- per-arm ladder, descent, launch, return machinery ---------------
    for (int arm : {1, 2}) {
        const std::string ns = ns_of(arm);
        const std::string wns = wedge_ns_of(arm);
        const std::string pi = arm_label(arm);
        const int k = invoke_rows_of(arm);
        const int x_ladder = arm == 1 ? -c + 1 : c - 1;
        const int x_descent = arm == 1 ? -c + 2 : c - 2;
        const int x_start = arm == 1 ? -c + 3 : c - 3;
        const Dir wallward = arm == 1 ? Dir::West : Dir::East;  // toward the arm
        const Dir roadward = opposite(wallward);                // toward the center
        const std::string vchain = arm == 1 ? "rho.v1." : "rho.v2.";
        const std::string vst = ns + "vst";

        {
            TileType t = make_tile(system_, ns + "cntbase", pi);
            set_side(system_, t, wallward, wns + "armlink", 2);
            set_side(system_, t, roadward, ns + "glink", 2);
            set_side(system_, t, Dir::North, ns + "cnt0", 1);
            int idx = system_.add_tile(t);
            system_.seed.emplace_back(Position{x_ladder, 0, 0}, idx);
        }
        for (int j = 1; j <= k; ++j) {
            TileType t = make_tile(system_, ns + "cnt" + std::to_string(j), pi);
            set_side(system_, t, wallward, wns + "wall.0", 1);
            set_side(system_, t, Dir::South, ns + "cnt" + std::to_string(j - 1), 1);
            if (j < k)
                set_side(system_, t, Dir::North, ns + "cnt" + std::to_string(j), 1);
            set_side(system_, t, roadward, j == k ? ns + "ugate" : ns + "cside",
                     j == k ? 2 : 1);
            system_.add_tile(t);
        }
        for (int j = k; j >= 1; --j) {
            TileType t = make_tile(system_, ns + "u" + std::to_string(j), pi);
            if (j == k)
                set_side(system_, t, wallward, ns + "ugate", 2);
            else {
                set_side(system_, t, wallward, ns + "cside", 1);
                set_side(system_, t, Dir::North, ns + "udn", 1);
            }
            if (j > 1) set_side(system_, t, Dir::South, ns + "udn", 1);
            if (j == 1)
                set_side(system_, t, roadward, ns + "launch", 1);
            system_.add_tile(t);
        }
        {
            TileType t = make_tile(system_, ns + "start", pi);
            set_side(system_, t, wallward, ns + "launch", 1);
            set_side(system_, t, Dir::South, "rho.gnd", 1);
            set_side(system_, t, roadward, vchain + std::to_string(input_of(arm)), 1);
            set_side(system_, t, Dir::North, vst, 1);
            system_.add_tile(t);
        }
        for (int v : params_.values) {
            const std::string vs = std::to_string(v);
            TileType e = make_tile(system_, ns + "ackend." + vs, pi);
            set_side(system_, e, Dir::South, vst, 1);
            set_side(system_, e, roadward, "rho.ak." + vs, 1);
            set_side(system_, e, Dir::North, ns + "ret." + vs, 2);
            system_.add_tile(e);
            TileType cr = make_tile(system_, ns + "corner." + vs, pi);
            set_side(system_, cr, Dir::South, ns + "ret." + vs, 2);
            system_.add_tile(cr);
        }
        (void)x_descent;
        (void)x_start;
    }

    // --- corridor ground ---------------------------------------------------
    // Two seeded segments linking the ladders to the decision base. Interior
    // glue names never face an empty cell, so the rows cannot extend.
    auto add_ground = [&](const std::string& id, int x, const std::string& wglue,
                          int ws, const std::string& eglue, int es) {
        TileType t = make_tile(system_, id, "");
        if (!wglue.empty()) set_side(system_, t, Dir::West, wglue, ws);
        if (!eglue.empty()) set_side(system_, t, Dir::East, eglue, es);
        set_side(system_, t, Dir::North, "rho.gnd", 1);
        int idx = system_.add_tile(t);
        system_.seed.emplace_back(Position{x, 0, 0}, idx);
    };
    for (int x = -c + 2; x <= -3; ++x) {
        std::string wglue = x == -c + 2 ? "p1.glink" : "g.w" + std::to_string(x - 1);
        std::string eglue = x == -3 ? "rho.gwl" : "g.w" + std::to_string(x);
        add_ground("g.w" + std::to_string(x), x, wglue, 2, eglue, 2);
    }
    for (int x = 3; x <= c - 2; ++x) {
        std::string wglue = x == 3 ? "rho.gwr" : "g.e" + std::to_string(x - 1);
        std::string eglue = x == c - 2 ? "p2.glink" : "g.e" + std::to_string(x);
        add_ground("g.e" + std::to_string(x), x, wglue, 2, eglue, 2);
    }

    system_.manifest = "gen 2consensus";
    system_.validate();

    layout_.construction = "2consensus";
    layout_.step_bound = 6000 + 600 * std::max(params_.invoke_rows1, params_.invoke_rows2);
    layout_.values = params_.values;
    layout_.decision_location = kRhoDecision;
    layout_.has_decision = true;
    for (int x = kRhoWest; x <= kRhoEast; ++x)
        layout_.pad_extent.push_back({x, 0, 0});
    layout_.pad_extent.push_back(kRhoDecision);
    layout_.pad_extent.push_back(kRhoAckRoot);
    layout_.entry_squares = {{-1, 1, 0}, {1, 1, 0}};
    layout_.fault_exempt_positions = layout_.pad_extent;
    layout_.fault_exempt_arms = {"rho"};
    for (int arm : {1, 2}) {
        ArmInfo a;
        a.label = arm_label(arm);
        a.direction = arm == 1 ? "W" : "E";
        a.input = input_of(arm);
        a.invoke_rows = invoke_rows_of(arm);
        a.wall_base = frame_of(arm).origin;
        a.port = {arm == 1 ? -c + 3 : c - 3, 1, 0};
        a.corner = corner_position(arm);
        layout_.arms.push_back(a);
    }
    layout_.notes = "arms invoke after their ladder reaches the invoke row; "
                    "value rays ride the corridor floor; acks ride ray tops back";
}

Position TwoConsensus::corner_position(int arm) const {
    int c = params_.corridor_halfwidth;
    return {arm == 1 ? -c + 3 : c - 3, 3, 0};
}

std::string TwoConsensus::corner_tile_id(int arm, int v) const {
    return ns_of(arm) + "corner." + std::to_string(v);
}

std::vector<std::pair<Position, std::string>> TwoConsensus::arm_rows_tiles(
    int arm, int rows) const {
    std::vector<std::pair<Position, std::string>> out;
    const Frame f = frame_of(arm);
    for (const auto& [pos, id] : wedge_grown_tiles(proto_of(arm), rows, false))
        out.emplace_back(f.to_world(pos), wedge_ns_of(arm) + id);
    const int k = invoke_rows_of(arm);
    const int c = params_.corridor_halfwidth;
    const int x_ladder = arm == 1 ? -c + 1 : c - 1;
    for (int j = 1; j <= std::min(rows, k); ++j)
        out.emplace_back(Position{x_ladder, j, 0},
                         ns_of(arm) + "cnt" + std::to_string(j));
    return out;
}

std::vector<std::pair<Position, std::string>> TwoConsensus::invoke_tiles(int arm) const {
    std::vector<std::pair<Position, std::string>> out;
    const int c = params_.corridor_halfwidth;
    const int k = invoke_rows_of(arm);
    const int x_descent = arm == 1 ? -c + 2 : c - 2;
    const int x_start = arm == 1 ? -c + 3 : c - 3;
    for (int j = k; j >= 1; --j)
        out.emplace_back(Position{x_descent, j, 0}, ns_of(arm) + "u" + std::to_string(j));
    out.emplace_back(Position{x_start, 1, 0}, ns_of(arm) + "start");
    const std::string ray =
        std::string("rho.") + (arm == 1 ? "wray." : "eray.") + std::to_string(input_of(arm));
    if (arm == 1) {
        for (int x = x_start + 1; x <= -1; ++x) out.emplace_back(Position{x, 1, 0}, ray);
    } else {
        for (int x = x_start - 1; x >= 1; --x) out.emplace_back(Position{x, 1, 0}, ray);
    }
    return out;
}

std::pair<Position, std::string> TwoConsensus::decision_tile(int decider_arm, int v) const {
    return {kRhoDecision, std::string("rho.") + (decider_arm == 1 ? "decw." : "dece.") +
                              std::to_string(v)};
}

std::vector<std::pair<Position, std::string>> TwoConsensus::return_tiles(
    int arm, int v, bool include_root) const {
    std::vector<std::pair<Position, std::string>> out;
    const std::string vs = std::to_string(v);
    if (include_root) out.emplace_back(kRhoAckRoot, "rho.ackroot." + vs);
    const int c = params_.corridor_halfwidth;
    if (arm == 1) {
        for (int x = -1; x >= -c + 4; --x)
            out.emplace_back(Position{x, 2, 0}, "rho.ack." + vs);
        out.emplace_back(Position{-c + 3, 2, 0}, "p1.ackend." + vs);
    } else {
        for (int x = 1; x <= c - 4; ++x)
            out.emplace_back(Position{x, 2, 0}, "rho.ack." + vs);
        out.emplace_back(Position{c - 3, 2, 0}, "p2.ackend." + vs);
    }
    out.emplace_back(corner_position(arm), corner_tile_id(arm, v));
    return out;
}

std::vector<std::pair<Position, std::string>> TwoConsensus::halt_marker_tiles(
    int arm) const {
    const WedgeProto& wp = proto_of(arm);
    auto halt = wedge_halt_rows(wp, 10000);
    if (!halt) throw TilesimError("arm machine does not halt");
    auto all = wedge_grown_tiles(wp, *halt, true);
    auto bare = wedge_grown_tiles(wp, *halt, false);
    std::vector<std::pair<Position, std::string>> out;
    const Frame f = frame_of(arm);
    for (std::size_t i = bare.size(); i < all.size(); ++i)
        out.emplace_back(f.to_world(all[i].first), wedge_ns_of(arm) + all[i].second);
    return out;
}

std::pair<TileSystem, Layout> gen_2consensus_system(const TwoConsensusParams& params) {
    TwoConsensus tc(params);
    return {tc.system(), tc.layout()};
}

}  // namespace tilesim
