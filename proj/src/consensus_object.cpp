#include "tilesim/consensus_object.hpp"

namespace tilesim {

ProtoSystem make_rho_proto(const std::vector<int>& values, const RhoOptions& opts) {
    if (values.empty()) throw TilesimError("value set must be nonempty");
    ProtoSystem ps;
    ps.dimension = 2;

    for (int v : values) {
        const std::string vs = std::to_string(v);
        {
            ProtoTile& t = ps.add("wray." + vs);  // rides west approach, points east
            t.set(Dir::West, "v1." + vs, 1);
            t.set(Dir::East, "v1." + vs, 1);
            t.set(Dir::South, "gnd", 1);
            t.set(Dir::North, "rtop", 1);
        }
        {
            ProtoTile& t = ps.add("eray." + vs);
            t.set(Dir::East, "v2." + vs, 1);
            t.set(Dir::West, "v2." + vs, 1);
            t.set(Dir::South, "gnd", 1);
            t.set(Dir::North, "rtop", 1);
        }
        {
            ProtoTile& t = ps.add("decw." + vs);  // decision fed from the west
            t.set(Dir::South, "dec", 1);
            t.set(Dir::West, "v1." + vs, 1);
            t.set(Dir::North, "Ack." + vs, 2);
        }
        {
            ProtoTile& t = ps.add("dece." + vs);
            t.set(Dir::South, "dec", 1);
            t.set(Dir::East, "v2." + vs, 1);
            t.set(Dir::North, "Ack." + vs, 2);
        }
        {
            ProtoTile& t = ps.add("ackroot." + vs);
            t.set(Dir::South, "Ack." + vs, 2);
            t.set(Dir::West, "ak." + vs, 1);
            t.set(Dir::East, "ak." + vs, 1);
        }
        {
            ProtoTile& t = ps.add("ack." + vs);  // rides ray tops both ways
            t.set(Dir::South, "rtop", 1);
            t.set(Dir::West, "ak." + vs, 1);
            t.set(Dir::East, "ak." + vs, 1);
        }
    }

    {
        ProtoTile& t = ps.add("anchor");
        if (!opts.west_link.empty()) t.set(Dir::West, opts.west_link, 2);
        t.set(Dir::North, "gnd", 1);
        t.set(Dir::East, "b1", 2);
    }
    {
        ProtoTile& t = ps.add("wbase");
        t.set(Dir::West, "b1", 2);
        t.set(Dir::North, "gnd", 1);
        t.set(Dir::East, "b2", 2);
    }
    {
        ProtoTile& t = ps.add("decbase");
        t.set(Dir::West, "b2", 2);
        t.set(Dir::North, "dec", 1);
        t.set(Dir::East, "b3", 2);
    }
    {
        ProtoTile& t = ps.add("ebase");
        t.set(Dir::West, "b3", 2);
        t.set(Dir::North, "gnd", 1);
        t.set(Dir::East, "b4", 2);
    }
    {
        ProtoTile& t = ps.add("capbase");
        t.set(Dir::West, "b4", 2);
        t.set(Dir::North, "gnd", 1);
        if (!opts.east_link.empty()) t.set(Dir::East, opts.east_link, 2);
    }

    static const char* base_ids[] = {"anchor", "wbase", "decbase", "ebase", "capbase"};
    for (int i = 0; i < 5; ++i)
        ps.seed.emplace_back(Position{kRhoWest + i, 0, 0}, base_ids[i]);
    return ps;
}

std::pair<TileSystem, Layout> gen_consensus_object(const std::vector<int>& values) {
    ProtoSystem ps = make_rho_proto(values, {});
    TileSystem sys;
    sys.dimension = 2;
    transplant(sys, ps, "", "rho", Frame::facing_east({0, 0, 0}));
    sys.validate();

    Layout lay;
    lay.construction = "consensus-object";
    lay.step_bound = 32;
    lay.values = values;
    lay.decision_location = kRhoDecision;
    lay.has_decision = true;
    for (int x = kRhoWest; x <= kRhoEast; ++x)
        lay.pad_extent.push_back({x, 0, 0});
    lay.pad_extent.push_back(kRhoDecision);
    lay.pad_extent.push_back(kRhoAckRoot);
    lay.entry_squares = {{kRhoWest, 1, 0}, {kRhoEast, 1, 0}};
    lay.fault_exempt_positions = lay.pad_extent;
    lay.fault_exempt_arms = {"rho"};
    lay.notes = "decision tiles bind at the center with S+W+N or S+E+N glues; "
                "the first value to arrive wins and is acked along both ray tops";
    return {std::move(sys), std::move(lay)};
}

}  // namespace tilesim
