#include "tilesim/layout.hpp"

#include <json.hpp>

#include "tilesim/tileset_io.hpp"

namespace tilesim {

using nlohmann::json;

Dir Frame::map_dir(Dir canonical) const {
    auto axis_dir = [](int dx, int dy) {
        if (dx == 1) return Dir::East;
        if (dx == -1) return Dir::West;
        if (dy == 1) return Dir::North;
        return Dir::South;
    };
    switch (canonical) {
    case Dir::East: return axis_dir(ex_x, ex_y);
    case Dir::West: return axis_dir(-ex_x, -ex_y);
    case Dir::North: return axis_dir(ey_x, ey_y);
    case Dir::South: return axis_dir(-ey_x, -ey_y);
    case Dir::Up: return Dir::Up;
    case Dir::Down: return Dir::Down;
    }
    return canonical;
}

void transplant(TileSystem& dst, const ProtoSystem& proto, const std::string& ns,
                const std::function<std::string(const std::string&)>& arm_of,
                const Frame& frame) {
    if (proto.dimension == 3 && dst.dimension == 2)
        throw TilesimError("cannot transplant a 3D fragment into a 2D system");
    for (const auto& [a, b] : proto.relations)
        dst.add_relation(dst.intern_glue(ns + a), dst.intern_glue(ns + b));
    for (const ProtoTile& pt : proto.tiles) {
        TileType t;
        t.id = ns + pt.id;
        std::string arm = arm_of(pt.id);
        t.arm = arm.empty() ? -1 : dst.intern_arm(arm);
        t.erroneous = pt.erroneous;
        for (int d = 0; d < kNumDirs; ++d) {
            const ProtoGlue& g = pt.sides[d];
            if (g.strength == 0 && g.name.empty()) continue;
            Dir world = frame.map_dir(static_cast<Dir>(d));
            t.side(world) = GlueSpec{dst.intern_glue(ns + g.name), g.strength};
        }
        dst.add_tile(std::move(t));
    }
    for (const auto& [pos, id] : proto.seed) {
        int idx = dst.tile_index(ns + id);
        if (idx < 0) throw TilesimError("transplant seed references missing tile " + id);
        dst.seed.emplace_back(frame.to_world(pos), idx);
    }
}

void transplant(TileSystem& dst, const ProtoSystem& proto, const std::string& ns,
                const std::string& arm, const Frame& frame) {
    transplant(dst, proto, ns, [&arm](const std::string&) { return arm; }, frame);
}

// ---------------------------------------------------------------------------

static json pos_json(const Position& p) { return json::array({p.x, p.y, p.z}); }

static Position pos_from(const json& j) {
    return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()};
}

std::string write_layout(const Layout& lay) {
    json j;
    j["construction"] = lay.construction;
    j["manifest"] = lay.manifest;
    j["step_bound"] = lay.step_bound;
    json arms = json::array();
    for (const ArmInfo& a : lay.arms) {
        json e;
        e["label"] = a.label;
        e["direction"] = a.direction;
        e["input"] = a.input;
        e["invoke_rows"] = a.invoke_rows;
        e["wall"] = pos_json(a.wall_base);
        e["port"] = pos_json(a.port);
        e["corner"] = pos_json(a.corner);
        arms.push_back(e);
    }
    j["arms"] = arms;
    j["values"] = lay.values;
    j["decision_location"] = pos_json(lay.decision_location);
    j["has_decision"] = lay.has_decision;
    json pad = json::array();
    for (const Position& p : lay.pad_extent) pad.push_back(pos_json(p));
    j["pad_extent"] = pad;
    json entries = json::array();
    for (const Position& p : lay.entry_squares) entries.push_back(pos_json(p));
    j["entry_squares"] = entries;
    json fe = json::array();
    for (const Position& p : lay.fault_exempt_positions) fe.push_back(pos_json(p));
    j["fault_exempt_positions"] = fe;
    j["fault_exempt_arms"] = lay.fault_exempt_arms;
    json cols = json::array();
    for (const InbufferColumn& c : lay.inbuffer_columns) {
        json e;
        e["owner"] = c.owner;
        e["x"] = c.x;
        e["min_y"] = c.min_y;
        e["slot"] = c.slot;
        cols.push_back(e);
    }
    j["inbuffer_columns"] = cols;
    j["notes"] = lay.notes;
    return j.dump(2) + "\n";
}

Layout parse_layout(const std::string& text) {
    json j = json::parse(text);
    Layout lay;
    lay.construction = j.at("construction").get<std::string>();
    lay.manifest = j.value("manifest", "");
    lay.step_bound = j.at("step_bound").get<int>();
    for (const json& e : j.at("arms")) {
        ArmInfo a;
        a.label = e.at("label").get<std::string>();
        a.direction = e.at("direction").get<std::string>();
        a.input = e.at("input").get<int>();
        a.invoke_rows = e.at("invoke_rows").get<int>();
        a.wall_base = pos_from(e.at("wall"));
        a.port = pos_from(e.at("port"));
        a.corner = pos_from(e.at("corner"));
        lay.arms.push_back(a);
    }
    lay.values = j.at("values").get<std::vector<int>>();
    lay.decision_location = pos_from(j.at("decision_location"));
    lay.has_decision = j.at("has_decision").get<bool>();
    for (const json& e : j.at("pad_extent")) lay.pad_extent.push_back(pos_from(e));
    for (const json& e : j.at("entry_squares")) lay.entry_squares.push_back(pos_from(e));
    for (const json& e : j.at("fault_exempt_positions"))
        lay.fault_exempt_positions.push_back(pos_from(e));
    lay.fault_exempt_arms = j.at("fault_exempt_arms").get<std::vector<std::string>>();
    for (const json& e : j.value("inbuffer_columns", json::array())) {
        InbufferColumn c;
        c.owner = e.at("owner").get<std::string>();
        c.x = e.at("x").get<int>();
        c.min_y = e.at("min_y").get<int>();
        c.slot = e.at("slot").get<int>();
        lay.inbuffer_columns.push_back(c);
    }
    lay.notes = j.value("notes", "");
    return lay;
}

Layout load_layout_file(const std::string& path) {
    return parse_layout(read_text_file(path));
}

}  // namespace tilesim
