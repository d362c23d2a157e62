#include "tilesim/wedge.hpp"

#include <algorithm>

namespace tilesim {

namespace {

// Place flag of a cell within its row.
struct PlaceFlag {
    enum Kind { Interior, Wall, End } kind = Interior;
    int parity = 0;  // wall rows cycle mod wedge parity

    std::string tag() const {
        switch (kind) {
        case Interior: return "i";
        case Wall: return "w" + std::to_string(parity);
        case End: return "e";
        }
        return "i";
    }
};

struct Names {
    int g;  // parity period

    std::string sym(const std::string& a, const PlaceFlag& f) const {
        switch (f.kind) {
        case PlaceFlag::Interior: return "s." + a;
        case PlaceFlag::Wall: return "w." + a + "." + std::to_string(f.parity);
        case PlaceFlag::End: return "end";
        }
        return "s." + a;
    }
    std::string pglue(const std::string& q, const std::string& a, const PlaceFlag& f) const {
        return "p." + q + "." + a + "." + f.tag();
    }
    std::string hop(const std::string& q) const { return "h." + q; }
    std::string exthop(const std::string& q) const { return "xh." + q; }
    std::string wall(int p) const { return "wall." + std::to_string(p); }
    int next_parity(int p) const { return (p + 1) % g; }
};

PlaceFlag flag_of(int x, int row_end, int row_parity, int g) {
    if (x == 0) return {PlaceFlag::Wall, row_parity % g};
    if (x == row_end) return {PlaceFlag::End, 0};
    return {PlaceFlag::Interior, 0};
}

PlaceFlag bump(const PlaceFlag& f, const Names& n) {
    PlaceFlag out = f;
    if (f.kind == PlaceFlag::Wall) out.parity = n.next_parity(f.parity);
    return out;
}

}  // namespace

WedgeProto make_wedge_proto(const TuringMachineSpec& tm, const WedgeOptions& opts) {
    tm.validate();
    WedgeProto wp;
    wp.tm = tm;
    wp.parity = std::max(1, opts.wall_parity);
    Names n{wp.parity};
    ProtoSystem& ps = wp.proto;
    const std::string blank = tm.blank;

    auto all_flags = [&](bool blank_only_end) {
        std::vector<std::pair<PlaceFlag, bool>> out;  // (flag, restrict-to-blank)
        out.push_back({{PlaceFlag::Interior, 0}, false});
        for (int p = 0; p < wp.parity; ++p) out.push_back({{PlaceFlag::Wall, p}, false});
        out.push_back({{PlaceFlag::End, 0}, blank_only_end});
        return out;
    };

    // Pivots: one per (state, symbol-under-head, place). The pivot carries the
    // written symbol and hands the state one cell toward the move direction.
    for (const std::string& q : tm.states) {
        if (tm.halting(q)) continue;
        for (const std::string& a : tm.alphabet) {
            for (const auto& [f, blank_only] : all_flags(true)) {
                if (blank_only && a != blank) continue;
                const TmRule& r = tm.rule(q, a);
                const std::string& q2 = r.next_state;
                const std::string& b = r.write;
                std::string id = "pv." + q + "." + a + "." + f.tag();
                PlaceFlag nf = bump(f, n);
                if (f.kind == PlaceFlag::Wall && r.move == Move::Left) {
                    // Bounce: the written cell is itself the next head.
                    ProtoTile& t = ps.add(id);
                    t.set(Dir::South, n.pglue(q, a, f), 2);
                    t.set(Dir::East, "cp", 1);
                    t.set(Dir::West, n.wall(nf.parity), 1);
                    if (tm.halting(q2))
                        t.set(Dir::North, "halt", 2);
                    else
                        t.set(Dir::North, n.pglue(q2, b, nf), 2);
                    continue;
                }
                ProtoTile& t = ps.add(id);
                t.set(Dir::South, n.pglue(q, a, f), 2);
                t.set(Dir::North, n.sym(b, nf), 1);
                if (f.kind == PlaceFlag::End) {
                    // The old slope cell: written content goes interior.
                    t.set(Dir::North, "s." + b, 1);
                    if (r.move == Move::Right)
                        t.set(Dir::East, n.exthop(q2), 2);
                    else
                        t.set(Dir::East, "ext", 2);
                    if (r.move == Move::Left) t.set(Dir::West, n.hop(q2), 1);
                    else t.set(Dir::West, "cp", 1);
                } else if (f.kind == PlaceFlag::Wall) {
                    t.set(Dir::West, n.wall(nf.parity), 1);
                    t.set(Dir::East, r.move == Move::Right ? n.hop(q2) : std::string("cp"),
                          r.move == Move::Right ? 1 : 1);
                } else {
                    if (r.move == Move::Right) {
                        t.set(Dir::East, n.hop(q2), 1);
                        t.set(Dir::West, "cp", 1);
                    } else {
                        t.set(Dir::West, n.hop(q2), 1);
                        t.set(Dir::East, "cp", 1);
                    }
                }
            }
        }
    }

    // Heads: tile receiving the state via a sideways hop.
    for (const std::string& q : tm.states) {
        for (const std::string& c : tm.alphabet) {
            for (const auto& [f, blank_only] : all_flags(true)) {
                if (blank_only && c != blank) continue;
                for (int dd = 0; dd < 2; ++dd) {  // 0 = from west, 1 = from east
                    if (f.kind == PlaceFlag::Wall && dd == 0) continue;
                    if (f.kind == PlaceFlag::End && dd == 1) continue;
                    std::string id = "hd." + q + "." + c + "." + f.tag() +
                                     (dd == 0 ? ".w" : ".e");
                    ProtoTile& t = ps.add(id);
                    t.set(Dir::South, n.sym(c, f), 1);
                    t.set(dd == 0 ? Dir::West : Dir::East, n.hop(q), 1);
                    PlaceFlag nf = bump(f, n);
                    // A head landing on the old slope cell is interior within
                    // its own (longer) row.
                    if (nf.kind == PlaceFlag::End) nf = {PlaceFlag::Interior, 0};
                    if (tm.halting(q))
                        t.set(Dir::North, "halt", 2);
                    else
                        t.set(Dir::North, n.pglue(q, c, nf), 2);
                    if (f.kind == PlaceFlag::Interior)
                        t.set(dd == 0 ? Dir::East : Dir::West, "cp", 1);
                    else if (f.kind == PlaceFlag::Wall)
                        t.set(Dir::West, n.wall(nf.parity), 1);
                    else  // end: keep the slope extending
                        t.set(Dir::East, "ext", 2);
                }
            }
        }
    }

    // Head that moved east past the slope into the extension cell. A halting
    // one uses a distinct marker glue so the crawl corner sits directly above
    // it, keeping the descent aligned with the slope.
    for (const std::string& q : tm.states) {
        ProtoTile& t = ps.add("xh." + q);
        t.set(Dir::West, n.exthop(q), 2);
        if (tm.halting(q))
            t.set(Dir::North, "halt_e", 2);
        else
            t.set(Dir::North, n.pglue(q, blank, {PlaceFlag::End, 0}), 2);
    }

    // Copies.
    for (const std::string& a : tm.alphabet) {
        ProtoTile& t = ps.add("cp." + a);
        t.set(Dir::West, "cp", 1);
        t.set(Dir::East, "cp", 1);
        t.set(Dir::South, "s." + a, 1);
        t.set(Dir::North, "s." + a, 1);
        for (int p = 0; p < wp.parity; ++p) {
            ProtoTile& w = ps.add("cw." + a + "." + std::to_string(p));
            w.set(Dir::East, "cp", 1);
            w.set(Dir::South, n.sym(a, {PlaceFlag::Wall, p}), 1);
            int np = n.next_parity(p);
            w.set(Dir::North, n.sym(a, {PlaceFlag::Wall, np}), 1);
            w.set(Dir::West, n.wall(np), 1);
        }
    }
    {
        ProtoTile& t = ps.add("ce");  // copy over the previous slope cell
        t.set(Dir::West, "cp", 1);
        t.set(Dir::South, "end", 1);
        t.set(Dir::North, "s." + blank, 1);
        t.set(Dir::East, "ext", 2);
    }
    {
        ProtoTile& t = ps.add("ext");  // new slope cell
        t.set(Dir::West, "ext", 2);
        t.set(Dir::North, "end", 1);
        t.set(Dir::East, "edge", 1);
    }

    // Halting marker: crawl east on top of the final row, then walk down the
    // slope; a distinct halting tile binds beside the seed row's east face.
    {
        ProtoTile& t = ps.add("hs");
        t.set(Dir::South, "halt", 2);
        t.set(Dir::East, "hrun", 1);
    }
    {
        ProtoTile& t = ps.add("hse");  // crawl start over a slope-cell halt
        t.set(Dir::South, "halt_e", 2);
        t.set(Dir::East, "hout", 2);
    }
    for (const std::string& a : tm.alphabet) {
        ProtoTile& t = ps.add("hc." + a);
        t.set(Dir::West, "hrun", 1);
        t.set(Dir::South, "s." + a, 1);
        t.set(Dir::East, "hrun", 1);
    }
    {
        ProtoTile& t = ps.add("hk");
        t.set(Dir::West, "hrun", 1);
        t.set(Dir::South, "end", 1);
        t.set(Dir::East, "hout", 2);
    }
    {
        ProtoTile& t = ps.add("ho");
        t.set(Dir::West, "hout", 2);
        t.set(Dir::South, "hdrop0", 2);
    }
    {
        ProtoTile& t = ps.add("fw");
        t.set(Dir::North, "hdrop0", 2);
        t.set(Dir::South, "hdown", 2);
    }
    {
        ProtoTile& t = ps.add("dp");
        t.set(Dir::North, "hdown", 2);
        t.set(Dir::West, "hwest", 1);
    }
    {
        ProtoTile& t = ps.add("wk");
        t.set(Dir::East, "hwest", 1);
        t.set(Dir::West, "edge", 1);
        t.set(Dir::South, "hdown", 2);
    }
    {
        ProtoTile& t = ps.add("ht");
        t.set(Dir::East, "hwest", 1);
        t.set(Dir::West, "bedge", 1);
    }

    // Seed row: initial tape plus one end cell.
    TmInterpreter interp(tm);
    TmConfig c0 = interp.initial();
    int R0 = static_cast<int>(c0.tape.size());
    wp.base_end = R0;
    for (int x = 0; x <= R0; ++x) {
        std::string id = "seed" + std::to_string(x);
        ProtoTile& t = ps.add(id);
        if (x < R0) t.set(Dir::East, "sd" + std::to_string(x), 2);
        else t.set(Dir::East, "bedge", 1);
        if (x > 0) t.set(Dir::West, "sd" + std::to_string(x - 1), 2);
        else if (!opts.seed_west_anchor.empty())
            t.set(Dir::West, opts.seed_west_anchor, 2);
        if (x == 0) {
            if (tm.halting(c0.state)) t.set(Dir::North, "halt", 2);
            else t.set(Dir::North, n.pglue(c0.state, c0.tape[0], {PlaceFlag::Wall, 0}), 2);
        } else if (x < R0) {
            t.set(Dir::North, "s." + c0.tape[x], 1);
        } else {
            t.set(Dir::North, "end", 1);
        }
        ps.seed.emplace_back(Position{x, 0, 0}, id);
    }
    return wp;
}

std::vector<std::pair<Position, std::string>> wedge_grown_tiles(const WedgeProto& wp,
                                                                int rows,
                                                                bool include_marker) {
    const TuringMachineSpec& tm = wp.tm;
    Names n{wp.parity};
    TmInterpreter interp(tm);
    std::vector<std::pair<Position, std::string>> out;
    TmConfig prev = interp.initial();
    int R_prev = wp.base_end;
    int halted_at = prev.halted ? 0 : -1;
    bool halted_in_ext = false;
    int y = 1;
    for (; y <= rows; ++y) {
        if (prev.halted) break;
        TmConfig cur = interp.step(prev);
        int R_cur = R_prev + 1;
        int h_old = prev.head;
        const std::string a = prev.symbol_at(h_old, tm.blank);
        const TmRule& r = tm.rule(prev.state, a);
        PlaceFlag f_old = flag_of(h_old, R_prev, y - 1, wp.parity);
        bool bounce = (h_old == 0 && r.move == Move::Left);
        bool ext_head = (f_old.kind == PlaceFlag::End && r.move == Move::Right);

        for (int x = 0; x <= R_cur; ++x) {
            Position pos{x, y, 0};
            if (x == h_old) {
                out.emplace_back(pos, "pv." + prev.state + "." + a + "." + f_old.tag());
            } else if (!bounce && !ext_head && x == cur.head) {
                PlaceFlag f = flag_of(x, R_prev, y - 1, wp.parity);
                const std::string c = prev.symbol_at(x, tm.blank);
                out.emplace_back(pos, "hd." + cur.state + "." + c + "." + f.tag() +
                                          (r.move == Move::Right ? ".w" : ".e"));
            } else if (ext_head && x == R_cur) {
                out.emplace_back(pos, "xh." + cur.state);
            } else if (x == R_cur) {
                out.emplace_back(pos, "ext");
            } else if (x == R_prev) {
                out.emplace_back(pos, "ce");
            } else if (x == 0) {
                PlaceFlag f = flag_of(0, R_prev, y - 1, wp.parity);
                out.emplace_back(pos, "cw." + prev.symbol_at(0, tm.blank) + "." +
                                          std::to_string(f.parity));
            } else {
                out.emplace_back(pos, "cp." + prev.symbol_at(x, tm.blank));
            }
        }
        prev = cur;
        R_prev = R_cur;
        if (cur.halted) {
            halted_at = y;
            halted_in_ext = ext_head;
            break;
        }
    }
    (void)n;
    if (include_marker && halted_at >= 0) {
        int h = halted_at;
        int hx = prev.head;
        int R_h = R_prev;
        if (halted_in_ext) {
            // Head halted on the slope cell itself; corner sits right above.
            out.emplace_back(Position{R_h, h + 1, 0}, "hse");
        } else {
            out.emplace_back(Position{hx, h + 1, 0}, "hs");
            for (int x = hx + 1; x < R_h; ++x)
                out.emplace_back(Position{x, h + 1, 0}, "hc." + prev.symbol_at(x, tm.blank));
            out.emplace_back(Position{R_h, h + 1, 0}, "hk");
        }
        out.emplace_back(Position{R_h + 1, h + 1, 0}, "ho");
        out.emplace_back(Position{R_h + 1, h, 0}, "fw");
        if (h == 0) {
            // Degenerate immediate halt: the walker chain has no slope to
            // descend; one dropper dangles below the base and stops there.
            out.emplace_back(Position{R_h + 1, -1, 0}, "dp");
        }
        int dx = R_h + 1, dy = h;
        while (dy >= 1) {
            out.emplace_back(Position{dx, dy - 1, 0}, "dp");
            if (dy - 1 >= 1)
                out.emplace_back(Position{dx - 1, dy - 1, 0}, "wk");
            else
                out.emplace_back(Position{dx - 1, dy - 1, 0}, "ht");
            --dx;
            --dy;
        }
    }
    return out;
}

std::optional<int> wedge_halt_rows(const WedgeProto& wp, int probe_limit) {
    TmInterpreter interp(wp.tm);
    TmConfig c = interp.initial();
    if (c.halted) return 0;
    for (int i = 1; i <= probe_limit; ++i) {
        c = interp.step(c);
        if (c.halted) return i;
    }
    return std::nullopt;
}

std::string wedge_tile_symbol(const WedgeProto& wp, const std::string& tile_id) {
    auto field = [](const std::string& s, int k) {
        std::size_t start = 0;
        for (int i = 0; i < k; ++i) {
            start = s.find('.', start);
            if (start == std::string::npos) return std::string();
            ++start;
        }
        std::size_t end = s.find('.', start);
        return s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    };
    if (tile_id.rfind("cp.", 0) == 0 || tile_id.rfind("cw.", 0) == 0)
        return field(tile_id, 1);
    if (tile_id.rfind("pv.", 0) == 0) {
        // carries the written symbol
        const TmRule& r = wp.tm.rule(field(tile_id, 1), field(tile_id, 2));
        return r.write;
    }
    if (tile_id.rfind("hd.", 0) == 0) return field(tile_id, 2);
    if (tile_id.rfind("xh.", 0) == 0 || tile_id == "ce" || tile_id == "ext")
        return wp.tm.blank;
    if (tile_id.rfind("seed", 0) == 0) return std::string();
    return std::string();
}

TileSystem gen_wedge(const TuringMachineSpec& tm) {
    WedgeProto wp = make_wedge_proto(tm, {});
    TileSystem sys;
    sys.dimension = 2;
    transplant(sys, wp.proto, "", "", Frame::facing_east({0, 0, 0}));
    sys.validate();
    return sys;
}

}  // namespace tilesim
