#include <doctest.h>

#include <map>

#include "tilesim/determinism.hpp"
#include "tilesim/engine.hpp"
#include "tilesim/wedge.hpp"

using namespace tilesim;

namespace {

// Decodes one grown row back to tape symbols and compares against the
// interpreter. The head/pivot cells carry state info; symbol equality is what
// the row encoding promises.
void check_rows_against_interpreter(const TuringMachineSpec& tm, int rows) {
    WedgeProto wp = make_wedge_proto(tm, {});
    TmInterpreter interp(tm);
    auto tiles = wedge_grown_tiles(wp, rows, false);
    std::map<int, std::map<int, std::string>> by_row;  // y -> x -> id
    for (const auto& [pos, id] : tiles) by_row[pos.y][pos.x] = id;
    TmConfig c = interp.initial();
    for (int y = 1; y <= rows && !c.halted; ++y) {
        c = interp.step(c);
        REQUIRE(by_row.count(y));
        const auto& row = by_row[y];
        for (const auto& [x, id] : row) {
            std::string sym = wedge_tile_symbol(wp, id);
            if (sym.empty()) continue;
            CHECK_MESSAGE(sym == c.symbol_at(x, tm.blank),
                          "row ", y, " cell ", x, " tile ", id);
        }
    }
}

Configuration run_to_terminal(const TileSystem& sys, std::uint64_t seed, int cap) {
    Rng rng(seed);
    RunResult r = run(sys, rng, cap);
    REQUIRE(r.reached_terminal);
    return std::move(r.config);
}

}  // namespace

TEST_CASE("immediately halting machine builds seed row plus marker path only") {
    TileSystem sys = gen_wedge(tm_preset("halt", "1"));
    EnumerationResult e = enumerate_terminal_assemblies(sys, {24, 100000});
    CHECK_FALSE(e.bound_exceeded);
    REQUIRE(e.terminals.size() == 1);
    // seed row (2 cells), crawl start, corner, corner-out, first walker and
    // the dangling dropper below base level
    const Configuration& t = e.terminals[0];
    CHECK(t.size() == 7);
    CHECK(t.at({0, 1, 0}) != nullptr);   // marker start above the halted head
    CHECK(t.at({2, -1, 0}) != nullptr);  // dangling dropper
    CHECK(check_stable(t, sys));
}

TEST_CASE("unary increment rows decode to the interpreter tape") {
    TuringMachineSpec tm = tm_preset("unary-increment", "11");
    check_rows_against_interpreter(tm, 4);
    // runner and zigzag exercise right-extension and the wall bounce
    check_rows_against_interpreter(tm_preset("runner", "1"), 6);
    check_rows_against_interpreter(tm_preset("zigzag", ""), 8);
}

TEST_CASE("engine reaches exactly the snapshot configuration for a halting machine") {
    TuringMachineSpec tm = tm_preset("unary-increment", "1");
    WedgeProto wp = make_wedge_proto(tm, {});
    TileSystem sys = gen_wedge(tm);
    auto halt = wedge_halt_rows(wp, 100);
    REQUIRE(halt.has_value());
    auto grown = wedge_grown_tiles(wp, *halt, true);
    Configuration c = run_to_terminal(sys, 17, 500);
    // expected = seed + grown tiles
    CHECK(c.size() == static_cast<int>(grown.size() + wp.proto.seed.size()));
    for (const auto& [pos, id] : grown) {
        const PlacedTile* p = c.at(pos);
        REQUIRE_MESSAGE(p != nullptr, "missing tile at ", pos.x, ",", pos.y);
        CHECK(sys.tile(p->tile).id == id);
    }
    CHECK(is_terminal(c, sys));
}

TEST_CASE("halting wedges pass local determinism and have a unique terminal") {
    for (const char* preset : {"halt", "unary-increment"}) {
        TuringMachineSpec tm = tm_preset(preset, "1");
        TileSystem sys = gen_wedge(tm);
        LDVerdict v = check_local_determinism(sys, {22, 400000});
        CHECK_MESSAGE(v.is_locally_deterministic, preset,
                      (v.witness ? v.witness->describe(sys) : std::string(" (bound)")));
        UniqueTerminalResult u = verify_unique_terminal(sys, {22, 400000});
        CHECK(u.unique);
    }
}

TEST_CASE("a non-halting machine keeps extending one cell per row") {
    TuringMachineSpec tm = tm_preset("runner", "");
    TileSystem sys = gen_wedge(tm);
    Rng rng(5);
    RunResult r = run(sys, rng, 400);
    CHECK_FALSE(r.reached_terminal);
    // row extents grow with height
    std::map<int, int> max_x;
    for (const auto& [pos, placed] : r.config.placement()) {
        (void)placed;
        max_x[pos.y] = std::max(max_x.count(pos.y) ? max_x[pos.y] : -99, pos.x);
    }
    for (const auto& [y, mx] : max_x) {
        if (y <= 0 || !max_x.count(y - 1)) continue;
        CHECK(mx <= max_x[y - 1] + 1);
    }
    // determinism of the full trace
    Rng rng2(5);
    RunResult r2 = run(sys, rng2, 400);
    CHECK(r.trace == r2.trace);
}

TEST_CASE("zigzag wedge replays legally and decodes after many bounces") {
    TuringMachineSpec tm = tm_preset("zigzag", "");
    TileSystem sys = gen_wedge(tm);
    Rng rng(11);
    RunResult r = run(sys, rng, 300);
    std::string err;
    CHECK_MESSAGE(replay_sequence(sys, r.sequence, &err), err);
}
