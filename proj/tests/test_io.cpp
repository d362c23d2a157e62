#include <doctest.h>

#include "fixtures.hpp"
#include "tilesim/engine.hpp"
#include "tilesim/tileset_io.hpp"

using namespace tilesim;
using tilesim::tests::toy_square_system;

TEST_CASE("tileset round trip is byte identical and semantically equal") {
    TileSystem sys = toy_square_system(true, true);
    std::string text = write_tileset(sys);
    TileSystem back = parse_tileset(text);
    CHECK(write_tileset(back) == text);
    CHECK(back.dimension == sys.dimension);
    CHECK(back.tile_count() == sys.tile_count());
    CHECK(back.manifest == sys.manifest);
    // same run on both systems gives the same trace tail
    Rng r1(11), r2(11);
    RunResult a = run(sys, r1, 30);
    RunResult b = run(back, r2, 30);
    CHECK(a.config == b.config);
}

TEST_CASE("parser reports the offending line") {
    std::string text = "tileset v1\ndim 2\nglue a\nbogus line here\n";
    try {
        parse_tileset(text);
        FAIL("expected parse failure");
    } catch (const TilesimError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("parser rejects undeclared glues, bad strengths and unknown tiles") {
    CHECK_THROWS(parse_tileset("tileset v1\ndim 2\ntile T\nside N nope 1\n"));
    CHECK_THROWS(parse_tileset("tileset v1\ndim 2\nglue a\ntile T\nside N a 7\n"));
    CHECK_THROWS(parse_tileset("tileset v1\ndim 2\nglue a\ntile T\nside N a 2\nplace 0 0 U\n"));
    CHECK_THROWS(parse_tileset("tileset v1\ndim 4\n"));
}

TEST_CASE("manifest comments survive the round trip") {
    TileSystem sys = toy_square_system(false);
    sys.manifest = "cmd: gen toy\nseed: 99";
    std::string text = write_tileset(sys);
    CHECK(text.rfind("# cmd: gen toy\n# seed: 99\ntileset v1", 0) == 0);
    CHECK(parse_tileset(text).manifest == sys.manifest);
}

TEST_CASE("relation pairs and erroneous flags round trip") {
    TileSystem sys;
    sys.dimension = 2;
    GlueId a = sys.intern_glue("a");
    GlueId b = sys.intern_glue("b");
    sys.add_relation(a, b);
    TileType s;
    s.id = "S";
    s.side(Dir::East) = {a, 2};
    sys.add_tile(s);
    TileType t;
    t.id = "T";
    t.erroneous = true;
    t.arm = sys.intern_arm("left");
    t.side(Dir::West) = {b, 2};
    sys.add_tile(t);
    sys.seed.emplace_back(Position{0, 0, 0}, 0);
    TileSystem back = parse_tileset(write_tileset(sys));
    CHECK(back.related(back.find_glue("a"), back.find_glue("b")));
    int ti = back.tile_index("T");
    REQUIRE(ti >= 0);
    CHECK(back.tile(ti).erroneous);
    CHECK(back.arm_name(back.tile(ti).arm) == "left");
}
