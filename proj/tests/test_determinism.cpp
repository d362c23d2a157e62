#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "tilesim/determinism.hpp"

using namespace tilesim;
using tilesim::tests::toy_square_system;

namespace {

std::set<std::string> terminal_keys(const TileSystem& sys, const EnumerationResult& r) {
    std::set<std::string> keys;
    for (const Configuration& c : r.terminals) keys.insert(c.canonical_key(sys));
    return keys;
}

TileSystem seed_only_system() {
    TileSystem sys;
    sys.dimension = 2;
    TileType s;
    s.id = "S";
    sys.add_tile(s);
    sys.seed.emplace_back(Position{0, 0, 0}, 0);
    sys.validate();
    return sys;
}

}  // namespace

TEST_CASE("seed-only system has exactly its seed as terminal assembly") {
    TileSystem sys = seed_only_system();
    EnumerationResult r = enumerate_terminal_assemblies(sys, {10, 1000});
    CHECK_FALSE(r.bound_exceeded);
    REQUIRE(r.terminals.size() == 1);
    CHECK(r.terminals[0].size() == 1);
    CHECK(verify_unique_terminal(sys, {10, 1000}).unique);
    CHECK(check_local_determinism(sys, {10, 1000}).is_locally_deterministic);
}

TEST_CASE("toy system without the blockage tile has one terminal assembly") {
    TileSystem sys = toy_square_system(false);
    EnumerationResult r = enumerate_terminal_assemblies(sys, {10, 1000});
    CHECK_FALSE(r.bound_exceeded);
    CHECK(r.terminals.size() == 1);
    CHECK(r.terminals[0].size() == 4);
    CHECK(verify_unique_terminal(sys, {10, 1000}).unique);
}

TEST_CASE("toy system with the blockage tile has exactly two terminal assemblies") {
    TileSystem sys = toy_square_system(true);
    EnumerationResult r = enumerate_terminal_assemblies(sys, {10, 1000});
    CHECK_FALSE(r.bound_exceeded);
    REQUIRE(r.terminals.size() == 2);
    std::set<int> sizes;
    for (const Configuration& c : r.terminals) sizes.insert(c.size());
    // the full square and the blocked L-shape
    CHECK(sizes == std::set<int>{3, 4});
    CHECK_FALSE(verify_unique_terminal(sys, {10, 1000}).unique);
    // every enumerated terminal is stable
    for (const Configuration& c : r.terminals) CHECK(check_stable(c, sys));
}

TEST_CASE("enumeration is insensitive to branch exploration order") {
    for (bool with_x : {false, true}) {
        TileSystem sys = toy_square_system(with_x);
        EnumerationResult fwd = enumerate_terminal_assemblies(sys, {10, 1000}, false);
        EnumerationResult rev = enumerate_terminal_assemblies(sys, {10, 1000}, true);
        CHECK(terminal_keys(sys, fwd) == terminal_keys(sys, rev));
    }
}

TEST_CASE("bound exhaustion is reported with partial results") {
    TileSystem sys = toy_square_system(false);
    EnumerationResult r = enumerate_terminal_assemblies(sys, {2, 1000});
    CHECK(r.bound_exceeded);  // growth stops at 2 tiles, frontier still open
    CHECK(r.terminals.empty());
}

TEST_CASE("the toy square system is locally deterministic without the blockage tile") {
    TileSystem sys = toy_square_system(false);
    LDVerdict v = check_local_determinism(sys, {10, 1000});
    CHECK(v.is_locally_deterministic);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("the competing blockage tile breaks local determinism with a witness") {
    TileSystem sys = toy_square_system(true);
    LDVerdict v = check_local_determinism(sys, {10, 1000});
    CHECK_FALSE(v.is_locally_deterministic);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->condition == 2);
    CHECK(v.witness->location == Position{1, 0, 0});  // A and X compete east of the seed
    CHECK_FALSE(v.witness->competing_tiles.empty());
}

TEST_CASE("non-minimal binding strength trips condition 1") {
    // Seed row L M R: the outer posts expose strength-2 north glues, so the
    // filler above M eventually binds with strength 4 once both flanks are in.
    TileSystem sys;
    sys.dimension = 2;
    GlueId gl = sys.intern_glue("gl");
    GlueId gr = sys.intern_glue("gr");
    GlueId ra = sys.intern_glue("ra");
    GlueId rb = sys.intern_glue("rb");
    GlueId bl = sys.intern_glue("bl");
    GlueId br = sys.intern_glue("br");
    TileType left;
    left.id = "L";
    left.side(Dir::East) = {ra, 2};
    left.side(Dir::North) = {gl, 2};
    int li = sys.add_tile(left);
    TileType mid;
    mid.id = "M";
    mid.side(Dir::West) = {ra, 2};
    mid.side(Dir::East) = {rb, 2};
    int mi = sys.add_tile(mid);
    TileType right;
    right.id = "R";
    right.side(Dir::West) = {rb, 2};
    right.side(Dir::North) = {gr, 2};
    int ri = sys.add_tile(right);
    TileType post_l;
    post_l.id = "FL";
    post_l.side(Dir::South) = {gl, 2};
    post_l.side(Dir::East) = {bl, 2};
    sys.add_tile(post_l);
    TileType post_r;
    post_r.id = "FR";
    post_r.side(Dir::South) = {gr, 2};
    post_r.side(Dir::West) = {br, 2};
    sys.add_tile(post_r);
    TileType bridge;  // spans between the posts; strength 4 once both exist
    bridge.id = "B";
    bridge.side(Dir::West) = {bl, 2};
    bridge.side(Dir::East) = {br, 2};
    sys.add_tile(bridge);
    sys.seed.emplace_back(Position{0, 0, 0}, li);
    sys.seed.emplace_back(Position{1, 0, 0}, mi);
    sys.seed.emplace_back(Position{2, 0, 0}, ri);
    sys.validate();
    LDVerdict v = check_local_determinism(sys, {8, 2000});
    CHECK_FALSE(v.is_locally_deterministic);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->condition == 1);
}

TEST_CASE("local determinism implies a unique terminal assembly at desk scale") {
    for (bool with_x : {false, true}) {
        TileSystem sys = toy_square_system(with_x);
        LDVerdict v = check_local_determinism(sys, {10, 1000});
        UniqueTerminalResult u = verify_unique_terminal(sys, {10, 1000});
        if (v.is_locally_deterministic) CHECK(u.unique);
    }
}
