#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "tilesim/engine.hpp"

using namespace tilesim;
using tilesim::tests::toy_square_system;

namespace {

int idx(const TileSystem& s, const char* id) {
    int i = s.tile_index(id);
    REQUIRE(i >= 0);
    return i;
}

// Brute-force min-cut oracle for small configurations: tries every
// bipartition of the placed tiles.
bool stable_by_bipartition(const Configuration& c, const TileSystem& sys) {
    auto placed = c.sorted_placement();
    int n = static_cast<int>(placed.size());
    REQUIRE(n <= 14);
    if (n == 1) return true;
    auto bond = [&](int i, int j) {
        Position pi = placed[i].first, pj = placed[j].first;
        int dx = pj.x - pi.x, dy = pj.y - pi.y, dz = pj.z - pi.z;
        if (std::abs(dx) + std::abs(dy) + std::abs(dz) != 1) return 0;
        Dir d;
        if (dx == 1) d = Dir::East;
        else if (dx == -1) d = Dir::West;
        else if (dy == 1) d = Dir::North;
        else if (dy == -1) d = Dir::South;
        else if (dz == 1) d = Dir::Up;
        else d = Dir::Down;
        const TileType& ti = sys.tile(placed[i].second.tile);
        const TileType& tj = sys.tile(placed[j].second.tile);
        const GlueSpec& gi = ti.side(d);
        const GlueSpec& gj = tj.side(opposite(d));
        if (!sys.related(gi.name, gj.name)) return 0;
        return std::min(gi.strength, gj.strength);
    };
    for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
        int w = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (((mask >> i) & 1) != ((mask >> j) & 1)) w += bond(i, j);
        if (w < kTemperature) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("binding strength sums related abutting glue minima") {
    TileSystem sys = toy_square_system(false);
    Configuration c = Configuration::from_seed(sys);
    CHECK(binding_strength(c, sys, {1, 0, 0}, idx(sys, "A")) == 2);
    CHECK(binding_strength(c, sys, {0, 1, 0}, idx(sys, "B")) == 2);
    // no occupied neighbors -> 0
    CHECK(binding_strength(c, sys, {5, 5, 0}, idx(sys, "A")) == 0);
    // cooperative 1+1 once A and B are down
    c.place(sys, {1, 0, 0}, idx(sys, "A"));
    c.place(sys, {0, 1, 0}, idx(sys, "B"));
    CHECK(binding_strength(c, sys, {1, 1, 0}, idx(sys, "C")) == 2);
    CHECK_THROWS_WITH(binding_strength(c, sys, {0, 0, 0}, idx(sys, "A")),
                      "position occupied");
}

TEST_CASE("attachable requires threshold, adjacency and an unfrozen arm") {
    TileSystem sys = toy_square_system(false, true);
    Configuration c = Configuration::from_seed(sys);
    CHECK(attachable(c, sys, {1, 0, 0}, idx(sys, "A")));
    // single strength-1 contact is below threshold
    c.place(sys, {1, 0, 0}, idx(sys, "A"));
    CHECK_FALSE(attachable(c, sys, {1, 1, 0}, idx(sys, "C")));
    c.place(sys, {0, 1, 0}, idx(sys, "B"));
    CHECK(attachable(c, sys, {1, 1, 0}, idx(sys, "C")));
    // freezing the arm kills every attachment
    inject_blockage(c, sys, sys.find_arm("main"));
    CHECK_FALSE(attachable(c, sys, {1, 1, 0}, idx(sys, "C")));
    CHECK(frontier(c, sys).empty());
    CHECK_THROWS_WITH(inject_blockage(c, sys, sys.find_arm("main")), "already blocked");
}

TEST_CASE("frontier of the toy seed lists exactly the two documented attachments") {
    TileSystem sys = toy_square_system(false);
    Configuration c = Configuration::from_seed(sys);
    auto f = frontier(c, sys);
    REQUIRE(f.size() == 2);
    std::set<std::pair<Position, int>> got(f.begin(), f.end());
    CHECK(got.count({{1, 0, 0}, idx(sys, "A")}));
    CHECK(got.count({{0, 1, 0}, idx(sys, "B")}));
    CHECK_FALSE(is_terminal(c, sys));
}

TEST_CASE("run without the erroneous tile reaches the unique 2x2 square") {
    TileSystem sys = toy_square_system(false);
    Rng rng(7);
    RunResult r = run(sys, rng, 100);
    CHECK(r.reached_terminal);
    CHECK(r.config.size() == 4);
    CHECK(r.config.at({1, 1, 0}) != nullptr);
    CHECK(check_stable(r.config, sys));
    CHECK(is_terminal(r.config, sys));
    std::string err;
    CHECK(replay_sequence(sys, r.sequence, &err));
}

TEST_CASE("max_steps 0 returns the bare seed") {
    TileSystem sys = toy_square_system(false);
    Rng rng(1);
    RunResult r = run(sys, rng, 0);
    CHECK(r.config.size() == 1);
    CHECK(r.sequence.attachments.empty());
}

TEST_CASE("step is deterministic for a fixed seed and uniform over the frontier") {
    TileSystem sys = toy_square_system(false);
    // determinism: same seed, same first step
    for (std::uint64_t s : {3ull, 99ull}) {
        Rng r1(s), r2(s);
        Configuration c1 = Configuration::from_seed(sys);
        Configuration c2 = Configuration::from_seed(sys);
        Frontier f1, f2;
        f1.rebuild(c1, sys);
        f2.rebuild(c2, sys);
        Attachment a1 = step(c1, f1, sys, r1);
        Attachment a2 = step(c2, f2, sys, r2);
        CHECK(a1.pos == a2.pos);
        CHECK(a1.tile == a2.tile);
    }
    // uniformity: the two frontier pairs each drawn with frequency 0.5 +- 0.02
    int count_east = 0;
    const int trials = 10000;
    for (int s = 0; s < trials; ++s) {
        Rng rng(1000 + s);
        Configuration c = Configuration::from_seed(sys);
        Frontier f;
        f.rebuild(c, sys);
        Attachment a = step(c, f, sys, rng);
        if (a.pos == Position{1, 0, 0}) ++count_east;
    }
    double freq = static_cast<double>(count_east) / trials;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);
}

TEST_CASE("identical run parameters give identical traces") {
    TileSystem sys = toy_square_system(true, true);
    FaultPlan plan{{2, sys.find_arm("main")}};
    Rng r1(42), r2(42);
    RunResult a = run(sys, r1, 50, plan);
    RunResult b = run(sys, r2, 50, plan);
    CHECK(a.trace == b.trace);
    CHECK(a.config == b.config);
}

TEST_CASE("fault plan freezing at step 0 blocks every labeled placement") {
    TileSystem sys = toy_square_system(false, true);
    Rng rng(5);
    RunResult r = run(sys, rng, 50, {{0, sys.find_arm("main")}});
    CHECK(r.config.size() == 1);  // nothing placed beyond the seed
    CHECK(r.config.blockage_count() == 1);
    bool saw_block = false;
    for (const auto& line : r.trace) saw_block |= line.rfind("BLOCK 0 main", 0) == 0;
    CHECK(saw_block);
}

TEST_CASE("placing the erroneous tile counts a blockage and freezes its arm") {
    TileSystem sys = toy_square_system(true, true);
    Configuration c = Configuration::from_seed(sys);
    c.place(sys, {1, 0, 0}, idx(sys, "X"));
    CHECK(c.blockage_count() == 1);
    CHECK(c.arm_frozen(sys.find_arm("main")));
    CHECK(frontier(c, sys).empty());
}

TEST_CASE("blockage count never decreases along a run") {
    TileSystem sys = toy_square_system(true);
    for (std::uint64_t s = 0; s < 30; ++s) {
        Rng rng(s);
        Configuration c = Configuration::from_seed(sys);
        Frontier f;
        f.rebuild(c, sys);
        int last = c.blockage_count();
        while (!f.empty()) {
            step(c, f, sys, rng);
            CHECK(c.blockage_count() >= last);
            last = c.blockage_count();
        }
    }
}

TEST_CASE("incremental frontier matches the recomputed frontier throughout a run") {
    TileSystem sys = toy_square_system(true);
    for (std::uint64_t s = 0; s < 20; ++s) {
        Rng rng(s);
        Configuration c = Configuration::from_seed(sys);
        Frontier f;
        f.rebuild(c, sys);
        while (!f.empty()) {
            CHECK(f.sorted_entries() == frontier(c, sys));
            step(c, f, sys, rng);
        }
        CHECK(frontier(c, sys).empty());
    }
}

TEST_CASE("stability: single tile, weak pair, full square") {
    TileSystem sys = toy_square_system(false);
    Configuration c = Configuration::from_seed(sys);
    CHECK(check_stable(c, sys));

    // two tiles joined by one strength-1 bond fail the cut check
    TileSystem weak;
    weak.dimension = 2;
    GlueId g = weak.intern_glue("g");
    TileType t1;
    t1.id = "L";
    t1.side(Dir::East) = {g, 1};
    TileType t2;
    t2.id = "R";
    t2.side(Dir::West) = {g, 1};
    weak.add_tile(t1);
    weak.add_tile(t2);
    weak.seed.emplace_back(Position{0, 0, 0}, 0);
    Configuration wc = Configuration::from_seed(weak);
    wc.place(weak, {1, 0, 0}, 1);
    CHECK_FALSE(check_stable(wc, weak));

    // the completed square has min cut 2 (checked against the brute-force
    // bipartition oracle as well)
    Rng rng(3);
    RunResult r = run(sys, rng, 10);
    CHECK(check_stable(r.config, sys));
    CHECK(stable_by_bipartition(r.config, sys));
}

TEST_CASE("stability check rejects disconnected placements") {
    TileSystem sys = toy_square_system(false);
    Configuration c = Configuration::from_seed(sys);
    c.place(sys, {5, 5, 0}, idx(sys, "A"));
    CHECK_THROWS_WITH((void)check_stable(c, sys), "not a configuration");
}

TEST_CASE("every small run result agrees with the bipartition min-cut oracle") {
    TileSystem sys = toy_square_system(true, true);
    for (std::uint64_t s = 0; s < 25; ++s) {
        Rng rng(s);
        RunResult r = run(sys, rng, 12);
        CHECK(check_stable(r.config, sys) == stable_by_bipartition(r.config, sys));
        CHECK(check_stable(r.config, sys));
    }
}

TEST_CASE("frontier never overlaps occupied cells and runs stay seed-connected") {
    TileSystem sys = toy_square_system(true);
    for (std::uint64_t s = 0; s < 20; ++s) {
        Rng rng(s);
        RunResult r = run(sys, rng, 12);
        for (const auto& [pos, tile] : frontier(r.config, sys)) {
            (void)tile;
            CHECK_FALSE(r.config.occupied(pos));
        }
        CHECK_NOTHROW((void)check_stable(r.config, sys));  // connectivity holds
    }
}

TEST_CASE("glue relation honors declared extra pairs") {
    TileSystem sys;
    sys.dimension = 2;
    GlueId x = sys.intern_glue("x");
    GlueId y = sys.intern_glue("y");
    TileType s;
    s.id = "S";
    s.side(Dir::East) = {x, 2};
    TileType t;
    t.id = "T";
    t.side(Dir::West) = {y, 2};
    sys.add_tile(s);
    sys.add_tile(t);
    sys.seed.emplace_back(Position{0, 0, 0}, 0);
    sys.validate();
    Configuration c = Configuration::from_seed(sys);
    CHECK(binding_strength(c, sys, {1, 0, 0}, 1) == 0);
    sys.add_relation(x, y);
    CHECK(binding_strength(c, sys, {1, 0, 0}, 1) == 2);
}
