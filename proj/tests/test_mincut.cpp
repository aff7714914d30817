#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "enclose/mincut.hpp"
#include "test_util.hpp"

using namespace enclose;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }
Point Pr(long xn, long xd, long yn, long yd) {
    return {Rational(Int(xn), Int(xd)), Rational(Int(yn), Int(yd))};
}

std::vector<UnitDisk> hex_ring(long dx = 0) {
    std::vector<UnitDisk> r{UnitDisk{Pr(9, 5, 0, 1)},   UnitDisk{Pr(9, 10, 3, 2)},
                            UnitDisk{Pr(-9, 10, 3, 2)}, UnitDisk{Pr(-9, 5, 0, 1)},
                            UnitDisk{Pr(-9, 10, -3, 2)}, UnitDisk{Pr(9, 10, -3, 2)}};
    for (auto& d : r) d.center.x += Rational(dx);
    return r;
}

}  // namespace

TEST_CASE("subdivision splits crossing center segments") {
    std::vector<Point> centers{P(0, 0), P(2, 2), P(0, 2), P(2, 0)};
    std::vector<std::pair<int, int>> pairs{{0, 1}, {2, 3}};
    std::vector<Segment> sigma{{P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}};
    auto h = detail::subdivide_sigma(centers, pairs, sigma);
    REQUIRE(h.vertices.size() == 5);
    CHECK(h.center_count == 4);
    CHECK(h.vertices[4] == P(1, 1));
    REQUIRE(h.pieces.size() == 4);
    CHECK(h.parents == std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {2, 3}, {2, 3}});
    for (auto [u, v] : h.pieces) CHECK((u == 4 || v == 4));
}

TEST_CASE("ring and path drawings have no crossings") {
    auto h = planarize(hex_ring());
    CHECK(h.vertices.size() == 6);
    CHECK(h.pieces.size() == 6);

    std::vector<UnitDisk> path{UnitDisk{P(0, 0)}, UnitDisk{Pr(3, 2, 0, 1)}, UnitDisk{P(3, 0)}};
    auto hp = planarize(path);
    CHECK(hp.vertices.size() == 3);
    CHECK(hp.pieces.size() == 2);
}

TEST_CASE("concurrent center segments are rejected") {
    std::vector<UnitDisk> cloud{UnitDisk{Pr(-3, 4, 0, 1)},  UnitDisk{Pr(3, 4, 0, 1)},
                                UnitDisk{Pr(0, 1, -3, 4)},  UnitDisk{Pr(0, 1, 3, 4)},
                                UnitDisk{Pr(-1, 2, -1, 2)}, UnitDisk{Pr(1, 2, 1, 2)}};
    CHECK_THROWS_AS(planarize(cloud), DegenerateDrawing);
}

TEST_CASE("dual of the ring marks the inner face") {
    auto h = planarize(hex_ring());
    auto dual = build_dual(h, {P(0, 0)});
    REQUIRE(dual.n_faces == 2);
    int inner = 1 - dual.outer;
    CHECK(dual.nonempty[inner] == 1);
    CHECK(dual.nonempty[dual.outer] == 0);
    CHECK(dual.edge_faces.size() == 6);
    for (auto [fa, fb] : dual.edge_faces) CHECK(((fa == inner && fb == dual.outer) || (fa == dual.outer && fb == inner)));

    auto empty = build_dual(h, {});
    for (char f : empty.nonempty) CHECK(f == 0);
    CHECK(min_st_cut(empty).empty());
}

TEST_CASE("dangling pieces become self loops in their face") {
    std::vector<UnitDisk> path{UnitDisk{P(0, 0)}, UnitDisk{Pr(3, 2, 0, 1)}, UnitDisk{P(3, 0)}};
    auto dual = build_dual(planarize(path), {});
    REQUIRE(dual.n_faces == 1);
    for (auto [fa, fb] : dual.edge_faces) {
        CHECK(fa == fb);
        CHECK(fa == dual.outer);
    }

    // a path cannot enclose, so a marked face coincides with the outer one
    auto marked = build_dual(planarize(path), {Pr(7, 10, 1, 5)});
    CHECK_THROWS_AS(min_st_cut(marked), NoFiniteCut);
}

TEST_CASE("nested triangle drawing yields three faces") {
    std::vector<Point> centers{P(0, 0), P(10, 0), P(5, 8), P(4, 3), P(6, 3), P(5, 4)};
    std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    std::vector<Segment> sigma;
    for (auto [i, j] : pairs) sigma.push_back({centers[i], centers[j]});
    auto h = detail::subdivide_sigma(centers, pairs, sigma);
    CHECK(h.pieces.size() == 6);

    auto dual = build_dual(h, {P(1, 1)});
    REQUIRE(dual.n_faces == 3);
    int annulus = locate(dual.faces, P(1, 1));
    int core = locate(dual.faces, Pr(5, 1, 7, 2));
    CHECK(annulus != dual.outer);
    CHECK(core != dual.outer);
    CHECK(annulus != core);
    CHECK(dual.nonempty[annulus] == 1);
    CHECK(dual.nonempty[core] == 0);

    // flood oracle agrees that the probe is enclosed by the six segments
    ObstacleSet obs;
    obs.kind = ObstacleKind::Segments;
    obs.segments = sigma;
    auto delta = min_feature_separation(obs, {P(1, 1)});
    CHECK(grid_flood_oracle(P(1, 1), obs, oracle_pitch(delta)));

    CHECK(min_st_cut(dual) == std::vector<int>{0, 1, 2});
}

TEST_CASE("ring cut takes all six pieces") {
    auto dual = build_dual(planarize(hex_ring()), {P(0, 0)});
    auto cut = min_st_cut(dual);
    CHECK(cut == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("two face dual path cuts its single edge") {
    DualGraph dual;
    dual.n_faces = 2;
    dual.outer = 0;
    dual.edge_faces = {{0, 1}};
    dual.nonempty = {0, 1};
    CHECK(min_st_cut(dual) == std::vector<int>{0});

    dual.nonempty = {1, 0};
    CHECK_THROWS_AS(min_st_cut(dual), NoFiniteCut);
}

TEST_CASE("disk pipeline returns the ring") {
    auto sol = solve_unit_disks({P(0, 0)}, hex_ring());
    CHECK(sol.selected == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(sol.method == "mincut");
    CHECK(sol.objective == 6);

    CHECK(solve_unit_disks({}, hex_ring()).selected.empty());
    CHECK_THROWS_AS(solve_unit_disks({P(5, 5)}, hex_ring()), Infeasible);
}

TEST_CASE("disjoint rings are cut independently") {
    auto disks = hex_ring();
    for (const auto& d : hex_ring(100)) disks.push_back(d);
    auto sol = solve_unit_disks({P(0, 0), P(100, 0)}, disks);
    CHECK(sol.selected.size() == 12);
}

TEST_CASE("two cell instance needs only the four chosen disks") {
    std::vector<UnitDisk> disks{UnitDisk{Pr(-1, 1, 1, 2)},      UnitDisk{Pr(-1, 1, 49, 50)},
                                UnitDisk{Pr(-999, 1000, 3, 5)}, UnitDisk{Pr(99, 100, 1, 2)},
                                UnitDisk{Pr(99, 100, 49, 50)},  UnitDisk{Pr(999, 1000, 3, 5)}};
    auto sol = solve_unit_disks({Pr(0, 1, 3, 4)}, disks);
    CHECK(sol.selected == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("random rings survive the full pipeline") {
    std::mt19937_64 rng(1294);
    int done = 0;
    for (int iter = 0; iter < 200 && done < 30; ++iter) {
        int k = 6 + int(rng() % 3);
        std::vector<UnitDisk> disks;
        Rational r(Int(16 + long(rng() % 4)), Int(10));
        for (int i = 0; i < k; ++i) {
            double ang = 2.0 * 3.14159265358979 * i / k;
            long cx = std::lround(std::cos(ang) * 100.0) + long(rng() % 7) - 3;
            long cy = std::lround(std::sin(ang) * 100.0) + long(rng() % 7) - 3;
            disks.push_back(UnitDisk{{r * Rational(Int(cx), Int(100)), r * Rational(Int(cy), Int(100))}});
        }
        Point q = testutil::rand_point(rng, -1, 1, 5);
        try {
            if (!is_enclosed_unit_disks(q, disks)) continue;
            auto sol = solve_unit_disks({q}, disks);
            std::vector<UnitDisk> kept;
            for (int d : sol.selected) kept.push_back(disks[d]);
            CHECK(is_enclosed_unit_disks(q, kept));
            CHECK(sol.objective == long(sol.selected.size()));
            ++done;
        } catch (const Error&) {
            continue;  // degenerate draw, resample
        }
    }
    CHECK(done >= 20);
}
