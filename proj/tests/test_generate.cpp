#include <catch2/catch_amalgamated.hpp>

#include "enclose/generate.hpp"
#include "enclose/io.hpp"

using namespace enclose;

namespace {

bool enclosed_by_full_set(const Point& p, const ObstacleSet& obs) {
    if (obs.kind == ObstacleKind::UnitDisks) return is_enclosed_unit_disks(p, obs.disks);
    return is_enclosed_segments(p, obs.segments);
}

} // namespace

TEST_CASE("same seed reproduces byte-identical instances") {
    auto a = generate_instance(ObstacleKind::UnitDisks, 6, 1, 42, GenStructure::Ring);
    auto b = generate_instance(ObstacleKind::UnitDisks, 6, 1, 42, GenStructure::Ring);
    REQUIRE(serialize_instance(a) == serialize_instance(b));

    auto c = generate_instance(ObstacleKind::UnitDisks, 6, 1, 43, GenStructure::Ring);
    REQUIRE(serialize_instance(a) != serialize_instance(c));
}

TEST_CASE("disk rings are valid and every point is enclosed") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto inst = generate_instance(ObstacleKind::UnitDisks, 6, 2, seed, GenStructure::Ring);
        REQUIRE(inst.obstacles.disks.size() == 6);
        REQUIRE(inst.points.size() == 2);
        REQUIRE_NOTHROW(validate_instance(inst));
        for (const auto& p : inst.points) REQUIRE(enclosed_by_full_set(p, inst.obstacles));
    }
    auto tiny = generate_instance(ObstacleKind::UnitDisks, 3, 1, 7, GenStructure::Ring);
    REQUIRE(enclosed_by_full_set(tiny.points[0], tiny.obstacles));
}

TEST_CASE("segment rings are valid and every point is enclosed") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto inst = generate_instance(ObstacleKind::Segments, 5, 2, seed, GenStructure::Ring);
        REQUIRE(inst.obstacles.segments.size() == 5);
        REQUIRE_NOTHROW(validate_instance(inst));
        for (const auto& p : inst.points) REQUIRE(enclosed_by_full_set(p, inst.obstacles));
    }
}

TEST_CASE("nested structures enclose their points") {
    auto disks = generate_instance(ObstacleKind::UnitDisks, 14, 1, 11, GenStructure::Nested);
    REQUIRE(disks.obstacles.disks.size() == 14);
    REQUIRE(enclosed_by_full_set(disks.points[0], disks.obstacles));

    auto segs = generate_instance(ObstacleKind::Segments, 8, 2, 3, GenStructure::Nested);
    REQUIRE(segs.obstacles.segments.size() == 8);
    for (const auto& p : segs.points) REQUIRE(enclosed_by_full_set(p, segs.obstacles));
}

TEST_CASE("structures with too few obstacles fail fast") {
    REQUIRE_THROWS_AS(generate_instance(ObstacleKind::UnitDisks, 2, 1, 0, GenStructure::Ring),
                      GenerationFailed);
    REQUIRE_THROWS_AS(generate_instance(ObstacleKind::Segments, 5, 1, 0, GenStructure::Nested),
                      GenerationFailed);
    REQUIRE_THROWS_AS(generate_instance(ObstacleKind::UnitDisks, 13, 1, 0, GenStructure::Nested),
                      GenerationFailed);
}

TEST_CASE("random instances pass validation without feasibility promises") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto d = generate_instance(ObstacleKind::UnitDisks, 5, 2, seed, GenStructure::Random);
        REQUIRE(d.obstacles.disks.size() == 5);
        REQUIRE_NOTHROW(validate_instance(d));

        auto s = generate_instance(ObstacleKind::Segments, 6, 2, seed, GenStructure::Random);
        REQUIRE(s.obstacles.segments.size() == 6);
        REQUIRE_NOTHROW(validate_instance(s));
    }
}

TEST_CASE("zero points gives a valid trivial instance") {
    auto inst = generate_instance(ObstacleKind::Segments, 4, 0, 5, GenStructure::Ring);
    REQUIRE(inst.points.empty());
    REQUIRE_NOTHROW(validate_instance(inst));
}
