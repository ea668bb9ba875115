#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cubering/errors.hpp"
#include "cubering/picture.hpp"
#include "cubering/pipeline.hpp"
#include "cubering/shapes.hpp"

using namespace cubering;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_picture(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool adjacent26(const Point3& a, const Point3& b) {
  const int dx = std::abs(a.x - b.x);
  const int dy = std::abs(a.y - b.y);
  const int dz = std::abs(a.z - b.z);
  return std::max({dx, dy, dz}) == 1;
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("picture storage") {
  Picture3D p(3, 2, 2);
  CHECK(p.volume() == 12);
  CHECK(p.foreground_count() == 0);
  p.set({2, 1, 1});
  p.set({0, 0, 0});
  CHECK(p.get({2, 1, 1}));
  CHECK_FALSE(p.get({1, 1, 1}));
  CHECK_FALSE(p.get({3, 0, 0}));
  CHECK_FALSE(p.get({-1, 0, 0}));
  CHECK(p.foreground().size() == 2);
  p.set({2, 1, 1}, false);
  CHECK(p.foreground_count() == 1);
  CHECK_THROWS_AS(p.set({5, 0, 0}), UsageError);
}

TEST_CASE("grid form round trip") {
  const std::string text = "3 2 2\n101\n000\n\n010\n111\n";
  const Picture3D p = parse_picture(text);
  CHECK(p.size_x() == 3);
  CHECK(p.size_y() == 2);
  CHECK(p.size_z() == 2);
  CHECK(p.foreground_count() == 6);
  CHECK(p.get({0, 0, 0}));
  CHECK(p.get({2, 0, 0}));
  CHECK(p.get({1, 0, 1}));
  CHECK(p.get({0, 1, 1}));
  CHECK(serialize_picture(p) == text);
  CHECK(parse_picture(serialize_picture(shapes::linked_rings())) == shapes::linked_rings());
}

TEST_CASE("coordinate form") {
  const Picture3D p = parse_picture("dims 4 4 4\n0 0 0\n3 3 3\n1 2 3\n");
  CHECK(p.size_x() == 4);
  CHECK(p.foreground_count() == 3);
  CHECK(p.get({1, 2, 3}));
  CHECK(parse_picture("dims 2 2 2\n") == Picture3D(2, 2, 2));
}

TEST_CASE("malformed pictures") {
  CHECK(parse_error("2 1 1\n11") .find("missing trailing newline") != std::string::npos);
  CHECK(parse_error("2 1 1\n1x\n").find("illegal character") != std::string::npos);
  CHECK(parse_error("2 1 1\n1x\n").find("line 2, column 2") != std::string::npos);
  CHECK(parse_error("2 1 1\n111\n").find("size mismatch") != std::string::npos);
  CHECK(parse_error("2 2 1\n11\n").find("size mismatch") != std::string::npos);
  CHECK(parse_error("1 1 1\n1\n1\n").find("size mismatch") != std::string::npos);
  CHECK(parse_error("1 1 2\n1\n1\n").find("blank line") != std::string::npos);
  CHECK(parse_error("0 1 1\n\n").find("positive") != std::string::npos);
  CHECK(parse_error("1 1\n1\n").find("three dimensions") != std::string::npos);
  CHECK(parse_error("dims 2 2 2\n0 0 2\n").find("coordinate out of range") != std::string::npos);
  CHECK(parse_error("dims 2 2 2\n0 0 1\n0 0 1\n").find("duplicate voxel") != std::string::npos);
  CHECK(parse_error("dims 2 2 2\n0 0\n").find("three coordinates") != std::string::npos);
  CHECK(parse_error("").find("empty") != std::string::npos);
  CHECK(parse_error("100000 100000 100000\n").find("too large") != std::string::npos);
}

TEST_CASE("26-connected components") {
  Picture3D p(5, 5, 5);
  p.set({0, 0, 0});
  p.set({1, 1, 1});
  CHECK(foreground_components(p) == 1);
  p.set({2, 0, 2});
  CHECK(foreground_components(p) == 1);
  p.set({4, 4, 4});
  CHECK(foreground_components(p) == 2);
  p.set({3, 3, 3});
  p.set({2, 2, 2});
  CHECK(foreground_components(p) == 1);
  CHECK(foreground_components(Picture3D(2, 2, 2)) == 0);
  CHECK(foreground_components(shapes::unlinked_rings()) == 2);
  CHECK(foreground_components(shapes::linked_rings()) == 2);
}

TEST_CASE("complement picture") {
  Picture3D p(5, 5, 5);
  p.set({2, 2, 2});
  Point3 origin;
  const Picture3D c = complement_picture(p, 1, &origin);
  CHECK(c.size_x() == 3);
  CHECK(c.size_y() == 3);
  CHECK(c.size_z() == 3);
  CHECK(origin == Point3{1, 1, 1});
  CHECK(c.foreground_count() == 26);
  CHECK_FALSE(c.get({1, 1, 1}));

  const Picture3D c0 = complement_picture(p, 0);
  CHECK(c0.volume() == 1);
  CHECK(c0.foreground_count() == 0);

  const Picture3D all = complement_picture(Picture3D(2, 1, 1), 3);
  CHECK(all.size_x() == 8);
  CHECK(all.volume() == 8 * 7 * 7);
  CHECK(all.foreground_count() == all.volume());
  CHECK_THROWS_AS(complement_picture(p, -1), UsageError);
}

TEST_CASE("cavities and their surfaces") {
  const Picture3D hollow = shapes::box_minus_center(3);
  const VoxelSet b = hollow.foreground();
  const CubicalComplex dq = boundary_subcomplex(complex_from_voxels(b), b);
  const auto cav = cavities(hollow, dq);
  REQUIRE(cav.size() == 1);
  CHECK(cav[0].seed == Point3{1, 1, 1});
  CHECK(cav[0].voxels == 1);
  CHECK(cav[0].surface.size() == 6);
  CHECK(dq.chains().boundary_of(cav[0].surface).empty());

  const Picture3D torus = shapes::solid_torus();
  const VoxelSet tb = torus.foreground();
  CHECK(cavities(torus, boundary_subcomplex(complex_from_voxels(tb), tb)).empty());

  const Picture3D rings = complement_picture(shapes::linked_rings(), 1);
  const VoxelSet rb = rings.foreground();
  const auto rc = cavities(rings, boundary_subcomplex(complex_from_voxels(rb), rb));
  CHECK(rc.size() == 2);
}

TEST_CASE("boundary voxels") {
  const VoxelSet b = shapes::box(3, 3, 3).foreground();
  CHECK(is_boundary_voxel(b, {0, 1, 1}));
  CHECK_FALSE(is_boundary_voxel(b, {1, 1, 1}));
  CHECK_FALSE(is_boundary_voxel(b, {5, 5, 5}));
}

TEST_CASE("simple cycles of a figure eight") {
  const auto t = shapes::abstract_torus();
  const auto& cx = t.chains();
  // two loops through vertex 0
  Chain eight(1);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}) eight.toggle(*t.edge(a, b));
  const auto loops = simple_cycles(cx, eight);
  REQUIRE(loops.size() == 2);
  CHECK(loops[0].size() == 3);
  CHECK(loops[1].size() == 3);
  CHECK_THROWS_AS(simple_cycles(cx, Chain(1, {*t.edge(0, 1)})), UsageError);
}

TEST_CASE("voxel cycles of generators") {
  for (const Picture3D& pic : {shapes::solid_torus(), shapes::box_minus_center(3),
                               complement_picture(shapes::linked_rings(), 1)}) {
    PipelineOptions opt;
    opt.cycles = true;
    PipelineState state;
    const AnalysisReport r = analyze(pic, opt, &state);
    REQUIRE(r.cycles.size() == state.model_k.generators.size());
    for (const VoxelCycle& c : r.cycles) {
      CHECK_FALSE(c.voxels.empty());
      for (const Point3& v : c.voxels) CHECK(state.foreground.contains(v));
      if (c.dim == 1) {
        CHECK_FALSE(c.loops.empty());
        for (const auto& loop : c.loops) {
          for (std::size_t i = 0; i < loop.size(); ++i) {
            const Point3& a = loop[i];
            const Point3& b = loop[(i + 1) % loop.size()];
            CHECK((a == b || adjacent26(a, b)));
          }
        }
      }
      if (c.dim == 2) {
        for (const Point3& v : c.voxels) CHECK(is_boundary_voxel(state.foreground, v));
      }
    }
  }
}

TEST_CASE("cycle projection rejects non-generators") {
  const Picture3D pic = shapes::solid_torus();
  PipelineState state;
  analyze(pic, {}, &state);
  const CellId not_generator = state.dq.chains().cells(2).front();
  REQUIRE_FALSE(state.model_k.is_generator(not_generator));
  CHECK_THROWS_AS(cycle_to_voxels(state.model_k, not_generator, state.dq, state.foreground), UsageError);
}

TEST_CASE("shipped fixtures match the generators") {
  const std::filesystem::path dir = CUBERING_FIXTURE_DIR;
  const std::pair<const char*, Picture3D> fixtures[] = {
      {"single_voxel.txt", shapes::box(1, 1, 1)},
      {"block_3.txt", shapes::box(3, 3, 3)},
      {"block_5.txt", shapes::box(5, 5, 5)},
      {"box_minus_center.txt", shapes::box_minus_center(3)},
      {"solid_torus.txt", shapes::solid_torus()},
      {"linked_rings.txt", shapes::linked_rings()},
      {"unlinked_rings.txt", shapes::unlinked_rings()},
      {"ring_chain_3.txt", shapes::ring_chain(3)},
  };
  for (const auto& [name, picture] : fixtures) {
    CAPTURE(name);
    const std::string text = read(dir / name);
    REQUIRE_FALSE(text.empty());
    CHECK(parse_picture(text) == picture);
    CHECK(serialize_picture(picture) == text);
  }
}

TEST_CASE("random pictures") {
  std::mt19937_64 rng(1);
  const Picture3D p = shapes::random_picture(rng, 4, 0.5);
  CHECK(p.volume() == 64);
  std::mt19937_64 again(1);
  CHECK(shapes::random_picture(again, 4, 0.5) == p);
  CHECK(shapes::random_picture(rng, 3, 0.0).foreground_count() == 0);
  CHECK(shapes::random_picture(rng, 3, 1.0).foreground_count() == 27);
}
