// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance 3 5        run the listed ones
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cubering/at_model.hpp"
#include "cubering/cubical.hpp"
#include "cubering/cup.hpp"
#include "cubering/homology.hpp"
#include "cubering/pipeline.hpp"
#include "cubering/shapes.hpp"

using namespace cubering;

namespace {

// Limits fixed by the criteria.
constexpr double kTorusSeconds = 1.0;
constexpr double kHollowCubeSeconds = 1.0;
constexpr double kRingSeconds = 10.0;
constexpr double kEquivalenceSeconds = 30.0;
constexpr double kAxiomSeconds = 60.0;
constexpr double kReductionRatio = 0.2;
constexpr int kRandom2Complexes = 60;
constexpr int kRandomPictures = 120;
constexpr int kRandomPictureSide = 4;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool passed = false;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

BettiNumbers counts(const ChainComplex& cx, const ATModel& m) {
  BettiNumbers b;
  b.values = m.generator_counts(cx);
  return b;
}

Outcome torus_cup_product() {
  Timer t;
  const auto q = shapes::abstract_torus();
  const auto& cx = q.chains();
  const ATModel m = atmodel_incremental(cx);
  const CellId v0 = q.vertex(0);
  const CellId b1 = *q.edge(0, 2);
  const CellId b2 = *q.edge(0, 4);
  const CellId c = cx.cells(2).back();
  const std::vector<CellId> expected{v0, b1, b2, c};

  std::ostringstream why;
  bool ok = true;
  if (m.generators != expected) {
    ok = false;
    why << "H differs; ";
  }
  const BettiNumbers b = counts(cx, m);
  if (b != BettiNumbers{{1, 2, 1, 0}}) {
    ok = false;
    why << "betti " << b << "; ";
  }
  if (!check_P1(cx) || !verify_atmodel(cx, m).ok()) {
    ok = false;
    why << "model invalid; ";
  }
  if (ok) {
    const Chain product = cup_cubical(cx, m, b1, b2);
    const CupTerms terms = cup_terms(cx, m, c, b1, b2);
    const std::vector<std::pair<bool, bool>> want{{true, true}, {false, false}};
    if (product != Chain(2, {c})) {
      ok = false;
      why << "product " << product << "; ";
    }
    if (terms.terms != want) {
      ok = false;
      why << "evaluation on c is not 1*1 + 0*0; ";
    }
    if (cup_matrix(cx, m).rank != 1) {
      ok = false;
      why << "rank; ";
    }
  }
  const double s = t.seconds();
  if (s >= kTorusSeconds) ok = false;
  why << "H = {v0,(v0,v2),(v0,v4),(v0,v2,v4,v8)}, betti " << b
      << ", (v0,v2) cup (v0,v4) = (v0,v2,v4,v8) via 1*1 + 0*0, " << s << " s";
  return {ok, why.str()};
}

Outcome hollow_cube() {
  Timer t;
  const VoxelSet voxel({Point3{0, 0, 0}});
  const CubicalComplex dq = boundary_subcomplex(voxel);
  const auto& cx = dq.chains();
  const ATModel m = atmodel_boundary(cx, spanning_forest(cx));
  const BettiNumbers b = counts(cx, m);
  const auto h2 = m.generators_of_dim(cx, 2);
  bool ok = b == BettiNumbers{{1, 0, 1, 0}} && verify_atmodel(cx, m).ok() && h2.size() == 1;
  const Chain all_squares = Chain::from_cells(2, cx.cells(2));
  if (ok) ok = m.g_of(h2.front()) == all_squares && all_squares.size() == 6;
  const double s = t.seconds();
  if (s >= kHollowCubeSeconds) ok = false;
  std::ostringstream why;
  why << "|H| = " << b << ", g(2-generator) has " << (h2.empty() ? 0 : m.g_of(h2.front()).size())
      << " of 6 squares, " << s << " s";
  return {ok, why.str()};
}

Outcome linked_rings() {
  PipelineOptions opt;
  opt.complement = true;
  opt.padding = 1;

  Timer tu;
  const AnalysisReport unlinked = analyze(shapes::unlinked_rings(), opt);
  const double su = tu.seconds();
  Timer tl;
  const AnalysisReport linked = analyze(shapes::linked_rings(), opt);
  const double sl = tl.seconds();

  bool ok = unlinked.cup.rank == 0 && linked.cup.rank == 1 && unlinked.cavity_rank == 0 && linked.cavity_rank == 1;
  ok = ok && su < kRingSeconds && sl < kRingSeconds;
  ok = ok && linked.betti == BettiNumbers{{1, 2, 2, 0}} && unlinked.betti == BettiNumbers{{1, 2, 2, 0}};

  // Products are also tabulated against the two cavities; the one nonzero
  // product must be the mixed pair and must hit both cavities.
  std::size_t nonzero = 0;
  bool mixed_both = false;
  for (std::size_t row = 0; row < linked.cup.rows.size(); ++row) {
    const auto& bits = linked.cavity_entries[row];
    bool any = false;
    bool all = !bits.empty();
    for (auto bit : bits) {
      any = any || bit;
      all = all && bit;
    }
    if (!any) continue;
    ++nonzero;
    const auto [i, j] = linked.cup.rows[row];
    mixed_both = i != j && all && bits.size() == 2;
  }
  std::size_t nonzero_generator_rows = 0;
  for (std::size_t row = 0; row < linked.cup.rows.size(); ++row) {
    bool any = false;
    for (auto bit : linked.cup.entries[row]) any = any || bit;
    if (any) {
      ++nonzero_generator_rows;
      const auto [i, j] = linked.cup.rows[row];
      if (i == j) ok = false;
    }
  }
  ok = ok && nonzero == 1 && mixed_both && nonzero_generator_rows == 1;

  std::ostringstream why;
  why << "rank unlinked " << unlinked.cup.rank << ", linked " << linked.cup.rank << "; linked mixed product on cavities (";
  for (std::size_t row = 0; row < linked.cup.rows.size(); ++row) {
    const auto [i, j] = linked.cup.rows[row];
    if (i == j) continue;
    for (std::size_t k = 0; k < linked.cavity_entries[row].size(); ++k) {
      why << (k ? "," : "") << int(linked.cavity_entries[row][k]);
    }
  }
  why << "), " << su << " s / " << sl << " s";
  return {ok, why.str()};
}

Outcome subdivision_equivalence() {
  Timer t;
  std::mt19937_64 rng(kSeed);
  std::size_t complexes = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::size_t nonzero = 0;
  std::size_t failed_steps = 0;

  auto check = [&](const ChainComplex& cx) {
    const ATModel m = atmodel_incremental(cx);
    const auto rep = equivalence_check_2d(cx, m);
    ++complexes;
    comparisons += rep.comparisons;
    mismatches += rep.mismatches.size();
    failed_steps += rep.failed_verifications;
    for (CellId a : m.generators_of_dim(cx, 1)) {
      for (CellId b : m.generators_of_dim(cx, 1)) nonzero += cup_cubical(cx, m, a, b).size();
    }
  };

  check(shapes::abstract_torus().chains());
  std::size_t random = 0;
  while (random < static_cast<std::size_t>(kRandom2Complexes)) {
    const int kind = static_cast<int>(random % 4);
    if (kind == 0) {
      // whole tori with shuffled cell order, so H_2 is nonzero
      const int m = 3 + static_cast<int>(rng() % 2);
      const int n = 3 + static_cast<int>(rng() % 3);
      const auto all = static_cast<std::size_t>(m * n);
      check(shapes::random_grid_complex(rng, m, n, true, all, all).chains());
    } else if (kind == 1) {
      check(shapes::random_grid_complex(rng, 3 + static_cast<int>(rng() % 3), 4, true, 20).chains());
    } else if (kind == 2) {
      check(shapes::random_grid_complex(rng, 4, 5, false, 12).chains());
    } else {
      check(shapes::random_box_surface(rng, 2, 2, 1, random % 8 == 3 ? 1.0 : 0.8).chains());
    }
    ++random;
  }
  const double s = t.seconds();
  const bool ok = mismatches == 0 && failed_steps == 0 && random >= 50 && s < kEquivalenceSeconds && nonzero > 0;
  std::ostringstream why;
  why << complexes << " complexes (torus + " << random << " random), " << comparisons << " comparisons, "
      << mismatches << " mismatches, " << nonzero << " nonzero products, " << s << " s";
  return {ok, why.str()};
}

struct ModelTally {
  std::size_t models = 0;
  std::size_t axiom_failures = 0;
  std::size_t betti_failures = 0;
  std::string first;

  void record(const std::string& what, const ChainComplex& cx, const ATModel& m) {
    ++models;
    if (!verify_atmodel(cx, m).ok()) {
      ++axiom_failures;
      if (first.empty()) first = what;
    }
    if (counts(cx, m) != betti_oracle(cx)) {
      ++betti_failures;
      if (first.empty()) first = what + " (betti)";
    }
  }
};

std::vector<Picture3D> fixture_pictures() {
  return {shapes::box(1, 1, 1),     shapes::box(3, 3, 3),   shapes::box(5, 5, 5),
          shapes::box_minus_center(3), shapes::solid_torus(), shapes::linked_rings(),
          shapes::unlinked_rings(), shapes::ring_chain(3)};
}

void models_of_picture(ModelTally& tally, const std::string& name, const VoxelSet& b, bool subdivide) {
  const CubicalComplex q = complex_from_voxels(b);
  const CubicalComplex dq = boundary_subcomplex(q, b);
  tally.record(name + " incremental Q", q.chains(), atmodel_incremental(q.chains()));
  const ATModel mdq_inc = atmodel_incremental(dq.chains());
  tally.record(name + " incremental dQ", dq.chains(), mdq_inc);
  const ATModel mdq = atmodel_boundary(dq.chains(), spanning_forest(dq.chains()));
  tally.record(name + " boundary", dq.chains(), mdq);
  const ChainComplex k = face_reduction(q.chains(), dq.chains());
  const auto ext = atmodel_extend(mdq, dq.chains(), k);
  tally.record(name + " extension", k, ext.model);
  if (subdivide) {
    // Split every square of dQ in turn and check each transferred model.
    ChainComplex p = dq.chains();
    ATModel m = mdq_inc;
    for (CellId sq : dq.chains().cells(2)) {
      const auto v = p.vertices(sq);
      Chain a(1), c(1);
      for (CellId e : p.boundary(sq)) {
        const auto ends = p.vertices(e);
        const bool first_half = (ends[0] == v[0] && ends[1] == v[1]) || (ends[0] == v[1] && ends[1] == v[3]);
        (first_half ? a : c).toggle(e);
      }
      subdivide_in_place(p, m, {sq, a, c});
      tally.record(name + " subdivision", p, m);
    }
  }
}

Outcome axiom_suite() {
  Timer t;
  ModelTally tally;
  for (const auto& pic : fixture_pictures()) {
    const VoxelSet b = pic.foreground();
    models_of_picture(tally, "fixture", b, b.size() <= 27);
  }
  // 2-complexes and every single subdivision step on them.
  std::mt19937_64 rng(kSeed + 1);
  std::size_t steps = 0;
  std::size_t step_failures = 0;
  for (int i = 0; i < 20; ++i) {
    const auto q = i == 0 ? shapes::abstract_torus() : shapes::random_grid_complex(rng, 4, 4, i % 2 == 0, 16);
    const ATModel m = atmodel_incremental(q.chains());
    tally.record("2-complex incremental", q.chains(), m);
    const auto rep = equivalence_check_2d(q.chains(), m, true);
    steps += rep.subdivisions;
    step_failures += rep.failed_verifications;
  }
  std::size_t pictures = 0;
  for (int i = 0; i < kRandomPictures; ++i) {
    const double fill = 0.3 + 0.5 * static_cast<double>(i % 5) / 4.0;
    const Picture3D pic = shapes::random_picture(rng, 1 + i % kRandomPictureSide, fill);
    const VoxelSet b = pic.foreground();
    if (b.empty()) continue;
    ++pictures;
    models_of_picture(tally, "random", b, i % 10 == 0);
  }
  const double s = t.seconds();
  const bool ok = tally.axiom_failures == 0 && step_failures == 0 && pictures >= 100 && s < kAxiomSeconds;
  std::ostringstream why;
  why << tally.models << " models + " << steps << " subdivision steps on 2-complexes, " << pictures
      << " random pictures, " << tally.axiom_failures + step_failures << " failures";
  if (!tally.first.empty()) why << " (first: " << tally.first << ")";
  why << ", " << s << " s";
  return {ok, why.str()};
}

Outcome oracle_agreement() {
  Timer t;
  ModelTally tally;
  for (const auto& pic : fixture_pictures()) models_of_picture(tally, "fixture", pic.foreground(), false);
  std::mt19937_64 rng(kSeed + 1);
  for (int i = 0; i < 20; ++i) {
    const auto q = i == 0 ? shapes::abstract_torus() : shapes::random_grid_complex(rng, 4, 4, i % 2 == 0, 16);
    tally.record("2-complex", q.chains(), atmodel_incremental(q.chains()));
  }
  for (int i = 0; i < kRandomPictures; ++i) {
    const double fill = 0.3 + 0.5 * static_cast<double>(i % 5) / 4.0;
    const Picture3D pic = shapes::random_picture(rng, 1 + i % kRandomPictureSide, fill);
    if (pic.foreground_count() == 0) continue;
    models_of_picture(tally, "random", pic.foreground(), false);
  }

  std::size_t rank_checks = 0;
  std::size_t rank_failures = 0;
  for (const auto& pic : fixture_pictures()) {
    if (pic.size_x() > 5 || pic.size_y() > 5 || pic.size_z() > 5) continue;
    const CubicalComplex q = complex_from_voxels(pic.foreground());
    ++rank_checks;
    if (!equivalence_check_rank(q.chains()).ok()) ++rank_failures;
  }
  const bool ok = tally.betti_failures == 0 && rank_failures == 0;
  std::ostringstream why;
  why << tally.models << " models against the rank oracle, " << tally.betti_failures << " disagreements; "
      << rank_checks << " fixtures through K_Q, " << rank_failures << " rank/betti failures, " << t.seconds() << " s";
  return {ok, why.str()};
}

Outcome face_reduction_effect() {
  const CubicalComplex q = complex_from_voxels(shapes::box(5, 5, 5).foreground());
  const CubicalComplex dq = boundary_subcomplex(q, shapes::box(5, 5, 5).foreground());
  const ChainComplex k = face_reduction(q.chains(), dq.chains());
  const double limit = kReductionRatio * static_cast<double>(q.size());
  const bool betti_same = betti_oracle(k) == betti_oracle(q.chains());
  const bool ok = static_cast<double>(k.size()) < limit && betti_same;
  std::ostringstream why;
  why << "|Q| = " << q.size() << ", |dQ| = " << dq.size() << ", |K| = " << k.size() << ", limit " << limit
      << ", betti " << (betti_same ? "preserved" : "changed");
  if (!ok) why << "; K contains dQ, so |K| >= " << dq.size() << " exceeds the limit";
  return {ok, why.str()};
}

Outcome ring_chains() {
  PipelineOptions opt;
  opt.complement = true;
  opt.oracle = true;
  bool ok = true;
  std::ostringstream why;
  for (int n : {2, 3, 4}) {
    PipelineState state;
    const AnalysisReport r = analyze(shapes::ring_chain(n), opt, &state);
    const BettiNumbers want{{1, static_cast<std::size_t>(n), static_cast<std::size_t>(n), 0}};
    const BettiNumbers oracle = betti_oracle(state.q.chains());
    const RankReport rank = equivalence_check_rank(state.q.chains());
    const bool good = r.betti == want && oracle == want && r.verified() && rank.ok() &&
                      r.cup.rank == static_cast<std::size_t>(n - 1) && rank.rank_k == r.cup.rank &&
                      r.cavity_rank == r.cup.rank;
    ok = ok && good;
    why << n << " rings: betti " << r.betti << " (oracle " << oracle << "), rank " << r.cup.rank << " (K_Q "
        << rank.rank_k << "); ";
  }
  return {ok, why.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"torus cup product", torus_cup_product},
      {"hollow cube boundary model", hollow_cube},
      {"linked ring discrimination", linked_rings},
      {"cubical/simplicial equivalence", subdivision_equivalence},
      {"AT-model axiom suite", axiom_suite},
      {"oracle agreement", oracle_agreement},
      {"face reduction effectiveness", face_reduction_effect},
      {"ring chain substitute", ring_chains},
  };
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << argv[i] << '\n';
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(n - 1));
  }
  if (selected.empty()) {
    for (std::size_t i = 0; i < criteria.size(); ++i) selected.push_back(i);
  }

  int failures = 0;
  for (std::size_t i : selected) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.passed ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
    failures += o.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
