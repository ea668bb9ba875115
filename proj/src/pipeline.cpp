#include "cubering/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "cubering/errors.hpp"

namespace cubering {

std::size_t AnalysisReport::q_cells() const { return std::accumulate(q_counts.begin(), q_counts.end(), std::size_t{0}); }
std::size_t AnalysisReport::dq_cells() const {
  return std::accumulate(dq_counts.begin(), dq_counts.end(), std::size_t{0});
}
std::size_t AnalysisReport::k_cells() const { return std::accumulate(k_counts.begin(), k_counts.end(), std::size_t{0}); }

bool AnalysisReport::verified() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

const Verdict* AnalysisReport::first_failure() const {
  for (const auto& v : verdicts) {
    if (!v.passed) return &v;
  }
  return nullptr;
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
  void lap(std::string stage) {
    const auto now = std::chrono::steady_clock::now();
    out_.push_back({std::move(stage), std::chrono::duration<double, std::milli>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  std::chrono::steady_clock::time_point start_;
};

void add_model_verdicts(AnalysisReport& r, const std::string& stage, const ChainComplex& cx, const ATModel& m) {
  const auto rep = verify_atmodel(cx, m);
  for (const auto& check : rep.checks) {
    std::string detail;
    if (!check.passed && check.first_violation) detail = "cell " + std::to_string(check.first_violation->value);
    r.verdicts.push_back({stage, check.name, check.passed, detail});
  }
}

void add_boundary_verdict(AnalysisReport& r, const std::string& stage, const ChainComplex& cx) {
  const auto bad = cx.find_boundary_violation();
  r.verdicts.push_back({stage, "d d = 0", !bad, bad ? "cell " + std::to_string(bad->value) : ""});
}

std::string betti_text(const BettiNumbers& b) {
  std::ostringstream os;
  os << b;
  return os.str();
}

}  // namespace

AnalysisReport analyze(const Picture3D& input, const PipelineOptions& options, PipelineState* state) {
  AnalysisReport r;
  Stopwatch clock(r.timing);

  PipelineState local;
  PipelineState& s = state ? *state : local;
  s.picture = options.complement ? complement_picture(input, options.padding) : input;
  r.dims = {s.picture.size_x(), s.picture.size_y(), s.picture.size_z()};
  s.foreground = s.picture.foreground();
  r.voxels = s.foreground.size();
  if (s.foreground.empty()) throw PreconditionError("the foreground is empty");
  if (const auto n = foreground_components(s.picture); n != 1) {
    throw PreconditionError("the foreground has " + std::to_string(n) + " connected components, expected 1");
  }
  clock.lap("picture");

  s.q = complex_from_voxels(s.foreground);
  s.dq = boundary_subcomplex(s.q, s.foreground);
  r.q_counts = s.q.chains().counts();
  r.dq_counts = s.dq.chains().counts();
  clock.lap("complex");

  s.model_dq = atmodel_boundary(s.dq.chains(), spanning_forest(s.dq.chains()));
  clock.lap("boundary model");

  s.k = face_reduction(s.q.chains(), s.dq.chains());
  r.k_counts = s.k.counts();
  clock.lap("face reduction");

  auto ext = atmodel_extend(s.model_dq, s.dq.chains(), s.k);
  s.model_k = std::move(ext.model);
  s.g_recomputed = r.g_recomputed = ext.g_recomputed;
  if (options.corrupt_phi) {
    for (auto& p : s.model_k.phi) {
      if (!p.empty()) {
        p = Chain(p.dim());
        break;
      }
    }
  }
  clock.lap("extension");

  r.betti.values = s.model_k.generator_counts(s.k);
  for (CellId h : s.model_k.generators) {
    r.generators.push_back({h, s.k.dim(h), s.q.cube(h), s.model_k.g_of(h).size()});
  }
  r.cup = cup_matrix(s.k, s.model_k);
  r.cavities = cavities(s.picture, s.dq);
  {
    std::vector<Chain> surfaces;
    for (const auto& c : r.cavities) surfaces.push_back(c.surface);
    r.cavity_entries = evaluate_on_cycles(s.k, s.model_k, r.cup, surfaces);
    SparseColumns columns(surfaces.size());
    for (std::size_t row = 0; row < r.cavity_entries.size(); ++row) {
      for (std::size_t c = 0; c < surfaces.size(); ++c) {
        if (r.cavity_entries[row][c]) columns[c].push_back(static_cast<std::uint32_t>(row));
      }
    }
    r.cavity_rank = rank_z2(columns, r.cavity_entries.size());
  }
  clock.lap("cup products");

  if (options.cycles) {
    for (CellId h : s.model_k.generators) r.cycles.push_back(cycle_to_voxels(s.model_k, h, s.dq, s.foreground));
    clock.lap("cycles");
  }

  if (options.verify) {
    add_boundary_verdict(r, "Q", s.q.chains());
    add_boundary_verdict(r, "dQ", s.dq.chains());
    add_boundary_verdict(r, "K", s.k);
    add_model_verdicts(r, "dQ", s.dq.chains(), s.model_dq);
    add_model_verdicts(r, "K", s.k, s.model_k);
    bool in_dq = true;
    for (const auto& [h, gh] : s.model_k.g) {
      for (CellId c : gh) in_dq = in_dq && s.dq.contains(c);
    }
    r.verdicts.push_back({"K", "g supported in dQ", in_dq, ""});
    clock.lap("verification");
  }

  if (options.oracle) {
    const BettiNumbers bq = betti_oracle(s.q.chains());
    const BettiNumbers bk = betti_oracle(s.k);
    r.verdicts.push_back({"oracle", "betti(Q) = |H|", bq == r.betti, betti_text(bq) + " vs " + betti_text(r.betti)});
    r.verdicts.push_back({"oracle", "betti(K) = betti(Q)", bk == bq, betti_text(bk) + " vs " + betti_text(bq)});
    const BettiNumbers bdq = betti_oracle(s.dq.chains());
    BettiNumbers hdq;
    hdq.values = s.model_dq.generator_counts(s.dq.chains());
    r.verdicts.push_back({"oracle", "betti(dQ) = |H(dQ)|", bdq == hdq, betti_text(bdq) + " vs " + betti_text(hdq)});
    const RankReport rank = equivalence_check_rank(s.q.chains());
    r.verdicts.push_back({"oracle", "K_Q rank and betti", rank.ok() && rank.rank_q == r.cup.rank,
                          "rank " + std::to_string(rank.rank_q) + "/" + std::to_string(rank.rank_k) + "/" +
                              std::to_string(r.cup.rank) + ", betti " + betti_text(rank.betti_q) + " vs " +
                              betti_text(rank.betti_k)});
    clock.lap("oracle");
  }
  return r;
}

}  // namespace cubering
