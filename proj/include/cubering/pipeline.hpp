#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubering/at_model.hpp"
#include "cubering/cubical.hpp"
#include "cubering/cup.hpp"
#include "cubering/homology.hpp"
#include "cubering/picture.hpp"

namespace cubering {

struct PipelineOptions {
  /// Analyze the complement of the picture instead of the picture.
  bool complement = false;
  int padding = 1;
  /// Run betti_oracle and the K_Q rank comparison.
  bool oracle = false;
  /// Run verify_atmodel and the boundary checks at every stage.
  bool verify = false;
  bool cycles = false;
  /// Test hook: clears one phi entry of the final model before verification.
  bool corrupt_phi = false;
};

/// Intermediate objects of one run, kept for callers that need more than the report.
struct PipelineState {
  Picture3D picture;
  VoxelSet foreground;
  CubicalComplex q;
  CubicalComplex dq;
  ChainComplex k;
  ATModel model_dq;
  ATModel model_k;
  bool g_recomputed = false;
};

struct Verdict {
  std::string stage;
  std::string check;
  bool passed = true;
  std::string detail;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct GeneratorInfo {
  CellId id;
  int dim = 0;
  ElementaryCube cube;
  /// Number of cells in g(id).
  std::size_t cycle_size = 0;
};

struct AnalysisReport {
  std::array<int, 3> dims{};
  std::size_t voxels = 0;
  std::array<std::size_t, kMaxDim + 1> q_counts{};
  std::array<std::size_t, kMaxDim + 1> dq_counts{};
  std::array<std::size_t, kMaxDim + 1> k_counts{};
  BettiNumbers betti;
  std::vector<GeneratorInfo> generators;
  CupMatrix cup;
  /// Bounded background components and the products evaluated on their
  /// enclosing surfaces (rows as in `cup`).
  std::vector<Cavity> cavities;
  std::vector<std::vector<std::uint8_t>> cavity_entries;
  std::size_t cavity_rank = 0;
  std::vector<VoxelCycle> cycles;
  std::vector<Verdict> verdicts;
  bool g_recomputed = false;
  std::vector<StageTiming> timing;

  std::size_t q_cells() const;
  std::size_t dq_cells() const;
  std::size_t k_cells() const;
  bool verified() const;
  const Verdict* first_failure() const;
};

/// Runs the whole analysis: Q and dQ from the picture, the boundary model,
/// face reduction, extension to K, cup products and the requested checks.
/// Throws PreconditionError when the analyzed foreground is empty or not
/// 26-connected.
AnalysisReport analyze(const Picture3D& picture, const PipelineOptions& options = {},
                       PipelineState* state = nullptr);

}  // namespace cubering
