#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubering/complex.hpp"

namespace cubering {

/// Algebraic-topological model (H, f, g, phi) of a chain complex over Z/2.
///
/// `generators` (H) is a graded subset of the cells; `f` projects every cell
/// onto a chain of generators of the same dimension, `g` sends each generator
/// to a representative cycle, and `phi` is a chain homotopy raising
/// dimension by one. `f` and `phi` are indexed by cell id.
struct ATModel {
  std::vector<CellId> generators;
  std::vector<Chain> f;
  std::vector<Chain> phi;
  std::map<CellId, Chain> g;

  bool is_generator(CellId c) const;
  std::vector<CellId> generators_of_dim(const ChainComplex& cx, int dim) const;
  /// Generator counts per dimension.
  std::array<std::size_t, kMaxDim + 1> generator_counts(const ChainComplex& cx) const;

  const Chain& f_of(CellId c) const { return f.at(c.value); }
  const Chain& phi_of(CellId c) const { return phi.at(c.value); }
  const Chain& g_of(CellId c) const;

  Chain apply_f(const Chain& c) const;
  Chain apply_phi(const Chain& c) const;
  /// g extended linearly to chains of generators.
  Chain apply_g(const Chain& c) const;
};

/// Outcome of one identity over all cells.
struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::optional<CellId> first_violation;
};

struct VerificationReport {
  /// Well-formedness followed by the seven identities
  /// fg = id, phi d + d phi = id + gf, f d = 0, d g = 0, phi phi = 0, f phi = 0, phi g = 0.
  std::vector<AxiomCheck> checks;
  /// f(a) = a and a in g(a) for every generator; holds for models built by the
  /// incremental algorithms but is not one of the axioms.
  AxiomCheck generator_property;

  bool ok() const;
  const AxiomCheck* first_failure() const;
};

VerificationReport verify_atmodel(const ChainComplex& cx, const ATModel& m);

/// Incremental AT-model construction over cells sorted by (dimension, id).
/// A cell whose f-boundary is zero becomes a generator; otherwise it
/// eliminates the youngest (largest id) generator in its f-boundary.
ATModel atmodel_incremental(const ChainComplex& cx);

/// Rooted spanning forest of the 1-skeleton, one tree per component.
struct SpanningForest {
  std::vector<CellId> roots;
  /// Indexed by vertex id; the edge to the parent, empty for roots.
  std::vector<std::optional<CellId>> parent_edge;
};

/// Breadth-first forest rooted at the smallest vertex of each component;
/// neighbours are visited in increasing edge id.
SpanningForest spanning_forest(const ChainComplex& cx);

/// AT-model of a 2-dimensional boundary complex dQ from a spanning forest of
/// its 1-skeleton: tree contraction, square/edge pairing, killing of 1-classes
/// by the remaining squares (smallest edge of f d(c) is removed), then
/// g(s) = s + phi d(s). Throws UsageError on a 3-cell or an invalid forest.
ATModel atmodel_boundary(const ChainComplex& dq, const SpanningForest& forest);

/// Face reduction of Q relative to dQ: cancels pairs (s, s') of interior
/// cells with s' in d(s), rewriting d(c) := d(c + s) for every c with s' in d(c)
/// and dropping s from the boundaries of its cofaces. Interior cells are
/// scanned by decreasing dimension then increasing id; the partner is the
/// smallest interior facet. Cells of dQ are never modified.
ChainComplex face_reduction(const ChainComplex& q, const ChainComplex& dq);

struct ExtensionResult {
  ATModel model;
  /// Set when carrying g over from dQ failed verification and g was
  /// recomputed as g(s) = s + phi d(s).
  bool g_recomputed = false;
};

/// Extends an AT-model of dQ to K (a complex containing dQ unchanged) by
/// adding the cells of K \ dQ in order of increasing dimension. Each added
/// cell removes the smallest generator of its f-boundary. Throws
/// IntegrityError if some added cell has a zero f-boundary.
ExtensionResult atmodel_extend(const ATModel& mdq, const ChainComplex& dq, const ChainComplex& k);

/// Split of a q-cell `alpha` into two new q-cells along a new (q-1)-cell e.
/// `half1` and `half2` are d(alpha1) + e and d(alpha2) + e; they must be
/// disjoint, nonempty, sum to d(alpha) and have equal boundaries.
struct Subdivision {
  CellId alpha;
  Chain half1;
  Chain half2;
};

struct SubdivisionCells {
  CellId e;
  CellId alpha1;
  CellId alpha2;
};

/// Applies the subdivision to P and transfers the AT-model in place. The new
/// cells are appended to P. Requires f(a) = a and a in g(a) for a in H.
SubdivisionCells subdivide_in_place(ChainComplex& p, ATModel& m, const Subdivision& s);

/// Functional form: returns (P', m') and leaves the inputs untouched.
std::pair<ChainComplex, ATModel> subdivide_atmodel(const ChainComplex& p, const ATModel& m,
                                                   const Subdivision& s,
                                                   SubdivisionCells* created = nullptr);

/// Value of the cocycle sigma* f on a chain: sum over cells mu of <sigma, f(mu)>.
bool cocycle_eval(CellId sigma, const ATModel& m, const ChainComplex& cx, const Chain& c);

}  // namespace cubering
