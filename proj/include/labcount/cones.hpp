#pragma once

#include "labcount/labelings.hpp"
#include "labcount/linalg.hpp"
#include "labcount/multigraph.hpp"
#include "labcount/numeric.hpp"
#include "labcount/quasipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace labcount {

enum class Grading { index, maxlabel };

/// Homogeneous system: equality rows row.x = 0, inequality rows row.x >= 0.
/// maxlabel grading: variables z_0..z_{q-1} plus k, with 0 <= z_e <= k and
/// equal sums inside each block; index grading: z_e >= 0 and equal sums, the
/// grading being the common sum of the designated (first) block.
struct ConstraintSystem {
  std::vector<std::string> variables;
  RatMatrix equalities;
  RatMatrix inequalities;
  Grading grading = Grading::maxlabel;
  int k_var = -1;           // maxlabel: index of the k variable
  RatRow index_row;         // common-sum functional of the designated block (may be empty)
};

ConstraintSystem build_system(const Multigraph& g, const BlockSpec& blocks, Grading grading);

/// Primitive integer generator of an extreme ray, with annotations.
struct Ray {
  std::vector<Int> coords;
  Int max_label = 0;          // max over label entries (k excluded)
  std::optional<Int> index;   // common sum of the designated block, when defined
};

/// Complete, lexicographically sorted list of extreme-ray generators by the
/// double description method, each verified feasible, primitive and extreme.
std::vector<Ray> extreme_rays(const ConstraintSystem& sys, bool force = false);

struct PolytopeFacts {
  int dimension = 0;
  std::vector<int> implicit_equalities;    // inequality row indices tight on the whole polytope
  std::vector<std::vector<Rat>> vertices;  // label-space coordinates of the k=1 section
  Int denominator_lcm = 1;
};

/// Vertex enumeration of the k=1 section of a maxlabel system.
PolytopeFacts polytope_facts(const ConstraintSystem& sys, bool force = false);

/// Lattice points of the t-th dilate with every equality and implicit
/// equality exact and every non-implicit inequality strict.
Int count_relative_interior(const Multigraph& g, const BlockSpec& blocks, long long t,
                            bool force = false);

struct ReciprocityReport {
  bool fit_ok = false;
  int dimension = 0;
  int period = 0;
  struct Entry {
    long long t = 0;
    Int interior;
    Rat reciprocal;              // (-1)^dim * qp(-t)
    bool pass = false;
    Int positive_count;          // positive-label count at k = t-1
    bool interior_equals_positive = false;
  };
  std::vector<Entry> entries;
  bool all_pass = false;
  bool positive_matches_everywhere = false;
};

/// Fits the closed count M(k), then checks (-1)^dim qp(-t) against the
/// relative-interior count for 1 <= t <= k_max+1, flagging where the interior
/// count differs from the positive-label count.
ReciprocityReport verify_reciprocity(const Multigraph& g, const BlockSpec& blocks,
                                     long long k_max, bool force = false);

struct CfBoundsReport {
  int ray_count = 0;
  Int max_label = 0;
  std::optional<Int> max_index;
  std::vector<Ray> label_witnesses;
  std::vector<Ray> index_witnesses;
};

/// Measured extreme-ray bounds with witnesses; a report, never an assertion.
CfBoundsReport check_cf_bounds(const Multigraph& g, const BlockSpec& blocks, Grading grading,
                               bool force = false);

/// True iff every spanning subgraph whose components are each a loop, an
/// edge, or a cycle of length >= 3 has all such cycles of even length
/// (vacuously true when no such spanning subgraph exists).
bool check_spanning_condition(const Multigraph& g, bool force = false);

}  // namespace labcount
