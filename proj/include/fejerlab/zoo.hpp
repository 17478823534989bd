#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fejerlab/cone.hpp"
#include "fejerlab/engine.hpp"
#include "fejerlab/projection.hpp"
#include "fejerlab/region.hpp"
#include "fejerlab/sequence.hpp"

namespace fejer {

enum class ExampleId {
  AngularClosure,
  AffineCounter,
  IncreasingDistance,
  L2ShadowFail,
  L2IntNonempty,
  L2NoIneq,
  SegmentLimit,
  AuthorsExample,
  Type1Counter,
  QuasiIndCounter,
};

const std::array<ExampleId, 10>& all_examples();
std::string_view to_string(ExampleId id);
// Throws UnknownExample.
ExampleId parse_example(std::string_view name);

using HighPrecision = boost::multiprecision::cpp_bin_float_50;
using HighPoint = std::array<HighPrecision, 2>;

// The process-wide memoized generator for id.
const Sequence& zoo_sequence(ExampleId id);
Vector generate(ExampleId id, std::size_t n);
// Exact-ish terms of the recursive planar constructions; empty for the others.
std::optional<HighPoint> high_precision_term(ExampleId id, std::size_t n);
// Circle center z_n and the axis point y_n of an arc step (recursive planar ids only).
struct ArcStep {
  HighPoint center;
  HighPoint axis_point;
};
std::optional<ArcStep> high_precision_arc(ExampleId id, std::size_t n);

enum class SeriesVerdict { Summable, Divergent, Inconclusive };
const char* to_string(SeriesVerdict v);
enum class BoundKind { Exact, LowerBound, UpperBound };

struct SupBound {
  double value;
  BoundKind kind;
};

// Analytic comparator for one quasi-Fejer type: a bound on sup_{y in M} eps_n(y)
// and the verdict it supports.
struct SeriesRule {
  std::function<SupBound(std::size_t)> sup;
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  std::string comparator;
};

struct QuasiRules {
  std::optional<SeriesRule> type1;
  std::optional<SeriesRule> type2;
  std::optional<SeriesRule> type3;
};

struct NamedClaim {
  std::string id;
  std::string statement;
};

struct ExampleSpec {
  ExampleId id = ExampleId::AngularClosure;
  std::string title;
  std::string params;
  Region M;
  std::optional<ClosedConvexSet> M_closure;
  Region ri_M;
  std::optional<Vector> limit;
  bool limit_is_estimate = false;
  Region maximal_set;
  std::vector<NamedClaim> expected;
  TailCertificate certificate;
  QuasiRules quasi;
  // cone(Mbar - z) when a limit exists
  std::optional<FinCone> tangent_cone;
  // closed affine hull of M when it has a projection
  std::optional<ClosedConvexSet> affine_hull;
  // points of M used as default samples
  std::vector<Vector> samples;
  bool planar = true;
  // largest coordinate index touched by terms 0..h-1
  std::function<std::size_t(std::size_t)> width;
};

const ExampleSpec& analytic_facts(ExampleId id);
// Throws UnknownExample for unrecognized names.
const ExampleSpec& analytic_facts(std::string_view name);

}  // namespace fejer
