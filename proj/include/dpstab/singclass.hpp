// Local models at points of the total space and recognition of terminal
// singularities: Du Val / compound Du Val tests and the mu_2 / mu_3
// hyperquotient tables.
#pragma once

#include "dpstab/hmk.hpp"
#include "dpstab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpstab {

struct LocalModel {
  std::vector<std::string> var_names;  // local analytic coordinates (t included or eliminated)
  std::vector<int> mu_weights;         // weight of the mu_k action on each coordinate
  int k = 1;                           // quotient order: 1, 2 or 3
  Series f;                            // local equation, truncated
};

enum class SingClass {
  Smooth,
  CA,
  CD,
  CE,  // E-type without a pinned subtype
  CE6,
  CE7,
  CE8,
  QuotientTerminal,
  NonIsolated,
  NotCDV,
  Unknown,
};

std::string sing_class_name(SingClass c);

struct SingularityReport {
  SingClass cls = SingClass::Unknown;
  std::string case_id;  // table row for quotient-terminal points
  std::string evidence;
  int jet_order = 0;
};

// Local equation at a rational point of the central fiber, in the chart of
// the given coordinate. For complete intersections one variable (possibly t)
// is eliminated by order-by-order solving along a quasi-smooth direction.
// Quotient data is attached when the chart coordinate has weight 2 or 3 and
// the point is the chart origin.
LocalModel local_model(const AnyFamily& fam, const std::vector<Rational>& point, int chart_var,
                       int trunc = 12);

int quadratic_rank(const LocalModel& lm);

SingularityReport classify_cDV(const LocalModel& lm);
SingularityReport classify_hyperquotient(const LocalModel& lm);
SingularityReport classify_local(const LocalModel& lm);  // dispatch on k

enum class CubicShape { ThreeDistinct, TwoDistinct, Cube };

// Shape of a nonzero binary cubic a x^3 + b x^2 y + c x y^2 + d y^3 over the
// algebraic closure, decided by the discriminant and the Hessian covariant.
CubicShape binary_cubic_shape(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d);

// If the coordinate curve {vars in `vanish` = 0, t = 0} lies in the singular
// locus of the total space, return it as a witness description.
std::optional<std::string> nonisolated_witness(const AnyFamily& fam,
                                               const std::vector<int>& vanish,
                                               const std::vector<std::string>& names);

// All coordinate-curve candidates: vanishing sets of n-2 coordinates.
std::vector<std::vector<int>> coordinate_curves(int n);

struct PointReport {
  std::vector<Rational> point;
  int chart = -1;
  int quotient_k = 1;
  std::vector<int> quotient_weights;
  SingularityReport report;
  std::string error;  // nonempty when the model could not be built
};

// Classifies the family at a rational point of the central fiber; the chart
// is chosen automatically unless given.
PointReport classify_point(const AnyFamily& fam, const std::vector<Rational>& point,
                           std::optional<int> chart = std::nullopt, int trunc = 12);

// Points with a single nonzero coordinate that lie on the central fiber.
std::vector<std::vector<Rational>> coordinate_points_on_fiber(const AnyFamily& fam);

}  // namespace dpstab
