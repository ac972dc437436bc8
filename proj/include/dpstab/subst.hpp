// Grading-preserving polynomial coordinate changes.
#pragma once

#include "dpstab/wpoly.hpp"

#include <vector>

namespace dpstab {

// Substitution x_i := image[i], with image[i] weighted-homogeneous of the
// same degree as x_i. Invertibility is decided from the weight-block linear
// parts: lower-weight variables cannot contribute linearly to higher-weight
// images, so the substitution is a graded automorphism iff every block
// determinant is nonzero, and is defined over R iff each has t-valuation 0.
class GradedSubstitution {
public:
  GradedSubstitution(const WeightSystem& ws, std::vector<WPoly> images);

  static GradedSubstitution identity(const WeightSystem& ws);
  // x_i := x_i + g, everything else fixed
  static GradedSubstitution elementary(const WeightSystem& ws, int var, const WPoly& g);

  const WPoly& image(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<WPoly>& images() const { return images_; }
  bool over_R() const { return over_R_; }
  bool is_identity() const;

  WPoly apply(const WPoly& f) const;

  // compose(s, u): substitute(f, compose(s, u)) == substitute(substitute(f, u), s)
  friend GradedSubstitution compose(const GradedSubstitution& outer,
                                    const GradedSubstitution& inner);

private:
  WeightSystem ws_;
  std::vector<WPoly> images_;
  bool over_R_;
};

}  // namespace dpstab
