#include "dpstab/subst.hpp"

#include "dpstab/linalg.hpp"

#include <map>
#include <stdexcept>

namespace dpstab {

GradedSubstitution::GradedSubstitution(const WeightSystem& ws, std::vector<WPoly> images)
    : ws_(ws), images_(std::move(images)), over_R_(true) {
  int n = ws.n();
  if (static_cast<int>(images_.size()) != n)
    throw std::invalid_argument("GradedSubstitution: wrong image count");
  for (int i = 0; i < n; ++i) {
    if (images_[static_cast<size_t>(i)].is_zero())
      throw std::invalid_argument("GradedSubstitution: zero image");
    images_[static_cast<size_t>(i)].check_homogeneous(ws, ws.weight(i));
  }
  // block determinants per weight value
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks[ws.weight(i)].push_back(i);
  for (const auto& [c, idx] : blocks) {
    size_t k = idx.size();
    std::vector<std::vector<TPoly>> m(k, std::vector<TPoly>(k));
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b) {
        Monomial unit(static_cast<size_t>(n), 0);
        unit[static_cast<size_t>(idx[b])] = 1;
        m[a][b] = images_[static_cast<size_t>(idx[a])].coeff(unit);
      }
    TPoly det = tpoly_det(std::move(m));
    if (det.is_zero())
      throw std::invalid_argument("GradedSubstitution: weight block is singular");
    if (det.val() != 0) over_R_ = false;
  }
}

GradedSubstitution GradedSubstitution::identity(const WeightSystem& ws) {
  std::vector<WPoly> images;
  for (int i = 0; i < ws.n(); ++i) {
    Monomial m(static_cast<size_t>(ws.n()), 0);
    m[static_cast<size_t>(i)] = 1;
    images.push_back(WPoly::monomial(ws.n(), m, TPoly(1)));
  }
  return GradedSubstitution(ws, std::move(images));
}

GradedSubstitution GradedSubstitution::elementary(const WeightSystem& ws, int var,
                                                  const WPoly& g) {
  GradedSubstitution id = identity(ws);
  std::vector<WPoly> images = id.images_;
  images[static_cast<size_t>(var)] += g;
  return GradedSubstitution(ws, std::move(images));
}

bool GradedSubstitution::is_identity() const {
  for (int i = 0; i < ws_.n(); ++i) {
    const WPoly& im = images_[static_cast<size_t>(i)];
    if (im.term_count() != 1) return false;
    const auto& [m, c] = *im.terms().begin();
    if (total_degree(m) != 1 || m[static_cast<size_t>(i)] != 1 || c != TPoly(1)) return false;
  }
  return true;
}

WPoly GradedSubstitution::apply(const WPoly& f) const {
  int n = ws_.n();
  WPoly result(n);
  // memoized powers of each image
  std::vector<std::vector<WPoly>> powers(static_cast<size_t>(n));
  Monomial zero(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    powers[static_cast<size_t>(i)].push_back(WPoly::monomial(n, zero, TPoly(1)));
  for (const auto& [m, c] : f.terms()) {
    WPoly term = WPoly::monomial(n, zero, c);
    for (int i = 0; i < n; ++i) {
      int e = m[static_cast<size_t>(i)];
      auto& pw = powers[static_cast<size_t>(i)];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images_[static_cast<size_t>(i)]);
      if (e > 0) term = term * pw[static_cast<size_t>(e)];
    }
    result += term;
  }
  return result;
}

GradedSubstitution compose(const GradedSubstitution& outer, const GradedSubstitution& inner) {
  std::vector<WPoly> images;
  images.reserve(inner.images_.size());
  for (const WPoly& im : inner.images_) images.push_back(outer.apply(im));
  return GradedSubstitution(outer.ws_, std::move(images));
}

}  // namespace dpstab
