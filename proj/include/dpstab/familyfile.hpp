// Line-oriented family file format:
//   weights: 3,3,2,1,1
//   vars: w,s,z,x,y
//   degree: 6
//   degree_H: 3
//   F = w^2 + z^3 + x^6 + y^6
//   H = s
// '#' starts a comment.
#pragma once

#include "dpstab/hmk.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpstab {

struct FamilyFile {
  WeightSystem ws;
  std::vector<std::string> names;
  int degree;
  std::optional<int> degree_H;
  AnyFamily family;
};

FamilyFile parse_family_file(const std::string& text);
FamilyFile load_family_file(const std::string& path);
std::string write_family_file(const AnyFamily& fam, const std::vector<std::string>& names);

}  // namespace dpstab
