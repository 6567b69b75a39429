#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcl/curves.hpp"

namespace tcl {

struct FixedCurve {
  std::string label;  // Cremona curve label, e.g. "90c3"
  int conductor = 0;
  CurveModel model;
  std::string source;

  // isogeny class part of the label ("90c")
  std::string class_label() const;
};

struct FixedClassDataset {
  int version = 1;
  std::string source_sha256;
  std::vector<FixedCurve> curves;

  std::vector<const FixedCurve*> in_class(std::string_view class_label) const;
};

// text format:
//   # tcl-fixed-classes v1
//   # source-sha256 <hex>
//   <label> <conductor> <a1> <a2> <a3> <a4> <a6> <source>
FixedClassDataset parse_fixed_classes(std::string_view text);
std::string write_fixed_classes(const FixedClassDataset& ds);

// embedded copy, or the file named by TCL_FIXED_CLASSES when set
const FixedClassDataset& embedded_fixed_classes();

// isogeny-class label of a dataset curve Q-isomorphic to m
std::optional<std::string> identify_in_dataset(const CurveModel& m);

}  // namespace tcl
