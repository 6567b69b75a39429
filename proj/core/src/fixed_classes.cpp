#include "tcl/fixed_classes.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace tcl {

namespace detail {
extern const std::string_view embedded_fixed_classes_text;
}

std::string FixedCurve::class_label() const {
  std::size_t i = 0;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
  while (i < label.size() && std::isalpha(static_cast<unsigned char>(label[i]))) ++i;
  return label.substr(0, i);
}

std::vector<const FixedCurve*> FixedClassDataset::in_class(std::string_view class_label) const {
  std::vector<const FixedCurve*> out;
  for (auto& c : curves)
    if (c.class_label() == class_label) out.push_back(&c);
  return out;
}

FixedClassDataset parse_fixed_classes(std::string_view text) {
  FixedClassDataset ds;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  auto fail = [&](const std::string& why) {
    throw error(errc::bad_dataset, "fixed classes line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, key, val;
      ls >> hash >> key >> val;
      if (key == "tcl-fixed-classes") {
        if (val != "v1") fail("unsupported version " + val);
        header = true;
      } else if (key == "source-sha256") {
        ds.source_sha256 = val;
      }
      continue;
    }
    if (!header) fail("missing version header");
    FixedCurve c;
    std::string a[5];
    if (!(ls >> c.label >> c.conductor >> a[0] >> a[1] >> a[2] >> a[3] >> a[4] >> c.source))
      fail("expected 8 fields");
    try {
      c.model.a1 = parse_i128(a[0]);
      c.model.a2 = parse_i128(a[1]);
      c.model.a3 = parse_i128(a[2]);
      c.model.a4 = parse_i128(a[3]);
      c.model.a6 = parse_i128(a[4]);
    } catch (const error& e) {
      fail(e.what());
    }
    c.model.label = c.label;
    ds.curves.push_back(std::move(c));
  }
  if (!header) throw error(errc::bad_dataset, "fixed classes: missing version header");
  return ds;
}

std::string write_fixed_classes(const FixedClassDataset& ds) {
  std::ostringstream out;
  out << "# tcl-fixed-classes v" << ds.version << "\n";
  if (!ds.source_sha256.empty()) out << "# source-sha256 " << ds.source_sha256 << "\n";
  for (auto& c : ds.curves) {
    out << c.label << ' ' << c.conductor << ' ' << to_string(c.model.a1) << ' ' << to_string(c.model.a2) << ' '
        << to_string(c.model.a3) << ' ' << to_string(c.model.a4) << ' ' << to_string(c.model.a6) << ' '
        << c.source << "\n";
  }
  return out.str();
}

const FixedClassDataset& embedded_fixed_classes() {
  static const FixedClassDataset ds = [] {
    if (const char* path = std::getenv("TCL_FIXED_CLASSES"); path && *path) {
      std::ifstream f(path);
      if (!f) throw error(errc::bad_dataset, std::string("cannot open TCL_FIXED_CLASSES file ") + path);
      std::stringstream buf;
      buf << f.rdbuf();
      return parse_fixed_classes(buf.str());
    }
    return parse_fixed_classes(detail::embedded_fixed_classes_text);
  }();
  return ds;
}

std::optional<std::string> identify_in_dataset(const CurveModel& m) {
  Invariants im = weierstrass_invariants(m);
  for (auto& c : embedded_fixed_classes().curves) {
    Invariants ic = weierstrass_invariants(c.model);
    for (i128 u : {1, 2, 3, 4, 6, 12}) {
      auto u4 = try_pow(u, 4), u6 = try_pow(u, 6);
      if (!u4 || !u6) continue;
      auto c4 = try_mul(ic.c4, *u4), c6 = try_mul(ic.c6, *u6);
      if (c4 && c6 && *c4 == im.c4 && *c6 == im.c6) return c.class_label();
    }
  }
  return std::nullopt;
}

}  // namespace tcl
