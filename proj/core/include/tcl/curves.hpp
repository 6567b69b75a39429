#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcl/families.hpp"
#include "tcl/int128.hpp"

namespace tcl {

struct CurveModel {
  i128 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  std::string label;
  std::optional<Representation> rep;
};

struct Invariants {
  i128 b2 = 0, b4 = 0, b6 = 0, b8 = 0;
  i128 c4 = 0, c6 = 0, disc = 0;
  // sign of v_l(j) for l = 2, 3 (+1 when j = 0)
  int j_sign2 = 0, j_sign3 = 0;
};

Invariants weierstrass_invariants(const CurveModel& m);

// curve names of a family row: "a1".."a4", "b1", "b2"
std::vector<std::string> family_curve_names(std::string_view family);
// index of the curve used as the isogeny-class representative ("2" for 18q.4.a -> a2)
std::string instance_curve_index(std::string_view family, std::string_view letter);

CurveModel instantiate_family_curve(const Representation& rep, std::string_view which);

// discriminant as printed next to the coefficients
i128 stated_discriminant(const Representation& rep, std::string_view which);

enum class SquareKind { square, minus3_square, other };
std::string square_kind_name(SquareKind k);

struct SquareClass {
  SquareKind kind = SquareKind::other;
  i128 witness = 0;
};

SquareClass discriminant_square_class(i128 disc);

i128 trace_of_frobenius(const CurveModel& m, std::int64_t ell);

// y^2 = x^3 + u x^2 + v x form with a rational 2-torsion point at (0,0)
struct TwoTorsionForm {
  i128 u = 0, v = 0;
  int disc_scale_log2 = 0;  // Delta(new) = 2^scale * Delta(old)
};

// completes the square (x -> x/4 scaling when a1 or a3 is odd) and moves an
// integral 2-torsion point to the origin
std::optional<TwoTorsionForm> to_two_torsion_form(const CurveModel& m);

// model with a1 = a3 = 0 from completing the square; Delta scales by 2^12
CurveModel complete_square(const CurveModel& m);

bool four_divisibility_predicate(i128 u, i128 v, std::int64_t ell);

CurveModel quadratic_twist(const CurveModel& m, i128 t);

std::string describe(const CurveModel& m);

}  // namespace tcl
