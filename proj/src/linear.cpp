#include "plankton/linear.hpp"

#include <cmath>
#include <utility>

namespace plankton {

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Attractive: return "attractive";
    case Stability::Repelling: return "repelling";
    case Stability::Saddle: return "saddle";
    case Stability::Nonhyperbolic: return "nonhyperbolic";
  }
  return "?";
}

std::string_view to_string(RootLocation loc) {
  switch (loc) {
    case RootLocation::BothInside: return "both-inside";
    case RootLocation::OneAtMinusOne: return "one-at-minus-one";
    case RootLocation::InsideOutside: return "inside-outside";
    case RootLocation::BothOutside: return "both-outside";
    case RootLocation::ConjugateOnCircle: return "conjugate-on-circle";
    case RootLocation::DoubleMinusOne: return "double-minus-one";
    case RootLocation::RootAtOneOtherInside: return "root-at-one/other-inside";
    case RootLocation::RootAtOneOtherOnCircle:
      return "root-at-one/other-on-circle";
    case RootLocation::RootAtOneOtherOutside:
      return "root-at-one/other-outside";
    case RootLocation::AboveOneBelowMinusOne:
      return "above-one/below-minus-one";
    case RootLocation::AboveOneAtMinusOne: return "above-one/at-minus-one";
    case RootLocation::AboveOneOtherInside: return "above-one/other-inside";
  }
  return "?";
}

Stability stability_of(RootLocation loc) {
  switch (loc) {
    case RootLocation::BothInside: return Stability::Attractive;
    case RootLocation::BothOutside:
    case RootLocation::AboveOneBelowMinusOne: return Stability::Repelling;
    case RootLocation::InsideOutside:
    case RootLocation::AboveOneOtherInside: return Stability::Saddle;
    default: return Stability::Nonhyperbolic;
  }
}

Mat2 jacobian_map(const State& s, const Params& p) {
  return Mat2{2.0 - 2.0 * s.x - s.y, -s.x,
              p.gamma * s.y, p.gamma * s.x + 1.0 - p.r};
}

ComplexPair eigen2(const Mat2& m) {
  const double t = m.trace();
  const double d = m.det();
  const double disc = t * t - 4.0 * d;
  if (disc >= 0.0) {
    // Avoid cancellation: take the larger-magnitude root first, then d / it.
    const double sq = std::sqrt(disc);
    const double q = t >= 0.0 ? 0.5 * (t + sq) : 0.5 * (t - sq);
    double l1 = q;
    double l2 = q != 0.0 ? d / q : 0.0;
    if (l1 > l2) std::swap(l1, l2);
    return ComplexPair{Complex(l1, 0.0), Complex(l2, 0.0)};
  }
  const double re = 0.5 * t;
  const double im = 0.5 * std::sqrt(-disc);
  return ComplexPair{Complex(re, -im), Complex(re, im)};
}

RootLocation jury_classify(double B, double C) {
  constexpr double eps = kUnitCircleTol;
  const double f_plus = 1.0 + B + C;
  const double f_minus = 1.0 - B + C;
  const auto is_zero = [](double v) { return std::abs(v) <= eps; };

  if (is_zero(f_plus)) {
    const double ac = std::abs(C);
    if (std::abs(ac - 1.0) <= eps) return RootLocation::RootAtOneOtherOnCircle;
    return ac < 1.0 ? RootLocation::RootAtOneOtherInside
                    : RootLocation::RootAtOneOtherOutside;
  }
  if (f_plus > 0.0) {
    if (is_zero(f_minus)) {
      return std::abs(B - 2.0) <= eps ? RootLocation::DoubleMinusOne
                                      : RootLocation::OneAtMinusOne;
    }
    if (std::abs(C - 1.0) <= eps && B > -2.0 && B < 2.0) {
      return RootLocation::ConjugateOnCircle;
    }
    if (f_minus < 0.0) return RootLocation::InsideOutside;
    return C < 1.0 ? RootLocation::BothInside : RootLocation::BothOutside;
  }
  if (is_zero(f_minus)) return RootLocation::AboveOneAtMinusOne;
  return f_minus < 0.0 ? RootLocation::AboveOneBelowMinusOne
                       : RootLocation::AboveOneOtherInside;
}

CharPoly coexistence_char_poly(const Params& p) {
  return CharPoly{-(2.0 - p.r / p.gamma),
                  (p.gamma - p.r) * (1.0 + p.r) / p.gamma};
}

namespace {

Stability from_moduli(double m1, double m2) {
  const auto on = [](double m) { return std::abs(m - 1.0) <= kUnitCircleTol; };
  if (on(m1) || on(m2)) return Stability::Nonhyperbolic;
  if (m1 < 1.0 && m2 < 1.0) return Stability::Attractive;
  if (m1 > 1.0 && m2 > 1.0) return Stability::Repelling;
  return Stability::Saddle;
}

}  // namespace

Classification classify_fixed_point(const FixedPoint& fp, const Params& p) {
  Classification out{};
  switch (fp.label) {
    case FixedPointLabel::E0: {
      out.evidence = eigen2(Mat2{2.0, 0.0, 0.0, 1.0 - p.r});
      break;
    }
    case FixedPointLabel::E1: {
      out.evidence = eigen2(Mat2{0.0, -1.0, 0.0, p.gamma + 1.0 - p.r});
      break;
    }
    case FixedPointLabel::E2: {
      if (!(p.gamma > p.r)) {
        throw Error(ErrorKind::DegenerateInput,
                    "E2 requested but gamma <= r");
      }
      const CharPoly cp = coexistence_char_poly(p);
      out.evidence = eigen2(jacobian_map(coexistence_point(p), p));
      out.moduli = {std::abs(out.evidence.lambda1),
                    std::abs(out.evidence.lambda2)};
      out.kind = stability_of(jury_classify(cp.B, cp.C));
      return out;
    }
  }
  out.moduli = {std::abs(out.evidence.lambda1), std::abs(out.evidence.lambda2)};
  out.kind = from_moduli(out.moduli[0], out.moduli[1]);
  return out;
}

}  // namespace plankton
