#pragma once

#include <array>
#include <complex>
#include <string_view>

#include "plankton/model.hpp"

namespace plankton {

using Complex = std::complex<double>;

struct Mat2 {
  double a11, a12;
  double a21, a22;

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
};

// Roots of a real quadratic. Either both real (ascending) or a conjugate pair
// with imag(lambda1) <= 0.
struct ComplexPair {
  Complex lambda1;
  Complex lambda2;

  bool is_real() const {
    return lambda1.imag() == 0.0 && lambda2.imag() == 0.0;
  }
};

// Hyperbolicity band: | |lambda| - 1 | <= kUnitCircleTol counts as on the circle.
inline constexpr double kUnitCircleTol = 1e-9;

enum class Stability { Attractive, Repelling, Saddle, Nonhyperbolic };

std::string_view to_string(Stability s);

struct Classification {
  Stability kind;
  ComplexPair evidence;
  std::array<double, 2> moduli;
};

// Location of the roots of lambda^2 + B lambda + C relative to the unit
// circle, one enumerator per case of the Jury-type root-location lemma.
enum class RootLocation {
  BothInside,              // F(1)>0, F(-1)>0, C<1
  OneAtMinusOne,           // F(1)>0, F(-1)=0, B!=2
  InsideOutside,           // F(1)>0, F(-1)<0
  BothOutside,             // F(1)>0, F(-1)>0, C>1
  ConjugateOnCircle,       // -2<B<2, C=1
  DoubleMinusOne,          // F(-1)=0, B=2
  RootAtOneOtherInside,    // F(1)=0, |C|<1
  RootAtOneOtherOnCircle,  // F(1)=0, |C|=1
  RootAtOneOtherOutside,   // F(1)=0, |C|>1
  AboveOneBelowMinusOne,   // F(1)<0, F(-1)<0
  AboveOneAtMinusOne,      // F(1)<0, F(-1)=0
  AboveOneOtherInside,     // F(1)<0, F(-1)>0
};

std::string_view to_string(RootLocation loc);

// Verdict implied by a root location.
Stability stability_of(RootLocation loc);

Mat2 jacobian_map(const State& s, const Params& p);

ComplexPair eigen2(const Mat2& m);

// Equalities (F(+-1) = 0, C = 1, B = 2) are decided within kUnitCircleTol.
RootLocation jury_classify(double B, double C);

// Classification against the unit circle. E0/E1 use their explicit
// eigenvalues; E2 goes through jury_classify on its characteristic polynomial.
// Throws DegenerateInput for E2 when gamma <= r.
Classification classify_fixed_point(const FixedPoint& fp, const Params& p);

// Characteristic polynomial lambda^2 + B lambda + C at E2 in closed form.
struct CharPoly {
  double B;
  double C;

  double at(double lambda) const { return lambda * lambda + B * lambda + C; }
};

CharPoly coexistence_char_poly(const Params& p);

}  // namespace plankton
