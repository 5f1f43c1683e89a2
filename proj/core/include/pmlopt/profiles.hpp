#pragma once

#include <string>
#include <variant>
#include <vector>

namespace pmlopt {

// Absorption profile families over normalized depth tau in [0,1]:
// tau = 0 at the interface, tau = 1 at the terminating wall. Coefficients
// enter every formula through their absolute values, so sign never matters.
struct Power {
  double S = 0.0;
  int p = 2;
};  // sigma = |S| tau^p

struct RationalPlus {
  std::vector<double> a;  // coefficients of tau^2 .. tau^p, in that order
  int p = 2;
};  // sigma = (sum_k |a_k| tau^k) / (1 + tau)

struct RationalMinus {
  double a2 = 0.0;
  double ap = 0.0;  // ignored when p == 2 (single-parameter degenerate form)
  int p = 2;
};  // sigma = (|a2| tau^2 + |ap| tau^p) / (1 - tau), diverges at the wall

struct Legacy {
  double S = 0.0;
};  // sigma = |S| tau^3 / (1 + tau^2)

using ProfileClass = std::variant<Power, RationalPlus, RationalMinus, Legacy>;

enum class Family { Power, RationalPlus, RationalMinus, Legacy };

struct ClassTag {
  Family family = Family::Power;
  int p = 2;
};

// Flat view of a profile's free coefficients for the optimizer.
struct CoefficientVector {
  std::vector<double> values;
  ClassTag tag;
};

// Evaluate sigma(tau). RationalMinus requires tau in [0,1); the other
// families accept tau in [0,1]. Throws DomainError outside the range.
double sigma(const ProfileClass& profile, double tau);

// Normalized depth of a point inside the layer, measured from the interface:
// x_offset is <= 0 inside the layer, and tau = |x_offset| / layer_thickness.
double tau_of(double x_offset_from_interface, double layer_thickness);

CoefficientVector to_vector(const ProfileClass& profile);
ProfileClass from_vector(const CoefficientVector& v);

// Text grammar accepted by parse_profile (and emitted by format_profile):
//   power:p=<int>,S=<float>
//   rplus:p=<int>,a=[<float>,...]     (length p-1, tau^2 coefficient first)
//   rminus:p=<int>,a2=<float>,ap=<float>
//   legacy:S=<float>
ProfileClass parse_profile(const std::string& text);
std::string format_profile(const ProfileClass& profile);

}  // namespace pmlopt
