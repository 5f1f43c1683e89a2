#include "pmlopt/profiles.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string_view>

#include "pmlopt/errors.hpp"

namespace pmlopt {

namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

void check_closed(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw DomainError("sigma: tau must lie in [0,1]");
}

void check_half_open(double tau) {
  if (!(tau >= 0.0 && tau < 1.0))
    throw DomainError("sigma: tau must lie in [0,1) for the rminus family");
}

void check_p(int p) {
  if (p < 2) throw DomainError("profile order p must be >= 2");
}

}  // namespace

double sigma(const ProfileClass& profile, double tau) {
  return std::visit(
      Overload{
          [&](const Power& f) {
            check_closed(tau);
            check_p(f.p);
            return std::abs(f.S) * std::pow(tau, f.p);
          },
          [&](const RationalPlus& f) {
            check_closed(tau);
            check_p(f.p);
            if (f.a.size() != static_cast<size_t>(f.p - 1))
              throw LengthMismatch("rplus: coefficient count must be p-1");
            double num = 0.0;
            double tk = tau * tau;
            for (double c : f.a) {
              num += std::abs(c) * tk;
              tk *= tau;
            }
            return num / (1.0 + tau);
          },
          [&](const RationalMinus& f) {
            check_half_open(tau);
            check_p(f.p);
            const double t2 = tau * tau;
            double num = std::abs(f.a2) * t2;
            if (f.p > 2) num += std::abs(f.ap) * std::pow(tau, f.p);
            return num / (1.0 - tau);
          },
          [&](const Legacy& f) {
            check_closed(tau);
            const double t2 = tau * tau;
            return std::abs(f.S) * t2 * tau / (1.0 + t2);
          },
      },
      profile);
}

double tau_of(double x_offset_from_interface, double layer_thickness) {
  if (!(layer_thickness > 0.0)) throw DomainError("tau_of: layer thickness must be positive");
  if (!(x_offset_from_interface <= 0.0 && x_offset_from_interface >= -layer_thickness))
    throw DomainError("tau_of: offset must lie in [-thickness, 0]");
  return -x_offset_from_interface / layer_thickness;
}

CoefficientVector to_vector(const ProfileClass& profile) {
  return std::visit(
      Overload{
          [](const Power& f) {
            check_p(f.p);
            return CoefficientVector{{f.S}, {Family::Power, f.p}};
          },
          [](const RationalPlus& f) {
            check_p(f.p);
            if (f.a.size() != static_cast<size_t>(f.p - 1))
              throw LengthMismatch("rplus: coefficient count must be p-1");
            return CoefficientVector{f.a, {Family::RationalPlus, f.p}};
          },
          [](const RationalMinus& f) {
            check_p(f.p);
            if (f.p == 2) return CoefficientVector{{f.a2}, {Family::RationalMinus, 2}};
            return CoefficientVector{{f.a2, f.ap}, {Family::RationalMinus, f.p}};
          },
          [](const Legacy& f) {
            return CoefficientVector{{f.S}, {Family::Legacy, 2}};
          },
      },
      profile);
}

ProfileClass from_vector(const CoefficientVector& v) {
  check_p(v.tag.p);
  const size_t len = v.values.size();
  switch (v.tag.family) {
    case Family::Power:
      if (len != 1) throw LengthMismatch("power: expected exactly one coefficient");
      return Power{v.values[0], v.tag.p};
    case Family::RationalPlus:
      if (len != static_cast<size_t>(v.tag.p - 1))
        throw LengthMismatch("rplus: expected p-1 coefficients");
      return RationalPlus{v.values, v.tag.p};
    case Family::RationalMinus:
      if (v.tag.p == 2) {
        if (len != 1) throw LengthMismatch("rminus: expected one coefficient when p = 2");
        return RationalMinus{v.values[0], 0.0, 2};
      }
      if (len != 2) throw LengthMismatch("rminus: expected two coefficients when p > 2");
      return RationalMinus{v.values[0], v.values[1], v.tag.p};
    case Family::Legacy:
      if (len != 1) throw LengthMismatch("legacy: expected exactly one coefficient");
      return Legacy{v.values[0]};
  }
  throw DomainError("from_vector: unknown family");
}

namespace {

// Tiny cursor-based parser for the profile grammar; every failure names the
// offending token.
struct Cursor {
  std::string_view s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }

  std::string_view rest() const { return s.substr(pos); }

  void expect(std::string_view lit) {
    if (s.substr(pos, lit.size()) != lit)
      throw ParseError("profile spec: expected '" + std::string(lit) + "' at '" +
                       std::string(rest().substr(0, 16)) + "'");
    pos += lit.size();
  }

  bool consume(std::string_view lit) {
    if (s.substr(pos, lit.size()) != lit) return false;
    pos += lit.size();
    return true;
  }

  int parse_int() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc{})
      throw ParseError("profile spec: expected integer at '" +
                       std::string(rest().substr(0, 16)) + "'");
    pos = static_cast<size_t>(ptr - s.data());
    return value;
  }

  double parse_float() {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc{})
      throw ParseError("profile spec: expected number at '" +
                       std::string(rest().substr(0, 16)) + "'");
    pos = static_cast<size_t>(ptr - s.data());
    return value;
  }

  void expect_end() {
    if (!done())
      throw ParseError("profile spec: trailing characters at '" +
                       std::string(rest().substr(0, 16)) + "'");
  }
};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ProfileClass parse_profile(const std::string& text) {
  Cursor c{text};
  if (c.consume("power:")) {
    c.expect("p=");
    int p = c.parse_int();
    c.expect(",S=");
    double S = c.parse_float();
    c.expect_end();
    if (p < 2) throw ParseError("profile spec: power requires p >= 2");
    return Power{S, p};
  }
  if (c.consume("rplus:")) {
    c.expect("p=");
    int p = c.parse_int();
    c.expect(",a=[");
    if (p < 2) throw ParseError("profile spec: rplus requires p >= 2");
    std::vector<double> a;
    a.push_back(c.parse_float());
    while (c.consume(",")) a.push_back(c.parse_float());
    c.expect("]");
    c.expect_end();
    if (a.size() != static_cast<size_t>(p - 1))
      throw ParseError("profile spec: rplus expects p-1 coefficients, got " +
                       std::to_string(a.size()));
    return RationalPlus{std::move(a), p};
  }
  if (c.consume("rminus:")) {
    c.expect("p=");
    int p = c.parse_int();
    c.expect(",a2=");
    double a2 = c.parse_float();
    c.expect(",ap=");
    double ap = c.parse_float();
    c.expect_end();
    if (p < 2) throw ParseError("profile spec: rminus requires p >= 2");
    return RationalMinus{a2, ap, p};
  }
  if (c.consume("legacy:")) {
    c.expect("S=");
    double S = c.parse_float();
    c.expect_end();
    return Legacy{S};
  }
  throw ParseError("profile spec: unknown family at '" + text.substr(0, 16) + "'");
}

std::string format_profile(const ProfileClass& profile) {
  return std::visit(
      Overload{
          [](const Power& f) {
            return "power:p=" + std::to_string(f.p) + ",S=" + fmt_double(f.S);
          },
          [](const RationalPlus& f) {
            std::string out = "rplus:p=" + std::to_string(f.p) + ",a=[";
            for (size_t i = 0; i < f.a.size(); ++i) {
              if (i) out += ",";
              out += fmt_double(f.a[i]);
            }
            return out + "]";
          },
          [](const RationalMinus& f) {
            return "rminus:p=" + std::to_string(f.p) + ",a2=" + fmt_double(f.a2) +
                   ",ap=" + fmt_double(f.ap);
          },
          [](const Legacy& f) { return "legacy:S=" + fmt_double(f.S); },
      },
      profile);
}

}  // namespace pmlopt
