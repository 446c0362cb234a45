#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pvzeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::runtime_error("rational is not an integer: " + r.str());
  return numerator(r).convert_to<long>();
}

// "num/den" with the slash omitted for integers; the stable text form used by
// the CLI and the test fixtures.
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define PVZETA_ERROR(name)                                        \
  struct name : error {                                           \
    explicit name(const std::string& w) : error(#name ": " + w) {} \
  }

PVZETA_ERROR(InvalidRank);
PVZETA_ERROR(NotARoot);
PVZETA_ERROR(OutOfScopeGrading);
PVZETA_ERROR(NoChain);
PVZETA_ERROR(VariantUnavailable);
PVZETA_ERROR(UnknownFamily);
PVZETA_ERROR(OutOfScopeFamily);
PVZETA_ERROR(ClassNotInField);
PVZETA_ERROR(FieldNotPadic);
PVZETA_ERROR(MissingBaseCase);
PVZETA_ERROR(NormalizationDrift);
PVZETA_ERROR(CaseNotCovered);
PVZETA_ERROR(UnknownIdentity);
PVZETA_ERROR(EmptyOrbit);

#undef PVZETA_ERROR

}  // namespace pvzeta
