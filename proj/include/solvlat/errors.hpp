#pragma once
#include <stdexcept>
#include <string>

namespace solvlat {

#define SOLVLAT_DEFINE_ERROR(Name)                                            \
  struct Name : std::runtime_error {                                          \
    explicit Name(const std::string& msg)                                     \
        : std::runtime_error(std::string(#Name) + ": " + msg) {}              \
  }

SOLVLAT_DEFINE_ERROR(FieldMismatch);
SOLVLAT_DEFINE_ERROR(DivisionByZero);
SOLVLAT_DEFINE_ERROR(DimensionMismatch);
SOLVLAT_DEFINE_ERROR(NotUnimodular);
SOLVLAT_DEFINE_ERROR(WrongMinimalPolynomial);
SOLVLAT_DEFINE_ERROR(WrongMultiplicities);
SOLVLAT_DEFINE_ERROR(SingularTransform);
SOLVLAT_DEFINE_ERROR(DegenerateEigenbasis);
SOLVLAT_DEFINE_ERROR(NotContaining);
SOLVLAT_DEFINE_ERROR(SingularSystem);
SOLVLAT_DEFINE_ERROR(InvalidBeta);
SOLVLAT_DEFINE_ERROR(InvalidSpec);
SOLVLAT_DEFINE_ERROR(ParseError);

#undef SOLVLAT_DEFINE_ERROR

}  // namespace solvlat
