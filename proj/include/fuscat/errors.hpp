#pragma once

#include <stdexcept>
#include <string>

namespace fuscat {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define FUSCAT_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

FUSCAT_DEFINE_ERROR(MixedRadicands);
FUSCAT_DEFINE_ERROR(DivisionByZero);
FUSCAT_DEFINE_ERROR(NonInvertibleGaloisIndex);
FUSCAT_DEFINE_ERROR(NotInSubfield);
FUSCAT_DEFINE_ERROR(NotADoubleRoot);
FUSCAT_DEFINE_ERROR(ShapeMismatch);
FUSCAT_DEFINE_ERROR(EigenvalueDegreeTooHigh);
FUSCAT_DEFINE_ERROR(ConstraintViolation);
FUSCAT_DEFINE_ERROR(NoSolution);
FUSCAT_DEFINE_ERROR(HypothesisViolation);

#undef FUSCAT_DEFINE_ERROR

}  // namespace fuscat
