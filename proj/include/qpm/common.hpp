#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpm {

using Int = boost::multiprecision::cpp_int;

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QPM_ERROR(Name)                                              \
    struct Name : Error {                                            \
        explicit Name(const std::string& msg) : Error(msg) {}        \
    }

// field construction / arithmetic
QPM_ERROR(NotIrreducible);
QPM_ERROR(NotMonic);
QPM_ERROR(BadDegree);
QPM_ERROR(ZeroToNegativePower);
QPM_ERROR(FieldMismatch);
QPM_ERROR(BadElementString);

// subspace lattice
QPM_ERROR(AmbientMismatch);
QPM_ERROR(NotASubspaceOf);
QPM_ERROR(InconsistentConstraints);
QPM_ERROR(TooLargeToEnumerate);
QPM_ERROR(DegenerateForm);

// q-polymatroids
QPM_ERROR(AxiomViolation);
QPM_ERROR(NoCocircuits);

// duality / recovery
QPM_ERROR(SingularMinor);
QPM_ERROR(InconsistentKnowns);
QPM_ERROR(BadIndices);

// designs
QPM_ERROR(NonIntegralValue);
QPM_ERROR(DualConditionViolated);
QPM_ERROR(TNotLessThanDM);
QPM_ERROR(TNotLessThanD);
QPM_ERROR(ThetaIsRootOfUnityRange);
QPM_ERROR(HypothesisNotSatisfied);

// io / cli / search
QPM_ERROR(BadInput);
QPM_ERROR(BadParams);
QPM_ERROR(ParamsExceedCeiling);

#undef QPM_ERROR

// Exact integer power q^e (e >= 0).
inline Int int_pow(const Int& q, long e) {
    if (e < 0) throw BadParams("int_pow: negative exponent");
    Int r = 1, b = q;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Exact division; throws NonIntegralValue when b does not divide a.
inline Int exact_div(const Int& a, const Int& b, const char* what = "exact_div") {
    if (b == 0) throw NonIntegralValue(std::string(what) + ": division by zero");
    Int q = a / b;
    if (q * b != a) throw NonIntegralValue(std::string(what) + ": non-integral quotient");
    return q;
}

}  // namespace qpm
