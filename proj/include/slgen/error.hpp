#pragma once

#include <stdexcept>
#include <string>

namespace slgen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SLGEN_DEFINE_ERROR(Name)              \
    class Name : public Error {               \
    public:                                   \
        using Error::Error;                   \
    }

// arith
SLGEN_DEFINE_ERROR(NotPrimePower);
SLGEN_DEFINE_ERROR(InvalidArgument);

// ff
SLGEN_DEFINE_ERROR(InvalidPrime);
SLGEN_DEFINE_ERROR(FieldMismatch);
SLGEN_DEFINE_ERROR(NoEmbedding);
SLGEN_DEFINE_ERROR(NotInSubfield);
SLGEN_DEFINE_ERROR(OrderDoesNotDivide);
SLGEN_DEFINE_ERROR(NotAnnihilated);
SLGEN_DEFINE_ERROR(DivisionByZero);

// poly
SLGEN_DEFINE_ERROR(NotMonic);
SLGEN_DEFINE_ERROR(DegenerateConjugates);
SLGEN_DEFINE_ERROR(WrongShape);

// matrix
SLGEN_DEFINE_ERROR(DimensionMismatch);
SLGEN_DEFINE_ERROR(Singular);
SLGEN_DEFINE_ERROR(WordSyntaxError);

// construct
SLGEN_DEFINE_ERROR(UnsupportedN);
SLGEN_DEFINE_ERROR(OutOfRange);
SLGEN_DEFINE_ERROR(NotSpecialCase);

// meataxe
SLGEN_DEFINE_ERROR(ZeroSeed);
SLGEN_DEFINE_ERROR(InconclusiveAfterRetries);

// certify
SLGEN_DEFINE_ERROR(ScanContradiction);
SLGEN_DEFINE_ERROR(MalformedCertificate);

#undef SLGEN_DEFINE_ERROR

}  // namespace slgen
