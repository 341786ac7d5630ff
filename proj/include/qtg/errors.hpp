#ifndef QTG_ERRORS_HPP
#define QTG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtg {

/// Base class for every recoverable error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- exact linear algebra --------------------------------------------------

struct NonSquareError : Error {
    using Error::Error;
};

struct NotUnimodularError : Error {
    using Error::Error;
};

struct SingularError : Error {
    using Error::Error;
};

// -- polytope ---------------------------------------------------------------

struct NonSimplePolytopeError : Error {
    using Error::Error;
};

struct EmptyOrUnboundedError : Error {
    using Error::Error;
};

struct InconsistentLatticeError : Error {
    using Error::Error;
};

struct DegenerateEdgeError : Error {
    using Error::Error;
};

// -- characteristic pair ----------------------------------------------------

struct NonPrimitiveColumnError : Error {
    NonPrimitiveColumnError(int column, const std::string& what)
        : Error(what), column(column) {}
    int column;
};

struct NonUnimodularAtVertexError : Error {
    using Error::Error;
};

struct NonGenericNuError : Error {
    using Error::Error;
};

// -- equivariant evaluation ---------------------------------------------------

struct PoleAtQError : Error {
    using Error::Error;
};

// -- toric mode ---------------------------------------------------------------

struct NonSmoothToricError : Error {
    using Error::Error;
};

struct NonIntegralPolytopeError : Error {
    using Error::Error;
};

// -- input documents ----------------------------------------------------------

struct SyntaxError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    SchemaError(std::string field, const std::string& what)
        : Error(what), field(std::move(field)) {}
    std::string field;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct UnknownExampleError : Error {
    using Error::Error;
};

} // namespace qtg

#endif
