#pragma once

#include "motzhank/mpoly.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<motzhank::MPoly> : GenericNumTraits<motzhank::MPoly> {
    using Real = motzhank::MPoly;
    using NonInteger = motzhank::MPoly;
    using Nested = motzhank::MPoly;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 100,
        MulCost = 1000
    };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 40,
        MulCost = 80
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpq_class;
    using Nested = mpz_class;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 20,
        MulCost = 40
    };
};

} // namespace Eigen

namespace motzhank {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using SquareMatrix = Matrix<MPoly>;
using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

} // namespace motzhank
