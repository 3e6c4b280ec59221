#ifndef KNETS_LINALG_HPP
#define KNETS_LINALG_HPP

#include <vector>

#include "knets/field.hpp"

namespace knets {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Exact rank by fraction-free (Bareiss) elimination; entries may live in any
// supported number field.
int exact_rank(ScalarMatrix m);

Scalar det3(const Scalar& a00, const Scalar& a01, const Scalar& a02,
            const Scalar& a10, const Scalar& a11, const Scalar& a12,
            const Scalar& a20, const Scalar& a21, const Scalar& a22);

} // namespace knets

#endif
