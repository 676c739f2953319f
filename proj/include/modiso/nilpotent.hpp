#pragma once

#include "modiso/structures.hpp"

namespace modiso {

/// Witness that x is not nilpotent: x^exponent != 0 already certifies this,
/// because a nilpotent element has vanishing (length_bound+1)-th power.
struct NonNilpotentCertificate {
    Vec element;
    Coord exponent;  // length_bound(R) + 1
    Vec power;       // element^exponent, nonzero
};

bool element_is_nilpotent(const FiniteRing& ring, const Vec& x);

bool ideal_is_nilpotent(const FiniteRing& ring, const LeftIdeal& ideal);

/// For a non-nilpotent left ideal, produces a non-nilpotent element inside it.
/// Throws ValidationError when the ideal is nilpotent.
NonNilpotentCertificate find_non_nilpotent(const FiniteRing& ring, const LeftIdeal& ideal);

}  // namespace modiso
