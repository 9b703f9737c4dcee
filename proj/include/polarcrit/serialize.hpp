#pragma once

// JSON forms of parametrizations, fibers and delta vectors. Field elements
// are strings ("num/den" over Q, a residue modulo p); univariate
// polynomials are coefficient arrays, constant term first.

#include <json.hpp>

#include "polarcrit/bounds.hpp"
#include "polarcrit/geores.hpp"

namespace polarcrit {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

template <class F>
Json field_json(const F& field);

template <class F>
Json upoly_json(const UPoly<F>& u);

template <class F>
UPoly<F> upoly_from_json(const Json& j, const F& field);

template <class F>
Json parametrization_json(const RationalParametrization<F>& p);

/// Throws ParseError when the document does not fit `ring`.
template <class F>
RationalParametrization<F> parametrization_from_json(const Json& j, const RingPtr<F>& ring);

template <class F>
Json fiber_json(const LiftingFiber<F>& L);

Json delta_json(const DeltaVector& delta);

}  // namespace polarcrit
