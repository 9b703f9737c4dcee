#include "polarcrit/serialize.hpp"

namespace polarcrit {

namespace {

template <class F>
Json elems_json(const F& field, const std::vector<typename F::Elem>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(field.to_string(x));
  return out;
}

template <class F>
typename F::Elem elem_from_json(const Json& j, const F& field) {
  if (!j.is_string()) throw ParseError("field element must be a string", 0);
  return field.parse(j.get<std::string>());
}

template <class F>
std::vector<std::string> poly_strings(const std::vector<Poly<F>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'", 0);
  return j.at(key);
}

}  // namespace

template <class F>
Json field_json(const F& field) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    return {{"kind", "prime"}, {"modulus", field.modulus()}};
  } else {
    return {{"kind", "rationals"}};
  }
}

template <class F>
Json upoly_json(const UPoly<F>& u) {
  return elems_json(u.field(), u.coeffs());
}

template <class F>
UPoly<F> upoly_from_json(const Json& j, const F& field) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array", 0);
  std::vector<typename F::Elem> coeffs;
  for (const auto& c : j) coeffs.push_back(elem_from_json(c, field));
  return UPoly<F>(field, std::move(coeffs));
}

template <class F>
Json parametrization_json(const RationalParametrization<F>& p) {
  const F& field = p.ring->field();
  Json v = Json::array();
  for (const auto& vi : p.v) v.push_back(upoly_json(vi));
  return {{"variables", p.ring->names()}, {"field", field_json(field)}, {"lambda", elems_json(field, p.lambda)},
          {"degree", p.degree()}, {"q", upoly_json(p.q)}, {"v", v}};
}

template <class F>
RationalParametrization<F> parametrization_from_json(const Json& j, const RingPtr<F>& ring) {
  const F& field = ring->field();
  try {
    auto vars = member(j, "variables").get<std::vector<std::string>>();
    if (vars != ring->names()) throw ParseError("parametrization variables differ from the problem's", 0);
    if (field_json(field) != member(j, "field")) throw ParseError("parametrization field differs", 0);
    RationalParametrization<F> p{ring, {}, upoly_from_json(member(j, "q"), field), {}};
    for (const auto& c : member(j, "lambda")) p.lambda.push_back(elem_from_json(c, field));
    for (const auto& vi : member(j, "v")) p.v.push_back(upoly_from_json(vi, field));
    if (p.lambda.size() != ring->nvars() || p.v.size() != ring->nvars()) {
      throw ParseError("parametrization needs one lambda entry and one v per variable", 0);
    }
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed parametrization: ") + e.what(), 0);
  }
}

template <class F>
Json fiber_json(const LiftingFiber<F>& L) {
  const F& field = L.ring->field();
  Json m = Json::array();
  for (std::size_t r = 0; r < L.M.rows(); ++r) {
    std::vector<typename F::Elem> row;
    for (std::size_t c = 0; c < L.M.cols(); ++c) row.push_back(L.M(r, c));
    m.push_back(elems_json(field, row));
  }
  Json v = Json::array();
  for (const auto& vi : L.v) v.push_back(upoly_json(vi));
  return {{"variables", L.ring->names()},
          {"field", field_json(field)},
          {"dim", L.dim},
          {"lifting", poly_strings(L.lifting)},
          {"M", m},
          {"z", elems_json(field, L.z)},
          {"u", elems_json(field, L.u)},
          {"degree", std::max(L.Q.degree(), 0)},
          {"Q", upoly_json(L.Q)},
          {"v", v}};
}

Json delta_json(const DeltaVector& delta) { return delta.values; }

#define POLARCRIT_INSTANTIATE_SERIALIZE(F)                                                     \
  template Json field_json<F>(const F&);                                                       \
  template Json upoly_json<F>(const UPoly<F>&);                                                \
  template UPoly<F> upoly_from_json<F>(const Json&, const F&);                                 \
  template Json parametrization_json<F>(const RationalParametrization<F>&);                    \
  template RationalParametrization<F> parametrization_from_json<F>(const Json&, const RingPtr<F>&); \
  template Json fiber_json<F>(const LiftingFiber<F>&);

POLARCRIT_INSTANTIATE_SERIALIZE(Rationals)
POLARCRIT_INSTANTIATE_SERIALIZE(PrimeField)

}  // namespace polarcrit
