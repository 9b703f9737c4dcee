#pragma once

// Plain-text problem files. Sections start with a keyword on its own line:
//
//   FIELD           rationals | prime <p>
//   VARS            variable names
//   DIM             d
//   GENS            one polynomial per line
//   OBJECTIVE       g
//   DELTA           delta_1 .. delta_{d+1}
//   NAIVE_DEGREES   generator degrees for the comparison bound
//
// Items may share a line except in GENS and OBJECTIVE. '#' starts a comment.

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "polarcrit/bounds.hpp"
#include "polarcrit/field.hpp"
#include "polarcrit/polar.hpp"
#include "polarcrit/poly.hpp"

namespace polarcrit {

struct FieldSpec {
  FieldKind kind = FieldKind::PrimeField;
  std::uint32_t prime = kDefaultPrime;

  std::string describe() const;
  bool operator==(const FieldSpec&) const = default;
};

/// "rationals", "prime" or "prime <p>". Throws ParseError.
FieldSpec parse_field_spec(const std::string& text);

struct ProblemFile {
  std::string source;  // file name, for messages
  std::optional<FieldSpec> field;
  std::vector<std::string> vars;
  std::optional<std::size_t> dim;
  std::vector<std::string> gens;
  std::vector<std::size_t> gen_lines;
  std::optional<std::string> objective;
  std::size_t objective_line = 0;
  std::optional<DeltaVector> delta;
  std::vector<unsigned long> naive_degrees;

  bool has_variety() const { return !vars.empty() && !gens.empty() && dim.has_value(); }
};

/// Throws ParseError with the offending line number.
ProblemFile parse_problem(std::istream& in, const std::string& source = "<input>");
ProblemFile read_problem_file(const std::string& path);

template <class F>
struct TypedProblem {
  RingPtr<F> ring;
  VarietySpec<F> variety;
  std::optional<Poly<F>> objective;
};

/// Parses the polynomials over `field`. Requires VARS, DIM and GENS.
template <class F>
TypedProblem<F> instantiate(const ProblemFile& problem, const F& field);

}  // namespace polarcrit
