#include "polarcrit/problem.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace polarcrit {

namespace {

enum class Section { None, Field, Vars, Dim, Gens, Objective, Delta, NaiveDegrees };

std::optional<Section> keyword(const std::string& line) {
  if (line == "FIELD") return Section::Field;
  if (line == "VARS") return Section::Vars;
  if (line == "DIM") return Section::Dim;
  if (line == "GENS") return Section::Gens;
  if (line == "OBJECTIVE") return Section::Objective;
  if (line == "DELTA") return Section::Delta;
  if (line == "NAIVE_DEGREES") return Section::NaiveDegrees;
  return std::nullopt;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::uint64_t parse_count(const std::string& t, std::size_t line) {
  if (t.empty() || t.size() > 19 || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("expected a nonnegative integer, got '" + t + "'", line);
  }
  return std::stoull(t);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

}  // namespace

std::string FieldSpec::describe() const {
  return kind == FieldKind::Rationals ? "rationals" : "prime " + std::to_string(prime);
}

FieldSpec parse_field_spec(const std::string& text) {
  auto t = tokens(text);
  if (t.size() == 1 && t[0] == "rationals") return {FieldKind::Rationals, kDefaultPrime};
  if (!t.empty() && t[0] == "prime" && t.size() <= 2) {
    FieldSpec spec{FieldKind::PrimeField, kDefaultPrime};
    if (t.size() == 2) {
      std::uint64_t p = parse_count(t[1], 0);
      if (p < 3 || p >= (1ULL << 31) || !is_prime(p)) throw ParseError("not an odd prime below 2^31: " + t[1], 0);
      spec.prime = static_cast<std::uint32_t>(p);
    }
    return spec;
  }
  throw ParseError("field must be 'rationals' or 'prime [p]', got '" + text + "'", 0);
}

ProblemFile parse_problem(std::istream& in, const std::string& source) {
  ProblemFile pf;
  pf.source = source;
  Section section = Section::None;
  std::set<Section> seen;
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (auto k = keyword(line)) {
      if (!seen.insert(*k).second) throw ParseError("repeated section " + line, lineno);
      section = *k;
      continue;
    }
    switch (section) {
      case Section::None:
        throw ParseError("content before the first section keyword", lineno);
      case Section::Field:
        if (pf.field) throw ParseError("FIELD takes one line", lineno);
        try {
          pf.field = parse_field_spec(line);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), lineno);
        }
        break;
      case Section::Vars:
        for (const auto& v : tokens(line)) {
          if (!is_identifier(v)) throw ParseError("bad variable name '" + v + "'", lineno);
          if (std::find(pf.vars.begin(), pf.vars.end(), v) != pf.vars.end()) {
            throw ParseError("repeated variable '" + v + "'", lineno);
          }
          pf.vars.push_back(v);
        }
        break;
      case Section::Dim: {
        auto t = tokens(line);
        if (pf.dim || t.size() != 1) throw ParseError("DIM takes a single integer", lineno);
        pf.dim = parse_count(t[0], lineno);
        break;
      }
      case Section::Gens:
        pf.gens.push_back(line);
        pf.gen_lines.push_back(lineno);
        break;
      case Section::Objective:
        if (pf.objective) throw ParseError("OBJECTIVE takes one polynomial", lineno);
        pf.objective = line;
        pf.objective_line = lineno;
        break;
      case Section::Delta: {
        if (!pf.delta) pf.delta = DeltaVector{};
        for (const auto& t : tokens(line)) pf.delta->values.push_back(parse_count(t, lineno));
        break;
      }
      case Section::NaiveDegrees:
        for (const auto& t : tokens(line)) pf.naive_degrees.push_back(parse_count(t, lineno));
        break;
    }
  }
  if (pf.dim && !pf.vars.empty() && *pf.dim >= pf.vars.size()) {
    throw ParseError("DIM must be smaller than the number of variables", 0);
  }
  auto require = [&](Section k, bool filled, const char* name) {
    if (seen.count(k) && !filled) throw ParseError(std::string("empty ") + name + " section", 0);
  };
  require(Section::Field, pf.field.has_value(), "FIELD");
  require(Section::Vars, !pf.vars.empty(), "VARS");
  require(Section::Dim, pf.dim.has_value(), "DIM");
  require(Section::Gens, !pf.gens.empty(), "GENS");
  require(Section::Objective, pf.objective.has_value(), "OBJECTIVE");
  require(Section::Delta, pf.delta.has_value(), "DELTA");
  require(Section::NaiveDegrees, !pf.naive_degrees.empty(), "NAIVE_DEGREES");
  return pf;
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_problem(in, path);
}

template <class F>
TypedProblem<F> instantiate(const ProblemFile& problem, const F& field) {
  if (problem.vars.empty()) throw ParseError(problem.source + ": missing VARS", 0);
  if (!problem.dim) throw ParseError(problem.source + ": missing DIM", 0);
  if (problem.gens.empty()) throw ParseError(problem.source + ": missing GENS", 0);
  auto ring = make_ring(field, problem.vars);
  auto parse_at = [&](const std::string& text, std::size_t line) {
    try {
      return parse_poly<F>(text, ring);
    } catch (const ParseError& e) {
      throw ParseError(problem.source + ": " + e.what(), line);
    }
  };
  TypedProblem<F> out{ring, {{}, *problem.dim, true}, std::nullopt};
  for (std::size_t k = 0; k < problem.gens.size(); ++k) {
    out.variety.generators.push_back(parse_at(problem.gens[k], problem.gen_lines[k]));
  }
  if (problem.objective) out.objective = parse_at(*problem.objective, problem.objective_line);
  return out;
}

template TypedProblem<Rationals> instantiate<Rationals>(const ProblemFile&, const Rationals&);
template TypedProblem<PrimeField> instantiate<PrimeField>(const ProblemFile&, const PrimeField&);

}  // namespace polarcrit
