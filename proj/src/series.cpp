#include "parfour/series.hpp"

#include <json.hpp>

namespace parfour {

Series3 specialize(const Series4& A) {
  Series3 out;
  out.truncation = A.truncation;
  for (const auto& [e, c] : A.terms) out.terms[specialize_stats(e)] += c;
  drop_zeros(out);
  return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

template <class E>
ordered_json series_to_ordered_json(const Series<E>& A, int vars,
                                    std::vector<long long> (*unpack)(const E&)) {
  ordered_json j;
  j["vars"] = vars;
  j["truncation"] = A.truncation;
  j["terms"] = ordered_json::array();
  for (const auto& [e, c] : A.terms) {
    ordered_json term;
    term["e"] = unpack(e);
    term["c"] = c.str();
    j["terms"].push_back(std::move(term));
  }
  return j;
}

std::vector<long long> unpack4(const ExponentVector& e) { return {e.ea, e.eb, e.ec, e.ed}; }

std::vector<long long> unpack3(const SignedTriple& e) { return {e.er, e.es, e.eq}; }

Coeff parse_coeff(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && digits[0] == '-') digits.erase(0, 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("coefficient must be a decimal string");
  Coeff c(text);
  if (c == 0) throw ParseError("zero coefficient stored");
  return c;
}

template <class E>
Series<E> series_from_json(const std::string& text, int vars,
                           E (*pack)(const std::vector<long long>&)) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("malformed series JSON: ") + err.what());
  }
  if (!j.is_object() || !j.contains("vars") || !j.contains("truncation") ||
      !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("series JSON must have vars, truncation, terms");
  if (!j["vars"].is_number_integer() || j["vars"].get<int>() != vars)
    throw ParseError("vars mismatch");
  if (!j["truncation"].is_number_integer() || j["truncation"].get<long long>() < 0)
    throw ParseError("truncation must be a nonnegative integer");
  Series<E> out;
  out.truncation = j["truncation"].get<long long>();
  bool have_prev = false;
  E prev{};
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("e") || !term.contains("c") ||
        !term["e"].is_array() || term["e"].size() != static_cast<size_t>(vars) ||
        !term["c"].is_string())
      throw ParseError("term must be {\"e\":[...],\"c\":\"...\"}");
    std::vector<long long> exps;
    for (const auto& x : term["e"]) {
      if (!x.is_number_integer()) throw ParseError("exponents must be integers");
      exps.push_back(x.get<long long>());
    }
    E e = pack(exps);
    if (grade(e) > out.truncation) throw ParseError("exponent exceeds truncation");
    if (have_prev && !(prev < e)) throw ParseError("non-canonical order");
    prev = e;
    have_prev = true;
    out.terms.emplace(e, parse_coeff(term["c"].get<std::string>()));
  }
  return out;
}

ExponentVector pack4(const std::vector<long long>& v) {
  ExponentVector e{v[0], v[1], v[2], v[3]};
  if (e.ea < 0 || e.eb < 0 || e.ec < 0 || e.ed < 0)
    throw ParseError("four-variable exponents must be nonnegative");
  return e;
}

SignedTriple pack3(const std::vector<long long>& v) {
  SignedTriple e{v[0], v[1], v[2]};
  if (e.eq < 0) throw ParseError("q exponent must be nonnegative");
  if (std::abs(e.er) > e.eq || std::abs(e.es) > e.eq)
    throw ParseError("|r|, |s| exponents cannot exceed the q exponent");
  return e;
}

void append_power(std::string& out, const char* name, long long exp) {
  if (exp == 0) return;
  if (!out.empty()) out += ' ';
  out += name;
  if (exp != 1) {
    out += '^';
    out += std::to_string(exp);
  }
}

template <class E>
std::string series_text_impl(const Series<E>& A) {
  std::string out;
  for (const auto& [e, c] : A.terms) {
    out += c.str();
    out += '\t';
    out += monomial_string(e);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string to_json(const Series4& A) {
  return series_to_ordered_json(A, 4, unpack4).dump();
}

std::string to_json(const Series3& A) {
  return series_to_ordered_json(A, 3, unpack3).dump();
}

Series4 series4_from_json(const std::string& text) {
  return series_from_json<ExponentVector>(text, 4, pack4);
}

Series3 series3_from_json(const std::string& text) {
  return series_from_json<SignedTriple>(text, 3, pack3);
}

std::string monomial_string(const ExponentVector& e) {
  std::string out;
  append_power(out, "a", e.ea);
  append_power(out, "b", e.eb);
  append_power(out, "c", e.ec);
  append_power(out, "d", e.ed);
  return out.empty() ? "1" : out;
}

std::string monomial_string(const SignedTriple& e) {
  std::string out;
  append_power(out, "r", e.er);
  append_power(out, "s", e.es);
  append_power(out, "q", e.eq);
  return out.empty() ? "1" : out;
}

std::string series_text(const Series4& A) { return series_text_impl(A); }

std::string series_text(const Series3& A) { return series_text_impl(A); }

}  // namespace parfour
