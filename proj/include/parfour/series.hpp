#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parfour/partition.hpp"

namespace parfour {

using Coeff = boost::multiprecision::cpp_int;

enum class FactorKind { plus_num, minus_num, denom };  // (1+m), (1-m), 1/(1-m)

template <class E>
struct FactorSpec {
  FactorKind kind;
  E m;  // never the zero exponent
  bool operator==(const FactorSpec&) const = default;
  auto operator<=>(const FactorSpec&) const = default;
};

using FactorSpec4 = FactorSpec<ExponentVector>;
using FactorSpec3 = FactorSpec<SignedTriple>;

// Truncated sparse series: every stored exponent has grade <= truncation and
// no zero coefficient is stored. The map order is the canonical term order
// (lexicographic on the exponent tuple).
template <class E>
struct Series {
  long long truncation = 0;
  std::map<E, Coeff> terms;
  bool operator==(const Series&) const = default;
};

using Series4 = Series<ExponentVector>;
using Series3 = Series<SignedTriple>;

template <class E>
struct SeriesDiff {
  bool equal = false;
  std::optional<E> first_diff;  // lexicographically smallest differing exponent
};

template <class E>
Series<E> one(long long N) {
  if (N < 0) throw DomainError("negative truncation");
  return Series<E>{N, {{E{}, Coeff(1)}}};
}

template <class E>
Coeff coefficient(const Series<E>& A, const E& e) {
  auto it = A.terms.find(e);
  return it == A.terms.end() ? Coeff(0) : it->second;
}

template <class E>
void drop_zeros(Series<E>& A) {
  for (auto it = A.terms.begin(); it != A.terms.end();)
    it = it->second == 0 ? A.terms.erase(it) : std::next(it);
}

template <class E>
Series<E> add(const Series<E>& A, const Series<E>& B) {
  if (A.truncation != B.truncation) throw DomainError("truncation mismatch");
  Series<E> out = A;
  for (const auto& [e, c] : B.terms) out.terms[e] += c;
  drop_zeros(out);
  return out;
}

template <class E>
Series<E> sub(const Series<E>& A, const Series<E>& B) {
  if (A.truncation != B.truncation) throw DomainError("truncation mismatch");
  Series<E> out = A;
  for (const auto& [e, c] : B.terms) out.terms[e] -= c;
  drop_zeros(out);
  return out;
}

template <class E>
Series<E> mul(const Series<E>& A, const Series<E>& B) {
  if (A.truncation != B.truncation) throw DomainError("truncation mismatch");
  Series<E> out;
  out.truncation = A.truncation;
  for (const auto& [ea, ca] : A.terms) {
    long long room = A.truncation - grade(ea);
    for (const auto& [eb, cb] : B.terms) {
      if (grade(eb) > room) continue;
      out.terms[ea + eb] += ca * cb;
    }
  }
  drop_zeros(out);
  return out;
}

template <class E>
Series<E> truncated(const Series<E>& A, long long M) {
  if (M < 0 || M > A.truncation) throw DomainError("invalid truncation bound");
  Series<E> out;
  out.truncation = M;
  for (const auto& [e, c] : A.terms)
    if (grade(e) <= M) out.terms.emplace(e, c);
  return out;
}

// plus_num: A*(1+m); minus_num: A*(1-m); denom: A/(1-m), all truncated.
// The denom case is a single in-place sweep in term order: adding A[e] into
// A[e+m] while iterating toward e+m realizes the full geometric series
// because every inserted term is itself visited later in the sweep.
template <class E>
Series<E> apply_factor(const Series<E>& A, const FactorSpec<E>& f) {
  if (grade(f.m) < 1) throw DomainError("factor monomial must have positive degree");
  Series<E> out = A;
  long long N = A.truncation;
  if (f.kind == FactorKind::denom) {
    if (E{} < f.m) {
      for (auto it = out.terms.begin(); it != out.terms.end(); ++it) {
        E target = it->first + f.m;
        if (grade(target) <= N && it->second != 0) out.terms[target] += it->second;
      }
    } else {  // shifted exponent precedes the source in term order
      for (auto it = out.terms.rbegin(); it != out.terms.rend(); ++it) {
        E target = it->first + f.m;
        if (grade(target) <= N && it->second != 0) out.terms[target] += it->second;
      }
    }
  } else {
    Coeff sign = f.kind == FactorKind::plus_num ? 1 : -1;
    for (const auto& [e, c] : A.terms) {
      E target = e + f.m;
      if (grade(target) <= N) out.terms[target] += sign * c;
    }
  }
  drop_zeros(out);
  return out;
}

template <class E>
Series<E> expand_product(const std::vector<FactorSpec<E>>& factors, long long N) {
  Series<E> out = one<E>(N);
  for (const auto& f : factors) out = apply_factor(out, f);
  return out;
}

template <class E>
SeriesDiff<E> equals(const Series<E>& A, const Series<E>& B) {
  if (A.truncation != B.truncation) throw DomainError("truncation mismatch");
  auto ia = A.terms.begin();
  auto ib = B.terms.begin();
  while (ia != A.terms.end() || ib != B.terms.end()) {
    if (ib == B.terms.end() || (ia != A.terms.end() && ia->first < ib->first))
      return {false, ia->first};
    if (ia == A.terms.end() || ib->first < ia->first) return {false, ib->first};
    if (ia->second != ib->second) return {false, ia->first};
    ++ia;
    ++ib;
  }
  return {true, std::nullopt};
}

// a -> rsq, b -> r^{-1}sq, c -> rs^{-1}q, d -> r^{-1}s^{-1}q; term images are
// combined and cancellations dropped. Grades agree, so truncation carries.
Series3 specialize(const Series4& A);

// Canonical JSON: {"vars":V,"truncation":N,"terms":[{"e":[...],"c":"<decimal>"}]}
// with terms sorted in canonical order. from_json rejects unsorted or
// duplicate exponents with "non-canonical order".
std::string to_json(const Series4& A);
std::string to_json(const Series3& A);
Series4 series4_from_json(const std::string& text);
Series3 series3_from_json(const std::string& text);

// Display form: factors in variable order separated by single spaces,
// exponent 1 implicit, unit factors omitted; the empty monomial prints "1".
std::string monomial_string(const ExponentVector& e);
std::string monomial_string(const SignedTriple& e);

// One term per line, canonical order: "<coefficient>\t<monomial>".
std::string series_text(const Series4& A);
std::string series_text(const Series3& A);

}  // namespace parfour
