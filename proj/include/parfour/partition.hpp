#pragma once

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace parfour {

// Malformed input text (CLI maps this to a usage error).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Violated operation precondition on otherwise well-formed values.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Partition offered for block decomposition is outside the gap class.
class GapClassError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Weakly decreasing positive parts; the empty partition is the unique
// partition of 0. Rows of the Young diagram, 1-based.
struct Partition {
  std::vector<long long> parts;

  long long size() const;  // |lambda|, the cell count
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

// Exponents of one monomial a^ea b^eb c^ec d^ed. The default comparison is
// lexicographic on (ea, eb, ec, ed), which is the canonical term order.
struct ExponentVector {
  long long ea = 0, eb = 0, ec = 0, ed = 0;
  bool operator==(const ExponentVector&) const = default;
  auto operator<=>(const ExponentVector&) const = default;
};

// Exponents of one monomial r^er s^es q^eq; er and es may be negative.
struct SignedTriple {
  long long er = 0, es = 0, eq = 0;
  bool operator==(const SignedTriple&) const = default;
  auto operator<=>(const SignedTriple&) const = default;
};

ExponentVector operator+(const ExponentVector&, const ExponentVector&);
SignedTriple operator+(const SignedTriple&, const SignedTriple&);

// Grading used for truncation: total degree for four variables (equal to
// |lambda| for partition weights), the q-exponent for three.
long long grade(const ExponentVector& e);
long long grade(const SignedTriple& e);

// Describes the class of partitions with all parts == i (mod k) in which each
// part value r in domain(rho) occurs strictly fewer than rho(r) times.
// i is normalized to 1..k; the residue-0 class is written i = k.
struct RestrictionSpec {
  long long i = 1;
  long long k = 1;
  std::map<long long, long long> rho;  // part value -> even bound >= 2

  bool operator==(const RestrictionSpec&) const = default;
};

Partition make_partition(const std::vector<long long>& values);
Partition conjugate(const Partition& p);

// (alpha, beta, gamma, delta): ceil/floor halves of odd-level rows and
// even-level rows. Equals the diagram cell-label counts.
ExponentVector statistics(const Partition& p);

// 'a' odd row/odd col, 'b' odd/even, 'c' even/odd, 'd' even/even; 1-based.
char cell_label(long long row, long long col);

long long odd_part_count(const Partition& p);

// (ea-eb+ec-ed, ea+eb-ec-ed, ea+eb+ec+ed); on statistics(p) this is
// (odd parts of p, odd parts of conjugate(p), |p|).
SignedTriple specialize_stats(const ExponentVector& e);

// Enumeration streams, reverse-lexicographic order.
void for_each_partition(long long n, const std::function<void(const Partition&)>& fn);
void for_each_distinct(long long n, const std::function<void(const Partition&)>& fn);
void for_each_restricted(const RestrictionSpec& spec, long long n,
                         const std::function<void(const Partition&)>& fn);

std::vector<Partition> enumerate_partitions(long long n);
std::vector<Partition> enumerate_distinct(long long n);
std::vector<Partition> enumerate_restricted(const RestrictionSpec& spec, long long n);

// True iff every padded odd-level gap lambda_{2m-1} - lambda_{2m} is at most
// 2k-1, i.e. iff no width-2k odd-height rectangle can be stripped. This is
// the image class of the stripping bijection; at k=1 it is the classic
// difference-0-or-1 class.
bool in_gap_class(const Partition& p, long long k);

// Membership in Par(i,k;R,rho): residues plus multiplicity caps.
bool in_restricted_class(const Partition& p, const RestrictionSpec& spec);

RestrictionSpec make_restriction_spec(long long i, long long k,
                                      std::map<long long, long long> rho = {});

// rho assigning `bound` to every part value == i (mod k) up to N.
std::map<long long, long long> uniform_rho(long long i, long long k, long long bound,
                                           long long N);

// Text formats. Partition: "9,9,6,5" (empty string = empty partition).
// RestrictionSpec: "i/k[;r1:v1,r2:v2][;all:v]"; the all-shorthand materializes
// up to degree N, explicit pairs win over it.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);
RestrictionSpec parse_restriction_spec(const std::string& text, long long N);
std::string format_restriction_spec(const RestrictionSpec& spec);

}  // namespace parfour
