#include "parfour/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace parfour {

long long Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0LL);
}

ExponentVector operator+(const ExponentVector& x, const ExponentVector& y) {
  return {x.ea + y.ea, x.eb + y.eb, x.ec + y.ec, x.ed + y.ed};
}

SignedTriple operator+(const SignedTriple& x, const SignedTriple& y) {
  return {x.er + y.er, x.es + y.es, x.eq + y.eq};
}

long long grade(const ExponentVector& e) { return e.ea + e.eb + e.ec + e.ed; }

long long grade(const SignedTriple& e) { return e.eq; }

Partition make_partition(const std::vector<long long>& values) {
  for (size_t m = 0; m < values.size(); ++m) {
    if (values[m] <= 0) throw ParseError("partition parts must be positive");
    if (m > 0 && values[m - 1] < values[m]) throw ParseError("not weakly decreasing");
  }
  return Partition{values};
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.parts.empty()) return out;
  out.parts.reserve(static_cast<size_t>(p.parts[0]));
  for (long long j = 1; j <= p.parts[0]; ++j) {
    long long rows = 0;
    for (long long part : p.parts) {
      if (part >= j) ++rows;
      else break;  // parts are weakly decreasing
    }
    out.parts.push_back(rows);
  }
  return out;
}

ExponentVector statistics(const Partition& p) {
  ExponentVector e;
  for (size_t m = 0; m < p.parts.size(); ++m) {
    long long part = p.parts[m];
    if (m % 2 == 0) {  // odd level, 1-based
      e.ea += (part + 1) / 2;
      e.eb += part / 2;
    } else {
      e.ec += (part + 1) / 2;
      e.ed += part / 2;
    }
  }
  return e;
}

char cell_label(long long row, long long col) {
  if (row < 1 || col < 1) throw DomainError("cell coordinates are 1-based");
  if (row % 2 == 1) return col % 2 == 1 ? 'a' : 'b';
  return col % 2 == 1 ? 'c' : 'd';
}

long long odd_part_count(const Partition& p) {
  long long n = 0;
  for (long long part : p.parts) n += part % 2;
  return n;
}

SignedTriple specialize_stats(const ExponentVector& e) {
  return {e.ea - e.eb + e.ec - e.ed, e.ea + e.eb - e.ec - e.ed,
          e.ea + e.eb + e.ec + e.ed};
}

namespace {

// Reverse-lexicographic descent: next part value descending, and for each
// value the highest multiplicity first. `cap` = allowed copies (-1: no cap).
void restricted_rec(long long remaining, long long max_value, const RestrictionSpec& spec,
                    std::vector<long long>& acc,
                    const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition{acc});
    return;
  }
  // largest value <= max_value with value == i (mod k)
  long long v = std::min(max_value, remaining);
  long long rem = ((spec.i % spec.k) + spec.k) % spec.k;
  long long shift = ((v - rem) % spec.k + spec.k) % spec.k;
  v -= shift;
  for (; v >= 1; v -= spec.k) {
    long long cap = remaining / v;
    auto it = spec.rho.find(v);
    if (it != spec.rho.end()) cap = std::min(cap, it->second - 1);
    for (long long c = cap; c >= 1; --c) {
      acc.insert(acc.end(), static_cast<size_t>(c), v);
      restricted_rec(remaining - c * v, v - spec.k, spec, acc, fn);
      acc.resize(acc.size() - static_cast<size_t>(c));
    }
  }
}

}  // namespace

void for_each_restricted(const RestrictionSpec& spec, long long n,
                         const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw DomainError("negative partition size");
  std::vector<long long> acc;
  restricted_rec(n, n, spec, acc, fn);
}

void for_each_partition(long long n, const std::function<void(const Partition&)>& fn) {
  for_each_restricted(RestrictionSpec{1, 1, {}}, n, fn);
}

void for_each_distinct(long long n, const std::function<void(const Partition&)>& fn) {
  for_each_restricted(RestrictionSpec{1, 1, uniform_rho(1, 1, 2, n)}, n, fn);
}

std::vector<Partition> enumerate_partitions(long long n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> enumerate_distinct(long long n) {
  std::vector<Partition> out;
  for_each_distinct(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> enumerate_restricted(const RestrictionSpec& spec, long long n) {
  std::vector<Partition> out;
  for_each_restricted(spec, n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

bool in_gap_class(const Partition& p, long long k) {
  if (k < 1) throw DomainError("gap parameter k must be positive");
  for (size_t m = 0; m < p.parts.size(); m += 2) {
    long long top = p.parts[m];
    long long bottom = m + 1 < p.parts.size() ? p.parts[m + 1] : 0;
    if (top - bottom > 2 * k - 1) return false;
  }
  return true;
}

bool in_restricted_class(const Partition& p, const RestrictionSpec& spec) {
  long long rem = ((spec.i % spec.k) + spec.k) % spec.k;
  std::map<long long, long long> mult;
  for (long long part : p.parts) {
    if (part % spec.k != rem) return false;
    ++mult[part];
  }
  for (const auto& [r, bound] : spec.rho) {
    auto it = mult.find(r);
    if (it != mult.end() && it->second >= bound) return false;
  }
  return true;
}

RestrictionSpec make_restriction_spec(long long i, long long k,
                                      std::map<long long, long long> rho) {
  if (k < 1) throw DomainError("modulus k must be positive");
  i = ((i % k) + k) % k;  // residues are stored in 1..k, with 0 written as k
  if (i == 0) i = k;
  long long rem = i % k;
  for (const auto& [r, bound] : rho) {
    if (r < 1 || r % k != rem) throw DomainError("rho key must be >= 1 and == i (mod k)");
    if (bound < 2 || bound % 2 != 0) throw DomainError("rho values must be even and >= 2");
  }
  return RestrictionSpec{i, k, std::move(rho)};
}

std::map<long long, long long> uniform_rho(long long i, long long k, long long bound,
                                           long long N) {
  std::map<long long, long long> rho;
  for (long long r = i; r <= N; r += k) rho[r] = bound;
  return rho;
}

Partition parse_partition(const std::string& text) {
  std::vector<long long> values;
  std::string trimmed = text;
  auto strip = [](std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
  };
  strip(trimmed);
  if (trimmed.empty()) return Partition{};
  std::stringstream ss(trimmed);
  std::string token;
  while (std::getline(ss, token, ',')) {
    strip(token);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed partition text: '" + text + "'");
    values.push_back(std::stoll(token));
  }
  return make_partition(values);
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (size_t m = 0; m < p.parts.size(); ++m) {
    if (m) out += ',';
    out += std::to_string(p.parts[m]);
  }
  return out;
}

RestrictionSpec parse_restriction_spec(const std::string& text, long long N) {
  std::stringstream ss(text);
  std::string head;
  if (!std::getline(ss, head, ';')) throw ParseError("empty restriction spec");
  size_t slash = head.find('/');
  if (slash == std::string::npos) throw ParseError("restriction spec must start with i/k");
  auto to_ll = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed restriction spec: '" + text + "'");
    return std::stoll(s);
  };
  long long i = to_ll(head.substr(0, slash));
  long long k = to_ll(head.substr(slash + 1));
  std::map<long long, long long> rho;
  long long uniform = 0;
  std::string segment;
  while (std::getline(ss, segment, ';')) {
    if (segment.rfind("all:", 0) == 0) {
      if (uniform) throw ParseError("duplicate all: clause");
      uniform = to_ll(segment.substr(4));
      continue;
    }
    std::stringstream pairs(segment);
    std::string pair;
    while (std::getline(pairs, pair, ',')) {
      size_t colon = pair.find(':');
      if (colon == std::string::npos) throw ParseError("rho entry must be r:value");
      long long r = to_ll(pair.substr(0, colon));
      long long v = to_ll(pair.substr(colon + 1));
      if (rho.count(r)) throw ParseError("duplicate rho entry for part " + std::to_string(r));
      rho[r] = v;
    }
  }
  if (uniform) {
    auto filled = uniform_rho(i, k, uniform, N);
    for (auto& [r, v] : rho) filled[r] = v;  // explicit entries win
    rho = std::move(filled);
  }
  try {
    return make_restriction_spec(i, k, std::move(rho));
  } catch (const DomainError& err) {
    throw ParseError(std::string(err.what()) + " in '" + text + "'");
  }
}

std::string format_restriction_spec(const RestrictionSpec& spec) {
  std::string out = std::to_string(spec.i) + "/" + std::to_string(spec.k);
  bool first = true;
  for (const auto& [r, v] : spec.rho) {
    out += first ? ";" : ",";
    out += std::to_string(r) + ":" + std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace parfour
