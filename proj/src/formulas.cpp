#include "parfour/formulas.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "parfour/blocks.hpp"

namespace parfour {

namespace {

// Sum per-size series over n = 0..N, optionally across threads. per_size must
// be pure; merging via add is exact, so the result is schedule-independent.
template <class E, class PerSize>
Series<E> merge_sizes(long long N, int threads, PerSize per_size) {
  if (threads <= 1) {
    Series<E> out = Series<E>{N, {}};
    for (long long n = 0; n <= N; ++n) out = add(out, per_size(n));
    return out;
  }
  std::vector<Series<E>> partial(static_cast<size_t>(threads), Series<E>{N, {}});
  std::atomic<long long> next{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (long long n = next.fetch_add(1); n <= N; n = next.fetch_add(1))
        partial[static_cast<size_t>(t)] = add(partial[static_cast<size_t>(t)], per_size(n));
    });
  }
  for (auto& w : workers) w.join();
  Series<E> out = Series<E>{N, {}};
  for (const auto& p : partial) out = add(out, p);
  return out;
}

Series4 weight_sum(const RestrictionSpec& spec, long long N, int threads) {
  return merge_sizes<ExponentVector>(N, threads, [&spec, N](long long n) {
    Series4 s{N, {}};
    for_each_restricted(spec, n, [&s](const Partition& p) { ++s.terms[statistics(p)]; });
    return s;
  });
}

}  // namespace

Series4 brute_phi(long long N, int threads) {
  return weight_sum(RestrictionSpec{1, 1, {}}, N, threads);
}

Series4 brute_psi(long long N, int threads) {
  return weight_sum(RestrictionSpec{1, 1, uniform_rho(1, 1, 2, N)}, N, threads);
}

Series4 brute_phi_restricted(const RestrictionSpec& spec, long long N, int threads) {
  return weight_sum(spec, N, threads);
}

Series3 brute_andrews(long long N, int threads) {
  return merge_sizes<SignedTriple>(N, threads, [N](long long n) {
    Series3 s{N, {}};
    for_each_partition(n, [&s](const Partition& p) {
      ++s.terms[{odd_part_count(p), odd_part_count(conjugate(p)), p.size()}];
    });
    return s;
  });
}

std::vector<FactorSpec4> theorem1_factors(long long N) {
  std::vector<FactorSpec4> out;
  for (long long j = 1; 4 * j - 3 <= N; ++j) {
    const FactorSpec4 family[] = {
        {FactorKind::plus_num, {j, j - 1, j - 1, j - 1}},
        {FactorKind::plus_num, {j, j, j, j - 1}},
        {FactorKind::denom, {j, j, j, j}},
        {FactorKind::denom, {j, j, j - 1, j - 1}},
        {FactorKind::denom, {j, j - 1, j, j - 1}},
    };
    for (const auto& f : family)
      if (grade(f.m) <= N) out.push_back(f);
  }
  return out;
}

std::vector<FactorSpec4> corollary1_factors(long long N) {
  std::vector<FactorSpec4> out;
  for (long long j = 1; 4 * j - 3 <= N; ++j) {
    const FactorSpec4 family[] = {
        {FactorKind::plus_num, {j, j - 1, j - 1, j - 1}},
        {FactorKind::plus_num, {j, j, j, j - 1}},
        {FactorKind::denom, {j, j, j - 1, j - 1}},
    };
    for (const auto& f : family)
      if (grade(f.m) <= N) out.push_back(f);
  }
  return out;
}

std::vector<FactorSpec3> andrews_factors(long long N) {
  std::vector<FactorSpec3> out;
  for (long long j = 1; 2 * j - 1 <= N; ++j) {
    const FactorSpec3 family[] = {
        {FactorKind::plus_num, {1, 1, 2 * j - 1}},
        {FactorKind::denom, {0, 0, 4 * j}},
        {FactorKind::denom, {2, 0, 4 * j - 2}},
        {FactorKind::denom, {0, 2, 4 * j - 2}},
    };
    for (const auto& f : family)
      if (grade(f.m) <= N) out.push_back(f);
  }
  return out;
}

namespace {

void append_rho_factors(const RestrictionSpec& spec, long long N,
                        std::vector<FactorSpec4>& out) {
  for (const auto& [r, bound] : spec.rho) {
    long long half = bound / 2;
    ExponentVector m{(r + 1) / 2 * half, r / 2 * half, (r + 1) / 2 * half, r / 2 * half};
    if (grade(m) <= N) out.push_back({FactorKind::minus_num, m});
  }
}

}  // namespace

std::vector<FactorSpec4> theorem2_paper_factors(const RestrictionSpec& spec, long long N) {
  std::vector<FactorSpec4> out;
  long long i = spec.i, k = spec.k;
  for (long long j = 1;; ++j) {
    long long num_len = (j + 1) * k + i, den_len = j * k + i;
    const FactorSpec4 family[] = {
        {FactorKind::plus_num,
         {(num_len + 1) / 2, num_len / 2, (den_len + 1) / 2, den_len / 2}},
        {FactorKind::denom,
         {(den_len + 1) / 2, den_len / 2, (den_len + 1) / 2, den_len / 2}},
        {FactorKind::denom, {j * k, (j - 1) * k, j * k, (j - 1) * k}},
    };
    bool any = false;
    for (const auto& f : family) {
      if (grade(f.m) <= N) {
        out.push_back(f);
        any = true;
      }
    }
    if (!any) break;  // every family grows with j, so nothing later fits either
  }
  append_rho_factors(spec, N, out);
  return out;
}

std::vector<FactorSpec4> theorem2_derived_factors(const RestrictionSpec& spec, long long N) {
  std::vector<FactorSpec4> out;
  long long i = spec.i, k = spec.k;
  for (long long L = i; 2 * L <= N; L += k)
    out.push_back({FactorKind::denom, block_weight(make_block(L, L))});
  for (long long L = i + k; 2 * L - k <= N; L += k)
    out.push_back({FactorKind::plus_num, block_weight(make_block(L, L - k))});
  if (i <= N) out.push_back({FactorKind::plus_num, block_weight(make_block(i, 0))});
  for (long long j = 1; (2 * j - 1) * 2 * k <= N; ++j)
    out.push_back({FactorKind::denom, type3_weight(2 * j - 1, k)});
  append_rho_factors(spec, N, out);
  return out;
}

FormulaId make_formula_id(const std::string& name,
                          const std::optional<RestrictionSpec>& spec) {
  FormulaId id;
  if (name == "theorem1") id.kind = FormulaKind::theorem1;
  else if (name == "corollary1") id.kind = FormulaKind::corollary1;
  else if (name == "andrews") id.kind = FormulaKind::andrews;
  else if (name == "theorem2-paper") id.kind = FormulaKind::theorem2_paper;
  else if (name == "theorem2-derived") id.kind = FormulaKind::theorem2_derived;
  else throw ParseError("unknown formula '" + name + "'");
  bool needs_spec =
      id.kind == FormulaKind::theorem2_paper || id.kind == FormulaKind::theorem2_derived;
  if (needs_spec && !spec) throw ParseError("formula '" + name + "' requires a restriction spec");
  if (!needs_spec && spec) throw ParseError("formula '" + name + "' takes no restriction spec");
  id.spec = spec;
  return id;
}

std::string format_formula_id(const FormulaId& id) {
  switch (id.kind) {
    case FormulaKind::theorem1: return "theorem1";
    case FormulaKind::corollary1: return "corollary1";
    case FormulaKind::andrews: return "andrews";
    case FormulaKind::theorem2_paper:
      return "theorem2-paper(" + format_restriction_spec(*id.spec) + ")";
    default:
      return "theorem2-derived(" + format_restriction_spec(*id.spec) + ")";
  }
}

namespace {

template <class E>
void fill_diff(VerifyReport& r, const Series<E>& lhs, const Series<E>& rhs,
               const SeriesDiff<E>& diff, std::vector<long long> (*unpack)(const E&)) {
  r.pass = diff.equal;
  if (!diff.equal) {
    r.diff_e = unpack(*diff.first_diff);
    r.diff_lhs = coefficient(lhs, *diff.first_diff).str();
    r.diff_rhs = coefficient(rhs, *diff.first_diff).str();
  }
}

std::vector<long long> unpack4(const ExponentVector& e) { return {e.ea, e.eb, e.ec, e.ed}; }

std::vector<long long> unpack3(const SignedTriple& e) { return {e.er, e.es, e.eq}; }

}  // namespace

VerifyReport verify(const FormulaId& id, long long N, int threads) {
  VerifyReport r;
  r.formula = format_formula_id(id);
  r.degree = N;
  auto started = std::chrono::steady_clock::now();
  if (id.kind == FormulaKind::andrews) {
    Series3 lhs = expand_product(andrews_factors(N), N);
    Series3 rhs = brute_andrews(N, threads);
    fill_diff(r, lhs, rhs, equals(lhs, rhs), unpack3);
  } else {
    Series4 lhs, rhs;
    switch (id.kind) {
      case FormulaKind::theorem1:
        lhs = expand_product(theorem1_factors(N), N);
        rhs = brute_phi(N, threads);
        break;
      case FormulaKind::corollary1:
        lhs = expand_product(corollary1_factors(N), N);
        rhs = brute_psi(N, threads);
        break;
      case FormulaKind::theorem2_paper:
        lhs = expand_product(theorem2_paper_factors(*id.spec, N), N);
        rhs = brute_phi_restricted(*id.spec, N, threads);
        break;
      default:
        lhs = expand_product(theorem2_derived_factors(*id.spec, N), N);
        rhs = brute_phi_restricted(*id.spec, N, threads);
        break;
    }
    fill_diff(r, lhs, rhs, equals(lhs, rhs), unpack4);
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  return r;
}

std::string report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["formula"] = r.formula;
  j["degree"] = r.degree;
  j["pass"] = r.pass;
  if (r.diff_e) {
    nlohmann::ordered_json diff;
    diff["e"] = *r.diff_e;
    diff["lhs"] = r.diff_lhs;
    diff["rhs"] = r.diff_rhs;
    j["first_diff"] = std::move(diff);
  } else {
    j["first_diff"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::string report_text(const VerifyReport& r) {
  std::string out = "formula=" + r.formula + " degree=" + std::to_string(r.degree) +
                    " result=" + (r.pass ? "pass" : "fail");
  if (r.diff_e) {
    out += " first_diff=[";
    for (size_t m = 0; m < r.diff_e->size(); ++m) {
      if (m) out += ',';
      out += std::to_string((*r.diff_e)[m]);
    }
    out += "] lhs=" + r.diff_lhs + " rhs=" + r.diff_rhs;
  }
  return out;
}

}  // namespace parfour
