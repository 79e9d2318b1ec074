// parfour: exact-arithmetic partition weights, block bijections, and
// product-formula verification. Exit codes: 0 pass, 1 coefficient/domain
// mismatch, 2 usage error. All subcommand output is byte-deterministic.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parfour/blocks.hpp"
#include "parfour/formulas.hpp"
#include "parfour/partition.hpp"
#include "parfour/series.hpp"

namespace {

int usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

long long to_ll(const std::string& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw parfour::ParseError("invalid integer '" + s + "'");
  }
}

// "h1:c1,h2:c2,..." -> StripRecord; "" -> empty record.
parfour::StripRecord parse_strip_record(const std::string& text) {
  parfour::StripRecord rec;
  if (text.empty()) return rec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw parfour::ParseError("record entries must be height:count");
    long long h = to_ll(item.substr(0, colon));
    long long c = to_ll(item.substr(colon + 1));
    if (rec.removed.count(h)) throw parfour::ParseError("duplicate record height");
    rec.removed[h] = c;
  }
  return rec;
}

void print_series(const parfour::Series4& s, const std::string& format) {
  if (format == "json")
    std::cout << parfour::to_json(s) << "\n";
  else
    std::cout << parfour::series_text(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact partition-weight series, block bijections, and identity checks"};
  app.require_subcommand(1);

  std::string ex_mode, ex_spec, ex_format = "text";
  long long ex_degree = 0;
  int ex_threads = 1;
  auto* cmd_expand = app.add_subcommand("expand", "print a truncated weight series");
  cmd_expand->add_option("--mode", ex_mode, "series to expand")
      ->required()
      ->check(CLI::IsMember(
          {"brute", "theorem1", "corollary1", "theorem2-paper", "theorem2-derived"}));
  cmd_expand->add_option("--degree", ex_degree, "truncation degree N")->required();
  auto* ex_spec_opt =
      cmd_expand->add_option("--spec", ex_spec, "restriction spec \"i/k[;r:v,...][;all:v]\"");
  cmd_expand->add_option("--format", ex_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_expand->add_option("--threads", ex_threads, "worker threads for brute mode");

  std::string vf_formula, vf_spec, vf_format = "text";
  long long vf_degree = 0;
  int vf_threads = 1;
  auto* cmd_verify = app.add_subcommand("verify", "compare a product expansion to its oracle");
  cmd_verify->add_option("--formula", vf_formula, "formula id")->required();
  cmd_verify->add_option("--degree", vf_degree, "truncation degree N")->required();
  auto* vf_spec_opt = cmd_verify->add_option("--spec", vf_spec, "restriction spec");
  cmd_verify->add_option("--format", vf_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_verify->add_option("--threads", vf_threads, "worker threads for the oracle");

  std::string dc_partition;
  long long dc_k = 1;
  auto* cmd_decompose = app.add_subcommand("decompose", "split a gap-class partition into blocks");
  cmd_decompose->add_option("--partition", dc_partition, "comma-separated parts")->required();
  cmd_decompose->add_option("--k", dc_k, "gap-class modulus (default 1)");

  std::string bj_which, bj_partition, bj_spec, bj_record, bj_nu;
  long long bj_k = 1;
  bool bj_inverse = false;
  auto* cmd_bijection = app.add_subcommand("bijection", "apply f (strip rectangles) or g (split multiplicities)");
  cmd_bijection->add_option("which", bj_which, "f or g")
      ->required()
      ->check(CLI::IsMember({"f", "g"}));
  cmd_bijection->add_flag("--inverse", bj_inverse, "reconstruct lambda");
  cmd_bijection->add_option("--partition", bj_partition, "input partition (mu when --inverse)")
      ->required();
  auto* bj_k_opt = cmd_bijection->add_option("--k", bj_k, "modulus for f (default 1)");
  auto* bj_spec_opt = cmd_bijection->add_option("--spec", bj_spec, "restriction spec for g");
  auto* bj_record_opt =
      cmd_bijection->add_option("--record", bj_record, "strip record \"h:count,...\" for f --inverse");
  auto* bj_nu_opt = cmd_bijection->add_option("--nu", bj_nu, "removed partition for g --inverse");

  std::string st_partition;
  auto* cmd_stats = app.add_subcommand("stats", "print the four statistics and the weight monomial");
  cmd_stats->add_option("--partition", st_partition, "comma-separated parts")->required();

  long long an_degree = 0;
  int an_threads = 1;
  auto* cmd_andrews = app.add_subcommand("andrews", "three-way check of the two-variable identity");
  cmd_andrews->add_option("--degree", an_degree, "truncation degree N")->required();
  cmd_andrews->add_option("--threads", an_threads, "worker threads for the oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  try {
    if (*cmd_expand) {
      if (ex_degree < 0) return usage("--degree must be >= 0");
      if (ex_threads < 1) return usage("--threads must be >= 1");
      const bool has_spec = ex_spec_opt->count() > 0;
      parfour::Series4 s;
      if (ex_mode == "brute") {
        s = has_spec ? parfour::brute_phi_restricted(
                           parfour::parse_restriction_spec(ex_spec, ex_degree), ex_degree,
                           ex_threads)
                     : parfour::brute_phi(ex_degree, ex_threads);
      } else if (ex_mode == "theorem1" || ex_mode == "corollary1") {
        if (has_spec) return usage("--spec is not accepted for mode " + ex_mode);
        auto factors = ex_mode == "theorem1" ? parfour::theorem1_factors(ex_degree)
                                             : parfour::corollary1_factors(ex_degree);
        s = parfour::expand_product(factors, ex_degree);
      } else {
        if (!has_spec) return usage("mode " + ex_mode + " requires --spec");
        auto spec = parfour::parse_restriction_spec(ex_spec, ex_degree);
        auto factors = ex_mode == "theorem2-paper"
                           ? parfour::theorem2_paper_factors(spec, ex_degree)
                           : parfour::theorem2_derived_factors(spec, ex_degree);
        s = parfour::expand_product(factors, ex_degree);
      }
      print_series(s, ex_format);
      return 0;
    }

    if (*cmd_verify) {
      if (vf_degree < 0) return usage("--degree must be >= 0");
      if (vf_threads < 1) return usage("--threads must be >= 1");
      std::optional<parfour::RestrictionSpec> spec;
      if (vf_spec_opt->count() > 0)
        spec = parfour::parse_restriction_spec(vf_spec, vf_degree);
      auto id = parfour::make_formula_id(vf_formula, spec);
      auto report = parfour::verify(id, vf_degree, vf_threads);
      if (vf_format == "json")
        std::cout << parfour::report_json(report) << "\n";
      else
        std::cout << parfour::report_text(report) << "\n";
      return report.pass ? 0 : 1;
    }

    if (*cmd_decompose) {
      if (dc_k < 1) return usage("--k must be >= 1");
      auto p = parfour::parse_partition(dc_partition);
      auto d = parfour::decompose(p, dc_k);
      for (const auto& b : d.blocks)
        std::cout << (b.kind == parfour::BlockKind::II ? "II " : "I ") << b.top << ","
                  << b.bottom << "\n";
      return 0;
    }

    if (*cmd_bijection) {
      auto p = parfour::parse_partition(bj_partition);
      if (bj_which == "f") {
        if (bj_spec_opt->count() > 0) return usage("bijection f takes --k, not --spec");
        if (bj_nu_opt->count() > 0) return usage("--nu applies only to bijection g --inverse");
        if (bj_k < 1) return usage("--k must be >= 1");
        if (bj_inverse) {
          auto lambda =
              parfour::bijection_f_inverse(p, parse_strip_record(bj_record), bj_k);
          std::cout << "lambda=" << parfour::format_partition(lambda) << "\n";
        } else {
          if (bj_record_opt->count() > 0)
            return usage("--record applies only to bijection f --inverse");
          auto [mu, rec] = parfour::bijection_f(p, bj_k);
          std::cout << "mu=" << parfour::format_partition(mu) << "\n";
          for (auto it = rec.removed.rbegin(); it != rec.removed.rend(); ++it)
            std::cout << "h" << it->first << " x" << it->second << "\n";
          if (bj_k == 1)
            std::cout << "nu=" << parfour::format_partition(parfour::strip_record_to_nu(rec))
                      << "\n";
        }
      } else {
        if (bj_k_opt->count() > 0) return usage("bijection g takes --spec, not --k");
        if (bj_record_opt->count() > 0) return usage("--record applies only to bijection f");
        if (bj_spec_opt->count() == 0) return usage("bijection g requires --spec");
        if (bj_inverse) {
          auto nu = parfour::parse_partition(bj_nu);
          auto spec = parfour::parse_restriction_spec(bj_spec, p.size() + nu.size());
          auto lambda = parfour::bijection_g_inverse(p, nu, spec);
          std::cout << "lambda=" << parfour::format_partition(lambda) << "\n";
        } else {
          if (bj_nu_opt->count() > 0) return usage("--nu applies only to bijection g --inverse");
          auto spec = parfour::parse_restriction_spec(bj_spec, p.size());
          auto [mu, nu] = parfour::bijection_g(p, spec);
          std::cout << "mu=" << parfour::format_partition(mu) << "\n";
          std::cout << "nu=" << parfour::format_partition(nu) << "\n";
        }
      }
      return 0;
    }

    if (*cmd_stats) {
      auto p = parfour::parse_partition(st_partition);
      auto e = parfour::statistics(p);
      auto t = parfour::specialize_stats(e);
      std::cout << "alpha=" << e.ea << " beta=" << e.eb << " gamma=" << e.ec
                << " delta=" << e.ed << " theta=" << t.er << " theta'=" << t.es
                << " n=" << t.eq << " w=" << parfour::monomial_string(e) << "\n";
      return 0;
    }

    if (*cmd_andrews) {
      if (an_degree < 0) return usage("--degree must be >= 0");
      if (an_threads < 1) return usage("--threads must be >= 1");
      auto product = parfour::expand_product(parfour::andrews_factors(an_degree), an_degree);
      auto enumerated = parfour::brute_andrews(an_degree, an_threads);
      auto specialized = parfour::specialize(parfour::brute_phi(an_degree, an_threads));
      auto d1 = parfour::equals(product, enumerated);
      auto d2 = parfour::equals(enumerated, specialized);
      std::cout << "product-vs-enumeration: " << (d1.equal ? "pass" : "fail") << "\n";
      std::cout << "enumeration-vs-specialization: " << (d2.equal ? "pass" : "fail") << "\n";
      bool ok = d1.equal && d2.equal;
      std::cout << "result: " << (ok ? "pass" : "fail") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const parfour::ParseError& e) {
    return usage(e.what());
  } catch (const parfour::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    return usage(e.what());
  }
  return usage("no subcommand given");
}
