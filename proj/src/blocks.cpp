#include "parfour/blocks.hpp"

#include <algorithm>
#include <set>

namespace parfour {

Block make_block(long long top, long long bottom) {
  if (bottom < 0 || top < bottom || top < 1) throw DomainError("invalid block rows");
  return Block{top, bottom, top == bottom ? BlockKind::I : BlockKind::II};
}

ExponentVector block_weight(const Block& b) {
  return {(b.top + 1) / 2, b.top / 2, (b.bottom + 1) / 2, b.bottom / 2};
}

ExponentVector type3_weight_at_offset(long long h, long long k, long long offset) {
  if (h < 1 || h % 2 == 0) throw DomainError("type III height must be odd and positive");
  if (k < 1) throw DomainError("gap parameter k must be positive");
  if (offset < 0) throw DomainError("negative column offset");
  ExponentVector e;
  for (long long row = 1; row <= h; ++row) {
    for (long long col = offset + 1; col <= offset + 2 * k; ++col) {
      switch (cell_label(row, col)) {
        case 'a': ++e.ea; break;
        case 'b': ++e.eb; break;
        case 'c': ++e.ec; break;
        default: ++e.ed; break;
      }
    }
  }
  return e;
}

ExponentVector type3_weight(long long h, long long k) {
  return type3_weight_at_offset(h, k, 0);
}

BlockDecomposition decompose(const Partition& p, long long k) {
  if (!in_gap_class(p, k))
    throw GapClassError("partition is not in gap class k=" + std::to_string(k));
  BlockDecomposition d;
  d.k = k;
  for (size_t m = 0; m < p.parts.size(); m += 2) {
    long long top = p.parts[m];
    long long bottom = m + 1 < p.parts.size() ? p.parts[m + 1] : 0;
    d.blocks.push_back(make_block(top, bottom));
  }
  return d;
}

Partition recompose(const BlockDecomposition& d) {
  std::set<long long> ii_tops;
  for (const Block& b : d.blocks) {
    Block checked = make_block(b.top, b.bottom);
    if (checked.kind != b.kind) throw DomainError("block kind does not match its rows");
    if (b.kind == BlockKind::II && !ii_tops.insert(b.top).second)
      throw DomainError("duplicate Type II top length");
  }
  std::vector<long long> parts;
  for (size_t m = 0; m < d.blocks.size(); ++m) {
    if (m + 1 < d.blocks.size() && d.blocks[m].bottom < d.blocks[m + 1].top)
      throw DomainError("non-stackable sequence");
    parts.push_back(d.blocks[m].top);
    parts.push_back(d.blocks[m].bottom);
  }
  if (!parts.empty() && parts.back() == 0) parts.pop_back();
  return make_partition(parts);
}

namespace {

void check_uniform_residue(const Partition& p, long long k) {
  if (k < 1) throw DomainError("gap parameter k must be positive");
  for (size_t m = 1; m < p.parts.size(); ++m)
    if (p.parts[m] % k != p.parts[0] % k) throw DomainError("part-residue violation");
}

}  // namespace

std::pair<Partition, StripRecord> bijection_f(const Partition& p, long long k) {
  check_uniform_residue(p, k);
  StripRecord rec;
  size_t padded = p.parts.size() + p.parts.size() % 2;
  std::vector<long long> mu(p.parts);
  mu.resize(padded, 0);
  long long columns_below = 0;  // removed columns crossing a row, bottom-up
  for (size_t m = padded; m >= 2; m -= 2) {
    long long gap = mu[m - 2] - mu[m - 1];
    long long strips = gap / (2 * k);
    long long height = static_cast<long long>(m) - 1;
    if (strips > 0) rec.removed[height] = strips;
    mu[m - 1] -= columns_below;
    columns_below += 2 * k * strips;
    mu[m - 2] -= columns_below;
  }
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return {make_partition(mu), rec};
}

Partition bijection_f_inverse(const Partition& mu, const StripRecord& rec, long long k) {
  if (k < 1) throw DomainError("gap parameter k must be positive");
  if (!in_gap_class(mu, k)) throw DomainError("base partition is not in gap class");
  for (const auto& [h, count] : rec.removed)
    if (h < 1 || h % 2 == 0 || count < 1) throw DomainError("invalid record heights");
  std::vector<long long> parts(mu.parts);
  if (!rec.removed.empty()) {
    long long deepest = rec.removed.rbegin()->first;
    if (static_cast<long long>(parts.size()) < deepest)
      parts.resize(static_cast<size_t>(deepest), 0);
  }
  for (const auto& [h, count] : rec.removed)
    for (long long row = 0; row < h; ++row) parts[static_cast<size_t>(row)] += 2 * k * count;
  return make_partition(parts);
}

Partition strip_record_to_nu(const StripRecord& rec) {
  std::vector<long long> parts;
  for (auto it = rec.removed.rbegin(); it != rec.removed.rend(); ++it)
    parts.insert(parts.end(), static_cast<size_t>(2 * it->second), it->first);
  return make_partition(parts);
}

std::pair<Partition, Partition> bijection_g(const Partition& p, const RestrictionSpec& spec) {
  long long rem = ((spec.i % spec.k) + spec.k) % spec.k;
  for (long long part : p.parts)
    if (part % spec.k != rem) throw DomainError("residue violation");
  std::vector<long long> mu, nu;
  size_t m = 0;
  while (m < p.parts.size()) {  // parts arrive in decreasing order
    long long value = p.parts[m];
    size_t end = m;
    while (end < p.parts.size() && p.parts[end] == value) ++end;
    long long mult = static_cast<long long>(end - m);
    auto it = spec.rho.find(value);
    long long removed = it == spec.rho.end() ? 0 : it->second * (mult / it->second);
    nu.insert(nu.end(), static_cast<size_t>(removed), value);
    mu.insert(mu.end(), static_cast<size_t>(mult - removed), value);
    m = end;
  }
  return {make_partition(mu), make_partition(nu)};
}

Partition bijection_g_inverse(const Partition& mu, const Partition& nu,
                              const RestrictionSpec& spec) {
  if (!in_restricted_class(mu, spec))
    throw DomainError("base partition is not in the restricted class");
  std::map<long long, long long> nu_mult;
  for (long long part : nu.parts) ++nu_mult[part];
  for (const auto& [value, mult] : nu_mult) {
    auto it = spec.rho.find(value);
    if (it == spec.rho.end()) throw DomainError("removed part outside domain(rho)");
    if (mult % it->second != 0) throw DomainError("removed multiplicity not a multiple of rho");
  }
  std::vector<long long> parts(mu.parts);
  parts.insert(parts.end(), nu.parts.begin(), nu.parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return make_partition(parts);
}

}  // namespace parfour
