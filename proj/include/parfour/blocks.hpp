#pragma once

#include <map>
#include <utility>

#include "parfour/partition.hpp"

namespace parfour {

enum class BlockKind { I, II };  // I: two equal rows; II: top > bottom (bottom may be 0)

struct Block {
  long long top = 0;
  long long bottom = 0;
  BlockKind kind = BlockKind::I;
  bool operator==(const Block&) const = default;
  auto operator<=>(const Block&) const = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // stacking order, top row pair first
  long long k = 1;
  bool operator==(const BlockDecomposition&) const = default;
};

// Removed width-2k rectangles: odd height -> count (stored counts >= 1).
struct StripRecord {
  std::map<long long, long long> removed;
  bool operator==(const StripRecord&) const = default;
};

Block make_block(long long top, long long bottom);

// (ceil(top/2), floor(top/2), ceil(bottom/2), floor(bottom/2)): the cell-label
// counts of a two-row block whose top row sits at an odd level.
ExponentVector block_weight(const Block& b);

// Cell-label counts of a width-2k, height-h rectangle, computed by explicit
// cell enumeration at column offset 0. h must be odd.
ExponentVector type3_weight(long long h, long long k);

// Same count with the rectangle's columns shifted right by `offset`; the
// result is offset-independent, which tests assert rather than assume.
ExponentVector type3_weight_at_offset(long long h, long long k, long long offset);

// Pairs consecutive parts (padding one 0 for an odd part count) into blocks.
// Requires in_gap_class(p, k).
BlockDecomposition decompose(const Partition& p, long long k);

// Inverse of decompose: concatenates block rows, dropping a trailing 0.
Partition recompose(const BlockDecomposition& d);

// Strips the maximal number of width-2k odd-height rectangles from every
// padded row pair (floor(gap/2k) at pair m, each of height 2m-1); the
// remainder lies in the gap class. All parts must share one residue mod k.
std::pair<Partition, StripRecord> bijection_f(const Partition& p, long long k);

Partition bijection_f_inverse(const Partition& mu, const StripRecord& rec, long long k);

// k=1 presentation of a record: 2*count parts equal to each height.
Partition strip_record_to_nu(const StripRecord& rec);

// Splits each part multiplicity m into m mod rho(r) (kept in mu) and the
// removed multiple; part values outside domain(rho) go wholly to mu.
// Returns (mu, nu) with mu in Par(i,k;R,rho).
std::pair<Partition, Partition> bijection_g(const Partition& p, const RestrictionSpec& spec);

Partition bijection_g_inverse(const Partition& mu, const Partition& nu,
                              const RestrictionSpec& spec);

}  // namespace parfour
