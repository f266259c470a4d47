#pragma once

#include "maps.hpp"
#include "monoid.hpp"

#include <string>
#include <vector>

namespace segalbar {

inline constexpr long long max_cells = 1 << 20;

// truncated simplicial set: ordered label lists per level, generators as index arrays
struct SSet {
  int trunc = 0;
  std::vector<std::vector<std::string>> levels;       // levels[n], 0 <= n <= trunc
  std::vector<std::vector<std::vector<int>>> faces;   // faces[n][i]: X_n -> X_{n-1}, 1 <= n
  std::vector<std::vector<std::vector<int>>> degens;  // degens[n][i]: X_n -> X_{n+1}, n < trunc

  int level_size(int n) const { return static_cast<int>(levels[n].size()); }
  bool operator==(const SSet&) const = default;
};

void validate_shape(const SSet& x);

SSet nerve(const FinMonoid& m, int trunc);
SSet constant_sset(const std::vector<std::string>& labels, int trunc);

std::vector<GenTag> all_gen_tags(int trunc);
OpArrow tag_arrow(const GenTag& t);
const std::vector<int>& gen_table(const SSet& x, const GenTag& t);

// applies generator tables along an explicit application-ordered tag word
std::vector<int> eval_tags(const SSet& x, int dom, const std::vector<GenTag>& tags);
// evaluates an arbitrary arrow through its canonical factorization
std::vector<int> eval_arrow(const SSet& x, const OpArrow& a);

// compares all parallel generator words of length <= 2 with equal underlying arrows
std::vector<std::string> simplicial_identities_check(const SSet& x);

// tuple of edge evaluations, one X_1 index per component
std::vector<std::vector<int>> p_map(const SSet& x, int n);

enum class segal_mode { strict, bijective };

struct SegalLevel {
  int level = 0;
  bool pass = false;
  std::string witness;
};

struct SegalReport {
  segal_mode mode = segal_mode::strict;
  bool pass = false;
  std::vector<SegalLevel> levels;
};

SegalReport segal_check(const SSet& x, segal_mode mode);

FinMonoid reconstruct_monoid(const SSet& x, int required_trunc = 3);

struct BarEquality {
  bool equal = false;
  std::string counterexample;
};

BarEquality verify_bar_equality(const SSet& x, const FinMonoid& m);

struct ProductSSet {
  SSet sset;
  std::vector<std::vector<int>> proj1;  // per level, pair index -> X index
  std::vector<std::vector<int>> proj2;
};

ProductSSet product(const SSet& x, const SSet& y);

SSet sset_from_json(const std::string& text);
std::string sset_to_json(const SSet& x);

}  // namespace segalbar
