#pragma once

#include "monoid.hpp"
#include "sset.hpp"

#include <string>
#include <vector>

namespace segalbar {

// truncated bisimplicial set: the element at grid spot (n, m) of a double nerve
// is an n-tuple of columns, each column an m-tuple, flattened in that order
struct BiSSet {
  int htrunc = 0;  // horizontal truncation N
  int vtrunc = 0;  // vertical truncation M
  std::vector<std::vector<std::vector<std::string>>> levels;  // levels[n][m]
  // hfaces[n][m][i]: X_{n,m} -> X_{n-1,m};  hdegens[n][m][i]: X_{n,m} -> X_{n+1,m}
  // vfaces[n][m][i]: X_{n,m} -> X_{n,m-1};  vdegens[n][m][i]: X_{n,m} -> X_{n,m+1}
  std::vector<std::vector<std::vector<std::vector<int>>>> hfaces, hdegens, vfaces, vdegens;

  int level_size(int n, int m) const { return static_cast<int>(levels[n][m].size()); }
  bool operator==(const BiSSet&) const = default;
};

void validate_bisset_shape(const BiSSet& x);

BiSSet double_nerve(const FinMonoid& m, int htrunc, int vtrunc);

// (x external-product y)_{n,m} = x_n paired with y_m
BiSSet external_product(const SSet& x, const SSet& y);

SSet row(const BiSSet& x, int m);
SSet column(const BiSSet& x, int n);

// row/column identities plus commutation of every horizontal/vertical generator pair
std::vector<std::string> bisset_identities_check(const BiSSet& x);

struct DoubleSegalPart {
  std::string name;
  SegalReport report;
};

struct DoubleSegalReport {
  bool pass = false;
  std::vector<DoubleSegalPart> parts;
};

DoubleSegalReport double_segal_check(const BiSSet& x, segal_mode mode);

struct PNaturality {
  bool pass = false;
  std::string witness;
};

PNaturality p_naturality_check(const BiSSet& x);

struct EckmannHilton {
  FinMonoid horizontal;
  FinMonoid vertical;
  bool units_equal = false;
  bool interchange = false;
  bool products_equal = false;
  bool commutative = false;
  std::string witness;

  bool ok() const { return units_equal && interchange && products_equal && commutative; }
};

EckmannHilton eckmann_hilton(const BiSSet& x);

BiSSet bisset_from_json(const std::string& text);
std::string bisset_to_json(const BiSSet& x);

}  // namespace segalbar
