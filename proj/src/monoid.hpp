#pragma once

#include "maps.hpp"

namespace segalbar {

struct FinMonoid {
  std::vector<std::string> elements;
  int unit = 0;
  std::vector<std::vector<int>> table;

  int order() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  bool operator==(const FinMonoid&) const = default;
};

// checks label sanity, table closure, unit laws, and associativity;
// failures carry the offending elements in the message
FinMonoid validate_monoid(std::vector<std::string> elements, int unit,
                          std::vector<std::vector<int>> table);

bool is_commutative(const FinMonoid& m);

// all tables on {e, a, b, c}[0..order) with the unit fixed at index 0,
// in lexicographic table order
std::vector<FinMonoid> enumerate_monoids(int order);

FinMonoid monoid_from_json(const std::string& text);
std::string monoid_to_json(const FinMonoid& m);

// flat tuple labels: () for arity 0, the bare atom for arity 1, (a,b,...) otherwise
std::string tuple_label(const std::vector<std::string>& atoms);
std::vector<std::string> parse_tuple_label(const std::string& label);

// all arity-tuples over the element labels, row-major in element order
std::vector<std::string> tuple_labels(const FinMonoid& m, int arity);

// saturates far above every cell bound instead of overflowing
long long int_pow(int base, int exp);

std::vector<int> tuple_decode(long long t, int arity, int order);
long long tuple_encode(const std::vector<int>& digits, int order);

// evaluation of a partial map on tuples: output slot j collects the ordered
// product of the inputs it indexes, empty products give the unit
std::vector<int> f_eval(const PartialMap& g, const FinMonoid& m);

}  // namespace segalbar
