#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace segalbar {

enum class status_code { ok = 0, invalid, parse, shape, check, bound };

struct error : std::runtime_error {
  status_code code;
  error(status_code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] void fail(status_code c, const std::string& msg);

// marker for undefined positions of a partial map
inline constexpr int undef = -1;

// order-preserving total function between finite ordinals n = {0,...,n-1}
struct TotalMap {
  int src = 0;
  int tgt = 0;
  std::vector<int> img;

  TotalMap() = default;
  TotalMap(int n, int m, std::vector<int> images);
  int operator()(int i) const { return img[i]; }
  bool operator==(const TotalMap&) const = default;
};

// order-preserving partial function; undefined positions hold `undef`
struct PartialMap {
  int src = 0;
  int tgt = 0;
  std::vector<int> img;

  PartialMap() = default;
  PartialMap(int n, int m, std::vector<int> images);
  int operator()(int i) const { return img[i]; }
  bool defined(int i) const { return img[i] != undef; }
  bool operator==(const PartialMap&) const = default;
};

// monotone map between ordinals of size >= 2 sending bottom to bottom, top to top
struct IntervalMap {
  int src = 0;
  int tgt = 0;
  std::vector<int> img;

  IntervalMap() = default;
  IntervalMap(int n, int m, std::vector<int> images);
  int operator()(int i) const { return img[i]; }
  bool operator==(const IntervalMap&) const = default;
};

// arrow [dom] -> [cod] of the opposite simplex category, stored contravariantly:
// the underlying total map runs ordinal cod+1 -> ordinal dom+1
struct OpArrow {
  int dom = 0;
  int cod = 0;
  TotalMap underlying;

  bool operator==(const OpArrow&) const = default;
};

OpArrow op_from_underlying(TotalMap f);

using AnyMap = std::variant<TotalMap, PartialMap, IntervalMap>;

TotalMap identity_total(int n);
PartialMap identity_partial(int n);
IntervalMap identity_interval(int n);
OpArrow identity_op(int level);

TotalMap compose(const TotalMap& g, const TotalMap& f);
PartialMap compose(const PartialMap& g, const PartialMap& f);
IntervalMap compose(const IntervalMap& g, const IntervalMap& f);
OpArrow compose(const OpArrow& g, const OpArrow& f);

TotalMap tensor(const TotalMap& a, const TotalMap& b);
PartialMap tensor(const PartialMap& a, const PartialMap& b);

PartialMap to_partial(const TotalMap& f);
IntervalMap to_interval(const TotalMap& f);
TotalMap to_total(const IntervalMap& f);

// multiplication 2 -> 1
TotalMap mu1();
// unit 0 -> 1
TotalMap eta1();
// the unique partial arrow 1 -> 0
PartialMap pi1();

// injection n -> n+1 skipping value i, 0 <= i <= n
TotalMap delta(int i, int n);
// surjection n -> n-1 merging i and i+1, 0 <= i <= n-2
TotalMap sigma(int i, int n);

// all maps of a kind, ordered lexicographically by images with undefined < 0
std::vector<TotalMap> enumerate_total(int n, int m);
std::vector<PartialMap> enumerate_partial(int n, int m);
std::vector<IntervalMap> enumerate_interval(int n, int m);
std::vector<OpArrow> enumerate_op(int dom, int cod);

struct GenTag {
  enum class Kind { face, degeneracy };
  Kind kind;
  int index;
  int level;  // level at which the generator is applied

  bool operator==(const GenTag&) const = default;
};

std::string gen_name(const GenTag& t);

// face arrow [level] -> [level-1]
OpArrow face_op(int level, int i);
// degeneracy arrow [level] -> [level+1]
OpArrow degen_op(int level, int i);

// canonical generator factorization, in application order:
// faces with descending index first, then degeneracies with ascending index
std::vector<GenTag> factorize(const OpArrow& a);
OpArrow recompose(int dom_level, const std::vector<GenTag>& tags);

std::string format_map(const TotalMap& f);
std::string format_map(const PartialMap& f);
std::string format_map(const IntervalMap& f);
std::string format_map(const AnyMap& f);

// parses the canonical notation, e.g. "3→2:[0,0,1]" or "2⇀1:[_,0]";
// ASCII aliases "->" and "~>" are accepted
AnyMap parse_map(const std::string& text);

}  // namespace segalbar
