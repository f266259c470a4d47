#include "maps.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace segalbar {

void fail(status_code c, const std::string& msg) { throw error(c, msg); }

namespace {

std::string entries_text(const std::vector<int>& img) {
  std::string out = "[";
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) out += ",";
    out += img[i] == undef ? std::string("_") : std::to_string(img[i]);
  }
  return out + "]";
}

void check_sizes(int n, int m, const std::vector<int>& img, const char* kind) {
  if (n < 0 || m < 0) fail(status_code::invalid, std::string(kind) + ": negative ordinal size");
  if (static_cast<int>(img.size()) != n)
    fail(status_code::invalid, std::string(kind) + ": expected " + std::to_string(n) +
                                   " entries, got " + std::to_string(img.size()));
}

}  // namespace

TotalMap::TotalMap(int n, int m, std::vector<int> images) : src(n), tgt(m), img(std::move(images)) {
  check_sizes(n, m, img, "total map");
  if (n > 0 && m == 0) fail(status_code::invalid, "total map: no maps from a nonempty ordinal to 0");
  int last = 0;
  for (int i = 0; i < n; ++i) {
    if (img[i] < 0 || img[i] >= m)
      fail(status_code::invalid, "total map: entry " + std::to_string(img[i]) + " out of range");
    if (img[i] < last) fail(status_code::invalid, "total map: entries must be nondecreasing");
    last = img[i];
  }
}

PartialMap::PartialMap(int n, int m, std::vector<int> images)
    : src(n), tgt(m), img(std::move(images)) {
  check_sizes(n, m, img, "partial map");
  int last = 0;
  for (int i = 0; i < n; ++i) {
    if (img[i] == undef) continue;
    if (img[i] < 0 || img[i] >= m)
      fail(status_code::invalid, "partial map: entry " + std::to_string(img[i]) + " out of range");
    if (img[i] < last) fail(status_code::invalid, "partial map: defined entries must be nondecreasing");
    last = img[i];
  }
}

IntervalMap::IntervalMap(int n, int m, std::vector<int> images)
    : src(n), tgt(m), img(std::move(images)) {
  check_sizes(n, m, img, "interval map");
  if (n < 2 || m < 2) fail(status_code::invalid, "interval map: ordinals must have size >= 2");
  int last = 0;
  for (int i = 0; i < n; ++i) {
    if (img[i] < 0 || img[i] >= m)
      fail(status_code::invalid, "interval map: entry " + std::to_string(img[i]) + " out of range");
    if (img[i] < last) fail(status_code::invalid, "interval map: entries must be nondecreasing");
    last = img[i];
  }
  if (img.front() != 0) fail(status_code::invalid, "interval map: bottom must map to bottom");
  if (img.back() != m - 1) fail(status_code::invalid, "interval map: top must map to top");
}

OpArrow op_from_underlying(TotalMap f) {
  if (f.src < 1 || f.tgt < 1)
    fail(status_code::invalid, "op arrow: underlying map must run between nonempty ordinals");
  OpArrow a;
  a.dom = f.tgt - 1;
  a.cod = f.src - 1;
  a.underlying = std::move(f);
  return a;
}

TotalMap identity_total(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return TotalMap(n, n, std::move(img));
}

PartialMap identity_partial(int n) { return to_partial(identity_total(n)); }

IntervalMap identity_interval(int n) { return to_interval(identity_total(n)); }

OpArrow identity_op(int level) {
  if (level < 0) fail(status_code::invalid, "op arrow: negative level");
  return op_from_underlying(identity_total(level + 1));
}

TotalMap compose(const TotalMap& g, const TotalMap& f) {
  if (f.tgt != g.src)
    fail(status_code::shape, "compose: target " + std::to_string(f.tgt) + " does not match source " +
                                 std::to_string(g.src));
  std::vector<int> img(f.src);
  for (int i = 0; i < f.src; ++i) img[i] = g.img[f.img[i]];
  return TotalMap(f.src, g.tgt, std::move(img));
}

PartialMap compose(const PartialMap& g, const PartialMap& f) {
  if (f.tgt != g.src)
    fail(status_code::shape, "compose: target " + std::to_string(f.tgt) + " does not match source " +
                                 std::to_string(g.src));
  std::vector<int> img(f.src);
  for (int i = 0; i < f.src; ++i) img[i] = f.img[i] == undef ? undef : g.img[f.img[i]];
  return PartialMap(f.src, g.tgt, std::move(img));
}

IntervalMap compose(const IntervalMap& g, const IntervalMap& f) {
  return to_interval(compose(to_total(g), to_total(f)));
}

OpArrow compose(const OpArrow& g, const OpArrow& f) {
  if (f.cod != g.dom)
    fail(status_code::shape, "compose: level " + std::to_string(f.cod) + " does not match level " +
                                 std::to_string(g.dom));
  return op_from_underlying(compose(f.underlying, g.underlying));
}

TotalMap tensor(const TotalMap& a, const TotalMap& b) {
  std::vector<int> img(a.src + b.src);
  for (int i = 0; i < a.src; ++i) img[i] = a.img[i];
  for (int i = 0; i < b.src; ++i) img[a.src + i] = a.tgt + b.img[i];
  return TotalMap(a.src + b.src, a.tgt + b.tgt, std::move(img));
}

PartialMap tensor(const PartialMap& a, const PartialMap& b) {
  std::vector<int> img(a.src + b.src);
  for (int i = 0; i < a.src; ++i) img[i] = a.img[i];
  for (int i = 0; i < b.src; ++i) img[a.src + i] = b.img[i] == undef ? undef : a.tgt + b.img[i];
  return PartialMap(a.src + b.src, a.tgt + b.tgt, std::move(img));
}

PartialMap to_partial(const TotalMap& f) { return PartialMap(f.src, f.tgt, f.img); }

IntervalMap to_interval(const TotalMap& f) { return IntervalMap(f.src, f.tgt, f.img); }

TotalMap to_total(const IntervalMap& f) { return TotalMap(f.src, f.tgt, f.img); }

TotalMap mu1() { return TotalMap(2, 1, {0, 0}); }

TotalMap eta1() { return TotalMap(0, 1, {}); }

PartialMap pi1() { return PartialMap(1, 0, {undef}); }

TotalMap delta(int i, int n) {
  if (i < 0 || i > n) fail(status_code::invalid, "delta: index out of range");
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = x < i ? x : x + 1;
  return TotalMap(n, n + 1, std::move(img));
}

TotalMap sigma(int i, int n) {
  if (n < 2 || i < 0 || i > n - 2) fail(status_code::invalid, "sigma: index out of range");
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = x <= i ? x : x - 1;
  return TotalMap(n, n - 1, std::move(img));
}

std::vector<TotalMap> enumerate_total(int n, int m) {
  std::vector<TotalMap> out;
  if (n > 0 && m == 0) return out;
  std::vector<int> cur(n);
  // odometer over nondecreasing sequences
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == n) {
      out.emplace_back(n, m, cur);
      return;
    }
    for (int v = lo; v < m; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<PartialMap> enumerate_partial(int n, int m) {
  std::vector<PartialMap> out;
  std::vector<int> cur(n);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == n) {
      out.emplace_back(n, m, cur);
      return;
    }
    cur[pos] = undef;
    rec(pos + 1, lo);
    for (int v = lo; v < m; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<IntervalMap> enumerate_interval(int n, int m) {
  std::vector<IntervalMap> out;
  if (n < 2 || m < 2) fail(status_code::invalid, "enumerate: interval ordinals must have size >= 2");
  std::vector<int> cur(n);
  cur[0] = 0;
  cur[n - 1] = m - 1;
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == n - 1) {
      out.emplace_back(n, m, cur);
      return;
    }
    for (int v = lo; v < m; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(1, 0);
  return out;
}

std::vector<OpArrow> enumerate_op(int dom, int cod) {
  std::vector<OpArrow> out;
  for (auto& f : enumerate_total(cod + 1, dom + 1)) out.push_back(op_from_underlying(f));
  return out;
}

std::string gen_name(const GenTag& t) {
  return (t.kind == GenTag::Kind::face ? "d" : "s") + std::to_string(t.index) + "^" +
         std::to_string(t.level);
}

OpArrow face_op(int level, int i) {
  if (level < 1) fail(status_code::invalid, "face: level must be >= 1");
  return op_from_underlying(delta(i, level));
}

OpArrow degen_op(int level, int i) {
  if (level < 0) fail(status_code::invalid, "degeneracy: negative level");
  return op_from_underlying(sigma(i, level + 2));
}

std::vector<GenTag> factorize(const OpArrow& a) {
  const TotalMap& f = a.underlying;
  std::vector<int> collapses;
  for (int j = 0; j + 1 < f.src; ++j)
    if (f.img[j] == f.img[j + 1]) collapses.push_back(j);
  std::vector<bool> hit(f.tgt, false);
  for (int v : f.img) hit[v] = true;
  std::vector<int> gaps;
  for (int v = 0; v < f.tgt; ++v)
    if (!hit[v]) gaps.push_back(v);

  std::vector<GenTag> tags;
  int level = a.dom;
  for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) {
    tags.push_back({GenTag::Kind::face, *it, level});
    --level;
  }
  for (int j : collapses) {
    tags.push_back({GenTag::Kind::degeneracy, j, level});
    ++level;
  }
  return tags;
}

OpArrow recompose(int dom_level, const std::vector<GenTag>& tags) {
  OpArrow a = identity_op(dom_level);
  for (const GenTag& t : tags) {
    if (t.level != a.cod)
      fail(status_code::shape, "recompose: generator " + gen_name(t) + " applied at level " +
                                   std::to_string(a.cod));
    a = compose(t.kind == GenTag::Kind::face ? face_op(t.level, t.index)
                                             : degen_op(t.level, t.index),
                a);
  }
  return a;
}

std::string format_map(const TotalMap& f) {
  return std::to_string(f.src) + "→" + std::to_string(f.tgt) + ":" + entries_text(f.img);
}

std::string format_map(const PartialMap& f) {
  return std::to_string(f.src) + "⇀" + std::to_string(f.tgt) + ":" + entries_text(f.img);
}

std::string format_map(const IntervalMap& f) {
  return std::to_string(f.src) + "→" + std::to_string(f.tgt) + ":" + entries_text(f.img);
}

std::string format_map(const AnyMap& f) {
  return std::visit([](const auto& m) { return format_map(m); }, f);
}

namespace {

int parse_int(const std::string& s) {
  if (s.empty()) fail(status_code::parse, "map notation: expected a number");
  for (char c : s)
    if (c < '0' || c > '9') fail(status_code::parse, "map notation: bad number '" + s + "'");
  return std::stoi(s);
}

}  // namespace

AnyMap parse_map(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;

  bool partial = false;
  size_t arrow_pos = std::string::npos;
  size_t arrow_len = 0;
  for (auto [tok, part] : {std::pair<const char*, bool>{"→", false},
                           {"->", false},
                           {"⇀", true},
                           {"~>", true}}) {
    size_t p = s.find(tok);
    if (p != std::string::npos) {
      arrow_pos = p;
      arrow_len = std::string(tok).size();
      partial = part;
      break;
    }
  }
  if (arrow_pos == std::string::npos) fail(status_code::parse, "map notation: missing arrow");

  size_t colon = s.find(':', arrow_pos);
  if (colon == std::string::npos || colon + 1 >= s.size() || s[colon + 1] != '[' || s.back() != ']')
    fail(status_code::parse, "map notation: expected ':[entries]'");

  int n = parse_int(s.substr(0, arrow_pos));
  int m = parse_int(s.substr(arrow_pos + arrow_len, colon - arrow_pos - arrow_len));

  std::vector<int> img;
  std::string body = s.substr(colon + 2, s.size() - colon - 3);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "_") {
        if (!partial) fail(status_code::parse, "map notation: '_' only occurs in partial maps");
        img.push_back(undef);
      } else {
        img.push_back(parse_int(item));
      }
    }
    if (body.back() == ',') fail(status_code::parse, "map notation: trailing comma");
  }

  try {
    if (partial) return PartialMap(n, m, std::move(img));
    return TotalMap(n, m, std::move(img));
  } catch (const error& e) {
    fail(status_code::parse, e.what());
  }
}

}  // namespace segalbar
