#include "segalbar.h"

#include "bisset.hpp"
#include "functors.hpp"
#include "maps.hpp"
#include "monoid.hpp"
#include "render.hpp"
#include "sset.hpp"
#include "verify.hpp"

#include <algorithm>
#include <cstring>
#include <string>

struct segalbar_monoid {
  segalbar::FinMonoid v;
};

struct segalbar_sset {
  segalbar::SSet v;
};

struct segalbar_bisset {
  segalbar::BiSSet v;
};

namespace {

using namespace segalbar;

thread_local std::string g_last_error;

segalbar_status to_status(status_code c) {
  switch (c) {
    case status_code::ok: return SEGALBAR_OK;
    case status_code::invalid: return SEGALBAR_ERR_INVALID;
    case status_code::parse: return SEGALBAR_ERR_PARSE;
    case status_code::shape: return SEGALBAR_ERR_SHAPE;
    case status_code::check: return SEGALBAR_ERR_CHECK;
    case status_code::bound: return SEGALBAR_ERR_BOUND;
  }
  return SEGALBAR_ERR_INTERNAL;
}

template <typename F>
segalbar_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SEGALBAR_OK;
  } catch (const error& e) {
    g_last_error = e.what();
    return to_status(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SEGALBAR_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) fail(status_code::invalid, what);
}

enum class MapKind { total, partial, interval, op };

MapKind parse_kind(const char* kind) {
  require(kind != nullptr, "null kind");
  std::string k = kind;
  if (k == "total") return MapKind::total;
  if (k == "partial") return MapKind::partial;
  if (k == "interval") return MapKind::interval;
  if (k == "op") return MapKind::op;
  fail(status_code::invalid, "unknown map kind '" + k + "'");
}

TotalMap as_total(const AnyMap& m, const char* what) {
  if (!std::holds_alternative<TotalMap>(m))
    fail(status_code::parse, std::string(what) + ": expected total notation");
  return std::get<TotalMap>(m);
}

PartialMap as_partial(const AnyMap& m) {
  if (std::holds_alternative<TotalMap>(m)) return to_partial(std::get<TotalMap>(m));
  if (std::holds_alternative<PartialMap>(m)) return std::get<PartialMap>(m);
  fail(status_code::parse, "expected total or partial notation");
}

AnyMap parse_as(MapKind kind, const char* text) {
  require(text != nullptr, "null map text");
  auto m = parse_map(text);
  switch (kind) {
    case MapKind::total: return as_total(m, "total");
    case MapKind::partial: return as_partial(m);
    case MapKind::interval: return to_interval(as_total(m, "interval"));
    case MapKind::op: return as_total(m, "op");
  }
  fail(status_code::invalid, "unknown map kind");
}

segal_mode parse_mode(const char* mode) {
  require(mode != nullptr, "null mode");
  std::string m = mode;
  if (m == "strict") return segal_mode::strict;
  if (m == "bijective") return segal_mode::bijective;
  fail(status_code::invalid, "unknown mode '" + m + "', expected strict or bijective");
}

}  // namespace

extern "C" {

const char* segalbar_last_error(void) { return g_last_error.c_str(); }

void segalbar_string_free(char* text) { delete[] text; }

segalbar_status segalbar_map_normalize(const char* kind, const char* text, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    auto k = parse_kind(kind);
    auto m = parse_as(k, text);
    if (k == MapKind::op) {
      auto a = op_from_underlying(std::get<TotalMap>(m));
      *out = dup_string(format_map(a.underlying));
    } else {
      *out = dup_string(format_map(m));
    }
  });
}

segalbar_status segalbar_hom(const char* kind, int dom, int cod, char** out,
                             long long* count) {
  return guard([&] {
    require(out != nullptr, "null output");
    auto k = parse_kind(kind);
    int size_cap = 8;
    require(dom >= 0 && cod >= 0, "hom: negative ordinal");
    if (dom > size_cap || cod > size_cap)
      fail(status_code::bound, "hom: ordinal sizes above 8 are not enumerated");
    std::string text;
    long long n = 0;
    auto emit = [&](const std::string& line) {
      text += line + "\n";
      ++n;
    };
    switch (k) {
      case MapKind::total:
        for (const auto& f : enumerate_total(dom, cod)) emit(format_map(f));
        break;
      case MapKind::partial:
        for (const auto& f : enumerate_partial(dom, cod)) emit(format_map(f));
        break;
      case MapKind::interval:
        for (const auto& f : enumerate_interval(dom, cod)) emit(format_map(f));
        break;
      case MapKind::op:
        for (const auto& a : enumerate_op(dom, cod)) emit(format_map(a.underlying));
        break;
    }
    *out = dup_string(text);
    if (count) *count = n;
  });
}

segalbar_status segalbar_compose(const char* kind, const char* f, const char* g, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    auto k = parse_kind(kind);
    auto mf = parse_as(k, f);
    auto mg = parse_as(k, g);
    switch (k) {
      case MapKind::total:
        *out = dup_string(format_map(compose(std::get<TotalMap>(mg), std::get<TotalMap>(mf))));
        return;
      case MapKind::partial:
        *out = dup_string(
            format_map(compose(std::get<PartialMap>(mg), std::get<PartialMap>(mf))));
        return;
      case MapKind::interval:
        *out = dup_string(
            format_map(compose(std::get<IntervalMap>(mg), std::get<IntervalMap>(mf))));
        return;
      case MapKind::op: {
        auto af = op_from_underlying(std::get<TotalMap>(mf));
        auto ag = op_from_underlying(std::get<TotalMap>(mg));
        *out = dup_string(format_map(compose(ag, af).underlying));
        return;
      }
    }
  });
}

segalbar_status segalbar_tensor(const char* kind, const char* f, const char* g, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    auto k = parse_kind(kind);
    if (k == MapKind::interval || k == MapKind::op)
      fail(status_code::invalid, "tensor: only total and partial maps have block sums");
    auto mf = parse_as(k, f);
    auto mg = parse_as(k, g);
    if (k == MapKind::total)
      *out = dup_string(format_map(tensor(std::get<TotalMap>(mf), std::get<TotalMap>(mg))));
    else
      *out =
          dup_string(format_map(tensor(std::get<PartialMap>(mf), std::get<PartialMap>(mg))));
  });
}

segalbar_status segalbar_functor(const char* name, const char* text, char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    require(name != nullptr, "null functor name");
    std::string fn = name;
    if (fn == "j") {
      auto a = op_from_underlying(as_total(parse_as(MapKind::op, text), "op"));
      *out = dup_string(format_map(j_map(a)));
    } else if (fn == "h") {
      auto f = std::get<IntervalMap>(parse_as(MapKind::interval, text));
      *out = dup_string(format_map(h_map(f)));
    } else if (fn == "hj") {
      auto a = op_from_underlying(as_total(parse_as(MapKind::op, text), "op"));
      *out = dup_string(format_map(hj_map(a)));
    } else {
      fail(status_code::invalid, "unknown functor '" + fn + "'");
    }
  });
}

segalbar_status segalbar_render_map(const char* kind, const char* text, const char* style,
                                    char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    require(style != nullptr, "null style");
    std::string st = style;
    if (st != "ascii" && st != "dot")
      fail(status_code::invalid, "unknown render style '" + st + "'");
    auto mode = st == "ascii" ? render_style::ascii : render_style::dot;
    auto k = parse_kind(kind);
    auto m = parse_as(k, text);
    if (k == MapKind::op) {
      auto a = op_from_underlying(std::get<TotalMap>(m));
      *out = dup_string(render_arrow(a.underlying, mode));
    } else {
      *out = dup_string(render_arrow(m, mode));
    }
  });
}

segalbar_status segalbar_monoid_read(const char* json, segalbar_monoid** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    require(json != nullptr, "null input");
    *out = new segalbar_monoid{monoid_from_json(json)};
  });
}

segalbar_status segalbar_monoid_write(const segalbar_monoid* m, char** json) {
  return guard([&] {
    require(m != nullptr, "null monoid");
    require(json != nullptr, "null output");
    *json = dup_string(monoid_to_json(m->v));
  });
}

void segalbar_monoid_free(segalbar_monoid* m) { delete m; }

segalbar_status segalbar_sset_read(const char* json, segalbar_sset** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    require(json != nullptr, "null input");
    *out = new segalbar_sset{sset_from_json(json)};
  });
}

segalbar_status segalbar_sset_write(const segalbar_sset* x, char** json) {
  return guard([&] {
    require(x != nullptr, "null simplicial set");
    require(json != nullptr, "null output");
    *json = dup_string(sset_to_json(x->v));
  });
}

void segalbar_sset_free(segalbar_sset* x) { delete x; }

segalbar_status segalbar_nerve(const segalbar_monoid* m, int trunc, segalbar_sset** out) {
  return guard([&] {
    require(m != nullptr, "null monoid");
    require(out != nullptr, "null output");
    *out = new segalbar_sset{nerve(m->v, trunc)};
  });
}

segalbar_status segalbar_segal_check(const segalbar_sset* x, const char* mode, int* pass,
                                     char** report) {
  return guard([&] {
    require(x != nullptr, "null simplicial set");
    require(pass != nullptr && report != nullptr, "null output");
    auto r = segal_check(x->v, parse_mode(mode));
    *pass = r.pass ? 1 : 0;
    *report = dup_string(render_summary(x->v, r));
  });
}

segalbar_status segalbar_identities_check(const segalbar_sset* x, int* pass, char** report) {
  return guard([&] {
    require(x != nullptr, "null simplicial set");
    require(pass != nullptr && report != nullptr, "null output");
    auto violations = simplicial_identities_check(x->v);
    *pass = violations.empty() ? 1 : 0;
    std::string text;
    for (const auto& v : violations) text += v + "\n";
    *report = dup_string(text);
  });
}

segalbar_status segalbar_reconstruct(const segalbar_sset* x, segalbar_monoid** out) {
  return guard([&] {
    require(x != nullptr, "null simplicial set");
    require(out != nullptr, "null output");
    *out = new segalbar_monoid{reconstruct_monoid(x->v)};
  });
}

segalbar_status segalbar_bar_equality(const segalbar_sset* x, const segalbar_monoid* m,
                                      int* pass, char** report) {
  return guard([&] {
    require(x != nullptr, "null simplicial set");
    require(m != nullptr, "null monoid");
    require(pass != nullptr && report != nullptr, "null output");
    auto r = verify_bar_equality(x->v, m->v);
    *pass = r.equal ? 1 : 0;
    *report = dup_string(r.counterexample);
  });
}

segalbar_status segalbar_render_sset(const segalbar_sset* x, const char* segal_mode_name,
                                     char** out) {
  return guard([&] {
    require(x != nullptr, "null simplicial set");
    require(out != nullptr, "null output");
    if (segal_mode_name == nullptr) {
      *out = dup_string(render_summary(x->v));
    } else {
      auto r = segal_check(x->v, parse_mode(segal_mode_name));
      *out = dup_string(render_summary(x->v, r));
    }
  });
}

segalbar_status segalbar_bisset_read(const char* json, segalbar_bisset** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    require(json != nullptr, "null input");
    *out = new segalbar_bisset{bisset_from_json(json)};
  });
}

segalbar_status segalbar_bisset_write(const segalbar_bisset* x, char** json) {
  return guard([&] {
    require(x != nullptr, "null bisimplicial set");
    require(json != nullptr, "null output");
    *json = dup_string(bisset_to_json(x->v));
  });
}

void segalbar_bisset_free(segalbar_bisset* x) { delete x; }

segalbar_status segalbar_double_nerve(const segalbar_monoid* m, int htrunc, int vtrunc,
                                      segalbar_bisset** out) {
  return guard([&] {
    require(m != nullptr, "null monoid");
    require(out != nullptr, "null output");
    *out = new segalbar_bisset{double_nerve(m->v, htrunc, vtrunc)};
  });
}

segalbar_status segalbar_double_segal_check(const segalbar_bisset* x, const char* mode,
                                            int* pass, char** report) {
  return guard([&] {
    require(x != nullptr, "null bisimplicial set");
    require(pass != nullptr && report != nullptr, "null output");
    auto r = double_segal_check(x->v, parse_mode(mode));
    auto nat = p_naturality_check(x->v);
    *pass = r.pass && nat.pass ? 1 : 0;
    std::string text = render_summary(x->v, r);
    text += nat.pass ? "naturality squares: pass\n"
                     : "naturality squares: FAIL: " + nat.witness + "\n";
    *report = dup_string(text);
  });
}

segalbar_status segalbar_eckmann_hilton(const segalbar_bisset* x, int* pass, char** report) {
  return guard([&] {
    require(x != nullptr, "null bisimplicial set");
    require(pass != nullptr && report != nullptr, "null output");
    auto r = eckmann_hilton(x->v);
    *pass = r.ok() ? 1 : 0;
    auto flag = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    std::string text;
    text += "units equal: " + flag(r.units_equal) + "\n";
    text += "products equal: " + flag(r.products_equal) + "\n";
    text += "interchange: " + flag(r.interchange) + "\n";
    text += "commutative: " + flag(r.commutative) + "\n";
    if (!r.witness.empty()) text += "witness: " + r.witness + "\n";
    text += "extracted product:\n" + monoid_to_json(r.horizontal) + "\n";
    *report = dup_string(text);
  });
}

segalbar_status segalbar_render_bisset(const segalbar_bisset* x, const char* segal_mode_name,
                                       char** out) {
  return guard([&] {
    require(x != nullptr, "null bisimplicial set");
    require(out != nullptr, "null output");
    if (segal_mode_name == nullptr) {
      *out = dup_string(render_summary(x->v));
    } else {
      auto r = double_segal_check(x->v, parse_mode(segal_mode_name));
      *out = dup_string(render_summary(x->v, r));
    }
  });
}

segalbar_status segalbar_verify_suites(char** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    std::string text;
    for (const auto& name : suite_names()) text += name + "\n";
    *out = dup_string(text);
  });
}

segalbar_status segalbar_verify(int max_size, const char* only, int* pass, char** report) {
  return guard([&] {
    require(pass != nullptr && report != nullptr, "null output");
    std::vector<std::string> selected;
    if (only != nullptr && *only != '\0') {
      auto known = suite_names();
      std::string item;
      for (const char* p = only;; ++p) {
        if (*p == ',' || *p == '\0') {
          if (item.empty()) fail(status_code::invalid, "verify: empty suite name");
          if (std::find(known.begin(), known.end(), item) == known.end())
            fail(status_code::invalid, "verify: unknown suite '" + item + "'");
          selected.push_back(item);
          item.clear();
          if (*p == '\0') break;
        } else {
          item += *p;
        }
      }
    }
    VerifyOptions options;
    options.max_size = max_size;
    auto results = run_suites(options, selected);
    *pass = verify_passed(results) ? 1 : 0;
    *report = dup_string(format_verify(results));
  });
}

}  // extern "C"
