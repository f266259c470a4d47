#include "sset.hpp"

#include "functors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace segalbar {

namespace {

std::map<std::string, int> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, int> idx;
  for (size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], static_cast<int>(i));
  return idx;
}

int tag_cod(const GenTag& t) {
  return t.kind == GenTag::Kind::face ? t.level - 1 : t.level + 1;
}

}  // namespace

void validate_shape(const SSet& x) {
  if (x.trunc < 0) fail(status_code::shape, "sset: negative truncation");
  int n_levels = x.trunc + 1;
  if (static_cast<int>(x.levels.size()) != n_levels ||
      static_cast<int>(x.faces.size()) != n_levels ||
      static_cast<int>(x.degens.size()) != n_levels)
    fail(status_code::shape, "sset: level arrays do not match the truncation");
  for (int n = 0; n <= x.trunc; ++n) {
    std::set<std::string> seen;
    for (const auto& l : x.levels[n]) {
      if (l.empty()) fail(status_code::shape, "sset: empty label at level " + std::to_string(n));
      if (!seen.insert(l).second)
        fail(status_code::shape,
             "sset: duplicate label '" + l + "' at level " + std::to_string(n));
    }
  }
  for (int n = 0; n <= x.trunc; ++n) {
    int want_faces = n >= 1 ? n + 1 : 0;
    int want_degens = n < x.trunc ? n + 1 : 0;
    if (static_cast<int>(x.faces[n].size()) != want_faces)
      fail(status_code::shape, "sset: wrong face count at level " + std::to_string(n));
    if (static_cast<int>(x.degens[n].size()) != want_degens)
      fail(status_code::shape, "sset: wrong degeneracy count at level " + std::to_string(n));
    for (int i = 0; i < want_faces; ++i) {
      const auto& t = x.faces[n][i];
      if (static_cast<int>(t.size()) != x.level_size(n))
        fail(status_code::shape, "sset: face d" + std::to_string(i) + "^" + std::to_string(n) +
                                     " has the wrong source size");
      for (int v : t)
        if (v < 0 || v >= x.level_size(n - 1))
          fail(status_code::shape, "sset: face d" + std::to_string(i) + "^" + std::to_string(n) +
                                       " lands outside level " + std::to_string(n - 1));
    }
    for (int i = 0; i < want_degens; ++i) {
      const auto& t = x.degens[n][i];
      if (static_cast<int>(t.size()) != x.level_size(n))
        fail(status_code::shape, "sset: degeneracy s" + std::to_string(i) + "^" +
                                     std::to_string(n) + " has the wrong source size");
      for (int v : t)
        if (v < 0 || v >= x.level_size(n + 1))
          fail(status_code::shape, "sset: degeneracy s" + std::to_string(i) + "^" +
                                       std::to_string(n) + " lands outside level " +
                                       std::to_string(n + 1));
    }
  }
}

SSet nerve(const FinMonoid& m, int trunc) {
  if (trunc < 0) fail(status_code::invalid, "nerve: negative truncation");
  if (int_pow(m.order(), trunc) > max_cells)
    fail(status_code::bound, "nerve: level " + std::to_string(trunc) + " would exceed " +
                                 std::to_string(max_cells) + " cells");
  SSet x;
  x.trunc = trunc;
  x.levels.resize(trunc + 1);
  x.faces.resize(trunc + 1);
  x.degens.resize(trunc + 1);
  for (int n = 0; n <= trunc; ++n) x.levels[n] = tuple_labels(m, n);
  for (int n = 1; n <= trunc; ++n)
    for (int i = 0; i <= n; ++i) x.faces[n].push_back(f_eval(hj_map(face_op(n, i)), m));
  for (int n = 0; n < trunc; ++n)
    for (int i = 0; i <= n; ++i) x.degens[n].push_back(f_eval(hj_map(degen_op(n, i)), m));
  return x;
}

SSet constant_sset(const std::vector<std::string>& labels, int trunc) {
  if (trunc < 0) fail(status_code::invalid, "constant_sset: negative truncation");
  if (labels.empty()) fail(status_code::invalid, "constant_sset: no labels");
  std::vector<int> id(labels.size());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  SSet x;
  x.trunc = trunc;
  x.levels.assign(trunc + 1, labels);
  x.faces.resize(trunc + 1);
  x.degens.resize(trunc + 1);
  for (int n = 1; n <= trunc; ++n) x.faces[n].assign(n + 1, id);
  for (int n = 0; n < trunc; ++n) x.degens[n].assign(n + 1, id);
  validate_shape(x);
  return x;
}

std::vector<GenTag> all_gen_tags(int trunc) {
  std::vector<GenTag> tags;
  for (int n = 1; n <= trunc; ++n)
    for (int i = 0; i <= n; ++i) tags.push_back({GenTag::Kind::face, i, n});
  for (int n = 0; n < trunc; ++n)
    for (int i = 0; i <= n; ++i) tags.push_back({GenTag::Kind::degeneracy, i, n});
  return tags;
}

OpArrow tag_arrow(const GenTag& t) {
  return t.kind == GenTag::Kind::face ? face_op(t.level, t.index) : degen_op(t.level, t.index);
}

const std::vector<int>& gen_table(const SSet& x, const GenTag& t) {
  if (t.kind == GenTag::Kind::face) {
    if (t.level < 1 || t.level > x.trunc || t.index < 0 || t.index > t.level)
      fail(status_code::shape, "no face " + gen_name(t) + " within the truncation");
    return x.faces[t.level][t.index];
  }
  if (t.level < 0 || t.level >= x.trunc || t.index < 0 || t.index > t.level)
    fail(status_code::shape, "no degeneracy " + gen_name(t) + " within the truncation");
  return x.degens[t.level][t.index];
}

std::vector<int> eval_tags(const SSet& x, int dom, const std::vector<GenTag>& tags) {
  if (dom < 0 || dom > x.trunc) fail(status_code::shape, "eval: level exceeds truncation");
  std::vector<int> cur(x.level_size(dom));
  for (size_t i = 0; i < cur.size(); ++i) cur[i] = static_cast<int>(i);
  int level = dom;
  for (const auto& t : tags) {
    if (t.level != level)
      fail(status_code::shape, "eval: generator " + gen_name(t) + " applied at level " +
                                   std::to_string(level));
    const auto& table = gen_table(x, t);
    for (int& v : cur) v = table[v];
    level = tag_cod(t);
  }
  return cur;
}

std::vector<int> eval_arrow(const SSet& x, const OpArrow& a) {
  if (a.dom > x.trunc || a.cod > x.trunc)
    fail(status_code::shape, "eval: arrow level exceeds truncation");
  return eval_tags(x, a.dom, factorize(a));
}

std::vector<std::string> simplicial_identities_check(const SSet& x) {
  validate_shape(x);
  struct Word {
    std::string desc;
    int dom;
    std::vector<GenTag> tags;
    OpArrow arrow;
  };
  std::vector<Word> words;
  for (int n = 0; n <= x.trunc; ++n)
    words.push_back({"id^" + std::to_string(n), n, {}, identity_op(n)});
  auto tags = all_gen_tags(x.trunc);
  for (const auto& t : tags) words.push_back({gen_name(t), t.level, {t}, tag_arrow(t)});
  for (const auto& t1 : tags)
    for (const auto& t2 : tags) {
      if (t2.level != tag_cod(t1)) continue;
      words.push_back({gen_name(t1) + " then " + gen_name(t2),
                       t1.level,
                       {t1, t2},
                       compose(tag_arrow(t2), tag_arrow(t1))});
    }

  std::map<std::pair<std::pair<int, int>, std::vector<int>>, std::vector<const Word*>> groups;
  for (const auto& w : words)
    groups[{{w.arrow.dom, w.arrow.cod}, w.arrow.underlying.img}].push_back(&w);

  std::vector<std::string> violations;
  for (const auto& [key, group] : groups) {
    if (group.size() < 2) continue;
    auto base = eval_tags(x, group[0]->dom, group[0]->tags);
    for (size_t k = 1; k < group.size(); ++k) {
      auto other = eval_tags(x, group[k]->dom, group[k]->tags);
      for (size_t e = 0; e < base.size(); ++e)
        if (base[e] != other[e]) {
          violations.push_back(group[k]->desc + " disagrees with " + group[0]->desc + " at '" +
                               x.levels[group[0]->dom][e] + "'");
          break;
        }
    }
  }
  return violations;
}

std::vector<std::vector<int>> p_map(const SSet& x, int n) {
  if (n < 0 || n > x.trunc) fail(status_code::shape, "p_map: level exceeds truncation");
  std::vector<std::vector<int>> components;
  for (int j = 1; j <= n; ++j) components.push_back(eval_arrow(x, edge_arrow(n, j)));
  std::vector<std::vector<int>> tuples(x.level_size(n), std::vector<int>(n));
  for (int e = 0; e < x.level_size(n); ++e)
    for (int j = 0; j < n; ++j) tuples[e][j] = components[j][e];
  return tuples;
}

namespace {

std::string tuple_of_labels(const SSet& x, const std::vector<int>& tuple) {
  std::vector<std::string> parts;
  for (int c : tuple) parts.push_back(x.levels[1][c]);
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + ")";
}

SegalLevel segal_level(const SSet& x, int n, segal_mode mode) {
  SegalLevel r;
  r.level = n;
  if (n == 0) {
    if (x.level_size(0) != 1) {
      r.witness = "X0 has " + std::to_string(x.level_size(0)) + " elements";
      return r;
    }
    if (mode == segal_mode::strict && x.levels[0][0] != "()") {
      r.witness = "X0 label is '" + x.levels[0][0] + "', expected '()'";
      return r;
    }
    r.pass = true;
    return r;
  }

  int k1 = x.level_size(1);
  long long want = int_pow(k1, n);
  if (want > max_cells) fail(status_code::bound, "segal_check: tuple sweep exceeds cell bound");
  if (x.level_size(n) != want) {
    r.witness = "level size " + std::to_string(x.level_size(n)) + " != " + std::to_string(k1) +
                "^" + std::to_string(n);
    return r;
  }

  std::vector<std::vector<std::string>> atoms1;
  if (mode == segal_mode::strict) {
    for (int c = 0; c < k1; ++c) {
      try {
        atoms1.push_back(parse_tuple_label(x.levels[1][c]));
      } catch (const error& e) {
        r.witness = std::string("X1 label is not a flat tuple: ") + e.what();
        return r;
      }
    }
  }

  auto tuples = p_map(x, n);
  std::vector<int> hit(want, -1);
  for (int e = 0; e < x.level_size(n); ++e) {
    if (mode == segal_mode::strict) {
      std::vector<std::string> flat;
      for (int c : tuples[e]) flat.insert(flat.end(), atoms1[c].begin(), atoms1[c].end());
      std::string expected = tuple_label(flat);
      if (expected != x.levels[n][e]) {
        r.witness = "p" + std::to_string(n) + " is not the label identity at '" +
                    x.levels[n][e] + "': edges give '" + expected + "'";
        return r;
      }
    }
    long long code = 0;
    for (int c : tuples[e]) code = code * k1 + c;
    if (hit[code] >= 0) {
      r.witness = "p" + std::to_string(n) + " collides: '" + x.levels[n][hit[code]] + "' and '" +
                  x.levels[n][e] + "' both map to " + tuple_of_labels(x, tuples[e]);
      return r;
    }
    hit[code] = e;
  }
  for (long long code = 0; code < want; ++code)
    if (hit[code] < 0) {
      std::vector<int> tuple(n);
      long long rest = code;
      for (int j = n - 1; j >= 0; --j) {
        tuple[j] = static_cast<int>(rest % k1);
        rest /= k1;
      }
      r.witness =
          "p" + std::to_string(n) + " misses the tuple " + tuple_of_labels(x, tuple);
      return r;
    }
  r.pass = true;
  return r;
}

}  // namespace

SegalReport segal_check(const SSet& x, segal_mode mode) {
  validate_shape(x);
  SegalReport report;
  report.mode = mode;
  report.pass = true;
  for (int n = 0; n <= x.trunc; ++n) {
    report.levels.push_back(segal_level(x, n, mode));
    if (!report.levels.back().pass) report.pass = false;
  }
  return report;
}

FinMonoid reconstruct_monoid(const SSet& x, int required_trunc) {
  if (x.trunc < required_trunc)
    fail(status_code::invalid, "reconstruct: truncation " + std::to_string(x.trunc) +
                                   " too shallow, need at least " +
                                   std::to_string(required_trunc));
  auto report = segal_check(x, segal_mode::bijective);
  if (!report.pass) {
    for (const auto& l : report.levels)
      if (!l.pass)
        fail(status_code::check,
             "reconstruct: not Segal at level " + std::to_string(l.level) + ": " + l.witness);
  }
  int unit = x.degens[0][0][0];
  int k1 = x.level_size(1);
  auto p2 = p_map(x, 2);
  std::vector<std::vector<int>> inverse(k1, std::vector<int>(k1, -1));
  for (int e = 0; e < x.level_size(2); ++e) inverse[p2[e][0]][p2[e][1]] = e;
  std::vector<std::vector<int>> table(k1, std::vector<int>(k1));
  for (int a = 0; a < k1; ++a)
    for (int b = 0; b < k1; ++b) table[a][b] = x.faces[2][1][inverse[a][b]];
  try {
    return validate_monoid(x.levels[1], unit, table);
  } catch (const error& e) {
    fail(status_code::check, std::string("reconstruct: ") + e.what());
  }
}

BarEquality verify_bar_equality(const SSet& x, const FinMonoid& m) {
  validate_shape(x);
  SSet nv = nerve(m, x.trunc);
  std::vector<std::vector<int>> tr(x.trunc + 1);
  for (int n = 0; n <= x.trunc; ++n) {
    if (x.level_size(n) != nv.level_size(n))
      fail(status_code::shape, "bar equality: level " + std::to_string(n) +
                                   " size differs from the nerve");
    auto idx = label_index(nv.levels[n]);
    for (const auto& l : x.levels[n]) {
      auto it = idx.find(l);
      if (it == idx.end())
        fail(status_code::shape,
             "bar equality: label '" + l + "' at level " + std::to_string(n) +
                 " is not a nerve label");
      tr[n].push_back(it->second);
    }
  }
  for (int dom = 0; dom <= x.trunc; ++dom)
    for (int cod = 0; cod <= x.trunc; ++cod)
      for (const auto& a : enumerate_op(dom, cod)) {
        auto ex = eval_arrow(x, a);
        auto en = eval_arrow(nv, a);
        for (int e = 0; e < x.level_size(dom); ++e)
          if (tr[cod][ex[e]] != en[tr[dom][e]])
            return {false, "arrow [" + std::to_string(dom) + "]->[" + std::to_string(cod) +
                               "] with underlying " + format_map(a.underlying) + " at '" +
                               x.levels[dom][e] + "': got '" + x.levels[cod][ex[e]] +
                               "', nerve gives '" +
                               nv.levels[cod][en[tr[dom][e]]] + "'"};
      }
  return {true, ""};
}

ProductSSet product(const SSet& x, const SSet& y) {
  validate_shape(x);
  validate_shape(y);
  if (x.trunc != y.trunc) fail(status_code::invalid, "product: truncation mismatch");
  ProductSSet p;
  SSet& z = p.sset;
  z.trunc = x.trunc;
  z.levels.resize(z.trunc + 1);
  z.faces.resize(z.trunc + 1);
  z.degens.resize(z.trunc + 1);
  p.proj1.resize(z.trunc + 1);
  p.proj2.resize(z.trunc + 1);
  for (int n = 0; n <= z.trunc; ++n) {
    long long total = static_cast<long long>(x.level_size(n)) * y.level_size(n);
    if (total > max_cells) fail(status_code::bound, "product: level exceeds cell bound");
    for (int a = 0; a < x.level_size(n); ++a)
      for (int b = 0; b < y.level_size(n); ++b) {
        z.levels[n].push_back(
            nlohmann::json::array({x.levels[n][a], y.levels[n][b]}).dump());
        p.proj1[n].push_back(a);
        p.proj2[n].push_back(b);
      }
  }
  auto pair_table = [&](int n, const std::vector<int>& fx, const std::vector<int>& fy,
                        int tgt_level) {
    std::vector<int> t;
    int ytgt = y.level_size(tgt_level);
    for (int a = 0; a < x.level_size(n); ++a)
      for (int b = 0; b < y.level_size(n); ++b) t.push_back(fx[a] * ytgt + fy[b]);
    return t;
  };
  for (int n = 1; n <= z.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      z.faces[n].push_back(pair_table(n, x.faces[n][i], y.faces[n][i], n - 1));
  for (int n = 0; n < z.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      z.degens[n].push_back(pair_table(n, x.degens[n][i], y.degens[n][i], n + 1));
  validate_shape(z);
  return p;
}

SSet sset_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(status_code::parse, std::string("sset: bad json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("N") || !j.contains("levels") || !j.contains("faces") ||
      !j.contains("degeneracies"))
    fail(status_code::parse, "sset: expected fields N, levels, faces, degeneracies");
  if (!j.at("N").is_number_integer()) fail(status_code::parse, "sset: N must be an integer");
  SSet x;
  x.trunc = j.at("N").get<int>();
  if (x.trunc < 0) fail(status_code::parse, "sset: negative N");
  const auto& levels = j.at("levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != x.trunc + 1)
    fail(status_code::parse, "sset: levels must list N+1 label lists");
  x.levels.resize(x.trunc + 1);
  for (int n = 0; n <= x.trunc; ++n)
    for (const auto& l : levels[n]) {
      if (!l.is_string()) fail(status_code::parse, "sset: labels must be strings");
      x.levels[n].push_back(l.get<std::string>());
    }
  x.faces.resize(x.trunc + 1);
  x.degens.resize(x.trunc + 1);

  auto load_tables = [&](const char* field, bool is_face) {
    const auto& obj = j.at(field);
    if (!obj.is_object()) fail(status_code::parse, std::string("sset: ") + field +
                                                       " must be an object keyed by 'n,i'");
    auto& out = is_face ? x.faces : x.degens;
    int lo = is_face ? 1 : 0;
    int hi = is_face ? x.trunc : x.trunc - 1;
    size_t expected_keys = 0;
    for (int n = lo; n <= hi; ++n) {
      out[n].resize(n + 1);
      expected_keys += n + 1;
      int tgt = is_face ? n - 1 : n + 1;
      auto idx = label_index(x.levels[tgt]);
      for (int i = 0; i <= n; ++i) {
        std::string key = std::to_string(n) + "," + std::to_string(i);
        if (!obj.contains(key))
          fail(status_code::parse, std::string("sset: missing ") + field + " entry '" + key + "'");
        const auto& arr = obj.at(key);
        if (!arr.is_array() || arr.size() != x.levels[n].size())
          fail(status_code::parse, std::string("sset: ") + field + " entry '" + key +
                                       "' must list one target label per source element");
        for (const auto& l : arr) {
          if (!l.is_string()) fail(status_code::parse, "sset: target labels must be strings");
          auto it = idx.find(l.get<std::string>());
          if (it == idx.end())
            fail(status_code::parse, std::string("sset: ") + field + " entry '" + key +
                                         "' targets unknown label '" + l.get<std::string>() +
                                         "'");
          out[n][i].push_back(it->second);
        }
      }
    }
    if (obj.size() != expected_keys)
      fail(status_code::parse, std::string("sset: unexpected ") + field + " keys");
  };
  load_tables("faces", true);
  load_tables("degeneracies", false);

  validate_shape(x);
  auto violations = simplicial_identities_check(x);
  if (!violations.empty()) {
    std::string msg = "sset: simplicial identities fail:";
    size_t shown = std::min<size_t>(violations.size(), 3);
    for (size_t i = 0; i < shown; ++i) msg += "\n  " + violations[i];
    if (violations.size() > shown)
      msg += "\n  (" + std::to_string(violations.size() - shown) + " more)";
    fail(status_code::check, msg);
  }
  return x;
}

std::string sset_to_json(const SSet& x) {
  validate_shape(x);
  nlohmann::json j;
  j["N"] = x.trunc;
  j["levels"] = x.levels;
  nlohmann::json faces = nlohmann::json::object();
  for (int n = 1; n <= x.trunc; ++n)
    for (int i = 0; i <= n; ++i) {
      nlohmann::json arr = nlohmann::json::array();
      for (int v : x.faces[n][i]) arr.push_back(x.levels[n - 1][v]);
      faces[std::to_string(n) + "," + std::to_string(i)] = std::move(arr);
    }
  j["faces"] = std::move(faces);
  nlohmann::json degens = nlohmann::json::object();
  for (int n = 0; n < x.trunc; ++n)
    for (int i = 0; i <= n; ++i) {
      nlohmann::json arr = nlohmann::json::array();
      for (int v : x.degens[n][i]) arr.push_back(x.levels[n + 1][v]);
      degens[std::to_string(n) + "," + std::to_string(i)] = std::move(arr);
    }
  j["degeneracies"] = std::move(degens);
  return j.dump(2);
}

}  // namespace segalbar
