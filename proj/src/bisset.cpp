#include "bisset.hpp"

#include "functors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace segalbar {

namespace {

struct BiGen {
  bool horizontal;
  GenTag tag;
};

std::string bigen_name(const BiGen& g) {
  return std::string(g.horizontal ? "horizontal " : "vertical ") + gen_name(g.tag);
}

// applies g across the n blocks of an element, multiplying blocks componentwise
std::vector<int> apply_blockwise(const PartialMap& g, const FinMonoid& mon, int block,
                                 const std::vector<int>& digits) {
  std::vector<int> out(static_cast<size_t>(g.tgt) * block, mon.unit);
  for (int i = 0; i < g.src; ++i) {
    int j = g.img[i];
    if (j == undef) continue;
    for (int r = 0; r < block; ++r)
      out[j * block + r] = mon.mul(out[j * block + r], digits[i * block + r]);
  }
  return out;
}

// applies g inside each block of an element
std::vector<int> apply_inblock(const PartialMap& g, const FinMonoid& mon, int blocks,
                               const std::vector<int>& digits) {
  std::vector<int> out(static_cast<size_t>(blocks) * g.tgt, mon.unit);
  for (int c = 0; c < blocks; ++c)
    for (int r = 0; r < g.src; ++r) {
      int j = g.img[r];
      if (j == undef) continue;
      out[c * g.tgt + j] = mon.mul(out[c * g.tgt + j], digits[c * g.src + r]);
    }
  return out;
}

std::vector<int> grid_table(const FinMonoid& mon, int n, int m, const PartialMap& g,
                            bool horizontal) {
  long long count = int_pow(mon.order(), n * m);
  std::vector<int> table(count);
  for (long long e = 0; e < count; ++e) {
    auto digits = tuple_decode(e, n * m, mon.order());
    auto out = horizontal ? apply_blockwise(g, mon, m, digits)
                          : apply_inblock(g, mon, n, digits);
    table[e] = static_cast<int>(tuple_encode(out, mon.order()));
  }
  return table;
}

}  // namespace

void validate_bisset_shape(const BiSSet& x) {
  if (x.htrunc < 0 || x.vtrunc < 0) fail(status_code::shape, "bisset: negative truncation");
  int nn = x.htrunc + 1, mm = x.vtrunc + 1;
  auto grid_sized = [&](const auto& v) {
    if (static_cast<int>(v.size()) != nn) return false;
    for (const auto& per_m : v)
      if (static_cast<int>(per_m.size()) != mm) return false;
    return true;
  };
  if (!grid_sized(x.levels) || !grid_sized(x.hfaces) || !grid_sized(x.hdegens) ||
      !grid_sized(x.vfaces) || !grid_sized(x.vdegens))
    fail(status_code::shape, "bisset: grids do not match the truncations");
  for (int m = 0; m <= x.vtrunc; ++m) validate_shape(row(x, m));
  for (int n = 0; n <= x.htrunc; ++n) validate_shape(column(x, n));
}

BiSSet double_nerve(const FinMonoid& m, int htrunc, int vtrunc) {
  if (htrunc < 0 || vtrunc < 0) fail(status_code::invalid, "double_nerve: negative truncation");
  for (int a = 0; a < m.order(); ++a)
    for (int b = a + 1; b < m.order(); ++b)
      if (m.mul(a, b) != m.mul(b, a))
        fail(status_code::check, "double_nerve: not commutative: " + m.elements[a] + "·" +
                                     m.elements[b] + " = " + m.elements[m.mul(a, b)] + " but " +
                                     m.elements[b] + "·" + m.elements[a] + " = " +
                                     m.elements[m.mul(b, a)]);
  if (int_pow(m.order(), htrunc * vtrunc) > max_cells)
    fail(status_code::bound, "double_nerve: grid spot (" + std::to_string(htrunc) + "," +
                                 std::to_string(vtrunc) + ") would exceed " +
                                 std::to_string(max_cells) + " cells");
  BiSSet x;
  x.htrunc = htrunc;
  x.vtrunc = vtrunc;
  int nn = htrunc + 1, mm = vtrunc + 1;
  x.levels.assign(nn, std::vector<std::vector<std::string>>(mm));
  x.hfaces.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  x.hdegens.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  x.vfaces.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  x.vdegens.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  for (int n = 0; n <= htrunc; ++n)
    for (int mv = 0; mv <= vtrunc; ++mv) {
      x.levels[n][mv] = tuple_labels(m, n * mv);
      if (n >= 1)
        for (int i = 0; i <= n; ++i)
          x.hfaces[n][mv].push_back(grid_table(m, n, mv, hj_map(face_op(n, i)), true));
      if (n < htrunc)
        for (int i = 0; i <= n; ++i)
          x.hdegens[n][mv].push_back(grid_table(m, n, mv, hj_map(degen_op(n, i)), true));
      if (mv >= 1)
        for (int i = 0; i <= mv; ++i)
          x.vfaces[n][mv].push_back(grid_table(m, n, mv, hj_map(face_op(mv, i)), false));
      if (mv < vtrunc)
        for (int i = 0; i <= mv; ++i)
          x.vdegens[n][mv].push_back(grid_table(m, n, mv, hj_map(degen_op(mv, i)), false));
    }
  return x;
}

BiSSet external_product(const SSet& x, const SSet& y) {
  validate_shape(x);
  validate_shape(y);
  BiSSet z;
  z.htrunc = x.trunc;
  z.vtrunc = y.trunc;
  int nn = z.htrunc + 1, mm = z.vtrunc + 1;
  z.levels.assign(nn, std::vector<std::vector<std::string>>(mm));
  z.hfaces.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  z.hdegens.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  z.vfaces.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  z.vdegens.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  for (int n = 0; n <= z.htrunc; ++n)
    for (int m = 0; m <= z.vtrunc; ++m) {
      long long total = static_cast<long long>(x.level_size(n)) * y.level_size(m);
      if (total > max_cells) fail(status_code::bound, "external_product: cell bound exceeded");
      for (int a = 0; a < x.level_size(n); ++a)
        for (int b = 0; b < y.level_size(m); ++b)
          z.levels[n][m].push_back(
              nlohmann::json::array({x.levels[n][a], y.levels[m][b]}).dump());
      auto htable = [&](const std::vector<int>& fx) {
        std::vector<int> t;
        for (int a = 0; a < x.level_size(n); ++a)
          for (int b = 0; b < y.level_size(m); ++b) t.push_back(fx[a] * y.level_size(m) + b);
        return t;
      };
      auto vtable = [&](const std::vector<int>& fy, int tgt_level) {
        std::vector<int> t;
        for (int a = 0; a < x.level_size(n); ++a)
          for (int b = 0; b < y.level_size(m); ++b) t.push_back(a * y.level_size(tgt_level) + fy[b]);
        return t;
      };
      if (n >= 1)
        for (int i = 0; i <= n; ++i) z.hfaces[n][m].push_back(htable(x.faces[n][i]));
      if (n < z.htrunc)
        for (int i = 0; i <= n; ++i) z.hdegens[n][m].push_back(htable(x.degens[n][i]));
      if (m >= 1)
        for (int i = 0; i <= m; ++i) z.vfaces[n][m].push_back(vtable(y.faces[m][i], m - 1));
      if (m < z.vtrunc)
        for (int i = 0; i <= m; ++i) z.vdegens[n][m].push_back(vtable(y.degens[m][i], m + 1));
    }
  validate_bisset_shape(z);
  return z;
}

SSet row(const BiSSet& x, int m) {
  if (m < 0 || m > x.vtrunc) fail(status_code::invalid, "row: index out of range");
  SSet r;
  r.trunc = x.htrunc;
  r.levels.resize(r.trunc + 1);
  r.faces.resize(r.trunc + 1);
  r.degens.resize(r.trunc + 1);
  for (int n = 0; n <= x.htrunc; ++n) {
    r.levels[n] = x.levels[n][m];
    r.faces[n] = x.hfaces[n][m];
    r.degens[n] = x.hdegens[n][m];
  }
  return r;
}

SSet column(const BiSSet& x, int n) {
  if (n < 0 || n > x.htrunc) fail(status_code::invalid, "column: index out of range");
  SSet c;
  c.trunc = x.vtrunc;
  c.levels.resize(c.trunc + 1);
  c.faces.resize(c.trunc + 1);
  c.degens.resize(c.trunc + 1);
  for (int m = 0; m <= x.vtrunc; ++m) {
    c.levels[m] = x.levels[n][m];
    c.faces[m] = x.vfaces[n][m];
    c.degens[m] = x.vdegens[n][m];
  }
  return c;
}

namespace {

const std::vector<int>& bigen_table(const BiSSet& x, const BiGen& g, int n, int m) {
  if (g.horizontal)
    return g.tag.kind == GenTag::Kind::face ? x.hfaces[g.tag.level][m][g.tag.index]
                                            : x.hdegens[g.tag.level][m][g.tag.index];
  return g.tag.kind == GenTag::Kind::face ? x.vfaces[n][g.tag.level][g.tag.index]
                                          : x.vdegens[n][g.tag.level][g.tag.index];
}

int gen_target(const GenTag& t) {
  return t.kind == GenTag::Kind::face ? t.level - 1 : t.level + 1;
}

}  // namespace

std::vector<std::string> bisset_identities_check(const BiSSet& x) {
  validate_bisset_shape(x);
  std::vector<std::string> violations;
  for (int m = 0; m <= x.vtrunc; ++m)
    for (const auto& v : simplicial_identities_check(row(x, m)))
      violations.push_back("row m=" + std::to_string(m) + ": " + v);
  for (int n = 0; n <= x.htrunc; ++n)
    for (const auto& v : simplicial_identities_check(column(x, n)))
      violations.push_back("column n=" + std::to_string(n) + ": " + v);

  std::vector<BiGen> hgens, vgens;
  for (const auto& t : all_gen_tags(x.htrunc)) hgens.push_back({true, t});
  for (const auto& t : all_gen_tags(x.vtrunc)) vgens.push_back({false, t});
  for (const auto& hg : hgens)
    for (const auto& vg : vgens) {
      int n = hg.tag.level, m = vg.tag.level;
      int n2 = gen_target(hg.tag), m2 = gen_target(vg.tag);
      const auto& h_at_m = bigen_table(x, hg, n, m);
      const auto& v_after = bigen_table(x, vg, n2, m);
      const auto& v_at_n = bigen_table(x, vg, n, m);
      const auto& h_after = bigen_table(x, hg, n, m2);
      for (int e = 0; e < x.level_size(n, m); ++e)
        if (v_after[h_at_m[e]] != h_after[v_at_n[e]]) {
          violations.push_back(bigen_name(hg) + " and " + bigen_name(vg) +
                               " do not commute at '" + x.levels[n][m][e] + "' (grid spot (" +
                               std::to_string(n) + "," + std::to_string(m) + "))");
          break;
        }
    }
  return violations;
}

DoubleSegalReport double_segal_check(const BiSSet& x, segal_mode mode) {
  DoubleSegalReport report;
  report.pass = true;
  for (int m = 0; m <= x.vtrunc; ++m) {
    DoubleSegalPart part;
    part.name = "row m=" + std::to_string(m);
    part.report = segal_check(row(x, m), mode);
    if (!part.report.pass) report.pass = false;
    report.parts.push_back(std::move(part));
  }
  if (x.htrunc >= 1) {
    DoubleSegalPart part;
    part.name = "column n=1";
    part.report = segal_check(column(x, 1), mode);
    if (!part.report.pass) report.pass = false;
    report.parts.push_back(std::move(part));
  }
  return report;
}

PNaturality p_naturality_check(const BiSSet& x) {
  validate_bisset_shape(x);
  if (x.htrunc < 1) return {true, ""};
  for (const auto& t : all_gen_tags(x.vtrunc)) {
    int m = t.level, m2 = gen_target(t);
    for (int n = 0; n <= x.htrunc; ++n) {
      const auto& vg_n = t.kind == GenTag::Kind::face ? x.vfaces[n][m][t.index]
                                                      : x.vdegens[n][m][t.index];
      const auto& vg_1 = t.kind == GenTag::Kind::face ? x.vfaces[1][m][t.index]
                                                      : x.vdegens[1][m][t.index];
      auto p_before = p_map(row(x, m), n);
      auto p_after = p_map(row(x, m2), n);
      for (int e = 0; e < x.level_size(n, m); ++e) {
        auto expected = p_before[e];
        for (int& c : expected) c = vg_1[c];
        if (p_after[vg_n[e]] != expected)
          return {false, "square fails at n=" + std::to_string(n) + ", vertical " + gen_name(t) +
                             ", element '" + x.levels[n][m][e] + "'"};
      }
    }
  }
  return {true, ""};
}

EckmannHilton eckmann_hilton(const BiSSet& x) {
  if (x.htrunc < 2 || x.vtrunc < 2)
    fail(status_code::invalid, "eckmann_hilton: needs truncations of at least 2");
  auto segal = double_segal_check(x, segal_mode::bijective);
  if (!segal.pass) {
    for (const auto& part : segal.parts)
      for (const auto& l : part.report.levels)
        if (!l.pass)
          fail(status_code::check, "eckmann_hilton: not Segal at " + part.name + " level " +
                                       std::to_string(l.level) + ": " + l.witness);
  }

  EckmannHilton r;
  r.horizontal = reconstruct_monoid(row(x, 1), 2);
  r.vertical = reconstruct_monoid(column(x, 1), 2);
  r.units_equal = r.horizontal.unit == r.vertical.unit;
  if (!r.units_equal)
    r.witness = "units differ: horizontal " + r.horizontal.elements[r.horizontal.unit] +
                ", vertical " + r.vertical.elements[r.vertical.unit];
  r.products_equal = r.horizontal.table == r.vertical.table;
  if (r.witness.empty() && !r.products_equal)
    r.witness = "the horizontal and vertical products differ";
  r.commutative = is_commutative(r.horizontal) && is_commutative(r.vertical);
  if (r.witness.empty() && !r.commutative) r.witness = "a product is not commutative";

  int k = x.level_size(1, 1);
  auto p2_col = p_map(column(x, 1), 2);
  std::vector<std::vector<int>> col_inv(k, std::vector<int>(k, -1));
  for (int e = 0; e < x.level_size(1, 2); ++e) col_inv[p2_col[e][0]][p2_col[e][1]] = e;
  auto p2_row = p_map(row(x, 2), 2);
  int k12 = x.level_size(1, 2);
  std::vector<std::vector<int>> row_inv(k12, std::vector<int>(k12, -1));
  for (int e = 0; e < x.level_size(2, 2); ++e) row_inv[p2_row[e][0]][p2_row[e][1]] = e;

  r.interchange = true;
  for (int a = 0; a < k && r.interchange; ++a)
    for (int b = 0; b < k && r.interchange; ++b)
      for (int c = 0; c < k && r.interchange; ++c)
        for (int d = 0; d < k; ++d) {
          int left = col_inv[a][c];
          int right = col_inv[b][d];
          int block = row_inv[left][right];
          int via_rows = x.vfaces[1][2][1][x.hfaces[2][2][1][block]];
          int via_columns = x.hfaces[2][1][1][x.vfaces[2][2][1][block]];
          if (via_rows != via_columns) {
            r.interchange = false;
            if (r.witness.empty())
              r.witness = "interchange fails at the 2x2 block '" + x.levels[2][2][block] +
                          "': rows give '" + x.levels[1][1][via_rows] + "', columns give '" +
                          x.levels[1][1][via_columns] + "'";
            break;
          }
        }
  return r;
}

BiSSet bisset_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(status_code::parse, std::string("bisset: bad json: ") + e.what());
  }
  for (const char* field : {"N", "M", "levels", "hfaces", "hdegens", "vfaces", "vdegens"})
    if (!j.is_object() || !j.contains(field))
      fail(status_code::parse, std::string("bisset: missing field ") + field);
  if (!j.at("N").is_number_integer() || !j.at("M").is_number_integer())
    fail(status_code::parse, "bisset: N and M must be integers");
  BiSSet x;
  x.htrunc = j.at("N").get<int>();
  x.vtrunc = j.at("M").get<int>();
  if (x.htrunc < 0 || x.vtrunc < 0) fail(status_code::parse, "bisset: negative truncation");
  int nn = x.htrunc + 1, mm = x.vtrunc + 1;
  const auto& levels = j.at("levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != nn)
    fail(status_code::parse, "bisset: levels must be a grid of label lists");
  x.levels.assign(nn, std::vector<std::vector<std::string>>(mm));
  for (int n = 0; n < nn; ++n) {
    if (!levels[n].is_array() || static_cast<int>(levels[n].size()) != mm)
      fail(status_code::parse, "bisset: levels must be a grid of label lists");
    for (int m = 0; m < mm; ++m)
      for (const auto& l : levels[n][m]) {
        if (!l.is_string()) fail(status_code::parse, "bisset: labels must be strings");
        x.levels[n][m].push_back(l.get<std::string>());
      }
  }
  x.hfaces.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  x.hdegens.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  x.vfaces.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));
  x.vdegens.assign(nn, std::vector<std::vector<std::vector<int>>>(mm));

  auto load = [&](const char* field, bool horizontal, bool face) {
    const auto& obj = j.at(field);
    if (!obj.is_object())
      fail(status_code::parse, std::string("bisset: ") + field + " must be keyed by 'n,m,i'");
    size_t expected_keys = 0;
    for (int n = 0; n < nn; ++n)
      for (int m = 0; m < mm; ++m) {
        int level = horizontal ? n : m;
        int limit = horizontal ? x.htrunc : x.vtrunc;
        if (face ? level < 1 : level >= limit) continue;
        int tn = horizontal ? (face ? n - 1 : n + 1) : n;
        int tm = horizontal ? m : (face ? m - 1 : m + 1);
        std::map<std::string, int> idx;
        for (size_t t = 0; t < x.levels[tn][tm].size(); ++t)
          idx.emplace(x.levels[tn][tm][t], static_cast<int>(t));
        auto& out = horizontal ? (face ? x.hfaces : x.hdegens) : (face ? x.vfaces : x.vdegens);
        out[n][m].resize(level + 1);
        expected_keys += level + 1;
        for (int i = 0; i <= level; ++i) {
          std::string key = std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(i);
          if (!obj.contains(key))
            fail(status_code::parse,
                 std::string("bisset: missing ") + field + " entry '" + key + "'");
          const auto& arr = obj.at(key);
          if (!arr.is_array() || arr.size() != x.levels[n][m].size())
            fail(status_code::parse, std::string("bisset: ") + field + " entry '" + key +
                                         "' must list one target label per source element");
          for (const auto& l : arr) {
            if (!l.is_string()) fail(status_code::parse, "bisset: target labels must be strings");
            auto it = idx.find(l.get<std::string>());
            if (it == idx.end())
              fail(status_code::parse, std::string("bisset: ") + field + " entry '" + key +
                                           "' targets unknown label '" + l.get<std::string>() +
                                           "'");
            out[n][m][i].push_back(it->second);
          }
        }
      }
    if (obj.size() != expected_keys)
      fail(status_code::parse, std::string("bisset: unexpected ") + field + " keys");
  };
  load("hfaces", true, true);
  load("hdegens", true, false);
  load("vfaces", false, true);
  load("vdegens", false, false);

  auto violations = bisset_identities_check(x);
  if (!violations.empty()) {
    std::string msg = "bisset: invariants fail:";
    size_t shown = std::min<size_t>(violations.size(), 3);
    for (size_t i = 0; i < shown; ++i) msg += "\n  " + violations[i];
    if (violations.size() > shown)
      msg += "\n  (" + std::to_string(violations.size() - shown) + " more)";
    fail(status_code::check, msg);
  }
  return x;
}

std::string bisset_to_json(const BiSSet& x) {
  validate_bisset_shape(x);
  nlohmann::json j;
  j["N"] = x.htrunc;
  j["M"] = x.vtrunc;
  j["levels"] = x.levels;
  auto dump = [&](bool horizontal, bool face) {
    nlohmann::json obj = nlohmann::json::object();
    for (int n = 0; n <= x.htrunc; ++n)
      for (int m = 0; m <= x.vtrunc; ++m) {
        int level = horizontal ? n : m;
        int limit = horizontal ? x.htrunc : x.vtrunc;
        if (face ? level < 1 : level >= limit) continue;
        int tn = horizontal ? (face ? n - 1 : n + 1) : n;
        int tm = horizontal ? m : (face ? m - 1 : m + 1);
        const auto& src = horizontal ? (face ? x.hfaces : x.hdegens)
                                     : (face ? x.vfaces : x.vdegens);
        for (int i = 0; i <= level; ++i) {
          nlohmann::json arr = nlohmann::json::array();
          for (int v : src[n][m][i]) arr.push_back(x.levels[tn][tm][v]);
          obj[std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(i)] =
              std::move(arr);
        }
      }
    return obj;
  };
  j["hfaces"] = dump(true, true);
  j["hdegens"] = dump(true, false);
  j["vfaces"] = dump(false, true);
  j["vdegens"] = dump(false, false);
  return j.dump(2);
}

}  // namespace segalbar
