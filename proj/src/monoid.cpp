#include "monoid.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace segalbar {

namespace {

void check_atom(const std::string& label) {
  if (label.empty()) fail(status_code::parse, "monoid: empty element label");
  for (char c : label)
    if (c == ',' || c == '(' || c == ')')
      fail(status_code::parse, "monoid: label '" + label + "' contains a reserved character");
}

}  // namespace

FinMonoid validate_monoid(std::vector<std::string> elements, int unit,
                          std::vector<std::vector<int>> table) {
  int k = static_cast<int>(elements.size());
  if (k == 0) fail(status_code::invalid, "monoid: no elements");
  std::map<std::string, int> seen;
  for (int i = 0; i < k; ++i) {
    check_atom(elements[i]);
    if (!seen.emplace(elements[i], i).second)
      fail(status_code::invalid, "monoid: duplicate label '" + elements[i] + "'");
  }
  if (unit < 0 || unit >= k) fail(status_code::invalid, "monoid: unit index out of range");
  if (static_cast<int>(table.size()) != k) fail(status_code::invalid, "monoid: table is not square");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(table[i].size()) != k)
      fail(status_code::invalid, "monoid: ragged table row for '" + elements[i] + "'");
    for (int j = 0; j < k; ++j)
      if (table[i][j] < 0 || table[i][j] >= k)
        fail(status_code::invalid, "monoid: table entry at (" + elements[i] + ", " + elements[j] +
                                       ") out of range");
  }
  for (int i = 0; i < k; ++i) {
    if (table[unit][i] != i || table[i][unit] != i)
      fail(status_code::check, "monoid: unit law fails at " + elements[i]);
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(status_code::check, "monoid: not associative at (" + elements[a] + ", " +
                                       elements[b] + ", " + elements[c] + ")");
  FinMonoid m;
  m.elements = std::move(elements);
  m.unit = unit;
  m.table = std::move(table);
  return m;
}

bool is_commutative(const FinMonoid& m) {
  for (int a = 0; a < m.order(); ++a)
    for (int b = a + 1; b < m.order(); ++b)
      if (m.mul(a, b) != m.mul(b, a)) return false;
  return true;
}

std::vector<FinMonoid> enumerate_monoids(int order) {
  if (order < 1 || order > 4) fail(status_code::bound, "enumerate_monoids: order must be 1..4");
  static const std::vector<std::string> names = {"e", "a", "b", "c"};
  std::vector<std::string> elements(names.begin(), names.begin() + order);

  std::vector<FinMonoid> out;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i) {
    table[0][i] = i;
    table[i][0] = i;
  }

  int cells = (order - 1) * (order - 1);
  std::vector<int> free(cells, 0);
  auto assoc = [&]() {
    for (int a = 1; a < order; ++a)
      for (int b = 1; b < order; ++b)
        for (int c = 1; c < order; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]]) return false;
    return true;
  };
  while (true) {
    for (int t = 0; t < cells; ++t) table[1 + t / (order - 1)][1 + t % (order - 1)] = free[t];
    if (assoc()) {
      FinMonoid m;
      m.elements = elements;
      m.unit = 0;
      m.table = table;
      out.push_back(std::move(m));
    }
    int pos = cells - 1;
    while (pos >= 0 && free[pos] == order - 1) free[pos--] = 0;
    if (pos < 0) break;
    ++free[pos];
  }
  return out;
}

FinMonoid monoid_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(status_code::parse, std::string("monoid: bad json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("unit") || !j.contains("table"))
    fail(status_code::parse, "monoid: expected fields elements, unit, table");

  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) fail(status_code::parse, "monoid: elements must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::map<std::string, int> index;
  for (size_t i = 0; i < elements.size(); ++i) {
    check_atom(elements[i]);
    if (!index.emplace(elements[i], static_cast<int>(i)).second)
      fail(status_code::parse, "monoid: duplicate label '" + elements[i] + "'");
  }

  if (!j.at("unit").is_string()) fail(status_code::parse, "monoid: unit must be a label");
  auto u = index.find(j.at("unit").get<std::string>());
  if (u == index.end()) fail(status_code::parse, "monoid: unit label not among elements");

  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("table")) {
    std::vector<int> r;
    for (const auto& cell : row) {
      if (!cell.is_string()) fail(status_code::parse, "monoid: table entries must be labels");
      auto it = index.find(cell.get<std::string>());
      if (it == index.end())
        fail(status_code::parse, "monoid: unknown label '" + cell.get<std::string>() + "' in table");
      r.push_back(it->second);
    }
    if (r.size() != elements.size()) fail(status_code::parse, "monoid: ragged table");
    table.push_back(std::move(r));
  }
  if (table.size() != elements.size()) fail(status_code::parse, "monoid: table is not square");

  return validate_monoid(std::move(elements), u->second, std::move(table));
}

std::string monoid_to_json(const FinMonoid& m) {
  nlohmann::json j;
  j["elements"] = m.elements;
  j["unit"] = m.elements[m.unit];
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : m.table) {
    nlohmann::json r = nlohmann::json::array();
    for (int cell : row) r.push_back(m.elements[cell]);
    table.push_back(std::move(r));
  }
  j["table"] = std::move(table);
  return j.dump(2);
}

std::string tuple_label(const std::vector<std::string>& atoms) {
  if (atoms.empty()) return "()";
  if (atoms.size() == 1) return atoms[0];
  std::string out = "(";
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ",";
    out += atoms[i];
  }
  return out + ")";
}

std::vector<std::string> parse_tuple_label(const std::string& label) {
  if (label == "()") return {};
  if (!label.empty() && label.front() == '(' && label.back() == ')') {
    std::vector<std::string> atoms;
    std::string cur;
    for (size_t i = 1; i + 1 < label.size(); ++i) {
      if (label[i] == ',') {
        atoms.push_back(cur);
        cur.clear();
      } else {
        cur += label[i];
      }
    }
    atoms.push_back(cur);
    for (const auto& a : atoms) {
      if (a.empty()) fail(status_code::parse, "tuple label '" + label + "' has an empty slot");
      for (char c : a)
        if (c == '(' || c == ')' || c == ',')
          fail(status_code::parse, "tuple label '" + label + "' nests reserved characters");
    }
    return atoms;
  }
  for (char c : label)
    if (c == '(' || c == ')' || c == ',')
      fail(status_code::parse, "label '" + label + "' is not a tuple label");
  if (label.empty()) fail(status_code::parse, "empty label");
  return {label};
}

long long int_pow(int base, int exp) {
  constexpr long long cap = 1LL << 40;
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base > 1 && r > cap / base) return cap;
    r *= base;
  }
  return r;
}

std::vector<int> tuple_decode(long long t, int arity, int order) {
  std::vector<int> digits(arity);
  for (int i = arity - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(t % order);
    t /= order;
  }
  return digits;
}

long long tuple_encode(const std::vector<int>& digits, int order) {
  long long t = 0;
  for (int d : digits) t = t * order + d;
  return t;
}

std::vector<std::string> tuple_labels(const FinMonoid& m, int arity) {
  long long count = int_pow(m.order(), arity);
  std::vector<std::string> out;
  out.reserve(count);
  std::vector<std::string> atoms(arity);
  for (long long t = 0; t < count; ++t) {
    auto digits = tuple_decode(t, arity, m.order());
    for (int i = 0; i < arity; ++i) atoms[i] = m.elements[digits[i]];
    out.push_back(tuple_label(atoms));
  }
  return out;
}

std::vector<int> f_eval(const PartialMap& g, const FinMonoid& m) {
  long long count = int_pow(m.order(), g.src);
  std::vector<int> out(count);
  std::vector<int> acc(g.tgt);
  for (long long t = 0; t < count; ++t) {
    auto digits = tuple_decode(t, g.src, m.order());
    std::fill(acc.begin(), acc.end(), m.unit);
    for (int i = 0; i < g.src; ++i) {
      int j = g.img[i];
      if (j != undef) acc[j] = m.mul(acc[j], digits[i]);
    }
    out[t] = static_cast<int>(tuple_encode(acc, m.order()));
  }
  return out;
}

}  // namespace segalbar
