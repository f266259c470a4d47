#include "functors.hpp"

namespace segalbar {

int j_ob(int level) {
  if (level < 0) fail(status_code::invalid, "j_ob: negative level");
  return level + 2;
}

int h_ob(int n) {
  if (n < 2) fail(status_code::invalid, "h_ob: ordinal must have size >= 2");
  return n - 2;
}

IntervalMap j_map(const OpArrow& a) {
  const TotalMap& f = a.underlying;  // ordinal n+1 -> ordinal m+1
  int m = a.dom;
  int n = a.cod;
  std::vector<int> img(m + 2);
  img[0] = 0;
  img[m + 1] = n + 1;
  for (int j = 1; j <= m; ++j) {
    int v = n + 1;
    for (int i = 0; i <= n; ++i) {
      if (f.img[i] >= j) {
        v = i;
        break;
      }
    }
    img[j] = v;
  }
  return IntervalMap(m + 2, n + 2, std::move(img));
}

OpArrow j_inverse(const IntervalMap& f) {
  int m = f.src - 2;
  int n = f.tgt - 2;
  std::vector<int> img(n + 1);
  for (int i = 0; i <= n; ++i) {
    int count = 0;
    for (int j = 1; j <= m; ++j)
      if (f.img[j] <= i) ++count;
    img[i] = count;
  }
  return op_from_underlying(TotalMap(n + 1, m + 1, std::move(img)));
}

PartialMap h_map(const IntervalMap& f) {
  std::vector<int> img(f.src - 2);
  for (int i = 0; i + 2 < f.src; ++i) {
    int v = f.img[i + 1];
    img[i] = (v == 0 || v == f.tgt - 1) ? undef : v - 1;
  }
  return PartialMap(f.src - 2, f.tgt - 2, std::move(img));
}

PartialMap hj_map(const OpArrow& a) { return h_map(j_map(a)); }

OpArrow edge_arrow(int n, int j) {
  if (n < 1 || j < 1 || j > n) fail(status_code::invalid, "edge_arrow: need 1 <= j <= n");
  if (n == 1) return identity_op(1);
  return op_from_underlying(TotalMap(2, n + 1, {j - 1, j}));
}

}  // namespace segalbar
