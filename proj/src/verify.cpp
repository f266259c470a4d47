#include "verify.hpp"

#include "bisset.hpp"
#include "functors.hpp"
#include "maps.hpp"
#include "monoid.hpp"
#include "render.hpp"
#include "sset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace segalbar {

namespace {

struct Caps {
  int map_size;      // ordinal cap for total/partial/op sweeps
  int tensor_size;   // per-factor cap for the four-map interchange sweep
  int h_size;        // interval ordinal cap
  int monoid_order;  // monoid enumeration cap
  int trunc;         // nerve truncation
  int bitrunc;       // double-nerve truncation per direction
};

Caps caps_from(const VerifyOptions& o) {
  int s = std::clamp(o.max_size, 2, 6);
  Caps c;
  c.map_size = s;
  c.tensor_size = std::min(s - 1, 3);
  c.h_size = std::min(s + 2, 6);
  c.monoid_order = s >= 6 ? 4 : s >= 4 ? 3 : 2;
  c.trunc = std::min(s, 4);
  c.bitrunc = s >= 4 ? 3 : 2;
  return c;
}

struct Ctx {
  SuiteResult r;

  explicit Ctx(std::string name) { r.name = std::move(name); }

  template <typename F>
  void expect(bool cond, F&& describe) {
    ++r.checks;
    if (!cond && r.pass) {
      r.pass = false;
      r.failure = describe();
    }
  }
  void expect(bool cond, const char* msg) {
    expect(cond, [&] { return std::string(msg); });
  }

  template <typename F>
  void expect_error(status_code code, const char* msg, F&& body) {
    ++r.checks;
    bool hit = false;
    try {
      body();
    } catch (const error& e) {
      hit = e.code == code;
    }
    if (!hit && r.pass) {
      r.pass = false;
      r.failure = msg;
    }
  }
};

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long long total_count(int n, int m) {
  if (n == 0) return 1;
  if (m == 0) return 0;
  return binom(n + m - 1, n);
}

long long partial_count(int n, int m) {
  long long sum = 0;
  for (int k = 0; k <= n; ++k) sum += binom(n, k) * total_count(k, m);
  return sum;
}

long long interval_count(int n, int m) { return binom(n - 2 + m - 1, n - 2); }

FinMonoid z2() { return validate_monoid({"e", "a"}, 0, {{0, 1}, {1, 0}}); }
FinMonoid b2() { return validate_monoid({"e", "a"}, 0, {{0, 1}, {1, 1}}); }
FinMonoid z3() {
  return validate_monoid({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}
FinMonoid lz3() {
  return validate_monoid({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
}

std::vector<FinMonoid> monoids_up_to(int order) {
  std::vector<FinMonoid> all;
  for (int k = 1; k <= order; ++k)
    for (auto& m : enumerate_monoids(k)) all.push_back(std::move(m));
  return all;
}

// classical reduced-bar tables, written without the functor machinery
std::vector<int> bar_face(const FinMonoid& m, int n, int i) {
  long long count = int_pow(m.order(), n);
  std::vector<int> out(count);
  for (long long e = 0; e < count; ++e) {
    auto d = tuple_decode(e, n, m.order());
    std::vector<int> t;
    if (i == 0) {
      t.assign(d.begin() + 1, d.end());
    } else if (i == n) {
      t.assign(d.begin(), d.end() - 1);
    } else {
      t = d;
      t[i - 1] = m.mul(d[i - 1], d[i]);
      t.erase(t.begin() + i);
    }
    out[e] = static_cast<int>(tuple_encode(t, m.order()));
  }
  return out;
}

std::vector<int> bar_degen(const FinMonoid& m, int n, int i) {
  long long count = int_pow(m.order(), n);
  std::vector<int> out(count);
  for (long long e = 0; e < count; ++e) {
    auto d = tuple_decode(e, n, m.order());
    d.insert(d.begin() + i, m.unit);
    out[e] = static_cast<int>(tuple_encode(d, m.order()));
  }
  return out;
}

template <typename M>
std::vector<std::vector<std::vector<M>>> hom_grid(int size,
                                                  std::vector<M> (*enumerate)(int, int),
                                                  int lo = 0) {
  std::vector<std::vector<std::vector<M>>> grid(size + 1,
                                                std::vector<std::vector<M>>(size + 1));
  for (int n = lo; n <= size; ++n)
    for (int m = lo; m <= size; ++m) grid[n][m] = enumerate(n, m);
  return grid;
}

SuiteResult suite_hom_counts(const Caps& caps) {
  Ctx c("hom-counts");
  auto lex_sorted = [&](const auto& maps) {
    for (size_t k = 1; k < maps.size(); ++k)
      if (!(maps[k - 1].img < maps[k].img)) return false;
    return true;
  };
  for (int n = 0; n <= caps.map_size; ++n)
    for (int m = 0; m <= caps.map_size; ++m) {
      auto tot = enumerate_total(n, m);
      c.expect(static_cast<long long>(tot.size()) == total_count(n, m),
               [&] { return "total hom count off at " + std::to_string(n) + "->" +
                            std::to_string(m); });
      c.expect(lex_sorted(tot), "total homs not in lexicographic order");
      auto par = enumerate_partial(n, m);
      c.expect(static_cast<long long>(par.size()) == partial_count(n, m),
               [&] { return "partial hom count off at " + std::to_string(n) + "->" +
                            std::to_string(m); });
      c.expect(lex_sorted(par), "partial homs not in lexicographic order");
      auto ops = enumerate_op(n, m);
      c.expect(static_cast<long long>(ops.size()) == total_count(m + 1, n + 1),
               [&] { return "op hom count off at [" + std::to_string(n) + "]->[" +
                            std::to_string(m) + "]"; });
      c.expect(static_cast<long long>(ops.size()) == interval_count(n + 2, m + 2),
               "op homs do not count like interval homs");
    }
  for (int n = 2; n <= caps.h_size; ++n)
    for (int m = 2; m <= caps.h_size; ++m) {
      auto ints = enumerate_interval(n, m);
      c.expect(static_cast<long long>(ints.size()) == interval_count(n, m),
               [&] { return "interval hom count off at " + std::to_string(n) + "->" +
                            std::to_string(m); });
      c.expect(lex_sorted(ints), "interval homs not in lexicographic order");
    }
  c.expect(enumerate_total(2, 1).size() == 1 && enumerate_total(2, 1)[0] == mu1(),
           "the arrow 2->1 is not unique");
  c.expect(enumerate_total(0, 1).size() == 1 && enumerate_total(0, 1)[0] == eta1(),
           "the arrow 0->1 is not unique");
  c.expect(enumerate_partial(1, 0).size() == 1 && enumerate_partial(1, 0)[0] == pi1(),
           "the partial arrow 1->0 is not unique");
  return c.r;
}

template <typename M, typename Id>
void compose_laws(Ctx& c, const char* kind,
                  const std::vector<std::vector<std::vector<M>>>& homs, int lo, int size,
                  Id identity_at) {
  for (int n = lo; n <= size; ++n)
    for (int m = lo; m <= size; ++m)
      for (const auto& f : homs[n][m]) {
        c.expect(compose(identity_at(m), f) == f,
                 [&] { return std::string(kind) + ": left identity fails"; });
        c.expect(compose(f, identity_at(n)) == f,
                 [&] { return std::string(kind) + ": right identity fails"; });
      }
  for (int a = lo; a <= size; ++a)
    for (int b = lo; b <= size; ++b)
      for (int d = lo; d <= size; ++d)
        for (const auto& f : homs[a][b])
          for (const auto& g : homs[b][d]) {
            auto gf = compose(g, f);
            for (int e = lo; e <= size; ++e)
              for (const auto& h : homs[d][e])
                c.expect(compose(h, gf) == compose(compose(h, g), f),
                         [&] { return std::string(kind) + ": associativity fails"; });
          }
}

SuiteResult suite_compose_laws(const Caps& caps) {
  Ctx c("compose-laws");
  auto totals = hom_grid(caps.map_size, enumerate_total);
  auto partials = hom_grid(caps.map_size, enumerate_partial);
  auto intervals = hom_grid(caps.h_size, enumerate_interval, 2);
  auto ops = hom_grid(caps.map_size, enumerate_op);
  compose_laws(c, "total", totals, 0, caps.map_size, identity_total);
  compose_laws(c, "partial", partials, 0, caps.map_size, identity_partial);
  compose_laws(c, "interval", intervals, 2, caps.h_size, identity_interval);
  compose_laws(c, "op", ops, 0, caps.map_size, identity_op);
  return c.r;
}

template <typename M>
void tensor_laws(Ctx& c, const char* kind,
                 const std::vector<std::vector<std::vector<M>>>& homs, int size,
                 int pair_size) {
  std::vector<M> all;
  for (int n = 0; n <= pair_size; ++n)
    for (int m = 0; m <= pair_size; ++m)
      for (const auto& f : homs[n][m]) all.push_back(f);
  for (const auto& f : all)
    for (const auto& g : all)
      for (const auto& h : all)
        c.expect(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)),
                 [&] { return std::string(kind) + ": tensor associativity fails"; });
  M unit(0, 0, {});
  for (const auto& f : all) {
    c.expect(tensor(f, unit) == f, [&] { return std::string(kind) + ": right unit fails"; });
    c.expect(tensor(unit, f) == f, [&] { return std::string(kind) + ": left unit fails"; });
  }
  struct Pair {
    const M* f;
    const M* g;
    M gf;
  };
  std::vector<Pair> pairs;
  for (int a = 0; a <= pair_size; ++a)
    for (int b = 0; b <= pair_size; ++b)
      for (int d = 0; d <= pair_size; ++d)
        for (const auto& f : homs[a][b])
          for (const auto& g : homs[b][d]) pairs.push_back({&f, &g, compose(g, f)});
  for (const auto& p : pairs)
    for (const auto& q : pairs)
      c.expect(tensor(p.gf, q.gf) == compose(tensor(*p.g, *q.g), tensor(*p.f, *q.f)),
               [&] { return std::string(kind) + ": tensor interchange fails"; });
  (void)size;
}

SuiteResult suite_tensor_laws(const Caps& caps) {
  Ctx c("tensor-laws");
  auto totals = hom_grid(caps.map_size, enumerate_total);
  auto partials = hom_grid(caps.map_size, enumerate_partial);
  for (int a = 0; a <= caps.map_size; ++a)
    for (int b = 0; b <= caps.map_size; ++b)
      c.expect(tensor(identity_total(a), identity_total(b)) == identity_total(a + b),
               "tensor of identities is not the identity");
  tensor_laws(c, "total", totals, caps.map_size, caps.tensor_size);
  tensor_laws(c, "partial", partials, caps.map_size, caps.tensor_size);
  return c.r;
}

SuiteResult suite_monoid_object(const Caps&) {
  Ctx c("monoid-object");
  auto mu = mu1();
  auto eta = eta1();
  auto one = identity_total(1);
  c.expect(compose(mu, tensor(mu, one)) == compose(mu, tensor(one, mu)),
           "associativity of the monoid object fails in the total category");
  c.expect(compose(mu, tensor(eta, one)) == one, "left unit law fails in the total category");
  c.expect(compose(mu, tensor(one, eta)) == one, "right unit law fails in the total category");
  c.expect(compose(mu, tensor(eta, one)) == compose(mu, tensor(one, eta)),
           "the two unit composites differ in the total category");
  auto pmu = to_partial(mu);
  auto peta = to_partial(eta);
  auto pone = identity_partial(1);
  c.expect(compose(pmu, tensor(pmu, pone)) == compose(pmu, tensor(pone, pmu)),
           "associativity of the monoid object fails in the partial category");
  c.expect(compose(pmu, tensor(peta, pone)) == pone,
           "left unit law fails in the partial category");
  c.expect(compose(pmu, tensor(pone, peta)) == pone,
           "right unit law fails in the partial category");
  c.expect(compose(pmu, tensor(peta, pone)) == compose(pmu, tensor(pone, peta)),
           "the two unit composites differ in the partial category");
  return c.r;
}

SuiteResult suite_functor_j(const Caps& caps) {
  Ctx c("functor-j");
  for (int dom = 0; dom <= caps.map_size; ++dom)
    for (int cod = 0; cod <= caps.map_size; ++cod) {
      auto arrows = enumerate_op(dom, cod);
      std::set<std::vector<int>> images;
      for (const auto& a : arrows) {
        auto jf = j_map(a);
        c.expect(jf.src == j_ob(dom) && jf.tgt == j_ob(cod), "j changes the wrong objects");
        images.insert(jf.img);
        c.expect(j_inverse(jf) == a, "j_inverse does not undo j");
      }
      c.expect(images.size() == arrows.size(), "j is not injective on a hom-set");
      c.expect(static_cast<long long>(arrows.size()) == interval_count(dom + 2, cod + 2),
               "j hom-set sizes do not match the binomial count");
    }
  for (int n = 2; n <= caps.map_size + 2; ++n)
    for (int m = 2; m <= caps.map_size + 2; ++m)
      for (const auto& f : enumerate_interval(n, m))
        c.expect(j_map(j_inverse(f)) == f, "j is not surjective onto interval maps");
  for (int n = 0; n <= caps.map_size; ++n)
    c.expect(j_map(identity_op(n)) == identity_interval(n + 2), "j drops an identity");
  for (int a = 0; a <= caps.map_size; ++a)
    for (int b = 0; b <= caps.map_size; ++b)
      for (int d = 0; d <= caps.map_size; ++d)
        for (const auto& f : enumerate_op(a, b))
          for (const auto& g : enumerate_op(b, d))
            c.expect(j_map(compose(g, f)) == compose(j_map(g), j_map(f)),
                     "j is not functorial");
  return c.r;
}

SuiteResult suite_functor_h(const Caps& caps) {
  Ctx c("functor-h");
  for (int n = 2; n <= caps.h_size; ++n) {
    c.expect(h_map(identity_interval(n)) == identity_partial(n - 2), "h drops an identity");
    for (int m = 2; m <= caps.h_size; ++m)
      for (const auto& f : enumerate_interval(n, m)) {
        auto hf = h_map(f);
        c.expect(hf.src == h_ob(n) && hf.tgt == h_ob(m), "h changes the wrong objects");
      }
  }
  for (int a = 2; a <= caps.h_size; ++a)
    for (int b = 2; b <= caps.h_size; ++b)
      for (int d = 2; d <= caps.h_size; ++d)
        for (const auto& f : enumerate_interval(a, b))
          for (const auto& g : enumerate_interval(b, d))
            c.expect(h_map(compose(g, f)) == compose(h_map(g), h_map(f)),
                     "h is not functorial");
  for (int a = 0; a <= caps.map_size; ++a)
    for (int b = 0; b <= caps.map_size; ++b) {
      for (const auto& f : enumerate_op(a, b))
        c.expect(hj_map(f) == h_map(j_map(f)), "hj is not h after j");
      for (int d = 0; d <= caps.map_size; ++d)
        for (const auto& f : enumerate_op(a, b))
          for (const auto& g : enumerate_op(b, d))
            c.expect(hj_map(compose(g, f)) == compose(hj_map(g), hj_map(f)),
                     "hj is not functorial");
    }
  return c.r;
}

SuiteResult suite_factorization(const Caps& caps) {
  Ctx c("factorization");
  for (int dom = 0; dom <= caps.map_size; ++dom)
    for (int cod = 0; cod <= caps.map_size; ++cod)
      for (const auto& a : enumerate_op(dom, cod)) {
        auto tags = factorize(a);
        c.expect(recompose(a.dom, tags) == a, "recompose does not undo factorize");
        size_t split = 0;
        while (split < tags.size() && tags[split].kind == GenTag::Kind::face) ++split;
        bool shape = true;
        for (size_t k = split; k < tags.size(); ++k)
          shape = shape && tags[k].kind == GenTag::Kind::degeneracy;
        for (size_t k = 1; k < split; ++k)
          shape = shape && tags[k - 1].index > tags[k].index;
        for (size_t k = split + 1; k < tags.size(); ++k)
          shape = shape && tags[k - 1].index < tags[k].index;
        int level = dom;
        for (const auto& t : tags) {
          shape = shape && t.level == level;
          level += t.kind == GenTag::Kind::face ? -1 : 1;
        }
        shape = shape && level == cod;
        c.expect(shape, "canonical factorization has the wrong shape");
      }
  for (int n = 1; n <= caps.map_size; ++n)
    for (int j = 1; j <= n; ++j)
      c.expect(edge_arrow(n, j).underlying == TotalMap(2, n + 1, {j - 1, j}),
               "edge arrow has the wrong underlying map");
  return c.r;
}

SuiteResult suite_nerve_oracle(const Caps& caps) {
  Ctx c("nerve-oracle");
  for (const auto& m : monoids_up_to(caps.monoid_order)) {
    auto x = nerve(m, caps.trunc);
    for (int n = 1; n <= caps.trunc; ++n)
      for (int i = 0; i <= n; ++i)
        c.expect(x.faces[n][i] == bar_face(m, n, i), [&] {
          return "face d" + std::to_string(i) + "^" + std::to_string(n) +
                 " disagrees with the bar formula";
        });
    for (int n = 0; n < caps.trunc; ++n)
      for (int i = 0; i <= n; ++i)
        c.expect(x.degens[n][i] == bar_degen(m, n, i), [&] {
          return "degeneracy s" + std::to_string(i) + "^" + std::to_string(n) +
                 " disagrees with the bar formula";
        });
  }
  return c.r;
}

SuiteResult suite_nerve_segal(const Caps& caps) {
  Ctx c("nerve-segal");
  for (const auto& m : monoids_up_to(caps.monoid_order)) {
    auto x = nerve(m, caps.trunc);
    auto strict = segal_check(x, segal_mode::strict);
    c.expect(strict.pass, [&] {
      for (const auto& l : strict.levels)
        if (!l.pass) return "strict check fails: " + l.witness;
      return std::string("strict check fails");
    });
    c.expect(segal_check(x, segal_mode::bijective).pass,
             "strict pass does not imply bijective pass");
    auto p2 = p_map(x, 2);
    bool identity = true;
    for (int e = 0; e < x.level_size(2); ++e)
      identity = identity && p2[e] == tuple_decode(e, 2, m.order());
    c.expect(identity, "p2 is not the identity on a nerve");
  }
  auto c2 = constant_sset({"p", "q"}, caps.trunc);
  auto p2 = p_map(c2, 2);
  c.expect(p2[0] == std::vector<int>({0, 0}) && p2[1] == std::vector<int>({1, 1}),
           "p2 on the constant object is not the diagonal");
  return c.r;
}

SuiteResult suite_identities(const Caps& caps) {
  Ctx c("simplicial-identities");
  for (const auto& m : monoids_up_to(caps.monoid_order))
    c.expect(simplicial_identities_check(nerve(m, caps.trunc)).empty(),
             "a nerve violates the identities");
  c.expect(simplicial_identities_check(constant_sset({"p"}, caps.trunc)).empty(),
           "a constant object violates the identities");
  c.expect(simplicial_identities_check(constant_sset({"p", "q"}, caps.trunc)).empty(),
           "a constant object violates the identities");

  std::vector<SSet> objects = {nerve(z2(), caps.trunc), nerve(lz3(), std::min(caps.trunc, 3))};
  for (const auto& x : objects)
    for (int dom = 0; dom <= x.trunc; ++dom)
      for (int cod = 0; cod <= x.trunc; ++cod)
        for (const auto& a : enumerate_op(dom, cod)) {
          auto tags = factorize(a);
          auto base = eval_arrow(x, a);
          std::vector<int> levels = {dom};
          for (const auto& t : tags)
            levels.push_back(levels.back() + (t.kind == GenTag::Kind::face ? -1 : 1));
          for (size_t p = 0; p <= tags.size(); ++p) {
            int k = levels[p];
            if (k + 1 > x.trunc) continue;
            for (int j = 0; j <= k; ++j)
              for (int i : {j, j + 1}) {
                auto widened = tags;
                widened.insert(widened.begin() + p, {GenTag::Kind::face, i, k + 1});
                widened.insert(widened.begin() + p, {GenTag::Kind::degeneracy, j, k});
                c.expect(recompose(dom, widened) == a,
                         "inserting an identity factor changes the arrow");
                c.expect(eval_tags(x, dom, widened) == base,
                         "evaluation depends on the factorization");
              }
          }
        }
  return c.r;
}

SuiteResult suite_reconstruction(const Caps& caps) {
  Ctx c("reconstruction");
  for (const auto& m : monoids_up_to(caps.monoid_order)) {
    auto x = nerve(m, caps.trunc);
    auto r = reconstruct_monoid(x);
    c.expect(r == m, "reconstruction does not return the table exactly");
    auto bar = verify_bar_equality(x, m);
    c.expect(bar.equal, [&] { return "bar equality fails: " + bar.counterexample; });
  }
  auto relabeled = nerve(z2(), caps.trunc);
  for (size_t e = 0; e < relabeled.levels[2].size(); ++e)
    relabeled.levels[2][e] = "q" + std::to_string(e);
  auto strict = segal_check(relabeled, segal_mode::strict);
  c.expect(!strict.pass && !strict.levels[2].pass,
           "relabeling level 2 should break the strict check there");
  c.expect(segal_check(relabeled, segal_mode::bijective).pass,
           "relabeling should not break the bijective check");
  c.expect(reconstruct_monoid(relabeled) == z2(),
           "reconstruction from a bijective-only object fails");
  c.expect_error(status_code::check, "reconstructing a non-Segal object should fail",
                 [&] { reconstruct_monoid(constant_sset({"p", "q"}, caps.trunc)); });
  c.expect_error(status_code::invalid, "reconstructing a shallow truncation should fail",
                 [&] { reconstruct_monoid(nerve(z2(), 2)); });
  return c.r;
}

SuiteResult suite_negative_controls(const Caps& caps) {
  Ctx c("negative-controls");
  auto c2 = constant_sset({"p", "q"}, caps.trunc);
  for (auto mode : {segal_mode::strict, segal_mode::bijective}) {
    auto report = segal_check(c2, mode);
    c.expect(!report.pass, "the constant two-point object passes the Segal check");
    c.expect(!report.levels[0].pass && !report.levels[0].witness.empty(),
             "no witness at level 0");
    c.expect(!report.levels[2].pass && !report.levels[2].witness.empty(),
             "no witness at level 2");
  }

  auto m = z2();
  auto base = nerve(m, 3);
  long long mutants = 0;
  auto caught = [&](const SSet& mutant) {
    if (!verify_bar_equality(mutant, m).equal) return true;
    return !simplicial_identities_check(mutant).empty();
  };
  for (int n = 1; n <= base.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      for (size_t e = 0; e < base.faces[n][i].size(); ++e)
        for (int v = 0; v < base.level_size(n - 1); ++v) {
          if (v == base.faces[n][i][e]) continue;
          auto mutant = base;
          mutant.faces[n][i][e] = v;
          ++mutants;
          c.expect(caught(mutant), "an undetected face mutation exists");
        }
  for (int n = 0; n < base.trunc; ++n)
    for (int i = 0; i <= n; ++i)
      for (size_t e = 0; e < base.degens[n][i].size(); ++e)
        for (int v = 0; v < base.level_size(n + 1); ++v) {
          if (v == base.degens[n][i][e]) continue;
          auto mutant = base;
          mutant.degens[n][i][e] = v;
          ++mutants;
          c.expect(caught(mutant), "an undetected degeneracy mutation exists");
        }
  c.expect(mutants >= 100, [&] {
    return "only " + std::to_string(mutants) + " single-entry mutations exist";
  });

  auto swapped = base;
  std::swap(swapped.faces[2][0], swapped.faces[2][1]);
  c.expect(!simplicial_identities_check(swapped).empty(),
           "swapping the first two faces one level up goes unnoticed");
  return c.r;
}

SuiteResult suite_product(const Caps& caps) {
  Ctx c("product");
  int trunc = std::min(caps.trunc, 3);
  auto x = nerve(z2(), trunc);
  auto y = nerve(z3(), trunc);
  auto p = product(x, y);
  for (int n = 0; n <= trunc; ++n)
    c.expect(p.sset.level_size(n) == x.level_size(n) * y.level_size(n),
             "product level sizes are not the products of sizes");
  c.expect(simplicial_identities_check(p.sset).empty(), "a product violates the identities");
  for (const auto& t : all_gen_tags(trunc)) {
    int cod = t.kind == GenTag::Kind::face ? t.level - 1 : t.level + 1;
    const auto& tp = gen_table(p.sset, t);
    const auto& tx = gen_table(x, t);
    const auto& ty = gen_table(y, t);
    for (int e = 0; e < p.sset.level_size(t.level); ++e) {
      c.expect(p.proj1[cod][tp[e]] == tx[p.proj1[t.level][e]],
               "the first projection is not simplicial");
      c.expect(p.proj2[cod][tp[e]] == ty[p.proj2[t.level][e]],
               "the second projection is not simplicial");
    }
  }
  auto terminal = constant_sset({"pt"}, trunc);
  auto pt = product(x, terminal);
  for (int n = 0; n <= trunc; ++n) {
    c.expect(pt.sset.level_size(n) == x.level_size(n),
             "the terminal object changes level sizes");
    bool ident = true;
    for (int e = 0; e < pt.sset.level_size(n); ++e) ident = ident && pt.proj1[n][e] == e;
    c.expect(ident, "projection from the terminal product is not the identity");
  }

  auto y2 = nerve(z3(), std::max(caps.bitrunc - 1, 1));
  auto z = external_product(x, y2);
  c.expect(bisset_identities_check(z).empty(), "an external product violates the invariants");
  for (int m = 0; m <= z.vtrunc; ++m)
    c.expect(row(z, m) == product(x, constant_sset(y2.levels[m], x.trunc)).sset,
             "a row of the external product is not the componentwise product");
  for (int n = 0; n <= z.htrunc; ++n)
    c.expect(column(z, n) == product(constant_sset(x.levels[n], y2.trunc), y2).sset,
             "a column of the external product is not the componentwise product");
  return c.r;
}

SuiteResult suite_double_nerve(const Caps& caps) {
  Ctx c("double-nerve");
  for (const auto& m : monoids_up_to(caps.monoid_order)) {
    if (!is_commutative(m)) {
      c.expect_error(status_code::check, "a noncommutative double nerve was accepted",
                     [&] { double_nerve(m, 2, 2); });
      try {
        double_nerve(m, 2, 2);
      } catch (const error& e) {
        c.expect(std::string(e.what()).find("not commutative") != std::string::npos,
                 "the noncommutativity witness is missing");
      }
      continue;
    }
    auto dn = double_nerve(m, caps.bitrunc, caps.bitrunc);
    c.expect(bisset_identities_check(dn).empty(), "a double nerve violates the invariants");
    c.expect(double_segal_check(dn, segal_mode::strict).pass,
             "a double nerve fails the strict double Segal check");
    c.expect(p_naturality_check(dn).pass, "a double nerve fails the naturality squares");
    auto eh = eckmann_hilton(dn);
    c.expect(eh.ok(), [&] { return "the extraction verdict fails: " + eh.witness; });
    c.expect(eh.horizontal == m && eh.vertical == m,
             "the extracted products are not the original one");
    c.expect(row(dn, 1) == nerve(m, caps.bitrunc), "row 1 is not the nerve");
    c.expect(column(dn, 1) == nerve(m, caps.bitrunc), "column 1 is not the nerve");
    for (int n = 0; n <= dn.htrunc; ++n)
      c.expect(dn.level_size(n, 0) == 1, "row 0 is not levelwise a point");
  }

  auto dn = double_nerve(z2(), caps.bitrunc, caps.bitrunc);
  int t0 = dn.vfaces[2][2][1][3];
  int alt = -1;
  for (int t = 0; t < dn.level_size(2, 1); ++t)
    if (dn.hfaces[2][1][1][t] != dn.hfaces[2][1][1][t0]) {
      alt = t;
      break;
    }
  c.expect(alt >= 0, "no distinguishable mutation target exists");
  dn.vfaces[2][2][1][3] = alt;
  auto nat = p_naturality_check(dn);
  c.expect(!nat.pass && !nat.witness.empty(),
           "a mutated vertical generator passes the naturality squares");
  auto eh = eckmann_hilton(dn);
  c.expect(!eh.interchange && !eh.witness.empty(),
           "a mutated vertical generator passes the interchange sweep");

  auto broken = double_nerve(z2(), 2, 2);
  for (int n = 0; n <= 2; ++n) {
    broken.levels[n][1] = {"p", "q"};
    for (auto& t : broken.hfaces[n][1]) t = {0, 1};
    for (auto& t : broken.hdegens[n][1]) t = {0, 1};
    for (auto& t : broken.vfaces[n][1]) t.assign(2, 0);
    for (auto& t : broken.vdegens[n][1]) t.assign(2, 0);
    for (auto& t : broken.vdegens[n][0]) t.assign(t.size(), 0);
    for (auto& t : broken.vfaces[n][2]) t.assign(t.size(), 0);
  }
  auto report = double_segal_check(broken, segal_mode::strict);
  c.expect(!report.parts[1].report.pass, "the replaced row still passes");
  c.expect(report.parts[0].report.pass && report.parts[2].report.pass,
           "the failure is not localized to the replaced row");
  return c.r;
}

SuiteResult suite_render(const Caps& caps) {
  Ctx c("render");
  int size = std::min(caps.map_size, 3);
  auto check_distinct = [&](const auto& maps) {
    std::set<std::string> ascii, dot;
    for (const auto& f : maps) {
      ascii.insert(render_arrow(f, render_style::ascii));
      dot.insert(render_arrow(f, render_style::dot));
    }
    c.expect(ascii.size() == maps.size(), "two maps render to the same text");
    c.expect(dot.size() == maps.size(), "two maps render to the same dot graph");
  };
  for (int n = 0; n <= size; ++n)
    for (int m = 0; m <= size; ++m) {
      check_distinct(enumerate_total(n, m));
      check_distinct(enumerate_partial(n, m));
      check_distinct(enumerate_interval(n + 2, m + 2));
    }
  for (const auto& f : enumerate_partial(size, size)) {
    auto dot = render_arrow(f, render_style::dot);
    long long depth = 0;
    bool balanced = true;
    for (char ch : dot) {
      if (ch == '{') ++depth;
      if (ch == '}') --depth;
      balanced = balanced && depth >= 0;
    }
    c.expect(balanced && depth == 0, "dot braces are unbalanced");
    auto first_edge = dot.find("->");
    auto last_node = dot.rfind("[label=");
    c.expect(first_edge == std::string::npos || last_node < first_edge,
             "a dot node is declared after an edge");
  }
  c.expect(render_arrow(mu1(), render_style::ascii) ==
               "2→1:[0,0]\n0   1\n*   *\n \\ /\n  *\n  0\n",
           "the 2-over-1 fork picture is off");
  c.expect(render_arrow(eta1(), render_style::ascii) == "0→1:[]\n*\n0\n",
           "the single-target picture is off");
  c.expect(render_arrow(pi1(), render_style::ascii) == "1⇀0:[_]\n0\no\n",
           "the open-vertex picture is off");
  return c.r;
}

SuiteResult suite_serialization(const Caps& caps) {
  Ctx c("serialization");
  int size = std::min(caps.map_size, 3);
  for (int n = 0; n <= size; ++n)
    for (int m = 0; m <= size; ++m) {
      for (const auto& f : enumerate_total(n, m))
        c.expect(parse_map(format_map(f)) == AnyMap(f), "total notation does not round-trip");
      for (const auto& f : enumerate_partial(n, m))
        c.expect(parse_map(format_map(f)) == AnyMap(f),
                 "partial notation does not round-trip");
    }
  for (const auto& m : {z2(), b2(), z3(), lz3()})
    c.expect(monoid_from_json(monoid_to_json(m)) == m, "monoid files do not round-trip");
  for (const auto& x : {nerve(z2(), 3), nerve(z3(), 2), constant_sset({"p", "q"}, 2)})
    c.expect(sset_from_json(sset_to_json(x)) == x, "simplicial files do not round-trip");
  auto dn = double_nerve(z2(), 2, 2);
  c.expect(bisset_from_json(bisset_to_json(dn)) == dn, "bisimplicial files do not round-trip");

  auto mutant = nerve(z2(), 2);
  mutant.degens[0][0][0] = 1;
  c.expect_error(status_code::check, "the loader accepts violated identities",
                 [&] { sset_from_json(sset_to_json(mutant)); });
  c.expect_error(status_code::parse, "the monoid loader accepts bad labels", [] {
    monoid_from_json("{\"elements\": [\"e\", \"a,b\"], \"unit\": \"e\", "
                     "\"table\": [[\"e\", \"a,b\"], [\"a,b\", \"e\"]]}");
  });
  return c.r;
}

using SuiteFn = SuiteResult (*)(const Caps&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"hom-counts", suite_hom_counts},
      {"compose-laws", suite_compose_laws},
      {"tensor-laws", suite_tensor_laws},
      {"monoid-object", suite_monoid_object},
      {"functor-j", suite_functor_j},
      {"functor-h", suite_functor_h},
      {"factorization", suite_factorization},
      {"nerve-oracle", suite_nerve_oracle},
      {"nerve-segal", suite_nerve_segal},
      {"simplicial-identities", suite_identities},
      {"reconstruction", suite_reconstruction},
      {"negative-controls", suite_negative_controls},
      {"product", suite_product},
      {"double-nerve", suite_double_nerve},
      {"render", suite_render},
      {"serialization", suite_serialization},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<SuiteResult> run_suites(const VerifyOptions& options,
                                    const std::vector<std::string>& only) {
  Caps caps = caps_from(options);
  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    results.push_back(fn(caps));
  }
  return results;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  return run_suites(options, {});
}

bool verify_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string format_verify(const std::vector<SuiteResult>& results) {
  std::string out;
  long long total = 0;
  int failures = 0;
  for (const auto& r : results) {
    total += r.checks;
    if (r.pass) {
      out += r.name + ": pass (" + std::to_string(r.checks) + " checks)\n";
    } else {
      ++failures;
      out += r.name + ": FAIL after " + std::to_string(r.checks) + " checks: " + r.failure +
             "\n";
    }
  }
  if (failures == 0)
    out += "all " + std::to_string(results.size()) + " suites passed, " +
           std::to_string(total) + " checks\n";
  else
    out += std::to_string(failures) + " of " + std::to_string(results.size()) +
           " suites failed\n";
  return out;
}

}  // namespace segalbar
