#include <segalbar.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct owned {
  char* p = nullptr;
  owned() = default;
  owned(const owned&) = delete;
  owned& operator=(const owned&) = delete;
  ~owned() { segalbar_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <typename T, void (*Free)(T*)>
struct handle {
  T* p = nullptr;
  handle() = default;
  handle(const handle&) = delete;
  handle& operator=(const handle&) = delete;
  ~handle() { Free(p); }
};

using monoid_handle = handle<segalbar_monoid, segalbar_monoid_free>;
using sset_handle = handle<segalbar_sset, segalbar_sset_free>;
using bisset_handle = handle<segalbar_bisset, segalbar_bisset_free>;

int report_error(segalbar_status status) {
  std::cerr << "error: " << segalbar_last_error() << "\n";
  return status == SEGALBAR_ERR_CHECK ? 1 : 2;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

std::string sniff_kind(const std::string& text) {
  if (text.find("⇀") != std::string::npos || text.find("~>") != std::string::npos)
    return "partial";
  return "total";
}

int env_size_cap() {
  const char* env = std::getenv("SEGALBAR_MAX_SIZE");
  if (env == nullptr || *env == '\0') return -1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 0) return -1;
  return static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite simplex categories, nerves of monoids, and Segal checks"};
  app.require_subcommand(1);

  std::string kind = "total", map_f, map_g, map_text, style = "ascii", mode = "strict";
  std::string monoid_path, sset_path, bisset_path, only, render_kind;
  int dom = 0, cod = 0, trunc = 3, htrunc = 3, vtrunc = 3, max_size = 4;
  bool count_only = false, list_suites = false;

  auto* hom = app.add_subcommand("hom", "list the arrows between two objects");
  hom->add_option("kind", kind, "total, partial, interval, or op")->required();
  hom->add_option("dom", dom, "source object")->required();
  hom->add_option("cod", cod, "target object")->required();
  hom->add_flag("--count", count_only, "print only the count");

  auto* compose = app.add_subcommand("compose", "compose two maps, second after first");
  compose->add_option("kind", kind)->required();
  compose->add_option("f", map_f, "applied first")->required();
  compose->add_option("g", map_g, "applied second")->required();

  auto* tensor = app.add_subcommand("tensor", "block sum of two maps");
  tensor->add_option("kind", kind, "total or partial")->required();
  tensor->add_option("f", map_f)->required();
  tensor->add_option("g", map_g)->required();

  auto* jmap = app.add_subcommand("jmap", "interval map of an op arrow");
  jmap->add_option("map", map_text, "underlying total notation")->required();

  auto* hmap = app.add_subcommand("hmap", "partial map of an interval map");
  hmap->add_option("map", map_text, "interval map in total notation")->required();

  auto* hjmap = app.add_subcommand("hjmap", "partial map of an op arrow");
  hjmap->add_option("map", map_text, "underlying total notation")->required();

  auto* nerve = app.add_subcommand("nerve", "nerve of a monoid as a simplicial-set file");
  nerve->add_option("monoid", monoid_path, "monoid file")->required();
  nerve->add_option("--N", trunc, "truncation level")->capture_default_str();

  auto* segal = app.add_subcommand("segal-check", "Segal condition per level");
  segal->add_option("sset", sset_path, "simplicial-set file")->required();
  segal->add_option("--mode", mode, "strict or bijective")->capture_default_str();

  auto* reconstruct = app.add_subcommand("reconstruct", "monoid file from a Segal object");
  reconstruct->add_option("sset", sset_path, "simplicial-set file")->required();

  auto* barequal = app.add_subcommand("bar-equal",
                                      "compare an object with the nerve of a monoid");
  barequal->add_option("sset", sset_path, "simplicial-set file")->required();
  barequal->add_option("monoid", monoid_path, "monoid file")->required();

  auto* dnerve = app.add_subcommand("double-nerve",
                                    "double nerve of a commutative monoid");
  dnerve->add_option("monoid", monoid_path, "monoid file")->required();
  dnerve->add_option("--N", htrunc, "horizontal truncation")->capture_default_str();
  dnerve->add_option("--M", vtrunc, "vertical truncation")->capture_default_str();

  auto* bisegal = app.add_subcommand("bisegal-check",
                                     "row and column Segal conditions plus naturality");
  bisegal->add_option("bisset", bisset_path, "bisimplicial-set file")->required();
  bisegal->add_option("--mode", mode, "strict or bijective")->capture_default_str();

  auto* eh = app.add_subcommand("eckmann-hilton",
                                "extract and compare the two products");
  eh->add_option("bisset", bisset_path, "bisimplicial-set file")->required();

  auto* render = app.add_subcommand("render", "draw a map as text");
  render->add_option("map", map_text, "map in canonical notation")->required();
  render->add_option("--kind", render_kind, "total, partial, interval, or op");
  render->add_option("--style", style, "ascii or dot")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the exhaustive property suites");
  verify->add_option("--max-size", max_size, "sweep size cap")->capture_default_str();
  verify->add_option("--only", only, "comma-separated suite names");
  verify->add_flag("--list", list_suites, "list the suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*hom) {
    owned out;
    long long n = 0;
    auto status = segalbar_hom(kind.c_str(), dom, cod, &out.p, &n);
    if (status != SEGALBAR_OK) return report_error(status);
    if (!count_only) std::cout << out.str();
    std::cout << "count: " << n << "\n";
    return 0;
  }

  if (*compose || *tensor) {
    owned out;
    auto status = *compose
                      ? segalbar_compose(kind.c_str(), map_f.c_str(), map_g.c_str(), &out.p)
                      : segalbar_tensor(kind.c_str(), map_f.c_str(), map_g.c_str(), &out.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << out.str() << "\n";
    return 0;
  }

  if (*jmap || *hmap || *hjmap) {
    const char* name = *jmap ? "j" : *hmap ? "h" : "hj";
    owned out;
    auto status = segalbar_functor(name, map_text.c_str(), &out.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << out.str() << "\n";
    return 0;
  }

  if (*nerve) {
    std::string json;
    if (!read_file(monoid_path, json)) return 2;
    monoid_handle m;
    auto status = segalbar_monoid_read(json.c_str(), &m.p);
    if (status != SEGALBAR_OK) return report_error(status);
    sset_handle x;
    status = segalbar_nerve(m.p, trunc, &x.p);
    if (status != SEGALBAR_OK) return report_error(status);
    owned out;
    status = segalbar_sset_write(x.p, &out.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << out.str() << "\n";
    return 0;
  }

  if (*segal) {
    std::string json;
    if (!read_file(sset_path, json)) return 2;
    sset_handle x;
    auto status = segalbar_sset_read(json.c_str(), &x.p);
    if (status != SEGALBAR_OK) return report_error(status);
    int pass = 0;
    owned report;
    status = segalbar_segal_check(x.p, mode.c_str(), &pass, &report.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << report.str();
    std::cout << mode << ": " << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
  }

  if (*reconstruct) {
    std::string json;
    if (!read_file(sset_path, json)) return 2;
    sset_handle x;
    auto status = segalbar_sset_read(json.c_str(), &x.p);
    if (status != SEGALBAR_OK) return report_error(status);
    monoid_handle m;
    status = segalbar_reconstruct(x.p, &m.p);
    if (status != SEGALBAR_OK) return report_error(status);
    owned out;
    status = segalbar_monoid_write(m.p, &out.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << out.str() << "\n";
    return 0;
  }

  if (*barequal) {
    std::string sset_json, monoid_json;
    if (!read_file(sset_path, sset_json) || !read_file(monoid_path, monoid_json)) return 2;
    sset_handle x;
    auto status = segalbar_sset_read(sset_json.c_str(), &x.p);
    if (status != SEGALBAR_OK) return report_error(status);
    monoid_handle m;
    status = segalbar_monoid_read(monoid_json.c_str(), &m.p);
    if (status != SEGALBAR_OK) return report_error(status);
    int pass = 0;
    owned report;
    status = segalbar_bar_equality(x.p, m.p, &pass, &report.p);
    if (status != SEGALBAR_OK) return report_error(status);
    if (pass) {
      std::cout << "equal\n";
      return 0;
    }
    std::cout << "not equal: " << report.str() << "\n";
    return 1;
  }

  if (*dnerve) {
    std::string json;
    if (!read_file(monoid_path, json)) return 2;
    monoid_handle m;
    auto status = segalbar_monoid_read(json.c_str(), &m.p);
    if (status != SEGALBAR_OK) return report_error(status);
    bisset_handle x;
    status = segalbar_double_nerve(m.p, htrunc, vtrunc, &x.p);
    if (status != SEGALBAR_OK) return report_error(status);
    owned out;
    status = segalbar_bisset_write(x.p, &out.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << out.str() << "\n";
    return 0;
  }

  if (*bisegal) {
    std::string json;
    if (!read_file(bisset_path, json)) return 2;
    bisset_handle x;
    auto status = segalbar_bisset_read(json.c_str(), &x.p);
    if (status != SEGALBAR_OK) return report_error(status);
    int pass = 0;
    owned report;
    status = segalbar_double_segal_check(x.p, mode.c_str(), &pass, &report.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << report.str();
    std::cout << mode << ": " << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
  }

  if (*eh) {
    std::string json;
    if (!read_file(bisset_path, json)) return 2;
    bisset_handle x;
    auto status = segalbar_bisset_read(json.c_str(), &x.p);
    if (status != SEGALBAR_OK) return report_error(status);
    int pass = 0;
    owned report;
    status = segalbar_eckmann_hilton(x.p, &pass, &report.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << report.str();
    return pass ? 0 : 1;
  }

  if (*render) {
    if (render_kind.empty()) render_kind = sniff_kind(map_text);
    owned out;
    auto status =
        segalbar_render_map(render_kind.c_str(), map_text.c_str(), style.c_str(), &out.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << out.str();
    return 0;
  }

  if (*verify) {
    if (list_suites) {
      owned out;
      auto status = segalbar_verify_suites(&out.p);
      if (status != SEGALBAR_OK) return report_error(status);
      std::cout << out.str();
      return 0;
    }
    int cap = env_size_cap();
    if (cap >= 0 && max_size > cap) max_size = cap;
    int pass = 0;
    owned report;
    auto status =
        segalbar_verify(max_size, only.empty() ? nullptr : only.c_str(), &pass, &report.p);
    if (status != SEGALBAR_OK) return report_error(status);
    std::cout << report.str();
    return pass ? 0 : 1;
  }

  return 2;
}
