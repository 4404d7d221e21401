// Command-line front end: spanning-tree homology, comparison with reduced
// Khovanov homology, classical invariants and property checks for PD codes.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttkh/braids.hpp"
#include "ttkh/checks.hpp"
#include "ttkh/classical.hpp"
#include "ttkh/errors.hpp"
#include "ttkh/spantree.hpp"
#include "ttkh/twisted.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ttkh;

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  bool exact = false;
  bool evaluated = false;
  int field_bits = 16;
  int trials = 3;
  std::uint64_t seed = 0;
  int mark = 0;  // raw edge label; 0 keeps the file's choice
  bool json_out = false;
  bool timing = false;
  int exact_threshold = 8;
  int cube_threshold = 14;
  int jobs = 1;

  HomologyOptions homology() const {
    HomologyOptions o;
    o.mode = exact ? Mode::Exact : evaluated ? Mode::Evaluated : Mode::Auto;
    o.exact_threshold = exact_threshold;
    o.field_bits = field_bits;
    o.trials = trials;
    o.seed = seed;
    o.jobs = 1;  // parallelism is spent across diagrams
    return o;
  }
  CubeOptions cube() const {
    CubeOptions c;
    c.threshold = cube_threshold;
    return c;
  }
};

struct Item {
  std::string name;
  std::string pd;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Files hold one diagram per line, optionally `name: pd`; a directory
// contributes its *.pd files in name order.
std::vector<Item> collect(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    if (in != "-" && fs::is_directory(in)) {
      std::vector<std::string> found;
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.path().extension() == ".pd") found.push_back(e.path().string());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  std::vector<Item> items;
  for (const auto& f : files) {
    auto batch = split_batch(read_text(f));
    const std::string stem = f == "-" ? "stdin" : fs::path(f).stem().string();
    for (auto& b : batch) {
      std::string name = batch.size() == 1 && b.name.rfind("line", 0) == 0 ? stem : b.name;
      items.push_back({name, b.pd});
    }
  }
  return items;
}

LinkDiagram load(const Item& item, const RunConfig& cfg) {
  if (cfg.mark == 0) return parse_pd(item.pd);
  static const std::regex mark_re(R"(mark\s*=\s*\d+)");
  return parse_pd(std::regex_replace(item.pd, mark_re, "") + " mark=" + std::to_string(cfg.mark));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json poincare_object(const Poincare& p) {
  json o = json::object();
  for (const auto& [k, v] : p) o[std::to_string(k)] = v;
  return o;
}

// Runs body on every item, in parallel, printing outputs in input order.
// Returns the number of items whose body reported failure.
int for_each_item(const std::vector<Item>& items, const RunConfig& cfg,
                  const std::function<bool(const Item&, std::string&)>& body) {
  std::vector<std::string> out(items.size());
  std::vector<char> ok(items.size(), 1);
  parallel_for(static_cast<int>(items.size()), cfg.jobs, [&](int i) {
    try {
      ok[i] = body(items[i], out[i]);
    } catch (const std::exception& e) {
      ok[i] = 0;
      if (cfg.json_out) {
        out[i] = json{{"name", items[i].name}, {"error", e.what()}}.dump() + "\n";
      } else {
        out[i] = items[i].name + ": error: " + e.what() + "\n";
      }
    }
  });
  int failures = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!ok[i]) {
      ++failures;
      std::cerr << out[i];
    } else {
      std::cout << out[i];
    }
  }
  return failures;
}

std::string prefix(const Item& item, std::size_t n_items) {
  return n_items > 1 ? item.name + ": " : "";
}

int cmd_homology(const RunConfig& cfg) {
  auto items = collect(cfg.inputs);
  return for_each_item(items, cfg, [&](const Item& item, std::string& out) {
    auto t0 = std::chrono::steady_clock::now();
    LinkDiagram d = load(item, cfg);
    PreparedDiagram p(d);
    HomologyReport h = spanning_tree_homology(p, cfg.homology());
    double secs = seconds_since(t0);
    if (cfg.json_out) {
      json j{{"name", item.name},
             {"n_crossings", d.n_crossings()},
             {"n_plus", p.n_plus},
             {"generators", h.generators},
             {"poincare", poincare_object(h.poincare)},
             {"det", determinant(d).str()},
             {"signature", h.split ? json(nullptr) : json(signature(d))},
             {"mode", to_string(h.mode)},
             {"seed", cfg.seed}};
      if (h.split) j["split"] = true;
      if (cfg.timing) j["seconds"] = secs;
      out = j.dump() + "\n";
      return true;
    }
    std::ostringstream s;
    s << prefix(item, items.size());
    if (h.split) {
      s << "0 (split diagram)";
    } else {
      s << poincare_text(h.poincare) << " (" << h.generators << " generators)";
    }
    if (cfg.timing) s << " [" << to_string(h.mode) << ", " << secs << " s]";
    out = s.str() + "\n";
    return true;
  });
}

int cmd_compare(const RunConfig& cfg) {
  auto items = collect(cfg.inputs);
  return for_each_item(items, cfg, [&](const Item& item, std::string& out) {
    LinkDiagram d = load(item, cfg);
    HomologyReport h = spanning_tree_homology(d, cfg.homology());
    Poincare kh = reduced_khovanov_delta(d, cfg.cube());
    auto differ = differing_gradings(kh, h.poincare);
    auto violations = dominance_failures(kh, h.poincare);
    if (cfg.json_out) {
      out = json{{"name", item.name},
                 {"ht", poincare_object(h.poincare)},
                 {"kh", poincare_object(kh)},
                 {"equal", differ.empty()},
                 {"differing", differ},
                 {"kh_dominates", violations.empty()},
                 {"mode", to_string(h.mode)},
                 {"seed", cfg.seed}}
                .dump() +
            "\n";
    } else {
      std::ostringstream s;
      s << prefix(item, items.size());
      if (differ.empty()) {
        s << "equal: " << poincare_text(kh);
      } else {
        s << "differ: HT " << poincare_text(h.poincare) << " vs KH " << poincare_text(kh) << " at delta";
        for (int k : differ) s << ' ' << k;
      }
      if (!violations.empty()) s << " (rank of KH below HT)";
      out = s.str() + "\n";
    }
    return violations.empty();
  });
}

int cmd_invariants(const RunConfig& cfg) {
  auto items = collect(cfg.inputs);
  return for_each_item(items, cfg, [&](const Item& item, std::string& out) {
    LinkDiagram d = load(item, cfg);
    BigInt det = determinant(d);
    if (d.is_split()) {
      out = cfg.json_out ? json{{"name", item.name}, {"det", "0"}, {"split", true}}.dump() + "\n"
                         : prefix(item, items.size()) + "det 0 (split diagram)\n";
      return true;
    }
    int sig = signature(d);
    TreePolynomials tp = tree_polynomial(d);
    HomologyReport h = spanning_tree_homology(d, cfg.homology());
    EulerCheck e = euler_check(d, h.poincare);
    if (cfg.json_out) {
      out = json{{"name", item.name},        {"det", det.str()},          {"signature", sig},
                 {"q", poly_text(tp.q)},      {"r", poly_text(tp.r)},      {"nu", tp.nu},
                 {"poincare", poincare_object(h.poincare)}, {"euler_ok", e.ok}, {"seed", cfg.seed}}
                .dump() +
            "\n";
    } else {
      std::ostringstream s;
      s << prefix(item, items.size()) << "det " << det << ", signature " << sig << ", Q(d) = " << poly_text(tp.q)
        << ", R(d) = " << poly_text(tp.r) << ", euler " << (e.ok ? "ok" : "MISMATCH");
      out = s.str() + "\n";
    }
    return e.ok;
  });
}

int cmd_verify(const RunConfig& cfg) {
  auto items = collect(cfg.inputs);
  CheckOptions opt;
  opt.homology = cfg.homology();
  return for_each_item(items, cfg, [&](const Item& item, std::string& out) {
    std::vector<CheckResult> results;
    try {
      results = check_diagram(load(item, cfg), opt);
    } catch (const Error& e) {
      results.push_back({"parse", false, false, e.what()});
    }
    bool all = true;
    std::ostringstream s;
    for (const auto& r : results) {
      all = all && r.ok;
      if (cfg.json_out) {
        s << json{{"name", item.name}, {"property", r.property}, {"ok", r.ok}, {"skipped", r.skipped},
                  {"detail", r.detail}}
                 .dump()
          << '\n';
      } else {
        s << (r.skipped ? "SKIP " : r.ok ? "PASS " : "FAIL ") << r.property << ' ' << item.name;
        if (!r.detail.empty()) s << ": " << r.detail;
        s << '\n';
      }
    }
    out = s.str();
    return all;
  });
}

int cmd_faces(const RunConfig& cfg) {
  auto items = collect(cfg.inputs);
  return for_each_item(items, cfg, [&](const Item& item, std::string& out) {
    LinkDiagram d = load(item, cfg);
    FaceSet f = colored_faces(d);
    out = cfg.json_out ? face_table_json(d, f) + "\n" : prefix(item, items.size()) + face_table_text(d, f);
    return true;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning-tree (totally twisted) Khovanov homology of link diagrams"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* homology = app.add_subcommand("homology", "Poincare polynomial of the spanning-tree homology");
  auto* compare = app.add_subcommand("compare", "spanning-tree vs reduced characteristic-2 Khovanov homology");
  auto* invariants = app.add_subcommand("invariants", "determinant, signature, tree polynomial, Euler check");
  auto* verify = app.add_subcommand("verify", "structural property checks");
  auto* faces = app.add_subcommand("faces", "faces, colors and formal-area variables");
  for (auto* sub : {homology, compare, invariants, verify, faces}) {
    sub->add_option("inputs", cfg.inputs, "PD files, directories of .pd files, or - for stdin")->required();
    sub->add_flag("--exact", cfg.exact, "ranks over the function field, symbolic where needed");
    sub->add_flag("--evaluated", cfg.evaluated, "ranks at random points only");
    sub->add_option("--field-bits", cfg.field_bits, "k for GF(2^k) evaluation")->check(CLI::Range(8, 31));
    sub->add_option("--trials", cfg.trials, "evaluation points; ranks are maximised")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for evaluation points");
    sub->add_option("--mark", cfg.mark, "marked edge label, overriding the file")->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json_out, "one JSON object per line");
    sub->add_flag("--timing", cfg.timing, "report mode and wall time");
    sub->add_option("--exact-threshold", cfg.exact_threshold, "largest diagram tried exactly in auto mode");
    sub->add_option("--cube-threshold", cfg.cube_threshold, "largest diagram for the Khovanov cube");
    sub->add_option("--jobs", cfg.jobs, "diagrams processed in parallel")->check(CLI::PositiveNumber);
  }

  int strands = 0;
  std::string word;
  std::vector<int> torus;
  std::string name;
  auto* braid = app.add_subcommand("braid", "PD code of a braid closure");
  braid->add_option("--strands", strands, "number of strands");
  braid->add_option("word", word, "generators, e.g. 1,-2,1");
  braid->add_option("--torus", torus, "p q: (s1 ... s_{p-1})^q")->expected(2);
  braid->add_option("--name", name, "prefix the line with `name: `");

  CLI11_PARSE(app, argc, argv);

  try {
    if (braid->parsed()) {
      std::vector<int> w;
      if (!torus.empty()) {
        strands = torus[0];
        w = torus_braid(torus[0], torus[1]);
      } else {
        w = parse_braid(word);
      }
      if (strands < 2) throw Error(ErrorKind::MalformedToken, "need --strands >= 2 or --torus");
      std::cout << (name.empty() ? "" : name + ": ") << render_pd(LinkDiagram::from_tuples(braid_closure(strands, w)))
                << '\n';
      return 0;
    }
    if (cfg.exact && cfg.evaluated) throw std::runtime_error("--exact and --evaluated are exclusive");
    int failures = 0;
    if (homology->parsed()) failures = cmd_homology(cfg);
    if (compare->parsed()) failures = cmd_compare(cfg);
    if (invariants->parsed()) failures = cmd_invariants(cfg);
    if (verify->parsed()) failures = cmd_verify(cfg);
    if (faces->parsed()) failures = cmd_faces(cfg);
    return failures == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
