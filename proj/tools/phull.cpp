// phull: command-line front end for the planar H-polyhedron hull.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "phull/phull.hpp"

namespace {

using namespace phull;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kUnsat = 3 };

struct unsat_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

HPoly load_normalized(const std::string& path) {
  const HPoly raw = read_hpoly_file(path);
  if (!is_satisfiable(raw)) throw unsat_error(path + ": unsatisfiable system");
  return raw.empty() ? raw : normalize(raw);
}

// First inequality of `outer` violated somewhere in `inner`, if any.
std::optional<Ineq> escaping(const HPoly& inner, const HPoly& outer) {
  for (const Ineq& e : outer) {
    const oracle::LpResult r = oracle::lp_max(inner, e.a(), e.b());
    if (r.unbounded() || (r.finite() && r.value > e.c())) return e;
  }
  return std::nullopt;
}

int report_mismatch(const HPoly& result, const HPoly& expected) {
  if (std::optional<Ineq> w = escaping(result, expected)) {
    std::cerr << "mismatch: result leaves the reference hull across " << *w << "\n";
  } else if (std::optional<Ineq> w = escaping(expected, result)) {
    std::cerr << "mismatch: reference hull leaves the result across " << *w << "\n";
  } else {
    return kOk;
  }
  return kMismatch;
}

int cmd_hull(const std::string& a_path, const std::string& b_path, const std::string& out_path, bool no_normalize,
             bool verify, const std::string& svg_path) {
  HPoly e1, e2;
  if (no_normalize) {
    e1 = read_hpoly_file(a_path);
    e2 = read_hpoly_file(b_path);
    for (const HPoly* e : {&e1, &e2}) {
      if (!e->empty() && !is_normalized(canonical_poly(*e))) {
        throw contract_error("--no-normalize given but an input is not normalized");
      }
    }
    e1 = canonical_poly(e1);
    e2 = canonical_poly(e2);
  } else {
    e1 = load_normalized(a_path);
    e2 = load_normalized(b_path);
  }
  const HPoly result = hull(e1, e2, {.assume_sorted = true});
  write_output(out_path, emit_hpoly(result));
  if (!svg_path.empty()) write_text_file(svg_path, render_svg(e1, e2, result, hull_box_size(e1, e2)));
  if (verify) return report_mismatch(result, oracle::hull_naive(e1, e2));
  return kOk;
}

int cmd_extreme(const std::string& path) {
  const HPoly e = load_normalized(path);
  if (e.empty()) throw contract_error("extreme: the universe has no decomposition");
  const VRep v = extreme(e, true);
  for (const Point& p : v.points) std::cout << "P " << to_string(p.x) << ' ' << to_string(p.y) << '\n';
  for (const Dir& r : v.rays) std::cout << "R " << to_string(r.dx()) << ' ' << to_string(r.dy()) << '\n';
  return kOk;
}

int cmd_normalize(const std::string& path, const std::string& out_path) {
  write_output(out_path, emit_hpoly(load_normalized(path)));
  return kOk;
}

int cmd_verify(const std::string& a_path, const std::string& b_path, const std::string& result_path) {
  const HPoly e1 = load_normalized(a_path), e2 = load_normalized(b_path);
  const HPoly result = read_hpoly_file(result_path);
  const int code = report_mismatch(result, oracle::hull_naive(e1, e2));
  if (code == kOk) std::cout << "ok\n";
  return code;
}

int cmd_gen(std::uint64_t seed, std::size_t n, long bound, const std::string& shape_name, const std::string& out_path) {
  const std::optional<oracle::Shape> shape = oracle::parse_shape(shape_name);
  if (!shape) throw CLI::ValidationError("--shape", "unknown shape '" + shape_name + "'");
  write_output(out_path, emit_hpoly(oracle::gen_instance(seed, n, bound, *shape)));
  return kOk;
}

int cmd_bench(const std::vector<std::size_t>& sizes, int reps, bool presorted) {
  std::vector<HPoly> as, bs;
  for (const std::size_t n : sizes) {
    as.push_back(oracle::gen_convex_polygon(n));
    bs.push_back(oracle::gen_convex_polygon(n, Point(7, 3)));
  }
  // Warm-up, then repetitions round-robin over the sizes.
  for (std::size_t i = 0; i < sizes.size(); ++i) hull(as[i], bs[i], {.assume_sorted = presorted});
  std::vector<std::vector<double>> times(sizes.size());
  std::vector<OpCounters> counters(sizes.size());
  for (int r = 0; r < reps; ++r) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      const HPoly h = hull(as[i], bs[i], {.assume_sorted = presorted}, &counters[i]);
      const auto t1 = std::chrono::steady_clock::now();
      if (h.empty()) return kMismatch;
      times[i].push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
  }
  std::printf("%8s %14s %8s %8s\n", "n", "median_ms", "ratio", "sorts");
  double prev = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::sort(times[i].begin(), times[i].end());
    const double median = times[i][times[i].size() / 2];
    if (prev > 0) {
      std::printf("%8zu %14.3f %8.3f %8zu\n", as[i].size(), median, median / prev, counters[i].extreme_sorts);
    } else {
      std::printf("%8zu %14.3f %8s %8zu\n", as[i].size(), median, "-", counters[i].extreme_sorts);
    }
    prev = median;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact convex hull of planar H-polyhedra"};
  app.require_subcommand(1);

  std::string a, b, r, out, svg, shape = "random";
  bool no_normalize = false, verify = false, presorted = false;
  std::uint64_t seed = 0;
  std::size_t n = 6;
  long bound = 16;
  int reps = 5;
  std::vector<std::size_t> sizes{4096, 8192, 16384, 32768};

  CLI::App* hull_cmd = app.add_subcommand("hull", "hull of two systems");
  hull_cmd->add_option("A", a)->required();
  hull_cmd->add_option("B", b)->required();
  hull_cmd->add_option("-o", out, "output file");
  hull_cmd->add_flag("--no-normalize", no_normalize, "inputs are already normalized");
  hull_cmd->add_flag("--verify", verify, "compare against the brute-force hull");
  hull_cmd->add_option("--svg", svg, "write an SVG picture");

  CLI::App* extreme_cmd = app.add_subcommand("extreme", "points and rays of a system");
  extreme_cmd->add_option("A", a)->required();

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "drop redundant inequalities");
  normalize_cmd->add_option("A", a)->required();
  normalize_cmd->add_option("-o", out, "output file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check RESULT against the brute-force hull of A and B");
  verify_cmd->add_option("A", a)->required();
  verify_cmd->add_option("B", b)->required();
  verify_cmd->add_option("RESULT", r)->required();

  CLI::App* gen_cmd = app.add_subcommand("gen", "random normalized instance");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--n", n);
  gen_cmd->add_option("--coeff-bound", bound)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--shape", shape);
  gen_cmd->add_option("-o", out, "output file");

  CLI::App* bench_cmd = app.add_subcommand("bench", "time hull on convex polygons");
  bench_cmd->add_option("--sizes", sizes)->delimiter(',');
  bench_cmd->add_option("--reps", reps)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--presorted", presorted, "skip the sort in the decomposition");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*hull_cmd) return cmd_hull(a, b, out, no_normalize, verify, svg);
    if (*extreme_cmd) return cmd_extreme(a);
    if (*normalize_cmd) return cmd_normalize(a, out);
    if (*verify_cmd) return cmd_verify(a, b, r);
    if (*gen_cmd) return cmd_gen(seed, n, bound, shape, out);
    if (*bench_cmd) return cmd_bench(sizes, reps, presorted);
  } catch (const unsat_error& e) {
    std::cerr << e.what() << "\n";
    return kUnsat;
  } catch (const parse_error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
