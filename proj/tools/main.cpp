// Command-line front end: compute single operations, run property suites,
// and generate seeded instances. Reports are JSON (canonical field order);
// CSV is a lossy convenience export. Exit code 0 iff all checks pass.

#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "metra/ball.hpp"
#include "metra/chebyshev.hpp"
#include "metra/hausdorff.hpp"
#include "metra/hilbert.hpp"
#include "metra/io.hpp"
#include "metra/maps.hpp"
#include "metra/nnet.hpp"
#include "metra/fixtures.hpp"
#include "metra/projection.hpp"
#include "metra/report.hpp"
#include "metra/rng.hpp"
#include "metra/suites.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double parse_p(const std::string& p) {
  if (p == "inf" || p == "infinity") return std::numeric_limits<double>::infinity();
  return std::stod(p);
}

struct ComputeArgs {
  std::string op;
  std::string space_spec = "euclidean:2";
  std::string input_path;
  std::string out_path;
  std::string format = "json";
  std::string p = "2";
  double tol = 1e-9;
  double eps = 0.0;
  double lambda = 0.5;
  double radius = 0.0;
  int n = 1;
  int max_chain = 8;
  std::string mode = "exact";
};

void emit(const metra::Report& rep, const std::string& out_path,
          const std::string& format) {
  if (format == "csv") {
    const std::string csv = rep.to_csv();
    if (out_path.empty())
      std::cout << csv;
    else
      metra::write_file(out_path, csv);
    return;
  }
  const std::string text = rep.to_json().dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    metra::write_file(out_path, text);
}

int run_compute(const ComputeArgs& a) {
  using namespace metra;
  const auto t0 = std::chrono::steady_clock::now();
  const Space sp = space_from_spec(a.space_spec);
  const std::string raw = a.input_path.empty() ? "{}" : read_file(a.input_path);
  const json in = json::parse(raw);
  Report rep;
  rep.command = "compute " + a.op;
  rep.inputs_digest = digest_bytes(raw);
  const double p = parse_p(a.p);

  auto pts = [&](const char* key) { return points_from_json(in.at(key)); };
  auto pt = [&](const char* key) { return point_from_json(in.at(key)); };

  if (a.op == "dist") {
    rep.add_flag("dist", true, sp.dist(pt("x"), pt("y")));
  } else if (a.op == "omega") {
    const Point z = sp.omega(pt("x"), pt("y"), a.lambda);
    rep.add("omega_metric_fraction",
            std::abs(sp.dist(pt("x"), z) - std::abs(a.lambda) * sp.dist(pt("x"), pt("y"))),
            0.0, a.tol);
  } else if (a.op == "deviation") {
    rep.add_flag("deviation", true, deviation(sp, pts("M"), pts("W")));
  } else if (a.op == "hausdorff") {
    rep.add_flag("hausdorff", true, hausdorff(sp, pts("M"), pts("W")));
  } else if (a.op == "diameter") {
    rep.add_flag("diameter", true, diameter(sp, pts("M")));
  } else if (a.op == "midpoint_set") {
    const PointList omega = midpoint_set(sp, pts("M"), pts("W"));
    const double alpha = hausdorff(sp, pts("M"), pts("W"));
    rep.add("midpoint_set_left_half",
            std::abs(hausdorff(sp, pts("M"), omega) - alpha / 2.0), 0.0, a.tol);
    rep.add("midpoint_set_right_half",
            std::abs(hausdorff(sp, omega, pts("W")) - alpha / 2.0), 0.0, a.tol);
    rep.add_flag("midpoint_set_size", true, static_cast<double>(omega.size()));
  } else if (a.op == "eps_projection") {
    rep.add_flag("eps_projection_size", true,
                 static_cast<double>(eps_projection(sp, pt("x"), pts("M"), a.eps).size()));
  } else if (a.op == "alpha_p") {
    rep.add_flag("alpha_p", true, alpha_p(sp, pts("S"), pts("T"), p).cost);
  } else if (a.op == "alpha_star") {
    rep.add_flag("alpha_star", true, alpha_star(sp, pts("S"), pts("T")));
  } else if (a.op == "alpha_pR") {
    const auto b = alpha_pR(sp, pts("S"), pts("T"), p, a.max_chain);
    rep.add_flag("alpha_pR_lower", true, b.lower);
    rep.add_flag("alpha_pR_upper", true, b.upper);
    rep.add_flag("alpha_pR_exact", b.exact.has_value(),
                 b.exact.value_or(std::nan("")));
  } else if (a.op == "nnet_interpolate") {
    const PointList mid = nnet_interpolate(sp, pts("S"), pts("T"), p, a.lambda);
    const double total = alpha_p(sp, pts("S"), pts("T"), p).cost;
    rep.add("interpolation_additivity",
            std::abs(alpha_p(sp, pts("S"), mid, p).cost +
                     alpha_p(sp, mid, pts("T"), p).cost - total),
            0.0, a.tol);
  } else if (a.op == "chebyshev_center") {
    const CenterResult c = chebyshev_center(sp, pts("M"), {a.tol, 1'000'000});
    rep.add_flag("radius", true, c.radius);
    rep.add_flag("iterations", true, static_cast<double>(c.iterations));
  } else if (a.op == "relative_centers") {
    const CenterResult c = relative_radius_centers(sp, pts("M"), pts("W"));
    rep.add_flag("relative_radius", true, c.radius);
    rep.add_flag("center_count", true, static_cast<double>(c.centers.size()));
  } else if (a.op == "self_sets") {
    const NetClassification c = self_sets(sp, pts("S"));
    rep.add_flag("m", true, c.m);
    rep.add_flag("m1", true, c.m1);
    rep.add_flag("R0", true, c.R0);
    rep.add_flag("D", true, c.D);
    rep.add_flag("Z0_cardinality", true, static_cast<double>(c.Z0_cardinality));
    rep.add_flag("in_d0", c.in_d0, c.in_d0 ? 1.0 : 0.0);
  } else if (a.op == "closure_z1") {
    const bool member = closure_Z1_membership(sp, pts("S"));
    rep.add_flag("closure_z1_member", true, member ? 1.0 : 0.0);
  } else if (a.op == "best_nnet") {
    const auto r = best_nnet(sp, pts("M"), a.n,
                             a.mode == "local" ? BestNetMode::Local
                                               : BestNetMode::Exact);
    rep.add_flag("covering_radius", true, r.radius);
    rep.add_flag("exact", r.exact || a.mode == "local", r.exact ? 1.0 : 0.0);
  } else if (a.op == "best_ball") {
    const ConvexBody body = body_from_json(in.at("body"));
    const BallFit fit = best_ball(sp, body, a.tol > 0 ? a.tol : 1e-7);
    rep.add_flag("radius", true, fit.radius);
    rep.add_flag("hausdorff_value", true, fit.hausdorff_value);
  } else if (a.op == "psi") {
    const ConvexBody body = body_from_json(in.at("body"));
    rep.add_flag("psi", true, psi(sp, body, pt("x")));
    rep.add_flag("r", true, r_fun(sp, body, pt("x")));
  } else if (a.op == "ball_hausdorff") {
    const ConvexBody body = body_from_json(in.at("body"));
    rep.add_flag("ball_hausdorff", true,
                 ball_hausdorff(sp, body, pt("x"), a.radius));
  } else if (a.op == "project_convex") {
    const ConvexBody body = body_from_json(in.at("body"));
    const Point z = project_convex(sp, body, pt("x"));
    rep.add_flag("projection_dist", true, sp.dist(pt("x"), z));
  } else if (a.op == "lambda_disconnect") {
    rep.add_flag("lambda_disconnect", true, lambda_disconnect(sp, pts("M")));
  } else if (a.op == "hilbert_dist") {
    const HilbertBall H{in.value("r", 1.0), in.value("k", 1.0),
                        in.value("norm_p", 2.0)};
    rep.add_flag("hilbert_dist", true, hilbert_dist(H, pt("x"), pt("y")));
  } else if (a.op == "median_length") {
    const MedianCheck mc = median_length(sp, pt("z"), pt("u"), pt("v"));
    rep.add("median_identity", std::abs(mc.direct - mc.formula), 0.0, a.tol);
  } else if (a.op == "tangent_norm") {
    const TangentValue tv = tangent_norm(sp, pt("p"), pt("x"), pt("y"),
                                         a.mode == "closed_form"
                                             ? TangentMode::ClosedForm
                                             : TangentMode::Limit);
    rep.add_flag("tangent_norm", tv.converged, tv.value);
  } else if (a.op == "upper_angle") {
    rep.add_flag("upper_angle", true, upper_angle(sp, pt("p"), pt("x"), pt("y")));
  } else if (a.op == "delta_p") {
    const MapTable f = map_table_from_json(in.at("f"));
    const MapTable g = map_table_from_json(in.at("g"));
    rep.add_flag("delta_p", true, busemann_delta_p(sp, sp, f, g, pt("p")));
  } else if (a.op == "kuratowski_delta") {
    const MapTable f = map_table_from_json(in.at("f"));
    const MapTable g = map_table_from_json(in.at("g"));
    const auto radii = in.at("radii").get<std::vector<double>>();
    const KuratowskiValue v = kuratowski_delta(sp, sp, f, g, pt("center"), radii);
    rep.add_flag("kuratowski_delta", true, v.value);
    rep.add_flag("tail_bound", true, v.tail_bound);
  } else if (a.op == "holder") {
    const MapTable f = map_table_from_json(in.at("f"));
    rep.add_flag("holder_member",
                 holder_membership(sp, sp, f, in.at("B").get<double>(),
                                   in.at("alpha").get<double>()),
                 0.0);
  } else if (a.op == "similarity") {
    const MapTable f = map_table_from_json(in.at("f"));
    const auto sigma = similarity_coefficient(sp, sp, f);
    rep.add_flag("similarity", sigma.has_value(), sigma.value_or(std::nan("")));
  } else if (a.op == "ratio_check") {
    // difference-quotient monotonicity on a geodesic segment fixture
    const PointList ends = points_from_json(in.at("segment"));
    const SampledConvexSet seg =
        segment_fixture(sp, ends.at(0), ends.at(1), in.value("n", 50000));
    const auto recs = ratio_monotonicity_check(
        sp, pt("x"), seg, in.at("t").get<double>(), in.at("eps").get<double>(),
        in.at("delta").get<double>(), in.at("eps2").get<double>(),
        in.at("delta2").get<double>(), in.value("slack", 1e-3));
    for (const auto& r : recs) rep.add(r.name, r.lhs, r.rhs, in.value("slack", 1e-3));
  } else if (a.op == "stability_check") {
    // projection-set stability for a pair of sampled disks
    auto disk = [&](const char* key, const Point& probe) {
      const auto& d = in.at(key);
      return disk_fixture(sp, point_from_json(d.at("center")),
                          d.at("radius").get<double>(), probe,
                          {in.at("eps").get<double>(), in.at("delta").get<double>()},
                          in.value("boundary_n", 2000), in.value("interior_n", 60));
    };
    const Point x = pt("x"), y = pt("y");
    const auto recs = delta_projection_stability(
        sp, x, y, disk("M", x), disk("W", y), in.at("eps").get<double>(),
        in.at("delta").get<double>(), in.value("slack", 1e-3));
    for (const auto& r : recs) rep.add(r.name, r.lhs, r.rhs, in.value("slack", 1e-3));
  } else if (a.op == "validate_metric") {
    const auto m = matrix_from_csv(read_file(in.at("csv").get<std::string>()));
    const auto v = validate_finite_metric(m);
    rep.add_flag("metric_valid", std::holds_alternative<Space>(v), 0.0);
  } else {
    std::cerr << "unknown op: " << a.op << "\n";
    return 2;
  }
  rep.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(rep, a.out_path, a.format);
  return rep.all_pass() ? 0 : 1;
}

int run_generate(const std::string& kind, const std::string& space_spec,
                 std::uint64_t seed, int n, int dim, const std::string& out,
                 bool as_matrix) {
  using namespace metra;
  if (n <= 0) {
    std::cerr << "n must be positive\n";
    return 2;
  }
  const Space sp = space_from_spec(space_spec);
  Rng rng(seed);
  ordered_json j;
  j["kind"] = kind;
  j["seed"] = seed;
  j["params"] = {{"n", n}, {"dim", dim}, {"space", space_spec}};
  if (kind == "uniform_points") {
    const PointList pts = rng.points_in(sp, n, dim);
    if (as_matrix) {
      std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m[i][k] = sp.dist(pts[i], pts[k]);
      std::string csv;
      for (const auto& row : m) {
        for (std::size_t c = 0; c < row.size(); ++c)
          csv += (c ? "," : "") + std::to_string(row[c]);
        csv += "\n";
      }
      write_file(out, csv);
      return 0;
    }
    j["points"] = points_to_json(pts);
  } else if (kind == "clustered") {
    PointList pts;
    const int k = std::max(2, n / 8);
    const PointList centers = rng.points_in(sp, k, dim);
    for (int i = 0; i < n; ++i) {
      const Point& c = centers[rng.uniform_index(centers.size())];
      std::vector<double> v = c.coords();
      for (double& x : v) x += 0.05 * rng.normal();
      pts.push_back(Point(std::move(v)));
    }
    j["points"] = points_to_json(pts);
  } else if (kind == "nnet_pair") {
    j["S"] = points_to_json(rng.points_in(sp, n, dim), true);
    j["T"] = points_to_json(rng.points_in(sp, n, dim), true);
  } else if (kind == "convex_hull") {
    j["body"] = body_to_json(ConvexBody::hull(rng.points_in(sp, n, dim)));
  } else if (kind == "map_table") {
    MapTable t;
    t.domain = rng.points_in(sp, n, dim);
    for (const Point& p : t.domain) {
      std::vector<double> v = p.coords();
      for (double& x : v) x = 0.5 * x + 0.1 * rng.normal();
      t.values.push_back(Point(std::move(v)));
    }
    j["f"] = map_table_to_json(t);
  } else {
    std::cerr << "unknown generate kind: " << kind << "\n";
    return 2;
  }
  const std::string text = j.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric-geometry toolkit"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "compute one operation");
  compute->add_option("op", ca.op,
                      "operation: dist, omega, deviation, hausdorff, diameter, "
                      "midpoint_set, eps_projection, alpha_p, alpha_star, "
                      "alpha_pR, nnet_interpolate, chebyshev_center, "
                      "relative_centers, self_sets, closure_z1, best_nnet, "
                      "best_ball, psi, ball_hausdorff, project_convex, "
                      "lambda_disconnect, hilbert_dist, median_length, "
                      "tangent_norm, upper_angle, delta_p, kuratowski_delta, "
                      "holder, similarity, ratio_check, stability_check, "
                      "validate_metric")
      ->required();
  compute->add_option("--space", ca.space_spec, "space spec");
  compute->add_option("--in", ca.input_path, "input JSON file");
  compute->add_option("--out", ca.out_path, "output path (default stdout)");
  compute->add_option("--format", ca.format, "json|csv");
  compute->add_option("--p", ca.p, "p parameter (number or inf)");
  compute->add_option("--tol", ca.tol, "tolerance");
  compute->add_option("--eps", ca.eps, "eps parameter");
  compute->add_option("--lambda", ca.lambda, "lambda parameter");
  compute->add_option("--r", ca.radius, "radius parameter");
  compute->add_option("--n", ca.n, "count parameter");
  compute->add_option("--max-chain", ca.max_chain, "chain search depth");
  compute->add_option("--mode", ca.mode, "mode (op-specific)");

  std::string suite_name = "all";
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string suite_out, suite_format = "json";
  auto* suite = app.add_subcommand("suite", "run property suites");
  suite->add_option("name", suite_name, "suite name or 'all'");
  suite->add_option("--seed", seed, "RNG seed");
  suite->add_option("--tol", tol, "tolerance");
  suite->add_option("--out", suite_out, "output path");
  suite->add_option("--format", suite_format, "json|csv");

  std::string gen_kind, gen_space = "euclidean:2", gen_out;
  std::uint64_t gen_seed = 1;
  int gen_n = 8, gen_dim = 2;
  bool gen_matrix = false;
  auto* gen = app.add_subcommand("generate", "generate seeded instances");
  gen->add_option("kind", gen_kind, "instance kind")->required();
  gen->add_option("--space", gen_space, "space spec");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--n", gen_n, "number of points");
  gen->add_option("--dim", gen_dim, "coordinate dimension");
  gen->add_option("--out", gen_out, "output path");
  gen->add_flag("--as-matrix", gen_matrix, "emit the pairwise distance CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(ca);
    if (suite->parsed()) {
      metra::Report combined;
      combined.command = "suite " + suite_name;
      const auto t0 = std::chrono::steady_clock::now();
      const auto names = suite_name == "all"
                             ? metra::suite_names()
                             : std::vector<std::string>{suite_name};
      for (const auto& n : names) {
        const metra::Report r = metra::run_suite(n, seed, tol);
        for (const auto& c : r.checks) {
          metra::CheckRecord rec = c;
          rec.name = n + "." + rec.name;
          combined.checks.push_back(std::move(rec));
        }
      }
      combined.elapsed_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      emit(combined, suite_out, suite_format);
      std::cerr << (combined.all_pass() ? "all checks passed\n"
                                        : "FAILURES present\n");
      return combined.all_pass() ? 0 : 1;
    }
    if (gen->parsed())
      return run_generate(gen_kind, gen_space, gen_seed, gen_n, gen_dim, gen_out,
                          gen_matrix);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
