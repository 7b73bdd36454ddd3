#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "weylcurv/models.hpp"
#include "weylcurv/neck.hpp"
#include "weylcurv/tensor_io.hpp"
#include "weylcurv/verify.hpp"

using nlohmann::json;
using namespace weylcurv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WEYLCURV_SEED")) {
    return std::stoull(env);
  }
  return 7;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << j.dump(2) << '\n';
  }
}

struct InvariantsArgs {
  std::vector<std::string> sphere;
  std::string hypersurface, conformal, file, spec;
  std::vector<std::string> product;
  std::vector<std::string> random;
  std::string scale;
  std::string export_path, out_path;
};

CurvatureTensor build_tensor(const InvariantsArgs& a) {
  std::optional<CurvatureTensor> r;
  const auto assign = [&](CurvatureTensor t) {
    if (r) throw std::invalid_argument("choose exactly one tensor source");
    r.emplace(std::move(t));
  };
  if (!a.sphere.empty()) {
    assign(tensor_from_spec("sphere:" + a.sphere.at(0) + ":" + a.sphere.at(1)));
  }
  if (!a.hypersurface.empty()) assign(tensor_from_spec("hypersurface:" + a.hypersurface));
  if (!a.conformal.empty()) assign(tensor_from_spec("conformal:" + a.conformal));
  if (!a.random.empty()) {
    assign(tensor_from_spec("random:" + a.random.at(0) + ":" + a.random.at(1) + ":" +
                            a.random.at(2)));
  }
  if (!a.file.empty()) assign(load_tensor_file(a.file));
  if (!a.spec.empty()) assign(tensor_from_spec(a.spec));
  if (a.product.size() == 2) {
    assign(models::product_tensor(tensor_from_spec(a.product.at(0)),
                                  tensor_from_spec(a.product.at(1))));
  }
  if (!r) throw std::invalid_argument("no tensor source given (see --help)");
  if (!a.scale.empty()) r = models::scale_metric(*r, rational_from_string(a.scale));
  return *std::move(r);
}

int run_invariants(const InvariantsArgs& a) {
  const CurvatureTensor r = build_tensor(a);
  if (!a.export_path.empty()) save_tensor_file(r, a.export_path);
  emit(invariant_report_json(h4_report(r)), a.out_path);
  return kExitOk;
}

json suite_json(const SuiteResult& res) {
  json checks = json::array();
  for (const CheckLine& c : res.checks) {
    checks.push_back(json{{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return json{{"suite", res.name},
              {"passed", res.passed},
              {"checks", checks},
              {"notes", res.notes}};
}

void print_suite(const SuiteResult& res) {
  for (const CheckLine& c : res.checks) {
    std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.label;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << '\n';
  }
  for (const std::string& note : res.notes) std::cout << "  note: " << note << '\n';
  std::cout << (res.passed ? "PASS " : "FAIL ") << res.name << '\n';
}

int run_verify(const std::string& suite, const SuiteOptions& opts, bool as_json) {
  std::vector<std::string> to_run;
  if (suite == "all") {
    to_run = suite_names();
  } else {
    to_run.push_back(suite);
  }
  bool all_pass = true;
  json results = json::array();
  for (const std::string& name : to_run) {
    const SuiteResult res = run_suite(name, opts);
    all_pass &= res.passed;
    if (as_json) {
      results.push_back(suite_json(res));
    } else {
      print_suite(res);
    }
  }
  if (as_json) std::cout << results.dump(2) << '\n';
  return all_pass ? kExitOk : kExitVerifyFailure;
}

struct NeckArgs {
  int q = 5;
  double r = 1.0;
  double theta0 = 0.3;
  double h4_base = 0.0;
  double k_cap_frac = 0.9;
  std::string csv_path = "neck_plan.csv";
  bool sweep = false;
  int sweep_points = 7;
};

json plan_summary(const BendPlan& plan, int q, double r, double theta0) {
  return json{{"q", q},
              {"r_start", r},
              {"theta0", theta0},
              {"feasible", plan.feasible},
              {"failure_reason", plan.failure_reason},
              {"bumps", plan.bumps},
              {"arc_length", plan.arc_length},
              {"final_theta", plan.final_theta},
              {"min_r", plan.min_r},
              {"min_lower_bound", plan.min_lower_bound},
              {"min_cap_margin", plan.min_cap_margin},
              {"steps", plan.states.size()}};
}

int run_neck(const NeckArgs& a) {
  BendPolicy policy;
  policy.plateau_fraction = a.k_cap_frac;
  if (a.sweep) {
    // planner summaries over a geometric grid of starting radii
    std::ofstream csv(a.csv_path);
    if (!csv) throw std::runtime_error("cannot write " + a.csv_path);
    csv << "eps,feasible,bumps,arc_length,min_lower_bound,min_cap_margin\n";
    csv.precision(17);
    json rows = json::array();
    bool all_ok = true;
    double eps = a.r;
    for (int i = 0; i < a.sweep_points; ++i, eps /= 2) {
      const BendPlan plan = plan_bending(a.q, eps, a.theta0, a.h4_base, policy);
      csv << eps << ',' << plan.feasible << ',' << plan.bumps << ','
          << plan.arc_length << ',' << plan.min_lower_bound << ','
          << plan.min_cap_margin << '\n';
      rows.push_back(plan_summary(plan, a.q, eps, a.theta0));
      all_ok &= plan.feasible;
    }
    emit(json{{"csv", a.csv_path}, {"runs", rows}}, "");
    return all_ok ? kExitOk : kExitVerifyFailure;
  }
  const BendPlan plan = plan_bending(a.q, a.r, a.theta0, a.h4_base, policy);
  {
    std::ofstream csv(a.csv_path);
    if (!csv) throw std::runtime_error("cannot write " + a.csv_path);
    write_plan_csv(plan, csv);
  }
  emit(json{{"csv", a.csv_path},
            {"summary", plan_summary(plan, a.q, a.r, a.theta0)}},
       "");
  return plan.feasible ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double form algebra, H. Weyl curvature invariants, and the "
               "surgery-neck bending planner"};
  app.require_subcommand(1);

  InvariantsArgs inv;
  CLI::App* inv_cmd = app.add_subcommand(
      "invariants", "invariant report (JSON) for a generated or ingested tensor");
  inv_cmd->add_option("--sphere", inv.sphere, "constant curvature: N LAMBDA")
      ->expected(2);
  inv_cmd->add_option("--hypersurface", inv.hypersurface,
                      "second fundamental form eigenvalues, comma separated");
  inv_cmd->add_option("--conformally-flat", inv.conformal,
                      "eigenvalues of h for R = g.h, comma separated");
  inv_cmd->add_option("--product", inv.product,
                      "two generator specs, e.g. sphere:4:1 sphere:4:1")
      ->expected(2);
  inv_cmd->add_option("--random", inv.random, "random Bianchi tensor: N SEED TERMS")
      ->expected(3);
  inv_cmd->add_option("--file", inv.file, "tensor component file (JSON)");
  inv_cmd->add_option("--spec", inv.spec, "generator spec string");
  inv_cmd->add_option("--scale", inv.scale, "rescale the metric by t > 0");
  inv_cmd->add_option("--export", inv.export_path, "write the tensor components here");
  inv_cmd->add_option("--out", inv.out_path, "write the report here instead of stdout");

  std::string suite;
  std::string n_range = "4..6";
  SuiteOptions opts;
  opts.seed = default_seed();
  bool verify_json = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a named identity/property suite");
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--n", n_range, "dimension range, e.g. 4..6");
  verify_cmd->add_option("--seed", opts.seed, "random seed");
  CLI::Option* samples_opt = verify_cmd->add_option(
      "--samples", opts.samples, "sampled planes (theorem-a) or cases (theorem31)");
  verify_cmd->add_option("--count", opts.count, "random case count (0 = default)");
  verify_cmd->add_flag("--json", verify_json, "machine readable output");

  NeckArgs neck;
  CLI::App* neck_cmd =
      app.add_subcommand("neck", "bending schedule planner (per-step CSV + summary)");
  neck_cmd->add_option("--q", neck.q, "codimension (q >= 5)")->required();
  neck_cmd->add_option("--r", neck.r, "starting tube radius")->required();
  neck_cmd->add_option("--theta0", neck.theta0, "starting angle in (0, pi/2)")
      ->required();
  neck_cmd->add_option("--h4-base", neck.h4_base, "invariant of the theta=0 model");
  neck_cmd->add_option("--k-cap-frac", neck.k_cap_frac,
                       "plateau height as a fraction of sin(theta)/(2r)");
  neck_cmd->add_option("--csv", neck.csv_path, "per-step CSV path");
  neck_cmd->add_flag("--sweep", neck.sweep, "summaries over a radius grid");
  neck_cmd->add_option("--sweep-points", neck.sweep_points, "grid size for --sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (inv_cmd->parsed()) return run_invariants(inv);
    if (verify_cmd->parsed()) {
      if (const auto dots = n_range.find(".."); dots != std::string::npos) {
        opts.n_lo = std::stoi(n_range.substr(0, dots));
        opts.n_hi = std::stoi(n_range.substr(dots + 2));
      } else {
        opts.n_lo = opts.n_hi = std::stoi(n_range);
      }
      if (suite == "theorem31" && opts.count == 0 && samples_opt->count() > 0) {
        opts.count = opts.samples;
      }
      return run_verify(suite, opts, verify_json);
    }
    if (neck_cmd->parsed()) return run_neck(neck);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
