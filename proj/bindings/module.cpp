#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <vector>

#include "weylcurv/models.hpp"
#include "weylcurv/neck.hpp"
#include "weylcurv/pcurvature.hpp"
#include "weylcurv/tensor_io.hpp"
#include "weylcurv/verify.hpp"

namespace py = pybind11;
using namespace weylcurv;

namespace {

py::object fraction(const Rational& r) {
  static py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(to_string(r));
}

Rational rational_arg(py::handle v) {
  if (py::isinstance<py::int_>(v) || py::isinstance<py::str>(v)) {
    return rational_from_string(py::str(v).cast<std::string>());
  }
  if (py::isinstance<py::float_>(v)) {
    std::ostringstream os;
    os.precision(17);
    os << v.cast<double>();
    return rational_from_string(os.str());
  }
  // Fraction or anything with an exact str()
  return rational_from_string(py::str(v).cast<std::string>());
}

std::vector<Rational> rational_list(const py::iterable& xs) {
  std::vector<Rational> out;
  for (py::handle x : xs) out.push_back(rational_arg(x));
  return out;
}

py::dict report_dict(const InvariantReport& rep) {
  py::dict d;
  d["n"] = rep.n;
  py::list ladder;
  for (const auto& [q, v] : rep.h2q) ladder.append(py::make_tuple(q, fraction(v)));
  d["h2q"] = ladder;
  d["norm_riemann_sq"] = fraction(rep.norm_r_sq);
  d["norm_ricci_sq"] = fraction(rep.norm_ricci_sq);
  d["scal"] = fraction(rep.scal);
  d["omega0"] = fraction(rep.omega0);
  d["norm_omega0_sq"] = fraction(rep.norm_omega0_sq);
  d["norm_omega1_sq"] = fraction(rep.norm_omega1_sq);
  d["norm_omega2_sq"] = fraction(rep.norm_omega2_sq);
  d["h4_direct"] = fraction(rep.h4_direct);
  d["h4_decomposed"] = fraction(rep.h4_decomposed);
  d["h4_contraction"] = fraction(rep.h4_contraction);
  d["h4_agree"] = rep.h4_agree;
  d["is_einstein"] = rep.is_einstein;
  d["einstein_deviation_sq"] = fraction(rep.einstein_deviation_sq);
  return d;
}

py::dict plan_dict(const BendPlan& plan, bool with_states) {
  py::dict d;
  d["feasible"] = plan.feasible;
  d["failure_reason"] = plan.failure_reason;
  d["bumps"] = plan.bumps;
  d["arc_length"] = plan.arc_length;
  d["final_theta"] = plan.final_theta;
  d["min_r"] = plan.min_r;
  d["min_lower_bound"] = plan.min_lower_bound;
  d["min_cap_margin"] = plan.min_cap_margin;
  if (with_states) {
    py::list states;
    for (const NeckState& st : plan.states) {
      states.append(py::make_tuple(st.s, st.r, st.t, st.theta, st.k, st.h4_leading,
                                   st.h4_lower_bound));
    }
    d["states"] = states;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(weylcurv, m) {
  m.doc() = "double form algebra, H. Weyl curvature invariants, and the "
            "surgery-neck bending planner";

  py::class_<CurvatureTensor>(m, "CurvatureTensor")
      .def_property_readonly("n", &CurvatureTensor::dim)
      .def("__eq__",
           [](const CurvatureTensor& a, const CurvatureTensor& b) { return a == b; })
      .def("__repr__", [](const CurvatureTensor& r) {
        return "<CurvatureTensor n=" + std::to_string(r.dim()) + ">";
      });

  m.def("constant_curvature", [](int n, py::handle lam) {
    return models::constant_curvature(n, rational_arg(lam));
  });
  m.def("flat", &models::flat);
  m.def("product_tensor", &models::product_tensor);
  m.def("hypersurface", [](const py::iterable& eigs) {
    return models::hypersurface(rational_list(eigs));
  });
  m.def("conformally_flat", [](const py::iterable& eigs) {
    return models::conformally_flat(rational_list(eigs));
  });
  m.def("scale_metric", [](const CurvatureTensor& r, py::handle t) {
    return models::scale_metric(r, rational_arg(t));
  });
  m.def("random_bianchi", &models::random_bianchi, py::arg("n"), py::arg("seed"),
        py::arg("terms") = 2);
  m.def("einsteinize", &models::einsteinize);

  m.def("from_components", [](int n, const py::iterable& comps) {
    DoubleForm form(n, 2, 2);
    for (py::handle item : comps) {
      const auto tup = item.cast<py::tuple>();
      const int idx[] = {tup[0].cast<int>(), tup[1].cast<int>(), tup[2].cast<int>(),
                         tup[3].cast<int>()};
      const int first[] = {idx[0], idx[1]}, second[] = {idx[2], idx[3]};
      const MultiIndex I = MultiIndex::from_indices(first, n);
      const MultiIndex J = MultiIndex::from_indices(second, n);
      const Rational v = rational_arg(tup[4]);
      form.set_coeff(I, J, v);
      form.set_coeff(J, I, v);
    }
    return CurvatureTensor(std::move(form));
  });
  m.def("to_components", [](const CurvatureTensor& r) {
    py::list out;
    r.form().for_each_nonzero([&](Mask i, Mask j, const Rational& c) {
      if (subset_rank(i) > subset_rank(j)) return;
      const auto a = MultiIndex{i}.indices();
      const auto b = MultiIndex{j}.indices();
      out.append(py::make_tuple(a[0], a[1], b[0], b[1], fraction(c)));
    });
    return out;
  });

  m.def("scalar_curv", [](const CurvatureTensor& r) { return fraction(scalar_curv(r)); });
  m.def("h2q", [](const CurvatureTensor& r, int q) { return fraction(h2q(r, q)); });
  m.def("h4", [](const CurvatureTensor& r) { return fraction(h4_formal(r)); });
  m.def("invariant_report",
        [](const CurvatureTensor& r) { return report_dict(h4_report(r)); });
  m.def("einstein_check", [](const CurvatureTensor& r) {
    const EinsteinCheck ec = einstein_check(r);
    return py::make_tuple(ec.is_einstein, fraction(ec.deviation_sq));
  });

  m.def("sectional", [](const CurvatureTensor& r, const std::vector<double>& e,
                        const std::vector<double>& f) { return sectional(r, e, f); });
  m.def("p_curvature",
        [](const CurvatureTensor& r, const std::vector<std::vector<double>>& plane) {
          return p_curvature(r, PPlane(r.dim(), plane));
        });
  m.def(
      "verify_theorem_a",
      [](const CurvatureTensor& r, int samples, std::uint64_t seed) {
        const TheoremAReport rep = verify_theorem_a(r, samples, seed);
        py::dict d;
        d["n"] = rep.n;
        d["p"] = rep.p;
        d["samples"] = rep.samples;
        d["min_sp"] = rep.min_sp;
        d["hypothesis_sampled_positive"] = rep.hypothesis_sampled_positive;
        d["certified"] = rep.certified;
        d["h4"] = fraction(rep.h4);
        d["conclusion_ok"] = rep.conclusion_ok;
        return d;
      },
      py::arg("tensor"), py::arg("samples") = 1000, py::arg("seed") = 7);

  m.def("h4_neck_leading", [](int q, double r, double theta, double k, double base) {
    return h4_neck_leading(NeckParams{0, q, r, theta, k, base});
  });
  m.def("h4_neck_lower_bound", [](int q, double r, double theta, double k, double base) {
    return h4_neck_lower_bound(NeckParams{0, q, r, theta, k, base});
  });
  m.def(
      "plan_bending",
      [](int q, double r_start, double theta0, double h4_base, bool with_states) {
        return plan_dict(plan_bending(q, r_start, theta0, h4_base), with_states);
      },
      py::arg("q"), py::arg("r_start"), py::arg("theta0"), py::arg("h4_base") = 0.0,
      py::arg("with_states") = false);
  m.def("submersion_scaling_check", [](const CurvatureTensor& fiber,
                                       const CurvatureTensor& base,
                                       const py::iterable& ts) {
    const auto tvals = rational_list(ts);
    py::list out;
    for (const ScalingCheck& row : submersion_scaling_check(fiber, base, tvals)) {
      py::dict d;
      d["t"] = fraction(row.t);
      d["h4_t"] = fraction(row.h4_t);
      d["fiber_term"] = fraction(row.fiber_term);
      d["cross_term"] = fraction(row.cross_term);
      d["base_term"] = fraction(row.base_term);
      d["exact_match"] = row.exact_match;
      out.append(d);
    }
    return out;
  });

  m.def(
      "run_suite",
      [](const std::string& name, int n_lo, int n_hi, std::uint64_t seed, int samples,
         int count) {
        SuiteOptions opts;
        opts.n_lo = n_lo;
        opts.n_hi = n_hi;
        opts.seed = seed;
        opts.samples = samples;
        opts.count = count;
        const SuiteResult res = run_suite(name, opts);
        py::dict d;
        d["suite"] = res.name;
        d["passed"] = res.passed;
        py::list checks;
        for (const CheckLine& c : res.checks) {
          checks.append(py::make_tuple(c.label, c.pass, c.detail));
        }
        d["checks"] = checks;
        d["notes"] = res.notes;
        return d;
      },
      py::arg("name"), py::arg("n_lo") = 4, py::arg("n_hi") = 6, py::arg("seed") = 7,
      py::arg("samples") = 2000, py::arg("count") = 0);
  m.def("suite_names", [] { return suite_names(); });
}
