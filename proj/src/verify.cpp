#include "weylcurv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "weylcurv/models.hpp"
#include "weylcurv/neck.hpp"
#include "weylcurv/pcurvature.hpp"

namespace weylcurv {

namespace {

void add_check(SuiteResult& res, const std::string& label, bool pass,
               const std::string& detail = "") {
  res.checks.push_back(CheckLine{label, pass, detail});
}

void finish(SuiteResult& res) {
  res.passed = std::all_of(res.checks.begin(), res.checks.end(),
                           [](const CheckLine& c) { return c.pass; });
}

/// Elementary symmetric polynomials by the standard recurrence; the
/// independent oracle for the hypersurface and conformally flat formulas.
std::vector<Rational> elementary_symmetric(const std::vector<Rational>& xs) {
  std::vector<Rational> e(xs.size() + 1, Rational(0));
  e[0] = 1;
  for (const Rational& x : xs) {
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e;
}

CurvatureTensor random_generator_tensor(int n, Rng& rng) {
  switch (rng.uniform_int(0, 3)) {
    case 0: {
      Rational lam(rng.uniform_int(-2, 2));
      if (lam == 0) lam = 1;
      return models::constant_curvature(n, lam);
    }
    case 1: {
      std::vector<Rational> eigs(n);
      for (auto& e : eigs) e = rng.uniform_int(-3, 3);
      return models::hypersurface(eigs);
    }
    case 2: {
      std::vector<Rational> eigs(n);
      for (auto& e : eigs) e = rng.uniform_int(-3, 3);
      return models::conformally_flat(eigs);
    }
    default:
      return models::random_bianchi(n, rng.next(), 2);
  }
}

}  // namespace

SuiteResult verify_dfcore_identities(const SuiteOptions& opts) {
  SuiteResult res{"dfcore-identities"};
  const int n_lo = std::max(3, std::min(opts.n_lo, opts.n_hi));
  const int n_hi = std::max(n_lo, std::min(opts.n_hi, 6));
  const int count = opts.count > 0 ? opts.count : 200;
  Rng rng(opts.seed);

  int forms_checked = 0;
  bool metric_star = true, adjoint = true, double_star = true, star_inner = true;
  while (forms_checked < count) {
    for (int n = n_lo; n <= n_hi && forms_checked < count; ++n) {
      const int p = rng.uniform_int(0, n - 1);
      const int q = rng.uniform_int(0, n - 1);
      const DoubleForm omega = models::random_form(n, p, q, rng);

      // gω = *c*ω, exact up to the star-convention sign (-1)^{n(p+q)},
      // which is + on every symmetric bidegree
      const DoubleForm via_star = hodge_star(contract(hodge_star(omega)));
      metric_star &= metric_mult(omega) ==
                     ((n * (p + q)) % 2 == 0 ? via_star : -via_star);

      // <gω₁,ω₂> = <ω₁,cω₂> with ω₂ one degree up in each slot
      const DoubleForm omega2 = models::random_form(n, p + 1, q + 1, rng);
      adjoint &= inner_product(metric_mult(omega), omega2) ==
                 inner_product(omega, contract(omega2));

      // **ω = (−1)^{(p+q)(n−p−q)} ω
      const int expo = (p + q) * (n - p - q);
      const DoubleForm twice = hodge_star(hodge_star(omega));
      double_star &= twice == (expo % 2 == 0 ? omega : -omega);

      // <ω₁,ω₂> = *(ω₁·*ω₂); the mirrored order *(*ω₁·ω₂) carries the
      // double-star sign, trivial on the symmetric ring where it is used
      const DoubleForm other = models::random_form(n, p, q, rng);
      const Rational ip = inner_product(omega, other);
      const Rational mirrored = expo % 2 == 0 ? ip : -ip;
      star_inner &=
          hodge_star(product(omega, hodge_star(other))) == DoubleForm::scalar(n, ip) &&
          hodge_star(product(hodge_star(omega), other)) ==
              DoubleForm::scalar(n, mirrored);

      ++forms_checked;
    }
  }
  add_check(res, "g*w = *c*w on random forms", metric_star,
            std::to_string(forms_checked) + " forms");
  add_check(res, "<gw1,w2> = <w1,cw2> (contraction adjoint)", adjoint);
  add_check(res, "** = (-1)^{(p+q)(n-p-q)} Id", double_star);
  add_check(res, "<w1,w2> = *(w1.*w2) = *(*w1.w2)", star_inner);

  bool cg_law = true;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int k = 1; k <= n; ++k) {
      cg_law &= contract(DoubleForm::metric_power(n, k)) ==
                DoubleForm::metric_power(n, k - 1) * Rational(k * (n - k + 1));
    }
  }
  add_check(res, "c(g^k) = k(n-k+1) g^{k-1}, 1 <= k <= n", cg_law);

  finish(res);
  return res;
}

namespace {

DoubleForm metric_mult_times(DoubleForm f, int times) {
  for (int i = 0; i < times; ++i) f = metric_mult(f);
  return f;
}

// p! · ∏_{i=0}^{p−1} (n − 2r − i)
Rational lemma21_weight(int n, int r, int p) {
  Rational w = rational_factorial(p);
  for (int i = 0; i < p; ++i) w *= Rational(n - 2 * r - i);
  return w;
}

}  // namespace

SuiteResult verify_lemma21(const SuiteOptions& opts) {
  SuiteResult res{"lemma21"};
  const int n_lo = std::max(4, std::min(opts.n_lo, opts.n_hi));
  const int n_hi = std::max(n_lo, opts.n_hi);
  const int count = opts.count > 0 ? opts.count : 40;
  Rng rng(opts.seed);

  bool law_r1 = true, law_r2 = true, cross_orth = true;
  for (int iter = 0; iter < count; ++iter) {
    for (int n = n_lo; n <= n_hi; ++n) {
      const DoubleForm h1 = models::random_traceless_symmetric_11(n, rng);
      const DoubleForm h2 = models::random_traceless_symmetric_11(n, rng);
      const DoubleForm eff = models::random_effective_22(n, rng);

      for (int p = 1; p <= std::min(3, n - 1); ++p) {
        law_r1 &= inner_product(metric_mult_times(h1, p), metric_mult_times(h2, p)) ==
                  lemma21_weight(n, 1, p) * inner_product(h1, h2);
        law_r1 &= norm_sq(metric_mult_times(h1, p)) ==
                  lemma21_weight(n, 1, p) * norm_sq(h1);
      }
      for (int p = 1; p <= std::min(2, n - 2); ++p) {
        law_r2 &= norm_sq(metric_mult_times(eff, p)) ==
                  lemma21_weight(n, 2, p) * norm_sq(eff);
      }

      // vanishing across p or r mismatch, at bidegrees (2,2) and (3,3)
      const Rational a(rng.uniform_int(1, 5));
      cross_orth &= inner_product(metric_mult(h1), eff) == 0;
      cross_orth &= inner_product(DoubleForm::metric_power(n, 2) * a, eff) == 0;
      cross_orth &=
          inner_product(DoubleForm::metric_power(n, 2) * a, metric_mult(h1)) == 0;
      cross_orth &=
          inner_product(metric_mult_times(h1, 2), metric_mult(eff)) == 0;
    }
  }
  add_check(res, "norm law <g^p w, g^p w>, traceless symmetric (r=1)", law_r1);
  add_check(res, "norm law <g^p w, g^p w>, effective (2,2) (r=2)", law_r2);
  add_check(res, "orthogonality across p or r mismatch", cross_orth);
  finish(res);
  return res;
}

SuiteResult verify_h4_routes(const SuiteOptions& opts) {
  SuiteResult res{"h4-routes"};
  const int n_lo = std::max(4, std::min(opts.n_lo, opts.n_hi));
  const int n_hi = std::max(n_lo, opts.n_hi);
  const int count = opts.count > 0 ? opts.count : 500;
  Rng rng(opts.seed);

  int done = 0;
  bool direct_vs_dec = true, dec_vs_contr = true, formulas = true;
  while (done < count) {
    const int n = n_lo + done % (n_hi - n_lo + 1);
    const CurvatureTensor r = models::random_bianchi(n, rng.next(), 2 + done % 2);
    const InvariantReport rep = h4_report(r);
    direct_vs_dec &= rep.h4_direct == rep.h4_decomposed;
    dec_vs_contr &= rep.h4_decomposed == rep.h4_contraction;
    formulas &= [&] {
      const NormSplit split = norm_formulas(r);  // throws on mismatch
      return split.omega0_sq == rep.norm_omega0_sq &&
             split.omega1_sq == rep.norm_omega1_sq &&
             split.omega2_sq == rep.norm_omega2_sq;
    }();
    ++done;
  }
  add_check(res, "h4 from global norms == weighted part-norm combination",
            direct_vs_dec, std::to_string(done) + " random Bianchi tensors");
  add_check(res, "h4 decomposed == complete contraction", dec_vs_contr);
  add_check(res, "part norms from global norms match the decomposition", formulas);
  finish(res);
  return res;
}

SuiteResult verify_examples(const SuiteOptions& opts) {
  SuiteResult res{"examples"};
  Rng rng(opts.seed);

  {  // constant curvature: h4 by complete contraction vs closed form
    bool ok = true;
    const Rational lambdas[] = {Rational(-2), Rational(-1), Rational(1), Rational(2),
                                Rational(1, 2)};
    for (int n = 4; n <= 8; ++n) {
      for (const Rational& lam : lambdas) {
        const CurvatureTensor r = models::constant_curvature(n, lam);
        const Rational expect =
            Rational(n * (n - 1) * (n - 2) * (n - 3)) * lam * lam / 4;
        ok &= h2q(r, 2) == expect;
      }
    }
    add_check(res, "constant curvature h4 = n(n-1)(n-2)(n-3) lambda^2 / 4", ok,
              "n=4..8, five lambda values");
  }

  {  // product splitting of h4
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
      const int n1 = rng.uniform_int(2, 5);
      const int n2 = rng.uniform_int(2, std::min(5, 10 - n1));
      const CurvatureTensor a = random_generator_tensor(n1, rng);
      const CurvatureTensor b = random_generator_tensor(n2, rng);
      const CurvatureTensor prod = models::product_tensor(a, b);
      const Rational lhs = h4_formal(prod);
      ok &= lhs == h4_formal(a) + scalar_curv(a) * scalar_curv(b) / 2 + h4_formal(b);
      ok &= lhs == h2q_contraction(prod, 2);
    }
    add_check(res, "product h4 = h4_1 + scal_1 scal_2 / 2 + h4_2", ok,
              "20 random generator pairs, n1+n2 <= 10");
  }

  {  // hypersurface symmetric functions
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<Rational> eigs(n);
        for (auto& e : eigs) e = rng.uniform_int(-3, 3);
        if (rep == 0) {
          for (int i = 0; i < n; ++i) eigs[i] = i + 1;
        }
        const CurvatureTensor r = models::hypersurface(eigs);
        const auto sigma = elementary_symmetric(eigs);
        for (int q = 1; 2 * q <= n; ++q) {
          const Rational expect =
              rational_factorial(2 * q) / Rational(BigInt(1) << q) * sigma[2 * q];
          ok &= h2q(r, q) == expect;
        }
      }
    }
    add_check(res, "hypersurface h_2q = (2q)!/2^q sigma_2q(B)", ok,
              "n=2..8, q<=3, symmetric polynomial oracle");
  }

  {  // conformally flat symmetric functions and the h = g cross-check
    bool ok = true;
    for (int n = 3; n <= 8; ++n) {
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<Rational> eigs(n);
        for (auto& e : eigs) e = rng.uniform_int(-3, 3);
        const CurvatureTensor r = models::conformally_flat(eigs);
        const auto sigma = elementary_symmetric(eigs);
        for (int q = 1; 2 * q <= n; ++q) {
          const Rational expect = rational_factorial(n - q) * rational_factorial(q) /
                                  rational_factorial(n - 2 * q) * sigma[q];
          ok &= h2q(r, q) == expect;
        }
      }
      // h = g gives the lambda = 2 space form
      const CurvatureTensor r =
          models::conformally_flat(std::vector<Rational>(n, Rational(1)));
      ok &= r == models::constant_curvature(n, Rational(2));
      if (n >= 4) {
        ok &= h2q(r, 2) == Rational(n * (n - 1) * (n - 2) * (n - 3));
      }
    }
    add_check(res, "conformally flat h_2q = (n-q)!q!/(n-2q)! sigma_q(h)", ok,
              "n=3..8, q<=3, includes h = g vs lambda = 2");
  }

  {  // metric rescaling law
    bool ok = true;
    const Rational ts[] = {Rational(4), Rational(1, 4), Rational(3, 2)};
    for (int n = 4; n <= 6; ++n) {
      const CurvatureTensor r = models::random_bianchi(n, opts.seed + n, 2);
      for (const Rational& t : ts) {
        const CurvatureTensor scaled = models::scale_metric(r, t);
        for (int q = 1; 2 * q <= n && q <= 3; ++q) {
          Rational tq(1);
          for (int i = 0; i < q; ++i) tq *= t;
          ok &= h2q(scaled, q) == h2q(r, q) / tq;
        }
        ok &= models::scale_metric(scaled, Rational(1) / t) == r;
      }
    }
    add_check(res, "rescaled metric h_2q = t^{-q} h_2q, round trip exact", ok);
  }

  {  // binomial product law for all orders
    bool ok = true;
    for (int i = 0; i < 6; ++i) {
      const int n1 = rng.uniform_int(2, 4);
      const int n2 = rng.uniform_int(2, 4);
      const CurvatureTensor a = random_generator_tensor(n1, rng);
      const CurvatureTensor b = random_generator_tensor(n2, rng);
      const CurvatureTensor prod = models::product_tensor(a, b);
      for (int q = 1; 2 * q <= n1 + n2; ++q) {
        Rational expect(0);
        for (int k = 0; k <= q; ++k) {
          const Rational ha = k == 0 ? Rational(1) : h2q_contraction(a, k);
          const Rational hb = k == q ? Rational(1) : h2q_contraction(b, q - k);
          expect += rational_binomial(q, k) * ha * hb;
        }
        ok &= h2q_contraction(prod, q) == expect;
      }
    }
    add_check(res, "product h_2q binomial law for all q", ok);
  }

  finish(res);
  return res;
}

SuiteResult verify_theorem31(const SuiteOptions& opts) {
  SuiteResult res{"theorem31"};
  const int count = opts.count > 0 ? opts.count : 1000;
  Rng rng(opts.seed);

  bool einstein_nonneg = true, einstein_zero_only_flat = true;
  for (int i = 0; i < count; ++i) {
    const int n = 4 + i % 3;
    const CurvatureTensor r = models::random_bianchi(n, rng.next(), 2);
    const CurvatureTensor e = models::einsteinize(r);
    const Rational h4 = h4_formal(e);
    einstein_nonneg &= h4 >= 0;
    if (h4 == 0) einstein_zero_only_flat &= e.form().is_zero();
  }
  add_check(res, "einsteinized tensors have h4 >= 0", einstein_nonneg,
            std::to_string(count) + " random tensors, n in {4,5,6}");
  add_check(res, "h4 = 0 only for the flat tensor (Einstein case)",
            einstein_zero_only_flat);

  bool conf_nonpos = true, conf_zero_only_flat = true;
  for (int i = 0; i < count; ++i) {
    const int n = 4 + i % 3;
    const DoubleForm h = models::random_traceless_symmetric_11(n, rng);
    const CurvatureTensor r = models::conformally_flat_form(h);
    const Rational h4 = h4_formal(r);
    conf_nonpos &= h4 <= 0;
    if (h4 == 0) conf_zero_only_flat &= r.form().is_zero();
  }
  add_check(res, "scalar-flat conformally flat tensors have h4 <= 0", conf_nonpos,
            std::to_string(count) + " random trace-free forms, n in {4,5,6}");
  add_check(res, "h4 = 0 only for the flat tensor (conformally flat case)",
            conf_zero_only_flat);

  finish(res);
  return res;
}

SuiteResult verify_theorem_a_suite(const SuiteOptions& opts) {
  SuiteResult res{"theorem-a"};
  const int n_lo = std::max(4, std::min(opts.n_lo, opts.n_hi));
  const int n_hi = std::max(n_lo, opts.n_hi);
  const int samples = opts.samples > 0 ? opts.samples : 10000;

  bool closed_form_ok = true, conclusion_ok = true, positives_ok = true;
  for (int n = n_lo; n <= n_hi; ++n) {
    const int p = (n + 1) / 2;
    {  // certified constant-curvature input
      const CurvatureTensor r = models::constant_curvature(n, Rational(1));
      const TheoremAReport rep = verify_theorem_a(r, samples, opts.seed, Rational(1));
      const double closed = (n - p) * (n - p - 1);
      closed_form_ok &= rep.certified && std::abs(rep.min_sp - closed) <= 1e-9;
      conclusion_ok &= rep.conclusion_ok;
      positives_ok &= rep.hypothesis_sampled_positive && rep.h4 > 0;
    }
    {  // perturbed constant curvature, epsilon found by bisection on the sampled min
      Rational eps(1);
      TheoremAReport rep;
      for (int tries = 0; tries < 40; ++tries) {
        DoubleForm sum = models::constant_curvature(n, Rational(1)).form() +
                         models::random_bianchi(n, opts.seed + n, 2).form() * eps;
        rep = verify_theorem_a(CurvatureTensor(std::move(sum)),
                               std::max(200, samples / 10), opts.seed + tries);
        if (rep.hypothesis_sampled_positive) break;
        eps /= 2;
      }
      DoubleForm sum = models::constant_curvature(n, Rational(1)).form() +
                       models::random_bianchi(n, opts.seed + n, 2).form() * eps;
      rep = verify_theorem_a(CurvatureTensor(std::move(sum)), samples, opts.seed);
      conclusion_ok &= rep.conclusion_ok;
      positives_ok &= !rep.hypothesis_sampled_positive || rep.h4 > 0;
    }
  }
  {  // hypothesis failure: mixed-sign conformally flat input, theorem is silent
    const CurvatureTensor r = models::conformally_flat(
        {Rational(1), Rational(1), Rational(-1), Rational(-1)});
    const TheoremAReport rep = verify_theorem_a(r, samples, opts.seed);
    add_check(res, "indefinite input samples both signs (no assertion made)",
              !rep.hypothesis_sampled_positive && rep.min_sp < 0);
  }
  add_check(res, "constant curvature: sampled min matches (n-p)(n-p-1) lambda",
            closed_form_ok);
  add_check(res, "no case with sampled s_p > 0 and exact h4 <= 0", conclusion_ok);
  add_check(res, "sampled-positive corpus has exact h4 > 0", positives_ok);

  finish(res);
  return res;
}

SuiteResult verify_neck_coeffs(const SuiteOptions& opts) {
  SuiteResult res{"neck-coeffs"};
  (void)opts;

  bool sin4_ok = true, k2_ok = true, ksign_ok = true, q2_ok = true;
  for (int q = 2; q <= 12; ++q) {
    const NeckNormExpansions e = norm_expansions(q);
    const Rational quartic =
        Rational((q - 1) * (q - 2) * (q - 3) * (q - 4)) / 4;
    sin4_ok &= e.combination.sin4_r4 == quartic;
    k2_ok &= e.combination.k2_sin2_r2 == 0;
    const Rational cubic = Rational((q - 1) * (q - 2) * (q - 3)) / 2;
    ksign_ok &= e.combination.k_sin3_r3 == cubic &&
                e.conservative_k_coeff == -cubic;
    if (q == 2) {
      q2_ok &= e.riem_sq.sin4_r4 == 0 && e.ricci_sq.sin4_r4 == 0 &&
               e.scal_sq.sin4_r4 == 0 && e.ricci_sq.k_sin3_r3 == 0 &&
               e.scal_sq.k_sin3_r3 == 0;
    }
  }
  add_check(res, "recombined sin^4/r^4 coefficient = (q-1)(q-2)(q-3)(q-4)/4", sin4_ok,
            "q = 2..12, exact");
  add_check(res, "recombined k^2 sin^2/r^2 coefficient vanishes", k2_ok);
  add_check(res, "k sin^3/r^3 recombination is +(q-1)(q-2)(q-3)/2", ksign_ok);
  add_check(res, "q = 2 kills every (q-2)-factored coefficient", q2_ok);
  res.notes.push_back(norm_expansions(5).k_sign_note);

  const struct {
    int q;
    double r, theta0;
  } runs[] = {{5, 1.0, 0.3}, {6, 0.5, 0.2}};
  for (const auto& run : runs) {
    const BendPlan plan = plan_bending(run.q, run.r, run.theta0);
    bool monotone = true;
    for (std::size_t i = 1; i < plan.states.size(); ++i) {
      monotone &= plan.states[i].theta >= plan.states[i - 1].theta - 1e-15 &&
                  plan.states[i].r <= plan.states[i - 1].r + 1e-15;
    }
    std::ostringstream os;
    os << "q=" << run.q << " r=" << run.r << " theta0=" << run.theta0 << ": "
       << plan.bumps << " bumps, min bound " << plan.min_lower_bound;
    add_check(res,
              "planner reaches pi/2 with positive lower bound (q=" +
                  std::to_string(run.q) + ")",
              plan.feasible && monotone && plan.min_lower_bound > 0 &&
                  std::abs(plan.final_theta - std::numbers::pi / 2) < 1e-3 &&
                  plan.min_cap_margin > 0,
              os.str());
  }

  finish(res);
  return res;
}

SuiteResult verify_scaling(const SuiteOptions& opts) {
  SuiteResult res{"scaling"};
  const Rational ts[] = {Rational(2), Rational(10), Rational(100)};

  {  // pinned sphere product values
    const CurvatureTensor s4 = models::constant_curvature(4, Rational(1));
    const auto rows = submersion_scaling_check(s4, s4, ts);
    bool exact = true, pinned = true, limit = true;
    for (const auto& row : rows) {
      exact &= row.exact_match;
      const Rational t4 = row.t * row.t * row.t * row.t;
      limit &= t4 * (row.h4_t - row.base_term - row.cross_term) == Rational(6);
    }
    pinned &= rows[1].h4_t == Rational(33603, 5000);  // 6.7206 at t = 10
    add_check(res, "sphere x sphere splits exactly, h4(10) = 6.7206", exact && pinned);
    add_check(res, "t^4 (h4_t - h4_base - cross) = h4_fiber at every t", limit);
  }

  {  // random fiber and base pairs
    Rng rng(opts.seed);
    bool exact = true;
    for (int i = 0; i < 6; ++i) {
      const CurvatureTensor fiber = random_generator_tensor(rng.uniform_int(2, 4), rng);
      const CurvatureTensor base = random_generator_tensor(rng.uniform_int(2, 4), rng);
      for (const auto& row : submersion_scaling_check(fiber, base, ts)) {
        exact &= row.exact_match;
      }
    }
    add_check(res, "random products: remainder is exactly t^{-2} cross + h4_base",
              exact, "6 random fiber/base pairs, t in {2,10,100}");
  }

  finish(res);
  return res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "dfcore-identities", "lemma21", "h4-routes", "examples",
      "theorem31",         "theorem-a", "neck-coeffs", "scaling"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "dfcore-identities") return verify_dfcore_identities(opts);
  if (name == "lemma21") return verify_lemma21(opts);
  if (name == "h4-routes") return verify_h4_routes(opts);
  if (name == "examples") return verify_examples(opts);
  if (name == "theorem31") return verify_theorem31(opts);
  if (name == "theorem-a") return verify_theorem_a_suite(opts);
  if (name == "neck-coeffs") return verify_neck_coeffs(opts);
  if (name == "scaling") return verify_scaling(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace weylcurv
