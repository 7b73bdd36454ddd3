#include "weylcurv/tensor_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "weylcurv/models.hpp"

namespace weylcurv {

using nlohmann::json;

json rational_json(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", to_double(r));
  return json{{"rational", to_string(r)}, {"float", json::parse(buf)}};
}

namespace {

Rational rational_from_json_value(const json& v) {
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) {
    // route through the text representation so decimals convert exactly
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return rational_from_string(os.str());
  }
  throw std::invalid_argument("component value must be a string or number");
}

}  // namespace

json tensor_to_json(const CurvatureTensor& r) {
  json components = json::array();
  r.form().for_each_nonzero([&](Mask i, Mask j, const Rational& c) {
    if (subset_rank(i) > subset_rank(j)) return;  // slot symmetry: emit i <= j once
    const auto a = MultiIndex{i}.indices();
    const auto b = MultiIndex{j}.indices();
    components.push_back(json{{"i", a[0]},
                              {"j", a[1]},
                              {"k", b[0]},
                              {"l", b[1]},
                              {"value", to_string(c)}});
  });
  return json{{"n", r.dim()}, {"components", components}};
}

CurvatureTensor tensor_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("components")) {
    throw std::invalid_argument("tensor file needs fields 'n' and 'components'");
  }
  const int n = j.at("n").get<int>();
  DoubleForm form(n, 2, 2);
  for (const json& comp : j.at("components")) {
    const int a = comp.at("i").get<int>();
    const int b = comp.at("j").get<int>();
    const int c = comp.at("k").get<int>();
    const int d = comp.at("l").get<int>();
    if (!(a < b && c < d)) {
      throw std::invalid_argument("component indices must satisfy i<j and k<l");
    }
    const int first[] = {a, b}, second[] = {c, d};
    const MultiIndex I = MultiIndex::from_indices(first, n);
    const MultiIndex J = MultiIndex::from_indices(second, n);
    const Rational v = rational_from_json_value(comp.at("value"));
    form.set_coeff(I, J, v);
    form.set_coeff(J, I, v);  // complete slot symmetry
  }
  return CurvatureTensor(std::move(form));  // validates Bianchi exactly
}

CurvatureTensor load_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file: " + path);
  json j;
  in >> j;
  return tensor_from_json(j);
}

void save_tensor_file(const CurvatureTensor& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write tensor file: " + path);
  out << tensor_to_json(r).dump(2) << '\n';
}

json invariant_report_json(const InvariantReport& rep) {
  json h2q_list = json::array();
  for (const auto& [q, value] : rep.h2q) {
    h2q_list.push_back(json{{"q", q}, {"value", rational_json(value)}});
  }
  return json{
      {"n", rep.n},
      {"h2q", h2q_list},
      {"norms",
       {{"riemann_sq", rational_json(rep.norm_r_sq)},
        {"ricci_sq", rational_json(rep.norm_ricci_sq)},
        {"scal", rational_json(rep.scal)},
        {"scal_sq", rational_json(rep.scal_sq)},
        {"omega0_sq", rational_json(rep.norm_omega0_sq)},
        {"omega1_sq", rational_json(rep.norm_omega1_sq)},
        {"omega2_sq", rational_json(rep.norm_omega2_sq)}}},
      {"decomposition", {{"omega0", rational_json(rep.omega0)}}},
      {"h4",
       {{"direct", rational_json(rep.h4_direct)},
        {"decomposed", rational_json(rep.h4_decomposed)},
        {"contraction", rational_json(rep.h4_contraction)},
        {"agree", rep.h4_agree}}},
      {"einstein",
       {{"is_einstein", rep.is_einstein},
        {"deviation_sq", rational_json(rep.einstein_deviation_sq)}}},
  };
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const std::string& item : split(s, ',')) out.push_back(rational_from_string(item));
  return out;
}

}  // namespace

CurvatureTensor tensor_from_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts.front();
  const auto expect = [&](std::size_t n_args) {
    if (parts.size() != n_args + 1) {
      throw std::invalid_argument("generator spec '" + kind + "' expects " +
                                  std::to_string(n_args) + " argument(s): " + spec);
    }
  };
  if (kind == "sphere") {
    expect(2);
    return models::constant_curvature(std::stoi(parts[1]), rational_from_string(parts[2]));
  }
  if (kind == "flat") {
    expect(1);
    return models::flat(std::stoi(parts[1]));
  }
  if (kind == "hypersurface") {
    expect(1);
    return models::hypersurface(parse_rational_list(parts[1]));
  }
  if (kind == "conformal") {
    expect(1);
    return models::conformally_flat(parse_rational_list(parts[1]));
  }
  if (kind == "random") {
    expect(3);
    return models::random_bianchi(std::stoi(parts[1]), std::stoull(parts[2]),
                                  std::stoi(parts[3]));
  }
  if (kind == "file") {
    expect(1);
    return load_tensor_file(parts[1]);
  }
  throw std::invalid_argument("unknown generator spec: " + spec);
}

}  // namespace weylcurv
