#include "qeur/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qeur/error.hpp"

namespace qeur::sweep {

namespace {

bool is_one_parameter_family(const std::string& family) {
  return family == "werner" || family == "bell_diagonal_special" || family == "xstate";
}

}  // namespace

void check(const SweepSpec& spec) {
  if (!is_one_parameter_family(spec.family)) {
    throw io::InputError("sweep: family must be werner, bell_diagonal_special or xstate, got \"" +
                         spec.family + "\"");
  }
  if (!(0.0 <= spec.p_start && spec.p_start <= spec.p_end && spec.p_end <= 1.0)) {
    throw io::InputError("sweep: range invariant violated, need 0 <= p_start <= p_end <= 1");
  }
  if (!(spec.p_step > 0.0)) throw io::InputError("sweep: range invariant violated, need p_step > 0");
  if (spec.pairs.empty()) throw io::InputError("sweep: at least one observable pair is required");
}

SweepSpec preset(std::string_view name) {
  SweepSpec spec;
  if (name == "fig1a") {
    spec.family = "bell_diagonal_special";
    spec.pairs.push_back({io::Json{{"ranked", 1}}, io::Json{{"ranked", 2}}});
  } else if (name == "fig1b") {
    spec.family = "bell_diagonal_special";
    spec.pairs.push_back({io::Json{{"ranked", 1}}, io::Json{{"ranked", 3}}});
  } else if (name == "fig2") {
    spec.family = "xstate";
    spec.pairs.push_back({io::Json{{"named", "sigma_x"}}, io::Json{{"named", "sigma_z"}}});
  } else {
    throw io::InputError("unknown preset \"" + std::string(name) + "\" (fig1a, fig1b, fig2)");
  }
  return spec;
}

SweepSpec parse_spec(const io::Json& doc) {
  if (!doc.is_object()) throw io::InputError("sweep spec: expected a JSON object");
  SweepSpec spec;
  auto number = [&](const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc.at(key).is_number()) {
      throw io::InputError(std::string("sweep spec: \"") + key + "\" must be a number");
    }
    return doc.at(key).get<double>();
  };
  if (!doc.contains("family") || !doc.at("family").is_string()) {
    throw io::InputError("sweep spec: missing string field \"family\"");
  }
  spec.family = doc.at("family").get<std::string>();
  spec.p_start = number("p_start", spec.p_start);
  spec.p_end = number("p_end", spec.p_end);
  spec.p_step = number("p_step", spec.p_step);
  spec.optimizer.grid_theta = static_cast<int>(number("grid_theta", spec.optimizer.grid_theta));
  spec.optimizer.grid_phi = static_cast<int>(number("grid_phi", spec.optimizer.grid_phi));
  spec.optimizer.refine_tol = number("refine_tol", spec.optimizer.refine_tol);
  if (!doc.contains("pairs") || !doc.at("pairs").is_array()) {
    throw io::InputError("sweep spec: missing array field \"pairs\"");
  }
  for (const auto& pair : doc.at("pairs")) {
    if (!pair.is_object() || !pair.contains("x") || !pair.contains("z")) {
      throw io::InputError("sweep spec: each pair needs \"x\" and \"z\"");
    }
    auto resolve = [](const io::Json& v) {
      return v.is_string() ? io::observable_argument(v.get<std::string>()) : v;
    };
    spec.pairs.push_back({resolve(pair.at("x")), resolve(pair.at("z"))});
  }
  return spec;
}

std::vector<double> grid(double start, double end, double step) {
  std::vector<double> out;
  const double slack = 1e-9 * step;
  const auto count = static_cast<long>(std::floor((end - start) / step + 1e-9));
  for (long k = 0; k <= count; ++k) {
    double p = start + static_cast<double>(k) * step;
    if (std::abs(p - end) <= slack || p > end) p = end;
    out.push_back(p);
  }
  if (out.empty() || out.back() != end) out.push_back(end);
  return out;
}

StateFamilySpec family_member(const std::string& family, double p) {
  if (family == "werner") return family::Werner{p};
  if (family == "bell_diagonal_special") return family::BellDiagonalSpecial{p};
  if (family == "xstate") return family::XStateSpecial{p};
  throw io::InputError("sweep: no one-parameter family named \"" + family + "\"");
}

std::vector<Row> run(const SweepSpec& spec, const ObservablePairSpec& pair) {
  check(spec);
  std::vector<Row> rows;
  for (double p : grid(spec.p_start, spec.p_end, spec.p_step)) {
    const DensityMatrix rho = build(family_member(spec.family, p));
    const auto x = io::parse_observable(pair.x, rho);
    const auto z = io::parse_observable(pair.z, rho);
    rows.push_back({p, bounds_report(rho, x, z, classical_correlation(rho, spec.optimizer))});
  }
  return rows;
}

std::string format_number(double v) {
  if (std::abs(v) < 5e-13) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_csv(const std::vector<Row>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& row : rows) {
    const auto& r = row.report;
    for (double v : {row.p, r.q_mu, r.s_cond, r.i_ab, r.i_xb, r.i_zb, r.delta, r.bound_berta,
                     r.bound_pati.value_or(std::nan("")), r.bound_ours}) {
      out += format_number(v);
      out += ',';
    }
    out += format_number(r.actual);
    out += '\n';
  }
  return out;
}

io::Json to_json(const std::vector<Row>& rows, const std::string& family,
                 const ObservablePairSpec& pair) {
  io::Json out = io::Json::array();
  for (const auto& row : rows) {
    io::Json j = io::to_json(row.report);
    j["family"] = family;
    j["p"] = row.p;
    j["observables"] = io::Json::array({io::observable_label(pair.x), io::observable_label(pair.z)});
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace qeur::sweep
