#include "qeur/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qeur/error.hpp"

namespace qeur::io {

namespace {

const Json& require_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(where + ": missing field \"" + key + "\"");
  }
  return obj.at(key);
}

double require_number(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require_field(obj, key, where);
  if (!v.is_number()) throw InputError(where + ": field \"" + key + "\" must be a number");
  return v.get<double>();
}

RealMatrix real_rows(const Json& rows, const std::string& where) {
  if (!rows.is_array() || rows.empty()) throw InputError(where + ": expected a non-empty array of rows");
  const auto n_rows = rows.size();
  const auto n_cols = rows.front().is_array() ? rows.front().size() : 0;
  RealMatrix m(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols));
  for (std::size_t i = 0; i < n_rows; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != n_cols) throw InputError(where + ": ragged matrix rows");
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (!row[j].is_number()) throw InputError(where + ": matrix entries must be numbers");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j].get<double>();
    }
  }
  return m;
}

ComplexMatrix complex_matrix(const Json& obj, const std::string& where) {
  const RealMatrix re = real_rows(require_field(obj, "re", where), where + ".re");
  RealMatrix im = RealMatrix::Zero(re.rows(), re.cols());
  if (obj.contains("im")) {
    im = real_rows(obj.at("im"), where + ".im");
    if (im.rows() != re.rows() || im.cols() != re.cols()) {
      throw InputError(where + ": re and im have different shapes");
    }
  }
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

std::vector<double> number_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw InputError(where + ": expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

Json matrix_rows(const RealMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json load_json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
      return Json::parse(arg);
    }
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open \"" + arg + "\"");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

StateFamilySpec parse_state(const Json& doc) {
  if (!doc.is_object()) throw InputError("state: expected a JSON object");
  if (doc.contains("explicit")) {
    const Json& e = doc.at("explicit");
    const std::string where = "state.explicit";
    const auto da = require_field(e, "dA", where);
    const auto db = require_field(e, "dB", where);
    if (!da.is_number_integer() || !db.is_number_integer()) {
      throw InputError(where + ": dA and dB must be integers");
    }
    return family::Explicit{complex_matrix(e, where), Dims{da.get<int>(), db.get<int>()}};
  }
  if (!doc.contains("family")) {
    throw InputError("state: expected a \"family\" or \"explicit\" object");
  }
  const Json& f = doc.at("family");
  const std::string where = "state.family";
  const Json& name_field = require_field(f, "name", where);
  if (!name_field.is_string()) throw InputError(where + ": name must be a string");
  const auto name = name_field.get<std::string>();
  if (name == "werner") return family::Werner{require_number(f, "p", where)};
  if (name == "bell_diagonal_special") {
    return family::BellDiagonalSpecial{require_number(f, "p", where)};
  }
  if (name == "xstate") return family::XStateSpecial{require_number(f, "p", where)};
  if (name == "bell_diagonal") {
    const auto r = number_list(require_field(f, "r", where), where + ".r");
    if (r.size() != 3) throw InputError(where + ".r: expected three components");
    return family::BellDiagonal{{r[0], r[1], r[2]}};
  }
  if (name == "pure_schmidt") {
    return family::PureSchmidt{number_list(require_field(f, "lambda", where), where + ".lambda")};
  }
  throw InputError(where + ": unknown family \"" + name + "\"");
}

Json observable_argument(const std::string& arg) {
  for (const char* name : {"sigma_x", "sigma_y", "sigma_z"}) {
    if (arg == name) return Json{{"named", name}};
  }
  for (int k = 1; k <= 3; ++k) {
    if (arg == "ranked" + std::to_string(k)) return Json{{"ranked", k}};
  }
  return load_json_argument(arg);
}

ProjectiveObservable parse_observable(const Json& doc, const DensityMatrix& rho) {
  if (!doc.is_object()) throw InputError("observable: expected a JSON object");
  if (doc.contains("named")) {
    const auto& v = doc.at("named");
    const std::string name = v.is_string() ? v.get<std::string>() : "";
    if (name == "sigma_x") return pauli_observable(0);
    if (name == "sigma_y") return pauli_observable(1);
    if (name == "sigma_z") return pauli_observable(2);
    throw InputError("observable.named: expected sigma_x, sigma_y or sigma_z");
  }
  if (doc.contains("bloch")) {
    const auto n = number_list(doc.at("bloch"), "observable.bloch");
    if (n.size() != 3) throw InputError("observable.bloch: expected three components");
    return observable_from_bloch(BlochDirection({n[0], n[1], n[2]}));
  }
  if (doc.contains("basis")) {
    return ProjectiveObservable(complex_matrix(doc.at("basis"), "observable.basis"));
  }
  if (doc.contains("ranked")) {
    const auto& v = doc.at("ranked");
    const int k = v.is_number_integer() ? v.get<int>() : 0;
    if (k < 1 || k > 3) throw InputError("observable.ranked: expected 1, 2 or 3");
    return observable_from_bloch(ranked_correlation_axes(rho)[static_cast<std::size_t>(k - 1)]);
  }
  throw InputError("observable: expected one of named, bloch, basis, ranked");
}

std::string observable_label(const Json& doc) {
  if (doc.contains("named") && doc.at("named").is_string()) return doc.at("named").get<std::string>();
  if (doc.contains("ranked")) return "ranked" + doc.at("ranked").dump();
  return doc.dump();
}

Json state_to_json(const DensityMatrix& rho) {
  return Json{{"explicit",
               {{"dA", rho.dims().a},
                {"dB", rho.dims().b},
                {"re", matrix_rows(rho.matrix().real())},
                {"im", matrix_rows(rho.matrix().imag())}}}};
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["q_mu"] = r.q_mu;
  j["q_prime"] = r.q_prime;
  j["s_cond"] = r.s_cond;
  j["i_ab"] = r.i_ab;
  j["i_xb"] = r.i_xb;
  j["i_zb"] = r.i_zb;
  j["delta"] = r.delta;
  j["bound_mu"] = r.bound_mu;
  j["bound_mu_mixed"] = r.bound_mu_mixed;
  j["bound_berta"] = r.bound_berta;
  j["bound_coles_piani"] = r.bound_coles_piani;
  if (r.bound_pati) j["bound_pati"] = *r.bound_pati;
  j["bound_ours"] = r.bound_ours;
  j["actual"] = r.actual;
  if (r.pati_correction) j["pati_correction"] = *r.pati_correction;
  return j;
}

Json to_json(const CorrelationReport& r) {
  const auto& n = r.optimal_direction.components();
  Json j;
  j["classical_correlation"] = r.classical_correlation;
  j["discord"] = r.discord;
  j["mutual_information"] = r.mutual_information;
  j["optimal_direction"] = Json::array({n[0], n[1], n[2]});
  j["grid_best"] = r.trace.grid_best;
  j["refined_best"] = r.trace.refined_best;
  j["iterations"] = r.trace.iterations;
  j["projective_only"] = r.projective_only;
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.ok();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}});
  }
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const ApplicationsReport& r) {
  Json j;
  j["entangled_by_berta"] = r.witness.entangled_by_berta;
  j["entangled_by_ours"] = r.witness.entangled_by_ours;
  j["margin_berta"] = r.witness.margin_berta;
  j["margin_ours"] = r.witness.margin_ours;
  j["pe_x"] = r.eof.pe_x;
  j["pe_z"] = r.eof.pe_z;
  j["fano_term"] = r.eof.fano;
  j["eof_lower"] = r.eof.value;
  j["eof_vacuous"] = r.eof.vacuous;
  j["crand_upper"] = r.crand_upper;
  j["s_b"] = r.s_b;
  return j;
}

std::string render_table(const Json& flat) {
  std::size_t width = 0;
  for (const auto& [key, value] : flat.items()) width = std::max(width, key.size());
  std::ostringstream os;
  for (const auto& [key, value] : flat.items()) {
    os << key << std::string(width - key.size() + 2, ' ') << value.dump() << '\n';
  }
  return os.str();
}

}  // namespace qeur::io
