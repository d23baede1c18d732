#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qeur/io.hpp"

namespace qeur::sweep {

struct ObservablePairSpec {
  io::Json x;
  io::Json z;
};

struct SweepSpec {
  std::string family;  // werner | bell_diagonal_special | xstate
  double p_start = 0.0;
  double p_end = 1.0;
  double p_step = 0.01;
  std::vector<ObservablePairSpec> pairs;
  OptimizerConfig optimizer;
};

/// Throws io::InputError unless 0 <= p_start <= p_end <= 1, p_step > 0, the
/// family is a one-parameter family and at least one pair is given.
void check(const SweepSpec& spec);

/// fig1a: BellDiagonalSpecial on the first two ranked axes; fig1b: first and
/// third ranked axes (numerically sigma_x / sigma_z); fig2: XStateSpecial on
/// sigma_x / sigma_z. All with p in [0, 1] step 0.01.
SweepSpec preset(std::string_view name);

/// {"family", "p_start", "p_end", "p_step", "pairs": [{"x": obs, "z": obs}],
///  "grid_theta", "grid_phi", "refine_tol"}; only "family" and "pairs" are
/// required.
SweepSpec parse_spec(const io::Json& doc);

/// p_start + k p_step up to p_end, with a final exact p_end if the step grid
/// misses it.
std::vector<double> grid(double start, double end, double step);

StateFamilySpec family_member(const std::string& family, double p);

struct Row {
  double p = 0.0;
  BoundsReport report;
};

/// One row per grid point, ascending p, discord optimizer always run so the
/// Pati column is filled.
std::vector<Row> run(const SweepSpec& spec, const ObservablePairSpec& pair);

inline constexpr const char* kCsvHeader =
    "p,q_mu,s_cond,i_ab,i_xb,i_zb,delta,bound_berta,bound_pati,bound_ours,actual";

/// %.12g, with |v| < 5e-13 written as 0 so round-off noise does not leak into
/// golden files.
std::string format_number(double v);

std::string to_csv(const std::vector<Row>& rows);

io::Json to_json(const std::vector<Row>& rows, const std::string& family,
                 const ObservablePairSpec& pair);

}  // namespace qeur::sweep
