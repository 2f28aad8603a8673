#include "spapt/experiments.hpp"

#include "spapt/channels.hpp"

namespace spapt {

namespace {

Cell text(std::string_view s) { return std::string(s); }

Cell number(double v) { return v; }

Cell count(std::uint64_t v) { return static_cast<double>(v); }

}  // namespace

double lambda_th(const DensityMatrix& rho) { return min_eigenvalue(apply(spa_pt(), rho)); }

double lambda_exp(const DensityMatrix& rho, const ShotConfig& cfg) {
  const TrajectoryResult out = trajectory_spa_pt(rho, cfg);
  const ComplexMatrix estimate = qst_linear_inversion(sample_pauli_expectations(out.state, cfg));
  return spapt::min_eigenvalue(hermitian_part(estimate));
}

double lambda_d_sampled(const DensityMatrix& rho, const ShotConfig& cfg) {
  return lambda_min_d(f_hat(sample_table(rho, cfg)));
}

double lambda_d_ideal(const DensityMatrix& rho) {
  return lambda_min_d(f_hat(ideal_probabilities(rho)));
}

Table1 run_table1(const ShotConfig& cfg) {
  Table1 table{cfg, {}, {}, {}};
  for (std::size_t k = 0; k < 4; ++k) {
    const DensityMatrix rho = bell(kAllBellKinds[k]);
    table.th[k] = lambda_th(rho);
    table.exp[k] = lambda_exp(rho, cfg);
    table.d[k] = lambda_d_sampled(rho, cfg);
  }
  return table;
}

Report table1_report(const Table1& table) {
  Report report{"table1",
                {"method", "state", "lambda_min", "threshold", "verdict", "shots", "seed", "version"},
                {}};
  const std::array<std::pair<const char*, const std::array<double, 4>*>, 3> methods = {{
      {"th", &table.th},
      {"exp", &table.exp},
      {"d", &table.d},
  }};
  for (const auto& [name, values] : methods) {
    const std::uint64_t shots = std::string_view(name) == "th" ? 0 : table.cfg.shots_per_setting;
    for (std::size_t k = 0; k < 4; ++k) {
      const DetectionVerdict v = make_verdict((*values)[k], Method::SpaSpectrum, shots);
      report.add_row({text(name), text(to_string(kAllBellKinds[k])), number(v.lambda_min),
                      number(v.threshold), text(to_string(v.verdict)), count(shots),
                      count(table.cfg.seed), text(kVersion)});
    }
  }
  return report;
}

std::vector<Fig3Row> run_fig3(const ShotConfig& cfg) {
  std::vector<Fig3Row> rows;
  auto evaluate = [&](std::string series, double p, std::optional<double> alpha,
                      const DensityMatrix& rho) {
    Fig3Row row;
    row.series = std::move(series);
    row.p = p;
    row.alpha = alpha;
    row.tangle = tangle(rho);
    row.linear_entropy = linear_entropy(rho);
    row.lambda_th = lambda_th(rho);
    row.lambda_d_ideal = lambda_d_ideal(rho);
    row.lambda_d_sampled = lambda_d_sampled(rho, cfg);
    row.verdict = make_verdict(row.lambda_th, Method::SpaSpectrum, 0).verdict;
    rows.push_back(std::move(row));
  };
  for (const FamilyPoint& point : kNineFamilyStates) {
    evaluate("nine", point.p, point.alpha, family_rho(point.p, point.alpha));
  }
  for (std::size_t g = 0; g < kCurvePoints; ++g) {
    const double p = static_cast<double>(g) / static_cast<double>(kCurvePoints - 1);
    evaluate("werner", p, std::nullopt, werner(p));
  }
  for (std::size_t g = 0; g < kCurvePoints; ++g) {
    const double p = static_cast<double>(g) / static_cast<double>(kCurvePoints - 1);
    evaluate("mems", p, std::nullopt, mems(p));
  }
  return rows;
}

Report fig3_report(const std::vector<Fig3Row>& rows, const ShotConfig& cfg) {
  Report report{"fig3",
                {"series", "p", "alpha", "tangle", "linear_entropy", "lambda_th", "lambda_d_ideal",
                 "lambda_d_sampled", "verdict", "shots", "seed", "version"},
                {}};
  for (const Fig3Row& row : rows) {
    report.add_row({text(row.series), number(row.p),
                    row.alpha ? number(*row.alpha) : Cell{}, number(row.tangle),
                    number(row.linear_entropy), number(row.lambda_th), number(row.lambda_d_ideal),
                    number(row.lambda_d_sampled), text(to_string(row.verdict)),
                    count(cfg.shots_per_setting), count(cfg.seed), text(kVersion)});
  }
  return report;
}

}  // namespace spapt
