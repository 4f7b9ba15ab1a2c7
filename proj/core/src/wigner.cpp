#include "wwm/wigner.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wwm/errors.hpp"

namespace wwm {
namespace {

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

double parse_double(std::string_view s) {
  std::string text(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed number '" + text + "' in grid spec");
  }
  if (used != text.size()) throw std::invalid_argument("malformed number '" + text + "' in grid spec");
  return v;
}

int parse_count(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed point count '" + std::string(s) + "' in grid spec");
  return v;
}

void parse_axis(std::string_view axis, double& lo, double& hi, int& n) {
  const auto c1 = axis.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : axis.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw std::invalid_argument("grid axis must be min:max:count");
  lo = parse_double(axis.substr(0, c1));
  hi = parse_double(axis.substr(c1 + 1, c2 - c1 - 1));
  n = parse_count(axis.substr(c2 + 1));
}

// Trapezoid weight for index k of n samples.
double edge_weight(int k, int n) { return (k == 0 || k == n - 1) ? 0.5 : 1.0; }

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("grid spec must be qmin:qmax:nq,pmin:pmax:np");
  GridSpec g;
  parse_axis(text.substr(0, comma), g.q_min, g.q_max, g.nq);
  parse_axis(text.substr(comma + 1), g.p_min, g.p_max, g.np);
  g.validate();
  return g;
}

void GridSpec::validate() const {
  if (nq < 2 || np < 2) throw std::invalid_argument("grid needs at least two points per axis");
  if (!(q_max > q_min) || !(p_max > p_min)) throw std::invalid_argument("grid ranges must be non-empty");
  if (!std::isfinite(q_min) || !std::isfinite(q_max) || !std::isfinite(p_min) || !std::isfinite(p_max))
    throw std::invalid_argument("grid bounds must be finite");
}

double WignerGrid::integral() const {
  double sum = 0.0;
  for (int i = 0; i < spec.nq; ++i)
    for (int j = 0; j < spec.np; ++j) sum += edge_weight(i, spec.nq) * edge_weight(j, spec.np) * at(i, j);
  return sum * spec.dq() * spec.dp();
}

void WignerGrid::write_csv(std::ostream& out) const {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "q,p,w\n" << std::setprecision(17);
  for (int i = 0; i < spec.nq; ++i)
    for (int j = 0; j < spec.np; ++j) out << spec.q(i) << ',' << spec.p(j) << ',' << at(i, j) << '\n';
  out.flags(flags);
  out.precision(precision);
}

std::vector<double> hermite_functions(int n, double xi) {
  std::vector<double> phi(static_cast<std::size_t>(n) + 1);
  phi[0] = std::exp(-0.5 * xi * xi) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n >= 1) phi[1] = std::sqrt(2.0) * xi * phi[0];
  for (int k = 1; k < n; ++k) {
    phi[k + 1] = std::sqrt(2.0 / (k + 1)) * xi * phi[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * phi[k - 1];
  }
  return phi;
}

WignerGrid wigner_grid(const DensityMatrix& u, const GridSpec& spec, const Rational& hbar) {
  spec.validate();
  if (sgn(hbar) <= 0) throw std::invalid_argument("hbar must be positive");
  const double h_bar = hbar.get_d();
  const double scale = std::sqrt(h_bar);

  const int top = std::max(u.max_level(), 0);
  const int levels = top + 1;
  const Eigen::MatrixXcd rho = u.matrix().topLeftCorner(levels, levels);

  // Work in ξ = x/sqrt(ħ). The integrand in the relative coordinate η is a
  // Gaussian times a polynomial times e^{-2iPη}; the step keeps the first
  // alias of its spectrum far outside the Gaussian tail.
  const double turning = std::sqrt(2.0 * top + 1.0);
  const double p_extent = std::max(std::abs(spec.p_min), std::abs(spec.p_max)) / scale;
  const double step = 2.0 * std::numbers::pi / (2.0 * p_extent + 4.0 * turning + 24.0);
  const int half = static_cast<int>(std::ceil((turning + 9.0) / step));
  const int nodes = 2 * half + 1;

  Eigen::VectorXd eta(nodes);
  for (int k = 0; k < nodes; ++k) eta(k) = (k - half) * step;

  Eigen::MatrixXcd phase(spec.np, nodes);
  for (int j = 0; j < spec.np; ++j) {
    const double p_scaled = spec.p(j) / scale;
    for (int k = 0; k < nodes; ++k) phase(j, k) = std::polar(1.0, -2.0 * p_scaled * eta(k));
  }

  WignerGrid grid{spec, std::vector<double>(static_cast<std::size_t>(spec.nq) * spec.np), 0.0};
  const double norm = step / (std::numbers::pi * h_bar);
  Eigen::MatrixXd plus(levels, nodes);
  Eigen::MatrixXd minus(levels, nodes);

  for (int i = 0; i < spec.nq; ++i) {
    const double q_scaled = spec.q(i) / scale;
    for (int k = 0; k < nodes; ++k) {
      const auto a = hermite_functions(top, q_scaled + eta(k));
      const auto b = hermite_functions(top, q_scaled - eta(k));
      for (int m = 0; m < levels; ++m) {
        plus(m, k) = a[m];
        minus(m, k) = b[m];
      }
    }
    // s_k = Σ_mn φ_m(Q+η_k) U_mn φ_n(Q−η_k)
    const Eigen::MatrixXcd u_minus = rho * minus.cast<std::complex<double>>();
    const Eigen::VectorXcd s = (plus.cast<std::complex<double>>().array() * u_minus.array()).colwise().sum().transpose();
    const Eigen::VectorXcd row = norm * (phase * s);
    for (int j = 0; j < spec.np; ++j) {
      const double residue = std::abs(row(j).imag());
      grid.max_imag_residue = std::max(grid.max_imag_residue, residue);
      if (residue > kWignerImagTol) {
        throw NumericalContractError("Wigner sample at (" + std::to_string(spec.q(i)) + ", " +
                                     std::to_string(spec.p(j)) + ") has imaginary residue " +
                                     std::to_string(residue));
      }
      grid.values[static_cast<std::size_t>(i) * spec.np + j] = row(j).real();
    }
  }
  return grid;
}

double overlap_expectation(const WignerGrid& w, const PhasePoly& f, const Rational& hbar) {
  const NumericPoly fn(f, hbar);
  const GridSpec& g = w.spec;
  std::complex<double> sum = 0.0;
  double boundary = 0.0;
  for (int i = 0; i < g.nq; ++i) {
    for (int j = 0; j < g.np; ++j) {
      const std::complex<double> v = w.at(i, j) * fn(g.q(i), g.p(j));
      if (i == 0 || j == 0 || i == g.nq - 1 || j == g.np - 1) boundary = std::max(boundary, std::abs(v));
      sum += edge_weight(i, g.nq) * edge_weight(j, g.np) * v;
    }
  }
  if (boundary > kBoundaryDecayTol) {
    throw GridError("W*f does not decay at the grid boundary (max " + sci(boundary) +
                    "); widen the grid");
  }
  sum *= g.dq() * g.dp();
  if (std::abs(sum.imag()) > 1e-10 * std::max(1.0, std::abs(sum.real()))) {
    throw ImaginaryResidueError("phase-space average has imaginary residue " + std::to_string(sum.imag()));
  }
  return sum.real();
}

double overlap_expectation(const DensityMatrix& u, const PhasePoly& f, const GridSpec& spec,
                           const Rational& hbar) {
  return overlap_expectation(wigner_grid(u, spec, hbar), f, hbar);
}

}  // namespace wwm
