// wwm: command-line front end for the phase-space toolkit.
//
// Exit codes: 0 success, 1 usage or parse error, 2 numerical-contract
// violation (truncation instability, imaginary residue, inadequate grid).

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wwm/errors.hpp"
#include "wwm/expr.hpp"
#include "wwm/serialize.hpp"
#include "wwm/vn.hpp"

namespace {

using nlohmann::json;
using namespace wwm;

struct Globals {
  std::string hbar_text = "1";
  int dim = 64;
  std::string grid_text = "-8:8:257,-8:8:257";
  bool json = false;

  Rational hbar;
  GridSpec grid;
};

struct Output {
  json result = json::object();
  std::vector<std::string> diagnostics;
  std::string text;
};

std::string format_number(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_number(z.real());
  return format_number(z.real()) + (z.imag() < 0 ? " - " : " + ") + format_number(std::abs(z.imag())) + "*i";
}

PhasePoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("point must be q0,p0");
  return PhasePoint::make(parse_rational(text.substr(0, comma)).get_d(), parse_rational(text.substr(comma + 1)).get_d());
}

// fock:n or mix:w1:n1,w2:n2,...
DensityMatrix parse_state(const std::string& text, int dim) {
  auto level = [&](const std::string& s) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("bad Fock level '" + s + "' in state spec");
    return n;
  };
  if (text.rfind("fock:", 0) == 0) return fock_state(level(text.substr(5)), dim);
  if (text.rfind("mix:", 0) == 0) {
    std::vector<double> weights;
    std::vector<DensityMatrix> states;
    std::stringstream items(text.substr(4));
    std::string item;
    while (std::getline(items, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("mixture entries must be weight:level");
      weights.push_back(parse_rational(item.substr(0, colon)).get_d());
      states.push_back(fock_state(level(item.substr(colon + 1)), dim));
    }
    return mixture(weights, states);
  }
  throw std::invalid_argument("state spec must be fock:n or mix:w1:n1,w2:n2,...");
}

std::string gap_text(const GapReport& r) {
  std::string s;
  s += "A            = " + to_string(r.quantity) + "\n";
  s += "f(x)         = " + to_string(r.function) + "\n";
  s += "tilde(f(A))  = " + to_string(r.symbol_of_fA) + "\n";
  s += "f(tilde(A))  = " + to_string(r.f_of_symbol) + "\n";
  s += "gap          = " + to_string(r.gap) + "\n";
  if (r.point && r.gap_at_point) {
    s += "gap at (" + format_number(r.point->q) + ", " + format_number(r.point->p) + ") = " +
         format_complex(*r.gap_at_point) + "\n";
  }
  return s;
}

std::string hv_text(const HvDispersionReport& r) {
  std::string s;
  s += "lambda               = (" + format_number(r.point.q) + ", " + format_number(r.point.p) + ")\n";
  s += "A                    = " + to_string(r.quantity) + "\n";
  s += "f(x)                 = " + to_string(r.function) + "\n";
  s += "A' reading           = " + format_number(r.aprime_reading) + "\n";
  s += "assumption I reading = " + format_number(r.assumption_I_reading) + (r.negative ? " (negative)" : "") + "\n";
  s += "gap polynomial       = " + to_string(r.gap_polynomial) + "\n";
  return s;
}

// "H^2 - 1/4" style rendering of tilde(H^2) in terms of H^2.
std::string relative_to_square(const PhasePoly& gap) {
  if (gap.is_zero()) return "H^2";
  if (gap.degree() == 0) {
    const GaussianRational c = gap.coefficient(0, 0).at(0);
    if (c.is_real() && gap.coefficient(0, 0).max_grade() == 0) {
      const bool negative = sgn(c.re()) < 0;
      return std::string("H^2 ") + (negative ? "- " : "+ ") + to_string(Rational(abs(c.re())));
    }
  }
  return "H^2 + (" + to_string(gap) + ")";
}

Output vn_demo(const Globals& g) {
  Output out;
  const OpPoly h = operators::oscillator_hamiltonian();
  const OpPoly h2 = h * h;
  const PhasePoly h_symbol = dequantize(h);
  const PhasePoly h2_symbol = dequantize(h2);
  const PhasePoly classical_h = parse_symbol("(q^2+p^2)/2");
  const GapReport gap = assumption_I_gap(h, UniPoly::monomial(2), std::nullopt, g.hbar);
  const PhasePoly gap_numeric = substitute_hbar(gap.gap, g.hbar);
  const bool star_matches = star(h_symbol, h_symbol) == h2_symbol;
  const bool assumption_I_holds = gap.gap.is_zero();
  const bool assumption_II_holds = assumption_II_check(operators::Q() * operators::Q(), operators::P() * operators::P());

  const DensityMatrix ground = fock_state(0, g.dim);
  const double dis_h = dispersion(ground, h, g.hbar);
  const Witness witness = dispersion_free_witness(ground, g.hbar);
  const PhasePoint lambda{0.5, -1.0};
  const HvDispersionReport hv = hv_dispersion(lambda, h, g.hbar);
  const AverageCheck average = hv_average_check(ground, h2, g.grid, g.hbar);

  std::ostringstream s;
  s << "hbar = " << to_string(g.hbar) << "\n\n";
  s << "H            = " << to_string(h) << "\n";
  s << "H^2          = " << to_string(h2) << "\n";
  s << "tilde(H)     = " << to_string(h_symbol) << "\n";
  s << "tilde(H^2)   = " << to_string(h2_symbol) << "\n";
  s << (h_symbol == classical_h ? "tilde(H) = H" : "tilde(H) != H") << "\n";
  s << "tilde(H^2) = " << relative_to_square(gap_numeric) << "\n";
  s << "tilde(H) star tilde(H) = tilde(H^2): " << (star_matches ? "yes" : "no") << "\n";
  s << "gap tilde(H^2) - tilde(H)^2 = " << to_string(gap.gap) << "\n\n";
  s << "Hilbert space (N = " << g.dim << "): Dis(H) in |0> = " << format_number(dis_h) << "\n";
  s << "dispersion-free witness for |0><0|: " << witness.name << " with Dis = " << format_number(witness.dispersion)
    << "\n";
  s << "phase-space point lambda = (" << format_number(lambda.q) << ", " << format_number(lambda.p)
    << "): A' dispersion = " << format_number(hv.aprime_reading)
    << ", assumption I reading = " << format_number(hv.assumption_I_reading) << "\n";
  s << "lambda-average on |0><0|: tr(U H^2) = " << format_number(average.trace)
    << ", integral of W tilde(H^2) = " << format_number(average.overlap) << "\n\n";
  s << "verdict: assumption I " << (assumption_I_holds ? "holds" : "fails")
    << " in phase space: tilde(f(H)) " << (assumption_I_holds ? "=" : "!=")
    << " f(tilde(H)) for f(x) = x^2; assumption II " << (assumption_II_holds ? "holds" : "fails") << "\n";
  out.text = s.str();

  out.result = {{"H", h},
                {"H2", h2},
                {"tilde_H", h_symbol},
                {"tilde_H2", h2_symbol},
                {"tilde_H2_relative", relative_to_square(gap_numeric)},
                {"gap", gap},
                {"star_matches", star_matches},
                {"assumption_I_holds", assumption_I_holds},
                {"assumption_II_holds", assumption_II_holds},
                {"dispersion_H_ground", dis_h},
                {"witness", witness},
                {"hv", hv},
                {"average", average}};
  if (std::abs(average.trace - average.overlap) > kAverageTol)
    out.diagnostics.push_back("lambda-average mismatch exceeds tolerance");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl-Wigner-Moyal phase-space toolkit with a Fock-space oracle"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--hbar", g.hbar_text, "Value substituted for hbar (rational)")->capture_default_str();
  app.add_option("--dim", g.dim, "Fock truncation dimension")->capture_default_str();
  app.add_option("--grid", g.grid_text, "Phase-space grid qmin:qmax:nq,pmin:pmax:np (default range scales with sqrt(hbar) above 1)")->capture_default_str();
  app.add_flag("--json", g.json, "Emit JSON {command, hbar, result, diagnostics}");

  std::string expr_a, expr_b, op_text, f_text, at_text, state_text, out_path, point_text;

  auto* deq = app.add_subcommand("dequantize", "Weyl symbol of an operator expression");
  deq->add_option("operator", expr_a)->required();
  auto* quant = app.add_subcommand("quantize", "Weyl quantization of a symbol expression");
  quant->add_option("symbol", expr_a)->required();
  auto* star_cmd = app.add_subcommand("star", "Moyal star product f * g");
  star_cmd->add_option("f", expr_a)->required();
  star_cmd->add_option("g", expr_b)->required();
  auto* bracket_cmd = app.add_subcommand("bracket", "Moyal bracket f*g - g*f");
  bracket_cmd->add_option("f", expr_a)->required();
  bracket_cmd->add_option("g", expr_b)->required();
  auto* nf = app.add_subcommand("normal-form", "Canonical Q-left normal order");
  nf->add_option("operator", expr_a)->required();
  auto* gap_cmd = app.add_subcommand("gap", "Symbol of f(A) versus f(symbol of A)");
  gap_cmd->add_option("--op", op_text, "Operator expression in Q, P, hbar, i")->required();
  gap_cmd->add_option("--f", f_text, "Polynomial in x")->required();
  gap_cmd->add_option("--at", at_text, "Evaluate at q0,p0");
  auto* expect_cmd = app.add_subcommand("expect", "tr(U A)");
  auto* disp_cmd = app.add_subcommand("dispersion", "tr(U A^2) - tr(U A)^2");
  for (auto* c : {expect_cmd, disp_cmd}) {
    c->add_option("--state", state_text, "fock:n or mix:w1:n1,w2:n2,...")->required();
    c->add_option("--op", op_text, "Operator expression in Q, P, hbar, i")->required();
  }
  auto* wigner_cmd = app.add_subcommand("wigner", "Sample the Wigner function to CSV");
  wigner_cmd->add_option("--state", state_text, "fock:n or mix:w1:n1,w2:n2,...")->required();
  wigner_cmd->add_option("--out", out_path, "CSV file (q,p,w)")->required();
  auto* hv_cmd = app.add_subcommand("hv", "Hidden-variable readings at a phase point");
  hv_cmd->add_option("--point", point_text, "q0,p0")->required();
  hv_cmd->add_option("--op", op_text, "Operator expression in Q, P, hbar, i")->required();
  hv_cmd->add_option("--f", f_text, "Polynomial in x (default x^2)");
  auto* demo = app.add_subcommand("vn-demo", "Reproduce the H^2 symbol computation end to end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  CLI::App* cmd = app.get_subcommands().front();
  Output out;
  try {
    g.hbar = parse_rational(g.hbar_text);
    if (sgn(g.hbar) <= 0) throw std::invalid_argument("--hbar must be positive");
    g.grid = GridSpec::parse(g.grid_text);
    // Fock states spread like sqrt(hbar); stretch the default window to match.
    if (app.get_option("--grid")->count() == 0 && g.hbar > 1) {
      const double s = std::sqrt(g.hbar.get_d());
      g.grid.q_min *= s;
      g.grid.q_max *= s;
      g.grid.p_min *= s;
      g.grid.p_max *= s;
    }

    if (cmd == deq) {
      const PhasePoly s = dequantize(parse_operator(expr_a));
      out.result = s;
      out.text = to_string(s) + "\n";
    } else if (cmd == quant) {
      const OpPoly a = weyl_quantize(parse_symbol(expr_a));
      out.result = a;
      out.text = to_string(a) + "\n";
    } else if (cmd == star_cmd || cmd == bracket_cmd) {
      const PhasePoly f = parse_symbol(expr_a), h = parse_symbol(expr_b);
      const PhasePoly s = cmd == star_cmd ? star(f, h) : moyal_bracket(f, h);
      out.result = s;
      out.text = to_string(s) + "\n";
    } else if (cmd == nf) {
      const OpPoly a = parse_operator(expr_a);
      out.result = a;
      out.text = to_string(a) + "\n";
    } else if (cmd == gap_cmd) {
      std::optional<PhasePoint> pt;
      if (!at_text.empty()) pt = parse_point(at_text);
      const GapReport r = assumption_I_gap(parse_operator(op_text), parse_univariate(f_text), pt, g.hbar);
      out.result = r;
      out.text = gap_text(r);
    } else if (cmd == expect_cmd || cmd == disp_cmd) {
      const DensityMatrix u = parse_state(state_text, g.dim);
      const OpPoly a = parse_operator(op_text);
      const double v = cmd == expect_cmd ? trace_expectation(u, a, g.hbar) : dispersion(u, a, g.hbar);
      out.result = {{"value", v}, {"state", state_text}, {"quantity", a}, {"dim", g.dim}};
      out.text = format_number(v) + "\n";
    } else if (cmd == wigner_cmd) {
      const WignerGrid w = wigner_grid(parse_state(state_text, g.dim), g.grid, g.hbar);
      std::ofstream file(out_path);
      if (!file) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
      w.write_csv(file);
      if (!file) throw std::runtime_error("failed writing '" + out_path + "'");
      const double integral = w.integral();
      out.result = {{"path", out_path},
                    {"samples", w.values.size()},
                    {"integral", integral},
                    {"max_imag_residue", w.max_imag_residue}};
      out.text = "wrote " + std::to_string(w.values.size()) + " samples to " + out_path +
                 " (integral " + format_number(integral) + ")\n";
      if (std::abs(integral - 1.0) > 1e-6)
        out.diagnostics.push_back("grid integral deviates from 1 by more than 1e-6; widen the grid");
    } else if (cmd == hv_cmd) {
      const UniPoly f = f_text.empty() ? UniPoly::monomial(2) : parse_univariate(f_text);
      const HvDispersionReport r = hv_dispersion(parse_point(point_text), parse_operator(op_text), f, g.hbar);
      out.result = r;
      out.text = hv_text(r);
    } else if (cmd == demo) {
      out = vn_demo(g);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalContractError& e) {
    std::cerr << "numerical contract violated: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (g.json) {
    const json doc = {{"command", cmd->get_name()},
                      {"hbar", to_string(g.hbar)},
                      {"result", out.result},
                      {"diagnostics", out.diagnostics}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text;
    for (const auto& d : out.diagnostics) std::cerr << "warning: " << d << "\n";
  }
  return 0;
}
