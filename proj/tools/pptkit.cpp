// pptkit: construct, validate, and analyze bipartite states with
// block-structured partial transposes.
//
// Subcommands: generate, validate, analyze, reorder, sweep.
// Exit codes: 0 success, 2 user/input error, 3 numerical failure.

#include <cstdlib>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pptkit/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUserError = 2;
constexpr int kExitNumericalError = 3;

struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& in_path) {
  if (in_path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(in_path, std::ios::binary);
  if (!file) throw UserError("cannot open input file '" + in_path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UserError("cannot open output file '" + out_path + "'");
  file << text;
}

double resolve_tolerance(const CLI::Option* tol_opt, double tol_flag) {
  if (tol_opt->count() > 0) {
    if (!(tol_flag >= 0.0) || !std::isfinite(tol_flag))
      throw UserError("--tol must be a finite value >= 0");
    return tol_flag;
  }
  if (const char* env = std::getenv("PPTKIT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !std::isfinite(v) || v < 0.0)
      throw UserError("PPTKIT_TOL must be a finite value >= 0");
    return v;
  }
  return pptkit::kDefaultTolerance;
}

pptkit::MatrixDocument make_generated(const std::string& kind, std::size_t d, double eps,
                                      std::size_t dA, std::size_t dB, std::uint64_t seed,
                                      double bias) {
  pptkit::MatrixDocument doc;
  if (kind == "werner" || kind == "isotropic") {
    const auto [lo, hi] = (kind == "werner") ? pptkit::werner_eps_range(d)
                                             : pptkit::isotropic_eps_range(d);
    if (d < 2) throw UserError(kind + " requires d >= 2");
    if (eps < lo - 1e-12 || eps > hi + 1e-12)
      throw UserError(kind + " requires eps in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "] for a PSD state");
    if (kind == "werner")
      doc.payload = pptkit::WernerSpec{d, eps};
    else
      doc.payload = pptkit::IsotropicSpec{d, eps};
  } else if (kind == "family") {
    if (dA < 2 || dB < dA) throw UserError("family requires 2 <= dA <= dB");
    if (!(bias >= 0.0 && bias <= 1.0)) throw UserError("family requires bias in [0, 1]");
    doc.payload = pptkit::sample_random(dA, dB, seed, bias);
  } else if (kind == "qubit-qudit") {
    if (dB < 2) throw UserError("qubit-qudit requires dB >= 2");
    if (!(bias >= 0.0 && bias <= 1.0)) throw UserError("qubit-qudit requires bias in [0, 1]");
    doc.payload = pptkit::sample_qubit_qudit(dB, seed, bias);
  } else {
    throw UserError("unknown kind '" + kind + "' (expected werner, isotropic, family, qubit-qudit)");
  }
  return doc;
}

void parse_eps_grid(const std::string& grid, double& lo, double& hi, std::size_t& points) {
  const auto first = grid.find(':');
  const auto second = grid.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw UserError("--eps-grid must be lo:hi:points");
  try {
    std::size_t used = 0;
    lo = std::stod(grid.substr(0, first), &used);
    if (used != first) throw std::invalid_argument("lo");
    const std::string mid = grid.substr(first + 1, second - first - 1);
    hi = std::stod(mid, &used);
    if (used != mid.size()) throw std::invalid_argument("hi");
    const std::string tail = grid.substr(second + 1);
    const long long n = std::stoll(tail, &used);
    if (used != tail.size() || n < 2) throw std::invalid_argument("points");
    points = static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw UserError("--eps-grid must be lo:hi:points with points >= 2");
  }
  if (!(std::isfinite(lo) && std::isfinite(hi)) || hi < lo)
    throw UserError("--eps-grid requires finite lo <= hi");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pptkit: bipartite states with block-structured partial transposes"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a state document");
  std::string gen_kind;
  std::size_t g_d = 2, g_dA = 2, g_dB = 2;
  double g_eps = 0.0, g_bias = 0.5;
  std::uint64_t g_seed = 0;
  std::string gen_out;
  gen->add_option("kind", gen_kind, "werner | isotropic | family | qubit-qudit")->required();
  gen->add_option("--d", g_d, "local dimension (werner, isotropic)");
  gen->add_option("--dA", g_dA, "Alice dimension (family)");
  gen->add_option("--dB", g_dB, "Bob dimension (family, qubit-qudit)");
  gen->add_option("--eps", g_eps, "epsilon parameter (werner, isotropic)");
  gen->add_option("--seed", g_seed, "sampler seed (family, qubit-qudit)");
  gen->add_option("--bias", g_bias, "entanglement bias in [0,1] (family, qubit-qudit)");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // validate / analyze / reorder share input flags
  std::string in_path, out_path;
  double tol_flag = pptkit::kDefaultTolerance;
  auto* val = app.add_subcommand("validate", "hermiticity / trace / PSD report");
  auto* ana = app.add_subcommand("analyze", "full spectral and classification report");
  auto* reo = app.add_subcommand("reorder", "permuted block-diagonal partial transpose");
  std::map<CLI::App*, CLI::Option*> tol_opts;
  for (auto* cmd : {val, ana, reo}) {
    cmd->add_option("--in", in_path, "input document (default stdin)");
    cmd->add_option("--out", out_path, "output file (default stdout)");
    tol_opts[cmd] = cmd->add_option("--tol", tol_flag, "tolerance (default 1e-10, or PPTKIT_TOL)");
  }

  // sweep
  auto* swp = app.add_subcommand("sweep", "CSV sweep over an eps grid");
  std::string sweep_kind, sweep_grid, sweep_out;
  std::size_t s_d = 2;
  double s_tol = pptkit::kDefaultTolerance;
  swp->add_option("kind", sweep_kind, "werner | isotropic")->required();
  swp->add_option("--d", s_d, "local dimension");
  swp->add_option("--eps-grid", sweep_grid, "grid lo:hi:points")->required();
  swp->add_option("--out", sweep_out, "output file (default stdout)");
  CLI::Option* sweep_tol_opt = swp->add_option("--tol", s_tol, "tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUserError;
  }

  try {
    if (gen->parsed()) {
      const pptkit::MatrixDocument doc =
          make_generated(gen_kind, g_d, g_eps, g_dA, g_dB, g_seed, g_bias);
      write_output(gen_out, pptkit::serialize(doc));
      return kExitOk;
    }

    if (swp->parsed()) {
      double lo = 0.0, hi = 0.0;
      std::size_t points = 0;
      parse_eps_grid(sweep_grid, lo, hi, points);
      pptkit::DocumentKind kind;
      if (sweep_kind == "werner")
        kind = pptkit::DocumentKind::Werner;
      else if (sweep_kind == "isotropic")
        kind = pptkit::DocumentKind::Isotropic;
      else
        throw UserError("sweep kind must be werner or isotropic");
      if (s_d < 2) throw UserError("sweep requires d >= 2");
      const double tol = resolve_tolerance(sweep_tol_opt, s_tol);
      write_output(sweep_out, pptkit::sweep_csv(kind, s_d, lo, hi, points, tol));
      return kExitOk;
    }

    CLI::App* active = val->parsed() ? val : (ana->parsed() ? static_cast<CLI::App*>(ana) : reo);
    const double tol = resolve_tolerance(tol_opts.at(active), tol_flag);
    const pptkit::MatrixDocument doc = pptkit::parse_document_text(read_input(in_path));
    if (val->parsed()) {
      pptkit::ValidationReport rep;
      switch (doc.kind()) {
        case pptkit::DocumentKind::Family:
          rep = pptkit::validate(std::get<pptkit::FamilyParams>(doc.payload), tol);
          break;
        case pptkit::DocumentKind::QubitQudit:
          rep = pptkit::validate(std::get<pptkit::QubitQuditParams>(doc.payload), tol);
          break;
        default:
          rep = pptkit::validate(doc.to_dense(), tol);
          break;
      }
      write_output(out_path, pptkit::to_json(rep).dump(2) + "\n");
    } else if (ana->parsed()) {
      write_output(out_path, pptkit::analysis_report(doc, tol).dump(2) + "\n");
    } else if (reo->parsed()) {
      write_output(out_path, pptkit::reorder_report(doc, tol).dump(2) + "\n");
    }
    return kExitOk;
  } catch (const pptkit::EigensolveError& e) {
    std::cerr << "pptkit: numerical failure: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const pptkit::DocumentError& e) {
    std::cerr << "pptkit: " << e.what() << "\n";
    return kExitUserError;
  } catch (const UserError& e) {
    std::cerr << "pptkit: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    std::cerr << "pptkit: " << e.what() << "\n";
    return kExitUserError;
  }
}
