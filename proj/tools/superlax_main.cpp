#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "superlax/catalog.hpp"
#include "superlax/serialize.hpp"

using namespace superlax;

namespace {

int write_out(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 2;
  }
  out << payload;
  return 0;
}

// Named operators of a model bundle, addressable from the command line.
Operator bundle_operator(const ModelSpec& spec, const std::string& name) {
  if (name == "H") return build::superhamiltonian(spec);
  if (name == "H0") return build::h0(spec);
  if (name == "H0phys") return build::h0_physical(spec);
  if (name == "Qplus") return build::q_plus(spec);
  if (name == "Qminus") return build::q_minus(spec);
  if (name == "Qfplus") return build::q_plus_free(spec);
  if (name == "Qfminus") return build::q_minus_free(spec);
  if (name == "Qhatplus") return build::q_hat(spec, +1);
  if (name == "Qhatminus") return build::q_hat(spec, -1);
  if (name == "dQplus") return build::delta_q(spec, +1);
  if (name == "dQminus") return build::delta_q(spec, -1);
  if (name == "Lax") return build::lax_operator(spec);
  if (name == "Laxplus") return build::lax_pm_operator(spec, +1);
  if (name == "Laxminus") return build::lax_pm_operator(spec, -1);
  if (name == "dLax") return build::delta_lax(spec);
  if (name == "N") return number_op(spec.chart());
  if (name == "dyN") return dyn_partial(spec);
  if (name == "yN") return yn_coordinate(spec);
  if (name == "D") return dunkl_operator(spec, DunklVariant::plain);
  if (name == "Dplus") return dunkl_operator(spec, DunklVariant::plus);
  if (name == "Dminus") return dunkl_operator(spec, DunklVariant::minus);
  if (name == "dD") return delta_dunkl_closed(spec);
  if (name == "h" || name == "HC" || name == "qplus" || name == "qminus" ||
      name == "QCplus" || name == "QCminus") {
    CmParts parts = cm_split(spec);
    if (name == "h") return parts.h;
    if (name == "HC") return parts.hc;
    if (name == "qplus") return parts.q_plus;
    if (name == "qminus") return parts.q_minus;
    if (name == "QCplus") return parts.qc_plus;
    return parts.qc_minus;
  }
  if (name.size() == 2 && name[0] == 'I' && name[1] >= '1' && name[1] <= '4')
    return build::integral(spec, name[1] - '0');
  if (name.rfind("O_", 0) == 0) {
    auto sep = name.find('_', 2);
    if (sep != std::string::npos) {
      int p = std::stoi(name.substr(2, sep - 2));
      int m = std::stoi(name.substr(sep + 1));
      if (p >= 0 && m >= 0 && p + m <= 4) return build::o_pm(spec, p, m);
    }
  }
  throw Error("unknown operator key: " + name);
}

bool bundle_matrix(const ModelSpec& spec, const std::string& name,
                   Mat<Operator>& out) {
  if (name == "L") { out = build::lax_matrix(spec); return true; }
  if (name == "Lplus") { out = build::lax_pm_matrix(spec, +1); return true; }
  if (name == "Lminus") { out = build::lax_pm_matrix(spec, -1); return true; }
  if (name == "M") { out = build::m_matrix(spec); return true; }
  if (name == "L1") { out = build::l1_matrix(spec); return true; }
  if (name == "L2") { out = build::l2_matrix(spec); return true; }
  if (name.size() == 2 && name[0] == 'D' &&
      std::isdigit(static_cast<unsigned char>(name[1]))) {
    out = local_dunkl(spec, name[1] - '0', DunklVariant::plain);
    return true;
  }
  if (name.size() == 7 && name.rfind("Htilde", 0) == 0 &&
      std::isdigit(static_cast<unsigned char>(name[6]))) {
    out = h_tilde(spec, name[6] - '0');
    return true;
  }
  return false;
}

std::string matrix_json(const ModelSpec& spec, const std::string& name,
                        const Mat<Operator>& m) {
  nlohmann::ordered_json out;
  out["model"] = to_string(spec.model());
  out["n"] = spec.n();
  out["name"] = name;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact operator-identity workbench for Calogero-Sutherland models"};
  app.require_subcommand(1);

  std::string model_name = "free-calogero";
  int n = 2;
  std::string filter = "*";
  std::string mode_name;
  std::string format = "text";
  std::string out_path;
  std::string op_name;
  int jobs = 1;
  int depth = 2;
  int rep_m = 1;
  bool enable_n4 = false;

  auto add_model_opts = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_name,
                    "model: free-calogero|calogero|ts|hs")
        ->check(CLI::IsMember({"free-calogero", "calogero", "ts", "hs"}));
    cmd->add_option("--n", n, "particle count (2..4)")->check(CLI::Range(2, 4));
    cmd->add_flag("--enable-n4", enable_n4,
                  "allow the combinatorially heavy n=4 runs");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the identity catalog");
  add_model_opts(verify);
  verify->add_option("--filter", filter, "glob over identity ids");
  verify->add_option("--mode", mode_name, "comparison mode override")
      ->check(CLI::IsMember({"exact", "constant"}));
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", jobs, "parallel workers")
      ->check(CLI::Range(1, 64));
  verify->add_option("--out", out_path, "write the report to a file");

  CLI::App* build_op = app.add_subcommand(
      "build-op", "construct a bundle operator and print its canonical text");
  add_model_opts(build_op);
  build_op->add_option("--name", op_name, "operator or matrix key")->required();
  build_op->add_option("--out", out_path, "write to a file");

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "oscillator ladder demo on the gauge-conjugated Hamiltonian");
  spectrum->add_option("--n", n, "particle count (2..3)")
      ->check(CLI::Range(2, 3));
  spectrum->add_option("--depth", depth, "largest ladder power")
      ->check(CLI::Range(0, 3));
  spectrum->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  spectrum->add_option("--out", out_path, "write to a file");

  CLI::App* dump_rep = app.add_subcommand(
      "dump-rep", "export the Jacobi rotation and sector exchange matrices");
  dump_rep->add_option("--n", n, "particle count (2..4)")
      ->check(CLI::Range(2, 4));
  dump_rep->add_option("--m", rep_m, "fermion number of the sector");
  dump_rep->add_option("--out", out_path, "write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) {
      if (n >= 4 && !enable_n4) {
        std::cerr << "n=4 is gated behind --enable-n4\n";
        return 2;
      }
      ModelSpec spec = ModelSpec::make(parse_model(model_name), n);
      std::optional<CompareMode> mode;
      if (mode_name == "exact") mode = CompareMode::exact;
      if (mode_name == "constant") mode = CompareMode::constant;
      SuiteReport report = run_suite(spec, filter, mode, jobs);
      std::string payload =
          format == "json" ? to_json(report, true) : to_text(report);
      int rc = write_out(out_path, payload);
      if (rc != 0) return rc;
      return report.all_passed() ? 0 : 1;
    }
    if (app.got_subcommand(build_op)) {
      if (n >= 4 && !enable_n4) {
        std::cerr << "n=4 is gated behind --enable-n4\n";
        return 2;
      }
      ModelSpec spec = ModelSpec::make(parse_model(model_name), n);
      Mat<Operator> m;
      if (bundle_matrix(spec, op_name, m))
        return write_out(out_path, matrix_json(spec, op_name, m));
      nlohmann::ordered_json j;
      j["model"] = to_string(spec.model());
      j["n"] = spec.n();
      j["name"] = op_name;
      j["text"] = to_string(bundle_operator(spec, op_name));
      return write_out(out_path, j.dump(2));
    }
    if (app.got_subcommand(spectrum)) {
      SpectrumReport report = spectrum_demo(n, depth);
      std::string payload = format == "json" ? to_json(report) : to_text(report);
      int rc = write_out(out_path, payload);
      if (rc != 0) return rc;
      return report.all_passed() ? 0 : 1;
    }
    if (app.got_subcommand(dump_rep)) {
      ModelSpec spec = ModelSpec::make(Model::free_calogero, n);
      JacobiMatrix r = jacobi_matrix(n, spec.radicals());
      if (rep_m < 0 || rep_m >= n) {
        std::cerr << "sector fermion number must be in [0, n)\n";
        return 2;
      }
      nlohmann::ordered_json out;
      out["n"] = n;
      out["m"] = rep_m;
      auto rot = nlohmann::ordered_json::array();
      for (int i = 1; i <= n; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 1; k <= n; ++k) row.push_back(to_string(r.entry(i, k)));
        rot.push_back(std::move(row));
      }
      out["jacobi"] = std::move(rot);
      auto reps = nlohmann::ordered_json::object();
      for (int i = 1; i <= n; ++i)
        for (int j2 = i + 1; j2 <= n; ++j2) {
          Mat<Scalar> t = rep_matrix(r, rep_m, i, j2);
          auto mat = nlohmann::ordered_json::array();
          for (int a = 0; a < t.rows(); ++a) {
            auto row = nlohmann::ordered_json::array();
            for (int b = 0; b < t.cols(); ++b)
              row.push_back(to_string(t.at(a, b)));
            mat.push_back(std::move(row));
          }
          reps["T_" + std::to_string(i) + "_" + std::to_string(j2)] =
              std::move(mat);
        }
      out["exchange"] = std::move(reps);
      return write_out(out_path, out.dump(2));
    }
  } catch (const BuildError& e) {
    std::cerr << "construction check failed: " << e.what() << "\n";
    if (!e.residual.empty()) std::cerr << "residual: " << e.residual << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
