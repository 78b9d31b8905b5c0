#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superlax/jacobi.hpp"
#include "superlax/model.hpp"

namespace superlax {

enum class RunStatus { pass, fail, skipped };
enum class CompareMode { exact, constant };

std::string to_string(RunStatus s);

/// One verifiable operator identity. Applicability is a function of the
/// model and the particle count; constant-capable entries may compare up to
/// an additive coordinate-free constant.
struct IdentityInfo {
  std::string id;
  std::string summary;
  bool oscillator_only = false;
  bool free_only = false;
  int min_n = 2;
  /// Largest particle count the identity runs at for the given model.
  int max_n_free_calogero = 3;
  int max_n_other = 3;
  bool constant_capable = false;

  bool applies_to(Model m) const;
  int max_n(Model m) const;
};

struct ReportEntry {
  std::string identity;
  std::string model;
  int n = 0;
  RunStatus status = RunStatus::skipped;
  std::string constant;  // discovered additive constant (constant mode)
  std::string residual;  // serialized nonzero difference on failure
  std::string note;      // skip reason or failing sub-check label
  long long millis = 0;
};

struct SuiteReport {
  std::vector<ReportEntry> entries;
  bool all_passed() const;
  int count(RunStatus s) const;
};

const std::vector<IdentityInfo>& identity_catalog();

/// '*' matches any run of characters; everything else is literal.
bool glob_match(const std::string& pattern, const std::string& text);

ReportEntry run_identity(const ModelSpec& spec, const std::string& id,
                         std::optional<CompareMode> mode = std::nullopt);
SuiteReport run_suite(const ModelSpec& spec, const std::string& filter = "*",
                      std::optional<CompareMode> mode = std::nullopt,
                      int jobs = 1);

struct SpectrumLine {
  int q = 0;
  bool annihilated = false;
  bool pass = false;
  std::string eigenvalue;
  std::string state;
};

struct SpectrumReport {
  int n = 0;
  int depth = 0;
  std::string ground_energy;
  std::vector<SpectrumLine> lines;
  bool all_passed() const;
};

/// Gauge-conjugates the scalar oscillator Hamiltonian and walks the ladder
/// Ts((L+)^q) applied to the constant function.
SpectrumReport spectrum_demo(int n, int depth);

std::string to_json(const SuiteReport& report, bool with_timing = true);
std::string to_text(const SuiteReport& report);
std::string to_json(const SpectrumReport& report);
std::string to_text(const SpectrumReport& report);

}  // namespace superlax
