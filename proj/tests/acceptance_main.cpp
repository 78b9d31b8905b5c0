// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <vector>

#include "superlax/catalog.hpp"
#include "superlax/serialize.hpp"

using namespace superlax;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string label;
  bool pass = true;
  std::string detail;
};

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

const std::vector<Model> kModels = {Model::free_calogero, Model::calogero,
                                    Model::ts, Model::hs};

struct SuiteStore {
  std::map<std::pair<Model, int>, SuiteReport> reports;

  const ReportEntry* find(Model m, int n, const std::string& id) const {
    auto it = reports.find({m, n});
    if (it == reports.end()) return nullptr;
    for (const auto& e : it->second.entries)
      if (e.identity == id) return &e;
    return nullptr;
  }

  long long millis(const std::string& id_glob) const {
    long long total = 0;
    for (const auto& [key, report] : reports)
      for (const auto& e : report.entries)
        if (glob_match(id_glob, e.identity)) total += e.millis;
    return total;
  }
};

void require_pass(Criterion& c, const SuiteStore& store, Model m, int n,
                  const std::string& id) {
  const ReportEntry* e = store.find(m, n, id);
  if (!e || e->status != RunStatus::pass) {
    c.pass = false;
    c.detail += " " + id + "@" + to_string(m) + "/n=" + std::to_string(n) +
                (e ? (e->status == RunStatus::fail ? ":fail" : ":skipped")
                   : ":missing");
  }
}

Operator random_operator(std::mt19937_64& rng, const Chart& chart) {
  std::uniform_int_distribution<long> coef(-9, 9);
  int n = chart.particles;
  RadicalBasis basis(n);
  std::vector<std::uint64_t> rads(basis.closure().begin(),
                                  basis.closure().end());
  Operator out(chart);
  int terms = 1 + static_cast<int>(rng() % 4);
  std::uint32_t full = (1u << n) - 1;
  for (int t = 0; t < terms; ++t) {
    Exponents deriv(n, 0);
    deriv[rng() % n] = rng() % 3;
    FermionWord w{static_cast<std::uint32_t>(rng()) & full,
                  static_cast<std::uint32_t>(rng()) & full};
    Poly num(n + 2);
    for (int q = 0; q < 2; ++q) {
      Exponents e(n + 2, 0);
      for (int v = 0; v < n + 2; ++v) e[v] = rng() % 3;
      Scalar c;
      c.set_component(rads[rng() % rads.size()],
                      {rational(coef(rng), 1 + (rng() % 4)),
                       rational(coef(rng), 1 + (rng() % 4))});
      num.add_term(e, c);
    }
    std::map<Atom, std::uint32_t> den;
    if (rng() % 3 == 0) den[Atom::diff(1, 2)] = 1 + (rng() % 2);
    if (chart.kind != ChartKind::cartesian && rng() % 3 == 0)
      den[Atom::var(1 + (rng() % n))] = 1;
    RatCoeff c = RatCoeff::fraction(std::move(num), std::move(den), n);
    out += Operator::term(chart, c, deriv, w);
  }
  return out;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;
  auto total_start = Clock::now();

  // one full default run per model and particle count; every criterion below
  // reads from these reports
  SuiteStore store;
  for (Model m : kModels)
    for (int n = 2; n <= 3; ++n)
      store.reports[{m, n}] = run_suite(ModelSpec::make(m, n), "*",
                                        std::nullopt, 2);
  long long default_suite_ms = ms_since(total_start);

  {
    Criterion c{1, "SUSY algebra: nilpotency, closure, commutation (all models, n=2,3)"};
    for (Model m : kModels)
      for (int n = 2; n <= 3; ++n) {
        require_pass(c, store, m, n, "susy.nilpotent");
        require_pass(c, store, m, n, "susy.closure");
        require_pass(c, store, m, n, "susy.commute");
      }
    long long t = store.millis("susy.*");
    c.detail += " [" + std::to_string(t) + " ms]";
    if (t >= 30000) {
      c.pass = false;
      c.detail += " exceeded 30 s";
    }
    criteria.push_back(c);
  }

  {
    Criterion c{2, "free super Lax: commutation, pair relation, integrals"};
    for (Model m : {Model::free_calogero, Model::ts, Model::hs})
      for (int n = 2; n <= 3; ++n) {
        require_pass(c, store, m, n, "lax.commute");
        require_pass(c, store, m, n, "lax.pair");
        require_pass(c, store, m, n, "lax.integrals");
      }
    auto gate_start = Clock::now();
    ReportEntry big =
        run_identity(ModelSpec::make(Model::free_calogero, 4), "lax.commute");
    if (big.status != RunStatus::pass) {
      c.pass = false;
      c.detail += " lax.commute@free-calogero/n=4:" + to_string(big.status);
    }
    long long t = store.millis("lax.*");
    c.detail += " [n<=3: " + std::to_string(t) + " ms, n=4 gate: " +
                std::to_string(ms_since(gate_start)) + " ms]";
    if (t >= 300000) {
      c.pass = false;
      c.detail += " exceeded 5 min";
    }
    criteria.push_back(c);
  }

  {
    Criterion c{3, "oscillator algebra: operator and matrix ladders"};
    for (int n = 2; n <= 3; ++n) {
      require_pass(c, store, Model::calogero, n, "cal.ladder");
      require_pass(c, store, Model::calogero, n, "cal.pair");
      require_pass(c, store, Model::calogero, n, "cal.ladder-ts");
    }
    criteria.push_back(c);
  }

  {
    Criterion c{4, "total sums: Ts(L^2), Ts L1, Ts L2 with its shift"};
    for (int n = 2; n <= 3; ++n) {
      require_pass(c, store, Model::free_calogero, n, "lax.ts2");
      require_pass(c, store, Model::ts, n, "lax.ts2");
      require_pass(c, store, Model::hs, n, "lax.ts2");
      require_pass(c, store, Model::calogero, n, "cal.ts12");
    }
    const ReportEntry* shifted = store.find(Model::calogero, 3, "cal.ts12");
    if (!shifted || shifted->constant != "(12*l*w + 6*w)/(1)") {
      c.pass = false;
      c.detail += " wrong spectral shift";
    }
    criteria.push_back(c);
  }

  {
    Criterion c{5, "Dunkl-Lax equivalence at matrix and operator level"};
    for (Model m : {Model::free_calogero, Model::ts, Model::hs})
      for (int n = 2; n <= 3; ++n) {
        require_pass(c, store, m, n, "dunkl.matrix");
        require_pass(c, store, m, n, "dunkl.assembled");
        require_pass(c, store, m, n, "dunkl.commute");
      }
    for (int n = 2; n <= 3; ++n) {
      require_pass(c, store, Model::calogero, n, "dunkl.calogero");
      require_pass(c, store, Model::calogero, n, "dunkl.ladder");
    }
    criteria.push_back(c);
  }

  {
    Criterion c{6, "hook representations and Clebsch-Gordan conditions"};
    for (Model m : kModels)
      for (int n = 2; n <= 3; ++n) {
        require_pass(c, store, m, n, "rep.young");
        require_pass(c, store, m, n, "cg.condition");
        require_pass(c, store, m, n, "cg.intertwine");
      }
    criteria.push_back(c);
  }

  {
    Criterion c{7, "appendix identity suites, fermionic parts up to n=4"};
    for (Model m : kModels)
      for (int n = 2; n <= 3; ++n) {
        require_pass(c, store, m, n, "app1.vkd");
        require_pass(c, store, m, n, "app3.chain");
        require_pass(c, store, m, n, "app4.aa");
        require_pass(c, store, m, n, "app4.aux");
        require_pass(c, store, m, n, "app4.sums");
        require_pass(c, store, m, n, "app4.dd2");
        require_pass(c, store, m, n, "app4.ddfin");
      }
    ModelSpec big = ModelSpec::make(Model::free_calogero, 4);
    for (const char* id : {"app1.vkd", "app3.chain", "app4.aa", "app4.aux",
                           "app4.dd2", "jac.fermions", "cg.condition",
                           "cg.intertwine"}) {
      ReportEntry e = run_identity(big, id);
      if (e.status != RunStatus::pass) {
        c.pass = false;
        c.detail += std::string(" ") + id + "@n=4:" + to_string(e.status);
      }
    }
    criteria.push_back(c);
  }

  {
    Criterion c{8, "spectrum ladder with spacing 2w"};
    for (int n = 2; n <= 3; ++n) {
      SpectrumReport report = spectrum_demo(n, 2);
      if (!report.all_passed()) {
        c.pass = false;
        c.detail += " ladder failed at n=" + std::to_string(n);
      }
      if (report.lines.size() != 3 || report.lines[0].annihilated ||
          report.lines[1].annihilated || report.lines[2].annihilated) {
        c.pass = false;
        c.detail += " unexpected annihilation at n=" + std::to_string(n);
      }
    }
    criteria.push_back(c);
  }

  {
    Criterion c{9, "involution of the first two nontrivial integrals"};
    require_pass(c, store, Model::free_calogero, 3, "bonus.involution");
    criteria.push_back(c);
  }

  {
    Criterion c{10, "infrastructure: determinism, round-trip, runtime"};
    SuiteReport once = run_suite(ModelSpec::make(Model::ts, 2), "*");
    SuiteReport twice = run_suite(ModelSpec::make(Model::ts, 2), "*",
                                  std::nullopt, 2);
    if (to_json(once, false) != to_json(twice, false)) {
      c.pass = false;
      c.detail += " reports are not deterministic";
    }
    std::mt19937_64 rng(2026);
    ChartKind kinds[] = {ChartKind::cartesian, ChartKind::exp_hyperbolic,
                         ChartKind::exp_trigonometric};
    for (int trial = 0; trial < 100; ++trial) {
      Chart chart{kinds[trial % 3], 2 + static_cast<int>(rng() % 3)};
      Operator a = random_operator(rng, chart);
      if (!(parse_operator(to_string(a), chart) == a)) {
        c.pass = false;
        c.detail += " round-trip failure at trial " + std::to_string(trial);
        break;
      }
    }
    c.detail +=
        " [default suites: " + std::to_string(default_suite_ms) + " ms]";
    if (default_suite_ms >= 15 * 60 * 1000) {
      c.pass = false;
      c.detail += " exceeded 15 min";
    }
    for (const auto& [key, report] : store.reports)
      if (!report.all_passed()) {
        c.pass = false;
        c.detail += " failures in " + to_string(key.first) + "/n=" +
                    std::to_string(key.second);
      }
    criteria.push_back(c);
  }

  bool all = true;
  for (const auto& c : criteria) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": "
              << c.label;
    if (!c.detail.empty()) std::cout << " --" << c.detail;
    std::cout << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << ms_since(total_start) << " ms total)\n";
  return all ? 0 : 1;
}
