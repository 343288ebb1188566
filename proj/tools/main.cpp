// Command-line front end.  Each subcommand runs one sweep or optimization
// from the library and writes CSV (data) or JSON (optimizer output) with a
// full parameter echo, so every file is reproducible from its own header.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 numerical failure.

#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cvqt/acceptance.hpp"
#include "cvqt/dynamics.hpp"
#include "cvqt/fock.hpp"
#include "cvqt/gaussian.hpp"
#include "cvqt/infotheory.hpp"
#include "cvqt/pseudospin.hpp"
#include "cvqt/wavepacket.hpp"
#include "cvqt/weyl.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::ordered_json;

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// One named parameter bound to storage; drives flag registration, config
// override, and the header echo, so the three can never disagree.
struct ParamTable {
  struct Item {
    std::string name;
    char kind;  // 'd' real, 'i' integer, 's' string
    void* ptr;
    bool echoed;  // false for parameters that influence no number (out path)
  };
  std::vector<Item> items;

  void add_real(CLI::App* cmd, const std::string& name, double& v,
                const std::string& desc) {
    items.push_back({name, 'd', &v, true});
    cmd->add_option("--" + name, v, desc)->capture_default_str();
  }
  void add_int(CLI::App* cmd, const std::string& name, int& v,
               const std::string& desc) {
    items.push_back({name, 'i', &v, true});
    cmd->add_option("--" + name, v, desc)->capture_default_str();
  }
  void add_str(CLI::App* cmd, const std::string& name, std::string& v,
               const std::string& desc, bool echoed = true) {
    items.push_back({name, 's', &v, echoed});
    cmd->add_option("--" + name, v, desc)->capture_default_str();
  }

  // Returns an error message naming the offending key, or empty on success.
  std::string apply_config(const ordered_json& j) {
    for (const auto& [key, val] : j.items()) {
      const Item* found = nullptr;
      for (const auto& it : items)
        if (it.name == key) {
          found = &it;
          break;
        }
      if (!found) return "unknown key \"" + key + "\"";
      switch (found->kind) {
        case 'd':
          if (!val.is_number()) return "key \"" + key + "\" must be a number";
          *static_cast<double*>(found->ptr) = val.get<double>();
          break;
        case 'i':
          if (!val.is_number_integer())
            return "key \"" + key + "\" must be an integer";
          *static_cast<int*>(found->ptr) = val.get<int>();
          break;
        case 's':
          if (!val.is_string()) return "key \"" + key + "\" must be a string";
          *static_cast<std::string*>(found->ptr) = val.get<std::string>();
          break;
      }
    }
    return {};
  }

  std::string echo() const {
    std::string s;
    for (const auto& it : items) {
      if (!it.echoed) continue;
      if (!s.empty()) s += ", ";
      s += it.name + "=";
      switch (it.kind) {
        case 'd': s += fmt_real(*static_cast<const double*>(it.ptr)); break;
        case 'i': s += std::to_string(*static_cast<const int*>(it.ptr)); break;
        case 's': s += *static_cast<const std::string*>(it.ptr); break;
      }
    }
    return s;
  }
};

// Sweep points are computed in parallel; rows land in a pre-sized buffer
// indexed by sweep position, so the written order never depends on timing.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers > 8) workers = 8;
  if (workers <= 1 || n < 4) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& t : pool) t.join();
}

struct OutputSink {
  std::FILE* f = stdout;
  bool owned = false;

  ~OutputSink() {
    if (owned) std::fclose(f);
  }
  bool open(const std::string& path) {
    if (path.empty()) return true;
    f = std::fopen(path.c_str(), "wb");
    owned = f != nullptr;
    if (!owned)
      std::fprintf(stderr, "config error: cannot open \"%s\" for key \"out\"\n",
                   path.c_str());
    return owned;
  }
};

void write_csv(std::FILE* f, const std::string& command, const ParamTable& table,
               const std::string& columns, const std::vector<std::string>& rows,
               const std::vector<std::string>& footer = {}) {
  std::fprintf(f, "# cvqt %s\n", kVersion);
  std::fprintf(f, "# command: %s\n", command.c_str());
  std::fprintf(f, "# params: %s\n", table.echo().c_str());
  std::fprintf(f, "# columns: %s\n", columns.c_str());
  for (const auto& r : rows) std::fprintf(f, "%s\n", r.c_str());
  for (const auto& c : footer) std::fprintf(f, "# %s\n", c.c_str());
}

std::string row(std::initializer_list<double> vals) {
  std::string s;
  for (double v : vals) {
    if (!s.empty()) s += ",";
    s += fmt_real(v);
  }
  return s;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = lo * std::pow(hi / lo, n > 1 ? double(i) / (n - 1) : 0.0);
  return v;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = n > 1 ? lo + (hi - lo) * i / (n - 1) : lo;
  return v;
}

// ---------------------------------------------------------------- commands

struct DiscordCurveCmd {
  double r_max = 5.0;
  int points = 100;
  std::string out;

  int run(const ParamTable& t) {
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    std::vector<std::string> rows(points);
    // the asymptote line is only defined for r > 0, so sweep (0, r_max]
    parallel_for(points, [&](int i) {
      const double r = r_max * (i + 1) / points;
      rows[i] = row({r, cvqt::discord_tmss(r), cvqt::discord_asymptote(r)});
    });
    OutputSink sink;
    if (!sink.open(out)) return 2;
    write_csv(sink.f, "discord-curve", t, "r [1], discord [bit], asymptote [bit]",
              rows);
    return 0;
  }
};

struct SqueezeEvolveCmd {
  double beta = -2.0;
  double eta_ini = -2000.0;
  double eta_end = -0.01;
  double k = 1.0;
  double tol = 1e-10;
  int samples = 200;
  std::string out;

  int run(const ParamTable& t) {
    if (samples < 2) throw std::invalid_argument("samples must be >= 2");
    cvqt::BackgroundModel bg(beta, eta_ini, eta_end);
    cvqt::BogoliubovTrajectory traj = cvqt::evolve_bogoliubov(bg, k, tol);
    std::vector<std::string> rows(samples);
    // log-spaced in |eta|: the squeezing builds up over many decades
    for (int i = 0; i < samples; ++i) {
      const double eta =
          -std::abs(eta_ini) *
          std::pow(std::abs(eta_end) / std::abs(eta_ini), double(i) / (samples - 1));
      const cvqt::BogoliubovPair b = traj.at(eta);
      const cvqt::SqueezingParams s = cvqt::squeezing_from_bogoliubov(b);
      const double drift = std::norm(b.u) - std::norm(b.v) - 1.0;
      rows[i] = row({eta, b.u.real(), b.u.imag(), b.v.real(), b.v.imag(), s.r,
                     s.phi, drift});
    }
    OutputSink sink;
    if (!sink.open(out)) return 2;
    write_csv(sink.f, "squeeze-evolve", t,
              "eta [conformal time], re_u [1], im_u [1], re_v [1], im_v [1], "
              "r [1], phi [rad], wronskian_drift [1]",
              rows);
    return 0;
  }
};

struct PowerSpectrumCmd {
  double beta = -2.0;
  double eta_ini = -20000.0;
  double eta_end = -0.002;
  double z_norm = 1.0;
  double k_min = 0.2;
  double k_max = 6.3;
  int points = 12;
  std::string out;

  int run(const ParamTable& t) {
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    cvqt::BackgroundModel bg(beta, eta_ini, eta_end, z_norm);
    const cvqt::SpectrumFit fit =
        cvqt::power_spectrum(bg, log_spaced(k_min, k_max, points));
    std::vector<std::string> rows;
    rows.reserve(fit.points.size());
    for (const auto& pt : fit.points)
      rows.push_back(row({pt.k, pt.power, pt.super_hubble ? 1.0 : 0.0}));
    OutputSink sink;
    if (!sink.open(out)) return 2;
    write_csv(sink.f, "power-spectrum", t,
              "k [1/|eta|], power [1], super_hubble [0/1]", rows,
              {"spectral_index = " + fmt_real(fit.spectral_index)});
    return 0;
  }
};

struct WignerCatCmd {
  double q0 = 6.0;
  double p0 = 0.0;
  double mass = 1.0;
  double omega = 1.0;
  double q_half = 10.0;
  double p_half = 4.0;
  int grid = 101;
  std::string out;

  int run(const ParamTable& t) {
    if (grid < 2) throw std::invalid_argument("grid must be >= 2");
    const cvqt::CatParams c(q0, p0, mass, omega);
    const auto qs = lin_spaced(-q_half, q_half, grid);
    const auto ps = lin_spaced(-p_half, p_half, grid);
    std::vector<std::string> rows(grid * grid);
    parallel_for(grid, [&](int i) {
      for (int j = 0; j < grid; ++j)
        rows[i * grid + j] =
            row({qs[i], ps[j], cvqt::cat_wigner(c, qs[i], ps[j])});
    });
    const cvqt::WignerMinimum mn = cvqt::cat_negativity(c);
    OutputSink sink;
    if (!sink.open(out)) return 2;
    write_csv(sink.f, "wigner-cat", t, "q [1], p [1], w [1]", rows,
              {"min_w = " + fmt_real(mn.value) + " at q = " + fmt_real(mn.q) +
               ", p = " + fmt_real(mn.p)});
    return 0;
  }
};

struct WignerTmssCmd {
  double r = 1.0;
  double phi = 0.0;
  double k = 1.0;
  std::string plane = "qq";  // qq: (q_k, q_-k); qp: (q_k, pi_k)
  double half = 4.0;
  int grid = 101;
  std::string out;

  int run(const ParamTable& t) {
    if (grid < 2) throw std::invalid_argument("grid must be >= 2");
    if (plane != "qq" && plane != "qp")
      throw std::invalid_argument("plane must be qq or qp");
    const cvqt::SqueezingParams p(r, phi);
    const auto xs = lin_spaced(-half, half, grid);
    std::vector<std::string> rows(grid * grid);
    parallel_for(grid, [&](int i) {
      for (int j = 0; j < grid; ++j) {
        const double w =
            plane == "qq"
                ? cvqt::wigner_tmss_explicit(p, k, xs[i], 0.0, xs[j], 0.0)
                : cvqt::wigner_tmss_explicit(p, k, xs[i], xs[j], 0.0, 0.0);
        rows[i * grid + j] = row({xs[i], xs[j], w});
      }
    });
    OutputSink sink;
    if (!sink.open(out)) return 2;
    const char* cols = plane == "qq" ? "q_k [1], q_mk [1], w [1]"
                                     : "q_k [1], pi_k [1], w [1]";
    write_csv(sink.f, "wigner-tmss", t, cols, rows);
    return 0;
  }
};

struct WignerWkbCmd {
  int level = 10;
  double d_min = 0.3;
  int points = 240;
  std::string out;

  int run(const ParamTable& t) {
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    // the semiclassical form lives on an annulus: it degenerates at the
    // center and at the energy circle of radius sqrt(2n + 1)
    const double d_max = std::sqrt(2.0 * level + 1.0) - 0.15;
    if (!(d_min > 0.0 && d_min < d_max))
      throw std::invalid_argument("d_min must lie inside the annulus");
    const auto ds = lin_spaced(d_min, d_max, points);
    std::vector<std::string> rows(points);
    parallel_for(points, [&](int i) {
      rows[i] = row({ds[i], cvqt::berry_wigner_ho(level, ds[i], 0.0)});
    });
    OutputSink sink;
    if (!sink.open(out)) return 2;
    write_csv(sink.f, "wigner-wkb", t, "d [phase-space radius], w [1]", rows);
    return 0;
  }
};

struct ChshEprCmd {
  double b = 10.0;
  double eps = 0.5;
  double q0 = 0.5;
  double t_max = 5.0;
  int points = 50;
  std::string out;

  int run(const ParamTable& t) {
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    const cvqt::EprParams e(b, eps, q0);
    const auto ts = lin_spaced(0.0, t_max, points);
    std::vector<std::string> rows(points * points);
    std::vector<double> maxima(points, -1e300);
    parallel_for(points, [&](int i) {
      for (int j = 0; j < points; ++j) {
        const double bell =
            cvqt::epr_bell(e, cvqt::TimeSettings{0.0, ts[i], 0.0, ts[j]});
        rows[i * points + j] = row({ts[i], ts[j], bell});
        if (bell > maxima[i]) maxima[i] = bell;
      }
    });
    double max_b = -1e300;
    for (double m : maxima) max_b = std::max(max_b, m);
    OutputSink sink;
    if (!sink.open(out)) return 2;
    write_csv(sink.f, "chsh-epr", t, "t2 [time], t2p [time], bell_B [1]", rows,
              {"max_B = " + fmt_real(max_b)});
    return 0;
  }
};

struct ChshBellCmd {
  double a = 1.0;
  double q0 = 0.0;
  double n_bell_sq = 1.0;
  double x_min = 0.0;
  double x_max = 2.0;
  int points = 400;
  std::string out;

  int run(const ParamTable& t) {
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    const cvqt::BellStateParams bp(a, q0, n_bell_sq);
    const auto xs = lin_spaced(x_min, x_max, points);
    std::vector<std::string> rows(points);
    parallel_for(points, [&](int i) {
      rows[i] = row({xs[i], cvqt::bell_chsh_reduced(bp, xs[i]),
                     2.0 - cvqt::bell_chsh(bp, xs[i])});
    });
    const double root = cvqt::bell_violation_threshold(bp);
    OutputSink sink;
    if (!sink.open(out)) return 2;
    write_csv(sink.f, "chsh-bell", t,
              "x [time], two_minus_B_over_N2 [1], threeF_minus_F3 [1]", rows,
              {"violation_threshold = " + fmt_real(root) +
               " (B > 2 for x beyond this root)"});
    return 0;
  }
};

struct ChshJohansenCmd {
  double q0 = 1.0;
  double p0 = -1.0;
  double s = 0.1;
  double big_k = 0.3;
  double x_min = 0.8;
  double x_max = 3.0;
  int points = 200;
  std::string out;

  int run(const ParamTable& t) {
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    const cvqt::JohansenParams j(q0, p0, s, big_k);
    const auto rows_in = cvqt::johansen_combinations(j, lin_spaced(x_min, x_max, points));
    std::vector<std::string> rows;
    rows.reserve(rows_in.size());
    double min_naive = 1e300, min_correct = 1e300;
    for (const auto& rw : rows_in) {
      rows.push_back(
          row({rw.x, rw.naive_combo, rw.correct_combo, rw.two_minus_b_over_k}));
      min_naive = std::min(min_naive, rw.naive_combo);
      min_correct = std::min(min_correct, rw.correct_combo);
    }
    OutputSink sink;
    if (!sink.open(out)) return 2;
    write_csv(sink.f, "chsh-johansen", t,
              "x [time], naive_combo [1], correct_combo [1], "
              "two_minus_b_over_k [1]",
              rows,
              {"min_naive_combo = " + fmt_real(min_naive),
               "min_correct_combo = " + fmt_real(min_correct)});
    return 0;
  }
};

struct PseudospinBellCmd {
  std::string family = "bw";
  double r = 2.0;
  double phi = 0.0;
  int truncation = 0;  // 0: per-family default (bw wants odd, the others even)
  double ell = 2.5;
  std::string ell_sweep;  // comma list; larsson only
  std::string out;

  int run(const ParamTable& t) {
    const cvqt::SqueezingParams p(r, phi);
    const int n = truncation > 0 ? truncation : (family == "bw" ? 61 : 60);

    ordered_json doc;
    doc["tool"] = std::string("cvqt ") + kVersion;
    doc["command"] = "pseudospin-bell";
    doc["params"] = t.echo();
    doc["truncation_used"] = n;

    auto pack_settings = [](const std::array<cvqt::MeasurementSetting, 4>& ms) {
      ordered_json st = ordered_json::array();
      for (const auto& m : ms)
        st.push_back({{"theta", m.theta}, {"azimuth", m.azimuth}});
      return st;
    };

    if (family == "larsson" && !ell_sweep.empty()) {
      std::vector<double> ells;
      std::stringstream ss(ell_sweep);
      for (std::string tok; std::getline(ss, tok, ',');)
        ells.push_back(std::stod(tok));
      const cvqt::EllSweepResult sweep = cvqt::larsson_ell_sweep(p, ells, n);
      doc["best_ell"] = sweep.best_ell;
      doc["value"] = sweep.value;
      doc["settings"] = pack_settings(sweep.optimum.settings);
    } else {
      cvqt::SpinTriple triple;
      if (family == "bw") {
        triple = cvqt::bw_triple(n);
      } else if (family == "gkmr") {
        triple = cvqt::gkmr_triple(n);
      } else if (family == "larsson") {
        triple = cvqt::larsson_triple(n, ell);
      } else {
        throw std::invalid_argument("family must be bw, gkmr or larsson");
      }
      const cvqt::BellOptimum opt = cvqt::maximize_bell(p, triple);
      doc["value"] = opt.value;
      doc["settings"] = pack_settings(opt.settings);
    }

    OutputSink sink;
    if (!sink.open(out)) return 2;
    std::fprintf(sink.f, "%s\n", doc.dump(2).c_str());
    return 0;
  }
};

struct WeylCheckCmd {
  int count = 50;
  int max_degree = 4;
  std::string r_list = "0,1,2";
  int seed = 20240915;
  std::string out;

  int run(const ParamTable& t) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    if (max_degree < 1 || max_degree > 8)
      throw std::invalid_argument("max_degree must be in [1, 8]");
    std::vector<double> rs;
    {
      std::stringstream ss(r_list);
      for (std::string tok; std::getline(ss, tok, ',');)
        rs.push_back(std::stod(tok));
      if (rs.empty()) throw std::invalid_argument("r_list must not be empty");
    }

    // draw all expressions up front with the seeded generator, then evaluate
    // in parallel; the draw order is part of the output contract
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    auto unit = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    std::vector<cvqt::OrderedOperatorExpr> exprs(count);
    std::vector<double> rvals(count);
    for (int i = 0; i < count; ++i) {
      cvqt::OrderedOperatorExpr e;
      const int nterms = 1 + int(rng() % 3);
      for (int tm = 0; tm < nterms; ++tm) {
        cvqt::OrderedOperatorExpr::Term term;
        term.coefficient = 2.0 * unit() - 1.0;
        const int deg = 1 + int(rng() % max_degree);
        for (int f = 0; f < deg; ++f)
          term.factors.push_back(static_cast<cvqt::PairVariable>(rng() % 4));
        e.terms.push_back(std::move(term));
      }
      exprs[i] = std::move(e);
      rvals[i] = rs[i % rs.size()];
    }

    std::vector<std::string> rows(count);
    std::vector<double> diffs(count);
    parallel_for(count, [&](int i) {
      const cvqt::SqueezingParams p(rvals[i], 0.0);
      const std::complex<double> qa = cvqt::quantum_average(exprs[i], p);
      const std::complex<double> sa = cvqt::stochastic_average(
          cvqt::weyl_transform(exprs[i]), cvqt::covariance_from_squeezing(p));
      diffs[i] = std::abs(qa - sa);
      rows[i] = row({double(i), rvals[i], double(exprs[i].terms.size()),
                     qa.real(), qa.imag(), sa.real(), sa.imag(), diffs[i]});
    });
    double worst = 0.0;
    for (double d : diffs) worst = std::max(worst, d);
    OutputSink sink;
    if (!sink.open(out)) return 2;
    write_csv(sink.f, "weyl-check", t,
              "index, r [1], terms, quantum_re [1], quantum_im [1], "
              "stochastic_re [1], stochastic_im [1], abs_diff [1]",
              rows, {"max_abs_diff = " + fmt_real(worst)});
    return 0;
  }
};

int run_verify(bool fast) {
  const auto results =
      cvqt::run_acceptance(fast ? cvqt::AcceptanceMode::fast : cvqt::AcceptanceMode::full);
  int failed = 0;
  double total = 0.0;
  for (const auto& r : results) {
    total += r.seconds;
    if (!r.pass) ++failed;
    std::printf("[%s] %2d %-22s measured %.6g against %.6g (%.2fs)\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.measured,
                r.bound, r.seconds);
    std::printf("         %s\n", r.detail.c_str());
  }
  std::printf("%zu criteria, %d failed, %.1fs (%s mode)\n", results.size(), failed,
              total, fast ? "fast" : "full");
  return failed == 0 ? 0 : 1;
}

const char* module_context(const std::string& command) {
  if (command == "discord-curve") return "infotheory";
  if (command == "squeeze-evolve" || command == "power-spectrum") return "dynamics";
  if (command == "wigner-tmss") return "gaussian";
  if (command == "pseudospin-bell") return "pseudospin";
  if (command == "weyl-check") return "weyl";
  if (command == "verify") return "acceptance";
  return "wavepacket";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Continuous-variable phase-space toolkit.\n"
      "Parameter precedence: a JSON config file (--config) overrides "
      "command-line flags, and flags override built-in defaults.  Config "
      "keys are the flag names without the leading dashes.  Data commands "
      "write CSV with '#' header lines echoing every parameter; fixed "
      "parameters and seed give byte-identical output."};
  app.require_subcommand(1);

  DiscordCurveCmd discord;
  SqueezeEvolveCmd squeeze;
  PowerSpectrumCmd spectrum;
  WignerCatCmd cat;
  WignerTmssCmd tmss;
  WignerWkbCmd wkb;
  ChshEprCmd epr;
  ChshBellCmd bell;
  ChshJohansenCmd johansen;
  PseudospinBellCmd pseudospin;
  WeylCheckCmd weyl;

  struct Registered {
    CLI::App* cmd;
    ParamTable table;
    std::string config_path;
    std::function<int(const ParamTable&)> run;
  };
  std::vector<Registered> reg;
  reg.reserve(12);

  auto common = [&](CLI::App* cmd, auto& obj) -> Registered& {
    reg.push_back({cmd, {}, {}, [&obj](const ParamTable& t) { return obj.run(t); }});
    Registered& r = reg.back();
    cmd->add_option("--config", r.config_path,
                    "JSON config file; overrides the flags below");
    return r;
  };

  {
    auto* c = app.add_subcommand("discord-curve", "Discord of the two-mode squeezed state versus r");
    auto& r = common(c, discord);
    r.table.add_real(c, "r-max", discord.r_max, "largest squeezing parameter");
    r.table.add_int(c, "points", discord.points, "sweep points");
    r.table.add_str(c, "out", discord.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("squeeze-evolve", "Bogoliubov pair along one mode's evolution");
    auto& r = common(c, squeeze);
    r.table.add_real(c, "beta", squeeze.beta, "expansion exponent");
    r.table.add_real(c, "eta-ini", squeeze.eta_ini, "initial conformal time (< 0)");
    r.table.add_real(c, "eta-end", squeeze.eta_end, "final conformal time (< 0)");
    r.table.add_real(c, "k", squeeze.k, "comoving wavenumber");
    r.table.add_real(c, "tol", squeeze.tol, "integrator tolerance");
    r.table.add_int(c, "samples", squeeze.samples, "output samples, log-spaced in |eta|");
    r.table.add_str(c, "out", squeeze.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("power-spectrum", "Curvature power spectrum over a k range");
    auto& r = common(c, spectrum);
    r.table.add_real(c, "beta", spectrum.beta, "expansion exponent");
    r.table.add_real(c, "eta-ini", spectrum.eta_ini, "initial conformal time (< 0)");
    r.table.add_real(c, "eta-end", spectrum.eta_end, "final conformal time (< 0)");
    r.table.add_real(c, "z-norm", spectrum.z_norm, "normalization of z");
    r.table.add_real(c, "k-min", spectrum.k_min, "smallest wavenumber");
    r.table.add_real(c, "k-max", spectrum.k_max, "largest wavenumber");
    r.table.add_int(c, "points", spectrum.points, "log-spaced k points");
    r.table.add_str(c, "out", spectrum.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("wigner-cat", "Wigner function of a two-packet superposition");
    auto& r = common(c, cat);
    r.table.add_real(c, "q0", cat.q0, "packet displacement");
    r.table.add_real(c, "p0", cat.p0, "packet momentum offset");
    r.table.add_real(c, "mass", cat.mass, "oscillator mass");
    r.table.add_real(c, "omega", cat.omega, "oscillator frequency");
    r.table.add_real(c, "q-half", cat.q_half, "grid half-width in q");
    r.table.add_real(c, "p-half", cat.p_half, "grid half-width in p");
    r.table.add_int(c, "grid", cat.grid, "grid points per axis");
    r.table.add_str(c, "out", cat.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("wigner-tmss", "Two-mode squeezed Wigner function on a plane section");
    auto& r = common(c, tmss);
    r.table.add_real(c, "r", tmss.r, "squeezing parameter");
    r.table.add_real(c, "phi", tmss.phi, "squeezing angle");
    r.table.add_real(c, "k", tmss.k, "comoving wavenumber");
    r.table.add_str(c, "plane", tmss.plane, "section: qq (q_k, q_-k) or qp (q_k, pi_k)");
    r.table.add_real(c, "half", tmss.half, "grid half-width");
    r.table.add_int(c, "grid", tmss.grid, "grid points per axis");
    r.table.add_str(c, "out", tmss.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("wigner-wkb", "Semiclassical Wigner radial profile of an energy level");
    auto& r = common(c, wkb);
    r.table.add_int(c, "level", wkb.level, "oscillator level (1..30)");
    r.table.add_real(c, "d-min", wkb.d_min, "smallest phase-space radius");
    r.table.add_int(c, "points", wkb.points, "radial points");
    r.table.add_str(c, "out", wkb.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("chsh-epr", "CHSH combination for the regularized EPR pair");
    auto& r = common(c, epr);
    r.table.add_real(c, "b", epr.b, "center-of-mass width");
    r.table.add_real(c, "eps", epr.eps, "relative-coordinate width");
    r.table.add_real(c, "q0", epr.q0, "pair separation");
    r.table.add_real(c, "t-max", epr.t_max, "largest measurement time");
    r.table.add_int(c, "points", epr.points, "grid points per time axis");
    r.table.add_str(c, "out", epr.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("chsh-bell", "CHSH combination for the quartic wavepacket");
    auto& r = common(c, bell);
    r.table.add_real(c, "a", bell.a, "packet scale");
    r.table.add_real(c, "q0", bell.q0, "packet offset");
    r.table.add_real(c, "n-bell-sq", bell.n_bell_sq, "normalization constant");
    r.table.add_real(c, "x-min", bell.x_min, "smallest time combination");
    r.table.add_real(c, "x-max", bell.x_max, "largest time combination");
    r.table.add_int(c, "points", bell.points, "sweep points");
    r.table.add_str(c, "out", bell.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("chsh-johansen", "Sign-weighted combinations for the two-packet state");
    auto& r = common(c, johansen);
    r.table.add_real(c, "q0", johansen.q0, "packet displacement");
    r.table.add_real(c, "p0", johansen.p0, "packet momentum offset");
    r.table.add_real(c, "s", johansen.s, "packet width");
    r.table.add_real(c, "K", johansen.big_k, "prefactor constant");
    r.table.add_real(c, "x-min", johansen.x_min, "smallest time combination");
    r.table.add_real(c, "x-max", johansen.x_max, "largest time combination");
    r.table.add_int(c, "points", johansen.points, "sweep points");
    r.table.add_str(c, "out", johansen.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("pseudospin-bell", "Optimized CHSH value for a pseudo-spin family");
    auto& r = common(c, pseudospin);
    r.table.add_str(c, "family", pseudospin.family, "bw, gkmr or larsson");
    r.table.add_real(c, "r", pseudospin.r, "squeezing parameter");
    r.table.add_real(c, "phi", pseudospin.phi, "squeezing angle");
    r.table.add_int(c, "truncation", pseudospin.truncation,
                    "number-basis truncation; 0 picks a per-family default");
    r.table.add_real(c, "ell", pseudospin.ell, "bin width (larsson)");
    r.table.add_str(c, "ell-sweep", pseudospin.ell_sweep,
                    "comma list of bin widths to sweep (larsson)");
    r.table.add_str(c, "out", pseudospin.out, "output path (default stdout)", false);
  }
  {
    auto* c = app.add_subcommand("weyl-check", "Quantum versus stochastic averages on random expressions");
    auto& r = common(c, weyl);
    r.table.add_int(c, "count", weyl.count, "number of expressions");
    r.table.add_int(c, "max-degree", weyl.max_degree, "largest factor count per term");
    r.table.add_str(c, "r-list", weyl.r_list, "comma list of squeezing parameters");
    r.table.add_int(c, "seed", weyl.seed, "generator seed");
    r.table.add_str(c, "out", weyl.out, "output path (default stdout)", false);
  }

  bool verify_fast = false;
  {
    auto* c = app.add_subcommand("verify", "Run the acceptance suite");
    c->add_flag("--fast", verify_fast, "reduced sizes and sample counts");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (app.get_subcommand("verify")->parsed()) return run_verify(verify_fast);

  for (auto& r : reg) {
    if (!r.cmd->parsed()) continue;
    if (!r.config_path.empty()) {
      std::ifstream f(r.config_path);
      if (!f) {
        std::fprintf(stderr, "config error: cannot open \"%s\"\n",
                     r.config_path.c_str());
        return 2;
      }
      const ordered_json j = ordered_json::parse(f, nullptr, false);
      if (j.is_discarded() || !j.is_object()) {
        std::fprintf(stderr, "config error: \"%s\" is not a JSON object\n",
                     r.config_path.c_str());
        return 2;
      }
      const std::string err = r.table.apply_config(j);
      if (!err.empty()) {
        std::fprintf(stderr, "config error: %s\n", err.c_str());
        return 2;
      }
    }
    const std::string name = r.cmd->get_name();
    try {
      return r.run(r.table);
    } catch (const std::invalid_argument& e) {
      std::fprintf(stderr, "config error in %s: %s\n", name.c_str(), e.what());
      return 2;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "numerical failure in %s (%s): %s\n", name.c_str(),
                   module_context(name), e.what());
      return 3;
    }
  }
  return 0;
}
