#pragma once

#include <array>
#include <vector>

#include "cvqt/fock.hpp"
#include "cvqt/gaussian.hpp"

namespace cvqt {

enum class SpinFamily { BW, GKMR, LARSSON };

// Dichotomic operator triple acting on one mode, truncated to N + 1 levels.
struct SpinTriple {
  OperatorMatrix sx;
  OperatorMatrix sy;
  OperatorMatrix sz;
  SpinFamily family;
  double ell = 0.0;  // bin width, Larsson only
};

struct MeasurementSetting {
  double theta;
  double azimuth = 0.0;
};

struct BellOptimum {
  std::array<MeasurementSetting, 4> settings;  // (n, n', m, m')
  double value;
};

struct EllSweepResult {
  double best_ell;
  double value;
  BellOptimum optimum;
};

struct SymbolClassification {
  bool improper;
  double depart_fraction;  // share of grid points off the +-1 spectrum by > 0.5
};

struct ProperImproperReport {
  SymbolClassification x;
  SymbolClassification y;
  SymbolClassification z;
  int improper_count;
};

SpinTriple bw_triple(int N);
SpinTriple gkmr_triple(int N);
SpinTriple larsson_triple(int N, double ell);

// Matrix of sgn(position) in the number basis; also the GKMR x-component.
OperatorMatrix sgn_position_matrix(int N);

OperatorMatrix spin_along(const SpinTriple& t, const MeasurementSetting& m);

double correlator_E(const SqueezingParams& p, const SpinTriple& t,
                    const MeasurementSetting& mA, const MeasurementSetting& mB);

double bell_mean(const SqueezingParams& p, const SpinTriple& t,
                 const std::array<MeasurementSetting, 4>& settings);

BellOptimum maximize_bell(const SqueezingParams& p, const SpinTriple& t);

EllSweepResult larsson_ell_sweep(const SqueezingParams& p,
                                 const std::vector<double>& ell_grid, int N = 60);

SymbolClassification classify_weyl_symbol(const OperatorMatrix& op);
ProperImproperReport proper_improper_report(const SpinTriple& t);

}  // namespace cvqt
