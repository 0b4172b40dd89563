#pragma once

// Figure-level experiments comparing the STA-engineered device with the
// standard helicoidal device. Sweep points are independent and may be
// evaluated with OpenMP; rows always come back in abscissa order and are
// identical for serial and parallel execution.

#include <string>
#include <string_view>
#include <vector>

#include "sgsta/dynamics.hpp"
#include "sgsta/field_design.hpp"
#include "sgsta/parallel.hpp"

namespace sgsta {

struct SweepRow {
  double abscissa = 0.0;
  std::vector<double> values;  // one per Sweep::columns entry
  bool diverged = false;
};

struct Sweep {
  std::string abscissa_name;
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;

  // Throws InputError for an unknown column.
  std::size_t column_index(std::string_view name) const;
  std::vector<double> column(std::string_view name) const;
  std::vector<double> abscissas() const;
};

std::vector<double> linear_grid(double first, double last, int n);
std::vector<double> log_grid(double first, double last, int n);

// Default grids: T/T_L in [0.01, 10] (500 log-spaced points) and
// T in [0.4, 4] us (200 points).
std::vector<double> default_ratio_grid();
std::vector<double> default_time_grid();

// Target of a standard run: m = +1 along the final field direction (+x).
SpinState adiabatic_target();
// Target of an STA run: m = -1 along +x.
SpinState sta_target();

// Final fidelity of |m_z=+1> after a helicoidal run of duration
// ratio * T_L, for each ratio. Column: "fidelity".
Sweep sweep_standard(const std::vector<double>& ratios, double omega_L, int n_steps = kDefaultSteps,
                     Execution exec = Execution::parallel);

struct DeviceComparison {
  ProfileReport report;  // STA design at params
  double B_st0 = 0.0;  // 2 pi / (gamma T)
  Trajectory sta;
  Trajectory standard_av;
  Trajectory standard_max;
  Trajectory standard_st0;
};

// Throws DivergenceError when the STA design is invalid.
DeviceComparison compare_devices(const DesignParams& params, int n_steps = kDefaultSteps,
                                 Execution exec = Execution::parallel);

// Transfer error at a stopping time T (1 + offset), offsets in [-0.1, 0.1].
// Columns: "eps_trajectory" (nominal field, stopped early or late) and
// "eps_velocity" (whole field traversed in time T (1 + offset)).
Sweep resilience_sweep(const DesignParams& params, const std::vector<double>& rel_offsets,
                       int n_steps = kDefaultSteps, Execution exec = Execution::parallel);

// Columns: "B_max_G", "B_av_G", "B_st0_G". Rows whose design is invalid are
// flagged diverged with NaN STA columns.
Sweep resource_curve(const std::vector<double>& T_grid, const DesignParams& params_template,
                     Execution exec = Execution::parallel);

// Columns: "speedup_max", "speedup_av", where speedup = T_L(B) / T_STA with
// T_L(B) = 2 pi / (gamma B) the reliable standard transfer time.
Sweep speedup_curve(const std::vector<double>& T_grid, const DesignParams& params_template,
                    Execution exec = Execution::parallel);

}  // namespace sgsta
