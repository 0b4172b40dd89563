#pragma once

// Tabular output. Numbers are written with 12 significant digits ("%.12g"),
// '.' decimal separator, ',' field separator and '\n' line endings, so equal
// inputs give byte-identical files.

#include <iosfwd>
#include <string>
#include <vector>

#include "sgsta/analysis.hpp"
#include "sgsta/dynamics.hpp"
#include "sgsta/field_design.hpp"

namespace sgsta {

enum class TableFormat { csv, json };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

TableFormat parse_table_format(const std::string& name);

std::string format_number(double value);

void write_table(const Table& table, TableFormat format, std::ostream& out);
// path "-" writes to std::cout. Throws IoError when the file cannot be written.
void write_table(const Table& table, TableFormat format, const std::string& path);

// Reads a CSV table written by write_table. Throws IoError / InputError.
Table read_csv_table(const std::string& path);

// Fixed schemas.
Table field_profile_table(const std::vector<FieldSample>& samples);  // t_s,Bx_G,By_G,Bz_G,Bnorm_G
Table trajectory_table(const Trajectory& traj);  // t_s,Jx,Jy,Jz,fidelity
Table sweep_table(const Sweep& sweep);  // abscissa, columns..., diverged
Table profile_report_table(const ProfileReport& report);
Table comparison_table(const DeviceComparison& comparison);

// Field samples from a field-profile table (Bnorm_G column optional).
std::vector<FieldSample> field_samples_from_table(const Table& table);

}  // namespace sgsta
