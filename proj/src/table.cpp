#include "sgsta/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgsta/errors.hpp"

namespace sgsta {

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw InputError("unknown output format '" + name + "' (expected csv or json)");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

void check_shape(const Table& table) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw InputError("table rows must match the header width");
  }
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

void write_table(const Table& table, TableFormat format, std::ostream& out) {
  check_shape(table);
  if (format == TableFormat::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
      out << '\n';
    }
    return;
  }
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << '{';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const double v = table.rows[r][i];
      out << (i ? ", " : "") << '"' << json_escape(table.columns[i]) << "\": "
          << (std::isfinite(v) ? format_number(v) : "null");
    }
    out << '}';
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(const Table& table, TableFormat format, const std::string& path) {
  if (path == "-") {
    write_table(table, format, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_table(table, format, file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

Table read_csv_table(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for reading");
  Table table;
  std::string line;
  if (!std::getline(file, line)) throw InputError("'" + path + "' is empty");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.columns.push_back(cell);
  }
  std::size_t line_no = 1;
  while (std::getline(file, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw InputError("'" + path + "' line " + std::to_string(line_no) + ": bad number '" + cell + "'");
      }
      row.push_back(v);
    }
    if (row.size() != table.columns.size()) {
      throw InputError("'" + path + "' line " + std::to_string(line_no) + ": wrong number of fields");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table field_profile_table(const std::vector<FieldSample>& samples) {
  Table t{{"t_s", "Bx_G", "By_G", "Bz_G", "Bnorm_G"}, {}};
  t.rows.reserve(samples.size());
  for (const auto& s : samples) t.rows.push_back({s.t, s.Bx, s.By, s.Bz, s.norm()});
  return t;
}

Table trajectory_table(const Trajectory& traj) {
  Table t{{"t_s", "Jx", "Jy", "Jz", "fidelity"}, {}};
  t.rows.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    t.rows.push_back({traj.times[i], traj.jx[i], traj.jy[i], traj.jz[i], traj.fidelity[i]});
  }
  return t;
}

Table sweep_table(const Sweep& sweep) {
  Table t;
  t.columns.push_back(sweep.abscissa_name);
  t.columns.insert(t.columns.end(), sweep.columns.begin(), sweep.columns.end());
  t.columns.push_back("diverged");
  for (const auto& r : sweep.rows) {
    std::vector<double> row{r.abscissa};
    row.insert(row.end(), r.values.begin(), r.values.end());
    row.push_back(r.diverged ? 1.0 : 0.0);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table profile_report_table(const ProfileReport& r) {
  return {{"phi_min_rad", "phi_max_rad", "valid", "B_max_G", "B_av_G", "t_Bmax_s"},
          {{r.phi_min, r.phi_max, r.valid ? 1.0 : 0.0, r.B_max, r.B_av, r.max_field_norm_location}}};
}

Table comparison_table(const DeviceComparison& c) {
  Table t{{"t_s", "F_sta", "F_av", "F_max", "F_st0", "Jx_sta", "Jz_sta", "Jx_av", "Jz_av", "Jx_max", "Jz_max",
           "Jx_st0", "Jz_st0"},
          {}};
  for (std::size_t i = 0; i < c.sta.size(); ++i) {
    t.rows.push_back({c.sta.times[i], c.sta.fidelity[i], c.standard_av.fidelity[i], c.standard_max.fidelity[i],
                      c.standard_st0.fidelity[i], c.sta.jx[i], c.sta.jz[i], c.standard_av.jx[i],
                      c.standard_av.jz[i], c.standard_max.jx[i], c.standard_max.jz[i], c.standard_st0.jx[i],
                      c.standard_st0.jz[i]});
  }
  return t;
}

std::vector<FieldSample> field_samples_from_table(const Table& table) {
  const std::vector<std::string> expected{"t_s", "Bx_G", "By_G", "Bz_G"};
  if (table.columns.size() < expected.size() ||
      !std::equal(expected.begin(), expected.end(), table.columns.begin())) {
    throw InputError("field profile header must start with t_s,Bx_G,By_G,Bz_G");
  }
  std::vector<FieldSample> out;
  out.reserve(table.rows.size());
  for (const auto& r : table.rows) out.push_back({r[0], r[1], r[2], r[3]});
  return out;
}

}  // namespace sgsta
