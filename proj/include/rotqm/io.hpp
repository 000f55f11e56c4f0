#pragma once

// File formats.
//
// Wavefunction snapshot (binary, little-endian):
//   magic   "RQWS0001"                      8 bytes
//   u32     dim, components, periodic, 0    16 bytes
//   per axis (dim times): u64 n, f64 origin, f64 spacing
//   f64     time
//   payload: component-major blocks, each row-major over the grid (last axis
//            fastest), complex amplitudes as f64 (re, im) pairs
//
// CSV: header row, then rows of doubles printed at 17 significant digits so a
// round trip through the importer is bit-exact.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotqm/wavestate.hpp"

namespace rotqm {

namespace detail {

inline void require_little_endian() {
  const std::uint32_t probe = 1;
  unsigned char b;
  std::memcpy(&b, &probe, 1);
  if (b != 1) throw std::runtime_error("snapshot io: big-endian hosts are not supported");
}

template <typename T>
void write_pod(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
  T v;
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("snapshot io: truncated file");
  return v;
}

}  // namespace detail

inline void write_snapshot(const WaveState& s, const std::string& path) {
  detail::require_little_endian();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_snapshot: cannot open " + path);
  os.write("RQWS0001", 8);
  const GridSpec& g = s.grid();
  detail::write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(g.dim));
  detail::write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(s.components()));
  detail::write_pod<std::uint32_t>(os, g.periodic ? 1u : 0u);
  detail::write_pod<std::uint32_t>(os, 0u);
  for (int a = 0; a < g.dim; ++a) {
    detail::write_pod<std::uint64_t>(os, static_cast<std::uint64_t>(g.axes[a].n));
    detail::write_pod<double>(os, g.axes[a].origin);
    detail::write_pod<double>(os, g.axes[a].spacing);
  }
  detail::write_pod<double>(os, s.time());
  const auto& amps = s.amplitudes();
  for (const auto& z : amps) {
    detail::write_pod<double>(os, z.real());
    detail::write_pod<double>(os, z.imag());
  }
  if (!os) throw std::runtime_error("write_snapshot: write failed for " + path);
}

inline WaveState read_snapshot(const std::string& path) {
  detail::require_little_endian();
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_snapshot: cannot open " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, "RQWS0001", 8) != 0)
    throw std::runtime_error("read_snapshot: bad magic in " + path);
  const auto dim = detail::read_pod<std::uint32_t>(is);
  const auto components = detail::read_pod<std::uint32_t>(is);
  const auto periodic = detail::read_pod<std::uint32_t>(is);
  detail::read_pod<std::uint32_t>(is);
  GridSpec g;
  g.dim = static_cast<int>(dim);
  g.periodic = periodic != 0;
  if (g.dim < 1 || g.dim > 3) throw std::runtime_error("read_snapshot: bad dimension");
  for (int a = 0; a < g.dim; ++a) {
    g.axes[a].n = static_cast<std::size_t>(detail::read_pod<std::uint64_t>(is));
    g.axes[a].origin = detail::read_pod<double>(is);
    g.axes[a].spacing = detail::read_pod<double>(is);
  }
  const double time = detail::read_pod<double>(is);
  WaveState s(g, static_cast<int>(components), time);
  for (auto& z : s.amplitudes()) {
    const double re = detail::read_pod<double>(is);
    const double im = detail::read_pod<double>(is);
    z = {re, im};
  }
  return s;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Write a header plus rows of doubles at 17 significant digits.
inline void write_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows,
                      const std::string& path) {
  if (header.empty()) throw std::invalid_argument("write_csv: empty header");
  if (rows.empty()) throw std::invalid_argument("write_csv: empty series");
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_csv: cannot open " + path);
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  char buf[40];
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw std::invalid_argument("write_csv: row width does not match header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
      os << (i ? "," : "") << buf;
    }
    os << "\n";
  }
  if (!os) throw std::runtime_error("write_csv: write failed for " + path);
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

inline CsvTable read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_csv: cannot open " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: empty file " + path);
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.header.push_back(cell);
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != t.header.size()) throw std::runtime_error("read_csv: ragged row in " + path);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace rotqm
