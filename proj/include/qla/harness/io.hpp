#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "qla/amplitude_field.hpp"

namespace qla::harness {

// Field snapshot format: 16-byte header (magic "QLAS" u32-LE, version u16,
// ncomp u16, nx u32, ny u32), then one plane per component in component
// order, each row-major little-endian float64.
void write_snapshot(const std::string& path, const AmplitudeField& field);
AmplitudeField read_snapshot(const std::string& path, double epsilon);

// Refractive-index grid file: header (nx u32, ny u32, ncomp u32), then
// ncomp planes row-major little-endian float64.
void write_index_grid(const std::string& path, Extents dims,
                      const std::vector<std::vector<double>>& planes);
std::vector<std::vector<double>> read_index_grid(const std::string& path,
                                                 Extents* dims);

// CSV writer with full round-trip decimal formatting (%.17g).
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns);
  ~CsvWriter();
  void row(const std::vector<double>& values);

 private:
  std::FILE* f_ = nullptr;
  std::size_t ncols_ = 0;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace qla::harness
