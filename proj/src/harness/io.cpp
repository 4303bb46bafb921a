#include "qla/harness/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <memory>
#include <span>

#include "qla/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

namespace qla::harness {

namespace {

constexpr std::uint32_t kMagic = 0x53414C51;  // "QLAS"
constexpr std::uint16_t kVersion = 1;

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f != nullptr) std::fclose(f);
  }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

File open_file(const std::string& path, const char* mode) {
  File f(std::fopen(path.c_str(), mode));
  if (!f) {
    throw ConfigError("cannot open " + path);
  }
  return f;
}

template <typename T>
void write_pod(std::FILE* f, const T& v) {
  if (std::fwrite(&v, sizeof v, 1, f) != 1) {
    throw Error("short write");
  }
}

template <typename T>
T read_pod(std::FILE* f, const std::string& path) {
  T v;
  if (std::fread(&v, sizeof v, 1, f) != 1) {
    throw ConfigError("truncated file: " + path);
  }
  return v;
}

void write_plane(std::FILE* f, std::span<const double> plane) {
  if (std::fwrite(plane.data(), sizeof(double), plane.size(), f) !=
      plane.size()) {
    throw Error("short write");
  }
}

void read_plane(std::FILE* f, std::span<double> plane,
                const std::string& path) {
  if (std::fread(plane.data(), sizeof(double), plane.size(), f) !=
      plane.size()) {
    throw ConfigError("truncated file: " + path);
  }
}

}  // namespace

void write_snapshot(const std::string& path, const AmplitudeField& field) {
  auto f = open_file(path, "wb");
  write_pod(f.get(), kMagic);
  write_pod(f.get(), kVersion);
  write_pod(f.get(), static_cast<std::uint16_t>(field.ncomp()));
  write_pod(f.get(), static_cast<std::uint32_t>(field.dims().nx));
  write_pod(f.get(), static_cast<std::uint32_t>(field.dims().ny));
  for (int c = 0; c < field.ncomp(); ++c) {
    write_plane(f.get(), field.plane(c));
  }
}

AmplitudeField read_snapshot(const std::string& path, double epsilon) {
  auto f = open_file(path, "rb");
  if (read_pod<std::uint32_t>(f.get(), path) != kMagic) {
    throw ConfigError("not a snapshot file: " + path);
  }
  if (read_pod<std::uint16_t>(f.get(), path) != kVersion) {
    throw ConfigError("unsupported snapshot version: " + path);
  }
  const auto ncomp = read_pod<std::uint16_t>(f.get(), path);
  const auto nx = read_pod<std::uint32_t>(f.get(), path);
  const auto ny = read_pod<std::uint32_t>(f.get(), path);
  AmplitudeField field(Extents{nx, ny}, ncomp, epsilon);
  for (int c = 0; c < field.ncomp(); ++c) {
    read_plane(f.get(), field.plane(c), path);
  }
  return field;
}

void write_index_grid(const std::string& path, Extents dims,
                      const std::vector<std::vector<double>>& planes) {
  auto f = open_file(path, "wb");
  write_pod(f.get(), static_cast<std::uint32_t>(dims.nx));
  write_pod(f.get(), static_cast<std::uint32_t>(dims.ny));
  write_pod(f.get(), static_cast<std::uint32_t>(planes.size()));
  for (const auto& p : planes) {
    if (p.size() != dims.sites()) {
      throw ConfigError("index grid plane size mismatch");
    }
    write_plane(f.get(), p);
  }
}

std::vector<std::vector<double>> read_index_grid(const std::string& path,
                                                 Extents* dims) {
  auto f = open_file(path, "rb");
  const auto nx = read_pod<std::uint32_t>(f.get(), path);
  const auto ny = read_pod<std::uint32_t>(f.get(), path);
  const auto ncomp = read_pod<std::uint32_t>(f.get(), path);
  if (nx == 0 || ny == 0 || ncomp == 0 || ncomp > 16) {
    throw ConfigError("bad index grid header: " + path);
  }
  *dims = Extents{nx, ny};
  std::vector<std::vector<double>> planes(ncomp);
  for (auto& p : planes) {
    p.resize(dims->sites());
    read_plane(f.get(), p, path);
  }
  return planes;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& columns)
    : ncols_(columns.size()) {
  f_ = std::fopen(path.c_str(), "w");
  if (f_ == nullptr) {
    throw ConfigError("cannot open " + path);
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    std::fprintf(f_, "%s%s", i ? "," : "", columns[i].c_str());
  }
  std::fprintf(f_, "\n");
}

CsvWriter::~CsvWriter() {
  if (f_ != nullptr) std::fclose(f_);
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != ncols_) {
    throw Error("csv row width mismatch");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::fprintf(f_, "%s%.17g", i ? "," : "", values[i]);
  }
  std::fprintf(f_, "\n");
  std::fflush(f_);
}

void write_text_file(const std::string& path, const std::string& content) {
  auto f = open_file(path, "w");
  if (std::fwrite(content.data(), 1, content.size(), f.get()) !=
      content.size()) {
    throw Error("short write");
  }
}

}  // namespace qla::harness
