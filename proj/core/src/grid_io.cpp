#include "kerrqc/grid_io.hpp"

#include <zlib.h>

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <algorithm>
#include <cstdio>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kerrqc {
namespace {

static_assert(std::endian::native == std::endian::little, "grid files are written in native little-endian order");

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string hex32(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

template <typename T>
void put(std::string& out, const T& v) {
  out.append(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(const std::string& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw std::runtime_error("read_grid: truncated file");
  T v;
  std::memcpy(&v, in.data() + pos, sizeof(T));
  pos += sizeof(T);
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(f), {});
}

}  // namespace

std::uint32_t crc32_bytes(std::string_view bytes) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  const auto* p = reinterpret_cast<const Bytef*>(bytes.data());
  std::size_t left = bytes.size();
  while (left > 0) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(left, 1u << 30));
    crc = ::crc32(crc, p, chunk);
    p += chunk;
    left -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

std::uint32_t crc32_file(const std::filesystem::path& path) { return crc32_bytes(read_file(path)); }

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  return std::filesystem::path(path.string() + ".meta.txt");
}

std::uint32_t write_grid(const std::filesystem::path& path, const ScalarGrid3D& grid) {
  if (grid.values.size() != grid.size()) throw std::invalid_argument("write_grid: values do not match dims");
  std::string bytes;
  bytes.reserve(16 + 3 * 8 * 3 + grid.values.size() * 8);
  bytes.append(kGridMagic, sizeof kGridMagic);
  for (auto d : grid.dims) put(bytes, static_cast<std::uint64_t>(d));
  for (double o : grid.origin) put(bytes, o);
  for (double s : grid.spacing) put(bytes, s);
  bytes.append(reinterpret_cast<const char*>(grid.values.data()), grid.values.size() * sizeof(double));
  write_file(path, bytes);
  const std::uint32_t crc = crc32_bytes(bytes);

  std::ostringstream meta;
  meta << "format = kerrqc-grid-v1\n";
  meta << "dims = " << grid.dims[0] << ' ' << grid.dims[1] << ' ' << grid.dims[2] << '\n';
  meta << "origin = " << fmt(grid.origin[0]) << ' ' << fmt(grid.origin[1]) << ' ' << fmt(grid.origin[2]) << '\n';
  meta << "spacing = " << fmt(grid.spacing[0]) << ' ' << fmt(grid.spacing[1]) << ' ' << fmt(grid.spacing[2])
       << '\n';
  meta << "layout = z-fastest, index (i * ny + j) * nz + k\n";
  for (const auto& [k, v] : grid.metadata) meta << k << " = " << v << '\n';
  meta << "checksum = crc32:" << hex32(crc) << '\n';
  write_file(sidecar_path(path), meta.str());
  return crc;
}

ScalarGrid3D read_grid(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kGridMagic, 16) != 0) {
    throw std::runtime_error("read_grid: bad magic in " + path.string());
  }
  std::size_t pos = 16;
  ScalarGrid3D g;
  for (auto& d : g.dims) d = static_cast<std::int64_t>(get<std::uint64_t>(bytes, pos));
  for (auto& o : g.origin) o = get<double>(bytes, pos);
  for (auto& s : g.spacing) s = get<double>(bytes, pos);
  const std::size_t n = g.size();
  if (bytes.size() - pos != n * sizeof(double)) throw std::runtime_error("read_grid: value block size mismatch");
  g.values.resize(n);
  std::memcpy(g.values.data(), bytes.data() + pos, n * sizeof(double));

  const auto side = sidecar_path(path);
  if (std::filesystem::exists(side)) {
    std::istringstream meta(read_file(side));
    std::string line;
    const std::set<std::string> structural = {"format", "dims", "origin", "spacing", "layout"};
    while (std::getline(meta, line)) {
      const auto eq = line.find(" = ");
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(0, eq);
      const std::string value = line.substr(eq + 3);
      if (key == "checksum") {
        if (value != "crc32:" + hex32(crc32_bytes(bytes))) {
          throw std::runtime_error("read_grid: checksum mismatch for " + path.string());
        }
      } else if (!structural.count(key)) {
        g.metadata[key] = value;
      }
    }
  }
  return g;
}

std::uint32_t write_obj(const std::filesystem::path& path, const IsoMesh& mesh) {
  std::string out;
  out.reserve(mesh.vertices.size() * 64 + mesh.triangles.size() * 32);
  for (const auto& v : mesh.vertices) {
    out += "v " + fmt(v(0)) + ' ' + fmt(v(1)) + ' ' + fmt(v(2)) + '\n';
  }
  for (const auto& t : mesh.triangles) {
    out += "f " + std::to_string(t[0] + 1) + ' ' + std::to_string(t[1] + 1) + ' ' + std::to_string(t[2] + 1) + '\n';
  }
  write_file(path, out);
  const std::uint32_t crc = crc32_bytes(out);
  std::ostringstream meta;
  meta << "format = obj\n";
  meta << "iso_level = " << fmt(mesh.iso_level) << '\n';
  meta << "vertices = " << mesh.vertices.size() << '\n';
  meta << "triangles = " << mesh.triangles.size() << '\n';
  meta << "checksum = crc32:" << hex32(crc) << '\n';
  write_file(sidecar_path(path), meta.str());
  return crc;
}

}  // namespace kerrqc
