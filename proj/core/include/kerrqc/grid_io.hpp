#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "kerrqc/marching_cubes.hpp"

namespace kerrqc {

/// Magic bytes at the start of a grid file (16 bytes, NUL padded).
inline constexpr char kGridMagic[16] = {'K', 'E', 'R', 'R', 'Q', 'C', '-', 'G',
                                        'R', 'I', 'D', '-', 'V', '1', '\0', '\0'};

/// CRC-32 (zlib polynomial) of a byte range / of a file's contents.
std::uint32_t crc32_bytes(std::string_view bytes);
std::uint32_t crc32_file(const std::filesystem::path& path);

/// Path of the plain-text sidecar written next to `path` (`<path>.meta.txt`).
std::filesystem::path sidecar_path(const std::filesystem::path& path);

/// Binary layout, little-endian: magic[16], uint64 dims[3], double origin[3],
/// double spacing[3], double values[nx*ny*nz] (z fastest). The sidecar holds
/// one `key = value` line per metadata entry plus dims/origin/spacing and a
/// final `checksum = crc32:xxxxxxxx` line over the binary file.
/// Returns the checksum.
std::uint32_t write_grid(const std::filesystem::path& path, const ScalarGrid3D& grid);

/// Reads the binary file (and the sidecar metadata when present). Throws
/// std::runtime_error on a bad magic, truncated file or checksum mismatch.
ScalarGrid3D read_grid(const std::filesystem::path& path);

/// ASCII OBJ with `v` and `f` records only (1-based indices), plus a sidecar
/// with level, counts and checksum. Returns the checksum.
std::uint32_t write_obj(const std::filesystem::path& path, const IsoMesh& mesh);

}  // namespace kerrqc
