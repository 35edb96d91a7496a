#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace hsda {

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> bytes);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::span<const std::uint8_t> bytes);

/// Per-file seed: first 8 bytes (big-endian) of
/// SHA-256(global_seed as 8 little-endian bytes || relative_path as UTF-8).
/// Independent of traversal order and worker count.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view relative_path);

}  // namespace hsda
