#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqvrf {

using Bytes = std::vector<uint8_t>;
using Hash32 = std::array<uint8_t, 32>;
using Addr20 = std::array<uint8_t, 20>;

Bytes to_bytes(std::string_view s);

/// Lowercase hex with 0x prefix, the rendering used by the wire protocol.
std::string to_hex(std::span<const uint8_t> data);
Bytes from_hex(std::string_view hex);  // accepts with or without 0x

void append_u32le(Bytes& out, uint32_t v);
void append_u64le(Bytes& out, uint64_t v);
void append_u32be(Bytes& out, uint32_t v);
uint32_t read_u32le(const uint8_t* p);
uint64_t read_u64le(const uint8_t* p);

/// Length-prefixed field (u32 little-endian length, then the raw bytes).
void append_field(Bytes& out, std::span<const uint8_t> field);
Bytes read_field(const Bytes& in, size_t& pos);

void write_file(const std::string& path, std::span<const uint8_t> data);
Bytes read_file(const std::string& path);
bool file_exists(const std::string& path);

}  // namespace pqvrf
