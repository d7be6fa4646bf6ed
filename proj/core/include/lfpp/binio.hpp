#pragma once

#include <string>

#include "lfpp/field.hpp"
#include "lfpp/mollify.hpp"

namespace lfpp {

/// Flat binary field dump. Header (32 bytes): 8-byte magic "LFPPFLD\0",
/// u32 n, u32 reserved (0), f64 side_length, u64 seed; then n*n doubles,
/// row-major. The mollified variant uses magic "LFPPMOL\0" and appends f64
/// eps to the header (40 bytes). Little-endian, stable across versions.
void dump_field(const std::string& path, const FieldSample& field);
FieldSample load_field(const std::string& path);

void dump_mollified(const std::string& path, const MollifiedField& m);
MollifiedField load_mollified(const std::string& path);

}  // namespace lfpp
