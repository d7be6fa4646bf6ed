#pragma once

#include <string>

namespace lfpp {

/// Lowercase hex SHA-256 of a byte string / file. Throws on I/O failure.
std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

}  // namespace lfpp
