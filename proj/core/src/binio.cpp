#include "lfpp/binio.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace lfpp {

namespace {

constexpr char kFieldMagic[8] = {'L', 'F', 'P', 'P', 'F', 'L', 'D', '\0'};
constexpr char kMollMagic[8] = {'L', 'F', 'P', 'P', 'M', 'O', 'L', '\0'};

void write_header(std::ofstream& out, const char* magic, std::uint32_t n, double side,
                  std::uint64_t seed) {
    out.write(magic, 8);
    std::uint32_t reserved = 0;
    out.write(reinterpret_cast<const char*>(&n), 4);
    out.write(reinterpret_cast<const char*>(&reserved), 4);
    out.write(reinterpret_cast<const char*>(&side), 8);
    out.write(reinterpret_cast<const char*>(&seed), 8);
}

void read_header(std::ifstream& in, const char* magic, std::uint32_t& n, double& side,
                 std::uint64_t& seed) {
    char m[8];
    in.read(m, 8);
    if (!in || std::memcmp(m, magic, 8) != 0) {
        throw std::runtime_error("field dump: bad magic");
    }
    std::uint32_t reserved = 0;
    in.read(reinterpret_cast<char*>(&n), 4);
    in.read(reinterpret_cast<char*>(&reserved), 4);
    in.read(reinterpret_cast<char*>(&side), 8);
    in.read(reinterpret_cast<char*>(&seed), 8);
    if (!in) throw std::runtime_error("field dump: truncated header");
}

}  // namespace

void dump_field(const std::string& path, const FieldSample& field) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("dump_field: cannot open " + path);
    write_header(out, kFieldMagic, static_cast<std::uint32_t>(field.spec.n),
                 field.spec.side_length, field.seed);
    out.write(reinterpret_cast<const char*>(field.values.data()),
              static_cast<std::streamsize>(field.values.size() * sizeof(double)));
    if (!out) throw std::runtime_error("dump_field: write failed for " + path);
}

FieldSample load_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_field: cannot open " + path);
    std::uint32_t n = 0;
    FieldSample f;
    read_header(in, kFieldMagic, n, f.spec.side_length, f.seed);
    f.spec.n = static_cast<int>(n);
    f.spec.window = Rect{f.spec.side_length / 4.0, f.spec.side_length / 4.0,
                         3.0 * f.spec.side_length / 4.0, 3.0 * f.spec.side_length / 4.0};
    f.values.resize(static_cast<std::size_t>(n) * n);
    in.read(reinterpret_cast<char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!in) throw std::runtime_error("load_field: truncated data in " + path);
    return f;
}

void dump_mollified(const std::string& path, const MollifiedField& m) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("dump_mollified: cannot open " + path);
    write_header(out, kMollMagic, static_cast<std::uint32_t>(m.spec.n), m.spec.side_length,
                 m.seed);
    out.write(reinterpret_cast<const char*>(&m.eps), 8);
    out.write(reinterpret_cast<const char*>(m.values.data()),
              static_cast<std::streamsize>(m.values.size() * sizeof(double)));
    if (!out) throw std::runtime_error("dump_mollified: write failed for " + path);
}

MollifiedField load_mollified(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_mollified: cannot open " + path);
    std::uint32_t n = 0;
    MollifiedField m;
    read_header(in, kMollMagic, n, m.spec.side_length, m.seed);
    m.spec.n = static_cast<int>(n);
    m.spec.window = Rect{m.spec.side_length / 4.0, m.spec.side_length / 4.0,
                         3.0 * m.spec.side_length / 4.0, 3.0 * m.spec.side_length / 4.0};
    in.read(reinterpret_cast<char*>(&m.eps), 8);
    m.values.resize(static_cast<std::size_t>(n) * n);
    in.read(reinterpret_cast<char*>(m.values.data()),
            static_cast<std::streamsize>(m.values.size() * sizeof(double)));
    if (!in) throw std::runtime_error("load_mollified: truncated data in " + path);
    return m;
}

}  // namespace lfpp
