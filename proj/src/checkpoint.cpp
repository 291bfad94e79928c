#include "expnls/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace expnls {

namespace {

constexpr char kMagic[8] = {'E', 'X', 'P', 'N', 'L', 'S', 'C', 'K'};
constexpr std::uint32_t kEndianMarker = 0x01020304u;

template <class T>
void write_raw(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
void read_raw(std::ifstream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
}

}  // namespace

void write_checkpoint(const std::string& path, const ComplexField& field,
                      const CheckpointMeta& meta, const std::string& sidecar_json) {
    field.validate();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("write_checkpoint: cannot open " + path);
    out.write(kMagic, sizeof(kMagic));
    write_raw(out, kEndianMarker);
    write_raw(out, static_cast<std::uint32_t>(field.grid.n));
    write_raw(out, field.grid.half_width);
    write_raw(out, meta.t);
    write_raw(out, meta.nu_sq);
    static_assert(sizeof(Complex) == 2 * sizeof(double));
    out.write(reinterpret_cast<const char*>(field.values.data()),
              static_cast<std::streamsize>(field.values.size() * sizeof(Complex)));
    if (!out) throw Error("write_checkpoint: short write to " + path);
    out.close();

    std::ofstream sidecar(path + ".json", std::ios::trunc);
    if (!sidecar) throw Error("write_checkpoint: cannot open sidecar for " + path);
    sidecar << sidecar_json;
    if (!sidecar_json.empty() && sidecar_json.back() != '\n') sidecar << '\n';
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("read_checkpoint: cannot open " + path);
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw Error("read_checkpoint: bad magic in " + path);
    std::uint32_t marker = 0, n = 0;
    read_raw(in, marker);
    if (marker != kEndianMarker)
        throw Error("read_checkpoint: endianness mismatch in " + path);
    read_raw(in, n);
    Checkpoint ck;
    double half_width = 0.0;
    read_raw(in, half_width);
    read_raw(in, ck.meta.t);
    read_raw(in, ck.meta.nu_sq);
    ck.field = ComplexField(GridSpec(static_cast<int>(n), half_width));
    in.read(reinterpret_cast<char*>(ck.field.values.data()),
            static_cast<std::streamsize>(ck.field.values.size() * sizeof(Complex)));
    if (!in) throw Error("read_checkpoint: truncated payload in " + path);
    ck.field.validate();
    return ck;
}

}  // namespace expnls
