#pragma once

#include <string>

#include "expnls/grid.hpp"

namespace expnls {

// Trajectory checkpoint, binary layout (little-endian on disk, verified via
// the endianness marker):
//   bytes 0..7   magic "EXPNLSCK"
//   u32          endianness marker 0x01020304
//   u32          n
//   f64          half_width L
//   f64          t
//   f64          nu_sq
//   payload      n*n interleaved (re, im) f64, row-major over (x1, x2)
// A JSON sidecar <path>.json carries config echo and provenance.
struct CheckpointMeta {
    double t = 0.0;
    double nu_sq = 1.0;
};

void write_checkpoint(const std::string& path, const ComplexField& field,
                      const CheckpointMeta& meta, const std::string& sidecar_json);

struct Checkpoint {
    ComplexField field;
    CheckpointMeta meta;
};

Checkpoint read_checkpoint(const std::string& path);

}  // namespace expnls
