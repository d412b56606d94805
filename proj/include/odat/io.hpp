#pragma once

#include <string>
#include <vector>

#include "odat/errors.hpp"

namespace odat {

struct Wav {
    double fs = 0.0;
    std::vector<double> samples;  // PCM16 normalized by 1/32768
};

// RIFF PCM16 mono only; anything else is an IoError naming the offending
// field. Sample k maps to raw/32768, so -32768 -> -1.0 exactly.
Wav read_wav(const std::string& path);
void write_wav(const std::string& path, const Wav& wav);

// one real value per line; errors carry the line number
std::vector<double> read_csv_column(const std::string& path);

// write-then-rename so failed runs leave no partial artifact
void atomic_write(const std::string& path, const std::string& contents);

// %.17g, enough digits to round-trip a double
std::string format_g17(double x);
// %.17e, the scientific form used for matrix dumps
std::string format_e17(double x);

}  // namespace odat
