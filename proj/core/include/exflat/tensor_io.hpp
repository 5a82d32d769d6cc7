#pragma once

#include <stdexcept>
#include <string>

#include "exflat/tensor.hpp"

namespace exflat {

// Raised on malformed tensor files; the message names the offending
// file/field (slice, row, column) exactly.
class TensorFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// TensorFileV1: { "version": 1, "m": int, "n": int, "k": int (omitted when
// symmetric), "symmetric": bool, "slices": [m][n][k] of rational strings }.
Tensor3 parse_tensor_json(const std::string& text, const std::string& origin);
Tensor3 read_tensor_file(const std::string& path);

std::string tensor_to_json(const Tensor3& x, bool pretty = false);
void write_tensor_file(const std::string& path, const Tensor3& x);

}  // namespace exflat
