#pragma once

// JSON encodings shared by the CLI and the reports.
//
// Matrix: {"rows": r, "cols": c, "complex": bool, "data": [[...], ...]} in
// row-major order, complex entries as [re, im]. Doubles are written in the
// shortest form that parses back to the same binary64 value. Exact rational
// entries that are not integers are written as "p/q" strings; the readers
// accept either form.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "dualpairs/gl_pair.hpp"
#include "dualpairs/matrix.hpp"
#include "dualpairs/symplectic_pair.hpp"

namespace dualpairs::json_io {

using Json = nlohmann::json;

Json to_json(const RealMat& a);
Json to_json(const ComplexMat& a);
Json to_json(const RationalMat& a);

bool is_complex_matrix(const Json& j);
// Throws InputError on malformed input, or when a complex matrix is read as real.
RealMat real_matrix(const Json& j);
// Accepts real matrices too.
ComplexMat complex_matrix(const Json& j);

// {"Q": matrix, "P": matrix}
Json to_json(const gl::CotangentPoint& x);
gl::CotangentPoint cotangent_point(const Json& j);

// {"n", "m", "p", "sigmas", "q", "r"}
Json to_json(const symplectic::OrbitInvariants& inv);
symplectic::OrbitInvariants orbit_invariants(const Json& j);

// {"blocks": [{"re", "im", "size"}...], "nilpotent": [d...], "n", "m"}
Json to_json(const gl::JordanData& jd);
gl::JordanData jordan_data(const Json& j);

Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);

}  // namespace dualpairs::json_io
