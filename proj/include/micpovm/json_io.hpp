#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "micpovm/coherent.hpp"
#include "micpovm/frame.hpp"
#include "micpovm/povm.hpp"
#include "micpovm/tomography.hpp"

namespace micpovm::json {

using Json = nlohmann::ordered_json;

// {"dim": d, "entries": [[[re, im], ...], ...]}, row-major.
Json from_matrix(const ComplexMatrix& m);
ComplexMatrix to_matrix(const Json& j);
HermitianOperator to_hermitian(const Json& j, const Tolerances& tol = {});

// {"directions": [[x, y, z], ...], "seed": u64 | null}
Json from_directions(const std::vector<Direction>& dirs, std::optional<std::uint64_t> seed);
std::vector<Direction> to_directions(const Json& j);

// {"dim", "operators", "gram", "duals", "meta"}
Json from_frame(const OperatorFrame& f, const Json& meta = Json::object());

// Reads the "operators" array of a frame-shaped document.
std::vector<HermitianOperator> to_operators(const Json& j, const Tolerances& tol = {});

// {"dim", "elements", "duals", "meta": {"method", "seed", "directions", "C", "mode", ...}}
Json from_povm(const Povm& p);
Povm to_povm(const Json& j, const Tolerances& tol = {});

// {"dim": d, "matrix": matrix}
Json from_state(const DensityMatrix& rho);
DensityMatrix to_state(const Json& j, const Tolerances& tol = {});

Json from_report(const PovmReport& r);
Json from_result(const TomographyResult& r);

// Serialization with stable key order and every float written with 17
// significant digits.
std::string dump(const Json& j, int indent = 2);

// Parses text, mapping any parse failure to Error(MalformedInput).
Json parse(const std::string& text);

}  // namespace micpovm::json
