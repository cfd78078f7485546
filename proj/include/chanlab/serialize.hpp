// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef CHANLAB_SERIALIZE_HPP
#define CHANLAB_SERIALIZE_HPP

#include "chanlab/channels.hpp"
#include "chanlab/states.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace chanlab {

using Json = nlohmann::json;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Row-major list of [re, im] pairs.
Json complex_entries(const Matrix& m);
Matrix matrix_from_entries(const Json& entries, Index rows, Index cols, const char* what);

/// {"dimH": n, "dimK": m, "vec": [[re, im], ...]}
Json to_json(const BipartiteState& e);
/// {"dim": n, "mat": [[re, im], ...]}
Json to_json(const DensityMatrix& rho);
/// {"dimIn": n, "dimOut": m, "kraus": [[[re, im], ...], ...]}
Json to_json(const Channel& c);

BipartiteState bipartite_state_from_json(const Json& j);
DensityMatrix density_from_json(const Json& j);
Channel channel_from_json(const Json& j);

/// Either schema, told apart by its keys.
std::variant<BipartiteState, DensityMatrix> state_from_json(const Json& j);
std::variant<BipartiteState, DensityMatrix> load_state_file(const std::string& path);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string digest(std::string_view bytes);
std::string digest(const Json& j);

}  // namespace chanlab

#endif  // CHANLAB_SERIALIZE_HPP
