// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/serialize.hpp"

#include <cstdio>
#include <fstream>

namespace chanlab {

Json complex_entries(const Matrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out.push_back({m(i, j).real(), m(i, j).imag()});
  return out;
}

Matrix matrix_from_entries(const Json& entries, Index rows, Index cols, const char* what) {
  if (!entries.is_array() || Index(entries.size()) != rows * cols)
    throw ParseError(std::string(what) + ": expected " + std::to_string(rows * cols) +
                     " [re, im] entries");
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const Json& pair = entries[std::size_t(i * cols + j)];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        throw ParseError(std::string(what) + ": entries must be [re, im] number pairs");
      m(i, j) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
  return m;
}

namespace {

Index positive_dim(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  const auto v = j[key].get<long long>();
  if (v < 1 || v > kMaxDimension)
    throw ParseError(std::string("field \"") + key + "\" out of range");
  return static_cast<Index>(v);
}

}  // namespace

Json to_json(const BipartiteState& e) {
  return {{"dimH", e.dim_h()}, {"dimK", e.dim_k()}, {"vec", complex_entries(e.vec())}};
}

Json to_json(const DensityMatrix& rho) {
  return {{"dim", rho.dim()}, {"mat", complex_entries(rho.matrix())}};
}

Json to_json(const Channel& c) {
  Json kraus = Json::array();
  for (const auto& k : c.kraus()) kraus.push_back(complex_entries(k));
  return {{"dimIn", c.dim_in()}, {"dimOut", c.dim_out()}, {"kraus", std::move(kraus)}};
}

BipartiteState bipartite_state_from_json(const Json& j) {
  const Index dh = positive_dim(j, "dimH");
  const Index dk = positive_dim(j, "dimK");
  if (!j.contains("vec")) throw ParseError("missing field \"vec\"");
  return BipartiteState(dh, dk, matrix_from_entries(j["vec"], dh * dk, 1, "vec").col(0));
}

DensityMatrix density_from_json(const Json& j) {
  const Index dim = positive_dim(j, "dim");
  if (!j.contains("mat")) throw ParseError("missing field \"mat\"");
  return DensityMatrix(matrix_from_entries(j["mat"], dim, dim, "mat"));
}

Channel channel_from_json(const Json& j) {
  const Index din = positive_dim(j, "dimIn");
  const Index dout = positive_dim(j, "dimOut");
  if (!j.contains("kraus") || !j["kraus"].is_array()) throw ParseError("missing array \"kraus\"");
  std::vector<Matrix> kraus;
  for (const auto& op : j["kraus"]) kraus.push_back(matrix_from_entries(op, dout, din, "kraus"));
  return Channel(din, dout, std::move(kraus));
}

std::variant<BipartiteState, DensityMatrix> state_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("state JSON must be an object");
  if (j.contains("vec")) return bipartite_state_from_json(j);
  if (j.contains("mat")) return density_from_json(j);
  throw ParseError("state JSON needs either \"vec\" or \"mat\"");
}

std::variant<BipartiteState, DensityMatrix> load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ParseError("state file " + path + ": " + e.what());
  }
  return state_from_json(j);
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(const Json& j) { return digest(std::string_view(j.dump())); }

}  // namespace chanlab
