// Copyright 2026 The authcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "corpus.hpp"

#include <stdexcept>

namespace authcode::testing {

LinearCode reed_solomon(std::int64_t q, std::size_t v, std::size_t k) {
  const FieldSpec f = make_field(q);
  std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(v));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < v; ++c) rows[r][c] = f.pow(f.reduce(c), r);
  return LinearCode::make(q, rows);
}

namespace {

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, LinearCode code) {
    const std::size_t d = min_distance(code);
    const std::size_t dd = min_distance(dual_code(code));
    if (d < 2 || dd < 2 || code.length() > 8)
      throw std::logic_error("corpus entry " + name + " breaks assumptions");
    out.push_back({std::move(name), std::move(code)});
  };
  add("repetition[3,1]/F2", LinearCode::make(2, {{1, 1, 1}}));
  add("even-weight[3,2]/F2", LinearCode::make(2, {{1, 0, 1}, {0, 1, 1}}));
  add("parity[4,3]/F3",
      LinearCode::make(3, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}));
  add("tetracode[4,2]/F3", LinearCode::make(3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
  add("reed-solomon[4,2]/F5", reed_solomon(5, 4, 2));
  add("reed-solomon[5,3]/F5", reed_solomon(5, 5, 3));
  add("reed-solomon[6,3]/F7", reed_solomon(7, 6, 3));
  add("hamming[7,4]/F2", LinearCode::make(2, {{1, 0, 0, 0, 1, 1, 0},
                                              {0, 1, 0, 0, 1, 0, 1},
                                              {0, 0, 1, 0, 0, 1, 1},
                                              {0, 0, 0, 1, 1, 1, 1}}));
  add("simplex[7,3]/F2", LinearCode::make(2, {{0, 0, 0, 1, 1, 1, 1},
                                              {0, 1, 1, 0, 0, 1, 1},
                                              {1, 0, 1, 0, 1, 0, 1}}));
  add("extended-hamming[8,4]/F2",
      LinearCode::make(2, {{1, 0, 0, 0, 0, 1, 1, 1},
                           {0, 1, 0, 0, 1, 0, 1, 1},
                           {0, 0, 1, 0, 1, 1, 0, 1},
                           {0, 0, 0, 1, 1, 1, 1, 0}}));
  add("two-blocks[6,2]/F2",
      LinearCode::make(2, {{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}}));
  add("overlap[5,2]/F2", LinearCode::make(2, {{1, 1, 1, 0, 0}, {0, 0, 1, 1, 1}}));
  add("shortened-hamming[6,3]/F2", LinearCode::make(2, {{1, 0, 0, 1, 1, 0},
                                                        {0, 1, 0, 1, 0, 1},
                                                        {0, 0, 1, 0, 1, 1}}));
  add("mixed[7,3]/F3", LinearCode::make(3, {{1, 0, 0, 1, 1, 0, 2},
                                            {0, 1, 0, 1, 2, 1, 0},
                                            {0, 0, 1, 0, 1, 1, 1}}));
  add("mixed[8,3]/F3", LinearCode::make(3, {{1, 0, 0, 1, 1, 1, 0, 2},
                                            {0, 1, 0, 2, 1, 0, 1, 1},
                                            {0, 0, 1, 1, 0, 2, 2, 1}}));
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> kCorpus = build();
  return kCorpus;
}

}  // namespace authcode::testing
