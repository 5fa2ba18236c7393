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

#include "authcode/paper_example.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "authcode/analysis.hpp"
#include "authcode/io.hpp"

namespace authcode::paper_example {

LinearCode code() {
  return LinearCode::make(kQ, {{1, 0, 0, 0, 0, 1, 2, 4, 0},
                               {0, 1, 0, 0, 0, 2, 2, 3, 2},
                               {0, 0, 1, 0, 0, 3, 1, 3, 4},
                               {0, 0, 0, 1, 0, 4, 0, 0, 2},
                               {0, 0, 0, 0, 1, 2, 1, 1, 4}});
}

SchemeParams params() { return SchemeParams::make(code(), kMaxMessages); }

Matrix key_matrix() {
  return Matrix::from_rows(make_field(kQ), {{3, 2, 2, 0, 2},
                                            {0, 4, 3, 0, 2},
                                            {0, 1, 2, 3, 1},
                                            {3, 3, 0, 1, 3}});
}

Matrix expected_b() {
  return Matrix::from_rows(make_field(kQ), {{3, 2, 2, 0, 2, 2, 4, 1, 0},
                                            {0, 4, 3, 0, 2, 1, 3, 3, 3},
                                            {0, 1, 2, 3, 1, 2, 0, 0, 0},
                                            {3, 3, 0, 1, 3, 4, 0, 4, 0}});
}

const IndexSet& coalition() {
  static const IndexSet kCoalition{1, 2, 3};
  return kCoalition;
}

// The printed message list reads s_3 = 4, but the printed system uses the
// evaluation row (1, 3, 4, 2) and the broadcast row starts with 3, so the
// third message is 3 (which also keeps the fresh message 4 unobserved).
const std::vector<Residue>& observed_messages() {
  static const std::vector<Residue> kMessages{1, 2, 3};
  return kMessages;
}

const std::vector<std::vector<Residue>>& observed_rows() {
  static const std::vector<std::vector<Residue>> kRows{
      {1, 1, 0, 2, 4, 3}, {2, 2, 3, 1, 0, 4}, {3, 4, 4, 4, 4, 3}};
  return kRows;
}

// Each printed 4x5 matrix is the 20-entry flattened unknown vector laid out
// five to a row.
const Vector& printed_particular() {
  static const Vector kParticular{3, 0, 0, 3, 2, 4, 1, 3, 2, 3,
                                  2, 0, 1, 4, 4, 0, 1, 3, 0, 4};
  return kParticular;
}

const std::vector<Vector>& printed_null_vectors() {
  static const std::vector<Vector> kNull{
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 1, 4, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 1, 4}};
  return kNull;
}

const std::vector<std::vector<Residue>>& label_table() {
  static const std::vector<std::vector<Residue>> kTable{
      {0, 4, 3, 2, 0, 2}, {0, 3, 1, 1, 4, 3}, {0, 2, 4, 0, 3, 4},
      {0, 1, 2, 4, 2, 0}, {0, 0, 0, 3, 1, 1}, {4, 4, 4, 2, 0, 0},
      {4, 3, 2, 1, 4, 1}, {4, 2, 0, 0, 3, 2}, {4, 1, 3, 4, 2, 3},
      {4, 0, 1, 3, 1, 4}, {3, 4, 0, 2, 0, 3}, {3, 3, 3, 1, 4, 4},
      {3, 2, 1, 0, 3, 0}, {3, 1, 4, 4, 2, 1}, {3, 0, 2, 3, 1, 2},
      {2, 4, 1, 2, 0, 1}, {2, 3, 4, 1, 4, 2}, {2, 2, 2, 0, 3, 3},
      {2, 1, 0, 4, 2, 4}, {2, 0, 3, 3, 1, 0}, {1, 4, 2, 2, 0, 4},
      {1, 3, 0, 1, 4, 0}, {1, 2, 3, 0, 3, 1}, {1, 1, 1, 4, 2, 2},
      {1, 0, 4, 3, 1, 3}};
  return kTable;
}

const std::vector<Vector>& table1() {
  static const std::vector<Vector> kTable{
      {2, 2, 1, 0, 1, 0, 4, 0, 0}, {0, 1, 0, 3, 1, 2, 0, 2, 2},
      {0, 3, 0, 0, 1, 3, 3, 4, 4}, {3, 0, 0, 4, 1, 1, 3, 0, 1},
      {2, 0, 0, 0, 1, 2, 4, 2, 1}, {3, 0, 2, 0, 1, 0, 2, 2, 0},
      {0, 0, 3, 1, 1, 0, 2, 4, 2}, {0, 4, 0, 1, 1, 1, 2, 0, 0},
      {0, 0, 4, 4, 1, 2, 4, 0, 4}, {4, 0, 2, 4, 1, 4, 1, 0, 0},
      {1, 0, 1, 4, 1, 0, 2, 0, 3}, {0, 0, 1, 0, 1, 1, 3, 2, 3},
      {0, 2, 2, 0, 1, 4, 3, 0, 2}, {1, 0, 0, 1, 1, 3, 0, 4, 1},
      {2, 0, 3, 4, 1, 3, 0, 0, 2}, {0, 2, 0, 4, 1, 0, 4, 3, 3},
      {4, 0, 0, 3, 1, 0, 2, 3, 1}, {0, 0, 2, 3, 1, 3, 0, 3, 0},
      {1, 4, 0, 0, 1, 0, 1, 3, 0}, {3, 3, 0, 2, 1, 0, 0, 3, 4},
      {4, 3, 3, 0, 1, 0, 0, 4, 0}, {3, 1, 4, 2, 1, 2, 0, 0, 0},
      {0, 3, 1, 3, 1, 0, 0, 0, 1}, {0, 0, 0, 2, 1, 4, 1, 1, 1},
      {2, 4, 0, 4, 1, 4, 0, 1, 0}, {4, 2, 0, 0, 1, 1, 0, 0, 3},
      {4, 0, 4, 0, 1, 3, 0, 2, 4}, {0, 1, 4, 0, 1, 0, 3, 1, 0}};
  return kTable;
}

const std::vector<IndexSet>& table2() {
  static const std::vector<IndexSet> kTable{
      {1, 2, 3, 7},    {2, 4, 6, 8, 9}, {2, 6, 7, 8, 9}, {1, 4, 6, 7, 9},
      {1, 6, 7, 8, 9}, {1, 3, 7, 8},    {3, 4, 7, 8, 9}, {2, 4, 6, 7},
      {3, 4, 6, 7, 9}, {1, 3, 4, 6, 7}, {1, 3, 4, 7, 9}, {3, 6, 7, 8, 9},
      {2, 3, 6, 7, 9}, {1, 4, 6, 8, 9}, {1, 3, 4, 6, 9}, {2, 4, 7, 8, 9},
      {1, 4, 7, 8, 9}, {3, 4, 6, 8},    {1, 2, 7, 8},    {1, 2, 4, 8, 9},
      {1, 2, 3, 8},    {1, 2, 3, 4, 6}, {2, 3, 4, 9},    {4, 6, 7, 8, 9},
      {1, 2, 4, 6, 8}, {1, 2, 6, 9},    {1, 3, 6, 8, 9}, {2, 3, 7, 8}};
  return kTable;
}

const std::vector<IndexSet>& table3() {
  static const std::vector<IndexSet> kTable{
      {1, 2, 3, 8, 9}, {2, 3, 4, 6, 7}, {3, 4, 6, 8, 9}, {1, 3, 4, 6, 7},
      {1, 2, 3, 4, 7}, {3, 4, 7, 8, 9}, {2, 3, 6, 8, 9}, {1, 3, 6, 8, 9},
      {2, 4, 6, 7, 9}, {1, 4, 6, 7, 8}, {2, 4, 6, 7, 8}, {1, 4, 6, 7, 9},
      {1, 2, 4, 7, 8}, {1, 2, 4, 7, 9}, {1, 2, 6, 7, 8}, {1, 2, 6, 7, 9},
      {1, 2, 3, 4, 9}, {1, 3, 6, 7, 9}, {2, 3, 6, 7, 8}, {1, 3, 6, 7, 8},
      {2, 3, 6, 7, 9}, {1, 2, 4, 6, 8}, {1, 2, 4, 6, 7}, {1, 2, 3, 4, 8},
      {2, 3, 4, 6, 9}, {4, 6, 7, 8, 9}, {1, 3, 4, 6, 8}, {1, 2, 4, 6, 9},
      {2, 4, 7, 8, 9}, {1, 2, 3, 7, 8}, {1, 2, 3, 7, 9}, {2, 6, 7, 8, 9},
      {1, 2, 6, 8, 9}, {1, 4, 7, 8, 9}, {2, 3, 4, 6, 8}, {3, 6, 7, 8, 9},
      {3, 4, 6, 7, 9}, {1, 2, 3, 6, 7}, {1, 3, 4, 6, 9}, {3, 4, 6, 7, 8},
      {1, 2, 4, 8, 9}, {1, 3, 4, 8, 9}, {1, 6, 7, 8, 9}, {1, 2, 3, 6, 9},
      {1, 2, 7, 8, 9}, {2, 3, 4, 8, 9}, {2, 3, 4, 7, 8}, {1, 3, 4, 7, 9},
      {1, 4, 6, 8, 9}, {2, 4, 6, 8, 9}, {2, 3, 4, 7, 9}, {1, 3, 4, 7, 8},
      {1, 2, 3, 6, 8}, {1, 3, 7, 8, 9}, {2, 3, 7, 8, 9}, {1, 2, 3, 4, 6}};
  return kTable;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

namespace {

std::string set_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t j = 0; j < s.size(); ++j)
    out += (j ? "," : "") + std::to_string(s[j]);
  return out + "}";
}

template <typename T>
std::multiset<T> as_multiset(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

std::string Report::render() const {
  std::ostringstream os;
  for (const Check& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << "INFO table3: printed list has " << table3().size()
     << " five-receiver groups; recomputed adversary groups of size 5: "
     << table3_recomputed.size() << '\n';
  for (const IndexSet& s : table3_recomputed)
    os << "INFO table3 recomputed " << set_string(s) << '\n';
  if (!table3_errata.empty()) {
    os << "WARNING table3: " << table3_errata.size()
       << " printed entries contain a minimal substitution group and can "
          "forge for R_5\n";
    for (const IndexSet& s : table3_errata) {
      os << "WARNING table3 erratum " << set_string(s) << " contains";
      for (const IndexSet& t : table2())
        if (std::includes(s.begin(), s.end(), t.begin(), t.end()))
          os << ' ' << set_string(t);
      os << '\n';
    }
  }
  os << (passed() ? "RESULT PASS" : "RESULT FAIL") << '\n';
  return os.str();
}

Report run(std::uint64_t cap) {
  Report rep;
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back(Check{std::move(name), pass, std::move(detail)});
  };

  const SchemeParams p = params();
  const FieldSpec f = p.field();
  const KeyMatrix a = KeyMatrix::from_matrix(key_matrix(), p);

  const Distribution dist = distribute(a, p);
  check("key distribution B = A G", dist.b == expected_b());

  bool tags_ok = true;
  for (const auto& row : observed_rows()) {
    const TaggedMessage t = make_tag(a, row.front());
    tags_ok = tags_ok && t.tag == Vector(row.begin() + 1, row.end());
  }
  check("broadcast tags for messages 1, 2, 3", tags_ok);

  check("dual distance d(C^perp) = 5",
        min_distance(dual_code(p.code()), cap) == 5);

  const CoalitionView view =
      CoalitionView::observe(p, a, coalition(), observed_messages());
  const LinearSystem sys = assemble_system(view);
  const std::size_t sys_rank = rank(sys.coeff);
  check("coalition system shape and rank",
        sys.coeff.rows() == 27 && sys.coeff.cols() == 20 && sys_rank == 18,
        std::to_string(sys.coeff.rows()) + "x" +
            std::to_string(sys.coeff.cols()) + ", rank " +
            std::to_string(sys_rank));

  const AffineSolutionSet space = solve_key_space(view, cap);
  check("key space size 25, dimension 2",
        space.count() == 25 && space.dimension() == 2,
        std::to_string(space.count()) + " solutions, dimension " +
            std::to_string(space.dimension()));
  check("true key matrix is consistent",
        space.contains(flatten_key(a.matrix())));

  bool family_ok = space.contains(printed_particular());
  for (const Vector& n : printed_null_vectors()) {
    Vector shifted = printed_particular();
    for (std::size_t j = 0; j < shifted.size(); ++j)
      shifted[j] = f.add(shifted[j], n[j]);
    family_ok = family_ok && space.contains(shifted);
  }
  {
    std::vector<Vector> rows = printed_null_vectors();
    family_ok = family_ok &&
                rank(Matrix::from_vectors(f, 20, rows)) == 2;
  }
  check("printed solution family matches", family_ok);

  std::vector<std::vector<Residue>> images;
  for (const Vector& x : enumerate_affine(space, cap)) {
    const Matrix candidate =
        unflatten_key(f, x, p.max_messages(), p.dimension());
    const Vector powers = message_powers(f, kFresh, p.max_messages());
    const Vector row = vec_mat(powers, candidate);
    std::vector<Residue> labels;
    for (std::size_t target = 4; target <= 9; ++target)
      labels.push_back(dot(f, row, p.code().column(target)));
    images.push_back(std::move(labels));
  }
  check("label image table for fresh message 4",
        as_multiset(images) == as_multiset(label_table()));

  for (Residue fresh : {Residue{4}, Residue{0}}) {
    bool uniform = true;
    for (std::size_t target = 4; target <= 9; ++target) {
      const auto ld = label_distribution(view, target, fresh, cap);
      uniform = uniform && ld.is_uniform() && ld.counts[0] == 5;
    }
    check("labels uniform (5 of 25 each) at R_4..R_9, fresh " +
              std::to_string(fresh),
          uniform);
  }

  {
    const CoalitionView four = CoalitionView::observe(
        p, a, {1, 2, 3, 4}, observed_messages());
    bool uniform = true;
    for (std::size_t target = 5; target <= 9; ++target)
      uniform = uniform && label_distribution(four, target, kFresh, cap)
                               .is_uniform();
    check("coalition {1,2,3,4} guesses with probability 1/5", uniform);
  }

  const LinearCode dual = dual_code(p.code());
  const auto minimal = minimal_codewords_wrt(dual, kTableTarget, cap);
  std::set<Vector> computed1;
  for (const Codeword& c : minimal) computed1.insert(c.vector);
  const std::set<Vector> printed1(table1().begin(), table1().end());
  check("table 1: minimal dual codewords w.r.t. 5",
        computed1 == printed1 && minimal.size() == 28,
        std::to_string(minimal.size()) + " computed");

  const auto groups = minimal_substitution_groups(p.code(), kTableTarget, cap);
  std::set<IndexSet> computed2(groups.begin(), groups.end());
  const std::set<IndexSet> printed2(table2().begin(), table2().end());
  check("table 2: minimal substitution groups for R_5",
        computed2 == printed2 && groups.size() == 28,
        std::to_string(groups.size()) + " computed");

  rep.table3_recomputed =
      groups_of_size(p.code(), kTableTarget, 5, Verdict::kAdversary);
  for (const IndexSet& s : table3()) {
    const bool contains_group =
        std::any_of(table2().begin(), table2().end(), [&](const IndexSet& t) {
          return std::includes(s.begin(), s.end(), t.begin(), t.end());
        });
    if (contains_group) rep.table3_errata.push_back(s);
  }
  std::sort(rep.table3_errata.begin(), rep.table3_errata.end(), subset_less);
  return rep;
}

}  // namespace authcode::paper_example
