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

#include "authcode/analysis.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <utility>

#include "authcode/prng.hpp"

namespace authcode {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxMaskLength = 63;

Mask bit(std::size_t coord) { return Mask{1} << (coord - 1); }

Mask to_mask(const IndexSet& s) {
  Mask m = 0;
  for (std::size_t j : s) m |= bit(j);
  return m;
}

IndexSet from_mask(Mask m) {
  IndexSet s;
  for (std::size_t j = 1; m != 0; ++j, m >>= 1)
    if (m & 1U) s.push_back(j);
  return s;
}

void check_target(const LinearCode& code, std::size_t i) {
  if (i < 1 || i > code.length()) {
    throw Error(ErrorKind::kOutOfRange,
                "receiver " + std::to_string(i) + " outside 1.." +
                    std::to_string(code.length()));
  }
}

void check_group(const LinearCode& code, const IndexSet& group,
                 std::size_t target) {
  check_target(code, target);
  std::set<std::size_t> seen;
  for (std::size_t j : group) {
    check_target(code, j);
    if (j == target) {
      throw Error(ErrorKind::kInvalidArgument,
                  "target R_" + std::to_string(target) + " is in the group");
    }
    if (!seen.insert(j).second) {
      throw Error(ErrorKind::kInvalidArgument,
                  "receiver " + std::to_string(j) + " listed twice");
    }
  }
}

// Exhaustive scans index subsets by bitmask over all V coordinates.
void check_scan_size(const LinearCode& code, std::uint64_t subset_cap) {
  if (code.length() > kMaxMaskLength) {
    throw Error(ErrorKind::kOutOfRange,
                "subset scans support V <= 63, got V = " +
                    std::to_string(code.length()));
  }
  require_within_cap(2, code.length() - 1, subset_cap);
}

std::vector<std::size_t> to_columns(const IndexSet& group) {
  std::vector<std::size_t> cols;
  cols.reserve(group.size());
  for (std::size_t j : group) cols.push_back(j - 1);
  return cols;
}

Matrix group_columns(const LinearCode& code, const IndexSet& group) {
  const auto cols = to_columns(group);
  return code.generator().select_columns(cols);
}

// Primal codeword with c_i = 1 and c_B = 0, if one exists.
std::optional<Vector> primal_witness(const LinearCode& code,
                                     const IndexSet& group, std::size_t i) {
  // Unknown message m (length k); one equation g_j . m = 0 per j in B and
  // g_i . m = 1.
  Matrix sys(code.field(), group.size() + 1, code.dimension());
  Vector rhs(group.size() + 1, 0);
  for (std::size_t r = 0; r <= group.size(); ++r) {
    const std::size_t j = r < group.size() ? group[r] : i;
    const Vector g = code.column(j);
    for (std::size_t c = 0; c < code.dimension(); ++c) sys.set(r, c, g[c]);
  }
  rhs.back() = 1;
  try {
    const AffineSolutionSet s = solve_affine(sys, rhs);
    return code.encode(s.particular);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInconsistent) return std::nullopt;
    throw;
  }
}

// spans_target for every subset of [V] \ {i}, indexed by mask.
std::vector<std::uint8_t> scan_substitution(const LinearCode& code,
                                            std::size_t i,
                                            std::uint64_t subset_cap) {
  check_target(code, i);
  check_scan_size(code, subset_cap);
  const Mask full = (Mask{1} << code.length()) - 1;
  std::vector<std::uint8_t> sub(std::size_t{1} << code.length(), 0);
  for (Mask m = 0; m <= full; ++m) {
    if (m & bit(i)) continue;
    sub[m] = spans_target(code, from_mask(m), i) ? 1 : 0;
  }
  return sub;
}

void sort_subsets(std::vector<IndexSet>& v) {
  std::sort(v.begin(), v.end(), subset_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Mask> masks_with_target_one(const LinearCode& code,
                                        std::size_t i, std::uint64_t cap) {
  std::set<Mask> out;
  for_each_codeword(code, cap, [&](std::span<const Residue> w) {
    if (w[i - 1] == 1) out.insert(to_mask(support_of(w)));
  });
  return {out.begin(), out.end()};
}

}  // namespace

std::string_view to_string(Verdict v) {
  return v == Verdict::kSubstitution ? "substitution" : "adversary";
}

bool subset_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool spans_target(const LinearCode& code, const IndexSet& group,
                  std::size_t target) {
  IndexSet with_target = group;
  with_target.push_back(target);
  const std::size_t base = group.empty() ? 0 : rank(group_columns(code, group));
  return rank(group_columns(code, with_target)) == base;
}

GroupClassification is_substitution_group(const LinearCode& code,
                                          const IndexSet& group,
                                          std::size_t target) {
  check_group(code, group, target);
  GroupClassification out;
  out.target = target;
  out.group = group;
  std::sort(out.group.begin(), out.group.end());
  const FieldSpec f = code.field();

  if (spans_target(code, out.group, target)) {
    out.verdict = Verdict::kSubstitution;
    // G_B x = -g_i gives the dual codeword c with c_B = x and c_i = 1.
    Vector rhs = code.column(target);
    for (Residue& r : rhs) r = f.neg(r);
    const AffineSolutionSet s =
        solve_affine(group_columns(code, out.group), rhs);
    out.witness.assign(code.length(), 0);
    out.witness[target - 1] = 1;
    for (std::size_t j = 0; j < out.group.size(); ++j)
      out.witness[out.group[j] - 1] = s.particular[j];
  } else {
    out.verdict = Verdict::kAdversary;
    auto w = primal_witness(code, out.group, target);
    if (!w) {
      throw Error(ErrorKind::kInternal,
                  "adversary group without a primal witness");
    }
    out.witness = std::move(*w);
  }
  return out;
}

namespace {

EquivalenceReport run_equivalence(const LinearCode& code, std::size_t i,
                                  std::uint64_t cap,
                                  const std::vector<Mask>& subsets) {
  check_target(code, i);
  std::vector<Mask> dual_masks;
  if (code.dimension() < code.length())
    dual_masks = masks_with_target_one(dual_code(code), i, cap);
  const std::vector<Mask> primal_masks = masks_with_target_one(code, i, cap);

  EquivalenceReport report;
  report.target = i;
  for (Mask b : subsets) {
    const IndexSet group = from_mask(b);
    Disagreement d;
    d.group = group;
    d.span_test = spans_target(code, group, i);
    const Mask allowed = b | bit(i);
    d.dual_codeword =
        std::any_of(dual_masks.begin(), dual_masks.end(),
                    [&](Mask s) { return (s & ~allowed) == 0; });
    d.no_primal_codeword =
        std::none_of(primal_masks.begin(), primal_masks.end(),
                     [&](Mask s) { return (s & b) == 0; });
    d.primal_solvable = primal_witness(code, group, i).has_value();
    ++report.subsets_checked;
    if (d.span_test) ++report.substitution_groups;
    if (d.dual_codeword != d.span_test ||
        d.no_primal_codeword != d.span_test ||
        d.primal_solvable == d.span_test) {
      report.disagreements.push_back(std::move(d));
    }
  }
  return report;
}

}  // namespace

EquivalenceReport equivalence_check(const LinearCode& code, std::size_t i,
                                    std::uint64_t cap,
                                    std::uint64_t subset_cap) {
  check_target(code, i);
  check_scan_size(code, subset_cap);
  std::vector<Mask> subsets;
  const Mask full = (Mask{1} << code.length()) - 1;
  for (Mask m = 0; m <= full; ++m)
    if (!(m & bit(i))) subsets.push_back(m);
  return run_equivalence(code, i, cap, subsets);
}

EquivalenceReport equivalence_check_sampled(const LinearCode& code,
                                            std::size_t i,
                                            std::uint64_t samples,
                                            std::uint64_t seed,
                                            std::uint64_t cap) {
  check_target(code, i);
  if (code.length() > kMaxMaskLength)
    throw Error(ErrorKind::kOutOfRange, "sampled scans support V <= 63");
  Prng rng(seed);
  std::vector<Mask> subsets;
  for (std::uint64_t n = 0; n < samples; ++n) {
    Mask m = 0;
    for (std::size_t j = 1; j <= code.length(); ++j)
      if (j != i && rng.uniform(2) == 1) m |= bit(j);
    subsets.push_back(m);
  }
  EquivalenceReport r = run_equivalence(code, i, cap, subsets);
  r.sampled = true;
  return r;
}

std::vector<IndexSet> brute_force_minimal_substitution_groups(
    const LinearCode& code, std::size_t i, std::uint64_t subset_cap) {
  const auto sub = scan_substitution(code, i, subset_cap);
  std::vector<IndexSet> out;
  for (Mask m = 0; m < sub.size(); ++m) {
    if (!sub[m]) continue;
    // Substitution groups are upward closed under the span test, so
    // checking single removals decides inclusion-minimality.
    bool minimal = true;
    for (Mask rest = m; rest != 0 && minimal; rest &= rest - 1) {
      const Mask low = rest & (~rest + 1);
      if (sub[m & ~low]) minimal = false;
    }
    if (minimal) out.push_back(from_mask(m));
  }
  sort_subsets(out);
  return out;
}

std::vector<IndexSet> minimal_substitution_groups(const LinearCode& code,
                                                  std::size_t i,
                                                  std::uint64_t cap,
                                                  std::uint64_t subset_cap) {
  check_target(code, i);
  std::vector<IndexSet> out;
  if (code.dimension() < code.length()) {
    for (const Codeword& c : minimal_codewords_wrt(dual_code(code), i, cap)) {
      IndexSet s;
      for (std::size_t j : c.support)
        if (j != i) s.push_back(j);
      out.push_back(std::move(s));
    }
  }
  sort_subsets(out);
  if (code.length() <= kMaxMaskLength &&
      saturating_pow(2, code.length() - 1) <= subset_cap) {
    if (out != brute_force_minimal_substitution_groups(code, i, subset_cap)) {
      throw Error(ErrorKind::kInternal,
                  "minimal dual codewords disagree with the subset scan for "
                  "receiver " +
                      std::to_string(i));
    }
  }
  return out;
}

std::vector<IndexSet> groups_of_size(const LinearCode& code, std::size_t i,
                                     std::size_t size, Verdict verdict,
                                     std::uint64_t subset_cap) {
  const auto sub = scan_substitution(code, i, subset_cap);
  const bool want = verdict == Verdict::kSubstitution;
  std::vector<IndexSet> out;
  for (Mask m = 0; m < sub.size(); ++m) {
    if ((m & bit(i)) || static_cast<std::size_t>(std::popcount(m)) != size)
      continue;
    if (static_cast<bool>(sub[m]) == want) out.push_back(from_mask(m));
  }
  sort_subsets(out);
  return out;
}

bool avoids_minimal_supports(const std::vector<Codeword>& minimal,
                             const IndexSet& group, std::size_t i) {
  IndexSet with_target = group;
  with_target.push_back(i);
  std::sort(with_target.begin(), with_target.end());
  return std::none_of(minimal.begin(), minimal.end(), [&](const Codeword& c) {
    return std::includes(with_target.begin(), with_target.end(),
                         c.support.begin(), c.support.end());
  });
}

namespace {

struct SizeProfile {
  std::vector<std::uint64_t> total;
  std::vector<std::uint64_t> substitution;
};

SizeProfile profile(const LinearCode& code, std::size_t i,
                    const std::vector<std::uint8_t>& sub) {
  SizeProfile p;
  p.total.assign(code.length(), 0);
  p.substitution.assign(code.length(), 0);
  for (Mask m = 0; m < sub.size(); ++m) {
    if (m & bit(i)) continue;
    const auto s = static_cast<std::size_t>(std::popcount(m));
    ++p.total[s];
    p.substitution[s] += sub[m];
  }
  return p;
}

ReceiverThresholds thresholds_from(std::size_t i, const SizeProfile& p) {
  ReceiverThresholds t{i, -1, static_cast<int>(p.total.size())};
  for (std::size_t s = 0; s < p.total.size(); ++s) {
    if (p.substitution[s] == 0) t.t = static_cast<int>(s);
  }
  for (std::size_t s = p.total.size(); s-- > 0;) {
    if (p.substitution[s] == p.total[s]) t.r = static_cast<int>(s);
  }
  return t;
}

}  // namespace

ReceiverThresholds receiver_thresholds(const LinearCode& code, std::size_t i,
                                       std::uint64_t subset_cap) {
  const auto sub = scan_substitution(code, i, subset_cap);
  return thresholds_from(i, profile(code, i, sub));
}

ThresholdEstimate estimate_thresholds(const LinearCode& code, std::size_t i,
                                      std::uint64_t samples,
                                      std::uint64_t seed) {
  check_target(code, i);
  const std::size_t v = code.length();
  Prng rng(seed);
  ThresholdEstimate est{i, static_cast<int>(v) - 1, 0, samples};
  std::vector<std::size_t> others;
  for (std::size_t j = 1; j <= v; ++j)
    if (j != i) others.push_back(j);
  for (std::uint64_t n = 0; n < samples; ++n) {
    // Uniform size, then a uniform subset of that size (partial shuffle).
    const auto size = static_cast<std::size_t>(rng.uniform(v));
    std::vector<std::size_t> pool = others;
    for (std::size_t a = 0; a < size; ++a) {
      const auto b = a + static_cast<std::size_t>(rng.uniform(pool.size() - a));
      std::swap(pool[a], pool[b]);
    }
    IndexSet group(pool.begin(), pool.begin() + static_cast<long>(size));
    std::sort(group.begin(), group.end());
    const int s = static_cast<int>(size);
    if (spans_target(code, group, i)) {
      est.t_upper = std::min(est.t_upper, s - 1);
    } else {
      est.r_lower = std::max(est.r_lower, s + 1);
    }
  }
  return est;
}

bool SecurityReport::passed() const {
  return std::all_of(audits.begin(), audits.end(), [](const AuditItem& a) {
    return !a.asserted || a.holds;
  });
}

SecurityReport security_report(const LinearCode& code, std::uint64_t cap,
                               std::uint64_t subset_cap) {
  check_scan_size(code, subset_cap);
  SecurityReport rep;
  rep.q = code.field().modulus();
  rep.length = code.length();
  rep.dimension = code.dimension();
  rep.distance = min_distance(code, cap);
  rep.mds = rep.distance == code.length() - code.dimension() + 1;
  const bool has_dual = code.dimension() < code.length();
  rep.dual_distance = has_dual ? min_distance(dual_code(code), cap) : 0;
  rep.scheme_assumptions =
      has_dual && rep.distance >= 2 && rep.dual_distance >= 2;

  const int v = static_cast<int>(rep.length);
  const int d = static_cast<int>(rep.distance);
  const int dd = static_cast<int>(rep.dual_distance);
  const bool assert_bounds = rep.scheme_assumptions;

  bool r_bounds = true, t_bounds = true, cor2_i = true, cor2_ii = true,
       cor2_iii = true, thm5 = true;
  std::ostringstream r_detail, t_detail, c2i_detail, c2ii_detail, c2iii_detail,
      thm5_detail;
  for (std::size_t i = 1; i <= rep.length; ++i) {
    const auto sub = scan_substitution(code, i, subset_cap);
    const SizeProfile p = profile(code, i, sub);
    const ReceiverThresholds th = thresholds_from(i, p);
    rep.thresholds.push_back(th);

    if (!(dd - 1 <= th.r && th.r <= v - d + 1)) {
      r_bounds = false;
      r_detail << " r_" << i << "=" << th.r;
    }
    if (!(dd - 2 <= th.t && th.t <= th.r - 1)) {
      t_bounds = false;
      t_detail << " t_" << i << "=" << th.t;
    }
    for (int s = 0; s < v; ++s) {
      const auto us = static_cast<std::size_t>(s);
      if (s >= v - d + 1 && p.substitution[us] != p.total[us]) {
        cor2_i = false;
        c2i_detail << " R_" << i << ":size" << s;
      }
      if (s <= dd - 2 && p.substitution[us] != 0) {
        cor2_ii = false;
        c2ii_detail << " R_" << i << ":size" << s;
      }
      // Adversary groups are exactly the subsets of size <= d_dual - 2.
      const bool expect_adversary = s <= dd - 2;
      const std::uint64_t adversaries = p.total[us] - p.substitution[us];
      if (rep.mds && adversaries != (expect_adversary ? p.total[us] : 0)) {
        cor2_iii = false;
        c2iii_detail << " R_" << i << ":size" << s;
      }
    }
    if (has_dual) {
      try {
        minimal_substitution_groups(code, i, cap, subset_cap);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kInternal) throw;
        thm5 = false;
        thm5_detail << " R_" << i;
      }
    }
  }
  auto by_t = [](const ReceiverThresholds& a, const ReceiverThresholds& b) {
    return a.t < b.t;
  };
  auto by_r = [](const ReceiverThresholds& a, const ReceiverThresholds& b) {
    return a.r < b.r;
  };
  rep.min_t = std::min_element(rep.thresholds.begin(), rep.thresholds.end(), by_t)->t;
  rep.min_r = std::min_element(rep.thresholds.begin(), rep.thresholds.end(), by_r)->r;
  rep.max_r = std::max_element(rep.thresholds.begin(), rep.thresholds.end(), by_r)->r;

  auto add = [&](std::string name, std::string statement, bool holds,
                 bool asserted, std::string detail) {
    rep.audits.push_back(AuditItem{std::move(name), std::move(statement),
                                   holds, asserted, std::move(detail)});
  };
  add("r_bounds", "d_dual-1 <= r_i <= V-d+1 for every i", r_bounds,
      assert_bounds, r_detail.str());
  add("t_bounds", "d_dual-2 <= t_i <= r_i-1 for every i", t_bounds,
      assert_bounds, t_detail.str());
  add("max_r", "max_i r_i = V-d+1", rep.max_r == v - d + 1, assert_bounds,
      "max r_i = " + std::to_string(rep.max_r));
  add("min_t", "min_i t_i = d_dual-2", rep.min_t == dd - 2, assert_bounds,
      "min t_i = " + std::to_string(rep.min_t));
  add("large_groups_substitute",
      "every subset of size >= V-d+1 is a substitution group", cor2_i,
      assert_bounds, c2i_detail.str());
  add("small_groups_adversary",
      "every subset of size <= d_dual-2 is an adversary group", cor2_ii,
      assert_bounds, c2ii_detail.str());
  add("mds_adversary_exact",
      "MDS: adversary groups are exactly the subsets of size <= d_dual-2",
      rep.mds ? cor2_iii : true, assert_bounds && rep.mds,
      rep.mds ? c2iii_detail.str() : std::string("not MDS"));
  add("minimal_groups_from_dual",
      "minimal substitution groups = supports of minimal dual codewords",
      thm5, has_dual, thm5_detail.str());
  // The two published forms of the min r_i identity differ by one; both are
  // reported and neither is asserted.
  add("min_r_eq_d_dual", "min_i r_i = d_dual", rep.min_r == dd, false,
      "min r_i = " + std::to_string(rep.min_r));
  add("min_r_eq_d_dual_minus_1", "min_i r_i = d_dual-1", rep.min_r == dd - 1,
      false, "min r_i = " + std::to_string(rep.min_r));
  return rep;
}

std::string render_text(const SecurityReport& r) {
  std::ostringstream os;
  os << "code: q=" << r.q << " V=" << r.length << " k=" << r.dimension
     << " d=" << r.distance << " d_dual=" << r.dual_distance
     << (r.mds ? " (MDS)" : "") << '\n';
  if (!r.scheme_assumptions)
    os << "warning: scheme needs d >= 2 and d_dual >= 2\n";
  os << "receiver  t_i  r_i\n";
  for (const auto& t : r.thresholds) {
    os << "R_" << t.receiver << std::string(t.receiver < 10 ? 7 : 6, ' ')
       << t.t << "    " << t.r << '\n';
  }
  os << "min t_i=" << r.min_t << " min r_i=" << r.min_r
     << " max r_i=" << r.max_r << '\n';
  os << "audit:\n";
  for (const auto& a : r.audits) {
    const char* tag = a.asserted ? (a.holds ? "PASS" : "FAIL")
                                 : (a.holds ? "INFO true" : "INFO false");
    os << "  [" << tag << "] " << a.name << ": " << a.statement;
    if (!a.detail.empty()) os << " (" << a.detail << ")";
    os << '\n';
  }
  os << (r.passed() ? "result: PASS" : "result: FAIL") << '\n';
  return os.str();
}

std::string render_kv(const SecurityReport& r) {
  std::ostringstream os;
  os << "q=" << r.q << "\nV=" << r.length << "\nk=" << r.dimension
     << "\nd=" << r.distance << "\nd_dual=" << r.dual_distance
     << "\nmds=" << (r.mds ? "true" : "false")
     << "\nscheme_assumptions=" << (r.scheme_assumptions ? "true" : "false")
     << "\nmin_t=" << r.min_t << "\nmin_r=" << r.min_r
     << "\nmax_r=" << r.max_r << '\n';
  for (const auto& t : r.thresholds) os << "t." << t.receiver << "=" << t.t << '\n';
  for (const auto& t : r.thresholds) os << "r." << t.receiver << "=" << t.r << '\n';
  for (const auto& a : r.audits) {
    os << "audit." << a.name << "="
       << (a.asserted ? (a.holds ? "pass" : "fail")
                      : (a.holds ? "info-true" : "info-false"))
       << '\n';
  }
  os << "passed=" << (r.passed() ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace authcode
