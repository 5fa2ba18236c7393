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

#include "authcode/adversary.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace authcode {

CoalitionView CoalitionView::make(SchemeParams params, IndexSet coalition,
                                  std::vector<TaggedMessage> observed,
                                  std::vector<PrivateKey> keys) {
  const std::size_t v = params.receivers();
  const std::size_t k = params.dimension();
  const std::size_t m = params.max_messages();
  const FieldSpec f = params.field();

  std::set<std::size_t> seen_receivers;
  for (std::size_t i : coalition) {
    if (i < 1 || i > v) {
      throw Error(ErrorKind::kOutOfRange,
                  "receiver " + std::to_string(i) + " outside 1.." +
                      std::to_string(v));
    }
    if (!seen_receivers.insert(i).second) {
      throw Error(ErrorKind::kInvalidArgument,
                  "receiver " + std::to_string(i) + " listed twice");
    }
  }
  if (keys.size() != coalition.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                std::to_string(coalition.size()) + " members but " +
                    std::to_string(keys.size()) + " keys");
  }
  for (std::size_t j = 0; j < keys.size(); ++j) {
    if (keys[j].receiver != coalition[j]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "key " + std::to_string(j + 1) + " belongs to R_" +
                      std::to_string(keys[j].receiver) + ", expected R_" +
                      std::to_string(coalition[j]));
    }
    if (keys[j].column.size() != m + 1) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "private key of R_" + std::to_string(keys[j].receiver) +
                      " has " + std::to_string(keys[j].column.size()) +
                      " entries, expected " + std::to_string(m + 1));
    }
  }
  std::set<Residue> seen_messages;
  for (const TaggedMessage& t : observed) {
    if (t.message >= f.modulus()) {
      throw Error(ErrorKind::kOutOfRange,
                  "message " + std::to_string(t.message) + " not in F_" +
                      std::to_string(f.modulus()));
    }
    if (!seen_messages.insert(t.message).second) {
      throw Error(ErrorKind::kDuplicateMessages,
                  "message " + std::to_string(t.message) + " observed twice");
    }
    if (t.tag.size() != k) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "tag for message " + std::to_string(t.message) + " has " +
                      std::to_string(t.tag.size()) + " entries, expected " +
                      std::to_string(k));
    }
  }
  return CoalitionView(std::move(params), std::move(coalition),
                       std::move(observed), std::move(keys));
}

CoalitionView CoalitionView::observe(SchemeParams params,
                                     const KeyMatrix& truth,
                                     IndexSet coalition,
                                     const std::vector<Residue>& messages) {
  const Distribution dist = distribute(truth, params);
  std::vector<PrivateKey> keys;
  for (std::size_t i : coalition) {
    if (i < 1 || i > params.receivers()) {
      throw Error(ErrorKind::kOutOfRange,
                  "receiver " + std::to_string(i) + " outside 1.." +
                      std::to_string(params.receivers()));
    }
    keys.push_back(dist.keys[i - 1]);
  }
  std::vector<TaggedMessage> observed;
  for (Residue s : messages) observed.push_back(make_tag(truth, s));
  return make(std::move(params), std::move(coalition), std::move(observed),
              std::move(keys));
}

bool CoalitionView::contains_receiver(std::size_t i) const {
  return std::find(coalition_.begin(), coalition_.end(), i) != coalition_.end();
}

bool CoalitionView::observed_message(Residue s) const {
  return std::any_of(observed_.begin(), observed_.end(),
                     [s](const TaggedMessage& t) { return t.message == s; });
}

LinearSystem assemble_system(const CoalitionView& view) {
  const SchemeParams& p = view.params();
  const FieldSpec f = p.field();
  const std::size_t k = p.dimension();
  const std::size_t width = p.max_messages() + 1;
  const std::size_t n_obs = view.observed().size();
  const std::size_t n_keys = view.coalition().size();

  Matrix coeff(f, k * n_obs + n_keys * width, k * width);
  Vector rhs(coeff.rows(), 0);

  // Evaluation blocks: row (1, s, ..., s^M) against column j of A.
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t o = 0; o < n_obs; ++o) {
      const TaggedMessage& t = view.observed()[o];
      const Vector powers = message_powers(f, t.message, p.max_messages());
      const std::size_t row = j * n_obs + o;
      for (std::size_t e = 0; e < width; ++e)
        coeff.set(row, j * width + e, powers[e]);
      rhs[row] = t.tag[j];
    }
  }
  // Key blocks: b_{t,i} = sum_j g_{j,i} a_{t,j}.
  for (std::size_t m = 0; m < n_keys; ++m) {
    const Vector g = p.code().column(view.coalition()[m]);
    const PrivateKey& key = view.keys()[m];
    for (std::size_t t = 0; t < width; ++t) {
      const std::size_t row = k * n_obs + m * width + t;
      for (std::size_t j = 0; j < k; ++j) coeff.set(row, j * width + t, g[j]);
      rhs[row] = key.column[t];
    }
  }
  return LinearSystem{std::move(coeff), std::move(rhs)};
}

Vector flatten_key(const Matrix& a) {
  Vector x;
  x.reserve(a.rows() * a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t t = 0; t < a.rows(); ++t) x.push_back(a(t, j));
  return x;
}

Matrix unflatten_key(FieldSpec field, std::span<const Residue> x,
                     std::size_t max_messages, std::size_t k) {
  const std::size_t width = max_messages + 1;
  if (x.size() != width * k)
    throw Error(ErrorKind::kDimensionMismatch, "flattened key has wrong size");
  Matrix a(field, width, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t t = 0; t < width; ++t) a.set(t, j, x[j * width + t]);
  return a;
}

std::size_t coalition_rank(const LinearCode& code, const IndexSet& coalition) {
  if (coalition.empty()) return 0;
  std::vector<std::size_t> cols;
  for (std::size_t i : coalition) cols.push_back(i - 1);
  return rank(code.generator().select_columns(cols));
}

AffineSolutionSet solve_key_space(const CoalitionView& view,
                                  std::uint64_t cap) {
  const LinearSystem sys = assemble_system(view);
  AffineSolutionSet s = solve_affine(sys.coeff, sys.rhs);
  const std::uint64_t n = s.count();
  if (n > cap) throw CapExceeded(n, cap);
  return s;
}

bool LabelDistribution::is_uniform() const {
  if (counts.empty()) return false;
  return std::all_of(counts.begin(), counts.end(),
                     [&](std::uint64_t c) { return c == counts.front(); });
}

std::optional<Residue> LabelDistribution::point_mass() const {
  const auto s = support();
  if (s.size() == 1) return s.front();
  return std::nullopt;
}

std::vector<Residue> LabelDistribution::support() const {
  std::vector<Residue> out;
  for (std::size_t y = 0; y < counts.size(); ++y)
    if (counts[y] != 0) out.push_back(static_cast<Residue>(y));
  return out;
}

LabelDistribution label_distribution(const CoalitionView& view,
                                     std::size_t target, Residue fresh,
                                     std::uint64_t cap) {
  const SchemeParams& p = view.params();
  const FieldSpec f = p.field();
  if (target < 1 || target > p.receivers()) {
    throw Error(ErrorKind::kOutOfRange,
                "target " + std::to_string(target) + " outside 1.." +
                    std::to_string(p.receivers()));
  }
  if (view.contains_receiver(target)) {
    throw Error(ErrorKind::kInvalidArgument,
                "target R_" + std::to_string(target) +
                    " is a coalition member");
  }
  if (fresh >= f.modulus()) {
    throw Error(ErrorKind::kOutOfRange,
                "fresh message " + std::to_string(fresh) + " not in F_" +
                    std::to_string(f.modulus()));
  }
  if (view.observed_message(fresh)) {
    throw Error(ErrorKind::kInvalidArgument,
                "fresh message " + std::to_string(fresh) +
                    " was already observed");
  }
  const AffineSolutionSet space = solve_key_space(view, cap);

  // label(A) = (1, s, ..., s^M) A g_target, linear in the flattened A.
  const std::size_t width = p.max_messages() + 1;
  const Vector powers = message_powers(f, fresh, p.max_messages());
  const Vector g = p.code().column(target);
  Vector weights(width * p.dimension());
  for (std::size_t j = 0; j < p.dimension(); ++j)
    for (std::size_t t = 0; t < width; ++t)
      weights[j * width + t] = f.mul(powers[t], g[j]);

  LabelDistribution dist;
  dist.target = target;
  dist.fresh = fresh;
  dist.counts.assign(f.modulus(), 0);
  for_each_affine(space, cap,
                  [&](std::span<const Residue>, std::span<const Residue> x) {
                    ++dist.counts[dot(f, weights, x)];
                    ++dist.total;
                  });
  return dist;
}

TaggedMessage tag_for_label(FieldSpec field, std::span<const Residue> g_column,
                            Residue fresh, Residue label) {
  const auto it = std::find_if(g_column.begin(), g_column.end(),
                               [](Residue x) { return x != 0; });
  if (it == g_column.end())
    throw Error(ErrorKind::kNoNonzeroEntry, "target column of G is zero");
  TaggedMessage msg{fresh, Vector(g_column.size(), 0)};
  msg.tag[static_cast<std::size_t>(it - g_column.begin())] =
      field.mul(label, field.inv(*it));
  return msg;
}

ForgeOutcome forge(const CoalitionView& view, std::size_t target,
                   Residue fresh, std::uint64_t cap) {
  ForgeOutcome out{label_distribution(view, target, fresh, cap), {}, {}};
  out.candidates = out.distribution.support();
  if (const auto label = out.distribution.point_mass()) {
    const Vector g = view.params().code().column(target);
    out.forged = tag_for_label(view.params().field(), g, fresh, *label);
  }
  return out;
}

}  // namespace authcode
