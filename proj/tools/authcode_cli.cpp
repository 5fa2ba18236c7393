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


// authcode: command-line front end.
//
//   authcode code info|dual|minimal      inspect a code file
//   authcode scheme keygen|distribute|tag|verify
//   authcode attack                       coalition attack simulation
//   authcode analyze                      thresholds and bound audit
//   authcode classify                     one coalition against one target
//   authcode paper-example                regression against the F_5 example
//
// Exit status: 0 success/accept, 1 semantic failure (reject, mismatch),
// 2 input error, 3 enumeration cap exceeded. AUTHCODE_CAP overrides the
// default enumeration cap; --cap overrides both.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "authcode/adversary.hpp"
#include "authcode/analysis.hpp"
#include "authcode/io.hpp"
#include "authcode/paper_example.hpp"

namespace {

using namespace authcode;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::uint64_t default_cap() {
  if (const char* env = std::getenv("AUTHCODE_CAP")) {
    const auto v = io::parse_int_list(env, "AUTHCODE_CAP");
    if (v.size() != 1 || v[0] <= 0)
      throw Error(ErrorKind::kParse, "AUTHCODE_CAP must be a positive integer");
    return static_cast<std::uint64_t>(v[0]);
  }
  return kDefaultCap;
}

std::uint64_t resolve_cap(std::uint64_t flag) {
  return flag ? flag : default_cap();
}

LinearCode load_code(const std::string& path) {
  return io::parse_code(io::read_file(path), path);
}

std::string emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_file(out, text);
  }
  return text;
}

std::vector<std::size_t> to_indices(const std::string& text,
                                    const std::string& what) {
  std::vector<std::size_t> out;
  for (std::int64_t v : io::parse_int_list(text, what)) {
    if (v < 1) throw Error(ErrorKind::kOutOfRange, what + ": indices are 1-based");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<Residue> to_messages(const std::string& text, FieldSpec f,
                                 const std::string& what) {
  std::vector<Residue> out;
  for (std::int64_t v : io::parse_int_list(text, what)) {
    if (!f.contains(v)) {
      throw Error(ErrorKind::kOutOfRange,
                  what + ": " + std::to_string(v) + " is not in [0," +
                      std::to_string(f.modulus()) + ")");
    }
    out.push_back(static_cast<Residue>(v));
  }
  return out;
}

Residue to_message(std::int64_t v, FieldSpec f) {
  if (!f.contains(v)) {
    throw Error(ErrorKind::kOutOfRange, "message " + std::to_string(v) +
                                            " is not in [0," +
                                            std::to_string(f.modulus()) + ")");
  }
  return static_cast<Residue>(v);
}

std::string set_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t j = 0; j < s.size(); ++j)
    out += (j ? "," : "") + std::to_string(s[j]);
  return out + "}";
}

KeyMatrix load_key_matrix(const std::string& path, const SchemeParams& p) {
  const io::KeyMatrixFile f = io::parse_key_matrix(io::read_file(path), path);
  if (f.q != p.field().modulus()) {
    throw Error(ErrorKind::kFieldMismatch,
                path + ": key matrix is over F_" + std::to_string(f.q) +
                    ", code is over F_" + std::to_string(p.field().modulus()));
  }
  return KeyMatrix::from_matrix(f.a, p);
}

// ---- code ----

struct CodeOptions {
  std::string code;
  std::size_t coord = 0;
  std::uint64_t cap = 0;
  bool self = false;
};

int cmd_code_info(const CodeOptions& o) {
  const std::uint64_t cap = resolve_cap(o.cap);
  const LinearCode c = load_code(o.code);
  const std::size_t d = min_distance(c, cap);
  std::cout << "q=" << c.field().modulus() << " V=" << c.length()
            << " k=" << c.dimension() << " d=" << d;
  if (c.dimension() < c.length()) {
    std::cout << " d_dual=" << min_distance(dual_code(c), cap);
  } else {
    std::cout << " d_dual=undefined";
  }
  std::cout << " mds=" << (d == c.length() - c.dimension() + 1 ? "true" : "false")
            << '\n';
  return kExitOk;
}

int cmd_code_dual(const CodeOptions& o) {
  std::cout << io::format_code(dual_code(load_code(o.code)));
  return kExitOk;
}

int cmd_code_minimal(const CodeOptions& o) {
  const LinearCode c = load_code(o.code);
  const LinearCode target = o.self ? c : dual_code(c);
  for (const Codeword& w : minimal_codewords_wrt(target, o.coord, resolve_cap(o.cap)))
    std::cout << io::format_vector(w.vector) << '\n';
  return kExitOk;
}

// ---- scheme ----

struct SchemeOptions {
  std::string code;
  std::size_t max_messages = 0;
  std::uint64_t seed = 0;
  std::string key_matrix;
  std::string keys;
  std::string receiver_key;
  std::string key_dir;
  std::string out;
  std::int64_t message = -1;
  std::string tagged;
  std::uint64_t cap = 0;
};

int cmd_keygen(const SchemeOptions& o) {
  const SchemeParams p =
      SchemeParams::make(load_code(o.code), o.max_messages, resolve_cap(o.cap));
  emit(o.out, io::format_key_matrix(keygen(p, o.seed)));
  return kExitOk;
}

int cmd_distribute(const SchemeOptions& o) {
  const LinearCode code = load_code(o.code);
  const io::KeyMatrixFile af =
      io::parse_key_matrix(io::read_file(o.key_matrix), o.key_matrix);
  const SchemeParams p =
      SchemeParams::make(code, af.a.rows() - 1, resolve_cap(o.cap));
  const KeyMatrix a = load_key_matrix(o.key_matrix, p);
  const Distribution d = distribute(a, p);
  emit(o.out, io::format_key_file(d.b, p.dimension()));
  if (!o.key_dir.empty()) {
    std::filesystem::create_directories(o.key_dir);
    for (const PrivateKey& key : d.keys) {
      const auto path = std::filesystem::path(o.key_dir) /
                        ("receiver_" + std::to_string(key.receiver) + ".key");
      io::write_file(path.string(), io::format_receiver_key(key));
    }
  }
  return kExitOk;
}

int cmd_tag(const SchemeOptions& o) {
  const io::KeyMatrixFile af =
      io::parse_key_matrix(io::read_file(o.key_matrix), o.key_matrix);
  const FieldSpec f = make_field(af.q);
  const Residue s = to_message(o.message, f);
  // Tagging needs only A; no code is involved.
  const Vector powers = message_powers(f, s, af.a.rows() - 1);
  const TaggedMessage msg{s, vec_mat(powers, af.a)};
  emit(o.out, io::format_tagged_message(msg) + '\n');
  return kExitOk;
}

int cmd_verify(const SchemeOptions& o) {
  const LinearCode code = load_code(o.code);
  const FieldSpec f = code.field();
  std::string line = o.tagged;
  if (line.empty() || line == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    line = ss.str();
  }
  const TaggedMessage msg =
      io::parse_tagged_message(line, f, code.dimension(), "<tagged message>");

  std::vector<PrivateKey> keys;
  if (!o.receiver_key.empty()) {
    keys.push_back(
        io::parse_receiver_key(io::read_file(o.receiver_key), f, o.receiver_key));
  } else {
    const io::KeyFile kf = io::parse_key_file(io::read_file(o.keys), o.keys);
    if (kf.q != f.modulus() || kf.k != code.dimension() ||
        kf.b.cols() != code.length()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  o.keys + ": key file does not match the code");
    }
    for (std::size_t i = 1; i <= code.length(); ++i) {
      keys.push_back(PrivateKey{i, kf.b.column(i - 1)});
    }
  }
  bool all = true;
  for (const PrivateKey& key : keys) {
    if (key.receiver < 1 || key.receiver > code.length()) {
      throw Error(ErrorKind::kOutOfRange,
                  "receiver " + std::to_string(key.receiver) + " outside 1.." +
                      std::to_string(code.length()));
    }
    const bool ok = verify(f, key, code.column(key.receiver), msg);
    all = all && ok;
    std::cout << "R_" << key.receiver << ' ' << (ok ? "accept" : "reject")
              << '\n';
  }
  return all ? kExitOk : kExitFailure;
}

// ---- attack ----

struct AttackOptions {
  std::string scenario;
  std::string code;
  std::string key_matrix;
  std::size_t max_messages = 0;
  std::uint64_t seed = 0;
  std::string coalition;
  std::size_t target = 0;
  std::string observed;
  std::int64_t fresh = -1;
  std::uint64_t cap = 0;
};

void apply_scenario(AttackOptions& o, CLI::App& app) {
  if (o.scenario.empty()) return;
  const auto kv = io::parse_scenario(io::read_file(o.scenario), o.scenario);
  const auto base = std::filesystem::path(o.scenario).parent_path();
  auto path_of = [&](const std::string& v) {
    const std::filesystem::path p(v);
    return (p.is_absolute() ? p : base / p).string();
  };
  auto number = [&](const std::string& key, const std::string& v) {
    const auto list = io::parse_int_list(v, o.scenario + ": " + key);
    if (list.size() != 1)
      throw Error(ErrorKind::kParse, o.scenario + ": " + key + " must be one integer");
    return list[0];
  };
  // Command-line flags take precedence over the file.
  auto unset = [&](const char* flag) { return app.count(flag) == 0; };
  for (const auto& [key, value] : kv) {
    if (key == "code") {
      if (unset("--code")) o.code = path_of(value);
    } else if (key == "key-matrix") {
      if (unset("--key-matrix")) o.key_matrix = path_of(value);
    } else if (key == "M") {
      if (unset("--M")) o.max_messages = static_cast<std::size_t>(number(key, value));
    } else if (key == "seed") {
      if (unset("--seed")) o.seed = static_cast<std::uint64_t>(number(key, value));
    } else if (key == "coalition") {
      if (unset("--coalition")) o.coalition = value;
    } else if (key == "target") {
      if (unset("--target")) o.target = static_cast<std::size_t>(number(key, value));
    } else if (key == "observed") {
      if (unset("--observed")) o.observed = value;
    } else if (key == "fresh") {
      if (unset("--fresh")) o.fresh = number(key, value);
    } else if (key == "cap") {
      if (unset("--cap")) o.cap = static_cast<std::uint64_t>(number(key, value));
    } else {
      throw Error(ErrorKind::kParse, o.scenario + ": unknown key '" + key + "'");
    }
  }
}

int cmd_attack(const AttackOptions& o) {
  if (o.code.empty()) throw Error(ErrorKind::kInvalidArgument, "attack: no code given");
  if (o.target == 0) throw Error(ErrorKind::kInvalidArgument, "attack: no target given");
  if (o.fresh < 0) throw Error(ErrorKind::kInvalidArgument, "attack: no fresh message given");
  const std::uint64_t cap = resolve_cap(o.cap);
  const LinearCode code = load_code(o.code);
  std::optional<io::KeyMatrixFile> af;
  std::size_t m = o.max_messages;
  if (!o.key_matrix.empty()) {
    af = io::parse_key_matrix(io::read_file(o.key_matrix), o.key_matrix);
    m = af->a.rows() - 1;
  }
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "attack: M not given");
  const SchemeParams p = SchemeParams::make(code, m, cap);
  const FieldSpec f = p.field();
  const KeyMatrix truth =
      af ? load_key_matrix(o.key_matrix, p) : keygen(p, o.seed);

  IndexSet coalition = to_indices(o.coalition, "coalition");
  std::sort(coalition.begin(), coalition.end());
  const std::vector<Residue> observed = to_messages(o.observed, f, "observed");
  const Residue fresh = to_message(o.fresh, f);
  if (std::find(coalition.begin(), coalition.end(), o.target) != coalition.end())
    throw Error(ErrorKind::kInvalidArgument, "attack: coalition contains the target");
  if (std::find(observed.begin(), observed.end(), fresh) != observed.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "attack: fresh message " + std::to_string(fresh) +
                    " is among the observed messages");
  }

  const CoalitionView view = CoalitionView::observe(p, truth, coalition, observed);
  const ForgeOutcome out = forge(view, o.target, fresh, cap);
  const LabelDistribution& d = out.distribution;
  const GroupClassification cls = is_substitution_group(code, coalition, o.target);

  std::cout << "coalition=" << set_string(coalition) << " target=" << o.target
            << " observed=" << observed.size() << "/" << m << " fresh=" << fresh
            << '\n';
  std::cout << "keyspace=" << d.total << '\n';
  std::cout << "labels";
  for (std::size_t y = 0; y < d.counts.size(); ++y)
    std::cout << ' ' << y << ':' << d.counts[y];
  std::cout << '\n';
  if (d.is_uniform()) {
    std::cout << "distribution=uniform (" << d.counts[0] << " each)\n";
  } else if (out.forged) {
    std::cout << "distribution=point-mass (label " << *d.point_mass() << ")\n";
  } else {
    std::cout << "distribution=other\n";
  }
  std::cout << "verdict=" << to_string(cls.verdict) << '\n';

  bool consistent = true;
  if (view.has_maximal_observations())
    consistent = cls.is_substitution() == out.forged.has_value();
  if (out.forged) {
    const Distribution dist = distribute(truth, p);
    const bool ok = verify(p, dist.keys[o.target - 1], *out.forged);
    std::cout << "forged=" << io::format_tagged_message(*out.forged) << '\n';
    std::cout << "verify_at_target=" << (ok ? "accept" : "reject") << '\n';
    consistent = consistent && ok;
  } else {
    std::cout << "success_probability=1/" << out.candidates.size() << '\n';
  }
  if (!consistent) {
    std::cout << "warning: label distribution disagrees with classification\n";
    return kExitFailure;
  }
  return kExitOk;
}

// ---- analysis ----

struct AnalyzeOptions {
  std::string code;
  std::string format = "text";
  std::uint64_t cap = 0;
  std::uint64_t subset_cap = kDefaultSubsetCap;
  std::size_t target = 0;
  std::string group;
};

int cmd_analyze(const AnalyzeOptions& o) {
  const SecurityReport r =
      security_report(load_code(o.code), resolve_cap(o.cap), o.subset_cap);
  std::cout << (o.format == "kv" ? render_kv(r) : render_text(r));
  return r.passed() ? kExitOk : kExitFailure;
}

int cmd_classify(const AnalyzeOptions& o) {
  const LinearCode code = load_code(o.code);
  IndexSet group = to_indices(o.group, "group");
  std::sort(group.begin(), group.end());
  for (std::size_t j : group) {
    if (j > code.length())
      throw Error(ErrorKind::kOutOfRange, "group index " + std::to_string(j) +
                                              " outside 1.." +
                                              std::to_string(code.length()));
  }
  if (o.target < 1 || o.target > code.length())
    throw Error(ErrorKind::kOutOfRange, "target outside 1.." + std::to_string(code.length()));
  const GroupClassification g = is_substitution_group(code, group, o.target);
  std::cout << "group=" << set_string(g.group) << " target=" << g.target << '\n'
            << "verdict=" << to_string(g.verdict) << '\n'
            << (g.is_substitution() ? "dual_witness=" : "primal_witness=")
            << io::format_vector(g.witness) << '\n';
  return kExitOk;
}

int cmd_paper_example(std::uint64_t cap) {
  const paper_example::Report r = paper_example::run(resolve_cap(cap));
  std::cout << r.render();
  return r.passed() ? kExitOk : kExitFailure;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kCapExceeded:
      return kExitCap;
    case ErrorKind::kInternal:
      return kExitFailure;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-receiver authentication codes from linear codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "authcode 0.1.0");

  std::function<int()> action;

  // code
  CodeOptions code_opts;
  auto* code_cmd = app.add_subcommand("code", "Inspect a linear code file");
  code_cmd->require_subcommand(1);
  auto add_code_file = [&](CLI::App* c) {
    c->add_option("--code,code_file", code_opts.code, "Code file (q V k, then G)")
        ->required();
    c->add_option("--cap", code_opts.cap, "Enumeration cap");
  };
  auto* info = code_cmd->add_subcommand("info", "Print q, V, k, d and d_dual");
  add_code_file(info);
  info->callback([&] { action = [&] { return cmd_code_info(code_opts); }; });
  auto* dual = code_cmd->add_subcommand("dual", "Print a generator of the dual code");
  add_code_file(dual);
  dual->callback([&] { action = [&] { return cmd_code_dual(code_opts); }; });
  auto* minimal = code_cmd->add_subcommand(
      "minimal", "Dual codewords minimal with respect to a coordinate");
  add_code_file(minimal);
  minimal->add_option("--coord", code_opts.coord, "Coordinate i (1-based)")->required();
  minimal->add_flag("--self", code_opts.self,
                    "Use the code in the file rather than its dual");
  minimal->callback([&] { action = [&] { return cmd_code_minimal(code_opts); }; });

  // scheme
  SchemeOptions s;
  auto* scheme = app.add_subcommand("scheme", "Run the protocol phases");
  scheme->require_subcommand(1);
  auto* kg = scheme->add_subcommand("keygen", "Sample the authority's key matrix A");
  kg->add_option("--code", s.code, "Code file")->required();
  kg->add_option("--M", s.max_messages, "Maximum number of messages")->required();
  kg->add_option("--seed", s.seed, "PRNG seed")->required();
  kg->add_option("--out", s.out, "Output file (default stdout)");
  kg->add_option("--cap", s.cap, "Enumeration cap");
  kg->callback([&] { action = [&] { return cmd_keygen(s); }; });
  auto* dist = scheme->add_subcommand("distribute", "Compute B = A G and receiver keys");
  dist->add_option("--code", s.code, "Code file")->required();
  dist->add_option("--key-matrix", s.key_matrix, "Key matrix file (q M k, then A)")
      ->required();
  dist->add_option("--out", s.out, "Key file for B (default stdout)");
  dist->add_option("--key-dir", s.key_dir, "Directory for receiver_<i>.key files");
  dist->add_option("--cap", s.cap, "Enumeration cap");
  dist->callback([&] { action = [&] { return cmd_distribute(s); }; });
  auto* tag = scheme->add_subcommand("tag", "Authenticate a message");
  tag->add_option("--key-matrix", s.key_matrix, "Key matrix file")->required();
  tag->add_option("--message", s.message, "Message s in F_q")->required();
  tag->add_option("--out", s.out, "Output file (default stdout)");
  tag->callback([&] { action = [&] { return cmd_tag(s); }; });
  auto* ver = scheme->add_subcommand("verify", "Check a tagged message at receivers");
  ver->add_option("--code", s.code, "Code file")->required();
  auto* keys_opt = ver->add_option("--keys", s.keys, "Key file for B (all receivers)");
  auto* rk_opt = ver->add_option("--receiver-key", s.receiver_key,
                                 "Single receiver key file");
  keys_opt->excludes(rk_opt);
  ver->add_option("--tagged", s.tagged,
                  "Tagged message 's t_1 ... t_k' (default: read stdin)");
  ver->callback([&] {
    if (s.keys.empty() && s.receiver_key.empty())
      throw CLI::ValidationError("verify", "one of --keys or --receiver-key is required");
    action = [&] { return cmd_verify(s); };
  });

  // attack
  AttackOptions a;
  auto* attack = app.add_subcommand("attack", "Simulate a coalition attack");
  attack->add_option("--scenario", a.scenario, "Scenario file (key = value lines)");
  attack->add_option("--code", a.code, "Code file");
  attack->add_option("--key-matrix", a.key_matrix, "True key matrix A");
  attack->add_option("--M", a.max_messages, "Maximum number of messages (with --seed)");
  attack->add_option("--seed", a.seed, "Seed for the true A when no key matrix is given");
  attack->add_option("--coalition", a.coalition, "Coalition, e.g. 1,2,3");
  attack->add_option("--target", a.target, "Target receiver");
  attack->add_option("--observed", a.observed, "Observed messages, e.g. 1,2,3");
  attack->add_option("--fresh", a.fresh, "Fresh message to forge");
  attack->add_option("--cap", a.cap, "Enumeration cap");
  attack->callback([&] {
    action = [&] {
      apply_scenario(a, *attack);
      return cmd_attack(a);
    };
  });

  // analyze / classify
  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "Thresholds t_i, r_i and bound audit");
  analyze->add_option("--code,code_file", an.code, "Code file")->required();
  analyze->add_option("--format", an.format, "text or kv")
      ->check(CLI::IsMember({"text", "kv"}));
  analyze->add_option("--cap", an.cap, "Codeword enumeration cap");
  analyze->add_option("--subset-cap", an.subset_cap, "Subset scan cap per receiver");
  analyze->callback([&] { action = [&] { return cmd_analyze(an); }; });
  auto* classify = app.add_subcommand("classify", "Classify one coalition");
  classify->add_option("--code", an.code, "Code file")->required();
  classify->add_option("--target", an.target, "Target receiver")->required();
  classify->add_option("--group", an.group, "Coalition, e.g. 1,2,3 (may be empty)")
      ->required();
  classify->callback([&] { action = [&] { return cmd_classify(an); }; });

  // paper-example
  std::uint64_t pe_cap = 0;
  auto* paper = app.add_subcommand("paper-example",
                                   "Recompute the F_5 worked example and diff it");
  paper->add_option("--cap", pe_cap, "Enumeration cap");
  paper->callback([&] { action = [&] { return cmd_paper_example(pe_cap); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  try {
    return action ? action() : kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
