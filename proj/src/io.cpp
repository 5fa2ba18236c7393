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

#include "authcode/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

namespace authcode::io {

namespace {

struct Token {
  std::int64_t value;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

class LineReader {
 public:
  LineReader(std::string_view text, std::string source)
      : source_(std::move(source)) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view raw = text.substr(start, end - start);
      if (const auto hash = raw.find('#'); hash != std::string_view::npos)
        raw = raw.substr(0, hash);
      Line line{number, tokenize(raw, number)};
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
      if (end == text.size()) break;
      start = end + 1;
    }
    last_line_ = number;
  }

  const std::string& source() const { return source_; }
  bool done() const { return pos_ == lines_.size(); }

  const Line& next(const std::string& expected) {
    if (done()) {
      throw ParseError(source_, last_line_, 0,
                       "unexpected end of input, expected " + expected);
    }
    return lines_[pos_++];
  }

  const Line& next_row(std::size_t width, const std::string& expected) {
    const Line& l = next(expected);
    if (l.tokens.size() != width) {
      const std::size_t col = l.tokens.size() > width
                                  ? l.tokens[width].column
                                  : 0;
      throw ParseError(source_, l.number, col,
                       expected + ": expected " + std::to_string(width) +
                           " integers, found " +
                           std::to_string(l.tokens.size()));
    }
    return l;
  }

  void expect_end() {
    if (!done()) {
      const Line& l = lines_[pos_];
      throw ParseError(source_, l.number, l.tokens.front().column,
                       "unexpected extra data");
    }
  }

  [[noreturn]] void fail(const Line& l, std::size_t token,
                         const std::string& msg) const {
    throw ParseError(source_, l.number,
                     token < l.tokens.size() ? l.tokens[token].column : 0, msg);
  }

 private:
  std::vector<Token> tokenize(std::string_view raw, std::size_t number) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      if (i == raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
        ++j;
      const std::string_view word = raw.substr(i, j - i);
      std::int64_t v = 0;
      const auto [ptr, ec] =
          std::from_chars(word.data(), word.data() + word.size(), v);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(source_, number, i + 1,
                         "expected an integer, found '" + std::string(word) +
                             "'");
      }
      out.push_back(Token{v, i + 1});
      i = j;
    }
    return out;
  }

  std::string source_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

std::size_t positive(const LineReader& r, const Line& l, std::size_t token,
                     const std::string& what, std::int64_t min = 1) {
  const std::int64_t v = l.tokens[token].value;
  if (v < min)
    r.fail(l, token, what + " must be at least " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

FieldSpec field_from(const LineReader& r, const Line& l) {
  try {
    return make_field(l.tokens[0].value);
  } catch (const Error& e) {
    r.fail(l, 0, e.what());
  }
}

Matrix read_rows(LineReader& r, FieldSpec f, std::size_t rows,
                 std::size_t cols, const std::string& what) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Line& l = r.next_row(cols, what + " row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t v = l.tokens[j].value;
      if (!f.contains(v)) {
        r.fail(l, j,
               std::to_string(v) + " is not in [0," +
                   std::to_string(f.modulus()) + ")");
      }
      m.set(i, j, v);
    }
  }
  return m;
}

std::string format_rows(const Matrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kParse, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorKind::kParse, "failed writing " + path);
}

LinearCode parse_code(std::string_view text, const std::string& source) {
  LineReader r(text, source);
  const Line& h = r.next_row(3, "header 'q V k'");
  const FieldSpec f = field_from(r, h);
  const std::size_t v = positive(r, h, 1, "V");
  const std::size_t k = positive(r, h, 2, "k");
  if (k > v) r.fail(h, 2, "k must not exceed V");
  Matrix g = read_rows(r, f, k, v, "generator");
  r.expect_end();
  try {
    return LinearCode::make(std::move(g));
  } catch (const Error& e) {
    throw ParseError(source, h.number, 0, e.what());
  }
}

std::string format_code(const LinearCode& code) {
  std::ostringstream os;
  os << code.field().modulus() << ' ' << code.length() << ' '
     << code.dimension() << '\n'
     << format_rows(code.generator());
  return os.str();
}

KeyMatrixFile parse_key_matrix(std::string_view text,
                               const std::string& source) {
  LineReader r(text, source);
  const Line& h = r.next_row(3, "header 'q M k'");
  const FieldSpec f = field_from(r, h);
  const std::size_t m = positive(r, h, 1, "M");
  const std::size_t k = positive(r, h, 2, "k");
  KeyMatrixFile out{f.modulus(), read_rows(r, f, m + 1, k, "key matrix")};
  r.expect_end();
  return out;
}

std::string format_key_matrix(const KeyMatrix& a) {
  std::ostringstream os;
  os << a.field().modulus() << ' ' << a.max_messages() << ' '
     << a.dimension() << '\n'
     << format_rows(a.matrix());
  return os.str();
}

KeyFile parse_key_file(std::string_view text, const std::string& source) {
  LineReader r(text, source);
  const Line& h = r.next_row(4, "header 'q M k V'");
  const FieldSpec f = field_from(r, h);
  const std::size_t m = positive(r, h, 1, "M");
  const std::size_t k = positive(r, h, 2, "k");
  const std::size_t v = positive(r, h, 3, "V");
  KeyFile out{f.modulus(), m, k, read_rows(r, f, m + 1, v, "key")};
  r.expect_end();
  return out;
}

std::string format_key_file(const Matrix& b, std::size_t k) {
  std::ostringstream os;
  os << b.field().modulus() << ' ' << b.rows() - 1 << ' ' << k << ' '
     << b.cols() << '\n'
     << format_rows(b);
  return os.str();
}

PrivateKey parse_receiver_key(std::string_view text, FieldSpec field,
                              const std::string& source) {
  LineReader r(text, source);
  const Line& h = r.next_row(1, "receiver index");
  PrivateKey key;
  key.receiver = positive(r, h, 0, "receiver index");
  const Line& l = r.next("key column");
  for (std::size_t j = 0; j < l.tokens.size(); ++j) {
    const std::int64_t v = l.tokens[j].value;
    if (!field.contains(v)) r.fail(l, j, std::to_string(v) + " is not a residue");
    key.column.push_back(static_cast<Residue>(v));
  }
  r.expect_end();
  return key;
}

std::string format_receiver_key(const PrivateKey& key) {
  return std::to_string(key.receiver) + '\n' + format_vector(key.column) + '\n';
}

TaggedMessage parse_tagged_message(std::string_view line, FieldSpec field,
                                   std::size_t k, const std::string& source) {
  LineReader r(line, source);
  const Line& l = r.next_row(k + 1, "tagged message 's t_1 ... t_k'");
  TaggedMessage msg;
  for (std::size_t j = 0; j <= k; ++j) {
    const std::int64_t v = l.tokens[j].value;
    if (!field.contains(v)) {
      r.fail(l, j,
             std::to_string(v) + " is not in [0," +
                 std::to_string(field.modulus()) + ")");
    }
    if (j == 0) {
      msg.message = static_cast<Residue>(v);
    } else {
      msg.tag.push_back(static_cast<Residue>(v));
    }
  }
  r.expect_end();
  return msg;
}

std::string format_tagged_message(const TaggedMessage& msg) {
  std::string out = std::to_string(msg.message);
  for (Residue t : msg.tag) out += ' ' + std::to_string(t);
  return out;
}

std::map<std::string, std::string> parse_scenario(std::string_view text,
                                                  const std::string& source) {
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return std::string_view();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  std::map<std::string, std::string> out;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view l = raw;
    if (const auto hash = l.find('#'); hash != std::string_view::npos)
      l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(source, number, 0, "expected 'key = value'");
    const std::string key(trim(l.substr(0, eq)));
    if (key.empty()) throw ParseError(source, number, 1, "empty key");
    if (!out.emplace(key, std::string(trim(l.substr(eq + 1)))).second)
      throw ParseError(source, number, 1, "duplicate key '" + key + "'");
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text,
                                         const std::string& what) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::kParse, what + ": '" + std::string(item) +
                                         "' is not an integer");
    }
    out.push_back(v);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string format_vector(std::span<const Residue> v) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) out += ' ';
    out += std::to_string(v[j]);
  }
  return out;
}

}  // namespace authcode::io
