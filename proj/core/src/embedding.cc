// Copyright 2026 The GKG Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkg/embedding.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "gkg/error.h"
#include "gkg/text.h"

namespace gkg {

Vector &Vector::operator+=(const Vector &other) {
  if (values_.empty()) values_.assign(other.dim(), 0.0);
  if (other.dim() != dim()) {
    throw Error(ErrorCode::kInvalidArgument, "vector dimension mismatch");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other[i];
  return *this;
}

Vector &Vector::operator*=(double scale) {
  for (double &v : values_) v *= scale;
  return *this;
}

Vector Vector::operator-() const {
  Vector out = *this;
  out *= -1.0;
  return out;
}

double Vector::Norm() const { return std::sqrt(Dot(*this, *this)); }

bool Vector::IsZero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return v == 0.0; });
}

Vector Vector::Normalized() const {
  double n = Norm();
  Vector out = *this;
  if (n > 0.0) out *= 1.0 / n;
  return out;
}

double Dot(const Vector &a, const Vector &b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kInvalidArgument, "vector dimension mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

double Cosine(const Vector &u, const Vector &v) {
  double nu = u.Norm();
  double nv = v.Norm();
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::clamp(Dot(u, v) / (nu * nv), -1.0, 1.0);
}

HashEmbeddingProvider::HashEmbeddingProvider(std::uint64_t seed,
                                             std::size_t dim)
    : seed_(seed), dim_(dim) {
  if (dim == 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be > 0");
}

Vector HashEmbeddingProvider::EmbedToken(std::string_view token) const {
  if (token.empty()) throw Error(ErrorCode::kEmptyToken, "empty token");
  SplitMix64 rng(Fnv1a64(token) ^ seed_);
  Vector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = rng.NextSigned();
  return v.Normalized();
}

std::unique_ptr<FileEmbeddingProvider> FileEmbeddingProvider::Load(
    const std::string &path, std::uint64_t fallback_seed,
    std::size_t expected_dim) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return Read(in, fallback_seed, expected_dim);
}

std::unique_ptr<FileEmbeddingProvider> FileEmbeddingProvider::Read(
    std::istream &in, std::uint64_t fallback_seed, std::size_t expected_dim) {
  auto parse_double = [](std::string_view f, int line) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
    if (ec != std::errc() || ptr != f.data() + f.size() ||
        !std::isfinite(value)) {
      throw ParseError(ErrorCode::kSyntaxError, line,
                       "bad number '" + std::string(f) + "'");
    }
    return value;
  };
  auto parse_size = [](std::string_view f, std::size_t &out) {
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
    return ec == std::errc() && ptr == f.data() + f.size();
  };

  std::unordered_map<std::string, Vector> vectors;
  std::size_t dim = 0;
  std::size_t declared_count = 0;
  bool first = true;
  int line_no = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string_view> f = SplitFields(line);
    if (f.empty()) continue;
    if (first) {
      first = false;
      std::size_t count = 0, d = 0;
      if (f.size() == 2 && parse_size(f[0], count) && parse_size(f[1], d)) {
        if (d == 0) throw ParseError(ErrorCode::kSyntaxError, line_no, "zero dimension");
        declared_count = count;
        dim = d;
        continue;
      }
    }
    if (dim == 0) dim = f.size() - 1;
    if (dim == 0 || f.size() != dim + 1) {
      throw ParseError(ErrorCode::kSyntaxError, line_no,
                       "expected a token and " + std::to_string(dim) +
                           " components");
    }
    std::vector<double> values;
    values.reserve(dim);
    for (std::size_t i = 1; i < f.size(); ++i) {
      values.push_back(parse_double(f[i], line_no));
    }
    Vector v(std::move(values));
    if (v.IsZero()) {
      throw ParseError(ErrorCode::kSyntaxError, line_no, "zero vector");
    }
    vectors.insert_or_assign(std::string(f[0]), v.Normalized());
  }
  if (dim == 0) throw Error(ErrorCode::kSyntaxError, "no vectors in file");
  if (declared_count != 0 && declared_count != vectors.size()) {
    throw Error(ErrorCode::kSyntaxError,
                "header declares " + std::to_string(declared_count) +
                    " vectors, file has " + std::to_string(vectors.size()));
  }
  if (expected_dim != 0 && expected_dim != dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "file dimension " + std::to_string(dim) + " != requested " +
                    std::to_string(expected_dim));
  }
  std::unique_ptr<FileEmbeddingProvider> p(
      new FileEmbeddingProvider(dim, fallback_seed));
  p->vectors_ = std::move(vectors);
  return p;
}

Vector FileEmbeddingProvider::EmbedToken(std::string_view token) const {
  if (token.empty()) throw Error(ErrorCode::kEmptyToken, "empty token");
  auto it = vectors_.find(std::string(token));
  if (it != vectors_.end()) return it->second;
  misses_.fetch_add(1);
  return fallback_.EmbedToken(token);
}

Vector EmbedPhrase(const EmbeddingProvider &provider, std::string_view label) {
  Vector sum(provider.dim());
  for (const std::string &token : Tokenize(label)) {
    sum += provider.EmbedToken(token);
  }
  return sum.Normalized();
}

Vector EmbedFlatTriple(const EmbeddingProvider &provider,
                       const FlatTriple &triple) {
  Vector sum = EmbedPhrase(provider, triple.e1);
  sum += EmbedPhrase(provider, triple.r);
  sum += EmbedPhrase(provider, triple.e2);
  return sum.Normalized();
}

}  // namespace gkg
