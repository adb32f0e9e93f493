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

#ifndef GKG_EMBEDDING_H_
#define GKG_EMBEDDING_H_

#include <atomic>
#include <cstdint>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gkg/schema.h"

namespace gkg {

// Dense real vector. Provider outputs are unit length, except the zero
// vector that stands for an empty phrase.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : values_(dim, 0.0) {}
  explicit Vector(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t dim() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double &operator[](std::size_t i) { return values_[i]; }
  std::span<const double> values() const { return values_; }

  Vector &operator+=(const Vector &other);
  Vector &operator*=(double scale);
  Vector operator-() const;

  double Norm() const;
  bool IsZero() const;
  // Unit-length copy; the zero vector stays zero.
  Vector Normalized() const;

  friend bool operator==(const Vector &, const Vector &) = default;

 private:
  std::vector<double> values_;
};

double Dot(const Vector &a, const Vector &b);

// dot(u, v) / (|u| |v|) clamped to [-1, 1]; 0 when either side is zero.
double Cosine(const Vector &u, const Vector &v);

// Deterministic, total map from token to unit vector.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::size_t dim() const = 0;
  // Throws kEmptyToken for "".
  virtual Vector EmbedToken(std::string_view token) const = 0;
};

// Seeds SplitMix64 with FNV-1a-64(token) ^ seed, draws `dim` values in
// [-1, 1) and normalizes. Bit-identical on every platform.
class HashEmbeddingProvider : public EmbeddingProvider {
 public:
  HashEmbeddingProvider(std::uint64_t seed, std::size_t dim);

  std::size_t dim() const override { return dim_; }
  Vector EmbedToken(std::string_view token) const override;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::size_t dim_;
};

// Word vectors read from text: an optional `count dim` header, then
// `token c1 ... cd` per line. Tokens missing from the file fall back to a
// HashEmbeddingProvider with `fallback_seed`; misses are counted.
class FileEmbeddingProvider : public EmbeddingProvider {
 public:
  // Throws kIo when the file cannot be opened, ParseError on bad lines.
  // `expected_dim` of 0 accepts whatever the file declares.
  static std::unique_ptr<FileEmbeddingProvider> Load(
      const std::string &path, std::uint64_t fallback_seed,
      std::size_t expected_dim = 0);
  static std::unique_ptr<FileEmbeddingProvider> Read(
      std::istream &in, std::uint64_t fallback_seed,
      std::size_t expected_dim = 0);

  std::size_t dim() const override { return dim_; }
  Vector EmbedToken(std::string_view token) const override;

  std::size_t vocabulary_size() const { return vectors_.size(); }
  std::uint64_t misses() const { return misses_.load(); }

 private:
  FileEmbeddingProvider(std::size_t dim, std::uint64_t fallback_seed)
      : dim_(dim), fallback_(fallback_seed, dim) {}

  std::size_t dim_;
  HashEmbeddingProvider fallback_;
  std::unordered_map<std::string, Vector> vectors_;
  mutable std::atomic<std::uint64_t> misses_{0};
};

// Normalized sum of token vectors; zero vector when there are no tokens.
Vector EmbedPhrase(const EmbeddingProvider &provider, std::string_view label);

// normalize(phrase(e1) + phrase(r) + phrase(e2)).
Vector EmbedFlatTriple(const EmbeddingProvider &provider,
                       const FlatTriple &triple);

}  // namespace gkg

#endif  // GKG_EMBEDDING_H_
