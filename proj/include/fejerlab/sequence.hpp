#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fejerlab/hilbert.hpp"

namespace fejer {

// Read-only accessor for x_0, x_1, ...; implementations must be safe for concurrent term() calls.
class Sequence {
 public:
  virtual ~Sequence() = default;
  virtual Vector term(std::size_t n) const = 0;
  // Number of available terms for finite term lists.
  virtual std::optional<std::size_t> length() const { return std::nullopt; }
  std::vector<Vector> prefix(std::size_t count) const;
};

class TermList : public Sequence {
 public:
  explicit TermList(std::vector<Vector> terms) : terms_(std::move(terms)) {}
  Vector term(std::size_t n) const override;
  std::optional<std::size_t> length() const override { return terms_.size(); }
  const std::vector<Vector>& terms() const { return terms_; }

 private:
  std::vector<Vector> terms_;
};

class FunctionSequence : public Sequence {
 public:
  explicit FunctionSequence(std::function<Vector(std::size_t)> f) : f_(std::move(f)) {}
  Vector term(std::size_t n) const override { return f_(n); }

 private:
  std::function<Vector(std::size_t)> f_;
};

// n -> base.term(offset + stride * n)
class StridedSequence : public Sequence {
 public:
  StridedSequence(const Sequence& base, std::size_t stride, std::size_t offset = 0)
      : base_(base), stride_(stride), offset_(offset) {}
  Vector term(std::size_t n) const override { return base_.term(offset_ + stride_ * n); }
  std::optional<std::size_t> length() const override;

 private:
  const Sequence& base_;
  std::size_t stride_, offset_;
};

// Throws InvalidInput when the sequence has fewer than `needed` terms.
void require_terms(const Sequence& seq, std::size_t needed, const std::string& what);

struct DistinctSubsequence {
  std::vector<std::size_t> indices;
  bool eventually_constant = false;
};

// n_0 = 0, then each first index whose term differs from the previous kept term.
DistinctSubsequence distinct_subsequence(const Sequence& seq, std::size_t horizon);

}  // namespace fejer
