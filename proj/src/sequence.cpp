#include "fejerlab/sequence.hpp"

#include "fejerlab/error.hpp"

namespace fejer {

std::vector<Vector> Sequence::prefix(std::size_t count) const {
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(term(n));
  return out;
}

Vector TermList::term(std::size_t n) const {
  if (n >= terms_.size())
    throw Error(ErrorKind::InvalidInput,
                "term " + std::to_string(n) + " requested from a list of " +
                    std::to_string(terms_.size()));
  return terms_[n];
}

std::optional<std::size_t> StridedSequence::length() const {
  auto l = base_.length();
  if (!l) return std::nullopt;
  if (*l <= offset_) return 0;
  return (*l - offset_ + stride_ - 1) / stride_;
}

void require_terms(const Sequence& seq, std::size_t needed, const std::string& what) {
  if (auto l = seq.length(); l && *l < needed)
    throw Error(ErrorKind::InvalidInput, what + " needs " + std::to_string(needed) +
                                             " terms but the sequence has " + std::to_string(*l));
}

DistinctSubsequence distinct_subsequence(const Sequence& seq, std::size_t horizon) {
  if (horizon < 1) throw Error(ErrorKind::InvalidInput, "horizon must be >= 1");
  require_terms(seq, horizon, "distinct_subsequence");
  DistinctSubsequence out;
  out.indices.push_back(0);
  Vector last = seq.term(0);
  for (std::size_t n = 1; n < horizon; ++n) {
    Vector x = seq.term(n);
    if (!(x == last)) {
      out.indices.push_back(n);
      last = std::move(x);
    }
  }
  // constant from the last kept index through the horizon
  out.eventually_constant = out.indices.back() + 1 < horizon;
  return out;
}

}  // namespace fejer
