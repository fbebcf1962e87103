#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xha {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite group given by labels and a multiplication table of indices.
/// The table is validated (associativity, identity, inverses) at construction.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<long>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(long n);   // labels g0..g{n-1}
  static FiniteGroup symmetric3();     // e, r, r2, s, sr, sr2 with r^3 = s^2 = e, s r s = r^-1

  long order() const { return static_cast<long>(labels_.size()); }
  long identity() const { return identity_; }
  long mul(long a, long b) const { return table_[a][b]; }
  long inv(long a) const { return inverse_[a]; }
  long conj(long b, long a) const { return mul(mul(b, a), inv(b)); }  // b a b^-1
  bool is_abelian() const;

  const std::string& label(long i) const { return labels_[i]; }
  std::optional<long> index_of(const std::string& label) const;
  const std::vector<std::vector<long>>& table() const { return table_; }

  bool operator==(const FiniteGroup& o) const { return labels_ == o.labels_ && table_ == o.table_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<long>> table_;
  std::vector<long> inverse_;
  long identity_;
};

}  // namespace xha
