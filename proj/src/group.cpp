#include "xha/group.hpp"

namespace xha {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<long>> table)
    : labels_(std::move(labels)), table_(std::move(table)), identity_(-1) {
  const long n = static_cast<long>(labels_.size());
  if (n == 0) throw GroupError("group must be nonempty");
  if (static_cast<long>(table_.size()) != n) throw GroupError("multiplication table has wrong row count");
  for (const auto& row : table_) {
    if (static_cast<long>(row.size()) != n) throw GroupError("multiplication table has wrong column count");
    for (long v : row)
      if (v < 0 || v >= n) throw GroupError("multiplication table entry out of range");
  }
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (labels_[i] == labels_[j] && i != j) throw GroupError("duplicate element label: " + labels_[i]);
  for (long e = 0; e < n; ++e) {
    bool ok = true;
    for (long a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw GroupError("multiplication table has no identity element");
  inverse_.assign(n, -1);
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw GroupError("element has no inverse: " + labels_[a]);
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw GroupError("multiplication table is not associative at (" + labels_[a] + "," + labels_[b] + "," +
                           labels_[c] + ")");
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"e"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(long n) {
  std::vector<std::string> labels;
  std::vector<std::vector<long>> table(n, std::vector<long>(n));
  for (long i = 0; i < n; ++i) {
    labels.push_back("g" + std::to_string(i));
    for (long j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Elements as pairs (s^b r^a), encoded b*3 + a, with r^3 = s^2 = e and r s = s r^2.
  auto enc = [](long b, long a) { return b * 3 + a; };
  std::vector<std::string> labels = {"e", "r", "r2", "s", "sr", "sr2"};
  std::vector<std::vector<long>> table(6, std::vector<long>(6));
  for (long b1 = 0; b1 < 2; ++b1)
    for (long a1 = 0; a1 < 3; ++a1)
      for (long b2 = 0; b2 < 2; ++b2)
        for (long a2 = 0; a2 < 3; ++a2) {
          // (s^b1 r^a1)(s^b2 r^a2) = s^{b1+b2} r^{a1*(-1)^{b2} + a2}
          long a = ((b2 ? -a1 : a1) + a2) % 3;
          if (a < 0) a += 3;
          table[enc(b1, a1)][enc(b2, a2)] = enc((b1 + b2) % 2, a);
        }
  return FiniteGroup(std::move(labels), std::move(table));
}

bool FiniteGroup::is_abelian() const {
  for (long a = 0; a < order(); ++a)
    for (long b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<long> FiniteGroup::index_of(const std::string& label) const {
  for (long i = 0; i < order(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

}  // namespace xha
