#include "lcw/tensor.hpp"
#include "lcw/vec.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lcw {

TensorTable::TensorTable(int rank, int dim) : rank_(rank), dim_(dim) {
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
  a_.assign(n, Rat(0));
}

std::size_t TensorTable::offset(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != rank_) throw std::out_of_range("tensor index rank mismatch");
  std::size_t off = 0;
  for (int i = 0; i < rank_; ++i) {
    if (idx[i] < 0 || idx[i] >= dim_) throw std::out_of_range("tensor index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx[i]);
  }
  return off;
}

Rat& TensorTable::at(const std::vector<int>& idx) { return a_[offset(idx)]; }
const Rat& TensorTable::at(const std::vector<int>& idx) const { return a_[offset(idx)]; }
Rat& TensorTable::at(std::initializer_list<int> idx) { return a_[offset(std::vector<int>(idx))]; }
const Rat& TensorTable::at(std::initializer_list<int> idx) const {
  return a_[offset(std::vector<int>(idx))];
}

bool TensorTable::next_index(std::vector<int>& idx) const {
  for (int i = rank_ - 1; i >= 0; --i) {
    if (++idx[i] < dim_) return true;
    idx[i] = 0;
  }
  return false;
}

bool TensorTable::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& v) { return v == 0; });
}

bool TensorTable::operator==(const TensorTable& o) const {
  return rank_ == o.rank_ && dim_ == o.dim_ && a_ == o.a_;
}

TensorTable TensorTable::operator+(const TensorTable& o) const {
  TensorTable out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

TensorTable TensorTable::operator-(const TensorTable& o) const {
  TensorTable out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

TensorTable TensorTable::scaled(const Rat& k) const {
  TensorTable out(*this);
  for (auto& v : out.a_) v *= k;
  return out;
}

Rat TensorTable::frobenius_sq() const {
  Rat s = 0;
  for (const auto& v : a_) s += v * v;
  return s;
}

bool TensorTable::check_tags() const {
  for (const auto& tag : tags) {
    if (tag.indices.size() < 2) continue;
    // Swapping any adjacent pair inside the tagged set must hold entrywise.
    std::vector<int> idx(rank_, 0);
    do {
      for (std::size_t p = 0; p + 1 < tag.indices.size(); ++p) {
        std::vector<int> sw(idx);
        std::swap(sw[tag.indices[p]], sw[tag.indices[p + 1]]);
        const Rat& lhs = at(idx);
        const Rat& rhs = at(sw);
        if (tag.anti ? (lhs != -rhs) : (lhs != rhs)) return false;
      }
    } while (next_index(idx));
  }
  return true;
}

namespace {

int permutation_sign(std::vector<int> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    while (perm[i] != static_cast<int>(i)) {
      std::swap(perm[i], perm[perm[i]]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

TensorTable antisymmetrize(const TensorTable& t, const std::vector<int>& positions) {
  for (int p : positions)
    if (p < 0 || p >= t.rank()) throw std::out_of_range("antisymmetrize: index out of range");
  std::vector<int> perm(positions.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> perms;
  std::sort(perm.begin(), perm.end());
  do {
    perms.emplace_back(perm, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  TensorTable out(t.rank(), t.dim());
  Rat inv_count = Rat(1, static_cast<long>(perms.size()));
  std::vector<int> idx(t.rank(), 0);
  do {
    Rat acc = 0;
    std::vector<int> src(idx);
    for (const auto& [p, sgn] : perms) {
      for (std::size_t i = 0; i < positions.size(); ++i)
        src[positions[i]] = idx[positions[p[i]]];
      acc += sgn > 0 ? t.at(src) : -t.at(src);
    }
    out.at(idx) = acc * inv_count;
  } while (out.next_index(idx));
  out.tags.push_back({true, positions});
  return out;
}

TensorTable wedge(const TensorTable& a, const TensorTable& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  int dim = a.dim(), k = a.rank(), l = b.rank();
  if (k + l > dim) return TensorTable(dim, dim);  // overflow: zero form
  TensorTable prod(k + l, dim);
  std::vector<int> idx(k + l, 0);
  do {
    std::vector<int> ia(idx.begin(), idx.begin() + k), ib(idx.begin() + k, idx.end());
    prod.at(idx) = a.at(ia) * b.at(ib);
  } while (prod.next_index(idx));
  std::vector<int> all(k + l);
  std::iota(all.begin(), all.end(), 0);
  return antisymmetrize(prod, all);
}

TensorTable one_form(const RVec& v) {
  TensorTable t(1, static_cast<int>(v.size()));
  for (int i = 0; i < t.dim(); ++i) t.at({i}) = v[i];
  return t;
}

TensorTable two_form_from_skew(const RMat& m) {
  if (!is_skew(m)) throw std::invalid_argument("two_form_from_skew: matrix not skew");
  int n = static_cast<int>(m.size());
  TensorTable t(2, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) t.at({j, k}) = m[j][k];
  t.tags.push_back({true, {0, 1}});
  return t;
}

}  // namespace lcw
