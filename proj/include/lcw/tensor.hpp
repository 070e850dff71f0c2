#pragma once
#include "lcw/rat.hpp"

#include <initializer_list>
#include <vector>

namespace lcw {

// Declared index symmetry of a tensor, checked entrywise on demand.
struct SymTag {
  bool anti = false;
  std::vector<int> indices;
};

// Dense rational array with small rank and dimension. Multi-indices are
// row-major with the first index slowest.
class TensorTable {
 public:
  TensorTable() = default;
  TensorTable(int rank, int dim);

  int rank() const { return rank_; }
  int dim() const { return dim_; }

  Rat& at(const std::vector<int>& idx);
  const Rat& at(const std::vector<int>& idx) const;
  Rat& at(std::initializer_list<int> idx);
  const Rat& at(std::initializer_list<int> idx) const;

  const std::vector<Rat>& raw() const { return a_; }
  std::vector<Rat>& raw() { return a_; }

  std::vector<SymTag> tags;
  bool check_tags() const;

  bool is_zero() const;
  bool operator==(const TensorTable& o) const;

  TensorTable operator+(const TensorTable& o) const;
  TensorTable operator-(const TensorTable& o) const;
  TensorTable scaled(const Rat& k) const;

  // Sum of squares of all entries.
  Rat frobenius_sq() const;

  // Enumerates multi-indices; idx must start zeroed. Returns false after the
  // last index.
  bool next_index(std::vector<int>& idx) const;

 private:
  int rank_ = 0, dim_ = 0;
  std::vector<Rat> a_;
  std::size_t offset(const std::vector<int>& idx) const;
};

// Alt projection over the given index positions (1/k! normalization).
// Idempotent; the result carries an antisymmetry tag over those positions.
TensorTable antisymmetrize(const TensorTable& t, const std::vector<int>& positions);

// Fully antisymmetric forms under the same 1/k! convention. Degree overflow
// (k + l > dim) yields the zero form of clamped rank.
TensorTable wedge(const TensorTable& a, const TensorTable& b);

TensorTable one_form(const RVec& v);
// 2-form with entries m[j][k] (m must be skew).
TensorTable two_form_from_skew(const RMat& m);

}  // namespace lcw
