#pragma once

#include <map>
#include <optional>
#include <vector>

#include "frobpair/matrix.hpp"

namespace frobpair {

/// degree -> dimension, every stored dimension positive.
using Dims = std::map<int, int>;

/// A finitely supported graded vector space over an exact field.
///
/// Internally an object is a word of atomic factors (each a Dims map); the
/// tensor product concatenates words, so iterated products are literally
/// associative and the empty word is a literal unit. The exposed contract is
/// the convolved dims map; two objects compare equal when their dims and
/// field agree.
///
/// Basis convention (normative for every matrix in the library): the degree-d
/// component of a word [A1,...,Ak] is enumerated by tuples
/// ((d1,a1),...,(dk,ak)) with sum(di) = d and ai < Ai.dims[di], in
/// lexicographic order. For a binary product this is lex order on
/// (left degree, left index, right index).
class GradedObj {
 public:
  /// The unit object: empty word; dims {0 -> 1}.
  static GradedObj unit(const FieldSpec& field);
  /// A single atomic factor. Entries with dimension <= 0 are rejected.
  static GradedObj atom(const FieldSpec& field, const Dims& dims);

  const FieldSpec& field() const { return field_; }
  const Dims& dims() const { return dims_; }
  int dim(int degree) const;
  int total_dim() const;
  bool is_zero() const { return dims_.empty(); }

  const std::vector<Dims>& factors() const { return factors_; }

  /// Dims-level equality (the spec's notion of object equality).
  bool operator==(const GradedObj& o) const {
    return field_ == o.field_ && dims_ == o.dims_;
  }
  bool operator!=(const GradedObj& o) const { return !(*this == o); }

  /// "{d1:n1, d2:n2, ...}" in ascending degree order.
  std::string str() const;

  friend GradedObj tensor_obj(const GradedObj& a, const GradedObj& b);

 private:
  GradedObj(FieldSpec field, std::vector<Dims> factors);
  FieldSpec field_ = FieldSpec::rationals();
  std::vector<Dims> factors_;
  Dims dims_;  // cached convolution of factors_
};

/// One basis element of a word: (degree, index) per factor.
using BasisKey = std::vector<std::pair<int, int>>;

/// All degree-d basis tuples of an object, in the normative order.
std::vector<BasisKey> graded_basis(const GradedObj& obj, int degree);

/// Flat index of a tuple within graded_basis(obj, degree); throws RangeError
/// if absent.
int basis_index(const GradedObj& obj, int degree, const BasisKey& key);

/// A degree-preserving linear map, stored as one exact matrix per degree.
/// Absent blocks are zero; all-zero blocks are never stored, so equal
/// morphisms have identical representations.
class Mor {
 public:
  static Mor zero(const GradedObj& dom, const GradedObj& cod);
  static Mor from_blocks(const GradedObj& dom, const GradedObj& cod,
                         std::map<int, Matrix> blocks);

  const GradedObj& dom() const { return dom_; }
  const GradedObj& cod() const { return cod_; }
  const FieldSpec& field() const { return dom_.field(); }
  const std::map<int, Matrix>& blocks() const { return blocks_; }

  const Matrix* block(int degree) const;
  Matrix block_or_zero(int degree) const;
  Scalar entry(int degree, int row, int col) const;
  /// New morphism with one entry replaced; throws RangeError when the
  /// coordinate is outside the block grid.
  Mor with_entry(int degree, int row, int col, const Scalar& v) const;

  bool is_zero() const { return blocks_.empty(); }

 private:
  Mor(GradedObj dom, GradedObj cod) : dom_(std::move(dom)), cod_(std::move(cod)) {}
  GradedObj dom_, cod_;
  std::map<int, Matrix> blocks_;
};

Mor identity(const GradedObj& a);

/// f after g (matrix product per degree); requires dom(f) = cod(g).
Mor compose(const Mor& f, const Mor& g);

GradedObj tensor_obj(const GradedObj& a, const GradedObj& b);

/// f (x) g in the normative basis order. Functorial and literally
/// associative; no Koszul signs appear (morphisms are degree 0).
Mor tensor_mor(const Mor& f, const Mor& g);

/// The signed swap A (x) B -> B (x) A: (u (x) v) -> (-1)^{|u||v|} (v (x) u).
Mor symmetry(const GradedObj& a, const GradedObj& b);

/// Grade reflection: dual(A).dims[d] = A.dims[-d]. Returns an atom.
GradedObj dual_obj(const GradedObj& a);

/// Exact two-sided inverse; throws SingularError carrying the first degree
/// whose block is not invertible. Requires dom and cod dims to coincide.
Mor invert(const Mor& f);

/// Exact entrywise equality, absent blocks read as zero; throws ShapeError
/// when dom/cod dims differ.
bool equal(const Mor& f, const Mor& g);

struct EntryDiff {
  int degree, row, col;
  Scalar lhs, rhs;
};

/// First differing entry between two parallel morphisms, scanning degrees
/// ascending then row-major; nullopt when equal.
std::optional<EntryDiff> first_difference(const Mor& f, const Mor& g);

}  // namespace frobpair
