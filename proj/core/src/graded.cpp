#include "frobpair/graded.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace frobpair {

namespace {

Dims convolve(const Dims& a, const Dims& b) {
  Dims r;
  for (const auto& [da, na] : a) {
    for (const auto& [db, nb] : b) {
      r[da + db] += na * nb;
    }
  }
  return r;
}

void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* op) {
  if (a != b) {
    throw FieldMismatchError(std::string(op) + ": fields differ: " + a.str() + " vs " + b.str());
  }
}

}  // namespace

GradedObj::GradedObj(FieldSpec field, std::vector<Dims> factors)
    : field_(field), factors_(std::move(factors)) {
  dims_ = Dims{{0, 1}};
  for (const auto& f : factors_) dims_ = convolve(dims_, f);
}

GradedObj GradedObj::unit(const FieldSpec& field) { return GradedObj(field, {}); }

GradedObj GradedObj::atom(const FieldSpec& field, const Dims& dims) {
  for (const auto& [d, n] : dims) {
    if (n <= 0) {
      throw Error("GradedObj::atom: dimension at degree " + std::to_string(d) +
                  " must be positive, got " + std::to_string(n));
    }
  }
  return GradedObj(field, {dims});
}

int GradedObj::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

int GradedObj::total_dim() const {
  int t = 0;
  for (const auto& [d, n] : dims_) t += n;
  return t;
}

std::string GradedObj::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [d, n] : dims_) {
    if (!first) os << ", ";
    first = false;
    os << d << ":" << n;
  }
  os << "}";
  return os.str();
}

GradedObj tensor_obj(const GradedObj& a, const GradedObj& b) {
  require_same_field(a.field(), b.field(), "tensor_obj");
  std::vector<Dims> w = a.factors_;
  w.insert(w.end(), b.factors_.begin(), b.factors_.end());
  return GradedObj(a.field(), std::move(w));
}

GradedObj dual_obj(const GradedObj& a) {
  Dims r;
  for (const auto& [d, n] : a.dims()) r[-d] = n;
  return GradedObj::atom(a.field(), r);
}

namespace {

// Suffix degree ranges for pruning the tuple enumeration.
struct SuffixRange {
  std::vector<int> min_deg, max_deg;  // over factors [i..end)
};

SuffixRange suffix_ranges(const std::vector<Dims>& factors) {
  SuffixRange r;
  std::size_t k = factors.size();
  r.min_deg.assign(k + 1, 0);
  r.max_deg.assign(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) {
    if (factors[i].empty()) {
      // Zero factor: nothing is enumerable; ranges become empty via flags below.
      r.min_deg[i] = 1;
      r.max_deg[i] = 0;
    } else {
      int lo = factors[i].begin()->first;
      int hi = factors[i].rbegin()->first;
      r.min_deg[i] = lo + r.min_deg[i + 1];
      r.max_deg[i] = hi + r.max_deg[i + 1];
    }
    if (r.min_deg[i + 1] > r.max_deg[i + 1]) {
      r.min_deg[i] = 1;
      r.max_deg[i] = 0;
    }
  }
  return r;
}

void enumerate_rec(const std::vector<Dims>& factors, const SuffixRange& rng, std::size_t i,
                   int remaining, BasisKey& cur, std::vector<BasisKey>& out) {
  if (i == factors.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (rng.min_deg[i] > rng.max_deg[i]) return;
  for (const auto& [d, n] : factors[i]) {
    int rest = remaining - d;
    if (rest < rng.min_deg[i + 1] || rest > rng.max_deg[i + 1]) continue;
    for (int a = 0; a < n; ++a) {
      cur.emplace_back(d, a);
      enumerate_rec(factors, rng, i + 1, rest, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<BasisKey> graded_basis(const GradedObj& obj, int degree) {
  std::vector<BasisKey> out;
  const auto& factors = obj.factors();
  if (factors.empty()) {
    if (degree == 0) out.push_back({});
    return out;
  }
  SuffixRange rng = suffix_ranges(factors);
  BasisKey cur;
  cur.reserve(factors.size());
  enumerate_rec(factors, rng, 0, degree, cur, out);
  return out;
}

int basis_index(const GradedObj& obj, int degree, const BasisKey& key) {
  auto basis = graded_basis(obj, degree);
  auto it = std::lower_bound(basis.begin(), basis.end(), key);
  if (it == basis.end() || *it != key) {
    throw RangeError("basis_index: tuple not in the degree-" + std::to_string(degree) +
                     " basis of " + obj.str());
  }
  return static_cast<int>(it - basis.begin());
}

// ---- Mor ----

Mor Mor::zero(const GradedObj& dom, const GradedObj& cod) {
  require_same_field(dom.field(), cod.field(), "Mor");
  return Mor(dom, cod);
}

Mor Mor::from_blocks(const GradedObj& dom, const GradedObj& cod, std::map<int, Matrix> blocks) {
  Mor m = zero(dom, cod);
  for (auto& [d, blk] : blocks) {
    int rd = cod.dim(d), cd = dom.dim(d);
    if (rd == 0 || cd == 0) {
      throw ShapeError("Mor: block at degree " + std::to_string(d) +
                       " where an object has dimension 0 (dom " + dom.str() + ", cod " +
                       cod.str() + ")");
    }
    if (blk.rows() != static_cast<std::size_t>(rd) || blk.cols() != static_cast<std::size_t>(cd)) {
      throw ShapeError("Mor: block at degree " + std::to_string(d) + " has shape " +
                       std::to_string(blk.rows()) + "x" + std::to_string(blk.cols()) +
                       ", expected " + std::to_string(rd) + "x" + std::to_string(cd));
    }
    if (blk.field() != dom.field()) {
      throw FieldMismatchError("Mor: block field differs from object field");
    }
    if (!blk.is_zero()) m.blocks_.emplace(d, std::move(blk));
  }
  return m;
}

const Matrix* Mor::block(int degree) const {
  auto it = blocks_.find(degree);
  return it == blocks_.end() ? nullptr : &it->second;
}

Matrix Mor::block_or_zero(int degree) const {
  if (const Matrix* b = block(degree)) return *b;
  return Matrix(cod_.dim(degree), dom_.dim(degree), field());
}

Scalar Mor::entry(int degree, int row, int col) const {
  int rd = cod_.dim(degree), cd = dom_.dim(degree);
  if (row < 0 || col < 0 || row >= rd || col >= cd) {
    throw RangeError("Mor::entry: coordinate (deg " + std::to_string(degree) + ", row " +
                     std::to_string(row) + ", col " + std::to_string(col) +
                     ") outside block of shape " + std::to_string(rd) + "x" + std::to_string(cd));
  }
  if (const Matrix* b = block(degree)) return b->at(row, col);
  return Scalar::zero(field());
}

Mor Mor::with_entry(int degree, int row, int col, const Scalar& v) const {
  entry(degree, row, col);  // bounds check
  Matrix blk = block_or_zero(degree);
  blk.set(row, col, v);
  std::map<int, Matrix> blocks;
  for (const auto& [d, b] : blocks_) {
    if (d != degree) blocks.emplace(d, b);
  }
  if (!blk.is_zero()) blocks.emplace(degree, std::move(blk));
  return from_blocks(dom_, cod_, std::move(blocks));
}

Mor identity(const GradedObj& a) {
  std::map<int, Matrix> blocks;
  for (const auto& [d, n] : a.dims()) blocks.emplace(d, Matrix::identity(n, a.field()));
  return Mor::from_blocks(a, a, std::move(blocks));
}

Mor compose(const Mor& f, const Mor& g) {
  require_same_field(f.field(), g.field(), "compose");
  if (f.dom() != g.cod()) {
    throw ShapeError("compose: dom of left factor " + f.dom().str() +
                     " differs from cod of right factor " + g.cod().str());
  }
  std::map<int, Matrix> blocks;
  for (const auto& [d, fb] : f.blocks()) {
    const Matrix* gb = g.block(d);
    if (!gb) continue;
    Matrix p = fb.mul(*gb);
    if (!p.is_zero()) blocks.emplace(d, std::move(p));
  }
  return Mor::from_blocks(g.dom(), f.cod(), std::move(blocks));
}

namespace {

// Rows/cols of a concatenated word at a fixed degree, grouped by the degree
// of the left part. split = number of factors in the left word.
struct SeamIndex {
  // left-part degree -> list of (flat index, left index, right index)
  std::map<int, std::vector<std::array<int, 3>>> by_left_degree;
};

SeamIndex seam_index(const GradedObj& whole, const GradedObj& left, const GradedObj& right,
                     int degree) {
  SeamIndex out;
  std::size_t split = left.factors().size();
  auto basis = graded_basis(whole, degree);
  // Per-left-degree index maps, built lazily from the sub-bases.
  std::map<int, std::map<BasisKey, int>> lidx, ridx;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    BasisKey lk(basis[i].begin(), basis[i].begin() + split);
    BasisKey rk(basis[i].begin() + split, basis[i].end());
    int ldeg = 0;
    for (const auto& [d, a] : lk) ldeg += d;
    auto& lm = lidx[ldeg];
    if (lm.empty()) {
      auto lb = graded_basis(left, ldeg);
      for (std::size_t j = 0; j < lb.size(); ++j) lm[lb[j]] = static_cast<int>(j);
    }
    auto& rm = ridx[degree - ldeg];
    if (rm.empty()) {
      auto rb = graded_basis(right, degree - ldeg);
      for (std::size_t j = 0; j < rb.size(); ++j) rm[rb[j]] = static_cast<int>(j);
    }
    out.by_left_degree[ldeg].push_back(
        {static_cast<int>(i), lm.at(lk), rm.at(rk)});
  }
  return out;
}

}  // namespace

Mor tensor_mor(const Mor& f, const Mor& g) {
  require_same_field(f.field(), g.field(), "tensor_mor");
  GradedObj dom = tensor_obj(f.dom(), g.dom());
  GradedObj cod = tensor_obj(f.cod(), g.cod());
  std::map<int, Matrix> blocks;
  for (const auto& [d, nd] : dom.dims()) {
    if (cod.dim(d) == 0) continue;
    SeamIndex di = seam_index(dom, f.dom(), g.dom(), d);
    SeamIndex ci = seam_index(cod, f.cod(), g.cod(), d);
    Matrix m(cod.dim(d), nd, f.field());
    bool nonzero = false;
    for (const auto& [e, cols] : di.by_left_degree) {
      const Matrix* fb = f.block(e);
      const Matrix* gb = g.block(d - e);
      if (!fb || !gb) continue;
      auto rows_it = ci.by_left_degree.find(e);
      if (rows_it == ci.by_left_degree.end()) continue;
      for (const auto& [ri, rf, rg] : rows_it->second) {
        for (const auto& [cj, cf, cg] : cols) {
          Scalar v = fb->at(rf, cf) * gb->at(rg, cg);
          if (!v.is_zero()) {
            m.set(ri, cj, std::move(v));
            nonzero = true;
          }
        }
      }
    }
    if (nonzero) blocks.emplace(d, std::move(m));
  }
  return Mor::from_blocks(dom, cod, std::move(blocks));
}

Mor symmetry(const GradedObj& a, const GradedObj& b) {
  require_same_field(a.field(), b.field(), "symmetry");
  GradedObj dom = tensor_obj(a, b);
  GradedObj cod = tensor_obj(b, a);
  const FieldSpec& field = a.field();
  std::size_t split = a.factors().size();
  std::map<int, Matrix> blocks;
  for (const auto& [d, nd] : dom.dims()) {
    auto basis = graded_basis(dom, d);
    std::map<BasisKey, int> cod_idx;
    {
      auto cb = graded_basis(cod, d);
      for (std::size_t j = 0; j < cb.size(); ++j) cod_idx[cb[j]] = static_cast<int>(j);
    }
    Matrix m(nd, nd, field);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      BasisKey lk(basis[c].begin(), basis[c].begin() + split);
      BasisKey rk(basis[c].begin() + split, basis[c].end());
      long long ldeg = 0, rdeg = 0;
      for (const auto& [dd, ai] : lk) ldeg += dd;
      for (const auto& [dd, ai] : rk) rdeg += dd;
      BasisKey swapped = rk;
      swapped.insert(swapped.end(), lk.begin(), lk.end());
      int r = cod_idx.at(swapped);
      Scalar sign = ((ldeg * rdeg) % 2 == 0) ? Scalar::one(field) : -Scalar::one(field);
      m.set(r, c, std::move(sign));
    }
    blocks.emplace(d, std::move(m));
  }
  return Mor::from_blocks(dom, cod, std::move(blocks));
}

Mor invert(const Mor& f) {
  if (f.dom().dims() != f.cod().dims()) {
    throw ShapeError("invert: dom " + f.dom().str() + " and cod " + f.cod().str() +
                     " have different dims");
  }
  std::map<int, Matrix> blocks;
  for (const auto& [d, n] : f.dom().dims()) {
    const Matrix* b = f.block(d);
    if (!b) {
      throw SingularError("invert: zero block at degree " + std::to_string(d), d);
    }
    auto inv = b->inverse();
    if (!inv) {
      throw SingularError("invert: block at degree " + std::to_string(d) + " is singular", d);
    }
    blocks.emplace(d, std::move(*inv));
  }
  return Mor::from_blocks(f.cod(), f.dom(), std::move(blocks));
}

namespace {

void require_parallel(const Mor& f, const Mor& g, const char* op) {
  require_same_field(f.field(), g.field(), op);
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw ShapeError(std::string(op) + ": morphisms are not parallel: " + f.dom().str() + "->" +
                     f.cod().str() + " vs " + g.dom().str() + "->" + g.cod().str());
  }
}

}  // namespace

std::optional<EntryDiff> first_difference(const Mor& f, const Mor& g) {
  require_parallel(f, g, "first_difference");
  for (const auto& [d, n] : f.dom().dims()) {
    int rows = f.cod().dim(d);
    if (rows == 0) continue;
    const Matrix* fb = f.block(d);
    const Matrix* gb = g.block(d);
    if (!fb && !gb) continue;
    Matrix fm = f.block_or_zero(d);
    Matrix gm = g.block_or_zero(d);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < n; ++c) {
        if (fm.at(r, c) != gm.at(r, c)) {
          return EntryDiff{d, r, c, fm.at(r, c), gm.at(r, c)};
        }
      }
    }
  }
  return std::nullopt;
}

bool equal(const Mor& f, const Mor& g) { return !first_difference(f, g).has_value(); }

}  // namespace frobpair
