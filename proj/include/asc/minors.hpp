#pragma once

// The coefficient matrix G = (g_{n,i}), exact minors, and the positivity
// checks built on them.

#include <string>
#include <utility>
#include <vector>

#include "asc/param_poly.hpp"
#include "asc/report.hpp"
#include "asc/setpair.hpp"

namespace asc {

using Matrix = std::vector<std::vector<ParamPoly>>;

enum class CoeffMethod { recurrence, young, setpair };

/// "recurrence", "young" or "setpair"; throws std::invalid_argument otherwise.
CoeffMethod coeff_method_by_name(const std::string& name);
/// g_{n,i} computed with the given method; 0 for i > n.
ParamPoly coeff(int n, int i, CoeffMethod method);

/// Top-left N x N block of G: rows n, columns i, both 0..N-1.
class CoeffMatrix {
 public:
  explicit CoeffMatrix(Matrix entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const ParamPoly& at(int n, int i) const;
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

/// Throws std::invalid_argument for N < 1.
CoeffMatrix build_G(int N, CoeffMethod method = CoeffMethod::recurrence);

/// Simultaneous substitution applied to matrix entries.
struct Specialization {
  std::string name;  ///< "none" or the text it was parsed from
  std::vector<std::pair<Var, ParamPoly>> assignments;

  ParamPoly apply(const ParamPoly& p) const;
};

/// "none" or a comma-separated list "var=poly", e.g. "e2=0" or
/// "a=xi*a,e1=xi*a*b,e2=a*b". Throws std::invalid_argument on bad input.
Specialization parse_specialization(const std::string& text);
/// a=0, b=0, a=e1, b=e2, e1=0, e2=0.
std::vector<Specialization> standard_specializations();
CoeffMatrix specialize(const CoeffMatrix& G, const Specialization& s);

/// Laplace expansion along the first row.
ParamPoly det_cofactor(const Matrix& m);
/// Fraction-free elimination with exact division at every step.
ParamPoly det_bareiss(Matrix m);

/// Determinant of G[rows, cols]; size <= 3 by cofactor expansion, larger by
/// fraction-free elimination. Throws std::invalid_argument on size mismatch,
/// unsorted or out-of-range indices.
ParamPoly minor(const CoeffMatrix& G, const IndexSet& rows, const IndexSet& cols);

struct MinorRecord {
  IndexSet rows;
  IndexSet cols;
  bool nonvanishing = false;
  bool nonneg = true;
  std::size_t term_count = 0;
};

/// {"rows", "cols", "nonvanishing", "nonneg", "term_count"} on one line.
std::string minor_json_line(const MinorRecord& r);

/// Every minor of size 1..max_size of G, ordered by (size, rows, cols).
std::vector<MinorRecord> sweep_minors(const CoeffMatrix& G, int max_size, unsigned jobs = 1);

/// One report entry per specialization (none first, then the standard six):
/// every non-vanishing minor of size <= max_size of the N x N block is
/// nonnegative.
Report sweep_positivity(int N, int max_size, unsigned jobs = 1);

struct TwoPos {
  ParamPoly difference;  ///< g_{n+a+b,n+a} g_{n+a,n} - g_{n+a+b,n}
  bool nonneg = false;
};
TwoPos verify_2pos(int n, int a, int b);

/// Bounds on n+b+(composition length) for the M inequalities.
struct MInequalityRanges {
  int dominance = 6;
  int key = 5;
  int product = 6;
  int product_rule = 4;
};

/// Dominance under pointwise-larger compositions, the bound obtained by
/// peeling off k Y's, M^mu_n(b) <= M^mu_n(b-k) M_{n+l+b-k}(k), and the
/// product rule for these inequalities. All compared after specialization.
Report verify_M_inequalities(const MInequalityRanges& r = {});

}  // namespace asc
