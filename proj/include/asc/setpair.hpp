#pragma once

// Weighted sums over pairs of index sets, the generalized q-binomials
// M^mu_n(b), and the sum-preserving exchange map psi.

#include <functional>
#include <string>
#include <vector>

#include "asc/param_poly.hpp"
#include "asc/report.hpp"
#include "asc/xy_poly.hpp"

namespace asc {

/// Sorted, distinct nonnegative integers.
using IndexSet = std::vector<int>;
/// Weakly increasing parts, each >= -1.
using Composition = std::vector<int>;

/// All k-subsets of {0..size-1} in lexicographic order.
void for_each_subset(int size, int k, const std::function<void(const IndexSet&)>& visit);

/// All weakly increasing compositions of length len with parts in [lo, hi],
/// in lexicographic order.
void for_each_composition(int len, int lo, int hi, const std::function<void(const Composition&)>& visit);

std::string set_text(const IndexSet& s);
/// Parses "0,2,3" (empty string -> empty set); throws std::invalid_argument on
/// malformed, negative or unsorted input.
IndexSet parse_index_set(const std::string& text);

/// The k-th smallest element of {0,1,2,...} \ S for k >= 1; -1 for k = 0.
int rank_complement(const IndexSet& S, int k);

/// (i_1, i_2 - 1, ..., i_s - s + 1) for S = {i_1 < ... < i_s}.
Composition lambda_of(const IndexSet& S);

/// One element of B above n+b-1 and the slot it is moved to. Displaced
/// elements are listed from the largest down; the l-th (1-based) has
/// j = n+b+a - element and target = B(mu_j + l), with B(0) = -1.
struct Displaced {
  int j;
  int element;
  int target;
};
std::vector<Displaced> displaced_elements(int n, const Composition& mu, const IndexSet& B);

/// Prod_{i in B, i < n+b} Y_i times prod over displaced elements of
/// q^{element - target} Y_target. Y_{-1} stays symbolic.
XYPoly m_mu_xy(const Composition& mu, int n, const IndexSet& B);
ParamPoly m_mu(const Composition& mu, int n, const IndexSet& B);

/// Sum of m_mu over all b-subsets B of {0..n+a+b-1}, a = |mu|.
XYPoly M_mu_xy(const Composition& mu, int n, int b);
ParamPoly M_mu(const Composition& mu, int n, int b);

/// [prod_{i in E} Y_i] M_mu(mu, n, |E|) from the closed form: with
/// mu = (nu_1^{e_1}, ..., nu_p^{e_p}), f_i the multiplicity of nu_i in
/// lambda_E and c_i the first element of E carrying it,
/// sum over k_i <= min(e_i, f_i) of prod q^{k_i(d_i+k_i-1)} [e_i,k_i]_q [f_i,k_i]_q,
/// d_i = n+b+sum_{j>i} e_j - (c_i+f_i-1). Parts of mu must be >= 0.
ParamPoly coeff_extract_M(const Composition& mu, int n, const IndexSet& E);

/// prod_{i in A} X_i times m_mu(lambda_A, n, B).
XYPoly weight_setpair_xy(int n, const IndexSet& A, const IndexSet& B);
ParamPoly weight_setpair(int n, const IndexSet& A, const IndexSet& B);

/// Sum of weight_setpair over a+b = k, A a-subset of {0..n+a-1}, B b-subset
/// of {0..n+a+b-1}.
XYPoly coeff_setpair_xy(int n, int k);
ParamPoly coeff_setpair(int n, int k);

/// psi_{n,a,b}: (S1, S2) in T(n,a,b) -> (S1', S2') in T(n,b,a), with
/// a = |S1|, b = |S2|. Throws std::invalid_argument outside T(n,a,b).
std::pair<IndexSet, IndexSet> psi(int n, const IndexSet& S1, const IndexSet& S2);

/// The q-binomial exchange identity at (n,a,b), symbolically, together with
/// psi being a sum-preserving bijection T(n,a,b) -> T(n,b,a).
bool verify_simple_identity(int n, int a, int b);

/// Path sum over the layered graph at e2 = 0: between rows j and j+1 there is
/// an X_i edge at column 2i-j and a Y_i edge at column P+2i-j (0 <= i <= j,
/// P past every X column); paths run rightwards from row n to row n+k.
ParamPoly pos2_graph_oracle(int n, int k);

/// Bounds for verify_section4; each is a cap on n+a+b (or n+k).
struct Section4Ranges {
  int psi = 8;
  int simple = 10;
  int coeff = 6;
  int lemmas = 6;
  /// Extra cap on |nu| + (number of distinct parts) for the q-integer lemma.
  int t_shape = 5;
  int sym = 8;
  int pairs = 7;
  int pos2 = 8;
  int rephrase = 8;

  static Section4Ranges uniform(int max);
};

Report verify_section4(const Section4Ranges& r = {});

}  // namespace asc
