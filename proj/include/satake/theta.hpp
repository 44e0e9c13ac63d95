#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "satake/decoration.hpp"
#include "satake/lie.hpp"

namespace satake {

// theta = Ad(chi) o Ad(n_X) o omega o tau on a truncated algebra.
class ThetaMap {
 public:
  ThetaMap(EnrichedDecoration e, AlgebraPtr g);

  const EnrichedDecoration& edec() const { return e_; }
  const Decoration& dec() const { return e_.base; }
  const TruncatedAlgebra& algebra() const { return *g_; }
  const AlgebraPtr& algebra_ptr() const { return g_; }
  const Word& reduced_word() const { return word_; }
  const IMat& sigma() const { return sigma_; }

  // Throws TruncationOverflow when an input coordinate's image leaves the window.
  Element operator()(const Element& x) const;
  // Image of a single basis vector, nullopt on overflow.
  const std::optional<std::vector<GaussQ>>& column(int k) const;
  GaussQ chi(const IVec& signed_degree) const;

  // Individual factors, exposed for tests.
  Element tau(const Element& x) const;
  Element omega(const Element& x) const;
  Element ad_nX(const Element& x) const;  // throws TruncationOverflow

 private:
  Element ad_n(int j, const Element& x) const;
  Element exp_ad(const SparseOp& op, const IVec& w, const Element& x, bool negate) const;

  EnrichedDecoration e_;
  AlgebraPtr g_;
  Word word_;
  IMat sigma_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<std::optional<std::vector<GaussQ>>>> cols_;
};

Element b_generator(const ThetaMap& th, int i);
// b_w for a word w: [b_w0,[b_w1,...,b_wk]].
Element b_word(const ThetaMap& th, const Word& w);

// Onsager coefficients p[r][m] for 0 <= 2r <= m <= M; zero elsewhere.
std::vector<std::vector<Int>> onsager_coeffs(int M);

enum class SerreCase { I, II, III, IV };
const char* to_string(SerreCase c);

struct SerreReport {
  int i = 0, j = 0, M = 0;
  SerreCase which = SerreCase::IV;
  std::string subcase;  // "c<0,a=-1", "c=0,a=-3", ...
  Element computed, predicted;
  bool match = false;
};
// Throws CaseMismatch when the computation disagrees with the closed form.
SerreReport serre_deviation(const ThetaMap& th, int i, int j, bool throw_on_mismatch = true);

// Basis of h^{+theta} and h^{-theta} inside h'.
std::vector<Element> h_theta(const ThetaMap& th, int sign);
std::vector<Element> n_plus_X(const ThetaMap& th);
std::vector<Element> n_plus_theta(const ThetaMap& th, int max_height);

struct KLevel {
  int d = 0;
  int dim_F = 0, dim_D = 0;
  bool F_equals_D = false;       // generated piece equals n+_X + h^theta + span b_w (|w| <= d)
  bool iwasawa_direct = false;   // F_d, h^{-theta}, n+_theta independent
  bool iwasawa_size = false;     // dim F_d = dim n+_X + dim h^theta + dim n^-_{<=d}
};

struct KReport {
  std::vector<KLevel> levels;
  bool spanning = true;        // (a) at every level
  bool pseudo_fixed = true;    // (b)
  bool deviations_ok = true;   // (c)
  bool iwasawa = true;
  bool n_plus_split = true;    // n+ = n+_X + n+_theta inside the window
  bool total_ok = true;        // complete algebras: dims add up to dim g
  int levels_checked = 0;
};

// Filtration check up to b-degree d_max (0 picks a safe default).
KReport k_check(const ThetaMap& th, int d_max = 0);

struct KPrimeReport {
  int dim_k = 0, dim_kprime = 0, expected_codim = 0;
  bool complement_ok = false;
  bool ok() const { return dim_k - dim_kprime == expected_codim && complement_ok; }
};
// Complete (finite type) algebras only.
KPrimeReport kprime_split(const ThetaMap& th);

// Fixed points of theta on a complete algebra.
std::vector<Element> fixed_points(const ThetaMap& th);

}  // namespace satake
