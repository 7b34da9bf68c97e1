// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the allowed limit.  Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tca/bott.hpp"
#include "tca/characters.hpp"
#include "tca/ktheory.hpp"
#include "tca/localcoh.hpp"
#include "tca/resolutions.hpp"
#include "tca/schur.hpp"
#include "tca/spectrum.hpp"

using namespace tca;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// --- 1 ----------------------------------------------------------------------
Outcome dual_basis_orthogonality() {
  Outcome o;
  long checked = 0;
  for (int d = 0; d <= 5; ++d)
    for (int r = 0; r <= d; ++r) {
      const auto basis = partitions_in_rectangle(r, d - r);
      for (const auto& alpha : basis)
        for (const auto& beta : basis) {
          ++checked;
          const Weight q = dual(as_weight(alpha, static_cast<std::size_t>(r)));
          const Weight rr = as_weight(transpose(beta), static_cast<std::size_t>(d - r));
          const auto h = bwb_pushforward(q, rr, d);
          const std::string where = "d=" + std::to_string(d) + " r=" + std::to_string(r) + " alpha=" +
                                    alpha.to_string() + " beta=" + beta.to_string();
          if (alpha == beta) {
            if (!h)
              o.fail("vanishes on the diagonal at " + where);
            else if (h->degree != alpha.size() ||
                     h->gamma != Weight(std::vector<int>(static_cast<std::size_t>(d), 0)))
              o.fail("wrong degree or weight at " + where);
          } else if (h) {
            o.fail("nonzero off the diagonal at " + where);
          }
        }
    }
  if (o.ok) o.detail = std::to_string(checked) + " pairs";
  return o;
}

// --- 2 ----------------------------------------------------------------------
Outcome pairing_is_signed_identity() {
  Outcome o;
  int matrices = 0;
  for (int d = 0; d <= 5; ++d)
    for (int r = 0; r <= d; ++r) {
      ++matrices;
      const auto basis = grassmannian_basis(d, r);
      const IntMatrix m = pairing_matrix(d, r);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const Integer want = i != j ? 0 : (basis[i].size() % 2 == 0 ? 1 : -1);
          if (m[i][j] != want)
            o.fail("d=" + std::to_string(d) + " r=" + std::to_string(r) + " entry (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
        }
    }
  if (o.ok) o.detail = std::to_string(matrices) + " matrices";
  return o;
}

// --- 3 ----------------------------------------------------------------------
Outcome k_theory_rank() {
  Outcome o;
  for (int d = 0; d <= 6; ++d) {
    std::size_t cells = 0;
    for (int r = 0; r <= d; ++r) cells += grassmannian_basis(d, r).size();
    if (cells != (std::size_t{1} << d) || k_rank(d) != cells) o.fail("d=" + std::to_string(d));
  }
  if (o.ok) o.detail = "d <= 6";
  return o;
}

// --- 4 ----------------------------------------------------------------------
Outcome fourier_involution() {
  Outcome o;
  long checked = 0;
  for (int d = 0; d <= 3; ++d)
    for (int r = 0; r <= d; ++r)
      for (const auto& lam : grassmannian_basis(d, r))
        for (const auto& mu : partitions_up_to(4)) {
          ++checked;
          const KClass x = basis_class(r, lam, mu, d);
          const KClass y = fourier(x);
          const std::string where = "d=" + std::to_string(d) + " r=" + std::to_string(r) + " lambda=" +
                                    lam.to_string() + " mu=" + mu.to_string();
          if (y.is_zero()) o.fail("zero image at " + where);
          for (const auto& [block, terms] : y.blocks())
            if (block != d - r) o.fail("image leaves block d-r at " + where);
          if (fourier(y) != x) o.fail("not an involution at " + where);
        }
  if (o.ok) o.detail = std::to_string(checked) + " basis classes";
  return o;
}

// --- 5 ----------------------------------------------------------------------
Outcome star_ring_involution() {
  Outcome o;
  const auto basis = partitions_up_to(6);
  long checked = 0;
  if (star(SchurElement::one()) != SchurElement::one()) o.fail("star(1) != 1");
  for (const auto& a : basis) {
    const SchurElement sa = SchurElement::basis(a);
    if (star(star(sa)) != sa) o.fail("star(star(s" + a.to_string() + ")) != s" + a.to_string());
    for (const auto& b : basis) {
      if (a.size() + b.size() > 6) continue;
      ++checked;
      const SchurElement sb = SchurElement::basis(b);
      if (star(sa * sb) != star(sa) * star(sb)) o.fail("not multiplicative on " + a.to_string() + ", " + b.to_string());
      if (star(sa + sb) != star(sa) + star(sb)) o.fail("not additive on " + a.to_string() + ", " + b.to_string());
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " basis pairs";
  return o;
}

// --- 6 ----------------------------------------------------------------------
Outcome saturation_specialization() {
  Outcome o;
  long checked = 0;
  for (const auto& mu : partitions_up_to(4))
    for (int d = 0; d <= 3; ++d)
      for (int c = 0; c <= 6; ++c) {
        ++checked;
        if (derived_saturation(mu, d, 0, c) != saturation_closed_form(mu, d, c))
          o.fail("mu=" + mu.to_string() + " d=" + std::to_string(d) + " c=" + std::to_string(c));
      }
  if (o.ok) o.detail = std::to_string(checked) + " cases";
  return o;
}

// --- 7 ----------------------------------------------------------------------
struct RegularityCase {
  Partition lam;
  int n;
  int dim_e;
};

std::vector<RegularityCase> regularity_corpus() {
  std::vector<RegularityCase> out;
  for (const auto& lam : partitions_in_rectangle(3, 3))
    for (int n = std::max(1, lam.length()); n <= 3; ++n)
      for (int e = 0; e <= 3; ++e) out.push_back({lam, n, e});
  return out;
}

Outcome regularity_bounds() {
  Outcome o;
  int tables = 0;
  int sharp = 0;
  for (const auto& c : regularity_corpus()) {
    const int bound = regularity_bound(c.lam, c.n, c.dim_e);
    const BettiTable t = betti_table(c.lam, c.n, c.dim_e, bound + 4);
    const int observed = std::max(0, t.max_strand());
    ++tables;
    if (observed == bound) ++sharp;
    const std::string where =
        "lambda=" + c.lam.to_string() + " n=" + std::to_string(c.n) + " dimE=" + std::to_string(c.dim_e);
    if (observed > bound) o.fail("regularity " + std::to_string(observed) + " above bound at " + where);
    if (c.lam[static_cast<std::size_t>(c.n - 1)] >= c.dim_e && observed != 0) o.fail("nonzero regularity at " + where);
  }
  if (o.ok) o.detail = std::to_string(tables) + " tables, bound attained in " + std::to_string(sharp);
  return o;
}

// --- 8 ----------------------------------------------------------------------
Outcome euler_identity() {
  Outcome o;
  const int cutoff = 6;
  for (int n = 1; n <= 2; ++n)
    for (int e = 1; e <= 2; ++e) {
      const BettiTable t = betti_table(Partition{}, n, e, cutoff);
      if (resolution_euler_characteristic(t, cutoff) != truncated_free_character(Partition{}, n, e, cutoff))
        o.fail("n=" + std::to_string(n) + " dimE=" + std::to_string(e));
    }
  if (o.ok) o.detail = "4 tables up to V-degree 6";
  return o;
}

// --- 9 ----------------------------------------------------------------------
Outcome free_module_detection() {
  Outcome o;
  const BettiTable t = betti_table(Partition{}, 1, 1, 5);
  int nonzero = 0;
  for (const auto& [ij, terms] : t.entries)
    if (!terms.empty()) {
      ++nonzero;
      if (ij != std::pair{0, 0}) o.fail("nonzero cell (" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")");
    }
  if (nonzero != 1) o.fail(std::to_string(nonzero) + " nonzero cells");
  if (o.ok) o.detail = "single cell (0,0)";
  return o;
}

// --- 10 ---------------------------------------------------------------------
Outcome krull_chain() {
  Outcome o;
  for (int d = 1; d <= 12; ++d) {
    const auto chain = maximal_chain(d);
    if (Integer(chain_length(chain)) != binomial(d + 1, 2)) o.fail("d=" + std::to_string(d));
    if (std::set<ChainLabel>(chain.begin(), chain.end()).size() != chain.size()) o.fail("repeated label, d=" + std::to_string(d));
  }
  if (o.ok) o.detail = "d <= 12";
  return o;
}

// --- 11 ---------------------------------------------------------------------
Outcome lr_dimension_check() {
  Outcome o;
  const auto parts = partitions_up_to(5);
  long checked = 0;
  for (const auto& lam : parts)
    for (const auto& mu : parts) {
      const auto product = lr_product(lam, mu);
      for (int n = 0; n <= 6; ++n) {
        ++checked;
        Integer total = 0;
        for (const auto& [nu, c] : product) total += Integer(static_cast<unsigned long>(c)) * schur_dimension(nu, n);
        if (total != schur_dimension(lam, n) * schur_dimension(mu, n))
          o.fail("lambda=" + lam.to_string() + " mu=" + mu.to_string() + " N=" + std::to_string(n));
      }
    }
  if (o.ok) o.detail = std::to_string(checked) + " (lambda, mu, N) triples";
  return o;
}

// --- 12 ---------------------------------------------------------------------
// Replays every Bott call made by criteria 6-8 and recomputes it on a window
// of twice the default length.
Outcome window_stability() {
  Outcome o;
  long checked = 0;
  auto compare = [&](const Weight& head, const Partition& mu) {
    ++checked;
    const std::size_t w = infinite_window(head, mu);
    if (bott_infinite(head, mu, w) != bott_infinite(head, mu, 2 * w))
      o.fail("head=" + head.to_string() + " mu=" + mu.to_string());
  };
  for (const auto& mu : partitions_up_to(4))
    for (int d = 0; d <= 3; ++d)
      for (const auto& lam : partitions_up_to(6, d)) compare(as_weight(lam, static_cast<std::size_t>(d)), mu);
  auto sweep = [&](const Partition& lam, int n, int dim_e, int i_max) {
    const Weight head = as_weight(lam, static_cast<std::size_t>(n));
    const int e_max = i_max + strand_sweep_bound(n, dim_e);
    for (int e = 0; e <= e_max; ++e)
      for (const auto& term : exterior_xi_terms(e, dim_e)) compare(head, term.mu);
  };
  for (const auto& c : regularity_corpus()) sweep(c.lam, c.n, c.dim_e, regularity_bound(c.lam, c.n, c.dim_e) + 4);
  for (int n = 1; n <= 2; ++n)
    for (int e = 1; e <= 2; ++e) sweep(Partition{}, n, e, 6);
  if (o.ok) o.detail = std::to_string(checked) + " Bott evaluations";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "dual-basis orthogonality, d <= 5", 10, dual_basis_orthogonality},
      {2, "pairing matrix is diag((-1)^|alpha|), d <= 5", 10, pairing_is_signed_identity},
      {3, "K(A) has 2^d basis cells, d <= 6", 1, k_theory_rank},
      {4, "Fourier involution and block reversal, d <= 3, Lambda-degree <= 4", 30, fourier_involution},
      {5, "star is a ring involution up to degree 6", 30, star_ring_involution},
      {6, "degree-zero derived saturation equals the closed form", 10, saturation_specialization},
      {7, "regularity bounds, lambda in 3x3, n <= 3, dimE <= 3", 300, regularity_bounds},
      {8, "Euler characteristic of Betti tables, V-degree <= 6", 60, euler_identity},
      {9, "free-module detection for n = dimE = 1", 1, free_module_detection},
      {10, "maximal chain length binom(d+1,2), d <= 12", 1, krull_chain},
      {11, "LR dimension multiplicativity, |lambda|,|mu| <= 5, N <= 6", 60, lr_dimension_check},
      {12, "Bott window stability over criteria 6-8", 60, window_stability},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && seconds > c.limit_seconds) out.fail("over time");
    if (!out.ok) ++failures;
    std::printf("%s %2d  %-66s %8.3f s (limit %g s)  %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
