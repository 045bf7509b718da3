#pragma once

// Concrete instances of the constructions (free-group HNN extension, Gamma_n
// extension, the polycyclic group G, Klein bottle, BS(1,2)), certificate
// runners and the aggregate regression suite behind `lorder verify-paper`.

#include <array>
#include <cstdint>
#include <vector>

#include "lorder/report.hpp"
#include "lorder/scenario.hpp"
#include "lorder/word.hpp"

namespace lorder {

/// Exponents of u_i = a^p b^(+-q) and v_i = a^(+-r) b^(+-s), i = 1..8.
struct FreeExponents {
  std::array<int, 8> p{}, q{}, r{}, s{};

  /// p_i = q_i = r_i = s_i = i
  static FreeExponents standard();
  bool strictly_increasing() const;
};

/// Over the alphabet {a, b}.
std::vector<Word> u_words(const FreeExponents& e);
std::vector<Word> v_words(const FreeExponents& e);

/// Over {s, x}: f_1..f_4 and g_1..g_4 for modulus n.
std::vector<Word> f_words(int n);
std::vector<Word> g_words(int n);

/// Canonical forms the f_i and g_i must evaluate to (derived by hand).
std::vector<GammaElement> f_expected(int n);
std::vector<GammaElement> g_expected(int n);

Scenario free_hnn_scenario(const FreeExponents& e = FreeExponents::standard());
Scenario gamma_hnn_scenario(int n, int depth = 6);
Scenario gamma_example_scenario(int depth = 6);
Scenario klein_bottle_scenario(int depth = 10);
Scenario bs12_scenario(int depth = 6);
/// The free-group extension with phi pairing u_i with v_(i+1 mod 8), in verify
/// mode, carrying the certificates built for the untampered pairing.
Scenario tampered_free_hnn_scenario(const FreeExponents& e = FreeExponents::standard());

Report certify_free_hnn(const FreeExponents& e = FreeExponents::standard(), unsigned threads = 1);
Report certify_gamma_hnn(int n, int depth = 6, unsigned threads = 1);
Report certify_gamma_example(int depth = 6, unsigned threads = 1);

// Property suites. Each returns one check; failures carry the first
// counterexample in the detail.
Check word_property_suite(std::uint64_t seed, int cases);
Check stallings_express_suite(std::uint64_t seed, int cases);
Check gamma_order_suite(int n, std::uint64_t seed, int cases);
Check gamma_torsion_suite(int n, std::uint64_t seed, int elements, int max_power);
Check heisenberg_identity_suite();
Check heisenberg_matrix_crosscheck(std::uint64_t seed, int words);
Check unipotent_order_suite(std::uint64_t seed, int cases, int max_size);
Check britton_relator_suite(std::uint64_t seed, int cases);
Check bs12_word_problem();

struct ClaimOptions {
  int n = 12;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  int depth = 6;
};

Report verify_claims(const ClaimOptions& options = {});

}  // namespace lorder
