/*
 * Copyright 2026 The heyde toolkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "heyde/bundled.hpp"

namespace heyde {

namespace {

constexpr const char* kRemark21 = R"heyde(schema = 1
name = "remark_2_1"
description = "Gaussian times separate two-torsion factors under a mixing automorphism: the symmetry equation holds and the factorization is recovered"
seed = 42
group = {type = "real_ext", real_dim = 1, moduli = [2, 2]}
automorphism = {a = -2.0, finite_matrix = [[0, 1], [1, 1]]}
dist.mu1 = {type = "product", factors = [{type = "gauss", sigma = 2.0}, {type = "finite", probs = [0.4, 0.3, 0.2, 0.1]}]}
dist.mu2 = {type = "product", factors = [{type = "gauss", sigma = 1.0}, {type = "finite", probs = [0.25, 0.25, 0.3, 0.2]}]}
check = {kind = "condition1", name = "kernel_condition", expect = true}
check = {kind = "eq2_grid", name = "symmetry_equation", mu1 = "mu1", mu2 = "mu2", expect = "holds"}
check = {kind = "pd_inequality", name = "pd_mu1", mu = "mu1", expect = true}
check = {kind = "decompose", name = "factor_mu1", mu = "mu1", expect = "success"}
check = {kind = "decompose", name = "factor_mu2", mu = "mu2", expect = "success"}
)heyde";

constexpr const char* kRemark22 = R"heyde(schema = 1
name = "remark_2_2"
description = "Plane Gaussian pair with coupled covariances: the symmetry equation holds yet neither factors as (first axis Gaussian) x (second axis)"
seed = 42
group = {type = "real_ext", real_dim = 2}
automorphism = {real_matrix = [[-2.0, 0.0], [0.0, -2.0]]}
dist.mu1 = {type = "quad_gauss", A = [[4.0, 2.0], [2.0, 2.0]]}
dist.mu2 = {type = "quad_gauss", A = [[2.0, 1.0], [1.0, 1.0]]}
check = {kind = "condition1", name = "kernel_condition", expect = true}
check = {kind = "eq2_grid", name = "symmetry_equation", mu1 = "mu1", mu2 = "mu2", expect = "holds"}
check = {kind = "decompose", name = "factor_mu1", mu = "mu1", expect = "failure"}
check = {kind = "decompose", name = "factor_mu2", mu = "mu2", expect = "failure"}
)heyde";

constexpr const char* kRemark31 = R"heyde(schema = 1
name = "remark_3_1"
description = "Two-sigma family on R x Z(2): kernel condition fails, the symmetry equation holds, yet the distributions do not factor through the product form"
seed = 42
group = {type = "real_ext", real_dim = 1, moduli = [2]}
automorphism = {a = -2.0, finite_matrix = [[1]]}
dist.mu1 = {type = "remark31", sigma = 2.0, sigma_prime = 1.0, kappa = 0.5}
dist.mu2 = {type = "remark31", sigma = 1.0, sigma_prime = 0.5, kappa = 0.5}
check = {kind = "condition1", name = "kernel_condition", expect = false}
check = {kind = "eq2_grid", name = "symmetry_equation", mu1 = "mu1", mu2 = "mu2", expect = "holds"}
check = {kind = "pd_inequality", name = "pd_mu1", mu = "mu1", expect = true}
check = {kind = "pd_inequality", name = "pd_mu2", mu = "mu2", expect = true}
check = {kind = "decompose", name = "factor_mu1", mu = "mu1", expect = "failure"}
check = {kind = "decompose", name = "factor_mu2", mu = "mu2", expect = "failure"}
check = {kind = "cond_sym_mc", name = "mc_symmetry", mu1 = "mu1", mu2 = "mu2", n = 200000, expect = "consistent"}
)heyde";

constexpr const char* kTheorem21Roundtrip = R"heyde(schema = 1
name = "theorem_2_1_roundtrip"
description = "Constructed Gaussian * two-torsion * shift pair on R x Z(2) x Z(3): the symmetry equation holds and the factorization is recovered exactly"
seed = 42
group = {type = "real_ext", real_dim = 1, moduli = [2, 3]}
automorphism = {a = -1.5, finite_matrix = [[1, 0], [0, 2]]}
dist.mu1 = {type = "product", factors = [{type = "gauss", sigma = 1.8, b = 0.6}, {type = "finite", probs = [0.7, 0.0, 0.0, 0.3, 0.0, 0.0]}]}
dist.mu2 = {type = "shift", base = {type = "product", factors = [{type = "gauss", sigma = 1.2, b = 0.4}, {type = "finite", probs = [0.55, 0.0, 0.0, 0.45, 0.0, 0.0]}]}, g = [1, 0]}
check = {kind = "condition1", name = "kernel_condition", expect = false}
check = {kind = "eq2_grid", name = "symmetry_equation", mu1 = "mu1", mu2 = "mu2", expect = "holds"}
check = {kind = "decompose", name = "factor_mu1", mu = "mu1", expect = "success"}
check = {kind = "decompose", name = "factor_mu2", mu = "mu2", expect = "success"}
)heyde";

constexpr const char* kProp21Adic = R"heyde(schema = 1
name = "prop_2_1_adic"
description = "Truncated adic-integer quotient Z(15): under an automorphism with trivial kernel condition, only shifted torsion distributions satisfy the symmetry equation"
seed = 42
group = {type = "adic_truncation", prefix = [3, 5, 7], level = 2}
automorphism = {matrix = [[7]]}
dist.e2 = {type = "finite", probs = [0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]}
dist.e4 = {type = "finite", probs = [0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]}
dist.mix = {type = "finite", probs = [0.6, 0.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]}
check = {kind = "condition1", name = "kernel_condition", expect = true}
check = {kind = "eq2_exact", name = "point_pair_eq2", mu1 = "e2", mu2 = "e4", expect = "holds"}
check = {kind = "cond_sym_exact", name = "point_pair_oracle", mu1 = "e2", mu2 = "e4", expect = true}
check = {kind = "decompose", name = "factor_point", mu = "e2", expect = "success"}
check = {kind = "eq2_exact", name = "mixture_eq2", mu1 = "mix", mu2 = "e4", expect = "fails"}
check = {kind = "cond_sym_exact", name = "mixture_oracle", mu1 = "mix", mu2 = "e4", expect = false}
check = {kind = "truncation_kernel", name = "tower_kernels", multiplier = 8, levels = 3, expect = "trivial"}
)heyde";

constexpr const char* kSolenoidGauss = R"heyde(schema = 1
name = "solenoid_gauss"
description = "Solenoid dual with denominators over the primes 2 and 3: kernel rule for p/q automorphisms with truncation evidence, and Gaussian pairs under the matching sigma relation"
seed = 42
group = {type = "solenoid_dual", prefix = [2, 3], infinite_primes = [2, 3]}
solenoid_points = {level_max = 3, numerator_max = 12}
dist.g1 = {type = "solenoid_gauss", sigma = 1.0}
dist.g2 = {type = "solenoid_gauss", sigma = 3.0}
dist.g3 = {type = "solenoid_gauss", sigma = 2.0}
dist.c1 = {type = "solenoid_gauss", t = -1.0, sigma = 0.0}
dist.c2 = {type = "solenoid_gauss", t = 3.0, sigma = 0.0}
check = {kind = "condition1", name = "kernel_one_third", automorphism = {p = 1, q = 3}, expect = true}
check = {kind = "condition1", name = "kernel_two_thirds", automorphism = {p = 2, q = 3}, expect = false}
check = {kind = "truncation_kernel", name = "evidence_five", multiplier = 5, levels = 3, expect = "nontrivial"}
check = {kind = "truncation_kernel", name = "evidence_four", multiplier = 4, levels = 3, expect = "trivial"}
check = {kind = "eq2_grid", name = "gauss_pair_matched", mu1 = "g1", mu2 = "g2", automorphism = {p = -1, q = 3}, expect = "holds"}
check = {kind = "eq2_grid", name = "character_pair", mu1 = "c1", mu2 = "c2", automorphism = {p = 1, q = 3}, expect = "holds"}
check = {kind = "eq2_grid", name = "gauss_pair_mismatched", mu1 = "g1", mu2 = "g3", automorphism = {p = -1, q = 3}, expect = "fails"}
check = {kind = "pd_inequality", name = "pd_gauss", mu = "g1", expect = true}
)heyde";

constexpr const char* kLemma21Fuzz = R"heyde(schema = 1
name = "lemma21_fuzz"
description = "Seeded random finite instances: the characteristic-function equation agrees with the exact conditional-symmetry oracle, and every passing instance satisfies the derived product equation"
seed = 2026
check = {kind = "oracle_fuzz", name = "oracle_agreement", instances = 100, max_order = 64, expect = "agree"}
)heyde";

constexpr const char* kLemma24Polynomials = R"heyde(schema = 1
name = "lemma24_polynomials"
description = "On cyclic groups every polynomial in the difference-operator sense is constant, and only the zero function satisfies the quadratic functional equation"
seed = 7
check = {kind = "polynomial_fuzz", name = "polynomials_constant", functions = 50, max_modulus = 12, degrees = 4, expect = "realized"}
check = {kind = "gauss_phi_degenerate", name = "quadratic_equation_zero", max_modulus = 12, expect = "degenerate"}
)heyde";

constexpr BundledScenario kBundled[] = {
    {"remark_2_1", kRemark21},
    {"remark_2_2", kRemark22},
    {"remark_3_1", kRemark31},
    {"theorem_2_1_roundtrip", kTheorem21Roundtrip},
    {"prop_2_1_adic", kProp21Adic},
    {"solenoid_gauss", kSolenoidGauss},
    {"lemma21_fuzz", kLemma21Fuzz},
    {"lemma24_polynomials", kLemma24Polynomials},
};

} // namespace

std::span<const BundledScenario> bundled_scenarios() { return kBundled; }

const char* bundled_scenario_text(const std::string& name) {
    for (const BundledScenario& b : kBundled)
        if (name == b.name) return b.text;
    return nullptr;
}

} // namespace heyde
