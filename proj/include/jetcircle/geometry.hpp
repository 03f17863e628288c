/*
   Copyright 2026 The jetcircle Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JETCIRCLE_GEOMETRY_HPP
#define JETCIRCLE_GEOMETRY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetcircle/arith.hpp"
#include "jetcircle/linalg.hpp"
#include "jetcircle/sections.hpp"

namespace jetcircle {

struct Monomial {
    std::vector<unsigned> exps;  // length n+1
    std::uint32_t coeff = 0;
};

// Degree-d form on n+1 variables held as a symmetric tensor over F_p.
class SymmetricForm {
   public:
    SymmetricForm(const PrimeField& F, std::size_t n, std::size_t d, const std::vector<Monomial>& monomials,
                  std::string id = "custom");

    static SymmetricForm fermat(const PrimeField& F, std::size_t n, std::size_t d);
    static SymmetricForm conic(const PrimeField& F);

    const PrimeField& field() const noexcept { return F_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }
    std::size_t vars() const noexcept { return n_ + 1; }
    const std::string& id() const noexcept { return id_; }

    // a_{j1..jd} for a sorted index tuple; zero when absent.
    std::uint32_t coefficient(std::vector<std::uint32_t> idx) const;
    const std::map<std::vector<std::uint32_t>, std::uint32_t>& tensor() const noexcept { return tensor_; }
    // Monomials obtained by re-expanding the tensor.
    const std::vector<Monomial>& monomials() const noexcept { return monos_; }
    const std::vector<Monomial>& partial(std::size_t j) const { return partials_[j]; }

    // Psi_j as a sparse list over ordered (d-1)-tuples, coefficient d! a_{..., j}.
    struct PsiTerm {
        std::vector<std::uint32_t> idx;
        std::uint32_t coeff;
    };
    const std::vector<PsiTerm>& psi_terms(std::size_t j) const { return psi_[j]; }

    // Pointwise evaluation over F_p.
    std::uint32_t eval_point(const std::vector<std::uint32_t>& x) const;
    std::vector<std::uint32_t> gradient_point(const std::vector<std::uint32_t>& x) const;

    // Coordinate change x -> A x (A given row-major, (n+1)x(n+1)).
    SymmetricForm transformed(const std::vector<std::uint32_t>& A) const;

   private:
    PrimeField F_;
    std::size_t n_, d_;
    std::string id_;
    std::map<std::vector<std::uint32_t>, std::uint32_t> tensor_;
    std::vector<Monomial> monos_;
    std::vector<std::vector<Monomial>> partials_;
    std::vector<std::vector<PsiTerm>> psi_;
};

// Evaluates a monomial list without symmetrization (used as an independent oracle).
std::uint32_t eval_monomials(const PrimeField& F, const std::vector<Monomial>& monos, const std::vector<std::uint32_t>& x);

JetSection eval_form(const SymmetricForm& F, const std::vector<JetSection>& x);
std::vector<JetSection> gradient(const SymmetricForm& F, const std::vector<JetSection>& x);
// z . grad F(x), as a section of degree bound z.r + (d-1) x.r.
JetSection gradient_pairing(const SymmetricForm& F, const std::vector<JetSection>& z, const std::vector<JetSection>& x);

// Polynomial tuples over F_p (layout x[j*(e+1)+i]); output has de+1 coefficients.
void eval_form_poly(const SymmetricForm& F, const std::uint32_t* x, std::size_t e, std::uint32_t* out);
// Matrix of z -> z . grad F(x0) on P_e^{n+1}: rows are degrees 0..de, column j*(e+1)+i is z_j = x^i.
FpMatrix gradient_matrix_poly(const SymmetricForm& F, const std::uint32_t* x0, std::size_t e);

std::uint32_t multilinear_psi(const SymmetricForm& F, std::size_t j, const std::vector<std::vector<std::uint32_t>>& y);
JetSection multilinear_psi(const SymmetricForm& F, std::size_t j, const std::vector<std::vector<JetSection>>& y);

using SectionMap = std::function<JetSection(const std::vector<JetSection>&)>;
// Iterated difference D_{y1} ... D_{yk} G evaluated at x.
JetSection difference_apply(const PrimeField& F, const SectionMap& G, const std::vector<std::vector<JetSection>>& ys,
                            const std::vector<JetSection>& x);

struct SmoothnessResult {
    std::size_t verified_up_to = 0;
    std::size_t cap = 0;
    bool certified = false;
    std::optional<std::size_t> witness_degree;
    // Witness coordinates as coefficient vectors over F_p[u]/(modulus).
    std::vector<std::vector<std::uint32_t>> witness;
    std::vector<std::uint32_t> modulus;
};

std::size_t bezout_cap(const SymmetricForm& F);
// Largest k <= bezout_cap whose cumulative search fits in the budget (at least 1).
std::size_t default_smoothness_kmax(const SymmetricForm& F, const Budget& budget = Budget::standard());
SmoothnessResult smoothness_check(const SymmetricForm& F, std::size_t k_max, const Budget& budget = Budget::standard());
// First monic irreducible of degree k in lexicographic order of (c_0, ..., c_{k-1}), c_{k-1} fastest.
std::vector<std::uint32_t> first_irreducible(const PrimeField& F, std::size_t k);

SymmetricForm parse_form(const PrimeField& F, const std::string& text, const std::string& id = "file");
SymmetricForm load_form(const PrimeField& F, const std::string& source, std::size_t n, std::size_t d);
SymmetricForm random_smooth_form(const PrimeField& F, std::size_t n, std::size_t d, std::uint64_t seed,
                                 std::size_t max_tries = 50);

}  // namespace jetcircle

#endif
