#pragma once

#include <string>
#include <vector>

#include "dga/cohomology.hpp"
#include "dga/filtered.hpp"
#include "dga/gca.hpp"

namespace dga {

// A Hirsch extension datum over a validated base: fresh degree-k generators
// v_1..v_m together with cocycles beta(v_i) of degree k+1 in the base.
struct HirschData {
    AlgebraPresentation base;
    int degree = 1;
    std::vector<std::string> names;
    std::vector<Polynomial> beta;
};

// Checks the shape of the datum: fresh names, one beta per name, each beta a
// degree-(k+1) cocycle of the base. Throws InputError naming the violating
// generator otherwise.
void validate_hirsch_data(const HirschData& h);

// The extension base ⊗ ∧V with d(v_i) = beta(v_i); validate() passes on the
// result. base_to_new (optional) receives the generator index remapping of
// the base into the extension.
AlgebraPresentation hirsch_extend(const HirschData& h,
                                  std::vector<int>* base_to_new = nullptr);

// The canonical decreasing filtration of the extension by base degree
// (F^p = A^{>=p} ⊗ ∧V) and its spectral sequence pages 0..2, together with
// the comparison of page 2 against the cohomology of the extension.
struct HirschSpectralResult {
    AlgebraPresentation extension;
    std::vector<SpectralPage> pages;
    DegenerationReport degeneration;
};

HirschSpectralResult weight_spectral_sequence(const HirschData& h);

// Transfer of a Hirsch extension along a quasi-isomorphism f. Forward: the
// datum lives over f's source and is pushed to beta' = f∘beta. Backward: the
// datum lives over f's target and a preimage datum with [f∘beta'] = [beta] is
// solved for degreewise; throws InputError when the induced map misses a
// class (f not a quasi-isomorphism in degree k+1). Both directions return
// the extended map between the two extensions and its quasi-isomorphism
// certificate.
struct TransferResult {
    HirschData transferred;
    DgaMorphism extended_map;
    QuasiIsoReport certificate;
};

TransferResult transfer_extension_forward(const DgaMorphism& f, const HirschData& h);
TransferResult transfer_extension_backward(const DgaMorphism& f, const HirschData& h);

// The explicit isomorphism B(beta) -> B(beta + d∘eta) fixing the base and
// sending v to v - eta(v); witnesses that the extension only depends on the
// classes of the cocycles beta(v).
DgaMorphism shift_isomorphism(const HirschData& h, const std::vector<Polynomial>& eta);

} // namespace dga
