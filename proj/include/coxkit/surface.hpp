#pragma once

#include <string>
#include <vector>

#include "coxkit/coxeter.hpp"
#include "coxkit/matrix.hpp"
#include "coxkit/rational.hpp"

namespace coxkit {

enum class SurfaceBaseKind { P2, Hirzebruch };

/// Rational surface as a blow-up model: base P2 or F_a, blown up t times.
/// Point positions are not modeled; the Picard lattice only depends on t.
struct RationalSurfaceModel {
    SurfaceBaseKind base = SurfaceBaseKind::P2;
    long long a = 0;         // Hirzebruch parameter, >= 0
    std::size_t blowups = 0; // t

    std::string describe() const;
};

/// The three-step Chow ring of the model: [X], the Picard basis, [pt],
/// with the intersection form and canonical class spelled out.
struct SurfaceChow {
    RationalSurfaceModel model;
    std::vector<std::string> labels;  // "[X]", "H" or "P","Q", "R1".., "[pt]"
    RationalMatrix picard_form;       // intersection numbers of the Picard basis
    std::vector<Rational> canonical;  // K in the Picard basis
    Rational k_squared;
    std::size_t picard_rank = 0;
};

/// Strict reader for the surface spec schema
/// {"base": {"type": "P2"}} or {"base": {"type": "Hirzebruch", "a": 1}, "blowups": 9}.
RationalSurfaceModel surface_model_from_json(const std::string& text);

SurfaceChow build_surface_chow(const RationalSurfaceModel& model);

/// Multiplication by ch(omega) = 1 + K + K^2/2 on [X], Pic, [pt];
/// row i is the image of basis element i (the printable layout).
RationalMatrix surface_psi_matrix(const SurfaceChow& chow);

/// The canonical class is a Lefschetz element iff K^2 != 0, i.e. iff the
/// Picard rank is not 10.
bool surface_lefschetz(const RationalSurfaceModel& model);

/// Full Coxeter report for the model via Phi = -Psi.
CoxeterReport surface_coxeter(const RationalSurfaceModel& model);

}  // namespace coxkit
