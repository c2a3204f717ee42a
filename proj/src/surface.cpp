#include "coxkit/surface.hpp"

#include "json.hpp"

namespace coxkit {

std::string RationalSurfaceModel::describe() const {
    std::string base_name =
        base == SurfaceBaseKind::P2 ? "P2" : "F" + std::to_string(a);
    if (blowups == 0) return base_name;
    return base_name + " blown up in " + std::to_string(blowups) + " point" +
           (blowups == 1 ? "" : "s");
}

RationalSurfaceModel surface_model_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("surface spec must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "base" && key != "blowups")
            throw std::invalid_argument("unknown key '" + key + "' in surface spec");
    }
    if (!j.contains("base") || !j["base"].is_object())
        throw std::invalid_argument("surface spec needs a 'base' object");
    const auto& base = j["base"];
    for (const auto& [key, value] : base.items()) {
        (void)value;
        if (key != "type" && key != "a")
            throw std::invalid_argument("unknown key '" + key + "' in surface base");
    }
    if (!base.contains("type") || !base["type"].is_string())
        throw std::invalid_argument("surface base needs a 'type' string");

    RationalSurfaceModel model;
    const std::string type = base["type"].get<std::string>();
    if (type == "P2") {
        if (base.contains("a")) throw std::invalid_argument("the P2 base takes no 'a'");
        model.base = SurfaceBaseKind::P2;
    } else if (type == "Hirzebruch") {
        model.base = SurfaceBaseKind::Hirzebruch;
        if (base.contains("a")) {
            if (!base["a"].is_number_integer() || base["a"].get<long long>() < 0)
                throw std::invalid_argument("'a' must be a non-negative integer");
            model.a = base["a"].get<long long>();
        }
    } else {
        throw std::invalid_argument("surface base type '" + type + "' is not P2 or Hirzebruch");
    }
    if (j.contains("blowups")) {
        if (!j["blowups"].is_number_unsigned())
            throw std::invalid_argument("'blowups' must be a non-negative integer");
        model.blowups = j["blowups"].get<std::size_t>();
    }
    return model;
}

SurfaceChow build_surface_chow(const RationalSurfaceModel& model) {
    if (model.a < 0) throw std::invalid_argument("Hirzebruch parameter must be >= 0");
    SurfaceChow chow;
    chow.model = model;
    const std::size_t t = model.blowups;
    const std::size_t base_rank = model.base == SurfaceBaseKind::P2 ? 1 : 2;
    chow.picard_rank = base_rank + t;

    chow.labels.push_back("[X]");
    chow.picard_form = RationalMatrix(chow.picard_rank, chow.picard_rank);
    if (model.base == SurfaceBaseKind::P2) {
        chow.labels.push_back("H");
        chow.picard_form.at(0, 0) = 1;  // H.H = 1
        chow.canonical.push_back(-3);   // K = -3H + sum R_i
    } else {
        chow.labels.push_back("P");
        chow.labels.push_back("Q");
        chow.picard_form.at(0, 1) = 1;  // P.Q = 1
        chow.picard_form.at(1, 0) = 1;
        chow.picard_form.at(1, 1) = model.a;  // Q.Q = a
        chow.canonical.push_back(model.a - 2);  // K = (a-2)P - 2Q + sum R_i
        chow.canonical.push_back(-2);
    }
    for (std::size_t i = 1; i <= t; ++i) {
        chow.labels.push_back("R" + std::to_string(i));
        chow.picard_form.at(base_rank + i - 1, base_rank + i - 1) = -1;
        chow.canonical.push_back(1);
    }
    chow.labels.push_back("[pt]");

    chow.k_squared = 0;
    for (std::size_t i = 0; i < chow.picard_rank; ++i)
        for (std::size_t j = 0; j < chow.picard_rank; ++j)
            chow.k_squared += chow.canonical[i] * chow.picard_form.at(i, j) * chow.canonical[j];
    return chow;
}

RationalMatrix surface_psi_matrix(const SurfaceChow& chow) {
    const std::size_t p = chow.picard_rank;
    const std::size_t m = p + 2;
    RationalMatrix psi(m, m);
    // [X] . ch(omega) = [X] + K + (K^2/2)[pt]
    psi.at(0, 0) = 1;
    for (std::size_t j = 0; j < p; ++j) psi.at(0, 1 + j) = chow.canonical[j];
    psi.at(0, m - 1) = chow.k_squared / 2;
    // e_i . ch(omega) = e_i + (e_i . K)[pt]
    for (std::size_t i = 0; i < p; ++i) {
        psi.at(1 + i, 1 + i) = 1;
        Rational pairing = 0;
        for (std::size_t j = 0; j < p; ++j)
            pairing += chow.picard_form.at(i, j) * chow.canonical[j];
        psi.at(1 + i, m - 1) = pairing;
    }
    psi.at(m - 1, m - 1) = 1;
    return psi;
}

bool surface_lefschetz(const RationalSurfaceModel& model) {
    return build_surface_chow(model).k_squared != 0;
}

CoxeterReport surface_coxeter(const RationalSurfaceModel& model) {
    const SurfaceChow chow = build_surface_chow(model);
    const RationalMatrix psi = surface_psi_matrix(chow);

    CoxeterReport report;
    report.name = model.describe();
    report.n = 2;
    report.m = chow.picard_rank + 2;
    report.eigenvalue = -1;
    report.coxeter = psi * Rational(-1);

    report.polynomial.power = report.m;
    report.polynomial.constant = 1;  // (x+1)^m
    RationalMatrix shifted = report.coxeter;
    for (std::size_t i = 0; i < shifted.rows(); ++i) shifted.at(i, i) += 1;
    const auto idx = nilpotency_index(shifted);
    if (!idx || *idx > report.m)
        throw VerificationError("surface Coxeter matrix plus identity is not nilpotent");
    report.polynomial.verified = true;

    report.jordan = full_jordan_type(report.coxeter, {Rational(-1)});
    report.betti_numbers = {1, chow.picard_rank, 1};
    report.lefschetz_canonical = chow.k_squared != 0;
    report.lefschetz_anticanonical = report.lefschetz_canonical;

    LefschetzLevel level;
    level.lower = 0;
    level.upper = 2;
    level.rank_needed = 1;
    level.rank_found = chow.k_squared != 0 ? 1 : 0;
    level.ok = level.rank_found == 1;
    LefschetzLevel middle;
    middle.lower = 1;
    middle.upper = 1;
    middle.rank_needed = chow.picard_rank;
    middle.rank_found = chow.picard_rank;
    middle.ok = true;
    report.lefschetz_detail.levels = {level, middle};
    report.lefschetz_detail.ok = level.ok;

    if (report.lefschetz_canonical) {
        report.predicted = predicted_jordan_from_betti(report.betti_numbers);
        bool match = report.jordan == *report.predicted;
        try {
            report.betti_roundtrip = betti_from_jordan(report.jordan.sizes());
            match = match && *report.betti_roundtrip == report.betti_numbers;
        } catch (const MalformedTypeError&) {
            match = false;
        }
        report.cross_check = match ? CrossCheck::Match : CrossCheck::Mismatch;
    }
    return report;
}

}  // namespace coxkit
