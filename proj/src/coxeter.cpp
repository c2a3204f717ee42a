#include "coxkit/coxeter.hpp"

#include <algorithm>
#include <map>

namespace coxkit {

namespace {

BigInt binomial_big(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<unsigned>(n - i);
        r /= static_cast<unsigned>(i + 1);
    }
    return r;
}

}  // namespace

std::string CoxeterPolynomial::to_string() const {
    return std::string("(x") + (constant >= 0 ? "+" : "-") + "1)^" + std::to_string(power);
}

std::vector<BigInt> CoxeterPolynomial::coefficients() const {
    std::vector<BigInt> coeffs(power + 1);
    for (std::size_t k = 0; k <= power; ++k) {
        BigInt c = binomial_big(power, k);
        if (constant < 0 && (power - k) % 2 == 1) c = -c;
        coeffs[k] = c;
    }
    return coeffs;
}

RationalMatrix coxeter_matrix(const ChowRing& ring) {
    const ChowClass ch = ring.chern_character(ring.canonical_class());
    return ring.multiplication_operator(ch) * Rational(coxeter_sign(ring.variety_dim()));
}

CoxeterPolynomial coxeter_polynomial(const ChowRing& ring) {
    const std::size_t n = ring.variety_dim();
    CoxeterPolynomial poly;
    poly.power = ring.total_dim();
    poly.constant = -coxeter_sign(n);
    RationalMatrix shifted = coxeter_matrix(ring);
    const Rational mu = coxeter_sign(n);
    for (std::size_t i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= mu;
    const auto idx = nilpotency_index(shifted);
    if (!idx || *idx > poly.power)
        throw VerificationError("Coxeter matrix minus its eigenvalue is not nilpotent");
    poly.verified = true;
    return poly;
}

JordanType jordan_type_of_coxeter(const ChowRing& ring) {
    return full_jordan_type(coxeter_matrix(ring), {Rational(coxeter_sign(ring.variety_dim()))});
}

JordanType predicted_jordan_from_betti(const std::vector<std::size_t>& betti_numbers) {
    if (betti_numbers.empty() || betti_numbers[0] != 1)
        throw std::invalid_argument("Betti sequence must start with b_0 = 1");
    const std::size_t n = betti_numbers.size() - 1;
    for (std::size_t k = 0; k <= n; ++k)
        if (betti_numbers[k] != betti_numbers[n - k])
            throw std::invalid_argument("Betti sequence must be palindromic");

    const Rational mu = coxeter_sign(n);
    JordanType type;
    for (std::size_t i = 0; 2 * i <= n; ++i) {
        const std::size_t prev = i == 0 ? 0 : betti_numbers[i - 1];
        if (betti_numbers[i] < prev)
            throw NonMonotoneError("b_" + std::to_string(i) + " < b_" + std::to_string(i - 1) +
                                   ": the Lefschetz hypothesis fails");
        const std::size_t count = betti_numbers[i] - prev;
        if (count > 0) type.add(mu, n - 2 * i + 1, count);
    }
    std::size_t betti_sum = 0;
    for (std::size_t b : betti_numbers) betti_sum += b;
    if (type.total_dimension() != betti_sum || type.block_count() != betti_numbers[n / 2])
        throw std::logic_error("predicted Jordan type is inconsistent with the Betti numbers");
    return type;
}

JordanType jordan_blocks_from_cone_counts(const ConeCounts& counts) {
    if (counts.counts.empty()) throw std::invalid_argument("empty cone counts");
    const std::size_t n = counts.counts.size() - 1;
    const Rational mu = coxeter_sign(n);
    JordanType type;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        BigInt acc = 0;
        const long long start = static_cast<long long>(k) - 1;
        for (long long i = std::max<long long>(start, 0); i <= static_cast<long long>(n); ++i) {
            const long long shift = static_cast<long long>(n) - i;
            if (shift < 0) continue;
            BigInt term = binomial_big(static_cast<std::size_t>(i) + 1, k) *
                          static_cast<long long>(counts.counts[static_cast<std::size_t>(shift)]);
            if ((i - static_cast<long long>(k)) % 2 != 0) term = -term;
            acc += term;
        }
        if (acc < 0)
            throw NegativeCountError("negative block count for dimension " +
                                     std::to_string(n - 2 * k + 1));
        if (acc > 0) type.add(mu, n - 2 * k + 1, acc.convert_to<std::size_t>());
    }
    return type;
}

std::vector<std::size_t> betti_from_jordan(const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) throw MalformedTypeError("empty Jordan type");
    std::map<std::size_t, std::size_t, std::greater<>> mult;
    for (std::size_t s : sizes) {
        if (s == 0) throw MalformedTypeError("Jordan block of size 0");
        ++mult[s];
    }
    const std::size_t d1 = mult.begin()->first;
    if (mult.begin()->second != 1)
        throw MalformedTypeError("largest block size " + std::to_string(d1) + " occurs " +
                                 std::to_string(mult.begin()->second) + " times, expected once");
    const std::size_t n = d1 - 1;
    for (const auto& [d, t] : mult) {
        (void)t;
        if ((d1 - d) % 2 != 0)
            throw MalformedTypeError("block sizes " + std::to_string(d1) + " and " + std::to_string(d) +
                                     " differ by an odd amount");
    }

    std::vector<std::size_t> b(n + 1, 0);
    std::size_t running = 0;
    auto it = mult.begin();
    while (it != mult.end()) {
        const std::size_t from = (d1 - it->first) / 2;
        running += it->second;
        ++it;
        const std::size_t to = (it == mult.end()) ? n / 2 : (d1 - it->first) / 2 - 1;
        if (from > to) throw MalformedTypeError("block sizes do not fill the Betti sequence");
        for (std::size_t j = from; j <= to; ++j) b[j] = running;
    }
    for (std::size_t j = 0; j <= n; ++j)
        if (j > n / 2) b[j] = b[n - j];
    return b;
}

LefschetzReport lefschetz_check(const ChowRing& ring, const ChowClass& omega) {
    if (omega.coords().size() != ring.variety_dim() + 1 || !omega.is_homogeneous_of(1))
        throw DegreeError("Lefschetz check needs a homogeneous degree-1 class");
    const std::size_t n = ring.variety_dim();
    const auto& dims = ring.graded_dims();

    std::vector<ChowClass> powers{ring.unit()};
    for (std::size_t k = 1; k <= n; ++k) powers.push_back(ring.multiply(powers.back(), omega));

    LefschetzReport report;
    for (std::size_t i = 0; 2 * i <= n; ++i) {
        LefschetzLevel level;
        level.lower = i;
        level.upper = n - i;
        level.rank_needed = dims[i];
        RationalMatrix map(dims[i], dims[n - i]);
        for (std::size_t idx = 0; idx < dims[i]; ++idx) {
            const ChowClass image = ring.multiply(ring.basis_class(i, idx), powers[n - 2 * i]);
            for (std::size_t j = 0; j < dims[n - i]; ++j) map.at(idx, j) = image.degree(n - i)[j];
        }
        level.rank_found = map.rank();
        level.ok = dims[i] == dims[n - i] && level.rank_found == level.rank_needed;
        report.ok = report.ok && level.ok;
        report.levels.push_back(level);
    }
    return report;
}

RationalMatrix coxeter_of_cartan(const RationalMatrix& cartan) {
    if (!cartan.is_square()) throw DimensionError("Cartan matrix must be square");
    const auto inv = cartan.inverse();
    if (!inv) throw SingularMatrixError("Cartan matrix is singular");
    return cartan.transpose() * (*inv) * Rational(-1);
}

CoxeterReport coxeter_report(const Fan& fan) {
    require_valid(fan);
    const ChowRing ring = ChowRing::build(fan);

    CoxeterReport report;
    report.name = fan.name;
    report.n = ring.variety_dim();
    report.m = ring.total_dim();
    report.eigenvalue = coxeter_sign(report.n);
    report.coxeter = coxeter_matrix(ring);
    report.polynomial = coxeter_polynomial(ring);
    report.jordan = full_jordan_type(report.coxeter, {report.eigenvalue});
    report.betti_numbers = betti(fan);

    const ChowClass k = ring.canonical_class();
    report.lefschetz_detail = lefschetz_check(ring, k);
    report.lefschetz_canonical = report.lefschetz_detail.ok;
    report.lefschetz_anticanonical = lefschetz_check(ring, k * Rational(-1)).ok;

    if (report.lefschetz_canonical) {
        report.predicted = predicted_jordan_from_betti(report.betti_numbers);
        report.cone_count_route = jordan_blocks_from_cone_counts(cone_counts(fan));
        bool match = report.jordan == *report.predicted && report.jordan == *report.cone_count_route;
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
