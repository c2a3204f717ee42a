#include "coxkit/jtensor.hpp"

#include <sstream>

#include "coxkit/matrix.hpp"

namespace coxkit {

JordanSum box_pair(const JordanFactor& a, const JordanFactor& b) {
    if (a.size == 0 || b.size == 0) throw std::invalid_argument("Jordan factor of size 0");
    JordanFactor lo = a, hi = b;
    if (lo.size > hi.size) std::swap(lo, hi);
    const std::size_t s = lo.size, t = hi.size;

    JordanSum out;
    if (lo.eigenvalue == 0 && hi.eigenvalue == 0) {
        out.add(0, s, t - s + 1);
        for (std::size_t i = 1; i + 2 <= 2 * s; ++i) out.add(0, s - (i + 1) / 2, 1);
    } else if (lo.eigenvalue == 0) {
        out.add(0, s, t);
    } else if (hi.eigenvalue == 0) {
        out.add(0, t, s);
    } else {
        const Rational product = lo.eigenvalue * hi.eigenvalue;
        for (std::size_t i = 1; i <= s; ++i) out.add(product, s + t + 1 - 2 * i, 1);
    }
    return out;
}

JordanSum box_many(const std::vector<JordanFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("box_many needs at least one factor");
    Rational alpha = 1;
    std::size_t n = 0;
    for (const auto& f : factors) {
        if (f.size == 0) throw std::invalid_argument("Jordan factor of size 0");
        if (f.eigenvalue == 0)
            throw ZeroEigenvalueError("box_many needs nonzero eigenvalues; fold box_pair instead");
        alpha *= f.eigenvalue;
        n += f.size - 1;
    }

    // Coefficients of prod_j (1 + x + ... + x^(r_j - 1)).
    std::vector<BigInt> coeffs{1};
    for (const auto& f : factors) {
        std::vector<BigInt> next(coeffs.size() + f.size - 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (std::size_t k = 0; k < f.size; ++k) next[i + k] += coeffs[i];
        coeffs = std::move(next);
    }

    JordanSum out;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const BigInt prev = k == 0 ? BigInt(0) : coeffs[k - 1];
        const BigInt count = coeffs[k] - prev;
        if (count < 0) throw std::logic_error("coefficient sequence is not unimodal");
        if (count > 0) out.add(alpha, n + 1 - 2 * k, count.convert_to<std::size_t>());
    }
    return out;
}

JordanSum box_sums(const JordanSum& a, const JordanSum& b) {
    JordanSum out;
    for (const auto& ba : a.blocks())
        for (const auto& bb : b.blocks()) {
            const JordanSum piece = box_pair({ba.eigenvalue, ba.size}, {bb.eigenvalue, bb.size});
            for (const auto& block : piece.blocks())
                out.add(block.eigenvalue, block.size,
                        block.multiplicity * ba.multiplicity * bb.multiplicity);
        }
    return out;
}

JordanSum brute_force_box(const std::vector<JordanFactor>& factors, std::size_t dimension_cap) {
    if (factors.empty()) throw std::invalid_argument("brute_force_box needs at least one factor");
    std::size_t dim = 1;
    Rational product_eigenvalue = 1;
    for (const auto& f : factors) {
        if (f.size == 0) throw std::invalid_argument("Jordan factor of size 0");
        if (dim > dimension_cap / f.size)
            throw DimensionCapError("Kronecker dimension exceeds the cap of " +
                                    std::to_string(dimension_cap));
        dim *= f.size;
        product_eigenvalue *= f.eigenvalue;
    }

    RationalMatrix m = RationalMatrix::jordan_block(factors[0].eigenvalue, factors[0].size);
    for (std::size_t i = 1; i < factors.size(); ++i)
        m = kron(m, RationalMatrix::jordan_block(factors[i].eigenvalue, factors[i].size));

    return full_jordan_type(m, {product_eigenvalue, Rational(0)});
}

JordanType product_coxeter(const JordanType& jx, std::size_t nx,
                           const JordanType& jy, std::size_t ny) {
    const Rational mu_x = nx % 2 == 1 ? 1 : -1;
    const Rational mu_y = ny % 2 == 1 ? 1 : -1;
    Rational found;
    if (!jx.has_single_eigenvalue(&found) || found != mu_x)
        throw EigenvalueMismatchError("first factor type must have the single eigenvalue " +
                                      to_string(mu_x));
    if (!jy.has_single_eigenvalue(&found) || found != mu_y)
        throw EigenvalueMismatchError("second factor type must have the single eigenvalue " +
                                      to_string(mu_y));
    return box_sums(jx, jy).with_eigenvalue(-(mu_x * mu_y));
}

std::vector<JordanFactor> parse_jordan_factors(const std::string& text) {
    std::vector<JordanFactor> out;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) {
        if (token.size() < 6 || token.substr(0, 2) != "J(" || token.back() != ')')
            throw std::invalid_argument("expected J(eigenvalue,size), got '" + token + "'");
        const std::string inner = token.substr(2, token.size() - 3);
        const auto comma = inner.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("expected J(eigenvalue,size), got '" + token + "'");
        JordanFactor f;
        f.eigenvalue = parse_rational(inner.substr(0, comma));
        const std::string size_text = inner.substr(comma + 1);
        std::size_t pos = 0;
        long long size = 0;
        try {
            size = std::stoll(size_text, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad block size in '" + token + "'");
        }
        if (pos != size_text.size() || size <= 0)
            throw std::invalid_argument("bad block size in '" + token + "'");
        f.size = static_cast<std::size_t>(size);
        out.push_back(f);
    }
    if (out.empty()) throw std::invalid_argument("empty Jordan block list");
    return out;
}

}  // namespace coxkit
