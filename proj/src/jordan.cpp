#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "dualpairs/gl_pair.hpp"

namespace dualpairs::gl {

namespace {

// Block sizes from a rank sequence r_0 = dim, r_k = rank(M^k), each kernel
// dimension step counted `unit` times (2 for complex eigenvalues).
std::vector<Index> sizes_from_ranks(const std::vector<Index>& ranks, Index unit) {
    std::vector<Index> sizes;
    for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
        const Index at_least_k = (ranks[k - 1] - ranks[k]) / unit;
        const Index at_least_k1 = (ranks[k] - ranks[k + 1]) / unit;
        for (Index c = 0; c < at_least_k - at_least_k1; ++c) sizes.push_back(static_cast<Index>(k));
    }
    return sizes;
}

template <class Mat, class RankFn>
std::vector<Index> rank_sequence(const Mat& m, Index max_power, RankFn rank) {
    std::vector<Index> ranks{m.rows()};
    Mat power = Mat::identity(m.rows());
    for (Index k = 1; k <= max_power + 1; ++k) {
        power = power * m;
        ranks.push_back(rank(power, k));
        if (ranks[static_cast<std::size_t>(k)] == ranks[static_cast<std::size_t>(k - 1)]) {
            ranks.resize(static_cast<std::size_t>(max_power + 2), ranks.back());
            break;
        }
    }
    return ranks;
}

Rational eval(const std::vector<Rational>& c, const Rational& x) {
    Rational s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
}

// Divide by (t - root) once; coefficients are lowest degree first.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& root) {
    std::vector<Rational> out(c.size() - 1);
    Rational carry;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        carry = c[i + 1] + carry * root;
        out[i] = carry;
    }
    return out;
}

struct Eigenvalue {
    cplx value;
    Index multiplicity;  // algebraic; complex values count the upper member only
};

// Integer spectrum found exactly, or nothing.
std::optional<std::vector<Eigenvalue>> exact_integer_spectrum(const RationalMat& a, const RealMat& af) {
    std::vector<Rational> poly;
    try {
        poly = char_poly(a);
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
    std::vector<std::int64_t> candidates{0};
    for (const auto& l : eigenvalues(af)) {
        const double r = std::round(l.real());
        if (std::abs(r) < 1e15) candidates.push_back(static_cast<std::int64_t>(r));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Eigenvalue> spectrum;
    Index found = 0;
    try {
        for (const std::int64_t cand : candidates) {
            Index mult = 0;
            while (poly.size() > 1 && eval(poly, Rational(cand)) == Rational{}) {
                poly = deflate(poly, Rational(cand));
                ++mult;
            }
            if (mult > 0) {
                spectrum.push_back({cplx(static_cast<double>(cand), 0.0), mult});
                found += mult;
            }
        }
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
    if (found != a.rows()) return std::nullopt;
    return spectrum;
}

std::vector<Eigenvalue> clustered_spectrum(const RealMat& a, double tol) {
    std::vector<cplx> ev = eigenvalues(a);
    std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    struct Cluster {
        cplx seed;
        cplx sum;
        Index count;
    };
    std::vector<Cluster> clusters;
    for (const auto& l : ev) {
        bool placed = false;
        for (auto& c : clusters) {
            if (std::abs(l - c.seed) <= tol) {
                c.sum += l;
                ++c.count;
                placed = true;
                break;
            }
        }
        if (!placed) clusters.push_back({l, l, 1});
    }
    std::vector<Eigenvalue> centers;
    for (const auto& c : clusters) centers.push_back({c.sum / static_cast<double>(c.count), c.count});
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (std::abs(centers[i].value - centers[j].value) < 2.0 * tol) {
                throw PreconditionError("jordan_structure: eigenvalue clusters closer than 2*tol; increase or decrease tol");
            }

    std::vector<Eigenvalue> out;
    for (const auto& c : centers) {
        if (std::abs(c.value) <= tol) {
            out.push_back({cplx(0.0, 0.0), c.multiplicity});
        } else if (std::abs(c.value.imag()) <= tol) {
            out.push_back({cplx(c.value.real(), 0.0), c.multiplicity});
        } else if (c.value.imag() > 0.0) {
            out.push_back(c);
        }
    }
    // Clusters snapped to the same value (zero, or a real axis point) are merged.
    std::vector<Eigenvalue> result;
    for (const auto& e : out) {
        bool found = false;
        for (auto& r : result)
            if (r.value == e.value) {
                r.multiplicity += e.multiplicity;
                found = true;
            }
        if (!found) result.push_back(e);
    }
    return result;
}

}  // namespace

JordanData jordan_structure(const RealMat& a, Side side, Index n, Index m, double tol) {
    a.require_square("jordan_structure");
    if (!(tol > 0.0)) throw std::invalid_argument("jordan_structure: tol must be positive");
    const Index dim = a.rows();
    if (side == Side::left && dim != n) throw DimensionError("jordan_structure: left-side input must be n x n");
    if (side == Side::right && dim != m) throw DimensionError("jordan_structure: right-side input must be m x m");

    std::optional<RationalMat> exact;
    try {
        RationalMat r = to_rational(a);
        if (std::all_of(r.data().begin(), r.data().end(), [](const Rational& x) { return x.is_integer(); })) {
            exact = std::move(r);
        }
    } catch (const InputError&) {
    }

    std::optional<std::vector<Eigenvalue>> spectrum;
    if (exact) spectrum = exact_integer_spectrum(*exact, a);
    const bool exact_path = spectrum.has_value();
    if (!spectrum) spectrum = clustered_spectrum(a, tol);

    // A singular value of the k-th power counts when above (tol * b)^k and
    // above the rounding floor of b^k, with b = ‖A‖ + |lambda| (squared for
    // quadratic factors). Powers stop once the rank stabilises.
    const auto a_sv = singular_values(a);
    const double a_norm = a_sv.empty() ? 0.0 : a_sv.front();
    const double floor_factor = 100.0 * static_cast<double>(std::max<Index>(dim, 1)) * std::numeric_limits<double>::epsilon();
    auto float_rank = [&](const RealMat& x, Index k, double base) {
        const auto sv = singular_values(x);
        const double b = std::max(1.0, base);
        const double kk = static_cast<double>(k);
        const double thresh = std::max(std::pow(tol * b, kk), floor_factor * std::pow(b, kk));
        Index r = 0;
        for (const double s : sv) r += s > thresh ? 1 : 0;
        return r;
    };

    JordanData jd;
    jd.n = n;
    jd.m = m;
    std::vector<Index> zero_blocks;
    Index accounted = 0;
    for (const auto& ev : *spectrum) {
        const bool is_complex = ev.value.imag() != 0.0;
        std::vector<Index> ranks;
        if (exact_path) {
            RationalMat shifted = *exact;
            const Rational lam(static_cast<std::int64_t>(ev.value.real()));
            for (Index i = 0; i < dim; ++i) shifted(i, i) -= lam;
            ranks = rank_sequence(shifted, ev.multiplicity, [](const RationalMat& x, Index) { return exact_rank(x); });
        } else if (ev.value == cplx(0.0, 0.0) && exact) {
            ranks = rank_sequence(*exact, ev.multiplicity, [](const RationalMat& x, Index) { return exact_rank(x); });
        } else if (!is_complex) {
            RealMat shifted = a;
            for (Index i = 0; i < dim; ++i) shifted(i, i) -= ev.value.real();
            const double base = a_norm + std::abs(ev.value);
            ranks = rank_sequence(shifted, ev.multiplicity, [&](const RealMat& x, Index k) { return float_rank(x, k, base); });
        } else {
            // Real quadratic factor (A - lambda)(A - conj lambda).
            const RealMat quad = a * a - a * (2.0 * ev.value.real()) + RealMat::identity(dim) * std::norm(ev.value);
            const double base = (a_norm + std::abs(ev.value)) * (a_norm + std::abs(ev.value));
            ranks = rank_sequence(quad, ev.multiplicity, [&](const RealMat& x, Index k) { return float_rank(x, k, base); });
        }
        const auto sizes = sizes_from_ranks(ranks, is_complex ? 2 : 1);
        Index total = 0;
        for (const Index s : sizes) total += s;
        if (total != ev.multiplicity) {
            throw PreconditionError("jordan_structure: block sizes do not account for the eigenvalue multiplicity");
        }
        accounted += total * (is_complex ? 2 : 1);
        if (ev.value == cplx(0.0, 0.0)) {
            zero_blocks = sizes;
        } else {
            for (const Index s : sizes) jd.blocks.push_back({ev.value, is_complex ? 2 * s : s});
        }
    }
    if (accounted != dim) throw PreconditionError("jordan_structure: spectrum does not account for the full dimension");

    for (const Index s : zero_blocks) {
        if (side == Side::right) {
            jd.nilpotent.push_back(s + 1);
        } else if (s >= 2) {
            jd.nilpotent.push_back(s);
        }
    }
    jd = jd.canonical();
    jd.validate();
    return jd;
}

}  // namespace dualpairs::gl
