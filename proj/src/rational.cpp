#include "riordan/rational.hpp"

#include <ostream>

#include "riordan/errors.hpp"

namespace riordan {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::DoublePole: return "DoublePole";
    case Errc::InexactWindow: return "InexactWindow";
    case Errc::NonformalComposition: return "NonformalComposition";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NonSquareConstantTerm: return "NonSquareConstantTerm";
    case Errc::OutOfWindow: return "OutOfWindow";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::LaurentRealization: return "LaurentRealization";
    case Errc::MismatchedF: return "MismatchedF";
    case Errc::NotProper: return "NotProper";
    case Errc::ResidualPole: return "ResidualPole";
    case Errc::UnknownTail: return "UnknownTail";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::NotPseudoInvolution: return "NotPseudoInvolution";
    case Errc::NotAppellForm: return "NotAppellForm";
    case Errc::NotMinusOneAppell: return "NotMinusOneAppell";
    case Errc::NonpositiveDiagonal: return "NonpositiveDiagonal";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownName: return "UnknownName";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw Error(Errc::InvalidArgument, "zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error(Errc::InvalidArgument, "division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s, bool allow_sign) -> mpz_class {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) {
            throw Error(Errc::InvalidArgument, "malformed rational '" + std::string(s) + "'");
        }
        for (std::size_t k = i; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') {
                throw Error(Errc::InvalidArgument, "malformed rational '" + std::string(s) + "'");
            }
        }
        std::string digits(s.substr(s[0] == '+' ? 1 : 0));
        return mpz_class(digits, 10);
    };
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, true));
    }
    return Rational(parse_int(trim(text.substr(0, slash)), true),
                    parse_int(trim(text.substr(slash + 1)), false));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_.get_str(); }

bool rational_sqrt(const Rational& r, Rational& out) {
    if (r.sign() < 0) return false;
    const mpz_class num = r.numerator();
    const mpz_class den = r.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return false;
    }
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rational(sn, sd);
    return true;
}

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

} // namespace riordan
