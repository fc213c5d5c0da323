#include "symprod/scalar.hpp"

#include <cctype>

#include "symprod/errors.hpp"

namespace symprod {

Scalar make_scalar(long numerator, long denominator) {
    Scalar value(numerator, denominator);
    value.canonicalize();
    return value;
}

namespace {

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view numerator = body;
    std::string_view denominator = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        numerator = body.substr(0, slash);
        denominator = body.substr(slash + 1);
    }
    if (!all_digits(numerator) || !all_digits(denominator)) {
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    }
    Integer num(std::string(numerator), 10);
    Integer den(std::string(denominator), 10);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Scalar value(negative ? Integer(-num) : num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value) {
    Scalar copy = value;
    copy.canonicalize();
    return copy.get_str();
}

}  // namespace symprod
