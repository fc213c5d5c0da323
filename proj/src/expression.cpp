#include "symprod/expression.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "symprod/errors.hpp"

namespace symprod {

namespace {

struct RawFactor {
    std::string id;
    int point = 0;  // 0-based
    std::size_t position = 0;
};

class TermParser {
public:
    TermParser(std::string_view text, const AlgebraPtr& algebra, int n) : text_(text), algebra_(algebra), n_(n) {}

    RingElement parse() {
        RingElement out(algebra_, n_);
        skip_space();
        if (at_end()) throw ExpressionError("empty expression", pos_);
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        while (true) {
            parse_term(out, negative);
            skip_space();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') throw ExpressionError("expected '+' or '-' between terms", pos_);
            negative = peek() == '-';
            ++pos_;
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    static bool is_id_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
    }

    std::string read_word() {
        std::size_t start = pos_;
        while (!at_end() && (is_id_char(peek()) || peek() == '/')) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void parse_term(RingElement& out, bool negative) {
        skip_space();
        Scalar coeff = 1;
        std::vector<RawFactor> factors;

        std::size_t word_start = pos_;
        std::string word = read_word();
        if (word.empty()) throw ExpressionError("expected a coefficient or a factor", word_start);
        skip_space();
        if (!at_end() && peek() == '*') {
            try {
                coeff = parse_scalar(word);
            } catch (const ParseError&) {
                throw ExpressionError("invalid coefficient '" + word + "'", word_start);
            }
            ++pos_;
            skip_space();
            word_start = pos_;
            word = read_word();
        }
        while (true) {
            factors.push_back(finish_factor(word, word_start));
            skip_space();
            if (text_.substr(pos_, 3) == "(x)") {
                pos_ += 3;
                skip_space();
                word_start = pos_;
                word = read_word();
                continue;
            }
            break;
        }
        if (at_end() || peek() != ';') throw ExpressionError("expected ';' before the permutation", pos_);
        ++pos_;
        std::size_t perm_start = pos_;
        while (!at_end() && peek() != '+' && peek() != '-') ++pos_;
        Permutation sigma;
        try {
            sigma = Permutation::parse(text_.substr(perm_start, pos_ - perm_start), n_);
        } catch (const ExpressionError& e) {
            throw ExpressionError(e.what(), perm_start + e.position());
        }
        if (negative) coeff = -coeff;
        add_term(out, sigma, factors, coeff);
    }

    RawFactor finish_factor(const std::string& word, std::size_t start) {
        if (word.empty() || word.find('/') != std::string::npos) {
            throw ExpressionError("expected a basis id", start);
        }
        if (at_end() || peek() != '@') throw ExpressionError("expected '@' after basis id '" + word + "'", pos_);
        ++pos_;
        std::size_t point_start = pos_;
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000) throw ExpressionError("point number too large", point_start);
            ++pos_;
        }
        if (pos_ == point_start) throw ExpressionError("expected a point number after '@'", pos_);
        if (value < 1 || value > n_) {
            throw ExpressionError("point " + std::to_string(value) + " outside 1.." + std::to_string(n_), point_start);
        }
        return {word, static_cast<int>(value - 1), start};
    }

    void add_term(RingElement& out, const Permutation& sigma, const std::vector<RawFactor>& factors,
                  const Scalar& coeff) {
        OrbitPartition partition = orbits(sigma);
        const std::size_t m = partition.block_count();
        std::vector<int> slot_of_block(m, -1);
        FactorKey key(m);
        std::vector<int> degrees(factors.size());
        std::vector<std::size_t> order(m);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            std::size_t block = partition.block_of(factors[i].point);
            if (slot_of_block[block] >= 0) {
                throw ExpressionError("block of point " + std::to_string(factors[i].point + 1) + " named twice",
                                      factors[i].position);
            }
            slot_of_block[block] = static_cast<int>(i);
            try {
                key[block] = algebra_->index_of(factors[i].id);
            } catch (const UnknownBasisId&) {
                throw ExpressionError("unknown basis id '" + factors[i].id + "'", factors[i].position);
            }
            degrees[i] = algebra_->degree(key[block]);
        }
        for (std::size_t b = 0; b < m; ++b) {
            if (slot_of_block[b] < 0) {
                throw ExpressionError("no factor for the block containing point " +
                                          std::to_string(partition.block(b).front() + 1),
                                      pos_);
            }
            order[b] = static_cast<std::size_t>(slot_of_block[b]);
        }
        // Factors written out of canonical order are sorted with their Koszul sign.
        Scalar c = koszul_sign(degrees, order) < 0 ? Scalar(-coeff) : coeff;
        out.add(sigma, key, c);
    }

    std::string_view text_;
    const AlgebraPtr& algebra_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_ring_element(std::string_view text, const AlgebraPtr& algebra, int n) {
    if (n < 1) throw ExpressionError("n must be positive", 0);
    return TermParser(text, algebra, n).parse();
}

std::string format_ring_element(const RingElement& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [sigma, tensor] : a.sectors()) {
        const std::string perm = sigma.to_string();
        for (const auto& [key, coeff] : tensor.terms()) {
            Scalar magnitude = abs(coeff);
            if (first) {
                if (sgn(coeff) < 0) os << '-';
            } else {
                os << (sgn(coeff) < 0 ? " - " : " + ");
            }
            first = false;
            os << to_string(magnitude) << '*';
            for (std::size_t b = 0; b < key.size(); ++b) {
                if (b) os << " (x) ";
                os << a.algebra().id(key[b]) << '@' << tensor.partition().block(b).front() + 1;
            }
            os << " ; " << perm;
        }
    }
    return first ? "0" : os.str();
}

}  // namespace symprod
