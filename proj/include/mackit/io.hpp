#ifndef MACKIT_IO_HPP
#define MACKIT_IO_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "mackit/common.hpp"
#include "mackit/simplicial.hpp"
#include "mackit/word_complex.hpp"

namespace mackit {

// ---------------------------------------------------------------------------
// Plain-text complex format:
//   first line        m=<int>
//   following lines   facet: i1 i2 ...     (or)   missing: i1 i2 ...
// exactly one of the two styles per file; '#' comments and blank lines are
// ignored. Errors carry line numbers.
// ---------------------------------------------------------------------------

inline SimplicialComplex parse_complex(std::istream& in,
                                       const std::string& source = "<input>") {
    auto fail = [&](int line, const std::string& msg) {
        throw parse_error(source + ":" + std::to_string(line) + ": " + msg);
    };
    std::string raw;
    int lineno = 0;
    int m = -1;
    int style = 0;  // 0 unknown, 1 facet, 2 missing
    std::vector<std::vector<int>> sets;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);

        if (m < 0) {
            if (line.rfind("m=", 0) != 0) fail(lineno, "expected 'm=<count>'");
            try {
                size_t used = 0;
                m = std::stoi(line.substr(2), &used);
                if (used != line.size() - 2) fail(lineno, "trailing characters after m");
            } catch (const std::logic_error&) {
                fail(lineno, "invalid vertex count");
            }
            if (m < 0) fail(lineno, "vertex count must be nonnegative");
            continue;
        }
        int kind = 0;
        std::string rest;
        if (line.rfind("facet:", 0) == 0) {
            kind = 1;
            rest = line.substr(6);
        } else if (line.rfind("missing:", 0) == 0) {
            kind = 2;
            rest = line.substr(8);
        } else {
            fail(lineno, "expected 'facet:' or 'missing:'");
        }
        if (style == 0) style = kind;
        if (style != kind) fail(lineno, "cannot mix facet and missing lines");
        std::istringstream ss(rest);
        std::vector<int> labels;
        std::string tok;
        while (ss >> tok) {
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                labels.push_back(v);
            } catch (const std::logic_error&) {
                fail(lineno, "invalid vertex label '" + tok + "'");
            }
        }
        for (int v : labels)
            if (v < 1 || v > m)
                fail(lineno, "vertex label " + std::to_string(v) + " out of [1," +
                                 std::to_string(m) + "]");
        if (kind == 2 && labels.empty()) fail(lineno, "missing face cannot be empty");
        sets.push_back(std::move(labels));
    }
    if (m < 0) throw parse_error(source + ": empty input, expected 'm=<count>'");
    if (style == 2) return SimplicialComplex::from_missing_faces(m, std::move(sets));
    return SimplicialComplex::from_facets(m, std::move(sets));
}

inline SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    return parse_complex(in, path);
}

inline std::string render_complex_facets(const SimplicialComplex& K,
                                         const std::string& header = "") {
    std::ostringstream out;
    if (!header.empty()) out << header;
    out << "m=" << K.vertex_count() << "\n";
    for (const auto& f : K.facets()) {
        out << "facet:";
        for (int v : f) out << " " << v;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Word expressions: integer combinations of words written as
//   [coeff] [*] u{1,2} t{3}   |   e{...} for ε-parts   |   the name Gamma.
// ---------------------------------------------------------------------------

class WordExprParser {
  public:
    WordExprParser(std::string text, int m, CellChain gamma)
        : text_(std::move(text)), m_(m), gamma_(std::move(gamma)) {}

    CellChain parse(WordFlavor expected) {
        pos_ = 0;
        CellChain out(expected);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) {
                if (first) fail("empty expression");
                break;
            }
            long long sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            out += sign * parse_term(expected);
            first = false;
        }
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("word expression, offset " + std::to_string(pos_) + ": " +
                          msg);
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    CellChain parse_term(WordFlavor expected) {
        skip_ws();
        long long coeff = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(peek())))
                coeff = coeff * 10 + (text_[pos_++] - '0');
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        if (text_.compare(pos_, 5, "Gamma") == 0) {
            pos_ += 5;
            if (gamma_.zero()) fail("Gamma is not available in this context");
            if (gamma_.flavor() != expected)
                fail("Gamma has the wrong flavor for this position");
            return coeff * gamma_;
        }
        vset sigma = 0, tau = 0;
        bool saw_letter = false;
        bool chain_letter = false, cochain_letter = false;
        while (pos_ < text_.size() &&
               (peek() == 'u' || peek() == 't' || peek() == 'e' || peek() == 'v')) {
            char letter = text_[pos_++];
            if (letter == 't') cochain_letter = true;
            if (letter == 'e') chain_letter = true;
            vset* target = (letter == 'u' || letter == 'v') ? &sigma : &tau;
            skip_ws();
            if (peek() != '{') fail("expected '{' after letter");
            ++pos_;
            while (true) {
                skip_ws();
                if (peek() == '}') {
                    ++pos_;
                    break;
                }
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected a vertex label");
                int v = 0;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(peek())))
                    v = v * 10 + (text_[pos_++] - '0');
                if (v < 1 || v > m_) fail("vertex label out of range");
                if (vs::contains(*target | (target == &sigma ? tau : sigma), v))
                    fail("vertex repeated within the word");
                *target = vs::add(*target, v);
                skip_ws();
                if (peek() == ',') ++pos_;
            }
            saw_letter = true;
            skip_ws();
        }
        if (!saw_letter) {
            if (peek() == '1') {  // the void word
                ++pos_;
            } else {
                fail("expected a word");
            }
        }
        if (chain_letter && cochain_letter) fail("cannot mix 'e' and 't' in one word");
        if (chain_letter && expected == WordFlavor::cochain)
            fail("chain word in a cochain position");
        if (cochain_letter && expected == WordFlavor::chain)
            fail("cochain word in a chain position");
        CellChain out(expected);
        out.add(expected == WordFlavor::chain ? CellWord::chain_word(sigma, tau)
                                              : CellWord::cochain_word(sigma, tau),
                coeff);
        return out;
    }

    std::string text_;
    int m_ = 0;
    CellChain gamma_;
    size_t pos_ = 0;
};

inline CellChain parse_word_expression(const std::string& text, int m,
                                       WordFlavor expected,
                                       CellChain gamma = CellChain()) {
    return WordExprParser(text, m, std::move(gamma)).parse(expected);
}

}  // namespace mackit

#endif
