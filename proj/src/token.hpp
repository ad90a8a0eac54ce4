#ifndef VKR_TOKEN_HPP
#define VKR_TOKEN_HPP

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace vkr {

// Letters of the extended Nielsen alphabet. R(i,j): x_i -> x_i x_j,
// L(i,j): x_i -> x_j x_i, W(i,j) = L(i,j) L(j,i)^-1 R(i,j), stored with i<j.
enum class Kind : uint8_t { R = 0, L = 1, W = 2 };

struct Token {
    Kind kind = Kind::R;
    int i = 1;
    int j = 2;
    int exp = 1;  // +1 or -1

    Token() = default;
    Token(Kind k, int i_, int j_, int e = 1);

    Token inverse() const { return Token(kind, i, j, -exp); }

    // Total order used for canonical forms: (kind, i, j, exp).
    auto operator<=>(const Token&) const = default;
};

inline Token R(int i, int j, int e = 1) { return Token(Kind::R, i, j, e); }
inline Token L(int i, int j, int e = 1) { return Token(Kind::L, i, j, e); }
Token W(int i, int j, int e = 1);  // normalizes i>j to W(j,i)^-1

using Word = std::vector<Token>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word pow(const Word& w, int k);

std::string to_string(const Token& t);
std::string to_string(const Word& w);  // whitespace separated; "1" for empty
Token parse_token(const std::string& s);
Word parse_word(const std::string& s);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vkr

#endif
